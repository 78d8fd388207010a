//! Integer-level polynomial machinery shared by the rational-function
//! kernels: dense polynomials in one or two auxiliary variables with
//! coefficients in Z[s, u]. Gcds run here as primitive pseudo-remainder
//! sequences; contents are units of the coefficient field and are
//! discarded. Running a remainder sequence directly over the fraction
//! field would square coefficient degrees at every step.

use crate::scalar::BivarPoly;

/// Dense polynomial in one variable over Z[s, u]; index = exponent.
pub type IPoly = Vec<BivarPoly>;

pub fn trim(p: &mut IPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn is_zero(p: &IPoly) -> bool {
    p.is_empty()
}

pub fn mul(a: &IPoly, b: &IPoly) -> IPoly {
    if is_zero(a) || is_zero(b) {
        return Vec::new();
    }
    let mut out = vec![BivarPoly::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if !cb.is_zero() {
                out[i + j] = out[i + j].add(&ca.mul(cb));
            }
        }
    }
    trim(&mut out);
    out
}

pub fn sub(a: &IPoly, b: &IPoly) -> IPoly {
    let mut out = a.clone();
    if out.len() < b.len() {
        out.resize(b.len(), BivarPoly::zero());
    }
    for (i, c) in b.iter().enumerate() {
        out[i] = out[i].sub(c);
    }
    trim(&mut out);
    out
}

pub fn content(p: &IPoly) -> BivarPoly {
    let mut g = BivarPoly::zero();
    for c in p {
        if !c.is_zero() {
            g = BivarPoly::gcd(&g, c);
        }
    }
    g
}

pub fn primitive(p: &IPoly) -> IPoly {
    let c = content(p);
    if c.is_zero() || c.is_one() {
        return p.clone();
    }
    p.iter()
        .map(|x| {
            if x.is_zero() {
                BivarPoly::zero()
            } else {
                x.div_exact(&c)
            }
        })
        .collect()
}

/// Pseudo-remainder of a by b.
fn prem(a: &IPoly, b: &IPoly) -> IPoly {
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut rem = a.clone();
    while !rem.is_empty() && rem.len() - 1 >= db {
        let dr = rem.len() - 1;
        let lr = rem[dr].clone();
        for c in rem.iter_mut() {
            *c = c.mul(&lb);
        }
        let shift = dr - db;
        for (i, c) in b.iter().enumerate() {
            rem[shift + i] = rem[shift + i].sub(&lr.mul(c));
        }
        trim(&mut rem);
    }
    rem
}

/// Primitive-PRS gcd; the result is primitive over Z[s, u] and defined up
/// to a unit of the coefficient field.
pub fn gcd(a: IPoly, b: IPoly) -> IPoly {
    if is_zero(&a) {
        return b;
    }
    if is_zero(&b) {
        return a;
    }
    let mut f = primitive(&a);
    let mut g = primitive(&b);
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_empty() {
        let r = prem(&f, &g);
        f = g;
        g = if r.is_empty() { r } else { primitive(&r) };
    }
    f
}

/// Exact long division with exact coefficient divisions.
pub fn div_exact(a: &IPoly, b: &IPoly) -> IPoly {
    assert!(!is_zero(b), "division by zero polynomial");
    if is_zero(a) {
        return Vec::new();
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut rem = a.clone();
    let mut quot: IPoly = vec![BivarPoly::zero(); rem.len() - db];
    while !rem.is_empty() && rem.len() - 1 >= db {
        let dr = rem.len() - 1;
        let q = rem[dr].div_exact(lb);
        let shift = dr - db;
        for (i, c) in b.iter().enumerate() {
            rem[shift + i] = rem[shift + i].sub(&q.mul(c));
        }
        quot[shift] = q;
        trim(&mut rem);
    }
    debug_assert!(rem.is_empty(), "inexact polynomial division");
    trim(&mut quot);
    quot
}

/// Dense polynomial in two variables over Z[s, u]: outer index is the
/// exponent of the second variable, entries are polynomials in the first.
pub type I2Poly = Vec<IPoly>;

pub fn trim2(p: &mut I2Poly) {
    for q in p.iter_mut() {
        trim(q);
    }
    while p.last().is_some_and(|q| q.is_empty()) {
        p.pop();
    }
}

pub fn is_zero2(p: &I2Poly) -> bool {
    p.is_empty()
}

fn map2(p: &I2Poly, f: impl Fn(&IPoly) -> IPoly) -> I2Poly {
    let mut out: I2Poly = p.iter().map(|c| f(c)).collect();
    trim2(&mut out);
    out
}

/// Content in Z[s, u][v1] of a polynomial in (Z[s, u][v1])[v2].
pub fn content2(p: &I2Poly) -> IPoly {
    let mut g: IPoly = Vec::new();
    for c in p {
        if !is_zero(c) {
            g = gcd(g, c.clone());
        }
    }
    g
}

pub fn primitive2(p: &I2Poly) -> I2Poly {
    let c = content2(p);
    if is_zero(&c) || (c.len() == 1 && c[0].is_one()) {
        return p.clone();
    }
    map2(p, |x| {
        if is_zero(x) {
            Vec::new()
        } else {
            div_exact(x, &c)
        }
    })
}

fn prem2(a: &I2Poly, b: &I2Poly) -> I2Poly {
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut rem = a.clone();
    while !is_zero2(&rem) && rem.len() - 1 >= db {
        let dr = rem.len() - 1;
        let lr = rem[dr].clone();
        for c in rem.iter_mut() {
            *c = mul(c, &lb);
        }
        let shift = dr - db;
        for (i, c) in b.iter().enumerate() {
            rem[shift + i] = sub(&rem[shift + i], &mul(&lr, c));
        }
        trim2(&mut rem);
    }
    rem
}

/// Primitive-PRS gcd in the two-variable case; result defined up to a
/// unit multiple from Z[s, u][v1].
pub fn gcd2(a: I2Poly, b: I2Poly) -> I2Poly {
    if is_zero2(&a) {
        return b;
    }
    if is_zero2(&b) {
        return a;
    }
    let ca = content2(&a);
    let cb = content2(&b);
    let c = gcd(ca.clone(), cb.clone());
    let mut f = map2(&a, |x| {
        if is_zero(x) {
            Vec::new()
        } else {
            div_exact(x, &ca)
        }
    });
    let mut g = map2(&b, |x| {
        if is_zero(x) {
            Vec::new()
        } else {
            div_exact(x, &cb)
        }
    });
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    while !is_zero2(&g) {
        let r = prem2(&f, &g);
        f = g;
        g = if is_zero2(&r) { r } else { primitive2(&r) };
    }
    let ff = content2(&f);
    let pp = map2(&f, |x| {
        if is_zero(x) {
            Vec::new()
        } else {
            div_exact(x, &ff)
        }
    });
    map2(&pp, |x| mul(x, &c))
}

/// Exact long division in the two-variable case.
pub fn div_exact2(a: &I2Poly, b: &I2Poly) -> I2Poly {
    assert!(!is_zero2(b), "division by zero polynomial");
    if is_zero2(a) {
        return Vec::new();
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut rem = a.clone();
    let mut quot: I2Poly = vec![Vec::new(); rem.len() - db];
    while !is_zero2(&rem) && rem.len() - 1 >= db {
        let dr = rem.len() - 1;
        let q = ipoly_div_exact_in_field(&rem[dr], lb);
        let shift = dr - db;
        for (i, c) in b.iter().enumerate() {
            rem[shift + i] = sub(&rem[shift + i], &mul(&q, c));
        }
        quot[shift] = q;
        trim2(&mut rem);
    }
    debug_assert!(is_zero2(&rem), "inexact polynomial division");
    trim2(&mut quot);
    quot
}

/// Exact division of one-variable polynomials used inside div_exact2;
/// identical to div_exact but kept separate so the assertion message
/// points at the two-variable caller.
fn ipoly_div_exact_in_field(a: &IPoly, b: &IPoly) -> IPoly {
    div_exact(a, b)
}
