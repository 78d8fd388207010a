//! Exact arithmetic in the field Q(s, u) of rational functions in
//! s = q^(1/2) and u = t^(1/2), with integer-coefficient Laurent
//! polynomials as numerators and denominators.
//!
//! Every quantity in the library (operator coefficients, torus
//! coefficients, skein coefficients) ultimately lives here, so all
//! identity checks reduce to structural equality of canonical forms.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Sparse Laurent polynomial in s, u with arbitrary-precision integer
/// coefficients. Keys are exponent pairs (i, j) for the monomial s^i u^j;
/// exponents may be negative. No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BivarPoly {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    pub fn monomial(coeff: BigInt, i: i64, j: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((i, j), coeff);
        }
        Self { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial(BigInt::from(n), 0, 0)
    }

    pub fn from_terms<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = ((i64, i64), BigInt)>,
    {
        let mut p = Self::zero();
        for ((i, j), c) in iter {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(i64, i64), &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, i: i64, j: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((i, j)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &other.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }

    /// Multiply by the monomial s^di u^dj.
    pub fn shifted(&self, di: i64, dj: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i + di, j + dj), c.clone()))
                .collect(),
        }
    }

    /// Minimal exponents over all terms, per variable. None for zero.
    pub fn min_exps(&self) -> Option<(i64, i64)> {
        if self.is_zero() {
            return None;
        }
        let mi = self.terms.keys().map(|&(i, _)| i).min().unwrap();
        let mj = self.terms.keys().map(|&(_, j)| j).min().unwrap();
        Some((mi, mj))
    }

    /// Leading term under graded lex order on (i, j): compare i+j first,
    /// then i. Panics on the zero polynomial.
    fn leading_key(&self) -> (i64, i64) {
        *self
            .terms
            .keys()
            .max_by_key(|&&(i, j)| (i + j, i))
            .expect("leading term of zero polynomial")
    }

    fn leading_coeff(&self) -> &BigInt {
        &self.terms[&self.leading_key()]
    }

    /// Gcd of all integer coefficients (non-negative). Zero for the zero
    /// polynomial.
    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn div_coeffs(&self, d: &BigInt) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&k, c)| {
                    let (q, r) = c.div_rem(d);
                    debug_assert!(r.is_zero());
                    (k, q)
                })
                .collect(),
        }
    }

    /// Evaluate at rational (s, u). Evaluating a negative exponent at 0
    /// is a pole.
    pub fn eval(&self, s: &BigRational, u: &BigRational) -> Result<BigRational, Error> {
        let mut acc = BigRational::zero();
        for (&(i, j), c) in &self.terms {
            acc += BigRational::from(c.clone()) * rat_pow(s, i)? * rat_pow(u, j)?;
        }
        Ok(acc)
    }

    /// Substitute a rational value for s, leaving u symbolic. Returns the
    /// resulting polynomial in u together with a positive integer D such
    /// that the value equals (polynomial)/D.
    fn eval_s(&self, s: &BigRational) -> Result<(BivarPoly, BigInt), Error> {
        let mut by_j: BTreeMap<i64, BigRational> = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            let v = BigRational::from(c.clone()) * rat_pow(s, i)?;
            *by_j.entry(j).or_insert_with(BigRational::zero) += v;
        }
        let mut denom = BigInt::one();
        for v in by_j.values() {
            if !v.is_zero() {
                denom = denom.lcm(v.denom());
            }
        }
        let poly = BivarPoly::from_terms(by_j.into_iter().filter(|(_, v)| !v.is_zero()).map(
            |(j, v)| {
                let c = v.numer() * (&denom / v.denom());
                ((0, j), c)
            },
        ));
        Ok((poly, denom))
    }

    /// Ordinary-polynomial gcd in Z[s, u], including integer content.
    /// Inputs must have non-negative exponents. The result is a true
    /// common divisor of maximal degree; its sign is not normalized
    /// (callers fix signs after dividing).
    pub(crate) fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        let ca = a.content();
        let cb = b.content();
        let c = ca.gcd(&cb);
        let pa = dense::from_sparse(&a.div_coeffs(&ca));
        let pb = dense::from_sparse(&b.div_coeffs(&cb));
        let g = dense::gcd_bivar(pa, pb);
        dense::to_sparse(&g).mul(&Self::monomial(c, 0, 0))
    }

    /// Exact division; panics if `d` does not divide `self`.
    pub(crate) fn div_exact(&self, d: &Self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        if d.is_one() {
            return self.clone();
        }
        let q = dense::div_exact_bivar(dense::from_sparse(self), dense::from_sparse(d));
        dense::to_sparse(&q)
    }
}

fn rat_pow(x: &BigRational, k: i64) -> Result<BigRational, Error> {
    if k == 0 {
        return Ok(BigRational::one());
    }
    if k < 0 && x.is_zero() {
        return Err(Error::PoleAtSpecialization);
    }
    let e = i32::try_from(k).expect("exponent fits in i32");
    Ok(x.pow(e))
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Descending graded-lex order reads most naturally.
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(i, j)| (-(i + j), -i));
        for (idx, key) in keys.iter().enumerate() {
            let c = &self.terms[key];
            let mono = mono_string(*key);
            let abs = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono.is_empty() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}*{}", abs, mono)?;
            }
        }
        Ok(())
    }
}

fn mono_string((i, j): (i64, i64)) -> String {
    let mut parts = Vec::new();
    if i == 1 {
        parts.push("s".to_string());
    } else if i != 0 {
        parts.push(format!("s^{}", i));
    }
    if j == 1 {
        parts.push("u".to_string());
    } else if j != 0 {
        parts.push(format!("u^{}", j));
    }
    parts.join("*")
}

/// Dense recursive representation used only inside gcd and exact division:
/// a polynomial in u whose coefficients are dense polynomials in s.
mod dense {
    use super::BivarPoly;
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Signed, Zero};

    /// Dense univariate polynomial over Z; index = exponent.
    pub type Uni = Vec<BigInt>;
    /// Dense bivariate: outer index = u-exponent, entries are s-polynomials.
    pub type Bi = Vec<Uni>;

    pub fn from_sparse(p: &BivarPoly) -> Bi {
        let mut out: Bi = Vec::new();
        for (&(i, j), c) in p.iter() {
            assert!(i >= 0 && j >= 0, "dense conversion requires ordinary polynomials");
            let (i, j) = (i as usize, j as usize);
            if out.len() <= j {
                out.resize(j + 1, Vec::new());
            }
            if out[j].len() <= i {
                out[j].resize(i + 1, BigInt::zero());
            }
            out[j][i] = c.clone();
        }
        trim_bi(&mut out);
        out
    }

    pub fn to_sparse(p: &Bi) -> BivarPoly {
        BivarPoly::from_terms(p.iter().enumerate().flat_map(|(j, us)| {
            us.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(i, c)| ((i as i64, j as i64), c.clone()))
                .collect::<Vec<_>>()
        }))
    }

    fn trim_uni(p: &mut Uni) {
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
    }

    fn trim_bi(p: &mut Bi) {
        for q in p.iter_mut() {
            trim_uni(q);
        }
        while p.last().is_some_and(|q| q.is_empty()) {
            p.pop();
        }
    }

    fn uni_is_zero(p: &Uni) -> bool {
        p.is_empty()
    }

    fn uni_mul(a: &Uni, b: &Uni) -> Uni {
        if uni_is_zero(a) || uni_is_zero(b) {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if !cb.is_zero() {
                    out[i + j] += ca * cb;
                }
            }
        }
        let mut out = out;
        trim_uni(&mut out);
        out
    }

    fn uni_sub(a: &Uni, b: &Uni) -> Uni {
        let mut out = a.clone();
        if out.len() < b.len() {
            out.resize(b.len(), BigInt::zero());
        }
        for (i, c) in b.iter().enumerate() {
            out[i] -= c;
        }
        trim_uni(&mut out);
        out
    }

    fn uni_content(p: &Uni) -> BigInt {
        let mut g = BigInt::zero();
        for c in p {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn uni_div_int(p: &Uni, d: &BigInt) -> Uni {
        p.iter()
            .map(|c| {
                let (q, r) = c.div_rem(d);
                debug_assert!(r.is_zero());
                q
            })
            .collect()
    }

    /// Exact division of univariate polynomials over Z.
    fn uni_div_exact(a: &Uni, b: &Uni) -> Uni {
        assert!(!uni_is_zero(b), "division by zero polynomial");
        if uni_is_zero(a) {
            return Vec::new();
        }
        let mut rem = a.clone();
        let db = b.len() - 1;
        let lb = &b[db];
        assert!(rem.len() >= b.len(), "exact division underflow");
        let mut quot = vec![BigInt::zero(); rem.len() - db];
        while !uni_is_zero(&rem) && rem.len() - 1 >= db {
            let dr = rem.len() - 1;
            let (q, r) = rem[dr].div_rem(lb);
            debug_assert!(r.is_zero(), "inexact coefficient division");
            let shift = dr - db;
            quot[shift] = q.clone();
            for (i, c) in b.iter().enumerate() {
                rem[shift + i] -= &q * c;
            }
            trim_uni(&mut rem);
        }
        debug_assert!(uni_is_zero(&rem), "inexact polynomial division");
        trim_uni(&mut quot);
        quot
    }

    /// Primitive-PRS gcd of univariate polynomials over Z, positive leading
    /// coefficient, including integer content.
    fn uni_gcd(a: &Uni, b: &Uni) -> Uni {
        if uni_is_zero(a) {
            return uni_abs_leading(b.clone());
        }
        if uni_is_zero(b) {
            return uni_abs_leading(a.clone());
        }
        let ca = uni_content(a);
        let cb = uni_content(b);
        let c = ca.gcd(&cb);
        let mut f = uni_div_int(a, &ca);
        let mut g = uni_div_int(b, &cb);
        while !uni_is_zero(&g) {
            let r = uni_prem(&f, &g);
            f = g;
            g = if uni_is_zero(&r) {
                Vec::new()
            } else {
                let cr = uni_content(&r);
                uni_div_int(&r, &cr)
            };
        }
        let mut out = uni_abs_leading(f);
        out = out.iter().map(|x| x * &c).collect();
        out
    }

    fn uni_abs_leading(mut p: Uni) -> Uni {
        if p.last().is_some_and(|c| c.is_negative()) {
            for c in p.iter_mut() {
                *c = -c.clone();
            }
        }
        p
    }

    /// Pseudo-remainder: rem of lc(b)^(deg a - deg b + 1) * a by b.
    fn uni_prem(a: &Uni, b: &Uni) -> Uni {
        let db = b.len() - 1;
        let lb = b[db].clone();
        let mut rem = a.clone();
        while !uni_is_zero(&rem) && rem.len() - 1 >= db {
            let dr = rem.len() - 1;
            let lr = rem[dr].clone();
            // rem = lb*rem - lr*x^(dr-db)*b
            for c in rem.iter_mut() {
                *c *= &lb;
            }
            let shift = dr - db;
            for (i, c) in b.iter().enumerate() {
                rem[shift + i] -= &lr * c;
            }
            trim_uni(&mut rem);
        }
        rem
    }

    fn bi_is_zero(p: &Bi) -> bool {
        p.is_empty()
    }

    /// Content in Z[s] of a polynomial in (Z[s])[u].
    fn bi_content(p: &Bi) -> Uni {
        let mut g: Uni = Vec::new();
        for c in p {
            if !uni_is_zero(c) {
                g = uni_gcd(&g, c);
            }
        }
        g
    }

    fn bi_map_coeffs(p: &Bi, f: impl Fn(&Uni) -> Uni) -> Bi {
        let mut out: Bi = p.iter().map(|c| f(c)).collect();
        trim_bi(&mut out);
        out
    }

    /// Pseudo-remainder in (Z[s])[u].
    fn bi_prem(a: &Bi, b: &Bi) -> Bi {
        let db = b.len() - 1;
        let lb = b[db].clone();
        let mut rem = a.clone();
        while !bi_is_zero(&rem) && rem.len() - 1 >= db {
            let dr = rem.len() - 1;
            let lr = rem[dr].clone();
            for c in rem.iter_mut() {
                *c = uni_mul(c, &lb);
            }
            let shift = dr - db;
            for (i, c) in b.iter().enumerate() {
                let t = uni_mul(&lr, c);
                rem[shift + i] = uni_sub(&rem[shift + i], &t);
            }
            trim_bi(&mut rem);
        }
        rem
    }

    /// Gcd in Z[s][u] of primitive-content-split inputs via primitive PRS.
    pub fn gcd_bivar(a: Bi, b: Bi) -> Bi {
        if bi_is_zero(&a) {
            return b;
        }
        if bi_is_zero(&b) {
            return a;
        }
        let ca = bi_content(&a);
        let cb = bi_content(&b);
        let c = uni_gcd(&ca, &cb);
        let mut f = bi_map_coeffs(&a, |x| {
            if uni_is_zero(x) {
                Vec::new()
            } else {
                uni_div_exact(x, &ca)
            }
        });
        let mut g = bi_map_coeffs(&b, |x| {
            if uni_is_zero(x) {
                Vec::new()
            } else {
                uni_div_exact(x, &cb)
            }
        });
        // Degree-0-in-u polynomials reduce to the univariate case.
        if f.len() == 1 || g.len() == 1 {
            let fc = bi_content(&f);
            let gc = bi_content(&g);
            return vec![uni_mul(&uni_gcd(&fc, &gc), &c)];
        }
        if f.len() < g.len() {
            std::mem::swap(&mut f, &mut g);
        }
        while !bi_is_zero(&g) {
            let r = bi_prem(&f, &g);
            f = g;
            g = if bi_is_zero(&r) {
                Vec::new()
            } else {
                let rc = bi_content(&r);
                bi_map_coeffs(&r, |x| {
                    if uni_is_zero(x) {
                        Vec::new()
                    } else {
                        uni_div_exact(x, &rc)
                    }
                })
            };
        }
        let fc = bi_content(&f);
        let mut out = bi_map_coeffs(&f, |x| {
            if uni_is_zero(x) {
                Vec::new()
            } else {
                uni_div_exact(x, &fc)
            }
        });
        out = bi_map_coeffs(&out, |x| uni_mul(x, &c));
        out
    }

    /// Exact division in (Z[s])[u]; panics if not exact.
    pub fn div_exact_bivar(a: Bi, b: Bi) -> Bi {
        assert!(!bi_is_zero(&b), "division by zero polynomial");
        if bi_is_zero(&a) {
            return Vec::new();
        }
        let db = b.len() - 1;
        let lb = &b[db];
        let mut rem = a;
        let mut quot: Bi = vec![Vec::new(); rem.len() - db];
        while !bi_is_zero(&rem) && rem.len() - 1 >= db {
            let dr = rem.len() - 1;
            let q = uni_div_exact(&rem[dr], lb);
            let shift = dr - db;
            quot[shift] = q.clone();
            for (i, c) in b.iter().enumerate() {
                let t = uni_mul(&q, c);
                rem[shift + i] = uni_sub(&rem[shift + i], &t);
            }
            trim_bi(&mut rem);
        }
        debug_assert!(bi_is_zero(&rem), "inexact polynomial division");
        let mut quot = quot;
        trim_bi(&mut quot);
        quot
    }
}

/// Named parameters of the coefficient field, expressed through s, u.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Param {
    /// Skein quantization parameter, A = s^-1.
    A,
    /// Puncture weight, lambda = u^2 / s^2.
    Lambda,
    /// Coulomb flavor parameter, z = u^2 / s^2.
    Z,
    /// z^(1/2) = u / s.
    ZHalf,
    /// q = s^2.
    Q,
    /// t = u^2.
    T,
    /// q^(1/2) = s.
    QHalf,
    /// t^(1/2) = u.
    THalf,
}

/// Element of Q(s, u) in canonical form: numerator and denominator have no
/// common polynomial factor, their integer contents are coprime, the
/// denominator is an ordinary polynomial with minimal exponent 0 in each
/// variable and positive leading coefficient under graded lex. Equality of
/// canonical forms is structural.
#[derive(Clone, PartialEq, Eq)]
pub struct Scalar {
    num: BivarPoly,
    den: BivarPoly,
}

impl Scalar {
    pub fn new(num: BivarPoly, den: BivarPoly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (na, nb) = num.min_exps().unwrap();
        let n0 = num.shifted(-na, -nb);
        let (da, db) = den.min_exps().unwrap();
        let d0 = den.shifted(-da, -db);
        let g = BivarPoly::gcd(&n0, &d0);
        let mut n1 = n0.div_exact(&g);
        let mut d1 = d0.div_exact(&g);
        if d1.leading_coeff().is_negative() {
            n1 = n1.neg();
            d1 = d1.neg();
        }
        Ok(Self {
            num: n1.shifted(na - da, nb - db),
            den: d1,
        })
    }

    pub fn zero() -> Self {
        Self {
            num: BivarPoly::zero(),
            den: BivarPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self {
            num: BivarPoly::one(),
            den: BivarPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self {
            num: BivarPoly::from_int(n),
            den: BivarPoly::one(),
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::new(
            BivarPoly::monomial(r.numer().clone(), 0, 0),
            BivarPoly::monomial(r.denom().clone(), 0, 0),
        )
        .expect("rational denominator is nonzero")
    }

    /// The monomial s^i u^j.
    pub fn su_pow(i: i64, j: i64) -> Self {
        Self {
            num: BivarPoly::monomial(BigInt::one(), i, j),
            den: BivarPoly::one(),
        }
    }

    pub fn s_pow(i: i64) -> Self {
        Self::su_pow(i, 0)
    }

    pub fn u_pow(j: i64) -> Self {
        Self::su_pow(0, j)
    }

    pub fn from_param(p: Param) -> Self {
        match p {
            Param::A => Self::su_pow(-1, 0),
            Param::Lambda | Param::Z => Self::su_pow(-2, 2),
            Param::ZHalf => Self::su_pow(-1, 1),
            Param::Q => Self::su_pow(2, 0),
            Param::T => Self::su_pow(0, 2),
            Param::QHalf => Self::su_pow(1, 0),
            Param::THalf => Self::su_pow(0, 1),
        }
    }

    pub fn numerator(&self) -> &BivarPoly {
        &self.num
    }

    pub fn denominator(&self) -> &BivarPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Unit monomials c*s^i*u^j with c = +-1 admit a cheap multiplication
    /// fast path that preserves canonical form.
    fn as_unit_monomial(&self) -> Option<(bool, i64, i64)> {
        if !self.den.is_one() || self.num.num_terms() != 1 {
            return None;
        }
        let (&(i, j), c) = self.num.iter().next().unwrap();
        if c.is_one() {
            Some((false, i, j))
        } else if (-c).is_one() {
            Some((true, i, j))
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone()).unwrap();
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Self::new(num, den).unwrap()
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some((neg, i, j)) = other.as_unit_monomial() {
            let num = self.num.shifted(i, j);
            return Self {
                num: if neg { num.neg() } else { num },
                den: self.den.clone(),
            };
        }
        if let Some((neg, i, j)) = self.as_unit_monomial() {
            let num = other.num.shifted(i, j);
            return Self {
                num: if neg { num.neg() } else { num },
                den: other.den.clone(),
            };
        }
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den)).unwrap()
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, Error> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<Self, Error> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut out = Self::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        Ok(out)
    }

    /// Exact evaluation at rational s, u. Fails if the denominator
    /// vanishes at the point.
    pub fn specialize_su(&self, s: &BigRational, u: &BigRational) -> Result<BigRational, Error> {
        let d = self.den.eval(s, u)?;
        if d.is_zero() {
            return Err(Error::PoleAtSpecialization);
        }
        Ok(self.num.eval(s, u)? / d)
    }

    /// Evaluation at rational q, t. Both must be squares of rationals;
    /// the positive square roots are substituted for s and u.
    pub fn specialize_qt(&self, q: &BigRational, t: &BigRational) -> Result<BigRational, Error> {
        let s = rational_sqrt(q)?;
        let u = rational_sqrt(t)?;
        self.specialize_su(&s, &u)
    }

    /// Substitute a rational value for s, keeping u symbolic.
    pub fn subst_s(&self, s: &BigRational) -> Result<Self, Error> {
        let (np, nd) = self.num.eval_s(s)?;
        let (dp, dd) = self.den.eval_s(s)?;
        if dp.is_zero() {
            return Err(Error::PoleAtSpecialization);
        }
        // num/den = (np/nd) / (dp/dd) = (np*dd) / (dp*nd)
        Self::new(
            np.mul(&BivarPoly::monomial(dd, 0, 0)),
            dp.mul(&BivarPoly::monomial(nd, 0, 0)),
        )
    }
}

/// Positive square root of a rational, if it is a perfect square.
pub fn rational_sqrt(x: &BigRational) -> Result<BigRational, Error> {
    if x.is_negative() {
        return Err(Error::NotARationalSquare(x.to_string()));
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Ok(BigRational::new(n, d))
    } else {
        Err(Error::NotARationalSquare(x.to_string()))
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.num_terms() > 1 {
            write!(f, "({})/({})", self.num, self.den)
        } else {
            write!(f, "{}/({})", self.num, self.den)
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl std::ops::$trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar::$inner(self, rhs)
            }
        }
        impl std::ops::$trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar::$inner(&self, &rhs)
            }
        }
    };
}

scalar_binop!(Add, add, add);
scalar_binop!(Sub, sub, sub);
scalar_binop!(Mul, mul, mul);

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> Scalar {
        Scalar::s_pow(1)
    }

    fn u() -> Scalar {
        Scalar::u_pow(1)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn monomial_cancellation() {
        // (s*u) * s^-1 = u
        let prod = Scalar::su_pow(1, 1).mul(&Scalar::s_pow(-1));
        assert_eq!(prod, u());
    }

    #[test]
    fn gcd_normalization() {
        // (1 - s^2)/(1 - s) = 1 + s, by the polynomial gcd oracle: the
        // quotient r satisfies r*(1-s) = 1-s^2, and 1+s does.
        let num = Scalar::one().sub(&s().pow(2).unwrap());
        let den = Scalar::one().sub(&s());
        let r = num.try_div(&den).unwrap();
        assert_eq!(r, Scalar::one().add(&s()));
        let back = r.mul(&den);
        assert_eq!(back, num);
    }

    #[test]
    fn self_division_is_one() {
        let x = s().add(&u()).add(&Scalar::from_int(3));
        assert_eq!(x.try_div(&x).unwrap(), Scalar::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            Scalar::one().try_div(&Scalar::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn params() {
        assert_eq!(Scalar::from_param(Param::A), Scalar::s_pow(-1));
        assert_eq!(Scalar::from_param(Param::Z), Scalar::su_pow(-2, 2));
        assert_eq!(Scalar::from_param(Param::Lambda), Scalar::su_pow(-2, 2));
        assert_eq!(Scalar::from_param(Param::QHalf), s());
        // z^(1/2) squared is z
        let zh = Scalar::from_param(Param::ZHalf);
        assert_eq!(zh.mul(&zh), Scalar::from_param(Param::Z));
    }

    #[test]
    fn specialize_simple() {
        // s^2 at s=1, u=2 -> 1
        let x = s().pow(2).unwrap();
        assert_eq!(x.specialize_su(&rat(1, 1), &rat(2, 1)).unwrap(), rat(1, 1));
        // u^2 + u^-2 at u=2 -> 17/4
        let x = u().pow(2).unwrap().add(&u().pow(-2).unwrap());
        assert_eq!(
            x.specialize_su(&rat(1, 1), &rat(2, 1)).unwrap(),
            rat(17, 4)
        );
    }

    #[test]
    fn specialize_pole() {
        // 1/(1-s) has a pole at s=1
        let x = Scalar::one()
            .try_div(&Scalar::one().sub(&s()))
            .unwrap();
        assert_eq!(
            x.specialize_su(&rat(1, 1), &rat(2, 1)),
            Err(Error::PoleAtSpecialization)
        );
    }

    #[test]
    fn specialize_qt_requires_squares() {
        let x = s();
        assert_eq!(x.specialize_qt(&rat(4, 1), &rat(1, 1)).unwrap(), rat(2, 1));
        assert!(x.specialize_qt(&rat(2, 1), &rat(1, 1)).is_err());
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let x = Scalar::new(
            BivarPoly::from_terms([((2, 0), BigInt::from(2)), ((0, 2), BigInt::from(-2))]),
            BivarPoly::from_terms([((1, 1), BigInt::from(4))]),
        )
        .unwrap();
        let y = Scalar::new(x.num.clone(), x.den.clone()).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn subst_s_keeps_u() {
        // (s*u^2 + s^2)/(s) at s=2 -> (2u^2+4)/2 = u^2 + 2
        let x = Scalar::new(
            BivarPoly::from_terms([((1, 2), BigInt::one()), ((2, 0), BigInt::one())]),
            BivarPoly::monomial(BigInt::one(), 1, 0),
        )
        .unwrap();
        let y = x.subst_s(&rat(2, 1)).unwrap();
        assert_eq!(y, u().pow(2).unwrap().add(&Scalar::from_int(2)));
    }

    #[test]
    fn denominator_sign_is_normalized() {
        // 1/(-s + ...) picks up a positive leading denominator
        let x = Scalar::new(
            BivarPoly::one(),
            BivarPoly::from_terms([((1, 0), BigInt::from(-1)), ((0, 0), BigInt::one())]),
        )
        .unwrap();
        assert!(x.denominator().leading_coeff().is_positive());
        // and equals -1/(s-1)
        let y = Scalar::from_int(-1)
            .try_div(&s().sub(&Scalar::one()))
            .unwrap();
        assert_eq!(x, y);
    }
}
