//! Rational functions in X over the coefficient field and the algebra of
//! q-difference operators: finite sums sum_k f_k(X) P^k where P is the
//! shift (P f)(X) = f(qX), subject to P f(X) = f(qX) P.
//!
//! Operator coefficients are full rational functions, not just Laurent
//! polynomials; preservation of the symmetric Laurent subring is a checked
//! property, not a type invariant.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Error;
use crate::intpoly;
use crate::scalar::{BivarPoly, Scalar};

/// Sparse Laurent polynomial in X with Scalar coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct XPoly {
    terms: BTreeMap<i64, Scalar>,
}

impl XPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(c, 0)
    }

    pub fn x_pow(k: i64) -> Self {
        Self::term(Scalar::one(), k)
    }

    pub fn term(c: Scalar, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    pub fn from_terms<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, Scalar)>,
    {
        let mut p = Self::zero();
        for (k, c) in iter {
            p.add_term(k, c);
        }
        p
    }

    fn add_term(&mut self, k: i64, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().add(&c);
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &Scalar)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.add_term(k, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&k, c)| (k, c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&k1, c1) in &self.terms {
            for (&k2, c2) in &other.terms {
                out.add_term(k1 + k2, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&k, v)| (k, v.mul(c))).collect(),
        }
    }

    /// Multiply by X^d.
    pub fn shifted(&self, d: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&k, c)| (k + d, c.clone())).collect(),
        }
    }

    /// Substitute X -> q^j X: the X^n term picks up the factor s^(2jn).
    pub fn subst_q_shift(&self, j: i64) -> Self {
        if j == 0 {
            return self.clone();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&n, c)| (n, c.mul(&Scalar::s_pow(2 * j * n))))
                .collect(),
        }
    }

    /// Substitute X -> X^(-1).
    pub fn invert_x(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&n, c)| (-n, c.clone())).collect(),
        }
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn leading_coeff(&self) -> &Scalar {
        self.terms
            .values()
            .next_back()
            .expect("leading coefficient of zero polynomial")
    }

    /// Evaluate at a rational X value, leaving s, u symbolic.
    pub fn eval_x(&self, x: &BigRational) -> Result<Scalar, Error> {
        let mut acc = Scalar::zero();
        for (&n, c) in &self.terms {
            if n < 0 && x.is_zero() {
                return Err(Error::PoleAtSpecialization);
            }
            let p = x.pow(i32::try_from(n).expect("X-exponent fits in i32"));
            acc = acc.add(&c.mul(&Scalar::from_rational(&p)));
        }
        Ok(acc)
    }

    /// Map every coefficient through the given function, dropping zeros.
    pub fn map_coeffs<F>(&self, mut f: F) -> Result<Self, Error>
    where
        F: FnMut(&Scalar) -> Result<Scalar, Error>,
    {
        let mut out = Self::zero();
        for (&k, c) in &self.terms {
            out.add_term(k, f(c)?);
        }
        Ok(out)
    }

    /// Ordinary-polynomial division over the coefficient field. Requires
    /// non-negative exponents; returns (quotient, remainder). Used only
    /// for single exact divisions, never iterated as a remainder sequence
    /// (coefficient growth in a field Euclid is catastrophic).
    fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.max_exp().unwrap();
        let dl = d.leading_coeff().clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while !rem.is_zero() && rem.max_exp().unwrap() >= dd {
            let rd = rem.max_exp().unwrap();
            let c = rem
                .leading_coeff()
                .try_div(&dl)
                .expect("leading coefficient is nonzero");
            let t = Self::term(c, rd - dd);
            rem = rem.sub(&t.mul(d));
            quot = quot.add(&t);
        }
        (quot, rem)
    }
}

/// Gcd of ordinary polynomials in X over the coefficient field, computed
/// at the integer level: denominators are cleared and a primitive
/// pseudo-remainder sequence runs over Z[s, u], which keeps coefficient
/// degrees under control. The result is monic.
pub(crate) fn xpoly_gcd(a: &XPoly, b: &XPoly) -> XPoly {
    if a.is_zero() {
        return make_monic(b);
    }
    if b.is_zero() {
        return make_monic(a);
    }
    let (pa, _) = clear_xpoly(a);
    let (pb, _) = clear_xpoly(b);
    let g = intpoly::gcd(pa, pb);
    let lead = g.last().expect("gcd of nonzero polynomials is nonzero");
    XPoly::from_terms(g.iter().enumerate().map(|(i, c)| {
        (
            i as i64,
            Scalar::new(c.clone(), lead.clone()).expect("leading coefficient is nonzero"),
        )
    }))
}

fn make_monic(p: &XPoly) -> XPoly {
    if p.is_zero() {
        return XPoly::zero();
    }
    let lc = p.leading_coeff().clone();
    p.scale(&lc.inv().expect("leading coefficient is nonzero"))
}

/// Rewrite an ordinary XPoly as scale * (integer-coefficient poly), where
/// scale is a unit of the coefficient field.
fn clear_xpoly(p: &XPoly) -> (intpoly::IPoly, Scalar) {
    assert!(!p.is_zero());
    // common denominator of all coefficients
    let mut common = BivarPoly::one();
    for (_, c) in p.iter() {
        let d = c.denominator();
        let g = BivarPoly::gcd(&common, d);
        common = common.mul(&d.div_exact(&g));
    }
    let deg = p.max_exp().unwrap() as usize;
    let mut out: intpoly::IPoly = vec![BivarPoly::zero(); deg + 1];
    let mut min_i = i64::MAX;
    let mut min_j = i64::MAX;
    for (&k, c) in p.iter() {
        let lifted = c.numerator().mul(&common.div_exact(c.denominator()));
        if let Some((i, j)) = lifted.min_exps() {
            min_i = min_i.min(i);
            min_j = min_j.min(j);
        }
        out[k as usize] = lifted;
    }
    // shift away Laurent exponents; the shift is a unit too
    let (si, sj) = (min_i.min(0), min_j.min(0));
    for c in out.iter_mut() {
        *c = c.shifted(-si, -sj);
    }
    let scale = Scalar::new(BivarPoly::monomial(1.into(), si, sj), common)
        .expect("common denominator is nonzero");
    (out, scale)
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (&k, c)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let coeff = format!("{}", c);
            let needs_parens =
                coeff.contains('+') || coeff.contains(" - ") || coeff.starts_with('-');
            match (k, c.is_one()) {
                (0, _) => write!(f, "{}", coeff)?,
                (1, true) => write!(f, "X")?,
                (_, true) => write!(f, "X^{}", k)?,
                (1, false) if !needs_parens => write!(f, "{}*X", coeff)?,
                (1, false) => write!(f, "({})*X", coeff)?,
                (_, false) if !needs_parens => write!(f, "{}*X^{}", coeff, k)?,
                (_, false) => write!(f, "({})*X^{}", coeff, k)?,
            }
        }
        Ok(())
    }
}

/// Rational function in X over the coefficient field, in canonical form:
/// the denominator is an ordinary polynomial with nonzero constant term,
/// monic in its highest power of X, and coprime to the numerator. The
/// numerator may be Laurent. Equality is structural.
#[derive(Clone, PartialEq, Eq)]
pub struct XRat {
    num: XPoly,
    den: XPoly,
}

impl XRat {
    pub fn new(num: XPoly, den: XPoly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let nm = num.min_exp().unwrap();
        let n0 = num.shifted(-nm);
        let dm = den.min_exp().unwrap();
        let d0 = den.shifted(-dm);
        if d0.max_exp() == Some(0) {
            // constant denominator: just scale
            let inv = d0.leading_coeff().inv().unwrap();
            return Ok(Self {
                num: n0.scale(&inv).shifted(nm - dm),
                den: XPoly::one(),
            });
        }
        let (ni, ns) = clear_xpoly(&n0);
        let (di, ds) = clear_xpoly(&d0);
        let g = intpoly::gcd(ni.clone(), di.clone());
        let (n1, d1) = if g.len() > 1 {
            (intpoly::div_exact(&ni, &g), intpoly::div_exact(&di, &g))
        } else {
            (ni, di)
        };
        // scale both sides by the inverse leading coefficient of the
        // denominator; the resulting denominator is monic.
        let lead = d1.last().unwrap().clone();
        let k = ns.try_div(&ds).expect("denominator scale is a unit");
        let den = XPoly::from_terms(d1.iter().enumerate().map(|(i, c)| {
            (
                i as i64,
                Scalar::new(c.clone(), lead.clone()).expect("nonzero leading coefficient"),
            )
        }));
        let num = XPoly::from_terms(n1.iter().enumerate().map(|(i, c)| {
            (
                i as i64,
                Scalar::new(c.clone(), lead.clone())
                    .expect("nonzero leading coefficient")
                    .mul(&k),
            )
        }));
        Ok(Self {
            num: num.shifted(nm - dm),
            den,
        })
    }

    pub fn zero() -> Self {
        Self {
            num: XPoly::zero(),
            den: XPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(XPoly::one())
    }

    pub fn from_poly(p: XPoly) -> Self {
        Self {
            num: p,
            den: XPoly::one(),
        }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_poly(XPoly::constant(c))
    }

    pub fn x_pow(k: i64) -> Self {
        Self::from_poly(XPoly::x_pow(k))
    }

    pub fn numerator(&self) -> &XPoly {
        &self.num
    }

    pub fn denominator(&self) -> &XPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The underlying Laurent polynomial, if the denominator is trivial.
    pub fn as_poly(&self) -> Option<&XPoly> {
        if self.den.is_one() {
            Some(&self.num)
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
        // combine over the least common denominator; the denominators in
        // play typically share most of their factors
        let g = xpoly_gcd(&self.den, &other.den);
        if g.max_exp() == Some(0) {
            return Self::new(
                self.num.mul(&other.den).add(&other.num.mul(&self.den)),
                self.den.mul(&other.den),
            )
            .unwrap();
        }
        let (d2, r) = other.den.div_rem(&g);
        debug_assert!(r.is_zero());
        let (d1, r) = self.den.div_rem(&g);
        debug_assert!(r.is_zero());
        Self::new(
            self.num.mul(&d2).add(&other.num.mul(&d1)),
            self.den.mul(&d2),
        )
        .unwrap()
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
        if self.den.is_one() && other.den.is_one() {
            return Self {
                num: self.num.mul(&other.num),
                den: XPoly::one(),
            };
        }
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den)).unwrap()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
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

    /// Substitute X -> q^j X.
    pub fn subst_q_shift(&self, j: i64) -> Self {
        if j == 0 {
            return self.clone();
        }
        Self::new(self.num.subst_q_shift(j), self.den.subst_q_shift(j)).unwrap()
    }

    /// Substitute X -> X^(-1).
    pub fn invert_x(&self) -> Self {
        Self::new(self.num.invert_x(), self.den.invert_x()).unwrap()
    }

    /// Exact evaluation at a rational X value, leaving s, u symbolic.
    pub fn eval_x(&self, x: &BigRational) -> Result<Scalar, Error> {
        let d = self.den.eval_x(x)?;
        if d.is_zero() {
            return Err(Error::PoleAtSpecialization);
        }
        self.num.eval_x(x)?.try_div(&d)
    }

    /// Substitute a rational value for s in every coefficient.
    pub fn subst_s(&self, s: &BigRational) -> Result<Self, Error> {
        let num = self.num.map_coeffs(|c| c.subst_s(s))?;
        let den = self.den.map_coeffs(|c| c.subst_s(s))?;
        Self::new(num, den)
    }
}

impl fmt::Debug for XRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for XRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// q-difference operator: finite sum of rational-function coefficients
/// times integer powers of the shift P, stored normal-ordered with all
/// X-dependence to the left of the shifts.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QDiffOp {
    terms: BTreeMap<i64, XRat>,
}

impl QDiffOp {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::term(0, XRat::one())
    }

    /// The pure shift operator P^k.
    pub fn varpi(k: i64) -> Self {
        Self::term(k, XRat::one())
    }

    /// Multiplication operator by a rational function.
    pub fn mul_by(f: XRat) -> Self {
        Self::term(0, f)
    }

    /// The single term f(X) P^k.
    pub fn term(k: i64, f: XRat) -> Self {
        let mut terms = BTreeMap::new();
        if !f.is_zero() {
            terms.insert(k, f);
        }
        Self { terms }
    }

    pub fn from_terms<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, XRat)>,
    {
        let mut op = Self::zero();
        for (k, f) in iter {
            op.add_term(k, f);
        }
        op
    }

    fn add_term(&mut self, k: i64, f: XRat) {
        if f.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(f);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().add(&f);
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &XRat)> {
        self.terms.iter()
    }

    /// The set of shifts with nonzero coefficient.
    pub fn shifts(&self) -> Vec<i64> {
        self.terms.keys().copied().collect()
    }

    pub fn coeff(&self, k: i64) -> XRat {
        self.terms.get(&k).cloned().unwrap_or_else(XRat::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, f) in &other.terms {
            out.add_term(k, f.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&k, f)| (k, f.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&k, f)| (k, f.scale(c))).collect(),
        }
    }

    /// c1*a + c2*b, coefficientwise.
    pub fn linear(a: &Self, b: &Self, c1: &Scalar, c2: &Scalar) -> Self {
        a.scale(c1).add(&b.scale(c2))
    }

    /// Normal-ordered operator product: (f P^j)(g P^k) = f(X) g(q^j X) P^(j+k),
    /// extended bilinearly. `self` acts after `other`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&j, f) in &self.terms {
            for (&k, g) in &other.terms {
                out.add_term(j + k, f.mul(&g.subst_q_shift(j)));
            }
        }
        out
    }

    /// Apply the operator to a rational function.
    pub fn apply(&self, f: &XRat) -> XRat {
        let mut out = XRat::zero();
        for (&k, c) in &self.terms {
            out = out.add(&c.mul(&f.subst_q_shift(k)));
        }
        out
    }

    /// Non-negative operator power under composition.
    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::identity();
        for _ in 0..k {
            out = out.compose(self);
        }
        out
    }

    /// Substitute a rational value for s in every coefficient.
    pub fn subst_s(&self, s: &BigRational) -> Result<Self, Error> {
        let mut out = Self::zero();
        for (&k, f) in &self.terms {
            out.add_term(k, f.subst_s(s)?);
        }
        Ok(out)
    }

    /// Sum of all coefficients, forgetting the shift grading. At q = 1 the
    /// shift acts trivially, so this is the multiplication symbol of the
    /// operator.
    pub fn collapse(&self) -> XRat {
        let mut out = XRat::zero();
        for f in self.terms.values() {
            out = out.add(f);
        }
        out
    }

    /// True iff the operator maps every X^n + X^(-n), 0 <= n <= degree_bound,
    /// to a Laurent polynomial invariant under X -> X^(-1).
    pub fn preserves_symmetric(&self, degree_bound: i64) -> bool {
        assert!(degree_bound >= 1, "degree bound must be at least 1");
        for n in 0..=degree_bound {
            let p = XRat::from_poly(XPoly::x_pow(n).add(&XPoly::x_pow(-n)));
            let image = self.apply(&p);
            match image.as_poly() {
                None => return false,
                Some(poly) => {
                    if *poly != poly.invert_x() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Equality of operators: coefficientwise equality of canonical rational
/// functions.
pub fn op_equal(a: &QDiffOp, b: &QDiffOp) -> bool {
    a == b
}

impl fmt::Debug for QDiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for QDiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (&k, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "({})", c)?,
                1 => write!(f, "({}) P", c)?,
                _ => write!(f, "({}) P^{}", c, k)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn xr(terms: &[(i64, i64)]) -> XRat {
        // small helper: integer-coefficient Laurent polynomial
        XRat::from_poly(XPoly::from_terms(
            terms
                .iter()
                .map(|&(k, c)| (k, Scalar::from_int(c)))
                .collect::<Vec<_>>(),
        ))
    }

    #[test]
    fn varpi_acts_by_q_shift() {
        // P (X^2 + X^-2) = q^2 X^2 + q^-2 X^-2
        let f = xr(&[(2, 1), (-2, 1)]);
        let got = QDiffOp::varpi(1).apply(&f);
        let want = XRat::from_poly(XPoly::from_terms([
            (2, Scalar::s_pow(4)),
            (-2, Scalar::s_pow(-4)),
        ]));
        assert_eq!(got, want);
    }

    #[test]
    fn compose_normal_orders() {
        // (X P) o (X P) = q X^2 P^2
        let xp = QDiffOp::term(1, XRat::x_pow(1));
        let got = xp.compose(&xp);
        let want = QDiffOp::term(2, XRat::from_poly(XPoly::term(Scalar::s_pow(2), 2)));
        assert_eq!(got, want);
    }

    #[test]
    fn identity_is_neutral() {
        let a = QDiffOp::from_terms([(1, xr(&[(1, 3)])), (-2, xr(&[(0, 1), (2, -1)]))]);
        assert_eq!(QDiffOp::identity().compose(&a), a);
        assert_eq!(a.compose(&QDiffOp::identity()), a);
    }

    #[test]
    fn varpi_inverse() {
        let p = QDiffOp::varpi(1);
        let pinv = QDiffOp::varpi(-1);
        assert!(op_equal(&p.compose(&pinv), &QDiffOp::identity()));
        assert!(!op_equal(&p, &pinv));
    }

    #[test]
    fn linear_combination_shifts() {
        // P + P^-1 has exactly shifts {-1, +1}
        let op = QDiffOp::linear(
            &QDiffOp::varpi(1),
            &QDiffOp::varpi(-1),
            &Scalar::one(),
            &Scalar::one(),
        );
        assert_eq!(op.shifts(), vec![-1, 1]);
        // a - a = 0
        let a = QDiffOp::term(2, xr(&[(1, 5)]));
        assert!(a.sub(&a).is_zero());
        // a + 0 = a
        assert_eq!(a.add(&QDiffOp::zero()), a);
    }

    #[test]
    fn rational_cancellation_in_canonical_form() {
        // (X^2 - 1)/(X - 1) = X + 1
        let num = XPoly::from_terms([(2, Scalar::one()), (0, Scalar::from_int(-1))]);
        let den = XPoly::from_terms([(1, Scalar::one()), (0, Scalar::from_int(-1))]);
        let r = XRat::new(num, den).unwrap();
        assert_eq!(r, xr(&[(1, 1), (0, 1)]));
    }

    #[test]
    fn conjugating_multiplication_by_varpi() {
        // P o f(X) = f(qX) o P
        let f = XRat::new(
            XPoly::from_terms([(1, Scalar::one()), (0, Scalar::from_int(2))]),
            XPoly::from_terms([(2, Scalar::one()), (0, Scalar::from_int(5))]),
        )
        .unwrap();
        let lhs = QDiffOp::varpi(1).compose(&QDiffOp::mul_by(f.clone()));
        let rhs = QDiffOp::mul_by(f.subst_q_shift(1)).compose(&QDiffOp::varpi(1));
        assert!(op_equal(&lhs, &rhs));
    }

    #[test]
    fn apply_composition_agrees_with_sequential_application() {
        let a = QDiffOp::from_terms([(1, xr(&[(1, 2), (0, 1)])), (0, xr(&[(-1, 1)]))]);
        let b = QDiffOp::from_terms([(-1, xr(&[(2, 1)])), (2, xr(&[(0, 3), (1, -1)]))]);
        let f = XRat::new(
            XPoly::from_terms([(3, Scalar::one()), (-1, Scalar::from_int(4))]),
            XPoly::from_terms([(1, Scalar::one()), (0, Scalar::from_int(7))]),
        )
        .unwrap();
        let lhs = a.compose(&b).apply(&f);
        let rhs = a.apply(&b.apply(&f));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn eval_x_catches_poles() {
        let r = XRat::new(
            XPoly::one(),
            XPoly::from_terms([(2, Scalar::one()), (0, Scalar::from_int(-1))]),
        )
        .unwrap();
        assert!(r.eval_x(&BigRational::from(BigInt::from(1))).is_err());
        let v = r.eval_x(&BigRational::from(BigInt::from(2))).unwrap();
        assert_eq!(
            v,
            Scalar::from_rational(&BigRational::new(BigInt::from(1), BigInt::from(3)))
        );
    }

    #[test]
    fn multiplication_preserves_symmetric_only_for_symmetric_polys() {
        let sym = QDiffOp::mul_by(xr(&[(1, 1), (-1, 1)]));
        assert!(sym.preserves_symmetric(4));
        let asym = QDiffOp::mul_by(xr(&[(1, 1)]));
        assert!(!asym.preserves_symmetric(4));
        assert!(QDiffOp::identity().preserves_symmetric(6));
    }
}
