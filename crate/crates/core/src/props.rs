//! Seeded randomized consistency suites for the arithmetic kernels:
//! scalar field axioms, normal-ordering against the sequential-application
//! oracle, and associativity in the operator and torus algebras. All
//! randomness flows from an explicit seed, so identical configurations
//! reproduce identical reports.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coulomb::{TorusElem, VPoly, VRat};
use crate::qdiff::{op_equal, QDiffOp, XPoly, XRat};
use crate::report::{timed_suite, CheckReport};
use crate::scalar::{BivarPoly, Scalar};

fn rand_bivar(rng: &mut ChaCha8Rng, max_terms: usize, nonzero: bool) -> BivarPoly {
    loop {
        let n = rng.gen_range(1..=max_terms);
        let mut p = BivarPoly::zero();
        for _ in 0..n {
            let i = rng.gen_range(-3..=3i64);
            let j = rng.gen_range(-3..=3i64);
            let c = rng.gen_range(-4..=4i64);
            p = p.add(&BivarPoly::monomial(BigInt::from(c), i, j));
        }
        if !nonzero || !p.is_zero() {
            return p;
        }
    }
}

fn rand_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    let num = rand_bivar(rng, 3, false);
    let den = rand_bivar(rng, 2, true);
    Scalar::new(num, den).expect("denominator is nonzero")
}

fn rand_nonzero_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let x = rand_scalar(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Simple scalar: an integer multiple of a monomial in s, u. Operator and
/// torus coefficients are built from these to keep the randomized suites
/// focused on the noncommutative structure.
fn rand_mono_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    let c = rng.gen_range(-3..=3i64);
    let i = rng.gen_range(-2..=2i64);
    let j = rng.gen_range(-2..=2i64);
    Scalar::from_int(c).mul(&Scalar::su_pow(i, j))
}

fn rand_xpoly(rng: &mut ChaCha8Rng, max_deg: i64) -> XPoly {
    let n = rng.gen_range(1..=3usize);
    let mut p = XPoly::zero();
    for _ in 0..n {
        let k = rng.gen_range(-max_deg..=max_deg);
        p = p.add(&XPoly::term(rand_mono_scalar(rng), k));
    }
    p
}

fn rand_op(rng: &mut ChaCha8Rng) -> QDiffOp {
    let n = rng.gen_range(1..=3usize);
    let mut op = QDiffOp::zero();
    for _ in 0..n {
        let k = rng.gen_range(-3..=3i64);
        op = op.add(&QDiffOp::term(k, XRat::from_poly(rand_xpoly(rng, 3))));
    }
    op
}

fn rand_vpoly(rng: &mut ChaCha8Rng) -> VPoly {
    let n = rng.gen_range(1..=3usize);
    let mut p = VPoly::zero();
    for _ in 0..n {
        let a = rng.gen_range(-2..=2i64);
        let b = rng.gen_range(-2..=2i64);
        p = p.add(&VPoly::term(rand_mono_scalar(rng), a, b));
    }
    p
}

fn rand_torus(rng: &mut ChaCha8Rng) -> TorusElem {
    let n = rng.gen_range(1..=3usize);
    let mut t = TorusElem::zero();
    for _ in 0..n {
        let l1 = rng.gen_range(-2..=2i64);
        let l2 = rng.gen_range(-2..=2i64);
        t = t.add(&TorusElem::term(l1, l2, VRat::from_poly(rand_vpoly(rng))));
    }
    t
}

fn rand_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let n = rng.gen_range(-6..=6i64);
    let d = rng.gen_range(1..=4i64);
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Field axioms for the scalar kernel on random inputs: associativity of
/// addition, distributivity, multiplicative inverses, idempotence of the
/// canonical form, and the homomorphism property of specialization away
/// from poles.
pub fn scalar_axioms_suite(seed: u64, cases: usize) -> CheckReport {
    timed_suite("scalar-axioms", |report| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut assoc = true;
        let mut dist = true;
        let mut inv = true;
        let mut canon = true;
        let mut spec_hom = true;
        let mut spec_checked = 0usize;
        for _ in 0..cases {
            let a = rand_scalar(&mut rng);
            let b = rand_scalar(&mut rng);
            let c = rand_scalar(&mut rng);
            assoc &= a.add(&b).add(&c) == a.add(&b.add(&c));
            dist &= a.mul(&b.add(&c)) == a.mul(&b).add(&a.mul(&c));
            let nz = rand_nonzero_scalar(&mut rng);
            inv &= nz.mul(&nz.inv().unwrap()).is_one();
            canon &=
                Scalar::new(a.numerator().clone(), a.denominator().clone()).unwrap() == a;
            let s = rand_rational(&mut rng);
            let u = rand_rational(&mut rng);
            if let (Ok(va), Ok(vb), Ok(vab)) = (
                a.specialize_su(&s, &u),
                b.specialize_su(&s, &u),
                a.mul(&b).specialize_su(&s, &u),
            ) {
                spec_hom &= va * vb == vab;
                spec_checked += 1;
            }
        }
        let detail = format!("{} cases", cases);
        report.record("addition-associative", assoc, &detail);
        report.record("multiplication-distributive", dist, &detail);
        report.record("multiplicative-inverse", inv, &detail);
        report.record("canonical-form-idempotent", canon, &detail);
        report.record(
            "specialization-homomorphism",
            spec_hom,
            format!("{} pole-free samples", spec_checked),
        );
    })
}

/// Normal-ordering correctness: applying a composed operator agrees with
/// applying the factors in sequence, on random operator pairs and random
/// Laurent inputs.
pub fn normal_ordering_suite(seed: u64, cases: usize) -> CheckReport {
    timed_suite("normal-ordering", |report| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut ok = true;
        for _ in 0..cases {
            let a = rand_op(&mut rng);
            let b = rand_op(&mut rng);
            let f = XRat::from_poly(rand_xpoly(&mut rng, 6));
            ok &= a.compose(&b).apply(&f) == a.apply(&b.apply(&f));
        }
        report.record("compose-vs-sequential", ok, format!("{} cases", cases));
    })
}

/// Associativity of composition in the operator algebra and of the
/// normal-ordered product in the quantum torus, on random triples. The
/// defining exchange relations are also re-checked for every generator
/// pair.
pub fn associativity_suite(seed: u64, cases: usize) -> CheckReport {
    timed_suite("associativity", |report| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut op_ok = true;
        for _ in 0..cases {
            let a = rand_op(&mut rng);
            let b = rand_op(&mut rng);
            let c = rand_op(&mut rng);
            op_ok &= op_equal(&a.compose(&b.compose(&c)), &a.compose(&b).compose(&c));
        }
        report.record("operator-associativity", op_ok, format!("{} triples", cases));
        let mut torus_ok = true;
        for _ in 0..cases {
            let a = rand_torus(&mut rng);
            let b = rand_torus(&mut rng);
            let c = rand_torus(&mut rng);
            torus_ok &= a.mul(&b.mul(&c)) == a.mul(&b).mul(&c);
        }
        report.record("torus-associativity", torus_ok, format!("{} triples", cases));
        // exchange relations on generators
        let mut exch = true;
        for r in [1u8, 2] {
            for sidx in [1u8, 2] {
                let d = TorusElem::d_gen(r);
                let v = TorusElem::v_gen(sidx);
                let q_pow = if r == sidx { 2 } else { 0 };
                exch &= d.mul(&v) == v.mul(&d).scale(&Scalar::s_pow(q_pow));
            }
        }
        report.record("exchange-relations", exch, "all generator pairs");
    })
}

/// The full kernel property suite at the sizes pinned by the acceptance
/// criteria: 1000 scalar cases, 200 ordering cases, 200 associativity
/// triples.
pub fn kernel_suite(seed: u64) -> CheckReport {
    timed_suite("kernel", |report| {
        report.absorb(scalar_axioms_suite(seed, 1000));
        report.absorb(normal_ordering_suite(seed.wrapping_add(1), 200));
        report.absorb(associativity_suite(seed.wrapping_add(2), 200));
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_axioms_small() {
        let report = scalar_axioms_suite(7, 50);
        assert!(report.passed(), "{}", report);
    }

    #[test]
    fn normal_ordering_small() {
        let report = normal_ordering_suite(11, 25);
        assert!(report.passed(), "{}", report);
    }

    #[test]
    fn associativity_small() {
        let report = associativity_suite(13, 15);
        assert!(report.passed(), "{}", report);
    }

    #[test]
    fn suites_are_deterministic() {
        let mut a = scalar_axioms_suite(42, 20);
        let mut b = scalar_axioms_suite(42, 20);
        a.elapsed_ms = 0;
        b.elapsed_ms = 0;
        assert_eq!(a, b);
    }
}
