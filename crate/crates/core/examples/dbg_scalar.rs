use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skein_coulomb::scalar::{BivarPoly, Scalar};

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
        if !nonzero || !p.is_zero() { return p; }
    }
}
fn rand_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    let num = rand_bivar(rng, 3, false);
    let den = rand_bivar(rng, 2, true);
    Scalar::new(num, den).expect("nonzero")
}
fn rand_nonzero(rng: &mut ChaCha8Rng) -> Scalar {
    loop { let x = rand_scalar(rng); if !x.is_zero() { return x; } }
}
fn rand_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let n = rng.gen_range(-6..=6i64);
    let d = rng.gen_range(1..=4i64);
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for case in 0..50 {
        eprintln!("case {}", case);
        let a = rand_scalar(&mut rng);
        let b = rand_scalar(&mut rng);
        let c = rand_scalar(&mut rng);
        eprintln!("  a={} b={} c={}", a, b, c);
        eprintln!("  add-assoc...");
        let _ = a.add(&b).add(&c) == a.add(&b.add(&c));
        eprintln!("  dist...");
        let _ = a.mul(&b.add(&c)) == a.mul(&b).add(&a.mul(&c));
        eprintln!("  inv...");
        let nz = rand_nonzero(&mut rng);
        let _ = nz.mul(&nz.inv().unwrap()).is_one();
        eprintln!("  canon...");
        let _ = Scalar::new(a.numerator().clone(), a.denominator().clone()).unwrap() == a;
        let s = rand_rational(&mut rng);
        let u = rand_rational(&mut rng);
        eprintln!("  specialize...");
        let _ = (a.specialize_su(&s, &u), b.specialize_su(&s, &u), a.mul(&b).specialize_su(&s, &u));
    }
    eprintln!("ALL DONE");
}
