//! The SL(2,Z) mapping class group action on the skein algebra and the
//! three sign involutions, realized as endomorphisms given by generator
//! images. Every built-in endomorphism is verified to preserve the
//! defining relations before it is trusted, and the duality triangle
//! between the invariant subalgebras is checked on symmetrized samples.

use crate::report::{timed_suite, CheckReport};
use crate::scalar::Scalar;
use crate::skein::{
    gamma_expr, presentation_relations, skein_equal, skein_eval, words_up_to, Gen, SkeinExpr,
    GENS,
};

/// Algebra endomorphism of the skein algebra, specified by the images of
/// the three generators. Scalars are fixed.
#[derive(Clone, PartialEq)]
pub struct Endo {
    pub image_alpha: SkeinExpr,
    pub image_beta: SkeinExpr,
    pub image_gamma: SkeinExpr,
}

/// The built-in symmetries: the two Dehn twists and the rotation
/// generating the mapping class group action, and the three sign
/// involutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinEndo {
    TauPlus,
    TauMinus,
    Sigma,
    Xi1,
    Xi2,
    Xi3,
}

pub const INVOLUTIONS: [BuiltinEndo; 3] = [BuiltinEndo::Xi1, BuiltinEndo::Xi2, BuiltinEndo::Xi3];

pub const BUILTINS: [BuiltinEndo; 6] = [
    BuiltinEndo::TauPlus,
    BuiltinEndo::TauMinus,
    BuiltinEndo::Sigma,
    BuiltinEndo::Xi1,
    BuiltinEndo::Xi2,
    BuiltinEndo::Xi3,
];

impl BuiltinEndo {
    pub fn name(&self) -> &'static str {
        match self {
            BuiltinEndo::TauPlus => "tau_plus",
            BuiltinEndo::TauMinus => "tau_minus",
            BuiltinEndo::Sigma => "sigma",
            BuiltinEndo::Xi1 => "xi1",
            BuiltinEndo::Xi2 => "xi2",
            BuiltinEndo::Xi3 => "xi3",
        }
    }
}

fn gen_expr(g: Gen) -> SkeinExpr {
    SkeinExpr::generator(g)
}

fn neg_gen(g: Gen) -> SkeinExpr {
    SkeinExpr::generator(g).neg()
}

/// The generator images of a built-in endomorphism. The image gamma_{-1}
/// is stored expanded as (ab + ba)/(A + A^(-1)) - c.
pub fn builtin_endo(which: BuiltinEndo) -> Endo {
    let gm1 = gamma_expr(-1);
    match which {
        BuiltinEndo::TauPlus => Endo {
            image_alpha: gen_expr(Gen::Alpha),
            image_beta: gm1,
            image_gamma: gen_expr(Gen::Beta),
        },
        BuiltinEndo::TauMinus => Endo {
            image_alpha: gm1,
            image_beta: gen_expr(Gen::Beta),
            image_gamma: gen_expr(Gen::Alpha),
        },
        BuiltinEndo::Sigma => Endo {
            image_alpha: gen_expr(Gen::Beta),
            image_beta: gen_expr(Gen::Alpha),
            image_gamma: gm1,
        },
        BuiltinEndo::Xi1 => Endo {
            image_alpha: neg_gen(Gen::Alpha),
            image_beta: gen_expr(Gen::Beta),
            image_gamma: neg_gen(Gen::Gamma),
        },
        BuiltinEndo::Xi2 => Endo {
            image_alpha: gen_expr(Gen::Alpha),
            image_beta: neg_gen(Gen::Beta),
            image_gamma: neg_gen(Gen::Gamma),
        },
        BuiltinEndo::Xi3 => Endo {
            image_alpha: neg_gen(Gen::Alpha),
            image_beta: neg_gen(Gen::Beta),
            image_gamma: gen_expr(Gen::Gamma),
        },
    }
}

impl Endo {
    pub fn identity() -> Self {
        Endo {
            image_alpha: gen_expr(Gen::Alpha),
            image_beta: gen_expr(Gen::Beta),
            image_gamma: gen_expr(Gen::Gamma),
        }
    }

    pub fn image(&self, g: Gen) -> &SkeinExpr {
        match g {
            Gen::Alpha => &self.image_alpha,
            Gen::Beta => &self.image_beta,
            Gen::Gamma => &self.image_gamma,
        }
    }

    /// Substitute the generator images into every word of `x`.
    pub fn apply(&self, x: &SkeinExpr) -> SkeinExpr {
        let mut out = SkeinExpr::zero();
        for (w, c) in x.iter() {
            let mut prod = SkeinExpr::one();
            for g in w {
                prod = prod.mul(self.image(*g));
            }
            out = out.add(&prod.scale(c));
        }
        out
    }

    /// Composition self o other: apply `other` first.
    pub fn compose(&self, other: &Endo) -> Endo {
        Endo {
            image_alpha: self.apply(&other.image_alpha),
            image_beta: self.apply(&other.image_beta),
            image_gamma: self.apply(&other.image_gamma),
        }
    }

    /// Equality of endomorphisms on generators, decided in the operator
    /// representation.
    pub fn equal_on_generators(&self, other: &Endo) -> bool {
        GENS.iter()
            .all(|&g| skein_equal(self.image(g), other.image(g)))
    }

    pub fn is_identity_on_generators(&self) -> bool {
        self.equal_on_generators(&Endo::identity())
    }

    /// Iterated composition with itself.
    pub fn iterate(&self, n: u32) -> Endo {
        let mut out = Endo::identity();
        for _ in 0..n {
            out = out.compose(self);
        }
        out
    }
}

fn a_pow(k: i64) -> Scalar {
    Scalar::s_pow(-k)
}

/// Inverse of a built-in symmetry. Candidates come from solving the
/// generator images against the crossing resolution (word length <= 2);
/// each candidate is verified by composing both ways, and None is returned
/// if verification fails.
pub fn builtin_inverse(which: BuiltinEndo) -> Option<Endo> {
    let e = builtin_endo(which);
    let candidate = match which {
        // involutions are their own inverses
        BuiltinEndo::Xi1 | BuiltinEndo::Xi2 | BuiltinEndo::Xi3 => e.clone(),
        BuiltinEndo::TauPlus => Endo {
            image_alpha: gen_expr(Gen::Alpha),
            image_beta: gen_expr(Gen::Gamma),
            image_gamma: SkeinExpr::from_word(&[Gen::Gamma, Gen::Alpha])
                .scale(&a_pow(-1))
                .sub(&gen_expr(Gen::Beta).scale(&a_pow(-2))),
        },
        BuiltinEndo::TauMinus => Endo {
            image_alpha: gen_expr(Gen::Gamma),
            image_beta: gen_expr(Gen::Beta),
            image_gamma: SkeinExpr::from_word(&[Gen::Beta, Gen::Gamma])
                .scale(&a_pow(-1))
                .sub(&gen_expr(Gen::Alpha).scale(&a_pow(-2))),
        },
        // sigma has order four, so its cube is a candidate inverse
        BuiltinEndo::Sigma => e.iterate(3),
    };
    let ok = e.compose(&candidate).is_identity_on_generators()
        && candidate.compose(&e).is_identity_on_generators();
    ok.then_some(candidate)
}

/// Apply the endomorphism to each defining relation and confirm the
/// operator identity still holds; substitution into a quotient algebra is
/// only a homomorphism if the relations are preserved.
pub fn check_well_defined(e: &Endo) -> CheckReport {
    timed_suite("well-defined", |report| {
        for (name, rel) in presentation_relations() {
            let image = e.apply(&rel);
            let op = skein_eval(&image);
            report.record(
                format!("preserves-{}", name),
                op.is_zero(),
                if op.is_zero() {
                    String::new()
                } else {
                    "relation not preserved".to_string()
                },
            );
        }
    })
}

/// The defining relations of the mapping class group action on generators:
/// sigma^4 = 1, (sigma tau_+)^3 = sigma^2, tau_- = tau_+ sigma^(-1) tau_+,
/// sigma = tau_+ tau_-^(-1) tau_+. Also reports whether sigma^2 acts as
/// the identity (observed, not quoted from a stated relation).
pub fn check_group_relations() -> CheckReport {
    timed_suite("group-relations", |report| {
        let sigma = builtin_endo(BuiltinEndo::Sigma);
        let tau_plus = builtin_endo(BuiltinEndo::TauPlus);
        let tau_minus = builtin_endo(BuiltinEndo::TauMinus);

        report.record(
            "sigma^4=id",
            sigma.iterate(4).is_identity_on_generators(),
            "",
        );

        let st = sigma.compose(&tau_plus);
        report.record(
            "(sigma*tau_plus)^3=sigma^2",
            st.iterate(3).equal_on_generators(&sigma.iterate(2)),
            "",
        );

        match builtin_inverse(BuiltinEndo::Sigma) {
            None => report.record(
                "tau_minus=tau_plus*sigma^-1*tau_plus",
                false,
                "inverse not constructed: sigma^3 failed verification",
            ),
            Some(sigma_inv) => {
                let rhs = tau_plus.compose(&sigma_inv.compose(&tau_plus));
                report.record(
                    "tau_minus=tau_plus*sigma^-1*tau_plus",
                    rhs.equal_on_generators(&tau_minus),
                    "",
                );
            }
        }

        match builtin_inverse(BuiltinEndo::TauMinus) {
            None => report.record(
                "sigma=tau_plus*tau_minus^-1*tau_plus",
                false,
                "inverse not constructed: candidate failed verification",
            ),
            Some(tau_minus_inv) => {
                let rhs = tau_plus.compose(&tau_minus_inv.compose(&tau_plus));
                report.record(
                    "sigma=tau_plus*tau_minus^-1*tau_plus",
                    rhs.equal_on_generators(&sigma),
                    "",
                );
            }
        }

        report.record(
            "sigma^2=id (observed)",
            sigma.iterate(2).is_identity_on_generators(),
            "not stated as a relation; recorded as an observation",
        );
    })
}

/// Each involution squares to the identity on all words up to the given
/// length.
pub fn check_involutions(max_len: usize) -> CheckReport {
    timed_suite("involutions", |report| {
        for which in INVOLUTIONS {
            let xi = builtin_endo(which);
            let mut ok = true;
            let mut witness = String::new();
            for w in words_up_to(max_len) {
                let e = SkeinExpr::from_word(&w);
                if !skein_equal(&xi.apply(&xi.apply(&e)), &e) {
                    ok = false;
                    witness = format!("fails on {:?}", w);
                    break;
                }
            }
            report.record(format!("{}^2=id", which.name()), ok, witness);
        }
    })
}

/// Symmetrizations w + xi(w) over all words of length <= max_len; every
/// returned element is xi-invariant, and zero symmetrizations are dropped.
pub fn invariant_sample(which: BuiltinEndo, max_len: usize) -> Vec<SkeinExpr> {
    let xi = builtin_endo(which);
    let mut out = Vec::new();
    for w in words_up_to(max_len) {
        let e = SkeinExpr::from_word(&w);
        let sym = e.add(&xi.apply(&e));
        if !sym.is_zero() {
            out.push(sym);
        }
    }
    out
}

/// The labeled arrows of the duality triangle between the three invariant
/// subalgebras: tau_+ exchanges the xi1 and xi3 subalgebras, sigma
/// exchanges xi1 and xi2, tau_- exchanges xi2 and xi3, and each of the
/// three maps fixes the remaining subalgebra.
pub fn duality_arrows() -> Vec<(BuiltinEndo, BuiltinEndo, BuiltinEndo)> {
    use BuiltinEndo::*;
    vec![
        (TauPlus, Xi1, Xi3),
        (TauPlus, Xi3, Xi1),
        (Sigma, Xi1, Xi2),
        (Sigma, Xi2, Xi1),
        (TauMinus, Xi2, Xi3),
        (TauMinus, Xi3, Xi2),
        (TauPlus, Xi2, Xi2),
        (TauMinus, Xi1, Xi1),
        (Sigma, Xi3, Xi3),
    ]
}

/// For every arrow g: xi_i -> xi_j of the duality triangle, check that the
/// image of every xi_i-invariant sample is xi_j-invariant.
pub fn check_duality_diagram(max_len: usize) -> CheckReport {
    assert!(max_len >= 2, "sample length must be at least 2");
    timed_suite("duality-diagram", |report| {
        for (g, from, to) in duality_arrows() {
            let map = builtin_endo(g);
            let target = builtin_endo(to);
            let samples = invariant_sample(from, max_len);
            let mut ok = true;
            let mut witness = String::new();
            for e in &samples {
                let image = map.apply(e);
                if !skein_equal(&target.apply(&image), &image) {
                    ok = false;
                    witness = format!("image of {} is not {}-invariant", e, to.name());
                    break;
                }
            }
            report.record(
                format!("{}:{}->{}", g.name(), from.name(), to.name()),
                ok,
                if ok {
                    format!("{} samples", samples.len())
                } else {
                    witness
                },
            );
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qdiff::op_equal;
    use crate::skein::phi_gamma;

    #[test]
    fn builtin_images() {
        let tp = builtin_endo(BuiltinEndo::TauPlus);
        assert!(skein_equal(&tp.image_beta, &gamma_expr(-1)));
        assert!(skein_equal(&tp.image_gamma, &gen_expr(Gen::Beta)));
        let x3 = builtin_endo(BuiltinEndo::Xi3);
        assert!(skein_equal(&x3.image_gamma, &gen_expr(Gen::Gamma)));
        let s = builtin_endo(BuiltinEndo::Sigma);
        assert!(skein_equal(&s.image_alpha, &gen_expr(Gen::Beta)));
    }

    #[test]
    fn sign_cancellation() {
        // xi1(ac) = (-a)(-c) = ac
        let x1 = builtin_endo(BuiltinEndo::Xi1);
        let ac = SkeinExpr::from_word(&[Gen::Alpha, Gen::Gamma]);
        assert_eq!(x1.apply(&ac), ac);
        // xi2(b) = -b
        let x2 = builtin_endo(BuiltinEndo::Xi2);
        assert_eq!(x2.apply(&gen_expr(Gen::Beta)), gen_expr(Gen::Beta).neg());
    }

    #[test]
    fn tau_plus_maps_gamma_to_beta() {
        let tp = builtin_endo(BuiltinEndo::TauPlus);
        assert!(skein_equal(
            &tp.apply(&gen_expr(Gen::Gamma)),
            &gen_expr(Gen::Beta)
        ));
    }

    #[test]
    fn xi1_xi2_compose_to_xi3() {
        let x1 = builtin_endo(BuiltinEndo::Xi1);
        let x2 = builtin_endo(BuiltinEndo::Xi2);
        let x3 = builtin_endo(BuiltinEndo::Xi3);
        assert!(x1.compose(&x2).equal_on_generators(&x3));
    }

    #[test]
    fn z_prime_identification() {
        // the expanded gamma_{-1} image matches the closed operator form
        assert!(op_equal(&skein_eval(&gamma_expr(-1)), &phi_gamma(-1)));
    }

    #[test]
    fn inverses_verify() {
        for which in BUILTINS {
            assert!(builtin_inverse(which).is_some(), "{}", which.name());
        }
    }

    #[test]
    fn well_definedness_of_builtins() {
        for which in BUILTINS {
            let report = check_well_defined(&builtin_endo(which));
            assert!(report.passed(), "{}: {}", which.name(), report);
        }
    }

    #[test]
    fn fake_endo_fails_well_definedness() {
        // alpha -> alpha, beta -> beta, gamma -> beta violates the
        // commutator relation
        let fake = Endo {
            image_alpha: gen_expr(Gen::Alpha),
            image_beta: gen_expr(Gen::Beta),
            image_gamma: gen_expr(Gen::Beta),
        };
        assert!(!check_well_defined(&fake).passed());
    }

    #[test]
    fn group_relations_hold() {
        let report = check_group_relations();
        assert!(report.passed(), "{}", report);
    }

    #[test]
    fn involutions_square_to_identity() {
        let report = check_involutions(2);
        assert!(report.passed(), "{}", report);
    }

    #[test]
    fn invariant_samples_are_invariant() {
        for which in INVOLUTIONS {
            let xi = builtin_endo(which);
            for e in invariant_sample(which, 2) {
                assert!(skein_equal(&xi.apply(&e), &e));
            }
        }
        // odd words symmetrize to zero and are filtered
        let xs = invariant_sample(BuiltinEndo::Xi1, 1);
        assert!(xs.iter().all(|e| !e.is_zero()));
    }

    #[test]
    fn duality_samples_small() {
        let report = check_duality_diagram(2);
        assert!(report.passed(), "{}", report);
    }

    #[test]
    fn diagram_coherence_tau_plus_round_trip() {
        // tau_+ applied twice along xi1 -> xi3 -> xi1 equals tau_+^2;
        // substitution is a homomorphism, so the two routes agree as
        // formal expressions, before any operator evaluation
        let tp = builtin_endo(BuiltinEndo::TauPlus);
        let tp2 = tp.compose(&tp);
        for e in invariant_sample(BuiltinEndo::Xi1, 3) {
            assert_eq!(tp.apply(&tp.apply(&e)), tp2.apply(&e));
        }
    }
}
