use std::collections::HashMap;

use num::BigInt;
use proptest::prelude::*;

use loopring::algebra::{substitute, Polynomial, SubstitutionMode, VarContext, Vars};
use loopring::catalog::{
    catalog_space, e6_restricted_invariants, so8_restricted_invariants, CatalogCase,
};
use loopring::envelope::{
    enveloping, newton_sigma_from_y, newton_y_from_sigma, BasisKind, CoefficientRing, NcPoly,
    RewriteSystem, SymmetricFunctionVector, Word,
};
use loopring::ideal::{cartan_reduce, groebner_basis, is_member, MonomialOrder};
use loopring::sullivan::{build_formal_model, homotopy_lie_named, LieAlgebraData, ModelFragment};
use loopring::Rational;

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=5).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=12, 1i64..=5, any::<bool>()).prop_map(|(n, d, neg)| {
        Rational::new(BigInt::from(if neg { -n } else { n }), BigInt::from(d))
    })
}

fn context(names: &[&str]) -> VarContext {
    Vars::uniform(names, 2).unwrap()
}

fn polynomial(vars: VarContext) -> impl Strategy<Value = Polynomial> {
    let n = vars.len();
    prop::collection::vec((rational(), prop::collection::vec(0u32..=3, n)), 0..6)
        .prop_map(move |terms| Polynomial::from_terms(&vars, terms))
}

fn spec_model(case: CatalogCase) -> (ModelFragment, LieAlgebraData) {
    let spec = catalog_space(case).unwrap();
    let model = build_formal_model(&spec.cohomology).unwrap();
    let lie = homotopy_lie_named(&model, &spec.lie_names).unwrap();
    (model, lie)
}

fn small_cases() -> Vec<CatalogCase> {
    vec![
        CatalogCase::SuOdd { n: 2 },
        CatalogCase::SuEven { n: 2 },
        CatalogCase::SoEven { n: 2 },
        CatalogCase::So8,
        CatalogCase::E6T4,
        CatalogCase::APartial { n: 4, k: 2 },
    ]
}

fn same_ideal(a: &[Polynomial], b: &[Polynomial]) -> bool {
    let Some(first) = a.first().or(b.first()) else {
        return true;
    };
    let vars = first.vars().clone();
    let ga = groebner_basis(&vars, a.to_vec(), MonomialOrder::GradedRevLex).unwrap();
    let gb = groebner_basis(&vars, b.to_vec(), MonomialOrder::GradedRevLex).unwrap();
    a.iter().all(|p| is_member(p, &gb).unwrap()) && b.iter().all(|p| is_member(p, &ga).unwrap())
}

fn so8_rewrite() -> RewriteSystem {
    let (_, lie) = spec_model(CatalogCase::So8);
    enveloping(&lie).unwrap().rewrite_system(14).unwrap()
}

fn nc_poly(sys: &RewriteSystem) -> impl Strategy<Value = NcPoly> {
    let alphabet = sys.alphabet().clone();
    let letters = alphabet.len() as u16;
    prop::collection::vec((rational(), prop::collection::vec(0..letters, 0..5)), 0..5).prop_map(
        move |terms| {
            terms
                .into_iter()
                .fold(NcPoly::zero(&alphabet), |acc, (c, w)| {
                    acc.add(&NcPoly::word(&alphabet, Word::new(&alphabet, w)).scale(&c))
                })
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_ring_laws(
        (p, q, r) in {
            let v = context(&["x", "y", "z"]);
            (polynomial(v.clone()), polynomial(v.clone()), polynomial(v))
        }
    ) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &Polynomial::one(p.vars()), p.clone());
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(
        (p, q, images) in {
            let source = context(&["x", "y"]);
            let target = context(&["a", "b", "c"]);
            (polynomial(source.clone()), polynomial(source), prop::collection::vec(polynomial(target), 2))
        }
    ) {
        let target = images[0].vars().clone();
        let assignment: HashMap<String, Polynomial> =
            ["x", "y"].iter().map(|s| s.to_string()).zip(images).collect();
        let f = |p: &Polynomial| substitute(p, &assignment, &target, SubstitutionMode::Ungraded).unwrap();
        prop_assert_eq!(f(&(&p + &q)), f(&p) + f(&q));
        prop_assert_eq!(f(&(&p * &q)), f(&p) * f(&q));
        prop_assert_eq!(f(&Polynomial::one(p.vars())), Polynomial::one(&target));
    }

    #[test]
    fn noncommutative_normal_form_is_idempotent(p in nc_poly(&so8_rewrite())) {
        let sys = so8_rewrite();
        let once = sys.reduce(&p);
        prop_assert_eq!(sys.reduce(&once), once.clone());
        prop_assert!(once.terms().all(|(w, _)| sys.is_normal(w)));
    }

    #[test]
    fn cartan_reduction_ignores_input_order(
        perm in Just((0..6).collect::<Vec<usize>>()).prop_shuffle(),
        e6 in any::<bool>(),
    ) {
        let (ambient, invariants) = if e6 { e6_restricted_invariants() } else { so8_restricted_invariants() }.unwrap();
        let reference = cartan_reduce(&invariants, &ambient).unwrap();
        let shuffled: Vec<_> = perm.iter().filter_map(|&i| invariants.get(i).cloned()).collect();
        let reduced = cartan_reduce(&shuffled, &ambient).unwrap();
        let mut a = reference.exterior_degrees.clone();
        let mut b = reduced.exterior_degrees.clone();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
        prop_assert!(same_ideal(&reference.relations(), &reduced.relations()));
    }

    #[test]
    fn pairing_is_bilinear(
        (p, q) in {
            let v = context(&["x1", "x2", "x3"]);
            (polynomial(v.clone()), polynomial(v))
        },
        a in rational(),
        b in rational(),
        i in 0usize..3,
        j in 0usize..3,
    ) {
        let (model, _) = spec_model(CatalogCase::SuOdd { n: 3 });
        let quad = |p: &Polynomial| p.word_length_component(2).embed(model.u_vars()).unwrap();
        let (p, q) = (quad(&p), quad(&q));
        let names = ["x1", "x2", "x3"];
        let args = [names[i], names[j]];
        let eval = |p: &Polynomial| model.pairing_eval_poly(p, &args).unwrap();
        let combined = &p.scale(&a) + &q.scale(&b);
        prop_assert_eq!(eval(&combined), a * eval(&p) + b * eval(&q));
    }

    #[test]
    fn rescaling_the_bracket_preserves_the_series(case in 0usize..6, lambda in nonzero_rational()) {
        let (_, lie) = spec_model(small_cases()[case]);
        let reference = enveloping(&lie).unwrap().normal_counts(12).unwrap();
        let scaled = enveloping(&lie.scaled(&lambda)).unwrap().normal_counts(12).unwrap();
        prop_assert_eq!(scaled, reference);
    }

    #[test]
    fn newton_identities_roundtrip(entries in prop::collection::vec(rational(), 1..=8)) {
        let m = entries.len();
        let y = SymmetricFunctionVector::new(BasisKind::Y, entries);
        let sigma = newton_sigma_from_y(&y, m).unwrap();
        prop_assert_eq!(newton_y_from_sigma(&sigma, m, CoefficientRing::Rational).unwrap(), y);
    }
}
