use loopring::algebra::HilbertSeries;
use loopring::catalog::{
    catalog_space, cohomology, integral_presentation, splitting_series, CatalogCase,
};
use loopring::envelope::{rank_compare, Verdict};
use loopring::pipeline::{
    parse_spec, run_pipeline, PipelineOptions, PipelineReport, RingSelection, SpecInput,
};

fn verify(case: CatalogCase, bound: u32, ring: RingSelection) -> PipelineReport {
    let options = PipelineOptions {
        degree_bound: bound,
        verify: true,
        ring,
        ..PipelineOptions::default()
    };
    run_pipeline(&SpecInput::Catalog(case), &options).unwrap()
}

fn names_and_degrees(gens: &[loopring::algebra::GradedGenerator]) -> Vec<(String, u32)> {
    gens.iter()
        .map(|g| (g.name().to_string(), g.degree()))
        .collect()
}

fn owned(pairs: &[(&str, u32)]) -> Vec<(String, u32)> {
    pairs.iter().map(|(n, d)| (n.to_string(), *d)).collect()
}

#[test]
fn su3_over_circle_loop_series() {
    let r = verify(CatalogCase::SuOdd { n: 1 }, 12, RingSelection::Both);
    assert_eq!(
        r.series.unwrap().coeffs(),
        &[1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3, 4]
    );
    assert!(
        r.verdicts.iter().all(|(_, v)| *v == Verdict::Match),
        "{:?}",
        r.verdicts
    );
}

#[test]
fn su3_over_circle_cohomology() {
    let c = cohomology(CatalogCase::SuOdd { n: 1 }).unwrap();
    assert_eq!(names_and_degrees(c.generators()), owned(&[("x1", 2)]));
    assert_eq!(c.relations().len(), 1);
    assert_eq!(c.relations()[0].to_string(), "x1^2");
    assert_eq!(names_and_degrees(c.exterior()), owned(&[("z1", 5)]));
    assert_eq!(c.series(9).coeffs(), &[1, 0, 1, 0, 0, 1, 0, 1, 0, 0]);
}

#[test]
fn so8_cohomology_and_brackets() {
    let c = cohomology(CatalogCase::So8).unwrap();
    let rels: Vec<String> = c.relations().iter().map(ToString::to_string).collect();
    assert_eq!(
        rels,
        ["x1^2 + x1*x2 + x2^2", "x1^4*x2^2 + 2*x1^3*x2^3 + x1^2*x2^4"]
    );
    assert_eq!(
        c.exterior().iter().map(|g| g.degree()).collect::<Vec<_>>(),
        [7, 7]
    );

    let r = verify(CatalogCase::So8, 12, RingSelection::Rational);
    let show: Vec<String> = r
        .brackets
        .iter()
        .map(|b| {
            format!(
                "[{},{}]={:?}",
                b.left,
                b.right,
                b.value.iter().collect::<Vec<_>>()
            )
        })
        .collect();
    assert_eq!(
        show,
        [
            r#"[a1,a1]=[("b1", "2")]"#,
            r#"[a1,a2]=[("b1", "1")]"#,
            r#"[a2,a2]=[("b1", "2")]"#
        ]
    );
    assert_eq!(r.verdicts.golden, Verdict::Match);
}

#[test]
fn partial_flag_has_no_exterior_part() {
    let c = cohomology(CatalogCase::APartial { n: 4, k: 2 }).unwrap();
    assert_eq!(c.relation_degrees(), [6, 8]);
    assert!(c.exterior().is_empty());
}

#[test]
fn rational_loop_generators() {
    let so6 = catalog_space(CatalogCase::SoEven { n: 2 }).unwrap();
    assert_eq!(
        names_and_degrees(so6.expected_rational.generators()),
        owned(&[("a1", 1), ("a2", 1), ("b2", 6), ("b3", 4)])
    );
    let e6 = catalog_space(CatalogCase::E6T4).unwrap();
    let degrees: Vec<u32> = e6
        .expected_rational
        .generators()
        .iter()
        .map(|g| g.degree())
        .collect();
    assert_eq!(degrees, [1, 1, 1, 1, 8, 10, 14, 16, 22]);
    let partial = catalog_space(CatalogCase::APartial { n: 5, k: 3 }).unwrap();
    assert_eq!(
        names_and_degrees(partial.expected_rational.generators()),
        owned(&[
            ("a1", 1),
            ("a2", 1),
            ("a3", 1),
            ("b3", 4),
            ("b4", 6),
            ("b5", 8)
        ])
    );
}

#[test]
fn integral_generators() {
    let su5 = integral_presentation(CatalogCase::SuOdd { n: 2 }).unwrap();
    assert_eq!(
        names_and_degrees(su5.generators()),
        owned(&[("x1", 1), ("x2", 1), ("y2", 6), ("z1", 4), ("z2", 8)])
    );
    let e6 = integral_presentation(CatalogCase::E6T4).unwrap();
    let rels: Vec<String> = e6.relations().iter().map(ToString::to_string).collect();
    assert!(rels.contains(&"x1*x1 - 12*y1".to_string()), "{rels:?}");
    let partial = integral_presentation(CatalogCase::APartial { n: 4, k: 2 }).unwrap();
    assert_eq!(
        names_and_degrees(partial.generators()),
        owned(&[("x1", 1), ("x2", 1), ("y3", 4), ("y4", 6)])
    );
}

#[test]
fn integral_ranks_agree_with_rational_ranks() {
    for case in [CatalogCase::SuOdd { n: 1 }, CatalogCase::So8] {
        let spec = catalog_space(case).unwrap();
        let cmp = rank_compare(
            &integral_presentation(case).unwrap(),
            &spec.expected_rational,
            12,
        )
        .unwrap();
        assert_eq!(cmp.verdict, Verdict::Match, "{case}");
    }
}

#[test]
fn e6_pbw_match_at_sixteen() {
    let r = verify(CatalogCase::E6T4, 16, RingSelection::Rational);
    assert_eq!(r.verdicts.pbw, Verdict::Match);
    assert_eq!(r.verdicts.golden, Verdict::Match);
}

#[test]
fn partial_flag_splitting_series() {
    let mut expected = HilbertSeries::one(12);
    expected.mul_one_plus(1);
    expected.mul_one_plus(1);
    expected.div_one_minus(4);
    expected.div_one_minus(6);
    assert_eq!(
        splitting_series(CatalogCase::APartial { n: 4, k: 2 }, 12).unwrap(),
        expected
    );

    let mut expected = HilbertSeries::one(10);
    expected.mul_one_plus(1);
    expected.div_one_minus(4);
    assert_eq!(
        splitting_series(CatalogCase::APartial { n: 3, k: 1 }, 10).unwrap(),
        expected
    );
}

#[test]
fn pipeline_is_deterministic() {
    for case in CatalogCase::standard() {
        let mut a = verify(case, 14, RingSelection::Both);
        let mut b = verify(case, 14, RingSelection::Both);
        a.timings.clear();
        b.timings.clear();
        assert_eq!(a, b, "{case}");
        assert_eq!(a.to_string(), b.to_string(), "{case}");
    }
}

#[test]
fn catalog_spec_line_dispatches() {
    assert_eq!(
        parse_spec("space SU_odd n=2\n").unwrap(),
        SpecInput::Catalog(CatalogCase::SuOdd { n: 2 })
    );
    assert_eq!(
        parse_spec("# comment\nspace A_partial n=4 k=2").unwrap(),
        SpecInput::Catalog(CatalogCase::APartial { n: 4, k: 2 })
    );
}
