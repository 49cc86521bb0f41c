use proptest::prelude::*;

use darboux_lab::algebra::{parse_rational, rat, BiPoly, Rational, UniPoly};
use darboux_lab::darboux::{audit_family, cll_curve_set, verify_invariance, CurveMode, Status};
use darboux_lab::factory::QuadraticSystem;
use darboux_lab::formats::{
    decode, encode, ArtifactDocument, CertificateDocument, CurveDocument, DriftDocument, Payload, SystemDocument,
};
use darboux_lab::numeric::{DriftReport, SeedDrift, Termination};
use darboux_lab::operators::{Family, FamilySpec};
use darboux_lab::Error;

fn rational() -> impl Strategy<Value = Rational> {
    (-1_000_000i64..=1_000_000, 1i64..=1000).prop_map(|(p, q)| rat(p, q))
}

fn unipoly(max_len: usize) -> impl Strategy<Value = UniPoly> {
    proptest::collection::vec(rational(), 0..=max_len).prop_map(UniPoly::new)
}

fn round_trip(doc: &ArtifactDocument) -> ArtifactDocument {
    decode(&encode(doc).unwrap()).unwrap()
}

proptest! {
    #[test]
    fn system_round_trip(p2 in unipoly(3), q1 in unipoly(2), q2 in unipoly(3)) {
        let sys = QuadraticSystem::new(p2, q1, q2).unwrap();
        let doc = ArtifactDocument::new(Payload::System(SystemDocument::from_system(sys, None, false)));
        prop_assert_eq!(round_trip(&doc), doc);
    }

    #[test]
    fn curve_round_trip(terms in proptest::collection::vec((0u32..6, 0u32..6, rational()), 0..12), a0 in unipoly(6)) {
        let g = BiPoly::from_terms(terms);
        let doc = ArtifactDocument::new(Payload::Curve(CurveDocument { g, a0: Some(a0), n: Some(3), cofactor: None }));
        prop_assert_eq!(round_trip(&doc), doc);
    }

    #[test]
    fn drift_round_trip_is_bit_exact(values in proptest::collection::vec(proptest::num::f64::NORMAL | proptest::num::f64::SUBNORMAL | proptest::num::f64::ZERO, 4)) {
        let report = DriftReport {
            label: "x".into(),
            h: values[0],
            horizon: 2.0,
            window: Some(values[1]),
            tolerance: 1e-6,
            seeds: vec![SeedDrift {
                x0: values[2],
                y0: -0.0,
                drift: Some(values[3]),
                samples_used: 7,
                t_measured: 0.1 + 0.2,
                termination: Termination::LeftDomain,
                skipped: None,
            }],
            evaluated: 1,
            verdict: Status::Fail,
        };
        let doc = ArtifactDocument::new(Payload::Drift(DriftDocument::Single(report)));
        let back = round_trip(&doc);
        let (Payload::Drift(DriftDocument::Single(a)), Payload::Drift(DriftDocument::Single(b))) = (&doc.payload, &back.payload) else {
            panic!("kind changed");
        };
        prop_assert_eq!(a.h.to_bits(), b.h.to_bits());
        prop_assert_eq!(a.window.unwrap().to_bits(), b.window.unwrap().to_bits());
        prop_assert_eq!(a.seeds[0].x0.to_bits(), b.seeds[0].x0.to_bits());
        prop_assert_eq!(a.seeds[0].y0.to_bits(), b.seeds[0].y0.to_bits());
        prop_assert_eq!(a.seeds[0].drift.unwrap().to_bits(), b.seeds[0].drift.unwrap().to_bits());
        prop_assert_eq!(back, doc);
    }
}

#[test]
fn structured_kinds_round_trip() {
    let set = cll_curve_set(&rat(-4, 1), &rat(5, 2), &rat(1, 3), CurveMode::Holonomic).unwrap();
    let doc = ArtifactDocument::new(Payload::DarbouxSet(set));
    assert_eq!(round_trip(&doc), doc);

    let reports = audit_family(&FamilySpec::new(Family::HermiteLike { n: 1 }, rat(1, 2), rat(-1, 3)), 1..=3).unwrap();
    let doc = ArtifactDocument::new(Payload::Audit(reports));
    assert_eq!(round_trip(&doc), doc);

    let sys = QuadraticSystem::new(UniPoly::one(), UniPoly::from_ints(&[0, -1]), UniPoly::from_ints(&[2])).unwrap();
    let g = BiPoly::from_terms([(1, 1, rat(1, 1)), (2, 0, rat(-1, 1)), (0, 0, rat(1, 1))]);
    let cert = verify_invariance(&sys.field(), &g, None).unwrap();
    let spec = FamilySpec::new(Family::HermiteLike { n: 1 }, rat(0, 1), rat(0, 1));
    let doc = ArtifactDocument::new(Payload::Certificate(CertificateDocument {
        system: Some(SystemDocument::from_system(sys, Some(spec), false)),
        curve: Some(CurveDocument { g, a0: None, n: None, cofactor: None }),
        certificate: cert,
    }));
    assert_eq!(round_trip(&doc), doc);
}

#[test]
fn rational_strings() {
    assert_eq!(parse_rational("-3/4").unwrap(), rat(-3, 4));
    assert!(parse_rational("6/-8").is_err());
    assert!(matches!(parse_rational("3/0"), Err(Error::Parse { .. })));
}

fn curve_doc_with(key: &str, value: &str) -> String {
    format!("{{\n  \"format_version\": 1,\n  \"kind\": \"curve\",\n  \"payload\": {{\n    \"g\": {{ \"{key}\": \"{value}\" }}\n  }}\n}}\n")
}

#[test]
fn malformed_documents_report_a_location() {
    for (key, value) in [("1,0", "3/0"), ("1;0", "1"), ("1,0", "x"), ("-1,0", "2")] {
        let err = decode(&curve_doc_with(key, value)).unwrap_err();
        let Error::Parse { location, .. } = err else { panic!("{err:?}") };
        assert!(location.starts_with("line "), "{location}");
    }
    let err = decode("{\"format_version\": 9, \"kind\": \"curve\", \"payload\": {\"g\": {}}}").unwrap_err();
    assert!(matches!(err, Error::Parse { .. }));
    assert!(matches!(decode("[1, 2"), Err(Error::Parse { .. })));
}

#[test]
fn rationals_are_reduced_strings() {
    let g = BiPoly::from_terms([(0, 0, rat(6, -8)), (1, 2, rat(4, 2))]);
    let text = encode(&ArtifactDocument::new(Payload::Curve(CurveDocument { g, a0: None, n: None, cofactor: None }))).unwrap();
    assert!(text.contains("\"0,0\": \"-3/4\""), "{text}");
    assert!(text.contains("\"1,2\": \"2\""));
}
