//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero on any failure.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use darboux_lab::algebra::{int, rat, BiPoly, Rational, UniPoly, Var};
use darboux_lab::darboux::{
    audit_family, audit_member, cll_curve_set, extract_cofactor, standard_sweep, sweep, CurveMode, Status,
};
use darboux_lab::factory::{
    build_invariant_curve, cll_special_system, derive_system, pencil_system, CofactorLine, PencilSpec, VectorField,
};
use darboux_lab::formats::{encode, ArtifactDocument, DriftDocument, Payload};
use darboux_lab::numeric::{ambiguity_report, drift_report, standard_seeds, DriftConfig, DriftReport, FirstIntegralSpec};
use darboux_lab::operators::{classical_generator, Family, FamilySpec, SturmOperator};

const AC1_DEGREE: u32 = 25;
const AC1_BUDGET: Duration = Duration::from_secs(30);
const AC2_GENERATOR_DEGREE: u32 = 20;
const AC3_DEGREE: u32 = 25;
const AC4_STEP: f64 = 1e-3;
const AC4_HORIZON: f64 = 2.0;
const AC4_TOL: f64 = 1e-6;
const AC4_MIN_SEEDS: usize = 10;
const AC4_RATIO: (f64, f64) = (8.0, 32.0);
const AC4_BUDGET: Duration = Duration::from_secs(10);
const AC5_DEGREE: u32 = 25;
const AC6_CASES: usize = 100;
const AC6_COEFF: i64 = 5;
const AC7_TOL: f64 = 1e-5;

struct Line {
    id: &'static str,
    ok: bool,
    detail: String,
}

fn line(id: &'static str, ok: bool, detail: impl Into<String>) -> Line {
    Line {
        id,
        ok,
        detail: detail.into(),
    }
}

fn ac1_ac2() -> Vec<Line> {
    let start = Instant::now();
    let specs = standard_sweep(AC1_DEGREE);
    let cells = match sweep(&specs) {
        Ok(c) => c,
        Err(e) => {
            return vec![
                line("AC1", false, format!("sweep error: {e}")),
                line("AC2", false, "sweep error"),
            ]
        }
    };
    let elapsed = start.elapsed();
    let certified = cells
        .iter()
        .filter(|c| c.invariance == Status::Pass && c.cofactor_matches && c.curve_degree == Some(c.degree + 1))
        .count();
    let ac1 = certified == 300 && cells.len() == 300 && elapsed <= AC1_BUDGET;
    let solves = cells.iter().filter(|c| c.kernel_solves).count();
    let proportional = cells
        .iter()
        .filter(|c| c.degree <= AC2_GENERATOR_DEGREE)
        .filter(|c| c.matches_generator)
        .count();
    let expected_prop = cells.iter().filter(|c| c.degree <= AC2_GENERATOR_DEGREE).count();
    let ac2 = solves == cells.len() && proportional == expected_prop;
    vec![
        line(
            "AC1",
            ac1,
            format!(
                "arbitrary-degree invariance: {certified}/{} bundles certified (residual 0, K = y + beta x + gamma, deg g = n + 1) in {:.2?} (budget {:?})",
                cells.len(),
                elapsed,
                AC1_BUDGET
            ),
        ),
        line(
            "AC2",
            ac2,
            format!(
                "kernel correctness: {solves}/{} kernel elements annihilated; {proportional}/{expected_prop} proportional to the closed forms for n <= {AC2_GENERATOR_DEGREE}",
                cells.len()
            ),
        ),
    ]
}

fn ac3() -> (Line, Vec<String>) {
    let mut info = Vec::new();
    let lines = [(int(0), int(0)), (int(1), int(0)), (rat(-1, 2), rat(1, 3))];
    let clean_bases = [
        Family::Hypergeometric {
            a: int(-1),
            b: rat(5, 2),
            c: rat(1, 3),
        },
        Family::Jacobi {
            a: rat(1, 2),
            b: int(0),
            n: 1,
        },
        Family::Laguerre { a: int(2), n: 1 },
    ];
    let mut clean = 0;
    let mut clean_total = 0;
    for base in &clean_bases {
        for (b, g) in &lines {
            let Ok(reports) = audit_family(&FamilySpec::new(base.clone(), b.clone(), g.clone()), 1..=AC3_DEGREE) else {
                return (line("AC3", false, "audit error"), info);
            };
            clean_total += reports.len();
            clean += reports
                .iter()
                .filter(|r| r.coefficient_diffs.is_empty() && r.literal_invariance == Status::Pass)
                .count();
        }
    }
    let expected: BTreeSet<String> = ["q20", "q21"].into_iter().map(String::from).collect();
    let Ok(hermite) = audit_family(&FamilySpec::new(Family::HermiteLike { n: 1 }, int(0), rat(1, 3)), 1..=AC3_DEGREE)
    else {
        return (line("AC3", false, "audit error"), info);
    };
    let hermite_ok = hermite.iter().all(|r| {
        r.coefficient_diffs.keys().cloned().collect::<BTreeSet<_>>() == expected && r.literal_invariance == Status::Fail
    });
    let first = audit_member(&FamilySpec::new(Family::HermiteLike { n: 1 }, int(0), int(0)));
    let residual_ok = first
        .as_ref()
        .map(|r| r.literal_invariance == Status::Fail && r.literal_residual == BiPoly::x().scale(&int(2)))
        .unwrap_or(false);
    if let Ok(tilted) = audit_member(&FamilySpec::new(Family::HermiteLike { n: 1 }, int(1), rat(1, 3))) {
        info.push(format!(
            "AC3 hermite display at beta = 1, gamma = 1/3 differs in {:?}",
            tilted.coefficient_diffs.keys().collect::<Vec<_>>()
        ));
    }
    let ok = clean == clean_total && hermite_ok && residual_ok;
    (
        line(
            "AC3",
            ok,
            format!(
                "audit: {clean}/{clean_total} hypergeometric/jacobi/laguerre members agree exactly; hermite diffs exactly {{q20, q21}} with invariance failing for n = 1..={AC3_DEGREE} at beta = 0, gamma = 1/3: {hermite_ok}; residual 2x at n = 1, beta = gamma = 0: {residual_ok}"
            ),
        ),
        info,
    )
}

fn measured(r: &DriftReport) -> Vec<Option<f64>> {
    r.seeds.iter().map(|s| s.drift).collect()
}

fn ac4() -> (Line, Vec<String>) {
    let mut info = Vec::new();
    let start = Instant::now();
    let (a, b, c) = (int(-4), rat(5, 2), rat(1, 3));
    let set = match cll_curve_set(&a, &b, &c, CurveMode::Holonomic) {
        Ok(s) => s,
        Err(e) => return (line("AC4", false, format!("curve set error: {e}")), info),
    };
    let relation = set.relation_holds();
    let exps: Vec<String> = set.exponents.iter().map(|e| e.to_string()).collect();
    let spec = FirstIntegralSpec::from_darboux("darboux", &set).expect("first-integral mode");
    let config = DriftConfig {
        h: AC4_STEP,
        horizon: AC4_HORIZON,
        tol: AC4_TOL,
        ..DriftConfig::default()
    };
    let half = DriftConfig {
        h: AC4_STEP / 2.0,
        ..config.clone()
    };
    let seeds = standard_seeds();
    let (Ok(coarse), Ok(fine)) = (
        drift_report(&set.field, &spec, &seeds, &config),
        drift_report(&set.field, &spec, &seeds, &half),
    ) else {
        return (line("AC4", false, "drift error"), info);
    };
    let elapsed = start.elapsed();
    let ratios: Vec<f64> = measured(&coarse)
        .into_iter()
        .zip(measured(&fine))
        .filter_map(|(a, b)| Some(a? / b?))
        .collect();
    let ratio_ok = !ratios.is_empty() && ratios.iter().all(|r| (AC4_RATIO.0..=AC4_RATIO.1).contains(r));
    let (rmin, rmax) = ratios
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| (lo.min(*r), hi.max(*r)));
    let ok = relation
        && coarse.verdict == Status::Pass
        && coarse.evaluated >= AC4_MIN_SEEDS
        && ratio_ok
        && elapsed <= AC4_BUDGET;
    let full = DriftConfig {
        window: None,
        ..config.clone()
    };
    if let Ok(r) = drift_report(&set.field, &spec, &seeds, &full) {
        info.push(format!(
            "AC4 drift over whole trajectories (to the |y| > 1e6 stop): max {:.3e}; window exits by t = {:.3}; terminations {:?}",
            r.max_drift().unwrap_or(f64::NAN),
            coarse.seeds.iter().map(|s| s.t_measured).fold(0.0, f64::max),
            r.seeds.iter().map(|s| s.termination).collect::<BTreeSet<_>>()
        ));
    }
    (
        line(
            "AC4",
            ok,
            format!(
                "Darboux relation: exponents [{}] exact = {relation}; drift max {:.3e} over {} seeds (|y| <= {}, h = {AC4_STEP}, tol {AC4_TOL:e}); h-halving ratios in [{rmin:.2}, {rmax:.2}] (need [{}, {}]); {:.2?}",
                exps.join(", "),
                coarse.max_drift().unwrap_or(f64::NAN),
                coarse.evaluated,
                coarse.window.unwrap_or(f64::INFINITY),
                AC4_RATIO.0,
                AC4_RATIO.1,
                elapsed
            ),
        ),
        info,
    )
}

fn ac5() -> Line {
    let lines = [(int(0), int(0)), (int(1), int(0)), (rat(-1, 2), rat(1, 3)), (rat(7, 3), int(-2))];
    let mut ok_count = 0;
    let mut total = 0;
    for n in 1..=AC5_DEGREE {
        let Ok(op) = SturmOperator::hermite_like(n) else { continue };
        for (beta, gamma) in &lines {
            total += 1;
            let k = CofactorLine::new(beta.clone(), gamma.clone());
            let Ok(sys) = derive_system(&op, &k) else { continue };
            let Ok(a0) = classical_generator(&FamilySpec::new(Family::HermiteLike { n }, beta.clone(), gamma.clone()))
            else {
                continue;
            };
            let Ok(bundle) = build_invariant_curve(&a0, &sys, &k) else { continue };
            let lin = BiPoly::y() + BiPoly::from_x_poly(&UniPoly::linear(beta - int(1), gamma.clone()));
            let riccati = &lin * &BiPoly::from_x_poly(&a0) + BiPoly::from_x_poly(&a0.derivative());
            if riccati == bundle.g {
                ok_count += 1;
            }
        }
    }
    line(
        "AC5",
        ok_count == total,
        format!("Hermite Riccati form: {ok_count}/{total} curves equal (y + (beta-1)x + gamma) a0 + a0' for n <= {AC5_DEGREE}"),
    )
}

fn pencil_poly() -> impl Strategy<Value = BiPoly> {
    proptest::collection::vec(-AC6_COEFF..=AC6_COEFF, 6).prop_map(|c| {
        let mons = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)];
        BiPoly::from_terms(mons.iter().zip(c).map(|(&(i, j), v)| (i, j, int(v))))
    })
}

fn ac6() -> Line {
    let mut runner = TestRunner::new_with_rng(Config::default(), TestRng::from_seed(RngAlgorithm::ChaCha, &[42; 32]));
    let strat = (pencil_poly(), pencil_poly(), pencil_poly(), pencil_poly());
    let mut ok = 0;
    let mut total = 0;
    while total < AC6_CASES {
        let (g, nu, l1, l2) = strat.new_tree(&mut runner).expect("strategy").current();
        if g.is_constant() {
            continue;
        }
        total += 1;
        let spec = PencilSpec::new(g.clone(), nu, l1.clone(), l2.clone()).expect("nonconstant g");
        let (p, q) = pencil_system(&spec);
        let expected = &l1 * &g.derivative(Var::X) + &l2 * &g.derivative(Var::Y);
        if extract_cofactor(&VectorField { p, q }, &g).ok().flatten() == Some(expected) {
            ok += 1;
        }
    }
    line(
        "AC6",
        ok == total,
        format!("pencil cofactors: {ok}/{total} random pencils (degree <= 2, coefficients in [-{AC6_COEFF}, {AC6_COEFF}]) give lambda1 g_x + lambda2 g_y"),
    )
}

fn ac7() -> (Line, Vec<String>) {
    let mut info = Vec::new();
    let (a, b, c) = (int(-4), rat(5, 2), rat(1, 3));
    let config = DriftConfig {
        tol: AC7_TOL,
        ..DriftConfig::default()
    };
    let render = || -> Option<(String, String, Status)> {
        let r = ambiguity_report(&a, &b, &c, &config).ok()?;
        let summary = r.summary();
        let control = r.control.verdict;
        let text = encode(&ArtifactDocument::new(Payload::Drift(DriftDocument::Ambiguity(r)))).ok()?;
        Some((text, summary, control))
    };
    let (Some(first), Some(second)) = (render(), render()) else {
        return (line("AC7", false, "ambiguity report could not be produced"), info);
    };
    let deterministic = first.0 == second.0;
    let control_ok = first.2 == Status::Pass;
    if let Ok(r) = ambiguity_report(&a, &b, &c, &config) {
        for o in &r.readings {
            info.push(format!(
                "AC7 reading {}: max drift {:.3e} over {} seeds",
                o.reading.name(),
                o.report.max_drift().unwrap_or(f64::NAN),
                o.report.evaluated
            ));
        }
    }
    (
        line(
            "AC7",
            deterministic && control_ok,
            format!(
                "ambiguity report at tol {AC7_TOL:e}: \"{}\"; byte-identical on rerun: {deterministic}; Darboux control passes: {control_ok}",
                first.1
            ),
        ),
        info,
    )
}

fn main() -> ExitCode {
    // Guard against silently testing a different system than the one documented.
    let sys = cll_special_system(&int(-4), &rat(5, 2), &rat(1, 3)).expect("special system");
    assert_eq!(sys.q1.coeff(1), Rational::new(115.into(), 2.into()));

    let mut lines = ac1_ac2();
    let mut info = Vec::new();
    let (l3, i3) = ac3();
    lines.push(l3);
    info.extend(i3);
    let (l4, i4) = ac4();
    lines.push(l4);
    info.extend(i4);
    lines.push(ac5());
    lines.push(ac6());
    let (l7, i7) = ac7();
    lines.push(l7);
    info.extend(i7);

    for l in &lines {
        println!("{} {}: {}", if l.ok { "PASS" } else { "FAIL" }, l.id, l.detail);
    }
    for i in &info {
        println!("info {i}");
    }
    let failed = lines.iter().filter(|l| !l.ok).count();
    println!("acceptance: {} passed, {failed} failed", lines.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
