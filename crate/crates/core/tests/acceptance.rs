//! Acceptance criteria. Each prints one PASS/FAIL line. Criteria listed in
//! `KNOWN_GAPS` are expected to fail; the test fails if any other criterion
//! fails or if a known gap starts passing.

mod common;

use std::time::{Duration, Instant};

use leglab::corpus::{corpus_check, shipped, shipped_entry, verify_unknotting, Verdict};
use leglab::front::StabilizationSign;
use leglab::skein::{homfly_with, SkeinConfig};
use leglab::*;

type Check = Result<(), String>;
type Criterion = (u32, &'static str, fn() -> Check);

const KNOWN_GAPS: &[u32] = &[7];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Check {
    ensure(got == want, || format!("{what}: got {got:?}, want {want:?}"))
}

/// Runs every check and joins the failures.
fn all(checks: Vec<Check>) -> Check {
    let errs: Vec<String> = checks.into_iter().filter_map(Result::err).collect();
    ensure(errs.is_empty(), || errs.join("; "))
}

fn pd_of(name: &str) -> PDCode {
    let e = shipped_entry(name).expect("shipped entry");
    front_to_pd(&orient(&e.front).unwrap())
}

fn invariants_of(name: &str) -> ClassicalInvariants {
    orient(&shipped_entry(name).unwrap().front).unwrap().invariants()
}

fn front_formulas() -> Check {
    let t = Instant::now();
    let eye = orient(&FrontDiagram::eye()).unwrap().invariants();
    let kink = orient(&FrontDiagram::from_word("kink", "L1 X1 R1").unwrap()).unwrap().invariants();
    let elapsed = t.elapsed();
    all(vec![
        eq("eye (tb, r)", (eye.tb, eye.r), (-1, 0)),
        eq("kink (tb, |r|)", (kink.tb, kink.r.abs()), (-2, 1)),
        ensure(elapsed < Duration::from_millis(2), || format!("took {elapsed:?}")),
    ])
}

fn example_reproduction(name: &str, tb: i64, r: i64, u: i64, tau: i64, cert_len: usize) -> Check {
    let t = Instant::now();
    let entry = shipped_entry(name).unwrap();
    let inv = invariants_of(name);
    let est = sandwich(inv.tb, inv.r, u).map_err(|e| e.to_string())?;
    let pd = pd_of(name);
    let cert = entry.unknotting_certificate.clone().unwrap_or_default();
    let check = verify_unknotting(&pd, &cert, &SkeinConfig::default()).map_err(|e| e.to_string())?;
    let elapsed = t.elapsed();
    all(vec![
        eq("(tb, r)", (inv.tb, inv.r), (tb, r)),
        eq("tau", (est.determined, est.value()), (true, Some(tau))),
        eq("certificate size", cert.len(), cert_len),
        ensure(check.verdict != Verdict::Fail, || "certificate fails".into()),
        ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}")),
    ])
}

fn coprime(p: i64, q: i64) -> bool {
    num_integer::gcd(p, q) == 1
}

fn tau_bound(torus: (i64, i64)) -> Option<i64> {
    let meta = KnotMetadata {
        name: "t".into(),
        signature: 0,
        seifert_genus_upper: 100,
        genus: None,
        fourball_genus: None,
        unknotting_upper: None,
        alternating: None,
        perfect: None,
        torus_params: Some(torus),
    };
    let inv = ClassicalInvariants { writhe: 0, tb: -1001, r: 0, left_cusps: 1, right_cusps: 1 };
    let tau = leglab::bounds::estimate_tau(&inv, &meta).ok()??;
    bound_table(&inv, &meta, Some(&tau), None).ok()?.value("tau")
}

fn torus_bounds() -> Check {
    let mut checks = Vec::new();
    for p in 2..=12 {
        for q in p + 1..=12 {
            if !coprime(p, q) {
                continue;
            }
            let g = (p - 1) * (q - 1) / 2;
            checks.push(eq(&format!("tau bound ({p},{q})"), tau_bound((p, q)), Some(2 * g - 1)));
            checks.push(eq(&format!("tau bound (-{p},{q})"), tau_bound((-p, q)), Some(-p * q + p + q - 2)));
        }
    }
    for (name, p, q) in [("torus_m2_3", 2, 3), ("torus_m2_5", 2, 5)] {
        let kb = kauffman_bound(&kauffman(&pd_of(name)).unwrap()).unwrap();
        let tb = tau_bound((-p, q)).unwrap();
        checks.push(eq(&format!("kauffman bound {name}"), kb, -p * q));
        checks.push(ensure(kb < tb, || format!("{name}: kauffman {kb} not below tau bound {tb}")));
        checks.push(eq(&format!("{name} attains it"), invariants_of(name).tb, kb));
    }
    all(checks)
}

fn alternating_consistency() -> Check {
    let report = corpus_check(&shipped(), &SkeinConfig::default());
    let mut checks = Vec::new();
    for name in ["right_trefoil", "left_trefoil", "torus_m2_3", "figure_eight", "torus_2_5", "torus_m2_5"] {
        let e = report.entries.iter().find(|e| e.name == name).unwrap();
        let sigma = e.signature.unwrap();
        let b = e.bounds.as_ref().unwrap();
        let tau = e.tau.as_ref().and_then(|t| t.value());
        checks.push(eq(&format!("{name} tau"), tau, Some(-sigma / 2)));
        checks.push(eq(&format!("{name} signature bound"), b.value("signature"), Some(-sigma - 1)));
        checks.push(eq(&format!("{name} tau bound"), b.value("tau"), Some(-sigma - 1)));
        if sigma > 0 {
            checks.push(ensure(!b.tb_can_be_positive, || format!("{name}: tb flagged as possibly positive")));
        }
    }
    all(checks)
}

fn property_suites() -> Check {
    let t = Instant::now();
    let mut rng = common::rng(0x1e9);
    let mut errs = Vec::new();
    for i in 0..600 {
        let f = common::random_front(&mut rng, 14);
        let inv = f.invariants();
        let d = f.diagram();
        if !inv.parity_ok() {
            errs.push(format!("#{i} parity {}", d.word()));
        }
        if d.left_cusp_count() != d.right_cusp_count() {
            errs.push(format!("#{i} cusp counts {}", d.word()));
        }
        let rev = f.reversed().invariants();
        if (rev.tb, rev.r) != (inv.tb, -inv.r) {
            errs.push(format!("#{i} reversal {}", d.word()));
        }
        for (sign, dr) in [(StabilizationSign::Positive, 1), (StabilizationSign::Negative, -1)] {
            let s = stabilize(&f, sign).invariants();
            if (s.tb, s.r) != (inv.tb - 1, inv.r + dr) {
                errs.push(format!("#{i} stabilize {sign:?} {}", d.word()));
            }
        }
        let g = common::random_front(&mut rng, 8);
        let gi = g.invariants();
        let sum = connect_sum(&f, &g).invariants();
        if (sum.tb, sum.r) != (inv.tb + gi.tb + 1, inv.r + gi.r) {
            errs.push(format!("#{i} connect sum {} # {}", d.word(), g.diagram().word()));
        }
        if front_to_pd(&f).writhe() != inv.writhe {
            errs.push(format!("#{i} writhe {}", d.word()));
        }
    }
    let elapsed = t.elapsed();
    errs.truncate(5);
    all(vec![
        ensure(errs.is_empty(), || errs.join("; ")),
        ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}")),
    ])
}

fn polynomial_engine() -> Check {
    let t = Instant::now();
    let cfg = SkeinConfig { crossing_cap: 10, ..SkeinConfig::default() };
    let mut checks = Vec::new();
    let mut unknot = orient(&FrontDiagram::eye()).unwrap();
    for k in 0..=4 {
        let h = homfly_with(&front_to_pd(&unknot), &cfg).map(|r| r.poly.is_one());
        checks.push(eq(&format!("homfly of unknot with {k} kinks"), h, Ok(true)));
        unknot = stabilize(&unknot, if k % 2 == 0 { StabilizationSign::Positive } else { StabilizationSign::Negative });
    }
    let trefoil = orient(&shipped_entry("right_trefoil").unwrap().front).unwrap();
    let h = homfly(&front_to_pd(&trefoil)).unwrap();
    let square = homfly(&front_to_pd(&connect_sum(&trefoil, &trefoil))).unwrap();
    checks.push(ensure(square == h.checked_mul(&h).unwrap(), || "trefoil # trefoil not multiplicative".into()));

    for e in shipped() {
        let pd = pd_of(e.name());
        if pd.crossing_count() > 10 {
            continue;
        }
        let on = homfly_with(&pd, &cfg).map(|r| r.poly);
        let off = homfly_with(&pd, &SkeinConfig { memo: false, ..cfg }).map(|r| r.poly);
        checks.push(ensure(on.is_ok() && on == off, || format!("{}: memo changes homfly", e.name())));
    }

    let right = homfly(&pd_of("right_trefoil")).unwrap();
    let left = homfly(&pd_of("left_trefoil")).unwrap();
    let anchor: LaurentPoly2 = "-1 a^-4 z^0 + 1 a^-2 z^2 + 2 a^-2 z^0".parse().unwrap();
    checks.push(eq("right trefoil homfly", right.to_string(), anchor.to_string()));
    checks.push(eq("left trefoil homfly max a-degree", left.max_a_degree(), Some(5)));
    checks.push(eq("homfly bound unknot", homfly_bound(&LaurentPoly2::one()).ok(), Some(-1)));
    checks.push(eq("homfly bound right trefoil", homfly_bound(&right).ok(), Some(1)));
    checks.push(eq("homfly bound left trefoil", homfly_bound(&left).ok(), Some(-6)));
    checks.push(eq("kauffman bound unknot", kauffman_bound(&LaurentPoly2::one()).ok(), Some(-1)));
    let kl = kauffman(&pd_of("left_trefoil")).unwrap();
    checks.push(eq("kauffman bound left trefoil", kauffman_bound(&kl).ok(), Some(-6)));
    let k25 = kauffman(&pd_of("torus_m2_5")).unwrap();
    checks.push(eq("kauffman bound (-2,5)", kauffman_bound(&k25).ok(), Some(-10)));
    let elapsed = t.elapsed();
    checks.push(ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}")));
    all(checks)
}

fn signature_engine() -> Check {
    // Seifert matrix of the right trefoil from its two-circle Seifert surface.
    let v = [[-1i64, 1], [0, -1]];
    let s = [[2 * v[0][0], v[0][1] + v[1][0]], [v[1][0] + v[0][1], 2 * v[1][1]]];
    let hand_det = (s[0][0] * s[1][1] - s[0][1] * s[1][0]).abs();
    let hand_sig = if s[0][0] < 0 && hand_det > 0 { -2 } else { 0 };
    let right = pd_of("right_trefoil");
    let fig8 = pd_of("figure_eight");
    all(vec![
        eq("sigma(right trefoil)", signature(&right), -2),
        eq("hand oracle sigma", hand_sig, -2),
        eq("sigma(mirror)", signature(&mirror(&right)), 2),
        eq("sigma(figure eight)", signature(&fig8), 0),
        eq("sigma(mirror figure eight)", signature(&mirror(&fig8)), 0),
        eq("det(trefoil)", determinant(&right), hand_det),
        eq("det(figure eight)", determinant(&fig8), 5),
    ])
}

fn whitehead_rule() -> Check {
    let w = whitehead_double_tau(true).map_err(|e| e.to_string())?;
    let s = sandwich(1, 0, 1).map_err(|e| e.to_string())?;
    let both = w.intersect(&s).map_err(|e| e.to_string())?;
    let mut checks = vec![
        eq("whitehead", w.value(), Some(1)),
        eq("sandwich(1, 0, 1)", s.value(), Some(1)),
        eq("composed", both.value(), Some(1)),
    ];
    let mut iterated = w.clone();
    for n in 1..=5 {
        iterated = whitehead_double_tau(iterated.value() == Some(1)).map_err(|e| e.to_string())?;
        checks.push(eq(&format!("iteration {n}"), iterated.value(), Some(1)));
    }
    all(checks)
}

fn hard_consistency_gate() -> Check {
    let cfg = SkeinConfig::default();
    let report = corpus_check(&shipped(), &cfg);
    let mut bad = shipped_entry("right_trefoil").unwrap();
    bad.metadata.genus = Some(0);
    bad.metadata.fourball_genus = None;
    bad.metadata.unknotting_upper = None;
    bad.metadata.torus_params = None;
    bad.metadata.alternating = None;
    bad.expected = None;
    let broken = corpus_check(&[bad], &cfg);
    let violated = broken.first_failure().map(|e| e.to_string()).unwrap_or_default();
    all(vec![
        ensure(report.ok, || format!("shipped corpus fails: {:?}", report.first_failure())),
        ensure(!broken.ok && violated.contains("bounds.bennequin"), || format!("violation not reported: {violated}")),
    ])
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        (1, "front formulas", front_formulas),
        (2, "10_139 representative", || example_reproduction("k10_139", 6, 1, 4, 4, 4)),
        (3, "mirror 10_145 representative", || example_reproduction("m10_145", 2, 1, 2, 2, 2)),
        (4, "torus knot bounds", torus_bounds),
        (5, "alternating consistency", alternating_consistency),
        (6, "property suites", property_suites),
        (7, "polynomial engine", polynomial_engine),
        (8, "signature engine", signature_engine),
        (9, "whitehead rule", whitehead_rule),
        (10, "hard consistency gate", hard_consistency_gate),
    ];
    let mut unexpected = Vec::new();
    for (id, name, check) in criteria {
        let result = check();
        match &result {
            Ok(()) => println!("[PASS] {id:>2}. {name}"),
            Err(e) => println!("[FAIL] {id:>2}. {name}: {e}"),
        }
        if result.is_ok() == KNOWN_GAPS.contains(&id) {
            unexpected.push(id);
        }
    }
    assert!(unexpected.is_empty(), "criteria with unexpected outcome: {unexpected:?}");
}
