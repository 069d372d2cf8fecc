//! Acceptance suite. Each criterion prints one PASS/FAIL line; the test fails
//! if any of them does.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use roquette::character::{
    fs_indicator, inner_product, lefschetz_character, schur_obstruction_verdict, sylow_restriction, LiftVerdict,
    SchurIndexWitness,
};
use roquette::curve::{hasse_weil_sharpness, ActionTable, RoquetteCurve};
use roquette::ff::{Field, FieldElement};
use roquette::group::{ConjugacyClasses, GroupElement, RoquetteGroup};
use roquette::jacobian::{
    crt_reconstruct, jacobian_order, rho_ell_traces, torsion_basis, Jacobian, DEFAULT_ELL_BOUND,
};
use roquette::poly::Poly;
use roquette::report::{emit_json, run_pipeline, Options, Overall};
use roquette::series::{wild_multiplicity, SeriesConfig};
use roquette::Rational;

const PRIMES: [u64; 4] = [5, 7, 11, 13];
const SEED: u64 = 20_240_601;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn criterion_1() -> Outcome {
    let expected = [240usize, 672, 2640, 4368];
    let mut seen = Vec::new();
    for (p, want) in PRIMES.into_iter().zip(expected) {
        let g = RoquetteGroup::enumerate(p).map_err(|e| e.to_string())?;
        ensure!(g.order() == want, "|G| = {} at p = {p}, want {want}", g.order());
        ensure!(want as u64 == 2 * p * (p * p - 1), "formula mismatch at p = {p}");
        seen.push(g.order());
    }
    Ok(format!("|G| = {seen:?}"))
}

fn criterion_2() -> Outcome {
    let expected_fp2 = [6u128, 92, 232, 14];
    let mut out = Vec::new();
    for (p, want2) in PRIMES.into_iter().zip(expected_fp2) {
        let c1 = RoquetteCurve::new(p, 1).map_err(|e| e.to_string())?.count_points().count;
        let c2 = RoquetteCurve::new(p, 2).map_err(|e| e.to_string())?.count_points().count;
        ensure!(c1 == p as u128 + 1, "#C(F_{p}) = {c1}");
        ensure!(c2 == want2, "#C(F_{p}^2) = {c2}, want {want2}");
        let hw = hasse_weil_sharpness(p).map_err(|e| e.to_string())?;
        let dev = (c2 as i128 - (1 + (p * p) as i128)).unsigned_abs();
        ensure!(dev == (p * (p - 1)) as u128, "deviation {dev} at p = {p}");
        ensure!(hw.sharp && hw.deviation == dev, "Hasse-Weil report disagrees at p = {p}");
        out.push(format!("p={p}: {c1},{c2}"));
    }
    Ok(out.join("; "))
}

fn character_suite(p: u64) -> Outcome {
    let group = RoquetteGroup::enumerate(p).map_err(|e| e.to_string())?;
    let classes = ConjugacyClasses::compute(&group);
    let chi = lefschetz_character(&classes, &SeriesConfig::default_for(p)).map_err(|e| e.to_string())?;
    let q = |n: i64| Rational::from_integer(n);
    let n = p as i64 - 1;
    ensure!(*chi.degree() == q(n), "chi(1) = {}", chi.degree());
    ensure!(*chi.value(classes.iota_class()) == q(-n), "chi(iota) = {}", chi.value(classes.iota_class()));
    ensure!(*chi.value(classes.unipotent_class()) == q(-1), "chi(u) = {}", chi.value(classes.unipotent_class()));
    ensure!(chi.is_integer_valued(), "non-integral value");
    let norm = inner_product(&chi, &chi).map_err(|e| e.to_string())?;
    ensure!(norm == q(1), "<chi, chi> = {norm}");
    let sylow = sylow_restriction(&chi).map_err(|e| e.to_string())?;
    ensure!(
        sylow.trivial_multiplicity == 0 && sylow.nontrivial_multiplicity == 1,
        "Sylow multiplicities ({}, {})",
        sylow.trivial_multiplicity,
        sylow.nontrivial_multiplicity
    );
    let nu = fs_indicator(&chi);
    ensure!(nu == q(-1), "indicator {nu}");
    let kernel = chi.kernel();
    ensure!(kernel.len() == 1 && kernel[0].is_identity(), "kernel of size {}", kernel.len());
    Ok(format!("p={p}"))
}

fn criterion_3() -> Outcome {
    let mut done = Vec::new();
    for p in PRIMES {
        let start = Instant::now();
        done.push(character_suite(p)?);
        let t = start.elapsed();
        if p == 13 {
            ensure!(t < Duration::from_secs(60), "p = 13 took {t:?}");
        }
    }
    Ok(done.join(", "))
}

fn criterion_4() -> Outcome {
    for p in [5u64, 7] {
        let cfg = SeriesConfig::default_for(p);
        for u in 1..p as u32 {
            for (neg, want) in [(false, 3), (true, 1)] {
                let g = GroupElement::unipotent(p as u32, u, neg).map_err(|e| e.to_string())?;
                let m = wild_multiplicity(&g, &cfg).map_err(|e| e.to_string())?;
                ensure!(m == want, "p = {p}, u = {u}, negated = {neg}: multiplicity {m}");
            }
        }
        let group = RoquetteGroup::enumerate(p).map_err(|e| e.to_string())?;
        let classes = ConjugacyClasses::compute(&group);
        let chi = lefschetz_character(&classes, &cfg).map_err(|e| e.to_string())?;
        let iota = group.iota();
        for (i, c) in classes.classes().iter().enumerate() {
            let gi = c.representative.mul(&iota).map_err(|e| e.to_string())?;
            let other = chi.value_at(&gi).ok_or("g iota outside G")?;
            ensure!(*other == -*chi.value(i), "chi(g iota) != -chi(g) on class {i} at p = {p}");
        }
    }
    Ok("multiplicities 3 / 1 for all u at p = 5, 7".into())
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let group = RoquetteGroup::enumerate(5).map_err(|e| e.to_string())?;
    let classes = ConjugacyClasses::compute(&group);
    let chi = lefschetz_character(&classes, &SeriesConfig::default_for(5)).map_err(|e| e.to_string())?;
    let chi_int = chi.integer_values().ok_or("chi not integral")?;
    let mut traces = Vec::new();
    for (ell, span, degree) in [(3u64, 81usize, 4usize), (7, 2401, 12)] {
        let tb = torsion_basis(5, ell, SEED, DEFAULT_ELL_BOUND).map_err(|e| e.to_string())?;
        ensure!(tb.span_size() == span, "span {} for ell = {ell}", tb.span_size());
        ensure!(tb.jacobian().field().degree() == degree, "ell = {ell} over degree {}", tb.jacobian().field().degree());
        let tr = rho_ell_traces(&tb, &classes).map_err(|e| e.to_string())?;
        for (c, (&t, &x)) in tr.traces.iter().zip(&chi_int).enumerate() {
            ensure!((t as i64 - x).rem_euclid(ell as i64) == 0, "class {c}: trace {t} vs chi {x} mod {ell}");
        }
        traces.push(tr);
    }
    let bound = 5 - 1;
    let crt = crt_reconstruct(&classes, &traces, bound).map_err(|e| e.to_string())?;
    ensure!(crt == chi, "CRT reconstruction differs from chi");
    let t = start.elapsed();
    ensure!(t < Duration::from_secs(600), "took {t:?}");
    Ok(format!("spans 81, 2401; CRT = chi ({:.1} s)", t.as_secs_f64()))
}

/// Every reduced pair (u, v) over `field`: u monic of degree <= 2, deg v <
/// deg u, u | v^2 - f. Written out from the definition.
fn count_mumford_pairs(field: Field) -> u64 {
    let one = field.one();
    let mut fc = vec![field.zero(); 6];
    fc[5] = one;
    fc[1] = -one;
    let f = Poly::new(fc, &one);
    let elements: Vec<FieldElement> = field.elements().collect();
    let mut count = 1; // u = 1
    for &r in &elements {
        let u = Poly::new(vec![r, one], &one);
        for &v0 in &elements {
            let v = Poly::constant(v0);
            if (&(&v * &v) - &f).rem(&u).unwrap().is_zero() {
                count += 1;
            }
        }
    }
    for &u0 in &elements {
        for &u1 in &elements {
            let u = Poly::new(vec![u0, u1, one], &one);
            let target = f.rem(&u).unwrap();
            for &v0 in &elements {
                for &v1 in &elements {
                    let v = Poly::new(vec![v0, v1], &one);
                    if (&v * &v).rem(&u).unwrap() == target {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

fn criterion_6() -> Outcome {
    let f25 = Field::new(5, 2).map_err(|e| e.to_string())?;
    let enumerated = count_mumford_pairs(f25);
    ensure!(enumerated == 256, "enumerated {enumerated} classes");
    ensure!(jacobian_order(5, 1) == 256u32.into(), "closed form {}", jacobian_order(5, 1));
    let jac = Jacobian::new(5, 4).map_err(|e| e.to_string())?;
    let n = BigInt::from(jac.order());
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for i in 0..100 {
        let d = jac.random_divisor(&mut rng).map_err(|e| e.to_string())?;
        let z = jac.scalar_mul(&n, &d).map_err(|e| e.to_string())?;
        ensure!(z.is_zero(), "#J * D != 0 for sample {i}");
    }
    Ok(format!("#J(F_25) = {enumerated}; #J(F_625) = {n} kills 100 samples"))
}

fn criterion_7() -> Outcome {
    let mut out = Vec::new();
    for p in PRIMES {
        let report = run_pipeline(p, &Options::default()).map_err(|e| e.to_string())?;
        let v = &report.verdict;
        ensure!(v.integer_valued && v.irreducible, "p = {p}: verdict {v:?}");
        ensure!(v.fs_indicator == Some(-1), "p = {p}: indicator {:?}", v.fs_indicator);
        ensure!(v.schur_index_witness == SchurIndexWitness::Two, "p = {p}: witness {:?}", v.schur_index_witness);
        ensure!(v.lifts == LiftVerdict::Obstructed, "p = {p}: {:?}", v.lifts);
        ensure!(report.overall == Overall::Obstructed, "p = {p}: overall {:?}", report.overall);
        // a failed check must flip the overall verdict
        for id in ["group.order", "character.fs_indicator", "points.hasse_weil"] {
            let mut bad = report.clone();
            bad.inject_failure(id).map_err(|e| e.to_string())?;
            ensure!(bad.overall == Overall::Failed && bad.exit_code() == 1, "p = {p}: injecting {id} did not flip");
        }
        out.push(format!("p={p}"));
    }
    // and so must a corrupted character
    let group = RoquetteGroup::enumerate(5).map_err(|e| e.to_string())?;
    let classes = ConjugacyClasses::compute(&group);
    let chi = lefschetz_character(&classes, &SeriesConfig::default_for(5)).map_err(|e| e.to_string())?;
    let doubled = chi.add(&chi).map_err(|e| e.to_string())?;
    let v = schur_obstruction_verdict(&doubled).map_err(|e| e.to_string())?;
    ensure!(!v.irreducible && v.lifts == LiftVerdict::NotDetermined, "2 chi still obstructed");
    let mut shifted = chi.integer_values().unwrap();
    shifted[classes.iota_class()] += 1;
    let shifted = roquette::Character::from_integers(Arc::clone(&classes), shifted).map_err(|e| e.to_string())?;
    let v = schur_obstruction_verdict(&shifted).map_err(|e| e.to_string())?;
    ensure!(v.lifts == LiftVerdict::NotDetermined, "perturbed chi still obstructed");
    Ok(format!("obstructed at {}; injected faults flip", out.join(", ")))
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    // field axioms
    for k in [1usize, 2, 3, 4, 7] {
        let f = Field::new(7, k).map_err(|e| e.to_string())?;
        for _ in 0..200 {
            let [a, b, c] = [0; 3].map(|_| f.element_at(rng.gen_range(0..f.order())));
            ensure!((a + b) + c == a + (b + c) && a + b == b + a, "additive laws in {f}");
            ensure!((a * b) * c == a * (b * c) && a * b == b * a, "multiplicative laws in {f}");
            ensure!(a * (b + c) == a * b + a * c, "distributivity in {f}");
            ensure!(a + (-a) == f.zero() && a * f.one() == a, "identities in {f}");
            if !a.is_zero() {
                ensure!(a * a.inv().unwrap() == f.one(), "inverse in {f}");
            }
        }
    }
    // group axioms and normal form at p = 5, exhaustive
    let group = RoquetteGroup::enumerate(5).map_err(|e| e.to_string())?;
    let els = group.elements();
    let f2 = Field::new(5, 2).map_err(|e| e.to_string())?;
    for g in els {
        ensure!(g.mul(&g.inv()).unwrap().is_identity(), "g g^-1 != 1");
        ensure!(GroupElement::new(g.matrix(), g.lambda()).unwrap() == *g, "normal form not idempotent");
        for mu in 1..5u32 {
            let scaled = g.matrix().map(|v| v * mu % 5);
            let sign = if mu == 1 || mu == 4 { 1 } else { -1 };
            let lambda = f2.from_int(sign * mu as i64) * g.lambda();
            ensure!(GroupElement::new(scaled, lambda).unwrap() == *g, "kernel element changes the class");
        }
    }
    for _ in 0..500 {
        let [a, b, c] = [0; 3].map(|_| els[rng.gen_range(0..els.len())]);
        let lhs = a.mul(&b).unwrap().mul(&c).unwrap();
        ensure!(lhs == a.mul(&b.mul(&c).unwrap()).unwrap(), "associativity");
    }
    // action: closure and the law act(gh) = act(g) act(h), all pairs at p = 5
    let curve = RoquetteCurve::new(5, 4).map_err(|e| e.to_string())?;
    let table = ActionTable::build(&curve, &group, curve.points()).map_err(|e| e.to_string())?;
    let n = group.order();
    let (left, _) = table.composition_orders(&group, (0..n).flat_map(|g| (0..n).map(move |h| (g, h))));
    ensure!(left, "action law fails at p = 5");
    // Cantor
    let jac = Jacobian::new(7, 2).map_err(|e| e.to_string())?;
    for _ in 0..50 {
        let [a, b, c] = [0; 3].map(|_| jac.random_divisor(&mut rng).unwrap());
        let ab = jac.add(&a, &b).unwrap();
        ensure!(ab == jac.add(&b, &a).unwrap(), "Cantor commutativity");
        ensure!(
            jac.add(&ab, &c).unwrap() == jac.add(&a, &jac.add(&b, &c).unwrap()).unwrap(),
            "Cantor associativity"
        );
        ensure!(jac.add(&a, &jac.neg(&a)).unwrap().is_zero(), "Cantor inverse");
        ensure!(jac.add(&a, &jac.zero()).unwrap() == a, "Cantor identity");
    }
    // JSON determinism
    let opts = Options { ells: Some(vec![3]), ..Options::default() };
    let a = emit_json(&run_pipeline(5, &opts).map_err(|e| e.to_string())?);
    let b = emit_json(&run_pipeline(5, &opts).map_err(|e| e.to_string())?);
    ensure!(a == b, "JSON differs between runs");
    Ok("field, group, normal form, action law, Cantor, JSON determinism".into())
}

fn run(n: usize, limit: Option<Duration>, f: fn() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    let t = start.elapsed();
    let outcome = match (outcome, limit) {
        (Ok(_), Some(l)) if t >= l => Err(format!("over the {l:?} limit")),
        (o, _) => o,
    };
    let secs = t.as_secs_f64();
    // straight to stdout so the line survives output capture
    let line = match &outcome {
        Ok(msg) => format!("criterion {n}: PASS  {msg} [{secs:.2} s]"),
        Err(msg) => format!("criterion {n}: FAIL  {msg} [{secs:.2} s]"),
    };
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
    let _ = out.flush();
    outcome.is_ok()
}

#[test]
fn acceptance() {
    let secs = Duration::from_secs;
    let criteria: [(Option<Duration>, fn() -> Outcome); 8] = [
        (Some(secs(10)), criterion_1),
        (Some(secs(10)), criterion_2),
        (None, criterion_3),
        (None, criterion_4),
        (Some(secs(600)), criterion_5),
        (None, criterion_6),
        (None, criterion_7),
        (None, criterion_8),
    ];
    let failed: Vec<usize> = criteria
        .into_iter()
        .enumerate()
        .filter_map(|(i, (limit, f))| (!run(i + 1, limit, f)).then_some(i + 1))
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
