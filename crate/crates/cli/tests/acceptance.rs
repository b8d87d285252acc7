//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.
//!
//! Each criterion combines a CLI run (its JSON report must show the named
//! checks with the expected statuses) with oracles computed here by plain
//! loops over matrix entries.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use num_rational::Rational64;
use rand::Rng;
use sccckit::models::{random_morphism, random_state, stream_rng};
use sccckit::ortho::{self, OplusDecomposition};
use sccckit::protocols::{qubit, teleport, teleport_wproj};
use sccckit::wproj::{lift, wequal};
use sccckit::{born, sccc, Morphism, Object, Status, Tolerance, VerificationReport};

type M = Morphism<Complex64>;
type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_sccckit")
}

/// Runs the CLI with `--json -` and parses the report from stdout.
fn run(args: &[&str]) -> Result<(VerificationReport, Duration), String> {
    let start = Instant::now();
    let out = Command::new(bin())
        .args(args)
        .args(["--json"])
        .env_remove("SCCCKIT_SEED")
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let report = VerificationReport::from_json(&String::from_utf8_lossy(&out.stdout))
        .map_err(|e| format!("`{}`: {e}; stderr: {}", args.join(" "), String::from_utf8_lossy(&out.stderr)))?;
    let expect_ok = report.passed();
    if out.status.success() != expect_ok {
        return Err(format!("`{}` exit status {} disagrees with report", args.join(" "), out.status));
    }
    Ok((report, elapsed))
}

fn require(report: &VerificationReport, name: &str, status: Status) -> Result<(), String> {
    match report.get(name) {
        Some(r) if r.status == status => Ok(()),
        Some(r) => Err(format!(
            "{}/{}: {name} is {:?}, expected {:?} ({})",
            report.suite,
            report.model,
            r.status,
            status,
            r.detail.clone().unwrap_or_default()
        )),
        None => Err(format!("{}/{}: no check named {name}", report.suite, report.model)),
    }
}

fn require_clean(report: &VerificationReport) -> Result<(), String> {
    match report.failures().next() {
        None => Ok(()),
        Some(f) => Err(format!("{}/{}: {} failed: {:?}", report.suite, report.model, f.check_name, f.detail)),
    }
}

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn entry_distance(a: &M, b: &M) -> f64 {
    assert_eq!((a.rows(), a.cols()), (b.rows(), b.cols()));
    a.entries().iter().zip(b.entries()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

fn within(a: &M, b: &M, rel: f64) -> bool {
    let scale = a.max_magnitude().max(b.max_magnitude());
    entry_distance(a, b) <= (rel * scale).max(1e-12)
}

fn random_gaussian_int<R: Rng>(dom: &Object, cod: &Object, rng: &mut R) -> M {
    Morphism::from_fn(dom, cod, |_, _| c(rng.random_range(-4..=4) as f64, rng.random_range(-4..=4) as f64))
}

fn gen_or_unit(label: &str, d: usize) -> Object {
    if d == 1 {
        Object::Unit
    } else {
        Object::gen(label, d)
    }
}

fn criterion_1() -> Outcome {
    let (hilb, t1) = run(&["verify", "sccc", "--model", "fdhilb", "--max-dim", "8", "--trials", "200", "--seed", "7"])?;
    let (boolean, t2) = run(&["verify", "sccc", "--model", "rel", "--max-dim", "6", "--trials", "200", "--seed", "7"])?;
    for r in [&hilb, &boolean] {
        for name in [
            "yanking",
            "unit-coherence",
            "coherence-isos-unitary",
            "scalar-mult-composition",
            "scalar-mult-tensor",
            "name-unfoldings-agree",
        ] {
            require(r, name, Status::Pass)?;
        }
        require_clean(r)?;
        ensure(r.trials == 200 && r.tolerance == 1e-9, || "wrong trial count or tolerance".into())?;
    }
    // The unit on Q[3] is the vectorized identity.
    let eta: M = sccc::unit(&Object::gen("Q", 3));
    let expected: Vec<Complex64> = (0..9).map(|k| c(if k % 4 == 0 { 1.0 } else { 0.0 }, 0.0)).collect();
    ensure(eta.entries() == expected.as_slice(), || "η_Q is not vec(1)".into())?;
    let total = t1 + t2;
    ensure(total < Duration::from_secs(30), || format!("took {total:?}"))?;
    Ok(format!("fdhilb dims 1-8 and rel dims 1-6, 200 trials each, {:.2} s", total.as_secs_f64()))
}

fn criterion_2() -> Outcome {
    let tol = Tolerance::new(1e-9);
    let mut rng = stream_rng(2024, 2);
    for _ in 0..500 {
        let a = gen_or_unit("A", rng.random_range(1..=4));
        let b = gen_or_unit("B", rng.random_range(1..=4));
        let f: M = random_morphism(&a, &b, &mut rng);
        let (s, t) = (
            Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU)),
            Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU)),
        );
        // s•f = t•g with g = (s/t)•f.
        let g = f.scale(&(s / t));
        let doubles_equal = within(&sccc::double(&f), &sccc::double(&g), 1e-9);
        ensure(doubles_equal, || "phase-related morphisms have different doubles".into())?;
        let (ws, wt) = sccc::phase_witnesses(&f, &g, &tol).map_err(|e| e.to_string())?;
        let (ws, wt) = (*ws.value().unwrap(), *wt.value().unwrap());
        ensure(within(&f.scale(&ws), &g.scale(&wt), 1e-9), || "witnesses do not relate f and g".into())?;
        let (ns, nt) = ((ws * ws.conj()).re, (wt * wt.conj()).re);
        ensure((ns - nt).abs() <= 1e-9 * ns.max(nt).max(1e-3), || format!("s∘s† = {ns}, t∘t† = {nt}"))?;
    }
    let (r, _) = run(&["verify", "sccc", "--trials", "500", "--max-dim", "4"])?;
    for name in ["sampled-phases-unitary", "phase-kills-double", "double-yields-witnesses"] {
        require(&r, name, Status::Pass)?;
    }
    Ok("500 phase pairs, witnesses within 1e-9".into())
}

fn criterion_3() -> Outcome {
    let mut rng = stream_rng(2024, 3);
    for _ in 0..200 {
        let a = gen_or_unit("A", rng.random_range(1..=5));
        let b = gen_or_unit("B", rng.random_range(1..=5));
        let f = random_gaussian_int(&a, &b, &mut rng);
        let g = random_gaussian_int(&a, &b, &mut rng);
        let oracle: Complex64 = f.entries().iter().zip(g.entries()).map(|(x, y)| x.conj() * y).sum();
        let hs = *sccc::hs_inner(&f, &g).map_err(|e| e.to_string())?.value().unwrap();
        let tr = *sccc::trace(&f.dagger().compose(&g).unwrap()).unwrap().value().unwrap();
        ensure(hs == oracle && tr == oracle, || format!("⟨f|g⟩ = {hs}, Tr(f†g) = {tr}, Σ f̄g = {oracle}"))?;

        let psi = random_gaussian_int(&Object::Unit, &b, &mut rng);
        let phi = random_gaussian_int(&Object::Unit, &b, &mut rng);
        let inner = *sccc::hs_inner(&psi, &phi).unwrap().value().unwrap();
        let direct = *psi.dagger().compose(&phi).unwrap().value().unwrap();
        ensure(inner == direct, || "state inner product differs from ψ†φ".into())?;
    }
    let two = Object::Unit.oplus(&Object::Unit);
    let tr_two = *sccc::trace(&M::identity(&two)).unwrap().value().unwrap();
    ensure(tr_two == c(2.0, 0.0), || format!("Tr(1_(I+I)) = {tr_two}"))?;

    // Born loop on projectors P = v v† / ‖v‖ for random v.
    for _ in 0..200 {
        let d = rng.random_range(2..=5);
        let a = Object::gen("A", d);
        let psi: M = random_state(&a, &mut rng);
        let v: M = random_state(&a, &mut rng);
        let nv: f64 = v.entries().iter().map(|x| x.norm_sqr()).sum();
        let p = Morphism::from_fn(&a, &a, |i, j| v.entry(i, 0) * v.entry(j, 0).conj() / nv);
        let prob = *sccc::born_prob(&psi, &p, &Tolerance::new(1e-9)).map_err(|e| e.to_string())?.value().unwrap();
        let mut by_trace = c(0.0, 0.0);
        for i in 0..d {
            for k in 0..d {
                by_trace += p.entry(i, k) * psi.entry(k, 0) * psi.entry(i, 0).conj();
            }
        }
        ensure((prob - by_trace).norm() <= 1e-9 * by_trace.norm().max(1.0), || format!("{prob} vs {by_trace}"))?;
    }
    let (r, _) = run(&["verify", "sccc", "--trials", "200"])?;
    for name in ["hs-inner-is-trace-form", "hs-inner-on-states", "born-loop", "trace-is-diagonal-sum"] {
        require(&r, name, Status::Pass)?;
    }
    Ok("exact on Gaussian-integer pairs, Tr(1_(I+I)) = 2, Born loop on 200 samples".into())
}

fn criterion_4() -> Outcome {
    let (w, _) = run(&["verify", "wproj", "--trials", "1000"])?;
    require(&w, "equality-criteria-agree", Status::Pass)?;
    require_clean(&w)?;

    let (prep, _) = run(&["verify", "prep-state", "--model", "fdhilb"])?;
    for name in ["prep-state-doubles", "prep-state-projectors", "prep-state-densities"] {
        require(&prep, name, Status::ExpectedFail)?;
    }
    let witness = prep
        .get("prep-state-doubles")
        .and_then(|r| r.witness.clone())
        .ok_or("no witness for the prep-state failure")?;
    let f: M = witness[0].to_morphism().map_err(|e| e.to_string())?;
    let g: M = witness[1].to_morphism().map_err(|e| e.to_string())?;
    ensure(entry_distance(&f.scale(&c(0.0, 1.0)), &g) <= 1e-12, || "witness is not (f, i•f)".into())?;
    ensure(!f.is_zero(), || "witness f is zero".into())?;

    let (prep_w, _) = run(&["verify", "prep-state", "--model", "wproj:fdhilb"])?;
    for name in ["prep-state-doubles", "prep-state-projectors", "prep-state-densities"] {
        require(&prep_w, name, Status::Pass)?;
    }
    require_clean(&prep_w)?;

    // Three-way equality decided independently: classes agree iff the
    // matrices differ by a unit scalar.
    let tol = Tolerance::new(1e-9);
    let mut rng = stream_rng(2024, 4);
    for k in 0..1000 {
        let a = gen_or_unit("A", rng.random_range(1..=3));
        let b = gen_or_unit("B", rng.random_range(1..=3));
        let f: M = random_morphism(&a, &b, &mut rng);
        let (g, expected) = match k % 3 {
            0 => (f.scale(&Complex64::from_polar(1.0, rng.random_range(0.0..6.3))), true),
            1 => (f.scale(&c(1.5, 0.0)), false),
            _ => (random_morphism(&a, &b, &mut rng), false),
        };
        let got = wequal(&lift(&f), &lift(&g), &tol).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("pair {k}: wequal = {got}, expected {expected}"))?;
    }
    Ok("criteria agree on 1000 pairs; fdhilb expected-fail with (f, i•f); wproj:fdhilb passes".into())
}

fn criterion_5() -> Outcome {
    let one = M::scalar(c(1.0, 0.0));
    let i = M::scalar(c(0.0, 1.0));
    let sum_i = ortho::oplus(&one, &i).unwrap();
    let sum_1 = ortho::oplus(&one, &one).unwrap();
    let pair_i = sccckit::models::pairing(&[one.clone(), i.clone()]).unwrap();
    let pair_1 = sccckit::models::pairing(&[one.clone(), one.clone()]).unwrap();
    let check = |f: &M, g: &M, oracle_f: &[Complex64]| -> Result<f64, String> {
        let (df, dg) = (sccc::double(f), sccc::double(g));
        ensure(df.entries() == oracle_f, || format!("double = {:?}", df.to_rows()))?;
        let gaps: Vec<f64> =
            df.entries().iter().zip(dg.entries()).map(|(x, y)| (x - y).norm()).filter(|&d| d > 1e-12).collect();
        ensure(!gaps.is_empty(), || "doubles coincide".into())?;
        Ok(gaps.iter().copied().fold(f64::INFINITY, f64::min))
    };
    let (z, o, im) = (c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0));
    // diag(1, i) ⊗ diag(1, -i) = diag(1, -i, i, 1).
    let gap_sum = check(&sum_i, &sum_1, &[o, z, z, z, z, -im, z, z, z, z, im, z, z, z, z, o])?;
    // (1, i)ᵀ ⊗ (1, -i) = [[1, -i], [i, 1]].
    let gap_pair = check(&pair_i, &pair_1, &[o, -im, im, o])?;
    ensure(gap_sum >= 0.5 && gap_pair >= 0.5, || format!("gaps {gap_sum}, {gap_pair}"))?;

    let (r, _) = run(&["verify", "ortho", "--trials", "50"])?;
    require(&r, "phase-scalars-equal", Status::Pass)?;
    require(&r, "oplus-respects-phase-classes", Status::ExpectedFail)?;
    require(&r, "pairing-respects-phase-classes", Status::ExpectedFail)?;
    require(&r, "oplus-respects-phase-classes-gap", Status::Pass)?;
    require(&r, "pairing-respects-phase-classes-gap", Status::Pass)?;
    require(&r, "oplus-phase-zero-control", Status::Pass)?;
    Ok(format!("smallest entry gaps {gap_sum:.4} (sum) and {gap_pair:.4} (pairing)"))
}

fn criterion_6() -> Outcome {
    let mut rng = stream_rng(2024, 6);
    let rel = 1e-9;
    for _ in 0..1000 {
        let a = gen_or_unit("A", rng.random_range(1..=4));
        let b = gen_or_unit("B", rng.random_range(1..=4));
        let f: M = random_morphism(&a, &b, &mut rng);
        let g: M = random_morphism(&a, &b, &mut rng);
        let h: M = random_morphism(&a, &b, &mut rng);
        let oracle = Morphism::from_fn(&a, &b, |i, j| f.entry(i, j) + g.entry(i, j));
        let sum = ortho::derived_sum(&f, &g).map_err(|e| e.to_string())?;
        ensure(within(&sum, &oracle, rel), || format!("derived sum off by {:e}", entry_distance(&sum, &oracle)))?;

        let zero: M = ortho::zero_morphism(&a, &b);
        ensure(within(&ortho::derived_sum(&f, &zero).unwrap(), &f, rel), || "0 is not a unit".into())?;
        let gf = ortho::derived_sum(&g, &f).unwrap();
        ensure(within(&sum, &gf, rel), || "not commutative".into())?;
        let left = ortho::derived_sum(&sum, &h).unwrap();
        let right = ortho::derived_sum(&f, &ortho::derived_sum(&g, &h).unwrap()).unwrap();
        ensure(within(&left, &right, rel), || "not associative".into())?;

        let c_obj = gen_or_unit("C", rng.random_range(1..=4));
        let after: M = ortho::zero_morphism(&b, &c_obj);
        let before: M = ortho::zero_morphism(&c_obj, &a);
        let k1 = after.compose(&f).unwrap();
        let k2 = f.compose(&before).unwrap();
        ensure(k1.entries().iter().chain(k2.entries()).all(|x| *x == c(0.0, 0.0)), || {
            "zero does not annihilate exactly".into()
        })?;
        ensure(zero.entries().iter().all(|x| *x == c(0.0, 0.0)), || "zero morphism has nonzero entries".into())?;
    }
    let (r, _) = run(&["verify", "ortho", "--trials", "1000"])?;
    for name in [
        "derived-sum-is-entrywise",
        "derived-sum-unit",
        "derived-sum-commutative",
        "derived-sum-associative",
        "zero-annihilates",
    ] {
        require(&r, name, Status::Pass)?;
    }
    require_clean(&r)?;
    Ok("1000 pairs match the entrywise sum; monoid laws; exact annihilation".into())
}

fn criterion_7() -> Outcome {
    let axioms = [
        "block-additivity",
        "diagonal-axiom",
        "diagonal-axiom-same-type",
        "trace-linearity",
        "trace-of-sum-is-trace-of-oplus",
        "ortho-bornian",
        "ortho-bornian-positive-form",
    ];
    for (model, nu) in [("fdhilb", "1"), ("wproj:fdhilb", "1/2"), ("wproj:fdhilb", "1"), ("fdhilb", "1/2")] {
        let (r, _) = run(&["verify", "born", "--model", model, "--nu", nu, "--trials", "500"])?;
        for name in axioms {
            require(&r, name, Status::Pass)?;
        }
        require_clean(&r)?;
        ensure(r.trials == 500, || "trial count".into())?;
    }
    for model in ["fdhilb", "wproj:fdhilb"] {
        let (r, _) = run(&["verify", "equivalence", "--model", model])?;
        for name in ["ortho-bornian", "diagonal-axiom", "trace-linearity", "verdicts-agree"] {
            require(&r, name, Status::Pass)?;
        }
    }
    let (r, _) = run(&["verify", "equivalence", "--model", "corrupt-trace:fdhilb"])?;
    require(&r, "ortho-bornian", Status::ExpectedFail)?;
    require(&r, "diagonal-axiom", Status::ExpectedFail)?;
    require(&r, "trace-linearity", Status::Pass)?;
    require(&r, "verdicts-agree", Status::Pass)?;

    // Block additivity against a direct sum of squared moduli.
    let mut rng = stream_rng(2024, 7);
    for _ in 0..500 {
        let b1 = gen_or_unit("B", rng.random_range(1..=3));
        let b2 = gen_or_unit("C", rng.random_range(1..=3));
        let a = gen_or_unit("A", rng.random_range(1..=3));
        let cod = OplusDecomposition::new(vec![b1.clone(), b2.clone()]).unwrap();
        let f: M = random_morphism(&a, cod.whole(), &mut rng);
        let whole: f64 = f.entries().iter().map(|x| x.norm_sqr()).sum();
        let top = f.rows() - b2.dim();
        let upper: f64 =
            (0..top).flat_map(|i| (0..f.cols()).map(move |j| (i, j))).map(|(i, j)| f.entry(i, j).norm_sqr()).sum();
        let lower = whole - upper;
        let dom = OplusDecomposition::new(vec![a.clone()]).unwrap();
        let f1 = ortho::pseudo_component(&f, &dom, &cod, 0, 0).unwrap();
        let f2 = ortho::pseudo_component(&f, &dom, &cod, 0, 1).unwrap();
        let n1 = sccc::hs_norm_sq(&f1).value().unwrap().re;
        let n2 = sccc::hs_norm_sq(&f2).value().unwrap().re;
        ensure((n1 - upper).abs() <= 1e-9 * whole && (n2 - lower).abs() <= 1e-9 * whole, || "block norms".into())?;
        let s = born::scalar_sum(&M::scalar(c(n1.sqrt(), 0.0)), &M::scalar(c(n2.sqrt(), 0.0)), Rational64::new(1, 2))
            .map_err(|e| e.to_string())?;
        ensure((s.value().unwrap().re - whole.sqrt()).abs() <= 1e-9 * whole.sqrt(), || "ν = 1/2 additivity".into())?;
    }
    Ok("ν = 1 and ν = 1/2 in fdhilb and wproj:fdhilb, 500 samples; verdicts agree incl. corrupted trace".into())
}

fn criterion_8() -> Outcome {
    let one = M::scalar(c(1.0, 0.0));
    let two = born::scalar_sum(&one, &one, Rational64::from_integer(1)).map_err(|e| e.to_string())?;
    let root = born::scalar_sum(&one, &one, Rational64::new(1, 2)).map_err(|e| e.to_string())?;
    let (two, root) = (*two.value().unwrap(), *root.value().unwrap());
    ensure((two - c(2.0, 0.0)).norm() <= 1e-12, || format!("1 + 1 = {two} for ν = 1"))?;
    ensure((root - c(2f64.sqrt(), 0.0)).norm() <= 1e-12, || format!("1 + 1 = {root} for ν = 1/2"))?;
    let (r, _) = run(&["verify", "born", "--trials", "10"])?;
    for name in ["one-plus-one-squared-norm", "one-plus-one-norm", "valuations-give-distinct-integers"] {
        require(&r, name, Status::Pass)?;
    }
    Ok(format!("ν = 1: {}, ν = 1/2: {}", two.re, root.re))
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let tol = Tolerance::new(1e-9);
    let mut rng = stream_rng(2024, 9);
    for n in 0..100 {
        let psi: M = random_state(&qubit(), &mut rng);
        let half = Morphism::from_fn(psi.dom(), psi.cod(), |i, j| psi.entry(i, j) * 0.5);
        let norm: f64 = psi.entries().iter().map(|x| x.norm_sqr()).sum();
        let branches = teleport(&psi).map_err(|e| e.to_string())?;
        ensure(branches.len() == 4, || "expected four branches".into())?;
        let mut total = 0.0;
        for b in &branches {
            ensure(within(&b.corrected, &half, 1e-9), || {
                format!("state {n}, branch {}: output differs from ψ/2", b.index)
            })?;
            ensure((b.probability - norm / 4.0).abs() <= 1e-9 * norm, || {
                format!("state {n}, branch {}: probability {} vs {}", b.index, b.probability, norm / 4.0)
            })?;
            total += b.probability;
        }
        ensure((total - norm).abs() <= 1e-9 * norm, || format!("state {n}: probabilities sum to {total}"))?;
        let shifted = lift(&psi.scale(&c(0.0, 1.0)));
        for (i, out) in teleport_wproj(&shifted).map_err(|e| e.to_string())?.iter().enumerate() {
            let same = wequal(out, &lift(&half), &tol).map_err(|e| e.to_string())?;
            ensure(same, || format!("state {n}, branch {i}: i•ψ lands in another class"))?;
        }
    }
    let library = start.elapsed();
    let (r, cli) = run(&["protocol", "teleport", "--trials", "100"])?;
    require_clean(&r)?;
    require(&r, "teleportation-phase-robust", Status::Pass)?;
    let (single, _) = run(&["protocol", "teleport", "--state", "[[1,0],[0,0]]"])?;
    require_clean(&single)?;
    ensure(single.results.iter().filter(|x| x.check_name.starts_with("branch-")).count() == 4, || {
        "single-state report lacks per-branch entries".into()
    })?;
    ensure(library < Duration::from_secs(5) && cli < Duration::from_secs(5), || {
        format!("library {library:?}, cli {cli:?}")
    })?;
    Ok(format!("100 states x 4 branches, {:.2} s library, {:.2} s cli", library.as_secs_f64(), cli.as_secs_f64()))
}

fn criterion_10() -> Outcome {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("determinism");
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let runs: [&[&str]; 5] = [
        &["verify", "sccc", "--model", "fdhilb", "--trials", "50"],
        &["verify", "wproj", "--trials", "50"],
        &["verify", "ortho", "--model", "rel", "--trials", "50"],
        &["verify", "born", "--model", "wproj:fdhilb", "--nu", "1/2", "--trials", "50"],
        &["protocol", "teleport", "--trials", "20"],
    ];
    for (k, args) in runs.iter().enumerate() {
        let mut outputs = Vec::new();
        for rep in 0..2 {
            let path = dir.join(format!("run{k}-{rep}.json"));
            let status = Command::new(bin())
                .args(*args)
                .args(["--seed", "11", "--json"])
                .arg(&path)
                .output()
                .map_err(|e| e.to_string())?;
            ensure(status.status.success(), || format!("`{}` failed", args.join(" ")))?;
            outputs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
        }
        // The seed may also come from the environment.
        let env_out = Command::new(bin())
            .args(*args)
            .args(["--json"])
            .env("SCCCKIT_SEED", "11")
            .output()
            .map_err(|e| e.to_string())?;
        outputs.push(env_out.stdout);
        ensure(outputs[0] == outputs[1] && outputs[0] == outputs[2], || {
            format!("`{}` is not reproducible", args.join(" "))
        })?;
    }
    Ok("five suites byte-identical across runs and seed sources".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("SCCC axiom suite", criterion_1),
        ("phase propositions", criterion_2),
        ("Hilbert-Schmidt and Born loop", criterion_3),
        ("phase quotient", criterion_4),
        ("direct sum not defined on phase classes", criterion_5),
        ("derived sum", criterion_6),
        ("probability axioms", criterion_7),
        ("scalar arithmetic", criterion_8),
        ("teleportation", criterion_9),
        ("determinism", criterion_10),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
