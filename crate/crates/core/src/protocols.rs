//! Measurements, classical branching and teleportation.
//!
//! Classical outcomes are kept as plain ordered tuples of morphisms with a
//! common domain. The `⊕`-typed measurement is built separately and
//! compared with the tuple form.

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::models::{self, pairing, random_morphism, random_state, stream_rng, unitarity_defect, SuiteConfig};
use crate::morphism::{Morphism, Tolerance};
use crate::object::Object;
use crate::ortho::{self, OplusDecomposition};
use crate::report::{lit, Check, CheckResult, MatrixLiteral, Status, VerificationReport};
use crate::sccc;
use crate::wproj::{lift, wequal, WMorphism};

/// Outcome-indexed morphisms `⟨f₀, …, fₙ₋₁⟩` out of a common domain.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchTuple {
    branches: Vec<Morphism<Complex64>>,
    labels: Vec<usize>,
}

impl BranchTuple {
    pub fn new(branches: Vec<Morphism<Complex64>>) -> Result<Self> {
        let first =
            branches.first().ok_or_else(|| Error::Unsupported("a branch tuple needs at least one branch".into()))?;
        for b in &branches {
            if b.dom().normalize() != first.dom().normalize() {
                return Err(Error::TypeMismatch {
                    context: "branch tuple",
                    expected: first.dom().clone(),
                    found: b.dom().clone(),
                });
            }
        }
        let labels = (0..branches.len()).collect();
        Ok(BranchTuple { branches, labels })
    }

    pub fn branches(&self) -> &[Morphism<Complex64>] {
        &self.branches
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.branches.len()
    }

    pub fn is_empty(&self) -> bool {
        self.branches.is_empty()
    }

    pub fn dom(&self) -> &Object {
        self.branches[0].dom()
    }

    /// `p̃ᵢ ∘ ⟨f₀, …⟩ = fᵢ`.
    pub fn project(&self, i: usize) -> Result<&Morphism<Complex64>> {
        self.branches.get(i).ok_or(Error::IndexOutOfRange { index: i, len: self.branches.len() })
    }

    pub fn map(&self, f: impl Fn(&Morphism<Complex64>) -> Result<Morphism<Complex64>>) -> Result<Self> {
        BranchTuple::new(self.branches.iter().map(f).collect::<Result<_>>()?)
    }

    /// The tuple as a single morphism into the biproduct of the branch
    /// codomains.
    pub fn to_biproduct(&self) -> Result<Morphism<Complex64>> {
        pairing(&self.branches)
    }

    /// Splits `f : C → ⊕ Bᵢ` into its components `pᵢ ∘ f`.
    pub fn from_biproduct(f: &Morphism<Complex64>, decomp: &OplusDecomposition) -> Result<Self> {
        let branches = (0..decomp.len())
            .map(|i| {
                let (p, _) = ortho::pseudo_maps::<Complex64>(decomp, i)?;
                p.compose(f)
            })
            .collect::<Result<_>>()?;
        BranchTuple::new(branches)
    }

    pub fn approx_eq(&self, other: &BranchTuple, tol: &Tolerance) -> bool {
        self.len() == other.len()
            && self
                .branches
                .iter()
                .zip(&other.branches)
                .all(|(a, b)| a.same_type(b, "branch").is_ok() && a.approx_eq(b, tol))
    }
}

/// A measurement given by a unitary `U : A → ⊕ Aᵢ`. Outcome `i` has
/// `πᵢ = pᵢ ∘ U` and projector `Pᵢ = πᵢ† ∘ πᵢ`.
#[derive(Debug, Clone)]
pub struct MeasurementSpec {
    u: Morphism<Complex64>,
    decomp: OplusDecomposition,
}

impl MeasurementSpec {
    pub fn new(u: Morphism<Complex64>, decomp: OplusDecomposition, tol: &Tolerance) -> Result<Self> {
        if u.cod().normalize() != decomp.whole().normalize() {
            return Err(Error::TypeMismatch {
                context: "measurement",
                expected: decomp.whole().clone(),
                found: u.cod().clone(),
            });
        }
        let defect = unitarity_defect(&u);
        if u.rows() != u.cols() || defect > tol.threshold(1.0) {
            return Err(Error::NotUnitary { distance: defect });
        }
        Ok(MeasurementSpec { u, decomp })
    }

    /// The measurement in the computational basis of `I ⊕ … ⊕ I`.
    pub fn computational(n: usize) -> Self {
        let decomp = OplusDecomposition::new(vec![Object::Unit; n]).expect("nonempty");
        let u = Morphism::identity(decomp.whole());
        MeasurementSpec { u, decomp }
    }

    pub fn u(&self) -> &Morphism<Complex64> {
        &self.u
    }

    pub fn decomp(&self) -> &OplusDecomposition {
        &self.decomp
    }

    pub fn outcomes(&self) -> usize {
        self.decomp.len()
    }

    pub fn pi(&self, i: usize) -> Result<Morphism<Complex64>> {
        let (p, _) = ortho::pseudo_maps::<Complex64>(&self.decomp, i)?;
        p.compose(&self.u)
    }

    pub fn projector(&self, i: usize) -> Result<Morphism<Complex64>> {
        let pi = self.pi(i)?;
        pi.dagger().compose(&pi)
    }
}

/// The branches `Pᵢ ∘ ψ` together with their probabilities `ψ† ∘ Pᵢ ∘ ψ`.
pub fn nondestructive_measurement(
    spec: &MeasurementSpec,
    psi: &Morphism<Complex64>,
    tol: &Tolerance,
) -> Result<(BranchTuple, Vec<f64>)> {
    let mut branches = Vec::with_capacity(spec.outcomes());
    let mut probs = Vec::with_capacity(spec.outcomes());
    for i in 0..spec.outcomes() {
        let p = spec.projector(i)?;
        probs.push(sccc::born_prob(psi, &p, tol)?.value().expect("scalar").re);
        branches.push(p.compose(psi)?);
    }
    Ok((BranchTuple::new(branches)?, probs))
}

/// `(⊕ᵢ U†) ∘ (⊕ᵢ qᵢ) ∘ U : A → ⊕ᵢ A`.
pub fn measurement_oplus_style(spec: &MeasurementSpec) -> Result<Morphism<Complex64>> {
    let n = spec.outcomes();
    let qs = (0..n)
        .map(|i| ortho::pseudo_maps::<Complex64>(spec.decomp(), i).map(|(_, q)| q))
        .collect::<Result<Vec<_>>>()?;
    let sum_q = oplus_all(&qs)?;
    let udag = spec.u().dagger();
    let sum_udag = oplus_all(&vec![udag; n])?;
    sum_udag.compose(&sum_q)?.compose(spec.u())
}

fn oplus_all(fs: &[Morphism<Complex64>]) -> Result<Morphism<Complex64>> {
    let (first, rest) = fs.split_first().ok_or_else(|| Error::Unsupported("empty sum".into()))?;
    rest.iter().try_fold(first.clone(), |acc, f| ortho::oplus(&acc, f))
}

/// Classical communication `A ⊗ (B₀, B₁, …) → (A ⊗ B₀, A ⊗ B₁, …)`, applied
/// to `g ⊗ ⟨f₀, f₁, …⟩`: the quantum factor is copied into every branch.
pub fn cc_map(g: &Morphism<Complex64>, tuple: &BranchTuple) -> Result<BranchTuple> {
    tuple.map(|f| Ok(g.tensor(f)))
}

/// The Bell measurement and its corrections.
#[derive(Debug, Clone)]
pub struct TeleportationSetup {
    /// `T : Q ⊗ Q* → I ⊕ I ⊕ I ⊕ I`, rows the normalized Bell states.
    pub t: Morphism<Complex64>,
    /// `1, X, Z, X∘Z`.
    pub betas: [Morphism<Complex64>; 4],
}

pub fn qubit() -> Object {
    Object::gen("Q", 2)
}

fn four() -> OplusDecomposition {
    OplusDecomposition::new(vec![Object::Unit; 4]).expect("nonempty")
}

/// Row `i` of `T` is `⌜βᵢ_*⌝† / √2`; the measured pair is the input wire
/// and the dual half of `η_Q`, which has type `Q ⊗ Q*`.
pub fn bell_teleportation_setup() -> TeleportationSetup {
    let q = qubit();
    let c = |x: f64| Complex64::new(x, 0.0);
    let m = |rows: [[f64; 2]; 2]| {
        Morphism::from_rows(&q, &q, rows.iter().map(|r| r.iter().map(|&x| c(x)).collect()).collect()).expect("2x2")
    };
    let x = m([[0.0, 1.0], [1.0, 0.0]]);
    let z = m([[1.0, 0.0], [0.0, -1.0]]);
    let betas = [Morphism::identity(&q), x.clone(), z.clone(), x.compose(&z).expect("typed")];
    let s = c(std::f64::consts::FRAC_1_SQRT_2);
    let rows: Vec<Morphism<Complex64>> =
        betas.iter().map(|b| sccc::name_unchecked(&b.lower_star()).dagger().scale(&s)).collect();
    let t = pairing(&rows).expect("rows share a domain");
    let t = t.retype(&q.tensor(&q.dual()), four().whole()).expect("4x4");
    TeleportationSetup { t, betas }
}

/// One outcome of the protocol.
#[derive(Debug, Clone)]
pub struct TeleportBranch {
    pub index: usize,
    /// The output on the receiving qubit before correction.
    pub received: Morphism<Complex64>,
    /// `βᵢ† ∘ received`.
    pub corrected: Morphism<Complex64>,
    /// `‖received‖`.
    pub probability: f64,
}

/// `λ† ∘ (pᵢ ⊗ 1) ∘ (T ⊗ 1) ∘ α ∘ (1 ⊗ η_Q/√2) ∘ ρ`, the four maps that send the
/// input to what arrives in branch `i`.
fn branch_maps<W: Clone>(
    setup: &TeleportationSetup,
    embed: impl Fn(&Morphism<Complex64>) -> W,
    compose: impl Fn(&W, &W) -> Result<W>,
    tensor: impl Fn(&W, &W) -> W,
) -> Result<(W, Vec<W>)> {
    let q = qubit();
    let bell = sccc::unit::<Complex64>(&q).scale(&Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0));
    let alpha = sccc::associator::<Complex64>(&q, &q.dual(), &q);
    let id = Morphism::identity(&q);
    let measure = compose(&embed(&setup.t.tensor(&id)), &embed(&alpha))?;
    let unitor = embed(&sccc::left_unitor::<Complex64>(&q).dagger());
    let outs = (0..4)
        .map(|i| {
            let (p, _) = ortho::pseudo_maps::<Complex64>(&four(), i)?;
            compose(&unitor, &compose(&embed(&p.tensor(&id)), &measure)?)
        })
        .collect::<Result<_>>()?;
    let prepare = compose(&tensor(&embed(&id), &embed(&bell)), &embed(&sccc::right_unitor::<Complex64>(&q)))?;
    Ok((prepare, outs))
}

/// Teleports `ψ : I → Q` in complex matrices.
pub fn teleport(psi: &Morphism<Complex64>) -> Result<Vec<TeleportBranch>> {
    check_qubit_state(psi)?;
    let setup = bell_teleportation_setup();
    let (prepare, outs) = branch_maps(&setup, Clone::clone, |g, f| g.compose(f), |a, b| a.tensor(b))?;
    let shared = prepare.compose(psi)?;
    outs.iter()
        .enumerate()
        .map(|(i, out)| {
            let received = out.compose(&shared)?;
            let corrected = setup.betas[i].dagger().compose(&received)?;
            let probability = sccc::hs_norm_sq(&received).value().expect("scalar").re;
            Ok(TeleportBranch { index: i, received, corrected, probability })
        })
        .collect()
}

/// Teleports the phase class of `ψ`, returning the corrected branches.
pub fn teleport_wproj(psi: &WMorphism<Complex64>) -> Result<Vec<WMorphism<Complex64>>> {
    check_qubit_state(psi.rep())?;
    let setup = bell_teleportation_setup();
    let (prepare, outs) = branch_maps(&setup, lift, |g, f| g.compose(f), |a, b| a.tensor(b))?;
    let shared = prepare.compose(psi)?;
    outs.iter().zip(&setup.betas).map(|(out, beta)| lift(&beta.dagger()).compose(&out.compose(&shared)?)).collect()
}

fn check_qubit_state(psi: &Morphism<Complex64>) -> Result<()> {
    let q = qubit();
    if psi.dom().normalize() != Object::Unit || psi.cod().normalize() != q {
        return Err(Error::TypeMismatch { context: "teleported state", expected: q, found: psi.cod().clone() });
    }
    Ok(())
}

fn setup_checks(tol: &Tolerance) -> Vec<CheckResult> {
    let setup = bell_teleportation_setup();
    let mut unitary = Check::new("bell-measurement-unitary", "T† ∘ T = 1");
    unitary.record(
        unitarity_defect(&setup.t) <= tol.threshold(1.0),
        || vec![lit(&setup.t)],
        || format!("defect {:e}", unitarity_defect(&setup.t)),
    );
    let mut betas = Check::new("corrections-unitary", "βᵢ† ∘ βᵢ = 1");
    let mut names = Check::new("bell-rows-are-names", "⌜βᵢ_*⌝ / √2 = T† ∘ qᵢ");
    let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    for (i, b) in setup.betas.iter().enumerate() {
        betas.record(unitarity_defect(b) <= tol.threshold(1.0), || vec![lit(b)], String::new);
        let ok = ortho::pseudo_maps::<Complex64>(&four(), i)
            .and_then(|(_, q)| setup.t.dagger().compose(&q))
            .is_ok_and(|col| col.approx_eq(&sccc::name_unchecked(&b.lower_star()).scale(&s), tol));
        names.record(ok, || vec![lit(b), lit(&setup.t)], || format!("branch {i}"));
    }
    vec![unitary.finish(), betas.finish(), names.finish()]
}

fn branch_result(name: String, reference: &str, ok: bool, witness: Vec<MatrixLiteral>, detail: String) -> CheckResult {
    CheckResult {
        check_name: name,
        paper_ref: reference.to_owned(),
        status: if ok { Status::Pass } else { Status::Fail },
        witness: Some(witness),
        detail: Some(detail),
    }
}

/// Teleports one state in complex matrices and in the phase quotient,
/// reporting every branch with its output and probability.
pub fn run_teleportation(psi: &Morphism<Complex64>, cfg: &SuiteConfig) -> Result<VerificationReport> {
    let tol = &cfg.tolerance;
    let mut report = VerificationReport::new("teleport", "fdhilb", cfg.seed, tol.rel, 1);
    for r in setup_checks(tol) {
        report.push(r);
    }
    let half = psi.scale(&Complex64::new(0.5, 0.0));
    let norm = sccc::hs_norm_sq(psi).value().expect("scalar").re;
    let branches = teleport(psi)?;
    let mut total = 0.0;
    for b in &branches {
        total += b.probability;
        let out_ok = b.corrected.approx_eq(&half, tol);
        let prob_ok = (b.probability - norm / 4.0).abs() <= tol.threshold(norm);
        report.push(branch_result(
            format!("branch-{}", b.index),
            "βᵢ† ∘ outᵢ = ψ/2 and ‖outᵢ‖ = ‖ψ‖/4",
            out_ok && prob_ok,
            vec![lit(&b.corrected)],
            format!("probability {:.12}, expected {:.12}", b.probability, norm / 4.0),
        ));
    }
    let mut conserved = Check::new("probabilities-sum-to-norm", "Σᵢ ‖outᵢ‖ = ‖ψ‖");
    conserved.record((total - norm).abs() <= tol.threshold(norm), || vec![lit(psi)], || format!("{total} ≠ {norm}"));
    conserved.set_detail("Bell pair normalized to η_Q/√2, so every branch carries ψ/2");
    report.push(conserved.finish());

    let target = lift(&half);
    let phased = lift(&psi.scale(&Complex64::new(0.0, 1.0)));
    for (label, input) in [("", lift(psi)), ("-phase-shifted", phased)] {
        let outs = teleport_wproj(&input)?;
        for (i, out) in outs.iter().enumerate() {
            let ok = wequal(out, &target, tol)?;
            report.push(branch_result(
                format!("wproj-branch-{i}{label}"),
                "[βᵢ† ∘ outᵢ] = [ψ/2]",
                ok,
                vec![lit(out.rep())],
                "compared as phase classes".into(),
            ));
        }
    }
    Ok(report)
}

/// Random unitaries `A → ⊕ Aᵢ` with positive part dimensions summing to `d`.
fn random_spec<R: Rng + ?Sized>(d: usize, rng: &mut R, tol: &Tolerance) -> Result<MeasurementSpec> {
    let parts = rng.random_range(1..=d.min(3));
    let mut dims = vec![1; parts];
    for _ in parts..d {
        let k = rng.random_range(0..parts);
        dims[k] += 1;
    }
    let seed = rng.random::<u64>();
    let u = models::random_unitary(&models::fdhilb(), &dims, seed)?;
    let decomp = if parts == 1 {
        OplusDecomposition::new(vec![u.cod().clone()])?
    } else {
        OplusDecomposition::from_object(u.cod())
    };
    MeasurementSpec::new(u, decomp, tol)
}

/// Measurement invariants, classical branching and teleportation.
pub fn verify_protocols(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let tol = &cfg.tolerance;
    let mut report = VerificationReport::new("protocols", "fdhilb", cfg.seed, tol.rel, cfg.trials);

    let mut adjoint = Check::new("measurement-projectors-self-adjoint", "Pᵢ† = Pᵢ");
    let mut idempotent = Check::new("measurement-projectors-idempotent", "Pᵢ ∘ Pᵢ = Pᵢ");
    let mut orthogonal = Check::new("measurement-projectors-orthogonal", "Pᵢ ∘ Pⱼ = 0 for i ≠ j");
    let mut conserved = Check::new("measurement-probability-conserved", "Σᵢ ψ† Pᵢ ψ = ‖ψ‖");
    let mut stacked = Check::new("oplus-measurement-is-pairing", "(⊕U†)(⊕qᵢ)U = ⟨πᵢ† ∘ πᵢ⟩");
    let mut extract = Check::new("oplus-measurement-branches", "pⱼ ∘ (⊕U†)(⊕qᵢ)U ∘ ψ = Pⱼ ∘ ψ");
    let mut roundtrip = Check::new("branch-tuple-roundtrip", "p̃ᵢ ∘ ⟨f₀, …⟩ = fᵢ");

    let mut rng = stream_rng(cfg.seed, 51);
    let max_dim = cfg.max_dim.clamp(1, 6);
    for d in 1..=max_dim {
        for _ in 0..cfg.trials {
            let spec = random_spec(d, &mut rng, tol)?;
            let a = spec.u().dom().clone();
            let psi: Morphism<Complex64> = random_state(&a, &mut rng);
            let w = || vec![lit(spec.u()), lit(&psi)];
            let ps = (0..spec.outcomes()).map(|i| spec.projector(i)).collect::<Result<Vec<_>>>()?;
            for (i, p) in ps.iter().enumerate() {
                adjoint.record(p.dagger().approx_eq(p, tol), w, String::new);
                idempotent.record(p.compose(p)?.approx_eq(p, tol), w, String::new);
                for (j, p2) in ps.iter().enumerate() {
                    if i != j {
                        let prod = p.compose(p2)?;
                        orthogonal
                            .record(prod.max_magnitude() <= tol.threshold(1.0), w, || format!("outcomes {i}, {j}"));
                    }
                }
            }
            let norm = sccc::hs_norm_sq(&psi).value().expect("scalar").re;
            match nondestructive_measurement(&spec, &psi, tol) {
                Ok((_, probs)) => {
                    let total: f64 = probs.iter().sum();
                    conserved.record((total - norm).abs() <= tol.threshold(norm), w, || format!("{total} ≠ {norm}"));
                }
                Err(e) => conserved.record(false, w, || e.to_string()),
            }

            let m = measurement_oplus_style(&spec)?;
            let pair = pairing(&ps)?;
            stacked.record(m.max_distance(&pair) <= tol.threshold(1.0), w, String::new);
            let copies = OplusDecomposition::new(vec![a.clone(); spec.outcomes()])?;
            let split = BranchTuple::from_biproduct(&m.compose(&psi)?, &copies)?;
            let direct = BranchTuple::new(ps.iter().map(|p| p.compose(&psi)).collect::<Result<_>>()?)?;
            extract.record(split.approx_eq(&direct, tol), w, String::new);
            let back = BranchTuple::from_biproduct(&direct.to_biproduct()?, &copies)?;
            roundtrip.record(back == direct, w, String::new);
        }
    }
    for c in [adjoint, idempotent, orthogonal, conserved, stacked, extract, roundtrip] {
        report.push(c.finish());
    }

    for r in cc_checks(cfg)? {
        report.push(r);
    }
    report.push(weighted_bit_check(tol)?);
    report.extend(verify_teleportation(cfg)?);
    Ok(report)
}

/// Teleports `cfg.trials` random unnormalized states, in complex matrices
/// and as phase classes with a random global phase on the input.
pub fn verify_teleportation(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let tol = &cfg.tolerance;
    let mut report = VerificationReport::new("teleport", "fdhilb", cfg.seed, tol.rel, cfg.trials);
    for r in setup_checks(tol) {
        report.push(r);
    }
    let mut tele = Check::new("teleportation-branches", "βᵢ† ∘ outᵢ = ψ/2 and ‖outᵢ‖ = ‖ψ‖/4 for every branch");
    let mut tele_sum = Check::new("teleportation-probabilities-sum", "Σᵢ ‖outᵢ‖ = ‖ψ‖");
    let mut tele_w = Check::new("teleportation-phase-robust", "[βᵢ† ∘ outᵢ(e^{iθ}ψ)] = [ψ/2]");
    let mut rng = stream_rng(cfg.seed, 52);
    for _ in 0..cfg.trials {
        let psi: Morphism<Complex64> = random_state(&qubit(), &mut rng);
        let half = psi.scale(&Complex64::new(0.5, 0.0));
        let norm = sccc::hs_norm_sq(&psi).value().expect("scalar").re;
        let branches = teleport(&psi)?;
        for b in &branches {
            let ok = b.corrected.approx_eq(&half, tol) && (b.probability - norm / 4.0).abs() <= tol.threshold(norm);
            tele.record(ok, || vec![lit(&psi)], || format!("branch {}", b.index));
        }
        let total: f64 = branches.iter().map(|b| b.probability).sum();
        tele_sum.record((total - norm).abs() <= tol.threshold(norm), || vec![lit(&psi)], String::new);
        let theta = rng.random_range(0.0..std::f64::consts::TAU);
        let target = lift(&half);
        for shift in [Complex64::new(0.0, 1.0), Complex64::from_polar(1.0, theta)] {
            for out in teleport_wproj(&lift(&psi.scale(&shift)))? {
                tele_w.record_result(wequal(&out, &target, tol), || vec![lit(&psi)]);
            }
        }
    }
    tele.set_detail("Bell pair normalized to η_Q/√2");
    for c in [tele, tele_sum, tele_w] {
        report.push(c.finish());
    }
    Ok(report)
}

fn cc_checks(cfg: &SuiteConfig) -> Result<Vec<CheckResult>> {
    let tol = &cfg.tolerance;
    let mut rng = stream_rng(cfg.seed, 53);
    let small = cfg.max_dim.clamp(1, 3);
    let mut dup = Check::new("cc-duplicates-identity", "CC(1_A ⊗ ⟨1_B, 1_B⟩) = ⟨1_{A⊗B}, 1_{A⊗B}⟩");
    let mut proj = Check::new("cc-then-project", "p̃ᵢ ∘ CC(g ⊗ t) = g ⊗ p̃ᵢ(t)");
    let mut discard =
        Check::new("cc-branch-discard-not-injective", "p̃₀ ∘ CC identifies tuples that differ off branch 0");
    for _ in 0..cfg.trials {
        let a = models::random_object(&mut rng, "A", small);
        let b = models::random_object(&mut rng, "B", small);
        let c = models::random_object(&mut rng, "C", small);
        let ids = BranchTuple::new(vec![Morphism::identity(&b), Morphism::identity(&b)])?;
        let out = cc_map(&Morphism::identity(&a), &ids)?;
        let ab = Morphism::identity(&a.tensor(&b));
        let expected = BranchTuple::new(vec![ab.clone(), ab])?;
        dup.record(out == expected, Vec::new, String::new);

        let x = models::random_object(&mut rng, "X", small);
        let y = models::random_object(&mut rng, "Y", small);
        let g: Morphism<Complex64> = random_morphism(&y, &a, &mut rng);
        let t = BranchTuple::new(vec![random_morphism(&x, &b, &mut rng), random_morphism(&x, &c, &mut rng)])?;
        let image = cc_map(&g, &t)?;
        for i in 0..2 {
            let ok = image.project(i)?.approx_eq(&g.tensor(t.project(i)?), tol);
            proj.record(ok, || vec![lit(&g)], || format!("branch {i}"));
        }

        let t2 = BranchTuple::new(vec![t.project(0)?.clone(), random_morphism(&x, &c, &mut rng)])?;
        let distinct = !t2.approx_eq(&t, tol);
        let same_image = cc_map(&g, &t2)?.project(0)?.approx_eq(image.project(0)?, tol);
        discard.record(distinct && same_image, || vec![lit(&g)], || "no collision found".into());
    }
    discard.set_detail("partial check: only the branch-discarding composite is shown non-injective");
    Ok(vec![dup.finish(), proj.finish(), discard.finish()])
}

/// The destructive measurement `⟨p_{I̲,I}, p_{I,I̲}⟩ : I ⊕ I → (I, I)` sends
/// `(1, 1)/√2` and `(1, i)/√2` to the same probabilities, and in the phase
/// quotient to the same branch tuple, although the two states differ.
fn weighted_bit_check(tol: &Tolerance) -> Result<CheckResult> {
    let two = ortho::two();
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let psi = Morphism::state(&two, vec![Complex64::new(s, 0.0), Complex64::new(s, 0.0)])?;
    let phi = Morphism::state(&two, vec![Complex64::new(s, 0.0), Complex64::new(0.0, s)])?;
    let decomp = OplusDecomposition::new(vec![Object::Unit, Object::Unit])?;
    let readout = |x: &Morphism<Complex64>| -> Result<Vec<Morphism<Complex64>>> {
        (0..2).map(|i| ortho::pseudo_maps::<Complex64>(&decomp, i)?.0.compose(x)).collect()
    };
    let (rp, rf) = (readout(&psi)?, readout(&phi)?);
    let mut same_probs = true;
    let mut same_classes = true;
    for (a, b) in rp.iter().zip(&rf) {
        let (pa, pb) = (sccc::hs_norm_sq(a), sccc::hs_norm_sq(b));
        same_probs &= pa.approx_eq(&pb, tol);
        same_classes &= wequal(&lift(a), &lift(b), tol)?;
    }
    let states_differ = !wequal(&lift(&psi), &lift(&phi), tol)?;
    let mut check = Check::new("weighted-bit-forgets-relative-phase", "⟨p_{I̲,I}, p_{I,I̲}⟩ has no inverse");
    check.record(
        same_probs && same_classes && states_differ,
        || vec![lit(&psi), lit(&phi)],
        || format!("probabilities equal {same_probs}, classes equal {same_classes}, states differ {states_differ}"),
    );
    Ok(check.finish())
}
