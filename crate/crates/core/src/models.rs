//! Concrete models: complex matrices (finite-dimensional Hilbert spaces),
//! matrices over other involutive semirings, and seeded random generators.

use std::marker::PhantomData;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::morphism::{Morphism, Tolerance};
use crate::object::Object;
use crate::report::{lit, Check, VerificationReport};
use crate::sccc;
use crate::semiring::{check_semiring_laws, Boolean, InvolutiveSemiring, TransposeComplex, Weight};

/// Parameters shared by every verification suite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteConfig {
    pub trials: usize,
    pub seed: u64,
    pub tolerance: Tolerance,
    pub max_dim: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { trials: 200, seed: 7, tolerance: Tolerance::default(), max_dim: 6 }
    }
}

/// A matrix model over the semiring `S`.
#[derive(Debug, Clone)]
pub struct Model<S> {
    name: String,
    has_biproducts: bool,
    _scalars: PhantomData<fn() -> S>,
}

impl<S: InvolutiveSemiring> Model<S> {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn has_biproducts(&self) -> bool {
        self.has_biproducts
    }
}

/// Complex matrices with conjugation as involution.
pub fn fdhilb() -> Model<Complex64> {
    Model { name: "fdhilb".into(), has_biproducts: true, _scalars: PhantomData }
}

/// Matrices over `S`, after checking the semiring laws on the grid
/// elements plus a few seeded samples.
pub fn semiring_model<S: InvolutiveSemiring>(name: &str) -> Result<Model<S>> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut elements = S::grid();
    elements.extend((0..6).map(|_| S::sample(&mut rng)));
    check_semiring_laws(&elements, 1e-9)?;
    Ok(Model { name: name.into(), has_biproducts: true, _scalars: PhantomData })
}

/// Relations: boolean matrices.
pub fn rel() -> Model<Boolean> {
    semiring_model("Rel").expect("the boolean semiring is lawful")
}

/// Nonnegative real matrices, a model without phases.
pub fn weights() -> Model<Weight> {
    semiring_model("WeightModel").expect("nonnegative reals are lawful")
}

/// Complex matrices with transpose as adjoint, a negative control.
pub fn transpose_complex() -> Model<TransposeComplex> {
    semiring_model("TransposeComplex").expect("identity involution is lawful")
}

/// Deterministic generator for one named stream of a suite.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn random_dim<R: Rng + ?Sized>(rng: &mut R, max_dim: usize) -> usize {
    rng.random_range(1..=max_dim.max(1))
}

pub fn random_object<R: Rng + ?Sized>(rng: &mut R, label: &str, max_dim: usize) -> Object {
    Object::gen(label, random_dim(rng, max_dim))
}

pub fn random_morphism<S: InvolutiveSemiring, R: Rng + ?Sized>(dom: &Object, cod: &Object, rng: &mut R) -> Morphism<S> {
    Morphism::from_fn(dom, cod, |_, _| S::sample(rng))
}

/// An unnormalized random state `I → A`.
pub fn random_state<S: InvolutiveSemiring, R: Rng + ?Sized>(a: &Object, rng: &mut R) -> Morphism<S> {
    random_morphism(&Object::Unit, a, rng)
}

/// Rescales a nonzero state to unit norm.
pub fn normalized(psi: &Morphism<Complex64>) -> Morphism<Complex64> {
    let n = sccc::hs_norm_sq(psi).value().map_or(0.0, |v| v.re).sqrt();
    if n == 0.0 {
        return psi.clone();
    }
    psi.scale(&Complex64::new(1.0 / n, 0.0))
}

const MAX_RESAMPLES: usize = 8;

/// Orthonormalizes the columns of a random complex Gaussian matrix
/// (modified Gram–Schmidt) to give a unitary `dom → cod`.
pub fn random_unitary_between<R: Rng + ?Sized>(dom: &Object, cod: &Object, rng: &mut R) -> Result<Morphism<Complex64>> {
    let n = dom.dim();
    if cod.dim() != n {
        return Err(Error::ShapeMismatch { rows: cod.dim(), cols: n, dom: dom.clone(), cod: cod.clone() });
    }
    'attempt: for _ in 0..MAX_RESAMPLES {
        let mut cols: Vec<Vec<Complex64>> = (0..n).map(|_| (0..n).map(|_| Complex64::sample(rng)).collect()).collect();
        for k in 0..n {
            for j in 0..k {
                let proj: Complex64 = cols[j].iter().zip(&cols[k]).map(|(a, b)| a.conj() * b).sum();
                let basis = cols[j].clone();
                for (x, e) in cols[k].iter_mut().zip(&basis) {
                    *x -= proj * e;
                }
            }
            let norm = cols[k].iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
            if norm < 1e-10 {
                continue 'attempt;
            }
            for x in &mut cols[k] {
                *x /= norm;
            }
        }
        return Ok(Morphism::from_fn(dom, cod, |i, j| cols[j][i]));
    }
    Err(Error::DegenerateSample { attempts: MAX_RESAMPLES })
}

fn part_object(label: &str, d: usize) -> Object {
    if d == 1 {
        Object::Unit
    } else {
        Object::gen(label, d)
    }
}

/// A seeded unitary `A → A₀ ⊕ A₁ ⊕ …` with `dim Aᵢ = dims[i]`. Parts of
/// dimension one are the unit object; a total dimension of one gives a
/// scalar.
pub fn random_unitary(model: &Model<Complex64>, dims: &[usize], seed: u64) -> Result<Morphism<Complex64>> {
    let total: usize = dims.iter().sum();
    if total == 0 || !model.has_biproducts() {
        return Err(Error::Unsupported("random unitaries need a positive total dimension".into()));
    }
    let dom = part_object("A", total);
    let parts: Vec<Object> = dims
        .iter()
        .enumerate()
        .map(|(i, &d)| if d == 0 { Object::Zero } else { part_object(&format!("A{i}"), d) })
        .collect();
    let cod = if parts.len() == 1 { parts[0].clone() } else { Object::left_nested_oplus(&parts) };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_unitary_between(&dom, &cod, &mut rng)
}

/// `‖U†U − 1‖∞`.
pub fn unitarity_defect(u: &Morphism<Complex64>) -> f64 {
    let gram = u.dagger().compose(u).expect("U†U is typed");
    gram.max_distance(&Morphism::identity(u.dom()))
}

/// The biproduct pairing `⟨f₀, …, fₙ₋₁⟩ : C → ⊕ Aᵢ`, stacking blocks along
/// a left-nested sum.
pub fn pairing<S: InvolutiveSemiring>(fs: &[Morphism<S>]) -> Result<Morphism<S>> {
    let first = fs.first().ok_or_else(|| Error::Unsupported("empty pairing".into()))?;
    let dom = first.dom().clone();
    for f in fs {
        if *f.dom() != dom {
            return Err(Error::TypeMismatch { context: "pairing", expected: dom.clone(), found: f.dom().clone() });
        }
    }
    let cods: Vec<Object> = fs.iter().map(|f| f.cod().clone()).collect();
    let cod = Object::left_nested_oplus(&cods);
    let mut offsets = Vec::with_capacity(fs.len());
    let mut acc = 0;
    for f in fs {
        offsets.push(acc);
        acc += f.rows();
    }
    Ok(Morphism::from_fn(&dom, &cod, |i, j| {
        let k =
            (0..fs.len()).find(|&k| i >= offsets[k] && i < offsets[k] + fs[k].rows()).expect("row lies in some block");
        fs[k].entry(i - offsets[k], j).clone()
    }))
}

/// Runs every structural law of a strongly compact closed category against
/// matrices over `S`. Failures are data: each carries a counterexample.
pub fn verify_model_axioms<S: InvolutiveSemiring>(model: &Model<S>, cfg: &SuiteConfig) -> VerificationReport {
    let tol = &cfg.tolerance;
    let mut report = VerificationReport::new("sccc", model.name(), cfg.seed, tol.rel, cfg.trials);
    let max_dim = cfg.max_dim.max(1);
    let dims = 1..=max_dim;

    // Laws indexed by dimension rather than by random trial.
    let mut yank = Check::new("yanking", "λ† ∘ (η_{A*}† ⊗ 1) ∘ (1 ⊗ η_A) ∘ ρ = 1_A");
    let mut eta_coherence = Check::new("unit-coherence", "η_{A*} = σ_{A*,A} ∘ η_A");
    let mut trace_yank = Check::new("partial-trace-yanking", "Tr_A(σ_{A,A}) = 1_A");
    let mut objects: Vec<Object> = dims.clone().map(|d| Object::gen("A", d)).collect();
    objects.push(Object::Unit);
    objects.push(Object::Unit.oplus(&Object::Unit));
    for a in &objects {
        let id = Morphism::<S>::identity(a);
        match sccc::yanking::<S>(a) {
            Ok(y) => {
                let ok = y.approx_eq(&id, tol);
                yank.record(ok, || vec![lit(&y)], || format!("fails on {a}"));
            }
            Err(e) => yank.record(false, Vec::new, || e.to_string()),
        }
        let a_star = a.dual().normalize();
        let lhs = sccc::unit::<S>(&a_star);
        let rhs = sccc::symmetry::<S>(&a_star, a).compose(&sccc::unit(a)).expect("σ composes with η");
        eta_coherence.record(lhs.approx_eq(&rhs, tol), || vec![lit(&lhs), lit(&rhs)], || format!("fails on {a}"));
        if a.dim() <= 6 {
            let sigma = sccc::symmetry::<S>(a, a);
            let outcome = sccc::partial_trace(&sigma, a);
            let ok = outcome.as_ref().is_ok_and(|t| t.approx_eq(&id, tol));
            trace_yank.record(ok, || vec![lit(&sigma)], || format!("fails on {a}"));
        }
    }
    report.push(yank.finish());
    report.push(eta_coherence.finish());
    report.push(trace_yank.finish());

    let mut unitary_isos = Check::new("coherence-isos-unitary", "χ† ∘ χ = 1 and χ ∘ χ† = 1 for λ, ρ, α, σ, u_I");
    let mut adjoint_laws = Check::new("adjoint-involutive-contravariant", "f†† = f, (g∘f)† = f†∘g†");
    let mut adjoint_split = Check::new("adjoint-decomposes", "f† = (f*)_* = (f_*)*");
    let mut lemma_compose = Check::new("scalar-mult-composition", "(s•f) ∘ (t•g) = (s∘t) • (f∘g)");
    let mut lemma_tensor = Check::new("scalar-mult-tensor", "(s•f) ⊗ (t•g) = (s∘t) • (f⊗g)");
    let mut names = Check::new("name-unfoldings-agree", "(1 ⊗ f) ∘ η_A = (f* ⊗ 1) ∘ η_B");
    let mut naturality = Check::new("symmetry-naturality", "σ ∘ (f⊗g) = (g⊗f) ∘ σ");
    let mut interchange = Check::new("interchange-law", "(f⊗g) ∘ (h⊗k) = (f∘h) ⊗ (g∘k)");
    let mut scalars_commute = Check::new("scalars-commute", "s ∘ t = t ∘ s");
    let mut hs_trace = Check::new("hs-inner-is-trace-form", "⟨f|g⟩ = Tr(f† ∘ g)");
    let mut hs_states = Check::new("hs-inner-on-states", "⌜ψ⌝† ∘ ⌜φ⌝ = ψ† ∘ φ");
    let mut hs_positive = Check::new("hs-norm-positive", "‖f‖ = ⌜f⌝† ∘ ⌜f⌝ is a positive scalar");
    let mut density = Check::new("density-via-tensor", "ψ ∘ ψ† = ρ† ∘ (ψ ⊗ ψ†) ∘ λ");
    let mut born_loop = Check::new("born-loop", "ψ† ∘ P ∘ ψ = Tr(P ∘ ψ∘ψ†)");
    let mut phase_unitary = Check::new("sampled-phases-unitary", "s ∘ s† = 1 for sampled phases");
    let mut phase_doubles = Check::new("phase-kills-double", "s•f = t•g, s∘s† = t∘t† = 1 ⇒ f⊗f† = g⊗g†");
    let mut phase_witness =
        Check::new("double-yields-witnesses", "f⊗f† = g⊗g† ⇒ s•f = t•g, s∘s† = t∘t† with s = ⌜f⌝†⌜f⌝, t = ⌜g⌝†⌜f⌝");
    let mut trace_diag = Check::new("trace-is-diagonal-sum", "η† ∘ (1 ⊗ h) ∘ η = Σᵢ hᵢᵢ");

    let mut rng = stream_rng(cfg.seed, 1);
    for _ in 0..cfg.trials {
        let a = random_object(&mut rng, "A", max_dim);
        let b = random_object(&mut rng, "B", max_dim);
        let c = random_object(&mut rng, "C", max_dim);
        let d = random_object(&mut rng, "D", max_dim);

        // Unitary coherence isomorphisms on this trial's objects.
        let isos: Vec<Morphism<S>> = vec![
            sccc::left_unitor(&a),
            sccc::right_unitor(&a),
            sccc::associator(&a, &b, &c),
            sccc::symmetry(&a, &b),
            sccc::dual_unit_iso(),
        ];
        for chi in &isos {
            let left = chi.dagger().compose(chi).expect("χ†∘χ");
            let right = chi.compose(&chi.dagger()).expect("χ∘χ†");
            let ok = left.approx_eq(&Morphism::identity(chi.dom()), tol)
                && right.approx_eq(&Morphism::identity(chi.cod()), tol);
            unitary_isos.record(ok, || vec![lit(chi)], || "not unitary".into());
        }

        let f: Morphism<S> = random_morphism(&a, &b, &mut rng);
        let g: Morphism<S> = random_morphism(&b, &c, &mut rng);
        let h: Morphism<S> = random_morphism(&c, &d, &mut rng);
        let k: Morphism<S> = random_morphism(&d, &a, &mut rng);
        let s = Morphism::scalar(S::sample(&mut rng));
        let t = Morphism::scalar(S::sample(&mut rng));

        let gf = g.compose(&f).expect("typed");
        let ok =
            f.dagger().dagger() == f && gf.dagger().approx_eq(&f.dagger().compose(&g.dagger()).expect("typed"), tol);
        adjoint_laws.record(ok, || vec![lit(&f), lit(&g)], String::new);

        let via_star = f.star().lower_star();
        let via_lower = f.lower_star().star();
        let ok = via_star.approx_eq(&f.dagger(), tol) && via_lower.approx_eq(&f.dagger(), tol);
        adjoint_split.record(ok, || vec![lit(&f)], String::new);

        // (s•g) ∘ (t•f) = (s∘t) • (g∘f)
        let outcome = (|| -> Result<bool> {
            let lhs = sccc::scalar_mult(&s, &g)?.compose(&sccc::scalar_mult(&t, &f)?)?;
            let rhs = sccc::scalar_mult(&s.compose(&t)?, &gf)?;
            Ok(lhs.approx_eq(&rhs, tol))
        })();
        lemma_compose.record_result(outcome, || vec![lit(&s), lit(&t), lit(&f), lit(&g)]);

        let outcome = (|| -> Result<bool> {
            let lhs = sccc::scalar_mult(&s, &f)?.tensor(&sccc::scalar_mult(&t, &h)?);
            let rhs = sccc::scalar_mult(&s.compose(&t)?, &f.tensor(&h))?;
            Ok(lhs.approx_eq(&rhs, tol))
        })();
        lemma_tensor.record_result(outcome, || vec![lit(&s), lit(&t), lit(&f), lit(&h)]);

        names.record(sccc::name(&f, tol).is_ok(), || vec![lit(&f)], || "absorption unfolding differs".into());

        let lhs = sccc::symmetry::<S>(&b, &d).compose(&f.tensor(&h)).expect("typed");
        let rhs = h.tensor(&f).compose(&sccc::symmetry(&a, &c)).expect("typed");
        naturality.record(lhs.approx_eq(&rhs, tol), || vec![lit(&f), lit(&h)], String::new);

        // (g⊗k) ∘ (f⊗h) = (g∘f) ⊗ (k∘h)
        let lhs = g.tensor(&k).compose(&f.tensor(&h)).expect("typed");
        let rhs = gf.tensor(&k.compose(&h).expect("typed"));
        interchange.record(lhs.approx_eq(&rhs, tol), || vec![lit(&f), lit(&g), lit(&h), lit(&k)], String::new);

        let st = s.compose(&t).expect("scalars");
        let ts = t.compose(&s).expect("scalars");
        scalars_commute.record(st.approx_eq(&ts, tol), || vec![lit(&s), lit(&t)], String::new);

        let f2: Morphism<S> = random_morphism(&a, &b, &mut rng);
        let outcome = (|| -> Result<bool> {
            let inner = sccc::hs_inner(&f, &f2)?;
            let by_trace = sccc::trace(&f.dagger().compose(&f2)?)?;
            Ok(inner.approx_eq(&by_trace, tol))
        })();
        hs_trace.record_result(outcome, || vec![lit(&f), lit(&f2)]);

        let norm = sccc::hs_norm_sq(&f);
        hs_positive.record(
            norm.value().is_some_and(|v| {
                v.is_nonnegative(tol.threshold(norm.max_magnitude()))
                    && v.distance(&v.involution()) <= tol.threshold(v.magnitude())
            }),
            || vec![lit(&f), lit(&norm)],
            || "‖f‖ is not a nonnegative real".into(),
        );

        let psi: Morphism<S> = random_state(&a, &mut rng);
        let phi: Morphism<S> = random_state(&a, &mut rng);
        let outcome = (|| -> Result<bool> {
            let lhs = sccc::hs_inner(&psi, &phi)?;
            let rhs = psi.dagger().compose(&phi)?;
            Ok(lhs.approx_eq(&rhs, tol))
        })();
        hs_states.record_result(outcome, || vec![lit(&psi), lit(&phi)]);

        let outcome = (|| -> Result<bool> {
            let rho = psi.compose(&psi.dagger())?;
            Ok(rho.approx_eq(&sccc::density_via_tensor(&psi)?, tol))
        })();
        density.record_result(outcome, || vec![lit(&psi)]);

        let selector = Morphism::from_fn(&a, &a, |i, j| {
            if i == j && !(i * 7 + cfg.seed as usize).is_multiple_of(3) {
                S::one()
            } else {
                S::zero()
            }
        });
        let outcome = sccc::born_prob(&psi, &selector, tol).map(|_| true);
        born_loop.record_result(outcome, || vec![lit(&psi), lit(&selector)]);

        let h_endo: Morphism<S> = random_morphism(&a, &a, &mut rng);
        let diag_sum = (0..a.dim()).fold(S::zero(), |acc, i| acc.add(h_endo.entry(i, i)));
        let ok = sccc::trace(&h_endo).is_ok_and(|tr| tr.approx_eq(&Morphism::scalar(diag_sum.clone()), tol));
        trace_diag.record(ok, || vec![lit(&h_endo)], String::new);

        // Phases: sampled unit scalars should satisfy u∘u† = 1.
        let u = Morphism::scalar(S::sample_phase(&mut rng));
        let uu = u.compose(&u.dagger()).expect("scalars");
        let is_phase = uu.approx_eq(&Morphism::scalar(S::one()), tol);
        phase_unitary.record(is_phase, || vec![lit(&u)], || "u∘u† ≠ 1".into());
        let g_phase = sccc::scalar_mult(&u, &f).expect("scalar");
        if is_phase {
            let ok = sccc::double(&f).approx_eq(&sccc::double(&g_phase), tol);
            phase_doubles.record(ok, || vec![lit(&f), lit(&u)], String::new);
        }
        if sccc::double(&f).approx_eq(&sccc::double(&g_phase), tol) {
            let outcome = (|| -> Result<bool> {
                let (ws, wt) = sccc::phase_witnesses(&f, &g_phase, tol)?;
                let lhs = sccc::scalar_mult(&ws, &f)?;
                let rhs = sccc::scalar_mult(&wt, &g_phase)?;
                let ss = ws.compose(&ws.dagger())?;
                let tt = wt.compose(&wt.dagger())?;
                Ok(lhs.approx_eq(&rhs, tol) && ss.approx_eq(&tt, tol))
            })();
            phase_witness.record_result(outcome, || vec![lit(&f), lit(&g_phase)]);
        }
    }

    for check in [
        unitary_isos,
        adjoint_laws,
        adjoint_split,
        lemma_compose,
        lemma_tensor,
        names,
        naturality,
        interchange,
        scalars_commute,
        hs_trace,
        hs_states,
        hs_positive,
        density,
        born_loop,
        trace_diag,
        phase_unitary,
        phase_doubles,
        phase_witness,
    ] {
        report.push(check.finish());
    }
    report
}
