//! The global-phase quotient: morphisms are identified when their doubles
//! `f ⊗ f†` agree.

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::models::{random_morphism, random_object, stream_rng, Model, SuiteConfig};
use crate::morphism::{Morphism, Tolerance};
use crate::object::Object;
use crate::report::{lit, Check, VerificationReport};
use crate::sccc;
use crate::semiring::InvolutiveSemiring;

/// A morphism of the quotient, kept as a representative together with its
/// double.
#[derive(Clone, PartialEq)]
pub struct WMorphism<S> {
    rep: Morphism<S>,
    doubled: Morphism<S>,
}

impl<S: InvolutiveSemiring> std::fmt::Debug for WMorphism<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("WMorphism").field("rep", &self.rep).finish()
    }
}

impl<S: InvolutiveSemiring> WMorphism<S> {
    pub fn lift(f: Morphism<S>) -> Self {
        let doubled = sccc::double(&f);
        WMorphism { rep: f, doubled }
    }

    pub fn rep(&self) -> &Morphism<S> {
        &self.rep
    }

    pub fn doubled(&self) -> &Morphism<S> {
        &self.doubled
    }

    pub fn dom(&self) -> &Object {
        self.rep.dom()
    }

    pub fn cod(&self) -> &Object {
        self.rep.cod()
    }

    pub fn identity(a: &Object) -> Self {
        Self::lift(Morphism::identity(a))
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &WMorphism<S>) -> Result<Self> {
        Ok(Self::lift(self.rep.compose(&f.rep)?))
    }

    pub fn tensor(&self, g: &WMorphism<S>) -> Self {
        Self::lift(self.rep.tensor(&g.rep))
    }

    pub fn dagger(&self) -> Self {
        Self::lift(self.rep.dagger())
    }

    pub fn lower_star(&self) -> Self {
        Self::lift(self.rep.lower_star())
    }
}

pub fn lift<S: InvolutiveSemiring>(f: &Morphism<S>) -> WMorphism<S> {
    WMorphism::lift(f.clone())
}

/// `g ∘ f` in the quotient.
pub fn wcompose<S: InvolutiveSemiring>(g: &WMorphism<S>, f: &WMorphism<S>) -> Result<WMorphism<S>> {
    g.compose(f)
}

pub fn wtensor<S: InvolutiveSemiring>(f: &WMorphism<S>, g: &WMorphism<S>) -> WMorphism<S> {
    f.tensor(g)
}

pub fn wdagger<S: InvolutiveSemiring>(f: &WMorphism<S>) -> WMorphism<S> {
    f.dagger()
}

/// The three equivalent tests for phase equality of two morphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Criteria {
    /// `f ⊗ f† = g ⊗ g†`
    pub doubled: bool,
    /// `f ⊗ f_* = g ⊗ g_*`
    pub lower_star: bool,
    /// `P_f = P_g`
    pub projector: bool,
}

impl Criteria {
    pub fn agree(&self) -> bool {
        self.doubled == self.lower_star && self.lower_star == self.projector
    }

    pub fn all(&self) -> bool {
        self.doubled && self.lower_star && self.projector
    }
}

/// Tolerance threshold for products of entries of `f` and `g`: it scales
/// with the square of the larger factor.
fn doubled_threshold<S: InvolutiveSemiring>(f: &Morphism<S>, g: &Morphism<S>, tol: &Tolerance) -> f64 {
    let m = f.max_magnitude().max(g.max_magnitude());
    tol.threshold(m * m)
}

/// Evaluates each criterion independently.
pub fn criteria<S: InvolutiveSemiring>(a: &WMorphism<S>, b: &WMorphism<S>, tol: &Tolerance) -> Result<Criteria> {
    a.rep.same_type(&b.rep, "phase equality")?;
    let (f, g) = (&a.rep, &b.rep);
    let eps = doubled_threshold(f, g, tol);
    let lower = |h: &Morphism<S>| h.tensor(&h.lower_star());
    Ok(Criteria {
        doubled: a.doubled.max_distance(&b.doubled) <= eps,
        lower_star: lower(f).max_distance(&lower(g)) <= eps,
        projector: sccc::bipartite_projector(f).max_distance(&sccc::bipartite_projector(g)) <= eps,
    })
}

/// Equality in the quotient. All three criteria are evaluated and must
/// agree; a split verdict is an error rather than a silent answer.
pub fn wequal<S: InvolutiveSemiring>(a: &WMorphism<S>, b: &WMorphism<S>, tol: &Tolerance) -> Result<bool> {
    let c = criteria(a, b, tol)?;
    if !c.agree() {
        return Err(Error::CriterionDisagreement {
            doubled: c.doubled,
            lower_star: c.lower_star,
            projector: c.projector,
        });
    }
    Ok(c.doubled)
}

/// Rotates `f` by the phase that makes its largest entry real and
/// nonnegative. Entries within rounding of the maximum modulus count as
/// tied and the lowest row-major index wins. The zero morphism is returned
/// unchanged.
pub fn canonical_rep(f: &Morphism<Complex64>) -> Morphism<Complex64> {
    let max = f.max_magnitude();
    if max == 0.0 {
        return f.clone();
    }
    let cutoff = max - Tolerance::default().threshold(max);
    let pivot = f.entries().iter().find(|x| x.norm() >= cutoff).expect("some entry attains the maximum");
    let phase = pivot.conj() / pivot.norm();
    f.scale(&phase)
}

/// Phase equality through canonical representatives, the direct decision
/// procedure for complex matrices.
pub fn canonical_equal(f: &Morphism<Complex64>, g: &Morphism<Complex64>, tol: &Tolerance) -> bool {
    f.same_type(g, "canonical equality").is_ok() && canonical_rep(f).approx_eq(&canonical_rep(g), tol)
}

/// A unit-modulus complex number `e^{iθ}`.
pub fn phase(theta: f64) -> Complex64 {
    Complex64::from_polar(1.0, theta)
}

/// Structural laws of the quotient over complex matrices: its SCCC laws
/// up to phase equality, well-definedness of the operations, the agreement
/// of the three equality criteria and the canonical representative.
pub fn verify_wproj(model: &Model<Complex64>, cfg: &SuiteConfig) -> VerificationReport {
    let tol = &cfg.tolerance;
    let mut report =
        VerificationReport::new("wproj", &format!("wproj:{}", model.name()), cfg.seed, tol.rel, cfg.trials);
    let small = cfg.max_dim.clamp(1, 4);

    let mut yank = Check::new("wproj-yanking", "λ† ∘ (η_{A*}† ⊗ 1) ∘ (1 ⊗ η_A) ∘ ρ ~ 1_A in the quotient");
    let mut identity_double = Check::new("wproj-identity", "lift(1_A) has double 1_A ⊗ 1_A");
    for d in 1..=small {
        let a = Object::gen("A", d);
        let a_star = a.dual().normalize();
        let outcome = (|| -> Result<bool> {
            let snake =
                WMorphism::identity(&a).tensor(&lift(&sccc::unit(&a))).compose(&lift(&sccc::right_unitor(&a)))?;
            let snake = lift(&sccc::associator(&a, &a_star, &a)).compose(&snake)?;
            let snake =
                lift(&sccc::unit::<Complex64>(&a_star)).dagger().tensor(&WMorphism::identity(&a)).compose(&snake)?;
            let snake = lift(&sccc::left_unitor::<Complex64>(&a)).dagger().compose(&snake)?;
            wequal(&snake, &WMorphism::identity(&a), tol)
        })();
        yank.record_result(outcome, Vec::new);
        let id = WMorphism::<Complex64>::identity(&a);
        let expected = Morphism::identity(&a).tensor(&Morphism::identity(&a));
        identity_double.record(id.doubled() == &expected, || vec![lit(id.doubled())], String::new);
    }
    report.push(yank.finish());
    report.push(identity_double.finish());

    let mut functor_compose = Check::new("lift-preserves-composition", "lift(g∘f) ~ lift(g) ∘ lift(f)");
    let mut functor_tensor = Check::new("lift-preserves-tensor", "lift(f⊗g) ~ lift(f) ⊗ lift(g)");
    let mut rep_independent =
        Check::new("composition-representative-independent", "lift(e^{iθ}•g) ∘ lift(f) ~ lift(g) ∘ lift(f)");
    let mut identity_laws = Check::new("wproj-identity-laws", "1 ∘ F ~ F ~ F ∘ 1");
    let mut dagger_involutive = Check::new("wproj-dagger-involutive", "F†† ~ F");
    let mut interchange = Check::new("wproj-interchange", "(G⊗K) ∘ (F⊗H) ~ (G∘F) ⊗ (K∘H)");
    let mut phase_lifts = Check::new("phase-shift-is-equal", "lift(e^{iθ}•f) ~ lift(f)");
    let mut amplitude = Check::new("amplitude-is-not-a-phase", "lift(2•f) ≁ lift(f) for f ≠ 0");
    let mut perturbed = Check::new("distinct-rays-differ", "lift(f + 10⁻²g) ≁ lift(f)");
    let mut zero = Check::new("zero-equals-zero", "lift(0) ~ lift(0)");
    let mut canonical_invariant = Check::new("canonical-rep-phase-invariant", "canon(e^{iθ}f) = canon(f)");
    let mut canonical_idempotent = Check::new("canonical-rep-idempotent", "canon(canon(f)) = canon(f)");
    let mut canonical_double = Check::new("canonical-rep-same-double", "canon(f) ⊗ canon(f)† = f ⊗ f†");
    let mut scalars_positive = Check::new("wproj-scalars-nonnegative", "s ⊗ s† is a nonnegative real");

    let mut rng = stream_rng(cfg.seed, 11);
    for _ in 0..cfg.trials {
        let a = random_object(&mut rng, "A", small);
        let b = random_object(&mut rng, "B", small);
        let c = random_object(&mut rng, "C", small);
        let f: Morphism<Complex64> = random_morphism(&a, &b, &mut rng);
        let g: Morphism<Complex64> = random_morphism(&b, &c, &mut rng);
        let h: Morphism<Complex64> = random_morphism(&c, &a, &mut rng);
        let k: Morphism<Complex64> = random_morphism(&a, &b, &mut rng);
        let theta = rng.random_range(0.0..std::f64::consts::TAU);
        let u = Morphism::scalar(phase(theta));
        let (wf, wg, wh, wk) = (lift(&f), lift(&g), lift(&h), lift(&k));

        let outcome = (|| wequal(&lift(&g.compose(&f)?), &wg.compose(&wf)?, tol))();
        functor_compose.record_result(outcome, || vec![lit(&f), lit(&g)]);

        let outcome = wequal(&lift(&f.tensor(&h)), &wf.tensor(&wh), tol);
        functor_tensor.record_result(outcome, || vec![lit(&f), lit(&h)]);

        let outcome = (|| {
            let shifted = lift(&sccc::scalar_mult(&u, &g)?);
            wequal(&shifted.compose(&wf)?, &wg.compose(&wf)?, tol)
        })();
        rep_independent.record_result(outcome, || vec![lit(&f), lit(&g), lit(&u)]);

        let outcome = (|| -> Result<bool> {
            let left = WMorphism::identity(&b).compose(&wf)?;
            let right = wf.compose(&WMorphism::identity(&a))?;
            Ok(wequal(&left, &wf, tol)? && wequal(&right, &wf, tol)?)
        })();
        identity_laws.record_result(outcome, || vec![lit(&f)]);

        let outcome = wequal(&wf.dagger().dagger(), &wf, tol);
        dagger_involutive.record_result(outcome, || vec![lit(&f)]);

        // (G⊗K') ∘ (F⊗H) with K' : A → B composable after H : C → A
        let outcome = (|| -> Result<bool> {
            let lhs = wg.tensor(&wk).compose(&wf.tensor(&wh))?;
            let rhs = wg.compose(&wf)?.tensor(&wk.compose(&wh)?);
            wequal(&lhs, &rhs, tol)
        })();
        interchange.record_result(outcome, || vec![lit(&f), lit(&g), lit(&h), lit(&k)]);

        let shifted = f.scale(&phase(theta));
        let outcome = wequal(&lift(&shifted), &wf, tol);
        phase_lifts.record_result(outcome, || vec![lit(&f), lit(&shifted)]);

        let doubled_f = f.scale(&Complex64::new(2.0, 0.0));
        let outcome = wequal(&lift(&doubled_f), &wf, tol).map(|eq| !eq);
        amplitude.record_result(outcome, || vec![lit(&f)]);

        let nudge: Morphism<Complex64> = random_morphism(&a, &b, &mut rng);
        let moved = f.entrywise_sum(&nudge.scale(&Complex64::new(1e-2, 0.0))).expect("same type");
        let outcome = wequal(&lift(&moved), &wf, tol).map(|eq| !eq);
        perturbed.record_result(outcome, || vec![lit(&f), lit(&moved)]);

        let z = lift(&Morphism::<Complex64>::zeros(&a, &b));
        zero.record_result(wequal(&z, &z.clone(), tol), Vec::new);

        let cf = canonical_rep(&f);
        canonical_invariant.record(
            canonical_rep(&shifted).approx_eq(&cf, tol),
            || vec![lit(&f), lit(&shifted)],
            String::new,
        );
        canonical_idempotent.record(canonical_rep(&cf).approx_eq(&cf, tol), || vec![lit(&f)], String::new);
        canonical_double.record(sccc::double(&cf).approx_eq(&sccc::double(&f), tol), || vec![lit(&f)], String::new);

        let s = Morphism::scalar(Complex64::sample(&mut rng));
        let ws = lift(&s);
        let v = *ws.doubled().value().expect("doubled scalars are scalars");
        let ok = v.re >= 0.0 && v.im.abs() <= tol.threshold(v.re);
        scalars_positive.record(ok, || vec![lit(&s)], || format!("s ⊗ s† = {v}"));
    }
    for check in [
        functor_compose,
        functor_tensor,
        rep_independent,
        identity_laws,
        dagger_involutive,
        interchange,
        phase_lifts,
        amplitude,
        perturbed,
        zero,
        canonical_invariant,
        canonical_idempotent,
        canonical_double,
        scalars_positive,
    ] {
        report.push(check.finish());
    }

    report.push(criteria_agreement(cfg));
    report
}

/// The three equality criteria agree on random pairs, half of which are
/// phase-equivalent by construction.
pub fn criteria_agreement(cfg: &SuiteConfig) -> crate::report::CheckResult {
    let tol = &cfg.tolerance;
    let mut check = Check::new("equality-criteria-agree", "f⊗f† = g⊗g† ⟺ f⊗f_* = g⊗g_* ⟺ P_f = P_g");
    let mut rng = stream_rng(cfg.seed, 12);
    let small = cfg.max_dim.clamp(1, 4);
    let (mut equal, mut distinct) = (0usize, 0usize);
    for trial in 0..cfg.trials {
        let a = random_object(&mut rng, "A", small);
        let b = random_object(&mut rng, "B", small);
        let f: Morphism<Complex64> = random_morphism(&a, &b, &mut rng);
        let g = match trial % 4 {
            0 | 1 => f.scale(&phase(rng.random_range(0.0..std::f64::consts::TAU))),
            2 => random_morphism(&a, &b, &mut rng),
            _ => f
                .scale(&Complex64::new(0.0, -1.0))
                .entrywise_sum(&Morphism::from_fn(&a, &b, |i, j| {
                    if i == 0 && j == 0 {
                        Complex64::new(0.25, 0.0)
                    } else {
                        Complex64::new(0.0, 0.0)
                    }
                }))
                .expect("same type"),
        };
        let expected_equal = trial % 4 < 2;
        match criteria(&lift(&f), &lift(&g), tol) {
            Ok(c) => {
                if c.all() {
                    equal += 1;
                } else {
                    distinct += 1;
                }
                let ok = c.agree() && c.doubled == expected_equal;
                check.record(ok, || vec![lit(&f), lit(&g)], || format!("{c:?}"));
            }
            Err(e) => check.record(false, || vec![lit(&f), lit(&g)], || e.to_string()),
        }
    }
    check.set_detail(format!("{equal} equal pairs, {distinct} distinct pairs"));
    check.finish()
}

/// The preparation-state agreement axiom in its three forms, evaluated in
/// complex matrices. Global phases violate it, so each form is an expected
/// failure whose witness is `(f, i•f)`.
pub fn check_prep_state_fdhilb(cfg: &SuiteConfig) -> VerificationReport {
    let tol = &cfg.tolerance;
    let mut report = VerificationReport::new("prep-state", "fdhilb", cfg.seed, tol.rel, cfg.trials);
    let mut doubles = Check::new("prep-state-doubles", "f⊗f† = g⊗g† ⟹ f = g").expecting_failure();
    let mut projectors = Check::new("prep-state-projectors", "P_f = P_g ⟹ ⌜f⌝ = ⌜g⌝").expecting_failure();
    let mut states = Check::new("prep-state-densities", "ψ∘ψ† = φ∘φ† ⟹ ψ = φ").expecting_failure();
    let mut rng = stream_rng(cfg.seed, 21);
    let small = cfg.max_dim.clamp(1, 4);
    let i = Complex64::new(0.0, 1.0);
    for trial in 0..cfg.trials.max(1) {
        let a = random_object(&mut rng, "A", small);
        let b = random_object(&mut rng, "B", small);
        let f: Morphism<Complex64> = random_morphism(&a, &b, &mut rng);
        // The first pair is the canonical witness (f, i•f).
        let factor = if trial == 0 { i } else { phase(rng.random_range(0.1..std::f64::consts::TAU - 0.1)) };
        let g = sccc::scalar_mult(&Morphism::scalar(factor), &f).expect("scalar");

        let premise = sccc::double(&f).approx_eq(&sccc::double(&g), tol);
        doubles.record(
            !premise || f.approx_eq(&g, tol),
            || vec![lit(&f), lit(&g)],
            || "equal doubles, different morphisms".into(),
        );

        let (nf, ng) = (sccc::name_unchecked(&f), sccc::name_unchecked(&g));
        let premise = sccc::bipartite_projector(&f).approx_eq(&sccc::bipartite_projector(&g), tol);
        projectors.record(
            !premise || nf.approx_eq(&ng, tol),
            || vec![lit(&f), lit(&g)],
            || "equal projectors, different names".into(),
        );

        let psi: Morphism<Complex64> = crate::models::random_state(&a, &mut rng);
        let phi = psi.scale(&factor);
        let rho = |x: &Morphism<Complex64>| x.compose(&x.dagger()).expect("state");
        let premise = rho(&psi).approx_eq(&rho(&phi), tol);
        states.record(
            !premise || psi.approx_eq(&phi, tol),
            || vec![lit(&psi), lit(&phi)],
            || "equal densities, different states".into(),
        );
    }
    report.push(doubles.finish());
    report.push(projectors.finish());
    report.push(states.finish());
    report
}

/// The same axiom inside the quotient: equality of quotient morphisms is
/// decided by canonical representatives and the double is formed with the
/// quotient's own tensor and dagger. It holds, and so does faithfulness and
/// functoriality of the lift into the quotient of the quotient.
pub fn check_prep_state_wproj(cfg: &SuiteConfig) -> VerificationReport {
    let tol = &cfg.tolerance;
    let mut report = VerificationReport::new("prep-state", "wproj:fdhilb", cfg.seed, tol.rel, cfg.trials);
    let mut doubles = Check::new("prep-state-doubles", "F⊗F† = G⊗G† ⟹ F = G");
    let mut projectors = Check::new("prep-state-projectors", "P_F = P_G ⟹ ⌜F⌝ = ⌜G⌝");
    let mut states = Check::new("prep-state-densities", "ψ∘ψ† = φ∘φ† ⟹ ψ = φ");
    let mut lift_functor = Check::new("fixed-point-lift-functorial", "lift(G∘F) = lift(G) ∘ lift(F)");
    // Lifting a quotient morphism once more, as F ⊗ F_*.
    let relift = |w: &WMorphism<Complex64>| w.tensor(&w.lower_star());
    let mut premises = 0usize;
    let mut rng = stream_rng(cfg.seed, 22);
    let small = cfg.max_dim.clamp(1, 3);
    for trial in 0..cfg.trials.max(1) {
        let a = random_object(&mut rng, "A", small);
        let b = random_object(&mut rng, "B", small);
        let f: Morphism<Complex64> = random_morphism(&a, &b, &mut rng);
        let g = match trial % 3 {
            0 => f.scale(&Complex64::new(0.0, 1.0)),
            1 => f.scale(&phase(rng.random_range(0.0..std::f64::consts::TAU))),
            _ => random_morphism(&a, &b, &mut rng),
        };
        let (wf, wg) = (lift(&f), lift(&g));

        let double_w = |w: &WMorphism<Complex64>| w.tensor(&w.dagger());
        let premise = wequal(&double_w(&wf), &double_w(&wg), tol);
        let outcome = premise.map(|p| {
            premises += usize::from(p);
            !p || canonical_equal(&f, &g, tol)
        });
        doubles.record_result(outcome, || vec![lit(&f), lit(&g)]);

        let name = |w: &WMorphism<Complex64>| lift(&sccc::name_unchecked(w.rep()));
        let proj = |w: &WMorphism<Complex64>| {
            let n = name(w);
            n.compose(&n.dagger()).expect("name composes with its adjoint")
        };
        let outcome = wequal(&proj(&wf), &proj(&wg), tol)
            .map(|p| !p || canonical_equal(&sccc::name_unchecked(&f), &sccc::name_unchecked(&g), tol));
        projectors.record_result(outcome, || vec![lit(&f), lit(&g)]);

        let psi: Morphism<Complex64> = crate::models::random_state(&a, &mut rng);
        let phi = if trial % 3 == 2 {
            crate::models::random_state(&a, &mut rng)
        } else {
            psi.scale(&phase(rng.random_range(0.0..std::f64::consts::TAU)))
        };
        let (wpsi, wphi) = (lift(&psi), lift(&phi));
        let density = |w: &WMorphism<Complex64>| w.compose(&w.dagger()).expect("state");
        let outcome = wequal(&density(&wpsi), &density(&wphi), tol).map(|p| !p || canonical_equal(&psi, &phi, tol));
        states.record_result(outcome, || vec![lit(&psi), lit(&phi)]);

        let c = random_object(&mut rng, "C", small);
        let h: Morphism<Complex64> = random_morphism(&b, &c, &mut rng);
        let wh = lift(&h);
        let outcome = (|| -> Result<bool> {
            let lhs = relift(&wh.compose(&wf)?);
            let rhs = relift(&wh).compose(&relift(&wf))?;
            wequal(&lhs, &rhs, tol)
        })();
        lift_functor.record_result(outcome, || vec![lit(&f), lit(&h)]);
    }
    doubles.set_detail(format!("premise held on {premises} pairs"));
    report.push(doubles.finish());
    report.push(projectors.finish());
    report.push(states.finish());
    report.push(lift_functor.finish());
    report
}

/// The axiom over a semiring model, decided by exhaustive enumeration of
/// small grid matrices plus seeded samples. No outcome is presupposed.
pub fn check_prep_state_semiring<S: InvolutiveSemiring>(model: &Model<S>, cfg: &SuiteConfig) -> VerificationReport {
    let tol = &cfg.tolerance;
    let mut report = VerificationReport::new("prep-state", model.name(), cfg.seed, tol.rel, cfg.trials);
    let grid = S::grid();

    let mut states = Check::new("prep-state-densities", "ψ∘ψ† = φ∘φ† ⟹ ψ = φ");
    let mut count = 0usize;
    for d in 1..=3 {
        let a = Object::gen("A", d);
        let all = enumerate(&grid, d);
        for x in &all {
            let psi = Morphism::state(&a, x.clone()).expect("shape");
            let rho_psi = psi.compose(&psi.dagger()).expect("state");
            for y in &all {
                let phi = Morphism::state(&a, y.clone()).expect("shape");
                let premise = rho_psi.approx_eq(&phi.compose(&phi.dagger()).expect("state"), tol);
                count += 1;
                states.record(
                    !premise || psi.approx_eq(&phi, tol),
                    || vec![lit(&psi), lit(&phi)],
                    || "equal densities, different states".into(),
                );
            }
        }
    }
    states.set_detail(format!("{count} grid pairs"));

    let mut doubles = Check::new("prep-state-doubles", "f⊗f† = g⊗g† ⟹ f = g");
    let mut projectors = Check::new("prep-state-projectors", "P_f = P_g ⟹ ⌜f⌝ = ⌜g⌝");
    let shapes = [(1, 2), (2, 1), (2, 2)];
    for (m, n) in shapes {
        let (a, b) = (Object::gen("A", m), Object::gen("B", n));
        let all: Vec<Morphism<S>> = enumerate(&grid, m * n)
            .into_iter()
            .map(|e| Morphism::from_fn(&a, &b, |i, j| e[i * m + j].clone()))
            .collect();
        let doubled: Vec<_> = all.iter().map(sccc::double).collect();
        let proj: Vec<_> = all.iter().map(sccc::bipartite_projector).collect();
        for (i, f) in all.iter().enumerate() {
            for (j, g) in all.iter().enumerate() {
                let same = i == j;
                if doubled[i].approx_eq(&doubled[j], tol) {
                    doubles.record(same || f.approx_eq(g, tol), || vec![lit(f), lit(g)], String::new);
                }
                if proj[i].approx_eq(&proj[j], tol) {
                    projectors.record(same || f.approx_eq(g, tol), || vec![lit(f), lit(g)], String::new);
                }
            }
        }
    }
    let mut rng = stream_rng(cfg.seed, 23);
    for _ in 0..cfg.trials {
        let a = random_object(&mut rng, "A", cfg.max_dim.clamp(1, 3));
        let b = random_object(&mut rng, "B", cfg.max_dim.clamp(1, 3));
        let f: Morphism<S> = random_morphism(&a, &b, &mut rng);
        let u = Morphism::scalar(S::sample_phase(&mut rng));
        let g = sccc::scalar_mult(&u, &f).expect("scalar");
        let premise = sccc::double(&f).approx_eq(&sccc::double(&g), tol);
        doubles.record(!premise || f.approx_eq(&g, tol), || vec![lit(&f), lit(&g)], String::new);
    }
    report.push(doubles.finish());
    report.push(projectors.finish());
    report.push(states.finish());
    report
}

/// All vectors of length `n` with entries from `grid`.
fn enumerate<S: Clone>(grid: &[S], n: usize) -> Vec<Vec<S>> {
    let mut out = vec![Vec::with_capacity(n)];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                grid.iter().map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect();
    }
    out
}
