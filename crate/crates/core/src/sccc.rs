//! Model-generic strongly compact closed structure.
//!
//! Coherence isomorphisms are explicit matrices between the objects they
//! mediate; nothing is silently identified beyond the strict duals.

use crate::error::{Error, Result};
use crate::morphism::{Morphism, Scalar, Tolerance};
use crate::object::Object;
use crate::semiring::InvolutiveSemiring;

/// `λ_A : A → I ⊗ A`.
pub fn left_unitor<S: InvolutiveSemiring>(a: &Object) -> Morphism<S> {
    Morphism::permutation(a, &Object::Unit.tensor(a), |j| j)
}

/// `ρ_A : A → A ⊗ I`.
pub fn right_unitor<S: InvolutiveSemiring>(a: &Object) -> Morphism<S> {
    Morphism::permutation(a, &a.tensor(&Object::Unit), |j| j)
}

/// `α_{A,B,C} : A ⊗ (B ⊗ C) → (A ⊗ B) ⊗ C`.
pub fn associator<S: InvolutiveSemiring>(a: &Object, b: &Object, c: &Object) -> Morphism<S> {
    Morphism::permutation(&a.tensor(&b.tensor(c)), &a.tensor(b).tensor(c), |j| j)
}

/// `σ_{A,B} : A ⊗ B → B ⊗ A`.
pub fn symmetry<S: InvolutiveSemiring>(a: &Object, b: &Object) -> Morphism<S> {
    let (da, db) = (a.dim(), b.dim());
    Morphism::permutation(&a.tensor(b), &b.tensor(a), |k| {
        let (i, j) = (k / db, k % db);
        j * da + i
    })
}

/// `u_I : I* → I`, the identity once duals are normalized.
pub fn dual_unit_iso<S: InvolutiveSemiring>() -> Morphism<S> {
    Morphism::permutation(&Object::Unit.dual(), &Object::Unit, |j| j)
}

/// `η_A : I → A* ⊗ A`, the vectorized identity. On the zero object this is
/// the empty column.
pub fn unit<S: InvolutiveSemiring>(a: &Object) -> Morphism<S> {
    let d = a.dim();
    let cod = a.dual().tensor(a);
    Morphism::from_fn(&Object::Unit, &cod, |row, _| if row / d.max(1) == row % d.max(1) { S::one() } else { S::zero() })
}

/// `⌜f⌝ = (1_{A*} ⊗ f) ∘ η_A`.
pub fn name_unchecked<S: InvolutiveSemiring>(f: &Morphism<S>) -> Morphism<S> {
    let a = f.dom();
    Morphism::identity(&a.dual()).tensor(f).compose(&unit(a)).expect("η_A lands in A* ⊗ A")
}

/// `⌜f⌝ = (f* ⊗ 1_B) ∘ η_B`, the absorption unfolding.
pub fn name_by_absorption<S: InvolutiveSemiring>(f: &Morphism<S>) -> Morphism<S> {
    let b = f.cod();
    f.star().tensor(&Morphism::identity(b)).compose(&unit(b)).expect("η_B lands in B* ⊗ B")
}

/// The name `⌜f⌝ : I → A* ⊗ B`, cross-checked against the absorption
/// unfolding. A disagreement means the model itself is broken.
pub fn name<S: InvolutiveSemiring>(f: &Morphism<S>, tol: &Tolerance) -> Result<Morphism<S>> {
    let by_def = name_unchecked(f);
    let by_absorption = name_by_absorption(f);
    if !by_def.approx_eq(&by_absorption, tol) {
        return Err(Error::AbsorptionMismatch { distance: by_def.max_distance(&by_absorption) });
    }
    Ok(by_def)
}

/// `s • f = λ_B⁻¹ ∘ (s ⊗ f) ∘ λ_A`.
pub fn scalar_mult<S: InvolutiveSemiring>(s: &Scalar<S>, f: &Morphism<S>) -> Result<Morphism<S>> {
    if !s.is_scalar() {
        return Err(Error::TypeMismatch {
            context: "scalar multiplication",
            expected: Object::Unit,
            found: s.dom().clone(),
        });
    }
    left_unitor::<S>(f.cod()).dagger().compose(&s.tensor(f))?.compose(&left_unitor(f.dom()))
}

/// `P_f = ⌜f⌝ ∘ ⌜f⌝†`.
pub fn bipartite_projector<S: InvolutiveSemiring>(f: &Morphism<S>) -> Morphism<S> {
    let n = name_unchecked(f);
    n.compose(&n.dagger()).expect("name composes with its adjoint")
}

/// `Tr(h) = η_A† ∘ (1_{A*} ⊗ h) ∘ η_A`.
pub fn trace<S: InvolutiveSemiring>(h: &Morphism<S>) -> Result<Scalar<S>> {
    if !h.is_endo() {
        return Err(Error::NotEndomorphism { dom: h.dom().clone(), cod: h.cod().clone() });
    }
    let a = h.dom();
    let eta = unit::<S>(a);
    eta.dagger().compose(&Morphism::identity(&a.dual()).tensor(h))?.compose(&eta)
}

/// Partial trace over the left factor `A` of `f : A ⊗ B → A ⊗ C`:
/// `λ_C† ∘ (η_A† ⊗ 1_C) ∘ α ∘ (1_{A*} ⊗ f) ∘ α⁻¹ ∘ (η_A ⊗ 1_B) ∘ λ_B`.
pub fn partial_trace<S: InvolutiveSemiring>(f: &Morphism<S>, traced: &Object) -> Result<Morphism<S>> {
    let a = traced.normalize();
    let split = |obj: &Object| -> Result<Object> {
        match obj.as_tensor() {
            Some((x, rest)) if *x == a => Ok(rest.clone()),
            _ => Err(Error::TypeMismatch {
                context: "partial trace",
                expected: a.tensor(&Object::Unit),
                found: obj.clone(),
            }),
        }
    };
    let b = split(f.dom())?;
    let c = split(f.cod())?;
    let a_star = a.dual().normalize();
    let eta = unit::<S>(&a);

    let step_in = eta.tensor(&Morphism::identity(&b)).compose(&left_unitor(&b))?;
    let step_in = associator::<S>(&a_star, &a, &b).dagger().compose(&step_in)?;
    let body = Morphism::identity(&a_star).tensor(f).compose(&step_in)?;
    let body = associator::<S>(&a_star, &a, &c).compose(&body)?;
    let out = eta.dagger().tensor(&Morphism::identity(&c)).compose(&body)?;
    left_unitor::<S>(&c).dagger().compose(&out)
}

/// The left side of the snake equation
/// `λ_A† ∘ (η_{A*}† ⊗ 1_A) ∘ α_{A,A*,A} ∘ (1_A ⊗ η_A) ∘ ρ_A`, which must be `1_A`.
pub fn yanking<S: InvolutiveSemiring>(a: &Object) -> Result<Morphism<S>> {
    let a = a.normalize();
    let a_star = a.dual().normalize();
    let snake = Morphism::identity(&a).tensor(&unit(&a)).compose(&right_unitor(&a))?;
    let snake = associator::<S>(&a, &a_star, &a).compose(&snake)?;
    let snake = unit::<S>(&a_star).dagger().tensor(&Morphism::identity(&a)).compose(&snake)?;
    left_unitor::<S>(&a).dagger().compose(&snake)
}

/// `⟨f|g⟩ = ⌜f⌝† ∘ ⌜g⌝`.
pub fn hs_inner<S: InvolutiveSemiring>(f: &Morphism<S>, g: &Morphism<S>) -> Result<Scalar<S>> {
    f.same_type(g, "Hilbert-Schmidt inner product")?;
    name_unchecked(f).dagger().compose(&name_unchecked(g))
}

/// `‖f‖ = ⌜f⌝† ∘ ⌜f⌝`, the squared Hilbert-Schmidt norm.
pub fn hs_norm_sq<S: InvolutiveSemiring>(f: &Morphism<S>) -> Scalar<S> {
    hs_inner(f, f).expect("a morphism has its own type")
}

/// `f ⊗ f†`.
pub fn double<S: InvolutiveSemiring>(f: &Morphism<S>) -> Morphism<S> {
    f.tensor(&f.dagger())
}

/// The witnesses `s = ⌜f⌝†∘⌜f⌝` and `t = ⌜g⌝†∘⌜f⌝` relating two morphisms
/// with equal doubles, so that `s•f = t•g` and `s∘s† = t∘t†`. Witnesses are
/// returned as computed, even when not invertible.
pub fn phase_witnesses<S: InvolutiveSemiring>(
    f: &Morphism<S>,
    g: &Morphism<S>,
    tol: &Tolerance,
) -> Result<(Scalar<S>, Scalar<S>)> {
    f.same_type(g, "phase witnesses")?;
    let (df, dg) = (double(f), double(g));
    if !df.approx_eq(&dg, tol) {
        return Err(Error::NotPhaseEquivalent { distance: df.max_distance(&dg) });
    }
    let nf = name_unchecked(f);
    let s = nf.dagger().compose(&nf)?;
    let t = name_unchecked(g).dagger().compose(&nf)?;
    Ok((s, t))
}

/// `ρ_A† ∘ (ψ ⊗ ψ†) ∘ λ_A`, the density operator built without composing
/// `ψ` with its adjoint directly.
pub fn density_via_tensor<S: InvolutiveSemiring>(psi: &Morphism<S>) -> Result<Morphism<S>> {
    let a = psi.cod();
    right_unitor::<S>(a).dagger().compose(&psi.tensor(&psi.dagger()))?.compose(&left_unitor(a))
}

/// Checks that `p` is idempotent and self-adjoint.
pub fn check_projector<S: InvolutiveSemiring>(p: &Morphism<S>, tol: &Tolerance) -> Result<()> {
    if !p.is_endo() {
        return Err(Error::NotProjector { reason: format!("{} -> {} is not an endomorphism", p.dom(), p.cod()) });
    }
    if !p.compose(p)?.approx_eq(p, tol) {
        return Err(Error::NotProjector { reason: "P∘P ≠ P".into() });
    }
    if !p.dagger().approx_eq(p, tol) {
        return Err(Error::NotProjector { reason: "P† ≠ P".into() });
    }
    Ok(())
}

/// `Prob(ψ, P) = ψ† ∘ P ∘ ψ`, cross-checked against `Tr(P ∘ ψ∘ψ†)`.
pub fn born_prob<S: InvolutiveSemiring>(psi: &Morphism<S>, p: &Morphism<S>, tol: &Tolerance) -> Result<Scalar<S>> {
    check_projector(p, tol)?;
    if *psi.dom() != Object::Unit {
        return Err(Error::TypeMismatch { context: "state", expected: Object::Unit, found: psi.dom().clone() });
    }
    let prob = psi.dagger().compose(&p.compose(psi)?)?;
    let rho = psi.compose(&psi.dagger())?;
    let by_trace = trace(&p.compose(&rho)?)?;
    if !prob.approx_eq(&by_trace, tol) {
        return Err(Error::BornLoopMismatch { distance: prob.max_distance(&by_trace) });
    }
    Ok(prob)
}
