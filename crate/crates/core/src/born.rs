//! Valuations, sums of scalars and the trace axioms that make block norms
//! add up.
//!
//! The checks run against a [`BornWorld`]: complex matrices, their phase
//! quotient, or a deliberately broken trace used as a negative control.

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::Rational64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::models::{random_morphism, stream_rng, SuiteConfig};
use crate::morphism::{Morphism, Scalar, Tolerance};
use crate::object::Object;
use crate::ortho::{self, OplusDecomposition};
use crate::report::{Check, CheckResult, MatrixLiteral, VerificationReport};
use crate::sccc;
use crate::semiring::Weight;
use crate::wproj::{self, canonical_rep, lift, WMorphism};

pub fn nu_f64(nu: Rational64) -> f64 {
    *nu.numer() as f64 / *nu.denom() as f64
}

fn close(a: Complex64, b: Complex64, tol: &Tolerance) -> bool {
    (a - b).norm() <= tol.threshold(a.norm().max(b.norm()))
}

fn real_nonnegative(v: Complex64, tol: &Tolerance) -> Option<f64> {
    let eps = tol.threshold(v.norm());
    (v.re >= -eps && v.im.abs() <= eps).then(|| v.re.max(0.0))
}

fn root_unavailable(v: Complex64, nu: Rational64) -> Error {
    Error::RootUnavailable { value: v.to_string(), power: nu.to_string() }
}

/// `s^ν` for a real nonnegative complex scalar.
fn real_power(v: Complex64, nu: Rational64, tol: &Tolerance) -> Result<f64> {
    if nu == Rational64::from_integer(1) {
        return real_nonnegative(v, tol).ok_or_else(|| root_unavailable(v, nu));
    }
    let x = real_nonnegative(v, tol).ok_or_else(|| root_unavailable(v, nu))?;
    Ok(x.powf(nu_f64(nu)))
}

/// The valuation `f ↦ ‖f‖^ν` on complex matrices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Valuation {
    pub nu: Rational64,
}

impl Valuation {
    pub fn new(nu: Rational64) -> Result<Self> {
        if nu <= Rational64::from_integer(0) {
            return Err(Error::Unsupported(format!("exponent {nu} must be positive")));
        }
        Ok(Valuation { nu })
    }

    pub fn evaluate(&self, f: &Morphism<Complex64>) -> Result<Scalar<Complex64>> {
        let norm = sccc::hs_norm_sq(f);
        if self.nu == Rational64::from_integer(1) {
            return Ok(norm);
        }
        let v = *norm.value().expect("norms are scalars");
        Ok(Morphism::scalar(Complex64::new(real_power(v, self.nu, &Tolerance::default())?, 0.0)))
    }
}

/// `s + t` for the valuation `‖−‖^ν`: `(Tr(s^{1/ν} ⊕ t^{1/ν}))^ν`. For
/// `ν = 1` this is `Tr(s ⊕ t)` and works on any scalars; otherwise both
/// scalars must be real and nonnegative so the powers are unique.
pub fn scalar_sum(s: &Scalar<Complex64>, t: &Scalar<Complex64>, nu: Rational64) -> Result<Scalar<Complex64>> {
    for x in [s, t] {
        if !x.is_scalar() {
            return Err(Error::TypeMismatch { context: "scalar sum", expected: Object::Unit, found: x.dom().clone() });
        }
    }
    if nu == Rational64::from_integer(1) {
        return sccc::trace(&ortho::oplus(s, t)?);
    }
    let tol = Tolerance::default();
    let inv = Rational64::from_integer(1) / nu;
    let root = |x: &Scalar<Complex64>| -> Result<Scalar<Complex64>> {
        let v = *x.value().expect("scalar");
        Ok(Morphism::scalar(Complex64::new(real_power(v, inv, &tol)?, 0.0)))
    };
    let inner = sccc::trace(&ortho::oplus(&root(s)?, &root(t)?)?)?;
    let v = *inner.value().expect("scalar");
    Ok(Morphism::scalar(Complex64::new(real_power(v, nu, &tol)?, 0.0)))
}

/// Decides positivity of a complex endomorphism, `h = f† ∘ f`. Returns the
/// witness `f = V √Λ V†` from the spectral decomposition, or `None` when
/// `h` is not self-adjoint or has an eigenvalue below `−10⁻⁹‖h‖`.
pub fn is_positive(h: &Morphism<Complex64>, tol: &Tolerance) -> Result<Option<Morphism<Complex64>>> {
    if !h.is_endo() {
        return Err(Error::NotEndomorphism { dom: h.dom().clone(), cod: h.cod().clone() });
    }
    if !h.dagger().approx_eq(h, tol) {
        return Ok(None);
    }
    let n = h.rows();
    if n == 0 {
        return Ok(Some(h.clone()));
    }
    let m = DMatrix::from_fn(n, n, |i, j| (h.entry(i, j) + h.entry(j, i).conj()) / 2.0);
    let scale = h.max_magnitude() * n as f64;
    let eig = m.symmetric_eigen();
    if eig.eigenvalues.iter().any(|&l| l < -tol.rel * scale.max(1e-300)) {
        return Ok(None);
    }
    let roots = eig.eigenvalues.map(|l| Complex64::new(l.max(0.0).sqrt(), 0.0));
    let v = &eig.eigenvectors;
    let w = v * DMatrix::from_diagonal(&roots) * v.adjoint();
    Ok(Some(Morphism::from_fn(h.dom(), h.cod(), |i, j| w[(i, j)])))
}

/// Positivity over nonnegative reals by search: `h = fᵀ f` with `f` drawn
/// from entries `{0, 1, 2}` and at most three rows.
pub fn is_positive_weights(h: &Morphism<Weight>) -> Result<Option<Morphism<Weight>>> {
    if !h.is_endo() {
        return Err(Error::NotEndomorphism { dom: h.dom().clone(), cod: h.cod().clone() });
    }
    let n = h.rows();
    if n > 3 {
        return Err(Error::Unsupported(format!("positivity search is limited to dimension 3, got {n}")));
    }
    let grid = [0.0, 1.0, 2.0];
    for rows in 1..=3usize {
        let b = Object::gen("B", rows);
        let cells = rows * n;
        let total = grid.len().pow(cells as u32);
        for code in 0..total {
            let mut c = code;
            let entries: Vec<f64> = (0..cells)
                .map(|_| {
                    let x = grid[c % grid.len()];
                    c /= grid.len();
                    x
                })
                .collect();
            let f = Morphism::from_fn(h.dom(), &b, |i, j| Weight(entries[i * n + j]));
            if f.dagger().compose(&f)? == *h {
                return Ok(Some(f));
            }
        }
    }
    Ok(None)
}

/// `h₁₁ ⊕ … ⊕ hₙₙ` for an endomorphism of `decomp.whole()`.
pub fn pseudo_diagonal(h: &Morphism<Complex64>, decomp: &OplusDecomposition) -> Result<Morphism<Complex64>> {
    let mut blocks = (0..decomp.len()).map(|i| ortho::pseudo_component(h, decomp, decomp, i, i));
    let first = blocks.next().expect("decompositions are nonempty")?;
    blocks.try_fold(first, |acc, b| ortho::oplus(&acc, &b?))
}

/// The operations the probability axioms need, over some category of
/// complex matrices.
pub trait BornWorld {
    type Mor: Clone;

    fn name(&self) -> String;

    /// Whether the world is built to violate the axioms.
    fn is_negative_control(&self) -> bool {
        false
    }

    fn embed(&self, f: &Morphism<Complex64>) -> Self::Mor;
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;
    fn dagger(&self, f: &Self::Mor) -> Self::Mor;
    fn oplus(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
    /// The sum of morphisms manufactured from `⊕` and `η₂`.
    fn derived_sum(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
    fn trace(&self, h: &Self::Mor) -> Result<Self::Mor>;
    /// The complex number carried by a scalar.
    fn value(&self, s: &Self::Mor) -> Complex64;
    /// The positive scalar whose value is `v ≥ 0`.
    fn positive_scalar(&self, v: f64) -> Self::Mor;
    fn literal(&self, f: &Self::Mor) -> MatrixLiteral;

    fn norm_sq(&self, f: &Self::Mor) -> Result<Self::Mor> {
        self.trace(&self.compose(&self.dagger(f), f)?)
    }

    /// `p_j ∘ f ∘ q_i`.
    fn component(
        &self,
        f: &Self::Mor,
        dom: &OplusDecomposition,
        cod: &OplusDecomposition,
        i: usize,
        j: usize,
    ) -> Result<Self::Mor> {
        let (_, q) = ortho::pseudo_maps::<Complex64>(dom, i)?;
        let (p, _) = ortho::pseudo_maps::<Complex64>(cod, j)?;
        self.compose(&self.embed(&p), &self.compose(f, &self.embed(&q))?)
    }

    /// `|f| = ‖f‖^ν` as a scalar of the world.
    fn valuation(&self, f: &Self::Mor, nu: Rational64, tol: &Tolerance) -> Result<Self::Mor> {
        let v = self.value(&self.norm_sq(f)?);
        Ok(self.positive_scalar(real_power(v, nu, tol)?))
    }

    /// `(Tr(s^{1/ν} ⊕ t^{1/ν}))^ν`, and `Tr(s ⊕ t)` when `ν = 1`.
    fn scalar_sum(&self, s: &Self::Mor, t: &Self::Mor, nu: Rational64, tol: &Tolerance) -> Result<Self::Mor> {
        if nu == Rational64::from_integer(1) {
            return self.trace(&self.oplus(s, t));
        }
        let inv = Rational64::from_integer(1) / nu;
        let root =
            |x: &Self::Mor| -> Result<Self::Mor> { Ok(self.positive_scalar(real_power(self.value(x), inv, tol)?)) };
        let inner = self.trace(&self.oplus(&root(s)?, &root(t)?))?;
        Ok(self.positive_scalar(real_power(self.value(&inner), nu, tol)?))
    }
}

/// Complex matrices, optionally with a trace that ignores the last
/// diagonal entry of every endomorphism of dimension two or more.
#[derive(Debug, Clone, Copy, Default)]
pub struct MatrixWorld {
    pub corrupt_trace: bool,
}

impl MatrixWorld {
    pub fn fdhilb() -> Self {
        MatrixWorld { corrupt_trace: false }
    }

    pub fn corrupted() -> Self {
        MatrixWorld { corrupt_trace: true }
    }
}

impl BornWorld for MatrixWorld {
    type Mor = Morphism<Complex64>;

    fn name(&self) -> String {
        if self.corrupt_trace {
            "corrupt-trace:fdhilb".into()
        } else {
            "fdhilb".into()
        }
    }

    fn is_negative_control(&self) -> bool {
        self.corrupt_trace
    }

    fn embed(&self, f: &Morphism<Complex64>) -> Self::Mor {
        f.clone()
    }

    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor> {
        g.compose(f)
    }

    fn dagger(&self, f: &Self::Mor) -> Self::Mor {
        f.dagger()
    }

    fn oplus(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor {
        f.direct_sum(g)
    }

    fn derived_sum(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        ortho::derived_sum(f, g)
    }

    fn trace(&self, h: &Self::Mor) -> Result<Self::Mor> {
        let tr = sccc::trace(h)?;
        if self.corrupt_trace && h.rows() >= 2 {
            let last = h.rows() - 1;
            return Ok(Morphism::scalar(tr.value().expect("scalar") - h.entry(last, last)));
        }
        Ok(tr)
    }

    fn value(&self, s: &Self::Mor) -> Complex64 {
        *s.value().expect("a scalar")
    }

    fn positive_scalar(&self, v: f64) -> Self::Mor {
        Morphism::scalar(Complex64::new(v, 0.0))
    }

    fn literal(&self, f: &Self::Mor) -> MatrixLiteral {
        MatrixLiteral::from_morphism(f)
    }
}

/// The phase quotient of complex matrices. Sums of morphisms act on the
/// canonical representatives, which for positive morphisms are the
/// morphisms themselves.
#[derive(Debug, Clone, Copy, Default)]
pub struct QuotientWorld;

impl BornWorld for QuotientWorld {
    type Mor = WMorphism<Complex64>;

    fn name(&self) -> String {
        "wproj:fdhilb".into()
    }

    fn embed(&self, f: &Morphism<Complex64>) -> Self::Mor {
        lift(f)
    }

    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor> {
        wproj::wcompose(g, f)
    }

    fn dagger(&self, f: &Self::Mor) -> Self::Mor {
        wproj::wdagger(f)
    }

    fn oplus(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor {
        lift(&canonical_rep(f.rep()).direct_sum(&canonical_rep(g.rep())))
    }

    fn derived_sum(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        Ok(lift(&ortho::derived_sum(&canonical_rep(f.rep()), &canonical_rep(g.rep()))?))
    }

    /// `lift(Tr(h))`. Lifting preserves composition and tensor, so this is
    /// the trace built from the lifted `η` without doubling `1 ⊗ h`.
    fn trace(&self, h: &Self::Mor) -> Result<Self::Mor> {
        Ok(lift(&sccc::trace(h.rep())?))
    }

    fn value(&self, s: &Self::Mor) -> Complex64 {
        *s.doubled().value().expect("a scalar")
    }

    fn positive_scalar(&self, v: f64) -> Self::Mor {
        lift(&Morphism::scalar(Complex64::new(v.max(0.0).sqrt(), 0.0)))
    }

    fn literal(&self, f: &Self::Mor) -> MatrixLiteral {
        MatrixLiteral::from_morphism(f.rep())
    }
}

fn random_part<R: Rng + ?Sized>(rng: &mut R, label: &str, max_dim: usize) -> Object {
    match rng.random_range(1..=max_dim.max(1)) {
        1 => Object::Unit,
        d => Object::gen(label, d),
    }
}

fn decomposition<R: Rng + ?Sized>(rng: &mut R, label: &str, parts: usize, max_dim: usize) -> OplusDecomposition {
    OplusDecomposition::new((0..parts).map(|i| random_part(rng, &format!("{label}{i}"), max_dim)).collect())
        .expect("nonempty")
}

/// A positive endomorphism `f† ∘ f` of `a`, sampled in the world.
fn random_positive<W: BornWorld, R: Rng + ?Sized>(w: &W, a: &Object, rng: &mut R, max_dim: usize) -> Result<W::Mor> {
    let b = random_part(rng, "K", max_dim);
    let f = w.embed(&random_morphism(a, &b, rng));
    w.compose(&w.dagger(&f), &f)
}

struct Samples<W: BornWorld> {
    witnesses: Vec<W::Mor>,
}

impl<W: BornWorld> Samples<W> {
    fn literals(&self, w: &W) -> Vec<MatrixLiteral> {
        self.witnesses.iter().map(|f| w.literal(f)).collect()
    }
}

fn record<W: BornWorld>(
    check: &mut Check,
    w: &W,
    outcome: Result<(Complex64, Complex64)>,
    tol: &Tolerance,
    samples: Samples<W>,
) -> bool {
    match outcome {
        Ok((lhs, rhs)) => {
            let ok = close(lhs, rhs, tol);
            check.record(ok, || samples.literals(w), || format!("{lhs} ≠ {rhs}"));
            ok
        }
        Err(e) => {
            check.record(false, || samples.literals(w), || e.to_string());
            false
        }
    }
}

/// `‖f‖ = Tr(‖f₁‖ ⊕ ‖f₂‖)` for `f : A → B₁ ⊕ B₂`.
fn ortho_bornian_sample<W: BornWorld>(
    w: &W,
    f: &W::Mor,
    dom: &OplusDecomposition,
    cod: &OplusDecomposition,
) -> Result<(Complex64, Complex64)> {
    let f1 = w.component(f, dom, cod, 0, 0)?;
    let f2 = w.component(f, dom, cod, 0, 1)?;
    let rhs = w.trace(&w.oplus(&w.norm_sq(&f1)?, &w.norm_sq(&f2)?))?;
    Ok((w.value(&w.norm_sq(f)?), w.value(&rhs)))
}

/// `Tr(h) = Tr(h₁₁) + Tr(h₂₂)`, with `+` the derived sum of scalars.
fn diagonal_sample<W: BornWorld>(w: &W, h: &W::Mor, d: &OplusDecomposition) -> Result<(Complex64, Complex64)> {
    let h11 = w.component(h, d, d, 0, 0)?;
    let h22 = w.component(h, d, d, 1, 1)?;
    let rhs = w.derived_sum(&w.trace(&h11)?, &w.trace(&h22)?)?;
    Ok((w.value(&w.trace(h)?), w.value(&rhs)))
}

/// `Tr(h) = Tr(h₁₁ + h₂₂)` when both summands have the same type.
fn diagonal_same_type_sample<W: BornWorld>(
    w: &W,
    h: &W::Mor,
    d: &OplusDecomposition,
) -> Result<(Complex64, Complex64)> {
    let h11 = w.component(h, d, d, 0, 0)?;
    let h22 = w.component(h, d, d, 1, 1)?;
    Ok((w.value(&w.trace(h)?), w.value(&w.trace(&w.derived_sum(&h11, &h22)?)?)))
}

/// `Tr(h) + Tr(h') = Tr(h + h')`.
fn linearity_sample<W: BornWorld>(w: &W, h: &W::Mor, h2: &W::Mor) -> Result<(Complex64, Complex64)> {
    let lhs = w.derived_sum(&w.trace(h)?, &w.trace(h2)?)?;
    let rhs = w.trace(&w.derived_sum(h, h2)?)?;
    Ok((w.value(&lhs), w.value(&rhs)))
}

/// Block additivity of the valuation, its algebra, and the trace axioms.
pub fn verify_born<W: BornWorld>(w: &W, cfg: &SuiteConfig, nu: Rational64) -> Result<VerificationReport> {
    Valuation::new(nu)?;
    let tol = &cfg.tolerance;
    let mut report = VerificationReport::new("born", &w.name(), cfg.seed, tol.rel, cfg.trials);
    let small = cfg.max_dim.clamp(1, 4);
    let one = Rational64::from_integer(1);

    let mut additivity = Check::new("block-additivity", format!("|f₁| + |f₂| = |f| with |−| = ‖−‖^{nu}"));
    let mut vanishing = Check::new("block-additivity-zero-block", "f₂ = 0 ⇒ |f₁| = |f|");
    let mut three = Check::new("block-additivity-associative", "(|f₁| + |f₂|) + |f₃| = |f₁| + (|f₂| + |f₃|) = |f|");
    let mut distributive = Check::new("valuation-distributes", "|t| ∘ (|f₁| + |f₂|) = |t|∘|f₁| + |t|∘|f₂|");
    let mut over_oplus = Check::new("valuation-additive-over-oplus", "|f ⊕ g| = |f| + |g|");
    let mut positive_values = Check::new("valuations-have-square-roots", "‖f‖ = x ∘ x† for a positive x");
    let mut diagonal = Check::new("diagonal-axiom", "Tr(h) = Tr(h₁₁) + Tr(h₂₂) for positive h");
    let mut diagonal_same = Check::new("diagonal-axiom-same-type", "Tr(h) = Tr(h₁₁ + h₂₂) for positive h on A ⊕ A");
    let mut linear = Check::new("trace-linearity", "Tr(h) + Tr(h') = Tr(h + h') for positive h, h'");
    let mut sum_vs_oplus = Check::new("trace-of-sum-is-trace-of-oplus", "Tr(h + h') = Tr(h ⊕ h')");
    let mut bornian = Check::new("ortho-bornian", "‖f‖ = Tr(‖f₁‖ ⊕ ‖f₂‖)");
    let mut bornian_positive = Check::new("ortho-bornian-positive-form", "Tr(h) = Tr(Tr(h₁₁) ⊕ Tr(h₂₂))");
    let mut pdiag = Check::new("pseudo-diagonal-trace", "Tr(h₁₁ ⊕ h₂₂) = Tr(h)");

    let mut rng = stream_rng(cfg.seed, 41);
    for trial in 0..cfg.trials {
        let dom = OplusDecomposition::new(vec![random_part(&mut rng, "A", small)]).expect("nonempty");
        let cod = decomposition(&mut rng, "B", 2, small);
        let raw = random_morphism::<Complex64, _>(dom.whole(), cod.whole(), &mut rng);
        let f = w.embed(&raw);

        let outcome = (|| {
            let s1 = w.valuation(&w.component(&f, &dom, &cod, 0, 0)?, nu, tol)?;
            let s2 = w.valuation(&w.component(&f, &dom, &cod, 0, 1)?, nu, tol)?;
            let sum = w.scalar_sum(&s1, &s2, nu, tol)?;
            Ok((w.value(&sum), w.value(&w.valuation(&f, nu, tol)?)))
        })();
        record(&mut additivity, w, outcome, tol, Samples { witnesses: vec![f.clone()] });

        // Zero out the second block.
        let (p0, _) = ortho::pseudo_maps::<Complex64>(&cod, 0).expect("in range");
        let (_, q0) = ortho::pseudo_maps::<Complex64>(&cod, 0).expect("in range");
        let truncated = w.embed(&q0.compose(&p0.compose(&raw).expect("typed")).expect("typed"));
        let outcome = (|| {
            let s1 = w.valuation(&w.component(&truncated, &dom, &cod, 0, 0)?, nu, tol)?;
            let s2 = w.valuation(&w.component(&truncated, &dom, &cod, 0, 1)?, nu, tol)?;
            let sum = w.scalar_sum(&s1, &s2, nu, tol)?;
            Ok((w.value(&sum), w.value(&w.valuation(&truncated, nu, tol)?)))
        })();
        record(&mut vanishing, w, outcome, tol, Samples { witnesses: vec![truncated] });

        let cod3 = decomposition(&mut rng, "C", 3, small);
        let g = w.embed(&random_morphism(dom.whole(), cod3.whole(), &mut rng));
        let outcome = (|| {
            let s: Vec<W::Mor> =
                (0..3).map(|j| w.valuation(&w.component(&g, &dom, &cod3, 0, j)?, nu, tol)).collect::<Result<_>>()?;
            let left = w.scalar_sum(&w.scalar_sum(&s[0], &s[1], nu, tol)?, &s[2], nu, tol)?;
            let right = w.scalar_sum(&s[0], &w.scalar_sum(&s[1], &s[2], nu, tol)?, nu, tol)?;
            let whole = w.valuation(&g, nu, tol)?;
            // Report the first side that misses the whole.
            let left = w.value(&left);
            let lhs = if close(left, w.value(&whole), tol) { w.value(&right) } else { left };
            Ok((lhs, w.value(&whole)))
        })();
        record(&mut three, w, outcome, tol, Samples { witnesses: vec![g.clone()] });

        let t = w.embed(&Morphism::scalar(rng.random::<f64>() * 2.0 * Complex64::new(1.0, 0.0)));
        let outcome = (|| {
            let s = w.valuation(&t, nu, tol)?;
            let s1 = w.valuation(&w.component(&f, &dom, &cod, 0, 0)?, nu, tol)?;
            let s2 = w.valuation(&w.component(&f, &dom, &cod, 0, 1)?, nu, tol)?;
            let lhs = w.compose(&s, &w.scalar_sum(&s1, &s2, nu, tol)?)?;
            let rhs = w.scalar_sum(&w.compose(&s, &s1)?, &w.compose(&s, &s2)?, nu, tol)?;
            Ok((w.value(&lhs), w.value(&rhs)))
        })();
        record(&mut distributive, w, outcome, tol, Samples { witnesses: vec![f.clone(), t] });

        let a2 = random_part(&mut rng, "D", small);
        let b2 = random_part(&mut rng, "E", small);
        let h_any = w.embed(&random_morphism(&a2, &b2, &mut rng));
        let outcome = (|| {
            let lhs = w.valuation(&w.oplus(&f, &h_any), nu, tol)?;
            let rhs = w.scalar_sum(&w.valuation(&f, nu, tol)?, &w.valuation(&h_any, nu, tol)?, nu, tol)?;
            Ok((w.value(&lhs), w.value(&rhs)))
        })();
        record(&mut over_oplus, w, outcome, tol, Samples { witnesses: vec![f.clone(), h_any] });

        let outcome = (|| {
            let norm = w.norm_sq(&f)?;
            let v = real_power(w.value(&norm), one, tol)?;
            let x = w.positive_scalar(v.sqrt());
            Ok((w.value(&w.compose(&x, &w.dagger(&x))?), w.value(&norm)))
        })();
        record(&mut positive_values, w, outcome, tol, Samples { witnesses: vec![f.clone()] });

        let split = decomposition(&mut rng, "P", 2, small);
        let h = random_positive(w, split.whole(), &mut rng, small)?;
        record(&mut diagonal, w, diagonal_sample(w, &h, &split), tol, Samples { witnesses: vec![h.clone()] });

        let half = random_part(&mut rng, "H", small);
        let twin = OplusDecomposition::new(vec![half.clone(), half]).expect("nonempty");
        let ht = random_positive(w, twin.whole(), &mut rng, small)?;
        record(
            &mut diagonal_same,
            w,
            diagonal_same_type_sample(w, &ht, &twin),
            tol,
            Samples { witnesses: vec![ht.clone()] },
        );

        let h2 = if trial == 0 {
            w.embed(&Morphism::zeros(split.whole(), split.whole()))
        } else {
            random_positive(w, split.whole(), &mut rng, small)?
        };
        record(&mut linear, w, linearity_sample(w, &h, &h2), tol, Samples { witnesses: vec![h.clone(), h2.clone()] });

        let outcome = (|| {
            let lhs = w.trace(&w.derived_sum(&h, &h2)?)?;
            let rhs = w.trace(&w.oplus(&h, &h2))?;
            Ok((w.value(&lhs), w.value(&rhs)))
        })();
        record(&mut sum_vs_oplus, w, outcome, tol, Samples { witnesses: vec![h.clone(), h2] });

        record(&mut bornian, w, ortho_bornian_sample(w, &f, &dom, &cod), tol, Samples { witnesses: vec![f.clone()] });

        let outcome = (|| {
            let t11 = w.trace(&w.component(&h, &split, &split, 0, 0)?)?;
            let t22 = w.trace(&w.component(&h, &split, &split, 1, 1)?)?;
            Ok((w.value(&w.trace(&h)?), w.value(&w.trace(&w.oplus(&t11, &t22))?)))
        })();
        record(&mut bornian_positive, w, outcome, tol, Samples { witnesses: vec![h.clone()] });

        let outcome = (|| {
            let h11 = w.component(&h, &split, &split, 0, 0)?;
            let h22 = w.component(&h, &split, &split, 1, 1)?;
            Ok((w.value(&w.trace(&w.oplus(&h11, &h22))?), w.value(&w.trace(&h)?)))
        })();
        record(&mut pdiag, w, outcome, tol, Samples { witnesses: vec![h] });
    }

    for check in [
        additivity,
        vanishing,
        three,
        distributive,
        over_oplus,
        positive_values,
        diagonal,
        diagonal_same,
        linear,
        sum_vs_oplus,
        bornian,
        bornian_positive,
        pdiag,
    ] {
        report.push(check.finish());
    }
    Ok(report)
}

/// Runs the ortho-Bornian axiom, the diagonal axiom and linearity on one
/// sample stream and checks that the first holds exactly when the other
/// two do. In a negative-control world the first two are expected to
/// break.
pub fn check_theorem_equivalence<W: BornWorld>(w: &W, cfg: &SuiteConfig) -> Result<VerificationReport> {
    let tol = &cfg.tolerance;
    let mut report = VerificationReport::new("equivalence", &w.name(), cfg.seed, tol.rel, cfg.trials);
    let small = cfg.max_dim.clamp(2, 4);
    let control = w.is_negative_control();
    let expect = |c: Check| if control { c.expecting_failure() } else { c };
    let mut bornian = expect(Check::new("ortho-bornian", "‖f‖ = Tr(‖f₁‖ ⊕ ‖f₂‖)"));
    let mut diagonal = expect(Check::new("diagonal-axiom", "Tr(h) = Tr(h₁₁ + h₂₂) for positive h"));
    let mut linear = Check::new("trace-linearity", "Tr(h) + Tr(h') = Tr(h + h') for positive h, h'");

    let mut rng = stream_rng(cfg.seed, 42);
    let (mut ob_ok, mut diag_ok, mut lin_ok) = (true, true, true);
    for _ in 0..cfg.trials {
        let dom = OplusDecomposition::new(vec![random_part(&mut rng, "A", small)]).expect("nonempty");
        let cod = decomposition(&mut rng, "B", 2, small);
        let f = w.embed(&random_morphism(dom.whole(), cod.whole(), &mut rng));
        ob_ok &= record(&mut bornian, w, ortho_bornian_sample(w, &f, &dom, &cod), tol, Samples { witnesses: vec![f] });

        let half = random_part(&mut rng, "H", small);
        let twin = OplusDecomposition::new(vec![half.clone(), half]).expect("nonempty");
        let h = random_positive(w, twin.whole(), &mut rng, small)?;
        let same = diagonal_same_type_sample(w, &h, &twin);
        diag_ok &= record(&mut diagonal, w, same, tol, Samples { witnesses: vec![h.clone()] });
        let h2 = random_positive(w, twin.whole(), &mut rng, small)?;
        lin_ok &= record(&mut linear, w, linearity_sample(w, &h, &h2), tol, Samples { witnesses: vec![h, h2] });
    }
    let verdicts = format!("ortho-Bornian {ob_ok}, diagonal {diag_ok}, linear {lin_ok}");
    let mut agree = Check::new("verdicts-agree", "ortho-Bornian ⟺ (linear ∧ diagonal)");
    agree.record(ob_ok == (lin_ok && diag_ok), Vec::new, || verdicts.clone());
    agree.set_detail(verdicts);
    report.push(bornian.finish());
    report.push(diagonal.finish());
    report.push(linear.finish());
    report.push(agree.finish());
    Ok(report)
}

/// Abstract integers from the two sums: `1 + 1` is `Tr(1_{I⊕I}) = 2` for
/// `‖−‖` and `√Tr(1_{I⊕I}) = √2` for `|−|`.
pub fn scalar_arithmetic_checks() -> Vec<CheckResult> {
    let tol = Tolerance::new(1e-12);
    let one = Morphism::scalar(Complex64::new(1.0, 0.0));
    let half = Rational64::new(1, 2);
    let int = Rational64::from_integer;
    let mut out = Vec::new();

    let value = |r: Result<Scalar<Complex64>>| r.map(|s| *s.value().expect("scalar"));
    let cases = [
        (
            "one-plus-one-squared-norm",
            "ν = 1: 1 + 1 = Tr(1_{I⊕I}) = 2",
            value(scalar_sum(&one, &one, int(1))),
            Complex64::new(2.0, 0.0),
        ),
        (
            "one-plus-one-norm",
            "ν = 1/2: 1 + 1 = √Tr(1_{I⊕I}) = √2",
            value(scalar_sum(&one, &one, half)),
            Complex64::new(std::f64::consts::SQRT_2, 0.0),
        ),
        (
            "trace-of-identity-on-two",
            "Tr(1_{I⊕I}) = 2",
            value(sccc::trace(&Morphism::<Complex64>::identity(&ortho::two()))),
            Complex64::new(2.0, 0.0),
        ),
        (
            "zero-plus-s",
            "ν = 1: 0 + s = s",
            value(scalar_sum(
                &Morphism::scalar(Complex64::new(0.0, 0.0)),
                &Morphism::scalar(Complex64::new(0.3, -1.7)),
                int(1),
            )),
            Complex64::new(0.3, -1.7),
        ),
        (
            "one-plus-one-fourth-power",
            "ν = 2: 1 + 1 = (Tr(1 ⊕ 1))² = 4",
            value(scalar_sum(&one, &one, int(2))),
            Complex64::new(4.0, 0.0),
        ),
    ];
    for (name, reference, got, expected) in cases {
        let mut check = Check::new(name, reference);
        match got {
            Ok(v) => {
                check.record(close(v, expected, &tol), Vec::new, || format!("got {v}, expected {expected}"));
                check.set_detail(format!("value {v}"));
            }
            Err(e) => check.record(false, Vec::new, || e.to_string()),
        }
        out.push(check.finish());
    }

    let mut distinct = Check::new("valuations-give-distinct-integers", "2 for ‖−‖ ≠ 2 for |−|");
    let a = value(scalar_sum(&one, &one, int(1)));
    let b = value(scalar_sum(&one, &one, half));
    distinct
        .record(matches!((a, b), (Ok(x), Ok(y)) if (x - y).norm() > 0.1), Vec::new, || "the two sums coincide".into());
    out.push(distinct.finish());

    let mut refuse = Check::new("roots-of-negative-scalars-refused", "ν = 1/2 on −1 has no nonnegative root");
    let minus = Morphism::scalar(Complex64::new(-1.0, 0.0));
    refuse.record(matches!(scalar_sum(&minus, &one, half), Err(Error::RootUnavailable { .. })), Vec::new, || {
        "a root of −1 was produced".into()
    });
    out.push(refuse.finish());
    out
}

/// Positivity on complex matrices: products `f† ∘ f` are positive with a
/// witness that reproduces them, `diag(1, −1)` is not, `0` is.
pub fn positivity_checks(cfg: &SuiteConfig) -> Vec<CheckResult> {
    let tol = &cfg.tolerance;
    let mut gram = Check::new("gram-products-positive", "f† ∘ f = w† ∘ w for the returned witness w");
    let mut rng = stream_rng(cfg.seed, 43);
    let small = cfg.max_dim.clamp(1, 5);
    for _ in 0..cfg.trials {
        let a = random_part(&mut rng, "A", small);
        let b = random_part(&mut rng, "B", small);
        let f: Morphism<Complex64> = random_morphism(&a, &b, &mut rng);
        let h = f.dagger().compose(&f).expect("typed");
        let ok = match is_positive(&h, tol) {
            Ok(Some(wit)) => {
                wit.dagger().compose(&wit).is_ok_and(|x| x.max_distance(&h) <= 1e-8 * h.max_magnitude().max(1.0))
            }
            _ => false,
        };
        gram.record(ok, || vec![MatrixLiteral::from_morphism(&f)], String::new);
    }
    let mut negative = Check::new("indefinite-not-positive", "diag(1, −1) is not positive");
    let q = Object::gen("Q", 2);
    let d = Morphism::from_fn(&q, &q, |i, j| {
        if i != j {
            Complex64::new(0.0, 0.0)
        } else if i == 0 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(-1.0, 0.0)
        }
    });
    negative.record(matches!(is_positive(&d, tol), Ok(None)), Vec::new, String::new);
    let mut zero = Check::new("zero-positive", "0 = 0† ∘ 0");
    let z = Morphism::<Complex64>::zeros(&q, &q);
    zero.record(matches!(is_positive(&z, tol), Ok(Some(w)) if w.is_zero()), Vec::new, String::new);
    vec![gram.finish(), negative.finish(), zero.finish()]
}
