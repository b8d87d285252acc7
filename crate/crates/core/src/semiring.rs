//! Commutative involutive semirings, the scalars of the matrix models.

use std::f64::consts::PI;
use std::fmt::Debug;

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

/// A commutative semiring with an involution that is a semiring
/// homomorphism. `distance` and `magnitude` drive the tolerance rule used
/// for morphism equality; discrete carriers report distances of 0 or 1 and
/// so compare exactly.
pub trait InvolutiveSemiring: Clone + Debug + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn involution(&self) -> Self;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    fn magnitude(&self) -> f64;
    fn distance(&self, other: &Self) -> f64;

    /// Whether the element is a nonnegative real, i.e. could be `x∘x†`.
    fn is_nonnegative(&self, tol: f64) -> bool;

    /// A generic element for randomized checks.
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// A candidate phase, an element intended to satisfy `s∘s† = 1`.
    fn sample_phase<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// A small finite set of elements for exhaustive enumeration.
    fn grid() -> Vec<Self>;

    /// The literal encoding `[re, im]`.
    fn to_pair(&self) -> [f64; 2];
    fn from_pair(pair: [f64; 2]) -> Result<Self>;
}

impl InvolutiveSemiring for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn involution(&self) -> Self {
        self.conj()
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn distance(&self, other: &Self) -> f64 {
        (self - other).norm()
    }
    fn is_nonnegative(&self, tol: f64) -> bool {
        self.im.abs() <= tol && self.re >= -tol
    }
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    }
    fn sample_phase<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Complex64::from_polar(1.0, rng.random_range(0.0..2.0 * PI))
    }
    fn grid() -> Vec<Self> {
        vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)]
    }
    fn to_pair(&self) -> [f64; 2] {
        [self.re, self.im]
    }
    fn from_pair([re, im]: [f64; 2]) -> Result<Self> {
        Ok(Complex64::new(re, im))
    }
}

/// The two-element boolean semiring (or, and) with trivial involution;
/// matrices over it are relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Boolean(pub bool);

impl InvolutiveSemiring for Boolean {
    fn zero() -> Self {
        Boolean(false)
    }
    fn one() -> Self {
        Boolean(true)
    }
    fn add(&self, rhs: &Self) -> Self {
        Boolean(self.0 || rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Boolean(self.0 && rhs.0)
    }
    fn involution(&self) -> Self {
        *self
    }
    fn magnitude(&self) -> f64 {
        if self.0 {
            1.0
        } else {
            0.0
        }
    }
    fn distance(&self, other: &Self) -> f64 {
        if self == other {
            0.0
        } else {
            1.0
        }
    }
    fn is_nonnegative(&self, _tol: f64) -> bool {
        true
    }
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Boolean(rng.random_bool(0.5))
    }
    fn sample_phase<R: Rng + ?Sized>(_rng: &mut R) -> Self {
        Boolean(true)
    }
    fn grid() -> Vec<Self> {
        vec![Boolean(false), Boolean(true)]
    }
    fn to_pair(&self) -> [f64; 2] {
        [self.magnitude(), 0.0]
    }
    fn from_pair(pair: [f64; 2]) -> Result<Self> {
        match pair {
            [re, im] if re == 0.0 && im == 0.0 => Ok(Boolean(false)),
            [re, im] if re == 1.0 && im == 0.0 => Ok(Boolean(true)),
            _ => Err(Error::Parse(format!("{pair:?} is not a boolean entry"))),
        }
    }
}

/// Nonnegative reals with the usual operations and identity involution.
/// Every scalar is its own adjoint, so there are no phases at all.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Weight(pub f64);

impl InvolutiveSemiring for Weight {
    fn zero() -> Self {
        Weight(0.0)
    }
    fn one() -> Self {
        Weight(1.0)
    }
    fn add(&self, rhs: &Self) -> Self {
        Weight(self.0 + rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Weight(self.0 * rhs.0)
    }
    fn involution(&self) -> Self {
        *self
    }
    fn magnitude(&self) -> f64 {
        self.0.abs()
    }
    fn distance(&self, other: &Self) -> f64 {
        (self.0 - other.0).abs()
    }
    fn is_nonnegative(&self, tol: f64) -> bool {
        self.0 >= -tol
    }
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let x: f64 = rng.sample(StandardNormal);
        Weight(x.abs())
    }
    fn sample_phase<R: Rng + ?Sized>(_rng: &mut R) -> Self {
        Weight(1.0)
    }
    fn grid() -> Vec<Self> {
        vec![Weight(0.0), Weight(1.0), Weight(2.0)]
    }
    fn to_pair(&self) -> [f64; 2] {
        [self.0, 0.0]
    }
    fn from_pair([re, im]: [f64; 2]) -> Result<Self> {
        if im != 0.0 || re < 0.0 || !re.is_finite() {
            return Err(Error::Parse(format!("[{re}, {im}] is not a nonnegative weight")));
        }
        Ok(Weight(re))
    }
}

/// Complex numbers with the identity as involution. A lawful involutive
/// semiring, but not the one of Hilbert spaces: adjoints become plain
/// transposes and `i∘i† = −1`. Used as a negative control.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransposeComplex(pub Complex64);

impl InvolutiveSemiring for TransposeComplex {
    fn zero() -> Self {
        TransposeComplex(<Complex64 as InvolutiveSemiring>::zero())
    }
    fn one() -> Self {
        TransposeComplex(<Complex64 as InvolutiveSemiring>::one())
    }
    fn add(&self, rhs: &Self) -> Self {
        TransposeComplex(self.0 + rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        TransposeComplex(self.0 * rhs.0)
    }
    fn involution(&self) -> Self {
        *self
    }
    fn is_zero(&self) -> bool {
        InvolutiveSemiring::is_zero(&self.0)
    }
    fn magnitude(&self) -> f64 {
        self.0.norm()
    }
    fn distance(&self, other: &Self) -> f64 {
        (self.0 - other.0).norm()
    }
    fn is_nonnegative(&self, tol: f64) -> bool {
        self.0.is_nonnegative(tol)
    }
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        TransposeComplex(Complex64::sample(rng))
    }
    fn sample_phase<R: Rng + ?Sized>(rng: &mut R) -> Self {
        TransposeComplex(Complex64::sample_phase(rng))
    }
    fn grid() -> Vec<Self> {
        Complex64::grid().into_iter().map(TransposeComplex).collect()
    }
    fn to_pair(&self) -> [f64; 2] {
        self.0.to_pair()
    }
    fn from_pair(pair: [f64; 2]) -> Result<Self> {
        Complex64::from_pair(pair).map(TransposeComplex)
    }
}

/// Samples elements and checks the commutative involutive semiring laws on
/// all triples. The first violated law is returned with its witnesses.
pub fn check_semiring_laws<S: InvolutiveSemiring>(samples: &[S], tol: f64) -> Result<()> {
    let close = |a: &S, b: &S| {
        let scale = a.magnitude().max(b.magnitude());
        a.distance(b) <= tol.max(1e-12) * scale.max(1.0)
    };
    let fail = |law: &'static str, xs: &[&S]| Error::SemiringLawViolation { law, witnesses: format!("{xs:?}") };
    let zero = S::zero();
    let one = S::one();
    for a in samples {
        if !close(&a.add(&zero), a) {
            return Err(fail("additive unit", &[a]));
        }
        if !close(&a.mul(&one), a) {
            return Err(fail("multiplicative unit", &[a]));
        }
        if !close(&a.mul(&zero), &zero) {
            return Err(fail("zero annihilates", &[a]));
        }
        if !close(&a.involution().involution(), a) {
            return Err(fail("involution is involutive", &[a]));
        }
        for b in samples {
            if !close(&a.add(b), &b.add(a)) {
                return Err(fail("addition commutes", &[a, b]));
            }
            if !close(&a.mul(b), &b.mul(a)) {
                return Err(fail("multiplication commutes", &[a, b]));
            }
            if !close(&a.add(b).involution(), &a.involution().add(&b.involution())) {
                return Err(fail("involution preserves addition", &[a, b]));
            }
            if !close(&a.mul(b).involution(), &a.involution().mul(&b.involution())) {
                return Err(fail("involution preserves multiplication", &[a, b]));
            }
            for c in samples {
                if !close(&a.add(b).add(c), &a.add(&b.add(c))) {
                    return Err(fail("addition associates", &[a, b, c]));
                }
                if !close(&a.mul(b).mul(c), &a.mul(&b.mul(c))) {
                    return Err(fail("multiplication associates", &[a, b, c]));
                }
                if !close(&a.mul(&b.add(c)), &a.mul(b).add(&a.mul(c))) {
                    return Err(fail("multiplication distributes", &[a, b, c]));
                }
            }
        }
    }
    Ok(())
}
