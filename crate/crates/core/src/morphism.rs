//! Dense matrices over an involutive semiring, typed by formal objects.
//!
//! Basis conventions are fixed here and every structural map relies on
//! them: the basis of `A ⊗ B` is ordered lexicographically with the left
//! factor major, the basis of `A ⊕ B` lists the left block first, and the
//! name of `f` is the column stacking of its matrix.

use std::fmt;

use crate::error::{Error, Result};
use crate::object::Object;
use crate::semiring::InvolutiveSemiring;

/// Scale-aware equality: two morphisms agree when their largest entry
/// distance is at most `max(abs, rel · largest entry magnitude)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
}

impl Tolerance {
    pub const fn new(rel: f64) -> Self {
        Tolerance { rel, abs: 1e-12 }
    }

    pub fn threshold(&self, scale: f64) -> f64 {
        self.abs.max(self.rel * scale)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::new(1e-9)
    }
}

#[derive(Clone, PartialEq)]
pub struct Morphism<S> {
    dom: Object,
    cod: Object,
    rows: usize,
    cols: usize,
    // row-major
    data: Vec<S>,
}

/// A morphism `I → I`.
pub type Scalar<S> = Morphism<S>;

impl<S: InvolutiveSemiring> Morphism<S> {
    /// Builds a morphism from row-major rows. Objects are stored normalized.
    pub fn from_rows(dom: &Object, cod: &Object, rows: Vec<Vec<S>>) -> Result<Self> {
        let (r, c) = (cod.dim(), dom.dim());
        let shape_err = || Error::ShapeMismatch {
            rows: rows.len(),
            cols: rows.first().map_or(0, Vec::len),
            dom: dom.clone(),
            cod: cod.clone(),
        };
        if rows.len() != r || rows.iter().any(|row| row.len() != c) {
            return Err(shape_err());
        }
        Ok(Morphism {
            dom: dom.normalize(),
            cod: cod.normalize(),
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(dom: &Object, cod: &Object, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let (rows, cols) = (cod.dim(), dom.dim());
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Morphism { dom: dom.normalize(), cod: cod.normalize(), rows, cols, data }
    }

    pub fn zeros(dom: &Object, cod: &Object) -> Self {
        Self::from_fn(dom, cod, |_, _| S::zero())
    }

    pub fn identity(a: &Object) -> Self {
        Self::from_fn(a, a, |i, j| if i == j { S::one() } else { S::zero() })
    }

    /// The 0/1 matrix sending basis vector `j` of `dom` to basis vector
    /// `image(j)` of `cod`. Used for all structural isomorphisms.
    pub fn permutation(dom: &Object, cod: &Object, image: impl Fn(usize) -> usize) -> Self {
        debug_assert_eq!(dom.dim(), cod.dim());
        let mut m = Self::zeros(dom, cod);
        for j in 0..m.cols {
            let i = image(j);
            m.data[i * m.cols + j] = S::one();
        }
        m
    }

    /// A scalar `I → I` with the given value.
    pub fn scalar(value: S) -> Self {
        Morphism { dom: Object::Unit, cod: Object::Unit, rows: 1, cols: 1, data: vec![value] }
    }

    /// A state `I → A` with the given coordinates.
    pub fn state(cod: &Object, entries: Vec<S>) -> Result<Self> {
        Self::from_rows(&Object::Unit, cod, entries.into_iter().map(|x| vec![x]).collect())
    }

    pub fn dom(&self) -> &Object {
        &self.dom
    }

    pub fn cod(&self) -> &Object {
        &self.cod
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, row: usize, col: usize) -> &S {
        &self.data[row * self.cols + col]
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        if self.cols == 0 {
            return vec![Vec::new(); self.rows];
        }
        self.data.chunks(self.cols).map(<[S]>::to_vec).collect()
    }

    pub fn is_scalar(&self) -> bool {
        self.dom == Object::Unit && self.cod == Object::Unit
    }

    pub fn is_endo(&self) -> bool {
        self.dom == self.cod
    }

    /// The value of a `1×1` morphism.
    pub fn value(&self) -> Option<&S> {
        (self.rows == 1 && self.cols == 1).then(|| &self.data[0])
    }

    /// Reinterprets the matrix between objects of the same dimensions.
    pub fn retype(mut self, dom: &Object, cod: &Object) -> Result<Self> {
        if dom.dim() != self.cols || cod.dim() != self.rows {
            return Err(Error::ShapeMismatch { rows: self.rows, cols: self.cols, dom: dom.clone(), cod: cod.clone() });
        }
        self.dom = dom.normalize();
        self.cod = cod.normalize();
        Ok(self)
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &Morphism<S>) -> Result<Morphism<S>> {
        if f.cod != self.dom {
            return Err(Error::TypeMismatch {
                context: "composition",
                expected: self.dom.clone(),
                found: f.cod.clone(),
            });
        }
        Ok(self.matmul(f))
    }

    /// Textbook product that skips zero entries of the left factor, so the
    /// many permutation matrices of the coherence structure stay cheap.
    fn matmul(&self, f: &Morphism<S>) -> Morphism<S> {
        let (n, m, p) = (self.rows, self.cols, f.cols);
        let mut data = vec![S::zero(); n * p];
        for i in 0..n {
            let out = &mut data[i * p..(i + 1) * p];
            for k in 0..m {
                let a = &self.data[i * m + k];
                if a.is_zero() {
                    continue;
                }
                let frow = &f.data[k * p..(k + 1) * p];
                for (o, b) in out.iter_mut().zip(frow) {
                    if !b.is_zero() {
                        *o = o.add(&a.mul(b));
                    }
                }
            }
        }
        Morphism { dom: f.dom.clone(), cod: self.cod.clone(), rows: n, cols: p, data }
    }

    /// Kronecker product, left factor major.
    pub fn tensor(&self, g: &Morphism<S>) -> Morphism<S> {
        let rows = self.rows * g.rows;
        let cols = self.cols * g.cols;
        let mut data = vec![S::zero(); rows * cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self.data[i * self.cols + j];
                if a.is_zero() {
                    continue;
                }
                for k in 0..g.rows {
                    for l in 0..g.cols {
                        let b = &g.data[k * g.cols + l];
                        data[(i * g.rows + k) * cols + j * g.cols + l] = a.mul(b);
                    }
                }
            }
        }
        Morphism { dom: self.dom.tensor(&g.dom), cod: self.cod.tensor(&g.cod), rows, cols, data }
    }

    /// Block-diagonal sum on the ⊕-typed objects.
    pub fn direct_sum(&self, g: &Morphism<S>) -> Morphism<S> {
        let dom = self.dom.oplus(&g.dom);
        let cod = self.cod.oplus(&g.cod);
        Morphism::from_fn(&dom, &cod, |i, j| match (i < self.rows, j < self.cols) {
            (true, true) => self.entry(i, j).clone(),
            (false, false) => g.entry(i - self.rows, j - self.cols).clone(),
            _ => S::zero(),
        })
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Morphism<S> {
        Morphism::from_fn(&self.cod, &self.dom, |i, j| self.entry(j, i).involution())
    }

    /// The contravariant dual `f*: B* → A*`, a plain transpose.
    pub fn star(&self) -> Morphism<S> {
        Morphism::from_fn(&self.cod.dual(), &self.dom.dual(), |i, j| self.entry(j, i).clone())
    }

    /// The covariant dual `f_*: A* → B*`, an entrywise involution.
    pub fn lower_star(&self) -> Morphism<S> {
        Morphism::from_fn(&self.dom.dual(), &self.cod.dual(), |i, j| self.entry(i, j).involution())
    }

    /// Entrywise multiplication by a raw semiring element.
    pub fn scale(&self, s: &S) -> Morphism<S> {
        Morphism {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| s.mul(x)).collect(),
        }
    }

    /// Entrywise sum of two morphisms of identical type.
    pub fn entrywise_sum(&self, g: &Morphism<S>) -> Result<Morphism<S>> {
        self.same_type(g, "entrywise sum")?;
        Ok(Morphism {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&g.data).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn same_type(&self, g: &Morphism<S>, context: &'static str) -> Result<()> {
        if self.dom != g.dom {
            return Err(Error::TypeMismatch { context, expected: self.dom.clone(), found: g.dom.clone() });
        }
        if self.cod != g.cod {
            return Err(Error::TypeMismatch { context, expected: self.cod.clone(), found: g.cod.clone() });
        }
        Ok(())
    }

    pub fn max_magnitude(&self) -> f64 {
        self.data.iter().map(S::magnitude).fold(0.0, f64::max)
    }

    /// Largest entrywise distance; infinite when the shapes differ.
    pub fn max_distance(&self, g: &Morphism<S>) -> f64 {
        if self.rows != g.rows || self.cols != g.cols {
            return f64::INFINITY;
        }
        self.data.iter().zip(&g.data).map(|(a, b)| a.distance(b)).fold(0.0, f64::max)
    }

    /// Equality of types plus entrywise agreement within tolerance.
    pub fn approx_eq(&self, g: &Morphism<S>, tol: &Tolerance) -> bool {
        self.dom == g.dom && self.cod == g.cod && self.approx_eq_entries(g, tol)
    }

    /// Entrywise agreement within tolerance, ignoring the object types.
    pub fn approx_eq_entries(&self, g: &Morphism<S>, tol: &Tolerance) -> bool {
        let scale = self.max_magnitude().max(g.max_magnitude());
        self.max_distance(g) <= tol.threshold(scale)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    pub fn map<T: InvolutiveSemiring>(&self, f: impl Fn(&S) -> T) -> Morphism<T> {
        Morphism {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<S: InvolutiveSemiring> fmt::Debug for Morphism<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Morphism {} -> {}", self.dom, self.cod)?;
        for row in self.to_rows() {
            writeln!(f, "  {:?}", row.iter().map(S::to_pair).collect::<Vec<_>>())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn q() -> Object {
        Object::gen("Q", 2)
    }

    fn real(rows: &[&[f64]], dom: &Object, cod: &Object) -> Morphism<Complex64> {
        Morphism::from_rows(dom, cod, rows.iter().map(|r| r.iter().map(|&x| c(x, 0.0)).collect()).collect()).unwrap()
    }

    #[test]
    fn composition_is_matrix_product() {
        let x = real(&[&[0.0, 1.0], &[1.0, 0.0]], &q(), &q());
        let e0 = real(&[&[1.0], &[0.0]], &Object::Unit, &q());
        let e1 = real(&[&[0.0], &[1.0]], &Object::Unit, &q());
        assert_eq!(x.compose(&e0).unwrap(), e1);
        assert_eq!(Morphism::identity(&q()).compose(&x).unwrap(), x);
    }

    #[test]
    fn composition_checks_types() {
        let f = Morphism::<Complex64>::identity(&q());
        let g = Morphism::<Complex64>::identity(&Object::gen("R", 2));
        assert!(matches!(g.compose(&f), Err(Error::TypeMismatch { .. })));
    }

    #[test]
    fn shape_is_checked() {
        let err = Morphism::<Complex64>::from_rows(&q(), &q(), vec![vec![c(1.0, 0.0)]]);
        assert!(matches!(err, Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn dagger_conjugates_and_transposes() {
        let s = Morphism::scalar(c(0.0, 1.0));
        assert_eq!(s.dagger().value(), Some(&c(0.0, -1.0)));
        let f = Morphism::from_fn(&q(), &Object::gen("R", 3), |i, j| c(i as f64, j as f64));
        assert_eq!(f.dagger().dagger(), f);
        assert_eq!(f.dagger().dom(), f.cod());
    }

    #[test]
    fn star_transposes_with_dual_types() {
        let f = real(&[&[0.0, 1.0], &[0.0, 0.0]], &q(), &q());
        let expected = real(&[&[0.0, 0.0], &[1.0, 0.0]], &q().dual(), &q().dual());
        assert_eq!(f.star(), expected);
        assert_eq!(f.star().star(), f);
        assert_eq!(f.lower_star().entries(), f.entries());
    }

    #[test]
    fn tensor_of_scalars_multiplies() {
        let a = Morphism::scalar(c(2.0, 1.0));
        let b = Morphism::scalar(c(0.0, 3.0));
        assert_eq!(a.tensor(&b).value(), Some(&(c(2.0, 1.0) * c(0.0, 3.0))));
        let idq = Morphism::<Complex64>::identity(&q());
        assert_eq!(idq.tensor(&idq), Morphism::identity(&q().tensor(&q())));
    }

    #[test]
    fn zero_dimensional_blocks() {
        let z = Morphism::<Complex64>::zeros(&Object::Zero, &q());
        assert_eq!((z.rows(), z.cols()), (2, 0));
        let w = Morphism::<Complex64>::zeros(&q(), &Object::Zero);
        assert_eq!(z.compose(&w).unwrap(), Morphism::zeros(&q(), &q()));
    }

    #[test]
    fn tolerance_is_scale_aware() {
        let tol = Tolerance::default();
        let big = Morphism::scalar(c(1e6, 0.0));
        let near = Morphism::scalar(c(1e6 + 1e-4, 0.0));
        assert!(big.approx_eq(&near, &tol));
        let small = Morphism::scalar(c(1e-6, 0.0));
        let off = Morphism::scalar(c(1e-6 + 1e-10, 0.0));
        assert!(!small.approx_eq(&off, &tol));
    }
}
