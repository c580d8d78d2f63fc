//! The fourth-order operator `l̃_p = ∂⁴_y + A_p ∂²_x∂²_y + B_p ∂⁴_x`, its
//! factorization `l̃_p = l̃_{1,p} ∘ Δ = Δ ∘ l̃_{1,p}` with
//! `l̃_{1,p} = ∂²_y + p²∂²_x`, the characteristic polynomial, and a
//! finite-difference residual used as an independent check.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::One;

use crate::algebra::AnisoParam;
use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar};

/// Sparse bivariate polynomial `Σ c_ij xⁱ yʲ` with real coefficients.
///
/// Coefficients that are [negligible](Scalar::is_negligible) are dropped
/// after every operation, so the zero polynomial has no terms.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct BiPoly<T: Scalar> {
    terms: BTreeMap<(u32, u32), T>,
}

impl<T: Scalar> BiPoly<T> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(0, 0, c)
    }

    /// `c · xⁱ yʲ`.
    pub fn monomial(i: u32, j: u32, c: T) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, T::one())
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, T::one())
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), T)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    fn add_term(&mut self, i: u32, j: u32, c: T) {
        let entry = self.terms.entry((i, j)).or_insert_with(T::zero);
        *entry = entry.clone() + c;
        if entry.is_negligible() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> T {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &T)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::from_terms(self.terms().map(|(k, c)| (k, c.clone() * s.clone())))
    }

    /// Partial derivative in `x`.
    pub fn dx(&self) -> Self {
        Self::from_terms(
            self.terms()
                .filter(|((i, _), _)| *i > 0)
                .map(|((i, j), c)| ((i - 1, j), c.clone() * T::from_int(i64::from(i)))),
        )
    }

    /// Partial derivative in `y`.
    pub fn dy(&self) -> Self {
        Self::from_terms(
            self.terms()
                .filter(|((_, j), _)| *j > 0)
                .map(|((i, j), c)| ((i, j - 1), c.clone() * T::from_int(i64::from(j)))),
        )
    }

    /// `∂ⁿ/∂xⁿ ∂ᵐ/∂yᵐ`.
    pub fn diff(&self, nx: u32, ny: u32) -> Self {
        let mut out = self.clone();
        for _ in 0..nx {
            out = out.dx();
        }
        for _ in 0..ny {
            out = out.dy();
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(T::one());
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &T, y: &T) -> T {
        let mut acc = T::zero();
        for ((i, j), c) in self.terms() {
            let mut t = c.clone();
            for _ in 0..i {
                t = t * x.clone();
            }
            for _ in 0..j {
                t = t * y.clone();
            }
            acc = acc + t;
        }
        acc
    }
}

impl<T: Scalar> Add for &BiPoly<T> {
    type Output = BiPoly<T>;

    fn add(self, rhs: &BiPoly<T>) -> BiPoly<T> {
        let mut out = self.clone();
        for ((i, j), c) in rhs.terms() {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl<T: Scalar> Sub for &BiPoly<T> {
    type Output = BiPoly<T>;

    fn sub(self, rhs: &BiPoly<T>) -> BiPoly<T> {
        let mut out = self.clone();
        for ((i, j), c) in rhs.terms() {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl<T: Scalar> Mul for &BiPoly<T> {
    type Output = BiPoly<T>;

    fn mul(self, rhs: &BiPoly<T>) -> BiPoly<T> {
        let mut out = BiPoly::zero();
        for ((i1, j1), a) in self.terms() {
            for ((i2, j2), b) in rhs.terms() {
                out.add_term(i1 + i2, j1 + j2, a.clone() * b.clone());
            }
        }
        out
    }
}

impl<T: Scalar> Add for BiPoly<T> {
    type Output = BiPoly<T>;

    fn add(self, rhs: BiPoly<T>) -> BiPoly<T> {
        &self + &rhs
    }
}

impl<T: Scalar> Sub for BiPoly<T> {
    type Output = BiPoly<T>;

    fn sub(self, rhs: BiPoly<T>) -> BiPoly<T> {
        &self - &rhs
    }
}

impl<T: Scalar> Mul for BiPoly<T> {
    type Output = BiPoly<T>;

    fn mul(self, rhs: BiPoly<T>) -> BiPoly<T> {
        &self * &rhs
    }
}

impl<T: Scalar> Neg for BiPoly<T> {
    type Output = BiPoly<T>;

    fn neg(self) -> BiPoly<T> {
        self.scale(&-T::one())
    }
}

/// `u_yyyy + A_p u_xxyy + B_p u_xxxx`.
pub fn apply_operator<T: Scalar>(u: &BiPoly<T>, param: &AnisoParam<T>) -> BiPoly<T> {
    let uyyyy = u.diff(0, 4);
    let uxxyy = u.diff(2, 2).scale(&param.a_p());
    let uxxxx = u.diff(4, 0).scale(&param.b_p());
    &(&uyyyy + &uxxyy) + &uxxxx
}

/// Second-order factors of the operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    /// `∂²_x + ∂²_y`
    Laplace,
    /// `∂²_y + p²∂²_x`
    L1p,
}

pub fn apply_factor<T: Scalar>(u: &BiPoly<T>, param: &AnisoParam<T>, which: Factor) -> BiPoly<T> {
    let uxx = u.diff(2, 0);
    let uyy = u.diff(0, 2);
    match which {
        Factor::Laplace => &uxx + &uyy,
        Factor::L1p => &uyy + &uxx.scale(&param.b_p()),
    }
}

/// Characteristic polynomial `s⁴ + (p²+1)s² + p²`.
pub fn char_eval<T: Scalar>(s: &Complex<T>, param: &AnisoParam<T>) -> Complex<T> {
    let s2 = s.clone() * s.clone();
    s2.clone() * s2.clone() + s2 * param.a_p() + Complex::from(param.b_p())
}

/// Characteristic polynomial of the operator, with its product form.
#[derive(Clone, Debug, PartialEq)]
pub struct CharPoly<T: Scalar> {
    pub param: AnisoParam<T>,
}

impl<T: Scalar> CharPoly<T> {
    pub fn new(param: AnisoParam<T>) -> Self {
        Self { param }
    }

    pub fn eval(&self, s: &Complex<T>) -> Complex<T> {
        char_eval(s, &self.param)
    }

    /// `(s² + 1)(s² + p²)`.
    pub fn eval_factored(&self, s: &Complex<T>) -> Complex<T> {
        let s2 = s.clone() * s.clone();
        (s2.clone() + Complex::one()) * (s2 + Complex::from(self.param.b_p()))
    }
}

/// Values on a uniform grid, `values[j * nx + i]` at `(x₀ + i h, y₀ + j h)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid2<T> {
    pub nx: usize,
    pub ny: usize,
    pub values: Vec<T>,
}

impl<T: Clone> Grid2<T> {
    pub fn from_fn<F: FnMut(usize, usize) -> T>(nx: usize, ny: usize, mut f: F) -> Self {
        let mut values = Vec::with_capacity(nx * ny);
        for j in 0..ny {
            for i in 0..nx {
                values.push(f(i, j));
            }
        }
        Self { nx, ny, values }
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.values[j * self.nx + i]
    }
}

/// Second-order finite-difference approximation of `l̃_p u`, built as the
/// five-point Laplacian applied to the five-point `l̃_{1,p}` stencil.
///
/// Entries within two cells of the grid edge are `None`.
pub fn fd_residual<T: Real>(
    u: &Grid2<T>,
    h: T,
    param: &AnisoParam<T>,
) -> Result<Grid2<Option<T>>> {
    let (nx, ny) = (u.nx, u.ny);
    if nx < 5 || ny < 5 || u.values.len() != nx * ny {
        return Err(Error::GridTooSmall { nx, ny });
    }
    if h.is_nan() || h <= T::zero() {
        return Err(Error::InvalidConfig(format!("grid spacing must be positive, got {h}")));
    }
    let h2 = h * h;
    let p2 = param.b_p();
    let two = T::lit(2.0);
    let l1p = Grid2::from_fn(nx, ny, |i, j| {
        if i == 0 || j == 0 || i + 1 == nx || j + 1 == ny {
            return T::zero();
        }
        let c = *u.get(i, j);
        let dxx = *u.get(i + 1, j) - two * c + *u.get(i - 1, j);
        let dyy = *u.get(i, j + 1) - two * c + *u.get(i, j - 1);
        (dyy + p2 * dxx) / h2
    });
    Ok(Grid2::from_fn(nx, ny, |i, j| {
        if i < 2 || j < 2 || i + 2 >= nx || j + 2 >= ny {
            return None;
        }
        let c = *l1p.get(i, j);
        let lap = *l1p.get(i + 1, j) + *l1p.get(i - 1, j) + *l1p.get(i, j + 1) + *l1p.get(i, j - 1)
            - T::lit(4.0) * c;
        Some(lap / h2)
    }))
}

/// Largest absolute entry of a residual grid, ignoring unavailable cells.
pub fn max_abs<T: Real>(grid: &Grid2<Option<T>>) -> T {
    grid.values
        .iter()
        .flatten()
        .fold(T::zero(), |m, v| m.max(v.abs()))
}
