//! Arithmetic in the two-dimensional semisimple commutative algebra over ℂ
//! with basis `(e, ω)`, `ω² = e`.
//!
//! Elements are stored in the orthogonal idempotent basis `(I₁, I₂)` with
//! `I₁ = (e + ω)/2`, `I₂ = (e − ω)/2`. In these coordinates the product and
//! the inverse act componentwise, so every algebraic identity reduces to two
//! independent complex computations.
//!
//! The real frame `(e₁, ie₁, e₂, ie₂)` used for the components of monogenic
//! functions is built on `e₁ = I₁ + I₂` and `e₂ = i(I₁ + p I₂)`.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar};

/// Anisotropy parameter `p` of the operator `∂⁴_y + (p²+1)∂²_x∂²_y + p²∂⁴_x`.
///
/// Construction rejects `p ≤ 0`, `p = 1` and non-finite values, so every
/// downstream routine can assume a valid parameter.
#[derive(Clone, Debug, PartialEq)]
pub struct AnisoParam<T: Scalar> {
    p: T,
}

impl<T: Scalar> AnisoParam<T> {
    pub fn new(p: T) -> Result<Self> {
        let finite = p.clone() - p.clone() == T::zero();
        if !finite || p <= T::zero() || p == T::one() {
            return Err(Error::InvalidParam(format!("{p:?}")));
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> T {
        self.p.clone()
    }

    /// Mixed-derivative coefficient `p² + 1`.
    pub fn a_p(&self) -> T {
        self.p.clone() * self.p.clone() + T::one()
    }

    /// `∂⁴_x` coefficient `p²`.
    pub fn b_p(&self) -> T {
        self.p.clone() * self.p.clone()
    }

    /// Coefficient of `e₁²e₂²` in the characteristic form; equals `a_p`.
    pub fn g_p(&self) -> T {
        self.a_p()
    }

    /// Coefficient of `e₁⁴` in the characteristic form; equals `b_p`.
    pub fn h_p(&self) -> T {
        self.b_p()
    }

    /// Roots of `s⁴ + (p²+1)s² + p²`, ordered `[i, ip, −i, −ip]`.
    pub fn roots(&self) -> [Complex<T>; 4] {
        let i = Complex::new(T::zero(), T::one());
        let ip = Complex::new(T::zero(), self.p.clone());
        [i.clone(), ip.clone(), -i, -ip]
    }

    /// Scaling applied to the `U₃` boundary condition of the reduced problem.
    pub fn lambda3(&self) -> T {
        T::one() / self.p.clone()
    }
}

/// Element `c1·I₁ + c2·I₂`.
#[derive(Clone, Debug, PartialEq)]
pub struct B0Element<T: Scalar> {
    pub c1: Complex<T>,
    pub c2: Complex<T>,
}

/// Default absolute tolerance for [`B0Element::approx_eq`].
pub const DEFAULT_EQ_TOL: f64 = 1e-12;

impl<T: Scalar> B0Element<T> {
    pub fn new(c1: Complex<T>, c2: Complex<T>) -> Self {
        Self { c1, c2 }
    }

    pub fn zero() -> Self {
        Self::new(Complex::zero(), Complex::zero())
    }

    /// The unit `e = I₁ + I₂`.
    pub fn unit() -> Self {
        Self::new(Complex::one(), Complex::one())
    }

    /// `ω = I₁ − I₂`.
    pub fn omega() -> Self {
        Self::new(Complex::one(), -Complex::one())
    }

    pub fn idempotent1() -> Self {
        Self::new(Complex::one(), Complex::zero())
    }

    pub fn idempotent2() -> Self {
        Self::new(Complex::zero(), Complex::one())
    }

    /// Embeds a complex scalar as `c·e`.
    pub fn from_scalar(c: Complex<T>) -> Self {
        Self::new(c.clone(), c)
    }

    pub fn is_zero(&self) -> bool {
        self.c1.is_zero() && self.c2.is_zero()
    }

    /// Multiplication by a complex scalar.
    pub fn scale(&self, c: &Complex<T>) -> Self {
        Self::new(self.c1.clone() * c.clone(), self.c2.clone() * c.clone())
    }

    pub fn scale_real(&self, r: &T) -> Self {
        Self::new(self.c1.clone() * r.clone(), self.c2.clone() * r.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            self.c1.clone() * other.c1.clone(),
            self.c2.clone() * other.c2.clone(),
        )
    }

    /// Inverse `(1/c1)I₁ + (1/c2)I₂`; fails when either coordinate vanishes.
    pub fn inv(&self) -> Result<Self> {
        if self.c1.is_zero() || self.c2.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let one = Complex::<T>::one();
        Ok(Self::new(
            one.clone() / self.c1.clone(),
            one / self.c2.clone(),
        ))
    }

    pub fn powi(&self, n: u32) -> Self {
        let mut acc = Self::unit();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

impl<T: Real> B0Element<T> {
    /// Componentwise comparison with absolute tolerance `tol`.
    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        (self.c1 - other.c1).norm() <= tol && (self.c2 - other.c2).norm() <= tol
    }

    /// [`approx_eq`](Self::approx_eq) at [`DEFAULT_EQ_TOL`].
    pub fn approx_eq_default(&self, other: &Self) -> bool {
        self.approx_eq(other, T::lit(DEFAULT_EQ_TOL))
    }

    /// Largest coordinate modulus.
    pub fn norm_max(&self) -> T {
        self.c1.norm().max(self.c2.norm())
    }
}

impl<T: Scalar> Add for B0Element<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::new(self.c1 + rhs.c1, self.c2 + rhs.c2)
    }
}

impl<T: Scalar> Sub for B0Element<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self::new(self.c1 - rhs.c1, self.c2 - rhs.c2)
    }
}

impl<T: Scalar> Mul for &B0Element<T> {
    type Output = B0Element<T>;

    fn mul(self, rhs: Self) -> B0Element<T> {
        B0Element::mul(self, rhs)
    }
}

impl<T: Scalar> Neg for B0Element<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(-self.c1, -self.c2)
    }
}

/// A basis `(e₁, e₂)` with `e₁ = αI₁ + βI₂`, `e₂ = α·s₁·I₁ + β·s₂·I₂`, where
/// `s₁ ≠ s₂` are characteristic roots.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisPair<T: Scalar> {
    pub e1: B0Element<T>,
    pub e2: B0Element<T>,
    pub alpha: Complex<T>,
    pub beta: Complex<T>,
    pub root1: Complex<T>,
    pub root2: Complex<T>,
}

/// Builds a basis whose characteristic form vanishes.
///
/// Roots must be taken from [`AnisoParam::roots`]; membership is tested
/// exactly.
pub fn make_basis<T: Scalar>(
    param: &AnisoParam<T>,
    alpha: Complex<T>,
    beta: Complex<T>,
    root1: Complex<T>,
    root2: Complex<T>,
) -> Result<BasisPair<T>> {
    if alpha.is_zero() || beta.is_zero() {
        return Err(Error::InvalidBasis("alpha and beta must be nonzero"));
    }
    if root1 == root2 {
        return Err(Error::InvalidBasis("roots must be distinct"));
    }
    let roots = param.roots();
    if !roots.contains(&root1) || !roots.contains(&root2) {
        return Err(Error::InvalidBasis(
            "roots must solve the characteristic equation",
        ));
    }
    let e1 = B0Element::new(alpha.clone(), beta.clone());
    let e2 = B0Element::new(
        alpha.clone() * root1.clone(),
        beta.clone() * root2.clone(),
    );
    Ok(BasisPair {
        e1,
        e2,
        alpha,
        beta,
        root1,
        root2,
    })
}

/// The basis `e₁ = e`, `e₂ = i(I₁ + pI₂)` used for the real frame.
pub fn standard_basis<T: Scalar>(param: &AnisoParam<T>) -> BasisPair<T> {
    let [i, ip, _, _] = param.roots();
    make_basis(param, Complex::one(), Complex::one(), i, ip)
        .expect("standard basis satisfies make_basis preconditions")
}

/// `e₂⁴ + G_p e₁²e₂² + H_p e₁⁴`, evaluated as `(e₂² + e₁²)(e₂² + p²e₁²)` so
/// that cancellation happens before the quartic scale is reached.
pub fn char_form<T: Scalar>(param: &AnisoParam<T>, basis: &BasisPair<T>) -> B0Element<T> {
    let e1_sq = basis.e1.mul(&basis.e1);
    let e2_sq = basis.e2.mul(&basis.e2);
    let laplace = e2_sq.clone() + e1_sq.clone();
    let stretched = e2_sq + e1_sq.scale_real(&param.b_p());
    laplace.mul(&stretched)
}

/// Coordinates `(U1, U2, U3, U4)` with `a = U1·e₁ + U2·ie₁ + U3·e₂ + U4·ie₂`.
pub fn to_e_frame<T: Scalar>(a: &B0Element<T>, param: &AnisoParam<T>) -> [T; 4] {
    // c1 = (U1 − U4) + i(U2 + U3), c2 = (U1 − pU4) + i(U2 + pU3)
    let pm1 = param.p() - T::one();
    let u4 = (a.c1.re.clone() - a.c2.re.clone()) / pm1.clone();
    let u1 = a.c1.re.clone() + u4.clone();
    let u3 = (a.c2.im.clone() - a.c1.im.clone()) / pm1;
    let u2 = a.c1.im.clone() - u3.clone();
    [u1, u2, u3, u4]
}

pub fn from_e_frame<T: Scalar>(u: &[T; 4], param: &AnisoParam<T>) -> B0Element<T> {
    let [u1, u2, u3, u4] = u.clone();
    let p = param.p();
    B0Element::new(
        Complex::new(u1.clone() - u4.clone(), u2.clone() + u3.clone()),
        Complex::new(u1 - p.clone() * u4, u2 + p * u3),
    )
}

/// `ζ = x e₁ + y e₂ = (x+iy) I₁ + (x+ipy) I₂`.
pub fn embed_point<T: Scalar>(x: T, y: T, param: &AnisoParam<T>) -> B0Element<T> {
    B0Element::new(
        Complex::new(x.clone(), y.clone()),
        Complex::new(x, param.p() * y),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    type Q = Ratio<i64>;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn q(n: i64) -> Q {
        Q::from_integer(n)
    }

    fn cq(re: i64, im: i64) -> Complex<Q> {
        Complex::new(q(re), q(im))
    }

    #[test]
    fn param_validation() {
        assert!(AnisoParam::new(2.0).is_ok());
        assert!(AnisoParam::new(0.5).is_ok());
        for bad in [1.0, 0.0, -1.0, f64::NAN, f64::INFINITY] {
            assert!(
                matches!(AnisoParam::new(bad), Err(Error::InvalidParam(_))),
                "{bad}"
            );
        }
        assert!(AnisoParam::new(q(1)).is_err());
        assert!(AnisoParam::new(Q::new(1, 2)).is_ok());
    }

    #[test]
    fn derived_constants() {
        let param = AnisoParam::new(3.0).unwrap();
        assert_eq!(param.a_p(), 10.0);
        assert_eq!(param.b_p(), 9.0);
        assert_eq!(param.g_p(), 10.0);
        assert_eq!(param.h_p(), 9.0);
        assert_eq!(param.roots(), [c(0., 1.), c(0., 3.), c(0., -1.), c(0., -3.)]);
    }

    #[test]
    fn componentwise_product() {
        let a = B0Element::new(cq(2, 0), cq(3, 0));
        let b = B0Element::new(cq(4, 0), cq(5, 0));
        assert_eq!(&a * &b, B0Element::new(cq(8, 0), cq(15, 0)));
        assert!(B0Element::<Q>::idempotent1()
            .mul(&B0Element::idempotent2())
            .is_zero());
        let a = B0Element::new(cq(7, -2), cq(-1, 4));
        assert_eq!(B0Element::unit().mul(&a), a);
    }

    #[test]
    fn omega_squares_to_unit() {
        let w = B0Element::<Q>::omega();
        assert_eq!(w.mul(&w), B0Element::unit());
        let i1 = B0Element::<Q>::idempotent1();
        let i2 = B0Element::<Q>::idempotent2();
        assert_eq!(i1.clone() + i2.clone(), B0Element::unit());
        assert_eq!(i1 - i2, B0Element::omega());
    }

    #[test]
    fn inverse() {
        assert_eq!(B0Element::<Q>::unit().inv().unwrap(), B0Element::unit());
        let a = B0Element::new(cq(2, 0), cq(4, 0));
        assert_eq!(
            a.inv().unwrap(),
            B0Element::new(Complex::new(Q::new(1, 2), q(0)), Complex::new(Q::new(1, 4), q(0)))
        );
        assert_eq!(B0Element::<Q>::idempotent1().inv(), Err(Error::ZeroDivisor));
        assert_eq!(B0Element::<f64>::idempotent2().inv(), Err(Error::ZeroDivisor));
    }

    #[test]
    fn canonical_basis() {
        let param = AnisoParam::new(2.0).unwrap();
        let [i, ip, _, _] = param.roots();
        let basis = make_basis(&param, c(1., 0.), c(1., 0.), i, ip).unwrap();
        assert_eq!(basis.e1, B0Element::unit());
        assert_eq!(basis.e2, B0Element::new(c(0., 1.), c(0., 2.)));
        assert_eq!(standard_basis(&param), basis);
    }

    #[test]
    fn degenerate_bases_rejected() {
        let param = AnisoParam::new(2.0).unwrap();
        let i = c(0., 1.);
        let one = c(1., 0.);
        assert!(matches!(
            make_basis(&param, one, one, i, i),
            Err(Error::InvalidBasis(_))
        ));
        assert!(make_basis(&param, c(0., 0.), one, i, -i).is_err());
        assert!(make_basis(&param, one, c(0., 0.), i, -i).is_err());
        assert!(make_basis(&param, one, one, i, c(0., 3.)).is_err());
    }

    #[test]
    fn general_basis_exact() {
        let param = AnisoParam::new(q(3)).unwrap();
        let basis = make_basis(&param, cq(2, 0), cq(-1, 0), cq(0, -1), cq(0, 3)).unwrap();
        assert_eq!(basis.e1, B0Element::new(cq(2, 0), cq(-1, 0)));
        assert_eq!(basis.e2, B0Element::new(cq(0, -2), cq(0, -3)));
        assert!(char_form(&param, &basis).is_zero());
    }

    #[test]
    fn char_form_of_non_bases() {
        let param = AnisoParam::new(q(2)).unwrap();
        let mut pair = standard_basis(&param);
        pair.e2 = B0Element::unit();
        let ten_e = B0Element::unit().scale_real(&q(10));
        assert_eq!(char_form(&param, &pair), ten_e);
        pair.e2 = B0Element::omega();
        assert_eq!(char_form(&param, &pair), ten_e);
    }

    #[test]
    fn frame_examples() {
        let p2 = AnisoParam::new(2.0).unwrap();
        assert_eq!(to_e_frame(&B0Element::idempotent1(), &p2), [2., 0., 0., 1.]);
        assert_eq!(to_e_frame(&B0Element::unit(), &p2), [1., 0., 0., 0.]);
        let w = B0Element::idempotent1() - B0Element::idempotent2();
        assert_eq!(to_e_frame(&w, &p2), [3., 0., 0., 2.]);
        assert_eq!(from_e_frame(&[3., 0., 0., 2.], &p2), B0Element::omega());

        let p3 = AnisoParam::new(3.0).unwrap();
        assert_eq!(from_e_frame(&[1., 0., 0., 0.], &p3), B0Element::unit());
        assert_eq!(
            from_e_frame(&[0., 0., 1., 0.], &p3),
            B0Element::new(c(0., 1.), c(0., 3.))
        );
    }

    #[test]
    fn idempotents_in_standard_frame() {
        // I₁ = −(p e₁ + i e₂)/(1 − p), I₂ = (e₁ + i e₂)/(1 − p)
        let p = Q::new(5, 2);
        let param = AnisoParam::new(p).unwrap();
        let basis = standard_basis(&param);
        let ie2 = basis.e2.scale(&cq(0, 1));
        let denom = q(1) - p;
        let i1 = (basis.e1.scale_real(&p) + ie2.clone()).scale_real(&(-q(1) / denom));
        let i2 = (basis.e1.clone() + ie2).scale_real(&(q(1) / denom));
        assert_eq!(i1, B0Element::idempotent1());
        assert_eq!(i2, B0Element::idempotent2());
    }

    #[test]
    fn embedding() {
        let p3 = AnisoParam::new(3.0).unwrap();
        assert!(embed_point(0., 0., &p3).is_zero());
        assert_eq!(embed_point(1., 2., &p3), B0Element::new(c(1., 2.), c(1., 6.)));
        let param = AnisoParam::new(Q::new(7, 3)).unwrap();
        let zeta = embed_point(Q::new(-3, 4), Q::new(5, 9), &param);
        assert_eq!(to_e_frame(&zeta, &param), [Q::new(-3, 4), q(0), Q::new(5, 9), q(0)]);
    }

    #[test]
    fn approx_eq_uses_tolerance() {
        let a = B0Element::new(c(1., 0.), c(0., 1.));
        let b = B0Element::new(c(1. + 1e-13, 0.), c(0., 1.));
        assert!(a.approx_eq_default(&b));
        assert!(!a.approx_eq(&b, 1e-14));
    }
}
