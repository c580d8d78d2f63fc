//! Monogenic functions `Φ(ζ) = F₁(z) I₁ + F₂(z_p) I₂` with polynomial
//! Goursat pairs, where `z = x + iy` and `z_p = x + ipy`.
//!
//! Every component `U_k` of such a function solves `l̃_p U_k = 0`; the first
//! component carries the stress function.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::algebra::{to_e_frame, AnisoParam, B0Element};
use crate::error::{Error, Result};
use crate::pde_ops::BiPoly;
use crate::scalar::{Real, Scalar};

/// Complex polynomial `F(w) = Σ aₙ ((w − center)/scale)ⁿ`.
#[derive(Clone, Debug, PartialEq)]
pub struct CPoly<T: Scalar> {
    coeffs: Vec<Complex<T>>,
    center: Complex<T>,
    scale: T,
}

impl<T: Scalar> CPoly<T> {
    /// Plain monomial basis `Σ aₙ wⁿ`.
    pub fn new(coeffs: Vec<Complex<T>>) -> Self {
        Self::with_basis(coeffs, Complex::zero(), T::one())
    }

    /// Shifted and scaled monomial basis. `scale` must be nonzero.
    pub fn with_basis(coeffs: Vec<Complex<T>>, center: Complex<T>, scale: T) -> Self {
        assert!(!scale.is_zero(), "CPoly scale must be nonzero");
        let mut poly = Self {
            coeffs,
            center,
            scale,
        };
        poly.trim();
        poly
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    pub fn constant(c: Complex<T>) -> Self {
        Self::new(vec![c])
    }

    /// `c · wⁿ`.
    pub fn monomial(n: usize, c: Complex<T>) -> Self {
        let mut coeffs = vec![Complex::zero(); n + 1];
        coeffs[n] = c;
        Self::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Complex<T>] {
        &self.coeffs
    }

    pub fn center(&self) -> &Complex<T> {
        &self.center
    }

    pub fn scale(&self) -> &T {
        &self.scale
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn same_basis(&self, other: &Self) -> bool {
        self.center == other.center && self.scale == other.scale
    }

    pub fn eval(&self, w: &Complex<T>) -> Complex<T> {
        let t = (w.clone() - self.center.clone()) / self.scale.clone();
        self.coeffs
            .iter()
            .rev()
            .fold(Complex::zero(), |acc, a| acc * t.clone() + a.clone())
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, a)| a.clone() * T::from_int(n as i64) / self.scale.clone())
            .collect();
        Self::with_basis(coeffs, self.center.clone(), self.scale.clone())
    }

    /// Coefficients in the plain basis `Σ bₖ wᵏ`.
    pub fn to_monomial(&self) -> Vec<Complex<T>> {
        let n = self.coeffs.len();
        let mut out = vec![Complex::<T>::zero(); n];
        let minus_c = -self.center.clone();
        // (w − c)ⁿ / sⁿ expanded by the binomial recurrence on rows
        let mut row: Vec<Complex<T>> = vec![Complex::one()];
        for (deg, a) in self.coeffs.iter().enumerate() {
            if deg > 0 {
                let mut next = vec![Complex::<T>::zero(); deg + 1];
                for (k, r) in row.iter().enumerate() {
                    let r = r.clone() / self.scale.clone();
                    next[k + 1] = next[k + 1].clone() + r.clone();
                    next[k] = next[k].clone() + r * minus_c.clone();
                }
                row = next;
            }
            for (k, r) in row.iter().enumerate() {
                out[k] = out[k].clone() + a.clone() * r.clone();
            }
        }
        out
    }

    /// Same polynomial re-expressed in the plain monomial basis.
    pub fn into_monomial(self) -> Self {
        if self.center.is_zero() && self.scale.is_one() {
            self
        } else {
            Self::new(self.to_monomial())
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if !self.same_basis(other) {
            return Self::new(self.to_monomial()).add(&Self::new(other.to_monomial()));
        }
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| {
                let a = self.coeffs.get(k).cloned().unwrap_or_else(Complex::zero);
                let b = other.coeffs.get(k).cloned().unwrap_or_else(Complex::zero);
                a + b
            })
            .collect();
        Self::with_basis(coeffs, self.center.clone(), self.scale.clone())
    }

    pub fn scale_by(&self, c: &Complex<T>) -> Self {
        Self::with_basis(
            self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
            self.center.clone(),
            self.scale.clone(),
        )
    }

    /// Real and imaginary parts of `F(x + i·k·y)` as polynomials in `(x, y)`.
    pub fn expand(&self, k: &T) -> (BiPoly<T>, BiPoly<T>) {
        // t = (x − c.re)/s + i (k y − c.im)/s
        let inv_s = T::one() / self.scale.clone();
        let t_re = &BiPoly::x().scale(&inv_s) - &BiPoly::constant(self.center.re.clone() * inv_s.clone());
        let t_im = &BiPoly::y().scale(&(k.clone() * inv_s.clone()))
            - &BiPoly::constant(self.center.im.clone() * inv_s);
        let mut pow_re = BiPoly::constant(T::one());
        let mut pow_im = BiPoly::zero();
        let mut re = BiPoly::zero();
        let mut im = BiPoly::zero();
        for (n, a) in self.coeffs.iter().enumerate() {
            if n > 0 {
                let next_re = &(&pow_re * &t_re) - &(&pow_im * &t_im);
                let next_im = &(&pow_re * &t_im) + &(&pow_im * &t_re);
                pow_re = next_re;
                pow_im = next_im;
            }
            re = &(&re + &pow_re.scale(&a.re)) - &pow_im.scale(&a.im);
            im = &(&im + &pow_im.scale(&a.re)) + &pow_re.scale(&a.im);
        }
        (re, im)
    }
}

/// `Φ = F₁(z) I₁ + F₂(z_p) I₂`.
#[derive(Clone, Debug, PartialEq)]
pub struct MonogenicFunction<T: Scalar> {
    pub f1: CPoly<T>,
    pub f2: CPoly<T>,
    pub param: AnisoParam<T>,
}

impl<T: Scalar> MonogenicFunction<T> {
    pub fn new(f1: CPoly<T>, f2: CPoly<T>, param: AnisoParam<T>) -> Self {
        Self { f1, f2, param }
    }

    pub fn zero(param: AnisoParam<T>) -> Self {
        Self::new(CPoly::zero(), CPoly::zero(), param)
    }

    /// The function `Φ_u` with `U₁[Φ_u] = Re(g₁(z) + g₂(z_p))`.
    ///
    /// Rescales the pair by `(p−1)/p` and `1−p`, the idempotent coordinates
    /// of a function whose `e₁` coefficient is `g₁ + g₂`.
    pub fn from_stress_pair(g1: &CPoly<T>, g2: &CPoly<T>, param: AnisoParam<T>) -> Self {
        let p = param.p();
        let s1 = Complex::from((p.clone() - T::one()) / p.clone());
        let s2 = Complex::from(T::one() - p);
        Self::new(g1.scale_by(&s1), g2.scale_by(&s2), param)
    }

    pub fn evaluate(&self, x: &T, y: &T) -> B0Element<T> {
        let z = Complex::new(x.clone(), y.clone());
        let zp = Complex::new(x.clone(), self.param.p() * y.clone());
        B0Element::new(self.f1.eval(&z), self.f2.eval(&zp))
    }

    /// `(U₁, U₂, U₃, U₄)` at `(x, y)` in the frame `(e₁, ie₁, e₂, ie₂)`.
    pub fn components(&self, x: &T, y: &T) -> [T; 4] {
        to_e_frame(&self.evaluate(x, y), &self.param)
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.f1.derivative(), self.f2.derivative(), self.param.clone())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.param != other.param {
            return Err(Error::ParamMismatch);
        }
        Ok(Self::new(
            self.f1.add(&other.f1),
            self.f2.add(&other.f2),
            self.param.clone(),
        ))
    }

    pub fn scale(&self, lambda: &T) -> Self {
        let c = Complex::from(lambda.clone());
        Self::new(self.f1.scale_by(&c), self.f2.scale_by(&c), self.param.clone())
    }

    /// The four components as polynomials in `(x, y)`.
    pub fn component_polys(&self) -> [BiPoly<T>; 4] {
        let p = self.param.p();
        let (re1, im1) = self.f1.expand(&T::one());
        let (re2, im2) = self.f2.expand(&p);
        let inv_pm1 = T::one() / (p.clone() - T::one());
        let u4 = (&re1 - &re2).scale(&inv_pm1);
        let u1 = &re1 + &u4;
        let u3 = (&im2 - &im1).scale(&inv_pm1);
        let u2 = &im1 - &u3;
        [u1, u2, u3, u4]
    }
}

impl<T: Real> MonogenicFunction<T> {
    /// Central-difference residuals of the four Cauchy–Riemann-type
    /// equations relating the components:
    ///
    /// ```text
    /// U₁_y − p U₃_x
    /// U₂_y − p U₄_x
    /// U₃_y − U₁_x + (p+1) U₄_x
    /// U₄_y − U₂_x − (p+1) U₃_x
    /// ```
    pub fn cr_residual(&self, x: T, y: T, h: T) -> [T; 4] {
        cr_residual_of(|x, y| self.components(&x, &y), self.param.p(), x, y, h)
    }
}

/// [`MonogenicFunction::cr_residual`] for an arbitrary component field.
pub fn cr_residual_of<T: Real, F: Fn(T, T) -> [T; 4]>(field: F, p: T, x: T, y: T, h: T) -> [T; 4] {
    let two_h = h + h;
    let xp = field(x + h, y);
    let xm = field(x - h, y);
    let yp = field(x, y + h);
    let ym = field(x, y - h);
    let dx: [T; 4] = std::array::from_fn(|k| (xp[k] - xm[k]) / two_h);
    let dy: [T; 4] = std::array::from_fn(|k| (yp[k] - ym[k]) / two_h);
    let p1 = p + T::one();
    [
        dy[0] - p * dx[2],
        dy[1] - p * dx[3],
        dy[2] - dx[0] + p1 * dx[3],
        dy[3] - dx[1] - p1 * dx[2],
    ]
}

/// Real parameters of the four-parameter family with vanishing first
/// component:
///
/// ```text
/// Φ₁,₀ = a·i(y e₁ + (z_p/p + iy/p) e₂) + b·ie₁ + c·e₂ + d·ie₂
/// ```
#[derive(Clone, Debug, PartialEq)]
pub struct KernelParams<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

/// Goursat pair of `Φ₁,₀`:
/// `F₁(w) = −(a/p) w + (−d + i(b + c))`, `F₂(w) = −a w + (−pd + i(b + pc))`.
pub fn kernel_element<T: Scalar>(kp: &KernelParams<T>, param: &AnisoParam<T>) -> MonogenicFunction<T> {
    let p = param.p();
    let KernelParams { a, b, c, d } = kp.clone();
    let f1 = CPoly::new(vec![
        Complex::new(-d.clone(), b.clone() + c.clone()),
        Complex::from(-a.clone() / p.clone()),
    ]);
    let f2 = CPoly::new(vec![
        Complex::new(-(p.clone() * d), b + p * c),
        Complex::from(-a),
    ]);
    MonogenicFunction::new(f1, f2, param.clone())
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

    #[test]
    fn evaluate_identity_pairs() {
        let param = AnisoParam::new(2.5).unwrap();
        let w = CPoly::monomial(1, c(1., 0.));
        let phi = MonogenicFunction::new(w.clone(), CPoly::zero(), param.clone());
        assert_eq!(phi.evaluate(&0.3, &-0.7), B0Element::new(c(0.3, -0.7), c(0., 0.)));
        let one = MonogenicFunction::new(CPoly::constant(c(1., 0.)), CPoly::constant(c(1., 0.)), param.clone());
        assert_eq!(one.evaluate(&4.0, &2.0), B0Element::unit());
        assert_eq!(one.components(&4.0, &2.0), [1., 0., 0., 0.]);
    }

    #[test]
    fn components_by_hand() {
        // (1+i) I₁ = (1+i)(2e₁ + ie₂) at p = 2
        let param = AnisoParam::new(q(2)).unwrap();
        let phi = MonogenicFunction::new(
            CPoly::monomial(1, Complex::new(q(1), q(0))),
            CPoly::zero(),
            param,
        );
        assert_eq!(phi.components(&q(1), &q(1)), [q(2), q(2), q(-1), q(1)]);
    }

    #[test]
    fn derivative_of_pairs() {
        let param = AnisoParam::new(2.0).unwrap();
        let phi = MonogenicFunction::new(CPoly::monomial(2, c(1., 0.)), CPoly::zero(), param.clone());
        let d = phi.derivative();
        assert_eq!(d.f1, CPoly::monomial(1, c(2., 0.)));
        assert!(d.f2.is_zero());
        let k = MonogenicFunction::new(CPoly::constant(c(3., 1.)), CPoly::constant(c(0., 2.)), param);
        assert!(k.derivative().f1.is_zero() && k.derivative().f2.is_zero());
    }

    #[test]
    fn constant_function_has_zero_cr_residual() {
        let param = AnisoParam::new(3.0).unwrap();
        let k = MonogenicFunction::new(CPoly::constant(c(3., 1.)), CPoly::constant(c(-2., 0.5)), param);
        assert_eq!(k.cr_residual(0.2, 0.4, 1e-3), [0.; 4]);
    }

    #[test]
    fn kernel_element_examples() {
        let param = AnisoParam::new(2.0).unwrap();
        let zero = kernel_element(&KernelParams { a: 0., b: 0., c: 0., d: 0. }, &param);
        assert!(zero.f1.is_zero() && zero.f2.is_zero());
        let ie1 = kernel_element(&KernelParams { a: 0., b: 1., c: 0., d: 0. }, &param);
        for (x, y) in [(0., 0.), (0.4, -1.2), (3., 2.)] {
            assert_eq!(ie1.components(&x, &y), [0., 1., 0., 0.]);
        }
    }

    #[test]
    fn kernel_component_polys_exact() {
        // U₁ = 0, U₂ = a y, U₃ = c − a(p+1)y/p, U₄ = d + a x/p
        let p = Q::new(7, 2);
        let param = AnisoParam::new(p).unwrap();
        let (a, b, cc, d) = (q(3), Q::new(-1, 5), q(2), Q::new(4, 3));
        let phi = kernel_element(&KernelParams { a, b, c: cc, d }, &param);
        let [u1, u2, u3, u4] = phi.component_polys();
        assert!(u1.is_zero());
        assert_eq!(u2, BiPoly::from_terms([((0, 0), b), ((0, 1), a)]));
        assert_eq!(u3, BiPoly::from_terms([((0, 0), cc), ((0, 1), -a * (p + q(1)) / p)]));
        assert_eq!(u4, BiPoly::from_terms([((0, 0), d), ((1, 0), a / p)]));
    }

    #[test]
    fn add_and_scale() {
        let p2 = AnisoParam::new(2.0).unwrap();
        let p3 = AnisoParam::new(3.0).unwrap();
        let phi = MonogenicFunction::new(CPoly::monomial(3, c(1., -1.)), CPoly::monomial(1, c(0., 2.)), p2.clone());
        assert_eq!(phi.add(&MonogenicFunction::zero(p2)).unwrap(), phi);
        assert_eq!(phi.add(&MonogenicFunction::zero(p3)), Err(Error::ParamMismatch));
        let doubled = phi.scale(&2.0);
        let (u, v) = (phi.components(&0.3, &0.8), doubled.components(&0.3, &0.8));
        for k in 0..4 {
            assert_eq!(v[k], 2.0 * u[k]);
        }
    }

    #[test]
    fn shifted_basis_round_trip() {
        let center = Complex::new(Q::new(1, 2), Q::new(-1, 3));
        let poly = CPoly::with_basis(
            vec![Complex::new(q(1), q(2)), Complex::new(q(-3), q(0)), Complex::new(q(0), q(5))],
            center,
            Q::new(3, 2),
        );
        let plain = CPoly::new(poly.to_monomial());
        for w in [Complex::new(q(0), q(0)), Complex::new(Q::new(2, 7), q(-3))] {
            assert_eq!(poly.eval(&w), plain.eval(&w));
        }
        assert_eq!(poly.derivative().eval(&center), Complex::new(q(-2), q(0)));
    }

    #[test]
    fn expansion_matches_evaluation() {
        let p = Q::new(5, 3);
        let poly = CPoly::with_basis(
            vec![Complex::new(q(2), q(-1)), Complex::new(q(1), q(1)), Complex::new(q(0), q(3)), Complex::new(q(-1), q(0))],
            Complex::new(q(1), q(1)),
            q(2),
        );
        let (re, im) = poly.expand(&p);
        let (x, y) = (Q::new(3, 4), Q::new(-2, 5));
        let val = poly.eval(&Complex::new(x, p * y));
        assert_eq!(re.eval(&x, &y), val.re);
        assert_eq!(im.eval(&x, &y), val.im);
    }
}
