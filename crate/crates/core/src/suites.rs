//! Self-check suites run by the `verify` command. Each suite draws from a
//! fixed-seed generator, so reports are reproducible.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{char_form, make_basis, standard_basis, AnisoParam, B0Element};
use crate::error::Result;
use crate::geometry::Domain;
use crate::monogenic::{kernel_element, CPoly, KernelParams, MonogenicFunction};
use crate::pde_ops::{apply_factor, apply_operator, BiPoly, Factor};
use crate::solver::{verify_manufactured, SolverConfig};

const SEED: u64 = 0x5eed_0b0e;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DomainChoice {
    Disk,
    Ellipse,
    Rectangle,
}

impl DomainChoice {
    /// Unit disk, ellipse with semiaxes (2, 1), or `[−1, 1] × [−0.75, 0.75]`.
    pub fn build(self) -> Domain<f64> {
        match self {
            Self::Disk => Domain::disk([0.0, 0.0], 1.0),
            Self::Ellipse => Domain::ellipse([0.0, 0.0], [2.0, 1.0]),
            Self::Rectangle => Domain::rectangle([-1.0, -0.75], [2.0, 1.5]),
        }
        .expect("fixed domains are valid")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl SuiteReport {
    fn new(name: &'static str, passed: bool, detail: String) -> Self {
        Self { name, passed, detail }
    }
}

pub fn random_element<R: Rng>(rng: &mut R) -> B0Element<f64> {
    let mut c = || Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    B0Element::new(c(), c())
}

/// Random complex polynomial of exactly the given degree, coefficients in
/// the unit square.
pub fn random_cpoly<R: Rng>(rng: &mut R, degree: usize) -> CPoly<f64> {
    let coeffs = (0..=degree)
        .map(|k| {
            let mut c = Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            if k == degree && c.norm() < 0.1 {
                c = Complex::new(1.0, 0.0);
            }
            c
        })
        .collect();
    CPoly::new(coeffs)
}

pub fn random_rational<R: Rng>(rng: &mut R) -> BigRational {
    BigRational::new(BigInt::from(rng.gen_range(-9i64..=9)), BigInt::from(rng.gen_range(1i64..=9)))
}

pub fn random_rational_cpoly<R: Rng>(rng: &mut R, degree: usize) -> CPoly<BigRational> {
    CPoly::new(
        (0..=degree)
            .map(|_| Complex::new(random_rational(rng), random_rational(rng)))
            .collect(),
    )
}

/// Dense random polynomial of total degree ≤ `degree`.
pub fn random_rational_bipoly<R: Rng>(rng: &mut R, degree: u32) -> BiPoly<BigRational> {
    let mut terms = Vec::new();
    for i in 0..=degree {
        for j in 0..=degree - i {
            terms.push(((i, j), random_rational(rng)));
        }
    }
    BiPoly::from_terms(terms)
}

/// Exact rational approximation of `p` with denominator up to 1000.
pub fn rational_param(p: f64) -> Result<AnisoParam<BigRational>> {
    let num = (p * 1000.0).round() as i64;
    AnisoParam::new(BigRational::new(BigInt::from(num), BigInt::from(1000)))
}

fn rel_close(a: &B0Element<f64>, b: &B0Element<f64>, tol: f64) -> bool {
    let scale = a.norm_max().max(b.norm_max()).max(1.0);
    a.approx_eq(b, tol * scale)
}

pub fn algebra_laws(param: &AnisoParam<f64>) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let tol = 1e-13;
    let mut failures = 0;
    for _ in 0..1000 {
        let (a, b, c) = (random_element(&mut rng), random_element(&mut rng), random_element(&mut rng));
        let ok = rel_close(&a.mul(&b), &b.mul(&a), tol)
            && rel_close(&a.mul(&b).mul(&c), &a.mul(&b.mul(&c)), tol)
            && rel_close(&a.mul(&(b.clone() + c.clone())), &(a.mul(&b) + a.mul(&c)), tol)
            && a.inv().map_or(true, |ai| rel_close(&a.mul(&ai), &B0Element::unit(), tol));
        failures += usize::from(!ok);
    }
    let basis = standard_basis(param);
    let p = param.p();
    let e2_sq = basis.e1.scale_real(&p) + basis.e2.scale(&Complex::new(0.0, p + 1.0));
    let table_ok = basis.e1.mul(&basis.e2).approx_eq(&basis.e2, 1e-14)
        && basis.e2.mul(&basis.e2).approx_eq(&e2_sq, 1e-14);
    SuiteReport::new(
        "algebra laws",
        failures == 0 && table_ok,
        format!("{failures} of 1000 random triples failed; multiplication table ok: {table_ok}"),
    )
}

pub fn characteristic_bases(param: &AnisoParam<f64>) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let roots = param.roots();
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let alpha = Complex::new(rng.gen_range(0.1..1.0), rng.gen_range(-1.0..1.0));
        let beta = Complex::new(rng.gen_range(-1.0..-0.1), rng.gen_range(-1.0..1.0));
        for (i, r1) in roots.iter().enumerate() {
            for (j, r2) in roots.iter().enumerate() {
                if i == j {
                    continue;
                }
                let basis = make_basis(param, alpha, beta, *r1, *r2).expect("valid basis");
                worst = worst.max(char_form(param, &basis).norm_max());
            }
        }
    }
    SuiteReport::new(
        "characteristic bases",
        worst <= 1e-12,
        format!("max |char_form| = {worst:.3e} over 1200 bases"),
    )
}

pub fn factorization(param: &AnisoParam<f64>, degree: u32) -> Result<SuiteReport> {
    let qparam = rational_param(param.p())?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    let mut failures = 0;
    for _ in 0..50 {
        let u = random_rational_bipoly(&mut rng, degree);
        let full = apply_operator(&u, &qparam);
        let lap_first = apply_factor(&apply_factor(&u, &qparam, Factor::Laplace), &qparam, Factor::L1p);
        let l1p_first = apply_factor(&apply_factor(&u, &qparam, Factor::L1p), &qparam, Factor::Laplace);
        failures += usize::from(full != lap_first || full != l1p_first);
    }
    Ok(SuiteReport::new(
        "operator factorization",
        failures == 0,
        format!("{failures} of 50 exact comparisons differ"),
    ))
}

pub fn goursat_solves_pde(param: &AnisoParam<f64>, degree: usize) -> Result<SuiteReport> {
    let qparam = rational_param(param.p())?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let mut failures = 0;
    for _ in 0..20 {
        let phi = MonogenicFunction::new(
            random_rational_cpoly(&mut rng, degree),
            random_rational_cpoly(&mut rng, degree),
            qparam.clone(),
        );
        for u in phi.component_polys() {
            failures += usize::from(!apply_operator(&u, &qparam).is_zero());
        }
    }
    Ok(SuiteReport::new(
        "components solve the equation",
        failures == 0,
        format!("{failures} of 80 components not annihilated"),
    ))
}

/// Sum of `|residual|` over the four equations and the given points.
pub fn cr_error(phi: &MonogenicFunction<f64>, points: &[[f64; 2]], h: f64) -> f64 {
    points
        .iter()
        .map(|&[x, y]| phi.cr_residual(x, y, h).iter().map(|r| r.abs()).sum::<f64>())
        .sum()
}

pub fn cauchy_riemann(param: &AnisoParam<f64>, degree: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 4);
    let hs = [1e-2, 5e-3, 2.5e-3];
    let mut failures = 0;
    let mut worst_ratio: f64 = 0.25;
    for _ in 0..20 {
        let phi = MonogenicFunction::new(random_cpoly(&mut rng, degree), random_cpoly(&mut rng, degree), param.clone());
        let points: Vec<[f64; 2]> = (0..5)
            .map(|_| [rng.gen_range(-0.7..0.7), rng.gen_range(-0.7..0.7)])
            .collect();
        let errs: Vec<f64> = hs.iter().map(|&h| cr_error(&phi, &points, h)).collect();
        if degree < 3 {
            // no third derivatives: central differences are exact up to rounding
            failures += usize::from(errs.iter().any(|&e| e > 1e-9));
            continue;
        }
        for w in errs.windows(2) {
            let ratio = w[1] / w[0];
            if (ratio - 0.25).abs() > (worst_ratio - 0.25).abs() {
                worst_ratio = ratio;
            }
            failures += usize::from(!(0.2..=0.3).contains(&ratio));
        }
    }
    SuiteReport::new(
        "Cauchy-Riemann residuals",
        failures == 0,
        format!("{failures} failed checks; worst h-halving ratio {worst_ratio:.4}"),
    )
}

pub fn kernel_invariance(param: &AnisoParam<f64>, degree: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 5);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let phi = MonogenicFunction::new(random_cpoly(&mut rng, degree), random_cpoly(&mut rng, degree), param.clone());
        let mut r = || rng.gen_range(-5.0..5.0);
        let kp = KernelParams { a: r(), b: r(), c: r(), d: r() };
        let shifted = phi.add(&kernel_element(&kp, param)).expect("same parameter");
        for _ in 0..10 {
            let (x, y) = (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            worst = worst.max((shifted.components(&x, &y)[0] - phi.components(&x, &y)[0]).abs());
        }
    }
    SuiteReport::new(
        "first component invariant under kernel family",
        worst <= 1e-12,
        format!("max change of U1 = {worst:.3e}"),
    )
}

pub fn manufactured(param: &AnisoParam<f64>, degree: usize, domain: &Domain<f64>) -> SuiteReport {
    let w = |n: usize| CPoly::monomial(n, Complex::new(1.0, 0.0));
    let cases = [(w(2), CPoly::zero(), 2usize), (CPoly::zero(), w(3), 3)];
    let mut lines = Vec::new();
    let mut passed = true;
    for (g1, g2, data_degree) in cases {
        let n = degree.max(data_degree);
        let cfg = SolverConfig::new(n, param);
        match verify_manufactured(&g1, &g2, param, domain, &cfg) {
            Ok(rep) => {
                let ok = rep.boundary_residual.max <= 1e-9 && rep.interior_max_error <= 1e-8;
                passed &= ok;
                lines.push(format!(
                    "deg {data_degree} data at N={n}: boundary {:.2e}, interior {:.2e}",
                    rep.boundary_residual.max, rep.interior_max_error
                ));
            }
            Err(e) => {
                passed = false;
                lines.push(format!("deg {data_degree} data: {e}"));
            }
        }
    }
    SuiteReport::new("manufactured solutions", passed, lines.join("; "))
}

/// All suites at the given parameter, trial degree and domain.
pub fn run_all(param: &AnisoParam<f64>, degree: usize, domain: DomainChoice) -> Result<Vec<SuiteReport>> {
    let bipoly_degree = u32::try_from(degree.clamp(4, 8)).unwrap_or(8);
    Ok(vec![
        algebra_laws(param),
        characteristic_bases(param),
        factorization(param, bipoly_degree)?,
        goursat_solves_pde(param, degree)?,
        cauchy_riemann(param, degree),
        kernel_invariance(param, degree),
        manufactured(param, degree, &domain.build()),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_param_rounds_to_thousandths() {
        let q = rational_param(0.5).unwrap();
        assert_eq!(q.p(), BigRational::new(BigInt::from(1), BigInt::from(2)));
        assert!(rational_param(1.0).is_err());
    }

    #[test]
    fn random_cpoly_has_requested_degree() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for d in 0..6 {
            assert_eq!(random_cpoly(&mut rng, d).degree(), Some(d));
        }
        assert!(random_rational_bipoly(&mut rng, 3).total_degree() <= Some(3));
    }
}
