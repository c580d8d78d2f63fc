//! Boundary value problem for the stress function: given the boundary traces
//! `u₁ = ∂u/∂x` and `u₃ = ∂u/∂y`, find a monogenic `Φ` with
//! `U₁[Φ] = u₁` and `U₃[Φ] = u₃/p` on `∂D`, then recover
//!
//! ```text
//! u(x, y) = ∫ U₁[Φ] dx + p U₃[Φ] dy + const
//! ```
//!
//! along a path from the domain's base point.
//!
//! The trial space is `F_k(w) = Σ aₙ ((w − w_c)/R)ⁿ` in each of the `z` and
//! `z_p` planes. Components `U₂`, `U₄` are unconstrained, so the collocation
//! matrix always has a null space (spanned by `ie₁`, `ie₂` and `iζ`); the
//! minimum-norm least-squares solution fixes that gauge.

use std::sync::Arc;

use nalgebra::{DMatrix, DVector, RealField, SVD};
use num_complex::Complex;
use num_traits::{Float, One, Zero};

use crate::algebra::{to_e_frame, AnisoParam, B0Element};
use crate::error::{Error, Result};
use crate::geometry::{path_integrate, BoundaryNode, Domain, PathSpec};
use crate::monogenic::{CPoly, MonogenicFunction};
use crate::scalar::Real;

/// Scalars usable by the least-squares solver.
pub trait SolverScalar: Real + RealField {}

impl<T: Real + RealField> SolverScalar for T {}

type BoundaryFn<T> = Arc<dyn Fn(T, T) -> T + Send + Sync>;

/// Boundary values as `(t, u₁, u₃)` samples over the boundary parameter,
/// interpolated linearly and periodically in `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryTable<T> {
    t: Vec<T>,
    u1: Vec<T>,
    u3: Vec<T>,
}

impl<T: Real> BoundaryTable<T> {
    /// `t` must be strictly increasing inside `[0, 1)`.
    pub fn new(t: Vec<T>, u1: Vec<T>, u3: Vec<T>) -> Result<Self> {
        if t.len() != u1.len() || t.len() != u3.len() {
            return Err(Error::InvalidBoundaryData(format!(
                "column lengths differ: t={}, u1={}, u3={}",
                t.len(),
                u1.len(),
                u3.len()
            )));
        }
        if t.len() < 2 {
            return Err(Error::InvalidBoundaryData("need at least two samples".into()));
        }
        if t[0] < T::zero() || t[t.len() - 1] >= T::one() {
            return Err(Error::InvalidBoundaryData("t must lie in [0, 1)".into()));
        }
        if t.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidBoundaryData("t must be strictly increasing".into()));
        }
        if t.iter().chain(&u1).chain(&u3).any(|v| !v.is_finite()) {
            return Err(Error::InvalidBoundaryData("values must be finite".into()));
        }
        Ok(Self { t, u1, u3 })
    }

    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    /// Interpolated `(u₁, u₃)` at parameter `s` (taken modulo 1).
    pub fn interpolate(&self, s: T) -> (T, T) {
        let s = s - s.floor();
        let n = self.t.len();
        let hi = self.t.partition_point(|&t| t <= s);
        let (lo_idx, hi_idx, t_lo, t_hi) = if hi == 0 {
            (n - 1, 0, self.t[n - 1] - T::one(), self.t[0])
        } else if hi == n {
            (n - 1, 0, self.t[n - 1], self.t[0] + T::one())
        } else {
            (hi - 1, hi, self.t[hi - 1], self.t[hi])
        };
        let w = (s - t_lo) / (t_hi - t_lo);
        let lerp = |v: &[T]| v[lo_idx] + w * (v[hi_idx] - v[lo_idx]);
        (lerp(&self.u1), lerp(&self.u3))
    }
}

/// Boundary values of `∂u/∂x` and `∂u/∂y`.
#[derive(Clone)]
pub enum BoundaryData<T> {
    /// Closed forms evaluated at boundary points `(x, y)`.
    Functions { u1: BoundaryFn<T>, u3: BoundaryFn<T> },
    Table(BoundaryTable<T>),
}

impl<T: Real> BoundaryData<T> {
    pub fn functions<F1, F3>(u1: F1, u3: F3) -> Self
    where
        F1: Fn(T, T) -> T + Send + Sync + 'static,
        F3: Fn(T, T) -> T + Send + Sync + 'static,
    {
        Self::Functions {
            u1: Arc::new(u1),
            u3: Arc::new(u3),
        }
    }

    pub fn zero() -> Self {
        Self::functions(|_, _| T::zero(), |_, _| T::zero())
    }

    pub fn values_at(&self, node: &BoundaryNode<T>) -> (T, T) {
        match self {
            Self::Functions { u1, u3 } => (u1(node.x, node.y), u3(node.x, node.y)),
            Self::Table(table) => table.interpolate(node.t),
        }
    }
}

impl<T> std::fmt::Debug for BoundaryData<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Functions { .. } => f.write_str("BoundaryData::Functions"),
            Self::Table(t) => write!(f, "BoundaryData::Table({} samples)", t.t.len()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct BvpProblem<T: Real> {
    pub param: AnisoParam<T>,
    pub domain: Domain<T>,
    pub data: BoundaryData<T>,
}

impl<T: Real> BvpProblem<T> {
    pub fn new(param: AnisoParam<T>, domain: Domain<T>, data: BoundaryData<T>) -> Self {
        Self { param, domain, data }
    }
}

/// Default relative singular-value cutoff.
pub const DEFAULT_SVD_CUTOFF: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct SolverConfig<T> {
    /// Maximum degree of `F₁` and `F₂`.
    pub degree: usize,
    /// Number of boundary collocation nodes.
    pub collocation_count: usize,
    /// Singular values below `svd_cutoff · σ_max` are discarded.
    pub svd_cutoff: T,
    /// Weight of the `U₁` condition (1).
    pub lambda1: T,
    /// Weight of the `U₃` condition (`1/p`).
    pub lambda3: T,
}

impl<T: Real> SolverConfig<T> {
    /// Degree `N` with `4(2N+2)` nodes and the default cutoff.
    pub fn new(degree: usize, param: &AnisoParam<T>) -> Self {
        Self {
            degree,
            collocation_count: 4 * (2 * degree + 2),
            svd_cutoff: T::lit(DEFAULT_SVD_CUTOFF),
            lambda1: T::one(),
            lambda3: param.lambda3(),
        }
    }

    pub fn with_collocation_count(mut self, m: usize) -> Self {
        self.collocation_count = m;
        self
    }

    pub fn with_svd_cutoff(mut self, cutoff: T) -> Self {
        self.svd_cutoff = cutoff;
        self
    }

    /// Real unknowns: real and imaginary parts of both coefficient lists.
    pub fn unknowns(&self) -> usize {
        4 * (self.degree + 1)
    }

    pub fn validate(&self) -> Result<()> {
        let rows = 2 * self.collocation_count;
        if rows < self.unknowns() {
            return Err(Error::InsufficientNodes {
                rows,
                unknowns: self.unknowns(),
            });
        }
        if self.collocation_count < 2 * (2 * self.degree + 2) {
            return Err(Error::InvalidConfig(format!(
                "collocation count {} is below 2(2N+2) = {}",
                self.collocation_count,
                2 * (2 * self.degree + 2)
            )));
        }
        if !(self.svd_cutoff > T::zero() && self.svd_cutoff < T::one()) {
            return Err(Error::InvalidConfig(format!(
                "svd cutoff must lie in (0, 1), got {}",
                self.svd_cutoff
            )));
        }
        Ok(())
    }
}

/// Centers and radii of the scaled monomials in the `z` and `z_p` planes.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialBasis<T: Real> {
    pub center1: Complex<T>,
    pub scale1: T,
    pub center2: Complex<T>,
    pub scale2: T,
}

impl<T: Real> TrialBasis<T> {
    pub fn for_domain(domain: &Domain<T>, param: &AnisoParam<T>) -> Self {
        let [xc, yc] = domain.center();
        let p = param.p();
        Self {
            center1: Complex::new(xc, yc),
            scale1: domain.radius_in_zp_plane(T::one()),
            center2: Complex::new(xc, p * yc),
            scale2: domain.radius_in_zp_plane(p),
        }
    }

    /// Monogenic function with the given coefficient vector, laid out as
    /// `[Re a₀, Im a₀, …, Re a_N, Im a_N, Re b₀, Im b₀, …]`.
    pub fn function(&self, coeffs: &[T], param: &AnisoParam<T>) -> MonogenicFunction<T> {
        let half = coeffs.len() / 2;
        let to_complex = |v: &[T]| -> Vec<Complex<T>> {
            v.chunks_exact(2).map(|c| Complex::new(c[0], c[1])).collect()
        };
        MonogenicFunction::new(
            CPoly::with_basis(to_complex(&coeffs[..half]), self.center1, self.scale1),
            CPoly::with_basis(to_complex(&coeffs[half..]), self.center2, self.scale2),
            param.clone(),
        )
    }
}

/// Collocation matrix, right-hand side and the nodes they were built on.
#[derive(Clone, Debug)]
pub struct CollocationSystem<T: SolverScalar> {
    pub matrix: DMatrix<T>,
    pub rhs: DVector<T>,
    pub nodes: Vec<BoundaryNode<T>>,
    pub basis: TrialBasis<T>,
}

/// `(U₁, U₃)` of every trial function at `(x, y)`, in column order.
fn basis_row<T: SolverScalar>(
    basis: &TrialBasis<T>,
    param: &AnisoParam<T>,
    degree: usize,
    x: T,
    y: T,
) -> (Vec<T>, Vec<T>) {
    let n = 4 * (degree + 1);
    let mut row1 = Vec::with_capacity(n);
    let mut row3 = Vec::with_capacity(n);
    let i = Complex::new(T::zero(), T::one());
    let t1 = (Complex::new(x, y) - basis.center1) / basis.scale1;
    let t2 = (Complex::new(x, param.p() * y) - basis.center2) / basis.scale2;
    for (slot, t) in [(0, t1), (1, t2)] {
        let mut power = Complex::<T>::one();
        for _ in 0..=degree {
            for c in [power, power * i] {
                let elem = if slot == 0 {
                    B0Element::new(c, Complex::zero())
                } else {
                    B0Element::new(Complex::zero(), c)
                };
                let u = to_e_frame(&elem, param);
                row1.push(u[0]);
                row3.push(u[2]);
            }
            power *= t;
        }
    }
    (row1, row3)
}

/// Builds the `2M × 4(N+1)` system: row `2j` imposes `U₁ = λ₁u₁`, row
/// `2j+1` imposes `U₃ = λ₃u₃` at node `j`.
pub fn assemble<T: SolverScalar>(
    problem: &BvpProblem<T>,
    cfg: &SolverConfig<T>,
) -> Result<CollocationSystem<T>> {
    let rows = 2 * cfg.collocation_count;
    if rows < cfg.unknowns() {
        return Err(Error::InsufficientNodes {
            rows,
            unknowns: cfg.unknowns(),
        });
    }
    let basis = TrialBasis::for_domain(&problem.domain, &problem.param);
    let nodes = problem.domain.boundary_sample(cfg.collocation_count);
    let mut matrix = DMatrix::zeros(rows, cfg.unknowns());
    let mut rhs = DVector::zeros(rows);
    for (j, node) in nodes.iter().enumerate() {
        let (r1, r3) = basis_row(&basis, &problem.param, cfg.degree, node.x, node.y);
        for (k, (a, b)) in r1.into_iter().zip(r3).enumerate() {
            matrix[(2 * j, k)] = a;
            matrix[(2 * j + 1, k)] = b;
        }
        let (u1, u3) = problem.data.values_at(node);
        rhs[2 * j] = cfg.lambda1 * u1;
        rhs[2 * j + 1] = cfg.lambda3 * u3;
    }
    Ok(CollocationSystem {
        matrix,
        rhs,
        nodes,
        basis,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct LsSolution<T: SolverScalar> {
    pub x: DVector<T>,
    /// Number of singular values kept.
    pub rank: usize,
    /// All singular values, descending.
    pub singular_values: Vec<T>,
    /// `σ_max / σ_min` over the kept singular values.
    pub condition_estimate: T,
}

/// Minimum-norm least-squares solution by truncated SVD.
pub fn solve_ls<T: SolverScalar>(a: &DMatrix<T>, b: &DVector<T>, cutoff: T) -> Result<LsSolution<T>> {
    if a.nrows() != b.len() {
        return Err(Error::InvalidConfig(format!(
            "matrix has {} rows but right-hand side has {}",
            a.nrows(),
            b.len()
        )));
    }
    if a.iter().chain(b.iter()).any(|v| !Float::is_finite(*v)) {
        return Err(Error::NumericalBreakdown("non-finite entries in the system".into()));
    }
    let svd = SVD::try_new(a.clone(), true, true, T::default_epsilon(), 10_000)
        .ok_or_else(|| Error::NumericalBreakdown("SVD did not converge".into()))?;
    let (u, v_t) = match (&svd.u, &svd.v_t) {
        (Some(u), Some(v_t)) => (u, v_t),
        _ => return Err(Error::NumericalBreakdown("SVD factors missing".into())),
    };
    let sigma = &svd.singular_values;
    let sigma_max = sigma.iter().fold(T::zero(), |m, &s| Float::max(m, s));
    if sigma_max.is_nan() || sigma_max <= T::zero() {
        return Err(Error::NumericalBreakdown("all singular values vanish".into()));
    }
    let threshold = cutoff * sigma_max;
    let mut x = DVector::zeros(a.ncols());
    let mut rank = 0;
    let mut sigma_min_kept = sigma_max;
    for (k, &s) in sigma.iter().enumerate() {
        if s > threshold {
            rank += 1;
            sigma_min_kept = Float::min(sigma_min_kept, s);
            let coeff = u.column(k).dot(b) / s;
            x.axpy(coeff, &v_t.row(k).transpose(), T::one());
        }
    }
    if rank == 0 {
        return Err(Error::NumericalBreakdown("no singular value above cutoff".into()));
    }
    let mut singular_values: Vec<T> = sigma.iter().copied().collect();
    singular_values.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
    Ok(LsSolution {
        x,
        rank,
        singular_values,
        condition_estimate: sigma_max / sigma_min_kept,
    })
}

/// Max and RMS of the collocation mismatch over both condition families.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ResidualStats<T> {
    pub max: T,
    pub rms: T,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BvpSolution<T: Real> {
    /// The fitted `Φ`, the derivative of the function whose first component
    /// is the stress function.
    pub phi: MonogenicFunction<T>,
    /// Raw coefficient vector in the trial basis.
    pub coefficients: Vec<T>,
    pub boundary_residual: ResidualStats<T>,
    pub rank: usize,
    pub unknowns: usize,
    pub condition_estimate: T,
    /// Degree of the trial space.
    pub degree: usize,
}

/// Collocation mismatch of `phi` against the problem's boundary data.
pub fn boundary_residual<T: Real>(
    phi: &MonogenicFunction<T>,
    problem: &BvpProblem<T>,
    cfg: &SolverConfig<T>,
    nodes: &[BoundaryNode<T>],
) -> ResidualStats<T> {
    let mut max = T::zero();
    let mut sum_sq = T::zero();
    for node in nodes {
        let u = phi.components(&node.x, &node.y);
        let (u1, u3) = problem.data.values_at(node);
        for r in [u[0] - cfg.lambda1 * u1, u[2] - cfg.lambda3 * u3] {
            max = Float::max(max, Float::abs(r));
            sum_sq = sum_sq + r * r;
        }
    }
    let count = T::from_usize(2 * nodes.len().max(1)).unwrap();
    ResidualStats {
        max,
        rms: Float::sqrt(sum_sq / count),
    }
}

/// Samples the boundary, assembles, solves and packs diagnostics.
pub fn solve_bvp<T: SolverScalar>(problem: &BvpProblem<T>, cfg: &SolverConfig<T>) -> Result<BvpSolution<T>> {
    cfg.validate()?;
    let system = assemble(problem, cfg)?;
    let ls = solve_ls(&system.matrix, &system.rhs, cfg.svd_cutoff)?;
    let coefficients: Vec<T> = ls.x.iter().copied().collect();
    let phi = system.basis.function(&coefficients, &problem.param);
    let boundary_residual = boundary_residual(&phi, problem, cfg, &system.nodes);
    Ok(BvpSolution {
        phi,
        coefficients,
        boundary_residual,
        rank: ls.rank,
        unknowns: cfg.unknowns(),
        condition_estimate: ls.condition_estimate,
        degree: cfg.degree,
    })
}

/// Gauss points per segment that integrate the degree-`N` integrand exactly.
fn quadrature_order(degree: usize) -> usize {
    degree / 2 + 2
}

/// `u` at one target along an explicit path.
pub fn reconstruct_u_along<T: Real>(
    phi: &MonogenicFunction<T>,
    domain: &Domain<T>,
    path: &PathSpec<T>,
    base_value: T,
    n_gauss: usize,
) -> Result<T> {
    let p = phi.param.p();
    let integral = path_integrate(
        domain,
        path,
        n_gauss,
        |x, y| phi.components(&x, &y)[0],
        |x, y| p * phi.components(&x, &y)[2],
    )?;
    Ok(integral + base_value)
}

/// `u` at each target, integrating from the domain's base point along
/// `base → (x, y_base) → (x, y)`.
pub fn reconstruct_u<T: Real>(
    sol: &BvpSolution<T>,
    domain: &Domain<T>,
    targets: &[[T; 2]],
    base_value: T,
) -> Result<Vec<T>> {
    let base = domain.base_point();
    let n_gauss = quadrature_order(sol.degree);
    targets
        .iter()
        .map(|&target| {
            let path = PathSpec::axis_aligned(base, target);
            reconstruct_u_along(&sol.phi, domain, &path, base_value, n_gauss)
        })
        .collect()
}

/// Error summary of an end-to-end manufactured-solution run.
#[derive(Clone, Debug, PartialEq)]
pub struct ManufacturedReport<T> {
    pub boundary_residual: ResidualStats<T>,
    pub interior_max_error: T,
    pub interior_rms_error: T,
    pub interior_points: usize,
    pub rank: usize,
    pub unknowns: usize,
}

/// Interior lattice size used by [`verify_manufactured`].
pub const MANUFACTURED_GRID: usize = 21;

/// Builds `u* = Re(g₁(z) + g₂(z_p))`, feeds its symbolic gradient to the
/// solver as boundary data, reconstructs `u` on a 21×21 interior lattice
/// with the additive constant matched at the base point, and reports errors.
pub fn verify_manufactured<T: SolverScalar>(
    g1: &CPoly<T>,
    g2: &CPoly<T>,
    param: &AnisoParam<T>,
    domain: &Domain<T>,
    cfg: &SolverConfig<T>,
) -> Result<ManufacturedReport<T>> {
    let (re1, _) = g1.expand(&T::one());
    let (re2, _) = g2.expand(&param.p());
    let exact = &re1 + &re2;
    let ux = exact.dx();
    let uy = exact.dy();
    let data = BoundaryData::functions(move |x, y| ux.eval(&x, &y), move |x, y| uy.eval(&x, &y));
    let problem = BvpProblem::new(param.clone(), domain.clone(), data);
    let sol = solve_bvp(&problem, cfg)?;
    let [bx, by] = domain.base_point();
    let targets = domain.interior_grid(MANUFACTURED_GRID);
    let values = reconstruct_u(&sol, domain, &targets, exact.eval(&bx, &by))?;
    let mut max = T::zero();
    let mut sum_sq = T::zero();
    for (pt, v) in targets.iter().zip(&values) {
        let err = Float::abs(*v - exact.eval(&pt[0], &pt[1]));
        max = Float::max(max, err);
        sum_sq += err * err;
    }
    let n = targets.len();
    Ok(ManufacturedReport {
        boundary_residual: sol.boundary_residual,
        interior_max_error: max,
        interior_rms_error: Float::sqrt(sum_sq / T::from_usize(n.max(1)).unwrap()),
        interior_points: n,
        rank: sol.rank,
        unknowns: sol.unknowns,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn config_defaults_and_validation() {
        let param = AnisoParam::new(2.0).unwrap();
        let cfg = SolverConfig::new(3, &param);
        assert_eq!(cfg.collocation_count, 32);
        assert_eq!(cfg.unknowns(), 16);
        assert_eq!(cfg.lambda3, 0.5);
        assert!(cfg.validate().is_ok());
        assert!(matches!(
            cfg.clone().with_collocation_count(7).validate(),
            Err(Error::InsufficientNodes { rows: 14, unknowns: 16 })
        ));
        assert!(matches!(
            cfg.clone().with_collocation_count(10).validate(),
            Err(Error::InvalidConfig(_))
        ));
        assert!(cfg.clone().with_svd_cutoff(0.0).validate().is_err());
        assert!(cfg.with_svd_cutoff(1.0).validate().is_err());
    }

    #[test]
    fn assemble_rejects_too_few_nodes() {
        let param = AnisoParam::new(2.0).unwrap();
        let problem = BvpProblem::new(param, Domain::disk([0., 0.], 1.).unwrap(), BoundaryData::zero());
        let cfg = SolverConfig::new(3, &problem.param).with_collocation_count(5);
        assert!(matches!(assemble(&problem, &cfg), Err(Error::InsufficientNodes { .. })));
    }

    #[test]
    fn constant_trial_space_with_zero_data() {
        let param = AnisoParam::new(2.0).unwrap();
        let problem = BvpProblem::new(param, Domain::disk([0., 0.], 1.).unwrap(), BoundaryData::zero());
        let cfg = SolverConfig::new(0, &problem.param);
        let system = assemble(&problem, &cfg).unwrap();
        assert_eq!(system.matrix.shape(), (16, 4));
        assert!(system.rhs.iter().all(|&v| v == 0.0));
        let sol = solve_bvp(&problem, &cfg).unwrap();
        assert!(sol.coefficients.iter().all(|&v| v == 0.0));
        assert_eq!(sol.boundary_residual.max, 0.0);
    }

    #[test]
    fn identity_system() {
        let a = DMatrix::<f64>::identity(4, 4);
        let b = DVector::from_vec(vec![1.0, -2.0, 3.5, 0.25]);
        let sol = solve_ls(&a, &b, 1e-10).unwrap();
        assert_eq!(sol.rank, 4);
        assert!((sol.x - b).amax() < 1e-15);
    }

    #[test]
    fn zero_matrix_breaks_down() {
        let a = DMatrix::<f64>::zeros(3, 2);
        let b = DVector::from_vec(vec![1.0, 0.0, 0.0]);
        assert!(matches!(solve_ls(&a, &b, 1e-10), Err(Error::NumericalBreakdown(_))));
    }

    #[test]
    fn table_interpolation_is_periodic() {
        let table = BoundaryTable::new(vec![0.0, 0.25, 0.5, 0.75], vec![0.0, 1.0, 0.0, -1.0], vec![4.0, 4.0, 4.0, 0.0]).unwrap();
        assert_eq!(table.interpolate(0.125), (0.5, 4.0));
        assert_eq!(table.interpolate(0.875), (-0.5, 2.0));
        assert_eq!(table.interpolate(1.25), (1.0, 4.0));
        assert!(BoundaryTable::new(vec![0.0, 0.0], vec![1.0, 1.0], vec![1.0, 1.0]).is_err());
        assert!(BoundaryTable::new(vec![0.0, 1.0], vec![1.0, 1.0], vec![1.0, 1.0]).is_err());
        assert!(BoundaryTable::new(vec![0.0, 0.5], vec![1.0], vec![1.0, 1.0]).is_err());
    }

    #[test]
    fn trial_basis_maps_coefficients() {
        let param = AnisoParam::new(3.0).unwrap();
        let domain = Domain::ellipse([1.0, -1.0], [2.0, 1.0]).unwrap();
        let basis = TrialBasis::for_domain(&domain, &param);
        assert_eq!(basis.center1, c(1.0, -1.0));
        assert_eq!(basis.center2, c(1.0, -3.0));
        assert_eq!(basis.scale1, 2.0);
        assert_eq!(basis.scale2, 3.0);
        let phi = basis.function(&[1.0, 0.0, 0.0, 2.0, 0.5, 0.0, 0.0, 0.0], &param);
        assert_eq!(phi.f1.coeffs(), &[c(1.0, 0.0), c(0.0, 2.0)]);
        assert_eq!(phi.f2.coeffs(), &[c(0.5, 0.0)]);
    }

    #[test]
    fn zero_solution_reconstructs_base_value() {
        let param = AnisoParam::new(2.0).unwrap();
        let domain = Domain::disk([0., 0.], 1.).unwrap();
        let problem = BvpProblem::new(param, domain.clone(), BoundaryData::zero());
        let sol = solve_bvp(&problem, &SolverConfig::new(2, &problem.param)).unwrap();
        let u = reconstruct_u(&sol, &domain, &[[0.3, 0.4], [-0.5, 0.1]], 7.0).unwrap();
        assert_eq!(u, vec![7.0, 7.0]);
    }
}
