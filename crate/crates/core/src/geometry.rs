//! Bounded convex domains, boundary sampling, interior grids and line
//! integrals `∫ P dx + Q dy` by Gauss–Legendre quadrature.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Distance from `∂D` below which a point counts as on the boundary.
pub const BOUNDARY_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub enum DomainKind<T> {
    Disk { center: [T; 2], radius: T },
    Ellipse { center: [T; 2], semiaxes: [T; 2] },
    Rectangle { corner: [T; 2], widths: [T; 2] },
}

/// A bounded simply-connected domain with a positively oriented boundary
/// parametrization `γ: [0, 1) → ℝ²` and an interior base point.
#[derive(Clone, Debug, PartialEq)]
pub struct Domain<T> {
    kind: DomainKind<T>,
    base_point: [T; 2],
}

/// A collocation node `γ(t)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundaryNode<T> {
    pub x: T,
    pub y: T,
    pub t: T,
}

fn positive<T: Real>(v: T, what: &str) -> Result<()> {
    if v > T::zero() && v.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidDomain(format!("{what} must be positive and finite, got {v}")))
    }
}

impl<T: Real> Domain<T> {
    pub fn new(kind: DomainKind<T>) -> Result<Self> {
        match &kind {
            DomainKind::Disk { radius, .. } => positive(*radius, "radius")?,
            DomainKind::Ellipse { semiaxes, .. } => {
                positive(semiaxes[0], "semiaxis a")?;
                positive(semiaxes[1], "semiaxis b")?;
            }
            DomainKind::Rectangle { widths, .. } => {
                positive(widths[0], "width")?;
                positive(widths[1], "height")?;
            }
        }
        let mut domain = Self {
            kind,
            base_point: [T::zero(); 2],
        };
        domain.base_point = domain.center();
        Ok(domain)
    }

    pub fn disk(center: [T; 2], radius: T) -> Result<Self> {
        Self::new(DomainKind::Disk { center, radius })
    }

    pub fn ellipse(center: [T; 2], semiaxes: [T; 2]) -> Result<Self> {
        Self::new(DomainKind::Ellipse { center, semiaxes })
    }

    pub fn rectangle(corner: [T; 2], widths: [T; 2]) -> Result<Self> {
        Self::new(DomainKind::Rectangle { corner, widths })
    }

    /// Replaces the base point; it must be strictly interior.
    pub fn with_base_point(mut self, base: [T; 2]) -> Result<Self> {
        if !self.contains(base[0], base[1]) {
            return Err(Error::InvalidDomain(format!(
                "base point ({}, {}) is not interior",
                base[0], base[1]
            )));
        }
        self.base_point = base;
        Ok(self)
    }

    pub fn kind(&self) -> &DomainKind<T> {
        &self.kind
    }

    pub fn base_point(&self) -> [T; 2] {
        self.base_point
    }

    pub fn center(&self) -> [T; 2] {
        match &self.kind {
            DomainKind::Disk { center, .. } | DomainKind::Ellipse { center, .. } => *center,
            DomainKind::Rectangle { corner, widths } => {
                let half = T::lit(0.5);
                [corner[0] + half * widths[0], corner[1] + half * widths[1]]
            }
        }
    }

    /// Largest distance from the center to the boundary.
    pub fn char_radius(&self) -> T {
        self.radius_in_zp_plane(T::one())
    }

    /// Largest `|z_p − z_p(center)|` over the boundary, for `z_p = x + i k y`.
    pub fn radius_in_zp_plane(&self, k: T) -> T {
        match &self.kind {
            DomainKind::Disk { radius, .. } => *radius * k.max(T::one()),
            DomainKind::Ellipse { semiaxes, .. } => semiaxes[0].max(k * semiaxes[1]),
            DomainKind::Rectangle { widths, .. } => {
                let half = T::lit(0.5);
                (half * widths[0]).hypot(half * k * widths[1])
            }
        }
    }

    /// Axis-aligned bounding box `(min, max)`.
    pub fn bounding_box(&self) -> ([T; 2], [T; 2]) {
        match &self.kind {
            DomainKind::Disk { center, radius } => (
                [center[0] - *radius, center[1] - *radius],
                [center[0] + *radius, center[1] + *radius],
            ),
            DomainKind::Ellipse { center, semiaxes } => (
                [center[0] - semiaxes[0], center[1] - semiaxes[1]],
                [center[0] + semiaxes[0], center[1] + semiaxes[1]],
            ),
            DomainKind::Rectangle { corner, widths } => {
                (*corner, [corner[0] + widths[0], corner[1] + widths[1]])
            }
        }
    }

    /// Boundary point `γ(t)`, `t` taken modulo 1.
    pub fn boundary_point(&self, t: T) -> [T; 2] {
        let t = t - t.floor();
        match &self.kind {
            DomainKind::Disk { center, radius } => {
                let (s, c) = (T::TAU() * t).sin_cos();
                [center[0] + *radius * c, center[1] + *radius * s]
            }
            DomainKind::Ellipse { center, semiaxes } => {
                let (s, c) = (T::TAU() * t).sin_cos();
                [center[0] + semiaxes[0] * c, center[1] + semiaxes[1] * s]
            }
            DomainKind::Rectangle { corner, widths } => {
                let [w, h] = *widths;
                let mut s = t * (w + h + w + h);
                for (edge, len) in [w, h, w, h].into_iter().enumerate() {
                    if s <= len || edge == 3 {
                        return rect_edge_point(*corner, *widths, edge, s.min(len));
                    }
                    s = s - len;
                }
                unreachable!()
            }
        }
    }

    /// `m` collocation nodes on `∂D`.
    ///
    /// Smooth boundaries use `t_j = j/m`. Rectangles put at least one node
    /// on each edge, share the rest in proportion to edge length, and place
    /// nodes at cell midpoints so that no node falls on a vertex.
    pub fn boundary_sample(&self, m: usize) -> Vec<BoundaryNode<T>> {
        let mf = T::from_usize(m).unwrap();
        match &self.kind {
            DomainKind::Disk { .. } | DomainKind::Ellipse { .. } => (0..m)
                .map(|j| {
                    let t = T::from_usize(j).unwrap() / mf;
                    let [x, y] = self.boundary_point(t);
                    BoundaryNode { x, y, t }
                })
                .collect(),
            DomainKind::Rectangle { corner, widths } => {
                let [w, h] = *widths;
                let lens = [w, h, w, h];
                let perimeter = w + h + w + h;
                let counts = edge_counts(m, &lens);
                let mut nodes = Vec::with_capacity(m);
                let mut offset = T::zero();
                for (edge, (&len, &n)) in lens.iter().zip(counts.iter()).enumerate() {
                    let nf = T::from_usize(n).unwrap();
                    for j in 0..n {
                        let s = len * (T::from_usize(j).unwrap() + T::lit(0.5)) / nf;
                        let [x, y] = rect_edge_point(*corner, *widths, edge, s);
                        nodes.push(BoundaryNode {
                            x,
                            y,
                            t: (offset + s) / perimeter,
                        });
                    }
                    offset = offset + len;
                }
                nodes
            }
        }
    }

    /// Strict interior test.
    pub fn contains(&self, x: T, y: T) -> bool {
        match &self.kind {
            DomainKind::Disk { center, radius } => {
                let (dx, dy) = (x - center[0], y - center[1]);
                dx * dx + dy * dy < *radius * *radius
            }
            DomainKind::Ellipse { center, semiaxes } => {
                let (u, v) = ((x - center[0]) / semiaxes[0], (y - center[1]) / semiaxes[1]);
                u * u + v * v < T::one()
            }
            DomainKind::Rectangle { corner, widths } => {
                x > corner[0]
                    && x < corner[0] + widths[0]
                    && y > corner[1]
                    && y < corner[1] + widths[1]
            }
        }
    }

    /// Approximate signed distance to `∂D`, negative inside.
    pub fn boundary_distance(&self, x: T, y: T) -> T {
        match &self.kind {
            DomainKind::Disk { center, radius } => (x - center[0]).hypot(y - center[1]) - *radius,
            DomainKind::Ellipse { center, semiaxes } => {
                let (u, v) = ((x - center[0]) / semiaxes[0], (y - center[1]) / semiaxes[1]);
                (u.hypot(v) - T::one()) * semiaxes[0].min(semiaxes[1])
            }
            DomainKind::Rectangle { .. } => {
                let [cx, cy] = self.center();
                let DomainKind::Rectangle { widths, .. } = &self.kind else {
                    unreachable!()
                };
                let half = T::lit(0.5);
                ((x - cx).abs() - half * widths[0]).max((y - cy).abs() - half * widths[1])
            }
        }
    }

    /// Interior or within [`BOUNDARY_TOL`] of the boundary.
    pub fn admits(&self, x: T, y: T) -> bool {
        self.contains(x, y) || self.boundary_distance(x, y).abs() <= T::lit(BOUNDARY_TOL)
    }

    /// Points of an `n × n` lattice strictly inside the bounding box
    /// (`x_i = x_min + (i+1)·w/(n+1)`) that lie in the domain.
    pub fn interior_grid(&self, n: usize) -> Vec<[T; 2]> {
        let (lo, hi) = self.bounding_box();
        let denom = T::from_usize(n + 1).unwrap();
        let mut pts = Vec::new();
        for j in 0..n {
            let y = lo[1] + (hi[1] - lo[1]) * T::from_usize(j + 1).unwrap() / denom;
            for i in 0..n {
                let x = lo[0] + (hi[0] - lo[0]) * T::from_usize(i + 1).unwrap() / denom;
                if self.contains(x, y) {
                    pts.push([x, y]);
                }
            }
        }
        pts
    }
}

fn rect_edge_point<T: Real>(corner: [T; 2], widths: [T; 2], edge: usize, s: T) -> [T; 2] {
    let [x0, y0] = corner;
    let [w, h] = widths;
    match edge {
        0 => [x0 + s, y0],
        1 => [x0 + w, y0 + s],
        2 => [x0 + w - s, y0 + h],
        _ => [x0, y0 + h - s],
    }
}

/// One node per edge, the remainder shared by largest remainder in
/// proportion to length.
fn edge_counts<T: Real>(m: usize, lens: &[T; 4]) -> [usize; 4] {
    let base = usize::from(m >= 4);
    let spare = m - 4 * base;
    let total = lens.iter().fold(T::zero(), |a, &b| a + b);
    let shares: Vec<T> = lens
        .iter()
        .map(|&l| T::from_usize(spare).unwrap() * l / total)
        .collect();
    let mut counts = [0usize; 4];
    let mut assigned = 0;
    for k in 0..4 {
        counts[k] = shares[k].floor().to_usize().unwrap_or(0);
        assigned += counts[k];
    }
    let mut order: Vec<usize> = (0..4).collect();
    order.sort_by(|&a, &b| {
        let ra = shares[a] - shares[a].floor();
        let rb = shares[b] - shares[b].floor();
        rb.partial_cmp(&ra).unwrap_or(std::cmp::Ordering::Equal).then(a.cmp(&b))
    });
    for &k in order.iter().take(spare - assigned) {
        counts[k] += 1;
    }
    counts.map(|c| c + base)
}

type CurveFn<T> = Arc<dyn Fn(T) -> ([T; 2], [T; 2]) + Send + Sync>;

/// Integration path from the base point to a target.
#[derive(Clone)]
pub enum PathSpec<T> {
    /// Straight segments through the given vertices.
    Polyline(Vec<[T; 2]>),
    /// `s ∈ [0, 1] ↦ (γ(s), γ'(s))`, integrated on `pieces` equal subintervals.
    Curve { curve: CurveFn<T>, pieces: usize },
}

impl<T: fmt::Debug> fmt::Debug for PathSpec<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Polyline(v) => f.debug_tuple("Polyline").field(v).finish(),
            Self::Curve { pieces, .. } => f.debug_struct("Curve").field("pieces", pieces).finish_non_exhaustive(),
        }
    }
}

impl<T: Real> PathSpec<T> {
    /// `from → (to.x, from.y) → to`.
    pub fn axis_aligned(from: [T; 2], to: [T; 2]) -> Self {
        Self::Polyline(vec![from, [to[0], from[1]], to])
    }

    pub fn curve<F>(f: F, pieces: usize) -> Self
    where
        F: Fn(T) -> ([T; 2], [T; 2]) + Send + Sync + 'static,
    {
        Self::Curve {
            curve: Arc::new(f),
            pieces,
        }
    }
}

/// Gauss–Legendre nodes and weights on `[−1, 1]`, by Newton iteration on
/// the Legendre recurrence.
pub fn gauss_legendre<T: Real>(n: usize) -> (Vec<T>, Vec<T>) {
    let mut nodes = vec![T::zero(); n];
    let mut weights = vec![T::zero(); n];
    let nf = n as f64;
    for k in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (k as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() <= 1e-16 {
                break;
            }
        }
        let (_, d) = legendre(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[k] = T::lit(-x);
        nodes[n - 1 - k] = T::lit(x);
        weights[k] = T::lit(w);
        weights[n - 1 - k] = T::lit(w);
    }
    (nodes, weights)
}

fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// `∫ P dx + Q dy` along `path` with `n_gauss` nodes per segment.
///
/// Every vertex and quadrature node must be admitted by the domain.
pub fn path_integrate<T, P, Q>(
    domain: &Domain<T>,
    path: &PathSpec<T>,
    n_gauss: usize,
    p: P,
    q: Q,
) -> Result<T>
where
    T: Real,
    P: Fn(T, T) -> T,
    Q: Fn(T, T) -> T,
{
    if n_gauss < 2 {
        return Err(Error::InvalidPath("n_gauss must be at least 2"));
    }
    let (nodes, weights) = gauss_legendre::<T>(n_gauss);
    let check = |x: T, y: T| -> Result<()> {
        if domain.admits(x, y) {
            Ok(())
        } else {
            Err(Error::PathOutsideDomain {
                x: x.to_f64_lossy(),
                y: y.to_f64_lossy(),
            })
        }
    };
    let half = T::lit(0.5);
    let mut total = T::zero();
    match path {
        PathSpec::Polyline(verts) => {
            if verts.len() < 2 {
                return Err(Error::InvalidPath("polyline needs at least two vertices"));
            }
            for v in verts {
                check(v[0], v[1])?;
            }
            for seg in verts.windows(2) {
                let (a, b) = (seg[0], seg[1]);
                let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
                if dx == T::zero() && dy == T::zero() {
                    continue;
                }
                let mut acc = T::zero();
                for (&s, &w) in nodes.iter().zip(&weights) {
                    let tau = half * (s + T::one());
                    let (x, y) = (a[0] + tau * dx, a[1] + tau * dy);
                    check(x, y)?;
                    acc = acc + w * (p(x, y) * dx + q(x, y) * dy);
                }
                total = total + half * acc;
            }
        }
        PathSpec::Curve { curve, pieces } => {
            if *pieces == 0 {
                return Err(Error::InvalidPath("curve needs at least one piece"));
            }
            let np = T::from_usize(*pieces).unwrap();
            for piece in 0..*pieces {
                let s0 = T::from_usize(piece).unwrap() / np;
                let len = T::one() / np;
                let mut acc = T::zero();
                for (&s, &w) in nodes.iter().zip(&weights) {
                    let sigma = s0 + len * half * (s + T::one());
                    let ([x, y], [tx, ty]) = curve(sigma);
                    check(x, y)?;
                    acc = acc + w * (p(x, y) * tx + q(x, y) * ty);
                }
                total = total + half * len * acc;
            }
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invalid_domains_rejected() {
        assert!(Domain::disk([0.0, 0.0], 0.0).is_err());
        assert!(Domain::ellipse([0.0, 0.0], [1.0, -1.0]).is_err());
        assert!(Domain::rectangle([0.0, 0.0], [1.0, f64::NAN]).is_err());
        let d = Domain::disk([0.0, 0.0], 1.0).unwrap();
        assert!(d.clone().with_base_point([1.0, 0.0]).is_err());
        assert_eq!(d.with_base_point([0.5, 0.1]).unwrap().base_point(), [0.5, 0.1]);
    }

    #[test]
    fn disk_four_nodes() {
        let d = Domain::<f64>::disk([0.0, 0.0], 1.0).unwrap();
        let nodes = d.boundary_sample(4);
        let expected = [[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]];
        for (n, e) in nodes.iter().zip(expected) {
            assert!((n.x - e[0]).abs() < 1e-15 && (n.y - e[1]).abs() < 1e-15);
        }
    }

    #[test]
    fn unit_square_eight_nodes() {
        let d = Domain::rectangle([0.0, 0.0], [1.0, 1.0]).unwrap();
        let nodes = d.boundary_sample(8);
        assert_eq!(nodes.len(), 8);
        let on = |pred: &dyn Fn(&BoundaryNode<f64>) -> bool| nodes.iter().filter(|n| pred(n)).count();
        assert_eq!(on(&|n| n.y == 0.0), 2);
        assert_eq!(on(&|n| n.x == 1.0), 2);
        assert_eq!(on(&|n| n.y == 1.0), 2);
        assert_eq!(on(&|n| n.x == 0.0), 2);
        for n in &nodes {
            let corner = (n.x == 0.0 || n.x == 1.0) && (n.y == 0.0 || n.y == 1.0);
            assert!(!corner);
            let [bx, by] = d.boundary_point(n.t);
            assert!((bx - n.x).abs() < 1e-15 && (by - n.y).abs() < 1e-15);
        }
    }

    #[test]
    fn rectangle_nodes_follow_edge_length() {
        let d = Domain::rectangle([-1.0, 0.0], [3.0, 1.0]).unwrap();
        let nodes = d.boundary_sample(20);
        assert_eq!(nodes.len(), 20);
        let bottom = nodes.iter().filter(|n| n.y == 0.0).count();
        let left = nodes.iter().filter(|n| n.x == -1.0).count();
        assert!(bottom > 2 * left, "{bottom} vs {left}");
        assert!(nodes.windows(2).all(|w| w[0].t < w[1].t));
    }

    #[test]
    fn ellipse_nodes_on_curve() {
        let d = Domain::<f64>::ellipse([0.0, 0.0], [2.0, 1.0]).unwrap();
        for n in d.boundary_sample(100) {
            assert!(((n.x / 2.0).powi(2) + n.y * n.y - 1.0).abs() <= 1e-14);
        }
    }

    #[test]
    fn containment() {
        let disk = Domain::disk([0.0, 0.0], 1.0).unwrap();
        assert!(disk.contains(0.0, 0.0));
        assert!(!disk.contains(1.0, 0.0));
        assert!(disk.admits(1.0, 0.0));
        assert!(!disk.admits(1.0 + 1e-6, 0.0));
        let sq = Domain::rectangle([0.0, 0.0], [1.0, 1.0]).unwrap();
        assert!(sq.contains(0.5, 0.5));
        assert!(!sq.contains(0.0, 0.5));
        assert_eq!(sq.base_point(), [0.5, 0.5]);
    }

    #[test]
    fn gauss_legendre_is_exact_to_degree_2n_minus_1() {
        for n in 2..=12 {
            let (x, w) = gauss_legendre::<f64>(n);
            for deg in 0..2 * n {
                let approx: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(deg as i32)).sum();
                let exact = if deg % 2 == 1 { 0.0 } else { 2.0 / (deg as f64 + 1.0) };
                assert!((approx - exact).abs() < 1e-14, "n={n} deg={deg}");
            }
        }
    }

    #[test]
    fn line_integrals() {
        let d = Domain::<f64>::disk([0.0, 0.0], 2.0).unwrap();
        let seg = PathSpec::Polyline(vec![[0.0, 0.0], [1.0, 0.0]]);
        let v = path_integrate(&d, &seg, 2, |_, _| 1.0, |_, _| 0.0).unwrap();
        assert!((v - 1.0).abs() < 1e-15);

        let p = 3.0;
        let target = [0.7, -0.9];
        let path = PathSpec::axis_aligned([0.0, 0.0], target);
        let v = path_integrate(&d, &path, 3, |x, _| 2.0 * x, |_, y| -2.0 * p * p * y).unwrap();
        let exact = target[0] * target[0] - p * p * target[1] * target[1];
        assert!((v - exact).abs() < 1e-14);
    }

    #[test]
    fn path_leaving_domain_is_an_error() {
        let d = Domain::<f64>::disk([0.0, 0.0], 1.0).unwrap();
        let path = PathSpec::Polyline(vec![[0.0, 0.0], [2.0, 0.0]]);
        assert!(matches!(
            path_integrate(&d, &path, 4, |_, _| 1.0, |_, _| 1.0),
            Err(Error::PathOutsideDomain { .. })
        ));
        assert!(path_integrate(&d, &path, 1, |_, _| 1.0, |_, _| 1.0).is_err());
    }

    #[test]
    fn curve_paths() {
        // quarter circle of radius 0.5 from (0.5, 0) to (0, 0.5)
        let d = Domain::<f64>::disk([0.0, 0.0], 1.0).unwrap();
        let half_pi = std::f64::consts::FRAC_PI_2;
        let arc = PathSpec::curve(
            move |s: f64| {
                let th = half_pi * s;
                ([0.5 * th.cos(), 0.5 * th.sin()], [-0.5 * half_pi * th.sin(), 0.5 * half_pi * th.cos()])
            },
            4,
        );
        let v = path_integrate(&d, &arc, 10, |_, y| y * y, |x, y| 2.0 * x * y).unwrap();
        // exact differential of x y², which vanishes at both endpoints
        assert!(v.abs() < 1e-14, "{v}");
    }
}
