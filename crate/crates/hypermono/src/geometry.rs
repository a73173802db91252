//! Upper half-space model of hyperbolic 3-space and its differential
//! operators.
//!
//! Coordinates are `(x, y, ρ)` with `ρ > 0`, metric `g = ρ⁻²(dρ² + dx² + dy²)`.
//! The isometry algebra is spanned by three rotation-like fields `X₁ X₂ X₃`
//! and three boost-like fields `Y₁ Y₂ Y₃` with brackets
//! `[Xᵢ, Xⱼ] = −ε_ijk X_k`, `[Xᵢ, Yⱼ] = −ε_ijk Y_k`, `[Yᵢ, Yⱼ] = +ε_ijk X_k`;
//! the complex combinations `Z_j = Y_j + i X_j` are null and orthonormal,
//! `g(Z_j, Z_k) = δ_jk`, for the complex-bilinear extension of `g`.
//!
//! The Hodge star acts on coordinate components (1-forms ordered `x y ρ`,
//! 2-forms ordered `xy yρ ρx`) as
//! `∗(a_x, a_y, a_ρ) = (−a_ρ/ρ, −a_x/ρ, −a_y/ρ)` and
//! `∗(β_xy, β_yρ, β_ρx) = (−ρβ_yρ, −ρβ_ρx, −ρβ_xy)`, so `∗∗ = 1`.
//!
//! The spin connection is `∇ = d + (dx/2ρ) iσ₂ − (dy/2ρ) iσ₁`; derivatives
//! are taken by central finite differences with step scaled by `max(1, ρ)`.

use crate::algebra::{c, spin_act, GaugeSpinor, Mat2, Spinor, C};

/// Point of the upper half-space; `rho > 0` is a precondition everywhere.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
    pub rho: f64,
}

impl Point {
    #[inline]
    pub fn new(x: f64, y: f64, rho: f64) -> Point {
        debug_assert!(rho > 0.0, "height must be positive, got {rho}");
        Point { x, y, rho }
    }
}

/// Shorthand constructor.
#[inline]
pub fn pt(x: f64, y: f64, rho: f64) -> Point {
    Point::new(x, y, rho)
}

/// Coordinate directions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Rho,
}

pub const AXES: [Axis; 3] = [Axis::X, Axis::Y, Axis::Rho];

#[inline]
fn offset(p: Point, axis: Axis, d: f64) -> Point {
    match axis {
        Axis::X => Point { x: p.x + d, ..p },
        Axis::Y => Point { y: p.y + d, ..p },
        Axis::Rho => Point {
            rho: p.rho + d,
            ..p
        },
    }
}

/// Order of the central difference stencil.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FdOrder {
    Two,
    Four,
}

/// Central finite-difference scheme with height-scaled step.
///
/// The effective step at a point is `h · max(1, ρ)`: constant near the
/// boundary (where fields vary on unit scale) and proportional to the
/// hyperbolic distance deep in the bulk.
#[derive(Clone, Copy, Debug)]
pub struct FdScheme {
    pub h: f64,
    pub order: FdOrder,
}

impl FdScheme {
    pub fn new(h: f64, order: FdOrder) -> FdScheme {
        assert!(h > 0.0 && h.is_finite(), "step must be positive, got {h}");
        FdScheme { h, order }
    }

    /// Second-order scheme at the crate's default step.
    pub fn default_second() -> FdScheme {
        FdScheme::new(1e-4, FdOrder::Two)
    }

    #[inline]
    pub fn h_at(&self, rho: f64) -> f64 {
        self.h * rho.max(1.0)
    }

    #[inline]
    fn reach(&self) -> f64 {
        match self.order {
            FdOrder::Two => 1.0,
            FdOrder::Four => 2.0,
        }
    }
}

/// Central difference `∂f/∂axis` at `p` for any flat-space-valued `f`.
///
/// Panics if the stencil would leave the half-space `ρ > 0`; callers keep
/// `h` a few orders below the height of the lowest evaluation point.
pub fn fd_partial<T, F>(f: F, p: Point, axis: Axis, fd: FdScheme) -> T
where
    T: Copy
        + std::ops::Add<Output = T>
        + std::ops::Sub<Output = T>
        + std::ops::Mul<f64, Output = T>,
    F: Fn(Point) -> T,
{
    let h = fd.h_at(p.rho);
    if axis == Axis::Rho {
        let lowest = p.rho - fd.reach() * h;
        assert!(
            lowest > 0.0,
            "stencil leaves the half-space: ρ = {}, reach = {}",
            p.rho,
            fd.reach() * h
        );
    }
    match fd.order {
        FdOrder::Two => (f(offset(p, axis, h)) - f(offset(p, axis, -h))) * (0.5 / h),
        FdOrder::Four => {
            let d1 = f(offset(p, axis, h)) - f(offset(p, axis, -h));
            let d2 = f(offset(p, axis, 2.0 * h)) - f(offset(p, axis, -2.0 * h));
            (d1 * 8.0 - d2) * (1.0 / (12.0 * h))
        }
    }
}

/// Componentwise stencil derivative of a gauge-valued 1-form.
pub fn fd_partial_form<F>(f: F, p: Point, axis: Axis, fd: FdScheme) -> [Mat2; 3]
where
    F: Fn(Point) -> [Mat2; 3] + Copy,
{
    let comp = |i: usize| fd_partial(move |q| f(q)[i], p, axis, fd);
    [comp(0), comp(1), comp(2)]
}

/// Complexified tangent vector in coordinate components.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TangentVec3 {
    pub vx: C,
    pub vy: C,
    pub vrho: C,
}

impl TangentVec3 {
    #[inline]
    pub fn new(vx: C, vy: C, vrho: C) -> TangentVec3 {
        TangentVec3 { vx, vy, vrho }
    }

    #[inline]
    pub fn real(vx: f64, vy: f64, vrho: f64) -> TangentVec3 {
        TangentVec3::new(c(vx, 0.0), c(vy, 0.0), c(vrho, 0.0))
    }

    #[inline]
    pub fn comps(&self) -> [C; 3] {
        [self.vx, self.vy, self.vrho]
    }

    #[inline]
    pub fn scale(&self, z: C) -> TangentVec3 {
        TangentVec3::new(self.vx * z, self.vy * z, self.vrho * z)
    }

    #[inline]
    pub fn max_abs(&self) -> f64 {
        self.vx.norm().max(self.vy.norm()).max(self.vrho.norm())
    }
}

impl std::ops::Add for TangentVec3 {
    type Output = TangentVec3;
    #[inline]
    fn add(self, rhs: TangentVec3) -> TangentVec3 {
        TangentVec3::new(self.vx + rhs.vx, self.vy + rhs.vy, self.vrho + rhs.vrho)
    }
}

impl std::ops::Sub for TangentVec3 {
    type Output = TangentVec3;
    #[inline]
    fn sub(self, rhs: TangentVec3) -> TangentVec3 {
        TangentVec3::new(self.vx - rhs.vx, self.vy - rhs.vy, self.vrho - rhs.vrho)
    }
}

impl std::ops::Mul<f64> for TangentVec3 {
    type Output = TangentVec3;
    #[inline]
    fn mul(self, rhs: f64) -> TangentVec3 {
        self.scale(c(rhs, 0.0))
    }
}

/// The nine distinguished Killing fields: three rotation-like (`X`), three
/// boost-like (`Y`), and their complex combinations `Z_j = Y_j + i X_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KillingKind {
    X1,
    X2,
    X3,
    Y1,
    Y2,
    Y3,
    Z1,
    Z2,
    Z3,
}

/// Real rotation-like fields, `j ∈ {1,2,3}`.
fn killing_x(j: usize, p: Point) -> TangentVec3 {
    let (x, y, rho) = (p.x, p.y, p.rho);
    let q = x * x + y * y + rho * rho;
    match j {
        1 => TangentVec3::real(x * y, y * y + 0.5 * (1.0 - q), y * rho),
        2 => TangentVec3::real(-x * x - 0.5 * (1.0 - q), -x * y, -x * rho),
        3 => TangentVec3::real(-y, x, 0.0),
        _ => unreachable!(),
    }
}

/// Real boost-like fields, `j ∈ {1,2,3}`.
fn killing_y(j: usize, p: Point) -> TangentVec3 {
    let (x, y, rho) = (p.x, p.y, p.rho);
    let q = x * x + y * y + rho * rho;
    match j {
        1 => TangentVec3::real(0.5 * (1.0 + q) - x * x, -x * y, -x * rho),
        2 => TangentVec3::real(-x * y, 0.5 * (1.0 + q) - y * y, -y * rho),
        3 => TangentVec3::real(x, y, rho),
        _ => unreachable!(),
    }
}

/// Evaluate a Killing field at a point.
pub fn killing_field(kind: KillingKind, p: Point) -> TangentVec3 {
    use KillingKind::*;
    match kind {
        X1 => killing_x(1, p),
        X2 => killing_x(2, p),
        X3 => killing_x(3, p),
        Y1 => killing_y(1, p),
        Y2 => killing_y(2, p),
        Y3 => killing_y(3, p),
        Z1 => killing_y(1, p) + killing_x(1, p).scale(c(0.0, 1.0)),
        Z2 => killing_y(2, p) + killing_x(2, p).scale(c(0.0, 1.0)),
        Z3 => killing_y(3, p) + killing_x(3, p).scale(c(0.0, 1.0)),
    }
}

/// Analytic Jacobian `J[i][j] = ∂_j V^i` of a Killing field
/// (row: component `x y ρ`; column: derivative direction `x y ρ`).
pub fn killing_jacobian(kind: KillingKind, p: Point) -> [[C; 3]; 3] {
    use KillingKind::*;
    let (x, y, rho) = (p.x, p.y, p.rho);
    let re = |rows: [[f64; 3]; 3]| {
        let mut out = [[c(0.0, 0.0); 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                out[i][j] = c(rows[i][j], 0.0);
            }
        }
        out
    };
    match kind {
        X1 => re([[y, x, 0.0], [-x, y, -rho], [0.0, rho, y]]),
        X2 => re([[-x, y, rho], [-y, -x, 0.0], [-rho, 0.0, -x]]),
        X3 => re([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]]),
        Y1 => re([[-x, y, rho], [-y, -x, 0.0], [-rho, 0.0, -x]]),
        Y2 => re([[-y, -x, 0.0], [x, -y, rho], [0.0, -rho, -y]]),
        Y3 => re([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]),
        Z1 | Z2 | Z3 => {
            let (xk, yk) = match kind {
                Z1 => (X1, Y1),
                Z2 => (X2, Y2),
                _ => (X3, Y3),
            };
            let jx = killing_jacobian(xk, p);
            let jy = killing_jacobian(yk, p);
            let mut out = [[c(0.0, 0.0); 3]; 3];
            for i in 0..3 {
                for j in 0..3 {
                    out[i][j] = jy[i][j] + c(0.0, 1.0) * jx[i][j];
                }
            }
            out
        }
    }
}

/// Commutator `[V, W]^i = V^j ∂_j W^i − W^j ∂_j V^i` from analytic Jacobians.
pub fn commutator_field(a: KillingKind, b: KillingKind, p: Point) -> TangentVec3 {
    let va = killing_field(a, p).comps();
    let vb = killing_field(b, p).comps();
    let ja = killing_jacobian(a, p);
    let jb = killing_jacobian(b, p);
    let mut out = [c(0.0, 0.0); 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i] += va[j] * jb[i][j] - vb[j] * ja[i][j];
        }
    }
    TangentVec3::new(out[0], out[1], out[2])
}

/// Complex-bilinear metric pairing `g(v, w) = (v_x w_x + v_y w_y + v_ρ w_ρ)/ρ²`.
#[inline]
pub fn metric_pair(v: &TangentVec3, w: &TangentVec3, p: Point) -> C {
    (v.vx * w.vx + v.vy * w.vy + v.vrho * w.vrho) / c(p.rho * p.rho, 0.0)
}

/// Christoffel symbols `Γ[k][i][j] = Γ^k_ij` of the half-space metric:
/// `Γ^k_ij = −ρ⁻¹(δ_iρ δ_jk + δ_jρ δ_ik − δ_kρ δ_ij)` with index 2 ≡ ρ.
pub fn christoffel(p: Point) -> [[[f64; 3]; 3]; 3] {
    let inv = 1.0 / p.rho;
    let mut g = [[[0.0; 3]; 3]; 3];
    const RHO: usize = 2;
    for (k, gk) in g.iter_mut().enumerate() {
        for (i, gki) in gk.iter_mut().enumerate() {
            for (j, v) in gki.iter_mut().enumerate() {
                if i == RHO && j == k {
                    *v -= inv;
                }
                if j == RHO && i == k {
                    *v -= inv;
                }
                if k == RHO && i == j {
                    *v += inv;
                }
            }
        }
    }
    g
}

/// Killing residual of an arbitrary complexified vector field: the largest
/// component of the Lie derivative of the metric,
/// `(L_V g)_ij = ∂_i λ_j + ∂_j λ_i − 2 Γ^k_ij λ_k` with `λ = V/ρ²` the
/// lowered field. Zero (to stencil error) exactly for isometry generators.
pub fn killing_residual_of<F>(v: F, p: Point, fd: FdScheme) -> f64
where
    F: Fn(Point) -> TangentVec3 + Copy,
{
    let lowered = |q: Point| {
        let w = v(q);
        w.scale(c(1.0 / (q.rho * q.rho), 0.0))
    };
    let mut d = [[c(0.0, 0.0); 3]; 3]; // d[i][j] = ∂_i λ_j
    for (i, axis) in AXES.iter().enumerate() {
        let grad = fd_partial(lowered, p, *axis, fd);
        d[i] = grad.comps();
    }
    let lam = lowered(p).comps();
    let gamma = christoffel(p);
    let mut worst: f64 = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            let mut lij = d[i][j] + d[j][i];
            for k in 0..3 {
                lij -= c(2.0 * gamma[k][i][j], 0.0) * lam[k];
            }
            worst = worst.max(lij.norm());
        }
    }
    worst
}

/// Killing residual of one of the distinguished fields.
pub fn killing_residual(kind: KillingKind, p: Point, fd: FdScheme) -> f64 {
    killing_residual_of(|q| killing_field(kind, q), p, fd)
}

/// Hodge star from 1-form to 2-form components
/// (input ordered `x y ρ`, output ordered `xy yρ ρx`).
#[inline]
pub fn star_1to2<T>(a: &[T; 3], rho: f64) -> [T; 3]
where
    T: Copy + std::ops::Mul<f64, Output = T>,
{
    let s = -1.0 / rho;
    [a[2] * s, a[0] * s, a[1] * s]
}

/// Hodge star from 2-form to 1-form components
/// (input ordered `xy yρ ρx`, output ordered `x y ρ`).
#[inline]
pub fn star_2to1<T>(b: &[T; 3], rho: f64) -> [T; 3]
where
    T: Copy + std::ops::Mul<f64, Output = T>,
{
    let s = -rho;
    [b[1] * s, b[2] * s, b[0] * s]
}

/// Coordinate components of the spin connection 1-form:
/// `ω_x = (i/2ρ)σ₂`, `ω_y = −(i/2ρ)σ₁`, `ω_ρ = 0`.
pub fn spin_connection(p: Point) -> [Mat2; 3] {
    let half = c(0.0, 0.5 / p.rho);
    [
        Mat2::SIGMA2.scale(half),
        Mat2::SIGMA1.scale(-half),
        Mat2::ZERO,
    ]
}

/// Clifford images of the unit coframe, `cl(dx/ρ) = −iσ₁` etc., as scalar
/// spin matrices in coordinate order `x y ρ`.
pub fn clifford_frame() -> [Mat2; 3] {
    let mi = c(0.0, -1.0);
    [
        Mat2::SIGMA1.scale(mi),
        Mat2::SIGMA2.scale(mi),
        Mat2::SIGMA3.scale(mi),
    ]
}

/// Spin-covariant derivative `∇_i ψ = ∂_i ψ + ω_i ψ` of a scalar spinor field.
pub fn cov_deriv_spinor<F>(psi: F, p: Point, axis: Axis, fd: FdScheme) -> Spinor
where
    F: Fn(Point) -> Spinor,
{
    let grad = fd_partial(&psi, p, axis, fd);
    let w = spin_connection(p);
    let wi = match axis {
        Axis::X => w[0],
        Axis::Y => w[1],
        Axis::Rho => w[2],
    };
    grad + wi.mul_spinor(&psi(p))
}

/// Dirac operator on scalar spinors, `Dψ = ρ Σ_i cl_i (∂_i + ω_i) ψ`.
pub fn dirac_spinor<F>(psi: F, p: Point, fd: FdScheme) -> Spinor
where
    F: Fn(Point) -> Spinor + Copy,
{
    let cls = clifford_frame();
    let mut out = Spinor::ZERO;
    for (i, axis) in AXES.iter().enumerate() {
        let d = cov_deriv_spinor(psi, p, *axis, fd);
        out = out + cls[i].mul_spinor(&d);
    }
    out * p.rho
}

/// Gauge-covariant gradient `(d^A f)_i = ∂_i f + [A_i, f]` of a
/// gauge-algebra-valued function.
pub fn covariant_grad<F, G>(f: F, conn: G, p: Point, fd: FdScheme) -> [Mat2; 3]
where
    F: Fn(Point) -> Mat2 + Copy,
    G: Fn(Point) -> [Mat2; 3],
{
    let a = conn(p);
    let v = f(p);
    let mut out = [Mat2::ZERO; 3];
    for (i, axis) in AXES.iter().enumerate() {
        out[i] = fd_partial(f, p, *axis, fd) + a[i].comm(&v);
    }
    out
}

/// Gauge-covariant exterior derivative of a 1-form, in 2-form components
/// `xy yρ ρx`:
/// `(d^A a)_jk = ∂_j a_k − ∂_k a_j + [A_j, a_k] − [A_k, a_j]`.
pub fn covariant_curl<F, G>(a_fn: F, conn: G, p: Point, fd: FdScheme) -> [Mat2; 3]
where
    F: Fn(Point) -> [Mat2; 3] + Copy,
    G: Fn(Point) -> [Mat2; 3],
{
    let a = a_fn(p);
    let conn_p = conn(p);
    let dx = fd_partial_form(a_fn, p, Axis::X, fd);
    let dy = fd_partial_form(a_fn, p, Axis::Y, fd);
    let drho = fd_partial_form(a_fn, p, Axis::Rho, fd);
    let br = |i: usize, j: usize| conn_p[i].comm(&a[j]) - conn_p[j].comm(&a[i]);
    [
        dx[1] - dy[0] + br(0, 1),
        dy[2] - drho[1] + br(1, 2),
        drho[0] - dx[2] + br(2, 0),
    ]
}

/// The codifferential combination `∗ d^A ∗ a` of a gauge-valued 1-form:
/// in half-space components `ρ² Σ_i (∂_i a_i + [A_i, a_i]) − ρ a_ρ`.
pub fn star_d_star<F, G>(a_fn: F, conn: G, p: Point, fd: FdScheme) -> Mat2
where
    F: Fn(Point) -> [Mat2; 3] + Copy,
    G: Fn(Point) -> [Mat2; 3],
{
    let a = a_fn(p);
    let conn_p = conn(p);
    let mut div = Mat2::ZERO;
    for (i, axis) in AXES.iter().enumerate() {
        let di = fd_partial(move |q| a_fn(q)[i], p, *axis, fd);
        div = div + di + conn_p[i].comm(&a[i]);
    }
    div * (p.rho * p.rho) - a[2] * p.rho
}

/// Fully covariant derivative of a gauge-valued spinor:
/// `∇^A_i ν = ∂_i ν + ω_i ν + [A_i, ν]` (spin connection on the spinor
/// index, gauge field by commutator on the gauge index).
pub fn cov_deriv_gauge_spinor<F, G>(
    nu: F,
    conn: G,
    p: Point,
    axis: Axis,
    fd: FdScheme,
) -> GaugeSpinor
where
    F: Fn(Point) -> GaugeSpinor + Copy,
    G: Fn(Point) -> [Mat2; 3],
{
    let grad = fd_partial(nu, p, axis, fd);
    let w = spin_connection(p);
    let a = conn(p);
    let (wi, ai) = match axis {
        Axis::X => (w[0], a[0]),
        Axis::Y => (w[1], a[1]),
        Axis::Rho => (w[2], a[2]),
    };
    let v = nu(p);
    grad + spin_act(&wi, &v) + GaugeSpinor::new(ai.comm(&v.s1), ai.comm(&v.s2))
}

/// Gauge-coupled Dirac operator on gauge-valued spinors,
/// `D^A ν = ρ Σ_i cl_i ∇^A_i ν`.
pub fn dirac_gauge_spinor<F, G>(nu: F, conn: G, p: Point, fd: FdScheme) -> GaugeSpinor
where
    F: Fn(Point) -> GaugeSpinor + Copy,
    G: Fn(Point) -> [Mat2; 3] + Copy,
{
    let cls = clifford_frame();
    let mut out = GaugeSpinor::ZERO;
    for (i, axis) in AXES.iter().enumerate() {
        let d = cov_deriv_gauge_spinor(nu, conn, p, *axis, fd);
        out = out + spin_act(&cls[i], &d);
    }
    out.scale(c(p.rho, 0.0))
}
