//! Quadrature over the half-space and the global invariants of the
//! monopole: energy, symplectic pairings and the moduli metric, the
//! Chern–Simons functional along the dyonic path, boundary fluxes, and
//! the equivariant index polynomial.
//!
//! All volume integrals are taken against the positive measure
//! `dμ = ρ⁻³ dx dy dρ`, which represents the oriented volume form; the
//! coordinate 3-form satisfies `dρ∧dx∧dy = −ρ³ dμ`, so oriented densities
//! pick up a factor `−ρ³` when integrated here. The quadrature is a
//! tensor-product Gauss–Legendre rule with rational compactifications
//! `x = x₀ + c·u/(1−u²)` on the plane directions and `ρ = c(1+w)/(1−w)`
//! on the height, `c` scaled to the configuration.
//!
//! Results are bitwise deterministic for any worker count: the grid is
//! split into x-slices, each slice is summed by exactly one worker in a
//! fixed interior order, and the slices are folded in index order on the
//! calling thread. The worker count comes from `HYPERMONO_THREADS`
//! (unset or `0` means all available cores).

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use crate::algebra::{c, trace_pair, GaugeSpinor, Mat2, C};
use crate::deformations::{
    eigenspinors, pure_gauge, symmetry_coefficients, tangent_vector, GaugeGenerator,
};
use crate::geometry::{pt, Point};
use crate::monopole::{FieldStrength, GaugeField, Monopole};

/// Failures of a quadrature run.
#[derive(Debug, thiserror::Error)]
pub enum QuadratureError {
    #[error("integrand not finite at ({x}, {y}, {rho})")]
    NonFinite { x: f64, y: f64, rho: f64 },
    #[error(
        "quadrature did not converge: relative change {rel:.3e} at {nodes} nodes \
         exceeds tolerance {tol:.1e}"
    )]
    NotConverged { rel: f64, nodes: usize, tol: f64 },
}

/// Worker count for grid integration: `HYPERMONO_THREADS`, with unset,
/// unparsable, or `0` meaning all available cores.
pub fn thread_count() -> usize {
    let available = || {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    };
    match std::env::var("HYPERMONO_THREADS") {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => n,
            _ => available(),
        },
        Err(_) => available(),
    }
}

/// Parameters of one tensor-product quadrature grid.
#[derive(Clone, Copy, Debug)]
pub struct QuadratureSpec {
    /// Nodes per axis (the grid has the cube of this).
    pub nodes_per_axis: usize,
    /// Length scale `c` of the rational compactifications.
    pub axis_scale: f64,
    /// Centre of the plane maps.
    pub x0: f64,
    pub y0: f64,
}

impl QuadratureSpec {
    /// Grid adapted to a configuration: centred on it, scaled to
    /// `max(1, λ)`.
    pub fn for_monopole(cfg: &Monopole, nodes_per_axis: usize) -> QuadratureSpec {
        QuadratureSpec {
            nodes_per_axis,
            axis_scale: cfg.lambda.max(1.0),
            x0: cfg.x0,
            y0: cfg.y0,
        }
    }

    pub fn with_nodes(&self, nodes_per_axis: usize) -> QuadratureSpec {
        QuadratureSpec {
            nodes_per_axis,
            ..*self
        }
    }
}

/// Gauss–Legendre nodes and weights on `[−1, 1]`, ascending nodes.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "need at least one node, got {n}");
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Chebyshev-like initial guess for the i-th root from the right.
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut converged = false;
        for _ in 0..100 {
            let (p, dp) = legendre_with_derivative(n, z);
            let dz = p / dp;
            z -= dz;
            if dz.abs() < 1e-15 {
                converged = true;
                break;
            }
        }
        assert!(
            converged,
            "Legendre root iteration stalled at n = {n}, i = {i}"
        );
        let (_, dp) = legendre_with_derivative(n, z);
        let wi = 2.0 / ((1.0 - z * z) * dp * dp);
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    (x, w)
}

/// `(P_n(z), P_n'(z))` by the three-term recurrence.
fn legendre_with_derivative(n: usize, z: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = z;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * z * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let dp = n as f64 * (z * p1 - p0) / (z * z - 1.0);
    (p1, dp)
}

/// Node/weight pairs along one plane axis: `x = x0 + c·u/(1−u²)`, weight
/// `w·c(1+u²)/(1−u²)²`.
fn plane_axis(n: usize, x0: f64, scale: f64) -> Vec<(f64, f64)> {
    let (u, w) = gauss_legendre(n);
    u.iter()
        .zip(&w)
        .map(|(&u, &w)| {
            let d = 1.0 - u * u;
            (x0 + scale * u / d, w * scale * (1.0 + u * u) / (d * d))
        })
        .collect()
}

/// Node/weight pairs along the height: `ρ = c(1+w)/(1−w)`, weight
/// `w·2c/(1−w)²`.
fn height_axis(n: usize, scale: f64) -> Vec<(f64, f64)> {
    let (u, w) = gauss_legendre(n);
    u.iter()
        .zip(&w)
        .map(|(&u, &w)| {
            let d = 1.0 - u;
            (scale * (1.0 + u) / d, w * 2.0 * scale / (d * d))
        })
        .collect()
}

/// Integrate a `K`-component density against `dμ = ρ⁻³ dx dy dρ` over the
/// whole half-space. Deterministic for any worker count.
pub fn integrate_h3_multi<const K: usize, F>(
    f: F,
    spec: &QuadratureSpec,
) -> Result<[C; K], QuadratureError>
where
    F: Fn(Point) -> [C; K] + Sync,
{
    let n = spec.nodes_per_axis;
    assert!(n >= 2, "grid needs at least 2 nodes per axis, got {n}");
    let xs = plane_axis(n, spec.x0, spec.axis_scale);
    let ys = plane_axis(n, spec.y0, spec.axis_scale);
    let rs = height_axis(n, spec.axis_scale);

    let slice_sum = |ix: usize| -> Result<[C; K], QuadratureError> {
        let (x, wx) = xs[ix];
        let mut acc = [c(0.0, 0.0); K];
        for &(y, wy) in &ys {
            for &(rho, wr) in &rs {
                let p = pt(x, y, rho);
                let vals = f(p);
                let weight = wx * wy * wr / (rho * rho * rho);
                for (a, v) in acc.iter_mut().zip(vals.iter()) {
                    if !v.re.is_finite() || !v.im.is_finite() {
                        return Err(QuadratureError::NonFinite { x, y, rho });
                    }
                    *a += v * weight;
                }
            }
        }
        Ok(acc)
    };

    let workers = thread_count().clamp(1, n);
    let counter = AtomicUsize::new(0);
    let mut partials: Vec<(usize, Result<[C; K], QuadratureError>)> = Vec::with_capacity(n);
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                s.spawn(|| {
                    let mut local = Vec::new();
                    loop {
                        let ix = counter.fetch_add(1, Ordering::Relaxed);
                        if ix >= n {
                            break;
                        }
                        local.push((ix, slice_sum(ix)));
                    }
                    local
                })
            })
            .collect();
        for h in handles {
            partials.extend(h.join().expect("integration worker panicked"));
        }
    });
    partials.sort_unstable_by_key(|(ix, _)| *ix);

    let mut total = [c(0.0, 0.0); K];
    for (_, r) in partials {
        let slice = r?;
        for (t, s) in total.iter_mut().zip(slice.iter()) {
            *t += s;
        }
    }
    Ok(total)
}

/// Scalar version of [`integrate_h3_multi`].
pub fn integrate_h3<F>(f: F, spec: &QuadratureSpec) -> Result<C, QuadratureError>
where
    F: Fn(Point) -> C + Sync,
{
    integrate_h3_multi(|p| [f(p)], spec).map(|v| v[0])
}

/// Integrate a complex density over the plane at fixed height `ρ`,
/// against `dx dy` (fixed interior order, single-threaded).
fn integrate_boundary<F>(f: F, rho: f64, spec: &QuadratureSpec) -> Result<C, QuadratureError>
where
    F: Fn(Point) -> C,
{
    let n = spec.nodes_per_axis;
    assert!(n >= 2, "grid needs at least 2 nodes per axis, got {n}");
    let xs = plane_axis(n, spec.x0, spec.axis_scale);
    let ys = plane_axis(n, spec.y0, spec.axis_scale);
    let mut acc = c(0.0, 0.0);
    for &(x, wx) in &xs {
        for &(y, wy) in &ys {
            let v = f(pt(x, y, rho));
            if !v.re.is_finite() || !v.im.is_finite() {
                return Err(QuadratureError::NonFinite { x, y, rho });
            }
            acc += v * (wx * wy);
        }
    }
    Ok(acc)
}

/// Heights used for the boundary extrapolation.
const BOUNDARY_HEIGHTS: [f64; 3] = [1e-2, 5e-3, 2.5e-3];

/// Two-level Richardson extrapolation of a boundary quantity sampled at
/// [`BOUNDARY_HEIGHTS`]: removes the `O(ρ)` and `O(ρ²)` transients.
fn richardson(b: [f64; 3]) -> f64 {
    let e1 = 2.0 * b[1] - b[0];
    let e2 = 2.0 * b[2] - b[1];
    (4.0 * e2 - e1) / 3.0
}

/// Total energy `−(1/4)∫Tr(d^AΦ∧∗d^AΦ + F∧∗F)`, evaluated through the
/// closed-form density `3ρ⁴f²`.
pub fn energy(cfg: &Monopole, spec: &QuadratureSpec) -> Result<f64, QuadratureError> {
    let v = integrate_h3(|p| c(cfg.energy_density(p), 0.0), spec)?;
    Ok(v.re)
}

/// Symplectic pairing `ω(u, v) = −(1/2)∫Tr(u, v) dμ` of two gauge-spinor
/// fields.
pub fn omega_pair<F, G>(u: F, v: G, spec: &QuadratureSpec) -> Result<C, QuadratureError>
where
    F: Fn(Point) -> GaugeSpinor + Sync,
    G: Fn(Point) -> GaugeSpinor + Sync,
{
    let val = integrate_h3(|p| trace_pair(&u(p), &v(p)) * c(-0.5, 0.0), spec)?;
    Ok(val)
}

/// Moduli pairings of the four symmetry tangent vectors, computed two
/// ways in one grid pass.
#[derive(Clone, Copy, Debug)]
pub struct GramMatrices {
    /// Direct metric `−(1/2)∫[ρ²Σᵢ Tr(a_μᵢ a_νᵢ) + Tr(φ_μ φ_ν)] dμ`.
    pub direct: [[C; 4]; 4],
    /// The same matrix assembled from the eigenspinor pairings through
    /// the rank-one expansion coefficients.
    pub assembled: [[C; 4]; 4],
    /// Eigenspinor pairings `Ω_{αγ} = ω(ν_α, ν_γ)`.
    pub omega: [[C; 2]; 2],
}

impl GramMatrices {
    /// Largest absolute entry of `direct − expected·I₄`.
    pub fn max_deviation_from(&self, expected: f64) -> f64 {
        let mut worst: f64 = 0.0;
        for mu in 0..4 {
            for nu in 0..4 {
                let target = if mu == nu {
                    c(expected, 0.0)
                } else {
                    c(0.0, 0.0)
                };
                worst = worst.max((self.direct[mu][nu] - target).norm());
            }
        }
        worst
    }

    /// Largest absolute entry of `direct − assembled`.
    pub fn route_disagreement(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for mu in 0..4 {
            for nu in 0..4 {
                worst = worst.max((self.direct[mu][nu] - self.assembled[mu][nu]).norm());
            }
        }
        worst
    }
}

/// Index pairs `(μ, ν)`, `μ ≤ ν`, in the packing order of the Gram pass.
const GRAM_PAIRS: [(usize, usize); 10] = [
    (0, 0),
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 1),
    (1, 2),
    (1, 3),
    (2, 2),
    (2, 3),
    (3, 3),
];

/// Compute the Gram matrix of the symmetry tangent vectors and the
/// eigenspinor pairing matrix in a single 13-component quadrature pass,
/// then assemble the metric a second way from the pairings.
pub fn gram_matrix(cfg: &Monopole, spec: &QuadratureSpec) -> Result<GramMatrices, QuadratureError> {
    let density = |p: Point| -> [C; 13] {
        let vals = [
            tangent_vector(cfg, 0).value(p),
            tangent_vector(cfg, 1).value(p),
            tangent_vector(cfg, 2).value(p),
            tangent_vector(cfg, 3).value(p),
        ];
        let r2 = p.rho * p.rho;
        let mut out = [c(0.0, 0.0); 13];
        for (slot, &(mu, nu)) in GRAM_PAIRS.iter().enumerate() {
            let (u, v) = (&vals[mu], &vals[nu]);
            let mut s = (u.phi * v.phi).trace();
            for i in 0..3 {
                s += (u.a[i] * v.a[i]).trace() * r2;
            }
            out[slot] = s * c(-0.5, 0.0);
        }
        let (n1, n2) = eigenspinors(cfg, p);
        out[10] = trace_pair(&n1, &n1) * c(-0.5, 0.0);
        out[11] = trace_pair(&n1, &n2) * c(-0.5, 0.0);
        out[12] = trace_pair(&n2, &n2) * c(-0.5, 0.0);
        out
    };
    let v = integrate_h3_multi::<13, _>(density, spec)?;

    let mut direct = [[c(0.0, 0.0); 4]; 4];
    for (slot, &(mu, nu)) in GRAM_PAIRS.iter().enumerate() {
        direct[mu][nu] = v[slot];
        direct[nu][mu] = v[slot];
    }
    let omega = [[v[10], v[11]], [-v[11], v[12]]];
    Ok(GramMatrices {
        direct,
        assembled: assemble_from_omega(&omega),
        omega,
    })
}

/// Metric from the pairings: `g(μ,ν) = Σ C^μ_{αβ} C^ν_{γδ} (1/2) ε_{βδ} Ω_{αγ}`.
fn assemble_from_omega(omega: &[[C; 2]; 2]) -> [[C; 4]; 4] {
    let eps = [[0.0, 1.0], [-1.0, 0.0]];
    let mut out = [[c(0.0, 0.0); 4]; 4];
    for (mu, row) in out.iter_mut().enumerate() {
        let cm = symmetry_coefficients(mu);
        for (nu, entry) in row.iter_mut().enumerate() {
            let cn = symmetry_coefficients(nu);
            let mut s = c(0.0, 0.0);
            for a in 0..2 {
                for b in 0..2 {
                    for g in 0..2 {
                        for d in 0..2 {
                            if eps[b][d] != 0.0 {
                                s += cm[a][b] * cn[g][d] * c(0.5 * eps[b][d], 0.0) * omega[a][g];
                            }
                        }
                    }
                }
            }
            *entry = s;
        }
    }
    out
}

/// Density of the Chern–Simons 3-form of a connection with respect to
/// `dρ∧dx∧dy`: `Tr(F_xy A_ρ + F_yρ A_x + F_ρx A_y) − Tr(A_x [A_y, A_ρ])`.
pub fn cs3_density(a: &[Mat2; 3], f: &FieldStrength) -> f64 {
    let quadratic = (f.xy * a[2] + f.yrho * a[0] + f.rhox * a[1]).trace();
    let cubic = (a[0] * a[1].comm(&a[2])).trace();
    (quadratic - cubic).re
}

/// The two pieces of the relative Chern–Simons functional.
#[derive(Clone, Copy, Debug)]
pub struct ChernSimonsParts {
    /// `∫ CS₃(A¹) − ∫ CS₃(A⁰)` over the half-space.
    pub bulk: f64,
    /// `∮ Tr(A⁰ ∧ A¹)` over the boundary plane, extrapolated to `ρ = 0`.
    pub boundary: f64,
    /// Raw boundary samples at [`BOUNDARY_HEIGHTS`], before extrapolation.
    pub boundary_samples: [f64; 3],
    /// `(bulk + boundary)/2`.
    pub total: f64,
}

impl ChernSimonsParts {
    /// Disagreement between the two first-level extrapolants of the
    /// boundary term — a cheap consistency gauge for the limit `ρ → 0`.
    pub fn boundary_extrapolation_spread(&self) -> f64 {
        let b = self.boundary_samples;
        let e1 = 2.0 * b[1] - b[0];
        let e2 = 2.0 * b[2] - b[1];
        (e2 - e1).abs()
    }
}

/// Relative Chern–Simons functional
/// `CS(A⁰, A¹) = (1/2)[∫CS₃(A¹) − ∫CS₃(A⁰) + ∮Tr(A⁰∧A¹)]`.
///
/// The boundary 2-form is `Tr(A⁰_x A¹_y − A⁰_y A¹_x) dx∧dy`, sampled at
/// three small heights and Richardson-extrapolated to the boundary.
pub fn chern_simons<G0, G1>(
    a0: &G0,
    a1: &G1,
    spec: &QuadratureSpec,
) -> Result<ChernSimonsParts, QuadratureError>
where
    G0: GaugeField + Sync,
    G1: GaugeField + Sync,
{
    let bulk = integrate_h3(
        |p| {
            let h1 = cs3_density(&a1.connection(p), &a1.curvature(p));
            let h0 = cs3_density(&a0.connection(p), &a0.curvature(p));
            c(-(p.rho * p.rho * p.rho) * (h1 - h0), 0.0)
        },
        spec,
    )?
    .re;

    let mut b = [0.0; 3];
    for (slot, &rho) in BOUNDARY_HEIGHTS.iter().enumerate() {
        b[slot] = integrate_boundary(
            |p| {
                let u = a0.connection(p);
                let v = a1.connection(p);
                (u[0] * v[1] - u[1] * v[0]).trace()
            },
            rho,
            spec,
        )?
        .re;
    }
    let boundary = richardson(b);
    Ok(ChernSimonsParts {
        bulk,
        boundary,
        boundary_samples: b,
        total: 0.5 * (bulk + boundary),
    })
}

/// Wedge density `Tr(F ∧ b)` of a curvature and a gauge-valued 1-form,
/// with respect to `dρ∧dx∧dy`.
fn wedge_density(f: &FieldStrength, b: &[Mat2; 3]) -> f64 {
    ((f.xy * b[2] + f.yrho * b[0] + f.rhox * b[1]).trace()).re
}

/// Rate of change of the Chern–Simons functional along the dyonic path,
/// `∫ Tr(F ∧ d^AΦ)`.
pub fn cs_rate(cfg: &Monopole, spec: &QuadratureSpec) -> Result<f64, QuadratureError> {
    let v = integrate_h3(
        |p| {
            let f = cfg.curvature(p);
            let b = cfg.higgs_cov_grad(p);
            c(-(p.rho * p.rho * p.rho) * wedge_density(&f, &b), 0.0)
        },
        spec,
    )?;
    Ok(v.re)
}

/// Framing integral `∫ Tr(F ∧ d^Aχ_j)` of a rotation generator — zero
/// exactly when the generator is framed.
pub fn framing_integral(
    cfg: &Monopole,
    gen: GaugeGenerator,
    spec: &QuadratureSpec,
) -> Result<f64, QuadratureError> {
    let d = pure_gauge(cfg, gen);
    let v = integrate_h3(
        |p| {
            let f = cfg.curvature(p);
            let b = d.value(p).a;
            c(-(p.rho * p.rho * p.rho) * wedge_density(&f, &b), 0.0)
        },
        spec,
    )?;
    Ok(v.re)
}

/// Boundary flux `∮ Tr(Φ F)` over the plane at `ρ → 0`; equals `−2π`
/// times the product of charge and mass normalisation for the built-in
/// family. Pins the orientation conventions of the boundary integrals.
pub fn boundary_higgs_flux(cfg: &Monopole, spec: &QuadratureSpec) -> Result<f64, QuadratureError> {
    let mut b = [0.0; 3];
    for (slot, &rho) in BOUNDARY_HEIGHTS.iter().enumerate() {
        b[slot] =
            integrate_boundary(|p| (cfg.higgs(p) * cfg.curvature(p).xy).trace(), rho, spec)?.re;
    }
    Ok(richardson(b))
}

/// Run an evaluation at successive grid sizes until the relative change
/// of the result (under `dist`) falls below `rel_tol`; returns the final
/// value and the full history. Errors with
/// [`QuadratureError::NotConverged`] if the last two rungs still differ.
pub fn ladder<T, F, D>(
    mut eval: F,
    dist: D,
    nodes: &[usize],
    rel_tol: f64,
) -> Result<(T, Vec<(usize, T)>), QuadratureError>
where
    T: Clone,
    F: FnMut(usize) -> Result<T, QuadratureError>,
    D: Fn(&T, &T) -> f64,
{
    assert!(
        nodes.len() >= 2,
        "a convergence ladder needs at least two rungs"
    );
    let mut history: Vec<(usize, T)> = Vec::with_capacity(nodes.len());
    for &n in nodes {
        let v = eval(n)?;
        history.push((n, v));
    }
    let (last_nodes, last) = history.last().cloned().expect("nonempty ladder");
    let (_, prev) = history[history.len() - 2].clone();
    let rel = dist(&prev, &last);
    if rel < rel_tol {
        Ok((last, history))
    } else {
        Err(QuadratureError::NotConverged {
            rel,
            nodes: last_nodes,
            tol: rel_tol,
        })
    }
}

/// Relative distance between two scalars, guarded for tiny denominators.
pub fn rel_change(a: &f64, b: &f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

/// The equivariant index polynomial for magnetic charge `n` and doubled
/// boundary weight `p₂ = 2p`: `2n` times each odd power of the circle
/// variable from `1 − 2p₂` to `2p₂ − 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexPolynomial {
    /// Coefficient of each exponent; exponents are the odd integers in
    /// `[1 − 2p₂, 2p₂ − 1]`.
    pub coeffs: BTreeMap<i64, u64>,
}

/// Invalid index parameters.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum IndexError {
    #[error("magnetic charge must be a positive integer, got {0}")]
    InvalidCharge(i64),
    #[error("doubled boundary weight must be a positive integer, got {0}")]
    InvalidWeight(i64),
}

/// Compute the index polynomial; exact integer arithmetic.
pub fn equivariant_index(n: i64, p2: i64) -> Result<IndexPolynomial, IndexError> {
    if n <= 0 {
        return Err(IndexError::InvalidCharge(n));
    }
    if p2 <= 0 {
        return Err(IndexError::InvalidWeight(p2));
    }
    let coeff = 2 * n as u64;
    let mut coeffs = BTreeMap::new();
    for j in 0..2 * p2 {
        coeffs.insert(2 * j + 1 - 2 * p2, coeff);
    }
    Ok(IndexPolynomial { coeffs })
}

impl IndexPolynomial {
    /// Number of terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of a given exponent (zero if absent).
    pub fn coeff(&self, exponent: i64) -> u64 {
        self.coeffs.get(&exponent).copied().unwrap_or(0)
    }

    /// `coeffs[k] == coeffs[−k]` for every exponent.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().all(|(&k, &v)| self.coeff(-k) == v)
    }

    /// Dimension of the weight-`+1` eigenspace (the harmonic moduli
    /// directions of one chirality).
    pub fn dim_plus(&self) -> u64 {
        self.coeff(1)
    }

    /// Dimension of the weight-`−1` eigenspace.
    pub fn dim_minus(&self) -> u64 {
        self.coeff(-1)
    }
}

impl std::fmt::Display for IndexPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (&k, &v) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{v}")?,
                1 => write!(f, "{v} t")?,
                _ => write!(f, "{v} t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deformations::eigenspinor;
    use crate::monopole::DyonGauge;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    #[test]
    fn legendre_rules_match_known_values() {
        let (x, w) = gauss_legendre(2);
        let r = 1.0 / 3.0f64.sqrt();
        assert!((x[0] + r).abs() < 1e-15 && (x[1] - r).abs() < 1e-15);
        assert!((w[0] - 1.0).abs() < 1e-15 && (w[1] - 1.0).abs() < 1e-15);

        let (x, w) = gauss_legendre(3);
        let r = (3.0f64 / 5.0).sqrt();
        assert!(x[1].abs() < 1e-15);
        assert!((x[2] - r).abs() < 1e-15);
        assert!((w[1] - 8.0 / 9.0).abs() < 1e-15);
        assert!((w[0] - 5.0 / 9.0).abs() < 1e-15);

        // n-point rule is exact on degree 2n−1.
        let (x, w) = gauss_legendre(5);
        let int: f64 = x.iter().zip(&w).map(|(&x, &w)| w * x.powi(8)).sum();
        assert!((int - 2.0 / 9.0).abs() < 1e-14, "∫x⁸ = {int}");
    }

    #[test]
    fn half_space_quadrature_integrates_a_known_profile() {
        // ∫ ρ⁴ f² dμ = π/3 for the unit configuration (energy / 9... the
        // energy density is 3ρ⁴f², and the energy is π).
        let cfg = Monopole::unit();
        let spec = QuadratureSpec::for_monopole(&cfg, 40);
        let v = integrate_h3(|p| c(cfg.energy_density(p), 0.0), &spec).unwrap();
        assert!(
            (v.re - PI).abs() / PI < 2e-3,
            "energy = {}, expected π",
            v.re
        );
        assert!(v.im.abs() < 1e-12);
    }

    #[test]
    fn energy_is_pi_for_shifted_and_scaled_configurations() {
        for cfg in [Monopole::new(0.8, -0.5, 2.5), Monopole::new(-0.2, 0.1, 0.7)] {
            let spec = QuadratureSpec::for_monopole(&cfg, 48);
            let e = energy(&cfg, &spec).unwrap();
            assert!(
                (e - cfg.expected_energy()).abs() / cfg.expected_energy() < 2e-3,
                "energy {e} for {cfg:?}"
            );
        }
    }

    #[test]
    fn non_finite_integrands_are_reported_with_their_node() {
        let cfg = Monopole::unit();
        let spec = QuadratureSpec::for_monopole(&cfg, 8);
        let err = integrate_h3(|p| c(1.0 / (p.rho - p.rho), 0.0), &spec).unwrap_err();
        match err {
            QuadratureError::NonFinite { rho, .. } => assert!(rho > 0.0),
            other => panic!("expected NonFinite, got {other:?}"),
        }
    }

    #[test]
    fn eigenspinor_pairing_reproduces_the_energy() {
        // ω(ν₁, ν₂) = 3∫ρ⁴f² dμ = π; the diagonal pairings vanish.
        let cfg = Monopole::unit();
        let spec = QuadratureSpec::for_monopole(&cfg, 40);
        let w12 = omega_pair(
            |p| eigenspinor(&cfg, 1, p),
            |p| eigenspinor(&cfg, 2, p),
            &spec,
        )
        .unwrap();
        assert!((w12 - c(PI, 0.0)).norm() / PI < 2e-3, "ω(ν₁,ν₂) = {w12}");
        let w11 = omega_pair(
            |p| eigenspinor(&cfg, 1, p),
            |p| eigenspinor(&cfg, 1, p),
            &spec,
        )
        .unwrap();
        assert!(w11.norm() < 1e-10, "ω(ν₁,ν₁) = {w11}");
    }

    #[test]
    fn gram_matrix_is_pi_times_identity_both_ways() {
        let cfg = Monopole::unit();
        let spec = QuadratureSpec::for_monopole(&cfg, 40);
        let g = gram_matrix(&cfg, &spec).unwrap();
        let dev = g.max_deviation_from(PI);
        assert!(dev < 2e-3 * PI, "direct deviation {dev}");
        let gap = g.route_disagreement();
        assert!(gap < 4e-3 * PI, "route disagreement {gap}");
        assert!((g.omega[0][1] - c(PI, 0.0)).norm() < 2e-3 * PI);
        assert!(g.omega[0][0].norm() < 1e-10);
        assert!(g.omega[1][1].norm() < 1e-10);
    }

    #[test]
    fn chern_simons_density_vanishes_identically_on_the_solution() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for cfg in [Monopole::unit(), Monopole::new(0.4, -0.9, 1.7)] {
            for _ in 0..20 {
                let p = pt(
                    rng.gen_range(-1.5..1.5),
                    rng.gen_range(-1.5..1.5),
                    rng.gen_range(0.4..2.5),
                );
                let h = cs3_density(&cfg.connection(p), &cfg.curvature(p));
                assert!(h.abs() < 1e-12, "h(A) = {h} at {p:?}");
            }
        }
    }

    #[test]
    fn boundary_flux_pins_the_orientation() {
        for cfg in [Monopole::unit(), Monopole::new(0.3, 0.2, 1.4)] {
            let spec = QuadratureSpec::for_monopole(&cfg, 48);
            let flux = boundary_higgs_flux(&cfg, &spec).unwrap();
            assert!(
                (flux + 2.0 * PI).abs() / (2.0 * PI) < 1e-4,
                "flux = {flux}, expected −2π"
            );
        }
    }

    #[test]
    fn chern_simons_is_antisymmetric_and_vanishes_on_the_diagonal() {
        let cfg = Monopole::unit();
        let spec = QuadratureSpec::for_monopole(&cfg, 16);
        let dyon = DyonGauge::new(&cfg, 0.3);
        let same = chern_simons(&cfg, &cfg, &spec).unwrap();
        assert!(same.total.abs() < 1e-12, "CS(A,A) = {}", same.total);
        let fwd = chern_simons(&cfg, &dyon, &spec).unwrap();
        let bwd = chern_simons(&dyon, &cfg, &spec).unwrap();
        assert!(
            (fwd.total + bwd.total).abs() < 1e-12,
            "antisymmetry violated: {} vs {}",
            fwd.total,
            bwd.total
        );
    }

    #[test]
    fn chern_simons_along_the_dyon_path_matches_the_rate() {
        let cfg = Monopole::unit();
        let spec = QuadratureSpec::for_monopole(&cfg, 40);
        let rate = cs_rate(&cfg, &spec).unwrap();
        assert!(
            (rate + 2.0 * PI).abs() / (2.0 * PI) < 1e-3,
            "rate = {rate}, expected −2π"
        );
        let dyon = DyonGauge::new(&cfg, 0.1);
        let csv = chern_simons(&cfg, &dyon, &spec).unwrap();
        let expected = -0.2 * PI;
        assert!(
            (csv.total - expected).abs() / expected.abs() < 5e-3,
            "CS = {}, expected {expected}",
            csv.total
        );
    }

    #[test]
    fn framed_generators_have_vanishing_framing_integral() {
        let cfg = Monopole::unit();
        let spec = QuadratureSpec::for_monopole(&cfg, 40);
        for j in 1..=3 {
            let v = framing_integral(&cfg, GaugeGenerator::Framed(j), &spec).unwrap();
            assert!(v.abs() < 1e-3 * 2.0 * PI, "framing integral of χ_{j} = {v}");
        }
        // The unframed rotation carries one unit of boundary winding.
        let v = framing_integral(&cfg, GaugeGenerator::BareRotation, &spec).unwrap();
        assert!(
            (v + 2.0 * PI).abs() / (2.0 * PI) < 1e-2,
            "bare framing integral = {v}, expected −2π"
        );
    }

    #[test]
    fn ladder_converges_and_reports_failure() {
        let cfg = Monopole::unit();
        let spec = QuadratureSpec::for_monopole(&cfg, 8);
        let run = |n: usize| energy(&cfg, &spec.with_nodes(n));
        let (val, history) = ladder(run, rel_change, &[24, 32, 40], 1e-2).unwrap();
        println!("energy ladder: {history:?}");
        assert!((val - PI).abs() / PI < 1e-2);
        let err = ladder(run, rel_change, &[2, 3], 1e-9).unwrap_err();
        match err {
            QuadratureError::NotConverged { nodes, .. } => assert_eq!(nodes, 3),
            other => panic!("expected NotConverged, got {other:?}"),
        }
    }

    #[test]
    fn index_polynomials_match_the_known_cases() {
        let p = equivariant_index(1, 1).unwrap();
        assert_eq!(p.coeffs, BTreeMap::from([(-1, 2), (1, 2)]));
        assert_eq!(p.to_string(), "2 t^-1 + 2 t");

        let p = equivariant_index(2, 2).unwrap();
        assert_eq!(p.coeffs, BTreeMap::from([(-3, 4), (-1, 4), (1, 4), (3, 4)]));

        let p = equivariant_index(3, 1).unwrap();
        assert_eq!(p.coeffs, BTreeMap::from([(-1, 6), (1, 6)]));

        for (n, p2) in [(1i64, 1i64), (2, 2), (3, 1), (4, 5)] {
            let poly = equivariant_index(n, p2).unwrap();
            assert!(poly.is_palindromic());
            assert_eq!(poly.term_count() as i64, 2 * p2);
            assert_eq!(poly.dim_plus(), 2 * n as u64);
            assert_eq!(poly.dim_minus(), 2 * n as u64);
            assert!(poly.coeffs.values().all(|&v| v == 2 * n as u64));
            assert!(poly.coeffs.keys().all(|&k| k.rem_euclid(2) == 1));
        }

        assert_eq!(equivariant_index(0, 1), Err(IndexError::InvalidCharge(0)));
        assert_eq!(equivariant_index(2, -1), Err(IndexError::InvalidWeight(-1)));
    }

    #[test]
    fn thread_slicing_is_bitwise_deterministic() {
        // The fold is over x-slices in index order, so the result cannot
        // depend on which worker computed which slice. Exercise the
        // machinery with more workers than slices.
        let cfg = Monopole::unit();
        let spec = QuadratureSpec::for_monopole(&cfg, 12);
        let a = integrate_h3(|p| c(cfg.energy_density(p), 0.0), &spec).unwrap();
        let b = integrate_h3(|p| c(cfg.energy_density(p), 0.0), &spec).unwrap();
        assert_eq!(a.re.to_bits(), b.re.to_bits());
    }
}
