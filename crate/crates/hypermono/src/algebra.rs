//! Complex 2×2 matrices, Pauli generators, spinors, and the Clifford map.
//!
//! Conventions used throughout the crate:
//!
//! * Pauli matrices `σ₁, σ₂, σ₃` are hermitian with `σ_i σ_j = δ_ij + i ε_ijk σ_k`;
//!   the gauge algebra is their anti-hermitian span `iσ_k`.
//! * The symplectic pairing on spinors is `(s, t) = s₁t₂ − s₂t₁`, and the
//!   quaternionic conjugation is `s ↦ s̄ = (conj s₂, −conj s₁)`, so that the
//!   hermitian inner product is `⟨s, t⟩ = (s̄, t)`.
//! * A pair `(a, φ)` of a 1-form `a = a_x dx + a_y dy + a_ρ dρ` and a scalar
//!   `φ` acts on spinors through the block matrix
//!
//!   ```text
//!   cl(a, φ) = | φ − iρ a_ρ         −iρ (a_x − i a_y) |
//!              | −iρ (a_x + i a_y)   φ + iρ a_ρ       |
//!   ```
//!
//!   which encodes `cl(dx/ρ) = −iσ₁`, `cl(dy/ρ) = −iσ₂`, `cl(dρ/ρ) = −iσ₃`.
//!   With the volume form `−ρ⁻³ dρ∧dx∧dy` this normalises `cl(Vol) = +1`.
//!
//! Everything is `Copy` and allocation-free; these types sit in the inner
//! loop of every quadrature in the crate.

use num_complex::Complex64;
use thiserror::Error;

/// Complex scalar used everywhere.
pub type C = Complex64;

/// Shorthand constructor for a complex scalar.
#[inline]
pub fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

/// Largest magnitude accepted as "exactly zero" in algebraic identities.
///
/// Identities at this tolerance hold to rounding error of a handful of
/// 2×2 multiplications; anything above it indicates a convention mismatch,
/// not noise.
pub const EPS_ALG: f64 = 1e-12;

const C_ZERO: C = Complex64 { re: 0.0, im: 0.0 };
const C_ONE: C = Complex64 { re: 1.0, im: 0.0 };
const C_I: C = Complex64 { re: 0.0, im: 1.0 };

/// Complex 2×2 matrix, row-major entries `m11 m12 / m21 m22`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2 {
    pub m11: C,
    pub m12: C,
    pub m21: C,
    pub m22: C,
}

impl Mat2 {
    pub const ZERO: Mat2 = Mat2 {
        m11: C_ZERO,
        m12: C_ZERO,
        m21: C_ZERO,
        m22: C_ZERO,
    };

    pub const ID: Mat2 = Mat2 {
        m11: C_ONE,
        m12: C_ZERO,
        m21: C_ZERO,
        m22: C_ONE,
    };

    /// `σ₁ = [[0, 1], [1, 0]]`.
    pub const SIGMA1: Mat2 = Mat2 {
        m11: C_ZERO,
        m12: C_ONE,
        m21: C_ONE,
        m22: C_ZERO,
    };

    /// `σ₂ = [[0, −i], [i, 0]]`.
    pub const SIGMA2: Mat2 = Mat2 {
        m11: C_ZERO,
        m12: Complex64 { re: 0.0, im: -1.0 },
        m21: C_I,
        m22: C_ZERO,
    };

    /// `σ₃ = [[1, 0], [0, −1]]`.
    pub const SIGMA3: Mat2 = Mat2 {
        m11: C_ONE,
        m12: C_ZERO,
        m21: C_ZERO,
        m22: Complex64 { re: -1.0, im: 0.0 },
    };

    #[inline]
    pub fn new(m11: C, m12: C, m21: C, m22: C) -> Mat2 {
        Mat2 { m11, m12, m21, m22 }
    }

    #[inline]
    pub fn diag(a: C, b: C) -> Mat2 {
        Mat2::new(a, C_ZERO, C_ZERO, b)
    }

    #[inline]
    pub fn trace(&self) -> C {
        self.m11 + self.m22
    }

    #[inline]
    pub fn det(&self) -> C {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    /// Conjugate transpose.
    #[inline]
    pub fn dagger(&self) -> Mat2 {
        Mat2::new(
            self.m11.conj(),
            self.m21.conj(),
            self.m12.conj(),
            self.m22.conj(),
        )
    }

    /// Commutator `[self, other] = self·other − other·self`.
    #[inline]
    pub fn comm(&self, other: &Mat2) -> Mat2 {
        *self * *other - *other * *self
    }

    /// Scale by a complex scalar.
    #[inline]
    pub fn scale(&self, z: C) -> Mat2 {
        Mat2::new(self.m11 * z, self.m12 * z, self.m21 * z, self.m22 * z)
    }

    /// Largest entry modulus; the matrix norm used by every residual check.
    #[inline]
    pub fn max_abs(&self) -> f64 {
        self.m11
            .norm()
            .max(self.m12.norm())
            .max(self.m21.norm())
            .max(self.m22.norm())
    }

    /// `|Tr M|` — zero exactly on the traceless slice.
    #[inline]
    pub fn traceless_defect(&self) -> f64 {
        self.trace().norm()
    }

    /// `max |M + M†|` — zero exactly on anti-hermitian matrices.
    #[inline]
    pub fn antihermitian_defect(&self) -> f64 {
        (*self + self.dagger()).max_abs()
    }

    /// Coefficients `(c₀, [c₁, c₂, c₃])` in `M = c₀·1 + Σ c_k σ_k`.
    ///
    /// Inverse of the Pauli expansion: `c₀ = Tr(M)/2`, `c_k = Tr(M σ_k)/2`.
    pub fn pauli_coefficients(&self) -> (C, [C; 3]) {
        let half = c(0.5, 0.0);
        let c0 = self.trace() * half;
        let c1 = (*self * Mat2::SIGMA1).trace() * half;
        let c2 = (*self * Mat2::SIGMA2).trace() * half;
        let c3 = (*self * Mat2::SIGMA3).trace() * half;
        (c0, [c1, c2, c3])
    }

    /// Apply to a column spinor.
    #[inline]
    pub fn mul_spinor(&self, s: &Spinor) -> Spinor {
        Spinor {
            s1: self.m11 * s.s1 + self.m12 * s.s2,
            s2: self.m21 * s.s1 + self.m22 * s.s2,
        }
    }
}

/// `σ_k` for `k ∈ {1, 2, 3}`.
pub fn pauli(k: usize) -> Mat2 {
    match k {
        1 => Mat2::SIGMA1,
        2 => Mat2::SIGMA2,
        3 => Mat2::SIGMA3,
        _ => panic!("pauli index {k} out of range 1..=3"),
    }
}

impl std::ops::Add for Mat2 {
    type Output = Mat2;
    #[inline]
    fn add(self, rhs: Mat2) -> Mat2 {
        Mat2::new(
            self.m11 + rhs.m11,
            self.m12 + rhs.m12,
            self.m21 + rhs.m21,
            self.m22 + rhs.m22,
        )
    }
}

impl std::ops::Sub for Mat2 {
    type Output = Mat2;
    #[inline]
    fn sub(self, rhs: Mat2) -> Mat2 {
        Mat2::new(
            self.m11 - rhs.m11,
            self.m12 - rhs.m12,
            self.m21 - rhs.m21,
            self.m22 - rhs.m22,
        )
    }
}

impl std::ops::Neg for Mat2 {
    type Output = Mat2;
    #[inline]
    fn neg(self) -> Mat2 {
        Mat2::new(-self.m11, -self.m12, -self.m21, -self.m22)
    }
}

impl std::ops::Mul for Mat2 {
    type Output = Mat2;
    #[inline]
    fn mul(self, rhs: Mat2) -> Mat2 {
        Mat2::new(
            self.m11 * rhs.m11 + self.m12 * rhs.m21,
            self.m11 * rhs.m12 + self.m12 * rhs.m22,
            self.m21 * rhs.m11 + self.m22 * rhs.m21,
            self.m21 * rhs.m12 + self.m22 * rhs.m22,
        )
    }
}

impl std::ops::Mul<f64> for Mat2 {
    type Output = Mat2;
    #[inline]
    fn mul(self, rhs: f64) -> Mat2 {
        self.scale(c(rhs, 0.0))
    }
}

impl std::ops::Mul<C> for Mat2 {
    type Output = Mat2;
    #[inline]
    fn mul(self, rhs: C) -> Mat2 {
        self.scale(rhs)
    }
}

/// Column spinor with complex scalar entries.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Spinor {
    pub s1: C,
    pub s2: C,
}

impl Spinor {
    pub const ZERO: Spinor = Spinor {
        s1: C_ZERO,
        s2: C_ZERO,
    };

    #[inline]
    pub fn new(s1: C, s2: C) -> Spinor {
        Spinor { s1, s2 }
    }

    #[inline]
    pub fn scale(&self, z: C) -> Spinor {
        Spinor::new(self.s1 * z, self.s2 * z)
    }

    #[inline]
    pub fn max_abs(&self) -> f64 {
        self.s1.norm().max(self.s2.norm())
    }

    /// Hermitian norm squared `|s₁|² + |s₂|²`.
    #[inline]
    pub fn norm_sq(&self) -> f64 {
        self.s1.norm_sqr() + self.s2.norm_sqr()
    }
}

impl std::ops::Add for Spinor {
    type Output = Spinor;
    #[inline]
    fn add(self, rhs: Spinor) -> Spinor {
        Spinor::new(self.s1 + rhs.s1, self.s2 + rhs.s2)
    }
}

impl std::ops::Sub for Spinor {
    type Output = Spinor;
    #[inline]
    fn sub(self, rhs: Spinor) -> Spinor {
        Spinor::new(self.s1 - rhs.s1, self.s2 - rhs.s2)
    }
}

impl std::ops::Neg for Spinor {
    type Output = Spinor;
    #[inline]
    fn neg(self) -> Spinor {
        Spinor::new(-self.s1, -self.s2)
    }
}

impl std::ops::Mul<f64> for Spinor {
    type Output = Spinor;
    #[inline]
    fn mul(self, rhs: f64) -> Spinor {
        self.scale(c(rhs, 0.0))
    }
}

/// Row covector; `apply` contracts with a column spinor.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoSpinor {
    pub c1: C,
    pub c2: C,
}

impl CoSpinor {
    #[inline]
    pub fn apply(&self, s: &Spinor) -> C {
        self.c1 * s.s1 + self.c2 * s.s2
    }
}

/// Symplectic pairing `(s, t) = s₁t₂ − s₂t₁`.
#[inline]
pub fn pair(s: &Spinor, t: &Spinor) -> C {
    s.s1 * t.s2 - s.s2 * t.s1
}

/// The covector `s∗` with `s∗(t) = (s, t)`.
#[inline]
pub fn dual(s: &Spinor) -> CoSpinor {
    CoSpinor {
        c1: -s.s2,
        c2: s.s1,
    }
}

/// Quaternionic conjugation `s ↦ (conj s₂, −conj s₁)`; squares to `−1`.
#[inline]
pub fn conj_spinor(s: &Spinor) -> Spinor {
    Spinor::new(s.s2.conj(), -s.s1.conj())
}

/// Hermitian inner product `⟨s, t⟩ = (s̄, t) = conj(s₁)t₁ + conj(s₂)t₂`.
#[inline]
pub fn hermitian_inner(s: &Spinor, t: &Spinor) -> C {
    s.s1.conj() * t.s1 + s.s2.conj() * t.s2
}

/// Spinor with gauge-algebra-valued entries: `ν = (ν₁, ν₂)`, each a [`Mat2`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GaugeSpinor {
    pub s1: Mat2,
    pub s2: Mat2,
}

impl GaugeSpinor {
    pub const ZERO: GaugeSpinor = GaugeSpinor {
        s1: Mat2::ZERO,
        s2: Mat2::ZERO,
    };

    #[inline]
    pub fn new(s1: Mat2, s2: Mat2) -> GaugeSpinor {
        GaugeSpinor { s1, s2 }
    }

    #[inline]
    pub fn scale(&self, z: C) -> GaugeSpinor {
        GaugeSpinor::new(self.s1.scale(z), self.s2.scale(z))
    }

    #[inline]
    pub fn max_abs(&self) -> f64 {
        self.s1.max_abs().max(self.s2.max_abs())
    }
}

impl std::ops::Add for GaugeSpinor {
    type Output = GaugeSpinor;
    #[inline]
    fn add(self, rhs: GaugeSpinor) -> GaugeSpinor {
        GaugeSpinor::new(self.s1 + rhs.s1, self.s2 + rhs.s2)
    }
}

impl std::ops::Sub for GaugeSpinor {
    type Output = GaugeSpinor;
    #[inline]
    fn sub(self, rhs: GaugeSpinor) -> GaugeSpinor {
        GaugeSpinor::new(self.s1 - rhs.s1, self.s2 - rhs.s2)
    }
}

impl std::ops::Neg for GaugeSpinor {
    type Output = GaugeSpinor;
    #[inline]
    fn neg(self) -> GaugeSpinor {
        GaugeSpinor::new(-self.s1, -self.s2)
    }
}

impl std::ops::Mul<f64> for GaugeSpinor {
    type Output = GaugeSpinor;
    #[inline]
    fn mul(self, rhs: f64) -> GaugeSpinor {
        self.scale(c(rhs, 0.0))
    }
}

/// Gauge-valued symplectic pairing `(u, v) = u₁v₂ − u₂v₁` (matrix products,
/// order preserved).
#[inline]
pub fn pair_gauge(u: &GaugeSpinor, v: &GaugeSpinor) -> Mat2 {
    u.s1 * v.s2 - u.s2 * v.s1
}

/// `Tr (u, v)` — the scalar pairing entering the symplectic form integrand.
#[inline]
pub fn trace_pair(u: &GaugeSpinor, v: &GaugeSpinor) -> C {
    pair_gauge(u, v).trace()
}

/// Quaternionic conjugation extended to gauge-valued spinors:
/// `conj(s ⊗ υ) = conj(s) ⊗ υ` on decomposables with `υ` anti-hermitian
/// traceless, which in components reads `ν ↦ (−ν₂†, ν₁†)`.
///
/// Correct only when the gauge parts lie in the real span of `{iσ_k}`;
/// all spinors produced from curvature and Higgs data satisfy this.
#[inline]
pub fn conj_gauge(v: &GaugeSpinor) -> GaugeSpinor {
    GaugeSpinor::new(-v.s2.dagger(), v.s1.dagger())
}

/// Act with a scalar spin matrix on the spinor index of a gauge spinor.
#[inline]
pub fn spin_act(m: &Mat2, v: &GaugeSpinor) -> GaugeSpinor {
    GaugeSpinor::new(
        v.s1.scale(m.m11) + v.s2.scale(m.m12),
        v.s1.scale(m.m21) + v.s2.scale(m.m22),
    )
}

/// Endomorphism of the spinor bundle with gauge-algebra coefficients:
/// a 2×2 block matrix of [`Mat2`]s, spin indices outer, gauge inner.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinEndo {
    pub b: [[Mat2; 2]; 2],
}

impl SpinEndo {
    pub const ZERO: SpinEndo = SpinEndo {
        b: [[Mat2::ZERO, Mat2::ZERO], [Mat2::ZERO, Mat2::ZERO]],
    };

    #[inline]
    pub fn scale(&self, z: C) -> SpinEndo {
        SpinEndo {
            b: [
                [self.b[0][0].scale(z), self.b[0][1].scale(z)],
                [self.b[1][0].scale(z), self.b[1][1].scale(z)],
            ],
        }
    }

    /// Partial trace over the spin index; a gauge-algebra element.
    #[inline]
    pub fn trace_spin(&self) -> Mat2 {
        self.b[0][0] + self.b[1][1]
    }

    /// Full trace (spin and gauge).
    #[inline]
    pub fn trace_full(&self) -> C {
        self.trace_spin().trace()
    }

    #[inline]
    pub fn max_abs(&self) -> f64 {
        self.b[0][0]
            .max_abs()
            .max(self.b[0][1].max_abs())
            .max(self.b[1][0].max_abs())
            .max(self.b[1][1].max_abs())
    }

    /// Apply to a scalar spinor, producing a gauge-valued spinor.
    #[inline]
    pub fn apply(&self, s: &Spinor) -> GaugeSpinor {
        GaugeSpinor::new(
            self.b[0][0].scale(s.s1) + self.b[0][1].scale(s.s2),
            self.b[1][0].scale(s.s1) + self.b[1][1].scale(s.s2),
        )
    }

    /// Compose on the right with a scalar spin endomorphism
    /// (`(E·m)ᵢⱼ = Σ_k Eᵢₖ m_kj`).
    #[inline]
    pub fn compose_spin(&self, m: &Mat2) -> SpinEndo {
        let e = &self.b;
        SpinEndo {
            b: [
                [
                    e[0][0].scale(m.m11) + e[0][1].scale(m.m21),
                    e[0][0].scale(m.m12) + e[0][1].scale(m.m22),
                ],
                [
                    e[1][0].scale(m.m11) + e[1][1].scale(m.m21),
                    e[1][0].scale(m.m12) + e[1][1].scale(m.m22),
                ],
            ],
        }
    }

    /// Multiply every block on the left by a gauge-algebra element.
    #[inline]
    pub fn gauge_mul_left(&self, m: &Mat2) -> SpinEndo {
        SpinEndo {
            b: [
                [*m * self.b[0][0], *m * self.b[0][1]],
                [*m * self.b[1][0], *m * self.b[1][1]],
            ],
        }
    }
}

impl std::ops::Add for SpinEndo {
    type Output = SpinEndo;
    #[inline]
    fn add(self, rhs: SpinEndo) -> SpinEndo {
        SpinEndo {
            b: [
                [self.b[0][0] + rhs.b[0][0], self.b[0][1] + rhs.b[0][1]],
                [self.b[1][0] + rhs.b[1][0], self.b[1][1] + rhs.b[1][1]],
            ],
        }
    }
}

impl std::ops::Sub for SpinEndo {
    type Output = SpinEndo;
    #[inline]
    fn sub(self, rhs: SpinEndo) -> SpinEndo {
        SpinEndo {
            b: [
                [self.b[0][0] - rhs.b[0][0], self.b[0][1] - rhs.b[0][1]],
                [self.b[1][0] - rhs.b[1][0], self.b[1][1] - rhs.b[1][1]],
            ],
        }
    }
}

impl std::ops::Neg for SpinEndo {
    type Output = SpinEndo;
    #[inline]
    fn neg(self) -> SpinEndo {
        SpinEndo::ZERO - self
    }
}

impl std::ops::Mul<f64> for SpinEndo {
    type Output = SpinEndo;
    #[inline]
    fn mul(self, rhs: f64) -> SpinEndo {
        self.scale(c(rhs, 0.0))
    }
}

/// Rank-one endomorphism `ν ⊗ w`, blocks `(ν ⊗ w)ᵢⱼ = νᵢ wⱼ`.
#[inline]
pub fn tensor(nu: &GaugeSpinor, w: &CoSpinor) -> SpinEndo {
    SpinEndo {
        b: [
            [nu.s1.scale(w.c1), nu.s1.scale(w.c2)],
            [nu.s2.scale(w.c1), nu.s2.scale(w.c2)],
        ],
    }
}

/// Scalar rank-one endomorphism `s ⊗ w` as a plain spin matrix.
#[inline]
pub fn tensor_scalar(s: &Spinor, w: &CoSpinor) -> Mat2 {
    Mat2::new(s.s1 * w.c1, s.s1 * w.c2, s.s2 * w.c1, s.s2 * w.c2)
}

/// Clifford image of a gauge-valued pair `(a, φ)` at height `ρ`:
///
/// ```text
/// | φ − iρ a_ρ         −iρ (a_x − i a_y) |
/// | −iρ (a_x + i a_y)   φ + iρ a_ρ       |
/// ```
///
/// `a = [a_x, a_y, a_ρ]` holds coordinate components of the 1-form.
#[inline]
pub fn cl(a: &[Mat2; 3], phi: &Mat2, rho: f64) -> SpinEndo {
    let ir = c(0.0, rho);
    let off_raw = a[0] - a[1].scale(C_I); // a_x − i a_y
    let off_raw2 = a[0] + a[1].scale(C_I); // a_x + i a_y
    SpinEndo {
        b: [
            [*phi - a[2].scale(ir), -(off_raw.scale(ir))],
            [-(off_raw2.scale(ir)), *phi + a[2].scale(ir)],
        ],
    }
}

/// Scalar-coefficient version of [`cl`], landing in plain spin matrices.
#[inline]
pub fn cl_scalar(a: &[C; 3], phi: C, rho: f64) -> Mat2 {
    let ir = c(0.0, rho);
    Mat2::new(
        phi - ir * a[2],
        -(ir * (a[0] - C_I * a[1])),
        -(ir * (a[0] + C_I * a[1])),
        phi + ir * a[2],
    )
}

/// Failure of [`decompose`]: the reference spinor pair is (numerically)
/// linearly dependent, so the rank-one expansion is not defined.
#[derive(Debug, Error)]
#[error("spinor pair is degenerate: |(ψ₁, ψ₂)| = {pairing_abs:.3e} < {threshold:.1e}")]
pub struct DegeneratePair {
    pub pairing_abs: f64,
    pub threshold: f64,
}

/// Expand a spin endomorphism over a reference spinor pair:
/// returns `(ν₁, ν₂)` with `E = ν₁ ⊗ ψ₁∗ + ν₂ ⊗ ψ₂∗`, i.e.
/// `ν₁ = E ψ₂ / (ψ₁, ψ₂)` and `ν₂ = −E ψ₁ / (ψ₁, ψ₂)`.
///
/// Fails when `|(ψ₁, ψ₂)|` is below [`EPS_ALG`] scaled to the spinor size.
pub fn decompose(
    e: &SpinEndo,
    psi1: &Spinor,
    psi2: &Spinor,
) -> Result<(GaugeSpinor, GaugeSpinor), DegeneratePair> {
    let pr = pair(psi1, psi2);
    let scale = psi1.max_abs().max(psi2.max_abs()).max(1.0);
    let threshold = EPS_ALG * scale * scale;
    if pr.norm() < threshold {
        return Err(DegeneratePair {
            pairing_abs: pr.norm(),
            threshold,
        });
    }
    let inv = C_ONE / pr;
    let nu1 = e.apply(psi2).scale(inv);
    let nu2 = e.apply(psi1).scale(-inv);
    Ok((nu1, nu2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
        match (i, j, k) {
            (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1.0,
            (3, 2, 1) | (1, 3, 2) | (2, 1, 3) => -1.0,
            _ => 0.0,
        }
    }

    #[test]
    fn pauli_products_follow_su2_multiplication() {
        for i in 1..=3 {
            for j in 1..=3 {
                let prod = pauli(i) * pauli(j);
                let mut expect = if i == j { Mat2::ID } else { Mat2::ZERO };
                for k in 1..=3 {
                    let eps = levi_civita(i, j, k);
                    if eps != 0.0 {
                        expect = expect + pauli(k).scale(c(0.0, eps));
                    }
                }
                assert!(
                    (prod - expect).max_abs() < EPS_ALG,
                    "σ_{i}σ_{j} deviates by {}",
                    (prod - expect).max_abs()
                );
            }
        }
    }

    #[test]
    fn pauli_matrices_are_hermitian_and_traceless() {
        for k in 1..=3 {
            let s = pauli(k);
            assert!((s - s.dagger()).max_abs() < EPS_ALG);
            assert!(s.traceless_defect() < EPS_ALG);
        }
    }

    #[test]
    fn clifford_volume_normalisation_is_plus_one() {
        // Coframe images: cl(dx/ρ) = −iσ₁ etc. The raw ordered product
        // cl(dx/ρ)cl(dy/ρ)cl(dρ/ρ) is −1; the oriented volume −ρ⁻³dρ∧dx∧dy
        // maps to −cl(dρ/ρ)cl(dx/ρ)cl(dy/ρ) = +1.
        let rho = 1.7;
        let ex = cl_scalar(
            &[c(1.0 / rho, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            c(0.0, 0.0),
            rho,
        );
        let ey = cl_scalar(
            &[c(0.0, 0.0), c(1.0 / rho, 0.0), c(0.0, 0.0)],
            c(0.0, 0.0),
            rho,
        );
        let erho = cl_scalar(
            &[c(0.0, 0.0), c(0.0, 0.0), c(1.0 / rho, 0.0)],
            c(0.0, 0.0),
            rho,
        );
        assert!((ex - Mat2::SIGMA1.scale(c(0.0, -1.0))).max_abs() < EPS_ALG);
        assert!((ey - Mat2::SIGMA2.scale(c(0.0, -1.0))).max_abs() < EPS_ALG);
        assert!((erho - Mat2::SIGMA3.scale(c(0.0, -1.0))).max_abs() < EPS_ALG);

        let raw = ex * ey * erho;
        assert!(
            (raw + Mat2::ID).max_abs() < EPS_ALG,
            "coframe product should be −1, got deviation {}",
            (raw + Mat2::ID).max_abs()
        );
        let vol = -(erho * ex * ey);
        assert!(
            (vol - Mat2::ID).max_abs() < EPS_ALG,
            "volume image should be +1, got deviation {}",
            (vol - Mat2::ID).max_abs()
        );
    }

    #[test]
    fn clifford_squares_give_minus_norm() {
        // cl(ξ)² = −|ξ|² for 1-forms; unit coframe entries square to −1.
        let rho = 0.35;
        for a in [
            [c(1.0 / rho, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(1.0 / rho, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(0.0, 0.0), c(1.0 / rho, 0.0)],
        ] {
            let m = cl_scalar(&a, c(0.0, 0.0), rho);
            assert!(((m * m) + Mat2::ID).max_abs() < EPS_ALG);
        }
    }

    #[test]
    fn dual_covector_reproduces_the_pairing() {
        let s = Spinor::new(c(0.3, -1.2), c(0.7, 0.4));
        let t = Spinor::new(c(-0.5, 0.8), c(1.1, -0.2));
        assert!((dual(&s).apply(&t) - pair(&s, &t)).norm() < EPS_ALG);
    }

    #[test]
    fn conjugation_squares_to_minus_one_and_gives_hermitian_norm() {
        let s = Spinor::new(c(0.9, 0.1), c(-0.4, 1.3));
        let cc = conj_spinor(&conj_spinor(&s));
        assert!((cc + s).max_abs() < EPS_ALG);
        let n = pair(&conj_spinor(&s), &s);
        assert!((n - c(s.norm_sq(), 0.0)).norm() < EPS_ALG);
        // ⟨s, t⟩ = (s̄, t)
        let t = Spinor::new(c(0.2, -0.6), c(0.5, 0.5));
        assert!((hermitian_inner(&s, &t) - pair(&conj_spinor(&s), &t)).norm() < EPS_ALG);
    }

    #[test]
    fn gauge_conjugation_matches_decomposable_conjugation() {
        // conj(s ⊗ iσ_k) must equal conj(s) ⊗ iσ_k.
        let s = Spinor::new(c(0.4, 0.9), c(-1.1, 0.3));
        for k in 1..=3 {
            let upsilon = pauli(k).scale(c(0.0, 1.0));
            let decomposable = GaugeSpinor::new(upsilon.scale(s.s1), upsilon.scale(s.s2));
            let sc = conj_spinor(&s);
            let expect = GaugeSpinor::new(upsilon.scale(sc.s1), upsilon.scale(sc.s2));
            assert!(
                (conj_gauge(&decomposable) - expect).max_abs() < EPS_ALG,
                "gauge conjugation mismatch on iσ_{k}"
            );
        }
    }

    #[test]
    fn rank_one_identity_closes_over_a_spinor_pair() {
        // ψ₂ ⊗ ψ₁∗ − ψ₁ ⊗ ψ₂∗ = (ψ₁, ψ₂)·Id, entrywise.
        let p1 = Spinor::new(c(0.8, -0.3), c(0.2, 0.5));
        let p2 = Spinor::new(c(-0.1, 0.7), c(1.2, -0.4));
        let lhs = tensor_scalar(&p2, &dual(&p1)) - tensor_scalar(&p1, &dual(&p2));
        let rhs = Mat2::ID.scale(pair(&p1, &p2));
        assert!((lhs - rhs).max_abs() < EPS_ALG);
    }

    #[test]
    fn decompose_rejects_degenerate_pairs() {
        let p1 = Spinor::new(c(1.0, 0.0), c(2.0, 0.0));
        let p2 = Spinor::new(c(0.5, 0.0), c(1.0, 0.0)); // parallel to p1
        let err = decompose(&SpinEndo::ZERO, &p1, &p2).unwrap_err();
        assert!(err.pairing_abs < err.threshold);
    }

    fn arb_c() -> impl Strategy<Value = C> {
        (-1.5f64..1.5, -1.5f64..1.5).prop_map(|(re, im)| c(re, im))
    }

    fn arb_mat2() -> impl Strategy<Value = Mat2> {
        (arb_c(), arb_c(), arb_c(), arb_c()).prop_map(|(a, b, cc, d)| Mat2::new(a, b, cc, d))
    }

    fn arb_spinor() -> impl Strategy<Value = Spinor> {
        (arb_c(), arb_c()).prop_map(|(a, b)| Spinor::new(a, b))
    }

    fn arb_gauge_spinor() -> impl Strategy<Value = GaugeSpinor> {
        (arb_mat2(), arb_mat2()).prop_map(|(a, b)| GaugeSpinor::new(a, b))
    }

    proptest! {
        #[test]
        fn pairing_is_antisymmetric(s in arb_spinor(), t in arb_spinor()) {
            prop_assert!((pair(&s, &t) + pair(&t, &s)).norm() < EPS_ALG);
        }

        #[test]
        fn pauli_expansion_roundtrips(m in arb_mat2()) {
            let (c0, ck) = m.pauli_coefficients();
            let rebuilt = Mat2::ID.scale(c0)
                + Mat2::SIGMA1.scale(ck[0])
                + Mat2::SIGMA2.scale(ck[1])
                + Mat2::SIGMA3.scale(ck[2]);
            prop_assert!((rebuilt - m).max_abs() < 1e-10);
        }

        #[test]
        fn trace_of_commutator_vanishes(a in arb_mat2(), b in arb_mat2()) {
            prop_assert!(a.comm(&b).traceless_defect() < 1e-10);
        }

        #[test]
        fn decompose_inverts_rank_one_expansion(
            n1 in arb_gauge_spinor(),
            n2 in arb_gauge_spinor(),
            p1 in arb_spinor(),
            p2 in arb_spinor(),
        ) {
            prop_assume!(pair(&p1, &p2).norm() > 1e-2);
            let e = tensor(&n1, &dual(&p1)) + tensor(&n2, &dual(&p2));
            let (r1, r2) = decompose(&e, &p1, &p2).unwrap();
            let scale = n1.max_abs().max(n2.max_abs()).max(1.0);
            prop_assert!((r1 - n1).max_abs() < 1e-8 * scale);
            prop_assert!((r2 - n2).max_abs() < 1e-8 * scale);
        }

        #[test]
        fn spin_endo_apply_matches_tensor_contraction(
            n in arb_gauge_spinor(),
            w in arb_spinor(),
            s in arb_spinor(),
        ) {
            // (ν ⊗ w∗)(s) = ν · w∗(s)
            let e = tensor(&n, &dual(&w));
            let direct = n.scale(dual(&w).apply(&s));
            prop_assert!((e.apply(&s) - direct).max_abs() < 1e-10);
        }

        #[test]
        fn clifford_map_is_linear(
            a in prop::array::uniform3(arb_mat2()),
            b in prop::array::uniform3(arb_mat2()),
            pa in arb_mat2(),
            pb in arb_mat2(),
        ) {
            let rho = 0.9;
            let sum = [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
            let lhs = cl(&sum, &(pa + pb), rho);
            let rhs = cl(&a, &pa, rho) + cl(&b, &pb, rho);
            prop_assert!((lhs - rhs).max_abs() < 1e-10);
        }
    }

    #[test]
    fn clifford_block_layout_matches_component_formula() {
        let rho = 2.0;
        let a = [
            Mat2::SIGMA1.scale(c(0.3, 0.1)),
            Mat2::SIGMA2.scale(c(-0.2, 0.4)),
            Mat2::SIGMA3.scale(c(0.5, -0.6)),
        ];
        let phi = Mat2::SIGMA3.scale(c(0.0, 0.7));
        let e = cl(&a, &phi, rho);
        let ir = c(0.0, rho);
        assert!((e.b[0][0] - (phi - a[2].scale(ir))).max_abs() < EPS_ALG);
        assert!((e.b[1][1] - (phi + a[2].scale(ir))).max_abs() < EPS_ALG);
        let off = a[0] - a[1].scale(c(0.0, 1.0));
        assert!((e.b[0][1] + off.scale(ir)).max_abs() < EPS_ALG);
        let off2 = a[0] + a[1].scale(c(0.0, 1.0));
        assert!((e.b[1][0] + off2.scale(ir)).max_abs() < EPS_ALG);
        // Scalar version agrees blockwise on scalar input.
        let sa = [c(0.3, 0.0), c(-0.1, 0.2), c(0.8, -0.5)];
        let sphi = c(0.2, 0.9);
        let m = cl_scalar(&sa, sphi, rho);
        let lifted = cl(
            &[
                Mat2::ID.scale(sa[0]),
                Mat2::ID.scale(sa[1]),
                Mat2::ID.scale(sa[2]),
            ],
            &Mat2::ID.scale(sphi),
            rho,
        );
        assert!((lifted.b[0][0] - Mat2::ID.scale(m.m11)).max_abs() < EPS_ALG);
        assert!((lifted.b[0][1] - Mat2::ID.scale(m.m12)).max_abs() < EPS_ALG);
        assert!((lifted.b[1][0] - Mat2::ID.scale(m.m21)).max_abs() < EPS_ALG);
        assert!((lifted.b[1][1] - Mat2::ID.scale(m.m22)).max_abs() < EPS_ALG);
    }
}
