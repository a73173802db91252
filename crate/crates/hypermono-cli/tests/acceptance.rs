//! End-to-end acceptance gate for the headline numbers: the energy,
//! the symplectic pairing, the moduli Gram matrix, the Chern–Simons
//! functional, the residual and identity suites, the index polynomial,
//! framedness, and thread-count determinism.
//!
//! Each test prints a single `[PASS]`/`[FAIL]` line (visible with
//! `cargo test --test acceptance -- --nocapture`) and asserts it.

use std::f64::consts::PI;
use std::time::Instant;

use hypermono::algebra::c;
use hypermono::deformations::{eigenspinor, GaugeGenerator};
use hypermono::integrate::{
    chern_simons, cs_rate, energy, equivariant_index, framing_integral, gram_matrix, omega_pair,
    QuadratureSpec,
};
use hypermono::monopole::{DyonGauge, Monopole};
use hypermono::verify::{self, CheckResult, SuiteParams};

/// Reference per-axis resolution for the quadrature-based gates.
const NODES: usize = 64;

fn gate(label: &str, pass: bool, detail: &str) {
    let tag = if pass { "PASS" } else { "FAIL" };
    println!("[{tag}] {label}: {detail}");
    assert!(pass, "{label}: {detail}");
}

fn find<'a>(checks: &'a [CheckResult], name: &str) -> &'a CheckResult {
    checks
        .iter()
        .find(|c| c.name == name)
        .unwrap_or_else(|| panic!("check {name} missing from suite"))
}

#[test]
fn gate_1_total_energy() {
    let started = Instant::now();
    let cfg = Monopole::unit();
    let spec = QuadratureSpec::for_monopole(&cfg, NODES);
    let e = energy(&cfg, &spec).expect("energy quadrature");
    let secs = started.elapsed().as_secs_f64();
    let target = cfg.expected_energy();
    let rel = (e - target).abs() / target;
    gate(
        "total energy equals 2pi*n*p at 64^3 nodes in under a minute",
        rel < 1e-3 && secs < 60.0,
        &format!("value {e:.12}, rel {rel:.3e}, {secs:.2} s"),
    );
}

#[test]
fn gate_2_symplectic_pairing() {
    let cfg = Monopole::unit();
    let spec = QuadratureSpec::for_monopole(&cfg, NODES);
    let nu1 = |p| eigenspinor(&cfg, 1, p);
    let nu2 = |p| eigenspinor(&cfg, 2, p);
    let off = omega_pair(nu1, nu2, &spec).expect("pairing quadrature");
    let d1 = omega_pair(nu1, nu1, &spec).expect("pairing quadrature");
    let d2 = omega_pair(nu2, nu2, &spec).expect("pairing quadrature");
    let target = cfg.expected_energy();
    let rel = (off - c(target, 0.0)).norm() / target;
    let diag = d1.norm().max(d2.norm());
    gate(
        "omega(nu1,nu2) equals 2pi*n*p and omega(nu,nu) vanishes",
        rel < 1e-3 && diag < 1e-3,
        &format!("off-diagonal {off:.9}, rel {rel:.3e}, max diagonal {diag:.3e}"),
    );
}

#[test]
fn gate_3_gram_matrix() {
    let cfg = Monopole::unit();
    let spec = QuadratureSpec::for_monopole(&cfg, NODES);
    let g = gram_matrix(&cfg, &spec).expect("gram quadrature");
    let target = cfg.expected_energy();
    let dev = g.max_deviation_from(target);
    let imag = g
        .direct
        .iter()
        .flatten()
        .map(|v| v.im.abs())
        .fold(0.0f64, f64::max);
    let gap = g.route_disagreement();
    gate(
        "gram matrix equals 2pi*n*p times the identity via both routes",
        dev < 1e-3 * target && imag < 1e-3 * target && gap < 2e-3 * target,
        &format!("deviation {dev:.3e}, imaginary {imag:.3e}, route gap {gap:.3e}"),
    );
}

#[test]
fn gate_4_chern_simons() {
    let cfg = Monopole::unit();
    let spec = QuadratureSpec::for_monopole(&cfg, NODES);
    let s = 0.1;
    let dyon = DyonGauge::new(&cfg, s);
    let rate_target = -2.0 * cfg.expected_energy();
    let rate = cs_rate(&cfg, &spec).expect("rate quadrature");
    let rel_rate = (rate - rate_target).abs() / rate_target.abs();
    let forward = chern_simons(&cfg, &dyon, &spec).expect("cs quadrature");
    let backward = chern_simons(&dyon, &cfg, &spec).expect("cs quadrature");
    let cs_target = rate_target * s;
    let rel_cs = (forward.total - cs_target).abs() / cs_target.abs();
    let anti = (forward.total + backward.total).abs();
    gate(
        "chern-simons rate is -4pi*n*p, functional matches at s=0.1, antisymmetric",
        rel_rate < 1e-3 && rel_cs < 5e-3 && anti < 1e-3,
        &format!(
            "rate {rate:.9} (rel {rel_rate:.3e}), cs {:.9} (rel {rel_cs:.3e}), antisymmetry {anti:.3e}",
            forward.total
        ),
    );
}

#[test]
fn gate_5_residual_suites() {
    let params = SuiteParams {
        h: 1e-4,
        points: 10,
        seed: 42,
    };
    let mono = verify::suite_monopole(&params);
    let defo = verify::suite_deformations(&params);
    let residuals = [
        find(&mono, "field-equation-residual"),
        find(&defo, "linearised-equation-residual"),
        find(&defo, "killing-spinor-residual"),
        find(&defo, "dirac-eigenvalue-residual"),
        find(&defo, "eigen-equation-residual"),
        find(&defo, "gauge-fixing-residual"),
    ];
    let orders = [
        find(&mono, "field-equation-order"),
        find(&defo, "linearised-equation-order"),
        find(&defo, "killing-spinor-order"),
        find(&defo, "eigen-equation-order"),
        find(&defo, "gauge-fixing-order"),
    ];
    let worst = residuals.iter().map(|c| c.value).fold(0.0f64, f64::max);
    let slowest = orders.iter().map(|c| c.value).fold(f64::INFINITY, f64::min);
    let pass = residuals.iter().all(|c| c.pass && c.tolerance <= 1e-5)
        && orders.iter().all(|c| c.pass && c.tolerance >= 1.7);
    gate(
        "all equation residuals stay below 1e-5 and converge at order >= 1.7",
        pass,
        &format!("worst residual {worst:.3e}, slowest order {slowest:.3}"),
    );
}

#[test]
fn gate_6_exact_identities() {
    // These run on at least 100 seeded points inside the suite.
    let params = SuiteParams {
        h: 1e-4,
        points: 10,
        seed: 42,
    };
    let defo = verify::suite_deformations(&params);
    let identities = [
        find(&defo, "gauge-action-rank-one"),
        find(&defo, "rotation-gauge-identity"),
        find(&defo, "boost-split-identity"),
        find(&defo, "tangent-decomposition"),
        find(&defo, "complex-structure-squares"),
        find(&defo, "spinor-pair-normalisation"),
    ];
    let worst = identities.iter().map(|c| c.value).fold(0.0f64, f64::max);
    let pass = identities.iter().all(|c| c.pass && c.tolerance <= 1e-10);
    gate(
        "structural identities hold to 1e-10 at 100 random points",
        pass,
        &format!("worst deviation {worst:.3e}"),
    );
}

#[test]
fn gate_7_index_polynomial() {
    type Case = (i64, i64, &'static [(i64, u64)]);
    let cases: [Case; 3] = [
        (1, 1, &[(-1, 2), (1, 2)]),
        (2, 2, &[(-3, 4), (-1, 4), (1, 4), (3, 4)]),
        (3, 1, &[(-1, 6), (1, 6)]),
    ];
    let mut pass = true;
    let mut rendered = Vec::new();
    for (n, p2, expected) in cases {
        let poly = equivariant_index(n, p2).expect("valid parameters");
        let dim = 2 * n as u64;
        pass &= poly.is_palindromic()
            && poly.term_count() == 2 * p2 as usize
            && poly.dim_plus() == dim
            && poly.dim_minus() == dim
            && expected.len() == poly.term_count()
            && expected.iter().all(|&(k, v)| poly.coeff(k) == v);
        rendered.push(format!("({n},{p2}): {poly}"));
    }
    gate(
        "index polynomials are palindromic with all coefficients 2n, exactly",
        pass,
        &rendered.join("; "),
    );
}

#[test]
fn gate_8_framedness() {
    let cfg = Monopole::unit();
    let spec = QuadratureSpec::for_monopole(&cfg, NODES);
    let bound = 1e-3 * 2.0 * PI;
    let mut worst = 0.0f64;
    for j in 1..=3 {
        let v =
            framing_integral(&cfg, GaugeGenerator::Framed(j), &spec).expect("framing quadrature");
        worst = worst.max(v.abs());
    }
    gate(
        "the three residual gauge rotations are framed",
        worst < bound,
        &format!("largest pairing {worst:.3e} against bound {bound:.3e}"),
    );
}

#[test]
fn gate_9_thread_count_determinism() {
    let runs: [&[&str]; 2] = [
        &["metric", "--nodes", "16", "--format", "json"],
        &["verify", "--suite", "deformations", "--format", "json"],
    ];
    let spawn = |threads: &str, args: &[&str]| -> Vec<u8> {
        let out = std::process::Command::new(env!("CARGO_BIN_EXE_hypermono"))
            .args(args)
            .env("HYPERMONO_THREADS", threads)
            .output()
            .expect("binary runs");
        out.stdout
    };
    let mut pass = true;
    for args in runs {
        let one = spawn("1", args);
        let four = spawn("4", args);
        pass &= !one.is_empty() && one == four;
    }
    gate(
        "JSON output is bitwise identical for HYPERMONO_THREADS in {1,4}",
        pass,
        "metric and verify reports compared byte for byte",
    );
}
