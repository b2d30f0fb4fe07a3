//! Acceptance checks, one PASS/FAIL line each. Exits nonzero if any fails.

mod common;

use std::time::{Duration, Instant};

use bscrel::cli::RunConfig;
use bscrel::info::{entropy_inv, random_coding_exponent, Channel};
use bscrel::lab::{
    exact_error_probability, monte_carlo_error, pairwise_pi_log2, random_linear_code, slice_probabilities_from_distances,
    TiePolicy,
};
use bscrel::optim::{burnashev_b, find_r0, find_r1, reliability_bounds, tangency_check};
use bscrel::spectrum::{hahn_exponent_q, jpl_delta, phi, spectrum_mu};
use common::{check_code, random_code, HierarchyStats, SLACK};

// 40-digit evaluations of the closed forms at p = 0.08.
const ORACLE_R_X: f64 = 0.064_389_251_374;
const ORACLE_R1: f64 = 0.155_186_868_970_57;
const ORACLE_R_CRIT: f64 = 0.225_966_854_692;

struct Check {
    id: &'static str,
    pass: bool,
    detail: String,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

fn ch(p: f64) -> Channel {
    Channel::new(p).unwrap()
}

fn ac1() -> Check {
    let (r1, t) = timed(|| find_r1(&ch(0.04)).unwrap());
    Check {
        id: "AC1 R1 at p=0.04",
        pass: (r1 - 0.287).abs() <= 1e-3 && t < Duration::from_secs(1),
        detail: format!("r1 = {r1:.6}, target 0.287 +- 1e-3, {t:.2?}"),
    }
}

fn ac2() -> Check {
    let (rc, t) = timed(|| ch(0.05).constants().r_crit);
    Check {
        id: "AC2 R_crit at p=0.05",
        pass: (rc - 0.3056).abs() <= 1e-3 && t < Duration::from_secs(1),
        detail: format!("r_crit = {rc:.6}, target 0.3056 +- 1e-3, {t:.2?}"),
    }
}

fn ac3() -> Check {
    let c = ch(0.08);
    let cfg = RunConfig::default();
    let (b, t) = timed(|| reliability_bounds(&c, &cfg.grid().unwrap()).unwrap());
    let rep = b.report;
    let markers = [(rep.r_x, ORACLE_R_X), (rep.r1, ORACLE_R1), (rep.r_crit, ORACLE_R_CRIT)];
    let markers_ok = markers.iter().all(|(v, o)| (v - o).abs() <= 1e-3);
    let mut max_gap = 0.0f64;
    for (lo, up) in b.lower.points().iter().zip(b.upper.points()) {
        if lo.rate >= rep.r1 && lo.rate <= rep.r_crit {
            max_gap = max_gap.max(up.value - lo.value);
        }
    }
    let half = rep.r1 / 2.0;
    let gap_half = b.upper.value_at(half).unwrap() - b.lower.value_at(half).unwrap();
    Check {
        id: "AC3 bounds figure at p=0.08",
        pass: markers_ok && max_gap <= 1e-3 && gap_half > 0.01 && t < Duration::from_secs(30),
        detail: format!(
            "r_x = {:.5}, r1 = {:.5}, r_crit = {:.5}; max gap on [r1, r_crit] = {max_gap:.2e} (<= 1e-3); \
             gap at r1/2 = {gap_half:.5} (> 0.01); {t:.2?}",
            rep.r_x, rep.r1, rep.r_crit
        ),
    }
}

fn ac4() -> Check {
    let mut pass = true;
    let mut parts = Vec::new();
    for p in [0.08, 0.1] {
        let g = tangency_check(&ch(p)).unwrap();
        pass &= g.value_gap < 1e-4 && g.slope_gap < 1e-3;
        parts.push(format!("p={p}: value gap {:.1e}, slope gap {:.1e}", g.value_gap, g.slope_gap));
    }
    Check {
        id: "AC4 tangency at r1",
        pass,
        detail: parts.join("; "),
    }
}

fn ac5() -> Check {
    let (a1, a0) = (find_r1(&ch(0.046)).unwrap(), find_r0(&ch(0.046)).unwrap());
    let (b1, b0) = (find_r1(&ch(0.08)).unwrap(), find_r0(&ch(0.08)).unwrap());
    Check {
        id: "AC5 r1 versus r0",
        pass: a1 <= a0 + 1e-3 && b1 < b0,
        detail: format!("p=0.046: r1 = {a1:.5}, r0 = {a0:.5}; p=0.08: r1 = {b1:.5}, r0 = {b0:.5}"),
    }
}

fn ac6() -> Check {
    let mut stats = HierarchyStats::default();
    let (_, t) = timed(|| {
        for i in 0..1000 {
            check_code(&random_code(i), &mut stats);
        }
    });
    Check {
        id: "AC6 bound hierarchy",
        pass: stats.worst_slack >= -SLACK && stats.two_word_spread <= SLACK && t < Duration::from_secs(300),
        detail: format!(
            "{} codeword cases, worst slack {:.2e}; {} two-word cases, max relative spread {:.1e}; {t:.2?}",
            stats.cases, stats.worst_slack, stats.two_word_cases, stats.two_word_spread
        ),
    }
}

fn ac7() -> Check {
    let c = ch(0.08);
    let a1 = c.bhattacharyya();
    let mut worst_pi = 0.0f64;
    for w in [0.1, 0.3, 0.5] {
        let n = 1000;
        let l = pairwise_pi_log2((w * n as f64).round() as usize, &c, TiePolicy::Adversarial);
        worst_pi = worst_pi.max((l / n as f64 - w * a1).abs());
    }
    let n = 400;
    let s = slice_probabilities_from_distances(n, 140, 80, &c).unwrap();
    let slice_gap = (s.log2_p_slice / n as f64 - 0.35 * a1).abs();
    let b = burnashev_b(0.35, 0.2, &c).unwrap();
    let cond_gap = (s.log2_p_cond / n as f64 - b).abs();
    Check {
        id: "AC7 exponent convergence",
        pass: worst_pi <= 0.02 && slice_gap <= 0.03 && cond_gap <= 0.05,
        detail: format!(
            "pairwise gap {worst_pi:.4} (<= 0.02); slice gap {slice_gap:.4} (<= 0.03); conditional gap {cond_gap:.4} (<= 0.05)"
        ),
    }
}

fn ac8() -> Check {
    let mut mu_worst = 0.0f64;
    let mut q_worst = 0.0f64;
    for i in 0..20 {
        let r = 0.04 + 0.9 * i as f64 / 19.0;
        let a_min = entropy_inv(1.0 - r).unwrap();
        for j in 0..20 {
            let alpha = a_min + (0.5 - a_min) * (j as f64 + 0.5) / 20.0;
            mu_worst = mu_worst.max(spectrum_mu(r, alpha, 0.0).unwrap().abs());
            let tau = alpha * j as f64 / 20.0;
            let q = hahn_exponent_q(alpha, tau, 0.0).unwrap();
            q_worst = q_worst.max((q - bscrel::info::entropy(tau).unwrap()).abs());
        }
    }
    let c = ch(0.08);
    let b0 = [0.1, 0.35, 0.7].iter().map(|&w| burnashev_b(w, 0.0, &c).unwrap().abs()).fold(0.0, f64::max);
    let k = c.constants();
    let jump = |r: f64| {
        let lo = random_coding_exponent(r - 1e-12, &c).unwrap().value;
        let hi = random_coding_exponent(r + 1e-12, &c).unwrap().value;
        (lo - hi).abs()
    };
    let cont = jump(k.r_x).max(jump(k.r_crit));
    let jpl = [0.05, 0.15, 0.25, 0.30]
        .iter()
        .map(|&r| (jpl_delta(r).unwrap().delta_bar - phi(entropy_inv(r).unwrap())).abs())
        .fold(0.0, f64::max);
    Check {
        id: "AC8 analytic anchors",
        pass: mu_worst <= 1e-9 && q_worst == 0.0 && b0 <= 1e-9 && cont <= 1e-9 && jpl <= 1e-6,
        detail: format!(
            "|mu(R,a,0)| {mu_worst:.1e}; |q(a,t,0)-h(t)| {q_worst:.1e}; |B(w,0)| {b0:.1e}; \
             E0 jumps {cont:.1e}; JPL simple form {jpl:.1e}"
        ),
    }
}

fn ac9() -> Check {
    let code = random_linear_code(12, 5, 2024).unwrap();
    let c = ch(0.1);
    let exact = exact_error_probability(&code, &c, TiePolicy::Adversarial).unwrap().average;
    let a = monte_carlo_error(&code, &c, 100_000, 17, TiePolicy::Adversarial).unwrap();
    let b = monte_carlo_error(&code, &c, 100_000, 17, TiePolicy::Adversarial).unwrap();
    let identical = a.estimate.to_bits() == b.estimate.to_bits() && a.std_error.to_bits() == b.std_error.to_bits();
    Check {
        id: "AC9 Monte Carlo consistency",
        pass: (a.estimate - exact).abs() <= 3.0 * a.std_error && identical,
        detail: format!(
            "M = {}, estimate {:.5} +- {:.5}, exact {exact:.5}, repeat identical: {identical}",
            code.len(),
            a.estimate,
            a.std_error
        ),
    }
}

fn main() {
    let checks = [ac1(), ac2(), ac3(), ac4(), ac5(), ac6(), ac7(), ac8(), ac9()];
    let mut failed = 0;
    for c in &checks {
        println!("{} {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.id, c.detail);
        failed += !c.pass as usize;
    }
    println!("{} passed, {failed} failed", checks.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
