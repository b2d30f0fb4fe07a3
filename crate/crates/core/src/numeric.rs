//! Small numerical kernels: bracketed searches, adaptive Simpson quadrature
//! and log-domain arithmetic.

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for the maximum of `f` on `[a, b]`.
///
/// Returns `(x_max, f_max)`. Stops when the bracket is narrower than `tol`.
/// Non-finite values are treated as `-inf`, so an infeasible side of the
/// bracket is abandoned.
pub fn golden_section_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let eval = |x: f64| {
        let v = f(x);
        if v.is_nan() {
            f64::NEG_INFINITY
        } else {
            v
        }
    };
    if b < a {
        std::mem::swap(&mut a, &mut b);
    }
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = eval(x1);
    let mut f2 = eval(x2);
    let mut iters = 0;
    while (b - a) > tol && iters < 200 {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = eval(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = eval(x1);
        }
        iters += 1;
    }
    if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Golden-section search for the minimum of `f` on `[a, b]`.
pub fn golden_section_min(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> (f64, f64) {
    let (x, v) = golden_section_max(
        |x| {
            let v = f(x);
            if v.is_nan() {
                f64::NEG_INFINITY
            } else {
                -v
            }
        },
        a,
        b,
        tol,
    );
    (x, -v)
}

/// Bisection for the unique crossing of a monotone predicate on `[lo, hi]`.
///
/// `below(x)` must be true on `[lo, x*)` and false on `(x*, hi]`.
pub fn bisect(mut below: impl FnMut(f64) -> bool, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if below(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `n` evenly spaced points on `[a, b]`, endpoints included.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => {
            let step = (b - a) / (n - 1) as f64;
            let mut v: Vec<f64> = (0..n).map(|i| a + step * i as f64).collect();
            v[n - 1] = b;
            v
        }
    }
}

/// Adaptive Simpson quadrature of `f` over `[a, b]` to absolute tolerance `tol`.
///
/// The integrand may fail; the first error aborts the integration.
pub fn adaptive_simpson<E>(
    f: &mut impl FnMut(f64) -> Result<f64, E>,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<f64, E> {
    if a == b {
        return Ok(0.0);
    }
    let fa = f(a)?;
    let fb = f(b)?;
    let m = 0.5 * (a + b);
    let fm = f(m)?;
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_step(f, a, b, fa, fm, fb, whole, tol, 50)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<E>(
    f: &mut impl FnMut(f64) -> Result<f64, E>,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64, E> {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm)?;
    let frm = f(rm)?;
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    Ok(simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)?
        + simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)?)
}

/// `log2(2^a + 2^b)` without overflow.
pub fn log2_add(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    if b == f64::NEG_INFINITY {
        return a;
    }
    let (hi, lo) = if a > b { (a, b) } else { (b, a) };
    hi + (lo - hi).exp2().ln_1p() / std::f64::consts::LN_2
}

/// `log2(sum 2^x_i)`.
pub fn log2_sum(terms: impl IntoIterator<Item = f64>) -> f64 {
    let terms: Vec<f64> = terms.into_iter().collect();
    let hi = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if hi == f64::NEG_INFINITY {
        return hi;
    }
    let s: f64 = terms.iter().map(|&t| (t - hi).exp2()).sum();
    hi + s.log2()
}

/// Table of `log2 C(n, k)` for fixed `n`, built by the multiplicative recurrence.
pub fn log2_binomial_row(n: usize) -> Vec<f64> {
    let mut row = Vec::with_capacity(n + 1);
    let mut acc = 0.0;
    row.push(0.0);
    for k in 0..n {
        acc += ((n - k) as f64).log2() - ((k + 1) as f64).log2();
        row.push(acc);
    }
    // The row is symmetric; mirroring removes the drift of the running sum.
    for k in 0..=n / 2 {
        row[n - k] = row[k];
    }
    row
}

/// `log2 C(n, k)`, `-inf` outside `0..=n`.
pub fn log2_binomial(n: i64, k: i64) -> f64 {
    if k < 0 || k > n || n < 0 {
        return f64::NEG_INFINITY;
    }
    let k = k.min(n - k);
    (0..k).map(|j| ((n - j) as f64).log2() - ((j + 1) as f64).log2()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_finds_parabola_vertex() {
        let (x, v) = golden_section_max(|x| -(x - 0.3) * (x - 0.3) + 2.0, 0.0, 1.0, 1e-10);
        assert!((x - 0.3).abs() < 1e-6);
        assert!((v - 2.0).abs() < 1e-12);
        let (x, _) = golden_section_min(|x| (x - 0.7).powi(2), 0.0, 1.0, 1e-10);
        assert!((x - 0.7).abs() < 1e-6);
    }

    #[test]
    fn golden_avoids_infeasible_side() {
        let f = |x: f64| if x > 0.6 { f64::NEG_INFINITY } else { x };
        let (x, _) = golden_section_max(f, 0.0, 1.0, 1e-12);
        assert!((x - 0.6).abs() < 1e-9);
    }

    #[test]
    fn simpson_integrates_smooth_and_sqrt_edge() {
        let mut f = |x: f64| Ok::<_, ()>(x.sin());
        let v = adaptive_simpson(&mut f, 0.0, std::f64::consts::PI, 1e-10).unwrap();
        assert!((v - 2.0).abs() < 1e-9);
        let mut g = |x: f64| Ok::<_, ()>((1.0 - x).max(0.0).sqrt());
        let v = adaptive_simpson(&mut g, 0.0, 1.0, 1e-10).unwrap();
        assert!((v - 2.0 / 3.0).abs() < 1e-8);
    }

    #[test]
    fn binomials_match_direct_products() {
        let row = log2_binomial_row(10);
        assert!((row[3] - 120f64.log2()).abs() < 1e-12);
        assert!((log2_binomial(10, 3) - 120f64.log2()).abs() < 1e-12);
        assert_eq!(log2_binomial(4, 5), f64::NEG_INFINITY);
        let big = log2_binomial_row(1000);
        assert!((big[500] - log2_binomial(1000, 500)).abs() < 1e-9);
    }

    #[test]
    fn log_sums() {
        assert!((log2_add(3.0, 3.0) - 4.0).abs() < 1e-12);
        assert!((log2_sum([1.0, 1.0, 2.0]) - 3.0).abs() < 1e-12);
        assert_eq!(log2_sum(Vec::<f64>::new()), f64::NEG_INFINITY);
        assert_eq!(log2_add(f64::NEG_INFINITY, 5.0), 5.0);
    }
}
