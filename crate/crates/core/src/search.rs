//! Sign scans and bisection on sampled functions.

/// Iteration cap for bisection; 200 halvings exhaust any double bracket.
const MAX_BISECTIONS: usize = 200;

/// Root of `f` in `[a, b]` to width `tol`, given `f(a)` and `f(b)` of opposite sign.
///
/// Returns `None` when the bracket is invalid or bisection fails to shrink it.
pub fn bisect<F>(mut f: F, mut a: f64, mut b: f64, tol: f64) -> Option<f64>
where
    F: FnMut(f64) -> f64,
{
    let mut fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Some(a);
    }
    if fb == 0.0 {
        return Some(b);
    }
    if !(fa.is_finite() && fb.is_finite()) || fa.signum() == fb.signum() {
        return None;
    }
    for _ in 0..MAX_BISECTIONS {
        if b - a <= tol {
            return Some(0.5 * (a + b));
        }
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            return Some(m);
        }
        if !fm.is_finite() {
            return None;
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    (b - a <= tol).then_some(0.5 * (a + b))
}

/// Index pairs `(i, j)`, `i < j`, of consecutive nonzero entries with opposite signs.
///
/// Exact zeros are skipped over, so `+, 0, −` counts once.
pub fn sign_change_indices(values: &[f64]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut last: Option<(usize, f64)> = None;
    for (i, &v) in values.iter().enumerate() {
        if v == 0.0 || v.is_nan() {
            continue;
        }
        if let Some((j, s)) = last {
            if s != v.signum() {
                out.push((j, i));
            }
        }
        last = Some((i, v.signum()));
    }
    out
}

/// Consecutive differences `values[i+1] − values[i]`.
pub fn differences(values: &[f64]) -> Vec<f64> {
    values.windows(2).map(|w| w[1] - w[0]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisection_finds_sqrt2() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-12).unwrap();
        assert!((r - std::f64::consts::SQRT_2).abs() < 1e-12);
        assert!(bisect(|x| x * x + 1.0, -1.0, 1.0, 1e-12).is_none());
    }

    #[test]
    fn sign_changes_skip_zeros() {
        assert_eq!(sign_change_indices(&[1.0, 0.0, -1.0, -2.0, 3.0]), vec![(0, 2), (3, 4)]);
        assert!(sign_change_indices(&[0.0, 0.0]).is_empty());
    }
}
