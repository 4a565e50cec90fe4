//! Deterministic sample grids.

/// Relative inset used to keep grids off the ends of open intervals.
pub const INSET: f64 = 1e-6;

/// `n` evenly spaced points from `lo` to `hi` inclusive.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let step = (hi - lo) / (n - 1) as f64;
            (0..n)
                .map(|i| if i == n - 1 { hi } else { lo + step * i as f64 })
                .collect()
        }
    }
}

/// `n` evenly spaced points on `[a + ε, b − ε]` with `ε = (b − a)·INSET`.
pub fn inset_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    let eps = (b - a) * INSET;
    linspace(a + eps, b - eps, n)
}

/// Cell midpoints of `n` equal cells on `(a, b)`; never touches either end.
pub fn midpoint_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    let h = (b - a) / n as f64;
    (0..n).map(|i| a + h * (i as f64 + 0.5)).collect()
}

/// `n` logarithmically spaced points from `lo` to `hi` inclusive (`lo > 0`).
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let mut g: Vec<f64> = linspace(lo.ln(), hi.ln(), n).into_iter().map(f64::exp).collect();
    if let Some(first) = g.first_mut() {
        *first = lo;
    }
    if let Some(last) = g.last_mut() {
        *last = hi;
    }
    g
}
