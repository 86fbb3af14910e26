use num_complex::Complex64;
use rayon::prelude::*;

use super::ZetaError;

/// Rectangular grid, imaginary part varying fastest. A single step puts the
/// point at the lower end.
pub fn grid(re: (f64, f64), im: (f64, f64), re_steps: usize, im_steps: usize) -> Vec<Complex64> {
    let axis = |(a, b): (f64, f64), k: usize| -> Vec<f64> {
        if k <= 1 {
            vec![a]
        } else {
            (0..k).map(|i| a + (b - a) * i as f64 / (k - 1) as f64).collect()
        }
    };
    let ys = axis(im, im_steps);
    axis(re, re_steps).into_iter().flat_map(|x| ys.iter().map(move |&y| Complex64::new(x, y))).collect()
}

/// Evaluate `f` at every point on a pool of `workers` threads. The output
/// keeps grid order.
pub fn scan<T, F>(points: &[Complex64], workers: usize, f: F) -> Result<Vec<T>, ZetaError>
where
    T: Send,
    F: Fn(Complex64) -> T + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| ZetaError::Input(format!("worker pool: {e}")))?;
    Ok(pool.install(|| points.par_iter().map(|&s| f(s)).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_order() {
        let g = grid((1.0, 2.0), (0.0, 1.0), 2, 3);
        assert_eq!(g.len(), 6);
        assert_eq!(g[1], Complex64::new(1.0, 0.5));
        assert_eq!(g[3], Complex64::new(2.0, 0.0));
        assert_eq!(scan(&g, 3, |s| s.re).unwrap(), vec![1.0, 1.0, 1.0, 2.0, 2.0, 2.0]);
    }
}
