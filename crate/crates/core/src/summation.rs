//! Compensated summation over a fixed pairwise tree.
//!
//! The tree shape depends only on the input length, so the result is the
//! same bit pattern whether the halves run on one thread or many.

use num_complex::Complex64;

const LEAF: usize = 64;
const PARALLEL_MIN: usize = 1 << 13;

fn neumaier(xs: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for x in xs {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

pub fn tree_sum(xs: &[Complex64]) -> Complex64 {
    if xs.len() <= LEAF {
        return Complex64::new(neumaier(xs.iter().map(|z| z.re)), neumaier(xs.iter().map(|z| z.im)));
    }
    let (a, b) = xs.split_at(xs.len() / 2);
    let (x, y) = if xs.len() >= PARALLEL_MIN {
        rayon::join(|| tree_sum(a), || tree_sum(b))
    } else {
        (tree_sum(a), tree_sum(b))
    };
    x + y
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_is_compensated() {
        let xs = [1e16, 1.0, -1e16, 1.0].map(|x| Complex64::new(x, -x));
        assert_eq!(tree_sum(&xs), Complex64::new(2.0, -2.0));
    }

    #[test]
    fn independent_of_thread_count() {
        let xs: Vec<Complex64> = (0..100_000).map(|i| Complex64::new((i as f64).sin() / (1.0 + i as f64), (i as f64 * 0.37).cos())).collect();
        let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap().install(|| tree_sum(&xs));
        let many = rayon::ThreadPoolBuilder::new().num_threads(8).build().unwrap().install(|| tree_sum(&xs));
        assert_eq!(one.re.to_bits(), many.re.to_bits());
        assert_eq!(one.im.to_bits(), many.im.to_bits());
    }
}
