//! Small numeric helpers: deterministic summation and the parallelism switch.

use crate::real::Real;

/// Returns `false` when the `MW_NO_PARALLEL=1` environment switch is set.
///
/// Every parallel code path in the crate falls back to a sequential loop with
/// identical floating-point behaviour when this returns `false`.
pub fn parallel_enabled() -> bool {
    std::env::var_os("MW_NO_PARALLEL").is_none_or(|v| v != *"1")
}

/// Pairwise (cascade) sum: the result does not depend on chunking choices and
/// carries an O(log n) rounding-error bound instead of the naive O(n).
pub fn pairwise_sum<T: Real>(values: &[T]) -> T {
    match values.len() {
        0 => T::zero(),
        1 => values[0],
        2 => values[0] + values[1],
        n => {
            let (lo, hi) = values.split_at(n / 2);
            pairwise_sum(lo) + pairwise_sum(hi)
        }
    }
}

/// Max-abs and root-mean-square of a slice, as one deterministic pass.
pub fn max_and_rms<T: Real>(values: &[T]) -> (T, T) {
    if values.is_empty() {
        return (T::zero(), T::zero());
    }
    let mut max = T::zero();
    for &v in values {
        max = max.max(v.abs());
    }
    // Pairwise over squares keeps the RMS independent of evaluation order.
    let squares: Vec<T> = values.iter().map(|&v| v * v).collect();
    let mean = pairwise_sum(&squares) / T::from_usize(values.len()).unwrap();
    (max, mean.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn pairwise_matches_exact_small_sums() {
        let v: Vec<f64> = (1..=100).map(f64::from).collect();
        assert_eq!(pairwise_sum(&v), 5050.0);
    }

    #[test]
    fn max_and_rms_of_a_known_slice() {
        let (max, rms) = max_and_rms(&[3.0_f64, -4.0, 0.0]);
        assert_eq!(max, 4.0);
        assert_relative_eq!(rms, (25.0_f64 / 3.0).sqrt(), max_relative = 1e-15);
    }

    #[test]
    fn empty_slice_gives_zeros() {
        let (max, rms) = max_and_rms::<f64>(&[]);
        assert_eq!((max, rms), (0.0, 0.0));
    }
}
