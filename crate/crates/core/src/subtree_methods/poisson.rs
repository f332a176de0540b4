use rand::Rng;

use super::check_lambda;
use crate::error::{Error, Result};
use crate::rng;

/// Poisson(`lambda`) draw by multiplying uniforms until the product drops
/// below `exp(-lambda)`, stopped early at `cap` and clamped to `[1, cap]`.
/// Costs O(result) uniforms.
pub fn sample_poisson<R: Rng + ?Sized>(lambda: f64, cap: usize, rng: &mut R) -> Result<usize> {
    check_lambda(lambda)?;
    if cap == 0 {
        return Err(Error::invalid("cap must be at least 1"));
    }
    let threshold = (-lambda).exp();
    let mut product = rng::unit(rng);
    let mut k = 0usize;
    while product > threshold {
        k += 1;
        if k >= cap {
            return Ok(cap);
        }
        product *= rng::unit(rng);
    }
    Ok(k.max(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_is_a_hard_ceiling() {
        let mut r = rng::from_seed(1);
        for _ in 0..1000 {
            assert_eq!(sample_poisson(400.0, 3, &mut r).unwrap(), 3);
        }
        for _ in 0..1000 {
            assert_eq!(sample_poisson(5.0, 1, &mut r).unwrap(), 1);
        }
    }

    #[test]
    fn zero_draws_become_one() {
        // exp(-0.01) ~ 0.99: nearly every raw draw is 0.
        let mut r = rng::from_seed(2);
        let draws: Vec<_> = (0..1000).map(|_| sample_poisson(0.01, 100, &mut r).unwrap()).collect();
        assert!(draws.iter().all(|&k| k >= 1));
        assert!(draws.iter().filter(|&&k| k == 1).count() > 980);
    }

    #[test]
    fn mean_matches_lambda() {
        let mut r = rng::from_seed(3);
        let total: usize = (0..100_000).map(|_| sample_poisson(2.7, 1_000_000, &mut r).unwrap()).sum();
        let mean = total as f64 / 100_000.0;
        // Clamping 0 -> 1 adds P(X = 0) = exp(-2.7) ~ 0.067 to the mean.
        assert!((2.6..=2.8).contains(&mean), "mean {mean}");
    }

    #[test]
    fn rejects_bad_arguments() {
        let mut r = rng::from_seed(4);
        assert!(sample_poisson(0.0, 5, &mut r).is_err());
        assert!(sample_poisson(1.0, 0, &mut r).is_err());
        assert!(sample_poisson(600.0, 5, &mut r).is_err());
    }
}
