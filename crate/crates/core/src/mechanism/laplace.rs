//! Inverse-CDF Laplace sampling.
//!
//! Stream contract: one draw consumes exactly one `f64` from the generator,
//! taken through [`rand::distributions::Open01`] and shifted to
//! `u ∈ (−1/2, 1/2)`.

use rand::distributions::Open01;
use rand::Rng;

use crate::error::{Error, Result};

/// Laplace quantile at `1/2 + u`: `−scale · sign(u) · ln(1 − 2|u|)`.
pub fn laplace_from_uniform(u: f64, scale: f64) -> f64 {
    debug_assert!(u.abs() < 0.5);
    -scale * u.signum() * (1.0 - 2.0 * u.abs()).ln()
}

pub fn laplace_sample<R: Rng + ?Sized>(scale: f64, rng: &mut R) -> Result<f64> {
    if !(scale > 0.0 && scale.is_finite()) {
        return Err(Error::InvalidParameter(format!("Laplace scale must be positive and finite, got {scale}")));
    }
    let v: f64 = rng.sample(Open01);
    Ok(laplace_from_uniform(v - 0.5, scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    #[test]
    fn median_is_zero() {
        assert_eq!(laplace_from_uniform(0.0, 3.0), 0.0);
    }

    #[test]
    fn quartiles() {
        // P(X ≤ −b ln 2) = 1/4.
        assert!((laplace_from_uniform(-0.25, 2.0) + 2.0 * 2f64.ln()).abs() < 1e-12);
        assert!((laplace_from_uniform(0.25, 2.0) - 2.0 * 2f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_scale() {
        let mut rng = ChaCha20Rng::seed_from_u64(0);
        assert!(laplace_sample(0.0, &mut rng).is_err());
        assert!(laplace_sample(-1.0, &mut rng).is_err());
        assert!(laplace_sample(f64::INFINITY, &mut rng).is_err());
    }

    #[test]
    fn seeded_stream_is_reproducible() {
        let a: Vec<f64> = {
            let mut rng = ChaCha20Rng::seed_from_u64(7);
            (0..5).map(|_| laplace_sample(1.0, &mut rng).unwrap()).collect()
        };
        let mut rng = ChaCha20Rng::seed_from_u64(7);
        let b: Vec<f64> = (0..5).map(|_| laplace_sample(1.0, &mut rng).unwrap()).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn moments() {
        let mut rng = ChaCha20Rng::seed_from_u64(11);
        let n = 1_000_000;
        let b = 2.5;
        let xs: Vec<f64> = (0..n).map(|_| laplace_sample(b, &mut rng).unwrap()).collect();
        let mean = xs.iter().sum::<f64>() / n as f64;
        let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n as f64;
        assert!(mean.abs() < 0.01 * b, "mean {mean}");
        assert!((var / (2.0 * b * b) - 1.0).abs() < 0.03, "var {var}");
    }
}
