//! Seeded sampling of small rationals and an order-preserving batch map.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::Rational;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    /// `n/d` with `1 ≤ d ≤ max_den` and `lo ≤ n/d ≤ hi`.
    pub fn rational(&mut self, lo: i64, hi: i64, max_den: i64) -> Rational {
        let d = self.rng.gen_range(1..=max_den);
        let n = self.rng.gen_range(lo * d..=hi * d);
        Rational::new(n, d)
    }

    pub fn rational_triple(&mut self, lo: i64, hi: i64, max_den: i64) -> [Rational; 3] {
        [self.rational(lo, hi, max_den), self.rational(lo, hi, max_den), self.rational(lo, hi, max_den)]
    }
}

/// Maps `f` over `items`, in parallel when the `parallel` feature is on;
/// the output keeps input order either way.
pub fn batch_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(usize, &T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.par_iter().enumerate().map(|(i, x)| f(i, x)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().enumerate().map(|(i, x)| f(i, x)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_in_range() {
        let a: Vec<Rational> = {
            let mut s = Sampler::new(7);
            (0..50).map(|_| s.rational(-5, 5, 4)).collect()
        };
        let mut s = Sampler::new(7);
        let b: Vec<Rational> = (0..50).map(|_| s.rational(-5, 5, 4)).collect();
        assert_eq!(a, b);
        for r in &a {
            assert!(r.to_f64().abs() <= 5.0);
            assert!(r.denom() <= &4.into());
        }
    }

    #[test]
    fn batch_map_keeps_order() {
        let v: Vec<u32> = (0..100).collect();
        assert_eq!(batch_map(&v, |i, x| (i as u32) * 1000 + x), (0..100).map(|x| x * 1001).collect::<Vec<_>>());
    }
}
