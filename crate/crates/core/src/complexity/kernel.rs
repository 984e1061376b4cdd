//! Field dispatch for rank-type computations.
//!
//! A [`FieldTask`] is written once over a generic field. The kernel runs it
//! modulo two word-size primes and accepts the answer when both agree;
//! otherwise (or when a denominator vanishes mod p) it reruns over `Q`.
//! Every random draw happens before dispatch, so all fields see the same
//! integer data.

use crate::field::{prev_prime, Field, PrimeField, Rationals};
use crate::liealg::SubspaceBasis;
use crate::rng::SplitMix64;
use crate::Result;
use serde::Serialize;

/// Arithmetic used for rank decisions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Modular,
    Exact,
}

/// Which arithmetic produced an accepted answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    TwoPrimes,
    Exact,
}

pub trait FieldTask: Sync {
    type Out: PartialEq + Clone + Send;
    /// `None` if the input data cannot be reduced into `f`.
    fn run<F: Field>(&self, f: &F) -> Option<Self::Out>;
}

#[derive(Clone, Debug)]
pub struct RankKernel {
    pub strategy: Strategy,
    primes: [u64; 2],
}

const TOP: u64 = 1 << 61;

impl RankKernel {
    /// Two distinct primes below `2^61`, chosen from the seed.
    pub fn new(strategy: Strategy, seed: u64) -> Self {
        let mut r = SplitMix64::new(seed ^ 0x5DEE_CE66_D1CE_4E5B);
        let p = prev_prime(TOP - r.next_u64() % (1 << 24));
        let mut q = prev_prime(TOP - r.next_u64() % (1 << 24));
        while q == p {
            q = prev_prime(q);
        }
        RankKernel { strategy, primes: [p, q] }
    }

    pub fn modular(seed: u64) -> Self {
        Self::new(Strategy::Modular, seed)
    }

    pub fn exact() -> Self {
        RankKernel { strategy: Strategy::Exact, primes: [0, 0] }
    }

    pub fn primes(&self) -> [u64; 2] {
        self.primes
    }

    pub fn run<T: FieldTask>(&self, task: &T) -> Result<(T::Out, Certificate)> {
        if self.strategy == Strategy::Modular {
            let (a, b) = rayon::join(
                || task.run(&PrimeField::new(self.primes[0])),
                || task.run(&PrimeField::new(self.primes[1])),
            );
            if let (Some(a), Some(b)) = (a, b) {
                if a == b {
                    return Ok((a, Certificate::TwoPrimes));
                }
            }
        }
        task.run(&Rationals)
            .map(|o| (o, Certificate::Exact))
            .ok_or_else(|| crate::Error::Internal("exact task returned no value".into()))
    }

    /// `dim(a + b)`.
    pub fn subspace_sum_dim(&self, a: &SubspaceBasis, b: &SubspaceBasis) -> Result<usize> {
        Ok(self.run(&SumDim { a, b })?.0)
    }
}

struct SumDim<'a> {
    a: &'a SubspaceBasis,
    b: &'a SubspaceBasis,
}

impl FieldTask for SumDim<'_> {
    type Out = usize;
    fn run<F: Field>(&self, f: &F) -> Option<usize> {
        let mut rows = self.a.rows_in(f)?;
        rows.extend(self.b.rows_in(f)?);
        Some(crate::linalg::rank(f, rows, self.a.ambient_dim()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;
    use crate::linalg;
    use crate::rng::SplitMix64;

    struct Rank(Vec<Vec<i64>>, usize);
    impl FieldTask for Rank {
        type Out = usize;
        fn run<F: Field>(&self, f: &F) -> Option<usize> {
            let rows = self.0.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect();
            Some(linalg::rank(f, rows, self.1))
        }
    }

    #[test]
    fn primes_are_distinct_and_seeded() {
        let k = RankKernel::modular(3);
        assert_ne!(k.primes()[0], k.primes()[1]);
        assert_eq!(k.primes(), RankKernel::modular(3).primes());
        assert!(k.primes().iter().all(|&p| p < TOP && p > TOP - (1 << 25)));
    }

    #[test]
    fn modular_and_exact_agree_on_stacked_matrices() {
        let mut rng = SplitMix64::new(11);
        let k = RankKernel::modular(5);
        for case in 0..100 {
            let n = 2 + rng.below(7);
            let r = 1 + rng.below(n);
            // low-rank product plus stacked duplicates
            let a: Vec<Vec<i64>> = (0..n).map(|_| (0..r).map(|_| rng.range_i64(-9, 9)).collect()).collect();
            let b: Vec<Vec<i64>> = (0..r).map(|_| (0..n).map(|_| rng.range_i64(-9, 9)).collect()).collect();
            let mut m: Vec<Vec<i64>> = (0..n)
                .map(|i| (0..n).map(|j| (0..r).map(|t| a[i][t] * b[t][j]).sum()).collect())
                .collect();
            m.extend(m.clone().into_iter().take(case % 3));
            let exact = linalg::exact_rank(
                &m.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect::<Vec<_>>(),
            );
            let task = Rank(m, n);
            assert_eq!(k.run(&task).unwrap().0, exact);
            assert_eq!(RankKernel::exact().run(&task).unwrap().0, exact);
        }
    }
}
