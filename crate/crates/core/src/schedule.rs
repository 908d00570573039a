//! Deterministic sample schedules.
//!
//! Default is the prime sequence 2, 3, 5, 7, …; setting
//! `CURVESIG_SAMPLE_SEED` replaces it with a seeded pseudorandom sequence of
//! distinct nonzero integers (used to shake out schedule dependence in
//! property testing). Consumers skip values that hit poles or degeneracy
//! loci.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::poly::Rat;

#[derive(Clone, Debug)]
pub enum Schedule {
    Primes,
    Seeded(u64),
}

impl Schedule {
    pub fn from_env() -> Schedule {
        match std::env::var("CURVESIG_SAMPLE_SEED") {
            Ok(s) => match s.trim().parse::<u64>() {
                Ok(seed) => Schedule::Seeded(seed),
                Err(_) => Schedule::Primes,
            },
            Err(_) => Schedule::Primes,
        }
    }

    /// The first `n` sample values of the schedule.
    pub fn values(&self, n: usize) -> Vec<Rat> {
        match self {
            Schedule::Primes => primes(n)
                .into_iter()
                .map(|p| Rat::from_integer(BigInt::from(p)))
                .collect(),
            Schedule::Seeded(seed) => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let mut seen = std::collections::BTreeSet::new();
                let mut out = Vec::with_capacity(n);
                while out.len() < n {
                    let v: i64 = rng.gen_range(-997..=997);
                    if v != 0 && seen.insert(v) {
                        out.push(Rat::from_integer(BigInt::from(v)));
                    }
                }
                out
            }
        }
    }

    /// Small-height values 0, 1, -1, 2, -2, … for free-parameter sampling.
    pub fn heights(n: usize) -> Vec<Rat> {
        let mut out = Vec::with_capacity(n);
        out.push(Rat::from_integer(BigInt::from(0)));
        let mut k = 1i64;
        while out.len() < n {
            out.push(Rat::from_integer(BigInt::from(k)));
            if out.len() < n {
                out.push(Rat::from_integer(BigInt::from(-k)));
            }
            k += 1;
        }
        out
    }
}

pub fn primes(n: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(n);
    let mut candidate = 2u64;
    while out.len() < n {
        if is_prime(candidate) {
            out.push(candidate);
        }
        candidate += 1;
    }
    out
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
