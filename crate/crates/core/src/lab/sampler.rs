use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Seeded configuration stream. Each check draws from its own ChaCha
/// stream, so filtering checks does not shift the others.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConfigSampler {
    seed: u64,
}

/// Independent random source for one check.
#[derive(Debug, Clone)]
pub struct Stream {
    rng: ChaCha8Rng,
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

impl ConfigSampler {
    pub fn new(seed: u64) -> Self {
        ConfigSampler { seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream(&self, lemma_id: &str) -> Stream {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(fnv1a(lemma_id));
        Stream { rng }
    }
}

impl Stream {
    /// Uniform in `0..n` (`n > 0`).
    pub fn below(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        // rejection sampling keeps the draw unbiased
        let n64 = n as u64;
        let zone = u64::MAX - u64::MAX % n64;
        loop {
            let x = self.rng.next_u64();
            if x < zone {
                return (x % n64) as usize;
            }
        }
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.below(items.len())]
    }
}
