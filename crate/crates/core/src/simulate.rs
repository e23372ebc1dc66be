//! Seeded random generation and the stochastic processes used by the script
//! language: white noise, uniform draws, AR(p) paths and random walks with
//! optional drift.
//!
//! The generator is SplitMix64 (Steele, Lea & Flood 2014): one 64-bit word of
//! state, fixed output function, identical streams on every platform. Normals
//! come from the Box-Muller transform evaluated with `libm`, so seeded runs
//! are bit-reproducible everywhere.

use alloc::vec::Vec;

use crate::math;

const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

/// Deterministic pseudo-random generator (SplitMix64 + Box-Muller).
#[derive(Debug, Clone)]
pub struct Rng {
    state: u64,
    seed: u64,
    spare_normal: Option<f64>,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng {
            state: seed,
            seed,
            spare_normal: None,
        }
    }

    /// Independent stream for parallel experiments: reseeds from the pair
    /// `(seed, stream)` so distinct indices give unrelated sequences.
    pub fn with_stream(seed: u64, stream: u64) -> Self {
        let mut mixer = Rng::new(seed ^ stream.wrapping_mul(GOLDEN_GAMMA));
        let s = mixer.next_u64();
        Rng::new(s)
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform draw on `[0, 1)` with 53 random bits.
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / 9_007_199_254_740_992.0)
    }

    /// Standard normal draw (Box-Muller, pairs cached).
    pub fn normal(&mut self) -> f64 {
        if let Some(z) = self.spare_normal.take() {
            return z;
        }
        // 1 - U in (0, 1] keeps the log argument away from zero.
        let u1 = 1.0 - self.uniform();
        let u2 = self.uniform();
        let r = math::sqrt(-2.0 * math::ln(u1));
        let theta = 2.0 * core::f64::consts::PI * u2;
        self.spare_normal = Some(r * math::sin(theta));
        r * math::cos(theta)
    }
}

/// `t` i.i.d. N(0, 1) draws.
pub fn normal_series(rng: &mut Rng, t: usize) -> Vec<f64> {
    (0..t).map(|_| rng.normal()).collect()
}

/// `t` i.i.d. U[0, 1) draws.
pub fn uniform_series(rng: &mut Rng, t: usize) -> Vec<f64> {
    (0..t).map(|_| rng.uniform()).collect()
}

/// AR(p) recursion `y_t = intercept + sum_i phi_i y_{t-i} + sigma e_t` with
/// zero pre-sample values. Explosive coefficient vectors are allowed.
pub fn ar_path(rng: &mut Rng, t: usize, phi: &[f64], intercept: f64, sigma: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(t);
    for _ in 0..t {
        let mut v = intercept + sigma * rng.normal();
        for (i, &p) in phi.iter().enumerate() {
            let idx = out.len() as isize - 1 - i as isize;
            if idx >= 0 {
                v += p * out[idx as usize];
            }
        }
        out.push(v);
    }
    out
}

/// Random walk `y_t = drift + y_{t-1} + e_t`, `y_0 = 0`, unit innovations.
pub fn random_walk(rng: &mut Rng, t: usize, drift: f64) -> Vec<f64> {
    ar_path(rng, t, &[1.0], drift, 1.0)
}
