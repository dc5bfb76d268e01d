//! Deterministic frame source for benchmarks.

use alloc::vec::Vec;

use crate::frame::{Frame, FrameError};

pub const BENCH_SEED: u64 = 0x5EED;
const MULTIPLIER: u64 = 6364136223846793005;
const INCREMENT: u64 = 1442695040888963407;

/// 64-bit linear congruential generator.
#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    /// Advances the state and returns it.
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        self.state
    }

    /// Top 8 bits of the next state.
    pub fn next_byte(&mut self) -> u8 {
        (self.next_u64() >> 56) as u8
    }
}

/// Pseudo-random frame; one generator step per channel byte, row-major.
pub fn bench_frame(width: u32, height: u32) -> Result<Frame, FrameError> {
    if width == 0 || height == 0 {
        return Err(FrameError::ZeroArea);
    }
    let mut rng = Lcg::new(BENCH_SEED);
    let n = width as usize * height as usize * 3;
    let pixels: Vec<u8> = (0..n).map(|_| rng.next_byte()).collect();
    Frame::from_raw(width, height, pixels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_steps() {
        let mut rng = Lcg::new(BENCH_SEED);
        let s1 = 0x5EEDu64
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        assert_eq!(rng.next_u64(), s1);
        let s2 = s1
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        assert_eq!(rng.next_byte(), (s2 >> 56) as u8);
    }

    #[test]
    fn frames_are_reproducible() {
        let a = bench_frame(64, 64).unwrap();
        assert_eq!(a, bench_frame(64, 64).unwrap());
        assert_eq!(bench_frame(0, 3), Err(FrameError::ZeroArea));
        let distinct: alloc::collections::BTreeSet<u8> = a.as_bytes().iter().copied().collect();
        assert_eq!(distinct.len(), 256);
    }
}
