//! Two-class Otsu binarization on luma.
//!
//! For a threshold `t`, class 0 holds luma `0..=t` and class 1 holds `t+1..=255`.
//! With `n0`, `n1` pixel counts, `s0` the class-0 luma sum, `s` the total sum and
//! `n = n0 + n1`, the between-class variance is proportional to
//!
//! ```text
//! (n * s0 - n0 * s)^2 / (n0 * n1)
//! ```
//!
//! which is compared across thresholds by cross-multiplication in integers, so
//! plateaus are detected exactly and resolved to the smallest `t`.

use crate::enhance::sampled_pixels;
use crate::enhance::wide::Wide;
use crate::frame::{Frame, GrayFrame};
use crate::gray::luma;
use crate::method::EnhanceParams;

/// 256-bin luma histogram over the `stride` sampling grid.
pub fn luma_histogram(frame: &Frame, stride: u32) -> [u64; 256] {
    let mut hist = [0u64; 256];
    for p in sampled_pixels(frame, stride) {
        hist[usize::from(luma(p))] += 1;
    }
    hist
}

/// Otsu level of a histogram. A histogram with a single occupied bin returns
/// that bin, so thresholding maps everything to black. An empty histogram returns 0.
pub fn otsu_level_from_histogram(hist: &[u64; 256]) -> u8 {
    let n: u128 = hist.iter().map(|&c| u128::from(c)).sum();
    let total: u128 = hist
        .iter()
        .enumerate()
        .map(|(v, &c)| v as u128 * u128::from(c))
        .sum();

    // (numerator, denominator) of the best score so far; zero until a split exists
    let mut best: Option<(u8, u128, u128)> = None;
    let mut n0: u128 = 0;
    let mut s0: u128 = 0;
    for t in 0..255usize {
        n0 += u128::from(hist[t]);
        s0 += t as u128 * u128::from(hist[t]);
        let n1 = n - n0;
        if n0 == 0 || n1 == 0 {
            continue;
        }
        // class 0 never has the larger mean, so n0*s >= n*s0
        let d = n0 * total - n * s0;
        let q = n0 * n1;
        let better = match best {
            None => d > 0,
            Some((_, bd, bq)) => Wide::product(&[d, d, bq]) > Wide::product(&[bd, bd, q]),
        };
        if better {
            best = Some((t as u8, d, q));
        }
    }
    match best {
        Some((t, _, _)) => t,
        None => hist.iter().position(|&c| c > 0).unwrap_or(0) as u8,
    }
}

/// Otsu level of a full luma plane.
pub fn otsu_level(gray: &GrayFrame) -> u8 {
    let mut hist = [0u64; 256];
    for &v in gray.as_bytes() {
        hist[usize::from(v)] += 1;
    }
    otsu_level_from_histogram(&hist)
}

/// Luma `<= t` maps to black, the rest to white. Statistics use the
/// `stats_subsample` grid; every pixel is classified.
pub fn otsu_threshold(frame: &Frame, params: &EnhanceParams) -> Frame {
    let t = otsu_level_from_histogram(&luma_histogram(frame, params.stats_subsample));
    frame.map_pixels(|p| {
        if luma(p) <= t {
            [0, 0, 0]
        } else {
            [255, 255, 255]
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;
    use num_rational::Ratio;
    use proptest::prelude::*;

    /// Literal between-class variance over every candidate threshold.
    fn brute_force(values: &[u8]) -> u8 {
        let n = values.len() as i128;
        let mut best: Option<(u8, Ratio<i128>)> = None;
        for t in 0..=254u8 {
            let c0: Vec<i128> = values
                .iter()
                .filter(|&&v| v <= t)
                .map(|&v| v.into())
                .collect();
            let c1: Vec<i128> = values
                .iter()
                .filter(|&&v| v > t)
                .map(|&v| v.into())
                .collect();
            let score = if c0.is_empty() || c1.is_empty() {
                Ratio::from_integer(0)
            } else {
                let w0 = Ratio::new(c0.len() as i128, n);
                let w1 = Ratio::new(c1.len() as i128, n);
                let m0 = Ratio::new(c0.iter().sum(), c0.len() as i128);
                let m1 = Ratio::new(c1.iter().sum(), c1.len() as i128);
                w0 * w1 * (m0 - m1) * (m0 - m1)
            };
            if best.as_ref().is_none_or(|(_, b)| score > *b) {
                best = Some((t, score));
            }
        }
        let (t, score) = best.unwrap();
        if score == Ratio::from_integer(0) {
            values[0]
        } else {
            t
        }
    }

    fn gray(values: &[u8]) -> GrayFrame {
        GrayFrame::from_raw(values.len() as u32, 1, values.to_vec()).unwrap()
    }

    #[test]
    fn bimodal_plateau_takes_smallest_level() {
        let mut values = alloc::vec![10u8; 50];
        values.extend([200u8; 50]);
        assert_eq!(otsu_level(&gray(&values)), 10);
        assert_eq!(brute_force(&values), 10);
    }

    #[test]
    fn constant_frame_reports_its_value_and_goes_black() {
        for v in [0u8, 77, 255] {
            assert_eq!(otsu_level(&gray(&[v; 9])), v);
            let f = Frame::filled(3, 3, [v, v, v]).unwrap();
            let out = otsu_threshold(&f, &EnhanceParams::default());
            assert!(out.pixels().all(|p| p == [0, 0, 0]));
        }
    }

    #[test]
    fn empty_histogram() {
        assert_eq!(otsu_level_from_histogram(&[0; 256]), 0);
    }

    #[test]
    fn two_tone_output_is_reproduced() {
        let f = Frame::from_rgb(3, 1, &[[0, 0, 0], [255, 255, 255], [0, 0, 0]]).unwrap();
        let out = otsu_threshold(&f, &EnhanceParams::default());
        assert_eq!(out, f);
    }

    #[test]
    fn thresholds_every_pixel_under_subsampling() {
        // stride 2 sees only columns 0 and 2
        let f = Frame::from_rgb(3, 1, &[[0, 0, 0], [255, 255, 255], [200, 200, 200]]).unwrap();
        let out = otsu_threshold(&f, &EnhanceParams::default().with_subsample(2));
        assert_eq!(out.pixel(1, 0), [255, 255, 255]);
        assert_eq!(out.pixel(2, 0), [255, 255, 255]);
        assert_eq!(out.pixel(0, 0), [0, 0, 0]);
    }

    #[test]
    fn huge_counts_do_not_overflow() {
        let mut hist = [0u64; 256];
        hist[3] = 1 << 40;
        hist[250] = 1 << 40;
        hist[128] = 5;
        assert_eq!(otsu_level_from_histogram(&hist), 3);
    }

    proptest! {
        #[test]
        fn matches_brute_force(values in proptest::collection::vec(any::<u8>(), 1..64)) {
            prop_assert_eq!(otsu_level(&gray(&values)), brute_force(&values));
        }

        #[test]
        fn matches_brute_force_few_levels(values in proptest::collection::vec(
            prop_oneof![Just(0u8), Just(40), Just(41), Just(128), Just(255)], 1..40)) {
            prop_assert_eq!(otsu_level(&gray(&values)), brute_force(&values));
        }
    }
}
