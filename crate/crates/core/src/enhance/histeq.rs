//! Luma histogram equalization with hue-preserving RGB rescale.

use crate::frame::Frame;
use crate::gray::luma;
use crate::method::EnhanceParams;

/// Equalizing luma map `m(v) = round(255 * (cdf(v) - cdf_min) / (n - cdf_min))`.
///
/// When every pixel shares one luma (`n == cdf_min`) the identity map is returned.
pub fn equalization_map(hist: &[u64; 256]) -> [u8; 256] {
    let n: u64 = hist.iter().sum();
    let cdf_min = hist.iter().copied().find(|&c| c > 0).unwrap_or(0);
    let mut map = [0u8; 256];
    if n == cdf_min {
        for (v, m) in map.iter_mut().enumerate() {
            *m = v as u8;
        }
        return map;
    }
    let den = u128::from(n - cdf_min);
    let mut cdf: u64 = 0;
    for (v, m) in map.iter_mut().enumerate() {
        cdf += hist[v];
        let num = 255 * u128::from(cdf.saturating_sub(cdf_min));
        *m = ((2 * num + den) / (2 * den)) as u8;
    }
    map
}

/// Equalizes luma over all pixels and scales each pixel's RGB by `m(Y) / Y`.
/// Pixels with `Y == 0` become gray `m(0)`.
pub fn hist_equalize(frame: &Frame, _params: &EnhanceParams) -> Frame {
    let mut hist = [0u64; 256];
    for p in frame.pixels() {
        hist[usize::from(luma(p))] += 1;
    }
    let map = equalization_map(&hist);
    frame.map_pixels(|p| {
        let y = u32::from(luma(p));
        let m = u32::from(map[y as usize]);
        if y == 0 {
            return [m as u8; 3];
        }
        p.map(|c| ((2 * u32::from(c) * m + y) / (2 * y)).min(255) as u8)
    })
}
