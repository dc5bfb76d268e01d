//! Visibility proxies over regions of interest.

use alloc::collections::BTreeSet;

use crate::frame::{Frame, FrameError, GrayFrame, Roi};

/// Population standard deviation of luma inside `roi`.
pub fn rms_contrast(gray: &GrayFrame, roi: Roi) -> Result<f64, FrameError> {
    let mut n: u64 = 0;
    let mut sum: u64 = 0;
    let mut sum_sq: u64 = 0;
    for v in gray.roi_values(roi)? {
        let v = u64::from(v);
        n += 1;
        sum += v;
        sum_sq += v * v;
    }
    // n^2 * variance, exact in integers
    let scaled = u128::from(n) * u128::from(sum_sq) - u128::from(sum) * u128::from(sum);
    Ok(libm::sqrt(scaled as f64) / n as f64)
}

/// Number of distinct RGB triples inside `roi`.
pub fn distinct_colors(frame: &Frame, roi: Roi) -> Result<usize, FrameError> {
    let region = frame.crop(roi)?;
    let set: BTreeSet<[u8; 3]> = region.pixels().collect();
    Ok(set.len())
}
