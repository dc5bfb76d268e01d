//! Frame-to-frame enhancement methods.

mod decorr;
mod histeq;
mod otsu;
mod pca;
mod threshold;
mod wide;

pub use decorr::decorr_threshold;
pub use histeq::{equalization_map, hist_equalize};
pub use otsu::{luma_histogram, otsu_level, otsu_level_from_histogram, otsu_threshold};
pub use pca::{compute_pca_basis, sample_covariance, PcaBasis};
pub use threshold::{gray_threshold, rgb_max, rgb_threshold};

use crate::frame::Frame;
use crate::method::{EnhanceParams, Method, ParamError};

/// Applies `method` to `frame`. Output dimensions always equal input dimensions.
pub fn enhance(frame: &Frame, method: Method, params: &EnhanceParams) -> Result<Frame, ParamError> {
    params.validate()?;
    Ok(match method {
        Method::Passthrough => frame.clone(),
        Method::HistEq => hist_equalize(frame, params),
        Method::GrayThresh => gray_threshold(frame, params),
        Method::Otsu => otsu_threshold(frame, params),
        Method::RgbThresh => rgb_threshold(frame, params),
        Method::RgbMax => rgb_max(frame, params),
        Method::DecorrThresh => decorr_threshold(frame, params),
    })
}

/// Visits the pixels on the `stride` grid (both axes), starting at the origin.
pub(crate) fn sampled_pixels(frame: &Frame, stride: u32) -> impl Iterator<Item = [u8; 3]> + '_ {
    let stride = stride.max(1) as usize;
    let (w, h) = (frame.width() as usize, frame.height() as usize);
    let bytes = frame.as_bytes();
    (0..h).step_by(stride).flat_map(move |y| {
        (0..w).step_by(stride).map(move |x| {
            let i = (y * w + x) * 3;
            [bytes[i], bytes[i + 1], bytes[i + 2]]
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn passthrough_copies() {
        let f = Frame::from_rgb(2, 1, &[[1, 2, 3], [250, 0, 9]]).unwrap();
        assert_eq!(
            enhance(&f, Method::Passthrough, &EnhanceParams::default()).unwrap(),
            f
        );
    }

    #[test]
    fn mid_gray_thresholds_white() {
        let f = Frame::filled(4, 4, [128, 128, 128]).unwrap();
        let out = enhance(&f, Method::GrayThresh, &EnhanceParams::default()).unwrap();
        assert!(out.pixels().all(|p| p == [255, 255, 255]));
    }

    #[test]
    fn invalid_params_rejected() {
        let f = Frame::filled(1, 1, [0, 0, 0]).unwrap();
        let p = EnhanceParams::default().with_subsample(0);
        assert_eq!(enhance(&f, Method::Otsu, &p), Err(ParamError::Subsample(0)));
    }

    #[test]
    fn sampling_grid() {
        let rgb: alloc::vec::Vec<[u8; 3]> = (0..15u8).map(|i| [i, 0, 0]).collect();
        let f = Frame::from_rgb(5, 3, &rgb).unwrap();
        let picked: alloc::vec::Vec<u8> = sampled_pixels(&f, 2).map(|p| p[0]).collect();
        assert_eq!(picked, [0, 2, 4, 10, 12, 14]);
        assert_eq!(sampled_pixels(&f, 1).count(), 15);
        assert_eq!(sampled_pixels(&f, 100).count(), 1);
    }
}
