//! Posterization by the sign of each principal-component coordinate.
//!
//! Thresholding at zero in mean-centered PCA space is unaffected by any
//! positive per-axis scale, so the variance-equalizing stretch step of a
//! classic decorrelation stretch is skipped.

use crate::enhance::pca::compute_pca_basis;
use crate::frame::Frame;
use crate::method::EnhanceParams;

/// PC1 drives red, PC2 green, PC3 blue. A component is high when the pixel
/// projects non-negatively onto it and its eigenvalue exceeds `var_epsilon`.
pub fn decorr_threshold(frame: &Frame, params: &EnhanceParams) -> Frame {
    let basis = compute_pca_basis(frame, params);
    let live = basis.eigenvalues.map(|l| l > params.var_epsilon);
    frame.map_pixels(|p| {
        let proj = basis.project(p);
        let mut out = [0u8; 3];
        for k in 0..3 {
            if live[k] && proj[k] >= 0.0 {
                out[k] = 255;
            }
        }
        out
    })
}
