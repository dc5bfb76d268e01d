//! Posterizing viewfinder enhancements for displays washed out by glare.
//!
//! Every operation is a pure function over an RGB8 [`Frame`]. The crate is
//! `no_std` and only needs `alloc`; file IO, timing and networking live in the
//! `glareview` companion crate.
//!
//! The enhancement methods:
//!
//! | id | [`Method`]       | output palette                  |
//! |----|------------------|---------------------------------|
//! | 0  | `Passthrough`    | unchanged                       |
//! | 1  | `HistEq`         | luma-equalized, hue preserved   |
//! | 2  | `GrayThresh`     | black / white at a fixed level  |
//! | 3  | `Otsu`           | black / white at the Otsu level |
//! | 4  | `RgbThresh`      | 8 color-cube corners            |
//! | 5  | `RgbMax`         | red / green / blue              |
//! | 6  | `DecorrThresh`   | 8 corners in PCA space          |
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod enhance;
pub mod frame;
pub mod glare;
pub mod gray;
pub mod grid;
pub mod method;
pub mod metrics;
pub mod ppm;
pub mod protocol;
pub mod rng;

pub use enhance::{
    compute_pca_basis, decorr_threshold, enhance, gray_threshold, hist_equalize, otsu_level,
    otsu_threshold, rgb_max, rgb_threshold, PcaBasis,
};
pub use frame::{Frame, FrameError, GrayFrame, Roi};
pub use glare::{
    apply_glare, edge_survival, evaluate_methods, GlareError, GlareMask, GlareSpec,
    MethodVisibility, VisibilityReport,
};
pub use gray::to_gray;
pub use grid::comparison_grid;
pub use method::{EnhanceParams, Method, ParamError};
pub use metrics::{distinct_colors, rms_contrast};
pub use ppm::{read_ppm, write_ppm, PpmError};
