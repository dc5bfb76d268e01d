//! Side-by-side montage of the six enhancements.

use crate::enhance::enhance;
use crate::frame::Frame;
use crate::method::{EnhanceParams, Method, ParamError};

/// Width of the black gutters between tiles.
pub const SEPARATOR: u32 = 2;

/// Top-left corner of tile `index` (0..6) for a `w`x`h` input.
pub fn tile_origin(index: usize, w: u32, h: u32) -> (u32, u32) {
    let col = (index % 3) as u32;
    let row = (index / 3) as u32;
    (col * (w + SEPARATOR), row * (h + SEPARATOR))
}

/// 2x3 montage, row-major in [`Method::ENHANCEMENTS`] order:
/// histeq, gray-thresh, otsu on top; rgb-thresh, rgb-max, decorr-thresh below.
/// Output is `(3w + 4) x (2h + 2)` with black gutters and no captions.
pub fn comparison_grid(frame: &Frame, params: &EnhanceParams) -> Result<Frame, ParamError> {
    let (w, h) = frame.dimensions();
    let mut out = Frame::filled(3 * w + 2 * SEPARATOR, 2 * h + SEPARATOR, [0, 0, 0])
        .expect("grid of a valid frame is non-empty");
    for (i, &method) in Method::ENHANCEMENTS.iter().enumerate() {
        let tile = enhance(frame, method, params)?;
        let (ox, oy) = tile_origin(i, w, h);
        for y in 0..h {
            for x in 0..w {
                out.set_pixel(ox + x, oy + y, tile.pixel(x, y));
            }
        }
    }
    Ok(out)
}
