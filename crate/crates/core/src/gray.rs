//! RGB to luma conversion.

use crate::frame::{Frame, GrayFrame};

/// Luma of one pixel with 0.299/0.587/0.114 weights, rounded half away from zero.
///
/// Evaluated in integer thousandths so the result is exact.
#[inline]
pub fn luma(rgb: [u8; 3]) -> u8 {
    let weighted = 299 * u32::from(rgb[0]) + 587 * u32::from(rgb[1]) + 114 * u32::from(rgb[2]);
    // weights sum to 1000, so the quotient never exceeds 255
    ((weighted + 500) / 1000) as u8
}

pub fn to_gray(frame: &Frame) -> GrayFrame {
    let pixels = frame.pixels().map(luma).collect();
    GrayFrame::from_raw(frame.width(), frame.height(), pixels)
        .expect("a valid frame has a valid luma plane")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    #[test]
    fn primaries() {
        assert_eq!(luma([255, 0, 0]), 76);
        assert_eq!(luma([0, 255, 0]), 150);
        assert_eq!(luma([0, 0, 255]), 29);
        assert_eq!(luma([200, 10, 10]), 67);
    }

    #[test]
    fn equal_channels_are_fixed_points() {
        for v in 0..=255u8 {
            assert_eq!(luma([v, v, v]), v);
        }
    }

    #[test]
    fn gray_plane_matches_pointwise_luma() {
        let rgb = [[255, 0, 0], [0, 255, 0], [9, 9, 9], [1, 2, 3]];
        let f = Frame::from_rgb(2, 2, &rgb).unwrap();
        let g = to_gray(&f);
        let expect: Vec<u8> = rgb.iter().map(|&p| luma(p)).collect();
        assert_eq!(g.as_bytes(), &expect[..]);
    }

    proptest! {
        #[test]
        fn luma_within_channel_range(r: u8, g: u8, b: u8) {
            let y = luma([r, g, b]);
            prop_assert!(y >= r.min(g).min(b));
            prop_assert!(y <= r.max(g).max(b));
        }

        #[test]
        fn luma_matches_float_formula(r: u8, g: u8, b: u8) {
            let exact = 0.299 * f64::from(r) + 0.587 * f64::from(g) + 0.114 * f64::from(b);
            let y = f64::from(luma([r, g, b]));
            prop_assert!((y - exact).abs() <= 0.5 + 1e-9);
        }
    }
}
