//! Binary P6 pixmap codec, maxval 255 only.
//!
//! The writer always emits the canonical header `P6\n<w> <h>\n255\n`. The
//! reader accepts any whitespace between header tokens and `#` comments, as
//! the netpbm grammar allows, but exactly one whitespace byte after maxval.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::frame::{Frame, FrameError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PpmError {
    /// The file does not start with `P6`.
    BadMagic,
    /// A header field is missing, non-numeric or out of range.
    MalformedHeader(&'static str),
    /// maxval is something other than 255.
    UnsupportedMaxval(u32),
    /// Width or height is zero.
    ZeroDimension,
    /// The raster is shorter than the header promises.
    TruncatedPayload { expected: usize, actual: usize },
    /// Bytes remain after the raster.
    TrailingData(usize),
}

impl fmt::Display for PpmError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PpmError::BadMagic => write!(f, "not a binary P6 pixmap (bad magic)"),
            PpmError::MalformedHeader(what) => write!(f, "malformed P6 header: {what}"),
            PpmError::UnsupportedMaxval(m) => {
                write!(f, "maxval {m} unsupported, only 255 is accepted")
            }
            PpmError::ZeroDimension => write!(f, "P6 width and height must be at least 1"),
            PpmError::TruncatedPayload { expected, actual } => {
                write!(f, "truncated P6 payload: {actual} of {expected} bytes")
            }
            PpmError::TrailingData(n) => write!(f, "{n} unexpected bytes after P6 payload"),
        }
    }
}

impl core::error::Error for PpmError {}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_whitespace_and_comments(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b.is_ascii_whitespace() {
                self.pos += 1;
            } else if b == b'#' {
                while let Some(&c) = self.bytes.get(self.pos) {
                    self.pos += 1;
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                }
            } else {
                break;
            }
        }
    }

    fn number(&mut self, field: &'static str) -> Result<u32, PpmError> {
        self.skip_whitespace_and_comments();
        let start = self.pos;
        let mut value: u32 = 0;
        while let Some(&b) = self.bytes.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u32::from(b - b'0')))
                .ok_or(PpmError::MalformedHeader(field))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(PpmError::MalformedHeader(field));
        }
        Ok(value)
    }
}

/// Decodes a binary P6 pixmap.
pub fn read_ppm(bytes: &[u8]) -> Result<Frame, PpmError> {
    if bytes.len() < 2 || &bytes[..2] != b"P6" {
        return Err(PpmError::BadMagic);
    }
    let mut cur = Cursor { bytes, pos: 2 };
    if !cur
        .bytes
        .get(2)
        .is_some_and(|b| b.is_ascii_whitespace() || *b == b'#')
    {
        return Err(PpmError::BadMagic);
    }
    let width = cur.number("width")?;
    let height = cur.number("height")?;
    let maxval = cur.number("maxval")?;
    if maxval != 255 {
        return Err(PpmError::UnsupportedMaxval(maxval));
    }
    match cur.bytes.get(cur.pos) {
        Some(b) if b.is_ascii_whitespace() => cur.pos += 1,
        _ => return Err(PpmError::MalformedHeader("missing separator after maxval")),
    }
    if width == 0 || height == 0 {
        return Err(PpmError::ZeroDimension);
    }
    let expected = (width as usize)
        .checked_mul(height as usize)
        .and_then(|n| n.checked_mul(3))
        .ok_or(PpmError::MalformedHeader("dimensions overflow"))?;
    let payload = &bytes[cur.pos..];
    if payload.len() < expected {
        return Err(PpmError::TruncatedPayload {
            expected,
            actual: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(PpmError::TrailingData(payload.len() - expected));
    }
    Frame::from_raw(width, height, payload.to_vec()).map_err(|e| match e {
        FrameError::ZeroArea => PpmError::ZeroDimension,
        _ => PpmError::MalformedHeader("inconsistent raster"),
    })
}

/// Encodes a frame as canonical P6.
pub fn write_ppm(frame: &Frame) -> Vec<u8> {
    let header = format!("P6\n{} {}\n255\n", frame.width(), frame.height());
    let mut out = Vec::with_capacity(header.len() + frame.as_bytes().len());
    out.extend_from_slice(header.as_bytes());
    out.extend_from_slice(frame.as_bytes());
    out
}
