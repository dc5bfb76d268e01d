//! Binary frame-streaming messages.
//!
//! Request, 12-byte header then RGB8 payload:
//!
//! ```text
//! 0      version = 1
//! 1      method id (0..=6)
//! 2..4   reserved, zero
//! 4..8   width  u32 LE
//! 8..12  height u32 LE
//! 12..   3 * width * height payload bytes
//! ```
//!
//! Response, 20-byte header then the enhanced payload (status 0) or a UTF-8
//! error message (status 1):
//!
//! ```text
//! 0       version = 1
//! 1       method id, echoed
//! 2       status
//! 3       reserved, zero
//! 4..8    width  u32 LE
//! 8..12   height u32 LE
//! 12..20  elapsed microseconds u64 LE
//! ```

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::frame::Frame;
use crate::method::Method;

pub const VERSION: u8 = 1;
pub const REQUEST_HEADER_LEN: usize = 12;
pub const RESPONSE_HEADER_LEN: usize = 20;
/// Largest accepted width or height.
pub const MAX_DIMENSION: u32 = 4096;

pub const STATUS_OK: u8 = 0;
pub const STATUS_ERROR: u8 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProtocolError {
    TooShort { len: usize, need: usize },
    Version(u8),
    UnknownMethod(u8),
    Reserved,
    ZeroDimension,
    TooLarge { width: u32, height: u32 },
    PayloadLength { expected: usize, actual: usize },
    Status(u8),
    Utf8,
}

impl fmt::Display for ProtocolError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProtocolError::TooShort { len, need } => {
                write!(
                    f,
                    "message of {len} bytes is shorter than the {need}-byte header"
                )
            }
            ProtocolError::Version(v) => write!(f, "unsupported protocol version {v}"),
            ProtocolError::UnknownMethod(m) => write!(f, "unknown method id {m}"),
            ProtocolError::Reserved => write!(f, "reserved header bytes must be zero"),
            ProtocolError::ZeroDimension => write!(f, "width and height must be at least 1"),
            ProtocolError::TooLarge { width, height } => write!(
                f,
                "frame {width}x{height} exceeds the {MAX_DIMENSION}x{MAX_DIMENSION} limit"
            ),
            ProtocolError::PayloadLength { expected, actual } => {
                write!(f, "payload holds {actual} bytes, expected {expected}")
            }
            ProtocolError::Status(s) => write!(f, "unknown response status {s}"),
            ProtocolError::Utf8 => write!(f, "error message is not valid UTF-8"),
        }
    }
}

impl core::error::Error for ProtocolError {}

fn u32_at(bytes: &[u8], at: usize) -> u32 {
    u32::from_le_bytes([bytes[at], bytes[at + 1], bytes[at + 2], bytes[at + 3]])
}

fn check_dims(width: u32, height: u32) -> Result<usize, ProtocolError> {
    if width == 0 || height == 0 {
        return Err(ProtocolError::ZeroDimension);
    }
    if width > MAX_DIMENSION || height > MAX_DIMENSION {
        return Err(ProtocolError::TooLarge { width, height });
    }
    Ok(3 * width as usize * height as usize)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameRequest {
    pub method: Method,
    pub frame: Frame,
}

/// Header fields salvaged from a possibly malformed request, for echoing in
/// an error response. Missing fields read as zero.
pub fn peek_request_header(bytes: &[u8]) -> (u8, u32, u32) {
    let method = bytes.get(1).copied().unwrap_or(0);
    if bytes.len() < REQUEST_HEADER_LEN {
        return (method, 0, 0);
    }
    (method, u32_at(bytes, 4), u32_at(bytes, 8))
}

impl FrameRequest {
    pub fn encode(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(REQUEST_HEADER_LEN + self.frame.as_bytes().len());
        out.extend_from_slice(&[VERSION, self.method.id(), 0, 0]);
        out.extend_from_slice(&self.frame.width().to_le_bytes());
        out.extend_from_slice(&self.frame.height().to_le_bytes());
        out.extend_from_slice(self.frame.as_bytes());
        out
    }

    pub fn decode(bytes: &[u8]) -> Result<FrameRequest, ProtocolError> {
        if bytes.len() < REQUEST_HEADER_LEN {
            return Err(ProtocolError::TooShort {
                len: bytes.len(),
                need: REQUEST_HEADER_LEN,
            });
        }
        if bytes[0] != VERSION {
            return Err(ProtocolError::Version(bytes[0]));
        }
        let method = Method::from_id(bytes[1]).ok_or(ProtocolError::UnknownMethod(bytes[1]))?;
        if bytes[2] != 0 || bytes[3] != 0 {
            return Err(ProtocolError::Reserved);
        }
        let (width, height) = (u32_at(bytes, 4), u32_at(bytes, 8));
        let expected = check_dims(width, height)?;
        let payload = &bytes[REQUEST_HEADER_LEN..];
        if payload.len() != expected {
            return Err(ProtocolError::PayloadLength {
                expected,
                actual: payload.len(),
            });
        }
        let frame = Frame::from_raw(width, height, payload.to_vec())
            .expect("dimensions and payload length were checked");
        Ok(FrameRequest { method, frame })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrameResponse {
    Ok {
        method: Method,
        elapsed_us: u64,
        frame: Frame,
    },
    Error {
        method_id: u8,
        width: u32,
        height: u32,
        message: String,
    },
}

impl FrameResponse {
    pub fn encode(&self) -> Vec<u8> {
        let (method_id, status, width, height, elapsed, body): (u8, u8, u32, u32, u64, &[u8]) =
            match self {
                FrameResponse::Ok {
                    method,
                    elapsed_us,
                    frame,
                } => (
                    method.id(),
                    STATUS_OK,
                    frame.width(),
                    frame.height(),
                    *elapsed_us,
                    frame.as_bytes(),
                ),
                FrameResponse::Error {
                    method_id,
                    width,
                    height,
                    message,
                } => (
                    *method_id,
                    STATUS_ERROR,
                    *width,
                    *height,
                    0,
                    message.as_bytes(),
                ),
            };
        let mut out = Vec::with_capacity(RESPONSE_HEADER_LEN + body.len());
        out.extend_from_slice(&[VERSION, method_id, status, 0]);
        out.extend_from_slice(&width.to_le_bytes());
        out.extend_from_slice(&height.to_le_bytes());
        out.extend_from_slice(&elapsed.to_le_bytes());
        out.extend_from_slice(body);
        out
    }

    pub fn decode(bytes: &[u8]) -> Result<FrameResponse, ProtocolError> {
        if bytes.len() < RESPONSE_HEADER_LEN {
            return Err(ProtocolError::TooShort {
                len: bytes.len(),
                need: RESPONSE_HEADER_LEN,
            });
        }
        if bytes[0] != VERSION {
            return Err(ProtocolError::Version(bytes[0]));
        }
        if bytes[3] != 0 {
            return Err(ProtocolError::Reserved);
        }
        let method_id = bytes[1];
        let (width, height) = (u32_at(bytes, 4), u32_at(bytes, 8));
        let mut elapsed = [0u8; 8];
        elapsed.copy_from_slice(&bytes[12..20]);
        let body = &bytes[RESPONSE_HEADER_LEN..];
        match bytes[2] {
            STATUS_OK => {
                let method =
                    Method::from_id(method_id).ok_or(ProtocolError::UnknownMethod(method_id))?;
                let expected = check_dims(width, height)?;
                if body.len() != expected {
                    return Err(ProtocolError::PayloadLength {
                        expected,
                        actual: body.len(),
                    });
                }
                Ok(FrameResponse::Ok {
                    method,
                    elapsed_us: u64::from_le_bytes(elapsed),
                    frame: Frame::from_raw(width, height, body.to_vec())
                        .expect("dimensions and payload length were checked"),
                })
            }
            STATUS_ERROR => Ok(FrameResponse::Error {
                method_id,
                width,
                height,
                message: String::from(core::str::from_utf8(body).map_err(|_| ProtocolError::Utf8)?),
            }),
            other => Err(ProtocolError::Status(other)),
        }
    }
}
