//! WebSocket frame service on `ws://<addr>/frames`.
//!
//! Binary messages are [`FrameRequest`]s answered by [`FrameResponse`]s in
//! request order. The text message `methods` returns the method list as JSON.
//! Each connection gets its own thread and is processed sequentially; clients
//! should keep one frame in flight for the lowest latency.

use std::io;
use std::net::{SocketAddr, TcpListener, TcpStream, ToSocketAddrs};
use std::thread::{self, JoinHandle};
use std::time::Instant;

use glareview_core::protocol::{peek_request_header, FrameRequest, FrameResponse};
use glareview_core::{enhance, EnhanceParams};
use tungstenite::handshake::server::{ErrorResponse, Request, Response};
use tungstenite::http::StatusCode;
use tungstenite::{Error as WsError, Message};

use crate::report::methods_json;

pub const ENDPOINT: &str = "/frames";
pub const DEFAULT_PORT: u16 = 8765;

/// Answers one binary request. Never fails: problems become status-1 responses.
pub fn handle_request(bytes: &[u8], params: &EnhanceParams) -> Vec<u8> {
    let request = match FrameRequest::decode(bytes) {
        Ok(r) => r,
        Err(e) => {
            let (method_id, width, height) = peek_request_header(bytes);
            return FrameResponse::Error {
                method_id,
                width,
                height,
                message: e.to_string(),
            }
            .encode();
        }
    };
    let start = Instant::now();
    let result = enhance(&request.frame, request.method, params);
    let elapsed_us = start.elapsed().as_micros() as u64;
    match result {
        Ok(frame) => FrameResponse::Ok {
            method: request.method,
            elapsed_us,
            frame,
        },
        Err(e) => FrameResponse::Error {
            method_id: request.method.id(),
            width: request.frame.width(),
            height: request.frame.height(),
            message: e.to_string(),
        },
    }
    .encode()
}

/// Reply to a text message, if any.
pub fn handle_text(text: &str) -> String {
    if text.trim() == "methods" {
        methods_json()
    } else {
        serde_json::json!({ "error": format!("unknown command {text:?}") }).to_string()
    }
}

pub struct FrameServer {
    listener: TcpListener,
    params: EnhanceParams,
}

impl FrameServer {
    pub fn bind(addr: impl ToSocketAddrs, params: EnhanceParams) -> io::Result<Self> {
        params
            .validate()
            .map_err(|e| io::Error::new(io::ErrorKind::InvalidInput, e.to_string()))?;
        Ok(FrameServer {
            listener: TcpListener::bind(addr)?,
            params,
        })
    }

    pub fn local_addr(&self) -> io::Result<SocketAddr> {
        self.listener.local_addr()
    }

    /// Accepts connections until the listener fails.
    pub fn run(self) -> io::Result<()> {
        for stream in self.listener.incoming() {
            let stream = match stream {
                Ok(s) => s,
                Err(e) => {
                    log::warn!("accept failed: {e}");
                    continue;
                }
            };
            let params = self.params;
            thread::spawn(move || {
                let peer = stream.peer_addr().ok();
                if let Err(e) = serve_connection(stream, params) {
                    log::info!("connection {peer:?} ended: {e}");
                }
            });
        }
        Ok(())
    }

    /// Runs the accept loop on a background thread.
    pub fn spawn(self) -> JoinHandle<io::Result<()>> {
        thread::spawn(move || self.run())
    }
}

#[allow(clippy::result_large_err)]
fn check_path(req: &Request, resp: Response) -> Result<Response, ErrorResponse> {
    if req.uri().path() == ENDPOINT {
        Ok(resp)
    } else {
        let mut err = ErrorResponse::new(Some(format!("no endpoint at {}", req.uri().path())));
        *err.status_mut() = StatusCode::NOT_FOUND;
        Err(err)
    }
}

#[allow(clippy::result_large_err)]
fn serve_connection(stream: TcpStream, params: EnhanceParams) -> Result<(), WsError> {
    stream.set_nodelay(true).ok();
    let mut ws = tungstenite::accept_hdr(stream, check_path).map_err(|e| match e {
        tungstenite::HandshakeError::Failure(e) => e,
        tungstenite::HandshakeError::Interrupted(_) => WsError::Io(io::Error::new(
            io::ErrorKind::WouldBlock,
            "handshake interrupted",
        )),
    })?;
    loop {
        let reply = match ws.read()? {
            Message::Binary(bytes) => Message::Binary(handle_request(&bytes, &params)),
            Message::Text(text) => Message::Text(handle_text(&text)),
            Message::Close(_) => {
                // tungstenite answers the close frame on the next flush
                ws.flush().ok();
                return Ok(());
            }
            Message::Ping(_) | Message::Pong(_) | Message::Frame(_) => continue,
        };
        ws.send(reply)?;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use glareview_core::protocol::{ProtocolError, STATUS_ERROR};
    use glareview_core::{Frame, Method};

    #[test]
    fn passthrough_echoes_payload() {
        let frame = Frame::from_raw(2, 2, (0..12).collect()).unwrap();
        let req = FrameRequest {
            method: Method::Passthrough,
            frame: frame.clone(),
        };
        let resp =
            FrameResponse::decode(&handle_request(&req.encode(), &Default::default())).unwrap();
        match resp {
            FrameResponse::Ok {
                method, frame: out, ..
            } => {
                assert_eq!(method, Method::Passthrough);
                assert_eq!(out, frame);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn malformed_request_gets_error_status() {
        let bytes = handle_request(&[1, 9, 0, 0], &Default::default());
        assert_eq!(bytes[2], STATUS_ERROR);
        assert_eq!(bytes[1], 9);
        let msg = std::str::from_utf8(&bytes[20..]).unwrap();
        assert_eq!(
            msg,
            ProtocolError::TooShort { len: 4, need: 12 }.to_string()
        );
    }

    #[test]
    fn text_commands() {
        assert_eq!(handle_text("methods"), methods_json());
        assert!(handle_text("frames please").contains("error"));
    }
}
