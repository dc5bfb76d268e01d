//! Host-side tooling around `glareview-core`: latency benchmarking, JSON
//! reports, the WebSocket frame service and file helpers used by the CLI.

pub mod bench;
pub mod io;
pub mod report;
pub mod service;

pub use glareview_core as core;
