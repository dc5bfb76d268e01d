//! Per-method latency measurement on a seeded pseudo-random frame.
//!
//! Each method runs `warmup` untimed calls, then `iterations` calls timed one
//! by one with a monotonic clock. Percentiles use the nearest-rank rule. The
//! loop is single-threaded so numbers compare across runs.

use std::time::{Duration, Instant};

use glareview_core::rng::bench_frame;
use glareview_core::{enhance, EnhanceParams, Frame, FrameError, Method, ParamError};
use serde::Serialize;
use thiserror::Error;

/// Viewfinder size of the reference handset, width x height.
pub const DEFAULT_WIDTH: u32 = 480;
pub const DEFAULT_HEIGHT: u32 = 800;
/// Roughly 30 frames per second.
pub const DEFAULT_BUDGET_MS: f64 = 33.0;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("benchmark frame: {0}")]
    Frame(#[from] FrameError),
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error("iterations must be at least 1")]
    NoIterations,
    #[error("budget must be a positive number of milliseconds, got {0}")]
    Budget(f64),
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub width: u32,
    pub height: u32,
    pub iterations: usize,
    pub warmup: usize,
    pub params: EnhanceParams,
    pub budget_ms: Option<f64>,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            width: DEFAULT_WIDTH,
            height: DEFAULT_HEIGHT,
            iterations: 100,
            warmup: 10,
            params: EnhanceParams::default(),
            budget_ms: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct MethodTiming {
    #[serde(serialize_with = "method_name")]
    pub method: Method,
    pub mean_us: f64,
    pub p50_us: f64,
    pub p95_us: f64,
    pub mpix_per_s: f64,
    pub verdict: Option<Verdict>,
}

fn method_name<S: serde::Serializer>(m: &Method, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(m.name())
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchReport {
    pub width: u32,
    pub height: u32,
    pub iterations: usize,
    pub warmup: usize,
    pub stats_subsample: u32,
    pub budget_ms: Option<f64>,
    pub results: Vec<MethodTiming>,
}

impl BenchReport {
    pub fn any_failed(&self) -> bool {
        self.results
            .iter()
            .any(|r| r.verdict == Some(Verdict::Fail))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("bench report is always serializable")
    }
}

/// Nearest-rank percentile of an ascending slice, `0 < p <= 100`.
pub fn percentile(sorted: &[f64], p: f64) -> f64 {
    assert!(!sorted.is_empty());
    let rank = (p / 100.0 * sorted.len() as f64).ceil() as usize;
    sorted[rank.clamp(1, sorted.len()) - 1]
}

fn micros(d: Duration) -> f64 {
    d.as_nanos() as f64 / 1000.0
}

/// Summarizes per-iteration samples (microseconds) for one method.
pub fn summarize(
    method: Method,
    samples_us: &[f64],
    pixels: u64,
    budget_ms: Option<f64>,
) -> MethodTiming {
    let mut sorted = samples_us.to_vec();
    sorted.sort_by(f64::total_cmp);
    let total_us: f64 = sorted.iter().sum();
    // a zero-length total would make throughput infinite; floor at 1 ns
    let total_s = (total_us / 1e6).max(1e-9);
    let p95_us = percentile(&sorted, 95.0);
    MethodTiming {
        method,
        mean_us: total_us / sorted.len() as f64,
        p50_us: percentile(&sorted, 50.0),
        p95_us,
        mpix_per_s: pixels as f64 * sorted.len() as f64 / total_s / 1e6,
        verdict: budget_ms.map(|b| {
            if p95_us <= 1000.0 * b {
                Verdict::Pass
            } else {
                Verdict::Fail
            }
        }),
    }
}

fn time_method(
    frame: &Frame,
    method: Method,
    config: &BenchConfig,
) -> Result<Vec<f64>, BenchError> {
    for _ in 0..config.warmup {
        std::hint::black_box(enhance(frame, method, &config.params)?);
    }
    let mut samples = Vec::with_capacity(config.iterations);
    for _ in 0..config.iterations {
        let start = Instant::now();
        let out = enhance(std::hint::black_box(frame), method, &config.params)?;
        samples.push(micros(start.elapsed()));
        drop(std::hint::black_box(out));
    }
    Ok(samples)
}

pub fn run_bench(config: &BenchConfig) -> Result<BenchReport, BenchError> {
    if config.iterations == 0 {
        return Err(BenchError::NoIterations);
    }
    if let Some(b) = config.budget_ms {
        if !(b > 0.0 && b.is_finite()) {
            return Err(BenchError::Budget(b));
        }
    }
    config.params.validate()?;
    let frame = bench_frame(config.width, config.height)?;
    let pixels = frame.pixel_count() as u64;
    let results = Method::ALL
        .iter()
        .map(|&m| {
            let samples = time_method(&frame, m, config)?;
            log::debug!("{m}: {} samples", samples.len());
            Ok(summarize(m, &samples, pixels, config.budget_ms))
        })
        .collect::<Result<Vec<_>, BenchError>>()?;
    Ok(BenchReport {
        width: config.width,
        height: config.height,
        iterations: config.iterations,
        warmup: config.warmup,
        stats_subsample: config.params.stats_subsample,
        budget_ms: config.budget_ms,
        results,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nearest_rank() {
        let v: Vec<f64> = (1..=20).map(f64::from).collect();
        assert_eq!(percentile(&v, 50.0), 10.0);
        assert_eq!(percentile(&v, 95.0), 19.0);
        assert_eq!(percentile(&v, 100.0), 20.0);
        assert_eq!(percentile(&[7.0], 50.0), 7.0);
        assert_eq!(percentile(&[7.0], 95.0), 7.0);
    }

    #[test]
    fn summary_statistics() {
        let t = summarize(Method::Otsu, &[300.0, 100.0, 200.0], 1_000_000, Some(0.25));
        assert_eq!(t.mean_us, 200.0);
        assert_eq!(t.p50_us, 200.0);
        assert_eq!(t.p95_us, 300.0);
        // 3 Mpx in 600 us
        assert!((t.mpix_per_s - 5000.0).abs() < 1e-6);
        assert_eq!(t.verdict, Some(Verdict::Fail));
        let t = summarize(Method::Otsu, &[300.0], 10, Some(0.3));
        assert_eq!(t.verdict, Some(Verdict::Pass));
        assert_eq!(summarize(Method::Otsu, &[1.0], 10, None).verdict, None);
    }

    #[test]
    fn single_iteration_report() {
        let config = BenchConfig {
            width: 8,
            height: 4,
            iterations: 1,
            warmup: 0,
            ..Default::default()
        };
        let r = run_bench(&config).unwrap();
        assert_eq!(r.results.len(), 7);
        for t in &r.results {
            assert_eq!(t.p50_us, t.p95_us);
            assert_eq!(t.mean_us, t.p50_us);
        }
        assert!(!r.any_failed());
    }

    #[test]
    fn rejects_bad_configs() {
        let zero = BenchConfig {
            width: 0,
            ..Default::default()
        };
        assert!(matches!(run_bench(&zero), Err(BenchError::Frame(_))));
        let none = BenchConfig {
            iterations: 0,
            ..Default::default()
        };
        assert!(matches!(run_bench(&none), Err(BenchError::NoIterations)));
        let budget = BenchConfig {
            budget_ms: Some(-1.0),
            ..Default::default()
        };
        assert!(matches!(run_bench(&budget), Err(BenchError::Budget(_))));
    }
}
