use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use glareview::bench::{run_bench, BenchConfig, DEFAULT_HEIGHT, DEFAULT_WIDTH};
use glareview::io::{check_output_path, read_frame, write_frame};
use glareview::report::visibility_json;
use glareview::service::{FrameServer, DEFAULT_PORT, ENDPOINT};
use glareview_core::{
    apply_glare, comparison_grid, enhance, evaluate_methods, EnhanceParams, Frame, GlareSpec,
    Method, Roi,
};

const EXIT_BUDGET_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Posterizing viewfinder enhancements for glare-washed displays.
#[derive(Parser)]
#[command(name = "glareview", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply one enhancement to a P6 image.
    Enhance {
        #[arg(long, value_parser = parse_method)]
        method: Method,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// 2x3 montage of the six enhancements.
    Grid {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Simulate display glare on a P6 image.
    Glare {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        #[command(flatten)]
        glare: GlareArgs,
    },
    /// Score every method's visibility under glare; JSON to stdout.
    Evaluate {
        #[arg(long)]
        input: PathBuf,
        /// Region of interest as x,y,w,h (zero-based).
        #[arg(long, value_parser = parse_roi)]
        roi: Roi,
        #[command(flatten)]
        glare: GlareArgs,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Time every method on a seeded frame; JSON to stdout.
    Bench {
        #[arg(long, default_value_t = DEFAULT_WIDTH)]
        width: u32,
        #[arg(long, default_value_t = DEFAULT_HEIGHT)]
        height: u32,
        #[arg(long, default_value_t = 100)]
        iters: usize,
        #[arg(long, default_value_t = 10)]
        warmup: usize,
        /// p95 budget per frame; 33 ms when given without a value.
        #[arg(long, num_args = 0..=1, default_missing_value = "33")]
        budget_ms: Option<f64>,
        #[arg(long, default_value_t = 1)]
        subsample: u32,
    },
    /// Run the WebSocket frame service.
    Serve {
        #[arg(long, default_value_t = DEFAULT_PORT)]
        port: u16,
        #[arg(long, default_value_t = 1)]
        subsample: u32,
        /// Address to bind; loopback unless widened explicitly.
        #[arg(long, default_value = "127.0.0.1")]
        bind: String,
    },
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long, default_value_t = 128, value_parser = clap::value_parser!(u16).range(1..=255))]
    midpoint: u16,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    subsample: u32,
}

impl ParamArgs {
    fn params(&self) -> EnhanceParams {
        EnhanceParams::default()
            .with_midpoint(self.midpoint)
            .with_subsample(self.subsample)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MaskKind {
    Uniform,
    Radial,
}

#[derive(Args)]
struct GlareArgs {
    /// Blend weight toward white, 0..=1.
    #[arg(long)]
    strength: f64,
    #[arg(long, value_enum, default_value_t = MaskKind::Uniform)]
    mask: MaskKind,
    /// Radial centre x; defaults to the image centre.
    #[arg(long)]
    cx: Option<f64>,
    #[arg(long)]
    cy: Option<f64>,
    /// Radial spread in pixels; defaults to a quarter of the shorter side.
    #[arg(long)]
    sigma: Option<f64>,
}

impl GlareArgs {
    fn spec(&self, frame: &Frame) -> Result<GlareSpec, String> {
        let spec = match self.mask {
            MaskKind::Uniform => GlareSpec::uniform(self.strength),
            MaskKind::Radial => {
                let (w, h) = frame.dimensions();
                GlareSpec::radial(
                    self.strength,
                    self.cx.unwrap_or(f64::from(w) / 2.0),
                    self.cy.unwrap_or(f64::from(h) / 2.0),
                    self.sigma.unwrap_or(f64::from(w.min(h)) / 4.0),
                )
            }
        };
        spec.map_err(|e| e.to_string())
    }
}

fn parse_method(s: &str) -> Result<Method, String> {
    Method::from_str(s).map_err(|e| e.to_string())
}

fn parse_roi(s: &str) -> Result<Roi, String> {
    let parts: Vec<u32> = s
        .split(',')
        .map(|p| p.trim().parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|e| format!("roi must be x,y,w,h: {e}"))?;
    match parts[..] {
        [x, y, w, h] => Ok(Roi::new(x, y, w, h)),
        _ => Err(format!("roi must have 4 fields, got {}", parts.len())),
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Enhance {
            method,
            input,
            output,
            params,
        } => {
            check_output_path(&output).map_err(|e| e.to_string())?;
            let frame = read_frame(&input).map_err(|e| e.to_string())?;
            let out = enhance(&frame, method, &params.params()).map_err(|e| e.to_string())?;
            write_frame(&output, &out).map_err(|e| e.to_string())?;
        }
        Command::Grid {
            input,
            output,
            params,
        } => {
            check_output_path(&output).map_err(|e| e.to_string())?;
            let frame = read_frame(&input).map_err(|e| e.to_string())?;
            let out = comparison_grid(&frame, &params.params()).map_err(|e| e.to_string())?;
            write_frame(&output, &out).map_err(|e| e.to_string())?;
        }
        Command::Glare {
            input,
            output,
            glare,
        } => {
            check_output_path(&output).map_err(|e| e.to_string())?;
            let frame = read_frame(&input).map_err(|e| e.to_string())?;
            let spec = glare.spec(&frame)?;
            write_frame(&output, &apply_glare(&frame, &spec)).map_err(|e| e.to_string())?;
        }
        Command::Evaluate {
            input,
            roi,
            glare,
            params,
        } => {
            let frame = read_frame(&input).map_err(|e| e.to_string())?;
            let spec = glare.spec(&frame)?;
            let report = evaluate_methods(&frame, roi, &spec, &params.params())
                .map_err(|e| e.to_string())?;
            println!("{}", visibility_json(&report));
        }
        Command::Bench {
            width,
            height,
            iters,
            warmup,
            budget_ms,
            subsample,
        } => {
            let config = BenchConfig {
                width,
                height,
                iterations: iters,
                warmup,
                params: EnhanceParams::default().with_subsample(subsample),
                budget_ms,
            };
            let report = run_bench(&config).map_err(|e| e.to_string())?;
            println!("{}", report.to_json());
            if report.any_failed() {
                return Ok(ExitCode::from(EXIT_BUDGET_FAIL));
            }
        }
        Command::Serve {
            port,
            subsample,
            bind,
        } => {
            let params = EnhanceParams::default().with_subsample(subsample);
            let server = FrameServer::bind((bind.as_str(), port), params)
                .map_err(|e| format!("cannot bind {bind}:{port}: {e}"))?;
            let addr = server.local_addr().map_err(|e| e.to_string())?;
            eprintln!("listening on ws://{addr}{ENDPOINT}");
            server.run().map_err(|e| e.to_string())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
