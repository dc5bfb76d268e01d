//! JSON shapes for visibility reports and the method list.

use glareview_core::{GlareMask, GlareSpec, Method, VisibilityReport};
use serde::Serialize;

#[derive(Serialize)]
struct GlareJson {
    strength: f64,
    mask: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    cx: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cy: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sigma: Option<f64>,
}

impl From<&GlareSpec> for GlareJson {
    fn from(spec: &GlareSpec) -> Self {
        match spec.mask() {
            GlareMask::Uniform => GlareJson {
                strength: spec.strength(),
                mask: "uniform",
                cx: None,
                cy: None,
                sigma: None,
            },
            GlareMask::Radial { cx, cy, sigma } => GlareJson {
                strength: spec.strength(),
                mask: "radial",
                cx: Some(cx),
                cy: Some(cy),
                sigma: Some(sigma),
            },
        }
    }
}

#[derive(Serialize)]
struct MethodJson {
    method: &'static str,
    rms: f64,
    edge_survival: f64,
    colors: usize,
}

#[derive(Serialize)]
struct VisibilityJson {
    roi: [u32; 4],
    glare: GlareJson,
    methods: Vec<MethodJson>,
}

pub fn visibility_json(report: &VisibilityReport) -> String {
    let roi = report.roi;
    let doc = VisibilityJson {
        roi: [roi.x, roi.y, roi.w, roi.h],
        glare: (&report.glare).into(),
        methods: report
            .methods
            .iter()
            .map(|m| MethodJson {
                method: m.method.name(),
                rms: m.rms,
                edge_survival: m.edge_survival,
                colors: m.colors,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("visibility report is always serializable")
}

#[derive(Serialize)]
struct MethodEntry {
    id: u8,
    name: &'static str,
}

/// `[{"id":0,"name":"passthrough"}, ...]` in wire-id order.
pub fn methods_json() -> String {
    let entries: Vec<MethodEntry> = Method::ALL
        .iter()
        .map(|m| MethodEntry {
            id: m.id(),
            name: m.name(),
        })
        .collect();
    serde_json::to_string(&entries).expect("method list is always serializable")
}
