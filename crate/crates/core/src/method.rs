//! Enhancement method identifiers and their tunables.

use core::fmt;
use core::str::FromStr;

/// One of the viewfinder enhancements. The discriminant is the wire id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Method {
    Passthrough = 0,
    HistEq = 1,
    GrayThresh = 2,
    Otsu = 3,
    RgbThresh = 4,
    RgbMax = 5,
    DecorrThresh = 6,
}

impl Method {
    /// All methods in wire-id order.
    pub const ALL: [Method; 7] = [
        Method::Passthrough,
        Method::HistEq,
        Method::GrayThresh,
        Method::Otsu,
        Method::RgbThresh,
        Method::RgbMax,
        Method::DecorrThresh,
    ];

    /// The six enhancements laid out in the comparison grid, in tile order.
    pub const ENHANCEMENTS: [Method; 6] = [
        Method::HistEq,
        Method::GrayThresh,
        Method::Otsu,
        Method::RgbThresh,
        Method::RgbMax,
        Method::DecorrThresh,
    ];

    pub fn id(self) -> u8 {
        self as u8
    }

    pub fn from_id(id: u8) -> Option<Method> {
        Method::ALL.get(usize::from(id)).copied()
    }

    /// Kebab-case name used on the command line and over the wire.
    pub fn name(self) -> &'static str {
        match self {
            Method::Passthrough => "passthrough",
            Method::HistEq => "histeq",
            Method::GrayThresh => "gray-thresh",
            Method::Otsu => "otsu",
            Method::RgbThresh => "rgb-thresh",
            Method::RgbMax => "rgb-max",
            Method::DecorrThresh => "decorr-thresh",
        }
    }

    /// Upper bound on distinct output colors, `None` for photo-realistic methods.
    pub fn palette_bound(self) -> Option<usize> {
        match self {
            Method::Passthrough | Method::HistEq => None,
            Method::GrayThresh | Method::Otsu => Some(2),
            Method::RgbMax => Some(3),
            Method::RgbThresh | Method::DecorrThresh => Some(8),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownMethod;

impl fmt::Display for UnknownMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(
            "unknown method; expected one of passthrough, histeq, gray-thresh, otsu, \
             rgb-thresh, rgb-max, decorr-thresh",
        )
    }
}

impl core::error::Error for UnknownMethod {}

impl FromStr for Method {
    type Err = UnknownMethod;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or(UnknownMethod)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ParamError {
    Midpoint(u16),
    Subsample(u32),
    VarEpsilon(f64),
}

impl fmt::Display for ParamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamError::Midpoint(m) => write!(f, "midpoint {m} outside 1..=255"),
            ParamError::Subsample(s) => write!(f, "stats subsample stride {s} must be >= 1"),
            ParamError::VarEpsilon(e) => write!(f, "var_epsilon {e} must be finite and > 0"),
        }
    }
}

impl core::error::Error for ParamError {}

/// Per-method tunables.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnhanceParams {
    /// Threshold level for the fixed-level methods; `>= midpoint` maps high.
    pub midpoint: u16,
    /// Stride, in both axes, of the grid used to gather Otsu/PCA statistics.
    pub stats_subsample: u32,
    /// Eigenvalues at or below this (squared luma units) count as zero variance.
    pub var_epsilon: f64,
}

impl Default for EnhanceParams {
    fn default() -> Self {
        EnhanceParams {
            midpoint: 128,
            stats_subsample: 1,
            var_epsilon: 1e-9,
        }
    }
}

impl EnhanceParams {
    pub fn with_midpoint(self, midpoint: u16) -> Self {
        EnhanceParams { midpoint, ..self }
    }

    pub fn with_subsample(self, stats_subsample: u32) -> Self {
        EnhanceParams {
            stats_subsample,
            ..self
        }
    }

    pub fn validate(&self) -> Result<(), ParamError> {
        if !(1..=255).contains(&self.midpoint) {
            return Err(ParamError::Midpoint(self.midpoint));
        }
        if self.stats_subsample == 0 {
            return Err(ParamError::Subsample(self.stats_subsample));
        }
        if !(self.var_epsilon.is_finite() && self.var_epsilon > 0.0) {
            return Err(ParamError::VarEpsilon(self.var_epsilon));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn name_id_bijection() {
        for (i, m) in Method::ALL.iter().enumerate() {
            assert_eq!(m.id() as usize, i);
            assert_eq!(Method::from_id(i as u8), Some(*m));
            assert_eq!(m.name().parse::<Method>(), Ok(*m));
        }
        assert_eq!(Method::from_id(7), None);
        assert!("Otsu".parse::<Method>().is_err());
    }

    #[test]
    fn param_validation() {
        assert!(EnhanceParams::default().validate().is_ok());
        assert_eq!(
            EnhanceParams::default().with_midpoint(0).validate(),
            Err(ParamError::Midpoint(0))
        );
        assert!(EnhanceParams::default()
            .with_midpoint(256)
            .validate()
            .is_err());
        assert!(EnhanceParams::default()
            .with_subsample(0)
            .validate()
            .is_err());
        let p = EnhanceParams {
            var_epsilon: 0.0,
            ..Default::default()
        };
        assert!(p.validate().is_err());
    }
}
