//! Solution file: fitted Goursat coefficients plus diagnostics, versioned.

use std::path::Path;

use aniso_monogenic::{AnisoParam, BvpSolution, CPoly, Complex, MonogenicFunction};
use serde::{Deserialize, Serialize};

use crate::config::SolveConfig;
use crate::error::{invalid, CliResult};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SolutionFile {
    pub format_version: u32,
    pub config: SolveConfig,
    pub f1: PolyRecord,
    pub f2: PolyRecord,
    pub diagnostics: Diagnostics,
}

/// `Σ c_n ((w − center)/scale)ⁿ`, complex numbers as `[re, im]`.
#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct PolyRecord {
    pub center: [f64; 2],
    pub scale: f64,
    pub coefficients: Vec<[f64; 2]>,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct Diagnostics {
    pub boundary_residual_max: f64,
    pub boundary_residual_rms: f64,
    pub rank: usize,
    pub unknowns: usize,
    pub condition_estimate: f64,
}

impl PolyRecord {
    fn from_poly(f: &CPoly<f64>) -> Self {
        Self {
            center: [f.center().re, f.center().im],
            scale: *f.scale(),
            coefficients: f.coeffs().iter().map(|c| [c.re, c.im]).collect(),
        }
    }

    fn to_poly(&self) -> CliResult<CPoly<f64>> {
        if !(self.scale.is_finite() && self.scale != 0.0) {
            return Err(invalid("solution file: basis scale must be finite and nonzero"));
        }
        let coeffs = self.coefficients.iter().map(|&[re, im]| Complex::new(re, im)).collect();
        Ok(CPoly::with_basis(coeffs, Complex::new(self.center[0], self.center[1]), self.scale))
    }
}

impl SolutionFile {
    pub fn new(config: SolveConfig, sol: &BvpSolution<f64>) -> Self {
        Self {
            format_version: FORMAT_VERSION,
            config,
            f1: PolyRecord::from_poly(&sol.phi.f1),
            f2: PolyRecord::from_poly(&sol.phi.f2),
            diagnostics: Diagnostics {
                boundary_residual_max: sol.boundary_residual.max,
                boundary_residual_rms: sol.boundary_residual.rms,
                rank: sol.rank,
                unknowns: sol.unknowns,
                condition_estimate: sol.condition_estimate,
            },
        }
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| invalid(format!("cannot read solution {}: {e}", path.display())))?;
        let value: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| invalid(format!("invalid solution {}: {e}", path.display())))?;
        match value.get("format_version").and_then(serde_json::Value::as_u64) {
            Some(v) if v == u64::from(FORMAT_VERSION) => {}
            Some(v) => return Err(invalid(format!("unsupported solution format version {v} (expected {FORMAT_VERSION})"))),
            None => return Err(invalid("solution file lacks an integer `format_version`")),
        }
        serde_json::from_value(value).map_err(|e| invalid(format!("invalid solution {}: {e}", path.display())))
    }

    pub fn save(&self, path: &Path) -> CliResult<()> {
        let mut text = serde_json::to_string_pretty(self).expect("solution serializes");
        text.push('\n');
        std::fs::write(path, text).map_err(|e| invalid(format!("cannot write {}: {e}", path.display())))
    }

    pub fn phi(&self) -> CliResult<MonogenicFunction<f64>> {
        let param = AnisoParam::new(self.config.p)?;
        Ok(MonogenicFunction::new(self.f1.to_poly()?, self.f2.to_poly()?, param))
    }

    /// Polynomial degree of the stored trial space.
    pub fn degree(&self) -> usize {
        self.f1.coefficients.len().max(self.f2.coefficients.len()).saturating_sub(1)
    }
}
