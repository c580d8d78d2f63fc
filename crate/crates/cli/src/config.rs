//! Solve configuration: JSON schema, validation and conversion into a
//! boundary value problem.

use std::path::{Path, PathBuf};

use aniso_monogenic::solver::BoundaryTable;
use aniso_monogenic::{AnisoParam, BoundaryData, BvpProblem, Domain, SolverConfig};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, CliResult};

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SolveConfig {
    pub p: f64,
    pub domain: DomainSpec,
    pub boundary: BoundarySpec,
    pub solver: SolverSpec,
    pub output: String,
}

/// `kind` selects which of the shape fields are required.
#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct DomainSpec {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub semiaxes: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corner: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub widths: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_point: Option<[f64; 2]>,
}

/// Either the pair of expressions `u1`, `u3` in `x` and `y`, or a CSV file
/// with columns `t,u1,u3`.
#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct BoundarySpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u1: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u3: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub csv: Option<String>,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SolverSpec {
    pub degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub collocation_count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub svd_cutoff: Option<f64>,
}

impl SolveConfig {
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| invalid(format!("cannot read config {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| invalid(format!("invalid config {}: {e}", path.display())))
    }

    pub fn param(&self) -> CliResult<AnisoParam<f64>> {
        Ok(AnisoParam::new(self.p)?)
    }

    pub fn solver_config(&self, param: &AnisoParam<f64>) -> CliResult<SolverConfig<f64>> {
        let mut cfg = SolverConfig::new(self.solver.degree, param);
        if let Some(m) = self.solver.collocation_count {
            cfg = cfg.with_collocation_count(m);
        }
        if let Some(cutoff) = self.solver.svd_cutoff {
            cfg = cfg.with_svd_cutoff(cutoff);
        }
        cfg.validate()?;
        Ok(cfg)
    }

    /// Validates everything and reads boundary data; no numerics run here.
    pub fn problem(&self, base_dir: &Path) -> CliResult<BvpProblem<f64>> {
        let param = self.param()?;
        let domain = self.domain.build()?;
        let data = self.boundary.load(base_dir)?;
        Ok(BvpProblem::new(param, domain, data))
    }
}

fn need<T: Copy>(field: Option<T>, name: &str, kind: &str) -> CliResult<T> {
    field.ok_or_else(|| invalid(format!("domain of kind {kind} requires `{name}`")))
}

impl DomainSpec {
    pub fn build(&self) -> CliResult<Domain<f64>> {
        let kind = self.kind.as_str();
        let (allowed, domain): (&[&str], _) = match kind {
            "disk" => (
                &["center", "radius"],
                Domain::disk(need(self.center, "center", kind)?, need(self.radius, "radius", kind)?),
            ),
            "ellipse" => (
                &["center", "semiaxes"],
                Domain::ellipse(need(self.center, "center", kind)?, need(self.semiaxes, "semiaxes", kind)?),
            ),
            "rectangle" => (
                &["corner", "widths"],
                Domain::rectangle(need(self.corner, "corner", kind)?, need(self.widths, "widths", kind)?),
            ),
            other => return Err(invalid(format!("unknown domain kind `{other}` (expected disk, ellipse or rectangle)"))),
        };
        let present = [
            ("center", self.center.is_some()),
            ("radius", self.radius.is_some()),
            ("semiaxes", self.semiaxes.is_some()),
            ("corner", self.corner.is_some()),
            ("widths", self.widths.is_some()),
        ];
        if let Some((name, _)) = present.iter().find(|(name, set)| *set && !allowed.contains(name)) {
            return Err(invalid(format!("field `{name}` does not apply to a {kind} domain")));
        }
        let domain = domain?;
        Ok(match self.base_point {
            Some(b) => domain.with_base_point(b)?,
            None => domain,
        })
    }
}

/// Parses `source` as an expression in `x` and `y`.
pub fn parse_expression(name: &str, source: &str) -> CliResult<impl Fn(f64, f64) -> f64 + Send + Sync + 'static> {
    let expr: meval::Expr = source
        .parse()
        .map_err(|e| invalid(format!("cannot parse {name} = \"{source}\": {e}")))?;
    // binding reports unknown variables and functions up front
    let bound = expr
        .clone()
        .bind2("x", "y")
        .map_err(|e| invalid(format!("cannot use {name} = \"{source}\": {e}")))?;
    drop(bound);
    Ok(move |x: f64, y: f64| {
        expr.eval_with_context(([("x", x), ("y", y)], meval::builtin()))
            .unwrap_or(f64::NAN)
    })
}

impl BoundarySpec {
    pub fn load(&self, base_dir: &Path) -> CliResult<BoundaryData<f64>> {
        match (&self.u1, &self.u3, &self.csv) {
            (Some(u1), Some(u3), None) => Ok(BoundaryData::functions(
                parse_expression("u1", u1)?,
                parse_expression("u3", u3)?,
            )),
            (None, None, Some(csv)) => {
                let path = resolve(base_dir, csv);
                Ok(BoundaryData::Table(read_table(&path)?))
            }
            _ => Err(invalid("boundary needs either both `u1` and `u3` expressions or a `csv` path")),
        }
    }
}

/// Relative paths are taken against the directory holding the config.
pub fn resolve(base_dir: &Path, path: &str) -> PathBuf {
    let p = Path::new(path);
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        base_dir.join(p)
    }
}

fn read_table(path: &Path) -> CliResult<BoundaryTable<f64>> {
    let mut reader = csv::Reader::from_path(path)
        .map_err(|e| invalid(format!("cannot read boundary file {}: {e}", path.display())))?;
    let headers = reader
        .headers()
        .map_err(|e| invalid(format!("{}: {e}", path.display())))?
        .clone();
    let expected = ["t", "u1", "u3"];
    if headers.iter().map(str::trim).ne(expected) {
        return Err(invalid(format!("{}: header must be t,u1,u3", path.display())));
    }
    let (mut t, mut u1, mut u3) = (Vec::new(), Vec::new(), Vec::new());
    for (line, record) in reader.records().enumerate() {
        let record = record.map_err(|e| invalid(format!("{}: {e}", path.display())))?;
        let mut values = [0.0; 3];
        for (slot, field) in values.iter_mut().zip(record.iter()) {
            *slot = field
                .trim()
                .parse()
                .map_err(|_| invalid(format!("{} row {}: `{field}` is not a number", path.display(), line + 2)))?;
        }
        if record.len() != 3 {
            return Err(invalid(format!("{} row {}: expected 3 columns", path.display(), line + 2)));
        }
        t.push(values[0]);
        u1.push(values[1]);
        u3.push(values[2]);
    }
    Ok(BoundaryTable::new(t, u1, u3)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expression_grammar() {
        let f = parse_expression("u1", "2*x^2 - sin(y) + cos(0)*exp(x/2)").unwrap();
        let (x, y) = (0.3f64, -1.2f64);
        let expected = 2.0 * x * x - y.sin() + (x / 2.0).exp();
        assert!((f(x, y) - expected).abs() < 1e-15);
        assert!(parse_expression("u1", "2*").is_err());
        assert!(parse_expression("u3", "x + t").is_err());
        assert!(parse_expression("u3", "foo(x)").is_err());
    }

    #[test]
    fn relative_paths_follow_config_directory() {
        assert_eq!(resolve(Path::new("/a/b"), "c.csv"), PathBuf::from("/a/b/c.csv"));
        assert_eq!(resolve(Path::new("/a/b"), "/c.csv"), PathBuf::from("/c.csv"));
    }

    #[test]
    fn domain_fields_are_checked() {
        let spec = |json: &str| serde_json::from_str::<DomainSpec>(json).unwrap().build();
        assert!(spec(r#"{"kind": "ellipse", "center": [0, 0], "semiaxes": [2, 1]}"#).is_ok());
        assert!(spec(r#"{"kind": "ellipse", "center": [0, 0]}"#).is_err());
        assert!(spec(r#"{"kind": "disk", "center": [0, 0], "radius": 1, "corner": [0, 0]}"#).is_err());
        assert!(spec(r#"{"kind": "annulus", "center": [0, 0], "radius": 1}"#).is_err());
        let rect = spec(r#"{"kind": "rectangle", "corner": [0, 0], "widths": [2, 1], "base_point": [0.5, 0.5]}"#);
        assert_eq!(rect.unwrap().base_point(), [0.5, 0.5]);
    }
}
