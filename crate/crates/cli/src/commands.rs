use std::path::Path;

use aniso_monogenic::suites::{run_all, DomainChoice};
use aniso_monogenic::solver::ResidualStats;
use aniso_monogenic::{reconstruct_u, solve_bvp, AnisoParam, BvpSolution};

use crate::config::{resolve, SolveConfig};
use crate::error::{invalid, CliError, CliResult};
use crate::solution::SolutionFile;

pub fn solve(config_path: &Path) -> CliResult<()> {
    let config = SolveConfig::load(config_path)?;
    let base_dir = config_path.parent().unwrap_or(Path::new("."));
    let problem = config.problem(base_dir)?;
    let cfg = config.solver_config(&problem.param)?;
    let out = resolve(base_dir, &config.output);
    let sol = solve_bvp(&problem, &cfg)?;
    let file = SolutionFile::new(config, &sol);
    file.save(&out)?;
    println!(
        "residual max {:.3e} rms {:.3e}, rank {}/{}, condition {:.3e}; wrote {}",
        sol.boundary_residual.max,
        sol.boundary_residual.rms,
        sol.rank,
        sol.unknowns,
        sol.condition_estimate,
        out.display()
    );
    Ok(())
}

/// Parses `NX,NY`.
pub fn parse_grid(spec: &str) -> CliResult<(usize, usize)> {
    let bad = || invalid(format!("grid must be NX,NY with positive integers (got `{spec}`)"));
    let (nx, ny) = spec.split_once(',').ok_or_else(bad)?;
    let nx: usize = nx.trim().parse().map_err(|_| bad())?;
    let ny: usize = ny.trim().parse().map_err(|_| bad())?;
    if nx == 0 || ny == 0 {
        return Err(bad());
    }
    Ok((nx, ny))
}

/// Evenly spaced values covering `[lo, hi]`; a single value sits at the middle.
fn axis(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![0.5 * (lo + hi)];
    }
    let step = (hi - lo) / (n - 1) as f64;
    (0..n).map(|i| lo + i as f64 * step).collect()
}

/// Shortest round-trip decimal; exponent form for very small or large values.
fn format_value(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 || (1e-4..1e15).contains(&a) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

pub fn eval(solution_path: &Path, grid: (usize, usize), base_value: f64, out: &Path) -> CliResult<()> {
    if !base_value.is_finite() {
        return Err(invalid("base value must be finite"));
    }
    let file = SolutionFile::load(solution_path)?;
    let phi = file.phi()?;
    let domain = file.config.domain.build()?;
    let (lo, hi) = domain.bounding_box();
    let xs = axis(lo[0], hi[0], grid.0);
    let ys = axis(lo[1], hi[1], grid.1);
    let targets: Vec<[f64; 2]> = ys
        .iter()
        .flat_map(|&y| xs.iter().map(move |&x| [x, y]))
        .filter(|&[x, y]| domain.contains(x, y))
        .collect();
    if targets.is_empty() {
        eprintln!("warning: no grid point lies inside the domain; writing header only");
    }
    let sol = BvpSolution {
        phi: phi.clone(),
        coefficients: Vec::new(),
        boundary_residual: ResidualStats { max: 0.0, rms: 0.0 },
        rank: file.diagnostics.rank,
        unknowns: file.diagnostics.unknowns,
        condition_estimate: file.diagnostics.condition_estimate,
        degree: file.degree(),
    };
    let values = reconstruct_u(&sol, &domain, &targets, base_value)?;
    let mut writer =
        csv::Writer::from_path(out).map_err(|e| invalid(format!("cannot write {}: {e}", out.display())))?;
    let io = |e: csv::Error| invalid(format!("cannot write {}: {e}", out.display()));
    writer.write_record(["x", "y", "u", "U1", "U3"]).map_err(io)?;
    for (&[x, y], u) in targets.iter().zip(values) {
        let c = phi.components(&x, &y);
        writer
            .write_record([x, y, u, c[0], c[2]].map(format_value))
            .map_err(io)?;
    }
    writer.flush().map_err(|e| invalid(format!("cannot write {}: {e}", out.display())))?;
    println!("wrote {} points to {}", targets.len(), out.display());
    Ok(())
}

pub fn verify(p: f64, degree: usize, domain: DomainChoice) -> CliResult<()> {
    let param = AnisoParam::new(p)?;
    let reports = run_all(&param, degree, domain)?;
    let failed = reports.iter().filter(|r| !r.passed).count();
    for r in &reports {
        println!("{} {}: {}", if r.passed { "PASS" } else { "FAIL" }, r.name, r.detail);
    }
    if failed > 0 {
        return Err(CliError::SuiteFailure(failed));
    }
    Ok(())
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_spec() {
        assert_eq!(parse_grid("11,7").unwrap(), (11, 7));
        assert_eq!(parse_grid(" 3 , 4 ").unwrap(), (3, 4));
        for bad in ["", "3", "3,", "0,2", "2,x", "1.5,2"] {
            assert!(parse_grid(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn axis_spacing() {
        assert_eq!(axis(-1.0, 1.0, 3), vec![-1.0, 0.0, 1.0]);
        assert_eq!(axis(0.0, 4.0, 1), vec![2.0]);
    }

    #[test]
    fn value_format_round_trips() {
        for v in [0.0, 0.5, -3.25, 1e-17, 123456.789, -2.5e20, f64::MIN_POSITIVE] {
            assert_eq!(format_value(v).parse::<f64>().unwrap().to_bits(), v.to_bits());
        }
        assert_eq!(format_value(1e-17), "1e-17");
    }
}
