//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when `verify` finds a failing check, 2 for
//! usage or input errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::functional::{s_value, AngleConfig};
use crate::lhv::classical_bound;
use crate::optimizer::{
    optimize_angles, product_adversarial_sweep, scan_family, DEFAULT_GRID, DEFAULT_REFINE_ITERS,
};
use crate::report::{Field, Format, Report, Table};
use crate::spin::{product_state, singlet_state, Angle, Ket, SpinState};
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AngleUnit {
    Degrees,
    Radians,
}

impl AngleUnit {
    pub fn angle(self, v: f64) -> Result<Angle> {
        match self {
            AngleUnit::Degrees => Angle::from_degrees(v),
            AngleUnit::Radians => Angle::from_radians(v),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Json => Format::Json,
            OutputFormat::Csv => Format::Csv,
        }
    }
}

#[derive(Debug, Clone, Parser)]
#[command(
    name = "qutrit-bell",
    version,
    about = "Spin-1 Bell functional: evaluation, LHV bound, angle search"
)]
pub struct RunConfig {
    /// Unit of every angle given on the command line.
    #[arg(long, value_enum, default_value_t = AngleUnit::Degrees, global = true)]
    pub unit: AngleUnit,

    #[arg(long, value_enum, default_value_t = OutputFormat::Json, global = true)]
    pub format: OutputFormat,

    #[arg(long, default_value_t = 42, global = true)]
    pub seed: u64,

    /// Write the report here instead of stdout.
    #[arg(long = "out", global = true)]
    pub output_path: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Evaluate S and its terms at four angles.
    EvalS {
        /// singlet | product:+1,-1 | product:custom
        #[arg(long, default_value = "singlet", value_parser = parse_state_name)]
        state: StateName,
        /// b1,b1',b2,b2'
        #[arg(long, allow_hyphen_values = true, value_parser = parse_angles)]
        angles: [f64; 4],
        /// Particle-1 ket for product:custom as re,im,re,im,re,im in (+1,0,-1) order.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_ket)]
        ket1: Option<Ket>,
        /// Particle-2 ket, same layout as --ket1.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_ket)]
        ket2: Option<Ket>,
    },
    /// Scan S along (0, 2t, t, 3t) for the singlet.
    ScanFamily {
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        t_min: f64,
        #[arg(long, default_value_t = 360.0, allow_hyphen_values = true)]
        t_max: f64,
        #[arg(long, default_value_t = 7201)]
        steps: usize,
    },
    /// Grid plus pattern search over all four angles.
    Optimize {
        /// singlet | product:+1,-1
        #[arg(long, default_value = "singlet", value_parser = parse_state_name)]
        state: StateName,
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: usize,
        #[arg(long, default_value_t = DEFAULT_REFINE_ITERS)]
        refine: usize,
    },
    /// Exhaustive maximum of S over deterministic local strategies.
    LhvBound,
    /// Largest S over random pure product states and settings.
    ProductSweep {
        #[arg(long, default_value_t = 1000)]
        states: usize,
        #[arg(long, default_value_t = 100)]
        configs: usize,
    },
    /// Run the invariant suite.
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateName {
    Singlet,
    ProductUpDown,
    ProductCustom,
}

impl StateName {
    fn label(self) -> &'static str {
        match self {
            StateName::Singlet => "singlet",
            StateName::ProductUpDown => "product:+1,-1",
            StateName::ProductCustom => "product:custom",
        }
    }
}

fn parse_state_name(s: &str) -> std::result::Result<StateName, String> {
    match s {
        "singlet" => Ok(StateName::Singlet),
        "product:+1,-1" => Ok(StateName::ProductUpDown),
        "product:custom" => Ok(StateName::ProductCustom),
        _ => Err(format!(
            "unknown state '{s}' (expected singlet, product:+1,-1 or product:custom)"
        )),
    }
}

fn parse_reals(s: &str, n: usize) -> std::result::Result<Vec<f64>, String> {
    let vals = s
        .split(',')
        .map(|p| {
            let p = p.trim();
            p.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| format!("'{p}' is not a finite number"))
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    if vals.len() != n {
        return Err(format!(
            "expected {n} comma-separated values, got {}",
            vals.len()
        ));
    }
    Ok(vals)
}

fn parse_angles(s: &str) -> std::result::Result<[f64; 4], String> {
    let v = parse_reals(s, 4)?;
    Ok([v[0], v[1], v[2], v[3]])
}

fn parse_ket(s: &str) -> std::result::Result<Ket, String> {
    let v = parse_reals(s, 6)?;
    Ok([
        Complex64::new(v[0], v[1]),
        Complex64::new(v[2], v[3]),
        Complex64::new(v[4], v[5]),
    ])
}

fn basis_ket(i: usize) -> Ket {
    let mut k = [Complex64::new(0.0, 0.0); 3];
    k[i] = Complex64::new(1.0, 0.0);
    k
}

fn build_state(name: StateName, ket1: Option<&Ket>, ket2: Option<&Ket>) -> Result<SpinState> {
    match name {
        StateName::Singlet => Ok(singlet_state()),
        StateName::ProductUpDown => product_state(&basis_ket(0), &basis_ket(2)),
        StateName::ProductCustom => match (ket1, ket2) {
            (Some(a), Some(b)) => product_state(a, b),
            _ => Err(Error::InvalidArgument(
                "product:custom needs --ket1 and --ket2".into(),
            )),
        },
    }
}

fn angle_record(
    prefix: &'static [&'static str; 4],
    angles: &AngleConfig,
) -> Vec<(&'static str, Field)> {
    prefix
        .iter()
        .zip(angles.to_degrees())
        .map(|(k, v)| (*k, Field::Real(v)))
        .collect()
}

const ANGLE_KEYS: [&str; 4] = [
    "beta1_deg",
    "beta1_prime_deg",
    "beta2_deg",
    "beta2_prime_deg",
];

fn ket_record(prefix: &'static [&'static str; 6], ket: &Ket) -> Vec<(&'static str, Field)> {
    let parts = ket.iter().flat_map(|c| [c.re, c.im]);
    prefix
        .iter()
        .zip(parts)
        .map(|(k, v)| (*k, Field::Real(v)))
        .collect()
}

const KET1_KEYS: [&str; 6] = [
    "ket1_re_up",
    "ket1_im_up",
    "ket1_re_zero",
    "ket1_im_zero",
    "ket1_re_down",
    "ket1_im_down",
];
const KET2_KEYS: [&str; 6] = [
    "ket2_re_up",
    "ket2_im_up",
    "ket2_re_zero",
    "ket2_im_zero",
    "ket2_re_down",
    "ket2_im_down",
];

/// A finished command: the report plus the exit status it implies.
#[derive(Debug, Clone, PartialEq)]
pub struct Execution {
    pub report: Report,
    pub exit_code: i32,
}

pub fn execute(config: &RunConfig) -> Result<Execution> {
    let unit = config.unit;
    let mut exit_code = EXIT_OK;
    let (name, inputs, result, table) = match &config.command {
        Command::EvalS {
            state,
            angles,
            ket1,
            ket2,
        } => {
            let st = build_state(*state, ket1.as_ref(), ket2.as_ref())?;
            let cfg = AngleConfig::new(
                unit.angle(angles[0])?,
                unit.angle(angles[1])?,
                unit.angle(angles[2])?,
                unit.angle(angles[3])?,
            );
            let b = s_value(&st, &cfg);
            let mut inputs = vec![("state", Field::from(state.label()))];
            inputs.extend(angle_record(&ANGLE_KEYS, &cfg));
            let result = vec![
                ("p11_a", b.p11_a.into()),
                ("p11_b", b.p11_b.into()),
                ("p11_c", b.p11_c.into()),
                ("block", b.block.into()),
                ("s", b.s.into()),
                ("violation", b.violates_local_bound().into()),
            ];
            ("eval-s", inputs, result, None)
        }
        Command::ScanFamily {
            t_min,
            t_max,
            steps,
        } => {
            let (lo, hi) = (unit.angle(*t_min)?, unit.angle(*t_max)?);
            let scan = scan_family(&singlet_state(), lo, hi, *steps)?;
            let inputs = vec![
                ("state", Field::from("singlet")),
                ("t_min_deg", lo.degrees().into()),
                ("t_max_deg", hi.degrees().into()),
                ("steps", (*steps).into()),
            ];
            let result = vec![
                ("best_t_deg", scan.best_t.degrees().into()),
                ("best_s", scan.best_s.into()),
            ];
            let table = Table {
                name: "samples",
                columns: vec!["t_deg", "s_value"],
                rows: scan
                    .samples
                    .iter()
                    .map(|(t, s)| vec![Field::Real(t.degrees()), Field::Real(*s)])
                    .collect(),
            };
            ("scan-family", inputs, result, Some(table))
        }
        Command::Optimize {
            state,
            grid,
            refine,
        } => {
            if *state == StateName::ProductCustom {
                return Err(Error::InvalidArgument(
                    "optimize supports singlet and product:+1,-1".into(),
                ));
            }
            let st = build_state(*state, None, None)?;
            let r = optimize_angles(&st, *grid, *refine, config.seed)?;
            let inputs = vec![
                ("state", Field::from(state.label())),
                ("grid", (*grid).into()),
                ("refine", (*refine).into()),
            ];
            let mut result = vec![("best_s", Field::Real(r.best_s))];
            result.extend(angle_record(&ANGLE_KEYS, &r.best_angles));
            result.push(("evaluations", r.evaluations.into()));
            result.push(("improvements", (r.trace.len() - 1).into()));
            ("optimize", inputs, result, None)
        }
        Command::LhvBound => {
            let b = classical_bound();
            let result = vec![
                ("max_s", b.max_s.into()),
                ("a_primary", b.argmax.a_primary.to_string().into()),
                ("a_primed", b.argmax.a_primed.to_string().into()),
                ("b_primary", b.argmax.b_primary.to_string().into()),
                ("b_primed", b.argmax.b_primed.to_string().into()),
                ("strategies", 256usize.into()),
            ];
            ("lhv-bound", vec![], result, None)
        }
        Command::ProductSweep { states, configs } => {
            let r = product_adversarial_sweep(*states, *configs, config.seed)?;
            let inputs = vec![("states", (*states).into()), ("configs", (*configs).into())];
            let mut result = vec![
                ("worst_s", Field::Real(r.worst_s)),
                ("violation", (r.worst_s > 1.0).into()),
            ];
            result.extend(angle_record(&ANGLE_KEYS, &r.witness.angles));
            result.extend(ket_record(&KET1_KEYS, &r.witness.ket1));
            result.extend(ket_record(&KET2_KEYS, &r.witness.ket2));
            ("product-sweep", inputs, result, None)
        }
        Command::Verify => {
            let checks = verify::run_all(config.seed);
            let all_passed = checks.iter().all(|c| c.passed);
            if !all_passed {
                exit_code = EXIT_VERIFY_FAILED;
            }
            let result = vec![
                ("all_passed", all_passed.into()),
                ("checks_run", checks.len().into()),
            ];
            let table = Table {
                name: "checks",
                columns: vec!["check", "passed", "observed", "tolerance", "samples"],
                rows: checks
                    .iter()
                    .map(|c| {
                        vec![
                            Field::from(c.name),
                            c.passed.into(),
                            c.observed.into(),
                            c.tolerance.into(),
                            c.samples.into(),
                        ]
                    })
                    .collect(),
            };
            ("verify", vec![], result, Some(table))
        }
    };
    Ok(Execution {
        report: Report {
            command: name,
            inputs,
            result,
            table,
            seed: config.seed,
        },
        exit_code,
    })
}

/// Runs a parsed configuration, writes the report and returns the exit status.
pub fn run(config: &RunConfig) -> i32 {
    let exec = match execute(config) {
        Ok(e) => e,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    if let Command::Verify = config.command {
        let table = exec.report.table.as_ref().expect("verify has a table");
        for row in &table.rows {
            if let [Field::Text(name), Field::Bool(ok), Field::Real(obs), Field::Real(tol), ..] =
                &row[..]
            {
                let tag = if *ok { "PASS" } else { "FAIL" };
                eprintln!("{tag} {name} (observed {obs:e}, tolerance {tol:e})");
            }
        }
    }
    let text = exec.report.render(config.format.into());
    let written = match &config.output_path {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    match written {
        Ok(()) => {}
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
        Err(e) => {
            eprintln!("error: cannot write report: {e}");
            return EXIT_USAGE;
        }
    }
    exec.exit_code
}
