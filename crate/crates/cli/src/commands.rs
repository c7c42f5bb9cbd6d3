use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use starlike_core::criteria::{self, proof_extremal, t2_order};
use starlike_core::{
    jack_probe, make_family, starlike_q, target_disk, Complex64, ConclusionChecks, FamilyId,
    FamilySpec, FunctionHandle, SamplingGrid, SchwarzFunction, Theorem, TheoremRun,
};

use crate::args::{
    Command, Format, FunctionArgs, GridArgs, JackArgs, PlotArgs, ProofScanArgs, SweepArgs,
    ToleranceArgs, VerifyArgs,
};
use crate::output::emit;
use crate::report::{
    to_csv, to_json, ConclusionRecord, ConfigEcho, HypothesisRecord, JackRecord, PassFlags,
    ProofScanRecord, RadiusRow, ReportEnvelope, SweepRow, Version,
};
use crate::svg::{Curve, Plot, Target, View};
use crate::{CliError, CliResult};

/// Largest `|extremal - bound|` accepted by `proof-scan`.
pub const PROOF_SCAN_TOL: f64 = 1e-9;

pub fn dispatch(command: Command) -> CliResult<bool> {
    match command {
        Command::Verify(a) => verify(a),
        Command::Sweep(a) => sweep(a),
        Command::Jack(a) => jack(a),
        Command::ProofScan(a) => proof_scan(a),
        Command::Plot(a) => plot(a),
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn resolve_theorem(args: &FunctionArgs) -> CliResult<Theorem> {
    let inferred = match args.family {
        FamilyId::Ex1High | FamilyId::Ex1Low => Some(Theorem::One),
        FamilyId::Ex2Pos | FamilyId::Ex2Neg => Some(Theorem::Two),
        _ => None,
    };
    args.theorem
        .or(inferred)
        .ok_or_else(|| usage(format!("--theorem is required for {}", args.family)))
}

/// The function under test at `beta`; parametric families take their own β from it.
/// Both the family's and the criterion's intervals are checked.
pub fn function_at(id: FamilyId, theorem: Theorem, beta: f64) -> CliResult<FunctionHandle> {
    let spec = if id.is_parametric() {
        FamilySpec::parametric(id, beta)?
    } else {
        FamilySpec::builtin(id)?
    };
    theorem.check_beta(beta)?;
    Ok(make_family(spec)?)
}

fn grid(args: &GridArgs) -> CliResult<SamplingGrid> {
    Ok(SamplingGrid::new(args.radii.clone(), args.angles)?)
}

fn checks(args: &ToleranceArgs) -> CliResult<ConclusionChecks> {
    for (name, v) in [
        ("--schwarz-tol", args.schwarz_tol),
        ("--order-tol", args.order_tol),
    ] {
        if !(v >= 0.0 && v.is_finite()) {
            return Err(usage(format!(
                "{name} must be a finite non-negative number, got {v}"
            )));
        }
    }
    Ok(ConclusionChecks {
        schwarz_tol: args.schwarz_tol,
        order_tol: args.order_tol,
    })
}

pub fn envelope(
    command: &str,
    family: FamilyId,
    grid: &SamplingGrid,
    checks: &ConclusionChecks,
    run: &TheoremRun,
    duration_ms: Option<f64>,
) -> ReportEnvelope {
    let conclusion = run.conclusion_holds(checks);
    ReportEnvelope {
        version: Version::current(),
        config: ConfigEcho {
            command: command.to_string(),
            theorem: run.theorem.number(),
            family: family.to_string(),
            beta: run.beta,
            radii: grid.radii().to_vec(),
            angles: grid.angular_count(),
            schwarz_tol: checks.schwarz_tol,
            order_tol: checks.order_tol,
        },
        hypothesis: HypothesisRecord::from(&run.hypothesis),
        conclusion: ConclusionRecord::from(&run.conclusion),
        pass: PassFlags {
            hypothesis: run.hypothesis.satisfied,
            conclusion,
            overall: run.hypothesis.satisfied && conclusion,
        },
        duration_ms,
    }
}

fn write(out: &Option<PathBuf>, bytes: &[u8]) -> CliResult<()> {
    Ok(emit(out.as_deref(), bytes)?)
}

fn serialization(e: impl std::fmt::Display) -> CliError {
    CliError::Evaluation(format!("cannot serialize report: {e}"))
}

fn verify(a: VerifyArgs) -> CliResult<bool> {
    let start = Instant::now();
    let format = a.format.unwrap_or(Format::Json);
    if format == Format::Svg {
        return Err(usage("verify writes json or csv; use `plot` for svg"));
    }
    let theorem = resolve_theorem(&a.function)?;
    let f = function_at(a.function.family, theorem, a.beta)?;
    let grid = grid(&a.grid)?;
    let checks = checks(&a.tol)?;

    let run = criteria::run(theorem, &f, a.beta, &grid)?;
    let duration = a.record_timing.then(|| start.elapsed().as_secs_f64() * 1e3);
    let report = envelope("verify", a.function.family, &grid, &checks, &run, duration);

    let bytes = match format {
        Format::Json => to_json(&report).map_err(serialization)?,
        _ => {
            let rows: Vec<RadiusRow> = report
                .hypothesis
                .per_radius
                .iter()
                .zip(&report.conclusion.per_radius)
                .map(|(h, c)| RadiusRow {
                    r: h.r,
                    extreme_re_p: h.extreme,
                    witness_re: h.witness_re,
                    witness_im: h.witness_im,
                    max_abs_w: c.max_abs_w,
                    schwarz_ratio: c.schwarz_ratio,
                    disk_slack: c.disk_slack,
                    min_re_q: c.min_re_q,
                })
                .collect();
            to_csv(&rows).map_err(serialization)?
        }
    };
    write(&a.out, &bytes)?;

    eprintln!(
        "theorem {theorem}, {} at beta {}: hypothesis {} (margin {:e}), conclusion {}",
        a.function.family,
        a.beta,
        if report.pass.hypothesis {
            "satisfied"
        } else {
            "violated"
        },
        report.hypothesis.margin_at_rmax,
        if report.pass.conclusion {
            "holds"
        } else {
            "fails"
        },
    );
    Ok(report.pass.overall)
}

/// `steps` equally spaced values from `lo` to `hi`, both included.
pub fn beta_range(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    if steps == 1 {
        return vec![lo];
    }
    let last = (steps - 1) as f64;
    (0..steps)
        .map(|i| {
            if i + 1 == steps {
                hi
            } else {
                lo + (hi - lo) * i as f64 / last
            }
        })
        .collect()
}

fn sweep(a: SweepArgs) -> CliResult<bool> {
    let format = a.format.unwrap_or(Format::Csv);
    if format == Format::Svg {
        return Err(usage("sweep writes csv or json"));
    }
    let theorem = resolve_theorem(&a.function)?;
    let family = a.function.family;
    if !(a.beta_min <= a.beta_max) {
        return Err(usage(format!(
            "--beta-min {} must not exceed --beta-max {}",
            a.beta_min, a.beta_max
        )));
    }
    // Both intervals are connected except the criterion-2 one, which has two
    // pieces; the endpoints must sit in the same piece.
    if theorem == Theorem::Two && (a.beta_min <= -1.0) != (a.beta_max <= -1.0) {
        return Err(usage(format!(
            "beta range [{}, {}] straddles the gap of {}",
            a.beta_min,
            a.beta_max,
            theorem.interval()
        )));
    }
    let betas = beta_range(a.beta_min, a.beta_max, a.steps);
    let functions = betas
        .iter()
        .map(|&b| function_at(family, theorem, b))
        .collect::<CliResult<Vec<_>>>()?;
    let grid = grid(&a.grid)?;
    let checks = checks(&a.tol)?;

    let mut rows = Vec::with_capacity(betas.len());
    let mut all_pass = true;
    for (&beta, f) in betas.iter().zip(&functions) {
        let run = criteria::run(theorem, f, beta, &grid)?;
        all_pass &= run.passes(&checks);
        let outer_h = run.hypothesis.per_radius.last().expect("grid has a radius");
        let outer_c = run.conclusion.per_radius.last().expect("grid has a radius");
        rows.push(SweepRow {
            beta,
            bound: run.hypothesis.bound,
            extreme_re_p: outer_h.extreme,
            margin: run.hypothesis.margin_at_rmax,
            max_abs_w: outer_c.max_abs_w,
            order_estimate: run.conclusion.order_estimate,
        });
    }

    let bytes = match format {
        Format::Json => to_json(&rows).map_err(serialization)?,
        _ => to_csv(&rows).map_err(serialization)?,
    };
    write(&a.out, &bytes)?;
    Ok(all_pass)
}

pub fn parse_w(spec: &str) -> CliResult<SchwarzFunction> {
    let bad = || {
        usage(format!(
            "cannot parse --w {spec:?}; expected monomial:<n>, blaschke:<a>, \
             blaschke:<re>,<im> or induced:t<1|2>:<family>:<beta>"
        ))
    };
    let (kind, rest) = spec.split_once(':').ok_or_else(bad)?;
    match kind {
        "monomial" => {
            let n = rest.parse::<u32>().map_err(|_| bad())?;
            Ok(SchwarzFunction::monomial(n)?)
        }
        "blaschke" => {
            let a = match rest.split_once(',') {
                Some((re, im)) => Complex64::new(
                    re.parse().map_err(|_| bad())?,
                    im.parse().map_err(|_| bad())?,
                ),
                None => Complex64::new(rest.parse().map_err(|_| bad())?, 0.0),
            };
            Ok(SchwarzFunction::blaschke(a)?)
        }
        "induced" => {
            let (theorem, rest) = rest.split_once(':').ok_or_else(bad)?;
            let (family, beta) = rest.rsplit_once(':').ok_or_else(bad)?;
            let theorem: Theorem = theorem.parse()?;
            let family: FamilyId = family.parse()?;
            let beta: f64 = beta.parse().map_err(|_| bad())?;
            let f = function_at(family, theorem, beta)?;
            Ok(SchwarzFunction::induced(theorem, f, beta)?)
        }
        _ => Err(bad()),
    }
}

fn complex(re: f64, im: f64) -> String {
    let sign = if im.is_sign_negative() { '-' } else { '+' };
    format!("{re:?} {sign} {:?}i", im.abs())
}

fn jack(a: JackArgs) -> CliResult<bool> {
    let w = parse_w(&a.w)?;
    if !(a.tol > 0.0 && a.tol.is_finite()) {
        return Err(usage(format!("--tol must be positive, got {}", a.tol)));
    }
    let probe = jack_probe(&w, a.r, a.angles)?;
    let record = JackRecord::new(a.w.clone(), a.angles, a.tol, &probe);
    println!("w           {}", record.w);
    println!("r           {}", record.r);
    println!("theta_star  {:?}", record.theta_star);
    println!(
        "w(z0)       {}",
        complex(record.w_at_max_re, record.w_at_max_im)
    );
    println!("ratio       {}", complex(record.ratio_re, record.ratio_im));
    println!("k_estimate  {:?}", record.k_estimate);
    println!(
        "k >= 1      {} (tol {})",
        if record.holds { "holds" } else { "fails" },
        record.tol
    );
    if a.out.is_some() {
        write(&a.out, &to_json(&record).map_err(serialization)?)?;
    }
    Ok(record.holds)
}

fn proof_scan(a: ProofScanArgs) -> CliResult<bool> {
    let scan = proof_extremal(a.theorem, a.beta, a.theta_steps)?;
    let bound = a.theorem.bound(a.beta)?;
    let record = ProofScanRecord::new(a.theorem.number(), a.beta, &scan, bound, PROOF_SCAN_TOL);
    println!("theorem     {}", record.theorem);
    println!("beta        {}", record.beta);
    println!("extremal    {:?}", record.extremal_value);
    println!("theta_star  {:?}", record.theta_star);
    println!("bound       {:?}", record.bound);
    println!("difference  {:e}", record.difference);
    if a.out.is_some() {
        write(&a.out, &to_json(&record).map_err(serialization)?)?;
    }
    Ok(record.pass)
}

/// `zf'/f` along each circle of the grid, in angle order.
pub fn image_curves(f: &FunctionHandle, grid: &SamplingGrid) -> CliResult<Vec<Vec<Complex64>>> {
    grid.radii()
        .iter()
        .map(|&r| {
            let values: Vec<_> = (0..grid.angular_count())
                .into_par_iter()
                .map(|j| starlike_q(f, Complex64::from_polar(r, grid.theta(j))))
                .collect();
            values
                .into_iter()
                .collect::<starlike_core::Result<Vec<_>>>()
                .map_err(CliError::from)
        })
        .collect()
}

fn plot(a: PlotArgs) -> CliResult<bool> {
    let theorem = resolve_theorem(&a.function)?;
    let f = function_at(a.function.family, theorem, a.beta)?;
    let grid = grid(&a.grid)?;
    let view = View::from_slice(&a.view).map_err(usage)?;

    let (target, target_label) = match theorem {
        Theorem::One => {
            let disk = target_disk(a.beta)?;
            (
                Target::Disk {
                    center: disk.center.re,
                    radius: disk.radius,
                },
                format!("|q - {0:.4}| = {0:.4}", disk.radius),
            )
        }
        Theorem::Two => {
            let x = t2_order(a.beta);
            (Target::HalfPlane { x }, format!("Re q = {x:.4}"))
        }
    };
    let curves = image_curves(&f, &grid)?
        .into_iter()
        .zip(grid.radii())
        .map(|(points, r)| Curve {
            label: format!("r = {r}"),
            points,
        })
        .collect();
    let svg = Plot {
        title: format!(
            "zf'/f of {} on |z| = r, beta = {}, theorem {}",
            a.function.family, a.beta, theorem
        ),
        view,
        target,
        target_label,
        curves,
    }
    .render();
    write(&a.out, svg.as_bytes())?;
    Ok(true)
}
