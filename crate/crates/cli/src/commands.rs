use std::fmt::Write as _;
use std::time::{Duration, Instant};

use solvcover::constructions::wreath_block_embedding;
use solvcover::cover::SolveStats;
use solvcover::io::{read_certificate, read_results_dir, render_tsv, OutcomeRecord};
use solvcover::{
    build, family_bounds, parse_group_spec, render_certificate, render_table, solve_alpha,
    solve_product, verify_certificate, Certificate, CoverOutcome, Error, GroupSpec, GroupTable,
    Mode, Result, ResultRecord, SolveBudget, SolveOptions, Status, DEFAULT_CAP, ENGINE_VERSION,
};

use crate::{BoundsArgs, ModeArg, SolveArgs, TableArgs, VerifyArgs};

const CAP_VAR: &str = "SOLVCOVER_CAP";

fn cap(flag: Option<usize>) -> Result<usize> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var(CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::BadParameter(format!("{CAP_VAR}={v} is not a number"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn modes(m: ModeArg) -> &'static [Mode] {
    match m {
        ModeArg::All => &[Mode::All],
        ModeArg::Involutions => &[Mode::Involutions],
        ModeArg::Both => &[Mode::All, Mode::Involutions],
    }
}

fn symbol(mode: Mode) -> &'static str {
    match mode {
        Mode::All => "α",
        Mode::Involutions => "α_inv",
    }
}

/// How a spec is solved, with what the solve path already knows.
enum Plan {
    Direct(GroupTable),
    Product(Vec<GroupTable>),
    Wreath {
        base: GroupTable,
        blocks: usize,
        full: Option<Box<GroupTable>>,
    },
}

struct Solver<'a> {
    spec: &'a GroupSpec,
    cap: usize,
    opts: SolveOptions,
    log: Vec<String>,
}

impl Solver<'_> {
    fn plan(&mut self) -> Result<(Plan, usize)> {
        match self.spec {
            GroupSpec::Product(factors) => {
                let tables = factors
                    .iter()
                    .map(|f| build(f, self.cap))
                    .collect::<Result<Vec<_>>>()?;
                let order = tables
                    .iter()
                    .try_fold(1usize, |acc, t| acc.checked_mul(t.order()));
                let order =
                    order.ok_or_else(|| Error::BadParameter("product order overflows".into()))?;
                self.log.push(format!(
                    "product of {} factors solved factorwise",
                    tables.len()
                ));
                Ok((Plan::Product(tables), order))
            }
            GroupSpec::Wreath(base, blocks, _) => {
                let base_table = build(base, self.cap)?;
                let order = self
                    .spec
                    .expected_order()
                    .and_then(|o| usize::try_from(o).ok())
                    .ok_or_else(|| Error::BadParameter("wreath product order is unknown".into()))?;
                let full = match build(self.spec, self.cap) {
                    Ok(t) => Some(Box::new(t)),
                    Err(Error::CapExceeded(_)) => {
                        self.log
                            .push(format!("order {order} exceeds the cap; bounds only"));
                        None
                    }
                    Err(e) => return Err(e),
                };
                Ok((
                    Plan::Wreath {
                        base: base_table,
                        blocks: *blocks,
                        full,
                    },
                    order,
                ))
            }
            _ => {
                let t = build(self.spec, self.cap)?;
                let order = t.order();
                Ok((Plan::Direct(t), order))
            }
        }
    }

    fn run(&mut self, plan: &Plan, mode: Mode) -> Result<CoverOutcome> {
        match plan {
            Plan::Direct(t) => solve_alpha(t, mode, &self.opts),
            Plan::Product(ts) => solve_product(ts, mode, &self.opts),
            Plan::Wreath { base, blocks, full } => {
                self.wreath(base, *blocks, full.as_deref(), mode)
            }
        }
    }

    /// A cover of the base group placed in the first block gives the upper
    /// bound; the family lower bound closes the gap when it can.
    fn wreath(
        &mut self,
        base: &GroupTable,
        blocks: usize,
        full: Option<&GroupTable>,
        mode: Mode,
    ) -> Result<CoverOutcome> {
        let start = Instant::now();
        let fallback = |s: &mut Self, why: String| match full {
            Some(t) => {
                s.log
                    .push(format!("{}: {why}; solving the full group", symbol(mode)));
                solve_alpha(t, mode, &s.opts)
            }
            None => Err(Error::BadParameter(format!(
                "{why}, and the group exceeds the cap"
            ))),
        };
        let base_out = solve_alpha(base, mode, &self.opts)?;
        let (Status::Exact, Some(upper)) = (base_out.status, base_out.upper) else {
            return fallback(self, "base group has no exact cover".into());
        };
        let lower = family_bounds(self.spec)
            .implied(mode)
            .map_or(0, |(l, _)| l as usize);
        if lower != upper {
            return fallback(
                self,
                format!("base bound {upper} does not meet the lower bound {lower}"),
            );
        }
        let lifted: Vec<_> = base_out
            .certificate_perms
            .iter()
            .flatten()
            .map(|x| wreath_block_embedding(x, blocks))
            .collect();
        let mut notes = vec![format!(
            "{} = {upper} from the base cover and the lower bound",
            symbol(mode)
        )];
        match full {
            Some(t) => {
                let v = verify_certificate(t, &Certificate::new(mode, lifted.clone()))?;
                if !v.valid {
                    return fallback(self, "lifted base cover does not cover".into());
                }
                notes.push(format!(
                    "lifted certificate verified on {} elements",
                    v.group_order
                ));
            }
            None => notes.push("lifted certificate not verified; group exceeds the cap".into()),
        }
        Ok(CoverOutcome {
            status: Status::Exact,
            lower,
            upper: Some(upper),
            certificate: None,
            certificate_perms: Some(lifted),
            stats: SolveStats {
                nodes: base_out.stats.nodes,
                elapsed: start.elapsed(),
            },
            involutions_only: mode == Mode::Involutions,
            via_quotient: base_out.via_quotient,
            notes,
        })
    }
}

fn describe(out: &CoverOutcome) -> String {
    let secs = out.stats.elapsed.as_secs_f64();
    match (out.status, out.upper) {
        (Status::Exact, _) => format!(
            "{} (exact, {} nodes, {secs:.2}s)",
            out.lower, out.stats.nodes
        ),
        (Status::Interval, Some(u)) => {
            format!(
                "[{},{u}] (budget reached after {} nodes, {secs:.2}s)",
                out.lower, out.stats.nodes
            )
        }
        _ => "∞ (no cover exists)".to_string(),
    }
}

pub fn solve(args: &SolveArgs) -> Result<u8> {
    let spec = parse_group_spec(&args.group)?;
    if !(args.time_limit.is_finite() && args.time_limit > 0.0) {
        return Err(Error::BadParameter(format!(
            "time limit {} must be positive",
            args.time_limit
        )));
    }
    if let Some(n) = args.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::BadParameter(e.to_string()))?;
    }
    let opts = SolveOptions {
        budget: SolveBudget {
            time_limit: Duration::from_secs_f64(args.time_limit),
            node_limit: args.node_limit,
            ..SolveBudget::default()
        },
        parallel: !args.deterministic && args.jobs != Some(1),
        ..SolveOptions::default()
    };
    let mut solver = Solver {
        spec: &spec,
        cap: cap(args.cap)?,
        opts,
        log: Vec::new(),
    };
    let (plan, order) = solver.plan()?;
    println!("group: {} (order {order})", spec.display_name());

    let mut record = ResultRecord {
        group: spec.to_string(),
        name: spec.display_name(),
        order,
        alpha: None,
        alpha_inv: None,
        log: Vec::new(),
        engine_version: ENGINE_VERSION.to_string(),
    };
    let mut code = 0;
    for &mode in modes(args.mode) {
        let out = solver.run(&plan, mode)?;
        println!("{} = {}", symbol(mode), describe(&out));
        if out.status == Status::Interval {
            code = 2;
        }
        if args.emit_certificate {
            if let Some(perms) = &out.certificate_perms {
                let mut cert = Certificate::new(mode, perms.clone());
                cert.group = Some(spec.clone());
                print!("{}", render_certificate(&cert));
            }
        }
        let mut rec = OutcomeRecord::from(&out);
        if !args.emit_certificate {
            rec.certificate = None;
        }
        match mode {
            Mode::All => record.alpha = Some(rec),
            Mode::Involutions => record.alpha_inv = Some(rec),
        }
    }
    record.log = solver.log;
    if let Some(path) = &args.out {
        std::fs::write(path, record.to_text())?;
    }
    Ok(code)
}

pub fn verify(args: &VerifyArgs) -> Result<u8> {
    let mut cert = read_certificate(&args.certificate)?;
    let spec = match (&args.group, &cert.group) {
        (Some(g), _) => parse_group_spec(g)?,
        (None, Some(g)) => g.clone(),
        (None, None) => {
            return Err(Error::BadParameter(
                "no --group and no `# group:` header".into(),
            ))
        }
    };
    match args.mode {
        Some(ModeArg::All) => cert.mode = Mode::All,
        Some(ModeArg::Involutions) => cert.mode = Mode::Involutions,
        Some(ModeArg::Both) => {
            return Err(Error::BadParameter("verify takes a single mode".into()))
        }
        None => {}
    }
    let table = build(&spec, cap(args.cap)?)?;
    let v = verify_certificate(&table, &cert)?;
    let k = cert.elements.len();
    if v.valid {
        println!(
            "valid: {k} elements cover all {} elements of {} ({})",
            v.group_order,
            spec.display_name(),
            cert.mode
        );
        return Ok(0);
    }
    let mut msg = format!("invalid: covered {} of {}", v.covered, v.group_order);
    if let Some(p) = &v.first_uncovered {
        let _ = write!(msg, "; first uncovered element {p} of order {}", p.order());
    }
    if !v.non_involutions.is_empty() {
        let lines: Vec<String> = v
            .non_involutions
            .iter()
            .map(|i| (i + 1).to_string())
            .collect();
        let _ = write!(msg, "; not involutions: entries {}", lines.join(", "));
    }
    if !v.size_matches {
        let _ = write!(
            msg,
            "; header claims {} elements, file has {k}",
            cert.claimed_size.unwrap_or(0)
        );
    }
    println!("{msg}");
    Ok(1)
}

pub fn table(args: &TableArgs) -> Result<u8> {
    let records = read_results_dir(&args.results)?;
    if args.tsv {
        print!("{}", render_tsv(&records));
    } else {
        print!("{}", render_table(&records));
    }
    Ok(0)
}

pub fn bounds(args: &BoundsArgs) -> Result<u8> {
    let spec = parse_group_spec(&args.group)?;
    let report = family_bounds(&spec);
    println!("group: {}", spec.display_name());
    if report.bounds.is_empty() {
        println!("no family bounds apply");
    }
    for b in &report.bounds {
        let flag = if b.hypothesis_met {
            ""
        } else {
            " (hypothesis not met)"
        };
        println!("{b}{flag}");
    }
    for mode in [Mode::All, Mode::Involutions] {
        if let Some((lo, hi)) = report.implied(mode) {
            let hi = hi.map_or("?".to_string(), |h| h.to_string());
            println!("implied: {lo} ≤ {} ≤ {hi}", symbol(mode));
        }
    }
    Ok(0)
}
