//! Command-line front end. Data goes to the output writer, progress and
//! diagnostics to stderr.

use std::ffi::OsString;
use std::io::Write;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use crate::algebra::{Algebra, Presentation, DEFAULT_MONOMIAL_CEILING};
use crate::braiding::{emit_spec, resolve, BraidedSpace};
use crate::determinants::{
    bialgebra_minor_check_with, comodule_on_leg, cross_power_route_check, det_q, kernel_annihilation_check,
    laplace_check, minors, multiplicativity_check, serialize_matrix, MatrixMap, Verdict,
};
use crate::error::Error;
use crate::exterior::{BasisFlavor, ExteriorAlgebra};
use crate::report::{Report, Status};

/// Monomial ceiling once `--long-running` is given.
pub const LONG_RUNNING_CEILING: u128 = 2_000_000;

#[derive(Parser, Debug)]
#[command(name = "qwedge", version, about = "Quantum exterior algebras and quantum minor determinants over Q(q)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub config: RunConfig,
}

#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Built-in name (jimbo-a:N, type-c, cartan:A2, cartan:FILE) or a spec file
    #[arg(long, global = true)]
    pub braiding: Option<String>,
    /// Highest exterior degree to examine
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_degree: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = FlavorArg::Increasing)]
    pub flavor: FlavorArg,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Lift the monomial ceiling and run gated computations
    #[arg(long, global = true)]
    pub long_running: bool,
    /// Worker threads (default: number of processors)
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FlavorArg {
    Increasing,
    Echelon,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Laplace,
    Multiplicative,
    Prop54,
    Prop47,
    Remark62,
    All,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Braid relation, invertibility and Hecke condition
    Check,
    /// Dimensions of the exterior powers and the rank
    Dims,
    /// Basis of the degree-k exterior power
    Basis {
        #[arg(short)]
        k: usize,
    },
    /// Quantum k-minors of the canonical comodule
    Minors {
        #[arg(short)]
        k: usize,
    },
    /// Quantum determinant of the canonical comodule
    Det,
    /// Run a verification suite
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(short)]
        m: Option<usize>,
        #[arg(short)]
        n: Option<usize>,
    },
    /// Print a built-in braiding as a spec file
    EmitSpec { name: String },
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::ResourceCeiling { .. } | Error::DegreeBound { .. } => EXIT_RESOURCE,
        Error::Parse { .. }
        | Error::UnknownBraiding(_)
        | Error::InvalidCartan(_)
        | Error::DimensionMismatch(_)
        | Error::Io(_) => EXIT_USAGE,
        _ => EXIT_FAIL,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                eprint!("{e}");
            }
            return code;
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.config.jobs {
        pool = pool.num_threads(j.max(1));
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    pool.install(|| match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    })
}

struct Session {
    cfg: RunConfig,
    space: Arc<BraidedSpace>,
    ext: ExteriorAlgebra,
}

impl Session {
    fn new(cfg: &RunConfig) -> crate::Result<Self> {
        let name = cfg.braiding.as_deref().ok_or_else(|| Error::UnknownBraiding("missing --braiding".into()))?;
        let space = Arc::new(resolve(name)?);
        let flavor = match cfg.flavor {
            FlavorArg::Increasing => BasisFlavor::Increasing,
            FlavorArg::Echelon => BasisFlavor::Echelon,
        };
        let ext = ExteriorAlgebra::with_flavor(space.clone(), flavor);
        Ok(Self { cfg: cfg.clone(), space, ext })
    }

    fn name(&self) -> &str {
        self.space.name()
    }

    fn ceiling(&self) -> u128 {
        if self.cfg.long_running {
            LONG_RUNNING_CEILING
        } else {
            DEFAULT_MONOMIAL_CEILING
        }
    }

    fn max_degree(&self) -> usize {
        self.cfg.max_degree.map(|d| d as usize).unwrap_or_else(|| (self.space.dim() + 1).max(4))
    }

    fn frt(&self) -> Arc<Presentation> {
        Arc::new(Presentation::frt(&self.space).with_ceiling(self.ceiling()))
    }

    fn rho(&self) -> MatrixMap {
        comodule_on_leg(self.space.clone(), Algebra::single(self.frt()), 0)
    }

    fn dims(&self) -> Vec<usize> {
        let max = self.max_degree();
        let mut out = vec![1];
        for k in 1..=max {
            if out.last() == Some(&0) {
                out.push(0);
                continue;
            }
            eprintln!("[dims] degree {k}");
            out.push(self.ext.dim(k));
        }
        out
    }

    fn rank(&self) -> Option<usize> {
        crate::exterior::rank_from_dims(&self.dims())
    }

    /// Whether degree-`d` FRT normal forms fit under the ceiling.
    fn fits(&self, d: usize) -> bool {
        let n2 = (self.space.dim() * self.space.dim()) as u128;
        n2.saturating_pow(d as u32) <= self.ceiling()
    }
}

fn execute(cli: &Cli, out: &mut (dyn Write + Send)) -> crate::Result<i32> {
    let json = cli.config.format == Format::Json;
    if let Command::EmitSpec { name } = &cli.command {
        let space = resolve(name)?;
        writeln!(out, "{}", emit_spec(&space))?;
        return Ok(EXIT_OK);
    }
    let s = Session::new(&cli.config)?;
    match &cli.command {
        Command::Check => {
            let started = Instant::now();
            let f = s.space.flags();
            let ok = f.braid_ok && f.invertible;
            let v = if ok { Verdict::pass() } else { Verdict::fail("braid relation or invertibility fails") };
            let r = Report::new("braiding", s.name())
                .param("dimension", s.space.dim())
                .param("braid_ok", f.braid_ok)
                .param("invertible", f.invertible)
                .param("hecke", f.hecke)
                .with_verdict(v, started);
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&r).expect("serializable"))?;
            } else {
                let yn = |b: bool| if b { "ok" } else { "FAILS" };
                writeln!(out, "braiding: {} (dimension {})", s.name(), s.space.dim())?;
                writeln!(out, "braid relation: {}", yn(f.braid_ok))?;
                writeln!(out, "invertible: {}", yn(f.invertible))?;
                writeln!(out, "hecke: {}", if f.hecke { "yes" } else { "no" })?;
            }
            Ok(if ok { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Dims => {
            let dims = s.dims();
            let rank = crate::exterior::rank_from_dims(&dims);
            if json {
                let v = json!({ "braiding": s.name(), "max_degree": s.max_degree(), "dims": dims, "rank": rank });
                writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable"))?;
            } else {
                writeln!(out, "k\td_k")?;
                for (k, d) in dims.iter().enumerate() {
                    writeln!(out, "{k}\t{d}")?;
                }
                match rank {
                    Some(m) => writeln!(out, "rank M = {m}")?,
                    None => writeln!(out, "no finite rank up to degree {}", s.max_degree())?,
                }
            }
            Ok(EXIT_OK)
        }
        Command::Basis { k } => {
            let b = s.ext.basis(*k);
            let reps: Vec<String> = (0..b.dim()).map(|i| b.representative(i).to_string()).collect();
            if json {
                let v = json!({ "braiding": s.name(), "degree": k, "flavor": format!("{:?}", b.flavor()).to_lowercase(), "basis": reps });
                writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable"))?;
            } else {
                writeln!(out, "degree {k}, dimension {}", b.dim())?;
                for (i, r) in reps.iter().enumerate() {
                    writeln!(out, "w{}: {r}", i + 1)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Minors { k } => {
            eprintln!("[minors] degree {k}");
            let xi = minors(&s.ext, &s.rho(), *k)?;
            let m = serialize_matrix(&xi);
            if json {
                let v = json!({ "braiding": s.name(), "degree": k, "minors": m });
                writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable"))?;
            } else {
                for (i, row) in m.iter().enumerate() {
                    for (j, e) in row.iter().enumerate() {
                        writeln!(out, "({},{}): {e}", i + 1, j + 1)?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Det => {
            let d = det_q(&s.ext, &s.rho(), s.max_degree())?;
            if json {
                let v = json!({ "braiding": s.name(), "det_q": d.to_string() });
                writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable"))?;
            } else {
                writeln!(out, "{d}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { suite, m, n } => verify(&s, *suite, *m, *n, out),
        Command::EmitSpec { .. } => unreachable!(),
    }
}

#[derive(Clone, Debug)]
enum Item {
    Laplace(usize, usize),
    Multiplicative,
    Prop54(usize),
    Prop47,
    Remark62(usize),
}

fn plan(suite: Suite, mn: Option<(usize, usize)>, rank: Option<usize>) -> Vec<Item> {
    let mut items = Vec::new();
    let want = |x: Suite| suite == x || suite == Suite::All;
    if want(Suite::Laplace) {
        match (mn, rank) {
            (Some((m, n)), _) => items.push(Item::Laplace(m, n)),
            (None, Some(r)) => {
                for total in 2..=r {
                    for m in 1..total {
                        items.push(Item::Laplace(m, total - m));
                    }
                }
            }
            (None, None) => {}
        }
    }
    if want(Suite::Multiplicative) {
        items.push(Item::Multiplicative);
    }
    if want(Suite::Prop54) {
        for k in 1..=rank.unwrap_or(0).min(3) {
            items.push(Item::Prop54(k));
        }
    }
    if want(Suite::Prop47) {
        items.push(Item::Prop47);
    }
    if want(Suite::Remark62) {
        for k in 1..=rank.unwrap_or(0) {
            items.push(Item::Remark62(k));
        }
    }
    items
}

fn run_item(s: &Session, item: &Item, rank: Option<usize>) -> (Report, bool) {
    let started = Instant::now();
    let gate = |r: Report, d: usize| -> Result<Report, Report> {
        if s.fits(d) {
            Ok(r)
        } else {
            Err(r.skipped(&format!("degree-{d} normal forms exceed the monomial ceiling; rerun with --long-running")))
        }
    };
    let hecke = |r: Report| -> Result<Report, Report> {
        if s.space.is_hecke() {
            Ok(r)
        } else {
            Err(r.skipped("braiding is not of Hecke type"))
        }
    };
    let prepared: Result<(Report, Box<dyn Fn() -> crate::Result<Verdict> + '_>), Report> = match item {
        Item::Laplace(m, n) => {
            let (m, n) = (*m, *n);
            let r = Report::new("laplace", s.name()).param("m", m).param("n", n);
            gate(r, m + n).map(|r| {
                let f: Box<dyn Fn() -> crate::Result<Verdict>> =
                    Box::new(move || laplace_check(&s.ext, &s.rho(), m, n));
                (r, f)
            })
        }
        Item::Multiplicative => {
            let r = Report::new("multiplicative", s.name());
            hecke(r).and_then(|r| match rank {
                None => Err(r.skipped("rank not established")),
                Some(k) => gate(r.param("hypothesis", format!("verified up to k = {k}")), k).map(|r| {
                    let f: Box<dyn Fn() -> crate::Result<Verdict>> = Box::new(move || {
                        let p = s.frt();
                        let alg = Algebra::new(vec![p.clone(), p]);
                        let a = comodule_on_leg(s.space.clone(), alg.clone(), 0);
                        let b = comodule_on_leg(s.space.clone(), alg, 1);
                        let rep = multiplicativity_check(&s.ext, &a, &b, s.max_degree())?;
                        let parts = [
                            ("compatibility", rep.compatible),
                            ("hypothesis", rep.hypothesis),
                            ("det", rep.determinant),
                        ];
                        Ok(parts
                            .into_iter()
                            .find(|(_, v)| !v.pass)
                            .map(|(name, v)| Verdict::fail(format!("{name}: {}", v.witness.unwrap_or_default())))
                            .unwrap_or_else(Verdict::pass))
                    });
                    (r, f)
                }),
            })
        }
        Item::Prop54(k) => {
            let k = *k;
            let r = Report::new("prop54", s.name()).param("k", k);
            hecke(r).and_then(|r| gate(r, k)).map(|r| {
                let f: Box<dyn Fn() -> crate::Result<Verdict>> =
                    Box::new(move || cross_power_route_check(&s.ext, &s.rho(), k));
                (r, f)
            })
        }
        Item::Prop47 => {
            let r = Report::new("prop47", s.name());
            hecke(r).map(|r| {
                let f: Box<dyn Fn() -> crate::Result<Verdict>> = Box::new(move || kernel_annihilation_check(&s.rho()));
                (r, f)
            })
        }
        Item::Remark62(k) => {
            let k = *k;
            let r = Report::new("remark62", s.name()).param("k", k);
            gate(r, k).map(|r| {
                let f: Box<dyn Fn() -> crate::Result<Verdict>> =
                    Box::new(move || bialgebra_minor_check_with(&s.ext, &s.rho(), k));
                (r, f)
            })
        }
    };
    let (r, f) = match prepared {
        Ok(x) => x,
        Err(skipped) => return (skipped, false),
    };
    eprintln!("[verify] {} {:?}", r.check, r.params);
    match f() {
        Ok(v) => (r.with_verdict(v, started), false),
        Err(e @ (Error::ResourceCeiling { .. } | Error::DegreeBound { .. })) => {
            let mut r = r.skipped(&e.to_string());
            r.elapsed_ms = started.elapsed().as_millis() as u64;
            (r, true)
        }
        Err(e) => (r.with_verdict(Verdict::fail(format!("error: {e}")), started), false),
    }
}

fn verify(
    s: &Session,
    suite: Suite,
    m: Option<usize>,
    n: Option<usize>,
    out: &mut (dyn Write + Send),
) -> crate::Result<i32> {
    let mn = match (m, n) {
        (Some(m), Some(n)) if m >= 1 && n >= 1 => Some((m, n)),
        (None, None) => None,
        _ => {
            eprintln!("error: -m and -n must be given together and be at least 1");
            return Ok(EXIT_USAGE);
        }
    };
    let rank = s.rank();
    let items = plan(suite, mn, rank);
    let results: Vec<(Report, bool)> = items.par_iter().map(|it| run_item(s, it, rank)).collect();
    let ceiling_hit = results.iter().any(|(_, c)| *c);
    let reports: Vec<Report> = results.into_iter().map(|(r, _)| r).collect();
    if s.cfg.format == Format::Json {
        writeln!(out, "{}", serde_json::to_string_pretty(&reports).expect("serializable"))?;
    } else {
        if reports.is_empty() {
            writeln!(out, "no checks to run (rank not established; pass -m and -n for laplace)")?;
        }
        for r in &reports {
            writeln!(out, "{}", r.line())?;
        }
    }
    Ok(if reports.iter().any(|r| r.status == Status::Fail) {
        EXIT_FAIL
    } else if ceiling_hit {
        EXIT_RESOURCE
    } else {
        EXIT_OK
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String) {
        let mut buf = Vec::new();
        let code = run(std::iter::once("qwedge").chain(args.iter().copied()), &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn det_jimbo2() {
        let (code, out) = run_capture(&["det", "--braiding", "jimbo-a:2"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "T1_1.T2_2 - q^-1 * T2_1.T1_2");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_capture(&["frobnicate"]).0, 2);
        assert_eq!(run_capture(&["dims", "--braiding", "no-such-thing"]).0, 2);
        assert_eq!(run_capture(&["dims", "--max-degree", "0", "--braiding", "jimbo-a:2"]).0, 2);
    }

    #[test]
    fn det_without_rank_fails() {
        assert_eq!(run_capture(&["det", "--braiding", "cartan:A2"]).0, 1);
    }

    #[test]
    fn dims_text() {
        let (code, out) = run_capture(&["dims", "--braiding", "jimbo-a:3"]);
        assert_eq!(code, 0);
        assert!(out.contains("3\t1\n4\t0"));
        assert!(out.contains("rank M = 3"));
    }
}
