//! Command-line front end: every command reads and writes `hingekit/1`
//! JSON documents. Exit status 0 on success, 2 when a verification fails,
//! 1 on usage or input errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use hingekit::dissect::{
    self, add_midpoint_hinges_derived, chain_to_cycle_derived, dudeney_chain, dudeney_extendible_chain,
    ExtendibleChain, Folding, HingedDissection,
};
use hingekit::exactnum::{ApproxScalar, ExactScalar, Scalar};
use hingekit::io::{emit_svg, read_document, read_header, write_document, Arithmetic, RenderSpec};
use hingekit::polyform::{enumerate_fixed, enumerate_one_sided, Family, Polyform};
use hingekit::realize::{realize, realize_dual_omino, realize_extendible, FamilyId, Realization};
use hingekit::search::{
    check_pentomino_lower_bound, enumerate_chain_hingings, realizable_set, tetromino_hinging, tromino_hinging,
};
use hingekit::verify::{verify_configuration, VerificationReport};
use hingekit::{Error, Result};

#[derive(Parser)]
#[command(name = "hingekit", version, about = "Universal hinged dissections of polyforms")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the fixed (or one-sided) polyforms with n cells.
    Enumerate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        /// Identify forms that differ by a rotation.
        #[arg(long)]
        one_sided: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a hinged dissection.
    Construct {
        /// A family such as polyomino_2n or polyregular_kn:3, or one of
        /// dudeney, dudeney-extendible.
        #[arg(long)]
        dissection: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rotate a family's dissection into a target polyform.
    Realize {
        #[arg(long)]
        dissection: String,
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every check on a realization.
    Verify {
        #[arg(long)]
        realization: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive search over chain hingings of n unit squares.
    SearchLb {
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Transform a folded dissection.
    Convert(ConvertArgs),
    /// Cross-family realizations.
    Cross(CrossArgs),
    /// Draw a realization as SVG.
    Render {
        #[arg(long)]
        realization: PathBuf,
        #[arg(long, value_enum, default_value_t = StyleArg::Exact)]
        style: StyleArg,
        #[arg(long)]
        scale: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ConvertOp {
    /// Cut a tree-hinged dissection into a cycle.
    #[arg(long)]
    chain_to_cycle: Option<PathBuf>,
    /// Add hinges at every edge midpoint of every folding.
    #[arg(long)]
    add_midpoint_hinges: Option<PathBuf>,
}

#[derive(Args)]
struct ConvertArgs {
    #[command(flatten)]
    op: ConvertOp,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CrossOp {
    /// Realize the 4n-piece path on a unit 2n-omino or a √2-scaled n-omino.
    #[arg(long)]
    dual_omino: Option<usize>,
    /// Concatenate copies of an extendible chain.
    #[arg(long)]
    extendible: Option<PathBuf>,
}

#[derive(Args)]
struct CrossArgs {
    #[command(flatten)]
    op: CrossOp,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    target: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum StyleArg {
    Exact,
    Exaggerated,
}

/// A dissection with the foldings it is known to rotate into.
#[derive(Serialize, Deserialize)]
struct Folded {
    dissection: HingedDissection<ApproxScalar>,
    foldings: Vec<Folding<ApproxScalar>>,
}

enum Outcome {
    Ok,
    Failed,
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => Ok(fs::write(p, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_doc<T: Serialize>(out: &Option<PathBuf>, kind: &str, arith: Option<Arithmetic>, data: &T) -> Result<()> {
    emit(out, &write_document(kind, arith, data)?)
}

fn load<T: DeserializeOwned>(path: &Path, kind: &str, arith: Option<Arithmetic>) -> Result<T> {
    read_document(&fs::read_to_string(path)?, kind, arith)
}

fn parse_family(s: &str) -> Result<Family> {
    Family::parse(s).ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
}

fn report_outcome(report: &VerificationReport) -> Outcome {
    if report.passed() {
        Outcome::Ok
    } else {
        for c in report.checks.iter().filter(|c| !c.passed) {
            eprintln!("check {:?} failed: {}", c.check, c.counterexample.as_deref().unwrap_or(""));
        }
        Outcome::Failed
    }
}

fn realization_doc<S: Scalar + Serialize>(out: &Option<PathBuf>, r: &Realization<S>) -> Result<()> {
    emit_doc(out, "realization", Some(Arithmetic::of::<S>()), r)
}

fn folded_from(d: HingedDissection<ApproxScalar>, foldings: &[(Folding<ApproxScalar>, Vec<usize>)]) -> Folded {
    let foldings = foldings
        .iter()
        .map(|(f, origin)| Folding { polygon: f.polygon.clone(), motions: origin.iter().map(|&o| f.motions[o].clone()).collect() })
        .collect();
    Folded { dissection: d, foldings }
}

fn construct(name: &str, n: usize, out: &Option<PathBuf>) -> Result<()> {
    match name {
        "dudeney" => {
            let (chain, tri, sq) = dudeney_chain();
            emit_doc(out, "folded-dissection", Some(Arithmetic::Approx), &Folded { dissection: chain, foldings: vec![tri, sq] })
        }
        "dudeney-extendible" => {
            emit_doc(out, "extendible-chain", Some(Arithmetic::Approx), &dudeney_extendible_chain())
        }
        _ => {
            let fam: FamilyId = name.parse()?;
            let d: HingedDissection<ExactScalar> = fam.spec()?.dissection(n)?;
            emit_doc(out, "dissection", Some(Arithmetic::Exact), &d)
        }
    }
}

fn verify_file(path: &Path, out: &Option<PathBuf>) -> Result<Outcome> {
    let text = fs::read_to_string(path)?;
    let h = read_header(&text)?;
    let report = match h.arithmetic {
        Some(Arithmetic::Approx) => {
            verify_configuration(&read_document::<Realization<ApproxScalar>>(&text, "realization", h.arithmetic)?)
        }
        _ => verify_configuration(&read_document::<Realization<ExactScalar>>(&text, "realization", h.arithmetic)?),
    };
    emit_doc(out, "report", None, &report)?;
    Ok(report_outcome(&report))
}

fn render(path: &Path, style: StyleArg, scale: Option<f64>, out: &Option<PathBuf>) -> Result<()> {
    let text = fs::read_to_string(path)?;
    let h = read_header(&text)?;
    let mut spec = match style {
        StyleArg::Exact => RenderSpec::default(),
        StyleArg::Exaggerated => RenderSpec::exaggerated(),
    };
    if let Some(s) = scale {
        spec.scale = s;
    }
    let svg = match h.arithmetic {
        Some(Arithmetic::Approx) => {
            emit_svg(&read_document::<Realization<ApproxScalar>>(&text, "realization", h.arithmetic)?, &spec)?
        }
        _ => emit_svg(&read_document::<Realization<ExactScalar>>(&text, "realization", h.arithmetic)?, &spec)?,
    };
    emit(out, &svg)
}

fn search_lb(n: usize, out: &Option<PathBuf>) -> Result<Outcome> {
    if n == 5 {
        let cert = check_pentomino_lower_bound()?;
        for v in &cert.verdicts {
            eprintln!("{:<40} fails on {}", v.hinging.label(), v.unrealizable.join(","));
        }
        eprintln!("impossible for all {} hingings: {}", cert.verdicts.len(), cert.impossible);
        emit_doc(out, "lower-bound-certificate", None, &cert)?;
        return Ok(if cert.impossible { Outcome::Ok } else { Outcome::Failed });
    }
    if !(2..=6).contains(&n) {
        return Err(Error::Invalid("search supports 2 to 6 squares".into()));
    }
    let targets = enumerate_fixed(Family::Omino, n);
    let mut rows = Vec::new();
    for h in enumerate_chain_hingings(n) {
        let got = realizable_set(&h, &targets)?;
        eprintln!("{:<40} {}/{}", h.label(), got.len(), targets.len());
        rows.push((h, got));
    }
    let special = match n {
        3 => Some(tromino_hinging()),
        4 => tetromino_hinging(),
        _ => None,
    };
    if let Some(h) = &special {
        eprintln!("hinging realizing every fixed form: {}", h.label());
    }
    emit_doc(out, "chain-search", None, &rows)?;
    Ok(Outcome::Ok)
}

fn convert(args: &ConvertArgs) -> Result<()> {
    if let Some(p) = &args.op.chain_to_cycle {
        let f: Folded = load(p, "folded-dissection", Some(Arithmetic::Approx))?;
        let d = chain_to_cycle_derived(&f.dissection)?;
        let folds: Vec<_> = f.foldings.iter().map(|x| (x.clone(), d.origin.clone())).collect();
        let res = folded_from(d.dissection, &folds);
        return emit_doc(&args.out, "folded-dissection", Some(Arithmetic::Approx), &res);
    }
    let p = args.op.add_midpoint_hinges.as_ref().expect("group is required");
    let f: Folded = load(p, "folded-dissection", Some(Arithmetic::Approx))?;
    let d = add_midpoint_hinges_derived(&f.dissection, &f.foldings)?;
    let folds: Vec<_> = f.foldings.iter().map(|x| (x.clone(), d.origin.clone())).collect();
    let res = folded_from(d.dissection, &folds);
    emit_doc(&args.out, "folded-dissection", Some(Arithmetic::Approx), &res)
}

fn cross(args: &CrossArgs) -> Result<()> {
    let target = |p: &Option<PathBuf>| -> Result<Polyform> {
        let p = p.as_ref().ok_or_else(|| Error::Invalid("--target is required".into()))?;
        load(p, "polyform", None)
    };
    if let Some(n) = args.op.dual_omino {
        let r: Realization<ExactScalar> = realize_dual_omino(n, &target(&args.target)?)?;
        return realization_doc(&args.out, &r);
    }
    let p = args.op.extendible.as_ref().expect("group is required");
    let c: ExtendibleChain<ApproxScalar> = load(p, "extendible-chain", Some(Arithmetic::Approx))?;
    match &args.target {
        Some(_) => {
            let t = target(&args.target)?;
            if let Some(n) = args.n {
                if n != t.len() {
                    return Err(Error::Invalid(format!("--n {n} but the target has {} cells", t.len())));
                }
            }
            realization_doc(&args.out, &realize_extendible(&c, &t)?)
        }
        None => {
            let n = args.n.ok_or_else(|| Error::Invalid("--n or --target is required".into()))?;
            let d = dissect::concat_extendible(&c, n)?;
            emit_doc(&args.out, "dissection", Some(Arithmetic::Approx), &d)
        }
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.cmd {
        Cmd::Enumerate { family, n, one_sided, out } => {
            let fam = parse_family(&family)?;
            if n == 0 {
                return Err(Error::Invalid("n must be at least 1".into()));
            }
            let forms = if one_sided { enumerate_one_sided(fam, n) } else { enumerate_fixed(fam, n) };
            eprintln!("{} {}-{}s", forms.len(), n, fam.name());
            emit_doc(&out, "polyform-list", None, &forms)?;
        }
        Cmd::Construct { dissection, n, out } => construct(&dissection, n, &out)?,
        Cmd::Realize { dissection, target, out } => {
            let fam: FamilyId = dissection.parse()?;
            let t: Polyform = load(&target, "polyform", None)?;
            let r: Realization<ExactScalar> = realize(fam, &t)?;
            realization_doc(&out, &r)?;
        }
        Cmd::Verify { realization, out } => return verify_file(&realization, &out),
        Cmd::SearchLb { n, out } => return search_lb(n, &out),
        Cmd::Convert(args) => convert(&args)?,
        Cmd::Cross(args) => cross(&args)?,
        Cmd::Render { realization, style, scale, out } => render(&realization, style, scale, &out)?,
    }
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
