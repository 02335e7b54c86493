//! Command-line front end: argument parsing, size caps, caching and the
//! text and JSON emitters behind the `lieforge` binary.

mod cache;
mod checks;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub use cache::{code_version, Cache, Lookup};
pub use checks::{idempotent_report, report_ok, run_check, Check};

use crate::classes::{
    class_table, d_poly_flows, enumerate_flows, intersection_row, tamari_upper_set, tree_classes, Ambient, ClassKind,
};
use crate::error::{Error, Result};
use crate::fqsym::{ribbon_expansion, FqsymElement};
use crate::idempotents::{catalan_idempotent, catalan_idempotent_at, dynkin_psi, klyachko, solomon_phi, Family};
use crate::lie::{express_in_c, express_in_pbw, x_from_c, Bracket};
use crate::scalar::{narayana_polynomial, parse_q, render_sum, Poly2, Scalar, Q};
use crate::trees::{BinaryTree, PlaneTree, TamariLattice};

/// Largest grade accepted by commands that solve linear systems.
pub const LINEAR_ALGEBRA_CAP: usize = 7;
/// Largest grade accepted by commands that only enumerate.
pub const ENUMERATION_CAP: usize = 8;

#[derive(Parser, Debug)]
#[command(name = "lieforge", version, about = "Lie idempotents, Catalan bases and tree classes in FQSym")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Cache directory; defaults to $LIEFORGE_CACHE, caching is off when neither is set.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Raises the size cap (with a warning); for `tables`, the last row.
    #[arg(long, global = true)]
    max_n: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Dynkin,
    Solomon,
    Klyachko,
    Catalan,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Dynkin => Family::Dynkin,
            FamilyArg::Solomon => Family::Solomon,
            FamilyArg::Klyachko => Family::Klyachko,
            FamilyArg::Catalan => Family::Catalan,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Basis {
    #[value(name = "G")]
    G,
    Ribbon,
    C,
    X,
    Pbw,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Table {
    /// Coefficients of `ca_n(a, b)`.
    Ca,
    /// L-classes by right edges.
    B,
    /// LR-classes by right edges.
    Bprime,
    /// Graded dimensions of the intersection with PBT.
    A,
    /// Graded dimensions of the intersection with Sym.
    Aprime,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    L,
    Lr,
}

#[derive(Args, Debug)]
struct Specialization {
    /// Rational value substituted for `a` (Catalan family only).
    #[arg(long)]
    a: Option<String>,
    /// Rational value substituted for `b` (Catalan family only).
    #[arg(long)]
    b: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Builds an idempotent and prints it in the chosen basis.
    Idempotent {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        point: Specialization,
        #[arg(long, value_enum, default_value_t = Basis::G)]
        basis: Basis,
    },
    /// Expands a bracket such as `[[1,2],3]` in the chosen basis.
    Expand {
        bracket: String,
        #[arg(long, value_enum, default_value_t = Basis::G)]
        basis: Basis,
    },
    /// Runs a named verification at grade `n`.
    Verify {
        #[arg(value_enum)]
        check: Check,
        #[arg(long)]
        n: usize,
        /// Family for the `idempotent` check; adds a report to the output.
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        #[command(flatten)]
        point: Specialization,
    },
    /// Prints one of the numerical tables, rows up to `--max-n`.
    Tables {
        #[arg(long, value_enum)]
        which: Table,
    },
    /// Lists the classes of binary trees with `n − 1` nodes.
    Classes {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = KindArg::L)]
        kind: KindArg,
    },
    /// Small closed flows of one plane tree, or `d_T(b)` for all trees of a size.
    Flows {
        #[arg(long, conflicts_with = "n", required_unless_present = "n")]
        tree: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Upper set of a plane tree, or the covering relations of a Tamari lattice.
    Tamari {
        #[arg(long, conflicts_with = "n", required_unless_present = "n")]
        tree: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
}

/// Exit code and the two output streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidArgument(_) | Error::InvalidPermutation(_) | Error::RepeatedLetters(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Failed(e.to_string()),
        }
    }
}

type Run<T> = std::result::Result<T, Failure>;

struct Context {
    format: Format,
    cache: Option<Cache>,
    max_n: Option<usize>,
    warnings: Vec<String>,
}

impl Context {
    fn warn(&mut self, msg: impl Into<String>) {
        self.warnings.push(msg.into());
    }

    /// Accepts `n` under `cap`, or above it when `--max-n` allows.
    fn check_cap(&mut self, what: &str, n: usize, cap: usize) -> Run<()> {
        if n <= cap {
            return Ok(());
        }
        match self.max_n {
            Some(m) if n <= m => {
                self.warn(format!("{what} at n = {n} exceeds the default cap {cap}; this may be slow"));
                Ok(())
            }
            _ => Err(Failure::Usage(format!("{what} is capped at n = {cap}; pass --max-n {n} to override"))),
        }
    }

    fn cached(&mut self, key: &str, compute: impl FnOnce() -> Result<String>) -> Result<String> {
        let Some(cache) = self.cache.clone() else { return compute() };
        let mut warnings = Vec::new();
        let out = cache.get_or_compute(key, &mut |w| warnings.push(w), compute);
        self.warnings.extend(warnings);
        out
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Outcome { code, stdout, stderr };
        }
    };
    let cache_dir = cli.cache_dir.clone().or_else(|| std::env::var_os("LIEFORGE_CACHE").map(PathBuf::from));
    let mut ctx = Context { format: cli.format, cache: cache_dir.map(Cache::new), max_n: cli.max_n, warnings: Vec::new() };
    let result = dispatch(&mut ctx, cli.command);
    let mut stderr: String = ctx.warnings.iter().map(|w| format!("warning: {w}\n")).collect();
    let (code, stdout) = match result {
        Ok((ok, mut out)) => {
            if !out.ends_with('\n') {
                out.push('\n');
            }
            (if ok { 0 } else { 1 }, out)
        }
        Err(Failure::Usage(msg)) => {
            stderr.push_str(&format!("error: {msg}\n"));
            (2, String::new())
        }
        Err(Failure::Failed(msg)) => {
            stderr.push_str(&format!("error: {msg}\n"));
            (1, String::new())
        }
    };
    Outcome { code, stdout, stderr }
}

/// Runs the command line of the current process and returns its exit code.
pub fn run() -> i32 {
    use std::io::Write;
    let out = execute(std::env::args_os());
    eprint!("{}", out.stderr);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.stdout.as_bytes()).and_then(|_| stdout.flush());
    out.code
}

fn dispatch(ctx: &mut Context, command: Command) -> Run<(bool, String)> {
    match command {
        Command::Idempotent { family, n, point, basis } => idempotent(ctx, family.into(), n, &point, basis).map(|s| (true, s)),
        Command::Expand { bracket, basis } => {
            let b = Bracket::parse(&bracket)?;
            ctx.check_cap("expand", b.leaf_count(), ENUMERATION_CAP)?;
            Ok((true, render(ctx.format, &b.expand::<Q>()?, basis)?))
        }
        Command::Verify { check, n, family, point } => verify(ctx, check, n, family.map(Family::from), &point),
        Command::Tables { which } => tables(ctx, which).map(|s| (true, s)),
        Command::Classes { n, kind } => classes(ctx, n, kind).map(|s| (true, s)),
        Command::Flows { tree, n } => flows(ctx, tree, n).map(|s| (true, s)),
        Command::Tamari { tree, n } => tamari(ctx, tree, n).map(|s| (true, s)),
    }
}

fn parse_point(point: &Specialization) -> Run<(Option<Q>, Option<Q>)> {
    let a = point.a.as_deref().map(parse_q).transpose()?;
    let b = point.b.as_deref().map(parse_q).transpose()?;
    Ok((a, b))
}

fn require_grade(n: usize) -> Run<()> {
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    Ok(())
}

fn idempotent(ctx: &mut Context, family: Family, n: usize, point: &Specialization, basis: Basis) -> Run<String> {
    require_grade(n)?;
    ctx.check_cap("idempotent", n, LINEAR_ALGEBRA_CAP)?;
    let (a, b) = parse_point(point)?;
    if family != Family::Catalan && (a.is_some() || b.is_some()) {
        return Err(Failure::Usage("--a and --b apply to the catalan family only".into()));
    }
    let format = ctx.format;
    match family {
        Family::Dynkin => render(format, &cached_element(ctx, family, n, "", || Ok(dynkin_psi::<Q>(n)))?, basis),
        Family::Solomon => render(format, &cached_element(ctx, family, n, "", || Ok(solomon_phi(n)))?, basis),
        Family::Klyachko => render(format, &cached_element(ctx, family, n, "", || Ok(klyachko(n)))?, basis),
        Family::Catalan => {
            let d = cached_element(ctx, family, n, "", || catalan_idempotent(n))?;
            match (a, b) {
                (None, None) => render(format, &d, basis),
                (Some(a), Some(b)) => render(format, &catalan_idempotent_at(n, &a, &b)?, basis),
                (a, b) => {
                    let pa = a.map_or_else(Poly2::a, Poly2::constant);
                    let pb = b.map_or_else(Poly2::b, Poly2::constant);
                    render(format, &d.map_coeffs(|c| c.substitute(&pa, &pb)), basis)
                }
            }
        }
    }
}

fn cached_element<C: Scalar>(
    ctx: &mut Context,
    family: Family,
    n: usize,
    params: &str,
    compute: impl FnOnce() -> Result<FqsymElement<C>>,
) -> Result<FqsymElement<C>> {
    let key = format!("idempotent/{}/n={n}{params}", family.name());
    let text = ctx.cached(&key, || Ok(compute()?.to_json().to_string()))?;
    FqsymElement::from_json(&serde_json::from_str(&text)?)
}

fn render<C: Scalar>(format: Format, x: &FqsymElement<C>, basis: Basis) -> Run<String> {
    let n = x.grade();
    let json_terms = |terms: Vec<Value>| json!({"n": n, "terms": terms}).to_string();
    let out = match basis {
        Basis::G => match format {
            Format::Text => x.to_string(),
            Format::Json => x.to_json().to_string(),
        },
        Basis::Ribbon => {
            let r = ribbon_expansion(x).ok_or_else(|| Failure::Failed("element is not in Sym".into()))?;
            match format {
                Format::Text => render_sum(&r.iter().map(|(c, v)| (format!("R{c}"), v.clone())).collect::<Vec<_>>()),
                Format::Json => json_terms(
                    r.iter().map(|(c, v)| json!({"coef": v.to_string(), "composition": c.parts()})).collect(),
                ),
            }
        }
        Basis::C | Basis::X => {
            let c = express_in_c(x)?;
            match (basis, format) {
                (Basis::C, Format::Text) => c.to_string(),
                (Basis::C, Format::Json) => c.to_json().to_string(),
                (_, Format::Text) => x_from_c(&c).to_string(),
                (_, Format::Json) => x_from_c(&c).to_json().to_string(),
            }
        }
        Basis::Pbw => {
            let p = express_in_pbw(x)?;
            match format {
                Format::Text => render_sum(&p.iter().map(|(e, v)| (format!("T{e}"), v.clone())).collect::<Vec<_>>()),
                Format::Json => json_terms(
                    p.iter().map(|(e, v)| json!({"bracket": e.to_string(), "coef": v.to_string()})).collect(),
                ),
            }
        }
    };
    Ok(out)
}

fn verify(ctx: &mut Context, check: Check, n: usize, family: Option<Family>, point: &Specialization) -> Run<(bool, String)> {
    if n < 2 {
        return Err(Failure::Usage("verify needs --n at least 2".into()));
    }
    ctx.check_cap("verify", n, LINEAR_ALGEBRA_CAP)?;
    let (a, b) = parse_point(point)?;
    if family.is_some() && check != Check::Idempotent {
        return Err(Failure::Usage("--family applies to the idempotent check only".into()));
    }
    if (a.is_some() || b.is_some()) && family != Some(Family::Catalan) {
        return Err(Failure::Usage("--a and --b need --family catalan".into()));
    }
    // Key order is fixed by hand: `ok` first, then `n`.
    match family {
        Some(f) => {
            let one = Q::from_integer(1.into());
            let report = idempotent_report(f, n, a.as_ref().unwrap_or(&one), b.as_ref().unwrap_or(&one))?;
            let ok = report_ok(&report);
            Ok((ok, format!("{{\"ok\":{ok},\"n\":{n},\"report\":{}}}", report.to_json())))
        }
        None => {
            let ok = run_check(check, n)?;
            Ok((ok, format!("{{\"ok\":{ok},\"n\":{n}}}")))
        }
    }
}

fn table_rows(ctx: &mut Context, which: Table, max_n: usize) -> Run<Vec<(usize, Vec<String>)>> {
    let to_strings = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    Ok(match which {
        Table::Ca => (1..=max_n)
            .map(|n| {
                let p = narayana_polynomial(n)?;
                Ok((n, (0..n as u32).map(|i| p.coeff(i, n as u32 - 1 - i).to_string()).collect()))
            })
            .collect::<Result<_>>()?,
        Table::B | Table::Bprime => {
            let kind = if which == Table::B { ClassKind::L } else { ClassKind::LR };
            class_table(kind, max_n).iter().map(|(n, row)| (*n, to_strings(row))).collect()
        }
        Table::A | Table::Aprime => {
            let ambient = if which == Table::A { Ambient::Pbt } else { Ambient::Sym };
            let mut rows = Vec::new();
            for n in 2..=max_n {
                let key = format!("intersection/{ambient:?}/n={n}");
                let text = ctx.cached(&key, || {
                    let row = intersection_row(n, ambient);
                    if !row.is_consistent() {
                        return Err(Error::NotInSpan(format!("graded dimensions at n = {n} do not meet the bound")));
                    }
                    Ok(serde_json::to_string(&row.graded)?)
                })?;
                let graded: Vec<usize> = serde_json::from_str(&text).map_err(Error::from)?;
                rows.push((n, to_strings(&graded)));
            }
            rows
        }
    })
}

fn tables(ctx: &mut Context, which: Table) -> Run<String> {
    let cap = match which {
        Table::A | Table::Aprime => LINEAR_ALGEBRA_CAP,
        _ => ENUMERATION_CAP,
    };
    let max_n = ctx.max_n.unwrap_or(cap);
    if max_n > cap {
        ctx.warn(format!("tables beyond n = {cap} may be slow"));
    }
    let rows = table_rows(ctx, which, max_n)?;
    if ctx.format == Format::Json {
        let rows: Vec<Value> = rows.iter().map(|(n, v)| json!({"n": n, "values": v})).collect();
        let name = Table::to_possible_value(&which).map(|v| v.get_name().to_string()).unwrap_or_default();
        return Ok(json!({"which": name, "rows": rows}).to_string());
    }
    let columns = rows.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..columns).map(|k| rows.iter().filter_map(|(_, v)| v.get(k).map(String::len)).max().unwrap_or(1)).collect();
    let nwidth = rows.iter().map(|(n, _)| n.to_string().len()).max().unwrap_or(1).max(1);
    let header = match which {
        Table::Ca => "coefficients of a^k b^(n-1-k), k = 0..n-1",
        Table::B => "L-classes by right edges k = 0..n-2",
        Table::Bprime => "LR-classes by right edges k = 0..n-2",
        Table::A => "dim Lie(n) ∩ PBT_n by grading k = 0..n-2",
        Table::Aprime => "dim Lie(n) ∩ Sym_n by grading k = 0..n-2",
    };
    let mut out = format!("{:>nwidth$} | {header}\n", "n");
    for (n, values) in &rows {
        let cells: Vec<String> = values.iter().zip(&widths).map(|(v, w)| format!("{v:>w$}")).collect();
        out.push_str(&format!("{n:>nwidth$} | {}\n", cells.join(" ")));
    }
    Ok(out)
}

fn classes(ctx: &mut Context, n: usize, kind: KindArg) -> Run<String> {
    require_grade(n)?;
    ctx.check_cap("classes", n, ENUMERATION_CAP)?;
    let kind = if kind == KindArg::L { ClassKind::L } else { ClassKind::LR };
    let list = tree_classes(n - 1, kind);
    if ctx.format == Format::Json {
        let items: Vec<Value> = list
            .iter()
            .map(|c| {
                json!({
                    "encoding": c.encoding.to_string(),
                    "members": c.members.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                    "right_edges": c.right_edges,
                })
            })
            .collect();
        return Ok(json!({"classes": items, "kind": format!("{kind:?}"), "n": n}).to_string());
    }
    let mut out = String::new();
    for c in list.iter() {
        let members: Vec<String> = c.members.iter().map(|t| t.to_string()).collect();
        out.push_str(&format!("{} k={} : {}\n", c.encoding, c.right_edges, members.join(" ")));
    }
    Ok(out)
}

fn parse_plane(text: &str) -> Run<PlaneTree> {
    Ok(PlaneTree::parse(text)?)
}

fn flows(ctx: &mut Context, tree: Option<String>, n: Option<usize>) -> Run<String> {
    let json = ctx.format == Format::Json;
    if let Some(text) = tree {
        let t = parse_plane(&text)?;
        ctx.check_cap("flows", t.size(), ENUMERATION_CAP)?;
        let fs = enumerate_flows(&t);
        let poly = d_poly_flows(&t).to_string();
        if json {
            return Ok(json!({"flows": fs, "poly": poly, "tree": t.to_string()}).to_string());
        }
        let mut out: String = fs.iter().map(|f| format!("{f:?}\n")).collect();
        out.push_str(&format!("d = {poly}\n"));
        return Ok(out);
    }
    let n = n.unwrap_or_default();
    require_grade(n)?;
    ctx.check_cap("flows", n, ENUMERATION_CAP)?;
    let trees = PlaneTree::all(n);
    if json {
        let items: Vec<Value> =
            trees.iter().map(|t| json!({"poly": d_poly_flows(t).to_string(), "tree": t.to_string()})).collect();
        return Ok(json!({"n": n, "trees": items}).to_string());
    }
    Ok(trees.iter().map(|t| format!("{t} {}\n", d_poly_flows(t))).collect())
}

fn tamari(ctx: &mut Context, tree: Option<String>, n: Option<usize>) -> Run<String> {
    let json = ctx.format == Format::Json;
    if let Some(text) = tree {
        let t = parse_plane(&text)?;
        ctx.check_cap("tamari", t.size(), ENUMERATION_CAP)?;
        let covers: Vec<String> = t.tamari_covers().iter().map(|u| u.to_string()).collect();
        let upper: Vec<String> = tamari_upper_set(&t).iter().map(|u| u.to_string()).collect();
        if json {
            return Ok(json!({"covers": covers, "tree": t.to_string(), "upper_set": upper}).to_string());
        }
        return Ok(format!("covers: {}\nupper set ({}): {}\n", covers.join(" "), upper.len(), upper.join(" ")));
    }
    let n = n.unwrap_or_default();
    ctx.check_cap("tamari", n, ENUMERATION_CAP)?;
    let lattice = TamariLattice::of_size(n);
    let trees: Vec<String> = lattice.trees().iter().map(BinaryTree::to_string).collect();
    let edges: Vec<(usize, usize)> =
        (0..trees.len()).flat_map(|i| lattice.covers_of(i).iter().map(move |&j| (i, j))).collect();
    if json {
        return Ok(json!({"edges": edges, "n": n, "trees": trees}).to_string());
    }
    Ok(edges.iter().map(|&(i, j)| format!("{} -> {}\n", trees[i], trees[j])).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Outcome {
        execute(std::iter::once("lieforge").chain(args.iter().copied()))
    }

    #[test]
    fn examples() {
        let out = run(&["idempotent", "--family", "catalan", "--n", "3", "--basis", "ribbon"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert_eq!(out.stdout.trim(), "(a+b)*R(3) - a*R(2,1) - b*R(1,2) + (a+b)*R(1,1,1)");
        let out = run(&["verify", "catpbw", "--n", "5"]);
        assert_eq!((out.code, out.stdout.trim()), (0, r#"{"ok":true,"n":5}"#));
        let out = run(&["tables", "--which", "bprime", "--max-n", "8"]);
        assert!(out.stdout.trim_end().ends_with("1 3 10 14 10 3 1"), "{}", out.stdout);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run(&["idempotent", "--family", "dynkin", "--n", "3", "--a", "2"]).code, 2);
        assert_eq!(run(&["verify", "catpbw", "--n", "9"]).code, 2);
        assert_eq!(run(&["frobnicate"]).code, 2);
        assert_eq!(run(&["tables", "--which", "b", "--bogus"]).code, 2);
        assert_eq!(run(&["--help"]).code, 0);
        let out = run(&["--max-n", "9", "classes", "--n", "9"]);
        assert_eq!(out.code, 0);
        assert!(out.stderr.contains("warning"));
    }

    #[test]
    fn specializations_agree() {
        let direct = run(&["idempotent", "--family", "catalan", "--n", "4", "--a", "2", "--b", "1/3"]);
        let json = run(&["--format", "json", "idempotent", "--family", "catalan", "--n", "4", "--a", "2"]);
        assert_eq!(direct.code, 0);
        assert_eq!(json.code, 0);
        assert!(json.stdout.contains("\"perm\""));
        let pbw = run(&["idempotent", "--family", "dynkin", "--n", "3", "--basis", "pbw"]);
        assert_eq!(pbw.stdout.trim(), "T[[1,2],3]");
    }

    #[test]
    fn cache_hits_match() {
        let dir = tempfile::tempdir().unwrap();
        let d = dir.path().to_str().unwrap();
        let args = ["--cache-dir", d, "--format", "json", "idempotent", "--family", "solomon", "--n", "4"];
        let first = run(&args);
        let second = run(&args);
        assert_eq!(first, second);
        let a = run(&["--cache-dir", d, "tables", "--which", "aprime", "--max-n", "5"]);
        let b = run(&["--cache-dir", d, "tables", "--which", "aprime", "--max-n", "5"]);
        assert_eq!(a, b);
        assert!(a.stdout.trim_end().ends_with("1 2 2 1"));
    }
}
