//! Command-line front end.
//!
//! Every subcommand builds a JSON value; `--format text` renders that same
//! value as indented `key: value` lines, so both formats carry the same
//! content. Object keys come out sorted and rationals as `"p/q"` strings.

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::quiver::{QVertex, Slope};
use crate::resolution::{
    classify_resolution_shape, euler_check, resolve_box, resolve_cylinder_staircase, ResolutionJson,
};
use crate::schur::Partition;
use crate::stability::{classify, for_each_filter, ProfileWalker};
use crate::staircase::CylinderStaircase;
use crate::support::{tensor_gr, tensor_with_rep, Parallelepiped, Support, SupportJson};
use crate::sweeps::{Sweep, SweepBounds};

#[derive(Debug, Parser)]
#[command(
    name = "quiverstab",
    version,
    about = "Stability and resolutions of homogeneous bundles on P^3"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Accepted for compatibility; every computation is deterministic.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank, c1, slope, components and border-plane contact of a support.
    Analyze(InputArgs),
    /// Semistability, multistability and stability verdict with a witness.
    Stability(InputArgs),
    /// Enumerate or count the filters (subrepresentation supports).
    Staircases {
        #[command(flatten)]
        input: InputArgs,
        /// Print only the number of filters.
        #[arg(long)]
        count: bool,
        /// Include the empty and the full filter.
        #[arg(long)]
        all: bool,
    },
    /// Free resolution of a box or cylinder staircase.
    Resolve(InputArgs),
    /// gr of a tensor product with another vertex or with S^ρV(s).
    Tensor {
        /// Vertex such as "S^{2,1}Q(0)".
        vertex: String,
        /// Second vertex.
        #[arg(long = "with", conflicts_with = "rep")]
        with: Option<String>,
        /// Partition ρ as comma-separated parts, e.g. "2,1".
        #[arg(long, required_unless_present = "with")]
        rep: Option<String>,
        /// Twist s of S^ρV(s).
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        twist: i64,
    },
    /// Run a named verification sweep, or all of them.
    Verify {
        /// Sweep name or "all".
        sweep: String,
        #[command(flatten)]
        bounds: BoundArgs,
    },
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// JSON file; standard input when absent or "-".
    pub path: Option<PathBuf>,
    /// Inline vertex list such as "S^{2,1}Q(0), O(1)", with full arrows.
    #[arg(long, conflicts_with = "path")]
    pub inline: Option<String>,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[arg(long, default_value_t = SweepBounds::default().max_extent)]
    pub max_extent: u32,
    #[arg(long, default_value_t = SweepBounds::default().max_l1)]
    pub max_l1: i64,
    #[arg(long, default_value_t = SweepBounds::default().max_abs_t)]
    pub max_abs_t: i64,
    #[arg(long, default_value_t = SweepBounds::default().max_box_vertices)]
    pub max_box_vertices: usize,
    #[arg(long, default_value_t = SweepBounds::default().max_steps)]
    pub max_steps: u32,
    #[arg(long, default_value_t = SweepBounds::default().max_staircase_vertices)]
    pub max_staircase_vertices: usize,
    #[arg(long, default_value_t = SweepBounds::default().max_side)]
    pub max_side: u32,
    #[arg(long, default_value_t = SweepBounds::default().max_translate_l1)]
    pub max_translate_l1: i64,
    #[arg(long, default_value_t = SweepBounds::default().max_hyp_l1)]
    pub max_hyp_l1: i64,
    #[arg(long, default_value_t = SweepBounds::default().random_vertices)]
    pub random_vertices: usize,
}

impl From<&BoundArgs> for SweepBounds {
    fn from(b: &BoundArgs) -> Self {
        SweepBounds {
            max_extent: b.max_extent,
            max_l1: b.max_l1,
            max_abs_t: b.max_abs_t,
            max_box_vertices: b.max_box_vertices,
            max_steps: b.max_steps,
            max_staircase_vertices: b.max_staircase_vertices,
            max_side: b.max_side,
            max_translate_l1: b.max_translate_l1,
            max_hyp_l1: b.max_hyp_l1,
            random_vertices: b.random_vertices,
        }
    }
}

/// What a run prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;

/// A parsed input document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shape {
    Support(Support),
    Box(Parallelepiped),
    Staircase(CylinderStaircase),
}

impl Shape {
    pub fn support(&self) -> Support {
        match self {
            Shape::Support(s) => s.clone(),
            Shape::Box(b) => b.support(),
            Shape::Staircase(c) => c.support(),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BoxJson {
    vmax: [i64; 3],
    extents: [u32; 3],
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StaircaseJson {
    vmax: [i64; 3],
    extents: [u32; 3],
    steps: Vec<[u32; 2]>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BoxDoc {
    #[serde(rename = "box")]
    bx: BoxJson,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StaircaseDoc {
    staircase: StaircaseJson,
}

fn schema_error(what: &str, e: serde_json::Error) -> Error {
    Error::Input(format!("{what}: {e}"))
}

fn parse_box(j: BoxJson) -> Result<Parallelepiped> {
    let [l1, l2, t] = j.vmax;
    let [d1, d2, d0] = j.extents;
    Parallelepiped::new(QVertex::new(l1, l2, t)?, d1, d2, d0)
}

/// Parses a support, box or staircase document.
pub fn parse_shape_json(text: &str) -> Result<Shape> {
    let v: Value = serde_json::from_str(text).map_err(|e| schema_error("malformed JSON", e))?;
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Input("input must be a JSON object".into()))?;
    if obj.contains_key("box") {
        let d: BoxDoc = serde_json::from_value(v).map_err(|e| schema_error("box schema", e))?;
        return Ok(Shape::Box(parse_box(d.bx)?));
    }
    if obj.contains_key("staircase") {
        let d: StaircaseDoc =
            serde_json::from_value(v).map_err(|e| schema_error("staircase schema", e))?;
        let host = parse_box(BoxJson {
            vmax: d.staircase.vmax,
            extents: d.staircase.extents,
        })?;
        let steps = d.staircase.steps.iter().map(|s| (s[0], s[1])).collect();
        return Ok(Shape::Staircase(CylinderStaircase::new(host, steps)?));
    }
    if obj.contains_key("vertices") {
        let j: SupportJson =
            serde_json::from_value(v).map_err(|e| schema_error("support schema", e))?;
        return Ok(Shape::Support(Support::try_from(&j)?));
    }
    Err(Error::Input(
        "expected an object with a \"vertices\", \"box\" or \"staircase\" key".into(),
    ))
}

/// Parses an inline list such as `S^{2,1}Q(0), 2*O(1) + Q(-1)`: vertices
/// separated by commas, `+` or whitespace outside braces, each optionally
/// prefixed by a multiplicity `k*`. Arrows are full.
pub fn parse_inline(text: &str) -> Result<Support> {
    let mut items = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    for ch in text.chars() {
        match ch {
            '{' | '(' => depth += 1,
            '}' | ')' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (ch == ',' || ch == '+' || ch.is_whitespace()) {
            if !cur.is_empty() {
                items.push(std::mem::take(&mut cur));
            }
        } else {
            cur.push(ch);
        }
    }
    if !cur.is_empty() {
        items.push(cur);
    }
    if items.is_empty() {
        return Err(Error::Input("empty inline support".into()));
    }
    let mut vs = Vec::with_capacity(items.len());
    for it in items {
        let (mult, body) = match it.split_once('*') {
            Some((k, rest)) => (
                k.parse::<u32>()
                    .map_err(|_| Error::Input(format!("bad multiplicity in '{it}'")))?,
                rest.to_string(),
            ),
            None => (1, it),
        };
        vs.push((body.parse::<QVertex>()?, mult));
    }
    Support::full(vs)
}

fn read_shape(input: &InputArgs, stdin: &mut dyn Read) -> Result<Shape> {
    if let Some(text) = &input.inline {
        return parse_inline(text).map(Shape::Support);
    }
    let text = match &input.path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| Error::Input(format!("cannot read {}: {e}", p.display())))?,
        _ => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| Error::Input(format!("cannot read standard input: {e}")))?;
            s
        }
    };
    parse_shape_json(&text)
}

pub fn rational(q: &Slope) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

fn vertex_json(v: &QVertex) -> Value {
    json!({"l1": v.l1(), "l2": v.l2(), "t": v.t()})
}

fn vertex_list(vs: &[QVertex]) -> Value {
    let mut vs = vs.to_vec();
    vs.sort_by(|a, b| a.output_cmp(b));
    Value::Array(vs.iter().map(vertex_json).collect())
}

fn support_value(s: &Support) -> Value {
    serde_json::to_value(SupportJson::from(s)).expect("support serializes")
}

fn box_value(b: &Parallelepiped) -> Value {
    let v = b.vmax();
    json!({"vmax": [v.l1(), v.l2(), v.t()], "extents": b.extents()})
}

fn staircase_value(c: &CylinderStaircase) -> Value {
    let mut v = box_value(&c.host());
    v["steps"] = json!(c.steps().iter().map(|&(x, y)| [x, y]).collect::<Vec<_>>());
    v
}

fn analyze(shape: &Shape) -> Result<Value> {
    let s = shape.support();
    let mut out = json!({
        "rank": s.rank(),
        "c1": s.c1(),
        "mu": rational(&s.slope()?),
        "vertices": s.len(),
        "components": s.component_classes(),
        "touches_pi": s.touches_pi(),
        "touches_sigma": s.touches_sigma(),
        "multiplicity_free": s.is_multiplicity_free(),
        "full_arrows": s.is_full_arrow(),
    });
    if let Some(b) = Parallelepiped::recognize(&s) {
        out["box"] = box_value(&b);
    } else if let Some(c) = CylinderStaircase::recognize(&s) {
        out["staircase"] = staircase_value(&c);
    }
    Ok(out)
}

fn stability(shape: &Shape) -> Result<Value> {
    let v = classify(&shape.support())?;
    let witness = match &v.witness {
        Some(w) => json!({
            "mu": rational(&w.slope),
            "vertices": vertex_list(&w.filter.vertices().iter().copied().collect::<Vec<_>>()),
        }),
        None => Value::Null,
    };
    Ok(json!({
        "mu": rational(&v.mu),
        "semistable": v.semistable,
        "multistable": v.multistable,
        "stable": v.stable,
        "shape": v.shape,
        "witness": witness,
    }))
}

fn staircases(shape: &Shape, count_only: bool, all: bool) -> Result<Value> {
    let s = shape.support();
    let proper = !all;
    if count_only {
        let n = match CylinderStaircase::recognize(&s) {
            Some(cs) => ProfileWalker::new(&cs).count(proper),
            None => {
                let mut n = 0u64;
                for_each_filter(&s, proper, |_| n += 1)?;
                n
            }
        };
        return Ok(json!({"count": n}));
    }
    let mut filters: Vec<Vec<QVertex>> = Vec::new();
    for_each_filter(&s, proper, |vs| {
        let mut vs = vs.to_vec();
        vs.sort_by(|a, b| a.output_cmp(b));
        filters.push(vs);
    })?;
    filters.sort_by(|a, b| {
        a.len().cmp(&b.len()).then_with(|| {
            a.iter()
                .zip(b)
                .map(|(x, y)| x.output_cmp(y))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
    });
    let list: Vec<Value> = filters
        .iter()
        .map(|f| {
            let mu = Support::from_vertices(f.iter().copied()).slope().ok();
            json!({
                "mu": mu.map(|q| rational(&q)),
                "vertices": vertex_list(f),
            })
        })
        .collect();
    Ok(json!({"count": list.len(), "filters": list}))
}

fn resolve(shape: &Shape) -> Result<Value> {
    let s = shape.support();
    let res = match shape {
        Shape::Box(b) => resolve_box(b),
        Shape::Staircase(c) => resolve_cylinder_staircase(c)?,
        Shape::Support(_) => {
            if let Some(b) = Parallelepiped::recognize(&s) {
                resolve_box(&b)
            } else if let Some(c) = CylinderStaircase::recognize(&s) {
                resolve_cylinder_staircase(&c)?
            } else {
                return Err(Error::Input(
                    "resolutions are computed only for boxes and cylinder staircases".into(),
                ));
            }
        }
    };
    let euler = euler_check(&res, &s);
    if !euler {
        return Err(Error::Internal(format!(
            "resolution {res} fails the Euler check"
        )));
    }
    Ok(json!({
        "resolution": serde_json::to_value(ResolutionJson::from(&res)).expect("resolution serializes"),
        "display": res.to_string(),
        "euler_check": euler,
        "no_adjacent_repeats": res.has_no_adjacent_repeats(),
        "template": classify_resolution_shape(&res),
    }))
}

fn tensor(vertex: &str, with: Option<&str>, rep: Option<&str>, twist: i64) -> Result<Value> {
    let v: QVertex = vertex.parse()?;
    let s = match (with, rep) {
        (Some(w), _) => tensor_gr(&v, &w.parse()?),
        (None, Some(r)) => {
            let parts = if r.trim().is_empty() {
                Vec::new()
            } else {
                r.split(',')
                    .map(|p| {
                        p.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::Input(format!("bad partition '{r}'")))
                    })
                    .collect::<Result<Vec<u32>>>()?
            };
            tensor_with_rep(&v, &Partition::new(parts)?, twist)?
        }
        (None, None) => return Err(Error::Input("give --with or --rep".into())),
    };
    Ok(json!({
        "rank": s.rank(),
        "c1": s.c1(),
        "mu": rational(&s.slope()?),
        "support": support_value(&s),
    }))
}

fn verify(name: &str, bounds: &SweepBounds) -> Result<(Value, String, bool)> {
    let sweeps: Vec<Sweep> = if name == "all" {
        Sweep::ALL.to_vec()
    } else {
        vec![Sweep::from_name(name).ok_or_else(|| {
            let names: Vec<&str> = Sweep::ALL.iter().map(|s| s.name()).collect();
            Error::Input(format!(
                "unknown sweep '{name}'; expected one of {} or all",
                names.join(", ")
            ))
        })?]
    };
    let reports: Vec<_> = sweeps.iter().map(|s| s.run(bounds)).collect();
    let passed = reports.iter().all(|r| r.passed);
    let text: String = reports.iter().map(|r| r.to_string()).collect();
    let value = json!({
        "passed": passed,
        "sweeps": serde_json::to_value(&reports).expect("reports serialize"),
    });
    Ok((value, text, passed))
}

/// Renders a JSON value as indented `key: value` lines.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render_into(v, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => Some(format!(
            "[{}]",
            a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")
        )),
        Value::Object(o) if is_vertex(o) => {
            Some(format!("S^{{{},{}}}Q({})", o["l1"], o["l2"], o["t"]))
        }
        _ => None,
    }
}

fn is_vertex(o: &serde_json::Map<String, Value>) -> bool {
    o.len() == 3 && ["l1", "l2", "t"].iter().all(|k| o.contains_key(*k))
}

fn render_into(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(o) => {
            for (k, x) in o {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_into(x, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render_into(x, indent + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

fn emit(v: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(v).expect("value serializes");
            s.push('\n');
            s
        }
        Format::Text => render_text(v),
    }
}

fn failure(e: &Error) -> Outcome {
    Outcome {
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
        code: if e.is_internal() {
            EXIT_INTERNAL
        } else {
            EXIT_INPUT
        },
    }
}

/// Runs an already parsed command line.
pub fn execute(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    let ok = |v: Value| Outcome {
        stdout: emit(&v, cli.format),
        stderr: String::new(),
        code: EXIT_OK,
    };
    let result = match &cli.command {
        Command::Analyze(i) => read_shape(i, stdin).and_then(|s| analyze(&s)).map(ok),
        Command::Stability(i) => read_shape(i, stdin).and_then(|s| stability(&s)).map(ok),
        Command::Staircases { input, count, all } => read_shape(input, stdin)
            .and_then(|s| staircases(&s, *count, *all))
            .map(ok),
        Command::Resolve(i) => read_shape(i, stdin).and_then(|s| resolve(&s)).map(ok),
        Command::Tensor {
            vertex,
            with,
            rep,
            twist,
        } => tensor(vertex, with.as_deref(), rep.as_deref(), *twist).map(ok),
        Command::Verify { sweep, bounds } => {
            verify(sweep, &bounds.into()).map(|(v, text, passed)| Outcome {
                stdout: match cli.format {
                    Format::Json => emit(&v, Format::Json),
                    Format::Text => text,
                },
                stderr: String::new(),
                code: if passed { EXIT_OK } else { EXIT_INTERNAL },
            })
        }
    };
    result.unwrap_or_else(|e| failure(&e))
}

/// Parses and runs a command line. Usage errors exit with code 1; help and
/// version requests print to stdout and exit with 0.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli, stdin),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: EXIT_INPUT,
                }
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code: EXIT_OK,
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], stdin: &str) -> Outcome {
        let mut input = stdin.as_bytes();
        run(
            std::iter::once("quiverstab").chain(args.iter().copied()),
            &mut input,
        )
    }

    fn json_of(o: &Outcome) -> Value {
        assert_eq!(o.code, 0, "{}", o.stderr);
        serde_json::from_str(&o.stdout).unwrap()
    }

    #[test]
    fn analyze_single_vertex_box() {
        let o = run_str(
            &["analyze"],
            r#"{"box":{"vmax":[2,1,0],"extents":[0,0,0]}}"#,
        );
        let v = json_of(&o);
        assert_eq!(v["rank"], 8);
        assert_eq!(v["c1"], 8);
        assert_eq!(v["mu"], "1/1");
    }

    #[test]
    fn split_support_is_unstable() {
        let o = run_str(&["stability", "--inline", "O(0), O(1)"], "");
        let v = json_of(&o);
        assert_eq!(v["semistable"], false);
        assert_eq!(v["mu"], "1/2");
        assert_eq!(v["witness"]["mu"], "1/1");
        assert_eq!(v["witness"]["vertices"], json!([{"l1":0,"l2":0,"t":1}]));
    }

    #[test]
    fn inline_parsing() {
        let s = parse_inline("S^{2,1}Q(0), 2*O(1)+Q(-1)").unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.multiplicity(&QVertex::line(1)), 2);
        assert!(parse_inline("S^{1,2}Q(0)").is_err());
        assert!(parse_inline("  ").is_err());
    }

    #[test]
    fn invalid_input_exits_one() {
        assert_eq!(run_str(&["analyze"], "{").code, 1);
        assert_eq!(
            run_str(
                &["analyze"],
                r#"{"box":{"vmax":[1,2,0],"extents":[0,0,0]}}"#
            )
            .code,
            1
        );
        assert_eq!(
            run_str(
                &["analyze"],
                r#"{"box":{"vmax":[1,0,0],"extents":[0,0,0],"x":1}}"#
            )
            .code,
            1
        );
        assert_eq!(run_str(&["frobnicate"], "").code, 1);
        assert_eq!(run_str(&["verify", "nonsense"], "").code, 1);
        let o = run_str(
            &["analyze"],
            r#"{"box":{"vmax":[1,2,0],"extents":[0,0,0]}}"#,
        );
        assert!(o.stderr.contains("l1 >= l2 >= 0"), "{}", o.stderr);
    }

    #[test]
    fn staircase_count_matches_enumeration() {
        let doc = r#"{"box":{"vmax":[3,1,0],"extents":[1,1,1]}}"#;
        let c = json_of(&run_str(&["staircases", "--count", "--all"], doc));
        assert_eq!(c["count"], 20);
        let e = json_of(&run_str(&["staircases", "--all"], doc));
        assert_eq!(e["count"], 20);
        assert_eq!(e["filters"][0]["vertices"], json!([]));
    }

    #[test]
    fn resolve_reports_template() {
        let o = run_str(
            &["resolve"],
            r#"{"box":{"vmax":[2,1,0],"extents":[1,1,0]}}"#,
        );
        let v = json_of(&o);
        assert_eq!(v["euler_check"], true);
        assert!(v["template"]["kind"].is_string());
    }

    #[test]
    fn text_format_renders_same_fields() {
        let o = run_str(&["--format", "text", "analyze", "--inline", "Q(0)"], "");
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("mu: 1/3\n"), "{}", o.stdout);
        assert!(o.stdout.contains("rank: 3\n"));
    }

    #[test]
    fn tensor_with_rep_and_vertex() {
        let v = json_of(&run_str(&["tensor", "Q(0)", "--with", "Q(0)"], ""));
        assert_eq!(v["rank"], 9);
        let v = json_of(&run_str(
            &["tensor", "O(0)", "--rep", "1", "--twist", "-1"],
            "",
        ));
        assert_eq!(v["rank"], 4);
        assert_eq!(v["c1"], -4);
    }

    #[test]
    fn seed_is_accepted() {
        let a = run_str(&["--seed", "7", "analyze", "--inline", "Q(0)"], "");
        let b = run_str(&["analyze", "--inline", "Q(0)"], "");
        assert_eq!(a, b);
    }
}
