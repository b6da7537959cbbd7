//! Command-line front end. Exit codes: 0 success, 1 verification mismatch,
//! 2 invalid input.

use std::ffi::OsString;
use std::io::Write;

use alcove_core::coset_count::{count_grassmannian, count_iwahori, count_parahoric};
use alcove_core::shadow::{enumerate_pf_galleries, shadow, shadow_oracle, DEFAULT_CAP};
use alcove_core::{minimal_gallery, AffineWeylElement, Chimney, Error, FaceType, RootSystem};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::json::{CountDoc, ShadowDoc};
use crate::svg::{render_svg, Scene};
use crate::verify::{count_vs_membership, recursion_vs_oracle, Sweep};

#[derive(Parser, Debug)]
#[command(name = "alcove", about = "Shadows of positively folded galleries in affine Coxeter complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Shadow by the wall-by-wall recursion, as JSON
    Shadow(ShadowArgs),
    /// Shadow with multiplicities by enumerating galleries, as JSON
    Oracle(ShadowArgs),
    /// Point count of a double coset intersection, as a polynomial in q
    Count(CountArgs),
    /// SVG picture of a rank-2 shadow
    Render(RenderArgs),
    /// Sweep recursion against enumeration and counts against membership
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
struct ChimneyArgs {
    /// Root system, e.g. A2, C2, G2
    #[arg(long = "type")]
    cartan_type: String,
    /// Letters of J, e.g. "1,2"; empty for J = {}
    #[arg(long = "J", default_value = "")]
    j: String,
    /// Word for y, e.g. "0,1" or "01"
    #[arg(long, default_value = "")]
    y: String,
}

#[derive(Args, Debug, Clone)]
struct ShadowArgs {
    #[command(flatten)]
    chimney: ChimneyArgs,
    /// Coweight for a vertex shadow, e.g. "2,2"
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Word for x
    #[arg(long)]
    x: Option<String>,
    /// Start face: vertex, alcove or letters
    #[arg(long)]
    sigma: Option<String>,
    /// End face: vertex, alcove or letters
    #[arg(long)]
    tau: Option<String>,
    /// Longest gallery the enumeration will attempt
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[arg(long)]
    out: Option<String>,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum Kind {
    Iwahori,
    Parahoric,
    Grassmannian,
}

#[derive(Args, Debug)]
struct CountArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[command(flatten)]
    chimney: ChimneyArgs,
    #[arg(long)]
    x: Option<String>,
    #[arg(long)]
    z: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    #[arg(long)]
    sigma: Option<String>,
    #[arg(long)]
    tau: Option<String>,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args, Debug)]
struct RenderArgs {
    #[command(flatten)]
    shadow: ShadowArgs,
    /// Half-width of the picture in coroot coordinates; chosen from the shadow if absent
    #[arg(long)]
    window: Option<i64>,
    /// Draw every positively folded gallery instead of just the minimal one
    #[arg(long)]
    galleries: bool,
    /// Mark multiplicities from the enumeration
    #[arg(long)]
    multiplicities: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long = "type")]
    cartan_type: String,
    #[arg(long, default_value_t = 4)]
    max_x_len: usize,
    #[arg(long, default_value_t = 2)]
    max_y_len: usize,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

/// A bad value for a flag.
#[derive(Debug)]
struct Invalid {
    flag: &'static str,
    msg: String,
}

fn bad(flag: &'static str, msg: impl ToString) -> Invalid {
    Invalid { flag, msg: msg.to_string() }
}

type Parsed<T> = std::result::Result<T, Invalid>;

enum Outcome {
    Done,
    Mismatch,
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(Outcome::Done) => 0,
        Ok(Outcome::Mismatch) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: --{}: {}", e.flag, e.msg);
            2
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Parsed<Outcome> {
    match cmd {
        Command::Shadow(a) => {
            let s = Setup::new(&a)?;
            let set = shadow(&s.rs, &s.x, s.sigma, s.tau, &s.chimney).map_err(|e| s.blame(e))?;
            let doc = ShadowDoc::new(&s.rs, &s.chimney, &s.x, s.sigma, s.tau, set.iter().map(|t| (t, None)));
            emit(out, a.out.as_deref(), &pretty(&doc))?;
        }
        Command::Oracle(a) => {
            let s = Setup::new(&a)?;
            let mult = shadow_oracle(&s.rs, &s.x, s.sigma, s.tau, &s.chimney, a.cap).map_err(|e| s.blame(e))?;
            let doc = ShadowDoc::new(&s.rs, &s.chimney, &s.x, s.sigma, s.tau, mult.iter().map(|(t, &m)| (t, Some(m))));
            emit(out, a.out.as_deref(), &pretty(&doc))?;
        }
        Command::Count(a) => {
            let rs = root_system(&a.chimney.cartan_type)?;
            let chimney = chimney(&rs, &a.chimney)?;
            let p = match a.kind {
                Kind::Iwahori => {
                    let x = word_element(&rs, "x", a.x.as_deref())?;
                    let z = word_element(&rs, "z", a.z.as_deref())?;
                    count_iwahori(&rs, &x, &z, &chimney)
                }
                Kind::Parahoric => {
                    let sigma = face(&rs, "sigma", a.sigma.as_deref().unwrap_or("alcove"))?;
                    let tau = face(&rs, "tau", a.tau.as_deref().unwrap_or("alcove"))?;
                    let x = word_element(&rs, "x", a.x.as_deref())?;
                    let z = word_element(&rs, "z", a.z.as_deref())?;
                    count_parahoric(&rs, sigma, tau, &x, &z, &chimney).map_err(|e| core_error("x", e))?
                }
                Kind::Grassmannian => {
                    let lambda = coweight(&rs, "lambda", a.lambda.as_deref())?;
                    let mu = coweight(&rs, "mu", a.mu.as_deref())?;
                    count_grassmannian(&rs, &lambda, &mu, &chimney).map_err(|e| core_error("lambda", e))?
                }
            };
            let doc = CountDoc::new(&p);
            emit(out, a.out.as_deref(), &format!("{}\n", serde_json::to_string(&doc).expect("serializable")))?;
        }
        Command::Render(a) => {
            let s = Setup::new(&a.shadow)?;
            let set = shadow(&s.rs, &s.x, s.sigma, s.tau, &s.chimney).map_err(|e| s.blame(e))?;
            let mult = if a.multiplicities {
                Some(shadow_oracle(&s.rs, &s.x, s.sigma, s.tau, &s.chimney, a.shadow.cap).map_err(|e| s.blame(e))?)
            } else {
                None
            };
            let galleries = if a.galleries {
                let g = minimal_gallery(&s.rs, &s.x, s.sigma, s.tau).map_err(|e| s.blame(e))?;
                if g.len() > a.shadow.cap {
                    return Err(bad("cap", format!("the galleries have length {}, above the cap {}", g.len(), a.shadow.cap)));
                }
                enumerate_pf_galleries(&s.rs, g.gallery_type(), &s.chimney)
            } else {
                vec![minimal_gallery(&s.rs, &s.x, s.sigma, s.tau).map_err(|e| s.blame(e))?]
            };
            let window = match a.window {
                Some(w) => w,
                None => auto_window(&s.rs, set.iter().map(|t| &t.rep)),
            };
            let mut scene = Scene::new(&s.rs, window);
            scene.chimney = Some(&s.chimney);
            scene.shadow = set.iter().map(|t| (t.clone(), mult.as_ref().map(|m| m[t]))).collect();
            scene.galleries = galleries;
            if s.tau.is_alcove() {
                scene.fills.push(s.x.clone());
            }
            scene.title = Some(s.title());
            let svg = render_svg(&scene).map_err(|e| match e {
                crate::svg::RenderError::Rank(_) => bad("type", e),
                crate::svg::RenderError::Window(_) => bad("window", e),
            })?;
            emit(out, a.shadow.out.as_deref(), &svg)?;
        }
        Command::Verify(a) => {
            let rs = root_system(&a.cartan_type)?;
            let sweep = Sweep { max_x_len: a.max_x_len, max_y_len: a.max_y_len, cap: a.cap };
            let mut all_ok = true;
            for (label, report) in [
                ("recursion vs enumeration", recursion_vs_oracle(&rs, &sweep)),
                ("count vs membership", count_vs_membership(&rs, &sweep)),
            ] {
                let report = report.map_err(|e| core_error("max-x-len", e))?;
                let _ = writeln!(out, "{label}: {} cases, {} mismatches", report.cases, report.mismatches.len());
                for (case, why) in &report.mismatches {
                    let _ = writeln!(out, "  {case:?}: {why}");
                }
                all_ok &= report.ok();
            }
            if !all_ok {
                return Ok(Outcome::Mismatch);
            }
        }
    }
    Ok(Outcome::Done)
}

fn pretty<T: serde::Serialize>(doc: &T) -> String {
    format!("{}\n", serde_json::to_string_pretty(doc).expect("serializable"))
}

fn emit(out: &mut dyn Write, path: Option<&str>, text: &str) -> Parsed<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| bad("out", format!("{p}: {e}"))),
        None => out.write_all(text.as_bytes()).map_err(|e| bad("out", e)),
    }
}

// shadow simplices plus one unit of slack
fn auto_window<'a>(rs: &RootSystem, reps: impl Iterator<Item = &'a AffineWeylElement>) -> i64 {
    let _ = rs;
    reps.flat_map(|x| x.translation().iter().map(|c| c.abs()).collect::<Vec<_>>()).max().unwrap_or(0).max(1) + 1
}

struct Setup {
    rs: RootSystem,
    chimney: Chimney,
    x: AffineWeylElement,
    sigma: FaceType,
    tau: FaceType,
    // which flag named x
    x_flag: &'static str,
}

impl Setup {
    fn new(a: &ShadowArgs) -> Parsed<Setup> {
        let rs = root_system(&a.chimney.cartan_type)?;
        let chimney = chimney(&rs, &a.chimney)?;
        let n = rs.rank();
        let (x, sigma, tau, x_flag) = match (&a.lambda, &a.x) {
            (Some(_), Some(_)) => return Err(bad("lambda", "give either --lambda or --x, not both")),
            (None, None) => return Err(bad("x", "one of --lambda or --x is required")),
            (Some(l), None) => {
                if a.sigma.is_some() || a.tau.is_some() {
                    return Err(bad("lambda", "vertex shadows fix --sigma and --tau to the vertex"));
                }
                let lambda = coweight(&rs, "lambda", Some(l))?;
                let x = rs.x_lambda(&rs.dominant(&lambda)).map_err(|e| core_error("lambda", e))?;
                (x, FaceType::vertex(n), FaceType::vertex(n), "lambda")
            }
            (None, Some(w)) => {
                let sigma = face(&rs, "sigma", a.sigma.as_deref().unwrap_or("alcove"))?;
                let tau = face(&rs, "tau", a.tau.as_deref().unwrap_or("alcove"))?;
                (word_element(&rs, "x", Some(w))?, sigma, tau, "x")
            }
        };
        Ok(Setup { rs, chimney, x, sigma, tau, x_flag })
    }

    fn blame(&self, e: Error) -> Invalid {
        match e {
            Error::CapExceeded { .. } => core_error("cap", e),
            e => core_error(self.x_flag, e),
        }
    }

    fn title(&self) -> String {
        let word = |w: Vec<usize>| {
            if w.is_empty() {
                "id".to_string()
            } else {
                w.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("")
            }
        };
        format!(
            "{} J={{{}}} y={} x={}",
            self.rs.cartan_type(),
            self.chimney.j().letters().iter().map(|s| s.to_string()).collect::<Vec<_>>().join(","),
            word(self.rs.reduced_word(self.chimney.y())),
            word(self.rs.reduced_word(&self.x))
        )
    }
}

fn core_error(flag: &'static str, e: Error) -> Invalid {
    bad(flag, e)
}

fn root_system(name: &str) -> Parsed<RootSystem> {
    RootSystem::from_name(name).map_err(|e| bad("type", e))
}

fn chimney(rs: &RootSystem, a: &ChimneyArgs) -> Parsed<Chimney> {
    let j = letters(&a.j).map_err(|m| bad("J", m))?;
    let j = FaceType::from_letters(&j, rs.rank()).map_err(|e| bad("J", e))?;
    let y = word_element(rs, "y", Some(&a.y))?;
    Ok(Chimney::new(rs, j, y))
}

/// "0,1,2", "0 1 2" or "012"
fn letters(s: &str) -> std::result::Result<Vec<usize>, String> {
    let s = s.trim();
    let parts: Vec<&str> = if s.contains(|c: char| c == ',' || c.is_whitespace()) {
        s.split(|c: char| c == ',' || c.is_whitespace()).filter(|p| !p.is_empty()).collect()
    } else {
        s.char_indices().map(|(i, c)| &s[i..i + c.len_utf8()]).collect()
    };
    parts.iter().map(|p| p.parse::<usize>().map_err(|_| format!("not a letter: {p:?}"))).collect()
}

fn word_element(rs: &RootSystem, flag: &'static str, s: Option<&str>) -> Parsed<AffineWeylElement> {
    let s = s.ok_or_else(|| bad(flag, "required"))?;
    let w = letters(s).map_err(|m| bad(flag, m))?;
    rs.from_word(&w).map_err(|e| bad(flag, e))
}

fn coweight(rs: &RootSystem, flag: &'static str, s: Option<&str>) -> Parsed<Vec<i64>> {
    let s = s.ok_or_else(|| bad(flag, "required"))?;
    let v: Vec<i64> = s
        .split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|_| bad(flag, format!("not an integer: {p:?}"))))
        .collect::<Parsed<_>>()?;
    if v.len() != rs.rank() {
        return Err(bad(flag, format!("expected {} coordinates, got {}", rs.rank(), v.len())));
    }
    Ok(v)
}

fn face(rs: &RootSystem, flag: &'static str, s: &str) -> Parsed<FaceType> {
    match s.trim() {
        "vertex" => Ok(FaceType::vertex(rs.rank())),
        "alcove" => Ok(FaceType::alcove()),
        other => {
            let l = letters(other).map_err(|m| bad(flag, m))?;
            FaceType::from_letters(&l, rs.rank()).map_err(|e| bad(flag, e))
        }
    }
}
