//! Command-line front end. [`run`] parses argv, writes to stdout/stderr and
//! returns the process exit code: 0 success, 1 verification or computation
//! failure, 2 usage error.

mod poly_spec;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::dunkl::{unit, DunklContext};
use crate::error::{Error, Result};
use crate::numeric::mc_pairing;
use crate::group::Vec3;
use crate::polyalg::MultiPoly;
use crate::report::{Status, VerifyReport};
use crate::scalars::{GoldenNumber, ParamScalar, Rational};
use crate::verify::{run_suite, Suite, VerifyOptions};
use crate::waves::{
    degree_cap, invariant_harmonic_dimension, norm_invariant_phi, norm_invariant_phi_display, norm_invariant_w, phi_inner_closed,
    q_at_vertex, w_inner_from_q, InvariantFamilies, QFamily, VertexCase, DEGREE_CAP_ENV,
};

pub use poly_spec::{resolve_poly, PolySpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "h3dunkl", version, about = "Exact Dunkl-operator computations for the icosahedral group H3")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Group census, roots and vertex sets.
    Group,
    /// Apply Dunkl-type operators to a polynomial.
    Dunkl(DunklArgs),
    /// The q, w and φ families.
    Waves(WavesArgs),
    /// Exact pairings of two polynomials.
    Pair(PairArgs),
    /// Monte-Carlo estimates.
    Numeric(NumericArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
pub struct PolyInput {
    /// Polynomial: `q:N[:V]`, `w:N[:V]`, `phi:N[:V]` (vertex V of I₊),
    /// `qg:N`, `wg:N`, `phig:N` (invariant sums), `@FILE`, or a literal
    /// expression in x1..x3, k, w, tau.
    #[arg(long)]
    pub poly: Option<String>,
    /// Read the polynomial from a file in the text grammar.
    #[arg(long, conflicts_with = "poly")]
    pub poly_file: Option<std::path::PathBuf>,
}

impl PolyInput {
    fn spec(&self) -> Result<PolySpec> {
        match (&self.poly, &self.poly_file) {
            (Some(s), None) => PolySpec::parse(s),
            (None, Some(f)) => Ok(PolySpec::File(f.clone())),
            _ => Err(Error::InvalidArgument("one of --poly or --poly-file is required".into())),
        }
    }
}

#[derive(Args, Debug)]
pub struct DunklArgs {
    #[command(subcommand)]
    pub action: DunklAction,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OpName {
    /// ⟨u, 𝒟⟩
    Dunkl,
    /// Δ_κ
    Laplacian,
    /// 𝓗̃ = −Δ_κ + ω(3 + 2γ_κ + 2·deg)
    Hamiltonian,
    /// 𝒥²
    Jsquare,
    /// ⟨x, 𝒟⟩
    XDotNabla,
    /// exp(−Δ_κ/(4ω))
    Heat,
    /// H̃_u
    Ha,
    /// H̃⁽ᵏ⁾ (needs --k)
    Hk,
    /// Σ_v σ_v
    SigmaSum,
}

#[derive(Subcommand, Debug)]
pub enum DunklAction {
    /// Apply an operator.
    Apply {
        #[arg(long, value_enum, default_value_t = OpName::Dunkl)]
        op: OpName,
        /// Direction: axis 1..3 or a comma-separated vector over Q(τ), e.g. `0,tau,1`.
        #[arg(long, default_value = "1")]
        dir: String,
        /// Index for H̃⁽ᵏ⁾.
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// Specialize κ to a rational before applying.
        #[arg(long)]
        kappa: Option<String>,
        #[command(flatten)]
        input: PolyInput,
    },
    /// Harmonic projection Λ, or the full decomposition with --decompose.
    Harmonic {
        #[arg(long)]
        decompose: bool,
        #[arg(long)]
        kappa: Option<String>,
        #[command(flatten)]
        input: PolyInput,
    },
}

#[derive(Args, Debug)]
pub struct WavesArgs {
    #[command(subcommand)]
    pub family: WaveFamily,
}

#[derive(Args, Debug, Clone)]
pub struct WaveOpts {
    #[arg(long)]
    pub n: usize,
    /// Index into I₊ (0..6); default is the vertex (0,τ,1).
    #[arg(long)]
    pub vertex: Option<usize>,
    /// The G-invariant sum over I₊.
    #[arg(long)]
    pub invariant: bool,
    /// Print the closed-form squared L² norm instead of the polynomial.
    #[arg(long)]
    pub norm: bool,
    /// With --norm, also compute the pairing exactly and compare.
    #[arg(long, requires = "norm")]
    pub check: bool,
}

#[derive(Subcommand, Debug)]
pub enum WaveFamily {
    Q(WaveOpts),
    W(WaveOpts),
    Phi(WaveOpts),
    /// Dimensions of harmonic G-invariants by degree.
    Invariant {
        #[arg(long, default_value_t = 16)]
        max: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PairKind {
    /// p(𝒟/2ω)q at 0.
    Kw,
    /// Gaussian L² pairing via exp(Δ_κ/4ω).
    L2,
    /// Gaussian L² pairing by explicit moments; needs --kappa to be a non-negative integer.
    Moments,
}

#[derive(Args, Debug)]
pub struct PairArgs {
    #[arg(long, value_enum, default_value_t = PairKind::L2)]
    pub kind: PairKind,
    /// Left polynomial spec (see `--poly` under `dunkl apply`).
    #[arg(long)]
    pub left: String,
    /// Right polynomial spec; defaults to the left one.
    #[arg(long)]
    pub right: Option<String>,
    #[arg(long)]
    pub kappa: Option<String>,
}

#[derive(Args, Debug)]
pub struct NumericArgs {
    #[command(subcommand)]
    pub action: NumericAction,
}

#[derive(Subcommand, Debug)]
pub enum NumericAction {
    /// Estimate ⟨p,q⟩₂ at numeric κ, ω.
    Pair {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: Option<String>,
        #[arg(long, default_value_t = 0.5)]
        kappa: f64,
        #[arg(long, default_value_t = 1.0)]
        omega: f64,
        #[arg(long, default_value_t = 1_000_000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Also evaluate the exact pairing at these values and report z.
        #[arg(long)]
        exact: bool,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Suite name or `all`.
    pub suite: String,
    /// Run checks marked slow.
    #[arg(long)]
    pub slow: bool,
    #[arg(long)]
    pub seed: Option<u64>,
}

/// Parse `argv` (including the program name) and run.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
        }
    };
    let mut out = std::io::stdout().lock();
    match execute(&cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let code = match e {
                Error::Parse(_) | Error::InvalidArgument(_) | Error::DegreeCapExceeded { .. } => 2,
                _ => 1,
            };
            if cli.format == Format::Json {
                let _ = writeln!(out, "{}", json!({ "error": e.to_string() }));
            }
            eprintln!("error: {}", e);
            code
        }
    }
}

/// Run a parsed command, writing to `out`.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let ctx = DunklContext::new()?;
    let fmt = cli.format;
    match &cli.command {
        Command::Group => group(&ctx, fmt, out),
        Command::Dunkl(a) => dunkl(&ctx, &a.action, fmt, out),
        Command::Waves(a) => waves(&ctx, &a.family, fmt, out),
        Command::Pair(a) => pair(&ctx, a, fmt, out),
        Command::Numeric(a) => numeric(&ctx, &a.action, fmt, out),
        Command::Verify(a) => verify(&ctx, a, fmt, out),
    }
}

fn io(e: std::io::Error) -> Error {
    Error::InvalidArgument(format!("write failed: {}", e))
}

/// A closed pipe on stdout (`| head`) is not an error.
fn io_ok(r: std::io::Result<()>) -> Result<()> {
    match r {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(io(e)),
        _ => Ok(()),
    }
}

fn emit(out: &mut dyn Write, fmt: Format, v: &Value, text: impl FnOnce() -> String) -> Result<()> {
    io_ok(match fmt {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(v).unwrap()),
        Format::Text => writeln!(out, "{}", text()),
    })
}

fn parse_rational(s: &str) -> Result<Rational> {
    s.trim().parse::<Rational>().map_err(|_| Error::Parse(format!("not a rational number: {}", s)))
}

fn context_at(ctx: &DunklContext, kappa: &Option<String>) -> Result<DunklContext> {
    Ok(match kappa {
        Some(k) => ctx.at_kappa(parse_rational(k)?),
        None => ctx.clone(),
    })
}

/// Resolve a spec and, when the context has κ fixed, specialize it there too.
fn load(ctx: &DunklContext, spec: &PolySpec) -> Result<MultiPoly> {
    let p = resolve_poly(ctx, spec)?;
    match ctx.kappa_value() {
        Some(k) => p.substitute_kappa(k),
        None => Ok(p),
    }
}

/// `1`, `2`, `3` for coordinate axes, otherwise three comma-separated Q(τ) entries.
pub fn parse_direction(s: &str) -> Result<Vec3> {
    let s = s.trim();
    if let Ok(i) = s.parse::<usize>() {
        if (1..=3).contains(&i) {
            return Ok(unit(i - 1));
        }
        return Err(Error::InvalidArgument(format!("axis must be 1, 2 or 3, got {}", i)));
    }
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::Parse(format!("direction needs three components: {}", s)));
    }
    let mut v: Vec<GoldenNumber> = Vec::with_capacity(3);
    for p in parts {
        let c = ParamScalar::parse(p)?;
        v.push(c.as_golden().ok_or_else(|| Error::Parse(format!("direction entries must be constants in Q(τ): {}", p)))?);
    }
    Ok([v[0].clone(), v[1].clone(), v[2].clone()])
}

fn group(ctx: &DunklContext, fmt: Format, out: &mut dyn Write) -> Result<i32> {
    let g = ctx.group();
    let c = g.census();
    let v = &g.vertices;
    let roots: Vec<Vec<String>> = ctx.roots().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
    let val = json!({
        "census": c,
        "positive_roots": roots,
        "vertices": { "icosahedron": v.i.len(), "icosahedron_positive": v.i_plus.len(), "dodecahedron": v.k.len(), "dodecahedron_positive": v.k_plus.len() },
    });
    emit(out, fmt, &val, || {
        let mut s = format!(
            "order {}\nreflections {}\nrotations {}\nimproper non-reflections {}\nclasses rho2/rho3/rho5,1/rho5,2 = {}/{}/{}/{}\n",
            c.order, c.reflections, c.rotations, c.improper_non_reflections, c.rho2, c.rho3, c.rho5_1, c.rho5_2
        );
        s.push_str(&format!("|I| = {}, |K| = {}\npositive roots:", v.i.len(), v.k.len()));
        for r in &roots {
            s.push_str(&format!("\n  ({})", r.join(", ")));
        }
        s
    })?;
    Ok(0)
}

fn dunkl(ctx: &DunklContext, a: &DunklAction, fmt: Format, out: &mut dyn Write) -> Result<i32> {
    match a {
        DunklAction::Apply { op, dir, k, kappa, input } => {
            let ctx = context_at(ctx, kappa)?;
            let p = load(&ctx, &input.spec()?)?;
            let u = parse_direction(dir)?;
            let r = match op {
                OpName::Dunkl => ctx.dunkl(&u, &p)?,
                OpName::Laplacian => ctx.laplacian(&p)?,
                OpName::Hamiltonian => ctx.hamiltonian_tilde(&p)?,
                OpName::Jsquare => ctx.angular_j_square(&p)?,
                OpName::XDotNabla => ctx.x_dot_nabla(&p)?,
                OpName::Heat => ctx.heat_exp(&p, -1)?,
                OpName::Ha => ctx.h_a_tilde(&u, &p)?,
                OpName::Hk => ctx.h_k_tilde(*k, &p)?,
                OpName::SigmaSum => ctx.sigma_sum(&p),
            };
            let val = json!({ "op": format!("{:?}", op).to_lowercase(), "input": p.to_string(), "result": r.to_string() });
            emit(out, fmt, &val, || r.to_string())?;
        }
        DunklAction::Harmonic { decompose, kappa, input } => {
            let ctx = context_at(ctx, kappa)?;
            let p = load(&ctx, &input.spec()?)?;
            if *decompose {
                let parts = ctx.harmonic_decompose(&p)?;
                let val = json!({ "components": parts.iter().map(|(j, h)| json!({ "j": j, "harmonic": h.to_string() })).collect::<Vec<_>>() });
                emit(out, fmt, &val, || {
                    parts.iter().map(|(j, h)| format!("|x|^{} * ({})", 2 * j, h)).collect::<Vec<_>>().join("\n")
                })?;
            } else {
                let h = ctx.harmonic_project(&p)?;
                emit(out, fmt, &json!({ "projection": h.to_string() }), || h.to_string())?;
            }
        }
    }
    Ok(0)
}

fn vertex_family(ctx: &DunklContext, o: &WaveOpts) -> Result<QFamily> {
    let i_plus = &ctx.group().vertices.i_plus;
    let y = match o.vertex {
        Some(i) => i_plus.get(i).cloned().ok_or_else(|| Error::InvalidArgument(format!("vertex index must be < {}", i_plus.len())))?,
        None => crate::waves::vertex_pair().0,
    };
    Ok(QFamily::new(i_plus, y, o.n))
}

fn check_cap(n: usize) -> Result<()> {
    let cap = degree_cap();
    if n > cap {
        return Err(Error::InvalidArgument(format!("degree {} exceeds the cap {} (set {} to raise it)", n, cap, DEGREE_CAP_ENV)));
    }
    Ok(())
}

fn waves(ctx: &DunklContext, f: &WaveFamily, fmt: Format, out: &mut dyn Write) -> Result<i32> {
    let (kind, o) = match f {
        WaveFamily::Q(o) => ("q", o),
        WaveFamily::W(o) => ("w", o),
        WaveFamily::Phi(o) => ("phi", o),
        WaveFamily::Invariant { max } => {
            let dims: Vec<(u32, u32)> = (0..=*max).map(|n| (n, invariant_harmonic_dimension(n))).collect();
            let val = json!({ "dimensions": dims.iter().map(|(n, d)| json!({ "degree": n, "dim": d })).collect::<Vec<_>>() });
            emit(out, fmt, &val, || dims.iter().map(|(n, d)| format!("{:>3} {}", n, d)).collect::<Vec<_>>().join("\n"))?;
            return Ok(0);
        }
    };
    check_cap(o.n)?;
    let n = o.n;
    let poly = || -> Result<MultiPoly> {
        if o.invariant {
            let inv = InvariantFamilies::new(&ctx.group().vertices.i_plus, n);
            match kind {
                "q" => inv.q(n),
                "w" => inv.w(n),
                _ => inv.phi(n),
            }
        } else {
            let fam = vertex_family(ctx, o)?;
            match kind {
                "q" => fam.q(n),
                "w" => fam.w(n),
                _ => fam.phi(n),
            }
        }
    };
    if !o.norm {
        let p = poly()?;
        let val = json!({ "family": kind, "n": n, "invariant": o.invariant, "polynomial": p.to_string() });
        emit(out, fmt, &val, || p.to_string())?;
        return Ok(0);
    }
    let closed = closed_norm(kind, n, o.invariant)?;
    let display = if o.invariant && kind == "phi" { norm_invariant_phi_display(n as u32) } else { None };
    let mut val = json!({ "family": kind, "n": n, "invariant": o.invariant, "norm_sq": closed.to_string() });
    if let Some(d) = &display {
        val["display_form_agrees"] = json!(d == &closed);
    }
    let mut code = 0;
    if o.check {
        let p = poly()?;
        let exact = ctx.pairing_l2(&p, &p)?;
        let ok = exact == closed;
        val["pairing"] = json!(exact.to_string());
        val["agrees"] = json!(ok);
        if !ok {
            code = 1;
        }
    }
    emit(out, fmt, &val, || {
        let mut s = format!("{}", closed);
        if let Some(d) = &display {
            s.push_str(&format!("\ndisplayed closed form agrees: {}", d == &closed));
        }
        if let Some(a) = val.get("agrees") {
            s.push_str(&format!("\nexact pairing agrees: {}", a));
            if a == false {
                s.push_str(&format!("\n  closed:  {}\n  pairing: {}", closed, val["pairing"].as_str().unwrap_or("")));
            }
        }
        s
    })?;
    Ok(code)
}

/// Closed-form `‖·‖₂²` for the requested family member.
pub fn closed_norm(kind: &str, n: usize, invariant: bool) -> Result<ParamScalar> {
    let n32 = n as u32;
    if invariant {
        if n % 2 == 1 {
            return Err(Error::InvalidArgument("invariant families need even degree".into()));
        }
        return match kind {
            "phi" => Ok(norm_invariant_phi(n32 / 2)),
            "w" => Ok(norm_invariant_w(n32 / 2)),
            _ => Err(Error::Unsupported("closed norms exist for w and phi only".into())),
        };
    }
    let q = |k: u32| q_at_vertex(k, VertexCase::Same);
    match kind {
        "w" => Ok(w_inner_from_q(n32, &q(n32))),
        "phi" => Ok(phi_inner_closed(n32, q)),
        _ => Err(Error::Unsupported("closed norms exist for w and phi only".into())),
    }
}

fn pair(ctx: &DunklContext, a: &PairArgs, fmt: Format, out: &mut dyn Write) -> Result<i32> {
    let kctx = context_at(ctx, &a.kappa)?;
    let p = load(&kctx, &PolySpec::parse(&a.left)?)?;
    let q = match &a.right {
        Some(r) => load(&kctx, &PolySpec::parse(r)?)?,
        None => p.clone(),
    };
    let v = match a.kind {
        PairKind::Kw => kctx.pairing_kw(&p, &q)?,
        PairKind::L2 => kctx.pairing_l2(&p, &q)?,
        PairKind::Moments => {
            let k = match &a.kappa {
                Some(k) => parse_rational(k)?,
                None => return Err(Error::InvalidArgument("--kind moments needs --kappa".into())),
            };
            ctx.pairing_l2_moments(&p, &q, &k)?
        }
    };
    let val = json!({ "kind": format!("{:?}", a.kind).to_lowercase(), "value": v.to_string() });
    emit(out, fmt, &val, || v.to_string())?;
    Ok(0)
}

fn numeric(ctx: &DunklContext, a: &NumericAction, fmt: Format, out: &mut dyn Write) -> Result<i32> {
    let NumericAction::Pair { left, right, kappa, omega, samples, seed, exact } = a;
    let p = resolve_poly(ctx, &PolySpec::parse(left)?)?;
    let q = match right {
        Some(r) => resolve_poly(ctx, &PolySpec::parse(r)?)?,
        None => p.clone(),
    };
    let e = mc_pairing(ctx.roots(), &p, &q, *kappa, *omega, *samples, *seed)?;
    let mut val = json!({ "kappa": kappa, "omega": omega, "seed": seed, "estimate": e });
    if *exact {
        let x = ctx.pairing_l2(&p, &q)?.to_f64(*kappa, *omega);
        val["exact"] = json!(x);
        val["z"] = json!((e.estimate - x) / e.std_error);
    }
    emit(out, fmt, &val, || {
        let mut s = format!("{:.10e} ± {:.3e}  ({} samples, seed {})", e.estimate, e.std_error, e.samples, seed);
        if let Some(x) = val.get("exact") {
            s.push_str(&format!("\nexact {:.10e}  z = {:.3}", x.as_f64().unwrap_or(f64::NAN), val["z"].as_f64().unwrap_or(f64::NAN)));
        }
        s
    })?;
    Ok(0)
}

fn verify(ctx: &DunklContext, a: &VerifyArgs, fmt: Format, out: &mut dyn Write) -> Result<i32> {
    let suites: Vec<Suite> = if a.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        let mut v = Vec::new();
        for s in a.suite.split(',') {
            v.push(Suite::parse(s.trim()).ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "unknown suite `{}`; expected all or one of {}",
                    s,
                    Suite::ALL.iter().map(|x| x.name()).collect::<Vec<_>>().join(", ")
                ))
            })?);
        }
        v
    };
    let mut opts = VerifyOptions { slow: a.slow, ..Default::default() };
    if let Some(s) = a.seed {
        opts.seed = s;
    }
    let (tx, rx) = std::sync::mpsc::channel();
    let mut reports: Vec<Option<VerifyReport>> = vec![None; suites.len()];
    std::thread::scope(|scope| {
        for (i, s) in suites.iter().enumerate() {
            let tx = tx.clone();
            let opts = &opts;
            scope.spawn(move || {
                let _ = tx.send((i, run_suite(ctx, *s, opts)));
            });
        }
        drop(tx);
        // Stream each suite's block as soon as it finishes.
        for (i, r) in rx {
            if fmt == Format::Text {
                let _ = write!(out, "{}", render_text(&r, suites[i], a.slow));
                let _ = out.flush();
            }
            reports[i] = Some(r);
        }
    });
    let reports: Vec<VerifyReport> = reports.into_iter().map(|r| r.expect("suite finished")).collect();
    let passed = reports.iter().all(|r| r.passed());
    match fmt {
        Format::Json => {
            let val = json!({ "passed": passed, "slow": a.slow, "seed": opts.seed, "reports": reports });
            io_ok(writeln!(out, "{}", serde_json::to_string_pretty(&val).unwrap()))?;
        }
        Format::Text => {
            let (mut np, mut nf, mut ns) = (0, 0, 0);
            for c in reports.iter().flat_map(|r| &r.checks) {
                match c.status {
                    Status::Pass => np += 1,
                    Status::Fail => nf += 1,
                    Status::SkippedSlow => ns += 1,
                }
            }
            io_ok(writeln!(out, "{} passed, {} failed, {} skipped (slow)", np, nf, ns))?;
            for r in &reports {
                for c in r.checks.iter().filter(|c| c.status == Status::Fail) {
                    eprintln!("FAILED {}: {}", c.id, c.witness.as_ref().map(|w| w.to_string()).unwrap_or_default());
                }
            }
        }
    }
    Ok(if passed { 0 } else { 1 })
}

/// Plain-text block for one suite.
pub fn render_text(r: &VerifyReport, suite: Suite, slow: bool) -> String {
    let skipped = r.checks.iter().any(|c| c.status == Status::SkippedSlow);
    let mut s = format!("== {} ({:.1} s", r.suite, r.elapsed_ms / 1e3);
    if skipped || slow {
        s.push_str(&format!(", budget {} s", suite.budget_secs()));
    }
    s.push_str(")\n");
    for c in &r.checks {
        let tag = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::SkippedSlow => "SKIP",
        };
        s.push_str(&format!("{} {:<32} {:>9.1} ms  {}\n", tag, c.id, c.elapsed_ms, c.anchor));
        if let Some(n) = &c.note {
            s.push_str(&format!("     note: {}\n", n));
        }
        if c.status == Status::Fail {
            if let Some(w) = &c.witness {
                s.push_str(&format!("     {}\n", render_witness(w)));
            }
        }
    }
    s
}

fn render_witness(w: &Value) -> String {
    match (w.get("lhs"), w.get("rhs")) {
        (Some(l), Some(r)) => format!("lhs: {}\n     rhs: {}", l.as_str().unwrap_or(&l.to_string()), r.as_str().unwrap_or(&r.to_string())),
        _ => w.to_string(),
    }
}
