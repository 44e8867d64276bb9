use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use liaison_core::ideal::DEFAULT_ORDER_BOUND;
use liaison_core::linkage::DEFAULT_R_MAX;
use liaison_core::report::exit_code;
use liaison_core::{
    build_tower, emit_reports, h1_upper_bound_check, koszul_h1_length, link_generator_check,
    link_square_check, order, pairing_matrix, parse_field, parse_poly, parse_ring_with_field,
    reduction_number, run_scenario_suite, socle_link, square_criterion_check, sym2_length,
    valabrega_valla_check, Error, Field, Format, GbLimits, Ideal, Length, LinkTower, Polynomial,
    Report, Ring,
};
use serde_json::{json, Value};

/// Iterated links J : m^k, reduction numbers and Koszul homology lengths over k[x]/Q.
#[derive(Parser)]
#[command(name = "liaison", version)]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Opts {
    /// Ring, e.g. "QQ[x,y]" or "QQ[x,y,z]/(y^2 - x*z, x^3 - z^2)"
    #[arg(long, global = true)]
    ring: Option<String>,
    /// Generators of I, comma separated
    #[arg(short = 'I', long, global = true)]
    ideal: Option<String>,
    /// Generators of the auxiliary ideal J (the parameter ideal of a tower)
    #[arg(short = 'J', long, global = true)]
    aux: Option<String>,
    /// Tower level
    #[arg(long, global = true)]
    k: Option<u32>,
    /// Declared s with J ⊆ m^s
    #[arg(long, global = true)]
    s: Option<u32>,
    #[arg(long = "r-max", global = true, default_value_t = DEFAULT_R_MAX)]
    r_max: u32,
    #[arg(long = "n-max", global = true)]
    n_max: Option<u32>,
    #[arg(long, global = true)]
    json: bool,
    /// Coefficient field (QQ, Fp, GF(p)); overrides the ring's tag
    #[arg(long, global = true, env = "LIAISON_FIELD")]
    field: Option<String>,
    #[arg(long = "max-pairs", global = true)]
    max_pairs: Option<usize>,
    #[arg(long = "max-degree", global = true)]
    max_degree: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Groebner basis of I + Q
    Gb,
    /// Normal form of a polynomial modulo I
    Nf { poly: String },
    /// I : J
    Colon,
    /// I ∩ J
    Intersect,
    /// λ(A/I)
    Length,
    /// I : m and the socle of A/I
    Socle,
    /// Minimal generators of an m-primary I
    Mingens,
    /// Largest q with f ∈ m^q
    Order {
        poly: String,
        #[arg(long, default_value_t = DEFAULT_ORDER_BOUND)]
        bound: u32,
    },
    /// Levels I_k = J : m^k of the tower over J
    Link,
    /// Reduction number of I with respect to J
    Rednum,
    /// λ(H_1(I)) by both routes; with --n, checks λ(H_1) ≤ n λ(A/I)
    H1 {
        #[arg(long)]
        n: Option<usize>,
    },
    /// λ(S_2(I/J)), λ(I^2/JI) and λ(δ(I))
    Sym2,
    /// Pairing matrix m^{k-1}/m^k × I_k/I_{k-1} -> k
    Pairing,
    /// m^n ∩ J = Σ m^(n - q_i) z_i for n ≤ n-max
    VvCheck,
    /// I ⊆ J:I and (J:I)J = (J:I)I against I^2 = JI
    #[command(name = "check-231")]
    Check231,
    /// I_k^2 = J I_k under the tower hypotheses
    #[command(name = "check-234")]
    Check234,
    /// Generator count and order bound for I_k = (J, J_k)
    #[command(name = "check-2310")]
    Check2310,
    /// Run the built-in instance table
    VerifyPaper,
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Lib(Error::ResourceLimit(_)) => 3,
            // a broken internal cross-check is a failed claim, not bad input
            Failure::Lib(Error::Internal(_)) => 1,
            Failure::Lib(_) => 2,
        }
    }
}

type Run<T> = Result<T, Failure>;

struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

fn field(opts: &Opts) -> Run<Option<Field>> {
    opts.field.as_deref().map(parse_field).transpose().map_err(Failure::from)
}

fn ring(opts: &Opts) -> Run<Ring> {
    let text = opts.ring.as_deref().ok_or_else(|| Failure::Usage("--ring is required".into()))?;
    let ring = parse_ring_with_field(text, field(opts)?)?;
    if opts.max_pairs.is_none() && opts.max_degree.is_none() {
        return Ok(ring);
    }
    let defaults = ring.limits();
    Ok(ring.with_limits(GbLimits {
        max_pairs: opts.max_pairs.unwrap_or(defaults.max_pairs),
        max_degree: opts.max_degree.unwrap_or(defaults.max_degree),
    }))
}

fn ideal_flag(ring: &Ring, text: Option<&str>, flag: &str) -> Run<Ideal> {
    let text = text.ok_or_else(|| Failure::Usage(format!("{flag} is required")))?;
    Ok(Ideal::parse(ring, text)?)
}

fn required<T: Copy>(value: Option<T>, flag: &str) -> Run<T> {
    value.ok_or_else(|| Failure::Usage(format!("{flag} is required")))
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn length_json(l: Length) -> Value {
    match l {
        Length::Finite(n) => json!(n),
        Length::Infinite => json!("INFINITE"),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json value serializes")
}

fn basis_output(ideal: &Ideal, json: bool) -> Run<String> {
    let basis = strings(ideal.groebner()?.polynomials());
    Ok(if json { pretty(&json!({ "basis": basis })) } else { basis.join("\n") })
}

fn tower(opts: &Opts, ring: &Ring) -> Run<LinkTower> {
    let j = ideal_flag(ring, opts.aux.as_deref(), "-J/--aux")?;
    let s = required(opts.s, "--s")?;
    let k_max = opts.k.unwrap_or(s);
    Ok(build_tower(&j, s, k_max)?)
}

/// Levels named by `--k`, or all of them.
fn levels(opts: &Opts, t: &LinkTower) -> Vec<u32> {
    match opts.k {
        Some(k) => vec![k],
        None => t.levels.iter().map(|l| l.k).collect(),
    }
}

fn reports(rs: Vec<Report>, json: bool) -> Output {
    let format = if json { Format::Json } else { Format::Table };
    let mut text = emit_reports(&rs, format);
    if format == Format::Table {
        text.truncate(text.trim_end().len());
    }
    Output {
        text,
        code: exit_code(&rs) as u8,
    }
}

fn run(cli: Cli) -> Run<Output> {
    let opts = &cli.opts;
    let json = opts.json;
    let text = match cli.command {
        Command::Gb => {
            let r = ring(opts)?;
            basis_output(&ideal_flag(&r, opts.ideal.as_deref(), "-I/--ideal")?, json)?
        }
        Command::Nf { poly } => {
            let r = ring(opts)?;
            let i = ideal_flag(&r, opts.ideal.as_deref(), "-I/--ideal")?;
            let nf = i.normal_form(&parse_poly(&poly, &r)?)?.to_string();
            if json { pretty(&json!({ "normal_form": nf })) } else { nf }
        }
        Command::Colon | Command::Intersect => {
            let r = ring(opts)?;
            let i = ideal_flag(&r, opts.ideal.as_deref(), "-I/--ideal")?;
            let j = ideal_flag(&r, opts.aux.as_deref(), "-J/--aux")?;
            let result = if matches!(cli.command, Command::Colon) { i.colon(&j)? } else { i.intersect(&j)? };
            basis_output(&result, json)?
        }
        Command::Length => {
            let r = ring(opts)?;
            let l = ideal_flag(&r, opts.ideal.as_deref(), "-I/--ideal")?.colength()?;
            if json { pretty(&json!({ "length": length_json(l) })) } else { l.to_string() }
        }
        Command::Socle => {
            let r = ring(opts)?;
            let sl = socle_link(&ideal_flag(&r, opts.ideal.as_deref(), "-I/--ideal")?)?;
            let link = strings(sl.link.groebner()?.polynomials());
            let socle = strings(&sl.socle);
            if json {
                pretty(&json!({ "link": link, "socle": socle, "type": sl.cm_type() }))
            } else {
                format!("I : m = ({})\nsocle: {}\ntype = {}", link.join(", "), socle.join(", "), sl.cm_type())
            }
        }
        Command::Mingens => {
            let r = ring(opts)?;
            let g = ideal_flag(&r, opts.ideal.as_deref(), "-I/--ideal")?.minimal_generators()?;
            let gens = strings(&g.generators);
            if json {
                pretty(&json!({ "generators": gens, "mu": g.count() }))
            } else {
                format!("{}\nμ = {}", gens.join("\n"), g.count())
            }
        }
        Command::Order { poly, bound } => {
            let r = ring(opts)?;
            let q = order(&parse_poly(&poly, &r)?, bound)?;
            if json { pretty(&json!({ "order": q })) } else { q.to_string() }
        }
        Command::Link => {
            let r = ring(opts)?;
            let t = tower(opts, &r)?;
            link_output(&t, json)?
        }
        Command::Rednum => {
            let r = ring(opts)?;
            let i = ideal_flag(&r, opts.ideal.as_deref(), "-I/--ideal")?;
            let j = ideal_flag(&r, opts.aux.as_deref(), "-J/--aux")?;
            let rn = reduction_number(&i, &j, opts.r_max)?;
            if json {
                pretty(&json!({ "reduction_number": rn.value(), "r_max": opts.r_max }))
            } else {
                format!("r = {rn}")
            }
        }
        Command::H1 { n } => {
            let r = ring(opts)?;
            let i = ideal_flag(&r, opts.ideal.as_deref(), "-I/--ideal")?;
            let j = ideal_flag(&r, opts.aux.as_deref(), "-J/--aux")?;
            let rec = koszul_h1_length(&i, &j)?;
            let bound = n.map(|n| h1_upper_bound_check(&i, &j, n)).transpose()?;
            if json {
                pretty(&json!({ "h1": rec, "bound": bound }))
            } else {
                let mut s = format!("λ(H_1) = {}", rec.length());
                if let Some(b) = rec.route_b {
                    let _ = write!(s, "\nover A/J: {} - {} = {b}", rec.z1_bar.unwrap_or(0), rec.b1_bar.unwrap_or(0));
                }
                if let Some(b) = bound {
                    let (h1, cap, verdict) = match b {
                        liaison_core::BoundOutcome::Satisfied { h1, bound } => (h1, bound, "SATISFIED"),
                        liaison_core::BoundOutcome::Violated { h1, bound } => (h1, bound, "VIOLATED"),
                    };
                    let _ = write!(s, "\nλ(H_1) = {h1} against n λ(A/I) = {cap}: {verdict}");
                }
                s
            }
        }
        Command::Sym2 => {
            let r = ring(opts)?;
            let i = ideal_flag(&r, opts.ideal.as_deref(), "-I/--ideal")?;
            let j = ideal_flag(&r, opts.aux.as_deref(), "-J/--aux")?;
            let rec = sym2_length(&i, &j)?;
            if json {
                pretty(&json!(rec))
            } else {
                format!(
                    "n = {}\nρ = {}\nλ(I^2/JI) = {}\nλ(δ) = {}\nC(n+1, 2) = {}",
                    rec.n, rec.rho, rec.square_excess, rec.delta, rec.conjectured
                )
            }
        }
        Command::Pairing => {
            let r = ring(opts)?;
            let t = tower(opts, &r)?;
            let k = required(opts.k, "--k")?;
            let p = pairing_matrix(&t, k)?;
            if json {
                pretty(&json!({
                    "k": k,
                    "rows": strings(&p.rows),
                    "columns": strings(&p.columns),
                    "socle": p.socle.to_string(),
                    "matrix": p.entries.iter().map(|row| row.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    "determinant": p.determinant.to_string(),
                }))
            } else {
                format!(
                    "socle: {}\nrows: {}\ncolumns: {}\nmatrix = {}\ndet = {}",
                    p.socle,
                    strings(&p.rows).join(", "),
                    strings(&p.columns).join(", "),
                    p.entries_string(),
                    p.determinant
                )
            }
        }
        Command::VvCheck => {
            let r = ring(opts)?;
            let j = ideal_flag(&r, opts.aux.as_deref(), "-J/--aux")?;
            let s = required(opts.s, "--s")?;
            return Ok(reports(vec![valabrega_valla_check(&j, s, opts.n_max)?], json));
        }
        Command::Check231 => {
            let r = ring(opts)?;
            let i = ideal_flag(&r, opts.ideal.as_deref(), "-I/--ideal")?;
            let j = ideal_flag(&r, opts.aux.as_deref(), "-J/--aux")?;
            return Ok(reports(vec![square_criterion_check(&i, &j)?], json));
        }
        Command::Check234 | Command::Check2310 => {
            let r = ring(opts)?;
            let t = tower(opts, &r)?;
            let check = if matches!(cli.command, Command::Check234) { link_square_check } else { link_generator_check };
            let rs = levels(opts, &t).into_iter().map(|k| check(&t, k)).collect::<Result<Vec<_>, _>>()?;
            return Ok(reports(rs, json));
        }
        Command::VerifyPaper => {
            let field = field(opts)?.unwrap_or(Field::Rational);
            return Ok(reports(run_scenario_suite(field)?, json));
        }
    };
    Ok(Output::ok(text))
}

fn link_output(t: &LinkTower, json: bool) -> Run<String> {
    if json {
        let levels: Vec<Value> = t
            .levels
            .iter()
            .map(|l| {
                Ok(json!({
                    "k": l.k,
                    "ideal": strings(l.ideal.groebner()?.polynomials()),
                    "n_k": l.n_k,
                    "colength": l.colength,
                    "link_colength": l.link_colength,
                    "max_power_colength": l.max_power_colength,
                    "step_length": l.step_length,
                    "mu": l.mu,
                    "parameters_minimal": l.parameters_minimal,
                    "link_generators": strings(&l.link_generators),
                    "descends": l.descends,
                    "max_power_colon": l.max_power_colon,
                }))
            })
            .collect::<Result<_, Error>>()?;
        return Ok(pretty(&json!({
            "J": strings(&t.parameters),
            "orders": t.orders,
            "s": t.s,
            "colength": t.j_colength,
            "type": t.cm_type(),
            "levels": levels,
        })));
    }
    let mut s = format!(
        "J = ({}), orders {:?}, s = {}, λ(A/J) = {}, type {}",
        strings(&t.parameters).join(", "),
        t.orders,
        t.s,
        t.j_colength,
        t.cm_type()
    );
    for l in &t.levels {
        let _ = write!(
            s,
            "\nk = {}: I_k = ({})\n  n_k = {}, λ(A/I_k) = {}, λ(I_k/J) = {}, λ(A/m^k) = {}, μ = {}, z minimal: {}, J_k = {}",
            l.k,
            strings(l.ideal.groebner()?.polynomials()).join(", "),
            l.n_k,
            l.colength,
            l.link_colength,
            l.max_power_colength,
            l.mu,
            l.parameters_minimal,
            strings(&l.link_generators).join(", ")
        );
    }
    Ok(s)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            println!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(f) => {
            match &f {
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Lib(e) => eprintln!("error: {e}"),
            }
            ExitCode::from(f.code())
        }
    }
}
