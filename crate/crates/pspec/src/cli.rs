//! Command-line surface: load a structure file, dispatch one analysis verb,
//! render a deterministic report.
//!
//! Exit codes: 0 success; 1 a yes/no verb answered "no" and `--strict-exit`
//! was passed; 2 input or domain error. Domain errors never panic; they are
//! rendered as diagnostics on stderr.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bracket::{plucker_minors_check, jacobian_rank, PoissonStructure};
use crate::error::Error;
use crate::groebner::{IdealHandle, MonomialOrder};
use crate::ideals::{
    analyze_primitive_candidate, classify_point, gamma_of, is_poisson_ideal, is_residually_null,
    pencil_ideal, smoothness_check, ClassificationReport, PencilSpec,
};
use crate::parse::{load_structure_file, parse_expr, print_canonical, ExprSource};
use crate::poly::{Coeff, Poly};
use crate::report::{yes_no, Format, Report};
use crate::torus::{h_group_check, poisson_auto_check, weight_report, TorusElement};
use crate::Result;

#[derive(Parser, Debug)]
#[command(name = "pspec", version, about = "Poisson structures on polynomial rings: brackets, ideals, and torus actions")]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,

    /// Exit with code 1 when a yes/no verb answers "no"
    #[arg(long, global = true)]
    pub strict_exit: bool,

    /// Monomial order for ideal computations
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Grevlex)]
    pub order: OrderArg,

    /// Run commands from a file, one command line per line
    #[arg(long, value_name = "FILE")]
    pub batch: Option<PathBuf>,

    #[command(subcommand)]
    pub verb: Option<Verb>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Structured,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Structured => Format::Structured,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Lex,
    Grlex,
    Grevlex,
}

impl From<OrderArg> for MonomialOrder {
    fn from(o: OrderArg) -> MonomialOrder {
        match o {
            OrderArg::Lex => MonomialOrder::Lex,
            OrderArg::Grlex => MonomialOrder::GrLex,
            OrderArg::Grevlex => MonomialOrder::GrevLex,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Print all generator brackets {x_i, x_j}
    BracketTable { file: PathBuf },
    /// Bracket of two polynomial expressions
    Bracket { file: PathBuf, f: String, g: String },
    /// Jacobi sum {f,{g,h}} + {g,{h,f}} + {h,{f,g}}
    Jacobiator { file: PathBuf, f: String, g: String, h: String },
    /// Three-term Plücker combinations of the structure matrix minors
    Plucker {
        file: PathBuf,
        /// Four 1-based column indices i,j,k,l (default: all quadruples)
        #[arg(long)]
        indices: Option<String>,
    },
    /// Jacobian rank of the rational parameters s_i/t_i
    Depend { file: PathBuf },
    /// Is the given ideal closed under bracketing?
    IsPoissonIdeal {
        file: PathBuf,
        #[arg(long)]
        ideal: String,
    },
    /// Does the induced bracket vanish on the quotient?
    IsResiduallyNull {
        file: PathBuf,
        #[arg(long)]
        ideal: String,
    },
    /// Membership pattern of the (s_i, t_i) in an ideal
    Gamma {
        file: PathBuf,
        #[arg(long)]
        ideal: String,
    },
    /// The ideal generated by lambda_i s_i - mu_i t_i
    Pencil {
        file: PathBuf,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
    /// Is the maximal ideal at a point Poisson?
    ClassifyPoint {
        file: PathBuf,
        #[arg(long)]
        point: String,
    },
    /// Checkable Poisson-primitive conditions for a pencil ideal
    Primitive {
        file: PathBuf,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        /// Generators of a candidate minimal prime over the pencil ideal
        #[arg(long)]
        candidate: Option<String>,
    },
    /// Is the fiber s_i = mu_i nonsingular? (requires all t_i = 1)
    Smooth {
        file: PathBuf,
        #[arg(long)]
        mu: String,
    },
    /// Semi-invariance weights and the automorphism criterion for a torus element
    Torus {
        file: PathBuf,
        #[arg(long)]
        h: String,
    },
    /// Does the torus element scale every structure minor E_ij by h_i h_j?
    HCheck {
        file: PathBuf,
        #[arg(long)]
        h: String,
    },
}

// ---------------------------------------------------------------------------
// Argument parsing helpers
// ---------------------------------------------------------------------------

fn parse_coeff_list(text: &str, what: &str) -> Result<Vec<Coeff>> {
    text.split(',')
        .map(|part| {
            let part = part.trim();
            parse_rational(part).ok_or_else(|| Error::Input(format!("bad {what} entry '{part}'")))
        })
        .collect()
}

/// Integers and a/b fractions with a nonzero denominator.
fn parse_rational(text: &str) -> Option<Coeff> {
    use num_bigint::BigInt;
    match text.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).ok()?;
            let d = BigInt::from_str(d.trim()).ok()?;
            if num_traits::Zero::is_zero(&d) {
                return None;
            }
            Some(Coeff::new(n, d))
        }
        None => Some(Coeff::from_integer(BigInt::from_str(text).ok()?)),
    }
}

fn parse_expr_list(text: &str, s: &PoissonStructure) -> Result<Vec<Poly>> {
    text.split(',')
        .map(|part| parse_expr(ExprSource { text: part.trim(), var_names: s.var_names() }))
        .collect()
}

fn parse_one_expr(text: &str, s: &PoissonStructure) -> Result<Poly> {
    parse_expr(ExprSource { text, var_names: s.var_names() })
}

fn ideal_from_arg(text: &str, s: &PoissonStructure, order: &MonomialOrder) -> Result<IdealHandle> {
    Ok(IdealHandle::new(s.nvars(), parse_expr_list(text, s)?, order.clone()))
}

fn torus_from_arg(text: &str, s: &PoissonStructure) -> Result<TorusElement> {
    let comps = parse_coeff_list(text, "torus component")?;
    if comps.len() != s.nvars() {
        return Err(Error::Input(format!(
            "expected {} torus components, got {}",
            s.nvars(),
            comps.len()
        )));
    }
    TorusElement::new(comps)
}

fn fmt_list(polys: &[Poly], s: &PoissonStructure) -> String {
    let items: Vec<String> = polys.iter().map(|p| print_canonical(p, s.var_names())).collect();
    format!("{{{}}}", items.join(", "))
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

pub fn dispatch(verb: &Verb, order: &MonomialOrder) -> Result<Report> {
    match verb {
        Verb::BracketTable { file } => {
            let s = load_structure_file(file)?;
            let mut r = Report::new();
            r.kv("verb", "bracket-table").kv("nvars", s.nvars());
            let names = s.var_names();
            for (i, j, entry) in s.table_entries() {
                let value = print_canonical(entry, names);
                r.line(format!("{{{},{}}} = {}", names[i], names[j], value));
                r.kv(format!("table.{}.{}", names[i], names[j]), value);
            }
            Ok(r)
        }
        Verb::Bracket { file, f, g } => {
            let s = load_structure_file(file)?;
            let fp = parse_one_expr(f, &s)?;
            let gp = parse_one_expr(g, &s)?;
            let b = s.bracket(&fp, &gp);
            let names = s.var_names();
            let mut r = Report::new();
            let value = print_canonical(&b, names);
            r.line(format!(
                "{{{}, {}}} = {}",
                print_canonical(&fp, names),
                print_canonical(&gp, names),
                value
            ));
            r.kv("verb", "bracket").kv("bracket", value);
            Ok(r)
        }
        Verb::Jacobiator { file, f, g, h } => {
            let s = load_structure_file(file)?;
            let fp = parse_one_expr(f, &s)?;
            let gp = parse_one_expr(g, &s)?;
            let hp = parse_one_expr(h, &s)?;
            let jac = s.jacobiator(&fp, &gp, &hp);
            let names = s.var_names();
            let value = print_canonical(&jac, names);
            let mut r = Report::new();
            r.line(format!(
                "jacobiator({}, {}, {}) = {}",
                print_canonical(&fp, names),
                print_canonical(&gp, names),
                print_canonical(&hp, names),
                value
            ));
            r.kv("verb", "jacobiator").kv("jacobiator", value).kv("zero", jac.is_zero());
            Ok(r)
        }
        Verb::Plucker { file, indices } => {
            let s = load_structure_file(file)?;
            let e = s.e_matrix();
            let quads: Vec<[usize; 4]> = match indices {
                Some(text) => {
                    let mut idx = Vec::new();
                    for part in text.split(',') {
                        let part = part.trim();
                        let v = part
                            .parse::<usize>()
                            .ok()
                            .filter(|&v| v >= 1 && v <= s.nvars())
                            .ok_or_else(|| Error::Input(format!("bad column index '{part}'")))?;
                        idx.push(v - 1);
                    }
                    if idx.len() != 4 || !idx.windows(2).all(|w| w[0] < w[1]) {
                        return Err(Error::Input("need four strictly increasing indices".into()));
                    }
                    vec![[idx[0], idx[1], idx[2], idx[3]]]
                }
                None => {
                    let n = s.nvars();
                    let mut all = Vec::new();
                    for i in 0..n {
                        for j in i + 1..n {
                            for k in j + 1..n {
                                for l in k + 1..n {
                                    all.push([i, j, k, l]);
                                }
                            }
                        }
                    }
                    all
                }
            };
            let mut r = Report::new();
            r.kv("verb", "plucker");
            if quads.is_empty() {
                r.line("no column quadruples (n < 4)");
            }
            for [i, j, k, l] in quads {
                let value = plucker_minors_check(e, i, j, k, l);
                let text = print_canonical(&value, s.var_names());
                r.line(format!("plucker({},{},{},{})={}", i + 1, j + 1, k + 1, l + 1, text));
                r.kv(format!("plucker.{}.{}.{}.{}", i + 1, j + 1, k + 1, l + 1), text);
            }
            Ok(r)
        }
        Verb::Depend { file } => {
            let s = load_structure_file(file)?;
            let params = s.rational_parameters();
            let rank = jacobian_rank(&params);
            let count = params.len();
            let dependent = rank < count;
            let mut r = Report::new();
            let word = if dependent { "algebraically dependent" } else { "algebraically independent" };
            r.line(format!("jacobian rank = {rank} of {count}; {word}"));
            r.kv("verb", "depend").kv("rank", rank).kv("count", count).kv("dependent", dependent);
            r.verdict(dependent);
            Ok(r)
        }
        Verb::IsPoissonIdeal { file, ideal } => {
            let s = load_structure_file(file)?;
            let h = ideal_from_arg(ideal, &s, order)?;
            let ans = is_poisson_ideal(&s, &h);
            let mut r = Report::new();
            r.line(format!("POISSON IDEAL: {}", yes_no(ans)));
            r.kv("verb", "is-poisson-ideal").kv("poisson", ans);
            r.verdict(ans);
            Ok(r)
        }
        Verb::IsResiduallyNull { file, ideal } => {
            let s = load_structure_file(file)?;
            let h = ideal_from_arg(ideal, &s, order)?;
            let ans = is_residually_null(&s, &h);
            let mut r = Report::new();
            r.line(format!("RESIDUALLY NULL: {}", yes_no(ans)));
            r.kv("verb", "is-residually-null").kv("residually_null", ans);
            r.verdict(ans);
            Ok(r)
        }
        Verb::Gamma { file, ideal } => {
            let s = load_structure_file(file)?;
            let h = ideal_from_arg(ideal, &s, order)?;
            let data = gamma_of(&s, &h)?;
            let entries: Vec<String> =
                data.gamma.entries().iter().map(|(g, d)| format!("({g},{d})")).collect();
            let dense = data.gamma.is_dense();
            let mut line = format!(
                "gamma=({}) {}",
                entries.join(","),
                if dense { "dense" } else { "not dense" }
            );
            if let Some(v) = &data.v_gamma {
                let items: Vec<String> =
                    v.iter().map(|f| f.to_canonical_string(s.var_names())).collect();
                line.push_str(&format!("; V={{{}}}", items.join(", ")));
            }
            let mut r = Report::new();
            r.line(line);
            r.kv("verb", "gamma").kv("gamma", format!("({})", entries.join(","))).kv("dense", dense);
            for (k, p) in data.s_gamma.iter().enumerate() {
                r.kv(format!("s_gamma.{}", k + 1), print_canonical(p, s.var_names()));
            }
            if let Some(v) = &data.v_gamma {
                for (k, f) in v.iter().enumerate() {
                    r.kv(format!("v_gamma.{}", k + 1), f.to_canonical_string(s.var_names()));
                }
            }
            Ok(r)
        }
        Verb::Pencil { file, lambda, mu } => {
            let s = load_structure_file(file)?;
            let spec = pencil_spec_from_args(&s, lambda, mu)?;
            let handle = pencil_ideal(&s, &spec);
            let poisson = is_poisson_ideal(&s, &handle);
            let mut r = Report::new();
            r.line(format!("pencil ideal = {}", fmt_list(handle.gens(), &s)));
            r.line(format!("POISSON IDEAL: {}", yes_no(poisson)));
            r.kv("verb", "pencil");
            for (k, g) in handle.gens().iter().enumerate() {
                r.kv(format!("generator.{}", k + 1), print_canonical(g, s.var_names()));
            }
            r.kv("poisson", poisson);
            r.verdict(poisson);
            Ok(r)
        }
        Verb::ClassifyPoint { file, point } => {
            let s = load_structure_file(file)?;
            let pt = parse_coeff_list(point, "point coordinate")?;
            if pt.len() != s.nvars() {
                return Err(Error::Input(format!(
                    "expected {} coordinates, got {}",
                    s.nvars(),
                    pt.len()
                )));
            }
            let rep = classify_point(&s, &pt);
            Ok(render_classification(&rep))
        }
        Verb::Primitive { file, lambda, mu, candidate } => {
            let s = load_structure_file(file)?;
            let spec = pencil_spec_from_args(&s, lambda, mu)?;
            let cand = match candidate {
                Some(text) => Some(ideal_from_arg(text, &s, order)?),
                None => None,
            };
            let rep = analyze_primitive_candidate(&s, &spec, cand.as_ref())?;
            let mut r = Report::new();
            r.line(format!("pencil ideal = {}", fmt_list(&rep.pencil_gens, &s)));
            r.line("proper: yes");
            r.line(format!("poisson: {}", yes_no(rep.poisson)));
            r.line(format!("residually null: {}", yes_no(rep.residually_null)));
            r.kv("verb", "primitive").kv("proper", true).kv("poisson", rep.poisson).kv(
                "residually_null",
                rep.residually_null,
            );
            let mut ok = rep.poisson && !rep.residually_null;
            if let Some(c) = &rep.candidate {
                r.line("candidate contains pencil ideal: yes");
                r.line(format!("candidate poisson: {}", yes_no(c.poisson)));
                r.line(format!("candidate residually null: {}", yes_no(c.residually_null)));
                r.kv("candidate.contains_pencil", true)
                    .kv("candidate.poisson", c.poisson)
                    .kv("candidate.residually_null", c.residually_null);
                ok = ok && c.poisson;
            }
            r.line("primality: not checked");
            r.line("minimality: not checked");
            r.kv("primality", "not checked").kv("minimality", "not checked");
            if rep.ruled_out() {
                r.line("verdict: residually null, not Poisson primitive");
                r.kv("verdict", "not Poisson primitive (residually null)");
            } else if ok {
                r.line("verdict: all checkable conditions pass");
                r.kv("verdict", "checkable conditions pass");
            } else {
                r.line("verdict: some checkable condition fails");
                r.kv("verdict", "checkable condition fails");
            }
            r.verdict(ok && !rep.ruled_out());
            Ok(r)
        }
        Verb::Smooth { file, mu } => {
            let s = load_structure_file(file)?;
            let mus = parse_coeff_list(mu, "mu")?;
            if mus.len() != s.nvars() - 2 {
                return Err(Error::Input(format!(
                    "expected {} mu values, got {}",
                    s.nvars() - 2,
                    mus.len()
                )));
            }
            let smooth = smoothness_check(&s, &mus)?;
            let mut r = Report::new();
            r.line(format!("SMOOTH: {}", yes_no(smooth)));
            r.kv("verb", "smooth").kv("smooth", smooth);
            r.verdict(smooth);
            Ok(r)
        }
        Verb::Torus { file, h } => {
            let s = load_structure_file(file)?;
            let t = torus_from_arg(h, &s)?;
            let w = weight_report(&s, &t);
            let auto = poisson_auto_check(&s, &t);
            let mut r = Report::new();
            r.line(format!("semi-invariant: {}", yes_no(w.is_in_hprime)));
            r.kv("verb", "torus").kv("semi_invariant", w.is_in_hprime);
            if w.is_in_hprime {
                let sigmas: Vec<String> =
                    w.sigma.iter().map(|c| c.as_ref().unwrap().to_string()).collect();
                let taus: Vec<String> =
                    w.tau.iter().map(|c| c.as_ref().unwrap().to_string()).collect();
                r.line(format!("sigma = ({})", sigmas.join(", ")));
                r.line(format!("tau = ({})", taus.join(", ")));
                r.line(format!(
                    "rho={} product={} criterion={}",
                    w.rho.as_ref().unwrap(),
                    w.product,
                    w.rho_criterion.unwrap()
                ));
                for (k, v) in sigmas.iter().enumerate() {
                    r.kv(format!("sigma.{}", k + 1), v);
                }
                for (k, v) in taus.iter().enumerate() {
                    r.kv(format!("tau.{}", k + 1), v);
                }
                r.kv("rho", w.rho.as_ref().unwrap()).kv("product", &w.product).kv(
                    "criterion",
                    w.rho_criterion.unwrap(),
                );
            } else {
                for (k, v) in w.sigma.iter().enumerate() {
                    if v.is_none() {
                        r.line(format!("s{} is not semi-invariant", k + 1));
                    }
                }
                for (k, v) in w.tau.iter().enumerate() {
                    if v.is_none() {
                        r.line(format!("t{} is not semi-invariant", k + 1));
                    }
                }
                r.kv("product", &w.product);
            }
            r.line(format!("poisson automorphism: {}", yes_no(auto)));
            r.kv("poisson_automorphism", auto);
            r.verdict(auto);
            Ok(r)
        }
        Verb::HCheck { file, h } => {
            let s = load_structure_file(file)?;
            let t = torus_from_arg(h, &s)?;
            let member = h_group_check(&s, &t);
            let mut r = Report::new();
            r.line(format!("H MEMBER: {}", yes_no(member)));
            r.kv("verb", "h-check").kv("member", member);
            r.verdict(member);
            Ok(r)
        }
    }
}

fn pencil_spec_from_args(s: &PoissonStructure, lambda: &str, mu: &str) -> Result<PencilSpec> {
    let lambdas = parse_coeff_list(lambda, "lambda")?;
    let mus = parse_coeff_list(mu, "mu")?;
    let want = s.nvars() - 2;
    if lambdas.len() != want || mus.len() != want {
        return Err(Error::Input(format!(
            "expected {want} lambda and mu values, got {} and {}",
            lambdas.len(),
            mus.len()
        )));
    }
    PencilSpec::new(lambdas, mus)
}

fn render_classification(rep: &ClassificationReport) -> Report {
    let direct = if rep.direct_verdict {
        "direct check: all brackets vanish"
    } else {
        "direct check: some bracket is nonzero at the point"
    };
    let mut r = Report::new();
    let headline = if let Some(i) = rep.condition1 {
        format!("POISSON via condition (1), witness i={}; {direct}", i + 1)
    } else if rep.condition2 {
        format!("POISSON via condition (2), parameters algebraically dependent; {direct}")
    } else if rep.condition3 == Some(true) {
        format!(
            "POISSON via condition (3), singular point (gradient rank {}); {direct}",
            rep.gradient_rank.unwrap()
        )
    } else {
        format!(
            "NOT POISSON: no condition holds (gradient rank {}); {direct}",
            rep.gradient_rank.unwrap()
        )
    };
    r.line(headline);
    r.kv("verb", "classify-point");
    match rep.condition1 {
        Some(i) => r.kv("condition1.witness", i + 1),
        None => r.kv("condition1.witness", "none"),
    };
    r.kv("condition2", rep.condition2);
    match rep.condition3 {
        Some(b) => r.kv("condition3", b),
        None => r.kv("condition3", "not evaluated"),
    };
    if let Some(rank) = rep.gradient_rank {
        r.kv("gradient_rank", rank);
    }
    r.kv("direct", rep.direct_verdict).kv("poisson", rep.final_verdict);
    r.verdict(rep.final_verdict);
    r
}

// ---------------------------------------------------------------------------
// Top-level runner
// ---------------------------------------------------------------------------

/// Split a batch line into shell-like tokens; double quotes group words.
fn split_command_line(line: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut quoted = false;
    let mut seen = false;
    for ch in line.chars() {
        match ch {
            '"' => {
                quoted = !quoted;
                seen = true;
            }
            c if c.is_whitespace() && !quoted => {
                if seen || !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                    seen = false;
                }
            }
            c => cur.push(c),
        }
    }
    if seen || !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn run_one(verb: &Verb, order: &MonomialOrder, format: Format, strict: bool) -> i32 {
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| dispatch(verb, order)));
    let result = match outcome {
        Ok(r) => r,
        Err(payload) => {
            if let Some(d) = payload.downcast_ref::<crate::poly::DegreeLimitExceeded>() {
                eprintln!(
                    "error: intermediate degree {} exceeds the limit {} (set PSPEC_MAX_DEGREE to raise it)",
                    d.degree, d.limit
                );
                return 2;
            }
            std::panic::resume_unwind(payload);
        }
    };
    match result {
        Ok(report) => {
            print!("{}", report.render(format));
            if strict && report.verdict == Some(false) {
                1
            } else {
                0
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

/// Entry point used by the `pspec` binary; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    if let Ok(value) = std::env::var("PSPEC_MAX_DEGREE") {
        match value.parse::<u32>() {
            Ok(limit) => crate::poly::set_degree_limit(limit),
            Err(_) => {
                eprintln!("error: PSPEC_MAX_DEGREE must be a non-negative integer, got '{value}'");
                return 2;
            }
        }
    }
    let order: MonomialOrder = cli.order.into();
    let format: Format = cli.format.into();
    match (&cli.batch, &cli.verb) {
        (Some(path), None) => {
            let text = match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: cannot read batch file {}: {e}", path.display());
                    return 2;
                }
            };
            let mut worst = 0;
            for raw in text.lines() {
                let line = raw.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let mut args = vec!["pspec".to_string()];
                args.extend(split_command_line(line));
                println!("$ {line}");
                let code = match Cli::try_parse_from(&args) {
                    Ok(sub) => {
                        if sub.batch.is_some() {
                            eprintln!("error: nested --batch is not allowed");
                            2
                        } else if let Some(verb) = &sub.verb {
                            run_one(
                                verb,
                                &sub.order.into(),
                                sub.format.into(),
                                sub.strict_exit || cli.strict_exit,
                            )
                        } else {
                            eprintln!("error: batch line has no command");
                            2
                        }
                    }
                    Err(e) => {
                        eprintln!("error: {e}");
                        2
                    }
                };
                worst = worst.max(code);
            }
            worst
        }
        (None, Some(verb)) => run_one(verb, &order, format, cli.strict_exit),
        (Some(_), Some(_)) => {
            eprintln!("error: --batch and a command are mutually exclusive");
            2
        }
        (None, None) => {
            eprintln!("error: expected a command or --batch; try --help");
            2
        }
    }
}
