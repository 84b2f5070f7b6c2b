//! Argument parsing and dispatch. Output is buffered and only returned
//! whole, so an error never leaves partial results on stdout.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use lexplus_core::lpp::clements_lindstrom_windowed;
use lexplus_core::scan::ScanConfig;
use lexplus_core::{
    clements_lindstrom, complex_to_fvector, duality_table, francisco_ideal, francisco_link, growth,
    kk_violation, link, macaulay_rep, mu_bound_check, mu_in_quotient, mu_quotient_bound_check,
    realize_fvector, realize_hf, sigma, stabilize_spp, stanley_reisner, CBParameters,
    DegreeSequence, Error, FVector, GradedPiece, MonomialIdeal, SimplicialComplex,
};
use serde_json::{json, Value};

use crate::input;
use crate::scan::{parallel_scan, resolve_budget};

/// Version of every JSON payload.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "lexplus",
    version,
    about = "Lex-plus-powers ideals, Macaulay growth bounds, linkage and face vectors"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Degrees of the pure powers, e.g. 3,3,4.
    #[arg(long, global = true)]
    degs: Option<String>,
    /// Number of variables (defaults to the number of degrees, or the
    /// largest variable in the input).
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Degree bound for non-Artinian inputs and the scan's degree range.
    #[arg(long, global = true)]
    dmax: Option<u32>,
    /// Largest degree of a generator outside the pure powers in scans.
    #[arg(long, global = true)]
    maxgen: Option<u32>,
    /// Scan state budget (overrides LEXPLUS_BUDGET).
    #[arg(long, global = true)]
    budget: Option<u128>,
    /// Read the ideal from a file instead of the command line.
    #[arg(long, global = true)]
    file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Largest possible H(d+1) when H(d) = k.
    Bound { k: u64, d: u32 },
    /// Macaulay representation of k in base d.
    Rep { k: u64, d: u32 },
    /// Hilbert function of A/I.
    Hf { ideal: Option<String> },
    /// The lpp ideal with the Hilbert function of I.
    Lpp { ideal: Option<String> },
    /// Clements-Lindstrom construction with its certificate.
    Cl { ideal: Option<String> },
    /// The segment with the dimension of a graded piece.
    Sigma { piece: Option<String> },
    /// A strongly-stable-plus-powers ideal with the Hilbert function of I.
    Stabilize { ideal: Option<String> },
    /// The link (a : I).
    Link {
        ideal: Option<String>,
        /// Also print the duality table.
        #[arg(long)]
        table: bool,
    },
    /// Extremal ideal for a form of degree D and its link.
    Francisco { degree: u32 },
    /// Multiplicity bound for a form of degree D.
    CbBound { degree: u32 },
    /// Exhaustive check over all ideals containing the pure powers.
    EghScan {
        /// Keep one ideal per variable permutation orbit.
        #[arg(long)]
        symmetry: bool,
    },
    /// Face vectors of simplicial complexes.
    Fvector {
        #[command(subcommand)]
        action: FvectorCommand,
    },
    /// Minimal generator counts against a1 * a2.
    MuCheck { ideal: Option<String> },
}

#[derive(Subcommand, Debug)]
enum FvectorCommand {
    /// Kruskal-Katona test.
    Check { entries: Vec<u64> },
    /// A complex with the given face vector.
    Build { entries: Vec<u64> },
    /// Face vector of the complex listed in a facet file.
    Of { path: PathBuf },
}

/// Exit status with the text for both streams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(String),
    /// A negative answer: the result goes to stdout with exit status 1.
    Negative(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::InvalidDegreeSequence { .. } => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Step = Result<String, Failure>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(out) => Outcome {
            code: 0,
            stdout: out,
            stderr: String::new(),
        },
        Err(Failure::Negative(out)) => Outcome {
            code: 1,
            stdout: out,
            stderr: String::new(),
        },
        Err(Failure::Domain(msg)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Usage(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("usage error: {msg}\n"),
        },
    }
}

fn payload(mut v: Value) -> String {
    v.as_object_mut()
        .expect("object payload")
        .insert("version".into(), json!(SCHEMA_VERSION));
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn joined<T: ToString>(values: &[T]) -> String {
    values
        .iter()
        .map(T::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn generators(i: &MonomialIdeal) -> Value {
    json!(i
        .generators()
        .iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>())
}

impl Cli {
    fn degrees(&self) -> Result<Vec<u32>, Failure> {
        match &self.degs {
            Some(t) => input::parse_degrees(t).map_err(Failure::Usage),
            None => Ok(Vec::new()),
        }
    }

    /// Sequence for commands without an ideal argument.
    fn sequence(&self) -> Result<DegreeSequence, Failure> {
        let degrees = self.degrees()?;
        let n = match (self.n, degrees.len()) {
            (Some(n), _) => n,
            (None, 0) => return Err(Failure::Usage("give --degs or --n".into())),
            (None, r) => r,
        };
        input::degree_sequence(&degrees, n).map_err(Failure::Usage)
    }

    fn ideal_text(&self, arg: &Option<String>) -> Result<String, Failure> {
        match (arg, &self.file) {
            (Some(_), Some(_)) => Err(Failure::Usage(
                "give the ideal inline or with --file, not both".into(),
            )),
            (Some(t), None) => Ok(t.clone()),
            (None, Some(path)) => std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display()))),
            (None, None) => Err(Failure::Usage("missing ideal (inline or --file)".into())),
        }
    }

    /// The ideal and the sequence in a common number of variables.
    fn ideal_and_sequence(
        &self,
        arg: &Option<String>,
    ) -> Result<(MonomialIdeal, DegreeSequence), Failure> {
        let degrees = self.degrees()?;
        let text = self.ideal_text(arg)?;
        let ideal = input::ideal(&text, self.n, degrees.len())?;
        let seq = input::degree_sequence(&degrees, ideal.nvars()).map_err(Failure::Usage)?;
        Ok((ideal, seq))
    }

    fn require_powers(&self, seq: &DegreeSequence) -> Result<(), Failure> {
        if seq.is_empty() {
            return Err(Failure::Usage("this command needs --degs".into()));
        }
        Ok(())
    }

    fn window(&self, ideal: &MonomialIdeal, seq: &DegreeSequence) -> u32 {
        self.dmax
            .unwrap_or_else(|| ideal.max_generator_degree() + seq.socle_degree() + 1)
    }
}

fn dispatch(cli: &Cli) -> Step {
    match &cli.command {
        Command::Bound { k, d } => bound(cli, *k, *d),
        Command::Rep { k, d } => rep(cli, *k, *d),
        Command::Hf { ideal } => hf(cli, ideal),
        Command::Lpp { ideal } => lpp(cli, ideal),
        Command::Cl { ideal } => cl(cli, ideal),
        Command::Sigma { piece } => segment(cli, piece),
        Command::Stabilize { ideal } => stabilize(cli, ideal),
        Command::Link { ideal, table } => linked(cli, ideal, *table),
        Command::Francisco { degree } => francisco(cli, *degree),
        Command::CbBound { degree } => cb(cli, *degree),
        Command::EghScan { symmetry } => egh(cli, *symmetry),
        Command::Fvector { action } => fvector(cli, action),
        Command::MuCheck { ideal } => mu(cli, ideal),
    }
}

fn bound(cli: &Cli, k: u64, d: u32) -> Step {
    let seq = cli.sequence()?;
    let g = growth(k, d, &seq)?;
    Ok(if cli.json {
        payload(json!({ "k": k, "d": d, "growth": g }))
    } else {
        format!("{g}\n")
    })
}

fn rep(cli: &Cli, k: u64, d: u32) -> Step {
    let seq = cli.sequence()?;
    let r = macaulay_rep(k, d, &seq)?;
    if cli.json {
        let terms: Vec<Value> = r
            .terms()
            .iter()
            .map(|&(h, t)| json!({ "h": h, "t": t }))
            .collect();
        return Ok(payload(
            json!({ "k": k, "d": d, "terms": terms, "growth": r.shifted() }),
        ));
    }
    let terms: Vec<String> = r
        .terms()
        .iter()
        .filter(|(h, _)| *h > 0)
        .map(|(h, t)| format!("[{h};{t}]"))
        .collect();
    Ok(format!(
        "{k} = {}\ngrowth: {}\n",
        terms.join(" + "),
        r.shifted()
    ))
}

fn hf(cli: &Cli, arg: &Option<String>) -> Step {
    let text = cli.ideal_text(arg)?;
    let ideal = input::ideal(&text, cli.n, 0)?;
    let h = match (ideal.is_artinian(), cli.dmax) {
        (true, None) => ideal.hilbert_function_artinian()?,
        (_, dmax) => ideal.hilbert_function(dmax.unwrap_or(10)),
    };
    Ok(if cli.json {
        payload(
            json!({ "ideal": ideal.to_string(), "artinian": ideal.is_artinian(), "hilbert_function": h.values() }),
        )
    } else {
        format!("{}\n", joined(h.values()))
    })
}

fn ideal_output(cli: &Cli, ideal: &MonomialIdeal, extra: Value) -> String {
    if cli.json {
        let mut v = json!({ "ideal": ideal.to_string(), "generators": generators(ideal) });
        if let Value::Object(m) = extra {
            v.as_object_mut().expect("object").extend(m);
        }
        payload(v)
    } else {
        format!("{ideal}\n")
    }
}

fn lpp(cli: &Cli, arg: &Option<String>) -> Step {
    let (ideal, seq) = cli.ideal_and_sequence(arg)?;
    cli.require_powers(&seq)?;
    if !ideal.contains_powers(&seq) {
        return Err(Error::MissingPurePowers.into());
    }
    let out = if ideal.is_artinian() {
        realize_hf(&ideal.hilbert_function_artinian()?, &seq)?
    } else {
        clements_lindstrom_windowed(&ideal, &seq, cli.window(&ideal, &seq))?.0
    };
    Ok(ideal_output(cli, &out, json!({})))
}

fn cl(cli: &Cli, arg: &Option<String>) -> Step {
    let (ideal, seq) = cli.ideal_and_sequence(arg)?;
    cli.require_powers(&seq)?;
    let (out, cert) = if ideal.is_artinian() {
        clements_lindstrom(&ideal, &seq)?
    } else {
        clements_lindstrom_windowed(&ideal, &seq, cli.window(&ideal, &seq))?
    };
    if cli.json {
        let extra = json!({
            "window": cert.window,
            "exact": cert.exact,
            "input_is_spp": cert.input_is_spp,
            "dominated": cert.dominated(),
        });
        return Ok(ideal_output(cli, &out, extra));
    }
    let mut s = format!("{out}\n");
    if !cert.exact {
        let _ = writeln!(
            s,
            "(agrees with the lpp ideal through degree {})",
            cert.window
        );
    }
    Ok(s)
}

fn segment(cli: &Cli, arg: &Option<String>) -> Step {
    let (ideal, seq) = cli.ideal_and_sequence(arg)?;
    let gens = ideal.generators();
    let d = gens
        .first()
        .map(|g| g.degree())
        .ok_or(Failure::Usage("empty piece".into()))?;
    if gens.iter().any(|g| g.degree() != d) {
        return Err(Failure::Usage(
            "all monomials of a piece must have one degree".into(),
        ));
    }
    let v = GradedPiece::from_monomials(ideal.nvars(), d, gens)?;
    let s = sigma(&v, &seq)?;
    let mons: Vec<String> = s.monomials().iter().map(|m| m.to_string()).collect();
    Ok(if cli.json {
        payload(json!({ "degree": d, "segment": mons }))
    } else {
        format!("{}\n", mons.join(", "))
    })
}

fn stabilize(cli: &Cli, arg: &Option<String>) -> Step {
    let (ideal, seq) = cli.ideal_and_sequence(arg)?;
    cli.require_powers(&seq)?;
    let out = stabilize_spp(&ideal, &seq)?;
    Ok(ideal_output(cli, &out, json!({})))
}

fn linked(cli: &Cli, arg: &Option<String>, table: bool) -> Step {
    let (ideal, seq) = cli.ideal_and_sequence(arg)?;
    let l = link(&ideal, &seq)?;
    let rows = if table {
        Some(duality_table(&ideal, &seq)?)
    } else {
        None
    };
    if cli.json {
        let extra = match &rows {
            Some(r) => json!({ "table": r }),
            None => json!({}),
        };
        return Ok(ideal_output(cli, &l, extra));
    }
    let mut s = format!("{l}\n");
    if let Some(rows) = rows {
        s.push_str("d\tH(R/I;d)\tH(R/I^l;s-d)\tH(R;d)\n");
        for r in rows {
            let _ = writeln!(s, "{}\t{}\t{}\t{}", r[0], r[1], r[2], r[3]);
        }
    }
    Ok(s)
}

fn francisco(cli: &Cli, degree: u32) -> Step {
    let seq = cli.sequence()?;
    let p = CBParameters::new(&seq, degree)?;
    let j = francisco_ideal(&seq, degree)?;
    let l = francisco_link(&seq, degree)?;
    Ok(if cli.json {
        payload(json!({
            "degree": degree,
            "b": p.b(),
            "delta": p.delta(),
            "ideal": j.to_string(),
            "link": l.to_string(),
            "multiplicity": j.multiplicity()?,
        }))
    } else {
        format!(
            "ideal: {j}\nlink: {l}\nmultiplicity: {}\n",
            j.multiplicity()?
        )
    })
}

fn cb(cli: &Cli, degree: u32) -> Step {
    let seq = cli.sequence()?;
    let p = CBParameters::new(&seq, degree)?;
    Ok(if cli.json {
        payload(json!({ "degree": degree, "b": p.b(), "delta": p.delta(), "bound": p.bound() }))
    } else {
        format!("{}\n", p.bound())
    })
}

fn egh(cli: &Cli, symmetry: bool) -> Step {
    let seq = cli.sequence()?;
    let maxgen = cli.maxgen.unwrap_or(3);
    let dmax = cli.dmax.unwrap_or(if seq.is_full() {
        seq.socle_degree() + 1
    } else {
        maxgen + 2
    });
    let mut cfg = ScanConfig::new(seq, maxgen, 0..dmax);
    cfg.budget = resolve_budget(cli.budget).map_err(Failure::Usage)?;
    cfg.symmetry = symmetry;
    let start = Instant::now();
    let report = parallel_scan(&cfg)?;
    let elapsed = start.elapsed().as_millis() as u64;
    let out = if cli.json {
        let violations: Vec<Value> = report
            .violations
            .iter()
            .map(|v| json!({ "check": format!("{:?}", v.check), "ideal": v.ideal.to_string() }))
            .collect();
        payload(
            json!({ "instances": report.instances, "violations": violations, "elapsed_ms": elapsed }),
        )
    } else {
        let mut s = format!(
            "instances: {}\nviolations: {}\n",
            report.instances,
            report.violations.len()
        );
        for v in &report.violations {
            let _ = writeln!(s, "{v}");
        }
        s
    };
    if report.violations.is_empty() {
        Ok(out)
    } else {
        Err(Failure::Negative(out))
    }
}

fn fvector(cli: &Cli, action: &FvectorCommand) -> Step {
    match action {
        FvectorCommand::Check { entries } => {
            let f = FVector::new(entries.clone())?;
            let bad = kk_violation(&f);
            let out = if cli.json {
                payload(json!({ "fvector": f.entries(), "valid": bad.is_none(), "violation": bad }))
            } else {
                match bad {
                    None => "valid\n".to_string(),
                    Some(d) => format!("invalid at d={d}\n"),
                }
            };
            if bad.is_none() {
                Ok(out)
            } else {
                Err(Failure::Negative(out))
            }
        }
        FvectorCommand::Build { entries } => {
            let f = FVector::new(entries.clone())?;
            let complex = realize_fvector(&f)?;
            let facets = complex.facets();
            Ok(if cli.json {
                payload(
                    json!({ "fvector": f.entries(), "facets": facets, "stanley_reisner": stanley_reisner(&complex).to_string() }),
                )
            } else {
                facets
                    .iter()
                    .map(|f| {
                        format!(
                            "{}\n",
                            f.iter()
                                .map(|v| v.to_string())
                                .collect::<Vec<_>>()
                                .join(" ")
                        )
                    })
                    .collect()
            })
        }
        FvectorCommand::Of { path } => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            let facets = input::parse_facets(&text).map_err(Failure::Usage)?;
            let n = cli
                .n
                .unwrap_or_else(|| facets.iter().flatten().copied().max().unwrap_or(0));
            let complex = SimplicialComplex::new(n, &facets)?;
            let f = complex_to_fvector(&complex);
            Ok(if cli.json {
                payload(json!({ "fvector": f.entries() }))
            } else {
                format!("{f}\n")
            })
        }
    }
}

fn mu(cli: &Cli, arg: &Option<String>) -> Step {
    let (ideal, seq) = cli.ideal_and_sequence(arg)?;
    if seq.len() < 2 {
        return Err(Failure::Usage("mu-check needs --degs a1,a2".into()));
    }
    let literal = mu_bound_check(&ideal, &seq)?;
    let quotient = mu_quotient_bound_check(&ideal, &seq)?;
    let bound = u64::from(seq.degrees()[0]) * u64::from(seq.degrees()[1]);
    let outside = mu_in_quotient(&ideal, &seq);
    Ok(if cli.json {
        payload(json!({
            "mu": ideal.mu(),
            "mu_outside_powers": outside,
            "bound": bound,
            "holds": literal,
            "holds_outside_powers": quotient,
        }))
    } else {
        let verdict = |ok: bool| if ok { "holds" } else { "exceeded" };
        format!(
            "mu = {} (bound {bound}: {})\nmu outside the powers = {outside} (bound {bound}: {})\n",
            ideal.mu(),
            verdict(literal),
            verdict(quotient)
        )
    })
}
