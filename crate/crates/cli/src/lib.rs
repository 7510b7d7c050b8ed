//! Command-line front end: job specification, built-in examples, and text
//! and JSON reports.
//!
//! Exit codes: 0 after a successful classification (whatever the verdict),
//! 2 on malformed input, 3 when a size cap is exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};

use clap::Parser;
use serde::{Deserialize, Serialize};

use resnil_core::criteria::{
    classify_action_family, classify_general, finite_index_resnil_subgroup, Claim, ClassifyOptions,
    FiniteIndexSubgroup, GroupInput, LcsLength, PrimeSet, Verdict,
};
use resnil_core::freegroup::{endo_power, parse_endo, parse_endo_in};
use resnil_core::primes::is_prime;
use resnil_core::zlinalg::{IntMatrix, DEFAULT_SIZE_CAP};
use resnil_core::Error as CoreError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Cap(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Cap(_) => EXIT_CAP,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::SizeCapExceeded { .. } | CoreError::PrimeTooLarge(_) => CliError::Cap(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

/// Where the group comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JobInput {
    /// The abelianized action `[φ̄]`, columns are images of generators.
    Matrix(IntMatrix),
    /// `gen -> word` clauses, optionally with a claimed inverse.
    Endo { map: String, inverse: Option<String> },
    /// A built-in example by name.
    Example(String),
    /// `F_n ⋊ B` with `B` acting through `matrices`, checked modulo `prime`.
    Family {
        matrices: Vec<IntMatrix>,
        prime: u64,
        acting_group_residually_nilpotent: bool,
    },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobSpec {
    pub input: JobInput,
    /// Classify `φ^power` instead of `φ`.
    #[serde(default)]
    pub power: Option<u32>,
    #[serde(default)]
    pub tensor_bound: Option<u32>,
    #[serde(default)]
    pub primes: Vec<u64>,
    /// Size cap for Kronecker powers and Lie components.
    #[serde(default)]
    pub cap: Option<usize>,
    #[serde(default)]
    pub format: OutputFormat,
}

impl JobSpec {
    pub fn new(input: JobInput) -> Self {
        JobSpec {
            input,
            power: None,
            tensor_bound: None,
            primes: Vec::new(),
            cap: None,
            format: OutputFormat::Text,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.tensor_bound == Some(0) {
            return Err(CliError::Input("tensor bound must be at least 1".into()));
        }
        if self.power == Some(0) {
            return Err(CliError::Input("power must be at least 1".into()));
        }
        if self.cap == Some(0) {
            return Err(CliError::Input("cap must be at least 1".into()));
        }
        if let Some(p) = self.primes.iter().find(|&&p| !is_prime(p)) {
            return Err(CliError::Input(format!("{p} is not a prime")));
        }
        Ok(())
    }
}

/// What a built-in example is expected to produce.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedVerdict {
    pub residually_nilpotent: Option<bool>,
    pub lcs_length: LcsLength,
    /// Primes proven residually p-finite, exactly.
    pub proven_p_finite: PrimeSet,
}

impl ExpectedVerdict {
    pub fn matches(&self, v: &Verdict) -> bool {
        v.residually_nilpotent.value == self.residually_nilpotent
            && v.lcs_length == self.lcs_length
            && v.proven_p_finite() == self.proven_p_finite
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuiltinExample {
    pub name: &'static str,
    pub description: &'static str,
    pub job: JobSpec,
    pub expected: ExpectedVerdict,
}

fn endo_input(map: &str, inverse: Option<&str>) -> JobInput {
    JobInput::Endo {
        map: map.into(),
        inverse: inverse.map(Into::into),
    }
}

pub fn builtin_examples() -> Vec<BuiltinExample> {
    let m = |rows: &[[i64; 2]]| IntMatrix::from_i64_rows(rows);
    vec![
        BuiltinExample {
            name: "mikhailov",
            description: "a -> b, b -> a b^3: det=-1, tr=3",
            job: JobSpec::new(endo_input("a -> b; b -> a b^3", Some("a -> b a^-3; b -> a"))),
            expected: ExpectedVerdict {
                residually_nilpotent: Some(false),
                lcs_length: LcsLength::OmegaSquared,
                proven_p_finite: PrimeSet::default(),
            },
        },
        BuiltinExample {
            name: "braid3",
            description: "the commutator subgroup of the 3-strand braid group is F_2, with B_3 = F_2 ⋊ Z",
            job: JobSpec::new(endo_input("u -> u v^-1; v -> u", Some("u -> v; v -> u^-1 v"))),
            expected: ExpectedVerdict {
                residually_nilpotent: Some(false),
                lcs_length: LcsLength::Two,
                proven_p_finite: PrimeSet::default(),
            },
        },
        BuiltinExample {
            name: "klein_p2",
            description: "F_2 ⋊ B with B the Klein bottle group, both generators ≡ E mod 2",
            job: JobSpec::new(JobInput::Family {
                matrices: vec![m(&[[1, 0], [-2, 1]]), m(&[[-1, 0], [2, 1]])],
                prime: 2,
                acting_group_residually_nilpotent: true,
            }),
            expected: ExpectedVerdict {
                residually_nilpotent: Some(true),
                lcs_length: LcsLength::Omega,
                proven_p_finite: PrimeSet::default(),
            },
        },
        BuiltinExample {
            name: "exnres_mixed_signs",
            description: "x_i -> x_i^(±1) with mixed signs",
            job: JobSpec::new(endo_input(
                "x1 -> x1; x2 -> x2^-1; x3 -> x3^-1",
                Some("x1 -> x1; x2 -> x2^-1; x3 -> x3^-1"),
            )),
            expected: ExpectedVerdict {
                residually_nilpotent: Some(true),
                lcs_length: LcsLength::Omega,
                proven_p_finite: PrimeSet::of([2]),
            },
        },
        BuiltinExample {
            name: "identity",
            description: "trivial action: F_2 × Z",
            job: JobSpec::new(JobInput::Matrix(IntMatrix::identity(2))),
            expected: ExpectedVerdict {
                residually_nilpotent: Some(true),
                lcs_length: LcsLength::Omega,
                proven_p_finite: PrimeSet::all(),
            },
        },
    ]
}

pub fn builtin_example(name: &str) -> Option<BuiltinExample> {
    builtin_examples().into_iter().find(|e| e.name == name)
}

/// The result of one job.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    /// Human-readable description of the input.
    pub input: String,
    pub power: u32,
    pub verdict: Verdict,
    /// For rank 2 inputs that are not residually nilpotent.
    pub finite_index: Option<FiniteIndexSubgroup>,
}

fn options(job: &JobSpec) -> ClassifyOptions {
    let mut o = ClassifyOptions {
        tensor_bound: job.tensor_bound,
        primes: job.primes.clone(),
        ..Default::default()
    };
    if let Some(cap) = job.cap {
        o.kron_cap = cap;
        o.witt_cap = cap;
    }
    o
}

/// Classify the job without printing anything.
pub fn evaluate(job: &JobSpec) -> Result<Report, CliError> {
    job.validate()?;
    let power = job.power.unwrap_or(1);
    let input = match &job.input {
        JobInput::Example(name) => {
            let ex = builtin_example(name).ok_or_else(|| {
                let names: Vec<&str> = builtin_examples().iter().map(|e| e.name).collect();
                CliError::Input(format!("unknown example `{name}` (known: {})", names.join(", ")))
            })?;
            ex.job.input
        }
        other => other.clone(),
    };
    let opts = options(job);
    let (description, verdict) = match input {
        JobInput::Matrix(a) => {
            let a = a.pow(power)?;
            let desc = if power == 1 {
                format!("matrix {a}")
            } else {
                format!("matrix power {power}: {a}")
            };
            (desc, classify_general(&GroupInput::Matrix(a), &opts)?)
        }
        JobInput::Endo { map, inverse } => {
            let (f, alphabet) = parse_endo(&map)?;
            let g = inverse
                .as_deref()
                .map(|t| parse_endo_in(t, f.rank(), &alphabet))
                .transpose()?;
            let (f, g) = (endo_power(&f, power), g.map(|g| endo_power(&g, power)));
            let mut desc = format!("φ: {}", f.display(&alphabet));
            if power > 1 {
                desc = format!("φ = ({map})^{power}, so {desc}");
            }
            (desc, classify_general(&GroupInput::Endo { endo: f, inverse: g }, &opts)?)
        }
        JobInput::Family {
            matrices,
            prime,
            acting_group_residually_nilpotent,
        } => {
            if power != 1 {
                return Err(CliError::Input("--power applies to a single automorphism".into()));
            }
            let list: Vec<String> = matrices.iter().map(ToString::to_string).collect();
            let desc = format!("action family {} modulo {prime}", list.join(", "));
            (
                desc,
                classify_action_family(&matrices, prime, acting_group_residually_nilpotent)?,
            )
        }
        JobInput::Example(_) => return Err(CliError::Input("examples cannot refer to examples".into())),
    };
    let finite_index = if verdict.rank == 2
        && verdict.matrices.len() == 1
        && !verdict.residually_nilpotent.is_proven(true)
    {
        Some(finite_index_resnil_subgroup(&verdict.matrices[0])?)
    } else {
        None
    };
    Ok(Report {
        input: description,
        power,
        verdict,
        finite_index,
    })
}

fn yes_no(c: &Claim) -> String {
    match c.value {
        Some(true) => format!("yes ({})", c.certainty),
        Some(false) => format!("no ({})", c.certainty),
        None => "unknown".to_string(),
    }
}

/// One-line summary of a verdict.
pub fn headline(v: &Verdict) -> String {
    let body = match (v.residually_nilpotent.value, v.lcs_length) {
        (Some(false), LcsLength::Two) => "not residually nilpotent; γ_ω = γ₂ (length 2)",
        (Some(false), LcsLength::OmegaSquared) => "not residually nilpotent; lower central series length ω²",
        (Some(false), _) => "not residually nilpotent",
        (Some(true), LcsLength::Omega) => "residually nilpotent; lower central series length ω",
        (Some(true), LcsLength::Two) => "residually nilpotent; abelian, γ₂ = 1",
        (Some(true), _) => "residually nilpotent",
        (None, _) => "residual nilpotence undecided",
    };
    format!("{body} [{}]", v.residually_nilpotent.certainty)
}

pub fn render_text(r: &Report) -> String {
    let v = &r.verdict;
    let mut s = String::new();
    let _ = writeln!(s, "input: {}", r.input);
    let group = if v.matrices.len() == 1 {
        format!("F_{} ⋊ Z", v.rank)
    } else {
        format!("F_{} ⋊ B", v.rank)
    };
    let _ = writeln!(s, "group: {group}");
    for (i, m) in v.matrices.iter().enumerate() {
        let label = if v.matrices.len() == 1 { "A".to_string() } else { format!("B{}", i + 1) };
        let _ = writeln!(s, "{label} = {m}");
    }
    let _ = writeln!(s, "verdict: {}", headline(v));
    let _ = writeln!(s, "claims:");
    let _ = writeln!(s, "  residually nilpotent: {}", yes_no(&v.residually_nilpotent));
    let lcs = match v.lcs_length {
        LcsLength::Unknown => "unknown".to_string(),
        l => format!("{l} ({})", v.lcs_certainty),
    };
    let _ = writeln!(s, "  lower central series length: {lcs}");
    for (p, c) in &v.residually_p_finite {
        let _ = writeln!(s, "  residually {p}-finite: {}", yes_no(c));
    }
    let other = if v.residually_p_finite.is_empty() { "every prime" } else { "other primes" };
    let _ = writeln!(s, "  residually p-finite, {other}: {}", yes_no(&v.other_primes));
    let _ = writeln!(s, "witnesses:");
    for w in &v.witnesses {
        let _ = writeln!(s, "  [{}] {} ({})", w.criterion.name(), w.evidence, w.certainty);
        let _ = writeln!(s, "    anchor: {}", w.anchor);
    }
    if let Some(fi) = &r.finite_index {
        let _ = writeln!(
            s,
            "finite-index subgroup: index {}, A^{} = {}: {}",
            fi.index,
            fi.index,
            fi.power_matrix,
            headline(&fi.sub_verdict)
        );
        let ps = fi.sub_verdict.proven_p_finite();
        if !ps.is_empty() {
            let _ = writeln!(s, "  residually p-finite for p in {ps} (proven)");
        }
    }
    s
}

pub fn render_json(r: &Report) -> String {
    serde_json::to_string_pretty(r).expect("report serializes") + "\n"
}

/// Run a job, writing the report to `out` and diagnostics to `err`.
pub fn run(job: &JobSpec, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match evaluate(job) {
        Ok(report) => {
            let text = match job.format {
                OutputFormat::Text => render_text(&report),
                OutputFormat::Json => render_json(&report),
            };
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_INPUT;
            }
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "resnil",
    version,
    about = "Decide or bound residual nilpotence of F_n ⋊ Z from the abelianized action"
)]
pub struct Args {
    /// Matrix literal such as "[[0,1],[1,3]]", columns are images.
    #[arg(long, conflicts_with_all = ["endo", "example"])]
    pub matrix: Option<String>,
    /// Endomorphism such as "a->b; b->a b^3".
    #[arg(long, conflicts_with = "example")]
    pub endo: Option<String>,
    /// Claimed inverse of --endo, in the same alphabet.
    #[arg(long, requires = "endo")]
    pub inverse: Option<String>,
    /// Built-in example: mikhailov, braid3, klein_p2, exnres_mixed_signs, identity.
    #[arg(long)]
    pub example: Option<String>,
    /// Classify φ^M instead of φ.
    #[arg(long, value_name = "M")]
    pub power: Option<u32>,
    /// Audit tensor powers and Lie components up to degree K.
    #[arg(long = "tensor-bound", value_name = "K")]
    pub tensor_bound: Option<u32>,
    /// Primes to report on, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub primes: Vec<u64>,
    /// JSON output; with no input flag the job itself is read from stdin as JSON.
    #[arg(long)]
    pub json: bool,
    /// Size cap for Kronecker powers and Lie components.
    #[arg(long, value_name = "N")]
    pub cap: Option<usize>,
}

impl Args {
    /// The job described by the flags, or `None` when no input flag is given.
    pub fn job(&self) -> Result<Option<JobSpec>, CliError> {
        let input = if let Some(m) = &self.matrix {
            JobInput::Matrix(m.parse::<IntMatrix>().map_err(CliError::from)?)
        } else if let Some(e) = &self.endo {
            JobInput::Endo {
                map: e.clone(),
                inverse: self.inverse.clone(),
            }
        } else if let Some(x) = &self.example {
            JobInput::Example(x.clone())
        } else {
            return Ok(None);
        };
        Ok(Some(JobSpec {
            input,
            power: self.power,
            tensor_bound: self.tensor_bound,
            primes: self.primes.clone(),
            cap: self.cap,
            format: if self.json { OutputFormat::Json } else { OutputFormat::Text },
        }))
    }
}

/// Entry point shared by the binary and the tests.
pub fn cli_main<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let job = match args.job() {
        Ok(Some(job)) => job,
        Ok(None) if args.json => {
            let mut text = String::new();
            if let Err(e) = stdin.read_to_string(&mut text) {
                let _ = writeln!(err, "error: cannot read stdin: {e}");
                return EXIT_INPUT;
            }
            match serde_json::from_str::<JobSpec>(&text) {
                Ok(mut job) => {
                    job.format = OutputFormat::Json;
                    job
                }
                Err(e) => {
                    let _ = writeln!(err, "error: invalid job JSON: {e}");
                    return EXIT_INPUT;
                }
            }
        }
        Ok(None) => {
            let _ = writeln!(err, "error: one of --matrix, --endo, --example or --json (job on stdin) is required");
            return EXIT_INPUT;
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return e.exit_code();
        }
    };
    run(&job, out, err)
}

/// Default Kronecker cap, for documentation and tests.
pub const DEFAULT_CAP: usize = DEFAULT_SIZE_CAP;
