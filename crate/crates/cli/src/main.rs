//! `biliaison`: formulas, instance generators, height verifiers and
//! biliaison chain certificates from the command line.
//!
//! Exit codes: 0 success, 2 mismatch or failed certificate, 3 Gröbner
//! budget exceeded, 4 input error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use biliaison::checks::{guard_generic, measure_height, regular_sequence_sweep};
use biliaison::formulas::formula_summary;
use biliaison::{
    check_t_homogeneous, expected_codim, full_chain, herzog_trung_check, is_determinantal, ladder_minors_ideal,
    local_ci_radius, parse_polynomial, read_matrix_file, verify_column_deletion, verify_ladder_height,
    verify_laddcanc, verify_regular_sequence, verify_row_deletion, AnyMatrix, CheckOptions, Comparison, Error,
    Field, FieldKind, FieldSpec, HeightReport, MonomialOrder, PolyMatrix, PrimeField, Rationals, Statement,
    Verdict, DEFAULT_STEP_BUDGET,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

const EXIT_OK: u8 = 0;
const EXIT_MISMATCH: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_INPUT: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "biliaison", version, about = "Determinantal ideals: heights, ladders and biliaison chains")]
struct Cli {
    /// Coefficient field: Q or Fp:<p>. A matrix file's own field wins.
    #[arg(long, global = true, default_value = "Fp:32003")]
    field: String,
    /// Monomial order: grevlex, lex or diag.
    #[arg(long, global = true, default_value = "grevlex")]
    order: String,
    /// Master seed for generic operations.
    #[arg(long, global = true, env = "BILIAISON_SEED", default_value_t = 0)]
    seed: u64,
    /// Gröbner budget in elementary reduction steps.
    #[arg(long, global = true, default_value_t = DEFAULT_STEP_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Allow generic instances with more than 20 variables.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form invariants for (m, n, t).
    Formulas {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
    },
    /// Write a matrix file.
    Generate(GenerateArgs),
    /// Check t-homogeneity and the codimension of I_t(M).
    Check(InstanceArgs),
    /// Verify one height statement.
    Verify {
        statement: StatementArg,
        #[command(flatten)]
        instance: InstanceArgs,
        /// For `ci`: check every submatrix position, not just the leading block.
        #[arg(long)]
        all_positions: bool,
    },
    /// Build and certify the biliaison chain.
    Chain {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Maximum number of ratio pairs checked per step.
        #[arg(long, default_value_t = 100)]
        cap: usize,
        /// Write the certificate JSON here.
        #[arg(long)]
        json_out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[command(subcommand)]
    kind: GenerateKind,
    /// Output path; stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum GenerateKind {
    /// m x n matrix of distinct variables x_{i*n+j}.
    Generic { m: usize, n: usize },
    /// The scalar matrix FORM * Id_t.
    Hyper {
        form: String,
        t: usize,
        /// Number of variables; defaults to one past the largest index in FORM.
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Random homogeneous entries with deg F_ij = row_degree_i + col_degree_j.
    Random {
        #[arg(long, value_delimiter = ',', required = true)]
        row_degrees: Vec<u32>,
        #[arg(long, value_delimiter = ',', required = true)]
        col_degrees: Vec<u32>,
        #[arg(long)]
        vars: usize,
        #[arg(long, default_value_t = 3)]
        max_terms: usize,
        #[arg(long, default_value_t = 0.0)]
        zero_prob: f64,
    },
}

#[derive(Args, Debug)]
struct InstanceArgs {
    /// Matrix file.
    #[arg(long, conflicts_with_all = ["generic", "m", "n"])]
    matrix: Option<PathBuf>,
    /// Generic m x n matrix.
    #[arg(long, num_args = 2, value_names = ["M", "N"], conflicts_with_all = ["m", "n"])]
    generic: Option<Vec<usize>>,
    /// Rows of a generic matrix.
    #[arg(long, requires = "n")]
    m: Option<usize>,
    /// Columns of a generic matrix.
    #[arg(long, requires = "m")]
    n: Option<usize>,
    /// Minor size.
    #[arg(long)]
    t: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum StatementArg {
    Codim,
    Gooddet,
    Del,
    Ci,
    Ladder,
    Laddcanc,
    HerzogTrung,
    Detgci,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum OutputMode {
    Human,
    Json,
}

/// Everything a command depends on besides its own arguments.
#[derive(Debug, Clone, Serialize)]
struct RunConfig {
    field: String,
    #[serde(skip)]
    field_spec: FieldSpec,
    order: String,
    #[serde(skip)]
    monomial_order: MonomialOrder,
    seed: u64,
    step_budget: u64,
    output: OutputMode,
    guardrail_override: bool,
}

impl RunConfig {
    fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        let field_spec = FieldSpec::parse(&cli.field)?;
        let monomial_order = MonomialOrder::parse(&cli.order)?;
        Ok(Self {
            field: field_spec.to_string(),
            field_spec,
            order: monomial_order.to_string(),
            monomial_order,
            seed: cli.seed,
            step_budget: cli.budget,
            output: if cli.json { OutputMode::Json } else { OutputMode::Human },
            guardrail_override: cli.force,
        })
    }

    fn options(&self) -> CheckOptions {
        CheckOptions {
            order: self.monomial_order.clone(),
            step_budget: self.step_budget,
            guardrail_override: self.guardrail_override,
            ..CheckOptions::default()
        }
    }

    fn set_field(&mut self, spec: FieldSpec) {
        self.field_spec = spec;
        self.field = spec.to_string();
    }
}

#[derive(Debug)]
struct CliError {
    code: u8,
    message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            Error::Precondition(_) => EXIT_MISMATCH,
            _ => EXIT_INPUT,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

/// Result of a command: one JSON document, its text rendering and the
/// exit code.
struct Outcome {
    json: Value,
    human: String,
    code: u8,
}

fn exit_code_for(reports: &[&HeightReport]) -> u8 {
    if reports.iter().any(|r| r.verdict == Verdict::BudgetExceeded) {
        EXIT_BUDGET
    } else if reports.iter().all(|r| r.is_match()) {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { EXIT_OK });
        }
    };
    let json = cli.json;
    match run(&cli) {
        Ok(out) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                print!("{}", out.human);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            if json {
                println!("{}", json!({ "error": e.message, "exit_code": e.code }));
            }
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let mut cfg = RunConfig::from_cli(cli)?;
    match &cli.command {
        Command::Formulas { m, n, t } => cmd_formulas(*m, *n, *t, &cfg),
        Command::Generate(args) => cmd_generate(args, &cfg),
        Command::Check(inst) => with_instance(inst, &mut cfg, &CheckCmd),
        Command::Verify {
            statement,
            instance,
            all_positions,
        } => with_instance(
            instance,
            &mut cfg,
            &VerifyCmd {
                statement: *statement,
                all_positions: *all_positions,
            },
        ),
        Command::Chain {
            instance,
            cap,
            json_out,
        } => with_instance(
            instance,
            &mut cfg,
            &ChainCmd {
                cap: *cap,
                json_out: json_out.clone(),
            },
        ),
    }
}

fn cmd_formulas(m: usize, n: usize, t: usize, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let s = formula_summary(m, n, t)?;
    let mut h = String::new();
    let _ = writeln!(h, "m = {m}, n = {n}, t = {t}");
    let _ = writeln!(h, "expected codimension   {}", s.expected_codim);
    let _ = writeln!(h, "minors / ladder minors {} / {}", s.minor_count, s.ladder_minor_count);
    let _ = writeln!(h, "Cohen-Macaulay type    {}", s.cm_type);
    let _ = writeln!(h, "Gorenstein             {}", if s.gorenstein { "yes" } else { "no" });
    let _ = writeln!(h, "CI (full minors)       {:?}", s.ci_full_minors);
    let _ = writeln!(h, "CI (ladder)            {:?}", s.ci_ladder);
    match &s.gaeta {
        Some(g) => {
            let rel = if g.holds { ">" } else { "<=" };
            let _ = writeln!(h, "Gaeta inequality       {} {rel} {}", g.lhs, g.rhs);
        }
        None => {
            let _ = writeln!(h, "Gaeta inequality       outside 2 <= t <= m-1");
        }
    }
    Ok(Outcome {
        json: json!({ "command": "formulas", "config": cfg, "formulas": s }),
        human: h,
        code: EXIT_OK,
    })
}

fn infer_vars(form: &str) -> Result<usize, CliError> {
    let mut max = None;
    let bytes = form.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'x' {
            let start = i + 1;
            let mut j = start;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            if j > start {
                let idx: usize = form[start..j]
                    .parse()
                    .map_err(|_| CliError::input("variable index too large"))?;
                max = Some(max.map_or(idx, |m: usize| m.max(idx)));
            }
            i = j;
        } else {
            i += 1;
        }
    }
    Ok(max.map_or(1, |m| m + 1))
}

fn generate<F: Field>(field: F, kind: &GenerateKind, seed: u64) -> Result<String, CliError> {
    let m = match kind {
        GenerateKind::Generic { m, n } => PolyMatrix::generic(field, *m, *n)?,
        GenerateKind::Hyper { form, t, vars } => {
            let nv = match vars {
                Some(v) => *v,
                None => infer_vars(form)?,
            };
            PolyMatrix::hyper(&parse_polynomial(form, field, nv)?, *t)?
        }
        GenerateKind::Random {
            row_degrees,
            col_degrees,
            vars,
            max_terms,
            zero_prob,
        } => {
            if !(0.0..=1.0).contains(zero_prob) {
                return Err(CliError::input("--zero-prob must lie in [0, 1]"));
            }
            PolyMatrix::random_forms(field, *vars, row_degrees, col_degrees, *max_terms, *zero_prob, seed)?
        }
    };
    Ok(m.to_file_string())
}

fn cmd_generate(args: &GenerateArgs, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let text = match cfg.field_spec.kind {
        FieldKind::Rationals => generate(Rationals, &args.kind, cfg.seed)?,
        FieldKind::PrimeField => generate(PrimeField::new(cfg.field_spec.characteristic)?, &args.kind, cfg.seed)?,
    };
    let mut human = text.clone();
    if let Some(path) = &args.out {
        std::fs::write(path, &text)
            .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display())))?;
        human = format!("wrote {}\n", path.display());
    }
    Ok(Outcome {
        json: json!({ "command": "generate", "config": cfg, "matrix_file": text }),
        human,
        code: EXIT_OK,
    })
}

/// A command that runs on a concrete matrix over any field.
trait InstanceCommand {
    fn run<F: Field>(&self, m: PolyMatrix<F>, t: usize, generic: Option<(usize, usize)>, cfg: &RunConfig)
        -> Result<Outcome, CliError>;
}

fn with_instance(inst: &InstanceArgs, cfg: &mut RunConfig, cmd: &impl InstanceCommand) -> Result<Outcome, CliError> {
    if let Some(path) = &inst.matrix {
        let any = read_matrix_file(path)?;
        let requested = cfg.field_spec;
        cfg.set_field(any.field_spec());
        let mut out = match any {
            AnyMatrix::Q(m) => cmd.run(m, inst.t, None, cfg),
            AnyMatrix::Fp(m) => cmd.run(m, inst.t, None, cfg),
        }?;
        if requested != cfg.field_spec {
            let note = format!("field {} taken from the matrix file (overrides {requested})", cfg.field);
            out.human = format!("note: {note}\n{}", out.human);
            if let Value::Object(map) = &mut out.json {
                map.insert("field_note".into(), Value::String(note));
            }
        }
        return Ok(out);
    }
    let (m, n) = match (&inst.generic, inst.m, inst.n) {
        (Some(v), _, _) => (v[0], v[1]),
        (None, Some(m), Some(n)) => (m, n),
        _ => return Err(CliError::input("give --matrix FILE, --generic M N, or --m M --n N")),
    };
    guard_generic(m, n, &cfg.options())?;
    match cfg.field_spec.kind {
        FieldKind::Rationals => cmd.run(PolyMatrix::generic(Rationals, m, n)?, inst.t, Some((m, n)), cfg),
        FieldKind::PrimeField => {
            let f = PrimeField::new(cfg.field_spec.characteristic)?;
            cmd.run(PolyMatrix::generic(f, m, n)?, inst.t, Some((m, n)), cfg)
        }
    }
}

fn report_outcome(command: &str, statement: Option<&str>, reports: Vec<HeightReport>, cfg: &RunConfig) -> Outcome {
    let refs: Vec<&HeightReport> = reports.iter().collect();
    let code = exit_code_for(&refs);
    let mut human = String::new();
    for r in &reports {
        let _ = writeln!(human, "{r}");
    }
    let _ = writeln!(human, "field {}, order {}, seed {}", cfg.field, cfg.order, cfg.seed);
    Outcome {
        json: json!({
            "command": command,
            "statement": statement,
            "config": cfg,
            "reports": reports,
            "exit_code": code,
        }),
        human,
        code,
    }
}

struct CheckCmd;

impl InstanceCommand for CheckCmd {
    fn run<F: Field>(&self, m: PolyMatrix<F>, t: usize, _: Option<(usize, usize)>, cfg: &RunConfig) -> Result<Outcome, CliError> {
        check_t_homogeneous(&m, t)?.into_result(t)?;
        let r = is_determinantal(&m, t, &cfg.options())?;
        Ok(report_outcome("check", None, vec![r], cfg))
    }
}

struct VerifyCmd {
    statement: StatementArg,
    all_positions: bool,
}

impl InstanceCommand for VerifyCmd {
    fn run<F: Field>(
        &self,
        m: PolyMatrix<F>,
        t: usize,
        generic: Option<(usize, usize)>,
        cfg: &RunConfig,
    ) -> Result<Outcome, CliError> {
        let opts = cfg.options();
        let seed = cfg.seed;
        let (tag, reports) = match self.statement {
            StatementArg::Codim => ("codim", vec![is_determinantal(&m, t, &opts)?]),
            StatementArg::Gooddet => {
                let (a, b) = verify_column_deletion(&m, t, m.cols() - 1, &opts)?;
                ("gooddet", std::iter::once(a).chain(b).collect())
            }
            StatementArg::Del => {
                let (a, _) = verify_column_deletion(&m, t, m.cols() - 1, &opts)?;
                let o = m.delete_column(m.cols() - 1)?;
                let r = verify_row_deletion(&o, t, m.dims(), seed, &opts)?;
                ("del", vec![a, r])
            }
            StatementArg::Ci if self.all_positions => ("ci", regular_sequence_sweep(&m, t, seed, &opts)?),
            StatementArg::Ci => ("ci", vec![verify_regular_sequence(&m, t, seed, &opts)?]),
            StatementArg::Ladder => {
                let l = verify_ladder_height(&m, t, seed, &opts)?;
                ("ladder", vec![l.ladder, l.corner, l.laddcanc])
            }
            StatementArg::Laddcanc => ("laddcanc", vec![verify_laddcanc(&m, t, seed, &opts)?]),
            StatementArg::HerzogTrung => {
                let r = match generic {
                    Some((a, b)) => herzog_trung_check(m.field().clone(), a, b, t, &opts)?,
                    None => {
                        let c = expected_codim(m.rows(), m.cols(), t)?;
                        let h = measure_height(ladder_minors_ideal(&m, t, &opts.order)?, opts.step_budget)?;
                        HeightReport::new(format!("I_{t}(L)"), h, c - 1, Comparison::Eq, Statement::HerzogTrung, None)
                    }
                };
                ("herzog-trung", vec![r])
            }
            StatementArg::Detgci => ("detgci", vec![local_ci_radius(&m, t, &opts)?]),
        };
        Ok(report_outcome("verify", Some(tag), reports, cfg))
    }
}

struct ChainCmd {
    cap: usize,
    json_out: Option<PathBuf>,
}

fn write_json(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, format!("{text}\n"))
        .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display())))
}

impl InstanceCommand for ChainCmd {
    fn run<F: Field>(&self, m: PolyMatrix<F>, t: usize, _: Option<(usize, usize)>, cfg: &RunConfig) -> Result<Outcome, CliError> {
        let opts = CheckOptions {
            ratio_cap: self.cap,
            ..cfg.options()
        };
        let cert = full_chain(&m, t, cfg.seed, &opts)?;
        let record = cert.record();
        if let Some(path) = &self.json_out {
            write_json(path, &serde_json::to_string_pretty(&record).expect("serializable"))?;
        }
        let code = if cert.is_certified() { EXIT_OK } else { EXIT_MISMATCH };
        let mut h = String::new();
        let _ = writeln!(h, "chain for {}x{} at t = {t}: {} step(s)", m.rows(), m.cols(), cert.steps.len());
        for (k, s) in record.steps.iter().enumerate() {
            let _ = writeln!(
                h,
                "step {k}: level {}, seed {}, shift a = {}, {} ratio pairs, all zero: {}",
                s.level, s.row_op_seed, s.shift_a, s.ratio_pairs_checked, s.ratio_all_zero
            );
            for r in &s.heights {
                let computed = r.computed.map_or_else(|| "?".into(), |v| v.to_string());
                let _ = writeln!(h, "  ht {} = {computed} (expected {}): {:?}", r.desc, r.predicted, r.verdict);
            }
        }
        if let Some(term) = &record.terminal {
            let _ = writeln!(
                h,
                "terminal: {} generators, height {}, complete intersection: {}",
                term.generators.len(),
                term.height.map_or_else(|| "?".into(), |v| v.to_string()),
                term.is_ci
            );
            let _ = writeln!(h, "  {}", term.note);
        }
        let _ = writeln!(h, "status: {:?}", record.status);
        Ok(Outcome {
            json: json!({ "command": "chain", "config": cfg, "certificate": record, "exit_code": code }),
            human: h,
            code,
        })
    }
}
