//! Ascending G-biliaison chains from a standard determinantal ideal down to
//! a complete intersection, and the Huneke-Ulrich licci test.
//!
//! One step at level `t` on `M` (after generic row operations):
//!
//! * `X = I_t(M)` and `X' = I_{t-1}(N)`, `N` the corner submatrix, both of
//!   height `c`;
//! * `Y = I_t(L)`, `L` the ladder without the corner entry, of height `c-1`;
//! * every ratio residue
//!   `M_{i+m; j+n} M_{k;l} - M_{k+m; l+n} M_{i;j}` lies in `Y`.
//!
//! Then `X` is linked to `X'` shifted by `a = deg F_mn` on `Y`.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::checks::{measure_height, CheckOptions, Comparison, HeightReport, Statement, Verdict};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::formulas::expected_codim;
use crate::ideal::IdealHandle;
use crate::matrix::PolyMatrix;
use crate::minors::{combinations, ladder_minors_ideal, minors_ideal, MinorCache};
use crate::rowops::{derive_seed, generalized_row_ops, RowOpRecord};

/// Index tuples `(rows, cols)` of a `(t-1)`-minor avoiding the last row and
/// column; 0-based.
pub type MinorIndex = (Vec<usize>, Vec<usize>);

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RatioResidue {
    pub first: MinorIndex,
    pub second: MinorIndex,
    pub is_zero: bool,
}

#[derive(Debug, Clone)]
pub struct BiliaisonStep<F: Field> {
    pub level: usize,
    /// The input matrix after the recorded row operations.
    pub matrix_before: PolyMatrix<F>,
    pub y_ideal: IdealHandle<F>,
    pub successor: PolyMatrix<F>,
    pub shift_a: u32,
    pub height_checks: Vec<HeightReport>,
    pub ratio_residues: Vec<RatioResidue>,
    pub row_op: RowOpRecord<F>,
    pub seeds_tried: Vec<u64>,
}

impl<F: Field> BiliaisonStep<F> {
    pub fn heights_match(&self) -> bool {
        self.height_checks.iter().all(HeightReport::is_match)
    }

    pub fn ratio_all_zero(&self) -> bool {
        self.ratio_residues.iter().all(|r| r.is_zero)
    }

    pub fn is_certified(&self) -> bool {
        self.heights_match() && !self.ratio_residues.is_empty() && self.ratio_all_zero()
    }
}

/// Reduces the ratio residues of `M` at level `t` modulo `Y`, whose basis
/// must be cached. Uses all ordered pairs of index tuples when there are at
/// most `cap`, else a seeded sample of `cap` pairs; output is sorted by
/// pair index.
pub fn ratio_relation_check<F: Field>(
    m: &PolyMatrix<F>,
    t: usize,
    y: &IdealHandle<F>,
    cap: usize,
    seed: u64,
) -> Result<Vec<RatioResidue>> {
    if t < 2 || m.rows() < 2 || m.cols() < 2 {
        return Err(Error::OutOfRange("ratio relations need t >= 2 and a matrix at least 2x2".into()));
    }
    if y.cached_basis().is_none() {
        return Err(Error::MissingBasis);
    }
    let (last_r, last_c) = (m.rows() - 1, m.cols() - 1);
    let tuples: Vec<MinorIndex> = combinations(last_r, t - 1)
        .into_iter()
        .flat_map(|i| combinations(last_c, t - 1).into_iter().map(move |j| (i.clone(), j)))
        .collect();
    let total = tuples.len() * tuples.len();
    let chosen: Vec<usize> = if total <= cap {
        (0..total).collect()
    } else {
        let mut v = sample(&mut ChaCha8Rng::seed_from_u64(seed), total, cap).into_vec();
        v.sort_unstable();
        v
    };
    let mut cache = MinorCache::new(m);
    let extend = |v: &[usize], last: usize| -> Vec<usize> {
        let mut out = v.to_vec();
        out.push(last);
        out
    };
    let mut out = Vec::with_capacity(chosen.len());
    for idx in chosen {
        let (a, b) = (&tuples[idx / tuples.len()], &tuples[idx % tuples.len()]);
        let big_a = cache.minor(&extend(&a.0, last_r), &extend(&a.1, last_c));
        let big_b = cache.minor(&extend(&b.0, last_r), &extend(&b.1, last_c));
        let small_a = cache.minor(&a.0, &a.1);
        let small_b = cache.minor(&b.0, &b.1);
        let residue = &(&big_a * &small_b) - &(&big_b * &small_a);
        out.push(RatioResidue {
            first: a.clone(),
            second: b.clone(),
            is_zero: y.normal_form(&residue)?.is_zero(),
        });
    }
    Ok(out)
}

/// One elementary biliaison at level `t`. Height mismatches trigger up to
/// `opts.max_reseeds` fresh row operations; a persistent mismatch is
/// returned in the step rather than as an error.
pub fn biliaison_step<F: Field>(
    m: &PolyMatrix<F>,
    t: usize,
    seed: u64,
    opts: &CheckOptions,
) -> Result<BiliaisonStep<F>> {
    let (rows, cols) = m.dims();
    let c = expected_codim(rows, cols, t)?;
    if t < 2 || (t == rows && rows == cols) {
        return Err(Error::Precondition(format!(
            "no biliaison step at t = {t} for a {rows}x{cols} matrix: already a complete intersection"
        )));
    }
    let mut tried = Vec::new();
    let mut last = None;
    for k in 0..=opts.max_reseeds as u64 {
        let s = if k == 0 { seed } else { derive_seed(seed, k) };
        tried.push(s);
        let (p, record) = generalized_row_ops(m, s)?;
        let Some(shift_a) = p.degree(rows - 1, cols - 1) else {
            continue;
        };
        let x = minors_ideal(&p, t, &opts.order)?;
        let mut y = ladder_minors_ideal(&p, t, &opts.order)?;
        let y_height = match y.compute_basis(opts.step_budget) {
            Ok(()) => measure_height(y.clone(), opts.step_budget)?,
            Err(Error::BudgetExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        let n = p.corner_submatrix()?;
        let xp = minors_ideal(&n, t - 1, &opts.order)?;
        let checks = vec![
            HeightReport::new(format!("X = I_{t}(M)"), measure_height(x, opts.step_budget)?, c, Comparison::Eq, Statement::Bil, Some(s)),
            HeightReport::new(format!("Y = I_{t}(L)"), y_height, c - 1, Comparison::Eq, Statement::Bil, Some(s)),
            HeightReport::new(format!("X' = I_{}(N)", t - 1), measure_height(xp, opts.step_budget)?, c, Comparison::Eq, Statement::Bil, Some(s)),
        ];
        if checks.iter().any(|r| r.verdict == Verdict::BudgetExceeded) {
            return Err(Error::BudgetExceeded { budget: opts.step_budget });
        }
        let matched = checks.iter().all(HeightReport::is_match);
        let residues = if matched {
            ratio_relation_check(&p, t, &y, opts.ratio_cap, derive_seed(s, u64::MAX))?
        } else {
            Vec::new()
        };
        let step = BiliaisonStep {
            level: t,
            matrix_before: p,
            y_ideal: y,
            successor: n,
            shift_a,
            height_checks: checks,
            ratio_residues: residues,
            row_op: record,
            seeds_tried: tried.clone(),
        };
        if matched {
            return Ok(step);
        }
        last = Some(step);
    }
    match last {
        Some(step) => Ok(step),
        None => Err(Error::Sampling(format!(
            "corner entry vanished after row operations for seeds {tried:?}"
        ))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureKind {
    HeightMismatch,
    RatioResidue,
    TerminalNotCi,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "state", rename_all = "kebab-case")]
pub enum ChainStatus {
    Certified,
    Failed {
        step: usize,
        kind: FailureKind,
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainParams {
    pub m: usize,
    pub n: usize,
    pub t: usize,
    pub field: String,
    pub order: String,
    pub master_seed: u64,
    pub ratio_cap: usize,
}

#[derive(Debug, Clone)]
pub struct Terminal<F: Field> {
    pub level: usize,
    pub matrix: PolyMatrix<F>,
    pub ideal: IdealHandle<F>,
    pub report: HeightReport,
    pub minimal_generators: usize,
    pub is_ci: bool,
    pub degree_sequence: Vec<u32>,
    pub note: String,
}

#[derive(Debug, Clone)]
pub struct ChainCertificate<F: Field> {
    pub params: ChainParams,
    pub steps: Vec<BiliaisonStep<F>>,
    pub terminal: Option<Terminal<F>>,
    pub status: ChainStatus,
    pub notes: Vec<String>,
}

impl<F: Field> ChainCertificate<F> {
    pub fn is_certified(&self) -> bool {
        self.status == ChainStatus::Certified
    }

    /// The serializable form; field order is fixed so output is
    /// reproducible byte for byte.
    pub fn record(&self) -> CertificateRecord {
        CertificateRecord {
            params: self.params.clone(),
            steps: self.steps.iter().map(StepRecord::from_step).collect(),
            terminal: self.terminal.as_ref().map(|t| TerminalRecord {
                level: t.level,
                generators: t.ideal.generators().iter().map(ToString::to_string).collect(),
                height: t.report.computed_height,
                predicted_height: t.report.predicted_height,
                minimal_generators: t.minimal_generators,
                is_ci: t.is_ci,
                degree_sequence: t.degree_sequence.clone(),
                note: t.note.clone(),
            }),
            status: self.status.clone(),
            notes: self.notes.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeightRecord {
    pub desc: String,
    pub computed: Option<usize>,
    pub predicted: usize,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepRecord {
    pub level: usize,
    pub row_op_seed: u64,
    pub seeds_tried: Vec<u64>,
    pub matrix_after_row_ops: Vec<Vec<String>>,
    #[serde(rename = "Y_generators")]
    pub y_generators: Vec<String>,
    pub heights: Vec<HeightRecord>,
    pub shift_a: u32,
    pub ratio_pairs_checked: usize,
    pub ratio_all_zero: bool,
    pub successor_matrix: Vec<Vec<String>>,
}

impl StepRecord {
    fn from_step<F: Field>(s: &BiliaisonStep<F>) -> Self {
        Self {
            level: s.level,
            row_op_seed: s.row_op.seed,
            seeds_tried: s.seeds_tried.clone(),
            matrix_after_row_ops: s.matrix_before.to_string_grid(),
            y_generators: s.y_ideal.generators().iter().map(ToString::to_string).collect(),
            heights: s
                .height_checks
                .iter()
                .map(|r| HeightRecord {
                    desc: r.ideal_desc.clone(),
                    computed: r.computed_height,
                    predicted: r.predicted_height,
                    verdict: r.verdict,
                })
                .collect(),
            shift_a: s.shift_a,
            ratio_pairs_checked: s.ratio_residues.len(),
            ratio_all_zero: s.ratio_all_zero(),
            successor_matrix: s.successor.to_string_grid(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TerminalRecord {
    pub level: usize,
    pub generators: Vec<String>,
    pub height: Option<usize>,
    pub predicted_height: usize,
    pub minimal_generators: usize,
    pub is_ci: bool,
    pub degree_sequence: Vec<u32>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateRecord {
    pub params: ChainParams,
    pub steps: Vec<StepRecord>,
    pub terminal: Option<TerminalRecord>,
    pub status: ChainStatus,
    pub notes: Vec<String>,
}

fn terminal<F: Field>(m: &PolyMatrix<F>, level: usize, c: usize, opts: &CheckOptions) -> Result<Terminal<F>> {
    let mut ideal = minors_ideal(m, level, &opts.order)?;
    ideal.compute_basis(opts.step_budget)?;
    let height = measure_height(ideal.clone(), opts.step_budget)?;
    let report = HeightReport::new(
        format!("I_{level}(N) at the end of the chain"),
        height,
        c,
        Comparison::Eq,
        Statement::Bil,
        None,
    );
    let minimal_generators = ideal.minimal_generator_count(opts.step_budget)?;
    let is_ci = height == Some(minimal_generators);
    let mut degree_sequence: Vec<u32> = ideal
        .generators()
        .iter()
        .filter_map(|g| g.homogeneous_degree())
        .collect();
    degree_sequence.sort_unstable();
    let note = if is_ci {
        format!(
            "complete intersection of type {degree_sequence:?}; descending CI-biliaisons reach a linear variety"
        )
    } else {
        "terminal ideal is not a complete intersection".to_string()
    };
    Ok(Terminal {
        level,
        matrix: m.clone(),
        ideal,
        report,
        minimal_generators,
        is_ci,
        degree_sequence,
        note,
    })
}

/// Runs biliaison steps from `(M, t)` until `t = 1` or `t = m = n`, then
/// checks that the final ideal is a complete intersection of height `c`.
pub fn full_chain<F: Field>(
    m: &PolyMatrix<F>,
    t: usize,
    master_seed: u64,
    opts: &CheckOptions,
) -> Result<ChainCertificate<F>> {
    let (rows, cols) = m.dims();
    let c = expected_codim(rows, cols, t)?;
    let base = crate::checks::is_determinantal(m, t, opts)?;
    match base.verdict {
        Verdict::Match => {}
        Verdict::BudgetExceeded => return Err(Error::BudgetExceeded { budget: opts.step_budget }),
        Verdict::Mismatch => {
            return Err(Error::Precondition(format!("not a determinantal scheme: {base}")))
        }
    }
    let mut cert = ChainCertificate {
        params: ChainParams {
            m: rows,
            n: cols,
            t,
            field: m.field().spec().to_string(),
            order: opts.order.to_string(),
            master_seed,
            ratio_cap: opts.ratio_cap,
        },
        steps: Vec::new(),
        terminal: None,
        status: ChainStatus::Certified,
        notes: vec![format!(
            "steps count the ascending biliaisons only ({} for t = {t}); a count of t steps would include the final descent",
            if t == rows && rows == cols { 0 } else { t - 1 }
        )],
    };
    let mut cur = m.clone();
    let mut level = t;
    let mut index = 0u64;
    while !(level == 1 || (level == cur.rows() && cur.rows() == cur.cols())) {
        let step = biliaison_step(&cur, level, derive_seed(master_seed, index), opts)?;
        let failure = if !step.heights_match() {
            Some((FailureKind::HeightMismatch, "height check failed after reseeding".to_string()))
        } else if !step.ratio_all_zero() {
            let bad = step.ratio_residues.iter().filter(|r| !r.is_zero).count();
            Some((FailureKind::RatioResidue, format!("{bad} ratio residues do not reduce to zero")))
        } else {
            None
        };
        let next = step.successor.clone();
        cert.steps.push(step);
        if let Some((kind, reason)) = failure {
            cert.status = ChainStatus::Failed { step: index as usize, kind, reason };
            return Ok(cert);
        }
        cur = next;
        level -= 1;
        index += 1;
    }
    let term = terminal(&cur, level, c, opts)?;
    if term.report.verdict == Verdict::BudgetExceeded {
        return Err(Error::BudgetExceeded { budget: opts.step_budget });
    }
    if !(term.is_ci && term.report.is_match()) {
        cert.status = ChainStatus::Failed {
            step: index as usize,
            kind: FailureKind::TerminalNotCi,
            reason: format!(
                "terminal height {:?}, minimal generators {}, expected a complete intersection of height {c}",
                term.report.computed_height, term.minimal_generators
            ),
        };
    }
    cert.terminal = Some(term);
    Ok(cert)
}

/// Graded Betti shifts of a minimal free resolution: the twists of the first
/// and of the last module, for an ideal of height `codim`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiShifts {
    pub codim: usize,
    pub first_shifts: Vec<u64>,
    pub last_shifts: Vec<u64>,
}

impl BettiShifts {
    pub fn new(codim: usize, first_shifts: Vec<u64>, last_shifts: Vec<u64>) -> Result<Self> {
        let b = Self { codim, first_shifts, last_shifts };
        b.validate()?;
        Ok(b)
    }

    pub fn validate(&self) -> Result<()> {
        if self.codim == 0 {
            return Err(Error::Malformed("codimension must be positive".into()));
        }
        if self.first_shifts.is_empty() || self.last_shifts.is_empty() {
            return Err(Error::Malformed("shift lists must be nonempty".into()));
        }
        if self.first_shifts.iter().chain(&self.last_shifts).any(|&s| s == 0) {
            return Err(Error::Malformed("shifts must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LicciVerdict {
    NotLicci,
    Inconclusive,
}

/// Not licci when `max(last) <= (c-1) * min(first)`; the criterion says
/// nothing otherwise.
pub fn huneke_ulrich_licci(b: &BettiShifts) -> Result<LicciVerdict> {
    b.validate()?;
    let max_last = *b.last_shifts.iter().max().expect("nonempty");
    let min_first = *b.first_shifts.iter().min().expect("nonempty");
    Ok(if max_last <= (b.codim as u64 - 1) * min_first {
        LicciVerdict::NotLicci
    } else {
        LicciVerdict::Inconclusive
    })
}
