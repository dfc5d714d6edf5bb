//! Gröbner-backed verifiers for height statements about determinantal
//! ideals. Every verifier returns a [`HeightReport`]; mismatches are data,
//! not errors.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::formulas::{ci_classification, expected_codim, CiClass, CiVariant};
use crate::ideal::{IdealHandle, DEFAULT_STEP_BUDGET};
use crate::matrix::PolyMatrix;
use crate::minors::{combinations, ladder_minors_ideal, minors_ideal, LadderMask};
use crate::monomial::MonomialOrder;
use crate::rowops::{derive_seed, generalized_column_ops, generalized_row_ops};

/// Number of variables above which generic instances need an override.
pub const GUARDRAIL_VARS: usize = 20;
pub const DEFAULT_RATIO_CAP: usize = 100;
pub const DEFAULT_RESEEDS: usize = 3;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOptions {
    pub order: MonomialOrder,
    pub step_budget: u64,
    pub guardrail_override: bool,
    pub ratio_cap: usize,
    pub max_reseeds: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            order: MonomialOrder::grevlex(),
            step_budget: DEFAULT_STEP_BUDGET,
            guardrail_override: false,
            ratio_cap: DEFAULT_RATIO_CAP,
            max_reseeds: DEFAULT_RESEEDS,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Statement {
    Codim,
    Gooddet,
    Del,
    Ci,
    Ladder,
    Laddcanc,
    HerzogTrung,
    Detgci,
    Bil,
}

impl Statement {
    pub fn tag(self) -> &'static str {
        match self {
            Statement::Codim => "codim",
            Statement::Gooddet => "gooddet",
            Statement::Del => "del",
            Statement::Ci => "ci",
            Statement::Ladder => "ladder",
            Statement::Laddcanc => "laddcanc",
            Statement::HerzogTrung => "herzog-trung",
            Statement::Detgci => "detgci",
            Statement::Bil => "bil",
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Comparison {
    Eq,
    Ge,
    Le,
}

impl Comparison {
    pub fn holds(self, computed: usize, predicted: usize) -> bool {
        match self {
            Comparison::Eq => computed == predicted,
            Comparison::Ge => computed >= predicted,
            Comparison::Le => computed <= predicted,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Comparison::Eq => "=",
            Comparison::Ge => ">=",
            Comparison::Le => "<=",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Match,
    Mismatch,
    BudgetExceeded,
}

/// Outcome of one height check. `computed_height` is `None` when the
/// Gröbner budget ran out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeightReport {
    pub ideal_desc: String,
    pub computed_height: Option<usize>,
    pub predicted_height: usize,
    pub comparison: Comparison,
    pub statement: Statement,
    pub verdict: Verdict,
    pub seed: Option<u64>,
    pub seeds_tried: Vec<u64>,
    pub notes: Vec<String>,
}

impl HeightReport {
    pub fn new(
        ideal_desc: impl Into<String>,
        computed_height: Option<usize>,
        predicted_height: usize,
        comparison: Comparison,
        statement: Statement,
        seed: Option<u64>,
    ) -> Self {
        let verdict = match computed_height {
            None => Verdict::BudgetExceeded,
            Some(h) if comparison.holds(h, predicted_height) => Verdict::Match,
            Some(_) => Verdict::Mismatch,
        };
        Self {
            ideal_desc: ideal_desc.into(),
            computed_height,
            predicted_height,
            comparison,
            statement,
            verdict,
            seed,
            seeds_tried: seed.into_iter().collect(),
            notes: Vec::new(),
        }
    }

    pub fn is_match(&self) -> bool {
        self.verdict == Verdict::Match
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

impl fmt::Display for HeightReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let computed = self
            .computed_height
            .map_or_else(|| "?".to_string(), |h| h.to_string());
        write!(
            f,
            "[{}] ht {} = {computed}, expected {} {}: {:?}",
            self.statement,
            self.ideal_desc,
            self.comparison.symbol(),
            self.predicted_height,
            self.verdict
        )?;
        if let Some(s) = self.seed {
            write!(f, " (seed {s})")?;
        }
        for n in &self.notes {
            write!(f, "\n  note: {n}")?;
        }
        Ok(())
    }
}

/// Height of `ideal`, or `None` when the budget is exhausted.
pub fn measure_height<F: Field>(ideal: IdealHandle<F>, budget: u64) -> Result<Option<usize>> {
    let mut ideal = ideal;
    match ideal.height(budget) {
        Ok(h) => Ok(Some(h)),
        Err(Error::BudgetExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Refuses generic `m x n` instances with more than [`GUARDRAIL_VARS`]
/// variables unless overridden.
pub fn guard_generic(m: usize, n: usize, opts: &CheckOptions) -> Result<()> {
    if m * n > GUARDRAIL_VARS && !opts.guardrail_override {
        return Err(Error::Guardrail(format!(
            "generic {m}x{n} instance has {} variables (limit {GUARDRAIL_VARS})",
            m * n
        )));
    }
    Ok(())
}

fn height_of_minors<F: Field>(m: &PolyMatrix<F>, t: usize, opts: &CheckOptions) -> Result<Option<usize>> {
    measure_height(minors_ideal(m, t, &opts.order)?, opts.step_budget)
}

fn height_of_ladder<F: Field>(m: &PolyMatrix<F>, t: usize, opts: &CheckOptions) -> Result<Option<usize>> {
    measure_height(ladder_minors_ideal(m, t, &opts.order)?, opts.step_budget)
}

/// Runs `attempt` with the base seed and up to `max_reseeds` derived seeds
/// until it matches. The returned report lists every seed tried.
fn with_reseeds<T>(
    seed: u64,
    opts: &CheckOptions,
    mut attempt: impl FnMut(u64) -> Result<(HeightReport, T)>,
) -> Result<(HeightReport, T)> {
    let mut tried = Vec::new();
    let mut k = 0u64;
    loop {
        let s = if k == 0 { seed } else { derive_seed(seed, k) };
        tried.push(s);
        let (mut report, extra) = attempt(s)?;
        let stop = report.verdict != Verdict::Mismatch || k as usize >= opts.max_reseeds;
        if stop {
            if tried.len() > 1 {
                report.notes.push(format!("{} seeds tried", tried.len()));
            }
            report.seeds_tried = tried;
            return Ok((report, extra));
        }
        k += 1;
    }
}

fn require_range<F: Field>(m: &PolyMatrix<F>, t: usize) -> Result<usize> {
    expected_codim(m.rows(), m.cols(), t)
}

/// `ht I_t(M)` against `(m-t+1)(n-t+1)`.
pub fn is_determinantal<F: Field>(m: &PolyMatrix<F>, t: usize, opts: &CheckOptions) -> Result<HeightReport> {
    let c = require_range(m, t)?;
    let h = height_of_minors(m, t, opts)?;
    Ok(HeightReport::new(
        format!("I_{t}(M), M {}x{}", m.rows(), m.cols()),
        h,
        c,
        Comparison::Eq,
        Statement::Codim,
        None,
    ))
}

fn ensure_determinantal<F: Field>(m: &PolyMatrix<F>, t: usize, opts: &CheckOptions) -> Result<usize> {
    let r = is_determinantal(m, t, opts)?;
    match r.verdict {
        Verdict::Match => Ok(r.predicted_height),
        Verdict::BudgetExceeded => Err(Error::BudgetExceeded { budget: opts.step_budget }),
        Verdict::Mismatch => Err(Error::Precondition(format!(
            "M is not determinantal for t = {t}: {r}"
        ))),
    }
}

/// `d = ht I_{t-1}(M)`: the scheme is locally a complete intersection
/// outside a subscheme of codimension `d`. Matches when `d > c`, i.e. the
/// scheme is generically a complete intersection.
pub fn local_ci_radius<F: Field>(m: &PolyMatrix<F>, t: usize, opts: &CheckOptions) -> Result<HeightReport> {
    if t < 2 {
        return Err(Error::OutOfRange("local CI radius needs t >= 2".into()));
    }
    let c = require_range(m, t)?;
    let h = height_of_minors(m, t - 1, opts)?;
    let mut r = HeightReport::new(
        format!("I_{}(M)", t - 1),
        h,
        c + 1,
        Comparison::Ge,
        Statement::Detgci,
        None,
    );
    if let Some(d) = h {
        r.notes.push(format!(
            "locally a complete intersection outside codimension d for every d <= {d}"
        ));
    }
    if ci_classification(m.rows(), m.cols(), t, CiVariant::FullMinors)? == CiClass::CompleteIntersection {
        r.notes.push(
            "warning: X is a complete intersection, where the height criterion is not equivalent to local CI"
                .into(),
        );
    }
    Ok(r)
}

/// Deletes stored column `j` of a determinantal `M`; checks
/// `ht I_t(O) = (m-t+1)(n-t)` and, for `t >= 2`, `ht I_{t-1}(O) >= c`.
pub fn verify_column_deletion<F: Field>(
    m: &PolyMatrix<F>,
    t: usize,
    j: usize,
    opts: &CheckOptions,
) -> Result<(HeightReport, Option<HeightReport>)> {
    let c = ensure_determinantal(m, t, opts)?;
    let (rows, cols) = m.dims();
    let o = m.delete_column(j)?;
    let first = HeightReport::new(
        format!("I_{t}(O), O = M without column {}", j + 1),
        height_of_minors(&o, t, opts)?,
        (rows - t + 1) * (cols - t),
        Comparison::Eq,
        Statement::Gooddet,
        None,
    );
    let second = if t >= 2 {
        Some(HeightReport::new(
            format!("I_{}(O)", t - 1),
            height_of_minors(&o, t - 1, opts)?,
            c,
            Comparison::Ge,
            Statement::Gooddet,
            None,
        ))
    } else {
        None
    };
    Ok((first, second))
}

/// `O` is the `m x (n-1)` matrix left after deleting a column of an
/// `m x n` matrix with `m <= n`; `original_dims = (m, n)`. Applies generic
/// row operations to `O`, deletes the last row and checks
/// `ht I_{t-1}(N) = (m-t+1)(n-t+1)`.
///
/// `O` may be stored transposed (when `m = n`); its rows are then the
/// stored columns. The original dimensions are needed because a stored
/// `a x (a+1)` matrix arises both ways.
pub fn verify_row_deletion<F: Field>(
    o: &PolyMatrix<F>,
    t: usize,
    original_dims: (usize, usize),
    seed: u64,
    opts: &CheckOptions,
) -> Result<HeightReport> {
    let (m, n) = original_dims;
    let c = expected_codim(m, n, t)?;
    if t < 2 {
        return Err(Error::OutOfRange("row deletion needs t >= 2".into()));
    }
    let rows_are_stored_rows = if o.dims() == (m, n - 1) {
        true
    } else if o.dims() == (n - 1, m) {
        false
    } else {
        return Err(Error::Precondition(format!(
            "O is stored {}x{}, not {m}x{} in either orientation",
            o.rows(),
            o.cols(),
            n - 1
        )));
    };
    let base = HeightReport::new(
        format!("I_{t}(O)"),
        height_of_minors(o, t, opts)?,
        (m - t + 1) * (n - t),
        Comparison::Eq,
        Statement::Del,
        None,
    );
    if !base.is_match() {
        return Ok(base.with_note("precondition on O failed; no row deleted"));
    }
    let (report, ()) = with_reseeds(seed, opts, |s| {
        let nmat = if rows_are_stored_rows {
            let (p, _) = generalized_row_ops(o, s)?;
            p.delete_row(p.rows() - 1)?
        } else {
            let (p, _) = generalized_column_ops(o, s)?;
            p.delete_column(p.cols() - 1)?
        };
        let r = HeightReport::new(
            format!("I_{}(N), N = O without a generalized row", t - 1),
            height_of_minors(&nmat, t - 1, opts)?,
            c,
            Comparison::Eq,
            Statement::Del,
            Some(s),
        );
        Ok((r, ()))
    })?;
    Ok(report)
}

fn generic_ops<F: Field>(m: &PolyMatrix<F>, seed: u64) -> Result<PolyMatrix<F>> {
    let (p, _) = generalized_row_ops(m, seed)?;
    let (q, _) = generalized_column_ops(&p, derive_seed(seed, u64::MAX))?;
    Ok(q)
}

fn entry_ideal_report<F: Field>(
    h: &PolyMatrix<F>,
    desc: String,
    opts: &CheckOptions,
    seed: u64,
) -> Result<HeightReport> {
    let size = h.rows() * h.cols();
    Ok(HeightReport::new(
        desc,
        height_of_minors(h, 1, opts)?,
        size,
        Comparison::Eq,
        Statement::Ci,
        Some(seed),
    ))
}

/// After generic row and column operations the leading
/// `(m-t+1) x (n-t+1)` block has entries forming a regular sequence:
/// `ht I_1(H)` equals the number of entries.
pub fn verify_regular_sequence<F: Field>(
    m: &PolyMatrix<F>,
    t: usize,
    seed: u64,
    opts: &CheckOptions,
) -> Result<HeightReport> {
    ensure_determinantal(m, t, opts)?;
    let (a, b) = (m.rows() - t + 1, m.cols() - t + 1);
    let (report, ()) = with_reseeds(seed, opts, |s| {
        let g = generic_ops(m, s)?;
        let rows: Vec<usize> = (0..a).collect();
        let cols: Vec<usize> = (0..b).collect();
        let h = g.submatrix(&rows, &cols)?;
        Ok((entry_ideal_report(&h, format!("I_1(H), H the leading {a}x{b} block"), opts, s)?, ()))
    })?;
    Ok(report)
}

/// Same check for every `(m-t+1) x (n-t+1)` submatrix of one seeded generic
/// transform, in lexicographic (rows, cols) order.
pub fn regular_sequence_sweep<F: Field>(
    m: &PolyMatrix<F>,
    t: usize,
    seed: u64,
    opts: &CheckOptions,
) -> Result<Vec<HeightReport>> {
    ensure_determinantal(m, t, opts)?;
    let (a, b) = (m.rows() - t + 1, m.cols() - t + 1);
    let g = generic_ops(m, seed)?;
    let mut out = Vec::new();
    for rows in combinations(m.rows(), a) {
        for cols in combinations(m.cols(), b) {
            let h = g.submatrix(&rows, &cols)?;
            let desc = format!("I_1(H), H on rows {:?} cols {:?}", one_based(&rows), one_based(&cols));
            out.push(entry_ideal_report(&h, desc, opts, seed)?);
        }
    }
    Ok(out)
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

/// The three ladder checks after one generic row transform.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LadderReports {
    /// `ht I_t(L) = c - 1`.
    pub ladder: HeightReport,
    /// `ht I_{t-1}(N) = c` for the corner submatrix `N`.
    pub corner: HeightReport,
    /// `ht I_t(L) >= ht I_{t-1}(K)`, `K` the ladder of `N`.
    pub laddcanc: HeightReport,
}

impl LadderReports {
    pub fn all_match(&self) -> bool {
        self.ladder.is_match() && self.corner.is_match() && self.laddcanc.is_match()
    }

    pub fn reports(&self) -> [&HeightReport; 3] {
        [&self.ladder, &self.corner, &self.laddcanc]
    }
}

pub fn verify_ladder_height<F: Field>(
    m: &PolyMatrix<F>,
    t: usize,
    seed: u64,
    opts: &CheckOptions,
) -> Result<LadderReports> {
    if t < 2 {
        return Err(Error::OutOfRange("ladder checks need t >= 2".into()));
    }
    let c = ensure_determinantal(m, t, opts)?;
    let (summary, mut reports) = with_reseeds(seed, opts, |s| {
        let (p, _) = generalized_row_ops(m, s)?;
        let hl = height_of_ladder(&p, t, opts)?;
        let ladder = HeightReport::new(format!("I_{t}(L)"), hl, c - 1, Comparison::Eq, Statement::Ladder, Some(s));
        let n = p.corner_submatrix()?;
        let corner = HeightReport::new(
            format!("I_{}(N), N the corner submatrix", t - 1),
            height_of_minors(&n, t - 1, opts)?,
            c,
            Comparison::Eq,
            Statement::Ladder,
            Some(s),
        );
        let laddcanc = laddcanc_report(&n, t, hl, opts, s)?;
        // the reseed loop keys on the combined verdict
        let combined = if ladder.verdict == Verdict::BudgetExceeded || corner.verdict == Verdict::BudgetExceeded {
            Verdict::BudgetExceeded
        } else if ladder.is_match() && corner.is_match() && laddcanc.is_match() {
            Verdict::Match
        } else {
            Verdict::Mismatch
        };
        let mut summary = ladder.clone();
        summary.verdict = combined;
        Ok((summary, LadderReports { ladder, corner, laddcanc }))
    })?;
    for r in [&mut reports.ladder, &mut reports.corner, &mut reports.laddcanc] {
        r.seeds_tried = summary.seeds_tried.clone();
    }
    Ok(reports)
}

fn laddcanc_report<F: Field>(
    n: &PolyMatrix<F>,
    t: usize,
    ladder_height: Option<usize>,
    opts: &CheckOptions,
    seed: u64,
) -> Result<HeightReport> {
    let k = LadderMask::corner(n.clone()).minors_ideal(t - 1, &opts.order)?;
    let hk = measure_height(k, opts.step_budget)?;
    let mut r = match hk {
        Some(hk) => HeightReport::new("I_t(L) against I_{t-1}(K)", ladder_height, hk, Comparison::Ge, Statement::Laddcanc, Some(seed)),
        None => HeightReport::new("I_t(L) against I_{t-1}(K)", None, 0, Comparison::Ge, Statement::Laddcanc, Some(seed)),
    };
    if let Some(hk) = hk {
        r.notes.push(format!("ht I_{}(K) = {hk}", t - 1));
    }
    Ok(r)
}

/// The inequality `ht I_t(L) >= ht I_{t-1}(K)` alone.
pub fn verify_laddcanc<F: Field>(
    m: &PolyMatrix<F>,
    t: usize,
    seed: u64,
    opts: &CheckOptions,
) -> Result<HeightReport> {
    Ok(verify_ladder_height(m, t, seed, opts)?.laddcanc)
}

/// `ht I_t(L) = (m-t+1)(n-t+1) - 1` for the generic `m x n` matrix over `field`.
pub fn herzog_trung_check<F: Field>(
    field: F,
    m: usize,
    n: usize,
    t: usize,
    opts: &CheckOptions,
) -> Result<HeightReport> {
    let c = expected_codim(m, n, t)?;
    guard_generic(m, n, opts)?;
    let g = PolyMatrix::generic(field, m, n)?;
    Ok(HeightReport::new(
        format!("I_{t}(L), L the generic {m}x{n} ladder"),
        height_of_ladder(&g, t, opts)?,
        c - 1,
        Comparison::Eq,
        Statement::HerzogTrung,
        None,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::parse::parse_polynomial;

    fn fp() -> PrimeField {
        PrimeField::default()
    }

    fn generic(m: usize, n: usize) -> PolyMatrix<PrimeField> {
        PolyMatrix::generic(fp(), m, n).unwrap()
    }

    fn opts() -> CheckOptions {
        CheckOptions::default()
    }

    #[test]
    fn determinantal_examples() {
        let r = is_determinantal(&generic(3, 3), 2, &opts()).unwrap();
        assert_eq!((r.computed_height, r.predicted_height, r.verdict), (Some(4), 4, Verdict::Match));

        let x0 = parse_polynomial("x0", Rationals, 2).unwrap();
        let h = PolyMatrix::hyper(&x0, 3).unwrap();
        let r = is_determinantal(&h, 3, &opts()).unwrap();
        assert_eq!((r.computed_height, r.verdict), (Some(1), Verdict::Match));

        let grid = vec![vec![x0.clone(), x0.clone()], vec![x0.clone(), x0.clone()]];
        let flat = PolyMatrix::from_rows(Rationals, 2, grid).unwrap();
        let r = is_determinantal(&flat, 2, &opts()).unwrap();
        assert_eq!((r.computed_height, r.verdict), (Some(0), Verdict::Mismatch));
    }

    #[test]
    fn local_ci_examples() {
        let r = local_ci_radius(&generic(3, 3), 2, &opts()).unwrap();
        assert_eq!(r.computed_height, Some(9));
        let r = local_ci_radius(&generic(2, 3), 2, &opts()).unwrap();
        assert_eq!((r.computed_height, r.verdict), (Some(6), Verdict::Match));
        let x0 = parse_polynomial("x0", fp(), 3).unwrap();
        let r = local_ci_radius(&PolyMatrix::hyper(&x0, 3).unwrap(), 3, &opts()).unwrap();
        assert_eq!(r.computed_height, Some(1));
        assert!(r.notes.iter().any(|n| n.starts_with("warning")));
        assert!(local_ci_radius(&generic(2, 3), 1, &opts()).is_err());
    }

    #[test]
    fn column_deletion_examples() {
        let (a, b) = verify_column_deletion(&generic(3, 3), 2, 2, &opts()).unwrap();
        assert_eq!((a.computed_height, a.predicted_height, a.verdict), (Some(2), 2, Verdict::Match));
        let b = b.unwrap();
        assert_eq!((b.computed_height, b.verdict), (Some(6), Verdict::Match));
        let (a, _) = verify_column_deletion(&generic(2, 3), 2, 2, &opts()).unwrap();
        assert_eq!((a.computed_height, a.verdict), (Some(1), Verdict::Match));
        let (_, none) = verify_column_deletion(&generic(2, 3), 1, 2, &opts()).unwrap();
        assert!(none.is_none());

        let x0 = parse_polynomial("x0", fp(), 2).unwrap();
        let flat = PolyMatrix::from_rows(fp(), 2, vec![vec![x0.clone(), x0.clone()], vec![x0.clone(), x0]]).unwrap();
        assert!(matches!(verify_column_deletion(&flat, 2, 1, &opts()), Err(Error::Precondition(_))));
    }

    #[test]
    fn row_deletion_examples() {
        let o = generic(3, 3).delete_column(2).unwrap();
        assert!(o.is_transposed());
        let r = verify_row_deletion(&o, 2, (3, 3), 1, &opts()).unwrap();
        assert_eq!((r.computed_height, r.predicted_height, r.verdict), (Some(4), 4, Verdict::Match));
        let o = generic(2, 3).delete_column(2).unwrap();
        let r = verify_row_deletion(&o, 2, (2, 3), 1, &opts()).unwrap();
        assert_eq!((r.computed_height, r.verdict), (Some(2), Verdict::Match));
        assert!(verify_row_deletion(&o, 2, (3, 5), 1, &opts()).is_err());
    }

    #[test]
    fn regular_sequence_examples() {
        let r = verify_regular_sequence(&generic(3, 3), 2, 4, &opts()).unwrap();
        assert_eq!((r.computed_height, r.verdict), (Some(4), Verdict::Match));
        let r = verify_regular_sequence(&generic(2, 3), 1, 4, &opts()).unwrap();
        assert_eq!(r.computed_height, Some(6));
        let sweep = regular_sequence_sweep(&generic(3, 3), 2, 4, &opts()).unwrap();
        assert_eq!(sweep.len(), 9);
        assert!(sweep.iter().all(HeightReport::is_match));
    }

    #[test]
    fn ladder_examples() {
        let r = verify_ladder_height(&generic(3, 3), 2, 9, &opts()).unwrap();
        assert_eq!(r.ladder.computed_height, Some(3));
        assert_eq!(r.corner.computed_height, Some(4));
        assert_eq!((r.laddcanc.computed_height, r.laddcanc.predicted_height), (Some(3), 3));
        assert!(r.all_match());
        let r = verify_ladder_height(&generic(2, 3), 2, 9, &opts()).unwrap();
        assert_eq!((r.ladder.computed_height, r.ladder.verdict), (Some(1), Verdict::Match));
    }

    #[test]
    fn herzog_trung_examples() {
        let o = opts();
        assert_eq!(herzog_trung_check(fp(), 3, 3, 2, &o).unwrap().computed_height, Some(3));
        assert_eq!(herzog_trung_check(fp(), 2, 3, 2, &o).unwrap().computed_height, Some(1));
        let r = herzog_trung_check(fp(), 2, 2, 2, &o).unwrap();
        assert_eq!((r.computed_height, r.verdict), (Some(0), Verdict::Match));
        assert!(matches!(herzog_trung_check(fp(), 3, 7, 2, &o), Err(Error::Guardrail(_))));
    }

    #[test]
    fn budget_becomes_verdict() {
        let o = CheckOptions { step_budget: 1, ..opts() };
        let r = is_determinantal(&generic(3, 3), 2, &o).unwrap();
        assert_eq!((r.computed_height, r.verdict), (None, Verdict::BudgetExceeded));
    }

    #[test]
    fn report_serializes_flat() {
        let r = HeightReport::new("I", Some(2), 2, Comparison::Eq, Statement::HerzogTrung, Some(5));
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["statement"], "herzog-trung");
        assert_eq!(v["verdict"], "match");
        assert_eq!(v["seeds_tried"], serde_json::json!([5]));
    }
}
