//! Minors, ideals of minors and ladder ideals.
//!
//! Determinants are expanded along the first row of each submatrix. The
//! cache is keyed by (row set, column set) bitmasks, so every minor sharing a
//! row suffix reuses the sub-determinants already computed.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::IdealHandle;
use crate::matrix::PolyMatrix;
use crate::monomial::MonomialOrder;
use crate::polynomial::Polynomial;

/// One minor `M_{rows; cols}` with 0-based strictly increasing indices.
#[derive(Debug, Clone, PartialEq)]
pub struct Minor<F: Field> {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: Polynomial<F>,
}

/// Shared sub-determinant cache for one matrix.
pub struct MinorCache<'a, F: Field> {
    matrix: &'a PolyMatrix<F>,
    memo: HashMap<(u64, u64), Polynomial<F>>,
}

impl<'a, F: Field> MinorCache<'a, F> {
    pub fn new(matrix: &'a PolyMatrix<F>) -> Self {
        assert!(
            matrix.rows() <= 64 && matrix.cols() <= 64,
            "minor cache supports at most 64 rows and columns"
        );
        Self {
            matrix,
            memo: HashMap::new(),
        }
    }

    /// Determinant of the submatrix on `rows` x `cols` (equal lengths).
    pub fn minor(&mut self, rows: &[usize], cols: &[usize]) -> Polynomial<F> {
        assert_eq!(rows.len(), cols.len(), "minor needs a square index set");
        let rmask = rows.iter().fold(0u64, |a, &i| a | 1 << i);
        let cmask = cols.iter().fold(0u64, |a, &j| a | 1 << j);
        self.minor_masked(rmask, cmask)
    }

    fn minor_masked(&mut self, rmask: u64, cmask: u64) -> Polynomial<F> {
        let m = self.matrix;
        if rmask == 0 {
            return Polynomial::one(m.field().clone(), m.num_vars());
        }
        if let Some(p) = self.memo.get(&(rmask, cmask)) {
            return p.clone();
        }
        let r0 = rmask.trailing_zeros() as usize;
        let rest = rmask & (rmask - 1);
        let mut acc = Polynomial::zero(m.field().clone(), m.num_vars());
        let mut bits = cmask;
        let mut sign_positive = true;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let entry = m.entry(r0, j);
            if !entry.is_zero() {
                let sub = self.minor_masked(rest, cmask & !(1 << j));
                if !sub.is_zero() {
                    let term = entry * &sub;
                    acc = if sign_positive { &acc + &term } else { &acc - &term };
                }
            }
            sign_positive = !sign_positive;
        }
        self.memo.insert((rmask, cmask), acc.clone());
        acc
    }
}

/// Determinant of a square matrix.
pub fn determinant<F: Field>(m: &PolyMatrix<F>) -> Result<Polynomial<F>> {
    if m.rows() != m.cols() {
        return Err(Error::OutOfRange(format!(
            "determinant of a non-square {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let idx: Vec<usize> = (0..m.rows()).collect();
    Ok(MinorCache::new(m).minor(&idx, &idx))
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // find rightmost index that can move
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - k + i {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for l in i + 1..k {
            cur[l] = cur[l - 1] + 1;
        }
    }
}

/// All `t x t` minors, lexicographic in (row tuple, column tuple).
pub fn all_minors<F: Field>(m: &PolyMatrix<F>, t: usize) -> Vec<Minor<F>> {
    let mut cache = MinorCache::new(m);
    let row_sets = combinations(m.rows(), t);
    let col_sets = combinations(m.cols(), t);
    let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
    for rows in &row_sets {
        for cols in &col_sets {
            let value = cache.minor(rows, cols);
            out.push(Minor {
                rows: rows.clone(),
                cols: cols.clone(),
                value,
            });
        }
    }
    out
}

/// Outcome of a t-homogeneity check. Counterexample indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum THomogeneity {
    Pass,
    Fail {
        size: usize,
        rows: Vec<usize>,
        cols: Vec<usize>,
    },
}

impl THomogeneity {
    pub fn is_pass(&self) -> bool {
        matches!(self, THomogeneity::Pass)
    }

    pub fn into_result(self, t: usize) -> Result<()> {
        match self {
            THomogeneity::Pass => Ok(()),
            THomogeneity::Fail { size, rows, cols } => Err(Error::NotTHomogeneous {
                t,
                size,
                rows: rows.iter().map(|i| i + 1).collect(),
                cols: cols.iter().map(|j| j + 1).collect(),
            }),
        }
    }
}

/// Checks that every `s x s` minor with `s <= t` is homogeneous; reports the
/// first failure by size, then lexicographic index tuple.
pub fn check_t_homogeneous<F: Field>(m: &PolyMatrix<F>, t: usize) -> Result<THomogeneity> {
    if t == 0 || t > m.rows() {
        return Err(Error::OutOfRange(format!(
            "t = {t} outside 1..={}",
            m.rows()
        )));
    }
    let mut cache = MinorCache::new(m);
    for s in 1..=t {
        for rows in combinations(m.rows(), s) {
            for cols in combinations(m.cols(), s) {
                if !cache.minor(&rows, &cols).is_homogeneous() {
                    return Ok(THomogeneity::Fail { size: s, rows, cols });
                }
            }
        }
    }
    Ok(THomogeneity::Pass)
}

fn ensure_t_homogeneous<F: Field>(m: &PolyMatrix<F>, t: usize) -> Result<()> {
    if t == 0 {
        return Err(Error::OutOfRange("t must be positive".into()));
    }
    check_t_homogeneous(m, t.min(m.rows()))?.into_result(t)
}

fn ideal_of<F: Field>(
    m: &PolyMatrix<F>,
    minors: impl IntoIterator<Item = Minor<F>>,
    order: &MonomialOrder,
) -> Result<IdealHandle<F>> {
    IdealHandle::new(
        m.field().clone(),
        m.num_vars(),
        minors.into_iter().map(|mi| mi.value).collect(),
        order.clone(),
    )
}

/// `I_t(M)`. For `t` larger than the number of rows this is the zero ideal.
pub fn minors_ideal<F: Field>(
    m: &PolyMatrix<F>,
    t: usize,
    order: &MonomialOrder,
) -> Result<IdealHandle<F>> {
    ensure_t_homogeneous(m, t)?;
    ideal_of(m, all_minors(m, t), order)
}

/// Lower-right staircase of removed positions in a base matrix.
#[derive(Debug, Clone)]
pub struct LadderMask<F: Field> {
    base: PolyMatrix<F>,
    removed: Vec<(usize, usize)>,
}

impl<F: Field> LadderMask<F> {
    /// The ladder missing only the lower-right corner entry.
    pub fn corner(base: PolyMatrix<F>) -> Self {
        let removed = vec![(base.rows() - 1, base.cols() - 1)];
        Self { base, removed }
    }

    /// A ladder from an explicit removed set, which must be closed towards
    /// the lower right.
    pub fn new(base: PolyMatrix<F>, mut removed: Vec<(usize, usize)>) -> Result<Self> {
        removed.sort_unstable();
        removed.dedup();
        for &(r, c) in &removed {
            if r >= base.rows() || c >= base.cols() {
                return Err(Error::OutOfRange(format!("position ({r}, {c}) outside the matrix")));
            }
            for rr in r..base.rows() {
                for cc in c..base.cols() {
                    if removed.binary_search(&(rr, cc)).is_err() {
                        return Err(Error::Malformed(format!(
                            "removed set is not a lower-right staircase: ({rr}, {cc}) is kept"
                        )));
                    }
                }
            }
        }
        Ok(Self { base, removed })
    }

    pub fn base(&self) -> &PolyMatrix<F> {
        &self.base
    }

    pub fn removed(&self) -> &[(usize, usize)] {
        &self.removed
    }

    /// Whether the `rows x cols` submatrix lies inside the ladder.
    pub fn contains(&self, rows: &[usize], cols: &[usize]) -> bool {
        !self
            .removed
            .iter()
            .any(|(r, c)| rows.contains(r) && cols.contains(c))
    }

    /// The `t x t` minors lying inside the ladder.
    pub fn minors(&self, t: usize) -> Vec<Minor<F>> {
        let mut cache = MinorCache::new(&self.base);
        let mut out = Vec::new();
        for rows in combinations(self.base.rows(), t) {
            for cols in combinations(self.base.cols(), t) {
                if self.contains(&rows, &cols) {
                    let value = cache.minor(&rows, &cols);
                    out.push(Minor { rows: rows.clone(), cols, value });
                }
            }
        }
        out
    }

    pub fn minors_ideal(&self, t: usize, order: &MonomialOrder) -> Result<IdealHandle<F>> {
        ensure_t_homogeneous(&self.base, t)?;
        ideal_of(&self.base, self.minors(t), order)
    }
}

/// `I_t(L)` where `L` omits the lower-right entry of `M`.
pub fn ladder_minors_ideal<F: Field>(
    m: &PolyMatrix<F>,
    t: usize,
    order: &MonomialOrder,
) -> Result<IdealHandle<F>> {
    LadderMask::corner(m.clone()).minors_ideal(t, order)
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // exact at every step: acc * (n - i) is divisible by (i + 1)
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub(crate) fn check_range(m: usize, n: usize, t: usize) -> Result<()> {
    if t < 1 || t > m || m > n {
        return Err(Error::OutOfRange(format!(
            "need 1 <= t <= m <= n, got m={m}, n={n}, t={t}"
        )));
    }
    Ok(())
}

/// `C(m,t) C(n,t)`.
pub fn minor_count(m: usize, n: usize, t: usize) -> Result<u128> {
    check_range(m, n, t)?;
    Ok(binomial(m as u64, t as u64) * binomial(n as u64, t as u64))
}

/// `C(m,t) C(n,t) - C(m-1,t-1) C(n-1,t-1)`.
pub fn ladder_minor_count(m: usize, n: usize, t: usize) -> Result<u128> {
    let full = minor_count(m, n, t)?;
    let corner = binomial(m as u64 - 1, t as u64 - 1) * binomial(n as u64 - 1, t as u64 - 1);
    Ok(full - corner)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::ideal::DEFAULT_STEP_BUDGET;
    use crate::parse::parse_polynomial;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn generic(m: usize, n: usize) -> PolyMatrix<Rationals> {
        PolyMatrix::generic(Rationals, m, n).unwrap()
    }

    fn from_strs(rows: &[&[&str]], nv: usize) -> PolyMatrix<Rationals> {
        let grid = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_polynomial(s, Rationals, nv).unwrap()).collect())
            .collect();
        PolyMatrix::from_rows(Rationals, nv, grid).unwrap()
    }

    /// Signed permutation sum; independent of the Laplace expansion.
    fn leibniz(m: &PolyMatrix<Rationals>) -> Polynomial<Rationals> {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = m.rows();
        let mut acc = Polynomial::zero(Rationals, m.num_vars());
        for p in perms(n) {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let mut term = Polynomial::one(Rationals, m.num_vars());
            for (i, &j) in p.iter().enumerate() {
                term = &term * m.entry(i, j);
            }
            acc = if inversions % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    #[test]
    fn laplace_matches_permutation_sum_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..25 {
            let seed = rng.gen();
            let m = PolyMatrix::random_forms(Rationals, 4, &[0, 1, 0], &[1, 1, 2], 3, 0.2, seed)
                .unwrap();
            assert_eq!(determinant(&m).unwrap(), leibniz(&m));
        }
    }

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(
            combinations(4, 2),
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn t_homogeneity() {
        assert!(check_t_homogeneous(&generic(3, 4), 3).unwrap().is_pass());
        let bad = from_strs(&[&["x0", "x1"], &["x2", "x0^2"]], 3);
        assert_eq!(
            check_t_homogeneous(&bad, 2).unwrap(),
            THomogeneity::Fail { size: 2, rows: vec![0, 1], cols: vec![0, 1] }
        );
        assert!(check_t_homogeneous(&bad, 1).unwrap().is_pass());
        assert!(check_t_homogeneous(&bad, 3).is_err());
        assert!(check_t_homogeneous(&bad, 0).is_err());
        let err = minors_ideal(&bad, 2, &MonomialOrder::grevlex()).unwrap_err();
        assert!(matches!(err, Error::NotTHomogeneous { size: 2, .. }));
    }

    #[test]
    fn minor_ideal_generators() {
        let o = MonomialOrder::grevlex();
        let i = minors_ideal(&generic(2, 2), 2, &o).unwrap();
        assert_eq!(i.generators().len(), 1);
        assert_eq!(i.generators()[0].to_string(), "-x1*x2 + x0*x3");
        assert_eq!(minors_ideal(&generic(2, 3), 2, &o).unwrap().generators().len(), 3);
        let entries = minors_ideal(&generic(2, 3), 1, &o).unwrap();
        assert_eq!(entries.generators().len(), 6);
    }

    #[test]
    fn ladder_generators() {
        let o = MonomialOrder::grevlex();
        assert_eq!(ladder_minors_ideal(&generic(3, 3), 2, &o).unwrap().generators().len(), 5);
        let l = ladder_minors_ideal(&generic(2, 3), 2, &o).unwrap();
        assert_eq!(l.generators().len(), 1);
        // M_{12;12} = x0*x4 - x1*x3
        let expected = parse_polynomial("x0*x4 - x1*x3", Rationals, 6).unwrap();
        assert_eq!(l.generators()[0], expected);
        assert!(ladder_minors_ideal(&generic(2, 2), 2, &o).unwrap().is_zero_ideal());
    }

    #[test]
    fn generator_counts_match_formulas() {
        let o = MonomialOrder::grevlex();
        for m in 1..=3 {
            for n in m..=4 {
                for t in 1..=m {
                    let g = generic(m, n);
                    let full = minors_ideal(&g, t, &o).unwrap().generators().len() as u128;
                    let ladder = ladder_minors_ideal(&g, t, &o).unwrap().generators().len() as u128;
                    assert_eq!(full, minor_count(m, n, t).unwrap());
                    assert_eq!(ladder, ladder_minor_count(m, n, t).unwrap());
                }
            }
        }
    }

    #[test]
    fn count_formulas() {
        assert_eq!(minor_count(2, 3, 2).unwrap(), 3);
        assert_eq!(ladder_minor_count(2, 3, 2).unwrap(), 1);
        assert_eq!(minor_count(3, 3, 2).unwrap(), 9);
        assert_eq!(ladder_minor_count(3, 3, 2).unwrap(), 5);
        assert_eq!(minor_count(4, 7, 1).unwrap(), 28);
        assert!(minor_count(3, 2, 2).is_err());
        assert!(minor_count(3, 3, 0).is_err());
        assert!(ladder_minor_count(2, 3, 3).is_err());
    }

    #[test]
    fn repeated_row_gives_zero_minor() {
        let g = generic(3, 3);
        let mut cache = MinorCache::new(&g);
        // a matrix with two equal rows has vanishing maximal minors
        let dup = g.submatrix(&[0, 0, 1], &[0, 1, 2]).unwrap();
        assert!(determinant(&dup).unwrap().is_zero());
        assert!(!cache.minor(&[0, 1], &[0, 1]).is_zero());
    }

    #[test]
    fn transpose_gives_same_ideal() {
        let f = PrimeField::default();
        let m = PolyMatrix::random_forms(f, 4, &[1, 0], &[1, 1, 1], 2, 0.0, 3).unwrap();
        // build the transpose explicitly; construction flips it back
        let grid = m.to_grid();
        let t_grid: Vec<Vec<_>> = (0..m.cols())
            .map(|j| (0..m.rows()).map(|i| grid[i][j].clone()).collect())
            .collect();
        let mt = PolyMatrix::from_rows(f, 4, t_grid).unwrap();
        assert!(mt.is_transposed());
        let o = MonomialOrder::grevlex();
        let a = minors_ideal(&m, 2, &o).unwrap().with_basis(DEFAULT_STEP_BUDGET).unwrap();
        let b = minors_ideal(&mt, 2, &o).unwrap().with_basis(DEFAULT_STEP_BUDGET).unwrap();
        for g in b.generators() {
            assert!(a.contains(g).unwrap());
        }
        for g in a.generators() {
            assert!(b.contains(g).unwrap());
        }
    }

    #[test]
    fn ladder_mask_validation() {
        let g = generic(3, 3);
        assert!(LadderMask::new(g.clone(), vec![(1, 1)]).is_err());
        let l = LadderMask::new(g.clone(), vec![(2, 2), (1, 2), (2, 1)]).unwrap();
        assert_eq!(l.minors(2).len(), 1);
        assert!(LadderMask::new(g, vec![(3, 0)]).is_err());
    }

    #[test]
    fn ladder_ideal_is_inside_minor_ideal() {
        let o = MonomialOrder::grevlex();
        let g = PolyMatrix::generic(PrimeField::default(), 3, 3).unwrap();
        let full = minors_ideal(&g, 2, &o).unwrap().with_basis(DEFAULT_STEP_BUDGET).unwrap();
        for p in ladder_minors_ideal(&g, 2, &o).unwrap().generators() {
            assert!(full.normal_form(p).unwrap().is_zero());
        }
    }
}
