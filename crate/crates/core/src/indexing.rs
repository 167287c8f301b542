//! Multi-indices, graded lexicographic ordering, and index matrices.
//!
//! A [`MultiIndex`] `j = (j_1, ..., j_N)` labels both a Hermite polynomial and
//! its expansion coefficient. Within one total degree, indices are ranked the
//! way the coefficient systems are laid out: `(2,0,0), (1,1,0), (1,0,1),
//! (0,2,0), (0,1,1), (0,0,2)` for `N = 3`, degree 2. That is the *descending*
//! graded lexicographic order, so the first rank holds the grlex-greatest
//! index.
//!
//! [`IndexMatrix`] is an `N x N` nonnegative integer matrix with prescribed
//! row and column sums; the closed-form second moments sum over all of them.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Degree vector `j` in `N_0^N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyDimension);
        }
        Ok(MultiIndex(entries))
    }

    pub fn zero(dim: usize) -> Self {
        assert!(dim > 0, "multi-index dimension must be at least 1");
        MultiIndex(vec![0; dim])
    }

    /// The unit index `e_axis`.
    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut idx = Self::zero(dim);
        idx.0[axis] = 1;
        idx
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn get(&self, axis: usize) -> u32 {
        self.0[axis]
    }

    /// Total degree `|j|`.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `j + e_axis`.
    pub fn incremented(&self, axis: usize) -> Self {
        let mut out = self.clone();
        out.0[axis] += 1;
        out
    }

    /// `j - e_axis`, or `None` when that entry is already zero.
    pub fn decremented(&self, axis: usize) -> Option<Self> {
        if self.0[axis] == 0 {
            return None;
        }
        let mut out = self.clone();
        out.0[axis] -= 1;
        Some(out)
    }

    /// Entrywise sum, used as the exponent of a monomial product.
    pub fn plus(&self, other: &MultiIndex) -> Result<Self> {
        check_same_len(self, other)?;
        Ok(MultiIndex(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    /// `j! = j_1! ... j_N!`.
    pub fn factorial(&self) -> Result<u64> {
        self.0.iter().try_fold(1u64, |acc, &e| {
            acc.checked_mul(factorial(e)?)
                .ok_or(Error::Overflow("multi-index factorial"))
        })
    }

    /// Comma-separated label, e.g. `"1,0,2"`. This is the key format used in
    /// polynomial and model files.
    pub fn label(&self) -> String {
        let mut s = String::with_capacity(2 * self.0.len());
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&e.to_string());
        }
        s
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.label())
    }
}

impl FromStr for MultiIndex {
    type Err = Error;

    /// Parses `"1,0,2"`, optionally wrapped in parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let entries = body
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Invalid(format!("bad multi-index {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        MultiIndex::new(entries)
    }
}

/// Basis rank order: total degree ascending, then grlex-greatest first within
/// a degree. Sorting a set of indices with this order reproduces the layout of
/// the per-degree coefficient systems.
impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn check_same_len(a: &MultiIndex, b: &MultiIndex) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::Dimension {
            expected: a.len(),
            got: b.len(),
        });
    }
    Ok(())
}

/// Graded lexicographic comparison: `a > b` iff `|a| > |b|`, or the degrees
/// tie and the leftmost nonzero entry of `a - b` is positive.
pub fn grlex_compare(a: &MultiIndex, b: &MultiIndex) -> Result<Ordering> {
    check_same_len(a, b)?;
    Ok(a.degree().cmp(&b.degree()).then_with(|| a.0.cmp(&b.0)))
}

/// All indices of total degree `l` in `N` variables, in rank order.
pub fn enumerate_degree(dim: usize, degree: u32) -> Result<Vec<MultiIndex>> {
    if dim == 0 {
        return Err(Error::EmptyDimension);
    }
    let mut out = Vec::with_capacity(count_degree(dim, degree).unwrap_or(0) as usize);
    let mut scratch = vec![0u32; dim];
    fill_degree(&mut scratch, 0, degree, &mut out);
    Ok(out)
}

fn fill_degree(scratch: &mut [u32], axis: usize, remaining: u32, out: &mut Vec<MultiIndex>) {
    if axis + 1 == scratch.len() {
        scratch[axis] = remaining;
        out.push(MultiIndex(scratch.to_vec()));
        return;
    }
    for e in (0..=remaining).rev() {
        scratch[axis] = e;
        fill_degree(scratch, axis + 1, remaining - e, out);
    }
}

/// All indices with `|j| <= m`, degree by degree in rank order.
pub fn enumerate_total(dim: usize, max_degree: u32) -> Result<Vec<MultiIndex>> {
    let mut out = Vec::new();
    for l in 0..=max_degree {
        out.extend(enumerate_degree(dim, l)?);
    }
    Ok(out)
}

/// Number of indices of degree exactly `l`: `C(N + l - 1, l)`.
pub fn count_degree(dim: usize, degree: u32) -> Result<u64> {
    if dim == 0 {
        return Err(Error::EmptyDimension);
    }
    binomial(dim as u64 - 1 + degree as u64, degree as u64)
}

/// Number of indices with degree at most `m`: `C(N + m, m)`.
pub fn count_total(dim: usize, max_degree: u32) -> Result<u64> {
    if dim == 0 {
        return Err(Error::EmptyDimension);
    }
    binomial(dim as u64 + max_degree as u64, max_degree as u64)
}

/// Checked binomial coefficient.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return Err(Error::Overflow("binomial coefficient"));
        }
    }
    Ok(acc as u64)
}

/// Checked `n!`; fails past `20!`.
pub fn factorial(n: u32) -> Result<u64> {
    (1..=n as u64).try_fold(1u64, |acc, i| {
        acc.checked_mul(i).ok_or(Error::Overflow("factorial"))
    })
}

/// Nonnegative integer `N x N` matrix with cached margins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexMatrix {
    dim: usize,
    entries: Vec<u32>,
    row_sums: MultiIndex,
    col_sums: MultiIndex,
}

impl IndexMatrix {
    /// Builds a matrix from row-major entries, computing its margins.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::EmptyDimension);
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::NotSquare {
                    rows: dim,
                    cols: row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        Ok(Self::from_entries(dim, entries))
    }

    fn from_entries(dim: usize, entries: Vec<u32>) -> Self {
        let mut rows = vec![0u32; dim];
        let mut cols = vec![0u32; dim];
        for p in 0..dim {
            for q in 0..dim {
                let v = entries[p * dim + q];
                rows[p] += v;
                cols[q] += v;
            }
        }
        IndexMatrix {
            dim,
            entries,
            row_sums: MultiIndex(rows),
            col_sums: MultiIndex(cols),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.entries[row * self.dim + col]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn row_sums(&self) -> &MultiIndex {
        &self.row_sums
    }

    pub fn col_sums(&self) -> &MultiIndex {
        &self.col_sums
    }

    /// `theta! = prod theta_pq!`.
    pub fn factorial(&self) -> Result<u64> {
        self.entries.iter().try_fold(1u64, |acc, &e| {
            acc.checked_mul(factorial(e)?)
                .ok_or(Error::Overflow("index-matrix factorial"))
        })
    }
}

/// Every index matrix with row sums `rows` and column sums `cols`, each once,
/// in ascending lexicographic order of the row-major entries. Empty when the
/// margin totals differ.
pub fn enumerate_margin_matrices(rows: &MultiIndex, cols: &MultiIndex) -> Result<Vec<IndexMatrix>> {
    check_same_len(rows, cols)?;
    let mut out = Vec::new();
    if rows.degree() != cols.degree() {
        return Ok(out);
    }
    let dim = rows.len();
    let mut entries = vec![0u32; dim * dim];
    let mut budget = cols.0.clone();
    fill_row(rows.entries(), 0, 0, rows.get(0), &mut budget, &mut entries, &mut out);
    Ok(out)
}

/// Fills row `p` left to right. `left` is what row `p` still has to place and
/// `budget[q]` is what column `q` can still absorb.
fn fill_row(
    rows: &[u32],
    p: usize,
    q: usize,
    left: u32,
    budget: &mut [u32],
    entries: &mut [u32],
    out: &mut Vec<IndexMatrix>,
) {
    let dim = rows.len();
    if p + 1 == dim {
        // the last row is forced by the column budgets
        entries[p * dim..].copy_from_slice(budget);
        out.push(IndexMatrix::from_entries(dim, entries.to_vec()));
        return;
    }
    if q + 1 == dim {
        if left > budget[q] {
            return;
        }
        entries[p * dim + q] = left;
        budget[q] -= left;
        fill_row(rows, p + 1, 0, rows[p + 1], budget, entries, out);
        budget[q] += left;
        return;
    }
    // what the columns to the right can still take
    let room: u32 = budget[q + 1..].iter().sum();
    let lo = left.saturating_sub(room);
    let hi = left.min(budget[q]);
    for v in lo..=hi {
        entries[p * dim + q] = v;
        budget[q] -= v;
        fill_row(rows, p, q + 1, left - v, budget, entries, out);
        budget[q] += v;
    }
    entries[p * dim + q] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec()).unwrap()
    }

    #[test]
    fn table_a5_order_for_three_variables() {
        let expected: Vec<MultiIndex> = [
            [2, 0, 0],
            [1, 1, 0],
            [1, 0, 1],
            [0, 2, 0],
            [0, 1, 1],
            [0, 0, 2],
        ]
        .iter()
        .map(|v| mi(v))
        .collect();
        assert_eq!(enumerate_degree(3, 2).unwrap(), expected);
        assert_eq!(enumerate_degree(3, 0).unwrap(), vec![mi(&[0, 0, 0])]);
        assert_eq!(
            enumerate_degree(3, 1).unwrap(),
            vec![mi(&[1, 0, 0]), mi(&[0, 1, 0]), mi(&[0, 0, 1])]
        );
    }

    #[test]
    fn grlex_examples() {
        assert_eq!(grlex_compare(&mi(&[2, 0, 0]), &mi(&[1, 1, 0])).unwrap(), Ordering::Greater);
        assert_eq!(grlex_compare(&mi(&[1, 0, 0]), &mi(&[1, 0, 0])).unwrap(), Ordering::Equal);
        // (0,1,1) has rank 5 and (0,0,2) rank 6
        assert_eq!(grlex_compare(&mi(&[0, 1, 1]), &mi(&[0, 0, 2])).unwrap(), Ordering::Greater);
        assert!(mi(&[0, 1, 1]) < mi(&[0, 0, 2]));
        // degree dominates
        assert_eq!(grlex_compare(&mi(&[0, 0, 1]), &mi(&[1, 0, 0])).unwrap(), Ordering::Less);
        assert_eq!(grlex_compare(&mi(&[0, 0, 2]), &mi(&[1, 0, 0])).unwrap(), Ordering::Greater);
        assert!(matches!(
            grlex_compare(&mi(&[1]), &mi(&[1, 0])),
            Err(Error::Dimension { .. })
        ));
    }

    /// Exhaustive generation plus a sort, independent of the recursive filler.
    fn brute_degree(dim: usize, l: u32) -> Vec<MultiIndex> {
        let mut all = Vec::new();
        let total = (l as usize + 1).pow(dim as u32);
        for code in 0..total {
            let mut c = code;
            let mut v = Vec::with_capacity(dim);
            for _ in 0..dim {
                v.push((c % (l as usize + 1)) as u32);
                c /= l as usize + 1;
            }
            if v.iter().sum::<u32>() == l {
                all.push(v);
            }
        }
        // grlex-greatest first within a degree
        all.sort_by(|a, b| b.cmp(a));
        all.into_iter().map(MultiIndex).collect()
    }

    #[test]
    fn two_variable_degree_three() {
        let got = enumerate_degree(2, 3).unwrap();
        assert_eq!(got, brute_degree(2, 3));
        assert_eq!(got, vec![mi(&[3, 0]), mi(&[2, 1]), mi(&[1, 2]), mi(&[0, 3])]);
    }

    #[test]
    fn enumeration_matches_brute_force_and_counts() {
        for dim in 1..=4 {
            for l in 0..=6 {
                let got = enumerate_degree(dim, l).unwrap();
                assert_eq!(got, brute_degree(dim, l), "N={dim} l={l}");
                assert_eq!(got.len() as u64, count_degree(dim, l).unwrap());
                for w in got.windows(2) {
                    assert_eq!(grlex_compare(&w[0], &w[1]).unwrap(), Ordering::Greater);
                    assert!(w[0] < w[1]);
                }
            }
        }
    }

    #[test]
    fn counts() {
        assert_eq!(count_degree(3, 2).unwrap(), 6);
        assert_eq!(count_degree(7, 4).unwrap(), 210);
        assert_eq!(count_degree(5, 0).unwrap(), 1);
        assert_eq!(count_total(3, 2).unwrap(), 10);
        assert_eq!(count_total(11, 2).unwrap(), 78);
        assert_eq!(count_total(4, 0).unwrap(), 1);
        for dim in 1..=8 {
            for m in 0..=6 {
                let sum: u64 = (0..=m).map(|l| count_degree(dim, l).unwrap()).sum();
                assert_eq!(sum, count_total(dim, m).unwrap());
            }
        }
        assert!(matches!(count_degree(0, 1), Err(Error::EmptyDimension)));
        assert!(matches!(enumerate_degree(0, 1), Err(Error::EmptyDimension)));
        assert!(matches!(count_total(200, 100), Err(Error::Overflow(_))));
    }

    #[test]
    fn factorials() {
        assert_eq!(mi(&[2, 1, 0]).factorial().unwrap(), 2);
        assert_eq!(mi(&[5, 5]).factorial().unwrap(), 14400);
        let theta = IndexMatrix::from_rows(&[vec![2, 0], vec![1, 1]]).unwrap();
        assert_eq!(theta.factorial().unwrap(), 2);
        assert_eq!(factorial(20).unwrap(), 2_432_902_008_176_640_000);
        assert!(matches!(factorial(21), Err(Error::Overflow(_))));
        assert!(mi(&[15, 15]).factorial().is_err());
    }

    #[test]
    fn margin_examples() {
        let got = enumerate_margin_matrices(&mi(&[1, 1]), &mi(&[1, 1])).unwrap();
        let expected = vec![
            IndexMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap(),
            IndexMatrix::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap(),
        ];
        assert_eq!(got, expected);

        let got = enumerate_margin_matrices(&mi(&[1, 0]), &mi(&[0, 1])).unwrap();
        assert_eq!(got, vec![IndexMatrix::from_rows(&[vec![0, 1], vec![0, 0]]).unwrap()]);

        assert!(enumerate_margin_matrices(&mi(&[2, 0]), &mi(&[0, 1])).unwrap().is_empty());
        assert!(enumerate_margin_matrices(&mi(&[1]), &mi(&[1, 0])).is_err());
    }

    fn brute_margins(rows: &MultiIndex, cols: &MultiIndex) -> Vec<Vec<u32>> {
        let dim = rows.len();
        let cap = rows.degree().max(cols.degree()) as usize + 1;
        let cells = dim * dim;
        let mut out = Vec::new();
        for code in 0..cap.pow(cells as u32) {
            let mut c = code;
            let mut e = vec![0u32; cells];
            for slot in e.iter_mut().rev() {
                *slot = (c % cap) as u32;
                c /= cap;
            }
            let m = IndexMatrix::from_entries(dim, e.clone());
            if m.row_sums() == rows && m.col_sums() == cols {
                out.push(e);
            }
        }
        out
    }

    /// Contingency-table count by dynamic programming over rows.
    fn dp_count(rows: &[u32], budget: Vec<u32>, memo: &mut HashMap<(usize, Vec<u32>), u64>) -> u64 {
        fn compositions(total: u32, budget: &[u32], acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if acc.len() == budget.len() {
                if total == 0 {
                    out.push(acc.clone());
                }
                return;
            }
            for v in 0..=total.min(budget[acc.len()]) {
                acc.push(v);
                compositions(total - v, budget, acc, out);
                acc.pop();
            }
        }
        if rows.is_empty() {
            return u64::from(budget.iter().all(|&b| b == 0));
        }
        let key = (rows.len(), budget.clone());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut parts = Vec::new();
        compositions(rows[0], &budget, &mut Vec::new(), &mut parts);
        let mut total = 0;
        for part in parts {
            let next: Vec<u32> = budget.iter().zip(&part).map(|(b, v)| b - v).collect();
            total += dp_count(&rows[1..], next, memo);
        }
        memo.insert(key, total);
        total
    }

    #[test]
    fn margin_enumeration_matches_brute_force_small() {
        for dim in 1..=2 {
            for l in 0..=3 {
                for j in brute_degree(dim, l) {
                    for k in brute_degree(dim, l) {
                        let got: Vec<Vec<u32>> = enumerate_margin_matrices(&j, &k)
                            .unwrap()
                            .into_iter()
                            .map(|m| m.entries().to_vec())
                            .collect();
                        // brute force enumerates in lexicographic row-major order too
                        assert_eq!(got, brute_margins(&j, &k), "j={j} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn margin_count_matches_dynamic_programming() {
        for dim in 1..=3 {
            for l in 0..=5 {
                let level = enumerate_degree(dim, l).unwrap();
                for j in &level {
                    for k in &level {
                        let mats = enumerate_margin_matrices(j, k).unwrap();
                        let mut memo = HashMap::new();
                        let expected = dp_count(j.entries(), k.entries().to_vec(), &mut memo);
                        assert_eq!(mats.len() as u64, expected, "j={j} k={k}");
                        for m in &mats {
                            assert_eq!(m.row_sums(), j);
                            assert_eq!(m.col_sums(), k);
                        }
                        for w in mats.windows(2) {
                            assert!(w[0].entries() < w[1].entries());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn grlex_is_a_total_order_consistent_with_degree() {
        for dim in 1..=3 {
            let all = enumerate_total(dim, 4).unwrap();
            for a in &all {
                for b in &all {
                    let ab = grlex_compare(a, b).unwrap();
                    assert_eq!(ab, grlex_compare(b, a).unwrap().reverse());
                    assert_eq!(ab == Ordering::Equal, a == b);
                    if a.degree() != b.degree() {
                        assert_eq!(ab, a.degree().cmp(&b.degree()));
                    }
                    for c in &all {
                        if ab == Ordering::Less && grlex_compare(b, c).unwrap() == Ordering::Less {
                            assert_eq!(grlex_compare(a, c).unwrap(), Ordering::Less);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn labels_round_trip() {
        let j = mi(&[3, 0, 12]);
        assert_eq!(j.label(), "3,0,12");
        assert_eq!(j.label().parse::<MultiIndex>().unwrap(), j);
        assert_eq!("(1, 2)".parse::<MultiIndex>().unwrap(), mi(&[1, 2]));
        assert!("1,-2".parse::<MultiIndex>().is_err());
        assert!(MultiIndex::new(vec![]).is_err());
    }
}
