//! Pipe dreams in types A and C and the two-row mitosis driving both operators.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::weyl::{self, GroupType, Permutation, Word};
use crate::{Error, Report, Result};

/// A cell (row, column), both 1-based.
pub type Cell = (usize, usize);

/// Which prefix restriction the splitting-index set uses; `DropPrefixBound` is a
/// deliberately broken variant kept for mutation testing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MitosisRule {
    Standard,
    DropPrefixBound,
}

/// Two rows of squares, the lower one shorter by one; substrate of two-row mitosis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BasicPipeDream {
    pub ell: usize,
    pub a_row: Vec<bool>,
    pub b_row: Vec<bool>,
}

impl BasicPipeDream {
    pub fn new(ell: usize, a_row: Vec<bool>, b_row: Vec<bool>) -> Result<Self> {
        if a_row.len() != ell + 1 || b_row.len() != ell {
            return Err(Error::Domain(format!(
                "row sizes {}/{} do not match ell={ell}",
                a_row.len(),
                b_row.len()
            )));
        }
        Ok(BasicPipeDream { ell, a_row, b_row })
    }

    /// Builds from 1-based lists of filled square indices.
    pub fn from_filled(ell: usize, a_filled: &[usize], b_filled: &[usize]) -> Result<Self> {
        let mut a_row = vec![false; ell + 1];
        let mut b_row = vec![false; ell];
        for &j in a_filled {
            *a_row
                .get_mut(j.wrapping_sub(1))
                .ok_or_else(|| Error::Domain(format!("a-square {j} out of range 1..={}", ell + 1)))? = true;
        }
        for &j in b_filled {
            *b_row
                .get_mut(j.wrapping_sub(1))
                .ok_or_else(|| Error::Domain(format!("b-square {j} out of range 1..={ell}")))? = true;
        }
        Ok(BasicPipeDream { ell, a_row, b_row })
    }

    /// 1-based indices of filled squares, (a-row, b-row).
    pub fn filled(&self) -> (Vec<usize>, Vec<usize>) {
        let pick = |row: &[bool]| {
            row.iter()
                .enumerate()
                .filter(|(_, &f)| f)
                .map(|(idx, _)| idx + 1)
                .collect()
        };
        (pick(&self.a_row), pick(&self.b_row))
    }

    pub fn size(&self) -> usize {
        self.a_row.iter().chain(self.b_row.iter()).filter(|&&f| f).count()
    }
}

/// Two-row mitosis: returns the filled-prefix length r, the splitting index set J,
/// and the offsprings in ascending order of the erased index.
pub fn two_row_mitosis(d: &BasicPipeDream) -> (usize, Vec<usize>, Vec<BasicPipeDream>) {
    two_row_mitosis_with(d, MitosisRule::Standard)
}

/// Two-row mitosis under a selectable splitting rule (see [`MitosisRule`]).
pub fn two_row_mitosis_with(
    d: &BasicPipeDream,
    rule: MitosisRule,
) -> (usize, Vec<usize>, Vec<BasicPipeDream>) {
    if !d.a_row[0] {
        return (0, Vec::new(), Vec::new());
    }
    let r = d.a_row.iter().take_while(|&&f| f).count();
    let bound = match rule {
        MitosisRule::Standard => r,
        MitosisRule::DropPrefixBound => d.ell + 1,
    };
    let j_set: Vec<usize> = (1..=bound)
        .filter(|&j| d.a_row[j - 1] && (j == d.ell + 1 || !d.b_row[j - 1]))
        .collect();
    let offsprings = j_set
        .iter()
        .map(|&p| {
            let mut child = d.clone();
            child.a_row[p - 1] = false;
            for &j in j_set.iter().take_while(|&&j| j < p) {
                child.a_row[j - 1] = false;
                child.b_row[j - 1] = true;
            }
            child
        })
        .collect();
    (r, j_set, offsprings)
}

/// Pipe dream in type A_n: crosses in the staircase region i+j <= n+1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PipeDreamA {
    pub n: usize,
    pub crosses: BTreeSet<Cell>,
}

/// Skew pipe dream in type C_n: crosses where i <= j and i+j <= 2n.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SkewPipeDreamC {
    pub n: usize,
    pub crosses: BTreeSet<Cell>,
}

impl PipeDreamA {
    pub fn new(n: usize, crosses: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let crosses: BTreeSet<Cell> = crosses.into_iter().collect();
        for &(i, j) in &crosses {
            if i == 0 || j == 0 || i + j > n + 1 {
                return Err(Error::Domain(format!(
                    "cross ({i},{j}) outside the staircase for n={n}"
                )));
            }
        }
        Ok(PipeDreamA { n, crosses })
    }

    pub fn size(&self) -> usize {
        self.crosses.len()
    }
}

impl SkewPipeDreamC {
    pub fn new(n: usize, crosses: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let crosses: BTreeSet<Cell> = crosses.into_iter().collect();
        for &(i, j) in &crosses {
            if i == 0 || j == 0 || i > j || i + j > 2 * n {
                return Err(Error::Domain(format!(
                    "cross ({i},{j}) outside the skew region for n={n}"
                )));
            }
        }
        Ok(SkewPipeDreamC { n, crosses })
    }

    pub fn size(&self) -> usize {
        self.crosses.len()
    }
}

/// The a-row and b-row cell positions that mitosis index i reads, in square order.
pub fn rows_a(n: usize, i: usize) -> Result<(Vec<Cell>, Vec<Cell>)> {
    if i == 0 || i > n {
        return Err(Error::Domain(format!("mitosis index {i} out of range 1..={n}")));
    }
    let ell = n - i;
    let a_cells = (1..=ell + 1).map(|j| (i, j)).collect();
    let b_cells = (1..=ell).map(|j| (i + 1, j)).collect();
    Ok((a_cells, b_cells))
}

/// The alternating column labeling mitosis index i uses on a skew pipe dream.
pub fn rows_c(n: usize, i: usize) -> Result<(Vec<Cell>, Vec<Cell>)> {
    if i == 0 || i > n {
        return Err(Error::Domain(format!("mitosis index {i} out of range 1..={n}")));
    }
    if i == 1 {
        let a_cells = (1..=n).map(|k| (k, n)).collect();
        let b_cells = (1..n).map(|k| (k, n + 1)).collect();
        return Ok((a_cells, b_cells));
    }
    let mut a_cells = Vec::with_capacity(2 * (n - i) + 2);
    let mut b_cells = Vec::with_capacity(2 * (n - i) + 1);
    for k in 1..=n - i + 1 {
        a_cells.push((k, n - i + 1));
        a_cells.push((k, n + i - 1));
        b_cells.push((k, n - i + 2));
        if k <= n - i {
            b_cells.push((k, n + i));
        }
    }
    Ok((a_cells, b_cells))
}

fn splice(
    crosses: &BTreeSet<Cell>,
    a_cells: &[Cell],
    b_cells: &[Cell],
    rule: MitosisRule,
) -> Vec<BTreeSet<Cell>> {
    let basic = BasicPipeDream {
        ell: b_cells.len(),
        a_row: a_cells.iter().map(|c| crosses.contains(c)).collect(),
        b_row: b_cells.iter().map(|c| crosses.contains(c)).collect(),
    };
    let (_, _, offsprings) = two_row_mitosis_with(&basic, rule);
    let mut out: Vec<BTreeSet<Cell>> = offsprings
        .iter()
        .map(|child| {
            let mut set = crosses.clone();
            for (idx, cell) in a_cells.iter().enumerate() {
                if child.a_row[idx] {
                    set.insert(*cell);
                } else {
                    set.remove(cell);
                }
            }
            for (idx, cell) in b_cells.iter().enumerate() {
                if child.b_row[idx] {
                    set.insert(*cell);
                } else {
                    set.remove(cell);
                }
            }
            set
        })
        .collect();
    out.sort();
    out
}

/// Mitosis operator on type-A pipe dreams: two-row mitosis on rows i and i+1.
pub fn mitosis_a(i: usize, d: &PipeDreamA) -> Result<Vec<PipeDreamA>> {
    mitosis_a_with(i, d, MitosisRule::Standard)
}

pub fn mitosis_a_with(i: usize, d: &PipeDreamA, rule: MitosisRule) -> Result<Vec<PipeDreamA>> {
    let (a_cells, b_cells) = rows_a(d.n, i)?;
    Ok(splice(&d.crosses, &a_cells, &b_cells, rule)
        .into_iter()
        .map(|crosses| PipeDreamA { n: d.n, crosses })
        .collect())
}

/// Mitosis operator on skew pipe dreams: two-row mitosis on the column labeling of index i.
pub fn mitosis_c(i: usize, d: &SkewPipeDreamC) -> Result<Vec<SkewPipeDreamC>> {
    mitosis_c_with(i, d, MitosisRule::Standard)
}

pub fn mitosis_c_with(i: usize, d: &SkewPipeDreamC, rule: MitosisRule) -> Result<Vec<SkewPipeDreamC>> {
    let (a_cells, b_cells) = rows_c(d.n, i)?;
    Ok(splice(&d.crosses, &a_cells, &b_cells, rule)
        .into_iter()
        .map(|crosses| SkewPipeDreamC { n: d.n, crosses })
        .collect())
}

/// Reading word of a type-A pipe dream (rows top to bottom, right to left,
/// a cross at (i,j) contributing letter i+j-1) and whether it is reduced.
pub fn word_of(d: &PipeDreamA) -> (Word, bool) {
    let mut word = Vec::with_capacity(d.crosses.len());
    for i in 1..=d.n {
        for j in (1..=d.n + 1 - i).rev() {
            if d.crosses.contains(&(i, j)) {
                word.push(i + j - 1);
            }
        }
    }
    let reduced = weyl::is_reduced(GroupType::A, d.n, &word).expect("letters stay in range");
    (word, reduced)
}

/// The permutation of S_{n+1} a type-A pipe dream evaluates to.
pub fn permutation_of(d: &PipeDreamA) -> Permutation {
    let (word, _) = word_of(d);
    match weyl::evaluate(GroupType::A, d.n, &word).expect("letters stay in range") {
        weyl::GroupElement::A(p) => p,
        weyl::GroupElement::C(_) => unreachable!(),
    }
}

/// All reduced pipe dreams for w, by exhaustive scan of the staircase cross-sets.
pub fn enumerate_reduced_pipe_dreams(n: usize, w: &Permutation) -> Result<Vec<PipeDreamA>> {
    if w.one_line.len() != n + 1 {
        return Err(Error::Domain(format!(
            "expected a permutation of 1..={}, got length {}",
            n + 1,
            w.one_line.len()
        )));
    }
    let mut seen = vec![false; n + 1];
    for &v in &w.one_line {
        if v == 0 || v > n + 1 || seen[v - 1] {
            return Err(Error::Domain(format!("{:?} is not a permutation of 1..={}", w.one_line, n + 1)));
        }
        seen[v - 1] = true;
    }
    let cells: Vec<Cell> = (1..=n)
        .flat_map(|i| (1..=n + 1 - i).map(move |j| (i, j)))
        .collect();
    if cells.len() > 16 {
        return Err(Error::Capacity(format!(
            "staircase has {} cells, exhaustive scan limited to 16",
            cells.len()
        )));
    }
    let target = weyl::GroupElement::A(w.clone());
    let want = weyl::length(&target);
    let mut out = BTreeSet::new();
    for mask in 0u32..(1u32 << cells.len()) {
        if mask.count_ones() as usize != want {
            continue;
        }
        let crosses: BTreeSet<Cell> = cells
            .iter()
            .enumerate()
            .filter(|(idx, _)| mask & (1 << idx) != 0)
            .map(|(_, &c)| c)
            .collect();
        let d = PipeDreamA { n, crosses };
        let (word, _) = word_of(&d);
        if weyl::evaluate(GroupType::A, n, &word).expect("letters in range") == target {
            out.insert(d);
        }
    }
    Ok(out.into_iter().collect())
}

/// Sweeps every w in S_{n+1} and descent i, comparing the mitosis image of the
/// reduced pipe dreams of w with the reduced pipe dreams of w·s_i.
pub fn km_report(n: usize, rule: MitosisRule) -> Result<Report> {
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for el in weyl::all_elements(GroupType::A, n)? {
        let w = match &el {
            weyl::GroupElement::A(p) => p.clone(),
            weyl::GroupElement::C(_) => unreachable!(),
        };
        let dreams = enumerate_reduced_pipe_dreams(n, &w)?;
        for i in 1..=n {
            let shorter = weyl::apply_generator(&el, i)?;
            if weyl::length(&shorter) >= weyl::length(&el) {
                continue;
            }
            let ws = match &shorter {
                weyl::GroupElement::A(p) => p.clone(),
                weyl::GroupElement::C(_) => unreachable!(),
            };
            let expected: BTreeSet<PipeDreamA> =
                enumerate_reduced_pipe_dreams(n, &ws)?.into_iter().collect();
            let mut actual = BTreeSet::new();
            for d in &dreams {
                actual.extend(mitosis_a_with(i, d, rule)?);
            }
            checked += 1;
            if actual != expected {
                mismatches.push(format!(
                    "w={:?} i={i}: mitosis image has {} dreams, enumeration has {}",
                    w.one_line,
                    actual.len(),
                    expected.len()
                ));
            }
        }
    }
    Ok(Report { checked, mismatches })
}

fn render_grid(n_rows: usize, cols: impl Fn(usize) -> (usize, usize), crosses: &BTreeSet<Cell>) -> String {
    let mut lines = Vec::with_capacity(n_rows);
    for i in 1..=n_rows {
        let (lo, hi) = cols(i);
        let mut line = String::new();
        line.push_str(&"  ".repeat(lo - 1));
        for j in lo..=hi {
            if j > lo {
                line.push(' ');
            }
            line.push(if crosses.contains(&(i, j)) { '+' } else { '.' });
        }
        lines.push(line);
    }
    lines.join("\n")
}

fn parse_grid(
    n_rows: usize,
    cols: impl Fn(usize) -> (usize, usize),
    text: &str,
) -> Result<BTreeSet<Cell>> {
    let lines: Vec<&str> = text.lines().collect();
    if lines.len() != n_rows {
        return Err(Error::Format(format!("expected {n_rows} rows, got {}", lines.len())));
    }
    let mut crosses = BTreeSet::new();
    for (idx, line) in lines.iter().enumerate() {
        let i = idx + 1;
        let (lo, hi) = cols(i);
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != hi - lo + 1 {
            return Err(Error::Format(format!(
                "row {i}: expected {} cells, got {}",
                hi - lo + 1,
                tokens.len()
            )));
        }
        for (k, tok) in tokens.iter().enumerate() {
            match *tok {
                "+" => {
                    crosses.insert((i, lo + k));
                }
                "." => {}
                other => return Err(Error::Format(format!("row {i}: unexpected token {other:?}"))),
            }
        }
    }
    Ok(crosses)
}

impl PipeDreamA {
    /// ASCII rendering: one row per line, '+' for a cross, '.' for an allowed empty cell.
    pub fn render(&self) -> String {
        render_grid(self.n, |i| (1, self.n + 1 - i), &self.crosses)
    }

    pub fn parse(n: usize, text: &str) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("rank must be at least 1".into()));
        }
        let crosses = parse_grid(n, |i| (1, n + 1 - i), text)?;
        Ok(PipeDreamA { n, crosses })
    }
}

impl SkewPipeDreamC {
    /// ASCII rendering of the skew region, rows indented to their first allowed column.
    pub fn render(&self) -> String {
        render_grid(self.n, |i| (i, 2 * self.n - i), &self.crosses)
    }

    pub fn parse(n: usize, text: &str) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("rank must be at least 1".into()));
        }
        let crosses = parse_grid(n, |i| (i, 2 * n - i), text)?;
        Ok(SkewPipeDreamC { n, crosses })
    }
}

/// Wire form shared by both pipe-dream types.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PipeDreamJson {
    #[serde(rename = "type")]
    pub kind: String,
    pub n: usize,
    pub crosses: Vec<Cell>,
}

impl From<&PipeDreamA> for PipeDreamJson {
    fn from(d: &PipeDreamA) -> Self {
        PipeDreamJson {
            kind: "A".into(),
            n: d.n,
            crosses: d.crosses.iter().copied().collect(),
        }
    }
}

impl From<&SkewPipeDreamC> for PipeDreamJson {
    fn from(d: &SkewPipeDreamC) -> Self {
        PipeDreamJson {
            kind: "C".into(),
            n: d.n,
            crosses: d.crosses.iter().copied().collect(),
        }
    }
}

impl PipeDreamJson {
    pub fn into_a(self) -> Result<PipeDreamA> {
        if self.kind != "A" {
            return Err(Error::Format(format!("expected type \"A\", got {:?}", self.kind)));
        }
        PipeDreamA::new(self.n, self.crosses)
    }

    pub fn into_c(self) -> Result<SkewPipeDreamC> {
        if self.kind != "C" {
            return Err(Error::Format(format!("expected type \"C\", got {:?}", self.kind)));
        }
        SkewPipeDreamC::new(self.n, self.crosses)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn staircase_example() -> PipeDreamA {
        PipeDreamA::new(
            6,
            [(1, 1), (1, 2), (1, 3), (1, 4), (2, 3), (3, 1), (4, 1), (5, 1)],
        )
        .unwrap()
    }

    fn skew_example() -> SkewPipeDreamC {
        SkewPipeDreamC::new(
            4,
            [
                (1, 1),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
                (3, 3),
                (3, 4),
                (3, 5),
                (4, 4),
            ],
        )
        .unwrap()
    }

    #[test]
    fn two_row_headline_fixture() {
        let d = BasicPipeDream::from_filled(5, &[1, 2, 3, 4], &[3]).unwrap();
        let (r, j, offsprings) = two_row_mitosis(&d);
        assert_eq!(r, 4);
        assert_eq!(j, vec![1, 2, 4]);
        let filled: Vec<_> = offsprings.iter().map(|o| o.filled()).collect();
        assert_eq!(
            filled,
            vec![
                (vec![2, 3, 4], vec![3]),
                (vec![3, 4], vec![1, 3]),
                (vec![3], vec![1, 2, 3]),
            ]
        );
    }

    #[test]
    fn two_row_edge_cases() {
        let empty_first = BasicPipeDream::from_filled(3, &[2, 3], &[]).unwrap();
        let (r, j, offsprings) = two_row_mitosis(&empty_first);
        assert_eq!((r, j.len(), offsprings.len()), (0, 0, 0));

        let single = BasicPipeDream::from_filled(1, &[1], &[]).unwrap();
        let (r, j, offsprings) = two_row_mitosis(&single);
        assert_eq!((r, j), (1, vec![1]));
        assert_eq!(offsprings.len(), 1);
        assert_eq!(offsprings[0].size(), 0);
    }

    #[test]
    fn two_row_properties_exhaustive() {
        for ell in 0..=4usize {
            for mask in 0u32..(1 << (2 * ell + 1)) {
                let a_row: Vec<bool> = (0..=ell).map(|k| mask & (1 << k) != 0).collect();
                let b_row: Vec<bool> = (0..ell).map(|k| mask & (1 << (ell + 1 + k)) != 0).collect();
                let d = BasicPipeDream::new(ell, a_row, b_row).unwrap();
                let (_, j, offsprings) = two_row_mitosis(&d);
                assert_eq!(offsprings.len(), j.len());
                if !d.a_row[0] {
                    assert!(offsprings.is_empty());
                }
                let distinct: BTreeSet<_> = offsprings.iter().cloned().collect();
                assert_eq!(distinct.len(), offsprings.len());
                for child in &offsprings {
                    assert_eq!(child.size() + 1, d.size());
                }
            }
        }
    }

    #[test]
    fn mitosis_a_splits_the_staircase_example() {
        let d = staircase_example();
        let out = mitosis_a(1, &d).unwrap();
        let expect: Vec<PipeDreamA> = [
            vec![(1, 2), (1, 3), (1, 4), (2, 3), (3, 1), (4, 1), (5, 1)],
            vec![(1, 3), (1, 4), (2, 1), (2, 3), (3, 1), (4, 1), (5, 1)],
            vec![(1, 3), (2, 1), (2, 2), (2, 3), (3, 1), (4, 1), (5, 1)],
        ]
        .into_iter()
        .map(|cells| PipeDreamA::new(6, cells).unwrap())
        .collect();
        assert_eq!(out, expect);

        for i in [2, 3, 4, 6] {
            assert!(mitosis_a(i, &d).unwrap().is_empty(), "i={i}");
        }
        let fifth = mitosis_a(5, &d).unwrap();
        let mut erased = d.crosses.clone();
        erased.remove(&(5, 1));
        assert_eq!(fifth, vec![PipeDreamA { n: 6, crosses: erased }]);
        assert!(matches!(mitosis_a(7, &d), Err(Error::Domain(_))));
    }

    #[test]
    fn mitosis_c_splits_the_skew_example() {
        let d = skew_example();
        let out = mitosis_c(1, &d).unwrap();
        let expect: BTreeSet<SkewPipeDreamC> = [
            vec![(1, 1), (1, 3), (2, 3), (2, 4), (3, 3), (3, 4), (3, 5), (4, 4)],
            vec![(1, 1), (1, 3), (1, 5), (2, 3), (3, 3), (3, 4), (3, 5), (4, 4)],
            vec![(1, 1), (1, 3), (1, 5), (2, 3), (2, 5), (3, 3), (3, 4), (3, 5)],
        ]
        .into_iter()
        .map(|cells| SkewPipeDreamC::new(4, cells).unwrap())
        .collect();
        assert_eq!(out.iter().cloned().collect::<BTreeSet<_>>(), expect);
        assert_eq!(out.len(), 3);

        for i in [2, 3] {
            assert!(mitosis_c(i, &d).unwrap().is_empty(), "i={i}");
        }
        let fourth = mitosis_c(4, &d).unwrap();
        let mut erased = d.crosses.clone();
        erased.remove(&(1, 1));
        assert_eq!(fourth, vec![SkewPipeDreamC { n: 4, crosses: erased }]);
    }

    #[test]
    fn mitosis_offsprings_stay_well_formed() {
        let d = skew_example();
        for i in 1..=4 {
            for child in mitosis_c(i, &d).unwrap() {
                SkewPipeDreamC::new(child.n, child.crosses.iter().copied()).unwrap();
            }
        }
        let d = staircase_example();
        for i in 1..=6 {
            for child in mitosis_a(i, &d).unwrap() {
                PipeDreamA::new(child.n, child.crosses.iter().copied()).unwrap();
                let same_rows = d
                    .crosses
                    .symmetric_difference(&child.crosses)
                    .all(|&(row, _)| row == i || row == i + 1);
                assert!(same_rows);
            }
        }
    }

    #[test]
    fn word_of_fixtures() {
        let empty = PipeDreamA::new(3, []).unwrap();
        let (word, reduced) = word_of(&empty);
        assert!(word.is_empty() && reduced);
        assert_eq!(permutation_of(&empty).one_line, vec![1, 2, 3, 4]);

        let single = PipeDreamA::new(2, [(1, 1)]).unwrap();
        let (word, reduced) = word_of(&single);
        assert_eq!(word, vec![1]);
        assert!(reduced);
        assert_eq!(permutation_of(&single).one_line, vec![2, 1, 3]);

        for n in 1..=4 {
            let full: Vec<Cell> = (1..=n)
                .flat_map(|i| (1..=n + 1 - i).map(move |j| (i, j)))
                .collect();
            let count = full.len();
            let d = PipeDreamA::new(n, full).unwrap();
            let (word, reduced) = word_of(&d);
            assert_eq!(word.len(), count);
            assert!(reduced);
            let w0 = weyl::w0(GroupType::A, n);
            assert_eq!(weyl::GroupElement::A(permutation_of(&d)), w0);
        }
    }

    #[test]
    fn reading_word_of_staircase_example() {
        let (word, reduced) = word_of(&staircase_example());
        assert_eq!(word, vec![4, 3, 2, 1, 4, 3, 4, 5]);
        assert!(reduced);
    }

    #[test]
    fn enumerate_fixtures() {
        let id = Permutation { one_line: vec![1, 2, 3] };
        let dreams = enumerate_reduced_pipe_dreams(2, &id).unwrap();
        assert_eq!(dreams, vec![PipeDreamA::new(2, []).unwrap()]);

        let w0 = Permutation { one_line: vec![3, 2, 1] };
        let dreams = enumerate_reduced_pipe_dreams(2, &w0).unwrap();
        assert_eq!(
            dreams,
            vec![PipeDreamA::new(2, [(1, 1), (1, 2), (2, 1)]).unwrap()]
        );

        let bad = Permutation { one_line: vec![1, 1, 2] };
        assert!(enumerate_reduced_pipe_dreams(2, &bad).is_err());
    }

    #[test]
    fn km_union_property_s4() {
        let report = km_report(3, MitosisRule::Standard).unwrap();
        assert!(report.ok(), "{:?}", report.mismatches);
        assert_eq!(report.checked, 36);
    }

    #[test]
    fn km_mutation_is_detected() {
        let report = km_report(3, MitosisRule::DropPrefixBound).unwrap();
        assert!(!report.ok());
    }

    #[test]
    fn render_round_trips() {
        let empty = PipeDreamA::new(2, []).unwrap();
        assert_eq!(empty.render(), ". .\n.");
        for d in [staircase_example(), PipeDreamA::new(2, [(1, 2)]).unwrap()] {
            let text = d.render();
            assert_eq!(PipeDreamA::parse(d.n, &text).unwrap(), d);
        }
        let skew = skew_example();
        assert_eq!(SkewPipeDreamC::parse(4, &skew.render()).unwrap(), skew);
        assert!(matches!(
            PipeDreamA::parse(2, "x .\n."),
            Err(Error::Format(_))
        ));
        assert!(matches!(PipeDreamA::parse(2, ". ."), Err(Error::Format(_))));
    }

    #[test]
    fn json_round_trips() {
        let d = staircase_example();
        let wire = PipeDreamJson::from(&d);
        let text = serde_json::to_string(&wire).unwrap();
        let back: PipeDreamJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.into_a().unwrap(), d);
        let skew = skew_example();
        let wire = PipeDreamJson::from(&skew);
        assert!(wire.crosses.windows(2).all(|w| w[0] < w[1]));
        let text = serde_json::to_string(&wire).unwrap();
        let back: PipeDreamJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.into_c().unwrap(), skew);
    }
}
