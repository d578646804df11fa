//! Signed lists, runs, cost/width, and sublist decompositions.
//!
//! A [`SignedList`] is a generalized Dyck path: each nonzero entry is an up
//! step (positive) or a down step (negative) of that magnitude. The list is
//! *generalized Catalan* when the path starts and ends on the axis and never
//! dips below it.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// An ordered list of nonzero integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct SignedList {
    entries: Vec<i64>,
}

impl SignedList {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if let Some(i) = entries.iter().position(|&v| v == 0) {
            return Err(Error::ZeroEntry { position: i + 1 });
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry at 1-based `position`.
    pub fn at(&self, position: usize) -> i64 {
        self.entries[position - 1]
    }

    pub fn sum(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn is_generalized_catalan(&self) -> bool {
        is_catalan_values(&self.entries)
    }

    pub fn prefix_sums(&self) -> Vec<i64> {
        prefix_sums(&self.entries)
    }

    pub fn run_profile(&self) -> Result<RunProfile> {
        RunProfile::of(self)
    }

    /// Sum of per-run absolute maxima.
    pub fn cost(&self) -> Result<i64> {
        Ok(self.run_profile()?.cost())
    }

    pub fn width(&self) -> Result<usize> {
        if self.is_empty() {
            return Err(Error::EmptyList);
        }
        Ok(self.len())
    }

    /// Entries at `positions` (1-based), in increasing position order.
    pub fn sublist(&self, positions: &[usize]) -> Result<SignedList> {
        let positions = normalize_positions(positions, self.len())?;
        Ok(SignedList {
            entries: positions.iter().map(|&p| self.at(p)).collect(),
        })
    }

    /// The list `(-x_t, ..., -x_1)`: the same path traversed backwards.
    pub fn reversed_negated(&self) -> SignedList {
        SignedList {
            entries: self.entries.iter().rev().map(|v| -v).collect(),
        }
    }
}

impl fmt::Display for SignedList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for SignedList {
    type Err = Error;

    /// Parses comma- and/or whitespace-separated integers. Surrounding
    /// parentheses are accepted; an empty string is the empty list.
    fn from_str(s: &str) -> Result<Self> {
        let values = parse_integers(s)?;
        SignedList::new(values)
    }
}

impl TryFrom<Vec<i64>> for SignedList {
    type Error = Error;

    fn try_from(entries: Vec<i64>) -> Result<Self> {
        SignedList::new(entries)
    }
}

/// Tokenizes a comma/whitespace separated integer list.
pub(crate) fn parse_integers(s: &str) -> Result<Vec<i64>> {
    let mut body = s.trim();
    if let Some(inner) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
        body = inner.trim();
    }
    if body.is_empty() {
        return Ok(Vec::new());
    }
    let mut values = Vec::new();
    let mut index = 0;
    for piece in body.split(',') {
        let mut any = false;
        for token in piece.split_whitespace() {
            any = true;
            index += 1;
            let v = token.parse::<i64>().map_err(|_| Error::InvalidToken {
                index,
                token: token.to_string(),
            })?;
            values.push(v);
        }
        if !any {
            return Err(Error::EmptyToken { index: index + 1 });
        }
    }
    Ok(values)
}

/// Catalan predicate on raw values. Zeros are tolerated, which is what
/// column vectors of Kostka pairs need.
pub fn is_catalan_values(values: &[i64]) -> bool {
    let mut acc = 0i64;
    for &v in values {
        acc += v;
        if acc < 0 {
            return false;
        }
    }
    acc == 0
}

pub fn prefix_sums(values: &[i64]) -> Vec<i64> {
    values
        .iter()
        .scan(0i64, |acc, &v| {
            *acc += v;
            Some(*acc)
        })
        .collect()
}

/// Sorts and dedups 1-based positions, rejecting anything outside `1..=len`.
pub fn normalize_positions(positions: &[usize], len: usize) -> Result<Vec<usize>> {
    let mut out = positions.to_vec();
    out.sort_unstable();
    out.dedup();
    if let Some(&bad) = out.iter().find(|&&p| p == 0 || p > len) {
        return Err(Error::PositionOutOfRange { position: bad, len });
    }
    Ok(out)
}

/// `[1..=len]` minus `positions` (assumed normalized).
pub fn complement_positions(positions: &[usize], len: usize) -> Vec<usize> {
    let mut member = vec![false; len + 1];
    for &p in positions {
        member[p] = true;
    }
    (1..=len).filter(|&p| !member[p]).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Up,
    Down,
}

impl Sign {
    pub fn of(v: i64) -> Sign {
        if v > 0 {
            Sign::Up
        } else {
            Sign::Down
        }
    }
}

/// A maximal block of same-signed entries, positions `start..=end` (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Run {
    pub sign: Sign,
    pub start: usize,
    pub end: usize,
    /// Largest absolute value in the run.
    pub max_abs: i64,
}

impl Run {
    pub fn positions(&self) -> std::ops::RangeInclusive<usize> {
        self.start..=self.end
    }

    pub fn size(&self) -> usize {
        self.end + 1 - self.start
    }
}

/// Run decomposition of a list, with the up-run maxima (`alphas`) and
/// down-run absolute maxima (`betas`) listed in path order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunProfile {
    pub runs: Vec<Run>,
    /// Half the number of runs.
    pub y: usize,
    pub alphas: Vec<i64>,
    pub betas: Vec<i64>,
    pub up_index_sets: Vec<std::ops::RangeInclusive<usize>>,
    pub down_index_sets: Vec<std::ops::RangeInclusive<usize>>,
}

impl RunProfile {
    pub fn of(xs: &SignedList) -> Result<RunProfile> {
        if xs.is_empty() {
            return Err(Error::EmptyList);
        }
        let mut runs: Vec<Run> = Vec::new();
        for (i, &v) in xs.entries().iter().enumerate() {
            let pos = i + 1;
            match runs.last_mut() {
                Some(run) if run.sign == Sign::of(v) => {
                    run.end = pos;
                    run.max_abs = run.max_abs.max(v.abs());
                }
                _ => runs.push(Run {
                    sign: Sign::of(v),
                    start: pos,
                    end: pos,
                    max_abs: v.abs(),
                }),
            }
        }
        let (mut alphas, mut betas) = (Vec::new(), Vec::new());
        let (mut ups, mut downs) = (Vec::new(), Vec::new());
        for run in &runs {
            match run.sign {
                Sign::Up => {
                    alphas.push(run.max_abs);
                    ups.push(run.positions());
                }
                Sign::Down => {
                    betas.push(run.max_abs);
                    downs.push(run.positions());
                }
            }
        }
        Ok(RunProfile {
            y: runs.len() / 2,
            runs,
            alphas,
            betas,
            up_index_sets: ups,
            down_index_sets: downs,
        })
    }

    pub fn cost(&self) -> i64 {
        self.runs.iter().map(|r| r.max_abs).sum()
    }

    pub fn width(&self) -> usize {
        self.runs.last().map_or(0, |r| r.end)
    }

    /// For each position (index `p - 1`), the 0-based index of the run it
    /// belongs to among runs of its own sign.
    pub fn run_index_by_position(&self) -> Vec<usize> {
        let mut out = vec![0; self.width()];
        let (mut up, mut down) = (0, 0);
        for run in &self.runs {
            let idx = match run.sign {
                Sign::Up => {
                    up += 1;
                    up - 1
                }
                Sign::Down => {
                    down += 1;
                    down - 1
                }
            };
            for p in run.positions() {
                out[p - 1] = idx;
            }
        }
        out
    }
}

/// A witness of reducibility: a nonempty proper set of positions whose
/// sublist and complementary sublist are both generalized Catalan.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Decomposition {
    /// Sorted 1-based positions.
    pub part: Vec<usize>,
}

impl Decomposition {
    /// Validates `positions` as a decomposition of `xs`.
    pub fn new(xs: &SignedList, positions: &[usize]) -> Result<Decomposition> {
        let part = normalize_positions(positions, xs.len())?;
        if !is_valid_decomposition(xs, &part) {
            return Err(Error::Precondition(format!(
                "positions {part:?} do not split the list into two Catalan sublists"
            )));
        }
        Ok(Decomposition { part })
    }

    /// Builds from positions the caller has already shown valid.
    pub(crate) fn from_sorted(mut part: Vec<usize>) -> Decomposition {
        part.sort_unstable();
        Decomposition { part }
    }

    pub fn complement(&self, len: usize) -> Vec<usize> {
        complement_positions(&self.part, len)
    }
}

/// True iff `positions` and its complement are both nonempty and both
/// select generalized Catalan sublists. Out-of-range positions yield false.
pub fn is_valid_decomposition(xs: &SignedList, positions: &[usize]) -> bool {
    let Ok(part) = normalize_positions(positions, xs.len()) else {
        return false;
    };
    if part.is_empty() || part.len() == xs.len() {
        return false;
    }
    let mut member = vec![false; xs.len()];
    for &p in &part {
        member[p - 1] = true;
    }
    let (mut inside, mut outside) = (0i64, 0i64);
    for (v, &m) in xs.entries().iter().zip(&member) {
        let acc = if m { &mut inside } else { &mut outside };
        *acc += v;
        if *acc < 0 {
            return false;
        }
    }
    inside == 0 && outside == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn list(v: &[i64]) -> SignedList {
        SignedList::new(v.to_vec()).unwrap()
    }

    const EXAMPLE: [i64; 19] = [
        5, 5, 4, 4, -3, -3, -3, -3, -3, -1, 5, 5, 5, 3, -4, -4, -4, -4, -4,
    ];

    #[test]
    fn catalan_predicate() {
        assert!(list(&EXAMPLE).is_generalized_catalan());
        assert!(list(&[1, -1, 1, -1]).is_generalized_catalan());
        assert!(!list(&[-1, 1]).is_generalized_catalan());
        assert!(!list(&[2, -1]).is_generalized_catalan());
        assert!(list(&[]).is_generalized_catalan());
    }

    #[test]
    fn zero_entries_rejected() {
        assert_eq!(
            SignedList::new(vec![1, 0, -1]),
            Err(Error::ZeroEntry { position: 2 })
        );
    }

    #[test]
    fn prefix_sums_examples() {
        assert_eq!(list(&[1, -1]).prefix_sums(), vec![1, 0]);
        assert_eq!(list(&[2, -1, -1]).prefix_sums(), vec![2, 1, 0]);
        assert_eq!(list(&[5, -3, -1, 3, -4]).prefix_sums(), vec![5, 2, 1, 4, 0]);
    }

    #[test]
    fn run_profile_examples() {
        let p = list(&EXAMPLE).run_profile().unwrap();
        assert_eq!(p.runs.len(), 4);
        assert_eq!(p.y, 2);
        assert_eq!(p.alphas, vec![5, 5]);
        assert_eq!(p.betas, vec![3, 4]);
        assert_eq!(p.up_index_sets, vec![1..=4, 11..=14]);
        assert_eq!(p.down_index_sets, vec![5..=10, 15..=19]);

        let p = list(&[1, -1]).run_profile().unwrap();
        assert_eq!((p.runs.len(), p.y), (2, 1));
        assert_eq!((p.alphas, p.betas), (vec![1], vec![1]));

        let p = list(&[2, -1, -1]).run_profile().unwrap();
        assert_eq!((p.y, p.alphas, p.betas), (1, vec![2], vec![1]));

        assert_eq!(list(&[]).run_profile(), Err(Error::EmptyList));
    }

    #[test]
    fn cost_and_width() {
        let x = list(&EXAMPLE);
        assert_eq!((x.cost().unwrap(), x.width().unwrap()), (17, 19));
        let x = list(&[1, -1]);
        assert_eq!((x.cost().unwrap(), x.width().unwrap()), (2, 2));
        let x = list(&[2, -1, -1]);
        assert_eq!((x.cost().unwrap(), x.width().unwrap()), (3, 3));
        assert_eq!(list(&[]).cost(), Err(Error::EmptyList));
    }

    #[test]
    fn sublist_examples() {
        let x = list(&EXAMPLE);
        assert_eq!(
            x.sublist(&[1, 5, 10, 14, 15]).unwrap(),
            list(&[5, -3, -1, 3, -4])
        );
        let all: Vec<usize> = (1..=19).collect();
        assert_eq!(x.sublist(&all).unwrap(), x);
        assert_eq!(
            x.sublist(&[0]),
            Err(Error::PositionOutOfRange {
                position: 0,
                len: 19
            })
        );
        assert!(x.sublist(&[20]).is_err());

        let w = list(&[
            5, -3, 5, -3, -3, 4, -3, 4, -3, -1, 5, -4, 5, -4, -4, 5, -4, 3, -4,
        ]);
        assert_eq!(
            w.sublist(&[3, 4, 6, 9, 10, 11, 12, 13, 14, 15]).unwrap(),
            list(&[5, -3, 4, -3, -1, 5, -4, 5, -4, -4])
        );
    }

    #[test]
    fn decomposition_validity() {
        let x = list(&EXAMPLE);
        assert!(is_valid_decomposition(&x, &[1, 5, 10, 14, 15]));
        let comp = complement_positions(&[1, 5, 10, 14, 15], 19);
        assert!(is_valid_decomposition(&x, &comp));
        assert_eq!(
            x.sublist(&comp).unwrap(),
            list(&[5, 4, 4, -3, -3, -3, -3, 5, 5, 5, -4, -4, -4, -4])
        );

        let x = list(&[2, -1, -1]);
        for mask in 0u32..8 {
            let part: Vec<usize> = (1..=3).filter(|p| mask >> (p - 1) & 1 == 1).collect();
            assert!(!is_valid_decomposition(&x, &part));
        }

        let x = list(&[1, -1, 1, -1]);
        assert!(is_valid_decomposition(&x, &[1, 2]));
        assert!(!is_valid_decomposition(&x, &[]));
        assert!(!is_valid_decomposition(&x, &[1, 2, 3, 4]));
        assert!(!is_valid_decomposition(&x, &[9]));
        assert!(Decomposition::new(&x, &[2, 1]).is_ok());
        assert!(Decomposition::new(&x, &[2, 3]).is_err());
    }

    #[test]
    fn parse_forms() {
        assert_eq!(
            "5,-3, -1 3\t-4".parse::<SignedList>().unwrap(),
            list(&[5, -3, -1, 3, -4])
        );
        assert_eq!("(1 -1)".parse::<SignedList>().unwrap(), list(&[1, -1]));
        assert_eq!("".parse::<SignedList>().unwrap(), list(&[]));
        assert_eq!(
            "1,,2".parse::<SignedList>(),
            Err(Error::EmptyToken { index: 2 })
        );
        assert_eq!(
            "1,-1,".parse::<SignedList>(),
            Err(Error::EmptyToken { index: 3 })
        );
        assert_eq!(
            "1,x".parse::<SignedList>(),
            Err(Error::InvalidToken {
                index: 2,
                token: "x".into()
            })
        );
        assert_eq!(
            "3,0,-3".parse::<SignedList>(),
            Err(Error::ZeroEntry { position: 2 })
        );
        assert_eq!(list(&[1, -2]).to_string(), "1,-2");
    }

    #[test]
    fn reversed_negated_is_catalan() {
        let x = list(&EXAMPLE);
        let w = x.reversed_negated();
        assert!(w.is_generalized_catalan());
        assert_eq!(w.reversed_negated(), x);
    }
}
