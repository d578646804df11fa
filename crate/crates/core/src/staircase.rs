//! Greedy reorderings of a Catalan list.
//!
//! Both constructions walk the list with two queues, the unused negative
//! positions and the unused positive positions, each consumed in increasing
//! order. [`build_pi`] takes the next down step whenever the walk stays
//! nonnegative after it; [`build_sigma`] takes a down step whenever the walk is
//! currently nonnegative, so its running sums oscillate around zero.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::catalan::{normalize_positions, prefix_sums, SignedList};
use crate::error::{Error, Result};

/// A permutation of positions together with the reordered list it induces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreedyPermutation {
    /// `one_line[q - 1]` is the original position placed at step `q`.
    pub one_line: Vec<usize>,
    /// The list `x ∘ perm`.
    pub reordered: SignedList,
    /// Prefix sums of `reordered`.
    pub running_sums: Vec<i64>,
}

impl GreedyPermutation {
    pub fn len(&self) -> usize {
        self.one_line.len()
    }

    pub fn is_empty(&self) -> bool {
        self.one_line.is_empty()
    }

    /// Image of step `q` (1-based).
    pub fn apply(&self, q: usize) -> usize {
        self.one_line[q - 1]
    }

    /// `inverse()[p - 1]` is the step at which position `p` is placed.
    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.len()];
        for (q, &p) in self.one_line.iter().enumerate() {
            inv[p - 1] = q + 1;
        }
        inv
    }

    /// Sorted image of a set of steps.
    pub fn image(&self, steps: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = steps.iter().map(|&q| self.apply(q)).collect();
        out.sort_unstable();
        out
    }

    /// Running sum after step `h`; `0` for `h == 0`.
    pub fn running_sum(&self, h: usize) -> i64 {
        if h == 0 {
            0
        } else {
            self.running_sums[h - 1]
        }
    }

    pub fn is_bijection(&self) -> bool {
        let mut seen = vec![false; self.len()];
        for &p in &self.one_line {
            if p == 0 || p > self.len() || seen[p - 1] {
                return false;
            }
            seen[p - 1] = true;
        }
        true
    }
}

impl fmt::Display for GreedyPermutation {
    /// One-line notation, e.g. `(1 3 2 4)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.one_line.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Builds the greedy staircase permutation of a Catalan list.
///
/// Step 1 places position 1. At each later step the least unused negative
/// position is placed if the walk stays nonnegative after it; otherwise the
/// least unused positive position is placed.
pub fn build_pi(xs: &SignedList) -> Result<GreedyPermutation> {
    if xs.is_empty() {
        return Err(Error::EmptyList);
    }
    if !xs.is_generalized_catalan() {
        return Err(Error::NotCatalan);
    }
    greedy(
        xs,
        |sum, next_negative| matches!(next_negative, Some(v) if sum + v >= 0),
    )
}

/// Builds the oscillating permutation used for single-peak lists.
///
/// Step 1 places position 1. At each later step the least unused negative
/// position is placed if the running sum is nonnegative, otherwise the least
/// unused positive position. Defined for any nonempty zero-sum list.
pub fn build_sigma(xs: &SignedList) -> Result<GreedyPermutation> {
    if xs.is_empty() {
        return Err(Error::EmptyList);
    }
    let sum = xs.sum();
    if sum != 0 {
        return Err(Error::NonzeroSum { sum });
    }
    greedy(xs, |sum, _| sum >= 0)
}

fn greedy(
    xs: &SignedList,
    take_negative: impl Fn(i64, Option<i64>) -> bool,
) -> Result<GreedyPermutation> {
    let t = xs.len();
    let mut negatives: VecDeque<usize> = VecDeque::new();
    let mut positives: VecDeque<usize> = VecDeque::new();
    for p in 2..=t {
        if xs.at(p) < 0 {
            negatives.push_back(p);
        } else {
            positives.push_back(p);
        }
    }

    let mut one_line = Vec::with_capacity(t);
    one_line.push(1);
    let mut sum = xs.at(1);
    for _ in 2..=t {
        let next_negative = negatives.front().map(|&p| xs.at(p));
        let queue = if take_negative(sum, next_negative) {
            &mut negatives
        } else {
            &mut positives
        };
        // Both constructions are well defined on their admissible inputs, so
        // the chosen queue is never empty.
        let p = queue.pop_front().ok_or_else(|| {
            Error::Precondition("greedy construction ran out of candidates".into())
        })?;
        sum += xs.at(p);
        one_line.push(p);
    }

    let reordered = SignedList::new(one_line.iter().map(|&p| xs.at(p)).collect())?;
    let running_sums = prefix_sums(reordered.entries());
    Ok(GreedyPermutation {
        one_line,
        reordered,
        running_sums,
    })
}

/// Checks the three order-transfer clauses of a staircase permutation: for
/// `i < j`, `i` is placed before `j` whenever both entries are positive, both
/// are negative, or `x(i) < 0 < x(j)`.
pub fn check_order_transfer(xs: &SignedList, perm: &GreedyPermutation) -> bool {
    if perm.len() != xs.len() || !perm.is_bijection() {
        return false;
    }
    let inv = perm.inverse();
    let t = xs.len();
    for i in 1..=t {
        for j in i + 1..=t {
            let (a, b) = (xs.at(i), xs.at(j));
            let constrained = (a > 0 && b > 0) || (a < 0 && b < 0) || (a < 0 && b > 0);
            if constrained && inv[i - 1] >= inv[j - 1] {
                return false;
            }
        }
    }
    true
}

/// Maps a set of steps `T`, whose reordered sublist is Catalan, to the
/// original positions `perm(T)`. The sublist of `xs` at the returned
/// positions is then Catalan as well.
pub fn restrict_through(
    xs: &SignedList,
    perm: &GreedyPermutation,
    steps: &[usize],
) -> Result<Vec<usize>> {
    let steps = normalize_positions(steps, perm.len())?;
    if !perm.reordered.sublist(&steps)?.is_generalized_catalan() {
        return Err(Error::Precondition(
            "reordered sublist at the given steps is not Catalan".into(),
        ));
    }
    let image = perm.image(&steps);
    debug_assert!(xs.sublist(&image)?.is_generalized_catalan());
    Ok(image)
}
