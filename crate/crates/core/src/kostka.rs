//! Partitions, dominance, and column splits of Kostka cone lattice points.
//!
//! A pair `(λ, μ)` of partitions with `|λ| = |μ|` and `λ ≥ μ` in dominance
//! order is a lattice point of the Kostka cone. Choosing a set `C` of column
//! indices of `λ` cuts both Young diagrams into the columns in `C` and the
//! rest; the pair is *commonly reducible* when both halves are again Kostka
//! pairs. Column `j` contributes `μ'_j - λ'_j` to the column vector, and a
//! column set is a valid half exactly when its column vector is Catalan.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::catalan::{complement_positions, is_catalan_values, parse_integers, SignedList};
use crate::error::{Error, Result};
use crate::reducer::{self, Certificate, ReduceOutcome, DEFAULT_SEARCH_LIMIT};

/// A weakly decreasing list of nonnegative parts. Trailing zeros are dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Partition> {
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{} < {}", w[0], w[1])));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts, `ℓ(λ)`.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Largest part, `λ_1` (0 for the empty partition).
    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Part `i` (1-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn padded(&self, rows: usize) -> Vec<usize> {
        let mut v = self.parts.clone();
        v.resize(rows.max(v.len()), 0);
        v
    }

    /// Transposed Young diagram: `λ'_j = |{i : λ_i ≥ j}|`.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.first())
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn is_rectangle(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    /// Keeps only the columns in `columns` (1-based). Row `i` of the result
    /// counts the kept columns `c ≤ λ_i`; columns past `λ_1` are empty.
    pub fn restrict_columns(&self, columns: &[usize]) -> Result<Partition> {
        if columns.contains(&0) {
            return Err(Error::ColumnOutOfRange {
                column: 0,
                max: self.first(),
            });
        }
        let mut cols = columns.to_vec();
        cols.sort_unstable();
        cols.dedup();
        let parts = self
            .parts
            .iter()
            .map(|&p| cols.iter().take_while(|&&c| c <= p).count())
            .collect();
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Partition> {
        let values = parse_integers(s)?;
        let parts = values
            .into_iter()
            .map(|v| {
                usize::try_from(v)
                    .map_err(|_| Error::InvalidPartition(format!("negative part {v}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// `a ≥ b` in dominance order: every prefix sum of `a` is at least the
/// matching prefix sum of `b`.
pub fn dominates(a: &Partition, b: &Partition) -> Result<bool> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch {
            left: a.size(),
            right: b.size(),
        });
    }
    let rows = a.length().max(b.length());
    let (mut sa, mut sb) = (0, 0);
    for i in 1..=rows {
        sa += a.part(i);
        sb += b.part(i);
        if sa < sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A lattice point `(λ, μ)` of the Kostka cone in `r` rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct KostkaPair {
    lambda: Partition,
    mu: Partition,
    r: usize,
}

impl KostkaPair {
    /// Validates the cone inequalities. `r` defaults to `max(ℓ(λ), ℓ(μ))`.
    pub fn new(lambda: Partition, mu: Partition, r: Option<usize>) -> Result<KostkaPair> {
        let r = r.unwrap_or(lambda.length().max(mu.length()));
        if lambda.length() > r || mu.length() > r {
            return Err(Error::InvalidPair(format!(
                "more than r = {r} nonzero parts in ({lambda}) / ({mu})"
            )));
        }
        if lambda.size() != mu.size() {
            return Err(Error::InvalidPair(format!(
                "sizes differ: |λ| = {}, |μ| = {}",
                lambda.size(),
                mu.size()
            )));
        }
        if !dominates(&lambda, &mu)? {
            return Err(Error::InvalidPair(format!(
                "({lambda}) does not dominate ({mu})"
            )));
        }
        Ok(KostkaPair { lambda, mu, r })
    }

    /// Parses `λ / μ`, e.g. `5,3,1 / 3,3,2,1`.
    pub fn parse(s: &str, r: Option<usize>) -> Result<KostkaPair> {
        let (l, m) = s
            .split_once('/')
            .ok_or_else(|| Error::InvalidPair(format!("expected `λ / μ`, got {s:?}")))?;
        KostkaPair::new(l.parse()?, m.parse()?, r)
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn size(&self) -> usize {
        self.lambda.size()
    }

    /// `x_j = μ'_j - λ'_j` for `1 ≤ j ≤ λ_1`.
    pub fn column_vector(&self) -> Vec<i64> {
        let lc = self.lambda.conjugate();
        let mc = self.mu.conjugate();
        (1..=self.lambda.first())
            .map(|j| mc.part(j) as i64 - lc.part(j) as i64)
            .collect()
    }

    /// Both partitions restricted to `columns ⊆ [λ_1]`, without checking
    /// dominance of the result.
    pub fn restrict_unchecked(&self, columns: &[usize]) -> Result<(Partition, Partition)> {
        let max = self.lambda.first();
        if let Some(&column) = columns.iter().find(|&&c| c == 0 || c > max) {
            return Err(Error::ColumnOutOfRange { column, max });
        }
        Ok((
            self.lambda.restrict_columns(columns)?,
            self.mu.restrict_columns(columns)?,
        ))
    }

    /// The pair restricted to `columns`, validated as a Kostka pair.
    pub fn restrict(&self, columns: &[usize]) -> Result<KostkaPair> {
        let (l, m) = self.restrict_unchecked(columns)?;
        KostkaPair::new(l, m, Some(self.r))
    }
}

impl fmt::Display for KostkaPair {
    /// `((λ_1,…,λ_r),(μ_1,…,μ_r))`, zero padded to `r` rows.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("((")?;
        write_parts(f, &self.lambda.padded(self.r))?;
        f.write_str("),(")?;
        write_parts(f, &self.mu.padded(self.r))?;
        f.write_str("))")
    }
}

/// `column_vector` of a pair as a free function.
pub fn column_vector(kp: &KostkaPair) -> Vec<i64> {
    kp.column_vector()
}

pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

pub fn restrict_columns(p: &Partition, columns: &[usize]) -> Result<Partition> {
    p.restrict_columns(columns)
}

/// A set of columns of `λ` witnessing common reducibility.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColumnSplit {
    /// Sorted 1-based column indices.
    pub columns: Vec<usize>,
}

impl ColumnSplit {
    pub fn complement(&self, kp: &KostkaPair) -> Vec<usize> {
        complement_positions(&self.columns, kp.lambda().first())
    }

    /// `((λ•, μ•), (λ∘, μ∘))` for the chosen and the remaining columns.
    pub fn halves(&self, kp: &KostkaPair) -> Result<(KostkaPair, KostkaPair)> {
        Ok((
            kp.restrict(&self.columns)?,
            kp.restrict(&self.complement(kp))?,
        ))
    }
}

/// True iff `columns` is a nonempty proper subset of `[λ_1]` and restricting
/// `(λ, μ)` to it and to its complement gives two Kostka pairs.
pub fn verify_column_split(kp: &KostkaPair, columns: &[usize]) -> bool {
    let t = kp.lambda().first();
    let mut cols = columns.to_vec();
    cols.sort_unstable();
    cols.dedup();
    if cols.is_empty() || cols.len() >= t || cols.iter().any(|&c| c == 0 || c > t) {
        return false;
    }
    let rest = complement_positions(&cols, t);
    [cols, rest].iter().all(|side| {
        kp.restrict_unchecked(side)
            .is_ok_and(|(l, m)| l.size() > 0 && dominates(&l, &m).unwrap_or(false))
    })
}

/// Same check through the column vector: both sides Catalan, zeros allowed.
pub fn verify_column_split_by_vector(kp: &KostkaPair, columns: &[usize]) -> bool {
    let x = kp.column_vector();
    let t = x.len();
    let mut cols = columns.to_vec();
    cols.sort_unstable();
    cols.dedup();
    if cols.is_empty() || cols.len() >= t || cols.iter().any(|&c| c == 0 || c > t) {
        return false;
    }
    let rest = complement_positions(&cols, t);
    let pick = |side: &[usize]| side.iter().map(|&c| x[c - 1]).collect::<Vec<_>>();
    is_catalan_values(&pick(&cols)) && is_catalan_values(&pick(&rest))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Rectangle {
    pub rows: usize,
    pub columns: usize,
}

impl Rectangle {
    fn of(p: &Partition) -> Option<Rectangle> {
        p.is_rectangle().then(|| Rectangle {
            rows: p.length(),
            columns: p.first(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "reason")]
pub enum IrreducibleReason {
    /// `λ_1 = 1`: there is only one column to split.
    SingleColumn,
    /// The column vector is `(α,…,α,-β,…,-β)` with `gcd(α, β) = 1`.
    Coprime { alpha1: i64, beta1: i64 },
    /// Every column subset was checked.
    Exhaustive,
}

/// Why a pair admits no column split, with the rectangle shapes of `λ` and
/// `μ` when they are rectangles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KostkaCertificate {
    pub reason: IrreducibleReason,
    pub lambda_rectangle: Option<Rectangle>,
    pub mu_rectangle: Option<Rectangle>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KostkaOutcome {
    Split(ColumnSplit),
    Irreducible(KostkaCertificate),
    Undecided { width: usize, limit: usize },
}

impl KostkaOutcome {
    pub fn kind(&self) -> &'static str {
        match self {
            KostkaOutcome::Split(_) => "split",
            KostkaOutcome::Irreducible(_) => "irreducible",
            KostkaOutcome::Undecided { .. } => "undecided",
        }
    }

    pub fn split(&self) -> Option<&ColumnSplit> {
        match self {
            KostkaOutcome::Split(s) => Some(s),
            _ => None,
        }
    }
}

/// Finds a column split using the default exhaustive-search limit.
pub fn common_reduce(kp: &KostkaPair) -> Result<KostkaOutcome> {
    common_reduce_with_limit(kp, DEFAULT_SEARCH_LIMIT)
}

/// Finds a column split of `(λ, μ)`.
///
/// A zero in the column vector splits off that single column. Otherwise the
/// column vector is a Catalan list of nonzero integers with
/// `cost ≤ ℓ(μ)` and `width = λ_1`, and the list reducer decides it.
pub fn common_reduce_with_limit(kp: &KostkaPair, search_limit: usize) -> Result<KostkaOutcome> {
    if kp.size() == 0 {
        return Err(Error::Precondition("the empty pair has no split".into()));
    }
    let certificate = |reason| {
        KostkaOutcome::Irreducible(KostkaCertificate {
            reason,
            lambda_rectangle: Rectangle::of(kp.lambda()),
            mu_rectangle: Rectangle::of(kp.mu()),
        })
    };
    let x = kp.column_vector();
    if x.len() == 1 {
        return Ok(certificate(IrreducibleReason::SingleColumn));
    }
    if let Some(j) = x.iter().position(|&v| v == 0) {
        let split = ColumnSplit {
            columns: vec![j + 1],
        };
        debug_assert!(verify_column_split(kp, &split.columns));
        return Ok(KostkaOutcome::Split(split));
    }

    // No zeros, so list positions are column indices.
    let xs = SignedList::new(x)?;
    let outcome = match reducer::reduce(&xs, search_limit)? {
        ReduceOutcome::Decomposition { decomposition, .. } => {
            let split = ColumnSplit {
                columns: decomposition.part,
            };
            debug_assert!(verify_column_split(kp, &split.columns));
            KostkaOutcome::Split(split)
        }
        ReduceOutcome::Irreducible(Certificate::Coprime { alpha1, beta1, .. }) => {
            certificate(IrreducibleReason::Coprime { alpha1, beta1 })
        }
        ReduceOutcome::Irreducible(Certificate::Exhaustive { .. }) => {
            certificate(IrreducibleReason::Exhaustive)
        }
        ReduceOutcome::Undecided { width, limit } => KostkaOutcome::Undecided { width, limit },
    };
    Ok(outcome)
}
