//! Constructive reducibility for generalized Catalan lists.
//!
//! * `cost < width`: [`reduce_strict`] reorders the list with the staircase
//!   permutation, splits the reordered walk into phases, and finds a phase
//!   with more qualifying steps than distinct admissible heights. Two steps at
//!   the same height bound a window whose preimage is a single-peak Catalan
//!   sublist; the rest stays Catalan.
//! * `cost == width` with at least two peaks: [`reduce_equality`] runs the
//!   same argument and, when every phase is exactly saturated, uses a zero of
//!   the walk or a repeated height inside the first up-phase.
//! * `cost == width` with one peak: [`reduce_y1`] either finds a zero-sum
//!   window of the oscillating permutation, splits by the gcd of the two
//!   step sizes, or certifies irreducibility.
//! * `cost > width`: [`reduce`] falls back to exhaustive search up to a
//!   width limit.

use std::collections::HashMap;
use std::fmt;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::catalan::{is_valid_decomposition, Decomposition, RunProfile, SignedList};
use crate::error::{Error, Result};
use crate::oracle::{self, SearchBudget};
use crate::staircase::{build_pi, build_sigma, GreedyPermutation};

/// Default width up to which [`reduce`] searches exhaustively when
/// `cost > width`.
pub const DEFAULT_SEARCH_LIMIT: usize = 24;

/// Phase decomposition of the staircase walk `x ∘ π`.
///
/// Up-phases partition the steps `1..=t`; down-phases partition the heights
/// indices `0..=t-1`. Phase `i` is 0-based here; `gammas`/`deltas` hold
/// 1-based steps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhaseProfile {
    /// First step placing an element of the i-th up-run.
    pub gammas: Vec<usize>,
    /// Last step placing an element of the j-th down-run.
    pub deltas: Vec<usize>,
    pub up_phases: Vec<RangeInclusive<usize>>,
    pub down_phases: Vec<RangeInclusive<usize>>,
    /// Number of down steps inside each up-phase.
    pub u: Vec<usize>,
    /// Number of indices `h` in each down-phase followed by an up step.
    pub d: Vec<usize>,
    pub alphas: Vec<i64>,
    pub betas: Vec<i64>,
}

impl PhaseProfile {
    /// Checks the structural facts the reducer relies on: both phase
    /// families are set partitions, `Σu + Σd = t`, and qualifying heights
    /// stay below the matching run maximum.
    pub fn check_invariants(&self, perm: &GreedyPermutation) -> std::result::Result<(), String> {
        let t = perm.len();
        let covered: Vec<usize> = self.up_phases.iter().flat_map(|r| r.clone()).collect();
        if covered != (1..=t).collect::<Vec<_>>() {
            return Err(format!(
                "up-phases {:?} do not partition 1..={t}",
                self.up_phases
            ));
        }
        let covered: Vec<usize> = self.down_phases.iter().flat_map(|r| r.clone()).collect();
        if covered != (0..t).collect::<Vec<_>>() {
            return Err(format!(
                "down-phases {:?} do not partition 0..{t}",
                self.down_phases
            ));
        }
        let total: usize = self.u.iter().sum::<usize>() + self.d.iter().sum::<usize>();
        if total != t {
            return Err(format!("Σu + Σd = {total}, expected {t}"));
        }
        let x = &perm.reordered;
        for (i, phase) in self.up_phases.iter().enumerate() {
            for h in phase.clone().filter(|&h| x.at(h) < 0) {
                let s = perm.running_sum(h);
                if !(0..self.alphas[i]).contains(&s) {
                    return Err(format!(
                        "height {s} at down step {h} outside [0, {})",
                        self.alphas[i]
                    ));
                }
            }
        }
        for (j, phase) in self.down_phases.iter().enumerate() {
            for h in phase.clone().filter(|&h| x.at(h + 1) > 0) {
                let s = perm.running_sum(h);
                if !(0..self.betas[j]).contains(&s) {
                    return Err(format!(
                        "height {s} before up step {} outside [0, {})",
                        h + 1,
                        self.betas[j]
                    ));
                }
            }
        }
        Ok(())
    }

    /// Down steps of up-phase `i` with their heights.
    fn up_candidates(&self, perm: &GreedyPermutation, i: usize) -> Vec<(usize, i64)> {
        self.up_phases[i]
            .clone()
            .filter(|&h| perm.reordered.at(h) < 0)
            .map(|h| (h, perm.running_sum(h)))
            .collect()
    }

    /// Indices `h` of down-phase `j` followed by an up step, with heights.
    fn down_candidates(&self, perm: &GreedyPermutation, j: usize) -> Vec<(usize, i64)> {
        self.down_phases[j]
            .clone()
            .filter(|&h| perm.reordered.at(h + 1) > 0)
            .map(|h| (h, perm.running_sum(h)))
            .collect()
    }
}

/// Computes the phase profile of a Catalan list and its staircase permutation.
pub fn phase_profile(xs: &SignedList, perm: &GreedyPermutation) -> Result<PhaseProfile> {
    if !xs.is_generalized_catalan() {
        return Err(Error::NotCatalan);
    }
    if perm.len() != xs.len() || !perm.is_bijection() {
        return Err(Error::Precondition(
            "permutation does not match the list".into(),
        ));
    }
    let runs = xs.run_profile()?;
    let run_of = runs.run_index_by_position();
    let t = xs.len();
    let y = runs.y;

    let mut gammas = vec![0usize; y];
    let mut deltas = vec![0usize; y];
    for l in 1..=t {
        let p = perm.apply(l);
        let k = run_of[p - 1];
        if xs.at(p) > 0 {
            if gammas[k] == 0 {
                gammas[k] = l;
            }
        } else {
            deltas[k] = l;
        }
    }

    let up_phases: Vec<RangeInclusive<usize>> = (0..y)
        .map(|i| gammas[i]..=gammas.get(i + 1).map_or(t, |g| g - 1))
        .collect();
    let down_phases: Vec<RangeInclusive<usize>> = (0..y)
        .map(|j| if j == 0 { 0 } else { deltas[j - 1] }..=deltas[j] - 1)
        .collect();

    let x = &perm.reordered;
    let u = up_phases
        .iter()
        .map(|r| r.clone().filter(|&h| x.at(h) < 0).count())
        .collect();
    let d = down_phases
        .iter()
        .map(|r| r.clone().filter(|&h| x.at(h + 1) > 0).count())
        .collect();

    let profile = PhaseProfile {
        gammas,
        deltas,
        up_phases,
        down_phases,
        u,
        d,
        alphas: runs.alphas,
        betas: runs.betas,
    };
    debug_assert_eq!(profile.check_invariants(perm), Ok(()));
    Ok(profile)
}

/// Which argument produced a decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "route")]
pub enum Route {
    /// Repeated height among down steps of an up-phase (0-based phase).
    UpPhase {
        phase: usize,
    },
    /// Repeated height before up steps of a down-phase (0-based phase).
    DownPhase {
        phase: usize,
    },
    /// The staircase walk returns to zero inside the first up-phase.
    ZeroPrefix {
        step: usize,
    },
    /// The oscillating walk returns to zero early.
    OscillationZero {
        mirrored: bool,
    },
    /// The oscillating walk repeats a height.
    OscillationRepeat {
        mirrored: bool,
    },
    /// All steps are `α` or `-β` with `gcd(α, β) > 1`.
    GcdSplit {
        gcd: i64,
    },
    Exhaustive,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Route::UpPhase { phase } => write!(f, "up-phase:{}", phase + 1),
            Route::DownPhase { phase } => write!(f, "down-phase:{}", phase + 1),
            Route::ZeroPrefix { step } => write!(f, "zero-prefix:{step}"),
            Route::OscillationZero { mirrored } => {
                write!(
                    f,
                    "oscillation-zero{}",
                    if *mirrored { ":mirrored" } else { "" }
                )
            }
            Route::OscillationRepeat { mirrored } => {
                write!(
                    f,
                    "oscillation-repeat{}",
                    if *mirrored { ":mirrored" } else { "" }
                )
            }
            Route::GcdSplit { gcd } => write!(f, "gcd-split:{gcd}"),
            Route::Exhaustive => f.write_str("exhaustive"),
        }
    }
}

/// Evidence that no decomposition exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "certificate")]
pub enum Certificate {
    /// One peak, every up step equals `alpha1`, every down step `-beta1`,
    /// and `gcd(alpha1, beta1) = 1`.
    Coprime {
        alpha1: i64,
        beta1: i64,
        positives: usize,
        negatives: usize,
    },
    /// Every proper nonempty subset was checked.
    Exhaustive { width: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReduceOutcome {
    Decomposition {
        decomposition: Decomposition,
        route: Route,
    },
    Irreducible(Certificate),
    /// `cost > width` and the list is wider than the search limit.
    Undecided {
        width: usize,
        limit: usize,
    },
}

impl ReduceOutcome {
    pub fn kind(&self) -> &'static str {
        match self {
            ReduceOutcome::Decomposition { .. } => "decomposition",
            ReduceOutcome::Irreducible(_) => "irreducible",
            ReduceOutcome::Undecided { .. } => "undecided",
        }
    }

    pub fn decomposition(&self) -> Option<&Decomposition> {
        match self {
            ReduceOutcome::Decomposition { decomposition, .. } => Some(decomposition),
            _ => None,
        }
    }

    pub fn is_irreducible(&self) -> bool {
        matches!(self, ReduceOutcome::Irreducible(_))
    }
}

impl fmt::Display for ReduceOutcome {
    /// Single-line `key=value` record.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "kind={}", self.kind())?;
        match self {
            ReduceOutcome::Decomposition { decomposition, route } => {
                write!(f, " part={} route={route}", join(&decomposition.part))
            }
            ReduceOutcome::Irreducible(Certificate::Coprime {
                alpha1,
                beta1,
                positives,
                negatives,
            }) => write!(
                f,
                " certificate=coprime alpha1={alpha1} beta1={beta1} positives={positives} negatives={negatives}"
            ),
            ReduceOutcome::Irreducible(Certificate::Exhaustive { width }) => {
                write!(f, " certificate=exhaustive width={width}")
            }
            ReduceOutcome::Undecided { width, limit } => write!(f, " width={width} limit={limit}"),
        }
    }
}

fn join(positions: &[usize]) -> String {
    positions
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Lexicographically least `(h1, h2)`, `h1 < h2`, with equal heights.
/// `candidates` must be sorted by step.
fn least_repeat(candidates: &[(usize, i64)]) -> Option<(usize, usize)> {
    let mut first: HashMap<i64, usize> = HashMap::new();
    let mut best: Option<(usize, usize)> = None;
    for &(h, v) in candidates {
        match first.get(&v) {
            None => {
                first.insert(v, h);
            }
            Some(&h1) => {
                if best.is_none_or(|(b1, _)| h1 < b1) {
                    best = Some((h1, h));
                }
            }
        }
    }
    best
}

struct Staircase {
    perm: GreedyPermutation,
    profile: PhaseProfile,
}

impl Staircase {
    fn new(xs: &SignedList) -> Result<Staircase> {
        let perm = build_pi(xs)?;
        let profile = phase_profile(xs, &perm)?;
        Ok(Staircase { perm, profile })
    }

    /// The preimage of the window `h1+1..=h2`.
    fn window(&self, h1: usize, h2: usize) -> Decomposition {
        let steps: Vec<usize> = (h1 + 1..=h2).collect();
        Decomposition::from_sorted(self.perm.image(&steps))
    }

    fn up_phase_split(&self, i: usize) -> Option<(Decomposition, Route)> {
        let (h1, h2) = least_repeat(&self.profile.up_candidates(&self.perm, i))?;
        Some((self.window(h1, h2), Route::UpPhase { phase: i }))
    }

    fn down_phase_split(&self, j: usize) -> Option<(Decomposition, Route)> {
        let (h1, h2) = least_repeat(&self.profile.down_candidates(&self.perm, j))?;
        Some((self.window(h1, h2), Route::DownPhase { phase: j }))
    }

    /// Any phase holding more qualifying steps than admissible heights;
    /// up-phases are tried first.
    fn saturated_split(&self) -> Option<(Decomposition, Route)> {
        let p = &self.profile;
        let up = (0..p.u.len()).find(|&i| p.u[i] as i64 > p.alphas[i]);
        if let Some(i) = up {
            return self.up_phase_split(i);
        }
        let down = (0..p.d.len()).find(|&j| p.d[j] as i64 > p.betas[j]);
        down.and_then(|j| self.down_phase_split(j))
    }
}

fn require_catalan(xs: &SignedList) -> Result<RunProfile> {
    if xs.is_empty() {
        return Err(Error::EmptyList);
    }
    if !xs.is_generalized_catalan() {
        return Err(Error::NotCatalan);
    }
    xs.run_profile()
}

fn checked(xs: &SignedList, found: (Decomposition, Route)) -> (Decomposition, Route) {
    debug_assert!(
        is_valid_decomposition(xs, &found.0.part),
        "{:?} is not a decomposition of {xs}",
        found
    );
    found
}

/// Decomposes a Catalan list with `cost < width`.
pub fn reduce_strict(xs: &SignedList) -> Result<Decomposition> {
    reduce_strict_routed(xs).map(|(d, _)| d)
}

fn reduce_strict_routed(xs: &SignedList) -> Result<(Decomposition, Route)> {
    let runs = require_catalan(xs)?;
    let (cost, width) = (runs.cost(), xs.len());
    if cost >= width as i64 {
        return Err(Error::Precondition(format!(
            "cost {cost} is not below width {width}"
        )));
    }
    let staircase = Staircase::new(xs)?;
    let found = staircase
        .saturated_split()
        .ok_or_else(|| Error::Precondition("no phase exceeds its run maximum".into()))?;
    Ok(checked(xs, found))
}

/// Decomposes a Catalan list with `cost == width` and at least two peaks.
pub fn reduce_equality(xs: &SignedList) -> Result<Decomposition> {
    reduce_equality_routed(xs).map(|(d, _)| d)
}

fn reduce_equality_routed(xs: &SignedList) -> Result<(Decomposition, Route)> {
    let runs = require_catalan(xs)?;
    let (cost, width) = (runs.cost(), xs.len());
    if cost != width as i64 || runs.y < 2 {
        return Err(Error::Precondition(format!(
            "expected cost == width and y > 1, got cost {cost}, width {width}, y {}",
            runs.y
        )));
    }
    let staircase = Staircase::new(xs)?;
    if let Some(found) = staircase.saturated_split() {
        return Ok(checked(xs, found));
    }

    // Every phase is exactly saturated. A return to zero inside the first
    // up-phase cuts the walk in two; it cannot be the last step since y > 1.
    let first = staircase.profile.up_phases[0].clone();
    if let Some(h) = first.clone().find(|&h| staircase.perm.running_sum(h) == 0) {
        let steps: Vec<usize> = (1..=h).collect();
        let part = Decomposition::from_sorted(staircase.perm.image(&steps));
        return Ok(checked(xs, (part, Route::ZeroPrefix { step: h })));
    }
    // Otherwise the α_1 down steps of the first up-phase sit at heights in
    // (0, α_1), so two share a height.
    let found = staircase
        .up_phase_split(0)
        .ok_or_else(|| Error::Precondition("first up-phase has no repeated height".into()))?;
    Ok(checked(xs, found))
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// Settles a single-peak Catalan list with `cost == width`.
pub fn reduce_y1(xs: &SignedList) -> Result<ReduceOutcome> {
    let runs = require_catalan(xs)?;
    let (cost, width) = (runs.cost(), xs.len());
    if cost != width as i64 || runs.y != 1 {
        return Err(Error::Precondition(format!(
            "expected cost == width and y == 1, got cost {cost}, width {width}, y {}",
            runs.y
        )));
    }
    let (alpha, beta) = (runs.alphas[0], runs.betas[0]);
    let entries = xs.entries();

    if entries.iter().any(|&v| v > 0 && v < alpha) {
        let (part, route) = oscillation_split(xs, false)?;
        return Ok(outcome(xs, part, route));
    }
    if entries.iter().any(|&v| v < 0 && -v < beta) {
        let mirror = xs.reversed_negated();
        let (part, route) = oscillation_split(&mirror, true)?;
        let t = xs.len();
        let part = Decomposition::from_sorted(part.part.iter().map(|&p| t + 1 - p).collect());
        return Ok(outcome(xs, part, route));
    }

    let positives: Vec<usize> = (1..=width).filter(|&p| xs.at(p) > 0).collect();
    let negatives: Vec<usize> = (1..=width).filter(|&p| xs.at(p) < 0).collect();
    let g = gcd(alpha, beta);
    if g > 1 {
        let take_pos = (beta / g) as usize;
        let take_neg = (alpha / g) as usize;
        let part: Vec<usize> = positives[..take_pos]
            .iter()
            .chain(&negatives[..take_neg])
            .copied()
            .collect();
        return Ok(outcome(
            xs,
            Decomposition::from_sorted(part),
            Route::GcdSplit { gcd: g },
        ));
    }
    Ok(ReduceOutcome::Irreducible(Certificate::Coprime {
        alpha1: alpha,
        beta1: beta,
        positives: positives.len(),
        negatives: negatives.len(),
    }))
}

fn outcome(xs: &SignedList, decomposition: Decomposition, route: Route) -> ReduceOutcome {
    let (decomposition, route) = checked(xs, (decomposition, route));
    ReduceOutcome::Decomposition {
        decomposition,
        route,
    }
}

/// Single-peak list whose up-run is not constant: sort the up-run ascending,
/// walk the oscillating permutation, and take a zero-sum window. Its value
/// multiset is mapped back to the leftmost matching positions of `xs`.
fn oscillation_split(xs: &SignedList, mirrored: bool) -> Result<(Decomposition, Route)> {
    let t = xs.len();
    let peak_end = (1..=t).take_while(|&p| xs.at(p) > 0).count();
    let mut sorted = xs.entries().to_vec();
    sorted[..peak_end].sort_unstable();
    let sorted = SignedList::new(sorted)?;
    let sigma = build_sigma(&sorted)?;

    let heights = &sigma.running_sums[..t - 1];
    let (steps, route) = if let Some(q) = heights.iter().position(|&m| m == 0) {
        (
            (1..=q + 1).collect::<Vec<_>>(),
            Route::OscillationZero { mirrored },
        )
    } else {
        // Heights lie in [1-β, α-1] \ {0}: t-2 values for t-1 steps.
        let candidates: Vec<(usize, i64)> = heights
            .iter()
            .enumerate()
            .map(|(i, &m)| (i + 1, m))
            .collect();
        let (q1, q2) = least_repeat(&candidates)
            .ok_or_else(|| Error::Precondition("oscillating walk has no repeated height".into()))?;
        (
            (q1 + 1..=q2).collect(),
            Route::OscillationRepeat { mirrored },
        )
    };

    let mut wanted: Vec<i64> = steps.iter().map(|&q| sigma.reordered.at(q)).collect();
    wanted.sort_unstable();
    let mut used = vec![false; t];
    let mut part = Vec::with_capacity(wanted.len());
    for v in wanted {
        let p = (0..t)
            .find(|&i| !used[i] && xs.entries()[i] == v)
            .expect("value multiset comes from a reordering of xs");
        used[p] = true;
        part.push(p + 1);
    }
    Ok((Decomposition::from_sorted(part), route))
}

/// Dispatches on cost versus width and the number of peaks. Lists with
/// `cost > width` are searched exhaustively when `width <= search_limit`.
pub fn reduce(xs: &SignedList, search_limit: usize) -> Result<ReduceOutcome> {
    let runs = require_catalan(xs)?;
    let (cost, width) = (runs.cost(), xs.len());
    let routed = |found: (Decomposition, Route)| ReduceOutcome::Decomposition {
        decomposition: found.0,
        route: found.1,
    };
    if cost < width as i64 {
        return reduce_strict_routed(xs).map(routed);
    }
    if cost == width as i64 {
        return if runs.y > 1 {
            reduce_equality_routed(xs).map(routed)
        } else {
            reduce_y1(xs)
        };
    }
    if width > search_limit {
        return Ok(ReduceOutcome::Undecided {
            width,
            limit: search_limit,
        });
    }
    let budget = SearchBudget {
        max_width: search_limit,
        ..SearchBudget::default()
    };
    Ok(match oracle::reducible_bruteforce(xs, &budget)? {
        Some(decomposition) => ReduceOutcome::Decomposition {
            decomposition,
            route: Route::Exhaustive,
        },
        None => ReduceOutcome::Irreducible(Certificate::Exhaustive { width }),
    })
}
