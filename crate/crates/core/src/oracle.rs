//! Exhaustive ground truth.
//!
//! Nothing here uses the constructive arguments of [`crate::reducer`]; these
//! searches only apply the definitions, so they can check the reducer.

use rand::Rng;
use serde::Serialize;

use crate::catalan::{Decomposition, SignedList};
use crate::error::{Error, Result};
use crate::kostka::{dominates, KostkaPair, Partition};

/// Size limits for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    /// Longest list searched over all subsets.
    pub max_width: usize,
    /// Largest `|λ|` searched over all sub-pairs.
    pub max_pair_size: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_width: 24,
            max_pair_size: 12,
        }
    }
}

impl SearchBudget {
    fn check_width(&self, t: usize) -> Result<()> {
        if t > self.max_width {
            return Err(Error::BudgetExceeded(format!(
                "width {t} exceeds max_width {}",
                self.max_width
            )));
        }
        Ok(())
    }

    fn check_pair_size(&self, n: usize) -> Result<()> {
        if n > self.max_pair_size {
            return Err(Error::BudgetExceeded(format!(
                "size {n} exceeds max_pair_size {}",
                self.max_pair_size
            )));
        }
        Ok(())
    }
}

/// Walks nonempty position sets in lexicographic order of their sorted
/// position sequences (`{1} < {1,2} < {1,2,3} < … < {1,3} < …`). A branch is
/// cut only when no extension can be valid: the part's running sum is
/// negative, or (with `complement`) a skipped position drives the
/// complement's running sum negative.
struct LexSearch<'a> {
    values: &'a [i64],
    complement: bool,
    stack: Vec<usize>,
}

impl LexSearch<'_> {
    /// Visits sets extending `stack`, whose last element is `last` (0-based
    /// exclusive bound), calling `emit` on every candidate; stops when `emit`
    /// returns true.
    fn run(
        &mut self,
        last: usize,
        part_sum: i64,
        comp_sum: i64,
        emit: &mut dyn FnMut(&[usize], i64, i64) -> bool,
    ) -> bool {
        let t = self.values.len();
        let mut skipped = comp_sum;
        for next in last..t {
            let part = part_sum + self.values[next];
            if part >= 0 {
                self.stack.push(next + 1);
                let done =
                    emit(&self.stack, part, skipped) || self.run(next + 1, part, skipped, emit);
                self.stack.pop();
                if done {
                    return true;
                }
            }
            // Moving past `next` hands it to the complement.
            skipped += self.values[next];
            if self.complement && skipped < 0 {
                break;
            }
        }
        false
    }
}

/// Lexicographically first decomposition of `values` (zeros allowed), if any.
fn first_split(values: &[i64]) -> Option<Vec<usize>> {
    let t = values.len();
    let mut found = None;
    let mut search = LexSearch {
        values,
        complement: true,
        stack: Vec::new(),
    };
    search.run(0, 0, 0, &mut |set, part_sum, comp_sum| {
        if part_sum != 0 || set.len() == t {
            return false;
        }
        // Remaining positions after the last chosen one go to the complement.
        let last = *set.last().unwrap();
        let mut acc = comp_sum;
        for &v in &values[last..] {
            acc += v;
            if acc < 0 {
                return false;
            }
        }
        if acc == 0 {
            found = Some(set.to_vec());
            true
        } else {
            false
        }
    });
    found
}

/// Searches all proper nonempty subsets in lexicographic order and returns
/// the first decomposition.
pub fn reducible_bruteforce(
    xs: &SignedList,
    budget: &SearchBudget,
) -> Result<Option<Decomposition>> {
    budget.check_width(xs.len())?;
    Ok(first_split(xs.entries()).map(|part| Decomposition { part }))
}

/// First column set splitting a (possibly zero-containing) column vector.
pub fn column_split_bruteforce(
    values: &[i64],
    budget: &SearchBudget,
) -> Result<Option<Vec<usize>>> {
    budget.check_width(values.len())?;
    Ok(first_split(values))
}

/// Every position set (including the empty set) whose sublist is Catalan,
/// in lexicographic order.
pub fn all_catalan_subsets(xs: &SignedList, budget: &SearchBudget) -> Result<Vec<Vec<usize>>> {
    budget.check_width(xs.len())?;
    let mut out = vec![Vec::new()];
    let mut search = LexSearch {
        values: xs.entries(),
        complement: false,
        stack: Vec::new(),
    };
    search.run(0, 0, 0, &mut |set, part_sum, _| {
        if part_sum == 0 {
            out.push(set.to_vec());
        }
        false
    });
    Ok(out)
}

/// Calls `visit` on every Catalan list of length `t` with entries in
/// `[-max_abs, max_abs] \ {0}`, in lexicographic order of entries.
pub fn for_each_catalan_list(t: usize, max_abs: i64, mut visit: impl FnMut(&SignedList)) {
    fn go(
        buf: &mut Vec<i64>,
        t: usize,
        max_abs: i64,
        height: i64,
        visit: &mut dyn FnMut(&SignedList),
    ) {
        let remaining = (t - buf.len()) as i64;
        if remaining == 0 {
            if height == 0 {
                visit(&SignedList::new(buf.clone()).expect("entries are nonzero"));
            }
            return;
        }
        for v in (-max_abs..=max_abs).filter(|&v| v != 0) {
            let h = height + v;
            // Must stay nonnegative and be able to come back down in time.
            if h < 0 || h > max_abs * (remaining - 1) {
                continue;
            }
            buf.push(v);
            go(buf, t, max_abs, h, visit);
            buf.pop();
        }
    }
    if t == 0 {
        visit(&SignedList::default());
        return;
    }
    go(&mut Vec::with_capacity(t), t, max_abs, 0, &mut visit);
}

/// Uniform sampler over Catalan lists of a fixed length and entry bound.
#[derive(Debug, Clone)]
pub struct CatalanSampler {
    t: usize,
    max_abs: i64,
    /// `ways[k][h]`: completions of `k` more steps from height `h` to 0.
    ways: Vec<Vec<u128>>,
}

impl CatalanSampler {
    pub fn new(t: usize, max_abs: i64) -> CatalanSampler {
        assert!(max_abs >= 1);
        let top = (max_abs as usize) * t;
        let mut ways = vec![vec![0u128; top + 1]; t + 1];
        ways[0][0] = 1;
        for k in 1..=t {
            for h in 0..=top {
                let mut total = 0u128;
                for v in (-max_abs..=max_abs).filter(|&v| v != 0) {
                    let next = h as i64 + v;
                    if next >= 0 && (next as usize) <= top {
                        total += ways[k - 1][next as usize];
                    }
                }
                ways[k][h] = total;
            }
        }
        CatalanSampler { t, max_abs, ways }
    }

    /// Number of Catalan lists of this shape.
    pub fn count(&self) -> u128 {
        self.ways[self.t][0]
    }

    /// Draws a list uniformly; `None` if there are none.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Option<SignedList> {
        if self.count() == 0 {
            return None;
        }
        let mut h = 0usize;
        let mut out = Vec::with_capacity(self.t);
        for k in (1..=self.t).rev() {
            let mut pick = rng.gen_range(0..self.ways[k][h]);
            for v in (-self.max_abs..=self.max_abs).filter(|&v| v != 0) {
                let next = h as i64 + v;
                if next < 0 || next as usize >= self.ways[k - 1].len() {
                    continue;
                }
                let w = self.ways[k - 1][next as usize];
                if pick < w {
                    out.push(v);
                    h = next as usize;
                    break;
                }
                pick -= w;
            }
        }
        Some(SignedList::new(out).expect("entries are nonzero"))
    }
}

/// All partitions of `n` with at most `rows` parts, in lexicographic order.
pub fn partitions(n: usize, rows: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, rows: usize, buf: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::new(buf.clone()).expect("built weakly decreasing"));
            return;
        }
        if rows == 0 {
            return;
        }
        for p in 1..=max.min(n) {
            buf.push(p);
            go(n - p, p, rows - 1, buf, out);
            buf.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, rows, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Every Kostka pair in `r` rows with `|λ| = n`.
pub fn kostka_pairs(r: usize, n: usize) -> Vec<KostkaPair> {
    let ps = partitions(n, r);
    let mut out = Vec::new();
    for l in &ps {
        for m in &ps {
            if dominates(l, m).unwrap_or(false) {
                out.push(
                    KostkaPair::new(l.clone(), m.clone(), Some(r)).expect("dominance checked"),
                );
            }
        }
    }
    out
}

/// Vectors `a` with `0 ≤ a_i ≤ p_i` such that both `a` and `p - a` are
/// weakly decreasing, in lexicographic order.
fn sub_partitions(p: &[usize]) -> Vec<Vec<usize>> {
    fn go(p: &[usize], buf: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = buf.len();
        if i == p.len() {
            out.push(buf.clone());
            return;
        }
        let (hi, lo) = match i {
            0 => (p[0], 0),
            _ => {
                let prev = buf[i - 1];
                let prev_rest = p[i - 1] - prev;
                // p_i - a_i ≤ p_{i-1} - a_{i-1}
                (prev.min(p[i]), p[i].saturating_sub(prev_rest))
            }
        };
        for a in lo..=hi {
            buf.push(a);
            go(p, buf, out);
            buf.pop();
        }
    }
    let mut out = Vec::new();
    go(p, &mut Vec::with_capacity(p.len()), &mut out);
    out
}

/// True iff `first + second = kp` componentwise and both summands are
/// nontrivial Kostka pairs in the same number of rows.
pub fn is_vector_decomposition(kp: &KostkaPair, first: &KostkaPair, second: &KostkaPair) -> bool {
    let r = kp.r();
    if first.r() > r || second.r() > r || first.size() == 0 || second.size() == 0 {
        return false;
    }
    let add = |a: &Partition, b: &Partition| -> Vec<usize> {
        a.padded(r)
            .iter()
            .zip(b.padded(r))
            .map(|(x, y)| x + y)
            .collect()
    };
    add(first.lambda(), second.lambda()) == kp.lambda().padded(r)
        && add(first.mu(), second.mu()) == kp.mu().padded(r)
}

/// First decomposition `(λ,μ) = (λ•,μ•) + (λ∘,μ∘)` into nontrivial Kostka
/// pairs, searching `λ•` then `μ•` in lexicographic order.
pub fn kostka_reducible_bruteforce(
    kp: &KostkaPair,
    budget: &SearchBudget,
) -> Result<Option<(KostkaPair, KostkaPair)>> {
    let n = kp.size();
    budget.check_pair_size(n)?;
    let r = kp.r();
    let lam = kp.lambda().padded(r);
    let mu = kp.mu().padded(r);
    let mu_subs = sub_partitions(&mu);
    for a in sub_partitions(&lam) {
        let size: usize = a.iter().sum();
        if size == 0 || size == n {
            continue;
        }
        let a_rest: Vec<usize> = lam.iter().zip(&a).map(|(x, y)| x - y).collect();
        for b in mu_subs.iter().filter(|b| b.iter().sum::<usize>() == size) {
            let b_rest: Vec<usize> = mu.iter().zip(b).map(|(x, y)| x - y).collect();
            let make = |l: &[usize], m: &[usize]| -> Option<KostkaPair> {
                let l = Partition::new(l.to_vec()).ok()?;
                let m = Partition::new(m.to_vec()).ok()?;
                KostkaPair::new(l, m, Some(r)).ok()
            };
            if let (Some(first), Some(second)) = (make(&a, b), make(&a_rest, &b_rest)) {
                debug_assert!(is_vector_decomposition(kp, &first, &second));
                return Ok(Some((first, second)));
            }
        }
    }
    Ok(None)
}

/// Irreducible Kostka pairs in `r ≤ 4` rows with `1 ≤ |λ| ≤ n_max`, sorted
/// lexicographically by `(λ, μ)` padded to `r` rows.
pub fn enumerate_hilbert_basis(
    r: usize,
    n_max: usize,
    budget: &SearchBudget,
) -> Result<Vec<KostkaPair>> {
    if r == 0 || r > 4 {
        return Err(Error::BudgetExceeded(format!("r = {r} outside 1..=4")));
    }
    budget.check_pair_size(n_max)?;
    let mut basis = Vec::new();
    for n in 1..=n_max {
        for kp in kostka_pairs(r, n) {
            if kostka_reducible_bruteforce(&kp, budget)?.is_none() {
                basis.push(kp);
            }
        }
    }
    basis.sort_by_key(|kp| (kp.lambda().padded(r), kp.mu().padded(r)));
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalan::is_valid_decomposition;

    fn list(v: &[i64]) -> SignedList {
        SignedList::new(v.to_vec()).unwrap()
    }

    fn pair(l: &[usize], m: &[usize], r: usize) -> KostkaPair {
        KostkaPair::new(
            Partition::new(l.to_vec()).unwrap(),
            Partition::new(m.to_vec()).unwrap(),
            Some(r),
        )
        .unwrap()
    }

    /// Plain scan over all bitmasks, keeping the lexicographically least
    /// valid set.
    fn naive_first_split(xs: &SignedList) -> Option<Vec<usize>> {
        let t = xs.len();
        (1u32..(1 << t) - 1)
            .map(|mask| {
                (1..=t)
                    .filter(|p| mask >> (p - 1) & 1 == 1)
                    .collect::<Vec<_>>()
            })
            .filter(|part| is_valid_decomposition(xs, part))
            .min()
    }

    fn naive_catalan_subsets(xs: &SignedList) -> Vec<Vec<usize>> {
        let t = xs.len();
        let mut out: Vec<Vec<usize>> = (0u32..1 << t)
            .map(|mask| {
                (1..=t)
                    .filter(|p| mask >> (p - 1) & 1 == 1)
                    .collect::<Vec<_>>()
            })
            .filter(|part| xs.sublist(part).unwrap().is_generalized_catalan())
            .collect();
        out.sort();
        out
    }

    #[test]
    fn bruteforce_examples() {
        let b = SearchBudget::default();
        assert_eq!(reducible_bruteforce(&list(&[2, -1, -1]), &b).unwrap(), None);
        assert_eq!(
            reducible_bruteforce(&list(&[1, -1, 1, -1]), &b).unwrap(),
            Some(Decomposition { part: vec![1, 2] })
        );
        let x = list(&[
            5, 5, 4, 4, -3, -3, -3, -3, -3, -1, 5, 5, 5, 3, -4, -4, -4, -4, -4,
        ]);
        let d = reducible_bruteforce(&x, &b).unwrap().unwrap();
        assert!(is_valid_decomposition(&x, &d.part));

        let tight = SearchBudget { max_width: 3, ..b };
        assert!(matches!(
            reducible_bruteforce(&list(&[1, -1, 1, -1]), &tight),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn bruteforce_matches_naive_scan() {
        let b = SearchBudget::default();
        for t in 1..=8 {
            for_each_catalan_list(t, 3, |xs| {
                assert_eq!(
                    reducible_bruteforce(xs, &b).unwrap().map(|d| d.part),
                    naive_first_split(xs),
                    "{xs}"
                );
                assert_eq!(
                    all_catalan_subsets(xs, &b).unwrap(),
                    naive_catalan_subsets(xs),
                    "{xs}"
                );
            });
        }
    }

    #[test]
    fn catalan_subset_examples() {
        let b = SearchBudget::default();
        assert_eq!(
            all_catalan_subsets(&list(&[1, -1]), &b).unwrap(),
            vec![vec![], vec![1, 2]]
        );
        assert_eq!(
            all_catalan_subsets(&list(&[2, -1, -1]), &b).unwrap(),
            vec![vec![], vec![1, 2, 3]]
        );
        assert_eq!(
            all_catalan_subsets(&list(&[1, -1, 1, -1]), &b).unwrap(),
            vec![vec![], vec![1, 2], vec![1, 2, 3, 4], vec![1, 4], vec![3, 4]]
        );
    }

    #[test]
    fn list_enumeration_counts() {
        let counts: Vec<usize> = (1..=8)
            .map(|t| {
                let mut n = 0;
                for_each_catalan_list(t, 3, |xs| {
                    assert!(xs.is_generalized_catalan());
                    n += 1;
                });
                n
            })
            .collect();
        // Independent transfer-matrix count over heights.
        assert_eq!(counts, vec![0, 3, 6, 35, 138, 689, 3272, 16522]);
        for (t, &c) in (1..=8).zip(&counts) {
            assert_eq!(CatalanSampler::new(t, 3).count(), c as u128);
        }
    }

    #[test]
    fn sampler_yields_catalan_lists() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let s = CatalanSampler::new(14, 4);
        for _ in 0..200 {
            let xs = s.sample(&mut rng).unwrap();
            assert_eq!(xs.len(), 14);
            assert!(xs.is_generalized_catalan());
            assert!(xs.entries().iter().all(|v| v.abs() <= 4));
        }
        assert!(CatalanSampler::new(1, 3).sample(&mut rng).is_none());
    }

    #[test]
    fn partition_enumeration() {
        assert_eq!(partitions(4, 2).len(), 3);
        assert_eq!(partitions(6, 3).len(), 7);
        assert_eq!(partitions(0, 3), vec![Partition::default()]);
        assert_eq!(
            sub_partitions(&[2, 0]),
            vec![vec![0, 0], vec![1, 0], vec![2, 0]]
        );
        // a = (0,1) fails a weakly decreasing; (1,0) leaves (0,1).
        assert_eq!(sub_partitions(&[1, 1]), vec![vec![0, 0], vec![1, 1]]);
    }

    #[test]
    fn kostka_bruteforce_examples() {
        let b = SearchBudget::default();
        assert_eq!(
            kostka_reducible_bruteforce(&pair(&[2, 0], &[1, 1], 2), &b).unwrap(),
            None
        );
        assert_eq!(
            kostka_reducible_bruteforce(&pair(&[1, 1], &[1, 1], 2), &b).unwrap(),
            None
        );
        let kp = pair(&[5, 3, 1], &[3, 3, 2, 1], 4);
        let (first, second) = kostka_reducible_bruteforce(&kp, &b).unwrap().unwrap();
        assert!(is_vector_decomposition(&kp, &first, &second));
        assert!(kostka_reducible_bruteforce(&pair(&[2, 0], &[2, 0], 2), &b)
            .unwrap()
            .is_some());
    }

    #[test]
    fn hilbert_basis_small() {
        let b = SearchBudget::default();
        let basis = enumerate_hilbert_basis(1, 3, &b).unwrap();
        assert_eq!(basis, vec![pair(&[1], &[1], 1)]);

        let basis = enumerate_hilbert_basis(2, 2, &b).unwrap();
        assert!(basis.contains(&pair(&[1], &[1], 2)));
        assert!(basis.contains(&pair(&[2], &[1, 1], 2)));
        assert!(basis.contains(&pair(&[1, 1], &[1, 1], 2)));
        assert!(!basis.contains(&pair(&[2], &[2], 2)));
        assert!(basis.iter().all(|kp| kp.lambda().first() <= 2));

        assert!(enumerate_hilbert_basis(5, 2, &b).is_err());
        assert!(enumerate_hilbert_basis(2, 13, &b).is_err());
    }
}
