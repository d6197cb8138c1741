//! The one audited subset-scan kernel behind every exact solver in this crate.
//!
//! A [`CoverProblem`] is a monotone requirement system: a ground set of `n`
//! elements, a universe of requirement bits, and per-element cover masks. A set
//! is feasible iff the union of its members' masks covers the universe. All
//! dimension variants and all auxiliary parameters (domination, vertex cover,
//! 1-locating domination) reduce to this form, so they share one scan:
//! subsets are enumerated by increasing cardinality and lexicographically
//! within a cardinality, with suffix-OR pruning (a branch dies as soon as the
//! remaining elements cannot complete the cover). The first hit is therefore
//! the lexicographically least optimum, and exhausting a cardinality proves no
//! solution of that size exists.
//!
//! Work is metered in scan nodes; an exhausted budget aborts with an error so
//! callers never mistake a truncated scan for a proof.

use crate::bits;
use std::ops::ControlFlow;

/// Raised when the node budget runs out mid-scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct BudgetExhausted;

pub(crate) struct BudgetCounter {
    left: u64,
}

impl BudgetCounter {
    pub fn new(budget: u64) -> Self {
        BudgetCounter { left: budget }
    }

    #[inline]
    fn tick(&mut self) -> Result<(), BudgetExhausted> {
        if self.left == 0 {
            return Err(BudgetExhausted);
        }
        self.left -= 1;
        Ok(())
    }
}

pub(crate) struct CoverProblem {
    n: usize,
    words: usize,
    full: Vec<u64>,
    covers: Vec<u64>, // n rows of `words` u64s
}

impl CoverProblem {
    /// `n` ground elements, `reqs` requirement bits, no covers yet.
    pub fn new(n: usize, reqs: usize) -> Self {
        let words = bits::words_for(reqs);
        let mut full = vec![0u64; words];
        for r in 0..reqs {
            bits::set(&mut full, r);
        }
        CoverProblem { n, words, full, covers: vec![0; n * words] }
    }

    pub fn add_cover(&mut self, element: usize, req: usize) {
        let w = self.words;
        bits::set(&mut self.covers[element * w..(element + 1) * w], req);
    }

    #[inline]
    fn row(&self, element: usize) -> &[u64] {
        &self.covers[element * self.words..(element + 1) * self.words]
    }

    /// Does this set of elements cover the whole universe?
    pub fn is_feasible(&self, set: &[usize]) -> bool {
        let mut acc = vec![0u64; self.words];
        for &e in set {
            bits::or_assign(&mut acc, self.row(e));
        }
        bits::covers(&acc, &self.full)
    }

    /// Lexicographically least feasible set of size exactly `card`, if any.
    pub fn scan_card(
        &self,
        card: usize,
        budget: &mut BudgetCounter,
    ) -> Result<Option<Vec<usize>>, BudgetExhausted> {
        let mut found = None;
        self.scan(card, budget, |set| {
            found = Some(set.to_vec());
            ControlFlow::Break(())
        })?;
        Ok(found)
    }

    /// All feasible sets of size exactly `card`, lexicographic order.
    pub fn scan_all(
        &self,
        card: usize,
        budget: &mut BudgetCounter,
    ) -> Result<Vec<Vec<usize>>, BudgetExhausted> {
        let mut all = Vec::new();
        self.scan(card, budget, |set| {
            all.push(set.to_vec());
            ControlFlow::Continue(())
        })?;
        Ok(all)
    }

    fn scan(
        &self,
        card: usize,
        budget: &mut BudgetCounter,
        mut visit: impl FnMut(&[usize]) -> ControlFlow<()>,
    ) -> Result<(), BudgetExhausted> {
        if card > self.n {
            return Ok(());
        }
        if card == 0 {
            budget.tick()?;
            if self.full.iter().all(|&w| w == 0) {
                let _ = visit(&[]);
            }
            return Ok(());
        }
        // suffix[i] = union of covers i.. ; monotone shrinking as i grows
        let w = self.words;
        let mut suffix = vec![0u64; (self.n + 1) * w];
        for i in (0..self.n).rev() {
            let (lo, hi) = suffix.split_at_mut((i + 1) * w);
            let dst = &mut lo[i * w..(i + 1) * w];
            dst.copy_from_slice(&hi[..w]);
            bits::or_assign(dst, self.row(i));
        }
        let mut chosen = Vec::with_capacity(card);
        let mut acc = vec![0u64; w];
        self.scan_rec(0, card, &mut chosen, &mut acc, &suffix, budget, &mut visit)
            .map(|_| ())
    }

    #[allow(clippy::too_many_arguments)]
    fn scan_rec(
        &self,
        pos: usize,
        need: usize,
        chosen: &mut Vec<usize>,
        acc: &[u64],
        suffix: &[u64],
        budget: &mut BudgetCounter,
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>, BudgetExhausted> {
        let w = self.words;
        let last = self.n - need; // inclusive upper bound for the next pick
        for i in pos..=last {
            budget.tick()?;
            // if even taking everything from i on cannot finish, no later i can
            if !bits::or_covers(acc, &suffix[i * w..(i + 1) * w], &self.full) {
                break;
            }
            let mut next = acc.to_vec();
            bits::or_assign(&mut next, self.row(i));
            chosen.push(i);
            let flow = if need == 1 {
                if bits::covers(&next, &self.full) {
                    visit(chosen)
                } else {
                    ControlFlow::Continue(())
                }
            } else {
                self.scan_rec(i + 1, need - 1, chosen, &next, suffix, budget, visit)?
            };
            chosen.pop();
            if flow.is_break() {
                return Ok(ControlFlow::Break(()));
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}
