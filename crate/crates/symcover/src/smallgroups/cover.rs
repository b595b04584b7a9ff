//! Exact minimum set cover over subgroup element sets, by deterministic
//! branch and bound. This certifies covering numbers of the small groups.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use super::bits::BitSet;
use super::maximal::MaximalSubgroup;
use super::perm::Perm;
use crate::error::{Error, Result};

/// A finite set-cover instance: a universe of points and a family of
/// subsets given as bitsets. The identity element of a group lies in every
/// subgroup and is dropped from the universe when building instances.
#[derive(Debug, Clone)]
pub struct SetCoverInstance {
    pub universe_size: usize,
    pub subsets: Vec<BitSet>,
    pub labels: Vec<String>,
}

impl SetCoverInstance {
    pub fn new(universe_size: usize, subsets: Vec<BitSet>, labels: Vec<String>) -> Result<Self> {
        assert_eq!(subsets.len(), labels.len());
        let mut union = BitSet::new(universe_size);
        for s in &subsets {
            if s.count_ones() == universe_size {
                return Err(Error::Infeasible {
                    detail: "a subset equals the whole universe".to_string(),
                });
            }
            union.union_with(s);
        }
        if !union.is_full() {
            return Err(Error::Infeasible {
                detail: format!(
                    "subsets cover only {} of {} universe points",
                    union.count_ones(),
                    universe_size
                ),
            });
        }
        Ok(SetCoverInstance {
            universe_size,
            subsets,
            labels,
        })
    }

    /// Check that the given subset indices cover the universe.
    pub fn is_cover(&self, indices: &[usize]) -> bool {
        let mut covered = BitSet::new(self.universe_size);
        for &i in indices {
            covered.union_with(&self.subsets[i]);
        }
        covered.is_full()
    }
}

/// Instance from a group (explicit element list) and its proper subgroups.
/// Universe = non-identity elements, one bitset per subgroup.
pub fn build_cover_instance(
    group_elems: &[Perm],
    subgroups: &[MaximalSubgroup],
) -> Result<SetCoverInstance> {
    let degree = group_elems[0].degree();
    let identity = Perm::identity(degree);
    let mut index: HashMap<u64, usize> = HashMap::new();
    let mut next = 0usize;
    for p in group_elems {
        if *p != identity {
            index.insert(p.key(), next);
            next += 1;
        }
    }
    let universe_size = next;
    let mut subsets = Vec::with_capacity(subgroups.len());
    let mut labels = Vec::with_capacity(subgroups.len());
    for sub in subgroups {
        let mut bits = BitSet::new(universe_size);
        for p in &sub.elements {
            if let Some(&i) = index.get(&p.key()) {
                bits.set(i);
            }
        }
        subsets.push(bits);
        labels.push(sub.label.clone());
    }
    SetCoverInstance::new(universe_size, subsets, labels)
}

/// Search budget. Node budgets are deterministic; wall-clock budgets are a
/// convenience for interactive use.
#[derive(Debug, Clone, Copy, Default)]
pub struct SolveBudget {
    pub max_nodes: Option<u64>,
    pub max_wall: Option<Duration>,
}

impl SolveBudget {
    pub fn seconds(s: u64) -> Self {
        SolveBudget {
            max_nodes: None,
            max_wall: Some(Duration::from_secs(s)),
        }
    }

    pub fn nodes(n: u64) -> Self {
        SolveBudget {
            max_nodes: Some(n),
            max_wall: None,
        }
    }

    pub fn unlimited() -> Self {
        SolveBudget::default()
    }
}

/// Result of a cover search. `Exact` carries a verified optimum;
/// `Bounds` is returned when the budget ran out first.
#[derive(Debug, Clone)]
pub enum CoverOutcome {
    Exact {
        size: usize,
        certificate: Vec<usize>,
        nodes: u64,
    },
    Bounds {
        lower: usize,
        upper: usize,
        best_known: Vec<usize>,
        nodes: u64,
    },
}

impl CoverOutcome {
    pub fn optimum(&self) -> Option<usize> {
        match self {
            CoverOutcome::Exact { size, .. } => Some(*size),
            CoverOutcome::Bounds { .. } => None,
        }
    }
}

struct Search<'a> {
    inst: &'a SetCoverInstance,
    element_subsets: Vec<Vec<usize>>, // subsets containing each element
    best_size: usize,
    best_cert: Vec<usize>,
    nodes: u64,
    budget: SolveBudget,
    started: Instant,
    aborted: bool,
}

/// Exact minimum cover by branch and bound.
///
/// Branching: pick the uncovered element lying in the fewest subsets and
/// try each subset containing it, largest remaining coverage first.
/// Lower bound: greedy disjoint-element bound (elements no single subset
/// covers two of) combined with the coverage-capacity bound
/// ceil(remaining / max subset size). Fully deterministic for a given
/// instance; the reported certificate is the first optimum encountered in
/// the fixed exploration order.
pub fn exact_min_cover(inst: &SetCoverInstance, budget: SolveBudget) -> CoverOutcome {
    let mut element_subsets = vec![Vec::new(); inst.universe_size];
    for (si, s) in inst.subsets.iter().enumerate() {
        for e in s.iter_ones() {
            element_subsets[e].push(si);
        }
    }

    // greedy upper bound: always take the subset covering most new points
    let greedy = greedy_cover(inst);
    let mut search = Search {
        inst,
        element_subsets,
        best_size: greedy.len(),
        best_cert: greedy,
        nodes: 0,
        budget,
        started: Instant::now(),
        aborted: false,
    };

    let covered = BitSet::new(inst.universe_size);
    let root_lower = search.lower_bound(&covered);
    let mut chosen = Vec::new();
    search.dfs(&covered, &mut chosen);

    // a certificate is never reported unverified
    assert!(inst.is_cover(&search.best_cert));
    if search.aborted {
        CoverOutcome::Bounds {
            lower: root_lower,
            upper: search.best_size,
            best_known: search.best_cert,
            nodes: search.nodes,
        }
    } else {
        CoverOutcome::Exact {
            size: search.best_size,
            certificate: search.best_cert,
            nodes: search.nodes,
        }
    }
}

impl Search<'_> {
    fn out_of_budget(&mut self) -> bool {
        if let Some(max) = self.budget.max_nodes {
            if self.nodes >= max {
                return true;
            }
        }
        if let Some(max) = self.budget.max_wall {
            // check the clock once every 1024 nodes
            if self.nodes.is_multiple_of(1024) && self.started.elapsed() >= max {
                return true;
            }
        }
        false
    }

    fn dfs(&mut self, covered: &BitSet, chosen: &mut Vec<usize>) {
        self.nodes += 1;
        if self.aborted || self.out_of_budget() {
            self.aborted = true;
            return;
        }
        if covered.is_full() {
            if chosen.len() < self.best_size {
                self.best_size = chosen.len();
                self.best_cert = chosen.clone();
            }
            return;
        }
        if chosen.len() + self.lower_bound(covered) >= self.best_size {
            return;
        }

        // branch on the uncovered element with fewest candidate subsets
        let elem = self.scarcest_uncovered(covered);
        let mut candidates: Vec<(usize, usize)> = self.element_subsets[elem]
            .iter()
            .map(|&si| (si, self.inst.subsets[si].difference_count(covered)))
            .collect();
        candidates.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        for (si, _) in candidates {
            let mut next_cov = covered.clone();
            next_cov.union_with(&self.inst.subsets[si]);
            chosen.push(si);
            self.dfs(&next_cov, chosen);
            chosen.pop();
            if self.aborted {
                return;
            }
        }
    }

    fn scarcest_uncovered(&self, covered: &BitSet) -> usize {
        let mut best = usize::MAX;
        let mut best_count = usize::MAX;
        for e in 0..self.inst.universe_size {
            if !covered.get(e) {
                let c = self.element_subsets[e].len();
                if c < best_count {
                    best_count = c;
                    best = e;
                }
            }
        }
        best
    }

    /// max(greedy disjoint-element bound, ceil(remaining / max subset size)).
    fn lower_bound(&self, covered: &BitSet) -> usize {
        let remaining = self.inst.universe_size - covered.count_ones();
        if remaining == 0 {
            return 0;
        }
        let max_size = self
            .inst
            .subsets
            .iter()
            .map(|s| s.difference_count(covered))
            .max()
            .unwrap_or(1)
            .max(1);
        let capacity_bound = remaining.div_ceil(max_size);

        // disjoint bound: repeatedly take the scarcest uncovered element and
        // block out everything any subset containing it could also cover
        let mut blocked = covered.clone();
        let mut count = 0usize;
        loop {
            let mut pick = usize::MAX;
            let mut pick_subsets = usize::MAX;
            for e in 0..self.inst.universe_size {
                if !blocked.get(e) && self.element_subsets[e].len() < pick_subsets {
                    pick_subsets = self.element_subsets[e].len();
                    pick = e;
                }
            }
            if pick == usize::MAX {
                break;
            }
            count += 1;
            for &si in &self.element_subsets[pick] {
                blocked.union_with(&self.inst.subsets[si]);
            }
            blocked.set(pick);
        }
        count.max(capacity_bound)
    }
}

/// Deterministic greedy cover: maximum new coverage, lowest index on ties.
pub fn greedy_cover(inst: &SetCoverInstance) -> Vec<usize> {
    let mut covered = BitSet::new(inst.universe_size);
    let mut picked = Vec::new();
    while !covered.is_full() {
        let (best, gain) = inst
            .subsets
            .iter()
            .enumerate()
            .map(|(i, s)| (i, s.difference_count(&covered)))
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
            .expect("feasible instance");
        assert!(gain > 0, "greedy stalled on a feasible instance");
        covered.union_with(&inst.subsets[best]);
        picked.push(best);
    }
    picked
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy_instance(universe: usize, sets: &[&[usize]]) -> SetCoverInstance {
        let subsets: Vec<BitSet> = sets
            .iter()
            .map(|elems| {
                let mut b = BitSet::new(universe);
                for &e in *elems {
                    b.set(e);
                }
                b
            })
            .collect();
        let labels = (0..sets.len()).map(|i| format!("s{i}")).collect();
        SetCoverInstance::new(universe, subsets, labels).unwrap()
    }

    #[test]
    fn toy_exact_cover() {
        // optimum 2: {0,1,2} + {3,4}; greedy could be misled by {2,3}
        let inst = toy_instance(5, &[&[0, 1, 2], &[2, 3], &[3, 4], &[0, 4]]);
        match exact_min_cover(&inst, SolveBudget::unlimited()) {
            CoverOutcome::Exact { size, certificate, .. } => {
                assert_eq!(size, 2);
                assert!(inst.is_cover(&certificate));
            }
            other => panic!("expected exact outcome, got {other:?}"),
        }
    }

    #[test]
    fn infeasible_detected() {
        let subsets = vec![
            {
                let mut b = BitSet::new(3);
                b.set(0);
                b
            },
            {
                let mut b = BitSet::new(3);
                b.set(1);
                b
            },
        ];
        assert!(matches!(
            SetCoverInstance::new(3, subsets, vec!["a".into(), "b".into()]),
            Err(Error::Infeasible { .. })
        ));
    }

    #[test]
    fn node_budget_returns_bounds() {
        let inst = toy_instance(
            6,
            &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 0], &[0, 3]],
        );
        match exact_min_cover(&inst, SolveBudget::nodes(1)) {
            CoverOutcome::Bounds { lower, upper, best_known, .. } => {
                assert!(lower <= upper);
                assert!(inst.is_cover(&best_known));
            }
            CoverOutcome::Exact { .. } => panic!("one node cannot finish this instance"),
        }
    }

    #[test]
    fn shuffled_instance_same_optimum() {
        let base = toy_instance(
            8,
            &[
                &[0, 1, 2],
                &[2, 3, 4],
                &[4, 5],
                &[5, 6, 7],
                &[1, 3, 5, 7],
                &[0, 6],
                &[0, 2, 4, 6],
            ],
        );
        let opt = exact_min_cover(&base, SolveBudget::unlimited())
            .optimum()
            .unwrap();
        // rotate the subset order: optimum must not change
        for rot in 1..base.subsets.len() {
            let mut subsets = base.subsets.clone();
            subsets.rotate_left(rot);
            let mut labels = base.labels.clone();
            labels.rotate_left(rot);
            let shuffled =
                SetCoverInstance::new(base.universe_size, subsets, labels).unwrap();
            assert_eq!(
                exact_min_cover(&shuffled, SolveBudget::unlimited()).optimum(),
                Some(opt)
            );
        }
    }
}
