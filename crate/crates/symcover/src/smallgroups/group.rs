//! Subgroup closure and a dense indexed group representation for the
//! brute-force cross-checks.

use std::collections::HashMap;

use super::bits::BitSet;
use super::perm::Perm;
use crate::error::{Error, Result};

/// Default element ceiling for closures (10!).
pub const DEFAULT_CLOSURE_CEILING: usize = 3_628_800;

/// The subgroup generated by `generators`, as a sorted element list.
pub fn closure(generators: &[Perm], ceiling: usize) -> Result<Vec<Perm>> {
    let degree = generators
        .first()
        .map(|g| g.degree())
        .unwrap_or(1);
    if generators.iter().any(|g| g.degree() != degree) {
        return Err(Error::domain("closure", "generators of mixed degree"));
    }
    let id = Perm::identity(degree);
    let mut seen: HashMap<u64, ()> = HashMap::new();
    let mut elems = vec![id.clone()];
    seen.insert(id.key(), ());
    let mut frontier = vec![id];
    while let Some(g) = frontier.pop() {
        for gen in generators {
            let next = gen.compose(&g);
            if seen.insert(next.key(), ()).is_none() {
                if seen.len() > ceiling {
                    return Err(Error::ClosureCeiling { ceiling });
                }
                elems.push(next.clone());
                frontier.push(next);
            }
        }
    }
    elems.sort();
    Ok(elems)
}

/// A group held as an indexed element list with a full multiplication
/// table, for fast 2-generated-subgroup sweeps. Intended for |G| <= ~3000.
pub struct DenseGroup {
    degree: usize,
    elems: Vec<Perm>,
    mult: Vec<u32>, // mult[a * size + b] = index of elems[a] * elems[b]
}

impl DenseGroup {
    pub fn new(elems: Vec<Perm>) -> Self {
        let size = elems.len();
        let degree = elems[0].degree();
        let mut index: HashMap<u64, u32> = HashMap::with_capacity(size);
        for (i, e) in elems.iter().enumerate() {
            index.insert(e.key(), i as u32);
        }
        let mut mult = vec![0u32; size * size];
        for a in 0..size {
            for b in 0..size {
                let p = elems[a].compose(&elems[b]);
                mult[a * size + b] = index[&p.key()];
            }
        }
        DenseGroup {
            degree,
            elems,
            mult,
        }
    }

    pub fn size(&self) -> usize {
        self.elems.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elems
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.elems.binary_search(p).ok()
    }

    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.elems.len() + b] as usize
    }

    /// Subgroup generated by the elements at `gen_indices`, as a sorted
    /// index list. Aborts early (returning None) once the closure grows
    /// beyond `cap` elements.
    pub fn closure_indices(&self, gen_indices: &[usize], cap: usize) -> Option<Vec<usize>> {
        let mut member = vec![false; self.elems.len()];
        let id = self
            .index_of(&Perm::identity(self.degree))
            .expect("identity in group");
        member[id] = true;
        let mut elems = vec![id];
        let mut stack = vec![id];
        while let Some(g) = stack.pop() {
            for &gen in gen_indices {
                let h = self.mul(gen, g);
                if !member[h] {
                    if elems.len() >= cap {
                        return None;
                    }
                    member[h] = true;
                    elems.push(h);
                    stack.push(h);
                }
            }
        }
        elems.sort_unstable();
        Some(elems)
    }

    /// Cross-check that every proper subgroup generated by a pair of
    /// elements lies inside one of `subgroups` (given as membership bitsets
    /// over this group's element indices). Returns the first offending pair
    /// if the check fails.
    pub fn two_generated_sweep(&self, subgroups: &[BitSet]) -> std::result::Result<(), (usize, usize)> {
        let size = self.elems.len();
        // any proper 2-generated subgroup has order <= the largest listed one
        let cap = subgroups
            .iter()
            .map(|s| s.count_ones())
            .max()
            .unwrap_or(0);
        for a in 0..size {
            for b in a..size {
                let Some(sub) = self.closure_indices(&[a, b], cap) else {
                    continue; // grew past every proper subgroup: <a,b> = G
                };
                if sub.len() == size {
                    continue;
                }
                let contained = subgroups
                    .iter()
                    .any(|s| sub.iter().all(|&i| s.get(i)));
                if !contained {
                    return Err((a, b));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_examples() {
        // <(0 1), (0 1 2 3)> = S_4
        let gens = vec![
            Perm::parse_cycles("(0 1)", 4).unwrap(),
            Perm::parse_cycles("(0 1 2 3)", 4).unwrap(),
        ];
        assert_eq!(closure(&gens, DEFAULT_CLOSURE_CEILING).unwrap().len(), 24);

        // cyclic of order 5
        let gens = vec![Perm::parse_cycles("(0 1 2 3 4)", 5).unwrap()];
        assert_eq!(closure(&gens, DEFAULT_CLOSURE_CEILING).unwrap().len(), 5);

        // AGL(1,5) = <x+1, 2x>
        let gens = vec![
            Perm::parse_cycles("(0 1 2 3 4)", 5).unwrap(),
            Perm::parse_cycles("(1 2 4 3)", 5).unwrap(),
        ];
        assert_eq!(closure(&gens, DEFAULT_CLOSURE_CEILING).unwrap().len(), 20);
    }

    #[test]
    fn closure_ceiling_enforced() {
        let gens = vec![
            Perm::parse_cycles("(0 1)", 5).unwrap(),
            Perm::parse_cycles("(0 1 2 3 4)", 5).unwrap(),
        ];
        assert!(matches!(
            closure(&gens, 50),
            Err(Error::ClosureCeiling { ceiling: 50 })
        ));
    }

    #[test]
    fn dense_group_multiplication() {
        let gens = vec![
            Perm::parse_cycles("(0 1)", 4).unwrap(),
            Perm::parse_cycles("(0 1 2 3)", 4).unwrap(),
        ];
        let elems = closure(&gens, DEFAULT_CLOSURE_CEILING).unwrap();
        let g = DenseGroup::new(elems);
        assert_eq!(g.size(), 24);
        for a in [0usize, 3, 11, 23] {
            for b in [1usize, 7, 22] {
                let expect = g.elements()[a].compose(&g.elements()[b]);
                assert_eq!(g.elements()[g.mul(a, b)], expect);
            }
        }
        // full group from a generating pair
        let a = g.index_of(&Perm::parse_cycles("(0 1)", 4).unwrap()).unwrap();
        let b = g.index_of(&Perm::parse_cycles("(0 1 2 3)", 4).unwrap()).unwrap();
        assert_eq!(g.closure_indices(&[a, b], 24).unwrap().len(), 24);
    }
}
