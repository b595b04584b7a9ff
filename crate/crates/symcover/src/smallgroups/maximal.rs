//! Explicit maximal subgroups of S_n and A_n for n <= 8, realized as
//! element sets: intransitive set stabilizers, imprimitive partition
//! stabilizers, the alternating group, and cataloged primitive classes.

use std::collections::BTreeSet;

use super::bits::BitSet;
use super::catalog::Catalog;
use super::group::DenseGroup;
use super::perm::{all_perms, Perm};
use crate::error::{Error, Result};

/// The ambient group whose maximal subgroups are being enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    Symmetric(u32),
    Alternating(u32),
}

impl Ambient {
    pub fn degree(&self) -> u32 {
        match *self {
            Ambient::Symmetric(n) | Ambient::Alternating(n) => n,
        }
    }

    pub fn name(&self) -> String {
        match *self {
            Ambient::Symmetric(n) => format!("S{n}"),
            Ambient::Alternating(n) => format!("A{n}"),
        }
    }

    /// Parse names like `S6` or `A5`.
    pub fn parse(s: &str) -> Result<Ambient> {
        let err = || Error::Parse {
            what: "group name",
            input: s.to_string(),
            detail: "expected S<n> or A<n>".to_string(),
        };
        let (kind, num) = s.split_at(1);
        let n: u32 = num.parse().map_err(|_| err())?;
        match kind {
            "S" | "s" => Ok(Ambient::Symmetric(n)),
            "A" | "a" => Ok(Ambient::Alternating(n)),
            _ => Err(err()),
        }
    }

    /// All elements, sorted.
    pub fn elements(&self) -> Vec<Perm> {
        match *self {
            Ambient::Symmetric(n) => all_perms(n as usize),
            Ambient::Alternating(n) => all_perms(n as usize)
                .into_iter()
                .filter(|p| p.is_even())
                .collect(),
        }
    }
}

/// One maximal subgroup as an explicit, sorted element list.
#[derive(Debug, Clone)]
pub struct MaximalSubgroup {
    /// Stable label: family spec plus the stabilized object or conjugate
    /// index, e.g. `intransitive:2#{0,1}`, `wr2#{0,1,2|3,4,5}`,
    /// `primitive:pgl_2_5#3`, `alternating`.
    pub label: String,
    pub elements: Vec<Perm>,
}

/// Which catalog entries realize the primitive maximal classes, with the
/// expected number of conjugates in the ambient group.
fn primitive_classes(ambient: Ambient) -> Result<&'static [(&'static str, usize)]> {
    match ambient {
        Ambient::Symmetric(4) => Ok(&[]),
        Ambient::Symmetric(5) => Ok(&[("agl_1_5", 6)]),
        Ambient::Symmetric(6) => Ok(&[("pgl_2_5", 6)]),
        Ambient::Symmetric(7) => Ok(&[("agl_1_7", 120)]),
        Ambient::Symmetric(8) => Ok(&[("pgl_2_7", 120)]),
        Ambient::Alternating(4) => Ok(&[]),
        Ambient::Alternating(5) => Ok(&[("d_10", 6)]),
        Ambient::Alternating(6) => Ok(&[("psl_2_5", 6)]),
        Ambient::Alternating(7) => Ok(&[("psl_3_2", 30)]),
        _ => Err(Error::domain(
            "maximal_subgroups",
            format!(
                "no maximal-subgroup model for {} (supported: S4..S8, A4..A7)",
                ambient.name()
            ),
        )),
    }
}

/// Every maximal subgroup of the ambient group, deduplicated, in a fixed
/// deterministic order. Family counts are checked against the closed-form
/// conjugate counts and primitive classes against the catalog.
pub fn maximal_subgroups(ambient: Ambient, catalog: &Catalog) -> Result<Vec<MaximalSubgroup>> {
    let n = ambient.degree() as usize;
    if !(3..=8).contains(&n) {
        return Err(Error::domain(
            "maximal_subgroups",
            format!("degree {n} outside 3..=8"),
        ));
    }
    let ambient_elems = ambient.elements();
    let mut out: Vec<MaximalSubgroup> = Vec::new();

    // A_n inside S_n
    if let Ambient::Symmetric(_) = ambient {
        out.push(MaximalSubgroup {
            label: "alternating".to_string(),
            elements: ambient_elems.iter().filter(|p| p.is_even()).cloned().collect(),
        });
    }

    // Intransitive set stabilizers, k < n/2 (S_{n/2} x S_{n/2} sits inside
    // the wr2 stabilizer and is skipped).
    for k in 1..=(n - 1) / 2 {
        let mut count = 0usize;
        for subset in k_subsets(n, k) {
            let mask: Vec<bool> = {
                let mut m = vec![false; n];
                for &p in &subset {
                    m[p] = true;
                }
                m
            };
            let elements: Vec<Perm> = ambient_elems
                .iter()
                .filter(|g| subset.iter().all(|&p| mask[g.apply(p)]))
                .cloned()
                .collect();
            out.push(MaximalSubgroup {
                label: format!("intransitive:{k}#{}", fmt_set(&subset)),
                elements,
            });
            count += 1;
        }
        let expected = crate::combin::binomial(n as u64, k as u64);
        assert_eq!(
            num_bigint::BigUint::from(count),
            expected,
            "intransitive:{k} member count"
        );
    }

    // Imprimitive partition stabilizers, blocks of size b, l blocks.
    for b in 2..n {
        if !n.is_multiple_of(b) {
            continue;
        }
        let l = n / b;
        if l < 2 {
            continue;
        }
        let family = if l == 2 {
            "wr2".to_string()
        } else {
            format!("imprimitive:{b}x{l}")
        };
        for blocks in block_partitions(n, b) {
            let mut block_of = vec![0usize; n];
            for (bi, block) in blocks.iter().enumerate() {
                for &p in block {
                    block_of[p] = bi;
                }
            }
            let elements: Vec<Perm> = ambient_elems
                .iter()
                .filter(|g| preserves_blocks(g, &blocks, &block_of))
                .cloned()
                .collect();
            out.push(MaximalSubgroup {
                label: format!("{family}#{}", fmt_blocks(&blocks)),
                elements,
            });
        }
    }

    // Primitive classes from the catalog: close the base entry, then take
    // the full conjugation orbit under S_n (odd conjugators reach both
    // fused classes inside A_n).
    for &(name, expected) in primitive_classes(ambient)? {
        let entry = catalog.get(name).ok_or_else(|| Error::CatalogMissing {
            degree: n as u32,
            name: name.to_string(),
        })?;
        if entry.degree as usize != n {
            return Err(Error::domain(
                "maximal_subgroups",
                format!("catalog entry `{name}` has degree {}, ambient degree {n}", entry.degree),
            ));
        }
        let base = entry.realize()?;
        let conjugates = conjugation_orbit(&base, n);
        assert_eq!(conjugates.len(), expected, "conjugates of {name} in S_{n}");
        for (i, elems) in conjugates.into_iter().enumerate() {
            debug_assert!(
                !matches!(ambient, Ambient::Alternating(_)) || elems.iter().all(|p| p.is_even()),
                "primitive member of an alternating ambient must be even"
            );
            out.push(MaximalSubgroup {
                label: format!("primitive:{name}#{i}"),
                elements: elems,
            });
        }
    }

    // Deduplicate: distinct stabilized objects can carry the same subgroup
    // in degenerate cases (every 2|2 partition stabilizer of A_4 is the
    // same Klein four-group). First label wins.
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    out.retain(|m| {
        let keys: Vec<u64> = m.elements.iter().map(|p| p.key()).collect();
        seen.insert(keys)
    });

    // Sanity: proper and pairwise incomparable. The containment scan is
    // quadratic, so it is skipped for S_8.
    let ambient_size = ambient_elems.len();
    for m in &out {
        assert!(m.elements.len() < ambient_size, "{} is not proper", m.label);
    }
    if ambient_size <= 2520 {
        let key_sets: Vec<Vec<u64>> = out
            .iter()
            .map(|m| {
                let mut k: Vec<u64> = m.elements.iter().map(|p| p.key()).collect();
                k.sort_unstable();
                k
            })
            .collect();
        for (i, a) in key_sets.iter().enumerate() {
            for (j, b) in key_sets.iter().enumerate() {
                if i != j && a.len() <= b.len() {
                    assert!(
                        !sorted_subset(a, b),
                        "{} contained in {}",
                        out[i].label,
                        out[j].label
                    );
                }
            }
        }
    }
    Ok(out)
}

/// Orbit of a subgroup (as an element set) under conjugation by S_n,
/// driven by the standard generators.
fn conjugation_orbit(base: &[Perm], degree: usize) -> Vec<Vec<Perm>> {
    let gens = [
        Perm::parse_cycles("(0 1)", degree).unwrap(),
        Perm::from_images((0..degree as u8).map(|i| (i + 1) % degree as u8).collect()).unwrap(),
    ];
    let normalize = |elems: &[Perm]| -> Vec<u64> {
        let mut keys: Vec<u64> = elems.iter().map(|p| p.key()).collect();
        keys.sort_unstable();
        keys
    };
    let mut seen = BTreeSet::new();
    let mut orbit: Vec<Vec<Perm>> = Vec::new();
    let mut frontier = vec![base.to_vec()];
    seen.insert(normalize(base));
    while let Some(sub) = frontier.pop() {
        for g in &gens {
            let g_inv = g.inverse();
            let mut conj: Vec<Perm> = sub
                .iter()
                .map(|h| g.compose(h).compose(&g_inv))
                .collect();
            conj.sort();
            if seen.insert(normalize(&conj)) {
                frontier.push(conj);
            }
        }
        orbit.push(sub);
    }
    orbit.sort_by_key(|s| normalize(s));
    orbit
}

/// Verify that every 2-generated proper subgroup of the ambient group lies
/// in some listed maximal subgroup. This is the completeness cross-check
/// for the maximal list; cost grows with |G|^2, so it is intended for
/// |G| <= ~720.
pub fn cross_validate_two_generated(
    ambient_elems: &[Perm],
    maximals: &[MaximalSubgroup],
) -> Result<()> {
    let group = DenseGroup::new(ambient_elems.to_vec());
    let bitsets: Vec<BitSet> = maximals
        .iter()
        .map(|m| {
            let mut b = BitSet::new(group.size());
            for p in &m.elements {
                b.set(group.index_of(p).expect("maximal subgroup element in ambient"));
            }
            b
        })
        .collect();
    group.two_generated_sweep(&bitsets).map_err(|(a, b)| {
        Error::domain(
            "cross_validate_two_generated",
            format!(
                "subgroup <{}, {}> lies in no listed maximal subgroup",
                group.elements()[a],
                group.elements()[b]
            ),
        )
    })
}

/// Two-pointer subset test on sorted key lists.
fn sorted_subset(a: &[u64], b: &[u64]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j >= b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

fn preserves_blocks(g: &Perm, blocks: &[Vec<usize>], block_of: &[usize]) -> bool {
    for block in blocks {
        let target = block_of[g.apply(block[0])];
        for &p in &block[1..] {
            if block_of[g.apply(p)] != target {
                return false;
            }
        }
    }
    true
}

/// All k-subsets of {0..n-1} in lexicographic order.
fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for p in start..n {
            if n - p < k - current.len() {
                break;
            }
            current.push(p);
            rec(n, k, p + 1, current, out);
            current.pop();
        }
    }
    rec(n, k, 0, &mut current, &mut out);
    out
}

/// All partitions of {0..n-1} into blocks of size b, deterministic order.
/// Built by repeatedly assigning the least unplaced point.
fn block_partitions(n: usize, b: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut used = vec![false; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    fn rec(
        n: usize,
        b: usize,
        used: &mut Vec<bool>,
        blocks: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        let Some(first) = (0..n).find(|&p| !used[p]) else {
            out.push(blocks.clone());
            return;
        };
        used[first] = true;
        let free: Vec<usize> = (first + 1..n).filter(|&p| !used[p]).collect();
        for companions in k_subsets_of(&free, b - 1) {
            let mut block = vec![first];
            block.extend(&companions);
            for &p in &companions {
                used[p] = true;
            }
            blocks.push(block);
            rec(n, b, used, blocks, out);
            blocks.pop();
            for &p in &companions {
                used[p] = false;
            }
        }
        used[first] = false;
    }
    rec(n, b, &mut used, &mut blocks, &mut out);
    out
}

fn k_subsets_of(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    k_subsets(items.len(), k)
        .into_iter()
        .map(|idxs| idxs.into_iter().map(|i| items[i]).collect())
        .collect()
}

fn fmt_set(set: &[usize]) -> String {
    let inner: Vec<String> = set.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn fmt_blocks(blocks: &[Vec<usize>]) -> String {
    let inner: Vec<String> = blocks
        .iter()
        .map(|b| {
            b.iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    format!("{{{}}}", inner.join("|"))
}
