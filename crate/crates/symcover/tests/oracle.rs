//! Brute-force oracle equivalence: the symbolic per-member counting
//! formulas must reproduce exhaustive enumeration inside explicit members
//! of every modeled family, for every cycle type, at degrees 4, 6, 8.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use symcover::cycletype::{all_types, CycleType};
use symcover::families::SubgroupFamily;
use symcover::smallgroups::{all_perms, bucket_by_type, Perm};

/// Elements of S_n preserving {0..k-1} as a set.
fn set_stabilizer(n: usize, k: usize) -> Vec<Perm> {
    all_perms(n)
        .into_iter()
        .filter(|g| (0..k).all(|p| g.apply(p) < k))
        .collect()
}

/// Elements of S_n preserving the partition {0..n/2-1 | n/2..n-1}.
fn halving_stabilizer(n: usize) -> Vec<Perm> {
    let half = n / 2;
    all_perms(n)
        .into_iter()
        .filter(|g| {
            let first_side = g.apply(0) < half;
            (0..half).all(|p| (g.apply(p) < half) == first_side)
                && (half..n).all(|p| (g.apply(p) < half) != first_side)
        })
        .collect()
}

fn even_elements(n: usize) -> Vec<Perm> {
    all_perms(n).into_iter().filter(|g| g.is_even()).collect()
}

fn assert_family_matches_bucket(family: &SubgroupFamily, member: &[Perm], n: u32) {
    let buckets: BTreeMap<CycleType, u64> = bucket_by_type(member);
    for t in all_types(n).unwrap() {
        let formula = family.count_in_member(&t).unwrap();
        let brute = BigUint::from(buckets.get(&t).copied().unwrap_or(0));
        assert_eq!(
            formula, brute,
            "family {family} at n={n}, type {t}: formula {formula} vs enumeration {brute}"
        );
    }
    // and nothing in the bucket was missed by the type enumeration
    let total: u64 = buckets.values().sum();
    assert_eq!(total as usize, member.len());
}

#[test]
fn intransitive_counts_match_enumeration() {
    for n in [4u32, 6, 8] {
        for k in 1..=(n / 2) {
            let family = SubgroupFamily::intransitive(n, k).unwrap();
            let member = set_stabilizer(n as usize, k as usize);
            assert_family_matches_bucket(&family, &member, n);
        }
    }
}

#[test]
fn wr2_counts_match_enumeration() {
    for n in [4u32, 6, 8] {
        let family = SubgroupFamily::wr2(n).unwrap();
        let member = halving_stabilizer(n as usize);
        assert_family_matches_bucket(&family, &member, n);
    }
}

#[test]
fn alternating_counts_match_enumeration() {
    for n in [4u32, 6, 8] {
        let family = SubgroupFamily::alternating(n).unwrap();
        let member = even_elements(n as usize);
        assert_family_matches_bucket(&family, &member, n);
    }
}

#[test]
fn intransitive_count_degree_9_analogue() {
    // one size-9 check beyond full-group enumeration range: the members of
    // S_4 x S_5 are generated directly, so only the 2880 subgroup elements
    // are enumerated
    use symcover::smallgroups::{closure, DEFAULT_CLOSURE_CEILING};
    let gens = vec![
        Perm::parse_cycles("(0 1 2 3)", 9).unwrap(),
        Perm::parse_cycles("(0 1)", 9).unwrap(),
        Perm::parse_cycles("(4 5 6 7 8)", 9).unwrap(),
        Perm::parse_cycles("(4 5)", 9).unwrap(),
    ];
    let member = closure(&gens, DEFAULT_CLOSURE_CEILING).unwrap();
    assert_eq!(member.len(), 2880);
    let family = SubgroupFamily::intransitive(9, 4).unwrap();
    let buckets = bucket_by_type(&member);
    for t in all_types(9).unwrap() {
        let formula = family.count_in_member(&t).unwrap();
        let brute = BigUint::from(buckets.get(&t).copied().unwrap_or(0));
        assert_eq!(formula, brute, "S_4 x S_5 member on type {t}");
    }
    let t234 = CycleType::from_cycles(9, &[2, 3, 4]).unwrap();
    assert_eq!(
        family.count_in_member(&t234).unwrap(),
        BigUint::from(120u32)
    );
}

/// A permutation with the given cycle type, cycles laid out consecutively.
fn canonical_of_type(t: &CycleType) -> Perm {
    let n = t.degree() as usize;
    let mut images = vec![0u8; n];
    let mut offset = 0usize;
    for &(len, mult) in t.parts() {
        for _ in 0..mult {
            for j in 0..len as usize {
                images[offset + j] = (offset + (j + 1) % len as usize) as u8;
            }
            offset += len as usize;
        }
    }
    Perm::from_images(images).unwrap()
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for p in start..n {
            cur.push(p);
            rec(n, k, p + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// Number of members of the family containing a fixed permutation,
/// counted directly from the stabilized objects.
fn members_containing(family: &SubgroupFamily, g: &Perm) -> u64 {
    let n = g.degree();
    match family {
        SubgroupFamily::Intransitive { k, .. } => {
            let k = *k as usize;
            let mut count = 0u64;
            for subset in subsets_of_size(n, k) {
                let inside = |p: usize| subset.binary_search(&p).is_ok();
                if subset.iter().all(|&p| inside(g.apply(p))) {
                    count += 1;
                }
            }
            if 2 * k == n {
                // each unordered halving was counted once per labeled side
                count / 2
            } else {
                count
            }
        }
        SubgroupFamily::ImprimitiveWr2 { .. } => {
            let half = n / 2;
            let mut count = 0u64;
            // halvings with point 0 in the first block, so each unordered
            // partition appears once
            for mut block in subsets_of_size(n - 1, half - 1) {
                for p in block.iter_mut() {
                    *p += 1;
                }
                block.insert(0, 0);
                let inside = |p: usize| block.binary_search(&p).is_ok();
                let preserved = (0..n).all(|p| {
                    
                    inside(p) == inside(g.apply(p))
                }) || (0..n).all(|p| inside(p) != inside(g.apply(p)));
                if preserved {
                    count += 1;
                }
            }
            count
        }
        SubgroupFamily::Alternating { .. } => {
            if g.is_even() {
                1
            } else {
                0
            }
        }
        other => panic!("no brute-force membership for {other}"),
    }
}

#[test]
fn double_counting_identity() {
    // member_count(f) * count_in_member(f, t)
    //   = class_size(t) * #members containing one fixed element of type t
    for n in [4u32, 6, 8] {
        let mut families = vec![
            SubgroupFamily::wr2(n).unwrap(),
            SubgroupFamily::alternating(n).unwrap(),
        ];
        for k in 1..=(n / 2) {
            families.push(SubgroupFamily::intransitive(n, k).unwrap());
        }
        for t in all_types(n).unwrap() {
            let g = canonical_of_type(&t);
            assert_eq!(g.cycle_type(), t);
            for f in &families {
                let lhs = f.member_count().unwrap() * f.count_in_member(&t).unwrap();
                let rhs = t.class_size() * BigUint::from(members_containing(f, &g));
                assert_eq!(lhs, rhs, "double counting for {f} at n={n}, type {t}");
            }
        }
    }
}

#[test]
fn class_sizes_match_enumeration_up_to_8() {
    for n in 1..=8u32 {
        let buckets = bucket_by_type(&all_perms(n as usize));
        for t in all_types(n).unwrap() {
            assert_eq!(
                t.class_size(),
                BigUint::from(buckets.get(&t).copied().unwrap_or(0)),
                "class size of {t} at n={n}"
            );
        }
    }
}

#[test]
fn parity_matches_constructed_permutations() {
    use symcover::cycletype::Parity;
    for n in 1..=8u32 {
        for t in all_types(n).unwrap() {
            let g = canonical_of_type(&t);
            assert_eq!(
                t.parity() == Parity::Even,
                g.is_even(),
                "parity of {t} at n={n}"
            );
        }
    }
}
