//! Covering-number certification beyond the headline values, instance
//! shape checks, the completeness sweep for the maximal lists, and the
//! degree-12 imprimitive order oracle.

use num_bigint::BigUint;

use symcover::families::SubgroupFamily;
use symcover::smallgroups::{
    build_cover_instance, closure, cross_validate_two_generated, exact_min_cover,
    maximal_subgroups, Ambient, Catalog, CoverOutcome, Perm, SolveBudget, DEFAULT_CLOSURE_CEILING,
};
use symcover::witness::CoverPlan;

fn certify(name: &str) -> (usize, usize, usize) {
    let ambient = Ambient::parse(name).unwrap();
    let catalog = Catalog::builtin();
    let maximals = maximal_subgroups(ambient, &catalog).unwrap();
    let instance = build_cover_instance(&ambient.elements(), &maximals).unwrap();
    match exact_min_cover(&instance, SolveBudget::unlimited()) {
        CoverOutcome::Exact {
            size, certificate, ..
        } => {
            assert!(instance.is_cover(&certificate));
            (size, instance.universe_size, instance.subsets.len())
        }
        CoverOutcome::Bounds { lower, upper, .. } => {
            panic!("{name} did not certify: [{lower}, {upper}]")
        }
    }
}

#[test]
fn covering_numbers_with_instance_shapes() {
    // universe = group minus identity; subset counts are the maximal lists
    assert_eq!(certify("S4"), (4, 23, 8));
    assert_eq!(certify("A5"), (10, 59, 21));
    assert_eq!(certify("S6"), (13, 719, 53));
}

#[test]
fn covering_number_s5_matches_odd_degree_formula() {
    // 2^(n-1) for odd n
    assert_eq!(certify("S5").0, 16);
}

#[test]
fn covering_number_s7_matches_odd_degree_formula() {
    assert_eq!(certify("S7").0, 64);
}

#[test]
fn covering_number_a6() {
    assert_eq!(certify("A6").0, 16);
}

#[test]
fn covering_number_a4_with_collapsed_partition_stabilizers() {
    // all three 2|2 partition stabilizers of A_4 are the same Klein
    // four-group, so the maximal list is 4 point stabilizers plus one V_4;
    // the 8 three-cycles force all four C_3s and the double transpositions
    // force V_4
    assert_eq!(certify("A4"), (5, 11, 5));
}

#[test]
fn two_generated_sweeps_certify_maximal_lists() {
    let catalog = Catalog::builtin();
    for name in ["S4", "S5", "A5", "S6", "A6"] {
        let ambient = Ambient::parse(name).unwrap();
        let maximals = maximal_subgroups(ambient, &catalog).unwrap();
        cross_validate_two_generated(&ambient.elements(), &maximals)
            .unwrap_or_else(|e| panic!("sweep failed for {name}: {e}"));
    }
}

#[test]
fn s8_sixty_four_subgroup_cover() {
    // A_8 with all 2-set stabilizers and all halving stabilizers is a
    // 64-subgroup cover, the known covering number of S_8; optimality is
    // out of scope, the upper bound is verified type-level
    let families = vec![
        SubgroupFamily::alternating(8).unwrap(),
        SubgroupFamily::intransitive(8, 2).unwrap(),
        SubgroupFamily::wr2(8).unwrap(),
    ];
    let plan = CoverPlan::from_families(8, families).unwrap();
    assert_eq!(plan.total_size().unwrap(), BigUint::from(64u32));
    assert!(plan.uncovered_types().unwrap().is_empty());
}

#[test]
fn imprimitive_order_matches_closure_at_degree_12() {
    // S_4 wr S_3 on 12 points from explicit generators: a 4-cycle and a
    // transposition inside the first block, a block rotation, and a block
    // swap
    let gens = vec![
        Perm::parse_cycles("(0 1 2 3)", 12).unwrap(),
        Perm::parse_cycles("(0 1)", 12).unwrap(),
        Perm::parse_cycles("(0 4 8)(1 5 9)(2 6 10)(3 7 11)", 12).unwrap(),
        Perm::parse_cycles("(0 4)(1 5)(2 6)(3 7)", 12).unwrap(),
    ];
    let elems = closure(&gens, DEFAULT_CLOSURE_CEILING).unwrap();
    assert_eq!(elems.len(), 82944);
    assert_eq!(
        SubgroupFamily::imprimitive(12, 4, 3)
            .unwrap()
            .member_order()
            .unwrap(),
        BigUint::from(elems.len())
    );
}

#[test]
fn budgeted_a7_reports_sane_bounds() {
    // a starved node budget must still yield verified, ordered bounds
    let ambient = Ambient::parse("A7").unwrap();
    let catalog = Catalog::builtin();
    let maximals = maximal_subgroups(ambient, &catalog).unwrap();
    let instance = build_cover_instance(&ambient.elements(), &maximals).unwrap();
    match exact_min_cover(&instance, SolveBudget::nodes(50)) {
        CoverOutcome::Bounds {
            lower,
            upper,
            best_known,
            ..
        } => {
            assert!(lower <= 31 && 31 <= upper);
            assert!(instance.is_cover(&best_known));
            assert_eq!(best_known.len(), upper);
        }
        CoverOutcome::Exact { .. } => panic!("50 nodes cannot close A7"),
    }
}
