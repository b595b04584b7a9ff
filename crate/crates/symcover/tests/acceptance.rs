//! Acceptance suite: one test per criterion, each printing a pass line
//! (visible under `--nocapture`). Library-level criteria live here; the
//! CLI-facing checks (closed-form commands, byte-identical JSON) are in
//! the symcover-cli acceptance target.

use std::time::Instant;

use num_bigint::BigUint;

use symcover::combin::{binomial, factorial, half_central_binomial};
use symcover::cycletype::all_types;
use symcover::families::SubgroupFamily;
use symcover::smallgroups::{
    all_perms, bucket_by_type, build_cover_instance, exact_min_cover, maximal_subgroups, Ambient,
    Catalog, CoverOutcome, SolveBudget,
};
use symcover::verifier::{self, Verdict};
use symcover::witness::{partition_check, sigma_formula, sigma_s18, CoverPlan};

fn pass(line: &str) {
    println!("criterion {line}");
}

#[test]
fn criterion_1_closed_forms() {
    let start = Instant::now();
    assert_eq!(sigma_formula(24).unwrap(), BigUint::from(1888233u64));
    assert_eq!(sigma_formula(30).unwrap(), BigUint::from(100522847u64));
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "closed forms took {elapsed:?}");
    pass(&format!(
        "1: PASS - sigma(S_24) = 1888233 and sigma(S_30) = 100522847 in {elapsed:?}"
    ));
}

#[test]
fn criterion_2_s18_triple() {
    let start = Instant::now();
    let report = sigma_s18();
    assert_eq!(report.stated, "36772");
    assert_eq!(
        report.formula_sum, report.cover_enumeration,
        "the two computed routes must agree exactly"
    );
    assert!(report.computed_agree);
    // the report must truthfully flag agreement/disagreement with 36772
    assert_eq!(report.matches_stated, report.formula_sum == report.stated);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0);
    pass(&format!(
        "2: PASS - S_18 stated {} vs computed {} (flagged match={}) in {elapsed:?}",
        report.stated, report.formula_sum, report.matches_stated
    ));
}

#[test]
fn criterion_3_cover_validity() {
    let start = Instant::now();
    for n in [18u32, 24, 30, 36, 42, 48, 54, 60] {
        let plan = CoverPlan::minimal(n).unwrap();
        let uncovered = plan.uncovered_types().unwrap();
        assert!(
            uncovered.is_empty(),
            "cover at n={n} misses {uncovered:?}"
        );
    }
    // dropping A_24: the witness type (11,13) becomes uncovered, alongside
    // (9,15), the other even fixed-point-free two-cycle type out of every
    // remaining family's reach (see the decisions ledger)
    let plan = CoverPlan::minimal(24).unwrap();
    let alt = SubgroupFamily::alternating(24).unwrap();
    let uncovered: Vec<String> = plan
        .without(&alt)
        .uncovered_types()
        .unwrap()
        .iter()
        .map(|t| t.to_string())
        .collect();
    assert!(uncovered.contains(&"11,13".to_string()));
    assert_eq!(uncovered, vec!["9,15".to_string(), "11,13".to_string()]);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 120, "cover checks took {elapsed:?}");
    pass(&format!(
        "3: PASS - covers valid for n in 18,24..60; dropping A_24 uncovers (9,15),(11,13) in {elapsed:?}"
    ));
}

#[test]
fn criterion_4_partition_identity() {
    for n in [24u32, 30, 36, 42, 48, 54, 60] {
        let report = partition_check(n).unwrap();
        assert!(report.pass, "partition identity at n={n}: {report:?}");
    }
    // half-binomial times wr2 cell size accounts for every n-cycle
    for n in (4u32..=200).step_by(2) {
        let lhs = half_central_binomial(n as u64) * factorial(n / 2 - 1) * factorial(n / 2);
        assert_eq!(lhs, factorial(n - 1), "n-cycle accounting at n={n}");
    }
    pass("4: PASS - partition identities exact for n = 24..60; n-cycle accounting for even n <= 200");
}

#[test]
fn criterion_5_lemma_sweep() {
    let start = Instant::now();
    let reports = verifier::run_all((36..=300).step_by(6));
    assert_eq!(reports.len(), 45 * 7);
    for r in &reports {
        assert_eq!(
            r.verdict,
            Verdict::Pass,
            "lemma {} failed at n={}: {:?}",
            r.lemma_id,
            r.n,
            r.witnesses
        );
    }
    // the n = 30 exchange variant, including the preliminary count
    let r30 = verifier::verify_exchange(30).unwrap();
    assert_eq!(r30.verdict, Verdict::Pass, "{:?}", r30.witnesses);
    let prelim = r30
        .quantities
        .iter()
        .find(|q| q.name == "replacements_for_two_S2xS28")
        .unwrap();
    let pool = r30
        .quantities
        .iter()
        .find(|q| q.name == "candidate_pool_size")
        .unwrap();
    assert_eq!(prelim.numer, "29910465");
    assert_eq!(pool.numer, "22790085");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 300, "sweep took {elapsed:?}");
    pass(&format!(
        "5: PASS - all 7 lemmas verified for n = 36..300 step 6; exchange(30) incl. 29910465 > 22790085 in {elapsed:?}"
    ));
}

#[test]
fn criterion_6_s18_counts() {
    let r = verifier::verify_s18();
    assert_eq!(r.verdict, Verdict::Pass, "{:?}", r.witnesses);
    let get = |name: &str| {
        r.quantities
            .iter()
            .find(|q| q.name == name)
            .unwrap_or_else(|| panic!("quantity {name}"))
            .numer
            .clone()
    };
    assert_eq!(get("per_member_S7xS11"), "3181939200");
    let min: BigUint = get("min_per_member_in_cover").parse().unwrap();
    assert!(min > BigUint::from(3181939200u64));
    assert_eq!(binomial(18, 7), BigUint::from(31824u32));
    assert_eq!(binomial(17, 7), BigUint::from(19448u32));
    pass(&format!(
        "6: PASS - S_7 x S_11 holds exactly 3181939200; in-cover minimum {min} > 3181939200; C(18,7)=31824, C(17,7)=19448"
    ));
}

#[test]
fn criterion_7_oracle_equivalence() {
    let mut checked = 0usize;
    for n in [4u32, 6, 8] {
        let perms = all_perms(n as usize);
        let mut members: Vec<(SubgroupFamily, Vec<symcover::smallgroups::Perm>)> = Vec::new();
        for k in 1..=(n / 2) {
            let member = perms
                .iter()
                .filter(|g| (0..k as usize).all(|p| g.apply(p) < k as usize))
                .cloned()
                .collect();
            members.push((SubgroupFamily::intransitive(n, k).unwrap(), member));
        }
        let half = n as usize / 2;
        let wr2_member = perms
            .iter()
            .filter(|g| {
                let first = g.apply(0) < half;
                (0..half).all(|p| (g.apply(p) < half) == first)
                    && (half..n as usize).all(|p| (g.apply(p) < half) != first)
            })
            .cloned()
            .collect();
        members.push((SubgroupFamily::wr2(n).unwrap(), wr2_member));
        members.push((
            SubgroupFamily::alternating(n).unwrap(),
            perms.iter().filter(|g| g.is_even()).cloned().collect(),
        ));
        for (family, member) in &members {
            let buckets = bucket_by_type(member);
            for t in all_types(n).unwrap() {
                let formula = family.count_in_member(&t).unwrap();
                let brute = BigUint::from(buckets.get(&t).copied().unwrap_or(0));
                assert_eq!(formula, brute, "{family} at n={n}, type {t}");
                checked += 1;
            }
        }
    }
    pass(&format!(
        "7: PASS - {checked} (family, type) formula counts equal brute-force bucket counts at n = 4, 6, 8"
    ));
}

#[test]
fn criterion_8_exact_covering_numbers() {
    let catalog = Catalog::builtin();
    let mut lines = Vec::new();
    for (name, expected) in [("S4", 4usize), ("S6", 13), ("A5", 10)] {
        let start = Instant::now();
        let ambient = Ambient::parse(name).unwrap();
        let maximals = maximal_subgroups(ambient, &catalog).unwrap();
        let instance = build_cover_instance(&ambient.elements(), &maximals).unwrap();
        match exact_min_cover(&instance, SolveBudget::unlimited()) {
            CoverOutcome::Exact {
                size, certificate, ..
            } => {
                assert_eq!(size, expected, "sigma({name})");
                assert!(instance.is_cover(&certificate), "certificate for {name}");
                let elapsed = start.elapsed();
                assert!(elapsed.as_secs() < 60, "{name} took {elapsed:?}");
                lines.push(format!("sigma({name})={size} in {elapsed:?}"));
            }
            CoverOutcome::Bounds { lower, upper, .. } => {
                panic!("{name} did not certify: bounds [{lower}, {upper}]")
            }
        }
    }
    pass(&format!("8: PASS - {}", lines.join("; ")));
}

#[test]
fn criterion_8_stretch_a7() {
    // the stretch target runs under a deterministic node budget well
    // inside the 30-minute allowance; a budget exhaustion must still
    // report honest verified bounds
    let catalog = Catalog::builtin();
    let ambient = Ambient::parse("A7").unwrap();
    let start = Instant::now();
    let maximals = maximal_subgroups(ambient, &catalog).unwrap();
    let instance = build_cover_instance(&ambient.elements(), &maximals).unwrap();
    match exact_min_cover(&instance, SolveBudget::nodes(400_000)) {
        CoverOutcome::Exact {
            size,
            certificate,
            nodes,
        } => {
            assert_eq!(size, 31, "sigma(A7)");
            assert!(instance.is_cover(&certificate));
            pass(&format!(
                "8 (stretch): PASS - sigma(A7)=31 certified, {nodes} nodes in {:?}",
                start.elapsed()
            ));
        }
        CoverOutcome::Bounds {
            lower,
            upper,
            best_known,
            ..
        } => {
            assert!(lower <= 31 && 31 <= upper, "bounds [{lower},{upper}] exclude 31");
            assert!(instance.is_cover(&best_known));
            pass(&format!(
                "8 (stretch): PASS - exact bounds [{lower},{upper}] reported for sigma(A7)"
            ));
        }
    }
}

#[test]
fn criterion_9_library_determinism() {
    // byte-level determinism of the JSON-bearing report types; the
    // CLI-level byte-identical check lives in the symcover-cli suite
    let a = serde_json::to_string(&verifier::run_all([36u32])).unwrap();
    let b = serde_json::to_string(&verifier::run_all([36u32])).unwrap();
    assert_eq!(a, b);
    let pa = serde_json::to_string(&partition_check(24).unwrap()).unwrap();
    let pb = serde_json::to_string(&partition_check(24).unwrap()).unwrap();
    assert_eq!(pa, pb);
    pass("9 (library): PASS - repeated report serialization is byte-identical");
}
