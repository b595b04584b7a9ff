//! Machine-checked reports for every counting inequality and exchange
//! argument behind the cover's minimality, evaluated in exact integer and
//! rational arithmetic. Re-running any verifier is bit-identical.
//!
//! Where a stated intermediate constant of the classical argument
//! disagrees with exact arithmetic, the verifier checks the inequality the
//! argument actually needs and records both numbers in the report instead
//! of silently adopting either.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use crate::combin::{binomial, exact_div, factorial, half_central_binomial, pow2};
use crate::error::{Error, Result};
use crate::families::SubgroupFamily;
use crate::witness::{
    intersection_profile, partition_check, sigma_formula, witness_classes, witness_classes_s18,
    CoverPlan, WitnessClass,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// A named exact quantity: an integer (denom = "1") or a rational.
#[derive(Debug, Clone, serde::Serialize)]
pub struct Quantity {
    pub name: String,
    pub numer: String,
    pub denom: String,
}

impl Quantity {
    fn int(name: impl Into<String>, v: &BigUint) -> Self {
        Quantity {
            name: name.into(),
            numer: v.to_string(),
            denom: "1".to_string(),
        }
    }

    fn ratio(name: impl Into<String>, v: &BigRational) -> Self {
        Quantity {
            name: name.into(),
            numer: v.numer().to_string(),
            denom: v.denom().to_string(),
        }
    }
}

/// One verified lemma: exact quantities, a verdict, and free-form witness
/// notes (minimizing families, flagged stated-constant mismatches).
#[derive(Debug, Clone, serde::Serialize)]
pub struct LemmaReport {
    pub lemma_id: String,
    pub n: u32,
    pub quantities: Vec<Quantity>,
    pub verdict: Verdict,
    pub witnesses: Vec<String>,
}

struct ReportBuilder {
    report: LemmaReport,
    pass: bool,
}

impl ReportBuilder {
    fn new(lemma_id: &str, n: u32) -> Self {
        ReportBuilder {
            report: LemmaReport {
                lemma_id: lemma_id.to_string(),
                n,
                quantities: Vec::new(),
                verdict: Verdict::Pass,
                witnesses: Vec::new(),
            },
            pass: true,
        }
    }

    fn int(&mut self, name: impl Into<String>, v: &BigUint) -> &mut Self {
        self.report.quantities.push(Quantity::int(name, v));
        self
    }

    fn ratio(&mut self, name: impl Into<String>, v: &BigRational) -> &mut Self {
        self.report.quantities.push(Quantity::ratio(name, v));
        self
    }

    fn check(&mut self, name: &str, ok: bool) -> &mut Self {
        if !ok {
            self.pass = false;
            self.report.witnesses.push(format!("FAILED: {name}"));
        }
        self
    }

    fn note(&mut self, s: impl Into<String>) -> &mut Self {
        self.report.witnesses.push(s.into());
        self
    }

    fn finish(mut self) -> LemmaReport {
        self.report.verdict = if self.pass { Verdict::Pass } else { Verdict::Fail };
        self.report
    }
}

fn require(cond: bool, op: &'static str, detail: String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Domain { op, detail })
    }
}

fn rat(v: &BigUint) -> BigRational {
    BigRational::from(BigInt::from(v.clone()))
}

fn rational(num: u64, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Per-member witness-set intersection of every family in the minimal
/// cover, in plan order.
fn cover_intersections(n: u32) -> Result<Vec<(SubgroupFamily, BigUint)>> {
    let classes = witness_classes(n)?;
    CoverPlan::minimal(n)?
        .families()
        .iter()
        .map(|f| {
            let total: BigUint = intersection_profile(f, &classes)?.into_iter().sum();
            Ok((f.clone(), total))
        })
        .collect()
}

fn min_intersection(values: &[(SubgroupFamily, BigUint)]) -> (SubgroupFamily, BigUint) {
    let (f, v) = values
        .iter()
        .min_by(|a, b| a.1.cmp(&b.1))
        .expect("cover has families");
    (f.clone(), v.clone())
}

/// Closed form for the wr2 per-member witness count: (n/2-1)! (n/2)!.
fn wr2_closed(n: u32) -> BigUint {
    factorial(n / 2 - 1) * factorial(n / 2)
}

/// Closed form for the smallest intransitive per-member witness count,
/// attained at S_{n/3-1} x S_{2n/3+1}: (n/3-2)! C(2n/3+1, n/3) (n/3-1)! (n/3)!.
fn intransitive_min_closed(n: u32) -> BigUint {
    let a = n / 3;
    factorial(a - 2) * binomial(2 * a as u64 + 1, a as u64) * factorial(a - 1) * factorial(a)
}

/// Minimum per-member witness intersection over the whole cover. Every
/// family's count is computed exactly; the minimum is certified to match
/// the closed form min(wr2, S_{n/3-1} x S_{2n/3+1}) and the minimizing
/// family is recorded. The flat (n/2-1)! (n/2)! lower bound the classical
/// argument states for every family holds only when wr2 is the minimizer
/// (n >= 54); the report surfaces its status without failing on it, since
/// the downstream comparisons (primitive and imprimitive capacities) are
/// checked against the true minimum.
pub fn verify_hbound(n: u32) -> Result<LemmaReport> {
    require(n.is_multiple_of(6) && n >= 24, "verify_hbound", format!("need n = 0 mod 6, n >= 24; got {n}"))?;
    let values = cover_intersections(n)?;
    let (min_family, min_value) = min_intersection(&values);
    let wr2_value = values
        .iter()
        .find(|(f, _)| matches!(f, SubgroupFamily::ImprimitiveWr2 { .. }))
        .map(|(_, v)| v.clone())
        .expect("wr2 in cover");
    let stated_bound = wr2_closed(n);
    let hmin_closed = intransitive_min_closed(n);
    let expected_min = stated_bound.clone().min(hmin_closed.clone());

    let mut b = ReportBuilder::new("hbound", n);
    b.int("per_member_wr2", &wr2_value)
        .int("stated_bound_(n/2-1)!(n/2)!", &stated_bound)
        .int("intransitive_min_closed_form", &hmin_closed)
        .int("computed_min_over_cover", &min_value);
    b.check("wr2 per-member count equals (n/2-1)!(n/2)!", wr2_value == stated_bound);
    b.check(
        "computed minimum equals min(wr2, S_{n/3-1} x S_{2n/3+1}) closed forms",
        min_value == expected_min,
    );
    b.check(
        "every family has a positive witness intersection",
        values.iter().all(|(_, v)| !v.is_zero()),
    );
    b.note(format!("minimum attained by {min_family}"));
    if min_value >= stated_bound {
        b.note("stated flat bound holds for every family");
    } else {
        b.note(format!(
            "stated flat bound exceeds the true minimum (holds only for wr2 here); \
             minimum is attained by {min_family}"
        ));
    }
    Ok(b.finish())
}

/// Primitive subgroups are negligible: 2^n (their order bound, licensed
/// for n > 24) is checked to lie strictly below both the stated
/// comparison quantity 2 (n/2)!^2 / n and the true minimum witness
/// intersection over the cover.
pub fn verify_prim(n: u32) -> Result<LemmaReport> {
    require(n.is_multiple_of(6) && n >= 30, "verify_prim", format!("the 2^n bound needs n > 24; got {n}"))?;
    let bound = pow2(n as u64);
    let stated_rhs = wr2_closed(n); // (n/2)!^2 * 2/n = (n/2-1)! (n/2)!
    let values = cover_intersections(n)?;
    let (min_family, min_value) = min_intersection(&values);

    let mut b = ReportBuilder::new("prim", n);
    b.int("primitive_order_bound_2^n", &bound)
        .int("stated_rhs_(n/2)!^2*2/n", &stated_rhs)
        .int("min_witness_intersection", &min_value);
    b.check("2^n < (n/2)!^2 * 2/n", bound < stated_rhs);
    b.check("2^n < min |H n Pi| over the cover", bound < min_value);
    b.note(format!("minimum attained by {min_family}"));
    if stated_rhs > min_value {
        b.note("stated chain link (n/2)!^2*2/n <= min |H n Pi| does not hold; the direct comparison above is what the conclusion needs");
    }
    Ok(b.finish())
}

/// Imprimitive families outside the cover are negligible: the largest
/// order over all block shapes except (n/2, 2) is checked against
/// 6 (n/3)!^3 and against the true minimum witness intersection.
pub fn verify_imprim(n: u32) -> Result<LemmaReport> {
    require(n.is_multiple_of(6) && n >= 24, "verify_imprim", format!("need n = 0 mod 6, n >= 24; got {n}"))?;
    let mut max_order = BigUint::zero();
    let mut max_shape = String::new();
    for block in 2..n {
        if !n.is_multiple_of(block) {
            continue;
        }
        let count = n / block;
        if count < 2 || (count == 2 && block == n / 2) {
            continue;
        }
        let order = factorial(block).pow(count) * factorial(count);
        if order > max_order {
            max_order = order;
            max_shape = format!("imprimitive:{block}x{count}");
        }
    }
    let cap = factorial(n / 3).pow(3) * BigUint::from(6u32);
    let stated_rhs = wr2_closed(n);
    let values = cover_intersections(n)?;
    let (min_family, min_value) = min_intersection(&values);

    let mut b = ReportBuilder::new("imprim", n);
    b.int("max_imprimitive_order_excluding_wr2", &max_order)
        .int("cap_6*(n/3)!^3", &cap)
        .int("stated_rhs_(n/2)!^2*2/n", &stated_rhs)
        .int("min_witness_intersection", &min_value);
    b.check("max order <= 6 (n/3)!^3", max_order <= cap)
        .check("6 (n/3)!^3 < (n/2)!^2 * 2/n", cap < stated_rhs)
        .check("max order < min |H n Pi| over the cover", max_order < min_value);
    b.note(format!("maximizer {max_shape}, minimum witness intersection at {min_family}"));
    Ok(b.finish())
}

/// The two forcing arguments: every wr2 member and A_n belong to any
/// minimal cover.
///
/// (a) n-cycles: each wr2 member owns (n/2-1)! (n/2)! of them, and no
/// transitive replacement family reaches that capacity (imprimitive orders
/// are at most 6 (n/3)!^3; primitive orders below 2^n for n > 24, below
/// |PGL(2,23)| = 12144 at n = 24 where the 2^n license fails but the only
/// primitive class is known).
///
/// (b) the even witness class: replacing A_n needs at least
/// |class 0| / max-per-member subgroups, which exceeds the covering number
/// budget.
pub fn verify_forced_wr2_and_alt(n: u32) -> Result<LemmaReport> {
    require(n.is_multiple_of(6) && n >= 24, "verify_forced_wr2_and_alt", format!("need n = 0 mod 6, n >= 24; got {n}"))?;
    let wr2_cell = wr2_closed(n);
    let imprim_cap = factorial(n / 3).pow(3) * BigUint::from(6u32);
    let (prim_cap, prim_note) = if n == 24 {
        (BigUint::from(12144u32), "primitive capacity at n=24: |PGL(2,23)| = 12144")
    } else {
        (pow2(n as u64), "primitive capacity: 2^n")
    };

    let classes = witness_classes(n)?;
    let class0 = classes.iter().find(|c| c.index == 0).expect("class 0 exists");
    let mut max_per = BigUint::zero();
    let mut max_k = 0u32;
    for k in 1..=(n / 2) {
        let f = SubgroupFamily::intransitive(n, k)?;
        let c = f.count_in_member(&class0.cycle_type)?;
        if c > max_per {
            max_per = c;
            max_k = k;
        }
    }
    let replace_cap = max_per.clone().max(imprim_cap.clone()).max(prim_cap.clone());
    let needed = exact_div(class0.size.clone(), &replace_cap);
    let budget = half_central_binomial(n as u64) + &needed;
    let sigma = sigma_formula(n)?;
    let stated_per = factorial(n / 2) * factorial(n / 2 - 2);

    let mut b = ReportBuilder::new("forced", n);
    b.int("wr2_per_member_n_cycles", &wr2_cell)
        .int("imprimitive_capacity", &imprim_cap)
        .int("primitive_capacity", &prim_cap)
        .int("class0_size", &class0.size)
        .int("max_per_member_class0", &max_per)
        .int("stated_per_member_(n/2)!(n/2-2)!", &stated_per)
        .int("replacements_needed_for_A_n", &needed)
        .int("half_binom_plus_needed", &budget)
        .int("sigma_formula", &sigma);
    b.check("imprimitive capacity < wr2 per-member n-cycle count", imprim_cap < wr2_cell)
        .check("primitive capacity < wr2 per-member n-cycle count", prim_cap < wr2_cell)
        .check(
            "C(n,n/2)/2 + replacements needed > sigma",
            budget > sigma,
        );
    b.note(prim_note);
    b.note(format!("max per-member class-0 count at intransitive:{max_k}"));
    if max_per != stated_per {
        b.note(format!(
            "stated per-member constant (n/2)!(n/2-2)! = {stated_per} differs from the computed \
             maximum {max_per} (n/2 odd case); the replacement count uses the computed value"
        ));
    }
    Ok(b.finish())
}

fn nonzero_class_indices(
    family: &SubgroupFamily,
    classes: &[WitnessClass],
) -> Result<Vec<i32>> {
    Ok(intersection_profile(family, classes)?
        .iter()
        .zip(classes)
        .filter(|(v, _)| !v.is_zero())
        .map(|(_, c)| c.index)
        .collect())
}

/// Profile width of the intransitive families outside the cover: each
/// S_k x S_{n-k} with n/3 <= k <= n/2 meets at most five witness classes,
/// with exactly these exceptions (for n > 30):
///
/// - n/2 even, k = n/2-1: exactly classes 0..4 (as classically stated);
/// - n/2 odd, k = n/2-2: exactly classes 0..6 - seven classes where the
///   classical count says six (classes 1..6), omitting class
///   0 = (n/2-2, n/2+2), which that family plainly meets;
/// - n/2 odd, k = n/2-4: exactly classes {2, 6, 7, 8, 9, 10} - six
///   classes; the part n/2-4 of the special class 2 type (2, n/2-4,
///   n/2+2) adds a sixth hit on top of the classical five-class window
///   bound, a case the stated count omits.
///
/// The verifier asserts the exact class sets for the exceptional k and
/// the five-class bound everywhere else.
pub fn verify_profile_width(n: u32) -> Result<LemmaReport> {
    require(n.is_multiple_of(6) && n >= 24, "verify_profile_width", format!("need n = 0 mod 6, n >= 24; got {n}"))?;
    let classes = witness_classes(n)?;
    let half = n / 2;
    let mut b = ReportBuilder::new("width", n);
    let mut worst = 0usize;
    for k in (n / 3)..=half {
        let family = SubgroupFamily::intransitive(n, k)?;
        let hit = nonzero_class_indices(&family, &classes)?;
        worst = worst.max(hit.len());
        let expected: Option<(Vec<i32>, &str)> = if half % 2 == 1 && k == half - 2 {
            Some(((0..=6).collect(), "0..6"))
        } else if half % 2 == 1 && k == half - 4 && n > 30 {
            Some((vec![2, 6, 7, 8, 9, 10], "{2,6,7,8,9,10}"))
        } else if half.is_multiple_of(2) && k == half - 1 {
            Some(((0..=4).collect(), "0..4"))
        } else {
            None
        };
        match expected {
            Some((want, desc)) => {
                b.check(
                    &format!("intransitive:{k} meets exactly classes {desc}"),
                    hit == want,
                );
                b.int(format!("width_intransitive:{k}"), &BigUint::from(hit.len()));
                if hit.len() > 6 {
                    b.note(format!(
                        "intransitive:{k} meets classes {hit:?}; stated count is six \
                         (classes 1..6), computed count is seven including class 0"
                    ));
                } else if hit.len() == 6 {
                    b.note(format!(
                        "intransitive:{k} meets classes {hit:?}; a sixth class beyond the \
                         stated five-class window, via the special class 2 type"
                    ));
                }
            }
            None => {
                b.check(
                    &format!("intransitive:{k} meets at most five classes"),
                    hit.len() <= 5,
                );
            }
        }
    }
    b.int("max_width", &BigUint::from(worst));
    Ok(b.finish())
}

/// Every intransitive family outside the cover is a strictly worse witness
/// holder than every intransitive family inside it, with the single
/// exception S_{n/3+1} x S_{2n/3-1} (which beats only the smallest cover
/// family S_{n/3-1} x S_{2n/3+1}).
///
/// The comparison runs over the exchange-relevant witness classes i >= 1:
/// classes -1 and 0 belong to wr2 and A_n, which the forcing lemmas place
/// in every minimal cover, so elements there are never part of an
/// intransitive replacement. This matters: near n = 36 and 42 the
/// S_{n/2-1} or S_{n/2-2} family's class-0 intersection is large enough
/// that its full witness total also exceeds the comparator; the report
/// flags any such family. The comparator is the minimum over the cover's
/// intransitive families (the global cover minimum moves to wr2 for large
/// n and is recorded separately).
pub fn verify_almostall(n: u32) -> Result<LemmaReport> {
    require(n.is_multiple_of(6) && n >= 36, "verify_almostall", format!("need n = 0 mod 6, n > 30; got {n}"))?;
    let a = n / 3;
    let classes = witness_classes(n)?;
    let exchange_classes: Vec<WitnessClass> =
        classes.iter().filter(|c| c.index >= 1).cloned().collect();

    let mut intrans_min = BigUint::zero();
    let mut intrans_min_i = 0u32;
    for i in 1..=(a - 1) {
        let f = SubgroupFamily::intransitive(n, i)?;
        let total: BigUint = intersection_profile(&f, &classes)?.into_iter().sum();
        if intrans_min.is_zero() || total < intrans_min {
            intrans_min = total;
            intrans_min_i = i;
        }
    }

    let values = cover_intersections(n)?;
    let (global_min_family, _) = min_intersection(&values);

    let mut exceptions = Vec::new();
    let mut m_at = std::collections::BTreeMap::new();
    let mut class0_straddlers = Vec::new();
    for k in a..=(n / 2) {
        let f = SubgroupFamily::intransitive(n, k)?;
        let total: BigUint = intersection_profile(&f, &exchange_classes)?
            .into_iter()
            .sum();
        let full: BigUint = intersection_profile(&f, &classes)?.into_iter().sum();
        if total >= intrans_min {
            exceptions.push(k);
        }
        if full >= intrans_min && total < intrans_min {
            class0_straddlers.push((k, full.clone()));
        }
        m_at.insert(k, total);
    }

    // displayed chains: S_{n/3} x S_{2n/3} and S_{n/3+2} x S_{2n/3-2}
    let h1_closed = intransitive_min_closed(n);
    let m_a_closed = exact_div(
        factorial(a - 1) * factorial(2 * a),
        &(BigUint::from(a - 1) * BigUint::from(a + 1)),
    );
    let m_a2_closed = exact_div(
        factorial(a + 1) * factorial(2 * a - 2),
        &(BigUint::from(a - 3) * BigUint::from(a + 1)),
    ) + exact_div(
        factorial(a + 1) * factorial(2 * a - 2),
        &(BigUint::from(a - 5) * BigUint::from(a + 3)),
    );

    let mut b = ReportBuilder::new("almostall", n);
    b.int("comparator_min_intransitive_in_cover", &intrans_min)
        .int("closed_form_comparator", &h1_closed)
        .int(format!("m_intransitive:{a}"), &m_at[&a])
        .int("closed_form_m_n/3", &m_a_closed)
        .int(format!("m_intransitive:{}", a + 1), &m_at[&(a + 1)])
        .int(format!("m_intransitive:{}", a + 2), &m_at[&(a + 2)])
        .int("closed_form_m_n/3+2", &m_a2_closed);
    b.check(
        "comparator attained at i = n/3 - 1",
        intrans_min_i == a - 1,
    );
    b.check("comparator equals its closed form", intrans_min == h1_closed);
    b.check(
        "exception set is exactly { n/3 + 1 }",
        exceptions == vec![a + 1],
    );
    b.check(
        "the exception is strict: m_{n/3+1} > comparator",
        m_at[&(a + 1)] > intrans_min,
    );
    b.check("m_{n/3} matches its closed form", m_at[&a] == m_a_closed);
    b.check("m_{n/3} < comparator", m_at[&a] < intrans_min);
    b.check("m_{n/3+2} matches its closed form", m_at[&(a + 2)] == m_a2_closed);
    b.check("m_{n/3+2} < comparator", m_at[&(a + 2)] < intrans_min);
    b.note(format!(
        "global cover minimum at {global_min_family}; intransitive comparator at intransitive:{intrans_min_i}"
    ));
    for (k, full) in class0_straddlers {
        b.note(format!(
            "intransitive:{k} exceeds the comparator only through class 0 \
             (full witness total {full}); class 0 is owned by the forced A_n"
        ));
    }
    Ok(b.finish())
}

/// The exchange argument: replacing cover families by S_{n/3+1} x
/// S_{2n/3-1} members cannot shrink the cover. Checks, in exact rationals:
/// the per-subgroup coverage ratio (4n/3+2)/(n/3+1) on the class the
/// exception shares with the smallest cover family, the ordering and slack
/// conditions on the four per-member class counts, and the closing strict
/// inequality. At n = 30 the variant with |C'| <= c is used, which adds
/// the preliminary replacement count 2 C(28,17) - C(27,16) > C(30,2) +
/// C(30,6) + C(30,7) + C(30,8) + C(30,9).
pub fn verify_exchange(n: u32) -> Result<LemmaReport> {
    require(n.is_multiple_of(6) && n >= 30, "verify_exchange", format!("need n = 0 mod 6, n >= 30; got {n}"))?;
    let a = n / 3;
    let classes = witness_classes(n)?;
    let class_at = |i: u32| {
        classes
            .iter()
            .find(|c| c.index == i as i32)
            .expect("witness class present")
    };

    // per-member counts of the four cover families the exception touches
    let mut h = Vec::new();
    for j in 1..=4u32 {
        let f = SubgroupFamily::intransitive(n, a - j)?;
        h.push(f.count_in_member(&class_at(a - j).cycle_type)?);
    }
    let h_closed = [
        exact_div(factorial(a - 2) * factorial(2 * a + 1), &(BigUint::from(a) * BigUint::from(a + 1))),
        exact_div(
            factorial(a - 3) * factorial(2 * a + 2),
            &(BigUint::from(2u32) * BigUint::from(a + 1) * BigUint::from(a + 1)),
        ),
        exact_div(factorial(a - 4) * factorial(2 * a + 3), &(BigUint::from(a + 1) * BigUint::from(a + 2))),
        exact_div(factorial(a - 5) * factorial(2 * a + 4), &(BigUint::from(a + 1) * BigUint::from(a + 3))),
    ];

    let m_family = SubgroupFamily::intransitive(n, a + 1)?;
    // capacity on the four classes the exchange is fought over
    let mut m_total = BigUint::zero();
    for j in 1..=4u32 {
        m_total += m_family.count_in_member(&class_at(a - j).cycle_type)?;
    }
    let m_full: BigUint = intersection_profile(&m_family, &classes)?.into_iter().sum();
    let m1 = m_family.count_in_member(&class_at(a - 1).cycle_type)?;

    let ratio = rat(&h[0]) / rat(&m1);
    let ratio_expected = rational(4 * n as u64 / 3 + 2, n as u64 / 3 + 1);

    // final inequality: per-member exception capacity vs. weighted demand
    let weight1 = rational(a as u64 + 1, 4 * a as u64 + 2);
    let weight2 = rational(3 * a as u64 + 1, 4 * a as u64 + 2);
    let demand = &weight1 * rat(&h[0]) + &weight2 * rat(&h[1]);
    let capacity = rat(&m_total);

    let mut b = ReportBuilder::new("exchange", n);
    for (j, (computed, closed)) in h.iter().zip(&h_closed).enumerate() {
        b.int(format!("h_per_member_class_{}", a - 1 - j as u32), computed);
        b.check(
            &format!("h_{} matches closed form", j + 1),
            computed == closed,
        );
    }
    b.int("exception_per_member_total", &m_total)
        .ratio("coverage_ratio", &ratio)
        .ratio("coverage_ratio_expected_(4n/3+2)/(n/3+1)", &ratio_expected)
        .ratio("demand_weighted", &demand)
        .ratio("capacity", &capacity);
    b.check("coverage ratio equals (4n/3+2)/(n/3+1)", ratio == ratio_expected);
    b.check(
        "per-member counts increase: h1 < h2 < h3 < h4",
        h[0] < h[1] && h[1] < h[2] && h[2] < h[3],
    );
    b.check("slack: h3 + h4 >= 2 h2", h[2].clone() + &h[3] >= h[1].clone() * BigUint::from(2u32));
    b.check("capacity < demand (closing strict inequality)", capacity < demand);

    if n == 30 {
        // at n = 30 the exception family also holds the (2,11,17) class;
        // covering its loss is priced by the S_2 x S_28 replacement count,
        // after which at most one such member is ignored (|C'| <= c)
        let extra = &m_full - &m_total;
        let prelim = binomial(28, 17) * BigUint::from(2u32) - binomial(27, 16);
        let pool: BigUint = [2u64, 6, 7, 8, 9].iter().map(|&i| binomial(30, i)).sum();
        b.int("per_member_class_2_extra", &extra)
            .int("replacements_for_two_S2xS28", &prelim)
            .int("candidate_pool_size", &pool);
        b.check(
            "the exception family meets (2,11,17) at n = 30",
            !extra.is_zero(),
        );
        b.check("2 C(28,17) - C(27,16) = 29910465", prelim == BigUint::from(29910465u64));
        b.check(
            "candidate pool = 22790085",
            pool == BigUint::from(22790085u64),
        );
        b.check("29910465 > 22790085", prelim > pool);
        b.note("n = 30 variant: |C'| <= c instead of |C'| <= c - 1");
    } else {
        b.check(
            "the exception family meets exactly the four exchange classes",
            m_full == m_total,
        );
    }
    Ok(b.finish())
}

/// The S_18-specific counts: each S_7 x S_11 member holds exactly
/// 3181939200 witness elements across the classes (3,7,8), (4,7,7),
/// (5,6,7); the S_3, S_4, S_5-side families each hold strictly more per
/// member; and the two binomial replacement counts are reproduced. The
/// stated per-member lower bound 3358297600 for the latter differs from
/// the computed minimum; both appear in the report, and the verdict rests
/// on the strict inequality the argument needs.
pub fn verify_s18() -> LemmaReport {
    let classes = witness_classes_s18();
    let pi2: Vec<WitnessClass> = classes.into_iter().filter(|c| c.index >= 3).collect();
    let total_of = |k: u32| -> BigUint {
        let f = SubgroupFamily::intransitive(18, k).expect("valid family");
        intersection_profile(&f, &pi2)
            .expect("countable family")
            .into_iter()
            .sum()
    };
    let replacement = total_of(7);
    let in_cover = [3u32, 4, 5].map(total_of);
    let min_in_cover = in_cover.iter().min().unwrap().clone();
    let stated_min = BigUint::from(3358297600u64);
    let expected_replacement = BigUint::from(3181939200u64);

    let mut b = ReportBuilder::new("s18", 18);
    b.int("per_member_S7xS11", &replacement)
        .int("per_member_S3xS15", &in_cover[0])
        .int("per_member_S4xS14", &in_cover[1])
        .int("per_member_S5xS13", &in_cover[2])
        .int("min_per_member_in_cover", &min_in_cover)
        .int("stated_lower_bound", &stated_min);
    b.check(
        "S_7 x S_11 per-member count = 3181939200",
        replacement == expected_replacement,
    );
    b.check(
        "min in-cover per-member count > 3181939200",
        min_in_cover > expected_replacement,
    );
    b.check("C(18,7) = 31824", binomial(18, 7) == BigUint::from(31824u32));
    b.check("C(17,7) = 19448", binomial(17, 7) == BigUint::from(19448u32));
    if min_in_cover != stated_min {
        b.note(format!(
            "stated per-member lower bound {stated_min} differs from the computed minimum \
             {min_in_cover}; the argument needs only min > 3181939200, which holds"
        ));
    }
    b.finish()
}

/// A cover-and-partition report for S_18, used by sweeps that include 18.
pub fn verify_s18_cover() -> Result<LemmaReport> {
    let plan = CoverPlan::minimal(18)?;
    let uncovered = plan.uncovered_types()?;
    let partition = partition_check(18)?;
    let mut b = ReportBuilder::new("s18_cover", 18);
    b.int("uncovered_types", &BigUint::from(uncovered.len()));
    b.check("the S_18 cover leaves no type uncovered", uncovered.is_empty());
    b.check("the cover partitions the witness set", partition.pass);
    Ok(b.finish())
}

/// Which lemma verifiers apply at a given degree.
pub fn applicable_lemmas(n: u32) -> Vec<&'static str> {
    if n == 18 {
        return vec!["s18", "s18_cover"];
    }
    if !n.is_multiple_of(6) || n < 24 {
        return Vec::new();
    }
    let mut out = vec!["hbound"];
    if n >= 30 {
        out.push("prim");
    }
    out.extend(["imprim", "forced", "width"]);
    if n >= 36 {
        out.push("almostall");
    }
    if n >= 30 {
        out.push("exchange");
    }
    out
}

/// Run one named verifier.
pub fn verify_lemma(lemma: &str, n: u32) -> Result<LemmaReport> {
    match lemma {
        "hbound" => verify_hbound(n),
        "prim" => verify_prim(n),
        "imprim" => verify_imprim(n),
        "forced" => verify_forced_wr2_and_alt(n),
        "width" => verify_profile_width(n),
        "almostall" => verify_almostall(n),
        "exchange" => verify_exchange(n),
        "s18" => {
            require(n == 18, "verify_lemma", format!("s18 applies only to n = 18, got {n}"))?;
            Ok(verify_s18())
        }
        "s18_cover" => {
            require(n == 18, "verify_lemma", format!("s18_cover applies only to n = 18, got {n}"))?;
            verify_s18_cover()
        }
        other => Err(Error::Parse {
            what: "lemma id",
            input: other.to_string(),
            detail: "expected one of hbound|prim|imprim|forced|width|almostall|exchange|s18".to_string(),
        }),
    }
}

/// Run every applicable verifier for each degree, in (n, lemma) order.
/// Per-item errors become failed reports instead of aborting the sweep.
pub fn run_all(degrees: impl IntoIterator<Item = u32>) -> Vec<LemmaReport> {
    let mut out = Vec::new();
    for n in degrees {
        for lemma in applicable_lemmas(n) {
            match verify_lemma(lemma, n) {
                Ok(report) => out.push(report),
                Err(e) => {
                    let mut b = ReportBuilder::new(lemma, n);
                    b.check("verifier ran", false);
                    b.note(format!("error: {e}"));
                    out.push(b.finish());
                }
            }
        }
    }
    out
}
