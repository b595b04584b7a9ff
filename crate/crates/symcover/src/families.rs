//! Symbolic conjugacy classes of maximal subgroups of S_n, with exact
//! member counts, member orders, and per-member cycle-type intersection
//! counts for the families the cover proofs count inside (intransitive,
//! S_{n/2} wr S_2, and A_n). General imprimitive and primitive families
//! expose only order bounds, which is all the proofs use for them.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::combin::{binomial, factorial, half_central_binomial, pow2};
use crate::cycletype::{CycleType, Parity};
use crate::error::{Error, Result};

/// A conjugacy class of maximal subgroups of S_n.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SubgroupFamily {
    /// Stabilizers of an unordered split {k, n-k}; stored with k <= n/2.
    Intransitive { degree: u32, k: u32 },
    /// Stabilizers of a partition into two blocks of size n/2.
    ImprimitiveWr2 { degree: u32 },
    /// Stabilizers of a partition into `count` blocks of size `block`
    /// (excluding the wr2 case).
    ImprimitiveGeneral { degree: u32, block: u32, count: u32 },
    /// The alternating group.
    Alternating { degree: u32 },
    /// Any primitive maximal subgroup other than A_n; only the 2^n order
    /// bound is modeled.
    PrimitiveOther { degree: u32 },
}

use SubgroupFamily::*;

impl SubgroupFamily {
    pub fn intransitive(degree: u32, k: u32) -> Result<Self> {
        if k == 0 || 2 * k > degree {
            return Err(Error::domain(
                "SubgroupFamily::intransitive",
                format!("need 1 <= k <= n/2, got k={k}, n={degree}"),
            ));
        }
        Ok(Intransitive { degree, k })
    }

    pub fn wr2(degree: u32) -> Result<Self> {
        if !degree.is_multiple_of(2) || degree < 4 {
            return Err(Error::domain(
                "SubgroupFamily::wr2",
                format!("degree must be even and >= 4, got {degree}"),
            ));
        }
        Ok(ImprimitiveWr2 { degree })
    }

    /// Imprimitive family with blocks of size `block`, `count` of them.
    /// The (n/2, 2) shape normalizes to the wr2 family.
    pub fn imprimitive(degree: u32, block: u32, count: u32) -> Result<Self> {
        if block < 2 || count < 2 || block * count != degree {
            return Err(Error::domain(
                "SubgroupFamily::imprimitive",
                format!("need block,count >= 2 with block*count = n, got {block}x{count} at n={degree}"),
            ));
        }
        if count == 2 {
            return Ok(ImprimitiveWr2 { degree });
        }
        Ok(ImprimitiveGeneral {
            degree,
            block,
            count,
        })
    }

    pub fn alternating(degree: u32) -> Result<Self> {
        if degree < 3 {
            return Err(Error::domain(
                "SubgroupFamily::alternating",
                "degree must be at least 3",
            ));
        }
        Ok(Alternating { degree })
    }

    pub fn degree(&self) -> u32 {
        match *self {
            Intransitive { degree, .. }
            | ImprimitiveWr2 { degree }
            | ImprimitiveGeneral { degree, .. }
            | Alternating { degree }
            | PrimitiveOther { degree } => degree,
        }
    }

    /// The CLI spec string: `intransitive:7`, `wr2`, `imprimitive:4x3`,
    /// `alternating`, `primitive`.
    pub fn spec_string(&self) -> String {
        match *self {
            Intransitive { k, .. } => format!("intransitive:{k}"),
            ImprimitiveWr2 { .. } => "wr2".to_string(),
            ImprimitiveGeneral { block, count, .. } => format!("imprimitive:{block}x{count}"),
            Alternating { .. } => "alternating".to_string(),
            PrimitiveOther { .. } => "primitive".to_string(),
        }
    }

    /// Parse a spec string at a given degree.
    pub fn parse(spec: &str, degree: u32) -> Result<Self> {
        let err = |detail: String| Error::Parse {
            what: "family spec",
            input: spec.to_string(),
            detail,
        };
        match spec.trim() {
            "wr2" => SubgroupFamily::wr2(degree),
            "alternating" => SubgroupFamily::alternating(degree),
            "primitive" => Ok(PrimitiveOther { degree }),
            other => {
                if let Some(k) = other.strip_prefix("intransitive:") {
                    let k: u32 = k.parse().map_err(|e| err(format!("bad k: {e}")))?;
                    SubgroupFamily::intransitive(degree, k)
                } else if let Some(shape) = other.strip_prefix("imprimitive:") {
                    let (b, l) = shape
                        .split_once('x')
                        .ok_or_else(|| err("expected imprimitive:<block>x<count>".into()))?;
                    let b: u32 = b.parse().map_err(|e| err(format!("bad block size: {e}")))?;
                    let l: u32 = l.parse().map_err(|e| err(format!("bad block count: {e}")))?;
                    SubgroupFamily::imprimitive(degree, b, l)
                } else {
                    Err(err(
                        "expected intransitive:<k>, wr2, imprimitive:<b>x<l>, alternating, or primitive"
                            .into(),
                    ))
                }
            }
        }
    }

    /// Exact number of subgroups in the conjugacy class.
    pub fn member_count(&self) -> Result<BigUint> {
        let n = self.degree() as u64;
        match *self {
            Intransitive { k, .. } => {
                if (k as u64) * 2 == n {
                    Ok(half_central_binomial(n))
                } else {
                    Ok(binomial(n, k as u64))
                }
            }
            ImprimitiveWr2 { .. } => Ok(half_central_binomial(n)),
            ImprimitiveGeneral { block, count, .. } => {
                let denom = factorial(block).pow(count) * factorial(count);
                Ok(factorial(self.degree()) / denom)
            }
            Alternating { .. } => Ok(BigUint::from(1u32)),
            PrimitiveOther { .. } => Err(Error::UnsupportedFamily {
                op: "member_count",
                family: self.spec_string(),
            }),
        }
    }

    /// Exact group order of one member.
    pub fn member_order(&self) -> Result<BigUint> {
        match *self {
            Intransitive { degree, k } => Ok(factorial(k) * factorial(degree - k)),
            ImprimitiveWr2 { degree } => {
                Ok(factorial(degree / 2).pow(2) * BigUint::from(2u32))
            }
            ImprimitiveGeneral { block, count, .. } => {
                Ok(factorial(block).pow(count) * factorial(count))
            }
            Alternating { degree } => Ok(factorial(degree) / BigUint::from(2u32)),
            PrimitiveOther { .. } => Err(Error::UnsupportedFamily {
                op: "member_order",
                family: self.spec_string(),
            }),
        }
    }

    /// Exact number of permutations of type `t` inside one fixed member.
    /// Modeled for intransitive, wr2, and alternating families only.
    pub fn count_in_member(&self, t: &CycleType) -> Result<BigUint> {
        if t.degree() != self.degree() {
            return Err(Error::domain(
                "count_in_member",
                format!("type degree {} != family degree {}", t.degree(), self.degree()),
            ));
        }
        match *self {
            Intransitive { k, .. } => Ok(split_count(t, k)),
            ImprimitiveWr2 { degree } => {
                let half = degree / 2;
                // block-fixing elements: both sides preserved
                let mut total = split_count(t, half);
                // block-swapping elements exist iff every cycle length is
                // even; each corresponds to a pair (map across, map back)
                // whose round trip realizes the halved type on one block
                if let Some(halved) = t.halved() {
                    total += factorial(half) * halved.class_size();
                }
                Ok(total)
            }
            Alternating { .. } => Ok(match t.parity() {
                Parity::Even => t.class_size(),
                Parity::Odd => BigUint::zero(),
            }),
            ImprimitiveGeneral { .. } | PrimitiveOther { .. } => Err(Error::UnsupportedFamily {
                op: "count_in_member",
                family: self.spec_string(),
            }),
        }
    }

    /// Type-level membership: does some member of this family contain the
    /// permutations of type `t`?
    pub fn contains_type(&self, t: &CycleType) -> Result<bool> {
        if t.degree() != self.degree() {
            return Err(Error::domain(
                "contains_type",
                format!("type degree {} != family degree {}", t.degree(), self.degree()),
            ));
        }
        match *self {
            Intransitive { k, .. } => Ok(t.properties().subset_sums.contains(k)),
            ImprimitiveWr2 { degree } => Ok(t.all_lengths_even()
                || t.properties().subset_sums.contains(degree / 2)),
            Alternating { .. } => Ok(t.parity() == Parity::Even),
            ImprimitiveGeneral { .. } | PrimitiveOther { .. } => Err(Error::UnsupportedFamily {
                op: "contains_type",
                family: self.spec_string(),
            }),
        }
    }
}

impl fmt::Display for SubgroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec_string())
    }
}

/// Strict upper bound 2^n on the order of any primitive subgroup of S_n
/// other than A_n. Licensed only for n > 24.
pub fn primitive_order_bound(n: u32) -> Result<BigUint> {
    if n <= 24 {
        return Err(Error::domain(
            "primitive_order_bound",
            format!("the 2^n bound requires n > 24, got {n}"),
        ));
    }
    Ok(pow2(n as u64))
}

/// Number of elements of type `t` (as a type of degree n) whose cycles can
/// be split so that the cycles assigned to a fixed k-set sum to k: the
/// count inside one S_k x S_{n-k} member, summed over all sub-multiset
/// splits of the cycles of `t`.
fn split_count(t: &CycleType, k: u32) -> BigUint {
    let n = t.degree();
    let parts = t.parts();
    let mut total = BigUint::zero();
    // choose j_i cycles of each length for the k-side
    let mut choice = vec![0u32; parts.len()];
    loop {
        let side_sum: u64 = parts
            .iter()
            .zip(&choice)
            .map(|(&(len, _), &j)| len as u64 * j as u64)
            .sum();
        if side_sum == k as u64 {
            let left: Vec<(u32, u32)> = parts
                .iter()
                .zip(&choice)
                .filter(|(_, &j)| j > 0)
                .map(|(&(len, _), &j)| (len, j))
                .collect();
            let right: Vec<(u32, u32)> = parts
                .iter()
                .zip(&choice)
                .filter(|(&(_, m), &j)| j < m)
                .map(|(&(len, m), &j)| (len, m - j))
                .collect();
            let left_t = CycleType::new(k, left).expect("split sums to k");
            let right_t = CycleType::new(n - k, right).expect("complement sums to n-k");
            total += left_t.class_size() * right_t.class_size();
        }
        // odometer over the multiplicities
        let mut pos = 0;
        loop {
            if pos == parts.len() {
                return total;
            }
            if choice[pos] < parts[pos].1 {
                choice[pos] += 1;
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(degree: u32, lens: &[u32]) -> CycleType {
        CycleType::from_cycles(degree, lens).unwrap()
    }

    #[test]
    fn member_counts() {
        let f = SubgroupFamily::intransitive(18, 7).unwrap();
        assert_eq!(f.member_count().unwrap(), BigUint::from(31824u32));
        let f = SubgroupFamily::wr2(18).unwrap();
        assert_eq!(f.member_count().unwrap(), BigUint::from(24310u32));
        let f = SubgroupFamily::alternating(20).unwrap();
        assert_eq!(f.member_count().unwrap(), BigUint::from(1u32));
        let f = PrimitiveOther { degree: 30 };
        assert!(f.member_count().is_err());
    }

    #[test]
    fn member_orders() {
        assert_eq!(
            SubgroupFamily::wr2(6).unwrap().member_order().unwrap(),
            BigUint::from(72u32)
        );
        assert_eq!(
            SubgroupFamily::intransitive(18, 7)
                .unwrap()
                .member_order()
                .unwrap(),
            factorial(7) * factorial(11)
        );
        assert_eq!(
            SubgroupFamily::imprimitive(12, 4, 3)
                .unwrap()
                .member_order()
                .unwrap(),
            BigUint::from(82944u32)
        );
    }

    #[test]
    fn imprimitive_wr2_normalization() {
        let f = SubgroupFamily::imprimitive(18, 9, 2).unwrap();
        assert_eq!(f, SubgroupFamily::wr2(18).unwrap());
        assert_eq!(f.spec_string(), "wr2");
    }

    #[test]
    fn primitive_bound_domain() {
        assert_eq!(primitive_order_bound(30).unwrap(), pow2(30));
        assert_eq!(primitive_order_bound(36).unwrap(), pow2(36));
        assert!(primitive_order_bound(24).is_err());
    }

    #[test]
    fn count_in_member_examples() {
        // one S_7 x S_11 member of S_18 on type (3,7,8): the 7-cycle fills
        // the 7-side, giving 6! * 11!/(3*8)
        let f = SubgroupFamily::intransitive(18, 7).unwrap();
        assert_eq!(
            f.count_in_member(&t(18, &[3, 7, 8])).unwrap(),
            BigUint::from(1197504000u64)
        );

        // wr2 member of S_6: 12 six-cycles, 18 elements of type (2,4)
        let f = SubgroupFamily::wr2(6).unwrap();
        assert_eq!(
            f.count_in_member(&CycleType::full_cycle(6)).unwrap(),
            BigUint::from(12u32)
        );
        assert_eq!(
            f.count_in_member(&t(6, &[2, 4])).unwrap(),
            BigUint::from(18u32)
        );

        // a full cycle is transitive: no intransitive member contains it
        let f = SubgroupFamily::intransitive(6, 2).unwrap();
        assert_eq!(
            f.count_in_member(&CycleType::full_cycle(6)).unwrap(),
            BigUint::zero()
        );
    }

    #[test]
    fn wr2_full_cycle_closed_form() {
        // one wr2 member holds (n/2 - 1)! * (n/2)! of the n-cycles
        for n in [6u32, 8, 10, 12, 18] {
            let f = SubgroupFamily::wr2(n).unwrap();
            assert_eq!(
                f.count_in_member(&CycleType::full_cycle(n)).unwrap(),
                factorial(n / 2 - 1) * factorial(n / 2)
            );
        }
    }

    #[test]
    fn n_cycle_accounting_identity() {
        // member_count(wr2) * per-member n-cycles = (n-1)! for even n <= 200
        for n in (4u32..=200).step_by(2) {
            let f = SubgroupFamily::wr2(n).unwrap();
            let product = f.member_count().unwrap()
                * f.count_in_member(&CycleType::full_cycle(n)).unwrap();
            assert_eq!(product, factorial(n - 1), "n = {n}");
        }
    }

    #[test]
    fn wr2_zero_on_odd_unreachable_types() {
        // odd cycle present and no sub-multiset summing to n/2
        let f = SubgroupFamily::wr2(18).unwrap();
        assert_eq!(f.count_in_member(&t(18, &[5, 6, 7])).unwrap(), BigUint::zero());
        assert_eq!(f.count_in_member(&t(18, &[1, 7, 10])).unwrap(), BigUint::zero());
    }

    #[test]
    fn contains_type_predicates() {
        let wr2 = SubgroupFamily::wr2(24).unwrap();
        assert!(wr2.contains_type(&CycleType::full_cycle(24)).unwrap());
        assert!(wr2.contains_type(&t(24, &[6, 6, 6, 6])).unwrap());
        assert!(!wr2.contains_type(&t(24, &[11, 13])).unwrap());
        let alt = SubgroupFamily::alternating(24).unwrap();
        assert!(alt.contains_type(&t(24, &[11, 13])).unwrap());
        assert!(!alt.contains_type(&t(24, &[24])).unwrap());
        let intr = SubgroupFamily::intransitive(24, 7).unwrap();
        assert!(intr.contains_type(&t(24, &[7, 8, 9])).unwrap());
        assert!(!intr.contains_type(&t(24, &[8, 8, 8])).unwrap());
    }

    #[test]
    fn spec_string_round_trip() {
        for (spec, n) in [
            ("intransitive:7", 18u32),
            ("wr2", 18),
            ("imprimitive:4x3", 12),
            ("alternating", 18),
            ("primitive", 18),
        ] {
            let f = SubgroupFamily::parse(spec, n).unwrap();
            assert_eq!(f.spec_string(), spec);
        }
        assert!(SubgroupFamily::parse("intransitive:10", 18).is_err());
        assert!(SubgroupFamily::parse("imprimitive:5x2", 12).is_err());
        assert!(SubgroupFamily::parse("nonsense", 12).is_err());
    }
}
