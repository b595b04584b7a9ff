//! Explicit permutations of small degree (<= 16), the concrete elements
//! behind every brute-force oracle in the crate.

use std::fmt;

use crate::cycletype::CycleType;
use crate::error::{Error, Result};

/// A permutation of {0..n-1} as an image table.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<u8>,
}

pub const MAX_DEGREE: usize = 16;

impl Perm {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= MAX_DEGREE);
        Perm {
            images: (0..degree as u8).collect(),
        }
    }

    /// Build from an image table; must be a bijection on {0..n-1}.
    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        if images.len() > MAX_DEGREE {
            return Err(Error::domain("Perm::from_images", "degree above 16"));
        }
        let mut seen = vec![false; images.len()];
        for &img in &images {
            if img as usize >= images.len() || seen[img as usize] {
                return Err(Error::domain("Perm::from_images", "not a bijection"));
            }
            seen[img as usize] = true;
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// Composition acting right-to-left: (self * rhs)(x) = self(rhs(x)).
    pub fn compose(&self, rhs: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), rhs.degree());
        let images = rhs.images.iter().map(|&x| self.images[x as usize]).collect();
        Perm { images }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u8;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i as u8 == img)
    }

    /// Pack into a u64 key (4 bits per point); total order compatible with
    /// the image table and usable as a cheap hash key.
    pub fn key(&self) -> u64 {
        let mut k = 0u64;
        for &img in &self.images {
            k = k << 4 | img as u64;
        }
        k
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut seen = vec![false; self.images.len()];
        let mut lengths = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                len += 1;
                p = self.apply(p);
            }
            lengths.push(len);
        }
        CycleType::from_cycles(self.images.len() as u32, &lengths)
            .expect("cycle lengths of a permutation always sum to the degree")
    }

    pub fn is_even(&self) -> bool {
        self.cycle_type()
            .parts()
            .iter()
            .map(|&(l, m)| (l as u64 - 1) * m as u64)
            .sum::<u64>()
            % 2
            == 0
    }

    /// Parse disjoint cycle notation such as `(0 1 2)(3 4)`; points not
    /// mentioned are fixed. The identity may be written `()`.
    pub fn parse_cycles(input: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<u8> = (0..degree as u8).collect();
        let parse_err = |detail: String| Error::Parse {
            what: "permutation",
            input: input.to_string(),
            detail,
        };
        let trimmed = input.trim();
        if !trimmed.starts_with('(') || !trimmed.ends_with(')') {
            return Err(parse_err("expected parenthesized cycles".into()));
        }
        let mut moved = vec![false; degree];
        for cycle_str in trimmed[1..trimmed.len() - 1].split(")(") {
            let points: Vec<usize> = cycle_str
                .split([' ', ','])
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|e| parse_err(format!("bad point `{s}`: {e}")))
                })
                .collect::<Result<_>>()?;
            if points.is_empty() {
                continue;
            }
            for &p in &points {
                if p >= degree {
                    return Err(parse_err(format!("point {p} out of range for degree {degree}")));
                }
                if moved[p] {
                    return Err(parse_err(format!("point {p} appears twice")));
                }
                moved[p] = true;
            }
            for w in points.windows(2) {
                images[w[0]] = w[1] as u8;
            }
            images[*points.last().unwrap()] = points[0] as u8;
        }
        Perm::from_images(images)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.images.len()];
        let mut wrote = false;
        for start in 0..self.images.len() {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                first = false;
                write!(f, "{p}")?;
                p = self.apply(p);
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Every permutation of degree n in lexicographic image-table order.
pub fn all_perms(degree: usize) -> Vec<Perm> {
    assert!(degree <= 8, "full enumeration only intended for degree <= 8");
    let mut out = Vec::new();
    let mut images: Vec<u8> = (0..degree as u8).collect();
    loop {
        out.push(Perm {
            images: images.clone(),
        });
        // next lexicographic permutation
        let Some(i) = (0..images.len().saturating_sub(1)).rev().find(|&i| images[i] < images[i + 1])
        else {
            break;
        };
        let j = (i + 1..images.len()).rev().find(|&j| images[j] > images[i]).unwrap();
        images.swap(i, j);
        images[i + 1..].reverse();
    }
    out
}
