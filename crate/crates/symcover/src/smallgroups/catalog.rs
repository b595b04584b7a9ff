//! Generator catalog for the small-degree groups and their primitive
//! maximal classes. Entries are validated by closing the generators and
//! comparing against the declared order.

use super::group::{closure, DEFAULT_CLOSURE_CEILING};
use super::perm::Perm;
use crate::error::{Error, Result};

/// One catalog block: a named group given by generators in cycle notation.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub degree: u32,
    pub order: u64,
    pub generators: Vec<Perm>,
}

impl CatalogEntry {
    /// Close the generators and check the declared order.
    pub fn realize(&self) -> Result<Vec<Perm>> {
        let elems = closure(&self.generators, DEFAULT_CLOSURE_CEILING)?;
        if elems.len() as u64 != self.order {
            return Err(Error::domain(
                "CatalogEntry::realize",
                format!(
                    "entry `{}` closes to {} elements, catalog declares {}",
                    self.name,
                    elems.len(),
                    self.order
                ),
            ));
        }
        Ok(elems)
    }
}

#[derive(Debug, Clone, Default)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

/// The built-in catalog. AGL(1,5), PGL(2,5), AGL(1,7), PSL(3,2) and
/// PGL(2,7) are written down from the affine and projective actions:
/// `x -> x+1` / `x -> gx` on a field, inversion for the projective line
/// (infinity is the last point), and a Singer cycle plus transvection for
/// PSL(3,2) on the seven nonzero vectors of F_2^3.
pub const BUILTIN_CATALOG: &str = "\
group s_4 degree 4 order 24
(0 1)
(0 1 2 3)

group s_5 degree 5 order 120
(0 1)
(0 1 2 3 4)

group s_6 degree 6 order 720
(0 1)
(0 1 2 3 4 5)

group s_7 degree 7 order 5040
(0 1)
(0 1 2 3 4 5 6)

group s_8 degree 8 order 40320
(0 1)
(0 1 2 3 4 5 6 7)

group a_4 degree 4 order 12
(0 1 2)
(1 2 3)

group a_5 degree 5 order 60
(0 1 2)
(0 1 2 3 4)

group a_6 degree 6 order 360
(0 1 2)
(1 2 3 4 5)

group a_7 degree 7 order 2520
(0 1 2)
(0 1 2 3 4 5 6)

group agl_1_5 degree 5 order 20
(0 1 2 3 4)
(1 2 4 3)

group d_10 degree 5 order 10
(0 1 2 3 4)
(1 4)(2 3)

group pgl_2_5 degree 6 order 120
(0 1 2 3 4)
(1 2 4 3)
(0 5)(2 3)

group psl_2_5 degree 6 order 60
(0 1 2 3 4)
(0 5)(1 4)

group agl_1_7 degree 7 order 42
(0 1 2 3 4 5 6)
(1 3 2 6 4 5)

group psl_3_2 degree 7 order 168
(0 1 3 2 5 6 4)
(1 2)(5 6)

group pgl_2_7 degree 8 order 336
(0 1 2 3 4 5 6)
(1 3 2 6 4 5)
(0 7)(2 4)(3 5)
";

impl Catalog {
    /// Parse the text format: blocks headed by
    /// `group <name> degree <n> order <m>` followed by one generator per
    /// line in cycle notation, separated by blank lines.
    pub fn parse(text: &str) -> Result<Catalog> {
        let mut entries: Vec<CatalogEntry> = Vec::new();
        let mut current: Option<(String, u32, u64, Vec<Perm>)> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("group ") {
                if let Some((name, degree, order, gens)) = current.take() {
                    entries.push(Self::finish_entry(name, degree, order, gens)?);
                }
                let tokens: Vec<&str> = rest.split_whitespace().collect();
                if tokens.len() != 5 || tokens[1] != "degree" || tokens[3] != "order" {
                    return Err(Error::Parse {
                        what: "catalog header",
                        input: line.to_string(),
                        detail: format!("line {}: expected `group <name> degree <n> order <m>`", lineno + 1),
                    });
                }
                let degree: u32 = tokens[2].parse().map_err(|e| Error::Parse {
                    what: "catalog degree",
                    input: line.to_string(),
                    detail: format!("{e}"),
                })?;
                let order: u64 = tokens[4].parse().map_err(|e| Error::Parse {
                    what: "catalog order",
                    input: line.to_string(),
                    detail: format!("{e}"),
                })?;
                current = Some((tokens[0].to_string(), degree, order, Vec::new()));
            } else if let Some((_, degree, _, gens)) = current.as_mut() {
                gens.push(Perm::parse_cycles(line, *degree as usize)?);
            } else {
                return Err(Error::Parse {
                    what: "catalog",
                    input: line.to_string(),
                    detail: format!("line {}: generator before any group header", lineno + 1),
                });
            }
        }
        if let Some((name, degree, order, gens)) = current.take() {
            entries.push(Self::finish_entry(name, degree, order, gens)?);
        }
        Ok(Catalog { entries })
    }

    fn finish_entry(name: String, degree: u32, order: u64, gens: Vec<Perm>) -> Result<CatalogEntry> {
        if gens.is_empty() {
            return Err(Error::Parse {
                what: "catalog entry",
                input: name.clone(),
                detail: "no generators".to_string(),
            });
        }
        Ok(CatalogEntry {
            name,
            degree,
            order,
            generators: gens,
        })
    }

    pub fn builtin() -> Catalog {
        Catalog::parse(BUILTIN_CATALOG).expect("built-in catalog parses")
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    /// Merge `other` over this catalog; entries with the same name replace
    /// built-in ones.
    pub fn extend_with(&mut self, other: Catalog) {
        for entry in other.entries {
            if let Some(existing) = self.entries.iter_mut().find(|e| e.name == entry.name) {
                *existing = entry;
            } else {
                self.entries.push(entry);
            }
        }
    }
}
