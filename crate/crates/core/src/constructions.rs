//! Explicit hypergraph families with extremal independent-set counts.
//!
//! Each family is laid out on contiguous vertex blocks: part `p` of a
//! multipartite construction occupies ids `[p*block, (p+1)*block)`, with
//! `block = d^2` for the tripartite family and `d` otherwise (rows before
//! columns for the grid). Residue classes are 0-based, so the mod-graph
//! edge predicate is `v1 + v2 + v3 == 0 (mod d)`.

use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use crate::hypergraph::Hypergraph;

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("{family:?}: {reason}")]
    BadParameter { family: Family, reason: String },
    #[error("no stated count formula for {family:?} at independence level k={k}")]
    NoFormula { family: Family, k: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Family {
    /// Complete bipartite graph K_{d,d} as a 2-uniform hypergraph.
    Kdd,
    /// Transposed complete bipartite graph: the r x r grid, 2-regular.
    Krrt,
    /// Tripartite 3-uniform family on 3d^2 vertices, cross-edge free.
    TripartiteK,
    /// Mod graph: 3-partite with v1+v2+v3 = 0 (mod d).
    Mod3,
    /// 4-partite with v3 = v1+v2 and v4 = v1+2v2 (mod d), d odd.
    H4,
    /// r-partite congruence family, prime d > r.
    Hrd,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Kdd => "kdd",
            Family::Krrt => "krrt",
            Family::TripartiteK => "tripartite-k",
            Family::Mod3 => "mod3",
            Family::H4 => "h4",
            Family::Hrd => "hrd",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        match name {
            "kdd" => Some(Family::Kdd),
            "krrt" => Some(Family::Krrt),
            "tripartite-k" | "tripartite_k" => Some(Family::TripartiteK),
            "mod3" => Some(Family::Mod3),
            "h4" => Some(Family::H4),
            "hrd" => Some(Family::Hrd),
            _ => None,
        }
    }
}

/// Family plus parameters. `r` is ignored by families with fixed uniformity
/// (Kdd: 2, TripartiteK and Mod3: 3, H4: 4).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub family: Family,
    pub r: usize,
    pub d: usize,
}

/// Whether a count formula is asserted as an equality or a lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CountKind {
    Exact,
    LowerBound,
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

impl FamilySpec {
    pub fn kdd(d: usize) -> Self {
        FamilySpec { family: Family::Kdd, r: 2, d }
    }
    pub fn krrt(r: usize) -> Self {
        FamilySpec { family: Family::Krrt, r, d: 2 }
    }
    pub fn tripartite_k(d: usize) -> Self {
        FamilySpec { family: Family::TripartiteK, r: 3, d }
    }
    pub fn mod3(d: usize) -> Self {
        FamilySpec { family: Family::Mod3, r: 3, d }
    }
    pub fn h4(d: usize) -> Self {
        FamilySpec { family: Family::H4, r: 4, d }
    }
    pub fn hrd(r: usize, d: usize) -> Self {
        FamilySpec { family: Family::Hrd, r, d }
    }

    /// Uniformity of the built hypergraph.
    pub fn uniformity(&self) -> usize {
        match self.family {
            Family::Kdd => 2,
            Family::TripartiteK | Family::Mod3 => 3,
            Family::H4 => 4,
            Family::Krrt | Family::Hrd => self.r,
        }
    }

    /// Regularity of the built hypergraph.
    pub fn regularity(&self) -> usize {
        match self.family {
            Family::Krrt => 2,
            _ => self.d,
        }
    }

    fn check(&self) -> Result<(), ConstructionError> {
        let bad = |reason: String| ConstructionError::BadParameter { family: self.family, reason };
        match self.family {
            Family::Kdd | Family::TripartiteK | Family::Mod3 => {
                if self.d < 1 {
                    return Err(bad("requires d >= 1".into()));
                }
            }
            Family::Krrt => {
                if self.r < 2 {
                    return Err(bad("requires r >= 2".into()));
                }
            }
            Family::H4 => {
                if self.d % 2 == 0 {
                    return Err(bad(format!("requires odd d, got d={}", self.d)));
                }
            }
            Family::Hrd => {
                if self.r < 3 {
                    return Err(bad("requires r >= 3".into()));
                }
                if !is_prime(self.d) || self.d <= self.r {
                    return Err(bad(format!(
                        "requires prime d > r, got r={} d={}",
                        self.r, self.d
                    )));
                }
            }
        }
        Ok(())
    }

    /// Builds the hypergraph. Deterministic: identical specs yield identical
    /// edge lists.
    pub fn build(&self) -> Result<Hypergraph, ConstructionError> {
        self.check()?;
        let d = self.d;
        let (n, edges) = match self.family {
            Family::Kdd => {
                let mut edges = Vec::with_capacity(d * d);
                for i in 0..d {
                    for j in 0..d {
                        edges.push(vec![i, d + j]);
                    }
                }
                (2 * d, edges)
            }
            Family::Krrt => {
                let r = self.r;
                let mut edges = Vec::with_capacity(2 * r);
                for i in 0..r {
                    edges.push((0..r).map(|j| i * r + j).collect());
                }
                for j in 0..r {
                    edges.push((0..r).map(|i| i * r + j).collect());
                }
                (r * r, edges)
            }
            Family::TripartiteK => {
                let block = d * d;
                let mut edges = Vec::with_capacity(d * d * d);
                for k in 0..d {
                    for i in 0..d {
                        for j in 0..d {
                            edges.push(vec![k * d + i, block + k * d + j, 2 * block + i * d + j]);
                        }
                    }
                }
                (3 * block, edges)
            }
            Family::Mod3 => {
                let mut edges = Vec::with_capacity(d * d);
                for v1 in 0..d {
                    for v2 in 0..d {
                        let v3 = (2 * d - v1 - v2) % d;
                        edges.push(vec![v1, d + v2, 2 * d + v3]);
                    }
                }
                (3 * d, edges)
            }
            Family::H4 => {
                let mut edges = Vec::with_capacity(d * d);
                for v1 in 0..d {
                    for v2 in 0..d {
                        edges.push(vec![
                            v1,
                            d + v2,
                            2 * d + (v1 + v2) % d,
                            3 * d + (v1 + 2 * v2) % d,
                        ]);
                    }
                }
                (4 * d, edges)
            }
            Family::Hrd => {
                let r = self.r;
                let mut edges = Vec::with_capacity(d * d);
                for x1 in 0..d {
                    for x2 in 0..d {
                        let mut e = vec![x1, d + x2];
                        for part in 3..=r {
                            e.push((part - 1) * d + (x1 + (part - 2) * x2) % d);
                        }
                        edges.push(e);
                    }
                }
                (r * d, edges)
            }
        };
        Ok(Hypergraph::new(n, edges).expect("family construction produces valid edges"))
    }

    /// Closed-form predicted count of k-independent sets, with its kind.
    ///
    /// Supported pairs: strong (k=2) counts for Kdd, Mod3, H4, Hrd; the
    /// strong lower bound for TripartiteK; weak (k=r) lower bounds for Mod3,
    /// H4 and Hrd. The weak H4/Hrd formulas count exactly the weak
    /// independent sets omitting an entire part (inclusion-exclusion over
    /// parts), which undercounts: sets picking one vertex per part without
    /// forming an edge are weak-independent too, so these are lower bounds.
    pub fn predicted_count(&self, k: usize) -> Result<(BigUint, CountKind), ConstructionError> {
        self.check()?;
        let d = self.d as u32;
        let two = BigUint::from(2u32);
        let big = |x: usize| BigUint::from(x);
        let no_formula = || ConstructionError::NoFormula { family: self.family, k };
        match (self.family, k) {
            (Family::Kdd, 2) => Ok((two.pow(d + 1) - 1u32, CountKind::Exact)),
            (Family::Mod3, 2) => Ok((big(3) * two.pow(d) - 2u32, CountKind::Exact)),
            (Family::Mod3, 3) => Ok((
                big(3) * two.pow(2 * d) - big(3) * two.pow(d) + 1u32,
                CountKind::LowerBound,
            )),
            (Family::H4, 2) => Ok((big(4) * two.pow(d) - 3u32, CountKind::Exact)),
            (Family::H4, 4) => Ok((
                big(4) * two.pow(3 * d) - big(6) * two.pow(2 * d) + big(4) * two.pow(d) - 1u32,
                CountKind::LowerBound,
            )),
            (Family::Hrd, 2) => Ok((big(self.r) * two.pow(d) - big(self.r - 1), CountKind::Exact)),
            (Family::Hrd, k) if k == self.r => {
                let r = self.r as u32;
                let choose2 = big(self.r * (self.r - 1) / 2);
                Ok((
                    big(self.r) * two.pow((r - 1) * d) - choose2 * two.pow((r - 2) * d),
                    CountKind::LowerBound,
                ))
            }
            (Family::TripartiteK, 2) => {
                Ok(((two.pow(d + 1) - 1u32).pow(d), CountKind::LowerBound))
            }
            _ => Err(no_formula()),
        }
    }
}
