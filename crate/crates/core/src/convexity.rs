//! Digital convexity.
//!
//! `S` is digitally convex when every `v ∉ S` has a private neighbor, a vertex
//! of `N[v]` outside `N[S]`. The convex sets are exactly the complements of
//! the sets `N[A]`, which ties this module to the union closure of the
//! closed-neighborhood support.

use std::fmt;

use crate::error::{Error, Result};
use crate::families::SetFamily;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest order for which [`digital_convexity`] sweeps all subsets.
pub const CONVEXITY_CEILING: usize = 20;

/// Outcome of a single convexity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConvexityCheck {
    /// Convex; `witnesses` pairs every outside vertex with one private neighbor.
    Convex { witnesses: Vec<(usize, usize)> },
    /// Not convex; `vertex` lies outside the set and has no private neighbor.
    Violated { vertex: usize },
}

impl ConvexityCheck {
    pub fn is_convex(&self) -> bool {
        matches!(self, ConvexityCheck::Convex { .. })
    }
}

pub fn is_digitally_convex(g: &Graph, s: VertexSet) -> Result<ConvexityCheck> {
    if s.universe() != g.n() {
        return Err(Error::UniverseMismatch {
            expected: g.n(),
            found: s.universe(),
        });
    }
    let covered = g.closed_of_set(s);
    let mut witnesses = Vec::new();
    for v in s.complement() {
        match g.closed(v).difference(covered).first() {
            Some(x) => witnesses.push((v, x)),
            None => return Ok(ConvexityCheck::Violated { vertex: v }),
        }
    }
    Ok(ConvexityCheck::Convex { witnesses })
}

/// `𝒟(G)`, the family of all digitally convex sets.
pub fn digital_convexity(g: &Graph) -> Result<SetFamily> {
    let n = g.n();
    if n > CONVEXITY_CEILING {
        return Err(Error::ResourceLimit {
            what: "digital convexity sweep order",
            limit: CONVEXITY_CEILING,
        });
    }
    let closed: Vec<u64> = (0..n).map(|v| g.closed(v).bits()).collect();
    let total = 1usize << n;
    // N[S] for every S, built from S minus its lowest member
    let mut cover = vec![0u64; total];
    let mut members = Vec::new();
    for mask in 0..total {
        if mask != 0 {
            let low = mask.trailing_zeros() as usize;
            cover[mask] = cover[mask & (mask - 1)] | closed[low];
        }
        let outside = !(mask as u64) & ((total as u64) - 1);
        let mut rest = outside;
        let mut convex = true;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if closed[v] & !cover[mask] == 0 {
                convex = false;
                break;
            }
        }
        if convex {
            members.push(VertexSet::from_bits_unchecked(n, mask as u64));
        }
    }
    Ok(SetFamily::from_members_unchecked(n, members))
}

/// Member-wise complement within the universe.
pub fn complement_family(f: &SetFamily) -> SetFamily {
    SetFamily::from_members_unchecked(f.universe(), f.iter().map(VertexSet::complement).collect())
}

/// Why a family fails to be a convexity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    MissingEmptySet,
    MissingUniverse,
    NotIntersectionClosed { a: VertexSet, b: VertexSet },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::MissingEmptySet => write!(f, "the empty set is missing"),
            AxiomViolation::MissingUniverse => write!(f, "the full vertex set is missing"),
            AxiomViolation::NotIntersectionClosed { a, b } => {
                write!(f, "{a} ∩ {b} = {} is missing", a.intersection(*b))
            }
        }
    }
}

/// Checks that `f` contains `∅` and `V` and is closed under intersection.
pub fn check_convexity_axioms(f: &SetFamily) -> std::result::Result<(), AxiomViolation> {
    let n = f.universe();
    if !f.contains(VertexSet::empty(n)) {
        return Err(AxiomViolation::MissingEmptySet);
    }
    if !f.contains(VertexSet::full(n)) {
        return Err(AxiomViolation::MissingUniverse);
    }
    let members = f.members();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if !f.contains(a.intersection(b)) {
                return Err(AxiomViolation::NotIntersectionClosed { a, b });
            }
        }
    }
    Ok(())
}
