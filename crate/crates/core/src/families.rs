//! Set families over a vertex universe: neighborhood multisets, supports,
//! union closures, neighborhood comparisons through a generating family,
//! union bases and base vertices.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Default ceiling on the number of members a union closure may produce.
pub const DEFAULT_CLOSURE_LIMIT: usize = 1 << 20;

/// A finite set of vertex sets over a common universe, kept deduplicated and
/// sorted in canonical order (size, then lexicographic).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    universe: usize,
    members: Vec<VertexSet>,
}

impl std::fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SetFamily(n={}, ", self.universe)?;
        f.debug_set().entries(self.members.iter()).finish()?;
        write!(f, ")")
    }
}

impl SetFamily {
    pub fn empty(universe: usize) -> Self {
        SetFamily {
            universe,
            members: Vec::new(),
        }
    }

    pub fn new<I: IntoIterator<Item = VertexSet>>(universe: usize, sets: I) -> Result<Self> {
        let mut members = Vec::new();
        for s in sets {
            if s.universe() != universe {
                return Err(Error::UniverseMismatch {
                    expected: universe,
                    found: s.universe(),
                });
            }
            members.push(s);
        }
        Ok(Self::from_members_unchecked(universe, members))
    }

    /// Builds a family from member lists such as `[[0, 1], [2]]`.
    pub fn from_lists<I, J>(universe: usize, lists: I) -> Result<Self>
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = usize>,
    {
        let sets = lists
            .into_iter()
            .map(|l| VertexSet::from_vertices(universe, l))
            .collect::<Result<Vec<_>>>()?;
        Self::new(universe, sets)
    }

    pub(crate) fn from_members_unchecked(universe: usize, mut members: Vec<VertexSet>) -> Self {
        members.sort_unstable();
        members.dedup();
        SetFamily { universe, members }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.members.iter().copied()
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.members.iter().map(|s| s.to_vec()).collect()
    }

    /// Union of all members.
    pub fn ground(&self) -> VertexSet {
        self.iter().fold(VertexSet::empty(self.universe), VertexSet::union)
    }

    /// `{M ∩ s : M ∈ self}`, re-indexed onto `0..|s|` in ascending order of `s`.
    pub fn restrict(&self, s: VertexSet) -> SetFamily {
        let map = s.to_vec();
        let k = map.len();
        let members = self
            .iter()
            .map(|m| {
                let bits = map
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| m.contains(v))
                    .fold(0u64, |b, (i, _)| b | 1 << i);
                VertexSet::from_bits_unchecked(k, bits)
            })
            .collect();
        SetFamily::from_members_unchecked(k, members)
    }
}

/// The multiset of (closed or open) neighborhoods of a graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NeighborhoodMultiset {
    universe: usize,
    entries: BTreeMap<VertexSet, usize>,
}

impl std::fmt::Debug for NeighborhoodMultiset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "NeighborhoodMultiset(n={}, ", self.universe)?;
        f.debug_map().entries(self.entries.iter()).finish()?;
        write!(f, ")")
    }
}

impl NeighborhoodMultiset {
    pub fn new<I: IntoIterator<Item = VertexSet>>(universe: usize, sets: I) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for s in sets {
            if s.universe() != universe {
                return Err(Error::UniverseMismatch {
                    expected: universe,
                    found: s.universe(),
                });
            }
            *entries.entry(s).or_insert(0) += 1;
        }
        Ok(NeighborhoodMultiset { universe, entries })
    }

    pub fn from_lists<I, J>(universe: usize, lists: I) -> Result<Self>
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = usize>,
    {
        let sets = lists
            .into_iter()
            .map(|l| VertexSet::from_vertices(universe, l))
            .collect::<Result<Vec<_>>>()?;
        Self::new(universe, sets)
    }

    /// Every member of `f` with multiplicity one.
    pub fn from_family(f: &SetFamily) -> Self {
        NeighborhoodMultiset {
            universe: f.universe(),
            entries: f.iter().map(|s| (s, 1)).collect(),
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Distinct members with their multiplicities, in canonical order.
    pub fn entries(&self) -> impl Iterator<Item = (VertexSet, usize)> + '_ {
        self.entries.iter().map(|(&s, &m)| (s, m))
    }

    pub fn multiplicity(&self, s: VertexSet) -> usize {
        self.entries.get(&s).copied().unwrap_or(0)
    }

    pub fn distinct_len(&self) -> usize {
        self.entries.len()
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    /// Members repeated by multiplicity, in canonical order.
    pub fn to_sorted_vec(&self) -> Vec<VertexSet> {
        self.entries()
            .flat_map(|(s, m)| std::iter::repeat_n(s, m))
            .collect()
    }
}

/// `𝒩[G]` when `closed`, otherwise `𝒩(G)`.
pub fn neighborhood_multiset(g: &Graph, closed: bool) -> NeighborhoodMultiset {
    let mut entries = BTreeMap::new();
    for v in 0..g.n() {
        let s = if closed { g.closed(v) } else { g.open(v) };
        *entries.entry(s).or_insert(0) += 1;
    }
    NeighborhoodMultiset {
        universe: g.n(),
        entries,
    }
}

/// The distinct members of a multiset.
pub fn support_of(m: &NeighborhoodMultiset) -> SetFamily {
    SetFamily {
        universe: m.universe,
        members: m.entries.keys().copied().collect(),
    }
}

/// `supp(𝒩[G])`.
pub fn closed_support(g: &Graph) -> SetFamily {
    support_of(&neighborhood_multiset(g, true))
}

/// All unions of subfamilies of `f`, the empty union included.
pub fn union_closure(f: &SetFamily) -> Result<SetFamily> {
    union_closure_with_limit(f, DEFAULT_CLOSURE_LIMIT)
}

pub fn union_closure_with_limit(f: &SetFamily, limit: usize) -> Result<SetFamily> {
    let empty = VertexSet::empty(f.universe);
    let mut seen: HashSet<VertexSet> = HashSet::from([empty]);
    let mut all = vec![empty];
    for g in f.iter() {
        let len = all.len();
        for i in 0..len {
            let u = all[i].union(g);
            if seen.insert(u) {
                if all.len() >= limit {
                    return Err(Error::ResourceLimit {
                        what: "union closure size",
                        limit,
                    });
                }
                all.push(u);
            }
        }
    }
    Ok(SetFamily::from_members_unchecked(f.universe, all))
}

// Testing only the generators of U is enough: if A meets M1 ∪ M2 it meets M1
// or M2, and B meeting that one meets the union.

/// Whether `N[A] ⊆ N[B]`, decided from any family generating `U(𝒩[G])`.
pub fn cn_subset(a: VertexSet, b: VertexSet, gen: &SetFamily) -> bool {
    gen.iter().all(|m| !a.intersects(m) || b.intersects(m))
}

/// Whether `N[A] = N[B]`, decided from any family generating `U(𝒩[G])`.
pub fn cn_equal(a: VertexSet, b: VertexSet, gen: &SetFamily) -> bool {
    gen.iter().all(|m| a.intersects(m) == b.intersects(m))
}

/// Whether `target` is the union of the members of `pool` contained in it.
fn spanned_by<'a>(target: VertexSet, pool: impl Iterator<Item = &'a VertexSet>) -> bool {
    let covered = pool
        .filter(|m| m.is_subset(target))
        .fold(VertexSet::empty(target.universe()), |acc, m| acc.union(*m));
    covered == target
}

/// Whether every member of `f` is a union of members of `basis`.
pub fn spans(basis: &[VertexSet], f: &SetFamily) -> bool {
    f.iter().all(|m| spanned_by(m, basis.iter()))
}

/// The union basis of `f`.
pub fn union_basis(f: &SetFamily) -> SetFamily {
    union_basis_in_order(f.universe, f.members())
}

/// Prunes `order` one member at a time, dropping any member that the
/// remaining ones already span. The survivors do not depend on `order`.
pub fn union_basis_in_order(universe: usize, order: &[VertexSet]) -> SetFamily {
    let mut seen = HashSet::new();
    let mut current: Vec<VertexSet> = order.iter().copied().filter(|s| seen.insert(*s)).collect();

    let mut i = 0;
    while i < current.len() {
        let target = current[i];
        let others = current.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, s)| s);
        if spanned_by(target, others) {
            current.remove(i);
        } else {
            i += 1;
        }
    }
    SetFamily::from_members_unchecked(universe, current)
}

/// A set of base vertices: vertices whose closed neighborhoods form the
/// union basis of `supp(𝒩[G])`.
///
/// Candidates are examined from the highest id down, so among vertices with
/// equal closed neighborhoods the lowest id is the one kept. For a candidate
/// `v`, `A* = {u ∈ S \ {v} : N[u] ⊆ N[v]}` is the largest set that could
/// satisfy `N[A] = N[v]`, so `v` is removable iff `N[A*] = N[v]`. A vertex
/// that is not removable stays that way as `S` shrinks, so one pass suffices.
pub fn base_vertices(gen: &SetFamily, universe: usize) -> VertexSet {
    let mut s = VertexSet::full(universe);
    for v in (0..universe).rev() {
        let vs = VertexSet::singleton(universe, v);
        let rest = s.difference(vs);
        let canonical = canonical_cover(v, rest, gen);
        if cn_equal(vs, canonical, gen) {
            s = rest;
        }
    }
    s
}

/// `{u ∈ pool : N[u] ⊆ N[v]}`.
pub fn canonical_cover(v: usize, pool: VertexSet, gen: &SetFamily) -> VertexSet {
    let vs = VertexSet::singleton(gen.universe(), v);
    pool.iter()
        .filter(|&u| cn_subset(VertexSet::singleton(gen.universe(), u), vs, gen))
        .fold(VertexSet::empty(gen.universe()), |mut acc, u| {
            acc.insert(u);
            acc
        })
}
