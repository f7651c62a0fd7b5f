//! Exhaustive enumeration of small labeled graphs and mining of collision
//! groups: distinct labeled graphs that share a neighborhood invariant.
//!
//! For closed-multiset collisions every pair is checked against the
//! structural facts that hold for such pairs: equal edge counts, orbits of
//! the matching permutation inducing cliques in both graphs, edges
//! transferring along the permutation, and both graphs containing an induced
//! `C4`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::formats::encode_graph6;
use crate::graph::{pair_count, Graph};
use crate::permutation::PermutationWitness;

/// Largest order enumerated without opting in.
pub const DEFAULT_ENUMERATION_CEILING: usize = 7;
/// Largest order enumerated at all.
pub const HARD_ENUMERATION_CEILING: usize = 8;

/// Every labeled graph on `0..n` exactly once, in edge-mask order.
pub fn enumerate_labeled_graphs(n: usize, allow_large: bool) -> Result<impl Iterator<Item = Graph>> {
    check_order(n, allow_large)?;
    let total = 1u64 << pair_count(n);
    Ok((0..total).map(move |mask| Graph::from_edge_mask(n, mask).expect("mask within range")))
}

fn check_order(n: usize, allow_large: bool) -> Result<()> {
    let ceiling = if allow_large {
        HARD_ENUMERATION_CEILING
    } else {
        DEFAULT_ENUMERATION_CEILING
    };
    if n > ceiling {
        return Err(Error::ResourceLimit {
            what: "enumeration order",
            limit: ceiling,
        });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InvariantKind {
    ClosedMultiset,
    ClosedSupport,
    OpenMultiset,
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InvariantKind::ClosedMultiset => "closed-multiset",
            InvariantKind::ClosedSupport => "closed-support",
            InvariantKind::OpenMultiset => "open-multiset",
        })
    }
}

impl FromStr for InvariantKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed-multiset" => Ok(InvariantKind::ClosedMultiset),
            "closed-support" => Ok(InvariantKind::ClosedSupport),
            "open-multiset" => Ok(InvariantKind::OpenMultiset),
            other => Err(Error::Input(format!("unknown invariant kind {other:?}"))),
        }
    }
}

/// Packs the invariant of a graph with `n <= 8` into one word: each
/// neighborhood fits in a byte, bytes are sorted, and supports drop repeats.
/// The packing is injective for fixed `n`, so equal keys mean equal
/// invariants. Closed neighborhoods are never empty and open multisets always
/// have `n` entries, so zero padding cannot be confused with a member.
fn invariant_key(g: &Graph, kind: InvariantKind) -> u64 {
    let n = g.n();
    let mut bytes = [0u8; 8];
    for (v, b) in bytes.iter_mut().enumerate().take(n) {
        let s = match kind {
            InvariantKind::OpenMultiset => g.open_neighborhood(v).expect("in range"),
            _ => g.closed_neighborhood(v).expect("in range"),
        };
        *b = s.bits() as u8;
    }
    let used = &mut bytes[..n];
    used.sort_unstable();
    let mut len = n;
    if kind == InvariantKind::ClosedSupport {
        let mut w = 0;
        for r in 0..n {
            if r == 0 || used[r] != used[w - 1] {
                used[w] = used[r];
                w += 1;
            }
        }
        len = w;
    }
    bytes[len..].fill(0);
    bytes.iter().fold(0u64, |acc, &b| acc << 8 | b as u64)
}

/// Distinct labeled graphs sharing one invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollisionGroup {
    pub kind: InvariantKind,
    /// The shared invariant: sets in canonical order, repeated for multisets.
    pub fingerprint: Vec<Vec<usize>>,
    /// Members in edge-mask order.
    pub members: Vec<Graph>,
}

#[derive(Clone, Copy, Debug)]
pub struct MineOptions {
    /// Permit the hours-scale `n = 8` sweep.
    pub allow_large: bool,
    /// Worker threads; `1` keeps everything on the calling thread.
    pub jobs: usize,
}

impl Default for MineOptions {
    fn default() -> Self {
        MineOptions {
            allow_large: false,
            jobs: 1,
        }
    }
}

/// All collision groups for `kind` among labeled graphs on `n` vertices.
pub fn find_collisions(n: usize, kind: InvariantKind, opts: MineOptions) -> Result<Vec<CollisionGroup>> {
    check_order(n, opts.allow_large)?;
    let total = 1u64 << pair_count(n);
    let keyed = |mask: u64| {
        let g = Graph::from_edge_mask(n, mask).expect("mask within range");
        (invariant_key(&g, kind), mask as u32)
    };
    let mut keys: Vec<(u64, u32)> = if opts.jobs <= 1 {
        let mut v: Vec<_> = (0..total).map(keyed).collect();
        v.sort_unstable();
        v
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::Input(format!("thread pool: {e}")))?;
        pool.install(|| {
            let mut v: Vec<_> = (0..total).into_par_iter().map(keyed).collect();
            v.par_sort_unstable();
            v
        })
    };

    let mut groups = Vec::new();
    let mut start = 0;
    while start < keys.len() {
        let mut end = start + 1;
        while end < keys.len() && keys[end].0 == keys[start].0 {
            end += 1;
        }
        if end - start >= 2 {
            let members: Vec<Graph> = keys[start..end]
                .iter()
                .map(|&(_, m)| Graph::from_edge_mask(n, m as u64).expect("mask within range"))
                .collect();
            let fingerprint = fingerprint_of(&members[0], kind);
            groups.push(CollisionGroup {
                kind,
                fingerprint,
                members,
            });
        }
        start = end;
    }
    keys.clear();
    groups.sort_by_key(|g| g.members[0].edge_mask());
    Ok(groups)
}

fn fingerprint_of(g: &Graph, kind: InvariantKind) -> Vec<Vec<usize>> {
    use crate::families::{neighborhood_multiset, support_of};
    let m = neighborhood_multiset(g, kind != InvariantKind::OpenMultiset);
    match kind {
        InvariantKind::ClosedSupport => support_of(&m).to_lists(),
        _ => m.to_sorted_vec().into_iter().map(|s| s.to_vec()).collect(),
    }
}

/// A bijection `σ` with `N_G[v] = N_H[σ(v)]` for every `v`, choosing for
/// each `v` in turn the least unused compatible target. `None` when the
/// closed-neighborhood multisets differ.
pub fn witness_permutation(g: &Graph, h: &Graph) -> Option<PermutationWitness> {
    let n = g.n();
    if h.n() != n {
        return None;
    }
    let gn = g.closed_neighborhoods();
    let hn = h.closed_neighborhoods();

    fn assign(v: usize, gn: &[crate::VertexSet], hn: &[crate::VertexSet], sigma: &mut Vec<usize>, used: &mut u64) -> bool {
        if v == gn.len() {
            return true;
        }
        for u in 0..hn.len() {
            if *used >> u & 1 == 0 && gn[v] == hn[u] {
                sigma.push(u);
                *used |= 1 << u;
                if assign(v + 1, gn, hn, sigma, used) {
                    return true;
                }
                sigma.pop();
                *used &= !(1 << u);
            }
        }
        false
    }

    let mut sigma = Vec::with_capacity(n);
    assign(0, &gn, &hn, &mut sigma, &mut 0).then(|| PermutationWitness::new(sigma).expect("bijection"))
}

/// Outcome of the structural checks on one collision pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairChecks {
    pub equal_edge_counts: bool,
    pub orbit_cliques: bool,
    pub edge_transit: bool,
    pub induced_c4: bool,
}

impl PairChecks {
    pub fn all(&self) -> bool {
        self.equal_edge_counts && self.orbit_cliques && self.edge_transit && self.induced_c4
    }
}

fn is_clique(g: &Graph, s: crate::VertexSet) -> bool {
    s.iter().all(|u| s.iter().all(|v| u == v || g.has_edge(u, v)))
}

/// Checks a pair sharing `𝒩[·]` under the witness `sigma`.
pub fn check_pair(g: &Graph, h: &Graph, sigma: &PermutationWitness) -> PairChecks {
    let n = g.n();
    let inv = sigma.inverse();
    let orbit_cliques = sigma.orbits().iter().all(|&o| is_clique(g, o) && is_clique(h, o));
    let forward = (0..n).all(|b| {
        let nb = g.closed(b);
        nb.is_subset(h.closed(sigma.apply(b)))
    });
    let backward = (0..n).all(|d| {
        let nd = h.closed(d);
        nd.is_subset(g.closed(inv.apply(d)))
    });
    PairChecks {
        equal_edge_counts: g.edge_count() == h.edge_count(),
        orbit_cliques,
        edge_transit: forward && backward,
        induced_c4: g.contains_induced_c4() && h.contains_induced_c4(),
    }
}

/// Summary of an exhaustive sweep at one order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CollisionReport {
    pub n: usize,
    pub graphs: u64,
    pub multiset_groups: usize,
    pub multiset_pairs: usize,
    pub support_groups: usize,
    pub support_pairs: usize,
    pub violations: usize,
}

/// Sweeps every labeled graph on `n` vertices and checks every
/// closed-multiset collision pair, plus the induced-`C4` property of every
/// closed-support collision pair. Any failed check is an error naming the
/// pair.
pub fn verify_collisions(n: usize, opts: MineOptions) -> Result<CollisionReport> {
    let mut report = CollisionReport {
        n,
        graphs: 1u64 << pair_count(n),
        ..Default::default()
    };
    let name = |g: &Graph| encode_graph6(g);

    let groups = find_collisions(n, InvariantKind::ClosedMultiset, opts)?;
    report.multiset_groups = groups.len();
    for group in &groups {
        for (i, g) in group.members.iter().enumerate() {
            for h in &group.members[i + 1..] {
                report.multiset_pairs += 1;
                let sigma = witness_permutation(g, h).ok_or_else(|| Error::Violation {
                    check: "witness permutation",
                    detail: format!("{} / {}", name(g), name(h)),
                })?;
                let checks = check_pair(g, h, &sigma);
                let failed = [
                    (checks.equal_edge_counts, "equal edge counts"),
                    (checks.orbit_cliques, "orbits induce cliques"),
                    (checks.edge_transit, "edge transit"),
                    (checks.induced_c4, "both contain an induced C4"),
                ]
                .into_iter()
                .find(|(ok, _)| !ok);
                if let Some((_, check)) = failed {
                    return Err(Error::Violation {
                        check,
                        detail: format!("{} / {} under {}", name(g), name(h), sigma.cycle_notation()),
                    });
                }
            }
        }
    }

    let groups = find_collisions(n, InvariantKind::ClosedSupport, opts)?;
    report.support_groups = groups.len();
    for group in &groups {
        let k = group.members.len();
        report.support_pairs += k * (k - 1) / 2;
        if let Some(g) = group.members.iter().find(|g| !g.contains_induced_c4()) {
            return Err(Error::Violation {
                check: "support collisions contain an induced C4",
                detail: name(g),
            });
        }
    }
    Ok(report)
}

/// One JSON line of `mine` output.
#[derive(Clone, Debug, Serialize)]
pub struct GroupRecord {
    pub kind: InvariantKind,
    pub fingerprint: Vec<Vec<usize>>,
    pub members: Vec<String>,
    /// Witness from the first member to each later one, closed multisets only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<String>>,
    /// Checks on each (first, later) pair, closed multisets only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<PairChecks>>,
    /// Whether every member contains an induced C4.
    pub all_contain_induced_c4: bool,
}

impl GroupRecord {
    pub fn new(group: &CollisionGroup) -> Self {
        let members = group.members.iter().map(encode_graph6).collect();
        let (witnesses, checks) = if group.kind == InvariantKind::ClosedMultiset {
            let first = &group.members[0];
            let pairs: Vec<(String, PairChecks)> = group.members[1..]
                .iter()
                .map(|h| {
                    let sigma = witness_permutation(first, h).expect("members share the closed multiset");
                    (sigma.cycle_notation(), check_pair(first, h, &sigma))
                })
                .collect();
            let (w, c) = pairs.into_iter().unzip();
            (Some(w), Some(c))
        } else {
            (None, None)
        };
        GroupRecord {
            kind: group.kind,
            fingerprint: group.fingerprint.clone(),
            members,
            witnesses,
            checks,
            all_contain_induced_c4: group.members.iter().all(Graph::contains_induced_c4),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prism() -> Graph {
        Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_labeled_graphs(1, false).unwrap().count(), 1);
        assert_eq!(enumerate_labeled_graphs(3, false).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(6, false).unwrap().count(), 32768);
        assert!(enumerate_labeled_graphs(8, false).is_err());
        assert!(enumerate_labeled_graphs(9, true).is_err());
    }

    #[test]
    fn invariant_key_is_exact_on_small_orders() {
        for n in 1..=4 {
            let graphs: Vec<Graph> = enumerate_labeled_graphs(n, false).unwrap().collect();
            for kind in [InvariantKind::ClosedMultiset, InvariantKind::ClosedSupport, InvariantKind::OpenMultiset] {
                for g in &graphs {
                    for h in &graphs {
                        let same = fingerprint_of(g, kind) == fingerprint_of(h, kind);
                        assert_eq!(invariant_key(g, kind) == invariant_key(h, kind), same);
                    }
                }
            }
        }
    }

    #[test]
    fn c4_support_group() {
        let groups = find_collisions(4, InvariantKind::ClosedSupport, MineOptions::default()).unwrap();
        let c4 = Graph::cycle(4).unwrap();
        let group = groups.iter().find(|g| g.members.contains(&c4)).unwrap();
        assert_eq!(group.members.len(), 3);
        assert!(group.members.iter().all(|g| g.edge_count() == 4 && g.contains_induced_c4()));
    }

    #[test]
    fn k33_prism_group() {
        let groups = find_collisions(6, InvariantKind::ClosedMultiset, MineOptions { jobs: 2, ..Default::default() })
            .unwrap();
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        let group = groups.iter().find(|g| g.members.contains(&k33)).unwrap();
        assert!(group.members.contains(&prism()));
    }

    #[test]
    fn parallel_matches_sequential() {
        let a = find_collisions(5, InvariantKind::ClosedSupport, MineOptions::default()).unwrap();
        let b = find_collisions(5, InvariantKind::ClosedSupport, MineOptions { jobs: 3, ..Default::default() }).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn witness_examples() {
        let g = Graph::cycle(5).unwrap();
        let w = witness_permutation(&g, &g).unwrap();
        assert_eq!(w.sigma(), &[0, 1, 2, 3, 4]);
        assert!(w.orbits().iter().all(|o| o.len() == 1));

        let w = witness_permutation(&Graph::complete_bipartite(3, 3).unwrap(), &prism()).unwrap();
        assert_eq!(w.cycle_notation(), "(0 3)(1 4)(2 5)");

        assert!(witness_permutation(&Graph::path(4).unwrap(), &Graph::cycle(4).unwrap()).is_none());
    }

    #[test]
    fn pair_checks_detect_bad_witness() {
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        let good = witness_permutation(&k33, &prism()).unwrap();
        assert!(check_pair(&k33, &prism(), &good).all());
        let bad = PermutationWitness::identity(6);
        assert!(!check_pair(&k33, &prism(), &bad).edge_transit);
    }

    #[test]
    fn collision_checks_small_orders() {
        for n in 1..=5 {
            let r = verify_collisions(n, MineOptions::default()).unwrap();
            assert_eq!(r.violations, 0);
        }
        let r = verify_collisions(4, MineOptions::default()).unwrap();
        assert!(r.support_groups >= 1);
    }
}
