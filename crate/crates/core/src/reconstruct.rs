//! Reconstruction of labeled graphs from `𝒩[G]`, from `supp(𝒩[G])` and from
//! the digital convexity `𝒟(G)`.
//!
//! Every entry point re-verifies each graph it returns against the input, so
//! a result never contains a graph that does not realize the query. Inputs
//! that admit no realization produce [`Verdict::Infeasible`] rather than an
//! error.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use crate::convexity::{check_convexity_axioms, complement_family, digital_convexity, CONVEXITY_CEILING};
use crate::families::{
    base_vertices, canonical_cover, closed_support, cn_equal, neighborhood_multiset, union_basis, union_closure,
    NeighborhoodMultiset, SetFamily,
};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// How many realizations a search looks for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Report the first realization; search only far enough to decide uniqueness.
    First,
    /// Report up to `limit` realizations.
    All,
    /// Count realizations up to `limit`, keeping only the first graph.
    Count,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub mode: SearchMode,
    pub limit: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            mode: SearchMode::First,
            limit: 1000,
        }
    }
}

impl SearchOptions {
    pub fn first() -> Self {
        Self::default()
    }

    pub fn all(limit: usize) -> Self {
        SearchOptions {
            mode: SearchMode::All,
            limit: limit.max(1),
        }
    }

    pub fn count(limit: usize) -> Self {
        SearchOptions {
            mode: SearchMode::Count,
            limit: limit.max(1),
        }
    }

    /// Solutions to find before stopping: one past what must be reported,
    /// and never fewer than two so that uniqueness is always decided.
    fn stop_after(&self) -> usize {
        match self.mode {
            SearchMode::First => 2,
            SearchMode::All | SearchMode::Count => self.limit.saturating_add(1).max(2),
        }
    }

    fn keep(&self) -> usize {
        match self.mode {
            SearchMode::First | SearchMode::Count => 1,
            SearchMode::All => self.limit,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Unique(Graph),
    /// At least two realizations. `truncated` is set when more exist than
    /// were reported.
    Ambiguous { graphs: Vec<Graph>, truncated: bool },
    Infeasible,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Backtracking nodes visited across all searches.
    pub nodes: u64,
    /// Realizations found (capped by the search mode).
    pub solutions: usize,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructionResult {
    pub verdict: Verdict,
    pub stats: SearchStats,
    /// Why the input was rejected, when it was.
    pub note: Option<String>,
}

impl ReconstructionResult {
    pub fn graphs(&self) -> &[Graph] {
        match &self.verdict {
            Verdict::Unique(g) => std::slice::from_ref(g),
            Verdict::Ambiguous { graphs, .. } => graphs,
            Verdict::Infeasible => &[],
        }
    }

    pub fn unique(&self) -> Option<&Graph> {
        match &self.verdict {
            Verdict::Unique(g) => Some(g),
            _ => None,
        }
    }

    pub fn is_infeasible(&self) -> bool {
        self.verdict == Verdict::Infeasible
    }

    fn infeasible(note: impl Into<String>, stats: SearchStats) -> Self {
        ReconstructionResult {
            verdict: Verdict::Infeasible,
            stats,
            note: Some(note.into()),
        }
    }
}

/// Realizations collected by one search.
#[derive(Debug, Default)]
struct Found {
    graphs: Vec<Graph>,
    /// Total realizations seen, including unkept ones.
    count: usize,
    /// The search ran to exhaustion.
    complete: bool,
    nodes: u64,
}

impl Found {
    fn into_result(self, opts: &SearchOptions, started: Instant) -> ReconstructionResult {
        let stats = SearchStats {
            nodes: self.nodes,
            solutions: self.count,
            elapsed: started.elapsed(),
        };
        let verdict = match (self.count, self.complete) {
            (0, true) => return ReconstructionResult::infeasible("no graph realizes the input", stats),
            (0, false) => {
                return ReconstructionResult::infeasible("search truncated before any realization was verified", stats)
            }
            (1, true) => Verdict::Unique(self.graphs.into_iter().next().expect("one graph kept")),
            _ => {
                let mut graphs = self.graphs;
                graphs.truncate(opts.keep());
                let truncated = !self.complete || self.count > graphs.len();
                Verdict::Ambiguous { graphs, truncated }
            }
        };
        ReconstructionResult {
            verdict,
            stats,
            note: None,
        }
    }
}

// ---------------------------------------------------------------------------
// Multiset realization by backtracking

struct Realizer {
    n: usize,
    sets: Vec<VertexSet>,
    remaining: Vec<usize>,
    /// Indices into `sets` that contain the vertex.
    candidates: Vec<Vec<usize>>,
    order: Vec<usize>,
    assigned: Vec<Option<usize>>,
    assigned_mask: u64,
    /// For each vertex `w`, the assigned vertices `u` with `w ∈ M_u`.
    incoming: Vec<u64>,
    stop_after: usize,
    keep: usize,
    found: Found,
}

impl Realizer {
    fn consistent(&self, v: usize, set: VertexSet) -> bool {
        set.bits() & self.assigned_mask & !(1 << v) == self.incoming[v]
    }

    fn viable(&self, w: usize) -> bool {
        self.candidates[w]
            .iter()
            .any(|&i| self.remaining[i] > 0 && self.consistent(w, self.sets[i]))
    }

    fn search(&mut self, depth: usize) -> bool {
        self.found.nodes += 1;
        if depth == self.n {
            let closed: Vec<VertexSet> = self.assigned.iter().map(|a| self.sets[a.expect("all assigned")]).collect();
            let g = Graph::from_closed_neighborhoods_unchecked(&closed);
            self.found.count += 1;
            if self.found.graphs.len() < self.keep {
                self.found.graphs.push(g);
            }
            return self.found.count >= self.stop_after;
        }
        let v = self.order[depth];
        for ci in 0..self.candidates[v].len() {
            let i = self.candidates[v][ci];
            if self.remaining[i] == 0 || !self.consistent(v, self.sets[i]) {
                continue;
            }
            let set = self.sets[i];
            self.remaining[i] -= 1;
            self.assigned[v] = Some(i);
            self.assigned_mask |= 1 << v;
            for w in set {
                if w != v {
                    self.incoming[w] |= 1 << v;
                }
            }
            let ok = self.order[depth + 1..].iter().all(|&w| self.viable(w));
            if ok && self.search(depth + 1) {
                return true;
            }
            for w in set {
                if w != v {
                    self.incoming[w] &= !(1 << v);
                }
            }
            self.assigned_mask &= !(1 << v);
            self.assigned[v] = None;
            self.remaining[i] += 1;
        }
        false
    }
}

/// Kuhn-style matching of vertices onto multiset slots.
fn has_perfect_assignment(candidates: &[Vec<usize>], capacity: &[usize]) -> bool {
    fn augment(
        v: usize,
        candidates: &[Vec<usize>],
        capacity: &[usize],
        holders: &mut [Vec<usize>],
        visited: &mut [bool],
    ) -> bool {
        for &i in &candidates[v] {
            if visited[i] {
                continue;
            }
            visited[i] = true;
            if holders[i].len() < capacity[i] {
                holders[i].push(v);
                return true;
            }
            for k in 0..holders[i].len() {
                let u = holders[i][k];
                if augment(u, candidates, capacity, holders, visited) {
                    holders[i][k] = v;
                    return true;
                }
            }
        }
        false
    }

    let mut holders = vec![Vec::new(); capacity.len()];
    for v in 0..candidates.len() {
        let mut visited = vec![false; capacity.len()];
        if !augment(v, candidates, capacity, &mut holders, &mut visited) {
            return false;
        }
    }
    true
}

fn realize_multiset(m: &NeighborhoodMultiset, opts: &SearchOptions) -> Result<Found, String> {
    let n = m.universe();
    if m.total() != n {
        return Err(format!("total multiplicity {} differs from the universe size {n}", m.total()));
    }
    let (sets, remaining): (Vec<VertexSet>, Vec<usize>) = m.entries().unzip();
    let degree_sum: usize = sets.iter().zip(&remaining).map(|(s, &k)| (s.len().saturating_sub(1)) * k).sum();
    if degree_sum % 2 == 1 {
        return Err("degree sum is odd".into());
    }
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..sets.len()).filter(|&i| sets[i].contains(v)).collect())
        .collect();
    if let Some(v) = (0..n).find(|&v| candidates[v].is_empty()) {
        return Err(format!("no member contains vertex {v}"));
    }
    if !has_perfect_assignment(&candidates, &remaining) {
        return Err("members cannot be matched to vertices containing them".into());
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (candidates[v].len(), v));

    let mut r = Realizer {
        n,
        sets,
        remaining,
        candidates,
        order,
        assigned: vec![None; n],
        assigned_mask: 0,
        incoming: vec![0; n],
        stop_after: opts.stop_after(),
        keep: opts.stop_after(),
        found: Found::default(),
    };
    let stopped = r.search(0);
    r.found.complete = !stopped;
    Ok(r.found)
}

/// Labeled graphs `H` with `𝒩[H] = m`.
pub fn from_multiset(m: &NeighborhoodMultiset, opts: SearchOptions) -> ReconstructionResult {
    let started = Instant::now();
    let mut found = match realize_multiset(m, &opts) {
        Ok(f) => f,
        Err(note) => return ReconstructionResult::infeasible(note, SearchStats::default()),
    };
    let before = found.graphs.len();
    found.graphs.retain(|g| neighborhood_multiset(g, true) == *m);
    debug_assert_eq!(before, found.graphs.len(), "realizer produced a non-realization");
    found.into_result(&opts, started)
}

// ---------------------------------------------------------------------------
// Support pipeline

/// A partition of the universe into blocks of vertices with equal closed
/// neighborhoods.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceClasses {
    universe: usize,
    classes: Vec<VertexSet>,
    class_of: Vec<usize>,
}

impl EquivalenceClasses {
    /// Blocks ordered by their least member.
    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn representative(&self, class: usize) -> usize {
        self.classes[class].first().expect("blocks are nonempty")
    }

    pub fn representatives(&self) -> VertexSet {
        VertexSet::from_vertices(self.universe, (0..self.len()).map(|c| self.representative(c)))
            .expect("representatives lie in the universe")
    }
}

/// Groups vertices `u ~ v` with `N[u] = N[v]`, as decided by `gen`.
pub fn equivalence_classes(gen: &SetFamily, universe: usize) -> EquivalenceClasses {
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut class_of = vec![usize::MAX; universe];
    for v in 0..universe {
        let vs = VertexSet::singleton(universe, v);
        let hit = classes
            .iter()
            .position(|c| cn_equal(VertexSet::singleton(universe, c.first().unwrap()), vs, gen));
        match hit {
            Some(i) => {
                classes[i].insert(v);
                class_of[v] = i;
            }
            None => {
                class_of[v] = classes.len();
                classes.push(vs);
            }
        }
    }
    EquivalenceClasses {
        universe,
        classes,
        class_of,
    }
}

/// A member of the family that cuts through an equivalence class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitBlock {
    pub member: VertexSet,
    pub block: VertexSet,
}

/// Maps every member `A` to `{i : V_i ⊆ A}` over the quotient universe.
pub fn quotient_family(gen: &SetFamily, classes: &EquivalenceClasses) -> Result<SetFamily, SplitBlock> {
    let m = classes.len();
    let mut members = Vec::with_capacity(gen.len());
    for a in gen.iter() {
        let mut bits = 0u64;
        for (i, &block) in classes.classes().iter().enumerate() {
            if block.is_subset(a) {
                bits |= 1 << i;
            } else if block.intersects(a) {
                return Err(SplitBlock { member: a, block });
            }
        }
        members.push(VertexSet::from_bits_unchecked(m, bits));
    }
    Ok(SetFamily::from_members_unchecked(m, members))
}

/// Replaces every quotient vertex by a clique on its block; two vertices in
/// different blocks are adjacent iff their blocks are adjacent in `quotient`.
pub fn blow_up_classes(quotient: &Graph, classes: &EquivalenceClasses) -> Graph {
    let n = classes.universe();
    let closed: Vec<VertexSet> = (0..n)
        .map(|v| {
            let c = classes.class_of(v);
            let nbhd = quotient.closed_neighborhood(c).expect("class index in range");
            nbhd.iter()
                .fold(VertexSet::empty(n), |acc, j| acc.union(classes.classes()[j]))
        })
        .collect();
    Graph::from_closed_neighborhoods_unchecked(&closed)
}

/// Labeled graphs `H` with `supp(𝒩[H]) = f`.
pub fn from_support(f: &SetFamily, opts: SearchOptions) -> ReconstructionResult {
    let started = Instant::now();
    match support_search(f, &opts) {
        Ok(found) => found.into_result(&opts, started),
        Err(note) => ReconstructionResult::infeasible(note, SearchStats::default()),
    }
}

fn support_search(f: &SetFamily, opts: &SearchOptions) -> Result<Found, String> {
    let n = f.universe();
    if n == 0 {
        return Err("empty universe".into());
    }
    let classes = equivalence_classes(f, n);
    let quotient = quotient_family(f, &classes)
        .map_err(|s| format!("member {} splits the class {}", s.member, s.block))?;
    if quotient.len() != classes.len() {
        return Err(format!(
            "{} distinct quotient members for {} classes",
            quotient.len(),
            classes.len()
        ));
    }
    let mut found = realize_multiset(&NeighborhoodMultiset::from_family(&quotient), opts)?;
    found.graphs = found
        .graphs
        .iter()
        .map(|q| blow_up_classes(q, &classes))
        .filter(|g| closed_support(g) == *f)
        .collect();
    if found.complete {
        found.count = found.graphs.len();
    }
    Ok(found)
}

// ---------------------------------------------------------------------------
// Digital convexity

/// Enumeration cap for intermediate levels of the convexity recursion.
const INNER_LIMIT: usize = 4096;

/// Labeled graphs `H` with `𝒟(H) = d`.
pub fn from_digital_convexity(d: &SetFamily, opts: SearchOptions) -> ReconstructionResult {
    let started = Instant::now();
    if let Err(v) = check_convexity_axioms(d) {
        return ReconstructionResult::infeasible(format!("not a convexity: {v}"), SearchStats::default());
    }
    let unions = complement_family(d);
    let inner = SearchOptions::all(opts.limit.max(INNER_LIMIT));
    let mut found = match convexity_search(&unions, &inner) {
        Ok(f) => f,
        Err(note) => return ReconstructionResult::infeasible(note, SearchStats::default()),
    };
    found.graphs.retain(|g| convexity_matches(g, d));
    if found.complete {
        found.count = found.graphs.len();
    }
    if found.count == 0 && found.complete {
        return ReconstructionResult::infeasible(
            "no candidate reproduces the digital convexity",
            SearchStats {
                nodes: found.nodes,
                solutions: 0,
                elapsed: started.elapsed(),
            },
        );
    }
    found.into_result(&opts, started)
}

fn convexity_matches(g: &Graph, d: &SetFamily) -> bool {
    if g.n() <= CONVEXITY_CEILING {
        digital_convexity(g).map(|dg| dg == *d).unwrap_or(false)
    } else {
        union_closure(&closed_support(g))
            .map(|u| complement_family(&u) == *d)
            .unwrap_or(false)
    }
}

/// Graphs `G` with `U(𝒩[G]) = unions`.
fn convexity_search(unions: &SetFamily, opts: &SearchOptions) -> Result<Found, String> {
    let n = unions.universe();
    if n == 1 {
        let g = Graph::new(1).expect("one vertex");
        let ok = union_closure(&closed_support(&g)).map(|u| u == *unions).unwrap_or(false);
        return Ok(Found {
            count: ok as usize,
            graphs: if ok { vec![g] } else { vec![] },
            complete: true,
            nodes: 1,
        });
    }
    let base = base_vertices(unions, n);
    if base.is_empty() {
        return Err("no base vertices".into());
    }
    if base.len() == n {
        // all closed neighborhoods are distinct and union-irreducible
        return support_search(&union_basis(unions), opts);
    }

    // G[S] has U(𝒩[G[S]]) = {M ∩ S : M ∈ U}: N_{G[S]}[A] = N[A] ∩ S for
    // A ⊆ S, and every member of U is N[A] for some A ⊆ S because each
    // removed vertex's neighborhood is a union of base neighborhoods.
    let restricted = unions.restrict(base);
    let sub = convexity_search(&restricted, opts)?;
    let map = base.to_vec();

    // N[v] = N[A_v] with A_v the largest subset of S below N[v]; then
    // u ~ v iff some a ∈ A_v, b ∈ A_u have a ∈ N_{G[S]}[b].
    let covers: Vec<VertexSet> = (0..n)
        .map(|v| {
            if base.contains(v) {
                VertexSet::singleton(n, v)
            } else {
                canonical_cover(v, base, unions)
            }
        })
        .collect();

    let mut seen = HashSet::new();
    let mut graphs = Vec::new();
    for sub_graph in &sub.graphs {
        let lift = |s: VertexSet| {
            s.iter()
                .fold(VertexSet::empty(n), |mut acc, i| {
                    acc.insert(map[i]);
                    acc
                })
        };
        let sub_closed: Vec<VertexSet> = (0..map.len())
            .map(|i| lift(sub_graph.closed_neighborhood(i).expect("in range")))
            .collect();
        let position = |v: usize| map.binary_search(&v).expect("base vertex");
        let reach: Vec<VertexSet> = covers
            .iter()
            .map(|c| {
                c.iter()
                    .fold(VertexSet::empty(n), |acc, b| acc.union(sub_closed[position(b)]))
            })
            .collect();
        let mut g = Graph::new(n).expect("universe within bounds");
        for u in 0..n {
            for v in u + 1..n {
                if reach[u].intersects(covers[v]) {
                    g.add_edge(u, v).expect("in range");
                }
            }
        }
        let ok = union_closure(&closed_support(&g)).map(|u| u == *unions).unwrap_or(false);
        if ok && seen.insert(g.clone()) {
            graphs.push(g);
        }
    }
    Ok(Found {
        count: graphs.len(),
        graphs,
        complete: sub.complete,
        nodes: sub.nodes,
    })
}

// ---------------------------------------------------------------------------

/// An invariant a graph can be checked against.
#[derive(Clone, Copy, Debug)]
pub enum Target<'a> {
    Multiset(&'a NeighborhoodMultiset),
    Support(&'a SetFamily),
    Convexity(&'a SetFamily),
}

/// Recomputes the tagged invariant of `g` and compares it exactly.
pub fn realizes(g: &Graph, target: Target<'_>) -> bool {
    match target {
        Target::Multiset(m) => m.universe() == g.n() && neighborhood_multiset(g, true) == *m,
        Target::Support(f) => f.universe() == g.n() && closed_support(g) == *f,
        Target::Convexity(d) => d.universe() == g.n() && convexity_matches(g, d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: usize, lists: &[&[usize]]) -> SetFamily {
        SetFamily::from_lists(n, lists.iter().map(|l| l.iter().copied())).unwrap()
    }

    fn example_graph() -> Graph {
        let edges = [
            (1, 5), (1, 2), (1, 6), (1, 3), (1, 4), (1, 7), (1, 8), (2, 6),
            (2, 3), (3, 6), (3, 4), (3, 7), (3, 8), (4, 7), (4, 8), (7, 8),
        ];
        Graph::from_edges(8, edges.iter().map(|&(u, v)| (u - 1, v - 1))).unwrap()
    }

    fn example_support() -> SetFamily {
        fam(
            8,
            &[&[0, 1, 2, 3, 4, 5, 6, 7], &[0, 1, 2, 5], &[0, 1, 2, 3, 5, 6, 7], &[0, 2, 3, 6, 7], &[0, 4]],
        )
    }

    /// Every labeled graph on `n` vertices, by edge mask.
    fn all_graphs(n: usize) -> Vec<Graph> {
        let pairs = n * (n - 1) / 2;
        (0..1u64 << pairs).map(|m| Graph::from_edge_mask(n, m).unwrap()).collect()
    }

    #[test]
    fn equivalence_class_examples() {
        let classes = equivalence_classes(&example_support(), 8);
        let blocks: Vec<Vec<usize>> = classes.classes().iter().map(|c| c.to_vec()).collect();
        assert_eq!(blocks, vec![vec![0], vec![1, 5], vec![2], vec![3, 6, 7], vec![4]]);
        assert_eq!(classes.representative(3), 3);

        let k2 = closed_support(&Graph::complete(2).unwrap());
        assert_eq!(equivalence_classes(&k2, 2).len(), 1);

        let edgeless = closed_support(&Graph::new(4).unwrap());
        assert_eq!(equivalence_classes(&edgeless, 4).len(), 4);
    }

    #[test]
    fn quotient_examples() {
        let supp = example_support();
        let classes = equivalence_classes(&supp, 8);
        let q = quotient_family(&supp, &classes).unwrap();
        assert_eq!(q, fam(5, &[&[0, 1, 2, 3, 4], &[0, 1, 2], &[0, 1, 2, 3], &[0, 2, 3], &[0, 4]]));

        let k3 = closed_support(&Graph::complete(3).unwrap());
        let classes = equivalence_classes(&k3, 3);
        assert_eq!(quotient_family(&k3, &classes).unwrap(), fam(1, &[&[0]]));

        // a member splitting a class: classes computed from one family,
        // applied to another
        let classes = equivalence_classes(&fam(2, &[&[0, 1]]), 2);
        let err = quotient_family(&fam(2, &[&[0], &[0, 1]]), &classes).unwrap_err();
        assert_eq!(err.member.to_vec(), vec![0]);
    }

    #[test]
    fn blow_up_classes_agrees_with_iterated_blow_up() {
        let supp = example_support();
        let classes = equivalence_classes(&supp, 8);
        let quotient = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3)]).unwrap();
        let direct = blow_up_classes(&quotient, &classes);
        assert_eq!(direct, example_graph());

        let mut g = quotient.with_labels(["r0", "r1", "r2", "r3", "r4"]).unwrap();
        for (i, block) in classes.classes().iter().enumerate() {
            let v = g.vertex_by_label(&format!("r{i}")).unwrap();
            let labels: Vec<String> = block.iter().map(|x| x.to_string()).collect();
            g = g.blow_up(v, &labels).unwrap();
        }
        let order: Vec<String> = (0..8).map(|x| x.to_string()).collect();
        assert_eq!(g.reorder_by_labels(&order).unwrap(), direct);
    }

    #[test]
    fn multiset_p3_is_unique() {
        let p3 = Graph::path(3).unwrap();
        let r = from_multiset(&neighborhood_multiset(&p3, true), SearchOptions::first());
        assert_eq!(r.unique(), Some(&p3));
        // brute force: only P3 itself has this multiset
        let m = neighborhood_multiset(&p3, true);
        let hits: Vec<_> = all_graphs(3).into_iter().filter(|g| neighborhood_multiset(g, true) == m).collect();
        assert_eq!(hits, vec![p3]);
    }

    #[test]
    fn multiset_c4_has_three_realizations() {
        let c4 = Graph::cycle(4).unwrap();
        let m = neighborhood_multiset(&c4, true);
        let r = from_multiset(&m, SearchOptions::all(10));
        let brute: HashSet<Graph> = all_graphs(4)
            .into_iter()
            .filter(|g| neighborhood_multiset(g, true) == m)
            .collect();
        assert_eq!(brute.len(), 3);
        match &r.verdict {
            Verdict::Ambiguous { graphs, truncated } => {
                assert!(!truncated);
                assert_eq!(graphs.iter().cloned().collect::<HashSet<_>>(), brute);
            }
            v => panic!("expected ambiguity, got {v:?}"),
        }
        assert_eq!(r.stats.solutions, 3);

        let first = from_multiset(&m, SearchOptions::first());
        assert!(matches!(first.verdict, Verdict::Ambiguous { ref graphs, truncated: true } if graphs.len() == 1));

        let counted = from_multiset(&m, SearchOptions::count(100));
        assert_eq!(counted.stats.solutions, 3);

        let capped = from_multiset(&m, SearchOptions::all(2));
        assert!(matches!(capped.verdict, Verdict::Ambiguous { ref graphs, truncated: true } if graphs.len() == 2));
    }

    #[test]
    fn multiset_k33_includes_prism() {
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        let prism =
            Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
        let r = from_multiset(&neighborhood_multiset(&k33, true), SearchOptions::all(100));
        let graphs = r.graphs();
        assert!(graphs.contains(&k33));
        assert!(graphs.contains(&prism));
    }

    #[test]
    fn multiset_infeasible_inputs() {
        let bad_total = NeighborhoodMultiset::from_lists(3, [vec![0, 1, 2]]).unwrap();
        assert!(from_multiset(&bad_total, SearchOptions::first()).is_infeasible());
        let odd = NeighborhoodMultiset::from_lists(2, [vec![0, 1], vec![1]]).unwrap();
        assert!(from_multiset(&odd, SearchOptions::first()).is_infeasible());
        let uncovered = NeighborhoodMultiset::from_lists(2, [vec![0], vec![0]]).unwrap();
        assert!(from_multiset(&uncovered, SearchOptions::first()).is_infeasible());
        // symmetric-looking but inconsistent: 0 claims 1, 1 denies 0
        let asym = NeighborhoodMultiset::from_lists(3, [vec![0, 1], vec![1, 2], vec![1, 2]]).unwrap();
        let r = from_multiset(&asym, SearchOptions::all(10));
        for g in r.graphs() {
            assert!(realizes(g, Target::Multiset(&asym)));
        }
    }

    #[test]
    fn support_examples() {
        let r = from_support(&example_support(), SearchOptions::first());
        assert_eq!(r.unique(), Some(&example_graph()));

        let fig6 = fam(5, &[&[0, 1, 3, 4], &[0, 1, 2], &[1, 2, 3], &[0, 2, 3], &[0, 4]]);
        let expected = Graph::from_edges(5, [(0, 1), (0, 3), (0, 4), (1, 2), (2, 3)]).unwrap();
        let r = from_support(&fig6, SearchOptions::all(10));
        assert_eq!(r.unique(), Some(&expected));

        assert!(from_support(&fam(2, &[&[0], &[0, 1]]), SearchOptions::first()).is_infeasible());
        assert_eq!(
            from_support(&fam(2, &[&[0, 1]]), SearchOptions::first()).unique(),
            Some(&Graph::complete(2).unwrap())
        );
        assert!(from_support(&SetFamily::empty(3), SearchOptions::first()).is_infeasible());
    }

    #[test]
    fn support_c4_has_three_realizations() {
        let supp = closed_support(&Graph::cycle(4).unwrap());
        let r = from_support(&supp, SearchOptions::all(10));
        assert!(matches!(r.verdict, Verdict::Ambiguous { ref graphs, truncated: false } if graphs.len() == 3));
    }

    #[test]
    fn convexity_examples() {
        for n in 1..6 {
            let d = SetFamily::new(n, [VertexSet::empty(n), VertexSet::full(n)]).unwrap();
            let r = from_digital_convexity(&d, SearchOptions::first());
            assert_eq!(r.unique(), Some(&Graph::complete(n).unwrap()), "n = {n}");
        }

        let p3 = Graph::path(3).unwrap();
        let d = fam(3, &[&[], &[0], &[2], &[0, 1, 2]]);
        assert_eq!(from_digital_convexity(&d, SearchOptions::first()).unique(), Some(&p3));

        let g = example_graph();
        let d = digital_convexity(&g).unwrap();
        assert_eq!(from_digital_convexity(&d, SearchOptions::first()).unique(), Some(&g));

        let not_convexity = fam(3, &[&[], &[0, 1], &[1, 2], &[0, 1, 2]]);
        let r = from_digital_convexity(&not_convexity, SearchOptions::first());
        assert!(r.is_infeasible());
        assert!(r.note.unwrap().contains("not a convexity"));
    }

    #[test]
    fn convexity_of_c4_is_ambiguous() {
        let d = digital_convexity(&Graph::cycle(4).unwrap()).unwrap();
        let r = from_digital_convexity(&d, SearchOptions::all(10));
        assert!(matches!(r.verdict, Verdict::Ambiguous { ref graphs, truncated: false } if graphs.len() == 3));
    }

    #[test]
    fn realizes_examples() {
        assert!(realizes(&example_graph(), Target::Support(&example_support())));
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        let prism =
            Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert!(realizes(&prism, Target::Multiset(&neighborhood_multiset(&k33, true))));
        let d_c3 = digital_convexity(&Graph::complete(3).unwrap()).unwrap();
        assert!(!realizes(&Graph::path(3).unwrap(), Target::Convexity(&d_c3)));
        assert!(!realizes(&Graph::path(4).unwrap(), Target::Convexity(&d_c3)));
    }
}
