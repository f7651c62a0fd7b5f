//! Labeled simple graphs with bit-vector adjacency.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_UNIVERSE};

/// Largest order accepted by the brute-force isomorphism test.
pub const ISOMORPHISM_CEILING: usize = 10;

/// A simple undirected graph on vertex ids `0..n`.
///
/// Equality and hashing look at the adjacency only; labels are carried along
/// for display and for translating ids back to external names.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        for a in &self.adj {
            a.bits().hash(state);
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", self.label(u), self.label(v))?;
        }
        write!(f, "])")
    }
}

/// Position of the pair `(u, v)`, `u < v`, in column-major upper-triangle order.
#[inline]
pub fn edge_index(u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    v * (v - 1) / 2 + u
}

/// Number of vertex pairs on `n` vertices.
#[inline]
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::empty(n); n],
            labels: None,
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds the graph whose edges are the set bits of `mask`, indexed by
    /// [`edge_index`].
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Self> {
        let pairs = pair_count(n);
        if pairs > 64 {
            return Err(Error::Unsupported(format!("edge masks need n <= 11, got {n}")));
        }
        if pairs < 64 && mask >> pairs != 0 {
            return Err(Error::Input(format!("edge mask has bits beyond {pairs} pairs")));
        }
        let mut g = Graph::new(n)?;
        for v in 1..n {
            for u in 0..v {
                if mask >> edge_index(u, v) & 1 == 1 {
                    g.adj[u].insert(v);
                    g.adj[v].insert(u);
                }
            }
        }
        Ok(g)
    }

    /// Builds a graph from per-vertex closed neighborhoods whose membership
    /// relation is already known to be symmetric.
    pub(crate) fn from_closed_neighborhoods_unchecked(sets: &[VertexSet]) -> Graph {
        let n = sets.len();
        let adj = sets
            .iter()
            .enumerate()
            .map(|(v, s)| {
                let mut open = *s;
                open.remove(v);
                open
            })
            .collect();
        let g = Graph { n, adj, labels: None };
        debug_assert!(g.is_well_formed());
        g
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for v in 0..n {
            let mut s = VertexSet::full(n);
            s.remove(v);
            g.adj[v] = s;
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Input(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Input(format!("self-loop at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u].remove(v);
        self.adj[v].remove(u);
        Ok(())
    }

    /// Attaches external names to the vertex ids.
    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.n {
            return Err(Error::Input(format!(
                "expected {} labels, got {}",
                self.n,
                labels.len()
            )));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// External name of `v`, or its decimal id when the graph is unlabeled.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    fn label_list(&self) -> Vec<String> {
        (0..self.n).map(|v| self.label(v)).collect()
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        (0..self.n).find(|&v| self.label(v) == label)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        if s.universe() != self.n {
            return Err(Error::UniverseMismatch {
                expected: self.n,
                found: s.universe(),
            });
        }
        Ok(())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in ascending order of `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// The edge set as a bit mask, see [`Graph::from_edge_mask`].
    pub fn edge_mask(&self) -> Option<u64> {
        if pair_count(self.n) > 64 {
            return None;
        }
        Some(self.edges().fold(0u64, |m, (u, v)| m | 1 << edge_index(u, v)))
    }

    pub fn open_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v])
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.closed(v))
    }

    #[inline]
    pub(crate) fn closed(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    #[inline]
    pub(crate) fn open(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// `N[A]`, the union of the closed neighborhoods of the members of `a`.
    pub fn closed_neighborhood_of_set(&self, a: VertexSet) -> Result<VertexSet> {
        self.check_set(a)?;
        Ok(self.closed_of_set(a))
    }

    #[inline]
    pub(crate) fn closed_of_set(&self, a: VertexSet) -> VertexSet {
        a.iter().fold(a, |acc, v| acc.union(self.adj[v]))
    }

    /// All closed neighborhoods, indexed by vertex.
    pub fn closed_neighborhoods(&self) -> Vec<VertexSet> {
        (0..self.n).map(|v| self.closed(v)).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == pair_count(self.n)
    }

    /// Four vertices `[a, b, c, d]` inducing the chordless cycle `a-b-c-d-a`.
    pub fn find_induced_c4(&self) -> Option<[usize; 4]> {
        for a in 0..self.n {
            for c in a + 1..self.n {
                if self.adj[a].contains(c) {
                    continue;
                }
                let common = self.adj[a].intersection(self.adj[c]);
                for b in common {
                    let rest = common.difference(self.adj[b]);
                    if let Some(d) = rest.iter().find(|&d| d > b) {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
        None
    }

    pub fn contains_induced_c4(&self) -> bool {
        self.find_induced_c4().is_some()
    }

    /// Length of a shortest cycle, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[u] + 1 >= b {
                        break;
                    }
                }
                for w in self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Replaces `v` by a clique on `new_labels.len()` fresh vertices, each
    /// adjacent to exactly the old neighbors of `v`.
    ///
    /// Surviving vertices keep their relative order and labels; the new
    /// vertices are appended at the end.
    pub fn blow_up<S: AsRef<str>>(&self, v: usize, new_labels: &[S]) -> Result<Graph> {
        self.check_vertex(v)?;
        let k = new_labels.len();
        if k == 0 {
            return Err(Error::Input("blow-up needs at least one new vertex".into()));
        }
        let old_labels = self.label_list();
        let mut used: HashSet<&str> = old_labels
            .iter()
            .enumerate()
            .filter(|&(u, _)| u != v)
            .map(|(_, l)| l.as_str())
            .collect();
        for l in new_labels {
            if !used.insert(l.as_ref()) {
                return Err(Error::DuplicateLabel(l.as_ref().to_string()));
            }
        }
        let n = self.n - 1 + k;
        if n > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(n));
        }
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        let mut g = Graph::new(n)?;
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j)?;
                }
            }
        }
        let first_new = keep.len();
        for x in first_new..n {
            for (i, &a) in keep.iter().enumerate() {
                if self.has_edge(v, a) {
                    g.add_edge(x, i)?;
                }
            }
            for y in x + 1..n {
                g.add_edge(x, y)?;
            }
        }
        let labels = keep
            .iter()
            .map(|&u| old_labels[u].clone())
            .chain(new_labels.iter().map(|l| l.as_ref().to_string()));
        g.with_labels(labels)
    }

    /// The subgraph induced on `s`, with ids compacted in ascending order.
    /// The returned map sends each new id to its id in `self`.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(s)?;
        if s.is_empty() {
            return Err(Error::Input("induced subgraph on the empty set".into()));
        }
        let map = s.to_vec();
        let mut g = Graph::new(map.len())?;
        for (i, &a) in map.iter().enumerate() {
            for (j, &b) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j)?;
                }
            }
        }
        if self.labels.is_some() {
            g = g.with_labels(map.iter().map(|&v| self.label(v)))?;
        }
        Ok((g, map))
    }

    /// Reorders vertices so that new id `i` is the vertex labeled `order[i]`.
    pub fn reorder_by_labels<S: AsRef<str>>(&self, order: &[S]) -> Result<Graph> {
        if order.len() != self.n {
            return Err(Error::Input(format!("expected {} labels, got {}", self.n, order.len())));
        }
        let mut perm = Vec::with_capacity(self.n);
        for l in order {
            let v = self
                .vertex_by_label(l.as_ref())
                .ok_or_else(|| Error::Input(format!("unknown label {:?}", l.as_ref())))?;
            perm.push(v);
        }
        let mut inverse = vec![usize::MAX; self.n];
        for (i, &v) in perm.iter().enumerate() {
            if inverse[v] != usize::MAX {
                return Err(Error::DuplicateLabel(order[i].as_ref().to_string()));
            }
            inverse[v] = i;
        }
        let g = Graph::from_edges(self.n, self.edges().map(|(u, v)| (inverse[u], inverse[v])))?;
        g.with_labels(order.iter().map(|l| l.as_ref().to_string()))
    }

    /// Image of this graph under the vertex bijection `v -> sigma[v]`.
    pub fn permuted(&self, sigma: &[usize]) -> Result<Graph> {
        if sigma.len() != self.n {
            return Err(Error::Input("permutation length differs from graph order".into()));
        }
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (sigma[u], sigma[v])))
    }

    pub(crate) fn is_well_formed(&self) -> bool {
        (0..self.n).all(|v| {
            self.adj[v].universe() == self.n
                && !self.adj[v].contains(v)
                && self.adj[v].iter().all(|u| self.adj[u].contains(v))
        })
    }
}

/// Brute-force isomorphism test with a degree-sequence prefilter.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    let n = g.n();
    if n.max(h.n()) > ISOMORPHISM_CEILING {
        return Err(Error::Unsupported(format!(
            "brute-force isomorphism is limited to {ISOMORPHISM_CEILING} vertices"
        )));
    }
    if n != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let mut dg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }

    fn extend(g: &Graph, h: &Graph, v: usize, map: &mut Vec<usize>, used: &mut u64) -> bool {
        if v == g.n() {
            return true;
        }
        for u in 0..h.n() {
            if *used >> u & 1 == 1 || g.degree(v) != h.degree(u) {
                continue;
            }
            if (0..v).all(|w| g.has_edge(v, w) == h.has_edge(u, map[w])) {
                map.push(u);
                *used |= 1 << u;
                if extend(g, h, v + 1, map, used) {
                    return true;
                }
                map.pop();
                *used &= !(1 << u);
            }
        }
        false
    }

    Ok(extend(g, h, 0, &mut Vec::with_capacity(n), &mut 0))
}
