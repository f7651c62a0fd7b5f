//! Property suite behind `nbrecon verify`.
//!
//! Each check runs over every labeled graph of the requested order when that
//! is cheap (`n <= 6`, or `n <= 5` for checks that also sweep vertex
//! subsets) and over seeded random samples otherwise.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::convexity::{check_convexity_axioms, digital_convexity, is_digitally_convex};
use crate::error::{Error, Result};
use crate::families::{
    closed_support, cn_subset, neighborhood_multiset, spans, union_basis, union_basis_in_order, union_closure,
    SetFamily,
};
use crate::graph::{pair_count, Graph};
use crate::miner::{enumerate_labeled_graphs, verify_collisions, MineOptions};
use crate::reconstruct::{from_digital_convexity, from_multiset, from_support, SearchOptions};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub n: usize,
    pub seed: u64,
    /// Random cases for sampled checks.
    pub samples: usize,
    pub mine: MineOptions,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub check: &'static str,
    pub cases: u64,
    pub failures: u64,
    /// First failing case, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

impl Outcome {
    fn new(check: &'static str) -> Self {
        Outcome {
            check,
            ..Default::default()
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// `G(n, p)` with `p` drawn uniformly from `[0.05, 0.95]`.
pub fn random_graph(n: usize, rng: &mut impl Rng) -> Graph {
    let p: f64 = rng.gen_range(0.05..0.95);
    let mut g = Graph::new(n).expect("order within bounds");
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

/// Rejection-samples a graph on `n` vertices satisfying `accept`.
pub fn sample_graph(n: usize, rng: &mut impl Rng, accept: impl Fn(&Graph) -> bool) -> Graph {
    loop {
        let g = random_graph(n, rng);
        if accept(&g) {
            return g;
        }
    }
}

/// The graphs a check runs over: all of them up to `exhaustive_up_to`,
/// otherwise `samples` random ones satisfying `accept`.
fn population(
    n: usize,
    exhaustive_up_to: usize,
    samples: usize,
    rng: &mut ChaCha8Rng,
    accept: impl Fn(&Graph) -> bool,
) -> Result<Vec<Graph>> {
    if n <= exhaustive_up_to {
        Ok(enumerate_labeled_graphs(n, false)?.filter(|g| accept(g)).collect())
    } else {
        Ok((0..samples).map(|_| sample_graph(n, rng, &accept)).collect())
    }
}

fn c4_free(g: &Graph) -> bool {
    !g.contains_induced_c4()
}

pub fn run_suite(opts: &SuiteOptions) -> Result<Vec<Outcome>> {
    let n = opts.n;
    if n == 0 {
        return Err(Error::Input("order must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut out = Vec::new();

    if pair_count(n) <= 28 {
        let mut o = Outcome::new("collision-pair checks");
        match verify_collisions(n, opts.mine) {
            Ok(r) => o.cases = (r.multiset_pairs + r.support_pairs) as u64,
            Err(Error::Violation { check, detail }) => o.record(false, || format!("{check}: {detail}")),
            Err(e) => return Err(e),
        }
        out.push(o);
    }

    let graphs = population(n, 6, opts.samples, &mut rng, c4_free)?;
    let mut multiset = Outcome::new("round trip from closed multiset");
    let mut support = Outcome::new("round trip from closed support");
    let mut convexity = Outcome::new("round trip from digital convexity");
    for g in &graphs {
        let r = from_multiset(&neighborhood_multiset(g, true), SearchOptions::first());
        multiset.record(r.unique() == Some(g), || format!("{g:?}"));
        let r = from_support(&closed_support(g), SearchOptions::first());
        support.record(r.unique() == Some(g), || format!("{g:?}"));
        let r = from_digital_convexity(&digital_convexity(g)?, SearchOptions::first());
        convexity.record(r.unique() == Some(g), || format!("{g:?}"));
    }
    out.extend([multiset, support, convexity]);

    let mut prop4 = Outcome::new("convex iff complement is a neighborhood union");
    let mut axioms = Outcome::new("digital convexity is a convexity");
    for g in &population(n, 5, opts.samples, &mut rng, |_| true)? {
        let unions = union_closure(&closed_support(g))?;
        let d = digital_convexity(g)?;
        axioms.record(check_convexity_axioms(&d).is_ok(), || format!("{g:?}"));
        let subsets: Vec<u64> = if n <= 5 {
            (0..1u64 << n).collect()
        } else {
            (0..32).map(|_| rng.gen::<u64>() & VertexSet::full(n).bits()).collect()
        };
        for bits in subsets {
            let s = VertexSet::from_bits(n, bits)?;
            let convex = is_digitally_convex(g, s)?.is_convex();
            prop4.record(convex == unions.contains(s.complement()), || format!("{g:?} S={s}"));
        }
    }
    out.extend([prop4, axioms]);

    let mut reduction = Outcome::new("generator reduction");
    for g in &population(n, 5, opts.samples, &mut rng, |_| true)? {
        let supp = closed_support(g);
        let pairs: Vec<(u64, u64)> = if n <= 5 {
            let all = 1u64 << n;
            (0..all).flat_map(|a| (0..all).map(move |b| (a, b))).collect()
        } else {
            let mask = VertexSet::full(n).bits();
            (0..64).map(|_| (rng.gen::<u64>() & mask, rng.gen::<u64>() & mask)).collect()
        };
        for (a, b) in pairs {
            let (a, b) = (VertexSet::from_bits(n, a)?, VertexSet::from_bits(n, b)?);
            let direct = g.closed_of_set(a).is_subset(g.closed_of_set(b));
            reduction.record(cn_subset(a, b, &supp) == direct, || format!("{g:?} A={a} B={b}"));
        }
    }
    out.push(reduction);

    let mut basis = Outcome::new("union basis is unique and minimal");
    for _ in 0..opts.samples {
        let f = random_family(n, &mut rng);
        let b = union_basis(&f);
        let mut ok = spans(b.members(), &f);
        for i in 0..b.len() {
            let mut fewer = b.members().to_vec();
            fewer.remove(i);
            ok &= !spans(&fewer, &f);
        }
        let mut order = f.members().to_vec();
        for _ in 0..10 {
            order.shuffle(&mut rng);
            ok &= union_basis_in_order(n, &order) == b;
        }
        basis.record(ok, || format!("{f:?}"));
    }
    out.push(basis);

    let girth_five = |g: &Graph| g.girth().is_none_or(|k| k >= 5);
    let mut girth = Outcome::new("girth at least five round trip");
    for g in &population(n, 6, opts.samples, &mut rng, girth_five)? {
        let r = from_digital_convexity(&digital_convexity(g)?, SearchOptions::first());
        let ok = r.unique().is_some_and(|h| h == g && h.girth() == g.girth());
        girth.record(ok, || format!("{g:?}"));
    }
    out.push(girth);

    Ok(out)
}

/// A random family of nonempty subsets of `0..n`.
pub fn random_family(n: usize, rng: &mut impl Rng) -> SetFamily {
    let k = rng.gen_range(1..=2 * n + 2);
    let density: f64 = rng.gen_range(0.2..0.8);
    let sets = (0..k).map(|_| {
        let bits = (0..n).filter(|_| rng.gen_bool(density)).fold(0u64, |b, v| b | 1 << v);
        VertexSet::from_bits(n, bits).expect("bits within universe")
    });
    SetFamily::new(n, sets.collect::<Vec<_>>()).expect("one universe")
}
