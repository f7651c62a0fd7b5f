use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A vertex bijection together with its cycle decomposition.
#[derive(Clone, PartialEq, Eq)]
pub struct PermutationWitness {
    sigma: Vec<usize>,
    orbits: Vec<VertexSet>,
}

impl PermutationWitness {
    pub fn new(sigma: Vec<usize>) -> Result<Self> {
        let n = sigma.len();
        let mut seen = vec![false; n];
        for &s in &sigma {
            if s >= n || std::mem::replace(&mut seen[s], true) {
                return Err(Error::Input(format!("{sigma:?} is not a permutation")));
            }
        }
        let mut orbits = Vec::new();
        let mut placed = vec![false; n];
        for start in 0..n {
            if placed[start] {
                continue;
            }
            let mut orbit = VertexSet::empty(n);
            let mut v = start;
            while !placed[v] {
                placed[v] = true;
                orbit.insert(v);
                v = sigma[v];
            }
            orbits.push(orbit);
        }
        Ok(PermutationWitness { sigma, orbits })
    }

    pub fn identity(n: usize) -> Self {
        Self::new((0..n).collect()).expect("identity is a permutation")
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn apply(&self, v: usize) -> usize {
        self.sigma[v]
    }

    /// Cycles of the permutation, ordered by least member.
    pub fn orbits(&self) -> &[VertexSet] {
        &self.orbits
    }

    pub fn orbit_of(&self, v: usize) -> VertexSet {
        *self
            .orbits
            .iter()
            .find(|o| o.contains(v))
            .expect("orbits cover the vertex set")
    }

    pub fn inverse(&self) -> PermutationWitness {
        let mut inv = vec![0; self.sigma.len()];
        for (v, &s) in self.sigma.iter().enumerate() {
            inv[s] = v;
        }
        PermutationWitness::new(inv).expect("inverse of a permutation")
    }

    /// Cycle notation without fixed points, `()` for the identity.
    pub fn cycle_notation(&self) -> String {
        let mut out = String::new();
        for orbit in &self.orbits {
            if orbit.len() < 2 {
                continue;
            }
            let start = orbit.first().unwrap();
            out.push('(');
            let mut v = start;
            loop {
                out.push_str(&v.to_string());
                v = self.sigma[v];
                if v == start {
                    break;
                }
                out.push(' ');
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Debug for PermutationWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermutationWitness{}", self.cycle_notation())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbits_and_notation() {
        let p = PermutationWitness::new(vec![3, 4, 5, 0, 1, 2]).unwrap();
        assert_eq!(p.cycle_notation(), "(0 3)(1 4)(2 5)");
        assert_eq!(p.orbits().len(), 3);
        assert_eq!(p.orbit_of(4).to_vec(), vec![1, 4]);
        assert_eq!(PermutationWitness::identity(3).cycle_notation(), "()");
        let c = PermutationWitness::new(vec![1, 2, 0]).unwrap();
        assert_eq!(c.cycle_notation(), "(0 1 2)");
        assert_eq!(c.inverse().cycle_notation(), "(0 2 1)");
        assert_eq!(c.orbit_of(0), c.inverse().orbit_of(0));
        assert!(PermutationWitness::new(vec![0, 0]).is_err());
        assert!(PermutationWitness::new(vec![2, 0]).is_err());
    }
}
