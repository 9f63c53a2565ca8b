//! Cayley graphs of permutation groups: the alternating-group generator
//! families, BFS group closure, and cycle-word verification by right
//! multiplication — all reusing the hamilton engine via [`LabeledGraph`].
//!
//! Products read left to right with the rightmost factor acting first on
//! points: in `g·x`, the point is sent through `x` and then through `g`.
//! This is the convention under which the printed Alt(4) walk visits its
//! stated element sequence.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::hamilton::{verify_cycle_labeled, CycleWord, LabeledGraph, VerifyReport};

/// A permutation of {1,…,n}, stored as 0-based images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Build from 1-based images; every value must occur exactly once.
    pub fn from_images(images_one_based: Vec<usize>) -> Result<Self> {
        let n = images_one_based.len();
        let mut seen = vec![false; n];
        let mut images = Vec::with_capacity(n);
        for v in images_one_based {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::RangeError(format!(
                    "images must be a bijection on 1..={}",
                    n
                )));
            }
            seen[v - 1] = true;
            images.push(v - 1);
        }
        Ok(Permutation { images })
    }

    /// Build from disjoint cycles of 1-based points, e.g. `(12)(34)` as
    /// `&[vec![1, 2], vec![3, 4]]`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p > n {
                    return Err(Error::RangeError(format!(
                        "point {} outside 1..={}",
                        p, n
                    )));
                }
                if used[p - 1] {
                    return Err(Error::RangeError(format!(
                        "point {} appears in two cycles",
                        p
                    )));
                }
                used[p - 1] = true;
                let q = cycle[(k + 1) % cycle.len()];
                if q == 0 || q > n {
                    return Err(Error::RangeError(format!(
                        "point {} outside 1..={}",
                        q, n
                    )));
                }
                images[p - 1] = q - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// Number of points acted on.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-based point.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1] + 1
    }

    /// The product `self·other`: `other` acts first on points.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&k| self.images[k]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v] = k;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| k == v)
    }
}

impl fmt::Display for Permutation {
    /// Disjoint cycle notation on 1-based points; the identity prints `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("e");
        }
        let n = self.degree();
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            f.write_str("(")?;
            let mut p = start;
            loop {
                seen[p] = true;
                write!(f, "{}", p + 1)?;
                p = self.images[p];
                if p == start {
                    break;
                }
                f.write_str(" ")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// The generating set X_n of Alt(n): x₁ = (123), x₂ = (132), and the
/// involutions x_i = (12)(i, i+1) for i ∈ [3, n−1], with their names.
pub fn alt_generators(n: usize) -> Result<Vec<(String, Permutation)>> {
    if n < 3 {
        return Err(Error::RangeError(format!(
            "alternating generators need n ≥ 3, got {}",
            n
        )));
    }
    let mut gens = vec![
        ("x1".to_string(), Permutation::from_cycles(n, &[vec![1, 2, 3]])?),
        ("x2".to_string(), Permutation::from_cycles(n, &[vec![1, 3, 2]])?),
    ];
    for i in 3..n {
        gens.push((
            format!("x{}", i),
            Permutation::from_cycles(n, &[vec![1, 2], vec![i, i + 1]])?,
        ));
    }
    Ok(gens)
}

/// The Cayley graph of the group generated by a named, inverse-closed set
/// of permutations. Vertex 0 is the identity; edges go from `g` to `g·x`.
#[derive(Debug, Clone)]
pub struct PermGroupGraph {
    elements: Vec<Permutation>,
    names: Vec<String>,
    generators: Vec<Permutation>,
    /// out[v][k] = index of elements[v]·generators[k].
    out: Vec<Vec<usize>>,
}

impl PermGroupGraph {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn element_index(&self, p: &Permutation) -> Option<usize> {
        self.elements.iter().position(|q| q == p)
    }

    /// 1-based label of a generator name.
    pub fn label_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|k| k + 1)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// The graph with out-edges labeled by 1-based generator index.
    pub fn to_labeled(&self) -> LabeledGraph {
        let out = self
            .out
            .iter()
            .map(|row| row.iter().enumerate().map(|(k, &w)| (k + 1, w)).collect())
            .collect();
        LabeledGraph::new(out).expect("group graphs are valid labeled graphs")
    }

    /// Undirected edges, one per element pair (generator inverse pairs
    /// collapse onto the same edge).
    pub fn undirected_edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (v, row) in self.out.iter().enumerate() {
            for &w in row {
                if v < w {
                    edges.push((v, w));
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        edges
    }
}

/// BFS closure of a named generator set from the identity.
pub fn build_perm_graph(gens: &[(String, Permutation)]) -> Result<PermGroupGraph> {
    if gens.is_empty() {
        return Err(Error::SpecError("generator set is empty".into()));
    }
    let n = gens[0].1.degree();
    if gens.iter().any(|(_, g)| g.degree() != n) {
        return Err(Error::SpecError(
            "generators act on different point counts".into(),
        ));
    }
    for (k, (name, g)) in gens.iter().enumerate() {
        if g.is_identity() {
            return Err(Error::IdentityGenerator);
        }
        if gens[..k].iter().any(|(m, h)| m == name || h == g) {
            return Err(Error::SpecError(format!(
                "generator {} repeats an earlier name or permutation",
                name
            )));
        }
    }
    for (name, g) in gens {
        let inv = g.inverse();
        if !gens.iter().any(|(_, h)| *h == inv) {
            return Err(Error::NotInverseClosed(format!(
                "the inverse of {} is missing",
                name
            )));
        }
    }

    let identity = Permutation::identity(n);
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    index.insert(identity.clone(), 0);
    let mut elements = vec![identity];
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut next = 0;
    while next < elements.len() {
        let element = elements[next].clone();
        let mut row = Vec::with_capacity(gens.len());
        for (_, g) in gens {
            let target = element.compose(g);
            let id = match index.get(&target) {
                Some(&id) => id,
                None => {
                    let id = elements.len();
                    index.insert(target.clone(), id);
                    elements.push(target);
                    id
                }
            };
            row.push(id);
        }
        out.push(row);
        next += 1;
    }
    Ok(PermGroupGraph {
        elements,
        names: gens.iter().map(|(name, _)| name.clone()).collect(),
        generators: gens.iter().map(|(_, g)| g.clone()).collect(),
        out,
    })
}

/// Walk a whitespace-separated generator-name word (e.g. `x2 x3 x1 …`)
/// from the identity by right multiplication and report as in
/// [`verify_cycle_labeled`]. `#` starts a line comment.
pub fn verify_perm_cycle(g: &PermGroupGraph, word_text: &str) -> Result<VerifyReport> {
    let mut word = Vec::new();
    for line in word_text.lines() {
        let line = line.split('#').next().unwrap_or("");
        for token in line.split_whitespace() {
            word.push(g.label_of(token)?);
        }
    }
    let cw = CycleWord { start: 0, word };
    Ok(verify_cycle_labeled(&g.to_labeled(), &cw))
}

/// Check the commuting identities that drive the inductive lifting step
/// for Alt(n), n ≥ 5: x₁x_{n−1} = x_{n−1}x₂, x₂x_{n−1} = x_{n−1}x₁, and
/// x_i x_{n−1} = x_{n−1} x_i for i ∈ [3, n−3].
pub fn commuting_relations_check(gens: &[(String, Permutation)]) -> Result<bool> {
    // X_n has n−1 generators, so n ≥ 5 means at least 4 of them.
    if gens.len() < 4 {
        return Err(Error::RangeError(format!(
            "need the generators of Alt(n) with n ≥ 5, got {} generators",
            gens.len()
        )));
    }
    let x = |i: usize| &gens[i - 1].1;
    let last = gens.len();
    let mut holds = x(1).compose(x(last)) == x(last).compose(x(2));
    holds &= x(2).compose(x(last)) == x(last).compose(x(1));
    for i in 3..=last.saturating_sub(2) {
        holds &= x(i).compose(x(last)) == x(last).compose(x(i));
    }
    Ok(holds)
}
