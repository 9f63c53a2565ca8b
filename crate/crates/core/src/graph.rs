//! The labeled Cayley graph of a root system's bases, its quotients, and the
//! Cartan scheme sitting on top of the smallest quotient.
//!
//! Vertices are bases (BFS order from the reference base), and each vertex
//! carries exactly one edge per reflection index. The graph is always
//! simple, regular, connected, bipartite, and of even order — violations
//! signal corrupt input and are reported as errors rather than silently
//! accepted.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exact::{self, Int};
use crate::roots::{CoordVector, OrderedBase, RootSystem};

/// The Cayley graph: one vertex per base, one edge per reflection index.
#[derive(Clone)]
pub struct CayleyGraph {
    rank: usize,
    /// neighbor[v][i−1] = the vertex reached from v by reflecting at i.
    neighbor: Vec<Vec<usize>>,
    /// Two-coloring by BFS-distance parity; verified against every edge.
    coloring: Vec<u8>,
    start: usize,
    /// The bases, in vertex order. Empty for imported graphs.
    bases: Vec<OrderedBase>,
    /// Positive halves per base, in vertex order. Empty for imported graphs.
    positives: Vec<Vec<CoordVector>>,
}

impl CayleyGraph {
    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.neighbor.len()
    }

    /// Number of reflection labels (= vertex degree).
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Index of the reference base.
    pub fn start(&self) -> usize {
        self.start
    }

    /// The vertex reached from `v` by the label-`i` edge (1-based label).
    pub fn neighbor(&self, v: usize, i: usize) -> usize {
        self.neighbor[v][i - 1]
    }

    pub fn coloring(&self) -> &[u8] {
        &self.coloring
    }

    /// Bases in vertex order; empty when the graph was imported.
    pub fn bases(&self) -> &[OrderedBase] {
        &self.bases
    }

    /// The positive half of the root set w.r.t. vertex `v`'s base (sorted);
    /// empty when the graph was imported.
    pub fn base_positives(&self, v: usize) -> &[CoordVector] {
        &self.positives[v]
    }

    /// All edges as `(u, v, label)` with `u < v`, sorted ascending.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::with_capacity(self.order() * self.rank / 2);
        for (u, row) in self.neighbor.iter().enumerate() {
            for (k, &v) in row.iter().enumerate() {
                if u < v {
                    out.push((u, v, k + 1));
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// Build the Cayley graph of a validated system: BFS from the reference
/// base, deterministic vertex ids, parity coloring checked on every edge.
pub fn build_graph(sys: &RootSystem) -> Result<CayleyGraph> {
    let enumeration = sys.enumerate_bases()?;
    let neighbor = enumeration.neighbor;
    let n = neighbor.len();
    let rank = sys.rank();

    // Simplicity: no self-loops, distinct labels reach distinct neighbors.
    for (v, row) in neighbor.iter().enumerate() {
        for (k, &w) in row.iter().enumerate() {
            if w == v {
                return Err(Error::Internal(format!(
                    "self-loop at vertex {} label {}",
                    v,
                    k + 1
                )));
            }
            if row[..k].contains(&w) {
                return Err(Error::Internal(format!(
                    "parallel edges between {} and {}",
                    v, w
                )));
            }
        }
    }

    // Parity coloring from a fresh BFS (vertex 0 is the reference base).
    let mut coloring = vec![u8::MAX; n];
    coloring[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for &w in &neighbor[v] {
            if coloring[w] == u8::MAX {
                coloring[w] = 1 - coloring[v];
                queue.push_back(w);
            }
        }
    }
    if coloring.iter().any(|&c| c == u8::MAX) {
        return Err(Error::Internal("graph is not connected".into()));
    }
    for (v, row) in neighbor.iter().enumerate() {
        for &w in row {
            if coloring[v] == coloring[w] {
                return Err(Error::BipartiteViolation(format!(
                    "edge ({}, {}) joins vertices of equal color",
                    v, w
                )));
            }
        }
    }
    let ones = coloring.iter().filter(|&&c| c == 1).count();
    if n % 2 != 0 || ones * 2 != n {
        return Err(Error::Internal(
            "color classes are unbalanced in a regular bipartite graph".into(),
        ));
    }

    Ok(CayleyGraph {
        rank,
        neighbor,
        coloring,
        start: 0,
        bases: enumeration.bases,
        positives: enumeration.positives,
    })
}

/// Unweighted shortest-path distance between two vertices.
pub fn graph_distance(g: &CayleyGraph, u: usize, v: usize) -> usize {
    if u == v {
        return 0;
    }
    let mut dist = vec![usize::MAX; g.order()];
    dist[u] = 0;
    let mut queue = VecDeque::from([u]);
    while let Some(w) = queue.pop_front() {
        for &x in &g.neighbor[w] {
            if dist[x] == usize::MAX {
                dist[x] = dist[w] + 1;
                if x == v {
                    return dist[x];
                }
                queue.push_back(x);
            }
        }
    }
    unreachable!("Cayley graphs are connected");
}

/// Which groupoid equivalence to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientMode {
    /// Bases identified when the full root set has the identical coordinate
    /// expression in both.
    Smallest,
    /// Every base is its own class.
    Largest,
}

/// Partition the vertex set by a groupoid equivalence. Classes are listed by
/// their smallest member, members ascending. The partition is checked to be
/// compatible with every reflection: `B ∼ B′` implies `B^{(i)} ∼ B′^{(i)}`.
pub fn quotient_classes(
    sys: &RootSystem,
    g: &CayleyGraph,
    mode: QuotientMode,
) -> Result<Vec<Vec<usize>>> {
    let classes: Vec<Vec<usize>> = match mode {
        QuotientMode::Largest => (0..g.order()).map(|v| vec![v]).collect(),
        QuotientMode::Smallest => {
            let mut key_to_class: HashMap<Vec<Vec<Int>>, usize> = HashMap::new();
            let mut classes: Vec<Vec<usize>> = Vec::new();
            for (v, base) in g.bases().iter().enumerate() {
                let inv = exact::inverse_unimodular(&base.matrix()).ok_or_else(|| {
                    Error::Internal(format!("vertex {} base matrix is not unimodular", v))
                })?;
                let mut key: Vec<Vec<Int>> = sys
                    .roots()
                    .iter()
                    .map(|r| exact::mat_vec(&inv, r.coords()))
                    .collect();
                key.sort();
                match key_to_class.get(&key) {
                    Some(&c) => classes[c].push(v),
                    None => {
                        key_to_class.insert(key, classes.len());
                        classes.push(vec![v]);
                    }
                }
            }
            classes
        }
    };

    // Compatibility of the partition with every reflection.
    let class_of = class_map(&classes, g.order());
    for (c, members) in classes.iter().enumerate() {
        for i in 1..=g.rank() {
            let target = class_of[g.neighbor(members[0], i)];
            for &v in members {
                if class_of[g.neighbor(v, i)] != target {
                    return Err(Error::IncompatiblePartition(format!(
                        "class {} splits under reflection {}",
                        c, i
                    )));
                }
            }
        }
    }
    Ok(classes)
}

fn class_map(classes: &[Vec<usize>], n: usize) -> Vec<usize> {
    let mut class_of = vec![usize::MAX; n];
    for (c, members) in classes.iter().enumerate() {
        for &v in members {
            class_of[v] = c;
        }
    }
    debug_assert!(class_of.iter().all(|&c| c != usize::MAX));
    class_of
}

/// The Cartan scheme extracted from the smallest quotient: objects are
/// equivalence classes, each carrying an integer Cartan matrix and acted on
/// by the reflection indices.
#[derive(Debug, Clone)]
pub struct CartanScheme {
    /// Vertex classes, by smallest member.
    pub classes: Vec<Vec<usize>>,
    /// Class id per vertex.
    pub class_of: Vec<usize>,
    /// Per-object generalized Cartan matrix `Ĉ = (−N_{ij})` at a
    /// representative base.
    pub matrices: Vec<Vec<Vec<i64>>>,
    /// `action[a][i−1]` = the object reached from object `a` by reflecting
    /// at `i`.
    pub action: Vec<Vec<usize>>,
}

/// Extract and fully verify the Cartan scheme of a system.
pub fn extract_cartan_scheme(sys: &RootSystem, g: &CayleyGraph) -> Result<CartanScheme> {
    let classes = quotient_classes(sys, g, QuotientMode::Smallest)?;
    let class_of = class_map(&classes, g.order());
    let rank = g.rank();

    let mut matrices = Vec::with_capacity(classes.len());
    let mut action = Vec::with_capacity(classes.len());
    for members in &classes {
        let rep = members[0];
        let base = &g.bases()[rep];
        let mut m = vec![vec![0i64; rank]; rank];
        for i in 1..=rank {
            for j in 1..=rank {
                m[i - 1][j - 1] = -sys.cartan_integer(base, i, j)?;
            }
        }
        matrices.push(m);
        action.push(
            (1..=rank)
                .map(|i| class_of[g.neighbor(rep, i)])
                .collect::<Vec<usize>>(),
        );
    }

    // Generalized-Cartan-matrix conditions.
    for (a, m) in matrices.iter().enumerate() {
        for i in 0..rank {
            if m[i][i] != 2 {
                return Err(Error::IncompatiblePartition(format!(
                    "object {} has diagonal entry {} at index {}",
                    a,
                    m[i][i],
                    i + 1
                )));
            }
            for j in 0..rank {
                if (m[i][j] == 0) != (m[j][i] == 0) {
                    return Err(Error::IncompatiblePartition(format!(
                        "object {} violates zero-symmetry at ({}, {})",
                        a,
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
    }
    // Row invariance along the acting index: ĉ^{i·a}_{ij} = ĉ^a_{ij}.
    for a in 0..classes.len() {
        for i in 0..rank {
            let b = action[a][i];
            if matrices[b][i] != matrices[a][i] {
                return Err(Error::IncompatiblePartition(format!(
                    "row {} changes from object {} to its reflection {}",
                    i + 1,
                    a,
                    b
                )));
            }
        }
    }
    // Dihedral identity: 2·m̂ alternating steps return to the object.
    for (a, members) in classes.iter().enumerate() {
        let rep = members[0];
        for i in 1..=rank {
            for j in 1..=rank {
                if i == j {
                    continue;
                }
                let m_hat = sys.m_count(&g.bases()[rep], i, j)?;
                let mut c = a;
                for step in 0..2 * m_hat {
                    let label = if step % 2 == 0 { i } else { j };
                    c = action[c][label - 1];
                }
                if c != a {
                    return Err(Error::IncompatiblePartition(format!(
                        "(({}{}))^{} does not fix object {}",
                        i, j, m_hat, a
                    )));
                }
            }
        }
    }

    Ok(CartanScheme {
        classes,
        class_of,
        matrices,
        action,
    })
}

/// Output format for [`export_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

/// Serialize a graph. Both formats list edges as `(u, v, label)` with
/// `u < v`, ascending — the output is byte-stable for a given graph.
pub fn export_graph(g: &CayleyGraph, format: ExportFormat) -> String {
    let edges = g.edges();
    match format {
        ExportFormat::Dot => {
            let mut s = String::from("graph {\n");
            for (u, v, i) in edges {
                let _ = writeln!(s, "  v{} -- v{} [label={}];", u, v, i);
            }
            s.push('}');
            s.push('\n');
            s
        }
        ExportFormat::Json => {
            let mut s = format!("{{\"n\":{},\"rank\":{},\"edges\":[", g.order(), g.rank());
            for (k, (u, v, i)) in edges.iter().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                let _ = write!(s, "[{},{},{}]", u, v, i);
            }
            s.push_str("],\"coloring\":[");
            for (k, c) in g.coloring.iter().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                let _ = write!(s, "{}", c);
            }
            s.push_str("]}");
            s
        }
    }
}

/// Read a graph back from the JSON produced by [`export_graph`]. The result
/// carries no bases (only adjacency and coloring), and every structural
/// invariant — regularity, simplicity, connectivity, bipartiteness — is
/// re-verified.
pub fn import_graph_json(text: &str) -> Result<CayleyGraph> {
    #[derive(serde::Deserialize)]
    struct Doc {
        n: usize,
        rank: usize,
        edges: Vec<[usize; 3]>,
        coloring: Vec<u8>,
    }
    let doc: Doc =
        serde_json::from_str(text).map_err(|e| Error::ParseError(format!("json: {}", e)))?;
    if doc.n == 0 || doc.rank == 0 {
        return Err(Error::ParseError("empty graph".into()));
    }
    let mut neighbor = vec![vec![usize::MAX; doc.rank]; doc.n];
    for &[u, v, i] in &doc.edges {
        if u >= doc.n || v >= doc.n {
            return Err(Error::ParseError(format!(
                "edge ({}, {}) outside 0..{}",
                u, v, doc.n
            )));
        }
        if u == v {
            return Err(Error::ParseError(format!("self-loop at {}", u)));
        }
        if i == 0 || i > doc.rank {
            return Err(Error::ParseError(format!(
                "edge label {} outside 1..={}",
                i, doc.rank
            )));
        }
        for (a, b) in [(u, v), (v, u)] {
            if neighbor[a][i - 1] != usize::MAX {
                return Err(Error::ParseError(format!(
                    "vertex {} has two label-{} edges",
                    a, i
                )));
            }
            neighbor[a][i - 1] = b;
        }
    }
    for (v, row) in neighbor.iter().enumerate() {
        for (k, &w) in row.iter().enumerate() {
            if w == usize::MAX {
                return Err(Error::ParseError(format!(
                    "vertex {} is missing its label-{} edge",
                    v,
                    k + 1
                )));
            }
            if row[..k].contains(&w) {
                return Err(Error::ParseError(format!(
                    "parallel edges between {} and {}",
                    v, w
                )));
            }
        }
    }
    // Connectivity.
    let mut seen = vec![false; doc.n];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for &w in &neighbor[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    if count != doc.n {
        return Err(Error::ParseError("graph is not connected".into()));
    }
    // Coloring.
    if doc.coloring.len() != doc.n || doc.coloring.iter().any(|&c| c > 1) {
        return Err(Error::ParseError("bad coloring array".into()));
    }
    for (v, row) in neighbor.iter().enumerate() {
        for &w in row {
            if doc.coloring[v] == doc.coloring[w] {
                return Err(Error::BipartiteViolation(format!(
                    "edge ({}, {}) joins vertices of equal color",
                    v, w
                )));
            }
        }
    }
    Ok(CayleyGraph {
        rank: doc.rank,
        neighbor,
        coloring: doc.coloring,
        start: 0,
        bases: Vec::new(),
        positives: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{parse_roots, RootFormat, RootSystem};

    const NR1_CH: &str = "rank: 3\n1\n2\n3\n1 2\n1 3\n1 2 3\n";
    const NR2_CH: &str = "rank: 3\n1\n2\n3\n1 2\n1 3\n2 3\n1 2 3\n";

    fn nr1() -> RootSystem {
        parse_roots(NR1_CH, RootFormat::ChNotation).unwrap()
    }

    fn nr2() -> RootSystem {
        parse_roots(NR2_CH, RootFormat::ChNotation).unwrap()
    }

    fn rank1() -> RootSystem {
        RootSystem::from_positive_roots(1, vec![CoordVector::new(vec![1])], None).unwrap()
    }

    /// |R^-_{B_u} ∩ R^+_{B_v}|, straight from the stored positive halves.
    fn flip_count(g: &CayleyGraph, u: usize, v: usize) -> usize {
        let pos_u: std::collections::HashSet<_> = g.base_positives(u).iter().collect();
        g.base_positives(v)
            .iter()
            .filter(|p| !pos_u.contains(p))
            .count()
    }

    #[test]
    fn rank1_graph_shape() {
        let g = build_graph(&rank1()).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.edges(), vec![(0, 1, 1)]);
        assert_eq!(graph_distance(&g, 0, 1), 1);
        assert_eq!(
            export_graph(&g, ExportFormat::Dot),
            "graph {\n  v0 -- v1 [label=1];\n}\n"
        );
    }

    #[test]
    fn nr1_nr2_counts() {
        let g1 = build_graph(&nr1()).unwrap();
        assert_eq!(g1.order(), 24);
        assert_eq!(g1.edges().len(), 36);
        let g2 = build_graph(&nr2()).unwrap();
        assert_eq!(g2.order(), 32);
        assert_eq!(g2.edges().len(), 48);
        for g in [&g1, &g2] {
            let ones = g.coloring().iter().filter(|&&c| c == 1).count();
            assert_eq!(ones * 2, g.order());
        }
    }

    #[test]
    fn color_classes_swap_under_one_reflection() {
        let g = build_graph(&nr1()).unwrap();
        for v in 0..g.order() {
            let w = g.neighbor(v, 1);
            assert_ne!(g.coloring()[v], g.coloring()[w]);
        }
    }

    #[test]
    fn distance_identity_examples() {
        let sys = nr1();
        let g = build_graph(&sys).unwrap();
        assert_eq!(graph_distance(&g, 0, 0), 0);
        for i in 1..=3 {
            let w = g.neighbor(0, i);
            assert_eq!(graph_distance(&g, 0, w), 1);
            assert_eq!(flip_count(&g, 0, w), 1);
        }
        // The base whose set is the negated reference base is at distance
        // |R^+| = 6.
        let target = sys.reference_base().negated().set_key();
        let anti = (0..g.order())
            .find(|&v| g.bases()[v].set_key() == target)
            .expect("antipodal base exists");
        assert_eq!(graph_distance(&g, 0, anti), 6);
        assert_eq!(flip_count(&g, 0, anti), 6);
    }

    #[test]
    fn distance_identity_exhaustive_nr1() {
        let g = build_graph(&nr1()).unwrap();
        for u in 0..g.order() {
            for v in 0..g.order() {
                assert_eq!(graph_distance(&g, u, v), flip_count(&g, u, v));
            }
        }
    }

    #[test]
    fn quotient_modes_on_nr2() {
        let sys = nr2();
        let g = build_graph(&sys).unwrap();
        let largest = quotient_classes(&sys, &g, QuotientMode::Largest).unwrap();
        assert_eq!(largest.len(), 32);
        let smallest = quotient_classes(&sys, &g, QuotientMode::Smallest).unwrap();
        assert_eq!(smallest.len(), 4);
        assert_eq!(smallest.iter().map(Vec::len).sum::<usize>(), 32);
    }

    #[test]
    fn nr2_scheme_matches_the_four_printed_representatives() {
        let sys = nr2();
        let g = build_graph(&sys).unwrap();
        let scheme = extract_cartan_scheme(&sys, &g).unwrap();
        assert_eq!(scheme.classes.len(), 4);

        let set_of = |coords: &[[i64; 3]]| -> Vec<CoordVector> {
            let mut v: Vec<CoordVector> = coords
                .iter()
                .map(|c| CoordVector::new(c.to_vec()))
                .collect();
            v.sort();
            v
        };
        let find_class = |key: Vec<CoordVector>| -> usize {
            let v = (0..g.order())
                .find(|&v| g.bases()[v].set_key() == key)
                .expect("printed base exists");
            scheme.class_of[v]
        };
        let a = find_class(set_of(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]));
        let b = find_class(set_of(&[[1, 1, 0], [0, -1, 0], [0, 1, 1]]));
        let c = find_class(set_of(&[[-1, 0, 0], [1, 1, 0], [1, 0, 1]]));
        let d = find_class(set_of(&[[1, 0, 1], [0, 1, 1], [0, 0, -1]]));
        let mut all = vec![a, b, c, d];
        all.sort_unstable();
        all.dedup();
        assert_eq!(all.len(), 4, "the four printed bases sit in four classes");
        // From the reference object the three reflections reach c, b, d.
        assert_eq!(scheme.action[a], vec![c, b, d]);
        // Every index acts as an involution on objects.
        for obj in 0..4 {
            for i in 0..3 {
                assert_eq!(scheme.action[scheme.action[obj][i]][i], obj);
            }
        }
    }

    #[test]
    fn scheme_a2_and_rank1() {
        let a2 = parse_roots("rank: 2\n1\n2\n1 2\n", RootFormat::ChNotation).unwrap();
        let g = build_graph(&a2).unwrap();
        let scheme = extract_cartan_scheme(&a2, &g).unwrap();
        assert_eq!(scheme.classes.len(), 1);
        assert_eq!(scheme.matrices[0], vec![vec![2, -1], vec![-1, 2]]);

        let r1 = rank1();
        let g1 = build_graph(&r1).unwrap();
        let scheme1 = extract_cartan_scheme(&r1, &g1).unwrap();
        assert_eq!(scheme1.classes.len(), 1);
        assert_eq!(scheme1.matrices[0], vec![vec![2]]);
    }

    #[test]
    fn export_json_roundtrip() {
        let g = build_graph(&nr1()).unwrap();
        let json = export_graph(&g, ExportFormat::Json);
        assert!(json.starts_with("{\"n\":24,\"rank\":3,\"edges\":[["));
        let imported = import_graph_json(&json).unwrap();
        assert_eq!(export_graph(&imported, ExportFormat::Json), json);
        assert!(imported.bases().is_empty());
        assert_eq!(imported.order(), 24);
        assert_eq!(graph_distance(&imported, 0, 1), graph_distance(&g, 0, 1));
    }

    #[test]
    fn import_rejects_bad_graphs() {
        assert!(matches!(
            import_graph_json(r#"{"n":2,"rank":1,"edges":[[0,0,1]],"coloring":[0,1]}"#),
            Err(Error::ParseError(_))
        ));
        assert!(matches!(
            import_graph_json(r#"{"n":2,"rank":1,"edges":[[0,1,2]],"coloring":[0,1]}"#),
            Err(Error::ParseError(_))
        ));
        assert!(matches!(
            import_graph_json(r#"{"n":2,"rank":1,"edges":[[0,1,1]],"coloring":[0,0]}"#),
            Err(Error::BipartiteViolation(_))
        ));
        assert!(matches!(
            import_graph_json(r#"{"n":4,"rank":1,"edges":[[0,1,1],[2,3,1]],"coloring":[0,1,0,1]}"#),
            Err(Error::ParseError(_))
        ));
    }

    #[test]
    fn dot_export_shape() {
        let g = build_graph(&nr1()).unwrap();
        let dot = export_graph(&g, ExportFormat::Dot);
        assert!(dot.starts_with("graph {\n"));
        assert!(dot.ends_with("}\n"));
        assert_eq!(dot.lines().count(), 38); // 36 edges + braces
        assert!(dot.contains(" -- "));
        assert!(dot.contains("[label=1];"));
    }
}
