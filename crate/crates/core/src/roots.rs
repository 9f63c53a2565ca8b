//! Finite generalized root systems (FGRS) with exact integer coordinates.
//!
//! A root system here is a finite set `R` of nonzero integer vectors, closed
//! under negation, together with the combinatorics of its *bases*: ordered
//! lattice bases `B ⊂ R` such that every root is a componentwise nonnegative
//! or nonpositive combination of `B`. Reflections move between bases and are
//! driven by the Cartan integers `N_{ij}`, read off from root strings.
//!
//! All arithmetic is exact; no floating point enters this module.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{self, Int};
use num::traits::{Signed, Zero};

/// Upper bound on root-string scans; a valid finite system never gets close.
pub const STRING_CAP: usize = 10_000;
/// Upper bound on base enumeration; guards corrupt inputs, not real systems.
pub const BFS_VERTEX_CAP: usize = 10_000_000;

/// An integer coordinate vector (a root, or any lattice element).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoordVector(Vec<Int>);

impl CoordVector {
    pub fn new(coords: Vec<i64>) -> Self {
        CoordVector(coords.into_iter().map(Int::from).collect())
    }

    pub fn from_big(coords: Vec<Int>) -> Self {
        CoordVector(coords)
    }

    /// Standard unit vector `e_i` (1-based index).
    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = vec![Int::zero(); rank];
        v[i - 1] = Int::from(1);
        CoordVector(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Int] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Int::is_zero)
    }

    pub fn neg(&self) -> Self {
        CoordVector(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        CoordVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self + k * other`.
    pub fn add_scaled(&self, other: &Self, k: &Int) -> Self {
        CoordVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + k * b)
                .collect(),
        )
    }

    pub fn scale(&self, k: &Int) -> Self {
        CoordVector(self.0.iter().map(|c| c * k).collect())
    }
}

impl fmt::Debug for CoordVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for CoordVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An ordered tuple of roots forming (a candidate for) a base.
///
/// Order matters: reflections produce a specific ordering and two bases equal
/// as sets but differently ordered are *not* interchangeable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrderedBase {
    roots: Vec<CoordVector>,
}

impl OrderedBase {
    pub fn new(roots: Vec<CoordVector>) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::NotABase("empty tuple".into()));
        }
        let rank = roots[0].rank();
        if roots.len() != rank || roots.iter().any(|r| r.rank() != rank) {
            return Err(Error::NotABase(format!(
                "tuple of {} vectors cannot be a base in rank {}",
                roots.len(),
                rank
            )));
        }
        Ok(OrderedBase { roots })
    }

    pub fn rank(&self) -> usize {
        self.roots.len()
    }

    /// The i-th base root, 1-based.
    pub fn root(&self, i: usize) -> &CoordVector {
        &self.roots[i - 1]
    }

    pub fn roots(&self) -> &[CoordVector] {
        &self.roots
    }

    /// Canonical set key: the same roots in sorted order.
    pub fn set_key(&self) -> Vec<CoordVector> {
        let mut v = self.roots.clone();
        v.sort();
        v
    }

    pub fn negated(&self) -> Self {
        OrderedBase {
            roots: self.roots.iter().map(CoordVector::neg).collect(),
        }
    }

    /// Column matrix of the base roots (column j = coordinates of root j).
    pub(crate) fn matrix(&self) -> Vec<Vec<Int>> {
        let n = self.rank();
        let mut m = vec![vec![Int::zero(); n]; n];
        for (j, r) in self.roots.iter().enumerate() {
            for (i, c) in r.coords().iter().enumerate() {
                m[i][j] = c.clone();
            }
        }
        m
    }
}

impl fmt::Debug for OrderedBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.roots).finish()
    }
}

/// The reflection matrix `G_i` of a base: `B^{(i)} = B · G_i` with `B` read
/// as the 1×n row of column roots. It is an involution.
#[derive(Clone, PartialEq, Eq)]
pub struct ReflectionMatrix {
    entries: Vec<Vec<Int>>,
}

impl ReflectionMatrix {
    fn new(entries: Vec<Vec<Int>>) -> Result<Self> {
        let sq = exact::mat_mul(&entries, &entries);
        if sq != exact::identity(entries.len()) {
            return Err(Error::Internal(
                "reflection matrix is not an involution".into(),
            ));
        }
        Ok(ReflectionMatrix { entries })
    }

    pub fn entries(&self) -> &[Vec<Int>] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> &Int {
        &self.entries[row][col]
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }
}

impl fmt::Debug for ReflectionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.entries).finish()
    }
}

/// Outcome of `RootSystem::validate`.
#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub valid: bool,
    /// Reachable bases, in BFS order from the reference base.
    pub bases: Vec<OrderedBase>,
    pub bases_reached: usize,
    /// Human-readable witnesses, one per violation found.
    pub violations: Vec<String>,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.valid {
            write!(f, "valid: {} bases reached", self.bases_reached)
        } else {
            writeln!(f, "invalid ({} bases reached):", self.bases_reached)?;
            for v in &self.violations {
                writeln!(f, "  - {}", v)?;
            }
            Ok(())
        }
    }
}

/// A split of the index set with `m_{ij} = 2` across the cut, plus the two
/// component subsystems in their own (projected) coordinates.
#[derive(Debug, Clone)]
pub struct ReducibleSplit {
    /// 1-based indices of the first component, ascending.
    pub left_indices: Vec<usize>,
    /// 1-based indices of the second component, ascending.
    pub right_indices: Vec<usize>,
    pub left: RootSystem,
    pub right: RootSystem,
}

/// BFS enumeration of all bases reachable from the reference base.
pub(crate) struct BaseEnumeration {
    pub bases: Vec<OrderedBase>,
    /// neighbor[v][i-1] = vertex index of `bases[v]` reflected at i.
    pub neighbor: Vec<Vec<usize>>,
    /// positives[v] = the positive half of R w.r.t. bases[v], sorted.
    pub positives: Vec<Vec<CoordVector>>,
}

/// A finite generalized root system: the full root set plus its rank.
///
/// Construction takes the positive half only; negatives are synthesized. The
/// reference base is always the tuple of standard unit vectors.
#[derive(Clone)]
pub struct RootSystem {
    rank: usize,
    roots: Vec<CoordVector>,
    index: HashSet<CoordVector>,
    name: Option<String>,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RootSystem(rank {}, {} roots{})",
            self.rank,
            self.roots.len(),
            match &self.name {
                Some(n) => format!(", {}", n),
                None => String::new(),
            }
        )
    }
}

impl RootSystem {
    pub fn from_positive_roots(
        rank: usize,
        positives: Vec<CoordVector>,
        name: Option<String>,
    ) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ParseError("rank must be at least 1".into()));
        }
        if positives.is_empty() {
            return Err(Error::ParseError("empty positive root list".into()));
        }
        let mut index: HashSet<CoordVector> = HashSet::new();
        for r in &positives {
            if r.rank() != rank {
                return Err(Error::RankMismatch(format!(
                    "root {} has {} coordinates, expected {}",
                    r,
                    r.rank(),
                    rank
                )));
            }
            if r.is_zero() {
                return Err(Error::ParseError("zero vector listed as a root".into()));
            }
            if !index.insert(r.clone()) {
                return Err(Error::DuplicateRoot(format!("{}", r)));
            }
        }
        for r in &positives {
            if index.contains(&r.neg()) {
                return Err(Error::DuplicateRoot(format!(
                    "{} and its negative both listed as positives",
                    r
                )));
            }
        }
        let mut roots: Vec<CoordVector> = positives.clone();
        roots.extend(positives.iter().map(CoordVector::neg));
        roots.sort();
        index.extend(positives.iter().map(CoordVector::neg));
        Ok(RootSystem {
            rank,
            roots,
            index,
            name,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// All roots (both halves), in canonical sorted order.
    pub fn roots(&self) -> &[CoordVector] {
        &self.roots
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn contains(&self, v: &CoordVector) -> bool {
        self.index.contains(v)
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// The reference base: standard unit vectors `(e_1, …, e_n)`.
    pub fn reference_base(&self) -> OrderedBase {
        OrderedBase {
            roots: (1..=self.rank)
                .map(|i| CoordVector::unit(self.rank, i))
                .collect(),
        }
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank {
            return Err(Error::IndexError(format!(
                "index {} outside 1..={}",
                i, self.rank
            )));
        }
        Ok(())
    }

    /// Base test: members are roots and form a lattice basis (det = ±1) and
    /// every root is pure-signed in base coordinates. Returns the positive
    /// half w.r.t. the base, sorted.
    fn base_profile(&self, b: &OrderedBase) -> Result<Vec<CoordVector>> {
        if b.rank() != self.rank {
            return Err(Error::NotABase(format!(
                "base rank {} does not match system rank {}",
                b.rank(),
                self.rank
            )));
        }
        for r in b.roots() {
            if !self.contains(r) {
                return Err(Error::NotABase(format!("{} is not a root", r)));
            }
        }
        let inv = exact::inverse_unimodular(&b.matrix())
            .ok_or_else(|| Error::NotABase("base matrix is not unimodular".into()))?;
        let mut positives = Vec::with_capacity(self.roots.len() / 2);
        for r in &self.roots {
            let coords = exact::mat_vec(&inv, r.coords());
            let has_pos = coords.iter().any(Signed::is_positive);
            let has_neg = coords.iter().any(Signed::is_negative);
            match (has_pos, has_neg) {
                (true, false) => positives.push(r.clone()),
                (false, true) => {}
                _ => {
                    return Err(Error::MixedSigns(format!(
                        "root {} has mixed signs in base {:?}",
                        r, b
                    )))
                }
            }
        }
        if positives.len() * 2 != self.roots.len() {
            return Err(Error::MixedSigns(
                "positive and negative halves are unbalanced".into(),
            ));
        }
        Ok(positives)
    }

    fn assert_base(&self, b: &OrderedBase) -> Result<()> {
        match self.base_profile(b) {
            Ok(_) => Ok(()),
            Err(Error::MixedSigns(m)) => Err(Error::NotABase(m)),
            Err(e) => Err(e),
        }
    }

    /// Root-string scan for `N_{ij}` without re-validating the base.
    fn cartan_integer_unchecked(&self, b: &OrderedBase, i: usize, j: usize) -> Result<i64> {
        if i == j {
            return Ok(-2);
        }
        let ai = b.root(i);
        let mut current = b.root(j).clone();
        let mut t = 0usize;
        loop {
            let next = current.add(ai);
            if !self.contains(&next) {
                return Ok(t as i64);
            }
            current = next;
            t += 1;
            if t >= STRING_CAP {
                return Err(Error::Unbounded(format!(
                    "string through {} at {} exceeds {} steps",
                    b.root(j),
                    ai,
                    STRING_CAP
                )));
            }
        }
    }

    /// The Cartan integer `N_{ij}` of a base: −2 on the diagonal, otherwise
    /// the length of the root string `α_j, α_j + α_i, …` inside the system.
    pub fn cartan_integer(&self, b: &OrderedBase, i: usize, j: usize) -> Result<i64> {
        self.check_index(i)?;
        self.check_index(j)?;
        self.assert_base(b)?;
        self.cartan_integer_unchecked(b, i, j)
    }

    fn reflect_raw(&self, b: &OrderedBase, i: usize) -> Result<OrderedBase> {
        let ai = b.root(i);
        let mut new_roots = Vec::with_capacity(self.rank);
        for j in 1..=self.rank {
            if j == i {
                new_roots.push(ai.neg());
            } else {
                let n = self.cartan_integer_unchecked(b, i, j)?;
                new_roots.push(b.root(j).add_scaled(ai, &Int::from(n)));
            }
        }
        Ok(OrderedBase { roots: new_roots })
    }

    /// Reflect a base at index i (1-based): negate `α_i`, shift every other
    /// `α_j` by `N_{ij} α_i`. The result is checked to be a base again;
    /// failure means the input set is not an FGRS.
    pub fn reflect_base(&self, b: &OrderedBase, i: usize) -> Result<OrderedBase> {
        self.check_index(i)?;
        self.assert_base(b)?;
        let reflected = self.reflect_raw(b, i)?;
        if let Err(e) = self.base_profile(&reflected) {
            return Err(Error::AxiomViolation(format!(
                "reflection of {:?} at {} is not a base: {}",
                b, i, e
            )));
        }
        Ok(reflected)
    }

    /// The involution matrix `G_i` with `B^{(i)} = B · G_i`.
    pub fn reflection_matrix(&self, b: &OrderedBase, i: usize) -> Result<ReflectionMatrix> {
        self.check_index(i)?;
        self.assert_base(b)?;
        let n = self.rank;
        let mut g = exact::identity(n);
        g[i - 1][i - 1] = Int::from(-1);
        for j in 1..=n {
            if j != i {
                g[i - 1][j - 1] = Int::from(self.cartan_integer_unchecked(b, i, j)?);
            }
        }
        ReflectionMatrix::new(g)
    }

    /// Partition the root set into the positive and negative halves w.r.t. a
    /// base. Mixed signs mean the tuple is not a base of this system.
    pub fn split_signs(&self, b: &OrderedBase) -> Result<(Vec<CoordVector>, Vec<CoordVector>)> {
        if b.rank() != self.rank {
            return Err(Error::NotABase(format!(
                "base rank {} does not match system rank {}",
                b.rank(),
                self.rank
            )));
        }
        for r in b.roots() {
            if !self.contains(r) {
                return Err(Error::NotABase(format!("{} is not a root", r)));
            }
        }
        if exact::inverse_unimodular(&b.matrix()).is_none() {
            return Err(Error::NotABase("base matrix is not unimodular".into()));
        }
        let positives = self.base_profile(b)?;
        let negatives: Vec<CoordVector> = positives.iter().map(CoordVector::neg).collect();
        Ok((positives, negatives))
    }

    /// BFS closure over reflections from the reference base, with the
    /// path-independence check on base ordering.
    pub(crate) fn enumerate_bases(&self) -> Result<BaseEnumeration> {
        let start = self.reference_base();
        let start_pos = self.base_profile(&start).map_err(|e| match e {
            Error::MixedSigns(m) | Error::NotABase(m) => {
                Error::AxiomViolation(format!("reference base fails the base test: {}", m))
            }
            other => other,
        })?;

        let mut bases = vec![start.clone()];
        let mut positives = vec![start_pos];
        let mut neighbor: Vec<Vec<usize>> = Vec::new();
        let mut by_tuple: HashMap<OrderedBase, usize> = HashMap::new();
        let mut by_set: HashMap<Vec<CoordVector>, usize> = HashMap::new();
        by_tuple.insert(start.clone(), 0);
        by_set.insert(start.set_key(), 0);

        let mut queue: VecDeque<usize> = VecDeque::new();
        queue.push_back(0);
        while let Some(v) = queue.pop_front() {
            let mut row = Vec::with_capacity(self.rank);
            for i in 1..=self.rank {
                let b = bases[v].clone();
                let reflected = self.reflect_raw(&b, i)?;
                let id = match by_tuple.get(&reflected) {
                    Some(&id) => id,
                    None => {
                        // Path-independence: the same set reached with a
                        // different ordering contradicts the ordering rule.
                        if let Some(&other) = by_set.get(&reflected.set_key()) {
                            if bases[other] != reflected {
                                return Err(Error::AxiomViolation(format!(
                                    "base {:?} reached with two different orderings",
                                    reflected.set_key()
                                )));
                            }
                        }
                        let pos = self.base_profile(&reflected).map_err(|e| {
                            Error::AxiomViolation(format!(
                                "reflection of base {} at {} fails the base test: {}",
                                v, i, e
                            ))
                        })?;
                        let id = bases.len();
                        if id >= BFS_VERTEX_CAP {
                            return Err(Error::CapExceeded(format!(
                                "more than {} bases reached",
                                BFS_VERTEX_CAP
                            )));
                        }
                        bases.push(reflected.clone());
                        positives.push(pos);
                        by_tuple.insert(reflected.clone(), id);
                        by_set.insert(reflected.set_key(), id);
                        queue.push_back(id);
                        id
                    }
                };
                row.push(id);
            }
            neighbor.push(row);
        }
        Ok(BaseEnumeration {
            bases,
            neighbor,
            positives,
        })
    }

    /// Check the defining axioms constructively. Never errors: all failures
    /// are collected in the report.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();

        // R ∩ Zα = {α, −α}: no root is a proper integer multiple of another.
        for a in &self.roots {
            let k = a
                .coords()
                .iter()
                .position(|c| !c.is_zero())
                .expect("roots are nonzero");
            for b in &self.roots {
                if a == b {
                    continue;
                }
                let (num, den) = (&b.coords()[k], &a.coords()[k]);
                if (num % den).is_zero() {
                    let t = num / den;
                    if !t.is_zero() && a.scale(&t) == *b && t != Int::from(-1) {
                        violations.push(format!("{} = {}·{} violates R ∩ Zα", b, t, a));
                    }
                }
            }
        }
        violations.sort();
        violations.dedup();

        // Reference base must pass the base test (axiom R1 for one base).
        if let Err(e) = self.base_profile(&self.reference_base()) {
            violations.push(format!("reference base: {}", e));
        }

        // Reflection closure (R3): enumerate and check the sign-flip rule.
        let mut bases = Vec::new();
        match self.enumerate_bases() {
            Err(e) => violations.push(format!("{}", e)),
            Ok(enumeration) => {
                let pos_sets: Vec<HashSet<&CoordVector>> = enumeration
                    .positives
                    .iter()
                    .map(|p| p.iter().collect())
                    .collect();
                'edges: for (u, row) in enumeration.neighbor.iter().enumerate() {
                    for (i0, &v) in row.iter().enumerate() {
                        // R^+_{B^{(i)}} ∩ R^-_B must be exactly {−α_i}.
                        let minus_ai = enumeration.bases[u].root(i0 + 1).neg();
                        let mut seen = 0usize;
                        let mut ok = true;
                        for &p in &pos_sets[v] {
                            if pos_sets[u].contains(&p.neg()) {
                                seen += 1;
                                if *p != minus_ai {
                                    ok = false;
                                }
                            }
                        }
                        if !(ok && seen == 1) {
                            violations.push(format!(
                                "sign-flip rule fails at base {} index {}",
                                u,
                                i0 + 1
                            ));
                            break 'edges;
                        }
                    }
                }
                bases = enumeration.bases;
            }
        }

        ValidationReport {
            valid: violations.is_empty(),
            bases_reached: bases.len(),
            bases,
            violations,
        }
    }

    /// `m_{ij}`: the number of positive roots in the nonnegative span of
    /// `α_i` and `α_j`; equals 1 when i = j.
    pub fn m_count(&self, b: &OrderedBase, i: usize, j: usize) -> Result<usize> {
        self.check_index(i)?;
        self.check_index(j)?;
        if i == j {
            self.assert_base(b)?;
            return Ok(1);
        }
        let inv = exact::inverse_unimodular(&b.matrix())
            .ok_or_else(|| Error::NotABase("base matrix is not unimodular".into()))?;
        let positives = self.base_profile(b).map_err(|e| match e {
            Error::MixedSigns(m) => Error::NotABase(m),
            other => other,
        })?;
        let mut count = 0usize;
        for r in &positives {
            let coords = exact::mat_vec(&inv, r.coords());
            let supported = coords
                .iter()
                .enumerate()
                .all(|(k, c)| c.is_zero() || k == i - 1 || k == j - 1);
            if supported {
                count += 1;
            }
        }
        Ok(count)
    }

    /// Find a partition of the index set with `m_{ij} = 2` across the cut in
    /// every base, or `None` if the system is irreducible (or invalid).
    pub fn reducible_split(&self) -> Option<ReducibleSplit> {
        if self.rank < 2 {
            return None;
        }
        let enumeration = self.enumerate_bases().ok()?;
        // Link i ~ j whenever some base sees m_{ij} ≠ 2.
        let n = self.rank;
        let mut linked = vec![vec![false; n]; n];
        for (v, b) in enumeration.bases.iter().enumerate() {
            let inv = exact::inverse_unimodular(&b.matrix())?;
            let mut support_counts = vec![vec![0usize; n]; n];
            for r in &enumeration.positives[v] {
                let coords = exact::mat_vec(&inv, r.coords());
                let support: Vec<usize> = coords
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, _)| k)
                    .collect();
                match support.len() {
                    1 => {
                        for j in 0..n {
                            support_counts[support[0]][j] += 1;
                            support_counts[j][support[0]] += 1;
                        }
                    }
                    2 => {
                        support_counts[support[0]][support[1]] += 1;
                        support_counts[support[1]][support[0]] += 1;
                    }
                    _ => {}
                }
            }
            for i in 0..n {
                for j in 0..n {
                    if i != j && support_counts[i][j] != 2 {
                        linked[i][j] = true;
                        linked[j][i] = true;
                    }
                }
            }
        }
        // Connected component of index 0 under the link relation.
        let mut in_left = vec![false; n];
        let mut stack = vec![0usize];
        in_left[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if linked[i][j] && !in_left[j] {
                    in_left[j] = true;
                    stack.push(j);
                }
            }
        }
        if in_left.iter().all(|&x| x) {
            return None;
        }
        let left_indices: Vec<usize> = (0..n).filter(|&k| in_left[k]).map(|k| k + 1).collect();
        let right_indices: Vec<usize> = (0..n).filter(|&k| !in_left[k]).map(|k| k + 1).collect();

        // Every root must live entirely inside one side (reference coords).
        let project = |keep: &[usize]| -> Option<RootSystem> {
            let mut positives = Vec::new();
            for r in &self.roots {
                let inside = r
                    .coords()
                    .iter()
                    .enumerate()
                    .all(|(k, c)| c.is_zero() || keep.contains(&(k + 1)));
                if !inside {
                    continue;
                }
                let proj: Vec<Int> = keep.iter().map(|&k| r.coords()[k - 1].clone()).collect();
                let v = CoordVector::from_big(proj);
                if v.coords().iter().any(Signed::is_positive)
                    && !v.coords().iter().any(Signed::is_negative)
                {
                    positives.push(v);
                }
            }
            RootSystem::from_positive_roots(keep.len(), positives, None).ok()
        };
        let left = project(&left_indices)?;
        let right = project(&right_indices)?;
        // All roots accounted for: |R| = |R'| + |R''| or the cut is bogus.
        if left.num_roots() + right.num_roots() != self.num_roots() {
            return None;
        }
        Some(ReducibleSplit {
            left_indices,
            right_indices,
            left,
            right,
        })
    }
}

/// Input format for `parse_roots`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootFormat {
    /// One positive root per line (or comma-separated), tokens `k` or `k^e`,
    /// `#` comments, and a required `rank: n` header.
    ChNotation,
    /// `{"rank": n, "positive_roots": [[…]], "name": optional}`.
    Json,
}

pub fn parse_roots(text: &str, format: RootFormat) -> Result<RootSystem> {
    match format {
        RootFormat::ChNotation => parse_ch(text),
        RootFormat::Json => parse_json(text),
    }
}

fn parse_ch(text: &str) -> Result<RootSystem> {
    let mut rank: Option<usize> = None;
    let mut positives = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(k) => &raw[..k],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("rank:") {
            if rank.is_some() {
                return Err(Error::ParseError(format!(
                    "line {}: duplicate rank header",
                    lineno + 1
                )));
            }
            let n: usize = rest.trim().parse().map_err(|_| {
                Error::ParseError(format!("line {}: bad rank value '{}'", lineno + 1, rest))
            })?;
            if n == 0 {
                return Err(Error::ParseError("rank must be at least 1".into()));
            }
            rank = Some(n);
            continue;
        }
        let n = rank.ok_or_else(|| {
            Error::ParseError(format!(
                "line {}: root listed before the 'rank: n' header",
                lineno + 1
            ))
        })?;
        for piece in line.split(',') {
            let piece = piece.trim();
            if piece.is_empty() {
                continue;
            }
            let mut coords = vec![Int::zero(); n];
            for token in piece.split_whitespace() {
                let (idx_str, exp_str) = match token.split_once('^') {
                    Some((a, b)) => (a, b),
                    None => (token, "1"),
                };
                let k: usize = idx_str.parse().map_err(|_| {
                    Error::ParseError(format!("line {}: bad token '{}'", lineno + 1, token))
                })?;
                let e: i64 = exp_str.parse().map_err(|_| {
                    Error::ParseError(format!("line {}: bad token '{}'", lineno + 1, token))
                })?;
                if k == 0 || k > n {
                    return Err(Error::RankMismatch(format!(
                        "line {}: index {} outside 1..={}",
                        lineno + 1,
                        k,
                        n
                    )));
                }
                if e <= 0 {
                    return Err(Error::ParseError(format!(
                        "line {}: nonpositive exponent in '{}'",
                        lineno + 1,
                        token
                    )));
                }
                if !coords[k - 1].is_zero() {
                    return Err(Error::ParseError(format!(
                        "line {}: index {} repeated within one root",
                        lineno + 1,
                        k
                    )));
                }
                coords[k - 1] = Int::from(e);
            }
            if coords.iter().all(Int::is_zero) {
                return Err(Error::ParseError(format!(
                    "line {}: empty root entry",
                    lineno + 1
                )));
            }
            positives.push(CoordVector::from_big(coords));
        }
    }
    let rank = rank.ok_or_else(|| Error::ParseError("missing 'rank: n' header".into()))?;
    RootSystem::from_positive_roots(rank, positives, None)
}

fn parse_json(text: &str) -> Result<RootSystem> {
    #[derive(serde::Deserialize)]
    struct Doc {
        rank: usize,
        positive_roots: Vec<Vec<i64>>,
        #[serde(default)]
        name: Option<String>,
    }
    let doc: Doc =
        serde_json::from_str(text).map_err(|e| Error::ParseError(format!("json: {}", e)))?;
    let mut positives = Vec::new();
    for v in doc.positive_roots {
        if v.len() != doc.rank {
            return Err(Error::RankMismatch(format!(
                "vector of length {} in a rank-{} system",
                v.len(),
                doc.rank
            )));
        }
        positives.push(CoordVector::new(v));
    }
    RootSystem::from_positive_roots(doc.rank, positives, doc.name)
}
