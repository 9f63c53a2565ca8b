//! Hamiltonian cycles on labeled Cayley graphs: word verification, the
//! closed forms for rank ≤ 2, the product construction for reducible
//! systems, a coset-lifting splice, and a pruned backtracking engine.
//!
//! A cycle is a start vertex plus a word of 1-based reflection letters; it
//! is accepted when the walk closes after visiting every vertex exactly
//! once. Letters may repeat (the rank-1 cycle walks its single edge twice).

use std::collections::VecDeque;
use std::fmt;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{build_graph, CayleyGraph};
use crate::roots::RootSystem;

/// How often (in node expansions) the search engines poll the deadline.
const DEADLINE_STRIDE: u64 = 4096;

/// A closed walk candidate: start vertex plus 1-based reflection letters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleWord {
    pub start: usize,
    pub word: Vec<usize>,
}

impl CycleWord {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("cycle words serialize")
    }
}

impl fmt::Display for CycleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, letter) in self.word.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", letter)?;
        }
        Ok(())
    }
}

/// Parse a whitespace-separated letter stream; tokens may be `3`, `s3`, or
/// `s_3`, and `#` starts a line comment. The start vertex defaults to 0.
pub fn parse_cycle_text(text: &str) -> Result<CycleWord> {
    let mut word = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        for token in line.split_whitespace() {
            let bare = token
                .strip_prefix("s_")
                .or_else(|| token.strip_prefix("s"))
                .unwrap_or(token);
            let letter: usize = bare
                .parse()
                .map_err(|_| Error::ParseError(format!("bad letter token {:?}", token)))?;
            if letter == 0 {
                return Err(Error::ParseError("letters are 1-based".into()));
            }
            word.push(letter);
        }
    }
    if word.is_empty() {
        return Err(Error::ParseError("empty cycle word".into()));
    }
    Ok(CycleWord { start: 0, word })
}

/// Parse the JSON form `{"start": 0, "word": [3,1,…]}`.
pub fn parse_cycle_json(text: &str) -> Result<CycleWord> {
    let cw: CycleWord =
        serde_json::from_str(text).map_err(|e| Error::ParseError(format!("json: {}", e)))?;
    if cw.word.is_empty() {
        return Err(Error::ParseError("empty cycle word".into()));
    }
    Ok(cw)
}

/// The outcome of walking a [`CycleWord`] on a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub accepted: bool,
    /// The word has exactly one letter per vertex.
    pub length_matches: bool,
    /// No vertex is revisited before the final step.
    pub all_distinct: bool,
    /// The final step lands on the start vertex.
    pub returns_to_start: bool,
    /// 1-based index of the first failing step, when the walk itself fails.
    pub first_failure: Option<usize>,
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.accepted {
            return f.write_str("accepted");
        }
        f.write_str("rejected")?;
        if let Some(t) = self.first_failure {
            write!(f, " at step {}", t)?;
        }
        if !self.length_matches {
            f.write_str("; word length differs from vertex count")?;
        }
        if !self.all_distinct {
            f.write_str("; a vertex is revisited")?;
        }
        if !self.returns_to_start {
            f.write_str("; walk does not close")?;
        }
        Ok(())
    }
}

/// Search strategy selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMethod {
    Auto,
    Backtrack,
    Lift,
    Product,
}

/// Knobs for the cycle search: strategy, wall-clock budget in seconds,
/// and neighbor ordering (canonical when deterministic, seeded otherwise).
#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    pub method: SearchMethod,
    pub time_budget: f64,
    pub deterministic: bool,
    /// Used only when `deterministic` is false.
    pub seed: u64,
    /// Worker cap for the seeded parallel search; 0 means one worker per
    /// first branch. Ignored when `deterministic` is true.
    pub threads: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            method: SearchMethod::Auto,
            time_budget: 60.0,
            deterministic: true,
            seed: 0,
            threads: 0,
        }
    }
}

impl SearchConfig {
    fn deadline(&self) -> Result<Instant> {
        if !self.time_budget.is_finite() || self.time_budget <= 0.0 {
            return Err(Error::SpecError(format!(
                "time budget must be positive, got {}",
                self.time_budget
            )));
        }
        Ok(Instant::now() + Duration::from_secs_f64(self.time_budget))
    }
}

/// A finite graph with one out-edge per (vertex, label) pair. Labels are
/// 1-based. The underlying adjacency must be symmetric, but the labels on
/// the two directions of an edge may differ (as they do for Cayley graphs
/// of non-involutive generators).
#[derive(Debug, Clone)]
pub struct LabeledGraph {
    /// out[v] = (label, neighbor) pairs, sorted by label.
    out: Vec<Vec<(usize, usize)>>,
}

impl LabeledGraph {
    /// Build from explicit out-lists of `(label, neighbor)` pairs.
    pub fn new(out: Vec<Vec<(usize, usize)>>) -> Result<Self> {
        let n = out.len();
        if n == 0 {
            return Err(Error::ParseError("empty labeled graph".into()));
        }
        let mut sorted = out;
        for (v, list) in sorted.iter_mut().enumerate() {
            list.sort_unstable();
            for (k, &(label, w)) in list.iter().enumerate() {
                if label == 0 {
                    return Err(Error::ParseError("labels are 1-based".into()));
                }
                if w >= n {
                    return Err(Error::ParseError(format!(
                        "neighbor {} outside 0..{}",
                        w, n
                    )));
                }
                if w == v {
                    return Err(Error::ParseError(format!("self-loop at {}", v)));
                }
                if k > 0 && list[k - 1].0 == label {
                    return Err(Error::ParseError(format!(
                        "vertex {} has two label-{} out-edges",
                        v, label
                    )));
                }
            }
        }
        for v in 0..n {
            for &(_, w) in &sorted[v] {
                if !sorted[w].iter().any(|&(_, x)| x == v) {
                    return Err(Error::ParseError(format!(
                        "edge ({}, {}) has no reverse direction",
                        v, w
                    )));
                }
            }
        }
        Ok(LabeledGraph { out: sorted })
    }

    pub fn from_cayley(g: &CayleyGraph) -> Self {
        let out = (0..g.order())
            .map(|v| (1..=g.rank()).map(|i| (i, g.neighbor(v, i))).collect())
            .collect();
        LabeledGraph { out }
    }

    pub fn order(&self) -> usize {
        self.out.len()
    }

    /// Follow the out-edge with the given letter, if present.
    pub fn step(&self, v: usize, letter: usize) -> Option<usize> {
        self.out[v]
            .iter()
            .find(|&&(label, _)| label == letter)
            .map(|&(_, w)| w)
    }

    /// Smallest letter carrying `u` to `v`.
    fn label_between(&self, u: usize, v: usize) -> Option<usize> {
        self.out[u]
            .iter()
            .find(|&&(_, w)| w == v)
            .map(|&(label, _)| label)
    }

    /// Unlabeled neighbor lists in label order, duplicates removed.
    fn plain_adjacency(&self) -> Vec<Vec<usize>> {
        self.out
            .iter()
            .map(|list| {
                let mut row = Vec::with_capacity(list.len());
                for &(_, w) in list {
                    if !row.contains(&w) {
                        row.push(w);
                    }
                }
                row
            })
            .collect()
    }

    /// Turn a vertex cycle into a cycle word (smallest label per step).
    fn word_of_vertex_cycle(&self, cycle: &[usize]) -> Result<CycleWord> {
        let n = cycle.len();
        let mut word = Vec::with_capacity(n);
        for t in 0..n {
            let (x, y) = (cycle[t], cycle[(t + 1) % n]);
            let letter = self.label_between(x, y).ok_or_else(|| {
                Error::Internal(format!("no edge between cycle steps {} and {}", x, y))
            })?;
            word.push(letter);
        }
        Ok(CycleWord {
            start: cycle[0],
            word,
        })
    }
}

/// Walk a cycle word on a Cayley graph and report what held.
pub fn verify_cycle(g: &CayleyGraph, c: &CycleWord) -> VerifyReport {
    verify_cycle_labeled(&LabeledGraph::from_cayley(g), c)
}

/// Walk a cycle word on a labeled graph and report what held.
pub fn verify_cycle_labeled(lg: &LabeledGraph, c: &CycleWord) -> VerifyReport {
    let n = lg.order();
    let k = c.word.len();
    let length_matches = k == n;
    let mut report = VerifyReport {
        accepted: false,
        length_matches,
        all_distinct: true,
        returns_to_start: false,
        first_failure: None,
    };
    if c.start >= n || k == 0 {
        report.first_failure = Some(0);
        return report;
    }
    let mut visited = vec![false; n];
    visited[c.start] = true;
    let mut v = c.start;
    for (idx, &letter) in c.word.iter().enumerate() {
        let t = idx + 1;
        let Some(w) = lg.step(v, letter) else {
            report.first_failure = Some(t);
            return report;
        };
        if t < k {
            if visited[w] {
                report.all_distinct = false;
                report.first_failure = Some(t);
                return report;
            }
            visited[w] = true;
        } else {
            report.returns_to_start = w == c.start;
            if !report.returns_to_start {
                report.first_failure = Some(t);
            }
        }
        v = w;
    }
    report.accepted = report.length_matches
        && report.all_distinct
        && report.returns_to_start
        && report.first_failure.is_none();
    report
}

/// The closed-form cycle for rank 1 (walk the single edge twice) and
/// rank 2 (alternate the two letters around the even cycle).
pub fn rank2_cycle(g: &CayleyGraph) -> Result<CycleWord> {
    let word = match g.rank() {
        1 => vec![1, 1],
        2 => (0..g.order()).map(|t| 1 + (t % 2)).collect(),
        r => {
            return Err(Error::RankError(format!(
                "closed form only covers rank ≤ 2, got {}",
                r
            )))
        }
    };
    let cw = CycleWord { start: 0, word };
    debug_assert!(verify_cycle(g, &cw).accepted);
    Ok(cw)
}

/// Combine component cycles into a cycle of the product graph.
///
/// `first` is a cycle of the left component's graph (k letters), `second`
/// of the right component's graph (l letters, l even); `left[p−1]` /
/// `right[q−1]` relabel component letters into the joint index set. The
/// output word h of length k·l copies the first word forward on even
/// strips, reversed on odd strips, and takes one step of the second word
/// every k positions.
pub fn product_cycle(
    first: &CycleWord,
    second: &CycleWord,
    left: &[usize],
    right: &[usize],
) -> Result<CycleWord> {
    let n = left.len() + right.len();
    let mut seen = vec![false; n + 1];
    for &i in left.iter().chain(right) {
        if i == 0 || i > n || seen[i] {
            return Err(Error::NotReducible(
                "relabeling maps must partition the joint index set".into(),
            ));
        }
        seen[i] = true;
    }
    if left.is_empty() || right.is_empty() {
        return Err(Error::NotReducible("both components must be non-empty".into()));
    }
    if first.start != 0 || second.start != 0 {
        return Err(Error::ComponentMismatch(
            "component cycles must start at the reference vertex".into(),
        ));
    }
    if first.word.iter().any(|&p| p == 0 || p > left.len()) {
        return Err(Error::ComponentMismatch(
            "first cycle uses letters outside its component".into(),
        ));
    }
    if second.word.iter().any(|&q| q == 0 || q > right.len()) {
        return Err(Error::ComponentMismatch(
            "second cycle uses letters outside its component".into(),
        ));
    }
    let k = first.word.len();
    let l = second.word.len();
    if k == 0 || l == 0 || l % 2 != 0 {
        return Err(Error::ComponentMismatch(format!(
            "component cycle lengths must be positive with the second even, got {} and {}",
            k, l
        )));
    }
    let r = l / 2;
    let z = k * l;
    let mut h = vec![0usize; z + 1];
    for x in 0..r {
        for t in 1..k {
            h[t + 2 * x * k] = left[first.word[t - 1] - 1];
        }
    }
    for u in 1..=l {
        h[k * u] = right[second.word[u - 1] - 1];
    }
    for x in 1..=r {
        for t in 1..k {
            h[t + (2 * x - 1) * k] = left[first.word[k - t - 1] - 1];
        }
    }
    debug_assert!(h[1..].iter().all(|&letter| letter != 0));
    Ok(CycleWord {
        start: 0,
        word: h[1..].to_vec(),
    })
}

/// Component ids of the graph with all `split`-labeled out-edges removed.
fn components_without(lg: &LabeledGraph, split: usize) -> (Vec<usize>, usize) {
    let n = lg.order();
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = count;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &(label, w) in &lg.out[v] {
                if label != split && comp[w] == usize::MAX {
                    comp[w] = count;
                    queue.push_back(w);
                }
            }
        }
        count += 1;
    }
    (comp, count)
}

/// A Hamiltonian vertex cycle of one component, using labels ≠ split.
fn component_cycle(
    lg: &LabeledGraph,
    split: usize,
    members: &[usize],
    anchor: usize,
    deadline: Instant,
    cfg: &SearchConfig,
) -> Result<Option<Vec<usize>>> {
    let m = members.len();
    if m == 1 {
        return Ok(None);
    }
    let non_split =
        |v: usize| lg.out[v].iter().filter(move |&&(label, _)| label != split);
    if m == 2 {
        let (u, w) = (members[0], members[1]);
        if non_split(u).any(|&(_, x)| x == w) {
            return Ok(Some(vec![u, w]));
        }
        return Ok(None);
    }
    if members.iter().all(|&v| {
        let mut targets: Vec<usize> = non_split(v).map(|&(_, w)| w).collect();
        targets.sort_unstable();
        targets.dedup();
        targets.len() == 2
    }) {
        // 2-regular component: trace the unique cycle.
        let mut cycle = vec![anchor];
        let mut prev = anchor;
        let mut cur = non_split(anchor).map(|&(_, w)| w).next().expect("degree 2");
        while cur != anchor {
            cycle.push(cur);
            let next = non_split(cur)
                .map(|&(_, w)| w)
                .find(|&w| w != prev)
                .expect("degree 2");
            prev = cur;
            cur = next;
        }
        if cycle.len() != m {
            return Ok(None);
        }
        return Ok(Some(cycle));
    }
    // Higher degree: backtrack on the induced subgraph.
    let mut local = vec![usize::MAX; lg.order()];
    for (idx, &v) in members.iter().enumerate() {
        local[v] = idx;
    }
    let adj: Vec<Vec<usize>> = members
        .iter()
        .map(|&v| {
            let mut row = Vec::new();
            for &(label, w) in &lg.out[v] {
                if label != split && local[w] != usize::MAX && !row.contains(&local[w]) {
                    row.push(local[w]);
                }
            }
            row
        })
        .collect();
    let start_local = local[anchor];
    let found = if cfg.deterministic {
        let mut search = Backtrack::new(&adj, start_local, deadline, None, None);
        search.run()?
    } else {
        parallel_backtrack(&adj, start_local, deadline, cfg.seed, cfg.threads)?
    };
    Ok(found.map(|cycle| cycle.into_iter().map(|idx| members[idx]).collect()))
}

/// Lift component cycles across the split label: find a Hamiltonian cycle
/// per component of the split-removed graph, then greedily splice them
/// along commuting squares. Returns `None` when the split does not
/// disconnect or the splice stalls.
pub fn lift_search(
    g: &CayleyGraph,
    split_index: usize,
    cfg: &SearchConfig,
) -> Result<Option<CycleWord>> {
    if split_index == 0 || split_index > g.rank() {
        return Err(Error::IndexError(format!(
            "split index {} outside 1..={}",
            split_index,
            g.rank()
        )));
    }
    let deadline = cfg.deadline()?;
    lift_on(&LabeledGraph::from_cayley(g), split_index, deadline, cfg)
}

/// [`lift_search`] for a bare labeled graph, starting at vertex 0.
pub fn lift_search_labeled(
    lg: &LabeledGraph,
    split_index: usize,
    cfg: &SearchConfig,
) -> Result<Option<CycleWord>> {
    let deadline = cfg.deadline()?;
    lift_on(lg, split_index, deadline, cfg)
}

fn lift_on(
    lg: &LabeledGraph,
    split: usize,
    deadline: Instant,
    cfg: &SearchConfig,
) -> Result<Option<CycleWord>> {
    let (comp_of, count) = components_without(lg, split);
    if count < 2 {
        return Ok(None);
    }
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); count];
    for (v, &c) in comp_of.iter().enumerate() {
        members[c].push(v);
    }
    let mut cycles: Vec<Option<Vec<usize>>> = vec![None; count];
    for c in 0..count {
        if Instant::now() > deadline {
            return Err(Error::BudgetExceeded);
        }
        let anchor = members[c][0];
        match component_cycle(lg, split, &members[c], anchor, deadline, cfg)? {
            Some(cycle) => cycles[c] = Some(cycle),
            None => return Ok(None),
        }
    }

    let home = comp_of[0];
    let mut current = cycles[home].take().expect("component cycle");
    let origin = current.iter().position(|&v| v == 0).expect("vertex 0");
    current.rotate_left(origin);
    let mut uncovered = count - 1;

    while uncovered > 0 {
        if Instant::now() > deadline {
            return Err(Error::BudgetExceeded);
        }
        let mut spliced = false;
        'scan: for p in 0..current.len() {
            let (u, w) = (current[p], current[(p + 1) % current.len()]);
            let (Some(u2), Some(w2)) = (lg.step(u, split), lg.step(w, split)) else {
                continue;
            };
            let c = comp_of[u2];
            if comp_of[w2] != c {
                continue;
            }
            let Some(cyc) = cycles[c].as_ref() else {
                continue;
            };
            let m = cyc.len();
            let pu = cyc.iter().position(|&v| v == u2).expect("member");
            let pw = cyc.iter().position(|&v| v == w2).expect("member");
            let seq: Vec<usize> = if (pu + 1) % m == pw {
                (0..m).map(|s| cyc[(pu + m - s) % m]).collect()
            } else if (pw + 1) % m == pu {
                (0..m).map(|s| cyc[(pu + s) % m]).collect()
            } else {
                continue;
            };
            debug_assert_eq!(seq[0], u2);
            debug_assert_eq!(seq[m - 1], w2);
            let mut next = Vec::with_capacity(current.len() + m);
            next.extend_from_slice(&current[..=p]);
            next.extend_from_slice(&seq);
            next.extend_from_slice(&current[p + 1..]);
            current = next;
            cycles[c] = None;
            uncovered -= 1;
            spliced = true;
            break 'scan;
        }
        if !spliced {
            return Ok(None);
        }
    }
    debug_assert_eq!(current.len(), lg.order());
    let cw = lg.word_of_vertex_cycle(&current)?;
    Ok(Some(cw))
}

/// Depth-first Hamiltonian-cycle search with three prunes: forced-degree,
/// disconnection, and unreachable-start cuts.
struct Backtrack<'a> {
    adj: &'a [Vec<usize>],
    start: usize,
    deadline: Instant,
    stop: Option<&'a AtomicBool>,
    rng: Option<ChaCha8Rng>,
    expansions: u64,
    visited: Vec<bool>,
    path: Vec<usize>,
    scratch: Vec<usize>,
}

impl<'a> Backtrack<'a> {
    fn new(
        adj: &'a [Vec<usize>],
        start: usize,
        deadline: Instant,
        stop: Option<&'a AtomicBool>,
        rng: Option<ChaCha8Rng>,
    ) -> Self {
        let n = adj.len();
        let mut visited = vec![false; n];
        visited[start] = true;
        Backtrack {
            adj,
            start,
            deadline,
            stop,
            rng,
            expansions: 0,
            visited,
            path: vec![start],
            scratch: vec![usize::MAX; n],
        }
    }

    /// Seed the search with a forced second vertex (for subtree workers).
    fn force_first(&mut self, second: usize) {
        self.visited[second] = true;
        self.path.push(second);
    }

    fn run(&mut self) -> Result<Option<Vec<usize>>> {
        if self.check_halt()? {
            return Ok(None);
        }
        self.dfs()
    }

    fn check_halt(&mut self) -> Result<bool> {
        if let Some(stop) = self.stop {
            if stop.load(Ordering::Relaxed) {
                return Ok(true);
            }
        }
        if Instant::now() > self.deadline {
            return Err(Error::BudgetExceeded);
        }
        Ok(false)
    }

    /// Degree forcing + reachability over unvisited vertices.
    fn prune(&mut self) -> bool {
        let n = self.adj.len();
        let v = *self.path.last().expect("non-empty path");
        let remaining = n - self.path.len();
        if remaining == 0 {
            return true;
        }
        // Every unvisited vertex needs two usable edge slots (endpoints of
        // the current path count as usable).
        for u in 0..n {
            if self.visited[u] {
                continue;
            }
            let avail = self.adj[u]
                .iter()
                .filter(|&&w| !self.visited[w] || w == v || w == self.start)
                .count();
            if avail < 2 {
                return false;
            }
        }
        if !self.adj[self.start]
            .iter()
            .any(|&w| !self.visited[w])
        {
            return false;
        }
        // All unvisited vertices must be reachable from the path endpoint.
        let stamp = self.path.len();
        let mut queue: VecDeque<usize> = VecDeque::new();
        let mut reached = 0usize;
        for &w in &self.adj[v] {
            if !self.visited[w] && self.scratch[w] != stamp {
                self.scratch[w] = stamp;
                reached += 1;
                queue.push_back(w);
            }
        }
        while let Some(x) = queue.pop_front() {
            for &w in &self.adj[x] {
                if !self.visited[w] && self.scratch[w] != stamp {
                    self.scratch[w] = stamp;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        // Reuse of `scratch` relies on strictly increasing stamps along a
        // DFS branch; equal stamps from a sibling branch would alias, so
        // clear marks that belong to this stamp before returning false.
        let ok = reached == remaining;
        if !ok || reached == 0 {
            for s in self.scratch.iter_mut() {
                if *s == stamp {
                    *s = usize::MAX;
                }
            }
            return ok;
        }
        for s in self.scratch.iter_mut() {
            if *s == stamp {
                *s = usize::MAX;
            }
        }
        true
    }

    fn dfs(&mut self) -> Result<Option<Vec<usize>>> {
        self.expansions += 1;
        if self.expansions % DEADLINE_STRIDE == 0 && self.check_halt()? {
            return Ok(None);
        }
        let v = *self.path.last().expect("non-empty path");
        if self.path.len() == self.adj.len() {
            if self.adj[v].contains(&self.start) {
                return Ok(Some(self.path.clone()));
            }
            return Ok(None);
        }
        if !self.prune() {
            return Ok(None);
        }
        let mut candidates: Vec<usize> = self.adj[v]
            .iter()
            .copied()
            .filter(|&w| !self.visited[w])
            .collect();
        if let Some(rng) = self.rng.as_mut() {
            candidates.shuffle(rng);
        }
        for w in candidates {
            self.visited[w] = true;
            self.path.push(w);
            let found = self.dfs()?;
            self.path.pop();
            self.visited[w] = false;
            if found.is_some() {
                return Ok(found);
            }
            if let Some(stop) = self.stop {
                if stop.load(Ordering::Relaxed) {
                    return Ok(None);
                }
            }
        }
        Ok(None)
    }
}

fn mix_seed(seed: u64, branch: usize) -> u64 {
    // splitmix64 step keeps worker streams decorrelated.
    let mut z = seed ^ (branch as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Explore disjoint first-branch subtrees on parallel workers; the first
/// cycle found wins and cancels the rest.
fn parallel_backtrack(
    adj: &[Vec<usize>],
    start: usize,
    deadline: Instant,
    seed: u64,
    threads: usize,
) -> Result<Option<Vec<usize>>> {
    enum Outcome {
        Found(Vec<usize>),
        Exhausted,
        TimedOut,
    }
    let branches: Vec<(usize, usize)> = adj[start].iter().copied().enumerate().collect();
    let workers = if threads == 0 {
        branches.len()
    } else {
        threads.min(branches.len()).max(1)
    };
    let stop = AtomicBool::new(false);
    let outcomes: Vec<Outcome> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let stop = &stop;
                let branches = &branches;
                scope.spawn(move || {
                    let mut timed_out = false;
                    for &(branch, second) in branches.iter().skip(w).step_by(workers) {
                        if stop.load(Ordering::Relaxed) {
                            break;
                        }
                        let rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, branch));
                        let mut search =
                            Backtrack::new(adj, start, deadline, Some(stop), Some(rng));
                        search.force_first(second);
                        match search.run() {
                            Ok(Some(cycle)) => {
                                stop.store(true, Ordering::Relaxed);
                                return Outcome::Found(cycle);
                            }
                            Ok(None) => {}
                            Err(_) => {
                                timed_out = true;
                                break;
                            }
                        }
                    }
                    if timed_out {
                        Outcome::TimedOut
                    } else {
                        Outcome::Exhausted
                    }
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search worker"))
            .collect()
    });
    let mut timed_out = false;
    let mut exhausted_all = true;
    for outcome in outcomes {
        match outcome {
            Outcome::Found(cycle) => return Ok(Some(cycle)),
            Outcome::TimedOut => {
                timed_out = true;
                exhausted_all = false;
            }
            Outcome::Exhausted => {}
        }
    }
    if timed_out || !exhausted_all {
        return Err(Error::BudgetExceeded);
    }
    // A stopped worker reports Exhausted only when a winner exists, which
    // returns above; reaching here means the space was truly exhausted.
    Ok(None)
}

/// Pruned depth-first search for a Hamiltonian cycle from the reference
/// vertex. `Ok(None)` means the search space was exhausted; a spent budget
/// is the distinct error [`Error::BudgetExceeded`].
pub fn backtrack_search(g: &CayleyGraph, cfg: &SearchConfig) -> Result<Option<CycleWord>> {
    backtrack_search_labeled(&LabeledGraph::from_cayley(g), cfg)
}

/// [`backtrack_search`] for a bare labeled graph, starting at vertex 0.
pub fn backtrack_search_labeled(
    lg: &LabeledGraph,
    cfg: &SearchConfig,
) -> Result<Option<CycleWord>> {
    let deadline = cfg.deadline()?;
    backtrack_on(lg, deadline, cfg)
}

fn backtrack_on(
    lg: &LabeledGraph,
    deadline: Instant,
    cfg: &SearchConfig,
) -> Result<Option<CycleWord>> {
    let adj = lg.plain_adjacency();
    let found = if cfg.deterministic {
        let mut search = Backtrack::new(&adj, 0, deadline, None, None);
        search.run()?
    } else {
        parallel_backtrack(&adj, 0, deadline, cfg.seed, cfg.threads)?
    };
    match found {
        Some(cycle) => Ok(Some(lg.word_of_vertex_cycle(&cycle)?)),
        None => Ok(None),
    }
}

/// Find a Hamiltonian cycle of the system's Cayley graph. In auto mode the
/// dispatch order is: rank ≤ 2 closed form, product over a reducible
/// split, lifting across a disconnecting label, then backtracking. The
/// returned word is always re-verified.
pub fn find(sys: &RootSystem, g: &CayleyGraph, cfg: &SearchConfig) -> Result<CycleWord> {
    let deadline = cfg.deadline()?;
    let cw = find_inner(sys, g, cfg, deadline)?;
    let report = verify_cycle(g, &cw);
    if !report.accepted {
        return Err(Error::Internal(format!(
            "search produced an invalid cycle: {}",
            report
        )));
    }
    Ok(cw)
}

fn find_inner(
    sys: &RootSystem,
    g: &CayleyGraph,
    cfg: &SearchConfig,
    deadline: Instant,
) -> Result<CycleWord> {
    let lg = LabeledGraph::from_cayley(g);
    match cfg.method {
        SearchMethod::Product => product_path(sys, cfg, deadline),
        SearchMethod::Backtrack => match backtrack_on(&lg, deadline, cfg)? {
            Some(cw) => Ok(cw),
            None => Err(Error::NoCycleFound),
        },
        SearchMethod::Lift => {
            for i in 1..=g.rank() {
                if let Some(cw) = lift_on(&lg, i, deadline, cfg)? {
                    return Ok(cw);
                }
            }
            // No disconnecting label cooperated; fall back to the engine
            // that is complete.
            match backtrack_on(&lg, deadline, cfg)? {
                Some(cw) => Ok(cw),
                None => Err(Error::NoCycleFound),
            }
        }
        SearchMethod::Auto => {
            if g.rank() <= 2 {
                return rank2_cycle(g);
            }
            if sys.reducible_split().is_some() {
                return product_path(sys, cfg, deadline);
            }
            for i in 1..=g.rank() {
                if let Some(cw) = lift_on(&lg, i, deadline, cfg)? {
                    return Ok(cw);
                }
            }
            match backtrack_on(&lg, deadline, cfg)? {
                Some(cw) => Ok(cw),
                None => Err(Error::NoCycleFound),
            }
        }
    }
}

fn product_path(sys: &RootSystem, cfg: &SearchConfig, deadline: Instant) -> Result<CycleWord> {
    let split = sys
        .reducible_split()
        .ok_or_else(|| Error::NotReducible("the system has no reducible split".into()))?;
    let sub_cfg = SearchConfig {
        method: SearchMethod::Auto,
        ..*cfg
    };
    let g_left = build_graph(&split.left)?;
    let g_right = build_graph(&split.right)?;
    let cycle_left = find_component(&split.left, &g_left, &sub_cfg, deadline)?;
    let cycle_right = find_component(&split.right, &g_right, &sub_cfg, deadline)?;
    product_cycle(
        &cycle_left,
        &cycle_right,
        &split.left_indices,
        &split.right_indices,
    )
}

fn find_component(
    sys: &RootSystem,
    g: &CayleyGraph,
    cfg: &SearchConfig,
    deadline: Instant,
) -> Result<CycleWord> {
    let cw = find_inner(sys, g, cfg, deadline)?;
    let report = verify_cycle(g, &cw);
    if !report.accepted {
        return Err(Error::Internal(format!(
            "component search produced an invalid cycle: {}",
            report
        )));
    }
    Ok(cw)
}
