//! Acceptance suite: the nine headline guarantees, one test each. Every
//! test prints a single `criterion N: pass` (or `skip`) line; criteria that
//! need externally supplied classification files skip cleanly when
//! `WEYLHAM_DATA_DIR` does not provide them.

use std::collections::{HashMap, HashSet};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use num::{BigInt, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use weylham_core::families::{b_sequence, classical_gram, super_cartan_integer};
use weylham_core::{
    alt_generators, build_classical, build_family, build_graph, build_perm_graph, data,
    extract_cartan_scheme, find, generate_super_fgrs, graph_distance, graph_spectrum,
    is_bipartite_ramanujan, parse_cycle_text, parse_roots, product_cycle, quotient_classes,
    verify_cycle, verify_perm_cycle, ClassicalType, CoordVector, Error, Permutation, QuotientMode,
    Rat, RootFormat, RootSystem, SearchConfig, Spectrum, SuperDatum,
};

fn nr1() -> RootSystem {
    parse_roots(data::CH_RANK3_NR1, RootFormat::ChNotation).unwrap()
}

fn nr2() -> RootSystem {
    parse_roots(data::CH_RANK3_NR2, RootFormat::ChNotation).unwrap()
}

/// The r-fold direct sum of rank-1 systems: positives are exactly the units.
fn units(r: usize) -> RootSystem {
    let mut text = format!("rank: {}\n", r);
    for i in 1..=r {
        text.push_str(&format!("{}\n", i));
    }
    parse_roots(&text, RootFormat::ChNotation).unwrap()
}

fn external_dir() -> Option<PathBuf> {
    let dir = PathBuf::from(std::env::var_os("WEYLHAM_DATA_DIR")?);
    dir.is_dir().then_some(dir)
}

/// Load `ch-rank<r>-nr<k>.txt` from the external data directory. `None` when
/// the file is absent; a present but unparsable file fails the suite.
fn external_system(dir: &Path, rank: usize, nr: usize) -> Option<RootSystem> {
    let path = dir.join(format!("ch-rank{}-nr{}.txt", rank, nr));
    if !path.is_file() {
        return None;
    }
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("cannot read {}: {}", path.display(), e));
    Some(
        parse_roots(&text, RootFormat::ChNotation)
            .unwrap_or_else(|e| panic!("{} does not parse: {}", path.display(), e)),
    )
}

/// The systems used for the structural property sweeps.
fn zoo() -> Vec<(String, RootSystem)> {
    vec![
        ("Nr. 1".into(), nr1()),
        ("Nr. 2".into(), nr2()),
        ("A1+A1+A1".into(), units(3)),
        ("A3".into(), build_family("a:3").unwrap()),
        ("B3".into(), build_family("b:3").unwrap()),
        ("G2".into(), build_family("g2").unwrap()),
        ("Phi(3;1,2)".into(), build_family("phi:3:1,2").unwrap()),
    ]
}

#[test]
fn criterion_1_embedded_cycle_words_verify_exactly() {
    for (sys, idx) in [(nr1(), 0usize), (nr2(), 1)] {
        let entry = &data::rank3_cycles()[idx];
        let g = build_graph(&sys).unwrap();
        let cw = parse_cycle_text(entry.text).unwrap();
        assert_eq!(cw.word.len(), entry.declared_len);
        let t0 = Instant::now();
        let report = verify_cycle(&g, &cw);
        let elapsed = t0.elapsed();
        assert!(
            report.accepted,
            "Nr. {} word rejected: {}",
            entry.nr, report
        );
        assert!(report.first_failure.is_none());
        assert!(
            elapsed < Duration::from_millis(100),
            "Nr. {} verification took {:?}",
            entry.nr,
            elapsed
        );
    }
    println!("criterion 1: pass - embedded 24- and 32-letter words verify exactly in < 0.1 s each");
}

#[test]
fn criterion_2_graph_cardinalities_and_structure() {
    let t0 = Instant::now();
    for (sys, expected_order) in [(nr1(), 24usize), (nr2(), 32)] {
        let g = build_graph(&sys).unwrap();
        assert_eq!(g.order(), expected_order);
        // 3-regular: one edge per label, and simplicity makes them distinct.
        assert_eq!(g.edges().len(), 3 * g.order() / 2);
        for v in 0..g.order() {
            let targets: HashSet<usize> = (1..=3).map(|i| g.neighbor(v, i)).collect();
            assert_eq!(targets.len(), 3);
            assert!(!targets.contains(&v));
        }
        // Bipartite: the stored 2-coloring is proper and balanced.
        let coloring = g.coloring();
        for (u, v, _) in g.edges() {
            assert_ne!(coloring[u], coloring[v]);
        }
        let whites = coloring.iter().filter(|&&c| c == 0).count();
        assert_eq!(whites * 2, g.order());
        // Connected: every vertex is reachable from the reference base.
        for v in 0..g.order() {
            assert!(graph_distance(&g, g.start(), v) < g.order());
        }
        assert_eq!(g.order() % 2, 0);
    }
    // The graph orders coincide with the declared word lengths.
    assert_eq!(data::rank3_cycles()[0].declared_len, 24);
    assert_eq!(data::rank3_cycles()[1].declared_len, 32);
    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_millis(100), "took {:?}", elapsed);
    println!("criterion 2: pass - |V| = 24 and 32; both graphs 3-regular, bipartite, connected, even order");
}

#[test]
fn criterion_3_second_eigenvalues_and_ramanujan_bounds() {
    let t0 = Instant::now();
    let expected = [(nr1(), 2.4142136f64), (nr2(), 2.5615528)];
    for (sys, lambda2) in expected {
        let g = build_graph(&sys).unwrap();
        let s = graph_spectrum(&g).unwrap();
        assert!(
            (s.lambda(2) - lambda2).abs() < 1e-5,
            "second eigenvalue {} differs from {}",
            s.lambda(2),
            lambda2
        );
        assert!(is_bipartite_ramanujan(&s).unwrap());
    }
    // A synthetic interior value above 2*sqrt(2) must fail the 3-regular
    // bipartite bound.
    let synthetic =
        Spectrum::new(vec![3.0, 2.8565004, 0.0, -2.8565004, -3.0], 3.0).unwrap();
    assert!(2.8565004 > 2.0 * 2.0f64.sqrt());
    assert!(!is_bipartite_ramanujan(&synthetic).unwrap());
    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {:?}", elapsed);
    println!("criterion 3: pass - second eigenvalues 2.4142136 and 2.5615528 within 1e-5, both Ramanujan; 2.8565004 fails the bound");
}

#[test]
fn criterion_4_external_classification_suite() {
    let Some(dir) = external_dir() else {
        println!("criterion 4: skip - WEYLHAM_DATA_DIR is not set; external classification files absent");
        return;
    };
    let mut words_verified = 0usize;
    let mut lambda_checked = 0usize;
    let mut absent = 0usize;
    let mut external_used = 0usize;
    for entry in data::rank3_cycles() {
        let sys = match external_system(&dir, 3, entry.nr) {
            Some(sys) => {
                external_used += 1;
                sys
            }
            None if entry.nr == 1 => nr1(),
            None if entry.nr == 2 => nr2(),
            None => {
                absent += 1;
                continue;
            }
        };
        let g = build_graph(&sys)
            .unwrap_or_else(|e| panic!("rank-3 Nr. {} graph: {}", entry.nr, e));
        assert_eq!(
            g.order(),
            entry.declared_len,
            "rank-3 Nr. {}: graph order vs declared length",
            entry.nr
        );
        let cw = parse_cycle_text(entry.text).unwrap();
        let report = verify_cycle(&g, &cw);
        assert!(
            report.accepted,
            "rank-3 Nr. {} word rejected: {}",
            entry.nr, report
        );
        words_verified += 1;
        let s = graph_spectrum(&g).unwrap();
        let reference = data::lambda2_rank3(entry.nr).unwrap();
        assert!(
            (s.lambda(2) - reference).abs() < 1e-5,
            "rank-3 Nr. {}: second eigenvalue {} vs reference {}",
            entry.nr,
            s.lambda(2),
            reference
        );
        lambda_checked += 1;
    }
    for entry in data::rank4_cycles() {
        let Some(sys) = external_system(&dir, 4, entry.nr) else {
            absent += 1;
            continue;
        };
        external_used += 1;
        let g = build_graph(&sys)
            .unwrap_or_else(|e| panic!("rank-4 Nr. {} graph: {}", entry.nr, e));
        assert_eq!(g.order(), entry.declared_len, "rank-4 Nr. {}", entry.nr);
        let cw = parse_cycle_text(entry.text).unwrap();
        let report = verify_cycle(&g, &cw);
        assert!(
            report.accepted,
            "rank-4 Nr. {} word rejected: {}",
            entry.nr, report
        );
        words_verified += 1;
    }
    if external_used == 0 {
        println!(
            "criterion 4: skip - WEYLHAM_DATA_DIR has no ch-rank3/4 files ({} entries not covered)",
            absent
        );
        return;
    }
    println!(
        "criterion 4: pass - {} words verified ({} from external files), {} second-eigenvalues matched, {} files absent",
        words_verified, external_used, lambda_checked, absent
    );
}

#[test]
fn criterion_5_alternating_group_words_verify() {
    let t0 = Instant::now();
    for w in data::alt_words() {
        let gens = alt_generators(w.n).unwrap();
        let pg = build_perm_graph(&gens).unwrap();
        assert_eq!(pg.order(), w.declared_len);
        let report = verify_perm_cycle(&pg, w.text).unwrap();
        assert!(report.accepted, "Alt({}) word rejected: {}", w.n, report);
    }
    // The Alt(4) listing needs the documented correction at cycle positions
    // 5 and 6: two entries print bare element numbers 8 and 12 where the
    // elements (1 4 2) and (2 4 3) are meant. The walk starts at the
    // identity (position 1), so those are the products of the first 4 and 5
    // letters; walking the embedded word confirms it passes exactly through
    // those elements there.
    let gens = alt_generators(4).unwrap();
    let by_name: HashMap<&str, &Permutation> =
        gens.iter().map(|(name, p)| (name.as_str(), p)).collect();
    let mut element = Permutation::identity(4);
    let mut position5: Option<Permutation> = None;
    let mut position6: Option<Permutation> = None;
    for (t, token) in data::alt_words()[0].text.split_whitespace().enumerate() {
        element = element.compose(by_name[token]);
        if t + 1 == 4 {
            position5 = Some(element.clone());
        }
        if t + 1 == 5 {
            position6 = Some(element.clone());
        }
    }
    assert!(element.is_identity(), "the walk must close");
    assert_eq!(
        position5.unwrap(),
        Permutation::from_cycles(4, &[vec![1, 4, 2]]).unwrap()
    );
    assert_eq!(
        position6.unwrap(),
        Permutation::from_cycles(4, &[vec![2, 4, 3]]).unwrap()
    );
    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {:?}", elapsed);
    println!("criterion 5: pass - Alt(4), Alt(5), Alt(6) words verify; Alt(4) walk hits (1 4 2) and (2 4 3) at positions 5-6, confirming the logged listing correction");
}

#[test]
fn criterion_6_search_finds_cycles_across_the_zoo() {
    let targets: Vec<(String, RootSystem)> = vec![
        ("Nr. 1".into(), nr1()),
        ("Nr. 2".into(), nr2()),
        ("A3".into(), build_family("a:3").unwrap()),
        ("B3".into(), build_family("b:3").unwrap()),
        ("A1+A1".into(), units(2)),
        ("A2".into(), build_family("a:2").unwrap()),
        ("B2".into(), build_family("b:2").unwrap()),
        ("C2".into(), build_family("c:2").unwrap()),
        ("G2".into(), build_family("g2").unwrap()),
        ("A1+A1+A1".into(), units(3)),
    ];
    let cfg = SearchConfig::default();
    assert_eq!(cfg.time_budget, 60.0);
    let mut builtin = 0usize;
    for (name, sys) in &targets {
        let g = build_graph(sys).unwrap();
        let t0 = Instant::now();
        let cw = find(sys, &g, &cfg).unwrap_or_else(|e| panic!("{}: {}", name, e));
        let elapsed = t0.elapsed();
        assert_eq!(cw.word.len(), g.order(), "{}", name);
        assert!(verify_cycle(&g, &cw).accepted, "{}", name);
        assert!(
            elapsed < Duration::from_secs(60),
            "{} took {:?}",
            name,
            elapsed
        );
        builtin += 1;
    }
    let mut external = 0usize;
    if let Some(dir) = external_dir() {
        for entry in data::rank3_cycles().iter().filter(|e| e.declared_len <= 240) {
            if entry.nr <= 2 {
                continue; // already covered above
            }
            let Some(sys) = external_system(&dir, 3, entry.nr) else {
                continue;
            };
            let g = build_graph(&sys).unwrap();
            let t0 = Instant::now();
            let cw =
                find(&sys, &g, &cfg).unwrap_or_else(|e| panic!("rank-3 Nr. {}: {}", entry.nr, e));
            let elapsed = t0.elapsed();
            assert!(verify_cycle(&g, &cw).accepted, "rank-3 Nr. {}", entry.nr);
            assert!(
                elapsed < Duration::from_secs(60),
                "rank-3 Nr. {} took {:?}",
                entry.nr,
                elapsed
            );
            external += 1;
        }
    }
    println!(
        "criterion 6: pass - cycles found and verified for {} built-in systems and {} external rank-3 systems, each within 60 s",
        builtin, external
    );
}

#[test]
fn criterion_7_property_suites() {
    // (a) involution and path-independence of base reflection over the full
    // enumeration of every system in the sweep.
    let sweep = zoo();
    for (name, sys) in &sweep {
        let g = build_graph(sys).unwrap();
        let mut keys = HashSet::new();
        for base in g.bases() {
            assert!(keys.insert(base.set_key()), "{}: duplicate base", name);
        }
        for v in 0..g.order() {
            for i in 1..=g.rank() {
                let w = g.neighbor(v, i);
                assert_eq!(g.neighbor(w, i), v, "{}: involution at ({}, {})", name, v, i);
                let reflected = sys.reflect_base(&g.bases()[v], i).unwrap();
                assert_eq!(
                    reflected.roots(),
                    g.bases()[w].roots(),
                    "{}: path-independence at ({}, {})",
                    name,
                    v,
                    i
                );
            }
        }
    }
    // (b) dihedral 2m-closure with distinct intermediates.
    for (name, sys) in &sweep {
        let g = build_graph(sys).unwrap();
        for v in 0..g.order() {
            for i in 1..=g.rank() {
                for j in (i + 1)..=g.rank() {
                    let m = sys.m_count(&g.bases()[v], i, j).unwrap();
                    let mut x = v;
                    let mut visited = HashSet::new();
                    for t in 0..2 * m {
                        assert!(
                            visited.insert(x),
                            "{}: dihedral orbit of ({}, {}, {}) revisits early",
                            name,
                            v,
                            i,
                            j
                        );
                        let label = if t % 2 == 0 { i } else { j };
                        x = g.neighbor(x, label);
                    }
                    assert_eq!(x, v, "{}: (s_{} s_{})^{} does not close", name, i, j, m);
                }
            }
        }
    }
    // (c) the distance identity, exhaustively on systems with |V| <= 200.
    for (name, sys) in &sweep {
        let g = build_graph(sys).unwrap();
        if g.order() > 200 {
            continue;
        }
        for u in 0..g.order() {
            let negatives_of_u: HashSet<CoordVector> =
                g.base_positives(u).iter().map(|r| r.neg()).collect();
            for v in 0..g.order() {
                let overlap = g
                    .base_positives(v)
                    .iter()
                    .filter(|r| negatives_of_u.contains(r))
                    .count();
                assert_eq!(
                    graph_distance(&g, u, v),
                    overlap,
                    "{}: distance identity at ({}, {})",
                    name,
                    u,
                    v
                );
            }
        }
    }
    // (d) every root appears in some base.
    for (name, sys) in &sweep {
        let g = build_graph(sys).unwrap();
        let mut union: HashSet<CoordVector> = HashSet::new();
        for base in g.bases() {
            union.extend(base.roots().iter().cloned());
        }
        let all: HashSet<CoordVector> = sys.roots().iter().cloned().collect();
        assert_eq!(union, all, "{}: base union differs from the root set", name);
    }
    // (e) product cycles on randomized small component pairs.
    let pool: Vec<RootSystem> = vec![
        units(1),
        units(2),
        build_family("a:2").unwrap(),
        build_family("b:2").unwrap(),
        build_family("g2").unwrap(),
    ];
    let cfg = SearchConfig::default();
    let component_cycles: Vec<_> = pool
        .iter()
        .map(|sys| {
            let g = build_graph(sys).unwrap();
            (find(sys, &g, &cfg).unwrap(), g.order())
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x00C0_FFEE);
    for trial in 0..100 {
        let a = rng.random_range(0..pool.len());
        let b = rng.random_range(0..pool.len());
        let (prod, left, right) = direct_sum(&pool[a], &pool[b]);
        let g = build_graph(&prod).unwrap();
        assert_eq!(g.order(), component_cycles[a].1 * component_cycles[b].1);
        let cw = product_cycle(&component_cycles[a].0, &component_cycles[b].0, &left, &right)
            .unwrap_or_else(|e| panic!("trial {}: {}", trial, e));
        assert_eq!(cw.word.len(), g.order(), "trial {}", trial);
        assert!(verify_cycle(&g, &cw).accepted, "trial {}", trial);
    }
    // (f) the b-recursion against independently coded closed forms on
    // random rational data.
    let mut rng = ChaCha8Rng::seed_from_u64(0xB5E9_5EED);
    for trial in 0..1000 {
        let aii = random_rat(&mut rng);
        let aij = random_rat(&mut rng);
        let ajj = random_rat(&mut rng);
        let odd_i = rng.random_bool(0.5);
        let matrix = vec![
            vec![aii.clone(), aij.clone()],
            vec![aij.clone(), ajj.clone()],
        ];
        let odd: Vec<usize> = if odd_i { vec![1] } else { vec![] };
        let datum = SuperDatum::new(matrix, odd).unwrap();
        match b_sequence(&datum, 1, 2, 40) {
            Ok(seq) => {
                assert!(seq.last().unwrap().is_zero());
                for (k, value) in seq.iter().enumerate() {
                    let expected = closed_b(&aii, &aij, odd_i, k + 1);
                    assert_eq!(*value, expected, "trial {}: b_{}", trial, k + 1);
                    if k + 1 < seq.len() {
                        assert!(!value.is_zero());
                    }
                }
            }
            Err(Error::CapExceeded(_)) => {
                for m in 1..=40 {
                    assert!(
                        !closed_b(&aii, &aij, odd_i, m).is_zero(),
                        "trial {}: closed form vanishes at {} but the recursion never did",
                        trial,
                        m
                    );
                }
            }
            Err(e) => panic!("trial {}: {}", trial, e),
        }
    }
    println!("criterion 7: pass - involution/path-independence, dihedral closure, distance identity, base coverage, 100 product cycles, 1000 b-sequence checks");
}

/// Block direct sum of two systems, plus the 1-based label partition.
fn direct_sum(a: &RootSystem, b: &RootSystem) -> (RootSystem, Vec<usize>, Vec<usize>) {
    let r1 = a.rank();
    let r2 = b.rank();
    let mut text = format!("rank: {}\n", r1 + r2);
    let append = |sys: &RootSystem, offset: usize, text: &mut String| {
        for root in sys.roots() {
            if root.coords().iter().any(Signed::is_negative) {
                continue;
            }
            let tokens: Vec<String> = root
                .coords()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| format!("{}^{}", k + 1 + offset, c))
                .collect();
            text.push_str(&tokens.join(" "));
            text.push('\n');
        }
    };
    append(a, 0, &mut text);
    append(b, r1, &mut text);
    let prod = parse_roots(&text, RootFormat::ChNotation).unwrap();
    (prod, (1..=r1).collect(), (r1 + 1..=r1 + r2).collect())
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    let num: i64 = rng.random_range(-6..=6);
    let den: i64 = rng.random_range(1..=4);
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// The closed forms: with s = +1 for an even i and -1 for an odd one,
/// b_{2n} = n(((n-1) + n s) a_ii + (1 + s) a_ij) and
/// b_{2n+1} = ((n+1) + n s)(n a_ii + a_ij).
fn closed_b(aii: &Rat, aij: &Rat, odd_i: bool, m: usize) -> Rat {
    let s: i64 = if odd_i { -1 } else { 1 };
    let int = |v: i64| Rat::from_integer(BigInt::from(v));
    if m % 2 == 0 {
        let n = (m / 2) as i64;
        int(n) * (int((n - 1) + n * s) * aii + int(1 + s) * aij)
    } else {
        let n = ((m - 1) / 2) as i64;
        int((n + 1) + n * s) * (int(n) * aii + aij)
    }
}

#[test]
fn criterion_8_quotients_and_cartan_schemes() {
    let sys = nr2();
    let g = build_graph(&sys).unwrap();
    let classes = quotient_classes(&sys, &g, QuotientMode::Smallest).unwrap();
    assert_eq!(classes.len(), 4);

    let mut rank5_note = String::from("rank-5 Nr. 5 data absent");
    if let Some(dir) = external_dir() {
        if let Some(big) = external_system(&dir, 5, 5) {
            let g5 = build_graph(&big).unwrap();
            let classes5 = quotient_classes(&big, &g5, QuotientMode::Smallest).unwrap();
            assert_eq!(classes5.len(), 56);
            rank5_note = "rank-5 Nr. 5 has 56 classes".into();
        }
    }

    for (name, sys) in &zoo() {
        let g = build_graph(sys).unwrap();
        let scheme = extract_cartan_scheme(sys, &g).unwrap();
        for (a, matrix) in scheme.matrices.iter().enumerate() {
            for i in 0..g.rank() {
                assert_eq!(matrix[i][i], 2, "{}: diagonal of object {}", name, a);
                let image = scheme.action[a][i];
                assert_eq!(
                    scheme.matrices[image][i], matrix[i],
                    "{}: row {} must be invariant under its own reflection",
                    name, i
                );
            }
        }
        for (a, members) in scheme.classes.iter().enumerate() {
            let rep = &g.bases()[members[0]];
            for i in 1..=g.rank() {
                for j in (i + 1)..=g.rank() {
                    let m = sys.m_count(rep, i, j).unwrap();
                    let mut x = a;
                    for t in 0..2 * m {
                        let label = if t % 2 == 0 { i } else { j };
                        x = scheme.action[x][label - 1];
                    }
                    assert_eq!(
                        x, a,
                        "{}: (s_{} s_{})^{} is not the identity on object {}",
                        name, i, j, m, a
                    );
                }
            }
        }
    }
    println!(
        "criterion 8: pass - Nr. 2 has 4 smallest-equivalence classes ({}); scheme invariants hold on all swept systems",
        rank5_note
    );
}

#[test]
fn criterion_9_super_pipeline_reproductions() {
    // The generic rank-3 super datum generates exactly the Nr. 2 root set.
    let datum = SuperDatum::from_json_str(data::D21_GENERIC_JSON).unwrap();
    let sys = generate_super_fgrs(&datum, 4096).unwrap();
    assert_eq!(sys.roots(), nr2().roots());

    // Purely even data reproduce the classical constructions.
    let classical: Vec<(ClassicalType, usize)> = vec![
        (ClassicalType::A, 1),
        (ClassicalType::A, 2),
        (ClassicalType::A, 3),
        (ClassicalType::B, 2),
        (ClassicalType::B, 3),
        (ClassicalType::C, 3),
        (ClassicalType::D, 4),
        (ClassicalType::F4, 4),
        (ClassicalType::G2, 2),
    ];
    for (t, n) in classical {
        let gram = classical_gram(t, n).unwrap();
        let even = SuperDatum::new(gram, []).unwrap();
        let from_datum = generate_super_fgrs(&even, 4096).unwrap();
        let reference = build_classical(t, n).unwrap();
        assert_eq!(
            from_datum.roots(),
            reference.roots(),
            "{:?} rank {}",
            t,
            n
        );
    }

    // Isotropic odd directions always have a Cartan integer of 0 or 1.
    let mut rng = ChaCha8Rng::seed_from_u64(0x0DD5_EED5);
    for trial in 0..1000 {
        let r: usize = rng.random_range(2..=3);
        let mut matrix = vec![vec![Rat::from_integer(BigInt::from(0)); r]; r];
        for x in 0..r {
            for y in 0..=x {
                let value = random_rat(&mut rng);
                matrix[x][y] = value.clone();
                matrix[y][x] = value;
            }
        }
        let i: usize = rng.random_range(1..=r);
        matrix[i - 1][i - 1] = Rat::from_integer(BigInt::from(0));
        let mut odd = vec![i];
        for j in 1..=r {
            if j != i && rng.random_bool(0.5) {
                odd.push(j);
            }
        }
        let datum = SuperDatum::new(matrix, odd).unwrap();
        for j in 1..=r {
            if j == i {
                continue;
            }
            let n_ij = super_cartan_integer(&datum, i, j)
                .unwrap_or_else(|e| panic!("trial {}: ({}, {}): {}", trial, i, j, e));
            assert!(
                n_ij == 0 || n_ij == 1,
                "trial {}: N_{}{} = {}",
                trial,
                i,
                j,
                n_ij
            );
        }
    }
    println!("criterion 9: pass - generic datum rebuilds the Nr. 2 root set; even data match the classical builders; 1000 isotropic directions all have N in {{0, 1}}");
}
