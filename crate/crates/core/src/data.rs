//! Embedded reference datasets.
//!
//! The crate ships the published reference material needed to exercise the
//! pipeline end to end without external files: the two printed rank-3 root
//! lists (Nr. 1 and Nr. 2 of the classification), all 55 rank-3 and three
//! rank-4 Hamiltonian cycle words, the three alternating-group words, the
//! rank-3 second-eigenvalue table, and the generic rank-3 super datum.
//!
//! Datasets are addressed by short string ids (for example `ch-rank3-nr1`,
//! `paper-cycle-nr2`, `paper-alt5-word`); [`embedded`] resolves an id to its
//! raw text. A leading `data/` prefix on the id is accepted and ignored so
//! that command-line paths like `data/ch-rank3-nr1` work unchanged.

use std::sync::OnceLock;

use crate::data_tables;

/// One embedded Hamiltonian cycle word together with its declared length.
///
/// `declared_len` is the length stated by the published listing header; the
/// embedded text must contain exactly that many letters.
pub struct CycleEntry {
    /// Classification number within its rank.
    pub nr: usize,
    /// Rank of the root system the word belongs to.
    pub rank: usize,
    /// Number of letters the listing header declares.
    pub declared_len: usize,
    /// Whitespace-separated reflection letters.
    pub text: &'static str,
}

/// One embedded alternating-group cycle word.
pub struct WordFile {
    /// The group is Alt(n).
    pub n: usize,
    /// Number of generator tokens the word must contain (the group order).
    pub declared_len: usize,
    /// Whitespace-separated generator names (`x1`, `x2`, ...).
    pub text: &'static str,
}

/// Printed positive-root list of Nr. 1 in the rank-3 classification.
pub const CH_RANK3_NR1: &str = include_str!("../data/roots/ch-rank3-nr1.txt");

/// Printed positive-root list of Nr. 2 in the rank-3 classification.
pub const CH_RANK3_NR2: &str = include_str!("../data/roots/ch-rank3-nr2.txt");

/// Generic rank-3 super datum (the one-parameter family at a generic value).
pub const D21_GENERIC_JSON: &str = include_str!("../data/super/d21-generic.json");

/// All 55 embedded rank-3 cycle words, ordered by classification number.
pub fn rank3_cycles() -> &'static [CycleEntry] {
    &data_tables::RANK3_CYCLES
}

/// The three embedded rank-4 cycle words (Nr. 4, 8, and 10).
pub fn rank4_cycles() -> &'static [CycleEntry] {
    &data_tables::RANK4_CYCLES
}

/// The embedded Alt(4), Alt(5), and Alt(6) cycle words.
pub fn alt_words() -> &'static [WordFile] {
    &data_tables::ALT_WORDS
}

/// Raw text of the rank-3 second-eigenvalue table (`nr value` per line).
pub fn lambda2_rank3_text() -> &'static str {
    data_tables::LAMBDA2_RANK3
}

/// Reference second-largest adjacency eigenvalue for rank-3 system `nr`.
///
/// Values are the published seven-digit approximations; `None` when `nr` is
/// outside `1..=55`.
pub fn lambda2_rank3(nr: usize) -> Option<f64> {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let mut values = Vec::with_capacity(55);
        for line in data_tables::LAMBDA2_RANK3.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let key: usize = parts
                .next()
                .and_then(|t| t.parse().ok())
                .expect("eigenvalue table line must start with an index");
            let value: f64 = parts
                .next()
                .and_then(|t| t.parse().ok())
                .expect("eigenvalue table line must contain a value");
            assert_eq!(key, values.len() + 1, "eigenvalue table must be contiguous");
            assert!(parts.next().is_none(), "eigenvalue table line has extra tokens");
            values.push(value);
        }
        values
    });
    if nr == 0 {
        return None;
    }
    table.get(nr - 1).copied()
}

/// Resolve a dataset id to its embedded text.
///
/// Known ids: `ch-rank3-nr1`, `ch-rank3-nr2`, `paper-cycle-nr1` ..
/// `paper-cycle-nr55`, `paper-cycle-rank4-nr4` / `-nr8` / `-nr10`,
/// `paper-alt4-word` / `paper-alt5-word` / `paper-alt6-word`,
/// `lambda2-rank3`, and `super-d21-generic`. A leading `data/` is stripped.
pub fn embedded(id: &str) -> Option<&'static str> {
    let id = id.strip_prefix("data/").unwrap_or(id);
    match id {
        "ch-rank3-nr1" => return Some(CH_RANK3_NR1),
        "ch-rank3-nr2" => return Some(CH_RANK3_NR2),
        "lambda2-rank3" => return Some(data_tables::LAMBDA2_RANK3),
        "super-d21-generic" => return Some(D21_GENERIC_JSON),
        _ => {}
    }
    if let Some(rest) = id.strip_prefix("paper-cycle-rank4-nr") {
        let nr: usize = rest.parse().ok()?;
        return rank4_cycles().iter().find(|e| e.nr == nr).map(|e| e.text);
    }
    if let Some(rest) = id.strip_prefix("paper-cycle-nr") {
        let nr: usize = rest.parse().ok()?;
        return rank3_cycles().iter().find(|e| e.nr == nr).map(|e| e.text);
    }
    if let Some(rest) = id.strip_prefix("paper-alt") {
        let n: usize = rest.strip_suffix("-word")?.parse().ok()?;
        return alt_words().iter().find(|w| w.n == n).map(|w| w.text);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn token_count(text: &str) -> usize {
        text.split_whitespace().count()
    }

    #[test]
    fn rank3_table_covers_all_fifty_five_numbers() {
        let entries = rank3_cycles();
        assert_eq!(entries.len(), 55);
        for (k, entry) in entries.iter().enumerate() {
            assert_eq!(entry.nr, k + 1);
            assert_eq!(entry.rank, 3);
        }
        assert_eq!(entries[0].declared_len, 24);
        assert_eq!(entries[1].declared_len, 32);
        assert_eq!(entries[54].declared_len, 720);
    }

    #[test]
    fn every_cycle_word_has_its_declared_length() {
        for entry in rank3_cycles().iter().chain(rank4_cycles()) {
            assert_eq!(
                token_count(entry.text),
                entry.declared_len,
                "rank-{} Nr. {} word length mismatch",
                entry.rank,
                entry.nr
            );
            for token in entry.text.split_whitespace() {
                let letter: usize = token.parse().expect("cycle letters are integers");
                assert!(
                    (1..=entry.rank).contains(&letter),
                    "rank-{} Nr. {} has out-of-range letter {letter}",
                    entry.rank,
                    entry.nr
                );
            }
        }
    }

    #[test]
    fn rank4_table_holds_the_three_published_words() {
        let entries = rank4_cycles();
        let got: Vec<(usize, usize)> = entries.iter().map(|e| (e.nr, e.declared_len)).collect();
        assert_eq!(got, vec![(4, 864), (8, 1920), (10, 2688)]);
    }

    #[test]
    fn alt_words_have_group_order_length_and_valid_generator_names() {
        let words = alt_words();
        let got: Vec<(usize, usize)> = words.iter().map(|w| (w.n, w.declared_len)).collect();
        assert_eq!(got, vec![(4, 12), (5, 60), (6, 360)]);
        for word in words {
            assert_eq!(token_count(word.text), word.declared_len);
            for token in word.text.split_whitespace() {
                let index: usize = token
                    .strip_prefix('x')
                    .and_then(|t| t.parse().ok())
                    .expect("alt letters look like x<i>");
                assert!((1..word.n).contains(&index));
            }
        }
    }

    #[test]
    fn eigenvalue_table_is_complete_and_matches_spot_values() {
        for nr in 1..=55 {
            assert!(lambda2_rank3(nr).is_some(), "missing table entry {nr}");
        }
        assert_eq!(lambda2_rank3(0), None);
        assert_eq!(lambda2_rank3(56), None);
        assert!((lambda2_rank3(1).unwrap() - 2.4142136).abs() < 1e-12);
        assert!((lambda2_rank3(2).unwrap() - 2.5615528).abs() < 1e-12);
        assert!((lambda2_rank3(4).unwrap() - 2.7320508).abs() < 1e-12);
        for nr in 1..=55 {
            let value = lambda2_rank3(nr).unwrap();
            assert!(value > 2.0 && value < 3.0, "implausible value at {nr}");
        }
    }

    #[test]
    fn embedded_lookup_resolves_every_id_family() {
        assert!(embedded("ch-rank3-nr1").unwrap().contains("rank: 3"));
        assert!(embedded("data/ch-rank3-nr2").is_some());
        assert_eq!(embedded("paper-cycle-nr1"), Some(rank3_cycles()[0].text));
        assert_eq!(embedded("paper-cycle-nr55"), Some(rank3_cycles()[54].text));
        assert_eq!(
            embedded("data/paper-cycle-rank4-nr8"),
            Some(rank4_cycles()[1].text)
        );
        assert_eq!(embedded("paper-alt4-word"), Some(alt_words()[0].text));
        assert_eq!(embedded("paper-alt6-word"), Some(alt_words()[2].text));
        assert!(embedded("lambda2-rank3").is_some());
        assert!(embedded("super-d21-generic").unwrap().contains("matrix"));
        assert_eq!(embedded("paper-cycle-nr56"), None);
        assert_eq!(embedded("paper-cycle-rank4-nr5"), None);
        assert_eq!(embedded("paper-alt7-word"), None);
        assert_eq!(embedded("no-such-id"), None);
        assert_eq!(embedded("paper-cycle-nr"), None);
    }

    #[test]
    fn embedded_root_lists_parse_and_match_known_shapes() {
        let nr1 = crate::parse_roots(CH_RANK3_NR1, crate::RootFormat::ChNotation).unwrap();
        assert_eq!(nr1.rank(), 3);
        assert_eq!(nr1.num_roots(), 12);
        let nr2 = crate::parse_roots(CH_RANK3_NR2, crate::RootFormat::ChNotation).unwrap();
        assert_eq!(nr2.rank(), 3);
        assert_eq!(nr2.num_roots(), 14);
    }
}
