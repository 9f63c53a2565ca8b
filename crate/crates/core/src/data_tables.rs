//! Static tables wiring the bundled data files into the library.

use crate::data::{CycleEntry, WordFile};

pub(crate) static RANK3_CYCLES: [CycleEntry; 55] = [
    CycleEntry { nr: 1, rank: 3, declared_len: 24, text: include_str!("../data/cycles/rank3-nr01.txt") },
    CycleEntry { nr: 2, rank: 3, declared_len: 32, text: include_str!("../data/cycles/rank3-nr02.txt") },
    CycleEntry { nr: 3, rank: 3, declared_len: 40, text: include_str!("../data/cycles/rank3-nr03.txt") },
    CycleEntry { nr: 4, rank: 3, declared_len: 48, text: include_str!("../data/cycles/rank3-nr04.txt") },
    CycleEntry { nr: 5, rank: 3, declared_len: 48, text: include_str!("../data/cycles/rank3-nr05.txt") },
    CycleEntry { nr: 6, rank: 3, declared_len: 60, text: include_str!("../data/cycles/rank3-nr06.txt") },
    CycleEntry { nr: 7, rank: 3, declared_len: 60, text: include_str!("../data/cycles/rank3-nr07.txt") },
    CycleEntry { nr: 8, rank: 3, declared_len: 72, text: include_str!("../data/cycles/rank3-nr08.txt") },
    CycleEntry { nr: 9, rank: 3, declared_len: 84, text: include_str!("../data/cycles/rank3-nr09.txt") },
    CycleEntry { nr: 10, rank: 3, declared_len: 84, text: include_str!("../data/cycles/rank3-nr10.txt") },
    CycleEntry { nr: 11, rank: 3, declared_len: 96, text: include_str!("../data/cycles/rank3-nr11.txt") },
    CycleEntry { nr: 12, rank: 3, declared_len: 96, text: include_str!("../data/cycles/rank3-nr12.txt") },
    CycleEntry { nr: 13, rank: 3, declared_len: 96, text: include_str!("../data/cycles/rank3-nr13.txt") },
    CycleEntry { nr: 14, rank: 3, declared_len: 96, text: include_str!("../data/cycles/rank3-nr14.txt") },
    CycleEntry { nr: 15, rank: 3, declared_len: 112, text: include_str!("../data/cycles/rank3-nr15.txt") },
    CycleEntry { nr: 16, rank: 3, declared_len: 128, text: include_str!("../data/cycles/rank3-nr16.txt") },
    CycleEntry { nr: 17, rank: 3, declared_len: 144, text: include_str!("../data/cycles/rank3-nr17.txt") },
    CycleEntry { nr: 18, rank: 3, declared_len: 144, text: include_str!("../data/cycles/rank3-nr18.txt") },
    CycleEntry { nr: 19, rank: 3, declared_len: 160, text: include_str!("../data/cycles/rank3-nr19.txt") },
    CycleEntry { nr: 20, rank: 3, declared_len: 160, text: include_str!("../data/cycles/rank3-nr20.txt") },
    CycleEntry { nr: 21, rank: 3, declared_len: 160, text: include_str!("../data/cycles/rank3-nr21.txt") },
    CycleEntry { nr: 22, rank: 3, declared_len: 180, text: include_str!("../data/cycles/rank3-nr22.txt") },
    CycleEntry { nr: 23, rank: 3, declared_len: 180, text: include_str!("../data/cycles/rank3-nr23.txt") },
    CycleEntry { nr: 24, rank: 3, declared_len: 200, text: include_str!("../data/cycles/rank3-nr24.txt") },
    CycleEntry { nr: 25, rank: 3, declared_len: 192, text: include_str!("../data/cycles/rank3-nr25.txt") },
    CycleEntry { nr: 26, rank: 3, declared_len: 200, text: include_str!("../data/cycles/rank3-nr26.txt") },
    CycleEntry { nr: 27, rank: 3, declared_len: 200, text: include_str!("../data/cycles/rank3-nr27.txt") },
    CycleEntry { nr: 28, rank: 3, declared_len: 192, text: include_str!("../data/cycles/rank3-nr28.txt") },
    CycleEntry { nr: 29, rank: 3, declared_len: 216, text: include_str!("../data/cycles/rank3-nr29.txt") },
    CycleEntry { nr: 30, rank: 3, declared_len: 220, text: include_str!("../data/cycles/rank3-nr30.txt") },
    CycleEntry { nr: 31, rank: 3, declared_len: 220, text: include_str!("../data/cycles/rank3-nr31.txt") },
    CycleEntry { nr: 32, rank: 3, declared_len: 240, text: include_str!("../data/cycles/rank3-nr32.txt") },
    CycleEntry { nr: 33, rank: 3, declared_len: 240, text: include_str!("../data/cycles/rank3-nr33.txt") },
    CycleEntry { nr: 34, rank: 3, declared_len: 240, text: include_str!("../data/cycles/rank3-nr34.txt") },
    CycleEntry { nr: 35, rank: 3, declared_len: 264, text: include_str!("../data/cycles/rank3-nr35.txt") },
    CycleEntry { nr: 36, rank: 3, declared_len: 336, text: include_str!("../data/cycles/rank3-nr36.txt") },
    CycleEntry { nr: 37, rank: 3, declared_len: 336, text: include_str!("../data/cycles/rank3-nr37.txt") },
    CycleEntry { nr: 38, rank: 3, declared_len: 336, text: include_str!("../data/cycles/rank3-nr38.txt") },
    CycleEntry { nr: 39, rank: 3, declared_len: 336, text: include_str!("../data/cycles/rank3-nr39.txt") },
    CycleEntry { nr: 40, rank: 3, declared_len: 364, text: include_str!("../data/cycles/rank3-nr40.txt") },
    CycleEntry { nr: 41, rank: 3, declared_len: 364, text: include_str!("../data/cycles/rank3-nr41.txt") },
    CycleEntry { nr: 42, rank: 3, declared_len: 392, text: include_str!("../data/cycles/rank3-nr42.txt") },
    CycleEntry { nr: 43, rank: 3, declared_len: 392, text: include_str!("../data/cycles/rank3-nr43.txt") },
    CycleEntry { nr: 44, rank: 3, declared_len: 392, text: include_str!("../data/cycles/rank3-nr44.txt") },
    CycleEntry { nr: 45, rank: 3, declared_len: 420, text: include_str!("../data/cycles/rank3-nr45.txt") },
    CycleEntry { nr: 46, rank: 3, declared_len: 420, text: include_str!("../data/cycles/rank3-nr46.txt") },
    CycleEntry { nr: 47, rank: 3, declared_len: 420, text: include_str!("../data/cycles/rank3-nr47.txt") },
    CycleEntry { nr: 48, rank: 3, declared_len: 448, text: include_str!("../data/cycles/rank3-nr48.txt") },
    CycleEntry { nr: 49, rank: 3, declared_len: 448, text: include_str!("../data/cycles/rank3-nr49.txt") },
    CycleEntry { nr: 50, rank: 3, declared_len: 448, text: include_str!("../data/cycles/rank3-nr50.txt") },
    CycleEntry { nr: 51, rank: 3, declared_len: 476, text: include_str!("../data/cycles/rank3-nr51.txt") },
    CycleEntry { nr: 52, rank: 3, declared_len: 504, text: include_str!("../data/cycles/rank3-nr52.txt") },
    CycleEntry { nr: 53, rank: 3, declared_len: 504, text: include_str!("../data/cycles/rank3-nr53.txt") },
    CycleEntry { nr: 54, rank: 3, declared_len: 612, text: include_str!("../data/cycles/rank3-nr54.txt") },
    CycleEntry { nr: 55, rank: 3, declared_len: 720, text: include_str!("../data/cycles/rank3-nr55.txt") },
];

pub(crate) static RANK4_CYCLES: [CycleEntry; 3] = [
    CycleEntry { nr: 4, rank: 4, declared_len: 864, text: include_str!("../data/cycles/rank4-nr04.txt") },
    CycleEntry { nr: 8, rank: 4, declared_len: 1920, text: include_str!("../data/cycles/rank4-nr08.txt") },
    CycleEntry { nr: 10, rank: 4, declared_len: 2688, text: include_str!("../data/cycles/rank4-nr10.txt") },
];

pub(crate) static ALT_WORDS: [WordFile; 3] = [
    WordFile { n: 4, declared_len: 12, text: include_str!("../data/alt/alt4.txt") },
    WordFile { n: 5, declared_len: 60, text: include_str!("../data/alt/alt5.txt") },
    WordFile { n: 6, declared_len: 360, text: include_str!("../data/alt/alt6.txt") },
];

pub(crate) static LAMBDA2_RANK3: &str = include_str!("../data/spectra/lambda2-rank3.txt");
