//! Bundled realizations of the worked examples.
//!
//! All are line arrangements in the plane. The four-line family shares
//! three concurrent lines 1, 2, 3; the five-line family is the Selberg
//! arrangement `u1 (u1 - 1) u2 (u2 - 1) (u1 - u2)` and its relatives.

use crate::arrangement::Realization;
use crate::io::parse_arrangement;

pub const EXAMPLE_A: &str = include_str!("../fixtures/example_a.arr");
pub const EXAMPLE_A1: &str = include_str!("../fixtures/example_a1.arr");
pub const EXAMPLE_A2: &str = include_str!("../fixtures/example_a2.arr");
pub const EXAMPLE_A3: &str = include_str!("../fixtures/example_a3.arr");
pub const SELBERG: &str = include_str!("../fixtures/selberg.arr");
pub const SELBERG_ALT: &str = include_str!("../fixtures/selberg_alt.arr");
pub const SELBERG_DEGENERATE: &str = include_str!("../fixtures/selberg_degenerate.arr");
pub const TBAR: &str = include_str!("../fixtures/tbar.arr");
pub const TBAR_DEGENERATE: &str = include_str!("../fixtures/tbar_degenerate.arr");

/// Every fixture by file stem.
pub const ALL: &[(&str, &str)] = &[
    ("example_a", EXAMPLE_A),
    ("example_a1", EXAMPLE_A1),
    ("example_a2", EXAMPLE_A2),
    ("example_a3", EXAMPLE_A3),
    ("selberg", SELBERG),
    ("selberg_alt", SELBERG_ALT),
    ("selberg_degenerate", SELBERG_DEGENERATE),
    ("tbar", TBAR),
    ("tbar_degenerate", TBAR_DEGENERATE),
];

fn load(text: &str) -> Realization {
    parse_arrangement(text).expect("bundled fixture parses")
}

/// Four lines, 1, 2, 3 concurrent.
pub fn example_a() -> Realization {
    load(EXAMPLE_A)
}

/// Line 4 made parallel to line 3.
pub fn example_a1() -> Realization {
    load(EXAMPLE_A1)
}

/// Lines 1 and 2 coincide.
pub fn example_a2() -> Realization {
    load(EXAMPLE_A2)
}

/// All four lines concurrent.
pub fn example_a3() -> Realization {
    load(EXAMPLE_A3)
}

pub fn selberg() -> Realization {
    load(SELBERG)
}

/// Same type as [`selberg`], different coordinates.
pub fn selberg_alt() -> Realization {
    load(SELBERG_ALT)
}

/// Lines 3, 4, 5 collapsed onto one.
pub fn selberg_degenerate() -> Realization {
    load(SELBERG_DEGENERATE)
}

/// Line 1 tilted so that 1, 2 are no longer parallel.
pub fn example_tbar() -> Realization {
    load(TBAR)
}

/// [`example_tbar`] with lines 3, 4, 5 collapsed.
pub fn example_tbar_degenerate() -> Realization {
    load(TBAR_DEGENERATE)
}

/// Every fixture parsed, by file stem.
pub fn all() -> Vec<(&'static str, Realization)> {
    ALL.iter().map(|(name, text)| (*name, load(text))).collect()
}
