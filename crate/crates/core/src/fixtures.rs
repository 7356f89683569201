//! Golden data: the rank-3 example on five elements and two small instances.
//!
//! The example's full tope set is not listed with it, so the tope set used
//! here is the chamber set of a stored arrangement (`fixtures/example.arr`)
//! that contains every tope the example mentions. [`example_tope_set`] fails if
//! any mentioned tope is missing.

use std::collections::BTreeSet;

use crate::cycle::SymmetricCycle;
use crate::error::{Error, Result};
use crate::realization::Arrangement;
use crate::signs::Tope;
use crate::tope_set::TopeSet;

pub const EXAMPLE_ARR: &str = include_str!("../fixtures/example.arr");
pub const EXAMPLE_TOPES: &str = include_str!("../fixtures/example.topes");
pub const HEXAGON_ARR: &str = include_str!("../fixtures/hexagon.arr");
pub const HEXAGON_TOPES: &str = include_str!("../fixtures/hexagon.topes");
pub const SQUARE_ARR: &str = include_str!("../fixtures/square.arr");

pub const BASE: &str = "-++++";

/// First cycle of the example; it does not pass through `BASE`.
pub const CYCLE_1: [&str; 10] = [
    "+-+++", "+-+-+", "+---+", "++--+", "-+--+", "-+---", "-+-+-", "-+++-", "--++-", "+-++-",
];
/// Second cycle of the example.
pub const CYCLE_2: [&str; 10] = [
    "--+++", "+-+++", "+-+-+", "+---+", "++--+", "++---", "-+---", "-+-+-", "-+++-", "--++-",
];
/// Third cycle of the example, based at `BASE`.
pub const CYCLE_3: [&str; 10] = [
    "-++++", "--+++", "+-+++", "+-+-+", "+---+", "+----", "++---", "-+---", "-+-+-", "-+++-",
];

/// Minimal elements of the first cycle's vertex set, base `BASE`.
pub const MIN_CYCLE_1: [&str; 3] = ["+-+++", "-+--+", "-+++-"];
/// Minimal elements of the first cycle reoriented on {1}, base `+++++`.
pub const MIN_CYCLE_1_REORIENTED: [&str; 3] = ["--+++", "++--+", "++++-"];
/// Minimal elements of the second cycle's vertex set, base `BASE`.
pub const MIN_CYCLE_2: [&str; 3] = ["--+++", "++--+", "-+++-"];

pub const TARGET: &str = "+-++-";
/// Decomposition of `TARGET` over the third cycle.
pub const TARGET_Q_CYCLE_3: [&str; 3] = ["+-+++", "-+++-", "+----"];

pub(crate) fn parse_all(list: &[&str]) -> Vec<Tope> {
    list.iter()
        .map(|s| s.parse().expect("fixture tope"))
        .collect()
}

pub fn tope_set_of(list: &[&str]) -> BTreeSet<Tope> {
    parse_all(list).into_iter().collect()
}

/// Every tope the example mentions, with negations.
pub fn mentioned_topes() -> BTreeSet<Tope> {
    let mut all: BTreeSet<Tope> = [
        &CYCLE_1[..],
        &CYCLE_2[..],
        &CYCLE_3[..],
        &[BASE, TARGET][..],
    ]
    .into_iter()
    .flat_map(parse_all)
    .collect();
    let negated: Vec<Tope> = all.iter().map(|t| -t).collect();
    all.extend(negated);
    all
}

pub fn example_arrangement() -> Arrangement {
    Arrangement::parse(EXAMPLE_ARR).expect("committed arrangement parses")
}

/// Chambers of the stored arrangement, checked to contain every mentioned tope.
pub fn example_tope_set() -> Result<TopeSet> {
    let set = example_arrangement().chambers()?;
    if let Some(missing) = mentioned_topes().into_iter().find(|t| !set.contains(t)) {
        return Err(Error::ReconstructionFailed(missing));
    }
    Ok(set)
}

pub fn hexagon_tope_set() -> TopeSet {
    TopeSet::parse(HEXAGON_TOPES).expect("committed hexagon parses")
}

pub fn square_tope_set() -> TopeSet {
    Arrangement::parse(SQUARE_ARR)
        .and_then(|a| a.chambers())
        .expect("committed square parses")
}

/// The example's data bound to a validated tope set.
#[derive(Clone, Debug)]
pub struct WorkedExample {
    pub set: TopeSet,
    pub base: Tope,
    pub cycles: [SymmetricCycle; 3],
    pub target: Tope,
}

impl WorkedExample {
    pub fn load() -> Result<Self> {
        let set = example_tope_set()?;
        let cycle = |list: &[&str]| SymmetricCycle::validate(&set, parse_all(list));
        let cycles = [cycle(&CYCLE_1)?, cycle(&CYCLE_2)?, cycle(&CYCLE_3)?];
        Ok(WorkedExample {
            base: BASE.parse()?,
            target: TARGET.parse()?,
            cycles,
            set,
        })
    }
}
