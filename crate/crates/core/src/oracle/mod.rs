//! Independent HOMFLY computation from crossing diagrams, used to check the
//! color-1 case of every closed formula.

mod diagram;
mod plat;
mod skein;

pub use diagram::{Crossing, Diagram};
pub use plat::plat;
pub use skein::{conway, homfly_skein, homfly_tangle, loop_value, skein_triple_check, CROSSING_LIMIT};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::KnotId;

/// How a fixture is built: the plat closure of a braid word.
#[derive(Clone, Copy, Debug)]
pub struct FixtureSpec {
    pub name: &'static str,
    pub strands: usize,
    pub word: &'static [i32],
}

// The _r2 variants insert a cancelling pair σ3σ3^{-1}. The _r3 variants
// append σ1σ2σ1σ2^{-1}σ1^{-1}σ2^{-1}, which needs a third Reidemeister move
// before the pairs cancel.
const SPECS: &[FixtureSpec] = &[
    FixtureSpec { name: "unknot", strands: 2, word: &[] },
    FixtureSpec { name: "unknot_kink", strands: 2, word: &[1] },
    FixtureSpec { name: "3_1", strands: 4, word: &[-2, -2, -2] },
    FixtureSpec { name: "3_1_r3", strands: 4, word: &[-2, -2, -2, 1, 2, 1, -2, -1, -2] },
    FixtureSpec { name: "4_1", strands: 4, word: &[2, 2, -1, 2] },
    FixtureSpec { name: "4_1_r2", strands: 4, word: &[2, 2, -1, 3, -3, 2] },
    FixtureSpec { name: "4_1_r3", strands: 4, word: &[2, 2, -1, 2, 1, 2, 1, -2, -1, -2] },
    FixtureSpec { name: "5_2", strands: 4, word: &[-2, -2, -2, 1, -2] },
    FixtureSpec { name: "5_2_r2", strands: 4, word: &[-2, -2, -2, 1, 3, -3, -2] },
    FixtureSpec { name: "5_2_r3", strands: 4, word: &[-2, -2, -2, 1, -2, 1, 2, 1, -2, -1, -2] },
    FixtureSpec { name: "6_1", strands: 4, word: &[-2, -2, -2, -2, 1, -2] },
    FixtureSpec { name: "6_1_r2", strands: 4, word: &[-2, -2, -2, -2, 1, 3, -3, -2] },
    FixtureSpec { name: "7_2", strands: 4, word: &[-2, -2, -2, -2, -2, 1, -2] },
    FixtureSpec { name: "8_1", strands: 4, word: &[-2, -2, -2, -2, -2, -2, 1, -2] },
    FixtureSpec { name: "wh", strands: 4, word: &[2, 2, -1, 2, 2] },
    FixtureSpec { name: "wh_r2", strands: 4, word: &[2, 2, -1, 3, -3, 2, 2] },
    FixtureSpec { name: "wh_r3", strands: 4, word: &[2, 2, -1, 2, 2, 1, 2, 1, -2, -1, -2] },
];

macro_rules! fixture_files {
    ($($name:literal),*) => {
        &[$(($name, include_str!(concat!("../../fixtures/", $name, ".json")))),*]
    };
}

const FILES: &[(&str, &str)] = fixture_files!(
    "unknot", "unknot_kink", "3_1", "3_1_r3", "4_1", "4_1_r2", "4_1_r3", "5_2", "5_2_r2",
    "5_2_r3", "6_1", "6_1_r2", "7_2", "8_1", "wh", "wh_r2", "wh_r3"
);

pub fn fixture_specs() -> &'static [FixtureSpec] {
    SPECS
}

pub fn fixture_names() -> impl Iterator<Item = &'static str> {
    FILES.iter().map(|f| f.0)
}

/// Builds a fixture diagram from its spec.
pub fn build_fixture(spec: &FixtureSpec) -> Result<Diagram> {
    plat(spec.strands, spec.word)
}

#[derive(Serialize, Deserialize)]
struct FixtureCrossing {
    id: usize,
    sign: i8,
    under: [u32; 2],
    over: [u32; 2],
}

#[derive(Serialize, Deserialize)]
struct FixtureFile {
    name: String,
    crossings: Vec<FixtureCrossing>,
    free_loops: u32,
    #[serde(default)]
    open_edge: Option<u32>,
}

pub fn fixture_to_json(name: &str, d: &Diagram) -> String {
    let f = FixtureFile {
        name: name.to_string(),
        crossings: d
            .crossings
            .iter()
            .enumerate()
            .map(|(id, c)| FixtureCrossing { id, sign: c.sign, under: c.under, over: c.over })
            .collect(),
        free_loops: d.free_loops,
        open_edge: d.open_edge,
    };
    // one crossing per line
    let rows: Vec<String> = f
        .crossings
        .iter()
        .map(|c| format!("    {}", serde_json::to_string(c).expect("crossing serializes")))
        .collect();
    let list = if rows.is_empty() { "[]".to_string() } else { format!("[\n{}\n  ]", rows.join(",\n")) };
    let open = f.open_edge.map_or("null".to_string(), |e| e.to_string());
    format!(
        "{{\n  \"name\": {},\n  \"crossings\": {},\n  \"free_loops\": {},\n  \"open_edge\": {}\n}}\n",
        serde_json::to_string(&f.name).expect("name serializes"),
        list,
        f.free_loops,
        open
    )
}

pub fn fixture_from_json(s: &str) -> Result<Diagram> {
    let f: FixtureFile = serde_json::from_str(s)?;
    let mut crossings = f.crossings;
    crossings.sort_by_key(|c| c.id);
    let d = Diagram {
        crossings: crossings.into_iter().map(|c| Crossing::new(c.sign, c.under, c.over)).collect(),
        free_loops: f.free_loops,
        open_edge: f.open_edge,
    };
    d.validate()?;
    Ok(d)
}

/// The committed fixture called `name`.
pub fn fixture(name: &str) -> Result<Diagram> {
    let (_, text) = FILES
        .iter()
        .find(|f| f.0 == name)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))?;
    fixture_from_json(text)
}

/// The fixture realizing `knot` at color 1, if one is committed.
pub fn fixture_name_for(knot: KnotId) -> Option<&'static str> {
    match knot.canonical() {
        KnotId::FigureEight => Some("4_1"),
        KnotId::FiveTwo => Some("5_2"),
        KnotId::SixOne => Some("6_1"),
        KnotId::Whitehead => Some("wh"),
        KnotId::Twist(5) => Some("7_2"),
        KnotId::Twist(6) => Some("8_1"),
        KnotId::Twist(_) => None,
    }
}

#[cfg(test)]
mod tests;
