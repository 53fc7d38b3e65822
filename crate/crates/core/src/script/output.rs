use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::Evaluation;
use crate::ga::format_blade;

/// Shortest decimal that reads back as `value`, always with a fractional
/// part: `1.0`, `-0.25`, `0.75`.
pub fn format_value(value: f64) -> String {
    let mut s = value.to_string();
    if value.is_finite() && !s.contains('.') {
        s.push_str(".0");
    }
    s
}

/// Listing-style output, one line per nonzero coordinate:
/// `name[index] = value; // blade`.
pub fn format_outputs(ev: &Evaluation) -> String {
    let mut out = String::new();
    for (name, mv) in ev.outputs() {
        for (index, blade, value) in mv.indexed_terms() {
            writeln!(
                out,
                "{name}[{index}] = {}; // {}",
                format_value(value),
                format_blade(blade, ev.algebra())
            )
            .expect("writing to a String");
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Coordinate {
    pub index: u64,
    pub value: f64,
    pub blade: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub name: String,
    pub coords: Vec<Coordinate>,
}

/// The machine-readable form of [`format_outputs`].
pub fn output_records(ev: &Evaluation) -> Vec<OutputRecord> {
    ev.outputs()
        .iter()
        .map(|(name, mv)| OutputRecord {
            name: name.clone(),
            coords: mv
                .indexed_terms()
                .into_iter()
                .map(|(index, blade, value)| Coordinate {
                    index,
                    value,
                    blade: format_blade(blade, ev.algebra()),
                })
                .collect(),
        })
        .collect()
}

pub fn format_outputs_json(ev: &Evaluation) -> String {
    let mut s = serde_json::to_string_pretty(&output_records(ev)).expect("records serialize");
    s.push('\n');
    s
}
