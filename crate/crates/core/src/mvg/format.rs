use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

use super::MultivaluedGroup;

pub const MVG_FORMAT: &str = "mvg-v1";

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Wire {
    format: String,
    n: u64,
    elements: Vec<String>,
    identity: usize,
    star: Vec<usize>,
    table: Vec<Vec<Vec<u64>>>,
}

/// Serializes to the `mvg-v1` JSON object (single line).
pub fn to_json(g: &MultivaluedGroup) -> String {
    let order = g.order();
    let wire = Wire {
        format: MVG_FORMAT.to_string(),
        n: g.valency(),
        elements: g.names().to_vec(),
        identity: g.identity(),
        star: g.stars().to_vec(),
        table: (0..order)
            .map(|x| (0..order).map(|y| g.row(x, y).to_vec()).collect())
            .collect(),
    };
    serde_json::to_string(&wire).expect("plain data serializes")
}

/// Parses an `mvg-v1` document; rejects any product whose size is not `n`.
pub fn from_json(text: &str) -> Result<MultivaluedGroup> {
    let wire: Wire = serde_json::from_str(text).map_err(|e| invalid(format!("mvg-v1: {e}")))?;
    if wire.format != MVG_FORMAT {
        return Err(invalid(format!(
            "expected format {MVG_FORMAT:?}, got {:?}",
            wire.format
        )));
    }
    MultivaluedGroup::new(wire.elements, wire.n, wire.identity, wire.star, wire.table)
}
