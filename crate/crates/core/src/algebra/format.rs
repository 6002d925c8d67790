use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::Limits;

use super::group::{close_action, ActionGroup, Automorphism, FiniteGroup};

pub const GRP_FORMAT: &str = "grp-v1";
pub const ACT_FORMAT: &str = "act-v1";

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupWire {
    format: String,
    size: usize,
    op: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ActionWire {
    format: String,
    generators: Vec<Vec<usize>>,
}

fn check_tag(found: &str, expected: &str) -> Result<()> {
    if found != expected {
        return Err(invalid(format!(
            "expected format {expected:?}, got {found:?}"
        )));
    }
    Ok(())
}

pub fn group_from_json(text: &str, limits: &Limits) -> Result<FiniteGroup> {
    let wire: GroupWire =
        serde_json::from_str(text).map_err(|e| invalid(format!("{GRP_FORMAT}: {e}")))?;
    check_tag(&wire.format, GRP_FORMAT)?;
    if wire.op.len() != wire.size {
        return Err(invalid(format!(
            "size is {} but the table has {} rows",
            wire.size,
            wire.op.len()
        )));
    }
    FiniteGroup::from_table(wire.op, limits)
}

pub fn group_to_json(group: &FiniteGroup) -> String {
    let wire = GroupWire {
        format: GRP_FORMAT.into(),
        size: group.size(),
        op: group.table(),
    };
    serde_json::to_string(&wire).expect("plain data serializes")
}

/// Reads generator image arrays and closes them into an action group.
pub fn action_from_json(text: &str, group: &FiniteGroup, limits: &Limits) -> Result<ActionGroup> {
    let wire: ActionWire =
        serde_json::from_str(text).map_err(|e| invalid(format!("{ACT_FORMAT}: {e}")))?;
    check_tag(&wire.format, ACT_FORMAT)?;
    let gens = wire
        .generators
        .into_iter()
        .map(|perm| Automorphism::new(group, perm))
        .collect::<Result<Vec<_>>>()?;
    close_action(group, &gens, limits)
}

pub fn action_to_json(generators: &[Automorphism]) -> String {
    let wire = ActionWire {
        format: ACT_FORMAT.into(),
        generators: generators.iter().map(|a| a.images()).collect(),
    };
    serde_json::to_string(&wire).expect("plain data serializes")
}
