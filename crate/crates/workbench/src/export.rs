//! JSON form of fused components:
//! `{"k": 2, "legs": [...], "entries": [{"row": [...], "col": [...], "poly": "..."}]}`.

use serde::{Deserialize, Serialize};
use workbench_core::{LaurentPoly, LegRole, LegSpace, TensorOp};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LegJson {
    pub dim: usize,
    pub role: String,
    pub label: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryJson {
    pub row: Vec<usize>,
    pub col: Vec<usize>,
    pub poly: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentJson {
    pub k: usize,
    pub legs: Vec<LegJson>,
    pub entries: Vec<EntryJson>,
}

fn role_name(r: LegRole) -> &'static str {
    match r {
        LegRole::Auxiliary => "auxiliary",
        LegRole::Quantum => "quantum",
    }
}

impl ComponentJson {
    pub fn from_op(k: usize, op: &TensorOp) -> Self {
        let legs = op
            .legs()
            .iter()
            .map(|l| LegJson { dim: l.dim, role: role_name(l.role).into(), label: l.label.clone() })
            .collect();
        let entries = op.entries().map(|(at, p)| EntryJson { row: at.row, col: at.col, poly: p.to_string() }).collect();
        ComponentJson { k, legs, entries }
    }

    pub fn to_op(&self) -> Result<TensorOp, String> {
        let legs = self
            .legs
            .iter()
            .map(|l| {
                let role = match l.role.as_str() {
                    "auxiliary" => LegRole::Auxiliary,
                    "quantum" => LegRole::Quantum,
                    other => return Err(format!("unknown leg role `{other}`")),
                };
                Ok(LegSpace { dim: l.dim, label: l.label.clone(), role })
            })
            .collect::<Result<Vec<_>, String>>()?;
        let mut items = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            let p: LaurentPoly = e.poly.parse().map_err(|err| format!("{err}"))?;
            items.push((e.row.clone(), e.col.clone(), p));
        }
        TensorOp::from_entries(legs, items).map_err(|e| e.to_string())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("component serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use workbench_core::fusion::character_chi;
    use workbench_core::{RatMatrix, Transposition};

    #[test]
    fn round_trips() {
        let x = RatMatrix::symplectic(2).unwrap();
        let op = character_chi(&x, &Transposition::identity(2), 2).unwrap();
        let j = ComponentJson::from_op(2, &op);
        let back: ComponentJson = serde_json::from_str(&j.to_json()).unwrap();
        assert_eq!(back.to_op().unwrap(), op);
        assert_eq!(j.legs[0].role, "auxiliary");
        assert_eq!(j.legs[0].label.as_deref(), Some("u1"));
    }
}
