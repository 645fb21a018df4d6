//! JSON envelopes and diagram dumps.

use billiard_core::BilliardDiagram;
use serde_json::{json, Map, Value};

use crate::SCHEMA;

/// Result of one subcommand in both renderings.
#[derive(Debug, Clone)]
pub struct Output {
    pub text: String,
    pub json: Value,
    /// Process exit code, `1` when a check did not hold.
    pub code: i32,
}

impl Output {
    pub fn new(command: &str, text: String, body: Value) -> Self {
        Self::with_code(command, text, body, 0)
    }

    pub fn with_code(command: &str, text: String, body: Value, code: i32) -> Self {
        let mut map = Map::new();
        map.insert("schema".into(), SCHEMA.into());
        map.insert("command".into(), command.into());
        if let Value::Object(fields) = body {
            map.extend(fields);
        }
        Self {
            text,
            json: Value::Object(map),
            code,
        }
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            serde_json::to_string_pretty(&self.json).expect("values serialize")
        } else {
            self.text.clone()
        }
    }
}

pub fn diagram_json(d: &BilliardDiagram) -> Value {
    let crossings: Vec<Value> = d
        .crossings()
        .iter()
        .map(|c| {
            json!({
                "position": [c.position.0, c.position.1],
                "slot": c.slot,
                "ports": c.ports,
                "epsilon": c.epsilon(),
            })
        })
        .collect();
    let arcs: Vec<Value> = d
        .arcs()
        .iter()
        .map(|a| json!({ "component": a.component, "tail": a.tail, "head": a.head }))
        .collect();
    let components: Vec<Value> = d
        .components()
        .iter()
        .map(|c| {
            json!({
                "start": [c.start.0, c.start.1],
                "direction": [c.start_direction.0, c.start_direction.1],
                "long": c.long,
                "crossings": c.visits.iter().map(|v| v.crossing).collect::<Vec<_>>(),
                "arcs": c.arcs,
            })
        })
        .collect();
    let closures: Vec<Value> = d
        .closures()
        .iter()
        .map(|(p, q)| json!([[p.0, p.1], [q.0, q.1]]))
        .collect();
    json!({
        "slots": d.slot_count(),
        "crossings": crossings,
        "arcs": arcs,
        "components": components,
        "closures": closures,
    })
}
