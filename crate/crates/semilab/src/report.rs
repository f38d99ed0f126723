//! JSON/CSV report emission with deterministic bytes: identical inputs and
//! bounds produce identical files.

use std::io::Write;

use serde_json::{json, Map, Value};

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::lab::{ChainReport, ConsistencyReport, LengthFnReport, Overall};
use crate::semidomain::{Element, Verdict, Witness};

pub fn bounds_json(b: &Bounds) -> Value {
    json!({
        "max_degree": b.max_degree,
        "max_height": b.max_height,
        "max_length": b.max_length,
        "max_candidates": b.max_candidates,
        "chain_budget": b.chain_budget,
    })
}

pub fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Element(e) => json!({ "element": e.to_string() }),
        Witness::Pair(a, b) => json!({ "pair": [a.to_string(), b.to_string()] }),
        Witness::Chain(es) => json!({
            "chain": es.iter().map(|e| e.to_string()).collect::<Vec<_>>()
        }),
        Witness::Note(s) => json!({ "note": s }),
    }
}

pub fn witness_list_json(w: Option<&Witness>) -> Value {
    match w {
        Some(w) => Value::Array(vec![witness_json(w)]),
        None => Value::Array(Vec::new()),
    }
}

pub fn verdict_json(v: &Verdict) -> Value {
    let mut m = Map::new();
    m.insert("status".into(), json!(v.label()));
    match v {
        Verdict::Proved { witness: Some(w) } => {
            m.insert("witness".into(), witness_json(w));
        }
        Verdict::Refuted { witness } => {
            m.insert("witness".into(), witness_json(witness));
        }
        Verdict::Unknown { bounds } => {
            m.insert("bounds".into(), bounds_json(bounds));
        }
        _ => {}
    }
    Value::Object(m)
}

pub fn elements_json(es: &[Element]) -> Value {
    Value::Array(es.iter().map(|e| json!(e.to_string())).collect())
}

/// The common report frame: query, instance, bounds, then query-specific
/// fields supplied by the caller.
pub fn frame(
    query: &str,
    instance: &str,
    bounds: &Bounds,
    truncated: bool,
    fields: Vec<(&str, Value)>,
) -> Value {
    let mut m = Map::new();
    m.insert("query".into(), json!(query));
    m.insert("instance".into(), json!(instance));
    m.insert("bounds".into(), bounds_json(bounds));
    m.insert("truncated".into(), json!(truncated));
    for (k, v) in fields {
        m.insert(k.into(), v);
    }
    Value::Object(m)
}

pub fn chain_json(rep: &ChainReport) -> Value {
    json!({
        "strategy": rep.strategy,
        "seed": rep.seed.to_string(),
        "chain": rep.chain.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
        "steps": rep.steps,
        "stabilized": rep.stabilized,
        "decisive": rep.decisive,
    })
}

pub fn length_fn_json(rep: &LengthFnReport) -> Value {
    json!({
        "function": rep.function,
        "corpus_size": rep.corpus_size,
        "pairs_checked": rep.pairs_checked,
        "axiom_units": verdict_json(&rep.axiom_units),
        "axiom_superadditive": verdict_json(&rep.axiom_superadditive),
        "passed": rep.passed(),
    })
}

pub fn consistency_json(rep: &ConsistencyReport) -> Value {
    let overall = match &rep.overall {
        Overall::Consistent => json!({ "status": "consistent" }),
        Overall::Counterexample(w) => json!({
            "status": "counterexample",
            "witness": witness_json(w),
        }),
        Overall::Inconclusive => json!({ "status": "inconclusive" }),
    };
    json!({
        "theorem": rep.theorem,
        "instance": rep.instance,
        "corpus": rep.corpus,
        "checked": rep.checked,
        "notes": rep.notes,
        "outcome": rep.outcome,
        "overall": overall,
    })
}

/// Pretty-printed JSON with a trailing newline; serde_json orders object
/// keys (BTreeMap), so the bytes are reproducible.
pub fn to_json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report values serialize");
    s.push('\n');
    s
}

pub fn write_json(path: &str, v: &Value) -> Result<()> {
    std::fs::write(path, to_json_string(v)).map_err(|e| Error::Io {
        path: path.to_string(),
        message: e.to_string(),
    })
}

/// A tabular CSV with a fixed column order.
pub struct Csv {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Csv {
    pub fn new(header: &[&str]) -> Csv {
        Csv {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn write(&self, path: &str) -> Result<()> {
        std::fs::write(path, self.render()).map_err(|e| Error::Io {
            path: path.to_string(),
            message: e.to_string(),
        })
    }
}

pub fn emit(out: &mut dyn Write, v: &Value, json_path: Option<&str>) -> Result<()> {
    let s = to_json_string(v);
    out.write_all(s.as_bytes()).map_err(|e| Error::Io {
        path: "<stdout>".into(),
        message: e.to_string(),
    })?;
    if let Some(path) = json_path {
        write_json(path, v)?;
    }
    Ok(())
}
