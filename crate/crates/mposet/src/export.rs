//! Serialization of `M_ω` as JSON and Graphviz DOT. Output is byte-stable for
//! a fixed input and schema version.

use serde::{Deserialize, Serialize};

use crate::join_irr::{build_m, MPoset};
use crate::patterns::{find_b2, hasse_edges, PatternKind};
use crate::perm::Permutation;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportElement {
    pub i: usize,
    pub x: usize,
    pub vec: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportFlags {
    pub b2_free: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportWitness {
    pub kind: PatternKind,
    pub labels: Vec<(usize, usize)>,
}

/// The JSON document for one `M_ω`: elements in `(i, x)` order, `covers` as
/// the transitive reduction of the product order, and a B₂ witness when one
/// exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportDocument {
    pub schema_version: String,
    pub omega: Vec<usize>,
    pub elements: Vec<ExportElement>,
    pub covers: Vec<(usize, usize)>,
    pub flags: ExportFlags,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ExportWitness>,
}

pub fn export_document(w: &Permutation) -> ExportDocument {
    let m = build_m(w);
    document_from_mposet(&m)
}

pub fn document_from_mposet(m: &MPoset) -> ExportDocument {
    let mut covers = hasse_edges(m.poset());
    covers.sort_unstable();
    let witness = find_b2(m.poset()).map(|b2| ExportWitness {
        kind: b2.kind,
        labels: b2
            .elements
            .iter()
            .map(|&e| (m.elements[e].i, m.elements[e].x))
            .collect(),
    });
    ExportDocument {
        schema_version: SCHEMA_VERSION.to_string(),
        omega: m.omega().word().to_vec(),
        elements: m
            .elements
            .iter()
            .map(|e| ExportElement {
                i: e.i,
                x: e.x,
                vec: e.vec.clone(),
            })
            .collect(),
        covers,
        flags: ExportFlags {
            b2_free: find_b2(m.poset()).is_none(),
        },
        witness,
    }
}

pub fn to_json(doc: &ExportDocument) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("document serializes");
    out.push('\n');
    out
}

/// DOT digraph of the Hasse diagram, edges pointing from the covered element
/// up to its cover. Node labels read `m[i,x]=(v1,...,vn)`.
pub fn to_dot(m: &MPoset) -> String {
    let mut out = String::from("digraph mposet {\n");
    out.push_str("  rankdir=BT;\n");
    for e in &m.elements {
        let coords: Vec<String> = e.vec.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!(
            "  \"m[{},{}]\" [label=\"m[{},{}]=({})\"];\n",
            e.i,
            e.x,
            e.i,
            e.x,
            coords.join(",")
        ));
    }
    let mut covers = hasse_edges(m.poset());
    covers.sort_unstable();
    for (u, v) in covers {
        let (a, b) = (&m.elements[u], &m.elements[v]);
        out.push_str(&format!(
            "  \"m[{},{}]\" -> \"m[{},{}]\";\n",
            a.i, a.x, b.i, b.x
        ));
    }
    out.push_str("}\n");
    out
}
