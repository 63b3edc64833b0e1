//! Certificate documents: canonical JSON interchange and DOT export.
//!
//! Labels are always in the caller's orientation: `a` is the size of the
//! side given first, edges are `[first-side index, second-side index]`, and
//! `i` counts terminals on the first side.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use bipconn_core::{
    kappa_terminal, normalize, target_tree_count, terminal_set, validate_tree, verify_witness,
    BipartiteOrder, ClassifiedTree, Edge, SpanningTreePacking, SteinerWitness, TerminalSet, Tree,
    TreeClass,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Packing,
    Witness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DocTree {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
    pub edges: Vec<[usize; 2]>,
}

/// Field order here is the key order of the canonical JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDocument {
    pub kind: Kind,
    pub a: usize,
    pub b: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    pub trees: Vec<DocTree>,
}

fn caller_edges(order: &BipartiteOrder, tree: &Tree) -> Vec<[usize; 2]> {
    let mut edges: Vec<[usize; 2]> = tree
        .edges()
        .iter()
        .map(|&e| {
            let (p, q) = order.to_caller(e);
            [p, q]
        })
        .collect();
    edges.sort_unstable();
    edges
}

/// Converts a caller-side `i` into the normalized one, and back.
pub fn flip_i(order: &BipartiteOrder, k: usize, i: usize) -> usize {
    if order.swapped() {
        k - i
    } else {
        i
    }
}

impl CertificateDocument {
    pub fn from_packing(packing: &SpanningTreePacking) -> Self {
        let (a, b) = packing.order.caller_sizes();
        CertificateDocument {
            kind: Kind::Packing,
            a,
            b,
            k: None,
            i: None,
            trees: packing
                .trees
                .iter()
                .map(|t| DocTree {
                    class: None,
                    edges: caller_edges(&packing.order, t),
                })
                .collect(),
        }
    }

    pub fn from_witness(witness: &SteinerWitness) -> Self {
        let order = witness.terminal.order();
        let (a, b) = order.caller_sizes();
        let k = witness.terminal.k();
        CertificateDocument {
            kind: Kind::Witness,
            a,
            b,
            k: Some(k),
            i: Some(flip_i(&order, k, witness.terminal.i())),
            trees: witness
                .trees
                .iter()
                .map(|t| DocTree {
                    class: Some(t.class.as_str().to_owned()),
                    edges: caller_edges(&order, &t.tree),
                })
                .collect(),
        }
    }

    /// Terminal vertices in caller labels, as `(first side?, index)`.
    fn terminals(&self) -> BTreeSet<(bool, usize)> {
        match (self.kind, self.k, self.i) {
            (Kind::Witness, Some(k), Some(i)) => (1..=i)
                .map(|n| (true, n))
                .chain((1..=k.saturating_sub(i)).map(|n| (false, n)))
                .collect(),
            _ => BTreeSet::new(),
        }
    }
}

/// Compact, byte-stable JSON.
pub fn emit_json(doc: &CertificateDocument) -> String {
    serde_json::to_string(doc).expect("certificate documents always serialize")
}

pub fn parse_json(text: &str) -> Result<CertificateDocument, serde_json::Error> {
    serde_json::from_str(text)
}

pub const PALETTE: [&str; 12] = [
    "#a6cee3", "#1f78b4", "#b2df8a", "#33a02c", "#fb9a99", "#e31a1c", "#fdbf6f", "#ff7f00",
    "#cab2d6", "#6a3d9a", "#ffff99", "#b15928",
];

/// One undirected graph; tree `n` is drawn in `PALETTE[n % 12]`.
pub fn emit_dot(doc: &CertificateDocument) -> String {
    let kind = match doc.kind {
        Kind::Packing => "packing",
        Kind::Witness => "witness",
    };
    let terminals = doc.terminals();
    let mut out = String::new();
    writeln!(out, "graph {kind} {{").unwrap();
    let vertices = (1..=doc.a)
        .map(|n| (true, n))
        .chain((1..=doc.b).map(|n| (false, n)));
    for (first, n) in vertices {
        let name = if first { "x" } else { "y" };
        if terminals.contains(&(first, n)) {
            writeln!(out, "  {name}{n} [shape=box];").unwrap();
        } else {
            writeln!(out, "  {name}{n};").unwrap();
        }
    }
    for (t, tree) in doc.trees.iter().enumerate() {
        let color = PALETTE[t % PALETTE.len()];
        for [p, q] in &tree.edges {
            writeln!(out, "  x{p} -- y{q} [color=\"{color}\"];").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// Why a document failed verification. `kind` is the short diagnostic code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyFailure {
    pub kind: &'static str,
    pub detail: String,
}

impl VerifyFailure {
    fn new(kind: &'static str, detail: impl Into<String>) -> Self {
        VerifyFailure {
            kind,
            detail: detail.into(),
        }
    }
}

/// Input that cannot be interpreted as a certificate at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MalformedDocument(pub String);

pub enum Verdict {
    Valid { trees: usize },
    Invalid(VerifyFailure),
}

fn normalized_trees(order: &BipartiteOrder, doc: &CertificateDocument) -> Vec<Tree> {
    doc.trees
        .iter()
        .map(|t| {
            t.edges
                .iter()
                .map(|&[p, q]| order.from_caller((p, q)))
                .collect()
        })
        .collect()
}

/// Re-checks a certificate from scratch: pairwise disjointness, every tree,
/// and the tree count against the proven maximum.
pub fn verify_document(doc: &CertificateDocument) -> Result<Verdict, MalformedDocument> {
    let order = normalize(doc.a, doc.b).map_err(|e| MalformedDocument(e.to_string()))?;
    let trees = normalized_trees(&order, doc);
    match doc.kind {
        Kind::Packing => Ok(verify_packing(&order, &trees)),
        Kind::Witness => {
            let (k, i) = match (doc.k, doc.i) {
                (Some(k), Some(i)) => (k, i),
                _ => return Err(MalformedDocument("witness needs both k and i".into())),
            };
            if i > k {
                return Err(MalformedDocument(format!("i = {i} exceeds k = {k}")));
            }
            let terminal = terminal_set(&order, k, flip_i(&order, k, i))
                .map_err(|e| MalformedDocument(e.to_string()))?;
            verify_witness_doc(&order, &terminal, doc, trees)
        }
    }
}

fn verify_packing(order: &BipartiteOrder, trees: &[Tree]) -> Verdict {
    let sets: Vec<HashSet<Edge>> = trees
        .iter()
        .map(|t| t.edges().iter().copied().collect())
        .collect();
    for p in 0..sets.len() {
        for q in p + 1..sets.len() {
            if !sets[p].is_disjoint(&sets[q]) {
                return Verdict::Invalid(VerifyFailure::new(
                    "edge-overlap",
                    format!("trees {p} and {q} share an edge"),
                ));
            }
        }
    }
    let all = order.all_vertices();
    for (n, tree) in trees.iter().enumerate() {
        let report = validate_tree(order, &all, tree);
        if let Some(v) = report.first() {
            return Verdict::Invalid(VerifyFailure::new(
                "bad-tree",
                format!("tree {n} is not a spanning tree ({v})"),
            ));
        }
    }
    let target = target_tree_count(order.a(), order.b());
    if trees.len() != target {
        return Verdict::Invalid(VerifyFailure::new(
            "not-maximum",
            format!("{} trees, maximum is {target}", trees.len()),
        ));
    }
    Verdict::Valid { trees: trees.len() }
}

fn verify_witness_doc(
    order: &BipartiteOrder,
    terminal: &TerminalSet,
    doc: &CertificateDocument,
    trees: Vec<Tree>,
) -> Result<Verdict, MalformedDocument> {
    let mut classified = Vec::with_capacity(trees.len());
    for (n, (tree, raw)) in trees.into_iter().zip(&doc.trees).enumerate() {
        let declared = raw
            .class
            .as_deref()
            .map(str::parse::<TreeClass>)
            .transpose()
            .map_err(|e| MalformedDocument(e.to_string()))?;
        let Some(mut ct) = ClassifiedTree::classify(tree, terminal) else {
            return Ok(Verdict::Invalid(VerifyFailure::new(
                "bad-tree",
                format!("tree {n} uses spare vertices outside the A0/A1/A2 profiles"),
            )));
        };
        if let Some(class) = declared {
            ct.class = class;
        }
        classified.push(ct);
    }
    let witness = SteinerWitness {
        terminal: *terminal,
        trees: classified,
    };
    let report = verify_witness(order, &witness);
    if let Some(finding) = report.findings.first() {
        let trees: Vec<String> = finding.trees.iter().map(usize::to_string).collect();
        return Ok(Verdict::Invalid(VerifyFailure::new(
            finding.kind.as_str(),
            format!("trees {}", trees.join(", ")),
        )));
    }
    let expected = kappa_terminal(order, terminal.k(), terminal.i())
        .map_err(|e| MalformedDocument(e.to_string()))?
        .kappa;
    if witness.trees.len() != expected {
        return Ok(Verdict::Invalid(VerifyFailure::new(
            "not-maximum",
            format!("{} trees, maximum is {expected}", witness.trees.len()),
        )));
    }
    Ok(Verdict::Valid {
        trees: witness.trees.len(),
    })
}
