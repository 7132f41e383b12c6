//! JSON values, DOT graphs and plain-text tables for command output.

use serde_json::{json, Map, Value};

use crsg_core::network::{display_name, MinNetwork};
use crsg_core::special::{ClassificationReport, NamedCongruenceSet};
use crsg_core::theorems::{Verdict, Witness};
use crsg_core::{CongruenceLattice, Partition, Semigroup};

/// Partitions of larger semigroups are summarized by their class count in
/// DOT labels.
pub const DOT_PARTITION_LIMIT: usize = 12;

pub fn partition_json(p: &Partition) -> Value {
    json!(p.blocks())
}

/// `{0,2}{1,3}`, using element labels when the semigroup has them.
pub fn partition_text(p: &Partition, s: &Semigroup) -> String {
    p.blocks()
        .iter()
        .map(|b| {
            let items: Vec<String> = b.iter().map(|&x| s.label(x)).collect();
            format!("{{{}}}", items.join(","))
        })
        .collect()
}

pub fn classification_json(r: &ClassificationReport) -> Value {
    json!({
        "completely_regular": r.completely_regular,
        "band": r.band,
        "semilattice": r.semilattice,
        "rectangular_band": r.rectangular_band,
        "group": r.group,
        "rectangular_group": r.rectangular_group,
        "completely_simple": r.completely_simple,
        "cryptic": r.cryptic,
        "orthodox": r.orthodox,
        "orthogroup": r.orthogroup,
        "clifford": r.clifford,
        "e_unitary": r.e_unitary,
        "band_of_rectangular_groups": r.band_of_rectangular_groups,
        "ker_sigma_cryptic": r.ker_sigma_cryptic,
        "ker_nu_cryptic": r.ker_nu_cryptic,
        "kappa_over_rectangular_bands": r.kappa_over_rectangular_bands,
    })
}

pub fn classification_rows(r: &ClassificationReport) -> Vec<(&'static str, String)> {
    let b = |v: bool| v.to_string();
    let o = |v: Option<bool>| v.map_or_else(|| String::from("-"), |x| x.to_string());
    vec![
        ("completely_regular", b(r.completely_regular)),
        ("band", b(r.band)),
        ("semilattice", b(r.semilattice)),
        ("rectangular_band", b(r.rectangular_band)),
        ("group", b(r.group)),
        ("rectangular_group", b(r.rectangular_group)),
        ("completely_simple", b(r.completely_simple)),
        ("cryptic", b(r.cryptic)),
        ("orthodox", b(r.orthodox)),
        ("orthogroup", b(r.orthogroup)),
        ("clifford", b(r.clifford)),
        ("e_unitary", o(r.e_unitary)),
        ("band_of_rectangular_groups", o(r.band_of_rectangular_groups)),
        ("ker_sigma_cryptic", o(r.ker_sigma_cryptic)),
        ("ker_nu_cryptic", o(r.ker_nu_cryptic)),
        ("kappa_over_rectangular_bands", o(r.kappa_over_rectangular_bands)),
    ]
}

pub fn named_json(n: &NamedCongruenceSet) -> Value {
    let mut m = Map::new();
    for (name, c) in n.iter() {
        m.insert(name.to_string(), partition_json(c.partition()));
    }
    Value::Object(m)
}

/// Left-aligned columns separated by two spaces, with a header rule.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (i, cell) in r.iter().enumerate().take(cols) {
            width[i] = width[i].max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut out = String::new();
        for (i, c) in cells.iter().enumerate() {
            out.push_str(c);
            if i + 1 < cells.len() {
                out.extend(std::iter::repeat_n(' ', width[i] - c.chars().count() + 2));
            }
        }
        out.push('\n');
        out
    };
    let mut out = line(header.to_vec());
    out.push_str(&line(width.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().iter().map(|s| s.as_str()).collect()));
    for r in rows {
        out.push_str(&line(r.iter().map(|s| s.as_str()).collect()));
    }
    out
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Distinct congruences of a network with their names and covering edges.
pub struct NetworkView {
    pub nodes: Vec<NetworkNode>,
    /// `(upper, lower)` covering pairs by inclusion.
    pub edges: Vec<(usize, usize)>,
}

pub struct NetworkNode {
    pub words: Vec<String>,
    /// Conventional names, or the words themselves if none has a name.
    pub names: Vec<String>,
    pub partition: Partition,
}

impl NetworkNode {
    /// First label line: `ω` and/or `ε` for the extremes, else the first name.
    pub fn head(&self) -> String {
        let mut parts = Vec::new();
        if self.partition.is_universal() {
            parts.push("ω");
        }
        if self.partition.is_discrete() {
            parts.push("ε");
        }
        if parts.is_empty() {
            self.names[0].clone()
        } else {
            parts.join("=")
        }
    }

    /// Names not already shown by [`head`](Self::head).
    pub fn others(&self) -> Vec<String> {
        let head = self.head();
        let shown: Vec<&str> = head.split('=').collect();
        self.names.iter().filter(|n| !shown.contains(&n.as_str())).cloned().collect()
    }
}

pub fn network_view(net: &MinNetwork) -> NetworkView {
    let nodes: Vec<NetworkNode> = net
        .distinct()
        .into_iter()
        .map(|(words, c)| {
            let aliased: Vec<String> = words.iter().filter(|w| w.alias().is_some()).map(display_name).collect();
            let names = if aliased.is_empty() { words.iter().map(|w| w.to_string()).collect() } else { aliased };
            NetworkNode { words: words.iter().map(|w| w.to_string()).collect(), names, partition: c.into_partition() }
        })
        .collect();
    let m = nodes.len();
    let below = |i: usize, j: usize| i != j && nodes[i].partition.refines(&nodes[j].partition);
    let mut edges = Vec::new();
    for upper in 0..m {
        for lower in 0..m {
            if below(lower, upper) && !(0..m).any(|k| below(lower, k) && below(k, upper)) {
                edges.push((upper, lower));
            }
        }
    }
    NetworkView { nodes, edges }
}

pub fn network_json(source: &str, s: &Semigroup, net: &MinNetwork) -> Value {
    let view = network_view(net);
    let nodes: Vec<Value> = view
        .nodes
        .iter()
        .enumerate()
        .map(|(i, n)| {
            json!({
                "id": i,
                "label": n.head(),
                "names": n.names,
                "words": n.words,
                "classes": n.partition.num_blocks(),
                "partition": partition_json(&n.partition),
            })
        })
        .collect();
    let edges: Vec<Value> = view.edges.iter().map(|&(u, l)| json!({"upper": u, "lower": l})).collect();
    let derivations: Vec<Value> =
        net.edges.iter().map(|(sub, sup)| json!({"sub": sub.to_string(), "sup": sup.to_string()})).collect();
    json!({
        "source": source,
        "order": s.order(),
        "roots": net.roots.iter().map(|r| r.symbol()).collect::<Vec<_>>(),
        "stabilized_depth": net.stabilized_depth,
        "nodes": nodes,
        "edges": edges,
        "derivations": derivations,
    })
}

pub fn network_dot(source: &str, s: &Semigroup, net: &MinNetwork) -> String {
    let view = network_view(net);
    let mut out = format!("digraph \"{}\" {{\n  rankdir=TB;\n  node [shape=box];\n", dot_escape(source));
    for (i, n) in view.nodes.iter().enumerate() {
        let mut lines = vec![n.head()];
        let others = n.others();
        if !others.is_empty() {
            lines.push(others.join("="));
        }
        lines.push(if s.order() <= DOT_PARTITION_LIMIT {
            partition_text(&n.partition, s)
        } else {
            format!("{} classes", n.partition.num_blocks())
        });
        let label: Vec<String> = lines.iter().map(|l| dot_escape(l)).collect();
        out.push_str(&format!("  n{i} [label=\"{}\"];\n", label.join("\\n")));
    }
    for (u, l) in &view.edges {
        out.push_str(&format!("  n{u} -> n{l};\n"));
    }
    out.push_str("}\n");
    out
}

/// Names of the named congruences equal to each lattice member.
pub fn lattice_names(lattice: &CongruenceLattice, named: Option<&NamedCongruenceSet>) -> Vec<Vec<&'static str>> {
    lattice
        .iter()
        .map(|c| match named {
            Some(n) => n.iter().filter(|(_, d)| *d == c).map(|(name, _)| name).collect(),
            None => Vec::new(),
        })
        .collect()
}

pub fn lattice_json(source: &str, s: &Semigroup, lattice: &CongruenceLattice, names: &[Vec<&str>]) -> Value {
    let congruences: Vec<Value> = lattice
        .iter()
        .enumerate()
        .map(|(i, c)| {
            json!({
                "index": i,
                "classes": c.num_classes(),
                "partition": partition_json(c.partition()),
                "names": names[i],
            })
        })
        .collect();
    let hasse: Vec<Value> = lattice.hasse_edges().iter().map(|&(l, u)| json!({"lower": l, "upper": u})).collect();
    json!({"source": source, "order": s.order(), "congruences": congruences, "hasse": hasse})
}

pub fn lattice_dot(source: &str, s: &Semigroup, lattice: &CongruenceLattice, names: &[Vec<&str>]) -> String {
    let mut out = format!("digraph \"{}\" {{\n  rankdir=TB;\n  node [shape=box];\n", dot_escape(source));
    for (i, c) in lattice.iter().enumerate() {
        let mut lines = Vec::new();
        if !names[i].is_empty() {
            lines.push(names[i].join("="));
        }
        lines.push(if s.order() <= DOT_PARTITION_LIMIT {
            partition_text(c.partition(), s)
        } else {
            format!("{} classes", c.num_classes())
        });
        let label: Vec<String> = lines.iter().map(|l| dot_escape(l)).collect();
        out.push_str(&format!("  c{i} [label=\"{}\"];\n", label.join("\\n")));
    }
    for (l, u) in lattice.hasse_edges() {
        out.push_str(&format!("  c{u} -> c{l};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Vacuous { hypothesis } => json!({"kind": "vacuous", "hypothesis": hypothesis}),
        Witness::Conditions { rho, values } => json!({
            "kind": "conditions",
            "rho": rho.as_ref().map(partition_json),
            "values": values,
        }),
        Witness::Unequal { left, right, left_value, right_value, pair } => json!({
            "kind": "unequal",
            "left": left,
            "right": right,
            "left_value": partition_json(left_value),
            "right_value": partition_json(right_value),
            "pair": [pair.0, pair.1],
        }),
        Witness::NotContained { sub, sup, sub_value, sup_value, pair } => json!({
            "kind": "not_contained",
            "sub": sub,
            "sup": sup,
            "sub_value": partition_json(sub_value),
            "sup_value": partition_json(sup_value),
            "pair": [pair.0, pair.1],
        }),
        Witness::Pair { statement, rho, pair, expected, found } => json!({
            "kind": "pair",
            "statement": statement,
            "rho": rho.as_ref().map(partition_json),
            "pair": [pair.0, pair.1],
            "expected": expected,
            "found": found,
        }),
        Witness::NotCongruence { name, partition, a, b, c, left } => json!({
            "kind": "not_congruence",
            "name": name,
            "partition": partition_json(partition),
            "pair": [a, b],
            "multiplier": c,
            "side": if *left { "left" } else { "right" },
        }),
        Witness::NotClosed { subset, a, b } => json!({"kind": "not_closed", "subset": subset, "pair": [a, b]}),
        Witness::GreenMismatch { subset, relation, a, b } => json!({
            "kind": "green_mismatch",
            "subset": subset,
            "relation": relation.to_string(),
            "pair": [a, b],
        }),
        Witness::NoExtremum { property } => json!({"kind": "no_extremum", "property": property}),
    }
}

pub fn verdict_json(v: &Verdict) -> Value {
    json!({
        "result_id": v.result_id.name(),
        "outcome": v.outcome.name(),
        "holds": v.passed(),
        "witness": v.witness.as_ref().map(witness_json),
    })
}
