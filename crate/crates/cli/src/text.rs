//! Plain-text rendering of a report document.

use crate::doc::{FunctionalDoc, ReportDocument};
use std::fmt::Write;

fn ints(v: &[i64]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

fn functional(f: &FunctionalDoc) -> String {
    let vals = format!("({})", f.values.join(","));
    match &f.coroots {
        Some(c) => format!("{vals} = {c}"),
        None => vals,
    }
}

fn index_set(v: &[usize]) -> String {
    if v.is_empty() {
        return "{}".into();
    }
    let inner: Vec<String> = v.iter().map(|i| format!("a{i}")).collect();
    format!("{{{}}}", inner.join(", "))
}

pub fn render(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let group: Vec<String> = doc
        .group
        .factors
        .iter()
        .map(|f| format!("{}{}", f.series, f.rank))
        .chain((doc.group.torus_rank > 0).then(|| format!("T{}", doc.group.torus_rank)))
        .collect();
    let group = if group.is_empty() { "T0".to_string() } else { group.join("x") };
    writeln!(out, "group: {group}").unwrap();
    let gens: Vec<String> = doc.generators.iter().map(|g| ints(g)).collect();
    writeln!(out, "generators: {}", gens.join(", ")).unwrap();
    let e: Vec<String> = doc.indecomposable_generators.iter().map(|g| ints(g)).collect();
    writeln!(out, "indecomposable generators: {}", e.join(", ")).unwrap();
    writeln!(
        out,
        "saturated: {}{}",
        if doc.saturated { "yes" } else { "no" },
        if doc.saturation_assumed { " (assumed)" } else { "" }
    )
    .unwrap();
    match doc.g_saturated {
        Some(v) => writeln!(out, "G-saturated: {}", if v { "yes" } else { "no" }).unwrap(),
        None => writeln!(out, "G-saturated: not checked").unwrap(),
    }
    writeln!(out, "Pi^p: {}", index_set(&doc.pi_p)).unwrap();
    let basis: Vec<String> = doc.lattice_basis.iter().map(|b| ints(b)).collect();
    writeln!(out, "lattice basis: {}", basis.join(", ")).unwrap();
    writeln!(out, "K^1 ({} rays):", doc.k1.len()).unwrap();
    for (i, f) in doc.k1.iter().enumerate() {
        writeln!(out, "  rho_{}: {}", i + 1, functional(f)).unwrap();
    }
    writeln!(out, "Sigma(Gamma) ({} roots):", doc.sigma.len()).unwrap();
    for (i, s) in doc.sigma.iter().enumerate() {
        let mut line = format!(
            "  sigma_{}: {} {}  shape {}{}",
            i + 1,
            s.rendered,
            ints(&s.coords),
            s.table_row,
            if s.halved { " (halved)" } else { "" },
        );
        if s.distinguished {
            line.push_str("  distinguished");
        }
        writeln!(out, "{line}").unwrap();
        if let Some(cp) = &s.color_pair {
            writeln!(out, "    pair: {} ; {}", functional(&cp.rho_plus), functional(&cp.rho_minus))
                .unwrap();
        }
        writeln!(out, "    sigma_bar: {}", ints(&s.sigma_bar)).unwrap();
    }
    let edges: Vec<String> = doc
        .admissible_edges
        .iter()
        .map(|e| format!("(sigma_{}, sigma_{})", e[0] + 1, e[1] + 1))
        .collect();
    writeln!(
        out,
        "admissible pairs: {}",
        if edges.is_empty() { "none".to_string() } else { edges.join(", ") }
    )
    .unwrap();
    writeln!(out, "components: {}", doc.components.len()).unwrap();
    let dims: Vec<String> = doc.components.iter().map(|c| c.dimension.to_string()).collect();
    writeln!(out, "dim: {}", dims.join(", ")).unwrap();
    for (i, c) in doc.components.iter().enumerate() {
        let roots: Vec<String> = c.roots.iter().map(|r| format!("sigma_{}", r + 1)).collect();
        writeln!(
            out,
            "  component {}: {{{}}} dim {}",
            i + 1,
            roots.join(", "),
            c.dimension
        )
        .unwrap();
    }
    writeln!(out, "Dev: {}", index_set(&doc.dev)).unwrap();
    let phi: Vec<String> = doc.phi.iter().map(|w| ints(w)).collect();
    writeln!(
        out,
        "Phi: {}{}",
        if phi.is_empty() { "{}".to_string() } else { format!("{{{}}}", phi.join(", ")) },
        if doc.phi_overlap { " (overlap between sigma_bar and Dev)" } else { "" }
    )
    .unwrap();
    writeln!(out, "tangent dimension: {}", doc.flags.tangent_dimension).unwrap();
    writeln!(out, "max component dimension: {}", doc.flags.max_component_dimension).unwrap();
    writeln!(out, "irreducible: {}", if doc.flags.irreducible { "yes" } else { "no" }).unwrap();
    writeln!(out, "affine space: {}", doc.flags.is_affine_space).unwrap();
    writeln!(
        out,
        "nonreduced point: {}",
        if doc.flags.nonreduced_point { "yes" } else { "no" }
    )
    .unwrap();
    out
}
