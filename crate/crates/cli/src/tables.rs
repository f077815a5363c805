use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use sphorb::liecore::{basis_name_string, Subalgebra};
use sphorb::orbitcat::{representative_x, representative_y, OrbitDescriptor};
use sphorb::parab::{
    duflo_classification, recursion_chain, render_duflo_table, ChainLink, DufloParameters,
};
use sphorb::stab::{
    borel_form, centralizer_codimension, form_stabilizer, verify_stabilizer_decomposition,
    StabilizerDecomposition,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Table {
    #[value(name = "cor4.3")]
    Cor43,
    #[value(name = "dims")]
    Dims,
    #[value(name = "chain")]
    Chain,
}

/// Rendered output plus whether every embedded check held.
pub struct Rendered {
    pub text: String,
    pub json: serde_json::Value,
    pub ok: bool,
}

fn sign(eps: i8) -> &'static str {
    if eps > 0 {
        "+1"
    } else {
        "-1"
    }
}

/// The ε column: non-maximal orders carry a single real orbit.
fn eps_label(d: &OrbitDescriptor) -> &'static str {
    if 2 * d.k < d.n {
        "merged"
    } else {
        sign(d.eps)
    }
}

#[derive(Serialize)]
struct OrbitRow {
    n: usize,
    k: usize,
    epsilon: Option<i8>,
    partition: String,
    dimension: usize,
    representative_x: String,
    representative_y: String,
}

pub fn orbits(cases: &[OrbitDescriptor]) -> Rendered {
    let rows: Vec<OrbitRow> = cases
        .iter()
        .map(|d| OrbitRow {
            n: d.n,
            k: d.k,
            epsilon: (2 * d.k == d.n).then_some(d.eps),
            partition: d.partition().to_string(),
            dimension: sphorb::orbitcat::orbit_dimension(d),
            representative_x: basis_name_string(&representative_x(d)),
            representative_y: basis_name_string(&representative_y(d)),
        })
        .collect();
    let mut text = String::new();
    let mut last_n = 0;
    for (d, r) in cases.iter().zip(&rows) {
        if d.n != last_n {
            let _ = writeln!(
                text,
                "# spherical non-minimal nilpotent orbits of sl_{}(R)",
                d.n
            );
            let _ = writeln!(text, "k\teps\tpartition\tdim\tX\tY");
            last_n = d.n;
        }
        let _ = writeln!(
            text,
            "{}\t{}\t{}\t{}\t{}\t{}",
            r.k,
            eps_label(d),
            r.partition,
            r.dimension,
            r.representative_x,
            r.representative_y
        );
    }
    Rendered {
        text,
        json: serde_json::to_value(rows).expect("plain rows"),
        ok: true,
    }
}

#[derive(Serialize)]
struct StabRow {
    descriptor: OrbitDescriptor,
    pieces: Vec<(String, Vec<String>)>,
    audit: Vec<String>,
    error: Option<String>,
}

fn stab_row(d: &OrbitDescriptor) -> StabRow {
    match verify_stabilizer_decomposition(d) {
        Ok(s) => {
            let StabilizerDecomposition {
                full,
                reductive,
                unipotent,
                levi_block,
                diagonal_block,
                u_piece,
                v_piece,
                borel_stabilizer,
                ..
            } = s;
            let pieces = [
                ("l_k", &levi_block),
                ("v_k,eps", &diagonal_block),
                ("u(X)", &u_piece),
                ("v(X)", &v_piece),
                ("b(X)", &borel_stabilizer),
            ]
            .into_iter()
            .map(|(name, sub)| (name.to_string(), sub.basis_names()))
            .collect();
            let n = d.n;
            let audit = vec![
                format!(
                    "dim g(X) = {} = n^2-1-2k(n-k) = {}",
                    full.dim(),
                    n * n - 1 - 2 * d.k * (n - d.k)
                ),
                format!(
                    "dim r(X) = dim l_k + dim v_k,eps = {} + {} = {}",
                    levi_block.dim(),
                    diagonal_block.dim(),
                    reductive.dim()
                ),
                format!(
                    "dim unipotent radical = dim u(X) + dim v(X) = {} + {} = {}",
                    u_piece.dim(),
                    v_piece.dim(),
                    unipotent.dim()
                ),
                format!("dim b(X) = {}", borel_stabilizer.dim()),
                "decomposition checks: ok".to_string(),
            ];
            StabRow {
                descriptor: *d,
                pieces,
                audit,
                error: None,
            }
        }
        Err(e) => StabRow {
            descriptor: *d,
            pieces: Vec::new(),
            audit: Vec::new(),
            error: Some(e.to_string()),
        },
    }
}

pub fn stab(cases: &[OrbitDescriptor]) -> Rendered {
    let rows: Vec<StabRow> = cases.par_iter().map(stab_row).collect();
    let mut text = String::new();
    for r in &rows {
        let _ = writeln!(text, "# centralizer of X for {}", r.descriptor);
        for (name, basis) in &r.pieces {
            let listed = if basis.is_empty() {
                "0".to_string()
            } else {
                basis.join(", ")
            };
            let _ = writeln!(text, "{name} (dim {}): {listed}", basis.len());
        }
        for line in &r.audit {
            let _ = writeln!(text, "audit: {line}");
        }
        if let Some(e) = &r.error {
            let _ = writeln!(text, "FAIL: {e}");
        }
    }
    Rendered {
        ok: rows.iter().all(|r| r.error.is_none()),
        json: serde_json::to_value(&rows).expect("plain rows"),
        text,
    }
}

pub fn render(table: Table, cases: &[OrbitDescriptor]) -> Rendered {
    match table {
        Table::Cor43 => duflo(cases),
        Table::Dims => dims(cases),
        Table::Chain => chain(cases),
    }
}

fn duflo(cases: &[OrbitDescriptor]) -> Rendered {
    let tables: Vec<DufloParameters> = cases.par_iter().map(duflo_classification).collect();
    Rendered {
        text: tables.iter().map(render_duflo_table).collect(),
        ok: tables.iter().all(DufloParameters::is_consistent),
        json: serde_json::to_value(&tables).expect("plain rows"),
    }
}

#[derive(Serialize)]
struct DimRow {
    n: usize,
    k: usize,
    epsilon: Option<i8>,
    partition: String,
    orbit_dim: usize,
    formula: usize,
    borel_stabilizer_dim: usize,
}

fn dims(cases: &[OrbitDescriptor]) -> Rendered {
    let rows: Vec<DimRow> = cases
        .par_iter()
        .map(|d| DimRow {
            n: d.n,
            k: d.k,
            epsilon: (2 * d.k == d.n).then_some(d.eps),
            partition: d.partition().to_string(),
            orbit_dim: centralizer_codimension(&representative_x(d)),
            formula: 2 * d.k * (d.n - d.k),
            borel_stabilizer_dim: form_stabilizer(&borel_form(d), &Subalgebra::borel(d.n)).dim(),
        })
        .collect();
    let mut text = String::from("n\tk\teps\tpartition\tdim O\t2k(n-k)\tdim b(X)\n");
    for (d, r) in cases.iter().zip(&rows) {
        let _ = writeln!(
            text,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.n,
            r.k,
            eps_label(d),
            r.partition,
            r.orbit_dim,
            r.formula,
            r.borel_stabilizer_dim
        );
    }
    Rendered {
        ok: rows.iter().all(|r| r.orbit_dim == r.formula),
        json: serde_json::to_value(&rows).expect("plain rows"),
        text,
    }
}

#[derive(Serialize)]
struct ChainRow {
    descriptor: OrbitDescriptor,
    links: Vec<ChainLink>,
    error: Option<String>,
}

fn chain(cases: &[OrbitDescriptor]) -> Rendered {
    let rows: Vec<ChainRow> = cases
        .par_iter()
        .map(|d| match recursion_chain(d) {
            Ok(links) => ChainRow {
                descriptor: *d,
                links,
                error: None,
            },
            Err(e) => ChainRow {
                descriptor: *d,
                links: Vec::new(),
                error: Some(e),
            },
        })
        .collect();
    let mut text = String::new();
    for r in &rows {
        let _ = writeln!(
            text,
            "# recursion chain g_k,k in ... in g_1,k for {}",
            r.descriptor
        );
        let _ = writeln!(text, "i\tdim g_ik\trank g_ik");
        for l in &r.links {
            let _ = writeln!(text, "{}\t{}\t{}", l.i, l.dim, l.rank);
        }
        if let Some(e) = &r.error {
            let _ = writeln!(text, "FAIL: {e}");
        }
        let ranks: Vec<String> = r.links.iter().map(|l| l.rank.to_string()).collect();
        let _ = writeln!(text, "ranks: {}", ranks.join(","));
    }
    Rendered {
        ok: rows.iter().all(|r| r.error.is_none()),
        json: serde_json::to_value(&rows).expect("plain rows"),
        text,
    }
}
