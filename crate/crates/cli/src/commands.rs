//! Subcommand implementations, each returning the rendered output string.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{json, Value};

use lieclass::alcove::{
    alcove_vertices, locate, reduce_to_alcove, translation_index, AffineStep, AlcovePoint,
    AlcovePosition,
};
use lieclass::lattice::{center_sc, center_via_minuscule, minuscule_coweights, CoweightLattice};
use lieclass::rootsys::{Family, RootSystem, RootSystemType};
use lieclass::strongorth::{cascade, noncompact_positive_roots, so_rank, so_set};
use lieclass::vogan::{
    classify, enumerate_real_forms, normalize_painting, RealFormRecord, TableEntry, VoganDiagram,
};
use lieclass::{Rational, MatF};

use crate::{usage, CliError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn parse_type(family: &str, rank: usize) -> Result<RootSystemType, CliError> {
    let fam = Family::from_str(family).map_err(|e| usage(e.to_string()))?;
    RootSystemType::new(fam, rank).map_err(|e| usage(e.to_string()))
}

fn root_list(rs: &RootSystem) -> Vec<Vec<i64>> {
    rs.positive_roots().iter().map(|r| r.coords().to_vec()).collect()
}

fn rationals_to_strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

// ---------------------------------------------------------------- roots --

pub fn cmd_roots(t: RootSystemType, format: Format) -> String {
    let rs = RootSystem::build(t);
    match format {
        Format::Json => {
            let doc = json!({
                "type": t.to_string(),
                "family": t.family().to_string(),
                "rank": t.rank(),
                "cartan": (0..t.rank()).map(|i| rs.cartan().row(i).to_vec()).collect::<Vec<_>>(),
                "symmetrizer": rs.symmetrizer(),
                "positive_roots": root_list(&rs),
                "num_positive_roots": rs.num_positive_roots(),
                "highest_root": rs.highest_root().coords(),
                "highest_root_labels": rs.highest_root_labels(),
                "highest_short_root": rs.highest_short_root().coords(),
                "exponents": rs.exponents(),
                "weyl_order": u64::try_from(&rs.weyl_order()).expect("fits for rank <= 8"),
            });
            pretty(doc)
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "root system {t}");
            let _ = writeln!(out, "positive roots ({}):", rs.num_positive_roots());
            for r in rs.positive_roots() {
                let _ = writeln!(out, "  {:?}  height {}", r.coords(), r.height());
            }
            let _ = writeln!(
                out,
                "highest root {:?}  (labels {:?})",
                rs.highest_root().coords(),
                rs.highest_root_labels()
            );
            let _ = writeln!(out, "highest short root {:?}", rs.highest_short_root().coords());
            let _ = writeln!(out, "exponents {:?}", rs.exponents());
            let _ = writeln!(out, "weyl order {}", rs.weyl_order());
            out
        }
    }
}

// --------------------------------------------------------------- center --

pub fn cmd_center(t: RootSystemType, format: Format) -> String {
    let rs = RootSystem::build(t);
    let z = center_sc(&rs);
    let minuscule: Vec<usize> = minuscule_coweights(&rs).iter().map(|j| j + 1).collect();
    let via = center_via_minuscule(&rs);
    let agreement = via as i64 == z.order();
    match format {
        Format::Json => pretty(json!({
            "type": t.to_string(),
            "family": t.family().to_string(),
            "rank": t.rank(),
            "invariant_factors": z.invariant_factors(),
            "order": z.order(),
            "structure": z.to_string(),
            "minuscule_nodes": minuscule,
            "center_via_minuscule": via,
            "agreement": agreement,
        })),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "center of the simply connected group of type {t}");
            let _ = writeln!(out, "Z(G_sc) = P/Q = {z}  (order {})", z.order());
            let _ = writeln!(out, "minuscule nodes: {minuscule:?}");
            let _ = writeln!(out, "1 + #minuscule = {via}");
            let _ = writeln!(out, "agreement: {agreement}");
            out
        }
    }
}

// --------------------------------------------------------------- alcove --

pub fn parse_point(spec: &str, rank: usize) -> Result<Vec<Rational>, CliError> {
    let coords: Result<Vec<Rational>, _> =
        spec.split(',').map(|s| Rational::from_str(s.trim())).collect();
    let coords = coords.map_err(|e| usage(format!("bad point coordinate: {e}")))?;
    if coords.len() != rank {
        return Err(usage(format!(
            "point has {} coordinates, expected rank {rank}",
            coords.len()
        )));
    }
    Ok(coords)
}

fn position_json(rs: &RootSystem, p: &AlcovePoint) -> Value {
    match locate(rs, p).expect("dimension checked") {
        AlcovePosition::Interior => json!({"kind": "interior"}),
        AlcovePosition::Vertex(i) => json!({"kind": "vertex", "index": i}),
        AlcovePosition::Exterior => json!({"kind": "exterior"}),
        AlcovePosition::OnWall(walls) => json!({
            "kind": "wall",
            "walls": walls.iter().map(|(root, level)| json!({
                "root": root.coords(),
                "level": level,
            })).collect::<Vec<_>>(),
        }),
    }
}

fn position_text(rs: &RootSystem, p: &AlcovePoint) -> String {
    match locate(rs, p).expect("dimension checked") {
        AlcovePosition::Interior => "interior".to_string(),
        AlcovePosition::Vertex(i) => format!("vertex {i}"),
        AlcovePosition::Exterior => "exterior".to_string(),
        AlcovePosition::OnWall(walls) => {
            let ws: Vec<String> = walls
                .iter()
                .map(|(root, level)| format!("H({:?}, {level})", root.coords()))
                .collect();
            format!("on walls {}", ws.join(", "))
        }
    }
}

fn word_json(word: &[AffineStep]) -> Vec<Value> {
    word.iter()
        .map(|step| match step {
            AffineStep::Translate(v) => json!({"op": "translate", "by": rationals_to_strings(v)}),
            AffineStep::Reflect(i) => json!({"op": "reflect", "node": i + 1}),
            AffineStep::ReflectHighest => json!({"op": "reflect_highest"}),
        })
        .collect()
}

pub fn cmd_alcove(
    t: RootSystemType,
    point: Option<&str>,
    format: Format,
) -> Result<String, CliError> {
    let rs = RootSystem::build(t);
    let vertices = alcove_vertices(&rs);
    let coweight_index =
        translation_index(&rs, &CoweightLattice::coweight_lattice(&rs)).expect("P^v is valid");

    let reduction = match point {
        None => None,
        Some(spec) => {
            let coords = parse_point(spec, t.rank())?;
            let p = AlcovePoint::from_rationals(coords);
            let (reduced, word) = reduce_to_alcove(&rs, &p).expect("dimension checked");
            Some((p, reduced, word))
        }
    };

    match format {
        Format::Json => {
            let mut doc = json!({
                "type": t.to_string(),
                "family": t.family().to_string(),
                "rank": t.rank(),
                "vertices": vertices.iter()
                    .map(|v| rationals_to_strings(v.coeffs()))
                    .collect::<Vec<_>>(),
                "coweight_index": coweight_index,
            });
            if let Some((p, reduced, word)) = &reduction {
                doc["reduction"] = json!({
                    "point": rationals_to_strings(p.coeffs()),
                    "reduced": rationals_to_strings(reduced.coeffs()),
                    "position": position_json(&rs, reduced),
                    "word": word_json(word),
                });
            }
            Ok(pretty(doc))
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "fundamental alcove of {t} (coordinates in the coweight basis)");
            let _ = writeln!(out, "vertices:");
            for (i, v) in vertices.iter().enumerate() {
                let _ = writeln!(out, "  [{i}] ({})", rationals_to_strings(v.coeffs()).join(", "));
            }
            let _ = writeln!(out, "index [P^v : Q^v] = {coweight_index}");
            if let Some((p, reduced, word)) = &reduction {
                let _ = writeln!(
                    out,
                    "point  ({})",
                    rationals_to_strings(p.coeffs()).join(", ")
                );
                let _ = writeln!(
                    out,
                    "reduced ({})  [{}]",
                    rationals_to_strings(reduced.coeffs()).join(", "),
                    position_text(&rs, reduced)
                );
                let _ = writeln!(out, "word ({} steps):", word.len());
                for step in word {
                    match step {
                        AffineStep::Translate(v) => {
                            let _ = writeln!(
                                out,
                                "  translate by ({})",
                                rationals_to_strings(v).join(", ")
                            );
                        }
                        AffineStep::Reflect(i) => {
                            let _ = writeln!(out, "  reflect in wall alpha_{} = 0", i + 1);
                        }
                        AffineStep::ReflectHighest => {
                            let _ = writeln!(out, "  reflect in wall theta = 1");
                        }
                    }
                }
            }
            Ok(out)
        }
    }
}

// ------------------------------------------------------------- classify --

fn count_json(e: &TableEntry<usize>) -> Value {
    match e {
        TableEntry::Value(v) => json!(*v),
        TableEntry::Unknown => Value::Null,
    }
}

fn record_json(r: &RealFormRecord) -> Value {
    json!({
        "g0": r.g0,
        "k0": r.k0,
        "k0_center_dim": r.k0_center_dim,
        "real_rank": count_json(&r.real_rank),
        "restricted": match &r.restricted {
            TableEntry::Value(s) => json!(s),
            TableEntry::Unknown => Value::Null,
        },
        "hermitian": r.hermitian,
        "z_cap_a": count_json(&r.z_cap_a),
        "cartan_type": r.cartan_type,
    })
}

/// The fixed-width classification table for one type; this is the format
/// the golden acceptance file is stored in.
pub fn classify_table_text(t: RootSystemType) -> String {
    let records = enumerate_real_forms(t);
    let mut out = String::new();
    let _ = writeln!(out, "# {t}");
    let _ = writeln!(
        out,
        "{:<12} {:<18} {:<5} {:<11} {:<10} {:<6} cartan",
        "g0", "k0", "rank", "restricted", "hermitian", "|ZnA|"
    );
    for r in &records {
        let _ = writeln!(
            out,
            "{:<12} {:<18} {:<5} {:<11} {:<10} {:<6} {}",
            r.g0,
            r.k0,
            r.real_rank.to_string(),
            r.restricted.to_string(),
            if r.hermitian { "yes" } else { "no" },
            r.z_cap_a.to_string(),
            r.cartan_type
        );
    }
    out
}

/// The full sweep used by `classify --all`: classical families at every
/// rank up to 8 plus the exceptional types.
pub fn classify_all_types() -> Vec<RootSystemType> {
    lieclass::rootsys::all_types_up_to_rank(8)
}

pub fn cmd_classify(t: RootSystemType, format: Format) -> String {
    match format {
        Format::Text => classify_table_text(t),
        Format::Json => {
            let records = enumerate_real_forms(t);
            pretty(json!({
                "type": t.to_string(),
                "family": t.family().to_string(),
                "rank": t.rank(),
                "real_forms": records.iter().map(record_json).collect::<Vec<_>>(),
            }))
        }
    }
}

pub fn cmd_classify_all(format: Format) -> String {
    let types = classify_all_types();
    match format {
        Format::Text => {
            let tables: Vec<String> = types.into_iter().map(classify_table_text).collect();
            tables.join("\n")
        }
        Format::Json => {
            let docs: Vec<Value> = types
                .into_iter()
                .map(|t| {
                    json!({
                        "type": t.to_string(),
                        "real_forms": enumerate_real_forms(t)
                            .iter()
                            .map(record_json)
                            .collect::<Vec<_>>(),
                    })
                })
                .collect();
            pretty(json!({"types": docs}))
        }
    }
}

// ---------------------------------------------------------------- vogan --

pub fn parse_involution(spec: &str, rs: &RootSystem) -> Result<Vec<usize>, CliError> {
    let n = rs.rank();
    let identity: Vec<usize> = (0..n).collect();
    match spec {
        "id" | "none" | "trivial" => Ok(identity),
        "flip" => {
            let perm = match rs.rs_type().family() {
                Family::A => (0..n).rev().collect::<Vec<_>>(),
                Family::D => {
                    let mut p = identity.clone();
                    p.swap(n - 2, n - 1);
                    p
                }
                Family::E if n == 6 => vec![5, 1, 4, 3, 2, 0],
                _ => {
                    return Err(usage(format!(
                        "type {} has no nontrivial diagram involution",
                        rs.rs_type()
                    )))
                }
            };
            lieclass::vogan::validate(rs, &perm, &BTreeSet::new())
                .map_err(|e| usage(e.to_string()))?;
            Ok(perm)
        }
        other => {
            let body = other
                .strip_prefix("swap")
                .ok_or_else(|| usage(format!("unknown involution `{other}`")))?;
            let digits: Vec<usize> = if body.contains(',') {
                body.split(',')
                    .map(|d| d.trim().parse::<usize>())
                    .collect::<Result<_, _>>()
                    .map_err(|e| usage(format!("bad swap spec: {e}")))?
            } else {
                body.chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize).ok_or(()))
                    .collect::<Result<_, _>>()
                    .map_err(|()| usage(format!("bad swap spec `{body}`")))?
            };
            let [a, b] = digits.as_slice() else {
                return Err(usage("swap takes exactly two node indices".to_string()));
            };
            if *a == 0 || *b == 0 || *a > n || *b > n || a == b {
                return Err(usage(format!("swap nodes must be distinct in 1..={n}")));
            }
            let mut perm = identity;
            perm.swap(a - 1, b - 1);
            lieclass::vogan::validate(rs, &perm, &BTreeSet::new()).map_err(|_| {
                usage(format!(
                    "swap{a},{b} is not a diagram automorphism of {}",
                    rs.rs_type()
                ))
            })?;
            Ok(perm)
        }
    }
}

pub fn parse_paint(spec: &str, rank: usize) -> Result<BTreeSet<usize>, CliError> {
    if spec == "none" || spec.is_empty() {
        return Ok(BTreeSet::new());
    }
    let mut out = BTreeSet::new();
    for part in spec.split(',') {
        let j: usize =
            part.trim().parse().map_err(|e| usage(format!("bad paint node: {e}")))?;
        if j == 0 || j > rank {
            return Err(usage(format!("paint node {j} out of range 1..={rank}")));
        }
        out.insert(j - 1);
    }
    Ok(out)
}

pub fn cmd_vogan(
    t: RootSystemType,
    involution_spec: &str,
    paint_spec: &str,
    format: Format,
) -> Result<String, CliError> {
    let rs = RootSystem::build(t);
    let involution = parse_involution(involution_spec, &rs)?;
    let painted = parse_paint(paint_spec, t.rank())?;
    let trivial = involution.iter().enumerate().all(|(i, &j)| i == j);

    let effective = if trivial {
        // reduce to the canonical painting with at most one node
        normalize_painting(&rs, &painted)
    } else {
        if painted.len() > 1 {
            return Err(usage(
                "with a nontrivial involution supply at most one painted node".to_string(),
            ));
        }
        painted.clone()
    };
    // the requested painting must itself be valid (fixed nodes only)
    lieclass::vogan::validate(&rs, &involution, &painted).map_err(|e| usage(e.to_string()))?;
    let diagram = VoganDiagram::new(&rs, involution.clone(), effective.clone())
        .map_err(|e| usage(e.to_string()))?;
    let record = classify(&rs, &diagram).map_err(|e| usage(e.to_string()))?;

    let painted_1: Vec<usize> = painted.iter().map(|j| j + 1).collect();
    let effective_1: Vec<usize> = effective.iter().map(|j| j + 1).collect();
    match format {
        Format::Json => Ok(pretty(json!({
            "type": t.to_string(),
            "involution": involution.iter().map(|j| j + 1).collect::<Vec<_>>(),
            "painted": painted_1,
            "normalized_painted": effective_1,
            "real_form": record_json(&record),
        }))),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "vogan diagram on {t}");
            let _ = writeln!(
                out,
                "involution: {:?}  painted: {:?}  normalized: {:?}",
                involution.iter().map(|j| j + 1).collect::<Vec<_>>(),
                painted_1,
                effective_1
            );
            let _ = writeln!(
                out,
                "g0 = {}   k0 = {}   rank = {}   restricted = {}   hermitian = {}   |ZnA| = {}   cartan = {}",
                record.g0,
                record.k0,
                record.real_rank,
                record.restricted,
                if record.hermitian { "yes" } else { "no" },
                record.z_cap_a,
                record.cartan_type
            );
            Ok(out)
        }
    }
}

// -------------------------------------------------------------- so-rank --

pub fn cmd_so_rank(t: RootSystemType, node: usize, format: Format) -> Result<String, CliError> {
    if node == 0 || node > t.rank() {
        return Err(usage(format!("node {node} out of range 1..={}", t.rank())));
    }
    let rs = RootSystem::build(t);
    let j = node - 1;
    let nc = noncompact_positive_roots(&rs, j).map_err(|e| usage(e.to_string()))?;
    let rank = so_rank(&rs, j).map_err(|e| usage(e.to_string()))?;
    let max_set = so_set(&rs, j).expect("same preconditions as so_rank");
    let casc = cascade(&rs, j).expect("same preconditions as so_rank");
    match format {
        Format::Json => Ok(pretty(json!({
            "type": t.to_string(),
            "node": node,
            "noncompact_count": nc.roots.len(),
            "so_rank": rank,
            "max_set": max_set.iter().map(|r| r.coords().to_vec()).collect::<Vec<_>>(),
            "cascade": casc.iter().map(|r| r.coords().to_vec()).collect::<Vec<_>>(),
        }))),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "strongly orthogonal rank of {t}, node {node}");
            let _ = writeln!(out, "noncompact positive roots: {}", nc.roots.len());
            let _ = writeln!(out, "so_rank = {rank}");
            let _ = writeln!(
                out,
                "maximum set: {:?}",
                max_set.iter().map(|r| r.coords().to_vec()).collect::<Vec<_>>()
            );
            let _ = writeln!(
                out,
                "greedy cascade ({} roots): {:?}",
                casc.len(),
                casc.iter().map(|r| r.coords().to_vec()).collect::<Vec<_>>()
            );
            Ok(out)
        }
    }
}

// ---------------------------------------------------------------- polar --

pub fn cmd_polar(path: &str, format: Format) -> Result<String, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {path}: {e}")))?;
    let doc: Value =
        serde_json::from_str(&text).map_err(|e| usage(format!("bad JSON in {path}: {e}")))?;
    let n = doc["n"]
        .as_u64()
        .ok_or_else(|| usage("matrix file needs an integer field `n`".to_string()))?
        as usize;
    let entries = doc["entries"]
        .as_array()
        .ok_or_else(|| usage("matrix file needs an `entries` array".to_string()))?;
    if n == 0 || entries.len() != n {
        return Err(usage(format!("`entries` must be {n} rows")));
    }
    let mut rows = Vec::with_capacity(n);
    for row in entries {
        let row = row
            .as_array()
            .ok_or_else(|| usage("each row must be an array".to_string()))?;
        if row.len() != n {
            return Err(usage(format!("each row must have {n} entries")));
        }
        let row: Option<Vec<f64>> = row.iter().map(Value::as_f64).collect();
        rows.push(row.ok_or_else(|| usage("entries must be numbers".to_string()))?);
    }
    let a: MatF = lieclass::Matrix::from_rows(rows).map_err(|e| usage(e.to_string()))?;

    let pair = lieclass::polar::polar_decompose(&a).map_err(|e| usage(e.to_string()))?;
    let exp_x = lieclass::polar::sym_exp(&pair.x).expect("x is symmetric");
    let recon = pair.k.mul(&exp_x);
    let mut err: f64 = 0.0;
    let mut ortho: f64 = 0.0;
    let ktk = pair.k.transpose().mul(&pair.k);
    for i in 0..n {
        for j in 0..n {
            err += (recon[(i, j)] - a[(i, j)]).powi(2);
            ortho += (ktk[(i, j)] - f64::from(u8::from(i == j))).powi(2);
        }
    }
    let matrix_rows =
        |m: &MatF| (0..n).map(|i| m.row(i).to_vec()).collect::<Vec<_>>();
    match format {
        Format::Json => Ok(pretty(json!({
            "n": n,
            "k": matrix_rows(&pair.k),
            "x": matrix_rows(&pair.x),
            "reconstruction_error": err.sqrt(),
            "orthogonality_error": ortho.sqrt(),
        }))),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "polar decomposition a = k exp(x), n = {n}");
            let _ = writeln!(out, "k:");
            for i in 0..n {
                let _ = writeln!(out, "  {:?}", pair.k.row(i));
            }
            let _ = writeln!(out, "x:");
            for i in 0..n {
                let _ = writeln!(out, "  {:?}", pair.x.row(i));
            }
            let _ = writeln!(out, "reconstruction error {:.3e}", err.sqrt());
            let _ = writeln!(out, "orthogonality error {:.3e}", ortho.sqrt());
            Ok(out)
        }
    }
}

fn pretty(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}
