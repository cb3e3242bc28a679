//! The catalog: the 28 sincere one-parameter posets and the finite-type
//! posets with their printed canonical matrices, the K6/K7/K8 series
//! templates, the parametric dimension families, and the dimension tables.
//! Catalog data lives in versioned text files embedded at compile time;
//! a freeze test re-emits and diffs them.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::corep::MatrixCorep;
use crate::fields::{GElem, GMat, Tower};
use crate::poset::EquippedPoset;
use crate::textio;
use crate::tits::DimVector;
use crate::{Error, Result};

pub const POSET_DATA: &str = include_str!("../data/posets/catalog.poset");
pub const FINITE_TYPE_DATA: &str = include_str!("../data/coreps/finite_type.corep");
pub const TABLE2_DATA: &str = include_str!("../data/coreps/table2.corep");
pub const APPENDIX_E_DATA: &str = include_str!("../data/tables/appendix_e.tsv");
pub const APPENDIX_F_DATA: &str = include_str!("../data/tables/appendix_f.tsv");

/// The 28 sincere one-parameter 2-equipped posets.
pub const SINCERE_IDS: [&str; 28] = [
    "K6", "K7", "K8", "K9", "A25", "A26", "A27", "A28", "A29", "A30", "A31", "A32", "A33",
    "A34", "A35", "A36", "A37", "A38", "A39", "A40", "A41", "A42", "A43", "A44", "A45", "A46",
    "A47", "A48",
];

pub const FINITE_TYPE_IDS: [&str; 6] = ["F13", "F14", "F15", "F16", "F17", "F18"];

fn poset_map() -> &'static BTreeMap<String, EquippedPoset> {
    static CACHE: OnceLock<BTreeMap<String, EquippedPoset>> = OnceLock::new();
    CACHE.get_or_init(|| {
        textio::parse_posets(POSET_DATA)
            .expect("catalog poset data parses")
            .into_iter()
            .map(|p| (p.name().to_string(), p))
            .collect()
    })
}

/// Look up a catalog poset by id; `X*` is the dual of `X`.
pub fn catalog_poset(id: &str) -> Result<EquippedPoset> {
    if let Some(base) = id.strip_suffix('*') {
        let p = poset_map()
            .get(base)
            .ok_or_else(|| Error::UnknownCatalogId(id.to_string()))?;
        return Ok(p.dual());
    }
    poset_map()
        .get(id)
        .cloned()
        .ok_or_else(|| Error::UnknownCatalogId(id.to_string()))
}

// ---- parametric dimension families (appendix diagram annotations) ---------

/// Parametric family (d, f) of a sincere poset, for k ≥ 1. Posets whose
/// dimensions are tabled instead have no family.
pub fn sincere_dims(id: &str, k: i64) -> Result<(DimVector, i64)> {
    if k < 1 {
        return Err(Error::FamilyAbsent(format!("{id} with k < 1")));
    }
    let (d0, dx, f): (i64, Vec<i64>, i64) = match id {
        "A28" => (2 * k + 1, vec![1, 2 * k, 1, 2 * k], 2),
        "A29" => (2 * k, vec![2 * k, 2 * k - 2, 1, 1], 2),
        "A30" => (2 * k, vec![k, k, 2 * k - 2, 1, 1], 2),
        "A31" => (2 * k + 1, vec![k, k, 1, 2 * k, 1], 2),
        "A32" => (2 * k + 2, vec![k, k, 1, 1, 2 * k + 2], 2),
        "A33" => (2 * k + 1, vec![2 * k, 2 * k, 1, 1], 2),
        "A34" => (2 * k, vec![2 * k, 2 * k - 2, 1, 1], 2),
        "A35" => (2 * k + 1, vec![k, k, 1, 2 * k, 1], 2),
        "A36" => (2 * k, vec![k, k, 1, 2 * k - 2, 1], 2),
        "A37" => (2 * k + 2, vec![k, k, 1, 1, 2 * k + 2], 2),
        "A41" => (k + 1, vec![1, k, k, 1], 1),
        "A42" => (k + 1, vec![k, k, 1, 1], 1),
        "A43" => (2 * k + 2, vec![1, 2 * k + 1, 1, k, k + 1], 1),
        "A44" => (2 * k + 1, vec![1, 2 * k, 1, k, k], 1),
        "A45" => (2 * k + 1, vec![1, 2 * k, 2 * k, 1], 4),
        "A46" => (k + 1, vec![1, k, k, 1], 2),
        "A47" => (2 * k + 1, vec![k, k, 2 * k, 1, 1], 4),
        "A48" => (2 * k + 1, vec![1, 2 * k, 1, k, k], 2),
        other if catalog_poset(other).is_ok() => {
            return Err(Error::FamilyAbsent(other.to_string()))
        }
        other => return Err(Error::UnknownCatalogId(other.to_string())),
    };
    Ok((DimVector::new(d0, dx), f))
}

/// Ids carrying a parametric family.
pub const FAMILY_IDS: [&str; 18] = [
    "A28", "A29", "A30", "A31", "A32", "A33", "A34", "A35", "A36", "A37", "A41", "A42", "A43",
    "A44", "A45", "A46", "A47", "A48",
];

// ---- dimension tables ------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimTableRow {
    pub poset_id: String,
    pub type_label: String,
    pub f: i64,
    pub d: DimVector,
}

fn parse_table(data: &str) -> Vec<DimTableRow> {
    let mut out = Vec::new();
    for line in data.lines().skip(1) {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        assert_eq!(cols.len(), 4, "table row: {line}");
        let nums: Vec<i64> = cols[3].split(',').map(|v| v.parse().unwrap()).collect();
        out.push(DimTableRow {
            poset_id: cols[0].to_string(),
            type_label: cols[1].to_string(),
            f: cols[2].parse().unwrap(),
            d: DimVector::new(nums[0], nums[1..].to_vec()),
        });
    }
    out
}

fn all_table_rows() -> &'static Vec<DimTableRow> {
    static CACHE: OnceLock<Vec<DimTableRow>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let mut rows = parse_table(APPENDIX_E_DATA);
        rows.extend(parse_table(APPENDIX_F_DATA));
        rows
    })
}

/// Minimal-dimension table of a poset, plus its step vector μ when tabled.
pub fn dim_table(id: &str) -> Result<(Vec<DimTableRow>, Option<DimVector>)> {
    let rows: Vec<DimTableRow> = all_table_rows()
        .iter()
        .filter(|r| r.poset_id == id && r.type_label != "mu")
        .cloned()
        .collect();
    if rows.is_empty() {
        return Err(Error::UnknownCatalogId(format!("dimension table {id}")));
    }
    let mu = all_table_rows()
        .iter()
        .find(|r| r.poset_id == id && r.type_label == "mu")
        .map(|r| r.d.clone());
    Ok((rows, mu))
}

pub const TABLE_IDS: [&str; 14] = [
    "A25", "A25*", "A26", "A26*", "A27", "A27*", "A38", "A38*", "A39", "A39*", "A40", "A40*",
    "K7", "K9",
];

// ---- printed canonical matrices --------------------------------------------

/// Split a multi-corepresentation data file into named blocks.
fn corep_blocks(data: &str) -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = Vec::new();
    let mut name = String::new();
    let mut body = String::new();
    for line in data.lines() {
        let trimmed = line.trim();
        if trimmed.starts_with('#') || trimmed.is_empty() {
            continue;
        }
        if trimmed.starts_with("corep ") && !body.is_empty() {
            out.push((std::mem::take(&mut name), std::mem::take(&mut body)));
        }
        if let Some(n) = trimmed.strip_prefix("name ") {
            name = n.trim().to_string();
        } else {
            body.push_str(trimmed);
            body.push('\n');
        }
    }
    if !body.is_empty() {
        out.push((name, body));
    }
    out
}

fn load_named_corep(data: &str, name: &str, tower: &Tower) -> Result<MatrixCorep> {
    for (n, body) in corep_blocks(data) {
        if n == name {
            let (m, _) = textio::parse_corep(&body, &catalog_poset, Some(tower))?;
            return Ok(m);
        }
    }
    Err(Error::UnknownCatalogId(name.to_string()))
}

/// The printed finite-type matrices and their tabled f values.
pub const FINITE_TYPE_MATRICES: [(&str, i64); 15] = [
    ("F13-A", 1),
    ("F13-B", 2),
    ("F14-A", 1),
    ("F14-B", 2),
    ("F14-C", 2),
    ("F15-A", 1),
    ("F15-B", 1),
    ("F15-C", 1),
    ("F15-D", 1),
    ("F15-E", 2),
    ("F15-F", 2),
    ("F15-G", 2),
    ("F16", 2),
    ("F17", 1),
    ("F18", 1),
];

/// Exact printed finite-type matrix over the requested tower.
pub fn finite_type_corep(tower: &Tower, name: &str) -> Result<MatrixCorep> {
    if !FINITE_TYPE_MATRICES.iter().any(|(n, _)| *n == name) {
        return Err(Error::UnknownCatalogId(name.to_string()));
    }
    load_named_corep(FINITE_TYPE_DATA, name, tower)
}

/// Extended-corepresentation example matrices: ₄(K6−4), ₄(A25−5), ₄(A25*−5),
/// with their Tits values.
pub const TABLE2_MATRICES: [(&str, i64); 3] = [("K6-4", 0), ("A25-5", 2), ("A25s-5", 2)];

pub fn table2_coreps(tower: &Tower) -> Result<[MatrixCorep; 3]> {
    Ok([
        load_named_corep(TABLE2_DATA, "K6-4", tower)?,
        load_named_corep(TABLE2_DATA, "A25-5", tower)?,
        load_named_corep(TABLE2_DATA, "A25s-5", tower)?,
    ])
}

// ---- corepresentation series -----------------------------------------------

/// Domain of the substituted square matrix X.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XDomain {
    /// Companion matrix with entries in F.
    FrobeniusOverF,
    /// Companion matrix over G.
    FrobeniusOverG,
    /// Any square G-matrix; instance-level indecomposability checks only.
    FreeGMatrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum K8Variant {
    Char2,
    Separable,
    Inseparable,
}

impl K8Variant {
    pub fn as_str(&self) -> &'static str {
        match self {
            K8Variant::Char2 => "char2",
            K8Variant::Separable => "separable",
            K8Variant::Inseparable => "inseparable",
        }
    }
}

/// Template entry c0·I + c1·X + c2·X̄ of one n×n block.
#[derive(Debug, Clone)]
pub struct SeriesEntry {
    pub c0: GElem,
    pub c1: GElem,
    pub c2: GElem,
}

/// A series template over (F[t], G[t]): per point, a grid of row blocks ×
/// column blocks whose entries are degree-≤1 expressions in t (and t̄).
#[derive(Debug, Clone)]
pub struct SeriesSpec {
    pub poset_id: String,
    pub row_blocks: usize,
    pub template: Vec<Vec<Vec<SeriesEntry>>>, // [point][row_block][col_block]
    pub domain: XDomain,
    pub variant: Option<K8Variant>,
}

fn entry(tower: &Tower, c0: &GElem, c1: &GElem, c2: &GElem) -> SeriesEntry {
    let _ = tower;
    SeriesEntry { c0: c0.clone(), c1: c1.clone(), c2: c2.clone() }
}

fn e_zero(t: &Tower) -> SeriesEntry {
    entry(t, &t.g_zero(), &t.g_zero(), &t.g_zero())
}

fn e_const(t: &Tower, c: GElem) -> SeriesEntry {
    entry(t, &c, &t.g_zero(), &t.g_zero())
}

fn e_x(t: &Tower, coef: GElem) -> SeriesEntry {
    entry(t, &t.g_zero(), &coef, &t.g_zero())
}

/// Series of K6: stripes a = [I], b = [ξI + X].
pub fn k6_spec(tower: &Tower) -> SeriesSpec {
    SeriesSpec {
        poset_id: "K6".into(),
        row_blocks: 1,
        template: vec![
            vec![vec![e_const(tower, tower.g_one())]],
            vec![vec![SeriesEntry {
                c0: tower.xi(),
                c1: tower.g_one(),
                c2: tower.g_zero(),
            }]],
        ],
        domain: XDomain::FrobeniusOverF,
        variant: None,
    }
}

/// Series of K7: stripes a = [I; I], p = [X; ξI], q = [I; 0], θ = [I; 0].
pub fn k7_spec(tower: &Tower) -> SeriesSpec {
    let one = tower.g_one();
    let xi = tower.xi();
    SeriesSpec {
        poset_id: "K7".into(),
        row_blocks: 2,
        template: vec![
            vec![vec![e_const(tower, one.clone())], vec![e_const(tower, one.clone())]],
            vec![vec![e_x(tower, one.clone())], vec![e_const(tower, xi)]],
            vec![vec![e_const(tower, one.clone())], vec![e_zero(tower)]],
            vec![vec![e_const(tower, one)], vec![e_zero(tower)]],
        ],
        domain: XDomain::FrobeniusOverF,
        variant: None,
    }
}

/// Series of K8 in the given variant: stripes ϱ = [I; 0], σ = [0; I], and a
/// two-block weak stripe depending on the variant.
pub fn k8_spec(tower: &Tower, variant: K8Variant) -> SeriesSpec {
    let one = tower.g_one();
    let xi = tower.xi();
    let xi_bar = tower.conj_bar(&xi);
    let a_row2 = match variant {
        // [ξX | I]
        K8Variant::Char2 => vec![e_x(tower, xi.clone()), e_const(tower, one.clone())],
        // [ξ̄I + ξX̄ | I + X̄]
        K8Variant::Separable => vec![
            SeriesEntry { c0: xi_bar, c1: tower.g_zero(), c2: xi.clone() },
            SeriesEntry { c0: one.clone(), c1: tower.g_zero(), c2: one.clone() },
        ],
        // [ξ(I + X̄) | X̄]
        K8Variant::Inseparable => vec![
            SeriesEntry { c0: xi.clone(), c1: tower.g_zero(), c2: xi.clone() },
            SeriesEntry { c0: tower.g_zero(), c1: tower.g_zero(), c2: one.clone() },
        ],
    };
    SeriesSpec {
        poset_id: "K8".into(),
        row_blocks: 2,
        template: vec![
            vec![vec![e_const(tower, one.clone())], vec![e_zero(tower)]],
            vec![vec![e_zero(tower)], vec![e_const(tower, one.clone())]],
            vec![
                vec![e_const(tower, xi), e_const(tower, one)],
                a_row2,
            ],
        ],
        domain: XDomain::FreeGMatrix,
        variant: Some(variant),
    }
}

/// Substitute X for t (λ ↦ λI) in a series template.
pub fn series_instantiate(tower: &Tower, spec: &SeriesSpec, x: &GMat) -> Result<MatrixCorep> {
    let n = x.rows;
    if n == 0 || x.cols != n {
        return Err(Error::BadMatrix("X must be square and nonempty".into()));
    }
    match spec.domain {
        XDomain::FrobeniusOverF => {
            if !x.is_companion_shape(tower) {
                return Err(Error::BadMatrix("X must be a companion block".into()));
            }
            if x.data.iter().any(|z| !z.is_in_f()) {
                return Err(Error::BadMatrix("X must have entries in F".into()));
            }
        }
        XDomain::FrobeniusOverG => {
            if !x.is_companion_shape(tower) {
                return Err(Error::BadMatrix("X must be a companion block".into()));
            }
        }
        XDomain::FreeGMatrix => {}
    }
    let poset = catalog_poset(&spec.poset_id)?;
    let x_bar = x.conj_bar(tower);
    let mut stripes = Vec::with_capacity(poset.n());
    for point_blocks in &spec.template {
        let col_blocks = point_blocks[0].len();
        let mut stripe = GMat::zero(tower, spec.row_blocks * n, col_blocks * n);
        for (rb, row) in point_blocks.iter().enumerate() {
            for (cb, ent) in row.iter().enumerate() {
                // c0·I + c1·X + c2·X̄
                for i in 0..n {
                    for j in 0..n {
                        let mut v = tower.g_zero();
                        if i == j && !ent.c0.is_zero() {
                            v = tower.g_add(&v, &ent.c0);
                        }
                        if !ent.c1.is_zero() {
                            v = tower.g_add(&v, &tower.g_mul(&ent.c1, x.at(i, j)));
                        }
                        if !ent.c2.is_zero() {
                            v = tower.g_add(&v, &tower.g_mul(&ent.c2, x_bar.at(i, j)));
                        }
                        stripe.set(rb * n + i, cb * n + j, v);
                    }
                }
            }
        }
        stripes.push(stripe);
    }
    MatrixCorep::new(poset, spec.row_blocks * n, stripes)
}

/// Companion-block coefficient lists (low-to-high, monic leading 1 omitted)
/// for the K8 catalog instances at n ≤ 2. The series similarity notion is
/// skew, so general position is not captured by ordinary factorization;
/// these lists are frozen desk-verified general-position blocks per variant.
pub fn k8_catalog_blocks(tower: &Tower) -> Vec<Vec<GElem>> {
    let g = |re: i64, im: i64| tower.g_from_i64(re, im);
    if tower.char() == 2 {
        // char-2 variant over GF(2) ⊂ GF(4)
        vec![
            vec![g(0, 1)],
            vec![g(0, 1), g(0, 0)],
            vec![g(0, 1), g(0, 1)],
            vec![g(1, 0), g(0, 1)],
            vec![g(0, 1), g(1, 0)],
            vec![g(1, 0), g(1, 0)],
            vec![g(1, 0), g(1, 1)],
        ]
    } else if tower.char() == 0 {
        // separable variant over Q(√2): t, t − ξ, t², (t − ξ)²
        let xi = tower.xi();
        let xi2 = tower.g_mul(&xi, &xi);
        vec![
            vec![g(0, 0)],
            vec![tower.g_neg(&xi)],
            vec![g(0, 0), g(0, 0)],
            vec![xi2, tower.g_neg(&tower.g_add(&xi, &xi))],
        ]
    } else {
        // separable variant over odd-characteristic towers
        vec![vec![g(0, 0)], vec![g(1, 1)], vec![g(0, 0), g(0, 0)], vec![g(0, 1), g(0, 1)]]
    }
}

/// Discrete K6 matrix [I_n | I_n + ξ J_n⁺(0)] with the nilpotent upper
/// Jordan block.
pub fn k6_discrete(tower: &Tower, n: usize) -> Result<MatrixCorep> {
    if n == 0 {
        return Err(Error::BadMatrix("n must be positive".into()));
    }
    let poset = catalog_poset("K6")?;
    let i = GMat::identity(tower, n);
    let mut b = GMat::identity(tower, n);
    for r in 0..n.saturating_sub(1) {
        b.set(r, r + 1, tower.xi());
    }
    MatrixCorep::new(poset, n, vec![i, b])
}

/// K6 series [I_n | ξI_n + X], X an n×n Frobenius block over F.
pub fn k6_series(tower: &Tower, n: usize, x: &GMat) -> Result<MatrixCorep> {
    if x.rows != n {
        return Err(Error::BadMatrix(format!("X is {}×{}, expected {n}×{n}", x.rows, x.cols)));
    }
    series_instantiate(tower, &k6_spec(tower), x)
}

/// K7 series with the printed block layout, X an n×n Frobenius block over F.
pub fn k7_series(tower: &Tower, n: usize, x: &GMat) -> Result<MatrixCorep> {
    if x.rows != n {
        return Err(Error::BadMatrix(format!("X is {}×{}, expected {n}×{n}", x.rows, x.cols)));
    }
    series_instantiate(tower, &k7_spec(tower), x)
}

/// K8 series; the variant must match the tower (char2 at characteristic 2,
/// separable at characteristic ≠ 2; the inseparable shape is not realizable
/// on any constructible tower here).
pub fn k8_series(tower: &Tower, variant: K8Variant, n: usize, x: &GMat) -> Result<MatrixCorep> {
    if x.rows != n {
        return Err(Error::BadMatrix(format!("X is {}×{}, expected {n}×{n}", x.rows, x.cols)));
    }
    let ok = match variant {
        K8Variant::Char2 => tower.char() == 2,
        K8Variant::Separable => tower.char() != 2,
        K8Variant::Inseparable => false,
    };
    if !ok {
        return Err(Error::BadMatrix(format!(
            "K8 variant {} does not match the tower (char {})",
            variant.as_str(),
            tower.char()
        )));
    }
    series_instantiate(tower, &k8_spec(tower, variant), x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corep::{is_reduced, spaces_of};
    use crate::fields::frobenius_companion;
    use crate::poset::{critical_poset, one_parameter_criterion, poset_iso, sincere_class,
                       CriticalId, IsoKind, OneParamStatus};
    use crate::tits::tits_form;

    #[test]
    fn poset_data_freeze() {
        // parse → canonical print must reproduce the data file byte for byte
        let posets = textio::parse_posets(POSET_DATA).unwrap();
        let regenerated: String = posets.iter().map(textio::print_poset).collect();
        assert_eq!(regenerated, POSET_DATA);
    }

    #[test]
    fn corep_data_freeze() {
        let t = Tower::gf2();
        for (name, f) in FINITE_TYPE_MATRICES {
            let m = finite_type_corep(&t, name).unwrap();
            let d = m.dim_vector();
            assert_eq!(tits_form(&m.poset, &d).unwrap(), f, "{name}");
        }
        for (name, f) in TABLE2_MATRICES {
            let m = load_named_corep(TABLE2_DATA, name, &t).unwrap();
            assert_eq!(tits_form(&m.poset, &m.dim_vector()).unwrap(), f, "{name}");
        }
        // re-emission reproduces each stored block byte for byte
        for data in [FINITE_TYPE_DATA, TABLE2_DATA] {
            for (name, body) in corep_blocks(data) {
                let (m, _) = textio::parse_corep(&body, &catalog_poset, Some(&t)).unwrap();
                assert_eq!(
                    textio::print_corep(&t, &m, "gf2"),
                    body,
                    "block {name} is not canonical"
                );
            }
        }
    }

    #[test]
    fn catalog_poset_lookup() {
        let a25 = catalog_poset("A25").unwrap();
        assert_eq!(a25.n(), 3);
        let a25s = catalog_poset("A25*").unwrap();
        // A25* = {a; η ⊲ b}
        let eta = a25s.index_of("eta").unwrap();
        let b = a25s.index_of("b").unwrap();
        assert!(a25s.strong_rel(eta, b));
        assert!(catalog_poset("A99").is_err());
        // catalog K6..K9 agree with the critical list
        for id in [CriticalId::K6, CriticalId::K7, CriticalId::K8, CriticalId::K9] {
            let c = critical_poset(id);
            let k = catalog_poset(id.as_str()).unwrap();
            assert!(poset_iso(c, &k, false).unwrap().is_some());
        }
    }

    #[test]
    fn all_28_are_one_parameter_and_identified() {
        for id in SINCERE_IDS {
            let p = catalog_poset(id).unwrap();
            assert_eq!(one_parameter_criterion(&p), OneParamStatus::OneParameter, "{id}");
            let found = sincere_class(&p).unwrap().expect(id);
            assert_eq!(found.0, id);
            assert_eq!(found.1, IsoKind::Iso);
            let dual_found = sincere_class(&p.dual()).unwrap().expect(id);
            // the dual is found as iso (self-dual posets) or anti
            if dual_found.1 == IsoKind::Anti {
                assert_eq!(dual_found.0, id);
            }
        }
    }

    #[test]
    fn sincere_class_examples() {
        let a25_star = catalog_poset("A25*").unwrap();
        let (id, kind) = sincere_class(&a25_star).unwrap().unwrap();
        assert_eq!((id.as_str(), kind), ("A25", IsoKind::Anti));
        let k9 = catalog_poset("K9").unwrap();
        assert_eq!(
            sincere_class(&k9).unwrap().unwrap(),
            ("K9".to_string(), IsoKind::Iso)
        );
        let f17 = catalog_poset("F17").unwrap();
        assert!(sincere_class(&f17).unwrap().is_none());
    }

    #[test]
    fn finite_type_posets_are_finite_candidates() {
        for id in FINITE_TYPE_IDS {
            let p = catalog_poset(id).unwrap();
            assert_eq!(
                one_parameter_criterion(&p),
                OneParamStatus::FiniteTypeCandidate,
                "{id}"
            );
        }
    }

    #[test]
    fn families_reproduce_annotations() {
        for id in FAMILY_IDS {
            let p = catalog_poset(id).unwrap();
            for k in 1..=5 {
                let (d, f) = sincere_dims(id, k).unwrap();
                assert_eq!(tits_form(&p, &d).unwrap(), f, "{id} k={k}");
            }
        }
        assert!(matches!(sincere_dims("A25", 1), Err(Error::FamilyAbsent(_))));
        let (d, f) = sincere_dims("A41", 3).unwrap();
        assert_eq!(d, DimVector::new(4, vec![1, 3, 3, 1]));
        assert_eq!(f, 1);
        let (d, f) = sincere_dims("A45", 1).unwrap();
        assert_eq!(d, DimVector::new(3, vec![1, 2, 2, 1]));
        assert_eq!(f, 4);
        let (d, f) = sincere_dims("A28", 2).unwrap();
        assert_eq!(d, DimVector::new(5, vec![1, 4, 1, 4]));
        assert_eq!(f, 2);
    }

    #[test]
    fn dim_table_lookups() {
        let (rows, mu) = dim_table("A25").unwrap();
        assert_eq!(rows.len(), 5);
        assert!(mu.is_none());
        let t4 = rows.iter().find(|r| r.type_label == "4").unwrap();
        assert_eq!(t4.f, 2);
        assert_eq!(t4.d, DimVector::new(1, vec![2, 0, 1]));
        let (rows, mu) = dim_table("K7").unwrap();
        assert_eq!(rows.len(), 48);
        assert_eq!(mu.unwrap(), DimVector::new(2, vec![1, 1, 1, 1]));
        let (rows, mu) = dim_table("K9").unwrap();
        assert_eq!(rows.len(), 48);
        assert_eq!(mu.unwrap(), DimVector::new(3, vec![2, 2, 1, 1]));
        let r22 = rows.iter().find(|r| r.type_label == "22").unwrap();
        assert_eq!(r22.f, 2);
        assert_eq!(r22.d, DimVector::new(3, vec![2, 2, 0, 1]));
        assert!(dim_table("K6").is_err());
    }

    #[test]
    fn series_shapes() {
        let t = Tower::gf2();
        // k6_series(1, [0]) = [1 | ξ]
        let x = GMat::zero(&t, 1, 1);
        let m = k6_series(&t, 1, &x).unwrap();
        assert_eq!(*m.stripes[0].at(0, 0), t.g_one());
        assert_eq!(*m.stripes[1].at(0, 0), t.xi());
        // equals the F17 matrix reinterpreted on K6
        let f17 = finite_type_corep(&t, "F17").unwrap();
        assert_eq!(m.stripes[0], f17.stripes[0]);
        assert_eq!(m.stripes[1], f17.stripes[1]);
        // k6_discrete(1) = [1 | 1]
        let d = k6_discrete(&t, 1).unwrap();
        assert_eq!(*d.stripes[1].at(0, 0), t.g_one());
        // k6_series(2, companion(t²+t+1)) = [I₂ | ξI₂ + [[0,1],[1,1]]]
        let c = frobenius_companion(&t, &[t.g_one(), t.g_one()], true).unwrap();
        let m = k6_series(&t, 2, &c).unwrap();
        assert_eq!(*m.stripes[1].at(0, 0), t.xi());
        assert_eq!(*m.stripes[1].at(0, 1), t.g_one());
        assert_eq!(*m.stripes[1].at(1, 0), t.g_one());
        assert_eq!(*m.stripes[1].at(1, 1), t.g_from_i64(1, 1));
        // X over G rejected for the F-domain series
        let bad = frobenius_companion(&t, &[t.xi()], false).unwrap();
        assert!(k6_series(&t, 1, &bad).is_err());
        // non-companion X rejected
        let notc = GMat::from_rows(vec![
            vec![t.g_one(), t.g_zero()],
            vec![t.g_zero(), t.g_one()],
        ]);
        assert!(k6_series(&t, 2, &notc).is_err());
    }

    #[test]
    fn k7_series_shape() {
        let t = Tower::gf2();
        // rows (1, x₀, 1, 1) and (1, ξ, 0, 0) for n = 1
        let x = GMat::from_rows(vec![vec![t.g_one()]]); // companion of t + 1
        let m = k7_series(&t, 1, &x).unwrap();
        assert_eq!(m.d0, 2);
        assert_eq!(m.dim_vector(), DimVector::new(2, vec![1, 1, 1, 1]));
        assert_eq!(*m.stripes[0].at(0, 0), t.g_one());
        assert_eq!(*m.stripes[0].at(1, 0), t.g_one());
        assert_eq!(*m.stripes[1].at(0, 0), t.g_one()); // x₀ = 1
        assert_eq!(*m.stripes[1].at(1, 0), t.xi());
        assert_eq!(*m.stripes[2].at(0, 0), t.g_one());
        assert!(m.stripes[2].at(1, 0).is_zero());
        assert_eq!(*m.stripes[3].at(0, 0), t.g_one());
        assert!(m.stripes[3].at(1, 0).is_zero());
    }

    #[test]
    fn k8_series_shapes() {
        let t = Tower::gf2();
        // char2, n = 1, X = [λ]: rows (1,0,ξ,1) and (0,1,ξλ,1)
        let lam = t.g_from_i64(1, 1);
        let x = GMat::from_rows(vec![vec![lam.clone()]]);
        let m = k8_series(&t, K8Variant::Char2, 1, &x).unwrap();
        assert_eq!(m.dim_vector(), DimVector::new(2, vec![1, 1, 2]));
        assert_eq!(*m.stripes[2].at(0, 0), t.xi());
        assert_eq!(*m.stripes[2].at(0, 1), t.g_one());
        assert_eq!(*m.stripes[2].at(1, 0), t.g_mul(&t.xi(), &lam));
        assert_eq!(*m.stripes[2].at(1, 1), t.g_one());
        // separable over Q(√2): rows (1,0,ξ,1) and (0,1, ξ̄+ξλ̄, 1+λ̄)
        let q = Tower::qsqrt2();
        let lam = q.g_from_i64(2, 3);
        let x = GMat::from_rows(vec![vec![lam.clone()]]);
        let m = k8_series(&q, K8Variant::Separable, 1, &x).unwrap();
        let lam_bar = q.conj_bar(&lam);
        let expect = q.g_add(&q.conj_bar(&q.xi()), &q.g_mul(&q.xi(), &lam_bar));
        assert_eq!(*m.stripes[2].at(1, 0), expect);
        assert_eq!(*m.stripes[2].at(1, 1), q.g_add(&q.g_one(), &lam_bar));
        // variants must match the tower
        assert!(k8_series(&t, K8Variant::Separable, 1, &x).is_err());
        assert!(k8_series(&q, K8Variant::Char2, 1, &x).is_err());
        assert!(k8_series(&q, K8Variant::Inseparable, 1, &x).is_err());
        // inseparable template shape (construction-level only)
        let spec = k8_spec(&q, K8Variant::Inseparable);
        let m = series_instantiate(&q, &spec, &x).unwrap();
        // row 2 of the weak stripe: ξ(1 + λ̄), λ̄
        assert_eq!(
            *m.stripes[2].at(1, 0),
            q.g_mul(&q.xi(), &q.g_add(&q.g_one(), &lam_bar))
        );
        assert_eq!(*m.stripes[2].at(1, 1), lam_bar);
    }

    #[test]
    fn series_instances_are_reduced() {
        let t = Tower::gf2();
        let x = GMat::zero(&t, 1, 1);
        for m in [
            k6_series(&t, 1, &x).unwrap(),
            k6_discrete(&t, 2).unwrap(),
            k7_series(&t, 1, &x).unwrap(),
            k8_series(&t, K8Variant::Char2, 1, &x).unwrap(),
        ] {
            assert!(is_reduced(&t, &m));
            spaces_of(&t, &m).validate(&t).unwrap();
        }
    }

    #[test]
    fn k6_series_dims_are_imaginary() {
        let t = Tower::gf2();
        for n in 1..=3usize {
            let coeffs: Vec<GElem> = (0..n).map(|_| t.g_zero()).collect();
            let x = frobenius_companion(&t, &coeffs, true).unwrap();
            let m = k6_series(&t, n, &x).unwrap();
            let d = m.dim_vector();
            assert_eq!(d, DimVector::new(n as i64, vec![n as i64, n as i64]));
            assert_eq!(tits_form(&m.poset, &d).unwrap(), 0);
        }
    }
}
