//! Text formats: the poset file format (one declaration per line), the
//! matrix-corepresentation file format, and dimension-vector syntax.
//!
//! Poset files:
//! ```text
//! poset A25
//! point a weak
//! point b weak
//! point eta strong
//! rel b < eta strong
//! ```
//!
//! Corepresentation files:
//! ```text
//! corep A25 field gf2
//! stripes: a=1 b=1 eta=1
//! 1 | x | 0
//! ```
//! Stripes appear in poset point order; rows hold entries in element syntax
//! separated by spaces, stripes separated by `|`. Both formats round-trip.

use crate::corep::MatrixCorep;
use crate::fields::{GMat, Tower};
use crate::poset::{EquippedPoset, PointKind, RelKind};
use crate::tits::DimVector;
use crate::{Error, Result};

/// Parse one or more poset blocks from a file.
pub fn parse_posets(text: &str) -> Result<Vec<EquippedPoset>> {
    let mut out = Vec::new();
    let mut name: Option<String> = None;
    let mut points: Vec<(String, PointKind)> = Vec::new();
    let mut rels: Vec<(String, String, RelKind)> = Vec::new();
    let flush = |name: &mut Option<String>,
                     points: &mut Vec<(String, PointKind)>,
                     rels: &mut Vec<(String, String, RelKind)>|
     -> Result<Option<EquippedPoset>> {
        if let Some(n) = name.take() {
            let pref: Vec<(&str, PointKind)> =
                points.iter().map(|(s, k)| (s.as_str(), *k)).collect();
            let rref: Vec<(&str, &str, RelKind)> =
                rels.iter().map(|(a, b, k)| (a.as_str(), b.as_str(), *k)).collect();
            let p = EquippedPoset::build(&n, &pref, &rref)?;
            points.clear();
            rels.clear();
            return Ok(Some(p));
        }
        Ok(None)
    };
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut toks = line.split_whitespace();
        let head = toks.next().unwrap();
        let perr = |msg: &str| Error::Parse { line: lineno + 1, msg: msg.to_string() };
        match head {
            "poset" => {
                if let Some(p) = flush(&mut name, &mut points, &mut rels)? {
                    out.push(p);
                }
                name = Some(toks.next().ok_or_else(|| perr("poset needs a name"))?.to_string());
            }
            "point" => {
                if name.is_none() {
                    return Err(perr("point before poset"));
                }
                let id = toks.next().ok_or_else(|| perr("point needs an id"))?;
                let kind = match toks.next() {
                    Some("weak") => PointKind::Weak,
                    Some("strong") => PointKind::Strong,
                    _ => return Err(perr("point kind must be weak or strong")),
                };
                points.push((id.to_string(), kind));
            }
            "rel" => {
                if name.is_none() {
                    return Err(perr("rel before poset"));
                }
                let x = toks.next().ok_or_else(|| perr("rel needs x < y"))?;
                let lt = toks.next().ok_or_else(|| perr("rel needs x < y"))?;
                if lt != "<" {
                    return Err(perr("rel separator must be <"));
                }
                let y = toks.next().ok_or_else(|| perr("rel needs x < y"))?;
                let kind = match toks.next() {
                    Some("weak") => RelKind::Weak,
                    Some("strong") => RelKind::Strong,
                    _ => return Err(perr("rel kind must be weak or strong")),
                };
                rels.push((x.to_string(), y.to_string(), kind));
            }
            other => return Err(perr(&format!("unknown declaration {other}"))),
        }
    }
    if let Some(p) = flush(&mut name, &mut points, &mut rels)? {
        out.push(p);
    }
    if out.is_empty() {
        return Err(Error::Parse { line: 0, msg: "no poset block found".into() });
    }
    Ok(out)
}

pub fn parse_poset(text: &str) -> Result<EquippedPoset> {
    Ok(parse_posets(text)?.remove(0))
}

/// Canonical poset text: points in order, then every strict closed relation
/// sorted by point indices.
pub fn print_poset(p: &EquippedPoset) -> String {
    let mut out = format!("poset {}\n", p.name());
    for i in 0..p.n() {
        let kind = if p.is_weak_point(i) { "weak" } else { "strong" };
        out.push_str(&format!("point {} {}\n", p.point_ids()[i], kind));
    }
    for i in 0..p.n() {
        for j in 0..p.n() {
            if i != j && p.leq(i, j) {
                let kind = if p.strong_rel(i, j) { "strong" } else { "weak" };
                out.push_str(&format!(
                    "rel {} < {} {}\n",
                    p.point_ids()[i],
                    p.point_ids()[j],
                    kind
                ));
            }
        }
    }
    out
}

/// The closed relation as a matrix echo: `.` incomparable, `w` weak, `s`
/// strong, rows/columns in point order (diagonal shows the point kind).
pub fn relation_matrix(p: &EquippedPoset) -> String {
    let mut out = String::new();
    for i in 0..p.n() {
        let mut row = String::new();
        for j in 0..p.n() {
            row.push(if p.strong_rel(i, j) {
                's'
            } else if p.leq(i, j) {
                'w'
            } else {
                '.'
            });
        }
        out.push_str(&format!("{:>8} {}\n", p.point_ids()[i], row));
    }
    out
}

/// Parse a corepresentation file. The poset is resolved by name through
/// `resolve`; `tower_override` replaces the header's field preset (used by
/// the catalog, whose matrices make sense over any tower).
pub fn parse_corep(
    text: &str,
    resolve: &dyn Fn(&str) -> Result<EquippedPoset>,
    tower_override: Option<&Tower>,
) -> Result<(MatrixCorep, Tower)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) =
        lines.next().ok_or(Error::Parse { line: 0, msg: "empty corep file".into() })?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 4 || toks[0] != "corep" || toks[2] != "field" {
        return Err(Error::Parse {
            line: hline,
            msg: "header must be: corep <poset> field <preset>".into(),
        });
    }
    let poset = resolve(toks[1])?;
    let tower = match tower_override {
        Some(t) => t.clone(),
        None => Tower::preset(toks[3])?,
    };
    let (sline, stripes_decl) =
        lines.next().ok_or(Error::Parse { line: hline, msg: "missing stripes line".into() })?;
    let decl = stripes_decl
        .strip_prefix("stripes:")
        .ok_or(Error::Parse { line: sline, msg: "expected stripes: a=.. b=..".into() })?;
    let mut widths = vec![0usize; poset.n()];
    for part in decl.split_whitespace() {
        let (id, w) = part
            .split_once('=')
            .ok_or(Error::Parse { line: sline, msg: format!("bad stripe decl {part}") })?;
        let i = poset.index_of(id).map_err(|_| Error::Parse {
            line: sline,
            msg: format!("unknown point {id}"),
        })?;
        widths[i] = w.parse().map_err(|_| Error::Parse {
            line: sline,
            msg: format!("bad stripe width {w}"),
        })?;
    }
    let mut rows: Vec<Vec<Vec<crate::fields::GElem>>> = Vec::new();
    for (lineno, line) in lines {
        let parts: Vec<&str> = line.split('|').map(|s| s.trim()).collect();
        if parts.len() != poset.n() {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("expected {} stripes, found {}", poset.n(), parts.len()),
            });
        }
        let mut row = Vec::with_capacity(poset.n());
        for (x, part) in parts.iter().enumerate() {
            let entries: Vec<&str> = part.split_whitespace().collect();
            if entries.len() != widths[x] {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!(
                        "stripe {} has {} entries, declared {}",
                        poset.point_ids()[x],
                        entries.len(),
                        widths[x]
                    ),
                });
            }
            let parsed: Result<Vec<_>> = entries
                .iter()
                .map(|e| {
                    tower.parse_g(e).map_err(|_| Error::Parse {
                        line: lineno,
                        msg: format!("bad element {e}"),
                    })
                })
                .collect();
            row.push(parsed?);
        }
        rows.push(row);
    }
    let d0 = rows.len();
    let mut stripes = Vec::with_capacity(poset.n());
    for x in 0..poset.n() {
        let mut m = GMat::zero(&tower, d0, widths[x]);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row[x].iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        stripes.push(m);
    }
    Ok((MatrixCorep::new(poset, d0, stripes)?, tower))
}

/// Canonical corepresentation text; round-trips through [`parse_corep`].
pub fn print_corep(tower: &Tower, m: &MatrixCorep, field_name: &str) -> String {
    let mut out = format!("corep {} field {}\n", m.poset.name(), field_name);
    let decl: Vec<String> = m
        .poset
        .point_ids()
        .iter()
        .zip(&m.stripes)
        .map(|(id, s)| format!("{id}={}", s.cols))
        .collect();
    out.push_str(&format!("stripes: {}\n", decl.join(" ")));
    for i in 0..m.d0 {
        let row: Vec<String> = m
            .stripes
            .iter()
            .map(|s| {
                (0..s.cols)
                    .map(|j| tower.g_to_string(s.at(i, j)))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        out.push_str(&row.join(" | "));
        out.push('\n');
    }
    out
}

/// Parse `d0; a=1, b=2` (omitted coordinates are 0; bare `d0` allowed).
pub fn parse_dim_vector(p: &EquippedPoset, s: &str) -> Result<DimVector> {
    let s = s.trim();
    let (head, rest) = match s.split_once(';') {
        Some((h, r)) => (h, r),
        None => (s, ""),
    };
    let d0: i64 = head
        .trim()
        .parse()
        .map_err(|_| Error::Parse { line: 0, msg: format!("bad d0 in {s}") })?;
    let mut dx = vec![0i64; p.n()];
    for part in rest.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (id, v) = part
            .split_once('=')
            .ok_or(Error::Parse { line: 0, msg: format!("bad coordinate {part}") })?;
        let i = p.index_of(id.trim())?;
        dx[i] = v
            .trim()
            .parse()
            .map_err(|_| Error::Parse { line: 0, msg: format!("bad value {v}") })?;
    }
    Ok(DimVector::new(d0, dx))
}
