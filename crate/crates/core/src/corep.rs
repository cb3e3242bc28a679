//! Matrix corepresentations of a 2-equipped poset over (F, G) and their
//! invariant-language counterparts: a G-matrix split into per-point vertical
//! stripes, versus a G-space U₀ with an F-subspace per point satisfying
//! x ≤ y ⟹ U_x ⊆ U_y and x ⊲ y ⟹ hull(U_x) ⊆ U_y.

use crate::fields::{GElem, GMat, Tower};
use crate::poset::EquippedPoset;
use crate::subspace::{f_to_g_vec, g_to_f_vec, FSub};
use crate::tits::DimVector;
use crate::{Error, Result};

/// Matrix corepresentation: d₀ rows, one stripe of columns per point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixCorep {
    pub poset: EquippedPoset,
    pub d0: usize,
    pub stripes: Vec<GMat>,
}

impl MatrixCorep {
    pub fn new(poset: EquippedPoset, d0: usize, stripes: Vec<GMat>) -> Result<MatrixCorep> {
        if stripes.len() != poset.n() {
            return Err(Error::BadMatrix(format!(
                "{} stripes for a poset with {} points",
                stripes.len(),
                poset.n()
            )));
        }
        for s in &stripes {
            if s.rows != d0 {
                return Err(Error::BadMatrix(format!(
                    "stripe has {} rows, corepresentation has {d0}",
                    s.rows
                )));
            }
        }
        Ok(MatrixCorep { poset, d0, stripes })
    }

    /// The trivial corepresentation: one row, every stripe empty.
    pub fn trivial(tower: &Tower, poset: &EquippedPoset) -> MatrixCorep {
        let stripes = (0..poset.n()).map(|_| GMat::zero(tower, 1, 0)).collect();
        MatrixCorep { poset: poset.clone(), d0: 1, stripes }
    }

    pub fn dim_vector(&self) -> DimVector {
        DimVector::new(
            self.d0 as i64,
            self.stripes.iter().map(|s| s.cols as i64).collect(),
        )
    }
}

/// Invariant-language corepresentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorepSpaces {
    pub poset: EquippedPoset,
    pub u0_dim: usize,
    pub spaces: Vec<FSub>,
}

impl CorepSpaces {
    pub fn trivial(tower: &Tower, poset: &EquippedPoset) -> CorepSpaces {
        CorepSpaces {
            poset: poset.clone(),
            u0_dim: 1,
            spaces: (0..poset.n()).map(|_| FSub::zero(tower, 1)).collect(),
        }
    }

    /// Check the corepresentation conditions: monotone under ≤, hull-monotone
    /// under ⊲, and strong spaces at strong points.
    pub fn validate(&self, tower: &Tower) -> Result<()> {
        let p = &self.poset;
        for i in 0..p.n() {
            if self.spaces[i].ambient() != self.u0_dim {
                return Err(Error::AmbientMismatch {
                    left: self.spaces[i].ambient(),
                    right: self.u0_dim,
                });
            }
            if p.is_strong_point(i) && !self.spaces[i].is_strong(tower) {
                return Err(Error::BadMatrix(format!(
                    "space at strong point {} is not strong",
                    p.point_ids()[i]
                )));
            }
            for j in 0..p.n() {
                if i == j || !p.leq(i, j) {
                    continue;
                }
                if p.strong_rel(i, j) {
                    if !self.spaces[j].contains(tower, &self.spaces[i].hull(tower))? {
                        return Err(Error::BadMatrix(format!(
                            "hull(U_{}) ⊄ U_{}",
                            p.point_ids()[i],
                            p.point_ids()[j]
                        )));
                    }
                } else if !self.spaces[j].contains(tower, &self.spaces[i])? {
                    return Err(Error::BadMatrix(format!(
                        "U_{} ⊄ U_{}",
                        p.point_ids()[i],
                        p.point_ids()[j]
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Spaces generated by a matrix corepresentation:
/// U_x = Σ_{y ≼ x} F[M_y] + Σ_{y ⊲ x} G[M_y], self-relations included.
pub fn spaces_of(tower: &Tower, m: &MatrixCorep) -> CorepSpaces {
    let p = &m.poset;
    let mut spaces = Vec::with_capacity(p.n());
    for x in 0..p.n() {
        let mut u = FSub::zero(tower, m.d0);
        for y in 0..p.n() {
            if !p.leq(y, x) {
                continue;
            }
            let cols: Vec<Vec<GElem>> = (0..m.stripes[y].cols).map(|j| m.stripes[y].col(j)).collect();
            let g_mode = p.strong_rel(y, x);
            let span = FSub::span(tower, m.d0, &cols, g_mode).unwrap();
            u = u.sum(tower, &span).unwrap();
        }
        spaces.push(u);
    }
    CorepSpaces { poset: p.clone(), u0_dim: m.d0, spaces }
}

/// Radical subspace at x: Σ_{y ≺ x, y≠x} U_y + Σ_{y ⊲ x, y≠x} hull(U_y).
pub fn radical(tower: &Tower, u: &CorepSpaces, x: usize) -> FSub {
    let p = &u.poset;
    let mut r = FSub::zero(tower, u.u0_dim);
    for y in 0..p.n() {
        if y == x || !p.leq(y, x) {
            continue;
        }
        let part = if p.strong_rel(y, x) {
            u.spaces[y].hull(tower)
        } else {
            u.spaces[y].clone()
        };
        r = r.sum(tower, &part).unwrap();
    }
    r
}

/// Dimension vector of a corepresentation in invariant language:
/// quotient dimensions modulo the radical (over G at strong points).
pub fn dim_vector_of_spaces(tower: &Tower, u: &CorepSpaces) -> DimVector {
    let p = &u.poset;
    let mut dx = Vec::with_capacity(p.n());
    for x in 0..p.n() {
        let rad = radical(tower, u, x);
        let joint = u.spaces[x].sum(tower, &rad).unwrap();
        let diff = joint.dim_f() - rad.dim_f();
        if p.is_strong_point(x) {
            debug_assert!(diff % 2 == 0);
            dx.push((diff / 2) as i64);
        } else {
            dx.push(diff as i64);
        }
    }
    DimVector::new(u.u0_dim as i64, dx)
}

/// Columns of each stripe are independent modulo the radical at that point.
pub fn is_reduced(tower: &Tower, m: &MatrixCorep) -> bool {
    let u = spaces_of(tower, m);
    dim_vector_of_spaces(tower, &u) == m.dim_vector()
}

/// Reduced matrix corepresentation of U: per point, first-echelon coset
/// representatives of a basis of U_x modulo its radical.
pub fn matrix_of(tower: &Tower, u: &CorepSpaces) -> MatrixCorep {
    let p = &u.poset;
    let mut stripes = Vec::with_capacity(p.n());
    for x in 0..p.n() {
        let rad = radical(tower, u, x);
        let mut acc = rad.clone();
        let mut cols: Vec<Vec<GElem>> = Vec::new();
        if p.is_strong_point(x) {
            for v in u.spaces[x].g_basis(tower) {
                let fv = g_to_f_vec(&v);
                if !acc.contains_vec(tower, &fv) {
                    cols.push(v.clone());
                    acc = acc
                        .sum(tower, &FSub::span(tower, u.u0_dim, &[v], true).unwrap())
                        .unwrap();
                }
            }
        } else {
            for i in 0..u.spaces[x].basis().rows {
                let row = u.spaces[x].basis().row(i).to_vec();
                if !acc.contains_vec(tower, &row) {
                    let gv = f_to_g_vec(&row);
                    cols.push(gv.clone());
                    acc = acc
                        .sum(tower, &FSub::span(tower, u.u0_dim, &[gv], false).unwrap())
                        .unwrap();
                }
            }
        }
        let mut stripe = GMat::zero(tower, u.u0_dim, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, z) in col.iter().enumerate() {
                stripe.set(i, j, z.clone());
            }
        }
        stripes.push(stripe);
    }
    MatrixCorep { poset: p.clone(), d0: u.u0_dim, stripes }
}

/// Blockwise-diagonal direct sum of matrix corepresentations.
pub fn direct_sum(tower: &Tower, m: &MatrixCorep, n: &MatrixCorep) -> Result<MatrixCorep> {
    if m.poset != n.poset {
        return Err(Error::PosetMismatch);
    }
    let d0 = m.d0 + n.d0;
    let mut stripes = Vec::with_capacity(m.stripes.len());
    for (a, b) in m.stripes.iter().zip(&n.stripes) {
        let mut s = GMat::zero(tower, d0, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                s.set(i, j, a.at(i, j).clone());
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                s.set(m.d0 + i, a.cols + j, b.at(i, j).clone());
            }
        }
        stripes.push(s);
    }
    MatrixCorep::new(m.poset.clone(), d0, stripes)
}

pub fn direct_sum_spaces(tower: &Tower, u: &CorepSpaces, v: &CorepSpaces) -> Result<CorepSpaces> {
    let mu = matrix_of(tower, u);
    let mv = matrix_of(tower, v);
    Ok(spaces_of(tower, &direct_sum(tower, &mu, &mv)?))
}

/// Support, sincerity (no zero coordinate) and triviality (dim_G U₀ = 1).
pub fn support_flags(tower: &Tower, u: &CorepSpaces) -> (Vec<usize>, bool, bool) {
    let d = dim_vector_of_spaces(tower, u);
    let supp: Vec<usize> = (0..u.poset.n()).filter(|&x| d.dx[x] > 0).collect();
    let sincere = d.d0 > 0 && d.dx.iter().all(|&v| v > 0);
    let trivial = u.u0_dim == 1;
    (supp, sincere, trivial)
}

/// Dual corepresentation over the dual poset: spaces are orthogonal
/// complements under the fixed pairing. Requires p = 0 or char F = 2.
pub fn dual_corep(tower: &Tower, u: &CorepSpaces) -> Result<CorepSpaces> {
    if !tower.duality_enabled() {
        return Err(Error::DualityUnavailable);
    }
    let spaces = u.spaces.iter().map(|s| s.perp(tower)).collect();
    Ok(CorepSpaces { poset: u.poset.dual(), u0_dim: u.u0_dim, spaces })
}

/// Extend a corepresentation of a full subposet Q to P: V_x = U_x on Q,
/// V_x = Σ_{y≺x} U_y + Σ_{y⊲x} hull(U_y) over y ∈ Q when x ∈ Q^∨, else 0.
/// `embed[i]` is the P-index of the i-th point of Q.
pub fn extend_subposet(
    tower: &Tower,
    u: &CorepSpaces,
    p: &EquippedPoset,
    embed: &[usize],
) -> Result<CorepSpaces> {
    let q = &u.poset;
    if embed.len() != q.n() {
        return Err(Error::NotFullSubposet);
    }
    for i in 0..q.n() {
        for j in 0..q.n() {
            if q.leq(i, j) != p.leq(embed[i], embed[j])
                || q.strong_rel(i, j) != p.strong_rel(embed[i], embed[j])
            {
                return Err(Error::NotFullSubposet);
            }
        }
    }
    let mut spaces = vec![FSub::zero(tower, u.u0_dim); p.n()];
    for x in 0..p.n() {
        if let Some(i) = embed.iter().position(|&e| e == x) {
            spaces[x] = u.spaces[i].clone();
            continue;
        }
        let in_up_cone = embed.iter().any(|&e| p.leq(e, x));
        if !in_up_cone {
            continue;
        }
        let mut v = FSub::zero(tower, u.u0_dim);
        for (i, &e) in embed.iter().enumerate() {
            if !p.leq(e, x) {
                continue;
            }
            let part = if p.strong_rel(e, x) {
                u.spaces[i].hull(tower)
            } else {
                u.spaces[i].clone()
            };
            v = v.sum(tower, &part)?;
        }
        spaces[x] = v;
    }
    Ok(CorepSpaces { poset: p.clone(), u0_dim: u.u0_dim, spaces })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdjoinSide {
    Top,
    Bottom,
}

/// Candidate vectors for the adjoined space, in a fixed deterministic order.
fn adjoin_candidates(tower: &Tower, ambient: usize) -> Vec<Vec<GElem>> {
    let mut out = Vec::new();
    if let Ok(gs) = tower.g_elems() {
        // finite tower: all nonzero vectors, odometer order
        let total = gs.len().pow(ambient as u32);
        for mut code in 1..total {
            let mut v = Vec::with_capacity(ambient);
            for _ in 0..ambient {
                v.push(gs[code % gs.len()].clone());
                code /= gs.len();
            }
            out.push(v);
        }
    } else {
        // infinite tower: unit vectors, pair sums, ξ-shifted sums
        for i in 0..ambient {
            let mut v = vec![tower.g_zero(); ambient];
            v[i] = tower.g_one();
            out.push(v);
        }
        for i in 0..ambient {
            for j in 0..ambient {
                if i == j {
                    continue;
                }
                let mut v = vec![tower.g_zero(); ambient];
                v[i] = tower.g_one();
                v[j] = tower.g_one();
                out.push(v.clone());
                v[j] = tower.xi();
                out.push(v);
            }
        }
    }
    out
}

/// Adjoin a strong point ζ to the corepresentation of P ∖ ζ.
/// Top: V_ζ is strong with hull(U_R) ⊂ V_ζ of G-codimension 1 in it;
/// bottom: V_ζ is a G-line inside cohull(∩_{y∈R} U_y). `choice` selects the
/// choice-th distinct admissible space (0 is the canonical deterministic one).
pub fn adjoin_point(
    tower: &Tower,
    u: &CorepSpaces,
    p: &EquippedPoset,
    zeta_id: &str,
    side: AdjoinSide,
    choice: usize,
) -> Result<CorepSpaces> {
    let zeta = p.index_of(zeta_id)?;
    if !p.is_strong_point(zeta) {
        return Err(Error::AdjoinPrecondition(format!("{zeta_id} is not strong")));
    }
    let rest: Vec<usize> = (0..p.n()).filter(|&x| x != zeta).collect();
    let q = p.induced(&rest);
    if q.point_ids() != u.poset.point_ids()
        || crate::poset::poset_iso(&q, &u.poset, false)?.is_none()
    {
        return Err(Error::AdjoinPrecondition(
            "corepresentation poset does not match P minus the adjoined point".into(),
        ));
    }
    // relations must match index-wise, not just up to isomorphism
    for i in 0..q.n() {
        for j in 0..q.n() {
            if q.leq(i, j) != u.poset.leq(i, j) || q.strong_rel(i, j) != u.poset.strong_rel(i, j)
            {
                return Err(Error::AdjoinPrecondition("subposet relations differ".into()));
            }
        }
    }
    let comparable: Vec<usize> = rest
        .iter()
        .enumerate()
        .filter(|&(_, &x)| p.comparable(x, zeta))
        .map(|(i, _)| i)
        .collect();
    let n = u.u0_dim;
    let v_zeta = match side {
        AdjoinSide::Top => {
            if !rest.iter().all(|&x| !p.leq(zeta, x)) {
                return Err(Error::AdjoinPrecondition(format!("{zeta_id} is not maximal")));
            }
            let mut hull_r = FSub::zero(tower, n);
            for &i in &comparable {
                hull_r = hull_r.sum(tower, &u.spaces[i].hull(tower))?;
            }
            if hull_r.dim_f() == 2 * n {
                return Err(Error::AdjoinPrecondition("hull(U_R) = U0".into()));
            }
            let mut found = Vec::new();
            let mut picked = None;
            for cand in adjoin_candidates(tower, n) {
                if hull_r.contains_vec(tower, &g_to_f_vec(&cand)) {
                    continue;
                }
                let v = hull_r.sum(tower, &FSub::span(tower, n, &[cand], true)?)?;
                if !found.contains(&v) {
                    found.push(v.clone());
                    if found.len() == choice + 1 {
                        picked = Some(v);
                        break;
                    }
                }
            }
            picked.ok_or_else(|| {
                Error::AdjoinPrecondition(format!("fewer than {} admissible choices", choice + 1))
            })?
        }
        AdjoinSide::Bottom => {
            if !rest.iter().all(|&x| !p.leq(x, zeta)) {
                return Err(Error::AdjoinPrecondition(format!("{zeta_id} is not minimal")));
            }
            let mut cap = FSub::full(tower, n);
            for &i in &comparable {
                cap = cap.intersect(tower, &u.spaces[i])?;
            }
            let co = cap.cohull(tower);
            if co.is_zero() {
                return Err(Error::AdjoinPrecondition("cohull(U_R) = 0".into()));
            }
            let mut found = Vec::new();
            let mut picked = None;
            for cand in adjoin_candidates(tower, n) {
                if !co.contains_vec(tower, &g_to_f_vec(&cand)) {
                    continue;
                }
                let v = FSub::span(tower, n, &[cand], true)?;
                if v.dim_f() != 2 {
                    continue;
                }
                if !found.contains(&v) {
                    found.push(v.clone());
                    if found.len() == choice + 1 {
                        picked = Some(v);
                        break;
                    }
                }
            }
            picked.ok_or_else(|| {
                Error::AdjoinPrecondition(format!("fewer than {} admissible choices", choice + 1))
            })?
        }
    };
    let mut spaces = vec![FSub::zero(tower, n); p.n()];
    for (i, &x) in rest.iter().enumerate() {
        spaces[x] = u.spaces[i].clone();
    }
    spaces[zeta] = v_zeta;
    let out = CorepSpaces { poset: p.clone(), u0_dim: n, spaces };
    out.validate(tower)?;
    Ok(out)
}

/// Codimension vectors r and r* of a corepresentation over a poset
/// containing K7 at the given anchors (a, p, q, θ).
pub fn r_vectors(
    tower: &Tower,
    w: &CorepSpaces,
    anchors: (usize, usize, usize, usize),
) -> Result<([i64; 4], [i64; 4])> {
    let (a, pp, q, th) = anchors;
    let poset = &w.poset;
    let k7 = crate::poset::critical_poset(crate::poset::CriticalId::K7);
    let sub = poset.induced(&[a, pp, q, th]);
    // anchors must induce K7 with the roles in this exact order
    let role_ok = sub.n() == 4
        && sub.is_weak_point(0)
        && sub.is_weak_point(1)
        && sub.is_weak_point(2)
        && sub.is_strong_point(3)
        && sub.weak_rel(0, 1)
        && sub.weak_rel(1, 2)
        && sub.weak_rel(0, 2)
        && !sub.comparable(3, 0)
        && !sub.comparable(3, 1)
        && !sub.comparable(3, 2);
    if !role_ok || crate::poset::poset_iso(&sub, k7, false)?.is_none() {
        return Err(Error::BadAnchors("anchors do not induce K7".into()));
    }
    let n = w.u0_dim;
    let dim_g = |s: &FSub| (s.dim_f() / 2) as i64;
    let wa = &w.spaces[a];
    let wp = &w.spaces[pp];
    let wq = &w.spaces[q];
    let wt = &w.spaces[th];
    let r1 = n as i64 - dim_g(&wq.hull(tower));
    let r2 = n as i64 - dim_g(&wp.hull(tower).sum(tower, wt)?);
    let r3 = 2 * n as i64 - wq.sum(tower, wt)?.dim_f() as i64;
    let r4 = 2 * n as i64 - wq.sum(tower, &wp.hull(tower))?.dim_f() as i64;
    let s1 = dim_g(&wa.cohull(tower));
    let s2 = dim_g(&wp.cohull(tower).intersect(tower, wt)?);
    let s3 = wa.intersect(tower, wt)?.dim_f() as i64;
    let s4 = wa.intersect(tower, &wp.cohull(tower))?.dim_f() as i64;
    Ok(([r1, r2, r3, r4], [s1, s2, s3, s4]))
}

/// Admissible transformations of a matrix corepresentation.
#[derive(Debug, Clone)]
pub enum Move {
    /// (a): any invertible G-row operation
    RowSwap(usize, usize),
    RowScale(usize, GElem),
    RowAdd { src: usize, dst: usize, coeff: GElem },
    /// (b): column operations within a stripe — over G at strong points,
    /// over F at weak points
    ColSwap { point: usize, i: usize, j: usize },
    ColScale { point: usize, col: usize, coeff: GElem },
    ColAdd { point: usize, src: usize, dst: usize, coeff: GElem },
    /// (c): column addition from stripe x into stripe y — coefficient in G
    /// when x ⊲ y, in F when x ≺ y
    ColAddAcross { from: usize, from_col: usize, to: usize, to_col: usize, coeff: GElem },
}

pub fn apply_transformation(tower: &Tower, m: &MatrixCorep, mv: &Move) -> Result<MatrixCorep> {
    let mut out = m.clone();
    let p = &m.poset;
    match mv {
        Move::RowSwap(i, j) => {
            for s in &mut out.stripes {
                for c in 0..s.cols {
                    let a = s.at(*i, c).clone();
                    let b = s.at(*j, c).clone();
                    s.set(*i, c, b);
                    s.set(*j, c, a);
                }
            }
        }
        Move::RowScale(i, coeff) => {
            if coeff.is_zero() {
                return Err(Error::IllegalMove("row scaling by zero".into()));
            }
            for s in &mut out.stripes {
                for c in 0..s.cols {
                    let v = tower.g_mul(coeff, s.at(*i, c));
                    s.set(*i, c, v);
                }
            }
        }
        Move::RowAdd { src, dst, coeff } => {
            if src == dst {
                return Err(Error::IllegalMove("row added to itself".into()));
            }
            for s in &mut out.stripes {
                for c in 0..s.cols {
                    let v = tower.g_add(s.at(*dst, c), &tower.g_mul(coeff, s.at(*src, c)));
                    s.set(*dst, c, v);
                }
            }
        }
        Move::ColSwap { point, i, j } => {
            let s = &mut out.stripes[*point];
            for r in 0..s.rows {
                let a = s.at(r, *i).clone();
                let b = s.at(r, *j).clone();
                s.set(r, *i, b);
                s.set(r, *j, a);
            }
        }
        Move::ColScale { point, col, coeff } => {
            if coeff.is_zero() {
                return Err(Error::IllegalMove("column scaling by zero".into()));
            }
            if p.is_weak_point(*point) && !coeff.is_in_f() {
                return Err(Error::IllegalMove(format!(
                    "G-scaling within weak stripe {}",
                    p.point_ids()[*point]
                )));
            }
            let s = &mut out.stripes[*point];
            for r in 0..s.rows {
                let v = tower.g_mul(s.at(r, *col), coeff);
                s.set(r, *col, v);
            }
        }
        Move::ColAdd { point, src, dst, coeff } => {
            if src == dst {
                return Err(Error::IllegalMove("column added to itself".into()));
            }
            if p.is_weak_point(*point) && !coeff.is_in_f() {
                return Err(Error::IllegalMove(format!(
                    "G-coefficient within weak stripe {}",
                    p.point_ids()[*point]
                )));
            }
            let s = &mut out.stripes[*point];
            for r in 0..s.rows {
                let v = tower.g_add(s.at(r, *dst), &tower.g_mul(coeff, s.at(r, *src)));
                s.set(r, *dst, v);
            }
        }
        Move::ColAddAcross { from, from_col, to, to_col, coeff } => {
            if from == to {
                return Err(Error::IllegalMove("use ColAdd within a stripe".into()));
            }
            if !p.leq(*from, *to) {
                return Err(Error::IllegalMove(format!(
                    "no relation {} ≤ {}",
                    p.point_ids()[*from],
                    p.point_ids()[*to]
                )));
            }
            if p.weak_rel(*from, *to) && !coeff.is_in_f() {
                return Err(Error::IllegalMove(format!(
                    "G-coefficient across weak relation {} ≺ {}",
                    p.point_ids()[*from],
                    p.point_ids()[*to]
                )));
            }
            let col: Vec<GElem> = out.stripes[*from].col(*from_col);
            let s = &mut out.stripes[*to];
            for r in 0..s.rows {
                let v = tower.g_add(s.at(r, *to_col), &tower.g_mul(coeff, &col[r]));
                s.set(r, *to_col, v);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::poset::{critical_poset, CriticalId};

    fn k6_two_cols(tower: &Tower, a: &str, b: &str) -> MatrixCorep {
        let p = critical_poset(CriticalId::K6).clone();
        let sa = GMat::from_rows(vec![vec![tower.parse_g(a).unwrap()]]);
        let sb = GMat::from_rows(vec![vec![tower.parse_g(b).unwrap()]]);
        MatrixCorep::new(p, 1, vec![sa, sb]).unwrap()
    }

    #[test]
    fn spaces_of_simple() {
        let t = Tower::gf2();
        let m = k6_two_cols(&t, "1", "x");
        let u = spaces_of(&t, &m);
        assert_eq!(u.spaces[0].dim_f(), 1);
        assert_eq!(u.spaces[1].dim_f(), 1);
        u.validate(&t).unwrap();
        // trivial corepresentation
        let p = critical_poset(CriticalId::K6);
        let triv = MatrixCorep::trivial(&t, p);
        let tu = spaces_of(&t, &triv);
        assert!(tu.spaces.iter().all(|s| s.is_zero()));
    }

    #[test]
    fn radicals() {
        let t = Tower::gf2();
        // antichain: radical zero everywhere
        let m = k6_two_cols(&t, "1", "x");
        let u = spaces_of(&t, &m);
        assert!(radical(&t, &u, 0).is_zero());
        assert!(radical(&t, &u, 1).is_zero());
        // Table 2 corepresentation of A25: radical at η is hull(U_b)
        let m = catalog::table2_coreps(&t).unwrap()[1].clone();
        let u = spaces_of(&t, &m);
        let eta = u.poset.index_of("eta").unwrap();
        let b = u.poset.index_of("b").unwrap();
        assert_eq!(radical(&t, &u, eta), u.spaces[b].hull(&t));
    }

    #[test]
    fn dim_vectors_and_reduction() {
        let t = Tower::gf2();
        let m = k6_two_cols(&t, "1", "0");
        assert_eq!(m.dim_vector(), DimVector::new(1, vec![1, 1]));
        let u = spaces_of(&t, &m);
        assert_eq!(dim_vector_of_spaces(&t, &u), DimVector::new(1, vec![1, 0]));
        assert!(!is_reduced(&t, &m));
        let m2 = k6_two_cols(&t, "1", "x");
        assert!(is_reduced(&t, &m2));
        // matrix_of round-trips the spaces
        let back = matrix_of(&t, &u);
        assert_eq!(spaces_of(&t, &back), u);
    }

    #[test]
    fn direct_sums() {
        let t = Tower::gf2();
        let a = k6_two_cols(&t, "1", "1");
        let b = k6_two_cols(&t, "1", "x");
        let s = direct_sum(&t, &a, &b).unwrap();
        assert_eq!(s.dim_vector(), DimVector::new(2, vec![2, 2]));
        assert_eq!(
            s.dim_vector(),
            a.dim_vector().add(&b.dim_vector())
        );
        // sum with the zero-row corepresentation is the identity
        let p = critical_poset(CriticalId::K6).clone();
        let zero = MatrixCorep::new(
            p.clone(),
            0,
            vec![GMat::zero(&t, 0, 0), GMat::zero(&t, 0, 0)],
        )
        .unwrap();
        let same = direct_sum(&t, &a, &zero).unwrap();
        assert_eq!(same, a);
    }

    #[test]
    fn dual_of_trivial() {
        let t = Tower::gf2();
        let p = critical_poset(CriticalId::K6);
        let triv = spaces_of(&t, &MatrixCorep::trivial(&t, p));
        let d = dual_corep(&t, &triv).unwrap();
        assert_eq!(dim_vector_of_spaces(&t, &d), DimVector::new(1, vec![2, 2]));
        d.validate(&t).unwrap();
    }

    #[test]
    fn support_and_sincerity() {
        let t = Tower::gf2();
        let m = catalog::table2_coreps(&t).unwrap()[1].clone();
        let u = spaces_of(&t, &m);
        let (supp, sincere, trivial) = support_flags(&t, &u);
        assert_eq!(supp.len(), 3);
        assert!(sincere && !trivial);
        let p = critical_poset(CriticalId::K6);
        let tr = spaces_of(&t, &MatrixCorep::trivial(&t, p));
        let (supp, sincere, trivial) = support_flags(&t, &tr);
        assert!(supp.is_empty() && !sincere && trivial);
        // [1 | ] with empty b stripe: supp = {a}
        let pm = critical_poset(CriticalId::K6).clone();
        let m = MatrixCorep::new(
            pm,
            1,
            vec![
                GMat::from_rows(vec![vec![t.g_one()]]),
                GMat::zero(&t, 1, 0),
            ],
        )
        .unwrap();
        let (supp, _, _) = support_flags(&t, &spaces_of(&t, &m));
        assert_eq!(supp, vec![0]);
    }

    #[test]
    fn r_vector_examples() {
        let t = Tower::gf2();
        let k7 = critical_poset(CriticalId::K7);
        let triv = spaces_of(&t, &MatrixCorep::trivial(&t, k7));
        let (r, rs) = r_vectors(&t, &triv, (0, 1, 2, 3)).unwrap();
        assert_eq!(r, [1, 1, 2, 2]);
        assert_eq!(rs, [0, 0, 0, 0]);
        // all spaces equal to U₀
        let full = CorepSpaces {
            poset: k7.clone(),
            u0_dim: 1,
            spaces: (0..4).map(|_| FSub::full(&t, 1)).collect(),
        };
        let (r, rs) = r_vectors(&t, &full, (0, 1, 2, 3)).unwrap();
        assert_eq!(r, [0, 0, 0, 0]);
        assert_eq!(rs, [1, 1, 2, 2]);
        // bad anchors rejected
        assert!(r_vectors(&t, &triv, (1, 0, 2, 3)).is_err());
    }

    #[test]
    fn transformation_legality() {
        let t = Tower::gf2();
        let m = k6_two_cols(&t, "1", "x");
        // row swap is fine on a 1-row matrix only if indices exist; use 2 rows
        let mm = direct_sum(&t, &m, &m).unwrap();
        let sw = apply_transformation(&t, &mm, &Move::RowSwap(0, 1)).unwrap();
        assert_eq!(sw.dim_vector(), mm.dim_vector());
        // adding across incomparable stripes of K6 is illegal
        let err = apply_transformation(
            &t,
            &mm,
            &Move::ColAddAcross { from: 0, from_col: 0, to: 1, to_col: 0, coeff: t.g_one() },
        )
        .unwrap_err();
        assert!(matches!(err, Error::IllegalMove(_)));
        // G-scaling inside a weak stripe is illegal
        let err = apply_transformation(
            &t,
            &mm,
            &Move::ColScale { point: 0, col: 0, coeff: t.xi() },
        )
        .unwrap_err();
        assert!(matches!(err, Error::IllegalMove(_)));
        // on A25, ξ·(column of b) into η is legal (b ⊲ η)
        let a25 = catalog::catalog_poset("A25").unwrap();
        let m = catalog::table2_coreps(&t).unwrap()[1].clone();
        assert_eq!(m.poset, a25);
        let b = a25.index_of("b").unwrap();
        let eta = a25.index_of("eta").unwrap();
        let moved = apply_transformation(
            &t,
            &m,
            &Move::ColAddAcross { from: b, from_col: 0, to: eta, to_col: 0, coeff: t.xi() },
        )
        .unwrap();
        assert_eq!(moved.dim_vector(), m.dim_vector());
    }
}
