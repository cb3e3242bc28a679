//! Morphism spaces, endomorphism rings, Fitting splitting, Krull–Schmidt
//! decomposition and isomorphism testing for corepresentations.
//!
//! Hom(U, V) is the F-space of G-linear maps U₀ → V₀ with φ(U_x) ⊆ V_x,
//! computed exactly as the nullspace of an F-linear constraint system.
//! Decomposition uses Fitting idempotents from a spanning set of End(U)
//! closed under one round of pairwise products; over a finite tower an
//! exhaustive idempotent search (gated by dim_F End ≤ 24) provides ground
//! truth, and over the rationals locality of End is decided through the
//! trace-form radical.

use crate::corep::{dim_vector_of_spaces, CorepSpaces};
use crate::fields::{FElem, GElem, GMat, Tower};
use crate::subspace::{f_to_g_vec, g_solve, g_to_f_vec, FMat, FSub};
use crate::{Error, Result};

/// Hard gate for the exhaustive-enumeration paths (≈17M candidates over GF(2)).
pub const ENUMERATION_DIM_BOUND: usize = 24;

/// F-basis of Hom(U, V) as G-matrices (rows = dim V₀, cols = dim U₀).
pub fn hom_basis(tower: &Tower, u: &CorepSpaces, v: &CorepSpaces) -> Result<Vec<GMat>> {
    if u.poset != v.poset {
        return Err(Error::PosetMismatch);
    }
    let n = u.u0_dim;
    let m = v.u0_dim;
    let unknowns = 2 * m * n;
    if unknowns == 0 {
        return Ok(Vec::new());
    }
    // unknown order: entry (i,j) of φ contributes slots 2(i·n+j) (re) and +1 (im)
    let mut rows: Vec<Vec<FElem>> = Vec::new();
    for x in 0..u.poset.n() {
        let ux = &u.spaces[x];
        if ux.is_zero() {
            continue;
        }
        let checks = v_checks(tower, &v.spaces[x], m);
        for bi in 0..ux.basis().rows {
            let w = f_to_g_vec(ux.basis().row(bi));
            // φ(w)_i = Σ_j φ_{ij} w_j with φ_{ij} = p + ξq:
            //   Re = Σ_j (a_j p − q_c b_j q),  Im = Σ_j (b_j p + (a_j − p_c b_j) q)
            for check in &checks {
                let mut row = vec![tower.f_zero(); unknowns];
                for i in 0..m {
                    let cre = &check[2 * i];
                    let cim = &check[2 * i + 1];
                    for (j, wj) in w.iter().enumerate() {
                        let a = &wj.re;
                        let b = &wj.im;
                        let p_idx = 2 * (i * n + j);
                        let q_idx = p_idx + 1;
                        // coefficient of p_{ij}: cre·a + cim·b
                        let cp = tower.f_add(&tower.f_mul(cre, a), &tower.f_mul(cim, b));
                        // coefficient of q_{ij}: cre·(−q_c b) + cim·(a − p_c b)
                        let cq = tower.f_add(
                            &tower.f_neg(&tower.f_mul(cre, &tower.f_mul(tower.q_coef(), b))),
                            &tower.f_mul(
                                cim,
                                &tower.f_sub(a, &tower.f_mul(tower.p_coef(), b)),
                            ),
                        );
                        row[p_idx] = tower.f_add(&row[p_idx], &cp);
                        row[q_idx] = tower.f_add(&row[q_idx], &cq);
                    }
                }
                rows.push(row);
            }
        }
    }
    let sol = if rows.is_empty() {
        // no constraints: all of Hom_G(U₀, V₀)
        let mut basis = Vec::new();
        for k in 0..unknowns {
            let mut v = vec![tower.f_zero(); unknowns];
            v[k] = tower.f_one();
            basis.push(v);
        }
        basis
    } else {
        let sys = FMat::from_rows(rows);
        let ns = sys.nullspace(tower);
        (0..ns.rows).map(|i| ns.row(i).to_vec()).collect()
    };
    Ok(sol
        .into_iter()
        .map(|vecu| {
            let mut g = GMat::zero(tower, m, n);
            for i in 0..m {
                for j in 0..n {
                    let idx = 2 * (i * n + j);
                    g.set(i, j, GElem { re: vecu[idx].clone(), im: vecu[idx + 1].clone() });
                }
            }
            g
        })
        .collect())
}

/// Linear functionals vanishing exactly on the subspace (check rows).
fn v_checks(tower: &Tower, vx: &FSub, ambient: usize) -> Vec<Vec<FElem>> {
    if vx.dim_f() == 2 * ambient {
        return Vec::new();
    }
    if vx.is_zero() {
        let mut out = Vec::new();
        for i in 0..2 * ambient {
            let mut r = vec![tower.f_zero(); 2 * ambient];
            r[i] = tower.f_one();
            out.push(r);
        }
        return out;
    }
    let ns = vx.basis().nullspace(tower);
    (0..ns.rows).map(|i| ns.row(i).to_vec()).collect()
}

pub fn end_basis(tower: &Tower, u: &CorepSpaces) -> Result<Vec<GMat>> {
    hom_basis(tower, u, u)
}

// ---- polynomials over G (used for minimal polynomials over F ⊆ G) --------

fn poly_trim(tower: &Tower, p: &mut Vec<GElem>) {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
    if p.is_empty() {
        p.push(tower.g_zero());
    }
}

fn poly_is_zero(p: &[GElem]) -> bool {
    p.iter().all(|c| c.is_zero())
}

fn poly_monic(tower: &Tower, p: &[GElem]) -> Vec<GElem> {
    let mut p = p.to_vec();
    poly_trim(tower, &mut p);
    if poly_is_zero(&p) {
        return p;
    }
    let inv = tower.g_inv(p.last().unwrap()).unwrap();
    p.iter().map(|c| tower.g_mul(c, &inv)).collect()
}

fn poly_mul(tower: &Tower, a: &[GElem], b: &[GElem]) -> Vec<GElem> {
    let mut out = vec![tower.g_zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = tower.g_add(&out[i + j], &tower.g_mul(x, y));
        }
    }
    poly_trim(tower, &mut out);
    out
}

fn poly_gcd(tower: &Tower, a: &[GElem], b: &[GElem]) -> Vec<GElem> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly_trim(tower, &mut a);
    poly_trim(tower, &mut b);
    while !poly_is_zero(&b) {
        let (_, r) = crate::fields::poly_divrem(tower, &a, &b);
        a = b;
        b = r;
        poly_trim(tower, &mut b);
    }
    poly_monic(tower, &a)
}

fn poly_lcm(tower: &Tower, a: &[GElem], b: &[GElem]) -> Vec<GElem> {
    if poly_is_zero(a) || poly_is_zero(b) {
        return vec![tower.g_zero()];
    }
    let g = poly_gcd(tower, a, b);
    let (q, _) = crate::fields::poly_divrem(tower, &poly_mul(tower, a, b), &g);
    poly_monic(tower, &q)
}

/// s·a + t·b = gcd(a, b); returns (gcd, s, t).
fn poly_ext_gcd(tower: &Tower, a: &[GElem], b: &[GElem]) -> (Vec<GElem>, Vec<GElem>, Vec<GElem>) {
    let one = vec![tower.g_one()];
    let zero = vec![tower.g_zero()];
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (one.clone(), zero.clone());
    let (mut t0, mut t1) = (zero.clone(), one);
    poly_trim(tower, &mut r0);
    poly_trim(tower, &mut r1);
    while !poly_is_zero(&r1) {
        let (q, r) = crate::fields::poly_divrem(tower, &r0, &r1);
        let s_next = poly_sub(tower, &s0, &poly_mul(tower, &q, &s1));
        let t_next = poly_sub(tower, &t0, &poly_mul(tower, &q, &t1));
        r0 = r1;
        r1 = r;
        poly_trim(tower, &mut r1);
        s0 = s1;
        s1 = s_next;
        t0 = t1;
        t1 = t_next;
    }
    // normalize so the gcd is monic
    if !poly_is_zero(&r0) {
        let lead = r0.last().unwrap().clone();
        let inv = tower.g_inv(&lead).unwrap();
        let scale = |p: &[GElem]| p.iter().map(|c| tower.g_mul(c, &inv)).collect::<Vec<_>>();
        return (scale(&r0), scale(&s0), scale(&t0));
    }
    (r0, s0, t0)
}

fn poly_sub(tower: &Tower, a: &[GElem], b: &[GElem]) -> Vec<GElem> {
    let len = a.len().max(b.len());
    let mut out = vec![tower.g_zero(); len];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).cloned().unwrap_or_else(|| tower.g_zero());
        let y = b.get(i).cloned().unwrap_or_else(|| tower.g_zero());
        *o = tower.g_sub(&x, &y);
    }
    poly_trim(tower, &mut out);
    out
}

// ---- minimal polynomial over F of a G-linear operator ---------------------

/// F-realization of the G-linear map (2d × 2d over F).
fn realify(tower: &Tower, m: &GMat) -> FMat {
    let d = m.rows;
    assert_eq!(m.rows, m.cols);
    let mut out = FMat::zero(tower, 2 * d, 2 * d);
    for j in 0..2 * d {
        let mut unit = vec![tower.f_zero(); 2 * d];
        unit[j] = tower.f_one();
        let gv = f_to_g_vec(&unit);
        let mut img = vec![tower.g_zero(); d];
        for (i, o) in img.iter_mut().enumerate() {
            let mut acc = tower.g_zero();
            for k in 0..d {
                acc = tower.g_add(&acc, &tower.g_mul(m.at(i, k), &gv[k]));
            }
            *o = acc;
        }
        let fv = g_to_f_vec(&img);
        for (i, val) in fv.into_iter().enumerate() {
            out.set(i, j, val);
        }
    }
    out
}

fn fmat_apply(tower: &Tower, m: &FMat, v: &[FElem]) -> Vec<FElem> {
    let mut out = vec![tower.f_zero(); m.rows];
    for (i, o) in out.iter_mut().enumerate() {
        let mut acc = tower.f_zero();
        for j in 0..m.cols {
            acc = tower.f_add(&acc, &tower.f_mul(m.at(i, j), &v[j]));
        }
        *o = acc;
    }
    out
}

/// Minimal polynomial over F (embedded in G-coefficients) of the F-linear
/// operator, by lcm of Krylov annihilators of the standard basis vectors.
fn minimal_polynomial_f(tower: &Tower, r: &FMat) -> Vec<GElem> {
    let n = r.rows;
    let mut m = vec![tower.g_one()];
    for s in 0..n {
        let mut v = vec![tower.f_zero(); n];
        v[s] = tower.f_one();
        // reduce v by the current m: w = m(R)·v
        let mut w = vec![tower.f_zero(); n];
        {
            let mut power = v.clone();
            for c in &m {
                if !c.is_zero() {
                    debug_assert!(c.is_in_f());
                    for i in 0..n {
                        w[i] = tower.f_add(&w[i], &tower.f_mul(&c.re, &power[i]));
                    }
                }
                power = fmat_apply(tower, r, &power);
            }
        }
        if w.iter().all(|e| e.is_zero()) {
            continue;
        }
        // Krylov annihilator of w
        let mut krylov: Vec<Vec<FElem>> = vec![w.clone()];
        let ann = loop {
            let next = fmat_apply(tower, r, krylov.last().unwrap());
            // solve Σ c_i krylov_i = next
            let mut sys_rows: Vec<Vec<FElem>> = Vec::new();
            for i in 0..n {
                let mut row: Vec<FElem> =
                    krylov.iter().map(|k| k[i].clone()).collect();
                row.push(next[i].clone());
                sys_rows.push(row);
            }
            let mut sys = FMat::from_rows(sys_rows);
            let k = krylov.len();
            // Gaussian solve over F with augmented column
            let pivots = sys.rref(tower);
            let consistent = !pivots.contains(&k);
            if consistent {
                // next = Σ c_i krylov_i → annihilator t^k − Σ c_i t^i
                let mut coeffs = vec![tower.g_zero(); k + 1];
                for (r_i, &pc) in pivots.iter().enumerate() {
                    if pc < k {
                        let c = sys.at(r_i, k).clone();
                        coeffs[pc] = tower.g_neg(&tower.g_from_f(c));
                    }
                }
                coeffs[k] = tower.g_one();
                break coeffs;
            }
            krylov.push(next);
        };
        m = poly_lcm(tower, &m, &ann);
    }
    m
}

/// Evaluate an F-coefficient polynomial at the G-matrix.
fn poly_eval_gmat(tower: &Tower, p: &[GElem], m: &GMat) -> GMat {
    let d = m.rows;
    let mut acc = GMat::zero(tower, d, d);
    let mut power = GMat::identity(tower, d);
    for c in p {
        if !c.is_zero() {
            acc = acc.add(tower, &power.scale(tower, c));
        }
        power = power.mul(tower, m);
    }
    acc
}

/// Fitting idempotent of φ: the spectral projection onto the invertible part,
/// an F-polynomial in φ. Returns `None` when φ is nilpotent or invertible
/// (idempotent would be 0 or 1).
fn fitting_idempotent(tower: &Tower, phi: &GMat) -> Option<GMat> {
    let r = realify(tower, phi);
    let m = minimal_polynomial_f(tower, &r);
    // m = t^k · g with g(0) ≠ 0
    let k = m.iter().take_while(|c| c.is_zero()).count();
    if k == 0 {
        // φ invertible, the idempotent would be the identity
        return None;
    }
    let g: Vec<GElem> = m[k..].to_vec();
    if g.len() <= 1 {
        // φ nilpotent, the idempotent would be zero
        return None;
    }
    let mut tk = vec![tower.g_zero(); k + 1];
    tk[k] = tower.g_one();
    let (gcd, s, _) = poly_ext_gcd(tower, &tk, &g);
    debug_assert_eq!(gcd.len(), 1);
    let e_poly = poly_mul(tower, &s, &tk);
    let e = poly_eval_gmat(tower, &e_poly, phi);
    Some(e)
}

/// Sub-corepresentation carried by the image of an idempotent endomorphism,
/// re-coordinatized on a G-basis of the image.
fn restrict_to_image(tower: &Tower, u: &CorepSpaces, e: &GMat) -> CorepSpaces {
    let n = u.u0_dim;
    let image = FSub::full(tower, n).apply_g_map(tower, e);
    let basis = image.g_basis(tower);
    let k = basis.len();
    let mut bmat = GMat::zero(tower, n, k);
    for (j, b) in basis.iter().enumerate() {
        for (i, z) in b.iter().enumerate() {
            bmat.set(i, j, z.clone());
        }
    }
    let mut spaces = Vec::with_capacity(u.poset.n());
    for x in 0..u.poset.n() {
        let img_x = u.spaces[x].apply_g_map(tower, e);
        let mut rows = Vec::new();
        for bi in 0..img_x.basis().rows {
            let w = f_to_g_vec(img_x.basis().row(bi));
            let coords = g_solve(tower, &bmat, &w).expect("image vector lies in the image");
            rows.push(g_to_f_vec(&coords));
        }
        spaces.push(FSub::from_f_rows(tower, k, rows));
    }
    CorepSpaces { poset: u.poset.clone(), u0_dim: k, spaces }
}

fn identity_minus(tower: &Tower, e: &GMat) -> GMat {
    let id = GMat::identity(tower, e.rows);
    id.add(tower, &e.scale(tower, &tower.g_neg(&tower.g_one())))
}

fn is_idempotent(tower: &Tower, e: &GMat) -> bool {
    e.mul(tower, e) == *e
}

fn is_proper(tower: &Tower, e: &GMat) -> bool {
    let zero = GMat::zero(tower, e.rows, e.cols);
    let id = GMat::identity(tower, e.rows);
    *e != zero && *e != id
}

/// One Fitting pass over a spanning set of End(U) closed under one round of
/// pairwise products; returns a proper idempotent if any φ splits.
fn fitting_split(tower: &Tower, u: &CorepSpaces) -> Result<Option<GMat>> {
    let basis = end_basis(tower, u)?;
    let mut spanning: Vec<GMat> = basis.clone();
    for a in &basis {
        for b in &basis {
            spanning.push(a.mul(tower, b));
        }
    }
    for phi in &spanning {
        if let Some(e) = fitting_idempotent(tower, phi) {
            if is_idempotent(tower, &e) && is_proper(tower, &e) {
                return Ok(Some(e));
            }
        }
    }
    Ok(None)
}

/// Exhaustive idempotent search over a finite tower (ground truth); `None`
/// means no proper idempotent exists.
fn exhaustive_idempotent(tower: &Tower, basis: &[GMat]) -> Result<Option<GMat>> {
    let fs = tower.f_elems()?;
    let dim = basis.len();
    if dim > ENUMERATION_DIM_BOUND {
        return Err(Error::BudgetExceeded {
            needed: (fs.len() as u64).saturating_pow(dim as u32),
            budget: (fs.len() as u64).saturating_pow(ENUMERATION_DIM_BOUND as u32),
        });
    }
    if dim == 0 {
        return Ok(None);
    }
    let d = basis[0].rows;
    let mut idx = vec![0usize; dim];
    loop {
        // advance odometer (skip the all-zero combination on entry)
        let mut k = 0;
        loop {
            if k == dim {
                return Ok(None);
            }
            idx[k] += 1;
            if idx[k] < fs.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        let mut e = GMat::zero(tower, d, d);
        for (bi, b) in basis.iter().enumerate() {
            if idx[bi] != 0 {
                let c = tower.g_from_f(fs[idx[bi]].clone());
                e = e.add(tower, &b.scale(tower, &c));
            }
        }
        if is_proper(tower, &e) && is_idempotent(tower, &e) {
            return Ok(Some(e));
        }
    }
}

/// Soundness level of a decomposition or indecomposability verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certainty {
    /// Exhaustive idempotent search (finite tower) confirmed every leaf.
    GroundTruth,
    /// Fitting found no split; no exhaustive confirmation was available.
    FittingComplete,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndecStatus {
    Indecomposable(Certainty),
    Decomposable,
    /// Ground truth was required but the enumeration gate was exceeded.
    Undecided,
}

/// Indecomposability of U. Over a finite tower the exhaustive idempotent
/// search is used as ground truth whenever dim_F End(U) ≤ 24; over the
/// rationals a Fitting-complete verdict carries a soundness caveat.
pub fn is_indecomposable(tower: &Tower, u: &CorepSpaces) -> Result<IndecStatus> {
    if u.u0_dim == 0 {
        return Ok(IndecStatus::Decomposable);
    }
    if fitting_split(tower, u)?.is_some() {
        return Ok(IndecStatus::Decomposable);
    }
    if tower.is_finite() {
        let basis = end_basis(tower, u)?;
        if basis.len() > ENUMERATION_DIM_BOUND {
            return Ok(IndecStatus::Undecided);
        }
        match exhaustive_idempotent(tower, &basis)? {
            Some(_) => Ok(IndecStatus::Decomposable),
            None => Ok(IndecStatus::Indecomposable(Certainty::GroundTruth)),
        }
    } else {
        Ok(IndecStatus::Indecomposable(Certainty::FittingComplete))
    }
}

#[derive(Debug, Clone)]
pub struct Decomposition {
    pub summands: Vec<CorepSpaces>,
    pub certainty: Certainty,
    /// True when some leaf hit the enumeration gate and stayed uncertified.
    pub undecided: bool,
}

/// Split U into indecomposable summands: Fitting splitting first, then the
/// exhaustive idempotent search on each leaf over finite towers.
pub fn decompose(tower: &Tower, u: &CorepSpaces) -> Result<Decomposition> {
    let mut summands = Vec::new();
    let mut certainty = Certainty::GroundTruth;
    let mut undecided = false;
    let mut stack = vec![u.clone()];
    while let Some(cur) = stack.pop() {
        if cur.u0_dim == 0 {
            continue;
        }
        if let Some(e) = fitting_split(tower, &cur)? {
            stack.push(restrict_to_image(tower, &cur, &e));
            stack.push(restrict_to_image(tower, &cur, &identity_minus(tower, &e)));
            continue;
        }
        if tower.is_finite() {
            let basis = end_basis(tower, &cur)?;
            if basis.len() > ENUMERATION_DIM_BOUND {
                undecided = true;
                certainty = Certainty::FittingComplete;
                summands.push(cur);
                continue;
            }
            if let Some(e) = exhaustive_idempotent(tower, &basis)? {
                stack.push(restrict_to_image(tower, &cur, &e));
                stack.push(restrict_to_image(tower, &cur, &identity_minus(tower, &e)));
                continue;
            }
            summands.push(cur);
        } else {
            certainty = Certainty::FittingComplete;
            summands.push(cur);
        }
    }
    // deterministic order
    summands.sort_by_key(|s| {
        let d = dim_vector_of_spaces(tower, s);
        (std::cmp::Reverse(d.d0), format!("{d}"))
    });
    Ok(Decomposition { summands, certainty, undecided })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsoStatus {
    Iso,
    NotIso,
    Undecided,
}

/// F-trace of a G-linear map through the realification: Σ (2·re − p·im)
/// over the G-diagonal.
fn trace_f(tower: &Tower, m: &GMat) -> FElem {
    let mut acc = tower.f_zero();
    for i in 0..m.rows {
        let z = m.at(i, i);
        let two_re = tower.f_add(&z.re, &z.re);
        acc = tower.f_add(&acc, &tower.f_sub(&two_re, &tower.f_mul(tower.p_coef(), &z.im)));
    }
    acc
}

/// Whether x lies in the trace-form radical of the algebra spanned by the
/// basis (Dickson's criterion; valid in characteristic 0).
fn in_trace_radical(tower: &Tower, basis: &[GMat], x: &GMat) -> bool {
    basis.iter().all(|b| trace_f(tower, &x.mul(tower, b)).is_zero())
}

/// Isomorphism of corepresentations: equal dimension vectors and an
/// invertible element of Hom(U, V).
pub fn are_isomorphic(tower: &Tower, u: &CorepSpaces, v: &CorepSpaces) -> Result<IsoStatus> {
    if u.poset != v.poset {
        return Err(Error::PosetMismatch);
    }
    if dim_vector_of_spaces(tower, u) != dim_vector_of_spaces(tower, v) {
        return Ok(IsoStatus::NotIso);
    }
    if u.u0_dim == 0 {
        return Ok(IsoStatus::Iso);
    }
    let hom = hom_basis(tower, u, v)?;
    if hom.is_empty() {
        return Ok(IsoStatus::NotIso);
    }
    if tower.is_finite() {
        if hom.len() <= ENUMERATION_DIM_BOUND {
            return enumerate_invertible(tower, &hom);
        }
        // fall back to summand-wise matching
        return match_by_summands(tower, u, v);
    }
    // rationals: indecomposable pairs through the trace-form radical,
    // otherwise summand-wise
    let u_ind = matches!(is_indecomposable(tower, u)?, IndecStatus::Indecomposable(_));
    let v_ind = matches!(is_indecomposable(tower, v)?, IndecStatus::Indecomposable(_));
    if u_ind && v_ind {
        let end_u = end_basis(tower, u)?;
        let hom_back = hom_basis(tower, v, u)?;
        for phi in &hom {
            for psi in &hom_back {
                let comp = psi.mul(tower, phi);
                if !in_trace_radical(tower, &end_u, &comp) {
                    return Ok(IsoStatus::Iso);
                }
            }
        }
        return Ok(IsoStatus::NotIso);
    }
    match_by_summands(tower, u, v)
}

fn enumerate_invertible(tower: &Tower, hom: &[GMat]) -> Result<IsoStatus> {
    let fs = tower.f_elems()?;
    let dim = hom.len();
    let d = hom[0].rows;
    let mut idx = vec![0usize; dim];
    loop {
        let mut k = 0;
        loop {
            if k == dim {
                return Ok(IsoStatus::NotIso);
            }
            idx[k] += 1;
            if idx[k] < fs.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        let mut phi = GMat::zero(tower, d, hom[0].cols);
        for (bi, b) in hom.iter().enumerate() {
            if idx[bi] != 0 {
                let c = tower.g_from_f(fs[idx[bi]].clone());
                phi = phi.add(tower, &b.scale(tower, &c));
            }
        }
        if phi.is_invertible(tower) {
            return Ok(IsoStatus::Iso);
        }
    }
}

fn match_by_summands(tower: &Tower, u: &CorepSpaces, v: &CorepSpaces) -> Result<IsoStatus> {
    let du = decompose(tower, u)?;
    let dv = decompose(tower, v)?;
    if du.undecided || dv.undecided {
        return Ok(IsoStatus::Undecided);
    }
    if du.summands.len() != dv.summands.len() {
        return Ok(IsoStatus::NotIso);
    }
    let mut used = vec![false; dv.summands.len()];
    for s in &du.summands {
        let mut matched = false;
        for (j, t) in dv.summands.iter().enumerate() {
            if used[j] {
                continue;
            }
            match are_isomorphic(tower, s, t)? {
                IsoStatus::Iso => {
                    used[j] = true;
                    matched = true;
                    break;
                }
                IsoStatus::NotIso => {}
                IsoStatus::Undecided => return Ok(IsoStatus::Undecided),
            }
        }
        if !matched {
            return Ok(IsoStatus::NotIso);
        }
    }
    Ok(IsoStatus::Iso)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corep::{direct_sum, spaces_of, MatrixCorep};
    use crate::poset::{critical_poset, CriticalId};

    fn k6_one(tower: &Tower, a: &str, b: &str) -> CorepSpaces {
        let p = critical_poset(CriticalId::K6).clone();
        let sa = GMat::from_rows(vec![vec![tower.parse_g(a).unwrap()]]);
        let sb = GMat::from_rows(vec![vec![tower.parse_g(b).unwrap()]]);
        spaces_of(tower, &MatrixCorep::new(p, 1, vec![sa, sb]).unwrap())
    }

    #[test]
    fn hom_of_trivials_is_g() {
        let t = Tower::gf2();
        let p = critical_poset(CriticalId::K6);
        let triv = spaces_of(&t, &MatrixCorep::trivial(&t, p));
        let h = hom_basis(&t, &triv, &triv).unwrap();
        assert_eq!(h.len(), 2); // all of G
    }

    #[test]
    fn hom_vanishes_between_different_lines() {
        let t = Tower::gf2();
        let u = k6_one(&t, "1", "1");
        let v = k6_one(&t, "1", "x");
        assert_eq!(hom_basis(&t, &u, &v).unwrap().len(), 0);
    }

    #[test]
    fn end_of_square_is_four_dimensional_for_trivial() {
        let t = Tower::gf2();
        let p = critical_poset(CriticalId::K6);
        let triv = MatrixCorep::trivial(&t, p);
        let sq = spaces_of(&t, &direct_sum(&t, &triv, &triv).unwrap());
        let triv_sp = spaces_of(&t, &triv);
        let e1 = end_basis(&t, &triv_sp).unwrap().len();
        assert_eq!(end_basis(&t, &sq).unwrap().len(), 4 * e1);
    }

    #[test]
    fn hom_additive_over_direct_sums() {
        let t = Tower::gf2();
        let p = critical_poset(CriticalId::K6).clone();
        let m1 = MatrixCorep::new(
            p.clone(),
            1,
            vec![
                GMat::from_rows(vec![vec![t.g_one()]]),
                GMat::from_rows(vec![vec![t.g_one()]]),
            ],
        )
        .unwrap();
        let m2 = MatrixCorep::new(
            p.clone(),
            1,
            vec![
                GMat::from_rows(vec![vec![t.g_one()]]),
                GMat::from_rows(vec![vec![t.xi()]]),
            ],
        )
        .unwrap();
        let u1 = spaces_of(&t, &m1);
        let u2 = spaces_of(&t, &m2);
        let v = k6_one(&t, "1", "1+x");
        let sum = spaces_of(&t, &direct_sum(&t, &m1, &m2).unwrap());
        let lhs = hom_basis(&t, &sum, &v).unwrap().len();
        let rhs = hom_basis(&t, &u1, &v).unwrap().len() + hom_basis(&t, &u2, &v).unwrap().len();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn indecomposability_basics() {
        let t = Tower::gf2();
        let p = critical_poset(CriticalId::K6);
        let triv = spaces_of(&t, &MatrixCorep::trivial(&t, p));
        assert_eq!(
            is_indecomposable(&t, &triv).unwrap(),
            IndecStatus::Indecomposable(Certainty::GroundTruth)
        );
        let u = k6_one(&t, "1", "x");
        assert_eq!(
            is_indecomposable(&t, &u).unwrap(),
            IndecStatus::Indecomposable(Certainty::GroundTruth)
        );
    }

    #[test]
    fn decompose_split_pair() {
        let t = Tower::gf2();
        let p = critical_poset(CriticalId::K6).clone();
        let m1 = MatrixCorep::new(
            p.clone(),
            1,
            vec![
                GMat::from_rows(vec![vec![t.g_one()]]),
                GMat::from_rows(vec![vec![t.g_one()]]),
            ],
        )
        .unwrap();
        let m2 = MatrixCorep::new(
            p,
            1,
            vec![
                GMat::from_rows(vec![vec![t.g_one()]]),
                GMat::from_rows(vec![vec![t.xi()]]),
            ],
        )
        .unwrap();
        let sum = spaces_of(&t, &direct_sum(&t, &m1, &m2).unwrap());
        let dec = decompose(&t, &sum).unwrap();
        assert_eq!(dec.summands.len(), 2);
        assert!(!dec.undecided);
        let u1 = spaces_of(&t, &m1);
        let u2 = spaces_of(&t, &m2);
        let mut found = [false, false];
        for s in &dec.summands {
            if are_isomorphic(&t, s, &u1).unwrap() == IsoStatus::Iso {
                found[0] = true;
            }
            if are_isomorphic(&t, s, &u2).unwrap() == IsoStatus::Iso {
                found[1] = true;
            }
        }
        assert_eq!(found, [true, true]);
    }

    #[test]
    fn iso_examples() {
        let t = Tower::gf2();
        let a = k6_one(&t, "1", "x");
        let b = k6_one(&t, "1", "1+x");
        assert_eq!(are_isomorphic(&t, &a, &b).unwrap(), IsoStatus::NotIso);
        assert_eq!(are_isomorphic(&t, &a, &a).unwrap(), IsoStatus::Iso);
        // over the rationals: G-scaling of a column is an isomorphism
        let q = Tower::qsqrt2();
        let u = k6_one(&q, "1", "x");
        let v = k6_one(&q, "2", "2*x");
        assert_eq!(are_isomorphic(&q, &u, &v).unwrap(), IsoStatus::Iso);
        let w = k6_one(&q, "1", "1");
        assert_eq!(are_isomorphic(&q, &u, &w).unwrap(), IsoStatus::NotIso);
    }

    #[test]
    fn fitting_idempotent_polynomial_identity() {
        // a diagonal map with an invertible and a nilpotent part splits
        let t = Tower::gf2();
        let phi = GMat::from_rows(vec![
            vec![t.g_one(), t.g_zero()],
            vec![t.g_zero(), t.g_zero()],
        ]);
        let e = fitting_idempotent(&t, &phi).unwrap();
        assert!(is_idempotent(&t, &e));
        assert_eq!(e, phi); // projection onto the first coordinate
    }
}
