//! Exact calculus of F-subspaces inside a finite-dimensional G-space.
//!
//! A subspace of G^n is stored through the F-realization of G^n with the
//! fixed basis e₁, ξe₁, e₂, ξe₂, …, eₙ, ξeₙ; the canonical witness is the
//! reduced row echelon form of a spanning set, so two subspaces are equal
//! iff their stored bases are equal.

use crate::fields::{FElem, GElem, GMat, Tower};
use crate::{Error, Result};

/// Dense matrix over the base field F, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<FElem>,
}

impl FMat {
    pub fn zero(tower: &Tower, rows: usize, cols: usize) -> FMat {
        FMat { rows, cols, data: vec![tower.f_zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<FElem>>) -> FMat {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c));
        FMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn at(&self, i: usize, j: usize) -> &FElem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FElem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn vstack(&self, other: &FMat) -> FMat {
        assert!(self.rows == 0 || other.rows == 0 || self.cols == other.cols);
        if self.rows == 0 {
            return other.clone();
        }
        if other.rows == 0 {
            return self.clone();
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        FMat { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// In-place reduction to reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self, tower: &Tower) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(pi) = (r..self.rows).find(|&i| !self.at(i, c).is_zero()) else {
                continue;
            };
            for j in 0..self.cols {
                let a = self.at(r, j).clone();
                let b = self.at(pi, j).clone();
                self.set(r, j, b);
                self.set(pi, j, a);
            }
            let inv = tower.f_inv(self.at(r, c)).unwrap();
            for j in 0..self.cols {
                let v = tower.f_mul(self.at(r, j), &inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && !self.at(i, c).is_zero() {
                    let f = self.at(i, c).clone();
                    for j in 0..self.cols {
                        let v = tower.f_sub(self.at(i, j), &tower.f_mul(&f, self.at(r, j)));
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        pivots
    }

    pub fn rank(&self, tower: &Tower) -> usize {
        let mut m = self.clone();
        m.rref(tower).len()
    }

    /// Canonical basis of {x : self · x = 0}, one row per basis vector.
    pub fn nullspace(&self, tower: &Tower) -> FMat {
        let mut m = self.clone();
        let pivots = m.rref(tower);
        let mut rows = Vec::new();
        let mut piv_iter = pivots.iter().copied().collect::<Vec<_>>();
        piv_iter.sort_unstable();
        let is_pivot = |c: usize| piv_iter.binary_search(&c).is_ok();
        for free in 0..self.cols {
            if is_pivot(free) {
                continue;
            }
            let mut v = vec![tower.f_zero(); self.cols];
            v[free] = tower.f_one();
            for (r, &pc) in piv_iter.iter().enumerate() {
                v[pc] = tower.f_neg(m.at(r, free));
            }
            rows.push(v);
        }
        let mut out = FMat::from_rows(rows);
        if out.rows == 0 {
            out = FMat { rows: 0, cols: self.cols, data: Vec::new() };
        } else {
            out.rref(tower);
        }
        out
    }
}

/// Interpret an F-realization row as a G-vector.
pub fn f_to_g_vec(row: &[FElem]) -> Vec<GElem> {
    assert!(row.len() % 2 == 0);
    row.chunks(2)
        .map(|ch| GElem { re: ch[0].clone(), im: ch[1].clone() })
        .collect()
}

/// F-realization coordinates of a G-vector.
pub fn g_to_f_vec(v: &[GElem]) -> Vec<FElem> {
    let mut out = Vec::with_capacity(v.len() * 2);
    for z in v {
        out.push(z.re.clone());
        out.push(z.im.clone());
    }
    out
}

/// Multiplication by ξ in F-coordinates: (a, b) per slot ↦ (−q·b, a − p·b).
pub fn mul_xi_f(tower: &Tower, row: &[FElem]) -> Vec<FElem> {
    let mut out = Vec::with_capacity(row.len());
    for ch in row.chunks(2) {
        let a = &ch[0];
        let b = &ch[1];
        out.push(tower.f_neg(&tower.f_mul(tower.q_coef(), b)));
        out.push(tower.f_sub(a, &tower.f_mul(tower.p_coef(), b)));
    }
    out
}

/// F-subspace of G^n in canonical echelon form over the F-realization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FSub {
    ambient: usize,
    basis: FMat, // RREF, rows = dim_F
}

impl FSub {
    pub fn zero(tower: &Tower, ambient: usize) -> FSub {
        let _ = tower;
        FSub { ambient, basis: FMat { rows: 0, cols: 2 * ambient, data: Vec::new() } }
    }

    pub fn full(tower: &Tower, ambient: usize) -> FSub {
        let mut rows = Vec::new();
        for i in 0..2 * ambient {
            let mut v = vec![tower.f_zero(); 2 * ambient];
            v[i] = tower.f_one();
            rows.push(v);
        }
        FSub { ambient, basis: FMat::from_rows(rows) }
    }

    /// Span of F-realization rows.
    pub fn from_f_rows(tower: &Tower, ambient: usize, rows: Vec<Vec<FElem>>) -> FSub {
        assert!(rows.iter().all(|r| r.len() == 2 * ambient));
        if rows.is_empty() {
            return FSub::zero(tower, ambient);
        }
        let mut m = FMat::from_rows(rows);
        m.rref(tower);
        let rank = (0..m.rows)
            .take_while(|&i| m.row(i).iter().any(|e| !e.is_zero()))
            .count();
        m.data.truncate(rank * m.cols);
        m.rows = rank;
        FSub { ambient, basis: m }
    }

    /// F-span or G-span of G-vectors (G-mode also adjoins ξ·v for each v).
    pub fn span(tower: &Tower, ambient: usize, vectors: &[Vec<GElem>], g_mode: bool) -> Result<FSub> {
        let mut rows = Vec::new();
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::AmbientMismatch { left: ambient, right: v.len() });
            }
            let f = g_to_f_vec(v);
            if g_mode {
                rows.push(mul_xi_f(tower, &f));
            }
            rows.push(f);
        }
        Ok(FSub::from_f_rows(tower, ambient, rows))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim_f(&self) -> usize {
        self.basis.rows
    }

    pub fn basis(&self) -> &FMat {
        &self.basis
    }

    pub fn basis_g_rows(&self) -> Vec<Vec<GElem>> {
        (0..self.basis.rows).map(|i| f_to_g_vec(self.basis.row(i))).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.rows == 0
    }

    fn check_ambient(&self, other: &FSub) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        Ok(())
    }

    pub fn sum(&self, tower: &Tower, other: &FSub) -> Result<FSub> {
        self.check_ambient(other)?;
        let mut rows: Vec<Vec<FElem>> =
            (0..self.basis.rows).map(|i| self.basis.row(i).to_vec()).collect();
        rows.extend((0..other.basis.rows).map(|i| other.basis.row(i).to_vec()));
        Ok(FSub::from_f_rows(tower, self.ambient, rows))
    }

    /// Check matrix C with self = {x : C·x = 0}.
    fn check_matrix(&self, tower: &Tower) -> FMat {
        if self.basis.rows == 0 {
            // zero subspace: every coordinate must vanish
            let mut rows = Vec::new();
            for i in 0..2 * self.ambient {
                let mut v = vec![tower.f_zero(); 2 * self.ambient];
                v[i] = tower.f_one();
                rows.push(v);
            }
            return FMat::from_rows(rows);
        }
        self.basis.nullspace(tower)
    }

    pub fn intersect(&self, tower: &Tower, other: &FSub) -> Result<FSub> {
        self.check_ambient(other)?;
        let c = self.check_matrix(tower).vstack(&other.check_matrix(tower));
        let ns = c.nullspace(tower);
        let rows = (0..ns.rows).map(|i| ns.row(i).to_vec()).collect();
        Ok(FSub::from_f_rows(tower, self.ambient, rows))
    }

    pub fn contains_vec(&self, tower: &Tower, row: &[FElem]) -> bool {
        // reduce the vector against the RREF basis
        let mut v = row.to_vec();
        for i in 0..self.basis.rows {
            let pivot = self.basis.row(i).iter().position(|e| !e.is_zero()).unwrap();
            if !v[pivot].is_zero() {
                let f = v[pivot].clone();
                for j in 0..v.len() {
                    let s = tower.f_mul(&f, self.basis.at(i, j));
                    v[j] = tower.f_sub(&v[j], &s);
                }
            }
        }
        v.iter().all(|e| e.is_zero())
    }

    pub fn contains(&self, tower: &Tower, other: &FSub) -> Result<bool> {
        self.check_ambient(other)?;
        Ok((0..other.basis.rows).all(|i| self.contains_vec(tower, other.basis.row(i))))
    }

    /// Least G-subspace containing self: F-span of the basis and ξ·basis.
    pub fn hull(&self, tower: &Tower) -> FSub {
        let mut rows: Vec<Vec<FElem>> =
            (0..self.basis.rows).map(|i| self.basis.row(i).to_vec()).collect();
        for i in 0..self.basis.rows {
            rows.push(mul_xi_f(tower, self.basis.row(i)));
        }
        FSub::from_f_rows(tower, self.ambient, rows)
    }

    /// Largest G-subspace contained in self: {u ∈ U : ξu ∈ U}.
    pub fn cohull(&self, tower: &Tower) -> FSub {
        let c = self.check_matrix(tower);
        // preimage of self under multiplication by ξ: rows of C composed with M_ξ
        let mut pre_rows = Vec::new();
        for i in 0..c.rows {
            // constraint row r applied to ξx: r · M_ξ x, i.e. evaluate r on ξ·(unit vectors)
            let mut new_row = vec![tower.f_zero(); 2 * self.ambient];
            for (j, val) in new_row.iter_mut().enumerate() {
                let mut unit = vec![tower.f_zero(); 2 * self.ambient];
                unit[j] = tower.f_one();
                let xi_unit = mul_xi_f(tower, &unit);
                let mut acc = tower.f_zero();
                for k in 0..2 * self.ambient {
                    acc = tower.f_add(&acc, &tower.f_mul(c.at(i, k), &xi_unit[k]));
                }
                *val = acc;
            }
            pre_rows.push(new_row);
        }
        let pre = if pre_rows.is_empty() {
            FMat { rows: 0, cols: 2 * self.ambient, data: Vec::new() }
        } else {
            FMat::from_rows(pre_rows)
        };
        let all = c.vstack(&pre);
        let ns = all.nullspace(tower);
        let rows = (0..ns.rows).map(|i| ns.row(i).to_vec()).collect();
        FSub::from_f_rows(tower, self.ambient, rows)
    }

    /// Closed under multiplication by ξ.
    pub fn is_strong(&self, tower: &Tower) -> bool {
        (0..self.basis.rows)
            .all(|i| self.contains_vec(tower, &mul_xi_f(tower, self.basis.row(i))))
    }

    /// G-dimension of a strong subspace.
    pub fn dim_g(&self) -> usize {
        debug_assert!(self.basis.rows % 2 == 0);
        self.basis.rows / 2
    }

    /// Orthogonal complement in the dual G-space under the fixed pairing
    /// φ_c(u) = Σᵢ (uᵢaᵢ + uᵢ'·q·bᵢ) with c = a + ξb.
    pub fn perp(&self, tower: &Tower) -> FSub {
        if self.basis.rows == 0 {
            return FSub::full(tower, self.ambient);
        }
        // scale the odd F-coordinates of the basis by q, then take the nullspace
        let mut m = self.basis.clone();
        for i in 0..m.rows {
            for j in 0..self.ambient {
                let v = tower.f_mul(m.at(i, 2 * j + 1), tower.q_coef());
                m.set(i, 2 * j + 1, v);
            }
        }
        let ns = m.nullspace(tower);
        let rows = (0..ns.rows).map(|i| ns.row(i).to_vec()).collect();
        FSub::from_f_rows(tower, self.ambient, rows)
    }

    /// Image under a G-linear map given by a matrix with `ambient` columns.
    pub fn apply_g_map(&self, tower: &Tower, map: &GMat) -> FSub {
        assert_eq!(map.cols, self.ambient);
        let mut rows = Vec::new();
        for i in 0..self.basis.rows {
            let gv = f_to_g_vec(self.basis.row(i));
            let mut out = vec![tower.g_zero(); map.rows];
            for (r, o) in out.iter_mut().enumerate() {
                let mut acc = tower.g_zero();
                for c in 0..map.cols {
                    acc = tower.g_add(&acc, &tower.g_mul(map.at(r, c), &gv[c]));
                }
                *o = acc;
            }
            rows.push(g_to_f_vec(&out));
        }
        FSub::from_f_rows(tower, map.rows, rows)
    }

    /// G-basis of a strong subspace, extracted by G-Gaussian elimination of
    /// the F-basis rows read as G-vectors (deterministic).
    pub fn g_basis(&self, tower: &Tower) -> Vec<Vec<GElem>> {
        let mut g = GMat::from_rows(self.basis_g_rows());
        if g.rows == 0 {
            return Vec::new();
        }
        // G-RREF
        let mut rank = 0;
        for col in 0..g.cols {
            let Some(pi) = (rank..g.rows).find(|&i| !g.at(i, col).is_zero()) else {
                continue;
            };
            for j in 0..g.cols {
                let a = g.at(rank, j).clone();
                let b = g.at(pi, j).clone();
                g.set(rank, j, b);
                g.set(pi, j, a);
            }
            let inv = tower.g_inv(g.at(rank, col)).unwrap();
            for j in 0..g.cols {
                let v = tower.g_mul(g.at(rank, j), &inv);
                g.set(rank, j, v);
            }
            for i in 0..g.rows {
                if i != rank && !g.at(i, col).is_zero() {
                    let c = g.at(i, col).clone();
                    for j in 0..g.cols {
                        let v = tower.g_sub(g.at(i, j), &tower.g_mul(&c, g.at(rank, j)));
                        g.set(i, j, v);
                    }
                }
            }
            rank += 1;
            if rank == g.rows {
                break;
            }
        }
        (0..rank).map(|i| (0..g.cols).map(|j| g.at(i, j).clone()).collect()).collect()
    }

    /// Pretty canonical basis in element syntax, one row per line.
    pub fn render(&self, tower: &Tower) -> String {
        if self.basis.rows == 0 {
            return "0".to_string();
        }
        self.basis_g_rows()
            .iter()
            .map(|row| {
                row.iter().map(|z| tower.g_to_string(z)).collect::<Vec<_>>().join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Solve A·x = b over G; A is n×k, b length n. Returns one solution if any.
pub fn g_solve(tower: &Tower, a: &GMat, b: &[GElem]) -> Option<Vec<GElem>> {
    assert_eq!(a.rows, b.len());
    let mut m = a.hstack(&GMat::from_rows(b.iter().map(|z| vec![z.clone()]).collect()));
    // G-RREF on the augmented matrix
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank = 0;
    for col in 0..a.cols {
        let Some(pi) = (rank..m.rows).find(|&i| !m.at(i, col).is_zero()) else {
            continue;
        };
        for j in 0..m.cols {
            let x = m.at(rank, j).clone();
            let y = m.at(pi, j).clone();
            m.set(rank, j, y);
            m.set(pi, j, x);
        }
        let inv = tower.g_inv(m.at(rank, col)).unwrap();
        for j in 0..m.cols {
            let v = tower.g_mul(m.at(rank, j), &inv);
            m.set(rank, j, v);
        }
        for i in 0..m.rows {
            if i != rank && !m.at(i, col).is_zero() {
                let c = m.at(i, col).clone();
                for j in 0..m.cols {
                    let v = tower.g_sub(m.at(i, j), &tower.g_mul(&c, m.at(rank, j)));
                    m.set(i, j, v);
                }
            }
        }
        pivots.push((rank, col));
        rank += 1;
        if rank == m.rows {
            break;
        }
    }
    // inconsistent if a nonzero entry remains in the b column below the rank
    for i in rank..m.rows {
        if !m.at(i, a.cols).is_zero() {
            return None;
        }
    }
    let mut x = vec![tower.g_zero(); a.cols];
    for (r, c) in pivots {
        x[c] = m.at(r, a.cols).clone();
    }
    Some(x)
}
