//! Exact arithmetic in a quadratic field extension F ⊂ G = F(ξ).
//!
//! The base field F is either a prime field GF(p) or the rationals; the
//! extension is generated by ξ with minimal polynomial ℘(t) = t² + pt + q,
//! so ξ² = −q − pξ and every element of G is re + ξ·im with re, im ∈ F.

use num_bigint::BigInt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::{Error, Result};

/// Base field of the tower: a prime field GF(p) or the exact rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseField {
    Prime(u64),
    Rationals,
}

/// Element of the base field F.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FElem {
    Fp(u64),
    Rat(BigRational),
}

impl FElem {
    pub fn is_zero(&self) -> bool {
        match self {
            FElem::Fp(v) => *v == 0,
            FElem::Rat(r) => r.is_zero(),
        }
    }
}

/// Element re + ξ·im of the extension field G.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GElem {
    pub re: FElem,
    pub im: FElem,
}

impl GElem {
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// True when the element lies in the base field F.
    pub fn is_in_f(&self) -> bool {
        self.im.is_zero()
    }
}

/// The quadratic tower F ⊂ F(ξ) = G with ℘(t) = t² + pt + q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tower {
    base: BaseField,
    p_coef: FElem,
    q_coef: FElem,
}

fn rational_is_square(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer();
    let den = r.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

impl Tower {
    /// Build a tower, checking that t² + pt + q has no root in the base field.
    pub fn new(base: BaseField, p_coef: FElem, q_coef: FElem) -> Result<Tower> {
        let t = Tower { base, p_coef, q_coef };
        t.check_elem(&t.p_coef)?;
        t.check_elem(&t.q_coef)?;
        match t.base {
            BaseField::Prime(p) => {
                if p < 2 || (p > 2 && !is_prime(p)) {
                    return Err(Error::BadMatrix(format!("{p} is not prime")));
                }
                for a in 0..p {
                    let v = (a * a + fp_val(&t.p_coef) * a + fp_val(&t.q_coef)) % p;
                    if v == 0 {
                        return Err(Error::ReduciblePolynomial { root: a.to_string() });
                    }
                }
            }
            BaseField::Rationals => {
                // reducible over Q iff the discriminant p² − 4q is a rational square
                let p = rat_val(&t.p_coef);
                let q = rat_val(&t.q_coef);
                let disc = &p * &p - BigRational::from_integer(BigInt::from(4)) * &q;
                if let Some(s) = rational_is_square(&disc) {
                    let two = BigRational::from_integer(BigInt::from(2));
                    let root = (&s - &p) / &two;
                    return Err(Error::ReduciblePolynomial { root: root.to_string() });
                }
            }
        }
        Ok(t)
    }

    /// GF(2) ⊂ GF(4) with ℘ = t² + t + 1.
    pub fn gf2() -> Tower {
        Tower::new(BaseField::Prime(2), FElem::Fp(1), FElem::Fp(1)).unwrap()
    }

    /// Q ⊂ Q(√2) with ℘ = t² − 2.
    pub fn qsqrt2() -> Tower {
        Tower::new(
            BaseField::Rationals,
            FElem::Rat(BigRational::zero()),
            FElem::Rat(BigRational::from_integer(BigInt::from(-2))),
        )
        .unwrap()
    }

    /// GF(3) ⊂ GF(9) with ℘ = t² + 1 (spot-check tower).
    pub fn gf3() -> Tower {
        Tower::new(BaseField::Prime(3), FElem::Fp(0), FElem::Fp(1)).unwrap()
    }

    pub fn preset(name: &str) -> Result<Tower> {
        match name {
            "gf2" => Ok(Tower::gf2()),
            "qsqrt2" => Ok(Tower::qsqrt2()),
            "gf3" => Ok(Tower::gf3()),
            other => Err(Error::UnknownCatalogId(format!("field preset {other}"))),
        }
    }

    /// Preset name when this tower is one of the shipped ones.
    pub fn preset_name(&self) -> Option<&'static str> {
        if *self == Tower::gf2() {
            Some("gf2")
        } else if *self == Tower::qsqrt2() {
            Some("qsqrt2")
        } else if *self == Tower::gf3() {
            Some("gf3")
        } else {
            None
        }
    }

    pub fn base(&self) -> BaseField {
        self.base
    }

    pub fn p_coef(&self) -> &FElem {
        &self.p_coef
    }

    pub fn q_coef(&self) -> &FElem {
        &self.q_coef
    }

    /// Characteristic of F (0 for the rationals).
    pub fn char(&self) -> u64 {
        match self.base {
            BaseField::Prime(p) => p,
            BaseField::Rationals => 0,
        }
    }

    /// True iff p = 0 or char F = 2 (hypothesis of the duality principle).
    pub fn duality_enabled(&self) -> bool {
        self.p_coef.is_zero() || self.char() == 2
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.base, BaseField::Prime(_))
    }

    /// Size of F for finite towers.
    pub fn f_order(&self) -> Option<u64> {
        match self.base {
            BaseField::Prime(p) => Some(p),
            BaseField::Rationals => None,
        }
    }

    fn check_elem(&self, e: &FElem) -> Result<()> {
        match (self.base, e) {
            (BaseField::Prime(p), FElem::Fp(v)) if *v < p => Ok(()),
            (BaseField::Rationals, FElem::Rat(_)) => Ok(()),
            _ => Err(Error::FieldMismatch),
        }
    }

    // ---- F arithmetic -------------------------------------------------

    pub fn f_zero(&self) -> FElem {
        match self.base {
            BaseField::Prime(_) => FElem::Fp(0),
            BaseField::Rationals => FElem::Rat(BigRational::zero()),
        }
    }

    pub fn f_one(&self) -> FElem {
        match self.base {
            BaseField::Prime(_) => FElem::Fp(1),
            BaseField::Rationals => FElem::Rat(BigRational::one()),
        }
    }

    pub fn f_from_i64(&self, v: i64) -> FElem {
        match self.base {
            BaseField::Prime(p) => {
                let m = v.rem_euclid(p as i64) as u64;
                FElem::Fp(m)
            }
            BaseField::Rationals => FElem::Rat(BigRational::from_integer(BigInt::from(v))),
        }
    }

    pub fn f_add(&self, a: &FElem, b: &FElem) -> FElem {
        match (a, b) {
            (FElem::Fp(x), FElem::Fp(y)) => {
                let p = self.char();
                FElem::Fp((x + y) % p)
            }
            (FElem::Rat(x), FElem::Rat(y)) => FElem::Rat(x + y),
            _ => panic!("mixed base fields"),
        }
    }

    pub fn f_neg(&self, a: &FElem) -> FElem {
        match a {
            FElem::Fp(x) => {
                let p = self.char();
                FElem::Fp((p - x % p) % p)
            }
            FElem::Rat(x) => FElem::Rat(-x),
        }
    }

    pub fn f_sub(&self, a: &FElem, b: &FElem) -> FElem {
        self.f_add(a, &self.f_neg(b))
    }

    pub fn f_mul(&self, a: &FElem, b: &FElem) -> FElem {
        match (a, b) {
            (FElem::Fp(x), FElem::Fp(y)) => {
                let p = self.char() as u128;
                FElem::Fp(((*x as u128 * *y as u128) % p) as u64)
            }
            (FElem::Rat(x), FElem::Rat(y)) => FElem::Rat(x * y),
            _ => panic!("mixed base fields"),
        }
    }

    pub fn f_inv(&self, a: &FElem) -> Result<FElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match a {
            FElem::Fp(x) => {
                let p = self.char();
                Ok(FElem::Fp(mod_inv(*x, p)))
            }
            FElem::Rat(x) => Ok(FElem::Rat(x.recip())),
        }
    }

    pub fn f_div(&self, a: &FElem, b: &FElem) -> Result<FElem> {
        Ok(self.f_mul(a, &self.f_inv(b)?))
    }

    /// All elements of F in a fixed order (finite towers only).
    pub fn f_elems(&self) -> Result<Vec<FElem>> {
        match self.base {
            BaseField::Prime(p) => Ok((0..p).map(FElem::Fp).collect()),
            BaseField::Rationals => Err(Error::InfiniteField),
        }
    }

    // ---- G arithmetic -------------------------------------------------

    pub fn g_zero(&self) -> GElem {
        GElem { re: self.f_zero(), im: self.f_zero() }
    }

    pub fn g_one(&self) -> GElem {
        GElem { re: self.f_one(), im: self.f_zero() }
    }

    pub fn xi(&self) -> GElem {
        GElem { re: self.f_zero(), im: self.f_one() }
    }

    pub fn g_from_f(&self, a: FElem) -> GElem {
        GElem { re: a, im: self.f_zero() }
    }

    pub fn g_from_i64(&self, re: i64, im: i64) -> GElem {
        GElem { re: self.f_from_i64(re), im: self.f_from_i64(im) }
    }

    pub fn g_add(&self, a: &GElem, b: &GElem) -> GElem {
        GElem { re: self.f_add(&a.re, &b.re), im: self.f_add(&a.im, &b.im) }
    }

    pub fn g_neg(&self, a: &GElem) -> GElem {
        GElem { re: self.f_neg(&a.re), im: self.f_neg(&a.im) }
    }

    pub fn g_sub(&self, a: &GElem, b: &GElem) -> GElem {
        self.g_add(a, &self.g_neg(b))
    }

    /// (a + ξb)(c + ξd) = (ac − q·bd) + ξ(ad + bc − p·bd), from ξ² = −q − pξ.
    pub fn g_mul(&self, x: &GElem, y: &GElem) -> GElem {
        let ac = self.f_mul(&x.re, &y.re);
        let bd = self.f_mul(&x.im, &y.im);
        let ad = self.f_mul(&x.re, &y.im);
        let bc = self.f_mul(&x.im, &y.re);
        let re = self.f_sub(&ac, &self.f_mul(&self.q_coef, &bd));
        let im = self.f_sub(&self.f_add(&ad, &bc), &self.f_mul(&self.p_coef, &bd));
        GElem { re, im }
    }

    /// Norm z·z̄ = a² − p·ab + q·b² ∈ F.
    pub fn g_norm(&self, z: &GElem) -> FElem {
        let a2 = self.f_mul(&z.re, &z.re);
        let ab = self.f_mul(&z.re, &z.im);
        let b2 = self.f_mul(&z.im, &z.im);
        self.f_add(
            &self.f_sub(&a2, &self.f_mul(&self.p_coef, &ab)),
            &self.f_mul(&self.q_coef, &b2),
        )
    }

    pub fn g_inv(&self, z: &GElem) -> Result<GElem> {
        if z.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n_inv = self.f_inv(&self.g_norm(z))?;
        let bar = self.conj_bar(z);
        Ok(GElem { re: self.f_mul(&bar.re, &n_inv), im: self.f_mul(&bar.im, &n_inv) })
    }

    pub fn g_div(&self, a: &GElem, b: &GElem) -> Result<GElem> {
        Ok(self.g_mul(a, &self.g_inv(b)?))
    }

    /// ẑ = re − ξ·im.
    pub fn conj_hat(&self, z: &GElem) -> GElem {
        GElem { re: z.re.clone(), im: self.f_neg(&z.im) }
    }

    /// z̄ = re − (p + ξ)·im, the Galois conjugate.
    pub fn conj_bar(&self, z: &GElem) -> GElem {
        GElem {
            re: self.f_sub(&z.re, &self.f_mul(&self.p_coef, &z.im)),
            im: self.f_neg(&z.im),
        }
    }

    pub fn g_scale_f(&self, c: &FElem, z: &GElem) -> GElem {
        GElem { re: self.f_mul(c, &z.re), im: self.f_mul(c, &z.im) }
    }

    /// All elements of G in a fixed order (finite towers only).
    pub fn g_elems(&self) -> Result<Vec<GElem>> {
        let fs = self.f_elems()?;
        let mut out = Vec::with_capacity(fs.len() * fs.len());
        for re in &fs {
            for im in &fs {
                out.push(GElem { re: re.clone(), im: im.clone() });
            }
        }
        Ok(out)
    }

    // ---- printing ------------------------------------------------------

    pub fn f_to_string(&self, a: &FElem) -> String {
        match a {
            FElem::Fp(v) => v.to_string(),
            FElem::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
        }
    }

    /// Canonical element syntax: `a`, `x`, `b*x`, `a+b*x`, `a-b*x`.
    pub fn g_to_string(&self, z: &GElem) -> String {
        let re_s = self.f_to_string(&z.re);
        if z.im.is_zero() {
            return re_s;
        }
        let (im_abs, neg) = match &z.im {
            FElem::Rat(r) if r.is_negative() => (FElem::Rat(-r.clone()), true),
            other => (other.clone(), false),
        };
        let one = self.f_one();
        let im_part = if im_abs == one {
            "x".to_string()
        } else {
            format!("{}*x", self.f_to_string(&im_abs))
        };
        if z.re.is_zero() {
            if neg {
                format!("-{im_part}")
            } else {
                im_part
            }
        } else if neg {
            format!("{re_s}-{im_part}")
        } else {
            format!("{re_s}+{im_part}")
        }
    }

    // ---- parsing -------------------------------------------------------

    pub fn parse_f(&self, s: &str) -> Result<FElem> {
        let s = s.trim();
        let err = || Error::Parse { line: 0, msg: format!("bad field element: {s}") };
        match self.base {
            BaseField::Prime(_) => {
                let v: i64 = s.parse().map_err(|_| err())?;
                Ok(self.f_from_i64(v))
            }
            BaseField::Rationals => {
                if let Some((n, d)) = s.split_once('/') {
                    let n: BigInt = n.trim().parse().map_err(|_| err())?;
                    let d: BigInt = d.trim().parse().map_err(|_| err())?;
                    if d.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    Ok(FElem::Rat(BigRational::new(n, d)))
                } else {
                    let n: BigInt = s.parse().map_err(|_| err())?;
                    Ok(FElem::Rat(BigRational::from_integer(n)))
                }
            }
        }
    }

    /// Parse the element syntax `a`, `x`, `a+b*x`, `a-b*x` (and `b*x`, `-x`, `a+x`, `a-x`).
    pub fn parse_g(&self, s: &str) -> Result<GElem> {
        let s = s.trim();
        let err = || Error::Parse { line: 0, msg: format!("bad element: {s}") };
        if s.is_empty() {
            return Err(err());
        }
        // split at the last top-level '+' or '-' that is not a leading sign
        // and not inside a rational like 1/2 (no signs occur inside n/d here)
        let bytes = s.as_bytes();
        let mut split_at = None;
        for i in (1..bytes.len()).rev() {
            let c = bytes[i] as char;
            if (c == '+' || c == '-') && bytes[i - 1] as char != '/' && bytes[i - 1] as char != '*'
            {
                // exclude exponent-style or leading signs: previous char must not be a sign
                let prev = bytes[i - 1] as char;
                if prev != '+' && prev != '-' {
                    split_at = Some(i);
                    break;
                }
            }
        }
        let parse_im_term = |t: &str| -> Result<FElem> {
            let t = t.trim();
            if t == "x" {
                Ok(self.f_one())
            } else if let Some(coef) = t.strip_suffix("*x") {
                self.parse_f(coef)
            } else {
                Err(err())
            }
        };
        if s.contains('x') {
            match split_at {
                Some(i) if s[i..].contains('x') => {
                    let re = self.parse_f(&s[..i])?;
                    let sign = &s[i..i + 1];
                    let im_raw = parse_im_term(&s[i + 1..])?;
                    let im = if sign == "-" { self.f_neg(&im_raw) } else { im_raw };
                    Ok(GElem { re, im })
                }
                _ => {
                    // pure imaginary, possibly with a leading sign
                    let (neg, body) = match s.strip_prefix('-') {
                        Some(rest) => (true, rest),
                        None => (false, s.strip_prefix('+').unwrap_or(s)),
                    };
                    let im_raw = parse_im_term(body)?;
                    let im = if neg { self.f_neg(&im_raw) } else { im_raw };
                    Ok(GElem { re: self.f_zero(), im })
                }
            }
        } else {
            Ok(GElem { re: self.parse_f(s)?, im: self.f_zero() })
        }
    }
}

fn fp_val(e: &FElem) -> u64 {
    match e {
        FElem::Fp(v) => *v,
        FElem::Rat(_) => panic!("expected prime-field element"),
    }
}

fn rat_val(e: &FElem) -> BigRational {
    match e {
        FElem::Rat(r) => r.clone(),
        FElem::Fp(_) => panic!("expected rational element"),
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // extended Euclid; p prime, a ≠ 0 mod p
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "not invertible");
    t.rem_euclid(p as i128) as u64
}

// ---- G-matrices ---------------------------------------------------------

/// Dense matrix over G, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<GElem>,
}

impl GMat {
    pub fn zero(tower: &Tower, rows: usize, cols: usize) -> GMat {
        GMat { rows, cols, data: vec![tower.g_zero(); rows * cols] }
    }

    pub fn identity(tower: &Tower, n: usize) -> GMat {
        let mut m = GMat::zero(tower, n, n);
        for i in 0..n {
            m.set(i, i, tower.g_one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GElem>>) -> GMat {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c));
        GMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn at(&self, i: usize, j: usize) -> &GElem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GElem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn col(&self, j: usize) -> Vec<GElem> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn hstack(&self, other: &GMat) -> GMat {
        assert_eq!(self.rows, other.rows);
        let mut rows = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut row: Vec<GElem> = (0..self.cols).map(|j| self.at(i, j).clone()).collect();
            row.extend((0..other.cols).map(|j| other.at(i, j).clone()));
            rows.push(row);
        }
        GMat::from_rows(rows)
    }

    pub fn mul(&self, tower: &Tower, other: &GMat) -> GMat {
        assert_eq!(self.cols, other.rows);
        let mut out = GMat::zero(tower, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = tower.g_zero();
                for k in 0..self.cols {
                    acc = tower.g_add(&acc, &tower.g_mul(self.at(i, k), other.at(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(&GElem) -> GElem) -> GMat {
        GMat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Entry-wise Galois conjugate z̄.
    pub fn conj_bar(&self, tower: &Tower) -> GMat {
        self.map(|z| tower.conj_bar(z))
    }

    pub fn scale(&self, tower: &Tower, c: &GElem) -> GMat {
        self.map(|z| tower.g_mul(c, z))
    }

    pub fn add(&self, tower: &Tower, other: &GMat) -> GMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        GMat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| tower.g_add(a, b))
                .collect(),
        }
    }

    /// Rank over G by Gaussian elimination.
    pub fn rank(&self, tower: &Tower) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let pivot = (rank..m.rows).find(|&i| !m.at(i, col).is_zero());
            let Some(pi) = pivot else { continue };
            for j in 0..m.cols {
                let a = m.at(rank, j).clone();
                let b = m.at(pi, j).clone();
                m.set(rank, j, b);
                m.set(pi, j, a);
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
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }

    pub fn is_invertible(&self, tower: &Tower) -> bool {
        self.rows == self.cols && self.rank(tower) == self.rows
    }

    /// True when this is a companion-matrix shape: superdiagonal 1, arbitrary
    /// last row, zeros elsewhere.
    pub fn is_companion_shape(&self, tower: &Tower) -> bool {
        if self.rows != self.cols || self.rows == 0 {
            return false;
        }
        let n = self.rows;
        let one = tower.g_one();
        for i in 0..n - 1 {
            for j in 0..n {
                let e = self.at(i, j);
                if j == i + 1 {
                    if *e != one {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for GMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} G-matrix", self.rows, self.cols)
    }
}

// ---- companion matrices and monic enumeration ----------------------------

/// Companion (Frobenius) matrix of the monic polynomial with the given
/// low-to-high coefficients (a₀, …, a_{n−1}): superdiagonal 1, last row −aᵢ.
pub fn frobenius_companion(tower: &Tower, coeffs: &[GElem], f_only: bool) -> Result<GMat> {
    let n = coeffs.len();
    if n == 0 {
        return Err(Error::BadMatrix("degree-0 polynomial has no companion".into()));
    }
    if f_only {
        for c in coeffs {
            if !c.is_in_f() {
                return Err(Error::BadMatrix(format!(
                    "coefficient {} is not in F",
                    tower.g_to_string(c)
                )));
            }
        }
    }
    let mut m = GMat::zero(tower, n, n);
    for i in 0..n - 1 {
        m.set(i, i + 1, tower.g_one());
    }
    for (j, c) in coeffs.iter().enumerate() {
        m.set(n - 1, j, tower.g_neg(c));
    }
    Ok(m)
}

/// Scalar domain for monic-polynomial enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scalars {
    F,
    G,
}

/// All monic polynomials of the given degree over F or G of a finite tower,
/// as low-to-high coefficient tuples (excluding the leading 1), in a fixed
/// odometer order.
pub fn enumerate_monic(tower: &Tower, deg: usize, scalars: Scalars) -> Result<Vec<Vec<GElem>>> {
    let elems: Vec<GElem> = match scalars {
        Scalars::F => tower.f_elems()?.into_iter().map(|a| tower.g_from_f(a)).collect(),
        Scalars::G => tower.g_elems()?,
    };
    let mut out = Vec::new();
    let mut idx = vec![0usize; deg];
    loop {
        out.push(idx.iter().map(|&i| elems[i].clone()).collect());
        // odometer with the lowest coefficient fastest
        let mut k = 0;
        loop {
            if k == deg {
                return Ok(out);
            }
            idx[k] += 1;
            if idx[k] < elems.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Monic polynomial coefficient list is a prime power f = p(t)^k over a finite
/// base field (trial factorization; intended for small degrees).
pub fn is_prime_power_poly(tower: &Tower, coeffs: &[GElem], scalars: Scalars) -> Result<bool> {
    // polynomials over F or over G; represent over G uniformly
    let deg = coeffs.len();
    if deg == 0 {
        return Ok(false);
    }
    // collect all monic irreducibles of degree <= deg/1 and test divisibility
    let mut poly: Vec<GElem> = coeffs.to_vec();
    poly.push(tower.g_one());
    let mut factors = 0usize;
    let mut first: Option<Vec<GElem>> = None;
    for d in 1..=deg {
        for cand in enumerate_monic(tower, d, scalars)? {
            let mut c: Vec<GElem> = cand.clone();
            c.push(tower.g_one());
            if !poly_is_irreducible(tower, &c, scalars)? {
                continue;
            }
            loop {
                let (q, r) = poly_divrem(tower, &poly, &c);
                if r.iter().all(|z| z.is_zero()) {
                    match &first {
                        None => first = Some(c.clone()),
                        Some(f0) if *f0 != c => return Ok(false),
                        _ => {}
                    }
                    factors += 1;
                    poly = q;
                    if poly.len() == 1 {
                        return Ok(factors >= 1);
                    }
                } else {
                    break;
                }
            }
        }
    }
    Ok(poly.len() == 1 && factors >= 1)
}

fn poly_is_irreducible(tower: &Tower, poly: &[GElem], scalars: Scalars) -> Result<bool> {
    let deg = poly.len() - 1;
    if deg == 1 {
        return Ok(true);
    }
    for d in 1..=deg / 2 {
        for cand in enumerate_monic(tower, d, scalars)? {
            let mut c: Vec<GElem> = cand;
            c.push(tower.g_one());
            let (_, r) = poly_divrem(tower, poly, &c);
            if r.iter().all(|z| z.is_zero()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Division with remainder of polynomials over G (monic divisor not required,
/// leading coefficient must be invertible — always true over a field).
pub fn poly_divrem(tower: &Tower, num: &[GElem], den: &[GElem]) -> (Vec<GElem>, Vec<GElem>) {
    let dl = den.len();
    assert!(dl > 0 && !den[dl - 1].is_zero());
    let mut rem: Vec<GElem> = num.to_vec();
    if rem.len() < dl {
        return (vec![tower.g_zero()], rem);
    }
    let mut quot = vec![tower.g_zero(); rem.len() - dl + 1];
    let lead_inv = tower.g_inv(&den[dl - 1]).unwrap();
    for k in (0..quot.len()).rev() {
        let c = tower.g_mul(&rem[k + dl - 1], &lead_inv);
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for j in 0..dl {
            let sub = tower.g_mul(&c, &den[j]);
            rem[k + j] = tower.g_sub(&rem[k + j], &sub);
        }
    }
    rem.truncate(dl - 1);
    if rem.is_empty() {
        rem.push(tower.g_zero());
    }
    (quot, rem)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_towers() {
        let t = Tower::gf2();
        assert_eq!(t.char(), 2);
        assert!(t.duality_enabled());
        let q = Tower::qsqrt2();
        assert_eq!(q.char(), 0);
        assert!(q.duality_enabled());
    }

    #[test]
    fn reducible_polynomial_rejected() {
        // t² + 1 = (t+1)² mod 2
        let err = Tower::new(BaseField::Prime(2), FElem::Fp(0), FElem::Fp(1)).unwrap_err();
        assert_eq!(err, Error::ReduciblePolynomial { root: "1".into() });
        // t² − 4 over Q has root 2
        let q = Tower::new(
            BaseField::Rationals,
            FElem::Rat(BigRational::zero()),
            FElem::Rat(BigRational::from_integer(BigInt::from(-4))),
        );
        assert!(matches!(q, Err(Error::ReduciblePolynomial { .. })));
    }

    #[test]
    fn xi_squared_gf2() {
        // ξ² = ξ + 1 in the GF(2)-tower
        let t = Tower::gf2();
        let xi = t.xi();
        let sq = t.g_mul(&xi, &xi);
        assert_eq!(sq, t.g_from_i64(1, 1));
    }

    #[test]
    fn xi_satisfies_minimal_polynomial() {
        for t in [Tower::gf2(), Tower::qsqrt2(), Tower::gf3()] {
            let xi = t.xi();
            let sq = t.g_mul(&xi, &xi);
            let p_xi = t.g_scale_f(t.p_coef(), &xi);
            let q1 = t.g_from_f(t.q_coef().clone());
            let val = t.g_add(&t.g_add(&sq, &p_xi), &q1);
            assert!(val.is_zero());
        }
    }

    #[test]
    fn qsqrt2_product() {
        // (1+ξ)(1−ξ) = 1 − 2 = −1 over Q(√2)
        let t = Tower::qsqrt2();
        let a = t.g_from_i64(1, 1);
        let b = t.g_from_i64(1, -1);
        assert_eq!(t.g_mul(&a, &b), t.g_from_i64(-1, 0));
    }

    #[test]
    fn field_axioms_exhaustive_gf4() {
        let t = Tower::gf2();
        let elems = t.g_elems().unwrap();
        assert_eq!(elems.len(), 4);
        for a in &elems {
            assert_eq!(t.g_add(a, &t.g_zero()), *a);
            assert_eq!(t.g_mul(a, &t.g_one()), *a);
            if !a.is_zero() {
                let inv = t.g_inv(a).unwrap();
                assert_eq!(t.g_mul(a, &inv), t.g_one());
            }
            for b in &elems {
                assert_eq!(t.g_add(a, b), t.g_add(b, a));
                assert_eq!(t.g_mul(a, b), t.g_mul(b, a));
                for c in &elems {
                    let l = t.g_mul(a, &t.g_add(b, c));
                    let r = t.g_add(&t.g_mul(a, b), &t.g_mul(a, c));
                    assert_eq!(l, r);
                    assert_eq!(
                        t.g_mul(&t.g_mul(a, b), c),
                        t.g_mul(a, &t.g_mul(b, c))
                    );
                }
            }
        }
        assert!(t.g_inv(&t.g_zero()).is_err());
    }

    #[test]
    fn conjugates_examples() {
        let q = Tower::qsqrt2();
        let z = q.g_from_i64(3, 2);
        assert_eq!(q.conj_hat(&z), q.g_from_i64(3, -2));
        // z ∈ F: hat = bar = z
        let w = q.g_from_i64(5, 0);
        assert_eq!(q.conj_hat(&w), w);
        assert_eq!(q.conj_bar(&w), w);
        // GF(2)-tower, p = 1: bar(1+ξ) = 1 − (1+ξ) = ξ in char 2
        let t = Tower::gf2();
        let z = t.g_from_i64(1, 1);
        assert_eq!(t.conj_bar(&z), t.g_from_i64(0, 1));
    }

    #[test]
    fn hat_multiplicative_when_duality_enabled() {
        let t = Tower::gf2();
        for a in t.g_elems().unwrap() {
            assert_eq!(t.conj_hat(&t.conj_hat(&a)), a);
            for b in t.g_elems().unwrap() {
                let lhs = t.conj_hat(&t.g_mul(&a, &b));
                let rhs = t.g_mul(&t.conj_hat(&a), &t.conj_hat(&b));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn companion_matrices() {
        let t = Tower::gf2();
        // f(t) = t → [0]
        let m = frobenius_companion(&t, &[t.g_zero()], true).unwrap();
        assert_eq!((m.rows, m.cols), (1, 1));
        assert!(m.at(0, 0).is_zero());
        // f(t) = t² + 1 over GF(2) → [[0,1],[1,0]]  (−1 = 1 in char 2)
        let m = frobenius_companion(&t, &[t.g_one(), t.g_zero()], true).unwrap();
        assert_eq!(*m.at(0, 1), t.g_one());
        assert_eq!(*m.at(1, 0), t.g_one());
        assert!(m.at(0, 0).is_zero() && m.at(1, 1).is_zero());
        // f(t) = t² − ξ over G → [[0,1],[ξ,0]]
        let m =
            frobenius_companion(&t, &[t.g_neg(&t.xi()), t.g_zero()], false).unwrap();
        assert_eq!(*m.at(1, 0), t.xi());
        // F-only flag rejects ξ
        assert!(frobenius_companion(&t, &[t.xi()], true).is_err());
        // n = 0 rejected
        assert!(frobenius_companion(&t, &[], false).is_err());
    }

    #[test]
    fn monic_enumeration() {
        let t = Tower::gf2();
        let deg1_f = enumerate_monic(&t, 1, Scalars::F).unwrap();
        assert_eq!(deg1_f.len(), 2); // t, t+1
        assert!(deg1_f[0][0].is_zero());
        let deg1_g = enumerate_monic(&t, 1, Scalars::G).unwrap();
        assert_eq!(deg1_g.len(), 4);
        let deg2_f = enumerate_monic(&t, 2, Scalars::F).unwrap();
        assert_eq!(deg2_f.len(), 4);
        assert!(enumerate_monic(&Tower::qsqrt2(), 1, Scalars::F).is_err());
    }

    #[test]
    fn prime_power_detection() {
        let t = Tower::gf2();
        let one = t.g_one();
        let zero = t.g_zero();
        // t² = t·t
        assert!(is_prime_power_poly(&t, &[zero.clone(), zero.clone()], Scalars::F).unwrap());
        // t² + 1 = (t+1)²
        assert!(is_prime_power_poly(&t, &[one.clone(), zero.clone()], Scalars::F).unwrap());
        // t² + t + 1 irreducible
        assert!(is_prime_power_poly(&t, &[one.clone(), one.clone()], Scalars::F).unwrap());
        // t² + t = t(t+1) is not a prime power
        assert!(!is_prime_power_poly(&t, &[zero.clone(), one.clone()], Scalars::F).unwrap());
    }

    #[test]
    fn element_syntax_roundtrip() {
        let t = Tower::gf2();
        for z in t.g_elems().unwrap() {
            let s = t.g_to_string(&z);
            assert_eq!(t.parse_g(&s).unwrap(), z);
        }
        let q = Tower::qsqrt2();
        for (re, im) in [(0, 0), (1, 0), (0, 1), (3, 2), (-1, 2), (3, -2), (0, -1)] {
            let z = q.g_from_i64(re, im);
            let s = q.g_to_string(&z);
            assert_eq!(q.parse_g(&s).unwrap(), z, "roundtrip {s}");
        }
        // rationals with denominators
        let half = q.parse_g("1/2-3/4*x").unwrap();
        assert_eq!(q.g_to_string(&half), "1/2-3/4*x");
        assert_eq!(q.parse_g("x").unwrap(), q.xi());
        assert_eq!(q.parse_g("-x").unwrap(), q.g_neg(&q.xi()));
    }

    #[test]
    fn g_matrix_rank() {
        let t = Tower::gf2();
        let m = GMat::from_rows(vec![
            vec![t.g_one(), t.xi()],
            vec![t.xi(), t.g_mul(&t.xi(), &t.xi())],
        ]);
        assert_eq!(m.rank(&t), 1); // second row = ξ · first row
        assert!(GMat::identity(&t, 3).is_invertible(&t));
    }
}
