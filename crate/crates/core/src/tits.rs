//! The Tits quadratic form of a 2-equipped poset over P• = P ∪ {0},
//! its bilinear form and reflections, root enumeration by reflection
//! closure, and the vector classification used by the dimension theorem.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_rational::Ratio;

use crate::poset::{poset_iso, EquippedPoset};
use crate::{Error, Result};

/// Dimension vector (d₀; d_x : x ∈ P), point coordinates in poset order.
/// Coordinates may be negative during reflection arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DimVector {
    pub d0: i64,
    pub dx: Vec<i64>,
}

impl DimVector {
    pub fn new(d0: i64, dx: Vec<i64>) -> DimVector {
        DimVector { d0, dx }
    }

    pub fn zero(n: usize) -> DimVector {
        DimVector { d0: 0, dx: vec![0; n] }
    }

    /// Simple root e_x; index `None` means the 0 coordinate.
    pub fn simple(n: usize, x: Option<usize>) -> DimVector {
        let mut v = DimVector::zero(n);
        match x {
            None => v.d0 = 1,
            Some(i) => v.dx[i] = 1,
        }
        v
    }

    pub fn coords(&self) -> impl Iterator<Item = i64> + '_ {
        std::iter::once(self.d0).chain(self.dx.iter().copied())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coords().all(|c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coords().all(|c| c == 0)
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        DimVector {
            d0: self.d0 + other.d0,
            dx: self.dx.iter().zip(&other.dx).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &DimVector) -> DimVector {
        DimVector {
            d0: self.d0 - other.d0,
            dx: self.dx.iter().zip(&other.dx).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: i64) -> DimVector {
        DimVector { d0: self.d0 * c, dx: self.dx.iter().map(|a| a * c).collect() }
    }

    pub fn leq(&self, other: &DimVector) -> bool {
        self.d0 <= other.d0 && self.dx.iter().zip(&other.dx).all(|(a, b)| a <= b)
    }

    pub fn gcd(&self) -> i64 {
        fn g(a: i64, b: i64) -> i64 {
            if b == 0 {
                a.abs()
            } else {
                g(b, a % b)
            }
        }
        self.coords().fold(0, g)
    }

    /// Render in the CLI syntax `d0; a=1, b=2` (zero coordinates omitted).
    pub fn render(&self, poset: &EquippedPoset) -> String {
        let parts: Vec<String> = poset
            .point_ids()
            .iter()
            .zip(&self.dx)
            .filter(|(_, &v)| v != 0)
            .map(|(id, v)| format!("{id}={v}"))
            .collect();
        if parts.is_empty() {
            format!("{};", self.d0)
        } else {
            format!("{}; {}", self.d0, parts.join(", "))
        }
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.d0)?;
        for v in &self.dx {
            write!(f, ",{v}")?;
        }
        write!(f, ")")
    }
}

fn check_len(p: &EquippedPoset, d: &DimVector) -> Result<()> {
    if d.dx.len() != p.n() {
        return Err(Error::DimVectorMismatch { expected: p.n(), got: d.dx.len() });
    }
    Ok(())
}

/// l-coefficient of the form: 2 on x ⊲ y and on (0,0), 1 on x ≺ y, else 0.
fn l_coef(p: &EquippedPoset, i: usize, j: usize) -> i64 {
    if p.strong_rel(i, j) {
        2
    } else if p.leq(i, j) {
        1
    } else {
        0
    }
}

/// f(d) = Σ_{x,y ∈ P•} l_{xy} d_x d_y − 2 d₀ Σ_x d_x, with l supported on
/// ordered comparable pairs x ≤ y plus the (0,0) term.
pub fn tits_form(p: &EquippedPoset, d: &DimVector) -> Result<i64> {
    check_len(p, d)?;
    let mut f = 2 * d.d0 * d.d0;
    for i in 0..p.n() {
        for j in 0..p.n() {
            let l = if i == j {
                if p.is_strong_point(i) {
                    2
                } else {
                    1
                }
            } else {
                l_coef(p, i, j)
            };
            if l != 0 {
                f += l * d.dx[i] * d.dx[j];
            }
        }
    }
    let s: i64 = d.dx.iter().sum();
    f -= 2 * d.d0 * s;
    Ok(f)
}

/// Symmetric bilinear form ⟨x,y⟩ = ¼ [f(x+y) − f(x−y)].
pub fn bilinear(p: &EquippedPoset, a: &DimVector, b: &DimVector) -> Result<Ratio<i64>> {
    check_len(p, a)?;
    check_len(p, b)?;
    let plus = tits_form(p, &a.add(b))?;
    let minus = tits_form(p, &a.sub(b))?;
    Ok(Ratio::new(plus - minus, 4))
}

/// Index into P• used by reflections: `None` is the 0 coordinate.
pub type PointOrZero = Option<usize>;

fn l_xx(p: &EquippedPoset, x: PointOrZero) -> i64 {
    match x {
        None => 2,
        Some(i) => {
            if p.is_strong_point(i) {
                2
            } else {
                1
            }
        }
    }
}

/// Reflection ρ_x(d) = d − (2 / l_xx) ⟨d, e_x⟩ e_x; the result is checked
/// to be integral.
pub fn reflect(p: &EquippedPoset, x: PointOrZero, d: &DimVector) -> Result<DimVector> {
    check_len(p, d)?;
    let e = DimVector::simple(p.n(), x);
    let br = bilinear(p, d, &e)?;
    // coefficient 2·⟨d,e⟩ / l_xx as an exact rational
    let coef = br * Ratio::new(2, l_xx(p, x));
    if !coef.is_integer() {
        return Err(Error::NonIntegerReflection);
    }
    Ok(d.sub(&e.scale(coef.to_integer())))
}

/// BFS closure of the simple roots under all reflections inside the box
/// (|coordinate| bounded by the box entry), then filtered to non-negative
/// vectors with d₀ > 0.
pub fn enumerate_admissible_roots(p: &EquippedPoset, bounds: &DimVector) -> Result<BTreeSet<DimVector>> {
    check_len(p, bounds)?;
    let within = |d: &DimVector| {
        d.d0.abs() <= bounds.d0 && d.dx.iter().zip(&bounds.dx).all(|(a, b)| a.abs() <= *b)
    };
    let mut seen: BTreeSet<DimVector> = BTreeSet::new();
    let mut queue: VecDeque<DimVector> = VecDeque::new();
    let mut starts = vec![DimVector::simple(p.n(), None)];
    for i in 0..p.n() {
        starts.push(DimVector::simple(p.n(), Some(i)));
    }
    for s in starts {
        if within(&s) && seen.insert(s.clone()) {
            queue.push_back(s);
        }
    }
    while let Some(d) = queue.pop_front() {
        for x in std::iter::once(None).chain((0..p.n()).map(Some)) {
            let r = reflect(p, x, &d)?;
            if within(&r) && seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    Ok(seen
        .into_iter()
        .filter(|d| d.is_nonnegative() && d.d0 > 0)
        .collect())
}

/// Reachability of one target by reflections inside a box.
fn is_root_in_box(p: &EquippedPoset, target: &DimVector, bounds: &DimVector) -> Result<bool> {
    let within = |d: &DimVector| {
        d.d0.abs() <= bounds.d0 && d.dx.iter().zip(&bounds.dx).all(|(a, b)| a.abs() <= *b)
    };
    if !within(target) {
        return Ok(false);
    }
    let mut seen: BTreeSet<DimVector> = BTreeSet::new();
    let mut queue: VecDeque<DimVector> = VecDeque::new();
    let mut starts = vec![DimVector::simple(p.n(), None)];
    for i in 0..p.n() {
        starts.push(DimVector::simple(p.n(), Some(i)));
    }
    for s in starts {
        if s == *target {
            return Ok(true);
        }
        if within(&s) && seen.insert(s.clone()) {
            queue.push_back(s);
        }
    }
    while let Some(d) = queue.pop_front() {
        for x in std::iter::once(None).chain((0..p.n()).map(Some)) {
            let r = reflect(p, x, &d)?;
            if r == *target {
                return Ok(true);
            }
            if within(&r) && seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    Ok(false)
}

/// The componentwise-minimal positive vector in the box with f = 0 and
/// coprime coordinates, when it is unique.
pub fn minimal_imaginary_root(p: &EquippedPoset, bounds: &DimVector) -> Result<Option<DimVector>> {
    check_len(p, bounds)?;
    let mut candidates: Vec<DimVector> = Vec::new();
    let mut cur = DimVector::zero(p.n());
    // odometer over the box
    'outer: loop {
        if !cur.is_zero() && cur.gcd() == 1 && tits_form(p, &cur)? == 0 {
            candidates.push(cur.clone());
        }
        cur.d0 += 1;
        if cur.d0 > bounds.d0 {
            cur.d0 = 0;
            let mut k = 0;
            loop {
                if k == p.n() {
                    break 'outer;
                }
                cur.dx[k] += 1;
                if cur.dx[k] <= bounds.dx[k] {
                    break;
                }
                cur.dx[k] = 0;
                k += 1;
            }
        }
    }
    if candidates.is_empty() {
        return Ok(None);
    }
    // componentwise minima
    let minima: Vec<&DimVector> = candidates
        .iter()
        .filter(|c| !candidates.iter().any(|o| o != *c && o.leq(c)))
        .collect();
    if minima.len() == 1 && candidates.iter().all(|c| minima[0].leq(c)) {
        Ok(Some(minima[0].clone()))
    } else {
        let list = minima.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" ");
        Err(Error::AmbiguousMinimalRoot { candidates: list })
    }
}

/// Default probe box when the caller gives no explicit one.
fn default_mu_box(_p: &EquippedPoset, hint: &DimVector) -> DimVector {
    DimVector {
        d0: hint.d0.max(6),
        dx: hint.dx.iter().map(|&v| v.max(6)).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootClass {
    AdmissibleRoot,
    ImaginaryRoot,
    SpecialListed { poset_id: String, k: i64 },
    Other,
}

impl fmt::Display for RootClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootClass::AdmissibleRoot => write!(f, "AdmissibleRoot"),
            RootClass::ImaginaryRoot => write!(f, "ImaginaryRoot"),
            RootClass::SpecialListed { poset_id, k } => {
                write!(f, "SpecialListed({poset_id},k={k})")
            }
            RootClass::Other => write!(f, "Other"),
        }
    }
}

/// Classify a non-negative vector. Imaginary roots are zeros of the form;
/// the special-listed class is data-driven from the special-poset parametric
/// families; admissible roots are reflection-reachable inside the automatic
/// box 2(d + μ) with d₀ > 0.
pub fn classify_vector(p: &EquippedPoset, d: &DimVector) -> Result<RootClass> {
    check_len(p, d)?;
    if d.is_zero() {
        return Ok(RootClass::Other);
    }
    if tits_form(p, d)? == 0 {
        return Ok(RootClass::ImaginaryRoot);
    }
    if let Some((id, k)) = special_family_match(p, d)? {
        return Ok(RootClass::SpecialListed { poset_id: id, k });
    }
    let mu = minimal_imaginary_root(p, &default_mu_box(p, d)).unwrap_or(None);
    let bounds = match &mu {
        Some(m) => d.add(m).scale(2),
        None => d.scale(2).add(&DimVector { d0: 2, dx: vec![2; p.n()] }),
    };
    if d.d0 > 0 && is_root_in_box(p, d, &bounds)? {
        return Ok(RootClass::AdmissibleRoot);
    }
    Ok(RootClass::Other)
}

/// Match d against the special-poset families of A45–A48 when P is
/// isomorphic or antiisomorphic to one of them.
fn special_family_match(p: &EquippedPoset, d: &DimVector) -> Result<Option<(String, i64)>> {
    if p.n() > crate::poset::ISO_SIZE_BOUND {
        return Ok(None);
    }
    for id in ["A45", "A46", "A47", "A48"] {
        let cand = crate::catalog::catalog_poset(id)?;
        if cand.n() != p.n() {
            continue;
        }
        for anti in [false, true] {
            let reference = if anti { cand.dual() } else { cand.clone() };
            let Some(map) = poset_iso(&reference, p, false)? else { continue };
            // family vector on the catalog poset, translated through the map
            for k in 1..=64 {
                let (fam, _f) = crate::catalog::sincere_dims(id, k)?;
                if fam.d0 > d.d0 && fam.dx.iter().sum::<i64>() > d.dx.iter().sum::<i64>() {
                    break;
                }
                let mut translated = DimVector::zero(p.n());
                translated.d0 = fam.d0;
                for (ci, &pi) in map.iter().enumerate() {
                    translated.dx[pi] = fam.dx[ci];
                }
                if translated == *d {
                    return Ok(Some((id.to_string(), k)));
                }
            }
        }
    }
    Ok(None)
}

/// d and d′ are of the same type when their difference is a non-negative
/// integer multiple of the minimal imaginary root.
pub fn same_type(p: &EquippedPoset, d: &DimVector, d2: &DimVector) -> Result<bool> {
    check_len(p, d)?;
    check_len(p, d2)?;
    let hint = DimVector {
        d0: d.d0.max(d2.d0),
        dx: d.dx.iter().zip(&d2.dx).map(|(a, b)| *a.max(b)).collect(),
    };
    let mu = minimal_imaginary_root(p, &default_mu_box(p, &hint))?
        .ok_or(Error::NoImaginaryRoot)?;
    let check = |diff: DimVector| -> bool {
        if diff.is_zero() {
            return true;
        }
        if !diff.is_nonnegative() {
            return false;
        }
        // diff = t·μ for a positive integer t
        let t = if mu.d0 != 0 {
            diff.d0 / mu.d0
        } else {
            match mu.dx.iter().position(|&v| v != 0) {
                Some(i) => diff.dx[i] / mu.dx[i],
                None => return false,
            }
        };
        t > 0 && mu.scale(t) == diff
    };
    Ok(check(d.sub(d2)) || check(d2.sub(d)))
}
