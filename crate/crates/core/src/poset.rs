//! 2-equipped posets: ordinary finite posets carrying a strong sub-relation
//! ⊲ ⊆ ≤ closed under x ≤ y ⊲ z and x ⊲ y ≤ z, with the weak relation
//! ≺ = ≤ ∖ ⊲. Construction closes generators and validates the law;
//! structural predicates, brute-force isomorphism, critical-subposet
//! detection and the one-parameter decision live here.

use std::fmt;
use std::sync::OnceLock;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointKind {
    Weak,
    Strong,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelKind {
    Weak,
    Strong,
}

/// A finite 2-equipped poset with closed relations. Equality is structural
/// (points and relations); the name is presentation only.
#[derive(Debug, Clone)]
pub struct EquippedPoset {
    name: String,
    points: Vec<String>,
    leq: Vec<bool>,    // n×n, reflexive transitive antisymmetric
    strong: Vec<bool>, // n×n, strong ⊆ leq, closed under Eq. (1)
}

impl EquippedPoset {
    /// Close and validate generators. Relations are strict (x < y); the
    /// self-relation of each point comes from its declared kind.
    pub fn build(
        name: &str,
        points: &[(&str, PointKind)],
        gens: &[(&str, &str, RelKind)],
    ) -> Result<EquippedPoset> {
        let n = points.len();
        let ids: Vec<String> = points.iter().map(|(id, _)| id.to_string()).collect();
        for (i, id) in ids.iter().enumerate() {
            if ids[..i].contains(id) {
                return Err(Error::Parse { line: 0, msg: format!("duplicate point {id}") });
            }
        }
        let idx = |id: &str| -> Result<usize> {
            ids.iter().position(|p| p == id).ok_or_else(|| Error::UnknownPoint(id.to_string()))
        };
        let mut leq = vec![false; n * n];
        let mut strong = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
            if points[i].1 == PointKind::Strong {
                strong[i * n + i] = true;
            }
        }
        for (x, y, kind) in gens {
            let (i, j) = (idx(x)?, idx(y)?);
            if i == j {
                return Err(Error::Parse { line: 0, msg: format!("self relation {x} < {x}") });
            }
            leq[i * n + j] = true;
            if *kind == RelKind::Strong {
                strong[i * n + j] = true;
            }
        }
        // transitive closure
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        // acyclicity
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i * n + j] && leq[j * n + i] {
                    return Err(Error::PosetCycle {
                        witness: format!("{} <= {} <= {}", ids[i], ids[j], ids[i]),
                    });
                }
            }
        }
        // strength fixpoint of Eq. (1)
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..n {
                for k in 0..n {
                    for j in 0..n {
                        if !strong[i * n + j]
                            && ((leq[i * n + k] && strong[k * n + j])
                                || (strong[i * n + k] && leq[k * n + j]))
                        {
                            strong[i * n + j] = true;
                            changed = true;
                        }
                    }
                }
            }
        }
        // validation: declared-weak generators must stay weak, declared-weak
        // points must not acquire a strong self-relation
        for (x, y, kind) in gens {
            let (i, j) = (idx(x)?, idx(y)?);
            if *kind == RelKind::Weak && strong[i * n + j] {
                return Err(Error::WeakForcedStrong { witness: format!("{x} < {y}") });
            }
        }
        for (i, (id, kind)) in points.iter().enumerate() {
            if *kind == PointKind::Weak && strong[i * n + i] {
                return Err(Error::WeakForcedStrong { witness: format!("{id} < {id}") });
            }
        }
        Ok(EquippedPoset { name: name.to_string(), points: ids, leq, strong })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> EquippedPoset {
        self.name = name.to_string();
        self
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn point_ids(&self) -> &[String] {
        &self.points
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.points
            .iter()
            .position(|p| p == id)
            .ok_or_else(|| Error::UnknownPoint(id.to_string()))
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.n() + j]
    }

    pub fn strong_rel(&self, i: usize, j: usize) -> bool {
        self.strong[i * self.n() + j]
    }

    pub fn weak_rel(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) && !self.strong_rel(i, j)
    }

    pub fn is_strong_point(&self, i: usize) -> bool {
        self.strong_rel(i, i)
    }

    pub fn is_weak_point(&self, i: usize) -> bool {
        !self.is_strong_point(i)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// ≤-weight: 1 for strong points, 2 for weak points.
    pub fn point_weight(&self, i: usize) -> u32 {
        if self.is_weak_point(i) {
            2
        } else {
            1
        }
    }

    /// Weight of an antichain, or of the whole poset (max over antichains).
    pub fn weight(&self, antichain: Option<&[usize]>) -> Result<u32> {
        match antichain {
            Some(x) => {
                for (a, &i) in x.iter().enumerate() {
                    for &j in &x[a + 1..] {
                        if self.comparable(i, j) {
                            return Err(Error::NotAntichain);
                        }
                    }
                }
                Ok(x.iter().map(|&i| self.point_weight(i)).sum())
            }
            None => {
                // branch over points, keeping only antichains
                fn go(p: &EquippedPoset, from: usize, picked: &mut Vec<usize>, best: &mut u32) {
                    let cur: u32 = picked.iter().map(|&i| p.point_weight(i)).sum();
                    *best = (*best).max(cur);
                    for i in from..p.n() {
                        if picked.iter().all(|&j| !p.comparable(i, j)) {
                            picked.push(i);
                            go(p, i + 1, picked, best);
                            picked.pop();
                        }
                    }
                }
                let mut best = 0;
                go(self, 0, &mut Vec::new(), &mut best);
                Ok(best)
            }
        }
    }

    /// N(X): points incomparable to every point of X.
    pub fn n_set(&self, x: &[usize]) -> Vec<usize> {
        (0..self.n())
            .filter(|&a| x.iter().all(|&p| !self.comparable(a, p)))
            .collect()
    }

    pub fn cone(&self, x: &[usize], kind: ConeKind) -> Vec<usize> {
        let base: Vec<usize> = (0..self.n())
            .filter(|&y| {
                x.iter().any(|&p| match kind {
                    ConeKind::UpLeq | ConeKind::UpStrict => self.leq(p, y),
                    ConeKind::UpStrong => self.strong_rel(p, y),
                    ConeKind::UpWeak => self.weak_rel(p, y),
                    ConeKind::DownLeq | ConeKind::DownStrict => self.leq(y, p),
                    ConeKind::DownStrong => self.strong_rel(y, p),
                    ConeKind::DownWeak => self.weak_rel(y, p),
                })
            })
            .collect();
        match kind {
            ConeKind::UpStrict | ConeKind::DownStrict => {
                base.into_iter().filter(|y| !x.contains(y)).collect()
            }
            _ => base,
        }
    }

    pub fn maximal_points(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&i| (0..self.n()).all(|j| j == i || !self.leq(i, j)))
            .collect()
    }

    pub fn minimal_points(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&i| (0..self.n()).all(|j| j == i || !self.leq(j, i)))
            .collect()
    }

    /// Full subposet induced on the given points (kept in the given order).
    pub fn induced(&self, subset: &[usize]) -> EquippedPoset {
        let m = subset.len();
        let mut leq = vec![false; m * m];
        let mut strong = vec![false; m * m];
        for (a, &i) in subset.iter().enumerate() {
            for (b, &j) in subset.iter().enumerate() {
                leq[a * m + b] = self.leq(i, j);
                strong[a * m + b] = self.strong_rel(i, j);
            }
        }
        EquippedPoset {
            name: format!("{}|sub", self.name),
            points: subset.iter().map(|&i| self.points[i].clone()).collect(),
            leq,
            strong,
        }
    }

    /// The dual 2-equipped poset: ≤ and ⊲ reversed.
    pub fn dual(&self) -> EquippedPoset {
        let n = self.n();
        let mut leq = vec![false; n * n];
        let mut strong = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = self.leq(j, i);
                strong[i * n + j] = self.strong_rel(j, i);
            }
        }
        EquippedPoset {
            name: format!("{}*", self.name),
            points: self.points.clone(),
            leq,
            strong,
        }
    }

    pub fn structure_predicates(&self, x: &[usize]) -> StructureFlags {
        let pairs = |f: &dyn Fn(usize, usize) -> bool| {
            x.iter().enumerate().all(|(a, &i)| x[a + 1..].iter().all(|&j| f(i, j)))
        };
        let chain = pairs(&|i, j| self.comparable(i, j));
        let antichain = pairs(&|i, j| !self.comparable(i, j));
        let all_weak_pts = x.iter().all(|&i| self.is_weak_point(i));
        let all_strong_pts = x.iter().all(|&i| self.is_strong_point(i));
        let rels_weak = x.iter().all(|&i| {
            x.iter().all(|&j| i == j || !self.leq(i, j) || self.weak_rel(i, j))
        });
        StructureFlags {
            chain,
            antichain,
            dyad: antichain && x.len() == 2,
            triad: antichain && x.len() == 3,
            garland: self.is_garland(x),
            completely_weak: all_weak_pts && rels_weak,
            ordinary: all_strong_pts,
        }
    }

    /// Ordinal sum of singletons and dyads.
    fn is_garland(&self, x: &[usize]) -> bool {
        let mut rest: Vec<usize> = x.to_vec();
        while !rest.is_empty() {
            let minimal: Vec<usize> = rest
                .iter()
                .copied()
                .filter(|&i| rest.iter().all(|&j| j == i || !self.leq(j, i)))
                .collect();
            if minimal.len() > 2 || minimal.is_empty() {
                return false;
            }
            if minimal.len() == 2 && self.comparable(minimal[0], minimal[1]) {
                return false;
            }
            // ordinal-sum condition: block below everything that remains
            for &b in &minimal {
                for &r in &rest {
                    if !minimal.contains(&r) && !self.leq(b, r) {
                        return false;
                    }
                }
            }
            rest.retain(|i| !minimal.contains(i));
        }
        true
    }
}

impl PartialEq for EquippedPoset {
    fn eq(&self, other: &Self) -> bool {
        self.points == other.points && self.leq == other.leq && self.strong == other.strong
    }
}

impl Eq for EquippedPoset {}

impl fmt::Display for EquippedPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "poset {} ({} points)", self.name, self.n())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConeKind {
    UpLeq,      // X^∨
    UpStrong,   // X^▽
    UpWeak,     // X^⋎
    DownLeq,    // X_∧
    DownStrong, // X_△
    DownWeak,   // X_⋏
    UpStrict,   // X^▼ = X^∨ ∖ X
    DownStrict, // X_▲ = X_∧ ∖ X
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureFlags {
    pub chain: bool,
    pub antichain: bool,
    pub dyad: bool,
    pub triad: bool,
    pub garland: bool,
    pub completely_weak: bool,
    pub ordinary: bool,
}

// ---- isomorphism ----------------------------------------------------------

pub const ISO_SIZE_BOUND: usize = 12;

/// Bijection preserving ≤ and ⊲ (reversing both when `anti`), if one exists.
/// Brute force with signature pruning; sizes above 12 are rejected.
pub fn poset_iso(p: &EquippedPoset, q: &EquippedPoset, anti: bool) -> Result<Option<Vec<usize>>> {
    if p.n() > ISO_SIZE_BOUND || q.n() > ISO_SIZE_BOUND {
        return Err(Error::SizeBound { size: p.n().max(q.n()), bound: ISO_SIZE_BOUND });
    }
    if p.n() != q.n() {
        return Ok(None);
    }
    let target = if anti { q.dual() } else { q.clone() };
    let n = p.n();
    let sig = |poset: &EquippedPoset, i: usize| -> (bool, usize, usize, usize, usize) {
        let up = (0..n).filter(|&j| j != i && poset.leq(i, j)).count();
        let down = (0..n).filter(|&j| j != i && poset.leq(j, i)).count();
        let sup = (0..n).filter(|&j| j != i && poset.strong_rel(i, j)).count();
        let sdown = (0..n).filter(|&j| j != i && poset.strong_rel(j, i)).count();
        (poset.is_weak_point(i), up, down, sup, sdown)
    };
    let psig: Vec<_> = (0..n).map(|i| sig(p, i)).collect();
    let qsig: Vec<_> = (0..n).map(|i| sig(&target, i)).collect();
    {
        let mut a = psig.clone();
        let mut b = qsig.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Ok(None);
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn backtrack(
        p: &EquippedPoset,
        q: &EquippedPoset,
        psig: &[(bool, usize, usize, usize, usize)],
        qsig: &[(bool, usize, usize, usize, usize)],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        i: usize,
    ) -> bool {
        let n = p.n();
        if i == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] || psig[i] != qsig[cand] {
                continue;
            }
            let ok = (0..i).all(|j| {
                p.leq(i, j) == q.leq(cand, map[j])
                    && p.leq(j, i) == q.leq(map[j], cand)
                    && p.strong_rel(i, j) == q.strong_rel(cand, map[j])
                    && p.strong_rel(j, i) == q.strong_rel(map[j], cand)
            });
            if ok {
                map[i] = cand;
                used[cand] = true;
                if backtrack(p, q, psig, qsig, map, used, i + 1) {
                    return true;
                }
                used[cand] = false;
                map[i] = usize::MAX;
            }
        }
        false
    }
    if backtrack(p, &target, &psig, &qsig, &mut map, &mut used, 0) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

// ---- critical subposets and the one-parameter decision ---------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CriticalId {
    K1,
    K2,
    K3,
    K4,
    K5,
    K6,
    K7,
    K8,
    K9,
}

impl CriticalId {
    pub const ALL: [CriticalId; 9] = [
        CriticalId::K1,
        CriticalId::K2,
        CriticalId::K3,
        CriticalId::K4,
        CriticalId::K5,
        CriticalId::K6,
        CriticalId::K7,
        CriticalId::K8,
        CriticalId::K9,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CriticalId::K1 => "K1",
            CriticalId::K2 => "K2",
            CriticalId::K3 => "K3",
            CriticalId::K4 => "K4",
            CriticalId::K5 => "K5",
            CriticalId::K6 => "K6",
            CriticalId::K7 => "K7",
            CriticalId::K8 => "K8",
            CriticalId::K9 => "K9",
        }
    }
}

fn chain(prefix: &str, len: usize) -> (Vec<(String, PointKind)>, Vec<(String, String, RelKind)>) {
    let pts: Vec<(String, PointKind)> =
        (0..len).map(|i| (format!("{prefix}{i}"), PointKind::Strong)).collect();
    let rels = (0..len.saturating_sub(1))
        .map(|i| (format!("{prefix}{i}"), format!("{prefix}{}", i + 1), RelKind::Strong))
        .collect();
    (pts, rels)
}

fn build_owned(
    name: &str,
    pts: Vec<(String, PointKind)>,
    rels: Vec<(String, String, RelKind)>,
) -> EquippedPoset {
    let pref: Vec<(&str, PointKind)> = pts.iter().map(|(s, k)| (s.as_str(), *k)).collect();
    let rref: Vec<(&str, &str, RelKind)> =
        rels.iter().map(|(a, b, k)| (a.as_str(), b.as_str(), *k)).collect();
    EquippedPoset::build(name, &pref, &rref).expect("critical poset data is valid")
}

/// The nine critical 2-equipped posets of the one-parameter criterion.
/// K1–K5 are Kleiner's ordinary criticals (all points strong):
/// (1,1,1,1), (2,2,2), (1,3,3), (1,2,5), (N,4).
pub fn critical_poset(id: CriticalId) -> &'static EquippedPoset {
    static CACHE: OnceLock<Vec<EquippedPoset>> = OnceLock::new();
    let all = CACHE.get_or_init(|| {
        let mut out = Vec::new();
        // K1 = (1,1,1,1)
        out.push(build_owned(
            "K1",
            (0..4).map(|i| (format!("s{i}"), PointKind::Strong)).collect(),
            Vec::new(),
        ));
        // K2 = (2,2,2)
        {
            let mut pts = Vec::new();
            let mut rels = Vec::new();
            for c in ["a", "b", "c"] {
                let (p, r) = chain(c, 2);
                pts.extend(p);
                rels.extend(r);
            }
            out.push(build_owned("K2", pts, rels));
        }
        // K3 = (1,3,3)
        {
            let mut pts = vec![("s".to_string(), PointKind::Strong)];
            let mut rels = Vec::new();
            for c in ["a", "b"] {
                let (p, r) = chain(c, 3);
                pts.extend(p);
                rels.extend(r);
            }
            out.push(build_owned("K3", pts, rels));
        }
        // K4 = (1,2,5)
        {
            let mut pts = vec![("s".to_string(), PointKind::Strong)];
            let mut rels = Vec::new();
            let (p, r) = chain("a", 2);
            pts.extend(p);
            rels.extend(r);
            let (p, r) = chain("b", 5);
            pts.extend(p);
            rels.extend(r);
            out.push(build_owned("K4", pts, rels));
        }
        // K5 = (N,4)
        {
            let mut pts: Vec<(String, PointKind)> = ["n1", "n2", "n3", "n4"]
                .iter()
                .map(|s| (s.to_string(), PointKind::Strong))
                .collect();
            let mut rels = vec![
                ("n1".to_string(), "n3".to_string(), RelKind::Strong),
                ("n2".to_string(), "n3".to_string(), RelKind::Strong),
                ("n2".to_string(), "n4".to_string(), RelKind::Strong),
            ];
            let (p, r) = chain("c", 4);
            pts.extend(p);
            rels.extend(r);
            out.push(build_owned("K5", pts, rels));
        }
        // K6 = {a; b} weak dyad
        out.push(build_owned(
            "K6",
            vec![("a".into(), PointKind::Weak), ("b".into(), PointKind::Weak)],
            Vec::new(),
        ));
        // K7 = {a ≺ p ≺ q, a ≺ q; θ}
        out.push(build_owned(
            "K7",
            vec![
                ("a".into(), PointKind::Weak),
                ("p".into(), PointKind::Weak),
                ("q".into(), PointKind::Weak),
                ("theta".into(), PointKind::Strong),
            ],
            vec![
                ("a".into(), "p".into(), RelKind::Weak),
                ("p".into(), "q".into(), RelKind::Weak),
                ("a".into(), "q".into(), RelKind::Weak),
            ],
        ));
        // K8 = {ϱ; σ; a}
        out.push(build_owned(
            "K8",
            vec![
                ("rho".into(), PointKind::Strong),
                ("sigma".into(), PointKind::Strong),
                ("a".into(), PointKind::Weak),
            ],
            Vec::new(),
        ));
        // K9 = {a ≺ p; ζ ⊲ η}
        out.push(build_owned(
            "K9",
            vec![
                ("a".into(), PointKind::Weak),
                ("p".into(), PointKind::Weak),
                ("zeta".into(), PointKind::Strong),
                ("eta".into(), PointKind::Strong),
            ],
            vec![
                ("a".into(), "p".into(), RelKind::Weak),
                ("zeta".into(), "eta".into(), RelKind::Strong),
            ],
        ));
        out
    });
    &all[CriticalId::ALL.iter().position(|c| *c == id).unwrap()]
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    go(n, k, 0, &mut cur, &mut out);
    out
}

/// Every full subposet of P isomorphic to a critical, with its point set.
pub fn critical_occurrences(p: &EquippedPoset) -> Vec<(CriticalId, Vec<usize>)> {
    let mut out = Vec::new();
    for id in CriticalId::ALL {
        let pattern = critical_poset(id);
        let k = pattern.n();
        if k > p.n() {
            continue;
        }
        for subset in combinations(p.n(), k) {
            let sub = p.induced(&subset);
            if poset_iso(&sub, pattern, false).unwrap().is_some() {
                out.push((id, subset));
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OneParamStatus {
    OneParameter,
    FiniteTypeCandidate,
    NotOneParameter(usize),
    Undetermined,
}

impl fmt::Display for OneParamStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OneParamStatus::OneParameter => write!(f, "OneParameter"),
            OneParamStatus::FiniteTypeCandidate => write!(f, "FiniteTypeCandidate"),
            OneParamStatus::NotOneParameter(n) => write!(f, "NotOneParameter({n})"),
            OneParamStatus::Undetermined => write!(f, "Undetermined"),
        }
    }
}

/// Theorem-A decision. Two or more critical occurrences always exclude the
/// one-parameter case; with at most one occurrence the weight hypothesis
/// w(P) ≤ 4 gates the positive answers.
pub fn one_parameter_criterion(p: &EquippedPoset) -> OneParamStatus {
    let occ = critical_occurrences(p);
    if occ.len() >= 2 {
        return OneParamStatus::NotOneParameter(occ.len());
    }
    if p.weight(None).unwrap_or(0) > 4 {
        return OneParamStatus::Undetermined;
    }
    if occ.len() == 1 {
        OneParamStatus::OneParameter
    } else {
        OneParamStatus::FiniteTypeCandidate
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsoKind {
    Iso,
    Anti,
}

/// Identify P among the 28 sincere one-parameter posets, up to
/// isomorphism or antiisomorphism.
pub fn sincere_class(p: &EquippedPoset) -> Result<Option<(String, IsoKind)>> {
    if p.n() > ISO_SIZE_BOUND {
        return Ok(None);
    }
    for id in crate::catalog::SINCERE_IDS {
        let cand = crate::catalog::catalog_poset(id)?;
        if poset_iso(p, &cand, false)?.is_some() {
            return Ok(Some((id.to_string(), IsoKind::Iso)));
        }
        if poset_iso(p, &cand, true)?.is_some() {
            return Ok(Some((id.to_string(), IsoKind::Anti)));
        }
    }
    Ok(None)
}

/// Disjoint union, for tests and reports on non-one-parameter inputs.
pub fn disjoint_union(a: &EquippedPoset, b: &EquippedPoset) -> EquippedPoset {
    let n = a.n() + b.n();
    let mut points: Vec<String> = a.points.iter().map(|s| format!("l.{s}")).collect();
    points.extend(b.points.iter().map(|s| format!("r.{s}")));
    let mut leq = vec![false; n * n];
    let mut strong = vec![false; n * n];
    for i in 0..a.n() {
        for j in 0..a.n() {
            leq[i * n + j] = a.leq(i, j);
            strong[i * n + j] = a.strong_rel(i, j);
        }
    }
    for i in 0..b.n() {
        for j in 0..b.n() {
            leq[(a.n() + i) * n + (a.n() + j)] = b.leq(i, j);
            strong[(a.n() + i) * n + (a.n() + j)] = b.strong_rel(i, j);
        }
    }
    EquippedPoset { name: format!("{}+{}", a.name, b.name), points, leq, strong }
}
