//! Permutation arithmetic on {1..n}.
//!
//! Conventions: points are 1-based; products are executed right to left,
//! so `compose(p, q)` maps i to p(q(i)) (q acts first). The statistics a
//! permutation carries through the counting arguments are `m` (number of
//! moved points), `c` (number of cycles of length at least 2 in the
//! disjoint cycle decomposition), and the per-length cycle counts.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use rand::Rng;
use thiserror::Error;

/// Errors from permutation construction and cycle-notation parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("images {0:?} are not a bijection of 1..={1}")]
    NotBijection(Vec<usize>, usize),
    #[error("point {0} out of range 1..={1}")]
    PointOutOfRange(usize, usize),
    #[error("repeated point {0}: cycle input must be in disjoint form")]
    RepeatedPoint(usize),
    #[error("a cycle needs at least 2 distinct points, got {0}")]
    CycleTooShort(usize),
    #[error("malformed cycle notation: {0}")]
    Malformed(String),
}

/// A permutation of {1..n}, stored by its image sequence: entry i-1 is σ(i).
///
/// Immutable value type; all operations return fresh permutations.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// The identity on {1..n}.
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (1..=degree).collect(),
        }
    }

    /// Builds from an image sequence (`images[i-1]` = σ(i)), checking that
    /// it is a bijection of {1..n}.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x < 1 || x > n || seen[x - 1] {
                return Err(PermError::NotBijection(images.clone(), n));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// Product of the given cycles, applied right to left, embedded in S_n.
    /// The cycles need not be disjoint.
    pub fn from_cycles(factors: &[Cycle], degree: usize) -> Result<Self, PermError> {
        let mut p = Permutation::identity(degree);
        for c in factors.iter().rev() {
            p = c.to_permutation(degree)?.compose(&p);
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// σ(i) for a 1-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// The composition mapping i to self(other(i)): `other` acts first.
    ///
    /// Panics if the degrees differ; callers normalize degrees up front.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.degree(),
            other.degree(),
            "compose requires equal degrees"
        );
        Permutation {
            images: other.images.iter().map(|&x| self.images[x - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - 1] = i + 1;
        }
        Permutation { images }
    }

    /// The moved points, ascending.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.degree()).filter(|&i| self.apply(i) != i).collect()
    }

    /// Disjoint cycle decomposition with fixed points omitted, ordered by
    /// smallest point; each cycle is in canonical rotation.
    pub fn dcd_star(&self) -> Vec<Cycle> {
        let n = self.degree();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut pts = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                pts.push(x);
                seen[x] = true;
                x = self.apply(x);
            }
            cycles.push(Cycle::new(pts).expect("orbit of length >= 2"));
        }
        cycles
    }

    /// Support size m, cycle count c, and per-length counts.
    pub fn stats(&self) -> PermStats {
        let mut counts = BTreeMap::new();
        let mut m = 0;
        let mut c = 0;
        for cyc in self.dcd_star() {
            m += cyc.len();
            c += 1;
            *counts.entry(cyc.len()).or_insert(0) += 1;
        }
        PermStats { m, c, counts }
    }

    /// The cycle type (conjugacy-class label): lengths of dcd_star parts,
    /// non-increasing, with the ambient degree.
    pub fn cycle_type(&self) -> CycleType {
        let mut parts: Vec<usize> = self.dcd_star().iter().map(|c| c.len()).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType {
            parts,
            degree: self.degree(),
        }
    }

    /// True iff σ is even, by the parity criterion m + c ≡ 0 (mod 2).
    pub fn is_even(&self) -> bool {
        let s = self.stats();
        (s.m + s.c) % 2 == 0
    }

    /// Uniformly random permutation of {1..n} (Fisher-Yates).
    pub fn random<R: Rng + ?Sized>(degree: usize, rng: &mut R) -> Permutation {
        let mut images: Vec<usize> = (1..=degree).collect();
        for i in (1..degree).rev() {
            let j = rng.gen_range(0..=i);
            images.swap(i, j);
        }
        Permutation { images }
    }

    /// Uniformly random even permutation: sample, then fix parity by one
    /// transposition on the right if needed (degree ≥ 2).
    pub fn random_even<R: Rng + ?Sized>(degree: usize, rng: &mut R) -> Permutation {
        assert!(degree >= 2, "no room to fix parity below degree 2");
        let mut p = Permutation::random(degree, rng);
        if !p.is_even() {
            p.images.swap(0, 1);
        }
        p
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_cycles(self))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {{1..{}}}", format_cycles(self), self.degree())
    }
}

/// A single cyclic permutation given by its orbit: at least 2 distinct
/// points, stored in canonical rotation (smallest point first) so that
/// equality and ordering are well defined.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    points: Vec<usize>,
}

impl Cycle {
    /// Builds a cycle, rotating the orbit so its smallest point is first.
    pub fn new(points: Vec<usize>) -> Result<Self, PermError> {
        if points.len() < 2 {
            return Err(PermError::CycleTooShort(points.len()));
        }
        let mut sorted = points.clone();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(PermError::RepeatedPoint(w[0]));
            }
        }
        if sorted[0] == 0 {
            return Err(PermError::PointOutOfRange(0, usize::MAX));
        }
        let min_pos = points
            .iter()
            .position(|&p| p == sorted[0])
            .expect("min is present");
        let mut rotated = points;
        rotated.rotate_left(min_pos);
        Ok(Cycle { points: rotated })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a cycle has at least 2 points by construction
    }

    pub fn points(&self) -> &[usize] {
        &self.points
    }

    pub fn min_point(&self) -> usize {
        self.points[0]
    }

    pub fn max_point(&self) -> usize {
        *self.points.iter().max().expect("nonempty")
    }

    /// The inverse cycle (orbit traversed backwards).
    pub fn inverse(&self) -> Cycle {
        let mut pts = self.points.clone();
        pts[1..].reverse();
        Cycle { points: pts }
    }

    /// Where this cycle sends i (i itself if i is not on the cycle).
    pub fn apply(&self, i: usize) -> usize {
        match self.points.iter().position(|&p| p == i) {
            Some(pos) => self.points[(pos + 1) % self.points.len()],
            None => i,
        }
    }

    /// Embeds the cycle in S_n.
    pub fn to_permutation(&self, degree: usize) -> Result<Permutation, PermError> {
        if self.max_point() > degree {
            return Err(PermError::PointOutOfRange(self.max_point(), degree));
        }
        let mut images: Vec<usize> = (1..=degree).collect();
        for w in 0..self.points.len() {
            images[self.points[w] - 1] = self.points[(w + 1) % self.points.len()];
        }
        Ok(Permutation { images })
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.points.iter().join(" "))
    }
}

impl fmt::Debug for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The multiset of cycle lengths ≥ 2 of a permutation together with the
/// ambient degree; the identity has empty parts. Ordering is derived
/// (parts, then degree), which makes sets of types deterministic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType {
    parts: Vec<usize>,
    degree: usize,
}

impl CycleType {
    /// Builds a type from parts in any order; parts are sorted
    /// non-increasing and must be ≥ 2 and fit inside the degree.
    pub fn new(mut parts: Vec<usize>, degree: usize) -> Result<Self, PermError> {
        if let Some(&bad) = parts.iter().find(|&&p| p < 2) {
            return Err(PermError::CycleTooShort(bad));
        }
        let m: usize = parts.iter().sum();
        if m > degree {
            return Err(PermError::PointOutOfRange(m, degree));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType { parts, degree })
    }

    pub fn identity(degree: usize) -> Self {
        CycleType {
            parts: Vec::new(),
            degree,
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Support size m = Σ parts.
    pub fn m(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Cycle count c = number of parts.
    pub fn c(&self) -> usize {
        self.parts.len()
    }

    pub fn is_even(&self) -> bool {
        (self.m() + self.c()) % 2 == 0
    }

    /// Per-length multiplicities n_i.
    pub fn counts(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for &p in &self.parts {
            *counts.entry(p).or_insert(0) += 1;
        }
        counts
    }

    /// Compact part notation without the degree: "5.3.2", or "id".
    pub fn parts_string(&self) -> String {
        if self.parts.is_empty() {
            "id".to_string()
        } else {
            self.parts.iter().join(".")
        }
    }

    /// The canonical representative: points assigned left to right from 1
    /// in decreasing part order, e.g. parts [3,2] in S₆ → (1 2 3)(4 5).
    pub fn representative(&self) -> Permutation {
        let mut factors = Vec::new();
        let mut next = 1;
        for &p in &self.parts {
            factors.push(Cycle::new((next..next + p).collect()).expect("part >= 2"));
            next += p;
        }
        Permutation::from_cycles(&factors, self.degree).expect("parts fit the degree")
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[n={}]", self.parts_string(), self.degree)
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The statistics of a permutation: m = |support|, c = number of cycles in
/// dcd_star, counts = per-length multiplicities. Always Σ nᵢ = c and
/// Σ i·nᵢ = m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermStats {
    pub m: usize,
    pub c: usize,
    pub counts: BTreeMap<usize, usize>,
}

impl PermStats {
    /// The count n_i of cycles of length exactly i.
    pub fn count_of(&self, len: usize) -> usize {
        self.counts.get(&len).copied().unwrap_or(0)
    }
}

/// Composition as a free function: maps i to p(q(i)) (q acts first).
pub fn compose(p: &Permutation, q: &Permutation) -> Permutation {
    p.compose(q)
}

/// Parses whitespace-tolerant cycle notation like "(1 2 3)(4 5)".
///
/// "()" is the identity. The input must be in disjoint form: a repeated
/// point is an error. With `degree: None` the degree is the maximal label
/// (1 for the bare identity); an explicit degree must contain all labels.
pub fn parse_cycles(text: &str, degree: Option<usize>) -> Result<Permutation, PermError> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut current: Option<Vec<usize>> = None;
    let mut num: Option<usize> = None;
    let mut seen = BTreeSet::new();

    let flush_num = |num: &mut Option<usize>,
                     current: &mut Option<Vec<usize>>,
                     seen: &mut BTreeSet<usize>|
     -> Result<(), PermError> {
        if let Some(v) = num.take() {
            if v == 0 {
                return Err(PermError::PointOutOfRange(0, degree.unwrap_or(0)));
            }
            if !seen.insert(v) {
                return Err(PermError::RepeatedPoint(v));
            }
            current
                .as_mut()
                .expect("digits only occur inside parentheses")
                .push(v);
        }
        Ok(())
    };

    for ch in text.chars() {
        match ch {
            '(' => {
                if current.is_some() {
                    return Err(PermError::Malformed("nested '('".into()));
                }
                current = Some(Vec::new());
            }
            ')' => {
                if current.is_none() {
                    return Err(PermError::Malformed("unmatched ')'".into()));
                }
                flush_num(&mut num, &mut current, &mut seen)?;
                let cyc = current.take().expect("checked above");
                if cyc.len() == 1 {
                    return Err(PermError::CycleTooShort(1));
                }
                if !cyc.is_empty() {
                    cycles.push(cyc);
                }
            }
            '0'..='9' => {
                if current.is_none() {
                    return Err(PermError::Malformed(format!("digit '{ch}' outside '()'")));
                }
                num = Some(num.unwrap_or(0) * 10 + (ch as usize - '0' as usize));
            }
            c if c.is_whitespace() || c == ',' => {
                if current.is_some() {
                    flush_num(&mut num, &mut current, &mut seen)?;
                }
            }
            other => {
                return Err(PermError::Malformed(format!("unexpected '{other}'")));
            }
        }
    }
    if current.is_some() {
        return Err(PermError::Malformed("unterminated '('".into()));
    }
    if cycles.is_empty() && !text.contains('(') {
        return Err(PermError::Malformed("no cycles found; identity is \"()\"".into()));
    }

    let max_label = seen.iter().next_back().copied().unwrap_or(1);
    let n = match degree {
        Some(n) => {
            if max_label > n {
                return Err(PermError::PointOutOfRange(max_label, n));
            }
            n
        }
        None => max_label,
    };
    let factors: Vec<Cycle> = cycles
        .into_iter()
        .map(Cycle::new)
        .collect::<Result<_, _>>()?;
    Permutation::from_cycles(&factors, n)
}

/// Formats a permutation in canonical cycle notation; the identity is "()".
pub fn format_cycles(p: &Permutation) -> String {
    let cycles = p.dcd_star();
    if cycles.is_empty() {
        return "()".to_string();
    }
    cycles.iter().map(|c| c.to_string()).collect()
}

/// The number of orbits T of the group generated by the given cycles on the
/// ambient point set: connected components of the supports, plus one orbit
/// per untouched ambient point.
///
/// Panics if a cycle uses a point outside the ambient set.
pub fn orbit_count(cycles: &[Cycle], ambient: &BTreeSet<usize>) -> usize {
    let index: BTreeMap<usize, usize> = ambient.iter().copied().zip(0..).collect();
    let mut parent: Vec<usize> = (0..ambient.len()).collect();

    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }

    for cyc in cycles {
        let first = *index
            .get(&cyc.points()[0])
            .unwrap_or_else(|| panic!("cycle point {} outside ambient set", cyc.points()[0]));
        for &p in &cyc.points()[1..] {
            let other = *index
                .get(&p)
                .unwrap_or_else(|| panic!("cycle point {p} outside ambient set"));
            let (a, b) = (find(&mut parent, first), find(&mut parent, other));
            parent[a] = b;
        }
    }
    (0..ambient.len())
        .filter(|&x| find(&mut parent, x) == x)
        .count()
}

/// Orbit count on the full point set {1..degree}.
pub fn orbit_count_on_degree(cycles: &[Cycle], degree: usize) -> usize {
    orbit_count(cycles, &(1..=degree).collect())
}

/// All cycle types of S_n (partitions into parts ≥ 2 with sum ≤ n, plus the
/// identity type), in a fixed deterministic order.
pub fn all_cycle_types(degree: usize) -> Vec<CycleType> {
    fn rec(
        remaining: usize,
        max_part: usize,
        current: &mut Vec<usize>,
        degree: usize,
        out: &mut Vec<CycleType>,
    ) {
        for p in (2..=remaining.min(max_part)).rev() {
            current.push(p);
            out.push(CycleType::new(current.clone(), degree).expect("parts fit"));
            rec(remaining - p, p, current, degree, out);
            current.pop();
        }
    }
    let mut out = vec![CycleType::identity(degree)];
    rec(degree, degree, &mut Vec::new(), degree, &mut out);
    out
}

/// The cycle types of even permutations of S_n (the conjugacy-class labels
/// of A_n as a subset of S_n).
pub fn all_even_cycle_types(degree: usize) -> Vec<CycleType> {
    all_cycle_types(degree)
        .into_iter()
        .filter(|t| t.is_even())
        .collect()
}

/// All l-cycles of S_n in a fixed deterministic order: supports in
/// lexicographic order, then arrangements with the smallest point first in
/// lexicographic order of the remaining points.
pub fn all_cycles_of_length(n: usize, l: usize) -> Vec<Cycle> {
    assert!(l >= 2, "cycles have length at least 2");
    if l > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    for support in (1..=n).combinations(l) {
        let first = support[0];
        let rest = &support[1..];
        for tail in rest.iter().copied().permutations(rest.len()) {
            let mut pts = Vec::with_capacity(l);
            pts.push(first);
            pts.extend(tail);
            out.push(Cycle { points: pts });
        }
    }
    out
}
