//! Ground-truth oracle: which cycle types arise as products of k l-cycles.
//!
//! A product of conjugacy classes is invariant under conjugation, so whether
//! σ is a product of k l-cycles in S_n depends only on the cycle type of σ.
//! The oracle exploits this: it runs breadth-first search at cycle-type
//! granularity, where level i+1 is obtained by multiplying one canonical
//! representative of each type in level i by every l-cycle of S_n. The level
//! sets are exact, which makes the oracle a decision procedure at desk
//! scale, an n(k,l) recomputation by degree scan, and a witness extractor by
//! backward peeling. Everything here is deliberately brute force; the
//! closed formulas in [`crate::bounds`] are tested against it.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::path::PathBuf;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::{
    all_cycle_types, all_cycles_of_length, all_even_cycle_types, Cycle, CycleType, Permutation,
};

/// Degrees above this are refused unless the caller raises the ceiling.
pub const DEFAULT_CEILING: usize = 16;

/// Elementwise enumeration is limited to S_n for n up to this.
pub const FULL_ENUM_MAX: usize = 7;

/// Version tag written into cache files; bump on any format change.
pub const CACHE_SCHEMA: &str = "cycle-products/reachable-types/v1";

/// Environment variable naming the cache directory.
pub const CACHE_ENV_VAR: &str = "NKL_ORACLE_CACHE";

/// Resource limits and cache location for oracle queries.
#[derive(Debug, Clone)]
pub struct OracleConfig {
    /// Largest degree the oracle will touch.
    pub ceiling: usize,
    /// Directory for (n,l)-keyed level-set cache files; `None` disables
    /// file caching (the in-memory cache is always on).
    pub cache_dir: Option<PathBuf>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            ceiling: DEFAULT_CEILING,
            cache_dir: std::env::var_os(CACHE_ENV_VAR).map(PathBuf::from),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(
        "degree {n} exceeds the oracle ceiling {ceiling} ({estimate}); raise the ceiling to proceed"
    )]
    ResourceGuard {
        n: usize,
        ceiling: usize,
        estimate: String,
    },
    #[error("need 2 <= l <= n, got l={l}, n={n}")]
    BadLength { l: usize, n: usize },
    #[error("need k >= 1, got {0}")]
    BadK(usize),
    #[error("k={k} odd with l={l} even: every product of k l-cycles is odd")]
    ParityInfeasible { k: usize, l: usize },
    #[error("{sigma} has type {t}, which is not a product of {k} {l}-cycles in S_{n}")]
    NotAMember {
        sigma: String,
        t: String,
        k: usize,
        l: usize,
        n: usize,
    },
    #[error("full enumeration is limited to n <= {max}, got n={n}")]
    EnumerationTooLarge { n: usize, max: usize },
}

/// The BFS result for one (n, l): `level(i)` is the exact set of cycle
/// types expressible as a product of i l-cycles in S_n, for i up to the
/// computed depth. Level 0 is the identity type alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachableTypes {
    n: usize,
    l: usize,
    levels: Vec<BTreeSet<CycleType>>,
}

impl ReachableTypes {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// The deepest computed level index.
    pub fn k_computed(&self) -> usize {
        self.levels.len() - 1
    }

    /// The exact set of types reachable with i factors.
    pub fn level(&self, i: usize) -> &BTreeSet<CycleType> {
        &self.levels[i]
    }

    /// True iff the type is a product of k l-cycles.
    pub fn contains(&self, t: &CycleType, k: usize) -> bool {
        self.levels[k].contains(t)
    }

    /// True iff every even cycle type of S_n is reachable with k factors,
    /// i.e. the k-fold class product covers A_n.
    pub fn covers_alternating(&self, k: usize) -> bool {
        all_even_cycle_types(self.n)
            .iter()
            .all(|t| self.levels[k].contains(t))
    }
}

/// One JSON-lines record of the oracle table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TypeRecord {
    pub n: usize,
    pub l: usize,
    pub k: usize,
    #[serde(rename = "type")]
    pub cycle_type: String,
    pub member: bool,
}

/// Outcome of a degree scan for n(k,l).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NklScan {
    /// The largest covering degree; a strictly larger degree was checked
    /// and found non-covering.
    Largest(usize),
    /// Coverage still holds at the scan ceiling, so the scan cannot bound
    /// n(k,l) from above.
    UnboundedAtCeiling(usize),
    /// No degree in the scanned range is covered.
    NoneCovered,
}

fn work_estimate(n: usize, l: usize) -> String {
    let mut cycles = 1.0_f64;
    for i in 0..l {
        cycles *= (n - i) as f64;
    }
    cycles /= l as f64; // n!/(n-l)!/l = C(n,l)·(l-1)!
    let table_mib = cycles * n as f64 * 8.0 / (1024.0 * 1024.0);
    format!(
        "about {cycles:.2e} {l}-cycles per type per level, {table_mib:.1} MiB cycle table"
    )
}

fn mem_cache() -> &'static Mutex<HashMap<(usize, usize), Arc<ReachableTypes>>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Arc<ReachableTypes>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Cycle type of the composition rep∘c (c acts first), without building the
/// intermediate permutation. `seen` is caller-provided scratch.
fn product_parts(rep: &Permutation, c: &Permutation, seen: &mut Vec<bool>) -> Vec<usize> {
    let n = rep.degree();
    seen.clear();
    seen.resize(n + 1, false);
    let mut parts = Vec::new();
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        loop {
            seen[x] = true;
            len += 1;
            x = rep.apply(c.apply(x));
            if x == start {
                break;
            }
        }
        if len >= 2 {
            parts.push(len);
        }
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// Extends `levels` in place until it holds indices 0..=k.
fn extend_levels(n: usize, l: usize, levels: &mut Vec<BTreeSet<CycleType>>, k: usize) {
    if levels.is_empty() {
        levels.push(BTreeSet::from([CycleType::identity(n)]));
    }
    let mut cycle_perms: Option<Vec<Permutation>> = None;
    while levels.len() <= k {
        let i = levels.len();
        // The level sequence is eventually periodic with period 2 (a pair
        // c∘c⁻¹ can always be appended); once one period repeats, copy.
        if i >= 3 && levels[i - 1] == levels[i - 3] {
            let copy = levels[i - 2].clone();
            levels.push(copy);
            continue;
        }
        let cycles = cycle_perms.get_or_insert_with(|| {
            all_cycles_of_length(n, l)
                .iter()
                .map(|c| c.to_permutation(n).expect("cycle fits degree"))
                .collect()
        });
        let prev: Vec<&CycleType> = levels[i - 1].iter().collect();
        let next = prev
            .par_iter()
            .map(|t| {
                let rep = t.representative();
                let mut seen = Vec::new();
                let mut set = BTreeSet::new();
                for c in cycles.iter() {
                    let parts = product_parts(&rep, c, &mut seen);
                    set.insert(CycleType::new(parts, n).expect("product fits degree"));
                }
                set
            })
            .reduce(BTreeSet::new, |mut a, b| {
                a.extend(b);
                a
            });
        levels.push(next);
    }
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    schema: String,
    n: usize,
    l: usize,
    levels: Vec<Vec<Vec<usize>>>,
}

fn cache_path(dir: &std::path::Path, n: usize, l: usize) -> PathBuf {
    dir.join(format!("reachable-n{n}-l{l}.json"))
}

fn load_cache_file(dir: &std::path::Path, n: usize, l: usize) -> Option<Vec<BTreeSet<CycleType>>> {
    let text = std::fs::read_to_string(cache_path(dir, n, l)).ok()?;
    let file: CacheFile = serde_json::from_str(&text).ok()?;
    if file.schema != CACHE_SCHEMA || file.n != n || file.l != l {
        return None;
    }
    let mut levels = Vec::with_capacity(file.levels.len());
    for level in file.levels {
        let mut set = BTreeSet::new();
        for parts in level {
            set.insert(CycleType::new(parts, n).ok()?);
        }
        levels.push(set);
    }
    if levels.is_empty() {
        return None;
    }
    Some(levels)
}

fn store_cache_file(dir: &std::path::Path, rt: &ReachableTypes) {
    let file = CacheFile {
        schema: CACHE_SCHEMA.to_string(),
        n: rt.n,
        l: rt.l,
        levels: rt
            .levels
            .iter()
            .map(|set| set.iter().map(|t| t.parts().to_vec()).collect())
            .collect(),
    };
    // Caching is best effort: failures fall back on recomputation.
    if std::fs::create_dir_all(dir).is_ok() {
        if let Ok(text) = serde_json::to_string(&file) {
            let _ = std::fs::write(cache_path(dir, rt.n, rt.l), text);
        }
    }
}

/// Computes the exact level sets for (n, l) up to k factors.
///
/// Levels are cached in memory per (n, l) and extended on demand; with a
/// cache directory configured they are also persisted.
pub fn class_power_types(
    n: usize,
    l: usize,
    k: usize,
    config: &OracleConfig,
) -> Result<Arc<ReachableTypes>, OracleError> {
    if l < 2 || l > n {
        return Err(OracleError::BadLength { l, n });
    }
    if k < 1 {
        return Err(OracleError::BadK(k));
    }
    if n > config.ceiling {
        return Err(OracleError::ResourceGuard {
            n,
            ceiling: config.ceiling,
            estimate: work_estimate(n, l),
        });
    }

    let mut cache = mem_cache().lock().expect("oracle cache poisoned");
    if let Some(rt) = cache.get(&(n, l)) {
        if rt.k_computed() >= k {
            let rt = Arc::clone(rt);
            drop(cache);
            // A memory hit still persists to a configured cache directory
            // so that the file is available to later processes.
            if let Some(dir) = config.cache_dir.as_deref() {
                if !cache_path(dir, n, l).exists() {
                    store_cache_file(dir, &rt);
                }
            }
            return Ok(rt);
        }
    }
    let mut levels = match cache.get(&(n, l)) {
        Some(rt) => rt.levels.clone(),
        None => config
            .cache_dir
            .as_deref()
            .and_then(|dir| load_cache_file(dir, n, l))
            .unwrap_or_default(),
    };
    extend_levels(n, l, &mut levels, k);
    let rt = Arc::new(ReachableTypes { n, l, levels });
    cache.insert((n, l), Arc::clone(&rt));
    drop(cache);
    if let Some(dir) = config.cache_dir.as_deref() {
        store_cache_file(dir, &rt);
    }
    Ok(rt)
}

/// True iff σ is a product of k l-cycles in S_n (n = degree of σ), by type
/// lookup in the exact level sets.
pub fn is_member_oracle(
    sigma: &Permutation,
    k: usize,
    l: usize,
    config: &OracleConfig,
) -> Result<bool, OracleError> {
    let rt = class_power_types(sigma.degree(), l, k, config)?;
    Ok(rt.contains(&sigma.cycle_type(), k))
}

/// The oracle table for (n, l, k): one record per cycle type of S_n.
pub fn table_records(rt: &ReachableTypes, k: usize) -> Vec<TypeRecord> {
    all_cycle_types(rt.n())
        .iter()
        .map(|t| TypeRecord {
            n: rt.n(),
            l: rt.l(),
            k,
            cycle_type: t.parts_string(),
            member: rt.contains(t, k),
        })
        .collect()
}

/// Recomputes n(k,l) by scanning degrees l..=n_ceiling and reporting the
/// largest degree whose alternating group is fully covered by k-fold
/// products of l-cycles.
pub fn brute_nkl(
    k: usize,
    l: usize,
    n_ceiling: usize,
    config: &OracleConfig,
) -> Result<NklScan, OracleError> {
    if k < 1 {
        return Err(OracleError::BadK(k));
    }
    if k % 2 == 1 && l % 2 == 0 {
        return Err(OracleError::ParityInfeasible { k, l });
    }
    let mut last_covered = None;
    for n in l..=n_ceiling {
        let rt = class_power_types(n, l, k, config)?;
        if rt.covers_alternating(k) {
            last_covered = Some(n);
        }
    }
    Ok(match last_covered {
        Some(n) if n == n_ceiling => NklScan::UnboundedAtCeiling(n_ceiling),
        Some(n) => NklScan::Largest(n),
        None => NklScan::NoneCovered,
    })
}

/// Extracts an explicit witness [C₁,…,C_k] with C₁∘⋯∘C_k = σ (right to
/// left) by peeling: at each step, take the first l-cycle c in the fixed
/// enumeration order such that c⁻¹∘residual is reachable with one fewer
/// factor. Candidates whose support meets the residual's support are tried
/// first (disjoint factors can be postponed), which keeps the search fast
/// without losing completeness; the order stays deterministic.
pub fn peel_witness(
    sigma: &Permutation,
    k: usize,
    l: usize,
    config: &OracleConfig,
) -> Result<Vec<Cycle>, OracleError> {
    let n = sigma.degree();
    let rt = class_power_types(n, l, k, config)?;
    if !rt.contains(&sigma.cycle_type(), k) {
        return Err(OracleError::NotAMember {
            sigma: sigma.to_string(),
            t: sigma.cycle_type().parts_string(),
            k,
            l,
            n,
        });
    }

    let candidates: Vec<(Cycle, Permutation)> = all_cycles_of_length(n, l)
        .into_iter()
        .map(|c| {
            let inv = c
                .inverse()
                .to_permutation(n)
                .expect("cycle fits degree");
            (c, inv)
        })
        .collect();

    let mut residual = sigma.clone();
    let mut factors = Vec::with_capacity(k);
    for remaining in (1..=k).rev() {
        let mut moved = vec![false; n + 1];
        for p in residual.support() {
            moved[p] = true;
        }
        let is_id = residual.is_identity();
        let mut chosen = None;
        for phase in 0..2 {
            for (c, inv) in &candidates {
                let intersects = c.points().iter().any(|&p| moved[p]);
                // Phase 0: candidates meeting the residual's support
                // (skipped entirely for the identity residual).
                if !is_id && ((phase == 0) != intersects) {
                    continue;
                }
                let next = inv.compose(&residual);
                if rt.contains(&next.cycle_type(), remaining - 1) {
                    chosen = Some((c.clone(), next));
                    break;
                }
            }
            if chosen.is_some() || is_id {
                break;
            }
        }
        let (c, next) = chosen.expect("level sets are exact, a factor must exist");
        factors.push(c);
        residual = next;
    }
    debug_assert!(residual.is_identity());
    let product = Permutation::from_cycles(&factors, n).expect("factors fit degree");
    assert_eq!(&product, sigma, "peel produced an invalid witness");
    Ok(factors)
}

/// Recomputes the level sets by enumerating all products of up to k
/// l-cycles elementwise (no class shortcut) and checks that the type sets
/// agree with `class_power_types` at every level. Returns true on
/// agreement.
pub fn full_enumeration_check(
    n: usize,
    l: usize,
    k: usize,
    config: &OracleConfig,
) -> Result<bool, OracleError> {
    if n > FULL_ENUM_MAX {
        return Err(OracleError::EnumerationTooLarge {
            n,
            max: FULL_ENUM_MAX,
        });
    }
    let rt = class_power_types(n, l, k, config)?;
    let cycles: Vec<Permutation> = all_cycles_of_length(n, l)
        .iter()
        .map(|c| c.to_permutation(n).expect("cycle fits degree"))
        .collect();
    let mut level: HashSet<Permutation> = HashSet::from([Permutation::identity(n)]);
    for i in 1..=k {
        let mut next = HashSet::with_capacity(level.len() * cycles.len() / 2);
        for p in &level {
            for c in &cycles {
                next.insert(c.compose(p));
            }
        }
        level = next;
        let types: BTreeSet<CycleType> = level.iter().map(|p| p.cycle_type()).collect();
        if &types != rt.level(i) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

    fn cfg() -> OracleConfig {
        OracleConfig {
            ceiling: DEFAULT_CEILING,
            cache_dir: None,
        }
    }

    fn t(parts: &[usize], n: usize) -> CycleType {
        CycleType::new(parts.to_vec(), n).unwrap()
    }

    #[test]
    fn two_transpositions_reach_all_of_a4() {
        let rt = class_power_types(4, 2, 2, &cfg()).unwrap();
        let expected: BTreeSet<CycleType> =
            [t(&[], 4), t(&[2, 2], 4), t(&[3], 4)].into_iter().collect();
        assert_eq!(rt.level(2), &expected);
        assert!(rt.covers_alternating(2));
    }

    #[test]
    fn two_five_cycles_cover_a5() {
        let rt = class_power_types(5, 5, 2, &cfg()).unwrap();
        assert!(rt.covers_alternating(2));
        let expected: BTreeSet<CycleType> = [t(&[], 5), t(&[2, 2], 5), t(&[3], 5), t(&[5], 5)]
            .into_iter()
            .collect();
        assert_eq!(rt.level(2), &expected);
    }

    #[test]
    fn four_transpositions_escape_two_five_cycles_in_s8() {
        let rt = class_power_types(8, 5, 2, &cfg()).unwrap();
        assert!(!rt.contains(&t(&[2, 2, 2, 2], 8), 2));
        let sigma = parse_cycles("(1 2)(3 4)(5 6)(7 8)", Some(8)).unwrap();
        assert_eq!(is_member_oracle(&sigma, 2, 5, &cfg()).unwrap(), false);
    }

    #[test]
    fn level_one_is_the_l_cycle_type_alone() {
        let rt = class_power_types(6, 4, 3, &cfg()).unwrap();
        let expected: BTreeSet<CycleType> = [t(&[4], 6)].into_iter().collect();
        assert_eq!(rt.level(1), &expected);
        assert_eq!(rt.level(0).len(), 1);
    }

    #[test]
    fn identity_membership_by_parity() {
        let id6 = Permutation::identity(6);
        assert!(is_member_oracle(&id6, 2, 5, &cfg()).unwrap());
        assert!(is_member_oracle(&id6, 4, 3, &cfg()).unwrap());
        // k=3, l odd: c·c·c⁻² works since c⁻² is again an l-cycle.
        assert!(is_member_oracle(&id6, 3, 5, &cfg()).unwrap());
        // k=3, l even: parity forbids it.
        assert!(!is_member_oracle(&id6, 3, 4, &cfg()).unwrap());
    }

    #[test]
    fn parity_law_holds_on_every_level() {
        for (n, l, k) in [(6, 3, 4), (6, 4, 3), (7, 2, 5), (7, 5, 3)] {
            let rt = class_power_types(n, l, k, &cfg()).unwrap();
            for i in 1..=k {
                let even_expected = (i * (l - 1)) % 2 == 0;
                for ty in rt.level(i) {
                    assert_eq!(ty.is_even(), even_expected, "level {i} of (n={n}, l={l})");
                }
            }
        }
    }

    #[test]
    fn monotonicity_in_k() {
        // l odd: one more factor never loses a type; any l: two more never do.
        for (n, l, k) in [(7, 3, 3), (7, 5, 3), (6, 5, 2)] {
            let rt = class_power_types(n, l, k + 2, &cfg()).unwrap();
            assert!(rt.level(k).is_subset(rt.level(k + 1)), "(n={n}, l={l})");
            assert!(rt.level(k).is_subset(rt.level(k + 2)), "(n={n}, l={l})");
        }
        for (n, l, k) in [(6, 4, 2), (8, 2, 3)] {
            let rt = class_power_types(n, l, k + 2, &cfg()).unwrap();
            assert!(rt.level(k).is_subset(rt.level(k + 2)), "(n={n}, l={l})");
        }
    }

    #[test]
    fn lengthening_containments_on_the_desk_grid() {
        // k even: level_k(n,l) ⊆ level_k(n,l+1) for 2 ≤ l ≤ n−1.
        for l in 2..=5 {
            let a = class_power_types(6, l, 2, &cfg()).unwrap();
            let b = class_power_types(6, l + 1, 2, &cfg()).unwrap();
            assert!(a.level(2).is_subset(b.level(2)), "l={l}");
        }
        // k odd: level_k(n,l) ⊆ level_k(n,l+2) for 2 ≤ l ≤ n−2.
        for l in 2..=5 {
            let a = class_power_types(7, l, 3, &cfg()).unwrap();
            let b = class_power_types(7, l + 2, 3, &cfg()).unwrap();
            assert!(a.level(3).is_subset(b.level(3)), "l={l}");
        }
    }

    #[test]
    fn brute_scan_matches_known_thresholds() {
        assert_eq!(brute_nkl(2, 2, 8, &cfg()).unwrap(), NklScan::Largest(4));
        assert_eq!(brute_nkl(2, 5, 10, &cfg()).unwrap(), NklScan::Largest(7));
        assert_eq!(brute_nkl(4, 3, 12, &cfg()).unwrap(), NklScan::Largest(9));
    }

    #[test]
    fn brute_scan_edge_outcomes() {
        assert_eq!(
            brute_nkl(2, 2, 4, &cfg()).unwrap(),
            NklScan::UnboundedAtCeiling(4)
        );
        // A single l-cycle never covers: the identity is missing.
        assert_eq!(brute_nkl(1, 3, 5, &cfg()).unwrap(), NklScan::NoneCovered);
        assert_eq!(
            brute_nkl(3, 4, 8, &cfg()),
            Err(OracleError::ParityInfeasible { k: 3, l: 4 })
        );
    }

    #[test]
    fn peel_recovers_validated_witnesses() {
        // The frozen factor lists are this oracle's deterministic output;
        // each is verified against the target by direct composition here.
        let sigma = parse_cycles("(1 2 3)(4 5 6)", Some(6)).unwrap();
        let w = peel_witness(&sigma, 2, 5, &cfg()).unwrap();
        assert_eq!(Permutation::from_cycles(&w, 6).unwrap(), sigma);
        assert!(w.iter().all(|c| c.len() == 5));
        assert_eq!(
            w,
            vec![
                Cycle::new(vec![1, 2, 4, 3, 5]).unwrap(),
                Cycle::new(vec![2, 4, 3, 5, 6]).unwrap(),
            ]
        );

        let sigma = parse_cycles("(1 2 3)", Some(7)).unwrap();
        let w = peel_witness(&sigma, 2, 5, &cfg()).unwrap();
        assert_eq!(Permutation::from_cycles(&w, 7).unwrap(), sigma);
        assert_eq!(
            w,
            vec![
                Cycle::new(vec![1, 3, 2, 4, 5]).unwrap(),
                Cycle::new(vec![1, 3, 5, 4, 2]).unwrap(),
            ]
        );

        let id = Permutation::identity(4);
        let w = peel_witness(&id, 2, 4, &cfg()).unwrap();
        assert_eq!(
            w,
            vec![
                Cycle::new(vec![1, 2, 3, 4]).unwrap(),
                Cycle::new(vec![1, 4, 3, 2]).unwrap(),
            ]
        );
    }

    #[test]
    fn peel_rejects_non_members() {
        let sigma = parse_cycles("(1 2)(3 4)(5 6)(7 8)", Some(8)).unwrap();
        assert!(matches!(
            peel_witness(&sigma, 2, 5, &cfg()),
            Err(OracleError::NotAMember { .. })
        ));
    }

    #[test]
    fn elementwise_enumeration_agrees_with_class_bfs() {
        assert!(full_enumeration_check(6, 4, 2, &cfg()).unwrap());
        assert!(full_enumeration_check(5, 3, 3, &cfg()).unwrap());
        assert!(full_enumeration_check(7, 5, 2, &cfg()).unwrap());
        assert!(full_enumeration_check(4, 2, 4, &cfg()).unwrap());
        assert_eq!(
            full_enumeration_check(8, 3, 2, &cfg()),
            Err(OracleError::EnumerationTooLarge { n: 8, max: 7 })
        );
    }

    #[test]
    fn resource_guard_fires_and_can_be_raised() {
        let tight = OracleConfig {
            ceiling: 6,
            cache_dir: None,
        };
        assert!(matches!(
            class_power_types(7, 3, 2, &tight),
            Err(OracleError::ResourceGuard { n: 7, ceiling: 6, .. })
        ));
        let raised = OracleConfig {
            ceiling: 7,
            cache_dir: None,
        };
        assert!(class_power_types(7, 3, 2, &raised).is_ok());
    }

    #[test]
    fn cache_files_round_trip_and_reject_other_schemas() {
        let dir = tempfile::tempdir().unwrap();
        let with_cache = OracleConfig {
            ceiling: DEFAULT_CEILING,
            cache_dir: Some(dir.path().to_path_buf()),
        };
        let rt = class_power_types(6, 3, 3, &with_cache).unwrap();
        let loaded = load_cache_file(dir.path(), 6, 3).expect("cache file written");
        assert_eq!(&loaded[..], &rt.levels[..loaded.len()]);

        std::fs::write(
            cache_path(dir.path(), 9, 4),
            r#"{"schema":"something-else/v9","n":9,"l":4,"levels":[]}"#,
        )
        .unwrap();
        assert!(load_cache_file(dir.path(), 9, 4).is_none());
    }

    #[test]
    fn table_records_cover_every_type_of_the_degree() {
        let rt = class_power_types(5, 3, 2, &cfg()).unwrap();
        let records = table_records(&rt, 2);
        assert_eq!(records.len(), all_cycle_types(5).len());
        let member_of = |ty: &str| records.iter().find(|r| r.cycle_type == ty).unwrap().member;
        assert!(member_of("id")); // c∘c⁻¹
        assert!(member_of("2.2"));
        assert!(!member_of("2")); // odd type, even product
        assert!(member_of("5"));
    }
}
