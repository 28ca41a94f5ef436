//! Constructive decomposition of a permutation into exactly k l-cycles.
//!
//! The driver composes a small set of routes, each of which ends in a
//! witness validated by direct composition: direct padding for the
//! identity, transposition chains for l=2, 3-cycle chains for l=3, the
//! two-factor engine for k=2, bespoke case analyses for k=3 and k=4, and
//! for larger k either one split into two long cycles that chain into
//! l-cycles (whenever m+c fits the k(l-1)+2 budget) or a recursion that
//! peels off a block of small cycles solvable with 2, 3 or 4 factors.
//! At small degrees the driver instead peels factors greedily against the
//! exact reachable-type oracle, which doubles as an independent
//! cross-check of the constructive paths.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::factor::{chain_cycle, factor_two_cycles, two_cycle_feasible, FactorError};
use crate::oracle::{peel_witness, OracleConfig, OracleError};
use crate::perm::{Cycle, Permutation};

/// Schema tag embedded in every serialized witness record.
pub const WITNESS_SCHEMA: &str = "cycle-products/witness/v1";

/// Partition counts p(0)..=p(16), used to estimate the oracle's workload
/// before routing a small-degree query through the peel path.
const PARTITIONS: [u64; 17] = [
    1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231,
];

#[derive(Debug, Error)]
pub enum DecomposeError {
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error(
        "parity obstruction: a product of {k} {l}-cycles has sign (-1)^(k(l-1)), \
         which differs from the sign of the target"
    )]
    ParityMismatch { k: usize, l: usize, sigma_even: bool },
    #[error("the target is not a product of {k} {l}-cycles: {reason}")]
    NotAMember { k: usize, l: usize, reason: String },
    #[error("hypotheses not met: {0}")]
    Hypothesis(String),
    #[error("no constructive route found for {sigma} as {k} {l}-cycles at degree {n}")]
    NoRoute {
        sigma: String,
        k: usize,
        l: usize,
        n: usize,
    },
    #[error(transparent)]
    Factor(#[from] FactorError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("witness validation failed: {0}")]
    Validation(String),
}

/// A verified factorization: `factors` multiplied right-to-left equal
/// `target`, and every factor is an l-cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub target: Permutation,
    pub l: usize,
    pub factors: Vec<Cycle>,
}

/// Serialized form of a [`Witness`], the record consumed and produced by
/// the CLI `decompose` and `verify` subcommands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub schema: String,
    pub target: String,
    pub k: usize,
    pub l: usize,
    pub n: usize,
    /// Always true here; non-membership records (same schema) set false.
    pub member: bool,
    pub factors: Vec<String>,
    pub validated: bool,
}

impl Witness {
    pub fn k(&self) -> usize {
        self.factors.len()
    }

    pub fn n(&self) -> usize {
        self.target.degree()
    }

    /// Recomputes the product and checks every factor length; the library
    /// calls this on every path before a witness leaves `decompose`.
    pub fn validate(&self) -> Result<(), DecomposeError> {
        let n = self.n();
        for f in &self.factors {
            if f.len() != self.l {
                return Err(DecomposeError::Validation(format!(
                    "factor {f} has length {}, expected {}",
                    f.len(),
                    self.l
                )));
            }
            if f.max_point() > n {
                return Err(DecomposeError::Validation(format!(
                    "factor {f} exceeds degree {n}"
                )));
            }
        }
        let product = Permutation::from_cycles(&self.factors, n)
            .map_err(|e| DecomposeError::Validation(e.to_string()))?;
        if product != self.target {
            return Err(DecomposeError::Validation(format!(
                "product {product} differs from target {}",
                self.target
            )));
        }
        Ok(())
    }

    pub fn to_record(&self) -> WitnessRecord {
        WitnessRecord {
            schema: WITNESS_SCHEMA.to_string(),
            target: self.target.to_string(),
            k: self.k(),
            l: self.l,
            n: self.n(),
            member: true,
            factors: self.factors.iter().map(|f| f.to_string()).collect(),
            validated: true,
        }
    }

    /// Parses and re-validates a serialized record; the `validated` flag
    /// in the record is never trusted.
    pub fn from_record(rec: &WitnessRecord) -> Result<Witness, DecomposeError> {
        if rec.schema != WITNESS_SCHEMA {
            return Err(DecomposeError::BadParams(format!(
                "unknown witness schema {:?}",
                rec.schema
            )));
        }
        if !rec.member {
            return Err(DecomposeError::BadParams(
                "record is a non-membership certificate, not a factorization witness".to_string(),
            ));
        }
        let target = crate::perm::parse_cycles(&rec.target, Some(rec.n))
            .map_err(|e| DecomposeError::BadParams(format!("bad target: {e}")))?;
        let mut factors = Vec::with_capacity(rec.factors.len());
        for text in &rec.factors {
            let perm = crate::perm::parse_cycles(text, Some(rec.n))
                .map_err(|e| DecomposeError::BadParams(format!("bad factor {text:?}: {e}")))?;
            let mut parts = perm.dcd_star();
            if parts.len() != 1 {
                return Err(DecomposeError::BadParams(format!(
                    "factor {text:?} is not a single cycle"
                )));
            }
            factors.push(parts.remove(0));
        }
        if factors.len() != rec.k {
            return Err(DecomposeError::BadParams(format!(
                "record claims k={}, lists {} factors",
                rec.k,
                factors.len()
            )));
        }
        let w = Witness {
            target,
            l: rec.l,
            factors,
        };
        w.validate()?;
        Ok(w)
    }
}

/// The block a recursion step peels off a permutation with many small
/// cycles, together with the factor budgets for block and remainder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPlan {
    /// Cycles drawn from `dcd_star` of the target.
    pub block: Vec<Cycle>,
    /// l-cycle budget for the block, always in {2, 3, 4}.
    pub k1: usize,
    /// Remaining budget k - k1 for the rest of the target.
    pub k2: usize,
    /// Gap between the block rule's degree slot and the block support.
    pub epsilon: usize,
    /// The M in l = 3M+2.
    pub m_param: usize,
    /// The divisible-by-3 size of an all-3-cycle block, when that shape
    /// was selected.
    pub alpha: Option<usize>,
}

fn wrap(target: &Permutation, l: usize, factors: Vec<Cycle>) -> Witness {
    Witness {
        target: target.clone(),
        l,
        factors,
    }
}

/// The cycle (1 2 ... l), used for deterministic padding.
fn pad_cycle(l: usize) -> Cycle {
    Cycle::new((1..=l).collect()).expect("l >= 2")
}

/// c^e as a cycle; requires gcd(e, len) = 1 so the power stays a cycle.
fn cycle_power(c: &Cycle, e: usize) -> Cycle {
    let pts = c.points();
    let len = pts.len();
    let step = e % len;
    let mut out = Vec::with_capacity(len);
    let mut idx = 0;
    for _ in 0..len {
        out.push(pts[idx]);
        idx = (idx + step) % len;
    }
    Cycle::new(out).expect("gcd(e, len) = 1")
}

/// Appends factors to reach `target_k`: c∘c⁻¹ pairs for even increments,
/// and for an odd increment (odd l only) the first factor c is replaced
/// by d∘d with d = c^((l+1)/2), so that d² = c.
pub fn adjust_witness_count(w: Witness, target_k: usize) -> Result<Witness, DecomposeError> {
    let k = w.k();
    if target_k < k {
        return Err(DecomposeError::BadParams(format!(
            "cannot shrink a witness from {k} to {target_k} factors"
        )));
    }
    let l = w.l;
    let mut diff = target_k - k;
    if diff == 0 {
        return Ok(w);
    }
    if l > w.n() {
        return Err(DecomposeError::BadParams(format!(
            "padding cycles of length {l} do not fit in degree {}",
            w.n()
        )));
    }
    let mut factors = w.factors;
    if diff % 2 == 1 {
        if l % 2 == 0 {
            return Err(DecomposeError::ParityMismatch {
                k: target_k,
                l,
                sigma_even: w.target.is_even(),
            });
        }
        if let Some(first) = factors.first().cloned() {
            let d = cycle_power(&first, (l + 1) / 2);
            factors.splice(0..1, [d.clone(), d]);
            diff -= 1;
        } else {
            if diff < 3 {
                return Err(DecomposeError::BadParams(
                    "the identity is not a single l-cycle".to_string(),
                ));
            }
            let c = pad_cycle(l);
            factors.extend([c.clone(), c.clone(), cycle_power(&c, l - 2)]);
            diff -= 3;
        }
    }
    let c = pad_cycle(l);
    for _ in 0..diff / 2 {
        factors.push(c.clone());
        factors.push(c.inverse());
    }
    let out = Witness {
        target: w.target,
        l,
        factors,
    };
    out.validate()?;
    Ok(out)
}

/// Re-solves σ at a longer cycle length. Membership at the original
/// length is the caller's premise; the containment of the product sets
/// under +1 steps (k even) or +2 steps (k odd) makes the re-solve valid.
pub fn lengthen_membership(
    sigma: &Permutation,
    k: usize,
    l: usize,
    target_l: usize,
) -> Result<Witness, DecomposeError> {
    let n = sigma.degree();
    if target_l < l {
        return Err(DecomposeError::BadParams(format!(
            "target length {target_l} is below the starting length {l}"
        )));
    }
    if k % 2 == 1 && (target_l - l) % 2 != 0 {
        return Err(DecomposeError::BadParams(
            "odd k lengthens in +2 steps; the length gap must be even".to_string(),
        ));
    }
    if target_l > l {
        let headroom = if k % 2 == 0 { n - 1 } else { n - 2 };
        if target_l - 1 > headroom {
            return Err(DecomposeError::BadParams(format!(
                "lengthening steps require intermediate lengths at most {headroom}, \
                 cannot reach {target_l} at degree {n}"
            )));
        }
    }
    decompose(sigma, k, target_l)
}

/// Work guard for the peel path: the candidate l-cycle list and the
/// type-level search both have to stay small.
fn peel_affordable(n: usize, l: usize, ceiling: usize) -> bool {
    if n > ceiling || n > 16 || l > n {
        return false;
    }
    let mut candidates = 1f64;
    for i in 0..l {
        candidates *= (n - i) as f64;
    }
    candidates /= l as f64;
    candidates <= 200_000.0 && candidates * PARTITIONS[n] as f64 * n as f64 <= 1.5e8
}

/// Factors σ into exactly k l-cycles inside S_n (n = degree of σ) and
/// validates the result by direct composition before returning it.
///
/// Routing: identity targets are padded directly; small degrees go
/// through the oracle-backed greedy peel; l=2 and l=3 use transposition
/// and 3-cycle chains; k=2,3,4 use the two-factor engine with their case
/// analyses; larger k splits σ into two long chained cycles when m+c
/// fits the k(l-1)+2 budget, and otherwise peels off a block of small
/// cycles and recurses with the remaining budget.
pub fn decompose(sigma: &Permutation, k: usize, l: usize) -> Result<Witness, DecomposeError> {
    let n = sigma.degree();
    if k == 0 {
        return Err(DecomposeError::BadParams("k must be at least 1".to_string()));
    }
    if l < 2 {
        return Err(DecomposeError::BadParams("l must be at least 2".to_string()));
    }
    if l > n {
        return Err(DecomposeError::BadParams(format!(
            "an {l}-cycle does not fit in degree {n}"
        )));
    }
    let product_even = k * (l - 1) % 2 == 0;
    if sigma.is_even() != product_even {
        return Err(DecomposeError::ParityMismatch {
            k,
            l,
            sigma_even: sigma.is_even(),
        });
    }
    let w = solve(sigma, k, l)?;
    w.validate()?;
    Ok(w)
}

fn solve(sigma: &Permutation, k: usize, l: usize) -> Result<Witness, DecomposeError> {
    let n = sigma.degree();

    if sigma.is_identity() {
        return identity_witness(sigma, k, l);
    }

    if k == 1 {
        let mut parts = sigma.dcd_star();
        return if parts.len() == 1 && parts[0].len() == l {
            Ok(wrap(sigma, l, vec![parts.remove(0)]))
        } else {
            Err(DecomposeError::NotAMember {
                k,
                l,
                reason: "the target is not a single l-cycle".to_string(),
            })
        };
    }

    let cfg = OracleConfig::default();
    if peel_affordable(n, l, cfg.ceiling) {
        return match peel_witness(sigma, k, l, &cfg) {
            Ok(factors) => Ok(wrap(sigma, l, factors)),
            Err(OracleError::NotAMember { .. }) => Err(DecomposeError::NotAMember {
                k,
                l,
                reason: format!("exhaustive search over reachable classes at degree {n}"),
            }),
            Err(e) => Err(DecomposeError::Oracle(e)),
        };
    }

    if l == 2 {
        return transpositions_route(sigma, k);
    }
    if l == 3 {
        return three_cycles_route(sigma, k);
    }

    match k {
        2 => {
            let (c1, c2) = factor_two_cycles(sigma, l, l)?;
            Ok(wrap(sigma, l, vec![c1, c2]))
        }
        3 => k3_routes(sigma, l),
        4 => k4_routes(sigma, l),
        _ => {
            if two_cycle_feasible(sigma, l, l).feasible {
                if let Ok((c1, c2)) = factor_two_cycles(sigma, l, l) {
                    return adjust_witness_count(wrap(sigma, l, vec![c1, c2]), k);
                }
            }
            if let Ok(w) = split_small_support(sigma, k, l) {
                return Ok(w);
            }
            if l % 3 == 2 {
                if let Ok(plan) = split_off_block(sigma, k, l) {
                    if let Ok(w) = execute_plan(sigma, k, l, &plan) {
                        return Ok(w);
                    }
                }
            }
            generic_block_split(sigma, k, l)
        }
    }
}

/// k l-cycles multiplying to the identity: c∘c⁻¹ pairs, preceded for odd
/// k (odd l) by the triple c·c·c^(l-2) = c^l.
fn identity_witness(sigma: &Permutation, k: usize, l: usize) -> Result<Witness, DecomposeError> {
    if k < 2 {
        return Err(DecomposeError::NotAMember {
            k,
            l,
            reason: "the identity is not a single l-cycle".to_string(),
        });
    }
    let c = pad_cycle(l);
    let mut factors = Vec::with_capacity(k);
    if k % 2 == 1 {
        factors.extend([c.clone(), c.clone(), cycle_power(&c, l - 2)]);
    }
    while factors.len() < k {
        factors.push(c.clone());
        factors.push(c.inverse());
    }
    Ok(wrap(sigma, l, factors))
}

/// l=2: each cycle (a1 .. ap) becomes (a1 ap)(a1 ap-1)...(a1 a2), m-c
/// transpositions in total, padded to k with (1 2)(1 2) pairs.
fn transpositions_route(sigma: &Permutation, k: usize) -> Result<Witness, DecomposeError> {
    let mut factors = Vec::new();
    for z in sigma.dcd_star() {
        let pts = z.points();
        for i in (1..pts.len()).rev() {
            factors.push(Cycle::new(vec![pts[0], pts[i]]).expect("two distinct points"));
        }
    }
    if factors.len() > k {
        return Err(DecomposeError::NotAMember {
            k,
            l: 2,
            reason: format!(
                "every expression of the target needs at least m-c = {} transpositions",
                factors.len()
            ),
        });
    }
    adjust_witness_count(wrap(sigma, 2, factors), k)
}

/// l=3: odd cycles chain directly into (p-1)/2 3-cycles; even cycles are
/// paired and each pair is split into two odd cycles of lengths p+1 and
/// q+1, which then chain. The total is (m - #odd parts)/2 factors,
/// padded up to k.
fn three_cycles_route(sigma: &Permutation, k: usize) -> Result<Witness, DecomposeError> {
    let n = sigma.degree();
    let parts = sigma.dcd_star();
    let mut factors = Vec::new();
    let mut evens: Vec<&Cycle> = Vec::new();
    for z in &parts {
        if z.len() % 2 == 1 {
            factors.extend(chain_cycle(z, (z.len() - 1) / 2, 3)?);
        } else {
            evens.push(z);
        }
    }
    for pair in evens.chunks(2) {
        debug_assert_eq!(pair.len(), 2, "an even permutation has evenly many even cycles");
        let (a, b) = (pair[0], pair[1]);
        let pair_perm = Permutation::from_cycles(&[a.clone(), b.clone()], n)
            .expect("disjoint cycles of sigma");
        let (c1, c2) = factor_two_cycles(&pair_perm, a.len() + 1, b.len() + 1)?;
        factors.extend(chain_cycle(&c1, (c1.len() - 1) / 2, 3)?);
        factors.extend(chain_cycle(&c2, (c2.len() - 1) / 2, 3)?);
    }
    if factors.len() > k {
        return Err(DecomposeError::NoRoute {
            sigma: sigma.to_string(),
            k,
            l: 3,
            n,
        });
    }
    adjust_witness_count(wrap(sigma, 3, factors), k)
}

/// k=3 case analysis: the target is itself an l-cycle (pad with a trivial
/// pair); two l-cycles with the first doubled via its square root; a
/// (2l-1)-cycle chained into two factors times an l-cycle; or an odd
/// companion cycle that splits into two l-cycles.
fn k3_routes(sigma: &Permutation, l: usize) -> Result<Witness, DecomposeError> {
    let n = sigma.degree();
    let stats = sigma.stats();
    let (m, c) = (stats.m, stats.c);
    let parts = sigma.dcd_star();

    if parts.len() == 1 && parts[0].len() == l {
        let pad = pad_cycle(l);
        return Ok(wrap(
            sigma,
            l,
            vec![parts.into_iter().next().expect("one part"), pad.clone(), pad.inverse()],
        ));
    }

    if l % 2 == 1 && two_cycle_feasible(sigma, l, l).feasible {
        if let Ok((c1, c2)) = factor_two_cycles(sigma, l, l) {
            let d = cycle_power(&c1, (l + 1) / 2);
            return Ok(wrap(sigma, l, vec![d.clone(), d, c2]));
        }
    }

    if 2 * l - 1 <= n && two_cycle_feasible(sigma, 2 * l - 1, l).feasible {
        if let Ok((long, short)) = factor_two_cycles(sigma, 2 * l - 1, l) {
            let mut factors = chain_cycle(&long, 2, l)?;
            factors.push(short);
            return Ok(wrap(sigma, l, factors));
        }
    }

    // Odd companion: sigma = (r-cycle)·(l-cycle) in some order, with the
    // odd r-cycle then split into two l-cycles.
    let hi = (2 * l - 1).min(l + (m - c)).min(n);
    let lo = 3.max(l.saturating_sub(m - c));
    for r in (lo..=hi).rev() {
        if r % 2 == 0 || r == l || !two_cycle_feasible(sigma, r, l).feasible {
            continue;
        }
        if let Ok((x, y)) = factor_two_cycles(sigma, r, l) {
            let rho = if x.len() == r { &x } else { &y };
            let rho_perm = rho.to_permutation(n).expect("within degree");
            if let Ok((a, b)) = factor_two_cycles(&rho_perm, l, l) {
                let factors = if x.len() == r {
                    vec![a, b, y]
                } else {
                    vec![x, a, b]
                };
                return Ok(wrap(sigma, l, factors));
            }
        }
    }

    Err(DecomposeError::NoRoute {
        sigma: sigma.to_string(),
        k: 3,
        l,
        n,
    })
}

/// k=4 case analysis: two l-cycles plus a trivial pair; two chained
/// (2l-1)-cycles; or a split into two halves each solvable with two
/// factors.
fn k4_routes(sigma: &Permutation, l: usize) -> Result<Witness, DecomposeError> {
    let n = sigma.degree();

    if two_cycle_feasible(sigma, l, l).feasible {
        if let Ok((c1, c2)) = factor_two_cycles(sigma, l, l) {
            return adjust_witness_count(wrap(sigma, l, vec![c1, c2]), 4);
        }
    }

    let long = 2 * l - 1;
    if long <= n && two_cycle_feasible(sigma, long, long).feasible {
        if let Ok((d1, d2)) = factor_two_cycles(sigma, long, long) {
            let mut factors = chain_cycle(&d1, 2, l)?;
            factors.extend(chain_cycle(&d2, 2, l)?);
            return Ok(wrap(sigma, l, factors));
        }
    }

    generic_block_split(sigma, 4, l)
}

/// Splits a target with few cycles into two long cycles that chain into
/// l-cycles: equal lengths l+(k/2-1)(l-1) for even k, lengths differing
/// by l-1 for odd k (with the three-factor analysis covering small
/// supports).
pub fn split_small_support(
    sigma: &Permutation,
    k: usize,
    l: usize,
) -> Result<Witness, DecomposeError> {
    let n = sigma.degree();
    if sigma.is_identity() {
        return Err(DecomposeError::Hypothesis(
            "the identity is padded directly, not split".to_string(),
        ));
    }
    if k < 2 || l < 2 {
        return Err(DecomposeError::Hypothesis("needs k >= 2 and l >= 2".to_string()));
    }
    let stats = sigma.stats();
    let (m, c) = (stats.m, stats.c);

    if k % 2 == 0 {
        let half = k / 2;
        let big = l + (half - 1) * (l - 1);
        if big > n {
            return Err(DecomposeError::Hypothesis(format!(
                "chain length {big} exceeds degree {n}"
            )));
        }
        if !two_cycle_feasible(sigma, big, big).feasible {
            return Err(DecomposeError::Hypothesis(format!(
                "m+c = {} exceeds the two-cycle budget {}",
                m + c,
                2 * big
            )));
        }
        let (c1, c2) = factor_two_cycles(sigma, big, big)?;
        let mut factors = chain_cycle(&c1, half, l)?;
        factors.extend(chain_cycle(&c2, half, l)?);
        return Ok(wrap(sigma, l, factors));
    }

    // Odd k. Case III: two long cycles whose lengths differ by l-1.
    let l1 = l + ((k - 1) / 2) * (l - 1);
    let l2 = l + ((k - 3) / 2) * (l - 1);
    if l1 <= n && m - c >= l - 1 && two_cycle_feasible(sigma, l1, l2).feasible {
        if let Ok((d1, d2)) = factor_two_cycles(sigma, l1, l2) {
            let mut factors = chain_cycle(&d1, (k + 1) / 2, l)?;
            factors.extend(chain_cycle(&d2, (k - 1) / 2, l)?);
            return Ok(wrap(sigma, l, factors));
        }
    }

    // Cases I and II: the support is small enough for three factors.
    let base = k3_routes(sigma, l)?;
    adjust_witness_count(base, k)
}

fn count_of(parts: &[Cycle], len: usize) -> usize {
    parts.iter().filter(|z| z.len() == len).count()
}

fn take_of(parts: &[Cycle], len: usize, count: usize) -> Vec<Cycle> {
    parts
        .iter()
        .filter(|z| z.len() == len)
        .take(count)
        .cloned()
        .collect()
}

/// Selects a block of small cycles realizing the case analysis for
/// l = 3M+2 and k >= 5: a divisible-by-3 number of 3-cycles when the
/// target has many, else 2M 2-cycles and a 3-cycle, else 4M+2 2-cycles;
/// the k=5 shape takes 3M+1 2-cycles against a three-factor budget.
/// Availability is checked on the actual cycle counts of the target.
pub fn split_off_block(
    sigma: &Permutation,
    k: usize,
    l: usize,
) -> Result<SplitPlan, DecomposeError> {
    if k < 5 || l < 5 || l % 3 != 2 {
        return Err(DecomposeError::Hypothesis(
            "the block tables need k >= 5 and l = 3M+2 >= 5".to_string(),
        ));
    }
    let m_param = (l - 2) / 3;
    let parts = sigma.dcd_star();
    let n2 = count_of(&parts, 2);
    let n3 = count_of(&parts, 3);

    let plan = |block: Vec<Cycle>, k1: usize, alpha: Option<usize>| {
        let support: usize = block.iter().map(|z| z.len()).sum();
        let slot = match k1 {
            2 => 4 * m_param + 3,
            3 => 6 * m_param + 2,
            _ => 8 * m_param + 5,
        };
        SplitPlan {
            block,
            k1,
            k2: k - k1,
            epsilon: slot - support,
            m_param,
            alpha,
        }
    };

    if k == 5 {
        let need = 3 * m_param + 1;
        if n2 >= need {
            return Ok(plan(take_of(&parts, 2, need), 3, None));
        }
        return Err(DecomposeError::Hypothesis(format!(
            "the five-factor shape needs {need} 2-cycles, found {n2}"
        )));
    }

    let alpha_menu: [usize; 3] = if k % 2 == 0 {
        [4 * m_param + 2, 4 * m_param + 3, 8 * m_param + 5]
    } else if k % 4 == 3 {
        [4 * m_param + 3, 8 * m_param + 4, 8 * m_param + 5]
    } else {
        [4 * m_param + 1, 4 * m_param + 2, 4 * m_param + 3]
    };
    let alpha = *alpha_menu
        .iter()
        .find(|a| *a % 3 == 0)
        .expect("one entry per residue of M is divisible by 3");
    let alpha_k1 = if alpha >= 8 * m_param + 4 { 4 } else { 2 };
    let threshold = if k % 4 == 1 {
        (4 * m_param + 3).div_ceil(3)
    } else {
        (8 * m_param + 5).div_ceil(3)
    };

    if n3 >= threshold && n3 >= alpha / 3 && k > alpha_k1 + 1 {
        return Ok(plan(take_of(&parts, 3, alpha / 3), alpha_k1, Some(alpha)));
    }
    if k % 4 != 1 && n3 >= 1 && n2 >= 2 * m_param {
        let mut block = take_of(&parts, 2, 2 * m_param);
        block.extend(take_of(&parts, 3, 1));
        return Ok(plan(block, 2, None));
    }
    if n2 >= 4 * m_param + 2 && k >= 6 {
        return Ok(plan(take_of(&parts, 2, 4 * m_param + 2), 4, None));
    }
    Err(DecomposeError::Hypothesis(format!(
        "no block shape available with {n2} 2-cycles and {n3} 3-cycles"
    )))
}

/// Solves the block and the remainder separately and concatenates
/// remainder factors before block factors (the supports are disjoint, so
/// the two sub-products commute).
fn execute_plan(
    sigma: &Permutation,
    k: usize,
    l: usize,
    plan: &SplitPlan,
) -> Result<Witness, DecomposeError> {
    let n = sigma.degree();
    let block_perm = Permutation::from_cycles(&plan.block, n)
        .map_err(|e| DecomposeError::Validation(e.to_string()))?;
    let block_w = decompose(&block_perm, plan.k1, l)?;

    let mut remaining = sigma.dcd_star();
    for used in &plan.block {
        let pos = remaining
            .iter()
            .position(|z| z == used)
            .expect("block cycles come from dcd_star");
        remaining.remove(pos);
    }
    let tau = Permutation::from_cycles(&remaining, n)
        .map_err(|e| DecomposeError::Validation(e.to_string()))?;
    let tau_w = decompose(&tau, k - plan.k1, l)?;

    let mut factors = tau_w.factors;
    factors.extend(block_w.factors);
    Ok(wrap(sigma, l, factors))
}

/// Fallback splitter: greedily fills a block of the smallest cycles up
/// to the two-factor budget 2l (then the four-factor budget 4l-2),
/// keeping the block even, and recurses on the remainder.
fn generic_block_split(
    sigma: &Permutation,
    k: usize,
    l: usize,
) -> Result<Witness, DecomposeError> {
    let n = sigma.degree();
    let mut parts = sigma.dcd_star();
    parts.sort_by_key(|z| (z.len(), z.min_point()));

    for k1 in [2usize, 4] {
        if k1 == 4 && k < 6 {
            continue;
        }
        if k - k1 < 2 {
            continue;
        }
        let budget = k1 * (l - 1) + 2;
        let mut block: Vec<Cycle> = Vec::new();
        let mut used = 0;
        for z in &parts {
            let weight = z.len() + 1;
            if used + weight <= budget {
                block.push(z.clone());
                used += weight;
            }
        }
        if used % 2 == 1 {
            // An odd total contains an odd weight, i.e. an even-length
            // cycle; dropping the smallest one restores evenness.
            let pos = block
                .iter()
                .position(|z| z.len() % 2 == 0)
                .expect("odd sums contain an odd summand");
            block.remove(pos);
        }
        if block.is_empty() || block.len() == parts.len() {
            continue;
        }
        // Support-count necessary bound on the remainder (its l-cycle
        // parts ride free); deeper splits happen inside the recursion.
        let rest_reduced: usize = parts
            .iter()
            .filter(|z| !block.contains(z) && z.len() != l)
            .map(|z| z.len() + 1)
            .sum();
        if rest_reduced > (k - k1) * l {
            continue;
        }
        let plan = SplitPlan {
            block,
            k1,
            k2: k - k1,
            epsilon: 0,
            m_param: 0,
            alpha: None,
        };
        if let Ok(w) = execute_plan(sigma, k, l, &plan) {
            return Ok(w);
        }
    }
    Err(DecomposeError::NoRoute {
        sigma: sigma.to_string(),
        k,
        l,
        n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{n_k_l, ree_certificate_check};
    use crate::oracle::is_member_oracle;
    use crate::perm::{all_even_cycle_types, parse_cycles};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(text: &str, n: usize) -> Permutation {
        parse_cycles(text, Some(n)).unwrap()
    }

    fn check(sigma: &Permutation, k: usize, l: usize) -> Witness {
        let w = decompose(sigma, k, l).unwrap_or_else(|e| {
            panic!("decompose({sigma}, k={k}, l={l}, n={}) failed: {e}", sigma.degree())
        });
        assert_eq!(w.k(), k);
        w.validate().unwrap();
        let ree = ree_certificate_check(sigma, &w.factors).unwrap();
        assert!(ree.pass, "ree inequality violated for {sigma}");
        w
    }

    #[test]
    fn identity_padding_matches_the_frozen_pair() {
        let id = Permutation::identity(6);
        let w = decompose(&id, 2, 4).unwrap();
        let expected = vec![
            Cycle::new(vec![1, 2, 3, 4]).unwrap(),
            Cycle::new(vec![1, 4, 3, 2]).unwrap(),
        ];
        assert_eq!(w.factors, expected);

        let w = decompose(&id, 5, 5).unwrap();
        assert_eq!(w.k(), 5);
        w.validate().unwrap();

        assert!(matches!(
            decompose(&id, 3, 4),
            Err(DecomposeError::ParityMismatch { .. })
        ));
        assert!(matches!(
            decompose(&id, 1, 5),
            Err(DecomposeError::NotAMember { .. })
        ));
    }

    #[test]
    fn parity_gate_rejects_sign_mismatches() {
        // m+c = 7: an odd permutation cannot be two 5-cycles.
        let sigma = p("(1 2)(3 4 5)", 10);
        assert!(matches!(
            decompose(&sigma, 2, 5),
            Err(DecomposeError::ParityMismatch { .. })
        ));
    }

    #[test]
    fn peel_route_proves_non_membership_at_small_degrees() {
        let sigma = p("(1 2)(3 4)(5 6)(7 8)", 8);
        assert!(matches!(
            decompose(&sigma, 2, 5),
            Err(DecomposeError::NotAMember { .. })
        ));
    }

    #[test]
    fn transposition_route_handles_even_and_odd_targets() {
        let sigma = p("(1 2)(3 4)", 20);
        let w = check(&sigma, 2, 2);
        assert_eq!(
            w.factors,
            vec![
                Cycle::new(vec![1, 2]).unwrap(),
                Cycle::new(vec![3, 4]).unwrap()
            ]
        );
        check(&sigma, 4, 2);
        check(&sigma, 10, 2);

        let four = p("(1 2 3 4)", 18);
        let w = check(&four, 3, 2);
        assert_eq!(
            w.factors,
            vec![
                Cycle::new(vec![1, 4]).unwrap(),
                Cycle::new(vec![1, 3]).unwrap(),
                Cycle::new(vec![1, 2]).unwrap()
            ]
        );

        let dense = p("(1 2)(3 4)(5 6)(7 8)", 20);
        assert!(matches!(
            decompose(&dense, 2, 2),
            Err(DecomposeError::NotAMember { .. })
        ));
    }

    #[test]
    fn three_cycle_route_chains_odd_parts_and_pairs_even_parts() {
        let sigma = p("(1 2 3 4)(5 6 7 8)(9 10 11)", 18);
        check(&sigma, 5, 3);
        check(&sigma, 6, 3);
        check(&sigma, 9, 3);
        assert!(decompose(&sigma, 4, 3).is_err());
    }

    #[test]
    fn k3_routes_cover_the_characteristic_shapes() {
        // The target is itself an l-cycle.
        check(&p("(1 2 3 4 5)", 20), 3, 5);
        // Two factors plus the square-root doubling.
        check(&p("(1 2 3)(4 5 6)", 20), 3, 5);
        // Nine points force the chained (2l-1)-cycle.
        check(&p("(1 2 3 4 5 6 7 8 9)(10 11 12)", 20), 3, 5);
        // Odd sigma with even l at k=3.
        check(&p("(1 2 3 4)", 20), 3, 4);
    }

    #[test]
    fn k4_routes_cover_the_characteristic_shapes() {
        check(&p("(1 2)(3 4)", 20), 4, 5);
        check(&p("(1 2 3 4 5 6 7 8)(9 10 11 12)", 20), 4, 5);
        check(&p("(1 2)(3 4)(5 6)(7 8)", 20), 4, 5);
        // Eight 2-cycles exceed the (2l-1,2l-1) budget at l=6 and need
        // the half-and-half split.
        check(
            &p("(1 2)(3 4)(5 6)(7 8)(9 10)(11 12)(13 14)(15 16)", 20),
            4,
            6,
        );
    }

    #[test]
    fn split_small_support_spec_shapes() {
        let w = split_small_support(&p("(1 2)(3 4)", 6), 2, 4).unwrap();
        w.validate().unwrap();
        assert_eq!(w.k(), 2);
        assert!(is_member_oracle(&p("(1 2)(3 4)", 6), 2, 4, &OracleConfig::default()).unwrap());

        let w = split_small_support(&p("(1 2 3)", 14), 6, 4).unwrap();
        w.validate().unwrap();
        assert_eq!(w.k(), 6);

        assert!(matches!(
            split_small_support(&Permutation::identity(10), 3, 5),
            Err(DecomposeError::Hypothesis(_))
        ));
    }

    #[test]
    fn split_block_selects_the_documented_shapes() {
        // Few 3-cycles: two 2-cycles and a 3-cycle fill the (4l+1)/3 slot.
        let sigma = p(
            "(1 2)(3 4)(5 6)(7 8)(9 10)(11 12)(13 14 15)(16 17 18)",
            19,
        );
        let plan = split_off_block(&sigma, 6, 5).unwrap();
        let lens: Vec<usize> = plan.block.iter().map(|z| z.len()).collect();
        assert_eq!(lens, vec![2, 2, 3]);
        assert_eq!((plan.k1, plan.k2), (2, 4));
        assert_eq!((plan.epsilon, plan.m_param, plan.alpha), (0, 1, None));

        // No 3-cycles at all: 4M+2 2-cycles against a four-factor budget.
        let sigma = p(
            "(1 2)(3 4)(5 6)(7 8)(9 10)(11 12)(13 14)(15 16)(17 18)",
            19,
        );
        let plan = split_off_block(&sigma, 6, 5).unwrap();
        assert_eq!(plan.block.len(), 6);
        assert!(plan.block.iter().all(|z| z.len() == 2));
        assert_eq!((plan.k1, plan.k2, plan.epsilon), (4, 2, 1));

        // Many 3-cycles: a divisible-by-3 block of them.
        let sigma = p(
            "(1 2 3)(4 5 6)(7 8 9)(10 11 12)(13 14 15)(16 17 18)",
            19,
        );
        let plan = split_off_block(&sigma, 6, 5).unwrap();
        assert_eq!(plan.alpha, Some(6));
        assert_eq!(plan.block.len(), 2);
        assert_eq!((plan.k1, plan.epsilon), (2, 1));

        // The five-factor shape: 3M+1 2-cycles against three factors.
        let sigma = p("(1 2)(3 4)(5 6)(7 8)(9 10)(11 12)(13 14 15)", 15);
        let plan = split_off_block(&sigma, 5, 5).unwrap();
        assert_eq!(plan.block.len(), 4);
        assert!(plan.block.iter().all(|z| z.len() == 2));
        assert_eq!((plan.k1, plan.k2, plan.epsilon), (3, 2, 0));
    }

    #[test]
    fn dense_targets_go_through_the_block_recursion() {
        // m+c = 26 fits the budget exactly; the two-long-cycle route.
        let sigma = p(
            "(1 2)(3 4)(5 6)(7 8)(9 10)(11 12)(13 14 15)(16 17 18)",
            19,
        );
        check(&sigma, 6, 5);

        // m+c = 28 exceeds 26, forcing a block split first.
        let sigma = p(
            "(1 2)(3 4)(5 6)(7 8)(9 10)(11 12)(13 14)(15 16)(17 18 19)",
            19,
        );
        check(&sigma, 6, 5);
    }

    #[test]
    fn every_even_type_decomposes_at_the_six_five_degree() {
        let (k, l) = (6usize, 5usize);
        let n = n_k_l(k, l).unwrap().value;
        assert_eq!(n, 19);
        for t in all_even_cycle_types(n) {
            check(&t.representative(), k, l);
        }
    }

    #[test]
    fn every_even_type_decomposes_at_the_five_five_degree() {
        let (k, l) = (5usize, 5usize);
        let n = n_k_l(k, l).unwrap().value;
        assert_eq!(n, 15);
        for t in all_even_cycle_types(n) {
            check(&t.representative(), k, l);
        }
    }

    #[test]
    fn random_targets_decompose_at_larger_threshold_degrees() {
        for (k, l) in [(6usize, 6usize), (5, 9), (8, 7), (7, 5), (9, 5), (10, 11)] {
            let n = n_k_l(k, l).unwrap().value;
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed + (k * 100 + l) as u64);
            for _ in 0..12 {
                let sigma = Permutation::random_even(n, &mut rng);
                check(&sigma, k, l);
            }
        }
    }

    #[test]
    fn dense_all_transposition_targets_decompose_at_threshold_degrees() {
        for (k, l) in [(6usize, 6usize), (6, 5), (9, 5), (8, 7), (5, 9)] {
            let n = n_k_l(k, l).unwrap().value;
            // The densest even all-2-cycle pattern, plus a variant with
            // one 3-cycle, exercise the block tables.
            let mut t = n / 2;
            if t % 2 == 1 {
                t -= 1;
            }
            let cycles: Vec<Cycle> = (0..t)
                .map(|i| Cycle::new(vec![2 * i + 1, 2 * i + 2]).unwrap())
                .collect();
            let sigma = Permutation::from_cycles(&cycles, n).unwrap();
            check(&sigma, k, l);

            if 2 * t + 3 <= n {
                let mut with_three = cycles.clone();
                with_three.push(Cycle::new(vec![2 * t + 1, 2 * t + 2, 2 * t + 3]).unwrap());
                let sigma = Permutation::from_cycles(&with_three, n).unwrap();
                if sigma.is_even() == ((k * (l - 1)) % 2 == 0) {
                    check(&sigma, k, l);
                }
            }
        }
    }

    #[test]
    fn adjustment_doubles_and_pads() {
        let c = Cycle::new(vec![1, 2, 3, 4, 5]).unwrap();
        let d = cycle_power(&c, 3);
        assert_eq!(d, Cycle::new(vec![1, 4, 2, 5, 3]).unwrap());
        let dd = Permutation::from_cycles(&[d.clone(), d], 5).unwrap();
        assert_eq!(dd, c.to_permutation(5).unwrap());

        let base = decompose(&p("(1 2 3)(4 5 6)", 20), 3, 5).unwrap();
        let grown = adjust_witness_count(base.clone(), 6).unwrap();
        assert_eq!(grown.k(), 6);
        assert!(matches!(
            adjust_witness_count(grown, 4),
            Err(DecomposeError::BadParams(_))
        ));
        let odd_step = adjust_witness_count(base, 4).unwrap();
        assert_eq!(odd_step.k(), 4);

        let even_l = decompose(&p("(1 2)(3 4)", 20), 2, 4).unwrap();
        assert!(matches!(
            adjust_witness_count(even_l, 3),
            Err(DecomposeError::ParityMismatch { .. })
        ));
    }

    #[test]
    fn lengthening_re_solves_at_the_target_length() {
        let sigma = p("(1 2 3)", 4);
        let w = lengthen_membership(&sigma, 2, 2, 3).unwrap();
        assert_eq!((w.k(), w.l), (2, 3));
        w.validate().unwrap();

        assert!(matches!(
            lengthen_membership(&sigma, 3, 3, 4),
            Err(DecomposeError::BadParams(_))
        ));
        assert!(matches!(
            lengthen_membership(&p("(1 2 3)", 4), 2, 4, 5),
            Err(DecomposeError::BadParams(_))
        ));
    }

    #[test]
    fn witness_records_round_trip() {
        let w = decompose(&p("(1 2 3)(4 5 6)", 20), 3, 5).unwrap();
        let rec = w.to_record();
        assert_eq!(rec.schema, WITNESS_SCHEMA);
        assert!(rec.validated);
        let json = serde_json::to_string(&rec).unwrap();
        let back: WitnessRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(Witness::from_record(&back).unwrap(), w);

        let mut bad = rec.clone();
        bad.factors[0] = "(1 2 3 4 5)".to_string();
        assert!(Witness::from_record(&bad).is_err());
        let mut bad = rec;
        bad.schema = "something/else".to_string();
        assert!(Witness::from_record(&bad).is_err());
    }
}
