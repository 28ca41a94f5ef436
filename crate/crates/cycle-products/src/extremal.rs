//! Counterexample shapes one degree above n(k,l) and their certificates.
//!
//! The exact value n(k,l) is pinned from above by a single permutation: a
//! specific cycle shape of degree n(k,l)+1 that is not a product of k
//! l-cycles. This module constructs that shape deterministically for every
//! covered (k,l) and certifies its non-membership. The certificate is an
//! inequality chain from [`crate::bounds`]: either the support count
//! already exceeds kl, or the slack kl−m−c sits below the k−2 (general) or
//! k−4 (even-split) threshold, in which case non-membership is conditional
//! on σ admitting no disjoint split into two smaller products. Within the
//! oracle ceiling the premise is discharged exactly (the type is looked up
//! in the level sets and every bipartition of the cycles is refuted) and
//! the verdict is unconditional; above the ceiling the verdict stays
//! conditional and says so.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{bound_report, BoundReport, IndecompMode, NonMembershipCertificate};
use crate::decompose::WITNESS_SCHEMA;
use crate::oracle::{class_power_types, OracleConfig, OracleError};
use crate::perm::{parse_cycles, Cycle, CycleType, Permutation};

#[derive(Debug, Error)]
pub enum ExtremalError {
    #[error("no covered counterexample family for k={k}, l={l}: {reason}")]
    Uncovered { k: usize, l: usize, reason: String },
    #[error("malformed witness: {0}")]
    Malformed(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Cycle shape of a constructed counterexample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Shape {
    AllTwoCycles,
    TwoCyclesAndThreeCycle,
    TwoCyclesAndFourCycle,
    SingleLongCycle,
}

impl Shape {
    pub fn tag(self) -> &'static str {
        match self {
            Shape::AllTwoCycles => "all-2-cycles",
            Shape::TwoCyclesAndThreeCycle => "2-cycles+one-3-cycle",
            Shape::TwoCyclesAndFourCycle => "2-cycles+one-4-cycle",
            Shape::SingleLongCycle => "single-(k+3)-cycle",
        }
    }

    pub fn from_tag(tag: &str) -> Result<Self, ExtremalError> {
        match tag {
            "all-2-cycles" => Ok(Shape::AllTwoCycles),
            "2-cycles+one-3-cycle" => Ok(Shape::TwoCyclesAndThreeCycle),
            "2-cycles+one-4-cycle" => Ok(Shape::TwoCyclesAndFourCycle),
            "single-(k+3)-cycle" => Ok(Shape::SingleLongCycle),
            other => Err(ExtremalError::Malformed(format!(
                "unknown shape tag {other:?}"
            ))),
        }
    }
}

/// The inequality chain a counterexample rests on: the exact support and
/// cycle counts, the slack kl−m−c, both thresholds, and the certificate the
/// numbers justify.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SlackChain {
    pub kl: usize,
    pub m: usize,
    pub c: usize,
    /// kl − m − c, exactly; equals the per-family constant.
    pub slack: i64,
    pub threshold_general: i64,
    pub threshold_even: i64,
    /// Which construction produced the shape.
    pub case: String,
    pub certificate: NonMembershipCertificate,
}

/// A permutation of degree n(k,l)+1 that is not a product of k l-cycles,
/// together with the inequality chain certifying that.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalWitness {
    pub k: usize,
    pub l: usize,
    /// Degree of sigma: n(k,l)+1 whenever the exact value exists. For odd
    /// k with even l there is no exact value (the products are odd
    /// permutations); the degree is then the one the recursion over k
    /// consumes.
    pub n: usize,
    pub sigma: Permutation,
    pub shape: Shape,
    /// True when sigma is an odd permutation (odd k, even l). Such shapes
    /// complete the recursion over k but are not A_n counterexamples.
    pub odd_target: bool,
    pub certificate: SlackChain,
}

/// Serialized form of an [`ExtremalWitness`]: the same record family as
/// factorization witnesses, with `member` set to false and the factor list
/// replaced by the certificate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremalRecord {
    pub schema: String,
    pub target: String,
    pub k: usize,
    pub l: usize,
    pub n: usize,
    /// Always false here; factorization witnesses (same schema) set true.
    pub member: bool,
    pub shape: String,
    pub odd_target: bool,
    pub certificate: SlackChain,
}

/// Exact oracle confirmation attached to a verdict within the ceiling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleDischarge {
    /// σ's cycle type is absent from level k of the exact level sets.
    pub type_absent: bool,
    /// No bipartition of the cycles splits σ into two sub-products that
    /// are both reachable with the admissible factor budgets.
    pub indecomposable_verified: bool,
    /// Proper bipartitions of the cycle list that were examined.
    pub bipartitions: usize,
    /// (bipartition, budget) pairs ruled out by level-set lookups.
    pub splits_refuted: usize,
}

/// Outcome of [`certify_nonmembership`]. `unconditional` holds when the
/// chain alone settles the matter (negative slack) or the oracle discharged
/// the indecomposability premise; otherwise `open_premise` names what the
/// verdict still assumes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NonMembershipVerdict {
    pub k: usize,
    pub l: usize,
    pub n: usize,
    pub unconditional: bool,
    pub certificate: NonMembershipCertificate,
    pub oracle: Option<OracleDischarge>,
    pub open_premise: Option<String>,
}

impl ExtremalWitness {
    /// The shape label shown to users; odd targets are flagged.
    pub fn shape_tag(&self) -> String {
        if self.odd_target {
            format!("{} (odd permutation)", self.shape.tag())
        } else {
            self.shape.tag().to_string()
        }
    }

    /// Rebuilds the canonical witness for (k,l) and checks this one against
    /// it: degree, shape, cycle type, and the whole inequality chain. Any
    /// permutation of the right type passes; the certificate is a statement
    /// about the conjugacy class.
    pub fn validate(&self) -> Result<(), ExtremalError> {
        let fresh = build_extremal(self.k, self.l)?;
        if self.n != fresh.n || self.sigma.degree() != self.n {
            return Err(ExtremalError::Malformed(format!(
                "degree {} (sigma: {}) does not match the family degree {}",
                self.n,
                self.sigma.degree(),
                fresh.n
            )));
        }
        if self.shape != fresh.shape || self.odd_target != fresh.odd_target {
            return Err(ExtremalError::Malformed(format!(
                "shape {} does not match the family shape {}",
                self.shape_tag(),
                fresh.shape_tag()
            )));
        }
        if self.sigma.cycle_type() != fresh.sigma.cycle_type() {
            return Err(ExtremalError::Malformed(format!(
                "cycle type {} does not match the {} shape",
                self.sigma.cycle_type().parts_string(),
                fresh.shape.tag()
            )));
        }
        if self.certificate != fresh.certificate {
            return Err(ExtremalError::Malformed(
                "certificate chain does not match the recomputed one".to_string(),
            ));
        }
        Ok(())
    }

    pub fn to_record(&self) -> ExtremalRecord {
        ExtremalRecord {
            schema: WITNESS_SCHEMA.to_string(),
            target: self.sigma.to_string(),
            k: self.k,
            l: self.l,
            n: self.n,
            member: false,
            shape: self.shape.tag().to_string(),
            odd_target: self.odd_target,
            certificate: self.certificate.clone(),
        }
    }

    /// Parses and re-validates a serialized record; none of its claims are
    /// trusted.
    pub fn from_record(rec: &ExtremalRecord) -> Result<ExtremalWitness, ExtremalError> {
        if rec.schema != WITNESS_SCHEMA {
            return Err(ExtremalError::Malformed(format!(
                "unknown witness schema {:?}",
                rec.schema
            )));
        }
        if rec.member {
            return Err(ExtremalError::Malformed(
                "record claims membership, expected a counterexample".to_string(),
            ));
        }
        let sigma = parse_cycles(&rec.target, Some(rec.n))
            .map_err(|e| ExtremalError::Malformed(format!("bad target: {e}")))?;
        let w = ExtremalWitness {
            k: rec.k,
            l: rec.l,
            n: rec.n,
            sigma,
            shape: Shape::from_tag(&rec.shape)?,
            odd_target: rec.odd_target,
            certificate: rec.certificate.clone(),
        };
        w.validate()?;
        Ok(w)
    }
}

fn two_cycle_carpet(count: usize) -> Vec<Cycle> {
    (0..count)
        .map(|i| Cycle::new(vec![2 * i + 1, 2 * i + 2]).expect("two distinct points"))
        .collect()
}

/// Constructs the counterexample of degree n(k,l)+1 for a covered (k,l).
///
/// Families and their exact slack values kl−m−c:
///
/// - l = 2, k even: the single (k+3)-cycle; slack k−4.
/// - l ≡ 1 (mod 3), l > 3: 2-cycles and one 3-cycle filling degree
///   2k(l−1)/3+3; slack k−4. For odd k and even l the shape is an odd
///   permutation (flagged): no exact value exists there, but the shape is
///   what the recursion over k consumes.
/// - l ≡ 2 (mod 3), l > 3, k ≡ 2 (mod 4): 2-cycles filling degree
///   k(2l−1)/3+2; slack k/2−3.
/// - l ≡ 2 (mod 3), l > 3, k ≡ 0 (mod 4): 2-cycles and one 4-cycle filling
///   the same degree; slack k/2−2.
/// - l ≡ 2 (mod 3), l > 3 odd, k ≡ 3 (mod 4): 2-cycles and one 3-cycle
///   filling the same degree; slack (k−5)/2.
/// - l ≡ 2 (mod 3), l > 3 odd, k ≡ 1 (mod 4): 2-cycles filling degree
///   k(2l−1)/3+1; slack (k−3)/2.
///
/// 3 | l has no covered family. The 2-cycles sit on (1 2)(3 4)…; the
/// exceptional 3- or 4-cycle takes the highest points.
pub fn build_extremal(k: usize, l: usize) -> Result<ExtremalWitness, ExtremalError> {
    let uncovered = |reason: &str| ExtremalError::Uncovered {
        k,
        l,
        reason: reason.to_string(),
    };
    if k < 2 {
        return Err(uncovered("k must be at least 2"));
    }
    if l < 2 {
        return Err(uncovered("cycle length must be at least 2"));
    }
    let (n, shape, case, expected_slack): (usize, Shape, &str, i64) = if l == 2 {
        if k % 2 == 1 {
            return Err(uncovered(
                "products of an odd number of 2-cycles are odd, so no exact degree exists",
            ));
        }
        (
            k + 3,
            Shape::SingleLongCycle,
            "single (k+3)-cycle at degree k+3",
            k as i64 - 4,
        )
    } else if l % 3 == 0 {
        return Err(uncovered(
            "no counterexample family is implemented when 3 divides l",
        ));
    } else if l % 3 == 1 {
        assert_eq!(2 * k * (l - 1) % 3, 0);
        (
            2 * k * (l - 1) / 3 + 3,
            Shape::TwoCyclesAndThreeCycle,
            "2-cycles and a 3-cycle at degree 2k(l-1)/3+3",
            k as i64 - 4,
        )
    } else {
        assert_eq!(k * (2 * l - 1) % 3, 0);
        let base = k * (2 * l - 1) / 3;
        match k % 4 {
            2 => (
                base + 2,
                Shape::AllTwoCycles,
                "2-cycles at degree k(2l-1)/3+2",
                k as i64 / 2 - 3,
            ),
            0 => (
                base + 2,
                Shape::TwoCyclesAndFourCycle,
                "2-cycles and a 4-cycle at degree k(2l-1)/3+2",
                k as i64 / 2 - 2,
            ),
            _ if l % 2 == 0 => {
                return Err(uncovered(
                    "products of odd k even-length cycles are odd, so no exact degree exists",
                ))
            }
            3 => (
                base + 2,
                Shape::TwoCyclesAndThreeCycle,
                "2-cycles and a 3-cycle at degree k(2l-1)/3+2",
                (k as i64 - 5) / 2,
            ),
            _ => (
                base + 1,
                Shape::AllTwoCycles,
                "2-cycles at degree k(2l-1)/3+1",
                (k as i64 - 3) / 2,
            ),
        }
    };
    let cycles = match shape {
        Shape::AllTwoCycles => two_cycle_carpet(n / 2),
        Shape::TwoCyclesAndThreeCycle => {
            let mut v = two_cycle_carpet((n - 3) / 2);
            v.push(Cycle::new(vec![n - 2, n - 1, n]).expect("three distinct points"));
            v
        }
        Shape::TwoCyclesAndFourCycle => {
            let mut v = two_cycle_carpet((n - 4) / 2);
            v.push(Cycle::new(vec![n - 3, n - 2, n - 1, n]).expect("four distinct points"));
            v
        }
        Shape::SingleLongCycle => {
            vec![Cycle::new((1..=n).collect()).expect("at least five points")]
        }
    };
    let sigma = Permutation::from_cycles(&cycles, n).expect("layout fits the degree");
    let odd_target = !sigma.is_even();
    assert!(
        !odd_target || (k % 2 == 1 && l % 2 == 0),
        "unexpected odd shape for k={k}, l={l}"
    );
    let stats = sigma.stats();
    assert_eq!(stats.m, n, "the shape must move every point");
    let report = bound_report(&stats, k, l);
    assert_eq!(
        report.slack, expected_slack,
        "slack drifted from the family constant for k={k}, l={l}"
    );
    let certificate = SlackChain {
        kl: report.kl,
        m: report.m,
        c: report.c,
        slack: report.slack,
        threshold_general: report.threshold_general,
        threshold_even: report.threshold_even,
        case: case.to_string(),
        certificate: pick_certificate(&report, k, l),
    };
    Ok(ExtremalWitness {
        k,
        l,
        n,
        sigma,
        shape,
        odd_target,
        certificate,
    })
}

/// The weakest certificate the numbers support: a negative slack needs no
/// premise at all, otherwise the even-split threshold is preferred (fewer
/// splits to rule out) over the general one.
fn pick_certificate(report: &BoundReport, k: usize, l: usize) -> NonMembershipCertificate {
    if report.slack < 0 {
        NonMembershipCertificate::SupportCount {
            k,
            l,
            m: report.m,
            c: report.c,
            kl: report.kl,
        }
    } else if k % 2 == 0 && report.below_even {
        NonMembershipCertificate::ConditionalIndecomposable {
            mode: IndecompMode::Even,
            k,
            l,
            slack: report.slack,
            threshold: report.threshold_even,
        }
    } else {
        assert!(
            report.below_general,
            "family slack must sit below the general threshold"
        );
        NonMembershipCertificate::ConditionalIndecomposable {
            mode: IndecompMode::General,
            k,
            l,
            slack: report.slack,
            threshold: report.threshold_general,
        }
    }
}

/// Certifies that the witness is not a product of k l-cycles.
///
/// The inequality chain is re-validated first. Within the oracle ceiling
/// the verdict is made unconditional by exact computation: the cycle type
/// is confirmed absent from level k, and the indecomposability premise is
/// discharged by refuting every bipartition of the cycles against the level
/// sets of the two sides. Above the ceiling the verdict is conditional
/// (never an error) unless the slack is negative, which needs no premise.
pub fn certify_nonmembership(
    w: &ExtremalWitness,
    config: &OracleConfig,
) -> Result<NonMembershipVerdict, ExtremalError> {
    w.validate()?;
    let chain = &w.certificate;
    let oracle = if w.n <= config.ceiling {
        let rt = class_power_types(w.n, w.l, w.k, config)?;
        if rt.contains(&w.sigma.cycle_type(), w.k) {
            return Err(ExtremalError::Malformed(format!(
                "the oracle reaches type {} with {} {}-cycles at degree {}, so the witness is a member",
                w.sigma.cycle_type().parts_string(),
                w.k,
                w.l,
                w.n
            )));
        }
        let scan_mode = match &chain.certificate {
            NonMembershipCertificate::ConditionalIndecomposable { mode, .. } => *mode,
            _ => IndecompMode::General,
        };
        let (verified, bipartitions, refuted) =
            refute_splits(&w.sigma, w.k, w.l, scan_mode, config)?;
        Some(OracleDischarge {
            type_absent: true,
            indecomposable_verified: verified,
            bipartitions,
            splits_refuted: refuted,
        })
    } else {
        None
    };
    let unconditional = chain.slack < 0 || oracle.is_some();
    let open_premise = match (&chain.certificate, unconditional) {
        (_, true) => None,
        (NonMembershipCertificate::ConditionalIndecomposable { mode, .. }, false) => {
            let budgets = match mode {
                IndecompMode::General => "any 2 ≤ k′ ≤ k−2",
                IndecompMode::Even => "any even 2 ≤ k′ ≤ k−2",
            };
            Some(format!(
                "σ admits no disjoint split into products of k′ and k−k′ {}-cycles for {budgets} \
                 (not machine-checked above the oracle ceiling {})",
                w.l, config.ceiling
            ))
        }
        _ => None,
    };
    Ok(NonMembershipVerdict {
        k: w.k,
        l: w.l,
        n: w.n,
        unconditional,
        certificate: chain.certificate.clone(),
        oracle,
        open_premise,
    })
}

/// Tries every proper bipartition of σ's cycles and every admissible factor
/// budget, asking the oracle whether both sides are reachable on their own
/// supports. Returns (no split works, bipartitions tried, (bipartition,
/// budget) pairs refuted). Sides smaller than l are infeasible outright; a
/// split with an admissible budget on both sides would contradict
/// indecomposability, so finding none verifies the premise exactly.
fn refute_splits(
    sigma: &Permutation,
    k: usize,
    l: usize,
    mode: IndecompMode,
    config: &OracleConfig,
) -> Result<(bool, usize, usize), ExtremalError> {
    let cycles = sigma.dcd_star();
    let q = cycles.len();
    let budgets: Vec<usize> = (2..=k.saturating_sub(2))
        .filter(|kp| mode == IndecompMode::General || kp % 2 == 0)
        .collect();
    if q < 2 || budgets.is_empty() {
        return Ok((true, 0, 0));
    }
    debug_assert!(q <= 16, "bipartition scan is a desk-scale tool");
    let lens: Vec<usize> = cycles.iter().map(Cycle::len).collect();
    let mut cache: HashMap<(Vec<usize>, usize), bool> = HashMap::new();
    let mut side = |lengths: &mut Vec<usize>, budget: usize| -> Result<bool, OracleError> {
        let m: usize = lengths.iter().sum();
        if m < l {
            return Ok(false);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        if let Some(&v) = cache.get(&(lengths.clone(), budget)) {
            return Ok(v);
        }
        let t = CycleType::new(lengths.clone(), m).expect("parts ≥ 2 summing to the degree");
        let v = class_power_types(m, l, budget, config)?.contains(&t, budget);
        cache.insert((lengths.clone(), budget), v);
        Ok(v)
    };
    let mut bipartitions = 0usize;
    let mut refuted = 0usize;
    // Cycle 0 stays on side A, so each unordered bipartition appears once;
    // the all-ones mask leaves side B empty and is skipped.
    for mask in 0..(1u64 << (q - 1)) - 1 {
        let mut a = vec![lens[0]];
        let mut b = Vec::new();
        for (i, &len) in lens.iter().enumerate().skip(1) {
            if mask & (1 << (i - 1)) != 0 {
                a.push(len);
            } else {
                b.push(len);
            }
        }
        bipartitions += 1;
        for &kp in &budgets {
            if side(&mut a, kp)? && side(&mut b, k - kp)? {
                return Ok((false, bipartitions, refuted));
            }
            refuted += 1;
        }
    }
    Ok((true, bipartitions, refuted))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{n_k_l, BoundsError};
    use crate::oracle::is_member_oracle;

    fn cfg() -> OracleConfig {
        OracleConfig {
            ceiling: 16,
            cache_dir: None,
        }
    }

    #[test]
    fn covered_shapes_degrees_and_slacks_are_frozen() {
        let expect = [
            (2, 2, 5, "single-(k+3)-cycle", -2, Some("(1 2 3 4 5)")),
            (4, 2, 7, "single-(k+3)-cycle", 0, None),
            (6, 2, 9, "single-(k+3)-cycle", 2, Some("(1 2 3 4 5 6 7 8 9)")),
            (2, 4, 7, "2-cycles+one-3-cycle", -2, Some("(1 2)(3 4)(5 6 7)")),
            (2, 7, 11, "2-cycles+one-3-cycle", -2, None),
            (6, 4, 15, "2-cycles+one-3-cycle", 2, None),
            (3, 7, 15, "2-cycles+one-3-cycle", -1, None),
            (2, 5, 8, "all-2-cycles", -2, Some("(1 2)(3 4)(5 6)(7 8)")),
            (6, 8, 32, "all-2-cycles", 0, None),
            (4, 5, 14, "2-cycles+one-4-cycle", 0, None),
            (8, 5, 26, "2-cycles+one-4-cycle", 2, None),
            (3, 5, 11, "2-cycles+one-3-cycle", -1, None),
            (7, 5, 23, "2-cycles+one-3-cycle", 1, None),
            (5, 5, 16, "all-2-cycles", 1, None),
            (9, 5, 28, "all-2-cycles", 3, None),
        ];
        for (k, l, n, tag, slack, layout) in expect {
            let w = build_extremal(k, l).unwrap();
            assert_eq!((w.n, w.shape.tag()), (n, tag), "for k={k}, l={l}");
            assert_eq!(w.certificate.slack, slack, "for k={k}, l={l}");
            assert!(!w.odd_target);
            if let Some(text) = layout {
                assert_eq!(w.sigma.to_string(), text, "for k={k}, l={l}");
            }
        }
    }

    #[test]
    fn degrees_sit_one_above_the_exact_value() {
        for k in 2..=13 {
            for l in [2, 4, 5, 7, 8, 10, 11, 13, 14] {
                let w = match build_extremal(k, l) {
                    Ok(w) => w,
                    Err(ExtremalError::Uncovered { .. }) => continue,
                    Err(e) => panic!("unexpected error for k={k}, l={l}: {e}"),
                };
                let stats = w.sigma.stats();
                assert_eq!(stats.m, w.n, "full support for k={k}, l={l}");
                assert_eq!(stats.count_of(l), 0, "no l-cycle part for k={k}, l={l}");
                assert_eq!(
                    w.certificate.slack,
                    (k * l) as i64 - stats.m as i64 - stats.c as i64
                );
                if w.odd_target {
                    assert!(!w.sigma.is_even());
                    assert!(n_k_l(k, l).is_err());
                } else {
                    assert!(w.sigma.is_even());
                    assert_eq!(w.n, n_k_l(k, l).unwrap().value + 1, "for k={k}, l={l}");
                }
            }
        }
    }

    #[test]
    fn odd_k_with_even_l_is_built_but_flagged() {
        let w = build_extremal(3, 4).unwrap();
        assert_eq!(w.n, 9);
        assert!(w.odd_target);
        assert_eq!(w.shape_tag(), "2-cycles+one-3-cycle (odd permutation)");
        assert_eq!(w.certificate.slack, -1);
        assert!(matches!(
            n_k_l(3, 4),
            Err(BoundsError::ParityInfeasible(3, 4))
        ));
        let v = certify_nonmembership(&w, &cfg()).unwrap();
        assert!(v.unconditional);
        assert!(v.oracle.unwrap().type_absent);
    }

    #[test]
    fn uncovered_pairs_are_rejected() {
        for (k, l) in [(2, 3), (5, 3), (2, 6), (4, 9), (3, 2), (5, 8), (1, 5), (2, 1)] {
            assert!(
                matches!(
                    build_extremal(k, l),
                    Err(ExtremalError::Uncovered { .. })
                ),
                "expected uncovered for k={k}, l={l}"
            );
        }
    }

    #[test]
    fn certificates_escalate_from_support_count_to_conditional() {
        let support = build_extremal(2, 5).unwrap().certificate.certificate;
        assert_eq!(
            support,
            NonMembershipCertificate::SupportCount {
                k: 2,
                l: 5,
                m: 8,
                c: 4,
                kl: 10
            }
        );
        let general = build_extremal(6, 2).unwrap().certificate.certificate;
        assert_eq!(
            general,
            NonMembershipCertificate::ConditionalIndecomposable {
                mode: IndecompMode::General,
                k: 6,
                l: 2,
                slack: 2,
                threshold: 4
            }
        );
        let even = build_extremal(8, 5).unwrap().certificate.certificate;
        assert_eq!(
            even,
            NonMembershipCertificate::ConditionalIndecomposable {
                mode: IndecompMode::Even,
                k: 8,
                l: 5,
                slack: 2,
                threshold: 4
            }
        );
        let odd_k = build_extremal(7, 5).unwrap().certificate.certificate;
        assert!(matches!(
            odd_k,
            NonMembershipCertificate::ConditionalIndecomposable {
                mode: IndecompMode::General,
                slack: 1,
                threshold: 5,
                ..
            }
        ));
    }

    #[test]
    fn desk_verdicts_are_unconditional_and_pin_the_exact_value() {
        for (k, l) in [(2, 4), (2, 5), (6, 2), (3, 5), (4, 4)] {
            let w = build_extremal(k, l).unwrap();
            let v = certify_nonmembership(&w, &cfg()).unwrap();
            assert!(v.unconditional, "for k={k}, l={l}");
            assert!(v.open_premise.is_none());
            let o = v.oracle.expect("within the ceiling");
            assert!(o.type_absent && o.indecomposable_verified, "for k={k}, l={l}");
            assert!(!is_member_oracle(&w.sigma, k, l, &cfg()).unwrap());
            // One degree below, every even type is reachable: the two facts
            // together pin n(k,l).
            let exact = n_k_l(k, l).unwrap().value;
            assert_eq!(exact + 1, w.n);
            let rt = class_power_types(exact, l, k, &cfg()).unwrap();
            assert!(rt.covers_alternating(k), "for k={k}, l={l}");
        }
    }

    #[test]
    fn refutation_scan_counts_real_splits() {
        // Four 2-cycles, k=2: no budgets exist between 2 and k−2.
        let w = build_extremal(2, 5).unwrap();
        let v = certify_nonmembership(&w, &cfg()).unwrap();
        let o = v.oracle.unwrap();
        assert_eq!((o.bipartitions, o.splits_refuted), (0, 0));

        // Single 9-cycle, k=6: budgets exist but there is only one cycle.
        let w = build_extremal(6, 2).unwrap();
        let v = certify_nonmembership(&w, &cfg()).unwrap();
        let o = v.oracle.unwrap();
        assert_eq!((o.bipartitions, o.splits_refuted), (0, 0));

        // Four 2-cycles and a 3-cycle, k=3: the budget range 2 ≤ k′ ≤ 1 is
        // empty, so indecomposability holds vacuously.
        let w = build_extremal(3, 5).unwrap();
        let v = certify_nonmembership(&w, &cfg()).unwrap();
        let o = v.oracle.unwrap();
        assert!(o.indecomposable_verified);
        assert_eq!((o.bipartitions, o.splits_refuted), (0, 0));

        // Four 2-cycles and a 3-cycle, k=4: 15 bipartitions, one general
        // budget k′=2 each, all refuted by level-set lookups.
        let w = build_extremal(4, 4).unwrap();
        let v = certify_nonmembership(&w, &cfg()).unwrap();
        let o = v.oracle.unwrap();
        assert!(o.indecomposable_verified);
        assert_eq!((o.bipartitions, o.splits_refuted), (15, 15));
    }

    #[test]
    fn beyond_the_ceiling_verdicts_stay_conditional() {
        let w = build_extremal(14, 5).unwrap();
        assert_eq!(w.n, 44);
        let v = certify_nonmembership(&w, &cfg()).unwrap();
        assert!(!v.unconditional);
        assert!(v.oracle.is_none());
        assert!(matches!(
            v.certificate,
            NonMembershipCertificate::ConditionalIndecomposable {
                mode: IndecompMode::Even,
                slack: 4,
                threshold: 10,
                ..
            }
        ));
        assert!(v.open_premise.unwrap().contains("even 2 ≤ k′"));

        let v = certify_nonmembership(&build_extremal(9, 5).unwrap(), &cfg()).unwrap();
        assert!(!v.unconditional);
        assert!(v.open_premise.unwrap().contains("any 2 ≤ k′"));
    }

    #[test]
    fn records_round_trip_and_reject_tampering() {
        let w = build_extremal(4, 5).unwrap();
        let rec = w.to_record();
        assert_eq!(rec.schema, WITNESS_SCHEMA);
        assert!(!rec.member);
        assert_eq!(rec.shape, "2-cycles+one-4-cycle");
        let json = serde_json::to_string(&rec).unwrap();
        let back: ExtremalRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(ExtremalWitness::from_record(&back).unwrap(), w);

        let mut bad = rec.clone();
        bad.certificate.slack = 1;
        assert!(ExtremalWitness::from_record(&bad).is_err());
        let mut bad = rec.clone();
        bad.shape = "all-2-cycles".to_string();
        assert!(ExtremalWitness::from_record(&bad).is_err());
        let mut bad = rec.clone();
        bad.member = true;
        assert!(ExtremalWitness::from_record(&bad).is_err());
        let mut bad = rec.clone();
        bad.target = "(1 2)(3 4)".to_string();
        assert!(ExtremalWitness::from_record(&bad).is_err());
        let mut bad = rec;
        bad.schema = "something/else".to_string();
        assert!(ExtremalWitness::from_record(&bad).is_err());

        // A conjugate of the canonical witness certifies the same class.
        let moved = parse_cycles("(2 1)(3 5)(4 6)(8 9)(10 14)(7 11 12 13)", Some(14)).unwrap();
        let conjugate = ExtremalWitness {
            sigma: moved,
            ..w.clone()
        };
        conjugate.validate().unwrap();
    }

    #[test]
    #[ignore = "the slow full-scan path (class BFS at degree 16); run with --ignored"]
    fn five_five_discharges_at_the_full_ceiling() {
        let w = build_extremal(5, 5).unwrap();
        assert_eq!(w.n, 16);
        let v = certify_nonmembership(&w, &cfg()).unwrap();
        assert!(v.unconditional);
        let o = v.oracle.unwrap();
        assert!(o.type_absent && o.indecomposable_verified);
    }
}
