//! Exact-rational audits of the closed-form inequalities behind the solver's
//! theory: the availability bounds used when attaching vertices one by one,
//! the tail-sum bound on sorted multiplicities, and the order-statistic
//! lower-bound chains evaluated on concrete profiles.
//!
//! Every family audited here is affine in the edge count h, so a claim over
//! all h at least C(r, 2) reduces to two rational checks: the h-coefficient
//! is nonnegative, and the value at the base point is nonnegative.  That
//! reduction is [`crate::rational::affine_nonneg_on_ray`], itself unit-tested
//! on synthetic affine functions.  No floating point appears anywhere in
//! this module.

use num::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::MultiGraph;
use crate::pattern::PatternMultigraph;
use crate::rational::{affine_nonneg_on_ray, binom2_rat, rat, rat_i, rat_u, Rational};

/// Half the pattern order, rounded up: the pivot index for the availability
/// and tail-sum bounds.
fn half_up(r: usize) -> usize {
    (r + 1) / 2
}

/// The pivotal capacity h - r(r-2)/4 + 1 as an exact rational.
fn pivotal_capacity(r: usize, h: &Rational) -> Rational {
    h - rat((r * (r - 2)) as i64, 4) + rat_i(1)
}

/// One parameter tuple of an availability sweep with its margin at the base
/// point h = C(r, 2) and the h-coefficient of the margin.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MarginCase {
    pub r: usize,
    pub ell: usize,
    /// Attachment step index; absent for the final-step family.
    pub i: Option<usize>,
    pub slope: String,
    pub margin_at_base: String,
}

/// Outcome of sweeping one inequality family over all parameter tuples up to
/// `r_max`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepReport {
    pub family: String,
    pub r_max: usize,
    pub cases_checked: u64,
    /// The case with the smallest margin at the base point.
    pub worst_margin: Option<MarginCase>,
    /// Cases where the margin goes negative for some h >= C(r, 2).
    pub violations: Vec<MarginCase>,
}

impl SweepReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

struct SweepState {
    cases: u64,
    worst: Option<(Rational, MarginCase)>,
    violations: Vec<MarginCase>,
}

impl SweepState {
    fn new() -> Self {
        SweepState {
            cases: 0,
            worst: None,
            violations: Vec::new(),
        }
    }

    fn record(&mut self, r: usize, ell: usize, i: Option<usize>, slope: Rational, base: Rational) {
        self.cases += 1;
        let case = MarginCase {
            r,
            ell,
            i,
            slope: slope.to_string(),
            margin_at_base: base.to_string(),
        };
        if !affine_nonneg_on_ray(&slope, &base) {
            self.violations.push(case.clone());
        }
        let replace = match &self.worst {
            None => true,
            Some((best, _)) => base < *best,
        };
        if replace {
            self.worst = Some((base, case));
        }
    }

    fn finish(self, family: &str, r_max: usize) -> SweepReport {
        SweepReport {
            family: family.to_string(),
            r_max,
            cases_checked: self.cases,
            worst_margin: self.worst.map(|(_, case)| case),
            violations: self.violations,
        }
    }
}

/// Margin of the per-step availability bound: the ℓ-th largest multiplicity
/// toward earlier vertices at attachment step i exceeds
/// h - ((ℓ-1)·s + r - i) whenever
/// (2/r)(r - 2 - (ℓ-1)/(i-ℓ)) · (pivotal capacity) does.  The margin is the
/// difference of the two lower bounds, affine in h.
fn step_availability_margin(r: usize, ell: usize, i: usize, h: &Rational) -> Rational {
    let s = half_up(r);
    let coeff = rat(2, r as i64) * (rat_i((r - 2) as i64) - rat((ell - 1) as i64, (i - ell) as i64));
    coeff * pivotal_capacity(r, h) - h + rat_u(((ell - 1) * s + r - i) as u64)
}

/// Sweep the per-step availability bound over every admissible (r, ℓ, i)
/// with 5 <= r <= r_max: either 2 <= ℓ <= s-2 with r-s+1 <= i <= r-1, or
/// ℓ = s-1 with r-s+2 <= i <= r-1, where s is half of r rounded up.  Each
/// case is verified for all h >= C(r, 2) by the slope-and-base reduction.
pub fn check_step_availability_bounds(r_max: usize) -> Result<SweepReport> {
    if r_max < 5 {
        return Err(Error::invalid(format!(
            "availability sweeps start at r = 5, got r_max = {r_max}"
        )));
    }
    let mut state = SweepState::new();
    for r in 5..=r_max {
        let s = half_up(r);
        let base_h = binom2_rat(r as u64);
        let run = |ell: usize, i: usize, state: &mut SweepState| {
            let slope = rat(2, r as i64)
                * (rat_i((r - 2) as i64) - rat((ell - 1) as i64, (i - ell) as i64))
                - rat_i(1);
            let base = step_availability_margin(r, ell, i, &base_h);
            state.record(r, ell, Some(i), slope, base);
        };
        if s >= 4 {
            for ell in 2..=s - 2 {
                for i in r - s + 1..=r - 1 {
                    run(ell, i, &mut state);
                }
            }
        }
        if s >= 3 {
            let ell = s - 1;
            for i in r - s + 2..=r - 1 {
                run(ell, i, &mut state);
            }
        }
    }
    Ok(state.finish("step-availability", r_max))
}

/// Margin of the final-step availability bound: the ℓ-th largest apex
/// multiplicity exceeds h - (ℓ-1)·s whenever
/// 2·(r-ℓ-1)/(r-ℓ) · (r-1)/r · (pivotal capacity) does.
fn final_availability_margin(r: usize, ell: usize, h: &Rational) -> Rational {
    let s = half_up(r);
    let coeff = rat(2 * (r - ell - 1) as i64, (r - ell) as i64) * rat((r - 1) as i64, r as i64);
    coeff * pivotal_capacity(r, h) - h + rat_u(((ell - 1) * s) as u64)
}

/// Sweep the final-step availability bound over 5 <= r <= r_max and
/// 2 <= ℓ <= s-1, verified for all h >= C(r, 2).
pub fn check_final_availability_bounds(r_max: usize) -> Result<SweepReport> {
    if r_max < 5 {
        return Err(Error::invalid(format!(
            "availability sweeps start at r = 5, got r_max = {r_max}"
        )));
    }
    let mut state = SweepState::new();
    for r in 5..=r_max {
        let s = half_up(r);
        let base_h = binom2_rat(r as u64);
        for ell in 2..=s - 1 {
            let coeff =
                rat(2 * (r - ell - 1) as i64, (r - ell) as i64) * rat((r - 1) as i64, r as i64);
            let slope = coeff - rat_i(1);
            let base = final_availability_margin(r, ell, &base_h);
            state.record(r, ell, None, slope, base);
        }
    }
    Ok(state.finish("final-availability", r_max))
}

/// One row of a tail-sum audit.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TailSumRow {
    pub j: usize,
    pub tail_sum: u64,
    pub bound: String,
    pub margin: String,
    pub holds: bool,
}

/// Outcome of auditing the tail-sum bound on one pattern.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TailSumReport {
    pub r: usize,
    pub h: u64,
    pub rows: Vec<TailSumRow>,
}

impl TailSumReport {
    pub fn pass(&self) -> bool {
        self.rows.iter().all(|row| row.holds)
    }
}

/// Audit the tail-sum bound on a pattern whose pairs all have multiplicity
/// at least one: with multiplicities sorted in decreasing order, the sum of
/// entries s through s+j-1 is at most j/(s+j-1) times the pivotal capacity,
/// for every j up to s+1.  Requires r >= 5; a violation would be of high
/// interest, since the bound is proved for every such pattern.
pub fn check_tail_sum_bounds(pattern: &PatternMultigraph) -> Result<TailSumReport> {
    let r = pattern.r();
    if r < 5 {
        return Err(Error::invalid(format!(
            "tail-sum bounds need r >= 5, got r = {r}"
        )));
    }
    let weights = pattern.weights().weights();
    if weights.iter().any(|&w| w == 0) {
        return Err(Error::invalid(
            "tail-sum bounds need every pair multiplicity to be at least 1",
        ));
    }
    let s = half_up(r);
    let h = pattern.h();
    let capacity = pivotal_capacity(r, &rat_u(h));
    let mut sorted = weights.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut rows = Vec::with_capacity(s + 1);
    for j in 1..=s + 1 {
        let tail_sum: u64 = sorted[s - 1..s + j - 1]
            .iter()
            .map(|&w| u64::from(w))
            .sum();
        let bound = rat(j as i64, (s + j - 1) as i64) * capacity.clone();
        let margin = bound.clone() - rat_u(tail_sum);
        rows.push(TailSumRow {
            j,
            tail_sum,
            bound: bound.to_string(),
            margin: margin.to_string(),
            holds: !margin.is_negative(),
        });
    }
    Ok(TailSumReport { r, h, rows })
}

/// Which end of the sorted order an order statistic counts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Extreme {
    Min,
    Max,
}

/// The ℓ-th smallest (or largest) element of a list, 1-based.
pub fn order_statistic(values: &[u32], ell: usize, mode: Extreme) -> Result<u32> {
    if ell == 0 || ell > values.len() {
        return Err(Error::invalid(format!(
            "order statistic {ell} of a list of {} values",
            values.len()
        )));
    }
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    Ok(match mode {
        Extreme::Min => sorted[ell - 1],
        Extreme::Max => sorted[values.len() - ell],
    })
}

/// One audited link of an order-statistic chain: the observed statistic,
/// then the successive lower bounds it is guaranteed to dominate.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DegreeSumRow {
    pub name: String,
    /// Attachment step in 1-based vertex order; the apex rows use r.
    pub i: usize,
    pub ell: Option<usize>,
    pub value: u32,
    /// Lower bound from the order-statistic identity on the recorded sum.
    pub identity_bound: String,
    /// Lower bound after substituting the degree-sum hypothesis.
    pub k_bound: String,
    /// Lower bound after substituting the hypothesis on k.
    pub h_bound: String,
    /// Final closed-form bound in h, where one applies.
    pub extra_bound: Option<String>,
    pub holds: bool,
}

/// Outcome of auditing the order-statistic chains on a concrete profile.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DegreeSumAudit {
    pub r: usize,
    pub k: u32,
    pub h: u64,
    pub rows: Vec<DegreeSumRow>,
}

impl DegreeSumAudit {
    pub fn pass(&self) -> bool {
        self.rows.iter().all(|row| row.holds)
    }
}

/// How a chain's optional closing bound is justified.
enum ExtraLink {
    /// The h-form bound dominates the closing bound outright (weakly or
    /// strictly), so the closing bound follows transitively.
    FromHForm { bound: Rational, strict: bool },
    /// The value is an integer strictly above the h-form bound, so it
    /// reaches the next integer up; only the value is compared.
    Integrality { bound: Rational },
}

struct ChainChecker {
    rows: Vec<DegreeSumRow>,
}

impl ChainChecker {
    /// Record one chain: value >= identity >= k_form > h_form, optionally
    /// closed by an extra bound.  The first two comparisons are weak and the
    /// k-to-h link is strict (it consumes the strict hypothesis on k).
    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        name: &str,
        i: usize,
        ell: Option<usize>,
        value: u32,
        identity: Rational,
        k_form: Rational,
        h_form: Rational,
        extra: Option<ExtraLink>,
    ) {
        let value_rat = rat_u(u64::from(value));
        let mut holds = value_rat >= identity && identity >= k_form && k_form > h_form;
        let extra_bound = match &extra {
            None => None,
            Some(ExtraLink::FromHForm { bound, strict }) => {
                holds &= if *strict {
                    h_form > *bound
                } else {
                    h_form >= *bound
                };
                holds &= value_rat >= *bound;
                Some(bound.to_string())
            }
            Some(ExtraLink::Integrality { bound }) => {
                holds &= value_rat >= *bound;
                Some(bound.to_string())
            }
        };
        self.rows.push(DegreeSumRow {
            name: name.to_string(),
            i,
            ell,
            value,
            identity_bound: identity.to_string(),
            k_bound: k_form.to_string(),
            h_bound: h_form.to_string(),
            extra_bound,
            holds,
        });
    }
}

/// Audit the order-statistic lower-bound chains on a concrete multiplicity
/// profile over vertices v_1, ..., v_{r-1} (pass r-1 vertices), optionally
/// extended by an apex vertex v_r (pass r vertices).  For each attachment
/// step i the row toward earlier vertices must carry degree sum at least
/// k·(r-2)/(r-1)·(i-1); the apex must carry total at least (r-2)·k with
/// every multiplicity positive.  Requires
/// k > max{(r-1)/(r-2)·(h-1), 2·(r-1)/r·(pivotal capacity)}.
///
/// Under those hypotheses every audited link is a theorem; any false row
/// signals an algebra error and is of high interest.
pub fn check_degree_sum_bounds(
    r: usize,
    k: u32,
    h: u64,
    profile: &MultiGraph,
) -> Result<DegreeSumAudit> {
    if r < 5 {
        return Err(Error::invalid(format!("chains need r >= 5, got r = {r}")));
    }
    let with_apex = match profile.n() {
        n if n == r - 1 => false,
        n if n == r => true,
        n => {
            return Err(Error::invalid(format!(
                "profile must have r-1 = {} or r = {r} vertices, got {n}",
                r - 1
            )))
        }
    };
    if u64::from(profile.max_multiplicity()) > u64::from(k) {
        return Err(Error::invalid(
            "profile multiplicities must not exceed the color count",
        ));
    }
    let h_rat = rat_u(h);
    let capacity = pivotal_capacity(r, &h_rat);
    let k_rat = rat_u(u64::from(k));
    let k_floor_a = rat((r - 1) as i64, (r - 2) as i64) * (h_rat.clone() - rat_i(1));
    let k_floor_b = rat(2 * (r - 1) as i64, r as i64) * capacity.clone();
    if k_rat <= k_floor_a || k_rat <= k_floor_b {
        return Err(Error::invalid(format!(
            "k must exceed max({k_floor_a}, {k_floor_b}), got {k}"
        )));
    }
    let s = half_up(r);

    let mut checker = ChainChecker { rows: Vec::new() };
    for i in r - s + 1..=r - 1 {
        // Paper-style 1-based step i corresponds to 0-based vertex i-1.
        let row: Vec<u32> = (0..i - 1).map(|j| profile.multiplicity(j, i - 1)).collect();
        let sum: u64 = row.iter().map(|&w| u64::from(w)).sum();
        let sum_rat = rat_u(sum);
        let needed = k_rat.clone() * rat((r - 2) as i64, (r - 1) as i64) * rat_i((i - 1) as i64);
        if sum_rat < needed {
            return Err(Error::invalid(format!(
                "step {i} carries degree sum {sum}, needs at least {needed}"
            )));
        }

        let min1 = order_statistic(&row, 1, Extreme::Min)?;
        checker.push(
            "step-min",
            i,
            None,
            min1,
            sum_rat.clone() - rat_i((i - 2) as i64) * k_rat.clone(),
            k_rat.clone() * rat((r - i) as i64, (r - 1) as i64),
            rat_u((r - i) as u64) * rat(2, r as i64) * capacity.clone(),
            None,
        );

        let min2 = order_statistic(&row, 2, Extreme::Min)?;
        checker.push(
            "step-second-min",
            i,
            None,
            min2,
            (sum_rat.clone() - rat_i(i as i64 - 3) * k_rat.clone()) / rat_i(2),
            k_rat.clone() * rat((2 * r - i - 1) as i64, 2 * (r - 1) as i64),
            rat((2 * r - i - 1) as i64, r as i64) * capacity.clone(),
            Some(ExtraLink::FromHForm {
                bound: capacity.clone(),
                strict: false,
            }),
        );

        let max1 = order_statistic(&row, 1, Extreme::Max)?;
        checker.push(
            "step-max",
            i,
            None,
            max1,
            sum_rat.clone() / rat_i((i - 1) as i64),
            k_rat.clone() * rat((r - 2) as i64, (r - 1) as i64),
            h_rat.clone() - rat_i(1),
            None,
        );

        for ell in 2..=i.saturating_sub(2) {
            let maxl = order_statistic(&row, ell, Extreme::Max)?;
            let coeff =
                rat(2, r as i64) * (rat_i((r - 2) as i64) - rat((ell - 1) as i64, (i - ell) as i64));
            let case_i = 2 <= ell && ell + 2 <= s && r - s + 1 <= i;
            let case_ii = ell + 1 == s && r - s + 2 <= i;
            let extra = (case_i || case_ii).then(|| ExtraLink::FromHForm {
                bound: h_rat.clone() - rat_u(((ell - 1) * s + r - i) as u64),
                strict: false,
            });
            checker.push(
                "step-top-ell",
                i,
                Some(ell),
                maxl,
                (sum_rat.clone() - rat_i((ell - 1) as i64) * k_rat.clone())
                    / rat_i((i - ell) as i64),
                k_rat.clone()
                    * (rat((r - 2) as i64, (r - 1) as i64)
                        - rat((ell - 1) as i64, ((r - 1) * (i - ell)) as i64)),
                coeff * capacity.clone(),
                extra,
            );
        }
    }

    if with_apex {
        let apex: Vec<u32> = (0..r - 1).map(|j| profile.multiplicity(j, r - 1)).collect();
        let sum: u64 = apex.iter().map(|&w| u64::from(w)).sum();
        let sum_rat = rat_u(sum);
        if apex.iter().any(|&w| w == 0) {
            return Err(Error::invalid("apex multiplicities must all be positive"));
        }
        let needed = rat_i((r - 2) as i64) * k_rat.clone();
        if sum_rat < needed {
            return Err(Error::invalid(format!(
                "apex carries total {sum}, needs at least {needed}"
            )));
        }

        let min2 = order_statistic(&apex, 2, Extreme::Min)?;
        checker.push(
            "apex-second-min",
            r,
            None,
            min2,
            (sum_rat.clone() - rat_i((r - 3) as i64) * k_rat.clone()) / rat_i(2),
            k_rat.clone() / rat_i(2),
            rat((r - 1) as i64, r as i64) * capacity.clone(),
            None,
        );

        let min3 = order_statistic(&apex, 3, Extreme::Min)?;
        checker.push(
            "apex-third-min",
            r,
            None,
            min3,
            (sum_rat.clone() - rat_i((r - 4) as i64) * k_rat.clone()) / rat_i(3),
            k_rat.clone() * rat(2, 3),
            rat(4, 3) * rat((r - 1) as i64, r as i64) * capacity.clone(),
            Some(ExtraLink::FromHForm {
                bound: capacity.clone(),
                strict: true,
            }),
        );

        let max1 = order_statistic(&apex, 1, Extreme::Max)?;
        checker.push(
            "apex-max",
            r,
            None,
            max1,
            sum_rat.clone() / rat_i((r - 1) as i64),
            k_rat.clone() * rat((r - 2) as i64, (r - 1) as i64),
            h_rat.clone() - rat_i(1),
            Some(ExtraLink::Integrality {
                bound: h_rat.clone(),
            }),
        );

        for ell in 2..=s - 1 {
            let maxl = order_statistic(&apex, ell, Extreme::Max)?;
            let coeff =
                rat(2 * (r - ell - 1) as i64, (r - ell) as i64) * rat((r - 1) as i64, r as i64);
            checker.push(
                "apex-top-ell",
                r,
                Some(ell),
                maxl,
                (sum_rat.clone() - rat_i((ell - 1) as i64) * k_rat.clone())
                    / rat_i((r - ell) as i64),
                k_rat.clone() * rat((r - ell - 1) as i64, (r - ell) as i64),
                coeff * capacity.clone(),
                Some(ExtraLink::FromHForm {
                    bound: h_rat.clone() - rat_u(((ell - 1) * s) as u64),
                    strict: false,
                }),
            );
        }
    }

    Ok(DegreeSumAudit {
        r,
        k,
        h,
        rows: checker.rows,
    })
}

/// The two availability margins as plain rationals, for cross-checking.
pub fn availability_margins(
    r: usize,
    ell: usize,
    i: Option<usize>,
    h: &Rational,
) -> Rational {
    match i {
        Some(i) => step_availability_margin(r, ell, i, h),
        None => final_availability_margin(r, ell, h),
    }
}
