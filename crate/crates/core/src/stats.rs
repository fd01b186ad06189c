//! Nonparametric comparison machinery: two-sided Mann-Whitney U tests (exact
//! for small tie-free samples, normal approximation with tie and continuity
//! corrections otherwise), Holm step-down adjustment, and the
//! plus/equal/minus labelling of algorithm pairs.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Final best fitnesses of one algorithm on one problem, one entry per
/// trial run.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TrialSample {
    pub values: Vec<f64>,
}

impl TrialSample {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Config("empty trial sample".to_string()));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Config("non-finite value in trial sample".to_string()));
        }
        Ok(TrialSample { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Mean and sample standard deviation (n-1 denominator; 0 for a single
/// value).
pub fn summarize(sample: &TrialSample) -> (f64, f64) {
    let n = sample.values.len();
    let mean = sample.values.iter().sum::<f64>() / n as f64;
    if n < 2 {
        return (mean, 0.0);
    }
    let var = sample
        .values
        .iter()
        .map(|v| (v - mean) * (v - mean))
        .sum::<f64>()
        / (n - 1) as f64;
    (mean, libm::sqrt(var))
}

/// How the p-value of [`mann_whitney_u_method`] is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PvalueMethod {
    /// Exact enumeration when total size <= 16 and there are no ties,
    /// normal approximation otherwise.
    Auto,
    /// Force exact enumeration (requires no ties).
    Exact,
    /// Force the normal approximation.
    NormalApprox,
}

const EXACT_LIMIT: usize = 16;

/// Two-sided Mann-Whitney U test. Returns `(u, p)` where `u` is the U
/// statistic of the first sample (`U_a + U_b = n*m`).
pub fn mann_whitney_u(a: &TrialSample, b: &TrialSample) -> (f64, f64) {
    mann_whitney_u_method(a, b, PvalueMethod::Auto)
}

/// Like [`mann_whitney_u`] with explicit choice of the p-value route.
pub fn mann_whitney_u_method(a: &TrialSample, b: &TrialSample, method: PvalueMethod) -> (f64, f64) {
    let n = a.len();
    let m = b.len();
    let (ranks_a, tie_groups) = midranks(&a.values, &b.values);
    let rank_sum: f64 = ranks_a.iter().sum();
    let u_a = rank_sum - (n * (n + 1)) as f64 / 2.0;
    let has_ties = tie_groups.iter().any(|t| *t > 1);

    let exact_possible = !has_ties && n + m <= EXACT_LIMIT;
    let p = match method {
        PvalueMethod::Exact => {
            assert!(!has_ties, "exact p-value requires tie-free samples");
            exact_two_sided_p(u_a, n, m)
        }
        PvalueMethod::NormalApprox => normal_two_sided_p(u_a, n, m, &tie_groups),
        PvalueMethod::Auto => {
            if exact_possible {
                exact_two_sided_p(u_a, n, m)
            } else {
                normal_two_sided_p(u_a, n, m, &tie_groups)
            }
        }
    };
    (u_a, p)
}

/// Midranks of the first sample within the pooled ordering, plus the sizes
/// of all tie groups (for the variance correction).
fn midranks(a: &[f64], b: &[f64]) -> (Vec<f64>, Vec<usize>) {
    let n = a.len();
    let mut pooled: Vec<(f64, usize)> = a
        .iter()
        .chain(b.iter())
        .copied()
        .enumerate()
        .map(|(i, v)| (v, i))
        .collect();
    pooled.sort_by(|x, y| x.0.partial_cmp(&y.0).expect("finite values"));

    let total = pooled.len();
    let mut ranks = alloc::vec![0.0; total];
    let mut tie_groups = Vec::new();
    let mut start = 0;
    while start < total {
        let mut end = start + 1;
        while end < total && pooled[end].0 == pooled[start].0 {
            end += 1;
        }
        // Average of ranks start+1 ..= end.
        let midrank = (start + 1 + end) as f64 / 2.0;
        for item in &pooled[start..end] {
            ranks[item.1] = midrank;
        }
        tie_groups.push(end - start);
        start = end;
    }
    (ranks[..n].to_vec(), tie_groups)
}

/// Exact two-sided p by dynamic programming over the null distribution of U:
/// `p = min(1, 2 * P(U <= min(U_a, U_b)))`.
fn exact_two_sided_p(u_a: f64, n: usize, m: usize) -> f64 {
    let u_min = u_a.min((n * m) as f64 - u_a);
    // Tie-free data makes U integral.
    let k = libm::round(u_min) as usize;
    let dist = u_count_table(n, m);
    let total: f64 = dist.iter().sum();
    let tail: f64 = dist.iter().take(k + 1).sum();
    (2.0 * tail / total).min(1.0)
}

/// Number of rank arrangements with U = u for sample sizes (n, m), by the
/// standard recurrence `c(n, m, u) = c(n-1, m, u-m) + c(n, m-1, u)`
/// (case split on whether the largest pooled element belongs to the first
/// sample).
fn u_count_table(n: usize, m: usize) -> Vec<f64> {
    let umax = n * m;
    // prev[i][u] = c(i, j-1, u), rolled over j.
    let mut prev = alloc::vec![alloc::vec![0.0f64; umax + 1]; n + 1];
    for row in &mut prev {
        row[0] = 1.0; // c(i, 0, 0) = 1
    }
    for j in 1..=m {
        let mut cur = alloc::vec![alloc::vec![0.0f64; umax + 1]; n + 1];
        cur[0][0] = 1.0; // c(0, j, 0) = 1
        for i in 1..=n {
            for u in 0..=umax {
                let take = if u >= j { cur[i - 1][u - j] } else { 0.0 };
                cur[i][u] = take + prev[i][u];
            }
        }
        prev = cur;
    }
    prev[n].clone()
}

/// Normal approximation with midrank tie correction and 0.5 continuity
/// correction.
fn normal_two_sided_p(u_a: f64, n: usize, m: usize, tie_groups: &[usize]) -> f64 {
    let nf = n as f64;
    let mf = m as f64;
    let total = nf + mf;
    let mean = nf * mf / 2.0;
    let tie_term: f64 = tie_groups
        .iter()
        .map(|&t| {
            let tf = t as f64;
            tf * tf * tf - tf
        })
        .sum();
    let var = nf * mf / 12.0 * ((total + 1.0) - tie_term / (total * (total - 1.0)));
    if var <= 0.0 {
        // All pooled values identical: no evidence of difference.
        return 1.0;
    }
    let z = (libm::fabs(u_a - mean) - 0.5).max(0.0) / libm::sqrt(var);
    // Two-sided tail of the standard normal.
    libm::erfc(z / libm::sqrt(2.0)).clamp(0.0, 1.0)
}

/// Holm step-down adjustment. Returns adjusted p-values in the original
/// order: sort ascending, multiply the i-th smallest by `(m - i)`, enforce
/// monotonicity, cap at 1.
pub fn holm_adjust(p_values: &[f64]) -> Vec<f64> {
    let m = p_values.len();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&i, &j| p_values[i].partial_cmp(&p_values[j]).expect("finite p"));
    let mut adjusted = alloc::vec![0.0; m];
    let mut running_max = 0.0f64;
    for (rank, &idx) in order.iter().enumerate() {
        let scaled = ((m - rank) as f64 * p_values[idx]).min(1.0);
        running_max = running_max.max(scaled);
        adjusted[idx] = running_max;
    }
    adjusted
}

/// Outcome direction of a pairwise comparison, from the reference
/// algorithm's point of view.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Label {
    /// Reference significantly better (its mean is lower).
    Plus,
    /// No significant difference.
    Equal,
    /// Reference significantly worse.
    Minus,
}

impl Label {
    pub fn symbol(&self) -> &'static str {
        match self {
            Label::Plus => "+",
            Label::Equal => "=",
            Label::Minus => "-",
        }
    }
}

/// One pairwise test result.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PairwiseResult {
    pub u_statistic: f64,
    pub p_value: f64,
    pub adjusted_p: f64,
    pub label: Label,
}

fn label_from(adjusted_p: f64, reference_mean: f64, other_mean: f64, alpha: f64) -> Label {
    if adjusted_p < alpha && other_mean > reference_mean {
        Label::Plus
    } else if adjusted_p < alpha && other_mean < reference_mean {
        Label::Minus
    } else {
        Label::Equal
    }
}

/// Compares a reference sample against one other sample (a family of one:
/// the adjusted p equals the raw p).
pub fn label_pair(reference: &TrialSample, other: &TrialSample, alpha: f64) -> PairwiseResult {
    let (u, p) = mann_whitney_u(reference, other);
    let (ref_mean, _) = summarize(reference);
    let (other_mean, _) = summarize(other);
    PairwiseResult {
        u_statistic: u,
        p_value: p,
        adjusted_p: p,
        label: label_from(p, ref_mean, other_mean, alpha),
    }
}

/// Compares a reference sample against each of `others` with one Holm family
/// across the whole group.
pub fn label_family(
    reference: &TrialSample,
    others: &[&TrialSample],
    alpha: f64,
) -> Vec<PairwiseResult> {
    let tests: Vec<(f64, f64)> = others
        .iter()
        .map(|other| mann_whitney_u(reference, other))
        .collect();
    let raw: Vec<f64> = tests.iter().map(|(_, p)| *p).collect();
    let adjusted = holm_adjust(&raw);
    let (ref_mean, _) = summarize(reference);
    tests
        .iter()
        .zip(&adjusted)
        .zip(others)
        .map(|(((u, p), adj), other)| {
            let (other_mean, _) = summarize(other);
            PairwiseResult {
                u_statistic: *u,
                p_value: *p,
                adjusted_p: *adj,
                label: label_from(*adj, ref_mean, other_mean, alpha),
            }
        })
        .collect()
}
