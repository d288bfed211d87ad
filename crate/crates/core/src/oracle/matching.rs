use alloc::vec::Vec;

use crate::math;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatchedPair {
    pub upper: usize,
    pub lower: usize,
    /// `|E_u - E_l| / max(|E_u|, |E_l|)`.
    pub rel_gap: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct MatchReport {
    pub upper_levels: Vec<f64>,
    pub lower_levels: Vec<f64>,
    /// Sorted by upper index.
    pub matched: Vec<MatchedPair>,
    pub unmatched_upper: Vec<usize>,
    pub unmatched_lower: Vec<usize>,
    pub analytic_ref: Vec<f64>,
    /// Largest relative gap of a matched pair, or with a reference attached
    /// the largest relative error of a matched level against the nearest
    /// reference value.
    pub max_rel_err: f64,
}

impl MatchReport {
    /// Attaches closed-form levels and rescores `max_rel_err` against them.
    pub fn with_reference(mut self, analytic: &[f64]) -> Self {
        self.analytic_ref = analytic.to_vec();
        if analytic.is_empty() {
            return self;
        }
        let nearest = |e: f64| {
            analytic
                .iter()
                .map(|r| math::abs(e - r) / math::abs(*r))
                .fold(f64::INFINITY, f64::min)
        };
        self.max_rel_err = self
            .matched
            .iter()
            .map(|m| nearest(self.upper_levels[m.upper]).max(nearest(self.lower_levels[m.lower])))
            .fold(0.0, f64::max);
        self
    }
}

fn rel_gap(a: f64, b: f64) -> f64 {
    let scale = math::abs(a).max(math::abs(b));
    if scale == 0.0 {
        0.0
    } else {
        math::abs(a - b) / scale
    }
}

/// Greedy pairing of two ascending level lists: candidate pairs within
/// `tol` are accepted in order of increasing relative gap, each level used
/// at most once.
pub fn match_common_levels(upper: &[f64], lower: &[f64], tol: f64) -> MatchReport {
    let mut candidates: Vec<MatchedPair> = Vec::new();
    for (i, &u) in upper.iter().enumerate() {
        for (j, &l) in lower.iter().enumerate() {
            let gap = rel_gap(u, l);
            if gap <= tol {
                candidates.push(MatchedPair {
                    upper: i,
                    lower: j,
                    rel_gap: gap,
                });
            }
        }
    }
    candidates.sort_by(|a, b| {
        a.rel_gap
            .total_cmp(&b.rel_gap)
            .then(a.upper.cmp(&b.upper))
            .then(a.lower.cmp(&b.lower))
    });
    let mut used_upper = alloc::vec![false; upper.len()];
    let mut used_lower = alloc::vec![false; lower.len()];
    let mut matched = Vec::new();
    for c in candidates {
        if !used_upper[c.upper] && !used_lower[c.lower] {
            used_upper[c.upper] = true;
            used_lower[c.lower] = true;
            matched.push(c);
        }
    }
    matched.sort_by_key(|m| m.upper);
    let max_rel_err = matched.iter().map(|m| m.rel_gap).fold(0.0, f64::max);
    MatchReport {
        upper_levels: upper.to_vec(),
        lower_levels: lower.to_vec(),
        matched,
        unmatched_upper: (0..upper.len()).filter(|i| !used_upper[*i]).collect(),
        unmatched_lower: (0..lower.len()).filter(|j| !used_lower[*j]).collect(),
        analytic_ref: Vec::new(),
        max_rel_err,
    }
}
