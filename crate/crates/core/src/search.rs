//! Enumeration of free (monic-generator) skew cyclic codes and ranking of
//! their Gray images.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::codes::{GeneratorForm, SkewCyclicCode};
use crate::error::{Error, Result};
use crate::fp_poly::{factor_xn_minus_1, monic_divisors, FpPoly};
use crate::gray::{BoundedWeight, GrayImageCode, COMBINATORIAL_BUDGET, EXHAUSTIVE_BUDGET};
use crate::ring::Automorphism;
use crate::skew_poly::{lift_divisors_capped, LIFT_CAP};
use crate::text::{format_polynomial, parse_polynomial};

/// One item of [`enumerate_case2_codes`].
#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)]
pub enum Candidate {
    Code(SkewCyclicCode),
    /// A divisor whose lifts could not be enumerated.
    Skipped { divisor: FpPoly, error: Error },
}

/// Lazy stream over ⟨g₁ + u·l⟩ for every monic divisor g₁ of x^n − 1 with
/// deg_min ≤ deg g₁ ≤ deg_max and every valid lift l, in canonical order.
pub struct Case2Codes {
    aut: Automorphism,
    n: usize,
    divisors: VecDeque<FpPoly>,
    pending: VecDeque<Candidate>,
    lift_cap: u128,
}

impl Iterator for Case2Codes {
    type Item = Candidate;

    fn next(&mut self) -> Option<Candidate> {
        while self.pending.is_empty() {
            let g1 = self.divisors.pop_front()?;
            match lift_divisors_capped(&g1, self.n, &self.aut, self.lift_cap) {
                Ok(set) => {
                    for g in set.generators(&self.aut) {
                        let code = SkewCyclicCode::construct(&self.aut, self.n, GeneratorForm::Monic { g })
                            .expect("lifts right-divide x^n - 1");
                        self.pending.push_back(Candidate::Code(code));
                    }
                }
                Err(error) => self.pending.push_back(Candidate::Skipped { divisor: g1, error }),
            }
        }
        self.pending.pop_front()
    }
}

pub fn enumerate_case2_codes(aut: &Automorphism, n: usize, deg_min: usize, deg_max: usize) -> Result<Case2Codes> {
    enumerate_case2_codes_capped(aut, n, deg_min, deg_max, LIFT_CAP)
}

pub fn enumerate_case2_codes_capped(
    aut: &Automorphism,
    n: usize,
    deg_min: usize,
    deg_max: usize,
    lift_cap: u128,
) -> Result<Case2Codes> {
    let field = *aut.field();
    let divisors = if n == 0 || deg_min > deg_max {
        VecDeque::new()
    } else {
        monic_divisors(&factor_xn_minus_1(field, n))?
            .into_iter()
            .filter(|d| (deg_min..=deg_max).contains(&d.degree().expect("monic")))
            .collect()
    };
    Ok(Case2Codes { aut: aut.clone(), n, divisors, pending: VecDeque::new(), lift_cap })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DistanceMethod {
    Exhaustive,
    Bounded,
    Undetermined,
}

impl DistanceMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            DistanceMethod::Exhaustive => "exhaustive",
            DistanceMethod::Bounded => "bounded",
            DistanceMethod::Undetermined => "undetermined",
        }
    }
}

/// Gray-image parameters of one (code, ℓ) pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub p: u32,
    pub n: usize,
    pub s: u32,
    pub ell: usize,
    pub generator: String,
    #[serde(rename = "N")]
    pub length: usize,
    #[serde(rename = "K")]
    pub dimension: usize,
    pub d: Option<usize>,
    pub method: DistanceMethod,
    /// Omitted unless timing is requested, so that output stays reproducible.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl SearchRecord {
    /// Rebuilds the monic code named by the record.
    pub fn code(&self) -> Result<SkewCyclicCode> {
        let aut = Automorphism::new(self.p, self.s)?;
        let g = parse_polynomial(&self.generator, &aut)?;
        SkewCyclicCode::construct(&aut, self.n, GeneratorForm::Monic { g })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    /// Largest p^K enumerated exhaustively.
    pub exhaustive: u128,
    /// Per-weight cap on support prefixes in bounded search.
    pub combinatorial: u128,
    /// Largest weight tried by bounded search.
    pub w_max: usize,
    /// Largest lift candidate count per divisor.
    pub lifts: u128,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets { exhaustive: EXHAUSTIVE_BUDGET, combinatorial: COMBINATORIAL_BUDGET, w_max: 8, lifts: LIFT_CAP }
    }
}

pub fn evaluate_candidate(code: &SkewCyclicCode, ell: usize, budgets: &Budgets) -> Result<SearchRecord> {
    evaluate_candidate_timed(code, ell, budgets, false)
}

pub fn evaluate_candidate_timed(
    code: &SkewCyclicCode,
    ell: usize,
    budgets: &Budgets,
    timed: bool,
) -> Result<SearchRecord> {
    if code.is_zero_code() {
        return Err(Error::EmptyCode);
    }
    let start = Instant::now();
    let image = GrayImageCode::from_code(code, ell)?;
    let k = image.dimension();
    let size = (code.field().p() as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    let (d, method) = if size <= budgets.exhaustive {
        (Some(image.min_distance_exhaustive_with(budgets.exhaustive)?), DistanceMethod::Exhaustive)
    } else {
        match image.min_weight_bounded_with(budgets.w_max, budgets.combinatorial) {
            Ok(BoundedWeight::Exact { d, .. }) => (Some(d), DistanceMethod::Bounded),
            Ok(BoundedWeight::Exceeds(_)) | Err(Error::CombinatorialBudgetExceeded { .. }) => {
                (None, DistanceMethod::Undetermined)
            }
            Err(e) => return Err(e),
        }
    };
    let generator = match code.generator() {
        Some(g) => format_polynomial(g),
        None => code.to_string(),
    };
    Ok(SearchRecord {
        p: code.field().p(),
        n: code.n(),
        s: code.aut().s(),
        ell,
        generator,
        length: image.length(),
        dimension: k,
        d,
        method,
        elapsed_ms: timed.then(|| start.elapsed().as_millis() as u64),
    })
}

#[derive(Debug, Clone)]
pub struct SearchParams {
    pub p: u32,
    pub lengths: Vec<usize>,
    pub twists: Vec<u32>,
    pub ells: Vec<usize>,
    pub deg_min: usize,
    /// Defaults to n − 1.
    pub deg_max: Option<usize>,
    pub budgets: Budgets,
    /// Worker count; `None` uses the global pool.
    pub threads: Option<usize>,
    pub timed: bool,
}

impl SearchParams {
    pub fn new(p: u32, lengths: Vec<usize>, twists: Vec<u32>, ells: Vec<usize>) -> Self {
        SearchParams {
            p,
            lengths,
            twists,
            ells,
            deg_min: 1,
            deg_max: None,
            budgets: Budgets::default(),
            threads: None,
            timed: false,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct SearchOutcome {
    pub records: Vec<SearchRecord>,
    /// (n, s, divisor text, reason) for divisors whose lifts were not enumerated.
    pub skipped: Vec<(usize, u32, String, String)>,
}

/// Evaluates every candidate, then ranks by (N, K), larger d first, then
/// candidate order. Records repeating (N, K, d, generator) are dropped.
pub fn search_best(params: &SearchParams) -> Result<SearchOutcome> {
    let mut candidates = Vec::new();
    let mut skipped = Vec::new();
    for &n in &params.lengths {
        for &s in &params.twists {
            let aut = Automorphism::new(params.p, s)?;
            let deg_max = params.deg_max.unwrap_or(n.saturating_sub(1)).min(n.saturating_sub(1));
            for item in enumerate_case2_codes_capped(&aut, n, params.deg_min.max(1), deg_max, params.budgets.lifts)? {
                match item {
                    Candidate::Code(code) => {
                        for &ell in &params.ells {
                            candidates.push((code.clone(), ell));
                        }
                    }
                    Candidate::Skipped { divisor, error } => skipped.push((n, s, divisor.to_string(), error.to_string())),
                }
            }
        }
    }
    let run = || -> Result<Vec<SearchRecord>> {
        candidates
            .par_iter()
            .map(|(code, ell)| evaluate_candidate_timed(code, *ell, &params.budgets, params.timed))
            .collect()
    };
    let evaluated = match params.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::Record(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    let mut indexed: Vec<(usize, SearchRecord)> = evaluated.into_iter().enumerate().collect();
    indexed.sort_by(|(ia, a), (ib, b)| {
        (a.length, a.dimension)
            .cmp(&(b.length, b.dimension))
            .then_with(|| compare_distance_desc(a.d, b.d))
            .then(ia.cmp(ib))
    });
    let mut seen = HashSet::new();
    let records = indexed
        .into_iter()
        .map(|(_, r)| r)
        .filter(|r| seen.insert((r.length, r.dimension, r.d, r.generator.clone())))
        .collect();
    Ok(SearchOutcome { records, skipped })
}

fn compare_distance_desc(a: Option<usize>, b: Option<usize>) -> Ordering {
    match (a, b) {
        (Some(x), Some(y)) => y.cmp(&x),
        (Some(_), None) => Ordering::Less,
        (None, Some(_)) => Ordering::Greater,
        (None, None) => Ordering::Equal,
    }
}

/// Plain-text table, one row per record.
pub fn format_summary(records: &[SearchRecord]) -> String {
    let mut out = String::from("p\tn\ts\tell\tgenerator\tN\tK\td\tmethod\n");
    for r in records {
        let d = r.d.map_or_else(|| "?".to_string(), |d| d.to_string());
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.p,
            r.n,
            r.s,
            r.ell,
            r.generator,
            r.length,
            r.dimension,
            d,
            r.method.as_str()
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aut(p: u32, s: u32) -> Automorphism {
        Automorphism::new(p, s).unwrap()
    }

    fn codes(items: Case2Codes) -> Vec<SkewCyclicCode> {
        items
            .map(|c| match c {
                Candidate::Code(c) => c,
                Candidate::Skipped { error, .. } => panic!("{error}"),
            })
            .collect()
    }

    #[test]
    fn stream_contains_known_generator() {
        let a = aut(3, 2);
        let all = codes(enumerate_case2_codes(&a, 8, 3, 3).unwrap());
        let want = parse_polynomial("x^3 + u*x^2 + x + 1", &a).unwrap();
        assert!(all.iter().any(|c| c.generator() == Some(&want)));
        assert!(all.iter().all(|c| c.r() == 3));
    }

    #[test]
    fn stream_contains_unlifted_divisors() {
        let a = aut(3, 2);
        let all = codes(enumerate_case2_codes(&a, 4, 1, 3).unwrap());
        let divisors = monic_divisors(&factor_xn_minus_1(*a.field(), 4)).unwrap();
        for d in divisors.iter().filter(|d| (1..=3).contains(&d.degree().unwrap())) {
            let g = crate::skew_poly::SkewPoly::from_fp(&a, d);
            assert!(all.iter().any(|c| c.generator() == Some(&g)), "{d}");
        }
    }

    #[test]
    fn stream_reports_skipped_divisors() {
        let a = aut(3, 2);
        let items: Vec<Candidate> = enumerate_case2_codes_capped(&a, 4, 1, 3, 3).unwrap().collect();
        assert!(items.iter().any(|c| matches!(c, Candidate::Skipped { error: Error::LiftBudgetExceeded { .. }, .. })));
        assert!(items.iter().any(|c| matches!(c, Candidate::Code(_))));
    }

    #[test]
    fn evaluate_known_code() {
        let a = aut(3, 2);
        let g = parse_polynomial("x^3 + u*x^2 + x + 1", &a).unwrap();
        let code = SkewCyclicCode::construct(&a, 8, GeneratorForm::Monic { g }).unwrap();
        let rec = evaluate_candidate(&code, 2, &Budgets::default()).unwrap();
        assert_eq!((rec.length, rec.dimension, rec.d), (16, 10, Some(4)));
        assert_eq!(rec.method, DistanceMethod::Exhaustive);
        assert_eq!(rec.code().unwrap().generator(), code.generator());

        let small = Budgets { exhaustive: 10, ..Budgets::default() };
        let rec = evaluate_candidate(&code, 2, &small).unwrap();
        assert_eq!((rec.d, rec.method), (Some(4), DistanceMethod::Bounded));
        let tiny = Budgets { exhaustive: 10, w_max: 3, ..Budgets::default() };
        let rec = evaluate_candidate(&code, 2, &tiny).unwrap();
        assert_eq!((rec.d, rec.method), (None, DistanceMethod::Undetermined));

        let zero = SkewCyclicCode::construct(
            &a,
            4,
            GeneratorForm::NonMonic { abar: FpPoly::x_n_minus_one(*a.field(), 4) },
        )
        .unwrap();
        assert_eq!(evaluate_candidate(&zero, 2, &Budgets::default()), Err(Error::EmptyCode));
    }

    #[test]
    fn ranking_and_empty_range() {
        let empty = search_best(&SearchParams::new(3, vec![], vec![2], vec![2])).unwrap();
        assert!(empty.records.is_empty());
        let mut params = SearchParams::new(3, vec![4, 6], vec![2], vec![2, 3]);
        params.deg_min = 1;
        let out = search_best(&params).unwrap();
        for pair in out.records.windows(2) {
            let (a, b) = (&pair[0], &pair[1]);
            assert!((a.length, a.dimension) <= (b.length, b.dimension));
            if (a.length, a.dimension) == (b.length, b.dimension) {
                assert!(compare_distance_desc(a.d, b.d) != Ordering::Greater);
            }
        }
        assert!(out.records.iter().any(|r| (r.length, r.dimension, r.d) == (12, 4, Some(6))));
        let summary = format_summary(&out.records);
        assert_eq!(summary.lines().count(), out.records.len() + 1);
    }
}
