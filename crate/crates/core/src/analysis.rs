//! Growth constants, drift-regime trend checks, chi-square uniformity
//! testing, and empirical sampler cost measurement.
//!
//! The tolerances here are named constants. The limit statements they gate
//! fix no convergence rate, so each slack is an empirical choice sized to
//! the scale the checks run at; growth rates are estimated from consecutive
//! count ratios, whose polynomial corrections decay like 1/n (n-th roots
//! converge only like log n / n).

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::counting::{culminating_counts_upto, float_profiles, positive_counts_upto};
use crate::samplers::{derive_seed, PreparedSampler, SampleError, WalkRng};
use crate::word::{Step, StepSystem, Word};

/// Slack on |r_n - 1| at n = 2000, where r_n = 4n c_n / 2^n in the
/// zero-drift system; the approach to 1 is logarithmically slow.
pub const NULL_DRIFT_TOLERANCE: f64 = 0.10;
/// Slack on the consecutive-ratio estimate of the growth constant near
/// n = 600 when a < b.
pub const NEGATIVE_DRIFT_RATIO_TOLERANCE: f64 = 0.03;
/// Slack on the mean total-step cost of anticipated rejection at a = b
/// (expected cost 2n).
pub const ANTICIPATED_COST_TOLERANCE: f64 = 0.20;
/// Smallest chi-square p-value counted as a pass.
pub const CHI2_MIN_P: f64 = 1e-3;

/// The exponential growth constant (a+b) / (a^a b^b)^{1/(a+b)} of positive
/// and culminating walks; equals 2 exactly when a = b and is smaller
/// otherwise. Symmetric under swapping a and b.
pub fn alpha(sys: &StepSystem) -> f64 {
    let a = f64::from(sys.a());
    let b = f64::from(sys.b());
    (a + b) * (-(a * a.ln() + b * b.ln()) / (a + b)).exp()
}

// ---------------------------------------------------------------------------
// Drift-regime reports
// ---------------------------------------------------------------------------

/// Trend of r_n = 4n c_n / 2^n for the zero-drift system, which approaches 1.
#[derive(Clone, Debug)]
pub struct NullDriftReport {
    /// (n, r_n) at the probed lengths.
    pub points: Vec<(usize, f64)>,
    /// |r_n - 1| strictly decreases along the probed lengths.
    pub deviations_decreasing: bool,
    /// |r_nmax - 1|.
    pub final_deviation: f64,
}

pub fn check_null_drift(nmax: usize) -> NullDriftReport {
    let sys = StepSystem::new(1, 1).unwrap();
    let profiles = float_profiles(&sys, nmax);
    let mut ns: Vec<usize> = [500usize, 1000]
        .iter()
        .copied()
        .filter(|&m| m < nmax)
        .collect();
    ns.push(nmax);
    let points: Vec<(usize, f64)> = ns
        .iter()
        .map(|&n| (n, profiles.culminating[n] * 4.0 * n as f64))
        .collect();
    let deviations: Vec<f64> = points.iter().map(|&(_, r)| (r - 1.0).abs()).collect();
    let deviations_decreasing = deviations.windows(2).all(|w| w[1] < w[0]);
    NullDriftReport {
        final_deviation: *deviations.last().unwrap(),
        points,
        deviations_decreasing,
    }
}

/// First length where c_n > p_{floor(n/2)} p_{ceil(n/2)} fails, if any. The
/// midpoint split of a culminating walk into a positive half and a mirrored
/// positive half makes the inequality hold for every drift.
pub fn midpoint_inequality_first_violation(sys: &StepSystem, nmax: usize) -> Option<usize> {
    let c = culminating_counts_upto(sys, nmax);
    let p = positive_counts_upto(sys, nmax);
    (0..=nmax).find(|&n| c[n] > &p[n / 2] * &p[n - n / 2])
}

/// Exact midpoint inequality plus the trend of c_n / (p p) toward 1 for
/// positive drift.
#[derive(Clone, Debug)]
pub struct PositiveDriftReport {
    pub nmax: usize,
    pub first_violation: Option<usize>,
    /// (n, c_n / (p_{floor(n/2)} p_{ceil(n/2)})) at the probed lengths.
    pub ratios: Vec<(usize, f64)>,
    pub ratios_nondecreasing: bool,
}

impl PositiveDriftReport {
    pub fn inequality_holds(&self) -> bool {
        self.first_violation.is_none()
    }
}

pub fn check_positive_drift(sys: &StepSystem, nmax: usize) -> PositiveDriftReport {
    assert!(sys.a() > sys.b(), "positive-drift check needs a > b");
    let c = culminating_counts_upto(sys, nmax);
    let p = positive_counts_upto(sys, nmax);
    let first_violation = (0..=nmax).find(|&n| c[n] > &p[n / 2] * &p[n - n / 2]);
    let mut ns: Vec<usize> = [20usize, 40, 60]
        .iter()
        .copied()
        .filter(|&m| m <= nmax)
        .collect();
    if ns.is_empty() {
        ns.push(nmax);
    }
    let ratios: Vec<(usize, f64)> = ns
        .iter()
        .map(|&n| {
            let denom = &p[n / 2] * &p[n - n / 2];
            (n, big_ratio(&c[n], &denom))
        })
        .collect();
    let ratios_nondecreasing = ratios.windows(2).all(|w| w[1].1 >= w[0].1);
    PositiveDriftReport {
        nmax,
        first_violation,
        ratios,
        ratios_nondecreasing,
    }
}

/// Growth-rate estimate c_{n+1} / c_n against the closed-form constant for
/// negative drift.
#[derive(Clone, Debug)]
pub struct NegativeDriftReport {
    pub n: usize,
    pub ratio: f64,
    pub alpha: f64,
    pub relative_deviation: f64,
    /// The per-length growth stays below 2 at the probed point.
    pub below_two: bool,
}

pub fn check_negative_drift(sys: &StepSystem, nmax: usize) -> NegativeDriftReport {
    assert!(sys.a() < sys.b(), "negative-drift check needs a < b");
    assert!(nmax >= 2);
    let profiles = float_profiles(sys, nmax);
    let ratio = 2.0 * profiles.culminating[nmax] / profiles.culminating[nmax - 1];
    let alpha = alpha(sys);
    NegativeDriftReport {
        n: nmax - 1,
        ratio,
        alpha,
        relative_deviation: (ratio - alpha).abs() / alpha,
        below_two: ratio < 2.0,
    }
}

fn big_ratio(num: &BigUint, den: &BigUint) -> f64 {
    num.to_f64().unwrap() / den.to_f64().unwrap()
}

// ---------------------------------------------------------------------------
// Uniformity testing
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum AnalysisError {
    #[error("empty sample set")]
    EmptySamples,
    #[error("sampled word {0:?} lies outside the exact support")]
    OutsideSupport(String),
}

#[derive(Clone, Debug)]
pub struct Chi2Result {
    pub statistic: f64,
    pub degrees: usize,
    pub p_value: f64,
    pub pass: bool,
}

/// Pearson chi-square of the samples against the distribution proportional
/// to the exact per-word counts (uniform when every count is 1). Passes at
/// p-value > [`CHI2_MIN_P`].
pub fn uniformity_chi2(
    samples: &[Word],
    exact: &HashMap<Word, BigUint>,
) -> Result<Chi2Result, AnalysisError> {
    if samples.is_empty() {
        return Err(AnalysisError::EmptySamples);
    }
    let mut observed: HashMap<&Word, u64> = HashMap::new();
    for w in samples {
        if !exact.contains_key(w) {
            return Err(AnalysisError::OutsideSupport(w.to_string()));
        }
        *observed.entry(w).or_insert(0) += 1;
    }
    let total_weight: f64 = exact.values().map(|w| w.to_f64().unwrap()).sum();
    let n = samples.len() as f64;
    let mut statistic = 0.0;
    for (word, weight) in exact {
        let expected = n * weight.to_f64().unwrap() / total_weight;
        let obs = observed.get(word).copied().unwrap_or(0) as f64;
        let d = obs - expected;
        statistic += d * d / expected;
    }
    let degrees = exact.len() - 1;
    let p_value = if degrees == 0 {
        1.0
    } else {
        1.0 - ChiSquared::new(degrees as f64).unwrap().cdf(statistic)
    };
    Ok(Chi2Result {
        statistic,
        degrees,
        p_value,
        pass: p_value > CHI2_MIN_P,
    })
}

/// Two-sample Pearson chi-square: do two samplers draw from the same
/// distribution? Classes are the union of observed words; expectations are
/// pooled. Passes at p-value > [`CHI2_MIN_P`].
pub fn two_sample_chi2(
    samples_a: &[Word],
    samples_b: &[Word],
) -> Result<Chi2Result, AnalysisError> {
    if samples_a.is_empty() || samples_b.is_empty() {
        return Err(AnalysisError::EmptySamples);
    }
    let mut classes: HashMap<&Word, (u64, u64)> = HashMap::new();
    for w in samples_a {
        classes.entry(w).or_insert((0, 0)).0 += 1;
    }
    for w in samples_b {
        classes.entry(w).or_insert((0, 0)).1 += 1;
    }
    let ka = samples_a.len() as f64;
    let kb = samples_b.len() as f64;
    let mut statistic = 0.0;
    for &(oa, ob) in classes.values() {
        let pooled = (oa + ob) as f64 / (ka + kb);
        let ea = ka * pooled;
        let eb = kb * pooled;
        let da = oa as f64 - ea;
        let db = ob as f64 - eb;
        statistic += da * da / ea + db * db / eb;
    }
    let degrees = classes.len() - 1;
    let p_value = if degrees == 0 {
        1.0
    } else {
        1.0 - ChiSquared::new(degrees as f64).unwrap().cdf(statistic)
    };
    Ok(Chi2Result {
        statistic,
        degrees,
        p_value,
        pass: p_value > CHI2_MIN_P,
    })
}

/// All words of length n satisfying the predicate, by enumeration (the
/// support for exact-uniformity tests; capped like the brute-force oracle).
pub fn enumerate_class<F>(sys: &StepSystem, n: usize, pred: F) -> Vec<Word>
where
    F: Fn(&StepSystem, &Word) -> bool,
{
    assert!(n <= crate::counting::BRUTE_FORCE_CAP);
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let steps = (0..n)
            .map(|i| {
                if mask >> i & 1 == 1 {
                    Step::Up
                } else {
                    Step::Down
                }
            })
            .collect();
        let word = Word::new(steps);
        if pred(sys, &word) {
            out.push(word);
        }
    }
    out
}

/// Uniform support map (every word weighted 1) for [`uniformity_chi2`].
pub fn uniform_support<F>(sys: &StepSystem, n: usize, pred: F) -> HashMap<Word, BigUint>
where
    F: Fn(&StepSystem, &Word) -> bool,
{
    enumerate_class(sys, n, pred)
        .into_iter()
        .map(|w| (w, BigUint::from(1u32)))
        .collect()
}

// ---------------------------------------------------------------------------
// Cost measurement
// ---------------------------------------------------------------------------

/// Empirical cost of one sampling method: means over independent seeded
/// trials, merged deterministically by trial index.
#[derive(Clone, Debug)]
pub struct CostReport {
    pub method: String,
    pub a: u32,
    pub b: u32,
    pub n: usize,
    pub trials: usize,
    pub mean_attempts: f64,
    pub mean_steps: f64,
    pub stddev_steps: f64,
}

pub fn measure_cost(
    prepared: &PreparedSampler,
    sys: &StepSystem,
    n: usize,
    trials: usize,
    master_seed: u64,
) -> Result<CostReport, SampleError> {
    assert!(trials >= 1);
    let records: Vec<_> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = WalkRng::from_seed(derive_seed(master_seed, i as u64));
            prepared.sample(&mut rng)
        })
        .collect::<Result<_, _>>()?;
    let method = records[0].method.clone();
    let mean_attempts = records.iter().map(|r| r.attempts as f64).sum::<f64>() / trials as f64;
    let mean_steps = records.iter().map(|r| r.steps as f64).sum::<f64>() / trials as f64;
    let var = if trials > 1 {
        records
            .iter()
            .map(|r| {
                let d = r.steps as f64 - mean_steps;
                d * d
            })
            .sum::<f64>()
            / (trials - 1) as f64
    } else {
        0.0
    };
    Ok(CostReport {
        method,
        a: sys.a(),
        b: sys.b(),
        n,
        trials,
        mean_attempts,
        mean_steps,
        stddev_steps: var.sqrt(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{float_profiles, CulminatingTable};
    use crate::samplers::{sample_culminating_recursive, Method, PositiveBackend};

    fn sys(a: u32, b: u32) -> StepSystem {
        StepSystem::new(a, b).unwrap()
    }

    #[test]
    fn alpha_values() {
        assert_eq!(alpha(&sys(1, 1)), 2.0);
        assert!((alpha(&sys(1, 2)) - 3.0 / 4f64.powf(1.0 / 3.0)).abs() < 1e-12);
        assert!((alpha(&sys(2, 3)) - 5.0 / 108f64.powf(0.2)).abs() < 1e-12);
        assert_eq!(alpha(&sys(1, 2)), alpha(&sys(2, 1)));
        assert!(alpha(&sys(3, 2)) < 2.0);
    }

    #[test]
    fn null_drift_small_value() {
        let profiles = float_profiles(&sys(1, 1), 5);
        let r5 = profiles.culminating[5] * 4.0 * 5.0;
        assert!((r5 - 1.25).abs() < 1e-12);
    }

    #[test]
    fn null_drift_trend_small_scale() {
        let report = check_null_drift(300);
        assert_eq!(report.points.len(), 1);
        assert!(report.final_deviation < 0.5);
    }

    #[test]
    fn midpoint_inequality_all_systems() {
        for &(a, b) in &[(1u32, 1u32), (2, 1), (1, 2), (3, 2), (5, 3)] {
            assert_eq!(
                midpoint_inequality_first_violation(&sys(a, b), 40),
                None,
                "({a},{b})"
            );
        }
    }

    #[test]
    fn positive_drift_report() {
        let report = check_positive_drift(&sys(2, 1), 40);
        assert!(report.inequality_holds());
        assert_eq!(report.ratios.len(), 2);
        assert!(report.ratios_nondecreasing);
        assert!(report.ratios.iter().all(|&(_, r)| r <= 1.0));
    }

    #[test]
    fn negative_drift_report() {
        let report = check_negative_drift(&sys(1, 2), 200);
        assert!(report.below_two);
        assert!(report.relative_deviation < 0.05, "{report:?}");
    }

    #[test]
    fn chi2_recursive_sampler_passes() {
        let s = sys(1, 1);
        let table = CulminatingTable::build(&s, 10);
        let mut rng = WalkRng::from_seed(2024);
        let samples: Vec<Word> = (0..20_000)
            .map(|_| {
                crate::word::parse_word(&sample_culminating_recursive(&table, &mut rng).word)
                    .unwrap()
            })
            .collect();
        let support = uniform_support(&s, 10, |s, w| w.is_culminating(s));
        let result = uniformity_chi2(&samples, &support).unwrap();
        assert!(result.pass, "{result:?}");
    }

    #[test]
    fn cross_method_agreement_two_sample() {
        // Rejection and recursive culminating samplers agree in distribution.
        let s = sys(1, 1);
        let n = 10;
        let table = CulminatingTable::build(&s, n);
        let mut rng = WalkRng::from_seed(404);
        let recursive: Vec<Word> = (0..10_000)
            .map(|_| {
                crate::word::parse_word(&sample_culminating_recursive(&table, &mut rng).word)
                    .unwrap()
            })
            .collect();
        let inner = crate::samplers::PositiveDraw::prepare(
            PositiveBackend::Auto,
            &s,
            n,
            crate::samplers::GiveUp::none(),
        );
        let mut rng = WalkRng::from_seed(405);
        let rejection: Vec<Word> = (0..10_000)
            .map(|_| {
                crate::word::parse_word(
                    &crate::samplers::sample_culminating_reject_positive(
                        &s,
                        n,
                        &mut rng,
                        &inner,
                        crate::samplers::GiveUp::none(),
                    )
                    .unwrap()
                    .word,
                )
                .unwrap()
            })
            .collect();
        let result = two_sample_chi2(&recursive, &rejection).unwrap();
        assert!(result.pass, "{result:?}");
        // and a deliberately different source fails
        let biased = vec![Word::all_up(10); 10_000];
        let result = two_sample_chi2(&recursive, &biased).unwrap();
        assert!(!result.pass);
    }

    #[test]
    fn chi2_biased_sampler_fails() {
        let s = sys(1, 1);
        let support = uniform_support(&s, 10, |s, w| w.is_culminating(s));
        assert!(support.len() > 1);
        let samples = vec![Word::all_up(10); 5000];
        let result = uniformity_chi2(&samples, &support).unwrap();
        assert!(!result.pass);
    }

    #[test]
    fn chi2_degenerate_and_errors() {
        let s = sys(1, 1);
        let support = uniform_support(&s, 4, |s, w| w.is_culminating(s));
        assert_eq!(support.len(), 1);
        let samples = vec![Word::all_up(4); 100];
        assert!(uniformity_chi2(&samples, &support).unwrap().pass);
        assert!(matches!(
            uniformity_chi2(&[], &support),
            Err(AnalysisError::EmptySamples)
        ));
        let outside = vec![Word::all_up(3)];
        assert!(matches!(
            uniformity_chi2(&outside, &support),
            Err(AnalysisError::OutsideSupport(_))
        ));
    }

    #[test]
    fn measure_cost_anticipated_null_drift() {
        let s = sys(1, 1);
        let prepared = PreparedSampler::prepare(
            Method::Anticipated,
            &s,
            100,
            None,
            0.1,
            PositiveBackend::Auto,
        )
        .unwrap();
        let report = measure_cost(&prepared, &s, 100, 400, 17).unwrap();
        assert_eq!(report.method, "anticipated");
        // expected total steps ~ 2n = 200
        assert!(
            report.mean_steps > 120.0 && report.mean_steps < 320.0,
            "{report:?}"
        );
        assert!(report.mean_attempts >= 1.0);
    }
}
