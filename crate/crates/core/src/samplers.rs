//! Uniform random generators for positive and culminating walks, each
//! instrumented with attempt and step counters.
//!
//! Exact methods draw every discrete choice proportional to big-integer
//! extension counts by sampling a uniform integer below the weight sum, so
//! the "exactly uniform" guarantee carries no floating-point bias. The
//! rejection methods restart from scratch on every failure; reusing a
//! partial walk would break uniformity.
//!
//! Cost model, by drift: anticipated rejection is linear for a >= b and
//! exponential for a < b; rejection from positive walks is linear for a > b
//! and O(n^{3/2}) at a = b; rejection from hybrid walks (positive first
//! half, mirrored-positive second half) is linear for a >= b. The default
//! positive-walk backend follows that table: anticipated rejection when
//! a >= b (no precomputation), count tables when a < b.

use std::time::{Duration, Instant};

use num_bigint::{BigUint, RandBigInt};
use num_traits::Zero;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::Serialize;

use crate::counting::{CulminatingTable, FixedHeightTable, PositiveTable};
use crate::grammar::{
    self, expected_positive_size, GfError, GfEvaluation, GrammarCounts, NonTerminal, Production,
};
use crate::word::{Step, StepSystem, Word};

/// Default step cap before a sampler gives up in the expected-exponential
/// regime (a < b). Samplers with a >= b run uncapped by default.
pub const DEFAULT_NEGATIVE_DRIFT_STEP_CAP: u64 = 10_000_000;

// ---------------------------------------------------------------------------
// RNG
// ---------------------------------------------------------------------------

/// Deterministic sampler RNG: ChaCha12 seeded through `seed_from_u64`. The
/// algorithm is version-pinned by the lockfile, so identical seeds yield
/// identical words on every platform.
#[derive(Clone, Debug)]
pub struct WalkRng {
    inner: ChaCha12Rng,
    seed: u64,
}

impl WalkRng {
    pub fn from_seed(seed: u64) -> Self {
        WalkRng {
            inner: ChaCha12Rng::seed_from_u64(seed),
            seed,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// The raw stream, for generic `RngCore` consumers.
    pub fn core(&mut self) -> &mut ChaCha12Rng {
        &mut self.inner
    }

    /// Fair coin flip.
    pub fn coin(&mut self) -> Step {
        if self.inner.next_u32() & 1 == 1 {
            Step::Up
        } else {
            Step::Down
        }
    }

    /// Uniform big integer in [0, bound).
    pub fn below(&mut self, bound: &BigUint) -> BigUint {
        self.inner.gen_biguint_below(bound)
    }

    pub fn f64(&mut self) -> f64 {
        self.inner.gen::<f64>()
    }
}

/// Seed for the trial at `index` in a multi-sample or multi-worker run:
/// splitmix64 applied to the master seed xored with the mixed index. Records
/// are independent of worker count and merge deterministically by index.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    splitmix64(master ^ splitmix64(index.wrapping_add(1)))
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Index proportional to big-integer weights; None when all weights vanish.
pub fn weighted_choice<R: RngCore>(rng: &mut R, weights: &[BigUint]) -> Option<usize> {
    let total: BigUint = weights.iter().sum();
    if total.is_zero() {
        return None;
    }
    let mut r = rng.gen_biguint_below(&total);
    for (i, w) in weights.iter().enumerate() {
        if &r < w {
            return Some(i);
        }
        r -= w;
    }
    unreachable!("draw below the weight total always lands in a bucket")
}

fn choose_up(rng: &mut WalkRng, up: &BigUint, down: Option<&BigUint>) -> bool {
    match down {
        None => true,
        Some(d) if d.is_zero() => true,
        Some(d) => {
            let total = up + d;
            rng.below(&total) < *up
        }
    }
}

// ---------------------------------------------------------------------------
// Records and configuration
// ---------------------------------------------------------------------------

/// One generated word with its provenance and cost counters. `attempts`
/// counts restarts of the outermost rejection loop; `steps` counts every
/// letter drawn or placed, including those of rejected attempts and of inner
/// positive-walk draws.
#[derive(Clone, Debug, Serialize)]
pub struct SampleRecord {
    pub a: u32,
    pub b: u32,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub method: String,
    pub seed: u64,
    pub word: String,
    pub final_height: i64,
    pub height: i64,
    pub attempts: u64,
    pub steps: u64,
    /// Not serialized: sample output must be byte-identical across runs.
    #[serde(skip)]
    pub wall: Duration,
}

impl SampleRecord {
    fn assemble(
        sys: &StepSystem,
        n: usize,
        k: Option<usize>,
        method: &str,
        seed: u64,
        word: Word,
        attempts: u64,
        steps: u64,
        started: Instant,
    ) -> Self {
        SampleRecord {
            a: sys.a(),
            b: sys.b(),
            n,
            k,
            method: method.to_string(),
            seed,
            final_height: word.phi(sys),
            height: word.height(sys),
            word: word.to_string(),
            attempts,
            steps,
            wall: started.elapsed(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum SampleError {
    #[error("empty class: {0}")]
    EmptyClass(String),
    #[error("sampler gave up after {steps} steps (cap {cap})")]
    GiveUp { steps: u64, cap: u64 },
    #[error("invalid sampler configuration: {0}")]
    InvalidConfig(String),
    #[error("Boltzmann tuning failed: nearest achievable expected size is {achievable:.1}, target {target}")]
    TuneFailed { target: usize, achievable: f64 },
    #[error(transparent)]
    Gf(#[from] GfError),
}

/// Step budget before a sampler reports [`SampleError::GiveUp`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GiveUp {
    pub max_steps: Option<u64>,
}

impl GiveUp {
    pub fn none() -> Self {
        GiveUp { max_steps: None }
    }

    pub fn steps(cap: u64) -> Self {
        GiveUp {
            max_steps: Some(cap),
        }
    }

    /// No cap when a >= b; the default step cap in the a < b regime.
    pub fn default_for(sys: &StepSystem) -> Self {
        if sys.a() >= sys.b() {
            GiveUp::none()
        } else {
            GiveUp::steps(DEFAULT_NEGATIVE_DRIFT_STEP_CAP)
        }
    }

    fn check(&self, steps: u64) -> Result<(), SampleError> {
        match self.max_steps {
            Some(cap) if steps >= cap => Err(SampleError::GiveUp { steps, cap }),
            _ => Ok(()),
        }
    }
}

/// Which uniform positive-walk sampler backs the rejection methods.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum PositiveBackend {
    /// Anticipated rejection when a >= b, count-table recursion when a < b.
    #[default]
    Auto,
    Anticipated,
    Recursive,
}

// ---------------------------------------------------------------------------
// Positive-walk samplers
// ---------------------------------------------------------------------------

struct Draw {
    word: Word,
    attempts: u64,
    steps: u64,
}

/// A prepared uniform sampler of positive walks of one fixed length.
#[derive(Debug)]
pub enum PositiveDraw {
    Anticipated {
        sys: StepSystem,
        n: usize,
        give_up: GiveUp,
    },
    Recursive(PositiveTable),
}

impl PositiveDraw {
    pub fn prepare(backend: PositiveBackend, sys: &StepSystem, n: usize, give_up: GiveUp) -> Self {
        let anticipated = match backend {
            PositiveBackend::Anticipated => true,
            PositiveBackend::Recursive => false,
            PositiveBackend::Auto => sys.a() >= sys.b(),
        };
        if anticipated {
            PositiveDraw::Anticipated {
                sys: *sys,
                n,
                give_up,
            }
        } else {
            PositiveDraw::Recursive(PositiveTable::build(sys, n))
        }
    }

    fn draw(&self, rng: &mut WalkRng) -> Result<Draw, SampleError> {
        match self {
            PositiveDraw::Anticipated { sys, n, give_up } => {
                draw_positive_anticipated(sys, *n, rng, *give_up)
            }
            PositiveDraw::Recursive(table) => Ok(draw_positive_recursive(table, rng)),
        }
    }
}

fn draw_positive_recursive(table: &PositiveTable, rng: &mut WalkRng) -> Draw {
    let sys = table.sys();
    let a = sys.a() as usize;
    let b = sys.b() as usize;
    let n = table.n();
    let mut steps = Vec::with_capacity(n);
    let mut j = 0usize;
    for i in (1..=n).rev() {
        let up = table.extensions(i - 1, j + a);
        let down = if j > b {
            Some(table.extensions(i - 1, j - b))
        } else {
            None
        };
        if choose_up(rng, up, down) {
            j += a;
            steps.push(Step::Up);
        } else {
            j -= b;
            steps.push(Step::Down);
        }
    }
    Draw {
        word: Word::new(steps),
        attempts: 1,
        steps: n as u64,
    }
}

fn draw_positive_anticipated(
    sys: &StepSystem,
    n: usize,
    rng: &mut WalkRng,
    give_up: GiveUp,
) -> Result<Draw, SampleError> {
    let mut attempts = 0u64;
    let mut total_steps = 0u64;
    'attempt: loop {
        attempts += 1;
        let mut steps = Vec::with_capacity(n);
        let mut h = 0i64;
        while steps.len() < n {
            give_up.check(total_steps)?;
            let s = rng.coin();
            total_steps += 1;
            h += sys.delta(s);
            if h <= 0 {
                continue 'attempt;
            }
            steps.push(s);
        }
        return Ok(Draw {
            word: Word::new(steps),
            attempts,
            steps: total_steps,
        });
    }
}

/// Uniform positive walk by count-table recursion: one attempt, linear time
/// after the table precomputation.
pub fn sample_positive_recursive(table: &PositiveTable, rng: &mut WalkRng) -> SampleRecord {
    let started = Instant::now();
    let seed = rng.seed();
    let d = draw_positive_recursive(table, rng);
    debug_assert!(d.word.is_positive(table.sys()));
    SampleRecord::assemble(
        table.sys(),
        table.n(),
        None,
        "positive-recursive",
        seed,
        d.word,
        d.attempts,
        d.steps,
        started,
    )
}

/// Uniform positive walk by anticipated rejection: flip fair coins, restart
/// as soon as the walk touches a non-positive level. No precomputation.
pub fn sample_positive_anticipated(
    sys: &StepSystem,
    n: usize,
    rng: &mut WalkRng,
    give_up: GiveUp,
) -> Result<SampleRecord, SampleError> {
    let started = Instant::now();
    let seed = rng.seed();
    let d = draw_positive_anticipated(sys, n, rng, give_up)?;
    debug_assert!(d.word.is_positive(sys));
    Ok(SampleRecord::assemble(
        sys,
        n,
        None,
        "anticipated",
        seed,
        d.word,
        d.attempts,
        d.steps,
        started,
    ))
}

/// Uniform positive walk through the grammar, derivation choices
/// proportional to counts.
pub fn sample_positive_grammar(
    counts: &GrammarCounts,
    n: usize,
    rng: &mut WalkRng,
) -> Result<SampleRecord, SampleError> {
    let started = Instant::now();
    let seed = rng.seed();
    let sys = *counts.grammar().sys();
    let word = grammar::grammar_sample_positive(counts, n, rng.core())
        .ok_or_else(|| SampleError::EmptyClass(format!("no positive walk of length {n}")))?;
    debug_assert!(word.is_positive(&sys));
    Ok(SampleRecord::assemble(
        &sys, n, None, "grammar", seed, word, 1, n as u64, started,
    ))
}

// ---------------------------------------------------------------------------
// Culminating-walk samplers
// ---------------------------------------------------------------------------

/// Exactly uniform culminating walk from the three-parameter count table.
pub fn sample_culminating_recursive(table: &CulminatingTable, rng: &mut WalkRng) -> SampleRecord {
    let sys = table.sys();
    let n = table.n();
    assert!(n >= 1, "culminating walks are non-empty");
    let started = Instant::now();
    let seed = rng.seed();
    let a = sys.a();
    let b = sys.b();
    let mut steps = Vec::with_capacity(n);
    let mut j = 0u32;
    let mut h = 0u32;
    for i in (2..=n).rev() {
        let up = table.extensions(i - 1, j + a, h.max(j + a));
        let down = if j > b {
            Some(table.extensions(i - 1, j - b, h))
        } else {
            None
        };
        if choose_up(rng, &up, down.as_ref()) {
            j += a;
            h = h.max(j);
            steps.push(Step::Up);
        } else {
            j -= b;
            steps.push(Step::Down);
        }
    }
    // The final step of a culminating walk is an up step onto a fresh record.
    debug_assert!(j + a > h);
    steps.push(Step::Up);
    let word = Word::new(steps);
    debug_assert!(word.is_culminating(sys));
    SampleRecord::assemble(sys, n, None, "recursive", seed, word, 1, n as u64, started)
}

/// Exactly uniform culminating walk of prescribed final height k; fails
/// cleanly when the class is empty.
pub fn sample_culminating_fixed_height(
    table: &FixedHeightTable,
    rng: &mut WalkRng,
) -> Result<SampleRecord, SampleError> {
    let sys = table.sys();
    let n = table.n();
    let k = table.k();
    if table.total().is_zero() {
        return Err(SampleError::EmptyClass(format!(
            "no culminating walk of length {n} and height {k} in system {sys}"
        )));
    }
    let started = Instant::now();
    let seed = rng.seed();
    let a = sys.a() as usize;
    let b = sys.b() as usize;
    let mut steps = Vec::with_capacity(n);
    let mut j = 0usize;
    for i in (2..=n).rev() {
        let up = if j + a < k {
            Some(table.extensions(i - 1, j + a))
        } else {
            None
        };
        let down = if j > b {
            Some(table.extensions(i - 1, j - b))
        } else {
            None
        };
        let up_w = up.cloned().unwrap_or_else(BigUint::zero);
        if choose_up(rng, &up_w, down) {
            j += a;
            steps.push(Step::Up);
        } else {
            j -= b;
            steps.push(Step::Down);
        }
    }
    debug_assert_eq!(j + a, k);
    steps.push(Step::Up);
    let word = Word::new(steps);
    debug_assert!(word.is_culminating(sys) && word.phi(sys) == k as i64);
    Ok(SampleRecord::assemble(
        sys,
        n,
        Some(k),
        "fixed-height",
        seed,
        word,
        1,
        n as u64,
        started,
    ))
}

/// Rejection from uniform positive walks: draw, test culmination, retry.
pub fn sample_culminating_reject_positive(
    sys: &StepSystem,
    n: usize,
    rng: &mut WalkRng,
    positive: &PositiveDraw,
    give_up: GiveUp,
) -> Result<SampleRecord, SampleError> {
    if n == 0 {
        return Err(SampleError::EmptyClass(
            "no culminating walk of length 0".into(),
        ));
    }
    let started = Instant::now();
    let seed = rng.seed();
    let mut attempts = 0u64;
    let mut steps = 0u64;
    loop {
        give_up.check(steps)?;
        attempts += 1;
        let d = positive.draw(rng)?;
        steps += d.steps;
        if d.word.is_culminating(sys) {
            return Ok(SampleRecord::assemble(
                sys,
                n,
                None,
                "reject-positive",
                seed,
                d.word,
                attempts,
                steps,
                started,
            ));
        }
    }
}

/// Rejection from hybrid walks: a uniform positive first half concatenated
/// with the mirror of an independent uniform positive second half. The
/// factorization at the midpoint is unique and culminating walks are hybrid,
/// so acceptance yields the uniform distribution.
pub fn sample_culminating_hybrid(
    sys: &StepSystem,
    n: usize,
    rng: &mut WalkRng,
    first: &PositiveDraw,
    second: &PositiveDraw,
    give_up: GiveUp,
) -> Result<SampleRecord, SampleError> {
    if n == 0 {
        return Err(SampleError::EmptyClass(
            "no culminating walk of length 0".into(),
        ));
    }
    let started = Instant::now();
    let seed = rng.seed();
    let mut attempts = 0u64;
    let mut steps = 0u64;
    loop {
        give_up.check(steps)?;
        attempts += 1;
        let v = first.draw(rng)?;
        steps += v.steps;
        let w = second.draw(rng)?;
        steps += w.steps;
        let candidate = v.word.concat(&w.word.mirror());
        debug_assert_eq!(candidate.len(), n);
        if candidate.is_culminating(sys) {
            return Ok(SampleRecord::assemble(
                sys, n, None, "hybrid", seed, candidate, attempts, steps, started,
            ));
        }
    }
}

// ---------------------------------------------------------------------------
// Boltzmann sampling
// ---------------------------------------------------------------------------

/// Relative slack accepted between the tuned expected size and the target.
const TUNE_RELATIVE_SLACK: f64 = 0.005;
/// Bisection depth for the tuning parameter.
const TUNE_BISECTION_STEPS: usize = 200;
/// Iteration cap per generating-function evaluation during tuning.
const TUNE_GF_ITERATIONS: usize = 400_000;

/// A Boltzmann sampler of positive walks tuned so the expected output size
/// is close to n. Free generation follows the grammar with production
/// weights given by the generating-function values; sizes outside
/// [(1-eps)n, (1+eps)n] are rejected (attempts exceeding the upper bound
/// abort early, which does not disturb the distribution of accepted words).
#[derive(Clone, Debug)]
pub struct BoltzmannSampler {
    sys: StepSystem,
    eval: GfEvaluation,
    n: usize,
    epsilon: f64,
    min_len: usize,
    max_len: usize,
    give_up: GiveUp,
}

impl BoltzmannSampler {
    pub fn tune(sys: &StepSystem, n: usize, epsilon: f64) -> Result<Self, SampleError> {
        Self::tune_with(sys, n, epsilon, GiveUp::default_for(sys))
    }

    pub fn tune_with(
        sys: &StepSystem,
        n: usize,
        epsilon: f64,
        give_up: GiveUp,
    ) -> Result<Self, SampleError> {
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(SampleError::InvalidConfig(format!(
                "epsilon must lie in (0, 1), got {epsilon}"
            )));
        }
        if n == 0 {
            return Err(SampleError::InvalidConfig(
                "Boltzmann target size must be positive".into(),
            ));
        }
        let target = n as f64;
        // Bisection on the monotone expected-size map; a divergent or
        // non-convergent evaluation means the point is at or beyond the
        // singularity and the upper end moves down.
        let mut lo = 0.0f64;
        let mut hi = 1.0f64;
        let mut best: Option<(f64, GfEvaluation)> = None;
        for _ in 0..TUNE_BISECTION_STEPS {
            let mid = 0.5 * (lo + hi);
            let grammar = grammar::GrammarSystem::build(sys)
                .expect("validated systems yield a sound grammar");
            match grammar::gf_values_on(grammar, mid, TUNE_GF_ITERATIONS) {
                Ok(eval) => {
                    let size = expected_positive_size(&eval);
                    let better = match &best {
                        Some((s, _)) => (size - target).abs() < (s - target).abs(),
                        None => true,
                    };
                    if better {
                        best = Some((size, eval));
                    }
                    if (size - target).abs() <= TUNE_RELATIVE_SLACK * target {
                        break;
                    }
                    if size < target {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                Err(_) => hi = mid,
            }
            if hi - lo < 1e-14 {
                break;
            }
        }
        let (size, eval) = best.ok_or(SampleError::TuneFailed {
            target: n,
            achievable: 0.0,
        })?;
        if (size - target).abs() > 0.5 * target {
            return Err(SampleError::TuneFailed {
                target: n,
                achievable: size,
            });
        }
        let min_len = ((1.0 - epsilon) * target).ceil() as usize;
        let max_len = ((1.0 + epsilon) * target).floor() as usize;
        Ok(BoltzmannSampler {
            sys: *sys,
            eval,
            n,
            epsilon,
            min_len,
            max_len,
            give_up,
        })
    }

    pub fn x(&self) -> f64 {
        self.eval.x()
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// The accepted size window [(1-eps)n, (1+eps)n].
    pub fn window(&self) -> (usize, usize) {
        (self.min_len, self.max_len)
    }

    pub fn sample(&self, rng: &mut WalkRng) -> Result<SampleRecord, SampleError> {
        let started = Instant::now();
        let seed = rng.seed();
        let mut attempts = 0u64;
        let mut steps = 0u64;
        loop {
            self.give_up.check(steps)?;
            attempts += 1;
            if let Some(word) = self.generate_free(rng, &mut steps) {
                if word.len() >= self.min_len {
                    debug_assert!(word.is_positive(&self.sys));
                    return Ok(SampleRecord::assemble(
                        &self.sys,
                        self.n,
                        None,
                        "boltzmann",
                        seed,
                        word,
                        attempts,
                        steps,
                        started,
                    ));
                }
            }
        }
    }

    /// Free Boltzmann generation; None when the emitted length exceeds the
    /// acceptance window (early abort of a word that would be rejected).
    fn generate_free(&self, rng: &mut WalkRng, steps: &mut u64) -> Option<Word> {
        let grammar = self.eval.grammar();
        let mut stack = vec![NonTerminal::Positive];
        let mut out: Vec<Step> = Vec::new();
        while let Some(nt) = stack.pop() {
            let prods = grammar.productions(nt);
            let total: f64 = prods.iter().map(|p| self.eval.production_value(p)).sum();
            let mut r = rng.f64() * total;
            let mut chosen = prods.len() - 1;
            for (i, p) in prods.iter().enumerate() {
                let v = self.eval.production_value(p);
                if r < v {
                    chosen = i;
                    break;
                }
                r -= v;
            }
            match prods[chosen] {
                Production::Empty => {}
                Production::Letter(s, y) => {
                    out.push(s);
                    *steps += 1;
                    if out.len() > self.max_len {
                        return None;
                    }
                    stack.push(y);
                }
                Production::Pair(y, z) => {
                    stack.push(z);
                    stack.push(y);
                }
            }
        }
        Some(Word::new(out))
    }
}

/// One-shot tune-and-sample of an approximate-size positive walk.
pub fn sample_positive_boltzmann(
    sys: &StepSystem,
    n: usize,
    epsilon: f64,
    rng: &mut WalkRng,
) -> Result<SampleRecord, SampleError> {
    BoltzmannSampler::tune(sys, n, epsilon)?.sample(rng)
}

// ---------------------------------------------------------------------------
// Prepared dispatcher
// ---------------------------------------------------------------------------

/// The user-facing generation methods.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Exactly uniform culminating walks from the three-parameter table.
    Recursive,
    /// Exactly uniform culminating walks of prescribed height k.
    FixedHeight,
    /// Exactly uniform positive walks through the grammar.
    Grammar,
    /// Uniform positive walks by anticipated rejection.
    Anticipated,
    /// Culminating walks by rejection from positive walks.
    RejectPositive,
    /// Culminating walks by rejection from hybrid walks.
    Hybrid,
    /// Approximate-size Boltzmann sampling of positive walks.
    Boltzmann,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Recursive => "recursive",
            Method::FixedHeight => "fixed-height",
            Method::Grammar => "grammar",
            Method::Anticipated => "anticipated",
            Method::RejectPositive => "reject-positive",
            Method::Hybrid => "hybrid",
            Method::Boltzmann => "boltzmann",
        }
    }

    /// Whether the method samples culminating (rather than positive) walks.
    pub fn samples_culminating(self) -> bool {
        matches!(
            self,
            Method::Recursive | Method::FixedHeight | Method::RejectPositive | Method::Hybrid
        )
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A sampler with its precomputation done, ready to draw any number of
/// records. Sampling is pure given the prepared state and an RNG, so
/// independent draws parallelize with one RNG per trial.
#[derive(Debug)]
pub enum PreparedSampler {
    Recursive(CulminatingTable),
    FixedHeight(FixedHeightTable),
    Grammar {
        counts: GrammarCounts,
        n: usize,
    },
    Anticipated {
        sys: StepSystem,
        n: usize,
        give_up: GiveUp,
    },
    RejectPositive {
        sys: StepSystem,
        n: usize,
        inner: PositiveDraw,
        give_up: GiveUp,
    },
    Hybrid {
        sys: StepSystem,
        n: usize,
        first: PositiveDraw,
        second: PositiveDraw,
        give_up: GiveUp,
    },
    Boltzmann(BoltzmannSampler),
}

impl PreparedSampler {
    pub fn prepare(
        method: Method,
        sys: &StepSystem,
        n: usize,
        k: Option<usize>,
        epsilon: f64,
        backend: PositiveBackend,
    ) -> Result<Self, SampleError> {
        let give_up = GiveUp::default_for(sys);
        Ok(match method {
            Method::Recursive => {
                if n == 0 {
                    return Err(SampleError::EmptyClass(
                        "no culminating walk of length 0".into(),
                    ));
                }
                PreparedSampler::Recursive(CulminatingTable::build(sys, n))
            }
            Method::FixedHeight => {
                let k = k.ok_or_else(|| {
                    SampleError::InvalidConfig("fixed-height sampling requires k".into())
                })?;
                if n == 0 || k == 0 {
                    return Err(SampleError::EmptyClass(
                        "fixed-height classes need n >= 1 and k >= 1".into(),
                    ));
                }
                PreparedSampler::FixedHeight(FixedHeightTable::build(sys, n, k))
            }
            Method::Grammar => PreparedSampler::Grammar {
                counts: grammar::grammar_counts(sys, n)
                    .map_err(|e| SampleError::InvalidConfig(e.to_string()))?,
                n,
            },
            Method::Anticipated => PreparedSampler::Anticipated {
                sys: *sys,
                n,
                give_up,
            },
            Method::RejectPositive => PreparedSampler::RejectPositive {
                sys: *sys,
                n,
                inner: PositiveDraw::prepare(backend, sys, n, give_up),
                give_up,
            },
            Method::Hybrid => PreparedSampler::Hybrid {
                sys: *sys,
                n,
                first: PositiveDraw::prepare(backend, sys, n / 2, give_up),
                second: PositiveDraw::prepare(backend, sys, n - n / 2, give_up),
                give_up,
            },
            Method::Boltzmann => {
                PreparedSampler::Boltzmann(BoltzmannSampler::tune(sys, n, epsilon)?)
            }
        })
    }

    pub fn sample(&self, rng: &mut WalkRng) -> Result<SampleRecord, SampleError> {
        match self {
            PreparedSampler::Recursive(table) => Ok(sample_culminating_recursive(table, rng)),
            PreparedSampler::FixedHeight(table) => sample_culminating_fixed_height(table, rng),
            PreparedSampler::Grammar { counts, n } => sample_positive_grammar(counts, *n, rng),
            PreparedSampler::Anticipated { sys, n, give_up } => {
                sample_positive_anticipated(sys, *n, rng, *give_up)
            }
            PreparedSampler::RejectPositive {
                sys,
                n,
                inner,
                give_up,
            } => sample_culminating_reject_positive(sys, *n, rng, inner, *give_up),
            PreparedSampler::Hybrid {
                sys,
                n,
                first,
                second,
                give_up,
            } => sample_culminating_hybrid(sys, *n, rng, first, second, *give_up),
            PreparedSampler::Boltzmann(sampler) => sampler.sample(rng),
        }
    }
}
