//! The non-ambiguous context-free system generating excursions and positive
//! walks, counting by convolution, count-driven uniform sampling, and
//! numeric evaluation of the generating functions at a point (the input to
//! Boltzmann sampling).
//!
//! Writing E for excursions, P for positive walks, and Rise_i / Fall_j for
//! the auxiliary languages (1 <= i <= a, 1 <= j <= b), the productions are
//!
//! ```text
//! E      = eps + sum_k Rise_k Fall_k
//! P      = eps + sum_i Rise_i P
//! Rise_i = [i = a] u E + sum_{k > i} Rise_k Fall_{k-i}
//! Fall_j = [j = b] d E + sum_{k > j} Rise_{k-j} Fall_k
//! ```
//!
//! where sums range over the declared index intervals and terms whose index
//! falls outside them are dropped. Every production is the empty word, a
//! terminal-prefixed nonterminal, or a binary product; Rise and Fall never
//! derive the empty word, which makes length-indexed counting well-founded.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::RngCore;

use crate::samplers::weighted_choice;
use crate::word::{Step, StepSystem, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NonTerminal {
    /// Non-negative walks ending at level 0.
    Excursion,
    /// Walks in which every step ends at a positive level.
    Positive,
    /// Ascent fragments that raise the level by i.
    Rise(u32),
    /// Descent fragments that lower the level by j.
    Fall(u32),
}

impl std::fmt::Display for NonTerminal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NonTerminal::Excursion => write!(f, "E"),
            NonTerminal::Positive => write!(f, "P"),
            NonTerminal::Rise(i) => write!(f, "Rise{i}"),
            NonTerminal::Fall(j) => write!(f, "Fall{j}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Production {
    Empty,
    Letter(Step, NonTerminal),
    Pair(NonTerminal, NonTerminal),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GrammarError {
    #[error("grammar is not well-founded: {0} can derive the empty word")]
    NotWellFounded(String),
    #[error("grammar symbol {0} derives no word")]
    Unproductive(String),
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum GfError {
    #[error("generating-function iteration diverged at x = {x} (at or beyond the singularity)")]
    Diverged { x: f64 },
    #[error("generating-function iteration did not reach tolerance at x = {x} (residual {residual:.3e}); x is at or near the singularity")]
    NotConverged { x: f64, residual: f64 },
}

/// Absolute tolerance of the fixed-point iteration.
pub const GF_TOLERANCE: f64 = 1e-12;
/// Iteration cap before reporting non-convergence.
pub const GF_ITERATION_CAP: usize = 1_000_000;
/// Values beyond this cap are treated as divergence.
pub const GF_VALUE_CAP: f64 = 1e12;

/// The production system for a given step pair.
#[derive(Clone, Debug)]
pub struct GrammarSystem {
    sys: StepSystem,
    symbols: Vec<NonTerminal>,
    prods: Vec<Vec<Production>>,
    index: HashMap<NonTerminal, usize>,
}

impl GrammarSystem {
    pub fn build(sys: &StepSystem) -> Result<Self, GrammarError> {
        let a = sys.a();
        let b = sys.b();
        // Order matters for length-indexed counting: Rise and Fall first
        // (they only reference strictly shorter words), then Excursion, then
        // Positive (whose products reference Rise at the same length).
        let mut symbols = Vec::new();
        for i in 1..=a {
            symbols.push(NonTerminal::Rise(i));
        }
        for j in 1..=b {
            symbols.push(NonTerminal::Fall(j));
        }
        symbols.push(NonTerminal::Excursion);
        symbols.push(NonTerminal::Positive);

        let mut prods = Vec::with_capacity(symbols.len());
        for &nt in &symbols {
            let mut alts = Vec::new();
            match nt {
                NonTerminal::Rise(i) => {
                    if i == a {
                        alts.push(Production::Letter(Step::Up, NonTerminal::Excursion));
                    }
                    for k in i + 1..=a {
                        if k - i <= b {
                            alts.push(Production::Pair(
                                NonTerminal::Rise(k),
                                NonTerminal::Fall(k - i),
                            ));
                        }
                    }
                }
                NonTerminal::Fall(j) => {
                    if j == b {
                        alts.push(Production::Letter(Step::Down, NonTerminal::Excursion));
                    }
                    for k in j + 1..=b {
                        if k - j <= a {
                            alts.push(Production::Pair(
                                NonTerminal::Rise(k - j),
                                NonTerminal::Fall(k),
                            ));
                        }
                    }
                }
                NonTerminal::Excursion => {
                    alts.push(Production::Empty);
                    for k in 1..=a.min(b) {
                        alts.push(Production::Pair(NonTerminal::Rise(k), NonTerminal::Fall(k)));
                    }
                }
                NonTerminal::Positive => {
                    alts.push(Production::Empty);
                    for i in 1..=a {
                        alts.push(Production::Pair(
                            NonTerminal::Rise(i),
                            NonTerminal::Positive,
                        ));
                    }
                }
            }
            prods.push(alts);
        }
        let index = symbols.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let grammar = GrammarSystem {
            sys: *sys,
            symbols,
            prods,
            index,
        };
        grammar.check_well_founded()?;
        Ok(grammar)
    }

    /// Rise and Fall must be free of empty productions and every symbol must
    /// derive at least one word. Cannot fail for validated step systems.
    fn check_well_founded(&self) -> Result<(), GrammarError> {
        for (s, alts) in self.symbols.iter().zip(&self.prods) {
            if matches!(s, NonTerminal::Rise(_) | NonTerminal::Fall(_))
                && alts.contains(&Production::Empty)
            {
                return Err(GrammarError::NotWellFounded(s.to_string()));
            }
        }
        // Productivity fixpoint.
        let mut productive = vec![false; self.symbols.len()];
        loop {
            let mut changed = false;
            for (i, alts) in self.prods.iter().enumerate() {
                if productive[i] {
                    continue;
                }
                let ok = alts.iter().any(|p| match p {
                    Production::Empty => true,
                    Production::Letter(_, y) => productive[self.index[y]],
                    Production::Pair(y, z) => {
                        productive[self.index[y]] && productive[self.index[z]]
                    }
                });
                if ok {
                    productive[i] = true;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if let Some(i) = productive.iter().position(|&p| !p) {
            return Err(GrammarError::Unproductive(self.symbols[i].to_string()));
        }
        Ok(())
    }

    pub fn sys(&self) -> &StepSystem {
        &self.sys
    }

    pub fn symbols(&self) -> &[NonTerminal] {
        &self.symbols
    }

    pub fn productions(&self, nt: NonTerminal) -> &[Production] {
        &self.prods[self.index[&nt]]
    }

    pub fn index_of(&self, nt: NonTerminal) -> usize {
        self.index[&nt]
    }
}

// ---------------------------------------------------------------------------
// Length-indexed counts
// ---------------------------------------------------------------------------

/// Per-nonterminal counts of generated words, by length up to n.
#[derive(Clone, Debug)]
pub struct GrammarCounts {
    grammar: GrammarSystem,
    n: usize,
    counts: Vec<Vec<BigUint>>,
}

/// Counts every nonterminal's words of each length 0..=n, bottom-up by
/// convolution (O(n^2) big-integer operations per product).
pub fn grammar_counts(sys: &StepSystem, n: usize) -> Result<GrammarCounts, GrammarError> {
    let grammar = GrammarSystem::build(sys)?;
    let m = grammar.symbols.len();
    let mut counts = vec![vec![BigUint::zero(); n + 1]; m];
    for len in 0..=n {
        for s in 0..m {
            let mut total = BigUint::zero();
            for prod in &grammar.prods[s] {
                match prod {
                    Production::Empty => {
                        if len == 0 {
                            total += 1u32;
                        }
                    }
                    Production::Letter(_, y) => {
                        if len >= 1 {
                            total += &counts[grammar.index[y]][len - 1];
                        }
                    }
                    Production::Pair(y, z) => {
                        let cy = &counts[grammar.index[y]];
                        let cz = &counts[grammar.index[z]];
                        for r in 0..=len {
                            if !cy[r].is_zero() && !cz[len - r].is_zero() {
                                total += &cy[r] * &cz[len - r];
                            }
                        }
                    }
                }
            }
            counts[s][len] = total;
        }
    }
    Ok(GrammarCounts { grammar, n, counts })
}

impl GrammarCounts {
    pub fn grammar(&self) -> &GrammarSystem {
        &self.grammar
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn count(&self, nt: NonTerminal, len: usize) -> &BigUint {
        &self.counts[self.grammar.index[&nt]][len]
    }

    /// Positive-walk counts by length.
    pub fn positive(&self) -> &[BigUint] {
        &self.counts[self.grammar.index[&NonTerminal::Positive]]
    }

    /// Excursion counts by length.
    pub fn excursions(&self) -> &[BigUint] {
        &self.counts[self.grammar.index[&NonTerminal::Excursion]]
    }
}

/// Uniform sampling of a length-n positive walk by derivation choices
/// proportional to counts; split points of products are chosen proportional
/// to the convolution terms.
pub fn grammar_sample_positive<R: RngCore>(
    counts: &GrammarCounts,
    n: usize,
    rng: &mut R,
) -> Option<Word> {
    assert!(n <= counts.n, "counts table too shallow for length {n}");
    if counts.count(NonTerminal::Positive, n).is_zero() {
        return None;
    }
    let mut steps = Vec::with_capacity(n);
    derive(counts, NonTerminal::Positive, n, rng, &mut steps);
    debug_assert_eq!(steps.len(), n);
    Some(Word::new(steps))
}

fn derive<R: RngCore>(
    counts: &GrammarCounts,
    nt: NonTerminal,
    len: usize,
    rng: &mut R,
    out: &mut Vec<Step>,
) {
    let prods = counts.grammar.productions(nt);
    let weights: Vec<BigUint> = prods
        .iter()
        .map(|p| match p {
            Production::Empty => {
                if len == 0 {
                    BigUint::one()
                } else {
                    BigUint::zero()
                }
            }
            Production::Letter(_, y) => {
                if len >= 1 {
                    counts.count(*y, len - 1).clone()
                } else {
                    BigUint::zero()
                }
            }
            Production::Pair(y, z) => {
                let cy = &counts.counts[counts.grammar.index[y]];
                let cz = &counts.counts[counts.grammar.index[z]];
                let mut acc = BigUint::zero();
                for r in 0..=len {
                    acc += &cy[r] * &cz[len - r];
                }
                acc
            }
        })
        .collect();
    let choice = weighted_choice(rng, &weights).expect("nonzero total weight inside derivation");
    match prods[choice] {
        Production::Empty => {}
        Production::Letter(step, y) => {
            out.push(step);
            derive(counts, y, len - 1, rng, out);
        }
        Production::Pair(y, z) => {
            let cy = &counts.counts[counts.grammar.index[&y]];
            let cz = &counts.counts[counts.grammar.index[&z]];
            let split_weights: Vec<BigUint> = (0..=len).map(|r| &cy[r] * &cz[len - r]).collect();
            let r = weighted_choice(rng, &split_weights)
                .expect("nonzero split weight inside derivation");
            derive(counts, y, r, rng, out);
            derive(counts, z, len - r, rng, out);
        }
    }
}

// ---------------------------------------------------------------------------
// Numeric generating-function values
// ---------------------------------------------------------------------------

/// Values of every nonterminal's generating function at a point x inside the
/// radius of convergence.
#[derive(Clone, Debug)]
pub struct GfEvaluation {
    grammar: GrammarSystem,
    x: f64,
    values: Vec<f64>,
}

impl GfEvaluation {
    pub fn grammar(&self) -> &GrammarSystem {
        &self.grammar
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn value(&self, nt: NonTerminal) -> f64 {
        self.values[self.grammar.index[&nt]]
    }

    /// Weight of one production alternative at the evaluation point.
    pub fn production_value(&self, prod: &Production) -> f64 {
        match prod {
            Production::Empty => 1.0,
            Production::Letter(_, y) => self.x * self.value(*y),
            Production::Pair(y, z) => self.value(*y) * self.value(*z),
        }
    }
}

/// Solves the polynomial fixed-point system of the grammar at x by monotone
/// iteration from the zero vector: iterates increase to the least
/// solution, which is the combinatorial one. Divergence (x at or beyond the
/// singularity) is reported once a value passes [`GF_VALUE_CAP`] or the
/// iteration cap is reached.
pub fn gf_values(sys: &StepSystem, x: f64) -> Result<GfEvaluation, GfError> {
    let grammar = GrammarSystem::build(sys).expect("validated systems yield a sound grammar");
    gf_values_on(grammar, x, GF_ITERATION_CAP)
}

pub(crate) fn gf_values_on(
    grammar: GrammarSystem,
    x: f64,
    iteration_cap: usize,
) -> Result<GfEvaluation, GfError> {
    assert!(x > 0.0, "evaluation point must be positive");
    let m = grammar.symbols.len();
    let mut values = vec![0.0f64; m];
    let mut residual = f64::INFINITY;
    for _ in 0..iteration_cap {
        let mut next = vec![0.0f64; m];
        for s in 0..m {
            let mut acc = 0.0;
            for prod in &grammar.prods[s] {
                acc += match prod {
                    Production::Empty => 1.0,
                    Production::Letter(_, y) => x * values[grammar.index[y]],
                    Production::Pair(y, z) => values[grammar.index[y]] * values[grammar.index[z]],
                };
            }
            if acc > GF_VALUE_CAP || !acc.is_finite() {
                return Err(GfError::Diverged { x });
            }
            next[s] = acc;
        }
        residual = values
            .iter()
            .zip(&next)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        values = next;
        if residual <= GF_TOLERANCE {
            return Ok(GfEvaluation { grammar, x, values });
        }
    }
    Err(GfError::NotConverged { x, residual })
}

/// Expected size of a Boltzmann-distributed positive walk at parameter x:
/// x P'(x) / P(x), with the derivatives obtained from the linearized
/// fixed-point system.
pub fn expected_positive_size(eval: &GfEvaluation) -> f64 {
    let grammar = &eval.grammar;
    let m = grammar.symbols.len();
    let x = eval.x;
    // u = A u + c, where u is the vector of derivatives.
    let mut a = vec![vec![0.0f64; m]; m];
    let mut c = vec![0.0f64; m];
    for s in 0..m {
        for prod in &grammar.prods[s] {
            match prod {
                Production::Empty => {}
                Production::Letter(_, y) => {
                    let yi = grammar.index[y];
                    c[s] += eval.values[yi];
                    a[s][yi] += x;
                }
                Production::Pair(y, z) => {
                    let yi = grammar.index[y];
                    let zi = grammar.index[z];
                    a[s][yi] += eval.values[zi];
                    a[s][zi] += eval.values[yi];
                }
            }
        }
    }
    // Solve (I - A) u = c by Gaussian elimination with partial pivoting.
    let mut mat = vec![vec![0.0f64; m + 1]; m];
    for i in 0..m {
        for j in 0..m {
            mat[i][j] = (if i == j { 1.0 } else { 0.0 }) - a[i][j];
        }
        mat[i][m] = c[i];
    }
    for col in 0..m {
        let pivot = (col..m)
            .max_by(|&i, &j| mat[i][col].abs().total_cmp(&mat[j][col].abs()))
            .unwrap();
        mat.swap(col, pivot);
        let p = mat[col][col];
        for i in col + 1..m {
            let f = mat[i][col] / p;
            if f != 0.0 {
                for j in col..=m {
                    let v = mat[col][j];
                    mat[i][j] -= f * v;
                }
            }
        }
    }
    let mut u = vec![0.0f64; m];
    for i in (0..m).rev() {
        let mut acc = mat[i][m];
        for j in i + 1..m {
            acc -= mat[i][j] * u[j];
        }
        u[i] = acc / mat[i][i];
    }
    let p_idx = grammar.index[&NonTerminal::Positive];
    x * u[p_idx] / eval.values[p_idx]
}
