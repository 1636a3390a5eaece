//! Step systems, words, height profiles, and the classifying predicates.
//!
//! A walk takes steps +a (up) and -b (down) on the integer line, starting at
//! 0. It is encoded as a word over the two-letter alphabet {u, d}. The height
//! profile of a word of length n is the sequence eta_0 = 0, eta_1, ..., eta_n
//! with eta_{i+1} - eta_i in {+a, -b}. The final height of w is
//!
//! ```text
//! phi(w) = a * #u(w) - b * #d(w)
//! ```
//!
//! A word is *positive* when every non-empty prefix has phi > 0, and
//! *culminating* when, in addition, it is non-empty and every proper prefix
//! has phi strictly below phi(w) (the walk ends at a strict record height).

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

/// A single letter of the walk alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::Up => 'u',
            Step::Down => 'd',
        }
    }
}

/// Validation failures for a pair of step sizes.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SystemError {
    #[error("step sizes must be positive, got ({a}, {b})")]
    NonPositive { a: u32, b: u32 },
    #[error("step sizes must be coprime, got ({a}, {b}) with gcd {gcd}")]
    NotCoprime { a: u32, b: u32, gcd: u32 },
}

/// The pair (a, b) of coprime step sizes: up-steps raise the height by `a`,
/// down-steps lower it by `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StepSystem {
    a: u32,
    b: u32,
}

impl StepSystem {
    /// Validates and builds a step system. Rejects non-positive sizes and
    /// non-coprime pairs.
    pub fn new(a: u32, b: u32) -> Result<Self, SystemError> {
        if a == 0 || b == 0 {
            return Err(SystemError::NonPositive { a, b });
        }
        let gcd = a.gcd(&b);
        if gcd != 1 {
            return Err(SystemError::NotCoprime { a, b, gcd });
        }
        Ok(StepSystem { a, b })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    /// Signed height change of one letter.
    pub fn delta(&self, step: Step) -> i64 {
        match step {
            Step::Up => i64::from(self.a),
            Step::Down => -i64::from(self.b),
        }
    }

    /// The drift a - b. Positive drift makes culminating walks a positive
    /// fraction of all walks, zero drift a polynomially rare one, negative
    /// drift an exponentially rare one.
    pub fn drift(&self) -> i64 {
        i64::from(self.a) - i64::from(self.b)
    }
}

impl fmt::Display for StepSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Word parse failure, with the offending position.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("invalid character {found:?} at index {position} (expected 'u' or 'd')")]
pub struct ParseError {
    pub position: usize,
    pub found: char,
}

/// A finite sequence of steps. Immutable after construction.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    steps: Vec<Step>,
}

impl Word {
    pub fn new(steps: Vec<Step>) -> Self {
        Word { steps }
    }

    pub fn empty() -> Self {
        Word { steps: Vec::new() }
    }

    /// The all-up word u^n, culminating for every n >= 1.
    pub fn all_up(n: usize) -> Self {
        Word {
            steps: vec![Step::Up; n],
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of up letters.
    pub fn ups(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::Up).count()
    }

    /// Number of down letters.
    pub fn downs(&self) -> usize {
        self.len() - self.ups()
    }

    /// The height profile eta_0..eta_n (length n + 1, starts at 0).
    pub fn heights(&self, sys: &StepSystem) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let mut h = 0i64;
        out.push(h);
        for &s in &self.steps {
            h += sys.delta(s);
            out.push(h);
        }
        out
    }

    /// Final height phi(w) = a*#u - b*#d.
    pub fn phi(&self, sys: &StepSystem) -> i64 {
        i64::from(sys.a()) * self.ups() as i64 - i64::from(sys.b()) * self.downs() as i64
    }

    /// The largest value of the height profile (>= 0 since eta_0 = 0).
    pub fn height(&self, sys: &StepSystem) -> i64 {
        let mut h = 0i64;
        let mut max = 0i64;
        for &s in &self.steps {
            h += sys.delta(s);
            max = max.max(h);
        }
        max
    }

    /// True iff every non-empty prefix has positive final height. The empty
    /// word is positive (vacuously).
    pub fn is_positive(&self, sys: &StepSystem) -> bool {
        let mut h = 0i64;
        for &s in &self.steps {
            h += sys.delta(s);
            if h <= 0 {
                return false;
            }
        }
        true
    }

    /// True iff the word is non-empty, positive, and every proper prefix ends
    /// strictly below the final height.
    pub fn is_culminating(&self, sys: &StepSystem) -> bool {
        if self.is_empty() {
            return false;
        }
        let mut h = 0i64;
        let mut max_proper = 0i64; // max over eta_0..eta_{n-1}
        for (i, &s) in self.steps.iter().enumerate() {
            if i > 0 {
                max_proper = max_proper.max(h);
            }
            h += sys.delta(s);
            if h <= 0 {
                return false;
            }
        }
        h > max_proper
    }

    /// True iff the profile stays non-negative and ends at 0. The empty word
    /// is an excursion.
    pub fn is_excursion(&self, sys: &StepSystem) -> bool {
        let mut h = 0i64;
        for &s in &self.steps {
            h += sys.delta(s);
            if h < 0 {
                return false;
            }
        }
        h == 0
    }

    /// True iff every step except the final one ends at a positive level and
    /// the final one does not. Removing the last (down) step of a
    /// quasi-excursion leaves a positive walk ending at height <= b.
    pub fn is_quasi_excursion(&self, sys: &StepSystem) -> bool {
        let n = self.len();
        if n == 0 {
            return false;
        }
        let mut h = 0i64;
        for (i, &s) in self.steps.iter().enumerate() {
            h += sys.delta(s);
            if i + 1 < n {
                if h <= 0 {
                    return false;
                }
            } else {
                return h <= 0;
            }
        }
        unreachable!()
    }

    /// The reversed step sequence. Culminating words are closed under mirror.
    pub fn mirror(&self) -> Word {
        let mut steps = self.steps.clone();
        steps.reverse();
        Word { steps }
    }

    /// Concatenation self . other.
    pub fn concat(&self, other: &Word) -> Word {
        let mut steps = Vec::with_capacity(self.len() + other.len());
        steps.extend_from_slice(&self.steps);
        steps.extend_from_slice(&other.steps);
        Word { steps }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        parse_word(text)
    }
}

/// Parses a word from its 'u'/'d' text form.
pub fn parse_word(text: &str) -> Result<Word, ParseError> {
    let mut steps = Vec::with_capacity(text.len());
    for (position, found) in text.chars().enumerate() {
        match found {
            'u' => steps.push(Step::Up),
            'd' => steps.push(Step::Down),
            _ => return Err(ParseError { position, found }),
        }
    }
    Ok(Word::new(steps))
}

/// Renders a word in its 'u'/'d' text form.
pub fn format_word(w: &Word) -> String {
    w.to_string()
}

/// Builds the zig-zag word u^i d^j u^i with i, j > n and i*a - j*b = 1.
///
/// The exponents come from the extended Euclidean algorithm, shifted along
/// the solution line (i + t*b, j + t*a) until both exceed n. The result is
/// always culminating: the descent bottoms out at height 1 and the final
/// ascent ends one unit above the first peak.
pub fn zigzag_witness(sys: &StepSystem, n: u64) -> Word {
    let a = u64::from(sys.a());
    let b = u64::from(sys.b());
    // Minimal positive i with i*a = 1 (mod b).
    let egcd = (a as i64).extended_gcd(&(b as i64));
    debug_assert_eq!(egcd.gcd, 1);
    let mut i = egcd.x.rem_euclid(b as i64) as u64;
    if i == 0 {
        i = b;
    }
    while i <= n || i * a <= b {
        i += b;
    }
    let mut j = (i * a - 1) / b;
    debug_assert_eq!(i * a - j * b, 1);
    while j <= n {
        i += b;
        j += a;
    }
    let mut steps = Vec::with_capacity((2 * i + j) as usize);
    steps.extend(std::iter::repeat(Step::Up).take(i as usize));
    steps.extend(std::iter::repeat(Step::Down).take(j as usize));
    steps.extend(std::iter::repeat(Step::Up).take(i as usize));
    Word::new(steps)
}
