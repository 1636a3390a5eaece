//! The deterministic finite automaton recognizing culminating words of a
//! prescribed final height k, and counting over it.
//!
//! States are the accessible heights 0..=k plus an explicit garbage sink.
//! The initial state is 0 and the single accepting state is k:
//!
//! ```text
//! delta(q, u) = q + a   if q <= k - a, else garbage
//! delta(q, d) = q - b   if q > b,      else garbage
//! delta(k, .) = delta(garbage, .) = garbage
//! ```
//!
//! A word is accepted exactly when it is culminating with final height and
//! maximal height both equal to k.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::word::{Step, StepSystem, Word};

/// DFA over a dense state array of size k + 2; state k + 1 is the garbage
/// sink.
#[derive(Clone, Debug)]
pub struct HeightDfa {
    sys: StepSystem,
    k: u32,
    /// delta[q] = [on Up, on Down].
    delta: Vec<[u32; 2]>,
}

impl HeightDfa {
    pub fn build(sys: &StepSystem, k: u32) -> Self {
        assert!(k >= 1, "target height must be at least 1");
        let a = sys.a();
        let b = sys.b();
        let garbage = k + 1;
        let mut delta = Vec::with_capacity(garbage as usize + 1);
        for q in 0..k {
            let up = if q + a <= k { q + a } else { garbage };
            let down = if q > b { q - b } else { garbage };
            delta.push([up, down]);
        }
        delta.push([garbage, garbage]); // q = k
        delta.push([garbage, garbage]); // garbage
        HeightDfa {
            sys: *sys,
            k,
            delta,
        }
    }

    pub fn sys(&self) -> &StepSystem {
        &self.sys
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of states including the garbage sink.
    pub fn state_count(&self) -> usize {
        self.delta.len()
    }

    pub fn garbage(&self) -> u32 {
        self.k + 1
    }

    pub fn step(&self, q: u32, s: Step) -> u32 {
        self.delta[q as usize][s as usize]
    }

    /// Runs the word from the initial state; accepts in state k.
    pub fn accepts(&self, w: &Word) -> bool {
        let mut q = 0u32;
        for &s in w.steps() {
            q = self.step(q, s);
        }
        q == self.k
    }

    /// Number of accepted words of length n, by dynamic programming over the
    /// states (O(n * k) big-integer additions).
    pub fn count_accepted(&self, n: usize) -> BigUint {
        let m = self.state_count();
        let mut cur = vec![BigUint::zero(); m];
        cur[0] = BigUint::one();
        for _ in 0..n {
            let mut next = vec![BigUint::zero(); m];
            for (q, v) in cur.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                next[self.delta[q][0] as usize] += v;
                next[self.delta[q][1] as usize] += v;
            }
            cur = next;
        }
        cur[self.k as usize].clone()
    }

    /// DOT rendering of the automaton for documentation.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph height_dfa {\n  rankdir=LR;\n");
        out.push_str("  node [shape=circle];\n");
        out.push_str(&format!("  {} [shape=doublecircle];\n", self.k));
        out.push_str(&format!("  {} [label=\"⊥\"];\n", self.garbage()));
        out.push_str("  start [shape=point];\n  start -> 0;\n");
        for q in 0..self.state_count() as u32 {
            for (s, label) in [(Step::Up, "u"), (Step::Down, "d")] {
                out.push_str(&format!(
                    "  {} -> {} [label=\"{}\"];\n",
                    q,
                    self.step(q, s),
                    label
                ));
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{brute_force_count, count_culminating_height};
    use crate::word::parse_word;

    fn sys(a: u32, b: u32) -> StepSystem {
        StepSystem::new(a, b).unwrap()
    }

    #[test]
    fn state_layout() {
        let dfa = HeightDfa::build(&sys(1, 1), 2);
        assert_eq!(dfa.state_count(), 4); // {0, 1, 2, garbage}
        let dfa = HeightDfa::build(&sys(1, 1), 1);
        assert_eq!(dfa.step(0, Step::Down), dfa.garbage());
        assert_eq!(dfa.step(0, Step::Up), 1);
    }

    #[test]
    fn accepts_examples() {
        let dfa = HeightDfa::build(&sys(1, 1), 2);
        assert!(dfa.accepts(&parse_word("uu").unwrap()));
        assert!(!dfa.accepts(&parse_word("udu").unwrap())); // dips to 0: garbage
        let dfa = HeightDfa::build(&sys(1, 1), 3);
        assert!(!dfa.accepts(&parse_word("uduuu").unwrap()));
        assert!(dfa.accepts(&parse_word("uuduu").unwrap()));
        let dfa = HeightDfa::build(&sys(5, 3), 5);
        assert!(dfa.accepts(&parse_word("u").unwrap()));
        assert!(!dfa.accepts(&parse_word("d").unwrap()));
    }

    #[test]
    fn acceptance_equals_culminating_at_height() {
        for &(a, b) in &[(1u32, 1u32), (2, 1), (1, 2), (5, 3)] {
            let s = sys(a, b);
            for k in 1..=3u32 {
                let dfa = HeightDfa::build(&s, k);
                for n in 0..=14usize {
                    let expect = brute_force_count(&s, n, |s, w| {
                        w.is_culminating(s)
                            && w.phi(s) == i64::from(k)
                            && w.height(s) == i64::from(k)
                    })
                    .unwrap();
                    assert_eq!(dfa.count_accepted(n), expect, "({a},{b}) k={k} n={n}");
                }
            }
        }
    }

    #[test]
    fn count_matches_fixed_height_dp() {
        for &(a, b) in &[(1u32, 1u32), (2, 1), (1, 2), (3, 2), (5, 3)] {
            let s = sys(a, b);
            for k in 1..=9u32 {
                let dfa = HeightDfa::build(&s, k);
                for n in 1..=18usize {
                    assert_eq!(
                        dfa.count_accepted(n),
                        count_culminating_height(&s, n, k as usize),
                        "({a},{b}) k={k} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn no_walk_of_impossible_height() {
        let dfa = HeightDfa::build(&sys(5, 3), 6);
        for n in 0..=40 {
            assert!(dfa.count_accepted(n).is_zero());
        }
    }

    #[test]
    fn examples_counts() {
        let dfa = HeightDfa::build(&sys(1, 1), 1);
        assert_eq!(dfa.count_accepted(1), BigUint::one());
        let dfa = HeightDfa::build(&sys(1, 1), 3);
        assert_eq!(dfa.count_accepted(5), BigUint::one());
    }

    #[test]
    fn dot_dump() {
        let dot = HeightDfa::build(&sys(2, 1), 3).to_dot();
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("doublecircle"));
        assert!(dot.contains("⊥"));
    }
}
