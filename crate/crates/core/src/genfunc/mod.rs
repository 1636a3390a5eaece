//! Rational generating functions of culminating walks of fixed height k.
//!
//! The series counting culminating walks of height k by length is rational:
//!
//! ```text
//! C_k(t) = t^2 * ((1 - t A_k)^{-1})_{a, k-a} = t^2 N_k / D_k
//! ```
//!
//! where A_k is the adjacency matrix of the height segment 1..k-1 (an edge
//! i -> j exists iff j = i + a or j = i - b), D_k = det(1 - t A_k), and N_k
//! the relevant cofactor. N_2 in the (2,1) system is the Laurent monomial
//! 1/t, so this module works with T_k = t^2 N_k throughout, which is always
//! a genuine polynomial. Determinants are evaluated by fraction-free
//! (Bareiss) elimination with exact divisions.
//!
//! For a = b = 1 the denominators specialize to the Fibonacci polynomials
//! F_0 = F_1 = 1, F_k = F_{k-1} - t^2 F_{k-2}, with C_k = t^k / F_{k-1};
//! for a = 1 in general, T_k = t^k and D_k = D_{k-1} - t^{b+1} D_{k-b-1}
//! with D_k = 1 for k <= b + 1.

pub mod poly;

pub use poly::{Poly, RationalSeries};

use num_bigint::BigUint;
use num_traits::Signed;

use crate::word::StepSystem;

/// Fibonacci polynomials F_0..F_kmax.
pub fn fibonacci_polys(kmax: usize) -> Vec<Poly> {
    let mut out = Vec::with_capacity(kmax + 1);
    out.push(Poly::one());
    if kmax == 0 {
        return out;
    }
    out.push(Poly::one());
    let t2 = Poly::t_power(2);
    for k in 2..=kmax {
        let prev = &out[k - 1] - &(&t2 * &out[k - 2]);
        out.push(prev);
    }
    out
}

/// The matrix 1 - t*A_k of dimension k-1 over the height segment 1..k-1.
#[derive(Clone, Debug)]
pub struct TransferMatrix {
    k: usize,
    /// entries[i][j], 0-indexed over segment heights i+1, j+1.
    entries: Vec<Vec<Poly>>,
}

impl TransferMatrix {
    pub fn build(sys: &StepSystem, k: usize) -> Self {
        assert!(k >= 1);
        let a = sys.a() as usize;
        let b = sys.b() as usize;
        let dim = k - 1;
        let mut entries = vec![vec![Poly::zero(); dim]; dim];
        for i in 1..=dim {
            for j in 1..=dim {
                let adjacency = j == i + a || j + b == i;
                let mut e = if i == j { Poly::one() } else { Poly::zero() };
                if adjacency {
                    e = &e - &Poly::t_power(1);
                }
                entries[i - 1][j - 1] = e;
            }
        }
        TransferMatrix { k, entries }
    }

    pub fn dim(&self) -> usize {
        self.k - 1
    }

    /// det(1 - t*A_k); the empty matrix (k = 1) has determinant 1.
    pub fn determinant(&self) -> Poly {
        det_bareiss(self.entries.clone())
    }

    /// Determinant of the submatrix with 1-indexed row `del_row` and column
    /// `del_col` removed.
    pub fn minor_determinant(&self, del_row: usize, del_col: usize) -> Poly {
        assert!(del_row >= 1 && del_row <= self.dim());
        assert!(del_col >= 1 && del_col <= self.dim());
        let m: Vec<Vec<Poly>> = self
            .entries
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != del_row - 1)
            .map(|(_, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != del_col - 1)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        det_bareiss(m)
    }
}

/// Fraction-free determinant with row pivoting; every division is exact.
fn det_bareiss(mut m: Vec<Vec<Poly>>) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    let mut negate = false;
    let mut prev = Poly::one();
    for r in 0..n - 1 {
        if m[r][r].is_zero() {
            match (r + 1..n).find(|&i| !m[i][r].is_zero()) {
                Some(p) => {
                    m.swap(r, p);
                    negate = !negate;
                }
                None => return Poly::zero(),
            }
        }
        for i in r + 1..n {
            for j in r + 1..n {
                let num = &(&m[i][j] * &m[r][r]) - &(&m[i][r] * &m[r][j]);
                m[i][j] = num
                    .exact_div(&prev)
                    .expect("fraction-free elimination division is exact");
            }
            m[i][r] = Poly::zero();
        }
        prev = m[r][r].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// The pair (D_k, T_k) with T_k = t^2 N_k, so that the series of culminating
/// walks of height k is T_k / D_k.
///
/// For k < a the height-k class is empty and T_k = 0; for k = a it is the
/// single one-step walk and (D, T) is the determinant D_a paired with t.
pub fn dk_nk(sys: &StepSystem, k: usize) -> (Poly, Poly) {
    assert!(k >= 1, "height must be at least 1");
    let a = sys.a() as usize;
    let tm = TransferMatrix::build(sys, k);
    let d = tm.determinant();
    let t = if k < a {
        Poly::zero()
    } else if k == a {
        Poly::t_power(1)
    } else {
        let minor = tm.minor_determinant(k - a, a);
        let signed = if k % 2 == 1 { -minor } else { minor };
        signed.shift_up(2)
    };
    (d, t)
}

/// Coefficients of t^0..t^n of C_k(t) = T_k / D_k, as non-negative integers.
pub fn ck_coeffs(sys: &StepSystem, k: usize, n: usize) -> Vec<BigUint> {
    assert!(k >= sys.a() as usize, "ck_coeffs requires k >= a");
    let (d, t) = dk_nk(sys, k);
    let mut series = RationalSeries::new(t, d);
    series
        .coefficients(n)
        .into_iter()
        .map(|c| {
            assert!(c.is_integer(), "series coefficient not an integer: {c}");
            let int = c.to_integer();
            assert!(!int.is_negative(), "series coefficient negative: {int}");
            int.to_biguint().unwrap()
        })
        .collect()
}

/// Checks seq[k] = sum_r coeffs[r] * seq[k - offsets[r]] for every k with
/// all offsets applicable.
pub fn verify_recurrence(seq: &[Poly], coeffs: &[Poly], offsets: &[usize]) -> bool {
    assert_eq!(coeffs.len(), offsets.len());
    let start = offsets.iter().copied().max().unwrap_or(0);
    for k in start..seq.len() {
        let mut rhs = Poly::zero();
        for (c, &off) in coeffs.iter().zip(offsets) {
            rhs = &rhs + &(c * &seq[k - off]);
        }
        if rhs != seq[k] {
            return false;
        }
    }
    true
}

/// Comparison of determinant-computed denominators against the a = 1
/// recurrence D_k = D_{k-1} - t^{b+1} D_{k-b-1} (D_k = 1 for k <= b + 1),
/// and of numerators against T_k = t^k.
#[derive(Clone, Debug)]
pub struct CorollaryA1Report {
    pub b: u32,
    pub checked_upto: usize,
    /// First k where determinant and recurrence disagree, if any.
    pub first_mismatch: Option<usize>,
}

impl CorollaryA1Report {
    pub fn is_ok(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

pub fn corollary_a1(sys: &StepSystem, kmax: usize) -> CorollaryA1Report {
    assert_eq!(sys.a(), 1, "the closed numerator form requires a = 1");
    let b = sys.b() as usize;
    let mut by_recurrence: Vec<Poly> = vec![Poly::one()]; // index 0 unused, set to 1
    let mut first_mismatch = None;
    for k in 1..=kmax {
        let rec = if k <= b + 1 {
            Poly::one()
        } else {
            &by_recurrence[k - 1] - &(&Poly::t_power(b + 1) * &by_recurrence[k - b - 1])
        };
        let (det, t) = dk_nk(sys, k);
        if det != rec || t != Poly::t_power(k) {
            first_mismatch.get_or_insert(k);
        }
        by_recurrence.push(rec);
    }
    CorollaryA1Report {
        b: sys.b(),
        checked_upto: kmax,
        first_mismatch,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::fixed_height_counts_upto;
    use num_traits::Zero;

    fn sys(a: u32, b: u32) -> StepSystem {
        StepSystem::new(a, b).unwrap()
    }

    #[test]
    fn fibonacci_values() {
        let f = fibonacci_polys(4);
        assert_eq!(f[0], Poly::one());
        assert_eq!(f[1], Poly::one());
        assert_eq!(f[2], Poly::from_int_coeffs(&[1, 0, -1]));
        assert_eq!(f[3], Poly::from_int_coeffs(&[1, 0, -2]));
        assert_eq!(f[4], Poly::from_int_coeffs(&[1, 0, -3, 0, 1]));
    }

    #[test]
    fn null_drift_denominators_are_fibonacci() {
        let s = sys(1, 1);
        let f = fibonacci_polys(12);
        for k in 1..=12 {
            let (d, t) = dk_nk(&s, k);
            assert_eq!(d, f[k - 1], "D_{k}");
            assert_eq!(t, Poly::t_power(k), "T_{k}");
        }
    }

    #[test]
    fn one_two_denominator_recurrence() {
        let s = sys(1, 2);
        let ds: Vec<Poly> = (1..=15).map(|k| dk_nk(&s, k).0).collect();
        assert_eq!(ds[0], Poly::one());
        assert_eq!(ds[1], Poly::one());
        assert_eq!(ds[2], Poly::one());
        // D_k = D_{k-1} - t^3 D_{k-3}
        assert!(verify_recurrence(
            &ds,
            &[Poly::one(), Poly::term_int(-1, 3)],
            &[1, 3]
        ));
    }

    #[test]
    fn two_one_numerators_and_denominators() {
        let s = sys(2, 1);
        let pairs: Vec<(Poly, Poly)> = (1..=15).map(|k| dk_nk(&s, k)).collect();
        let ds: Vec<Poly> = pairs.iter().map(|(d, _)| d.clone()).collect();
        let ts: Vec<Poly> = pairs.iter().map(|(_, t)| t.clone()).collect();
        assert_eq!(ts[0], Poly::zero()); // N_1 = 0
        assert_eq!(ts[1], Poly::t_power(1)); // N_2 = 1/t
        assert_eq!(ts[2], Poly::t_power(3)); // N_3 = t
        assert!(verify_recurrence(
            &ds,
            &[Poly::one(), Poly::term_int(-1, 3)],
            &[1, 3]
        ));
        // T_k = t T_{k-2} + t^3 T_{k-3}
        assert!(verify_recurrence(
            &ts,
            &[Poly::t_power(1), Poly::t_power(3)],
            &[2, 3]
        ));
        // deliberately wrong coefficients fail
        assert!(!verify_recurrence(
            &ds,
            &[Poly::one(), Poly::term_int(1, 3)],
            &[1, 3]
        ));
    }

    #[test]
    fn series_examples() {
        let c = ck_coeffs(&sys(1, 1), 3, 9);
        let ints: Vec<u32> = c.iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(ints, vec![0, 0, 0, 1, 0, 1, 0, 1, 0, 1]);
        let c = ck_coeffs(&sys(1, 1), 1, 4);
        let ints: Vec<u32> = c.iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(ints, vec![0, 1, 0, 0, 0]);
    }

    #[test]
    fn coefficients_match_fixed_height_dp() {
        for &(a, b) in &[(1u32, 1u32), (2, 1), (1, 2), (3, 2), (5, 3)] {
            let s = sys(a, b);
            for k in a as usize..=(a as usize + 8) {
                let coeffs = ck_coeffs(&s, k, 30);
                let dp = fixed_height_counts_upto(&s, 30, k);
                assert_eq!(coeffs[0], BigUint::zero());
                for n in 0..=30 {
                    assert_eq!(coeffs[n], dp[n], "({a},{b}) k={k} n={n}");
                }
            }
        }
    }

    #[test]
    fn degenerate_heights_vanish() {
        let s = sys(5, 3);
        for k in [1usize, 2, 3, 4, 6] {
            if k < 5 {
                let (_, t) = dk_nk(&s, k);
                assert!(t.is_zero(), "T_{k} should vanish");
            } else {
                let coeffs = ck_coeffs(&s, k, 30);
                assert!(coeffs.iter().all(Zero::is_zero), "C_{k} should vanish");
            }
        }
    }

    #[test]
    fn denominator_constant_term_is_one() {
        for &(a, b) in &[(1u32, 1u32), (2, 1), (1, 2), (3, 2), (5, 3)] {
            let s = sys(a, b);
            for k in 1..=12 {
                let (d, _) = dk_nk(&s, k);
                assert!(d.coeff(0).is_integer());
                assert_eq!(d.coeff(0).to_integer().to_string(), "1", "({a},{b}) k={k}");
            }
        }
    }

    #[test]
    fn denominator_symmetric_in_a_b() {
        for &(a, b) in &[(2u32, 1u32), (3, 2), (5, 3)] {
            for k in 1..=10 {
                let (d1, _) = dk_nk(&sys(a, b), k);
                let (d2, _) = dk_nk(&sys(b, a), k);
                assert_eq!(d1, d2, "({a},{b}) k={k}");
            }
        }
    }

    #[test]
    fn corollary_reports() {
        assert!(corollary_a1(&sys(1, 1), 12).is_ok());
        assert!(corollary_a1(&sys(1, 2), 15).is_ok());
        assert!(corollary_a1(&sys(1, 3), 15).is_ok());
    }

    #[test]
    fn unit_upstep_numerators_satisfy_order_one_recurrence() {
        // For a = 1 the numerators are plain monomials: T_k = t T_{k-1}.
        for b in [1u32, 2, 3] {
            let s = sys(1, b);
            let ts: Vec<Poly> = (1..=12).map(|k| dk_nk(&s, k).1).collect();
            assert!(verify_recurrence(&ts, &[Poly::t_power(1)], &[1]), "b={b}");
        }
    }
}
