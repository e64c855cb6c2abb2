//! Laurent polynomials with integer coefficients.
//!
//! Used both for Hecke algebra coefficients (in `v`) and for graded
//! dimensions and Hilbert series (in `t`).

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

/// `Σ coeffs[k] · x^(low + k)`, trimmed so that the first and last stored
/// coefficients are nonzero. The zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    pub fn monomial(c: i64, exp: i32) -> Self {
        LaurentPoly::from_coeffs(exp, vec![c])
    }

    pub fn from_coeffs(low: i32, coeffs: Vec<i64>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        terms.into_iter().fold(LaurentPoly::zero(), |acc, (e, c)| {
            acc + LaurentPoly::monomial(c, e)
        })
    }

    fn trim(&mut self) {
        let lead_zeros = self.coeffs.iter().take_while(|c| **c == 0).count();
        if lead_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
            return;
        }
        self.coeffs.drain(..lead_zeros);
        self.low += lead_zeros as i32;
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        let k = exp - self.low;
        if k < 0 {
            return 0;
        }
        self.coeffs.get(k as usize).copied().unwrap_or(0)
    }

    pub fn min_degree(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_degree(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    /// Non-zero terms in ascending degree.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(move |(k, c)| (self.low + k as i32, *c))
    }

    /// Substitutes `x → x⁻¹`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly::from_coeffs(-self.max_degree().unwrap(), coeffs)
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Value at `x = 1`.
    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| *c >= 0)
    }

    /// Exact division; `None` if `divisor` is zero or the remainder is nonzero.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let dlow = divisor.low;
        let dlead = *divisor.coeffs.last().unwrap();
        let dtop = divisor.max_degree().unwrap();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while !rem.is_zero() {
            let rtop = rem.max_degree().unwrap();
            let rlead = *rem.coeffs.last().unwrap();
            if rtop - dtop < rem.low - dlow || rlead % dlead != 0 {
                return None;
            }
            let term = LaurentPoly::monomial(rlead / dlead, rtop - dtop);
            rem -= &(&term * divisor);
            quot += &term;
        }
        Some(quot)
    }

    /// Renders in ascending degree, e.g. `1 + 2t^2 - t^-1` as `-t^-1 + 1 + 2t^2`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if i == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let mono = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag == 1 {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.max_degree().unwrap().max(rhs.max_degree().unwrap());
        let coeffs = (low..=high).map(|e| self.coeff(e) + rhs.coeff(e)).collect();
        LaurentPoly::from_coeffs(low, coeffs)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self + rhs;
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self - rhs;
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = a
                    .checked_mul(*b)
                    .and_then(|p| coeffs[i + j].checked_add(p))
                    .expect("Laurent coefficient overflow");
            }
        }
        LaurentPoly::from_coeffs(self.low + rhs.low, coeffs)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_trim() {
        let p = LaurentPoly::from_coeffs(-2, vec![0, 0, 1, 0, 2, 0]);
        assert_eq!(p, LaurentPoly::from_terms([(0, 1), (2, 2)]));
        assert_eq!(p.min_degree(), Some(0));
        assert_eq!(p.max_degree(), Some(2));
        assert!(LaurentPoly::from_coeffs(5, vec![0, 0]).is_zero());
    }

    #[test]
    fn v_plus_inverse_is_bar_invariant() {
        let p = LaurentPoly::from_terms([(1, 1), (-1, 1)]);
        assert!(p.is_bar_invariant());
        assert_eq!(p.eval_at_one(), 2);
        assert!(!LaurentPoly::monomial(1, 1).is_bar_invariant());
    }

    #[test]
    fn rendering() {
        assert_eq!(
            LaurentPoly::from_terms([(0, 1), (2, 1)]).to_string(),
            "1 + t^2"
        );
        assert_eq!(
            LaurentPoly::from_terms([(-1, -1), (1, 3)]).render("v"),
            "-v^-1 + 3v"
        );
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let a = LaurentPoly::from_terms([(0, 1), (2, 1)]);
        let b = LaurentPoly::from_terms([(0, 1), (1, 1)]);
        let ab = &a * &b;
        assert_eq!(ab.div_exact(&b), Some(a.clone()));
        assert_eq!(a.div_exact(&b), None);
        assert_eq!(a.div_exact(&LaurentPoly::zero()), None);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        (-3i32..3, prop::collection::vec(-4i64..5, 0..5))
            .prop_map(|(low, coeffs)| LaurentPoly::from_coeffs(low, coeffs))
    }

    proptest! {
        #[test]
        fn product_divides_back(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let p = &a * &b;
            prop_assert_eq!(p.div_exact(&b), Some(a.clone()));
            prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        }
    }
}
