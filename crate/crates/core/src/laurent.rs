//! Sparse integer Laurent polynomials in one variable.
//!
//! The same representation serves two rings: `Z[v, v^{-1}]` with `v^2 = q`
//! (coefficients of the Hecke algebra) and `Z[q, q^{-1}]` (Kazhdan-Lusztig
//! polynomials, q-analogs, graded multiplicities). Helpers convert between
//! the two gradings where a caller crosses that boundary.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// Sparse Laurent polynomial with integer coefficients.
///
/// Invariant: no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    coeffs: BTreeMap<i32, i64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent::monomial(0, 1)
    }

    pub fn monomial(deg: i32, coeff: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert(deg, coeff);
        }
        Laurent { coeffs }
    }

    pub fn from_pairs<I: IntoIterator<Item = (i32, i64)>>(pairs: I) -> Self {
        let mut p = Laurent::zero();
        for (d, c) in pairs {
            p.add_term(d, c);
        }
        p
    }

    /// `1 + x + x^2 + ... + x^{n-1}`.
    pub fn geometric(n: u32) -> Self {
        Laurent::from_pairs((0..n as i32).map(|d| (d, 1)))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(0) == 1
    }

    pub fn coeff(&self, deg: i32) -> i64 {
        self.coeffs.get(&deg).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, deg: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.coeffs.entry(deg).or_insert(0);
        *slot = slot
            .checked_add(coeff)
            .expect("laurent coefficient overflow");
        if *slot == 0 {
            self.coeffs.remove(&deg);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs.iter().map(|(d, c)| (*d, *c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_deg(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_deg(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Leading (highest-degree) coefficient; 0 for the zero polynomial.
    pub fn leading_coeff(&self) -> i64 {
        self.max_deg().map(|d| self.coeff(d)).unwrap_or(0)
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Laurent::zero();
        }
        Laurent {
            coeffs: self
                .coeffs
                .iter()
                .map(|(d, a)| (*d, a.checked_mul(c).expect("laurent overflow")))
                .collect(),
        }
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: i32) -> Self {
        Laurent {
            coeffs: self.coeffs.iter().map(|(d, c)| (d + k, *c)).collect(),
        }
    }

    /// The bar involution `x -> x^{-1}`.
    pub fn bar(&self) -> Self {
        Laurent {
            coeffs: self.coeffs.iter().map(|(d, c)| (-d, *c)).collect(),
        }
    }

    /// Substitute `x -> x^k` for `k != 0` (negative k composes with bar).
    pub fn inflate(&self, k: i32) -> Self {
        assert!(k != 0);
        Laurent {
            coeffs: self.coeffs.iter().map(|(d, c)| (d * k, *c)).collect(),
        }
    }

    /// Evaluate at an integer point.
    pub fn eval_int(&self, x: i64) -> i64 {
        self.terms()
            .map(|(d, c)| {
                assert!(d >= 0 || x.abs() == 1, "negative degree at non-unit point");
                let p = if d >= 0 {
                    x.checked_pow(d as u32).expect("eval overflow")
                } else {
                    // x = ±1
                    x.checked_pow(d.unsigned_abs()).expect("eval overflow")
                };
                c.checked_mul(p).expect("eval overflow")
            })
            .fold(0i64, |acc, t| acc.checked_add(t).expect("eval overflow"))
    }

    /// Truncate to degrees `<= bound`.
    pub fn truncate_above(&self, bound: i32) -> Self {
        Laurent {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(d, _)| **d <= bound)
                .map(|(d, c)| (*d, *c))
                .collect(),
        }
    }

    /// Truncate to degrees `>= bound`.
    pub fn truncate_below(&self, bound: i32) -> Self {
        Laurent {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(d, _)| **d >= bound)
                .map(|(d, c)| (*d, *c))
                .collect(),
        }
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| *c > 0)
    }

    /// Exact division; `None` if the divisor is zero or does not divide.
    pub fn checked_div(&self, rhs: &Laurent) -> Option<Laurent> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Laurent::zero());
        }
        let mut rem = self.clone();
        let mut quot = Laurent::zero();
        let dd = rhs.max_deg().unwrap();
        let dc = rhs.leading_coeff();
        while !rem.is_zero() {
            let rd = rem.max_deg().unwrap();
            let rc = rem.leading_coeff();
            if rc % dc != 0 {
                return None;
            }
            let t = Laurent::monomial(rd - dd, rc / dc);
            quot += t.clone();
            rem -= t * rhs.clone();
            if let Some(nd) = rem.max_deg() {
                if nd >= rd {
                    return None;
                }
            }
        }
        Some(quot)
    }

    /// Reverse a polynomial: `x^{max_deg} * p(x^{-1})` shifted so its lowest
    /// degree is the old `min_deg`. Equivalent to reflecting the coefficient
    /// sequence in place.
    pub fn reversed(&self) -> Laurent {
        match (self.min_deg(), self.max_deg()) {
            (Some(lo), Some(hi)) => Laurent {
                coeffs: self.coeffs.iter().map(|(d, c)| (lo + hi - d, *c)).collect(),
            },
            _ => Laurent::zero(),
        }
    }

    /// Pretty form like `q^-2 + 2q + 1` with the given variable name.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (d, c)) in self.coeffs.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if *c < 0 {
                    out.push('-');
                }
            } else if *c < 0 {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let body = match d {
                0 => format!("{mag}"),
                1 if mag == 1 => var.to_string(),
                1 => format!("{mag}{var}"),
                _ if mag == 1 => format!("{var}^{d}"),
                _ => format!("{mag}{var}^{d}"),
            };
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("x"))
    }
}

impl Add for Laurent {
    type Output = Laurent;
    fn add(mut self, rhs: Laurent) -> Laurent {
        self += rhs;
        self
    }
}

impl AddAssign for Laurent {
    fn add_assign(&mut self, rhs: Laurent) {
        for (d, c) in rhs.coeffs {
            self.add_term(d, c);
        }
    }
}

impl Sub for Laurent {
    type Output = Laurent;
    fn sub(mut self, rhs: Laurent) -> Laurent {
        self -= rhs;
        self
    }
}

impl SubAssign for Laurent {
    fn sub_assign(&mut self, rhs: Laurent) {
        for (d, c) in rhs.coeffs {
            self.add_term(d, -c);
        }
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        self.scale(-1)
    }
}

impl Mul for Laurent {
    type Output = Laurent;
    fn mul(self, rhs: Laurent) -> Laurent {
        &self * &rhs
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (d1, c1) in self.terms() {
            for (d2, c2) in rhs.terms() {
                out.add_term(d1 + d2, c1.checked_mul(c2).expect("laurent overflow"));
            }
        }
        out
    }
}

/// Polynomials in `v` with `v^2 = q`: view a polynomial in q as one in v.
pub fn q_to_v(p: &Laurent) -> Laurent {
    p.inflate(2)
}

/// Extract a polynomial in q from a polynomial in v supported on even degrees.
/// Panics if an odd-degree term is present.
pub fn v_to_q(p: &Laurent) -> Laurent {
    Laurent::from_pairs(p.terms().map(|(d, c)| {
        assert!(d % 2 == 0, "odd v-degree {d} cannot be written in q");
        (d / 2, c)
    }))
}

/// A quotient of Laurent polynomials, compared by cross-multiplication.
/// Used where values live in `Z(q)` without a preferred normal form.
#[derive(Clone, Debug)]
pub struct LaurentRatio {
    pub num: Laurent,
    pub den: Laurent,
}

impl LaurentRatio {
    pub fn new(num: Laurent, den: Laurent) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        LaurentRatio { num, den }
    }

    pub fn from_poly(p: Laurent) -> Self {
        LaurentRatio::new(p, Laurent::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn mul(&self, rhs: &LaurentRatio) -> LaurentRatio {
        LaurentRatio::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    pub fn scale(&self, c: i64) -> LaurentRatio {
        LaurentRatio::new(self.num.scale(c), self.den.clone())
    }

    pub fn eq_ratio(&self, rhs: &LaurentRatio) -> bool {
        &self.num * &rhs.den == &rhs.num * &self.den
    }

    /// Reduce to a Laurent polynomial if the division is exact.
    pub fn to_poly(&self) -> Option<Laurent> {
        self.num.checked_div(&self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn arithmetic_basics() {
        let p = Laurent::from_pairs([(0, 1), (1, 1)]); // 1 + x
        let q = Laurent::from_pairs([(0, -1), (1, 1)]); // x - 1
        assert_eq!(&p * &q, Laurent::from_pairs([(2, 1), (0, -1)]));
        assert_eq!(p.clone() - p.clone(), Laurent::zero());
        assert_eq!(p.bar(), Laurent::from_pairs([(0, 1), (-1, 1)]));
        assert_eq!(p.eval_int(3), 4);
    }

    #[test]
    fn division_exact_and_inexact() {
        let num = Laurent::geometric(4); // 1+x+x^2+x^3
        let den = Laurent::from_pairs([(0, 1), (1, 1)]);
        let q = num.checked_div(&den).unwrap();
        assert_eq!(q, Laurent::from_pairs([(0, 1), (2, 1)]));
        assert!(Laurent::geometric(3).checked_div(&den).is_none());
    }

    #[test]
    fn q_v_conversion() {
        let p = Laurent::from_pairs([(-1, 2), (3, 1)]);
        assert_eq!(v_to_q(&q_to_v(&p)), p);
    }

    fn arb_laurent() -> impl Strategy<Value = Laurent> {
        prop::collection::vec((-6i32..6, -4i64..4), 0..6)
            .prop_map(|v| Laurent::from_pairs(v))
    }

    proptest! {
        #[test]
        fn mul_commutes_and_distributes(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
            prop_assert_eq!(&a * &b, &b * &a);
            let lhs = &a * &(b.clone() + c.clone());
            let rhs = &a * &b + &a * &c;
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn division_roundtrip(a in arb_laurent(), b in arb_laurent()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            let q = prod.checked_div(&b).expect("exact division must succeed");
            prop_assert_eq!(q, a);
        }

        #[test]
        fn bar_is_involutive_ring_map(a in arb_laurent(), b in arb_laurent()) {
            prop_assert_eq!(a.bar().bar(), a.clone());
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        }
    }
}
