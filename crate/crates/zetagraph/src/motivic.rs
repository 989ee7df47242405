//! Integer-coefficient polynomials (and Laurent polynomials) in the symbol L,
//! the class of the affine line in the Grothendieck ring. L is purely formal:
//! no relations beyond polynomial identity are imposed.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MotivicError {
    #[error("polynomial is not divisible by L-1")]
    NotDivisible,
}

/// Sparse Laurent polynomial in L, normalized: no stored zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MotivicPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl MotivicPoly {
    pub fn zero() -> Self {
        MotivicPoly::default()
    }

    pub fn one() -> Self {
        MotivicPoly::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        if !n.is_zero() {
            coeffs.insert(0, n);
        }
        MotivicPoly { coeffs }
    }

    /// The monomial L^k (k may be negative).
    pub fn l_power(k: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(k, BigInt::one());
        MotivicPoly { coeffs }
    }

    pub fn term(exp: i64, coeff: BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        MotivicPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.coeffs.clone();
        for (&e, c) in &other.coeffs {
            let entry = out.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                out.remove(&e);
            }
        }
        MotivicPoly { coeffs: out }
    }

    pub fn neg(&self) -> Self {
        MotivicPoly { coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &other.coeffs {
                let entry = out.entry(e1 + e2).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        out.retain(|_, c| !c.is_zero());
        MotivicPoly { coeffs: out }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = MotivicPoly::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Multiply by L^k.
    pub fn shift(&self, k: i64) -> Self {
        MotivicPoly { coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    /// Evaluation at L = 1, the topological Euler characteristic of the class.
    pub fn specialize_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Exact quotient by (L - 1); defined iff the coefficient sum vanishes.
    pub fn divide_by_l_minus_1(&self) -> Result<Self, MotivicError> {
        if self.is_zero() {
            return Ok(MotivicPoly::zero());
        }
        if !self.specialize_one().is_zero() {
            return Err(MotivicError::NotDivisible);
        }
        let lo = self.min_exp().unwrap();
        let hi = self.max_exp().unwrap();
        // a = (L-1) q with deg q = deg a - 1; synthetic division from the top.
        let mut q: BTreeMap<i64, BigInt> = BTreeMap::new();
        let mut carry = BigInt::zero();
        for e in (lo..=hi).rev() {
            carry += self.coeff(e);
            if e > lo && !carry.is_zero() {
                q.insert(e - 1, carry.clone());
            }
        }
        Ok(MotivicPoly { coeffs: q })
    }

    /// [P^{k-1}] = 1 + L + ... + L^{k-1}, k >= 1.
    pub fn projective_class(k: u64) -> Self {
        assert!(k >= 1, "projective_class requires k >= 1");
        let mut coeffs = BTreeMap::new();
        for i in 0..k {
            coeffs.insert(i as i64, BigInt::one());
        }
        MotivicPoly { coeffs }
    }

    /// JSON form: {"coeffs": {"i": c_i}} with string integer keys.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (e, c) in &self.coeffs {
            map.insert(e.to_string(), super::bigint_json(c));
        }
        serde_json::json!({ "coeffs": map })
    }
}

impl std::fmt::Display for MotivicPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&e, c) in &self.coeffs {
            let neg = c.sign() == num_bigint::Sign::Minus;
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    f.write_str("-")?;
                }
                first = false;
            } else {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            let unit_coeff = mag.is_one();
            match (e, unit_coeff) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("L")?,
                (1, false) => write!(f, "{mag}L")?,
                (_, true) => write!(f, "L^{e}")?,
                (_, false) => write!(f, "{mag}L^{e}")?,
            }
        }
        Ok(())
    }
}
