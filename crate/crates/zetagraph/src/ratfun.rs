//! Exact multivariate Laurent polynomials over the L-Laurent ring, and
//! rational-function expressions for identity checking. The functional
//! equation substitutes t_v -> (L t_v)^{-1}, which does not act on truncated
//! power series, so it is verified here at the rational-function level.

use crate::motivic::MotivicPoly;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RatFunError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
}

/// Sparse Laurent polynomial in x_1..x_n with MotivicPoly coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, MotivicPoly>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], MotivicPoly::one())
    }

    pub fn monomial(exp: Vec<i64>, coeff: MotivicPoly) -> Self {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &MotivicPoly)> {
        self.terms.iter()
    }

    fn insert(&mut self, exp: Vec<i64>, coeff: MotivicPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&coeff);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exp: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert(exp, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &MotivicPoly) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, x) in &self.terms {
            out.insert(e.clone(), x.mul(c));
        }
        out
    }

    /// The substitution x_v -> (L x_v)^{-1} for every v.
    pub fn substitute_inverse(&self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let total: i64 = e.iter().sum();
            let exp: Vec<i64> = e.iter().map(|a| -a).collect();
            out.insert(exp, c.shift(-total));
        }
        out
    }

    /// The substitution x_v -> x_v^{-1} (no L factor), for the classical check.
    pub fn substitute_reciprocal(&self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.insert(e.iter().map(|a| -a).collect(), c.clone());
        }
        out
    }

    fn min_exponents(&self) -> Option<(Vec<i64>, i64)> {
        let mut it = self.terms.iter();
        let (first, c0) = it.next()?;
        let mut mins = first.clone();
        let mut lmin = c0.min_exp().unwrap();
        for (e, c) in it {
            for (m, x) in mins.iter_mut().zip(e) {
                *m = (*m).min(*x);
            }
            lmin = lmin.min(c.min_exp().unwrap());
        }
        Some((mins, lmin))
    }

    fn shift_all(&self, dx: &[i64], dl: i64) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let exp: Vec<i64> = e.iter().zip(dx).map(|(a, d)| a + d).collect();
            out.insert(exp, c.shift(dl));
        }
        out
    }
}

/// A pair of Laurent polynomials; equality is cross-multiplication.
#[derive(Debug, Clone)]
pub struct RationalFunctionExpr {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

impl RationalFunctionExpr {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, RatFunError> {
        if den.is_zero() {
            return Err(RatFunError::ZeroDenominator);
        }
        if num.nvars() != den.nvars() {
            return Err(RatFunError::VariableMismatch(num.nvars(), den.nvars()));
        }
        Ok(RationalFunctionExpr { num, den })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let n = p.nvars();
        RationalFunctionExpr { num: p, den: LaurentPoly::one(n) }
    }

    pub fn mul(&self, other: &Self) -> Self {
        RationalFunctionExpr {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
    }

    /// Apply x_v -> (L x_v)^{-1} to numerator and denominator, then clear
    /// monomial factors.
    pub fn substitute_inverse(&self) -> Self {
        RationalFunctionExpr {
            num: self.num.substitute_inverse(),
            den: self.den.substitute_inverse(),
        }
        .normalized()
    }

    pub fn substitute_reciprocal(&self) -> Self {
        RationalFunctionExpr {
            num: self.num.substitute_reciprocal(),
            den: self.den.substitute_reciprocal(),
        }
        .normalized()
    }

    /// Clear the common monomial factor x^m L^k so that the minimum exponent
    /// of every variable (and of L) over numerator and denominator is zero.
    pub fn normalized(&self) -> Self {
        let (nx, nl) = match self.num.min_exponents() {
            Some(v) => v,
            None => return self.clone(),
        };
        let (dx, dl) = self.den.min_exponents().expect("nonzero denominator");
        let shift_x: Vec<i64> = nx.iter().zip(&dx).map(|(a, b)| -(*a).min(*b)).collect();
        let shift_l = -nl.min(dl);
        RationalFunctionExpr {
            num: self.num.shift_all(&shift_x, shift_l),
            den: self.den.shift_all(&shift_x, shift_l),
        }
    }
}

/// A/B = C/D as rational functions iff A*D = C*B as Laurent polynomials.
pub fn rational_identity_check(
    lhs: &RationalFunctionExpr,
    rhs: &RationalFunctionExpr,
) -> Result<bool, RatFunError> {
    if lhs.num.nvars() != rhs.num.nvars() {
        return Err(RatFunError::VariableMismatch(lhs.num.nvars(), rhs.num.nvars()));
    }
    if lhs.den.is_zero() || rhs.den.is_zero() {
        return Err(RatFunError::ZeroDenominator);
    }
    let cross = lhs.num.mul(&rhs.den).sub(&rhs.num.mul(&lhs.den));
    Ok(cross.is_zero())
}

/// 1 - x_v as a Laurent polynomial.
pub fn one_minus_var(nvars: usize, var: usize, coeff: MotivicPoly) -> LaurentPoly {
    let mut exp = vec![0i64; nvars];
    exp[var] = 1;
    LaurentPoly::one(nvars).sub(&LaurentPoly::monomial(exp, coeff))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(nvars: usize, var: usize) -> LaurentPoly {
        let mut e = vec![0; nvars];
        e[var] = 1;
        LaurentPoly::monomial(e, MotivicPoly::one())
    }

    #[test]
    fn cross_multiplication_equality() {
        // x/(1-x) equals x(1-x)/(1-x)^2
        let n = 1;
        let omx = one_minus_var(n, 0, MotivicPoly::one());
        let a = RationalFunctionExpr::new(x(n, 0), omx.clone()).unwrap();
        let b = RationalFunctionExpr::new(x(n, 0).mul(&omx), omx.mul(&omx)).unwrap();
        assert!(rational_identity_check(&a, &b).unwrap());
        // 1/(1-x) != 1/(1-Lx)
        let c = RationalFunctionExpr::new(LaurentPoly::one(n), omx).unwrap();
        let d = RationalFunctionExpr::new(
            LaurentPoly::one(n),
            one_minus_var(n, 0, MotivicPoly::l_power(1)),
        )
        .unwrap();
        assert!(!rational_identity_check(&c, &d).unwrap());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunctionExpr::new(LaurentPoly::one(1), LaurentPoly::zero(1)).unwrap_err(),
            RatFunError::ZeroDenominator
        );
    }

    #[test]
    fn substitute_inverse_on_one_minus_x() {
        // 1 - x -> 1 - 1/(Lx) = (Lx - 1)/(Lx)
        let p = one_minus_var(1, 0, MotivicPoly::one());
        let r = RationalFunctionExpr::from_poly(p).substitute_inverse();
        let lx = LaurentPoly::monomial(vec![1], MotivicPoly::l_power(1));
        let expect =
            RationalFunctionExpr::new(lx.sub(&LaurentPoly::one(1)), lx).unwrap();
        assert!(rational_identity_check(&r, &expect).unwrap());
    }

    #[test]
    fn substitute_inverse_fixes_constants() {
        let c = LaurentPoly::monomial(vec![0, 0], MotivicPoly::l_power(1));
        let r = RationalFunctionExpr::from_poly(c.clone()).substitute_inverse();
        assert!(rational_identity_check(&r, &RationalFunctionExpr::from_poly(c)).unwrap());
    }

    #[test]
    fn substitute_inverse_is_involution() {
        let n = 2;
        let p = one_minus_var(n, 0, MotivicPoly::one())
            .mul(&one_minus_var(n, 1, MotivicPoly::l_power(1)))
            .add(&x(n, 0).mul(&x(n, 1)));
        let q = one_minus_var(n, 1, MotivicPoly::one());
        let r = RationalFunctionExpr::new(p, q).unwrap().normalized();
        let twice = r.substitute_inverse().substitute_inverse();
        assert!(rational_identity_check(&r, &twice).unwrap());
        assert_eq!(r.num, twice.num);
        assert_eq!(r.den, twice.den);
    }
}
