//! Truncated multivariate formal series over an exact coefficient ring, and
//! the univariate expansions the series formulas are assembled from.
//!
//! Exponent vectors live in E*-space (variables x_v = t^{E_v*}), so all
//! exponents are non-negative integers; truncation is by total degree.

use crate::lattice::enumerate_exponents;
use crate::motivic::MotivicPoly;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
}

/// Exponent vector ordered graded-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Exp(pub Vec<i64>);

impl Exp {
    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl Ord for Exp {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Coefficient ring abstraction: exact integers or polynomials in L.
pub trait Coeff: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_bigint(n: BigInt) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn render(&self) -> String;
    fn to_json(&self) -> serde_json::Value;
}

impl Coeff for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_bigint(n: BigInt) -> Self {
        n
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn render(&self) -> String {
        self.to_string()
    }
    fn to_json(&self) -> serde_json::Value {
        crate::bigint_json(self)
    }
}

impl Coeff for MotivicPoly {
    fn zero() -> Self {
        MotivicPoly::zero()
    }
    fn one() -> Self {
        MotivicPoly::one()
    }
    fn from_bigint(n: BigInt) -> Self {
        MotivicPoly::from_bigint(n)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn is_zero(&self) -> bool {
        MotivicPoly::is_zero(self)
    }
    fn render(&self) -> String {
        self.to_string()
    }
    fn to_json(&self) -> serde_json::Value {
        MotivicPoly::to_json(self)
    }
}

/// Finitely supported series truncated at a total E*-degree.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<C: Coeff> {
    nvars: usize,
    order: u32,
    terms: BTreeMap<Exp, C>,
}

impl<C: Coeff> TruncatedSeries<C> {
    pub fn zero(nvars: usize, order: u32) -> Self {
        TruncatedSeries { nvars, order, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize, order: u32) -> Self {
        let mut s = Self::zero(nvars, order);
        s.add_term(vec![0; nvars], C::one());
        s
    }

    pub fn constant(nvars: usize, order: u32, c: C) -> Self {
        let mut s = Self::zero(nvars, order);
        s.add_term(vec![0; nvars], c);
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[i64]) -> C {
        self.terms.get(&Exp(exp.to_vec())).cloned().unwrap_or_else(C::zero)
    }

    /// Accumulate a term; drops exponents above the truncation order and
    /// never stores a zero coefficient.
    pub fn add_term(&mut self, exp: Vec<i64>, c: C) {
        debug_assert_eq!(exp.len(), self.nvars);
        let e = Exp(exp);
        if e.degree() > self.order as i64 || c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add_ref(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        if self.nvars != other.nvars {
            return Err(SeriesError::VariableMismatch(self.nvars, other.nvars));
        }
        let order = self.order.min(other.order);
        let mut out = Self::zero(self.nvars, order);
        for (e, c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(e.0.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg_ref();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.nvars, self.order);
        for (e, x) in &self.terms {
            out.add_term(e.0.clone(), x.mul_ref(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        if self.nvars != other.nvars {
            return Err(SeriesError::VariableMismatch(self.nvars, other.nvars));
        }
        let order = self.order.min(other.order) as i64;
        let mut out = Self::zero(self.nvars, order as u32);
        for (e1, c1) in &self.terms {
            let d1 = e1.degree();
            if d1 > order {
                continue;
            }
            for (e2, c2) in &other.terms {
                if d1 + e2.degree() > order {
                    continue;
                }
                let exp: Vec<i64> = e1.0.iter().zip(&e2.0).map(|(a, b)| a + b).collect();
                out.add_term(exp, c1.mul_ref(c2));
            }
        }
        Ok(out)
    }

    /// JSON list of { "exp": [...], "coeff": ... } in graded-lex order.
    pub fn to_json(&self) -> serde_json::Value {
        let list: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| serde_json::json!({ "exp": e.0, "coeff": c.to_json() }))
            .collect();
        serde_json::Value::Array(list)
    }
}

/// Generalized binomial coefficient binom(n, a) for any integer n.
pub fn generalized_binomial(n: i64, a: u64) -> BigInt {
    let mut c = <BigInt as One>::one();
    for k in 1..=a as i64 {
        c = c * BigInt::from(n - k + 1) / BigInt::from(k); // exact at each step
    }
    c
}

/// Taylor expansion of (1 - x_v)^n to the given order; n may be negative.
pub fn expand_binomial_power<C: Coeff>(
    nvars: usize,
    var: usize,
    n: i64,
    order: u32,
) -> TruncatedSeries<C> {
    let mut s = TruncatedSeries::zero(nvars, order);
    for a in 0..=order as u64 {
        let mut c = generalized_binomial(n, a);
        if a % 2 == 1 {
            c = -c;
        }
        let mut exp = vec![0i64; nvars];
        exp[var] = a as i64;
        s.add_term(exp, C::from_bigint(c));
    }
    s
}

/// 1/(1 - c x_v) = sum c^k x_v^k to the given order.
pub fn expand_geometric<C: Coeff>(
    nvars: usize,
    var: usize,
    c: &C,
    order: u32,
) -> TruncatedSeries<C> {
    let mut s = TruncatedSeries::zero(nvars, order);
    let mut pow = C::one();
    for k in 0..=order as i64 {
        let mut exp = vec![0i64; nvars];
        exp[var] = k;
        s.add_term(exp, pow.clone());
        pow = pow.mul_ref(c);
    }
    s
}

/// Macdonald formula: sum_a chi_top(S^a Sigma) x^a = (1 - x)^{-chi(Sigma)}.
pub fn macdonald_series(chi_val: i64, order: u32) -> TruncatedSeries<BigInt> {
    expand_binomial_power(1, 0, -chi_val, order)
}

/// Classes of symmetric products of the punctured rational curve with
/// kappa marked points removed: sum_i [S^i E_v^o] x^i
/// = (1 - x)^{kappa - 1} / (1 - L x).
pub fn symprod_class_series(kappa: u32, order: u32) -> TruncatedSeries<MotivicPoly> {
    let binom: TruncatedSeries<MotivicPoly> =
        expand_binomial_power(1, 0, kappa as i64 - 1, order);
    let geo = expand_geometric(1, 0, &MotivicPoly::l_power(1), order);
    binom.mul(&geo).expect("same variable set")
}

/// Full truncated expansion of prod_v (1 - x_v)^{n_v}.
pub fn product_of_binomials<C: Coeff>(powers: &[i64], order: u32) -> TruncatedSeries<C> {
    let nvars = powers.len();
    let mut acc = TruncatedSeries::<C>::one(nvars, order);
    for (v, &n) in powers.iter().enumerate() {
        if n == 0 {
            continue;
        }
        let factor = expand_binomial_power(nvars, v, n, order);
        acc = acc.mul(&factor).expect("same variable set");
    }
    acc
}

pub use crate::lattice::enumerate_exponents as exponents_up_to;

/// All exponents of total degree <= order (re-export helper for callers that
/// iterate coefficient-wise).
pub fn all_exponents(nvars: usize, order: u32) -> Vec<Vec<i64>> {
    enumerate_exponents(nvars, order)
}

/// Render a coefficient-wise table line, used by the CLI.
pub fn render_exp(exp: &[i64]) -> String {
    let inner: Vec<String> = exp.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

/// Specialize every MotivicPoly coefficient at L = 1.
pub fn specialize_series(s: &TruncatedSeries<MotivicPoly>) -> TruncatedSeries<BigInt> {
    let mut out = TruncatedSeries::zero(s.nvars(), s.order());
    for (e, c) in s.terms() {
        out.add_term(e.0.clone(), c.specialize_one());
    }
    out
}

/// True iff every coefficient of `s` is non-negative (sanity helper).
pub fn all_nonnegative(s: &TruncatedSeries<BigInt>) -> bool {
    s.terms().all(|(_, c)| !c.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn mul_identity_and_truncation() {
        let one = TruncatedSeries::<BigInt>::one(1, 4);
        let mut a = TruncatedSeries::<BigInt>::zero(1, 4);
        a.add_term(vec![1], int(3));
        a.add_term(vec![0], int(1));
        assert_eq!(a.mul(&one).unwrap(), a);
        // (1+x)(1-x) at order 2 = 1 - x^2
        let p: TruncatedSeries<BigInt> = expand_binomial_power(1, 0, 1, 2);
        let mut q = TruncatedSeries::<BigInt>::zero(1, 2);
        q.add_term(vec![0], int(1));
        q.add_term(vec![1], int(1));
        let prod = p.mul(&q).unwrap();
        assert_eq!(prod.coeff(&[0]), int(1));
        assert_eq!(prod.coeff(&[1]), int(0));
        assert_eq!(prod.coeff(&[2]), int(-1));
        // x^N * x truncates to zero
        let mut xn = TruncatedSeries::<BigInt>::zero(1, 3);
        xn.add_term(vec![3], int(1));
        let mut x = TruncatedSeries::<BigInt>::zero(1, 3);
        x.add_term(vec![1], int(1));
        assert!(xn.mul(&x).unwrap().is_empty());
    }

    #[test]
    fn variable_mismatch_is_error() {
        let a = TruncatedSeries::<BigInt>::one(1, 2);
        let b = TruncatedSeries::<BigInt>::one(2, 2);
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn binomial_expansions() {
        let s: TruncatedSeries<BigInt> = expand_binomial_power(1, 0, -2, 6);
        for k in 0..=6i64 {
            assert_eq!(s.coeff(&[k]), int(k + 1));
        }
        let z: TruncatedSeries<BigInt> = expand_binomial_power(1, 0, 0, 6);
        assert_eq!(z, TruncatedSeries::one(1, 6));
        let sq: TruncatedSeries<BigInt> = expand_binomial_power(1, 0, 2, 6);
        assert_eq!(sq.coeff(&[0]), int(1));
        assert_eq!(sq.coeff(&[1]), int(-2));
        assert_eq!(sq.coeff(&[2]), int(1));
        assert_eq!(sq.coeff(&[3]), int(0));
    }

    #[test]
    fn inverse_square_matches_self_product() {
        let inv: TruncatedSeries<BigInt> = expand_binomial_power(1, 0, -1, 8);
        let prod = inv.mul(&inv).unwrap();
        let direct: TruncatedSeries<BigInt> = expand_binomial_power(1, 0, -2, 8);
        assert_eq!(prod, direct);
    }

    #[test]
    fn geometric_expansions() {
        let g = expand_geometric::<MotivicPoly>(1, 0, &MotivicPoly::l_power(1), 4);
        for k in 0..=4i64 {
            assert_eq!(g.coeff(&[k]), MotivicPoly::l_power(k));
        }
        let ones = expand_geometric::<BigInt>(1, 0, &int(1), 4);
        for k in 0..=4i64 {
            assert_eq!(ones.coeff(&[k]), int(1));
        }
        let z = expand_geometric::<BigInt>(1, 0, &int(0), 4);
        assert_eq!(z, TruncatedSeries::one(1, 4));
    }

    #[test]
    fn macdonald_examples() {
        let p1 = macdonald_series(2, 20);
        for k in 0..=20i64 {
            assert_eq!(p1.coeff(&[k]), int(k + 1), "chi_top(S^k P^1) = chi_top(P^k)");
        }
        assert_eq!(macdonald_series(0, 5), TruncatedSeries::one(1, 5));
        let line = macdonald_series(1, 5);
        for k in 0..=5i64 {
            assert_eq!(line.coeff(&[k]), int(1));
        }
    }

    #[test]
    fn macdonald_multiplicative() {
        for c1 in -3..=3i64 {
            for c2 in -3..=3i64 {
                let lhs = macdonald_series(c1 + c2, 10);
                let rhs = macdonald_series(c1, 10).mul(&macdonald_series(c2, 10)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn symprod_classes() {
        // kappa = 1: E^o = C, so [S^k C] = L^k
        let s = symprod_class_series(1, 5);
        for k in 0..=5i64 {
            assert_eq!(s.coeff(&[k]), MotivicPoly::l_power(k));
        }
        // kappa = 2: [S^k C^*] = L^k - L^{k-1} for k >= 1
        let s = symprod_class_series(2, 5);
        assert_eq!(s.coeff(&[0]), MotivicPoly::one());
        for k in 1..=5i64 {
            let expect = MotivicPoly::l_power(k).sub(&MotivicPoly::l_power(k - 1));
            assert_eq!(s.coeff(&[k]), expect);
        }
        assert_eq!(symprod_class_series(3, 4).coeff(&[0]), MotivicPoly::one());
    }

    #[test]
    fn graded_lex_term_order() {
        let mut s = TruncatedSeries::<BigInt>::zero(2, 3);
        s.add_term(vec![1, 0], int(1));
        s.add_term(vec![0, 0], int(1));
        s.add_term(vec![0, 2], int(1));
        s.add_term(vec![0, 1], int(1));
        let exps: Vec<Vec<i64>> = s.terms().map(|(e, _)| e.0.clone()).collect();
        assert_eq!(exps, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![0, 2]]);
    }
}
