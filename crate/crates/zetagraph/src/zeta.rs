//! Top-level constructors of the series attached to a resolution graph, each
//! by an independent route, plus the Hilbert conversion and the
//! functional-equation verifier.
//!
//! Coefficients are computed per exponent (never by series division), so the
//! product, binomial, inclusion-exclusion and arrangement routes are genuinely
//! independent code paths and their agreement is a real check.

use crate::closure::{closure_table, complement_class, complement_euler, ClosureError};
use crate::graph::GraphClass;
use crate::lattice::{LatticeContext, LatticeError};
use crate::motivic::{MotivicError, MotivicPoly};
use crate::ratfun::{
    one_minus_var, rational_identity_check, LaurentPoly, RatFunError, RationalFunctionExpr,
};
use crate::series::{
    expand_binomial_power, expand_geometric, generalized_binomial, product_of_binomials,
    specialize_series, Coeff, SeriesError, TruncatedSeries,
};
use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ZetaError {
    #[error("graph class {0} is not supported by this formula")]
    UnsupportedClass(GraphClass),
    #[error("formula requires all genera zero, vertex {0} has genus {1}")]
    NonZeroGenus(usize, u32),
    #[error("coefficient at {exp:?} is not an integer: {value}")]
    NonIntegralCoefficient { exp: Vec<i64>, value: String },
    #[error("truncation order {have} is insufficient, need at least {required}")]
    TruncationInsufficient { have: u32, required: u32 },
    #[error(transparent)]
    Closure(#[from] ClosureError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Motivic(#[from] MotivicError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    RatFun(#[from] RatFunError),
}

fn require_class(ctx: &LatticeContext, want: &[GraphClass]) -> Result<GraphClass, ZetaError> {
    let class = ctx.graph.classify();
    if want.contains(&class) {
        Ok(class)
    } else {
        Err(ZetaError::UnsupportedClass(class))
    }
}

fn require_rational(ctx: &LatticeContext) -> Result<(), ZetaError> {
    for (v, vert) in ctx.graph.vertices().iter().enumerate() {
        if vert.genus != 0 {
            return Err(ZetaError::NonZeroGenus(v, vert.genus));
        }
    }
    Ok(())
}

fn valency_powers(ctx: &LatticeContext) -> Vec<i64> {
    (0..ctx.n).map(|v| ctx.graph.valency(v) as i64 - 2).collect()
}

fn series_from_coeffs<C: Coeff>(
    nvars: usize,
    order: u32,
    coeffs: Vec<(Vec<i64>, C)>,
) -> TruncatedSeries<C> {
    let mut s = TruncatedSeries::zero(nvars, order);
    for (exp, c) in coeffs {
        s.add_term(exp, c);
    }
    s
}

/// Z(t) as the Taylor expansion of prod_v (1 - x_v)^{kappa_v - 2}.
pub fn zeta_product(ctx: &LatticeContext, order: u32) -> TruncatedSeries<BigInt> {
    product_of_binomials(&valency_powers(ctx), order)
}

/// Z(t) by the per-exponent binomial formula:
/// coefficient of x^a is prod_v (-1)^{a_v} binom(kappa_v - 2, a_v).
pub fn zeta_binomial(ctx: &LatticeContext, order: u32) -> TruncatedSeries<BigInt> {
    let powers = valency_powers(ctx);
    let coeffs: Vec<(Vec<i64>, BigInt)> = ctx
        .enumerate_sprime(order)
        .into_par_iter()
        .map(|a| {
            let mut c = BigInt::from(1);
            for (v, &av) in a.iter().enumerate() {
                let mut b = generalized_binomial(powers[v], av as u64);
                if av % 2 == 1 {
                    b = -b;
                }
                c *= b;
            }
            (a, c)
        })
        .collect();
    series_from_coeffs(ctx.n, order, coeffs)
}

/// The signed chi-sum coefficient sum_I (-1)^{|I|+1} chi(l' + E_{J(l',I)}),
/// grouped over distinct closures, asserted integral.
fn incexc_coefficient(ctx: &LatticeContext, a: &[i64]) -> Result<BigInt, ZetaError> {
    let table = closure_table(ctx, a);
    let mut signed: std::collections::HashMap<u32, i64> = std::collections::HashMap::new();
    for (i, &j) in table.iter().enumerate() {
        let sign = if (i as u32).count_ones() % 2 == 1 { 1 } else { -1 };
        *signed.entry(j).or_insert(0) += sign;
    }
    // fast path: accumulate chi numerators over the common denominator 2*det
    let fast = ctx.chi_denominator_i128().and_then(|den| {
        let mut acc: i128 = 0;
        for (&j, &count) in &signed {
            if count == 0 {
                continue;
            }
            let num = ctx.chi_numerator_i128(&ctx.shift_by_e_subset(a, j))?;
            acc = acc.checked_add(num.checked_mul(count as i128)?)?;
        }
        Some((acc, den))
    });
    if let Some((num, den)) = fast {
        if num % den != 0 {
            return Err(ZetaError::NonIntegralCoefficient {
                exp: a.to_vec(),
                value: format!("{num}/{den}"),
            });
        }
        return Ok(BigInt::from(num / den));
    }
    let mut acc = num_rational::BigRational::zero();
    for (j, count) in signed {
        if count == 0 {
            continue;
        }
        let chi = ctx.chi(&ctx.shift_by_e_subset(a, j));
        acc += chi * num_rational::BigRational::from_integer(BigInt::from(count));
    }
    if !acc.is_integer() {
        return Err(ZetaError::NonIntegralCoefficient { exp: a.to_vec(), value: acc.to_string() });
    }
    Ok(acc.to_integer())
}

/// Z(t) by inclusion-exclusion over vertex subsets. For cusps the l' = 0
/// coefficient is 1 by the separate fiat, the rest use the same signed sum.
pub fn zeta_incexc(
    ctx: &LatticeContext,
    order: u32,
) -> Result<TruncatedSeries<BigInt>, ZetaError> {
    let class = require_class(ctx, &[GraphClass::TreeRational, GraphClass::CuspCycle])?;
    let coeffs: Result<Vec<(Vec<i64>, BigInt)>, ZetaError> = ctx
        .enumerate_sprime(order)
        .into_par_iter()
        .map(|a| {
            if class == GraphClass::CuspCycle && a.iter().all(|&x| x == 0) {
                return Ok((a, BigInt::from(1)));
            }
            let c = incexc_coefficient(ctx, &a)?;
            Ok((a, c))
        })
        .collect();
    Ok(series_from_coeffs(ctx.n, order, coeffs?))
}

/// Z(t) as the Euler characteristic of projectivized arrangement complements.
pub fn zeta_arrangement(
    ctx: &LatticeContext,
    order: u32,
) -> Result<TruncatedSeries<BigInt>, ZetaError> {
    let class = require_class(ctx, &[GraphClass::TreeRational, GraphClass::CuspCycle])?;
    let coeffs: Result<Vec<(Vec<i64>, BigInt)>, ZetaError> = ctx
        .enumerate_sprime(order)
        .into_par_iter()
        .map(|a| {
            let c = complement_euler(ctx, &a, class)?;
            Ok((a, c))
        })
        .collect();
    Ok(series_from_coeffs(ctx.n, order, coeffs?))
}

/// The closed form for cusp cycles, expanded over the edge multiset:
/// 1 + sum_v x_v/(1-x_v) + sum_{(u,v) in E} x_v/(1-x_v) * x_u/(1-x_u).
/// A double edge contributes its term twice and a loop contributes the
/// squared factor, which reproduces the 2- and 1-vertex variants.
pub fn cusp_closed_form(
    ctx: &LatticeContext,
    order: u32,
) -> Result<TruncatedSeries<BigInt>, ZetaError> {
    require_class(ctx, &[GraphClass::CuspCycle])?;
    let n = ctx.n;
    let ord = order as i64;
    let mut s = TruncatedSeries::one(n, order);
    for v in 0..n {
        for k in 1..=ord {
            let mut exp = vec![0i64; n];
            exp[v] = k;
            s.add_term(exp, BigInt::from(1));
        }
    }
    for &(u, v) in ctx.graph.edges() {
        if u == v {
            // loop: (x/(1-x))^2 = sum_{m>=2} (m-1) x^m
            for m in 2..=ord {
                let mut exp = vec![0i64; n];
                exp[v] = m;
                s.add_term(exp, BigInt::from(m - 1));
            }
        } else {
            for j in 1..ord {
                for k in 1..=(ord - j) {
                    let mut exp = vec![0i64; n];
                    exp[u] = j;
                    exp[v] = k;
                    s.add_term(exp, BigInt::from(1));
                }
            }
        }
    }
    Ok(s)
}

/// Motivic Z(L,t) for trees: per-exponent arrangement-complement classes.
pub fn motivic_tree(
    ctx: &LatticeContext,
    order: u32,
) -> Result<TruncatedSeries<MotivicPoly>, ZetaError> {
    require_class(ctx, &[GraphClass::TreeRational])?;
    let coeffs: Result<Vec<(Vec<i64>, MotivicPoly)>, ZetaError> = ctx
        .enumerate_sprime(order)
        .into_par_iter()
        .map(|a| {
            let c = complement_class(ctx, &a, GraphClass::TreeRational)?;
            Ok((a, c))
        })
        .collect();
    Ok(series_from_coeffs(ctx.n, order, coeffs?))
}

/// Z^ECa(L,t) by the closed product formula:
/// prod_{(u,v) in E} (1 - x_u - x_v + L x_u x_v) /
/// prod_v (1 - x_v)(1 - L x_v),
/// with a loop at v contributing the factor 1 - 2 x_v + L x_v^2.
pub fn motivic_eca_product(
    ctx: &LatticeContext,
    order: u32,
) -> Result<TruncatedSeries<MotivicPoly>, ZetaError> {
    require_rational(ctx)?;
    let n = ctx.n;
    let mut acc = TruncatedSeries::<MotivicPoly>::one(n, order);
    for &(u, v) in ctx.graph.edges() {
        let mut factor = TruncatedSeries::<MotivicPoly>::one(n, order);
        if u == v {
            let mut e1 = vec![0i64; n];
            e1[v] = 1;
            factor.add_term(e1, MotivicPoly::from_int(-2));
            let mut e2 = vec![0i64; n];
            e2[v] = 2;
            factor.add_term(e2, MotivicPoly::l_power(1));
        } else {
            let mut eu = vec![0i64; n];
            eu[u] = 1;
            factor.add_term(eu, MotivicPoly::from_int(-1));
            let mut ev = vec![0i64; n];
            ev[v] = 1;
            factor.add_term(ev, MotivicPoly::from_int(-1));
            let mut euv = vec![0i64; n];
            euv[u] = 1;
            euv[v] = 1;
            factor.add_term(euv, MotivicPoly::l_power(1));
        }
        acc = acc.mul(&factor)?;
    }
    for v in 0..n {
        let inv: TruncatedSeries<MotivicPoly> = expand_binomial_power(n, v, -1, order);
        let geo = expand_geometric(n, v, &MotivicPoly::l_power(1), order);
        acc = acc.mul(&inv)?.mul(&geo)?;
    }
    Ok(acc)
}

/// Z^ECa(L,t) by direct enumeration of the support stratification:
/// choose the contributing edge subset, local multiplicities at every chosen
/// intersection point, and interior symmetric-product degrees. Intended as a
/// small-order oracle for the product formula.
pub fn motivic_eca_strata(
    ctx: &LatticeContext,
    order: u32,
) -> Result<TruncatedSeries<MotivicPoly>, ZetaError> {
    require_rational(ctx)?;
    let n = ctx.n;
    let ord = order as i64;
    let sym: Vec<Vec<MotivicPoly>> = (0..n)
        .map(|v| {
            let s = crate::series::symprod_class_series(ctx.graph.valency(v), order);
            (0..=ord).map(|i| s.coeff(&[i])).collect()
        })
        .collect();
    let lm1 = MotivicPoly::l_power(1).sub(&MotivicPoly::one());
    let max_edges = (order as usize) / 2;
    let mut lm1_pow = vec![MotivicPoly::one()];
    for _ in 0..max_edges {
        lm1_pow.push(lm1_pow.last().unwrap().mul(&lm1));
    }
    let edges = ctx.graph.edges().to_vec();
    let mut out = TruncatedSeries::zero(n, order);

    // DFS over the edge list: each edge either contributes a point with
    // multiplicities (k_a, k_b) >= 1 or is skipped.
    fn dfs(
        edges: &[(usize, usize)],
        idx: usize,
        base: &mut Vec<i64>,
        used: usize,
        ord: i64,
        sym: &[Vec<MotivicPoly>],
        lm1_pow: &[MotivicPoly],
        out: &mut TruncatedSeries<MotivicPoly>,
    ) {
        let total: i64 = base.iter().sum();
        if idx == edges.len() {
            // interior degrees fill the remaining budget
            let n = base.len();
            for interior in crate::lattice::enumerate_exponents(n, (ord - total) as u32) {
                let mut coeff = lm1_pow[used].clone();
                for v in 0..n {
                    coeff = coeff.mul(&sym[v][interior[v] as usize]);
                }
                let exp: Vec<i64> = base.iter().zip(&interior).map(|(a, b)| a + b).collect();
                out.add_term(exp, coeff);
            }
            return;
        }
        dfs(edges, idx + 1, base, used, ord, sym, lm1_pow, out);
        let (u, v) = edges[idx];
        // a divisor at the point contributes k^e_u to the degree on E_v and
        // k^e_v to the degree on E_u; for a loop both land on v.
        let mut ku = 1i64;
        while total + ku + 1 <= ord {
            let mut kv = 1i64;
            while total + ku + kv <= ord {
                base[v] += ku;
                base[u] += kv;
                dfs(edges, idx + 1, base, used + 1, ord, sym, lm1_pow, out);
                base[v] -= ku;
                base[u] -= kv;
                kv += 1;
            }
            ku += 1;
        }
    }

    let mut base = vec![0i64; n];
    dfs(&edges, 0, &mut base, 0, ord, &sym, &lm1_pow, &mut out);
    Ok(out)
}

/// Motivic Z(L,t) for cusps: 1 + (Z^ECa(L,t) - 1)/(L - 1), the divisibility
/// being a theorem whose failure is reported as an error.
pub fn motivic_cusp(
    ctx: &LatticeContext,
    order: u32,
) -> Result<TruncatedSeries<MotivicPoly>, ZetaError> {
    require_class(ctx, &[GraphClass::CuspCycle])?;
    let eca = motivic_eca_product(ctx, order)?;
    let mut out = TruncatedSeries::zero(ctx.n, order);
    out.add_term(vec![0; ctx.n], MotivicPoly::one());
    for (e, c) in eca.terms() {
        if e.degree() == 0 {
            continue; // constant term handled by the leading 1
        }
        let q = c.divide_by_l_minus_1()?;
        out.add_term(e.0.clone(), q);
    }
    Ok(out)
}

/// h(l') = sum over the finite support set of p-coefficients (for l' in L).
pub fn hilbert_from_p(
    ctx: &LatticeContext,
    p_series: &TruncatedSeries<BigInt>,
    a: &[i64],
) -> Result<BigInt, ZetaError> {
    let support = ctx.support_set_below(a)?;
    // the minimal sufficient truncation covers the deepest support element
    let required = support.iter().map(|s| s.iter().sum::<i64>()).max().unwrap_or(0);
    if required > p_series.order() as i64 {
        return Err(ZetaError::TruncationInsufficient {
            have: p_series.order(),
            required: required as u32,
        });
    }
    let mut acc = <BigInt as num_traits::Zero>::zero();
    for s in support {
        acc += p_series.coeff(&s);
    }
    Ok(acc)
}

/// Inverse of the Hilbert conversion:
/// p(l') = sum_{I subset V} (-1)^{|I|+1} h(l' + E_I).
pub fn p_from_hilbert(
    ctx: &LatticeContext,
    p_series: &TruncatedSeries<BigInt>,
    a: &[i64],
) -> Result<BigInt, ZetaError> {
    let mut acc = <BigInt as num_traits::Zero>::zero();
    for mask in 0..(1u32 << ctx.n) {
        let shifted = ctx.shift_by_e_subset(a, mask);
        let h = hilbert_from_p(ctx, p_series, &shifted)?;
        if mask.count_ones() % 2 == 1 {
            acc += h;
        } else {
            acc -= h;
        }
    }
    Ok(acc)
}

/// Z^ECa(L,t) as an exact rational-function expression.
pub fn eca_rational_expr(ctx: &LatticeContext) -> Result<RationalFunctionExpr, ZetaError> {
    require_rational(ctx)?;
    let n = ctx.n;
    let mut num = LaurentPoly::one(n);
    for &(u, v) in ctx.graph.edges() {
        let factor = if u == v {
            let mut e1 = vec![0i64; n];
            e1[v] = 1;
            let mut e2 = vec![0i64; n];
            e2[v] = 2;
            LaurentPoly::one(n)
                .sub(&LaurentPoly::monomial(e1, MotivicPoly::from_int(2)))
                .add(&LaurentPoly::monomial(e2, MotivicPoly::l_power(1)))
        } else {
            let mut eu = vec![0i64; n];
            eu[u] = 1;
            let mut ev = vec![0i64; n];
            ev[v] = 1;
            let mut euv = vec![0i64; n];
            euv[u] = 1;
            euv[v] = 1;
            LaurentPoly::one(n)
                .sub(&LaurentPoly::monomial(eu, MotivicPoly::one()))
                .sub(&LaurentPoly::monomial(ev, MotivicPoly::one()))
                .add(&LaurentPoly::monomial(euv, MotivicPoly::l_power(1)))
        };
        num = num.mul(&factor);
    }
    let mut den = LaurentPoly::one(n);
    for v in 0..n {
        den = den
            .mul(&one_minus_var(n, v, MotivicPoly::one()))
            .mul(&one_minus_var(n, v, MotivicPoly::l_power(1)));
    }
    Ok(RationalFunctionExpr::new(num, den)?)
}

/// The motivic Z(L,t) of the supported regime as a rational expression:
/// trees use the product form directly, cusps use 1 + (Z^ECa - 1)/(L - 1).
pub fn motivic_z_expr(ctx: &LatticeContext) -> Result<RationalFunctionExpr, ZetaError> {
    let class = require_class(ctx, &[GraphClass::TreeRational, GraphClass::CuspCycle])?;
    let eca = eca_rational_expr(ctx)?;
    match class {
        GraphClass::TreeRational => Ok(eca),
        GraphClass::CuspCycle => {
            // 1 + (N/D - 1)/(L-1) = (N + (L-2) D) / ((L-1) D)
            let lm1 = MotivicPoly::l_power(1).sub(&MotivicPoly::one());
            let lm2 = MotivicPoly::l_power(1).sub(&MotivicPoly::from_int(2));
            let num = eca.num.add(&eca.den.scale(&lm2));
            let den = eca.den.scale(&lm1);
            Ok(RationalFunctionExpr::new(num, den)?)
        }
        GraphClass::Other => unreachable!(),
    }
}

/// The monomial t^{Z_K - E} = prod_v x_v^{kappa_v - 2}, with an extra L power.
fn zk_minus_e_monomial(ctx: &LatticeContext, l_exp: i64) -> LaurentPoly {
    let exps: Vec<i64> = (0..ctx.n).map(|v| ctx.graph.valency(v) as i64 - 2).collect();
    LaurentPoly::monomial(exps, MotivicPoly::l_power(l_exp))
}

/// Exact check of the motivic functional equation
/// L^{c(Gamma)-1} t^{Z_K-E} Z(L,t)|_{t_v -> (L t_v)^{-1}} = Z(L,t).
pub fn functional_equation_motivic(ctx: &LatticeContext) -> Result<bool, ZetaError> {
    let z = motivic_z_expr(ctx)?;
    let c = ctx.graph.cycle_count() as i64;
    let lhs = z
        .substitute_inverse()
        .mul(&RationalFunctionExpr::from_poly(zk_minus_e_monomial(ctx, c - 1)));
    Ok(rational_identity_check(&lhs, &z)?)
}

/// Exact check of the classical identity t^{Z_K-E} Z(1/t) = Z(t) on trees,
/// with Z(t) = prod_v (1 - x_v)^{kappa_v - 2}.
pub fn functional_equation_classical_tree(ctx: &LatticeContext) -> Result<bool, ZetaError> {
    require_class(ctx, &[GraphClass::TreeRational])?;
    let n = ctx.n;
    let mut num = LaurentPoly::one(n);
    let mut den = LaurentPoly::one(n);
    for v in 0..n {
        let kv = ctx.graph.valency(v) as i64 - 2;
        let factor = one_minus_var(n, v, MotivicPoly::one());
        for _ in 0..kv.abs() {
            if kv > 0 {
                num = num.mul(&factor);
            } else {
                den = den.mul(&factor);
            }
        }
    }
    let z = RationalFunctionExpr::new(num, den)?;
    let lhs = z
        .substitute_reciprocal()
        .mul(&RationalFunctionExpr::from_poly(zk_minus_e_monomial(ctx, 0)));
    Ok(rational_identity_check(&lhs, &z)?)
}

/// The class-appropriate functional-equation check: the L-twisted motivic
/// identity on cusps, the classical reciprocal identity on trees.
pub fn functional_equation_check(ctx: &LatticeContext) -> Result<bool, ZetaError> {
    let class = require_class(ctx, &[GraphClass::TreeRational, GraphClass::CuspCycle])?;
    match class {
        GraphClass::TreeRational => functional_equation_classical_tree(ctx),
        GraphClass::CuspCycle => functional_equation_motivic(ctx),
        GraphClass::Other => unreachable!(),
    }
}

/// Every series slot applicable to a graph, for the CLI and the verifiers.
#[derive(Default)]
pub struct SeriesBundle {
    pub class: Option<GraphClass>,
    pub order: u32,
    pub z_product: Option<TruncatedSeries<BigInt>>,
    pub z_binomial: Option<TruncatedSeries<BigInt>>,
    pub z_incexc: Option<TruncatedSeries<BigInt>>,
    pub z_arrangement: Option<TruncatedSeries<BigInt>>,
    pub z_cusp_closed: Option<TruncatedSeries<BigInt>>,
    pub motivic_tree: Option<TruncatedSeries<MotivicPoly>>,
    pub motivic_eca_product: Option<TruncatedSeries<MotivicPoly>>,
    pub motivic_eca_strata: Option<TruncatedSeries<MotivicPoly>>,
    pub motivic_cusp: Option<TruncatedSeries<MotivicPoly>>,
}

/// Populate every slot whose regime precondition holds.
pub fn build_bundle(ctx: &LatticeContext, order: u32) -> Result<SeriesBundle, ZetaError> {
    let class = ctx.graph.classify();
    let mut b = SeriesBundle { class: Some(class), order, ..SeriesBundle::default() };
    b.z_product = Some(zeta_product(ctx, order));
    b.z_binomial = Some(zeta_binomial(ctx, order));
    if matches!(class, GraphClass::TreeRational | GraphClass::CuspCycle) {
        b.z_incexc = Some(zeta_incexc(ctx, order)?);
        b.z_arrangement = Some(zeta_arrangement(ctx, order)?);
    }
    if class == GraphClass::CuspCycle {
        b.z_cusp_closed = Some(cusp_closed_form(ctx, order)?);
        b.motivic_cusp = Some(motivic_cusp(ctx, order)?);
    }
    if class == GraphClass::TreeRational {
        b.motivic_tree = Some(motivic_tree(ctx, order)?);
    }
    if ctx.graph.vertices().iter().all(|v| v.genus == 0) {
        b.motivic_eca_product = Some(motivic_eca_product(ctx, order)?);
        b.motivic_eca_strata = Some(motivic_eca_strata(ctx, order)?);
    }
    Ok(b)
}

/// 1 for exponents whose support is empty, a single vertex, or (with the
/// right multiplicity pattern) an edge of the graph; 0 otherwise. This is the
/// face characterization of cusp coefficients for |V| >= 3.
pub fn cusp_face_indicator(ctx: &LatticeContext, a: &[i64]) -> BigInt {
    let support: Vec<usize> = (0..ctx.n).filter(|&v| a[v] != 0).collect();
    let yes = match support.as_slice() {
        [] => true,
        [_] => true,
        [u, v] => ctx
            .graph
            .edges()
            .iter()
            .any(|&(x, y)| (x, y) == (*u, *v) || (x, y) == (*v, *u)),
        _ => false,
    };
    if yes {
        BigInt::from(1)
    } else {
        <BigInt as num_traits::Zero>::zero()
    }
}

/// The L = 1 specialization of a motivic series.
pub fn specialize(s: &TruncatedSeries<MotivicPoly>) -> TruncatedSeries<BigInt> {
    specialize_series(s)
}
