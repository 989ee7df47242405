//! The J-closure algorithm and the dimension / Euler-characteristic / motivic
//! data of the topological subspace arrangements.
//!
//! Subsets of vertices are bitmasks (graphs of interest have few vertices;
//! the 2^|V| subset sums are documented exponential cost).

use crate::graph::GraphClass;
use crate::lattice::LatticeContext;
use crate::motivic::MotivicPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ClosureError {
    #[error("minimal closed superset is not unique (candidates {0:#b} and {1:#b})")]
    NonUniqueMinimal(u32, u32),
    #[error("l' is not in S' (coordinate {0} is negative)")]
    NotInSprime(usize),
    #[error("graph class {0} is not supported here")]
    UnsupportedClass(GraphClass),
    #[error("chi difference {0} is not a non-negative integer")]
    BadDimension(String),
}

/// Result of the iterative closure: J(l', I) with its construction trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureResult {
    pub estar: Vec<i64>,
    pub input: u32,
    pub output: u32,
    pub trace: Vec<usize>,
}

/// Dimension data of the topological arrangement at l'.
#[derive(Debug, Clone)]
pub struct ArrangementProfile {
    /// dim T(l').
    pub ambient_dim: i64,
    /// dim of the intersection over I, indexed by subset bitmask.
    pub dims: Vec<i64>,
    /// codim of the intersection over I, indexed by subset bitmask.
    pub codims: Vec<i64>,
    /// Euler characteristic of the projectivized complement.
    pub euler: BigInt,
    /// Class of the projectivized complement in the Grothendieck ring.
    pub class: MotivicPoly,
}

/// Does `mask` satisfy the stopping condition: no v outside `mask` with
/// (E_v, l' + E_mask) > 0?
pub fn satisfies_star(ctx: &LatticeContext, a: &[i64], mask: u32) -> bool {
    next_violation(ctx, a, mask, &identity_order(ctx.n)).is_none()
}

fn identity_order(n: usize) -> Vec<usize> {
    (0..n).collect()
}

fn test_value(ctx: &LatticeContext, a: &[i64], mask: u32, v: usize) -> i64 {
    // (E_v, l' + E_mask) = -a_v + sum_{u in mask} M_vu, pure integers.
    let mut t = -a[v];
    for u in 0..ctx.n {
        if mask >> u & 1 == 1 {
            t += ctx.matrix[v][u];
        }
    }
    t
}

fn next_violation(ctx: &LatticeContext, a: &[i64], mask: u32, order: &[usize]) -> Option<usize> {
    order
        .iter()
        .copied()
        .find(|&v| mask >> v & 1 == 0 && test_value(ctx, a, mask, v) > 0)
}

/// J(l', I) by the iterative algorithm, with the given vertex scan order as
/// tie-break (Lemma-level uniqueness makes the result order independent).
pub fn j_closure_with_order(
    ctx: &LatticeContext,
    a: &[i64],
    i_mask: u32,
    order: &[usize],
) -> ClosureResult {
    let mut mask = i_mask;
    let mut trace = Vec::new();
    while let Some(v) = next_violation(ctx, a, mask, order) {
        mask |= 1 << v;
        trace.push(v);
    }
    ClosureResult { estar: a.to_vec(), input: i_mask, output: mask, trace }
}

/// J(l', I) with the deterministic smallest-index tie-break.
pub fn j_closure(ctx: &LatticeContext, a: &[i64], i_mask: u32) -> ClosureResult {
    j_closure_with_order(ctx, a, i_mask, &identity_order(ctx.n))
}

/// Brute-force oracle: enumerate every superset of I satisfying the stopping
/// condition and return the unique minimal one. Errors if minimality is not
/// unique, which would falsify the closure lemma.
pub fn j_closure_bruteforce(
    ctx: &LatticeContext,
    a: &[i64],
    i_mask: u32,
) -> Result<u32, ClosureError> {
    let full = (1u32 << ctx.n) - 1;
    let mut good: Vec<u32> = Vec::new();
    for mask in 0..=full {
        if mask & i_mask == i_mask && satisfies_star(ctx, a, mask) {
            good.push(mask);
        }
    }
    let minimal: Vec<u32> = good
        .iter()
        .copied()
        .filter(|&m| !good.iter().any(|&o| o != m && o & m == o))
        .collect();
    match minimal.as_slice() {
        [only] => Ok(*only),
        [a, b, ..] => Err(ClosureError::NonUniqueMinimal(*a, *b)),
        [] => unreachable!("the full vertex set always satisfies the stopping condition"),
    }
}

/// J(l', I) for every subset bitmask I at once. Subsets are processed by
/// increasing popcount so each closure restarts from the parent's (already
/// closed) set, carrying the vector of test values t_v = (E_v, l' + E_mask)
/// incrementally: adding u to the mask adds row u of M to t.
pub fn closure_table(ctx: &LatticeContext, a: &[i64]) -> Vec<u32> {
    let n = ctx.n;
    let size = 1usize << n;
    let mut table = vec![0u32; size];
    let mut tvecs: Vec<Vec<i64>> = vec![Vec::new(); size];

    let grow = |mut mask: u32, t: &mut Vec<i64>| -> u32 {
        'outer: loop {
            for w in 0..n {
                if mask >> w & 1 == 0 && t[w] > 0 {
                    mask |= 1 << w;
                    for u in 0..n {
                        t[u] += ctx.matrix[w][u];
                    }
                    continue 'outer;
                }
            }
            return mask;
        }
    };

    let mut t0: Vec<i64> = (0..n).map(|v| -a[v]).collect();
    table[0] = grow(0, &mut t0);
    tvecs[0] = t0;

    let mut masks: Vec<u32> = (1..size as u32).collect();
    masks.sort_by_key(|m| m.count_ones());
    for mask in masks {
        let v = mask.trailing_zeros() as usize;
        let parent = (mask & !(1 << v)) as usize;
        let pc = table[parent];
        if pc >> v & 1 == 1 {
            // v already absorbed by the parent's closure: same fixpoint
            table[mask as usize] = pc;
            tvecs[mask as usize] = tvecs[parent].clone();
            continue;
        }
        let mut t = tvecs[parent].clone();
        for u in 0..n {
            t[u] += ctx.matrix[v][u];
        }
        table[mask as usize] = grow(pc | (1 << v), &mut t);
        tvecs[mask as usize] = t;
    }
    table
}

/// chi(l') * 2*det, exact, via the machine-integer fast path when available.
fn chi_numerator(ctx: &LatticeContext, a: &[i64]) -> BigInt {
    match ctx.chi_numerator_i128(a) {
        Some(x) => BigInt::from(x),
        None => {
            let two_det = BigRational::from_integer(BigInt::from(2) * &ctx.det);
            (ctx.chi(a) * two_det).to_integer()
        }
    }
}

/// dim = (chi(l'+E) - chi(l'+E_J)) as a checked non-negative integer, given
/// the two numerators over the common denominator 2*det.
fn dim_from_numerators(
    num_e: &BigInt,
    num_j: &BigInt,
    two_det: &BigInt,
) -> Result<i64, ClosureError> {
    let diff = num_e - num_j;
    if (&diff % two_det) != BigInt::zero() {
        return Err(ClosureError::BadDimension(format!("{diff}/{two_det}")));
    }
    let d = diff / two_det;
    if d.is_negative() {
        return Err(ClosureError::BadDimension(d.to_string()));
    }
    Ok(i64::try_from(d).expect("arrangement dimension fits i64"))
}

/// The integer core shared by every arrangement quantity: the ambient
/// dimension and the intersection dimension for every subset bitmask.
/// Callers handle the cusp l' = 0 case before calling.
fn arrangement_dims(
    ctx: &LatticeContext,
    a: &[i64],
    class: GraphClass,
) -> Result<(i64, Vec<i64>), ClosureError> {
    let n = ctx.n;
    let size = 1usize << n;
    let table = closure_table(ctx, a);
    let two_det = BigInt::from(2) * &ctx.det;
    let num_e = chi_numerator(ctx, &ctx.shift_by_e_subset(a, (1u32 << n) - 1));
    // Memoize dims per distinct closure output.
    let mut dim_of_j: std::collections::HashMap<u32, i64> = std::collections::HashMap::new();
    let mut dims = vec![0i64; size];
    for (i, &j) in table.iter().enumerate() {
        let d = match dim_of_j.get(&j) {
            Some(&d) => d,
            None => {
                let num_j = chi_numerator(ctx, &ctx.shift_by_e_subset(a, j));
                let d = dim_from_numerators(&num_e, &num_j, &two_det)?;
                dim_of_j.insert(j, d);
                d
            }
        };
        dims[i] = d;
    }
    // Ambient dimension by the direct formulas; must agree with the chi route.
    let total: i64 = a.iter().sum();
    let ambient = match class {
        // tree, l' in S': dim T(l') = -(l', E) + 1 = 1 + sum a_v
        GraphClass::TreeRational => 1 + total,
        // cusp, l' != 0: dim T(l') = -(E, l') = sum a_v
        GraphClass::CuspCycle => total,
        GraphClass::Other => unreachable!(),
    };
    assert_eq!(
        ambient, dims[0],
        "direct ambient-dimension formula disagrees with the chi difference"
    );
    Ok((ambient, dims))
}

fn check_in_sprime(a: &[i64]) -> Result<(), ClosureError> {
    if let Some(i) = a.iter().position(|&x| x < 0) {
        return Err(ClosureError::NotInSprime(i));
    }
    Ok(())
}

fn check_class(class: GraphClass) -> Result<(), ClosureError> {
    match class {
        GraphClass::TreeRational | GraphClass::CuspCycle => Ok(()),
        GraphClass::Other => Err(ClosureError::UnsupportedClass(class)),
    }
}

/// Full dimension/Euler/motivic profile of the arrangement at l' in S'.
pub fn arrangement_profile(
    ctx: &LatticeContext,
    a: &[i64],
    class: GraphClass,
) -> Result<ArrangementProfile, ClosureError> {
    check_in_sprime(a)?;
    check_class(class)?;
    let n = ctx.n;
    let size = 1usize << n;
    if class == GraphClass::CuspCycle && a.iter().all(|&x| x == 0) {
        // T(0) = H^0(O_E) is a line and every T_v(0) vanishes; the
        // projectivized complement is a point (the l' = 0 fiat).
        let mut dims = vec![0i64; size];
        dims[0] = 1;
        let codims = dims.iter().map(|d| 1 - d).collect();
        return Ok(ArrangementProfile {
            ambient_dim: 1,
            dims,
            codims,
            euler: BigInt::from(1),
            class: MotivicPoly::one(),
        });
    }
    let (ambient, dims) = arrangement_dims(ctx, a, class)?;
    let codims = dims.iter().map(|&d| ambient - d).collect();
    // Inclusion-exclusion over intersection dimensions.
    let mut euler = BigInt::zero();
    let mut cls = MotivicPoly::zero();
    for (i, &d) in dims.iter().enumerate() {
        let sign_neg = (i as u32).count_ones() % 2 == 1;
        if sign_neg {
            euler -= BigInt::from(d);
        } else {
            euler += BigInt::from(d);
        }
        // (L^d - 1)/(L - 1) = 1 + L + ... + L^{d-1}
        let p = if d == 0 { MotivicPoly::zero() } else { MotivicPoly::projective_class(d as u64) };
        cls = if sign_neg { cls.sub(&p) } else { cls.add(&p) };
    }
    Ok(ArrangementProfile { ambient_dim: ambient, dims, codims, euler, class: cls })
}

/// chi_top of the projectivized arrangement complement, via the
/// intersection-dimension form of inclusion-exclusion. Avoids the motivic
/// bookkeeping of the full profile: this runs once per series coefficient.
pub fn complement_euler(
    ctx: &LatticeContext,
    a: &[i64],
    class: GraphClass,
) -> Result<BigInt, ClosureError> {
    check_in_sprime(a)?;
    check_class(class)?;
    if class == GraphClass::CuspCycle && a.iter().all(|&x| x == 0) {
        return Ok(BigInt::from(1));
    }
    let (_, dims) = arrangement_dims(ctx, a, class)?;
    let mut euler: i64 = 0;
    for (i, &d) in dims.iter().enumerate() {
        if (i as u32).count_ones() % 2 == 1 {
            euler -= d;
        } else {
            euler += d;
        }
    }
    Ok(BigInt::from(euler))
}

/// Grothendieck-ring class of the projectivized arrangement complement.
pub fn complement_class(
    ctx: &LatticeContext,
    a: &[i64],
    class: GraphClass,
) -> Result<MotivicPoly, ClosureError> {
    Ok(arrangement_profile(ctx, a, class)?.class)
}
