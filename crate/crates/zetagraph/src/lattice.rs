//! Exact linear algebra over the lattices L and L'.
//!
//! Internally every element of L' is held in E*-coordinates (integer vector
//! `a` with l' = sum a_v E_v*); E-coordinates are exact rationals derived on
//! demand. With M the intersection matrix, the dual basis vectors are the
//! columns of -M^{-1} and (l', E_v) = -a_v needs no rational arithmetic.

use crate::graph::ResolutionGraph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("intersection form is not negative definite: leading principal minor {index} equals {minor}")]
    NotNegativeDefinite { index: usize, minor: BigInt },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("element is not in the lattice L (E-coordinate {index} = {value} is not integral)")]
    NotInLattice { index: usize, value: String },
}

/// l' in E*-coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualCycle {
    pub estar: Vec<i64>,
}

impl DualCycle {
    pub fn new(estar: Vec<i64>) -> Self {
        DualCycle { estar }
    }

    pub fn zero(n: usize) -> Self {
        DualCycle { estar: vec![0; n] }
    }

    pub fn basis(n: usize, v: usize) -> Self {
        let mut a = vec![0; n];
        a[v] = 1;
        DualCycle { estar: a }
    }
}

/// Immutable exact-arithmetic context attached to a negative-definite graph.
pub struct LatticeContext {
    pub graph: ResolutionGraph,
    pub n: usize,
    /// Intersection matrix.
    pub matrix: Vec<Vec<i64>>,
    /// det(M); its sign is (-1)^n.
    pub det: BigInt,
    /// |det(M)| = |L'/L|.
    pub det_abs: BigInt,
    /// Integer matrix with M^{-1} = adj / det.
    pub adj: Vec<Vec<BigInt>>,
    /// M^{-1} as exact rationals.
    pub inv: Vec<Vec<BigRational>>,
    /// E_v* in E-coordinates: columns of -M^{-1} (all entries > 0).
    pub dual_basis: Vec<Vec<BigRational>>,
    /// Canonical class K in E-coordinates.
    pub canonical_e: Vec<BigRational>,
    /// det(M) * K (integer vector).
    kd: Vec<BigInt>,
    /// Per-vertex loop counts.
    pub loops_at: Vec<u32>,
    /// i128 fast path for chi numerators; None when adj or det*K overflow i64.
    fast: Option<FastChi>,
}

struct FastChi {
    adj: Vec<Vec<i64>>,
    kd: Vec<i64>,
}

/// Leading principal minors of a symmetric integer matrix, by fraction-free
/// (Bareiss) elimination.
pub fn leading_principal_minors(m: &[Vec<i64>]) -> Vec<BigInt> {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut minors = Vec::with_capacity(n);
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            // Pivotless step: fall back to expanding the k-th minor directly.
            minors.push(minor_by_laplace(m, k + 1));
            // Continue Bareiss on a fresh copy is impossible without pivoting;
            // compute all remaining minors by Laplace expansion (small n).
            for j in k + 1..n {
                minors.push(minor_by_laplace(m, j + 1));
            }
            return minors;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev; // exact by Bareiss
            }
        }
        prev = a[k][k].clone();
        minors.push(prev.clone());
    }
    minors
}

fn minor_by_laplace(m: &[Vec<i64>], size: usize) -> BigInt {
    fn det(rows: &[Vec<BigInt>]) -> BigInt {
        let n = rows.len();
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return rows[0][0].clone();
        }
        let mut acc = BigInt::zero();
        for j in 0..n {
            if rows[0][j].is_zero() {
                continue;
            }
            let sub: Vec<Vec<BigInt>> = rows[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let term = &rows[0][j] * det(&sub);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }
    let rows: Vec<Vec<BigInt>> = (0..size)
        .map(|i| (0..size).map(|j| BigInt::from(m[i][j])).collect())
        .collect();
    det(&rows)
}

/// True iff the k-th leading principal minor has sign (-1)^k for all k.
pub fn check_negative_definite(m: &[Vec<i64>]) -> Result<bool, LatticeError> {
    let n = m.len();
    for i in 0..n {
        for j in 0..n {
            if m[i][j] != m[j][i] {
                return Err(LatticeError::NotSymmetric);
            }
        }
    }
    Ok(first_bad_minor(m).is_none())
}

fn first_bad_minor(m: &[Vec<i64>]) -> Option<(usize, BigInt)> {
    for (k, minor) in leading_principal_minors(m).into_iter().enumerate() {
        let want_negative = k % 2 == 0;
        let ok = if want_negative { minor.is_negative() } else { minor.is_positive() };
        if !ok {
            return Some((k + 1, minor));
        }
    }
    None
}

fn invert(m: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| {
                    if j < n {
                        BigRational::from_integer(BigInt::from(m[i][j]))
                    } else if j - n == i {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).expect("definite matrix is invertible");
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= p.clone();
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..2 * n {
                    let sub = &f * &a[col][j];
                    a[r][j] -= sub;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

impl LatticeContext {
    /// Build the full exact context; fails unless M is negative definite.
    pub fn build(graph: ResolutionGraph) -> Result<Self, LatticeError> {
        let matrix = graph.intersection_matrix();
        let n = matrix.len();
        if let Some((index, minor)) = first_bad_minor(&matrix) {
            return Err(LatticeError::NotNegativeDefinite { index, minor });
        }
        let minors = leading_principal_minors(&matrix);
        let det = minors[n - 1].clone();
        let det_abs = det.abs();
        let inv = invert(&matrix);
        let adj: Vec<Vec<BigInt>> = inv
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| {
                        let s = x * BigRational::from_integer(det.clone());
                        debug_assert!(s.is_integer());
                        s.to_integer()
                    })
                    .collect()
            })
            .collect();
        let dual_basis: Vec<Vec<BigRational>> = (0..n)
            .map(|v| (0..n).map(|w| -inv[w][v].clone()).collect())
            .collect();
        let loops_at: Vec<u32> = (0..n).map(|v| graph.loops_at(v)).collect();
        // Adjunction with loops (arithmetic genus): (K, E_v) = 2 g_v - 2 + 2 loops(v) - E_v^2.
        let rhs: Vec<i64> = (0..n)
            .map(|v| {
                let gv = graph.vertices()[v].genus as i64;
                2 * gv - 2 + 2 * loops_at[v] as i64 - matrix[v][v]
            })
            .collect();
        // K solves M k = rhs.
        let canonical_e: Vec<BigRational> = (0..n)
            .map(|i| {
                let mut acc = BigRational::zero();
                for j in 0..n {
                    acc += &inv[i][j] * BigRational::from_integer(BigInt::from(rhs[j]));
                }
                acc
            })
            .collect();
        let kd: Vec<BigInt> = canonical_e
            .iter()
            .map(|x| {
                let s = x * BigRational::from_integer(det.clone());
                debug_assert!(s.is_integer());
                s.to_integer()
            })
            .collect();
        let fast = (|| {
            let adj_small: Vec<Vec<i64>> = adj
                .iter()
                .map(|row| row.iter().map(|x| i64::try_from(x.clone())).collect())
                .collect::<Result<_, _>>()
                .ok()?;
            let kd_small: Vec<i64> = kd
                .iter()
                .map(|x| i64::try_from(x.clone()))
                .collect::<Result<_, _>>()
                .ok()?;
            Some(FastChi { adj: adj_small, kd: kd_small })
        })();
        Ok(LatticeContext {
            graph,
            n,
            matrix,
            det,
            det_abs,
            adj,
            inv,
            dual_basis,
            canonical_e,
            kd,
            loops_at,
            fast,
        })
    }

    fn check_dim(&self, len: usize) -> Result<(), LatticeError> {
        if len != self.n {
            return Err(LatticeError::DimensionMismatch { expected: self.n, got: len });
        }
        Ok(())
    }

    /// E-coordinates of l' given in E*-coordinates: -M^{-1} a.
    pub fn e_coords(&self, a: &[i64]) -> Vec<BigRational> {
        (0..self.n)
            .map(|i| {
                let mut acc = BigRational::zero();
                for j in 0..self.n {
                    acc -= &self.inv[i][j] * BigRational::from_integer(BigInt::from(a[j]));
                }
                acc
            })
            .collect()
    }

    /// E*-coordinates of a lattice element l = sum r_v E_v: the vector -M r.
    pub fn estar_of_lattice(&self, r: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|v| -(0..self.n).map(|u| self.matrix[v][u] * r[u]).sum::<i64>())
            .collect()
    }

    /// (x, y) for x, y in E*-coordinates: a^T M^{-1} b.
    pub fn pairing(&self, x: &DualCycle, y: &DualCycle) -> Result<BigRational, LatticeError> {
        self.check_dim(x.estar.len())?;
        self.check_dim(y.estar.len())?;
        let mut num = BigInt::zero();
        for i in 0..self.n {
            for j in 0..self.n {
                num += BigInt::from(x.estar[i]) * &self.adj[i][j] * BigInt::from(y.estar[j]);
            }
        }
        Ok(BigRational::new(num, self.det.clone()))
    }

    /// (l', E_v) = -a_v, pure integer arithmetic.
    pub fn pairing_with_basis(&self, x: &DualCycle, v: usize) -> i64 {
        -x.estar[v]
    }

    /// chi(l') = -(l', l' + K)/2 for l' in E*-coordinates.
    pub fn chi(&self, a: &[i64]) -> BigRational {
        // (l', l') = a^T adj a / det, (l', K) = -a^T kd / det.
        let mut quad = BigInt::zero();
        for i in 0..self.n {
            if a[i] == 0 {
                continue;
            }
            let ai = BigInt::from(a[i]);
            for j in 0..self.n {
                if a[j] != 0 {
                    quad += &ai * &self.adj[i][j] * BigInt::from(a[j]);
                }
            }
        }
        let mut lin = BigInt::zero();
        for i in 0..self.n {
            if a[i] != 0 {
                lin += BigInt::from(a[i]) * &self.kd[i];
            }
        }
        BigRational::new(lin - quad, BigInt::from(2) * &self.det)
    }

    /// Numerator of chi(l') over the fixed denominator 2*det, as an i128.
    /// None when the fast-path tables are unavailable or a product would
    /// overflow; callers then fall back to `chi`.
    pub fn chi_numerator_i128(&self, a: &[i64]) -> Option<i128> {
        let fast = self.fast.as_ref()?;
        let mut quad: i128 = 0;
        for i in 0..self.n {
            if a[i] == 0 {
                continue;
            }
            let ai = a[i] as i128;
            for j in 0..self.n {
                if a[j] != 0 {
                    let term = ai
                        .checked_mul(fast.adj[i][j] as i128)?
                        .checked_mul(a[j] as i128)?;
                    quad = quad.checked_add(term)?;
                }
            }
        }
        let mut lin: i128 = 0;
        for i in 0..self.n {
            lin = lin.checked_add((a[i] as i128).checked_mul(fast.kd[i] as i128)?)?;
        }
        lin.checked_sub(quad)
    }

    /// 2*det as an i128 when the fast path is available.
    pub fn chi_denominator_i128(&self) -> Option<i128> {
        self.fast.as_ref()?;
        i128::try_from(BigInt::from(2) * &self.det).ok()
    }

    /// chi of a DualCycle.
    pub fn chi_cycle(&self, x: &DualCycle) -> Result<BigRational, LatticeError> {
        self.check_dim(x.estar.len())?;
        Ok(self.chi(&x.estar))
    }

    /// True iff Z_K = E, i.e. the anticanonical cycle equals the reduced
    /// exceptional divisor (holds for all cusp graphs).
    pub fn zk_is_e(&self) -> bool {
        self.canonical_e.iter().all(|x| *x == -BigRational::one())
    }

    /// E*-coordinates of l' + E_I for a subset bitmask I.
    pub fn shift_by_e_subset(&self, a: &[i64], mask: u32) -> Vec<i64> {
        let mut out = a.to_vec();
        for v in 0..self.n {
            if mask >> v & 1 == 1 {
                // E_v in E*-coordinates is minus the v-th row of M.
                for u in 0..self.n {
                    out[u] -= self.matrix[v][u];
                }
            }
        }
        out
    }

    /// All a in Z_{>=0}^V with sum <= order, in graded-lexicographic order.
    pub fn enumerate_sprime(&self, order: u32) -> Vec<Vec<i64>> {
        enumerate_exponents(self.n, order)
    }

    /// For l' in L (given in E*-coordinates), the finite set
    /// { s in S' : s - l' in L and s - l' not >= 0 }, as E*-exponent vectors.
    pub fn support_set_below(&self, a: &[i64]) -> Result<Vec<Vec<i64>>, LatticeError> {
        self.check_dim(a.len())?;
        let r = self.e_coords(a);
        for (i, x) in r.iter().enumerate() {
            if !x.is_integer() {
                return Err(LatticeError::NotInLattice { index: i, value: x.to_string() });
            }
        }
        let mut out: std::collections::BTreeSet<Vec<i64>> = std::collections::BTreeSet::new();
        // For s to have s_w^E < r_w we need a_u (E_u*)_w < r_w for every u,
        // since all dual basis entries are strictly positive.
        for w in 0..self.n {
            if !r[w].is_positive() {
                continue;
            }
            let bounds: Vec<i64> = (0..self.n)
                .map(|u| {
                    // a_u < r_w / (E_u*)_w
                    let q = &r[w] / &self.dual_basis[u][w];
                    let fl = q.floor().to_integer();
                    let strict = if q.is_integer() { fl - 1 } else { fl.clone() };
                    // bounds are small in practice; i64 is plenty
                    i64::try_from(strict).expect("support box bound fits i64")
                })
                .collect();
            if bounds.iter().any(|&b| b < 0) {
                continue;
            }
            let mut cur = vec![0i64; self.n];
            loop {
                out.insert(cur.clone());
                // odometer over the box
                let mut i = 0;
                loop {
                    if i == self.n {
                        break;
                    }
                    cur[i] += 1;
                    if cur[i] <= bounds[i] {
                        break;
                    }
                    cur[i] = 0;
                    i += 1;
                }
                if i == self.n {
                    break;
                }
            }
        }
        // Exact filter: s in L and s - l' not >= 0 componentwise.
        let filtered: Vec<Vec<i64>> = out
            .into_iter()
            .filter(|s| {
                let se = self.e_coords(s);
                if se.iter().any(|x| !x.is_integer()) {
                    return false;
                }
                se.iter().zip(&r).any(|(sw, rw)| sw < rw)
            })
            .collect();
        Ok(filtered)
    }
}

/// All exponent vectors in Z_{>=0}^nvars of total degree <= order, graded-lex:
/// ascending total degree, then ascending lexicographic within a degree.
pub fn enumerate_exponents(nvars: usize, order: u32) -> Vec<Vec<i64>> {
    fn rec(out: &mut Vec<Vec<i64>>, cur: &mut Vec<i64>, pos: usize, remaining: i64) {
        if pos + 1 == cur.len() {
            cur[pos] = remaining;
            out.push(cur.clone());
            return;
        }
        for v in 0..=remaining {
            cur[pos] = v;
            rec(out, cur, pos + 1, remaining - v);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    let mut cur = vec![0i64; nvars];
    for d in 0..=order as i64 {
        rec(&mut out, &mut cur, 0, d);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ResolutionGraph;

    fn ctx(data: &[(i64, u32)], edges: &[(usize, usize)]) -> LatticeContext {
        LatticeContext::build(ResolutionGraph::from_parts(data, edges).unwrap()).unwrap()
    }

    fn loop1() -> LatticeContext {
        ctx(&[(-5, 0)], &[(0, 0)])
    }

    fn cusp3() -> LatticeContext {
        ctx(&[(-2, 0), (-2, 0), (-3, 0)], &[(0, 1), (1, 2), (0, 2)])
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn negative_definite_checks() {
        assert!(check_negative_definite(&[vec![-2, 2], vec![2, -3]]).unwrap());
        assert!(!check_negative_definite(&[vec![-2, 2], vec![2, -2]]).unwrap());
        assert!(check_negative_definite(&[vec![-5]]).unwrap());
        assert!(matches!(
            check_negative_definite(&[vec![-2, 1], vec![0, -2]]),
            Err(LatticeError::NotSymmetric)
        ));
    }

    #[test]
    fn not_definite_reports_minor() {
        let g = ResolutionGraph::from_parts(&[(-1, 0), (-1, 0)], &[(0, 1)]).unwrap();
        match LatticeContext::build(g) {
            Err(LatticeError::NotNegativeDefinite { index, minor }) => {
                assert_eq!(index, 2);
                assert_eq!(minor, BigInt::from(0));
            }
            other => panic!("expected NotNegativeDefinite, got {:?}", other.err()),
        }
    }

    #[test]
    fn cusp3_minors() {
        let m = cusp3().matrix.clone();
        let minors = leading_principal_minors(&m);
        assert_eq!(minors, vec![BigInt::from(-2), BigInt::from(3), BigInt::from(-3)]);
    }

    #[test]
    fn dual_basis_pairing() {
        let c = cusp3();
        for v in 0..3 {
            for w in 0..3 {
                // (E_v*, E_w) = -delta_vw; in E-coordinates (M r)_w.
                let mut val = BigRational::zero();
                for u in 0..3 {
                    val += BigRational::from_integer(BigInt::from(c.matrix[w][u]))
                        * &c.dual_basis[v][u];
                }
                let expect = if v == w { -BigRational::one() } else { BigRational::zero() };
                assert_eq!(val, expect);
            }
        }
    }

    #[test]
    fn dual_basis_strictly_positive() {
        for c in [loop1(), cusp3(), ctx(&[(-2, 0), (-2, 0)], &[(0, 1)])] {
            for col in &c.dual_basis {
                assert!(col.iter().all(|x| x.is_positive()));
            }
        }
    }

    #[test]
    fn loop1_dual_basis_and_pairing() {
        let c = loop1();
        assert_eq!(c.dual_basis[0][0], rat(1, 5));
        let estar = DualCycle::basis(1, 0);
        assert_eq!(c.pairing(&estar, &estar).unwrap(), rat(-1, 5));
        assert_eq!(c.pairing_with_basis(&estar, 0), -1);
    }

    #[test]
    fn pairing_matches_inverse_matrix() {
        let c = cusp3();
        for v in 0..3 {
            for u in 0..3 {
                let p = c
                    .pairing(&DualCycle::basis(3, v), &DualCycle::basis(3, u))
                    .unwrap();
                assert_eq!(p, c.inv[v][u]);
            }
        }
    }

    #[test]
    fn canonical_class_cusps() {
        for c in [
            loop1(),
            cusp3(),
            ctx(&[(-2, 0), (-3, 0)], &[(0, 1), (0, 1)]),
        ] {
            assert!(c.zk_is_e(), "cusp graphs have K = -E");
        }
    }

    #[test]
    fn canonical_class_tree_cases() {
        let c = ctx(&[(-2, 0)], &[]);
        assert_eq!(c.canonical_e, vec![BigRational::zero()]);
        // 1-vertex loop: (K, E_v) = 5 = 2*0 - 2 + 2*1 - (-5)
        let c = loop1();
        assert_eq!(c.canonical_e, vec![-BigRational::one()]);
        let k_pair: BigRational = BigRational::from_integer(BigInt::from(c.matrix[0][0]))
            * &c.canonical_e[0];
        assert_eq!(k_pair, rat(5, 1));
    }

    #[test]
    fn chi_values() {
        let c = cusp3();
        assert_eq!(c.chi(&[0, 0, 0]), BigRational::zero());
        // chi(E) = 0 on cusps since K = -E
        let e_star = c.estar_of_lattice(&[1, 1, 1]);
        assert_eq!(c.chi(&e_star), BigRational::zero());
        // tree: chi(E_v) = 1 for rational vertices without loops
        let t = ctx(&[(-2, 0), (-2, 0)], &[(0, 1)]);
        let ev = t.estar_of_lattice(&[1, 0]);
        assert_eq!(t.chi(&ev), BigRational::one());
    }

    #[test]
    fn chi_two_routes_agree() {
        let c = cusp3();
        for a in c.enumerate_sprime(3) {
            let direct = c.chi(&a);
            let cyc = DualCycle::new(a.clone());
            let k_estar: Vec<BigRational> = (0..c.n)
                .map(|v| {
                    // (l', K) via rational pairing: (l')_E^T M K_E = -a . K
                    -BigRational::from_integer(BigInt::from(a[v])) * &c.canonical_e[v]
                })
                .collect();
            let lk: BigRational = k_estar.into_iter().sum();
            let ll = c.pairing(&cyc, &cyc).unwrap();
            let expect = -(ll + lk) / rat(2, 1);
            assert_eq!(direct, expect);
        }
    }

    #[test]
    fn enumerate_sprime_orders() {
        let c = loop1();
        let e = c.enumerate_sprime(3);
        assert_eq!(e, vec![vec![0], vec![1], vec![2], vec![3]]);
        let t = ctx(&[(-2, 0), (-2, 0)], &[(0, 1)]);
        assert_eq!(t.enumerate_sprime(1), vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
        // stars and bars count
        let c3 = cusp3();
        for n in 0..5u32 {
            let cnt = c3.enumerate_sprime(n).len();
            let expect = (n as usize + 1) * (n as usize + 2) * (n as usize + 3) / 6;
            assert_eq!(cnt, expect);
        }
    }

    #[test]
    fn enumerate_sprime_prefix_closed() {
        let c = cusp3();
        let small = c.enumerate_sprime(3);
        let big = c.enumerate_sprime(4);
        assert_eq!(&big[..small.len()], &small[..]);
    }

    #[test]
    fn support_set_below_examples() {
        let c = loop1();
        // l' = 0: empty
        assert!(c.support_set_below(&[0]).unwrap().is_empty());
        // l' = E = 5 E*: only s with s^E < 1 and s in L, i.e. s = 0
        let e = c.estar_of_lattice(&[1]);
        assert_eq!(e, vec![5]);
        let s = c.support_set_below(&e).unwrap();
        assert_eq!(s, vec![vec![0]]);
        // elements with s >= l' are excluded
        for sv in &s {
            let se = c.e_coords(sv);
            let re = c.e_coords(&e);
            assert!(se.iter().zip(&re).any(|(a, b)| a < b));
        }
    }

    #[test]
    fn support_set_below_requires_lattice_element() {
        let c = loop1();
        assert!(matches!(
            c.support_set_below(&[1]),
            Err(LatticeError::NotInLattice { .. })
        ));
    }
}
