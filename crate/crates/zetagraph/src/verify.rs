//! Named verification suites over the built-in zoo, shared by the CLI
//! `verify` command and the acceptance test target. Each suite returns
//! `Ok(())` or a description of the first failed identity.

use crate::closure::{j_closure, j_closure_bruteforce, j_closure_with_order};
use crate::graph::ResolutionGraph;
use crate::lattice::LatticeContext;
use crate::motivic::MotivicPoly;
use crate::series::macdonald_series;
use crate::zeta::{
    cusp_closed_form, cusp_face_indicator, functional_equation_check,
    motivic_cusp, motivic_eca_product, motivic_eca_strata, motivic_tree, p_from_hilbert,
    specialize, zeta_arrangement, zeta_binomial, zeta_incexc, zeta_product, ZetaError,
};
use crate::zoo::{random_nd_tree, zoo, zoo_cusps, zoo_trees};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type SuiteResult = Result<(), String>;

fn ctx_of(name: &str, g: ResolutionGraph) -> Result<LatticeContext, String> {
    LatticeContext::build(g).map_err(|e| format!("{name}: {e}"))
}

fn zerr(name: &str, e: ZetaError) -> String {
    format!("{name}: {e}")
}

/// Four independent routes to Z(t) agree on the zoo trees plus `extra_trees`
/// seeded random negative-definite trees (up to 8 vertices).
pub fn tree_four_way(order: u32, extra_trees: usize, seed: u64) -> SuiteResult {
    let mut graphs: Vec<(String, ResolutionGraph)> = zoo_trees()
        .into_iter()
        .map(|(n, g)| (n.to_string(), g))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..extra_trees {
        graphs.push((format!("random-{i}"), random_nd_tree(&mut rng, 8)));
    }
    for (name, g) in graphs {
        let ctx = ctx_of(&name, g)?;
        let product = zeta_product(&ctx, order);
        let binomial = zeta_binomial(&ctx, order);
        if product != binomial {
            return Err(format!("{name}: product route != binomial route"));
        }
        let incexc = zeta_incexc(&ctx, order).map_err(|e| zerr(&name, e))?;
        if product != incexc {
            return Err(format!("{name}: product route != inclusion-exclusion route"));
        }
        let arrangement = zeta_arrangement(&ctx, order).map_err(|e| zerr(&name, e))?;
        if product != arrangement {
            return Err(format!("{name}: product route != arrangement route"));
        }
    }
    Ok(())
}

/// Cusp Z(t): inclusion-exclusion = arrangement = closed form, and the
/// closed-form coefficients have the predicted shape in every size regime.
pub fn cusp_identities(order: u32) -> SuiteResult {
    for (name, g) in zoo_cusps() {
        let ctx = ctx_of(name, g)?;
        let closed = cusp_closed_form(&ctx, order).map_err(|e| zerr(name, e))?;
        let incexc = zeta_incexc(&ctx, order).map_err(|e| zerr(name, e))?;
        if closed != incexc {
            return Err(format!("{name}: closed form != inclusion-exclusion route"));
        }
        let arrangement = zeta_arrangement(&ctx, order).map_err(|e| zerr(name, e))?;
        if closed != arrangement {
            return Err(format!("{name}: closed form != arrangement route"));
        }
        match ctx.n {
            1 => {
                // coefficient of x^k is k (for k >= 1)
                for k in 1..=order as i64 {
                    if closed.coeff(&[k]) != BigInt::from(k) {
                        return Err(format!("{name}: coefficient of x^{k} is not {k}"));
                    }
                }
            }
            2 => {
                for (e, c) in closed.terms() {
                    let mixed = e.0.iter().all(|&x| x > 0);
                    let expect = BigInt::from(if mixed { 2 } else { 1 });
                    if *c != expect {
                        return Err(format!("{name}: coefficient at {:?} is not {expect}", e.0));
                    }
                }
            }
            _ => {
                for a in ctx.enumerate_sprime(order) {
                    if closed.coeff(&a) != cusp_face_indicator(&ctx, &a) {
                        return Err(format!("{name}: coefficient at {a:?} is not the face indicator"));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Motivic tree identities: arrangement-class route equals the closed
/// product, and L = 1 recovers the classical series.
pub fn motivic_tree_recovery(order: u32) -> SuiteResult {
    for (name, g) in zoo_trees() {
        let ctx = ctx_of(name, g)?;
        let per_class = motivic_tree(&ctx, order).map_err(|e| zerr(name, e))?;
        let product = motivic_eca_product(&ctx, order).map_err(|e| zerr(name, e))?;
        if per_class != product {
            return Err(format!("{name}: arrangement classes != closed motivic product"));
        }
        if specialize(&per_class) != zeta_product(&ctx, order) {
            return Err(format!("{name}: L=1 specialization != classical series"));
        }
    }
    Ok(())
}

/// Stratification enumeration reproduces the closed motivic product on every
/// zoo graph.
pub fn strata_oracle(order: u32) -> SuiteResult {
    for (name, g) in zoo() {
        let ctx = ctx_of(name, g)?;
        let product = motivic_eca_product(&ctx, order).map_err(|e| zerr(name, e))?;
        let strata = motivic_eca_strata(&ctx, order).map_err(|e| zerr(name, e))?;
        if product != strata {
            return Err(format!("{name}: strata enumeration != closed motivic product"));
        }
    }
    Ok(())
}

/// Cusp motivic identities: (L-1)-divisibility, L = 1 specialization, and
/// the 1-vertex coefficients 1 + L + ... + L^{k-1}.
pub fn cusp_motivic(order: u32) -> SuiteResult {
    for (name, g) in zoo_cusps() {
        let ctx = ctx_of(name, g)?;
        // motivic_cusp itself asserts coefficient-wise (L-1)-divisibility
        let m = motivic_cusp(&ctx, order).map_err(|e| zerr(name, e))?;
        let closed = cusp_closed_form(&ctx, order).map_err(|e| zerr(name, e))?;
        if specialize(&m) != closed {
            return Err(format!("{name}: L=1 specialization != closed form"));
        }
        if ctx.n == 1 {
            for k in 1..=order as i64 {
                if m.coeff(&[k]) != MotivicPoly::projective_class(k as u64) {
                    return Err(format!("{name}: coefficient of x^{k} is not [P^{}]", k - 1));
                }
            }
        }
    }
    Ok(())
}

/// Functional equations: the L-twisted motivic identity on cusps and the
/// classical reciprocal identity on trees, as exact rational identities.
pub fn functional_equation(order_hint: u32) -> SuiteResult {
    let _ = order_hint; // rational-function check is truncation-free
    for (name, g) in zoo() {
        let ctx = ctx_of(name, g)?;
        if !functional_equation_check(&ctx).map_err(|e| zerr(name, e))? {
            return Err(format!("{name}: functional equation fails"));
        }
    }
    Ok(())
}

/// Randomized closure checks: fast closure vs brute force, tie-break order
/// independence, and idempotence.
pub fn closure_randomized(instances: usize, shuffles: usize, seed: u64) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<LatticeContext> = zoo_cusps()
        .into_iter()
        .map(|(name, g)| ctx_of(name, g))
        .collect::<Result<_, _>>()?;
    for i in 0..12 {
        let g = random_nd_tree(&mut rng, 6);
        pool.push(ctx_of(&format!("random-{i}"), g)?);
    }
    for trial in 0..instances {
        let ctx = &pool[rng.gen_range(0..pool.len())];
        let a: Vec<i64> = (0..ctx.n).map(|_| rng.gen_range(0..=5)).collect();
        let i_mask = rng.gen_range(0..1u32 << ctx.n);
        let fast = j_closure(ctx, &a, i_mask).output;
        let slow = j_closure_bruteforce(ctx, &a, i_mask)
            .map_err(|e| format!("trial {trial}: {e}"))?;
        if fast != slow {
            return Err(format!("trial {trial}: iterative closure != brute force"));
        }
        for _ in 0..shuffles {
            let mut order: Vec<usize> = (0..ctx.n).collect();
            order.shuffle(&mut rng);
            if j_closure_with_order(ctx, &a, i_mask, &order).output != fast {
                return Err(format!("trial {trial}: closure depends on tie-break order"));
            }
        }
        if j_closure(ctx, &a, fast).output != fast {
            return Err(format!("trial {trial}: closure is not idempotent"));
        }
    }
    Ok(())
}

/// Hilbert round trip on the zoo cusps: h from p over the support sets, then
/// p back from h by the alternating sum, on every lattice point whose entire
/// computation stays inside the truncation (the safe region).
pub fn hilbert_round_trip(order: u32) -> SuiteResult {
    for (name, g) in zoo_cusps() {
        let ctx = ctx_of(name, g)?;
        let p = cusp_closed_form(&ctx, order).map_err(|e| zerr(name, e))?;
        let mut tested = 0usize;
        // lattice points l = sum r_v E_v over a small box; estar coords -M r
        let mut r = vec![0i64; ctx.n];
        loop {
            let a = ctx.estar_of_lattice(&r);
            let in_sprime = a.iter().all(|&x| x >= 0);
            let within = a.iter().sum::<i64>() <= order as i64;
            if in_sprime && within {
                match p_from_hilbert(&ctx, &p, &a) {
                    Ok(back) => {
                        if back != p.coeff(&a) {
                            return Err(format!(
                                "{name}: round trip at r = {r:?} gives {back}, expected {}",
                                p.coeff(&a)
                            ));
                        }
                        tested += 1;
                    }
                    // outside the safe region: some shifted support set needs
                    // deeper coefficients than the truncation holds
                    Err(ZetaError::TruncationInsufficient { .. }) => {}
                    Err(e) => return Err(zerr(name, e)),
                }
            }
            // odometer over r in [0,3]^n
            let mut i = 0;
            while i < ctx.n {
                r[i] += 1;
                if r[i] <= 3 {
                    break;
                }
                r[i] = 0;
                i += 1;
            }
            if i == ctx.n {
                break;
            }
        }
        if tested == 0 {
            return Err(format!("{name}: no lattice point fell in the safe region"));
        }
    }
    Ok(())
}

/// Macdonald identity checks: chi = 2 coefficients count projective spaces,
/// and the series is multiplicative in chi.
pub fn macdonald() -> SuiteResult {
    let p1 = macdonald_series(2, 20);
    for k in 0..=20i64 {
        if p1.coeff(&[k]) != BigInt::from(k + 1) {
            return Err(format!("chi=2 coefficient at degree {k} is not {}", k + 1));
        }
    }
    for c1 in -3..=3i64 {
        for c2 in -3..=3i64 {
            let lhs = macdonald_series(c1 + c2, 10);
            let rhs = macdonald_series(c1, 10)
                .mul(&macdonald_series(c2, 10))
                .map_err(|e| e.to_string())?;
            if lhs != rhs {
                return Err(format!("multiplicativity fails at chi = ({c1}, {c2})"));
            }
        }
    }
    Ok(())
}

/// Every named suite with CLI-facing names, at moderate default sizes.
pub fn all_suites(order: u32, seed: u64) -> Vec<(&'static str, SuiteResult)> {
    vec![
        ("tree-equivalence", tree_four_way(order, 20, seed)),
        ("cusp-identities", cusp_identities(order)),
        ("motivic", motivic_tree_recovery(order)
            .and_then(|_| strata_oracle(order.min(5)))
            .and_then(|_| cusp_motivic(order))),
        ("functional-equation", functional_equation(order)),
        ("closure", closure_randomized(1000, 20, seed)),
        ("macdonald", macdonald()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_at_small_order() {
        assert_eq!(tree_four_way(4, 3, 1), Ok(()));
        assert_eq!(cusp_identities(5), Ok(()));
        assert_eq!(motivic_tree_recovery(4), Ok(()));
        assert_eq!(strata_oracle(3), Ok(()));
        assert_eq!(cusp_motivic(5), Ok(()));
        assert_eq!(functional_equation(0), Ok(()));
        assert_eq!(closure_randomized(50, 5, 3), Ok(()));
        assert_eq!(hilbert_round_trip(8), Ok(()));
        assert_eq!(macdonald(), Ok(()));
    }
}
