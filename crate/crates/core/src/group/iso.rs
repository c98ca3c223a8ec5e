//! Decidable isomorphism testing with explicit witnesses.
//!
//! Abelian groups are compared by invariant factors (no size cap);
//! nonabelian groups by generator-image backtracking pruned by order
//! statistics and centralizer sizes, capped at order 512.

use super::abelian::abelian_basis;
use super::ops::{center, derived_subgroup, subgroup_generated};
use super::{GroupRef, Homomorphism};
use crate::error::{Error, Result};
use crate::lattice::Int;

/// Nonabelian backtracking cap.
const NONABELIAN_CAP: usize = 512;

#[derive(Debug)]
pub enum IsoResult {
    Isomorphic(Homomorphism),
    NotIsomorphic { reason: String },
}

impl IsoResult {
    pub fn as_witness(&self) -> Option<&Homomorphism> {
        match self {
            IsoResult::Isomorphic(h) => Some(h),
            IsoResult::NotIsomorphic { .. } => None,
        }
    }

    pub fn holds(&self) -> bool {
        matches!(self, IsoResult::Isomorphic(_))
    }
}

pub fn is_isomorphic(g: &GroupRef, h: &GroupRef) -> Result<IsoResult> {
    if g.order() != h.order() {
        return Ok(IsoResult::NotIsomorphic {
            reason: format!("orders differ: {} vs {}", g.order(), h.order()),
        });
    }
    match (g.is_abelian(), h.is_abelian()) {
        (true, true) => abelian_iso(g, h),
        (false, false) => {
            if g.order().min(h.order()) > NONABELIAN_CAP {
                return Err(Error::SizeCap {
                    op: "is_isomorphic (nonabelian)",
                    cap: NONABELIAN_CAP,
                    actual: g.order(),
                });
            }
            nonabelian_iso(g, h)
        }
        _ => Ok(IsoResult::NotIsomorphic {
            reason: "exactly one of the groups is abelian".to_string(),
        }),
    }
}

fn abelian_iso(g: &GroupRef, h: &GroupRef) -> Result<IsoResult> {
    let bg = abelian_basis(g)?;
    let bh = abelian_basis(h)?;
    if bg.orders != bh.orders {
        return Ok(IsoResult::NotIsomorphic {
            reason: format!(
                "invariant factors differ: {:?} vs {:?}",
                bg.orders, bh.orders
            ),
        });
    }
    let images: Vec<u32> = g
        .elements()
        .map(|x| {
            let mut acc = h.identity();
            for (i, &c) in bg.coords_of(x).iter().enumerate() {
                acc = h.mul(acc, h.pow(bh.generators[i], c));
            }
            acc
        })
        .collect();
    let witness = Homomorphism::new(g.clone(), h.clone(), images)?;
    assert!(witness.is_bijective(), "basis-matched map must be bijective");
    Ok(IsoResult::Isomorphic(witness))
}

fn centralizer_size(g: &GroupRef, x: u32) -> usize {
    g.elements().filter(|&y| g.mul(x, y) == g.mul(y, x)).count()
}

fn nonabelian_iso(g: &GroupRef, h: &GroupRef) -> Result<IsoResult> {
    // Cheap invariants first.
    if g.order_histogram() != h.order_histogram() {
        return Ok(IsoResult::NotIsomorphic {
            reason: "element-order histograms differ".to_string(),
        });
    }
    if center(g).order() != center(h).order() {
        return Ok(IsoResult::NotIsomorphic {
            reason: "center orders differ".to_string(),
        });
    }
    if derived_subgroup(g).order() != derived_subgroup(h).order() {
        return Ok(IsoResult::NotIsomorphic {
            reason: "derived subgroup orders differ".to_string(),
        });
    }
    // Greedy generating sequence for g.
    let mut gens: Vec<u32> = Vec::new();
    let mut closure_orders: Vec<usize> = Vec::new();
    let mut closure = subgroup_generated(g, &[]);
    while closure.order() < g.order() {
        let next = g
            .elements()
            .filter(|&x| !closure.contains(x))
            .max_by_key(|&x| (g.element_order(x), std::cmp::Reverse(x)))
            .unwrap();
        gens.push(next);
        closure = subgroup_generated(g, &gens);
        closure_orders.push(closure.order());
    }
    // Candidate images per generator: matching order and centralizer size.
    let candidates: Vec<Vec<u32>> = gens
        .iter()
        .map(|&x| {
            let o = g.element_order(x);
            let c = centralizer_size(g, x);
            h.elements()
                .filter(|&y| h.element_order(y) == o && centralizer_size(h, y) == c)
                .collect()
        })
        .collect();
    let mut chosen: Vec<u32> = Vec::new();
    if backtrack(g, h, &gens, &closure_orders, &candidates, &mut chosen) {
        let pairs: Vec<(u32, u32)> = gens.iter().copied().zip(chosen).collect();
        let witness = Homomorphism::from_generator_images(g.clone(), h.clone(), &pairs)?;
        assert!(witness.is_bijective());
        return Ok(IsoResult::Isomorphic(witness));
    }
    Ok(IsoResult::NotIsomorphic {
        reason: "generator-image search exhausted".to_string(),
    })
}

fn backtrack(
    g: &GroupRef,
    h: &GroupRef,
    gens: &[u32],
    closure_orders: &[usize],
    candidates: &[Vec<u32>],
    chosen: &mut Vec<u32>,
) -> bool {
    let i = chosen.len();
    if i == gens.len() {
        let pairs: Vec<(u32, u32)> = gens.iter().copied().zip(chosen.iter().copied()).collect();
        return Homomorphism::from_generator_images(g.clone(), h.clone(), &pairs)
            .map(|w| w.is_bijective())
            .unwrap_or(false);
    }
    'cand: for &y in &candidates[i] {
        // Pairwise word-shape pruning against already chosen images.
        for (j, &cj) in chosen.iter().enumerate() {
            let gj = gens[j];
            if g.element_order(g.mul(gj, gens[i])) != h.element_order(h.mul(cj, y)) {
                continue 'cand;
            }
            if g.element_order(g.commutator(gj, gens[i]))
                != h.element_order(h.commutator(cj, y))
            {
                continue 'cand;
            }
        }
        chosen.push(y);
        // The images so far must generate a subgroup of matching order.
        if subgroup_generated(h, chosen).order() == closure_orders[i]
            && backtrack(g, h, gens, closure_orders, candidates, chosen)
        {
            return true;
        }
        chosen.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::super::catalog_group;
    use super::*;
    use crate::group::{group_from_permutations, parse_cycles};
    use std::sync::Arc;

    fn gref(name: &str) -> GroupRef {
        Arc::new(catalog_group(name).unwrap())
    }

    #[test]
    fn d8_and_q8_are_not_isomorphic() {
        let r = is_isomorphic(&gref("D8"), &gref("Q8")).unwrap();
        match r {
            IsoResult::NotIsomorphic { reason } => {
                // D8 has 5 involutions, Q8 has 1.
                assert!(reason.contains("histogram"), "{reason}");
            }
            IsoResult::Isomorphic(_) => panic!("D8 ≅ Q8 claimed"),
        }
    }

    #[test]
    fn identity_iso_on_self() {
        for name in ["C6", "D8", "S3", "Q8", "A4"] {
            let g = gref(name);
            let r = is_isomorphic(&g, &g).unwrap();
            assert!(r.holds(), "{name} not isomorphic to itself");
            let w = r.as_witness().unwrap();
            assert!(w.is_bijective());
        }
    }

    #[test]
    fn abelian_invariant_comparison() {
        let r = is_isomorphic(&gref("C2xC4"), &gref("C8")).unwrap();
        assert!(!r.holds());
        let r = is_isomorphic(&gref("C2xC3"), &gref("C6")).unwrap();
        assert!(r.holds());
    }

    #[test]
    fn permutation_d8_matches_catalog_d8() {
        let perms = parse_cycles(&["(1 2 3 4)", "(1 3)"]).unwrap();
        let g = Arc::new(group_from_permutations(&perms).unwrap());
        let r = is_isomorphic(&g, &gref("D8")).unwrap();
        assert!(r.holds());
    }

    #[test]
    fn s3_not_isomorphic_to_c6() {
        let r = is_isomorphic(&gref("S3"), &gref("C6")).unwrap();
        assert!(!r.holds());
    }
}
