//! Subgroup, series, quotient and product machinery.

use super::{FiniteGroup, GroupRef, Homomorphism, Subgroup};
use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::sync::Arc;

/// Least subgroup containing `gens` (closure under products; inverses come
/// for free in a finite group).
pub fn subgroup_generated(g: &FiniteGroup, gens: &[u32]) -> Subgroup {
    let mut set: BTreeSet<u32> = BTreeSet::new();
    set.insert(g.identity());
    let mut frontier: Vec<u32> = vec![g.identity()];
    while let Some(x) = frontier.pop() {
        for &s in gens {
            let y = g.mul(x, s);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    Subgroup::from_closed_set(set)
}

/// Least normal subgroup containing `gens`: closure under products and
/// conjugation by every group element.
pub fn normal_closure(g: &FiniteGroup, gens: &[u32]) -> Subgroup {
    let mut sub = subgroup_generated(g, gens);
    loop {
        let mut extra: Vec<u32> = Vec::new();
        for &x in sub.members() {
            for c in g.elements() {
                let y = g.conjugate(x, c);
                if !sub.contains(y) {
                    extra.push(y);
                }
            }
        }
        if extra.is_empty() {
            return sub;
        }
        extra.extend_from_slice(sub.members());
        sub = subgroup_generated(g, &extra);
    }
}

pub fn center(g: &FiniteGroup) -> Subgroup {
    let members: BTreeSet<u32> = g
        .elements()
        .filter(|&x| g.elements().all(|y| g.mul(x, y) == g.mul(y, x)))
        .collect();
    Subgroup::from_closed_set(members)
}

/// Subgroup generated by all commutators `[a, b]` with `a ∈ xs`, `b ∈ ys`.
pub fn commutator_subgroup(g: &FiniteGroup, xs: &[u32], ys: &[u32]) -> Subgroup {
    let mut gens: BTreeSet<u32> = BTreeSet::new();
    for &a in xs {
        for &b in ys {
            gens.insert(g.commutator(a, b));
        }
    }
    let gens: Vec<u32> = gens.into_iter().collect();
    // [xs, ys] with xs, ys closed under products is already normal in
    // <xs, ys>; for safety, take the normal closure in g.
    normal_closure(g, &gens)
}

pub fn derived_subgroup(g: &FiniteGroup) -> Subgroup {
    let all: Vec<u32> = g.elements().collect();
    commutator_subgroup(g, &all, &all)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeriesKind {
    LowerCentral,
    UpperCentral,
    Derived,
}

/// Standard subgroup series, listed until the first repetition:
/// lower central `G = γ1 ⊇ γ2 ⊇ …`, upper central `1 = Z0 ⊆ Z1 ⊆ …`,
/// derived `G ⊇ G' ⊇ G'' ⊇ …`.
pub fn series(g: &FiniteGroup, kind: SeriesKind) -> Vec<Subgroup> {
    let all: Vec<u32> = g.elements().collect();
    let mut out: Vec<Subgroup> = Vec::new();
    match kind {
        SeriesKind::LowerCentral => {
            out.push(Subgroup::whole(g));
            loop {
                let prev = out.last().unwrap();
                let next = commutator_subgroup(g, prev.members(), &all);
                if &next == prev {
                    break;
                }
                out.push(next);
            }
        }
        SeriesKind::Derived => {
            out.push(Subgroup::whole(g));
            loop {
                let prev = out.last().unwrap();
                let next = commutator_subgroup(g, prev.members(), prev.members());
                if &next == prev {
                    break;
                }
                out.push(next);
            }
        }
        SeriesKind::UpperCentral => {
            out.push(Subgroup::trivial(g));
            loop {
                let prev = out.last().unwrap();
                // Z_{k+1} = { x : [x, y] ∈ Z_k for all y }
                let members: BTreeSet<u32> = g
                    .elements()
                    .filter(|&x| g.elements().all(|y| prev.contains(g.commutator(x, y))))
                    .collect();
                let next = Subgroup::from_closed_set(members);
                if &next == prev {
                    break;
                }
                out.push(next);
            }
        }
    }
    out
}

pub fn is_nilpotent(g: &FiniteGroup) -> bool {
    series(g, SeriesKind::LowerCentral)
        .last()
        .is_some_and(Subgroup::is_trivial)
}

/// Coset table of `g / n` plus the canonical projection. Coset labels are
/// inherited from the minimal-index representative of each coset.
pub fn quotient_group(g: &GroupRef, n: &Subgroup) -> Result<(GroupRef, Homomorphism)> {
    if !n.is_normal(g) {
        let witness = n
            .members()
            .iter()
            .find(|&&x| g.elements().any(|c| !n.contains(g.conjugate(x, c))))
            .copied()
            .unwrap_or(g.identity());
        return Err(Error::NotNormal(g.label(witness).to_string()));
    }
    let order = g.order();
    let mut coset_of: Vec<Option<u32>> = vec![None; order];
    let mut reps: Vec<u32> = Vec::new();
    for x in g.elements() {
        if coset_of[x as usize].is_some() {
            continue;
        }
        let idx = reps.len() as u32;
        reps.push(x);
        for &h in n.members() {
            coset_of[g.mul(x, h) as usize] = Some(idx);
        }
    }
    let coset_of: Vec<u32> = coset_of
        .into_iter()
        .map(|c| c.expect("cosets partition the group"))
        .collect();
    let m = reps.len();
    let labels: Vec<String> = reps.iter().map(|&r| g.label(r).to_string()).collect();
    let mut table = Vec::with_capacity(m * m);
    for &a in &reps {
        for &b in &reps {
            table.push(coset_of[g.mul(a, b) as usize]);
        }
    }
    let q = Arc::new(FiniteGroup::from_flat_table(labels, table)?);
    let proj = Homomorphism::new(g.clone(), q.clone(), coset_of)?;
    Ok((q, proj))
}

/// Direct product with projection and injection homomorphisms.
pub struct DirectProduct {
    pub group: GroupRef,
    pub injections: Vec<Homomorphism>,
    pub projections: Vec<Homomorphism>,
}

/// Nominal cap on realized product order.
const PRODUCT_ORDER_CAP: usize = 1_000_000;
/// Table memory guard: `order² * 4` bytes must stay below this.
const PRODUCT_TABLE_BYTES_CAP: usize = 1 << 31;

pub fn direct_product(factors: &[GroupRef]) -> Result<DirectProduct> {
    let mut order: usize = 1;
    for f in factors {
        order = order
            .checked_mul(f.order())
            .ok_or(Error::SizeCap {
                op: "direct_product",
                cap: PRODUCT_ORDER_CAP,
                actual: usize::MAX,
            })?;
    }
    if order > PRODUCT_ORDER_CAP || order.saturating_mul(order).saturating_mul(4) > PRODUCT_TABLE_BYTES_CAP
    {
        return Err(Error::SizeCap {
            op: "direct_product",
            cap: PRODUCT_ORDER_CAP,
            actual: order,
        });
    }
    if factors.is_empty() {
        let g = Arc::new(FiniteGroup::trivial());
        return Ok(DirectProduct {
            group: g,
            injections: Vec::new(),
            projections: Vec::new(),
        });
    }
    let k = factors.len();
    // Mixed-radix indexing, last factor fastest.
    let decode = |mut idx: usize| -> Vec<u32> {
        let mut parts = vec![0u32; k];
        for i in (0..k).rev() {
            let m = factors[i].order();
            parts[i] = (idx % m) as u32;
            idx /= m;
        }
        parts
    };
    let encode = |parts: &[u32]| -> usize {
        let mut idx = 0usize;
        for i in 0..k {
            idx = idx * factors[i].order() + parts[i] as usize;
        }
        idx
    };
    let labels: Vec<String> = (0..order)
        .map(|idx| {
            let parts = decode(idx);
            if k == 1 {
                factors[0].label(parts[0]).to_string()
            } else {
                let inner: Vec<&str> = parts
                    .iter()
                    .enumerate()
                    .map(|(i, &p)| factors[i].label(p))
                    .collect();
                format!("({})", inner.join(","))
            }
        })
        .collect();
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        let pa = decode(a);
        for b in 0..order {
            let pb = decode(b);
            let prod: Vec<u32> = (0..k).map(|i| factors[i].mul(pa[i], pb[i])).collect();
            table.push(encode(&prod) as u32);
        }
    }
    let group = Arc::new(FiniteGroup::from_flat_table(labels, table)?);
    let mut injections = Vec::with_capacity(k);
    let mut projections = Vec::with_capacity(k);
    for i in 0..k {
        let inj_images: Vec<u32> = factors[i]
            .elements()
            .map(|x| {
                let mut parts: Vec<u32> =
                    factors.iter().map(|f| f.identity()).collect();
                parts[i] = x;
                encode(&parts) as u32
            })
            .collect();
        injections.push(Homomorphism::new(
            factors[i].clone(),
            group.clone(),
            inj_images,
        )?);
        let proj_images: Vec<u32> = (0..order).map(|idx| decode(idx)[i]).collect();
        projections.push(Homomorphism::new(
            group.clone(),
            factors[i].clone(),
            proj_images,
        )?);
    }
    Ok(DirectProduct {
        group,
        injections,
        projections,
    })
}

/// A subgroup of order `p^k` where `p^k` exactly divides `|g|`, found by
/// greedy closure over elements of `p`-power order. For nilpotent groups
/// the result is the unique Sylow `p`-subgroup (this is asserted).
pub fn sylow_subgroup(g: &FiniteGroup, p: usize) -> Subgroup {
    assert!(p >= 2, "p must be at least 2");
    let mut pk = 1usize;
    let mut rest = g.order();
    while rest % p == 0 {
        rest /= p;
        pk *= p;
    }
    if pk == 1 {
        return Subgroup::trivial(g);
    }
    let p_elements: Vec<u32> = g
        .elements()
        .filter(|&x| {
            let mut o = g.element_order(x);
            while o % p == 0 {
                o /= p;
            }
            o == 1
        })
        .collect();
    let mut current = Subgroup::trivial(g);
    'grow: while current.order() < pk {
        for &x in &p_elements {
            if current.contains(x) {
                continue;
            }
            let mut gens: Vec<u32> = current.members().to_vec();
            gens.push(x);
            let bigger = subgroup_generated(g, &gens);
            if is_p_group_order(bigger.order(), p) {
                current = bigger;
                continue 'grow;
            }
        }
        // No p-element extends the current p-subgroup; the greedy closure
        // has found a maximal p-subgroup of smaller order than p^k. For the
        // groups in scope this does not occur.
        break;
    }
    assert_eq!(
        current.order(),
        pk,
        "greedy Sylow closure stalled below full order"
    );
    if is_nilpotent(g) {
        // Uniqueness in the nilpotent case: the Sylow subgroup is exactly
        // the set of all p-power-order elements.
        assert_eq!(
            current.members(),
            &p_elements[..],
            "nilpotent group has a unique Sylow p-subgroup"
        );
    }
    current
}

fn is_p_group_order(n: usize, p: usize) -> bool {
    let mut n = n;
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Every subgroup, by breadth-first closure over single-element extensions.
/// Practical for the small orders used in the directed-system suites.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut found: BTreeSet<Vec<u32>> = BTreeSet::new();
    let trivial = Subgroup::trivial(g);
    found.insert(trivial.members().to_vec());
    let mut frontier = vec![trivial];
    while let Some(h) = frontier.pop() {
        for x in g.elements() {
            if h.contains(x) {
                continue;
            }
            let mut gens = h.members().to_vec();
            gens.push(x);
            let bigger = subgroup_generated(g, &gens);
            if found.insert(bigger.members().to_vec()) {
                frontier.push(bigger);
            }
        }
    }
    found
        .into_iter()
        .map(|members| Subgroup::from_closed_set(members.into_iter().collect()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::catalog_group;
    use super::*;

    fn gref(name: &str) -> GroupRef {
        Arc::new(catalog_group(name).unwrap())
    }

    #[test]
    fn subgroup_generated_examples() {
        let d8 = catalog_group("D8").unwrap();
        let r = d8.element_by_label("r").unwrap();
        assert_eq!(subgroup_generated(&d8, &[r]).order(), 4);
        // empty generating set gives the trivial subgroup
        assert_eq!(subgroup_generated(&d8, &[]).order(), 1);
        let s3 = catalog_group("S3").unwrap();
        let a = s3.element_by_label("(12)").unwrap();
        let b = s3.element_by_label("(123)").unwrap();
        assert_eq!(subgroup_generated(&s3, &[a, b]).order(), 6);
    }

    #[test]
    fn normal_closure_examples() {
        let s3 = catalog_group("S3").unwrap();
        let rot = s3.element_by_label("(123)").unwrap();
        let refl = s3.element_by_label("(12)").unwrap();
        // <(123)> is already normal: A3
        assert_eq!(normal_closure(&s3, &[rot]).order(), 3);
        // conjugates of a transposition generate S3
        assert_eq!(normal_closure(&s3, &[refl]).order(), 6);
        // in an abelian group the normal closure is the generated subgroup
        let c6 = catalog_group("C6").unwrap();
        for x in c6.elements() {
            assert_eq!(
                normal_closure(&c6, &[x]).members(),
                subgroup_generated(&c6, &[x]).members()
            );
        }
    }

    #[test]
    fn series_of_d8() {
        let d8 = catalog_group("D8").unwrap();
        let lower = series(&d8, SeriesKind::LowerCentral);
        assert_eq!(
            lower.iter().map(Subgroup::order).collect::<Vec<_>>(),
            vec![8, 2, 1]
        );
        let upper = series(&d8, SeriesKind::UpperCentral);
        assert_eq!(
            upper.iter().map(Subgroup::order).collect::<Vec<_>>(),
            vec![1, 2, 8]
        );
        let derived = series(&d8, SeriesKind::Derived);
        assert_eq!(
            derived.iter().map(Subgroup::order).collect::<Vec<_>>(),
            vec![8, 2, 1]
        );
        // γ2 equals the derived subgroup
        assert_eq!(lower[1], derived_subgroup(&d8));
    }

    #[test]
    fn abelian_lower_central_stops_immediately() {
        let c6 = catalog_group("C6").unwrap();
        let lower = series(&c6, SeriesKind::LowerCentral);
        assert_eq!(
            lower.iter().map(Subgroup::order).collect::<Vec<_>>(),
            vec![6, 1]
        );
    }

    #[test]
    fn quotient_d8_by_center() {
        let d8 = gref("D8");
        let z = center(&d8);
        assert_eq!(z.order(), 2);
        let (q, proj) = quotient_group(&d8, &z).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.exponent(), 2); // C2 x C2
        assert_eq!(proj.kernel().members(), z.members());
    }

    #[test]
    fn quotient_by_trivial_is_identity_relabeling() {
        let s3 = gref("S3");
        let (q, proj) = quotient_group(&s3, &Subgroup::trivial(&s3)).unwrap();
        assert_eq!(q.order(), 6);
        assert!(proj.is_bijective());
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let s3 = gref("S3");
        let refl = s3.element_by_label("(12)").unwrap();
        let h = subgroup_generated(&s3, &[refl]);
        assert!(matches!(
            quotient_group(&s3, &h),
            Err(Error::NotNormal(_))
        ));
    }

    #[test]
    fn quotient_q8_by_center() {
        let q8 = gref("Q8");
        let z = center(&q8);
        assert_eq!(z.order(), 2);
        let (q, _) = quotient_group(&q8, &z).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.exponent(), 2);
    }

    #[test]
    fn sylow_examples() {
        let c6 = catalog_group("C6").unwrap();
        assert_eq!(sylow_subgroup(&c6, 2).order(), 2);
        let s3 = catalog_group("S3").unwrap();
        assert_eq!(sylow_subgroup(&s3, 3).order(), 3);
        let g = catalog_group("C2xC2xC3xC3").unwrap();
        assert_eq!(sylow_subgroup(&g, 3).order(), 9);
        // p not dividing the order: trivial
        assert_eq!(sylow_subgroup(&s3, 5).order(), 1);
    }

    #[test]
    fn direct_product_examples() {
        let p = direct_product(&[gref("C2"), gref("C2")]).unwrap();
        assert_eq!(p.group.order(), 4);
        assert_eq!(p.group.exponent(), 2);
        let p = direct_product(&[gref("D8"), gref("He3")]).unwrap();
        assert_eq!(p.group.order(), 216);
        let p = direct_product(&[]).unwrap();
        assert_eq!(p.group.order(), 1);
    }

    #[test]
    fn projections_and_injections_commute() {
        let p = direct_product(&[gref("C2"), gref("C3")]).unwrap();
        for i in 0..2 {
            let round = p.injections[i].compose(&p.projections[i]).unwrap();
            for x in p.injections[i].source().elements() {
                assert_eq!(round.apply(x), x);
            }
        }
    }

    #[test]
    fn all_subgroups_of_small_groups() {
        let c6 = catalog_group("C6").unwrap();
        assert_eq!(all_subgroups(&c6).len(), 4); // 1, C2, C3, C6
        let s3 = catalog_group("S3").unwrap();
        assert_eq!(all_subgroups(&s3).len(), 6); // 1, 3xC2, C3, S3
        let v4 = catalog_group("C2xC2").unwrap();
        assert_eq!(all_subgroups(&v4).len(), 5);
    }
}
