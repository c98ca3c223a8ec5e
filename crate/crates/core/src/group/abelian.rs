//! Invariant factors and canonical bases of finite abelian groups.

use super::{subgroup_generated, FiniteGroup, Subgroup};
use crate::error::{Error, Result};
use crate::lattice::{cokernel, FgAbelianGroup, Int, IntMatrix};
use std::collections::HashMap;

/// A basis realizing the invariant-factor decomposition: elements `b_i`
/// of order `d_i` with `G = <b_1> x ... x <b_k>` and `d_1 | d_2 | ... | d_k`.
pub struct AbelianBasis {
    pub generators: Vec<u32>,
    pub orders: Vec<Int>,
    /// Exponent coordinates of every element with respect to `generators`.
    coords: Vec<Vec<i64>>,
}

impl AbelianBasis {
    /// Exponents of `x` in the basis (each reduced modulo the order).
    pub fn coords_of(&self, x: u32) -> &[i64] {
        &self.coords[x as usize]
    }
}

/// Computes a canonical basis of an abelian group.
pub fn abelian_basis(g: &FiniteGroup) -> Result<AbelianBasis> {
    if let Some((a, b)) = g.non_commuting_pair() {
        return Err(Error::NotAbelian(
            g.label(a).to_string(),
            g.label(b).to_string(),
        ));
    }
    // Greedy generating sequence: highest order first, lowest index on ties.
    let mut gens: Vec<u32> = Vec::new();
    let mut closure = subgroup_generated(g, &[]);
    while closure.order() < g.order() {
        let next = g
            .elements()
            .filter(|&x| !closure.contains(x))
            .max_by_key(|&x| (g.element_order(x), std::cmp::Reverse(x)))
            .expect("closure is proper");
        gens.push(next);
        closure = subgroup_generated(g, &gens);
    }
    let k = gens.len();
    if k == 0 {
        return Ok(AbelianBasis {
            generators: Vec::new(),
            orders: Vec::new(),
            coords: vec![Vec::new(); g.order()],
        });
    }
    // Exponent coordinates of each element of the growing subgroup chain,
    // and one relation per generator: m_i e_i = (coords of g_i^{m_i} in
    // earlier generators).
    let mut reps: HashMap<u32, Vec<i64>> = HashMap::new();
    reps.insert(g.identity(), vec![0; k]);
    let mut relations: Vec<Vec<i64>> = Vec::new();
    for (i, &gi) in gens.iter().enumerate() {
        // minimal m >= 1 with gi^m in the previous subgroup
        let mut m = 1i64;
        let mut p = gi;
        while !reps.contains_key(&p) {
            p = g.mul(p, gi);
            m += 1;
        }
        let mut rel = vec![0i64; k];
        rel[i] = m;
        for (j, c) in reps[&p].iter().enumerate() {
            rel[j] -= c;
        }
        relations.push(rel);
        // extend representatives: h * gi^t for 1 <= t < m
        let old: Vec<(u32, Vec<i64>)> = reps.iter().map(|(x, c)| (*x, c.clone())).collect();
        for (h, coords) in old {
            let mut x = h;
            for t in 1..m {
                x = g.mul(x, gi);
                let mut c = coords.clone();
                c[i] = t;
                reps.insert(x, c);
            }
        }
    }
    debug_assert_eq!(reps.len(), g.order());
    // Relations as columns; the cokernel is the group itself.
    let rel_matrix = IntMatrix::from_fn(k, relations.len(), |i, j| Int::from(relations[j][i]));
    let coker = cokernel(&rel_matrix);
    assert_eq!(coker.group().free_rank(), 0, "finite group has no free rank");
    assert_eq!(
        coker.group().torsion_order(),
        Int::from(g.order()),
        "relation lattice misses elements"
    );
    // Basis elements: evaluate each cokernel generator vector on the gens.
    let eval = |vector: &[Int]| -> u32 {
        let mut acc = g.identity();
        for (i, c) in vector.iter().enumerate() {
            let e = c.rem_euclid(&Int::from(g.element_order(gens[i]))).to_i64().unwrap();
            acc = g.mul(acc, g.pow(gens[i], e));
        }
        acc
    };
    let generators: Vec<u32> = coker.torsion_gens().iter().map(|v| eval(v)).collect();
    let orders: Vec<Int> = coker.group().invariant_factors().to_vec();
    for (b, d) in generators.iter().zip(&orders) {
        assert_eq!(
            Int::from(g.element_order(*b)),
            *d,
            "basis element order mismatch"
        );
    }
    // Coordinates of every element in the new basis.
    let mut coords = vec![Vec::new(); g.order()];
    for (x, c) in &reps {
        let vec_int: Vec<Int> = c.iter().map(|&v| Int::from(v)).collect();
        let cc = coker.coords(&vec_int);
        coords[*x as usize] = cc
            .torsion
            .iter()
            .map(|v| v.to_i64().expect("coordinates are small"))
            .collect();
    }
    Ok(AbelianBasis {
        generators,
        orders,
        coords,
    })
}

/// Invariant factors of an abelian group.
pub fn abelian_invariants(g: &FiniteGroup) -> Result<FgAbelianGroup> {
    let basis = abelian_basis(g)?;
    FgAbelianGroup::from_invariant_factors(basis.orders, 0)
}

/// Invariant factors of an abelian subgroup of `g`.
pub fn abelian_invariants_of_subgroup(g: &FiniteGroup, h: &Subgroup) -> Result<FgAbelianGroup> {
    if let Some((&a, &b)) = h
        .members()
        .iter()
        .find_map(|a| {
            h.members()
                .iter()
                .find(|b| g.mul(*a, **b) != g.mul(**b, *a))
                .map(|b| (a, b))
        })
    {
        return Err(Error::NotAbelian(
            g.label(a).to_string(),
            g.label(b).to_string(),
        ));
    }
    abelian_invariants(&h.as_group(g))
}

#[cfg(test)]
mod tests {
    use super::super::{catalog_group, derived_subgroup};
    use super::*;

    fn factors(name: &str) -> Vec<i64> {
        abelian_invariants(&catalog_group(name).unwrap())
            .unwrap()
            .invariant_factors()
            .iter()
            .map(|d| d.to_i64().unwrap())
            .collect()
    }

    #[test]
    fn invariants_of_cyclic_and_products() {
        assert_eq!(factors("C6"), vec![6]);
        assert_eq!(factors("C2xC4"), vec![2, 4]);
        assert_eq!(factors("C2xC3"), vec![6]);
        assert_eq!(factors("C2xC2xC2"), vec![2, 2, 2]);
        assert_eq!(factors("C1"), Vec::<i64>::new());
        assert_eq!(factors("C6xC6"), vec![6, 6]);
    }

    #[test]
    fn invariants_of_derived_subgroup_of_d8() {
        let d8 = catalog_group("D8").unwrap();
        let der = derived_subgroup(&d8);
        let inv = abelian_invariants_of_subgroup(&d8, &der).unwrap();
        assert_eq!(inv.invariant_factors(), &[Int::from(2)]);
    }

    #[test]
    fn basis_decomposes_the_group() {
        let g = catalog_group("C2xC6").unwrap();
        let basis = abelian_basis(&g).unwrap();
        // product of orders = |G| and coordinates are unique
        let prod: i64 = basis.orders.iter().map(|d| d.to_i64().unwrap()).product();
        assert_eq!(prod, 12);
        let mut seen = std::collections::HashSet::new();
        for x in g.elements() {
            assert!(seen.insert(basis.coords_of(x).to_vec()));
        }
    }

    #[test]
    fn rejects_nonabelian_input() {
        let s3 = catalog_group("S3").unwrap();
        assert!(matches!(abelian_invariants(&s3), Err(Error::NotAbelian(..))));
    }
}
