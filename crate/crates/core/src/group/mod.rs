//! Finite groups as validated Cayley tables.
//!
//! Every group in the crate is concrete: an ordered list of element labels
//! and a full multiplication table over element indices. Construction
//! validates the Latin-square property, the identity, two-sided inverses
//! and associativity (exhaustively up to order 512, on 10,000
//! deterministically seeded random triples above that).

mod abelian;
mod catalog;
mod cayley;
mod iso;
mod ops;
mod perm;

pub use abelian::{abelian_basis, abelian_invariants, abelian_invariants_of_subgroup};
pub use catalog::{catalog_group, catalog_names, catalog_names_up_to, make_group, GroupSource};
pub use cayley::{group_from_cayley_toml, parse_cayley_toml};
pub use iso::{is_isomorphic, IsoResult};
pub use ops::{
    all_subgroups, center, commutator_subgroup, derived_subgroup, direct_product, is_nilpotent,
    normal_closure, quotient_group, series, subgroup_generated, sylow_subgroup, DirectProduct,
    SeriesKind,
};
pub use perm::{group_from_permutations, parse_cycles, Permutation};

use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

pub type GroupRef = Arc<FiniteGroup>;

/// Order up to which associativity is verified on every triple.
const FULL_ASSOC_CAP: usize = 512;
/// Random triples checked above the exhaustive cap.
const SPOT_CHECK_TRIPLES: usize = 10_000;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    /// Row-major: `table[a * n + b]` is the index of `a · b`.
    table: Vec<u32>,
    identity: u32,
    inverses: Vec<u32>,
}

impl FiniteGroup {
    /// Validates and wraps a raw multiplication table.
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        let n = labels.len();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidCayleyData(format!(
                "table must be {n}x{n} to match {n} elements"
            )));
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in &table {
            for &v in row {
                if v >= n {
                    return Err(Error::InvalidCayleyData(format!(
                        "index {v} out of range (order {n})"
                    )));
                }
                flat.push(v as u32);
            }
        }
        Self::from_flat_table(labels, flat)
    }

    pub(crate) fn from_flat_table(labels: Vec<String>, table: Vec<u32>) -> Result<FiniteGroup> {
        let n = labels.len();
        assert_eq!(table.len(), n * n);
        if n == 0 {
            return Err(Error::InvalidCayleyData("empty group".to_string()));
        }
        let at = |a: usize, b: usize| table[a * n + b] as usize;
        // Latin square: every row and column is a permutation.
        for i in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for j in 0..n {
                let r = at(i, j);
                let c = at(j, i);
                if seen_row[r] {
                    return Err(Error::NotLatinSquare(format!(
                        "row {} repeats {}",
                        labels[i], labels[r]
                    )));
                }
                if seen_col[c] {
                    return Err(Error::NotLatinSquare(format!(
                        "column {} repeats {}",
                        labels[i], labels[c]
                    )));
                }
                seen_row[r] = true;
                seen_col[c] = true;
            }
        }
        // Two-sided identity.
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or(Error::NoIdentity)? as u32;
        // Two-sided inverses.
        let mut inverses = vec![0u32; n];
        for x in 0..n {
            let inv = (0..n)
                .find(|&y| at(x, y) == identity as usize && at(y, x) == identity as usize)
                .ok_or_else(|| Error::NoInverse(labels[x].clone()))?;
            inverses[x] = inv as u32;
        }
        // Associativity.
        if n <= FULL_ASSOC_CAP {
            for a in 0..n {
                for b in 0..n {
                    let ab = at(a, b);
                    for c in 0..n {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(Error::NotAssociative(
                                labels[a].clone(),
                                labels[b].clone(),
                                labels[c].clone(),
                            ));
                        }
                    }
                }
            }
        } else {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(n as u64);
            for _ in 0..SPOT_CHECK_TRIPLES {
                let a = rng.gen_range(0..n);
                let b = rng.gen_range(0..n);
                let c = rng.gen_range(0..n);
                if at(at(a, b), c) != at(a, at(b, c)) {
                    return Err(Error::NotAssociative(
                        labels[a].clone(),
                        labels[b].clone(),
                        labels[c].clone(),
                    ));
                }
            }
        }
        Ok(FiniteGroup {
            labels,
            table,
            identity,
            inverses,
        })
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup {
            labels: vec!["e".to_string()],
            table: vec![0],
            identity: 0,
            inverses: vec![0],
        }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.order() + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    pub fn label(&self, i: u32) -> &str {
        &self.labels[i as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn element_by_label(&self, label: &str) -> Option<u32> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| i as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> + '_ {
        0..self.order() as u32
    }

    pub fn conjugate(&self, g: u32, by: u32) -> u32 {
        self.mul(self.mul(self.inv(by), g), by)
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`
    pub fn commutator(&self, a: u32, b: u32) -> u32 {
        self.mul(self.mul(self.mul(self.inv(a), self.inv(b)), a), b)
    }

    pub fn pow(&self, a: u32, k: i64) -> u32 {
        let mut base = if k < 0 { self.inv(a) } else { a };
        let mut k = k.unsigned_abs();
        let mut acc = self.identity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: u32) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|x| self.element_order(x))
            .fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        self.non_commuting_pair().is_none()
    }

    /// First non-commuting pair, for error reporting.
    pub(crate) fn non_commuting_pair(&self) -> Option<(u32, u32)> {
        let n = self.order() as u32;
        (0..n).find_map(|a| {
            (a + 1..n)
                .find(|&b| self.mul(a, b) != self.mul(b, a))
                .map(|b| (a, b))
        })
    }

    /// Histogram of element orders, an isomorphism invariant.
    pub fn order_histogram(&self) -> Vec<(usize, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for x in self.elements() {
            *counts.entry(self.element_order(x)).or_insert(0) += 1;
        }
        counts.into_iter().collect()
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order {})", self.order())
    }
}

/// Subgroup of a specific parent group, stored as a sorted member list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subgroup {
    members: Vec<u32>,
}

impl Subgroup {
    /// Validates closure under products and inverses and membership of the
    /// identity.
    pub fn new(g: &FiniteGroup, members: BTreeSet<u32>) -> Result<Subgroup> {
        if !members.contains(&g.identity()) {
            return Err(Error::InvalidCayleyData(
                "subgroup must contain the identity".to_string(),
            ));
        }
        for &a in &members {
            if !members.contains(&g.inv(a)) {
                return Err(Error::InvalidCayleyData(format!(
                    "subgroup not closed under inverse of {}",
                    g.label(a)
                )));
            }
            for &b in &members {
                if !members.contains(&g.mul(a, b)) {
                    return Err(Error::InvalidCayleyData(format!(
                        "subgroup not closed under {} * {}",
                        g.label(a),
                        g.label(b)
                    )));
                }
            }
        }
        Ok(Subgroup {
            members: members.into_iter().collect(),
        })
    }

    pub(crate) fn from_closed_set(members: BTreeSet<u32>) -> Subgroup {
        Subgroup {
            members: members.into_iter().collect(),
        }
    }

    pub fn trivial(g: &FiniteGroup) -> Subgroup {
        Subgroup {
            members: vec![g.identity()],
        }
    }

    pub fn whole(g: &FiniteGroup) -> Subgroup {
        Subgroup {
            members: g.elements().collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn contains(&self, x: u32) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self, g: &FiniteGroup) -> bool {
        self.members.len() == g.order()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            members: self
                .members
                .iter()
                .copied()
                .filter(|&x| other.contains(x))
                .collect(),
        }
    }

    pub fn is_normal(&self, g: &FiniteGroup) -> bool {
        self.members
            .iter()
            .all(|&x| g.elements().all(|c| self.contains(g.conjugate(x, c))))
    }

    pub fn is_central(&self, g: &FiniteGroup) -> bool {
        self.members
            .iter()
            .all(|&x| g.elements().all(|y| g.mul(x, y) == g.mul(y, x)))
    }

    pub fn is_abelian(&self, g: &FiniteGroup) -> bool {
        self.members
            .iter()
            .all(|&a| self.members.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    /// Re-indexes the subgroup as a standalone group, preserving labels.
    pub fn as_group(&self, g: &FiniteGroup) -> FiniteGroup {
        let index_of = |x: u32| self.members.binary_search(&x).unwrap() as u32;
        let n = self.members.len();
        let labels: Vec<String> = self
            .members
            .iter()
            .map(|&x| g.label(x).to_string())
            .collect();
        let mut table = Vec::with_capacity(n * n);
        for &a in &self.members {
            for &b in &self.members {
                table.push(index_of(g.mul(a, b)));
            }
        }
        FiniteGroup::from_flat_table(labels, table).expect("subgroup table is a valid group")
    }
}

/// Verified homomorphism between two concrete groups.
#[derive(Clone)]
pub struct Homomorphism {
    source: GroupRef,
    target: GroupRef,
    images: Vec<u32>,
}

impl Homomorphism {
    /// Full pairwise verification of `images(x·y) = images(x)·images(y)`.
    pub fn new(source: GroupRef, target: GroupRef, images: Vec<u32>) -> Result<Homomorphism> {
        if images.len() != source.order() {
            return Err(Error::NotAHomomorphism(
                "image list length differs from source order".to_string(),
            ));
        }
        if images.iter().any(|&i| i as usize >= target.order()) {
            return Err(Error::NotAHomomorphism(
                "image index out of range".to_string(),
            ));
        }
        let n = source.order() as u32;
        for x in 0..n {
            for y in 0..n {
                let lhs = images[source.mul(x, y) as usize];
                let rhs = target.mul(images[x as usize], images[y as usize]);
                if lhs != rhs {
                    return Err(Error::NotAHomomorphism(format!(
                        "fails at ({}, {})",
                        source.label(x),
                        source.label(y)
                    )));
                }
            }
        }
        Ok(Homomorphism {
            source,
            target,
            images,
        })
    }

    pub fn identity(g: &GroupRef) -> Homomorphism {
        Homomorphism {
            source: g.clone(),
            target: g.clone(),
            images: g.elements().collect(),
        }
    }

    /// Constant map to the identity.
    pub fn zero(source: GroupRef, target: GroupRef) -> Homomorphism {
        let e = target.identity();
        let images = vec![e; source.order()];
        Homomorphism {
            source,
            target,
            images,
        }
    }

    /// Extends generator images multiplicatively and verifies the result.
    pub fn from_generator_images(
        source: GroupRef,
        target: GroupRef,
        gen_images: &[(u32, u32)],
    ) -> Result<Homomorphism> {
        let n = source.order();
        let mut images: Vec<Option<u32>> = vec![None; n];
        images[source.identity() as usize] = Some(target.identity());
        let mut frontier: Vec<u32> = vec![source.identity()];
        while let Some(x) = frontier.pop() {
            let ix = images[x as usize].unwrap();
            for &(g, ig) in gen_images {
                let y = source.mul(x, g);
                let iy = target.mul(ix, ig);
                match images[y as usize] {
                    None => {
                        images[y as usize] = Some(iy);
                        frontier.push(y);
                    }
                    Some(existing) if existing != iy => {
                        return Err(Error::NotAHomomorphism(format!(
                            "inconsistent images at {}",
                            source.label(y)
                        )));
                    }
                    _ => {}
                }
            }
        }
        let images: Option<Vec<u32>> = images.into_iter().collect();
        let images = images.ok_or_else(|| {
            Error::NotAHomomorphism("generators do not generate the source".to_string())
        })?;
        Homomorphism::new(source, target, images)
    }

    pub fn source(&self) -> &GroupRef {
        &self.source
    }

    pub fn target(&self) -> &GroupRef {
        &self.target
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `self` then `other` (maps compose left to right).
    pub fn compose(&self, other: &Homomorphism) -> Result<Homomorphism> {
        if !same_group(&self.target, &other.source) {
            return Err(Error::NotAHomomorphism(
                "composition middle groups differ".to_string(),
            ));
        }
        Ok(Homomorphism {
            source: self.source.clone(),
            target: other.target.clone(),
            images: self.images.iter().map(|&x| other.apply(x)).collect(),
        })
    }

    pub fn kernel(&self) -> Subgroup {
        let e = self.target.identity();
        Subgroup {
            members: self
                .source
                .elements()
                .filter(|&x| self.apply(x) == e)
                .collect(),
        }
    }

    pub fn image(&self) -> Subgroup {
        let set: BTreeSet<u32> = self.images.iter().copied().collect();
        Subgroup {
            members: set.into_iter().collect(),
        }
    }

    pub fn is_injective(&self) -> bool {
        let set: BTreeSet<u32> = self.images.iter().copied().collect();
        set.len() == self.source.order()
    }

    pub fn is_surjective(&self) -> bool {
        let set: BTreeSet<u32> = self.images.iter().copied().collect();
        set.len() == self.target.order()
    }

    pub fn is_bijective(&self) -> bool {
        self.source.order() == self.target.order() && self.is_injective()
    }

    pub fn inverse(&self) -> Result<Homomorphism> {
        if !self.is_bijective() {
            return Err(Error::NotAHomomorphism(
                "cannot invert a non-bijective map".to_string(),
            ));
        }
        let mut images = vec![0u32; self.target.order()];
        for x in self.source.elements() {
            images[self.apply(x) as usize] = x;
        }
        Ok(Homomorphism {
            source: self.target.clone(),
            target: self.source.clone(),
            images,
        })
    }
}

impl fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Homomorphism(order {} -> order {})",
            self.source.order(),
            self.target.order()
        )
    }
}

/// Structural equality, with a pointer shortcut for shared references.
pub fn same_group(a: &GroupRef, b: &GroupRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_latin_table() {
        let labels = vec!["e".into(), "a".into()];
        let err = FiniteGroup::from_table(labels, vec![vec![0, 0], vec![1, 1]]);
        assert!(matches!(err, Err(Error::NotLatinSquare(_))));
    }

    #[test]
    fn rejects_non_associative_latin_square() {
        // Start from C5 and swap an intercalate away from the identity
        // row/column; the result stays Latin but loses associativity.
        let n = 5usize;
        let mut t: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        // Intercalate: rows 1 and 4 at columns 2 and 4 hold {3, 0} and {1, 3}.
        // Find a genuine intercalate instead: cells (i1,j1)=(i2,j2) swapped.
        // Rows 1,4, columns 2,4: t[1][2]=3, t[1][4]=0, t[4][2]=1, t[4][4]=3.
        // Not an intercalate. Use rows 1,3 columns 0,2: t[1][0]=1, t[1][2]=3,
        // t[3][0]=3, t[3][2]=0. Not one either. Brute-force search one.
        let mut done = false;
        'outer: for r1 in 1..n {
            for r2 in r1 + 1..n {
                for c1 in 1..n {
                    for c2 in c1 + 1..n {
                        if t[r1][c1] == t[r2][c2] && t[r1][c2] == t[r2][c1] {
                            t[r1].swap(c1, c2);
                            t[r2].swap(c1, c2);
                            done = true;
                            break 'outer;
                        }
                    }
                }
            }
        }
        assert!(done, "no intercalate found");
        let labels: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
        let r = FiniteGroup::from_table(labels, t);
        assert!(
            matches!(
                r,
                Err(Error::NotAssociative(..))
                    | Err(Error::NotLatinSquare(_))
                    | Err(Error::NoIdentity)
                    | Err(Error::NoInverse(_))
            ),
            "{r:?}"
        );
    }

    #[test]
    fn element_orders_in_c6() {
        let g = catalog_group("C6").unwrap();
        let orders: Vec<usize> = g.elements().map(|x| g.element_order(x)).collect();
        assert_eq!(orders.iter().max(), Some(&6));
        assert_eq!(g.exponent(), 6);
    }

    #[test]
    fn hom_from_generator_images_validates() {
        let c4 = GroupRef::new(catalog_group("C4").unwrap());
        let c2 = GroupRef::new(catalog_group("C2").unwrap());
        let gen = c4.element_by_label("a").unwrap();
        let b = c2.element_by_label("a").unwrap();
        let h = Homomorphism::from_generator_images(c4.clone(), c2.clone(), &[(gen, b)]).unwrap();
        assert!(h.is_surjective());
        assert_eq!(h.kernel().order(), 2);
        // a -> generator of C3 is not a homomorphism
        let c3 = GroupRef::new(catalog_group("C3").unwrap());
        let g3 = c3.element_by_label("a").unwrap();
        assert!(Homomorphism::from_generator_images(c4, c3, &[(gen, g3)]).is_err());
    }
}
