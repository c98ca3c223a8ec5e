//! Finitely generated abelian groups in invariant-factor form.

use super::int::Int;
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

/// `Z_{d1} x ... x Z_{dk} x Z^free_rank` with `d1 | d2 | ... | dk`, all `di > 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FgAbelianGroup {
    invariant_factors: Vec<Int>,
    free_rank: usize,
}

impl FgAbelianGroup {
    pub fn trivial() -> FgAbelianGroup {
        FgAbelianGroup {
            invariant_factors: Vec::new(),
            free_rank: 0,
        }
    }

    pub fn free(rank: usize) -> FgAbelianGroup {
        FgAbelianGroup {
            invariant_factors: Vec::new(),
            free_rank: rank,
        }
    }

    pub fn from_invariant_factors(factors: Vec<Int>, free_rank: usize) -> Result<FgAbelianGroup> {
        for w in factors.windows(2) {
            if !w[0].divides(&w[1]) {
                return Err(Error::Internal(format!(
                    "invariant factors do not form a divisibility chain: {factors:?}"
                )));
            }
        }
        if factors.iter().any(|d| d <= &Int::ONE) {
            return Err(Error::Internal(format!(
                "invariant factors must exceed 1: {factors:?}"
            )));
        }
        Ok(FgAbelianGroup {
            invariant_factors: factors,
            free_rank,
        })
    }

    /// Canonical form of an arbitrary direct sum of cyclic groups. Orders
    /// equal to 1 are dropped; 0 stands for an infinite cyclic factor.
    pub fn from_cyclic_orders(orders: &[Int]) -> FgAbelianGroup {
        let mut free_rank = 0;
        // prime -> exponents, one entry per cyclic factor
        let mut primary: BTreeMap<Int, Vec<u32>> = BTreeMap::new();
        for ord in orders {
            if ord.is_zero() {
                free_rank += 1;
                continue;
            }
            for (p, e) in factorize(&ord.abs()) {
                primary.entry(p).or_default().push(e);
            }
        }
        let mut layers: Vec<Int> = Vec::new();
        for (p, mut exps) in primary {
            exps.sort_unstable_by(|a, b| b.cmp(a));
            for (slot, e) in exps.into_iter().enumerate() {
                let mut q = Int::ONE;
                for _ in 0..e {
                    q = &q * &p;
                }
                if slot >= layers.len() {
                    layers.push(Int::ONE);
                }
                layers[slot] = &layers[slot] * &q;
            }
        }
        // layers[0] is the largest invariant factor; reverse for ascending chain.
        layers.retain(|d| !d.is_one());
        layers.reverse();
        FgAbelianGroup {
            invariant_factors: layers,
            free_rank,
        }
    }

    pub fn invariant_factors(&self) -> &[Int] {
        &self.invariant_factors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty() && self.free_rank == 0
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Torsion order (product of invariant factors).
    pub fn torsion_order(&self) -> Int {
        self.invariant_factors
            .iter()
            .fold(Int::ONE, |acc, d| &acc * d)
    }

    pub fn exponent(&self) -> Int {
        self.invariant_factors
            .last()
            .cloned()
            .unwrap_or(Int::ONE)
    }

    pub fn direct_sum(&self, other: &FgAbelianGroup) -> FgAbelianGroup {
        let mut orders: Vec<Int> = self.invariant_factors.clone();
        orders.extend(other.invariant_factors.iter().cloned());
        let mut g = FgAbelianGroup::from_cyclic_orders(&orders);
        g.free_rank = self.free_rank + other.free_rank;
        g
    }

    /// Removes a known direct factor: if `self = known ⊕ rest` then returns
    /// `rest`. Finite abelian groups cancel, so `rest` is well defined.
    /// Returns `None` if `known` is not a direct factor.
    pub fn divide_direct_factor(&self, known: &FgAbelianGroup) -> Option<FgAbelianGroup> {
        if known.free_rank > self.free_rank {
            return None;
        }
        let mut mine = prime_power_multiset(&self.invariant_factors);
        for (pp, count) in prime_power_multiset(&known.invariant_factors) {
            let have = mine.get_mut(&pp)?;
            if *have < count {
                return None;
            }
            *have -= count;
        }
        let orders: Vec<Int> = mine
            .into_iter()
            .flat_map(|((p, e), count)| {
                let mut q = Int::ONE;
                for _ in 0..e {
                    q = &q * &p;
                }
                std::iter::repeat(q).take(count)
            })
            .collect();
        let mut g = FgAbelianGroup::from_cyclic_orders(&orders);
        g.free_rank = self.free_rank - known.free_rank;
        Some(g)
    }
}

fn prime_power_multiset(factors: &[Int]) -> BTreeMap<(Int, u32), usize> {
    let mut out = BTreeMap::new();
    for d in factors {
        for (p, e) in factorize(d) {
            *out.entry((p, e)).or_insert(0) += 1;
        }
    }
    out
}

/// Trial-division factorization; all orders in scope are small.
pub(crate) fn factorize(n: &Int) -> Vec<(Int, u32)> {
    let mut n = n
        .to_i64()
        .expect("factorization input exceeds machine range")
        .abs();
    assert!(n > 0, "factorize expects a positive integer");
    let mut out = Vec::new();
    let mut p = 2i64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((Int::from(p), e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((Int::from(n), 1));
    }
    out
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "1");
        }
        let mut parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|d| format!("Z{d}"))
            .collect();
        for _ in 0..self.free_rank {
            parts.push("Z".to_string());
        }
        write!(f, "{}", parts.join(" x "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn canonical_form_from_cyclic_orders() {
        // Z2 x Z3 = Z6
        let g = FgAbelianGroup::from_cyclic_orders(&ints(&[2, 3]));
        assert_eq!(g.invariant_factors(), &ints(&[6])[..]);
        // Z2 x Z4 stays Z2 x Z4
        let g = FgAbelianGroup::from_cyclic_orders(&ints(&[4, 2]));
        assert_eq!(g.invariant_factors(), &ints(&[2, 4])[..]);
        // Z6 x Z4 = Z2 x Z12
        let g = FgAbelianGroup::from_cyclic_orders(&ints(&[6, 4]));
        assert_eq!(g.invariant_factors(), &ints(&[2, 12])[..]);
    }

    #[test]
    fn direct_factor_division() {
        let h2 = FgAbelianGroup::from_cyclic_orders(&ints(&[2, 2, 2]));
        let ext = FgAbelianGroup::from_cyclic_orders(&ints(&[2, 2]));
        let m = h2.divide_direct_factor(&ext).unwrap();
        assert_eq!(m.invariant_factors(), &ints(&[2])[..]);
        // not a factor
        let bad = FgAbelianGroup::from_cyclic_orders(&ints(&[4]));
        assert!(h2.divide_direct_factor(&bad).is_none());
    }

    #[test]
    fn torsion_order_and_exponent() {
        let g = FgAbelianGroup::from_cyclic_orders(&ints(&[2, 4]));
        assert_eq!(g.torsion_order(), Int::from(8));
        assert_eq!(g.exponent(), Int::from(4));
    }
}
