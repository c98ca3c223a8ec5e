//! Streaming column echelon over the integers.
//!
//! Bar-resolution boundary matrices have millions of entries but only a
//! handful of nonzeros per column, so they are never materialised densely.
//! Columns are folded one at a time into an evolving echelon basis of the
//! lattice they span; only column operations (unimodular mixes of two
//! columns) are used, so the spanned lattice is preserved exactly.
//!
//! With a modulus `n` the echelon represents `span + n·Z^amb`: entries are
//! reduced mod `n`, which is sound because the reduction subtracts
//! multiples of `n·e_i` that the represented lattice already contains.

use super::int::Int;

/// Sparse column: `(row, value)` pairs sorted by row, values nonzero.
pub(crate) type SparseVec = Vec<(usize, Int)>;

pub(crate) struct LatticeEchelon {
    ambient: usize,
    modulus: Option<Int>,
    /// `cols[r]` holds the column whose topmost nonzero sits at row `r`.
    cols: Vec<Option<SparseVec>>,
}

fn reduce_mod(v: &mut SparseVec, m: &Int) {
    v.retain_mut(|(_, x)| {
        *x = x.rem_euclid(m);
        !x.is_zero()
    });
}

/// `a + q*b` for sparse columns sorted by row.
fn add_scaled(a: &SparseVec, b: &SparseVec, q: &Int) -> SparseVec {
    if q.is_zero() {
        return a.clone();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                let v = q * &b[j].1;
                if !v.is_zero() {
                    out.push((b[j].0, v));
                }
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let v = &a[i].1 + &(q * &b[j].1);
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for (r, v) in &b[j..] {
        let v = q * v;
        if !v.is_zero() {
            out.push((*r, v));
        }
    }
    out
}

impl LatticeEchelon {
    pub fn new(ambient: usize, modulus: Option<Int>) -> LatticeEchelon {
        let mut e = LatticeEchelon {
            ambient,
            modulus: modulus.clone(),
            cols: vec![None; ambient],
        };
        if let Some(n) = modulus {
            // Seed with n·I so the represented lattice is span + n·Z^amb.
            for r in 0..ambient {
                e.cols[r] = Some(vec![(r, n.clone())]);
            }
        }
        e
    }

    pub fn insert(&mut self, mut col: SparseVec) {
        col.retain(|(_, v)| !v.is_zero());
        col.sort_by_key(|(r, _)| *r);
        if let Some(m) = &self.modulus {
            reduce_mod(&mut col, m);
        }
        loop {
            let Some((r, lead)) = col.first().map(|(r, v)| (*r, v.clone())) else {
                return;
            };
            match self.cols[r].take() {
                None => {
                    if lead.is_negative() {
                        for (_, v) in col.iter_mut() {
                            *v = -&*v;
                        }
                    }
                    self.cols[r] = Some(col);
                    return;
                }
                Some(pivot) => {
                    let p = pivot[0].1.clone();
                    if p.divides(&lead) {
                        let q = -lead.div_exact(&p);
                        col = add_scaled(&col, &pivot, &q);
                        if let Some(m) = &self.modulus {
                            reduce_mod(&mut col, m);
                        }
                        self.cols[r] = Some(pivot);
                    } else {
                        // Unimodular 2-column mix bringing gcd(p, lead) to
                        // the pivot slot: det [s t; -lead/g p/g] = 1.
                        let (g, s, t) = p.extended_gcd(&lead);
                        let mut new_pivot = add_scaled(
                            &pivot
                                .iter()
                                .map(|(r, v)| (*r, &s * v))
                                .filter(|(_, v)| !v.is_zero())
                                .collect(),
                            &col,
                            &t,
                        );
                        let mut new_col = add_scaled(
                            &col.iter()
                                .map(|(r, v)| (*r, v * &p.div_exact(&g)))
                                .filter(|(_, v)| !v.is_zero())
                                .collect(),
                            &pivot,
                            &-lead.div_exact(&g),
                        );
                        if let Some(m) = &self.modulus {
                            reduce_mod(&mut new_pivot, m);
                            reduce_mod(&mut new_col, m);
                        }
                        debug_assert_eq!(new_pivot.first().map(|(r, _)| *r), Some(r));
                        debug_assert!(new_col.first().map_or(true, |(rr, _)| *rr > r));
                        self.cols[r] = Some(new_pivot);
                        col = new_col;
                    }
                }
            }
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// The accumulated basis columns, ordered by pivot row.
    pub fn into_columns(self) -> Vec<SparseVec> {
        self.cols.into_iter().flatten().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::matrix::IntMatrix;
    use crate::lattice::snf::smith_normal_form;

    fn echelon_factors(cols: Vec<SparseVec>, ambient: usize) -> Vec<i64> {
        let m = IntMatrix::from_sparse_cols(ambient, &cols);
        smith_normal_form(&m)
            .invariant_factors()
            .iter()
            .map(|d| d.to_i64().unwrap())
            .collect()
    }

    #[test]
    fn echelon_spans_same_lattice_as_dense() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let amb = rng.gen_range(1..=6);
            let ncols = rng.gen_range(0..=9);
            let dense = IntMatrix::from_fn(amb, ncols, |_, _| Int::from(rng.gen_range(-4i64..=4)));
            let mut ech = LatticeEchelon::new(amb, None);
            for j in 0..ncols {
                let col: SparseVec = (0..amb)
                    .map(|i| (i, dense.get(i, j).clone()))
                    .filter(|(_, v)| !v.is_zero())
                    .collect();
                ech.insert(col);
            }
            let dense_factors: Vec<i64> = smith_normal_form(&dense)
                .invariant_factors()
                .iter()
                .map(|d| d.to_i64().unwrap())
                .collect();
            assert_eq!(echelon_factors(ech.into_columns(), amb), dense_factors);
        }
    }

    #[test]
    fn modular_echelon_includes_scaled_identity() {
        let mut ech = LatticeEchelon::new(3, Some(Int::from(4)));
        ech.insert(vec![(0, Int::from(2)), (2, Int::from(3))]);
        let factors = echelon_factors(ech.into_columns(), 3);
        // lattice = <(2,0,3)> + 4Z^3. Since 3 is a unit mod 4 the generator
        // spans a Z4 summand of (Z4)^3, leaving Z4 x Z4: factors (1, 4, 4).
        // Cross-checked against the dense matrix [(2,0,3) | 4I].
        let dense = IntMatrix::from_rows(&[
            vec![2, 4, 0, 0],
            vec![0, 0, 4, 0],
            vec![3, 0, 0, 4],
        ]);
        let dense_factors: Vec<i64> = smith_normal_form(&dense)
            .invariant_factors()
            .iter()
            .map(|d| d.to_i64().unwrap())
            .collect();
        assert_eq!(factors, dense_factors);
        assert_eq!(factors, vec![1, 4, 4]);
    }
}
