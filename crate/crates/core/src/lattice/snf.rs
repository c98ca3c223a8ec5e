//! Smith normal form and the lattice computations built on it.
//!
//! The elimination is deterministic: the pivot is always the nonzero entry
//! of smallest absolute value, ties broken by lowest row then lowest
//! column. Every construction downstream (chosen cocycles, chosen
//! complements) inherits its reproducibility from this rule.

use super::int::Int;
use super::matrix::IntMatrix;

/// `u * a * v = d` exactly, with recorded inverses.
#[derive(Clone, Debug)]
pub struct SnfDecomposition {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    pub rank: usize,
}

impl SnfDecomposition {
    /// Diagonal entries, including trailing zeros.
    pub fn diagonal(&self) -> Vec<Int> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d.get(i, i).clone()).collect()
    }

    /// Nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<Int> {
        self.diagonal()
            .into_iter()
            .filter(|d| !d.is_zero())
            .collect()
    }
}

#[derive(Clone, Copy, Default)]
pub(crate) struct SnfOptions {
    pub track_u: bool,
    pub track_v: bool,
}

pub(crate) struct SnfCore {
    pub a: IntMatrix,
    pub u: Option<IntMatrix>,
    pub u_inv: Option<IntMatrix>,
    pub v: Option<IntMatrix>,
    pub v_inv: Option<IntMatrix>,
    pub rank: usize,
    /// When set, working entries are kept reduced modulo this value.
    /// Soundness is the caller's obligation: either the column lattice is
    /// to be interpreted as `im(a) + m·Z^rows`, or only the solution set of
    /// `a·x ≡ 0 (mod m)` is consumed. Transform matrices are exact.
    modulus: Option<Int>,
}

impl SnfCore {
    fn new(a: IntMatrix, opts: SnfOptions, modulus: Option<Int>) -> SnfCore {
        let (r, c) = (a.rows(), a.cols());
        let mut core = SnfCore {
            a,
            u: opts.track_u.then(|| IntMatrix::identity(r)),
            u_inv: opts.track_u.then(|| IntMatrix::identity(r)),
            v: opts.track_v.then(|| IntMatrix::identity(c)),
            v_inv: opts.track_v.then(|| IntMatrix::identity(c)),
            rank: 0,
            modulus,
        };
        core.reduce_all_mod();
        core
    }

    fn reduce_all_mod(&mut self) {
        if let Some(m) = self.modulus.clone() {
            for i in 0..self.a.rows() {
                for j in 0..self.a.cols() {
                    let v = self.a.get(i, j).rem_euclid(&m);
                    self.a.set(i, j, v);
                }
            }
        }
    }

    fn reduce_entry(&mut self, i: usize, j: usize) {
        if let Some(m) = &self.modulus {
            let v = self.a.get(i, j).rem_euclid(m);
            self.a.set(i, j, v);
        }
    }

    fn reduce_row_mod(&mut self, i: usize) {
        if self.modulus.is_some() {
            for j in 0..self.a.cols() {
                self.reduce_entry(i, j);
            }
        }
    }

    fn reduce_col_mod(&mut self, j: usize) {
        if self.modulus.is_some() {
            for i in 0..self.a.rows() {
                self.reduce_entry(i, j);
            }
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.a.swap_rows(a, b);
        if let Some(u) = &mut self.u {
            u.swap_rows(a, b);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.swap_cols(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.a.swap_cols(a, b);
        if let Some(v) = &mut self.v {
            v.swap_cols(a, b);
        }
        if let Some(vi) = &mut self.v_inv {
            vi.swap_rows(a, b);
        }
    }

    fn negate_row(&mut self, r: usize) {
        self.a.negate_row(r);
        self.reduce_row_mod(r);
        if let Some(u) = &mut self.u {
            u.negate_row(r);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.negate_col(r);
        }
    }

    /// `row[dst] += q * row[src]`
    fn add_row_multiple(&mut self, dst: usize, src: usize, q: &Int) {
        self.a.add_row_multiple(dst, src, q);
        self.reduce_row_mod(dst);
        if let Some(u) = &mut self.u {
            u.add_row_multiple(dst, src, q);
        }
        if let Some(ui) = &mut self.u_inv {
            let nq = -q;
            ui.add_col_multiple(src, dst, &nq);
        }
    }

    /// `col[dst] += q * col[src]`
    fn add_col_multiple(&mut self, dst: usize, src: usize, q: &Int) {
        self.a.add_col_multiple(dst, src, q);
        self.reduce_col_mod(dst);
        if let Some(v) = &mut self.v {
            v.add_col_multiple(dst, src, q);
        }
        if let Some(vi) = &mut self.v_inv {
            let nq = -q;
            vi.add_row_multiple(src, dst, &nq);
        }
    }

    /// Smallest nonzero |entry| in the block at `(k, k)`, lowest indices first.
    fn find_pivot(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<(Int, usize, usize)> = None;
        for i in k..self.a.rows() {
            for j in k..self.a.cols() {
                let e = self.a.get(i, j);
                if e.is_zero() {
                    continue;
                }
                let mag = e.abs();
                match &best {
                    Some((m, _, _)) if *m <= mag => {}
                    _ => best = Some((mag, i, j)),
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    fn run(&mut self) {
        let n = self.a.rows().min(self.a.cols());
        let mut k = 0;
        while k < n {
            let Some((pi, pj)) = self.find_pivot(k) else {
                break;
            };
            self.swap_rows(k, pi);
            self.swap_cols(k, pj);
            if self.a.get(k, k).is_negative() {
                self.negate_row(k);
            }
            'clear: loop {
                for i in k + 1..self.a.rows() {
                    if self.a.get(i, k).is_zero() {
                        continue;
                    }
                    let q = -self.a.get(i, k).div_round_nearest(self.a.get(k, k));
                    self.add_row_multiple(i, k, &q);
                    if !self.a.get(i, k).is_zero() {
                        // Remainder is strictly smaller; promote it to pivot.
                        self.swap_rows(k, i);
                        if self.a.get(k, k).is_negative() {
                            self.negate_row(k);
                        }
                        continue 'clear;
                    }
                }
                for j in k + 1..self.a.cols() {
                    if self.a.get(k, j).is_zero() {
                        continue;
                    }
                    let q = -self.a.get(k, j).div_round_nearest(self.a.get(k, k));
                    self.add_col_multiple(j, k, &q);
                    if !self.a.get(k, j).is_zero() {
                        self.swap_cols(k, j);
                        if self.a.get(k, k).is_negative() {
                            self.negate_row(k);
                        }
                        continue 'clear;
                    }
                }
                break;
            }
            k += 1;
        }
        self.rank = (0..n).take_while(|&i| !self.a.get(i, i).is_zero()).count();
        self.enforce_divisibility();
    }

    fn enforce_divisibility(&mut self) {
        // With a modulus, an entry may have been reduced to zero; recompute
        // the rank over the reduced entries first.
        let n = self.a.rows().min(self.a.cols());
        loop {
            let mut changed = false;
            for i in 0..n.saturating_sub(1) {
                let di = self.a.get(i, i).clone();
                let dj = self.a.get(i + 1, i + 1).clone();
                if dj.is_zero() || di.divides(&dj) {
                    continue;
                }
                if di.is_zero() {
                    // Zero before nonzero: swap into chain order.
                    self.swap_rows(i, i + 1);
                    self.swap_cols(i, i + 1);
                    changed = true;
                    continue;
                }
                // Classic 2x2 repair: diag(a, b) -> diag(gcd, lcm).
                self.add_col_multiple(i, i + 1, &Int::ONE);
                self.local_clear(i);
                changed = true;
            }
            if !changed {
                break;
            }
        }
        self.rank = (0..n).take_while(|&i| !self.a.get(i, i).is_zero()).count();
    }

    /// Re-eliminate the 2x2 block at `k` after a divisibility repair.
    fn local_clear(&mut self, k: usize) {
        loop {
            // Bring smallest entry of the block to (k, k).
            let mut best: Option<(Int, usize, usize)> = None;
            for i in k..=(k + 1).min(self.a.rows() - 1) {
                for j in k..=(k + 1).min(self.a.cols() - 1) {
                    let e = self.a.get(i, j);
                    if e.is_zero() {
                        continue;
                    }
                    let mag = e.abs();
                    match &best {
                        Some((m, _, _)) if *m <= mag => {}
                        _ => best = Some((mag, i, j)),
                    }
                }
            }
            let Some((_, pi, pj)) = best else { return };
            self.swap_rows(k, pi);
            self.swap_cols(k, pj);
            if self.a.get(k, k).is_negative() {
                self.negate_row(k);
            }
            let mut dirty = false;
            if k + 1 < self.a.rows() && !self.a.get(k + 1, k).is_zero() {
                let q = -self.a.get(k + 1, k).div_round_nearest(self.a.get(k, k));
                self.add_row_multiple(k + 1, k, &q);
                dirty = !self.a.get(k + 1, k).is_zero();
            }
            if k + 1 < self.a.cols() && !self.a.get(k, k + 1).is_zero() {
                let q = -self.a.get(k, k + 1).div_round_nearest(self.a.get(k, k));
                self.add_col_multiple(k + 1, k, &q);
                dirty = dirty || !self.a.get(k, k + 1).is_zero();
            }
            if !dirty {
                if self.a.get(k, k).is_negative() {
                    self.negate_row(k);
                }
                if k + 1 < self.a.rows().min(self.a.cols()) && self.a.get(k + 1, k + 1).is_negative()
                {
                    self.negate_row(k + 1);
                }
                return;
            }
        }
    }
}

/// Exact Smith normal form with all four transforms.
pub fn smith_normal_form(a: &IntMatrix) -> SnfDecomposition {
    let mut core = SnfCore::new(
        a.clone(),
        SnfOptions {
            track_u: true,
            track_v: true,
        },
        None,
    );
    core.run();
    SnfDecomposition {
        d: core.a,
        u: core.u.unwrap(),
        u_inv: core.u_inv.unwrap(),
        v: core.v.unwrap(),
        v_inv: core.v_inv.unwrap(),
        rank: core.rank,
    }
}

/// Diagonal of the Smith form together with the row transform, computed
/// with entries kept reduced modulo `m` (sound only when the consumer
/// interprets the columns as generating `im(a) + m·Z^rows`).
pub(crate) fn snf_mod(a: IntMatrix, m: &Int, opts: SnfOptions) -> SnfCore {
    let mut core = SnfCore::new(a, opts, Some(m.clone()));
    core.run();
    core
}

/// Plain exact SNF with configurable transform tracking.
pub(crate) fn snf_with(a: IntMatrix, opts: SnfOptions) -> SnfCore {
    let mut core = SnfCore::new(a, opts, None);
    core.run();
    core
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    fn check_reconstruction(a: &IntMatrix) {
        let s = smith_normal_form(a);
        // u * a * v = d
        assert_eq!(s.u.mul(a).mul(&s.v), s.d, "uav != d");
        // recorded inverses are genuine
        assert_eq!(
            s.u.mul(&s.u_inv),
            IntMatrix::identity(a.rows()),
            "u_inv wrong"
        );
        assert_eq!(
            s.v.mul(&s.v_inv),
            IntMatrix::identity(a.cols()),
            "v_inv wrong"
        );
        // divisibility chain
        let diag = s.diagonal();
        for w in diag.windows(2) {
            if !w[1].is_zero() {
                assert!(w[0].divides(&w[1]), "chain broken: {:?}", diag);
            }
        }
        // off-diagonal zero
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d.get(i, j).is_zero());
                }
            }
        }
    }

    #[test]
    fn snf_2x2_example() {
        // Manual row/column reduction gives diag(2, 4).
        let a = m(&[vec![2, 4], vec![6, 8]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.diagonal(), vec![Int::from(2), Int::from(4)]);
        check_reconstruction(&a);
    }

    #[test]
    fn snf_identity_is_fixed() {
        let a = IntMatrix::identity(3);
        let s = smith_normal_form(&a);
        assert_eq!(s.d, a);
        assert_eq!(s.u, IntMatrix::identity(3));
        assert_eq!(s.v, IntMatrix::identity(3));
    }

    #[test]
    fn snf_zero_matrix() {
        let a = IntMatrix::zero(3, 2);
        let s = smith_normal_form(&a);
        assert_eq!(s.rank, 0);
        assert!(s.d.is_zero());
    }

    #[test]
    fn snf_random_reconstruction() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let r = rng.gen_range(1..=8);
            let c = rng.gen_range(1..=8);
            let a = IntMatrix::from_fn(r, c, |_, _| Int::from(rng.gen_range(-9i64..=9)));
            check_reconstruction(&a);
        }
    }

    #[test]
    fn snf_mod_matches_exact_on_sum_lattice() {
        // im(a) + 6Z^2 for a = diag(4, 9): invariant factors gcd(4,6)=2, gcd(9,6)=3
        // renormalized to the chain (1, 6).
        let a = m(&[vec![4, 0], vec![0, 9]]);
        let aug = a.hstack(&IntMatrix::from_rows(&[vec![6, 0], vec![0, 6]]));
        let exact = smith_normal_form(&aug);
        let modular = snf_mod(aug.clone(), &Int::from(6), SnfOptions::default());
        let exact_diag: Vec<Int> = exact.diagonal()[..2].to_vec();
        // Working entries were reduced mod 6, so a diagonal slot holding d
        // stands for the factor gcd(d, 6), with 0 standing for 6 itself.
        let mod_diag: Vec<Int> = (0..2)
            .map(|i| {
                let d = modular.a.get(i, i);
                if d.is_zero() {
                    Int::from(6)
                } else {
                    d.gcd(&Int::from(6))
                }
            })
            .collect();
        assert_eq!(exact_diag, mod_diag);
        assert_eq!(mod_diag, vec![Int::ONE, Int::from(6)]);
    }
}
