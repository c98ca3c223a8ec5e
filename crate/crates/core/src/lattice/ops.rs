//! Cokernels, torsion/free splittings and linear congruence solving.

use super::abelian::FgAbelianGroup;
use super::int::Int;
use super::matrix::IntMatrix;
use super::snf::{smith_normal_form, SnfDecomposition};
use crate::error::{Error, Result};

/// `Z^rows / colspace(a)` together with the data needed to map arbitrary
/// integer vectors to canonical coordinates in the quotient.
#[derive(Clone, Debug)]
pub struct CokernelData {
    group: FgAbelianGroup,
    /// Ambient generator vectors, one per invariant factor (order > 1).
    torsion_gens: Vec<Vec<Int>>,
    /// Ambient generator vectors for the free part.
    free_gens: Vec<Vec<Int>>,
    u: IntMatrix,
    /// Per-ambient-direction diagonal: the SNF diagonal padded with zeros.
    diag: Vec<Int>,
}

/// Canonical coordinates of a vector's class in a cokernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CokernelCoords {
    /// One entry per invariant factor, reduced into `[0, d_i)`.
    pub torsion: Vec<Int>,
    /// One entry per free generator.
    pub free: Vec<Int>,
}

impl CokernelCoords {
    pub fn is_zero(&self) -> bool {
        self.torsion.iter().all(Int::is_zero) && self.free.iter().all(Int::is_zero)
    }
}

impl CokernelData {
    pub fn group(&self) -> &FgAbelianGroup {
        &self.group
    }

    pub fn torsion_gens(&self) -> &[Vec<Int>] {
        &self.torsion_gens
    }

    pub fn free_gens(&self) -> &[Vec<Int>] {
        &self.free_gens
    }

    pub fn ambient_dim(&self) -> usize {
        self.diag.len()
    }

    /// Coordinates of `v`'s class: entry `i` of `torsion` is taken modulo
    /// the `i`-th invariant factor.
    pub fn coords(&self, v: &[Int]) -> CokernelCoords {
        assert_eq!(v.len(), self.diag.len(), "ambient dimension mismatch");
        let w = self.u.mul_vec(v);
        let mut torsion = Vec::new();
        let mut free = Vec::new();
        for (i, d) in self.diag.iter().enumerate() {
            if d.is_zero() {
                free.push(w[i].clone());
            } else if !d.is_one() {
                torsion.push(w[i].rem_euclid(d));
            }
        }
        CokernelCoords { torsion, free }
    }
}

/// Cokernel of `a` acting by left multiplication on column vectors:
/// the quotient of `Z^rows` by the column span.
pub fn cokernel(a: &IntMatrix) -> CokernelData {
    let s = smith_normal_form(a);
    cokernel_from_snf(a.rows(), &s)
}

pub(crate) fn cokernel_from_snf(ambient: usize, s: &SnfDecomposition) -> CokernelData {
    let mut diag = s.diagonal();
    diag.resize(ambient, Int::ZERO);
    let mut torsion_gens = Vec::new();
    let mut free_gens = Vec::new();
    let mut factors = Vec::new();
    for (i, d) in diag.iter().enumerate() {
        if d.is_zero() {
            free_gens.push(s.u_inv.col(i));
        } else if !d.is_one() {
            factors.push(d.clone());
            torsion_gens.push(s.u_inv.col(i));
        }
    }
    let group = FgAbelianGroup::from_invariant_factors(factors, free_gens.len())
        .expect("SNF diagonal is a divisibility chain");
    CokernelData {
        group,
        torsion_gens,
        free_gens,
        u: s.u.clone(),
        diag,
    }
}

/// Torsion generators and a basis of a free direct complement for the
/// quotient `Z^rows / colspace(a)`.
#[derive(Clone, Debug)]
pub struct TorsionComplement {
    pub coker: CokernelData,
    pub torsion_basis: Vec<Vec<Int>>,
    pub complement_basis: Vec<Vec<Int>>,
}

pub fn torsion_complement(a: &IntMatrix) -> TorsionComplement {
    let coker = cokernel(a);
    let torsion_basis = coker.torsion_gens.clone();
    let complement_basis = coker.free_gens.clone();
    // Torsion part and complement together give the whole group and meet
    // trivially: the canonical coordinates of the chosen generators form
    // an identity block by construction. Verify cheaply.
    for (i, t) in torsion_basis.iter().enumerate() {
        let c = coker.coords(t);
        assert!(c.free.iter().all(Int::is_zero), "torsion gen leaks rank");
        assert!(
            c.torsion.iter().enumerate().all(|(j, x)| if j == i {
                x.is_one()
            } else {
                x.is_zero()
            }),
            "torsion gen {i} not canonical"
        );
    }
    for (i, v) in complement_basis.iter().enumerate() {
        let c = coker.coords(v);
        assert!(c.torsion.iter().all(Int::is_zero), "complement gen has torsion");
        assert!(
            c.free.iter().enumerate().all(|(j, x)| if j == i {
                x.is_one()
            } else {
                x.is_zero()
            }),
            "complement gen {i} not canonical"
        );
    }
    TorsionComplement {
        coker,
        torsion_basis,
        complement_basis,
    }
}

/// Checks that a supplied family of ambient vectors spans a free direct
/// complement of the torsion subgroup in `coker`. The criterion: the
/// matrix of free coordinates must be unimodular.
pub fn is_valid_complement(coker: &CokernelData, basis: &[Vec<Int>]) -> bool {
    let f = coker.free_gens.len();
    if basis.len() != f {
        return false;
    }
    if f == 0 {
        return true;
    }
    let m = IntMatrix::from_fn(f, f, |i, j| coker.coords(&basis[j]).free[i].clone());
    let s = smith_normal_form(&m);
    s.rank == f && s.diagonal().iter().all(Int::is_one)
}

/// Solves `a·x ≡ b` with a per-row modulus, via the exact SNF of the
/// augmented system `[a | diag(m)]`. Returns the deterministic particular
/// solution with all free parameters set to zero, or `None` when the
/// system is unsolvable.
pub fn solve_linear_congruences(a: &IntMatrix, b: &[Int], moduli: &[Int]) -> Result<Option<Vec<Int>>> {
    let rows = a.rows();
    if b.len() != rows || moduli.len() != rows {
        return Err(Error::Internal(
            "congruence system shape mismatch".to_string(),
        ));
    }
    if moduli.iter().any(|m| m <= &Int::ZERO) {
        return Err(Error::Internal("moduli must be positive".to_string()));
    }
    let mut aug = IntMatrix::zero(rows, a.cols() + rows);
    for i in 0..rows {
        for j in 0..a.cols() {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, a.cols() + i, moduli[i].clone());
    }
    let s = smith_normal_form(&aug);
    let c = s.u.mul_vec(b);
    let mut y = vec![Int::ZERO; aug.cols()];
    for i in 0..rows {
        let d = s.d.get(i, i);
        if d.is_zero() {
            if !c[i].is_zero() {
                return Ok(None);
            }
        } else {
            if !d.divides(&c[i]) {
                return Ok(None);
            }
            y[i] = c[i].div_exact(d);
        }
    }
    let z = s.v.mul_vec(&y);
    let x: Vec<Int> = z[..a.cols()].to_vec();
    // Certify the solution.
    let ax = a.mul_vec(&x);
    for i in 0..rows {
        if !(&ax[i] - &b[i]).rem_euclid(&moduli[i]).is_zero() {
            return Err(Error::Internal(
                "congruence solver produced an invalid solution".to_string(),
            ));
        }
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn cokernel_of_diag_2_3() {
        // Z^2 / im diag(2,3) = Z6
        let a = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let c = cokernel(&a);
        assert_eq!(c.group().invariant_factors(), &ints(&[6])[..]);
        assert_eq!(c.group().free_rank(), 0);
    }

    #[test]
    fn cokernel_of_empty_matrix() {
        let a = IntMatrix::zero(2, 0);
        let c = cokernel(&a);
        assert!(c.group().invariant_factors().is_empty());
        assert_eq!(c.group().free_rank(), 2);
    }

    #[test]
    fn cokernel_single_relation() {
        let a = IntMatrix::from_rows(&[vec![2, 0], vec![0, 0]]);
        let c = cokernel(&a);
        assert_eq!(c.group().invariant_factors(), &ints(&[2])[..]);
        assert_eq!(c.group().free_rank(), 1);
    }

    #[test]
    fn coords_round_trip() {
        let a = IntMatrix::from_rows(&[vec![2, 0], vec![0, 0]]);
        let c = cokernel(&a);
        // The torsion generator has coordinate 1; doubling it vanishes.
        let t = c.torsion_gens()[0].clone();
        assert_eq!(c.coords(&t).torsion, ints(&[1]));
        let double: Vec<Int> = t.iter().map(|x| x + x).collect();
        assert!(c.coords(&double).torsion.iter().all(Int::is_zero));
    }

    #[test]
    fn torsion_complement_z_plus_z2() {
        // Z ⊕ Z2 presented on two generators by the single relation 2e2.
        let a = IntMatrix::from_rows(&[vec![0], vec![2]]);
        let tc = torsion_complement(&a);
        assert_eq!(tc.torsion_basis.len(), 1);
        assert_eq!(tc.complement_basis.len(), 1);
        assert!(is_valid_complement(&tc.coker, &tc.complement_basis));
    }

    #[test]
    fn finite_group_has_empty_complement() {
        let a = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let tc = torsion_complement(&a);
        assert!(tc.complement_basis.is_empty());
    }

    #[test]
    fn solve_congruence_examples() {
        // 2x = 0 mod 4 -> x = 0 canonical
        let a = IntMatrix::from_rows(&[vec![2]]);
        let x = solve_linear_congruences(&a, &ints(&[0]), &ints(&[4]))
            .unwrap()
            .unwrap();
        assert_eq!(x, ints(&[0]));
        // 2x = 1 mod 4 -> no solution
        assert!(solve_linear_congruences(&a, &ints(&[1]), &ints(&[4]))
            .unwrap()
            .is_none());
        // mixed moduli: x = 1 mod 2 and x = 2 mod 3 -> x = 5 works (any lift)
        let a = IntMatrix::from_rows(&[vec![1], vec![1]]);
        let x = solve_linear_congruences(&a, &ints(&[1, 2]), &ints(&[2, 3]))
            .unwrap()
            .unwrap();
        let v = x[0].to_i64().unwrap();
        assert_eq!(v.rem_euclid(2), 1);
        assert_eq!(v.rem_euclid(3), 2);
    }
}
