//! The published group catalog.
//!
//! Catalog names: `C<n>` (cyclic), `D<n>` (dihedral of order `n`, `n` even
//! and at least 4), `Q8`, `S3`, `S4`, `A4`, `He3` (Heisenberg group of
//! order 27 and exponent 3). Direct products are spelled with `x`, e.g.
//! `C2xC2` or `D8xC3`.

use super::perm::{group_from_permutations, parse_cycles};
use super::{direct_product, FiniteGroup, GroupRef};
use crate::error::{Error, Result};
use std::sync::Arc;

/// Input flavors accepted by [`make_group`].
pub enum GroupSource<'a> {
    /// A name from the published catalog.
    Catalog(&'a str),
    /// Raw Cayley data: labels plus a table of indices into the label list.
    Cayley {
        labels: Vec<String>,
        table: Vec<Vec<usize>>,
    },
    /// Permutation generators in cycle notation.
    Permutations(&'a [&'a str]),
}

pub fn make_group(source: GroupSource<'_>) -> Result<FiniteGroup> {
    match source {
        GroupSource::Catalog(name) => catalog_group(name),
        GroupSource::Cayley { labels, table } => FiniteGroup::from_table(labels, table),
        GroupSource::Permutations(gens) => {
            let parsed = parse_cycles(gens)?;
            group_from_permutations(&parsed)
        }
    }
}

/// Builds a catalog group by name; products of atoms are separated by `x`.
pub fn catalog_group(name: &str) -> Result<FiniteGroup> {
    let atoms: Vec<&str> = name.split('x').collect();
    if atoms.iter().any(|a| a.is_empty()) {
        return Err(Error::UnknownCatalog(name.to_string()));
    }
    if atoms.len() == 1 {
        return atom_group(atoms[0]);
    }
    let factors: Vec<GroupRef> = atoms
        .iter()
        .map(|a| atom_group(a).map(Arc::new))
        .collect::<Result<_>>()?;
    Ok((*direct_product(&factors)?.group).clone())
}

fn atom_group(name: &str) -> Result<FiniteGroup> {
    if let Some(num) = name.strip_prefix('C') {
        if let Ok(n) = num.parse::<usize>() {
            if n >= 1 {
                return cyclic(n);
            }
        }
    }
    if let Some(num) = name.strip_prefix('D') {
        if let Ok(n) = num.parse::<usize>() {
            if n >= 4 && n % 2 == 0 {
                return dihedral(n);
            }
        }
    }
    match name {
        "Q8" => quaternion8(),
        "S3" => symmetric(3),
        "S4" => symmetric(4),
        "A4" => alternating4(),
        "He3" => heisenberg3(),
        _ => Err(Error::UnknownCatalog(name.to_string())),
    }
}

fn cyclic(n: usize) -> Result<FiniteGroup> {
    let labels: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "a".to_string(),
            _ => format!("a^{i}"),
        })
        .collect();
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            table.push(((i + j) % n) as u32);
        }
    }
    FiniteGroup::from_flat_table(labels, table)
}

/// Dihedral group of order `n = 2m`: elements `s^k r^i`.
fn dihedral(n: usize) -> Result<FiniteGroup> {
    let m = n / 2;
    let label = |k: usize, i: usize| match (k, i) {
        (0, 0) => "e".to_string(),
        (0, 1) => "r".to_string(),
        (0, i) => format!("r^{i}"),
        (1, 0) => "s".to_string(),
        (1, 1) => "s*r".to_string(),
        (1, i) => format!("s*r^{i}"),
        _ => unreachable!(),
    };
    let idx = |k: usize, i: usize| (k * m + i) as u32;
    let labels: Vec<String> = (0..2)
        .flat_map(|k| (0..m).map(move |i| label(k, i)))
        .collect();
    let mut table = Vec::with_capacity(n * n);
    for k1 in 0..2 {
        for i1 in 0..m {
            for k2 in 0..2 {
                for i2 in 0..m {
                    // s^k1 r^i1 · s^k2 r^i2, using r^i s = s r^{-i}
                    let entry = if k2 == 0 {
                        idx(k1, (i1 + i2) % m)
                    } else {
                        idx(1 - k1, (i2 + m - i1) % m)
                    };
                    table.push(entry);
                }
            }
        }
    }
    FiniteGroup::from_flat_table(labels, table)
}

fn quaternion8() -> Result<FiniteGroup> {
    // Elements 1, -1, i, -i, j, -j, k, -k encoded as (axis, sign):
    // axis 0 = scalar, 1 = i, 2 = j, 3 = k.
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"];
    let enc = |axis: usize, neg: bool| (axis * 2 + neg as usize) as u32;
    // quaternion multiplication on axes with sign
    let mul_axis = |a: usize, b: usize| -> (usize, bool) {
        match (a, b) {
            (0, b) => (b, false),
            (a, 0) => (a, false),
            (a, b) if a == b => (0, true),
            (1, 2) => (3, false),
            (2, 3) => (1, false),
            (3, 1) => (2, false),
            (2, 1) => (3, true),
            (3, 2) => (1, true),
            (1, 3) => (2, true),
            _ => unreachable!(),
        }
    };
    let mut table = Vec::with_capacity(64);
    for a in 0..8u32 {
        for b in 0..8u32 {
            let (aa, an) = ((a / 2) as usize, a % 2 == 1);
            let (ba, bn) = ((b / 2) as usize, b % 2 == 1);
            let (axis, neg) = mul_axis(aa, ba);
            table.push(enc(axis, neg ^ an ^ bn));
        }
    }
    FiniteGroup::from_flat_table(labels.iter().map(|s| s.to_string()).collect(), table)
}

fn symmetric(n: usize) -> Result<FiniteGroup> {
    let gens: Vec<String> = match n {
        3 => vec!["(1 2)".into(), "(1 2 3)".into()],
        4 => vec!["(1 2)".into(), "(1 2 3 4)".into()],
        _ => return Err(Error::UnknownCatalog(format!("S{n}"))),
    };
    let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
    group_from_permutations(&parse_cycles(&refs)?)
}

fn alternating4() -> Result<FiniteGroup> {
    group_from_permutations(&parse_cycles(&["(1 2 3)", "(1 2)(3 4)"])?)
}

/// Heisenberg group over F3: triples (a, b, c) with
/// (a1,b1,c1)(a2,b2,c2) = (a1+a2, b1+b2, c1+c2+a1*b2).
fn heisenberg3() -> Result<FiniteGroup> {
    let idx = |a: usize, b: usize, c: usize| (a * 9 + b * 3 + c) as u32;
    let mut labels = Vec::with_capacity(27);
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                let mut parts: Vec<String> = Vec::new();
                if a > 0 {
                    parts.push(if a == 1 { "x".into() } else { format!("x^{a}") });
                }
                if b > 0 {
                    parts.push(if b == 1 { "y".into() } else { format!("y^{b}") });
                }
                if c > 0 {
                    parts.push(if c == 1 { "z".into() } else { format!("z^{c}") });
                }
                labels.push(if parts.is_empty() {
                    "e".to_string()
                } else {
                    parts.join("*")
                });
            }
        }
    }
    let mut table = Vec::with_capacity(27 * 27);
    for a1 in 0..3 {
        for b1 in 0..3 {
            for c1 in 0..3 {
                for a2 in 0..3 {
                    for b2 in 0..3 {
                        for c2 in 0..3 {
                            table.push(idx(
                                (a1 + a2) % 3,
                                (b1 + b2) % 3,
                                (c1 + c2 + a1 * b2) % 3,
                            ));
                        }
                    }
                }
            }
        }
    }
    FiniteGroup::from_flat_table(labels, table)
}

/// The curated catalog: every name here is exercised by the test sweeps.
pub fn catalog_names() -> Vec<&'static str> {
    vec![
        "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "C13", "C14",
        "C15", "C16", "C2xC2", "C2xC4", "C2xC6", "C2xC8", "C3xC3", "C3xC6", "C4xC4", "C6xC6",
        "C2xC2xC2", "C2xC2xC3", "C2xC2xC2xC2", "C2xC2xC3xC3", "S3", "D8", "Q8", "D10", "D12",
        "A4", "S4", "He3",
    ]
}

/// Catalog names whose group order is at most `max_order`.
pub fn catalog_names_up_to(max_order: usize) -> Vec<&'static str> {
    catalog_names()
        .into_iter()
        .filter(|name| {
            catalog_group(name)
                .map(|g| g.order() <= max_order)
                .unwrap_or(false)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::{center, is_nilpotent};
    use super::*;

    #[test]
    fn c2xc2_is_elementary_abelian_of_order_4() {
        let g = catalog_group("C2xC2").unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.exponent(), 2);
        assert!(g.is_abelian());
    }

    #[test]
    fn d8_center_has_order_2() {
        let g = catalog_group("D8").unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(center(&g).order(), 2);
        assert!(!g.is_abelian());
    }

    #[test]
    fn q8_has_unique_involution() {
        let g = catalog_group("Q8").unwrap();
        assert_eq!(g.order(), 8);
        let involutions = g
            .elements()
            .filter(|&x| g.element_order(x) == 2)
            .count();
        assert_eq!(involutions, 1);
        assert_eq!(center(&g).order(), 2);
    }

    #[test]
    fn he3_is_extraspecial_of_exponent_3() {
        let g = catalog_group("He3").unwrap();
        assert_eq!(g.order(), 27);
        assert_eq!(g.exponent(), 3);
        assert_eq!(center(&g).order(), 3);
        assert!(is_nilpotent(&g));
    }

    #[test]
    fn every_catalog_name_builds() {
        for name in catalog_names() {
            let g = catalog_group(name).expect(name);
            assert!(g.order() >= 1, "{name}");
        }
    }

    #[test]
    fn unknown_names_are_rejected() {
        assert!(catalog_group("C0").is_err());
        assert!(catalog_group("D7").is_err());
        assert!(catalog_group("E8").is_err());
        assert!(catalog_group("C2x").is_err());
    }

    #[test]
    fn dihedral_orders() {
        for n in [4usize, 6, 8, 10, 12, 16] {
            let g = catalog_group(&format!("D{n}")).unwrap();
            assert_eq!(g.order(), n);
            let r = g.element_by_label("r").unwrap();
            assert_eq!(g.element_order(r), n / 2);
            let s = g.element_by_label("s").unwrap();
            assert_eq!(g.element_order(s), 2);
        }
    }
}
