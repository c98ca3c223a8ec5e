//! Permutations in cycle notation and group closure.

use super::FiniteGroup;
use crate::error::{Error, Result};
use std::collections::HashMap;

/// Maximum number of moved points accepted for permutation input.
const MAX_POINTS: usize = 20;
/// Closure cap for permutation-generated groups.
const MAX_CLOSURE: usize = 100_000;

/// Permutation of `{1, ..., degree}` stored as a 0-based image vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Permutation {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Cycle notation over 1-based points; the identity prints as `()`.
    /// Points are written compactly (`(123)`) when every point is a single
    /// digit, space-separated otherwise.
    pub fn cycle_notation(&self) -> String {
        let n = self.degree();
        let compact = n <= 9;
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            out.push('(');
            let mut p = start;
            let mut first = true;
            loop {
                seen[p] = true;
                if !first && !compact {
                    out.push(' ');
                }
                out.push_str(&(p + 1).to_string());
                first = false;
                p = self.images[p];
                if p == start {
                    break;
                }
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

/// Parses one or more permutations in cycle notation, e.g. `"(1 2 3)(4 5)"`.
/// Commas inside cycles are also accepted. All permutations are padded to a
/// common degree (the largest point mentioned).
pub fn parse_cycles(inputs: &[&str]) -> Result<Vec<Permutation>> {
    let mut raw: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut max_point = 0usize;
    for input in inputs {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let s = input.trim();
        let mut chars = s.chars().peekable();
        while let Some(&c) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
                continue;
            }
            if c != '(' {
                return Err(Error::InvalidPermutation(format!(
                    "expected '(' in '{input}'"
                )));
            }
            chars.next();
            let mut cycle: Vec<usize> = Vec::new();
            let mut num = String::new();
            loop {
                match chars.next() {
                    Some(')') => {
                        if !num.is_empty() {
                            cycle.push(parse_point(&num, input)?);
                        }
                        break;
                    }
                    Some(d) if d.is_ascii_digit() => num.push(d),
                    Some(sep) if sep.is_whitespace() || sep == ',' => {
                        if !num.is_empty() {
                            cycle.push(parse_point(&num, input)?);
                            num.clear();
                        }
                    }
                    Some(other) => {
                        return Err(Error::InvalidPermutation(format!(
                            "unexpected '{other}' in '{input}'"
                        )))
                    }
                    None => {
                        return Err(Error::InvalidPermutation(format!(
                            "unclosed cycle in '{input}'"
                        )))
                    }
                }
            }
            let mut sorted = cycle.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != cycle.len() {
                return Err(Error::InvalidPermutation(format!(
                    "repeated point in cycle of '{input}'"
                )));
            }
            max_point = max_point.max(cycle.iter().copied().max().unwrap_or(0));
            cycles.push(cycle);
        }
        raw.push(cycles);
    }
    if max_point > MAX_POINTS {
        return Err(Error::SizeCap {
            op: "permutation input",
            cap: MAX_POINTS,
            actual: max_point,
        });
    }
    let degree = max_point.max(1);
    let mut out = Vec::with_capacity(raw.len());
    for (cycles, input) in raw.into_iter().zip(inputs) {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w] - 1;
                let to = cycle[(w + 1) % cycle.len()] - 1;
                if images[from] != from {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} moved twice in '{input}'",
                        from + 1
                    )));
                }
                images[from] = to;
            }
        }
        // disjoint-cycle write is a bijection by construction
        out.push(Permutation { images });
    }
    Ok(out)
}

fn parse_point(s: &str, input: &str) -> Result<usize> {
    let p: usize = s
        .parse()
        .map_err(|_| Error::InvalidPermutation(format!("bad point '{s}' in '{input}'")))?;
    if p == 0 {
        return Err(Error::InvalidPermutation(
            "points are 1-based; 0 is not allowed".to_string(),
        ));
    }
    Ok(p)
}

/// Orbit-enumerates the closure of the generators and converts it to a
/// Cayley table. Elements are labelled by their cycle notation.
pub fn group_from_permutations(gens: &[Permutation]) -> Result<FiniteGroup> {
    let degree = gens.first().map_or(1, Permutation::degree);
    if gens.iter().any(|g| g.degree() != degree) {
        return Err(Error::InvalidPermutation(
            "generators act on different point sets".to_string(),
        ));
    }
    let identity = Permutation::identity(degree);
    let mut elements: Vec<Permutation> = vec![identity.clone()];
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    index.insert(identity, 0);
    let mut frontier = vec![0usize];
    while let Some(i) = frontier.pop() {
        for g in gens {
            let next = elements[i].compose(g);
            if !index.contains_key(&next) {
                if elements.len() >= MAX_CLOSURE {
                    return Err(Error::SizeCap {
                        op: "permutation closure",
                        cap: MAX_CLOSURE,
                        actual: elements.len() + 1,
                    });
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
                frontier.push(elements.len() - 1);
            }
        }
    }
    let n = elements.len();
    let labels: Vec<String> = elements.iter().map(Permutation::cycle_notation).collect();
    let mut table = Vec::with_capacity(n * n);
    for a in &elements {
        for b in &elements {
            table.push(index[&a.compose(b)] as u32);
        }
    }
    FiniteGroup::from_flat_table(labels, table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::center;

    #[test]
    fn parse_and_print_cycles() {
        let ps = parse_cycles(&["(1 2 3)(4 5)"]).unwrap();
        assert_eq!(ps[0].cycle_notation(), "(123)(45)");
        let ps = parse_cycles(&["(1 11)(2 3)"]).unwrap();
        assert_eq!(ps[0].cycle_notation(), "(1 11)(2 3)");
        let ps = parse_cycles(&["()"]).unwrap();
        assert!(ps[0].is_identity());
        assert!(parse_cycles(&["(1 1)"]).is_err());
        assert!(parse_cycles(&["(1 2"]).is_err());
    }

    #[test]
    fn d8_from_generators() {
        // (1 2 3 4) and (1 3) generate the dihedral group of order 8.
        let gens = parse_cycles(&["(1 2 3 4)", "(1 3)"]).unwrap();
        let g = group_from_permutations(&gens).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(center(&g).order(), 2);
    }

    #[test]
    fn s3_from_generators() {
        let gens = parse_cycles(&["(1 2)", "(1 2 3)"]).unwrap();
        let g = group_from_permutations(&gens).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
    }
}
