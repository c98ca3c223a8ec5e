//! Cayley-table input files.
//!
//! The on-disk format is TOML with two fields:
//!
//! ```toml
//! elements = ["e", "a"]
//! table = [["e", "a"], ["a", "e"]]
//! ```
//!
//! `table[i][j]` names the product of element `i` and element `j`; the
//! identity is inferred during validation.

use super::FiniteGroup;
use crate::error::{Error, Result};

pub fn parse_cayley_toml(text: &str) -> Result<(Vec<String>, Vec<Vec<usize>>)> {
    let value: toml::Value = text
        .parse()
        .map_err(|e| Error::InvalidCayleyData(format!("TOML parse error: {e}")))?;
    let elements = value
        .get("elements")
        .and_then(|v| v.as_array())
        .ok_or_else(|| Error::InvalidCayleyData("missing 'elements' list".to_string()))?;
    let labels: Vec<String> = elements
        .iter()
        .map(|v| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::InvalidCayleyData("elements must be strings".to_string()))
        })
        .collect::<Result<_>>()?;
    let index_of = |name: &str| -> Result<usize> {
        labels
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| Error::InvalidCayleyData(format!("unknown element '{name}' in table")))
    };
    let table_val = value
        .get("table")
        .and_then(|v| v.as_array())
        .ok_or_else(|| Error::InvalidCayleyData("missing 'table' list".to_string()))?;
    let mut table = Vec::with_capacity(table_val.len());
    for row in table_val {
        let row = row
            .as_array()
            .ok_or_else(|| Error::InvalidCayleyData("table rows must be lists".to_string()))?;
        let mut out_row = Vec::with_capacity(row.len());
        for cell in row {
            let name = cell.as_str().ok_or_else(|| {
                Error::InvalidCayleyData("table entries must be element names".to_string())
            })?;
            out_row.push(index_of(name)?);
        }
        table.push(out_row);
    }
    Ok((labels, table))
}

pub fn group_from_cayley_toml(text: &str) -> Result<FiniteGroup> {
    let (labels, table) = parse_cayley_toml(text)?;
    FiniteGroup::from_table(labels, table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_c2() {
        let g = group_from_cayley_toml(
            r#"
elements = ["e", "a"]
table = [["e", "a"], ["a", "e"]]
"#,
        )
        .unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.identity(), 0);
    }

    #[test]
    fn rejects_unknown_element() {
        let err = group_from_cayley_toml(
            r#"
elements = ["e", "a"]
table = [["e", "a"], ["a", "b"]]
"#,
        );
        assert!(matches!(err, Err(Error::InvalidCayleyData(_))));
    }

    #[test]
    fn rejects_bad_table() {
        let err = group_from_cayley_toml(
            r#"
elements = ["e", "a"]
table = [["e", "a"], ["a", "a"]]
"#,
        );
        assert!(matches!(err, Err(Error::NotLatinSquare(_))));
    }
}
