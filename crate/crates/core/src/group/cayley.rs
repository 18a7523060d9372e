//! Cayley table text format: first line `n`, then `n` rows of `n` integers
//! in `[0, n)`. Lines starting with `#` are comments.

use std::fmt::Write;

use super::{FiniteGroup, GroupOptions, Provenance};
use crate::error::{Error, Result};

pub fn from_cayley_table(text: &str) -> Result<FiniteGroup> {
    from_cayley_table_with(text, &GroupOptions::default())
}

pub fn from_cayley_table_with(text: &str, opts: &GroupOptions) -> Result<FiniteGroup> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::MalformedTable("empty input".into()))?;
    let order: usize = header
        .parse()
        .map_err(|_| Error::MalformedTable(format!("bad order line {header:?}")))?;
    if order == 0 {
        return Err(Error::MalformedTable("order must be positive".into()));
    }
    if order > opts.order_cap {
        return Err(Error::OrderTooLarge {
            order: order as u64,
            cap: opts.order_cap,
        });
    }
    let mut mul = Vec::with_capacity(order * order);
    let mut rows = 0;
    for (lineno, line) in lines {
        if rows == order {
            return Err(Error::MalformedTable(format!(
                "line {}: more than {order} rows",
                lineno + 1
            )));
        }
        let before = mul.len();
        for tok in line.split_whitespace() {
            let v: u32 = tok.parse().map_err(|_| {
                Error::MalformedTable(format!("line {}: bad entry {tok:?}", lineno + 1))
            })?;
            if v as usize >= order {
                return Err(Error::MalformedTable(format!(
                    "line {}: entry {v} not in [0, {order})",
                    lineno + 1
                )));
            }
            mul.push(v);
        }
        if mul.len() - before != order {
            return Err(Error::MalformedTable(format!(
                "line {}: expected {order} entries, found {}",
                lineno + 1,
                mul.len() - before
            )));
        }
        rows += 1;
    }
    if rows != order {
        return Err(Error::MalformedTable(format!("expected {order} rows, found {rows}")));
    }
    FiniteGroup::from_table(order, mul, Provenance::Imported, opts)
}

/// Renders a group in the Cayley table format.
pub fn render_cayley_table(g: &FiniteGroup) -> String {
    let n = g.order();
    let mut out = format!("{n}\n");
    for a in 0..n {
        let row: Vec<String> = (0..n).map(|b| g.mul(a, b).to_string()).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::NotAGroupReason;

    #[test]
    fn z3_table() {
        let g = from_cayley_table("# Z3\n3\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.provenance(), &Provenance::Imported);
    }

    #[test]
    fn max_table_has_no_inverses() {
        let text = "4\n0 1 2 3\n1 1 2 3\n2 2 2 3\n3 3 3 3\n";
        match from_cayley_table(text) {
            Err(Error::NotAGroup(NotAGroupReason::MissingInverse { element: 1 })) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn no_identity() {
        let text = "2\n1 0\n0 1\n";
        // 0*0 = 1, so 0 is not an identity; 1*x = x and x*1 = x, so 1 is.
        assert!(from_cayley_table(text).is_ok());
        let text = "2\n1 1\n1 1\n";
        assert!(matches!(
            from_cayley_table(text),
            Err(Error::NotAGroup(NotAGroupReason::NoIdentity))
        ));
    }

    #[test]
    fn non_associative_loop() {
        // A Latin square with identity 0 that is not associative (order-5 loop).
        let text = "5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n";
        assert!(matches!(
            from_cayley_table(text),
            Err(Error::NotAGroup(NotAGroupReason::NonAssociative { .. }))
        ));
    }

    #[test]
    fn malformed_inputs() {
        for bad in ["", "x\n", "2\n0 1\n", "2\n0 1\n1\n", "2\n0 1\n1 0\n0 1\n", "2\n0 2\n1 0\n"] {
            assert!(matches!(from_cayley_table(bad), Err(Error::MalformedTable(_))), "{bad:?}");
        }
    }

    #[test]
    fn render_round_trip() {
        let g = crate::group::construct_group(&crate::group::GroupSpec::Quaternion(3)).unwrap();
        let back = from_cayley_table(&render_cayley_table(&g)).unwrap();
        assert_eq!(back.table(), g.table());
    }
}
