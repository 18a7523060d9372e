//! The group spec mini-language: `Z6`, `Q16`, `D8`, `E3^2`, `H3`, `file:"path"`,
//! joined by `x` into direct products.

use std::fmt;
use std::path::PathBuf;

use crate::arith::is_prime;
use crate::error::{Error, Result};

/// A group described by constructor atoms and direct products.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    /// Cyclic group of order `n`.
    Cyclic(u64),
    /// Generalized quaternion group of order `2^k`, `k >= 3`.
    Quaternion(u32),
    /// Dihedral group of order `2n` (symmetries of an `n`-gon), `n >= 3`.
    Dihedral(u64),
    ElementaryAbelian { p: u64, rank: u32 },
    /// Heisenberg group of upper unitriangular 3x3 matrices over `F_p`, `p` odd.
    Heisenberg(u64),
    CayleyFile(PathBuf),
    DirectProduct(Vec<GroupSpec>),
}

impl GroupSpec {
    /// Group order, when it can be known without reading files.
    pub fn order(&self) -> Option<u64> {
        match self {
            GroupSpec::Cyclic(n) => Some(*n),
            GroupSpec::Quaternion(k) => 1u64.checked_shl(*k),
            GroupSpec::Dihedral(n) => n.checked_mul(2),
            GroupSpec::ElementaryAbelian { p, rank } => p.checked_pow(*rank),
            GroupSpec::Heisenberg(p) => p.checked_pow(3),
            GroupSpec::CayleyFile(_) => None,
            GroupSpec::DirectProduct(fs) => fs
                .iter()
                .try_fold(1u64, |acc, f| acc.checked_mul(f.order()?)),
        }
    }

    /// Checks the atom parameter constraints.
    pub fn validate(&self) -> Result<()> {
        match self {
            GroupSpec::Cyclic(0) => Err(Error::InvalidCyclicOrder { n: 0 }),
            GroupSpec::Quaternion(k) if *k < 3 || *k > 62 => Err(Error::InvalidQuaternionOrder {
                order: 1u64.checked_shl(*k).unwrap_or(0),
            }),
            GroupSpec::Dihedral(n) if *n < 3 => {
                Err(Error::InvalidDihedralOrder { order: n * 2 })
            }
            GroupSpec::ElementaryAbelian { p, rank } if !is_prime(*p) || *rank == 0 => {
                Err(Error::InvalidElementaryAbelian { p: *p, rank: *rank })
            }
            GroupSpec::Heisenberg(p) if *p == 2 || !is_prime(*p) => {
                Err(Error::InvalidHeisenbergPrime { p: *p })
            }
            GroupSpec::DirectProduct(fs) => fs.iter().try_for_each(GroupSpec::validate),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "Z{n}"),
            GroupSpec::Quaternion(k) => write!(f, "Q{}", 1u64 << k),
            GroupSpec::Dihedral(n) => write!(f, "D{}", 2 * n),
            GroupSpec::ElementaryAbelian { p, rank } => write!(f, "E{p}^{rank}"),
            GroupSpec::Heisenberg(p) => write!(f, "H{p}"),
            GroupSpec::CayleyFile(path) => write!(f, "file:\"{}\"", path.display()),
            GroupSpec::DirectProduct(fs) => {
                for (i, factor) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    write!(f, "{factor}")?;
                }
                Ok(())
            }
        }
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_group_spec(s)
    }
}

/// Parses the spec mini-language. Nested products are flattened.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    let mut parser = Parser {
        text,
        chars: text.char_indices().peekable(),
    };
    let mut atoms = Vec::new();
    loop {
        parser.skip_ws();
        atoms.push(parser.atom()?);
        parser.skip_ws();
        match parser.chars.next() {
            None => break,
            Some((_, 'x')) | Some((_, '×')) => continue,
            Some((i, c)) => return Err(parser.error(format!("unexpected {c:?} at byte {i}"))),
        }
    }
    let spec = if atoms.len() == 1 {
        atoms.pop().unwrap()
    } else {
        GroupSpec::DirectProduct(atoms)
    };
    spec.validate()?;
    Ok(spec)
}

struct Parser<'a> {
    text: &'a str,
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
}

impl Parser<'_> {
    fn error(&self, reason: impl Into<String>) -> Error {
        Error::MalformedSpec {
            text: self.text.to_string(),
            reason: reason.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.next_if(|(_, c)| c.is_whitespace()).is_some() {}
    }

    fn number(&mut self) -> Result<u64> {
        let mut digits = String::new();
        while let Some((_, c)) = self.chars.next_if(|(_, c)| c.is_ascii_digit()) {
            digits.push(c);
        }
        if digits.is_empty() {
            return Err(self.error("expected a number"));
        }
        digits
            .parse()
            .map_err(|_| self.error(format!("number {digits} out of range")))
    }

    fn atom(&mut self) -> Result<GroupSpec> {
        let Some((start, c)) = self.chars.next() else {
            return Err(self.error("expected a group atom"));
        };
        match c {
            'Z' => Ok(GroupSpec::Cyclic(self.number()?)),
            'Q' => {
                let order = self.number()?;
                match order.checked_ilog2() {
                    Some(k) if k >= 3 && order.is_power_of_two() => Ok(GroupSpec::Quaternion(k)),
                    _ => Err(Error::InvalidQuaternionOrder { order }),
                }
            }
            'D' => {
                let order = self.number()?;
                if order < 6 || order % 2 != 0 {
                    return Err(Error::InvalidDihedralOrder { order });
                }
                Ok(GroupSpec::Dihedral(order / 2))
            }
            'E' => {
                let p = self.number()?;
                if self.chars.next_if(|(_, c)| *c == '^').is_none() {
                    return Err(self.error("expected '^' after elementary abelian base"));
                }
                let rank = self.number()?;
                let rank = u32::try_from(rank).map_err(|_| self.error("rank out of range"))?;
                Ok(GroupSpec::ElementaryAbelian { p, rank })
            }
            'H' => Ok(GroupSpec::Heisenberg(self.number()?)),
            'f' if self.text[start..].starts_with("file:") => {
                for _ in 0.."ile:".len() {
                    self.chars.next();
                }
                self.path()
            }
            other => Err(self.error(format!("unknown atom starting with {other:?}"))),
        }
    }

    /// `file:"quoted path"` or `file:path` running to the end of the input.
    fn path(&mut self) -> Result<GroupSpec> {
        if self.chars.next_if(|(_, c)| *c == '"').is_some() {
            let mut path = String::new();
            loop {
                match self.chars.next() {
                    Some((_, '"')) => break,
                    Some((_, c)) => path.push(c),
                    None => return Err(self.error("unterminated quoted path")),
                }
            }
            if path.is_empty() {
                return Err(self.error("empty file path"));
            }
            return Ok(GroupSpec::CayleyFile(PathBuf::from(path)));
        }
        let path: String = self.chars.by_ref().map(|(_, c)| c).collect();
        let path = path.trim_end();
        if path.is_empty() {
            return Err(self.error("empty file path"));
        }
        Ok(GroupSpec::CayleyFile(PathBuf::from(path)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn single_and_product_atoms() {
        assert_eq!(parse_group_spec("Z6").unwrap(), GroupSpec::Cyclic(6));
        assert_eq!(
            parse_group_spec("E3^2xQ8").unwrap(),
            GroupSpec::DirectProduct(vec![
                GroupSpec::ElementaryAbelian { p: 3, rank: 2 },
                GroupSpec::Quaternion(3),
            ])
        );
        assert_eq!(parse_group_spec("D8").unwrap(), GroupSpec::Dihedral(4));
        assert_eq!(parse_group_spec(" H3 x Z2 ").unwrap().to_string(), "H3xZ2");
        assert_eq!(
            parse_group_spec("Z2xfile:\"my x.txt\"").unwrap(),
            GroupSpec::DirectProduct(vec![
                GroupSpec::Cyclic(2),
                GroupSpec::CayleyFile("my x.txt".into())
            ])
        );
        assert_eq!(
            parse_group_spec("file:tables/s3.txt").unwrap(),
            GroupSpec::CayleyFile("tables/s3.txt".into())
        );
    }

    #[test]
    fn rejects_bad_atoms() {
        assert!(matches!(
            parse_group_spec("Q7"),
            Err(Error::InvalidQuaternionOrder { order: 7 })
        ));
        assert!(matches!(
            parse_group_spec("Q4"),
            Err(Error::InvalidQuaternionOrder { order: 4 })
        ));
        assert!(matches!(parse_group_spec("H2"), Err(Error::InvalidHeisenbergPrime { p: 2 })));
        assert!(matches!(parse_group_spec("H9"), Err(Error::InvalidHeisenbergPrime { p: 9 })));
        assert!(matches!(
            parse_group_spec("E4^2"),
            Err(Error::InvalidElementaryAbelian { p: 4, .. })
        ));
        assert!(matches!(parse_group_spec("Z0"), Err(Error::InvalidCyclicOrder { .. })));
        assert!(matches!(parse_group_spec("D7"), Err(Error::InvalidDihedralOrder { .. })));
        for bad in ["", "Z", "Zx", "Y3", "Z3xx", "E3", "Z3 Z4", "file:"] {
            assert!(parse_group_spec(bad).is_err(), "{bad:?} should fail");
        }
    }

    fn atom() -> impl Strategy<Value = GroupSpec> {
        prop_oneof![
            (1u64..500).prop_map(GroupSpec::Cyclic),
            (3u32..12).prop_map(GroupSpec::Quaternion),
            (3u64..100).prop_map(GroupSpec::Dihedral),
            (prop::sample::select(vec![2u64, 3, 5, 7]), 1u32..5)
                .prop_map(|(p, rank)| GroupSpec::ElementaryAbelian { p, rank }),
            prop::sample::select(vec![3u64, 5, 7, 11]).prop_map(GroupSpec::Heisenberg),
            "[a-z/._ ]{1,12}".prop_map(|s| GroupSpec::CayleyFile(s.into())),
        ]
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(atoms in prop::collection::vec(atom(), 1..4)) {
            let spec = if atoms.len() == 1 {
                atoms[0].clone()
            } else {
                GroupSpec::DirectProduct(atoms)
            };
            let text = spec.to_string();
            let parsed = parse_group_spec(&text).unwrap();
            prop_assert_eq!(&parsed, &spec);
            prop_assert_eq!(parsed.to_string(), text);
        }
    }
}
