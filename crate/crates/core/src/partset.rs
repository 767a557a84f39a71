//! Symbolic part sets, their finite materializations, and the text grammar
//! used to write them down.
//!
//! | text            | meaning                          |
//! |-----------------|----------------------------------|
//! | `{a,b,...}`     | explicit finite set              |
//! | `lo..hi`        | `[lo:hi]`                        |
//! | `lo..`          | every integer `>= lo`            |
//! | `mod(r,m)`      | `{a >= 1 : a ≡ r (mod m)}`       |
//! | `not{a,b,...}`  | `[1:n]` minus the listed values  |
//! | `not(m1..m2)`   | `[1:n]` minus `[m1:m2]`          |
//!
//! The two complement forms only make sense relative to the integer being
//! composed, so their finite denotation is fixed when `n` is supplied.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PartSet {
    Explicit(Vec<usize>),
    Range { lo: usize, hi: Option<usize> },
    Residue { r: usize, m: usize },
    ComplementSet(Vec<usize>),
    ComplementRange { m1: usize, m2: usize },
}

impl PartSet {
    pub fn explicit(values: Vec<usize>) -> Result<Self> {
        check_list(&values, "explicit set")?;
        Ok(PartSet::Explicit(values))
    }

    pub fn range(lo: usize, hi: Option<usize>) -> Result<Self> {
        if lo == 0 {
            return Err(Error::invalid("range lower bound must be at least 1"));
        }
        if let Some(hi) = hi {
            if hi < lo {
                return Err(Error::invalid(format!("empty range {lo}..{hi}")));
            }
        }
        Ok(PartSet::Range { lo, hi })
    }

    pub fn residue(r: usize, m: usize) -> Result<Self> {
        if r == 0 || m == 0 || r > m {
            return Err(Error::invalid(format!(
                "residue class needs 1 <= r <= m, got r={r}, m={m}"
            )));
        }
        Ok(PartSet::Residue { r, m })
    }

    pub fn complement_set(excluded: Vec<usize>) -> Result<Self> {
        check_list(&excluded, "excluded set")?;
        Ok(PartSet::ComplementSet(excluded))
    }

    pub fn complement_range(m1: usize, m2: usize) -> Result<Self> {
        if m1 == 0 || m2 < m1 {
            return Err(Error::invalid(format!(
                "excluded range needs 1 <= m1 <= m2, got {m1}..{m2}"
            )));
        }
        Ok(PartSet::ComplementRange { m1, m2 })
    }

    /// Membership ignoring any bound on the integer being composed. For the
    /// complement variants this is membership in `Z+ \ X`.
    pub fn denotes(&self, a: usize) -> bool {
        if a == 0 {
            return false;
        }
        match self {
            PartSet::Explicit(values) => values.binary_search(&a).is_ok(),
            PartSet::Range { lo, hi } => a >= *lo && hi.is_none_or(|hi| a <= hi),
            PartSet::Residue { r, m } => a % m == r % m,
            PartSet::ComplementSet(excluded) => excluded.binary_search(&a).is_err(),
            PartSet::ComplementRange { m1, m2 } => a < *m1 || a > *m2,
        }
    }

    /// `a ∈ S≤n`.
    pub fn contains(&self, a: usize, n: usize) -> bool {
        a >= 1 && a <= n && self.denotes(a)
    }

    /// `S≤n` as a strictly increasing vector, or `None` when it is empty.
    pub fn materialize(&self, n: usize) -> Option<PartVector> {
        let values: Vec<usize> = match self {
            PartSet::Explicit(values) => values.iter().copied().take_while(|&v| v <= n).collect(),
            PartSet::Range { lo, hi } => {
                let top = hi.map_or(n, |hi| hi.min(n));
                (*lo..=top).collect()
            }
            PartSet::Residue { r, m } => (*r..=n).step_by(*m).collect(),
            _ => (1..=n).filter(|&a| self.denotes(a)).collect(),
        };
        if values.is_empty() {
            None
        } else {
            Some(PartVector(values))
        }
    }

    /// Whether the set has a finite denotation. Complements count as finite
    /// because they are always read inside `[1:n]`.
    pub fn is_finite(&self) -> bool {
        match self {
            PartSet::Explicit(_) | PartSet::ComplementSet(_) | PartSet::ComplementRange { .. } => {
                true
            }
            PartSet::Range { hi, .. } => hi.is_some(),
            PartSet::Residue { .. } => false,
        }
    }

    pub fn canonical(&self) -> String {
        self.to_string()
    }
}

fn check_list(values: &[usize], what: &str) -> Result<()> {
    if values.is_empty() {
        return Err(Error::invalid(format!("{what} is empty")));
    }
    if values[0] == 0 {
        return Err(Error::invalid(format!(
            "{what} contains 0; parts are positive"
        )));
    }
    if values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid(format!(
            "{what} must be strictly increasing"
        )));
    }
    Ok(())
}

fn write_list(f: &mut fmt::Formatter<'_>, values: &[usize]) -> fmt::Result {
    f.write_str("{")?;
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    f.write_str("}")
}

impl fmt::Display for PartSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartSet::Explicit(values) => write_list(f, values),
            PartSet::Range { lo, hi: Some(hi) } => write!(f, "{lo}..{hi}"),
            PartSet::Range { lo, hi: None } => write!(f, "{lo}.."),
            PartSet::Residue { r, m } => write!(f, "mod({r},{m})"),
            PartSet::ComplementSet(excluded) => {
                f.write_str("not")?;
                write_list(f, excluded)
            }
            PartSet::ComplementRange { m1, m2 } => write!(f, "not({m1}..{m2})"),
        }
    }
}

impl FromStr for PartSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_set(s)
    }
}

/// The row vector of a finite set of positive integers: strictly increasing,
/// non-empty, every entry at least 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartVector(Vec<usize>);

impl PartVector {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        check_list(&values, "part vector")?;
        Ok(PartVector(values))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn min(&self) -> usize {
        self.0[0]
    }

    pub fn max(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl std::ops::Index<usize> for PartVector {
    type Output = usize;

    fn index(&self, i: usize) -> &usize {
        &self.0[i]
    }
}

pub fn parse_set(spec: &str) -> Result<PartSet> {
    let mut p = Parser { src: spec, pos: 0 };
    p.skip_ws();
    let set = p.set()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(set)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            message: message.into(),
        }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected a positive integer"));
        }
        let start = self.pos;
        let value = self.src[start..start + digits]
            .parse::<usize>()
            .map_err(|_| self.error("integer out of range"))?;
        self.pos += digits;
        Ok(value)
    }

    fn list(&mut self) -> Result<Vec<usize>> {
        self.expect("{")?;
        let mut values = vec![self.number()?];
        while self.eat(",") {
            values.push(self.number()?);
        }
        self.expect("}")?;
        Ok(values)
    }

    fn set(&mut self) -> Result<PartSet> {
        let start = self.pos;
        let with_pos = |e: Error| match e {
            Error::Invalid(msg) => Error::Syntax {
                pos: start,
                message: msg,
            },
            other => other,
        };
        if self.peek() == Some('{') {
            return PartSet::explicit(self.list()?).map_err(with_pos);
        }
        if self.eat("mod") {
            self.expect("(")?;
            let r = self.number()?;
            self.expect(",")?;
            let m = self.number()?;
            self.expect(")")?;
            return PartSet::residue(r, m).map_err(with_pos);
        }
        if self.eat("not") {
            self.skip_ws();
            if self.peek() == Some('{') {
                return PartSet::complement_set(self.list()?).map_err(with_pos);
            }
            self.expect("(")?;
            let m1 = self.number()?;
            self.expect("..")?;
            let m2 = self.number()?;
            self.expect(")")?;
            return PartSet::complement_range(m1, m2).map_err(with_pos);
        }
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let lo = self.number()?;
                self.expect("..")?;
                self.skip_ws();
                let hi = match self.peek() {
                    Some(c) if c.is_ascii_digit() => Some(self.number()?),
                    _ => None,
                };
                PartSet::range(lo, hi).map_err(with_pos)
            }
            _ => Err(self.error("expected `{`, a range, `mod(` or `not`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> PartSet {
        parse_set(s).unwrap()
    }

    #[test]
    fn parses_each_form() {
        assert_eq!(p("{3,5}"), PartSet::Explicit(vec![3, 5]));
        assert_eq!(p("mod(1,2)"), PartSet::Residue { r: 1, m: 2 });
        assert_eq!(p("not(2..3)"), PartSet::ComplementRange { m1: 2, m2: 3 });
        assert_eq!(p("not{2}"), PartSet::ComplementSet(vec![2]));
        assert_eq!(p("2.."), PartSet::Range { lo: 2, hi: None });
        assert_eq!(p(" 1 .. 5 "), PartSet::Range { lo: 1, hi: Some(5) });
    }

    #[test]
    fn rejects_bad_syntax_with_position() {
        match parse_set("{1,2") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        match parse_set("{1,x}") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_set("mod(1,2) x"),
            Err(Error::Syntax { pos: 9, .. })
        ));
        assert!(matches!(parse_set(""), Err(Error::Syntax { .. })));
        assert!(matches!(parse_set("-3"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn rejects_semantic_errors() {
        for bad in [
            "mod(3,2)",
            "{2,1}",
            "{1,1}",
            "{0,1}",
            "5..3",
            "not(4..2)",
            "0..",
            "mod(0,2)",
        ] {
            assert!(parse_set(bad).is_err(), "{bad} should fail");
        }
    }

    #[test]
    fn materialize_examples() {
        assert_eq!(
            PartSet::Residue { r: 1, m: 2 }
                .materialize(6)
                .unwrap()
                .as_slice(),
            &[1, 3, 5]
        );
        assert!(PartSet::Explicit(vec![3, 5]).materialize(2).is_none());
        assert_eq!(
            PartSet::ComplementRange { m1: 2, m2: 3 }
                .materialize(5)
                .unwrap()
                .as_slice(),
            &[1, 4, 5]
        );
        assert!(PartSet::Range { lo: 2, hi: None }.materialize(1).is_none());
        assert!(PartSet::Range { lo: 1, hi: None }.materialize(0).is_none());
    }

    #[test]
    fn contains_examples() {
        assert!(PartSet::Residue { r: 2, m: 3 }.contains(8, 10));
        assert!(!PartSet::ComplementSet(vec![2]).contains(2, 9));
        assert!(!PartSet::Range { lo: 2, hi: None }.contains(1, 9));
        assert!(!PartSet::Range { lo: 2, hi: None }.contains(10, 9));
        assert!(PartSet::Residue { r: 3, m: 3 }.contains(6, 6));
    }

    #[test]
    fn part_vector_rejects_bad_input() {
        assert!(PartVector::new(vec![]).is_err());
        assert!(PartVector::new(vec![2, 2]).is_err());
        assert!(PartVector::new(vec![0, 2]).is_err());
        let v = PartVector::new(vec![2, 5, 7]).unwrap();
        assert_eq!((v.min(), v.max(), v.len()), (2, 7, 3));
    }

    fn any_set() -> impl Strategy<Value = PartSet> {
        let list = prop::collection::btree_set(1usize..20, 1..5)
            .prop_map(|s| s.into_iter().collect::<Vec<_>>());
        prop_oneof![
            list.clone().prop_map(PartSet::Explicit),
            (1usize..10, prop::option::of(0usize..10)).prop_map(|(lo, extra)| PartSet::Range {
                lo,
                hi: extra.map(|e| lo + e)
            }),
            (1usize..8, 0usize..6).prop_map(|(r, extra)| PartSet::Residue { r, m: r + extra }),
            list.prop_map(PartSet::ComplementSet),
            (1usize..10, 0usize..6).prop_map(|(m1, d)| PartSet::ComplementRange { m1, m2: m1 + d }),
        ]
    }

    proptest! {
        #[test]
        fn canonical_form_round_trips(s in any_set()) {
            let text = s.canonical();
            let back = parse_set(&text).unwrap();
            prop_assert_eq!(&back, &s);
            prop_assert_eq!(back.canonical(), text);
        }

        #[test]
        fn materialize_matches_contains(s in any_set(), n in 0usize..40) {
            let members = s.materialize(n).map(PartVector::into_vec).unwrap_or_default();
            for a in 1..=n {
                prop_assert_eq!(s.contains(a, n), members.contains(&a));
            }
            prop_assert!(members.iter().all(|&a| (1..=n).contains(&a)));
            prop_assert!(members.windows(2).all(|w| w[0] < w[1]));
        }

        #[test]
        fn materialize_is_monotone_for_fixed_denotations(s in any_set(), n in 0usize..40) {
            if matches!(s, PartSet::Explicit(_) | PartSet::Range { .. } | PartSet::Residue { .. }) {
                let small = s.materialize(n).map(PartVector::into_vec).unwrap_or_default();
                let big = s.materialize(n + 1).map(PartVector::into_vec).unwrap_or_default();
                prop_assert!(small.iter().all(|a| big.contains(a)));
            }
        }
    }
}
