//! Integer weights of the diagonal torus of `GL_n`.
//!
//! A [`Weight`] is a fixed-length tuple of arbitrary-precision integers. The
//! textual form is the exponent shorthand `v` / `v^k` separated by commas, so
//! `"2,1^3,0^2"` is `(2,1,1,1,0,0)`. Whitespace is ignored, negative values are
//! allowed and a single pair of enclosing parentheses is accepted.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError};

/// Upper bound on the number of entries a parsed weight may expand to.
pub const MAX_PARSED_LEN: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight(Vec<BigInt>);

impl Weight {
    pub fn new(entries: Vec<BigInt>) -> Self {
        Weight(entries)
    }

    pub fn from_i64s(entries: &[i64]) -> Self {
        Weight(entries.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// The constant weight `(value^len)`.
    pub fn constant(value: impl Into<BigInt>, len: usize) -> Self {
        Weight(vec![value.into(); len])
    }

    pub fn zero(len: usize) -> Self {
        Weight(vec![BigInt::zero(); len])
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entries as `i64`, if they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|v| v.to_i64()).collect()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Dominant with a nonnegative last entry.
    pub fn is_partition(&self) -> bool {
        self.is_dominant() && self.0.last().is_none_or(|v| !v.is_negative())
    }

    pub fn sum(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn has_repeats(&self) -> bool {
        let mut sorted: Vec<&BigInt> = self.0.iter().collect();
        sorted.sort();
        sorted.windows(2).any(|w| w[0] == w[1])
    }

    /// Pads with zeros on the right up to `len`. Longer weights are returned as is.
    pub fn padded(&self, len: usize) -> Weight {
        let mut v = self.0.clone();
        if v.len() < len {
            v.resize(len, BigInt::zero());
        }
        Weight(v)
    }

    /// Componentwise sum.
    pub fn add(&self, other: &Weight) -> Result<Weight, Error> {
        if self.len() != other.len() {
            return Err(Error::InvalidSize {
                module: "weights",
                msg: format!("cannot add weights of lengths {} and {}", self.len(), other.len()),
            });
        }
        Ok(Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    /// Componentwise difference.
    pub fn sub(&self, other: &Weight) -> Result<Weight, Error> {
        if self.len() != other.len() {
            return Err(Error::InvalidSize {
                module: "weights",
                msg: format!("cannot subtract weights of lengths {} and {}", self.len(), other.len()),
            });
        }
        Ok(Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn concat(&self, other: &Weight) -> Weight {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Weight(v)
    }

    /// `(−w_n, …, −w_1)`: the highest weight of the dual representation.
    pub fn negate_reverse(&self) -> Weight {
        Weight(self.0.iter().rev().map(|v| -v).collect())
    }

    /// Adds `c` to every entry, i.e. tensors with the `c`-th power of the determinant.
    pub fn add_constant(&self, c: &BigInt) -> Weight {
        Weight(self.0.iter().map(|v| v + c).collect())
    }

    /// Shifts so that the last entry is zero; two `GL_n` weights agree as
    /// `SL_n` weights iff their normalizations agree.
    pub fn sl_normalized(&self) -> Weight {
        match self.0.last() {
            Some(last) => self.add_constant(&-last.clone()),
            None => self.clone(),
        }
    }

    /// Display form for partitions: trailing zeros dropped.
    pub fn display_partition(&self) -> String {
        let mut v = self.0.clone();
        while v.last().is_some_and(|x| x.is_zero()) {
            v.pop();
        }
        Weight(v).to_string()
    }

    /// Exponent shorthand, e.g. `2,1^3,0^2`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i + 1;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            if !out.is_empty() {
                out.push(',');
            }
            out.push_str(&self.0[i].to_string());
            if j - i > 1 {
                out.push('^');
                out.push_str(&(j - i).to_string());
            }
            i = j;
        }
        out
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for Weight {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_weight(s)
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.render())
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_weight(&s).map_err(serde::de::Error::custom)
    }
}

/// Parses the exponent shorthand. Positions in errors are byte offsets into `input`.
pub fn parse_weight(input: &str) -> Result<Weight, ParseError> {
    let chars: Vec<(usize, char)> = input
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut body: &[(usize, char)] = &chars;
    if let Some(&(pos, '(')) = body.first() {
        match body.last() {
            Some(&(_, ')')) if body.len() >= 2 => body = &body[1..body.len() - 1],
            _ => return Err(ParseError::new(pos, "unbalanced parenthesis")),
        }
    }
    let mut entries = Vec::new();
    if body.is_empty() {
        return Ok(Weight(entries));
    }
    let mut term_start = body[0].0;
    let mut terms = Vec::new();
    let mut current: Vec<(usize, char)> = Vec::new();
    for &(p, c) in body {
        if c == ',' {
            terms.push((term_start, std::mem::take(&mut current)));
            term_start = p + 1;
        } else {
            current.push((p, c));
        }
    }
    terms.push((term_start, current));
    for (start, term) in terms {
        let start = term.first().map_or(start, |&(p, _)| p);
        let term = term.as_slice();
        if term.is_empty() {
            return Err(ParseError::new(start, "empty term"));
        }
        let mut parts = term.splitn(2, |&(_, c)| c == '^');
        let value_chars = parts.next().unwrap_or(&[]);
        let value = parse_integer(value_chars, start)?;
        let count = match parts.next() {
            None => 1usize,
            Some(exp) => {
                let exp_pos = exp.first().map_or(start, |&(p, _)| p);
                let k = parse_integer(exp, exp_pos)?;
                if k < BigInt::one() {
                    return Err(ParseError::new(exp_pos, "exponent must be at least 1"));
                }
                match k.to_usize() {
                    Some(k) if k <= MAX_PARSED_LEN => k,
                    _ => return Err(ParseError::new(exp_pos, "exponent too large")),
                }
            }
        };
        if entries.len() + count > MAX_PARSED_LEN {
            return Err(ParseError::new(start, "weight too long"));
        }
        entries.extend(std::iter::repeat_n(value, count));
    }
    Ok(Weight(entries))
}

fn parse_integer(chars: &[(usize, char)], pos: usize) -> Result<BigInt, ParseError> {
    let text: String = chars.iter().map(|&(_, c)| c).collect();
    let digits = text.strip_prefix('-').or_else(|| text.strip_prefix('+')).unwrap_or(&text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        let at = chars
            .iter()
            .find(|&&(_, c)| !(c.is_ascii_digit() || c == '-' || c == '+'))
            .map_or(pos, |&(p, _)| p);
        return Err(ParseError::new(at, format!("expected an integer, found `{text}`")));
    }
    text.parse::<BigInt>()
        .map_err(|e| ParseError::new(pos, format!("bad integer `{text}`: {e}")))
}

/// `(n−1, n−2, …, 0)`.
pub fn staircase(n: usize) -> Result<Weight, Error> {
    if n == 0 {
        return Err(Error::InvalidSize {
            module: "weights",
            msg: "staircase needs n >= 1".into(),
        });
    }
    Ok(Weight((0..n).rev().map(BigInt::from).collect()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SortResult {
    pub sorted: Weight,
    /// Number of pairs `i < j` with `w_i < w_j`.
    pub swaps: u64,
    pub has_repeats: bool,
}

/// Sorts into non-increasing order, counting the adjacent transpositions used.
pub fn sort_with_inversions(w: &Weight) -> SortResult {
    let mut v: Vec<BigInt> = w.0.clone();
    let swaps = merge_count(&mut v);
    let has_repeats = v.windows(2).any(|p| p[0] == p[1]);
    SortResult { sorted: Weight(v), swaps, has_repeats }
}

// Merge sort into non-increasing order; returns the number of strict inversions.
fn merge_count(v: &mut Vec<BigInt>) -> u64 {
    if v.len() < 2 {
        return 0;
    }
    let mut right = v.split_off(v.len() / 2);
    let mut count = merge_count(v) + merge_count(&mut right);
    let left = std::mem::take(v);
    let (mut i, mut j) = (0, 0);
    while i < left.len() && j < right.len() {
        // Ties keep their order: equal entries are never counted.
        if left[i] >= right[j] {
            v.push(left[i].clone());
            i += 1;
        } else {
            count += (left.len() - i) as u64;
            v.push(right[j].clone());
            j += 1;
        }
    }
    v.extend_from_slice(&left[i..]);
    v.extend_from_slice(&right[j..]);
    count
}

/// Outcome of `sort(γ + δ) − δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tilde {
    /// `γ + δ` has a repeated entry.
    Singular,
    Regular { weight: Weight, swaps: u64 },
}

pub fn tilde(gamma: &Weight, n: usize) -> Result<Tilde, Error> {
    if gamma.len() != n {
        return Err(Error::InvalidSize {
            module: "weights",
            msg: format!("weight has length {} but n = {n}", gamma.len()),
        });
    }
    let delta = staircase(n)?;
    let shifted = gamma.add(&delta)?;
    let sorted = sort_with_inversions(&shifted);
    if sorted.has_repeats {
        return Ok(Tilde::Singular);
    }
    Ok(Tilde::Regular { weight: sorted.sorted.sub(&delta)?, swaps: sorted.swaps })
}

/// A partition: weakly decreasing, nonnegative, stored without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, Error> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::NotDominant {
                module: "weights",
                msg: format!("{parts:?} is not weakly decreasing"),
            });
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The rectangle `(value^len)`.
    pub fn rectangle(value: usize, len: usize) -> Self {
        if value == 0 {
            return Partition::empty();
        }
        Partition(vec![value; len])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && (0..other.length()).all(|i| self.0[i] >= other.0[i])
    }

    pub fn to_weight(&self, len: usize) -> Weight {
        let mut v: Vec<BigInt> = self.0.iter().map(|&p| BigInt::from(p)).collect();
        v.resize(len.max(v.len()), BigInt::zero());
        Weight(v)
    }

    /// All partitions of `k` with at most `max_len` parts, in reverse lexicographic order.
    pub fn all_of(k: usize, max_len: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        partitions_rec(k, k, max_len, &mut current, &mut out);
        out
    }
}

fn partitions_rec(
    remaining: usize,
    max_part: usize,
    max_len: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    if current.len() == max_len {
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        partitions_rec(remaining - p, p, max_len, current, out);
        current.pop();
    }
}

impl TryFrom<&Weight> for Partition {
    type Error = Error;

    fn try_from(w: &Weight) -> Result<Self, Error> {
        if !w.is_partition() {
            return Err(Error::NotDominant {
                module: "weights",
                msg: format!("({w}) is not a partition"),
            });
        }
        let parts = w
            .entries()
            .iter()
            .map(|v| {
                v.to_usize().ok_or_else(|| Error::InvalidSize {
                    module: "weights",
                    msg: format!("part {v} too large"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.to_weight(0);
        f.write_str(&w.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight::from_i64s(v)
    }

    #[test]
    fn staircase_examples() {
        assert_eq!(staircase(4).unwrap(), w(&[3, 2, 1, 0]));
        assert_eq!(staircase(1).unwrap(), w(&[0]));
        assert_eq!(staircase(6).unwrap(), w(&[5, 4, 3, 2, 1, 0]));
        assert!(staircase(0).is_err());
    }

    #[test]
    fn sort_examples() {
        let s = sort_with_inversions(&w(&[2, 0, 1, -1]));
        assert_eq!(s.sorted, w(&[2, 1, 0, -1]));
        assert_eq!(s.swaps, 1);
        assert!(!s.has_repeats);

        let s = sort_with_inversions(&w(&[3, 2, 1, 0]));
        assert_eq!(s.swaps, 0);
        assert_eq!(s.sorted, w(&[3, 2, 1, 0]));

        assert!(sort_with_inversions(&w(&[4, 2, 1, 1, -1])).has_repeats);
    }

    #[test]
    fn tilde_examples() {
        assert_eq!(
            tilde(&w(&[-1, -2, 0, -1]), 4).unwrap(),
            Tilde::Regular { weight: w(&[-1, -1, -1, -1]), swaps: 1 }
        );
        assert_eq!(
            tilde(&w(&[3, 1, 1, 0]), 4).unwrap(),
            Tilde::Regular { weight: w(&[3, 1, 1, 0]), swaps: 0 }
        );
        assert_eq!(tilde(&w(&[0, -1, -1, 0, -1]), 5).unwrap(), Tilde::Singular);
        assert!(tilde(&w(&[0, 1]), 3).is_err());
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(w(&[2, 1, 0]).negate_reverse(), w(&[0, -1, -2]));
        assert_eq!(w(&[3]).concat(&w(&[0, -1])), w(&[3, 0, -1]));
        assert_eq!(w(&[1, 0]).add_constant(&BigInt::from(-1)), w(&[0, -1]));
        assert!(w(&[1, 0]).add(&w(&[1])).is_err());
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(parse_weight("2,1^3,0^2").unwrap(), w(&[2, 1, 1, 1, 0, 0]));
        assert_eq!(parse_weight(" ( -1 ^ 4 ) ").unwrap(), w(&[-1, -1, -1, -1]));
        assert_eq!(parse_weight("").unwrap(), w(&[]));
        assert_eq!(w(&[1, 1, 1, 0, 0]).render(), "1^3,0^2");
        assert_eq!(w(&[3, 2, 1, 0, 0]).display_partition(), "3,2,1");
        let err = parse_weight("1,,2").unwrap_err();
        assert_eq!(err.position, 2);
        let err = parse_weight("1,x").unwrap_err();
        assert_eq!(err.position, 2);
        assert!(parse_weight("1^0").is_err());
        assert!(parse_weight("(1,2").is_err());
        assert!(parse_weight("1^99999999999999999999").is_err());
    }

    #[test]
    fn partitions_enumeration() {
        let p3: Vec<_> = Partition::all_of(3, 2).iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(p3, vec![vec![3], vec![2, 1]]);
        assert_eq!(Partition::all_of(0, 3), vec![Partition::empty()]);
        assert_eq!(Partition::all_of(5, 5).len(), 7);
    }
}
