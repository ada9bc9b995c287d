//! Exact sparse linear algebra over `ℚ` on integer matrices.
//!
//! Ranks use incremental fraction-free row echelon form: every stored row is
//! a primitive integer vector, and reducing a row against a pivot multiplies
//! through by the pivot's leading coefficient instead of dividing. The `i64`
//! path uses checked arithmetic and restarts in `BigInt` on overflow, so the
//! result is always exact.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::ParseError;

/// Sparse vector: strictly increasing column indices, no zero entries.
pub type SparseRow = Vec<(usize, i64)>;

trait Scalar: Clone + PartialEq {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn sub(&self, other: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    /// Exact division; the caller guarantees divisibility.
    fn div(&self, other: &Self) -> Self;
    fn is_unit(&self) -> bool;
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    // i64::MIN is excluded so that gcd and negation cannot overflow.
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other).filter(|&v| v != i64::MIN)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other).filter(|&v| v != i64::MIN)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn is_unit(&self) -> bool {
        self.abs() == 1
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
}

/// Divides by the gcd of the entries and makes the leading entry positive.
fn make_primitive<T: Scalar + Signedish>(row: &mut [(usize, T)]) {
    let Some(first) = row.first() else { return };
    let mut g = first.1.clone();
    for (_, v) in row.iter().skip(1) {
        if g.is_unit() {
            break;
        }
        g = g.gcd(v);
    }
    if first.1.is_negative_value() {
        g = g.negated();
    }
    if !(g.is_unit() && !g.is_negative_value()) {
        for (_, v) in row.iter_mut() {
            *v = v.div(&g);
        }
    }
}

trait Signedish {
    fn is_negative_value(&self) -> bool;
    fn negated(&self) -> Self;
}

impl Signedish for i64 {
    fn is_negative_value(&self) -> bool {
        *self < 0
    }
    fn negated(&self) -> Self {
        -*self
    }
}

impl Signedish for BigInt {
    fn is_negative_value(&self) -> bool {
        Signed::is_negative(self)
    }
    fn negated(&self) -> Self {
        -self
    }
}

/// `a·row − b·pivot` where both share the leading column; drops that column.
fn eliminate<T: Scalar + Signedish>(row: &[(usize, T)], pivot: &[(usize, T)]) -> Option<Vec<(usize, T)>> {
    let g = row[0].1.gcd(&pivot[0].1);
    let a = pivot[0].1.div(&g);
    let b = row[0].1.div(&g);
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let take_row = j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_piv = i >= row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        let (col, v) = if take_row {
            let v = row[i].1.mul(&a)?;
            i += 1;
            (row[i - 1].0, v)
        } else if take_piv {
            let v = T::from_i64(0).sub(&pivot[j].1.mul(&b)?)?;
            j += 1;
            (pivot[j - 1].0, v)
        } else {
            let v = row[i].1.mul(&a)?.sub(&pivot[j].1.mul(&b)?)?;
            i += 1;
            j += 1;
            (row[i - 1].0, v)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    make_primitive(&mut out);
    Some(out)
}

/// Incremental echelon form; `None` on overflow.
struct Echelon<T> {
    pivots: HashMap<usize, Vec<(usize, T)>>,
}

impl<T: Scalar + Signedish> Echelon<T> {
    fn new() -> Self {
        Echelon { pivots: HashMap::new() }
    }

    /// Returns whether `row` was independent of the rows inserted so far.
    fn insert(&mut self, mut row: Vec<(usize, T)>) -> Option<bool> {
        make_primitive(&mut row);
        loop {
            let Some(&(lead, _)) = row.first() else { return Some(false) };
            match self.pivots.get(&lead) {
                Some(p) => row = eliminate(&row, p)?,
                None => {
                    self.pivots.insert(lead, row);
                    return Some(true);
                }
            }
        }
    }
}

fn rank_with<T: Scalar + Signedish>(rows: &[SparseRow]) -> Option<usize> {
    if rows.iter().flatten().any(|&(_, v)| v == i64::MIN) && T::from_i64(1).mul(&T::from_i64(i64::MIN)).is_none() {
        return None;
    }
    let mut e = Echelon::<T>::new();
    let mut rank = 0;
    // Short rows first keeps pivots sparse.
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by_key(|&i| (rows[i].len(), i));
    for i in order {
        let row: Vec<(usize, T)> = rows[i].iter().map(|&(c, v)| (c, T::from_i64(v))).collect();
        if e.insert(row)? {
            rank += 1;
        }
    }
    Some(rank)
}

/// Exact rank of the span of `rows`.
pub fn rank_exact(rows: &[SparseRow]) -> usize {
    rank_with::<i64>(rows).unwrap_or_else(|| rank_with::<BigInt>(rows).expect("BigInt elimination cannot overflow"))
}

/// Two primes above `2^31`.
pub const PRIMES: [u64; 2] = [4_294_967_311, 2_305_843_009_213_693_951];

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat: p is prime.
    let mut result: u128 = 1;
    let mut base = a as u128 % p as u128;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    result as u64
}

/// Rank modulo the prime `p`; a lower bound for the rank over `ℚ`.
pub fn rank_mod_p(rows: &[SparseRow], p: u64) -> usize {
    let reduce = |v: i64| -> u64 { (v as i128).rem_euclid(p as i128) as u64 };
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    let mut rank = 0;
    for r in rows {
        let mut row: Vec<(usize, u64)> =
            r.iter().filter_map(|&(c, v)| Some((c, reduce(v))).filter(|e| e.1 != 0)).collect();
        while let Some(&(lead, lv)) = row.first() {
            match pivots.get(&lead) {
                Some(piv) => {
                    // Pivots are monic, so subtract lv·pivot.
                    let mut out = Vec::with_capacity(row.len() + piv.len());
                    let (mut i, mut j) = (1, 1);
                    while i < row.len() || j < piv.len() {
                        if j >= piv.len() || (i < row.len() && row[i].0 < piv[j].0) {
                            out.push(row[i]);
                            i += 1;
                        } else {
                            let sub = (lv as u128 * piv[j].1 as u128 % p as u128) as u64;
                            let (col, base) = if i < row.len() && row[i].0 == piv[j].0 {
                                i += 1;
                                (row[i - 1].0, row[i - 1].1)
                            } else {
                                (piv[j].0, 0)
                            };
                            j += 1;
                            let v = (base as u128 + p as u128 - sub as u128) % p as u128;
                            if v != 0 {
                                out.push((col, v as u64));
                            }
                        }
                    }
                    row = out;
                }
                None => {
                    let inv = mod_inv(lv, p);
                    for e in row.iter_mut() {
                        e.1 = (e.1 as u128 * inv as u128 % p as u128) as u64;
                    }
                    pivots.insert(lead, row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RankMethod {
    /// Certified rank over `ℚ`.
    #[default]
    Exact,
    /// Rank modulo two primes; exact elimination runs when they disagree.
    Modular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RankResult {
    pub rank: usize,
    pub certified: bool,
}

pub fn rank(rows: &[SparseRow], method: RankMethod) -> RankResult {
    match method {
        RankMethod::Exact => RankResult { rank: rank_exact(rows), certified: true },
        RankMethod::Modular => {
            let a = rank_mod_p(rows, PRIMES[0]);
            let b = rank_mod_p(rows, PRIMES[1]);
            if a == b {
                RankResult { rank: a, certified: false }
            } else {
                RankResult { rank: rank_exact(rows), certified: true }
            }
        }
    }
}

/// Basis of `{v : Σ_j v_j · column_j = 0}` for a matrix given by its columns,
/// each basis vector primitive integral. Dense; meant for small systems.
pub fn kernel_of_columns(columns: &[SparseRow]) -> Vec<Vec<BigInt>> {
    let ncols = columns.len();
    let mut row_index: HashMap<usize, usize> = HashMap::new();
    for c in columns {
        for &(r, _) in c {
            let next = row_index.len();
            row_index.entry(r).or_insert(next);
        }
    }
    let nrows = row_index.len();
    let mut m = vec![vec![BigRational::zero(); ncols]; nrows];
    for (j, c) in columns.iter().enumerate() {
        for &(r, v) in c {
            m[row_index[&r]][j] = BigRational::from_integer(BigInt::from(v));
        }
    }
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..nrows).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for v in m[row].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot = std::mem::take(&mut m[row]);
        for (i, target) in m.iter_mut().enumerate() {
            if i != row && !target[col].is_zero() {
                let f = target[col].clone();
                for (t, pv) in target.iter_mut().zip(&pivot) {
                    if !pv.is_zero() {
                        *t -= pv * &f;
                    }
                }
            }
        }
        m[row] = pivot;
        pivot_cols.push(col);
        row += 1;
        if row == nrows {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); ncols];
            v[f] = BigRational::one();
            for (i, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -m[i][f].clone();
            }
            let den = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(den.clone())).to_integer()).collect();
            let g = ints.iter().fold(BigInt::zero(), |acc, x| Integer::gcd(&acc, x));
            ints.into_iter().map(|x| x / &g).collect()
        })
        .collect()
}

/// Matrix in coordinate form, used for dumps.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TripletMatrix {
    pub rows: usize,
    pub cols: usize,
    /// `(row, col, value)`, sorted, unique positions, nonzero values.
    pub entries: Vec<(usize, usize, i64)>,
}

pub const TRIPLET_HEADER: &str = "%%bottcalc-triplet 1";

impl TripletMatrix {
    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[SparseRow], rows: usize) -> Self {
        let mut entries: Vec<(usize, usize, i64)> =
            columns.iter().enumerate().flat_map(|(j, c)| c.iter().map(move |&(i, v)| (i, j, v))).collect();
        entries.sort_unstable();
        TripletMatrix { rows, cols: columns.len(), entries }
    }

    /// Text form: header line, optional `%` comment lines, `rows cols nnz`,
    /// then one zero-based `row col value` line per entry.
    pub fn to_text(&self, comment: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{TRIPLET_HEADER}");
        for line in comment.lines() {
            let _ = writeln!(s, "% {line}");
        }
        let _ = writeln!(s, "{} {} {}", self.rows, self.cols, self.entries.len());
        for (i, j, v) in &self.entries {
            let _ = writeln!(s, "{i} {j} {v}");
        }
        s
    }

    pub fn parse(input: &str) -> Result<Self, ParseError> {
        let mut offset = 0;
        let mut lines = input.split_inclusive('\n').map(|l| {
            let start = offset;
            offset += l.len();
            (start, l.trim_end_matches(['\n', '\r']))
        });
        match lines.next() {
            Some((_, h)) if h.trim() == TRIPLET_HEADER => {}
            _ => return Err(ParseError::new(0, format!("expected header `{TRIPLET_HEADER}`"))),
        }
        let mut body = lines.filter(|(_, l)| !l.trim_start().starts_with('%') && !l.trim().is_empty());
        let (pos, dims) = body.next().ok_or_else(|| ParseError::new(input.len(), "missing dimension line"))?;
        let nums = parse_fields(dims, pos, 3)?;
        let (rows, cols, nnz) = (nums[0], nums[1], nums[2]);
        let mut entries = Vec::new();
        for (pos, line) in body {
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 3 {
                return Err(ParseError::new(pos, "expected `row col value`"));
            }
            let i: usize = f[0].parse().map_err(|_| ParseError::new(pos, "bad row index"))?;
            let j: usize = f[1].parse().map_err(|_| ParseError::new(pos, "bad column index"))?;
            let v: i64 = f[2].parse().map_err(|_| ParseError::new(pos, "bad value"))?;
            if i >= rows || j >= cols {
                return Err(ParseError::new(pos, format!("entry ({i},{j}) outside {rows}x{cols}")));
            }
            if v == 0 {
                return Err(ParseError::new(pos, "explicit zero entry"));
            }
            if let Some(&(pi, pj, _)) = entries.last() {
                if (pi, pj) >= (i, j) {
                    return Err(ParseError::new(pos, "entries must be strictly increasing by (row, col)"));
                }
            }
            entries.push((i, j, v));
            if entries.len() > nnz {
                return Err(ParseError::new(pos, "more entries than declared"));
            }
        }
        if entries.len() != nnz {
            return Err(ParseError::new(input.len(), format!("declared {nnz} entries, found {}", entries.len())));
        }
        Ok(TripletMatrix { rows, cols, entries })
    }

    /// Columns as sparse vectors.
    pub fn columns(&self) -> Vec<SparseRow> {
        let mut out = vec![Vec::new(); self.cols];
        for &(i, j, v) in &self.entries {
            out[j].push((i, v));
        }
        out
    }
}

fn parse_fields(line: &str, pos: usize, count: usize) -> Result<Vec<usize>, ParseError> {
    let f: Vec<&str> = line.split_whitespace().collect();
    if f.len() != count {
        return Err(ParseError::new(pos, format!("expected {count} integers")));
    }
    f.iter()
        .map(|s| s.parse::<usize>().map_err(|_| ParseError::new(pos, format!("bad integer `{s}`"))))
        .collect()
}

/// Integral vector entries as `i64`, if they fit.
pub fn to_i64_vec(v: &[BigInt]) -> Option<Vec<i64>> {
    v.iter().map(|x| x.to_i64()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: &[&[i64]]) -> Vec<SparseRow> {
        rows.iter()
            .map(|r| r.iter().enumerate().filter(|(_, &v)| v != 0).map(|(i, &v)| (i, v)).collect())
            .collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank_exact(&dense(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank_exact(&dense(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])), 2);
        assert_eq!(rank_exact(&dense(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank_exact(&dense(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]])), 3);
    }

    #[test]
    fn overflow_falls_back() {
        let big = i64::MAX / 3;
        let rows = dense(&[&[big, big - 1, 7], &[big - 2, big, 11], &[1, 1, 1]]);
        let r = rank_exact(&rows);
        assert_eq!(r, rank_with::<BigInt>(&rows).unwrap());
        assert_eq!(r, 3);
    }

    #[test]
    fn modular_agrees() {
        let rows = dense(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 0, 1], &[1, 3, 3, 5]]);
        assert_eq!(rank_exact(&rows), 2);
        assert_eq!(rank_mod_p(&rows, PRIMES[0]), 2);
        assert_eq!(rank(&rows, RankMethod::Modular).rank, 2);
    }

    #[test]
    fn modular_rank_drops_at_prime() {
        let p = PRIMES[0] as i64;
        let rows = dense(&[&[p, 0], &[0, 1]]);
        assert_eq!(rank_mod_p(&rows, PRIMES[0]), 1);
        assert_eq!(rank_exact(&rows), 2);
        let r = rank(&rows, RankMethod::Modular);
        assert_eq!(r, RankResult { rank: 2, certified: true });
    }

    #[test]
    fn kernel_basis() {
        // columns (1,0), (0,1), (1,1): kernel spanned by (1,1,-1)
        let cols = dense(&[&[1, 0], &[0, 1], &[1, 1]]);
        let k = kernel_of_columns(&cols);
        assert_eq!(k.len(), 1);
        let v = to_i64_vec(&k[0]).unwrap();
        assert!(v == vec![1, 1, -1] || v == vec![-1, -1, 1]);
    }

    #[test]
    fn triplet_round_trip() {
        let cols = dense(&[&[1, 0, -2], &[0, 0, 0], &[5, 7, 0]]);
        let m = TripletMatrix::from_columns(&cols, 3);
        let text = m.to_text("example\nsecond line");
        let back = TripletMatrix::parse(&text).unwrap();
        assert_eq!(back, m);
        assert_eq!(back.columns(), cols);
    }

    #[test]
    fn triplet_errors() {
        assert!(TripletMatrix::parse("").is_err());
        assert!(TripletMatrix::parse("%%bottcalc-triplet 1\n2 2 1\n2 0 1\n").is_err());
        assert!(TripletMatrix::parse("%%bottcalc-triplet 1\n2 2 2\n0 0 1\n").is_err());
        assert!(TripletMatrix::parse("%%bottcalc-triplet 1\n2 2 2\n1 0 1\n0 0 1\n").is_err());
        let e = TripletMatrix::parse("%%bottcalc-triplet 1\n2 2 1\n0 x 1\n").unwrap_err();
        assert_eq!(e.position, 27);
    }
}
