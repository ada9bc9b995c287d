//! Schur-functor combinatorics for GL(n): dimensions, Littlewood–Richardson
//! coefficients, Kostka numbers and a few fixed decompositions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::weights::{Partition, Weight};

const MODULE: &str = "schur";

/// Product formula `∏_{i<j} (λᵢ − λⱼ + j − i)/(j − i)`; `λ` is padded with zeros to length `n`.
pub fn gl_dimension(lambda: &Weight, n: usize) -> Result<BigUint, Error> {
    if n == 0 {
        return Err(Error::InvalidSize { module: MODULE, msg: "n must be positive".into() });
    }
    if lambda.len() > n {
        return Err(Error::InvalidSize {
            module: MODULE,
            msg: format!("weight of length {} does not fit GL({n})", lambda.len()),
        });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant { module: MODULE, msg: lambda.to_string() });
    }
    let l = lambda.padded(n);
    let e = l.entries();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= &e[i] - &e[j] + (j - i);
            den *= j - i;
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    Ok(q.to_biguint().expect("dimension is positive"))
}

/// `gl_dimension` for a partition.
pub fn partition_dimension(lambda: &Partition, n: usize) -> BigUint {
    if lambda.length() > n {
        return BigUint::zero();
    }
    gl_dimension(&lambda.to_weight(n), n).expect("partitions are dominant")
}

/// Littlewood–Richardson coefficient `c^ν_{λμ}`; zero on size mismatch.
pub fn littlewood_richardson(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    // Cells of ν/λ, rows top to bottom, each row right to left.
    let rows = nu.length();
    let mut cells = Vec::new();
    for i in 0..rows {
        for j in (lambda.part(i)..nu.part(i)).rev() {
            cells.push((i, j));
        }
    }
    let mut filling: HashMap<(usize, usize), usize> = HashMap::with_capacity(cells.len());
    let mut counts = vec![0usize; mu.length() + 1];
    let mut total = 0u64;
    lr_fill(0, &cells, lambda, mu.parts(), &mut filling, &mut counts, &mut total);
    total
}

/// Strict variant: a size mismatch is an error rather than zero.
pub fn littlewood_richardson_strict(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64, Error> {
    if lambda.size() + mu.size() != nu.size() {
        return Err(Error::precondition(
            MODULE,
            format!("|{nu}| != |{lambda}| + |{mu}|"),
        ));
    }
    Ok(littlewood_richardson(lambda, mu, nu))
}

fn lr_fill(
    k: usize,
    cells: &[(usize, usize)],
    lambda: &Partition,
    mu: &[usize],
    filling: &mut HashMap<(usize, usize), usize>,
    counts: &mut [usize],
    total: &mut u64,
) {
    if k == cells.len() {
        *total += 1;
        return;
    }
    let (i, j) = cells[k];
    // Weakly increasing along rows: bounded by the entry to the right.
    let mut hi = filling.get(&(i, j + 1)).copied().unwrap_or(mu.len());
    // Entries in row i never exceed i+1.
    hi = hi.min(i + 1);
    // Strictly increasing down columns.
    let lo = if i > 0 && j >= lambda.part(i - 1) {
        filling[&(i - 1, j)] + 1
    } else {
        1
    };
    for v in lo..=hi {
        if counts[v] >= mu[v - 1] {
            continue;
        }
        if v > 1 && counts[v] + 1 > counts[v - 1] {
            continue;
        }
        counts[v] += 1;
        filling.insert((i, j), v);
        lr_fill(k + 1, cells, lambda, mu, filling, counts, total);
        filling.remove(&(i, j));
        counts[v] -= 1;
    }
}

/// Kostka number: semistandard tableaux of shape `lambda` with the given content.
pub fn kostka(lambda: &Partition, content: &[usize]) -> u64 {
    if lambda.size() != content.iter().sum::<usize>() {
        return 0;
    }
    let mut memo = HashMap::new();
    kostka_rec(lambda.parts().to_vec(), content, &mut memo)
}

fn kostka_rec(shape: Vec<usize>, content: &[usize], memo: &mut HashMap<(Vec<usize>, usize), u64>) -> u64 {
    let Some((&last, rest)) = content.split_last() else {
        return shape.iter().all(|&p| p == 0) as u64;
    };
    if let Some(&v) = memo.get(&(shape.clone(), content.len())) {
        return v;
    }
    // Remove a horizontal strip of size `last` holding the largest letter.
    let mut total = 0;
    let mut inner = shape.clone();
    remove_horizontal_strip(&shape, 0, last, &mut inner, &mut |nu| {
        total += kostka_rec(nu.to_vec(), rest, memo);
    });
    memo.insert((shape, content.len()), total);
    total
}

fn remove_horizontal_strip(
    shape: &[usize],
    row: usize,
    remaining: usize,
    inner: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if row == shape.len() {
        if remaining == 0 {
            visit(inner);
        }
        return;
    }
    let below = shape.get(row + 1).copied().unwrap_or(0);
    let max_take = (shape[row] - below).min(remaining);
    for take in 0..=max_take {
        inner[row] = shape[row] - take;
        remove_horizontal_strip(shape, row + 1, remaining - take, inner, visit);
    }
    inner[row] = shape[row];
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurTerm {
    pub weight: Weight,
    pub multiplicity: u64,
    pub dimension: BigUint,
}

impl Serialize for SchurTerm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SchurTerm", 3)?;
        st.serialize_field("weight", &self.weight)?;
        st.serialize_field("multiplicity", &self.multiplicity)?;
        match self.dimension.to_u64() {
            Some(d) => st.serialize_field("dimension", &d)?,
            None => st.serialize_field("dimension", &self.dimension.to_string())?,
        }
        st.end()
    }
}

/// A multiset of irreducible GL(n)-modules. Terms are kept in decreasing
/// lexicographic order of their weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurDecomposition {
    n: usize,
    terms: BTreeMap<std::cmp::Reverse<Vec<BigInt>>, u64>,
}

impl SchurDecomposition {
    pub fn new(n: usize) -> Self {
        SchurDecomposition { n, terms: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Adds `multiplicity` copies of `S_λ`; `λ` is padded to length `n`.
    pub fn add(&mut self, lambda: &Weight, multiplicity: u64) -> Result<(), Error> {
        if lambda.len() > self.n {
            return Err(Error::InvalidSize {
                module: MODULE,
                msg: format!("weight {lambda} longer than {}", self.n),
            });
        }
        if !lambda.is_dominant() {
            return Err(Error::NotDominant { module: MODULE, msg: lambda.to_string() });
        }
        if multiplicity > 0 {
            *self.terms.entry(std::cmp::Reverse(lambda.padded(self.n).into_entries())).or_default() += multiplicity;
        }
        Ok(())
    }

    pub fn add_partition(&mut self, lambda: &Partition, multiplicity: u64) -> Result<(), Error> {
        if lambda.length() > self.n {
            return Err(Error::InvalidSize {
                module: MODULE,
                msg: format!("partition {lambda} longer than {}", self.n),
            });
        }
        self.add(&lambda.to_weight(self.n), multiplicity)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn multiplicity(&self, lambda: &Weight) -> u64 {
        if lambda.len() > self.n {
            return 0;
        }
        self.terms
            .get(&std::cmp::Reverse(lambda.padded(self.n).into_entries()))
            .copied()
            .unwrap_or(0)
    }

    pub fn terms(&self) -> Vec<SchurTerm> {
        self.terms
            .iter()
            .map(|(w, &m)| {
                let weight = Weight::new(w.0.clone());
                let dimension = gl_dimension(&weight, self.n).expect("stored weights are dominant");
                SchurTerm { weight, multiplicity: m, dimension }
            })
            .collect()
    }

    pub fn total_dimension(&self) -> BigUint {
        self.terms()
            .into_iter()
            .map(|t| t.dimension * t.multiplicity)
            .sum()
    }

    /// Tensor with a power of the determinant.
    pub fn shifted(&self, c: &BigInt) -> SchurDecomposition {
        let terms = self
            .terms
            .iter()
            .map(|(w, &m)| (std::cmp::Reverse(w.0.iter().map(|x| x + c).collect()), m))
            .collect();
        SchurDecomposition { n: self.n, terms }
    }

    /// Character as a map from dominant weight to weight-space dimension;
    /// only defined for polynomial modules (all entries non-negative).
    pub fn dominant_character(&self) -> Result<BTreeMap<Partition, u64>, Error> {
        let mut out: BTreeMap<Partition, u64> = BTreeMap::new();
        for t in self.terms() {
            let shape = Partition::try_from(&t.weight)?;
            for mu in Partition::all_of(shape.size(), self.n) {
                let mut content = mu.parts().to_vec();
                content.resize(self.n, 0);
                let k = kostka(&shape, &content);
                if k > 0 {
                    *out.entry(mu).or_default() += k * t.multiplicity;
                }
            }
        }
        Ok(out)
    }
}

impl SchurDecomposition {
    /// Adds every term of `other`.
    pub fn merge(&mut self, other: &SchurDecomposition) -> Result<(), Error> {
        for t in other.terms() {
            self.add(&t.weight, t.multiplicity)?;
        }
        Ok(())
    }

    /// Inverse of [`SchurDecomposition::dominant_character`]: peels off the
    /// lexicographically largest weight, which is always a highest weight.
    pub fn from_dominant_character(character: &BTreeMap<Partition, u64>, n: usize) -> Result<Self, Error> {
        let mut left: BTreeMap<Partition, i128> =
            character.iter().filter(|(_, &c)| c > 0).map(|(p, &c)| (p.clone(), c as i128)).collect();
        let mut out = SchurDecomposition::new(n);
        while let Some((top, &c)) = left.iter().next_back() {
            let top = top.clone();
            if c < 0 || top.length() > n {
                return Err(Error::Precondition {
                    module: MODULE,
                    msg: format!("not a character: weight {top} has multiplicity {c}"),
                });
            }
            out.add_partition(&top, c as u64)?;
            for mu in Partition::all_of(top.size(), n) {
                let mut content = mu.parts().to_vec();
                content.resize(n, 0);
                let k = kostka(&top, &content) as i128;
                if k > 0 {
                    let e = left.entry(mu.clone()).or_insert(0);
                    *e -= k * c;
                    if *e == 0 {
                        left.remove(&mu);
                    }
                }
            }
        }
        Ok(out)
    }
}

impl Serialize for SchurDecomposition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.terms().serialize(s)
    }
}

impl fmt::Display for SchurDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms()
            .iter()
            .map(|t| {
                let s = format!("S_({})", t.weight.render());
                if t.multiplicity == 1 {
                    s
                } else {
                    format!("{}·{s}", t.multiplicity)
                }
            })
            .collect();
        f.write_str(&parts.join(" ⊕ "))
    }
}

/// `S_λ ⊗ S_μ` inside GL(n). Negative weights are shifted by a determinant power first.
pub fn tensor_decompose(lambda: &Weight, mu: &Partition, n: usize) -> Result<SchurDecomposition, Error> {
    if lambda.len() > n {
        return Err(Error::InvalidSize {
            module: MODULE,
            msg: format!("weight of length {} does not fit GL({n})", lambda.len()),
        });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant { module: MODULE, msg: lambda.to_string() });
    }
    let padded = lambda.padded(n);
    let last = padded.entries().last().cloned().unwrap_or_default();
    let shift = if last.is_negative() { -last } else { BigInt::zero() };
    let base = Partition::try_from(&padded.add_constant(&shift))?;
    let mut out = SchurDecomposition::new(n);
    if mu.length() > n {
        return Ok(out);
    }
    for nu in Partition::all_of(base.size() + mu.size(), n) {
        if !nu.contains(&base) || !nu.contains(mu) {
            continue;
        }
        let c = littlewood_richardson(&base, mu, &nu);
        out.add_partition(&nu, c)?;
    }
    Ok(out.shifted(&-shift))
}

/// `S_λ ⊗ ∧^r` via vertical strips.
pub fn pieri_wedge(lambda: &Weight, r: usize, n: usize) -> Result<SchurDecomposition, Error> {
    if lambda.len() > n {
        return Err(Error::InvalidSize { module: MODULE, msg: format!("weight longer than {n}") });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant { module: MODULE, msg: lambda.to_string() });
    }
    let base = lambda.padded(n);
    let mut out = SchurDecomposition::new(n);
    if r > n {
        return Ok(out);
    }
    let mut pick = vec![false; n];
    vertical_strips(&base, 0, r, &mut pick, &mut |w| {
        out.add(w, 1).expect("vertical strips keep dominance");
    });
    Ok(out)
}

fn vertical_strips(base: &Weight, i: usize, left: usize, pick: &mut Vec<bool>, visit: &mut dyn FnMut(&Weight)) {
    let n = pick.len();
    if left > n - i {
        return;
    }
    if i == n {
        let e: Vec<BigInt> = base
            .entries()
            .iter()
            .zip(pick.iter())
            .map(|(x, &p)| if p { x + 1 } else { x.clone() })
            .collect();
        let w = Weight::new(e);
        if w.is_dominant() {
            visit(&w);
        }
        return;
    }
    if left > 0 {
        pick[i] = true;
        vertical_strips(base, i + 1, left - 1, pick, visit);
        pick[i] = false;
    }
    vertical_strips(base, i + 1, left, pick, visit);
}

/// Pairs `(λ, λ)` for `λ ⊢ k` of length at most `min(dim_e, dim_f)`.
pub fn cauchy(k: usize, dim_e: usize, dim_f: usize) -> Vec<(Partition, Partition)> {
    Partition::all_of(k, dim_e.min(dim_f))
        .into_iter()
        .map(|p| (p.clone(), p))
        .collect()
}

fn check_range(r: usize, n: usize) -> Result<(), Error> {
    if r == 0 || r >= n {
        return Err(Error::InvalidSize { module: MODULE, msg: format!("need 1 <= r < n, got r={r}, n={n}") });
    }
    Ok(())
}

// ⊕ S_{(2^{r−i},1^{2i})} over i in the given parity class and range.
fn two_one_family(r: usize, n: usize, from: usize, step: usize) -> SchurDecomposition {
    let mut out = SchurDecomposition::new(n);
    let top = r.min(n - r);
    let mut i = from;
    while i <= top {
        let mut parts = vec![2usize; r - i];
        parts.extend(std::iter::repeat_n(1, 2 * i));
        let p = Partition::new(parts).expect("weakly decreasing");
        out.add_partition(&p, 1).expect("length r+i <= n");
        i += step;
    }
    out
}

/// Quadratic Plücker relations of `G(r, n)` as a GL(n)-module (dual weights).
pub fn plucker_relation_space(r: usize, n: usize) -> Result<SchurDecomposition, Error> {
    check_range(r, n)?;
    Ok(two_one_family(r, n, 2, 2))
}

/// `∧²(∧^r E*)` (dual weights).
pub fn wedge2_of_wedge_r(r: usize, n: usize) -> Result<SchurDecomposition, Error> {
    check_range(r, n)?;
    Ok(two_one_family(r, n, 1, 2))
}

/// Degree-two part of `H⁰` of the twisted cotangent sheaf of the cone: the odd
/// terms of `∧²(∧^r E*)` other than `S_{(2^{r−1},1²)}`.
pub fn h0_omega_degree2(r: usize, n: usize) -> Result<SchurDecomposition, Error> {
    check_range(r, n)?;
    Ok(two_one_family(r, n, 3, 2))
}

/// Binomial coefficient as a big integer.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn w(v: &[i64]) -> Weight {
        Weight::from_i64s(v)
    }

    #[test]
    fn dimensions() {
        assert_eq!(gl_dimension(&w(&[1, 1]), 4).unwrap(), BigUint::from(6u32));
        assert_eq!(gl_dimension(&w(&[0, 0, 0]), 3).unwrap(), BigUint::from(1u32));
        assert_eq!(gl_dimension(&w(&[2, 1, 1]), 4).unwrap(), BigUint::from(15u32));
        assert_eq!(gl_dimension(&w(&[-1, -1, -1, -1]), 4).unwrap(), BigUint::from(1u32));
        assert!(gl_dimension(&w(&[0, 1]), 2).is_err());
        assert!(gl_dimension(&w(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn lr_examples() {
        // single box
        let lam = p(&[2, 1]);
        for nu in Partition::all_of(4, 4) {
            let one_box = nu.contains(&lam);
            assert_eq!(littlewood_richardson(&lam, &p(&[1]), &nu), one_box as u64, "{nu}");
        }
        // ((m+1)^{r−i}, m^i, 1^i) in S_{(m^r)} ⊗ ∧^r, m=2, r=3
        for i in 0..=3usize {
            let mut nu = vec![3; 3 - i];
            nu.extend(std::iter::repeat_n(2, i));
            nu.extend(std::iter::repeat_n(1, i));
            assert_eq!(littlewood_richardson(&p(&[2, 2, 2]), &p(&[1, 1, 1]), &p(&nu)), 1);
        }
        // m=1, r=3, i=2
        let c = littlewood_richardson(&p(&[1, 1, 1]), &p(&[2, 1, 1, 1, 1]), &p(&[3, 2, 2, 1, 1]));
        assert!(c >= 1);
        assert_eq!(littlewood_richardson(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        assert_eq!(littlewood_richardson(&p(&[1]), &p(&[1]), &p(&[3])), 0);
        assert!(littlewood_richardson_strict(&p(&[1]), &p(&[1]), &p(&[3])).is_err());
    }

    #[test]
    fn tensor_examples() {
        let d = tensor_decompose(&w(&[1, 1]), &p(&[1, 1]), 4).unwrap();
        let mut expected = SchurDecomposition::new(4);
        for t in [&[2, 2][..], &[2, 1, 1], &[1, 1, 1, 1]] {
            expected.add(&w(t), 1).unwrap();
        }
        assert_eq!(d, expected);
        let d = tensor_decompose(&w(&[2, 2, 1]), &p(&[1]), 5).unwrap();
        let mut expected = SchurDecomposition::new(5);
        for t in [&[3, 2, 1][..], &[2, 2, 2], &[2, 2, 1, 1]] {
            expected.add(&w(t), 1).unwrap();
        }
        assert_eq!(d, expected);
        let lam = w(&[3, 0, -2]);
        let d = tensor_decompose(&lam, &Partition::empty(), 3).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.multiplicity(&lam), 1);
    }

    #[test]
    fn cauchy_examples() {
        let c = cauchy(2, 2, 2);
        assert_eq!(c, vec![(p(&[2]), p(&[2])), (p(&[1, 1]), p(&[1, 1]))]);
        let total: BigUint = c
            .iter()
            .map(|(a, b)| partition_dimension(a, 2) * partition_dimension(b, 2))
            .sum();
        assert_eq!(total, BigUint::from(10u32));
        assert_eq!(cauchy(0, 3, 3), vec![(Partition::empty(), Partition::empty())]);
        assert_eq!(cauchy(3, 2, 2).len(), 2);
    }

    #[test]
    fn fixed_decompositions() {
        let f = plucker_relation_space(2, 4).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f.multiplicity(&w(&[1, 1, 1, 1])), 1);
        assert_eq!(f.total_dimension(), BigUint::from(1u32));
        assert_eq!(plucker_relation_space(2, 5).unwrap().total_dimension(), BigUint::from(5u32));
        assert!(plucker_relation_space(1, 5).unwrap().is_empty());

        let g = wedge2_of_wedge_r(2, 4).unwrap();
        assert_eq!(g.multiplicity(&w(&[2, 1, 1])), 1);
        assert_eq!(g.total_dimension(), BigUint::from(15u32));
        let g = wedge2_of_wedge_r(3, 6).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g.total_dimension(), BigUint::from(190u32));
        assert_eq!(wedge2_of_wedge_r(1, 3).unwrap().multiplicity(&w(&[1, 1])), 1);

        assert!(h0_omega_degree2(2, 7).unwrap().is_empty());
        assert_eq!(h0_omega_degree2(3, 6).unwrap().total_dimension(), BigUint::from(1u32));
        assert_eq!(h0_omega_degree2(3, 7).unwrap().total_dimension(), BigUint::from(7u32));
        assert!(h0_omega_degree2(0, 3).is_err());
    }

    #[test]
    fn kostka_small() {
        assert_eq!(kostka(&p(&[2, 1]), &[1, 1, 1]), 2);
        assert_eq!(kostka(&p(&[2, 1]), &[2, 1]), 1);
        assert_eq!(kostka(&p(&[3]), &[1, 1, 1]), 1);
        assert_eq!(kostka(&p(&[2, 2]), &[1, 1, 1, 1]), 2);
        assert_eq!(kostka(&p(&[1, 1, 1]), &[3]), 0);
    }

    #[test]
    fn json_shape() {
        let d = wedge2_of_wedge_r(2, 4).unwrap();
        let v = serde_json::to_value(&d).unwrap();
        assert_eq!(v, serde_json::json!([{"weight": "2,1^2,0", "multiplicity": 1, "dimension": 15}]));
    }
}
