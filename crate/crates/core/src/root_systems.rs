//! Root data for the classical types A, B, C, D.
//!
//! Roots are built in the orthogonal ε-basis with the usual conventions
//! (B: εᵢ±εⱼ, εᵢ; C: εᵢ±εⱼ, 2εᵢ; D: εᵢ±εⱼ) and converted to simple-root
//! coordinates. Fundamental weights come from the inverse Cartan matrix.
//!
//! Two pairings of a root with a weight are available, see [`Pairing`].

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError};

type Q = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootType {
    A,
    B,
    C,
    D,
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RootType::A => "A",
            RootType::B => "B",
            RootType::C => "C",
            RootType::D => "D",
        };
        f.write_str(s)
    }
}

impl RootType {
    /// B and C are exchanged, A and D are self-dual.
    pub fn dual(self) -> RootType {
        match self {
            RootType::B => RootType::C,
            RootType::C => RootType::B,
            t => t,
        }
    }
}

/// How `α(γ)` is evaluated for a positive root `α` and a weight `γ` given in
/// fundamental-weight coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum Pairing {
    /// `Σⱼ aⱼ γⱼ` where `α = Σⱼ aⱼ αⱼ`; the linear extension of `αᵢ(δⱼ) = δᵢⱼ`
    /// over the root. This is the convention of the tabulated values for the
    /// isotropic Grassmannians. For B and C it is the coroot pairing of the
    /// dual type.
    #[default]
    SimpleRootCoefficients,
    /// `⟨γ, α∨⟩ = 2(γ, α)/(α, α)`.
    Coroot,
}

impl FromStr for Pairing {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "simple-root-coefficients" | "tabulated" | "root" => Ok(Pairing::SimpleRootCoefficients),
            "coroot" => Ok(Pairing::Coroot),
            other => Err(ParseError::new(0, format!("unknown pairing `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    /// Coefficients in the simple roots.
    pub coeffs: Vec<i64>,
    /// Coefficients of the coroot in the simple coroots.
    pub coroot: Vec<i64>,
    /// ε-coordinates.
    pub eps: Vec<Q>,
}

impl Root {
    /// Coefficient of `α_r` (1-based `r`).
    pub fn coefficient(&self, r: usize) -> i64 {
        self.coeffs[r - 1]
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn render(&self) -> String {
        render_root(&self.coeffs)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Renders simple-root coordinates as `a1+2a2+a3`.
pub fn render_root(coeffs: &[i64]) -> String {
    let mut out = String::new();
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if !out.is_empty() || c < 0 {
            out.push(if c < 0 { '-' } else { '+' });
        }
        if c.abs() != 1 {
            out.push_str(&c.abs().to_string());
        }
        out.push('a');
        out.push_str(&(i + 1).to_string());
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses `a1+2a2+a3` into simple-root coordinates of length `rank`.
pub fn parse_root(input: &str, rank: usize) -> Result<Vec<i64>, ParseError> {
    let chars: Vec<(usize, char)> = input.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(ParseError::new(0, "empty root"));
    }
    let mut coeffs = vec![0i64; rank];
    let mut i = 0;
    let mut first = true;
    while i < chars.len() {
        let mut sign = 1i64;
        match chars[i].1 {
            '+' => i += 1,
            '-' => {
                sign = -1;
                i += 1
            }
            _ if first => {}
            _ => return Err(ParseError::new(chars[i].0, "expected `+` or `-`")),
        }
        first = false;
        let mut digits = String::new();
        while i < chars.len() && chars[i].1.is_ascii_digit() {
            digits.push(chars[i].1);
            i += 1;
        }
        let pos = chars.get(i).map_or(input.len(), |&(p, _)| p);
        let k: i64 = if digits.is_empty() {
            1
        } else {
            digits.parse().map_err(|_| ParseError::new(pos, "coefficient too large"))?
        };
        if i >= chars.len() || chars[i].1 != 'a' {
            return Err(ParseError::new(pos, "expected `a<index>`"));
        }
        i += 1;
        let mut idx = String::new();
        while i < chars.len() && chars[i].1.is_ascii_digit() {
            idx.push(chars[i].1);
            i += 1;
        }
        let idx: usize = idx.parse().map_err(|_| ParseError::new(pos, "missing or bad simple-root index"))?;
        if idx == 0 || idx > rank {
            return Err(ParseError::new(pos, format!("simple-root index {idx} out of range 1..={rank}")));
        }
        coeffs[idx - 1] = coeffs[idx - 1]
            .checked_add(sign * k)
            .ok_or_else(|| ParseError::new(pos, "coefficient overflow"))?;
    }
    Ok(coeffs)
}

/// A weight in the fundamental-weight basis `δ₁, …, δₙ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IsoWeight(pub Vec<BigInt>);

impl IsoWeight {
    pub fn from_i64s(v: &[i64]) -> Self {
        IsoWeight(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// `ρ = Σⱼ δⱼ`.
    pub fn rho(rank: usize) -> Self {
        IsoWeight(vec![BigInt::from(1); rank])
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }
}

impl fmt::Display for IsoWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum IndexResult {
    Singular,
    Index(usize),
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: RootType,
    rank: usize,
    simple: Vec<Vec<Q>>,
    fundamental: Vec<Vec<Q>>,
    positive: Vec<Root>,
}

impl RootSystem {
    pub fn new(ty: RootType, rank: usize) -> Result<Self, Error> {
        let min_rank = if ty == RootType::A { 1 } else { 2 };
        if rank < min_rank || rank > 64 {
            return Err(Error::InvalidSize {
                module: "root_systems",
                msg: format!("unsupported rank {rank} for type {ty}"),
            });
        }
        let simple = simple_roots_eps(ty, rank);
        let positive_eps = positive_roots_eps(ty, rank);
        let norms: Vec<Q> = simple.iter().map(|a| dot(a, a)).collect();
        let mut positive: Vec<Root> = positive_eps
            .into_iter()
            .map(|eps| {
                let coeffs = solve_in_basis(&simple, &eps);
                let norm = dot(&eps, &eps);
                let coroot = coeffs
                    .iter()
                    .zip(&norms)
                    .map(|(&c, &ni)| {
                        let v = Q::from_integer(c) * ni / norm;
                        assert!(v.is_integer(), "coroot coefficient must be integral");
                        v.to_integer()
                    })
                    .collect();
                Root { coeffs, coroot, eps }
            })
            .collect();
        positive.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));
        let cartan = cartan_from_simple(&simple);
        let inv = invert(&cartan);
        let dim = simple[0].len();
        let fundamental = (0..rank)
            .map(|j| {
                let mut v = vec![Q::zero(); dim];
                for (i, a) in simple.iter().enumerate() {
                    for k in 0..dim {
                        v[k] += inv[j][i] * a[k];
                    }
                }
                v
            })
            .collect();
        Ok(RootSystem { ty, rank, simple, fundamental, positive })
    }

    pub fn root_type(&self) -> RootType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Positive roots, lexicographic on simple-root coordinates.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn simple_roots_eps(&self) -> &[Vec<Q>] {
        &self.simple
    }

    /// ε-coordinates of the fundamental weights `δ₁, …, δₙ`.
    pub fn fundamental_weights_eps(&self) -> &[Vec<Q>] {
        &self.fundamental
    }

    /// `A_{ij} = ⟨αᵢ, αⱼ∨⟩`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        cartan_from_simple(&self.simple)
            .into_iter()
            .map(|row| row.into_iter().map(|q| q.to_integer()).collect())
            .collect()
    }

    pub fn find_root(&self, coeffs: &[i64]) -> Option<&Root> {
        self.positive.iter().find(|r| r.coeffs == coeffs)
    }

    /// Positive roots involving `α_r` (1-based).
    pub fn roots_through(&self, r: usize) -> Result<Vec<&Root>, Error> {
        if r == 0 || r > self.rank {
            return Err(Error::InvalidSize {
                module: "root_systems",
                msg: format!("index {r} out of range 1..={}", self.rank),
            });
        }
        Ok(self.positive.iter().filter(|a| a.coeffs[r - 1] != 0).collect())
    }

    /// The linear form `γ ↦ α(γ)` as coefficients on fundamental-weight coordinates.
    pub fn pairing_form<'a>(&self, alpha: &'a Root, pairing: Pairing) -> &'a [i64] {
        match pairing {
            Pairing::SimpleRootCoefficients => &alpha.coeffs,
            Pairing::Coroot => &alpha.coroot,
        }
    }

    fn check_weight(&self, gamma: &IsoWeight) -> Result<(), Error> {
        if gamma.len() != self.rank {
            return Err(Error::InvalidSize {
                module: "root_systems",
                msg: format!("weight has {} coordinates, rank is {}", gamma.len(), self.rank),
            });
        }
        Ok(())
    }

    pub fn pairing(&self, alpha: &[i64], gamma: &IsoWeight, pairing: Pairing) -> Result<BigInt, Error> {
        self.check_weight(gamma)?;
        let root = self.find_root(alpha).ok_or_else(|| {
            Error::precondition("root_systems", format!("{} is not a positive root of {}{}", render_root(alpha), self.ty, self.rank))
        })?;
        Ok(dot_big(self.pairing_form(root, pairing), gamma))
    }

    /// `⟨γ, α∨⟩` evaluated through ε-coordinates.
    pub fn coroot_pairing_eps(&self, alpha: &Root, gamma: &IsoWeight) -> Result<BigInt, Error> {
        self.check_weight(gamma)?;
        let big = |q: &Q| BigRational::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()));
        let dim = alpha.eps.len();
        let mut gamma_eps = vec![BigRational::zero(); dim];
        for (j, c) in gamma.0.iter().enumerate() {
            let c = BigRational::from_integer(c.clone());
            for (k, g) in gamma_eps.iter_mut().enumerate() {
                *g += &c * big(&self.fundamental[j][k]);
            }
        }
        let ga: BigRational = gamma_eps.iter().zip(&alpha.eps).map(|(g, a)| g * big(a)).sum();
        let v = ga * BigRational::from_integer(BigInt::from(2)) / big(&dot(&alpha.eps, &alpha.eps));
        debug_assert!(v.is_integer());
        Ok(v.to_integer())
    }

    /// Singular iff some positive root pairs to zero; otherwise the index is
    /// the number of positive roots pairing negatively.
    pub fn index_and_singularity(&self, gamma: &IsoWeight, pairing: Pairing) -> Result<IndexResult, Error> {
        self.check_weight(gamma)?;
        let mut index = 0;
        for alpha in &self.positive {
            let v = dot_big(self.pairing_form(alpha, pairing), gamma);
            if v.is_zero() {
                return Ok(IndexResult::Singular);
            }
            if v.is_negative() {
                index += 1;
            }
        }
        Ok(IndexResult::Index(index))
    }

    /// Weyl dimension formula `∏ ⟨λ+ρ, α∨⟩ / ⟨ρ, α∨⟩`.
    pub fn weyl_dimension(&self, lambda: &IsoWeight) -> Result<BigUint, Error> {
        self.check_weight(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant {
                module: "root_systems",
                msg: format!("{lambda} has a negative fundamental coordinate"),
            });
        }
        let shifted = IsoWeight(lambda.0.iter().map(|c| c + 1).collect());
        let rho = IsoWeight::rho(self.rank);
        let mut num = BigInt::from(1);
        let mut den = BigInt::from(1);
        for alpha in &self.positive {
            num *= dot_big(&alpha.coroot, &shifted);
            den *= dot_big(&alpha.coroot, &rho);
        }
        let (q, rem) = num.div_rem(&den);
        debug_assert!(rem.is_zero());
        Ok(q.to_biguint().expect("dimension is positive"))
    }
}

fn dot_big(form: &[i64], gamma: &IsoWeight) -> BigInt {
    form.iter()
        .zip(&gamma.0)
        .filter(|(&a, _)| a != 0)
        .map(|(&a, g)| g * a)
        .sum()
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| *x * *y).sum()
}

fn unit(dim: usize, i: usize, scale: i64) -> Vec<Q> {
    let mut v = vec![Q::zero(); dim];
    v[i] = Q::from_integer(scale);
    v
}

fn simple_roots_eps(ty: RootType, n: usize) -> Vec<Vec<Q>> {
    let dim = if ty == RootType::A { n + 1 } else { n };
    let mut out: Vec<Vec<Q>> = (0..n.min(dim - 1))
        .map(|i| {
            let mut v = unit(dim, i, 1);
            v[i + 1] = Q::from_integer(-1);
            v
        })
        .collect();
    match ty {
        RootType::A => {}
        RootType::B => out.push(unit(dim, n - 1, 1)),
        RootType::C => out.push(unit(dim, n - 1, 2)),
        RootType::D => {
            let mut v = unit(dim, n - 2, 1);
            v[n - 1] = Q::from_integer(1);
            out.push(v);
        }
    }
    out
}

fn positive_roots_eps(ty: RootType, n: usize) -> Vec<Vec<Q>> {
    let dim = if ty == RootType::A { n + 1 } else { n };
    let mut out = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            let mut v = unit(dim, i, 1);
            v[j] = Q::from_integer(-1);
            out.push(v);
            if ty != RootType::A {
                let mut v = unit(dim, i, 1);
                v[j] = Q::from_integer(1);
                out.push(v);
            }
        }
        match ty {
            RootType::B => out.push(unit(dim, i, 1)),
            RootType::C => out.push(unit(dim, i, 2)),
            _ => {}
        }
    }
    out
}

fn cartan_from_simple(simple: &[Vec<Q>]) -> Vec<Vec<Q>> {
    simple
        .iter()
        .map(|ai| {
            simple
                .iter()
                .map(|aj| Q::from_integer(2) * dot(ai, aj) / dot(aj, aj))
                .collect()
        })
        .collect()
}

// Gauss–Jordan over Q on a small square matrix.
fn invert(m: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::from_integer(1) } else { Q::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero()).expect("Cartan matrix is invertible");
        a.swap(c, p);
        let pv = a[c][c];
        for x in a[c].iter_mut() {
            *x /= pv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c];
                let pivot_row = a[c].clone();
                for (x, y) in a[i].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

// Coordinates of `v` in the (linearly independent) basis `basis`.
fn solve_in_basis(basis: &[Vec<Q>], v: &[Q]) -> Vec<i64> {
    let k = basis.len();
    let dim = v.len();
    let mut rows: Vec<Vec<Q>> = (0..dim)
        .map(|i| {
            let mut r: Vec<Q> = basis.iter().map(|b| b[i]).collect();
            r.push(v[i]);
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..k {
        let Some(p) = (row..dim).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(row, p);
        let pv = rows[row][c];
        for x in rows[row].iter_mut() {
            *x /= pv;
        }
        for i in 0..dim {
            if i != row && !rows[i][c].is_zero() {
                let f = rows[i][c];
                let pr = rows[row].clone();
                for (x, y) in rows[i].iter_mut().zip(pr) {
                    *x -= f * y;
                }
            }
        }
        pivots.push(c);
        row += 1;
    }
    let mut out = vec![0i64; k];
    for (i, &c) in pivots.iter().enumerate() {
        let q = rows[i][k];
        assert!(q.is_integer(), "root coordinates are integral");
        out[c] = q.to_integer();
    }
    out
}

/// Number of positive roots for the type and rank.
pub fn positive_root_count(ty: RootType, n: usize) -> usize {
    match ty {
        RootType::A => n * (n + 1) / 2,
        RootType::B | RootType::C => n * n,
        RootType::D => n * (n - 1),
    }
}

/// Convenience: the coordinate vector as `i64`s, when it fits.
pub fn iso_to_i64s(w: &IsoWeight) -> Option<Vec<i64>> {
    w.0.iter().map(|c| c.to_i64()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeff_set(rs: &RootSystem) -> Vec<Vec<i64>> {
        rs.positive_roots().iter().map(|r| r.coeffs.clone()).collect()
    }

    #[test]
    fn rank_two_lists() {
        let c2 = RootSystem::new(RootType::C, 2).unwrap();
        assert_eq!(coeff_set(&c2), vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![2, 1]]);
        let b2 = RootSystem::new(RootType::B, 2).unwrap();
        assert_eq!(coeff_set(&b2), vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![1, 2]]);
        let d4 = RootSystem::new(RootType::D, 4).unwrap();
        assert_eq!(d4.positive_roots().len(), 12);
    }

    #[test]
    fn counts() {
        for n in 2..=8 {
            for ty in [RootType::A, RootType::B, RootType::C, RootType::D] {
                let rs = RootSystem::new(ty, n).unwrap();
                assert_eq!(rs.positive_roots().len(), positive_root_count(ty, n), "{ty}{n}");
            }
        }
        assert!(RootSystem::new(RootType::B, 1).is_err());
    }

    #[test]
    fn fundamental_weights_are_dual_to_coroots() {
        for ty in [RootType::A, RootType::B, RootType::C, RootType::D] {
            for n in 2..=6 {
                let rs = RootSystem::new(ty, n).unwrap();
                for i in 0..n {
                    let mut c = vec![0i64; n];
                    c[i] = 1;
                    let alpha = rs.find_root(&c).unwrap();
                    for j in 0..n {
                        let mut g = vec![0i64; n];
                        g[j] = 1;
                        let v = rs.coroot_pairing_eps(alpha, &IsoWeight::from_i64s(&g)).unwrap();
                        assert_eq!(v, BigInt::from((i == j) as i64));
                        let v = rs.pairing(&c, &IsoWeight::from_i64s(&g), Pairing::SimpleRootCoefficients).unwrap();
                        assert_eq!(v, BigInt::from((i == j) as i64));
                    }
                }
            }
        }
    }

    #[test]
    fn coroot_form_matches_eps_route() {
        for ty in [RootType::B, RootType::C, RootType::D] {
            let rs = RootSystem::new(ty, 5).unwrap();
            let g = IsoWeight::from_i64s(&[3, -7, 2, 0, 11]);
            for a in rs.positive_roots() {
                assert_eq!(
                    rs.coroot_pairing_eps(a, &g).unwrap(),
                    rs.pairing(&a.coeffs, &g, Pairing::Coroot).unwrap()
                );
            }
        }
    }

    #[test]
    fn tabulated_pairing_is_dual_coroot_pairing() {
        for (ty, n) in [(RootType::B, 4), (RootType::C, 4), (RootType::D, 5)] {
            let rs = RootSystem::new(ty, n).unwrap();
            let dual = RootSystem::new(ty.dual(), n).unwrap();
            let mut a: Vec<_> = rs.positive_roots().iter().map(|r| r.coeffs.clone()).collect();
            let mut b: Vec<_> = dual.positive_roots().iter().map(|r| r.coroot.clone()).collect();
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn table2_lg24_values() {
        // γ = 2δ₁ + mδ₂ + δ₁ + δ₂ on sp₂, roots through α₂.
        let rs = RootSystem::new(RootType::C, 2).unwrap();
        for m in -6i64..=6 {
            let g = IsoWeight::from_i64s(&[3, m + 1]);
            let mut vals: Vec<BigInt> = rs
                .roots_through(2)
                .unwrap()
                .iter()
                .map(|a| rs.pairing(&a.coeffs, &g, Pairing::SimpleRootCoefficients).unwrap())
                .collect();
            vals.sort();
            assert_eq!(vals, vec![BigInt::from(m + 1), BigInt::from(m + 4), BigInt::from(m + 7)]);
        }
        let g = IsoWeight::from_i64s(&[3, -1]);
        assert_eq!(rs.index_and_singularity(&g, Pairing::SimpleRootCoefficients).unwrap(), IndexResult::Index(1));
    }

    #[test]
    fn weyl_dimensions() {
        for n in 2..=6 {
            let c = RootSystem::new(RootType::C, n).unwrap();
            let b = RootSystem::new(RootType::B, n).unwrap();
            let mut d1 = vec![0i64; n];
            d1[0] = 1;
            assert_eq!(c.weyl_dimension(&IsoWeight::from_i64s(&d1)).unwrap(), BigUint::from(2 * n as u64));
            assert_eq!(b.weyl_dimension(&IsoWeight::from_i64s(&d1)).unwrap(), BigUint::from(2 * n as u64 + 1));
            assert_eq!(b.weyl_dimension(&IsoWeight::from_i64s(&vec![0; n])).unwrap(), BigUint::from(1u32));
        }
        let a3 = RootSystem::new(RootType::A, 3).unwrap();
        assert_eq!(a3.weyl_dimension(&IsoWeight::from_i64s(&[0, 1, 0])).unwrap(), BigUint::from(6u32));
        assert!(a3.weyl_dimension(&IsoWeight::from_i64s(&[0, -1, 0])).is_err());
    }

    #[test]
    fn root_strings() {
        assert_eq!(render_root(&[1, 2, 1]), "a1+2a2+a3");
        assert_eq!(parse_root("a1 + 2a2 + a3", 3).unwrap(), vec![1, 2, 1]);
        assert_eq!(parse_root("2a1+a2", 2).unwrap(), vec![2, 1]);
        assert!(parse_root("a4", 3).is_err());
        assert!(parse_root("a1a2", 3).is_err());
        assert!(parse_root("", 3).is_err());
    }
}
