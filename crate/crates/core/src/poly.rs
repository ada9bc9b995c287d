//! Polynomials in the entries of a generic `n × r` matrix.
//!
//! The variable `x_{ij}` (0-based row `i < n`, column `j < r`) has index
//! `i·r + j`. A monomial is its exponent vector; polynomials keep terms in a
//! `BTreeMap` keyed by exponent vectors, so the term order is lexicographic
//! on `(x_{00}, x_{01}, …)` exponents and every stored polynomial is canonical
//! (no zero coefficients). Coefficients are `i64` with overflow reported as
//! an error.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;

const MODULE: &str = "cotangent_oracle";

fn overflow(what: &str) -> Error {
    Error::Overflow { module: MODULE, msg: format!("i64 coefficient overflow in {what}") }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Vars {
    pub n: usize,
    pub r: usize,
}

impl Vars {
    pub fn new(n: usize, r: usize) -> Self {
        Vars { n, r }
    }

    pub fn count(&self) -> usize {
        self.n * self.r
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.n && j < self.r);
        i * self.r + j
    }

    pub fn row(&self, v: usize) -> usize {
        v / self.r
    }

    pub fn col(&self, v: usize) -> usize {
        v % self.r
    }

    /// `x_{i,j}` with 1-based indices.
    pub fn name(&self, v: usize) -> String {
        format!("x{}{}", self.row(v) + 1, self.col(v) + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Box<[u8]>);

impl Monomial {
    pub fn one(vars: Vars) -> Self {
        Monomial(vec![0; vars.count()].into_boxed_slice())
    }

    pub fn from_exponents(e: Vec<u8>) -> Self {
        Monomial(e.into_boxed_slice())
    }

    pub fn exponents(&self) -> &[u8] {
        &self.0
    }

    pub fn exponent(&self, v: usize) -> u8 {
        self.0[v]
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn times_var(&self, v: usize) -> Self {
        let mut e = self.0.clone();
        e[v] = e[v].checked_add(1).expect("exponent below 255");
        Monomial(e)
    }

    /// `self / x_v`, if divisible.
    pub fn div_var(&self, v: usize) -> Option<Self> {
        if self.0[v] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[v] -= 1;
        Some(Monomial(e))
    }

    pub fn mul(&self, other: &Monomial) -> Self {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a.checked_add(*b).expect("exponent below 255")).collect())
    }

    /// Row sums of the exponent matrix, i.e. the `GL(E)`-weight.
    pub fn row_content(&self, vars: Vars) -> Vec<usize> {
        (0..vars.n).map(|i| (0..vars.r).map(|j| self.0[vars.index(i, j)] as usize).sum()).collect()
    }

    /// Column sums of the exponent matrix, i.e. the `GL(W)`-weight.
    pub fn col_content(&self, vars: Vars) -> Vec<usize> {
        (0..vars.r).map(|j| (0..vars.n).map(|i| self.0[vars.index(i, j)] as usize).sum()).collect()
    }

    pub fn render(&self, vars: Vars) -> String {
        let parts: Vec<String> = (0..vars.count())
            .filter(|&v| self.0[v] > 0)
            .map(|v| if self.0[v] == 1 { vars.name(v) } else { format!("{}^{}", vars.name(v), self.0[v]) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, i64>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn monomial(m: Monomial, c: i64) -> Self {
        let mut p = Poly::zero();
        if c != 0 {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coefficient(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: i64) -> Result<(), Error> {
        if c == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().checked_add(c).ok_or_else(|| overflow("addition"))?;
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
        Ok(())
    }

    pub fn add_scaled(&mut self, other: &Poly, c: i64) -> Result<(), Error> {
        for (m, v) in other.terms() {
            self.add_term(m.clone(), v.checked_mul(c).ok_or_else(|| overflow("scaling"))?)?;
        }
        Ok(())
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly, Error> {
        let mut out = Poly::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                out.add_term(a.mul(b), ca.checked_mul(cb).ok_or_else(|| overflow("product"))?)?;
            }
        }
        Ok(out)
    }

    pub fn mul_monomial(&self, m: &Monomial, c: i64) -> Result<Poly, Error> {
        let mut out = Poly::zero();
        for (a, ca) in self.terms() {
            out.add_term(a.mul(m), ca.checked_mul(c).ok_or_else(|| overflow("product"))?)?;
        }
        Ok(out)
    }

    pub fn pow(&self, k: usize, vars: Vars) -> Result<Poly, Error> {
        let mut out = Poly::monomial(Monomial::one(vars), 1);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// `∂/∂x_v`.
    pub fn derivative(&self, v: usize) -> Result<Poly, Error> {
        let mut out = Poly::zero();
        for (m, c) in self.terms() {
            if let Some(q) = m.div_var(v) {
                out.add_term(q, c.checked_mul(m.exponent(v) as i64).ok_or_else(|| overflow("derivative"))?)?;
            }
        }
        Ok(out)
    }

    /// Applies the derivation `Σ c · x_s ∂/∂x_t` over the triples `(c, s, t)`.
    pub fn apply_field(&self, field: &[(i64, usize, usize)]) -> Result<Poly, Error> {
        let mut out = Poly::zero();
        for &(c, s, t) in field {
            let d = self.derivative(t)?;
            for (m, v) in d.terms() {
                out.add_term(m.times_var(s), v.checked_mul(c).ok_or_else(|| overflow("vector field"))?)?;
            }
        }
        Ok(out)
    }

    pub fn render(&self, vars: Vars) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else if k > 0 { "+" } else { "" };
            let mag = c.unsigned_abs();
            let body = m.render(vars);
            if mag == 1 && body != "1" {
                s.push_str(&format!("{sign}{body}"));
            } else if body == "1" {
                s.push_str(&format!("{sign}{mag}"));
            } else {
                s.push_str(&format!("{sign}{mag}*{body}"));
            }
        }
        s
    }
}

/// Sign of a permutation given as images.
fn permutation_sign(p: &[usize]) -> i64 {
    let mut sign = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                sign = -sign;
            }
        }
    }
    sign
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// Determinant of the submatrix of `(x_{ij})` on the given rows and columns.
pub fn minor(vars: Vars, rows: &[usize], cols: &[usize]) -> Result<Poly, Error> {
    assert_eq!(rows.len(), cols.len());
    let mut out = Poly::zero();
    for p in permutations(rows.len()) {
        let mut m = Monomial::one(vars);
        for (a, &b) in p.iter().enumerate() {
            m = m.times_var(vars.index(rows[a], cols[b]));
        }
        out.add_term(m, permutation_sign(&p))?;
    }
    Ok(out)
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Monomials with prescribed row and column sums (contingency tables).
pub fn tables(vars: Vars, rows: &[usize], cols: &[usize]) -> Vec<Monomial> {
    debug_assert_eq!(rows.len(), vars.n);
    debug_assert_eq!(cols.len(), vars.r);
    if rows.iter().sum::<usize>() != cols.iter().sum::<usize>() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut exps = vec![0u8; vars.count()];
    let mut remaining = cols.to_vec();
    fill_row(vars, rows, 0, 0, rows.first().copied().unwrap_or(0), &mut remaining, &mut exps, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn fill_row(
    vars: Vars,
    rows: &[usize],
    i: usize,
    j: usize,
    left: usize,
    remaining: &mut [usize],
    exps: &mut [u8],
    out: &mut Vec<Monomial>,
) {
    if i == vars.n {
        if remaining.iter().all(|&c| c == 0) {
            out.push(Monomial::from_exponents(exps.to_vec()));
        }
        return;
    }
    if j + 1 == vars.r {
        if left <= remaining[j] {
            exps[vars.index(i, j)] = left as u8;
            remaining[j] -= left;
            let next = rows.get(i + 1).copied().unwrap_or(0);
            fill_row(vars, rows, i + 1, 0, next, remaining, exps, out);
            remaining[j] += left;
            exps[vars.index(i, j)] = 0;
        }
        return;
    }
    let tail: usize = remaining[j + 1..].iter().sum();
    let lo = left.saturating_sub(tail);
    for a in lo..=left.min(remaining[j]) {
        exps[vars.index(i, j)] = a as u8;
        remaining[j] -= a;
        fill_row(vars, rows, i, j + 1, left - a, remaining, exps, out);
        remaining[j] += a;
    }
    exps[vars.index(i, j)] = 0;
}

impl fmt::Display for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} generic matrix", self.n, self.r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_2x2() {
        let v = Vars::new(4, 2);
        let p = minor(v, &[0, 1], &[0, 1]).unwrap();
        assert_eq!(p.render(v), "-x12*x21+x11*x22");
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn table_counts() {
        let v = Vars::new(3, 2);
        // 3x2 tables with rows (1,1,1) and columns (2,1): choose the row with a 1 in column 2.
        assert_eq!(tables(v, &[1, 1, 1], &[2, 1]).len(), 3);
        assert_eq!(tables(v, &[2, 0, 0], &[1, 1]).len(), 1);
        assert!(tables(v, &[2, 0, 0], &[2, 1]).is_empty());
        let all = tables(Vars::new(2, 2), &[2, 2], &[2, 2]);
        assert_eq!(all.len(), 3);
        for m in all {
            assert_eq!(m.row_content(Vars::new(2, 2)), vec![2, 2]);
            assert_eq!(m.col_content(Vars::new(2, 2)), vec![2, 2]);
        }
    }

    #[test]
    fn derivation_and_overflow() {
        let v = Vars::new(2, 2);
        let x = |i, j| Poly::monomial(Monomial::one(v).times_var(v.index(i, j)), 1);
        let p = x(0, 0).mul(&x(0, 0)).unwrap();
        assert_eq!(p.derivative(v.index(0, 0)).unwrap(), x(0, 0).mul_monomial(&Monomial::one(v), 2).unwrap());
        let mut q = Poly::monomial(Monomial::one(v), i64::MAX);
        assert!(q.add_term(Monomial::one(v), 1).is_err());
    }

    #[test]
    fn subsets_lex() {
        assert_eq!(subsets(4, 2), vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
    }
}
