//! Brute-force verification of the local cohomology of the Kähler
//! differentials of the Plücker algebra `A = S^G`, `S = k[x_{ij}]`,
//! `G = SL(W)`, through the four-term complex
//!
//! ```text
//! (S⊗F)^G --d¹--> (S⊗U*)^G --d²--> (Ω_S)^G --d³--> (S⊗sl_r*)^G
//! ```
//!
//! with `H¹(C•) = H⁰_m(Ω_A)` at `(S⊗U*)^G` and `H²(C•) = H¹_m(Ω_A)` at `(Ω_S)^G`.
//!
//! Grading. Every term is graded by total `S`-degree, counting `p_K` (a
//! Plücker coordinate) as `r` and `dx` as `1`; all three maps preserve it.
//! The slice of `P`-degree `D` has total `S`-degree `D·r`:
//! `A_{D−2}⊗F → A_{D−1}⊗U* → (S_{Dr−1}⊗V*)^G → (S_{Dr}⊗sl_r*)^G`.
//!
//! Invariants. Each slice splits by `GL(E)`-weight `μ` (row content of the
//! exponent matrix); inside a weight space the `SL(W)`-invariants are the
//! vectors of constant `GL(W)`-weight killed by the raising operators
//! `e_j = ρ(E_{j,j+1})`. With `R_k` the raising matrix on the ambient weight
//! space of term `k` and `D_k` the differential,
//! `dim inv_k = n_k − rk R_k`, `dim ker d_k|inv = n_k − rk[R_k;D_k]` and
//! `dim im d_k|inv = rk[R_k;D_k] − rk R_k`. Only dominant `μ` are computed;
//! the others follow by permuting rows, so each block is weighted by the
//! size of its `S_n`-orbit.
//!
//! Conventions. `sl_r` has basis `E_{ab}` (`a ≠ b`, lexicographic) followed
//! by `H_t = E_{tt} − E_{t+1,t+1}`; `ρ(E_{ab}) = Σ_i x_{ia} ∂/∂x_{ib}`, which
//! is a Lie algebra homomorphism, and `sl_r*` carries the coadjoint action.
//! The module `H` of the exact sequences, `𝔪` and `J = 𝔪S` are never
//! materialised; only the cohomology of `C•` is.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::linalg::{kernel_of_columns, rank, RankMethod, SparseRow, TripletMatrix};
use crate::poly::{minor, subsets, tables, Monomial, Poly, Vars};
use crate::schur::{gl_dimension, h0_omega_degree2, plucker_relation_space, tensor_decompose, SchurDecomposition};
use crate::weights::{Partition, Weight};

const MODULE: &str = "cotangent_oracle";

/// Largest matrix shape accepted (`n·r` variables, `r!` terms per minor).
pub const MAX_N: usize = 10;
pub const MAX_R: usize = 5;

fn check_shape(r: usize, n: usize) -> Result<(), Error> {
    if r == 0 || r > n || n > MAX_N || r > MAX_R {
        return Err(Error::InvalidSize {
            module: MODULE,
            msg: format!("need 1 <= r <= n, n <= {MAX_N}, r <= {MAX_R}; got r={r}, n={n}"),
        });
    }
    Ok(())
}

/// A maximal minor `u_K`, `K` a 0-based row set.
#[derive(Clone, Debug)]
pub struct Minor {
    pub rows: Vec<usize>,
    pub poly: Poly,
}

/// All `C(n,r)` maximal minors, row sets in lexicographic order.
pub fn minors(r: usize, n: usize) -> Result<Vec<Minor>, Error> {
    check_shape(r, n)?;
    let vars = Vars::new(n, r);
    let cols: Vec<usize> = (0..r).collect();
    subsets(n, r)
        .into_iter()
        .map(|rows| Ok(Minor { poly: minor(vars, &rows, &cols)?, rows }))
        .collect()
}

/// A quadric `Σ c·p_I p_J` (`I ≤ J` as minor indices) in the kernel of `Sym²U* → S_{2r}`.
#[derive(Clone, Debug, Serialize)]
pub struct Relation {
    /// `GL(E)`-weight `e_I + e_J`.
    pub weight: Vec<usize>,
    pub coefficients: Vec<(usize, usize, i64)>,
}

impl Relation {
    /// `∂f/∂p_K` evaluated at the minors, for each `K` with a nonzero result.
    fn partials(&self, minors: &[Minor]) -> Result<Vec<(usize, Poly)>, Error> {
        let mut by_k: BTreeMap<usize, Poly> = BTreeMap::new();
        for &(i, j, c) in &self.coefficients {
            if i == j {
                by_k.entry(i).or_default().add_scaled(&minors[i].poly, 2 * c)?;
            } else {
                by_k.entry(i).or_default().add_scaled(&minors[j].poly, c)?;
                by_k.entry(j).or_default().add_scaled(&minors[i].poly, c)?;
            }
        }
        Ok(by_k.into_iter().filter(|(_, p)| !p.is_zero()).collect())
    }

    pub fn render(&self, minors: &[Minor]) -> String {
        let p = |k: usize| format!("p{}", minors[k].rows.iter().map(|i| (i + 1).to_string()).collect::<String>());
        let mut s = String::new();
        for (idx, &(i, j, c)) in self.coefficients.iter().enumerate() {
            let sign = if c < 0 { "-" } else if idx > 0 { "+" } else { "" };
            let mag = if c.abs() == 1 { String::new() } else { format!("{}*", c.abs()) };
            let body = if i == j { format!("{}^2", p(i)) } else { format!("{}*{}", p(i), p(j)) };
            s.push_str(&format!("{sign}{mag}{body}"));
        }
        s
    }
}

fn row_weight(rows: &[usize], n: usize) -> Vec<usize> {
    let mut w = vec![0; n];
    for &i in rows {
        w[i] += 1;
    }
    w
}

fn poly_columns(polys: &[Poly]) -> Vec<SparseRow> {
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    polys
        .iter()
        .map(|p| {
            let mut row: SparseRow = p
                .terms()
                .map(|(m, c)| {
                    let next = index.len();
                    (*index.entry(m.clone()).or_insert(next), c)
                })
                .collect();
            row.sort_unstable();
            row
        })
        .collect()
}

/// Basis of the quadratic relations among the minors, computed as the kernel
/// of the evaluation map weight by weight.
pub fn plucker_relations(r: usize, n: usize) -> Result<Vec<Relation>, Error> {
    let ms = minors(r, n)?;
    let mut groups: BTreeMap<Vec<usize>, Vec<(usize, usize)>> = BTreeMap::new();
    for i in 0..ms.len() {
        for j in i..ms.len() {
            let mut w = row_weight(&ms[i].rows, n);
            for &k in &ms[j].rows {
                w[k] += 1;
            }
            groups.entry(w).or_default().push((i, j));
        }
    }
    let mut out = Vec::new();
    for (weight, pairs) in groups.into_iter().rev() {
        if pairs.len() < 2 {
            continue;
        }
        let products: Vec<Poly> =
            pairs.iter().map(|&(i, j)| ms[i].poly.mul(&ms[j].poly)).collect::<Result<_, _>>()?;
        for v in kernel_of_columns(&poly_columns(&products)) {
            let coefficients = pairs
                .iter()
                .zip(v.iter())
                .filter(|(_, c)| **c != BigInt::from(0))
                .map(|(&(i, j), c)| {
                    i64::try_from(c).map(|c| (i, j, c)).map_err(|_| Error::Overflow {
                        module: MODULE,
                        msg: "relation coefficient exceeds i64".into(),
                    })
                })
                .collect::<Result<_, _>>()?;
            out.push(Relation { weight: weight.clone(), coefficients });
        }
    }
    Ok(out)
}

/// Basis element of `sl_r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SlElement {
    /// `E_{ab}`: `w_b ↦ w_a`, i.e. `w*_b ⊗ w_a`.
    E(usize, usize),
    /// `E_{tt} − E_{t+1,t+1}`.
    H(usize),
}

impl fmt::Display for SlElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlElement::E(a, b) => write!(f, "E{}{}", a + 1, b + 1),
            SlElement::H(t) => write!(f, "H{}", t + 1),
        }
    }
}

pub fn sl_basis(r: usize) -> Vec<SlElement> {
    let mut out = Vec::new();
    for a in 0..r {
        for b in 0..r {
            if a != b {
                out.push(SlElement::E(a, b));
            }
        }
    }
    out.extend((0..r.saturating_sub(1)).map(SlElement::H));
    out
}

type Matrix = Vec<Vec<i64>>;

fn sl_matrix(x: SlElement, r: usize) -> Matrix {
    let mut m = vec![vec![0; r]; r];
    match x {
        SlElement::E(a, b) => m[a][b] = 1,
        SlElement::H(t) => {
            m[t][t] = 1;
            m[t + 1][t + 1] = -1;
        }
    }
    m
}

/// Coordinates of a traceless matrix in [`sl_basis`].
fn sl_coords(m: &Matrix, basis: &[SlElement]) -> Vec<(usize, i64)> {
    let r = m.len();
    let mut partial = 0;
    let mut diag = vec![0; r];
    for (t, d) in diag.iter_mut().enumerate().take(r.saturating_sub(1)) {
        partial += m[t][t];
        *d = partial;
    }
    basis
        .iter()
        .enumerate()
        .map(|(k, x)| match *x {
            SlElement::E(a, b) => (k, m[a][b]),
            SlElement::H(t) => (k, diag[t]),
        })
        .filter(|&(_, c)| c != 0)
        .collect()
}

fn bracket(a: &Matrix, b: &Matrix) -> Matrix {
    let r = a.len();
    let mut out = vec![vec![0; r]; r];
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                out[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
            }
        }
    }
    out
}

/// A linear vector field `Σ c · x_s ∂/∂x_t` as triples `(c, s, t)`.
pub type VectorField = Vec<(i64, usize, usize)>;

/// `ρ(X)` for every basis element of `sl_r`.
pub fn sl_action_rho(r: usize, n: usize) -> Result<Vec<(SlElement, VectorField)>, Error> {
    check_shape(r, n)?;
    let vars = Vars::new(n, r);
    Ok(sl_basis(r)
        .into_iter()
        .map(|x| {
            let field = match x {
                SlElement::E(a, b) => (0..n).map(|i| (1, vars.index(i, a), vars.index(i, b))).collect(),
                SlElement::H(t) => (0..n)
                    .flat_map(|i| [(1, vars.index(i, t), vars.index(i, t)), (-1, vars.index(i, t + 1), vars.index(i, t + 1))])
                    .collect(),
            };
            (x, field)
        })
        .collect())
}

/// The four terms of the complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum OracleModule {
    /// `S⊗F`.
    #[serde(rename = "S(x)F")]
    Relations,
    /// `S⊗U*`.
    #[serde(rename = "S(x)U*")]
    Plucker,
    /// `Ω_S = S⊗V*`.
    #[serde(rename = "Omega_S")]
    Differentials,
    /// `S⊗sl_r*`.
    #[serde(rename = "S(x)sl*")]
    SlDual,
}

impl OracleModule {
    pub const ALL: [OracleModule; 4] =
        [OracleModule::Relations, OracleModule::Plucker, OracleModule::Differentials, OracleModule::SlDual];

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for OracleModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OracleModule::Relations => "S(x)F",
            OracleModule::Plucker => "S(x)U*",
            OracleModule::Differentials => "Omega_S",
            OracleModule::SlDual => "S(x)sl*",
        })
    }
}

impl FromStr for OracleModule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "f" | "relations" | "s(x)f" => Ok(OracleModule::Relations),
            "u" | "plucker" | "s(x)u*" => Ok(OracleModule::Plucker),
            "omega" | "omega_s" | "differentials" => Ok(OracleModule::Differentials),
            "sl" | "sl*" | "s(x)sl*" => Ok(OracleModule::SlDual),
            _ => Err(Error::precondition(MODULE, format!("unknown module `{s}` (f, u, omega, sl)"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct OracleConfig {
    pub rank_method: RankMethod,
    /// Largest ambient weight space (per term and weight) before giving up.
    pub max_block: usize,
    /// Largest `P`-degree accepted.
    pub max_degree: usize,
    /// Directory receiving triplet dumps of every block matrix.
    pub dump_dir: Option<PathBuf>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { rank_method: RankMethod::Exact, max_block: 200_000, max_degree: 8, dump_dir: None }
    }
}

/// Ambient basis element: a monomial tensored with a label (relation index,
/// minor index, variable index or `sl_r` basis index).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Elem {
    mono: Monomial,
    label: u32,
}

type Comb = Vec<((u32, Monomial), i64)>;

/// Precomputed data for one `(r, n)`.
pub struct Oracle {
    r: usize,
    n: usize,
    vars: Vars,
    minors: Vec<Minor>,
    relations: Vec<Relation>,
    /// `∂f/∂p_K (u)` per relation.
    relation_partials: Vec<Vec<(usize, Poly)>>,
    /// `∂u_K/∂x_v` per minor.
    gradients: Vec<Vec<(usize, Poly)>>,
    basis: Vec<SlElement>,
    /// `ρ_v(X) = c·x_s` as `(X index, c, s)` per variable `v`.
    rho_cols: Vec<Vec<(usize, i64, usize)>>,
    /// `e_j · X* = Σ c Z*` as `(Z, c)`, indexed `[j][X]`.
    coadjoint: Vec<Vec<Vec<(usize, i64)>>>,
    config: OracleConfig,
}

/// Ranks for one dominant weight of one slice.
#[derive(Clone, Debug, Serialize)]
pub struct WeightBlock {
    pub weight: Partition,
    /// Number of distinct permutations of the weight.
    pub orbit: u64,
    /// Ambient weight-space sizes (constant `GL(W)`-weight) of the four terms.
    pub ambient: [usize; 4],
    pub invariant: [usize; 4],
    /// Ranks of `d¹, d², d³` on invariants.
    pub rank_d: [usize; 3],
    pub h1: usize,
    pub h2: usize,
    pub composites_vanish: bool,
    pub certified: bool,
}

impl WeightBlock {
    pub fn ker_d(&self, k: usize) -> usize {
        self.invariant[k] - self.rank_d[k]
    }
}

/// One `P`-degree of the complex.
#[derive(Clone, Debug, Serialize)]
pub struct ComplexSlice {
    pub r: usize,
    pub n: usize,
    /// `P`-degree `D`; total `S`-degree is `D·r`.
    pub degree: usize,
    pub blocks: Vec<WeightBlock>,
    pub invariant_dims: [u64; 4],
    pub ambient_dims: [u64; 4],
    pub rank_d: [u64; 3],
    pub h1: u64,
    pub h2: u64,
    pub composites_vanish: bool,
    pub certified: bool,
    pub elapsed_ms: u128,
}

impl ComplexSlice {
    /// Multiplicities over dominant weights of a per-block quantity.
    pub fn character(&self, f: impl Fn(&WeightBlock) -> usize) -> BTreeMap<Partition, u64> {
        self.blocks
            .iter()
            .filter_map(|b| {
                let v = f(b) as u64;
                (v > 0).then(|| (b.weight.clone(), v))
            })
            .collect()
    }

    pub fn h1_decomposition(&self) -> Result<SchurDecomposition, Error> {
        SchurDecomposition::from_dominant_character(&self.character(|b| b.h1), self.n)
    }

    pub fn h2_decomposition(&self) -> Result<SchurDecomposition, Error> {
        SchurDecomposition::from_dominant_character(&self.character(|b| b.h2), self.n)
    }
}

fn orbit_size(w: &[usize]) -> u64 {
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for &x in w {
        *counts.entry(x).or_default() += 1;
    }
    let mut out: u128 = 1;
    let mut k: u128 = 0;
    for (_, c) in counts {
        for i in 1..=c as u128 {
            k += 1;
            out = out * k / i;
        }
    }
    out as u64
}

fn sub_weight(mu: &[usize], w: &[usize]) -> Option<Vec<usize>> {
    mu.iter().zip(w).map(|(a, b)| a.checked_sub(*b)).collect()
}

fn normalize(comb: Comb) -> Comb {
    let mut map: HashMap<(u32, Monomial), i64> = HashMap::new();
    for (k, c) in comb {
        *map.entry(k).or_default() += c;
    }
    let mut out: Comb = map.into_iter().filter(|(_, c)| *c != 0).collect();
    out.sort_unstable();
    out
}

impl Oracle {
    pub fn new(r: usize, n: usize, config: OracleConfig) -> Result<Self, Error> {
        check_shape(r, n)?;
        let vars = Vars::new(n, r);
        let minors = minors(r, n)?;
        let relations = if r < n { plucker_relations(r, n)? } else { Vec::new() };
        let relation_partials = relations.iter().map(|f| f.partials(&minors)).collect::<Result<_, _>>()?;
        let gradients = minors
            .iter()
            .map(|m| {
                (0..vars.count())
                    .map(|v| m.poly.derivative(v).map(|p| (v, p)))
                    .filter(|res| res.as_ref().map_or(true, |(_, p)| !p.is_zero()))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<_, _>>()?;
        let basis = sl_basis(r);
        let index_of = |x: SlElement| basis.iter().position(|&y| y == x).expect("basis element");
        let mut rho_cols = vec![Vec::new(); vars.count()];
        for i in 0..n {
            for b in 0..r {
                let v = vars.index(i, b);
                for a in (0..r).filter(|&a| a != b) {
                    rho_cols[v].push((index_of(SlElement::E(a, b)), 1, vars.index(i, a)));
                }
                if b + 1 < r {
                    rho_cols[v].push((index_of(SlElement::H(b)), 1, v));
                }
                if b >= 1 {
                    rho_cols[v].push((index_of(SlElement::H(b - 1)), -1, v));
                }
            }
        }
        // (Y·φ)(Z) = Y(φ(Z)) − φ([Y,Z]), so Y·X* = −Σ_Z X*([Y,Z]) Z*.
        let mut coadjoint = vec![vec![Vec::new(); basis.len()]; r.saturating_sub(1)];
        for (j, row) in coadjoint.iter_mut().enumerate() {
            let y = sl_matrix(SlElement::E(j, j + 1), r);
            for (z, &zel) in basis.iter().enumerate() {
                for (x, c) in sl_coords(&bracket(&y, &sl_matrix(zel, r)), &basis) {
                    row[x].push((z, -c));
                }
            }
        }
        Ok(Oracle { r, n, vars, minors, relations, relation_partials, gradients, basis, rho_cols, coadjoint, config })
    }

    pub fn minors(&self) -> &[Minor] {
        &self.minors
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// `d³(dx_v)` as `(X, c, s)`: its value on `X` is `c·x_s`.
    pub fn d3_of_variable(&self, v: usize) -> Vec<(SlElement, i64, usize)> {
        self.rho_cols[v].iter().map(|&(x, c, s)| (self.basis[x], c, s)).collect()
    }

    pub fn vars(&self) -> Vars {
        self.vars
    }

    fn check_degree(&self, degree: usize) -> Result<(), Error> {
        if degree > self.config.max_degree {
            return Err(Error::ResourceLimit {
                module: MODULE,
                msg: format!("degree {degree} beyond cutoff {}", self.config.max_degree),
            });
        }
        Ok(())
    }

    /// Ambient basis of a term at `P`-degree `degree` and weight `mu`.
    fn ambient(&self, module: OracleModule, degree: usize, mu: &[usize]) -> Result<Vec<Elem>, Error> {
        let (n, r, vars) = (self.n, self.r, self.vars);
        let mut out = Vec::new();
        let cols = |c: usize| vec![c; r];
        match module {
            OracleModule::Relations => {
                if degree >= 2 {
                    for (k, f) in self.relations.iter().enumerate() {
                        if let Some(rest) = sub_weight(mu, &f.weight) {
                            for m in tables(vars, &rest, &cols(degree - 2)) {
                                out.push(Elem { mono: m, label: k as u32 });
                            }
                        }
                    }
                }
            }
            OracleModule::Plucker => {
                if degree >= 1 {
                    for (k, u) in self.minors.iter().enumerate() {
                        if let Some(rest) = sub_weight(mu, &row_weight(&u.rows, n)) {
                            for m in tables(vars, &rest, &cols(degree - 1)) {
                                out.push(Elem { mono: m, label: k as u32 });
                            }
                        }
                    }
                }
            }
            OracleModule::Differentials => {
                if degree >= 1 {
                    for v in 0..vars.count() {
                        let (i, j) = (vars.row(v), vars.col(v));
                        if mu[i] == 0 {
                            continue;
                        }
                        let mut rest = mu.to_vec();
                        rest[i] -= 1;
                        let mut c = cols(degree);
                        c[j] -= 1;
                        for m in tables(vars, &rest, &c) {
                            out.push(Elem { mono: m, label: v as u32 });
                        }
                    }
                }
            }
            OracleModule::SlDual => {
                if degree >= 1 {
                    for (k, x) in self.basis.iter().enumerate() {
                        let mut c = cols(degree);
                        if let SlElement::E(a, b) = *x {
                            // E_ab* has weight e_b − e_a.
                            c[a] += 1;
                            c[b] -= 1;
                        }
                        for m in tables(vars, mu, &c) {
                            out.push(Elem { mono: m, label: k as u32 });
                        }
                    }
                }
            }
        }
        if out.len() > self.config.max_block {
            return Err(Error::ResourceLimit {
                module: MODULE,
                msg: format!("{module} weight space {mu:?} at degree {degree} has {} elements", out.len()),
            });
        }
        Ok(out)
    }

    fn raise_mono(&self, m: &Monomial, j: usize) -> Vec<(Monomial, i64)> {
        (0..self.n)
            .filter_map(|i| {
                let s = self.vars.index(i, j + 1);
                let e = m.exponent(s);
                (e > 0).then(|| (m.div_var(s).expect("positive exponent").times_var(self.vars.index(i, j)), e as i64))
            })
            .collect()
    }

    /// `e_j` applied to an ambient element.
    fn raise(&self, module: OracleModule, el: &Elem, j: usize) -> Comb {
        let mut out: Comb = self.raise_mono(&el.mono, j).into_iter().map(|(m, c)| ((el.label, m), c)).collect();
        match module {
            OracleModule::Differentials => {
                let v = el.label as usize;
                if self.vars.col(v) == j + 1 {
                    out.push(((self.vars.index(self.vars.row(v), j) as u32, el.mono.clone()), 1));
                }
            }
            OracleModule::SlDual => {
                for &(z, c) in &self.coadjoint[j][el.label as usize] {
                    out.push(((z as u32, el.mono.clone()), c));
                }
            }
            _ => {}
        }
        normalize(out)
    }

    fn times(&self, mono: &Monomial, label: usize, p: &Poly, out: &mut Comb) {
        for (m, c) in p.terms() {
            out.push(((label as u32, mono.mul(m)), c));
        }
    }

    /// `d^{k+1}` on an ambient element of term `k`; targets term `k+1`.
    fn differential(&self, module: OracleModule, el: &Elem) -> Comb {
        let mut out = Comb::new();
        match module {
            OracleModule::Relations => {
                for (k, p) in &self.relation_partials[el.label as usize] {
                    self.times(&el.mono, *k, p, &mut out);
                }
            }
            OracleModule::Plucker => {
                for (v, p) in &self.gradients[el.label as usize] {
                    self.times(&el.mono, *v, p, &mut out);
                }
            }
            OracleModule::Differentials => {
                for &(x, c, s) in &self.rho_cols[el.label as usize] {
                    out.push(((x as u32, el.mono.times_var(s)), c));
                }
            }
            OracleModule::SlDual => {}
        }
        normalize(out)
    }

    fn apply_linear(&self, module: OracleModule, comb: &Comb) -> Comb {
        let mut out = Comb::new();
        for ((label, mono), c) in comb {
            for (k, v) in self.differential(module, &Elem { mono: mono.clone(), label: *label }) {
                out.push((k, v * c));
            }
        }
        normalize(out)
    }

    fn rank_of(&self, rows: &[SparseRow]) -> (usize, bool) {
        let res = rank(rows, self.config.rank_method);
        (res.rank, res.certified)
    }

    /// Raising vectors and `[R; D]` vectors of one term's ambient basis.
    fn block_rows(&self, module: OracleModule, elems: &[Elem], with_d: bool) -> (Vec<SparseRow>, Vec<SparseRow>, usize, usize) {
        let mut index: HashMap<(u16, u32, Monomial), usize> = HashMap::new();
        let mut intern = |tag: u16, key: (u32, Monomial)| {
            let next = index.len();
            *index.entry((tag, key.0, key.1)).or_insert(next)
        };
        let mut raise_rows = Vec::with_capacity(elems.len());
        let mut diff_rows = Vec::with_capacity(elems.len());
        for el in elems {
            let mut row: SparseRow = Vec::new();
            for j in 0..self.r.saturating_sub(1) {
                for (k, c) in self.raise(module, el, j) {
                    row.push((intern(j as u16, k), c));
                }
            }
            row.sort_unstable();
            raise_rows.push(row);
            if with_d {
                let d: SparseRow = self.differential(module, el).into_iter().map(|(k, c)| (intern(u16::MAX, k), c)).collect();
                diff_rows.push(d);
            }
        }
        let raise_keys = index.keys().filter(|k| k.0 != u16::MAX).count();
        let total = index.len();
        let combined: Vec<SparseRow> = raise_rows
            .iter()
            .zip(diff_rows.iter())
            .map(|(a, b)| {
                let mut v: SparseRow = a.iter().chain(b.iter()).copied().collect();
                v.sort_unstable();
                v
            })
            .collect();
        (raise_rows, combined, raise_keys, total)
    }

    fn dump(&self, degree: usize, mu: &[usize], name: &str, rows: &[SparseRow], nrows: usize) -> Result<(), Error> {
        let Some(dir) = &self.config.dump_dir else { return Ok(()) };
        let m = TripletMatrix::from_columns(rows, nrows);
        let tag: Vec<String> = mu.iter().map(|x| x.to_string()).collect();
        let file = dir.join(format!("r{}_n{}_D{}_mu{}_{}.txt", self.r, self.n, degree, tag.join("-"), name));
        let comment = format!(
            "{name}: r={}, n={}, P-degree {degree}, weight ({}); columns are ambient basis elements",
            self.r,
            self.n,
            tag.join(",")
        );
        std::fs::write(&file, m.to_text(&comment)).map_err(|e| Error::ResourceLimit {
            module: MODULE,
            msg: format!("cannot write {}: {e}", file.display()),
        })
    }

    fn block(&self, degree: usize, mu: &Partition) -> Result<WeightBlock, Error> {
        let w = mu.to_weight(self.n);
        let mu_v: Vec<usize> = w.entries().iter().map(|x| usize::try_from(x).expect("partition")).collect();
        let mut ambient = [0; 4];
        let mut invariant = [0; 4];
        let mut rank_rd = [0; 3];
        let mut certified = true;
        let mut composites_vanish = true;
        for module in OracleModule::ALL {
            let k = module.index();
            let elems = self.ambient(module, degree, &mu_v)?;
            ambient[k] = elems.len();
            if elems.is_empty() {
                continue;
            }
            let with_d = module != OracleModule::SlDual;
            let (raise_rows, combined, raise_keys, total) = self.block_rows(module, &elems, with_d);
            let (rk_r, c1) = self.rank_of(&raise_rows);
            invariant[k] = ambient[k] - rk_r;
            certified &= c1;
            if with_d {
                let (rk_rd, c2) = self.rank_of(&combined);
                rank_rd[k] = rk_rd - rk_r;
                certified &= c2;
                self.dump(degree, &mu_v, &format!("R{}D{}", k + 1, k + 1), &combined, total)?;
            } else {
                self.dump(degree, &mu_v, &format!("R{}", k + 1), &raise_rows, raise_keys)?;
            }
            if matches!(module, OracleModule::Relations | OracleModule::Plucker) {
                let next = if module == OracleModule::Relations { OracleModule::Plucker } else { OracleModule::Differentials };
                for el in &elems {
                    if !self.apply_linear(next, &self.differential(module, el)).is_empty() {
                        composites_vanish = false;
                    }
                }
            }
        }
        let ker = |k: usize| invariant[k] - rank_rd[k];
        let h1 = ker(1) - rank_rd[0];
        let h2 = ker(2) - rank_rd[1];
        Ok(WeightBlock {
            weight: mu.clone(),
            orbit: orbit_size(&mu_v),
            ambient,
            invariant,
            rank_d: rank_rd,
            h1,
            h2,
            composites_vanish,
            certified,
        })
    }

    /// All four terms and three maps at `P`-degree `degree`.
    pub fn build_complex_slice(&self, degree: usize) -> Result<ComplexSlice, Error> {
        self.check_degree(degree)?;
        let start = Instant::now();
        let weights = Partition::all_of(degree * self.r, self.n);
        let blocks: Vec<WeightBlock> =
            weights.par_iter().map(|mu| self.block(degree, mu)).collect::<Result<_, _>>()?;
        let total = |f: &dyn Fn(&WeightBlock) -> usize| blocks.iter().map(|b| b.orbit * f(b) as u64).sum::<u64>();
        let slice = ComplexSlice {
            r: self.r,
            n: self.n,
            degree,
            invariant_dims: std::array::from_fn(|k| total(&|b| b.invariant[k])),
            ambient_dims: std::array::from_fn(|k| total(&|b| b.ambient[k])),
            rank_d: std::array::from_fn(|k| total(&|b| b.rank_d[k])),
            h1: total(&|b| b.h1),
            h2: total(&|b| b.h2),
            composites_vanish: blocks.iter().all(|b| b.composites_vanish),
            certified: blocks.iter().all(|b| b.certified),
            elapsed_ms: start.elapsed().as_millis(),
            blocks,
        };
        Ok(slice)
    }

    /// Invariant subspace of one term at `P`-degree `degree` and weight `mu`,
    /// as coefficient vectors over the rendered ambient basis.
    pub fn invariant_basis(
        &self,
        module: OracleModule,
        degree: usize,
        mu: &[usize],
    ) -> Result<Vec<Vec<(String, BigInt)>>, Error> {
        self.check_degree(degree)?;
        if mu.len() != self.n {
            return Err(Error::InvalidSize { module: MODULE, msg: format!("weight needs {} entries", self.n) });
        }
        let elems = self.ambient(module, degree, mu)?;
        let (raise_rows, _, _, _) = self.block_rows(module, &elems, false);
        let names: Vec<String> = elems.iter().map(|e| self.render_elem(module, e)).collect();
        Ok(kernel_of_columns(&raise_rows)
            .into_iter()
            .map(|v| {
                v.into_iter()
                    .enumerate()
                    .filter(|(_, c)| *c != BigInt::from(0))
                    .map(|(i, c)| (names[i].clone(), c))
                    .collect()
            })
            .collect())
    }

    fn render_elem(&self, module: OracleModule, e: &Elem) -> String {
        let m = e.mono.render(self.vars);
        let l = e.label as usize;
        match module {
            OracleModule::Relations => format!("{m}(x)f{}", l + 1),
            OracleModule::Plucker => {
                format!("{m}(x)p{}", self.minors[l].rows.iter().map(|i| (i + 1).to_string()).collect::<String>())
            }
            OracleModule::Differentials => format!("{m}(x)d{}", self.vars.name(l)),
            OracleModule::SlDual => format!("{m}(x){}*", self.basis[l]),
        }
    }
}

/// Predicted `GL(E)`-decompositions of one slice.
#[derive(Clone, Debug, Serialize)]
pub struct Predictions {
    pub degree: usize,
    /// The four terms, in complex order.
    pub terms: [SchurDecomposition; 4],
    pub image_d2: SchurDecomposition,
    pub kernel_d3: SchurDecomposition,
    pub h1: SchurDecomposition,
    pub h2: SchurDecomposition,
}

fn rect(value: usize, len: usize, n: usize) -> Weight {
    Partition::rectangle(value, len).to_weight(n)
}

fn add_if_fits(out: &mut SchurDecomposition, parts: Vec<usize>, n: usize) -> Result<(), Error> {
    let p = Partition::new(parts)?;
    if p.length() <= n {
        out.add_partition(&p, 1)?;
    }
    Ok(())
}

/// Representation-theoretic prediction for `P`-degree `degree ≥ 1`.
pub fn predictions(r: usize, n: usize, degree: usize) -> Result<Predictions, Error> {
    check_shape(r, n)?;
    if degree == 0 {
        return Err(Error::precondition(MODULE, "degree must be at least 1"));
    }
    let d = degree;
    let wedge = Partition::rectangle(1, r);
    // A_{D−2} ⊗ F
    let mut c1 = SchurDecomposition::new(n);
    if d >= 2 && r < n {
        for t in plucker_relation_space(r, n)?.terms() {
            let f = Partition::try_from(&t.weight)?;
            let part = tensor_decompose(&rect(d - 2, r, n), &f, n)?;
            for _ in 0..t.multiplicity {
                c1.merge(&part)?;
            }
        }
    }
    // A_{D−1} ⊗ U*
    let c2 = tensor_decompose(&rect(d - 1, r, n), &wedge, n)?;
    // S_{(D^{r−1}, D−1)} ⊗ E*
    let mut top = vec![d; r - 1];
    top.push(d - 1);
    let c3 = tensor_decompose(&Partition::new(top)?.to_weight(n), &Partition::rectangle(1, 1), n)?;
    // S_{(D+1, D^{r−2}, D−1)}
    let mut c4 = SchurDecomposition::new(n);
    if r >= 2 {
        let mut parts = vec![d + 1];
        parts.extend(std::iter::repeat_n(d, r - 2));
        parts.push(d - 1);
        add_if_fits(&mut c4, parts, n)?;
    }
    let mut image = SchurDecomposition::new(n);
    if d == 1 {
        image.add_partition(&wedge, 1)?;
    } else {
        add_if_fits(&mut image, vec![d; r], n)?;
        let mut parts = vec![d; r - 1];
        parts.extend([d - 1, 1]);
        add_if_fits(&mut image, parts, n)?;
    }
    let h1 = if d == 2 && r < n { h0_omega_degree2(r, n)? } else { SchurDecomposition::new(n) };
    Ok(Predictions {
        degree,
        terms: [c1, c2, c3, c4],
        kernel_d3: image.clone(),
        image_d2: image,
        h1,
        h2: SchurDecomposition::new(n),
    })
}

/// Comparison of a computed slice with [`predictions`], weight by weight.
#[derive(Clone, Debug, Serialize)]
pub struct SliceCheck {
    pub degree: usize,
    pub invariants_match: [bool; 4],
    pub image_d2_match: bool,
    pub kernel_d3_match: bool,
    pub h1_match: bool,
    pub h2_match: bool,
    pub composites_vanish: bool,
    pub certified: bool,
}

impl SliceCheck {
    pub fn passed(&self) -> bool {
        self.invariants_match.iter().all(|&b| b)
            && self.image_d2_match
            && self.kernel_d3_match
            && self.h1_match
            && self.h2_match
            && self.composites_vanish
            && self.certified
    }
}

fn same(slice: &ComplexSlice, f: impl Fn(&WeightBlock) -> usize, predicted: &SchurDecomposition) -> Result<bool, Error> {
    Ok(slice.character(f) == predicted.dominant_character()?)
}

pub fn check_slice(slice: &ComplexSlice) -> Result<SliceCheck, Error> {
    let p = predictions(slice.r, slice.n, slice.degree)?;
    let mut invariants_match = [false; 4];
    for (k, m) in invariants_match.iter_mut().enumerate() {
        *m = same(slice, |b| b.invariant[k], &p.terms[k])?;
    }
    Ok(SliceCheck {
        degree: slice.degree,
        invariants_match,
        image_d2_match: same(slice, |b| b.rank_d[1], &p.image_d2)?,
        kernel_d3_match: same(slice, |b| b.ker_d(2), &p.kernel_d3)?,
        h1_match: same(slice, |b| b.h1, &p.h1)?,
        h2_match: same(slice, |b| b.h2, &p.h2)?,
        composites_vanish: slice.composites_vanish,
        certified: slice.certified,
    })
}

/// Invariant subspace of one term at one degree, with its prediction.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantSlice {
    pub module: OracleModule,
    pub degree: usize,
    pub dimension: u64,
    pub character: BTreeMap<Partition, u64>,
    pub predicted: SchurDecomposition,
    pub matches: bool,
}

pub fn invariants_slice(oracle: &Oracle, module: OracleModule, degree: usize) -> Result<InvariantSlice, Error> {
    let slice = oracle.build_complex_slice(degree)?;
    let k = module.index();
    let predicted = predictions(oracle.r, oracle.n, degree)?.terms[k].clone();
    let character = slice.character(|b| b.invariant[k]);
    let matches = character == predicted.dominant_character()?;
    Ok(InvariantSlice { module, degree, dimension: slice.invariant_dims[k], character, predicted, matches })
}

#[derive(Clone, Debug, Serialize)]
pub struct CohomologyRow {
    pub degree: usize,
    pub h1: u64,
    pub h2: u64,
    /// `H¹(C•)` as a `GL(E)`-module.
    pub h1_decomposition: String,
    pub h2_decomposition: String,
    /// Ambient sizes of the four terms (all weights).
    pub sizes: [u64; 4],
    pub invariant_dims: [u64; 4],
    pub certified: bool,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct CohomologyTable {
    pub r: usize,
    pub n: usize,
    pub rows: Vec<CohomologyRow>,
    /// Why the table stops early, if it does.
    pub truncated: Option<String>,
}

/// `dim H¹(C•)_D` and `dim H²(C•)_D` for `1 ≤ D ≤ d_max`. Resource limits end
/// the table early with a truncation marker instead of failing.
pub fn local_cohomology_dims(oracle: &Oracle, d_max: usize) -> Result<CohomologyTable, Error> {
    local_cohomology_range(oracle, 1, d_max)
}

/// As [`local_cohomology_dims`] for `d_min ≤ D ≤ d_max`.
pub fn local_cohomology_range(oracle: &Oracle, d_min: usize, d_max: usize) -> Result<CohomologyTable, Error> {
    if d_min == 0 {
        return Err(Error::precondition(MODULE, "degrees start at 1"));
    }
    let mut rows = Vec::new();
    let mut truncated = None;
    for degree in d_min..=d_max {
        log::info!("oracle r={} n={}: degree {degree}", oracle.r, oracle.n);
        let slice = match oracle.build_complex_slice(degree) {
            Ok(s) => s,
            Err(e @ Error::ResourceLimit { .. }) => {
                truncated = Some(format!("stopped before degree {degree}: {e}"));
                break;
            }
            Err(e) => return Err(e),
        };
        rows.push(CohomologyRow {
            degree,
            h1: slice.h1,
            h2: slice.h2,
            h1_decomposition: slice.h1_decomposition()?.to_string(),
            h2_decomposition: slice.h2_decomposition()?.to_string(),
            sizes: slice.ambient_dims,
            invariant_dims: slice.invariant_dims,
            certified: slice.certified,
            elapsed_ms: slice.elapsed_ms,
        });
    }
    Ok(CohomologyTable { r: oracle.r, n: oracle.n, rows, truncated })
}

/// `dim A_m` from the span of products of `m` minors, against `dim S_{(m^r)}`.
#[derive(Clone, Debug, Serialize)]
pub struct HilbertCheck {
    pub m: usize,
    pub computed: u64,
    pub predicted: u64,
}

pub fn hilbert_function(r: usize, n: usize, m: usize) -> Result<HilbertCheck, Error> {
    let ms = minors(r, n)?;
    let mut groups: BTreeMap<Vec<usize>, Vec<Vec<usize>>> = BTreeMap::new();
    let mut choice = Vec::new();
    multisets(ms.len(), m, 0, &mut choice, &mut |c| {
        let mut w = vec![0; n];
        for &k in c {
            for &i in &ms[k].rows {
                w[i] += 1;
            }
        }
        // Dominant weights suffice; the rest follow by symmetry.
        if w.windows(2).all(|p| p[0] >= p[1]) {
            groups.entry(w).or_default().push(c.to_vec());
        }
    });
    let vars = Vars::new(n, r);
    let mut computed = 0u64;
    for (w, prods) in groups {
        let polys: Vec<Poly> = prods
            .iter()
            .map(|c| c.iter().try_fold(Poly::monomial(Monomial::one(vars), 1), |acc, &k| acc.mul(&ms[k].poly)))
            .collect::<Result<_, _>>()?;
        computed += orbit_size(&w) * crate::linalg::rank_exact(&poly_columns(&polys)) as u64;
    }
    let predicted = u64::try_from(gl_dimension(&rect(m, r, n), n)?).map_err(|_| Error::Overflow {
        module: MODULE,
        msg: "dimension exceeds u64".into(),
    })?;
    Ok(HilbertCheck { m, computed, predicted })
}

fn multisets(k: usize, m: usize, start: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if cur.len() == m {
        visit(cur);
        return;
    }
    for i in start..k {
        cur.push(i);
        multisets(k, m, i, cur, visit);
        cur.pop();
    }
}

/// Checks on the explicit vectors used to show that `d²` and `d³` are nonzero
/// on the relevant isotypic components.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub r: usize,
    pub n: usize,
    pub m: usize,
    /// `d²(u₁^m ⊗ du₁) ≠ 0`.
    pub d2_u1_nonzero: bool,
    /// `GL(E)`-weight of `u₁^m ⊗ du₁`, expected `((m+1)^r)`.
    pub u1_weight: Vec<usize>,
    /// `d²(u₁^m ⊗ du₂) ≠ 0`; absent when `r = n`.
    pub d2_u2_nonzero: Option<bool>,
    /// Expected `((m+1)^{r−1}, m, 1)`.
    pub u2_weight: Option<Vec<usize>>,
    /// Weight of `δ`, expected `(2, 1^{r−2}, 0^{n−r+1})`.
    pub delta_weight: Vec<usize>,
    pub delta_weight_expected: Vec<usize>,
    /// `δ` is killed by every raising operator.
    pub delta_invariant: bool,
    /// `d³(δ)(E_{1r})`, rendered.
    pub d3_delta_e1r: String,
    /// It equals `x_{11}` times the leading `(r−1)`-minor, hence is nonzero.
    pub d3_delta_e1r_ok: bool,
    pub passed: bool,
}

fn weight_of(comb: &Comb, vars: Vars, extra: impl Fn(u32) -> Vec<usize>) -> Option<Vec<usize>> {
    let mut ws = comb.iter().map(|((l, m), _)| {
        let mut w = m.row_content(vars);
        for (a, b) in w.iter_mut().zip(extra(*l)) {
            *a += b;
        }
        w
    });
    let first = ws.next()?;
    ws.all(|w| w == first).then_some(first)
}

pub fn differential_witnesses(oracle: &Oracle, m: usize) -> Result<WitnessReport, Error> {
    let (r, n, vars) = (oracle.r, oracle.n, oracle.vars);
    if r < 2 {
        return Err(Error::precondition(MODULE, "witnesses need r >= 2"));
    }
    let u1 = 0usize;
    let u1_pow = oracle.minors[u1].poly.pow(m, vars)?;
    let tensor = |k: usize| -> Comb { u1_pow.terms().map(|(mono, c)| ((k as u32, mono.clone()), c)).collect() };
    let minor_weight = |k: u32| row_weight(&oracle.minors[k as usize].rows, n);
    let t1 = tensor(u1);
    let d2_u1_nonzero = !oracle.apply_linear(OracleModule::Plucker, &t1).is_empty();
    let u1_weight = weight_of(&t1, vars, minor_weight).unwrap_or_default();
    let (d2_u2_nonzero, u2_weight) = if r < n {
        let mut rows: Vec<usize> = (0..r - 1).collect();
        rows.push(r);
        let u2 = oracle.minors.iter().position(|x| x.rows == rows).expect("minor exists");
        let t2 = tensor(u2);
        (Some(!oracle.apply_linear(OracleModule::Plucker, &t2).is_empty()), weight_of(&t2, vars, minor_weight))
    } else {
        (None, None)
    };
    // δ: rows 1..r−1 of x and a last row dx_{1,*}, expanded along the last row.
    let mut delta = Comb::new();
    let top: Vec<usize> = (0..r - 1).collect();
    for c in 0..r {
        let others: Vec<usize> = (0..r).filter(|&k| k != c).collect();
        let sign = if (r - 1 + c) % 2 == 0 { 1 } else { -1 };
        for (mono, v) in minor(vars, &top, &others)?.terms() {
            delta.push(((vars.index(0, c) as u32, mono.clone()), sign * v));
        }
    }
    let delta = normalize(delta);
    let var_weight = |l: u32| {
        let mut w = vec![0; n];
        w[vars.row(l as usize)] += 1;
        w
    };
    let delta_weight = weight_of(&delta, vars, var_weight).unwrap_or_default();
    let mut delta_weight_expected = vec![0; n];
    delta_weight_expected[0] = 2;
    for w in delta_weight_expected.iter_mut().take(r - 1).skip(1) {
        *w = 1;
    }
    let delta_invariant = (0..r - 1).all(|j| {
        let mut acc = Comb::new();
        for ((l, mono), c) in &delta {
            for (k, v) in oracle.raise(OracleModule::Differentials, &Elem { mono: mono.clone(), label: *l }, j) {
                acc.push((k, v * c));
            }
        }
        normalize(acc).is_empty()
    });
    let d3 = oracle.apply_linear(OracleModule::Differentials, &delta);
    let e1r = oracle.basis.iter().position(|&x| x == SlElement::E(0, r - 1)).expect("basis element") as u32;
    let mut value = Poly::zero();
    for ((l, mono), c) in &d3 {
        if *l == e1r {
            value.add_term(mono.clone(), *c)?;
        }
    }
    let lead: Vec<usize> = (0..r - 1).collect();
    let expected = minor(vars, &lead, &lead)?.mul_monomial(&Monomial::one(vars).times_var(vars.index(0, 0)), 1)?;
    let d3_delta_e1r_ok = !value.is_zero() && value == expected;
    let mut expected_u1 = vec![0; n];
    expected_u1[..r].fill(m + 1);
    let u2_ok = match (&u2_weight, d2_u2_nonzero) {
        (Some(w), Some(nz)) => {
            let mut e = vec![0; n];
            e[..r - 1].fill(m + 1);
            e[r - 1] += m;
            e[r] += 1;
            nz && *w == e
        }
        (None, None) => true,
        _ => false,
    };
    let passed = d2_u1_nonzero
        && u1_weight == expected_u1
        && u2_ok
        && delta_weight == delta_weight_expected
        && delta_invariant
        && d3_delta_e1r_ok;
    Ok(WitnessReport {
        r,
        n,
        m,
        d2_u1_nonzero,
        u1_weight,
        d2_u2_nonzero,
        u2_weight,
        delta_weight,
        delta_weight_expected,
        delta_invariant,
        d3_delta_e1r: value.render(vars),
        d3_delta_e1r_ok,
        passed,
    })
}

/// `(r, n, largest P-degree)` computed by default.
pub fn default_envelope() -> Vec<(usize, usize, usize)> {
    let mut out: Vec<(usize, usize, usize)> = (2..=6).map(|n| (1, n, 3)).collect();
    out.extend([(2, 4, 4), (2, 5, 4), (2, 6, 4), (3, 6, 3), (3, 7, 2)]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minor_counts() {
        assert_eq!(minors(2, 4).unwrap().len(), 6);
        assert_eq!(minors(1, 3).unwrap()[2].poly.len(), 1);
        assert_eq!(minors(3, 3).unwrap().len(), 1);
        assert_eq!(minors(3, 3).unwrap()[0].poly.len(), 6);
        assert!(minors(0, 3).is_err());
        assert!(minors(4, 3).is_err());
    }

    #[test]
    fn relation_counts() {
        assert!(plucker_relations(1, 4).unwrap().is_empty());
        let rel = plucker_relations(2, 4).unwrap();
        assert_eq!(rel.len(), 1);
        assert_eq!(rel[0].coefficients.len(), 3);
        assert_eq!(plucker_relations(2, 5).unwrap().len(), 5);
    }

    #[test]
    fn rho_kills_minors() {
        let vars = Vars::new(4, 2);
        for (_, field) in sl_action_rho(2, 4).unwrap() {
            for u in minors(2, 4).unwrap() {
                assert!(u.poly.apply_field(&field).unwrap().is_zero());
            }
        }
        let rho = sl_action_rho(2, 4).unwrap();
        let (_, f) = rho.iter().find(|(x, _)| *x == SlElement::E(0, 1)).unwrap();
        assert_eq!(f.len(), 4);
        assert!(f.iter().all(|&(c, s, t)| c == 1 && vars.col(s) == 0 && vars.col(t) == 1 && vars.row(s) == vars.row(t)));
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(orbit_size(&[1, 1, 0, 0]), 6);
        assert_eq!(orbit_size(&[2, 1, 0, 0]), 12);
        assert_eq!(orbit_size(&[1; 6]), 1);
    }

    #[test]
    fn sl2_coadjoint() {
        // E21* spans the highest weight line of sl_2*; e·E12* = 2·H*.
        let o = Oracle::new(2, 2, OracleConfig::default()).unwrap();
        assert_eq!(o.coadjoint.len(), 1);
        let pos = |x: SlElement| o.basis.iter().position(|&y| y == x).unwrap();
        assert!(o.coadjoint[0][pos(SlElement::E(1, 0))].is_empty());
        assert_eq!(o.coadjoint[0][pos(SlElement::E(0, 1))], vec![(pos(SlElement::H(0)), 2)]);
        assert_eq!(o.coadjoint[0][pos(SlElement::H(0))], vec![(pos(SlElement::E(1, 0)), -1)]);
    }
}
