//! Bott's theorem on the Grassmannian `G(r, n)` of `r`-planes in an
//! `n`-dimensional space, for bundles `S_α Q ⊗ S_β R ⊗ O(m)`.
//!
//! `γ = (α + m^{n−r}, β)`. If `γ + δ` has a repeated entry all cohomology
//! vanishes; otherwise only degree `l` (the inversion count) survives, with
//! weight `sort(γ + δ) − δ`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::schur::gl_dimension;
use crate::weights::{tilde, Tilde, Weight};

const MODULE: &str = "bott_grassmannian";

fn check_rn(r: usize, n: usize) -> Result<(), Error> {
    if r == 0 || r >= n {
        return Err(Error::InvalidSize { module: MODULE, msg: format!("need 1 <= r < n, got r={r}, n={n}") });
    }
    Ok(())
}

/// `S_α Q ⊗ S_β R ⊗ O(m)` with `α` of length `n−r` and `β` of length `r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BundleSpec {
    pub alpha: Weight,
    pub beta: Weight,
    #[serde(serialize_with = "ser_bigint")]
    pub twist: BigInt,
}

fn ser_bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    use num_traits::ToPrimitive;
    match v.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

impl BundleSpec {
    pub fn new(alpha: Weight, beta: Weight, twist: impl Into<BigInt>) -> Result<Self, Error> {
        for (name, w) in [("alpha", &alpha), ("beta", &beta)] {
            if !w.is_dominant() {
                return Err(Error::NotDominant { module: MODULE, msg: format!("{name} = {w}") });
            }
        }
        Ok(BundleSpec { alpha, beta, twist: twist.into() })
    }

    /// `(α + m^{n−r}, β)`.
    pub fn gamma(&self) -> Weight {
        self.alpha.add_constant(&self.twist).concat(&self.beta)
    }

    fn check_lengths(&self, r: usize, n: usize) -> Result<(), Error> {
        check_rn(r, n)?;
        if self.alpha.len() != n - r || self.beta.len() != r {
            return Err(Error::InvalidSize {
                module: MODULE,
                msg: format!(
                    "alpha must have length {} and beta length {r}, got {} and {}",
                    n - r,
                    self.alpha.len(),
                    self.beta.len()
                ),
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CohomologyAnswer {
    Vanishes,
    NonZero { degree: usize, weight: Weight, dimension: BigUint },
}

impl CohomologyAnswer {
    pub fn degree(&self) -> Option<usize> {
        match self {
            CohomologyAnswer::Vanishes => None,
            CohomologyAnswer::NonZero { degree, .. } => Some(*degree),
        }
    }

    pub fn is_zero_in(&self, i: usize) -> bool {
        self.degree() != Some(i)
    }

    /// `Σ (−1)^l dim H^l`.
    pub fn euler_characteristic(&self) -> BigInt {
        match self {
            CohomologyAnswer::Vanishes => BigInt::from(0),
            CohomologyAnswer::NonZero { degree, dimension, .. } => {
                let d = BigInt::from(dimension.clone());
                if degree % 2 == 0 {
                    d
                } else {
                    -d
                }
            }
        }
    }
}

impl Serialize for CohomologyAnswer {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use num_traits::ToPrimitive;
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(None)?;
        match self {
            CohomologyAnswer::Vanishes => m.serialize_entry("vanishes", &true)?,
            CohomologyAnswer::NonZero { degree, weight, dimension } => {
                m.serialize_entry("l", degree)?;
                m.serialize_entry("weight", weight)?;
                match dimension.to_u64() {
                    Some(d) => m.serialize_entry("dim", &d)?,
                    None => m.serialize_entry("dim", &dimension.to_string())?,
                }
            }
        }
        m.end()
    }
}

impl fmt::Display for CohomologyAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CohomologyAnswer::Vanishes => f.write_str("vanishes"),
            CohomologyAnswer::NonZero { degree, weight, dimension } => {
                write!(f, "H^{degree} = S_({}), dim {dimension}", weight.render())
            }
        }
    }
}

pub fn bott_evaluate(spec: &BundleSpec, n: usize, r: usize) -> Result<CohomologyAnswer, Error> {
    spec.check_lengths(r, n)?;
    match tilde(&spec.gamma(), n)? {
        Tilde::Singular => Ok(CohomologyAnswer::Vanishes),
        Tilde::Regular { weight, swaps } => {
            let dimension = gl_dimension(&weight, n)?;
            Ok(CohomologyAnswer::NonZero { degree: swaps as usize, weight, dimension })
        }
    }
}

/// `O(m)`.
pub fn structure_sheaf(n: usize, r: usize, m: impl Into<BigInt>) -> Result<BundleSpec, Error> {
    check_rn(r, n)?;
    BundleSpec::new(Weight::zero(n - r), Weight::zero(r), m)
}

/// `Θ(m) ≅ S_{(m+1, m^{n−r−1})} Q ⊗ S_{(0^{r−1}, −1)} R`, returned with `α = (1, 0^{n−r−1})` and twist `m`.
pub fn theta_bundle(n: usize, r: usize, m: impl Into<BigInt>) -> Result<BundleSpec, Error> {
    check_rn(r, n)?;
    let mut alpha = vec![0i64; n - r];
    alpha[0] = 1;
    let mut beta = vec![0i64; r];
    beta[r - 1] = -1;
    BundleSpec::new(Weight::from_i64s(&alpha), Weight::from_i64s(&beta), m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    #[serde(rename = "O")]
    Structure,
    #[serde(rename = "Theta")]
    Theta,
}

impl Family {
    pub fn bundle(self, n: usize, r: usize, m: i64) -> Result<BundleSpec, Error> {
        match self {
            Family::Structure => structure_sheaf(n, r, m),
            Family::Theta => theta_bundle(n, r, m),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Structure => "O",
            Family::Theta => "Theta",
        })
    }
}

/// Expected cohomology in closed form: a degree with an SL-normalized weight, or nothing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ClosedForm {
    Vanishes,
    NonZero { degree: usize, sl_weight: Weight },
}

fn sl(w: Vec<i64>, n: usize) -> Weight {
    let mut w = w;
    w.resize(n, 0);
    Weight::from_i64s(&w).sl_normalized()
}

/// The closed forms for `O(m)` and `Θ(m)` on `G(r, n)`, with the extra class
/// `H¹(Θ(−2)) ≅ k` on `G(2, 4)`.
pub fn closed_form(family: Family, n: usize, r: usize, m: i64) -> ClosedForm {
    let top = r * (n - r);
    let ni = n as i64;
    match family {
        Family::Structure => {
            if m >= 0 {
                let mut w = vec![m; n - r];
                w.resize(n, 0);
                ClosedForm::NonZero { degree: 0, sl_weight: sl(w, n) }
            } else if m <= -ni {
                ClosedForm::NonZero { degree: top, sl_weight: sl(vec![-m - ni; r], n) }
            } else {
                ClosedForm::Vanishes
            }
        }
        Family::Theta => {
            if (r, n) == (2, 4) && m == -2 {
                return ClosedForm::NonZero { degree: 1, sl_weight: Weight::zero(n) };
            }
            if m >= 0 {
                let mut w = vec![m + 1];
                w.extend(std::iter::repeat_n(m, n - r - 1));
                w.extend(std::iter::repeat_n(0, r - 1));
                w.push(-1);
                ClosedForm::NonZero { degree: 0, sl_weight: sl(w, n) }
            } else if m == -ni {
                ClosedForm::NonZero { degree: top - 1, sl_weight: Weight::zero(n) }
            } else if m <= -ni - 2 {
                let mut w = vec![-m - ni; r - 1];
                w.push(-m - ni - 1);
                w.push(1);
                ClosedForm::NonZero { degree: top, sl_weight: sl(w, n) }
            } else {
                ClosedForm::Vanishes
            }
        }
    }
}

impl CohomologyAnswer {
    pub fn to_closed_form(&self) -> ClosedForm {
        match self {
            CohomologyAnswer::Vanishes => ClosedForm::Vanishes,
            CohomologyAnswer::NonZero { degree, weight, .. } => {
                ClosedForm::NonZero { degree: *degree, sl_weight: weight.sl_normalized() }
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportRow {
    pub bundle: Family,
    pub m: i64,
    pub result: CohomologyAnswer,
}

#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub bundle: Family,
    pub m: i64,
    pub computed: ClosedForm,
    pub expected: ClosedForm,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosedFormReport {
    pub n: usize,
    pub r: usize,
    pub m_range: (i64, i64),
    pub rows: Vec<ReportRow>,
    pub mismatches: Vec<Mismatch>,
}

impl ClosedFormReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn evaluate_rows(n: usize, r: usize, families: &[Family], ms: &[i64]) -> Result<Vec<ReportRow>, Error> {
    let points: Vec<(Family, i64)> = families.iter().flat_map(|&f| ms.iter().map(move |&m| (f, m))).collect();
    points
        .par_iter()
        .map(|&(bundle, m)| {
            let result = bott_evaluate(&bundle.bundle(n, r, m)?, n, r)?;
            Ok(ReportRow { bundle, m, result })
        })
        .collect()
}

/// Compares Bott's theorem against [`closed_form`] for `O(m)` and `Θ(m)`, `m_lo ≤ m ≤ m_hi`.
pub fn verify_closed_forms(n: usize, r: usize, m_lo: i64, m_hi: i64) -> Result<ClosedFormReport, Error> {
    check_rn(r, n)?;
    let ms: Vec<i64> = (m_lo..=m_hi).collect();
    let rows = evaluate_rows(n, r, &[Family::Structure, Family::Theta], &ms)?;
    let mismatches = rows
        .iter()
        .filter_map(|row| {
            let computed = row.result.to_closed_form();
            let expected = closed_form(row.bundle, n, r, row.m);
            (computed != expected).then_some(Mismatch { bundle: row.bundle, m: row.m, computed, expected })
        })
        .collect();
    Ok(ClosedFormReport { n, r, m_range: (m_lo, m_hi), rows, mismatches })
}

/// Half-width of the scan window `[−(2n+2), 2n+2]`.
pub fn window_radius(n: usize) -> i64 {
    2 * n as i64 + 2
}

/// Beyond the window the relative order of the entries of `γ + δ` is frozen.
///
/// Entries are `m + cᵢ` for the first `n−r` positions and constants `cⱼ` for
/// the rest, so the order only changes when `m` crosses some `cⱼ − cᵢ`. The
/// check confirms all those crossings lie strictly inside the window and that
/// the answers at the two boundary pairs `(±R, ±(R+1))` agree in degree and
/// differ by a determinant twist.
pub fn window_is_stable(family: Family, n: usize, r: usize) -> Result<bool, Error> {
    let radius = window_radius(n);
    let base = family.bundle(n, r, 0)?;
    let staircase: Vec<i64> = (0..n as i64).rev().collect();
    let g = base.gamma().to_i64s().expect("small entries");
    let moving: Vec<i64> = (0..n - r).map(|i| g[i] + staircase[i]).collect();
    let fixed: Vec<i64> = (n - r..n).map(|j| g[j] + staircase[j]).collect();
    let max_gap = moving
        .iter()
        .flat_map(|c| fixed.iter().map(move |d| (d - c).abs()))
        .max()
        .unwrap_or(0);
    if max_gap >= radius {
        return Ok(false);
    }
    for sign in [-1i64, 1] {
        let a = bott_evaluate(&family.bundle(n, r, sign * radius)?, n, r)?;
        let b = bott_evaluate(&family.bundle(n, r, sign * (radius + 1))?, n, r)?;
        let same = match (&a, &b) {
            (CohomologyAnswer::Vanishes, CohomologyAnswer::Vanishes) => true,
            (
                CohomologyAnswer::NonZero { degree: da, weight: wa, .. },
                CohomologyAnswer::NonZero { degree: db, weight: wb, .. },
            ) => da == db && step_is_uniform(wa, wb, sign, n - r, r),
            _ => false,
        };
        if !same {
            return Ok(false);
        }
    }
    Ok(true)
}

// Going from m to m±1 moves each of the n−r twisted entries by one; after
// sorting they occupy either the first or the last n−r slots.
fn step_is_uniform(a: &Weight, b: &Weight, sign: i64, moving: usize, fixed: usize) -> bool {
    let diff = match b.sub(a) {
        Ok(d) => d.to_i64s().unwrap_or_default(),
        Err(_) => return false,
    };
    let mut head = vec![sign; moving];
    head.extend(std::iter::repeat_n(0, fixed));
    let mut tail = vec![0i64; fixed];
    tail.extend(std::iter::repeat_n(sign, moving));
    diff == head || diff == tail
}

#[derive(Clone, Debug, Serialize)]
pub struct Exception {
    pub bundle: Family,
    pub i: usize,
    pub m: i64,
    pub result: CohomologyAnswer,
    pub documented: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanSummary {
    /// Longest range `[i_lo, j]` free of any nonvanishing class, if nonempty.
    pub certified_range: Option<(usize, usize)>,
    pub exceptions: Vec<Exception>,
    pub window: (i64, i64),
    pub window_stable: bool,
    pub assumption: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub n: usize,
    pub r: usize,
    pub i_range: (usize, usize),
    pub rows: Vec<ReportRow>,
    pub summary: ScanSummary,
}

impl ScanReport {
    /// True when every nonvanishing class in range is a documented one and the window is stable.
    pub fn passed(&self) -> bool {
        self.summary.window_stable && self.summary.exceptions.iter().all(|e| e.documented)
    }
}

pub const CONNECTING_MAP_ASSUMPTION: &str =
    "injectivity of the connecting map H^{d-2}(Theta(-n)) -> H^{d-1}(O(-n)) is taken from the Atiyah extension argument, not computed";

fn is_documented(family: Family, n: usize, r: usize, i: usize, m: i64) -> bool {
    family == Family::Theta
        && ((i + 1 == r * (n - r) && m == -(n as i64)) || ((r, n) == (2, 4) && i == 1 && m == -2))
}

/// Scans `H^i(O(m))` and `H^i(Θ(m))` for `i_lo ≤ i ≤ i_hi` over the stabilization window.
pub fn scan_vanishing(n: usize, r: usize, i_lo: usize, i_hi: usize) -> Result<ScanReport, Error> {
    check_rn(r, n)?;
    let top = r * (n - r);
    if i_lo < 1 || i_hi + 1 > top.max(1) && i_lo <= i_hi {
        return Err(Error::precondition(
            MODULE,
            format!("need 1 <= i_lo <= i_hi <= {}, got [{i_lo}, {i_hi}]", top.saturating_sub(1)),
        ));
    }
    let radius = window_radius(n);
    let ms: Vec<i64> = (-radius..=radius).collect();
    let families = [Family::Structure, Family::Theta];
    let rows = evaluate_rows(n, r, &families, &ms)?;
    let mut window_stable = true;
    for f in families {
        window_stable &= window_is_stable(f, n, r)?;
    }
    let mut exceptions: Vec<Exception> = rows
        .iter()
        .filter_map(|row| {
            let i = row.result.degree()?;
            (i_lo..=i_hi).contains(&i).then(|| Exception {
                bundle: row.bundle,
                i,
                m: row.m,
                result: row.result.clone(),
                documented: is_documented(row.bundle, n, r, i, row.m),
            })
        })
        .collect();
    exceptions.sort_by_key(|e| (e.i, e.m, e.bundle));
    let first_bad = exceptions.iter().map(|e| e.i).min();
    let certified_range = match first_bad {
        _ if i_lo > i_hi => None,
        None => Some((i_lo, i_hi)),
        Some(j) if j > i_lo => Some((i_lo, j - 1)),
        Some(_) => None,
    };
    let certified_range = if window_stable { certified_range } else { None };
    Ok(ScanReport {
        n,
        r,
        i_range: (i_lo, i_hi),
        rows,
        summary: ScanSummary {
            certified_range,
            exceptions,
            window: (-radius, radius),
            window_stable,
            assumption: CONNECTING_MAP_ASSUMPTION,
        },
    })
}
