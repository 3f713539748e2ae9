//! Linear systems `L(a, b; m_1..m_r)` of curves in `|aC_e + bf|` with
//! points of multiplicity `m_i` at very general points.
//!
//! Dimensions are projective: an empty system has dimension `-1`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cohomology::{conditions_count, h0_fe, rr_lower_bound, section_basis};
use crate::lattice::SurfaceModel;
use crate::negcurves::{NegCurveClass, NegKind};
use crate::{DivClass, Error, Result};

mod primes;
mod rank;
pub mod scan;

use rank::{exact_rank, IntMatrix, Mont};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinSysSpec {
    pub e: u32,
    pub a: i64,
    pub b: i64,
    pub mults: Vec<i64>,
}

impl LinSysSpec {
    pub fn new(e: u32, a: i64, b: i64, mults: Vec<i64>) -> Result<Self> {
        if a < 0 {
            return Err(Error::InvalidArgument(format!("negative H-coefficient {a}")));
        }
        if let Some(m) = mults.iter().find(|&&m| m < 0) {
            return Err(Error::InvalidArgument(format!("negative multiplicity {m}")));
        }
        Ok(LinSysSpec { e, a, b, mults })
    }

    pub fn r(&self) -> usize {
        self.mults.len()
    }

    pub fn surface(&self) -> SurfaceModel {
        SurfaceModel::new(self.e, self.r())
    }

    pub fn class(&self) -> DivClass {
        DivClass::new(self.a, self.b, self.mults.clone())
    }

    pub fn h0(&self) -> u64 {
        h0_fe(self.a, self.b, self.e)
    }
}

/// `(D² - K·D)/2` on `F_{e,r}`.
pub fn class_virtual_dim(d: &DivClass, s: &SurfaceModel) -> Result<i64> {
    rr_lower_bound(d, s)
}

/// `h^0(aC_e + bf) - 1 - Σ C(m_i + 1, 2)`.
///
/// For `b >= ae` this is checked against `(L² - K·L)/2`.
pub fn virtual_dim(spec: &LinSysSpec) -> Result<i64> {
    let cond = conditions_count(&spec.mults)?;
    let v = i64::try_from(spec.h0())
        .ok()
        .and_then(|h| h.checked_sub(1))
        .and_then(|h| h.checked_sub(i64::try_from(cond).ok()?))
        .ok_or(Error::Overflow)?;
    let ae = spec.a.checked_mul(spec.e as i64).ok_or(Error::Overflow)?;
    if spec.b >= ae {
        let w = class_virtual_dim(&spec.class(), &spec.surface())?;
        if w != v {
            return Err(Error::Invariant(format!(
                "virtual dimension {v} differs from (L^2 - K.L)/2 = {w} for {spec:?}"
            )));
        }
    }
    Ok(v)
}

pub fn expected_dim(spec: &LinSysSpec) -> Result<i64> {
    Ok(virtual_dim(spec)?.max(-1))
}

/// Half-width of the coordinate box for sampled points.
pub const COORD_BOX: i64 = 1_000_000;
const SAMPLE_ATTEMPTS: u32 = 16;

/// `r` points with integer coordinates in the affine chart, on pairwise
/// distinct fibers. Deterministic in `seed`.
pub fn sample_points(r: usize, seed: u64) -> Result<Vec<(i64, i64)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SAMPLE_ATTEMPTS {
        let pts: Vec<(i64, i64)> = (0..r)
            .map(|_| {
                (
                    rng.gen_range(-COORD_BOX..=COORD_BOX),
                    rng.gen_range(-COORD_BOX..=COORD_BOX),
                )
            })
            .collect();
        let mut vs: Vec<i64> = pts.iter().map(|p| p.1).collect();
        vs.sort_unstable();
        vs.dedup();
        if vs.len() == r {
            return Ok(pts);
        }
    }
    Err(Error::DegenerateSample(SAMPLE_ATTEMPTS))
}

/// Vanishing conditions: row `(i, s, t)` is `∂_u^s ∂_v^t / (s! t!)` at point
/// `i`, evaluated on the monomials `u^k v^j` of the chosen columns.
struct Conditions<'a> {
    cols: Vec<(u32, u32)>,
    points: &'a [(i64, i64)],
    rows: Vec<(usize, u32, u32)>,
}

impl<'a> Conditions<'a> {
    fn new(cols: Vec<(u32, u32)>, points: &'a [(i64, i64)], mults: &[i64]) -> Self {
        let mut rows = Vec::new();
        for (i, &m) in mults.iter().enumerate() {
            for s in 0..m as u32 {
                for t in 0..m as u32 - s {
                    rows.push((i, s, t));
                }
            }
        }
        Conditions { cols, points, rows }
    }

    fn max_degree(&self) -> usize {
        self.cols.iter().map(|&(k, j)| k.max(j) as usize).max().unwrap_or(0)
    }
}

fn bitlen(x: i64) -> u64 {
    64 - x.unsigned_abs().leading_zeros() as u64
}

impl IntMatrix for Conditions<'_> {
    fn nrows(&self) -> usize {
        self.rows.len()
    }

    fn ncols(&self) -> usize {
        self.cols.len()
    }

    fn fill_mod(&self, m: &Mont, out: &mut Vec<u64>) {
        let p = m.p as u128;
        let d = self.max_degree();
        // binomials mod p
        let mut binom = vec![vec![0u64; d + 1]; d + 1];
        for n in 0..=d {
            binom[n][0] = 1;
            for k in 1..=n {
                let x = binom[n - 1][k - 1] as u128 + binom[n - 1][k] as u128;
                binom[n][k] = (x % p) as u64;
            }
        }
        let powers = |x: i64| {
            let x = m.residue(x) as u128;
            let mut v = Vec::with_capacity(d + 1);
            let mut acc = 1u128;
            for _ in 0..=d {
                v.push(acc as u64);
                acc = acc * x % p;
            }
            v
        };
        let pw: Vec<(Vec<u64>, Vec<u64>)> =
            self.points.iter().map(|&(u, v)| (powers(u), powers(v))).collect();
        for &(i, s, t) in &self.rows {
            let (up, vp) = &pw[i];
            for &(k, j) in &self.cols {
                if k < s || j < t {
                    out.push(0);
                    continue;
                }
                let (k, j, s, t) = (k as usize, j as usize, s as usize, t as usize);
                let c = m.mul(binom[k][s], binom[j][t]);
                out.push(m.mul(m.mul(c, up[k - s]), vp[j - t]));
            }
        }
    }

    fn row_bits(&self) -> Vec<u64> {
        let extra = bitlen(self.cols.len() as i64);
        self.rows
            .iter()
            .map(|&(i, s, t)| {
                let (lu, lv) = (bitlen(self.points[i].0), bitlen(self.points[i].1));
                self.cols
                    .iter()
                    .filter(|&&(k, j)| k >= s && j >= t)
                    .map(|&(k, j)| {
                        let (k, j, s, t) = (k as u64, j as u64, s as u64, t as u64);
                        k + j + (k - s) * lu + (j - t) * lv + extra
                    })
                    .max()
                    .unwrap_or(0)
            })
            .collect()
    }

    fn exact_entries(&self) -> Vec<Vec<BigInt>> {
        let binom = |n: u32, k: u32| -> BigInt {
            let mut c = BigInt::from(1);
            for i in 0..k {
                c = c * (n - i) / (i + 1);
            }
            c
        };
        self.rows
            .iter()
            .map(|&(i, s, t)| {
                let (u, v) = self.points[i];
                self.cols
                    .iter()
                    .map(|&(k, j)| {
                        if k < s || j < t {
                            return BigInt::from(0);
                        }
                        binom(k, s)
                            * binom(j, t)
                            * num_traits::pow(BigInt::from(u), (k - s) as usize)
                            * num_traits::pow(BigInt::from(v), (j - t) as usize)
                    })
                    .collect()
            })
            .collect()
    }
}

/// Interpolated data for one sample of points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interpolation {
    pub seed: u64,
    pub actual_dim: i64,
    /// Every member contains `C_e`; `None` for an empty system.
    pub ce_fixed: Option<bool>,
}

/// Dimension and `C_e`-containment at points sampled from `seed`.
pub fn interpolate(spec: &LinSysSpec, seed: u64) -> Result<Interpolation> {
    let h0 = spec.h0();
    if h0 == 0 {
        return Ok(Interpolation { seed, actual_dim: -1, ce_fixed: None });
    }
    let basis = section_basis(spec.a, spec.b, spec.e)?;
    let points = sample_points(spec.r(), seed)?;
    let full = Conditions::new(basis.elements.clone(), &points, &spec.mults);
    let rank = exact_rank(&full);
    let actual_dim = h0 as i64 - 1 - rank as i64;
    if actual_dim < 0 {
        return Ok(Interpolation { seed, actual_dim, ce_fixed: None });
    }
    let top = basis.top_level();
    let ce_fixed = if top.is_empty() {
        true
    } else {
        // kernel avoids the top level iff dropping those columns loses
        // exactly their number of rank
        let rest: Vec<(u32, u32)> = basis
            .elements
            .iter()
            .enumerate()
            .filter(|(i, _)| !top.contains(i))
            .map(|(_, &c)| c)
            .collect();
        let sub = Conditions::new(rest, &points, &spec.mults);
        rank == top.len() + exact_rank(&sub)
    };
    Ok(Interpolation { seed, actual_dim, ce_fixed: Some(ce_fixed) })
}

/// `h^0 - 1 - rank` of the vanishing conditions at points sampled from `seed`.
pub fn actual_dim(spec: &LinSysSpec, seed: u64) -> Result<i64> {
    Ok(interpolate(spec, seed)?.actual_dim)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    /// Subtract `t` times a `(-1)`-class meeting the system negatively.
    MinusOne,
    /// Subtract the strict transform of `C_e`.
    Ce,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub kind: StepKind,
    pub curve: DivClass,
    pub t: i64,
    pub v_before: i64,
    pub v_after: i64,
    /// `(r+1)(a+b) - Σ m_i` after the step; drops by at least 1 per step.
    pub potential: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reduction {
    pub reduced: DivClass,
    pub log: Vec<ReductionStep>,
    /// Stopped because the remaining class has no sections (`a < 0` or `b < 0`).
    pub empty: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PickOrder {
    /// Lexicographically smallest applicable class first.
    Smallest,
    Largest,
}

pub const STEP_BUDGET: usize = 10_000;

fn potential(d: &DivClass) -> i64 {
    (d.m.len() as i64 + 1) * (d.a + d.b) - d.m.iter().sum::<i64>()
}

/// Repeatedly remove `(-1)`-classes `E` with `L·E = -t < 0` (as `tE`) and
/// the strict transform of `C_e` when `L·C̃_e < 0`. `negs` supplies the
/// `(-1)`-classes; only those passing both filters are used.
pub fn minus_one_reduction(spec: &LinSysSpec, negs: &[NegCurveClass]) -> Result<Reduction> {
    minus_one_reduction_ordered(spec, negs, PickOrder::Smallest)
}

pub fn minus_one_reduction_ordered(
    spec: &LinSysSpec,
    negs: &[NegCurveClass],
    order: PickOrder,
) -> Result<Reduction> {
    let s = spec.surface();
    let mut curves: Vec<&DivClass> = negs
        .iter()
        .filter(|c| c.kind == NegKind::MinusOne && c.is_candidate_curve())
        .map(|c| &c.cls)
        .collect();
    for c in &curves {
        s.check(c)?;
    }
    curves.sort();
    if order == PickOrder::Largest {
        curves.reverse();
    }
    let ce = s.ce_strict_transform();
    let mut l = spec.class();
    let mut log = Vec::new();
    let is_empty = |d: &DivClass| d.a < 0 || d.b < 0;
    if is_empty(&l) {
        return Ok(Reduction { reduced: l, log, empty: true });
    }
    loop {
        if log.len() >= STEP_BUDGET {
            return Err(Error::Bounds(format!(
                "reduction of {spec:?} exceeded {STEP_BUDGET} steps; the (-1)-class list is likely incomplete"
            )));
        }
        let mut step = None;
        for c in &curves {
            let t = -s.dot(&l, c)?;
            if t > 0 {
                step = Some((StepKind::MinusOne, (*c).clone(), t));
                break;
            }
        }
        if step.is_none() && s.dot(&l, &ce)? < 0 {
            step = Some((StepKind::Ce, ce.clone(), 1));
        }
        let Some((kind, curve, t)) = step else { break };
        let v_before = class_virtual_dim(&l, &s)?;
        l = l.checked_sub(&curve.checked_scale(t)?)?;
        let v_after = class_virtual_dim(&l, &s)?;
        log.push(ReductionStep { kind, curve, t, v_before, v_after, potential: potential(&l) });
        if is_empty(&l) {
            return Ok(Reduction { reduced: l, log, empty: true });
        }
    }
    Ok(Reduction { reduced: l, log, empty: false })
}

/// `v(M) > v(L)` for the reduced class `M`.
pub fn is_minus_one_special(spec: &LinSysSpec, negs: &[NegCurveClass]) -> Result<bool> {
    let red = minus_one_reduction(spec, negs)?;
    let s = spec.surface();
    Ok(class_virtual_dim(&red.reduced, &s)? > class_virtual_dim(&spec.class(), &s)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinSysReport {
    pub spec: LinSysSpec,
    pub virtual_dim: i64,
    pub expected_dim: i64,
    pub actual_dim: i64,
    pub special: bool,
    pub minus_one_special: bool,
    pub reduced: DivClass,
    pub reduced_empty: bool,
    pub reduction_log: Vec<ReductionStep>,
    /// Per seed, in the order given.
    pub samples: Vec<Interpolation>,
    pub seed_stable: bool,
}

/// Full report. The actual dimension is the least over the seeds (the most
/// general sample); `seeds` must be non-empty.
pub fn linsys_report(spec: &LinSysSpec, seeds: &[u64], negs: &[NegCurveClass]) -> Result<LinSysReport> {
    if seeds.is_empty() {
        return Err(Error::InvalidArgument("at least one seed is required".into()));
    }
    let virtual_dim = virtual_dim(spec)?;
    let expected_dim = virtual_dim.max(-1);
    let samples = seeds.iter().map(|&sd| interpolate(spec, sd)).collect::<Result<Vec<_>>>()?;
    let actual_dim = samples.iter().map(|s| s.actual_dim).min().expect("non-empty");
    let seed_stable = samples.iter().all(|s| s.actual_dim == actual_dim);
    let red = minus_one_reduction(spec, negs)?;
    let s = spec.surface();
    let minus_one_special = class_virtual_dim(&red.reduced, &s)? > class_virtual_dim(&spec.class(), &s)?;
    Ok(LinSysReport {
        spec: spec.clone(),
        virtual_dim,
        expected_dim,
        actual_dim,
        special: actual_dim > expected_dim,
        minus_one_special,
        reduced: red.reduced,
        reduced_empty: red.empty,
        reduction_log: red.log,
        samples,
        seed_stable,
    })
}
