//! Seshadri constants at a point `x`.
//!
//! Closed forms cover `F_e`, `F_{e,r}` with `r <= e - 1` (any position of
//! `x`) and `r ∈ {e, e+1}` (very general `x`). The enumerative engine blows
//! up `x` as an extra point and minimizes `L·C / mult_x C` over a finite
//! candidate list.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::lattice::{canonical_class, SurfaceModel};
use crate::negcurves::{effectivity_heuristic, enumerate_neg_classes, EnumBounds};
use crate::positivity::{fixed_components, is_ample_closed_form, nakai_check, ConeGenerators};
use crate::{DivClass, Error, ExactRational, Result};

/// Where `x` sits relative to the configuration. Indices are zero-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum XPosition {
    Generic,
    /// On the strict fiber through `p_i`, nowhere else special.
    OnFiber(usize),
    OnCe,
    OnCeAndFiber(usize),
    /// The point where the strict fiber through `p_i` meets `E_i`.
    OnFiberAndExc(usize),
    /// On `E_i` only.
    OnExc(usize),
}

impl XPosition {
    pub fn index(self) -> Option<usize> {
        match self {
            XPosition::Generic | XPosition::OnCe => None,
            XPosition::OnFiber(i)
            | XPosition::OnCeAndFiber(i)
            | XPosition::OnFiberAndExc(i)
            | XPosition::OnExc(i) => Some(i),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeshadriMethod {
    ClosedFormFe,
    ClosedFormSmallR,
    ClosedFormRe,
    Enumerative,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeshadriResult {
    pub value: ExactRational,
    /// Class of the Seshadri curve on the surface without `x`.
    pub witness: DivClass,
    /// Multiplicity of the witness at `x`.
    pub witness_mult: u64,
    pub method: SeshadriMethod,
    /// The value is exact, not just an upper bound from a truncated search.
    pub certified: bool,
    /// Enumeration box used, for the enumerative method.
    pub bounds: Option<EnumBounds>,
}

struct Candidate {
    value: ExactRational,
    witness: DivClass,
    mult: u64,
}

fn best(cands: Vec<Candidate>) -> Option<Candidate> {
    cands.into_iter().min_by(|x, y| {
        (&x.value, &x.witness, x.mult).cmp(&(&y.value, &y.witness, y.mult))
    })
}

fn cand(pairing: i64, witness: DivClass, mult: u64) -> Result<Candidate> {
    Ok(Candidate { value: ExactRational::new(pairing, mult as i64)?, witness, mult })
}

fn finish(c: Candidate, method: SeshadriMethod) -> SeshadriResult {
    SeshadriResult {
        value: c.value,
        witness: c.witness,
        witness_mult: c.mult,
        method,
        certified: true,
        bounds: None,
    }
}

/// `ε(F_e, aC_e + bf; x)`, with `on_ce` telling whether `x ∈ C_e`.
pub fn seshadri_fe(a: i64, b: i64, e: u32, on_ce: bool) -> Result<SeshadriResult> {
    let ae = a.checked_mul(e as i64).ok_or(Error::Overflow)?;
    if a <= 0 || b <= ae {
        return Err(Error::InvalidArgument(format!("{a}C + {b}f is not ample on F_{e}")));
    }
    let s = SurfaceModel::new(e, 0);
    let mut cands = vec![cand(a, s.f(), 1)?];
    if e == 0 || on_ce {
        cands.push(cand(b - ae, s.h(), 1)?);
    }
    Ok(finish(best(cands).expect("non-empty"), SeshadriMethod::ClosedFormFe))
}

fn require_ample_closed_form(l: &DivClass, s: &SurfaceModel) -> Result<()> {
    if !is_ample_closed_form(l, s)? {
        return Err(Error::InvalidArgument(format!("{} is not ample", l.algebraic())));
    }
    Ok(())
}

/// Closed form for `r <= e - 1` points off `C_e` on distinct fibers.
pub fn seshadri_small_r(l: &DivClass, s: &SurfaceModel, x: XPosition) -> Result<SeshadriResult> {
    if s.e() == 0 || s.r() + 1 > s.e() as usize {
        return Err(Error::UnsupportedRange(format!(
            "small-r closed form needs e > 0 and r <= e - 1, got e = {}, r = {}",
            s.e(),
            s.r()
        )));
    }
    require_ample_closed_form(l, s)?;
    if let Some(i) = x.index() {
        if i >= s.r() {
            return Err(Error::UnsupportedRange(format!("point index {i} out of range")));
        }
    }
    let (a, b, ae) = (l.a, l.b, l.a * s.e() as i64);
    let fiber = |i: usize| -> Result<Candidate> { cand(a - l.m[i], s.fiber_through(i), 1) };
    let exc = |i: usize| -> Result<Candidate> { cand(l.m[i], s.exceptional(i), 1) };
    let ce = || cand(b - ae, s.ce_strict_transform(), 1);
    let cands = match x {
        XPosition::Generic => vec![cand(a, s.f(), 1)?],
        XPosition::OnFiber(i) => vec![fiber(i)?],
        XPosition::OnCeAndFiber(i) => vec![ce()?, fiber(i)?],
        XPosition::OnFiberAndExc(i) => vec![exc(i)?, fiber(i)?],
        XPosition::OnCe => vec![cand(a, s.f(), 1)?, ce()?],
        XPosition::OnExc(i) => vec![exc(i)?],
    };
    Ok(finish(best(cands).expect("non-empty"), SeshadriMethod::ClosedFormSmallR))
}

/// The `e` points carrying the largest multiplicities; ties go to the
/// higher index.
pub fn heaviest_points(m: &[i64], e: usize) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..m.len()).collect();
    idx.sort_by(|&i, &j| m[j].cmp(&m[i]).then(j.cmp(&i)));
    idx.truncate(e);
    idx.sort_unstable();
    idx
}

/// Closed form for `r ∈ {e, e+1}` very general points and very general `x`:
/// `min(a, b - Σ of the e largest m_i)`.
pub fn seshadri_r_e(l: &DivClass, s: &SurfaceModel) -> Result<SeshadriResult> {
    let e = s.e() as usize;
    if e == 0 || !(s.r() == e || s.r() == e + 1) || !s.is_very_general() {
        return Err(Error::UnsupportedRange(format!(
            "closed form needs e > 0, r in {{e, e+1}} and very general points, got e = {e}, r = {}",
            s.r()
        )));
    }
    require_ample_closed_form(l, s)?;
    let heavy = heaviest_points(&l.m, e);
    let mut curve = DivClass::new(1, e as i64, vec![0; s.r()]);
    let mut sum = 0;
    for &i in &heavy {
        curve.m[i] = 1;
        sum += l.m[i];
    }
    let cands = vec![cand(l.a, s.f(), 1)?, cand(l.b - sum, curve, 1)?];
    Ok(finish(best(cands).expect("non-empty"), SeshadriMethod::ClosedFormRe))
}

/// Minimum of `L·C / mult_x C` over the candidate classes through `x`:
/// negative classes on the blow-up at `x` that pass both filters (with the
/// multiplicity at `x` swept upward while the count of conditions still
/// proves effectivity), fixed components through `x`, and anticanonical
/// members of multiplicity 1 or 2 at `x`.
///
/// Every candidate is effective, so the value is always an upper bound; it
/// is marked certified for automatic bounds and `r <= e + 1`.
pub fn seshadri_enumerative(l: &DivClass, s: &SurfaceModel, bounds: &EnumBounds) -> Result<SeshadriResult> {
    if !s.is_very_general() || s.has_x() {
        return Err(Error::UnsupportedRange(
            "enumerative engine needs very general points and a surface without x".into(),
        ));
    }
    if s.r() + 1 > s.e() as usize + 5 {
        return Err(Error::UnsupportedRange(format!(
            "r + 1 = {} exceeds e + 5 = {}",
            s.r() + 1,
            s.e() + 5
        )));
    }
    s.check(l)?;
    let gens = ConeGenerators::build(s, bounds)?;
    if !nakai_check(l, s, &gens)? {
        return Err(Error::InvalidArgument(format!("{} is not ample", l.algebraic())));
    }
    let sx = s.with_extra_point();
    let used = bounds.resolve(&sx)?;
    let mut cands = Vec::new();
    for c in enumerate_neg_classes(&sx, &used)? {
        if !c.is_candidate_curve() || c.cls.mult_x() < 1 {
            continue;
        }
        let base = c.cls.without_x();
        let pairing = s.dot(l, &base)?;
        for nx in 1..=c.cls.a.max(0) + 1 {
            let trial = DivClass { mx: Some(nx), ..c.cls.clone() };
            if nx == c.cls.mult_x() || effectivity_heuristic(&trial, &sx) {
                cands.push(cand(pairing, base.clone(), nx as u64)?);
            }
        }
    }
    for fc in fixed_components(&sx).components {
        if fc.class.mult_x() >= 1 {
            let base = fc.class.without_x();
            cands.push(cand(s.dot(l, &base)?, base, fc.class.mult_x() as u64)?);
        }
    }
    let anti = -&canonical_class(s);
    let anti_pairing = s.dot(l, &anti)?;
    for nx in 1..=2 {
        let through = DivClass { mx: Some(nx), ..anti.clone() };
        if effectivity_heuristic(&through, &sx) {
            cands.push(cand(anti_pairing, anti.clone(), nx as u64)?);
        }
    }
    let win = best(cands).ok_or_else(|| {
        Error::Bounds(format!("no candidate curve through x within bounds {used:?}"))
    })?;
    let mut out = finish(win, SeshadriMethod::Enumerative);
    out.certified = bounds.is_auto() && s.r() <= s.e() as usize + 1;
    out.bounds = Some(used);
    Ok(out)
}
