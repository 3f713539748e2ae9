//! Divisor classes on `F_{e,r}` and the intersection pairing.
//!
//! A [`DivClass`] `(a, b, m_1..m_r, m_x)` stands for
//! `a·H + b·F − Σ m_i·E_i − m_x·E_x`: the exceptional entries are stored with
//! the sign flipped, so a curve through `p_i` with multiplicity 2 has
//! `m_i = 2`. The raw coefficient of `E_i` is [`DivClass::exceptional_coeff`].
//! The canonical class therefore has `m_i = -1`.
//!
//! Pairing: `H² = -e`, `H·F = 1`, `F² = 0`, `E_i² = -1`, all other pairs 0.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Position data for the `r` blown-up points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PointConfig {
    VeryGeneral,
    /// Per point: whether it lies on `C_e`, and an id naming its fiber.
    /// Points sharing an id lie on the same fiber.
    Configured { on_ce: Vec<bool>, fiber: Vec<u32> },
}

#[derive(Deserialize, Serialize)]
struct RawSurface {
    e: u32,
    r: usize,
    #[serde(default)]
    with_x: bool,
    #[serde(default = "very_general")]
    config: PointConfig,
}

fn very_general() -> PointConfig {
    PointConfig::VeryGeneral
}

/// `F_e` blown up at `r` points, optionally also at a very general `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSurface", into = "RawSurface")]
pub struct SurfaceModel {
    e: u32,
    r: usize,
    with_x: bool,
    config: PointConfig,
}

impl TryFrom<RawSurface> for SurfaceModel {
    type Error = Error;
    fn try_from(raw: RawSurface) -> Result<Self> {
        let s = SurfaceModel::new(raw.e, raw.r).with_config(raw.config)?;
        Ok(if raw.with_x { s.with_extra_point() } else { s })
    }
}

impl From<SurfaceModel> for RawSurface {
    fn from(s: SurfaceModel) -> Self {
        RawSurface { e: s.e, r: s.r, with_x: s.with_x, config: s.config }
    }
}

impl SurfaceModel {
    /// `F_{e,r}` with very general points and no extra point.
    pub fn new(e: u32, r: usize) -> Self {
        SurfaceModel { e, r, with_x: false, config: PointConfig::VeryGeneral }
    }

    pub fn with_config(mut self, config: PointConfig) -> Result<Self> {
        if let PointConfig::Configured { on_ce, fiber } = &config {
            if on_ce.len() != self.r || fiber.len() != self.r {
                return Err(Error::Structure(format!(
                    "configuration lists {}/{} entries for r = {}",
                    on_ce.len(),
                    fiber.len(),
                    self.r
                )));
            }
        }
        self.config = config;
        Ok(self)
    }

    /// The same surface blown up once more at a very general point `x`.
    pub fn with_extra_point(&self) -> Self {
        SurfaceModel { with_x: true, ..self.clone() }
    }

    pub fn without_extra_point(&self) -> Self {
        SurfaceModel { with_x: false, ..self.clone() }
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn has_x(&self) -> bool {
        self.with_x
    }

    pub fn config(&self) -> &PointConfig {
        &self.config
    }

    pub fn is_very_general(&self) -> bool {
        matches!(self.config, PointConfig::VeryGeneral)
    }

    /// Number of exceptional curves, counting `E_x`.
    pub fn exceptional_count(&self) -> usize {
        self.r + usize::from(self.with_x)
    }

    pub fn k_squared(&self) -> i64 {
        8 - self.exceptional_count() as i64
    }

    /// `|-K|` is non-empty: at most `e + 5` blown-up points (counting `x`).
    pub fn in_anticanonical_range(&self) -> bool {
        self.exceptional_count() <= self.e as usize + 5
    }

    pub fn on_ce(&self, i: usize) -> bool {
        match &self.config {
            PointConfig::VeryGeneral => false,
            PointConfig::Configured { on_ce, .. } => on_ce[i],
        }
    }

    /// Points sharing the fiber of point `i`, including `i`.
    pub fn fiber_mates(&self, i: usize) -> Vec<usize> {
        match &self.config {
            PointConfig::VeryGeneral => vec![i],
            PointConfig::Configured { fiber, .. } => {
                (0..self.r).filter(|&j| fiber[j] == fiber[i]).collect()
            }
        }
    }

    /// No point on `C_e` and no two points on one fiber.
    pub fn points_in_general_position(&self) -> bool {
        match &self.config {
            PointConfig::VeryGeneral => true,
            PointConfig::Configured { on_ce, fiber } => {
                let mut ids = fiber.clone();
                ids.sort_unstable();
                ids.dedup();
                !on_ce.iter().any(|&c| c) && ids.len() == fiber.len()
            }
        }
    }

    pub fn zero(&self) -> DivClass {
        DivClass {
            a: 0,
            b: 0,
            m: vec![0; self.r],
            mx: self.with_x.then_some(0),
        }
    }

    pub fn class(&self, a: i64, b: i64, m: &[i64]) -> Result<DivClass> {
        let c = DivClass { a, b, m: m.to_vec(), mx: self.with_x.then_some(0) };
        self.check(&c)?;
        Ok(c)
    }

    pub fn h(&self) -> DivClass {
        DivClass { a: 1, ..self.zero() }
    }

    pub fn f(&self) -> DivClass {
        DivClass { b: 1, ..self.zero() }
    }

    /// `E_i`, zero-based.
    pub fn exceptional(&self, i: usize) -> DivClass {
        let mut c = self.zero();
        c.m[i] = -1;
        c
    }

    /// `E_x`. Panics when the surface has no extra point.
    pub fn exceptional_x(&self) -> DivClass {
        assert!(self.with_x, "surface has no extra point");
        DivClass { mx: Some(-1), ..self.zero() }
    }

    /// Strict transform of `C_e`: `H` minus the points lying on it.
    pub fn ce_strict_transform(&self) -> DivClass {
        let mut c = self.h();
        for i in 0..self.r {
            if self.on_ce(i) {
                c.m[i] = 1;
            }
        }
        c
    }

    /// Strict transform of the fiber through point `i`.
    pub fn fiber_through(&self, i: usize) -> DivClass {
        let mut c = self.f();
        for j in self.fiber_mates(i) {
            c.m[j] = 1;
        }
        c
    }

    pub fn check(&self, d: &DivClass) -> Result<()> {
        if d.m.len() != self.r {
            return Err(Error::Structure(format!(
                "class has {} exceptional entries, surface has r = {}",
                d.m.len(),
                self.r
            )));
        }
        if d.mx.is_some() != self.with_x {
            return Err(Error::Structure(
                if self.with_x {
                    "class lacks the E_x entry"
                } else {
                    "class carries an E_x entry on a surface without x"
                }
                .into(),
            ));
        }
        Ok(())
    }

    pub fn dot(&self, d1: &DivClass, d2: &DivClass) -> Result<i64> {
        intersect(d1, d2, self)
    }

    pub fn square(&self, d: &DivClass) -> Result<i64> {
        intersect(d, d, self)
    }

    pub fn k_dot(&self, d: &DivClass) -> Result<i64> {
        intersect(&canonical_class(self), d, self)
    }
}

/// `a·H + b·F − Σ m_i·E_i [− m_x·E_x]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DivClass {
    pub a: i64,
    pub b: i64,
    pub m: Vec<i64>,
    pub mx: Option<i64>,
}

impl DivClass {
    pub fn new(a: i64, b: i64, m: Vec<i64>) -> Self {
        DivClass { a, b, m, mx: None }
    }

    pub fn with_x(a: i64, b: i64, m: Vec<i64>, mx: i64) -> Self {
        DivClass { a, b, m, mx: Some(mx) }
    }

    /// Raw coefficient of `E_i` (the stored multiplicity negated).
    pub fn exceptional_coeff(&self, i: usize) -> i64 {
        -self.m[i]
    }

    /// Multiplicities `m_1..m_r` followed by `m_x` if present.
    pub fn mults(&self) -> impl Iterator<Item = i64> + '_ {
        self.m.iter().copied().chain(self.mx)
    }

    /// Forget the `E_x` entry (push forward to the surface without `x`).
    pub fn without_x(&self) -> DivClass {
        DivClass { mx: None, ..self.clone() }
    }

    pub fn mult_x(&self) -> i64 {
        self.mx.unwrap_or(0)
    }

    fn same_shape(&self, o: &DivClass) -> Result<()> {
        if self.m.len() != o.m.len() || self.mx.is_some() != o.mx.is_some() {
            return Err(Error::Structure("classes live on different surfaces".into()));
        }
        Ok(())
    }

    pub fn checked_add(&self, o: &DivClass) -> Result<DivClass> {
        self.same_shape(o)?;
        let add = |x: i64, y: i64| x.checked_add(y).ok_or(Error::Overflow);
        Ok(DivClass {
            a: add(self.a, o.a)?,
            b: add(self.b, o.b)?,
            m: self.m.iter().zip(&o.m).map(|(&x, &y)| add(x, y)).collect::<Result<_>>()?,
            mx: match (self.mx, o.mx) {
                (Some(x), Some(y)) => Some(add(x, y)?),
                _ => None,
            },
        })
    }

    pub fn checked_scale(&self, k: i64) -> Result<DivClass> {
        let mul = |x: i64| x.checked_mul(k).ok_or(Error::Overflow);
        Ok(DivClass {
            a: mul(self.a)?,
            b: mul(self.b)?,
            m: self.m.iter().map(|&x| mul(x)).collect::<Result<_>>()?,
            mx: self.mx.map(mul).transpose()?,
        })
    }

    pub fn checked_sub(&self, o: &DivClass) -> Result<DivClass> {
        self.checked_add(&o.checked_scale(-1)?)
    }

    /// Human-readable form such as `3H+9F-2E1-2E2-E_x`.
    pub fn algebraic(&self) -> Algebraic<'_> {
        Algebraic(self)
    }
}

impl Add for &DivClass {
    type Output = DivClass;
    fn add(self, o: &DivClass) -> DivClass {
        self.checked_add(o).expect("class addition")
    }
}

impl Sub for &DivClass {
    type Output = DivClass;
    fn sub(self, o: &DivClass) -> DivClass {
        self.checked_sub(o).expect("class subtraction")
    }
}

impl Neg for &DivClass {
    type Output = DivClass;
    fn neg(self) -> DivClass {
        self.checked_scale(-1).expect("class negation")
    }
}

impl Mul<&DivClass> for i64 {
    type Output = DivClass;
    fn mul(self, d: &DivClass) -> DivClass {
        d.checked_scale(self).expect("class scaling")
    }
}

/// Comma separated `a,b,m1,..,mr`, with `;mx` appended when present.
impl fmt::Display for DivClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.a, self.b)?;
        for m in &self.m {
            write!(f, ",{m}")?;
        }
        if let Some(x) = self.mx {
            write!(f, ";{x}")?;
        }
        Ok(())
    }
}

impl FromStr for DivClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |what: &str| Error::InvalidArgument(format!("bad class {s:?}: {what}"));
        let (main, x) = match s.split_once(';') {
            Some((m, x)) => (m, Some(x)),
            None => (s, None),
        };
        let nums = main
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| bad("expected integers")))
            .collect::<Result<Vec<_>>>()?;
        if nums.len() < 2 {
            return Err(bad("need at least a and b"));
        }
        let mx = x
            .map(|t| t.trim().parse::<i64>().map_err(|_| bad("expected integer after ';'")))
            .transpose()?;
        Ok(DivClass { a: nums[0], b: nums[1], m: nums[2..].to_vec(), mx })
    }
}

pub struct Algebraic<'a>(&'a DivClass);

impl fmt::Display for Algebraic<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.0;
        let mut terms: Vec<(i64, String)> = vec![(d.a, "H".into()), (d.b, "F".into())];
        for (i, &m) in d.m.iter().enumerate() {
            terms.push((-m, format!("E{}", i + 1)));
        }
        if let Some(x) = d.mx {
            terms.push((-x, "E_x".into()));
        }
        let mut first = true;
        for (c, name) in terms.into_iter().filter(|(c, _)| *c != 0) {
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}{name}")?;
            } else {
                write!(f, "{sign}{mag}{name}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The intersection pairing, with overflow reported as an error.
pub fn intersect(d1: &DivClass, d2: &DivClass, s: &SurfaceModel) -> Result<i64> {
    s.check(d1)?;
    s.check(d2)?;
    let w = |x: i64, y: i64| (x as i128) * (y as i128);
    let mut acc: i128 = -(s.e as i128) * w(d1.a, d2.a) + w(d1.a, d2.b) + w(d2.a, d1.b);
    for (&x, &y) in d1.m.iter().zip(&d2.m) {
        acc -= w(x, y);
    }
    if let (Some(x), Some(y)) = (d1.mx, d2.mx) {
        acc -= w(x, y);
    }
    i64::try_from(acc).map_err(|_| Error::Overflow)
}

/// `K = -2H - (e+2)F + Σ E_i [+ E_x]`.
pub fn canonical_class(s: &SurfaceModel) -> DivClass {
    DivClass {
        a: -2,
        b: -(s.e as i64 + 2),
        m: vec![-1; s.r],
        mx: s.with_x.then_some(-1),
    }
}

/// `1 + (D² + K·D)/2`.
pub fn arithmetic_genus(d: &DivClass, s: &SurfaceModel) -> Result<i64> {
    let sum = s
        .square(d)?
        .checked_add(s.k_dot(d)?)
        .ok_or(Error::Overflow)?;
    if sum % 2 != 0 {
        return Err(Error::Invariant(format!("D^2 + K.D = {sum} is odd for {d}")));
    }
    Ok(1 + sum / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_pairings() {
        let s = SurfaceModel::new(3, 0);
        assert_eq!(s.square(&s.h()).unwrap(), -3);
        assert_eq!(s.square(&s.f()).unwrap(), 0);
        assert_eq!(s.dot(&s.h(), &s.f()).unwrap(), 1);

        let t = SurfaceModel::new(3, 6).with_extra_point();
        let d = DivClass::with_x(3, 9, vec![2; 6], 2);
        assert_eq!(t.square(&d).unwrap(), -1);
    }

    #[test]
    fn canonical() {
        let s = SurfaceModel::new(2, 0);
        assert_eq!(canonical_class(&s), DivClass::new(-2, -4, vec![]));
        let s0 = SurfaceModel::new(0, 0);
        let k = canonical_class(&s0);
        assert_eq!(k, DivClass::new(-2, -2, vec![]));
        assert_eq!(s0.square(&k).unwrap(), 8);
        let t = SurfaceModel::new(1, 2);
        assert_eq!(canonical_class(&t).exceptional_coeff(1), 1);
    }

    #[test]
    fn genus_examples() {
        for e in 0..6 {
            for r in 0..8 {
                let s = SurfaceModel::new(e, r);
                for i in 0..r {
                    assert_eq!(arithmetic_genus(&s.exceptional(i), &s).unwrap(), 0);
                }
                assert_eq!(arithmetic_genus(&s.h(), &s).unwrap(), 0);
                let mk = -&canonical_class(&s);
                assert_eq!(arithmetic_genus(&mk, &s).unwrap(), 1);
            }
        }
    }

    #[test]
    fn shape_errors() {
        let s = SurfaceModel::new(1, 2);
        let bad = DivClass::new(1, 1, vec![1]);
        assert!(matches!(intersect(&bad, &s.h(), &s), Err(Error::Structure(_))));
        let withx = DivClass::with_x(1, 1, vec![0, 0], 1);
        assert!(matches!(s.square(&withx), Err(Error::Structure(_))));
        assert!(SurfaceModel::new(1, 2)
            .with_config(PointConfig::Configured { on_ce: vec![false], fiber: vec![0] })
            .is_err());
    }

    #[test]
    fn overflow_is_reported() {
        let s = SurfaceModel::new(5, 0);
        let big = DivClass::new(i64::MAX / 2, 0, vec![]);
        assert_eq!(s.square(&big), Err(Error::Overflow));
        assert_eq!(big.checked_scale(4), Err(Error::Overflow));
    }

    #[test]
    fn text_forms() {
        let d = DivClass::with_x(3, 9, vec![2, 2, 1], 2);
        assert_eq!(d.to_string(), "3,9,2,2,1;2");
        assert_eq!(d.to_string().parse::<DivClass>().unwrap(), d);
        assert_eq!(d.algebraic().to_string(), "3H+9F-2E1-2E2-E3-2E_x");
        assert_eq!(DivClass::new(0, 0, vec![-1]).algebraic().to_string(), "E1");
        assert_eq!(DivClass::new(0, 0, vec![0]).algebraic().to_string(), "0");
        assert!("1".parse::<DivClass>().is_err());
        assert!("1,x".parse::<DivClass>().is_err());
    }

    #[test]
    fn json_forms() {
        let d = DivClass::new(1, 2, vec![3]);
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"{"a":1,"b":2,"m":[3],"mx":null}"#
        );
        let s: SurfaceModel = serde_json::from_str(
            r#"{"e":2,"r":2,"with_x":false,"config":{"configured":{"on_ce":[true,false],"fiber":[0,0]}}}"#,
        )
        .unwrap();
        assert_eq!(s.fiber_mates(1), vec![0, 1]);
        assert_eq!(s.ce_strict_transform(), DivClass::new(1, 0, vec![1, 0]));
        assert_eq!(s.fiber_through(0), DivClass::new(0, 1, vec![1, 1]));
        let back: SurfaceModel =
            serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(back, s);
        let vg: SurfaceModel =
            serde_json::from_str(r#"{"e":3,"r":6,"with_x":true,"config":"very_general"}"#).unwrap();
        assert_eq!(vg.k_squared(), 1);
        assert!(serde_json::from_str::<SurfaceModel>(
            r#"{"e":1,"r":2,"config":{"configured":{"on_ce":[true],"fiber":[0]}}}"#
        )
        .is_err());
    }

    // Leading principal minors of the Gram matrix of H, F, E_1.. alternate
    // in the pattern of signature (1, n-1).
    #[test]
    fn signature_via_minors() {
        for e in 0..5i64 {
            for r in 0..5usize {
                let n = r + 2;
                let s = SurfaceModel::new(e as u32, r);
                let p = &s.h() + &((e + 1) * &s.f());
                let mut basis = vec![p, s.f()];
                for i in 0..r {
                    basis.push(s.exceptional(i));
                }
                let mut g = vec![vec![0i128; n]; n];
                for i in 0..n {
                    for j in 0..n {
                        g[i][j] = s.dot(&basis[i], &basis[j]).unwrap() as i128;
                    }
                }
                let mut sign_changes = 0;
                let mut prev = 1i128;
                for k in 1..=n {
                    let d = det(&g, k);
                    assert_ne!(d, 0);
                    if (d > 0) != (prev > 0) {
                        sign_changes += 1;
                    }
                    prev = d;
                }
                // one positive direction => n-1 negative eigenvalues
                assert_eq!(sign_changes, n - 1, "e={e} r={r}");
            }
        }
    }

    fn det(g: &[Vec<i128>], k: usize) -> i128 {
        // Bareiss on the leading k x k block
        let mut a: Vec<Vec<i128>> = (0..k).map(|i| g[i][..k].to_vec()).collect();
        let mut sign = 1;
        let mut prev = 1i128;
        for c in 0..k {
            if a[c][c] == 0 {
                let Some(p) = (c + 1..k).find(|&i| a[i][c] != 0) else { return 0 };
                a.swap(c, p);
                sign = -sign;
            }
            for i in c + 1..k {
                for j in c + 1..k {
                    a[i][j] = (a[i][j] * a[c][c] - a[i][c] * a[c][j]) / prev;
                }
            }
            prev = a[c][c];
        }
        sign * a[k - 1][k - 1]
    }

    fn surface() -> impl Strategy<Value = SurfaceModel> {
        (0u32..8, 0usize..8, any::<bool>()).prop_map(|(e, r, x)| {
            let s = SurfaceModel::new(e, r);
            if x { s.with_extra_point() } else { s }
        })
    }

    fn class_on(s: &SurfaceModel) -> impl Strategy<Value = DivClass> {
        let r = s.r();
        let x = s.has_x();
        (-50i64..50, -50i64..50, proptest::collection::vec(-20i64..20, r), -20i64..20)
            .prop_map(move |(a, b, m, mx)| DivClass { a, b, m, mx: x.then_some(mx) })
    }

    fn triple() -> impl Strategy<Value = (SurfaceModel, DivClass, DivClass, DivClass)> {
        surface().prop_flat_map(|s| {
            (Just(s.clone()), class_on(&s), class_on(&s), class_on(&s))
        })
    }

    proptest! {
        #[test]
        fn bilinear_and_symmetric((s, d1, d2, d3) in triple(), k in -5i64..5) {
            let lhs = s.dot(&(&d1 + &d2), &d3).unwrap();
            prop_assert_eq!(lhs, s.dot(&d1, &d3).unwrap() + s.dot(&d2, &d3).unwrap());
            prop_assert_eq!(s.dot(&d1, &d2).unwrap(), s.dot(&d2, &d1).unwrap());
            prop_assert_eq!(s.dot(&(k * &d1), &d2).unwrap(), k * s.dot(&d1, &d2).unwrap());
        }

        #[test]
        fn k_squared(e in 0u32..20, r in 0usize..=12, x in any::<bool>()) {
            let mut s = SurfaceModel::new(e, r);
            if x { s = s.with_extra_point(); }
            let k = canonical_class(&s);
            prop_assert_eq!(s.square(&k).unwrap(), 8 - r as i64 - i64::from(x));
            prop_assert_eq!(s.k_squared(), 8 - r as i64 - i64::from(x));
        }

        #[test]
        fn genus_parity((s, d, _, _) in triple()) {
            prop_assert!(arithmetic_genus(&d, &s).is_ok());
        }
    }
}
