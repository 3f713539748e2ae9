//! `(-1)`- and `(-2)`-classes: lattice solutions of
//! `D² = -1, K·D = -1` and `D² = -2, K·D = 0`, plus the filters used to
//! decide which of them can be irreducible curves.

use alloc::format;
use alloc::vec::Vec;

use num_integer::Roots;
use serde::{Deserialize, Serialize};

use crate::cohomology::{conditions_count, h0_fe};
use crate::lattice::SurfaceModel;
use crate::{DivClass, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NegKind {
    MinusOne,
    MinusTwo,
}

impl NegKind {
    /// `(D², K·D)` for the kind.
    pub fn invariants(self) -> (i64, i64) {
        match self {
            NegKind::MinusOne => (-1, -1),
            NegKind::MinusTwo => (-2, 0),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegCurveClass {
    pub cls: DivClass,
    pub kind: NegKind,
    /// [`structural_filter`] verdict.
    pub passes_irreducibility: bool,
    /// [`effectivity_heuristic`] verdict.
    pub passes_very_general: bool,
    /// [`xu_filter`] verdict. Recorded, never used to reject.
    pub xu_bound: bool,
}

impl NegCurveClass {
    fn order_key(&self) -> (NegKind, &DivClass) {
        (self.kind, &self.cls)
    }

    /// Passes both hard filters.
    pub fn is_candidate_curve(&self) -> bool {
        self.passes_irreducibility && self.passes_very_general
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundsDerivation {
    Auto,
    Manual,
}

/// Symmetric coefficient box `|α| <= a_max`, `|β| <= b_max`, `|n_i| <= m_max`.
///
/// An `Auto` value built with [`EnumBounds::auto`] carries zeros until it is
/// resolved against a surface; resolution derives a box that provably
/// contains every solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumBounds {
    pub a_max: u64,
    pub b_max: u64,
    pub m_max: u64,
    pub derivation: BoundsDerivation,
}

impl EnumBounds {
    pub const fn auto() -> Self {
        EnumBounds { a_max: 0, b_max: 0, m_max: 0, derivation: BoundsDerivation::Auto }
    }

    pub const fn manual(a_max: u64, b_max: u64, m_max: u64) -> Self {
        EnumBounds { a_max, b_max, m_max, derivation: BoundsDerivation::Manual }
    }

    pub fn is_auto(&self) -> bool {
        self.derivation == BoundsDerivation::Auto
    }

    /// Concrete box for `s`: manual bounds pass through, automatic ones are
    /// derived (which needs `K² > 0`).
    pub fn resolve(&self, s: &SurfaceModel) -> Result<EnumBounds> {
        match self.derivation {
            BoundsDerivation::Manual => Ok(*self),
            BoundsDerivation::Auto => derive_bounds(s),
        }
    }
}

/// Exact box for both systems when `K² > 0`.
///
/// With `K² > 0` the form is negative definite on `K^⊥`, so for a functional
/// `v` the value `t = v·D` satisfies
/// `(t·K² - (v·K)(K·D))² <= (v²K² - (v·K)²)(D²K² - (K·D)²)`.
/// Applying this to `v = F, H+eF, E_i` bounds `α`, `β` and `n_i`.
pub fn derive_bounds(s: &SurfaceModel) -> Result<EnumBounds> {
    let k2 = s.k_squared();
    if k2 <= 0 {
        return Err(Error::Bounds(format!(
            "K^2 = {k2} <= 0 on e = {}, {} exceptional curves: automatic bounds need K^2 > 0, supply manual bounds",
            s.e(),
            s.exceptional_count()
        )));
    }
    let e = s.e() as i128;
    let k2 = k2 as i128;
    let reach = |v2: i128, vk: i128| -> u64 {
        let mut best = 0i128;
        for kind in [NegKind::MinusOne, NegKind::MinusTwo] {
            let (d, c) = kind.invariants();
            let (d, c) = (d as i128, c as i128);
            let p = (v2 * k2 - vk * vk) * (d * k2 - c * c);
            debug_assert!(p >= 0);
            let root = (p as u128).sqrt() as i128;
            let lo = (vk * c - root).div_euclid(k2);
            let hi = (vk * c + root).div_euclid(k2) + 1;
            best = best.max(lo.abs()).max(hi.abs());
        }
        best as u64
    };
    Ok(EnumBounds {
        a_max: reach(0, -2),
        b_max: reach(e, -e - 2),
        m_max: if s.exceptional_count() == 0 { 0 } else { reach(-1, -1) },
        derivation: BoundsDerivation::Auto,
    })
}

/// Every lattice solution of either system inside the bounds, sorted by
/// `(kind, α, β, n_1.., n_x)` and tagged with the filter verdicts.
pub fn enumerate_neg_classes(s: &SurfaceModel, bounds: &EnumBounds) -> Result<Vec<NegCurveClass>> {
    let bx = bounds.resolve(s)?;
    let e = s.e() as i128;
    let n = s.exceptional_count();
    let (am, bm, mm) = (bx.a_max as i64, bx.b_max as i64, bx.m_max as i64);
    let cap = n as i128 * (mm as i128) * (mm as i128);
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(n);
    for alpha in -am..=am {
        for beta in -bm..=bm {
            for kind in [NegKind::MinusOne, NegKind::MinusTwo] {
                let (d, c) = kind.invariants();
                let (a, b) = (alpha as i128, beta as i128);
                let q = -e * a * a + 2 * a * b - d as i128;
                let sum = c as i128 - (e - 2) * a + 2 * b;
                if q < 0 || q > cap || !feasible(n, sum, q, mm as i128) {
                    continue;
                }
                buf.clear();
                fill(n, sum as i64, q as i64, mm, &mut buf, &mut |ns| {
                    let (m, mx) = if s.has_x() {
                        (ns[..n - 1].to_vec(), Some(ns[n - 1]))
                    } else {
                        (ns.to_vec(), None)
                    };
                    out.push(tag(DivClass { a: alpha, b: beta, m, mx }, kind, s));
                });
            }
        }
    }
    out.sort_by(|x, y| x.order_key().cmp(&y.order_key()));
    Ok(out)
}

fn tag(cls: DivClass, kind: NegKind, s: &SurfaceModel) -> NegCurveClass {
    NegCurveClass {
        passes_irreducibility: structural_filter(&cls, s),
        passes_very_general: effectivity_heuristic(&cls, s),
        xu_bound: xu_filter(&cls, s),
        cls,
        kind,
    }
}

// k integers in [-mm, mm] with sum `sum` and square sum `q`: necessary
// conditions (Cauchy–Schwarz, parity, box).
fn feasible(k: usize, sum: i128, q: i128, mm: i128) -> bool {
    if k == 0 {
        return sum == 0 && q == 0;
    }
    q >= 0 && sum * sum <= k as i128 * q && (sum - q) % 2 == 0 && q <= k as i128 * mm * mm
}

fn fill(k: usize, sum: i64, q: i64, mm: i64, buf: &mut Vec<i64>, emit: &mut impl FnMut(&[i64])) {
    if k == 0 {
        emit(buf);
        return;
    }
    let lim = mm.min(q.sqrt());
    for v in -lim..=lim {
        let (s2, q2) = (sum - v, q - v * v);
        if feasible(k - 1, s2 as i128, q2 as i128, mm as i128) {
            buf.push(v);
            fill(k - 1, s2, q2, mm, buf, emit);
            buf.pop();
        }
    }
}

fn is_pure_exceptional(cls: &DivClass) -> bool {
    if cls.a != 0 || cls.b != 0 {
        return false;
    }
    let minus = cls.m.iter().filter(|&&v| v == -1).count();
    let rest_zero = cls.m.iter().all(|&v| v == 0 || v == -1);
    match cls.mx {
        // E_i, or E_x
        _ if rest_zero && minus == 1 && cls.mult_x() == 0 => true,
        Some(-1) => rest_zero && minus == 0,
        // E_i - E_x
        Some(1) => rest_zero && minus == 1,
        _ => false,
    }
}

/// Necessary shape of an irreducible curve class.
///
/// Accepts `E_i`, `E_x`, `E_i - E_x`; otherwise requires `α >= 0`,
/// `α = 0 ⟹ β = 1`, `α >= 1 ⟹ (α, β) = (1, 0)` or `β >= αe` with `β > 0`,
/// and multiplicities in `[0, max(α, 1)]`.
pub fn structural_filter(cls: &DivClass, s: &SurfaceModel) -> bool {
    let (a, b) = (cls.a, cls.b);
    if a == 0 && b == 0 {
        return is_pure_exceptional(cls);
    }
    if a < 0 {
        return false;
    }
    let shape_ok = if a == 0 {
        b == 1
    } else {
        (a == 1 && b == 0) || (b > 0 && b >= a * s.e() as i64)
    };
    shape_ok && cls.mults().all(|n| (0..=a.max(1)).contains(&n))
}

/// Multi-point bound for an irreducible curve on `F_e` through very general
/// points: `C² >= Σ n_i² - min_j n_j` over the positive multiplicities, with
/// `C² = 2αβ - eα²` the square on `F_e`. Vacuous without positive
/// multiplicities.
pub fn xu_filter(cls: &DivClass, s: &SurfaceModel) -> bool {
    let pos: Vec<i128> = cls.mults().filter(|&n| n > 0).map(i128::from).collect();
    let Some(&least) = pos.iter().min() else { return true };
    let (a, b, e) = (cls.a as i128, cls.b as i128, s.e() as i128);
    2 * a * b - e * a * a >= pos.iter().map(|n| n * n).sum::<i128>() - least
}

/// Count of conditions: `h^0(αC_e + βf) > Σ C(n_i + 1, 2)` (positive `n_i`
/// only). Classes with `α = β = 0` are effective exactly when they are a
/// non-zero sum of exceptional curves.
///
/// A pass guarantees an effective class for any position of the points; a
/// failure only says the count does not prove it.
pub fn effectivity_heuristic(cls: &DivClass, s: &SurfaceModel) -> bool {
    if cls.a == 0 && cls.b == 0 {
        return cls.mults().all(|n| n <= 0) && cls.mults().any(|n| n < 0);
    }
    if cls.a < 0 || cls.b < 0 {
        return false;
    }
    let pos: Vec<i64> = cls.mults().map(|n| n.max(0)).collect();
    match conditions_count(&pos) {
        Ok(c) => h0_fe(cls.a, cls.b, s.e()) > c,
        Err(_) => false,
    }
}

/// `α >= 0`, `β >= eα`, `n_x >= 1`: classes that might pass through `x`.
pub fn candidate_filter(cls: &DivClass, s: &SurfaceModel) -> bool {
    cls.a >= 0 && cls.b >= s.e() as i64 * cls.a && cls.mult_x() >= 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyMember {
    pub family: u8,
    pub class: NegCurveClass,
}

/// Sizes of the ten families on `F_{3,6}` with `x`.
pub const FAMILY_SIZES: [usize; 10] = [6, 1, 6, 20, 15, 6, 1, 15, 6, 1];

/// Family (1..=10) of a candidate class on `F_{3,6}` with `x`, by its
/// `(α, β)`, multiplicity pattern and `n_x`.
pub fn family_of(cls: &DivClass) -> Option<u8> {
    if cls.m.len() != 6 {
        return None;
    }
    let mut ms = cls.m.clone();
    ms.sort_unstable_by(|x, y| y.cmp(x));
    let count = |v: i64| ms.iter().filter(|&&m| m == v).count();
    let only = |pairs: &[(i64, usize)]| {
        pairs.iter().map(|p| p.1).sum::<usize>() == 6 && pairs.iter().all(|&(v, c)| count(v) == c)
    };
    let f = match (cls.a, cls.b, cls.mx?) {
        (0, 0, 1) if only(&[(-1, 1), (0, 5)]) => 1,
        (0, 1, 1) if only(&[(0, 6)]) => 2,
        (0, 1, 1) if only(&[(1, 1), (0, 5)]) => 3,
        (1, 3, 1) if only(&[(1, 3), (0, 3)]) => 4,
        (1, 3, 1) if only(&[(1, 4), (0, 2)]) => 5,
        (1, 4, 1) if only(&[(1, 5), (0, 1)]) => 6,
        (1, 4, 1) if only(&[(1, 6)]) => 7,
        (2, 6, 1) if only(&[(2, 2), (1, 4)]) => 8,
        (2, 6, 2) if only(&[(2, 1), (1, 5)]) => 9,
        (3, 9, 2) if only(&[(2, 6)]) => 10,
        _ => return None,
    };
    Some(f)
}

/// The candidate classes through `x` on `F_{3,6}` (very general points,
/// extra point `x`), each labelled with its family.
pub fn seventy_seven_list(s: &SurfaceModel) -> Result<Vec<FamilyMember>> {
    if s.e() != 3 || s.r() != 6 || !s.has_x() || !s.is_very_general() {
        return Err(Error::UnsupportedRange(
            "the family list is defined for e = 3, r = 6 with x and very general points".into(),
        ));
    }
    let all = enumerate_neg_classes(s, &EnumBounds::auto())?;
    let mut out = Vec::new();
    for c in all.into_iter().filter(|c| candidate_filter(&c.cls, s)) {
        let family = family_of(&c.cls).ok_or_else(|| {
            Error::Invariant(format!("candidate {} fits no family", c.cls.algebraic()))
        })?;
        out.push(FamilyMember { family, class: c });
    }
    let expected: usize = FAMILY_SIZES.iter().sum();
    if out.len() != expected {
        return Err(Error::Bounds(format!(
            "found {} candidates, expected {expected}",
            out.len()
        )));
    }
    out.sort_by(|x, y| (x.family, x.class.order_key()).cmp(&(y.family, y.class.order_key())));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f36() -> SurfaceModel {
        SurfaceModel::new(3, 6).with_extra_point()
    }

    // Independent check: brute force over the box, no pruning.
    fn brute(s: &SurfaceModel, bx: &EnumBounds) -> Vec<(NegKind, DivClass)> {
        let n = s.exceptional_count();
        let mm = bx.m_max as i64;
        let width = (2 * mm + 1) as usize;
        let mut out = Vec::new();
        for a in -(bx.a_max as i64)..=bx.a_max as i64 {
            for b in -(bx.b_max as i64)..=bx.b_max as i64 {
                for code in 0..width.pow(n as u32) {
                    let mut c = code;
                    let mut ns = Vec::new();
                    for _ in 0..n {
                        ns.push((c % width) as i64 - mm);
                        c /= width;
                    }
                    let (m, mx) = if s.has_x() {
                        (ns[..n - 1].to_vec(), Some(ns[n - 1]))
                    } else {
                        (ns, None)
                    };
                    let d = DivClass { a, b, m, mx };
                    let sq = s.square(&d).unwrap();
                    let kd = s.k_dot(&d).unwrap();
                    for kind in [NegKind::MinusOne, NegKind::MinusTwo] {
                        if (sq, kd) == kind.invariants() {
                            out.push((kind, d.clone()));
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn matches_brute_force_small() {
        for (e, r, x) in [(0, 2, true), (1, 2, false), (2, 3, false), (3, 1, true), (4, 2, true)] {
            let mut s = SurfaceModel::new(e, r);
            if x {
                s = s.with_extra_point();
            }
            let bx = derive_bounds(&s).unwrap();
            let got: Vec<_> = enumerate_neg_classes(&s, &bx)
                .unwrap()
                .into_iter()
                .map(|c| (c.kind, c.cls))
                .collect();
            assert_eq!(got, brute(&s, &bx), "e={e} r={r}");
            // a wider manual box finds nothing new
            let wide = EnumBounds::manual(bx.a_max + 2, bx.b_max + 3, bx.m_max + 1);
            assert_eq!(enumerate_neg_classes(&s, &wide).unwrap().len(), got.len());
        }
    }

    #[test]
    fn count_on_f36() {
        let s = f36();
        let all = enumerate_neg_classes(&s, &EnumBounds::auto()).unwrap();
        assert_eq!(all.len(), 480);
        assert_eq!(all.iter().filter(|c| c.kind == NegKind::MinusOne).count(), 240);
        for c in &all {
            let (d2, kd) = c.kind.invariants();
            assert_eq!(s.square(&c.cls).unwrap(), d2);
            assert_eq!(s.k_dot(&c.cls).unwrap(), kd);
        }
        let mut sorted = all.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), 480);
    }

    #[test]
    fn the_77() {
        let s = f36();
        let list = seventy_seven_list(&s).unwrap();
        assert_eq!(list.len(), 77);
        let mut counts = [0usize; 10];
        for m in &list {
            counts[m.family as usize - 1] += 1;
        }
        assert_eq!(counts, FAMILY_SIZES);
        let ten: Vec<_> = list.iter().filter(|m| m.family == 10).collect();
        assert_eq!(ten[0].class.cls, DivClass::with_x(3, 9, vec![2; 6], 2));
        assert!(seventy_seven_list(&SurfaceModel::new(3, 6)).is_err());
    }

    #[test]
    fn small_examples() {
        let s = SurfaceModel::new(2, 0);
        let all = enumerate_neg_classes(&s, &EnumBounds::manual(3, 6, 0)).unwrap();
        assert!(all.iter().any(|c| c.kind == NegKind::MinusTwo && c.cls == s.h()));

        let s = SurfaceModel::new(1, 2).with_extra_point();
        let all = enumerate_neg_classes(&s, &EnumBounds::auto()).unwrap();
        let ei_ex = DivClass::with_x(0, 0, vec![-1, 0], 1);
        assert!(all.iter().any(|c| c.kind == NegKind::MinusTwo && c.cls == ei_ex));
    }

    #[test]
    fn auto_needs_positive_k2() {
        let s = SurfaceModel::new(5, 8);
        assert!(matches!(
            enumerate_neg_classes(&s, &EnumBounds::auto()),
            Err(Error::Bounds(_))
        ));
        assert!(enumerate_neg_classes(&s, &EnumBounds::manual(1, 6, 1)).is_ok());
    }

    #[test]
    fn structural_examples() {
        let s = SurfaceModel::new(3, 2);
        assert!(!structural_filter(&DivClass::new(2, 3, vec![0, 0]), &s));
        assert!(structural_filter(&s.h(), &s));
        assert!(structural_filter(&DivClass::new(0, 1, vec![1, 0]), &s));
        assert!(structural_filter(&s.exceptional(1), &s));
        assert!(!structural_filter(&DivClass::new(0, 0, vec![-1, 1]), &s));
        assert!(!structural_filter(&DivClass::new(1, 3, vec![2, 0]), &s));
        let t = s.with_extra_point();
        assert!(structural_filter(&DivClass::with_x(0, 0, vec![-1, 0], 1), &t));
        assert!(structural_filter(&t.exceptional_x(), &t));
    }

    #[test]
    fn effectivity_examples() {
        for e in 1..8u32 {
            let r = e as usize + 2;
            let s = SurfaceModel::new(e, r);
            assert!(!effectivity_heuristic(&DivClass::new(1, e as i64, vec![1; r]), &s));
        }
        let s = f36();
        assert!(effectivity_heuristic(&DivClass::with_x(3, 9, vec![2; 6], 2), &s));
        assert!(!effectivity_heuristic(&DivClass::with_x(3, 9, vec![2; 6], 3), &s));
        assert!(effectivity_heuristic(&s.exceptional(0), &s));
        assert!(!effectivity_heuristic(&DivClass::with_x(0, 0, vec![-1, 0, 0, 0, 0, 0], 1), &s));
    }

    #[test]
    fn xu_examples() {
        let s = f36();
        // square on F_3 is 27, multiplicity side 28 - 2
        assert!(xu_filter(&DivClass::with_x(3, 9, vec![2; 6], 2), &s));
        assert!(xu_filter(&DivClass::with_x(0, 1, vec![1, 0, 0, 0, 0, 0], 0), &s));
        assert!(!xu_filter(&DivClass::with_x(0, 1, vec![1, 1, 0, 0, 0, 0], 0), &s));
        assert!(xu_filter(&s.exceptional(2), &s));
        // family (8): 2H+6F with two double and four simple points, simple at x
        let f8 = DivClass::with_x(2, 6, vec![2, 2, 1, 1, 1, 1], 1);
        assert!(xu_filter(&f8, &s));
    }

    // For r <= e+1 only (0,0), (0,1), (1,0), (1,e) survive the structural filter.
    #[test]
    fn small_r_shapes() {
        for e in 0..=8u32 {
            for r in 0..=(e as usize + 1) {
                let s = SurfaceModel::new(e, r);
                let bx = match derive_bounds(&s) {
                    Ok(b) => b,
                    Err(_) => continue,
                };
                for c in enumerate_neg_classes(&s, &bx).unwrap() {
                    if c.passes_irreducibility {
                        let ab = (c.cls.a, c.cls.b);
                        assert!(
                            [(0, 0), (0, 1), (1, 0), (1, e as i64)].contains(&ab),
                            "e={e} r={r} {}",
                            c.cls
                        );
                    }
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn permutation_invariant(e in 0u32..5, r in 0usize..5, seed in any::<u64>()) {
            let s = SurfaceModel::new(e, r);
            let all = enumerate_neg_classes(&s, &EnumBounds::auto()).unwrap();
            // rotate the points by an amount chosen from the seed
            let k = if r == 0 { 0 } else { (seed as usize) % r };
            let mut permuted: Vec<_> = all.iter().map(|c| {
                let mut d = c.cls.clone();
                d.m.rotate_left(k);
                (c.kind, d)
            }).collect();
            permuted.sort();
            let orig: Vec<_> = all.into_iter().map(|c| (c.kind, c.cls)).collect();
            prop_assert_eq!(permuted, orig);
        }
    }
}
