//! Nefness and ampleness against a finite list of curve classes.

use alloc::format;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::lattice::{canonical_class, SurfaceModel};
use crate::negcurves::{enumerate_neg_classes, EnumBounds, NegCurveClass};
use crate::{DivClass, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FixedKind {
    /// Strict transform of `C_e`.
    Ce,
    /// Strict transform of the fiber through the listed points (zero-based).
    Fiber(Vec<usize>),
    Exceptional(usize),
    ExceptionalX,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedComponent {
    pub class: DivClass,
    pub kind: FixedKind,
    /// Known to be a fixed component of `|-K|`.
    pub definite: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedComponents {
    pub components: Vec<FixedComponent>,
    /// More than `e + 1` points: the list is only a superset without proof.
    pub beyond_guarantee: bool,
}

impl FixedComponents {
    pub fn classes(&self) -> Vec<DivClass> {
        self.components.iter().map(|c| c.class.clone()).collect()
    }
}

/// Candidate fixed components of `|-K|`: `C̃_e`, one strict fiber per
/// occupied fiber, and the exceptional curves.
pub fn fixed_components(s: &SurfaceModel) -> FixedComponents {
    let e = s.e();
    let mut components = Vec::new();
    components.push(FixedComponent {
        class: s.ce_strict_transform(),
        kind: FixedKind::Ce,
        definite: e >= 3,
    });
    let mut seen = Vec::new();
    for i in 0..s.r() {
        let mates = s.fiber_mates(i);
        if seen.contains(&mates[0]) {
            continue;
        }
        seen.push(mates[0]);
        let k = mates.len();
        components.push(FixedComponent {
            class: s.fiber_through(i),
            definite: k > 2 || (e >= 3 && k > 1),
            kind: FixedKind::Fiber(mates),
        });
    }
    for i in 0..s.r() {
        components.push(FixedComponent {
            class: s.exceptional(i),
            kind: FixedKind::Exceptional(i),
            definite: false,
        });
    }
    if s.has_x() {
        components.push(FixedComponent {
            class: s.exceptional_x(),
            kind: FixedKind::ExceptionalX,
            definite: false,
        });
    }
    FixedComponents { components, beyond_guarantee: s.r() > e as usize + 1 }
}

/// Curves spanning the relevant part of the cone of curves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeGenerators {
    pub negatives: Vec<NegCurveClass>,
    pub fixed_components: Vec<DivClass>,
    pub anticanonical: DivClass,
    /// The resolved enumeration box the negatives came from.
    pub bounds: EnumBounds,
}

impl ConeGenerators {
    /// Negatives passing both filters, the fixed-component superset and `-K`.
    pub fn build(s: &SurfaceModel, bounds: &EnumBounds) -> Result<Self> {
        let bounds = bounds.resolve(s)?;
        let negatives = enumerate_neg_classes(s, &bounds)?
            .into_iter()
            .filter(NegCurveClass::is_candidate_curve)
            .collect();
        Ok(ConeGenerators {
            negatives,
            fixed_components: fixed_components(s).classes(),
            anticanonical: -&canonical_class(s),
            bounds,
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = &DivClass> {
        self.negatives
            .iter()
            .map(|n| &n.cls)
            .chain(&self.fixed_components)
            .chain(core::iter::once(&self.anticanonical))
    }
}

/// Outcome of a positivity test with the generator of least pairing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityReport {
    pub holds: bool,
    pub self_intersection: i64,
    pub min_pairing: i64,
    pub witness: DivClass,
}

fn anticanonical_range(s: &SurfaceModel) -> Result<()> {
    if !s.in_anticanonical_range() {
        return Err(Error::UnsupportedRange(format!(
            "{} blown-up points exceed e + 5 = {}",
            s.exceptional_count(),
            s.e() + 5
        )));
    }
    Ok(())
}

fn least_pairing(d: &DivClass, s: &SurfaceModel, g: &ConeGenerators) -> Result<(i64, DivClass)> {
    let mut best: Option<(i64, &DivClass)> = None;
    for c in g.iter() {
        let v = s.dot(d, c)?;
        if best.map_or(true, |(bv, bc)| (v, c) < (bv, bc)) {
            best = Some((v, c));
        }
    }
    let (v, c) = best.expect("generator list contains -K");
    Ok((v, c.clone()))
}

pub fn nef_report(d: &DivClass, s: &SurfaceModel, g: &ConeGenerators) -> Result<PositivityReport> {
    anticanonical_range(s)?;
    let (min_pairing, witness) = least_pairing(d, s, g)?;
    Ok(PositivityReport {
        holds: min_pairing >= 0,
        self_intersection: s.square(d)?,
        min_pairing,
        witness,
    })
}

/// `D·C >= 0` for every generator.
pub fn is_nef(d: &DivClass, s: &SurfaceModel, g: &ConeGenerators) -> Result<bool> {
    Ok(nef_report(d, s, g)?.holds)
}

pub fn ample_report(l: &DivClass, s: &SurfaceModel, g: &ConeGenerators) -> Result<PositivityReport> {
    anticanonical_range(s)?;
    let (min_pairing, witness) = least_pairing(l, s, g)?;
    let sq = s.square(l)?;
    Ok(PositivityReport {
        holds: sq > 0 && min_pairing > 0,
        self_intersection: sq,
        min_pairing,
        witness,
    })
}

/// Nakai–Moishezon against the generators: `L² > 0` and `L·C > 0`.
pub fn nakai_check(l: &DivClass, s: &SurfaceModel, g: &ConeGenerators) -> Result<bool> {
    Ok(ample_report(l, s, g)?.holds)
}

/// Ampleness for at most `e + 1` points off `C_e` on distinct fibers:
/// `a > m_i > 0`, `b > ae`, `b > Σ m_i`.
pub fn is_ample_closed_form(l: &DivClass, s: &SurfaceModel) -> Result<bool> {
    s.check(l)?;
    if s.e() == 0 {
        return Err(Error::UnsupportedRange("closed form needs e > 0".into()));
    }
    if s.has_x() {
        return Err(Error::UnsupportedRange("closed form is for surfaces without x".into()));
    }
    if s.r() > s.e() as usize + 1 {
        return Err(Error::UnsupportedRange(format!(
            "closed form needs r <= e + 1, got r = {}, e = {}",
            s.r(),
            s.e()
        )));
    }
    if !s.points_in_general_position() {
        return Err(Error::UnsupportedRange(
            "closed form needs points off C_e on distinct fibers".into(),
        ));
    }
    let (a, b) = (l.a, l.b);
    let sum = l.m.iter().try_fold(0i64, |acc, &m| acc.checked_add(m)).ok_or(Error::Overflow)?;
    let ae = a.checked_mul(s.e() as i64).ok_or(Error::Overflow)?;
    // a > 0 is implied by the first condition unless r = 0
    Ok(a > 0 && l.m.iter().all(|&m| a > m && m > 0) && b > ae && b > sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::PointConfig;
    use alloc::vec;

    fn gens(s: &SurfaceModel) -> ConeGenerators {
        ConeGenerators::build(s, &EnumBounds::auto()).unwrap()
    }

    #[test]
    fn fixed_component_examples() {
        let s = SurfaceModel::new(5, 3);
        let fc = fixed_components(&s);
        assert!(fc.components[0].definite);
        assert!(!fc.beyond_guarantee);

        let s = SurfaceModel::new(2, 3)
            .with_config(PointConfig::Configured { on_ce: vec![false; 3], fiber: vec![7; 3] })
            .unwrap();
        let fc = fixed_components(&s);
        let fib = fc.components.iter().find(|c| matches!(c.kind, FixedKind::Fiber(_))).unwrap();
        assert!(fib.definite);
        assert_eq!(fib.class, DivClass::new(0, 1, vec![1, 1, 1]));
        assert!(!fc.components[0].definite);

        let s = SurfaceModel::new(4, 2)
            .with_config(PointConfig::Configured { on_ce: vec![false; 2], fiber: vec![1, 1] })
            .unwrap();
        let fc = fixed_components(&s);
        assert!(fc.components.iter().any(|c| matches!(c.kind, FixedKind::Fiber(_)) && c.definite));

        let s = SurfaceModel::new(2, 2)
            .with_config(PointConfig::Configured { on_ce: vec![false; 2], fiber: vec![1, 1] })
            .unwrap();
        let fc = fixed_components(&s);
        assert!(!fc.components.iter().any(|c| matches!(c.kind, FixedKind::Fiber(_)) && c.definite));
        assert!(fixed_components(&SurfaceModel::new(1, 3)).beyond_guarantee);
    }

    #[test]
    fn nef_examples() {
        for (e, r) in [(0, 0), (2, 0), (1, 3), (3, 4)] {
            let s = SurfaceModel::new(e, r);
            assert!(is_nef(&s.f(), &s, &gens(&s)).unwrap());
        }
        let s = SurfaceModel::new(3, 0);
        let rep = nef_report(&s.h(), &s, &gens(&s)).unwrap();
        assert!(!rep.holds);
        assert_eq!(rep.min_pairing, -3);
        let s = SurfaceModel::new(1, 3);
        let l = DivClass::new(3, 5, vec![2, 2, 2]);
        assert!(is_nef(&l, &s, &gens(&s)).unwrap());
        assert!(nakai_check(&l, &s, &gens(&s)).unwrap());
    }

    #[test]
    fn nakai_examples() {
        let s = SurfaceModel::new(3, 6);
        let l = DivClass::new(6, 19, vec![4; 6]);
        let rep = ample_report(&l, &s, &gens(&s)).unwrap();
        assert_eq!(rep.self_intersection, 24);
        assert!(rep.holds);
        assert!(!nakai_check(&s.f(), &s, &gens(&s)).unwrap());

        let s = SurfaceModel::new(4, 9);
        let g = ConeGenerators::build(&s, &EnumBounds::manual(2, 8, 2)).unwrap();
        assert!(!nakai_check(&g.anticanonical.clone(), &s, &g).unwrap());
    }

    #[test]
    fn range_errors() {
        let s = SurfaceModel::new(0, 6);
        let g = ConeGenerators::build(&s, &EnumBounds::manual(2, 4, 2)).unwrap();
        assert!(matches!(is_nef(&s.f(), &s, &g), Err(Error::UnsupportedRange(_))));
        assert!(matches!(
            is_ample_closed_form(&DivClass::new(3, 4, vec![2; 3]), &SurfaceModel::new(1, 3)),
            Err(Error::UnsupportedRange(_))
        ));
        assert!(is_ample_closed_form(&SurfaceModel::new(0, 0).f(), &SurfaceModel::new(0, 0)).is_err());
    }

    #[test]
    fn closed_form_examples() {
        let s = SurfaceModel::new(1, 1);
        assert!(is_ample_closed_form(&DivClass::new(3, 4, vec![2]), &s).unwrap());
        assert!(!is_ample_closed_form(&DivClass::new(3, 9, vec![3]), &s).unwrap());
        for e in 2..7 {
            let s = SurfaceModel::new(e, 1);
            let l = DivClass::new(2, 2 * e as i64, vec![1]);
            assert!(!is_ample_closed_form(&l, &s).unwrap());
        }
        // no points: a fiber is nef but not ample
        let s = SurfaceModel::new(1, 0);
        assert!(!is_ample_closed_form(&s.f(), &s).unwrap());
        assert!(is_ample_closed_form(&DivClass::new(1, 2, vec![]), &s).unwrap());
    }
}
