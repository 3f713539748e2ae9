//! Grid scanner gathering evidence on speciality of linear systems.
//!
//! Cells are independent; [`scan_cell`] can be mapped in parallel by the
//! caller and the results merged with [`ScanReport::assemble`].

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::{interpolate, minus_one_reduction, class_virtual_dim, virtual_dim, LinSysSpec, StepKind};
use crate::lattice::SurfaceModel;
use crate::negcurves::{enumerate_neg_classes, EnumBounds, NegCurveClass, NegKind};
use crate::{DivClass, Error, Result};

/// Inclusive parameter ranges. Multiplicity vectors are non-increasing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanGrid {
    pub e: [u32; 2],
    pub r: [usize; 2],
    /// Also require `r <= e + r_max_offset`.
    #[serde(default)]
    pub r_max_offset: Option<usize>,
    pub a: [i64; 2],
    pub b: [i64; 2],
    /// Also require `b <= b_max_slope·e + b_max_const`.
    #[serde(default)]
    pub b_max_slope: Option<i64>,
    #[serde(default)]
    pub b_max_const: i64,
    pub m: [i64; 2],
    pub seeds: Vec<u64>,
}

impl ScanGrid {
    /// `e <= 5`, `r <= e + 3`, `a <= 4`, `b <= 4e + 4`, `1 <= m_i <= 3`.
    pub fn standard() -> Self {
        ScanGrid {
            e: [0, 5],
            r: [0, 8],
            r_max_offset: Some(3),
            a: [0, 4],
            b: [0, 24],
            b_max_slope: Some(4),
            b_max_const: 4,
            m: [1, 3],
            seeds: alloc::vec![1, 2, 3],
        }
    }

    fn r_cap(&self, e: u32) -> usize {
        let cap = self.r[1];
        self.r_max_offset.map_or(cap, |o| cap.min(e as usize + o))
    }

    fn b_cap(&self, e: u32) -> i64 {
        let cap = self.b[1];
        self.b_max_slope.map_or(cap, |k| cap.min(k * e as i64 + self.b_max_const))
    }

    /// `(e, r)` pairs touched by the grid.
    pub fn surfaces(&self) -> Vec<(u32, usize)> {
        let mut out = Vec::new();
        for e in self.e[0]..=self.e[1] {
            for r in self.r[0]..=self.r_cap(e) {
                out.push((e, r));
            }
        }
        out
    }

    pub fn cells(&self) -> Vec<LinSysSpec> {
        let mut out = Vec::new();
        for (e, r) in self.surfaces() {
            let mut vecs = Vec::new();
            mult_vectors(r, self.m[1], self.m[0], &mut Vec::new(), &mut vecs);
            for a in self.a[0].max(0)..=self.a[1] {
                for b in self.b[0]..=self.b_cap(e) {
                    for m in &vecs {
                        out.push(LinSysSpec { e, a, b, mults: m.clone() });
                    }
                }
            }
        }
        out
    }

    /// Automatic bounds when `K² > 0`; otherwise a box sized to the grid,
    /// which holds every `(-1)`-class that can split off a system in it.
    pub fn bounds_for(&self, e: u32, r: usize) -> EnumBounds {
        if SurfaceModel::new(e, r).k_squared() > 0 {
            EnumBounds::auto()
        } else {
            let a = self.a[1].max(1) as u64;
            EnumBounds::manual(a, self.b_cap(e).max(1) as u64, a.max(self.m[1].max(0) as u64))
        }
    }
}

fn mult_vectors(r: usize, hi: i64, lo: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if cur.len() == r {
        out.push(cur.clone());
        return;
    }
    let top = cur.last().copied().unwrap_or(hi).min(hi);
    for m in (lo..=top).rev() {
        cur.push(m);
        mult_vectors(r, hi, lo, cur, out);
        cur.pop();
    }
}

/// Enumerated classes for one surface of the grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceData {
    pub e: u32,
    pub r: usize,
    pub bounds: EnumBounds,
    pub negs: Vec<NegCurveClass>,
}

pub fn prepare_surface(grid: &ScanGrid, e: u32, r: usize) -> Result<SurfaceData> {
    let s = SurfaceModel::new(e, r);
    let bounds = grid.bounds_for(e, r).resolve(&s)?;
    let negs = enumerate_neg_classes(&s, &bounds)?;
    Ok(SurfaceData { e, r, bounds, negs })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanCell {
    pub spec: LinSysSpec,
    pub virtual_dim: i64,
    pub expected_dim: i64,
    /// Least over the seeds.
    pub actual_dim: i64,
    pub actual_dims: Vec<i64>,
    pub seed_stable: bool,
    pub special: bool,
    pub minus_one_special: bool,
    /// `C_e` lies in every member (sample attaining `actual_dim`).
    pub ce_fixed: Option<bool>,
    pub steps: usize,
    pub ce_steps: usize,
    pub max_t: i64,
    pub repeated_class: bool,
    pub reduced: DivClass,
    pub reduced_empty: bool,
    /// The reduction used a `C̃_e` step or a step with `t >= 2`.
    pub lemma_shadow: bool,
    /// Reducedness proxy: no class removed with `t >= 2` and none repeated.
    pub reduced_proxy: bool,
    /// Every `t = 1` step kept the virtual dimension.
    pub v_preserved: bool,
}

pub fn scan_cell(spec: &LinSysSpec, seeds: &[u64], negs: &[NegCurveClass]) -> Result<ScanCell> {
    if seeds.is_empty() {
        return Err(Error::InvalidArgument("at least one seed is required".into()));
    }
    let v = virtual_dim(spec)?;
    let samples = seeds.iter().map(|&sd| interpolate(spec, sd)).collect::<Result<Vec<_>>>()?;
    let best = samples.iter().min_by_key(|s| s.actual_dim).expect("non-empty");
    let actual_dim = best.actual_dim;
    let red = minus_one_reduction(spec, negs)?;
    let s = spec.surface();
    let minus_one_special =
        class_virtual_dim(&red.reduced, &s)? > class_virtual_dim(&spec.class(), &s)?;
    let max_t = red.log.iter().filter(|st| st.kind == StepKind::MinusOne).map(|st| st.t).max().unwrap_or(0);
    let ce_steps = red.log.iter().filter(|st| st.kind == StepKind::Ce).count();
    let mut seen: Vec<&DivClass> = red.log.iter().map(|st| &st.curve).collect();
    seen.sort();
    let before = seen.len();
    seen.dedup();
    let repeated_class = seen.len() < before;
    let v_preserved = red
        .log
        .iter()
        .filter(|st| st.kind == StepKind::MinusOne && st.t == 1)
        .all(|st| st.v_after == st.v_before);
    Ok(ScanCell {
        spec: spec.clone(),
        virtual_dim: v,
        expected_dim: v.max(-1),
        actual_dim,
        actual_dims: samples.iter().map(|s| s.actual_dim).collect(),
        seed_stable: samples.iter().all(|s| s.actual_dim == actual_dim),
        special: actual_dim > v.max(-1),
        minus_one_special,
        ce_fixed: best.ce_fixed,
        steps: red.log.len(),
        ce_steps,
        max_t,
        repeated_class,
        reduced: red.reduced,
        reduced_empty: red.empty,
        lemma_shadow: ce_steps > 0 || max_t >= 2,
        reduced_proxy: max_t < 2 && !repeated_class,
        v_preserved,
    })
}

/// Counts of `(special, (-1)-special)` combinations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Agreement {
    pub both: usize,
    pub special_only: usize,
    pub minus_one_only: usize,
    pub neither: usize,
}

impl Agreement {
    fn record(&mut self, c: &ScanCell) {
        match (c.special, c.minus_one_special) {
            (true, true) => self.both += 1,
            (true, false) => self.special_only += 1,
            (false, true) => self.minus_one_only += 1,
            (false, false) => self.neither += 1,
        }
    }
}

/// Systems passing the proxy hypothesis (reduced, `C_e` not fixed).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonSpecialCheck {
    pub hypothesis: usize,
    pub non_special: usize,
    pub special: usize,
}

/// Effective negative classes that are neither `(-1)`-classes nor `C̃_e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveTypeRow {
    pub e: u32,
    pub r: usize,
    /// `r <= e + 2`, where the statement is a theorem.
    pub proven_range: bool,
    pub bounds: EnumBounds,
    pub checked: usize,
    pub exceptions: Vec<DivClass>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanFailure {
    pub spec: LinSysSpec,
    pub error: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub cells: Vec<ScanCell>,
    /// Over non-empty systems only.
    pub special_vs_minus_one: Agreement,
    /// The same restricted to `b >= ae`. Below that line `C̃_e` is already
    /// fixed and the class-level `v` undercounts, so `(-1)`-special without
    /// being special is expected there.
    pub special_vs_minus_one_b_ge_ae: Agreement,
    pub non_special_hypothesis: NonSpecialCheck,
    pub curve_types: Vec<CurveTypeRow>,
    /// `(-1)`-special cells whose reduction has neither a `C̃_e` step nor a
    /// step with `t >= 2`.
    pub shadow_violations: usize,
    pub v_violations: usize,
    pub below_expected: usize,
    pub unstable: usize,
    pub failures: Vec<ScanFailure>,
}

pub fn curve_type_row(data: &SurfaceData) -> CurveTypeRow {
    let s = SurfaceModel::new(data.e, data.r);
    let ce = s.ce_strict_transform();
    let effective: Vec<&NegCurveClass> = data.negs.iter().filter(|c| c.is_candidate_curve()).collect();
    CurveTypeRow {
        e: data.e,
        r: data.r,
        proven_range: data.r <= data.e as usize + 2,
        bounds: data.bounds,
        checked: effective.len(),
        exceptions: effective
            .into_iter()
            .filter(|c| c.kind != NegKind::MinusOne && c.cls != ce)
            .map(|c| c.cls.clone())
            .collect(),
    }
}

impl ScanReport {
    pub fn assemble(results: Vec<(LinSysSpec, Result<ScanCell>)>, surfaces: &[SurfaceData]) -> Self {
        let mut rep = ScanReport::default();
        for (spec, res) in results {
            match res {
                Ok(c) => rep.cells.push(c),
                Err(e) => rep.failures.push(ScanFailure { spec, error: e.to_string() }),
            }
        }
        for c in &rep.cells {
            if c.actual_dim >= 0 {
                rep.special_vs_minus_one.record(c);
                if c.spec.b >= c.spec.a * i64::from(c.spec.e) {
                    rep.special_vs_minus_one_b_ge_ae.record(c);
                }
            }
            if c.reduced_proxy && c.ce_fixed == Some(false) {
                let h = &mut rep.non_special_hypothesis;
                h.hypothesis += 1;
                if c.special {
                    h.special += 1;
                } else {
                    h.non_special += 1;
                }
            }
            rep.shadow_violations += usize::from(c.minus_one_special && !c.lemma_shadow);
            rep.v_violations += usize::from(!c.v_preserved);
            rep.below_expected += usize::from(c.actual_dim < c.expected_dim);
            rep.unstable += usize::from(!c.seed_stable);
        }
        rep.curve_types = surfaces.iter().map(curve_type_row).collect();
        rep
    }
}

/// Sequential scan over the whole grid.
pub fn conjecture_scan(grid: &ScanGrid) -> Result<ScanReport> {
    if grid.seeds.is_empty() {
        return Err(Error::InvalidArgument(format!("scan needs seeds, got {:?}", grid.seeds)));
    }
    let surfaces = grid
        .surfaces()
        .into_iter()
        .map(|(e, r)| prepare_surface(grid, e, r))
        .collect::<Result<Vec<_>>>()?;
    let mut results = Vec::new();
    for spec in grid.cells() {
        let data = surfaces
            .iter()
            .find(|d| d.e == spec.e && d.r == spec.r())
            .expect("surface prepared");
        let res = scan_cell(&spec, &grid.seeds, &data.negs);
        results.push((spec, res));
    }
    Ok(ScanReport::assemble(results, &surfaces))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_size() {
        let g = ScanGrid::standard();
        let cells = g.cells();
        // Σ_e 5·(4e+5)·C(e+6, 3)... counted directly
        let mut n = 0;
        for e in 0..=5usize {
            let mut m = 0;
            for r in 0..=e + 3 {
                m += (r + 1) * (r + 2) / 2;
            }
            n += 5 * (4 * e + 5) * m;
        }
        assert_eq!(cells.len(), n);
        assert!(cells.iter().all(|c| c.mults.windows(2).all(|w| w[0] >= w[1])));
    }

    #[test]
    fn empty_grid() {
        let g = ScanGrid { e: [3, 2], ..ScanGrid::standard() };
        let rep = conjecture_scan(&g).unwrap();
        assert!(rep.cells.is_empty() && rep.curve_types.is_empty());
        assert_eq!(rep.special_vs_minus_one, Agreement::default());
    }

    #[test]
    fn small_grid() {
        let g = ScanGrid {
            e: [1, 2],
            r: [0, 3],
            r_max_offset: None,
            a: [0, 2],
            b: [0, 4],
            b_max_slope: None,
            b_max_const: 0,
            m: [1, 2],
            seeds: alloc::vec![1, 2],
        };
        let rep = conjecture_scan(&g).unwrap();
        assert!(rep.failures.is_empty());
        assert_eq!(rep.cells.len(), g.cells().len());
        assert_eq!(rep.below_expected, 0);
        assert_eq!(rep.shadow_violations, 0);
        assert_eq!(rep.v_violations, 0);
        for row in &rep.curve_types {
            assert!(row.exceptions.is_empty(), "{row:?}");
        }
        assert_eq!(conjecture_scan(&g).unwrap(), rep);
    }
}
