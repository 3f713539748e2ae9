//! Sections of `aC_e + bf` on `F_e`.
//!
//! Chart: remove `C_e` and one fiber. What is left is an affine plane with
//! coordinates `(u, v)`, `u` along the fibers and `v` on the base. A section
//! of level `k` and fiber degree `j` restricts to the monomial `u^k v^j`,
//! with `0 <= k <= a` and `0 <= j <= b - k·e`. Vanishing on `C_e` (which sits
//! at `u = ∞`) means the top level `k = a` is absent.

use alloc::vec::Vec;
use core::ops::Range;

use crate::lattice::SurfaceModel;
use crate::{DivClass, Error, Result};

/// `dim H^0(F_e, aC_e + bf)`.
pub fn h0_fe(a: i64, b: i64, e: u32) -> u64 {
    if a < 0 || b < 0 {
        return 0;
    }
    let (a, b, e) = (a as i128, b as i128, e as i128);
    // levels k = 0..=top contribute b - ke + 1 each
    let top = if e == 0 { a } else { a.min(b / e) };
    let n = (top + 1) * (b + 1) - e * top * (top + 1) / 2;
    u64::try_from(n).expect("h0 exceeds u64")
}

/// `(D² - K·D)/2`, the Riemann–Roch bound `χ(D) - 1`.
///
/// Callers treat it as a lower bound for `h^0 - 1`, which assumes `h^2 = 0`.
pub fn rr_lower_bound(d: &DivClass, s: &SurfaceModel) -> Result<i64> {
    let n = s
        .square(d)?
        .checked_sub(s.k_dot(d)?)
        .ok_or(Error::Overflow)?;
    if n % 2 != 0 {
        return Err(Error::Invariant(alloc::format!("D^2 - K.D = {n} is odd for {d}")));
    }
    Ok(n / 2)
}

/// `Σ C(m_i + 1, 2)`: linear conditions imposed by points of multiplicity `m_i`.
pub fn conditions_count(mults: &[i64]) -> Result<u64> {
    let mut total: u64 = 0;
    for &m in mults {
        if m < 0 {
            return Err(Error::InvalidArgument(alloc::format!("negative multiplicity {m}")));
        }
        let m = m as u64;
        let c = m
            .checked_mul(m + 1)
            .map(|x| x / 2)
            .ok_or(Error::Overflow)?;
        total = total.checked_add(c).ok_or(Error::Overflow)?;
    }
    Ok(total)
}

/// Monomial basis of `H^0(aC_e + bf)` in the chart described above.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionBasis {
    pub e: u32,
    pub a: i64,
    pub b: i64,
    /// `(k, j)` pairs ordered by level, then fiber degree.
    pub elements: Vec<(u32, u32)>,
}

impl SectionBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Index range of the level-`k` monomials.
    pub fn level(&self, k: u32) -> Range<usize> {
        let start = self.elements.partition_point(|&(l, _)| l < k);
        let end = self.elements.partition_point(|&(l, _)| l <= k);
        start..end
    }

    /// Top level `k = a`; these are the sections not vanishing on `C_e`.
    pub fn top_level(&self) -> Range<usize> {
        if self.a < 0 {
            return 0..0;
        }
        self.level(self.a as u32)
    }
}

pub fn section_basis(a: i64, b: i64, e: u32) -> Result<SectionBasis> {
    if a < 0 {
        return Err(Error::InvalidArgument(alloc::format!("negative H-coefficient {a}")));
    }
    let mut elements = Vec::new();
    for k in 0..=a {
        let top = b - k * e as i64;
        if top < 0 {
            break;
        }
        for j in 0..=top {
            elements.push((k as u32, j as u32));
        }
    }
    Ok(SectionBasis { e, a, b, elements })
}
