use serde::Serialize;

use crate::equivariant::{fundamental_class, TotalComplex};
use crate::error::Result;
use crate::gcomplex::{CoeffSystem, GComplex};
use crate::linalg::FGAbelianGroup;

/// `H^i(X;G,A(l))` next to `H_{d-i}(X;G,A(k-l))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityRow {
    pub i: isize,
    pub l: usize,
    pub cohomology: FGAbelianGroup,
    pub homology: FGAbelianGroup,
}

impl DualityRow {
    pub fn matches(&self) -> bool {
        self.cohomology == self.homology
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    /// `A(k)` carrying the fundamental class.
    pub coeff: CoeffSystem,
    pub dim: usize,
    pub rows: Vec<DualityRow>,
}

impl DualityReport {
    pub fn passes(&self) -> bool {
        self.rows.iter().all(DualityRow::matches)
    }
}

/// Compare isomorphism types on both sides of duality for `0 ≤ i ≤ d + 4`
/// and `l ∈ {0, 1}`. `base` is `Z` or `Z2`.
pub fn poincare_check(x: &GComplex, base: CoeffSystem, d: usize) -> Result<DualityReport> {
    let mu = fundamental_class(x, base, d)?;
    let k = mu.coeff;
    let mut rows = Vec::new();
    for l in 0..2usize {
        let a_l = if k.is_mod2() {
            k
        } else {
            CoeffSystem::integral(l as i64)
        };
        let a_kl = k.shift(-(l as i64));
        let co = TotalComplex::cohomological(x, a_l)?;
        let ho = TotalComplex::homological(x, a_kl)?;
        for i in 0..=(d as isize + 4) {
            rows.push(DualityRow {
                i,
                l,
                cohomology: co.homology(i)?.group().clone(),
                homology: ho.homology(d as isize - i)?.group().clone(),
            });
        }
    }
    Ok(DualityReport { coeff: k, dim: d, rows })
}
