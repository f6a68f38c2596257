use serde::Serialize;

use crate::equivariant::{edge_from, ordinary};
use crate::equivariant::{group_cohomology, EdgeMorphism, FixedSet, TotalComplex};
use crate::error::Result;
use crate::gcomplex::{CoeffSystem, GChainComplex, GComplex};

/// Both sides of one inequality `lhs ≤ rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Inequality {
    pub lhs: usize,
    pub rhs: usize,
}

impl Inequality {
    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs
    }

    pub fn is_equality(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Whether `e_p` with coefficients `coeff` is onto the invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeRow {
    pub coeff: CoeffSystem,
    pub degree: isize,
    pub onto_invariants: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GMReport {
    pub gm1: Inequality,
    pub gm2: Inequality,
    pub gm3: Inequality,
    pub is_gm: bool,
    pub is_zgm: bool,
    pub edges: Vec<EdgeRow>,
}

impl GMReport {
    pub fn inequalities_hold(&self) -> bool {
        self.gm1.holds() && self.gm2.holds() && self.gm3.holds()
    }

    /// `is_gm` agrees with equality in the first inequality.
    pub fn gm_consistent(&self) -> bool {
        self.is_gm == self.gm1.is_equality()
    }

    /// `is_zgm` agrees with equality in the integral pair.
    pub fn zgm_consistent(&self) -> bool {
        self.is_zgm == (self.gm2.is_equality() && self.gm3.is_equality())
    }
}

/// `Σ_r dim H^{p(r)}(G, H_r(X, A))`.
fn column_sum(chains: &GChainComplex, dim: isize, p_of: impl Fn(isize) -> usize) -> Result<usize> {
    let mut total = 0;
    for r in 0..=dim {
        let h = chains.homology(r)?;
        let sigma = chains.sigma_on_homology(r, &h)?;
        let g = group_cohomology(&sigma, p_of(r))?;
        debug_assert!(g.is_finite());
        total += g.ngens();
    }
    Ok(total)
}

/// Edge morphisms `e_p` for `0 ≤ p ≤ dim X`.
pub fn edge_table(x: &GComplex, coeff: CoeffSystem) -> Result<Vec<EdgeMorphism>> {
    let t = TotalComplex::homological(x, coeff)?;
    (0..=x.dim())
        .map(|p| edge_from(&t, p, &t.homology(p)?, &ordinary(&t, p)?))
        .collect()
}

/// The three inequalities and the edge-surjectivity decision.
///
/// The integral pair compares `H_even(X^G)` with `Σ_r dim H^{2+r}(G, H_r)`
/// and `H_odd(X^G)` with `Σ_r dim H^{1+r}(G, H_r)` (exponents read mod 2).
pub fn gm_report(x: &GComplex) -> Result<GMReport> {
    let fixed = FixedSet::new(x)?;
    let dim = x.dim();
    let z2 = GChainComplex::new(x, CoeffSystem::Z2)?;
    let z = GChainComplex::new(x, CoeffSystem::Z)?;
    let gm1 = Inequality {
        lhs: fixed.total_dim(),
        rhs: column_sum(&z2, dim, |_| 1)?,
    };
    let gm2 = Inequality {
        lhs: fixed.parity_dim(false),
        rhs: column_sum(&z, dim, |r| if r % 2 == 0 { 2 } else { 1 })?,
    };
    let gm3 = Inequality {
        lhs: fixed.parity_dim(true),
        rhs: column_sum(&z, dim, |r| if r % 2 == 0 { 1 } else { 2 })?,
    };
    let mut edges = Vec::new();
    for coeff in CoeffSystem::ALL {
        for e in edge_table(x, coeff)? {
            edges.push(EdgeRow {
                coeff,
                degree: e.degree,
                onto_invariants: e.onto_invariants(),
            });
        }
    }
    let all_onto = |c: CoeffSystem| edges.iter().filter(|r| r.coeff == c).all(|r| r.onto_invariants);
    let is_gm = all_onto(CoeffSystem::Z2);
    let is_zgm = all_onto(CoeffSystem::Z) && all_onto(CoeffSystem::Z1);
    Ok(GMReport {
        gm1,
        gm2,
        gm3,
        is_gm,
        is_zgm,
        edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcomplex::builtin;

    #[test]
    fn circle_reflection_is_maximal() {
        let r = gm_report(&builtin("circle-reflection").unwrap()).unwrap();
        assert_eq!(r.gm1, Inequality { lhs: 2, rhs: 2 });
        assert!(r.is_gm);
        assert!(r.gm_consistent() && r.zgm_consistent());
    }

    #[test]
    fn antipodal_sphere_is_not() {
        let r = gm_report(&builtin("sphere-octahedron-antipodal").unwrap()).unwrap();
        assert_eq!(r.gm1, Inequality { lhs: 0, rhs: 2 });
        assert!(!r.is_gm);
    }
}
