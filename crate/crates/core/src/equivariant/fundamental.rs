use num_bigint::BigInt;
use num_traits::One;

use super::maps::{edge_from, ordinary, pushforward_chain_map, EdgeMorphism};
use super::total::TotalComplex;
use crate::error::{Error, Result};
use crate::gcomplex::{CoeffSystem, GComplex, GMap};
use crate::linalg::{FGAbelianGroup, Homology};

/// `μ_X ∈ H_d(X; G, A(k))` for a closed `A`-oriented `G`-manifold.
#[derive(Clone, Debug)]
pub struct FundamentalClass {
    /// `A(k)` with the twist that makes the orientation invariant.
    pub coeff: CoeffSystem,
    pub dim: usize,
    /// Total cycle in column 0.
    pub cycle: Vec<BigInt>,
    pub coords: Vec<BigInt>,
    pub group: Homology,
    pub edge: EdgeMorphism,
}

impl FundamentalClass {
    /// Whether `e_d` is an isomorphism onto `H_d(X, A(k))^G`.
    pub fn edge_is_iso_onto_invariants(&self) -> bool {
        self.edge.hom.is_injective() && self.edge.hom.image().same_as(&self.edge.invariants)
    }

    /// Whether `e_d(μ)` generates the invariants.
    pub fn edge_image_generates(&self) -> bool {
        let image = self.edge.hom.apply(&self.coords);
        let sub = crate::linalg::Subgroup::generated_by(
            self.edge.hom.target.clone(),
            crate::linalg::IntMatrix::from_columns(self.edge.hom.target.ngens(), &[image]),
        );
        sub.same_as(&self.edge.invariants)
    }
}

/// Find `μ_X`: `A` is `Z` or `Z2` (a `Z1` request is read as `Z`), and the
/// twist is detected from how `σ` acts on `H_d(X, A)`.
pub fn fundamental_class(x: &GComplex, coeff: CoeffSystem, d: usize) -> Result<FundamentalClass> {
    let base = if coeff.is_mod2() {
        CoeffSystem::Z2
    } else {
        CoeffSystem::Z
    };
    let plain = TotalComplex::homological(x, base)?;
    let top = plain.chains().homology(d as isize)?;
    let expected = if base.is_mod2() {
        FGAbelianGroup::elementary(1)
    } else {
        FGAbelianGroup::free(1)
    };
    if *top.group() != expected || x.dim() != d as isize {
        return Err(Error::Precondition(format!(
            "H_{d}(X, {base}) is {}, not a closed oriented {d}-manifold",
            top.group()
        )));
    }
    let coeff = if base.is_mod2() {
        base
    } else {
        let sigma = plain.chains().sigma_on_homology(d as isize, &top)?;
        if sigma.matrix.get(0, 0).is_one() {
            CoeffSystem::Z
        } else {
            CoeffSystem::Z1
        }
    };
    let t = TotalComplex::homological(x, coeff)?;
    let p = d as isize;
    let z = top.generator(0);
    let cycle = t.embed(p, 0, &z).expect("column 0 exists in the top degree");
    let group = t.homology(p)?;
    let coords = group.coords(&cycle)?;
    let edge = edge_from(&t, p, &group, &ordinary(&t, p)?)?;
    Ok(FundamentalClass {
        coeff,
        dim: d,
        cycle,
        coords,
        group,
        edge,
    })
}

/// `j_* μ_V` for the inclusion `j : V → X` of a sub-`G`-manifold, as
/// coordinates in `H_d(X; G, A(k))` with the twist of `μ_V`.
pub fn represented_class(j: &GMap, coeff: CoeffSystem) -> Result<(CoeffSystem, Vec<BigInt>)> {
    let v = j.source();
    let mu = fundamental_class(v, coeff, v.dim().max(0) as usize)?;
    let src = TotalComplex::homological(v, mu.coeff)?;
    let tgt = TotalComplex::homological(j.target(), mu.coeff)?;
    let p = mu.dim as isize;
    let h = tgt.homology(p)?;
    let image = h.reduce(pushforward_chain_map(j, &src, &tgt, p).mul_vec(&mu.cycle));
    Ok((mu.coeff, h.coords(&image)?))
}
