//! Edge morphisms, cap with `η`, degree maps and push-forwards, realized as
//! chain maps between total complexes.

use num_bigint::BigInt;
use num_traits::Zero;

use super::group_cohomology::{invariants, norms};
use super::total::{block_map, TotalComplex, Variance};
use crate::error::{Error, Result};
use crate::gcomplex::{CoeffSystem, GChainComplex, GComplex, GMap};
use crate::linalg::{induced_hom, FGAbelianGroup, GroupHom, Homology, IntMatrix, Ring, Subgroup};

/// `H_p(X; G, A(k))`.
pub fn eq_homology(x: &GComplex, coeff: CoeffSystem, p: isize) -> Result<Homology> {
    TotalComplex::homological(x, coeff)?.homology(p)
}

/// `H^p(X; G, A(k))`.
pub fn eq_cohomology(x: &GComplex, coeff: CoeffSystem, p: isize) -> Result<Homology> {
    TotalComplex::cohomological(x, coeff)?.homology(p)
}

/// Projection of total degree `p` onto column 0, i.e. onto `C_p` (or `C^p`).
pub fn edge_chain_map(t: &TotalComplex, p: isize) -> IntMatrix {
    let target = t.chains().rank(p);
    let mut m = IntMatrix::zeros(target, t.rank(p));
    if let Some(b) = t.block(p, 0) {
        for i in 0..b.len {
            m.set(i, b.offset + i, BigInt::from(1));
        }
    }
    m
}

/// Ordinary (co)homology of the underlying chains in degree `p`.
pub fn ordinary(t: &TotalComplex, p: isize) -> Result<Homology> {
    match t.variance() {
        Variance::Homology => t.chains().homology(p),
        Variance::Cohomology => t.chains().cohomology(p),
    }
}

/// `σ_*` (or `σ^*`) on ordinary (co)homology in degree `p`.
pub fn sigma_action(t: &TotalComplex, p: isize, h: &Homology) -> Result<GroupHom> {
    match t.variance() {
        Variance::Homology => t.chains().sigma_on_homology(p, h),
        Variance::Cohomology => t.chains().sigma_on_cohomology(p, h),
    }
}

/// The edge morphism together with the invariant subgroup it lands in.
#[derive(Clone, Debug)]
pub struct EdgeMorphism {
    pub degree: isize,
    pub coeff: CoeffSystem,
    pub hom: GroupHom,
    /// `σ` on the ordinary group.
    pub sigma: GroupHom,
    pub invariants: Subgroup,
}

impl EdgeMorphism {
    pub fn lands_in_invariants(&self) -> bool {
        self.invariants.contains(&self.hom.image())
    }

    pub fn onto_invariants(&self) -> bool {
        self.hom.image().contains(&self.invariants)
    }

    /// Whether the image lies in `(1 + σ)` of the ordinary group, i.e. the
    /// composite with `∪ η^2` vanishes.
    pub fn image_in_norms(&self) -> Result<bool> {
        Ok(norms(&self.sigma)?.contains(&self.hom.image()))
    }

    /// `invariants / image` as a group.
    pub fn cokernel_in_invariants(&self) -> FGAbelianGroup {
        self.invariants
            .quotient_type(&self.hom.image().intersect(&self.invariants))
    }
}

/// `e_p` (or `e^p`) given the already computed groups.
pub fn edge_from(t: &TotalComplex, p: isize, eq: &Homology, ord: &Homology) -> Result<EdgeMorphism> {
    let hom = induced_hom(&edge_chain_map(t, p), eq, ord)?;
    let sigma = sigma_action(t, p, ord)?;
    Ok(EdgeMorphism {
        degree: p,
        coeff: t.coeff(),
        hom,
        invariants: invariants(&sigma)?,
        sigma,
    })
}

/// `e_p : H_p(X; G, A(k)) → H_p(X, A(k))^G`.
pub fn edge_morphism(x: &GComplex, coeff: CoeffSystem, p: isize) -> Result<EdgeMorphism> {
    let t = TotalComplex::homological(x, coeff)?;
    edge_from(&t, p, &t.homology(p)?, &ordinary(&t, p)?)
}

/// `e^p : H^p(X; G, A(k)) → H^p(X, A(k))^G`.
pub fn edge_morphism_cohomology(x: &GComplex, coeff: CoeffSystem, p: isize) -> Result<EdgeMorphism> {
    let t = TotalComplex::cohomological(x, coeff)?;
    edge_from(&t, p, &t.homology(p)?, &ordinary(&t, p)?)
}

/// Cap with `η^r`: column shift `j ↦ j + r` from degree `p` of `src` to
/// degree `p - r` of `tgt`, where `tgt` carries the twist `k + r`.
pub fn eta_chain_map(src: &TotalComplex, tgt: &TotalComplex, p: isize, r: usize) -> IntMatrix {
    let q = p - r as isize;
    block_map(&src.blocks(p), src.rank(p), &tgt.blocks(q), tgt.rank(q), |s, t| {
        (t.column == s.column + r && t.degree == s.degree).then(|| IntMatrix::identity(s.len))
    })
}

/// `s_p : H_p(X; G, A(k)) → H_{p-1}(X; G, A(k+1))`.
pub fn s_map(x: &GComplex, coeff: CoeffSystem, p: isize) -> Result<GroupHom> {
    let src = TotalComplex::homological(x, coeff)?;
    let tgt = TotalComplex::homological(x, coeff.shift(1))?;
    s_from(&src, &tgt, p, &src.homology(p)?, &tgt.homology(p - 1)?)
}

pub fn s_from(
    src: &TotalComplex,
    tgt: &TotalComplex,
    p: isize,
    h_src: &Homology,
    h_tgt: &Homology,
) -> Result<GroupHom> {
    induced_hom(&eta_chain_map(src, tgt, p, 1), h_src, h_tgt)
}

/// Connecting map `H_p(X, A(k)) → H_p(X; G, A(k-1))` of the edge sequence:
/// `z ↦ (-1)^p (1 - σ) z` placed in column 0.
pub fn edge_connecting(
    t_k: &TotalComplex,
    t_km1: &TotalComplex,
    p: isize,
    ord: &Homology,
    tgt: &Homology,
) -> Result<GroupHom> {
    let chains = t_k.chains();
    let n = chains.rank(p);
    let sigma = chains.sigma(p);
    let mut h = if t_k.ring() == Ring::Mod2 {
        IntMatrix::identity(n).add(&sigma)
    } else {
        IntMatrix::identity(n).sub(&sigma)
    };
    if p.rem_euclid(2) == 1 {
        h = h.scale(&BigInt::from(-1));
    }
    let m = match t_km1.block(p, 0) {
        Some(b) => {
            let mut m = IntMatrix::zeros(t_km1.rank(p), n);
            super::total::paste(&mut m, b.offset, 0, &h, 1);
            m
        }
        None => IntMatrix::zeros(t_km1.rank(p), n),
    };
    induced_hom(&m, ord, tgt)
}

/// `deg_G` of a total cycle of degree 0: the sum of its column-0 vertex
/// coefficients.
pub fn equivariant_degree(t: &TotalComplex, z: &[BigInt]) -> Result<BigInt> {
    if t.variance() != Variance::Homology {
        return Err(Error::Precondition("degree maps live on homology".into()));
    }
    if t.coeff() == CoeffSystem::Z1 {
        return Err(Error::Precondition("deg_G needs untwisted coefficients".into()));
    }
    let col0 = t.block_part(0, 0, z);
    let s: BigInt = col0.iter().sum();
    Ok(t.ring().reduce(&s))
}

/// Ordinary degree of a 0-chain: the sum of its coefficients.
pub fn ordinary_degree(chains: &GChainComplex, z: &[BigInt]) -> BigInt {
    let s: BigInt = z.iter().sum();
    chains.ring().reduce(&s)
}

/// `deg_G` evaluated on each generator of `H_0(X; G, A)`.
pub fn degree_on_generators(x: &GComplex, coeff: CoeffSystem) -> Result<Vec<BigInt>> {
    let t = TotalComplex::homological(x, coeff)?;
    let h = t.homology(0)?;
    let g = h.generators();
    (0..g.cols()).map(|j| equivariant_degree(&t, &g.column(j))).collect()
}

/// `f_#` on total degree `p`, blockwise.
pub fn pushforward_chain_map(f: &GMap, src: &TotalComplex, tgt: &TotalComplex, p: isize) -> IntMatrix {
    let coeff = src.coeff();
    let m = block_map(&src.blocks(p), src.rank(p), &tgt.blocks(p), tgt.rank(p), |s, t| {
        (s.column == t.column && s.degree == t.degree).then(|| f.chain_map(s.degree as isize, coeff))
    });
    if coeff.is_mod2() {
        m.map(|v| Ring::Mod2.reduce(v))
    } else {
        m
    }
}

/// `f_* : H_p(X; G, A) → H_p(Y; G, A)`.
pub fn pushforward(f: &GMap, coeff: CoeffSystem, p: isize) -> Result<GroupHom> {
    let src = TotalComplex::homological(f.source(), coeff)?;
    let tgt = TotalComplex::homological(f.target(), coeff)?;
    induced_hom(
        &pushforward_chain_map(f, &src, &tgt, p),
        &src.homology(p)?,
        &tgt.homology(p)?,
    )
}

/// Coordinates of `f_* [z]` for a total cycle `z` of degree `p`.
pub fn pushforward_class(f: &GMap, coeff: CoeffSystem, p: isize, z: &[BigInt]) -> Result<Vec<BigInt>> {
    let src = TotalComplex::homological(f.source(), coeff)?;
    let tgt = TotalComplex::homological(f.target(), coeff)?;
    let h = tgt.homology(p)?;
    let image = h.reduce(pushforward_chain_map(f, &src, &tgt, p).mul_vec(z));
    h.coords(&image)
}

/// Whether a coordinate vector is zero in its group.
pub fn is_zero_class(group: &FGAbelianGroup, coords: &[BigInt]) -> bool {
    group.canonical(coords).iter().all(Zero::is_zero)
}
