//! The two long exact sequences, computed node by node and checked.

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use super::maps::{edge_connecting, edge_from, ordinary, s_from};
use super::total::TotalComplex;
use crate::error::{Error, Result};
use crate::gcomplex::{CoeffSystem, GComplex};
use crate::linalg::{induced_hom, FGAbelianGroup, GroupHom, Homology, IntMatrix};

/// Verification record for one interior node.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NodeCheck {
    pub node: String,
    pub composite_zero: bool,
    pub exact: bool,
}

/// A finite stretch of a long exact sequence: `nodes[i] → nodes[i+1]` via
/// `maps[i]`.
#[derive(Clone, Debug)]
pub struct ExactSequence {
    pub labels: Vec<String>,
    pub groups: Vec<FGAbelianGroup>,
    pub maps: Vec<GroupHom>,
    pub map_labels: Vec<String>,
    pub checks: Vec<NodeCheck>,
}

impl ExactSequence {
    pub fn is_exact(&self) -> bool {
        self.checks.iter().all(|c| c.composite_zero && c.exact)
    }

    fn assemble(nodes: Vec<(String, Homology)>, maps: Vec<(String, GroupHom)>) -> Self {
        let checks = (1..nodes.len().saturating_sub(1))
            .map(|i| {
                let (f, g) = (&maps[i - 1].1, &maps[i].1);
                let composite_zero = g.compose(f).map(|h| h.is_zero()).unwrap_or(false);
                NodeCheck {
                    node: nodes[i].0.clone(),
                    composite_zero,
                    exact: f.image().same_as(&g.kernel()),
                }
            })
            .collect();
        let (labels, groups) = nodes.into_iter().map(|(l, h)| (l, h.group().clone())).unzip();
        let (map_labels, maps) = maps.into_iter().unzip();
        ExactSequence {
            labels,
            groups,
            maps,
            map_labels,
            checks,
        }
    }

    /// `Err(NotExact)` naming the first failing node.
    pub fn require_exact(self) -> Result<Self> {
        match self.checks.iter().find(|c| !(c.composite_zero && c.exact)) {
            Some(c) => Err(Error::NotExact { node: c.node.clone() }),
            None => Ok(self),
        }
    }
}

/// `… → H_p(X;G,A(k)) → H_p(X,A(k)) → H_p(X;G,A(k-1)) → H_{p-1}(X;G,A(k)) → …`
/// for `p` running down through `range`.
pub fn les_edge(x: &GComplex, coeff: CoeffSystem, range: RangeInclusive<isize>) -> Result<ExactSequence> {
    let t_k = TotalComplex::homological(x, coeff)?;
    let t_km1 = TotalComplex::homological(x, coeff.shift(-1))?;
    let (lo, hi) = (*range.start(), *range.end());
    let k = coeff.name();
    let km1 = coeff.shift(-1).name();
    let mut nodes = Vec::new();
    let mut maps = Vec::new();
    let mut top = t_k.homology(hi)?;
    for p in (lo..=hi).rev() {
        let ord = ordinary(&t_k, p)?;
        let mid = t_km1.homology(p)?;
        let below = t_k.homology(p - 1)?;
        maps.push((format!("e_{p}"), edge_from(&t_k, p, &top, &ord)?.hom));
        maps.push((format!("c_{p}"), edge_connecting(&t_k, &t_km1, p, &ord, &mid)?));
        maps.push((format!("s_{p}"), s_from(&t_km1, &t_k, p, &mid, &below)?));
        nodes.push((format!("H_{p}(X;G,{k})"), top));
        nodes.push((format!("H_{p}(X,{k})"), ord));
        nodes.push((format!("H_{p}(X;G,{km1})"), mid));
        top = below;
    }
    nodes.push((format!("H_{}(X;G,{k})", lo - 1), top));
    Ok(ExactSequence::assemble(nodes, maps))
}

/// `… → H_p(X;G,ℤ(k)) →×2 H_p(X;G,ℤ(k)) → H_p(X;G,ℤ/2) →δ H_{p-1}(X;G,ℤ(k)) → …`
pub fn les_coeff(x: &GComplex, coeff: CoeffSystem, range: RangeInclusive<isize>) -> Result<ExactSequence> {
    if coeff.is_mod2() {
        return Err(Error::Precondition(
            "the coefficient sequence needs an integral twist".into(),
        ));
    }
    let tz = TotalComplex::homological(x, coeff)?;
    let t2 = TotalComplex::homological(x, CoeffSystem::Z2)?;
    let (lo, hi) = (*range.start(), *range.end());
    let k = coeff.name();
    let mut nodes = Vec::new();
    let mut maps = Vec::new();
    let mut top = tz.homology(hi)?;
    for p in (lo..=hi).rev() {
        let n = tz.rank(p);
        let h2 = t2.homology(p)?;
        let below = tz.homology(p - 1)?;
        let times2 = induced_hom(&IntMatrix::identity(n).scale(&BigInt::from(2)), &top, &top)?;
        let mod2 = induced_hom(&IntMatrix::identity(n), &top, &h2)?;
        let delta = bockstein_from(&tz, p, &h2, &below)?;
        maps.push((format!("2_{p}"), times2));
        maps.push((format!("r_{p}"), mod2));
        maps.push((format!("delta_{p}"), delta));
        nodes.push((format!("H_{p}(X;G,{k})"), top.clone()));
        nodes.push((format!("H_{p}(X;G,{k})'"), top));
        nodes.push((format!("H_{p}(X;G,Z2)"), h2));
        top = below;
    }
    nodes.push((format!("H_{}(X;G,{k})", lo - 1), top));
    Ok(ExactSequence::assemble(nodes, maps))
}

/// Apply `v ↦ f(v)` to each generator of `src` and read off coordinates in
/// `tgt`.
pub fn hom_from_images(src: &Homology, tgt: &Homology, f: impl Fn(&[BigInt]) -> Vec<BigInt>) -> Result<GroupHom> {
    let g = src.generators();
    let columns = (0..g.cols())
        .map(|j| tgt.coords(&tgt.reduce(f(&g.column(j)))))
        .collect::<Result<Vec<_>>>()?;
    GroupHom::new(
        src.group().clone(),
        tgt.group().clone(),
        IntMatrix::from_columns(tgt.group().ngens(), &columns),
    )
}

/// `D_ℤ(g) / 2` of a `0/1` lift, as a vector.
pub(crate) fn half_boundary(d: &IntMatrix, g: &[BigInt]) -> Vec<BigInt> {
    let two = BigInt::from(2);
    d.mul_vec(g)
        .into_iter()
        .map(|v| {
            let (q, r) = v.div_rem(&two);
            debug_assert!(r == BigInt::from(0), "mod 2 cycle lifts to an even boundary");
            q
        })
        .collect()
}

/// Bockstein `H_p(X;G,ℤ/2) → H_{p-1}(X;G,ℤ(k))` with `tz` the integral total
/// complex of twist `k`.
pub fn bockstein_from(tz: &TotalComplex, p: isize, h2: &Homology, below: &Homology) -> Result<GroupHom> {
    let d = tz.differential(p);
    hom_from_images(h2, below, |g| half_boundary(&d, g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcomplex::builtin;

    #[test]
    fn point_sequences_are_exact() {
        let pt = builtin("point").unwrap();
        for coeff in CoeffSystem::ALL {
            assert!(les_edge(&pt, coeff, -3..=0).unwrap().is_exact(), "{coeff}");
        }
        assert!(les_coeff(&pt, CoeffSystem::Z, -3..=0).unwrap().is_exact());
        assert!(les_coeff(&pt, CoeffSystem::Z1, -3..=0).unwrap().is_exact());
    }

    #[test]
    fn circle_reflection_edge_sequence() {
        let x = builtin("circle-reflection").unwrap();
        let seq = les_edge(&x, CoeffSystem::Z2, -2..=2).unwrap();
        assert!(seq.is_exact());
        assert!(les_edge(&x, CoeffSystem::Z1, -2..=2).unwrap().is_exact());
    }

    #[test]
    fn klein_bottle_bockstein_sees_torsion() {
        let x = builtin("klein-bottle-trivial").unwrap();
        let seq = les_coeff(&x, CoeffSystem::Z, -1..=2).unwrap();
        assert!(seq.is_exact());
    }
}
