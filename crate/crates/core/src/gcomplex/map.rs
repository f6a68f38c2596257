use num_bigint::BigInt;

use super::builtin::builtin;
use super::chain::{sort_with_sign, CoeffSystem};
use super::complex::GComplex;
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// An equivariant simplicial map, given on vertices.
#[derive(Clone, Debug)]
pub struct GMap {
    source: GComplex,
    target: GComplex,
    vertex_map: Vec<usize>,
}

impl GMap {
    pub fn new(source: GComplex, target: GComplex, vertex_map: Vec<usize>) -> Result<Self> {
        source.validate()?;
        target.validate()?;
        if vertex_map.len() != source.vertex_count() {
            return Err(Error::Shape(format!(
                "vertex map has {} entries for {} vertices",
                vertex_map.len(),
                source.vertex_count()
            )));
        }
        if let Some(&w) = vertex_map.iter().find(|&&w| w >= target.vertex_count()) {
            return Err(Error::Shape(format!(
                "vertex map hits {w}, target has {} vertices",
                target.vertex_count()
            )));
        }
        for v in 0..source.vertex_count() {
            if vertex_map[source.involution()[v]] != target.involution()[vertex_map[v]] {
                return Err(Error::Precondition(format!(
                    "vertex map is not equivariant at vertex {v}"
                )));
            }
        }
        for q in 0..=source.dim().max(0) as usize {
            for s in source.simplices(q) {
                let mut image: Vec<usize> = s.iter().map(|&v| vertex_map[v]).collect();
                image.sort_unstable();
                image.dedup();
                if !target.contains(&image) {
                    return Err(Error::Precondition(format!("image of simplex {s:?} is not a simplex")));
                }
            }
        }
        Ok(GMap {
            source,
            target,
            vertex_map,
        })
    }

    pub fn identity(x: &GComplex) -> Result<Self> {
        GMap::new(x.clone(), x.clone(), (0..x.vertex_count()).collect())
    }

    /// Inclusion of the fixed subcomplex.
    pub fn fixed_inclusion(x: &GComplex) -> Result<Self> {
        let (sub, map) = x.fixed_subcomplex_with_map();
        GMap::new(sub, x.clone(), map)
    }

    /// The constant map to a point.
    pub fn to_point(x: &GComplex) -> Result<Self> {
        let pt = GComplex::new(1, &[], &[0])?;
        GMap::new(x.clone(), pt, vec![0; x.vertex_count()])
    }

    /// Simplicial approximation of the identity `sd X → X`: each barycenter
    /// goes to a vertex of its simplex, chosen equivariantly.
    pub fn subdivision_retraction(x: &GComplex) -> Result<Self> {
        let sd = x.barycentric_subdivide();
        let mut order = Vec::new();
        for q in 0..=x.dim().max(0) as usize {
            order.extend(x.simplices(q).iter().cloned());
        }
        let inv = x.involution();
        let map = order
            .iter()
            .map(|s| {
                let image = x.apply_sorted(s);
                if image < *s {
                    inv[image[0]]
                } else {
                    s[0]
                }
            })
            .collect();
        GMap::new(sd, x.clone(), map)
    }

    /// The restriction `X^G → Y^G`.
    pub fn on_fixed_sets(&self) -> Result<Self> {
        let (sub_x, into_x) = self.source.fixed_subcomplex_with_map();
        let (sub_y, into_y) = self.target.fixed_subcomplex_with_map();
        let mut back = vec![usize::MAX; self.target.vertex_count()];
        for (i, &v) in into_y.iter().enumerate() {
            back[v] = i;
        }
        let map = into_x.iter().map(|&v| back[self.vertex_map[v]]).collect();
        GMap::new(sub_x, sub_y, map)
    }

    pub fn source(&self) -> &GComplex {
        &self.source
    }

    pub fn target(&self) -> &GComplex {
        &self.target
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    /// `f_# : C_q(source) → C_q(target)`; collapsed simplices go to zero.
    pub fn chain_map(&self, q: isize, coeff: CoeffSystem) -> IntMatrix {
        let (rows, cols) = if q < 0 {
            (0, 0)
        } else {
            (self.target.count(q as usize), self.source.count(q as usize))
        };
        let mut m = IntMatrix::zeros(rows, cols);
        if q < 0 {
            return m;
        }
        for (j, s) in self.source.simplices(q as usize).iter().enumerate() {
            let image: Vec<usize> = s.iter().map(|&v| self.vertex_map[v]).collect();
            let (sorted, sign) = sort_with_sign(&image);
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                continue;
            }
            let i = self.target.index_of(&sorted).expect("checked simplicial");
            let v = if coeff.is_mod2() { 1 } else { sign };
            m.set(i, j, BigInt::from(v));
        }
        m
    }
}

/// Named maps used by the naturality checks.
pub fn gmap_catalog() -> Vec<(String, GMap)> {
    let mut out = Vec::new();
    for name in ["circle-reflection", "sphere-octahedron-reflection", "torus-reflection"] {
        let x = builtin(name).expect("catalogue");
        out.push((format!("identity on {name}"), GMap::identity(&x).expect("identity")));
        out.push((
            format!("fixed-set inclusion into {name}"),
            GMap::fixed_inclusion(&x).expect("inclusion"),
        ));
    }
    for name in [
        "circle-antipodal",
        "circle-reflection",
        "sphere-octahedron-reflection",
        "free-pair",
    ] {
        let x = builtin(name).expect("catalogue");
        out.push((
            format!("constant map {name} -> point"),
            GMap::to_point(&x).expect("constant"),
        ));
    }
    for name in ["circle-reflection", "circle-antipodal", "sphere-octahedron-reflection"] {
        let x = builtin(name).expect("catalogue");
        out.push((
            format!("subdivision retraction of {name}"),
            GMap::subdivision_retraction(&x).expect("retraction"),
        ));
    }
    out.push((
        "equator inclusion into sphere-octahedron-antipodal".to_string(),
        equator_inclusion().expect("equator"),
    ));
    out
}

/// `circle-antipodal` as the equator `x, y, -x, -y` of the antipodal octahedron.
pub fn equator_inclusion() -> Result<GMap> {
    GMap::new(
        builtin("circle-antipodal")?,
        builtin("sphere-octahedron-antipodal")?,
        vec![0, 2, 1, 3],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_maps_are_valid() {
        assert!(gmap_catalog().len() >= 12);
    }

    #[test]
    fn non_equivariant_rejected() {
        let x = builtin("circle-antipodal").unwrap();
        let r = GMap::new(x.clone(), x, vec![1, 1, 2, 3]);
        assert!(r.is_err());
    }

    #[test]
    fn chain_maps_commute_with_boundary() {
        for (name, f) in gmap_catalog() {
            for coeff in CoeffSystem::ALL {
                let src = crate::gcomplex::GChainComplex::new(f.source(), coeff).unwrap();
                let tgt = crate::gcomplex::GChainComplex::new(f.target(), coeff).unwrap();
                for q in 0..=f.source().dim() {
                    let lhs = tgt.boundary(q).mul(&f.chain_map(q, coeff));
                    let rhs = f.chain_map(q - 1, coeff).mul(&src.boundary(q));
                    let diff = lhs.sub(&rhs);
                    let ok = if coeff.is_mod2() {
                        diff.map(|v| crate::linalg::Ring::Mod2.reduce(v)).is_zero()
                    } else {
                        diff.is_zero()
                    };
                    assert!(ok, "{name} degree {q} {coeff}");
                    let lhs = tgt.sigma(q).mul(&f.chain_map(q, coeff));
                    let rhs = f.chain_map(q, coeff).mul(&src.sigma(q));
                    assert_eq!(lhs, rhs, "{name} sigma degree {q} {coeff}");
                }
            }
        }
    }
}
