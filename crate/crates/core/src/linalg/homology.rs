//! Homology of a single spot `C_in --d_in--> C --d_out--> C_out` of a chain
//! complex, presented with explicit generators and a coordinate map.

use num_bigint::BigInt;

use super::group::{FGAbelianGroup, GroupHom};
use super::lattice::{kernel_basis, Solver};
use super::matrix::{IntMatrix, Matrix};
use super::ring::{Gf2, Ring, Scalar};
use super::snf::smith_normal_form;
use crate::error::{Error, Result};

/// `ker d_out / im d_in` over a single coefficient ring.
#[derive(Clone, Debug)]
struct SubQuotient<R: Scalar> {
    d_in: Matrix<R>,
    d_out: Matrix<R>,
    cycles: Matrix<R>,
    cycle_solver: Solver<R>,
    boundary_solver: Solver<R>,
    /// Change of basis on cycle coordinates.
    u: Matrix<R>,
    kept: Vec<usize>,
    /// Order of each kept coordinate; zero for free ones.
    factors: Vec<R>,
    generators: Matrix<R>,
}

impl<R: Scalar> SubQuotient<R> {
    fn new(d_in: &Matrix<R>, d_out: &Matrix<R>) -> Result<Self> {
        let n = d_out.cols();
        if d_in.rows() != n {
            return Err(Error::Shape(format!(
                "incoming differential has {} rows, outgoing has {} columns",
                d_in.rows(),
                n
            )));
        }
        if !d_out.mul(d_in).is_zero() {
            return Err(Error::NotAComplex);
        }
        let cycles = kernel_basis(d_out);
        let c = cycles.cols();
        let cycle_solver = Solver::new(&cycles);
        let mut coeffs = Vec::with_capacity(d_in.cols());
        for j in 0..d_in.cols() {
            let b = d_in.column(j);
            let x = cycle_solver
                .solve(&b)
                .ok_or_else(|| Error::Internal("boundary outside the cycle lattice".into()))?;
            coeffs.push(x);
        }
        let a = Matrix::from_columns(c, &coeffs);
        let snf = smith_normal_form(&a);
        let r = snf.rank();
        let mut kept = Vec::new();
        let mut factors = Vec::new();
        for (i, d) in snf.diagonal.iter().enumerate() {
            if !d.is_unit() {
                kept.push(i);
                factors.push(d.clone());
            }
        }
        for i in r..c {
            kept.push(i);
            factors.push(R::zero());
        }
        let generators = cycles.mul(&snf.u_inv.select_columns(&kept));
        Ok(SubQuotient {
            d_in: d_in.clone(),
            d_out: d_out.clone(),
            boundary_solver: Solver::new(d_in),
            cycles,
            cycle_solver,
            u: snf.u,
            kept,
            factors,
            generators,
        })
    }

    fn coords(&self, z: &[R]) -> Result<Vec<R>> {
        if z.len() != self.d_out.cols() {
            return Err(Error::Shape(format!(
                "chain of length {} for ambient rank {}",
                z.len(),
                self.d_out.cols()
            )));
        }
        if self.d_out.mul_vec(z).iter().any(|v| !v.is_zero()) {
            return Err(Error::NotACycle);
        }
        let c = self
            .cycle_solver
            .solve(z)
            .ok_or_else(|| Error::Internal("cycle outside the saturated kernel".into()))?;
        let y = self.u.mul_vec(&c);
        Ok(self
            .kept
            .iter()
            .zip(&self.factors)
            .map(|(&i, d)| if d.is_zero() { y[i].clone() } else { y[i].residue(d) })
            .collect())
    }

    fn is_boundary(&self, z: &[R]) -> bool {
        self.boundary_solver.contains(z)
    }
}

#[derive(Clone, Debug)]
enum Inner {
    Int(SubQuotient<BigInt>),
    Mod2(SubQuotient<Gf2>),
}

/// A computed homology group together with everything needed to map
/// cycles to coordinates on its generators.
///
/// Chains are always exchanged as integer vectors; over `ℤ/2` they are
/// reduced to `0/1` entries on the way in and out.
#[derive(Clone, Debug)]
pub struct Homology {
    ring: Ring,
    ambient: usize,
    inner: Inner,
    group: FGAbelianGroup,
}

impl Homology {
    pub fn compute(ring: Ring, d_in: &IntMatrix, d_out: &IntMatrix) -> Result<Self> {
        let ambient = d_out.cols();
        let (inner, group) = match ring {
            Ring::Integers => {
                let sq = SubQuotient::new(d_in, d_out)?;
                let torsion: Vec<BigInt> = sq.factors.iter().filter(|d| !d.is_zero()).cloned().collect();
                let free = sq.factors.len() - torsion.len();
                let g = FGAbelianGroup::with_generators(free, torsion, sq.generators.clone());
                (Inner::Int(sq), g)
            }
            Ring::Mod2 => {
                let sq = SubQuotient::new(&d_in.to_gf2(), &d_out.to_gf2())?;
                let dim = sq.factors.len();
                let g = FGAbelianGroup::with_generators(0, vec![BigInt::from(2); dim], sq.generators.to_int());
                (Inner::Mod2(sq), g)
            }
        };
        Ok(Homology {
            ring,
            ambient,
            inner,
            group,
        })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// Rank of the chain group the cycles live in.
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn group(&self) -> &FGAbelianGroup {
        &self.group
    }

    /// Generator lifts, one cycle per column.
    pub fn generators(&self) -> IntMatrix {
        self.group
            .generators()
            .cloned()
            .expect("homology groups carry generators")
    }

    pub fn generator(&self, i: usize) -> Vec<BigInt> {
        self.generators().column(i)
    }

    /// Coordinates of the class of the cycle `z` on the generators.
    pub fn coords(&self, z: &[BigInt]) -> Result<Vec<BigInt>> {
        match &self.inner {
            Inner::Int(sq) => sq.coords(z),
            Inner::Mod2(sq) => {
                let v: Vec<Gf2> = z.iter().map(Gf2::from_int).collect();
                Ok(sq.coords(&v)?.iter().map(Scalar::to_int).collect())
            }
        }
    }

    pub fn is_cycle(&self, z: &[BigInt]) -> bool {
        match &self.inner {
            Inner::Int(sq) => sq.d_out.mul_vec(z).iter().all(Scalar::is_zero),
            Inner::Mod2(sq) => {
                let v: Vec<Gf2> = z.iter().map(Gf2::from_int).collect();
                sq.d_out.mul_vec(&v).iter().all(Scalar::is_zero)
            }
        }
    }

    pub fn is_boundary(&self, z: &[BigInt]) -> bool {
        match &self.inner {
            Inner::Int(sq) => sq.is_boundary(z),
            Inner::Mod2(sq) => {
                let v: Vec<Gf2> = z.iter().map(Gf2::from_int).collect();
                sq.is_boundary(&v)
            }
        }
    }

    /// A cycle representing the class with the given coordinates.
    pub fn lift(&self, coords: &[BigInt]) -> Vec<BigInt> {
        let v = self.generators().mul_vec(coords);
        self.reduce(v)
    }

    /// Bring an integer chain into canonical form for this ring.
    pub fn reduce(&self, v: Vec<BigInt>) -> Vec<BigInt> {
        match self.ring {
            Ring::Integers => v,
            Ring::Mod2 => v.iter().map(|x| self.ring.reduce(x)).collect(),
        }
    }

    /// Basis of the cycle lattice (columns).
    pub fn cycle_basis(&self) -> IntMatrix {
        match &self.inner {
            Inner::Int(sq) => sq.cycles.clone(),
            Inner::Mod2(sq) => sq.cycles.to_int(),
        }
    }
}

/// `ker d_out / im d_in` over the integers.
pub fn homology_at(d_in: &IntMatrix, d_out: &IntMatrix) -> Result<FGAbelianGroup> {
    Ok(Homology::compute(Ring::Integers, d_in, d_out)?.group)
}

/// The map induced on homology by a chain map `src ambient → tgt ambient`.
///
/// Fails with [`Error::NotACycle`] when a cycle of the source is not sent to
/// a cycle, and with [`Error::NotAChainMap`] when a boundary of the source is
/// not sent to a boundary.
pub fn induced_hom(chain_map: &IntMatrix, src: &Homology, tgt: &Homology) -> Result<GroupHom> {
    if chain_map.cols() != src.ambient || chain_map.rows() != tgt.ambient {
        return Err(Error::Shape(format!(
            "chain map is {}x{}, homologies need {}x{}",
            chain_map.rows(),
            chain_map.cols(),
            tgt.ambient,
            src.ambient
        )));
    }
    let cycles = src.cycle_basis();
    for j in 0..cycles.cols() {
        let image = tgt.reduce(chain_map.mul_vec(&cycles.column(j)));
        if !tgt.is_cycle(&image) {
            return Err(Error::NotACycle);
        }
    }
    for b in boundary_columns(src) {
        let image = tgt.reduce(chain_map.mul_vec(&b));
        if !tgt.is_boundary(&image) {
            return Err(Error::NotAChainMap);
        }
    }
    let gens = src.generators();
    let mut cols = Vec::with_capacity(gens.cols());
    for j in 0..gens.cols() {
        let image = tgt.reduce(chain_map.mul_vec(&gens.column(j)));
        cols.push(tgt.coords(&image)?);
    }
    let matrix = IntMatrix::from_columns(tgt.group.ngens(), &cols);
    GroupHom::new(src.group.clone(), tgt.group.clone(), matrix)
}

fn boundary_columns(h: &Homology) -> Vec<Vec<BigInt>> {
    match &h.inner {
        Inner::Int(sq) => sq.d_in.columns(),
        Inner::Mod2(sq) => sq.d_in.to_int().columns(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle_d1() -> IntMatrix {
        // vertices 0..3, edges 01, 03, 12, 23
        IntMatrix::from_i64(&[&[-1, -1, 0, 0], &[1, 0, -1, 0], &[0, 0, 1, -1], &[0, 1, 0, 1]])
    }

    #[test]
    fn zero_differentials() {
        let g = homology_at(&IntMatrix::zeros(2, 0), &IntMatrix::zeros(0, 2)).unwrap();
        assert_eq!(g, FGAbelianGroup::free(2));
    }

    #[test]
    fn multiplication_by_two() {
        let g = homology_at(&IntMatrix::from_i64(&[&[2]]), &IntMatrix::zeros(0, 1)).unwrap();
        assert_eq!(g, FGAbelianGroup::elementary(1));
    }

    #[test]
    fn circle_first_homology() {
        let g = homology_at(&IntMatrix::zeros(4, 0), &circle_d1()).unwrap();
        assert_eq!(g, FGAbelianGroup::free(1));
    }

    #[test]
    fn rejects_non_complex() {
        let r = homology_at(&IntMatrix::from_i64(&[&[1]]), &IntMatrix::from_i64(&[&[1]]));
        assert!(matches!(r, Err(Error::NotAComplex)));
    }

    #[test]
    fn mod_two_counts_dimension() {
        let h = Homology::compute(Ring::Mod2, &IntMatrix::from_i64(&[&[2]]), &IntMatrix::zeros(0, 1)).unwrap();
        assert_eq!(h.group().dim_f2(), Some(1));
    }

    #[test]
    fn induced_times_two_on_circle() {
        let h = Homology::compute(Ring::Integers, &IntMatrix::zeros(4, 0), &circle_d1()).unwrap();
        let two = IntMatrix::identity(4).scale(&BigInt::from(2));
        let f = induced_hom(&two, &h, &h).unwrap();
        assert_eq!(f.matrix, IntMatrix::from_i64(&[&[2]]));
        let id = induced_hom(&IntMatrix::identity(4), &h, &h).unwrap();
        assert_eq!(id.matrix, IntMatrix::identity(1));
        let zero = induced_hom(&IntMatrix::zeros(4, 4), &h, &h).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn induced_rejects_non_cycle_images() {
        let h1 = Homology::compute(Ring::Integers, &IntMatrix::zeros(4, 0), &circle_d1()).unwrap();
        let mut m = IntMatrix::zeros(4, 4);
        m.set(0, 0, BigInt::from(1));
        assert!(matches!(induced_hom(&m, &h1, &h1), Err(Error::NotACycle)));
    }

    #[test]
    fn coords_are_lift_independent() {
        // Z/2 from Z --2--> Z; class of 1 and of 3 agree.
        let h = Homology::compute(Ring::Integers, &IntMatrix::from_i64(&[&[2]]), &IntMatrix::zeros(0, 1)).unwrap();
        let a = h.coords(&[BigInt::from(1)]).unwrap();
        let b = h.coords(&[BigInt::from(3)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(h.coords(&[BigInt::from(4)]).unwrap(), vec![BigInt::from(0)]);
    }
}
