//! Localization to the fixed set: `ρ` on equivariant homology and `β` on
//! equivariant cohomology, both landing in `ℤ/2` (co)homology of `X^G`.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::les::{half_boundary, hom_from_images};
use super::maps::pushforward_chain_map;
use super::total::{block_map, TotalComplex};
use crate::error::{Error, Result};
use crate::gcomplex::{CoeffSystem, GChainComplex, GComplex, GMap};
use crate::linalg::{FGAbelianGroup, Gf2, GroupHom, Homology, IntMatrix, Ring, Solver, Subgroup};

/// An element of `⊕_q H_q(X^G, ℤ/2)` (or of cohomology), one coordinate
/// vector per degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GradedClassVector {
    pub components: Vec<Vec<u8>>,
}

impl GradedClassVector {
    pub fn zero(dims: &[usize]) -> Self {
        GradedClassVector {
            components: dims.iter().map(|&d| vec![0; d]).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().flatten().all(|&c| c == 0)
    }

    pub fn degree(&self, q: usize) -> &[u8] {
        self.components.get(q).map_or(&[], Vec::as_slice)
    }

    fn parity(&self, odd: bool) -> Self {
        let components = self
            .components
            .iter()
            .enumerate()
            .map(|(q, c)| {
                if (q % 2 == 1) == odd {
                    c.clone()
                } else {
                    vec![0; c.len()]
                }
            })
            .collect();
        GradedClassVector { components }
    }

    pub fn even_part(&self) -> Self {
        self.parity(false)
    }

    pub fn odd_part(&self) -> Self {
        self.parity(true)
    }

    pub fn add(&self, other: &Self) -> Self {
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x ^ y).collect())
            .collect();
        GradedClassVector { components }
    }

    /// All coordinates, degree by degree.
    pub fn flatten(&self) -> Vec<BigInt> {
        self.components.iter().flatten().map(|&c| BigInt::from(c)).collect()
    }
}

fn bits(v: &[BigInt]) -> Vec<u8> {
    v.iter().map(|x| u8::from(!Ring::Mod2.reduce(x).is_zero())).collect()
}

/// `X^G` with its `ℤ/2` homology and cohomology in every degree.
#[derive(Clone, Debug)]
pub struct FixedSet {
    pub inclusion: GMap,
    pub mod2: GChainComplex,
    pub integral: GChainComplex,
    pub homology: Vec<Homology>,
    pub cohomology: Vec<Homology>,
}

impl FixedSet {
    pub fn new(x: &GComplex) -> Result<Self> {
        let inclusion = GMap::fixed_inclusion(x)?;
        let sub = inclusion.source().clone();
        let mod2 = GChainComplex::new(&sub, CoeffSystem::Z2)?;
        let integral = GChainComplex::new(&sub, CoeffSystem::Z)?;
        let top = sub.dim();
        let homology = (0..=top).map(|q| mod2.homology(q)).collect::<Result<_>>()?;
        let cohomology = (0..=top).map(|q| mod2.cohomology(q)).collect::<Result<_>>()?;
        Ok(FixedSet {
            inclusion,
            mod2,
            integral,
            homology,
            cohomology,
        })
    }

    pub fn complex(&self) -> &GComplex {
        self.inclusion.source()
    }

    pub fn is_empty(&self) -> bool {
        self.complex().is_empty()
    }

    /// `dim H_q(X^G, ℤ/2)` for each `q`.
    pub fn dims(&self) -> Vec<usize> {
        self.homology.iter().map(|h| h.group().ngens()).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims().iter().sum()
    }

    /// Dimension of the even (`odd = false`) or odd part.
    pub fn parity_dim(&self, odd: bool) -> usize {
        self.dims()
            .iter()
            .enumerate()
            .filter(|(q, _)| (q % 2 == 1) == odd)
            .map(|(_, d)| d)
            .sum()
    }

    /// Bockstein `H_{q+1}(X^G, ℤ/2) → H_q(X^G, ℤ/2)`.
    pub fn bockstein(&self, q: usize) -> Result<GroupHom> {
        let d = self.integral.boundary(q as isize + 1);
        match (self.homology.get(q + 1), self.homology.get(q)) {
            (Some(src), Some(tgt)) => hom_from_images(src, tgt, |g| half_boundary(&d, g)),
            (None, Some(tgt)) => Ok(GroupHom::zero(FGAbelianGroup::trivial(), tgt.group().clone())),
            _ => Err(Error::Precondition(format!("X^G has no degree {q}"))),
        }
    }

    /// Bockstein applied to every component, degree `q + 1 ↦ q`.
    pub fn bockstein_vector(&self, v: &GradedClassVector) -> Result<GradedClassVector> {
        let mut out = GradedClassVector::zero(&self.dims());
        for q in 0..self.homology.len() {
            let b = self.bockstein(q)?;
            let src = v.degree(q + 1).iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>();
            if src.is_empty() {
                continue;
            }
            out.components[q] = bits(&b.apply(&src));
        }
        Ok(out)
    }

    /// `H^0`-style kernel of `deg` inside `⊕_{q ∈ degrees} H_q(X^G, ℤ/2)`,
    /// stacked in the given order.
    pub fn degree_kernel(&self, degrees: &[usize]) -> Result<Subgroup> {
        let mut row = Vec::new();
        for &q in degrees {
            let h = &self.homology[q];
            for j in 0..h.group().ngens() {
                let d = if q == 0 {
                    h.generator(j).iter().sum()
                } else {
                    BigInt::zero()
                };
                row.push(d);
            }
        }
        let n = row.len();
        let f = GroupHom::new(
            FGAbelianGroup::elementary(n),
            FGAbelianGroup::elementary(1),
            IntMatrix::from_rows(vec![row]),
        )?;
        Ok(f.kernel())
    }

    /// `deg : H_0(X^G, ℤ/2) → ℤ/2` on a vector's degree-0 part.
    pub fn degree(&self, v: &GradedClassVector) -> u8 {
        match self.homology.first() {
            Some(h0) => {
                let z = h0.lift(&v.degree(0).iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>());
                bits(&[z.iter().sum::<BigInt>()])[0]
            }
            None => 0,
        }
    }
}

/// `ρ` in total degree `n`, one component per degree of `X^G`.
#[derive(Clone, Debug)]
pub struct RhoMap {
    pub degree: isize,
    pub coeff: CoeffSystem,
    pub source: Homology,
    /// `components[q] : H_n(X;G,A) → H_q(X^G, ℤ/2)`.
    pub components: Vec<GroupHom>,
}

impl RhoMap {
    /// `ρ` applied to a class given by its coordinates.
    pub fn apply(&self, coords: &[BigInt]) -> GradedClassVector {
        GradedClassVector {
            components: self.components.iter().map(|c| bits(&c.apply(coords))).collect(),
        }
    }

    /// `ρ` of each source generator.
    pub fn images(&self) -> Vec<GradedClassVector> {
        let n = self.source.group().ngens();
        (0..n)
            .map(|j| {
                let mut e = vec![BigInt::zero(); n];
                e[j] = BigInt::from(1);
                self.apply(&e)
            })
            .collect()
    }

    fn stacked(&self, pick: impl Fn(usize) -> bool) -> Result<GroupHom> {
        let degrees: Vec<usize> = (0..self.components.len()).filter(|&q| pick(q)).collect();
        let dim: usize = degrees.iter().map(|&q| self.components[q].target.ngens()).sum();
        let mut m = IntMatrix::zeros(dim, self.source.group().ngens());
        let mut row = 0;
        for &q in &degrees {
            let c = &self.components[q];
            for i in 0..c.matrix.rows() {
                for j in 0..c.matrix.cols() {
                    m.set(row + i, j, c.matrix.get(i, j).clone());
                }
            }
            row += c.matrix.rows();
        }
        GroupHom::new(self.source.group().clone(), FGAbelianGroup::elementary(dim), m)
    }

    /// `ρ_{n,even}` into `⊕_{q even} H_q(X^G, ℤ/2)`.
    pub fn even(&self) -> Result<GroupHom> {
        self.stacked(|q| q % 2 == 0)
    }

    /// `ρ_{n,odd}` into `⊕_{q odd} H_q(X^G, ℤ/2)`.
    pub fn odd(&self) -> Result<GroupHom> {
        self.stacked(|q| q % 2 == 1)
    }

    pub fn total(&self) -> Result<GroupHom> {
        self.stacked(|_| true)
    }
}

/// Builds `ρ` for a fixed `X`: reduce mod 2, cap with `η^N`, invert the
/// inclusion of `X^G` in a degree where it is an isomorphism, and read off
/// the column blocks.
#[derive(Clone, Debug)]
pub struct Localizer {
    x: GComplex,
    fixed: FixedSet,
    shift: usize,
    t2: TotalComplex,
    fixed_total: TotalComplex,
}

impl Localizer {
    pub fn new(x: &GComplex) -> Result<Self> {
        let fixed = FixedSet::new(x)?;
        let fixed_total = TotalComplex::homological(fixed.complex(), CoeffSystem::Z2)?;
        Ok(Localizer {
            x: x.clone(),
            shift: (x.dim().max(0) + 1) as usize,
            t2: TotalComplex::homological(x, CoeffSystem::Z2)?,
            fixed_total,
            fixed,
        })
    }

    pub fn fixed(&self) -> &FixedSet {
        &self.fixed
    }

    /// Stabilization depth `N = dim X + 1`.
    pub fn shift(&self) -> usize {
        self.shift
    }

    /// `ρ` on the class of a total cycle `z` of degree `n`, with `z` taken
    /// in any coefficient system (it is reduced mod 2 first).
    pub fn rho_of_cycle(&self, n: isize, z: &[BigInt]) -> Result<GradedClassVector> {
        self.rho_with(&self.solver(n), n, z)
    }

    fn solver(&self, n: isize) -> (Solver<Gf2>, usize) {
        let m = n - self.shift as isize;
        let incl = self.inclusion_matrix(m);
        let d = self.t2.differential(m + 1);
        (Solver::new(&incl.hcat(&d).to_gf2()), incl.cols())
    }

    fn inclusion_matrix(&self, m: isize) -> IntMatrix {
        pushforward_chain_map(&self.fixed.inclusion, &self.fixed_total, &self.t2, m)
    }

    fn rho_with(&self, solver: &(Solver<Gf2>, usize), n: isize, z: &[BigInt]) -> Result<GradedClassVector> {
        let m = n - self.shift as isize;
        let src = self.t2.blocks(n);
        let tgt = self.t2.blocks(m);
        let r = self.shift;
        let eta = block_map(&src, self.t2.rank(n), &tgt, self.t2.rank(m), |s, t| {
            (t.column == s.column + r && t.degree == s.degree).then(|| IntMatrix::identity(s.len))
        });
        let w: Vec<Gf2> = eta
            .mul_vec(z)
            .iter()
            .map(<Gf2 as crate::linalg::Scalar>::from_int)
            .collect();
        let sol = solver
            .0
            .solve(&w)
            .ok_or_else(|| Error::Internal(format!("inclusion of the fixed set not onto in degree {m}")))?;
        let y: Vec<BigInt> = sol[..solver.1].iter().map(crate::linalg::Scalar::to_int).collect();
        let mut out = GradedClassVector::zero(&self.fixed.dims());
        for b in self.fixed_total.blocks(m) {
            let part = &y[b.offset..b.offset + b.len];
            out.components[b.degree] = bits(&self.fixed.homology[b.degree].coords(part)?);
        }
        Ok(out)
    }

    /// `ρ` on all of `H_n(X;G,A)`.
    pub fn rho(&self, coeff: CoeffSystem, n: isize) -> Result<RhoMap> {
        let source = TotalComplex::homological(&self.x, coeff)?.homology(n)?;
        self.rho_on(coeff, n, source)
    }

    /// `ρ` for an already computed `H_n(X;G,A)`.
    pub fn rho_on(&self, coeff: CoeffSystem, n: isize, source: Homology) -> Result<RhoMap> {
        let solver = self.solver(n);
        let g = source.generators();
        let images = (0..g.cols())
            .map(|j| self.rho_with(&solver, n, &g.column(j)))
            .collect::<Result<Vec<_>>>()?;
        let components = self
            .fixed
            .homology
            .iter()
            .enumerate()
            .map(|(q, h)| {
                let cols: Vec<Vec<BigInt>> = images
                    .iter()
                    .map(|v| v.degree(q).iter().map(|&c| BigInt::from(c)).collect())
                    .collect();
                GroupHom::new(
                    source.group().clone(),
                    h.group().clone(),
                    IntMatrix::from_columns(h.group().ngens(), &cols),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RhoMap {
            degree: n,
            coeff,
            source,
            components,
        })
    }
}

/// `ρ : H_n(X;G,A) → H_*(X^G, ℤ/2)`.
pub fn rho(x: &GComplex, coeff: CoeffSystem, n: isize) -> Result<RhoMap> {
    Localizer::new(x)?.rho(coeff, n)
}

/// `β` in total degree `n` of equivariant cohomology.
#[derive(Clone, Debug)]
pub struct BetaMap {
    pub degree: isize,
    pub coeff: CoeffSystem,
    pub source: Homology,
    /// `components[q] : H^n(X;G,A) → H^q(X^G, ℤ/2)`, nonzero only for
    /// `q ≤ n`.
    pub components: Vec<GroupHom>,
}

impl BetaMap {
    pub fn apply(&self, coords: &[BigInt]) -> GradedClassVector {
        GradedClassVector {
            components: self.components.iter().map(|c| bits(&c.apply(coords))).collect(),
        }
    }
}

/// `β` on a cocycle: restrict each column block `C^{n-j}` to `X^G` and reduce
/// mod 2; block `j` gives the `H^{n-j}(X^G)` component.
pub fn beta_of_cocycle(t: &TotalComplex, fixed: &FixedSet, n: isize, omega: &[BigInt]) -> Result<GradedClassVector> {
    let mut out = GradedClassVector {
        components: fixed.cohomology.iter().map(|h| vec![0; h.group().ngens()]).collect(),
    };
    for b in t.blocks(n) {
        let Some(h) = fixed.cohomology.get(b.degree) else {
            continue;
        };
        let restrict = fixed
            .inclusion
            .chain_map(b.degree as isize, CoeffSystem::Z2)
            .transpose();
        let part = &omega[b.offset..b.offset + b.len];
        let v = h.reduce(restrict.mul_vec(part));
        out.components[b.degree] = bits(&h.coords(&v)?);
    }
    Ok(out)
}

/// `β : H^n(X;G,A) → H^*(X^G, ℤ/2)`.
pub fn beta(x: &GComplex, coeff: CoeffSystem, n: isize) -> Result<BetaMap> {
    let t = TotalComplex::cohomological(x, coeff)?;
    let fixed = FixedSet::new(x)?;
    beta_on(&t, &fixed, n, t.homology(n)?)
}

pub fn beta_on(t: &TotalComplex, fixed: &FixedSet, n: isize, source: Homology) -> Result<BetaMap> {
    let g = source.generators();
    let images = (0..g.cols())
        .map(|j| beta_of_cocycle(t, fixed, n, &g.column(j)))
        .collect::<Result<Vec<_>>>()?;
    let components = fixed
        .cohomology
        .iter()
        .enumerate()
        .map(|(q, h)| {
            let cols: Vec<Vec<BigInt>> = images
                .iter()
                .map(|v| v.degree(q).iter().map(|&c| BigInt::from(c)).collect())
                .collect();
            GroupHom::new(
                source.group().clone(),
                h.group().clone(),
                IntMatrix::from_columns(h.group().ngens(), &cols),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BetaMap {
        degree: n,
        coeff: t.coeff(),
        source,
        components,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcomplex::builtin;

    #[test]
    fn free_action_gives_zero() {
        let r = rho(&builtin("circle-antipodal").unwrap(), CoeffSystem::Z2, 0).unwrap();
        assert!(r.components.is_empty());
        assert!(r.images().iter().all(GradedClassVector::is_zero));
    }

    #[test]
    fn point_is_its_own_fixed_set() {
        for n in -3..=0 {
            let r = rho(&builtin("point").unwrap(), CoeffSystem::Z2, n).unwrap();
            assert!(r.total().unwrap().is_isomorphism(), "n={n}");
        }
    }

    #[test]
    fn beta_on_trivial_involution_degree_zero() {
        let x = builtin("circle-reflection+point").unwrap().with_trivial_involution();
        let b = beta(&x, CoeffSystem::Z2, 0).unwrap();
        assert!(b.components[0].is_isomorphism());
    }
}
