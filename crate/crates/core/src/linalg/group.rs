//! Finitely generated abelian groups, homomorphisms between them and
//! subgroups, all presented on explicit generator coordinates.
//!
//! A group `ℤ^r ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_t` has `t + r` coordinates: the torsion
//! generators first (in invariant-factor order) and then the free ones.
//! Elementary abelian 2-groups double as `ℤ/2`-vector spaces, so maps
//! computed over `ℤ/2` live in the same world as integral ones.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::lattice::{kernel_basis, lattice_basis, span_contains, Solver};
use super::matrix::IntMatrix;
use super::snf::smith_normal_form;
use crate::error::{Error, Result};

/// `ℤ^free_rank ⊕ ⊕ ℤ/dᵢ` with `2 ≤ d₁ | d₂ | …`.
///
/// Equality compares the isomorphism class only; generator lifts (when a
/// group came out of a homology computation) are not canonical.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FGAbelianGroup {
    pub free_rank: usize,
    #[serde(serialize_with = "ser_ints", deserialize_with = "de_ints")]
    pub torsion: Vec<BigInt>,
    #[serde(skip)]
    generators: Option<IntMatrix>,
}

impl PartialEq for FGAbelianGroup {
    fn eq(&self, other: &Self) -> bool {
        self.free_rank == other.free_rank && self.torsion == other.torsion
    }
}

impl Eq for FGAbelianGroup {}

impl FGAbelianGroup {
    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn free(rank: usize) -> Self {
        FGAbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
            generators: None,
        }
    }

    /// `(ℤ/2)^dim`
    pub fn elementary(dim: usize) -> Self {
        FGAbelianGroup {
            free_rank: 0,
            torsion: vec![BigInt::from(2); dim],
            generators: None,
        }
    }

    /// Group with the given free rank and cyclic orders, normalized to
    /// invariant factors (orders 0 count as free, orders 1 are dropped).
    pub fn new(free_rank: usize, orders: &[BigInt]) -> Self {
        let mut free = free_rank;
        let mut finite = Vec::new();
        for d in orders {
            if d.is_zero() {
                free += 1;
            } else if !d.abs().is_one() {
                finite.push(d.abs());
            }
        }
        let n = finite.len();
        let mut diag = IntMatrix::zeros(n, n);
        for (i, d) in finite.into_iter().enumerate() {
            diag.set(i, i, d);
        }
        let torsion = smith_normal_form(&diag)
            .diagonal
            .into_iter()
            .filter(|d| !d.is_one())
            .collect();
        FGAbelianGroup {
            free_rank: free,
            torsion,
            generators: None,
        }
    }

    pub(crate) fn with_generators(free_rank: usize, torsion: Vec<BigInt>, gens: IntMatrix) -> Self {
        debug_assert_eq!(gens.cols(), free_rank + torsion.len());
        FGAbelianGroup {
            free_rank,
            torsion,
            generators: Some(gens),
        }
    }

    /// Number of coordinates (cyclic summands).
    pub fn ngens(&self) -> usize {
        self.torsion.len() + self.free_rank
    }

    /// Order of each coordinate generator, `0` for infinite order.
    pub fn orders(&self) -> Vec<BigInt> {
        let mut v = self.torsion.clone();
        v.extend(std::iter::repeat_n(BigInt::zero(), self.free_rank));
        v
    }

    /// Generator lifts into the ambient chain basis, one per column.
    pub fn generators(&self) -> Option<&IntMatrix> {
        self.generators.as_ref()
    }

    pub fn is_trivial(&self) -> bool {
        self.ngens() == 0
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite()
            .then(|| self.torsion.iter().fold(BigInt::one(), |acc, d| acc * d))
    }

    /// Dimension over `ℤ/2` when this is an elementary abelian 2-group.
    pub fn dim_f2(&self) -> Option<usize> {
        let two = BigInt::from(2);
        (self.free_rank == 0 && self.torsion.iter().all(|d| *d == two)).then_some(self.torsion.len())
    }

    /// Number of cyclic summands (torsion and free).
    pub fn rank_total(&self) -> usize {
        self.ngens()
    }

    pub fn direct_sum(parts: &[&FGAbelianGroup]) -> Self {
        let mut free = 0;
        let mut orders = Vec::new();
        for g in parts {
            free += g.free_rank;
            orders.extend(g.torsion.iter().cloned());
        }
        Self::new(free, &orders)
    }

    /// Reduce a coordinate vector to canonical residues.
    pub fn canonical(&self, coords: &[BigInt]) -> Vec<BigInt> {
        coords
            .iter()
            .zip(self.orders())
            .map(|(c, d)| if d.is_zero() { c.clone() } else { c.mod_floor(&d) })
            .collect()
    }

    pub fn is_zero_element(&self, coords: &[BigInt]) -> bool {
        self.canonical(coords).iter().all(Zero::is_zero)
    }

    /// Relation lattice generators: `dᵢ eᵢ` for each torsion coordinate.
    fn relation_columns(&self) -> IntMatrix {
        let n = self.ngens();
        let t = self.torsion.len();
        let mut r = IntMatrix::zeros(n, t);
        for (i, d) in self.torsion.iter().enumerate() {
            r.set(i, i, d.clone());
        }
        r
    }
}

impl fmt::Display for FGAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = &self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|x| *x == d).count();
            if run == 1 {
                parts.push(format!("Z/{d}"));
            } else {
                parts.push(format!("(Z/{d})^{run}"));
            }
            i += run;
        }
        write!(f, "{}", parts.join(" + "))
    }
}

fn ser_ints<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    #[serde(untagged)]
    enum Num {
        Small(u64),
        Big(String),
    }
    let items: Vec<Num> = v
        .iter()
        .map(|d| d.to_u64().map_or_else(|| Num::Big(d.to_string()), Num::Small))
        .collect();
    items.serialize(s)
}

fn de_ints<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<BigInt>, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Num {
        Small(u64),
        Big(String),
    }
    let items = Vec::<Num>::deserialize(d)?;
    items
        .into_iter()
        .map(|n| match n {
            Num::Small(v) => Ok(BigInt::from(v)),
            Num::Big(s) => s.parse().map_err(serde::de::Error::custom),
        })
        .collect()
}

/// Homomorphism given by its action on generator coordinates:
/// column `j` holds the image of source generator `j`.
#[derive(Clone, Debug)]
pub struct GroupHom {
    pub source: FGAbelianGroup,
    pub target: FGAbelianGroup,
    pub matrix: IntMatrix,
}

impl GroupHom {
    pub fn new(source: FGAbelianGroup, target: FGAbelianGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != target.ngens() || matrix.cols() != source.ngens() {
            return Err(Error::Shape(format!(
                "hom matrix is {}x{}, groups need {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.ngens(),
                source.ngens()
            )));
        }
        let src_orders = source.orders();
        for (j, d) in src_orders.iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            let image: Vec<BigInt> = matrix.column(j).iter().map(|x| x * d).collect();
            if !target.is_zero_element(&image) {
                return Err(Error::TorsionViolation { generator: j });
            }
        }
        let columns: Vec<Vec<BigInt>> = matrix.columns().iter().map(|c| target.canonical(c)).collect();
        let matrix = IntMatrix::from_columns(target.ngens(), &columns);
        Ok(GroupHom { source, target, matrix })
    }

    pub fn zero(source: FGAbelianGroup, target: FGAbelianGroup) -> Self {
        let matrix = IntMatrix::zeros(target.ngens(), source.ngens());
        GroupHom { source, target, matrix }
    }

    pub fn identity(group: FGAbelianGroup) -> Self {
        let matrix = IntMatrix::identity(group.ngens());
        GroupHom {
            source: group.clone(),
            target: group,
            matrix,
        }
    }

    /// `self ∘ first`
    pub fn compose(&self, first: &GroupHom) -> Result<GroupHom> {
        if first.target.ngens() != self.source.ngens() || first.target.orders() != self.source.orders() {
            return Err(Error::Shape("composition of incompatible homomorphisms".into()));
        }
        GroupHom::new(
            first.source.clone(),
            self.target.clone(),
            self.matrix.mul(&first.matrix),
        )
    }

    /// `self + other` on the same source and target.
    pub fn add(&self, other: &GroupHom) -> Result<GroupHom> {
        if !self.same_groups(other) {
            return Err(Error::Shape("sum of homomorphisms between different groups".into()));
        }
        GroupHom::new(self.source.clone(), self.target.clone(), self.matrix.add(&other.matrix))
    }

    /// `c · self`.
    pub fn scale(&self, c: i64) -> GroupHom {
        GroupHom::new(
            self.source.clone(),
            self.target.clone(),
            self.matrix.scale(&BigInt::from(c)),
        )
        .expect("multiples of a homomorphism are homomorphisms")
    }

    fn same_groups(&self, other: &GroupHom) -> bool {
        self.source.orders() == other.source.orders() && self.target.orders() == other.target.orders()
    }

    pub fn apply(&self, coords: &[BigInt]) -> Vec<BigInt> {
        self.target.canonical(&self.matrix.mul_vec(coords))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Same groups and the same action on every generator.
    pub fn same_map(&self, other: &GroupHom) -> bool {
        self.same_groups(other) && self.matrix == other.matrix
    }

    pub fn image(&self) -> Subgroup {
        Subgroup {
            ambient: self.target.clone(),
            gens: self.matrix.clone(),
        }
    }

    pub fn kernel(&self) -> Subgroup {
        let n = self.source.ngens();
        if n == 0 {
            return Subgroup::zero(self.source.clone());
        }
        let system = self.matrix.hcat(&self.target.relation_columns());
        let k = kernel_basis(&system);
        let idx: Vec<usize> = (0..n).collect();
        let gens = k.select_rows(&idx);
        Subgroup {
            ambient: self.source.clone(),
            gens,
        }
    }

    pub fn is_surjective(&self) -> bool {
        self.image().is_everything()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_zero()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Matrix restricted to the given target coordinates.
    pub fn project(&self, target: FGAbelianGroup, rows: &[usize]) -> Result<GroupHom> {
        GroupHom::new(self.source.clone(), target, self.matrix.select_rows(rows))
    }
}

/// Subgroup of a presented group, spanned by coordinate vectors (columns).
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub ambient: FGAbelianGroup,
    pub gens: IntMatrix,
}

impl Subgroup {
    pub fn zero(ambient: FGAbelianGroup) -> Self {
        let n = ambient.ngens();
        Subgroup {
            ambient,
            gens: IntMatrix::zeros(n, 0),
        }
    }

    pub fn everything(ambient: FGAbelianGroup) -> Self {
        let n = ambient.ngens();
        Subgroup {
            ambient,
            gens: IntMatrix::identity(n),
        }
    }

    pub fn generated_by(ambient: FGAbelianGroup, gens: IntMatrix) -> Self {
        assert_eq!(gens.rows(), ambient.ngens());
        Subgroup { ambient, gens }
    }

    /// Preimage lattice in `ℤ^ngens`: generators plus the ambient relations.
    fn lattice(&self) -> IntMatrix {
        self.gens.hcat(&self.ambient.relation_columns())
    }

    pub fn contains_element(&self, coords: &[BigInt]) -> bool {
        Solver::new(&self.lattice()).contains(coords)
    }

    pub fn contains(&self, other: &Subgroup) -> bool {
        span_contains(&self.lattice(), &other.gens)
    }

    pub fn same_as(&self, other: &Subgroup) -> bool {
        self.contains(other) && other.contains(self)
    }

    pub fn is_zero(&self) -> bool {
        Subgroup::zero(self.ambient.clone()).contains(self)
    }

    pub fn is_everything(&self) -> bool {
        self.contains(&Subgroup::everything(self.ambient.clone()))
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        // x = A a = B b (mod relations): kernel of [A | -B | R].
        let a = self.gens.clone();
        let b = other.gens.scale(&BigInt::from(-1));
        let system = a.hcat(&b).hcat(&self.ambient.relation_columns());
        let k = kernel_basis(&system);
        let idx: Vec<usize> = (0..a.cols()).collect();
        let coeffs = k.select_rows(&idx);
        Subgroup {
            ambient: self.ambient.clone(),
            gens: a.mul(&coeffs),
        }
    }

    /// Isomorphism type of the subgroup itself.
    pub fn iso_type(&self) -> FGAbelianGroup {
        let basis = lattice_basis(&self.lattice());
        let rel = self.ambient.relation_columns();
        if basis.cols() == 0 {
            return FGAbelianGroup::trivial();
        }
        let solver = Solver::new(&basis);
        let cols: Vec<Vec<BigInt>> = (0..rel.cols())
            .map(|j| {
                solver
                    .solve(&rel.column(j))
                    .expect("relations lie in the subgroup lattice")
            })
            .collect();
        let rel_coords = IntMatrix::from_columns(basis.cols(), &cols);
        quotient_type(basis.cols(), &rel_coords)
    }

    /// Isomorphism type of `self / sub`; `sub` must be contained in `self`.
    pub fn quotient_type(&self, sub: &Subgroup) -> FGAbelianGroup {
        debug_assert!(self.contains(sub));
        let basis = lattice_basis(&self.lattice());
        if basis.cols() == 0 {
            return FGAbelianGroup::trivial();
        }
        let solver = Solver::new(&basis);
        let lat = sub.lattice();
        let cols: Vec<Vec<BigInt>> = (0..lat.cols())
            .map(|j| {
                solver
                    .solve(&lat.column(j))
                    .expect("subgroup lies in the ambient subgroup")
            })
            .collect();
        quotient_type(basis.cols(), &IntMatrix::from_columns(basis.cols(), &cols))
    }

    /// Isomorphism type of `ambient / self`.
    pub fn cokernel_type(&self) -> FGAbelianGroup {
        quotient_type(self.ambient.ngens(), &self.lattice())
    }
}

/// `ℤ^n / span(rel)`.
fn quotient_type(n: usize, rel: &IntMatrix) -> FGAbelianGroup {
    let s = smith_normal_form(rel);
    let r = s.rank();
    FGAbelianGroup::new(
        n - r,
        &s.diagonal.iter().map(super::ring::Scalar::to_int).collect::<Vec<_>>(),
    )
}
