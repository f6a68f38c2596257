use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::complex::{ComplexError, GComplex};
use crate::error::Result;
use crate::linalg::{induced_hom, GroupHom, Homology, IntMatrix, Ring};

/// Coefficients `A(k)`: `ℤ/2`, or `ℤ` with `σ` acting by `(-1)^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CoeffSystem {
    Z2,
    Z,
    Z1,
}

impl CoeffSystem {
    pub const ALL: [CoeffSystem; 3] = [CoeffSystem::Z2, CoeffSystem::Z, CoeffSystem::Z1];

    pub fn ring(self) -> Ring {
        match self {
            CoeffSystem::Z2 => Ring::Mod2,
            _ => Ring::Integers,
        }
    }

    /// Twist parity; always 0 for `ℤ/2`.
    pub fn twist(self) -> usize {
        match self {
            CoeffSystem::Z1 => 1,
            _ => 0,
        }
    }

    /// `A(k + by)`.
    pub fn shift(self, by: i64) -> Self {
        match self {
            CoeffSystem::Z2 => CoeffSystem::Z2,
            _ => Self::integral(self.twist() as i64 + by),
        }
    }

    /// `ℤ(k)`.
    pub fn integral(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            CoeffSystem::Z
        } else {
            CoeffSystem::Z1
        }
    }

    pub fn is_mod2(self) -> bool {
        self == CoeffSystem::Z2
    }

    pub fn name(self) -> &'static str {
        match self {
            CoeffSystem::Z2 => "Z2",
            CoeffSystem::Z => "Z",
            CoeffSystem::Z1 => "Z1",
        }
    }

    /// `(-1)^k` as the sign of the coefficient action.
    pub(crate) fn twist_sign(self) -> i64 {
        if self.twist() == 1 {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for CoeffSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CoeffSystem {
    type Err = ComplexError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "Z2" | "z2" => Ok(CoeffSystem::Z2),
            "Z" | "z" | "Z0" => Ok(CoeffSystem::Z),
            "Z1" | "z1" => Ok(CoeffSystem::Z1),
            other => Err(ComplexError::Parse(format!(
                "unknown coefficient system '{other}' (expected Z2, Z or Z1)"
            ))),
        }
    }
}

/// Oriented simplicial chains of a G-complex with the diagonal action on
/// `C_q ⊗ A(k)`.
#[derive(Clone, Debug)]
pub struct GChainComplex {
    coeff: CoeffSystem,
    counts: Vec<usize>,
    boundary: Vec<IntMatrix>,
    sigma: Vec<IntMatrix>,
}

impl GChainComplex {
    pub fn new(x: &GComplex, coeff: CoeffSystem) -> Result<Self> {
        x.validate()?;
        let dim = x.dim();
        let ring = coeff.ring();
        let red = |m: IntMatrix| match ring {
            Ring::Integers => m,
            Ring::Mod2 => m.map(|v| ring.reduce(v)),
        };
        let mut counts = Vec::new();
        let mut boundary = Vec::new();
        let mut sigma = Vec::new();
        for q in 0..=dim.max(-1) {
            let q = q as usize;
            let cells = x.simplices(q);
            counts.push(cells.len());
            let rows = if q == 0 { 0 } else { x.count(q - 1) };
            let mut d = IntMatrix::zeros(rows, cells.len());
            if q > 0 {
                for (j, s) in cells.iter().enumerate() {
                    for i in 0..s.len() {
                        let mut f = s.clone();
                        f.remove(i);
                        let r = x.index_of(&f).expect("faces are present");
                        d.set(r, j, BigInt::from(if i % 2 == 0 { 1 } else { -1 }));
                    }
                }
            }
            boundary.push(red(d));
            let mut m = IntMatrix::zeros(cells.len(), cells.len());
            for (j, s) in cells.iter().enumerate() {
                let image: Vec<usize> = s.iter().map(|&v| x.involution()[v]).collect();
                let (sorted, sign) = sort_with_sign(&image);
                let r = x.index_of(&sorted).expect("validated complexes are simplicial");
                m.set(r, j, BigInt::from(sign * coeff.twist_sign()));
            }
            sigma.push(red(m));
        }
        Ok(GChainComplex {
            coeff,
            counts,
            boundary,
            sigma,
        })
    }

    pub fn coeff(&self) -> CoeffSystem {
        self.coeff
    }

    pub fn ring(&self) -> Ring {
        self.coeff.ring()
    }

    /// Top chain degree, `-1` for the empty complex.
    pub fn dim(&self) -> isize {
        self.counts.len() as isize - 1
    }

    pub fn rank(&self, q: isize) -> usize {
        if q < 0 {
            0
        } else {
            self.counts.get(q as usize).copied().unwrap_or(0)
        }
    }

    /// `∂_q : C_q → C_{q-1}`; correctly shaped zero matrices outside the range.
    pub fn boundary(&self, q: isize) -> IntMatrix {
        if q >= 1 && (q as usize) < self.boundary.len() {
            self.boundary[q as usize].clone()
        } else {
            IntMatrix::zeros(self.rank(q - 1), self.rank(q))
        }
    }

    /// `σ_q`, including the orientation sign and the twist sign.
    pub fn sigma(&self, q: isize) -> IntMatrix {
        if q >= 0 && (q as usize) < self.sigma.len() {
            self.sigma[q as usize].clone()
        } else {
            IntMatrix::zeros(self.rank(q), self.rank(q))
        }
    }

    /// `δ^q = ∂_{q+1}^T : C^q → C^{q+1}`.
    pub fn coboundary(&self, q: isize) -> IntMatrix {
        self.boundary(q + 1).transpose()
    }

    pub fn homology(&self, q: isize) -> Result<Homology> {
        Homology::compute(self.ring(), &self.boundary(q + 1), &self.boundary(q))
    }

    pub fn cohomology(&self, q: isize) -> Result<Homology> {
        Homology::compute(self.ring(), &self.coboundary(q - 1), &self.coboundary(q))
    }

    /// `σ_*` on `H_q`, presented on the generators of `h`.
    pub fn sigma_on_homology(&self, q: isize, h: &Homology) -> Result<GroupHom> {
        induced_hom(&self.sigma(q), h, h)
    }

    /// `σ^*` on `H^q`, presented on the generators of `h`.
    pub fn sigma_on_cohomology(&self, q: isize, h: &Homology) -> Result<GroupHom> {
        induced_hom(&self.sigma(q).transpose(), h, h)
    }
}

/// Sort a vertex tuple, returning the sign of the sorting permutation.
pub(crate) fn sort_with_sign(v: &[usize]) -> (Vec<usize>, i64) {
    let mut w = v.to_vec();
    let mut sign = 1;
    for i in 1..w.len() {
        let mut j = i;
        while j > 0 && w[j - 1] > w[j] {
            w.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    (w, sign)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square(inv: &[usize]) -> GComplex {
        GComplex::new(4, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]], inv).unwrap()
    }

    #[test]
    fn point_sigma_carries_the_twist() {
        let pt = GComplex::new(1, &[], &[0]).unwrap();
        assert_eq!(
            GChainComplex::new(&pt, CoeffSystem::Z).unwrap().sigma(0),
            IntMatrix::from_i64(&[&[1]])
        );
        assert_eq!(
            GChainComplex::new(&pt, CoeffSystem::Z1).unwrap().sigma(0),
            IntMatrix::from_i64(&[&[-1]])
        );
    }

    #[test]
    fn half_turn_on_square_edges() {
        let c = GChainComplex::new(&square(&[2, 3, 0, 1]), CoeffSystem::Z).unwrap();
        // edges in order 01, 03, 12, 23; σ: 01 -> 23, 03 -> 21 = -12, 12 -> 30 = -03, 23 -> 01
        let expected = IntMatrix::from_i64(&[&[0, 0, 0, 1], &[0, 0, -1, 0], &[0, -1, 0, 0], &[1, 0, 0, 0]]);
        assert_eq!(c.sigma(1), expected);
        assert_eq!(c.boundary(1).mul(&c.sigma(1)), c.sigma(0).mul(&c.boundary(1)));
    }

    #[test]
    fn sort_sign() {
        assert_eq!(sort_with_sign(&[2, 0, 1]), (vec![0, 1, 2], 1));
        assert_eq!(sort_with_sign(&[1, 0, 2]), (vec![0, 1, 2], -1));
    }

    #[test]
    fn coefficient_parsing() {
        assert_eq!("Z1".parse::<CoeffSystem>().unwrap(), CoeffSystem::Z1);
        assert!("Q".parse::<CoeffSystem>().is_err());
        assert_eq!(CoeffSystem::Z.shift(1), CoeffSystem::Z1);
        assert_eq!(CoeffSystem::Z1.shift(-1), CoeffSystem::Z);
        assert_eq!(CoeffSystem::Z2.shift(1), CoeffSystem::Z2);
    }
}
