use num_bigint::BigInt;

use crate::error::Result;
use crate::gcomplex::{CoeffSystem, GChainComplex, GComplex};
use crate::linalg::{Homology, IntMatrix, Ring};

/// Whether the double complex is assembled from chains or cochains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variance {
    Homology,
    Cohomology,
}

/// One summand `C_q` (or `C^q`) sitting in column `column` of a total degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub column: usize,
    pub degree: usize,
    pub offset: usize,
    pub len: usize,
}

/// Total complex of the double complex whose rows alternate `1 - σ` and
/// `1 + σ`.
///
/// In homology, total degree `p` collects chain degree `q = p + j` in
/// column `j ≥ 0`, and the differential lowers `p`:
/// `D = ∂ + (-1)^q h_j` with `h_j = 1 - σ` for even `j` and `1 + σ` for odd
/// `j`. In cohomology, degree `p` collects `C^{p-j}` in column `j` and the
/// differential raises `p` using the transposed maps.
///
/// Degrees are assembled on demand, so any window of degrees agrees with any
/// other on their overlap.
#[derive(Clone, Debug)]
pub struct TotalComplex {
    chains: GChainComplex,
    variance: Variance,
}

impl TotalComplex {
    pub fn homological(x: &GComplex, coeff: CoeffSystem) -> Result<Self> {
        Ok(TotalComplex {
            chains: GChainComplex::new(x, coeff)?,
            variance: Variance::Homology,
        })
    }

    pub fn cohomological(x: &GComplex, coeff: CoeffSystem) -> Result<Self> {
        Ok(TotalComplex {
            chains: GChainComplex::new(x, coeff)?,
            variance: Variance::Cohomology,
        })
    }

    pub fn from_chains(chains: GChainComplex, variance: Variance) -> Self {
        TotalComplex { chains, variance }
    }

    pub fn chains(&self) -> &GChainComplex {
        &self.chains
    }

    pub fn coeff(&self) -> CoeffSystem {
        self.chains.coeff()
    }

    pub fn ring(&self) -> Ring {
        self.chains.ring()
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    /// Blocks of total degree `p`, by increasing column.
    pub fn blocks(&self, p: isize) -> Vec<Block> {
        let n = self.chains.dim();
        let mut out = Vec::new();
        let mut offset = 0;
        let columns: Box<dyn Iterator<Item = isize>> = match self.variance {
            Variance::Homology => Box::new((-p).max(0)..=n - p),
            Variance::Cohomology => Box::new((p - n).max(0)..=p),
        };
        for j in columns {
            let q = match self.variance {
                Variance::Homology => p + j,
                Variance::Cohomology => p - j,
            };
            if q < 0 || q > n {
                continue;
            }
            let len = self.chains.rank(q);
            out.push(Block {
                column: j as usize,
                degree: q as usize,
                offset,
                len,
            });
            offset += len;
        }
        out
    }

    pub fn rank(&self, p: isize) -> usize {
        self.blocks(p).iter().map(|b| b.len).sum()
    }

    pub fn block(&self, p: isize, column: usize) -> Option<Block> {
        self.blocks(p).into_iter().find(|b| b.column == column)
    }

    /// Degree the differential leaves `p` for.
    pub fn next(&self, p: isize) -> isize {
        match self.variance {
            Variance::Homology => p - 1,
            Variance::Cohomology => p + 1,
        }
    }

    /// Degree whose differential lands in `p`.
    pub fn prev(&self, p: isize) -> isize {
        match self.variance {
            Variance::Homology => p + 1,
            Variance::Cohomology => p - 1,
        }
    }

    /// The differential leaving total degree `p`.
    pub fn differential(&self, p: isize) -> IntMatrix {
        let src = self.blocks(p);
        let q_next = self.next(p);
        let tgt = self.blocks(q_next);
        let mut d = IntMatrix::zeros(self.rank(q_next), self.rank(p));
        for b in &src {
            let q = b.degree as isize;
            // vertical part
            let (vq, vertical) = match self.variance {
                Variance::Homology => (q - 1, self.chains.boundary(q)),
                Variance::Cohomology => (q + 1, self.chains.coboundary(q)),
            };
            if let Some(t) = tgt.iter().find(|t| t.column == b.column && t.degree as isize == vq) {
                paste(&mut d, t.offset, b.offset, &vertical, 1);
            }
            // horizontal part
            if let Some(t) = tgt.iter().find(|t| t.column == b.column + 1 && t.degree == b.degree) {
                let h = self.horizontal(q, b.column);
                let sign = if q % 2 == 0 { 1 } else { -1 };
                paste(&mut d, t.offset, b.offset, &h, sign);
            }
        }
        if self.ring() == Ring::Mod2 {
            d = d.map(|v| Ring::Mod2.reduce(v));
        }
        d
    }

    /// `h_j` on `C_q` (transposed in cohomology).
    fn horizontal(&self, q: isize, column: usize) -> IntMatrix {
        let s = match self.variance {
            Variance::Homology => self.chains.sigma(q),
            Variance::Cohomology => self.chains.sigma(q).transpose(),
        };
        let id = IntMatrix::identity(s.rows());
        if column.is_multiple_of(2) && self.ring() == Ring::Integers {
            id.sub(&s)
        } else {
            id.add(&s)
        }
    }

    /// The group at total degree `p`.
    pub fn homology(&self, p: isize) -> Result<Homology> {
        Homology::compute(self.ring(), &self.differential(self.prev(p)), &self.differential(p))
    }

    /// Extract the part of `v` (a vector of degree `p`) in one block.
    pub fn block_part(&self, p: isize, column: usize, v: &[BigInt]) -> Vec<BigInt> {
        match self.block(p, column) {
            Some(b) => v[b.offset..b.offset + b.len].to_vec(),
            None => Vec::new(),
        }
    }

    /// A vector of degree `p` that is `chain` in one block and zero elsewhere.
    pub fn embed(&self, p: isize, column: usize, chain: &[BigInt]) -> Option<Vec<BigInt>> {
        let b = self.block(p, column)?;
        assert_eq!(chain.len(), b.len, "chain does not fit the block");
        let mut v = vec![BigInt::from(0); self.rank(p)];
        v[b.offset..b.offset + b.len].clone_from_slice(chain);
        Some(v)
    }
}

/// `d[r0.., c0..] += sign * m`
pub(crate) fn paste(d: &mut IntMatrix, r0: usize, c0: usize, m: &IntMatrix, sign: i64) {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let v = m.get(i, j);
            if v.sign() != num_bigint::Sign::NoSign {
                let cur = d.get(r0 + i, c0 + j).clone();
                d.set(r0 + i, c0 + j, cur + v * sign);
            }
        }
    }
}

/// Matrix between two total degrees built blockwise: `f(source block,
/// target block)` returns the block entry, if any.
pub(crate) fn block_map(
    src: &[Block],
    src_rank: usize,
    tgt: &[Block],
    tgt_rank: usize,
    mut f: impl FnMut(&Block, &Block) -> Option<IntMatrix>,
) -> IntMatrix {
    let mut m = IntMatrix::zeros(tgt_rank, src_rank);
    for s in src {
        for t in tgt {
            if let Some(piece) = f(s, t) {
                paste(&mut m, t.offset, s.offset, &piece, 1);
            }
        }
    }
    m
}
