use serde::Serialize;

use crate::equivariant::group_cohomology;
use crate::error::Result;
use crate::gcomplex::{CoeffSystem, GChainComplex, GComplex};
use crate::linalg::FGAbelianGroup;

/// One entry `E²_{p,q} = H^{-p}(G, H_q(X, A(k)))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct E2Entry {
    pub p: isize,
    pub q: usize,
    pub group: FGAbelianGroup,
}

/// The `E²` page for `-depth ≤ p ≤ 0`, `0 ≤ q ≤ dim X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct E2Page {
    pub coeff: CoeffSystem,
    pub depth: usize,
    pub rows: usize,
    pub entries: Vec<E2Entry>,
}

impl E2Page {
    pub fn get(&self, p: isize, q: usize) -> Option<&FGAbelianGroup> {
        self.entries.iter().find(|e| e.p == p && e.q == q).map(|e| &e.group)
    }

    /// Columns `p ≤ -1` repeat with period 2 over `ℤ` and period 1 over `ℤ/2`.
    pub fn is_periodic(&self) -> bool {
        let period = if self.coeff.is_mod2() { 1 } else { 2 };
        self.entries
            .iter()
            .filter(|e| e.p <= -1)
            .all(|e| self.get(e.p - period, e.q).is_none_or(|g| *g == e.group))
    }
}

/// `E²` with page depth `depth` (defaults to `dim X + 2`).
pub fn e2_page(x: &GComplex, coeff: CoeffSystem, depth: Option<usize>) -> Result<E2Page> {
    let chains = GChainComplex::new(x, coeff)?;
    let depth = depth.unwrap_or((x.dim() + 2).max(0) as usize);
    let rows = (x.dim() + 1).max(0) as usize;
    let mut entries = Vec::new();
    for q in 0..rows {
        let h = chains.homology(q as isize)?;
        let sigma = chains.sigma_on_homology(q as isize, &h)?;
        for minus_p in 0..=depth {
            entries.push(E2Entry {
                p: -(minus_p as isize),
                q,
                group: group_cohomology(&sigma, minus_p)?,
            });
        }
    }
    Ok(E2Page {
        coeff,
        depth,
        rows,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcomplex::builtin;

    #[test]
    fn point_mod_two_row() {
        let page = e2_page(&builtin("point").unwrap(), CoeffSystem::Z2, None).unwrap();
        assert_eq!(page.rows, 1);
        assert!(page.entries.iter().all(|e| e.group == FGAbelianGroup::elementary(1)));
        assert!(page.is_periodic());
    }

    #[test]
    fn antipodal_sphere_rows() {
        let page = e2_page(
            &builtin("sphere-octahedron-antipodal").unwrap(),
            CoeffSystem::Z,
            Some(4),
        )
        .unwrap();
        assert_eq!(page.get(0, 0), Some(&FGAbelianGroup::free(1)));
        assert_eq!(page.get(-2, 0), Some(&FGAbelianGroup::elementary(1)));
        assert_eq!(page.get(-1, 0), Some(&FGAbelianGroup::trivial()));
        assert!(page.get(0, 1).unwrap().is_trivial());
        // σ reverses the orientation of the sphere
        assert_eq!(page.get(0, 2), Some(&FGAbelianGroup::trivial()));
        assert_eq!(page.get(-1, 2), Some(&FGAbelianGroup::elementary(1)));
        assert!(page.is_periodic());
    }
}
