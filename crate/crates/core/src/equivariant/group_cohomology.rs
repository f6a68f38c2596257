use crate::error::{Error, Result};
use crate::linalg::{FGAbelianGroup, GroupHom};

/// `H^p(G, M)` for `G = ℤ/2` acting on `M` through the involution `action`.
///
/// `H^0 = M^G`; for odd `p` it is `ker(1 + σ) / im(1 - σ)` and for even
/// `p ≥ 2` it is `ker(1 - σ) / im(1 + σ)`.
pub fn group_cohomology(action: &GroupHom, p: usize) -> Result<FGAbelianGroup> {
    check_involution(action)?;
    let id = GroupHom::identity(action.source.clone());
    let one_minus = id.add(&action.scale(-1))?;
    let one_plus = id.add(action)?;
    Ok(match p {
        0 => one_minus.kernel().iso_type(),
        p if p % 2 == 1 => one_plus.kernel().quotient_type(&one_minus.image()),
        _ => one_minus.kernel().quotient_type(&one_plus.image()),
    })
}

/// `M^G` as a subgroup, for checking edge images.
pub fn invariants(action: &GroupHom) -> Result<crate::linalg::Subgroup> {
    check_involution(action)?;
    let id = GroupHom::identity(action.source.clone());
    Ok(id.add(&action.scale(-1))?.kernel())
}

/// `(1 + σ) M`, the image of the norm map.
pub fn norms(action: &GroupHom) -> Result<crate::linalg::Subgroup> {
    check_involution(action)?;
    let id = GroupHom::identity(action.source.clone());
    Ok(id.add(action)?.image())
}

fn check_involution(action: &GroupHom) -> Result<()> {
    if action.source != action.target || action.source.orders() != action.target.orders() {
        return Err(Error::NotAnInvolution);
    }
    let square = action.compose(action)?;
    if !square.same_map(&GroupHom::identity(action.source.clone())) {
        return Err(Error::NotAnInvolution);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::IntMatrix;

    fn on_z(sign: i64) -> GroupHom {
        GroupHom::new(
            FGAbelianGroup::free(1),
            FGAbelianGroup::free(1),
            IntMatrix::from_i64(&[&[sign]]),
        )
        .unwrap()
    }

    #[test]
    fn integers_with_trivial_action() {
        let s = on_z(1);
        assert_eq!(group_cohomology(&s, 0).unwrap(), FGAbelianGroup::free(1));
        assert_eq!(group_cohomology(&s, 1).unwrap(), FGAbelianGroup::trivial());
        assert_eq!(group_cohomology(&s, 2).unwrap(), FGAbelianGroup::elementary(1));
    }

    #[test]
    fn integers_with_sign_action() {
        let s = on_z(-1);
        assert_eq!(group_cohomology(&s, 0).unwrap(), FGAbelianGroup::trivial());
        assert_eq!(group_cohomology(&s, 1).unwrap(), FGAbelianGroup::elementary(1));
        assert_eq!(group_cohomology(&s, 2).unwrap(), FGAbelianGroup::trivial());
    }

    #[test]
    fn free_module_is_acyclic() {
        let swap = GroupHom::new(
            FGAbelianGroup::free(2),
            FGAbelianGroup::free(2),
            IntMatrix::from_i64(&[&[0, 1], &[1, 0]]),
        )
        .unwrap();
        assert_eq!(group_cohomology(&swap, 0).unwrap(), FGAbelianGroup::free(1));
        for p in 1..5 {
            assert!(group_cohomology(&swap, p).unwrap().is_trivial());
        }
    }

    #[test]
    fn rejects_non_involution() {
        let s = GroupHom::new(
            FGAbelianGroup::free(1),
            FGAbelianGroup::free(1),
            IntMatrix::from_i64(&[&[2]]),
        )
        .unwrap();
        assert!(matches!(group_cohomology(&s, 1), Err(Error::NotAnInvolution)));
    }
}
