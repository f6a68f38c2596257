use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::Serialize;

use super::types::{EnriquesType, SurfaceComponent, TypeError};
use crate::linalg::FGAbelianGroup;

/// Largest component count `enumerate_types` accepts.
pub const MAX_ENUMERATED_COMPONENTS: usize = 4;

/// Everything the classifier says about one type, with the rule applied for
/// each answer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifierOutput {
    pub dim_h1: usize,
    pub dim_h1_alg: usize,
    pub is_gm: bool,
    pub is_zgm: bool,
    /// The real part is empty, where maximality is derived rather than
    /// stated.
    pub outside_hypothesis: bool,
    pub brauer: FGAbelianGroup,
    pub rules: Rules,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rules {
    pub h1: &'static str,
    pub gm: &'static str,
    pub brauer: &'static str,
}

/// `(dim H_1(Y(ℝ), ℤ/2), dim H_1^alg)`. A class is algebraic exactly when it
/// pairs to zero with `w_1`, so the algebraic part is the kernel of that
/// functional.
pub fn h1_dims(t: &EnriquesType) -> (usize, usize) {
    let w1: Vec<u8> = t.components().flat_map(SurfaceComponent::w1_on_basis).collect();
    let rank = usize::from(w1.contains(&1));
    (w1.len(), w1.len() - rank)
}

/// `(GM, ℤ-GM)`.
pub fn gm_status(t: &EnriquesType) -> (bool, bool) {
    gm_with_rule(t).0
}

fn gm_with_rule(t: &EnriquesType) -> ((bool, bool), &'static str) {
    let nonorientable = !t.is_orientable();
    if t.is_empty() {
        (
            (false, false),
            "empty real part: edge e_1 vanishes (outside hypothesis)",
        )
    } else if t.both_halves_nonempty() {
        (
            (true, nonorientable),
            "both halves nonempty: GM; Z-GM iff nonorientable",
        )
    } else {
        let odd_euler = t.components().any(|c| c.euler_char() % 2 != 0);
        (
            (nonorientable, odd_euler),
            "one half empty: GM iff nonorientable; Z-GM iff odd Euler characteristic",
        )
    }
}

pub fn brauer_group(t: &EnriquesType) -> FGAbelianGroup {
    brauer_with_rule(t).0
}

fn brauer_with_rule(t: &EnriquesType) -> (FGAbelianGroup, &'static str) {
    let s = t.s();
    let two = |n: usize| vec![BigInt::from(2); n];
    if t.is_empty() {
        (FGAbelianGroup::elementary(1), "empty real part: Z/2")
    } else if !t.is_orientable() {
        (FGAbelianGroup::elementary(2 * s - 1), "nonorientable: (Z/2)^(2s-1)")
    } else if t.both_halves_nonempty() {
        let mut orders = two(2 * s - 2);
        orders.push(BigInt::from(4));
        (
            FGAbelianGroup::new(0, &orders),
            "orientable, both halves: (Z/2)^(2s-2) + Z/4",
        )
    } else {
        (FGAbelianGroup::elementary(2 * s), "orientable, one half: (Z/2)^(2s)")
    }
}

pub fn classify(t: &EnriquesType) -> Result<ClassifierOutput, TypeError> {
    t.validate()?;
    let (dim_h1, dim_h1_alg) = h1_dims(t);
    let ((is_gm, is_zgm), gm_rule) = gm_with_rule(t);
    let (brauer, brauer_rule) = brauer_with_rule(t);
    let h1_rule = if t.is_orientable() {
        "orientable: every class algebraic"
    } else {
        "nonorientable: algebraic classes are the kernel of w_1"
    };
    Ok(ClassifierOutput {
        dim_h1,
        dim_h1_alg,
        is_gm,
        is_zgm,
        outside_hypothesis: t.is_empty(),
        brauer,
        rules: Rules {
            h1: h1_rule,
            gm: gm_rule,
            brauer: brauer_rule,
        },
    })
}

/// Every valid type with at most `max_components` components, one per class
/// under reordering and exchanging halves, ordered by `s` and then by the
/// canonical representative.
pub fn enumerate_types(max_components: usize) -> Result<Vec<(EnriquesType, ClassifierOutput)>, TypeError> {
    if max_components > MAX_ENUMERATED_COMPONENTS {
        return Err(TypeError {
            half: "enumeration",
            index: max_components,
            component: String::new(),
            reason: format!("at most {MAX_ENUMERATED_COMPONENTS} components can be enumerated"),
        });
    }
    let kinds = SurfaceComponent::all();
    let mut seen = BTreeSet::new();
    for s in 0..=max_components {
        for a in 0..=s {
            for h1 in multisets(&kinds, a) {
                for h2 in multisets(&kinds, s - a) {
                    seen.insert((s, EnriquesType::new(h1.clone(), h2).canonical()));
                }
            }
        }
    }
    seen.into_iter().map(|(_, t)| classify(&t).map(|o| (t, o))).collect()
}

/// Sorted multisets of size `n`.
fn multisets(kinds: &[SurfaceComponent], n: usize) -> Vec<Vec<SurfaceComponent>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, k) in kinds.iter().enumerate() {
        for mut rest in multisets(&kinds[i..], n - 1) {
            rest.insert(0, *k);
            out.push(rest);
        }
    }
    out
}
