use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::equivariant::{
    beta_of_cocycle, edge_from, edge_morphism, edge_morphism_cohomology, ordinary, FixedSet, Localizer, TotalComplex,
};
use crate::error::{Error, Result};
use crate::gcomplex::{CoeffSystem, GComplex};

/// Which of the three `ρ`-surjectivity criteria to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CriterionVariant {
    /// `ρ_2` with `ℤ/2` coefficients onto `H_*(X^G)^0`.
    Zz,
    /// `ρ_{2,even}` of `H_2(X;G,ℤ)` onto `H_even(X^G)^0`.
    EvenZ,
    /// `ρ_{2,odd}` of `H_2(X;G,ℤ(1))` onto `H_odd(X^G)`.
    OddZ,
}

impl CriterionVariant {
    pub const ALL: [CriterionVariant; 3] = [CriterionVariant::Zz, CriterionVariant::EvenZ, CriterionVariant::OddZ];

    pub fn name(self) -> &'static str {
        match self {
            CriterionVariant::Zz => "zz",
            CriterionVariant::EvenZ => "even-z",
            CriterionVariant::OddZ => "odd-z",
        }
    }

    pub fn needs_fixed_points(self) -> bool {
        self != CriterionVariant::EvenZ
    }
}

impl fmt::Display for CriterionVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CriterionVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CriterionVariant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown criterion `{s}`")))
    }
}

/// The two sides of a criterion, computed independently.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub variant: CriterionVariant,
    /// The composite through `∪ η^2` vanishes.
    pub criterion_zero: bool,
    pub rho_surjective: bool,
}

impl CriterionReport {
    pub fn agree(&self) -> bool {
        self.criterion_zero == self.rho_surjective
    }
}

pub fn rho_surjectivity_criteria(x: &GComplex, variant: CriterionVariant) -> Result<CriterionReport> {
    if !x.is_connected() {
        return Err(Error::Precondition("X must be connected".into()));
    }
    let loc = Localizer::new(x)?;
    let fixed = loc.fixed();
    if variant.needs_fixed_points() && fixed.is_empty() {
        return Err(Error::Precondition("X^G must be nonempty".into()));
    }
    let dims = fixed.dims();
    let all: Vec<usize> = (0..dims.len()).collect();
    let even: Vec<usize> = all.iter().copied().filter(|q| q % 2 == 0).collect();
    let (edge_coeff, rho_coeff) = match variant {
        CriterionVariant::Zz => (CoeffSystem::Z2, CoeffSystem::Z2),
        CriterionVariant::EvenZ => (CoeffSystem::Z1, CoeffSystem::Z),
        CriterionVariant::OddZ => (CoeffSystem::Z, CoeffSystem::Z1),
    };
    let criterion_zero = edge_morphism(x, edge_coeff, 1)?.image_in_norms()?;
    let r = loc.rho(rho_coeff, 2)?;
    let rho_surjective = match variant {
        CriterionVariant::Zz => r.total()?.image().contains(&fixed.degree_kernel(&all)?),
        CriterionVariant::EvenZ => r.even()?.image().contains(&fixed.degree_kernel(&even)?),
        CriterionVariant::OddZ => r.odd()?.is_surjective(),
    };
    Ok(CriterionReport {
        variant,
        criterion_zero,
        rho_surjective,
    })
}

/// What the witness search found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "outcome")]
pub enum WitnessOutcome {
    /// `e^2` is onto the invariants; nothing to find.
    Surjective,
    /// Coordinates of `ω ∈ H^1(X;G,ℤ/2)` with `e^1(ω) ≠ 0` and `β(ω) = 0`.
    Witness {
        omega: Vec<u8>,
    },
    NoWitness,
}

/// Upper bound on `dim H^1(X;G,ℤ/2)` for the exhaustive search.
pub const WITNESS_SEARCH_LIMIT: usize = 20;

/// Search for `ω` with `e^1(ω) ≠ 0` but `β(ω) = 0` when `e^2` is not onto
/// `H^2(X, ℤ/2)^G`.
pub fn surjectivity_witness(x: &GComplex, coeff: CoeffSystem) -> Result<WitnessOutcome> {
    if !coeff.is_mod2() {
        return Err(Error::Precondition("the witness search runs over Z2 only".into()));
    }
    let fixed = FixedSet::new(x)?;
    if fixed.is_empty() {
        return Err(Error::Precondition("X^G must be nonempty".into()));
    }
    if edge_morphism_cohomology(x, coeff, 2)?.onto_invariants() {
        return Ok(WitnessOutcome::Surjective);
    }
    let t = TotalComplex::cohomological(x, coeff.shift(-1))?;
    let h1 = t.homology(1)?;
    let e1 = edge_from(&t, 1, &h1, &ordinary(&t, 1)?)?;
    let n = h1.group().ngens();
    if n > WITNESS_SEARCH_LIMIT {
        return Err(Error::Precondition(format!(
            "H^1 has dimension {n}, too large to search"
        )));
    }
    for mask in 1u64..(1u64 << n) {
        let coords: Vec<BigInt> = (0..n).map(|i| BigInt::from((mask >> i) & 1)).collect();
        if e1.hom.target.is_zero_element(&e1.hom.apply(&coords)) {
            continue;
        }
        if beta_of_cocycle(&t, &fixed, 1, &h1.lift(&coords))?.is_zero() {
            return Ok(WitnessOutcome::Witness {
                omega: (0..n).map(|i| ((mask >> i) & 1) as u8).collect(),
            });
        }
    }
    Ok(WitnessOutcome::NoWitness)
}

/// The contract: a witness exists whenever `e^2` is not onto, for connected
/// `X`. On disconnected `X` every outcome is accepted.
pub fn witness_contract_holds(x: &GComplex, outcome: &WitnessOutcome) -> bool {
    !matches!(outcome, WitnessOutcome::NoWitness) || !x.is_connected()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcomplex::builtin;

    #[test]
    fn circle_reflection_zz() {
        // H_2(X;G,Z2) vanishes on a curve while H_*(X^G)^0 is a line
        let r = rho_surjectivity_criteria(&builtin("circle-reflection").unwrap(), CriterionVariant::Zz).unwrap();
        assert!(!r.criterion_zero && !r.rho_surjective);
        let r =
            rho_surjectivity_criteria(&builtin("sphere-octahedron-reflection").unwrap(), CriterionVariant::Zz).unwrap();
        assert!(r.criterion_zero && r.rho_surjective);
    }

    #[test]
    fn free_action_rejects_odd_z() {
        let x = builtin("sphere-octahedron-antipodal").unwrap();
        assert!(rho_surjectivity_criteria(&x, CriterionVariant::OddZ).is_err());
    }

    #[test]
    fn witness_outcomes() {
        let x = builtin("circle-reflection").unwrap();
        assert_eq!(
            surjectivity_witness(&x, CoeffSystem::Z2).unwrap(),
            WitnessOutcome::Surjective
        );
        let arc = builtin("sphere-antipodal-with-arc").unwrap();
        assert!(matches!(
            surjectivity_witness(&arc, CoeffSystem::Z2).unwrap(),
            WitnessOutcome::Witness { .. }
        ));
        let split = builtin("sphere-octahedron-antipodal+point").unwrap();
        let outcome = surjectivity_witness(&split, CoeffSystem::Z2).unwrap();
        assert_eq!(outcome, WitnessOutcome::NoWitness);
        assert!(witness_contract_holds(&split, &outcome));
    }
}
