//! Property suites run over the builtin catalogue, the map catalogue and a
//! deterministic set of fuzzed complexes.
//!
//! A report lists every case in a fixed order and carries no timings, so
//! two runs produce byte-identical JSON.

pub mod checks;
mod fuzz;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::gcomplex::{builtin, gmap_catalog, CoeffSystem, GChainComplex, GComplex, BUILTIN_NAMES, MANIFOLD_BUILTINS};
use crate::linalg::FGAbelianGroup;
use crate::spectral::CriterionVariant;

pub use fuzz::{fuzzed_complexes, FUZZ_COUNT, FUZZ_SEED};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Core,
    Exactness,
    Gm,
    Duality,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 5] = ["core", "exactness", "gm", "duality", "all"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Exactness => "exactness",
            Suite::Gm => "gm",
            Suite::Duality => "duality",
            Suite::All => "all",
        }
    }

    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Core, Suite::Exactness, Suite::Gm, Suite::Duality],
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "core" => Ok(Suite::Core),
            "exactness" => Ok(Suite::Exactness),
            "gm" => Ok(Suite::Gm),
            "duality" => Ok(Suite::Duality),
            "all" => Ok(Suite::All),
            other => Err(format!(
                "unknown suite `{other}`; expected one of {}",
                Suite::NAMES.join(", ")
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub suite: &'static str,
    pub module: &'static str,
    pub property: &'static str,
    pub input: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: &'static str,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub cases: Vec<CaseResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

type Run = Box<dyn Fn() -> checks::Outcome + Send + Sync>;

struct Case {
    suite: &'static str,
    module: &'static str,
    property: &'static str,
    input: String,
    run: Run,
}

struct Cases {
    suite: &'static str,
    list: Vec<Case>,
}

impl Cases {
    fn add(
        &mut self,
        module: &'static str,
        property: &'static str,
        input: impl Into<String>,
        run: impl Fn() -> checks::Outcome + Send + Sync + 'static,
    ) {
        self.list.push(Case {
            suite: self.suite,
            module,
            property,
            input: input.into(),
            run: Box::new(run),
        });
    }
}

pub fn run_suite(suite: Suite) -> Report {
    let mut cases = Vec::new();
    for part in suite.parts() {
        let mut c = Cases {
            suite: part.name(),
            list: Vec::new(),
        };
        match part {
            Suite::Core => core_cases(&mut c),
            Suite::Exactness => exactness_cases(&mut c),
            Suite::Gm => gm_cases(&mut c),
            Suite::Duality => duality_cases(&mut c),
            Suite::All => unreachable!(),
        }
        cases.extend(c.list);
    }
    let results: Vec<CaseResult> = cases
        .par_iter()
        .map(|case| {
            let (passed, detail) = match (case.run)() {
                Ok(r) => r,
                Err(e) => (false, format!("error: {e}")),
            };
            CaseResult {
                suite: case.suite,
                module: case.module,
                property: case.property,
                input: case.input.clone(),
                passed,
                detail,
            }
        })
        .collect();
    let passed = results.iter().filter(|r| r.passed).count();
    Report {
        suite: suite.name(),
        total: results.len(),
        passed,
        failed: results.len() - passed,
        cases: results,
    }
}

fn load(name: &str) -> GComplex {
    builtin(name).expect("catalogue names build")
}

fn has_fixed_points(name: &str) -> bool {
    !load(name).fixed_vertices().is_empty()
}

fn coeff_label(name: &str, coeff: CoeffSystem) -> String {
    format!("{name}, {coeff}")
}

fn core_cases(c: &mut Cases) {
    for coeff in CoeffSystem::ALL {
        c.add("equivariant", "point axiom", coeff.to_string(), move || {
            checks::point_axiom(coeff)
        });
    }
    for &name in BUILTIN_NAMES {
        for coeff in CoeffSystem::ALL {
            c.add(
                "gcomplex",
                "boundary and involution identities",
                coeff_label(name, coeff),
                move || checks::chain_identities(&load(name), coeff),
            );
            c.add(
                "equivariant",
                "total differential squares to zero",
                coeff_label(name, coeff),
                move || checks::total_squares_to_zero(&load(name), coeff),
            );
        }
        c.add("gcomplex", "subdivision preserves the fixed set", name, move || {
            checks::subdivision_keeps_fixed_set(&load(name))
        });
    }
    for &name in BUILTIN_NAMES.iter().filter(|n| has_fixed_points(n)) {
        for coeff in CoeffSystem::ALL {
            for n in -3..=-1isize {
                c.add(
                    "equivariant",
                    "localization is an isomorphism below zero",
                    format!("{name}, {coeff}, n={n}"),
                    move || checks::localization_isomorphism(&load(name), coeff, n),
                );
            }
            c.add(
                "equivariant",
                "localization is invariant under s",
                format!("{name}, {coeff}, n=0"),
                move || checks::rho_after_s(&load(name), coeff, 0),
            );
        }
        for coeff in [CoeffSystem::Z, CoeffSystem::Z1] {
            for n in -2..=1isize {
                c.add(
                    "equivariant",
                    "localization and Bockstein",
                    format!("{name}, {coeff}, n={n}"),
                    move || checks::rho_and_bockstein(&load(name), coeff, n),
                );
            }
        }
    }
    for &name in BUILTIN_NAMES {
        for coeff in [CoeffSystem::Z2, CoeffSystem::Z] {
            c.add("equivariant", "degree maps", coeff_label(name, coeff), move || {
                checks::degree_compatibilities(&load(name), coeff)
            });
        }
    }
    for (label, f) in gmap_catalog() {
        let f = std::sync::Arc::new(f);
        for coeff in CoeffSystem::ALL {
            let g = f.clone();
            c.add(
                "equivariant",
                "push-forward naturality",
                format!("{label}, {coeff}"),
                move || checks::naturality(&g, coeff),
            );
        }
        let g = f.clone();
        c.add(
            "equivariant",
            "restriction naturality",
            format!("{label}, {}, n=0", CoeffSystem::Z2),
            move || checks::beta_naturality(&g, CoeffSystem::Z2, 0),
        );
    }
    for &name in MANIFOLD_BUILTINS {
        let base = if z_orientable(&load(name)) {
            CoeffSystem::Z
        } else {
            CoeffSystem::Z2
        };
        c.add(
            "equivariant",
            "fundamental class edge isomorphism",
            coeff_label(name, base),
            move || checks::fundamental_edge(&load(name), base),
        );
    }
}

/// `H_d(X; ℤ) ≅ ℤ` for a connected closed `d`-manifold exactly when it is
/// orientable.
fn z_orientable(x: &GComplex) -> bool {
    GChainComplex::new(x, CoeffSystem::Z)
        .and_then(|c| c.homology(x.dim()))
        .map(|h| *h.group() == FGAbelianGroup::free(1))
        .unwrap_or(false)
}

fn exactness_cases(c: &mut Cases) {
    for &name in BUILTIN_NAMES {
        for coeff in CoeffSystem::ALL {
            c.add(
                "equivariant",
                "edge sequence is exact",
                coeff_label(name, coeff),
                move || checks::edge_sequence(&load(name), coeff),
            );
        }
        for coeff in [CoeffSystem::Z, CoeffSystem::Z1] {
            c.add(
                "equivariant",
                "coefficient sequence is exact",
                coeff_label(name, coeff),
                move || checks::coefficient_sequence(&load(name), coeff),
            );
        }
    }
}

fn gm_cases(c: &mut Cases) {
    for &name in BUILTIN_NAMES {
        c.add("spectral", "GM inequalities", name, move || {
            checks::gm_inequalities(&load(name))
        });
        c.add("spectral", "GM flags match equality cases", name, move || {
            checks::gm_consistency(&load(name))
        });
        for coeff in CoeffSystem::ALL {
            c.add("spectral", "E2 page is periodic", coeff_label(name, coeff), move || {
                checks::e2_periodicity(&load(name), coeff)
            });
        }
    }
    for (name, expected) in [
        ("circle-reflection", true),
        ("torus-reflection", true),
        ("sphere-octahedron-antipodal", false),
    ] {
        c.add("spectral", "known GM status", name, move || {
            checks::gm_expected(&load(name), expected)
        });
    }
    for (i, x) in fuzzed_complexes().into_iter().enumerate() {
        let x = std::sync::Arc::new(x);
        let label = format!("fuzz #{i} ({} simplices)", x.total_simplices());
        let y = x.clone();
        c.add("spectral", "GM inequalities", label.clone(), move || {
            checks::gm_inequalities(&y)
        });
        c.add("spectral", "GM flags match equality cases", label, move || {
            checks::gm_consistency(&x)
        });
    }
    for &name in BUILTIN_NAMES.iter().filter(|n| load(n).is_connected()) {
        for variant in CriterionVariant::ALL {
            if variant.needs_fixed_points() && !has_fixed_points(name) {
                continue;
            }
            c.add(
                "spectral",
                "surjectivity criteria agree",
                format!("{name}, {variant}"),
                move || checks::criteria_agree(&load(name), variant),
            );
        }
    }
    let witness_inputs = BUILTIN_NAMES
        .iter()
        .copied()
        .filter(|n| has_fixed_points(n))
        .chain(["circle-reflection+free-pair"]);
    for name in witness_inputs {
        c.add("spectral", "witness search honours its contract", name, move || {
            checks::witness_contract(&load(name))
        });
    }
}

fn duality_cases(c: &mut Cases) {
    for &name in MANIFOLD_BUILTINS {
        let mut bases = vec![CoeffSystem::Z2];
        if z_orientable(&load(name)) {
            bases.push(CoeffSystem::Z);
        }
        for base in bases {
            c.add("spectral", "duality", coeff_label(name, base), move || {
                checks::duality(&load(name), base)
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().name(), name);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
