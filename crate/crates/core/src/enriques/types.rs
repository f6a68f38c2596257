use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest number of cross-caps a nonorientable component may have.
pub const MAX_NONORIENTABLE_GENUS: u32 = 11;

/// A connected closed surface: sphere or torus when orientable, otherwise a
/// sum of `genus` projective planes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceComponent {
    pub orientable: bool,
    pub genus: u32,
}

impl SurfaceComponent {
    pub const SPHERE: SurfaceComponent = SurfaceComponent {
        orientable: true,
        genus: 0,
    };
    pub const TORUS: SurfaceComponent = SurfaceComponent {
        orientable: true,
        genus: 1,
    };

    pub fn nonorientable(genus: u32) -> Self {
        SurfaceComponent {
            orientable: false,
            genus,
        }
    }

    /// Every admissible component, sphere and torus first.
    pub fn all() -> Vec<SurfaceComponent> {
        let mut v = vec![Self::SPHERE, Self::TORUS];
        v.extend((1..=MAX_NONORIENTABLE_GENUS).map(Self::nonorientable));
        v
    }

    pub fn euler_char(&self) -> i64 {
        if self.orientable {
            2 - 2 * i64::from(self.genus)
        } else {
            2 - i64::from(self.genus)
        }
    }

    /// `dim H_1(·, ℤ/2)`.
    pub fn h1_dim(&self) -> usize {
        let g = self.genus as usize;
        if self.orientable {
            2 * g
        } else {
            g
        }
    }

    /// `⟨w_1, a_i⟩` on the standard basis of `H_1(·, ℤ/2)`: every cross-cap
    /// curve reverses orientation.
    pub fn w1_on_basis(&self) -> Vec<u8> {
        vec![u8::from(!self.orientable); self.h1_dim()]
    }

    fn check(&self) -> Result<(), &'static str> {
        match (self.orientable, self.genus) {
            (true, 0 | 1) => Ok(()),
            (true, _) => Err("an orientable component must be a sphere or a torus"),
            (false, 1..=MAX_NONORIENTABLE_GENUS) => Ok(()),
            (false, _) => Err("a nonorientable component needs genus between 1 and 11"),
        }
    }

    fn rank(&self) -> (u8, u32) {
        (u8::from(!self.orientable), self.genus)
    }
}

impl PartialOrd for SurfaceComponent {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// `S < T < N1 < N2 < …`
impl Ord for SurfaceComponent {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl fmt::Display for SurfaceComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.orientable, self.genus) {
            (true, 0) => write!(f, "S"),
            (true, 1) => write!(f, "T"),
            (true, g) => write!(f, "T{g}"),
            (false, g) => write!(f, "N{g}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Error)]
#[error("{half}[{index}] ({component}): {reason}")]
pub struct TypeError {
    pub half: &'static str,
    pub index: usize,
    pub component: String,
    pub reason: String,
}

/// The real part split into its two halves.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnriquesType {
    #[serde(default)]
    pub half1: Vec<SurfaceComponent>,
    #[serde(default)]
    pub half2: Vec<SurfaceComponent>,
}

impl EnriquesType {
    pub fn new(half1: Vec<SurfaceComponent>, half2: Vec<SurfaceComponent>) -> Self {
        EnriquesType { half1, half2 }
    }

    pub fn empty() -> Self {
        EnriquesType::new(Vec::new(), Vec::new())
    }

    /// Number of components.
    pub fn s(&self) -> usize {
        self.half1.len() + self.half2.len()
    }

    pub fn components(&self) -> impl Iterator<Item = &SurfaceComponent> {
        self.half1.iter().chain(&self.half2)
    }

    pub fn is_empty(&self) -> bool {
        self.s() == 0
    }

    pub fn is_orientable(&self) -> bool {
        self.components().all(|c| c.orientable)
    }

    pub fn both_halves_nonempty(&self) -> bool {
        !self.half1.is_empty() && !self.half2.is_empty()
    }

    pub fn swapped(&self) -> Self {
        EnriquesType::new(self.half2.clone(), self.half1.clone())
    }

    /// Representative up to reordering inside a half and exchanging halves:
    /// both halves sorted, larger half first, ties broken by order.
    pub fn canonical(&self) -> Self {
        let mut a = self.half1.clone();
        let mut b = self.half2.clone();
        a.sort();
        b.sort();
        if (b.len(), &b) > (a.len(), &a) {
            std::mem::swap(&mut a, &mut b);
        }
        EnriquesType::new(a, b)
    }

    pub fn validate(&self) -> Result<(), TypeError> {
        for (half, comps) in [("half1", &self.half1), ("half2", &self.half2)] {
            for (index, c) in comps.iter().enumerate() {
                c.check().map_err(|reason| TypeError {
                    half,
                    index,
                    component: c.to_string(),
                    reason: reason.to_string(),
                })?;
            }
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self, TypeError> {
        serde_json::from_str(text).map_err(|e| TypeError {
            half: "file",
            index: 0,
            component: format!("line {} column {}", e.line(), e.column()),
            reason: e.to_string(),
        })
    }
}

/// `S N3 | T`, with `-` for an empty half.
impl fmt::Display for EnriquesType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let half = |h: &[SurfaceComponent]| {
            if h.is_empty() {
                "-".to_string()
            } else {
                h.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
            }
        };
        write!(f, "{} | {}", half(&self.half1), half(&self.half2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_bounds() {
        assert!(EnriquesType::new(vec![SurfaceComponent::SPHERE], vec![])
            .validate()
            .is_ok());
        let bad = EnriquesType::new(
            vec![],
            vec![SurfaceComponent {
                orientable: true,
                genus: 2,
            }],
        );
        assert_eq!(bad.validate().unwrap_err().half, "half2");
        let bad = EnriquesType::new(vec![SurfaceComponent::nonorientable(12)], vec![]);
        assert!(bad.validate().is_err());
        assert!(EnriquesType::new(vec![SurfaceComponent::nonorientable(0)], vec![])
            .validate()
            .is_err());
    }

    #[test]
    fn canonical_forms_agree_under_symmetry() {
        let t = EnriquesType::new(
            vec![SurfaceComponent::nonorientable(3)],
            vec![SurfaceComponent::TORUS, SurfaceComponent::SPHERE],
        );
        assert_eq!(t.canonical(), t.swapped().canonical());
        assert_eq!(t.canonical().to_string(), "S T | N3");
    }

    #[test]
    fn json_round_trip() {
        let t = EnriquesType::from_json(
            r#"{"half1": [{"orientable": false, "genus": 3}], "half2": [{"orientable": true, "genus": 0}]}"#,
        )
        .unwrap();
        assert_eq!(t.to_string(), "N3 | S");
        assert!(EnriquesType::from_json(r#"{"half1": [{"orientable": 1}]}"#).is_err());
    }
}
