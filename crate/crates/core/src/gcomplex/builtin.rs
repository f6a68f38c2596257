//! The catalogue of named example complexes.
//!
//! | name | space | involution | fixed set |
//! |---|---|---|---|
//! | `point` | point | identity | the point |
//! | `free-pair` | two points | swap | empty |
//! | `circle-antipodal` | 4-gon | half turn | empty |
//! | `circle-reflection` | 4-gon | reflection through vertices 0, 2 | two points |
//! | `sphere-octahedron-antipodal` | octahedron | `v ↦ -v` | empty |
//! | `sphere-octahedron-reflection` | octahedron | `z ↦ -z` | equator (4-gon) |
//! | `torus-reflection` | 3×4 grid torus | `(i, j) ↦ (i, -j)` | two circles |
//! | `torus-free` | 3×4 grid torus | `(i, j) ↦ (i, j + 2)` | empty |
//! | `klein-bottle-trivial` | Klein bottle | identity | everything |
//! | `rp2-trivial` | 6-vertex projective plane | identity | everything |
//! | `sphere-antipodal-with-arc` | octahedron plus a fixed vertex joined to `±x` | `v ↦ -v` | one point |
//!
//! Names joined with `+` denote disjoint unions. `sphere-antipodal`,
//! `sphere-reflection` and `klein-bottle` are accepted as short names.

use super::complex::{ComplexError, GComplex};

/// Every catalogue name, in a fixed order.
pub const BUILTIN_NAMES: &[&str] = &[
    "point",
    "free-pair",
    "circle-antipodal",
    "circle-reflection",
    "sphere-octahedron-antipodal",
    "sphere-octahedron-reflection",
    "torus-reflection",
    "torus-free",
    "klein-bottle-trivial",
    "rp2-trivial",
    "sphere-antipodal-with-arc",
];

/// Builtins that are closed manifolds with a locally smooth involution.
pub const MANIFOLD_BUILTINS: &[&str] = &[
    "point",
    "circle-antipodal",
    "circle-reflection",
    "sphere-octahedron-antipodal",
    "sphere-octahedron-reflection",
    "torus-reflection",
    "torus-free",
    "klein-bottle-trivial",
    "rp2-trivial",
];

/// Look up a catalogue complex; `a+b` is the disjoint union.
pub fn builtin(name: &str) -> Result<GComplex, ComplexError> {
    let mut parts = name.split('+').map(str::trim);
    let first = single(parts.next().unwrap_or(""))?;
    parts.try_fold(first, |acc, p| Ok(acc.disjoint_union(&single(p)?)))
}

fn single(name: &str) -> Result<GComplex, ComplexError> {
    let x = match name {
        "point" => GComplex::new(1, &[], &[0]),
        "free-pair" => GComplex::new(2, &[], &[1, 0]),
        "circle-antipodal" => square(&[2, 3, 0, 1]),
        "circle-reflection" => square(&[0, 3, 2, 1]),
        "sphere-octahedron-antipodal" | "sphere-antipodal" => octahedron(&[1, 0, 3, 2, 5, 4]),
        "sphere-octahedron-reflection" | "sphere-reflection" => octahedron(&[0, 1, 2, 3, 5, 4]),
        "torus-reflection" => grid(false, |i, j| (i, (4 - j) % 4)),
        "torus-free" => grid(false, |i, j| (i, (j + 2) % 4)),
        "klein-bottle-trivial" | "klein-bottle-trivial-candidates" | "klein-bottle" => grid(true, |i, j| (i, j)),
        "rp2-trivial" => rp2(),
        "sphere-antipodal-with-arc" => sphere_with_arc(),
        other => return Err(ComplexError::UnknownBuiltin(other.to_string())),
    };
    Ok(x.expect("catalogue complexes are well formed"))
}

fn square(inv: &[usize]) -> Result<GComplex, ComplexError> {
    GComplex::new(4, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]], inv)
}

/// Vertices 0/1 = ±x, 2/3 = ±y, 4/5 = ±z.
fn octahedron_faces() -> Vec<Vec<usize>> {
    let mut faces = Vec::new();
    for a in 0..2 {
        for b in 2..4 {
            for c in 4..6 {
                faces.push(vec![a, b, c]);
            }
        }
    }
    faces
}

fn octahedron(inv: &[usize]) -> Result<GComplex, ComplexError> {
    GComplex::new(6, &octahedron_faces(), inv)
}

fn sphere_with_arc() -> Result<GComplex, ComplexError> {
    let mut faces = octahedron_faces();
    faces.push(vec![6, 0]);
    faces.push(vec![6, 1]);
    GComplex::new(7, &faces, &[1, 0, 3, 2, 5, 4, 6])
}

/// Grid surface on `ℤ/3 × ℤ/4` with vertex `(i, j)` numbered `4i + j`.
///
/// Strips with even `j` use the diagonal `(i, j) to (i+1, j+1)`, odd strips the
/// other one, so that `j ↦ -j` maps the triangulation to itself. With
/// `flip` the seam `j = 4` is glued to `j = 0` through `i ↦ -i`.
fn grid(flip: bool, action: impl Fn(usize, usize) -> (usize, usize)) -> Result<GComplex, ComplexError> {
    let v = |i: usize, j: usize| -> usize {
        if j == 4 {
            let i = if flip { (3 - i % 3) % 3 } else { i % 3 };
            4 * i
        } else {
            4 * (i % 3) + j
        }
    };
    let mut faces = Vec::new();
    for i in 0..3 {
        for j in 0..4 {
            let (a, b, c, d) = (v(i, j), v(i + 1, j), v(i, j + 1), v(i + 1, j + 1));
            if j % 2 == 0 {
                faces.push(vec![a, b, d]);
                faces.push(vec![a, c, d]);
            } else {
                faces.push(vec![a, b, c]);
                faces.push(vec![b, c, d]);
            }
        }
    }
    let mut inv = vec![0; 12];
    for i in 0..3 {
        for j in 0..4 {
            let (i2, j2) = action(i, j);
            inv[4 * i + j] = 4 * i2 + j2;
        }
    }
    GComplex::new(12, &faces, &inv)
}

/// The 6-vertex real projective plane (half icosahedron).
fn rp2() -> Result<GComplex, ComplexError> {
    let faces = [
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 1, 5],
        [1, 2, 4],
        [2, 3, 5],
        [1, 3, 4],
        [2, 4, 5],
        [1, 3, 5],
    ];
    let faces: Vec<Vec<usize>> = faces.iter().map(|f| f.to_vec()).collect();
    GComplex::new(6, &faces, &[0, 1, 2, 3, 4, 5])
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;

    /// Every edge of a closed surface lies on exactly two triangles.
    fn edges_on_two_triangles(x: &GComplex) -> bool {
        let mut count: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for t in x.simplices(2) {
            for i in 0..3 {
                let mut e = t.clone();
                e.remove(i);
                *count.entry(e).or_default() += 1;
            }
        }
        x.simplices(1).iter().all(|e| count.get(e) == Some(&2))
    }

    #[test]
    fn every_builtin_is_valid() {
        for name in BUILTIN_NAMES {
            let x = builtin(name).unwrap();
            assert!(x.validate().is_ok(), "{name}: {:?}", x.validate());
        }
    }

    #[test]
    fn euler_characteristics() {
        let expected = [
            ("point", 1),
            ("free-pair", 2),
            ("circle-antipodal", 0),
            ("circle-reflection", 0),
            ("sphere-octahedron-antipodal", 2),
            ("sphere-octahedron-reflection", 2),
            ("torus-reflection", 0),
            ("torus-free", 0),
            ("klein-bottle-trivial", 0),
            ("rp2-trivial", 1),
            ("sphere-antipodal-with-arc", 1),
        ];
        for (name, chi) in expected {
            assert_eq!(builtin(name).unwrap().euler_characteristic(), chi, "{name}");
        }
    }

    #[test]
    fn surfaces_are_closed() {
        for name in [
            "sphere-octahedron-antipodal",
            "torus-reflection",
            "torus-free",
            "klein-bottle-trivial",
            "rp2-trivial",
        ] {
            assert!(edges_on_two_triangles(&builtin(name).unwrap()), "{name}");
        }
    }

    #[test]
    fn fixed_sets_match_the_table() {
        let counts = |name: &str| {
            let f = builtin(name).unwrap().fixed_subcomplex();
            (f.count(0), f.count(1), f.count(2))
        };
        assert_eq!(counts("point"), (1, 0, 0));
        assert_eq!(counts("free-pair"), (0, 0, 0));
        assert_eq!(counts("circle-antipodal"), (0, 0, 0));
        assert_eq!(counts("circle-reflection"), (2, 0, 0));
        assert_eq!(counts("sphere-octahedron-antipodal"), (0, 0, 0));
        assert_eq!(counts("sphere-octahedron-reflection"), (4, 4, 0));
        assert_eq!(counts("torus-reflection"), (6, 6, 0));
        assert_eq!(counts("torus-free"), (0, 0, 0));
        assert_eq!(counts("klein-bottle-trivial"), (12, 36, 24));
        assert_eq!(counts("rp2-trivial"), (6, 15, 10));
        assert_eq!(counts("sphere-antipodal-with-arc"), (1, 0, 0));
    }

    #[test]
    fn unions_and_unknown_names() {
        let x = builtin("circle-reflection+free-pair").unwrap();
        assert_eq!(x.vertex_count(), 6);
        assert_eq!(x.components().len(), 3);
        assert!(matches!(builtin("moebius"), Err(ComplexError::UnknownBuiltin(_))));
    }
}
