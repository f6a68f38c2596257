use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gcomplex::{builtin, GComplex};

pub const FUZZ_SEED: u64 = 0x5eed_2024;
pub const FUZZ_COUNT: usize = 100;

/// Builtins small enough to subdivide cheaply.
const SMALL: &[&str] = &["point", "free-pair", "circle-antipodal", "circle-reflection"];
const MEDIUM: &[&str] = &[
    "sphere-octahedron-antipodal",
    "sphere-octahedron-reflection",
    "sphere-antipodal-with-arc",
    "rp2-trivial",
];

/// Relabelled, subdivided and disjointly united variants of the builtins,
/// identical on every call.
pub fn fuzzed_complexes() -> Vec<GComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(FUZZ_SEED);
    (0..FUZZ_COUNT).map(|_| one(&mut rng)).collect()
}

fn one(rng: &mut ChaCha8Rng) -> GComplex {
    let pool: Vec<&str> = SMALL.iter().chain(MEDIUM).copied().collect();
    let mut x = builtin(pool.choose(rng).expect("nonempty")).expect("catalogue");
    if x.total_simplices() <= 30 && rng.gen_bool(0.3) {
        x = x.barycentric_subdivide();
    }
    if rng.gen_bool(0.4) {
        let other = builtin(SMALL.choose(rng).expect("nonempty")).expect("catalogue");
        x = x.disjoint_union(&other);
    }
    let mut perm: Vec<usize> = (0..x.vertex_count()).collect();
    perm.shuffle(rng);
    x.relabel(&perm)
}
