use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A simplex as its strictly increasing list of vertex ids.
pub type Simplex = Vec<usize>;

/// Structural problems that prevent a complex from being built at all.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("simplex {index} is empty")]
    EmptySimplex { index: usize },
    #[error("simplex {index} refers to vertex {vertex}, but there are only {count} vertices")]
    VertexOutOfRange { index: usize, vertex: usize, count: usize },
    #[error("simplex {index} repeats vertex {vertex}")]
    RepeatedVertex { index: usize, vertex: usize },
    #[error("involution lists {found} images for {expected} vertices")]
    InvolutionLength { expected: usize, found: usize },
    #[error("involution sends vertex {vertex} to {image}, which is out of range")]
    ImageOutOfRange { vertex: usize, image: usize },
    #[error("unknown builtin complex '{0}'")]
    UnknownBuiltin(String),
    #[error("{0}")]
    Parse(String),
}

/// Failure of one of the invariants a G-complex must satisfy.
#[derive(Clone, Debug, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum Violation {
    #[error("involution is not of order two at vertex {vertex}")]
    NotAnInvolution { vertex: usize },
    #[error("involution sends simplex {simplex:?} to a non-simplex")]
    NotSimplicial { simplex: Simplex },
    #[error("simplex {simplex:?} is fixed setwise but not vertexwise")]
    NotRegular { simplex: Simplex },
}

/// A finite simplicial complex with a vertex involution.
///
/// All faces are stored, sorted by dimension and then lexicographically;
/// the position of a simplex in its dimension is its chain-basis index.
#[derive(Clone, PartialEq, Eq)]
pub struct GComplex {
    vertex_count: usize,
    maximal: Vec<Simplex>,
    involution: Vec<usize>,
    simplices: Vec<Vec<Simplex>>,
    index: Vec<BTreeMap<Simplex, usize>>,
    violation: Option<Violation>,
}

impl fmt::Debug for GComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GComplex")
            .field("vertices", &self.vertex_count)
            .field("maximal", &self.maximal)
            .field("involution", &self.involution)
            .finish()
    }
}

impl GComplex {
    /// Build the face closure of `simplices` on `vertex_count` vertices.
    ///
    /// Every vertex is a 0-simplex whether or not it appears in a listed
    /// simplex. Invariant violations do not fail construction; they are
    /// reported by [`GComplex::validate`].
    pub fn new(vertex_count: usize, simplices: &[Vec<usize>], involution: &[usize]) -> Result<Self, ComplexError> {
        if involution.len() != vertex_count {
            return Err(ComplexError::InvolutionLength {
                expected: vertex_count,
                found: involution.len(),
            });
        }
        for (v, &w) in involution.iter().enumerate() {
            if w >= vertex_count {
                return Err(ComplexError::ImageOutOfRange { vertex: v, image: w });
            }
        }
        let mut faces: BTreeSet<Simplex> = (0..vertex_count).map(|v| vec![v]).collect();
        for (index, s) in simplices.iter().enumerate() {
            if s.is_empty() {
                return Err(ComplexError::EmptySimplex { index });
            }
            let mut sorted = s.clone();
            sorted.sort_unstable();
            for w in sorted.windows(2) {
                if w[0] == w[1] {
                    return Err(ComplexError::RepeatedVertex { index, vertex: w[0] });
                }
            }
            if let Some(&v) = sorted.iter().find(|&&v| v >= vertex_count) {
                return Err(ComplexError::VertexOutOfRange {
                    index,
                    vertex: v,
                    count: vertex_count,
                });
            }
            add_faces(&sorted, &mut faces);
        }
        let dim = faces.iter().map(|s| s.len()).max().unwrap_or(0);
        let mut by_dim: Vec<Vec<Simplex>> = vec![Vec::new(); dim];
        for s in faces {
            by_dim[s.len() - 1].push(s);
        }
        for layer in &mut by_dim {
            layer.sort();
        }
        let index = by_dim
            .iter()
            .map(|layer| layer.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        let mut x = GComplex {
            vertex_count,
            maximal: Vec::new(),
            involution: involution.to_vec(),
            simplices: by_dim,
            index,
            violation: None,
        };
        x.maximal = x.compute_maximal();
        x.violation = x.find_violation();
        Ok(x)
    }

    fn compute_maximal(&self) -> Vec<Simplex> {
        // A simplex is maximal when no simplex one dimension up has it as a facet.
        let mut facets: BTreeSet<Simplex> = BTreeSet::new();
        for layer in self.simplices.iter().skip(1) {
            for s in layer {
                for i in 0..s.len() {
                    let mut f = s.clone();
                    f.remove(i);
                    facets.insert(f);
                }
            }
        }
        self.simplices
            .iter()
            .flatten()
            .filter(|s| !facets.contains(*s))
            .cloned()
            .collect()
    }

    fn find_violation(&self) -> Option<Violation> {
        for (v, &w) in self.involution.iter().enumerate() {
            if self.involution[w] != v {
                return Some(Violation::NotAnInvolution { vertex: v });
            }
        }
        for layer in &self.simplices {
            for s in layer {
                let image = self.apply_sorted(s);
                if !self.contains(&image) {
                    return Some(Violation::NotSimplicial { simplex: s.clone() });
                }
                if &image == s && s.iter().any(|&v| self.involution[v] != v) {
                    return Some(Violation::NotRegular { simplex: s.clone() });
                }
            }
        }
        None
    }

    /// First invariant violation, if any.
    pub fn validate(&self) -> Result<(), Violation> {
        match &self.violation {
            Some(v) => Err(v.clone()),
            None => Ok(()),
        }
    }

    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Dimension; an empty complex has dimension `-1`.
    pub fn dim(&self) -> isize {
        self.simplices.len() as isize - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_count == 0
    }

    pub fn involution(&self) -> &[usize] {
        &self.involution
    }

    pub fn maximal_simplices(&self) -> &[Simplex] {
        &self.maximal
    }

    /// Simplices of dimension `q` in basis order.
    pub fn simplices(&self, q: usize) -> &[Simplex] {
        self.simplices.get(q).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, q: usize) -> usize {
        self.simplices(q).len()
    }

    pub fn total_simplices(&self) -> usize {
        self.simplices.iter().map(Vec::len).sum()
    }

    pub fn index_of(&self, s: &[usize]) -> Option<usize> {
        self.index.get(s.len().checked_sub(1)?)?.get(s).copied()
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        self.index_of(s).is_some()
    }

    /// `σ(s)` as a sorted vertex list.
    pub fn apply_sorted(&self, s: &[usize]) -> Simplex {
        let mut t: Simplex = s.iter().map(|&v| self.involution[v]).collect();
        t.sort_unstable();
        t
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(q, l)| if q % 2 == 0 { l.len() as i64 } else { -(l.len() as i64) })
            .sum()
    }

    pub fn fixed_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count).filter(|&v| self.involution[v] == v).collect()
    }

    pub fn is_free(&self) -> bool {
        self.fixed_vertices().is_empty()
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(p: &mut [usize], v: usize) -> usize {
            let mut r = v;
            while p[r] != r {
                r = p[r];
            }
            let mut c = v;
            while p[c] != r {
                let n = p[c];
                p[c] = r;
                c = n;
            }
            r
        }
        for e in self.simplices(1) {
            let (a, b) = (find(&mut parent, e[0]), find(&mut parent, e[1]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..self.vertex_count {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// The subcomplex of simplices fixed vertexwise, with vertices
    /// renumbered in increasing order and the identity involution.
    pub fn fixed_subcomplex(&self) -> GComplex {
        self.fixed_subcomplex_with_map().0
    }

    /// The fixed subcomplex together with its vertex inclusion into `self`.
    pub fn fixed_subcomplex_with_map(&self) -> (GComplex, Vec<usize>) {
        let fixed = self.fixed_vertices();
        let renumber: BTreeMap<usize, usize> = fixed.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let simplices: Vec<Vec<usize>> = self
            .maximal_fixed()
            .iter()
            .map(|s| s.iter().map(|v| renumber[v]).collect())
            .collect();
        let id: Vec<usize> = (0..fixed.len()).collect();
        let sub = GComplex::new(fixed.len(), &simplices, &id).expect("fixed faces are well formed");
        (sub, fixed)
    }

    fn maximal_fixed(&self) -> Vec<Simplex> {
        self.simplices
            .iter()
            .flatten()
            .filter(|s| s.iter().all(|&v| self.involution[v] == v))
            .cloned()
            .collect()
    }

    /// Barycentric subdivision; vertices of the result are the simplices
    /// of `self` in basis order (dimension first).
    pub fn barycentric_subdivide(&self) -> GComplex {
        let mut ids: BTreeMap<&Simplex, usize> = BTreeMap::new();
        let mut order: Vec<&Simplex> = Vec::new();
        for layer in &self.simplices {
            for s in layer {
                ids.insert(s, order.len());
                order.push(s);
            }
        }
        let mut flags = Vec::new();
        for top in &self.maximal {
            let mut chain = vec![top.clone()];
            collect_flags(top, &mut chain, &ids, &mut flags);
        }
        let involution: Vec<usize> = order.iter().map(|s| ids[&self.apply_sorted(s)]).collect();
        GComplex::new(order.len(), &flags, &involution).expect("subdivision is well formed")
    }

    /// Disjoint union with vertices of `other` shifted past those of `self`.
    pub fn disjoint_union(&self, other: &GComplex) -> GComplex {
        let n = self.vertex_count;
        let mut simplices = self.maximal.clone();
        simplices.extend(other.maximal.iter().map(|s| s.iter().map(|v| v + n).collect()));
        let mut inv = self.involution.clone();
        inv.extend(other.involution.iter().map(|v| v + n));
        GComplex::new(n + other.vertex_count, &simplices, &inv).expect("union of well formed complexes")
    }

    /// The same complex with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> GComplex {
        assert_eq!(perm.len(), self.vertex_count);
        let simplices: Vec<Vec<usize>> = self
            .maximal
            .iter()
            .map(|s| s.iter().map(|&v| perm[v]).collect())
            .collect();
        let mut inv = vec![0; self.vertex_count];
        for v in 0..self.vertex_count {
            inv[perm[v]] = perm[self.involution[v]];
        }
        GComplex::new(self.vertex_count, &simplices, &inv).expect("relabeling preserves well-formedness")
    }

    /// The same simplices with the identity involution.
    pub fn with_trivial_involution(&self) -> GComplex {
        let id: Vec<usize> = (0..self.vertex_count).collect();
        GComplex::new(self.vertex_count, &self.maximal, &id).expect("same simplices")
    }
}

fn add_faces(s: &[usize], faces: &mut BTreeSet<Simplex>) {
    if !faces.insert(s.to_vec()) || s.len() == 1 {
        return;
    }
    for i in 0..s.len() {
        let mut f = s.to_vec();
        f.remove(i);
        add_faces(&f, faces);
    }
}

fn collect_flags(
    current: &Simplex,
    chain: &mut Vec<Simplex>,
    ids: &BTreeMap<&Simplex, usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == 1 {
        out.push(chain.iter().map(|s| ids[s]).collect());
        return;
    }
    for i in 0..current.len() {
        let mut f = current.clone();
        f.remove(i);
        chain.push(f.clone());
        collect_flags(&f, chain, ids, out);
        chain.pop();
    }
}
