//! Automorphism groups, quotients and symmetry type graphs.
//!
//! An automorphism of a premaniplex is a vertex permutation commuting with
//! every color involution; it acts on the right and commutes with the left
//! monodromy action.  On a connected premaniplex the action is free, so an
//! automorphism is determined by the image of any one vertex and the whole
//! group is found by trying every candidate image of a base vertex.

use crate::perm;
use crate::premaniplex::Premaniplex;
use crate::{Error, Result};

/// The full automorphism group of a connected premaniplex, stored as
/// explicit vertex permutations.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    elements: Vec<Vec<usize>>,
    orbits: Vec<Vec<usize>>,
}

impl AutomorphismGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Vec<usize>] {
        &self.elements
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits.len() == 1
    }
}

/// True iff `gamma` commutes with every color involution of `x`.
pub fn is_automorphism(x: &Premaniplex, gamma: &[usize]) -> bool {
    if gamma.len() != x.vertex_count() || !perm::is_permutation(gamma) {
        return false;
    }
    (0..x.rank())
        .all(|i| (0..x.vertex_count()).all(|v| gamma[x.neighbor(i, v)] == x.neighbor(i, gamma[v])))
}

/// Computes the full automorphism group of a connected premaniplex.
pub fn automorphisms(x: &Premaniplex) -> Result<AutomorphismGroup> {
    if !x.is_connected() {
        return Err(Error::Disconnected);
    }
    let count = x.vertex_count();
    let mut elements = Vec::new();
    for target in 0..count {
        if let Some(gamma) = x.find_isomorphism(x, Some((0, target))) {
            elements.push(gamma);
        }
    }
    let orbits = orbit_partition(count, &elements);
    Ok(AutomorphismGroup { elements, orbits })
}

/// Orbit partition of `0..count` under the given permutations, each orbit in
/// ascending order, orbits ordered by their minimum.
pub fn orbit_partition(count: usize, gens: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..count).collect();
    fn find(parent: &mut Vec<usize>, v: usize) -> usize {
        if parent[v] != v {
            let root = find(parent, parent[v]);
            parent[v] = root;
        }
        parent[v]
    }
    for g in gens {
        for v in 0..count {
            let (a, b) = (find(&mut parent, v), find(&mut parent, g[v]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; count];
    for v in 0..count {
        let root = find(&mut parent, v);
        if slot[root] == usize::MAX {
            slot[root] = orbits.len();
            orbits.push(Vec::new());
        }
        orbits[slot[root]].push(v);
    }
    orbits
}

/// Quotients `x` by the group generated by `gens`.  Vertices of the result
/// are the orbits, ordered by their minimum vertex; adjacency descends since
/// the generators commute with the monodromy action.
pub fn quotient(x: &Premaniplex, gens: &[Vec<usize>]) -> Result<Premaniplex> {
    for (index, g) in gens.iter().enumerate() {
        if !is_automorphism(x, g) {
            return Err(Error::NotAutomorphism { index });
        }
    }
    let orbits = orbit_partition(x.vertex_count(), gens);
    let mut orbit_of = vec![0usize; x.vertex_count()];
    for (o, orbit) in orbits.iter().enumerate() {
        for &v in orbit {
            orbit_of[v] = o;
        }
    }
    let adjacency = (0..x.rank())
        .map(|i| {
            orbits
                .iter()
                .map(|orbit| orbit_of[x.neighbor(i, orbit[0])])
                .collect()
        })
        .collect();
    let out = Premaniplex::new(x.rank(), adjacency)?;
    out.validate().map_err(Error::InvalidPremaniplex)?;
    Ok(out)
}

/// The symmetry type graph: the quotient by `subgroup` when given, otherwise
/// by the full automorphism group.
pub fn symmetry_type_graph(
    x: &Premaniplex,
    subgroup: Option<&[Vec<usize>]>,
) -> Result<Premaniplex> {
    match subgroup {
        Some(gens) => quotient(x, gens),
        None => {
            let aut = automorphisms(x)?;
            quotient(x, aut.elements())
        }
    }
}

/// The distinguished generators of a regular premaniplex with respect to a
/// base vertex: for each color i, the unique automorphism taking the base to
/// its i-adjacent vertex.  Fails naming the first color for which none
/// exists.
pub fn distinguished_generators(x: &Premaniplex, base: usize) -> Result<Vec<Vec<usize>>> {
    if !x.is_connected() {
        return Err(Error::Disconnected);
    }
    if base >= x.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: base,
            count: x.vertex_count(),
        });
    }
    (0..x.rank())
        .map(|i| {
            x.find_isomorphism(x, Some((base, x.neighbor(i, base))))
                .ok_or(Error::NotRegular { color: i })
        })
        .collect()
}
