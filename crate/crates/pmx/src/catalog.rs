//! Builders for the classical voltage operators and for sample premaniplexes.
//!
//! Rank-3 operators (medial, truncation, snub, ...) are given by explicit
//! dart data; the rank-parametric families (pyramid, prism, trapezotope,
//! k-bubble, omnitruncation) are generated from their defining case
//! formulas.  Samples cover the platonic and archimedean flag graphs, torus
//! maps, polygons and a few small premaniplexes.

use crate::mapspec::MapSpec;
use crate::premaniplex::Premaniplex;
use crate::symmetry;
use crate::voltage::{mix_operator, VoltageOperator};
use crate::words::GroupWord;
use crate::{Error, Result};
use std::collections::HashMap;

/// A named catalog operator together with its parameters.  Every variant
/// builds to a validated [`VoltageOperator`] for its declared rank pair.
#[derive(Clone, Debug)]
pub enum OperatorName {
    Identity {
        rank: usize,
    },
    Dual {
        rank: usize,
    },
    Petrial {
        rank: usize,
    },
    /// A one-vertex operator with explicit semiedge words.
    DOp {
        in_rank: usize,
        words: Vec<GroupWord>,
    },
    Section {
        in_rank: usize,
        k: isize,
        l: isize,
    },
    Medial,
    Truncation,
    TruncDual,
    Wythoff02,
    Omnitruncation {
        rank: usize,
    },
    Snub,
    Pyramid {
        rank: usize,
    },
    Prism {
        rank: usize,
    },
    Trapezotope {
        rank: usize,
    },
    KBubble {
        rank: usize,
        k: usize,
    },
    /// The mixing operator on an explicit premaniplex.
    MixWith {
        graph: Premaniplex,
    },
    /// Mixing with the two-vertex premaniplex with the given semiedge colors.
    TwoOrbit {
        rank: usize,
        semiedge_colors: Vec<usize>,
    },
    Hat2 {
        base: Premaniplex,
    },
}

impl OperatorName {
    pub fn build(&self) -> Result<VoltageOperator> {
        match self {
            OperatorName::Identity { rank } => identity_operator(*rank),
            OperatorName::Dual { rank } => dual_operator(*rank),
            OperatorName::Petrial { rank } => petrial_operator(*rank),
            OperatorName::DOp { in_rank, words } => one_vertex_operator(*in_rank, words.clone()),
            OperatorName::Section { in_rank, k, l } => section_operator(*in_rank, *k, *l),
            OperatorName::Medial => medial(),
            OperatorName::Truncation => truncation(),
            OperatorName::TruncDual => trunc_dual(),
            OperatorName::Wythoff02 => wythoff_02(),
            OperatorName::Omnitruncation { rank } => omnitruncation(*rank),
            OperatorName::Snub => snub_operator(),
            OperatorName::Pyramid { rank } => pyramid_operator(*rank),
            OperatorName::Prism { rank } => prism_operator(*rank),
            OperatorName::Trapezotope { rank } => trapezotope_operator(*rank),
            OperatorName::KBubble { rank, k } => k_bubble_operator(*rank, *k),
            OperatorName::MixWith { graph } => Ok(mix_operator(graph)),
            OperatorName::TwoOrbit {
                rank,
                semiedge_colors,
            } => Ok(mix_operator(&two_orbit(*rank, semiedge_colors)?)),
            OperatorName::Hat2 { base } => hat2_operator(base),
        }
    }
}

/// The one-vertex premaniplex with n semiedges.
pub fn one_vertex(rank: usize) -> Result<Premaniplex> {
    Premaniplex::new(rank, vec![vec![0]; rank])
}

/// The two-vertex premaniplex with semiedges on the given colors and links
/// on the rest.
pub fn two_orbit(rank: usize, semiedge_colors: &[usize]) -> Result<Premaniplex> {
    if let Some(&c) = semiedge_colors.iter().find(|&&c| c >= rank) {
        return Err(Error::InvalidGenerator { letter: c, rank });
    }
    let adjacency = (0..rank)
        .map(|i| {
            if semiedge_colors.contains(&i) {
                vec![0, 1]
            } else {
                vec![1, 0]
            }
        })
        .collect();
    Premaniplex::new(rank, adjacency)
}

/// A one-vertex operator: semiedge i carries `words[i]`.  Validation
/// enforces that each word is an involution and that words of
/// non-consecutive colors commute.
pub fn one_vertex_operator(in_rank: usize, words: Vec<GroupWord>) -> Result<VoltageOperator> {
    let graph = one_vertex(words.len())?;
    let volt = words.into_iter().map(|w| vec![w]).collect();
    VoltageOperator::new(in_rank, graph, volt)
}

/// `(1^n, [r_0, ..., r_{n-1}])`: the identity operation.
pub fn identity_operator(rank: usize) -> Result<VoltageOperator> {
    let words = (0..rank)
        .map(|i| GroupWord::generator(rank, i))
        .collect::<Result<_>>()?;
    one_vertex_operator(rank, words)
}

/// `(1^n, [r_{n-1}, ..., r_0])`: the dual.
pub fn dual_operator(rank: usize) -> Result<VoltageOperator> {
    let words = (0..rank)
        .rev()
        .map(|i| GroupWord::generator(rank, i))
        .collect::<Result<_>>()?;
    one_vertex_operator(rank, words)
}

/// `(1^n, [r_0, ..., r_{n-4}, r_{n-3} r_{n-1}, r_{n-2}, r_{n-1}])`: the
/// generalized Petrial.  Needs rank at least 3.
pub fn petrial_operator(rank: usize) -> Result<VoltageOperator> {
    if rank < 3 {
        return Err(Error::BadParameter(format!(
            "petrial needs rank >= 3, got {}",
            rank
        )));
    }
    let words = (0..rank)
        .map(|i| {
            if i == rank - 3 {
                GroupWord::new(rank, vec![rank - 3, rank - 1])
            } else {
                GroupWord::generator(rank, i)
            }
        })
        .collect::<Result<_>>()?;
    one_vertex_operator(rank, words)
}

/// `(1^{l-k-1}, [r_{k+1}, ..., r_{l-1}])`: the components of the result are
/// the (k,l)-sections of the input.
pub fn section_operator(in_rank: usize, k: isize, l: isize) -> Result<VoltageOperator> {
    let n = in_rank as isize;
    if !(-1 <= k && k < l && l <= n) || l - k - 1 < 1 {
        return Err(Error::BadSection {
            k,
            l,
            rank: in_rank,
        });
    }
    let words = ((k + 1)..l)
        .map(|i| GroupWord::generator(in_rank, i as usize))
        .collect::<Result<_>>()?;
    one_vertex_operator(in_rank, words)
}

/// The rank-3 medial operator: two vertices joined by a color-2 link.
pub fn medial() -> Result<VoltageOperator> {
    let graph = Premaniplex::new(3, vec![vec![0, 1], vec![0, 1], vec![1, 0]])?;
    let w = |letters: &[usize]| GroupWord::new(3, letters.to_vec());
    let volt = vec![
        vec![w(&[1])?, w(&[1])?],
        vec![w(&[0])?, w(&[2])?],
        vec![w(&[])?, w(&[])?],
    ];
    VoltageOperator::new(3, graph, volt)
}

/// The rank-3 truncation operator: a path a - b - c with links of colors 1
/// and 2.
pub fn truncation() -> Result<VoltageOperator> {
    let graph = Premaniplex::new(3, vec![vec![0, 1, 2], vec![1, 0, 2], vec![0, 2, 1]])?;
    let w = |letters: &[usize]| GroupWord::new(3, letters.to_vec());
    let volt = vec![
        vec![w(&[0])?, w(&[1])?, w(&[1])?],
        vec![w(&[])?, w(&[])?, w(&[2])?],
        vec![w(&[2])?, w(&[])?, w(&[])?],
    ];
    VoltageOperator::new(3, graph, volt)
}

/// The Wythoffian with ringed nodes {1, 2}: dual followed by truncation.
pub fn trunc_dual() -> Result<VoltageOperator> {
    dual_operator(3)?.compose(&truncation()?)
}

/// The Wythoffian with ringed nodes {0, 2}: medial twice.
pub fn wythoff_02() -> Result<VoltageOperator> {
    medial()?.compose(&medial()?)
}

/// The omnitruncation in rank n.  The underlying graph is the flag graph of
/// the (n-1)-simplex with all colors shifted up by one and trivial link
/// voltages; the color-0 semiedge at a flag gets `r_j` where `j` names the
/// simplex vertex the flag starts at.
pub fn omnitruncation(rank: usize) -> Result<VoltageOperator> {
    if rank < 2 {
        return Err(Error::BadParameter(format!(
            "omnitruncation needs rank >= 2, got {}",
            rank
        )));
    }
    let perms = permutations(rank);
    let index: HashMap<&Vec<usize>, usize> =
        perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let count = perms.len();
    let mut adjacency = vec![vec![0usize; count]; rank];
    let mut volt = vec![Vec::with_capacity(count); rank];
    for (id, p) in perms.iter().enumerate() {
        adjacency[0][id] = id;
        volt[0].push(GroupWord::generator(rank, p[0])?);
        for c in 1..rank {
            let mut q = p.clone();
            q.swap(c - 1, c);
            adjacency[c][id] = index[&q];
            volt[c].push(GroupWord::identity(rank));
        }
    }
    VoltageOperator::new(rank, Premaniplex::new(rank, adjacency)?, volt)
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    fn rec(
        n: usize,
        depth: usize,
        current: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if depth == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current[depth] = v;
                rec(n, depth + 1, current, used, out);
                used[v] = false;
            }
        }
    }
    rec(n, 0, &mut current, &mut used, &mut out);
    out
}

/// The pyramid operator: an (n, n+1)-operator on the path of vertices
/// -1, 0, ..., n.
pub fn pyramid_operator(rank: usize) -> Result<VoltageOperator> {
    if rank < 1 {
        return Err(Error::ZeroRank);
    }
    let n = rank as isize;
    let count = (n + 2) as usize;
    let idx = |t: isize| (t + 1) as usize;
    let mut adjacency = vec![vec![0usize; count]; rank + 1];
    let mut volt = vec![Vec::with_capacity(count); rank + 1];
    for t in -1..=n {
        for i in 0..=n {
            let target = if i == t {
                t - 1
            } else if i == t + 1 {
                t + 1
            } else {
                t
            };
            adjacency[i as usize][idx(t)] = idx(target);
            let word = if i == t || i == t + 1 {
                GroupWord::identity(rank)
            } else if i < t {
                GroupWord::generator(rank, i as usize)?
            } else {
                GroupWord::generator(rank, (i - 1) as usize)?
            };
            volt[i as usize].push(word);
        }
    }
    VoltageOperator::new(rank, Premaniplex::new(rank + 1, adjacency)?, volt)
}

/// The prism operator: an (n, n+1)-operator on vertices {0..n} x {0, 1}.
pub fn prism_operator(rank: usize) -> Result<VoltageOperator> {
    if rank < 1 {
        return Err(Error::ZeroRank);
    }
    let n = rank as isize;
    let count = 2 * (rank + 1);
    let idx = |t: isize, lambda: usize| 2 * t as usize + lambda;
    let mut adjacency = vec![vec![0usize; count]; rank + 1];
    let mut volt = vec![Vec::with_capacity(count); rank + 1];
    for t in 0..=n {
        for lambda in 0..2 {
            for i in 0..=n {
                let target = if i == 0 && t == 0 {
                    idx(0, 1 - lambda)
                } else if i == t {
                    idx(t - 1, lambda)
                } else if i == t + 1 {
                    idx(t + 1, lambda)
                } else {
                    idx(t, lambda)
                };
                adjacency[i as usize][idx(t, lambda)] = target;
                let word = if i == t || i == t + 1 {
                    GroupWord::identity(rank)
                } else if i < t {
                    GroupWord::generator(rank, i as usize)?
                } else {
                    GroupWord::generator(rank, (i - 1) as usize)?
                };
                volt[i as usize].push(word);
            }
        }
    }
    VoltageOperator::new(rank, Premaniplex::new(rank + 1, adjacency)?, volt)
}

/// The trapezotope operator: an (n, n+1)-operator on the 2^{n+1} bit
/// vectors.  Bits 0..n-1 record how the interval chain widens step by step
/// (0 = bottom drops, 1 = top rises) and bit n closes the cycle against the
/// improper greatest face, so the total number of zero bits determines the
/// starting rank.
pub fn trapezotope_operator(rank: usize) -> Result<VoltageOperator> {
    if rank < 1 {
        return Err(Error::ZeroRank);
    }
    let n = rank;
    let count = 1usize << (n + 1);
    let bit = |w: usize, j: usize| (w >> j) & 1;
    let mut adjacency = vec![vec![0usize; count]; n + 1];
    let mut volt = vec![Vec::with_capacity(count); n + 1];
    for w in 0..count {
        adjacency[0][w] = w ^ 1;
        volt[0].push(GroupWord::identity(rank));
        let zeros = (0..=n).filter(|&j| bit(w, j) == 0).count() as isize;
        let start_rank = zeros - 1;
        for i in 1..=n {
            let lo = bit(w, i - 1);
            let hi = bit(w, i % (n + 1));
            if lo == hi {
                adjacency[i][w] = w;
                let zeros_before = (0..i).filter(|&j| bit(w, j) == 0).count() as isize;
                let j = if lo == 0 {
                    start_rank - zeros_before
                } else {
                    start_rank + i as isize - zeros_before
                };
                debug_assert!(0 <= j && j < n as isize);
                volt[i].push(GroupWord::generator(rank, j as usize)?);
            } else {
                adjacency[i][w] = w ^ (1 << (i - 1)) ^ (1 << i);
                volt[i].push(GroupWord::identity(rank));
            }
        }
    }
    VoltageOperator::new(rank, Premaniplex::new(n + 1, adjacency)?, volt)
}

/// The k-bubble operator: an (n, n)-operator on the path of vertices
/// {k+1, ..., n}, generalizing truncation (k = 0).
pub fn k_bubble_operator(rank: usize, k: usize) -> Result<VoltageOperator> {
    if rank < 2 || k > rank - 2 {
        return Err(Error::BadParameter(format!(
            "k-bubble needs 0 <= k <= rank-2, got rank {}, k {}",
            rank, k
        )));
    }
    let n = rank;
    let count = n - k;
    let idx = |l: usize| l - (k + 1);
    let mut adjacency = vec![vec![0usize; count]; n];
    let mut volt = vec![Vec::with_capacity(count); n];
    for l in (k + 1)..=n {
        for i in 0..n {
            if i + 1 == l && l >= k + 2 {
                adjacency[i][idx(l)] = idx(l - 1);
                volt[i].push(GroupWord::identity(rank));
            } else if i == l && l + 1 <= n {
                adjacency[i][idx(l)] = idx(l + 1);
                volt[i].push(GroupWord::identity(rank));
            } else {
                adjacency[i][idx(l)] = idx(l);
                let j = if i < k {
                    i
                } else if i + 1 == l {
                    k
                } else if i + 2 <= l {
                    i + 1
                } else {
                    i
                };
                volt[i].push(GroupWord::generator(rank, j)?);
            }
        }
    }
    VoltageOperator::new(rank, Premaniplex::new(n, adjacency)?, volt)
}

/// The snub operator: ten vertices on a 10-cycle alternating colors 1 and 2
/// with trivial voltages, and five color-0 links carrying rotations.
///
/// The dart data is frozen from a reconstruction against the snub-cube flag
/// graph: the underlying graph is the quotient of that flag graph by its
/// full (rotation) automorphism group, and the color-0 words are the unique
/// choice of length-2 rotations (up to mirror) for which the product with
/// the cube gives two copies of the snub cube.  The mirrored choice gives
/// the other chirality; `tests/snub_reconstruction.rs` re-derives both.
pub fn snub_operator() -> Result<VoltageOperator> {
    let graph = Premaniplex::new(
        3,
        vec![
            vec![1, 0, 9, 4, 3, 8, 7, 6, 5, 2],
            vec![1, 0, 3, 2, 5, 4, 7, 6, 9, 8],
            vec![9, 2, 1, 4, 3, 6, 5, 8, 7, 0],
        ],
    )?;
    let color0: [&[usize]; 10] = [
        &[2, 1],
        &[1, 2],
        &[1, 2],
        &[0, 2],
        &[0, 2],
        &[1, 0],
        &[1, 0],
        &[0, 1],
        &[0, 1],
        &[2, 1],
    ];
    let mut volt = vec![Vec::with_capacity(10); 3];
    for v in 0..10 {
        volt[0].push(GroupWord::new(3, color0[v].to_vec())?);
        volt[1].push(GroupWord::identity(3));
        volt[2].push(GroupWord::identity(3));
    }
    VoltageOperator::new(3, graph, volt)
}

/// The hat-2 operator of a regular premaniplex `m`: an (n, n+1)-operator on
/// the 2^f bit vectors indexed by the facets of `m`.  Colors below n
/// permute facet coordinates through the distinguished generators with
/// voltage `r_i`; color n flips the base-facet bit with trivial voltage.
pub fn hat2_operator(m: &Premaniplex) -> Result<VoltageOperator> {
    let n = m.rank();
    let gens = symmetry::distinguished_generators(m, 0)?;
    // facets in first-visit order of a BFS from the base vertex
    let facet_colors: Vec<usize> = (0..n.saturating_sub(1)).collect();
    let facets = m.components_with_colors(&facet_colors);
    let mut facet_of = vec![usize::MAX; m.vertex_count()];
    for (f, facet) in facets.iter().enumerate() {
        for &v in facet {
            facet_of[v] = f;
        }
    }
    let mut order = Vec::new();
    let mut rank_of_facet = vec![usize::MAX; facets.len()];
    for v in bfs_order(m, 0) {
        let f = facet_of[v];
        if rank_of_facet[f] == usize::MAX {
            rank_of_facet[f] = order.len();
            order.push(f);
        }
    }
    let count_facets = facets.len();
    if count_facets > 20 {
        return Err(Error::BadParameter(format!(
            "2^{} vertices exceed the supported size",
            count_facets
        )));
    }
    // facet permutations induced by the distinguished generators,
    // in the BFS facet indexing
    let facet_perm: Vec<Vec<usize>> = gens
        .iter()
        .map(|g| {
            let mut p = vec![0usize; count_facets];
            for (f, facet) in facets.iter().enumerate() {
                p[rank_of_facet[f]] = rank_of_facet[facet_of[g[facet[0]]]];
            }
            p
        })
        .collect();
    let count = 1usize << count_facets;
    let mut adjacency = vec![vec![0usize; count]; n + 1];
    let mut volt = vec![Vec::with_capacity(count); n + 1];
    for w in 0..count {
        for i in 0..n {
            // (v rho)_j = v_{j rho^{-1}}; the generators are involutions
            let mut target = 0usize;
            for j in 0..count_facets {
                target |= ((w >> facet_perm[i][j]) & 1) << j;
            }
            adjacency[i][w] = target;
            volt[i].push(GroupWord::generator(n, i)?);
        }
        adjacency[n][w] = w ^ 1;
        volt[n].push(GroupWord::identity(n));
    }
    VoltageOperator::new(n, Premaniplex::new(n + 1, adjacency)?, volt)
}

fn bfs_order(x: &Premaniplex, start: usize) -> Vec<usize> {
    let mut seen = vec![false; x.vertex_count()];
    let mut order = Vec::new();
    let mut queue = std::collections::VecDeque::from([start]);
    seen[start] = true;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for i in 0..x.rank() {
            let u = x.neighbor(i, v);
            if !seen[u] {
                seen[u] = true;
                queue.push_back(u);
            }
        }
    }
    order
}

/// Combinatorial map data for the sample solids.
pub mod maps {
    use super::*;

    pub fn tetrahedron() -> MapSpec {
        MapSpec::from_faces(
            4,
            vec![vec![0, 1, 2], vec![0, 3, 1], vec![1, 3, 2], vec![0, 2, 3]],
        )
        .expect("tetrahedron data")
    }

    pub fn cube() -> MapSpec {
        MapSpec::from_faces(
            8,
            vec![
                vec![0, 1, 3, 2],
                vec![4, 6, 7, 5],
                vec![0, 4, 5, 1],
                vec![2, 3, 7, 6],
                vec![0, 2, 6, 4],
                vec![1, 5, 7, 3],
            ],
        )
        .expect("cube data")
    }

    pub fn octahedron() -> MapSpec {
        MapSpec::from_faces(
            6,
            vec![
                vec![0, 2, 4],
                vec![2, 1, 4],
                vec![1, 3, 4],
                vec![3, 0, 4],
                vec![2, 0, 5],
                vec![1, 2, 5],
                vec![3, 1, 5],
                vec![0, 3, 5],
            ],
        )
        .expect("octahedron data")
    }

    pub fn icosahedron() -> MapSpec {
        let mut faces = Vec::with_capacity(20);
        let u = |k: usize| 1 + k % 5;
        let l = |k: usize| 6 + k % 5;
        for k in 0..5 {
            faces.push(vec![0, u(k), u(k + 1)]);
            faces.push(vec![u(k), u(k + 1), l(k)]);
            faces.push(vec![l(k), l(k + 1), u(k + 1)]);
            faces.push(vec![11, l(k + 1), l(k)]);
        }
        MapSpec::from_faces(12, faces).expect("icosahedron data")
    }

    pub fn dodecahedron() -> MapSpec {
        icosahedron().dual().expect("icosahedron dual")
    }

    /// Three squares through four vertices: the quotient of the cube
    /// boundary by the antipodal map, on the projective plane.
    pub fn hemicube() -> MapSpec {
        MapSpec::from_faces(
            4,
            vec![vec![0, 2, 1, 3], vec![0, 1, 3, 2], vec![0, 1, 2, 3]],
        )
        .expect("hemicube data")
    }

    /// The {4,4} torus map on an a-by-a square grid; needs `a >= 3` so that
    /// edges stay simple.
    pub fn torus_44(a: usize) -> Result<MapSpec> {
        if a < 3 {
            return Err(Error::BadParameter(format!(
                "torus grid needs a >= 3, got {}",
                a
            )));
        }
        let v = |i: usize, j: usize| (i % a) * a + (j % a);
        let mut faces = Vec::with_capacity(a * a);
        for i in 0..a {
            for j in 0..a {
                faces.push(vec![v(i, j), v(i + 1, j), v(i + 1, j + 1), v(i, j + 1)]);
            }
        }
        MapSpec::from_faces(a * a, faces)
    }

    pub fn cuboctahedron() -> Result<MapSpec> {
        cube().medial()
    }

    pub fn truncated_tetrahedron() -> Result<MapSpec> {
        tetrahedron().truncated()
    }

    pub fn truncated_cube() -> Result<MapSpec> {
        cube().truncated()
    }

    pub fn truncated_octahedron() -> Result<MapSpec> {
        octahedron().truncated()
    }

    pub fn rhombicuboctahedron() -> Result<MapSpec> {
        cube().medial()?.medial()
    }

    pub fn great_rhombicuboctahedron() -> Result<MapSpec> {
        cube().medial()?.truncated()
    }

    pub fn snub_cube() -> Result<MapSpec> {
        cube().snub()
    }
}

/// The flag graph of the regular p-gon: a 2p-cycle alternating colors 0, 1.
pub fn polygon(p: usize) -> Result<Premaniplex> {
    if p == 0 {
        return Err(Error::BadParameter("polygon needs p >= 1".into()));
    }
    let count = 2 * p;
    let sigma0 = (0..count).map(|v| v ^ 1).collect();
    let sigma1 = (0..count)
        .map(|v| {
            if v % 2 == 1 {
                (v + 1) % count
            } else {
                (v + count - 1) % count
            }
        })
        .collect();
    Premaniplex::new(2, vec![sigma0, sigma1])
}

/// The flag graph of the (n-1)-simplex: vertices are the orderings of its n
/// corners and sigma_i swaps positions i and i+1.
pub fn simplex_flag(n: usize) -> Result<Premaniplex> {
    if n < 2 {
        return Err(Error::BadParameter(
            "simplex flag graph needs n >= 2".into(),
        ));
    }
    let perms = permutations(n);
    let index: HashMap<&Vec<usize>, usize> =
        perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let adjacency = (0..n - 1)
        .map(|i| {
            perms
                .iter()
                .map(|p| {
                    let mut q = p.clone();
                    q.swap(i, i + 1);
                    index[&q]
                })
                .collect()
        })
        .collect();
    Premaniplex::new(n - 1, adjacency)
}

/// The hemicube flag graph, built as the spec'd quotient of the cube by its
/// central automorphism.
fn hemicube_flags() -> Result<Premaniplex> {
    let cube = maps::cube().flag_graph()?;
    let aut = symmetry::automorphisms(&cube)?;
    let central = aut
        .elements()
        .iter()
        .find(|g| {
            !crate::perm::is_identity(g)
                && aut
                    .elements()
                    .iter()
                    .all(|h| crate::perm::compose(g, h) == crate::perm::compose(h, g))
        })
        .cloned()
        .ok_or_else(|| Error::BadParameter("cube has no central involution".into()))?;
    symmetry::quotient(&cube, &[central])
}

/// Sample premaniplexes by name.  Parameters: `polygon(p)`, `torus_44(a)`,
/// `simplex_flag(n)`, `one_vertex(rank)`, `two_orbit(rank, colors...)`.
pub fn sample(name: &str, params: &[usize]) -> Result<Premaniplex> {
    let need = |k: usize| -> Result<()> {
        if params.len() < k {
            Err(Error::BadParameter(format!(
                "{} needs {} parameter(s)",
                name, k
            )))
        } else {
            Ok(())
        }
    };
    match name {
        "one_vertex" => {
            need(1)?;
            one_vertex(params[0])
        }
        "two_orbit" => {
            need(1)?;
            two_orbit(params[0], &params[1..])
        }
        "polygon" => {
            need(1)?;
            polygon(params[0])
        }
        "digon" => polygon(2),
        "simplex_flag" => {
            need(1)?;
            simplex_flag(params[0])
        }
        "tetrahedron" => maps::tetrahedron().flag_graph(),
        "cube" => maps::cube().flag_graph(),
        "octahedron" => maps::octahedron().flag_graph(),
        "dodecahedron" => maps::dodecahedron().flag_graph(),
        "icosahedron" => maps::icosahedron().flag_graph(),
        "cuboctahedron" => maps::cuboctahedron()?.flag_graph(),
        "truncated_tetrahedron" => maps::truncated_tetrahedron()?.flag_graph(),
        "truncated_cube" => maps::truncated_cube()?.flag_graph(),
        "truncated_octahedron" => maps::truncated_octahedron()?.flag_graph(),
        "rhombicuboctahedron" => maps::rhombicuboctahedron()?.flag_graph(),
        "great_rhombicuboctahedron" => maps::great_rhombicuboctahedron()?.flag_graph(),
        "snub_cube" => maps::snub_cube()?.flag_graph(),
        "hemicube" => hemicube_flags(),
        "torus_44" => {
            need(1)?;
            maps::torus_44(params[0])?.flag_graph()
        }
        "square_pyramid" => pyramid_operator(2)?.apply(&polygon(4)?),
        _ => Err(Error::UnknownName(name.into())),
    }
}

pub const SAMPLE_NAMES: &[&str] = &[
    "one_vertex",
    "two_orbit",
    "polygon",
    "digon",
    "simplex_flag",
    "tetrahedron",
    "cube",
    "octahedron",
    "dodecahedron",
    "icosahedron",
    "cuboctahedron",
    "truncated_tetrahedron",
    "truncated_cube",
    "truncated_octahedron",
    "rhombicuboctahedron",
    "great_rhombicuboctahedron",
    "snub_cube",
    "hemicube",
    "torus_44",
    "square_pyramid",
];

pub const OPERATOR_NAMES: &[&str] = &[
    "identity",
    "dual",
    "petrial",
    "section",
    "medial",
    "truncation",
    "trunc_dual",
    "wythoff_02",
    "omnitruncation",
    "snub",
    "pyramid",
    "prism",
    "trapezotope",
    "k_bubble",
    "mix",
    "hat2",
];

/// Resolves an operator by catalog name.  `rank` defaults to 3; `params`
/// feeds section bounds and the k-bubble parameter; `input` supplies the
/// premaniplex for `mix` and `hat2`.
pub fn operator_by_name(
    name: &str,
    rank: Option<usize>,
    params: &[i64],
    input: Option<&Premaniplex>,
) -> Result<VoltageOperator> {
    let rank = rank.unwrap_or(3);
    let need_input = |what: &str| {
        input
            .cloned()
            .ok_or_else(|| Error::BadParameter(format!("{} needs an input premaniplex", what)))
    };
    let named = match name {
        "identity" => OperatorName::Identity { rank },
        "dual" => OperatorName::Dual { rank },
        "petrial" => OperatorName::Petrial { rank },
        "section" => {
            if params.len() < 2 {
                return Err(Error::BadParameter("section needs parameters k,l".into()));
            }
            OperatorName::Section {
                in_rank: rank,
                k: params[0] as isize,
                l: params[1] as isize,
            }
        }
        "medial" => OperatorName::Medial,
        "truncation" => OperatorName::Truncation,
        "trunc_dual" => OperatorName::TruncDual,
        "wythoff_02" => OperatorName::Wythoff02,
        "omnitruncation" => OperatorName::Omnitruncation { rank },
        "snub" => OperatorName::Snub,
        "pyramid" => OperatorName::Pyramid { rank },
        "prism" => OperatorName::Prism { rank },
        "trapezotope" => OperatorName::Trapezotope { rank },
        "k_bubble" => {
            if params.is_empty() {
                return Err(Error::BadParameter("k_bubble needs parameter k".into()));
            }
            OperatorName::KBubble {
                rank,
                k: params[0] as usize,
            }
        }
        "mix" => OperatorName::MixWith {
            graph: need_input("mix")?,
        },
        "hat2" => OperatorName::Hat2 {
            base: need_input("hat2")?,
        },
        _ => return Err(Error::UnknownName(name.into())),
    };
    named.build()
}
