//! Voltage operators and the product `X ⋊ Y`.
//!
//! An (n,m)-voltage operator is an m-premaniplex whose darts carry words of
//! the rank-n universal string Coxeter group, inverse-consistently and with
//! identity voltage on every alternating 4-path of non-consecutive colors.
//! Applying it to an n-premaniplex X yields the m-premaniplex with vertex
//! set X x Y and `sigma_i(x, y) = (volt(i, y) x, sigma_i y)`.
//!
//! Voltages compose against the path direction: the voltage of a path
//! `d_1 ... d_k` is `volt(d_k) ... volt(d_1)`.

use crate::perm;
use crate::premaniplex::{Premaniplex, RootedPremaniplex};
use crate::words::GroupWord;
use crate::{Error, Result};
use std::collections::{HashMap, VecDeque};
use std::fmt;

/// Default bound on voltage-group closure in [`FinVoltagePremaniplex::derived_graph`].
pub const DEFAULT_GROUP_BOUND: usize = 1_000_000;

/// A violation found when validating a voltage assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VoltageViolation {
    /// The two darts of an edge do not carry mutually inverse voltages.
    InverseInconsistent { color: usize, vertex: usize },
    /// The alternating 4-path at `vertex` with the given non-consecutive
    /// colors has non-identity voltage.
    PathVoltageNotIdentity {
        colors: (usize, usize),
        vertex: usize,
    },
}

impl fmt::Display for VoltageViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VoltageViolation::InverseInconsistent { color, vertex } => {
                write!(
                    f,
                    "dart voltages of color {} at vertex {} are not mutually inverse",
                    color, vertex
                )
            }
            VoltageViolation::PathVoltageNotIdentity { colors, vertex } => write!(
                f,
                "alternating ({},{})-path at vertex {} has non-identity voltage",
                colors.0, colors.1, vertex
            ),
        }
    }
}

/// An (n,m)-voltage operator: an m-premaniplex with rank-n word voltages.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VoltageOperator {
    in_rank: usize,
    graph: Premaniplex,
    /// `volt[i][y]` is the voltage of the color-i dart starting at `y`.
    volt: Vec<Vec<GroupWord>>,
}

impl VoltageOperator {
    /// Builds an operator and checks shape; voltage invariants are checked
    /// by [`validate`].
    ///
    /// [`validate`]: VoltageOperator::validate
    pub fn from_parts(
        in_rank: usize,
        graph: Premaniplex,
        volt: Vec<Vec<GroupWord>>,
    ) -> Result<Self> {
        if in_rank == 0 {
            return Err(Error::ZeroRank);
        }
        if volt.len() != graph.rank() {
            return Err(Error::BadShape(format!(
                "expected {} voltage rows, got {}",
                graph.rank(),
                volt.len()
            )));
        }
        for (i, row) in volt.iter().enumerate() {
            if row.len() != graph.vertex_count() {
                return Err(Error::BadShape(format!(
                    "voltage row {} has {} entries, expected {}",
                    i,
                    row.len(),
                    graph.vertex_count()
                )));
            }
            if let Some(w) = row.iter().find(|w| w.rank() != in_rank) {
                return Err(Error::RankMismatch {
                    left: w.rank(),
                    right: in_rank,
                });
            }
        }
        Ok(VoltageOperator {
            in_rank,
            graph,
            volt,
        })
    }

    /// As [`VoltageOperator::from_parts`] but also requires the underlying
    /// graph and the voltages to validate.
    pub fn new(in_rank: usize, graph: Premaniplex, volt: Vec<Vec<GroupWord>>) -> Result<Self> {
        graph.validate().map_err(Error::InvalidPremaniplex)?;
        let op = Self::from_parts(in_rank, graph, volt)?;
        op.validate().map_err(Error::InvalidVoltages)?;
        Ok(op)
    }

    pub fn in_rank(&self) -> usize {
        self.in_rank
    }

    pub fn out_rank(&self) -> usize {
        self.graph.rank()
    }

    pub fn graph(&self) -> &Premaniplex {
        &self.graph
    }

    pub fn voltage(&self, color: usize, y: usize) -> &GroupWord {
        &self.volt[color][y]
    }

    pub fn voltages(&self) -> &[Vec<GroupWord>] {
        &self.volt
    }

    /// Checks inverse-consistency on every edge and the identity voltage of
    /// every alternating 4-path with non-consecutive colors.
    pub fn validate(&self) -> std::result::Result<(), VoltageViolation> {
        let count = self.graph.vertex_count();
        for i in 0..self.graph.rank() {
            for y in 0..count {
                let back = &self.volt[i][self.graph.neighbor(i, y)];
                if back != &self.volt[i][y].inverse() {
                    return Err(VoltageViolation::InverseInconsistent {
                        color: i,
                        vertex: y,
                    });
                }
            }
        }
        for i in 0..self.graph.rank() {
            for j in i + 2..self.graph.rank() {
                for y in 0..count {
                    let w = self
                        .path_voltage_by_colors(y, &[i, j, i, j])
                        .expect("colors in range");
                    if !w.0.is_identity() {
                        return Err(VoltageViolation::PathVoltageNotIdentity {
                            colors: (i, j),
                            vertex: y,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Walks from `start` along the given colors (first color first) and
    /// returns the endpoint together with the path voltage.
    fn path_voltage_by_colors(&self, start: usize, colors: &[usize]) -> Result<(GroupWord, usize)> {
        let mut v = start;
        let mut acc = GroupWord::identity(self.in_rank);
        for &i in colors {
            if i >= self.graph.rank() {
                return Err(Error::InvalidGenerator {
                    letter: i,
                    rank: self.graph.rank(),
                });
            }
            acc = self.volt[i][v].multiply(&acc)?;
            v = self.graph.neighbor(i, v);
        }
        Ok((acc, v))
    }

    /// The voltage of an explicit dart path.  Darts are (color, start
    /// vertex) pairs; consecutive darts must be compatible.  The empty path
    /// has identity voltage.
    pub fn path_voltage(&self, path: &[(usize, usize)]) -> Result<GroupWord> {
        let mut acc = GroupWord::identity(self.in_rank);
        let mut position = None;
        for &(i, y) in path {
            if i >= self.graph.rank() {
                return Err(Error::InvalidGenerator {
                    letter: i,
                    rank: self.graph.rank(),
                });
            }
            if y >= self.graph.vertex_count() {
                return Err(Error::VertexOutOfRange {
                    vertex: y,
                    count: self.graph.vertex_count(),
                });
            }
            if let Some(at) = position {
                if at != y {
                    return Err(Error::BadShape(format!(
                        "dart ({}, {}) does not start where the previous dart ended ({})",
                        i, y, at
                    )));
                }
            }
            acc = self.volt[i][y].multiply(&acc)?;
            position = Some(self.graph.neighbor(i, y));
        }
        Ok(acc)
    }

    /// Walks from `start` reading a rank-m word (rightmost letter first) and
    /// returns the endpoint and accumulated voltage.  This is the map
    /// `theta` used both for composition and for voltage transfer.
    pub fn read_word(&self, start: usize, w: &GroupWord) -> Result<(GroupWord, usize)> {
        if w.rank() != self.graph.rank() {
            return Err(Error::RankMismatch {
                left: w.rank(),
                right: self.graph.rank(),
            });
        }
        let colors: Vec<usize> = w.letters().iter().rev().copied().collect();
        self.path_voltage_by_colors(start, &colors)
    }

    /// The product `X ⋊ Y`.  Vertex `(x, y)` has index `x * |Y| + y`, and
    /// `sigma_i(x, y) = (volt(i, y) x, sigma_i y)`.
    pub fn apply(&self, x: &Premaniplex) -> Result<Premaniplex> {
        if x.rank() != self.in_rank {
            return Err(Error::RankMismatch {
                left: x.rank(),
                right: self.in_rank,
            });
        }
        let m = self.graph.vertex_count();
        let xn = x.vertex_count();
        let mut adjacency = vec![vec![0usize; xn * m]; self.graph.rank()];
        for i in 0..self.graph.rank() {
            for y in 0..m {
                let ty = self.graph.neighbor(i, y);
                let w = &self.volt[i][y];
                for xv in 0..xn {
                    adjacency[i][xv * m + y] = x.act_unchecked(w, xv) * m + ty;
                }
            }
        }
        Premaniplex::new(self.graph.rank(), adjacency)
    }

    /// The connected component of `(x.root, y)` in the product.
    pub fn apply_rooted(&self, x: &RootedPremaniplex, y: usize) -> Result<RootedPremaniplex> {
        if y >= self.graph.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: y,
                count: self.graph.vertex_count(),
            });
        }
        let product = self.apply(&x.graph)?;
        product.component_of(x.root * self.graph.vertex_count() + y)
    }

    /// True iff every voltage is the single generator of its dart color.
    pub fn is_mixing(&self) -> bool {
        if self.in_rank != self.graph.rank() {
            return false;
        }
        (0..self.graph.rank()).all(|i| self.volt[i].iter().all(|w| w.letters() == [i]))
    }

    /// Voltages of a generating set of the fundamental group at `y0`: for
    /// each dart outside a BFS spanning tree, the voltage of the closed path
    /// that reaches it through the tree.
    pub fn fundamental_voltages(&self, y0: usize) -> Result<Vec<GroupWord>> {
        if !self.graph.is_connected() {
            return Err(Error::Disconnected);
        }
        if y0 >= self.graph.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: y0,
                count: self.graph.vertex_count(),
            });
        }
        let m = self.graph.vertex_count();
        let mut tree_voltage: Vec<Option<GroupWord>> = vec![None; m];
        let mut tree_dart = vec![false; self.graph.rank() * m];
        tree_voltage[y0] = Some(GroupWord::identity(self.in_rank));
        let mut queue = VecDeque::from([y0]);
        while let Some(u) = queue.pop_front() {
            for i in 0..self.graph.rank() {
                let v = self.graph.neighbor(i, u);
                if tree_voltage[v].is_none() {
                    tree_voltage[v] =
                        Some(self.volt[i][u].multiply(tree_voltage[u].as_ref().unwrap())?);
                    tree_dart[i * m + u] = true;
                    tree_dart[i * m + v] = true;
                    queue.push_back(v);
                }
            }
        }
        let mut generators = Vec::new();
        for i in 0..self.graph.rank() {
            for u in 0..m {
                if tree_dart[i * m + u] {
                    continue;
                }
                let v = self.graph.neighbor(i, u);
                let to_u = tree_voltage[u].as_ref().unwrap();
                let from_v = tree_voltage[v].as_ref().unwrap().inverse();
                generators.push(from_v.multiply(&self.volt[i][u])?.multiply(to_u)?);
            }
        }
        Ok(generators)
    }

    /// The orbit of `x_start` under the image of the fundamental group at
    /// `y0`, as a membership vector.
    pub fn voltage_orbit(&self, x: &Premaniplex, x_start: usize, y0: usize) -> Result<Vec<bool>> {
        if x.rank() != self.in_rank {
            return Err(Error::RankMismatch {
                left: x.rank(),
                right: self.in_rank,
            });
        }
        if x_start >= x.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: x_start,
                count: x.vertex_count(),
            });
        }
        let generators = self.fundamental_voltages(y0)?;
        let mut seen = vec![false; x.vertex_count()];
        seen[x_start] = true;
        let mut queue = VecDeque::from([x_start]);
        while let Some(v) = queue.pop_front() {
            for g in &generators {
                let u = x.act_unchecked(g, v);
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        Ok(seen)
    }

    /// Decides connectivity of `X ⋊ Y` without building the product: the
    /// orbit of vertex 0 of `X` under the voltages of the fundamental cycles
    /// at `y0` (non-tree darts conjugated by tree paths) must be all of `X`.
    pub fn is_product_connected(&self, x: &Premaniplex, y0: usize) -> Result<bool> {
        if !x.is_connected() {
            return Err(Error::Disconnected);
        }
        let orbit = self.voltage_orbit(x, 0, y0)?;
        Ok(orbit.iter().all(|&b| b))
    }

    /// The composite operator: applying the result is the same as applying
    /// `self` and then `second`.  Its underlying graph is
    /// `self.graph ⋊ second`, and the voltage of the color-i dart at
    /// `(y1, y2)` is the voltage of the walk in `self.graph` from `y1`
    /// reading `second`'s dart voltage.
    pub fn compose(&self, second: &VoltageOperator) -> Result<VoltageOperator> {
        if self.graph.rank() != second.in_rank {
            return Err(Error::RankMismatch {
                left: self.graph.rank(),
                right: second.in_rank,
            });
        }
        let graph = second.apply(&self.graph)?;
        let m2 = second.graph.vertex_count();
        let mut volt = vec![Vec::with_capacity(graph.vertex_count()); graph.rank()];
        for i in 0..graph.rank() {
            for y1 in 0..self.graph.vertex_count() {
                for y2 in 0..m2 {
                    let (theta, _) = self.read_word(y1, second.voltage(i, y2))?;
                    volt[i].push(theta);
                }
            }
        }
        VoltageOperator::new(self.in_rank, graph, volt)
    }

    /// An equivalent operator with identity voltage on a BFS spanning tree
    /// rooted at `root`; all remaining voltages lie in the image of the
    /// fundamental group at the root.
    pub fn normalize_voltages(&self, root: usize) -> Result<VoltageOperator> {
        if !self.graph.is_connected() {
            return Err(Error::Disconnected);
        }
        if root >= self.graph.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: root,
                count: self.graph.vertex_count(),
            });
        }
        let m = self.graph.vertex_count();
        let mut q: Vec<Option<GroupWord>> = vec![None; m];
        q[root] = Some(GroupWord::identity(self.in_rank));
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for i in 0..self.graph.rank() {
                let v = self.graph.neighbor(i, u);
                if q[v].is_none() {
                    q[v] = Some(self.volt[i][u].multiply(q[u].as_ref().unwrap())?);
                    queue.push_back(v);
                }
            }
        }
        let mut volt = vec![Vec::with_capacity(m); self.graph.rank()];
        for i in 0..self.graph.rank() {
            for u in 0..m {
                let v = self.graph.neighbor(i, u);
                let w = q[v]
                    .as_ref()
                    .unwrap()
                    .inverse()
                    .multiply(&self.volt[i][u])?
                    .multiply(q[u].as_ref().unwrap())?;
                volt[i].push(w);
            }
        }
        VoltageOperator::new(self.in_rank, self.graph.clone(), volt)
    }
}

/// The mixing operator on `Y`: every color-i dart gets voltage `r_i`.
pub fn mix_operator(y: &Premaniplex) -> VoltageOperator {
    let volt = (0..y.rank())
        .map(|i| vec![GroupWord::generator(y.rank(), i).unwrap(); y.vertex_count()])
        .collect();
    VoltageOperator {
        in_rank: y.rank(),
        graph: y.clone(),
        volt,
    }
}

/// The mix `X ⋄ Y` of two premaniplexes of equal rank.
pub fn mix(x: &Premaniplex, y: &Premaniplex) -> Result<Premaniplex> {
    if x.rank() != y.rank() {
        return Err(Error::RankMismatch {
            left: x.rank(),
            right: y.rank(),
        });
    }
    mix_operator(y).apply(x)
}

/// Checks whether `(x, y) -> (y, x)` is an isomorphism between
/// `Y1 ⋊_{op2} Y2` and `Y2 ⋊_{op1} Y1`.  Both operators must be (n,n).
pub fn swap_iso_check(op1: &VoltageOperator, op2: &VoltageOperator) -> Result<bool> {
    for op in [op1, op2] {
        if op.in_rank() != op.out_rank() {
            return Err(Error::RankMismatch {
                left: op.in_rank(),
                right: op.out_rank(),
            });
        }
    }
    if op1.in_rank() != op2.in_rank() {
        return Err(Error::RankMismatch {
            left: op1.in_rank(),
            right: op2.in_rank(),
        });
    }
    let p = op2.apply(op1.graph())?;
    let q = op1.apply(op2.graph())?;
    let (n1, n2) = (op1.graph().vertex_count(), op2.graph().vertex_count());
    for x in 0..n1 {
        for y in 0..n2 {
            for i in 0..p.rank() {
                let t = p.neighbor(i, x * n2 + y);
                let (tx, ty) = (t / n2, t % n2);
                if q.neighbor(i, y * n1 + x) != ty * n1 + tx {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Re-gauges an operator at a single vertex: with `q` the given word at
/// `vertex` and the identity elsewhere, every dart voltage `xi(d: a -> b)`
/// becomes `q_b^{-1} xi(d) q_a`.  The result is an equivalent operator.
pub fn gauge_twist(op: &VoltageOperator, vertex: usize, q: &GroupWord) -> Result<VoltageOperator> {
    if q.rank() != op.in_rank() {
        return Err(Error::RankMismatch {
            left: q.rank(),
            right: op.in_rank(),
        });
    }
    if vertex >= op.graph().vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex,
            count: op.graph().vertex_count(),
        });
    }
    let mut volt = op.volt.clone();
    for i in 0..op.graph().rank() {
        for u in 0..op.graph().vertex_count() {
            let v = op.graph().neighbor(i, u);
            let mut w = op.volt[i][u].clone();
            if u == vertex {
                w = w.multiply(q)?;
            }
            if v == vertex {
                w = q.inverse().multiply(&w)?;
            }
            volt[i][u] = w;
        }
    }
    VoltageOperator::new(op.in_rank, op.graph.clone(), volt)
}

/// Lifts an automorphism `gamma` of `X` to `X ⋊ Y`: `(x, y) -> (x gamma, y)`.
pub fn lift_automorphism(gamma: &[usize], y_count: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(gamma.len() * y_count);
    for x in 0..gamma.len() {
        for y in 0..y_count {
            out.push(gamma[x] * y_count + y);
        }
    }
    out
}

/// Bounded equivalence check: true iff for every premaniplex in `testbed`
/// the two products are isomorphic by a map commuting with the projection
/// to the underlying graph.  This is a necessary condition for equivalence,
/// decided only on the given testbed.
pub fn operators_equivalent(
    op1: &VoltageOperator,
    op2: &VoltageOperator,
    testbed: &[&Premaniplex],
) -> Result<bool> {
    if op1.in_rank() != op2.in_rank() || op1.graph() != op2.graph() {
        return Err(Error::MismatchedOperators);
    }
    let m = op1.graph().vertex_count();
    for x in testbed {
        let p1 = op1.apply(x)?;
        let p2 = op2.apply(x)?;
        if fiber_preserving_iso(&p1, &p2, m).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Searches for an isomorphism between two products over the same `Y` (with
/// `|Y| = m`) that fixes the second coordinate.  Components are matched with
/// backtracking; within a component the extension is forced.
pub(crate) fn fiber_preserving_iso(
    p1: &Premaniplex,
    p2: &Premaniplex,
    m: usize,
) -> Option<Vec<usize>> {
    let count = p1.vertex_count();
    if p2.vertex_count() != count || p1.rank() != p2.rank() {
        return None;
    }
    let mut image = vec![usize::MAX; count];
    let mut used = vec![false; count];
    fn fill(
        p1: &Premaniplex,
        p2: &Premaniplex,
        m: usize,
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let base = match image.iter().position(|&v| v == usize::MAX) {
            Some(v) => v,
            None => return true,
        };
        let y = base % m;
        for x2 in 0..p2.vertex_count() / m {
            let target = x2 * m + y;
            if used[target] {
                continue;
            }
            let snapshot = image.to_vec();
            if p1.extend_mapping(p2, base, target, image, used) && fill(p1, p2, m, image, used) {
                return true;
            }
            for v in 0..image.len() {
                if image[v] != snapshot[v] {
                    if image[v] != usize::MAX {
                        used[image[v]] = false;
                    }
                    image[v] = snapshot[v];
                }
            }
        }
        false
    }
    if fill(p1, p2, m, &mut image, &mut used) {
        // forced extensions preserve fibers once seeded on the fiber
        debug_assert!((0..count).all(|v| image[v] % m == v % m));
        Some(image)
    } else {
        None
    }
}

/// A premaniplex with voltages in a concrete permutation group on a finite
/// set.  Permutations multiply diagrammatically ([`perm::compose`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinVoltagePremaniplex {
    graph: Premaniplex,
    degree: usize,
    /// `volt[i][x]` is a permutation of `0..degree`.
    volt: Vec<Vec<Vec<usize>>>,
    /// Optional explicit element list for the voltage group.
    group: Option<Vec<Vec<usize>>>,
}

impl FinVoltagePremaniplex {
    pub fn from_parts(
        graph: Premaniplex,
        degree: usize,
        volt: Vec<Vec<Vec<usize>>>,
        group: Option<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        if volt.len() != graph.rank() {
            return Err(Error::BadShape(format!(
                "expected {} voltage rows, got {}",
                graph.rank(),
                volt.len()
            )));
        }
        for row in &volt {
            if row.len() != graph.vertex_count() {
                return Err(Error::BadShape("voltage row length mismatch".into()));
            }
            for p in row {
                if p.len() != degree || !perm::is_permutation(p) {
                    return Err(Error::BadShape(format!(
                        "voltage is not a permutation of 0..{}",
                        degree
                    )));
                }
            }
        }
        if let Some(elements) = &group {
            for p in elements {
                if p.len() != degree || !perm::is_permutation(p) {
                    return Err(Error::BadShape("group element is not a permutation".into()));
                }
            }
        }
        Ok(FinVoltagePremaniplex {
            graph,
            degree,
            volt,
            group,
        })
    }

    pub fn new(
        graph: Premaniplex,
        degree: usize,
        volt: Vec<Vec<Vec<usize>>>,
        group: Option<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        graph.validate().map_err(Error::InvalidPremaniplex)?;
        let vp = Self::from_parts(graph, degree, volt, group)?;
        vp.validate().map_err(Error::InvalidVoltages)?;
        Ok(vp)
    }

    pub fn graph(&self) -> &Premaniplex {
        &self.graph
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn voltage(&self, color: usize, x: usize) -> &[usize] {
        &self.volt[color][x]
    }

    pub fn voltages(&self) -> &[Vec<Vec<usize>>] {
        &self.volt
    }

    pub fn group(&self) -> Option<&[Vec<usize>]> {
        self.group.as_deref()
    }

    pub fn validate(&self) -> std::result::Result<(), VoltageViolation> {
        let count = self.graph.vertex_count();
        for i in 0..self.graph.rank() {
            for x in 0..count {
                let back = &self.volt[i][self.graph.neighbor(i, x)];
                if *back != perm::inverse(&self.volt[i][x]) {
                    return Err(VoltageViolation::InverseInconsistent {
                        color: i,
                        vertex: x,
                    });
                }
            }
        }
        for i in 0..self.graph.rank() {
            for j in i + 2..self.graph.rank() {
                for x in 0..count {
                    let mut acc = perm::identity(self.degree);
                    let mut v = x;
                    for &c in &[j, i, j, i] {
                        acc = perm::compose(&self.volt[c][v], &acc);
                        v = self.graph.neighbor(c, v);
                    }
                    if !perm::is_identity(&acc) {
                        return Err(VoltageViolation::PathVoltageNotIdentity {
                            colors: (i, j),
                            vertex: x,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Walks from `start` reading a word over the graph's colors and returns
    /// the endpoint together with the accumulated permutation voltage.
    pub fn read_word(&self, start: usize, w: &GroupWord) -> Result<(Vec<usize>, usize)> {
        if w.rank() != self.graph.rank() {
            return Err(Error::RankMismatch {
                left: w.rank(),
                right: self.graph.rank(),
            });
        }
        let mut acc = perm::identity(self.degree);
        let mut v = start;
        for &i in w.letters().iter().rev() {
            acc = perm::compose(&self.volt[i][v], &acc);
            v = self.graph.neighbor(i, v);
        }
        Ok((acc, v))
    }

    /// The derived cover: vertices are pairs of a vertex and a group
    /// element, with `sigma_i(x, g) = (sigma_i x, volt(i, x) g)`.
    ///
    /// The voltage group is the explicit element list when given, otherwise
    /// the closure of the dart voltages; closure beyond `bound` elements is
    /// an error, never a truncation.
    pub fn derived_graph_bounded(&self, bound: usize) -> Result<Premaniplex> {
        let elements = match &self.group {
            Some(list) => list.clone(),
            None => {
                let mut gens: Vec<Vec<usize>> = Vec::new();
                for row in &self.volt {
                    for p in row {
                        if !gens.contains(p) {
                            gens.push(p.clone());
                        }
                    }
                }
                perm::close_group(self.degree, &gens, bound)
                    .ok_or(Error::GroupTooLarge { bound })?
            }
        };
        let index: HashMap<&Vec<usize>, usize> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let order = elements.len();
        let count = self.graph.vertex_count();
        let mut adjacency = vec![vec![0usize; count * order]; self.graph.rank()];
        for i in 0..self.graph.rank() {
            for x in 0..count {
                let tx = self.graph.neighbor(i, x);
                for (g, element) in elements.iter().enumerate() {
                    let product = perm::compose(&self.volt[i][x], element);
                    let tg = *index
                        .get(&product)
                        .ok_or_else(|| Error::BadShape("voltage group is not closed".into()))?;
                    adjacency[i][x * order + g] = tx * order + tg;
                }
            }
        }
        let out = Premaniplex::new(self.graph.rank(), adjacency)?;
        out.validate().map_err(Error::InvalidPremaniplex)?;
        Ok(out)
    }

    pub fn derived_graph(&self) -> Result<Premaniplex> {
        self.derived_graph_bounded(DEFAULT_GROUP_BOUND)
    }
}

/// Transfers voltages through a product: given `(X, xi)` and an operator
/// `(Y, eta)`, produces the voltage assignment `theta` on `X ⋊ Y` whose
/// derived graph is `X^xi ⋊ Y`.  The voltage of the color-i dart at
/// `(x, y)` is the `xi`-voltage of the walk in `X` from `x` reading
/// `eta`'s dart voltage.
pub fn theta_voltage(
    xp: &FinVoltagePremaniplex,
    op: &VoltageOperator,
) -> Result<FinVoltagePremaniplex> {
    if xp.graph.rank() != op.in_rank() {
        return Err(Error::RankMismatch {
            left: xp.graph.rank(),
            right: op.in_rank(),
        });
    }
    let product = op.apply(&xp.graph)?;
    let m = op.graph().vertex_count();
    let mut volt = vec![Vec::with_capacity(product.vertex_count()); product.rank()];
    for i in 0..product.rank() {
        for x in 0..xp.graph.vertex_count() {
            for y in 0..m {
                let (theta, _) = xp.read_word(x, op.voltage(i, y))?;
                volt[i].push(theta);
            }
        }
    }
    FinVoltagePremaniplex::new(product, xp.degree, volt, xp.group.clone())
}

/// Substitutes concrete generator permutations for the letters of every
/// voltage word, turning an operator into a finite voltage premaniplex on
/// its underlying graph.  The word `r_a r_b` maps to "`gens[a]` then
/// `gens[b]`".
pub fn substitute_generators(
    op: &VoltageOperator,
    gens: &[Vec<usize>],
) -> Result<FinVoltagePremaniplex> {
    if gens.len() != op.in_rank() {
        return Err(Error::BadShape(format!(
            "expected {} generators, got {}",
            op.in_rank(),
            gens.len()
        )));
    }
    let degree = gens.first().map_or(0, |g| g.len());
    let volt = op
        .voltages()
        .iter()
        .map(|row| {
            row.iter()
                .map(|w| {
                    w.letters().iter().fold(perm::identity(degree), |acc, &l| {
                        perm::compose(&acc, &gens[l])
                    })
                })
                .collect()
        })
        .collect();
    FinVoltagePremaniplex::new(op.graph().clone(), degree, volt, None)
}

/// For regular `X`, rebuilds `X ⋊ Y` as the derived graph of the operator's
/// underlying graph with each letter `r_i` replaced by the distinguished
/// generator `rho_i` of `X`.
pub fn regular_product_via_derived(x: &Premaniplex, op: &VoltageOperator) -> Result<Premaniplex> {
    if x.rank() != op.in_rank() {
        return Err(Error::RankMismatch {
            left: x.rank(),
            right: op.in_rank(),
        });
    }
    let gens = crate::symmetry::distinguished_generators(x, 0)?;
    let group = perm::close_group(x.vertex_count(), &gens, DEFAULT_GROUP_BOUND).ok_or(
        Error::GroupTooLarge {
            bound: DEFAULT_GROUP_BOUND,
        },
    )?;
    let nu = FinVoltagePremaniplex {
        group: Some(group),
        ..substitute_generators(op, &gens)?
    };
    nu.derived_graph()
}
