//! Premaniplexes: properly n-edge-colored n-valent dart graphs.
//!
//! A rank-n premaniplex is given by one involution per color on a dense
//! 0-based vertex set.  Fixed points of a color involution are semiedges.
//! For non-consecutive colors the two involutions must commute, which is the
//! closure condition on alternating 4-paths.

use crate::words::GroupWord;
use crate::{Error, Result};
use std::collections::VecDeque;
use std::fmt;

/// A violation found by [`Premaniplex::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `sigma_color` is not an involution at `vertex`.
    NotInvolution { color: usize, vertex: usize },
    /// The alternating 4-path with the given non-consecutive colors does not
    /// close at `vertex`.
    NonCommuting {
        colors: (usize, usize),
        vertex: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotInvolution { color, vertex } => {
                write!(
                    f,
                    "sigma_{} is not an involution at vertex {}",
                    color, vertex
                )
            }
            Violation::NonCommuting { colors, vertex } => write!(
                f,
                "(sigma_{} sigma_{})^2 != id at vertex {}",
                colors.0, colors.1, vertex
            ),
        }
    }
}

/// A finite premaniplex of rank n.
#[derive(Clone, PartialEq, Eq)]
pub struct Premaniplex {
    rank: usize,
    /// `adjacency[i][v]` is the other end of the color-i dart at `v`.
    adjacency: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for Premaniplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Premaniplex(rank {}, {} vertices)",
            self.rank,
            self.vertex_count()
        )
    }
}

impl Premaniplex {
    /// Builds a premaniplex from per-color adjacency maps.  Checks shape
    /// (rank at least 1, rectangular arrays, entries in range); the deeper
    /// involution and commutation invariants are checked by [`validate`].
    ///
    /// [`validate`]: Premaniplex::validate
    pub fn new(rank: usize, adjacency: Vec<Vec<usize>>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        if adjacency.len() != rank {
            return Err(Error::BadShape(format!(
                "expected {} adjacency rows, got {}",
                rank,
                adjacency.len()
            )));
        }
        let count = adjacency[0].len();
        if count == 0 {
            return Err(Error::BadShape("vertex count must be positive".into()));
        }
        for (i, row) in adjacency.iter().enumerate() {
            if row.len() != count {
                return Err(Error::BadShape(format!(
                    "color {} has {} entries, expected {}",
                    i,
                    row.len(),
                    count
                )));
            }
            if let Some(&v) = row.iter().find(|&&v| v >= count) {
                return Err(Error::VertexOutOfRange { vertex: v, count });
            }
        }
        Ok(Premaniplex {
            rank,
            adjacency,
            labels: None,
        })
    }

    /// As [`Premaniplex::new`] but additionally requires [`validate`] to pass.
    ///
    /// [`validate`]: Premaniplex::validate
    pub fn new_validated(rank: usize, adjacency: Vec<Vec<usize>>) -> Result<Self> {
        let x = Self::new(rank, adjacency)?;
        x.validate().map_err(Error::InvalidPremaniplex)?;
        Ok(x)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency[0].len()
    }

    /// The i-adjacent vertex of `v`.
    pub fn neighbor(&self, color: usize, v: usize) -> usize {
        self.adjacency[color][v]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count() {
            return Err(Error::BadShape(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// True iff the color-i dart at `v` is a semiedge.
    pub fn is_semiedge(&self, color: usize, v: usize) -> bool {
        self.adjacency[color][v] == v
    }

    /// Checks the involution condition for every color and the closure of
    /// alternating 4-paths for every non-consecutive color pair, reporting
    /// the first failure.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let count = self.vertex_count();
        for (i, row) in self.adjacency.iter().enumerate() {
            for v in 0..count {
                if row[row[v]] != v {
                    return Err(Violation::NotInvolution {
                        color: i,
                        vertex: v,
                    });
                }
            }
        }
        for i in 0..self.rank {
            for j in i + 2..self.rank {
                let si = &self.adjacency[i];
                let sj = &self.adjacency[j];
                for v in 0..count {
                    if si[sj[si[sj[v]]]] != v {
                        return Err(Violation::NonCommuting {
                            colors: (i, j),
                            vertex: v,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Applies a monodromy word on the left: the rightmost letter acts first.
    pub fn act(&self, w: &GroupWord, v: usize) -> Result<usize> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch {
                left: w.rank(),
                right: self.rank,
            });
        }
        if v >= self.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                count: self.vertex_count(),
            });
        }
        Ok(self.act_unchecked(w, v))
    }

    pub(crate) fn act_unchecked(&self, w: &GroupWord, v: usize) -> usize {
        w.letters()
            .iter()
            .rev()
            .fold(v, |v, &i| self.adjacency[i][v])
    }

    /// Connected components over the given colors, each listed in BFS
    /// discovery order from its smallest vertex.
    pub fn components_with_colors(&self, colors: &[usize]) -> Vec<Vec<usize>> {
        let count = self.vertex_count();
        let mut seen = vec![false; count];
        let mut components = Vec::new();
        for start in 0..count {
            if seen[start] {
                continue;
            }
            let mut component = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                component.push(v);
                for &i in colors {
                    let u = self.adjacency[i][v];
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
            components.push(component);
        }
        components
    }

    /// Connected components over all colors.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let colors: Vec<usize> = (0..self.rank).collect();
        self.components_with_colors(&colors)
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Extracts the connected component of `v`, re-indexed in BFS discovery
    /// order so the root becomes vertex 0.
    pub fn component_of(&self, v: usize) -> Result<RootedPremaniplex> {
        let count = self.vertex_count();
        if v >= count {
            return Err(Error::VertexOutOfRange { vertex: v, count });
        }
        let mut index = vec![usize::MAX; count];
        let mut order = Vec::new();
        let mut queue = VecDeque::from([v]);
        let mut discovered = vec![false; count];
        discovered[v] = true;
        while let Some(u) = queue.pop_front() {
            index[u] = order.len();
            order.push(u);
            for i in 0..self.rank {
                let w = self.adjacency[i][u];
                if !discovered[w] {
                    discovered[w] = true;
                    queue.push_back(w);
                }
            }
        }
        let adjacency = (0..self.rank)
            .map(|i| order.iter().map(|&u| index[self.adjacency[i][u]]).collect())
            .collect();
        let mut graph = Premaniplex::new(self.rank, adjacency)?;
        if let Some(labels) = &self.labels {
            graph.labels = Some(order.iter().map(|&u| labels[u].clone()).collect());
        }
        Ok(RootedPremaniplex { graph, root: 0 })
    }

    /// Keeps the colors strictly between `k` and `l`, re-indexed to start at
    /// 0.  The components of the result are the (k,l)-sections.
    pub fn restrict_section(&self, k: isize, l: isize) -> Result<Premaniplex> {
        let n = self.rank as isize;
        if !(-1 <= k && k < l && l <= n) || l - k - 1 < 1 {
            return Err(Error::BadSection {
                k,
                l,
                rank: self.rank,
            });
        }
        let adjacency = ((k + 1)..l)
            .map(|i| self.adjacency[i as usize].clone())
            .collect();
        let mut out = Premaniplex::new((l - k - 1) as usize, adjacency)?;
        out.labels = self.labels.clone();
        Ok(out)
    }

    /// Number of i-faces for each color i: components after removing that
    /// color's edges.
    pub fn face_counts(&self) -> Vec<usize> {
        (0..self.rank)
            .map(|i| {
                let colors: Vec<usize> = (0..self.rank).filter(|&j| j != i).collect();
                self.components_with_colors(&colors).len()
            })
            .collect()
    }

    /// Connected, no semiedges, no parallel edges.
    pub fn is_maniplex(&self) -> bool {
        if !self.is_connected() {
            return false;
        }
        for v in 0..self.vertex_count() {
            for i in 0..self.rank {
                if self.adjacency[i][v] == v {
                    return false;
                }
                for j in i + 1..self.rank {
                    if self.adjacency[i][v] == self.adjacency[j][v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True iff the premaniplex admits a two-coloring of its vertices in
    /// which i-adjacent vertices share a color exactly when `i` is in
    /// `semiedge_colors`; equivalently, it covers the two-vertex premaniplex
    /// with semiedges on those colors.
    pub fn covers_two_orbit(&self, semiedge_colors: &[usize]) -> bool {
        let count = self.vertex_count();
        let mut color = vec![u8::MAX; count];
        for start in 0..count {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for i in 0..self.rank {
                    let u = self.adjacency[i][v];
                    let expected = if semiedge_colors.contains(&i) {
                        color[v]
                    } else {
                        1 - color[v]
                    };
                    if color[u] == u8::MAX {
                        color[u] = expected;
                        queue.push_back(u);
                    } else if color[u] != expected {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Searches for a color-preserving isomorphism onto `other`, returning
    /// the vertex images.  With a seed only that base assignment is tried.
    ///
    /// For a connected source the image of one vertex forces the rest along
    /// darts, so the search tries each candidate image of a base vertex and
    /// extends breadth-first.  Disconnected sources are matched component by
    /// component with backtracking.
    pub fn find_isomorphism(
        &self,
        other: &Premaniplex,
        seed: Option<(usize, usize)>,
    ) -> Option<Vec<usize>> {
        if self.rank != other.rank || self.vertex_count() != other.vertex_count() {
            return None;
        }
        match seed {
            Some((a, b)) => {
                if a >= self.vertex_count() || b >= other.vertex_count() {
                    return None;
                }
                let mut image = vec![usize::MAX; self.vertex_count()];
                let mut used = vec![false; other.vertex_count()];
                if !self.extend_mapping(other, a, b, &mut image, &mut used) {
                    return None;
                }
                // The forced extension only covers the component of the seed;
                // finish the remaining components if any.
                let rest: Vec<usize> = (0..self.vertex_count())
                    .filter(|&v| image[v] == usize::MAX)
                    .collect();
                if rest.is_empty() || self.match_components(other, &mut image, &mut used) {
                    Some(image)
                } else {
                    None
                }
            }
            None => {
                let mut image = vec![usize::MAX; self.vertex_count()];
                let mut used = vec![false; other.vertex_count()];
                if self.match_components(other, &mut image, &mut used) {
                    Some(image)
                } else {
                    None
                }
            }
        }
    }

    /// Extends `base -> target` along darts.  Returns false on any conflict.
    pub(crate) fn extend_mapping(
        &self,
        other: &Premaniplex,
        base: usize,
        target: usize,
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if image[base] != usize::MAX {
            return image[base] == target;
        }
        if used[target] {
            return false;
        }
        image[base] = target;
        used[target] = true;
        let mut queue = VecDeque::from([base]);
        let mut assigned = vec![base];
        let mut ok = true;
        'bfs: while let Some(v) = queue.pop_front() {
            for i in 0..self.rank {
                let w = self.adjacency[i][v];
                let u = other.adjacency[i][image[v]];
                if image[w] == usize::MAX {
                    if used[u] {
                        ok = false;
                        break 'bfs;
                    }
                    image[w] = u;
                    used[u] = true;
                    assigned.push(w);
                    queue.push_back(w);
                } else if image[w] != u {
                    ok = false;
                    break 'bfs;
                }
            }
        }
        if !ok {
            for v in assigned {
                used[image[v]] = false;
                image[v] = usize::MAX;
            }
        }
        ok
    }

    /// Matches all unassigned components of `self` onto unused vertices of
    /// `other`, backtracking across components.
    fn match_components(
        &self,
        other: &Premaniplex,
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let base = match (0..self.vertex_count()).find(|&v| image[v] == usize::MAX) {
            Some(v) => v,
            None => return true,
        };
        for target in 0..other.vertex_count() {
            if used[target] {
                continue;
            }
            let snapshot: Vec<usize> = image.to_vec();
            if self.extend_mapping(other, base, target, image, used)
                && self.match_components(other, image, used)
            {
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
}

/// A premaniplex with a distinguished root vertex; stands for the connected
/// component of the root.
#[derive(Clone, Debug)]
pub struct RootedPremaniplex {
    pub graph: Premaniplex,
    pub root: usize,
}
