//! Rank-3 combinatorial maps given by vertex/edge/face incidence data.
//!
//! A [`MapSpec`] is a polyhedral map on a closed surface: faces are cyclic
//! vertex sequences and every edge lies on exactly two faces.  Its flag graph
//! is a rank-3 premaniplex whose vertices are the incident
//! (vertex, edge, face) triples.
//!
//! The classical poset-level operations (dual, medial, truncation, snub) are
//! implemented here directly on the incidence data.  They are used as
//! independent oracles for the voltage products.

use crate::premaniplex::Premaniplex;
use crate::{Error, Result};
use std::collections::HashMap;

#[derive(Clone, Debug)]
pub struct MapSpec {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    faces: Vec<Vec<usize>>,
}

impl MapSpec {
    /// Builds a map from face cycles alone; the edge list is derived.
    pub fn from_faces(vertex_count: usize, faces: Vec<Vec<usize>>) -> Result<Self> {
        let mut edges = Vec::new();
        let mut seen = HashMap::new();
        for face in &faces {
            for p in 0..face.len() {
                let a = face[p];
                let b = face[(p + 1) % face.len()];
                if a >= vertex_count || b >= vertex_count {
                    return Err(Error::BadMap(format!(
                        "face vertex out of range: {}",
                        a.max(b)
                    )));
                }
                let key = (a.min(b), a.max(b));
                if !seen.contains_key(&key) {
                    seen.insert(key, edges.len());
                    edges.push(key);
                }
            }
        }
        let spec = MapSpec {
            vertex_count,
            edges,
            faces,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    fn edge_index(&self) -> HashMap<(usize, usize), usize> {
        self.edges
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| ((a, b), i))
            .collect()
    }

    fn edge_id(index: &HashMap<(usize, usize), usize>, a: usize, b: usize) -> Result<usize> {
        index
            .get(&(a.min(b), a.max(b)))
            .copied()
            .ok_or_else(|| Error::BadMap(format!("face side ({}, {}) is not an edge", a, b)))
    }

    /// Checks that faces are simple cycles of length at least 3 over declared
    /// edges and that every edge lies on exactly two face sides.
    pub fn validate(&self) -> Result<()> {
        let index = self.edge_index();
        let mut sides = vec![0usize; self.edges.len()];
        for (f, face) in self.faces.iter().enumerate() {
            if face.len() < 3 {
                return Err(Error::BadMap(format!(
                    "face {} has fewer than 3 vertices",
                    f
                )));
            }
            let mut sorted = face.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != face.len() {
                return Err(Error::BadMap(format!("face {} repeats a vertex", f)));
            }
            for p in 0..face.len() {
                let e = Self::edge_id(&index, face[p], face[(p + 1) % face.len()])?;
                sides[e] += 1;
            }
        }
        for (e, &count) in sides.iter().enumerate() {
            if count != 2 {
                return Err(Error::BadMap(format!(
                    "edge {:?} lies on {} face sides, expected 2",
                    self.edges[e], count
                )));
            }
        }
        Ok(())
    }

    /// The flag graph: one vertex per incident (vertex, edge, face) triple,
    /// with sigma_i changing exactly the rank-i element.
    pub fn flag_graph(&self) -> Result<Premaniplex> {
        self.validate()?;
        let index = self.edge_index();
        // Flags enumerated face-major, then by position, then by side.
        let mut flags = Vec::new();
        let mut flag_id = HashMap::new();
        for (f, face) in self.faces.iter().enumerate() {
            let k = face.len();
            for p in 0..k {
                let e = Self::edge_id(&index, face[p], face[(p + 1) % k])?;
                for (v, _) in [(face[p], 0), (face[(p + 1) % k], 1)] {
                    flag_id.insert((v, e, f), flags.len());
                    flags.push((v, e, f));
                }
            }
        }
        // Other face of each edge.
        let mut edge_faces: Vec<Vec<usize>> = vec![Vec::new(); self.edges.len()];
        for (f, face) in self.faces.iter().enumerate() {
            for p in 0..face.len() {
                let e = Self::edge_id(&index, face[p], face[(p + 1) % face.len()])?;
                edge_faces[e].push(f);
            }
        }
        let mut sigma = vec![vec![0usize; flags.len()]; 3];
        for (id, &(v, e, f)) in flags.iter().enumerate() {
            let (a, b) = self.edges[e];
            let other_end = if v == a { b } else { a };
            sigma[0][id] = flag_id[&(other_end, e, f)];
            // The two edges of face f at v.
            let face = &self.faces[f];
            let k = face.len();
            let p = face.iter().position(|&u| u == v).unwrap();
            let e_prev = Self::edge_id(&index, face[(p + k - 1) % k], face[p])?;
            let e_next = Self::edge_id(&index, face[p], face[(p + 1) % k])?;
            let other_edge = if e == e_prev { e_next } else { e_prev };
            sigma[1][id] = flag_id[&(v, other_edge, f)];
            let g = if edge_faces[e][0] == f {
                edge_faces[e][1]
            } else {
                edge_faces[e][0]
            };
            sigma[2][id] = flag_id[&(v, e, g)];
        }
        let graph = Premaniplex::new(3, sigma)?;
        graph.validate().map_err(Error::InvalidPremaniplex)?;
        Ok(graph)
    }

    /// For each vertex, the incident edges in rotation order around it.
    fn vertex_rotations(&self) -> Result<Vec<Vec<usize>>> {
        let index = self.edge_index();
        // corner (v, f) -> the two edges of f at v
        let mut corner: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.vertex_count];
        let mut edge_faces: Vec<Vec<usize>> = vec![Vec::new(); self.edges.len()];
        for (f, face) in self.faces.iter().enumerate() {
            let k = face.len();
            for p in 0..k {
                let v = face[p];
                let e_prev = Self::edge_id(&index, face[(p + k - 1) % k], v)?;
                let e_next = Self::edge_id(&index, v, face[(p + 1) % k])?;
                corner.insert((v, f), (e_prev, e_next));
                let e = e_next;
                edge_faces[e].push(f);
                if !incident[face[p]].contains(&e) {
                    incident[face[p]].push(e);
                }
                if !incident[face[(p + 1) % k]].contains(&e) {
                    incident[face[(p + 1) % k]].push(e);
                }
            }
        }
        let mut rotations = Vec::with_capacity(self.vertex_count);
        for v in 0..self.vertex_count {
            let degree = incident[v].len();
            if degree < 3 {
                return Err(Error::BadMap(format!(
                    "vertex {} has degree {} < 3",
                    v, degree
                )));
            }
            let start_edge = *incident[v].iter().min().unwrap();
            let start_face = *edge_faces[start_edge].iter().min().unwrap();
            let mut rotation = Vec::with_capacity(degree);
            let (mut e, mut f) = (start_edge, start_face);
            loop {
                rotation.push(e);
                // next edge: the other edge of f at v; next face: across it
                let (a, b) = corner[&(v, f)];
                let e_next = if e == a { b } else { a };
                let g = if edge_faces[e_next][0] == f {
                    edge_faces[e_next][1]
                } else {
                    edge_faces[e_next][0]
                };
                e = e_next;
                f = g;
                if e == start_edge && f == start_face {
                    break;
                }
                if rotation.len() > degree {
                    return Err(Error::BadMap(format!("vertex {} is not a disk", v)));
                }
            }
            if rotation.len() != degree {
                return Err(Error::BadMap(format!("vertex {} is not a disk", v)));
            }
            rotations.push(rotation);
        }
        Ok(rotations)
    }

    /// For each vertex, the incident faces in rotation order, aligned so the
    /// face at position p lies between edges p and p+1 of [`vertex_rotations`].
    fn face_rotations(&self, rotations: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
        let index = self.edge_index();
        let mut corner_face: HashMap<(usize, usize, usize), usize> = HashMap::new();
        for (f, face) in self.faces.iter().enumerate() {
            let k = face.len();
            for p in 0..k {
                let v = face[p];
                let e_prev = Self::edge_id(&index, face[(p + k - 1) % k], v)?;
                let e_next = Self::edge_id(&index, v, face[(p + 1) % k])?;
                let key = (v, e_prev.min(e_next), e_prev.max(e_next));
                corner_face.insert(key, f);
            }
        }
        let mut out = Vec::with_capacity(self.vertex_count);
        for (v, rot) in rotations.iter().enumerate() {
            let d = rot.len();
            let mut faces = Vec::with_capacity(d);
            for p in 0..d {
                let (a, b) = (rot[p], rot[(p + 1) % d]);
                let f = corner_face
                    .get(&(v, a.min(b), a.max(b)))
                    .copied()
                    .ok_or_else(|| Error::BadMap(format!("missing corner at vertex {}", v)))?;
                faces.push(f);
            }
            out.push(faces);
        }
        Ok(out)
    }

    /// The dual map: vertices become faces and vice versa.
    pub fn dual(&self) -> Result<MapSpec> {
        let rotations = self.vertex_rotations()?;
        let face_rot = self.face_rotations(&rotations)?;
        MapSpec::from_faces(self.faces.len(), face_rot)
    }

    /// The medial: one vertex per edge; faces come from the original faces
    /// and the original vertices.
    pub fn medial(&self) -> Result<MapSpec> {
        let index = self.edge_index();
        let rotations = self.vertex_rotations()?;
        let mut faces = Vec::with_capacity(self.faces.len() + self.vertex_count);
        for face in &self.faces {
            let k = face.len();
            let cycle = (0..k)
                .map(|p| Self::edge_id(&index, face[p], face[(p + 1) % k]))
                .collect::<Result<Vec<_>>>()?;
            faces.push(cycle);
        }
        faces.extend(rotations);
        MapSpec::from_faces(self.edges.len(), faces)
    }

    /// The truncation: one vertex per incident (vertex, edge) pair.
    pub fn truncated(&self) -> Result<MapSpec> {
        let index = self.edge_index();
        let rotations = self.vertex_rotations()?;
        let mut corner_id = HashMap::new();
        for (v, rot) in rotations.iter().enumerate() {
            for &e in rot {
                let id = corner_id.len();
                corner_id.insert((v, e), id);
            }
        }
        let mut faces = Vec::new();
        for face in &self.faces {
            let k = face.len();
            let mut cycle = Vec::with_capacity(2 * k);
            for p in 0..k {
                let v = face[p];
                let e_prev = Self::edge_id(&index, face[(p + k - 1) % k], v)?;
                let e_next = Self::edge_id(&index, v, face[(p + 1) % k])?;
                cycle.push(corner_id[&(v, e_prev)]);
                cycle.push(corner_id[&(v, e_next)]);
            }
            faces.push(cycle);
        }
        for (v, rot) in rotations.iter().enumerate() {
            faces.push(rot.iter().map(|&e| corner_id[&(v, e)]).collect());
        }
        MapSpec::from_faces(corner_id.len(), faces)
    }

    /// Re-orients face cycles so adjacent faces traverse their shared edge in
    /// opposite directions.  Fails on non-orientable maps.
    fn oriented(&self) -> Result<MapSpec> {
        let index = self.edge_index();
        // edge -> (face, direction) sides
        let mut sides: Vec<Vec<(usize, bool)>> = vec![Vec::new(); self.edges.len()];
        for (f, face) in self.faces.iter().enumerate() {
            for p in 0..face.len() {
                let a = face[p];
                let b = face[(p + 1) % face.len()];
                let e = Self::edge_id(&index, a, b)?;
                sides[e].push((f, a < b));
            }
        }
        let mut flip = vec![None::<bool>; self.faces.len()];
        for start in 0..self.faces.len() {
            if flip[start].is_some() {
                continue;
            }
            flip[start] = Some(false);
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(f) = queue.pop_front() {
                let face = &self.faces[f];
                for p in 0..face.len() {
                    let a = face[p];
                    let b = face[(p + 1) % face.len()];
                    let e = Self::edge_id(&index, a, b)?;
                    let my_dir = (a < b) != flip[f].unwrap();
                    let (g, g_raw_dir) = sides[e]
                        .iter()
                        .copied()
                        .find(|&(g, dir)| g != f || dir != (a < b))
                        .ok_or_else(|| Error::BadMap("edge side bookkeeping failed".into()))?;
                    // The neighbor must traverse e in the opposite direction.
                    let needed_flip = g_raw_dir == my_dir;
                    match flip[g] {
                        None => {
                            flip[g] = Some(needed_flip);
                            queue.push_back(g);
                        }
                        Some(x) if x != needed_flip => {
                            return Err(Error::BadMap("map is not orientable".into()))
                        }
                        _ => {}
                    }
                }
            }
        }
        let faces = self
            .faces
            .iter()
            .zip(&flip)
            .map(|(face, flip)| {
                if flip.unwrap() {
                    let mut r = face.clone();
                    r.reverse();
                    r
                } else {
                    face.clone()
                }
            })
            .collect();
        MapSpec::from_faces(self.vertex_count, faces)
    }

    /// The snub: one vertex per (face, vertex) corner, with each face spun
    /// and the gaps filled by vertex polygons and edge triangles.  The input
    /// must be orientable; the diagonal of each edge square follows the
    /// orientation (one of the two chiral forms).
    pub fn snub(&self) -> Result<MapSpec> {
        let oriented = self.oriented()?;
        let rotations = oriented.vertex_rotations()?;
        let mut corner_id = HashMap::new();
        for (f, face) in oriented.faces.iter().enumerate() {
            for &v in face {
                let id = corner_id.len();
                corner_id.insert((f, v), id);
            }
        }
        // For every directed face side (tail -> head in face f), record f.
        let mut side_face: HashMap<(usize, usize), usize> = HashMap::new();
        for (f, face) in oriented.faces.iter().enumerate() {
            for p in 0..face.len() {
                side_face.insert((face[p], face[(p + 1) % face.len()]), f);
            }
        }
        let mut faces = Vec::new();
        // Spun originals.
        for (f, face) in oriented.faces.iter().enumerate() {
            faces.push(face.iter().map(|&v| corner_id[&(f, v)]).collect());
        }
        // Vertex polygons: faces around v, one corner each.  The face between
        // rotation edges p and p+1 is recovered from the directed sides.
        let face_rot = oriented.face_rotations(&rotations)?;
        for (v, around) in face_rot.iter().enumerate() {
            faces.push(around.iter().map(|&f| corner_id[&(f, v)]).collect());
        }
        // Edge triangles: for edge u -> u' in f (and u' -> u in f'), the
        // diagonal joins the two heads (f, u') and (f', u).
        for &(a, b) in &oriented.edges {
            let f = *side_face
                .get(&(a, b))
                .ok_or_else(|| Error::BadMap("missing directed side".into()))?;
            let fp = *side_face
                .get(&(b, a))
                .ok_or_else(|| Error::BadMap("missing directed side".into()))?;
            // In f: a -> b, so head is b; in f': b -> a, head is a.
            faces.push(vec![
                corner_id[&(f, a)],
                corner_id[&(f, b)],
                corner_id[&(fp, a)],
            ]);
            faces.push(vec![
                corner_id[&(fp, b)],
                corner_id[&(fp, a)],
                corner_id[&(f, b)],
            ]);
        }
        MapSpec::from_faces(corner_id.len(), faces)
    }
}
