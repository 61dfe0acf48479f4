//! Halfedge mesh for closed triangulated surfaces, plus OFF/OBJ loading.
//!
//! Polygon faces are fan-triangulated from their first listed vertex during
//! construction, so every face cycle has length exactly 3 afterwards. Only
//! closed surfaces are accepted: a missing twin is an error, not a boundary.

use crate::geom::{v2, Vec2, Vec3};
use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use thiserror::Error;

pub type VertexId = usize;
pub type HalfedgeId = usize;
pub type FaceId = usize;
pub type EdgeId = usize;

#[derive(Debug, Error)]
pub enum MeshError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("non-manifold edge ({0}, {1}): more than two incident faces")]
    NonManifold(VertexId, VertexId),
    #[error("open surface: edge ({0}, {1}) has only one incident face")]
    OpenSurface(VertexId, VertexId),
    #[error("degenerate face {0}: area below tolerance")]
    DegenerateFace(FaceId),
}

#[derive(Debug, Clone, Copy)]
pub struct Halfedge {
    pub origin: VertexId,
    pub twin: HalfedgeId,
    pub next: HalfedgeId,
    pub face: FaceId,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MeshFormat {
    Off,
    Obj,
}

/// A point on the surface of a mesh: at a vertex, on an edge interior, or in
/// a face interior.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SurfacePoint {
    Vertex(VertexId),
    /// Parameter `t` in [0,1] along the edge's canonical orientation.
    Edge { edge: EdgeId, t: f64 },
    /// Barycentric coordinates with respect to the face's vertex cycle;
    /// they sum to 1.
    Face { face: FaceId, bary: [f64; 3] },
}

impl fmt::Display for SurfacePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfacePoint::Vertex(v) => write!(f, "v:{v}"),
            SurfacePoint::Edge { edge, t } => write!(f, "e:{edge}:{t}"),
            SurfacePoint::Face { face, bary } => {
                write!(f, "f:{}:{}:{}", face, bary[0], bary[1])
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct HalfedgeMesh {
    vertices: Vec<Vec3>,
    halfedges: Vec<Halfedge>,
    /// One halfedge per face.
    faces: Vec<HalfedgeId>,
    /// Canonical halfedge per undirected edge (the one with the smaller id).
    edges: Vec<HalfedgeId>,
    halfedge_edge: Vec<EdgeId>,
    vertex_halfedge: Vec<HalfedgeId>,
    diameter: f64,
    euler_ok: bool,
}

impl HalfedgeMesh {
    /// Number of vertices (the `n` of the input polyhedron).
    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn halfedge_count(&self) -> usize {
        self.halfedges.len()
    }

    pub fn point(&self, v: VertexId) -> Vec3 {
        self.vertices[v]
    }

    pub fn halfedge(&self, h: HalfedgeId) -> &Halfedge {
        &self.halfedges[h]
    }

    pub fn twin(&self, h: HalfedgeId) -> HalfedgeId {
        self.halfedges[h].twin
    }

    pub fn next(&self, h: HalfedgeId) -> HalfedgeId {
        self.halfedges[h].next
    }

    pub fn prev(&self, h: HalfedgeId) -> HalfedgeId {
        // triangle faces only
        self.halfedges[self.halfedges[h].next].next
    }

    pub fn origin(&self, h: HalfedgeId) -> VertexId {
        self.halfedges[h].origin
    }

    pub fn dest(&self, h: HalfedgeId) -> VertexId {
        self.halfedges[self.halfedges[h].next].origin
    }

    pub fn face_of(&self, h: HalfedgeId) -> FaceId {
        self.halfedges[h].face
    }

    pub fn edge_of(&self, h: HalfedgeId) -> EdgeId {
        self.halfedge_edge[h]
    }

    /// The three halfedges of a face, starting from its stored representative.
    pub fn face_halfedges(&self, f: FaceId) -> [HalfedgeId; 3] {
        let h0 = self.faces[f];
        let h1 = self.next(h0);
        [h0, h1, self.next(h1)]
    }

    pub fn face_vertices(&self, f: FaceId) -> [VertexId; 3] {
        self.face_halfedges(f).map(|h| self.origin(h))
    }

    pub fn face_edges(&self, f: FaceId) -> [EdgeId; 3] {
        self.face_halfedges(f).map(|h| self.edge_of(h))
    }

    /// The vertex of `face(h)` opposite to `h`.
    pub fn apex(&self, h: HalfedgeId) -> VertexId {
        self.dest(self.next(h))
    }

    pub fn canonical_halfedge(&self, e: EdgeId) -> HalfedgeId {
        self.edges[e]
    }

    /// Edge endpoints in canonical orientation.
    pub fn edge_endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let h = self.edges[e];
        (self.origin(h), self.dest(h))
    }

    pub fn edge_length(&self, e: EdgeId) -> f64 {
        let (a, b) = self.edge_endpoints(e);
        self.vertices[a].dist(self.vertices[b])
    }

    /// 3D position at canonical parameter `t` along edge `e`.
    pub fn edge_point(&self, e: EdgeId, t: f64) -> Vec3 {
        let (a, b) = self.edge_endpoints(e);
        self.vertices[a].lerp(self.vertices[b], t)
    }

    /// Both faces incident to an edge.
    pub fn edge_faces(&self, e: EdgeId) -> (FaceId, FaceId) {
        let h = self.edges[e];
        (self.face_of(h), self.face_of(self.twin(h)))
    }

    /// The halfedge of `e` whose face is `f`.
    pub fn halfedge_of_edge_in_face(&self, e: EdgeId, f: FaceId) -> HalfedgeId {
        let h = self.edges[e];
        if self.face_of(h) == f {
            h
        } else {
            debug_assert_eq!(self.face_of(self.twin(h)), f);
            self.twin(h)
        }
    }

    /// Outgoing halfedges around a vertex, in a consistent cyclic order.
    pub fn vertex_star(&self, v: VertexId) -> Vec<HalfedgeId> {
        let start = self.vertex_halfedge[v];
        let mut out = vec![start];
        let mut h = self.next(self.twin(start));
        while h != start {
            out.push(h);
            h = self.next(self.twin(h));
        }
        out
    }

    pub fn vertex_degree(&self, v: VertexId) -> usize {
        self.vertex_star(v).len()
    }

    /// Edges incident to a vertex.
    pub fn vertex_edges(&self, v: VertexId) -> Vec<EdgeId> {
        self.vertex_star(v).iter().map(|&h| self.edge_of(h)).collect()
    }

    /// Faces incident to a vertex.
    pub fn vertex_faces(&self, v: VertexId) -> Vec<FaceId> {
        self.vertex_star(v).iter().map(|&h| self.face_of(h)).collect()
    }

    /// Interior angle of `face(h)` at `origin(h)`.
    pub fn corner_angle(&self, h: HalfedgeId) -> f64 {
        let a = self.point(self.origin(h));
        let b = self.point(self.dest(h));
        let c = self.point(self.apex(h));
        let u = b - a;
        let w = c - a;
        (u.dot(w) / (u.norm() * w.norm())).clamp(-1.0, 1.0).acos()
    }

    /// Sum of incident triangle angles at `v`.
    pub fn vertex_total_angle(&self, v: VertexId) -> f64 {
        self.vertex_star(v).iter().map(|&h| self.corner_angle(h)).sum()
    }

    /// A vertex is a saddle iff its total angle exceeds 2π (above tolerance);
    /// geodesics can turn only at saddles.
    pub fn is_saddle(&self, v: VertexId) -> bool {
        self.vertex_total_angle(v) > 2.0 * std::f64::consts::PI + 1e-9
    }

    pub fn face_area(&self, f: FaceId) -> f64 {
        let [a, b, c] = self.face_vertices(f).map(|v| self.point(v));
        (b - a).cross(c - a).norm() * 0.5
    }

    pub fn total_area(&self) -> f64 {
        (0..self.face_count()).map(|f| self.face_area(f)).sum()
    }

    /// Bounding-box diagonal; the reference scale for tolerances.
    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    pub fn euler_ok(&self) -> bool {
        self.euler_ok
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// 3D position of a surface point.
    pub fn position(&self, p: &SurfacePoint) -> Vec3 {
        match *p {
            SurfacePoint::Vertex(v) => self.point(v),
            SurfacePoint::Edge { edge, t } => self.edge_point(edge, t),
            SurfacePoint::Face { face, bary } => {
                let [a, b, c] = self.face_vertices(face).map(|v| self.point(v));
                a * bary[0] + b * bary[1] + c * bary[2]
            }
        }
    }

    /// Faces incident to a surface point (1 for a face point, 2 for an edge
    /// point, the full star for a vertex).
    pub fn incident_faces(&self, p: &SurfacePoint) -> Vec<FaceId> {
        match *p {
            SurfacePoint::Vertex(v) => self.vertex_faces(v),
            SurfacePoint::Edge { edge, .. } => {
                let (f, g) = self.edge_faces(edge);
                vec![f, g]
            }
            SurfacePoint::Face { face, .. } => vec![face],
        }
    }

    /// Planar layout of `face(h)`: origin(h) at the origin, dest(h) on the
    /// positive x-axis, apex above. Returns images of
    /// (origin(h), dest(h), apex).
    pub fn face_layout(&self, h: HalfedgeId) -> [Vec2; 3] {
        let a = self.point(self.origin(h));
        let b = self.point(self.dest(h));
        let c = self.point(self.apex(h));
        let l = b.dist(a);
        let u = (b - a) / l;
        let ac = c - a;
        let cx = ac.dot(u);
        let cy = (ac.norm_sq() - cx * cx).max(0.0).sqrt();
        [v2(0.0, 0.0), v2(l, 0.0), v2(cx, cy)]
    }

    /// Position of surface point `p` in the layout of `face(h)`, where `p`
    /// must lie on `face(h)`.
    pub fn layout_position(&self, h: HalfedgeId, p: &SurfacePoint) -> Vec2 {
        let f = self.face_of(h);
        let layout = self.face_layout(h);
        let hs = {
            let h0 = h;
            let h1 = self.next(h0);
            [h0, h1, self.next(h1)]
        };
        match *p {
            SurfacePoint::Vertex(v) => {
                for (i, &hh) in hs.iter().enumerate() {
                    if self.origin(hh) == v {
                        return layout[i];
                    }
                }
                panic!("vertex {v} not on face {f}");
            }
            SurfacePoint::Edge { edge, t } => {
                for &hh in &hs {
                    if self.edge_of(hh) == edge {
                        // t runs along the edge's canonical orientation
                        let (va, vb) = self.edge_endpoints(edge);
                        let from = layout[self.index_in_face(h, va)];
                        let to = layout[self.index_in_face(h, vb)];
                        return from.lerp(to, t);
                    }
                }
                panic!("edge {edge} not on face {f}");
            }
            SurfacePoint::Face { face, bary } => {
                assert_eq!(face, f, "face point not on face {f}");
                // bary refers to the face's stored vertex cycle
                let verts = self.face_vertices(face);
                let mut out = Vec2::ZERO;
                for (k, &v) in verts.iter().enumerate() {
                    out = out + layout[self.index_in_face(h, v)] * bary[k];
                }
                out
            }
        }
    }

    fn index_in_face(&self, h: HalfedgeId, v: VertexId) -> usize {
        let mut hh = h;
        for i in 0..3 {
            if self.origin(hh) == v {
                return i;
            }
            hh = self.next(hh);
        }
        panic!("vertex {v} not in face of halfedge {h}");
    }

    /// Build a mesh from polygon soup, fan-triangulating non-triangle faces
    /// from their first listed vertex.
    pub fn from_polygons(vertices: Vec<Vec3>, polygons: &[Vec<VertexId>]) -> Result<Self, MeshError> {
        let nv = vertices.len();
        let mut tris: Vec<[VertexId; 3]> = Vec::new();
        for (pi, poly) in polygons.iter().enumerate() {
            if poly.len() < 3 {
                return Err(MeshError::Parse(format!("face {pi} has fewer than 3 vertices")));
            }
            for &v in poly {
                if v >= nv {
                    return Err(MeshError::Parse(format!("face {pi} references vertex {v} out of range")));
                }
            }
            for k in 1..poly.len() - 1 {
                tris.push([poly[0], poly[k], poly[k + 1]]);
            }
        }

        let mut lo = Vec3::ZERO;
        let mut hi = Vec3::ZERO;
        if let Some(&first) = vertices.first() {
            lo = first;
            hi = first;
        }
        for p in &vertices {
            lo = crate::geom::v3(lo.x.min(p.x), lo.y.min(p.y), lo.z.min(p.z));
            hi = crate::geom::v3(hi.x.max(p.x), hi.y.max(p.y), hi.z.max(p.z));
        }
        let diameter = hi.dist(lo);
        let area_tol = 1e-12 * diameter * diameter;

        let mut halfedges: Vec<Halfedge> = Vec::with_capacity(tris.len() * 3);
        let mut faces: Vec<HalfedgeId> = Vec::with_capacity(tris.len());
        let mut directed: HashMap<(VertexId, VertexId), HalfedgeId> = HashMap::new();
        for (fi, tri) in tris.iter().enumerate() {
            let [a, b, c] = *tri;
            let area = (vertices[b] - vertices[a]).cross(vertices[c] - vertices[a]).norm() * 0.5;
            if area <= area_tol {
                return Err(MeshError::DegenerateFace(fi));
            }
            let base = halfedges.len();
            for (k, (&u, &w)) in [(a, b), (b, c), (c, a)].iter().map(|p| (&p.0, &p.1)).enumerate() {
                if directed.insert((u, w), base + k).is_some() {
                    return Err(MeshError::NonManifold(u, w));
                }
                halfedges.push(Halfedge {
                    origin: u,
                    twin: usize::MAX,
                    next: base + (k + 1) % 3,
                    face: fi,
                });
            }
            faces.push(base);
        }

        // twin matching
        for h in 0..halfedges.len() {
            let u = halfedges[h].origin;
            let w = halfedges[halfedges[h].next].origin;
            match directed.get(&(w, u)) {
                Some(&t) => halfedges[h].twin = t,
                None => return Err(MeshError::OpenSurface(u, w)),
            }
        }

        // undirected edges, canonical halfedge = smaller id
        let mut edges = Vec::new();
        let mut halfedge_edge = vec![usize::MAX; halfedges.len()];
        for h in 0..halfedges.len() {
            if h < halfedges[h].twin {
                halfedge_edge[h] = edges.len();
                halfedge_edge[halfedges[h].twin] = edges.len();
                edges.push(h);
            }
        }

        let mut vertex_halfedge = vec![usize::MAX; nv];
        for (h, he) in halfedges.iter().enumerate() {
            if vertex_halfedge[he.origin] == usize::MAX {
                vertex_halfedge[he.origin] = h;
            }
        }
        if let Some(v) = vertex_halfedge.iter().position(|&h| h == usize::MAX) {
            return Err(MeshError::Parse(format!("vertex {v} is not used by any face")));
        }

        let euler = nv as i64 - edges.len() as i64 + faces.len() as i64;
        let euler_ok = euler == 2;
        if !euler_ok {
            eprintln!("warning: Euler characteristic is {euler}, expected 2 (genus-0)");
        }

        Ok(HalfedgeMesh {
            vertices,
            halfedges,
            faces,
            edges,
            halfedge_edge,
            vertex_halfedge,
            diameter,
            euler_ok,
        })
    }
}

/// Load and validate a mesh from an OFF or OBJ file.
pub fn load_mesh(path: &Path, format: MeshFormat) -> Result<HalfedgeMesh, MeshError> {
    let text = std::fs::read_to_string(path)?;
    parse_mesh(&text, format)
}

/// Parse mesh text in the given format and build a validated mesh.
pub fn parse_mesh(text: &str, format: MeshFormat) -> Result<HalfedgeMesh, MeshError> {
    let (vertices, polygons) = match format {
        MeshFormat::Off => parse_off(text)?,
        MeshFormat::Obj => parse_obj(text)?,
    };
    HalfedgeMesh::from_polygons(vertices, &polygons)
}

/// Guess the format from the file extension (defaults to OFF).
pub fn format_for_path(path: &Path) -> MeshFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some(e) if e.eq_ignore_ascii_case("obj") => MeshFormat::Obj,
        _ => MeshFormat::Off,
    }
}

fn tokens(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(|l| l.split_whitespace())
}

fn parse_off(text: &str) -> Result<(Vec<Vec3>, Vec<Vec<usize>>), MeshError> {
    let mut it = tokens(text);
    let header = it.next().ok_or_else(|| MeshError::Parse("empty file".into()))?;
    if header != "OFF" {
        return Err(MeshError::Parse(format!("expected OFF header, got {header:?}")));
    }
    let mut next_num = |what: &str| -> Result<f64, MeshError> {
        it.next()
            .ok_or_else(|| MeshError::Parse(format!("unexpected end of file reading {what}")))?
            .parse::<f64>()
            .map_err(|e| MeshError::Parse(format!("bad {what}: {e}")))
    };
    let nv = next_num("vertex count")? as usize;
    let nf = next_num("face count")? as usize;
    let _ne = next_num("edge count")?;
    let mut vertices = Vec::with_capacity(nv);
    for _ in 0..nv {
        let x = next_num("vertex coordinate")?;
        let y = next_num("vertex coordinate")?;
        let z = next_num("vertex coordinate")?;
        vertices.push(crate::geom::v3(x, y, z));
    }
    let mut polygons = Vec::with_capacity(nf);
    for _ in 0..nf {
        let k = next_num("face size")? as usize;
        let mut poly = Vec::with_capacity(k);
        for _ in 0..k {
            poly.push(next_num("face index")? as usize);
        }
        polygons.push(poly);
    }
    Ok((vertices, polygons))
}

fn parse_obj(text: &str) -> Result<(Vec<Vec3>, Vec<Vec<usize>>), MeshError> {
    let mut vertices = Vec::new();
    let mut polygons = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("v") => {
                let mut coord = |what| -> Result<f64, MeshError> {
                    parts
                        .next()
                        .ok_or_else(|| MeshError::Parse(format!("line {}: missing {what}", ln + 1)))?
                        .parse()
                        .map_err(|e| MeshError::Parse(format!("line {}: {e}", ln + 1)))
                };
                let x = coord("x")?;
                let y = coord("y")?;
                let z = coord("z")?;
                vertices.push(crate::geom::v3(x, y, z));
            }
            Some("f") => {
                let mut poly = Vec::new();
                for tok in parts {
                    // "v", "v/vt", "v/vt/vn", "v//vn" — only the vertex index matters
                    let idx: i64 = tok
                        .split('/')
                        .next()
                        .unwrap_or("")
                        .parse()
                        .map_err(|e| MeshError::Parse(format!("line {}: {e}", ln + 1)))?;
                    let v = if idx < 0 {
                        (vertices.len() as i64 + idx) as usize
                    } else {
                        (idx - 1) as usize
                    };
                    poly.push(v);
                }
                polygons.push(poly);
            }
            // normals, texcoords, groups, materials: ignored
            _ => {}
        }
    }
    Ok((vertices, polygons))
}

/// OFF text for a mesh (used by the generators).
pub fn to_off(vertices: &[Vec3], faces: &[Vec<usize>]) -> String {
    let mut s = String::from("OFF\n");
    s.push_str(&format!("{} {} 0\n", vertices.len(), faces.len()));
    for p in vertices {
        s.push_str(&format!("{} {} {}\n", p.x, p.y, p.z));
    }
    for f in faces {
        s.push_str(&format!("{}", f.len()));
        for v in f {
            s.push_str(&format!(" {v}"));
        }
        s.push('\n');
    }
    s
}

pub mod fixtures {
    //! Small hand-written meshes shared by tests and examples.

    /// Regular tetrahedron with unit edge length.
    pub const TETRA_OFF: &str = "OFF
4 4 0
0 0 0
1 0 0
0.5 0.8660254037844386 0
0.5 0.28867513459481287 0.816496580927726
3 0 2 1
3 0 1 3
3 1 2 3
3 0 3 2
";

    /// Unit cube with quad faces, each listed starting at vertex 0 or
    /// vertex 6 so fan diagonals emanate from the two opposite corners.
    pub const CUBE_OFF: &str = "OFF
8 6 0
0 0 0
1 0 0
1 1 0
0 1 0
0 0 1
1 0 1
1 1 1
0 1 1
4 0 3 2 1
4 0 1 5 4
4 0 4 7 3
4 6 2 3 7
4 6 5 1 2
4 6 7 4 5
";

    /// Unit cube with the fan diagonals forming a tetrahedron on vertices
    /// {1, 3, 4, 6}; the corners {0, 2, 5, 7} carry no diagonals.
    pub const CUBE_ALT_OFF: &str = "OFF
8 6 0
0 0 0
1 0 0
1 1 0
0 1 0
0 0 1
1 0 1
1 1 1
0 1 1
4 3 2 1 0
4 1 5 4 0
4 4 7 3 0
4 6 2 3 7
4 1 2 6 5
4 4 5 6 7
";
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn tetrahedron_counts() {
        let m = parse_mesh(fixtures::TETRA_OFF, MeshFormat::Off).unwrap();
        assert_eq!(m.vertex_count(), 4);
        assert_eq!(m.edge_count(), 6);
        assert_eq!(m.face_count(), 4);
        assert_eq!(m.euler_characteristic(), 2);
        for e in 0..6 {
            assert_relative_eq!(m.edge_length(e), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn cube_fan_triangulation() {
        let m = parse_mesh(fixtures::CUBE_OFF, MeshFormat::Off).unwrap();
        assert_eq!(m.vertex_count(), 8);
        assert_eq!(m.face_count(), 12);
        assert_eq!(m.edge_count(), 18);
        assert_eq!(m.euler_characteristic(), 2);
        assert_relative_eq!(m.total_area(), 6.0, epsilon = 1e-12);
    }

    #[test]
    fn non_manifold_rejected() {
        // three faces sharing edge (0,1)
        let off = "OFF
5 3 0
0 0 0
1 0 0
0 1 0
0 0 1
0 -1 0
3 0 1 2
3 0 1 3
3 0 1 4
";
        match parse_mesh(off, MeshFormat::Off) {
            Err(MeshError::NonManifold(..)) => {}
            other => panic!("expected NonManifold, got {other:?}"),
        }
    }

    #[test]
    fn open_surface_rejected() {
        let off = "OFF
3 1 0
0 0 0
1 0 0
0 1 0
3 0 1 2
";
        match parse_mesh(off, MeshFormat::Off) {
            Err(MeshError::OpenSurface(..)) => {}
            other => panic!("expected OpenSurface, got {other:?}"),
        }
    }

    #[test]
    fn degenerate_face_rejected() {
        let off = "OFF
4 4 0
0 0 0
1 0 0
2 0 0
0 1 0
3 0 1 2
3 0 2 3
3 0 3 1
3 1 3 2
";
        match parse_mesh(off, MeshFormat::Off) {
            Err(MeshError::DegenerateFace(_)) => {}
            other => panic!("expected DegenerateFace, got {other:?}"),
        }
    }

    #[test]
    fn vertex_angles() {
        let cube = parse_mesh(fixtures::CUBE_OFF, MeshFormat::Off).unwrap();
        for v in 0..8 {
            assert_relative_eq!(cube.vertex_total_angle(v), 1.5 * PI, epsilon = 1e-12);
            assert!(!cube.is_saddle(v));
        }
        let tet = parse_mesh(fixtures::TETRA_OFF, MeshFormat::Off).unwrap();
        for v in 0..4 {
            assert_relative_eq!(tet.vertex_total_angle(v), PI, epsilon = 1e-12);
        }
    }

    #[test]
    fn obj_round_trip() {
        let obj = "
v 0 0 0
v 1 0 0
v 0.5 0.8660254037844386 0
v 0.5 0.28867513459481287 0.816496580927726
f 1 3 2
f 1 2 4
f 2 3 4
f 1 4 3
";
        let m = parse_mesh(obj, MeshFormat::Obj).unwrap();
        assert_eq!(m.vertex_count(), 4);
        assert_eq!(m.face_count(), 4);
    }

    #[test]
    fn twin_involution_and_triangle_cycles() {
        let m = parse_mesh(fixtures::CUBE_OFF, MeshFormat::Off).unwrap();
        for h in 0..m.halfedge_count() {
            assert_eq!(m.twin(m.twin(h)), h);
            assert_eq!(m.next(m.next(m.next(h))), h);
            assert_eq!(m.origin(m.twin(h)), m.dest(h));
        }
    }

    #[test]
    fn face_layout_is_isometric() {
        let m = parse_mesh(fixtures::TETRA_OFF, MeshFormat::Off).unwrap();
        for h in 0..m.halfedge_count() {
            let [a, b, c] = m.face_layout(h);
            let a3 = m.point(m.origin(h));
            let b3 = m.point(m.dest(h));
            let c3 = m.point(m.apex(h));
            assert_relative_eq!(a.dist(b), a3.dist(b3), epsilon = 1e-12);
            assert_relative_eq!(b.dist(c), b3.dist(c3), epsilon = 1e-12);
            assert_relative_eq!(c.dist(a), c3.dist(a3), epsilon = 1e-12);
            assert!(c.y > 0.0);
        }
    }
}
