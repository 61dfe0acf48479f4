//! Independent ground-truth generators used to validate the exact solver:
//! an exhaustive face-sequence unfolding search (exact on small meshes) and
//! a Steiner-point graph Dijkstra (an upper bound on any mesh).

use crate::geom::Vec3;
use crate::mesh::{HalfedgeMesh, SurfacePoint, VertexId};
use crate::search::{strip_search, SearchParams};
use ordered_float::OrderedFloat;
use std::cmp::Reverse;
use std::collections::BinaryHeap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("no valid face sequence within {0} faces")]
    DepthExceeded(usize),
}

/// Minimum over all face sequences of up to `max_faces` faces of the
/// unfolded straight-segment length, restricted to sequences where the
/// segment stays inside the unfolded strip. Paths through saddle vertices
/// are found by composing straight runs between saddles (geodesics can turn
/// only there), so the result is exact whenever every shortest path's
/// straight runs fit within `max_faces` faces.
pub fn brute_force_geodesic(
    mesh: &HalfedgeMesh,
    s: &SurfacePoint,
    t: &SurfacePoint,
    max_faces: usize,
) -> Result<f64, OracleError> {
    let params = SearchParams::with_depth(max_faces);
    let saddles: Vec<VertexId> = (0..mesh.vertex_count()).filter(|&v| mesh.is_saddle(v)).collect();

    // node 0 = s, node 1 = t, then one node per saddle
    let n = 2 + saddles.len();
    let mut dist_matrix = vec![vec![f64::INFINITY; n]; n];

    let record_from = |from_idx: usize, from_pt: &SurfacePoint, m: &mut Vec<Vec<f64>>| {
        let out = strip_search(mesh, from_pt, &params, Some(t));
        if let Some(d) = out.best_target() {
            m[from_idx][1] = m[from_idx][1].min(d);
        }
        for (k, &v) in saddles.iter().enumerate() {
            if let Some(d) = out.best_vertex(v) {
                m[from_idx][2 + k] = m[from_idx][2 + k].min(d);
            }
        }
        // s or a saddle coinciding with the target vertex
        if let SurfacePoint::Vertex(tv) = *t {
            if let Some(d) = out.best_vertex(tv) {
                m[from_idx][1] = m[from_idx][1].min(d);
            }
            if *from_pt == SurfacePoint::Vertex(tv) {
                m[from_idx][1] = 0.0;
            }
        }
        if from_pt == t {
            m[from_idx][1] = 0.0;
        }
    };

    record_from(0, s, &mut dist_matrix);
    for (k, &v) in saddles.iter().enumerate() {
        record_from(2 + k, &SurfacePoint::Vertex(v), &mut dist_matrix);
    }

    // Dijkstra on the tiny {s, t, saddles} graph
    let mut dist = vec![f64::INFINITY; n];
    dist[0] = 0.0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((OrderedFloat(0.0), 0usize)));
    while let Some(Reverse((OrderedFloat(d), u))) = heap.pop() {
        if d > dist[u] {
            continue;
        }
        if u == 1 {
            break;
        }
        for w in 0..n {
            let nd = d + dist_matrix[u][w];
            if nd < dist[w] {
                dist[w] = nd;
                heap.push(Reverse((OrderedFloat(nd), w)));
            }
        }
    }

    if dist[1].is_finite() {
        Ok(dist[1])
    } else {
        Err(OracleError::DepthExceeded(max_faces))
    }
}

/// Graph of mesh vertices plus `level` evenly spaced points per edge, with
/// arcs between co-facial nodes weighted by 3D segment length.
pub struct SteinerGraph {
    pub level: usize,
    /// Node positions; indices 0..V are mesh vertices, then `level` nodes
    /// per edge in edge order.
    pub positions: Vec<Vec3>,
    pub adjacency: Vec<Vec<(usize, f64)>>,
}

impl SteinerGraph {
    pub fn build(mesh: &HalfedgeMesh, level: usize) -> SteinerGraph {
        let nv = mesh.vertex_count();
        let mut positions: Vec<Vec3> = (0..nv).map(|v| mesh.point(v)).collect();
        for e in 0..mesh.edge_count() {
            for i in 1..=level {
                positions.push(mesh.edge_point(e, i as f64 / (level + 1) as f64));
            }
        }
        let edge_node = |e: usize, i: usize| nv + e * level + (i - 1);

        let mut adjacency = vec![Vec::new(); positions.len()];
        let connect = |adjacency: &mut Vec<Vec<(usize, f64)>>, a: usize, b: usize| {
            let w = positions[a].dist(positions[b]);
            adjacency[a].push((b, w));
            adjacency[b].push((a, w));
        };
        for f in 0..mesh.face_count() {
            let mut nodes: Vec<usize> = mesh.face_vertices(f).to_vec();
            for e in mesh.face_edges(f) {
                for i in 1..=level {
                    nodes.push(edge_node(e, i));
                }
            }
            for i in 0..nodes.len() {
                for j in i + 1..nodes.len() {
                    connect(&mut adjacency, nodes[i], nodes[j]);
                }
            }
        }
        // interior edges were handled per face; arcs within a shared edge got
        // added twice, which is harmless for shortest paths
        SteinerGraph {
            level,
            positions,
            adjacency,
        }
    }

    /// Node index for a surface point: vertices map exactly; other points
    /// snap to the nearest node (snap error returned).
    pub fn node_for(&self, mesh: &HalfedgeMesh, p: &SurfacePoint) -> (usize, f64) {
        if let SurfacePoint::Vertex(v) = *p {
            return (v, 0.0);
        }
        let pos = mesh.position(p);
        let (mut best, mut best_d) = (0usize, f64::INFINITY);
        for (i, q) in self.positions.iter().enumerate() {
            let d = pos.dist(*q);
            if d < best_d {
                best = i;
                best_d = d;
            }
        }
        (best, best_d)
    }

    pub fn dijkstra(&self, from: usize) -> Vec<f64> {
        let mut dist = vec![f64::INFINITY; self.positions.len()];
        dist[from] = 0.0;
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((OrderedFloat(0.0), from)));
        while let Some(Reverse((OrderedFloat(d), u))) = heap.pop() {
            if d > dist[u] {
                continue;
            }
            for &(w, len) in &self.adjacency[u] {
                let nd = d + len;
                if nd < dist[w] {
                    dist[w] = nd;
                    heap.push(Reverse((OrderedFloat(nd), w)));
                }
            }
        }
        dist
    }
}

/// Shortest path in the level-`level` Steiner graph; always an upper bound
/// on the exact geodesic distance, nonincreasing in `level`... up to the
/// snap error for non-node endpoints.
pub fn steiner_dijkstra(
    mesh: &HalfedgeMesh,
    s: &SurfacePoint,
    t: &SurfacePoint,
    level: usize,
) -> f64 {
    let g = SteinerGraph::build(mesh, level);
    let (sn, _) = g.node_for(mesh, s);
    let (tn, _) = g.node_for(mesh, t);
    g.dijkstra(sn)[tn]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::{fixtures, parse_mesh, MeshFormat};
    use approx::assert_relative_eq;

    #[test]
    fn cube_opposite_corners() {
        let m = parse_mesh(fixtures::CUBE_OFF, MeshFormat::Off).unwrap();
        let d = brute_force_geodesic(
            &m,
            &SurfacePoint::Vertex(0),
            &SurfacePoint::Vertex(6),
            4,
        )
        .unwrap();
        assert_relative_eq!(d, 5.0f64.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn same_face_points_straight() {
        let m = parse_mesh(fixtures::TETRA_OFF, MeshFormat::Off).unwrap();
        let s = SurfacePoint::Face {
            face: 0,
            bary: [0.6, 0.2, 0.2],
        };
        let t = SurfacePoint::Face {
            face: 0,
            bary: [0.2, 0.6, 0.2],
        };
        let d = brute_force_geodesic(&m, &s, &t, 4).unwrap();
        assert_relative_eq!(d, m.position(&s).dist(m.position(&t)), epsilon = 1e-12);
    }

    #[test]
    fn tetra_adjacent_vertices() {
        let m = parse_mesh(fixtures::TETRA_OFF, MeshFormat::Off).unwrap();
        let d = brute_force_geodesic(
            &m,
            &SurfacePoint::Vertex(0),
            &SurfacePoint::Vertex(1),
            4,
        )
        .unwrap();
        assert_relative_eq!(d, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn steiner_level_zero_uses_triangulated_edges() {
        let m = parse_mesh(fixtures::CUBE_OFF, MeshFormat::Off).unwrap();
        let d = steiner_dijkstra(&m, &SurfacePoint::Vertex(0), &SurfacePoint::Vertex(6), 0);
        // opposite cube corners: a fan diagonal (sqrt 2) plus a cube edge
        assert_relative_eq!(d, 1.0 + 2.0f64.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn steiner_upper_bound_and_convergent() {
        let m = parse_mesh(fixtures::CUBE_OFF, MeshFormat::Off).unwrap();
        let exact = 5.0f64.sqrt();
        let d0 = steiner_dijkstra(&m, &SurfacePoint::Vertex(0), &SurfacePoint::Vertex(6), 0);
        for level in 0..=10 {
            let d = steiner_dijkstra(&m, &SurfacePoint::Vertex(0), &SurfacePoint::Vertex(6), level);
            assert!(d >= exact - 1e-12, "level {level}: {d} < exact");
            assert!(d <= d0 + 1e-12, "level {level} worse than level 0");
            // successive levels are not nested point sets, so the bound
            // improves with level only up to the per-level snapping error
            let slack = 1.0 / (level + 1) as f64;
            assert!(d <= exact + slack, "level {level} bound too loose: {d}");
        }
        let d8 = steiner_dijkstra(&m, &SurfacePoint::Vertex(0), &SurfacePoint::Vertex(6), 8);
        assert!(d8 < exact * 1.02, "level 8 should be within 2%: {d8}");
    }
}
