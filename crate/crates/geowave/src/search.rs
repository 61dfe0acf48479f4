//! Shortest-first enumeration of planar face-strip unfoldings from a source
//! point, with visibility-wedge pruning.
//!
//! Each reachable strip contributes a planar image of the source "behind" the
//! edges it crosses. The search reports, per edge, every non-pruned source
//! image together with the visible parameter interval (the part of the edge a
//! straight unfolded segment can actually reach), and, per vertex, every
//! straight-line hit. Without the wedge pruning the enumeration blows up
//! exponentially even on tiny meshes.

use crate::geom::{v2, Rigid2, Vec2};
use crate::mesh::{EdgeId, FaceId, HalfedgeId, HalfedgeMesh, SurfacePoint, VertexId};
use ordered_float::OrderedFloat;
use std::cmp::Reverse;
use std::collections::BinaryHeap;

#[derive(Debug, Clone, Copy)]
pub struct SearchParams {
    /// Maximum number of faces in a strip.
    pub max_depth: usize,
    /// Strips whose nearest visible point exceeds this distance are pruned.
    pub radius_limit: f64,
    /// Hard cap on expanded strips, as a runaway guard.
    pub max_visits: usize,
}

impl SearchParams {
    pub fn with_depth(max_depth: usize) -> Self {
        SearchParams {
            max_depth,
            radius_limit: f64::INFINITY,
            max_visits: 2_000_000,
        }
    }
}

/// A planar source image seen from one edge.
#[derive(Debug, Clone, Copy)]
pub struct Placement {
    pub edge: EdgeId,
    /// Source image in the edge's canonical frame (canonical origin at
    /// (0,0), canonical destination at (L,0)). `src.y` is signed.
    pub src: Vec2,
    /// The face the unfolded straight paths continue into after crossing
    /// the edge.
    pub into_face: FaceId,
    /// Visible canonical parameter interval.
    pub t_lo: f64,
    pub t_hi: f64,
    /// Departure-direction wedge in the source's angular frame.
    pub ang_lo: f64,
    pub ang_hi: f64,
    /// Number of faces in the strip that produced this image.
    pub depth: usize,
}

impl Placement {
    /// Straight-line distance from the source image to canonical parameter
    /// `t`, valid for `t` within the visible interval.
    pub fn distance_at(&self, edge_len: f64, t: f64) -> f64 {
        v2(t * edge_len, 0.0).dist(self.src)
    }

    /// Minimum of `distance_at` over the visible interval intersected with
    /// `[lo, hi]`; `None` when the intersection is empty.
    pub fn min_distance_on(&self, edge_len: f64, lo: f64, hi: f64) -> Option<f64> {
        let a = self.t_lo.max(lo);
        let b = self.t_hi.min(hi);
        if a > b {
            return None;
        }
        let foot = (self.src.x / edge_len).clamp(a, b);
        Some(self.distance_at(edge_len, foot))
    }
}

/// A straight unfolded segment from the source reaching a vertex.
#[derive(Debug, Clone, Copy)]
pub struct VertexHit {
    pub dist: f64,
    /// Departure direction in the source's angular frame.
    pub angle: f64,
    pub depth: usize,
}

#[derive(Debug)]
pub struct SearchOutcome {
    pub placements: Vec<Vec<Placement>>,
    pub vertex_hits: Vec<Vec<VertexHit>>,
    /// Straight-segment candidate distances to the optional target point.
    pub target_candidates: Vec<f64>,
    pub visit_count: usize,
    /// True when some strip was cut off by the depth limit.
    pub truncated_by_depth: bool,
}

impl SearchOutcome {
    pub fn best_vertex(&self, v: VertexId) -> Option<f64> {
        self.vertex_hits[v]
            .iter()
            .map(|h| h.dist)
            .min_by(|a, b| a.partial_cmp(b).unwrap())
    }

    pub fn best_target(&self) -> Option<f64> {
        self.target_candidates
            .iter()
            .copied()
            .min_by(|a, b| a.partial_cmp(b).unwrap())
    }
}

struct Visit {
    /// Halfedge whose `face_layout` defines this visit's frame; its face is
    /// the face being visited.
    frame_h: HalfedgeId,
    src: Vec2,
    /// Visible interval endpoints on the entry edge; `None` for seed visits
    /// (whole face visible).
    wedge: Option<(Vec2, Vec2)>,
    /// Halfedges of the face that may be crossed onward.
    allowed: Vec<HalfedgeId>,
    /// Star-frame angle = `ang_offset + atan2(dir.y, dir.x)`.
    ang_offset: f64,
    depth: usize,
    min_dist: f64,
}

/// Run the strip enumeration from `source`.
pub fn strip_search(
    mesh: &HalfedgeMesh,
    source: &SurfacePoint,
    params: &SearchParams,
    target: Option<&SurfacePoint>,
) -> SearchOutcome {
    let mut out = SearchOutcome {
        placements: vec![Vec::new(); mesh.edge_count()],
        vertex_hits: vec![Vec::new(); mesh.vertex_count()],
        target_candidates: Vec::new(),
        visit_count: 0,
        truncated_by_depth: false,
    };
    let eps_len = 1e-12 * mesh.diameter();

    let mut heap: BinaryHeap<Reverse<(OrderedFloat<f64>, usize)>> = BinaryHeap::new();
    let mut visits: Vec<Visit> = Vec::new();
    let push = |visits: &mut Vec<Visit>, heap: &mut BinaryHeap<_>, v: Visit| {
        heap.push(Reverse((OrderedFloat(v.min_dist), visits.len())));
        visits.push(v);
    };

    seed(mesh, source, &mut out, |v| push(&mut visits, &mut heap, v));

    let target_faces: Vec<FaceId> = match target {
        Some(t) => match *t {
            SurfacePoint::Vertex(_) => Vec::new(), // via vertex hits
            _ => mesh.incident_faces(t),
        },
        None => Vec::new(),
    };

    while let Some(Reverse((_, vid))) = heap.pop() {
        let visit = std::mem::replace(
            &mut visits[vid],
            Visit {
                frame_h: 0,
                src: Vec2::ZERO,
                wedge: None,
                allowed: Vec::new(),
                ang_offset: 0.0,
                depth: 0,
                min_dist: 0.0,
            },
        );
        if visit.min_dist > params.radius_limit {
            continue;
        }
        out.visit_count += 1;
        if out.visit_count > params.max_visits {
            break;
        }

        let face = mesh.face_of(visit.frame_h);
        let layout = mesh.face_layout(visit.frame_h);
        let cone = visit.wedge.map(|(w0, w1)| {
            let mut r0 = w0 - visit.src;
            let mut r1 = w1 - visit.src;
            if r0.cross(r1) < 0.0 {
                std::mem::swap(&mut r0, &mut r1);
            }
            (r0, r1)
        });

        // target candidate
        if let Some(t) = target {
            if target_faces.contains(&face) && on_face(mesh, t, face) {
                let timg = mesh.layout_position(visit.frame_h, t);
                if in_cone(visit.src, cone, timg) {
                    out.target_candidates.push(visit.src.dist(timg));
                }
            }
        }

        // apex vertex hit (seed visits emitted their corner hits at seeding)
        if visit.wedge.is_some() {
            let apex = mesh.apex(visit.frame_h);
            let aimg = layout[2];
            if in_cone(visit.src, cone, aimg) {
                let d = aimg - visit.src;
                out.vertex_hits[apex].push(VertexHit {
                    dist: d.norm(),
                    angle: visit.ang_offset + d.y.atan2(d.x),
                    depth: visit.depth,
                });
            }
        }

        if visit.depth >= params.max_depth {
            out.truncated_by_depth = true;
            continue;
        }

        for &h in &visit.allowed {
            // endpoint images of h in the visit frame
            let (p0, p1) = halfedge_images(mesh, visit.frame_h, h, &layout);
            let (u0, u1) = match clip_to_cone(visit.src, cone, p0, p1) {
                Some(iv) => iv,
                None => continue,
            };
            let elen = p0.dist(p1);
            if (u1 - u0) * elen <= eps_len {
                continue;
            }
            let q0 = p0.lerp(p1, u0);
            let q1 = p0.lerp(p1, u1);

            // wedge angles
            let d0 = q0 - visit.src;
            let d1 = q1 - visit.src;
            let (ang_lo, ang_hi) = {
                let a0 = visit.ang_offset + d0.y.atan2(d0.x);
                let delta = d0.cross(d1).atan2(d0.dot(d1));
                if delta >= 0.0 {
                    (a0, a0 + delta)
                } else {
                    (a0 + delta, a0)
                }
            };

            // placement in the canonical edge frame
            let e = mesh.edge_of(h);
            let ch = mesh.canonical_halfedge(e);
            let l = mesh.edge_length(e);
            let (tc, t_lo, t_hi) = if ch == h {
                (
                    Rigid2::mapping_segment(p0, p1, v2(0.0, 0.0), v2(l, 0.0)),
                    u0,
                    u1,
                )
            } else {
                (
                    Rigid2::mapping_segment(p1, p0, v2(0.0, 0.0), v2(l, 0.0)),
                    1.0 - u1,
                    1.0 - u0,
                )
            };
            out.placements[e].push(Placement {
                edge: e,
                src: tc.apply(visit.src),
                into_face: mesh.face_of(mesh.twin(h)),
                t_lo,
                t_hi,
                ang_lo,
                ang_hi,
                depth: visit.depth,
            });

            // child visit across h
            let entry = mesh.twin(h);
            let lsh = p0.dist(p1);
            let t = Rigid2::mapping_segment(p1, p0, v2(0.0, 0.0), v2(lsh, 0.0));
            let src2 = t.apply(visit.src);
            // guard: a source image numerically on the fold line cannot
            // define a propagation cone
            if src2.y.abs() <= eps_len {
                continue;
            }
            let w0 = t.apply(q0);
            let w1 = t.apply(q1);
            let md = crate::geom::point_segment_distance(src2, w0, w1);
            if md > params.radius_limit {
                continue;
            }
            push(
                &mut visits,
                &mut heap,
                Visit {
                    frame_h: entry,
                    src: src2,
                    wedge: Some((w0, w1)),
                    allowed: vec![mesh.next(entry), mesh.next(mesh.next(entry))],
                    ang_offset: visit.ang_offset - t.angle(),
                    depth: visit.depth + 1,
                    min_dist: md,
                },
            );
        }
    }

    out
}

fn on_face(mesh: &HalfedgeMesh, p: &SurfacePoint, face: FaceId) -> bool {
    mesh.incident_faces(p).contains(&face)
}

fn in_cone(src: Vec2, cone: Option<(Vec2, Vec2)>, q: Vec2) -> bool {
    match cone {
        None => true,
        Some((r0, r1)) => {
            let d = q - src;
            let eps0 = 1e-9 * r0.norm() * d.norm();
            let eps1 = 1e-9 * r1.norm() * d.norm();
            r0.cross(d) >= -eps0 && d.cross(r1) >= -eps1
        }
    }
}

/// Clip segment p0..p1 to the (convex, < π) cone; returns the parameter
/// interval along the segment, slightly widened.
fn clip_to_cone(src: Vec2, cone: Option<(Vec2, Vec2)>, p0: Vec2, p1: Vec2) -> Option<(f64, f64)> {
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    if let Some((r0, r1)) = cone {
        // keep cross(r0, p(u)-src) >= 0 and cross(p(u)-src, r1) >= 0,
        // with a scale-relative slack so along-edge (collinear) geodesics
        // survive the clip
        for (ray, flip) in [(r0, false), (r1, true)] {
            let d0 = p0 - src;
            let d1 = p1 - src;
            let c0 = if flip { d0.cross(ray) } else { ray.cross(d0) };
            let c1 = if flip { d1.cross(ray) } else { ray.cross(d1) };
            let eps0 = 1e-9 * ray.norm() * d0.norm();
            let eps1 = 1e-9 * ray.norm() * d1.norm();
            let in0 = c0 >= -eps0;
            let in1 = c1 >= -eps1;
            if !in0 && !in1 {
                return None;
            }
            if in0 && in1 {
                continue;
            }
            // exactly one endpoint strictly outside: linear zero crossing
            let u = (c0 / (c0 - c1)).clamp(0.0, 1.0);
            if !in0 {
                lo = lo.max(u);
            } else {
                hi = hi.min(u);
            }
        }
    }
    if lo >= hi {
        None
    } else {
        Some((lo, hi))
    }
}

/// Planar endpoint images of halfedge `h` (which must bound the same face as
/// `frame_h`) in the layout of `frame_h`.
fn halfedge_images(
    mesh: &HalfedgeMesh,
    frame_h: HalfedgeId,
    h: HalfedgeId,
    layout: &[Vec2; 3],
) -> (Vec2, Vec2) {
    if h == frame_h {
        (layout[0], layout[1])
    } else if h == mesh.next(frame_h) {
        (layout[1], layout[2])
    } else {
        debug_assert_eq!(h, mesh.next(mesh.next(frame_h)));
        (layout[2], layout[0])
    }
}

fn seed(
    mesh: &HalfedgeMesh,
    source: &SurfacePoint,
    out: &mut SearchOutcome,
    mut push: impl FnMut(Visit),
) {
    match *source {
        SurfacePoint::Vertex(v) => {
            let star = mesh.vertex_star(v);
            let mut cum = 0.0;
            for &h in &star {
                let layout = mesh.face_layout(h); // origin(h) = v at (0,0)
                // neighbor hit along the outgoing edge
                let d = layout[1];
                out.vertex_hits[mesh.dest(h)].push(VertexHit {
                    dist: d.norm(),
                    angle: cum,
                    depth: 0,
                });
                // collinear placement on the incident edge: distance along it
                let e = mesh.edge_of(h);
                let ch = mesh.canonical_halfedge(e);
                let l = mesh.edge_length(e);
                let src = if ch == h { v2(0.0, 0.0) } else { v2(l, 0.0) };
                out.placements[e].push(Placement {
                    edge: e,
                    src,
                    into_face: mesh.face_of(ch),
                    t_lo: 0.0,
                    t_hi: 1.0,
                    ang_lo: cum,
                    ang_hi: cum,
                    depth: 0,
                });
                push(Visit {
                    frame_h: h,
                    src: v2(0.0, 0.0),
                    wedge: None,
                    allowed: vec![mesh.next(h)], // only the opposite edge
                    ang_offset: cum,
                    depth: 0,
                    min_dist: 0.0,
                });
                cum += mesh.corner_angle(h);
            }
        }
        SurfacePoint::Face { face, .. } => {
            let h = mesh.face_halfedges(face)[0];
            let src = mesh.layout_position(h, source);
            let layout = mesh.face_layout(h);
            for (k, vtx) in mesh.face_vertices(face).into_iter().enumerate() {
                let d = layout[k] - src;
                out.vertex_hits[vtx].push(VertexHit {
                    dist: d.norm(),
                    angle: d.y.atan2(d.x),
                    depth: 0,
                });
            }
            push(Visit {
                frame_h: h,
                src,
                wedge: None,
                allowed: vec![h, mesh.next(h), mesh.next(mesh.next(h))],
                ang_offset: 0.0,
                depth: 0,
                min_dist: 0.0,
            });
        }
        SurfacePoint::Edge { edge, t } => {
            let ch = mesh.canonical_halfedge(edge);
            let l = mesh.edge_length(edge);
            // collinear placement on the edge itself
            out.placements[edge].push(Placement {
                edge,
                src: v2(t * l, 0.0),
                into_face: mesh.face_of(ch),
                t_lo: 0.0,
                t_hi: 1.0,
                ang_lo: 0.0,
                ang_hi: 0.0,
                depth: 0,
            });
            let (va, vb) = mesh.edge_endpoints(edge);
            out.vertex_hits[va].push(VertexHit {
                dist: t * l,
                angle: 0.0,
                depth: 0,
            });
            out.vertex_hits[vb].push(VertexHit {
                dist: (1.0 - t) * l,
                angle: 0.0,
                depth: 0,
            });
            for h in [ch, mesh.twin(ch)] {
                let layout = mesh.face_layout(h);
                // parameter along h's direction
                let th = if h == ch { t } else { 1.0 - t };
                let src = layout[0].lerp(layout[1], th);
                let apex = mesh.apex(h);
                let d = layout[2] - src;
                out.vertex_hits[apex].push(VertexHit {
                    dist: d.norm(),
                    angle: d.y.atan2(d.x),
                    depth: 0,
                });
                push(Visit {
                    frame_h: h,
                    src,
                    wedge: None,
                    allowed: vec![mesh.next(h), mesh.next(mesh.next(h))],
                    ang_offset: 0.0,
                    depth: 0,
                    min_dist: 0.0,
                });
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::{fixtures, parse_mesh, MeshFormat};
    use approx::assert_relative_eq;

    #[test]
    fn cube_opposite_corner_straight_distance() {
        let m = parse_mesh(fixtures::CUBE_OFF, MeshFormat::Off).unwrap();
        let out = strip_search(
            &m,
            &SurfacePoint::Vertex(0),
            &SearchParams::with_depth(4),
            None,
        );
        // vertex 6 = (1,1,1) opposite of vertex 0
        let d = out.best_vertex(6).unwrap();
        assert_relative_eq!(d, 5.0f64.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn tetra_neighbors_at_unit_distance() {
        let m = parse_mesh(fixtures::TETRA_OFF, MeshFormat::Off).unwrap();
        let out = strip_search(
            &m,
            &SurfacePoint::Vertex(0),
            &SearchParams::with_depth(4),
            None,
        );
        for v in 1..4 {
            assert_relative_eq!(out.best_vertex(v).unwrap(), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn placement_coverage_on_cube() {
        let m = parse_mesh(fixtures::CUBE_OFF, MeshFormat::Off).unwrap();
        let out = strip_search(
            &m,
            &SurfacePoint::Vertex(0),
            &SearchParams::with_depth(6),
            None,
        );
        // every edge must be visible from somewhere
        for e in 0..m.edge_count() {
            assert!(!out.placements[e].is_empty(), "edge {e} has no placements");
        }
    }

    #[test]
    fn face_source_reaches_own_corners() {
        let m = parse_mesh(fixtures::TETRA_OFF, MeshFormat::Off).unwrap();
        let src = SurfacePoint::Face {
            face: 0,
            bary: [1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0],
        };
        let out = strip_search(&m, &src, &SearchParams::with_depth(4), None);
        let sp = m.position(&src);
        for v in m.face_vertices(0) {
            assert_relative_eq!(
                out.best_vertex(v).unwrap(),
                sp.dist(m.point(v)),
                epsilon = 1e-12
            );
        }
    }
}
