//! Exact single-source geodesic distances by continuous-Dijkstra window
//! propagation.
//!
//! A window is an interval on a mesh edge together with an unfolded
//! pseudo-source: the distance to any point of the interval is the
//! pseudo-source offset `d` plus the straight planar distance to the image.
//! Windows are propagated across faces in nondecreasing distance order and
//! trimmed pairwise where they overlap, so each edge ends up covered by the
//! windows realizing the true distance function. Saddle vertices (total
//! angle > 2π) spawn fresh pseudo-sources when first reached; geodesics can
//! turn nowhere else.
//!
//! All geometry is 64-bit floating point with scale-relative tolerances;
//! correctness at desk scale is established against the independent oracles
//! rather than by exact arithmetic.

use crate::geom::{point_segment_distance, solve_quadratic, v2, Rigid2, Vec2, Vec3};
use crate::mesh::{EdgeId, FaceId, HalfedgeId, HalfedgeMesh, SurfacePoint, VertexId};
use crate::unfold::unfold_strip;
use ordered_float::OrderedFloat;
use std::cmp::Reverse;
use std::collections::BinaryHeap;
use thiserror::Error;

/// Windows narrower than this (in edge parameter) are discarded; prevents
/// event-queue flooding from numeric slivers.
pub const WIDTH_CUTOFF: f64 = 1e-12;
/// Parameter slack when deciding whether a window reaches an edge endpoint.
const ENDPOINT_EPS: f64 = 1e-9;

pub type WindowId = usize;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Root {
    /// The pseudo-source chain starts at the query source itself.
    Source,
    /// The chain starts at a saddle vertex reached at distance `d`.
    Saddle(VertexId),
}

/// Interval on an edge carrying an unfolded pseudo-source.
///
/// Coordinates live in the edge's canonical frame (canonical origin at 0,
/// destination at edge length along x). `src.y >= 0` always; the side the
/// image physically lies on is the side opposite `into_face`.
#[derive(Debug, Clone)]
pub struct Window {
    pub edge: EdgeId,
    /// Interval in canonical edge parameter, `b0 < b1`.
    pub b0: f64,
    pub b1: f64,
    /// Pseudo-source image in canonical length units, `src.y >= 0`.
    pub src: Vec2,
    /// Accumulated distance from the true source to the pseudo-source.
    pub d: f64,
    /// Face the window propagates into next.
    pub into_face: FaceId,
    pub parent: Option<WindowId>,
    pub root: Root,
    /// Collinear window (pseudo-source on the edge line); carries distance
    /// along the edge but does not propagate.
    pub carrier: bool,
    alive: bool,
}

impl Window {
    /// Distance value at canonical parameter `t`.
    pub fn value_at(&self, edge_len: f64, t: f64) -> f64 {
        self.d + v2(t * edge_len, 0.0).dist(self.src)
    }

    /// Minimum distance value over the interval.
    pub fn min_value(&self, edge_len: f64) -> f64 {
        let foot = (self.src.x / edge_len).clamp(self.b0, self.b1);
        self.value_at(edge_len, foot)
    }

    pub fn is_alive(&self) -> bool {
        self.alive
    }
}

#[derive(Debug, Clone, Copy)]
pub enum VertexPred {
    /// The vertex is the source itself.
    Source,
    /// Reached through a window at canonical parameter 0 or 1.
    Window { id: WindowId, t: f64 },
}

#[derive(Debug, Error)]
pub enum PathError {
    #[error("target unreachable (disconnected mesh?)")]
    Unreachable,
}

/// Result of a propagation run: surviving windows per edge plus exact
/// per-vertex distances. Immutable once built; queries may run concurrently.
#[derive(Debug)]
pub struct DistanceField {
    pub source: SurfacePoint,
    windows: Vec<Window>,
    per_edge: Vec<Vec<WindowId>>,
    pub vertex_distance: Vec<f64>,
    vertex_pred: Vec<Option<VertexPred>>,
    /// Whether every event-queue pop had a nondecreasing key.
    pub pops_monotone: bool,
}

impl DistanceField {
    pub fn window(&self, id: WindowId) -> &Window {
        &self.windows[id]
    }

    /// Alive windows on an edge, sorted by interval start.
    pub fn edge_windows(&self, e: EdgeId) -> impl Iterator<Item = (WindowId, &Window)> {
        self.per_edge[e]
            .iter()
            .filter(move |&&id| self.windows[id].alive)
            .map(move |&id| (id, &self.windows[id]))
    }

    pub fn window_count(&self) -> usize {
        self.windows.iter().filter(|w| w.alive).count()
    }
}

// ---------------------------------------------------------------------------
// trimming

#[derive(Clone, Copy)]
pub(crate) struct WinGeom {
    pub a: f64,
    pub h: f64,
    pub d: f64,
}

impl WinGeom {
    fn of(w: &Window) -> WinGeom {
        WinGeom {
            a: w.src.x,
            h: w.src.y,
            d: w.d,
        }
    }

    pub fn value(&self, x: f64) -> f64 {
        self.d + (x - self.a).hypot(self.h)
    }
}

/// Parameters (length units) in `(lo, hi)` where the two distance functions
/// are equal. Solving f_a = f_b reduces to a quadratic; both roots are kept
/// when both fall inside, and spurious squaring roots are filtered by
/// re-evaluation.
pub(crate) fn crossovers(a: WinGeom, b: WinGeom, lo: f64, hi: f64, scale: f64) -> Vec<f64> {
    let c = b.d - a.d;
    let alpha = 2.0 * (b.a - a.a);
    let mut roots = if c.abs() <= 1e-14 * scale {
        // equal offsets: g_a^2 = g_b^2 is linear
        let beta = a.a * a.a + a.h * a.h - b.a * b.a - b.h * b.h;
        solve_quadratic(0.0, alpha, beta)
    } else {
        let beta = a.a * a.a + a.h * a.h - b.a * b.a - b.h * b.h - c * c;
        solve_quadratic(
            alpha * alpha - 4.0 * c * c,
            2.0 * alpha * beta + 8.0 * c * c * b.a,
            beta * beta - 4.0 * c * c * (b.a * b.a + b.h * b.h),
        )
    };
    roots.retain(|&x| {
        x > lo && x < hi && (a.value(x) - b.value(x)).abs() <= 1e-7 * scale
    });
    roots.sort_by(|x, y| x.partial_cmp(y).unwrap());
    roots.dedup_by(|x, y| (*x - *y).abs() <= 1e-12 * scale);
    roots
}

/// Sub-runs of `(lo, hi)` where the incoming function beats the resident
/// one. Ties go to the resident window.
fn incoming_wins(incoming: WinGeom, resident: WinGeom, lo: f64, hi: f64, scale: f64) -> Vec<(f64, f64)> {
    let mut cuts = vec![lo];
    cuts.extend(crossovers(incoming, resident, lo, hi, scale));
    cuts.push(hi);
    let mut runs: Vec<(f64, f64)> = Vec::new();
    for k in 0..cuts.len() - 1 {
        let (a, b) = (cuts[k], cuts[k + 1]);
        let mid = 0.5 * (a + b);
        let fi = incoming.value(mid);
        let fr = resident.value(mid);
        if fi < fr - 1e-12 * scale {
            match runs.last_mut() {
                Some(last) if (last.1 - a).abs() <= 1e-15 * scale => last.1 = b,
                _ => runs.push((a, b)),
            }
        }
    }
    runs
}

/// Pairwise-dominance update on a shared edge: returns windows covering the
/// union of the two intervals such that at every parameter the surviving
/// window has the weakly smaller distance value. Zero-width survivors are
/// discarded.
pub fn trim_windows(mesh: &HalfedgeMesh, existing: &Window, incoming: &Window) -> Vec<Window> {
    assert_eq!(existing.edge, incoming.edge);
    let l = mesh.edge_length(existing.edge);
    let scale = l + existing.d + incoming.d;
    let lo = existing.b0.max(incoming.b0) * l;
    let hi = existing.b1.min(incoming.b1) * l;
    let mut out = Vec::new();
    if lo >= hi {
        out.push(existing.clone());
        out.push(incoming.clone());
        return out;
    }
    let wins = incoming_wins(WinGeom::of(incoming), WinGeom::of(existing), lo, hi, scale);
    // resident keeps its interval minus the incoming-win runs
    let mut keep_runs = vec![(existing.b0 * l, existing.b1 * l)];
    for &(a, b) in &wins {
        let mut next = Vec::new();
        for (ka, kb) in keep_runs {
            if b <= ka || a >= kb {
                next.push((ka, kb));
            } else {
                if a > ka {
                    next.push((ka, a));
                }
                if b < kb {
                    next.push((b, kb));
                }
            }
        }
        keep_runs = next;
    }
    for (ka, kb) in keep_runs {
        if (kb - ka) / l > WIDTH_CUTOFF {
            let mut w = existing.clone();
            w.b0 = ka / l;
            w.b1 = kb / l;
            out.push(w);
        }
    }
    // incoming keeps its non-overlap parts plus its win runs
    let mut inc_runs = Vec::new();
    if incoming.b0 * l < lo {
        inc_runs.push((incoming.b0 * l, lo));
    }
    inc_runs.extend(wins);
    if incoming.b1 * l > hi {
        inc_runs.push((hi, incoming.b1 * l));
    }
    // merge adjacent
    inc_runs.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
    let mut merged: Vec<(f64, f64)> = Vec::new();
    for (a, b) in inc_runs {
        match merged.last_mut() {
            Some(last) if a - last.1 <= 1e-15 * scale => last.1 = b,
            _ => merged.push((a, b)),
        }
    }
    for (ka, kb) in merged {
        if (kb - ka) / l > WIDTH_CUTOFF {
            let mut w = incoming.clone();
            w.b0 = ka / l;
            w.b1 = kb / l;
            out.push(w);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// propagation

struct Propagator<'m> {
    mesh: &'m HalfedgeMesh,
    windows: Vec<Window>,
    per_edge: Vec<Vec<WindowId>>,
    vertex_distance: Vec<f64>,
    vertex_pred: Vec<Option<VertexPred>>,
    vertex_best: Vec<f64>,
    vertex_final: Vec<bool>,
    // key, class (vertices first on ties), edge id, interval start
    queue: BinaryHeap<Reverse<(OrderedFloat<f64>, u8, usize, OrderedFloat<f64>, usize)>>,
    last_key: f64,
    monotone: bool,
}

/// Exact geodesic distances from `source` to the whole surface.
pub fn propagate(mesh: &HalfedgeMesh, source: &SurfacePoint) -> DistanceField {
    let mut p = Propagator {
        mesh,
        windows: Vec::new(),
        per_edge: vec![Vec::new(); mesh.edge_count()],
        vertex_distance: vec![f64::INFINITY; mesh.vertex_count()],
        vertex_pred: vec![None; mesh.vertex_count()],
        vertex_best: vec![f64::INFINITY; mesh.vertex_count()],
        vertex_final: vec![false; mesh.vertex_count()],
        queue: BinaryHeap::new(),
        last_key: 0.0,
        monotone: true,
    };
    p.seed(source);
    p.run();
    DistanceField {
        source: *source,
        windows: p.windows,
        per_edge: p.per_edge,
        vertex_distance: p.vertex_distance,
        vertex_pred: p.vertex_pred,
        pops_monotone: p.monotone,
    }
}

impl<'m> Propagator<'m> {
    fn seed(&mut self, source: &SurfacePoint) {
        match *source {
            SurfacePoint::Vertex(v) => {
                self.offer_vertex(v, 0.0, VertexPred::Source);
                self.spawn_from_vertex(v, 0.0, Root::Source);
            }
            SurfacePoint::Face { face, .. } => {
                let h0 = self.mesh.face_halfedges(face)[0];
                let img = self.mesh.layout_position(h0, source);
                self.seed_face_windows(face, h0, img, 0.0, Root::Source, None);
            }
            SurfacePoint::Edge { edge, t } => {
                let l = self.mesh.edge_length(edge);
                self.add_window(Window {
                    edge,
                    b0: 0.0,
                    b1: 1.0,
                    src: v2(t * l, 0.0),
                    d: 0.0,
                    into_face: self.mesh.edge_faces(edge).0,
                    parent: None,
                    root: Root::Source,
                    carrier: true,
                    alive: true,
                });
                let ch = self.mesh.canonical_halfedge(edge);
                for h in [ch, self.mesh.twin(ch)] {
                    let f = self.mesh.face_of(h);
                    let h0 = self.mesh.face_halfedges(f)[0];
                    let img = self.mesh.layout_position(h0, source);
                    self.seed_face_windows(f, h0, img, 0.0, Root::Source, Some(edge));
                }
            }
        }
    }

    /// Windows on the edges of face `f` for a pseudo-source at `img`
    /// (coordinates in the layout frame of `h0`).
    fn seed_face_windows(
        &mut self,
        _f: FaceId,
        h0: HalfedgeId,
        img: Vec2,
        d: f64,
        root: Root,
        skip_edge: Option<EdgeId>,
    ) {
        let layout = self.mesh.face_layout(h0);
        let hs = [h0, self.mesh.next(h0), self.mesh.next(self.mesh.next(h0))];
        let ends = [(0usize, 1usize), (1, 2), (2, 0)];
        for (k, &h) in hs.iter().enumerate() {
            let e = self.mesh.edge_of(h);
            if skip_edge == Some(e) {
                continue;
            }
            let (p0, p1) = (layout[ends[k].0], layout[ends[k].1]);
            let l = p0.dist(p1);
            let ch = self.mesh.canonical_halfedge(e);
            let t = if ch == h {
                Rigid2::mapping_segment(p0, p1, v2(0.0, 0.0), v2(l, 0.0))
            } else {
                Rigid2::mapping_segment(p1, p0, v2(0.0, 0.0), v2(l, 0.0))
            };
            let mut src = t.apply(img);
            src.y = src.y.abs();
            self.add_window(Window {
                edge: e,
                b0: 0.0,
                b1: 1.0,
                src,
                d,
                into_face: self.mesh.face_of(self.mesh.twin(h)),
                parent: None,
                root,
                carrier: src.y <= WIDTH_CUTOFF * l,
                alive: true,
            });
        }
    }

    /// Pseudo-source at vertex `v`: full windows on the opposite edge of
    /// every incident face, plus collinear carriers along incident edges.
    fn spawn_from_vertex(&mut self, v: VertexId, d: f64, root: Root) {
        for h in self.mesh.vertex_star(v) {
            // opposite edge
            let hop = self.mesh.next(h);
            let e = self.mesh.edge_of(hop);
            let layout = self.mesh.face_layout(hop); // apex = v
            let l = layout[0].dist(layout[1]);
            let apex = layout[2];
            let ch = self.mesh.canonical_halfedge(e);
            let src = if ch == hop {
                v2(apex.x, apex.y)
            } else {
                v2(l - apex.x, apex.y)
            };
            self.add_window(Window {
                edge: e,
                b0: 0.0,
                b1: 1.0,
                src,
                d,
                into_face: self.mesh.face_of(self.mesh.twin(hop)),
                parent: None,
                root,
                carrier: false,
                alive: true,
            });
            // carrier along the incident edge
            let ei = self.mesh.edge_of(h);
            let li = self.mesh.edge_length(ei);
            let (o, _) = self.mesh.edge_endpoints(ei);
            self.add_window(Window {
                edge: ei,
                b0: 0.0,
                b1: 1.0,
                src: if o == v { v2(0.0, 0.0) } else { v2(li, 0.0) },
                d,
                into_face: self.mesh.edge_faces(ei).0,
                parent: None,
                root,
                carrier: true,
                alive: true,
            });
        }
    }

    fn offer_vertex(&mut self, v: VertexId, dist: f64, pred: VertexPred) {
        if self.vertex_final[v] || dist >= self.vertex_best[v] {
            return;
        }
        self.vertex_best[v] = dist;
        self.vertex_pred[v] = Some(pred);
        self.queue.push(Reverse((
            OrderedFloat(dist),
            0,
            v,
            OrderedFloat(0.0),
            usize::MAX,
        )));
    }

    /// Trim `w` against the resident windows of its edge and store the
    /// surviving pieces; registers endpoint vertex candidates and queues
    /// propagation events.
    fn add_window(&mut self, w: Window) {
        if w.b1 - w.b0 <= WIDTH_CUTOFF {
            return;
        }
        let e = w.edge;
        let l = self.mesh.edge_length(e);
        let geom = WinGeom::of(&w);
        let mut pieces = vec![(w.b0, w.b1)];
        let resident_ids: Vec<WindowId> = self.per_edge[e].clone();
        for rid in resident_ids {
            if !self.windows[rid].alive || pieces.is_empty() {
                continue;
            }
            let (rb0, rb1) = (self.windows[rid].b0, self.windows[rid].b1);
            let rgeom = WinGeom::of(&self.windows[rid]);
            let scale = l + w.d + rgeom.d;
            let mut next_pieces = Vec::new();
            let mut resident_losses: Vec<(f64, f64)> = Vec::new();
            for (p0, p1) in pieces {
                let lo = p0.max(rb0) * l;
                let hi = p1.min(rb1) * l;
                if hi - lo <= WIDTH_CUTOFF * l {
                    next_pieces.push((p0, p1));
                    continue;
                }
                let wins = incoming_wins(geom, rgeom, lo, hi, scale);
                // incoming survivors: outside-overlap parts plus win runs
                if p0 * l < lo {
                    next_pieces.push((p0, lo / l));
                }
                for &(a, b) in &wins {
                    next_pieces.push((a / l, b / l));
                    resident_losses.push((a / l, b / l));
                }
                if p1 * l > hi {
                    next_pieces.push((hi / l, p1));
                }
            }
            if !resident_losses.is_empty() {
                self.shrink_resident(rid, &resident_losses);
            }
            // merge adjacent incoming pieces
            next_pieces.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
            let mut merged: Vec<(f64, f64)> = Vec::new();
            for (a, b) in next_pieces {
                match merged.last_mut() {
                    Some(last) if a - last.1 <= WIDTH_CUTOFF => last.1 = last.1.max(b),
                    _ => merged.push((a, b)),
                }
            }
            pieces = merged;
        }
        for (a, b) in pieces {
            if b - a <= WIDTH_CUTOFF {
                continue;
            }
            let mut piece = w.clone();
            piece.b0 = a;
            piece.b1 = b;
            let id = self.windows.len();
            self.register_vertex_candidates(&piece, id);
            let key = piece.d + piece.min_value_geom(l);
            self.windows.push(piece);
            self.per_edge[e].push(id);
            self.queue.push(Reverse((
                OrderedFloat(key),
                1,
                e,
                OrderedFloat(a),
                id,
            )));
        }
    }

    /// Remove the given parameter runs from a resident window, splitting it
    /// when a run falls strictly inside.
    fn shrink_resident(&mut self, rid: WindowId, losses: &[(f64, f64)]) {
        let mut keep = vec![(self.windows[rid].b0, self.windows[rid].b1)];
        for &(a, b) in losses {
            let mut next = Vec::new();
            for (ka, kb) in keep {
                if b <= ka || a >= kb {
                    next.push((ka, kb));
                } else {
                    if a - ka > WIDTH_CUTOFF {
                        next.push((ka, a));
                    }
                    if kb - b > WIDTH_CUTOFF {
                        next.push((b, kb));
                    }
                }
            }
            keep = next;
        }
        match keep.len() {
            0 => self.windows[rid].alive = false,
            _ => {
                self.windows[rid].b0 = keep[0].0;
                self.windows[rid].b1 = keep[0].1;
                for &(ka, kb) in &keep[1..] {
                    let mut clone = self.windows[rid].clone();
                    clone.b0 = ka;
                    clone.b1 = kb;
                    let id = self.windows.len();
                    let e = clone.edge;
                    let l = self.mesh.edge_length(e);
                    // clamp to the current event key: the piece may already
                    // have been propagated once under its original key
                    let key = (clone.d + clone.min_value_geom(l)).max(self.last_key);
                    self.windows.push(clone);
                    self.per_edge[e].push(id);
                    // requeue the split-off piece so it still propagates
                    self.queue.push(Reverse((
                        OrderedFloat(key),
                        1,
                        e,
                        OrderedFloat(ka),
                        id,
                    )));
                }
            }
        }
    }

    fn register_vertex_candidates(&mut self, w: &Window, id: WindowId) {
        let l = self.mesh.edge_length(w.edge);
        let (va, vb) = self.mesh.edge_endpoints(w.edge);
        if w.b0 <= ENDPOINT_EPS {
            self.offer_vertex(va, w.value_at(l, 0.0), VertexPred::Window { id, t: 0.0 });
        }
        if w.b1 >= 1.0 - ENDPOINT_EPS {
            self.offer_vertex(vb, w.value_at(l, 1.0), VertexPred::Window { id, t: 1.0 });
        }
    }

    fn run(&mut self) {
        while let Some(Reverse((OrderedFloat(key), class, a, _b, id))) = self.queue.pop() {
            debug_assert!(
                key >= self.last_key - 1e-9 * (1.0 + self.last_key.abs()),
                "event keys must be nondecreasing: {key} after {}",
                self.last_key
            );
            if key < self.last_key - 1e-9 * (1.0 + self.last_key.abs()) {
                self.monotone = false;
            }
            self.last_key = self.last_key.max(key);
            if class == 0 {
                let v = a;
                if self.vertex_final[v] || key > self.vertex_best[v] + 1e-15 {
                    continue;
                }
                self.vertex_final[v] = true;
                self.vertex_distance[v] = self.vertex_best[v];
                if self.mesh.is_saddle(v) {
                    self.spawn_from_vertex(v, self.vertex_best[v], Root::Saddle(v));
                }
            } else {
                if !self.windows[id].alive || self.windows[id].carrier {
                    continue;
                }
                self.propagate_window(id);
            }
        }
        // any unreached vertex means a disconnected mesh; leave +inf
    }

    /// Project the window's interval across its target face and create
    /// child windows on the two far edges.
    fn propagate_window(&mut self, id: WindowId) {
        let w = self.windows[id].clone();
        let l = self.mesh.edge_length(w.edge);
        let ch = self.mesh.canonical_halfedge(w.edge);
        let h_in = if self.mesh.face_of(ch) == w.into_face {
            ch
        } else {
            self.mesh.twin(ch)
        };
        // express source and interval in the frame of h_in; the face being
        // entered lies at +y, so the pseudo-source sits below the axis
        let (sx, lo, hi) = if h_in == ch {
            (w.src.x, w.b0 * l, w.b1 * l)
        } else {
            (l - w.src.x, (1.0 - w.b1) * l, (1.0 - w.b0) * l)
        };
        let src = v2(sx, -w.src.y);
        if w.src.y <= WIDTH_CUTOFF * l {
            return; // collinear; carriers do not propagate
        }
        let layout = self.mesh.face_layout(h_in);
        // source below the axis: the ray toward hi is the ccw-first bound
        let r0 = v2(hi, 0.0) - src;
        let r1 = v2(lo, 0.0) - src;
        debug_assert!(r0.cross(r1) >= 0.0);

        for (h, p0, p1) in [
            (self.mesh.next(h_in), layout[1], layout[2]),
            (self.mesh.next(self.mesh.next(h_in)), layout[2], layout[0]),
        ] {
            let Some((u0, u1)) = clip_to_cone(src, r0, r1, p0, p1) else {
                continue;
            };
            let elen = p0.dist(p1);
            if (u1 - u0) * elen <= WIDTH_CUTOFF * elen {
                continue;
            }
            let e = self.mesh.edge_of(h);
            let ch2 = self.mesh.canonical_halfedge(e);
            let (t, t_lo, t_hi) = if ch2 == h {
                (
                    Rigid2::mapping_segment(p0, p1, v2(0.0, 0.0), v2(elen, 0.0)),
                    u0,
                    u1,
                )
            } else {
                (
                    Rigid2::mapping_segment(p1, p0, v2(0.0, 0.0), v2(elen, 0.0)),
                    1.0 - u1,
                    1.0 - u0,
                )
            };
            let mut src2 = t.apply(src);
            src2.y = src2.y.abs();
            self.add_window(Window {
                edge: e,
                b0: t_lo,
                b1: t_hi,
                src: src2,
                d: w.d,
                into_face: self.mesh.face_of(self.mesh.twin(h)),
                parent: Some(id),
                root: w.root,
                carrier: false,
                alive: true,
            });
        }
    }
}

impl Window {
    fn min_value_geom(&self, edge_len: f64) -> f64 {
        let foot = (self.src.x / edge_len).clamp(self.b0, self.b1);
        v2(foot * edge_len, 0.0).dist(self.src)
    }
}

/// Clip segment p0..p1 against the cone between rays r0, r1 from `src`
/// (cross(r0, r1) >= 0). Scale-relative slack keeps boundary-collinear
/// segments alive.
fn clip_to_cone(src: Vec2, r0: Vec2, r1: Vec2, p0: Vec2, p1: Vec2) -> Option<(f64, f64)> {
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for (ray, flip) in [(r0, false), (r1, true)] {
        let d0 = p0 - src;
        let d1 = p1 - src;
        let c0 = if flip { d0.cross(ray) } else { ray.cross(d0) };
        let c1 = if flip { d1.cross(ray) } else { ray.cross(d1) };
        let eps0 = 1e-12 * ray.norm() * d0.norm();
        let eps1 = 1e-12 * ray.norm() * d1.norm();
        let in0 = c0 >= -eps0;
        let in1 = c1 >= -eps1;
        if !in0 && !in1 {
            return None;
        }
        if in0 && in1 {
            continue;
        }
        let u = (c0 / (c0 - c1)).clamp(0.0, 1.0);
        if !in0 {
            lo = lo.max(u);
        } else {
            hi = hi.min(u);
        }
    }
    if lo >= hi {
        None
    } else {
        Some((lo, hi))
    }
}

// ---------------------------------------------------------------------------
// queries

/// Exact geodesic distance from the field's source to an arbitrary surface
/// point.
pub fn distance_at(mesh: &HalfedgeMesh, field: &DistanceField, q: &SurfacePoint) -> f64 {
    match *q {
        SurfacePoint::Vertex(v) => field.vertex_distance[v],
        SurfacePoint::Edge { edge, t } => {
            let l = mesh.edge_length(edge);
            let mut best = f64::INFINITY;
            for (_, w) in field.edge_windows(edge) {
                if t >= w.b0 - ENDPOINT_EPS && t <= w.b1 + ENDPOINT_EPS {
                    best = best.min(w.value_at(l, t));
                }
            }
            let (va, vb) = mesh.edge_endpoints(edge);
            best = best.min(field.vertex_distance[va] + t * l);
            best.min(field.vertex_distance[vb] + (1.0 - t) * l)
        }
        SurfacePoint::Face { face, .. } => best_face_route(mesh, field, face, q).0,
    }
}

enum FaceRoute {
    DirectSource,
    ViaVertex(VertexId),
    ViaWindow { id: WindowId, t_cross: f64 },
}

/// Best distance to a point in face `face` over source-in-face, through-a-
/// corner, and segment+window routes across the three boundary edges.
fn best_face_route(
    mesh: &HalfedgeMesh,
    field: &DistanceField,
    face: FaceId,
    q: &SurfacePoint,
) -> (f64, FaceRoute) {
    let qpos = mesh.position(q);
    let mut best = f64::INFINITY;
    let mut route = FaceRoute::DirectSource;
    if mesh.incident_faces(&field.source).contains(&face) {
        best = qpos.dist(mesh.position(&field.source));
    }
    for v in mesh.face_vertices(face) {
        let d = field.vertex_distance[v] + qpos.dist(mesh.point(v));
        if d < best {
            best = d;
            route = FaceRoute::ViaVertex(v);
        }
    }
    for e in mesh.face_edges(face) {
        let l = mesh.edge_length(e);
        let ch = mesh.canonical_halfedge(e);
        let h_f = mesh.halfedge_of_edge_in_face(e, face);
        // q in the canonical frame of e, with signed y (face side)
        let q_local = mesh.layout_position(h_f, q);
        let q_c = if h_f == ch {
            q_local
        } else {
            v2(l - q_local.x, -q_local.y)
        };
        for (id, w) in field.edge_windows(e) {
            // signed source image: opposite side of into_face
            let s_c = if w.into_face == mesh.face_of(ch) {
                v2(w.src.x, -w.src.y)
            } else {
                v2(w.src.x, w.src.y)
            };
            // minimize |s - (x,0)| + |(x,0) - q| over the interval (convex)
            let (mut a, mut b) = (w.b0 * l, w.b1 * l);
            let g = |x: f64| s_c.dist(v2(x, 0.0)) + q_c.dist(v2(x, 0.0));
            for _ in 0..70 {
                let m1 = a + (b - a) / 3.0;
                let m2 = b - (b - a) / 3.0;
                if g(m1) <= g(m2) {
                    b = m2;
                } else {
                    a = m1;
                }
            }
            let x = 0.5 * (a + b);
            let d = w.d + g(x);
            if d < best {
                best = d;
                route = FaceRoute::ViaWindow {
                    id,
                    t_cross: (x / l).clamp(w.b0, w.b1),
                };
            }
        }
    }
    (best, route)
}

// ---------------------------------------------------------------------------
// path extraction

/// A shortest path from the field's source to a target, as surface points
/// with 3D positions, the crossed-edge sequence and the traversed faces.
#[derive(Debug, Clone)]
pub struct GeodesicPath {
    pub points: Vec<SurfacePoint>,
    pub positions: Vec<Vec3>,
    pub length: f64,
    /// Interior edge crossings (canonical parameter), in path order s → t.
    pub crossed_edges: Vec<(EdgeId, f64)>,
    /// Faces traversed between consecutive points, in path order.
    pub strip: Vec<FaceId>,
}

/// Backtrace a shortest path from `target` through predecessor windows.
pub fn extract_path(
    mesh: &HalfedgeMesh,
    field: &DistanceField,
    target: &SurfacePoint,
) -> Result<GeodesicPath, PathError> {
    // accumulated in reverse (target → source)
    let mut points: Vec<SurfacePoint> = Vec::new();
    let mut faces_rev: Vec<FaceId> = Vec::new();
    let mut crossed_rev: Vec<(EdgeId, f64)> = Vec::new();

    points.push(*target);

    // Entry point into the window chain.
    let mut cursor: Option<(WindowId, f64)> = None;
    let mut pending_vertex: Option<VertexId> = None;
    match *target {
        SurfacePoint::Vertex(v) => {
            if field.vertex_distance[v].is_infinite() {
                return Err(PathError::Unreachable);
            }
            pending_vertex = Some(v);
        }
        SurfacePoint::Face { face, .. } => {
            let (d, route) = best_face_route(mesh, field, face, target);
            if d.is_infinite() {
                return Err(PathError::Unreachable);
            }
            match route {
                FaceRoute::DirectSource => {
                    points.push(field.source);
                    faces_rev.push(face);
                }
                FaceRoute::ViaVertex(v) => {
                    points.push(SurfacePoint::Vertex(v));
                    faces_rev.push(face);
                    pending_vertex = Some(v);
                }
                FaceRoute::ViaWindow { id, t_cross } => {
                    faces_rev.push(face);
                    points.push(SurfacePoint::Edge {
                        edge: field.windows[id].edge,
                        t: t_cross,
                    });
                    crossed_rev.push((field.windows[id].edge, t_cross));
                    cursor = Some((id, t_cross));
                }
            }
        }
        SurfacePoint::Edge { edge, t } => {
            let l = mesh.edge_length(edge);
            let mut best: Option<(f64, WindowId)> = None;
            for (id, w) in field.edge_windows(edge) {
                if t >= w.b0 - ENDPOINT_EPS && t <= w.b1 + ENDPOINT_EPS {
                    let val = w.value_at(l, t);
                    if best.map_or(true, |(b, _)| val < b) {
                        best = Some((val, id));
                    }
                }
            }
            // endpoint routes can beat the covering window only by ties
            let Some((_, id)) = best else {
                return Err(PathError::Unreachable);
            };
            cursor = Some((id, t));
        }
    }

    loop {
        if let Some(v) = pending_vertex.take() {
            match field.vertex_pred[v] {
                None | Some(VertexPred::Source) => break,
                Some(VertexPred::Window { id, t }) => {
                    cursor = Some((id, t));
                }
            }
        }
        let Some((wid, t)) = cursor.take() else { break };
        let w = &field.windows[wid];
        let l = mesh.edge_length(w.edge);
        let ch = mesh.canonical_halfedge(w.edge);
        let from_face = if w.into_face == mesh.face_of(ch) {
            mesh.face_of(mesh.twin(ch))
        } else {
            mesh.face_of(ch)
        };

        if w.carrier {
            // straight along the edge to the root
            faces_rev.push(from_face);
            push_root(mesh, field, w, &mut points, &mut pending_vertex);
            if pending_vertex.is_none() {
                break;
            }
            continue;
        }

        // lay out from_face: the pseudo-source image lies inside/behind it
        let h_from = mesh.halfedge_of_edge_in_face(w.edge, from_face);
        let layout = mesh.face_layout(h_from);
        let (sx, px) = if h_from == ch {
            (w.src.x, t * l)
        } else {
            (l - w.src.x, (1.0 - t) * l)
        };
        let s_img = v2(sx, w.src.y); // +y: from_face side in h_from frame
        let p_img = v2(px, 0.0);
        faces_rev.push(from_face);

        match w.parent {
            None => {
                push_root(mesh, field, w, &mut points, &mut pending_vertex);
                if pending_vertex.is_none() {
                    break;
                }
            }
            Some(pid) => {
                let pw = &field.windows[pid];
                // parent edge within from_face
                let hp = mesh.halfedge_of_edge_in_face(pw.edge, from_face);
                let (e0, e1) = if hp == mesh.next(h_from) {
                    (layout[1], layout[2])
                } else {
                    debug_assert_eq!(hp, mesh.next(mesh.next(h_from)));
                    (layout[2], layout[0])
                };
                // intersect p→s with the parent edge segment
                let u = segment_line_param(p_img, s_img, e0, e1);
                let u = u.clamp(0.0, 1.0);
                // canonical parameter on the parent edge
                let chp = mesh.canonical_halfedge(pw.edge);
                let tp_raw = if chp == hp { u } else { 1.0 - u };
                let tp = tp_raw.clamp(pw.b0, pw.b1);
                points.push(SurfacePoint::Edge { edge: pw.edge, t: tp });
                crossed_rev.push((pw.edge, tp));
                cursor = Some((pid, tp));
            }
        }
    }

    // orient s → t
    points.reverse();
    faces_rev.reverse();
    crossed_rev.reverse();
    let positions: Vec<Vec3> = points.iter().map(|p| mesh.position(p)).collect();
    let length = positions.windows(2).map(|p| p[0].dist(p[1])).sum();
    // drop crossings at edge endpoints: those are vertex incidences
    let crossed_edges = crossed_rev
        .into_iter()
        .filter(|&(_, t)| t > ENDPOINT_EPS && t < 1.0 - ENDPOINT_EPS)
        .collect();
    Ok(GeodesicPath {
        points,
        positions,
        length,
        crossed_edges,
        strip: faces_rev,
    })
}

fn push_root(
    mesh: &HalfedgeMesh,
    field: &DistanceField,
    w: &Window,
    points: &mut Vec<SurfacePoint>,
    pending_vertex: &mut Option<VertexId>,
) {
    let _ = mesh;
    match w.root {
        Root::Source => points.push(field.source),
        Root::Saddle(v) => {
            points.push(SurfacePoint::Vertex(v));
            *pending_vertex = Some(v);
        }
    }
}

/// Parameter along segment e0..e1 where the (p, s) line crosses it.
fn segment_line_param(p: Vec2, s: Vec2, e0: Vec2, e1: Vec2) -> f64 {
    let d = s - p;
    let e = e1 - e0;
    let denom = d.cross(e);
    if denom.abs() < 1e-300 {
        return 0.5;
    }
    (p - e0).cross(d) / -denom
}

/// Maximum deviation of the path's interior points from straightness, in the
/// planar unfolding of each straight sub-run (between turn vertices),
/// relative to nothing: absolute length units.
pub fn max_chord_deviation(mesh: &HalfedgeMesh, path: &GeodesicPath) -> f64 {
    if path.points.len() < 3 {
        return 0.0;
    }
    // split at interior vertices: geodesics turn only there
    let mut cut_indices = vec![0];
    for (i, p) in path.points.iter().enumerate().skip(1) {
        if i + 1 == path.points.len() {
            break;
        }
        if matches!(p, SurfacePoint::Vertex(_)) {
            cut_indices.push(i);
        }
    }
    cut_indices.push(path.points.len() - 1);

    let mut worst: f64 = 0.0;
    for w in cut_indices.windows(2) {
        let (i0, i1) = (w[0], w[1]);
        if i1 - i0 < 2 {
            continue;
        }
        // faces between points i0..i1 are strip[i0..i1]
        let faces = &path.strip[i0..i1];
        let mut strip = Vec::new();
        for &f in faces {
            if strip.last() != Some(&f) {
                strip.push(f);
            }
        }
        let Ok(unf) = unfold_strip(mesh, &strip) else { continue };
        // planar image of each path point in the face it belongs to
        let img = |k: usize| -> Option<Vec2> {
            // point k lies between faces strip index: use the face of the
            // segment before or after
            let face_idx = if k == i0 { 0 } else { strip.iter().position(|&f| f == path.strip[(k - 1).max(i0)])? };
            let f = strip[face_idx];
            let h = mesh.face_halfedges(f)[0];
            let local = point_in_face_local(mesh, h, &path.points[k])?;
            Some(unf.placements[face_idx].apply(local))
        };
        let (Some(a), Some(b)) = (img(i0), img(i1)) else { continue };
        for k in i0 + 1..i1 {
            if let Some(p) = img(k) {
                worst = worst.max(point_segment_distance(p, a, b));
            }
        }
    }
    worst
}

fn point_in_face_local(mesh: &HalfedgeMesh, h: HalfedgeId, p: &SurfacePoint) -> Option<Vec2> {
    let f = mesh.face_of(h);
    match *p {
        SurfacePoint::Vertex(v) => {
            if mesh.face_vertices(f).contains(&v) {
                Some(mesh.layout_position(h, p))
            } else {
                None
            }
        }
        SurfacePoint::Edge { edge, .. } => {
            if mesh.face_edges(f).contains(&edge) {
                Some(mesh.layout_position(h, p))
            } else {
                None
            }
        }
        SurfacePoint::Face { face, .. } => {
            if face == f {
                Some(mesh.layout_position(h, p))
            } else {
                None
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::{fixtures, parse_mesh, MeshFormat};
    use approx::assert_relative_eq;

    fn cube() -> HalfedgeMesh {
        parse_mesh(fixtures::CUBE_OFF, MeshFormat::Off).unwrap()
    }

    fn tetra() -> HalfedgeMesh {
        parse_mesh(fixtures::TETRA_OFF, MeshFormat::Off).unwrap()
    }

    #[test]
    fn cube_corner_to_opposite() {
        let m = cube();
        let field = propagate(&m, &SurfacePoint::Vertex(0));
        assert_relative_eq!(field.vertex_distance[6], 5.0f64.sqrt(), epsilon = 1e-9);
        assert!(field.pops_monotone);
    }

    #[test]
    fn source_distance_zero() {
        let m = cube();
        let field = propagate(&m, &SurfacePoint::Vertex(3));
        assert_eq!(field.vertex_distance[3], 0.0);
    }

    #[test]
    fn tetra_unit_distances() {
        let m = tetra();
        let field = propagate(&m, &SurfacePoint::Vertex(0));
        for v in 1..4 {
            assert_relative_eq!(field.vertex_distance[v], 1.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn lower_bound_by_embedding_distance() {
        let m = cube();
        for s in 0..8 {
            let field = propagate(&m, &SurfacePoint::Vertex(s));
            for v in 0..8 {
                let straight = m.point(s).dist(m.point(v));
                assert!(field.vertex_distance[v] >= straight - 1e-12);
            }
        }
    }

    #[test]
    fn cube_path_crosses_middle_edge_at_half() {
        let m = cube();
        let field = propagate(&m, &SurfacePoint::Vertex(0));
        let path = extract_path(&m, &field, &SurfacePoint::Vertex(6)).unwrap();
        assert_relative_eq!(path.length, 5.0f64.sqrt(), epsilon = 1e-9);
        assert_eq!(path.crossed_edges.len(), 1, "crossings: {:?}", path.crossed_edges);
        let (_, t) = path.crossed_edges[0];
        assert_relative_eq!(t, 0.5, epsilon = 1e-9);
    }

    #[test]
    fn path_length_matches_field() {
        let m = cube();
        for s in 0..8 {
            let field = propagate(&m, &SurfacePoint::Vertex(s));
            for v in 0..8 {
                let path = extract_path(&m, &field, &SurfacePoint::Vertex(v)).unwrap();
                let d = field.vertex_distance[v];
                assert!(
                    (path.length - d).abs() <= 1e-10 * d.max(1.0),
                    "s={s} t={v}: path {} vs field {}",
                    path.length,
                    d
                );
            }
        }
    }

    #[test]
    fn trim_identical_windows() {
        let m = cube();
        let w = Window {
            edge: 0,
            b0: 0.0,
            b1: 1.0,
            src: v2(0.5, 0.3),
            d: 0.0,
            into_face: m.edge_faces(0).0,
            parent: None,
            root: Root::Source,
            carrier: false,
            alive: true,
        };
        let out = trim_windows(&m, &w, &w.clone());
        let total: f64 = out.iter().map(|x| x.b1 - x.b0).sum();
        assert_relative_eq!(total, 1.0, epsilon = 1e-9);
    }

    #[test]
    fn trim_dominated_incoming() {
        let m = cube();
        let mk = |d: f64| Window {
            edge: 0,
            b0: 0.0,
            b1: 1.0,
            src: v2(0.5, 0.3),
            d,
            into_face: m.edge_faces(0).0,
            parent: None,
            root: Root::Source,
            carrier: false,
            alive: true,
        };
        let out = trim_windows(&m, &mk(0.0), &mk(0.5));
        // existing survives the whole overlap
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].d, 0.0);
        assert_relative_eq!(out[0].b1 - out[0].b0, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn trim_mirror_sources_cross_at_half() {
        let m = cube();
        let l = m.edge_length(0);
        let mk = |x: f64| Window {
            edge: 0,
            b0: 0.0,
            b1: 1.0,
            src: v2(x, 0.25),
            d: 0.0,
            into_face: m.edge_faces(0).0,
            parent: None,
            root: Root::Source,
            carrier: false,
            alive: true,
        };
        let out = trim_windows(&m, &mk(0.2 * l), &mk(0.8 * l));
        assert_eq!(out.len(), 2);
        for w in &out {
            assert!(
                (w.b0 - 0.5).abs() < 1e-9 || (w.b1 - 0.5).abs() < 1e-9,
                "crossover not at midpoint: {w:?}"
            );
        }
    }

    #[test]
    fn flat_square_matches_plane() {
        // doubly covered unit square: distances on the top sheet are planar
        let off = "OFF
6 8 0
0 0 0
1 0 0
1 1 0
0 1 0
0.5 0.5 0
0.5 0.5 0
3 0 1 4
3 1 2 4
3 2 3 4
3 3 0 4
3 1 0 5
3 2 1 5
3 3 2 5
3 0 3 5
";
        let m = parse_mesh(off, MeshFormat::Off).unwrap();
        assert_eq!(m.euler_characteristic(), 2);
        let field = propagate(&m, &SurfacePoint::Vertex(0));
        for v in 0..4 {
            let planar = m.point(0).dist(m.point(v));
            assert_relative_eq!(field.vertex_distance[v], planar, epsilon = 1e-10);
        }
    }
}
