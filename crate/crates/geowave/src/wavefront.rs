//! Instrumented wavefront simulation: circular arcs, the boundary-edge set,
//! nearest-arc association, section grouping, and section-edge events.
//!
//! The simulation replays the continuous-Dijkstra front as a cyclic sequence
//! of circular arcs, each centered on the source or on a saddle vertex. The
//! boundary set B holds the edges the front has not fully crossed. Events:
//!
//!   E1  a wavefront section first touches a boundary edge
//!   E2  an edge is fully swept and leaves B
//!   E3  the front reaches a vertex (arc split; saddles spawn a new arc)
//!   E4  an arc no longer claims any boundary edge and dies
//!
//! Event radii are computed exactly from per-center planar unfoldings (the
//! same strip enumeration the oracles use); the hierarchical hull queries run
//! alongside E1 events as instrumentation and their node-visit counts are
//! logged. This module measures the section mechanism; it never overrides
//! the exact solver's distances.

use crate::geom::{v2, Vec2};
use crate::hull::{HullNode, QueryStats};
use crate::mesh::{EdgeId, HalfedgeMesh, SurfacePoint, VertexId};
use crate::search::{strip_search, Placement, SearchOutcome, SearchParams};
use crate::solver::{crossovers, extract_path, DistanceField, WinGeom};
use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};
use thiserror::Error;

const ANG_SLACK: f64 = 1e-6;

#[derive(Debug, Error)]
pub enum WavefrontError {
    #[error("edge {0} unreachable within unfolding depth {1}")]
    NoPath(EdgeId, usize),
}

/// One circular arc of the front. Points on the arc lie at geodesic
/// distance `d + r` from the source, where `r` is the global radius minus
/// `d`. Angles live in the center's unfolded star frame.
#[derive(Debug, Clone)]
pub struct WavefrontArc {
    pub center: SurfacePoint,
    /// Geodesic distance from the source to the center; 0 iff center is
    /// the source.
    pub d: f64,
    /// Angular extent (lo, hi) in the center frame, hi − lo ≤ period.
    pub extent: (f64, f64),
    /// Index into the simulation's center table.
    center_idx: usize,
    pub alive: bool,
}

impl WavefrontArc {
    pub fn extent_width(&self) -> f64 {
        self.extent.1 - self.extent.0
    }
}

/// Edges not yet fully crossed by the front, with per-edge swept state.
#[derive(Debug, Clone)]
pub struct BoundaryEdgeSet {
    pub edges: BTreeSet<EdgeId>,
    /// Swept sub-interval per edge (canonical parameter), updated at
    /// events; `None` until first touch.
    pub swept: Vec<Option<(f64, f64)>>,
}

impl BoundaryEdgeSet {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SectionKind {
    Boundary,
    Wavefront,
}

/// Maximal run of boundary edges with a common nearest arc, or of arcs
/// with a common nearest boundary edge.
#[derive(Debug, Clone)]
pub struct Section {
    pub kind: SectionKind,
    /// Edge ids (boundary) or arc ids (wavefront), contiguous in cyclic
    /// order.
    pub members: Vec<usize>,
    /// The associated arc (boundary section) or edge (wavefront section).
    pub partner: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum EventKind {
    SectionTouch,
    EdgeSwept,
    VertexReached,
    ArcDeath,
}

#[derive(Debug, Clone, Copy)]
pub struct Event {
    pub kind: EventKind,
    pub radius: f64,
    /// Edge id (E1, E2), vertex id (E3) or arc id (E4).
    pub id: usize,
}

/// Counters and timestamps for one run.
#[derive(Debug, Default, Clone)]
pub struct EventLog {
    /// Raw arc-edge crossing incidences, tallied when each edge is swept.
    pub crossings: usize,
    pub e1_events: usize,
    pub e2_events: usize,
    pub e3_events: usize,
    pub e4_events: usize,
    pub arc_births: usize,
    pub arc_deaths: usize,
    /// Event radii in processing order; nondecreasing.
    pub radii: Vec<f64>,
    pub hull_queries: usize,
    pub hull_node_visits: usize,
}

pub struct Simulation<'m> {
    pub mesh: &'m HalfedgeMesh,
    pub source: SurfacePoint,
    centers: Vec<SurfacePoint>,
    // angular period of each center's frame, cached because the vertex
    // total angle walks the star with trigonometry on every call
    periods: Vec<f64>,
    cache: Vec<SearchOutcome>,
    depth: usize,
    pub arcs: Vec<WavefrontArc>,
    /// Cyclic wavefront order of alive arc ids.
    pub order: Vec<usize>,
    pub boundary: BoundaryEdgeSet,
    touched: Vec<bool>,
    vertex_reached: Vec<bool>,
    pub vertex_radius: Vec<f64>,
    pub log: EventLog,
    radius: f64,
    /// Bumped whenever the arc set or extents change.
    arc_version: u64,
    // bumps only when the center set, arc offsets, or search depth change;
    // arc splits move attribution between siblings but never move radii,
    // so radius memos survive them
    radius_version: u64,
    touch_memo: RefCell<HashMap<EdgeId, (u64, f64, usize, f64, f64)>>,
    sweep_memo: RefCell<HashMap<EdgeId, (u64, f64)>>,
    vertex_memo: RefCell<HashMap<VertexId, (u64, f64)>>,
}

/// Initial state: one full-circle arc at the source and B = all edges not
/// incident to the source simplex.
pub fn init_wavefront(
    mesh: &HalfedgeMesh,
    source: &SurfacePoint,
) -> (Vec<WavefrontArc>, BoundaryEdgeSet) {
    let period = source_period(mesh, source);
    let arcs = vec![WavefrontArc {
        center: *source,
        d: 0.0,
        extent: (0.0, period),
        center_idx: 0,
        alive: true,
    }];
    let excluded: Vec<EdgeId> = match *source {
        SurfacePoint::Vertex(v) => mesh.vertex_edges(v),
        SurfacePoint::Face { face, .. } => mesh.face_edges(face).to_vec(),
        SurfacePoint::Edge { edge, .. } => vec![edge],
    };
    let edges = (0..mesh.edge_count())
        .filter(|e| !excluded.contains(e))
        .collect();
    (
        arcs,
        BoundaryEdgeSet {
            edges,
            swept: vec![None; mesh.edge_count()],
        },
    )
}

fn source_period(mesh: &HalfedgeMesh, p: &SurfacePoint) -> f64 {
    match *p {
        SurfacePoint::Vertex(v) => mesh.vertex_total_angle(v),
        _ => std::f64::consts::TAU,
    }
}

/// Does the angular interval (a0, a1) overlap (b0, b1) on a circle of the
/// given period?
fn circ_overlap(a0: f64, a1: f64, b0: f64, b1: f64, period: f64) -> bool {
    let wa = a1 - a0;
    let wb = b1 - b0;
    if wa + ANG_SLACK >= period || wb + ANG_SLACK >= period {
        return true;
    }
    let d = (b0 - a0).rem_euclid(period);
    d <= wa + ANG_SLACK || period - d <= wb + ANG_SLACK
}

/// Star-frame departure angle of the straight segment from a placement's
/// source image to canonical parameter `t`. Valid within the visible
/// interval; constant rotation recovered from the stored wedge angles.
fn placement_angle_at(p: &Placement, l: f64, t: f64) -> f64 {
    if p.src.y.abs() < 1e-15 * (1.0 + l) {
        return p.ang_lo;
    }
    let lam = |tt: f64| (-p.src.y).atan2(tt * l - p.src.x);
    let l0 = lam(p.t_lo);
    let l1 = lam(p.t_hi);
    let delta = if l0 <= l1 {
        p.ang_lo - l0
    } else {
        p.ang_hi - l0
    };
    delta + lam(t)
}

/// (lo, hi, index into the item slice) of one lower-envelope piece.
type EnvPiece = (f64, f64, usize);

/// Radius at which an edge of length `l` is fully swept by the items'
/// distance functions, with the distinct item labels that appear on the
/// lower envelope. Infinite when the domains leave a gap in [0, l]. The
/// envelope pieces are convex, so the maximum sits at piece endpoints.
fn sweep_over_items(items: &[(usize, WinGeom, f64, f64)], l: f64) -> (f64, Vec<usize>) {
    if items.is_empty() {
        return (f64::INFINITY, Vec::new());
    }
    // coverage of [0, L] by the union of domains
    let mut doms: Vec<(f64, f64)> = items.iter().map(|it| (it.2, it.3)).collect();
    doms.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let eps = 1e-9 * l;
    let mut reach = 0.0;
    for (a, b) in doms {
        if a > reach + eps {
            return (f64::INFINITY, Vec::new());
        }
        reach = reach.max(b);
    }
    if reach < l - eps {
        return (f64::INFINITY, Vec::new());
    }

    let scale = l + items.iter().map(|it| it.1.d).fold(0.0, f64::max);
    let idxs: Vec<usize> = (0..items.len()).collect();
    let pieces = envelope_of(&idxs, items, scale);
    let mut sweep = 0.0f64;
    let mut contributors: BTreeSet<usize> = BTreeSet::new();
    for &(plo, phi, idx) in &pieces {
        let x0 = plo.max(0.0);
        let x1 = phi.min(l);
        if x0 > x1 {
            continue;
        }
        let g = items[idx].1;
        sweep = sweep.max(g.value(x0)).max(g.value(x1));
        contributors.insert(items[idx].0);
    }
    (sweep, contributors.into_iter().collect())
}

/// Lower envelope over the union of the items' domains, by divide and
/// conquer. Two branches of the hyperbola family d + sqrt((x-a)^2 + h^2)
/// cross at most twice, so merged envelopes stay near linear size.
fn envelope_of(idxs: &[usize], items: &[(usize, WinGeom, f64, f64)], scale: f64) -> Vec<EnvPiece> {
    if idxs.len() <= 1 {
        return idxs
            .iter()
            .filter(|&&i| items[i].2 < items[i].3)
            .map(|&i| (items[i].2, items[i].3, i))
            .collect();
    }
    let (lhs, rhs) = idxs.split_at(idxs.len() / 2);
    merge_envelopes(
        &envelope_of(lhs, items, scale),
        &envelope_of(rhs, items, scale),
        items,
        scale,
    )
}

fn merge_envelopes(
    a: &[EnvPiece],
    b: &[EnvPiece],
    items: &[(usize, WinGeom, f64, f64)],
    scale: f64,
) -> Vec<EnvPiece> {
    fn push(out: &mut Vec<EnvPiece>, lo: f64, hi: f64, idx: usize) {
        if hi <= lo {
            return;
        }
        match out.last_mut() {
            Some(last) if last.2 == idx && last.1 >= lo => last.1 = last.1.max(hi),
            _ => out.push((lo, hi, idx)),
        }
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0usize, 0usize);
    let mut x = match (a.first(), b.first()) {
        (Some(p), Some(q)) => p.0.min(q.0),
        (Some(p), None) => p.0,
        (None, Some(q)) => q.0,
        (None, None) => return out,
    };
    while i < a.len() || j < b.len() {
        if i < a.len() && a[i].1 <= x {
            i += 1;
            continue;
        }
        if j < b.len() && b[j].1 <= x {
            j += 1;
            continue;
        }
        let pa = a.get(i).copied();
        let pb = b.get(j).copied();
        let a_act = pa.is_some_and(|p| p.0 <= x);
        let b_act = pb.is_some_and(|q| q.0 <= x);
        match (a_act, b_act) {
            (false, false) => {
                // gap: jump to the next piece start
                x = match (pa, pb) {
                    (Some(p), Some(q)) => p.0.min(q.0),
                    (Some(p), None) => p.0,
                    (None, Some(q)) => q.0,
                    (None, None) => break,
                };
            }
            (true, false) => {
                let p = pa.unwrap();
                let end = pb.map_or(p.1, |q| p.1.min(q.0));
                push(&mut out, x, end, p.2);
                x = end;
            }
            (false, true) => {
                let q = pb.unwrap();
                let end = pa.map_or(q.1, |p| q.1.min(p.0));
                push(&mut out, x, end, q.2);
                x = end;
            }
            (true, true) => {
                let p = pa.unwrap();
                let q = pb.unwrap();
                let end = p.1.min(q.1);
                let ga = items[p.2].1;
                let gb = items[q.2].1;
                let mut cuts = crossovers(ga, gb, x, end, scale);
                cuts.push(end);
                let mut x0 = x;
                for &x1 in &cuts {
                    if x1 <= x0 {
                        continue;
                    }
                    let mid = 0.5 * (x0 + x1);
                    let (va, vb) = (ga.value(mid), gb.value(mid));
                    let idx = if (va, p.2) <= (vb, q.2) { p.2 } else { q.2 };
                    push(&mut out, x0, x1, idx);
                    x0 = x1;
                }
                x = end;
            }
        }
    }
    out
}

impl<'m> Simulation<'m> {
    pub fn new(mesh: &'m HalfedgeMesh, source: &SurfacePoint) -> Result<Self, WavefrontError> {
        let (arcs, boundary) = init_wavefront(mesh, source);
        let mut sim = Simulation {
            mesh,
            source: *source,
            centers: vec![*source],
            periods: vec![source_period(mesh, source)],
            cache: Vec::new(),
            depth: 32,
            order: vec![0],
            arcs,
            boundary,
            touched: vec![false; mesh.edge_count()],
            vertex_reached: vec![false; mesh.vertex_count()],
            vertex_radius: vec![f64::INFINITY; mesh.vertex_count()],
            log: EventLog::default(),
            radius: 0.0,
            arc_version: 0,
            radius_version: 0,
            touch_memo: RefCell::new(HashMap::new()),
            sweep_memo: RefCell::new(HashMap::new()),
            vertex_memo: RefCell::new(HashMap::new()),
        };
        if let SurfacePoint::Vertex(v) = *source {
            sim.vertex_reached[v] = true;
            sim.vertex_radius[v] = 0.0;
        }
        sim.refresh_cache()?;
        Ok(sim)
    }

    /// (Re)run the strip enumeration for every center, doubling the depth
    /// until every boundary edge is fully coverable or the cap is hit.
    fn refresh_cache(&mut self) -> Result<(), WavefrontError> {
        loop {
            if self.cache.len() != self.centers.len() {
                self.cache = self
                    .centers
                    .iter()
                    .map(|c| {
                        strip_search(self.mesh, c, &SearchParams::with_depth(self.depth), None)
                    })
                    .collect();
            }
            // radii memoized against the old cache are stale now
            self.radius_version += 1;
            self.touch_memo.borrow_mut().clear();
            self.sweep_memo.borrow_mut().clear();
            self.vertex_memo.borrow_mut().clear();
            let mut bad = None;
            for &e in &self.boundary.edges {
                if self.edge_sweep_radius(e).is_infinite() {
                    bad = Some(e);
                    break;
                }
            }
            match bad {
                None => return Ok(()),
                Some(e) => {
                    if self.depth >= 512 {
                        return Err(WavefrontError::NoPath(e, self.depth));
                    }
                    self.depth *= 2;
                    // force a rebuild of every center at the new depth
                    self.cache.clear();
                }
            }
        }
    }

    fn alive_arcs(&self) -> impl Iterator<Item = (usize, &WavefrontArc)> {
        self.order
            .iter()
            .map(move |&id| (id, &self.arcs[id]))
            .filter(|(_, a)| a.alive)
    }

    /// Placements on `e` from arc `aid` whose departure wedge meets the
    /// arc's angular extent.
    fn arc_placements(&self, aid: usize, e: EdgeId) -> Vec<&Placement> {
        let a = &self.arcs[aid];
        let period = self.periods[a.center_idx];
        self.cache[a.center_idx].placements[e]
            .iter()
            .filter(|p| circ_overlap(p.ang_lo, p.ang_hi, a.extent.0, a.extent.1, period))
            .collect()
    }

    /// Alive centers with their arc distance offsets, deduplicated: every
    /// alive arc of a center shares the d of the spawn that created it.
    fn alive_centers(&self) -> Vec<(usize, f64)> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (_, a) in self.alive_arcs() {
            if seen.insert(a.center_idx) {
                out.push((a.center_idx, a.d));
            }
        }
        out
    }

    /// First alive arc of `center_idx` whose extent meets the departure
    /// wedge [ang_lo, ang_hi]; falls back to the center's first alive arc.
    fn owner_of(&self, center_idx: usize, ang_lo: f64, ang_hi: f64) -> usize {
        let period = self.periods[center_idx];
        let mut fallback = usize::MAX;
        for (aid, a) in self.alive_arcs() {
            if a.center_idx != center_idx {
                continue;
            }
            if fallback == usize::MAX {
                fallback = aid;
            }
            if circ_overlap(ang_lo, ang_hi, a.extent.0, a.extent.1, period) {
                return aid;
            }
        }
        fallback
    }

    /// Envelope items on edge `e`: per contributing arc, the distance
    /// function pieces (d_arc + planar distance) with their visible
    /// parameter domains, in edge length units. Every placement of an
    /// alive center counts: extents are approximate bookkeeping and only
    /// pick which sibling arc gets the credit; dropping a placement would
    /// overestimate the radius and break event monotonicity when a later
    /// split restores it.
    fn edge_items(&self, e: EdgeId) -> Vec<(usize, WinGeom, f64, f64)> {
        let l = self.mesh.edge_length(e);
        let mut items = Vec::new();
        for (ci, d) in self.alive_centers() {
            for p in &self.cache[ci].placements[e] {
                let owner = self.owner_of(ci, p.ang_lo, p.ang_hi);
                items.push((
                    owner,
                    WinGeom {
                        a: p.src.x,
                        h: p.src.y.abs(),
                        d,
                    },
                    p.t_lo * l,
                    p.t_hi * l,
                ));
            }
        }
        items
    }

    /// Radius at which the front first touches edge `e`, with the arc that
    /// gets there first (ties to the smaller arc id).
    pub fn edge_touch_radius(&self, e: EdgeId) -> (f64, usize) {
        let (r, ci, lo, hi) = self.edge_touch_key(e);
        if ci == usize::MAX {
            return (r, usize::MAX);
        }
        (r, self.owner_of(ci, lo, hi))
    }

    /// Touch radius alone, skipping arc attribution.
    fn edge_touch_value(&self, e: EdgeId) -> f64 {
        self.edge_touch_key(e).0
    }

    /// Memoized touch radius with the winning center and its departure
    /// wedge. The owning arc is re-resolved on every read because splits
    /// move attribution between siblings without touching the radius.
    fn edge_touch_key(&self, e: EdgeId) -> (f64, usize, f64, f64) {
        if let Some(&(v, r, ci, lo, hi)) = self.touch_memo.borrow().get(&e) {
            if v == self.radius_version {
                return (r, ci, lo, hi);
            }
        }
        let l = self.mesh.edge_length(e);
        let mut best = (f64::INFINITY, usize::MAX, 0.0, 0.0);
        for (ci, d) in self.alive_centers() {
            for p in &self.cache[ci].placements[e] {
                let g = WinGeom {
                    a: p.src.x,
                    h: p.src.y.abs(),
                    d,
                };
                let val = g.value(g.a.clamp(p.t_lo * l, p.t_hi * l));
                if val < best.0 - 1e-12 || (val < best.0 + 1e-12 && ci < best.1) {
                    best = (val, ci, p.ang_lo, p.ang_hi);
                }
            }
        }
        self.touch_memo
            .borrow_mut()
            .insert(e, (self.radius_version, best.0, best.1, best.2, best.3));
        best
    }

    /// Nearest-arc association for a boundary edge.
    pub fn associate(&self, e: EdgeId) -> usize {
        self.edge_touch_radius(e).1
    }

    /// Radius at which edge `e` is fully swept: the maximum over the edge
    /// of the lower envelope of all arcs' distance functions. The envelope
    /// pieces are convex, so the maximum sits at a domain endpoint or a
    /// pairwise crossover. Infinite when some part of the edge is not
    /// covered by any unfolding.
    pub fn edge_sweep_radius(&self, e: EdgeId) -> f64 {
        if let Some(&(v, r)) = self.sweep_memo.borrow().get(&e) {
            if v == self.radius_version {
                return r;
            }
        }
        // the owner-free item list is enough for the value
        let l = self.mesh.edge_length(e);
        let mut items = Vec::new();
        for (ci, d) in self.alive_centers() {
            for p in &self.cache[ci].placements[e] {
                items.push((
                    ci,
                    WinGeom {
                        a: p.src.x,
                        h: p.src.y.abs(),
                        d,
                    },
                    p.t_lo * l,
                    p.t_hi * l,
                ));
            }
        }
        let r = sweep_over_items(&items, l).0;
        self.sweep_memo
            .borrow_mut()
            .insert(e, (self.radius_version, r));
        r
    }

    fn sweep_radius_and_contributors(&self, e: EdgeId) -> (f64, Vec<usize>) {
        sweep_over_items(&self.edge_items(e), self.mesh.edge_length(e))
    }

    /// Radius at which the front reaches vertex `v`, with the arc that
    /// realizes it and the departure angle in that arc's center frame.
    /// The radius is the minimum over every arc's hits; the angular extent
    /// only breaks ties for attribution, so that arc-death bookkeeping can
    /// never inflate a vertex radius.
    /// Memoized vertex reach radius alone; attribution lives in
    /// `vertex_reach` because it depends on the mutable arc extents.
    fn vertex_reach_value(&self, v: VertexId) -> f64 {
        if let Some(&(ver, r)) = self.vertex_memo.borrow().get(&v) {
            if ver == self.radius_version {
                return r;
            }
        }
        let mut best = f64::INFINITY;
        for (ci, d) in self.alive_centers() {
            for h in &self.cache[ci].vertex_hits[v] {
                best = best.min(d + h.dist);
            }
        }
        self.vertex_memo
            .borrow_mut()
            .insert(v, (self.radius_version, best));
        best
    }

    fn vertex_reach(&self, v: VertexId) -> (f64, usize, f64) {
        let mut cands: Vec<(f64, bool, usize, f64)> = Vec::new();
        for (aid, a) in self.alive_arcs() {
            let period = self.periods[a.center_idx];
            for h in &self.cache[a.center_idx].vertex_hits[v] {
                let inside = circ_overlap(h.angle, h.angle, a.extent.0, a.extent.1, period);
                cands.push((a.d + h.dist, inside, aid, h.angle));
            }
        }
        let Some(best) = cands
            .iter()
            .map(|c| c.0)
            .min_by(|a, b| a.partial_cmp(b).unwrap())
        else {
            return (f64::INFINITY, usize::MAX, 0.0);
        };
        let pick = cands
            .iter()
            .filter(|c| c.0 <= best + 1e-12)
            .min_by_key(|c| (!c.1, c.2))
            .unwrap();
        (best, pick.2, pick.3)
    }

    /// Minimum-radius pending event. After B empties, only vertex events
    /// at the final radius can remain; `None` once nothing is pending.
    pub fn next_event(&self) -> Option<Event> {
        let mut best: Option<Event> = None;
        let mut consider = |ev: Event| {
            let better = match &best {
                None => true,
                Some(b) => {
                    (ev.radius, ev.kind, ev.id) < (b.radius - 1e-12, b.kind, b.id)
                        || (ev.radius <= b.radius + 1e-12 && (ev.kind, ev.id) < (b.kind, b.id))
                }
            };
            if better {
                best = Some(ev);
            }
        };
        for &e in &self.boundary.edges {
            if !self.touched[e] {
                let r = self.edge_touch_value(e);
                if r.is_finite() {
                    consider(Event {
                        kind: EventKind::SectionTouch,
                        radius: r,
                        id: e,
                    });
                }
            }
            let r = self.edge_sweep_radius(e);
            if r.is_finite() {
                consider(Event {
                    kind: EventKind::EdgeSwept,
                    radius: r,
                    id: e,
                });
            }
        }
        for v in 0..self.mesh.vertex_count() {
            if !self.vertex_reached[v] {
                let r = self.vertex_reach_value(v);
                if r.is_finite() {
                    consider(Event {
                        kind: EventKind::VertexReached,
                        radius: r,
                        id: v,
                    });
                }
            }
        }
        best
    }

    /// Apply one event: update arcs, B and counters, then collect arc
    /// deaths. Returns an error only if a saddle spawn leaves an edge
    /// unreachable at the depth cap.
    pub fn process_event(&mut self, ev: Event) -> Result<(), WavefrontError> {
        debug_assert!(ev.radius >= self.radius - 1e-9 * (1.0 + self.radius));
        self.radius = self.radius.max(ev.radius);
        self.log.radii.push(self.radius);
        match ev.kind {
            EventKind::SectionTouch => {
                let e = ev.id;
                self.touched[e] = true;
                let (_, aid) = self.edge_touch_radius(e);
                let l = self.mesh.edge_length(e);
                // swept state starts at the touch point
                let t0 = self
                    .arc_placements(aid, e)
                    .iter()
                    .map(|p| (p.src.x / l).clamp(p.t_lo, p.t_hi))
                    .next()
                    .unwrap_or(0.5);
                self.boundary.swept[e] = Some((t0, t0));
                self.log.e1_events += 1;
                self.instrument_hull_query(e, aid);
            }
            EventKind::EdgeSwept => {
                let e = ev.id;
                let (_, contributors) = self.sweep_radius_and_contributors(e);
                self.log.crossings += contributors.len().max(1);
                self.boundary.edges.remove(&e);
                self.boundary.swept[e] = Some((0.0, 1.0));
                if !self.touched[e] {
                    // a sweep can coincide with the first touch on short edges
                    self.touched[e] = true;
                    self.log.e1_events += 1;
                }
                self.log.e2_events += 1;
            }
            EventKind::VertexReached => {
                let v = ev.id;
                let (r, aid, ang) = self.vertex_reach(v);
                self.vertex_reached[v] = true;
                self.vertex_radius[v] = r;
                self.log.e3_events += 1;
                self.split_arc_at(aid, ang);
                if self.mesh.is_saddle(v) {
                    self.spawn_arc(v, r, aid)?;
                }
            }
            EventKind::ArcDeath => {
                self.arcs[ev.id].alive = false;
                self.order.retain(|&id| id != ev.id);
                self.log.e4_events += 1;
                self.log.arc_deaths += 1;
                self.arc_version += 1;
                self.note_center_change(self.arcs[ev.id].center_idx);
            }
        }
        self.collect_arc_deaths();
        Ok(())
    }

    /// Run until B is empty. Event radii are nondecreasing.
    pub fn run(&mut self) -> Result<(), WavefrontError> {
        while let Some(ev) = self.next_event() {
            self.process_event(ev)?;
        }
        Ok(())
    }

    fn split_arc_at(&mut self, aid: usize, ang: f64) {
        if aid == usize::MAX {
            return;
        }
        let a = self.arcs[aid].clone();
        let period = self.periods[a.center_idx];
        let t = a.extent.0 + (ang - a.extent.0).rem_euclid(period);
        if t - a.extent.0 <= ANG_SLACK || a.extent.1 - t <= ANG_SLACK {
            return; // hit at an arc endpoint: nothing to split
        }
        let new_id = self.arcs.len();
        self.arcs.push(WavefrontArc {
            extent: (t, a.extent.1),
            ..a
        });
        self.arcs[aid].extent = (a.extent.0, t);
        let pos = self.order.iter().position(|&id| id == aid).unwrap();
        self.order.insert(pos + 1, new_id);
        self.log.arc_births += 1;
        self.arc_version += 1;
    }

    /// New arc at a saddle vertex covering the angular shadow the passing
    /// front cannot reach directly (total angle − π, centered opposite the
    /// arrival direction when it can be recovered from the reverse hit).
    fn spawn_arc(&mut self, v: VertexId, r: f64, from_arc: usize) -> Result<(), WavefrontError> {
        let center = SurfacePoint::Vertex(v);
        let center_idx = match self.centers.iter().position(|c| *c == center) {
            Some(i) => i,
            None => {
                self.centers.push(center);
                self.periods.push(source_period(self.mesh, &center));
                self.cache.push(strip_search(
                    self.mesh,
                    &center,
                    &SearchParams::with_depth(self.depth),
                    None,
                ));
                self.centers.len() - 1
            }
        };
        let period = self.periods[center_idx];
        let width = (period - std::f64::consts::PI).max(ANG_SLACK);
        // reverse hit: direction from v back toward the arc's center
        let extent = match self.arcs[from_arc].center {
            SurfacePoint::Vertex(cv) if from_arc != usize::MAX => {
                let back = self.cache[center_idx].vertex_hits[cv]
                    .iter()
                    .map(|h| (h.dist, h.angle))
                    .min_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
                match back {
                    Some((_, phi)) => {
                        let mid = phi + period / 2.0;
                        (mid - width / 2.0, mid + width / 2.0)
                    }
                    None => (0.0, width),
                }
            }
            _ => (0.0, width),
        };
        let new_id = self.arcs.len();
        self.arcs.push(WavefrontArc {
            center,
            d: r,
            extent,
            center_idx,
            alive: true,
        });
        let pos = self
            .order
            .iter()
            .position(|&id| id == from_arc)
            .map(|p| p + 1)
            .unwrap_or(self.order.len());
        self.order.insert(pos, new_id);
        self.log.arc_births += 1;
        self.arc_version += 1;
        self.refresh_cache()
    }

    /// Kill arcs that are no longer the nearest arc of any boundary edge.
    fn collect_arc_deaths(&mut self) {
        if self.order.len() <= 1 || self.boundary.is_empty() {
            return;
        }
        let mut claimed: BTreeSet<usize> = BTreeSet::new();
        for &e in &self.boundary.edges {
            let aid = self.associate(e);
            if aid != usize::MAX {
                claimed.insert(aid);
            }
        }
        let doomed: Vec<usize> = self
            .order
            .iter()
            .copied()
            .filter(|id| !claimed.contains(id))
            .collect();
        for id in doomed {
            if self.order.len() <= 1 {
                break;
            }
            self.arcs[id].alive = false;
            self.order.retain(|&x| x != id);
            self.log.e4_events += 1;
            self.log.arc_deaths += 1;
            self.log.radii.push(self.radius);
            self.arc_version += 1;
            self.note_center_change(self.arcs[id].center_idx);
        }
    }

    /// Invalidate the radius memos when a death removes a center's last
    /// alive arc: its placements stop contributing, so radii can rise.
    fn note_center_change(&mut self, center_idx: usize) {
        if !self
            .order
            .iter()
            .any(|&id| self.arcs[id].center_idx == center_idx)
        {
            self.radius_version += 1;
        }
    }

    /// Boundary sections then wavefront sections; boundary cyclic order is
    /// reconstructed from (arc position, angle within arc).
    pub fn sections(&self) -> Vec<Section> {
        let mut out = Vec::new();
        // boundary edges keyed for cyclic ordering
        let mut keyed: Vec<(usize, f64, EdgeId, usize)> = Vec::new();
        for &e in &self.boundary.edges {
            let (_, aid) = self.edge_touch_radius(e);
            if aid == usize::MAX {
                continue;
            }
            let pos = self.order.iter().position(|&id| id == aid).unwrap_or(0);
            let l = self.mesh.edge_length(e);
            let ang = self
                .arc_placements(aid, e)
                .first()
                .map(|p| placement_angle_at(p, l, (p.src.x / l).clamp(p.t_lo, p.t_hi)))
                .unwrap_or(0.0);
            keyed.push((pos, ang, e, aid));
        }
        keyed.sort_by(|a, b| (a.0, a.1).partial_cmp(&(b.0, b.1)).unwrap());
        let mut i = 0;
        while i < keyed.len() {
            let aid = keyed[i].3;
            let mut members = Vec::new();
            while i < keyed.len() && keyed[i].3 == aid {
                members.push(keyed[i].2);
                i += 1;
            }
            out.push(Section {
                kind: SectionKind::Boundary,
                members,
                partner: aid,
            });
        }
        // cyclic wrap: merge first and last boundary sections of one arc
        if out.len() > 1 && out.first().unwrap().partner == out.last().unwrap().partner {
            let last = out.pop().unwrap();
            out[0].members.splice(0..0, last.members);
        }
        // wavefront sections: arcs grouped by nearest boundary edge
        let nearest: Vec<(usize, usize)> = self
            .order
            .iter()
            .map(|&aid| {
                let mut best = (f64::INFINITY, usize::MAX);
                for &e in &self.boundary.edges {
                    let d = self
                        .arc_placements(aid, e)
                        .iter()
                        .filter_map(|p| p.min_distance_on(self.mesh.edge_length(e), 0.0, 1.0))
                        .fold(f64::INFINITY, f64::min);
                    let d = self.arcs[aid].d + d;
                    if d < best.0 {
                        best = (d, e);
                    }
                }
                (aid, best.1)
            })
            .collect();
        let mut i = 0;
        let wstart = out.len();
        while i < nearest.len() {
            let e = nearest[i].1;
            let mut members = Vec::new();
            while i < nearest.len() && nearest[i].1 == e {
                members.push(nearest[i].0);
                i += 1;
            }
            out.push(Section {
                kind: SectionKind::Wavefront,
                members,
                partner: e,
            });
        }
        if out.len() > wstart + 1 && out[wstart].partner == out.last().unwrap().partner {
            let last = out.pop().unwrap();
            out[wstart].members.splice(0..0, last.members);
        }
        out
    }

    /// Hull-hierarchy distance query for an E1 event: the boundary section
    /// containing `e` against the touching arc, both realized as planar
    /// chains in the arc's center frame (arcs polygonized at step π/64).
    fn instrument_hull_query(&mut self, e: EdgeId, aid: usize) {
        if aid == usize::MAX {
            return;
        }
        let mut bchain: Vec<Vec2> = Vec::new();
        // the arc's boundary section: the edges it is currently nearest to
        let section_edges: Vec<EdgeId> = self
            .boundary
            .edges
            .iter()
            .copied()
            .filter(|&me| self.associate(me) == aid)
            .collect();
        let members = if section_edges.is_empty() {
            vec![e]
        } else {
            section_edges
        };
        for &me in &members {
            let l = self.mesh.edge_length(me);
            if let Some(p) = self.arc_placements(aid, me).first() {
                for t in [p.t_lo, p.t_hi] {
                    let r = p.distance_at(l, t);
                    let ang = placement_angle_at(p, l, t);
                    bchain.push(v2(r * ang.cos(), r * ang.sin()));
                }
            }
        }
        if bchain.is_empty() {
            return;
        }
        let a = &self.arcs[aid];
        let r_arc = (self.radius - a.d).max(1e-9);
        let step = std::f64::consts::PI / 64.0;
        let mut wchain = Vec::new();
        let mut ang = a.extent.0;
        while ang < a.extent.1 + step * 0.5 {
            wchain.push(v2(r_arc * ang.cos(), r_arc * ang.sin()));
            ang += step;
        }
        let hb = HullNode::build(&bchain.into());
        let hw = HullNode::build(&wchain.into());
        let mut qs = QueryStats::default();
        let _ = hw.query_distance(&hb, crate::geom::Rigid2::IDENTITY, &mut qs);
        self.log.hull_queries += 1;
        self.log.hull_node_visits += qs.node_visits;
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }
}

/// Total number of (path, edge) crossing incidences over the shortest paths
/// from the field's source to every vertex.
pub fn count_path_crossings(mesh: &HalfedgeMesh, field: &DistanceField) -> usize {
    let mut total = 0;
    for v in 0..mesh.vertex_count() {
        if SurfacePoint::Vertex(v) == field.source {
            continue;
        }
        if let Ok(path) = extract_path(mesh, field, &SurfacePoint::Vertex(v)) {
            total += path.crossed_edges.len();
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::{fixtures, parse_mesh, MeshFormat};
    use crate::solver::propagate;
    use approx::assert_relative_eq;

    fn tetra() -> HalfedgeMesh {
        parse_mesh(fixtures::TETRA_OFF, MeshFormat::Off).unwrap()
    }

    fn cube_alt() -> HalfedgeMesh {
        parse_mesh(fixtures::CUBE_ALT_OFF, MeshFormat::Off).unwrap()
    }

    #[test]
    fn tetra_initial_boundary_is_three_edges() {
        let m = tetra();
        let (arcs, b) = init_wavefront(&m, &SurfacePoint::Vertex(0));
        assert_eq!(arcs.len(), 1);
        assert_eq!(b.len(), 3);
        assert_relative_eq!(arcs[0].extent_width(), m.vertex_total_angle(0));
    }

    #[test]
    fn cube_corner_without_diagonals_boundary_fifteen() {
        // corner 0 of this triangulation touches no fan diagonal
        let m = parse_mesh(fixtures::CUBE_ALT_OFF, MeshFormat::Off).unwrap();
        assert_eq!(m.vertex_degree(0), 3);
        let (_, b) = init_wavefront(&m, &SurfacePoint::Vertex(0));
        assert_eq!(b.len(), 15);
    }

    #[test]
    fn single_arc_associates_everything() {
        let m = tetra();
        let sim = Simulation::new(&m, &SurfacePoint::Vertex(0)).unwrap();
        for &e in &sim.boundary.edges {
            assert_eq!(sim.associate(e), 0);
        }
        let sections = sim.sections();
        let bsec: Vec<_> = sections
            .iter()
            .filter(|s| s.kind == SectionKind::Boundary)
            .collect();
        assert_eq!(bsec.len(), 1);
        assert_eq!(bsec[0].members.len(), 3);
    }

    #[test]
    fn tetra_first_event_is_opposite_edge_touch() {
        let m = tetra();
        let sim = Simulation::new(&m, &SurfacePoint::Vertex(0)).unwrap();
        let ev = sim.next_event().unwrap();
        assert_eq!(ev.kind, EventKind::SectionTouch);
        // distance from a vertex to the opposite edge of a unit triangle
        assert_relative_eq!(ev.radius, 3.0f64.sqrt() / 2.0, epsilon = 1e-9);
    }

    #[test]
    fn tetra_vertices_reached_at_unit_radius() {
        let m = tetra();
        let mut sim = Simulation::new(&m, &SurfacePoint::Vertex(0)).unwrap();
        sim.run().unwrap();
        for v in 1..4 {
            assert_relative_eq!(sim.vertex_radius[v], 1.0, epsilon = 1e-9);
        }
        assert!(sim.boundary.is_empty());
        assert_eq!(sim.log.e3_events, 3);
    }

    #[test]
    fn flat_square_center_first_touch_at_half() {
        // doubly covered unit square, source at the top-sheet center vertex
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
        let sim = Simulation::new(&m, &SurfacePoint::Vertex(4)).unwrap();
        let ev = sim.next_event().unwrap();
        assert_eq!(ev.kind, EventKind::SectionTouch);
        assert_relative_eq!(ev.radius, 0.5, epsilon = 1e-9);
    }

    #[test]
    fn cube_run_terminates_with_monotone_radii() {
        let m = parse_mesh(fixtures::CUBE_OFF, MeshFormat::Off).unwrap();
        let mut sim = Simulation::new(&m, &SurfacePoint::Vertex(0)).unwrap();
        sim.run().unwrap();
        assert!(sim.boundary.is_empty());
        for w in sim.log.radii.windows(2) {
            assert!(w[1] >= w[0] - 1e-9);
        }
        assert!(sim.log.e1_events <= sim.log.crossings);
    }

    #[test]
    fn vertex_radii_match_exact_solver() {
        let m = parse_mesh(fixtures::CUBE_OFF, MeshFormat::Off).unwrap();
        let mut sim = Simulation::new(&m, &SurfacePoint::Vertex(0)).unwrap();
        sim.run().unwrap();
        let field = propagate(&m, &SurfacePoint::Vertex(0));
        for v in 0..m.vertex_count() {
            assert!(
                (sim.vertex_radius[v] - field.vertex_distance[v]).abs() <= 1e-7,
                "vertex {v}: wavefront {} vs solver {}",
                sim.vertex_radius[v],
                field.vertex_distance[v]
            );
        }
    }

    #[test]
    fn tetra_paths_have_no_crossings() {
        let m = tetra();
        let field = propagate(&m, &SurfacePoint::Vertex(0));
        assert_eq!(count_path_crossings(&m, &field), 0);
    }

    #[test]
    fn cube_corner_paths_cross_edges() {
        // corner 0 of this triangulation touches no diagonal, so each of
        // the four non-adjacent corners' paths must cross at least one edge
        let m = cube_alt();
        let field = propagate(&m, &SurfacePoint::Vertex(0));
        assert!(count_path_crossings(&m, &field) >= 4);
    }

    #[test]
    fn sections_partition_boundary_after_each_event() {
        let m = parse_mesh(fixtures::CUBE_OFF, MeshFormat::Off).unwrap();
        let mut sim = Simulation::new(&m, &SurfacePoint::Vertex(0)).unwrap();
        while let Some(ev) = sim.next_event() {
            sim.process_event(ev).unwrap();
            let sections = sim.sections();
            let mut seen: BTreeSet<EdgeId> = BTreeSet::new();
            for s in sections.iter().filter(|s| s.kind == SectionKind::Boundary) {
                for &e in &s.members {
                    assert!(seen.insert(e), "edge {e} in two boundary sections");
                }
            }
            assert_eq!(seen, sim.boundary.edges, "sections must cover B exactly");
        }
    }
}
