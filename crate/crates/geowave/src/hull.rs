//! Hierarchical convex hulls over section chains.
//!
//! A section's geometry is an ordered planar chain of points. The hierarchy
//! is a balanced binary tree over chain order: every node stores the convex
//! hull of its subtree in its own local frame, the rigid transforms relating
//! each child's frame to its own, and the tangent bridges stitching the two
//! child hulls into the parent hull. Splits map to chain indices, matching
//! how sections split at simulation events; split and merge touch only the
//! nodes along a root path (AVL-style joins), and hull-to-hull distance
//! queries run in a polylogarithmic number of node visits.

use crate::geom::{segment_segment_distance, Rigid2, Vec2};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HullError {
    #[error("split index {at} out of range (leaf count {leaves})")]
    IndexOutOfRange { at: usize, leaves: usize },
}

/// Ordered planar chain of points for one section, in a common unfolded
/// frame. Chain order matches the section's member order.
#[derive(Debug, Clone)]
pub struct SectionGeometry {
    pub points: Vec<Vec2>,
}

impl From<Vec<Vec2>> for SectionGeometry {
    fn from(points: Vec<Vec2>) -> Self {
        SectionGeometry { points }
    }
}

/// Counters for structural updates: nodes rebuilt along the root path.
#[derive(Debug, Default, Clone, Copy)]
pub struct OpStats {
    pub touched_nodes: usize,
}

/// Counters for distance queries: support-search steps on hull chains.
#[derive(Debug, Default, Clone, Copy)]
pub struct QueryStats {
    pub node_visits: usize,
}

#[derive(Debug, Clone)]
enum NodeKind {
    Leaf(Vec2),
    Internal {
        left: Box<HullNode>,
        right: Box<HullNode>,
        /// Rigid transforms from each child's local frame into this node's
        /// frame. Stored lazily; descending composes them.
        left_rel: Rigid2,
        right_rel: Rigid2,
        /// Parent-hull edges whose endpoints come from different children.
        bridges: Vec<(Vec2, Vec2)>,
    },
}

/// Node of the hull hierarchy. The root of a tree is its own frame of
/// reference; all stored geometry is local.
#[derive(Debug, Clone)]
pub struct HullNode {
    /// Convex hull of the subtree's points, counterclockwise, collinear
    /// points dropped. May be a single point or a segment.
    pub hull: Vec<Vec2>,
    pub leaves: usize,
    height: usize,
    kind: NodeKind,
}

/// Strictly convex hull, counterclockwise, by monotone chain.
pub fn convex_hull(points: &[Vec2]) -> Vec<Vec2> {
    let mut pts: Vec<Vec2> = points.to_vec();
    pts.sort_by(|a, b| (a.x, a.y).partial_cmp(&(b.x, b.y)).unwrap());
    pts.dedup_by(|a, b| a.x == b.x && a.y == b.y);
    if pts.len() <= 2 {
        return pts;
    }
    let build = |iter: &mut dyn Iterator<Item = Vec2>| {
        let mut chain: Vec<Vec2> = Vec::new();
        for p in iter {
            while chain.len() >= 2 {
                let a = chain[chain.len() - 2];
                let b = chain[chain.len() - 1];
                if (b - a).cross(p - a) <= 0.0 {
                    chain.pop();
                } else {
                    break;
                }
            }
            chain.push(p);
        }
        chain.pop();
        chain
    };
    let mut lower = build(&mut pts.iter().copied());
    let upper = build(&mut pts.iter().rev().copied());
    lower.extend(upper);
    lower
}

impl HullNode {
    /// Balanced hierarchy over the chain by recursive halving.
    pub fn build(chain: &SectionGeometry) -> HullNode {
        assert!(!chain.points.is_empty(), "chain must have at least one point");
        Self::build_range(&chain.points)
    }

    fn build_range(pts: &[Vec2]) -> HullNode {
        if pts.len() == 1 {
            return HullNode::leaf(pts[0]);
        }
        let mid = pts.len() / 2;
        let left = Self::build_range(&pts[..mid]);
        let right = Self::build_range(&pts[mid..]);
        HullNode::link(left, right, &mut OpStats::default())
    }

    fn leaf(p: Vec2) -> HullNode {
        HullNode {
            hull: vec![p],
            leaves: 1,
            height: 0,
            kind: NodeKind::Leaf(p),
        }
    }

    /// Internal node from two children already expressed in the parent
    /// frame (identity rels). Hull and bridges recomputed from the child
    /// hulls with provenance tags.
    fn link(left: HullNode, right: HullNode, stats: &mut OpStats) -> HullNode {
        stats.touched_nodes += 1;
        let mut tagged: Vec<(Vec2, bool)> = Vec::with_capacity(left.hull.len() + right.hull.len());
        tagged.extend(left.hull.iter().map(|&p| (p, false)));
        tagged.extend(right.hull.iter().map(|&p| (p, true)));
        tagged.sort_by(|a, b| (a.0.x, a.0.y).partial_cmp(&(b.0.x, b.0.y)).unwrap());
        tagged.dedup_by(|a, b| a.0.x == b.0.x && a.0.y == b.0.y);
        let hull_tagged = if tagged.len() <= 2 {
            tagged.clone()
        } else {
            let build = |iter: &mut dyn Iterator<Item = (Vec2, bool)>| {
                let mut chain: Vec<(Vec2, bool)> = Vec::new();
                for p in iter {
                    while chain.len() >= 2 {
                        let a = chain[chain.len() - 2].0;
                        let b = chain[chain.len() - 1].0;
                        if (b - a).cross(p.0 - a) <= 0.0 {
                            chain.pop();
                        } else {
                            break;
                        }
                    }
                    chain.push(p);
                }
                chain.pop();
                chain
            };
            let mut lower = build(&mut tagged.iter().copied());
            let upper = build(&mut tagged.iter().rev().copied());
            lower.extend(upper);
            lower
        };
        let k = hull_tagged.len();
        let bridges = (0..k)
            .filter(|&i| k > 1 && hull_tagged[i].1 != hull_tagged[(i + 1) % k].1)
            .map(|i| (hull_tagged[i].0, hull_tagged[(i + 1) % k].0))
            .collect();
        HullNode {
            hull: hull_tagged.into_iter().map(|(p, _)| p).collect(),
            leaves: left.leaves + right.leaves,
            height: 1 + left.height.max(right.height),
            kind: NodeKind::Internal {
                left: Box::new(left),
                right: Box::new(right),
                left_rel: Rigid2::IDENTITY,
                right_rel: Rigid2::IDENTITY,
                bridges,
            },
        }
    }

    /// Re-express this tree in an outer frame: transforms the local hull
    /// and folds `rel` into the child transforms without descending.
    fn reframed(mut self, rel: Rigid2) -> HullNode {
        if rel == Rigid2::IDENTITY {
            return self;
        }
        for p in &mut self.hull {
            *p = rel.apply(*p);
        }
        match &mut self.kind {
            NodeKind::Leaf(p) => *p = rel.apply(*p),
            NodeKind::Internal {
                left_rel,
                right_rel,
                bridges,
                ..
            } => {
                *left_rel = rel.compose(left_rel);
                *right_rel = rel.compose(right_rel);
                for (a, b) in bridges {
                    *a = rel.apply(*a);
                    *b = rel.apply(*b);
                }
            }
        }
        self
    }

    fn dismantle(self) -> (HullNode, HullNode) {
        match self.kind {
            NodeKind::Leaf(_) => unreachable!("dismantle on a leaf"),
            NodeKind::Internal {
                left,
                right,
                left_rel,
                right_rel,
                ..
            } => ((*left).reframed(left_rel), (*right).reframed(right_rel)),
        }
    }

    /// New root over `left` then `right`; `rel` maps `right`'s frame into
    /// `left`'s (the composed unfolding relationship). The result is in
    /// `left`'s frame and rebalanced.
    pub fn merge(left: HullNode, right: HullNode, rel: Rigid2, stats: &mut OpStats) -> HullNode {
        join(left, right.reframed(rel), stats)
    }

    /// Split the chain before leaf index `at`, yielding hierarchies over
    /// the prefix and suffix, both in this tree's frame.
    pub fn split(self, at: usize, stats: &mut OpStats) -> Result<(HullNode, HullNode), HullError> {
        if at == 0 || at >= self.leaves {
            return Err(HullError::IndexOutOfRange {
                at,
                leaves: self.leaves,
            });
        }
        Ok(split_at(self, at, stats))
    }

    /// Minimum distance between this hull and `other` mapped through `rel`
    /// (other's frame into this one's). Zero when the hulls intersect.
    pub fn query_distance(&self, other: &HullNode, rel: Rigid2, stats: &mut QueryStats) -> f64 {
        let b_mapped: Vec<Vec2> = other.hull.iter().map(|&p| rel.apply(p)).collect();
        polygon_distance(&self.hull, &b_mapped, stats)
    }

    /// Leaf points in chain order, in this tree's frame.
    pub fn leaf_points(&self) -> Vec<Vec2> {
        let mut out = Vec::with_capacity(self.leaves);
        self.collect_leaves(Rigid2::IDENTITY, &mut out);
        out
    }

    fn collect_leaves(&self, acc: Rigid2, out: &mut Vec<Vec2>) {
        match &self.kind {
            NodeKind::Leaf(p) => out.push(acc.apply(*p)),
            NodeKind::Internal {
                left,
                right,
                left_rel,
                right_rel,
                ..
            } => {
                left.collect_leaves(acc.compose(left_rel), out);
                right.collect_leaves(acc.compose(right_rel), out);
            }
        }
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Structural checks at every node: hull equals the brute-force hull of
    /// the mapped child hulls, bridges are tangent to both children, and
    /// the tree is balanced. Returns a description of the first violation.
    pub fn check_invariants(&self) -> Result<(), String> {
        let max_h = 2.0 * (self.leaves as f64).log2() + 2.0;
        if (self.height as f64) > max_h {
            return Err(format!(
                "height {} exceeds bound {max_h:.1} for {} leaves",
                self.height, self.leaves
            ));
        }
        let NodeKind::Internal {
            left,
            right,
            left_rel,
            right_rel,
            bridges,
        } = &self.kind
        else {
            return Ok(());
        };
        let mut union: Vec<Vec2> = left.hull.iter().map(|&p| left_rel.apply(p)).collect();
        union.extend(right.hull.iter().map(|&p| right_rel.apply(p)));
        let scale = union
            .iter()
            .map(|p| p.x.abs().max(p.y.abs()))
            .fold(1.0f64, f64::max);
        let expect = convex_hull(&union);
        if !hulls_match(&self.hull, &expect, 1e-9 * scale) {
            return Err(format!(
                "stored hull ({} pts) differs from hull of child union ({} pts)",
                self.hull.len(),
                expect.len()
            ));
        }
        for &(a, b) in bridges {
            for p in &union {
                if (b - a).cross(*p - a) < -1e-12 * scale {
                    return Err(format!("bridge ({a:?}, {b:?}) not tangent: {p:?} outside"));
                }
            }
        }
        left.check_invariants()?;
        right.check_invariants()
    }
}

fn hulls_match(a: &[Vec2], b: &[Vec2], tol: f64) -> bool {
    a.len() == b.len()
        && a.iter()
            .all(|p| b.iter().any(|q| p.dist(*q) <= tol))
}

// ---------------------------------------------------------------------------
// join / split (AVL style)

/// Join two trees in a common frame, preserving chain order and balance.
fn join(l: HullNode, r: HullNode, stats: &mut OpStats) -> HullNode {
    if l.height > r.height + 1 {
        join_right(l, r, stats)
    } else if r.height > l.height + 1 {
        join_left(l, r, stats)
    } else {
        HullNode::link(l, r, stats)
    }
}

/// `l` is the taller tree; descend its right spine until the partner is
/// height-compatible, then relink upward with single rotations.
fn join_right(l: HullNode, r: HullNode, stats: &mut OpStats) -> HullNode {
    let (a, c) = l.dismantle();
    if c.height <= r.height + 1 {
        let t = HullNode::link(c, r, stats);
        if t.height > a.height + 1 {
            rotate_left(HullNode::link(a, t, stats), stats)
        } else {
            HullNode::link(a, t, stats)
        }
    } else {
        let t = join_right(c, r, stats);
        if t.height > a.height + 1 {
            rotate_left(HullNode::link(a, t, stats), stats)
        } else {
            HullNode::link(a, t, stats)
        }
    }
}

fn join_left(l: HullNode, r: HullNode, stats: &mut OpStats) -> HullNode {
    let (a, c) = r.dismantle();
    if a.height <= l.height + 1 {
        let t = HullNode::link(l, a, stats);
        if t.height > c.height + 1 {
            rotate_right(HullNode::link(t, c, stats), stats)
        } else {
            HullNode::link(t, c, stats)
        }
    } else {
        let t = join_left(l, a, stats);
        if t.height > c.height + 1 {
            rotate_right(HullNode::link(t, c, stats), stats)
        } else {
            HullNode::link(t, c, stats)
        }
    }
}

fn rotate_left(n: HullNode, stats: &mut OpStats) -> HullNode {
    let (a, t) = n.dismantle();
    let (b, c) = t.dismantle();
    // prefer the shape that reduces overall height
    if b.height > c.height {
        // double rotation through b
        let (b0, b1) = b.dismantle();
        HullNode::link(
            HullNode::link(a, b0, stats),
            HullNode::link(b1, c, stats),
            stats,
        )
    } else {
        HullNode::link(HullNode::link(a, b, stats), c, stats)
    }
}

fn rotate_right(n: HullNode, stats: &mut OpStats) -> HullNode {
    let (t, c) = n.dismantle();
    let (a, b) = t.dismantle();
    if b.height > a.height {
        let (b0, b1) = b.dismantle();
        HullNode::link(
            HullNode::link(a, b0, stats),
            HullNode::link(b1, c, stats),
            stats,
        )
    } else {
        HullNode::link(a, HullNode::link(b, c, stats), stats)
    }
}

fn split_at(t: HullNode, at: usize, stats: &mut OpStats) -> (HullNode, HullNode) {
    let (a, b) = t.dismantle();
    let nl = a.leaves;
    if at == nl {
        (a, b)
    } else if at < nl {
        let (x, y) = split_at(a, at, stats);
        (x, join(y, b, stats))
    } else {
        let (x, y) = split_at(b, at - nl, stats);
        (join(a, x, stats), y)
    }
}

// ---------------------------------------------------------------------------
// distance queries

/// Extreme vertex of a strictly convex ccw polygon in direction `d`, by
/// binary search on edge directions (the edge angle sequence is cyclically
/// increasing). Each probe counts as one node visit.
fn support(hull: &[Vec2], d: Vec2, stats: &mut QueryStats) -> Vec2 {
    let k = hull.len();
    if k <= 4 {
        stats.node_visits += k;
        return *hull
            .iter()
            .max_by(|a, b| a.dot(d).partial_cmp(&b.dot(d)).unwrap())
            .unwrap();
    }
    let tau = std::f64::consts::TAU;
    let edge_angle = |i: usize| -> f64 {
        let e = hull[(i + 1) % k] - hull[i];
        e.y.atan2(e.x)
    };
    let base = edge_angle(0);
    // unrolled angle of edge i, strictly increasing in [0, tau)
    let s = |i: usize, stats: &mut QueryStats| -> f64 {
        stats.node_visits += 1;
        (edge_angle(i) - base).rem_euclid(tau)
    };
    // dot(e_i, d) turns negative once the edge angle passes perp(d)
    let target = (d.y.atan2(d.x) + tau / 4.0 - base).rem_euclid(tau);
    let (mut lo, mut hi) = (0usize, k); // first i with s(i) > target, or k
    while lo < hi {
        let mid = (lo + hi) / 2;
        if s(mid, stats) > target {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let mut i = lo % k;
    // ties in the angle comparison can land one step off
    for _ in 0..4 {
        stats.node_visits += 1;
        if hull[(i + 1) % k].dot(d) > hull[i].dot(d) {
            i = (i + 1) % k;
        } else if hull[(i + k - 1) % k].dot(d) > hull[i].dot(d) {
            i = (i + k - 1) % k;
        } else {
            break;
        }
    }
    hull[i]
}

/// Closest point to the origin on a simplex of ≤ 3 points; shrinks the
/// simplex to the supporting feature.
fn closest_on_simplex(simplex: &mut Vec<Vec2>) -> Vec2 {
    match simplex.len() {
        1 => simplex[0],
        2 => {
            let (a, b) = (simplex[0], simplex[1]);
            let ab = b - a;
            let t = (-a.dot(ab)) / ab.dot(ab).max(1e-300);
            if t <= 0.0 {
                simplex.truncate(1);
                a
            } else if t >= 1.0 {
                simplex.remove(0);
                b
            } else {
                a + ab * t
            }
        }
        _ => {
            let (a, b, c) = (simplex[0], simplex[1], simplex[2]);
            // check each edge's outer region
            let mut best = f64::INFINITY;
            let mut best_point = a;
            let mut best_keep: Vec<Vec2> = vec![a];
            for (p, q) in [(a, b), (b, c), (a, c)] {
                let pq = q - p;
                let t = ((-p.dot(pq)) / pq.dot(pq).max(1e-300)).clamp(0.0, 1.0);
                let x = p + pq * t;
                let d = x.norm();
                if d < best {
                    best = d;
                    best_point = x;
                    best_keep = if t <= 0.0 {
                        vec![p]
                    } else if t >= 1.0 {
                        vec![q]
                    } else {
                        vec![p, q]
                    };
                }
            }
            // inside test
            let d1 = (b - a).cross(c - a);
            let w0 = (b - Vec2::ZERO).cross(c - Vec2::ZERO);
            let w1 = (c - Vec2::ZERO).cross(a - Vec2::ZERO);
            let w2 = (a - Vec2::ZERO).cross(b - Vec2::ZERO);
            if d1 != 0.0 {
                let s = d1.signum();
                if w0 * s >= 0.0 && w1 * s >= 0.0 && w2 * s >= 0.0 {
                    *simplex = vec![a, b, c];
                    return Vec2::ZERO;
                }
            }
            *simplex = best_keep;
            best_point
        }
    }
}

/// Minimum distance between two convex polygons (GJK on the Minkowski
/// difference, supports by logarithmic search). Exact pair handling for
/// point/segment degeneracies.
fn polygon_distance(a: &[Vec2], b: &[Vec2], stats: &mut QueryStats) -> f64 {
    if a.len() <= 2 && b.len() <= 2 {
        stats.node_visits += (a.len() + b.len()) as usize;
        let (a0, a1) = (a[0], *a.last().unwrap());
        let (b0, b1) = (b[0], *b.last().unwrap());
        return segment_segment_distance(a0, a1, b0, b1);
    }
    let scale = a
        .iter()
        .chain(b)
        .map(|p| p.x.abs().max(p.y.abs()))
        .fold(1.0f64, f64::max);
    let support_diff = |d: Vec2, stats: &mut QueryStats| -> Vec2 {
        support(a, d, stats) - support(b, -d, stats)
    };
    let mut simplex = vec![a[0] - b[0]];
    let mut v = simplex[0];
    for _ in 0..64 {
        if v.norm() <= 1e-13 * scale {
            return 0.0;
        }
        let w = support_diff(-v, stats);
        // no progress past the supporting hyperplane: v is optimal
        if v.dot(v) - v.dot(w) <= 1e-13 * scale * v.norm() {
            return v.norm();
        }
        if !simplex.iter().any(|s| s.dist(w) <= 1e-15 * scale) {
            simplex.push(w);
        } else {
            return v.norm();
        }
        v = closest_on_simplex(&mut simplex);
        if simplex.len() == 3 {
            return 0.0;
        }
    }
    // stalled: brute force over the current candidate features
    stats.node_visits += a.len().min(16) + b.len().min(16);
    brute_polygon_distance(a, b)
}

/// O(k·m) reference distance between convex polygons: zero on overlap,
/// else the minimum over all vertex-edge pairs.
pub fn brute_polygon_distance(a: &[Vec2], b: &[Vec2]) -> f64 {
    let inside = |hull: &[Vec2], p: Vec2| -> bool {
        hull.len() >= 3
            && (0..hull.len()).all(|i| {
                let q = hull[i];
                let r = hull[(i + 1) % hull.len()];
                (r - q).cross(p - q) >= 0.0
            })
    };
    if a.iter().any(|&p| inside(b, p)) || b.iter().any(|&p| inside(a, p)) {
        return 0.0;
    }
    let mut best = f64::INFINITY;
    let seg = |h: &[Vec2], i: usize| (h[i], h[(i + 1) % h.len().max(1)]);
    for i in 0..a.len() {
        for j in 0..b.len() {
            let (p0, p1) = seg(a, i);
            let (q0, q1) = seg(b, j);
            best = best.min(segment_segment_distance(p0, p1, q0, q1));
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::v2;
    use approx::assert_relative_eq;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn square() -> Vec<Vec2> {
        vec![v2(0.0, 0.0), v2(1.0, 0.0), v2(1.0, 1.0), v2(0.0, 1.0)]
    }

    #[test]
    fn single_point_leaf() {
        let h = HullNode::build(&vec![v2(2.0, 3.0)].into());
        assert_eq!(h.leaves, 1);
        assert_eq!(h.hull, vec![v2(2.0, 3.0)]);
    }

    #[test]
    fn square_hull_and_bridges() {
        let h = HullNode::build(&square().into());
        assert_eq!(h.hull.len(), 4);
        h.check_invariants().unwrap();
    }

    #[test]
    fn random_convex_position_hull_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        // points on a circle are in convex position
        let mut angles: Vec<f64> = (0..64).map(|_| rng.gen_range(0.0..std::f64::consts::TAU)).collect();
        angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
        angles.dedup();
        let pts: Vec<Vec2> = angles.iter().map(|&t| v2(t.cos(), t.sin())).collect();
        let h = HullNode::build(&pts.clone().into());
        let brute = convex_hull(&pts);
        assert_eq!(h.hull.len(), brute.len());
        h.check_invariants().unwrap();
    }

    #[test]
    fn two_points_distance() {
        let a = HullNode::build(&vec![v2(0.0, 0.0)].into());
        let b = HullNode::build(&vec![v2(3.0, 4.0)].into());
        let mut qs = QueryStats::default();
        assert_relative_eq!(a.query_distance(&b, Rigid2::IDENTITY, &mut qs), 5.0);
    }

    #[test]
    fn identical_hulls_distance_zero() {
        let h = HullNode::build(&square().into());
        let mut qs = QueryStats::default();
        assert_eq!(h.query_distance(&h, Rigid2::IDENTITY, &mut qs), 0.0);
    }

    #[test]
    fn merge_two_points_makes_segment() {
        let a = HullNode::build(&vec![v2(0.0, 0.0)].into());
        let b = HullNode::build(&vec![v2(1.0, 0.0)].into());
        let mut os = OpStats::default();
        let m = HullNode::merge(a, b, Rigid2::IDENTITY, &mut os);
        assert_eq!(m.hull.len(), 2);
        m.check_invariants().unwrap();
    }

    #[test]
    fn merge_separated_squares_six_hull_vertices() {
        let a = HullNode::build(&square().into());
        let b = HullNode::build(
            &square().iter().map(|p| *p + v2(3.0, 0.5)).collect::<Vec<_>>().into(),
        );
        let mut os = OpStats::default();
        let m = HullNode::merge(a, b, Rigid2::IDENTITY, &mut os);
        assert_eq!(m.hull.len(), 6);
        m.check_invariants().unwrap();
    }

    #[test]
    fn merge_halves_of_polygon() {
        let pts: Vec<Vec2> = (0..16)
            .map(|i| {
                let t = i as f64 / 16.0 * std::f64::consts::TAU;
                v2(t.cos(), t.sin())
            })
            .collect();
        let a = HullNode::build(&pts[..8].to_vec().into());
        let b = HullNode::build(&pts[8..].to_vec().into());
        let mut os = OpStats::default();
        let m = HullNode::merge(a, b, Rigid2::IDENTITY, &mut os);
        assert_eq!(m.hull.len(), 16);
        m.check_invariants().unwrap();
    }

    #[test]
    fn split_two_points() {
        let h = HullNode::build(&vec![v2(0.0, 0.0), v2(1.0, 1.0)].into());
        let mut os = OpStats::default();
        let (a, b) = h.split(1, &mut os).unwrap();
        assert_eq!(a.leaves, 1);
        assert_eq!(b.leaves, 1);
    }

    #[test]
    fn split_then_merge_restores_hull() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let pts: Vec<Vec2> = (0..50)
            .map(|_| v2(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let h = HullNode::build(&pts.clone().into());
        let before = h.hull.clone();
        let mut os = OpStats::default();
        let (a, b) = h.split(23, &mut os).unwrap();
        let m = HullNode::merge(a, b, Rigid2::IDENTITY, &mut os);
        assert_eq!(m.leaf_points().len(), 50);
        assert_eq!(m.hull.len(), before.len());
        for p in &before {
            assert!(m.hull.iter().any(|q| p.dist(*q) < 1e-12));
        }
        m.check_invariants().unwrap();
    }

    #[test]
    fn split_touches_logarithmically_many_nodes() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let pts: Vec<Vec2> = (0..128)
            .map(|_| v2(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let bound = 4.0 * 128f64.log2();
        for _ in 0..100 {
            let h = HullNode::build(&pts.clone().into());
            let at = rng.gen_range(1..128);
            let mut os = OpStats::default();
            let (a, b) = h.split(at, &mut os).unwrap();
            assert!(
                (os.touched_nodes as f64) <= bound,
                "split at {at} touched {} nodes",
                os.touched_nodes
            );
            a.check_invariants().unwrap();
            b.check_invariants().unwrap();
        }
    }

    #[test]
    fn query_matches_brute_force_on_random_chains() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for case in 0..50 {
            let n = rng.gen_range(2..64);
            let m = rng.gen_range(2..64);
            let offset = v2(rng.gen_range(-4.0..4.0), rng.gen_range(-4.0..4.0));
            let chain = |rng: &mut ChaCha8Rng, k: usize, c: Vec2| -> Vec<Vec2> {
                (0..k)
                    .map(|_| c + v2(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                    .collect()
            };
            let pa = chain(&mut rng, n, Vec2::ZERO);
            let pb = chain(&mut rng, m, offset);
            let a = HullNode::build(&pa.clone().into());
            let b = HullNode::build(&pb.clone().into());
            let mut qs = QueryStats::default();
            let d = a.query_distance(&b, Rigid2::IDENTITY, &mut qs);
            let brute = brute_polygon_distance(&a.hull, &b.hull);
            assert!(
                (d - brute).abs() <= 1e-9,
                "case {case}: query {d} vs brute {brute}"
            );
        }
    }

    #[test]
    fn query_visits_polylog() {
        for &n in &[64usize, 256, 1024, 4096] {
            // convex position: hull keeps all points, worst case for support
            let pts: Vec<Vec2> = (0..n)
                .map(|i| {
                    let t = i as f64 / n as f64 * std::f64::consts::TAU;
                    v2(t.cos(), t.sin())
                })
                .collect();
            let far: Vec<Vec2> = pts.iter().map(|p| *p + v2(5.0, 1.0)).collect();
            let a = HullNode::build(&pts.into());
            let b = HullNode::build(&far.into());
            let mut qs = QueryStats::default();
            let d = a.query_distance(&b, Rigid2::IDENTITY, &mut qs);
            assert!(d > 3.0 && d < 5.2);
            let log = (n as f64).log2();
            assert!(
                (qs.node_visits as f64) <= 6.0 * log * log,
                "n={n}: {} visits",
                qs.node_visits
            );
        }
    }

    #[test]
    fn merge_with_rotation_transform() {
        let a = HullNode::build(&square().into());
        let b = HullNode::build(&square().into());
        let rel = Rigid2::from_angle_translation(std::f64::consts::FRAC_PI_4, v2(4.0, 0.0));
        let mut os = OpStats::default();
        let m = HullNode::merge(a, b, rel, &mut os);
        m.check_invariants().unwrap();
        let leaves = m.leaf_points();
        assert_eq!(leaves.len(), 8);
        assert_relative_eq!(leaves[4].x, 4.0, epsilon = 1e-12);
    }

    #[test]
    fn repeated_one_sided_merges_stay_balanced() {
        let mut os = OpStats::default();
        let mut h = HullNode::build(&vec![v2(0.0, 0.0)].into());
        for i in 1..200 {
            let leaf = HullNode::build(&vec![v2(i as f64, (i as f64).sin())].into());
            h = HullNode::merge(h, leaf, Rigid2::IDENTITY, &mut os);
        }
        assert_eq!(h.leaves, 200);
        h.check_invariants().unwrap();
    }

    proptest! {
        #[test]
        fn support_matches_linear_scan(seed in 0u64..500, dx in -1.0f64..1.0, dy in -1.0f64..1.0) {
            prop_assume!(dx.abs() + dy.abs() > 1e-6);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(5..200);
            let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..std::f64::consts::TAU)).collect();
            angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
            angles.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
            let hull: Vec<Vec2> = angles.iter().map(|&t| v2(2.0 * t.cos(), t.sin())).collect();
            let d = v2(dx, dy);
            let mut qs = QueryStats::default();
            let got = support(&hull, d, &mut qs).dot(d);
            let want = hull.iter().map(|p| p.dot(d)).fold(f64::MIN, f64::max);
            prop_assert!((got - want).abs() <= 1e-9 * (1.0 + want.abs()));
        }
    }
}
