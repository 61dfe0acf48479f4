//! Deterministic mesh generators for benchmarks and tests.
//!
//! Three families:
//! * [`strip`]: a doubly covered flat slab, 1 x (n/2), with the far end
//!   fanned into n/4 target vertices. Vertex 0 is the near corner.
//! * [`convex_random`]: the convex hull of n random unit-sphere points.
//! * [`sphere_approx`]: a subdivided icosahedron with at least n vertices.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::geom::{v3, Vec3};
use crate::mesh::{HalfedgeMesh, MeshError, VertexId};

#[derive(Debug, Error)]
pub enum GenError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("mesh construction failed: {0}")]
    Mesh(#[from] MeshError),
}

/// Dispatch on a generator name: `strip`, `convex_random`, or `sphere_approx`.
pub fn generate(kind: &str, n: usize, seed: u64) -> Result<HalfedgeMesh, GenError> {
    match kind {
        "strip" => strip(n),
        "convex_random" => convex_random(n, seed),
        "sphere_approx" => sphere_approx(n),
        other => Err(GenError::BadParameter(format!(
            "unknown mesh kind {other:?} (expected strip, convex_random, or sphere_approx)"
        ))),
    }
}

/// Doubly covered flat rectangle, 1 wide and n/2 long, cut into n/2 cells.
/// The far edge carries n/4 fan vertices; every cell boundary is a pair of
/// rung edges that a near-to-far geodesic must cross. The two sheets share
/// the rim; each sheet gets its own copy of the mid-row vertices so that no
/// interior edge is identified between sheets.
///
/// Requires n >= 8 and n divisible by 4. Vertex 0 sits at the origin corner.
pub fn strip(n: usize) -> Result<HalfedgeMesh, GenError> {
    if n < 8 || n % 4 != 0 {
        return Err(GenError::BadParameter(format!(
            "strip size must be a multiple of 4, at least 8 (got {n})"
        )));
    }
    let m = n / 2; // cells along the length
    let k = n / 4; // vertices on the far edge, corners included

    let mut pts: Vec<Vec3> = Vec::new();
    for i in 0..=m {
        pts.push(v3(i as f64, 0.0, 0.0)); // B_i = i
    }
    for i in 0..=m {
        pts.push(v3(i as f64, 1.0, 0.0)); // T_i = (m+1)+i
    }
    let far_base = pts.len();
    for j in 1..k - 1 {
        pts.push(v3(m as f64, j as f64 / (k - 1) as f64, 0.0));
    }
    let mid_top = pts.len();
    for i in 1..m {
        pts.push(v3(i as f64, 0.5, 0.0));
    }
    let mid_bot = pts.len();
    for i in 1..m {
        pts.push(v3(i as f64, 0.5, 0.0));
    }

    let b = |i: usize| i;
    let t = |i: usize| m + 1 + i;
    let far = |j: usize| {
        if j == 0 {
            b(m)
        } else if j == k - 1 {
            t(m)
        } else {
            far_base + j - 1
        }
    };

    // One sheet's faces with mid-row vertices taken from `mid(i)`.
    let sheet = |mid: &dyn Fn(usize) -> VertexId| -> Vec<Vec<VertexId>> {
        let mut faces = Vec::new();
        // near cell fans from mid(1)
        faces.push(vec![b(0), b(1), mid(1)]);
        faces.push(vec![b(0), mid(1), t(0)]);
        faces.push(vec![t(0), mid(1), t(1)]);
        for i in 1..m - 1 {
            faces.push(vec![b(i), b(i + 1), mid(i + 1)]);
            faces.push(vec![b(i), mid(i + 1), mid(i)]);
            faces.push(vec![mid(i), mid(i + 1), t(i + 1)]);
            faces.push(vec![mid(i), t(i + 1), t(i)]);
        }
        // far cell fans from mid(m-1) into the subdivided far edge
        faces.push(vec![b(m - 1), far(0), mid(m - 1)]);
        for j in 0..k - 1 {
            faces.push(vec![mid(m - 1), far(j), far(j + 1)]);
        }
        faces.push(vec![mid(m - 1), far(k - 1), t(m - 1)]);
        faces
    };

    let top: Vec<Vec<VertexId>> = sheet(&|i| mid_top + i - 1);
    let bottom: Vec<Vec<VertexId>> = sheet(&|i| mid_bot + i - 1)
        .into_iter()
        .map(|f| vec![f[0], f[2], f[1]])
        .collect();

    let mut faces = top;
    faces.extend(bottom);
    Ok(HalfedgeMesh::from_polygons(pts, &faces)?)
}

/// Convex hull of n points sampled uniformly on the unit sphere. Every input
/// point lands on the hull, so the mesh has exactly n vertices and every
/// vertex angle is below 2 pi. Deterministic per seed. Requires n >= 4.
pub fn convex_random(n: usize, seed: u64) -> Result<HalfedgeMesh, GenError> {
    if n < 4 {
        return Err(GenError::BadParameter(format!(
            "convex_random needs at least 4 points (got {n})"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts: Vec<Vec3> = Vec::with_capacity(n);
    while pts.len() < n {
        let p = v3(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let r = p.norm();
        if r < 0.1 || r > 1.0 {
            continue;
        }
        pts.push(p * (1.0 / r));
    }
    let hull = convex_hull_3d(&pts)?;
    let mut on_hull = vec![false; n];
    for f in &hull {
        for &v in f {
            on_hull[v] = true;
        }
    }
    if on_hull.iter().any(|&x| !x) {
        return Err(GenError::BadParameter(
            "degenerate sample: a point fell inside the hull".into(),
        ));
    }
    let faces: Vec<Vec<VertexId>> = hull.iter().map(|f| f.to_vec()).collect();
    Ok(HalfedgeMesh::from_polygons(pts, &faces)?)
}

/// Geodesic sphere: an icosahedron subdivided until it has at least n
/// vertices (12, 42, 162, 642, ...), projected onto the unit sphere.
/// Requires 4 <= n <= 40962.
pub fn sphere_approx(n: usize) -> Result<HalfedgeMesh, GenError> {
    if n < 4 {
        return Err(GenError::BadParameter(format!(
            "sphere_approx needs at least 4 vertices (got {n})"
        )));
    }
    let phi = (1.0 + 5.0_f64.sqrt()) / 2.0;
    let mut pts: Vec<Vec3> = [
        v3(-1.0, phi, 0.0),
        v3(1.0, phi, 0.0),
        v3(-1.0, -phi, 0.0),
        v3(1.0, -phi, 0.0),
        v3(0.0, -1.0, phi),
        v3(0.0, 1.0, phi),
        v3(0.0, -1.0, -phi),
        v3(0.0, 1.0, -phi),
        v3(phi, 0.0, -1.0),
        v3(phi, 0.0, 1.0),
        v3(-phi, 0.0, -1.0),
        v3(-phi, 0.0, 1.0),
    ]
    .iter()
    .map(|p| p.normalized())
    .collect();
    let mut faces: Vec<[usize; 3]> = vec![
        [0, 11, 5],
        [0, 5, 1],
        [0, 1, 7],
        [0, 7, 10],
        [0, 10, 11],
        [1, 5, 9],
        [5, 11, 4],
        [11, 10, 2],
        [10, 7, 6],
        [7, 1, 8],
        [3, 9, 4],
        [3, 4, 2],
        [3, 2, 6],
        [3, 6, 8],
        [3, 8, 9],
        [4, 9, 5],
        [2, 4, 11],
        [6, 2, 10],
        [8, 6, 7],
        [9, 8, 1],
    ];

    let mut level = 0;
    while 10 * 4_usize.pow(level) + 2 < n {
        level += 1;
        if level > 6 {
            return Err(GenError::BadParameter(format!(
                "sphere_approx supports at most 40962 vertices (got {n})"
            )));
        }
    }
    for _ in 0..level {
        let mut mid = std::collections::HashMap::new();
        let mut next = Vec::with_capacity(faces.len() * 4);
        for f in &faces {
            let mut m = [0usize; 3];
            for e in 0..3 {
                let (a, bb) = (f[e], f[(e + 1) % 3]);
                let key = (a.min(bb), a.max(bb));
                m[e] = *mid.entry(key).or_insert_with(|| {
                    pts.push(((pts[a] + pts[bb]) * 0.5).normalized());
                    pts.len() - 1
                });
            }
            next.push([f[0], m[0], m[2]]);
            next.push([f[1], m[1], m[0]]);
            next.push([f[2], m[2], m[1]]);
            next.push([m[0], m[1], m[2]]);
        }
        faces = next;
    }
    let faces: Vec<Vec<VertexId>> = faces.iter().map(|f| f.to_vec()).collect();
    Ok(HalfedgeMesh::from_polygons(pts, &faces)?)
}

/// Incremental 3D convex hull. Returns outward-oriented triangles. Assumes
/// general position (random continuous coordinates); near-coplanar points
/// are treated as inside.
fn convex_hull_3d(pts: &[Vec3]) -> Result<Vec<[usize; 3]>, GenError> {
    let n = pts.len();
    assert!(n >= 4);
    let degenerate =
        || GenError::BadParameter("degenerate sample: points are nearly coplanar".into());

    // seed tetrahedron: spread-out quadruple
    let p0 = 0;
    let p1 = (1..n)
        .max_by(|&i, &j| {
            let di = (pts[i] - pts[p0]).norm();
            let dj = (pts[j] - pts[p0]).norm();
            di.partial_cmp(&dj).unwrap()
        })
        .unwrap();
    let p2 = (0..n)
        .max_by(|&i, &j| {
            let ai = (pts[p1] - pts[p0]).cross(pts[i] - pts[p0]).norm();
            let aj = (pts[p1] - pts[p0]).cross(pts[j] - pts[p0]).norm();
            ai.partial_cmp(&aj).unwrap()
        })
        .unwrap();
    let nrm = (pts[p1] - pts[p0]).cross(pts[p2] - pts[p0]);
    if nrm.norm() < 1e-12 {
        return Err(degenerate());
    }
    let p3 = (0..n)
        .max_by(|&i, &j| {
            let vi = nrm.dot(pts[i] - pts[p0]).abs();
            let vj = nrm.dot(pts[j] - pts[p0]).abs();
            vi.partial_cmp(&vj).unwrap()
        })
        .unwrap();
    if nrm.dot(pts[p3] - pts[p0]).abs() < 1e-12 {
        return Err(degenerate());
    }
    let (a, b, c, d) = if nrm.dot(pts[p3] - pts[p0]) < 0.0 {
        (p0, p1, p2, p3)
    } else {
        (p0, p2, p1, p3)
    };
    let mut faces: Vec<([usize; 3], bool)> = vec![
        ([a, b, c], true),
        ([a, c, d], true),
        ([c, b, d], true),
        ([b, a, d], true),
    ];
    let outward = |f: &[usize; 3]| (pts[f[1]] - pts[f[0]]).cross(pts[f[2]] - pts[f[0]]);

    let seeded = [a, b, c, d];
    for p in 0..n {
        if seeded.contains(&p) {
            continue;
        }
        let visible: Vec<usize> = (0..faces.len())
            .filter(|&fi| {
                let (f, alive) = &faces[fi];
                *alive && outward(f).dot(pts[p] - pts[f[0]]) > 1e-12
            })
            .collect();
        if visible.is_empty() {
            continue;
        }
        // horizon: directed edges of visible faces whose reverse lies in a
        // face that stays
        let mut edges = std::collections::BTreeSet::new();
        for &fi in &visible {
            let f = faces[fi].0;
            for e in 0..3 {
                edges.insert((f[e], f[(e + 1) % 3]));
            }
        }
        for &fi in &visible {
            faces[fi].1 = false;
        }
        for &(u, v) in &edges {
            if !edges.contains(&(v, u)) {
                faces.push(([u, v, p], true));
            }
        }
    }
    Ok(faces
        .into_iter()
        .filter_map(|(f, alive)| alive.then_some(f))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::SurfacePoint;
    use crate::solver;

    #[test]
    fn strip_counts_and_euler() {
        for n in [8usize, 16, 32] {
            let mesh = strip(n).unwrap();
            let (m, k) = (n / 2, n / 4);
            assert_eq!(mesh.vertex_count(), 4 * m + k - 2, "n={n}");
            assert_eq!(mesh.face_count(), 2 * (4 * m + k - 4), "n={n}");
            assert!(mesh.euler_ok(), "n={n}");
            let p = mesh.point(0);
            assert_eq!((p.x, p.y, p.z), (0.0, 0.0, 0.0));
        }
    }

    #[test]
    fn strip_rejects_bad_sizes() {
        for n in [0usize, 4, 6, 10] {
            assert!(matches!(strip(n), Err(GenError::BadParameter(_))), "n={n}");
        }
    }

    #[test]
    fn strip_is_flat() {
        let mesh = strip(16).unwrap();
        for v in 0..mesh.vertex_count() {
            let total = mesh.vertex_total_angle(v);
            assert!(
                total <= 2.0 * std::f64::consts::PI + 1e-9,
                "vertex {v} has angle {total}"
            );
        }
    }

    #[test]
    fn strip_distances_match_plane() {
        let mesh = strip(8).unwrap();
        let field = solver::propagate(&mesh, &SurfacePoint::Vertex(0));
        let m = 4.0;
        // far bottom corner: straight run along the bottom rim
        let far_corner = (0..mesh.vertex_count())
            .find(|&v| {
                let p = mesh.point(v);
                p.x == m && p.y == 0.0
            })
            .unwrap();
        assert!((field.vertex_distance[far_corner] - m).abs() < 1e-9);
        // near top corner: straight across the width
        let near_top = (0..mesh.vertex_count())
            .find(|&v| {
                let p = mesh.point(v);
                p.x == 0.0 && p.y == 1.0
            })
            .unwrap();
        assert!((field.vertex_distance[near_top] - 1.0).abs() < 1e-9);
        // far top corner: in-sheet diagonal
        let far_top = (0..mesh.vertex_count())
            .find(|&v| {
                let p = mesh.point(v);
                p.x == m && p.y == 1.0
            })
            .unwrap();
        let expect = (m * m + 1.0).sqrt();
        assert!((field.vertex_distance[far_top] - expect).abs() < 1e-9);
    }

    #[test]
    fn convex_random_is_convex_and_sized() {
        let mesh = convex_random(32, 7).unwrap();
        assert_eq!(mesh.vertex_count(), 32);
        assert!(mesh.euler_ok());
        for v in 0..mesh.vertex_count() {
            assert!(!mesh.is_saddle(v), "vertex {v} is a saddle");
        }
    }

    #[test]
    fn convex_random_deterministic_per_seed() {
        let a = convex_random(20, 11).unwrap();
        let b = convex_random(20, 11).unwrap();
        let c = convex_random(20, 12).unwrap();
        let dump = |m: &HalfedgeMesh| {
            let pts: Vec<_> = (0..m.vertex_count()).map(|v| m.point(v)).collect();
            let faces: Vec<Vec<usize>> =
                (0..m.face_count()).map(|f| m.face_vertices(f).to_vec()).collect();
            crate::mesh::to_off(&pts, &faces)
        };
        assert_eq!(dump(&a), dump(&b));
        assert_ne!(dump(&a), dump(&c));
    }

    #[test]
    fn sphere_approx_levels() {
        assert_eq!(sphere_approx(12).unwrap().vertex_count(), 12);
        assert_eq!(sphere_approx(13).unwrap().vertex_count(), 42);
        assert_eq!(sphere_approx(100).unwrap().vertex_count(), 162);
        assert!(sphere_approx(100).unwrap().euler_ok());
        assert!(matches!(
            sphere_approx(1_000_000),
            Err(GenError::BadParameter(_))
        ));
    }

    #[test]
    fn hull_of_cube_corners_has_all_eight() {
        let pts = vec![
            v3(0.1, 0.0, 0.0),
            v3(1.0, 0.0, 0.1),
            v3(1.0, 1.0, 0.0),
            v3(0.0, 1.0, 0.05),
            v3(0.0, 0.05, 1.0),
            v3(1.0, 0.0, 0.9),
            v3(1.0, 1.0, 1.1),
            v3(0.0, 1.0, 0.95),
        ];
        let faces = convex_hull_3d(&pts).unwrap();
        let mut seen = vec![false; 8];
        for f in &faces {
            for &v in f {
                seen[v] = true;
            }
        }
        assert!(seen.iter().all(|&s| s));
        // outward orientation: centroid is behind every face
        let centroid = pts.iter().fold(Vec3::ZERO, |s, &p| s + p) * (1.0 / 8.0);
        for f in &faces {
            let n = (pts[f[1]] - pts[f[0]]).cross(pts[f[2]] - pts[f[0]]);
            assert!(n.dot(centroid - pts[f[0]]) < 0.0);
        }
    }
}
