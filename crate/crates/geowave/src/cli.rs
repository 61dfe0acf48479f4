//! Command implementations behind the `geowave` binary. Each command is a
//! plain function returning its JSON (or OFF/SVG) output as a string so
//! tests can run commands in-process and compare bytes.

use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::generate::{self, GenError};
use crate::geom::Vec3;
use crate::mesh::{format_for_path, load_mesh, to_off, HalfedgeMesh, MeshError, SurfacePoint};
use crate::oracle::{brute_force_geodesic, OracleError, SteinerGraph};
use crate::solver::{self, GeodesicPath, PathError};
use crate::stats::RunStats;
use crate::svg::render_paths_svg;
use crate::wavefront::{Simulation, WavefrontError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    BadFlag(String),
    #[error("mesh error: {0}")]
    Mesh(#[from] MeshError),
    #[error("{0}")]
    Gen(#[from] GenError),
    #[error("oracle error: {0}")]
    Oracle(#[from] OracleError),
    #[error("path error: {0}")]
    Path(#[from] PathError),
    #[error("simulation error: {0}")]
    Wavefront(#[from] WavefrontError),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Exact,
    Steiner,
    Bruteforce,
}

impl std::str::FromStr for Algorithm {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "exact" => Ok(Algorithm::Exact),
            "steiner" => Ok(Algorithm::Steiner),
            "bruteforce" => Ok(Algorithm::Bruteforce),
            other => Err(CliError::BadFlag(format!(
                "unknown algorithm {other:?} (expected exact, steiner, or bruteforce)"
            ))),
        }
    }
}

impl Algorithm {
    fn name(self) -> &'static str {
        match self {
            Algorithm::Exact => "exact",
            Algorithm::Steiner => "steiner",
            Algorithm::Bruteforce => "bruteforce",
        }
    }
}

/// Parse `v:<id>`, `e:<id>:<t>`, or `f:<id>:<u>:<v>` against the mesh.
pub fn parse_source(mesh: &HalfedgeMesh, spec: &str) -> Result<SurfacePoint, CliError> {
    let bad = |msg: String| CliError::BadFlag(msg);
    let parts: Vec<&str> = spec.split(':').collect();
    let num = |s: &str| -> Result<f64, CliError> {
        s.parse::<f64>()
            .map_err(|_| bad(format!("bad number {s:?} in point spec {spec:?}")))
    };
    let id = |s: &str| -> Result<usize, CliError> {
        s.parse::<usize>()
            .map_err(|_| bad(format!("bad id {s:?} in point spec {spec:?}")))
    };
    match parts.as_slice() {
        ["v", v] => {
            let v = id(v)?;
            if v >= mesh.vertex_count() {
                return Err(bad(format!(
                    "vertex {v} out of range (mesh has {})",
                    mesh.vertex_count()
                )));
            }
            Ok(SurfacePoint::Vertex(v))
        }
        ["e", e, t] => {
            let (e, t) = (id(e)?, num(t)?);
            if e >= mesh.edge_count() || !(0.0..=1.0).contains(&t) {
                return Err(bad(format!("bad edge point {spec:?}")));
            }
            Ok(SurfacePoint::Edge { edge: e, t })
        }
        ["f", f, u, v] => {
            let (f, u, v) = (id(f)?, num(u)?, num(v)?);
            let w = 1.0 - u - v;
            if f >= mesh.face_count() || u < 0.0 || v < 0.0 || w < -1e-12 {
                return Err(bad(format!("bad face point {spec:?}")));
            }
            Ok(SurfacePoint::Face {
                face: f,
                bary: [u, v, w.max(0.0)],
            })
        }
        _ => Err(bad(format!(
            "bad point spec {spec:?} (expected v:<id>, e:<id>:<t>, or f:<id>:<u>:<v>)"
        ))),
    }
}

fn mesh_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

#[derive(Debug, Clone)]
pub struct SolveArgs {
    pub mesh: PathBuf,
    pub source: String,
    pub target: Option<String>,
    pub all_vertices: bool,
    pub emit_svg: Option<PathBuf>,
    pub emit_json: Option<PathBuf>,
    pub algorithm: Algorithm,
    pub steiner_level: usize,
}

fn trivial_path(pos: Vec3, at: SurfacePoint) -> GeodesicPath {
    GeodesicPath {
        points: vec![at.clone(), at],
        positions: vec![pos, pos],
        length: 0.0,
        crossed_edges: Vec::new(),
        strip: Vec::new(),
    }
}

/// Solve distances (and, for the exact algorithm, paths) from one source to
/// one target or to every vertex. Returns the stats JSON; optionally writes
/// it and an SVG of the path tree.
pub fn run_solve(args: &SolveArgs) -> Result<String, CliError> {
    let t0 = Instant::now();
    let mesh = load_mesh(&args.mesh, format_for_path(&args.mesh))?;
    let source = parse_source(&mesh, &args.source)?;

    let targets: Vec<SurfacePoint> = if args.all_vertices {
        if args.target.is_some() {
            return Err(CliError::BadFlag(
                "--target and --all-vertices are mutually exclusive".into(),
            ));
        }
        (0..mesh.vertex_count()).map(SurfacePoint::Vertex).collect()
    } else {
        match &args.target {
            Some(t) => vec![parse_source(&mesh, t)?],
            None => {
                return Err(CliError::BadFlag(
                    "need --target <point> or --all-vertices".into(),
                ))
            }
        }
    };
    if args.emit_svg.is_some() && args.algorithm != Algorithm::Exact {
        return Err(CliError::BadFlag(
            "--emit-svg requires --algorithm exact (paths are only extracted there)".into(),
        ));
    }

    let mut stats = RunStats::new(mesh_name(&args.mesh), mesh.vertex_count(), args.algorithm.name());
    let mut paths: Vec<GeodesicPath> = Vec::new();

    match args.algorithm {
        Algorithm::Exact => {
            let field = solver::propagate(&mesh, &source);
            for t in &targets {
                let path = if *t == source {
                    trivial_path(surface_position(&mesh, t), t.clone())
                } else {
                    solver::extract_path(&mesh, &field, t)?
                };
                stats.vertex_distances.push(solver::distance_at(&mesh, &field, t));
                stats.crossings += path.crossed_edges.len();
                paths.push(path);
            }
        }
        Algorithm::Steiner => {
            let g = SteinerGraph::build(&mesh, args.steiner_level);
            let (sn, _) = g.node_for(&mesh, &source);
            let dist = g.dijkstra(sn);
            for t in &targets {
                let (tn, _) = g.node_for(&mesh, t);
                stats.vertex_distances.push(dist[tn]);
            }
        }
        Algorithm::Bruteforce => {
            let max_faces = mesh.face_count().min(12);
            for t in &targets {
                let d = if *t == source {
                    0.0
                } else {
                    brute_force_geodesic(&mesh, &source, t, max_faces)?
                };
                stats.vertex_distances.push(d);
            }
        }
    }

    stats.wall_ms = t0.elapsed().as_secs_f64() * 1e3;
    let json = stats.to_json();
    if let Some(p) = &args.emit_json {
        std::fs::write(p, &json)?;
    }
    if let Some(p) = &args.emit_svg {
        std::fs::write(p, render_paths_svg(&mesh, &paths))?;
    }
    Ok(json)
}

fn surface_position(mesh: &HalfedgeMesh, p: &SurfacePoint) -> Vec3 {
    mesh.position(p)
}

/// Run the section-grouped wavefront simulation to completion and report
/// its event counters alongside the swept crossing tally.
pub fn run_simulate(mesh_path: &Path, source_spec: &str) -> Result<String, CliError> {
    let t0 = Instant::now();
    let mesh = load_mesh(mesh_path, format_for_path(mesh_path))?;
    let source = parse_source(&mesh, source_spec)?;
    let mut sim = Simulation::new(&mesh, &source)?;
    sim.run()?;

    let mut stats = RunStats::new(mesh_name(mesh_path), mesh.vertex_count(), "wavefront");
    stats.vertex_distances = sim.vertex_radius.clone();
    stats.crossings = sim.log.crossings;
    stats.e1_events = sim.log.e1_events;
    stats.e2_events = sim.log.e2_events;
    stats.e3_events = sim.log.e3_events;
    stats.e4_events = sim.log.e4_events;
    stats.hull_queries = sim.log.hull_queries;
    stats.hull_node_visits = sim.log.hull_node_visits;
    stats.wall_ms = t0.elapsed().as_secs_f64() * 1e3;
    Ok(stats.to_json())
}

/// Generate a mesh (`strip`, `convex_random`, `sphere_approx`) and return
/// its OFF text, optionally writing it to a file.
pub fn run_gen(
    kind: &str,
    n: usize,
    seed: u64,
    out: Option<&Path>,
) -> Result<String, CliError> {
    let mesh = generate::generate(kind, n, seed)?;
    let pts: Vec<Vec3> = (0..mesh.vertex_count()).map(|v| mesh.point(v)).collect();
    let faces: Vec<Vec<usize>> = (0..mesh.face_count())
        .map(|f| mesh.face_vertices(f).to_vec())
        .collect();
    let off = to_off(&pts, &faces);
    if let Some(p) = out {
        std::fs::write(p, &off)?;
    }
    Ok(off)
}

/// Cross-check the exact solver against the oracles on random vertex pairs.
/// Returns (report JSON, all-within-tolerance). `inject_error` shifts the
/// exact distances and exists so the negative control can prove the check
/// has teeth.
pub fn run_verify(
    mesh_path: &Path,
    trials: usize,
    seed: u64,
    inject_error: f64,
) -> Result<(String, bool), CliError> {
    let mesh = load_mesh(mesh_path, format_for_path(mesh_path))?;
    let nv = mesh.vertex_count();
    if nv < 2 {
        return Err(CliError::BadFlag("mesh has fewer than 2 vertices".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let brute_feasible = mesh.face_count() <= 20;
    let steiner_level = 4;
    let g = SteinerGraph::build(&mesh, steiner_level);

    let mut fields: std::collections::HashMap<usize, solver::DistanceField> =
        std::collections::HashMap::new();
    let mut max_oracle_delta: f64 = 0.0;
    let mut max_sandwich_violation: f64 = 0.0;
    let mut checked_brute = 0usize;
    for _ in 0..trials {
        let s = rng.gen_range(0..nv);
        let mut t = rng.gen_range(0..nv);
        while t == s {
            t = rng.gen_range(0..nv);
        }
        let field = fields
            .entry(s)
            .or_insert_with(|| solver::propagate(&mesh, &SurfacePoint::Vertex(s)));
        let exact = field.vertex_distance[t] + inject_error;

        let (sn, _) = g.node_for(&mesh, &SurfacePoint::Vertex(s));
        let (tn, _) = g.node_for(&mesh, &SurfacePoint::Vertex(t));
        let upper = g.dijkstra(sn)[tn];
        max_sandwich_violation =
            max_sandwich_violation.max(exact - upper - 1e-9 * (1.0 + upper));

        if brute_feasible {
            let bf = brute_force_geodesic(
                &mesh,
                &SurfacePoint::Vertex(s),
                &SurfacePoint::Vertex(t),
                mesh.face_count().min(12),
            )?;
            max_oracle_delta = max_oracle_delta.max((exact - bf).abs());
            checked_brute += 1;
        }
    }
    let ok = max_oracle_delta <= 1e-7 && max_sandwich_violation <= 0.0;
    let report = serde_json::json!({
        "schema": crate::stats::SCHEMA_VERSION,
        "mesh": mesh_name(mesh_path),
        "n": nv,
        "trials": trials,
        "seed": seed,
        "brute_force_trials": checked_brute,
        "steiner_level": steiner_level,
        "max_oracle_delta": max_oracle_delta,
        "max_sandwich_violation": max_sandwich_violation.max(0.0),
        "ok": ok,
    });
    Ok((serde_json::to_string_pretty(&report).unwrap(), ok))
}

/// Default seed: `GEOWAVE_SEED` if set and numeric, else 0.
pub fn default_seed() -> u64 {
    std::env::var("GEOWAVE_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::fixtures::CUBE_OFF;
    use crate::stats::comparable_json;

    fn cube_file(dir: &Path) -> PathBuf {
        let p = dir.join("cube.off");
        std::fs::write(&p, CUBE_OFF).unwrap();
        p
    }

    fn tmpdir(tag: &str) -> PathBuf {
        let d = std::env::temp_dir().join(format!("geowave-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&d).unwrap();
        d
    }

    #[test]
    fn solve_cube_corner_to_corner() {
        let dir = tmpdir("solve");
        let mesh = cube_file(&dir);
        let args = SolveArgs {
            mesh,
            source: "v:0".into(),
            target: Some("v:6".into()),
            all_vertices: false,
            emit_svg: None,
            emit_json: None,
            algorithm: Algorithm::Exact,
            steiner_level: 0,
        };
        let json = run_solve(&args).unwrap();
        let stats: RunStats = serde_json::from_str(&json).unwrap();
        assert!((stats.vertex_distances[0] - 5.0_f64.sqrt()).abs() < 1e-9);
        assert_eq!(stats.crossings, 1);
    }

    #[test]
    fn solve_steiner_level0_cube_is_edge_graph() {
        let dir = tmpdir("steiner");
        let args = SolveArgs {
            mesh: cube_file(&dir),
            source: "v:0".into(),
            target: Some("v:6".into()),
            all_vertices: false,
            emit_svg: None,
            emit_json: None,
            algorithm: Algorithm::Steiner,
            steiner_level: 0,
        };
        let json = run_solve(&args).unwrap();
        let stats: RunStats = serde_json::from_str(&json).unwrap();
        // fan-triangulated cube: two unit edges replaced by one √2 diagonal
        assert!((stats.vertex_distances[0] - (1.0 + 2.0_f64.sqrt())).abs() < 1e-9);
    }

    #[test]
    fn solve_all_vertices_emits_svg() {
        let dir = tmpdir("svg");
        let svg_path = dir.join("out.svg");
        let args = SolveArgs {
            mesh: cube_file(&dir),
            source: "v:0".into(),
            target: None,
            all_vertices: true,
            emit_svg: Some(svg_path.clone()),
            emit_json: None,
            algorithm: Algorithm::Exact,
            steiner_level: 0,
        };
        run_solve(&args).unwrap();
        let svg = std::fs::read_to_string(&svg_path).unwrap();
        assert_eq!(svg.matches("class=\"path\"").count(), 8);
    }

    #[test]
    fn solve_rejects_bad_flags() {
        let dir = tmpdir("flags");
        let mesh = cube_file(&dir);
        let base = SolveArgs {
            mesh,
            source: "v:0".into(),
            target: None,
            all_vertices: false,
            emit_svg: None,
            emit_json: None,
            algorithm: Algorithm::Exact,
            steiner_level: 0,
        };
        assert!(matches!(run_solve(&base), Err(CliError::BadFlag(_))));
        let mut bad_src = base.clone();
        bad_src.source = "v:99".into();
        bad_src.all_vertices = true;
        assert!(matches!(run_solve(&bad_src), Err(CliError::BadFlag(_))));
        let mut both = base.clone();
        both.target = Some("v:1".into());
        both.all_vertices = true;
        assert!(matches!(run_solve(&both), Err(CliError::BadFlag(_))));
    }

    #[test]
    fn simulate_cube_reports_events() {
        let dir = tmpdir("sim");
        let json = run_simulate(&cube_file(&dir), "v:0").unwrap();
        let stats: RunStats = serde_json::from_str(&json).unwrap();
        assert_eq!(stats.algorithm, "wavefront");
        assert_eq!(stats.e3_events, 7);
        assert!(stats.e1_events > 0);
        assert!((stats.vertex_distances[6] - 5.0_f64.sqrt()).abs() < 1e-7);
    }

    #[test]
    fn gen_writes_valid_off() {
        let dir = tmpdir("gen");
        let out = dir.join("strip.off");
        let off = run_gen("strip", 16, 0, Some(&out)).unwrap();
        assert_eq!(off, std::fs::read_to_string(&out).unwrap());
        let mesh = load_mesh(&out, format_for_path(&out)).unwrap();
        assert!(mesh.euler_ok());
        assert!(matches!(
            run_gen("torus", 16, 0, None),
            Err(CliError::Gen(GenError::BadParameter(_)))
        ));
    }

    #[test]
    fn verify_cube_passes_and_negative_control_fails() {
        let dir = tmpdir("verify");
        let mesh = cube_file(&dir);
        let (report, ok) = run_verify(&mesh, 30, 1, 0.0).unwrap();
        assert!(ok, "{report}");
        let (_, bad) = run_verify(&mesh, 30, 1, 1e-3).unwrap();
        assert!(!bad);
    }

    #[test]
    fn repeated_runs_are_byte_identical_modulo_wall_time() {
        let dir = tmpdir("det");
        let mesh = cube_file(&dir);
        let a = run_simulate(&mesh, "v:0").unwrap();
        let b = run_simulate(&mesh, "v:0").unwrap();
        assert_eq!(
            comparable_json(&a).unwrap(),
            comparable_json(&b).unwrap()
        );
    }
}
