//! SVG rendering of a mesh with source-to-target path polylines overlaid,
//! as two fixed orthographic views (front and back) side by side.

use crate::geom::Vec3;
use crate::mesh::HalfedgeMesh;
use crate::solver::GeodesicPath;

const VIEW: f64 = 500.0;
const MARGIN: f64 = 20.0;

/// Orthographic projections: front looks along -z, back is the model
/// rotated half a turn about the y axis.
fn project_front(p: Vec3) -> (f64, f64) {
    (p.x, -p.y)
}

fn project_back(p: Vec3) -> (f64, f64) {
    (-p.x, -p.y)
}

struct ViewBox {
    min: (f64, f64),
    scale: f64,
}

impl ViewBox {
    fn fit(points: impl Iterator<Item = (f64, f64)>) -> ViewBox {
        let mut lo = (f64::INFINITY, f64::INFINITY);
        let mut hi = (f64::NEG_INFINITY, f64::NEG_INFINITY);
        for (x, y) in points {
            lo = (lo.0.min(x), lo.1.min(y));
            hi = (hi.0.max(x), hi.1.max(y));
        }
        let span = (hi.0 - lo.0).max(hi.1 - lo.1).max(1e-12);
        ViewBox {
            min: lo,
            scale: (VIEW - 2.0 * MARGIN) / span,
        }
    }

    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (
            MARGIN + (x - self.min.0) * self.scale,
            MARGIN + (y - self.min.1) * self.scale,
        )
    }
}

fn fmt_pt((x, y): (f64, f64)) -> String {
    format!("{x:.3},{y:.3}")
}

/// Render the mesh wireframe plus one polyline per path, in front and back
/// views. Front-view polylines carry `class="path"`, one per entry of
/// `paths`; back-view copies carry `class="path-back"`.
pub fn render_paths_svg(mesh: &HalfedgeMesh, paths: &[GeodesicPath]) -> String {
    let width = 2.0 * VIEW + MARGIN;
    let mut s = String::new();
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{width}\" height=\"{VIEW}\" viewBox=\"0 0 {width} {VIEW}\">\n"
    ));

    for (gi, proj) in [
        ("front", project_front as fn(Vec3) -> (f64, f64)),
        ("back", project_back as fn(Vec3) -> (f64, f64)),
    ]
    .iter()
    .enumerate()
    {
        let (name, proj) = (proj.0, proj.1);
        let vb = ViewBox::fit((0..mesh.vertex_count()).map(|v| proj(mesh.point(v))));
        let dx = gi as f64 * (VIEW + MARGIN);
        s.push_str(&format!(
            "  <g id=\"{name}\" transform=\"translate({dx},0)\">\n"
        ));
        for e in 0..mesh.edge_count() {
            let (a, b) = mesh.edge_endpoints(e);
            let pa = vb.map(proj(mesh.point(a)));
            let pb = vb.map(proj(mesh.point(b)));
            s.push_str(&format!(
                "    <line x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\" \
                 stroke=\"#cccccc\" stroke-width=\"0.5\"/>\n",
                pa.0, pa.1, pb.0, pb.1
            ));
        }
        let class = if gi == 0 { "path" } else { "path-back" };
        let color = if gi == 0 { "#003399" } else { "#993300" };
        for path in paths {
            let pts: Vec<String> = path
                .positions
                .iter()
                .map(|&p| fmt_pt(vb.map(proj(p))))
                .collect();
            s.push_str(&format!(
                "    <polyline class=\"{class}\" points=\"{}\" fill=\"none\" \
                 stroke=\"{color}\" stroke-width=\"1\"/>\n",
                pts.join(" ")
            ));
        }
        s.push_str("  </g>\n");
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::{fixtures::CUBE_OFF, parse_mesh, MeshFormat, SurfacePoint};
    use crate::solver;

    #[test]
    fn cube_svg_has_one_front_polyline_per_path() {
        let mesh = parse_mesh(CUBE_OFF, MeshFormat::Off).unwrap();
        let field = solver::propagate(&mesh, &SurfacePoint::Vertex(0));
        let paths: Vec<_> = (1..mesh.vertex_count())
            .map(|v| solver::extract_path(&mesh, &field, &SurfacePoint::Vertex(v)).unwrap())
            .collect();
        let svg = render_paths_svg(&mesh, &paths);
        assert_eq!(svg.matches("class=\"path\"").count(), paths.len());
        assert_eq!(svg.matches("class=\"path-back\"").count(), paths.len());
        assert_eq!(svg.matches("<g id=").count(), 2);
        assert!(svg.starts_with("<svg "));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn svg_is_deterministic() {
        let mesh = parse_mesh(CUBE_OFF, MeshFormat::Off).unwrap();
        let field = solver::propagate(&mesh, &SurfacePoint::Vertex(0));
        let paths =
            vec![solver::extract_path(&mesh, &field, &SurfacePoint::Vertex(6)).unwrap()];
        assert_eq!(
            render_paths_svg(&mesh, &paths),
            render_paths_svg(&mesh, &paths)
        );
    }
}
