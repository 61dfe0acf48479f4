//! Versioned JSON run statistics shared by every CLI command.

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

/// One run's counters and distances. `wall_ms` is the only field excluded
/// from determinism comparisons; everything else must be byte-stable for a
/// fixed mesh, flags, and seed.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct RunStats {
    pub schema: u32,
    pub mesh: String,
    pub n: usize,
    pub algorithm: String,
    pub wall_ms: f64,
    pub vertex_distances: Vec<f64>,
    pub crossings: usize,
    pub e1_events: usize,
    pub e2_events: usize,
    pub e3_events: usize,
    pub e4_events: usize,
    pub hull_queries: usize,
    pub hull_node_visits: usize,
    pub oracle_deltas: Vec<f64>,
}

impl RunStats {
    pub fn new(mesh: impl Into<String>, n: usize, algorithm: impl Into<String>) -> Self {
        RunStats {
            schema: SCHEMA_VERSION,
            mesh: mesh.into(),
            n,
            algorithm: algorithm.into(),
            ..Default::default()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("stats serialize")
    }
}

/// Canonical form for determinism comparisons: parse and zero out wall-time
/// fields, then re-serialize.
pub fn comparable_json(json: &str) -> Result<String, serde_json::Error> {
    let mut v: serde_json::Value = serde_json::from_str(json)?;
    zero_wall_time(&mut v);
    serde_json::to_string_pretty(&v)
}

fn zero_wall_time(v: &mut serde_json::Value) {
    match v {
        serde_json::Value::Object(map) => {
            for (k, val) in map.iter_mut() {
                if k == "wall_ms" {
                    *val = serde_json::Value::from(0.0);
                } else {
                    zero_wall_time(val);
                }
            }
        }
        serde_json::Value::Array(items) => {
            for item in items {
                zero_wall_time(item);
            }
        }
        _ => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wall_time_excluded_from_comparison() {
        let mut a = RunStats::new("cube", 8, "exact");
        let mut b = a.clone();
        a.wall_ms = 1.25;
        b.wall_ms = 900.0;
        assert_ne!(a.to_json(), b.to_json());
        assert_eq!(
            comparable_json(&a.to_json()).unwrap(),
            comparable_json(&b.to_json()).unwrap()
        );
    }

    #[test]
    fn roundtrips_through_json() {
        let mut s = RunStats::new("strip", 16, "wavefront");
        s.vertex_distances = vec![0.0, 1.0, 2.5];
        s.crossings = 7;
        s.e1_events = 3;
        let back: RunStats = serde_json::from_str(&s.to_json()).unwrap();
        assert_eq!(back.schema, SCHEMA_VERSION);
        assert_eq!(back.vertex_distances, s.vertex_distances);
        assert_eq!(back.crossings, 7);
    }
}
