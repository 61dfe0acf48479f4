//! Small fixed-size vector and rigid-motion types used throughout the crate.
//!
//! Everything is plain `f64`; robustness comes from scale-relative tolerances
//! chosen by the callers, not from exact arithmetic.

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

pub const fn v2(x: f64, y: f64) -> Vec2 {
    Vec2 { x, y }
}

pub const fn v3(x: f64, y: f64, z: f64) -> Vec3 {
    Vec3 { x, y, z }
}

impl Vec2 {
    pub const ZERO: Vec2 = v2(0.0, 0.0);

    pub fn dot(self, o: Vec2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3D cross product of the two vectors lifted to z=0.
    pub fn cross(self, o: Vec2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn normalized(self) -> Vec2 {
        let n = self.norm();
        v2(self.x / n, self.y / n)
    }

    pub fn perp(self) -> Vec2 {
        v2(-self.y, self.x)
    }

    pub fn dist(self, o: Vec2) -> f64 {
        (self - o).norm()
    }

    pub fn lerp(self, o: Vec2, t: f64) -> Vec2 {
        self + (o - self) * t
    }
}

impl Vec3 {
    pub const ZERO: Vec3 = v3(0.0, 0.0, 0.0);

    pub fn dot(self, o: Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Vec3) -> Vec3 {
        v3(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn normalized(self) -> Vec3 {
        let n = self.norm();
        v3(self.x / n, self.y / n, self.z / n)
    }

    pub fn dist(self, o: Vec3) -> f64 {
        (self - o).norm()
    }

    pub fn lerp(self, o: Vec3, t: f64) -> Vec3 {
        self + (o - self) * t
    }
}

macro_rules! impl_ops {
    ($t:ty, $($f:ident),+) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t { Self { $($f: self.$f + o.$f),+ } }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t { Self { $($f: self.$f - o.$f),+ } }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t { Self { $($f: -self.$f),+ } }
        }
        impl Mul<f64> for $t {
            type Output = $t;
            fn mul(self, s: f64) -> $t { Self { $($f: self.$f * s),+ } }
        }
        impl Div<f64> for $t {
            type Output = $t;
            fn div(self, s: f64) -> $t { Self { $($f: self.$f / s),+ } }
        }
    };
}

impl_ops!(Vec2, x, y);
impl_ops!(Vec3, x, y, z);

/// Orientation-preserving rigid motion of the plane: rotation then translation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rigid2 {
    pub cos: f64,
    pub sin: f64,
    pub t: Vec2,
}

impl Rigid2 {
    pub const IDENTITY: Rigid2 = Rigid2 {
        cos: 1.0,
        sin: 0.0,
        t: Vec2::ZERO,
    };

    pub fn from_angle_translation(angle: f64, t: Vec2) -> Rigid2 {
        Rigid2 {
            cos: angle.cos(),
            sin: angle.sin(),
            t,
        }
    }

    pub fn angle(&self) -> f64 {
        self.sin.atan2(self.cos)
    }

    pub fn apply(&self, p: Vec2) -> Vec2 {
        v2(
            self.cos * p.x - self.sin * p.y + self.t.x,
            self.sin * p.x + self.cos * p.y + self.t.y,
        )
    }

    pub fn rotate(&self, d: Vec2) -> Vec2 {
        v2(self.cos * d.x - self.sin * d.y, self.sin * d.x + self.cos * d.y)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Rigid2) -> Rigid2 {
        Rigid2 {
            cos: self.cos * other.cos - self.sin * other.sin,
            sin: self.sin * other.cos + self.cos * other.sin,
            t: self.apply(other.t),
        }
    }

    pub fn inverse(&self) -> Rigid2 {
        let r = Rigid2 {
            cos: self.cos,
            sin: -self.sin,
            t: Vec2::ZERO,
        };
        Rigid2 {
            t: -r.rotate(self.t),
            ..r
        }
    }

    /// Rigid motion mapping the segment (a0, a1) onto the segment (b0, b1).
    /// The segments must have (approximately) equal length.
    pub fn mapping_segment(a0: Vec2, a1: Vec2, b0: Vec2, b1: Vec2) -> Rigid2 {
        let da = (a1 - a0).normalized();
        let db = (b1 - b0).normalized();
        // rotation taking da to db
        let cos = da.dot(db);
        let sin = da.cross(db);
        let r = Rigid2 { cos, sin, t: Vec2::ZERO };
        Rigid2 {
            t: b0 - r.rotate(a0),
            ..r
        }
    }
}

/// Distance from point `p` to the segment (a, b).
pub fn point_segment_distance(p: Vec2, a: Vec2, b: Vec2) -> f64 {
    let ab = b - a;
    let l2 = ab.norm_sq();
    if l2 == 0.0 {
        return p.dist(a);
    }
    let t = ((p - a).dot(ab) / l2).clamp(0.0, 1.0);
    p.dist(a + ab * t)
}

/// Minimum distance between segments (a0,a1) and (b0,b1).
pub fn segment_segment_distance(a0: Vec2, a1: Vec2, b0: Vec2, b1: Vec2) -> f64 {
    if segments_properly_intersect(a0, a1, b0, b1) {
        return 0.0;
    }
    point_segment_distance(a0, b0, b1)
        .min(point_segment_distance(a1, b0, b1))
        .min(point_segment_distance(b0, a0, a1))
        .min(point_segment_distance(b1, a0, a1))
}

fn segments_properly_intersect(a0: Vec2, a1: Vec2, b0: Vec2, b1: Vec2) -> bool {
    let d1 = (a1 - a0).cross(b0 - a0);
    let d2 = (a1 - a0).cross(b1 - a0);
    let d3 = (b1 - b0).cross(a0 - b0);
    let d4 = (b1 - b0).cross(a1 - b0);
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}

/// Real roots of `a x^2 + b x + c = 0`, ascending. Near-linear cases fall back
/// to the linear root.
pub fn solve_quadratic(a: f64, b: f64, c: f64) -> Vec<f64> {
    let scale = a.abs().max(b.abs()).max(c.abs());
    if scale == 0.0 {
        return vec![];
    }
    if a.abs() < 1e-14 * scale {
        if b.abs() < 1e-14 * scale {
            return vec![];
        }
        return vec![-c / b];
    }
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        return vec![];
    }
    let sq = disc.sqrt();
    // Citardauq for the cancellation-prone root.
    let q = -0.5 * (b + b.signum() * sq);
    let mut roots = vec![q / a];
    if q != 0.0 {
        roots.push(c / q);
    } else {
        roots.push(0.0);
    }
    roots.sort_by(|x, y| x.partial_cmp(y).unwrap());
    roots.dedup_by(|x, y| (*x - *y).abs() < 1e-14 * (1.0 + x.abs()));
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn rigid_compose_inverse() {
        let r = Rigid2::from_angle_translation(0.7, v2(1.0, -2.0));
        let p = v2(3.0, 4.0);
        let back = r.inverse().apply(r.apply(p));
        assert_relative_eq!(back.x, p.x, epsilon = 1e-12);
        assert_relative_eq!(back.y, p.y, epsilon = 1e-12);
    }

    #[test]
    fn segment_mapping() {
        let r = Rigid2::mapping_segment(v2(0.0, 0.0), v2(1.0, 0.0), v2(2.0, 2.0), v2(2.0, 3.0));
        let img = r.apply(v2(1.0, 0.0));
        assert_relative_eq!(img.x, 2.0, epsilon = 1e-12);
        assert_relative_eq!(img.y, 3.0, epsilon = 1e-12);
    }

    #[test]
    fn quadratic_roots() {
        let r = solve_quadratic(1.0, -3.0, 2.0);
        assert_eq!(r.len(), 2);
        assert_relative_eq!(r[0], 1.0, epsilon = 1e-12);
        assert_relative_eq!(r[1], 2.0, epsilon = 1e-12);
        assert_eq!(solve_quadratic(0.0, 2.0, -4.0), vec![2.0]);
        assert!(solve_quadratic(1.0, 0.0, 1.0).is_empty());
    }

    #[test]
    fn seg_seg_distance() {
        assert_relative_eq!(
            segment_segment_distance(v2(0.0, 0.0), v2(1.0, 0.0), v2(0.0, 1.0), v2(1.0, 1.0)),
            1.0
        );
        // crossing segments
        assert_eq!(
            segment_segment_distance(v2(0.0, -1.0), v2(0.0, 1.0), v2(-1.0, 0.0), v2(1.0, 0.0)),
            0.0
        );
    }
}
