use std::cmp::Ordering;

use crate::exactnum::Scalar;
use crate::geom::Point;

/// Sign of the turn a -> b -> c (Greater = counterclockwise).
pub fn orient<S: Scalar>(a: &Point<S>, b: &Point<S>, c: &Point<S>) -> Ordering {
    b.sub(a).cross(&c.sub(a)).signum()
}

/// True when `p` lies on the closed segment `ab`.
pub fn on_segment<S: Scalar>(p: &Point<S>, a: &Point<S>, b: &Point<S>) -> bool {
    orient(a, b, p) == Ordering::Equal && p.sub(a).dot(&p.sub(b)).signum() != Ordering::Greater
}

/// True when `p` lies on the open segment `ab`.
pub fn in_open_segment<S: Scalar>(p: &Point<S>, a: &Point<S>, b: &Point<S>) -> bool {
    on_segment(p, a, b) && !p.same(a) && !p.same(b)
}

/// Points where the closed segments `ab` and `cd` meet. Collinear overlaps
/// contribute the overlap endpoints.
pub fn segment_contacts<S: Scalar>(
    a: &Point<S>,
    b: &Point<S>,
    c: &Point<S>,
    d: &Point<S>,
) -> Vec<Point<S>> {
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    let mut out = Vec::new();
    if d1 == Ordering::Equal && d2 == Ordering::Equal {
        for p in [a, b] {
            if on_segment(p, c, d) {
                out.push(p.clone());
            }
        }
        for p in [c, d] {
            if on_segment(p, a, b) {
                out.push(p.clone());
            }
        }
        return out;
    }
    if d1 == d2 && d1 != Ordering::Equal {
        return out;
    }
    if d3 == d4 && d3 != Ordering::Equal {
        return out;
    }
    let p = if d1 == Ordering::Equal {
        a.clone()
    } else if d2 == Ordering::Equal {
        b.clone()
    } else if d3 == Ordering::Equal {
        c.clone()
    } else if d4 == Ordering::Equal {
        d.clone()
    } else {
        let r = b.sub(a);
        let s = d.sub(c);
        let t = c.sub(a).cross(&s).div(&r.cross(&s)).expect("non-parallel segments");
        a.add(&r.scale(&t))
    };
    out.push(p);
    out
}

/// Proper crossing of segments `ab` and `cd` at a point interior to both.
pub fn segments_cross<S: Scalar>(a: &Point<S>, b: &Point<S>, c: &Point<S>, d: &Point<S>) -> bool {
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    d1 != Ordering::Equal
        && d2 != Ordering::Equal
        && d3 != Ordering::Equal
        && d4 != Ordering::Equal
        && d1 != d2
        && d3 != d4
}

/// Splits segment `ab` at the given points (assumed to lie on it) and
/// returns the sub-segments of positive length in order from `a`.
pub fn split_segment<S: Scalar>(
    a: &Point<S>,
    b: &Point<S>,
    cuts: &[Point<S>],
) -> Vec<(Point<S>, Point<S>)> {
    let dir = b.sub(a);
    let mut pts: Vec<(S, Point<S>)> = vec![(S::zero(), a.clone()), (dir.norm2(), b.clone())];
    for p in cuts {
        pts.push((p.sub(a).dot(&dir), p.clone()));
    }
    pts.sort_by(|x, y| x.0.cmp_s(&y.0));
    let mut out: Vec<(Point<S>, Point<S>)> = Vec::new();
    let mut prev = pts[0].1.clone();
    for (_, p) in pts.into_iter().skip(1) {
        if !p.same(&prev) {
            out.push((prev.clone(), p.clone()));
            prev = p;
        }
    }
    out
}

/// Orders direction vectors by counterclockwise angle from `reference`,
/// with `reference` itself first.
pub fn cmp_angle_from<S: Scalar>(reference: &Point<S>, u: &Point<S>, v: &Point<S>) -> Ordering {
    let half = |w: &Point<S>| {
        let c = reference.cross(w).signum();
        match c {
            Ordering::Greater => 0,
            Ordering::Equal if reference.dot(w).is_pos() => 0,
            _ => 1,
        }
    };
    let (hu, hv) = (half(u), half(v));
    if hu != hv {
        return hu.cmp(&hv);
    }
    if reference.cross(u).is_zero() && reference.dot(u).is_pos() {
        if reference.cross(v).is_zero() && reference.dot(v).is_pos() {
            return Ordering::Equal;
        }
        return Ordering::Less;
    }
    if reference.cross(v).is_zero() && reference.dot(v).is_pos() {
        return Ordering::Greater;
    }
    u.cross(v).signum().reverse()
}

/// Orders direction vectors by angle measured counterclockwise from +x.
pub fn cmp_angle<S: Scalar>(u: &Point<S>, v: &Point<S>) -> Ordering {
    cmp_angle_from(&Point::new(S::one(), S::zero()), u, v)
}
