//! SVG overlay of an instance: polygon, points, geodesic hull and, when a
//! solution is given, the two centers with their disk boundaries.

use std::fmt::Write;

use anyhow::Result;
use geodesic_two_center::disk::disks_intersection;
use geodesic_two_center::hull::geodesic_hull;
use geodesic_two_center::{Point2, TriangulatedPolygon};

use crate::io::SolutionRecord;

const DISK_SAMPLES: usize = 512;

fn path(pts: &[Point2], close: bool) -> String {
    let mut d = String::new();
    for (k, p) in pts.iter().enumerate() {
        let _ = write!(d, "{}{:.6},{:.6} ", if k == 0 { "M" } else { "L" }, p.x, p.y);
    }
    if close {
        d.push('Z');
    }
    d
}

pub fn render(tp: &TriangulatedPolygon, points: &[Point2], solution: Option<&SolutionRecord>) -> Result<String> {
    let poly = tp.polygon().vertices();
    let (mut lo, mut hi) = (poly[0], poly[0]);
    for p in poly.iter().chain(points) {
        lo = Point2::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point2::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    let margin = 0.05 * (hi.x - lo.x).max(hi.y - lo.y);
    let (w, h) = (hi.x - lo.x + 2.0 * margin, hi.y - lo.y + 2.0 * margin);
    let unit = w.max(h) / 400.0;

    let mut s = String::new();
    writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#)?;
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{:.6} {:.6} {:.6} {:.6}" width="800" height="{:.0}">"#,
        lo.x - margin,
        lo.y - margin,
        w,
        h,
        800.0 * h / w
    )?;
    // Flip y so the picture matches the usual math orientation.
    writeln!(s, r#"<g transform="translate(0 {:.6}) scale(1 -1)">"#, 2.0 * lo.y - 2.0 * margin + h)?;
    writeln!(
        s,
        r##"<path class="polygon" d="{}" fill="#f4f4f4" stroke="#222" stroke-width="{:.6}"/>"##,
        path(poly, true),
        unit
    )?;
    if !points.is_empty() {
        let hull = geodesic_hull(tp, points)?;
        writeln!(
            s,
            r##"<path class="hull" d="{}" fill="none" stroke="#3a7" stroke-width="{:.6}" stroke-dasharray="{:.6}"/>"##,
            path(hull.cycle(), true),
            unit,
            4.0 * unit
        )?;
    }
    if let Some(sol) = solution {
        let (c1, c2) = sol.center_points();
        for (k, (c, color)) in [(c1, "#c33"), (c2, "#33c")].into_iter().enumerate() {
            if let Some(b) = disks_intersection(tp, &[c], sol.radius)? {
                if b.length() > 0.0 {
                    writeln!(
                        s,
                        r#"<path class="disk disk{}" d="{}" fill="{color}" fill-opacity="0.12" stroke="{color}" stroke-width="{:.6}"/>"#,
                        k + 1,
                        path(&b.sample(DISK_SAMPLES), true),
                        unit
                    )?;
                }
            }
            writeln!(
                s,
                r#"<circle class="center center{}" cx="{:.6}" cy="{:.6}" r="{:.6}" fill="{color}"/>"#,
                k + 1,
                c.x,
                c.y,
                3.0 * unit
            )?;
        }
    }
    for p in points {
        writeln!(s, r##"<circle class="point" cx="{:.6}" cy="{:.6}" r="{:.6}" fill="#000"/>"##, p.x, p.y, 1.5 * unit)?;
    }
    writeln!(s, "</g>\n</svg>")?;
    Ok(s)
}
