//! SVG drawing of 2-dimensional sets.
//!
//! One unit is 40 px and the y-axis points up. Coordinates equal to -inf are
//! drawn in a band along the left (x1 = -inf) or bottom (x2 = -inf) edge.
//! The shaded region comes from membership tests at the centres of a grid and
//! is only a picture.

use std::fmt::Write;

use maxplus_convex::{ConvexSetF64, MaxPlus, MaxPlusF64, VectorF64};

const UNIT: f64 = 40.0;
const BAND: f64 = 40.0;
const MARGIN: f64 = 24.0;
const PAD: f64 = 2.0;

struct Frame {
    xmin: f64,
    xmax: f64,
    ymin: f64,
    ymax: f64,
}

impl Frame {
    fn width(&self) -> f64 {
        (self.xmax - self.xmin) * UNIT
    }

    fn height(&self) -> f64 {
        (self.ymax - self.ymin) * UNIT
    }

    fn px(&self, c: MaxPlusF64) -> f64 {
        match c {
            MaxPlus::NegInf => MARGIN + BAND / 2.0,
            MaxPlus::Finite(v) => MARGIN + BAND + (v - self.xmin) * UNIT,
        }
    }

    fn py(&self, c: MaxPlusF64) -> f64 {
        match c {
            MaxPlus::NegInf => MARGIN + self.height() + BAND / 2.0,
            MaxPlus::Finite(v) => MARGIN + (self.ymax - v) * UNIT,
        }
    }

    fn point(&self, v: &VectorF64) -> (f64, f64) {
        (self.px(v[0]), self.py(v[1]))
    }
}

fn finite_range(values: impl Iterator<Item = MaxPlusF64>) -> (f64, f64) {
    values
        .filter_map(|c| c.value())
        .fold((0.0, 0.0), |(lo, hi): (f64, f64), v| (lo.min(v), hi.max(v)))
}

fn label(v: &VectorF64) -> String {
    format!("({}, {})", v[0], v[1])
}

/// Vertices of the tropical half-line `{base ⊕ λ ⊙ dir}` from `λ = -inf` up
/// to a `λ` large enough to leave the frame.
fn ray_path(base: &VectorF64, dir: &VectorF64, frame: &Frame) -> Vec<VectorF64> {
    let mut breaks: Vec<f64> = (0..2)
        .filter_map(|i| Some(base[i].value()? - dir[i].value()?))
        .collect();
    let reach = [frame.xmax, frame.ymax];
    let end = (0..2)
        .filter_map(|i| Some(reach[i] + PAD - dir[i].value()?))
        .chain(breaks.iter().map(|b| b + 1.0))
        .fold(f64::NEG_INFINITY, f64::max);
    breaks.sort_by(f64::total_cmp);
    breaks.push(end);
    let at = |l: f64| base.oplus(&dir.scale(MaxPlus::Finite(l))).expect("2-dimensional");
    std::iter::once(base.clone()).chain(breaks.into_iter().map(at)).collect()
}

pub fn render_svg(set: &ConvexSetF64, grid: usize) -> Result<String, String> {
    if set.dim() != 2 {
        return Err(format!("render: set has dimension {}, only 2 is supported", set.dim()));
    }
    if grid == 0 {
        return Err("--grid: must be at least 1".into());
    }
    let points = set.points().columns();
    let (x0, x1) = finite_range(points.iter().map(|p| p[0]));
    let (y0, y1) = finite_range(points.iter().map(|p| p[1]));
    let frame = Frame { xmin: x0 - PAD, xmax: x1 + PAD, ymin: y0 - PAD, ymax: y1 + PAD };
    let width = MARGIN * 2.0 + BAND + frame.width();
    let height = MARGIN * 2.0 + BAND + frame.height();
    let (left, top) = (MARGIN + BAND, MARGIN);

    let ext = set.extreme_points();
    let rays = set.recession();

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    );
    let _ = writeln!(
        s,
        r##"<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="8" markerHeight="8" orient="auto"><path d="M 0 0 L 10 5 L 0 10 z" fill="#1f4e99"/></marker><clipPath id="chart"><rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}"/></clipPath></defs>"##,
        MARGIN,
        MARGIN,
        BAND + frame.width(),
        frame.height() + BAND
    );
    let _ = writeln!(s, r##"<rect x="0" y="0" width="{width:.2}" height="{height:.2}" fill="#ffffff"/>"##);

    // -inf bands
    let _ = writeln!(
        s,
        r##"<rect x="{:.2}" y="{top:.2}" width="{BAND:.2}" height="{:.2}" fill="#f3f3f3"/>"##,
        MARGIN,
        frame.height()
    );
    let _ = writeln!(
        s,
        r##"<rect x="{left:.2}" y="{:.2}" width="{:.2}" height="{BAND:.2}" fill="#f3f3f3"/>"##,
        top + frame.height(),
        frame.width()
    );
    let _ = writeln!(
        s,
        r##"<text x="{:.2}" y="{:.2}" font-size="10" text-anchor="middle" fill="#777777">x1=-inf</text>"##,
        MARGIN + BAND / 2.0,
        top + 12.0
    );
    let _ = writeln!(
        s,
        r##"<text x="{:.2}" y="{:.2}" font-size="10" text-anchor="end" fill="#777777">x2=-inf</text>"##,
        left + frame.width() - 4.0,
        top + frame.height() + BAND - 6.0
    );

    // sampled region
    let _ = writeln!(s, r##"<g fill="#cfcfcf" stroke="none">"##);
    let cw = frame.width() / grid as f64;
    let ch = frame.height() / grid as f64;
    for row in 0..grid {
        let yv = frame.ymax - (row as f64 + 0.5) * (frame.ymax - frame.ymin) / grid as f64;
        let mut run: Option<usize> = None;
        for col in 0..=grid {
            let inside = col < grid && {
                let xv = frame.xmin + (col as f64 + 0.5) * (frame.xmax - frame.xmin) / grid as f64;
                set.member(&VectorF64::from_values([xv, yv])).unwrap_or(false)
            };
            match (inside, run) {
                (true, None) => run = Some(col),
                (false, Some(start)) => {
                    let _ = writeln!(
                        s,
                        r#"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}"/>"#,
                        left + start as f64 * cw,
                        top + row as f64 * ch,
                        (col - start) as f64 * cw,
                        ch
                    );
                    run = None;
                }
                _ => {}
            }
        }
    }
    let _ = writeln!(s, "</g>");

    // frame and origin cross
    let _ = writeln!(
        s,
        r##"<rect x="{left:.2}" y="{top:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="#999999"/>"##,
        frame.width(),
        frame.height()
    );
    let (ox, oy) = (frame.px(MaxPlus::Finite(0.0)), frame.py(MaxPlus::Finite(0.0)));
    let _ = writeln!(
        s,
        r##"<path d="M {:.2} {oy:.2} L {:.2} {oy:.2} M {ox:.2} {:.2} L {ox:.2} {:.2}" stroke="#000000" stroke-width="1"/>"##,
        ox - 6.0,
        ox + 6.0,
        oy - 6.0,
        oy + 6.0
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" font-size="12" text-anchor="end">x1</text>"#,
        left + frame.width(),
        top + frame.height() + BAND + 16.0
    );
    let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}" font-size="12">x2</text>"#, MARGIN, MARGIN - 8.0);

    // recession rays from the first extreme point
    if let Some(base) = ext.first() {
        let _ = writeln!(s, r##"<g clip-path="url(#chart)" fill="none" stroke="#1f4e99" stroke-width="2">"##);
        for r in rays.generators().columns() {
            let path: Vec<String> = ray_path(base, r, &frame)
                .iter()
                .map(|v| {
                    let (x, y) = frame.point(v);
                    format!("{x:.2},{y:.2}")
                })
                .collect();
            let _ = writeln!(s, r#"<polyline points="{}" marker-end="url(#arrow)"/>"#, path.join(" "));
        }
        let _ = writeln!(s, "</g>");
    }

    // input points, then extreme points on top
    let _ = writeln!(s, r##"<g fill="#555555">"##);
    for p in points {
        let (x, y) = frame.point(p);
        let _ = writeln!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="3"/>"#);
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r##"<g fill="#c0392b" font-size="11">"##);
    for p in &ext {
        let (x, y) = frame.point(p);
        let _ = writeln!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="5"/>"#);
        let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}">{}</text>"#, x + 7.0, y - 7.0, label(p));
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, "</svg>");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ray_path_bends_at_breakpoints() {
        let frame = Frame { xmin: -2.0, xmax: 7.0, ymin: -2.0, ymax: 7.0 };
        let base = VectorF64::from_values([1.0, 3.0]);
        let dir = VectorF64::from_values([2.0, 0.0]);
        let path = ray_path(&base, &dir, &frame);
        // moves right along x2 = 3 until λ = 3, then diagonally
        assert_eq!(path[0], base);
        assert_eq!(path[1], VectorF64::from_values([1.0, 3.0]));
        assert_eq!(path[2], VectorF64::from_values([5.0, 3.0]));
        let last = path.last().unwrap();
        assert!(last[0].value().unwrap() >= frame.xmax);
    }

    #[test]
    fn neg_inf_goes_to_the_band() {
        let frame = Frame { xmin: 0.0, xmax: 1.0, ymin: 0.0, ymax: 1.0 };
        assert!(frame.px(MaxPlus::NegInf) < frame.px(MaxPlus::Finite(0.0)));
        assert!(frame.py(MaxPlus::NegInf) > frame.py(MaxPlus::Finite(0.0)));
    }
}
