//! Static SVG 1.1 drawings of rational configurations.
//!
//! Output is deterministic: coordinates are printed with four decimals and
//! elements appear in insertion order.

use std::fmt::Write as _;

use crate::planes::{AltLine, MoultonLine, Point, SkewLine};
use crate::scalars::Rational;

/// A line in drawing coordinates.
#[derive(Clone, Debug, PartialEq)]
pub enum SvgLine {
    Vertical(f64),
    /// `y = k·x + d`
    Sloped {
        k: f64,
        d: f64,
    },
    /// Moulton bent line: slope `m` below the x-axis, `m/2` above.
    Bent {
        m: f64,
        x0: f64,
    },
    Segment {
        from: (f64, f64),
        to: (f64, f64),
    },
}

impl From<&SkewLine<Rational>> for SvgLine {
    fn from(l: &SkewLine<Rational>) -> Self {
        let (a, b, c) = l.coeffs();
        if b.is_zero() {
            SvgLine::Vertical(-c.to_f64() / a.to_f64())
        } else {
            SvgLine::Sloped { k: -a.to_f64() / b.to_f64(), d: -c.to_f64() / b.to_f64() }
        }
    }
}

impl From<&AltLine<Rational>> for SvgLine {
    fn from(l: &AltLine<Rational>) -> Self {
        match l {
            AltLine::Vertical { b } => SvgLine::Vertical(b.to_f64()),
            AltLine::Sloped { a, b } => SvgLine::Sloped { k: -a.to_f64(), d: b.to_f64() },
        }
    }
}

impl From<&MoultonLine> for SvgLine {
    fn from(l: &MoultonLine) -> Self {
        match l {
            MoultonLine::Vertical { c } => SvgLine::Vertical(c.to_f64()),
            MoultonLine::NonNeg { m, b } => SvgLine::Sloped { k: m.to_f64(), d: b.to_f64() },
            MoultonLine::Bent { m, x0 } => SvgLine::Bent { m: m.to_f64(), x0: x0.to_f64() },
        }
    }
}

#[derive(Clone, Debug)]
struct Bounds {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl SvgLine {
    fn polyline(&self, b: &Bounds) -> Vec<(f64, f64)> {
        match *self {
            SvgLine::Vertical(c) => vec![(c, b.y0), (c, b.y1)],
            SvgLine::Sloped { k, d } => vec![(b.x0, k * b.x0 + d), (b.x1, k * b.x1 + d)],
            SvgLine::Bent { m, x0 } => {
                let y = |x: f64| if x >= x0 { m * (x - x0) } else { m / 2.0 * (x - x0) };
                let mut pts = vec![(b.x0, y(b.x0))];
                if x0 > b.x0 && x0 < b.x1 {
                    pts.push((x0, 0.0));
                }
                pts.push((b.x1, y(b.x1)));
                pts
            }
            SvgLine::Segment { from, to } => vec![from, to],
        }
    }
}

/// Points, labels and lines collected for one drawing.
#[derive(Clone, Debug, Default)]
pub struct SvgScene {
    title: String,
    points: Vec<(f64, f64, String)>,
    lines: Vec<(SvgLine, String)>,
}

impl SvgScene {
    pub fn new(title: impl Into<String>) -> Self {
        SvgScene { title: title.into(), ..Default::default() }
    }

    pub fn point(&mut self, p: &Point<Rational>, label: impl Into<String>) -> &mut Self {
        self.points.push((p.x.to_f64(), p.y.to_f64(), label.into()));
        self
    }

    pub fn line(&mut self, l: impl Into<SvgLine>, stroke: &str) -> &mut Self {
        self.lines.push((l.into(), stroke.to_string()));
        self
    }

    fn bounds(&self) -> Bounds {
        if self.points.is_empty() {
            return Bounds { x0: -1.0, x1: 1.0, y0: -1.0, y1: 1.0 };
        }
        let xs = self.points.iter().map(|p| p.0);
        let ys = self.points.iter().map(|p| p.1);
        let (mut x0, mut x1) = xs.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
        let (mut y0, mut y1) = ys.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
        let pad = 0.15 * (x1 - x0).max(y1 - y0).max(1.0);
        x0 -= pad;
        x1 += pad;
        y0 -= pad;
        y1 += pad;
        Bounds { x0, x1, y0, y1 }
    }

    pub fn render(&self) -> String {
        let b = self.bounds();
        let (w, h) = (b.x1 - b.x0, b.y1 - b.y0);
        let unit = w.max(h) / 100.0;
        let mut out = String::new();
        let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{:.4} {:.4} {:.4} {:.4}" width="600" height="{:.0}">"#,
            b.x0,
            -b.y1,
            w,
            h,
            600.0 * h / w
        );
        let _ = writeln!(out, "<title>{}</title>", escape(&self.title));
        let _ =
            writeln!(out, r#"<rect x="{:.4}" y="{:.4}" width="{w:.4}" height="{h:.4}" fill="white"/>"#, b.x0, -b.y1);
        for (line, stroke) in &self.lines {
            let pts: Vec<String> = line.polyline(&b).iter().map(|(x, y)| format!("{:.4},{:.4}", x, -y)).collect();
            let _ = writeln!(
                out,
                r#"<polyline points="{}" fill="none" stroke="{}" stroke-width="{:.4}"/>"#,
                pts.join(" "),
                escape(stroke),
                unit * 0.4
            );
        }
        for (x, y, label) in &self.points {
            let _ = writeln!(out, r#"<circle cx="{x:.4}" cy="{:.4}" r="{:.4}" fill="black"/>"#, -y, unit);
            if !label.is_empty() {
                let _ = writeln!(
                    out,
                    r#"<text x="{:.4}" y="{:.4}" font-size="{:.4}" font-family="sans-serif">{}</text>"#,
                    x + unit * 1.5,
                    -y - unit * 1.5,
                    unit * 4.0,
                    escape(label)
                );
            }
        }
        out.push_str("</svg>\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}
