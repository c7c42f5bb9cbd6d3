//! Static SVG of `q = zf'/f` image curves against the target region.

use std::fmt::Write;

use starlike_core::Complex64;

pub const CANVAS: f64 = 800.0;

const CURVE_COLORS: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];
/// Below this extent (in pixels) a curve is drawn as a dot.
const DEGENERATE_PX: f64 = 0.5;

/// Visible rectangle of the complex plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct View {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
}

impl Default for View {
    fn default() -> Self {
        Self {
            xmin: -0.5,
            xmax: 2.5,
            ymin: -1.5,
            ymax: 1.5,
        }
    }
}

impl View {
    pub fn from_slice(v: &[f64]) -> Result<Self, String> {
        let [xmin, xmax, ymin, ymax] = v else {
            return Err(format!(
                "--view needs xmin,xmax,ymin,ymax, got {} values",
                v.len()
            ));
        };
        if !(xmin < xmax && ymin < ymax) || v.iter().any(|x| !x.is_finite()) {
            return Err(format!(
                "--view needs finite xmin < xmax and ymin < ymax, got {v:?}"
            ));
        }
        Ok(Self {
            xmin: *xmin,
            xmax: *xmax,
            ymin: *ymin,
            ymax: *ymax,
        })
    }

    pub fn to_px(&self, z: Complex64) -> (f64, f64) {
        (
            (z.re - self.xmin) / (self.xmax - self.xmin) * CANVAS,
            (self.ymax - z.im) / (self.ymax - self.ymin) * CANVAS,
        )
    }

    fn scale_x(&self) -> f64 {
        CANVAS / (self.xmax - self.xmin)
    }

    fn scale_y(&self) -> f64 {
        CANVAS / (self.ymax - self.ymin)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Target {
    /// Circle with the given center on the real axis and radius.
    Disk { center: f64, radius: f64 },
    /// Vertical line `Re q = x`; the admissible side is to its right.
    HalfPlane { x: f64 },
}

pub struct Curve {
    pub label: String,
    pub points: Vec<Complex64>,
}

pub struct Plot {
    pub title: String,
    pub view: View,
    pub target: Target,
    pub target_label: String,
    pub curves: Vec<Curve>,
}

fn px(v: f64) -> String {
    // Fixed precision keeps the bytes stable and the file small.
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

impl Plot {
    pub fn render(&self) -> String {
        let v = &self.view;
        let mut out = String::new();
        let w = &mut out;
        let _ = writeln!(
            w,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" viewBox="0 0 800 800">"#
        );
        let _ = writeln!(w, "<title>{}</title>", escape(&self.title));
        let _ = writeln!(
            w,
            r##"<rect x="0" y="0" width="800" height="800" fill="#ffffff"/>"##
        );

        let (ox, oy) = v.to_px(Complex64::new(0.0, 0.0));
        let _ = writeln!(w, r##"<g stroke="#888888" stroke-width="1">"##);
        if (0.0..=CANVAS).contains(&oy) {
            let _ = writeln!(w, r#"<line x1="0" y1="{0}" x2="800" y2="{0}"/>"#, px(oy));
        }
        if (0.0..=CANVAS).contains(&ox) {
            let _ = writeln!(w, r#"<line x1="{0}" y1="0" x2="{0}" y2="800"/>"#, px(ox));
        }
        let _ = writeln!(w, "</g>");

        match self.target {
            Target::Disk { center, radius } => {
                let (cx, cy) = v.to_px(Complex64::new(center, 0.0));
                let _ = writeln!(
                    w,
                    r##"<ellipse class="target" cx="{}" cy="{}" rx="{}" ry="{}" fill="none" stroke="#000000" stroke-width="1.5" stroke-dasharray="6 4"/>"##,
                    px(cx),
                    px(cy),
                    px(radius * v.scale_x()),
                    px(radius * v.scale_y())
                );
            }
            Target::HalfPlane { x } => {
                let (lx, _) = v.to_px(Complex64::new(x, 0.0));
                let _ = writeln!(
                    w,
                    r##"<line class="target" x1="{0}" y1="0" x2="{0}" y2="800" stroke="#000000" stroke-width="1.5" stroke-dasharray="6 4"/>"##,
                    px(lx)
                );
            }
        }

        for (i, curve) in self.curves.iter().enumerate() {
            let color = CURVE_COLORS[i % CURVE_COLORS.len()];
            let pts: Vec<(f64, f64)> = curve.points.iter().map(|&q| v.to_px(q)).collect();
            let extent = pts
                .iter()
                .map(|&(x, y)| (x - pts[0].0).abs().max((y - pts[0].1).abs()))
                .fold(0.0, f64::max);
            if extent < DEGENERATE_PX {
                let _ = writeln!(
                    w,
                    r#"<circle class="curve" cx="{}" cy="{}" r="3" fill="{color}"/>"#,
                    px(pts[0].0),
                    px(pts[0].1)
                );
                continue;
            }
            let mut points = String::new();
            for (j, (x, y)) in pts.iter().enumerate() {
                if j > 0 {
                    points.push(' ');
                }
                let _ = write!(points, "{},{}", px(*x), px(*y));
            }
            let _ = writeln!(
                w,
                r#"<polygon class="curve" fill="none" stroke="{color}" stroke-width="1.5" points="{points}"/>"#
            );
        }

        let _ = writeln!(
            w,
            r##"<g font-family="sans-serif" font-size="14" fill="#000000">"##
        );
        let mut y = 24.0;
        let _ = writeln!(
            w,
            r##"<line x1="16" y1="{0}" x2="40" y2="{0}" stroke="#000000" stroke-width="1.5" stroke-dasharray="6 4"/><text x="48" y="{1}">{2}</text>"##,
            px(y - 5.0),
            px(y),
            escape(&self.target_label)
        );
        for (i, curve) in self.curves.iter().enumerate() {
            y += 20.0;
            let color = CURVE_COLORS[i % CURVE_COLORS.len()];
            let _ = writeln!(
                w,
                r#"<line x1="16" y1="{0}" x2="40" y2="{0}" stroke="{color}" stroke-width="3"/><text x="48" y="{1}">{2}</text>"#,
                px(y - 5.0),
                px(y),
                escape(&curve.label)
            );
        }
        let _ = writeln!(w, "</g>");
        let _ = writeln!(w, "</svg>");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_view_maps_corners() {
        let v = View::default();
        assert_eq!(v.to_px(Complex64::new(-0.5, 1.5)), (0.0, 0.0));
        assert_eq!(v.to_px(Complex64::new(2.5, -1.5)), (800.0, 800.0));
        assert_eq!(v.to_px(Complex64::new(1.0, 0.0)), (400.0, 400.0));
    }

    #[test]
    fn view_rejects_bad_rectangles() {
        assert!(View::from_slice(&[0.0, 1.0, 0.0]).is_err());
        assert!(View::from_slice(&[1.0, 0.0, -1.0, 1.0]).is_err());
        assert!(View::from_slice(&[0.0, f64::INFINITY, -1.0, 1.0]).is_err());
    }

    #[test]
    fn constant_curve_becomes_dot() {
        let plot = Plot {
            title: "t".into(),
            view: View::default(),
            target: Target::HalfPlane { x: 0.0 },
            target_label: "Re q = 0".into(),
            curves: vec![Curve {
                label: "r = 0.5".into(),
                points: vec![Complex64::new(1.0, 0.0); 16],
            }],
        };
        let svg = plot.render();
        assert!(svg.contains(r#"<circle class="curve" cx="400.000" cy="400.000""#));
        assert!(!svg.contains("<polygon"));
    }
}
