//! Standalone SVG line plots; α-bands are drawn as gray polylines running
//! from light (α = 0) to black (α = 1).

use std::fmt::Write as _;

use rfa_core::dynamics::{PhasePortrait, Projection};
use rfa_core::Traj;

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 480.0;
const MARGIN: (f64, f64, f64, f64) = (70.0, 20.0, 40.0, 50.0); // left, right, top, bottom
const SERIES_COLORS: [&str; 4] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LineKind {
    /// Lower or upper edge of one α-level.
    Band,
    /// Real part of the fuzzy coordinate.
    Crisp,
    /// A plain real-valued series.
    Series,
}

impl LineKind {
    fn class(self) -> &'static str {
        match self {
            Self::Band => "band",
            Self::Crisp => "crisp",
            Self::Series => "series",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Line {
    pub kind: LineKind,
    pub label: String,
    pub stroke: String,
    pub points: Vec<(f64, f64)>,
}

#[derive(Clone, Debug, Default)]
pub struct Plot {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub lines: Vec<Line>,
}

/// `#dcdcdc` at α = 0 down to `#000000` at α = 1.
pub fn gray(alpha: f64) -> String {
    let v = (220.0 * (1.0 - alpha.clamp(0.0, 1.0))).round() as u8;
    format!("#{v:02x}{v:02x}{v:02x}")
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Roughly five round tick positions covering `[lo, hi]`.
fn ticks(lo: f64, hi: f64) -> Vec<f64> {
    let span = hi - lo;
    let raw = span / 5.0;
    let mag = 10f64.powf(raw.log10().floor());
    let step = [1.0, 2.0, 5.0, 10.0]
        .iter()
        .map(|m| m * mag)
        .find(|s| span / s <= 6.0)
        .unwrap_or(10.0 * mag);
    let first = (lo / step).ceil() as i64;
    let last = (hi / step).floor() as i64;
    (first..=last).map(|k| k as f64 * step).collect()
}

impl Plot {
    fn bounds(&self) -> ((f64, f64), (f64, f64)) {
        let pts = self
            .lines
            .iter()
            .flat_map(|l| &l.points)
            .filter(|(x, y)| x.is_finite() && y.is_finite());
        let (mut x0, mut x1, mut y0, mut y1) = (
            f64::INFINITY,
            f64::NEG_INFINITY,
            f64::INFINITY,
            f64::NEG_INFINITY,
        );
        for &(x, y) in pts {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        let widen = |lo: f64, hi: f64| {
            if !lo.is_finite() {
                (0.0, 1.0)
            } else if hi - lo <= f64::EPSILON * lo.abs().max(1.0) {
                (lo - 0.5, hi + 0.5)
            } else {
                let pad = 0.03 * (hi - lo);
                (lo - pad, hi + pad)
            }
        };
        (widen(x0, x1), widen(y0, y1))
    }

    pub fn render(&self) -> String {
        let ((x0, x1), (y0, y1)) = self.bounds();
        let (ml, mr, mt, mb) = MARGIN;
        let (pw, ph) = (WIDTH - ml - mr, HEIGHT - mt - mb);
        let sx = |x: f64| ml + (x - x0) / (x1 - x0) * pw;
        let sy = |y: f64| mt + ph - (y - y0) / (y1 - y0) * ph;

        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
        );
        let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
        let _ = writeln!(
            s,
            r#"<text x="{}" y="24" text-anchor="middle" font-size="14">{}</text>"#,
            WIDTH / 2.0,
            escape(&self.title)
        );
        let _ = writeln!(
            s,
            r##"<rect x="{ml}" y="{mt}" width="{pw}" height="{ph}" fill="none" stroke="#444"/>"##
        );
        for t in ticks(x0, x1) {
            let x = sx(t);
            let _ = writeln!(
                s,
                r##"<line x1="{x:.2}" y1="{:.2}" x2="{x:.2}" y2="{:.2}" stroke="#444"/><text x="{x:.2}" y="{:.2}" text-anchor="middle">{}</text>"##,
                mt + ph,
                mt + ph + 5.0,
                mt + ph + 18.0,
                format_tick(t)
            );
        }
        for t in ticks(y0, y1) {
            let y = sy(t);
            let _ = writeln!(
                s,
                r##"<line x1="{:.2}" y1="{y:.2}" x2="{ml}" y2="{y:.2}" stroke="#444"/><text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"##,
                ml - 5.0,
                ml - 8.0,
                y + 4.0,
                format_tick(t)
            );
        }
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            ml + pw / 2.0,
            HEIGHT - 10.0,
            escape(&self.x_label)
        );
        let _ = writeln!(
            s,
            r#"<text transform="translate(16 {:.2}) rotate(-90)" text-anchor="middle">{}</text>"#,
            mt + ph / 2.0,
            escape(&self.y_label)
        );
        for line in &self.lines {
            let pts: Vec<String> = line
                .points
                .iter()
                .filter(|(x, y)| x.is_finite() && y.is_finite())
                .map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y)))
                .collect();
            let width = if line.kind == LineKind::Crisp {
                1.5
            } else {
                1.0
            };
            let dash = if line.kind == LineKind::Crisp {
                r#" stroke-dasharray="4 3""#
            } else {
                ""
            };
            let _ = writeln!(
                s,
                r#"<polyline class="{}" fill="none" stroke="{}" stroke-width="{width}"{dash} points="{}"><title>{}</title></polyline>"#,
                line.kind.class(),
                line.stroke,
                pts.join(" "),
                escape(&line.label)
            );
        }
        s.push_str("</svg>\n");
        s
    }
}

fn format_tick(v: f64) -> String {
    if v == 0.0 {
        "0".into()
    } else if v.abs() >= 1e5 || v.abs() < 1e-3 {
        format!("{v:.1e}")
    } else {
        let s = format!("{v:.4}");
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    }
}

/// α-bands of variable `var` against time, plus its real part.
pub fn bands_plot(traj: &Traj, var: usize, title: &str) -> Plot {
    let name = &traj.names()[var];
    let mut lines = Vec::new();
    if let Some(set) = traj.bands() {
        for (i, &alpha) in set.alphas.iter().enumerate() {
            for upper in [false, true] {
                let points = traj
                    .times()
                    .iter()
                    .zip(&set.bands)
                    .map(|(&t, step)| {
                        let b = &step[var][i];
                        (t, if upper { b.upper } else { b.lower })
                    })
                    .collect();
                lines.push(Line {
                    kind: LineKind::Band,
                    label: format!("{name} α={alpha} {}", if upper { "upper" } else { "lower" }),
                    stroke: gray(alpha),
                    points,
                });
            }
        }
    }
    lines.push(Line {
        kind: LineKind::Crisp,
        label: format!("Re {name}"),
        stroke: "#d62728".into(),
        points: traj
            .times()
            .iter()
            .zip(traj.series(var))
            .map(|(&t, z)| (t, z.re))
            .collect(),
    });
    Plot {
        title: title.into(),
        x_label: "t".into(),
        y_label: name.clone(),
        lines,
    }
}

/// Real and fuzzy coefficients of every variable against time (`r, p, s, q`
/// for a pair `x = r + pA`, `y = s + qA`).
pub fn components_plot(traj: &Traj, title: &str) -> Plot {
    let labels: Vec<(String, String)> = if traj.names().len() == 2 {
        vec![("r".into(), "p".into()), ("s".into(), "q".into())]
    } else {
        traj.names()
            .iter()
            .map(|n| (format!("Re {n}"), format!("Fu {n}")))
            .collect()
    };
    let mut lines = Vec::new();
    for (v, (re_label, fu_label)) in labels.into_iter().enumerate() {
        for (fuzzy, label) in [(false, re_label), (true, fu_label)] {
            let stroke = SERIES_COLORS[lines.len() % SERIES_COLORS.len()].to_string();
            lines.push(Line {
                kind: LineKind::Series,
                label,
                stroke,
                points: traj
                    .times()
                    .iter()
                    .zip(traj.series(v))
                    .map(|(&t, z)| (t, if fuzzy { z.fu } else { z.re }))
                    .collect(),
            });
        }
    }
    Plot {
        title: title.into(),
        x_label: "t".into(),
        y_label: "coefficient".into(),
        lines,
    }
}

/// Fuzzy coordinate drawn as α-band edges against the crisp one.
pub fn phase_plot(portrait: &PhasePortrait<f64>, names: (&str, &str), title: &str) -> Plot {
    let (fuzzy, crisp, fuzzy_on_x) = match portrait.projection {
        Projection::XVsS => (names.0, "s", true),
        Projection::RVsY => (names.1, "r", false),
    };
    let orient = |f: f64, c: f64| if fuzzy_on_x { (f, c) } else { (c, f) };
    let mut lines = Vec::new();
    for (i, &alpha) in portrait.alphas.iter().enumerate() {
        for upper in [false, true] {
            lines.push(Line {
                kind: LineKind::Band,
                label: format!(
                    "{fuzzy} α={alpha} {}",
                    if upper { "upper" } else { "lower" }
                ),
                stroke: gray(alpha),
                points: portrait
                    .points
                    .iter()
                    .map(|p| {
                        let b = &p.bands[i];
                        orient(if upper { b.upper } else { b.lower }, p.crisp)
                    })
                    .collect(),
            });
        }
    }
    lines.push(Line {
        kind: LineKind::Crisp,
        label: format!("Re {fuzzy}"),
        stroke: "#d62728".into(),
        points: portrait
            .points
            .iter()
            .map(|p| orient(p.fuzzy.re, p.crisp))
            .collect(),
    });
    let (x_label, y_label) = if fuzzy_on_x {
        (fuzzy.to_string(), crisp.to_string())
    } else {
        (crisp.to_string(), fuzzy.to_string())
    };
    Plot {
        title: title.into(),
        x_label,
        y_label,
        lines,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rfa_core::{Basis, Lc};

    fn count(svg: &str, class: &str) -> usize {
        svg.matches(&format!(r#"<polyline class="{class}""#))
            .count()
    }

    #[test]
    fn gray_runs_light_to_black() {
        assert_eq!(gray(0.0), "#dcdcdc");
        assert_eq!(gray(1.0), "#000000");
    }

    #[test]
    fn ticks_are_round() {
        assert_eq!(ticks(0.0, 10.0), vec![0.0, 2.0, 4.0, 6.0, 8.0, 10.0]);
        assert!(ticks(-0.013, 0.021).len() >= 3);
    }

    #[test]
    fn one_polyline_per_band_edge() {
        let states = (0..5).map(|k| vec![Lc::new(k as f64, 1.0)]).collect();
        let mut tr = Traj::new(vec!["w".into()], (0..5).map(f64::from).collect(), states).unwrap();
        let alphas: Vec<f64> = (0..=10).map(|k| k as f64 / 10.0).collect();
        tr.attach_bands(&Basis::triangular(-0.5, 0.0, 0.51).unwrap(), &alphas)
            .unwrap();
        let svg = bands_plot(&tr, 0, "w <test> & more").render();
        assert_eq!(count(&svg, "band"), 22);
        assert_eq!(count(&svg, "crisp"), 1);
        assert!(svg.contains("&lt;test&gt; &amp; more"));
        assert!(!svg.contains("href"));
    }

    #[test]
    fn constant_series_renders() {
        let tr = Traj::new(
            vec!["w".into()],
            vec![0.0, 1.0],
            vec![vec![Lc::real(2.0)]; 2],
        )
        .unwrap();
        let svg = components_plot(&tr, "flat").render();
        assert_eq!(count(&svg, "series"), 2);
        assert!(!svg.contains("NaN"));
    }
}
