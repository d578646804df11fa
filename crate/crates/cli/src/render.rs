//! SVG drawing of a list as a lattice path.
//!
//! Step `q` runs from the current vertex by `|x_q|` horizontally and `x_q`
//! vertically, so every segment has slope ±1. Coordinates inside the drawing
//! group are lattice coordinates times `scale`; a flip transform puts the
//! path upright.

use std::fmt::Write as _;

use gdp_core::{normalize_positions, Error, Result, SignedList};

const PART_COLOR: &str = "#1f5fbf";
const REST_COLOR: &str = "#9a9a9a";
const PLAIN_COLOR: &str = "#202020";
const AXIS_COLOR: &str = "#000000";

#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    /// Pixels per lattice unit.
    pub scale: f64,
    /// Positions drawn in the part color; the rest in the complement color.
    pub highlight: Option<Vec<usize>>,
    pub axis: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            scale: 10.0,
            highlight: None,
            axis: false,
        }
    }
}

/// Lattice vertices of the path, starting at the origin.
pub fn path_vertices(xs: &SignedList) -> Vec<(i64, i64)> {
    let mut v = Vec::with_capacity(xs.len() + 1);
    let (mut x, mut y) = (0i64, 0i64);
    v.push((x, y));
    for &e in xs.entries() {
        x += e.abs();
        y += e;
        v.push((x, y));
    }
    v
}

pub fn render_svg(xs: &SignedList, spec: &RenderSpec) -> Result<String> {
    if !(spec.scale.is_finite() && spec.scale > 0.0) {
        return Err(Error::Precondition(format!(
            "scale must be positive, got {}",
            spec.scale
        )));
    }
    let highlight = match &spec.highlight {
        Some(h) => {
            let mut marked = vec![false; xs.len()];
            for p in normalize_positions(h, xs.len())? {
                marked[p - 1] = true;
            }
            Some(marked)
        }
        None => None,
    };

    let s = spec.scale;
    let vertices = path_vertices(xs);
    let end = vertices.last().map_or(0, |v| v.0);
    let peak = vertices.iter().map(|v| v.1).max().unwrap_or(0);
    let floor = vertices.iter().map(|v| v.1).min().unwrap_or(0);
    let margin = s.max(4.0);
    let width = end as f64 * s + 2.0 * margin;
    let height = (peak - floor) as f64 * s + 2.0 * margin;

    let mut out = String::new();
    // Writing into a String cannot fail.
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = num(width),
        h = num(height),
    );
    let _ = writeln!(
        out,
        r#"  <g transform="translate({} {}) scale(1 -1)" fill="none" stroke-width="2" stroke-linecap="round">"#,
        num(margin),
        num(margin + peak as f64 * s),
    );
    if spec.axis {
        let _ = writeln!(
            out,
            r#"    <polyline class="axis" points="0,{} 0,0 {},0" stroke="{AXIS_COLOR}" stroke-width="1" vector-effect="non-scaling-stroke"/>"#,
            num(peak as f64 * s),
            num(end as f64 * s),
        );
        if floor < 0 {
            let _ = writeln!(
                out,
                r#"    <line class="axis" x1="0" y1="0" x2="0" y2="{}" stroke="{AXIS_COLOR}" stroke-width="1" vector-effect="non-scaling-stroke"/>"#,
                num(floor as f64 * s),
            );
        }
    }
    for (q, pair) in vertices.windows(2).enumerate() {
        let ((x1, y1), (x2, y2)) = (pair[0], pair[1]);
        let (class, color) = match &highlight {
            Some(marked) if marked[q] => ("part", PART_COLOR),
            Some(_) => ("rest", REST_COLOR),
            None => ("step", PLAIN_COLOR),
        };
        let _ = writeln!(
            out,
            r#"    <line class="{class}" data-step="{}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{color}" vector-effect="non-scaling-stroke"/>"#,
            q + 1,
            num(x1 as f64 * s),
            num(y1 as f64 * s),
            num(x2 as f64 * s),
            num(y2 as f64 * s),
        );
    }
    out.push_str("  </g>\n</svg>\n");
    Ok(out)
}

/// Integers without a trailing `.0`.
fn num(v: f64) -> String {
    if v.fract() == 0.0 && v.abs() < 1e15 {
        format!("{}", v as i64)
    } else {
        format!("{v}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn list(v: &[i64]) -> SignedList {
        SignedList::new(v.to_vec()).unwrap()
    }

    #[test]
    fn vertices_follow_the_slope_convention() {
        assert_eq!(path_vertices(&list(&[1, -1])), vec![(0, 0), (1, 1), (2, 0)]);
        assert_eq!(
            path_vertices(&list(&[2, -1, -1])),
            vec![(0, 0), (2, 2), (3, 1), (4, 0)]
        );
        assert_eq!(path_vertices(&list(&[])), vec![(0, 0)]);
    }

    #[test]
    fn highlight_colors_and_validation() {
        let xs = list(&[1, -1, 1, -1]);
        let svg = render_svg(
            &xs,
            &RenderSpec {
                scale: 1.0,
                highlight: Some(vec![1, 2]),
                axis: true,
            },
        )
        .unwrap();
        assert_eq!(svg.matches(r#"class="part""#).count(), 2);
        assert_eq!(svg.matches(r#"class="rest""#).count(), 2);
        assert!(svg.contains(r#"points="0,1 0,0 4,0""#));

        let bad = RenderSpec {
            highlight: Some(vec![5]),
            ..RenderSpec::default()
        };
        assert!(render_svg(&xs, &bad).is_err());
        let bad = RenderSpec {
            scale: 0.0,
            ..RenderSpec::default()
        };
        assert!(render_svg(&xs, &bad).is_err());
    }

    #[test]
    fn scaled_coordinates() {
        let svg = render_svg(
            &list(&[2, -1, -1]),
            &RenderSpec {
                scale: 2.5,
                ..RenderSpec::default()
            },
        )
        .unwrap();
        assert!(svg.contains(r#"x1="0" y1="0" x2="5" y2="5""#));
        assert!(svg.contains(r#"x1="7.5" y1="2.5" x2="10" y2="0""#));
    }
}
