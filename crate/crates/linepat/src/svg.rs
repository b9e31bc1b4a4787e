//! SVG figures: arrangement lines clipped to a view box, bounded faces
//! filled by side count.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use linepat_core::rational::{int, ratio, to_fixed};
use linepat_core::{CoeffPoint, EuclidPoint, Rational, Subdivision};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViewBox {
    pub xmin: Rational,
    pub ymin: Rational,
    pub xmax: Rational,
    pub ymax: Rational,
}

impl ViewBox {
    pub fn new(xmin: Rational, ymin: Rational, xmax: Rational, ymax: Rational) -> Result<Self, String> {
        if xmax <= xmin || ymax <= ymin {
            return Err("view box needs xmax > xmin and ymax > ymin".into());
        }
        Ok(ViewBox { xmin, ymin, xmax, ymax })
    }

    /// Bounding box of `points` padded by 10% on each side. Degenerate
    /// extents are widened to one unit first.
    pub fn around(points: &[EuclidPoint]) -> Self {
        let Some(first) = points.first() else {
            return ViewBox { xmin: int(-1), ymin: int(-1), xmax: int(1), ymax: int(1) };
        };
        let (mut xmin, mut xmax) = (first.x.clone(), first.x.clone());
        let (mut ymin, mut ymax) = (first.y.clone(), first.y.clone());
        for p in points {
            xmin = xmin.min(p.x.clone());
            xmax = xmax.max(p.x.clone());
            ymin = ymin.min(p.y.clone());
            ymax = ymax.max(p.y.clone());
        }
        let widen = |lo: &mut Rational, hi: &mut Rational| {
            if lo == hi {
                *lo -= ratio(1, 2);
                *hi += ratio(1, 2);
            }
            let pad = (&*hi - &*lo) * ratio(1, 10);
            *lo -= &pad;
            *hi += pad;
        };
        widen(&mut xmin, &mut xmax);
        widen(&mut ymin, &mut ymax);
        ViewBox { xmin, ymin, xmax, ymax }
    }

    fn contains(&self, p: &EuclidPoint) -> bool {
        p.x >= self.xmin && p.x <= self.xmax && p.y >= self.ymin && p.y <= self.ymax
    }

    /// The part of `L_P` inside the box, if it is more than a point.
    pub fn clip(&self, p: &CoeffPoint) -> Option<(EuclidPoint, EuclidPoint)> {
        let zero = int(0);
        let mut hits: Vec<EuclidPoint> = Vec::new();
        if *p.a() != zero {
            for y in [&self.ymin, &self.ymax] {
                hits.push(EuclidPoint::new((int(1) - p.b() * y) / p.a(), y.clone()));
            }
        }
        if *p.b() != zero {
            for x in [&self.xmin, &self.xmax] {
                hits.push(EuclidPoint::new(x.clone(), (int(1) - p.a() * x) / p.b()));
            }
        }
        hits.retain(|h| self.contains(h));
        hits.sort();
        hits.dedup();
        match hits.len() {
            0 | 1 => None,
            _ => Some((hits[0].clone(), hits[hits.len() - 1].clone())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderConfig {
    /// `None` picks the padded bounding box of the arrangement vertices.
    pub view_box: Option<ViewBox>,
    pub width: u32,
    /// Fill colour by side count.
    pub shade: BTreeMap<usize, String>,
    /// Fill for faces with five or more sides that `shade` does not cover.
    pub highlight: Option<String>,
    pub labels: bool,
}

impl Default for RenderConfig {
    fn default() -> Self {
        RenderConfig {
            view_box: None,
            width: 800,
            shade: BTreeMap::from([(3, "#f0f0f0".to_string()), (4, "#d9d9d9".to_string())]),
            highlight: Some("#f4a300".to_string()),
            labels: false,
        }
    }
}

/// Accepts `#rgb`, `#rrggbb` and plain alphabetic colour names.
pub fn valid_color(c: &str) -> bool {
    match c.strip_prefix('#') {
        Some(hex) => matches!(hex.len(), 3 | 6) && hex.chars().all(|ch| ch.is_ascii_hexdigit()),
        None => !c.is_empty() && c.chars().all(|ch| ch.is_ascii_alphabetic()),
    }
}

struct Frame {
    vb: ViewBox,
    scale: Rational,
}

impl Frame {
    fn x(&self, x: &Rational) -> String {
        to_fixed(&((x - &self.vb.xmin) * &self.scale), 6)
    }

    fn y(&self, y: &Rational) -> String {
        to_fixed(&((&self.vb.ymax - y) * &self.scale), 6)
    }

    fn point(&self, p: &EuclidPoint) -> String {
        format!("{},{}", self.x(&p.x), self.y(&p.y))
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn render(sub: &Subdivision, cfg: &RenderConfig) -> String {
    let vb = cfg.view_box.clone().unwrap_or_else(|| {
        if sub.vertices().is_empty() {
            let feet: Vec<EuclidPoint> = sub.lines().iter().map(CoeffPoint::foot).collect();
            ViewBox::around(&feet)
        } else {
            ViewBox::around(sub.vertices())
        }
    });
    let width = cfg.width.max(1);
    let scale = int(i64::from(width)) / (&vb.xmax - &vb.xmin);
    let frame = Frame { scale, vb };
    let w = frame.x(&frame.vb.xmax);
    let h = frame.y(&frame.vb.ymin);

    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    )
    .unwrap();
    writeln!(out, r#"<title>{}</title>"#, escape(&format!("{} lines", sub.lines().len()))).unwrap();
    writeln!(out, r#"<defs><clipPath id="frame"><rect x="0" y="0" width="{w}" height="{h}"/></clipPath></defs>"#)
        .unwrap();
    writeln!(out, r#"<rect x="0" y="0" width="{w}" height="{h}" fill="white" stroke="black" stroke-width="1"/>"#)
        .unwrap();
    writeln!(out, r#"<g clip-path="url(#frame)">"#).unwrap();

    for f in sub.bounded_faces() {
        let fill = cfg.shade.get(&f.side_count).or(if f.side_count >= 5 { cfg.highlight.as_ref() } else { None });
        if let Some(fill) = fill {
            let pts: Vec<String> = f.corners.iter().map(|c| frame.point(c)).collect();
            writeln!(
                out,
                r#"<polygon class="face-{}" points="{}" fill="{}" stroke="none"/>"#,
                f.side_count,
                pts.join(" "),
                escape(fill)
            )
            .unwrap();
        }
    }
    let mut labels = Vec::new();
    for p in sub.lines() {
        if let Some((a, b)) = frame.vb.clip(p) {
            writeln!(
                out,
                r#"<path class="line" d="M {} {} L {} {}" stroke="black" stroke-width="1" fill="none"/>"#,
                frame.x(&a.x),
                frame.y(&a.y),
                frame.x(&b.x),
                frame.y(&b.y)
            )
            .unwrap();
            labels.push((p, a));
        }
    }
    writeln!(out, "</g>").unwrap();
    if cfg.labels {
        for (p, at) in labels {
            writeln!(
                out,
                r#"<text x="{}" y="{}" font-size="10" font-family="sans-serif">{}</text>"#,
                frame.x(&at.x),
                frame.y(&at.y),
                escape(&p.to_string())
            )
            .unwrap();
        }
    }
    writeln!(out, "</svg>").unwrap();
    out
}
