//! SVG drawings of animals and a text dump of their equerre decomposition.

use std::f64::consts::{FRAC_PI_4, FRAC_PI_6};
use std::fmt::Write as _;

use crate::animal::{beta_decomposition, beta_inverse, Animal, Lattice, Source};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Rotation {
    /// Fiber across, height up.
    #[default]
    Heap,
    /// Directed steps drawn as unit lattice vectors: east and north on the
    /// square lattice, plus the 60° diagonal on the triangular one.
    Lattice,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderOptions {
    cell_radius: f64,
    pub rotation: Rotation,
    /// Draw a segment from every cell to the cell that spawned it in the
    /// equerre recursion (point sources only).
    pub show_decomposition: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self { cell_radius: 0.4, rotation: Rotation::Heap, show_decomposition: false }
    }
}

impl RenderOptions {
    pub fn new(cell_radius: f64, rotation: Rotation, show_decomposition: bool) -> Result<Self> {
        if !(cell_radius > 0.0 && cell_radius.is_finite()) {
            return Err(Error::Domain(format!("cell radius must be positive, got {cell_radius}")));
        }
        Ok(Self { cell_radius, rotation, show_decomposition })
    }

    pub fn cell_radius(&self) -> f64 {
        self.cell_radius
    }
}

fn rotate(x: f64, y: f64, angle: f64) -> (f64, f64) {
    let (s, c) = angle.sin_cos();
    (x * c - y * s, x * s + y * c)
}

/// Drawing position of a cell, y pointing up.
pub fn position(lattice: Lattice, rotation: Rotation, fiber: i64, height: i64) -> (f64, f64) {
    let (x, y) = (fiber as f64, height as f64);
    match (rotation, lattice) {
        (Rotation::Heap, _) => (x, y),
        (Rotation::Lattice, Lattice::Square) => {
            let (u, v) = rotate(x, y, -FRAC_PI_4);
            (u / 2f64.sqrt(), v / 2f64.sqrt())
        }
        (Rotation::Lattice, Lattice::Triangular) => {
            // Squash heights so the three steps have equal length, then turn.
            let (u, v) = rotate(x, y / 3f64.sqrt(), -FRAC_PI_6);
            let k = 3f64.sqrt() / 2.0;
            (u * k, v * k)
        }
    }
}

/// Fixed-precision number with negative zero normalized.
fn num(v: f64) -> String {
    let s = format!("{v:.4}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

/// One filled disk per cell, as an SVG 1.1 document.
pub fn render_svg(an: &Animal, opts: &RenderOptions) -> String {
    let r = opts.cell_radius;
    let points: Vec<(f64, f64)> =
        an.cells().iter().map(|c| position(an.lattice(), opts.rotation, c.fiber, c.height)).collect();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &points {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(-y);
        y1 = y1.max(-y);
    }
    let pad = r + 0.5;
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">",
        num(x0 - pad),
        num(y0 - pad),
        num(x1 - x0 + 2.0 * pad),
        num(y1 - y0 + 2.0 * pad)
    );
    if opts.show_decomposition && an.source() == Source::Point {
        if let Some(nodes) = beta_inverse(an).ok().and_then(|w| beta_decomposition(&w, an.lattice()).ok()).map(|d| d.nodes) {
            let _ = writeln!(out, "<g stroke=\"gray\" stroke-width=\"{}\">", num(r / 4.0));
            for n in &nodes {
                if let Some(p) = n.parent {
                    let (ax, ay) = position(an.lattice(), opts.rotation, n.site.fiber, n.site.height);
                    let b = nodes[p].site;
                    let (bx, by) = position(an.lattice(), opts.rotation, b.fiber, b.height);
                    let _ = writeln!(
                        out,
                        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
                        num(bx),
                        num(-by),
                        num(ax),
                        num(-ay)
                    );
                }
            }
            out.push_str("</g>\n");
        }
    }
    out.push_str("<g fill=\"black\">\n");
    for (x, y) in points {
        let _ = writeln!(out, "<circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>", num(x), num(-y), num(r));
    }
    out.push_str("</g>\n</svg>\n");
    out
}

/// Indented dump of the equerre recursion that builds `an`.
pub fn render_decomposition(an: &Animal) -> Result<String> {
    if an.source() != Source::Point {
        return Err(Error::Unsupported("decomposition dumps need a point source".into()));
    }
    let word = beta_inverse(an)?;
    Ok(beta_decomposition(&word, an.lattice())?.to_text())
}
