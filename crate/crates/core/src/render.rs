//! ASCII and SVG diagrams of standard patterns.
//!
//! SVG styling is fixed:
//!
//! | element        | value                                    |
//! |----------------|------------------------------------------|
//! | cell pitch     | 40 px between adjacent grid vertices     |
//! | margin         | 20 px around the outermost vertices      |
//! | grid lines     | `#c8c8c8`, 1 px                          |
//! | towers         | filled `#000000` circles, radius 7 px    |
//! | signal rings   | `#1f77b4`, 1.5 px, radii `1..t-1` cells  |

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::lattice::{contains, towers_in_window, BroadcastSpec, GridPoint, PatternParams, Window};
use crate::signal::total_signal;

/// Largest number of cells a diagram may cover.
pub const MAX_CELLS: u64 = 1_000_000;

pub const TOWER_GLYPH: char = 'T';
pub const EMPTY_GLYPH: char = '.';

const CELL: i64 = 40;
const MARGIN: i64 = 20;
const TOWER_RADIUS: i64 = 7;
const GRID_COLOR: &str = "#c8c8c8";
const TOWER_COLOR: &str = "#000000";
const RING_COLOR: &str = "#1f77b4";

/// A clipped, optionally shifted, view of the infinite grid.
///
/// Cell `c` shows a tower iff `c + translation` is a pattern point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Viewport {
    width: u32,
    height: u32,
    origin: GridPoint,
    translation: GridPoint,
}

impl Viewport {
    /// `width x height` cells whose lower-left corner is `origin`.
    pub fn new(width: u32, height: u32, origin: GridPoint) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::EmptyViewport {
                width: width.into(),
                height: height.into(),
            });
        }
        check_size(u128::from(width) * u128::from(height))?;
        let vp = Viewport {
            width,
            height,
            origin,
            translation: GridPoint::ORIGIN,
        };
        vp.window()?;
        Ok(vp)
    }

    pub fn with_translation(mut self, translation: GridPoint) -> Self {
        self.translation = translation;
        self
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn origin(&self) -> GridPoint {
        self.origin
    }

    pub fn translation(&self) -> GridPoint {
        self.translation
    }

    fn window(&self) -> Result<Window> {
        let x_max = self.origin.x.checked_add(i64::from(self.width) - 1);
        let y_max = self.origin.y.checked_add(i64::from(self.height) - 1);
        match (x_max, y_max) {
            (Some(x_max), Some(y_max)) => Window::new(self.origin.x, x_max, self.origin.y, y_max),
            _ => Err(Error::Overflow),
        }
    }

    fn shifted(&self, cell: GridPoint) -> Result<GridPoint> {
        cell.checked_add(self.translation).ok_or(Error::Overflow)
    }

    /// Cells row by row, top row first.
    fn rows(&self) -> impl Iterator<Item = impl Iterator<Item = GridPoint>> {
        let (x0, y0) = (self.origin.x, self.origin.y);
        let (w, h) = (i64::from(self.width), i64::from(self.height));
        (0..h)
            .rev()
            .map(move |dy| (0..w).map(move |dx| GridPoint::new(x0 + dx, y0 + dy)))
    }
}

fn check_size(cells: u128) -> Result<()> {
    if cells > u128::from(MAX_CELLS) {
        return Err(Error::ViewportTooLarge {
            cells,
            limit: MAX_CELLS,
        });
    }
    Ok(())
}

/// Text diagram, one line per row with the highest row first.
///
/// Towers are `T`. Other cells are `.`, or with `spec` given, the total
/// signal they receive (`+` for 10 or more).
pub fn render_ascii(
    params: PatternParams,
    vp: &Viewport,
    spec: Option<BroadcastSpec>,
) -> Result<String> {
    let mut out = String::with_capacity((vp.width as usize + 1) * vp.height as usize);
    for row in vp.rows() {
        for cell in row {
            let shifted = vp.shifted(cell)?;
            let glyph = if contains(params, shifted) {
                TOWER_GLYPH
            } else if let Some(spec) = spec {
                match total_signal(spec, params, shifted)?.0 {
                    s @ 0..=9 => char::from_digit(s as u32, 10).expect("single digit"),
                    _ => '+',
                }
            } else {
                EMPTY_GLYPH
            };
            out.push(glyph);
        }
        out.push('\n');
    }
    Ok(out)
}

/// Standalone SVG 1.1 diagram: grid lines, towers, and with `spec` given,
/// diamond rings of radius `1..=t-1` around every tower whose rings reach
/// the viewport.
pub fn render_svg(
    params: PatternParams,
    vp: &Viewport,
    spec: Option<BroadcastSpec>,
) -> Result<String> {
    let view = vp.window()?;
    let (w, h) = (i64::from(vp.width), i64::from(vp.height));
    let px_w = 2 * MARGIN + (w - 1) * CELL;
    let px_h = 2 * MARGIN + (h - 1) * CELL;
    let px = |x: i64| MARGIN + (x - view.x_min()) * CELL;
    let py = |y: i64| MARGIN + (view.y_max() - y) * CELL;

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{px_w}\" height=\"{px_h}\" viewBox=\"0 0 {px_w} {px_h}\">"
    )
    .unwrap();
    writeln!(
        svg,
        "  <title>{params}, {w}x{h} cells from ({},{})</title>",
        view.x_min(),
        view.y_min()
    )
    .unwrap();
    writeln!(
        svg,
        "  <defs><clipPath id=\"viewport\"><rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\"/></clipPath></defs>",
        MARGIN / 2,
        MARGIN / 2,
        px_w - MARGIN,
        px_h - MARGIN
    )
    .unwrap();

    writeln!(svg, "  <g stroke=\"{GRID_COLOR}\" stroke-width=\"1\">").unwrap();
    for x in view.x_min()..=view.x_max() {
        writeln!(
            svg,
            "    <line x1=\"{0}\" y1=\"{MARGIN}\" x2=\"{0}\" y2=\"{1}\"/>",
            px(x),
            px_h - MARGIN
        )
        .unwrap();
    }
    for y in view.y_min()..=view.y_max() {
        writeln!(
            svg,
            "    <line x1=\"{MARGIN}\" y1=\"{0}\" x2=\"{1}\" y2=\"{0}\"/>",
            py(y),
            px_w - MARGIN
        )
        .unwrap();
    }
    svg.push_str("  </g>\n");

    if let Some(spec) = spec.filter(|s| s.t() >= 2) {
        let reach = i64::from(spec.t()) - 1;
        let (Some(x_lo), Some(x_hi), Some(y_lo), Some(y_hi)) = (
            view.x_min().checked_sub(reach),
            view.x_max().checked_add(reach),
            view.y_min().checked_sub(reach),
            view.y_max().checked_add(reach),
        ) else {
            return Err(Error::Overflow);
        };
        let around = Window::new(x_lo, x_hi, y_lo, y_hi)?;
        check_size(around.cell_count())?;
        writeln!(
            svg,
            "  <g clip-path=\"url(#viewport)\" fill=\"none\" stroke=\"{RING_COLOR}\" stroke-width=\"1.5\">"
        )
        .unwrap();
        for tower in towers_of(params, vp, around)? {
            let (cx, cy) = (px(tower.x), py(tower.y));
            for k in 1..=reach {
                let s = k * CELL;
                writeln!(
                    svg,
                    "    <polygon points=\"{cx},{} {},{cy} {cx},{} {},{cy}\"/>",
                    cy - s,
                    cx + s,
                    cy + s,
                    cx - s
                )
                .unwrap();
            }
        }
        svg.push_str("  </g>\n");
    }

    writeln!(svg, "  <g fill=\"{TOWER_COLOR}\">").unwrap();
    for tower in towers_of(params, vp, view)? {
        writeln!(
            svg,
            "    <circle cx=\"{}\" cy=\"{}\" r=\"{TOWER_RADIUS}\"/>",
            px(tower.x),
            py(tower.y)
        )
        .unwrap();
    }
    svg.push_str("  </g>\n</svg>\n");
    Ok(svg)
}

/// Tower cells of `area` in viewport coordinates.
fn towers_of(params: PatternParams, vp: &Viewport, area: Window) -> Result<Vec<GridPoint>> {
    let tr = vp.translation;
    let (Some(x_lo), Some(x_hi), Some(y_lo), Some(y_hi)) = (
        area.x_min().checked_add(tr.x),
        area.x_max().checked_add(tr.x),
        area.y_min().checked_add(tr.y),
        area.y_max().checked_add(tr.y),
    ) else {
        return Err(Error::Overflow);
    };
    Ok(
        towers_in_window(params, Window::new(x_lo, x_hi, y_lo, y_hi)?)
            .into_iter()
            .map(|p| GridPoint::new(p.x - tr.x, p.y - tr.y))
            .collect(),
    )
}
