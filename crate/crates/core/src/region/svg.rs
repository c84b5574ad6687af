use std::fmt::Write;

use super::{RegionGrid, PANELS};
use crate::format::sig9;

/// Pixels per unit of the layout triangle.
const SCALE: f64 = 100.0;
const MARGIN: f64 = 20.0;
const TITLE: f64 = 24.0;
const SQRT_3: f64 = 1.732_050_807_568_877_2;

const GRAY: &str = "#808080";
const BLACK: &str = "#000000";
const WHITE: &str = "#ffffff";

/// Five panels side by side. Each lattice row `j` is a horizontal strip;
/// runs of equal color within a row become one rectangle.
pub(super) fn render(grid: &RegionGrid) -> String {
    let n = grid.resolution as f64;
    let panel_w = 2.0 * SCALE + 2.0 * MARGIN;
    let panel_h = SQRT_3 * SCALE + 2.0 * MARGIN + TITLE;
    let width = panel_w * PANELS.len() as f64;

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    let _ = writeln!(
        s,
        "<!-- Barycentric (x,y,z) maps to X = (z - x)/(x + y + z), Y = sqrt(3)*y/(x + y + z).\n     \
         Corners: x -> (-1,0), z -> (1,0), y -> (0,sqrt(3)).\n     \
         Pixels: px = {m} + {sc}*(X + 1), py = {top} + {sc}*(sqrt(3) - Y) inside each panel.\n     \
         Cell width 2/resolution, height sqrt(3)/resolution; resolution = {res}, normalization = {norm}.\n     \
         Fill {GRAY}: realizable, all eigenvalues positive. {BLACK}: realizable, some eigenvalue 0. {WHITE}: not realizable. -->",
        m = sig9(MARGIN),
        sc = sig9(SCALE),
        top = sig9(MARGIN + TITLE),
        res = grid.resolution,
        norm = sig9(grid.normalization),
    );
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        sig9(width),
        sig9(panel_h),
        sig9(width),
        sig9(panel_h)
    );

    let cell_w = 2.0 / n;
    let cell_h = SQRT_3 / n;
    for (p, &t) in PANELS.iter().enumerate() {
        let bit = 1u8 << p;
        let _ = writeln!(
            s,
            "<g id=\"{}\" transform=\"translate({},0)\">",
            t.name(),
            sig9(panel_w * p as f64)
        );
        let _ = writeln!(
            s,
            "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">({}) {}</text>",
            sig9(MARGIN + SCALE),
            sig9(MARGIN + 0.5 * TITLE),
            (b'A' + p as u8) as char,
            t.name()
        );
        for j in 0..=grid.resolution {
            // Along row j, X = (k - i)/n grows as i falls.
            let mut run: Option<(&str, f64, f64)> = None;
            for i in (0..=grid.resolution - j).rev() {
                let cell = grid.cell(i, j).expect("lattice point");
                let color = if cell.mask & bit == 0 {
                    WHITE
                } else if cell.on_boundary() {
                    BLACK
                } else {
                    GRAY
                };
                let x = (cell.k as f64 - cell.i as f64) / n;
                run = match run {
                    Some((c, start, _)) if c == color => Some((c, start, x)),
                    Some(done) => {
                        rect(&mut s, done, j as f64 * cell_h, cell_w, cell_h);
                        Some((color, x, x))
                    }
                    None => Some((color, x, x)),
                };
            }
            if let Some(done) = run {
                rect(&mut s, done, j as f64 * cell_h, cell_w, cell_h);
            }
        }
        let _ = writeln!(
            s,
            "<polygon points=\"{},{} {},{} {},{}\" fill=\"none\" stroke=\"{BLACK}\" stroke-width=\"1\"/>",
            sig9(px(-1.0)),
            sig9(py(0.0)),
            sig9(px(1.0)),
            sig9(py(0.0)),
            sig9(px(0.0)),
            sig9(py(SQRT_3))
        );
        s.push_str("</g>\n");
    }
    s.push_str("</svg>\n");
    s
}

fn px(x: f64) -> f64 {
    MARGIN + SCALE * (x + 1.0)
}

fn py(y: f64) -> f64 {
    MARGIN + TITLE + SCALE * (SQRT_3 - y)
}

fn rect(s: &mut String, (color, from, to): (&str, f64, f64), y: f64, w: f64, h: f64) {
    let left = px(from - 0.5 * w);
    let right = px(to + 0.5 * w);
    let top = py(y + 0.5 * h);
    let _ = writeln!(
        s,
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{color}\"/>",
        sig9(left),
        sig9(top),
        sig9(right - left),
        sig9(SCALE * h)
    );
}
