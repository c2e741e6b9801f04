//! Deterministic SVG arc diagrams of bipartitions.
//!
//! Each diagram draws two vertical strings: left letters on the left string
//! and right letters on the right string, both in natural order from the top
//! with a pitch of 24 units. Opaque points are black, translucent points are
//! white. Blocks are drawn as a spine with one rib per point; the translucent
//! block is drawn in red with a chord rising to the top edge.

use std::fmt::Write;

use crate::bipartition::{Bipartition, LabeledBipartition};
use crate::biset::Side;

const PITCH: i64 = 24;
const TOP: i64 = 40;
const PANEL_WIDTH: i64 = 220;
const LEFT_X: i64 = 40;
const RIGHT_X: i64 = 180;
const STEP: i64 = 10;
const RADIUS: i64 = 5;

/// One diagram per entry, laid out left to right. Labels, when present, are
/// printed next to the top point of each block.
pub fn render(items: &[(Bipartition, Option<LabeledBipartition>)]) -> String {
    let rows = items.iter().map(|(p, _)| p.ty().len() as i64).max().unwrap_or(0);
    let width = PANEL_WIDTH * items.len().max(1) as i64;
    let height = TOP + PITCH * (rows + 1);
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>"#).unwrap();
    for (k, (pi, labeled)) in items.iter().enumerate() {
        panel(&mut out, k as i64 * PANEL_WIDTH, pi, labeled.as_ref());
    }
    out.push_str("</svg>\n");
    out
}

fn point(pi: &Bipartition, p: usize) -> (i64, i64) {
    let x = if pi.ty().side(p) == Side::L { LEFT_X } else { RIGHT_X };
    (x, TOP + PITCH * p as i64)
}

/// Nesting height in the standard order: 0 for blocks enclosing nothing.
fn heights(pi: &Bipartition, groups: &[Vec<usize>]) -> Vec<i64> {
    let order = pi.ty().standard_order();
    let span: Vec<(usize, usize)> = groups
        .iter()
        .map(|g| {
            let ranks = g.iter().map(|&p| order.rank(p));
            (ranks.clone().min().unwrap_or(0), ranks.max().unwrap_or(0))
        })
        .collect();
    let encloses = |a: usize, b: usize| a != b && span[a].0 < span[b].0 && span[b].1 < span[a].1;
    let mut h = vec![0i64; groups.len()];
    // Spans nest, so processing by width settles inner blocks first.
    let mut by_width: Vec<usize> = (0..groups.len()).collect();
    by_width.sort_by_key(|&g| (span[g].1 - span[g].0, g));
    for &g in &by_width {
        h[g] = (0..groups.len()).filter(|&o| encloses(g, o)).map(|o| h[o] + 1).max().unwrap_or(0);
    }
    h
}

fn panel(out: &mut String, dx: i64, pi: &Bipartition, labeled: Option<&LabeledBipartition>) {
    let ty = pi.ty();
    let mut groups: Vec<Vec<usize>> = pi.blocks().to_vec();
    let translucent = ty.translucent_positions();
    let has_translucent = !translucent.is_empty();
    if has_translucent {
        groups.push(translucent);
    }
    let h = heights(pi, &groups);
    writeln!(out, r#"<g transform="translate({dx},0)">"#).unwrap();
    writeln!(out, r#"<text x="{}" y="20" font-family="monospace" font-size="12" text-anchor="middle">{}</text>"#, PANEL_WIDTH / 2, ty).unwrap();
    let bottom = TOP + PITCH * ty.len() as i64;
    for x in [LEFT_X, RIGHT_X] {
        writeln!(out, r##"<line x1="{x}" y1="{TOP}" x2="{x}" y2="{bottom}" stroke="#bbbbbb" stroke-width="1"/>"##).unwrap();
    }
    for (g, members) in groups.iter().enumerate() {
        let is_translucent = has_translucent && g == groups.len() - 1;
        let color = if is_translucent { "#d62728" } else { "black" };
        let sides: Vec<Side> = members.iter().map(|&p| ty.side(p)).collect();
        let spine_x = if sides.iter().all(|&s| s == Side::L) {
            LEFT_X + STEP * (h[g] + 2)
        } else if sides.iter().all(|&s| s == Side::R) {
            RIGHT_X - STEP * (h[g] + 2)
        } else {
            (LEFT_X + RIGHT_X) / 2 + if is_translucent { 0 } else { STEP * (h[g] % 3 - 1) }
        };
        let ys: Vec<i64> = members.iter().map(|&p| point(pi, p).1).collect();
        let (y_min, y_max) = (*ys.iter().min().unwrap(), *ys.iter().max().unwrap());
        let y_top = if is_translucent { 0 } else { y_min };
        if y_top != y_max {
            writeln!(out, r#"<line x1="{spine_x}" y1="{y_top}" x2="{spine_x}" y2="{y_max}" stroke="{color}" stroke-width="2"/>"#).unwrap();
        }
        for &p in members {
            let (x, y) = point(pi, p);
            writeln!(out, r#"<line x1="{x}" y1="{y}" x2="{spine_x}" y2="{y}" stroke="{color}" stroke-width="2"/>"#).unwrap();
        }
        if let (Some(l), false) = (labeled, is_translucent) {
            writeln!(
                out,
                r#"<text x="{}" y="{}" font-family="monospace" font-size="10" fill="{color}">{}</text>"#,
                spine_x + 3,
                y_min - 4,
                l.label(g)
            )
            .unwrap();
        }
    }
    for p in 1..=ty.len() {
        let (x, y) = point(pi, p);
        let fill = if ty.is_opaque(p) { "black" } else { "white" };
        writeln!(out, r#"<circle cx="{x}" cy="{y}" r="{RADIUS}" fill="{fill}" stroke="black" stroke-width="1.5"/>"#).unwrap();
    }
    writeln!(out, "</g>").unwrap();
}
