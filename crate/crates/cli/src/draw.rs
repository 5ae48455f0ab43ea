//! Straight-line SVG drawings of planar graphs.
//!
//! Each connected component gets its own cell. The longest face of the
//! component is pinned to a regular polygon and the remaining vertices sit
//! at the barycenter of their neighbors (Tutte's construction), which is
//! crossing-free for 3-connected graphs. When the result still has
//! crossings a short force-directed pass runs from it, and whichever
//! layout crosses less is kept.

use std::fmt::Write as _;

use splitthick::planarity::{embed, faces, PlanarityError};
use splitthick::{Graph, SplitCertificate};

const CELL: f64 = 320.0;
const MARGIN: f64 = 30.0;
const RADIUS: f64 = 9.0;
const BARYCENTER_SWEEPS: usize = 5_000;
const FORCE_STEPS: usize = 400;
/// Crossing counts are quadratic in the edge count; skip the fallback above this.
const CROSSING_CHECK_EDGES: usize = 4_000;

pub type Point = (f64, f64);

/// Vertex to draw: position, fill group and label.
#[derive(Debug, Clone, PartialEq)]
pub struct Node {
    pub at: Point,
    pub group: usize,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Drawing {
    pub nodes: Vec<Node>,
    pub edges: Vec<(usize, usize)>,
    pub width: f64,
    pub height: f64,
}

/// Draws a plain graph; every vertex is its own color group.
pub fn draw_graph(g: &Graph) -> Result<Drawing, PlanarityError> {
    let groups: Vec<usize> = g.vertices().collect();
    let labels: Vec<String> = g.vertices().map(|v| v.to_string()).collect();
    build(g, groups, labels)
}

/// Draws the split graph of a certificate; copies of a base vertex share a color.
pub fn draw_certificate(cert: &SplitCertificate, split: &Graph) -> Result<Drawing, PlanarityError> {
    let ids = cert.copy_ids();
    let groups = ids.iter().map(|c| c.vertex).collect();
    let labels = ids.iter().map(|c| format!("{}.{}", c.vertex, c.index)).collect();
    build(split, groups, labels)
}

fn build(g: &Graph, groups: Vec<usize>, labels: Vec<String>) -> Result<Drawing, PlanarityError> {
    let unit = layout(g)?;
    let comps = g.components();
    let cols = (comps.len() as f64).sqrt().ceil().max(1.0) as usize;
    let rows = comps.len().div_ceil(cols).max(1);
    let mut at = vec![(0.0, 0.0); g.vertex_count()];
    let half = CELL / 2.0 - MARGIN;
    for (i, comp) in comps.iter().enumerate() {
        let (cx, cy) = ((i % cols) as f64 * CELL + CELL / 2.0, (i / cols) as f64 * CELL + CELL / 2.0);
        for &v in comp {
            at[v] = (cx + unit[v].0 * half, cy + unit[v].1 * half);
        }
    }
    let nodes = at
        .into_iter()
        .zip(groups)
        .zip(labels)
        .map(|((at, group), label)| Node { at, group, label })
        .collect();
    Ok(Drawing { nodes, edges: g.edges().to_vec(), width: cols as f64 * CELL, height: rows as f64 * CELL })
}

/// Positions in `[-1, 1]^2` per component.
pub fn layout(g: &Graph) -> Result<Vec<Point>, PlanarityError> {
    let emb = embed(g)?;
    let face_list = faces(&emb);
    let mut pos = vec![(0.0, 0.0); g.vertex_count()];
    let mut comp_of = vec![0; g.vertex_count()];
    let comps = g.components();
    for (i, comp) in comps.iter().enumerate() {
        for &v in comp {
            comp_of[v] = i;
        }
    }
    let mut outer: Vec<Option<&Vec<(usize, usize)>>> = vec![None; comps.len()];
    for f in &face_list.faces {
        let c = comp_of[f[0].0];
        if outer[c].is_none_or(|best| f.len() > best.len()) {
            outer[c] = Some(f);
        }
    }
    for (c, comp) in comps.iter().enumerate() {
        let Some(walk) = outer[c] else { continue };
        let mut ring = Vec::new();
        let mut pinned = vec![false; g.vertex_count()];
        for &(u, _) in walk {
            if !pinned[u] {
                pinned[u] = true;
                ring.push(u);
            }
        }
        let k = ring.len() as f64;
        for (i, &v) in ring.iter().enumerate() {
            let t = std::f64::consts::TAU * i as f64 / k - std::f64::consts::FRAC_PI_2;
            pos[v] = (t.cos(), t.sin());
        }
        barycentric(g, comp, &pinned, &mut pos);
        let comp_edges: Vec<(usize, usize)> = g.edges().iter().copied().filter(|&(u, _)| comp_of[u] == c).collect();
        if comp_edges.len() <= CROSSING_CHECK_EDGES {
            let crossings = count_crossings(&comp_edges, &pos);
            if crossings > 0 {
                let mut alt = pos.clone();
                relax(g, comp, &mut alt);
                if count_crossings(&comp_edges, &alt) < crossings {
                    pos = alt;
                }
            }
        }
    }
    Ok(pos)
}

fn barycentric(g: &Graph, comp: &[usize], pinned: &[bool], pos: &mut [Point]) {
    let free: Vec<usize> = comp.iter().copied().filter(|&v| !pinned[v]).collect();
    for _ in 0..BARYCENTER_SWEEPS {
        let mut moved: f64 = 0.0;
        for &v in &free {
            let d = g.degree(v) as f64;
            let (sx, sy) = g.neighbors(v).iter().fold((0.0, 0.0), |(x, y), &w| (x + pos[w].0, y + pos[w].1));
            let next = (sx / d, sy / d);
            moved = moved.max((next.0 - pos[v].0).abs() + (next.1 - pos[v].1).abs());
            pos[v] = next;
        }
        if moved < 1e-10 {
            break;
        }
    }
}

/// Fruchterman-Reingold with a linear cooling schedule, rescaled into the unit box.
fn relax(g: &Graph, comp: &[usize], pos: &mut [Point]) {
    let k = (4.0 / comp.len() as f64).sqrt();
    let mut temp = 0.2;
    let cool = temp / FORCE_STEPS as f64;
    for _ in 0..FORCE_STEPS {
        let mut disp = vec![(0.0, 0.0); comp.len()];
        for (i, &v) in comp.iter().enumerate() {
            for &w in comp {
                if v == w {
                    continue;
                }
                let (dx, dy) = (pos[v].0 - pos[w].0, pos[v].1 - pos[w].1);
                let d2 = (dx * dx + dy * dy).max(1e-9);
                disp[i].0 += dx * k * k / d2;
                disp[i].1 += dy * k * k / d2;
            }
            for &w in g.neighbors(v) {
                let (dx, dy) = (pos[v].0 - pos[w].0, pos[v].1 - pos[w].1);
                let d = (dx * dx + dy * dy).sqrt();
                disp[i].0 -= dx * d / k;
                disp[i].1 -= dy * d / k;
            }
        }
        for (i, &v) in comp.iter().enumerate() {
            let len = (disp[i].0 * disp[i].0 + disp[i].1 * disp[i].1).sqrt().max(1e-12);
            let step = len.min(temp);
            pos[v].0 += disp[i].0 / len * step;
            pos[v].1 += disp[i].1 / len * step;
        }
        temp -= cool;
    }
    let (mut lo, mut hi) = ((f64::MAX, f64::MAX), (f64::MIN, f64::MIN));
    for &v in comp {
        lo = (lo.0.min(pos[v].0), lo.1.min(pos[v].1));
        hi = (hi.0.max(pos[v].0), hi.1.max(pos[v].1));
    }
    let span = (hi.0 - lo.0).max(hi.1 - lo.1).max(1e-9);
    for &v in comp {
        pos[v] = (2.0 * (pos[v].0 - lo.0) / span - 1.0, 2.0 * (pos[v].1 - lo.1) / span - 1.0);
    }
}

fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

fn on_segment(a: Point, b: Point, p: Point) -> bool {
    p.0 >= a.0.min(b.0) - 1e-12 && p.0 <= a.0.max(b.0) + 1e-12 && p.1 >= a.1.min(b.1) - 1e-12 && p.1 <= a.1.max(b.1) + 1e-12
}

/// Whether two segments meet anywhere other than a shared endpoint.
pub fn segments_cross(p: (Point, Point), q: (Point, Point), share_endpoint: bool) -> bool {
    const EPS: f64 = 1e-12;
    let (a, b) = p;
    let (c, d) = q;
    let (o1, o2, o3, o4) = (orient(a, b, c), orient(a, b, d), orient(c, d, a), orient(c, d, b));
    if share_endpoint {
        // only a collinear overlap counts
        return o1.abs() < EPS && o2.abs() < EPS && (on_segment(a, b, c) && c != a && c != b || on_segment(a, b, d) && d != a && d != b || on_segment(c, d, a) && a != c && a != d);
    }
    if (o1 > EPS && o2 < -EPS || o1 < -EPS && o2 > EPS) && (o3 > EPS && o4 < -EPS || o3 < -EPS && o4 > EPS) {
        return true;
    }
    (o1.abs() < EPS && on_segment(a, b, c))
        || (o2.abs() < EPS && on_segment(a, b, d))
        || (o3.abs() < EPS && on_segment(c, d, a))
        || (o4.abs() < EPS && on_segment(c, d, b))
}

pub fn count_crossings(edges: &[(usize, usize)], pos: &[Point]) -> usize {
    let mut n = 0;
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            let shared = a == c || a == d || b == c || b == d;
            n += usize::from(segments_cross((pos[a], pos[b]), (pos[c], pos[d]), shared));
        }
    }
    n
}

fn fill(group: usize) -> String {
    format!("hsl({:.1},65%,60%)", (group as f64 * 137.507_764) % 360.0)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn to_svg(d: &Drawing) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">"#,
        w = d.width,
        h = d.height
    );
    let _ = writeln!(s, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);
    let _ = writeln!(s, r##"<g stroke="#555555" stroke-width="1.5">"##);
    for &(u, v) in &d.edges {
        let (a, b) = (d.nodes[u].at, d.nodes[v].at);
        let _ = writeln!(s, r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#, a.0, a.1, b.0, b.1);
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r##"<g stroke="#222222" font-family="sans-serif" font-size="8" text-anchor="middle">"##);
    for n in &d.nodes {
        let label = escape(&n.label);
        let _ = writeln!(
            s,
            r#"<circle cx="{:.2}" cy="{:.2}" r="{RADIUS}" fill="{}"><title>{label}</title></circle>"#,
            n.at.0,
            n.at.1,
            fill(n.group)
        );
        let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}" stroke="none">{label}</text>"#, n.at.0, n.at.1 + 3.0);
    }
    let _ = writeln!(s, "</g>");
    s.push_str("</svg>\n");
    s
}
