//! Polyline-to-diagram compiler used to author catalog tiles and test
//! fixtures.
//!
//! A strand is a cyclic list of points in the unit square. Each segment
//! carries an integer layer; where two segments cross, the higher layer
//! passes over. A "segment" whose endpoints sit on opposite edges of the
//! square at the matching coordinate is a seam passage, not drawn geometry.

use std::collections::BTreeMap;

use crate::web::{ArcId, Crossing, End, Passage, Role, Seam, Web};

const EPS: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct Strand {
    /// cyclic vertex list
    pub points: Vec<(f64, f64)>,
    /// layer per segment: `layers[i]` covers points[i] -> points[i+1]
    pub layers: Vec<i32>,
    pub role: Role,
}

impl Strand {
    pub fn new(points: Vec<(f64, f64)>, layers: Vec<i32>) -> Self {
        assert_eq!(points.len(), layers.len(), "one layer per cyclic segment");
        Self { points, layers, role: Role::Plain }
    }

    /// Closed curve drawn entirely at one layer.
    pub fn flat(points: Vec<(f64, f64)>, layer: i32) -> Self {
        let n = points.len();
        Self::new(points, vec![layer; n])
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum SegKind {
    Drawn,
    Pass(Seam, i8, f64), // seam, direction, position
}

fn classify(p: (f64, f64), q: (f64, f64)) -> SegKind {
    let on = |v: f64, w: f64| (v - w).abs() < EPS;
    // vertical seam: right edge -> left edge at equal height
    if on(p.0, 1.0) && on(q.0, 0.0) && on(p.1, q.1) {
        return SegKind::Pass(Seam::V, 1, p.1);
    }
    if on(p.0, 0.0) && on(q.0, 1.0) && on(p.1, q.1) {
        return SegKind::Pass(Seam::V, -1, p.1);
    }
    // horizontal seam: top edge -> bottom edge at equal x
    if on(p.1, 1.0) && on(q.1, 0.0) && on(p.0, q.0) {
        return SegKind::Pass(Seam::H, 1, p.0);
    }
    if on(p.1, 0.0) && on(q.1, 1.0) && on(p.0, q.0) {
        return SegKind::Pass(Seam::H, -1, p.0);
    }
    SegKind::Drawn
}

/// Proper intersection of two open segments, returned as parameters along
/// each; endpoints touching are rejected (tiles must be in general position).
fn intersect(
    a0: (f64, f64),
    a1: (f64, f64),
    b0: (f64, f64),
    b1: (f64, f64),
) -> Option<(f64, f64)> {
    let d1 = (a1.0 - a0.0, a1.1 - a0.1);
    let d2 = (b1.0 - b0.0, b1.1 - b0.1);
    let denom = d1.0 * d2.1 - d1.1 * d2.0;
    if denom.abs() < EPS {
        return None;
    }
    let r = (b0.0 - a0.0, b0.1 - a0.1);
    let t = (r.0 * d2.1 - r.1 * d2.0) / denom;
    let u = (r.0 * d1.1 - r.1 * d1.0) / denom;
    const NEAR: f64 = 1e-7;
    let inside = |v: f64| v > -NEAR && v < 1.0 + NEAR;
    if inside(t) && inside(u) {
        let endpointish = |v: f64| v.abs() < NEAR || (v - 1.0).abs() < NEAR;
        if endpointish(t) || endpointish(u) {
            // shared polyline vertices of one strand are fine; anything else
            // means the tile data is degenerate
            if !(endpointish(t) && endpointish(u)) {
                panic!("intersection too close to a segment endpoint; nudge the tile data");
            }
            return None;
        }
        return Some((t, u));
    }
    None
}

/// Compile strands into a `Web`. Component order follows strand order.
pub fn compile(strands: &[Strand]) -> Web {
    #[derive(Debug, Clone, Copy)]
    struct Hit {
        node: usize,   // crossing id
        t: f64,        // parameter along this segment
        over: bool,
        dir: (f64, f64),
    }
    // collect drawn segments
    struct Seg {
        strand: usize,
        idx: usize, // segment index within the strand
        p0: (f64, f64),
        p1: (f64, f64),
        layer: i32,
    }
    let mut segs: Vec<Seg> = Vec::new();
    for (si, s) in strands.iter().enumerate() {
        let n = s.points.len();
        for i in 0..n {
            let p0 = s.points[i];
            let p1 = s.points[(i + 1) % n];
            if classify(p0, p1) == SegKind::Drawn {
                segs.push(Seg { strand: si, idx: i, p0, p1, layer: s.layers[i] });
            }
        }
    }
    // pairwise intersections
    let mut hits: BTreeMap<(usize, usize), Vec<Hit>> = BTreeMap::new(); // (strand, seg idx) -> hits
    let mut crossings_meta: Vec<()> = Vec::new();
    for i in 0..segs.len() {
        for j in (i + 1)..segs.len() {
            let (a, b) = (&segs[i], &segs[j]);
            if a.strand == b.strand && a.idx == b.idx {
                continue;
            }
            if let Some((t, u)) = intersect(a.p0, a.p1, b.p0, b.p1) {
                assert_ne!(a.layer, b.layer, "crossing strands must differ in layer");
                let node = crossings_meta.len();
                crossings_meta.push(());
                let da = (a.p1.0 - a.p0.0, a.p1.1 - a.p0.1);
                let db = (b.p1.0 - b.p0.0, b.p1.1 - b.p0.1);
                hits.entry((a.strand, a.idx)).or_default().push(Hit {
                    node,
                    t,
                    over: a.layer > b.layer,
                    dir: da,
                });
                hits.entry((b.strand, b.idx)).or_default().push(Hit {
                    node,
                    t: u,
                    over: b.layer > a.layer,
                    dir: db,
                });
            }
        }
    }
    for v in hits.values_mut() {
        v.sort_by(|x, y| x.t.partial_cmp(&y.t).unwrap());
    }

    // slot bookkeeping per crossing: [under-in, ., under-out, .]
    #[derive(Default, Clone)]
    struct Slots {
        under_in: Option<ArcId>,
        under_out: Option<ArcId>,
        over_in: Option<ArcId>,
        over_out: Option<ArcId>,
        d_under: (f64, f64),
        d_over: (f64, f64),
    }
    let mut slots: Vec<Slots> = vec![Slots::default(); crossings_meta.len()];

    let mut web = Web::new();
    for s in strands {
        web.roles.push(s.role);
    }
    struct PassRec {
        seam: Seam,
        dir: i8,
        pos: f64,
        arc_in: ArcId,
        arc_out: ArcId,
    }
    let mut passes: Vec<PassRec> = Vec::new();

    for (si, s) in strands.iter().enumerate() {
        let n = s.points.len();
        // gather the cyclic visit list: crossings and passages in order
        enum Visit {
            X { node: usize, over: bool, dir: (f64, f64) },
            P { seam: Seam, dir: i8, pos: f64 },
        }
        let mut visits: Vec<Visit> = Vec::new();
        for i in 0..n {
            let p0 = s.points[i];
            let p1 = s.points[(i + 1) % n];
            match classify(p0, p1) {
                SegKind::Pass(seam, dir, pos) => visits.push(Visit::P { seam, dir, pos }),
                SegKind::Drawn => {
                    if let Some(hs) = hits.get(&(si, i)) {
                        for h in hs {
                            visits.push(Visit::X { node: h.node, over: h.over, dir: h.dir });
                        }
                    }
                }
            }
        }
        if visits.is_empty() {
            // crossingless circle in the square
            web.components.push(Vec::new());
            continue;
        }
        // arcs between consecutive visits
        let m = visits.len();
        let arcs: Vec<ArcId> = (0..m).map(|_| web.fresh_arc()).collect();
        for (i, v) in visits.iter().enumerate() {
            let incoming = arcs[i]; // arrives at visit i
            let outgoing = arcs[(i + 1) % m];
            match v {
                Visit::X { node, over, dir } => {
                    let sl = &mut slots[*node];
                    if *over {
                        sl.over_in = Some(incoming);
                        sl.over_out = Some(outgoing);
                        sl.d_over = *dir;
                    } else {
                        sl.under_in = Some(incoming);
                        sl.under_out = Some(outgoing);
                        sl.d_under = *dir;
                    }
                }
                Visit::P { seam, dir, pos } => {
                    passes.push(PassRec {
                        seam: *seam,
                        dir: *dir,
                        pos: *pos,
                        arc_in: incoming,
                        arc_out: outgoing,
                    });
                }
            }
        }
        web.components.push(arcs);
    }

    // materialize crossings with counterclockwise slot order
    for sl in &slots {
        let (ui, uo, oi, oo) = (
            sl.under_in.expect("both strands present"),
            sl.under_out.unwrap(),
            sl.over_in.unwrap(),
            sl.over_out.unwrap(),
        );
        let det = sl.d_over.0 * sl.d_under.1 - sl.d_over.1 * sl.d_under.0;
        let c = web.crossings.len();
        // positive frame (det > 0): over-strand enters at slot 3
        let arr = if det > 0.0 { [ui, oo, uo, oi] } else { [ui, oi, uo, oo] };
        web.crossings.push(Crossing(arr));
        web.set_head(ui, End::X { c, slot: 0 });
        web.set_tail(uo, End::X { c, slot: 2 });
        if det > 0.0 {
            web.set_head(oi, End::X { c, slot: 3 });
            web.set_tail(oo, End::X { c, slot: 1 });
        } else {
            web.set_head(oi, End::X { c, slot: 1 });
            web.set_tail(oo, End::X { c, slot: 3 });
        }
    }
    for p in passes {
        let pid = web.passages.len();
        web.passages.push(Passage {
            seam: p.seam,
            dir: p.dir,
            pos: p.pos,
            arc_in: p.arc_in,
            arc_out: p.arc_out,
        });
        web.set_head(p.arc_in, End::P { p: pid });
        web.set_tail(p.arc_out, End::P { p: pid });
    }
    web
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::PlanarDiagram;

    /// Positive Hopf link: two overlapping "circles" (diamonds), the second
    /// drawn over on one side and under on the other.
    pub fn hopf_positive() -> PlanarDiagram {
        // component 0: diamond centered (0.4, 0.5); component 1: centered
        // (0.6, 0.5); they cross at two points. Layers arranged so both
        // crossings are positive for suitable orientations.
        let a = Strand::new(
            vec![(0.4, 0.2), (0.7, 0.5), (0.4, 0.8), (0.1, 0.5)],
            vec![0, 0, 0, 0],
        );
        let b = Strand::new(
            vec![(0.6, 0.2), (0.9, 0.5), (0.6, 0.8), (0.3, 0.5)],
            vec![1, 1, -1, -1],
        );
        let web = compile(&[a, b]);
        PlanarDiagram::from_web(web).unwrap()
    }

    #[test]
    fn hopf_compiles_and_validates() {
        let d = hopf_positive();
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.component_count(), 2);
        let rep = d.validate();
        assert!(rep.is_valid(), "violations: {:?}", rep.violations);
        let lk = d.linking_signed().unwrap();
        assert_eq!(lk[0][1].abs(), 1);
    }
}
