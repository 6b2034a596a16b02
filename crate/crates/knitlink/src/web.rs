//! Combinatorial core shared by planar link diagrams and torus tangles.
//!
//! A `Web` is a 4-valent combinatorial map: crossings hold four arc ids
//! counterclockwise from the incoming under-strand (the standard PD slot
//! order), and optional seam passages (degree-2 nodes) encode strands that
//! cross the identified edges of the fundamental square. Components are
//! stored explicitly as ordered, oriented cyclic arc sequences, and every
//! arc records where its tail and head attach; validation cross-checks the
//! redundancy.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type ArcId = u32;

/// Four arc ids counterclockwise from the incoming under-strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing(pub [ArcId; 4]);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Seam {
    V,
    H,
}

/// A degree-2 node where a strand crosses a seam of the fundamental square.
/// `dir = +1` means the strand leaves through the right (V) or top (H) edge
/// and re-enters on the opposite side; `-1` is the reverse.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Passage {
    pub seam: Seam,
    pub dir: i8,
    pub arc_in: ArcId,
    pub arc_out: ArcId,
    /// position along the seam: height (V) or x offset (H); only the order
    /// of positions within one seam is meaningful
    pub pos: f64,
}

/// Where one end of an arc attaches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum End {
    /// crossing `c`, slot 0..3
    X { c: usize, slot: u8 },
    /// passage `p`; head attaches at the inflow side, tail at the outflow
    P { p: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcEnds {
    pub tail: End,
    pub head: End,
}

/// Role tags for components of Dehn-filled diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Role {
    Plain,
    MeridianAxis,
    LongitudeAxis,
    Swatch(usize),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Web {
    pub crossings: Vec<Crossing>,
    pub passages: Vec<Passage>,
    /// ordered, oriented components: cyclic arc sequences (empty = free loop)
    pub components: Vec<Vec<ArcId>>,
    pub roles: Vec<Role>,
    pub arc_ends: BTreeMap<ArcId, ArcEnds>,
    next_arc: ArcId,
}

impl Web {
    pub fn new() -> Self {
        Self {
            crossings: Vec::new(),
            passages: Vec::new(),
            components: Vec::new(),
            roles: Vec::new(),
            arc_ends: BTreeMap::new(),
            next_arc: 0,
        }
    }

    pub fn fresh_arc(&mut self) -> ArcId {
        let a = self.next_arc;
        self.next_arc += 1;
        self.arc_ends.insert(
            a,
            ArcEnds { tail: End::X { c: usize::MAX, slot: 0 }, head: End::X { c: usize::MAX, slot: 0 } },
        );
        a
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn set_tail(&mut self, a: ArcId, e: End) {
        self.arc_ends.get_mut(&a).expect("arc exists").tail = e;
    }

    pub fn set_head(&mut self, a: ArcId, e: End) {
        self.arc_ends.get_mut(&a).expect("arc exists").head = e;
    }

    pub fn ends(&self, a: ArcId) -> ArcEnds {
        self.arc_ends[&a]
    }

    /// Component index owning arc `a`.
    pub fn component_of(&self, a: ArcId) -> Option<usize> {
        self.components
            .iter()
            .position(|comp| comp.contains(&a))
    }

    /// The slot (1 or 3) holding the incoming over-arc of crossing `c`.
    pub fn over_in_slot(&self, c: usize) -> Result<u8> {
        let x = self
            .crossings
            .get(c)
            .ok_or(Error::UnknownCrossing(c))?;
        let a1 = x.0[1];
        let a3 = x.0[3];
        let h1 = self.arc_ends[&a1].head == (End::X { c, slot: 1 });
        let h3 = self.arc_ends[&a3].head == (End::X { c, slot: 3 });
        match (h1, h3) {
            (true, false) => Ok(1),
            (false, true) => Ok(3),
            _ => Err(Error::InvalidDiagram(format!(
                "crossing {c}: over-strand direction unresolved"
            ))),
        }
    }

    /// Sign of crossing `c`: +1 when the over-strand enters at slot 3
    /// (over-direction and under-direction form a positive frame).
    pub fn crossing_sign(&self, c: usize) -> Result<i8> {
        Ok(if self.over_in_slot(c)? == 3 { 1 } else { -1 })
    }

    /// (n_plus, n_minus) over all crossings.
    pub fn writhe_counts(&self) -> Result<(usize, usize)> {
        let mut pos = 0;
        let mut neg = 0;
        for c in 0..self.crossings.len() {
            if self.crossing_sign(c)? > 0 {
                pos += 1;
            } else {
                neg += 1;
            }
        }
        Ok((pos, neg))
    }

    /// All violations found; an empty list means the web is valid.
    pub fn validate(&self) -> Vec<String> {
        let mut bad = Vec::new();
        // 1. arc usage: every arc must appear exactly once as a tail and
        //    once as a head across crossings and passages.
        let mut tails: BTreeMap<ArcId, usize> = BTreeMap::new();
        let mut heads: BTreeMap<ArcId, usize> = BTreeMap::new();
        for (ci, x) in self.crossings.iter().enumerate() {
            for (slot, &a) in x.0.iter().enumerate() {
                let e = End::X { c: ci, slot: slot as u8 };
                match self.arc_ends.get(&a) {
                    None => bad.push(format!("crossing {ci} references unknown arc {a}")),
                    Some(ends) => {
                        let is_tail = ends.tail == e;
                        let is_head = ends.head == e;
                        if is_tail {
                            *tails.entry(a).or_default() += 1;
                        }
                        if is_head {
                            *heads.entry(a).or_default() += 1;
                        }
                        if !is_tail && !is_head {
                            bad.push(format!(
                                "dangling arc {a}: slot {slot} of crossing {ci} not registered"
                            ));
                        }
                    }
                }
            }
        }
        for (pi, p) in self.passages.iter().enumerate() {
            let e = End::P { p: pi };
            if self.arc_ends.get(&p.arc_in).map(|x| x.head) != Some(e) {
                bad.push(format!("passage {pi}: arc_in {} head mismatch", p.arc_in));
            } else {
                *heads.entry(p.arc_in).or_default() += 1;
            }
            if self.arc_ends.get(&p.arc_out).map(|x| x.tail) != Some(e) {
                bad.push(format!("passage {pi}: arc_out {} tail mismatch", p.arc_out));
            } else {
                *tails.entry(p.arc_out).or_default() += 1;
            }
        }
        let mut seen = BTreeSet::new();
        for comp in &self.components {
            for &a in comp {
                if !seen.insert(a) {
                    bad.push(format!("arc {a} listed in more than one component position"));
                }
            }
        }
        for (&a, _) in &self.arc_ends {
            let nt = tails.get(&a).copied().unwrap_or(0);
            let nh = heads.get(&a).copied().unwrap_or(0);
            if nt != 1 || nh != 1 {
                bad.push(format!("dangling arc {a}: {nt} tail uses, {nh} head uses"));
            }
            if !seen.contains(&a) {
                bad.push(format!("arc {a} not in any component"));
            }
        }
        // 2. orientation coherence at crossings: slot 0 is a head, slot 2 a
        //    tail, and slots 1/3 split one head one tail.
        for (ci, x) in self.crossings.iter().enumerate() {
            let at = |slot: u8| End::X { c: ci, slot };
            if self.arc_ends.get(&x.0[0]).map(|e| e.head) != Some(at(0)) {
                bad.push(format!("orientation flip: crossing {ci} slot 0 must be incoming"));
            }
            if self.arc_ends.get(&x.0[2]).map(|e| e.tail) != Some(at(2)) {
                bad.push(format!("orientation flip: crossing {ci} slot 2 must be outgoing"));
            }
            if self.over_in_slot(ci).is_err() {
                bad.push(format!("orientation flip: crossing {ci} over-strand incoherent"));
            }
        }
        // 3. component partition: walking each cycle must step through
        //    junctions (head of one arc = same node as tail of the next).
        for (k, comp) in self.components.iter().enumerate() {
            if comp.is_empty() {
                continue; // free loop
            }
            for i in 0..comp.len() {
                let a = comp[i];
                let b = comp[(i + 1) % comp.len()];
                let (Some(ea), Some(eb)) = (self.arc_ends.get(&a), self.arc_ends.get(&b)) else {
                    continue;
                };
                let ok = match (ea.head, eb.tail) {
                    (End::X { c: c1, slot: s1 }, End::X { c: c2, slot: s2 }) => {
                        c1 == c2
                            && ((s1 == 0 && s2 == 2)
                                || (s1 == 1 && s2 == 3)
                                || (s1 == 3 && s2 == 1))
                    }
                    (End::P { p: p1 }, End::P { p: p2 }) => p1 == p2,
                    _ => false,
                };
                if !ok {
                    bad.push(format!(
                        "bad partition: component {k} breaks between arcs {a} and {b}"
                    ));
                }
            }
        }
        // 4. planarity of the underlying map (genus check per connected
        //    piece, passages counted as degree-2 vertices).
        if bad.is_empty() {
            bad.extend(self.euler_check());
        }
        bad
    }

    /// Next half-edge around a face. Half-edges are arc *ends*: (arc, at
    /// head?) — walking along `arc` toward the given end with the face on
    /// the left, then turning.
    fn face_next(&self, (a, at_head): (ArcId, bool)) -> (ArcId, bool) {
        let e = if at_head { self.arc_ends[&a].head } else { self.arc_ends[&a].tail };
        match e {
            End::X { c, slot } => {
                // leave via the previous slot counterclockwise
                let depart = (slot + 3) % 4;
                let b = self.crossings[c].0[depart as usize];
                // the departing half-edge travels away from the crossing:
                // next face edge is b, walked toward its *other* end
                let b_tail_here = self.arc_ends[&b].tail == (End::X { c, slot: depart });
                (b, b_tail_here)
            }
            End::P { p } => {
                let pass = &self.passages[p];
                if at_head {
                    // arrived at the passage inflow; continue along outflow
                    (pass.arc_out, true)
                } else {
                    (pass.arc_in, false)
                }
            }
        }
    }

    /// Faces as orbits of half-edges; each face lists (arc, walked-to-head).
    pub fn faces(&self) -> Vec<Vec<(ArcId, bool)>> {
        let mut todo: BTreeSet<(ArcId, bool)> = BTreeSet::new();
        for &a in self.arc_ends.keys() {
            todo.insert((a, true));
            todo.insert((a, false));
        }
        let mut faces = Vec::new();
        while let Some(&start) = todo.iter().next() {
            let mut face = Vec::new();
            let mut h = start;
            loop {
                todo.remove(&h);
                face.push(h);
                h = self.face_next(h);
                if h == start {
                    break;
                }
            }
            faces.push(face);
        }
        faces
    }

    /// Euler characteristic check per connected piece: 2 for pieces with no
    /// passages (sphere), 0 when seam passages are present (torus).
    fn euler_check(&self) -> Vec<String> {
        if self.crossings.is_empty() && self.passages.is_empty() {
            return Vec::new();
        }
        // connected pieces of the node graph
        let n_nodes = self.crossings.len() + self.passages.len();
        let mut parent: Vec<usize> = (0..n_nodes).collect();
        fn find(p: &mut Vec<usize>, i: usize) -> usize {
            if p[i] != i {
                let r = find(p, p[i]);
                p[i] = r;
                r
            } else {
                i
            }
        }
        let node_of = |e: End| -> usize {
            match e {
                End::X { c, .. } => c,
                End::P { p } => self.crossings.len() + p,
            }
        };
        for ends in self.arc_ends.values() {
            let u = node_of(ends.tail);
            let v = node_of(ends.head);
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
            }
        }
        let mut piece_v: BTreeMap<usize, i64> = BTreeMap::new();
        let mut piece_e: BTreeMap<usize, i64> = BTreeMap::new();
        let mut piece_f: BTreeMap<usize, i64> = BTreeMap::new();
        let mut piece_has_pass: BTreeMap<usize, bool> = BTreeMap::new();
        for i in 0..n_nodes {
            let r = find(&mut parent, i);
            *piece_v.entry(r).or_default() += 1;
            if i >= self.crossings.len() {
                piece_has_pass.insert(r, true);
            }
        }
        for ends in self.arc_ends.values() {
            let r = find(&mut parent, node_of(ends.tail));
            *piece_e.entry(r).or_default() += 1;
        }
        for face in self.faces() {
            let (a, at_head) = face[0];
            let e = if at_head { self.arc_ends[&a].head } else { self.arc_ends[&a].tail };
            let r = find(&mut parent, node_of(e));
            *piece_f.entry(r).or_default() += 1;
        }
        let mut bad = Vec::new();
        for (&r, &v) in &piece_v {
            let e = piece_e.get(&r).copied().unwrap_or(0);
            let f = piece_f.get(&r).copied().unwrap_or(0);
            let chi = v - e + f;
            let ok = if piece_has_pass.get(&r).copied().unwrap_or(false) {
                // torus map; sparse tangles can have annular faces, which
                // raises the count from 0 back to 2
                chi == 0 || chi == 2
            } else {
                chi == 2
            };
            if !ok {
                bad.push(format!(
                    "piece at node {r} has Euler characteristic {chi}"
                ));
            }
        }
        bad
    }

    /// Merge arc `b` into arc `a` (a's head becomes b's head); used when a
    /// degree-2 junction disappears. `b` is removed everywhere.
    pub fn merge_arcs(&mut self, a: ArcId, b: ArcId) {
        if a == b {
            return;
        }
        let b_head = self.arc_ends[&b].head;
        self.set_head(a, b_head);
        match b_head {
            End::X { c, slot } => self.crossings[c].0[slot as usize] = a,
            End::P { p } => self.passages[p].arc_in = a,
        }
        // also rewrite any other occurrences (b's tail node references)
        for x in &mut self.crossings {
            for s in &mut x.0 {
                if *s == b {
                    *s = a;
                }
            }
        }
        for p in &mut self.passages {
            if p.arc_in == b {
                p.arc_in = a;
            }
            if p.arc_out == b {
                p.arc_out = a;
            }
        }
        for comp in &mut self.components {
            comp.retain(|&x| x != b);
        }
        self.arc_ends.remove(&b);
    }

    /// Remove component `i` with all its crossings; crossings between two
    /// surviving strands are untouched. Passages of the component go away.
    pub fn delete_component(&mut self, i: usize) -> Result<()> {
        if i >= self.components.len() {
            return Err(Error::ComponentOutOfRange(i, self.components.len()));
        }
        let dead: BTreeSet<ArcId> = self.components[i].iter().copied().collect();
        // crossings touching a dead arc
        let mut kill_x: Vec<usize> = Vec::new();
        for (ci, x) in self.crossings.iter().enumerate() {
            if x.0.iter().any(|a| dead.contains(a)) {
                kill_x.push(ci);
            }
        }
        // splice the surviving strand through each killed crossing
        for &ci in &kill_x {
            let x = self.crossings[ci];
            let under = [x.0[0], x.0[2]];
            let over = [x.0[1], x.0[3]];
            let under_dead = under.iter().any(|a| dead.contains(a));
            let over_dead = over.iter().any(|a| dead.contains(a));
            if under_dead && over_dead {
                continue; // both strands vanish
            }
            let (inn, out) = if under_dead {
                // surviving over-strand
                let oi = self.over_in_slot(ci)?;
                let (i_arc, o_arc) = if oi == 1 { (x.0[1], x.0[3]) } else { (x.0[3], x.0[1]) };
                (i_arc, o_arc)
            } else {
                (x.0[0], x.0[2])
            };
            if inn == out {
                // a kink of the survivor through this crossing: the strand
                // closes into itself here; it becomes shorter by one node
                // and the arc survives with both ends elsewhere.
                // Mark ends as dangling; fixed when the crossing is dropped.
                continue;
            }
            self.merge_arcs(inn, out);
        }
        // drop killed crossings and dead passages, remapping indices
        let kill_set: BTreeSet<usize> = kill_x.into_iter().collect();
        let mut xmap: BTreeMap<usize, usize> = BTreeMap::new();
        let mut new_x = Vec::new();
        for (ci, x) in self.crossings.iter().enumerate() {
            if !kill_set.contains(&ci) {
                xmap.insert(ci, new_x.len());
                new_x.push(*x);
            }
        }
        let mut pmap: BTreeMap<usize, usize> = BTreeMap::new();
        let mut new_p = Vec::new();
        for (pi, p) in self.passages.iter().enumerate() {
            if !dead.contains(&p.arc_in) && !dead.contains(&p.arc_out) {
                pmap.insert(pi, new_p.len());
                new_p.push(*p);
            }
        }
        self.crossings = new_x;
        self.passages = new_p;
        // rewrite ends
        let ids: Vec<ArcId> = self.arc_ends.keys().copied().collect();
        for a in ids {
            if dead.contains(&a) {
                self.arc_ends.remove(&a);
                continue;
            }
            let mut ends = self.arc_ends[&a];
            let mut fix = |e: &mut End| match *e {
                End::X { c, slot } => {
                    if let Some(&nc) = xmap.get(&c) {
                        *e = End::X { c: nc, slot };
                    }
                }
                End::P { p } => {
                    if let Some(&np) = pmap.get(&p) {
                        *e = End::P { p: np };
                    }
                }
            };
            fix(&mut ends.tail);
            fix(&mut ends.head);
            self.arc_ends.insert(a, ends);
        }
        self.components.remove(i);
        self.roles.remove(i);
        // components that lost all nodes become free loops; arcs whose end
        // nodes were deleted are removed
        for comp in &mut self.components {
            let keep: Vec<ArcId> = comp
                .iter()
                .copied()
                .filter(|a| {
                    let e = self.arc_ends[a];
                    let alive = |end: End| match end {
                        End::X { c, .. } => c < self.crossings.len(),
                        End::P { p } => p < self.passages.len(),
                    };
                    alive(e.tail) && alive(e.head)
                })
                .collect();
            if keep.len() != comp.len() {
                // every node on this component vanished: it is a free loop
                for a in comp.iter() {
                    if !keep.contains(a) {
                        self.arc_ends.remove(a);
                    }
                }
                comp.clear();
            }
        }
        Ok(())
    }

    /// Signed linking numbers: entry (i,j) = half the signed crossing sum.
    pub fn linking_signed(&self) -> Result<Vec<Vec<i64>>> {
        let n = self.components.len();
        let mut owner: BTreeMap<ArcId, usize> = BTreeMap::new();
        for (k, comp) in self.components.iter().enumerate() {
            for &a in comp {
                owner.insert(a, k);
            }
        }
        let mut sums = vec![vec![0i64; n]; n];
        for c in 0..self.crossings.len() {
            let x = self.crossings[c];
            let under_comp = owner[&x.0[0]];
            let over_comp = owner[&x.0[1]];
            if under_comp != over_comp {
                let s = self.crossing_sign(c)? as i64;
                sums[under_comp][over_comp] += s;
                sums[over_comp][under_comp] += s;
            }
        }
        for row in &mut sums {
            for v in row.iter_mut() {
                debug_assert!(*v % 2 == 0);
                *v /= 2;
            }
        }
        Ok(sums)
    }

    /// Reverse the orientation of component `i` in place. Crossings whose
    /// under-strand belongs to the component are renumbered by rotating the
    /// slots two steps (the new incoming under-strand is the old outgoing
    /// one, and counterclockwise order is preserved).
    pub fn reverse_component(&mut self, i: usize) {
        let arcs: BTreeSet<ArcId> = self.components[i].iter().copied().collect();
        for &a in &arcs {
            let e = self.arc_ends[&a];
            self.arc_ends.insert(a, ArcEnds { tail: e.head, head: e.tail });
        }
        for ci in 0..self.crossings.len() {
            let x = self.crossings[ci];
            // membership by the (pre-rotation) under arcs; the end-swap
            // above does not change arc ids
            if arcs.contains(&x.0[0]) || arcs.contains(&x.0[2]) {
                self.crossings[ci] = Crossing([x.0[2], x.0[3], x.0[0], x.0[1]]);
                let touched: BTreeSet<ArcId> = x.0.iter().copied().collect();
                for a in touched {
                    let mut e = self.arc_ends[&a];
                    let rot = |end: &mut End| {
                        if let End::X { c, slot } = end {
                            if *c == ci {
                                *slot = (*slot + 2) % 4;
                            }
                        }
                    };
                    rot(&mut e.tail);
                    rot(&mut e.head);
                    self.arc_ends.insert(a, e);
                }
            }
        }
        for p in &mut self.passages {
            if arcs.contains(&p.arc_in) {
                std::mem::swap(&mut p.arc_in, &mut p.arc_out);
                p.dir = -p.dir;
            }
        }
        self.components[i].reverse();
    }
}

impl Default for Web {
    fn default() -> Self {
        Self::new()
    }
}
