//! Oriented link diagrams in the plane / S³.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freegroup::{FreeWord, Presentation};
use crate::web::{ArcId, End, Role, Web};

/// An oriented link diagram: a 4-valent planar map with ordered components.
/// Links are treated as ordered sets throughout, so component order is
/// stable under every operation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlanarDiagram {
    pub(crate) web: Web,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl PlanarDiagram {
    pub fn from_web(web: Web) -> Result<Self> {
        if !web.passages.is_empty() {
            return Err(Error::InvalidDiagram(
                "planar diagram cannot contain seam passages".into(),
            ));
        }
        Ok(Self { web })
    }

    pub(crate) fn web(&self) -> &Web {
        &self.web
    }

    /// The empty diagram with `n` crossingless circles.
    pub fn unlink(n: usize) -> Self {
        let mut web = Web::new();
        for _ in 0..n {
            web.components.push(Vec::new());
            web.roles.push(Role::Plain);
        }
        Self { web }
    }

    pub fn crossing_count(&self) -> usize {
        self.web.crossing_count()
    }

    pub fn component_count(&self) -> usize {
        self.web.component_count()
    }

    pub fn components(&self) -> &[Vec<ArcId>] {
        &self.web.components
    }

    pub fn roles(&self) -> &[Role] {
        &self.web.roles
    }

    pub fn validate(&self) -> ValidationReport {
        ValidationReport {
            violations: self.web.validate(),
        }
    }

    pub fn crossing_sign(&self, c: usize) -> Result<i8> {
        self.web.crossing_sign(c)
    }

    pub fn writhe_counts(&self) -> Result<(usize, usize)> {
        self.web.writhe_counts()
    }

    /// Diagram with component `i` (and all its crossings) removed.
    pub fn delete_component(&self, i: usize) -> Result<Self> {
        let mut web = self.web.clone();
        web.delete_component(i)?;
        Ok(Self { web })
    }

    /// Switch every crossing (mirror image through the plane).
    pub fn mirror(&self) -> Self {
        let mut web = self.web.clone();
        for ci in 0..web.crossings.len() {
            // swapping the over/under strands: the old over becomes the new
            // under. New slot 0 = old incoming over, and counterclockwise
            // order restarts there.
            let x = web.crossings[ci];
            let oi = web.over_in_slot(ci).expect("coherent");
            let rot = oi; // rotate so old over-in sits at new slot 0
            let new = [
                x.0[rot as usize],
                x.0[(rot as usize + 1) % 4],
                x.0[(rot as usize + 2) % 4],
                x.0[(rot as usize + 3) % 4],
            ];
            web.crossings[ci] = crate::web::Crossing(new);
            let touched: std::collections::BTreeSet<ArcId> = x.0.iter().copied().collect();
            for a in touched {
                let mut e = web.arc_ends[&a];
                let fix = |end: &mut End| {
                    if let End::X { c, slot } = end {
                        if *c == ci {
                            *slot = (*slot + 4 - rot) % 4;
                        }
                    }
                };
                fix(&mut e.tail);
                fix(&mut e.head);
                web.arc_ends.insert(a, e);
            }
        }
        Self { web }
    }

    /// Is the underlying projection connected (free loops count as separate
    /// pieces)? Split sublinks make several invariants degenerate.
    pub fn is_connected_projection(&self) -> bool {
        if self.web.components.iter().any(|c| c.is_empty()) {
            return self.web.components.len() == 1 && self.web.crossings.is_empty();
        }
        if self.web.crossings.is_empty() {
            return self.web.components.len() <= 1;
        }
        // union-find over crossings through shared arcs
        let n = self.web.crossings.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut Vec<usize>, i: usize) -> usize {
            if p[i] != i {
                let r = find(p, p[i]);
                p[i] = r;
                r
            } else {
                i
            }
        }
        let mut arc_home: BTreeMap<ArcId, usize> = BTreeMap::new();
        for (ci, x) in self.web.crossings.iter().enumerate() {
            for &a in &x.0 {
                if let Some(&cj) = arc_home.get(&a) {
                    let (r1, r2) = (find(&mut parent, ci), find(&mut parent, cj));
                    if r1 != r2 {
                        parent[r1] = r2;
                    }
                } else {
                    arc_home.insert(a, ci);
                }
            }
        }
        let r0 = find(&mut parent, 0);
        (1..n).all(|i| find(&mut parent, i) == r0)
    }

    /// Wirtinger presentation: one generator per over-arc, one relator per
    /// crossing. Crossingless components contribute a free generator.
    pub fn wirtinger(&self) -> Result<Presentation> {
        let web = &self.web;
        // union-find on arcs: glue over-in to over-out at each crossing
        let mut parent: BTreeMap<ArcId, ArcId> = BTreeMap::new();
        for &a in web.arc_ends.keys() {
            parent.insert(a, a);
        }
        fn find(p: &mut BTreeMap<ArcId, ArcId>, a: ArcId) -> ArcId {
            let mut a = a;
            while p[&a] != a {
                let next = p[&p[&a]];
                p.insert(a, next);
                a = next;
            }
            a
        }
        for ci in 0..web.crossings.len() {
            let x = web.crossings[ci];
            let (r1, r3) = (find(&mut parent, x.0[1]), find(&mut parent, x.0[3]));
            if r1 != r3 {
                parent.insert(r1, r3);
            }
        }
        // generator numbering: in component order, then arc order
        let mut gen_of: BTreeMap<ArcId, usize> = BTreeMap::new();
        let mut generators = Vec::new();
        let mut gen_component = Vec::new();
        for (k, comp) in web.components.iter().enumerate() {
            if comp.is_empty() {
                // free loop: a generator with no relations
                generators.push(format!("x{}", generators.len()));
                gen_component.push(k);
                continue;
            }
            for &a in comp {
                let r = find(&mut parent, a);
                if !gen_of.contains_key(&r) {
                    gen_of.insert(r, generators.len());
                    generators.push(format!("x{}", generators.len()));
                    gen_component.push(k);
                }
            }
        }
        // one relator per crossing
        let mut relators = Vec::new();
        for ci in 0..web.crossings.len() {
            let x = web.crossings[ci];
            let g_in = gen_of[&find(&mut parent, x.0[0])];
            let g_out = gen_of[&find(&mut parent, x.0[2])];
            let g_ov = gen_of[&find(&mut parent, x.0[1])];
            let sign = web.crossing_sign(ci)?;
            // positive crossing: x_out = x_ov x_in x_ov^{-1}
            // negative crossing: x_out = x_ov^{-1} x_in x_ov
            let e = i32::from(sign);
            let r = FreeWord::from_syllables(vec![
                (g_out, 1),
                (g_ov, e),
                (g_in, -1),
                (g_ov, -e),
            ]);
            relators.push(r);
        }
        let p = Presentation {
            generators,
            relators,
            gen_component,
            n_components: web.components.len(),
        };
        p.validate()?;
        Ok(p)
    }

    /// Signed linking matrix (i, j) = ½ Σ ε over crossings between the two
    /// components; the diagonal is 0 by convention.
    pub fn linking_signed(&self) -> Result<Vec<Vec<i64>>> {
        self.web.linking_signed()
    }
}
