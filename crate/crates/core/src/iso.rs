//! Isomorphism search between presentations.
//!
//! Two simplicial sets are compared on the nose only through this search;
//! cell identity is never meaningful across presentations. The search is a
//! backtracking assignment over cells in canonical order (dimension, then
//! id), pruned by an iterated face-fingerprint refinement. Candidates are
//! tried in canonical order, making the first isomorphism found
//! deterministic.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use crate::map::Inclusion;
use crate::sset::{CellId, SSet, SimplexRef};

/// A dimension-preserving cell bijection commuting with faces.
#[derive(Debug, Clone)]
pub struct CellIso {
    /// `forward[c]` is the image in the target of source cell `c`.
    pub forward: Vec<CellId>,
}

impl CellIso {
    pub fn apply(&self, c: CellId) -> CellId {
        self.forward[c.index()]
    }

    pub fn apply_simplex(&self, s: &SimplexRef) -> SimplexRef {
        SimplexRef {
            cell: self.apply(s.cell),
            deg: s.deg.clone(),
        }
    }
}

fn fingerprints(x: &SSet, seed: impl Fn(CellId) -> u64) -> Vec<u64> {
    let mut color: Vec<u64> = x
        .cells()
        .map(|c| {
            let mut h = DefaultHasher::new();
            (c.dim as u64).hash(&mut h);
            seed(c.id).hash(&mut h);
            h.finish()
        })
        .collect();
    // a few refinement rounds; faces point strictly down so this stabilizes fast
    for _ in 0..3 {
        let mut next = Vec::with_capacity(color.len());
        for c in x.cells() {
            let mut h = DefaultHasher::new();
            color[c.id.index()].hash(&mut h);
            for (i, f) in x.cell_faces(c.id).iter().enumerate() {
                (i as u64).hash(&mut h);
                color[f.cell.index()].hash(&mut h);
                f.deg.collapsed().hash(&mut h);
            }
            next.push(h.finish());
        }
        color = next;
    }
    color
}

struct Search<'a> {
    x: &'a SSet,
    y: &'a SSet,
    cx: Vec<u64>,
    cy: Vec<u64>,
    forward: Vec<Option<CellId>>,
    backward: Vec<Option<CellId>>,
    order: Vec<CellId>,
}

impl<'a> Search<'a> {
    fn compatible(&self, c: CellId, d: CellId) -> bool {
        if self.x.dim_of(c) != self.y.dim_of(d) || self.cx[c.index()] != self.cy[d.index()] {
            return false;
        }
        // faces of c are lower-dimensional, hence already assigned
        for (i, f) in self.x.cell_faces(c).iter().enumerate() {
            let g = self.y.cell_face(d, i);
            match self.forward[f.cell.index()] {
                Some(img) => {
                    if img != g.cell || f.deg != g.deg {
                        return false;
                    }
                }
                None => return false,
            }
        }
        true
    }

    fn run(&mut self, k: usize) -> bool {
        if k == self.order.len() {
            return true;
        }
        let c = self.order[k];
        let dim = self.x.dim_of(c);
        for &d in self.y.cells_of_dim(dim) {
            if self.backward[d.index()].is_some() || !self.compatible(c, d) {
                continue;
            }
            self.forward[c.index()] = Some(d);
            self.backward[d.index()] = Some(c);
            if self.run(k + 1) {
                return true;
            }
            self.forward[c.index()] = None;
            self.backward[d.index()] = None;
        }
        false
    }
}

fn iso_search(
    x: &SSet,
    y: &SSet,
    sx: impl Fn(CellId) -> u64,
    sy: impl Fn(CellId) -> u64,
) -> Option<CellIso> {
    if x.cap() != y.cap() || x.cell_count() != y.cell_count() {
        return None;
    }
    let top = x.top_dim().max(y.top_dim());
    for d in 0..=top {
        if x.cells_of_dim(d).len() != y.cells_of_dim(d).len() {
            return None;
        }
    }
    let cx = fingerprints(x, sx);
    let cy = fingerprints(y, sy);
    let mut hx: HashMap<u64, usize> = HashMap::new();
    let mut hy: HashMap<u64, usize> = HashMap::new();
    for &v in &cx {
        *hx.entry(v).or_insert(0) += 1;
    }
    for &v in &cy {
        *hy.entry(v).or_insert(0) += 1;
    }
    if hx != hy {
        return None;
    }
    let mut order: Vec<CellId> = x.cells().map(|c| c.id).collect();
    order.sort_by_key(|&c| (x.dim_of(c), c));
    let mut search = Search {
        x,
        y,
        cx,
        cy,
        forward: vec![None; x.cell_count()],
        backward: vec![None; y.cell_count()],
        order,
    };
    if search.run(0) {
        Some(CellIso {
            forward: search.forward.into_iter().map(|o| o.unwrap()).collect(),
        })
    } else {
        None
    }
}

/// Search for an isomorphism of presentations; deterministic under the
/// canonical cell ordering. Labels are ignored.
pub fn iso_check(x: &SSet, y: &SSet) -> Option<CellIso> {
    iso_search(x, y, |_| 0, |_| 0)
}

/// Isomorphism of arrows: a commuting square of isomorphisms between two
/// inclusions. The codomain iso is constrained to carry the image of the
/// first inclusion onto the image of the second; the domain iso is induced
/// and returned alongside.
pub fn iso_check_arrow(a: &Inclusion, b: &Inclusion) -> Option<(CellIso, CellIso)> {
    let adom = a.dom();
    let bdom = b.dom();
    if adom.cell_count() != bdom.cell_count() {
        return None;
    }
    let amap = a.preimage_table();
    let bmap = b.preimage_table();
    let seed_a = |c: CellId| u64::from(amap.contains_key(&c));
    let seed_b = |c: CellId| u64::from(bmap.contains_key(&c));
    // the fingerprint seeds force image cells onto image cells
    let cod_iso = iso_search(a.cod(), b.cod(), seed_a, seed_b)?;
    let mut forward = vec![CellId(0); adom.cell_count()];
    for c in adom.cells() {
        let img = a.cell_image(c.id);
        let mapped = cod_iso.apply(img);
        let pre = bmap.get(&mapped)?;
        forward[c.id.index()] = *pre;
    }
    let dom_iso = CellIso { forward };
    let mut seen = vec![false; bdom.cell_count()];
    for &d in &dom_iso.forward {
        if seen[d.index()] {
            return None;
        }
        seen[d.index()] = true;
    }
    Some((dom_iso, cod_iso))
}

/// Check that a cell bijection commutes with all faces (used to audit
/// search results).
pub fn verify_iso(x: &SSet, y: &SSet, iso: &CellIso) -> bool {
    if iso.forward.len() != x.cell_count() {
        return false;
    }
    for c in x.cells() {
        let d = iso.apply(c.id);
        if y.dim_of(d) != c.dim {
            return false;
        }
        for (i, f) in x.cell_faces(c.id).iter().enumerate() {
            if y.cell_face(d, i) != &iso.apply_simplex(f) {
                return false;
            }
        }
    }
    true
}
