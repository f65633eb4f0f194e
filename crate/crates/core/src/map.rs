//! Maps of simplicial sets and the inclusion refinement.
//!
//! A map is recorded by its values on cells (in normal form in the
//! codomain); the value on an arbitrary simplex follows by precomposing
//! degeneracies. Validation checks commutation with every face.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::sset::{CellId, SSet, SimplexRef};

#[derive(Debug, Clone)]
pub struct SSetMap {
    dom: Arc<SSet>,
    cod: Arc<SSet>,
    assign: Vec<SimplexRef>,
}

impl SSetMap {
    pub fn new(dom: Arc<SSet>, cod: Arc<SSet>, assign: Vec<SimplexRef>) -> Result<Self> {
        let m = SSetMap { dom, cod, assign };
        m.validate()?;
        Ok(m)
    }

    /// Construct without validating; used internally where validity is
    /// guaranteed by construction.
    pub(crate) fn new_unchecked(dom: Arc<SSet>, cod: Arc<SSet>, assign: Vec<SimplexRef>) -> Self {
        SSetMap { dom, cod, assign }
    }

    pub fn identity(x: &Arc<SSet>) -> Self {
        let assign = x
            .cells()
            .map(|c| SimplexRef::nondegenerate(c.id, c.dim))
            .collect();
        SSetMap {
            dom: Arc::clone(x),
            cod: Arc::clone(x),
            assign,
        }
    }

    pub fn dom(&self) -> &Arc<SSet> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<SSet> {
        &self.cod
    }

    pub fn cell_image(&self, c: CellId) -> &SimplexRef {
        &self.assign[c.index()]
    }

    pub fn assignment(&self) -> &[SimplexRef] {
        &self.assign
    }

    /// Image of an arbitrary simplex.
    pub fn image(&self, s: &SimplexRef) -> SimplexRef {
        let v = &self.assign[s.cell.index()];
        if s.deg.is_identity() {
            v.clone()
        } else {
            self.cod.degenerate(v, &s.deg)
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.assign.len() != self.dom.cell_count() {
            return Err(Error::InvalidMap(format!(
                "assignment covers {} of {} cells",
                self.assign.len(),
                self.dom.cell_count()
            )));
        }
        for c in self.dom.cells() {
            let img = &self.assign[c.id.index()];
            if img.cell.index() >= self.cod.cell_count() {
                return Err(Error::InvalidMap("image cell out of range".into()));
            }
            if self.cod.simplex_dim(img) != c.dim {
                return Err(Error::InvalidMap(format!(
                    "cell {} of dim {} mapped to simplex of dim {}",
                    c.id.index(),
                    c.dim,
                    self.cod.simplex_dim(img)
                )));
            }
            for i in 0..=c.dim {
                if c.dim == 0 {
                    break;
                }
                let want = self.cod.apply_face(img, i);
                let got = self.image(self.dom.cell_face(c.id, i));
                if want != got {
                    return Err(Error::InvalidMap(format!(
                        "face {} of cell {} does not commute",
                        i,
                        c.id.index()
                    )));
                }
            }
        }
        Ok(())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SSetMap) -> SSetMap {
        debug_assert!(
            Arc::ptr_eq(&other.cod, &self.dom) || other.cod.same_presentation(&self.dom),
            "composition domain mismatch"
        );
        let assign = other
            .assign
            .iter()
            .map(|s| self.image(s))
            .collect();
        SSetMap {
            dom: Arc::clone(&other.dom),
            cod: Arc::clone(&self.cod),
            assign,
        }
    }

    /// Monomorphism test: cells map to distinct non-degenerate cells.
    pub fn is_inclusion(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        for s in &self.assign {
            if !s.is_nondegenerate() || !seen.insert(s.cell) {
                return false;
            }
        }
        true
    }

    /// Pointwise equality of two parallel maps.
    pub fn same_as(&self, other: &SSetMap) -> bool {
        self.assign == other.assign
    }
}

/// A map whose cells hit distinct non-degenerate cells; equivalently, a
/// levelwise-injective map.
#[derive(Debug, Clone)]
pub struct Inclusion {
    map: SSetMap,
}

impl Inclusion {
    pub fn new(map: SSetMap) -> Result<Self> {
        if !map.is_inclusion() {
            return Err(Error::NotInclusion(
                "cells do not map injectively to non-degenerate cells".into(),
            ));
        }
        Ok(Inclusion { map })
    }

    pub fn identity(x: &Arc<SSet>) -> Self {
        Inclusion {
            map: SSetMap::identity(x),
        }
    }

    /// The inclusion determined by a parent-cell list (as produced by
    /// subcomplex extraction): new cell `i` maps to `parents[i]`.
    pub fn from_parent_cells(dom: Arc<SSet>, cod: Arc<SSet>, parents: &[CellId]) -> Result<Self> {
        let assign = parents
            .iter()
            .enumerate()
            .map(|(i, &p)| SimplexRef::nondegenerate(p, dom.dim_of(CellId(i as u32))))
            .collect();
        let map = SSetMap::new(dom, cod, assign)?;
        Inclusion::new(map)
    }

    pub fn map(&self) -> &SSetMap {
        &self.map
    }

    pub fn dom(&self) -> &Arc<SSet> {
        self.map.dom()
    }

    pub fn cod(&self) -> &Arc<SSet> {
        self.map.cod()
    }

    pub fn cell_image(&self, c: CellId) -> CellId {
        self.map.cell_image(c).cell
    }

    /// Codomain cell -> domain cell, for cells in the image.
    pub fn preimage_table(&self) -> HashMap<CellId, CellId> {
        self.map
            .assign
            .iter()
            .enumerate()
            .map(|(i, s)| (s.cell, CellId(i as u32)))
            .collect()
    }
}

/// Build the simplicial map induced by a vertex assignment, when the
/// codomain is vertex-determined (distinct cells have distinct vertex
/// words). The image of a cell is read off by mapping its vertex word and
/// normalizing repeats as degeneracies.
pub fn map_from_vertex_assignment(
    dom: &Arc<SSet>,
    cod: &Arc<SSet>,
    vmap: &HashMap<CellId, CellId>,
) -> Result<SSetMap> {
    let index = cod.vertex_word_index()?;
    let mut assign = Vec::with_capacity(dom.cell_count());
    for c in dom.cells() {
        let word = dom.vertices_of(&SimplexRef::nondegenerate(c.id, c.dim));
        let mapped: Vec<CellId> = word
            .iter()
            .map(|v| {
                vmap.get(v).copied().ok_or_else(|| {
                    Error::InvalidMap(format!("vertex {} lacks an image", v.index()))
                })
            })
            .collect::<Result<_>>()?;
        // split repeats into a degeneracy on the deduplicated word
        let mut dedup = Vec::new();
        let mut collapsed = Vec::new();
        for (i, &v) in mapped.iter().enumerate() {
            if i > 0 && v == mapped[i - 1] {
                collapsed.push(i - 1);
            } else {
                dedup.push(v);
            }
        }
        let target = index.get(&dedup).ok_or_else(|| {
            Error::InvalidMap(format!(
                "no codomain cell on vertex word {:?}",
                dedup.iter().map(|c| c.index()).collect::<Vec<_>>()
            ))
        })?;
        let deg = crate::ordinal::DegeneracyOp::new(c.dim, collapsed)?;
        assign.push(SimplexRef {
            cell: *target,
            deg,
        });
    }
    SSetMap::new(Arc::clone(dom), Arc::clone(cod), assign)
}
