//! Dimension-capped simplicial sets presented by non-degenerate cells with
//! normalized face data.
//!
//! Every simplex has a unique Eilenberg-Zilber normal form: a cell (a
//! non-degenerate simplex) together with a degeneracy operator. Face tables
//! store, for each cell of dimension `d >= 1`, its `d+1` faces in normal
//! form. All other simplex computations reduce to [`SSet::apply_ordinal`].

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ordinal::{surjections, DegeneracyOp, OrdinalMap};

/// Validity horizon of a presentation.
///
/// `All` means the cell data is exact in every dimension (the object is
/// finite-dimensional and fully presented). `UpTo(d)` means dimensions
/// `0..=d` are complete and nothing is known above; requests beyond `d`
/// fail loudly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cap {
    All,
    UpTo(usize),
}

impl Cap {
    pub fn admits(&self, dim: usize) -> bool {
        match self {
            Cap::All => true,
            Cap::UpTo(d) => dim <= *d,
        }
    }

    pub fn min(self, other: Cap) -> Cap {
        match (self, other) {
            (Cap::All, c) | (c, Cap::All) => c,
            (Cap::UpTo(a), Cap::UpTo(b)) => Cap::UpTo(a.min(b)),
        }
    }

    pub fn bound(&self) -> Option<usize> {
        match self {
            Cap::All => None,
            Cap::UpTo(d) => Some(*d),
        }
    }
}

impl std::fmt::Display for Cap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Cap::All => write!(f, "all"),
            Cap::UpTo(d) => write!(f, "{}", d),
        }
    }
}

/// Index of a non-degenerate cell within one [`SSet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellId(pub u32);

impl CellId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone)]
pub struct Cell {
    pub id: CellId,
    pub dim: usize,
    pub label: Option<String>,
}

/// A simplex in Eilenberg-Zilber normal form: a cell with a degeneracy
/// operator applied to it. The simplex dimension is
/// `cell.dim + deg.collapsed().len()`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexRef {
    pub cell: CellId,
    pub deg: DegeneracyOp,
}

impl SimplexRef {
    pub fn nondegenerate(cell: CellId, dim: usize) -> Self {
        SimplexRef {
            cell,
            deg: DegeneracyOp::identity(dim),
        }
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.deg.is_identity()
    }
}

/// A finite simplicial set, presented by cells and normalized faces.
#[derive(Debug, Clone)]
pub struct SSet {
    cap: Cap,
    cells: Vec<Cell>,
    by_dim: Vec<Vec<CellId>>,
    /// `faces[c]` has `dim(c) + 1` entries for cells of dimension >= 1.
    faces: Vec<Vec<SimplexRef>>,
}

/// Raw data for one cell handed to the builder.
pub struct CellData {
    pub dim: usize,
    pub label: Option<String>,
    /// Normal-form faces; must be empty exactly when `dim == 0`.
    pub faces: Vec<SimplexRef>,
}

impl SSet {
    /// Build and validate a presentation. Cells must be listed in an order
    /// where every face target precedes its cofaces (dimension order works).
    pub fn build(cap: Cap, data: Vec<CellData>) -> Result<Arc<SSet>> {
        let mut cells = Vec::with_capacity(data.len());
        let mut faces = Vec::with_capacity(data.len());
        let mut by_dim: Vec<Vec<CellId>> = Vec::new();
        for (i, d) in data.into_iter().enumerate() {
            let id = CellId(i as u32);
            if !cap.admits(d.dim) {
                return Err(Error::InvalidSSet(format!(
                    "cell of dimension {} above cap {}",
                    d.dim, cap
                )));
            }
            if d.dim == 0 && !d.faces.is_empty() {
                return Err(Error::InvalidSSet("vertex with faces".into()));
            }
            if d.dim >= 1 && d.faces.len() != d.dim + 1 {
                return Err(Error::InvalidSSet(format!(
                    "cell {} of dim {} has {} faces",
                    i,
                    d.dim,
                    d.faces.len()
                )));
            }
            if by_dim.len() <= d.dim {
                by_dim.resize(d.dim + 1, Vec::new());
            }
            by_dim[d.dim].push(id);
            cells.push(Cell {
                id,
                dim: d.dim,
                label: d.label,
            });
            faces.push(d.faces);
        }
        let s = SSet {
            cap,
            cells,
            by_dim,
            faces,
        };
        s.validate()?;
        Ok(Arc::new(s))
    }

    pub fn cap(&self) -> Cap {
        self.cap
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter()
    }

    pub fn cell(&self, id: CellId) -> &Cell {
        &self.cells[id.index()]
    }

    pub fn dim_of(&self, id: CellId) -> usize {
        self.cells[id.index()].dim
    }

    pub fn label(&self, id: CellId) -> Option<&str> {
        self.cells[id.index()].label.as_deref()
    }

    /// Largest dimension carrying a cell.
    pub fn top_dim(&self) -> usize {
        self.by_dim.len().saturating_sub(1)
    }

    pub fn cells_of_dim(&self, dim: usize) -> &[CellId] {
        if dim < self.by_dim.len() {
            &self.by_dim[dim]
        } else {
            &[]
        }
    }

    pub fn cell_face(&self, id: CellId, i: usize) -> &SimplexRef {
        &self.faces[id.index()][i]
    }

    pub fn cell_faces(&self, id: CellId) -> &[SimplexRef] {
        &self.faces[id.index()]
    }

    pub fn simplex_dim(&self, s: &SimplexRef) -> usize {
        self.dim_of(s.cell) + s.deg.collapsed().len()
    }

    fn validate(&self) -> Result<()> {
        for c in &self.cells {
            if c.dim == 0 {
                continue;
            }
            for (i, f) in self.faces[c.id.index()].iter().enumerate() {
                if f.cell.index() >= self.cells.len() {
                    return Err(Error::InvalidSSet(format!(
                        "face {} of cell {} references missing cell",
                        i,
                        c.id.index()
                    )));
                }
                let fd = self.simplex_dim(f);
                if fd + 1 != c.dim {
                    return Err(Error::InvalidSSet(format!(
                        "face {} of cell {} has dim {} (expected {})",
                        i,
                        c.id.index(),
                        fd,
                        c.dim - 1
                    )));
                }
                if self.dim_of(f.cell) >= c.dim {
                    return Err(Error::InvalidSSet(
                        "face target not of strictly smaller dimension".into(),
                    ));
                }
            }
        }
        self.check_simplicial_identities()
    }

    /// `d_i d_j = d_{j-1} d_i` for `i < j`, exhaustively over all cells.
    pub fn check_simplicial_identities(&self) -> Result<()> {
        for c in &self.cells {
            if c.dim < 2 {
                continue;
            }
            let s = SimplexRef::nondegenerate(c.id, c.dim);
            for j in 1..=c.dim {
                for i in 0..j {
                    let a = self.apply_face(&self.apply_face(&s, j), i);
                    let b = self.apply_face(&self.apply_face(&s, i), j - 1);
                    if a != b {
                        return Err(Error::InvalidSSet(format!(
                            "simplicial identity fails on cell {} (d_{} d_{} != d_{} d_{})",
                            c.id.index(),
                            i,
                            j,
                            j - 1,
                            i
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Normal form of `X(f)(cell)` for an arbitrary monotone `f`.
    pub fn apply_ordinal_to_cell(&self, cell: CellId, f: &OrdinalMap) -> SimplexRef {
        debug_assert_eq!(f.target_dim(), self.dim_of(cell));
        let (surj, inj) = f.factorize();
        if inj.is_identity() {
            return SimplexRef {
                cell,
                deg: surj,
            };
        }
        // peel the largest omitted index via the stored face table
        let omitted = inj.omitted();
        let a = *omitted.last().unwrap();
        let stored = &self.faces[cell.index()][a];
        // f = d^a ∘ f' where f' has target [dim-1]
        let dim = self.dim_of(cell);
        let fp_values: Vec<usize> = f
            .values()
            .iter()
            .map(|&v| if v > a { v - 1 } else { v })
            .collect();
        let fp = OrdinalMap::new(dim - 1, fp_values).unwrap();
        // X(f)(cell) = X(f')(X(d^a)(cell)) = X(stored.deg ∘ f')(stored.cell)
        let g = stored.deg.as_ordinal().compose(&fp);
        self.apply_ordinal_to_cell(stored.cell, &g)
    }

    /// Normal form of `X(f)(s)` for a simplex in normal form.
    pub fn apply_ordinal(&self, s: &SimplexRef, f: &OrdinalMap) -> SimplexRef {
        debug_assert_eq!(f.target_dim(), self.simplex_dim(s));
        let g = s.deg.as_ordinal().compose(f);
        self.apply_ordinal_to_cell(s.cell, &g)
    }

    /// `d_i` of a simplex of dimension `d >= 1`.
    pub fn apply_face(&self, s: &SimplexRef, i: usize) -> SimplexRef {
        let d = self.simplex_dim(s);
        assert!(d >= 1 && i <= d, "face index out of range");
        self.apply_ordinal(s, &OrdinalMap::coface(d, i))
    }

    /// `s_i` of a simplex.
    pub fn apply_degeneracy(&self, s: &SimplexRef, i: usize) -> SimplexRef {
        let d = self.simplex_dim(s);
        assert!(i <= d);
        self.apply_ordinal(s, &OrdinalMap::codegeneracy(d, i))
    }

    /// Precompose the presentation degeneracy: `X(eta)(s)` for a surjection.
    pub fn degenerate(&self, s: &SimplexRef, eta: &DegeneracyOp) -> SimplexRef {
        debug_assert_eq!(eta.target_dim(), self.simplex_dim(s));
        SimplexRef {
            cell: s.cell,
            deg: s.deg.compose(eta),
        }
    }

    /// All simplices of dimension `dim`, in canonical order.
    pub fn simplices(&self, dim: usize) -> Result<Vec<SimplexRef>> {
        if !self.cap.admits(dim) {
            return Err(Error::CapExceeded {
                needed: dim,
                cap: self.cap.bound().unwrap_or(usize::MAX),
            });
        }
        let mut out = Vec::new();
        for k in 0..=dim.min(self.top_dim()) {
            for &c in self.cells_of_dim(k) {
                for eta in surjections(dim, k) {
                    out.push(SimplexRef { cell: c, deg: eta });
                }
            }
        }
        out.sort();
        Ok(out)
    }

    pub fn simplex_count(&self, dim: usize) -> Result<usize> {
        Ok(self.simplices(dim)?.len())
    }

    /// The ordered vertex cells of a simplex.
    pub fn vertices_of(&self, s: &SimplexRef) -> Vec<CellId> {
        let d = self.simplex_dim(s);
        (0..=d)
            .map(|v| self.apply_ordinal(s, &OrdinalMap::vertex(d, v)).cell)
            .collect()
    }

    /// Lookup table vertex-word -> cell, available when distinct cells have
    /// distinct vertex words (true for all shape-like complexes here).
    pub fn vertex_word_index(&self) -> Result<HashMap<Vec<CellId>, CellId>> {
        let mut map = HashMap::new();
        for c in &self.cells {
            let w = self.vertices_of(&SimplexRef::nondegenerate(c.id, c.dim));
            if map.insert(w, c.id).is_some() {
                return Err(Error::InvalidSSet(
                    "two cells share a vertex word; complex is not vertex-determined".into(),
                ));
            }
        }
        Ok(map)
    }

    /// The smallest face-closed cell set containing the seeds.
    pub fn face_closure(&self, seeds: &[CellId]) -> BTreeSet<CellId> {
        let mut set: BTreeSet<CellId> = BTreeSet::new();
        let mut stack: Vec<CellId> = seeds.to_vec();
        while let Some(c) = stack.pop() {
            if !set.insert(c) {
                continue;
            }
            for f in &self.faces[c.index()] {
                if !set.contains(&f.cell) {
                    stack.push(f.cell);
                }
            }
        }
        set
    }

    /// Drop cells above `d`; the result is truncated at `d`.
    pub fn truncate(&self, d: usize) -> Result<Arc<SSet>> {
        if !self.cap.admits(d) {
            return Err(Error::CapExceeded {
                needed: d,
                cap: self.cap.bound().unwrap_or(usize::MAX),
            });
        }
        let keep: Vec<CellId> = self
            .cells
            .iter()
            .filter(|c| c.dim <= d)
            .map(|c| c.id)
            .collect();
        let (s, _) = self.subcomplex_raw(&keep, Cap::UpTo(d));
        Ok(s)
    }

    /// The opposite simplicial set: reverse the vertex order of every cell.
    pub fn opposite(&self) -> Arc<SSet> {
        let data = self
            .cells
            .iter()
            .map(|c| {
                let d = c.dim;
                let faces = if d == 0 {
                    Vec::new()
                } else {
                    (0..=d)
                        .map(|i| {
                            let f = &self.faces[c.id.index()][d - i];
                            SimplexRef {
                                cell: f.cell,
                                deg: f.deg.reversed(),
                            }
                        })
                        .collect()
                };
                CellData {
                    dim: d,
                    label: c.label.clone(),
                    faces,
                }
            })
            .collect();
        SSet::build(self.cap, data).expect("opposite of a valid sset is valid")
    }

    /// Reinterpret a simplex of `self` inside `self.opposite()`.
    pub fn simplex_to_opposite(&self, s: &SimplexRef) -> SimplexRef {
        SimplexRef {
            cell: s.cell,
            deg: s.deg.reversed(),
        }
    }

    /// Build the subcomplex on a face-closed cell set, with the inclusion
    /// data (new id -> parent id). Cells keep their relative order.
    pub(crate) fn subcomplex_raw(&self, keep: &[CellId], cap: Cap) -> (Arc<SSet>, Vec<CellId>) {
        let mut sorted: Vec<CellId> = keep.to_vec();
        sorted.sort_by_key(|c| (self.dim_of(*c), *c));
        sorted.dedup();
        let mut back = HashMap::new();
        for (i, &c) in sorted.iter().enumerate() {
            back.insert(c, CellId(i as u32));
        }
        let data = sorted
            .iter()
            .map(|&c| {
                let cell = self.cell(c);
                let faces = self.faces[c.index()]
                    .iter()
                    .map(|f| SimplexRef {
                        cell: *back.get(&f.cell).expect("cell set not face-closed"),
                        deg: f.deg.clone(),
                    })
                    .collect();
                CellData {
                    dim: cell.dim,
                    label: cell.label.clone(),
                    faces,
                }
            })
            .collect();
        let s = SSet::build(cap, data).expect("subcomplex of a valid sset is valid");
        (s, sorted)
    }

    /// True when both presentations have identical cells and face tables
    /// (labels ignored).
    pub fn same_presentation(&self, other: &SSet) -> bool {
        if self.cap != other.cap || self.cells.len() != other.cells.len() {
            return false;
        }
        for (a, b) in self.cells.iter().zip(other.cells.iter()) {
            if a.dim != b.dim {
                return false;
            }
        }
        self.faces == other.faces
    }
}

/// A face-closed collection of cells of a parent complex.
#[derive(Debug, Clone)]
pub struct Subcomplex {
    pub parent: Arc<SSet>,
    pub cells: BTreeSet<CellId>,
}

impl Subcomplex {
    pub fn generated(parent: &Arc<SSet>, seeds: &[CellId]) -> Subcomplex {
        Subcomplex {
            parent: Arc::clone(parent),
            cells: parent.face_closure(seeds),
        }
    }

    pub fn union(&self, other: &Subcomplex) -> Subcomplex {
        debug_assert!(Arc::ptr_eq(&self.parent, &other.parent));
        Subcomplex {
            parent: Arc::clone(&self.parent),
            cells: self.cells.union(&other.cells).copied().collect(),
        }
    }

    pub fn contains(&self, c: CellId) -> bool {
        self.cells.contains(&c)
    }

    /// Materialize as an [`SSet`] together with the inclusion into the
    /// parent (as the list parent-cell-of-new-cell).
    pub fn extract(&self, cap: Cap) -> (Arc<SSet>, Vec<CellId>) {
        let keep: Vec<CellId> = self.cells.iter().copied().collect();
        self.parent.subcomplex_raw(&keep, cap)
    }
}

/// Disjoint union of two simplicial sets.
pub fn disjoint_union(x: &Arc<SSet>, y: &Arc<SSet>) -> Arc<SSet> {
    let cap = x.cap().min(y.cap());
    let mut data = Vec::new();
    let mut order: Vec<(usize, bool, CellId)> = Vec::new();
    for c in x.cells() {
        order.push((c.dim, false, c.id));
    }
    for c in y.cells() {
        order.push((c.dim, true, c.id));
    }
    order.sort();
    let mut xmap = HashMap::new();
    let mut ymap = HashMap::new();
    for (i, &(_, right, c)) in order.iter().enumerate() {
        if right {
            ymap.insert(c, CellId(i as u32));
        } else {
            xmap.insert(c, CellId(i as u32));
        }
    }
    for &(dim, right, c) in &order {
        let (src, map): (&SSet, &HashMap<CellId, CellId>) = if right {
            (y, &ymap)
        } else {
            (x, &xmap)
        };
        let faces = src
            .cell_faces(c)
            .iter()
            .map(|f| SimplexRef {
                cell: map[&f.cell],
                deg: f.deg.clone(),
            })
            .collect();
        data.push(CellData {
            dim,
            label: src.cell(c).label.clone(),
            faces,
        });
    }
    SSet::build(cap, data).expect("disjoint union of valid ssets is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::delta;

    #[test]
    fn delta_basics() {
        let d2 = delta(2);
        assert_eq!(d2.cells_of_dim(0).len(), 3);
        assert_eq!(d2.cells_of_dim(1).len(), 3);
        assert_eq!(d2.cells_of_dim(2).len(), 1);
        assert_eq!(d2.cap(), Cap::All);
    }

    #[test]
    fn face_of_degenerate_vertex() {
        // d_0 of s_0(v) is v
        let d1 = delta(1);
        let v = d1.cells_of_dim(0)[0];
        let sv = d1.apply_degeneracy(&SimplexRef::nondegenerate(v, 0), 0);
        assert_eq!(d1.simplex_dim(&sv), 1);
        let back = d1.apply_face(&sv, 0);
        assert_eq!(back, SimplexRef::nondegenerate(v, 0));
    }

    #[test]
    fn delta1_edge_faces() {
        // d_1 of the nondegenerate edge of Delta[1] is vertex 0
        let d1 = delta(1);
        let e = d1.cells_of_dim(1)[0];
        let f = d1.apply_face(&SimplexRef::nondegenerate(e, 1), 1);
        assert!(f.is_nondegenerate());
        assert_eq!(d1.label(f.cell), Some("0"));
        let f0 = d1.apply_face(&SimplexRef::nondegenerate(e, 1), 0);
        assert_eq!(d1.label(f0.cell), Some("1"));
    }

    #[test]
    fn normalization_via_identities() {
        // In Delta[2]: d_1 s_0 = id on the edge 0->2, checked against direct
        // composition of the underlying monotone maps.
        let d2 = delta(2);
        let idx = d2.vertex_word_index().unwrap();
        let v0 = idx[&vec![d2.cells_of_dim(0)[0]]];
        let _ = v0;
        let e02 = d2
            .cells()
            .find(|c| c.label.as_deref() == Some("0.2"))
            .unwrap()
            .id;
        let e = SimplexRef::nondegenerate(e02, 1);
        let s0e = d2.apply_degeneracy(&e, 0);
        let back = d2.apply_face(&s0e, 1);
        assert_eq!(back, e);
        // direct route: the composite s^0 then d^1 on monotone maps is the identity
        let comp = OrdinalMap::codegeneracy(1, 0).compose(&OrdinalMap::coface(2, 1));
        assert!(comp.is_identity());
    }

    #[test]
    fn simplex_enumeration_counts() {
        // |Delta[2]_2| = 10 monotone maps [2]->[2]
        let d2 = delta(2);
        assert_eq!(d2.simplex_count(2).unwrap(), 10);
        // EZ uniqueness: distinct normal forms
        let all = d2.simplices(2).unwrap();
        let set: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(set.len(), all.len());
    }

    #[test]
    fn truncate_and_cap_errors() {
        let d3 = delta(3);
        let t = d3.truncate(1).unwrap();
        assert_eq!(t.cells_of_dim(2).len(), 0);
        assert_eq!(t.cap(), Cap::UpTo(1));
        assert!(t.simplices(2).is_err());
    }

    #[test]
    fn opposite_involutive() {
        let d3 = delta(3);
        let op = d3.opposite();
        op.check_simplicial_identities().unwrap();
        let back = op.opposite();
        assert!(back.same_presentation(&d3));
    }
}
