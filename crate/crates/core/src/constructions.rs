//! Path spaces (décalage) and edgewise subdivision.
//!
//! Both reindex an existing simplicial set: path-space `n`-simplices are
//! `(n+1)`-simplices of the base, edgewise `n`-simplices are `(2n+1)`-
//! simplices. Degenerate base simplices may become non-degenerate here, so
//! cells are recomputed from scratch by the materializer rather than reused.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::materialize::{materialize, materialize_exact, LevelData, Materialized};
use crate::ordinal::OrdinalMap;
use crate::sset::{Cap, SSet, SimplexRef};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathSide {
    Left,
    Right,
}

pub struct PathSpaceData {
    pub base: Arc<SSet>,
    pub side: PathSide,
}

impl LevelData for PathSpaceData {
    type Simplex = SimplexRef;

    fn level(&self, n: usize) -> Result<Vec<SimplexRef>> {
        self.base.simplices(n + 1)
    }

    fn face(&self, s: &SimplexRef, _n: usize, i: usize) -> SimplexRef {
        match self.side {
            PathSide::Left => self.base.apply_face(s, i + 1),
            PathSide::Right => self.base.apply_face(s, i),
        }
    }

    fn degeneracy(&self, s: &SimplexRef, _n: usize, i: usize) -> SimplexRef {
        match self.side {
            PathSide::Left => self.base.apply_degeneracy(s, i + 1),
            PathSide::Right => self.base.apply_degeneracy(s, i),
        }
    }

    fn label(&self, s: &SimplexRef) -> Option<String> {
        self.base.label(s.cell).map(|l| {
            if s.deg.is_identity() {
                format!("p[{}]", l)
            } else {
                format!("p[{}{:?}]", l, s.deg.collapsed())
            }
        })
    }
}

pub struct PathSpace {
    pub mat: Materialized<PathSpaceData>,
    pub side: PathSide,
}

impl PathSpace {
    pub fn sset(&self) -> &Arc<SSet> {
        &self.mat.sset
    }

    pub fn base(&self) -> &Arc<SSet> {
        &self.mat.data.base
    }

    /// The base `(d+1)`-simplex underlying a path-space `d`-simplex.
    pub fn to_base(&self, s: &SimplexRef) -> SimplexRef {
        self.mat.concrete(s)
    }

    /// The path-space simplex corresponding to a base `(d+1)`-simplex, when
    /// within the materialized range.
    pub fn from_base(&self, s: &SimplexRef) -> Option<SimplexRef> {
        self.mat.normal_form(s).cloned()
    }
}

/// The left or right path space. The cap drops by one; exact bases stay
/// exact (no non-degenerate path-space cell can exceed the base top
/// dimension, since at most one collapse survives normalization).
pub fn path_space(base: &Arc<SSet>, side: PathSide) -> Result<PathSpace> {
    let data = PathSpaceData {
        base: Arc::clone(base),
        side,
    };
    let mat = match base.cap() {
        Cap::All => materialize_exact(data, base.top_dim(), false)?,
        Cap::UpTo(0) => {
            return Err(Error::CapExceeded { needed: 1, cap: 0 });
        }
        Cap::UpTo(c) => materialize(data, c - 1, false)?,
    };
    Ok(PathSpace { mat, side })
}

/// The reindexing on ordinals behind edgewise subdivision: `[m] -> [n]`
/// becomes `[2m+1] -> [2n+1]`, the first block reversed and the second
/// shifted past the target midpoint.
pub fn edgewise_ordinal(f: &OrdinalMap) -> OrdinalMap {
    let m = f.source_dim();
    let n = f.target_dim();
    let mut values = Vec::with_capacity(2 * m + 2);
    for i in 0..=m {
        values.push(n - f.apply(m - i));
    }
    for j in 0..=m {
        values.push(n + 1 + f.apply(j));
    }
    OrdinalMap::new(2 * n + 1, values).expect("edgewise reindexing is monotone")
}

pub struct EsdData {
    pub base: Arc<SSet>,
}

impl LevelData for EsdData {
    type Simplex = SimplexRef;

    fn level(&self, n: usize) -> Result<Vec<SimplexRef>> {
        self.base.simplices(2 * n + 1)
    }

    fn face(&self, s: &SimplexRef, n: usize, i: usize) -> SimplexRef {
        self.base
            .apply_ordinal(s, &edgewise_ordinal(&OrdinalMap::coface(n, i)))
    }

    fn degeneracy(&self, s: &SimplexRef, n: usize, i: usize) -> SimplexRef {
        self.base
            .apply_ordinal(s, &edgewise_ordinal(&OrdinalMap::codegeneracy(n, i)))
    }

    fn label(&self, s: &SimplexRef) -> Option<String> {
        self.base.label(s.cell).map(|l| format!("esd[{}]", l))
    }
}

pub struct Edgewise {
    pub mat: Materialized<EsdData>,
}

impl Edgewise {
    pub fn sset(&self) -> &Arc<SSet> {
        &self.mat.sset
    }

    pub fn base(&self) -> &Arc<SSet> {
        &self.mat.data.base
    }

    pub fn to_base(&self, s: &SimplexRef) -> SimplexRef {
        self.mat.concrete(s)
    }

    pub fn from_base(&self, s: &SimplexRef) -> Option<SimplexRef> {
        self.mat.normal_form(s).cloned()
    }
}

/// Edgewise subdivision up to `cap_out` (each output dimension consumes two
/// base dimensions: level `n` needs base level `2n+1`).
pub fn edgewise_subdivision(base: &Arc<SSet>, cap_out: usize) -> Result<Edgewise> {
    if let Cap::UpTo(c) = base.cap() {
        if 2 * cap_out + 1 > c {
            return Err(Error::CapExceeded {
                needed: 2 * cap_out + 1,
                cap: c,
            });
        }
    }
    let mat = materialize(
        EsdData {
            base: Arc::clone(base),
        },
        cap_out,
        false,
    )?;
    Ok(Edgewise { mat })
}

/// Default output cap from the base cap, per the bookkeeping rule
/// `cap_out = floor((cap - 1) / 2)`.
pub fn esd_default_cap(base: &Arc<SSet>) -> usize {
    match base.cap() {
        Cap::All => base.top_dim(),
        Cap::UpTo(c) => (c.saturating_sub(1)) / 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{nerve, random_category, FiniteCategory};
    use crate::iso::iso_check;
    use crate::shapes::delta;

    #[test]
    fn pathspace_levels_are_shifted() {
        // (P X)_0 = X_1 as sets
        let d2 = delta(2);
        let p = path_space(&d2, PathSide::Left).unwrap();
        assert_eq!(
            p.sset().simplex_count(0).unwrap(),
            d2.simplex_count(1).unwrap()
        );
        // |(P Delta[2])_1| = |Delta[2]_2| = 10
        assert_eq!(p.sset().simplex_count(1).unwrap(), 10);
    }

    #[test]
    fn pathspace_of_point_is_point() {
        let d0 = delta(0);
        let p = path_space(&d0, PathSide::Left).unwrap();
        assert!(iso_check(p.sset(), &d0).is_some());
    }

    #[test]
    fn pathspace_of_edge_splits() {
        // P(Delta[1]) = Delta[1] ⊔ Delta[0] on either side
        let d1 = delta(1);
        for side in [PathSide::Left, PathSide::Right] {
            let p = path_space(&d1, side).unwrap();
            let expect = crate::sset::disjoint_union(&delta(1), &delta(0));
            assert!(iso_check(p.sset(), &expect).is_some());
        }
    }

    #[test]
    fn pathspace_of_nerve_is_nerve_checked_by_identities() {
        let c = random_category(7, 4, 10);
        let nv = nerve(&c, 4).unwrap();
        let p = path_space(&nv.sset, PathSide::Left).unwrap();
        p.sset().check_simplicial_identities().unwrap();
        let q = path_space(&nv.sset, PathSide::Right).unwrap();
        q.sset().check_simplicial_identities().unwrap();
    }

    #[test]
    fn esd_level_zero_is_edges() {
        let d2 = delta(2);
        let e = edgewise_subdivision(&d2, 1).unwrap();
        // (esd X)_0 = X_1
        assert_eq!(
            e.sset().simplex_count(0).unwrap(),
            d2.simplex_count(1).unwrap()
        );
    }

    #[test]
    fn esd_face_formula() {
        // d_0 of a 1-simplex of esd X equals d_1 d_2 of the underlying 3-simplex
        let d3 = delta(3);
        let e = edgewise_subdivision(&d3, 1).unwrap();
        for &c in e.sset().cells_of_dim(1) {
            let s = SimplexRef::nondegenerate(c, 1);
            let f = e.sset().apply_face(&s, 0);
            let base_f = e.to_base(&f);
            let underlying = e.to_base(&s);
            let direct = d3.apply_face(&d3.apply_face(&underlying, 2), 1);
            assert_eq!(base_f, direct);
        }
    }

    #[test]
    fn esd_of_nerve_identities() {
        let z2 = FiniteCategory::cyclic_group(2);
        let nv = nerve(&z2, 5).unwrap();
        let e = edgewise_subdivision(&nv.sset, 2).unwrap();
        e.sset().check_simplicial_identities().unwrap();
    }
}
