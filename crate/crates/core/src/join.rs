//! Joins of simplicial sets.
//!
//! `(X ⋆ Y)_n = ∐_{i+j=n-1} X_i x Y_j` with `X_{-1}` and `Y_{-1}` singletons.
//! Non-degenerate cells are joins of non-degenerate cells (one side may be
//! empty); faces with index in the first block act on the `X` part and the
//! rest act on the `Y` part.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::Result;
use crate::map::Inclusion;
use crate::sset::{Cap, CellData, CellId, SSet, SimplexRef};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum JoinComponent {
    Left(CellId),
    Right(CellId),
    Mixed(CellId, CellId),
}

/// A simplex of a join, by its two (possibly empty) coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinSimplex {
    pub left: Option<SimplexRef>,
    pub right: Option<SimplexRef>,
}

#[derive(Debug)]
pub struct Join {
    pub sset: Arc<SSet>,
    pub left: Arc<SSet>,
    pub right: Arc<SSet>,
    pub components: Vec<JoinComponent>,
    index: HashMap<JoinComponent, CellId>,
    pub embed_left: Inclusion,
    pub embed_right: Inclusion,
}

impl Join {
    pub fn cell_of(&self, c: &JoinComponent) -> CellId {
        self.index[c]
    }

    /// Normal form of the join of two simplices (at most one side empty).
    /// The degeneracy set of the result is the union of the two sides', the
    /// right side shifted past the left block.
    pub fn join_simplices(&self, s: &JoinSimplex) -> SimplexRef {
        match (&s.left, &s.right) {
            (Some(a), None) => {
                let cell = self.index[&JoinComponent::Left(a.cell)];
                SimplexRef { cell, deg: a.deg.clone() }
            }
            (None, Some(b)) => {
                let cell = self.index[&JoinComponent::Right(b.cell)];
                SimplexRef { cell, deg: b.deg.clone() }
            }
            (Some(a), Some(b)) => {
                let cell = self.index[&JoinComponent::Mixed(a.cell, b.cell)];
                let da = self.left.simplex_dim(a);
                let mut collapsed: Vec<usize> = a.deg.collapsed().to_vec();
                collapsed.extend(b.deg.collapsed().iter().map(|&i| i + da + 1));
                let dim = da + self.right.simplex_dim(b) + 1;
                SimplexRef {
                    cell,
                    deg: crate::ordinal::DegeneracyOp::new(dim, collapsed).unwrap(),
                }
            }
            (None, None) => panic!("empty join simplex"),
        }
    }
}

pub fn join(x: &Arc<SSet>, y: &Arc<SSet>) -> Result<Join> {
    let cap = match (x.cap(), y.cap()) {
        (Cap::All, Cap::All) => Cap::All,
        (a, b) => a.min(b),
    };
    let mut comps: Vec<(usize, JoinComponent)> = Vec::new();
    for c in x.cells() {
        comps.push((c.dim, JoinComponent::Left(c.id)));
    }
    for c in y.cells() {
        comps.push((c.dim, JoinComponent::Right(c.id)));
    }
    for cx in x.cells() {
        for cy in y.cells() {
            let d = cx.dim + cy.dim + 1;
            if cap.admits(d) {
                comps.push((d, JoinComponent::Mixed(cx.id, cy.id)));
            }
        }
    }
    comps.sort();
    let index: HashMap<JoinComponent, CellId> = comps
        .iter()
        .enumerate()
        .map(|(i, (_, c))| (c.clone(), CellId(i as u32)))
        .collect();

    let norm = |left: Option<SimplexRef>, right: Option<SimplexRef>| -> SimplexRef {
        match (left, right) {
            (Some(a), None) => SimplexRef {
                cell: index[&JoinComponent::Left(a.cell)],
                deg: a.deg,
            },
            (None, Some(b)) => SimplexRef {
                cell: index[&JoinComponent::Right(b.cell)],
                deg: b.deg,
            },
            (Some(a), Some(b)) => {
                let da = x.simplex_dim(&a);
                let db = y.simplex_dim(&b);
                let mut collapsed: Vec<usize> = a.deg.collapsed().to_vec();
                collapsed.extend(b.deg.collapsed().iter().map(|&i| i + da + 1));
                SimplexRef {
                    cell: index[&JoinComponent::Mixed(a.cell, b.cell)],
                    deg: crate::ordinal::DegeneracyOp::new(da + db + 1, collapsed).unwrap(),
                }
            }
            (None, None) => unreachable!(),
        }
    };

    let mut data = Vec::new();
    for (dim, comp) in &comps {
        let (label, faces) = match comp {
            JoinComponent::Left(c) => {
                let faces = x
                    .cell_faces(*c)
                    .iter()
                    .map(|f| norm(Some(f.clone()), None))
                    .collect();
                (x.cell(*c).label.clone().map(|l| format!("{}<", l)), faces)
            }
            JoinComponent::Right(c) => {
                let faces = y
                    .cell_faces(*c)
                    .iter()
                    .map(|f| norm(None, Some(f.clone())))
                    .collect();
                (y.cell(*c).label.clone().map(|l| format!(">{}", l)), faces)
            }
            JoinComponent::Mixed(cx, cy) => {
                let p = x.dim_of(*cx);
                let q = y.dim_of(*cy);
                let n = p + q + 1;
                let a = SimplexRef::nondegenerate(*cx, p);
                let b = SimplexRef::nondegenerate(*cy, q);
                let faces = (0..=n)
                    .map(|l| {
                        if l <= p {
                            if p == 0 {
                                norm(None, Some(b.clone()))
                            } else {
                                norm(Some(x.apply_face(&a, l)), Some(b.clone()))
                            }
                        } else if q == 0 {
                            norm(Some(a.clone()), None)
                        } else {
                            norm(Some(a.clone()), Some(y.apply_face(&b, l - p - 1)))
                        }
                    })
                    .collect();
                let label = match (x.label(*cx), y.label(*cy)) {
                    (Some(la), Some(lb)) => Some(format!("{}*{}", la, lb)),
                    _ => None,
                };
                (label, faces)
            }
        };
        data.push(CellData {
            dim: *dim,
            label,
            faces,
        });
    }
    let sset = SSet::build(cap, data)?;
    let left_parents: Vec<CellId> = x.cells().map(|c| index[&JoinComponent::Left(c.id)]).collect();
    let right_parents: Vec<CellId> = y.cells().map(|c| index[&JoinComponent::Right(c.id)]).collect();
    // embeddings are inclusions with permuted ids
    let embed_left = Inclusion::new(crate::map::SSetMap::new(
        Arc::clone(x),
        Arc::clone(&sset),
        x.cells()
            .zip(left_parents.iter())
            .map(|(c, &p)| SimplexRef::nondegenerate(p, c.dim))
            .collect(),
    )?)?;
    let embed_right = Inclusion::new(crate::map::SSetMap::new(
        Arc::clone(y),
        Arc::clone(&sset),
        y.cells()
            .zip(right_parents.iter())
            .map(|(c, &p)| SimplexRef::nondegenerate(p, c.dim))
            .collect(),
    )?)?;
    Ok(Join {
        sset,
        left: Arc::clone(x),
        right: Arc::clone(y),
        components: comps.into_iter().map(|(_, c)| c).collect(),
        index,
        embed_left,
        embed_right,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::iso_check;
    use crate::shapes::{build_shape, delta, GeneralizedHorn, ShapeSpec};

    #[test]
    fn join_of_simplices_is_simplex() {
        let j = join(&delta(2), &delta(1)).unwrap();
        assert!(iso_check(&j.sset, &delta(4)).is_some());
        j.sset.check_simplicial_identities().unwrap();
    }

    #[test]
    fn empty_is_unit() {
        let empty = SSet::build(Cap::All, Vec::new()).unwrap();
        let j = join(&empty, &delta(2)).unwrap();
        assert!(iso_check(&j.sset, &delta(2)).is_some());
    }

    #[test]
    fn cone_of_inner_horn_is_two_segal_horn() {
        // Delta[0] * Horn^1[2] = Horn^{0,2}[3] in missing-face notation
        let (h12, _) = build_shape(&ShapeSpec::Horn { n: 2, missing: 1 }).unwrap();
        let j = join(&delta(0), &h12).unwrap();
        let gh = GeneralizedHorn::from_missing(3, [0, 2]).unwrap();
        let (target, _) = build_shape(&ShapeSpec::GenHorn(gh)).unwrap();
        assert!(iso_check(&j.sset, &target).is_some());
    }

    #[test]
    fn join_face_arithmetic() {
        // under Delta[n] * Delta[k] = Delta[n+k+1], faces of the top cell:
        // d_l of the X part for l <= n, d_{n+l+1} of the Y part otherwise
        for n in 0..=4usize {
            for k in 0..=4usize {
                if n + k > 6 {
                    continue;
                }
                let x = delta(n);
                let y = delta(k);
                let j = join(&x, &y).unwrap();
                let top_x = x.cells_of_dim(n)[0];
                let top_y = y.cells_of_dim(k)[0];
                let top = j.cell_of(&JoinComponent::Mixed(top_x, top_y));
                let tops = SimplexRef::nondegenerate(top, n + k + 1);
                for l in 0..=n {
                    if n == 0 {
                        continue;
                    }
                    let fx = x.apply_face(&SimplexRef::nondegenerate(top_x, n), l);
                    let want = j.join_simplices(&JoinSimplex {
                        left: Some(fx),
                        right: Some(SimplexRef::nondegenerate(top_y, k)),
                    });
                    assert_eq!(j.sset.apply_face(&tops, l), want);
                }
                for l in 0..=k {
                    if k == 0 {
                        continue;
                    }
                    let fy = y.apply_face(&SimplexRef::nondegenerate(top_y, k), l);
                    let want = j.join_simplices(&JoinSimplex {
                        left: Some(SimplexRef::nondegenerate(top_x, n)),
                        right: Some(fy),
                    });
                    assert_eq!(j.sset.apply_face(&tops, n + l + 1), want);
                }
            }
        }
    }
}
