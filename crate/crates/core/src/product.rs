//! Binary products, presented by jointly non-degenerate pairs.
//!
//! An `n`-simplex of `X x Y` is a pair of `n`-simplices; it is
//! non-degenerate exactly when the two degeneracy operators collapse
//! disjoint index sets. Faces are computed coordinatewise and re-normalized
//! by splitting off the common collapses.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::map::SSetMap;
use crate::ordinal::{surjections, DegeneracyOp};
use crate::sset::{Cap, CellData, CellId, SSet, SimplexRef};

#[derive(Debug)]
pub struct Product {
    pub sset: Arc<SSet>,
    pub left: Arc<SSet>,
    pub right: Arc<SSet>,
    /// Per product cell, the jointly non-degenerate component pair.
    pub components: Vec<(SimplexRef, SimplexRef)>,
    index: HashMap<(SimplexRef, SimplexRef), CellId>,
    pub proj_left: SSetMap,
    pub proj_right: SSetMap,
}

impl Product {
    /// Normal form of the pair simplex `(a, b)` as a simplex of the product.
    pub fn normalize_pair(&self, a: &SimplexRef, b: &SimplexRef) -> SimplexRef {
        let da: Vec<usize> = a.deg.collapsed().to_vec();
        let db: Vec<usize> = b.deg.collapsed().to_vec();
        let common: Vec<usize> = da.iter().copied().filter(|i| db.contains(i)).collect();
        let dim = self.left.simplex_dim(a);
        debug_assert_eq!(dim, self.right.simplex_dim(b));
        let sigma = DegeneracyOp::new(dim, common).unwrap();
        let ra = a.deg.factor_through(&sigma).expect("common collapses factor");
        let rb = b.deg.factor_through(&sigma).expect("common collapses factor");
        let key = (
            SimplexRef { cell: a.cell, deg: ra },
            SimplexRef { cell: b.cell, deg: rb },
        );
        let cell = *self
            .index
            .get(&key)
            .unwrap_or_else(|| panic!("pair not a product cell (cap too small?)"));
        SimplexRef { cell, deg: sigma }
    }

    pub fn cell_of_pair(&self, a: &SimplexRef, b: &SimplexRef) -> Option<CellId> {
        self.index.get(&(a.clone(), b.clone())).copied()
    }
}

pub fn product(x: &Arc<SSet>, y: &Arc<SSet>) -> Result<Product> {
    let cap = x.cap().min(y.cap());
    let enum_top = match cap {
        Cap::All => x.top_dim() + y.top_dim(),
        Cap::UpTo(d) => d,
    };
    // enumerate jointly non-degenerate pairs per dimension
    let mut keys: Vec<(SimplexRef, SimplexRef)> = Vec::new();
    for n in 0..=enum_top {
        let mut level: Vec<(SimplexRef, SimplexRef)> = Vec::new();
        for p in 0..=n.min(x.top_dim()) {
            for q in 0..=n.min(y.top_dim()) {
                if p + q < n {
                    continue;
                }
                for &cx in x.cells_of_dim(p) {
                    for &cy in y.cells_of_dim(q) {
                        for ea in surjections(n, p) {
                            'outer: for eb in surjections(n, q) {
                                for i in ea.collapsed() {
                                    if eb.collapsed().contains(i) {
                                        continue 'outer;
                                    }
                                }
                                level.push((
                                    SimplexRef { cell: cx, deg: ea.clone() },
                                    SimplexRef { cell: cy, deg: eb },
                                ));
                            }
                        }
                    }
                }
            }
        }
        level.sort();
        keys.extend(level);
    }
    let index: HashMap<(SimplexRef, SimplexRef), CellId> = keys
        .iter()
        .enumerate()
        .map(|(i, k)| (k.clone(), CellId(i as u32)))
        .collect();

    // partial product view for face normalization during construction
    let mut data: Vec<CellData> = Vec::new();
    let normalize = |a: &SimplexRef, b: &SimplexRef| -> SimplexRef {
        let da: Vec<usize> = a.deg.collapsed().to_vec();
        let db: Vec<usize> = b.deg.collapsed().to_vec();
        let common: Vec<usize> = da.iter().copied().filter(|i| db.contains(i)).collect();
        let dim = x.simplex_dim(a);
        let sigma = DegeneracyOp::new(dim, common).unwrap();
        let ra = a.deg.factor_through(&sigma).unwrap();
        let rb = b.deg.factor_through(&sigma).unwrap();
        let key = (
            SimplexRef { cell: a.cell, deg: ra },
            SimplexRef { cell: b.cell, deg: rb },
        );
        SimplexRef {
            cell: index[&key],
            deg: sigma,
        }
    };
    for (a, b) in &keys {
        let dim = x.simplex_dim(a);
        let faces = if dim == 0 {
            Vec::new()
        } else {
            (0..=dim)
                .map(|i| {
                    let fa = x.apply_face(a, i);
                    let fb = y.apply_face(b, i);
                    normalize(&fa, &fb)
                })
                .collect()
        };
        let label = match (x.label(a.cell), y.label(b.cell)) {
            (Some(la), Some(lb)) => Some(format!("({}|{})", la, lb)),
            _ => None,
        };
        data.push(CellData {
            dim,
            label,
            faces,
        });
    }
    let sset = SSet::build(cap, data)?;
    let proj_left = SSetMap::new(
        Arc::clone(&sset),
        Arc::clone(x),
        keys.iter().map(|(a, _)| a.clone()).collect(),
    )?;
    let proj_right = SSetMap::new(
        Arc::clone(&sset),
        Arc::clone(y),
        keys.iter().map(|(_, b)| b.clone()).collect(),
    )?;
    Ok(Product {
        sset,
        left: Arc::clone(x),
        right: Arc::clone(y),
        components: keys,
        index,
        proj_left,
        proj_right,
    })
}

/// The product of two maps, `f x g : X x Y -> X' x Y'`.
pub fn product_of_maps(f: &SSetMap, g: &SSetMap, dom: &Product, cod: &Product) -> Result<SSetMap> {
    if !Arc::ptr_eq(&dom.left, f.dom()) || !Arc::ptr_eq(&dom.right, g.dom()) {
        return Err(Error::InvalidMap("product map domain mismatch".into()));
    }
    let assign = dom
        .components
        .iter()
        .map(|(a, b)| {
            let fa = f.image(a);
            let gb = g.image(b);
            cod.normalize_pair(&fa, &gb)
        })
        .collect();
    SSetMap::new(Arc::clone(&dom.sset), Arc::clone(&cod.sset), assign)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::iso_check;
    use crate::ordinal::OrdinalMap;
    use crate::shapes::delta;

    /// Independent oracle: count jointly non-degenerate pairs of monotone
    /// maps `[n] -> [p]`, `[n] -> [q]` directly on value tables.
    fn count_product_cells(p: usize, q: usize, n: usize) -> usize {
        fn monotone(src: usize, tgt: usize) -> Vec<Vec<usize>> {
            let mut out = vec![vec![]];
            for _ in 0..=src {
                let mut next = Vec::new();
                for v in out {
                    let lo = *v.last().unwrap_or(&0);
                    for x in lo..=tgt {
                        let mut w = v.clone();
                        w.push(x);
                        next.push(w);
                    }
                }
                out = next;
            }
            out
        }
        let mut count = 0;
        for a in monotone(n, p) {
            if a[0] != 0 || a[n] != p || a.windows(2).any(|w| w[1] > w[0] + 1) {
                continue; // surjections only: pairs of cells of top simplices
            }
            for b in monotone(n, q) {
                if b[0] != 0 || b[n] != q || b.windows(2).any(|w| w[1] > w[0] + 1) {
                    continue;
                }
                let jointly = (0..n).all(|i| !(a[i] == a[i + 1] && b[i] == b[i + 1]));
                if jointly {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn square_cell_counts() {
        let d1 = delta(1);
        let p = product(&d1, &d1).unwrap();
        let counts: Vec<usize> = (0..=2).map(|d| p.sset.cells_of_dim(d).len()).collect();
        assert_eq!(counts, vec![4, 5, 2]);
        p.sset.check_simplicial_identities().unwrap();
    }

    #[test]
    fn prism_shuffles() {
        let p = product(&delta(2), &delta(1)).unwrap();
        assert_eq!(p.sset.cells_of_dim(3).len(), 3);
        assert_eq!(p.sset.cells_of_dim(3).len(), count_product_cells(2, 1, 3));
        // cross-check lower counts for the square against the oracle too
        let sq = product(&delta(1), &delta(1)).unwrap();
        assert_eq!(sq.sset.cells_of_dim(2).len(), count_product_cells(1, 1, 2));
    }

    #[test]
    fn unit_of_product() {
        let p = product(&delta(3), &delta(0)).unwrap();
        assert!(iso_check(&p.sset, &delta(3)).is_some());
    }

    #[test]
    fn projections_commute() {
        let p = product(&delta(2), &delta(1)).unwrap();
        p.proj_left.validate().unwrap();
        p.proj_right.validate().unwrap();
    }

    #[test]
    fn ez_bijection_per_level() {
        // simplices of X x Y at level n biject with pairs of level-n simplices
        let p = product(&delta(1), &delta(2)).unwrap();
        for n in 0..=3usize {
            let pairs = delta(1).simplex_count(n).unwrap() * delta(2).simplex_count(n).unwrap();
            assert_eq!(p.sset.simplex_count(n).unwrap(), pairs);
        }
    }

    #[test]
    fn product_functorial() {
        // collapse Delta[1] -> Delta[0] on one factor
        let d1 = delta(1);
        let d0 = delta(0);
        let dom = product(&d1, &d1).unwrap();
        let cod = product(&d0, &d1).unwrap();
        let collapse = SSetMap::new(
            Arc::clone(&d1),
            Arc::clone(&d0),
            vec![
                SimplexRef::nondegenerate(CellId(0), 0),
                SimplexRef::nondegenerate(CellId(0), 0),
                crate::sset::SimplexRef {
                    cell: CellId(0),
                    deg: DegeneracyOp::new(1, vec![0]).unwrap(),
                },
            ],
        )
        .unwrap();
        let id = SSetMap::identity(&d1);
        let m = product_of_maps(&collapse, &id, &dom, &cod).unwrap();
        m.validate().unwrap();
        let _ = OrdinalMap::identity(1);
    }
}
