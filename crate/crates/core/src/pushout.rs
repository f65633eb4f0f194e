//! Pushouts along monomorphisms, the only colimit the certificate calculus
//! needs.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::map::{Inclusion, SSetMap};
use crate::sset::{CellData, CellId, SSet, SimplexRef};

/// Where a pushout cell came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Target(CellId),
    Adjoined(CellId),
}

#[derive(Debug)]
pub struct Pushout {
    pub sset: Arc<SSet>,
    /// `X -> P`.
    pub include_target: Inclusion,
    /// `B -> P`, the attaching square's other leg.
    pub from_source: SSetMap,
    pub provenance: Vec<Provenance>,
}

/// `P = X ⊔_A B` for an inclusion `A -> B` and a map `A -> X`. Cells of `P`
/// are the cells of `X` plus the cells of `B` outside the image of `A`.
pub fn pushout_along_mono(incl: &Inclusion, f: &SSetMap) -> Result<Pushout> {
    let a = incl.dom();
    let b = incl.cod();
    let x = f.dom();
    if !Arc::ptr_eq(a, x) && !a.same_presentation(x) {
        return Err(Error::InvalidMap(
            "pushout legs have different domains".into(),
        ));
    }
    let target = f.cod();
    let preimage = incl.preimage_table();

    let mut entries: Vec<(usize, Provenance)> = Vec::new();
    for c in target.cells() {
        entries.push((c.dim, Provenance::Target(c.id)));
    }
    for c in b.cells() {
        if !preimage.contains_key(&c.id) {
            entries.push((c.dim, Provenance::Adjoined(c.id)));
        }
    }
    entries.sort_by_key(|&(dim, p)| {
        (
            dim,
            match p {
                Provenance::Target(c) => (0, c),
                Provenance::Adjoined(c) => (1, c),
            },
        )
    });
    let mut of_target: HashMap<CellId, CellId> = HashMap::new();
    let mut of_adjoined: HashMap<CellId, CellId> = HashMap::new();
    for (i, &(_, p)) in entries.iter().enumerate() {
        match p {
            Provenance::Target(c) => of_target.insert(c, CellId(i as u32)),
            Provenance::Adjoined(c) => of_adjoined.insert(c, CellId(i as u32)),
        };
    }
    // a simplex of B lands in P either through f (image cells) or as itself
    let push_b_simplex = |s: &SimplexRef| -> SimplexRef {
        match preimage.get(&s.cell) {
            Some(&acell) => {
                let img = f.cell_image(acell);
                let v = SimplexRef {
                    cell: of_target[&img.cell],
                    deg: img.deg.clone(),
                };
                if s.deg.is_identity() {
                    v
                } else {
                    SimplexRef {
                        cell: v.cell,
                        deg: v.deg.compose(&s.deg),
                    }
                }
            }
            None => SimplexRef {
                cell: of_adjoined[&s.cell],
                deg: s.deg.clone(),
            },
        }
    };
    let mut data = Vec::new();
    for &(dim, p) in &entries {
        match p {
            Provenance::Target(c) => {
                let faces = target
                    .cell_faces(c)
                    .iter()
                    .map(|fc| SimplexRef {
                        cell: of_target[&fc.cell],
                        deg: fc.deg.clone(),
                    })
                    .collect();
                data.push(CellData {
                    dim,
                    label: target.cell(c).label.clone(),
                    faces,
                });
            }
            Provenance::Adjoined(c) => {
                let faces = b.cell_faces(c).iter().map(&push_b_simplex).collect();
                data.push(CellData {
                    dim,
                    label: b.cell(c).label.clone(),
                    faces,
                });
            }
        }
    }
    let cap = target.cap().min(b.cap());
    let sset = SSet::build(cap, data)?;
    let include_target = Inclusion::new(SSetMap::new(
        Arc::clone(target),
        Arc::clone(&sset),
        target
            .cells()
            .map(|c| SimplexRef::nondegenerate(of_target[&c.id], c.dim))
            .collect(),
    )?)?;
    let from_source = SSetMap::new(
        Arc::clone(b),
        Arc::clone(&sset),
        b.cells()
            .map(|c| push_b_simplex(&SimplexRef::nondegenerate(c.id, c.dim)))
            .collect(),
    )?;
    Ok(Pushout {
        sset,
        include_target,
        from_source,
        provenance: entries.into_iter().map(|(_, p)| p).collect(),
    })
}

/// The map out of the pushout induced by a commuting cocone, for testing the
/// universal property.
pub fn induced_from_cocone(
    po: &Pushout,
    u: &SSetMap, // X -> T
    v: &SSetMap, // B -> T
) -> Result<SSetMap> {
    let assign = po
        .provenance
        .iter()
        .map(|p| match p {
            Provenance::Target(c) => u.cell_image(*c).clone(),
            Provenance::Adjoined(c) => v.cell_image(*c).clone(),
        })
        .collect();
    SSetMap::new(Arc::clone(&po.sset), Arc::clone(u.cod()), assign)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::iso_check;
    use crate::shapes::{build_shape, delta, ShapeSpec};

    #[test]
    fn pushout_along_identity_is_b() {
        let (horn, incl) = build_shape(&ShapeSpec::Horn { n: 2, missing: 1 }).unwrap();
        let id = SSetMap::identity(&horn);
        let po = pushout_along_mono(&incl, &id).unwrap();
        assert!(iso_check(&po.sset, incl.cod()).is_some());
    }

    #[test]
    fn wedge_of_edges() {
        // glue Delta[1] to Delta[1] along a shared endpoint
        let d0 = delta(0);
        let d1 = delta(1);
        let v1 = SSetMap::new(
            Arc::clone(&d0),
            Arc::clone(&d1),
            vec![SimplexRef::nondegenerate(crate::sset::CellId(1), 0)],
        )
        .unwrap();
        let v0_incl = Inclusion::new(
            SSetMap::new(
                Arc::clone(&d0),
                Arc::clone(&d1),
                vec![SimplexRef::nondegenerate(crate::sset::CellId(0), 0)],
            )
            .unwrap(),
        )
        .unwrap();
        let po = pushout_along_mono(&v0_incl, &v1).unwrap();
        assert_eq!(po.sset.cells_of_dim(0).len(), 3);
        assert_eq!(po.sset.cells_of_dim(1).len(), 2);
    }

    #[test]
    fn universal_property_on_wedge() {
        // cocones out of the wedge into Delta[2]
        let d0 = delta(0);
        let d1 = delta(1);
        let x = Arc::clone(&d1);
        let v1 = SSetMap::new(
            Arc::clone(&d0),
            Arc::clone(&x),
            vec![SimplexRef::nondegenerate(crate::sset::CellId(1), 0)],
        )
        .unwrap();
        let incl = Inclusion::new(
            SSetMap::new(
                Arc::clone(&d0),
                Arc::clone(&d1),
                vec![SimplexRef::nondegenerate(crate::sset::CellId(0), 0)],
            )
            .unwrap(),
        )
        .unwrap();
        let po = pushout_along_mono(&incl, &v1).unwrap();
        // cocone: both edges onto edges of Delta[2]
        let d2 = delta(2);
        let e01 = crate::shapes::delta_cell(&d2, &[0, 1]);
        let e12 = crate::shapes::delta_cell(&d2, &[1, 2]);
        let u = SSetMap::new(
            Arc::clone(&x),
            Arc::clone(&d2),
            vec![
                SimplexRef::nondegenerate(crate::sset::CellId(0), 0),
                SimplexRef::nondegenerate(crate::sset::CellId(1), 0),
                SimplexRef::nondegenerate(e01, 1),
            ],
        )
        .unwrap();
        let v = SSetMap::new(
            Arc::clone(&d1),
            Arc::clone(&d2),
            vec![
                SimplexRef::nondegenerate(crate::sset::CellId(1), 0),
                SimplexRef::nondegenerate(crate::sset::CellId(2), 0),
                SimplexRef::nondegenerate(e12, 1),
            ],
        )
        .unwrap();
        // the square commutes on A = the shared vertex
        assert_eq!(u.cell_image(crate::sset::CellId(1)), v.cell_image(crate::sset::CellId(0)));
        let w = induced_from_cocone(&po, &u, &v).unwrap();
        // w restricted along both legs agrees with the cocone
        assert!(w.compose(po.include_target.map()).same_as(&u));
        assert!(w.compose(&po.from_source).same_as(&v));
    }
}
