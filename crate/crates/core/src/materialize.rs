//! Materializing concretely-presented simplicial structures (nerves, path
//! spaces, subdivisions, example oracles) as capped [`SSet`] presentations.
//!
//! A [`LevelData`] source enumerates its simplices levelwise and evaluates
//! faces and degeneracies on concrete values. The materializer detects
//! degenerate simplices, extracts Eilenberg-Zilber normal forms, builds the
//! face tables of the non-degenerate cells, and audits the simplicial
//! identities on the raw data.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ordinal::DegeneracyOp;
use crate::sset::{Cap, CellData, SSet, SimplexRef};

pub trait LevelData {
    type Simplex: Clone + Eq + Hash + Ord;

    /// All `n`-simplices, including degenerate ones.
    fn level(&self, n: usize) -> Result<Vec<Self::Simplex>>;

    fn face(&self, s: &Self::Simplex, n: usize, i: usize) -> Self::Simplex;

    fn degeneracy(&self, s: &Self::Simplex, n: usize, i: usize) -> Self::Simplex;

    fn label(&self, _s: &Self::Simplex) -> Option<String> {
        None
    }

    /// When true, a level with no non-degenerate simplices guarantees that
    /// all higher levels are degenerate too, so the presentation is exact.
    fn empty_level_terminal(&self) -> bool {
        false
    }
}

pub struct Materialized<D: LevelData> {
    pub data: D,
    pub sset: Arc<SSet>,
    /// Concrete representative of each cell.
    pub reps: Vec<D::Simplex>,
    /// Normal form of every enumerated simplex.
    index: HashMap<D::Simplex, SimplexRef>,
    /// Concrete simplices per level, as enumerated.
    pub levels: Vec<Vec<D::Simplex>>,
}

impl<D: LevelData> Materialized<D> {
    pub fn normal_form(&self, s: &D::Simplex) -> Option<&SimplexRef> {
        self.index.get(s)
    }

    /// Concrete value of a normal-form simplex.
    pub fn concrete(&self, s: &SimplexRef) -> D::Simplex {
        let mut v = self.reps[s.cell.index()].clone();
        let mut n = self.sset.dim_of(s.cell);
        for &i in s.deg.collapsed().iter() {
            v = self.data.degeneracy(&v, n, i);
            n += 1;
        }
        v
    }
}

/// Build the presentation up to `cap` levels (inclusive). `audit` re-checks
/// the simplicial identities on the raw data at every level.
pub fn materialize<D: LevelData>(data: D, cap: usize, audit: bool) -> Result<Materialized<D>> {
    materialize_impl(data, cap, audit, false)
}

/// Like [`materialize`], for sources known to have no non-degenerate
/// simplices above `top`: the result is marked exact in all dimensions.
pub fn materialize_exact<D: LevelData>(data: D, top: usize, audit: bool) -> Result<Materialized<D>> {
    materialize_impl(data, top, audit, true)
}

fn materialize_impl<D: LevelData>(
    data: D,
    cap: usize,
    audit: bool,
    promise_exact: bool,
) -> Result<Materialized<D>> {
    let mut levels: Vec<Vec<D::Simplex>> = Vec::new();
    let mut index: HashMap<D::Simplex, SimplexRef> = HashMap::new();
    let mut reps: Vec<D::Simplex> = Vec::new();
    let mut cells: Vec<CellData> = Vec::new();
    let mut exact = false;

    for n in 0..=cap {
        let mut level = data.level(n)?;
        level.sort();
        level.dedup();
        let mut nondeg_here = 0usize;
        for s in &level {
            // collapse positions of the EZ surjection
            let mut collapsed = Vec::new();
            if n > 0 {
                for i in 0..n {
                    let t = data.face(s, n, i + 1);
                    if data.degeneracy(&t, n - 1, i) == *s {
                        collapsed.push(i);
                    }
                }
            }
            if collapsed.is_empty() {
                let id = crate::sset::CellId(reps.len() as u32);
                let faces = if n == 0 {
                    Vec::new()
                } else {
                    (0..=n)
                        .map(|i| {
                            let f = data.face(s, n, i);
                            index.get(&f).cloned().ok_or_else(|| {
                                Error::InvalidSSet("face not found in previous level".into())
                            })
                        })
                        .collect::<Result<Vec<_>>>()?
                };
                cells.push(CellData {
                    dim: n,
                    label: data.label(s),
                    faces,
                });
                reps.push(s.clone());
                index.insert(s.clone(), SimplexRef::nondegenerate(id, n));
                nondeg_here += 1;
            } else {
                // strip one collapse and reuse the lower normal form
                let i = collapsed[0];
                let t = data.face(s, n, i + 1);
                let lower = index.get(&t).ok_or_else(|| {
                    Error::InvalidSSet("degenerate core not found in previous level".into())
                })?;
                let si = DegeneracyOp::new(n, vec![i])?;
                index.insert(
                    s.clone(),
                    SimplexRef {
                        cell: lower.cell,
                        deg: lower.deg.compose(&si),
                    },
                );
            }
        }
        if audit {
            audit_level(&data, &level, n)?;
        }
        levels.push(level);
        if nondeg_here == 0 && n > 0 && data.empty_level_terminal() {
            exact = true;
            break;
        }
    }
    let sset = SSet::build(
        if exact || promise_exact {
            Cap::All
        } else {
            Cap::UpTo(cap)
        },
        cells,
    )?;
    Ok(Materialized {
        data,
        sset,
        reps,
        index,
        levels,
    })
}

fn audit_level<D: LevelData>(data: &D, level: &[D::Simplex], n: usize) -> Result<()> {
    for s in level {
        if n >= 2 {
            for j in 1..=n {
                for i in 0..j {
                    let a = data.face(&data.face(s, n, j), n - 1, i);
                    let b = data.face(&data.face(s, n, i), n - 1, j - 1);
                    if a != b {
                        return Err(Error::InvalidSSet(format!(
                            "identity d_{} d_{} != d_{} d_{} fails at level {}",
                            i, j, j - 1, i, n
                        )));
                    }
                }
            }
        }
        // d_i s_i = d_{i+1} s_i = id
        for i in 0..=n {
            let up = data.degeneracy(s, n, i);
            if data.face(&up, n + 1, i) != *s || data.face(&up, n + 1, i + 1) != *s {
                return Err(Error::InvalidSSet(format!(
                    "identity d s = id fails at level {} index {}",
                    n, i
                )));
            }
        }
    }
    Ok(())
}
