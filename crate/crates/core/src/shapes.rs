//! The combinatorial shapes of the horn calculus: standard simplices,
//! boundaries, (generalized) horns, 2-Segal spines, iso-horns and isoplexes,
//! and the edgewise shapes.
//!
//! Horn notation: a generalized horn on `Delta[n]` is determined by which
//! codimension-1 faces are present. Externally we use missing-face notation
//! (the paper's `Λ^{i,j}[n]`); internally [`GeneralizedHorn`] keeps both the
//! missing set and its complement to avoid sign errors.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::map::Inclusion;
use crate::ordinal::DegeneracyOp;
use crate::sset::{Cap, CellData, CellId, SSet, SimplexRef, Subcomplex};
use crate::triangulation::Triangulation;

/// Broken subsets of `{0..n}`, per the defining quantifier: there exist
/// `i < j < k < l` with `i, k` in `S` and `j, l` not, or vice versa.
pub fn is_broken(s: &BTreeSet<usize>, n: usize) -> Result<bool> {
    if n < 3 {
        return Err(Error::InvalidShape("broken subsets need n >= 3".into()));
    }
    if s.iter().any(|&v| v > n) {
        return Err(Error::InvalidShape("subset exceeds {0..n}".into()));
    }
    let inside = |v: usize| s.contains(&v);
    for i in 0..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                for l in k + 1..=n {
                    let a = inside(i) && !inside(j) && inside(k) && !inside(l);
                    let b = !inside(i) && inside(j) && !inside(k) && inside(l);
                    if a || b {
                        return Ok(true);
                    }
                }
            }
        }
    }
    Ok(false)
}

/// The two-element case: `{i, j}` is broken exactly when `i` and `j` are
/// non-adjacent modulo `n + 1`.
pub fn is_broken_pair(i: usize, j: usize, n: usize) -> bool {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    i != j && j - i >= 2 && !(i == 0 && j == n)
}

/// A generalized horn `Λ^S[n]`, stored by its missing faces.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneralizedHorn {
    n: usize,
    missing: BTreeSet<usize>,
}

impl GeneralizedHorn {
    pub fn from_missing(n: usize, missing: impl IntoIterator<Item = usize>) -> Result<Self> {
        let missing: BTreeSet<usize> = missing.into_iter().collect();
        if missing.is_empty() || missing.len() > n {
            return Err(Error::InvalidShape(format!(
                "need a proper nonempty present set: {} missing of {} faces",
                missing.len(),
                n + 1
            )));
        }
        if missing.iter().any(|&v| v > n) {
            return Err(Error::InvalidShape("missing index out of range".into()));
        }
        Ok(GeneralizedHorn { n, missing })
    }

    pub fn from_present(n: usize, present: impl IntoIterator<Item = usize>) -> Result<Self> {
        let present: BTreeSet<usize> = present.into_iter().collect();
        let missing = (0..=n).filter(|v| !present.contains(v)).collect::<Vec<_>>();
        GeneralizedHorn::from_missing(n, missing)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn missing(&self) -> &BTreeSet<usize> {
        &self.missing
    }

    pub fn present(&self) -> BTreeSet<usize> {
        (0..=self.n).filter(|v| !self.missing.contains(v)).collect()
    }

    /// Present set broken (the horn is a *generalized 2-Segal* horn).
    pub fn is_generalized_two_segal(&self) -> Result<bool> {
        is_broken(&self.present(), self.n)
    }

    /// Exactly two missing faces forming a broken pair.
    pub fn is_two_segal(&self) -> bool {
        if self.missing.len() != 2 {
            return false;
        }
        let v: Vec<usize> = self.missing.iter().copied().collect();
        is_broken_pair(v[0], v[1], self.n)
    }
}

/// All 2-Segal horns `Λ^{i,j}[n]`: missing pairs broken in `{0..n}`.
pub fn enumerate_two_segal_horns(n: usize) -> Result<Vec<GeneralizedHorn>> {
    if n < 3 {
        return Err(Error::InvalidShape("2-Segal horns need n >= 3".into()));
    }
    let mut out = Vec::new();
    for i in 0..=n {
        for j in i + 1..=n {
            if is_broken_pair(i, j, n) {
                out.push(GeneralizedHorn::from_missing(n, [i, j])?);
            }
        }
    }
    Ok(out)
}

/// Shape descriptors buildable by [`build_shape`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShapeSpec {
    Delta { n: usize },
    Boundary { n: usize },
    Horn { n: usize, missing: usize },
    GenHorn(GeneralizedHorn),
    Spine2Segal(Triangulation),
    Spine1 { n: usize },
    IsoHorn { n: usize, i: usize, depth: usize },
    Isoplex { n: usize, i: usize, depth: usize },
    EdgewiseA { n: usize, i: usize },
    EdgewiseI { n: usize },
    JTrunc { depth: usize },
}

/// The standard simplex `Delta[n]`: cells are the nonempty vertex subsets,
/// labelled by their vertex words. The dim-0 cell for vertex `v` has id `v`.
pub fn delta(n: usize) -> Arc<SSet> {
    let mut subsets: Vec<Vec<usize>> = Vec::new();
    for d in 0..=n {
        let mut pick = Vec::new();
        fn rec(start: usize, left: usize, n: usize, pick: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if left == 0 {
                out.push(pick.clone());
                return;
            }
            for v in start..=n {
                pick.push(v);
                rec(v + 1, left - 1, n, pick, out);
                pick.pop();
            }
        }
        rec(0, d + 1, n, &mut pick, &mut subsets);
    }
    let index: HashMap<Vec<usize>, CellId> = subsets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), CellId(i as u32)))
        .collect();
    let data = subsets
        .iter()
        .map(|s| {
            let d = s.len() - 1;
            let faces = if d == 0 {
                Vec::new()
            } else {
                (0..=d)
                    .map(|i| {
                        let mut f = s.clone();
                        f.remove(i);
                        SimplexRef::nondegenerate(index[&f], d - 1)
                    })
                    .collect()
            };
            CellData {
                dim: d,
                label: Some(vertex_word_label(s)),
                faces,
            }
        })
        .collect();
    SSet::build(Cap::All, data).expect("standard simplex is valid")
}

fn vertex_word_label(word: &[usize]) -> String {
    word.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(".")
}

/// The cell of `delta(n)` on a strictly increasing vertex set.
pub fn delta_cell(d: &SSet, verts: &[usize]) -> CellId {
    debug_assert!(verts.windows(2).all(|w| w[0] < w[1]));
    let label = vertex_word_label(verts);
    d.cells()
        .find(|c| c.label.as_deref() == Some(label.as_str()))
        .unwrap_or_else(|| panic!("no cell {:?} in delta", verts))
        .id
}

fn delta_subcomplex<F: Fn(&[usize]) -> bool>(
    n: usize,
    keep: F,
) -> (Arc<SSet>, Inclusion, Arc<SSet>) {
    let amb = delta(n);
    let seeds: Vec<CellId> = amb
        .cells()
        .filter(|c| {
            let verts: Vec<usize> = amb
                .vertices_of(&SimplexRef::nondegenerate(c.id, c.dim))
                .iter()
                .map(|v| v.index())
                .collect();
            keep(&verts)
        })
        .map(|c| c.id)
        .collect();
    let sub = Subcomplex::generated(&amb, &seeds);
    let (s, parents) = sub.extract(Cap::All);
    let incl = Inclusion::from_parent_cells(Arc::clone(&s), Arc::clone(&amb), &parents)
        .expect("subcomplex inclusion is valid");
    (s, incl, amb)
}

/// Cells of the generalized horn: proper subsets `T` not containing the
/// whole present set.
fn genhorn_keep(present: &BTreeSet<usize>, n: usize, verts: &[usize]) -> bool {
    if verts.len() == n + 1 {
        return false;
    }
    present.iter().any(|p| !verts.contains(p))
}

/// Union of the generalized horn with extra full sub-simplices on the given
/// vertex sets; used for the retract middle objects.
pub fn genhorn_plus(
    n: usize,
    missing: &BTreeSet<usize>,
    extra: &[Vec<usize>],
) -> Result<(Arc<SSet>, Inclusion)> {
    let gh = GeneralizedHorn::from_missing(n, missing.iter().copied())?;
    let present = gh.present();
    let (s, incl, _) = delta_subcomplex(n, |verts| {
        if genhorn_keep(&present, n, verts) {
            return true;
        }
        extra
            .iter()
            .any(|e| verts.iter().all(|v| e.contains(v)))
    });
    Ok((s, incl))
}

/// Build a shape together with its inclusion into the ambient simplex or
/// isoplex. `JTrunc` is its own ambient.
pub fn build_shape(spec: &ShapeSpec) -> Result<(Arc<SSet>, Inclusion)> {
    match spec {
        ShapeSpec::Delta { n } => {
            let d = delta(*n);
            Ok((Arc::clone(&d), Inclusion::identity(&d)))
        }
        ShapeSpec::Boundary { n } => {
            if *n == 0 {
                // empty complex
                let s = SSet::build(Cap::All, Vec::new())?;
                let amb = delta(0);
                let incl = Inclusion::from_parent_cells(Arc::clone(&s), amb, &[])?;
                return Ok((s, incl));
            }
            let (s, i, _) = delta_subcomplex(*n, |verts| verts.len() <= *n);
            Ok((s, i))
        }
        ShapeSpec::Horn { n, missing } => {
            if *missing > *n || *n < 1 {
                return Err(Error::InvalidShape(format!(
                    "horn index {} out of range for n={}",
                    missing, n
                )));
            }
            let present: BTreeSet<usize> = (0..=*n).filter(|v| v != missing).collect();
            let (s, i, _) = delta_subcomplex(*n, |verts| genhorn_keep(&present, *n, verts));
            Ok((s, i))
        }
        ShapeSpec::GenHorn(gh) => {
            let present = gh.present();
            let (s, i, _) = delta_subcomplex(gh.n(), |verts| genhorn_keep(&present, gh.n(), verts));
            Ok((s, i))
        }
        ShapeSpec::Spine2Segal(t) => {
            t.validate()?;
            let tris: Vec<Vec<usize>> = t.triangles.iter().map(|&(a, b, c)| vec![a, b, c]).collect();
            let (s, i, _) = delta_subcomplex(t.n, |verts| {
                tris.iter().any(|tr| verts.iter().all(|v| tr.contains(v)))
            });
            Ok((s, i))
        }
        ShapeSpec::Spine1 { n } => {
            if *n < 1 {
                return Err(Error::InvalidShape("spine needs n >= 1".into()));
            }
            let (s, i, _) = delta_subcomplex(*n, |verts| match verts {
                [_] => true,
                [a, b] => *b == *a + 1,
                _ => false,
            });
            Ok((s, i))
        }
        ShapeSpec::IsoHorn { n, i, depth } => {
            if *i + 1 > *n {
                return Err(Error::InvalidShape(format!(
                    "iso-horn needs 0 <= i <= n-1, got i={} n={}",
                    i, n
                )));
            }
            if *depth < *n {
                return Err(Error::InvalidShape(format!(
                    "iso-horn depth {} below intrinsic dimension {}",
                    depth, n
                )));
            }
            let nerve = isoplex_nerve(*n, *i, *depth)?;
            // union of the faces d_j for j != i: words avoiding some j != i
            let seeds: Vec<CellId> = nerve
                .sset
                .cells()
                .filter(|c| {
                    let w = &nerve.words[c.id.index()];
                    (0..=*n).any(|j| j != *i && w.iter().all(|&v| v != j))
                })
                .map(|c| c.id)
                .collect();
            let sub = Subcomplex::generated(&nerve.sset, &seeds);
            let (s, parents) = sub.extract(Cap::UpTo(*depth));
            let incl =
                Inclusion::from_parent_cells(Arc::clone(&s), Arc::clone(&nerve.sset), &parents)?;
            Ok((s, incl))
        }
        ShapeSpec::Isoplex { n, i, depth } => {
            let nerve = isoplex_nerve(*n, *i, *depth)?;
            Ok((Arc::clone(&nerve.sset), Inclusion::identity(&nerve.sset)))
        }
        ShapeSpec::JTrunc { depth } => {
            let nerve = isoplex_nerve(1, 0, *depth)?;
            Ok((Arc::clone(&nerve.sset), Inclusion::identity(&nerve.sset)))
        }
        ShapeSpec::EdgewiseA { n, i } => {
            if *i > *n || *n < 1 {
                return Err(Error::InvalidShape("bad edgewise horn indices".into()));
            }
            let m = 2 * *n + 1;
            let nn = *n;
            let ii = *i;
            let (s, incl, _) = delta_subcomplex(m, move |verts| {
                (0..=nn).any(|l| {
                    l != ii && !verts.contains(&(nn - l)) && !verts.contains(&(nn + 1 + l))
                })
            });
            Ok((s, incl))
        }
        ShapeSpec::EdgewiseI { n } => {
            if *n < 1 {
                return Err(Error::InvalidShape("edgewise spine needs n >= 1".into()));
            }
            let m = 2 * *n + 1;
            let quads: Vec<Vec<usize>> = (0..*n)
                .map(|j| vec![*n - j - 1, *n - j, *n + j + 1, *n + j + 2])
                .collect();
            let (s, incl, _) = delta_subcomplex(m, move |verts| {
                quads.iter().any(|q| verts.iter().all(|v| q.contains(v)))
            });
            Ok((s, incl))
        }
    }
}

/// The nerve of the thin category `[n]_i` (the poset `[n]` with the step
/// `i -> i+1` inverted), truncated at `depth`. Cells are repetition-free
/// vertex words; the word index supports looking simplices up by word.
pub struct IsoplexNerve {
    pub sset: Arc<SSet>,
    pub words: Vec<Vec<usize>>,
    pub index: HashMap<Vec<usize>, CellId>,
    pub n: usize,
    pub i: usize,
}

impl IsoplexNerve {
    /// Normal form of the simplex traced by an arbitrary valid word
    /// (consecutive repeats become degeneracies).
    pub fn simplex_of_word(&self, word: &[usize]) -> Result<SimplexRef> {
        let mut dedup = Vec::new();
        let mut collapsed = Vec::new();
        for (t, &v) in word.iter().enumerate() {
            if t > 0 && v == word[t - 1] {
                collapsed.push(t - 1);
            } else {
                dedup.push(v);
            }
        }
        let cell = self.index.get(&dedup).ok_or_else(|| {
            Error::InvalidShape(format!("word {:?} not in truncated nerve", word))
        })?;
        Ok(SimplexRef {
            cell: *cell,
            deg: DegeneracyOp::new(word.len() - 1, collapsed)?,
        })
    }
}

/// Morphism existence in `[n]_i`: `a <= b`, or the inverted step.
fn isoplex_hom(n: usize, i: usize, a: usize, b: usize) -> bool {
    debug_assert!(a <= n && b <= n);
    a <= b || (a == i + 1 && b == i)
}

pub fn isoplex_nerve(n: usize, i: usize, depth: usize) -> Result<IsoplexNerve> {
    if n < 1 || i + 1 > n {
        return Err(Error::InvalidShape(format!(
            "isoplex needs n >= 1 and 0 <= i <= n-1, got n={} i={}",
            n, i
        )));
    }
    // enumerate repetition-free words level by level
    let mut words: Vec<Vec<usize>> = Vec::new();
    let mut level: Vec<Vec<usize>> = (0..=n).map(|v| vec![v]).collect();
    words.extend(level.iter().cloned());
    for _ in 1..=depth {
        let mut next = Vec::new();
        for w in &level {
            let last = *w.last().unwrap();
            for b in 0..=n {
                if b != last && isoplex_hom(n, i, last, b) {
                    let mut w2 = w.clone();
                    w2.push(b);
                    next.push(w2);
                }
            }
        }
        words.extend(next.iter().cloned());
        level = next;
    }
    words.sort_by_key(|w| (w.len(), w.clone()));
    let index: HashMap<Vec<usize>, CellId> = words
        .iter()
        .enumerate()
        .map(|(t, w)| (w.clone(), CellId(t as u32)))
        .collect();
    let data: Vec<CellData> = words
        .iter()
        .map(|w| {
            let d = w.len() - 1;
            let faces = if d == 0 {
                Vec::new()
            } else {
                (0..=d)
                    .map(|l| {
                        let mut f = w.clone();
                        f.remove(l);
                        // at most one junction repeat can appear
                        let mut collapsed = Vec::new();
                        if l > 0 && l < d && f[l - 1] == f[l] {
                            f.remove(l);
                            collapsed.push(l - 1);
                        }
                        SimplexRef {
                            cell: index[&f],
                            deg: DegeneracyOp::new(d - 1, collapsed).unwrap(),
                        }
                    })
                    .collect()
            };
            CellData {
                dim: d,
                label: Some(vertex_word_label(w)),
                faces,
            }
        })
        .collect();
    let sset = SSet::build(Cap::UpTo(depth), data)?;
    Ok(IsoplexNerve {
        sset,
        words,
        index,
        n,
        i,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn broken_examples() {
        let s: BTreeSet<usize> = [0, 2].into_iter().collect();
        assert!(is_broken(&s, 3).unwrap());
        let s: BTreeSet<usize> = [1, 3].into_iter().collect();
        assert!(is_broken(&s, 3).unwrap());
        let s: BTreeSet<usize> = [0, 1, 6, 7].into_iter().collect();
        assert!(!is_broken(&s, 7).unwrap());
        let s: BTreeSet<usize> = [0, 1, 3, 4, 5].into_iter().collect();
        assert!(is_broken(&s, 7).unwrap());
        assert!(is_broken(&BTreeSet::new(), 2).is_err());
    }

    /// Independent reading: broken iff neither the set nor its complement is
    /// a cyclic arc modulo n+1.
    fn is_cyclic_arc(s: &BTreeSet<usize>, n: usize) -> bool {
        let m = n + 1;
        if s.is_empty() || s.len() == m {
            return true;
        }
        (0..m).any(|start| (0..s.len()).all(|k| s.contains(&((start + k) % m))))
    }

    #[test]
    fn broken_equals_gap_reading() {
        for n in 3..=8usize {
            for mask in 0u32..(1 << (n + 1)) {
                let s: BTreeSet<usize> = (0..=n).filter(|&v| mask >> v & 1 == 1).collect();
                let broken = is_broken(&s, n).unwrap();
                let arc = is_cyclic_arc(&s, n);
                let comp: BTreeSet<usize> = (0..=n).filter(|v| !s.contains(v)).collect();
                let comp_arc = is_cyclic_arc(&comp, n);
                assert_eq!(broken, !arc && !comp_arc, "S={:?} n={}", s, n);
            }
        }
    }

    #[test]
    fn two_segal_horn_counts() {
        assert_eq!(enumerate_two_segal_horns(3).unwrap().len(), 2);
        assert_eq!(enumerate_two_segal_horns(4).unwrap().len(), 5);
        assert_eq!(enumerate_two_segal_horns(5).unwrap().len(), 9);
        let horns = enumerate_two_segal_horns(3).unwrap();
        let missing: Vec<Vec<usize>> = horns
            .iter()
            .map(|h| h.missing().iter().copied().collect())
            .collect();
        assert_eq!(missing, vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn horn_cell_counts() {
        let (h, _) = build_shape(&ShapeSpec::Horn { n: 2, missing: 1 }).unwrap();
        assert_eq!(h.cells_of_dim(0).len(), 3);
        assert_eq!(h.cells_of_dim(1).len(), 2);
        assert_eq!(h.cells_of_dim(2).len(), 0);

        let gh = GeneralizedHorn::from_missing(3, [0, 2]).unwrap();
        let (s, _) = build_shape(&ShapeSpec::GenHorn(gh)).unwrap();
        assert_eq!(s.cells_of_dim(0).len(), 4);
        assert_eq!(s.cells_of_dim(1).len(), 5);
        assert_eq!(s.cells_of_dim(2).len(), 2);
    }

    #[test]
    fn genhorn_closed_and_equals_face_union() {
        // cell-level: the horn is the union of the present faces of Delta[n]
        for n in 3..=5usize {
            for gh in enumerate_two_segal_horns(n).unwrap() {
                let (s, incl) = build_shape(&ShapeSpec::GenHorn(gh.clone())).unwrap();
                let amb = incl.cod();
                let present = gh.present();
                let mut expect: BTreeSet<CellId> = BTreeSet::new();
                for c in amb.cells() {
                    let verts: Vec<usize> = amb
                        .vertices_of(&SimplexRef::nondegenerate(c.id, c.dim))
                        .iter()
                        .map(|v| v.index())
                        .collect();
                    if present.iter().any(|p| !verts.contains(p)) && verts.len() <= n {
                        expect.insert(c.id);
                    }
                }
                let got: BTreeSet<CellId> =
                    (0..s.cell_count()).map(|i| incl.cell_image(CellId(i as u32))).collect();
                assert_eq!(got, expect);
            }
        }
    }

    #[test]
    fn jtrunc_counts() {
        let (j, _) = build_shape(&ShapeSpec::JTrunc { depth: 4 }).unwrap();
        assert_eq!(j.cells_of_dim(0).len(), 2);
        for d in 1..=4 {
            assert_eq!(j.cells_of_dim(d).len(), 2, "dim {}", d);
        }
        assert_eq!(j.cap(), Cap::UpTo(4));
    }

    #[test]
    fn isohorn_v12() {
        // V_1[2]: faces d_0 (the J part on {1,2}) and d_2 (the edge on {0,1})
        let (v, _) = build_shape(&ShapeSpec::IsoHorn { n: 2, i: 1, depth: 4 }).unwrap();
        assert_eq!(v.cells_of_dim(0).len(), 3);
        // edges: 0->1 plus the two alternating edges 1->2, 2->1
        assert_eq!(v.cells_of_dim(1).len(), 3);
        // higher cells: alternating words in {1,2} only
        assert_eq!(v.cells_of_dim(2).len(), 2);
        assert_eq!(v.cells_of_dim(3).len(), 2);
    }

    #[test]
    fn edgewise_shapes_build() {
        for n in 1..=3usize {
            let (s, incl) = build_shape(&ShapeSpec::EdgewiseI { n }).unwrap();
            s.check_simplicial_identities().unwrap();
            assert_eq!(incl.cod().top_dim(), 2 * n + 1);
            for i in 0..=n {
                let (a, _) = build_shape(&ShapeSpec::EdgewiseA { n, i }).unwrap();
                a.check_simplicial_identities().unwrap();
            }
        }
    }

    #[test]
    fn spine_shapes() {
        let t = Triangulation::new(3, [(0, 1, 3), (1, 2, 3)]).unwrap();
        let (s, _) = build_shape(&ShapeSpec::Spine2Segal(t)).unwrap();
        assert_eq!(s.cells_of_dim(2).len(), 2);
        assert_eq!(s.cells_of_dim(1).len(), 5);
        let (sp, _) = build_shape(&ShapeSpec::Spine1 { n: 3 }).unwrap();
        assert_eq!(sp.cells_of_dim(1).len(), 3);
        assert_eq!(sp.cells_of_dim(0).len(), 4);
    }
}
