//! Polygon triangulations: the 2-Segal spines.
//!
//! The `(n+1)`-gon has vertices `0..=n` with boundary edges `i -> i+1` and
//! `0 -> n`. A triangulation is a set of `n-1` pairwise non-crossing
//! triangles covering it.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangulation {
    /// Polygon vertex count is `n + 1`.
    pub n: usize,
    /// Triples `(i, j, k)` with `i < j < k`.
    pub triangles: BTreeSet<(usize, usize, usize)>,
}

impl Triangulation {
    pub fn new(n: usize, triangles: impl IntoIterator<Item = (usize, usize, usize)>) -> Result<Self> {
        let t = Triangulation {
            n,
            triangles: triangles.into_iter().collect(),
        };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidTriangulation("polygon needs n >= 2".into()));
        }
        if self.triangles.len() != self.n - 1 {
            return Err(Error::InvalidTriangulation(format!(
                "expected {} triangles, got {}",
                self.n - 1,
                self.triangles.len()
            )));
        }
        let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
        for &(i, j, k) in &self.triangles {
            if !(i < j && j < k && k <= self.n) {
                return Err(Error::InvalidTriangulation(format!(
                    "bad triangle ({},{},{})",
                    i, j, k
                )));
            }
            edges.insert((i, j));
            edges.insert((j, k));
            edges.insert((i, k));
        }
        // boundary edges covered
        for i in 0..self.n {
            if !edges.contains(&(i, i + 1)) {
                return Err(Error::InvalidTriangulation(format!(
                    "boundary edge {}->{} uncovered",
                    i,
                    i + 1
                )));
            }
        }
        if !edges.contains(&(0, self.n)) {
            return Err(Error::InvalidTriangulation("long edge 0->n uncovered".into()));
        }
        // non-crossing diagonals
        let diags: Vec<(usize, usize)> = edges
            .iter()
            .copied()
            .filter(|&(a, b)| !(b == a + 1 || (a == 0 && b == self.n)))
            .collect();
        for (x, &(a, b)) in diags.iter().enumerate() {
            for &(c, d) in &diags[x + 1..] {
                let crossing = (a < c && c < b && b < d) || (c < a && a < d && d < b);
                if crossing {
                    return Err(Error::InvalidTriangulation(format!(
                        "diagonals {}-{} and {}-{} cross",
                        a, b, c, d
                    )));
                }
            }
        }
        Ok(())
    }

    /// Vertices whose flanking triangle lies in the triangulation. Inner
    /// vertex `0 < i < n` is extreme when `(i-1, i, i+1)` is present; `0`
    /// when `(0, 1, n)` is; `n` when `(0, n-1, n)` is.
    pub fn extreme_vertices(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for v in 0..=self.n {
            let tri = if v == 0 {
                (0, 1, self.n)
            } else if v == self.n {
                (0, self.n - 1, self.n)
            } else {
                (v - 1, v, v + 1)
            };
            if self.triangles.contains(&tri) {
                out.insert(v);
            }
        }
        out
    }

    /// Restriction to the face omitting an extreme vertex `v`: remove the
    /// ear triangle at `v` and relabel the remaining vertices in order.
    pub fn restrict_omitting(&self, v: usize) -> Result<Triangulation> {
        if !self.extreme_vertices().contains(&v) {
            return Err(Error::InvalidTriangulation(format!(
                "vertex {} is not extreme",
                v
            )));
        }
        let relabel = |x: usize| if x > v { x - 1 } else { x };
        let tris = self
            .triangles
            .iter()
            .filter(|&&(a, b, c)| a != v && b != v && c != v)
            .map(|&(a, b, c)| (relabel(a), relabel(b), relabel(c)));
        Triangulation::new(self.n - 1, tris)
    }
}

/// All triangulations of the `(n+1)`-gon, enumerated by the triangle on the
/// long edge `0 -> n` and recursion on the two sub-polygons. The count is
/// the Catalan number `C(n-1)`.
pub fn enumerate_triangulations(n: usize) -> Vec<Triangulation> {
    assert!(n >= 2);
    fn rec(lo: usize, hi: usize, verts: &[usize]) -> Vec<Vec<(usize, usize, usize)>> {
        // triangulations of the polygon on verts[lo..=hi]
        if hi - lo < 2 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for k in lo + 1..hi {
            for left in rec(lo, k, verts) {
                for right in rec(k, hi, verts) {
                    let mut t = vec![(verts[lo], verts[k], verts[hi])];
                    t.extend(left.iter().copied());
                    t.extend(right.iter().copied());
                    out.push(t);
                }
            }
        }
        out
    }
    let verts: Vec<usize> = (0..=n).collect();
    rec(0, n, &verts)
        .into_iter()
        .map(|t| Triangulation::new(n, t).expect("recursive enumeration yields valid triangulations"))
        .collect()
}

/// A triangulation of the `(n+1)`-gon in which both `i` and `j` are extreme,
/// for a broken pair `{i, j}`. The ear at each of the two vertices is cut
/// off and the remaining polygon is fanned from its least vertex.
pub fn triangulation_with_extremes(n: usize, i: usize, j: usize) -> Result<Triangulation> {
    if n < 3 {
        return Err(Error::InvalidTriangulation("need n >= 3".into()));
    }
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    if !crate::shapes::is_broken_pair(i, j, n) {
        return Err(Error::InvalidTriangulation(format!(
            "{{{},{}}} is not broken in {{0..{}}}",
            i, j, n
        )));
    }
    let ear = |v: usize| -> (usize, usize, usize) {
        if v == 0 {
            (0, 1, n)
        } else if v == n {
            (0, n - 1, n)
        } else {
            (v - 1, v, v + 1)
        }
    };
    let mut triangles = vec![ear(i), ear(j)];
    // remaining polygon: cyclic vertex list without i and j, rotated so it
    // starts at its least vertex, then fanned from that vertex
    let rest: Vec<usize> = (0..=n).filter(|&v| v != i && v != j).collect();
    // `rest` is in increasing order; as a cyclic polygon its edges are
    // consecutive entries plus the wrap-around, so fanning from rest[0]
    // works directly.
    let base = rest[0];
    for w in rest[1..].windows(2) {
        let mut tri = [base, w[0], w[1]];
        tri.sort_unstable();
        triangles.push((tri[0], tri[1], tri[2]));
    }
    let t = Triangulation::new(n, triangles)?;
    let ext = t.extreme_vertices();
    debug_assert!(ext.contains(&i) && ext.contains(&j));
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: triangulations as maximal non-crossing diagonal
    /// sets, by brute force over all diagonal subsets.
    fn brute_force_count(n: usize) -> usize {
        let mut diags = Vec::new();
        for a in 0..=n {
            for b in a + 2..=n {
                if a == 0 && b == n {
                    continue;
                }
                diags.push((a, b));
            }
        }
        let need = n.saturating_sub(2);
        let mut count = 0usize;
        let m = diags.len();
        for mask in 0u32..(1 << m) {
            if mask.count_ones() as usize != need {
                continue;
            }
            let picked: Vec<(usize, usize)> = (0..m)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| diags[i])
                .collect();
            let ok = picked.iter().enumerate().all(|(x, &(a, b))| {
                picked[x + 1..].iter().all(|&(c, d)| {
                    !((a < c && c < b && b < d) || (c < a && a < d && d < b))
                })
            });
            if ok {
                count += 1;
            }
        }
        count.max(if n == 2 { 1 } else { 0 })
    }

    #[test]
    fn catalan_counts() {
        assert_eq!(enumerate_triangulations(2).len(), 1);
        assert_eq!(enumerate_triangulations(3).len(), 2);
        assert_eq!(enumerate_triangulations(5).len(), 14);
        for n in 2..=7 {
            assert_eq!(enumerate_triangulations(n).len(), brute_force_count(n));
        }
    }

    #[test]
    fn extreme_vertices_fan() {
        // fan at 0 in the hexagon
        let t = Triangulation::new(5, [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5)]).unwrap();
        assert_eq!(t.extreme_vertices().into_iter().collect::<Vec<_>>(), vec![1, 5]);
        // the single triangle: every vertex extreme
        let t2 = Triangulation::new(2, [(0, 1, 2)]).unwrap();
        assert_eq!(t2.extreme_vertices().len(), 3);
        // the second hexagon triangulation from the spine figure
        let t3 = Triangulation::new(5, [(0, 1, 2), (0, 2, 4), (2, 3, 4), (0, 4, 5)]).unwrap();
        assert_eq!(
            t3.extreme_vertices().into_iter().collect::<Vec<_>>(),
            vec![1, 3, 5]
        );
    }

    #[test]
    fn with_extremes_examples() {
        // n=3: extremes {0,2} come from the triangulation {013, 123}
        let t = triangulation_with_extremes(3, 0, 2).unwrap();
        assert_eq!(
            t.triangles.iter().copied().collect::<Vec<_>>(),
            vec![(0, 1, 3), (1, 2, 3)]
        );
        let t2 = triangulation_with_extremes(4, 1, 3).unwrap();
        assert_eq!(
            t2.triangles.iter().copied().collect::<Vec<_>>(),
            vec![(0, 1, 2), (0, 2, 4), (2, 3, 4)]
        );
        let t3 = triangulation_with_extremes(5, 0, 3).unwrap();
        assert!(t3.triangles.contains(&(0, 1, 5)));
        assert!(t3.triangles.contains(&(2, 3, 4)));
    }

    #[test]
    fn with_extremes_rejects_adjacent() {
        assert!(triangulation_with_extremes(3, 0, 1).is_err());
        assert!(triangulation_with_extremes(4, 0, 4).is_err());
    }

    #[test]
    fn restriction_is_valid() {
        for t in enumerate_triangulations(5) {
            for v in t.extreme_vertices() {
                t.restrict_omitting(v).unwrap();
            }
        }
    }
}
