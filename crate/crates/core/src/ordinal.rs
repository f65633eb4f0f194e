//! Monotone maps between finite ordinals `[n] = {0, ..., n}` and their
//! epi-mono factorization.
//!
//! These are the arrows of the simplex category. Everything downstream
//! (face application, Eilenberg-Zilber normal forms, path spaces, edgewise
//! subdivision) reduces to composing ordinal maps and splitting them into a
//! surjection followed by an injection.

use crate::error::{Error, Result};

/// A weakly monotone map `[source_dim] -> [target_dim]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrdinalMap {
    source_dim: usize,
    target_dim: usize,
    values: Vec<usize>,
}

impl OrdinalMap {
    pub fn new(target_dim: usize, values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidOrdinal("empty value list".into()));
        }
        for w in values.windows(2) {
            if w[0] > w[1] {
                return Err(Error::InvalidOrdinal(format!(
                    "not monotone: {:?}",
                    values
                )));
            }
        }
        if *values.last().unwrap() > target_dim {
            return Err(Error::InvalidOrdinal(format!(
                "value {} exceeds target dim {}",
                values.last().unwrap(),
                target_dim
            )));
        }
        Ok(OrdinalMap {
            source_dim: values.len() - 1,
            target_dim,
            values,
        })
    }

    pub fn identity(n: usize) -> Self {
        OrdinalMap {
            source_dim: n,
            target_dim: n,
            values: (0..=n).collect(),
        }
    }

    /// The co-face `d^i : [n-1] -> [n]`, the injection omitting `i`.
    pub fn coface(n: usize, i: usize) -> Self {
        assert!(n >= 1 && i <= n);
        let values = (0..n).map(|v| if v < i { v } else { v + 1 }).collect();
        OrdinalMap {
            source_dim: n - 1,
            target_dim: n,
            values,
        }
    }

    /// The co-degeneracy `s^i : [n+1] -> [n]`, hitting `i` twice.
    pub fn codegeneracy(n: usize, i: usize) -> Self {
        assert!(i <= n);
        let values = (0..=n + 1)
            .map(|v| if v <= i { v } else { v - 1 })
            .collect();
        OrdinalMap {
            source_dim: n + 1,
            target_dim: n,
            values,
        }
    }

    /// The vertex map `[0] -> [n]` picking out `v`.
    pub fn vertex(n: usize, v: usize) -> Self {
        assert!(v <= n);
        OrdinalMap {
            source_dim: 0,
            target_dim: n,
            values: vec![v],
        }
    }

    /// The injection `[k] -> [n]` whose image is the given strictly
    /// increasing vertex set.
    pub fn injection(n: usize, image: &[usize]) -> Self {
        assert!(!image.is_empty());
        assert!(image.windows(2).all(|w| w[0] < w[1]));
        assert!(*image.last().unwrap() <= n);
        OrdinalMap {
            source_dim: image.len() - 1,
            target_dim: n,
            values: image.to_vec(),
        }
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, v: usize) -> usize {
        self.values[v]
    }

    pub fn is_identity(&self) -> bool {
        self.source_dim == self.target_dim && self.values.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        if self.values[0] != 0 || *self.values.last().unwrap() != self.target_dim {
            return false;
        }
        self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// `self ∘ other`, defined when `other` lands in `self`'s source.
    pub fn compose(&self, other: &OrdinalMap) -> OrdinalMap {
        assert_eq!(other.target_dim, self.source_dim, "composition mismatch");
        OrdinalMap {
            source_dim: other.source_dim,
            target_dim: self.target_dim,
            values: other.values.iter().map(|&v| self.values[v]).collect(),
        }
    }

    /// Unique epi-mono factorization: `self = injection ∘ surjection`.
    pub fn factorize(&self) -> (DegeneracyOp, OrdinalMap) {
        let mut image: Vec<usize> = Vec::with_capacity(self.values.len());
        let mut collapsed = Vec::new();
        for (i, &v) in self.values.iter().enumerate() {
            if i > 0 && v == self.values[i - 1] {
                collapsed.push(i - 1);
            } else {
                image.push(v);
            }
        }
        let surj = DegeneracyOp {
            source_dim: self.source_dim,
            collapsed,
        };
        let inj = OrdinalMap {
            source_dim: image.len() - 1,
            target_dim: self.target_dim,
            values: image,
        };
        (surj, inj)
    }

    /// Indices of `[target_dim]` missed by an injection, in increasing order.
    pub fn omitted(&self) -> Vec<usize> {
        debug_assert!(self.is_injective());
        let present: std::collections::BTreeSet<usize> = self.values.iter().copied().collect();
        (0..=self.target_dim)
            .filter(|v| !present.contains(v))
            .collect()
    }

    /// Conjugate by the order-reversing bijections of source and target.
    pub fn reversed(&self) -> OrdinalMap {
        let values = self
            .values
            .iter()
            .rev()
            .map(|&v| self.target_dim - v)
            .collect();
        OrdinalMap {
            source_dim: self.source_dim,
            target_dim: self.target_dim,
            values,
        }
    }
}

/// A surjection `[m] ↠ [m - r]` recorded by the `r` positions it collapses:
/// `i` is listed when the map sends `i` and `i+1` to the same value. This is
/// the composite of co-degeneracies in normal form; the empty list is the
/// identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegeneracyOp {
    source_dim: usize,
    collapsed: Vec<usize>,
}

impl DegeneracyOp {
    pub fn identity(n: usize) -> Self {
        DegeneracyOp {
            source_dim: n,
            collapsed: Vec::new(),
        }
    }

    pub fn new(source_dim: usize, collapsed: Vec<usize>) -> Result<Self> {
        if !collapsed.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidOrdinal(format!(
                "collapse set not strictly increasing: {:?}",
                collapsed
            )));
        }
        if let Some(&last) = collapsed.last() {
            if last + 1 > source_dim {
                return Err(Error::InvalidOrdinal(format!(
                    "collapse index {} out of range for [{}]",
                    last, source_dim
                )));
            }
        }
        Ok(DegeneracyOp {
            source_dim,
            collapsed,
        })
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.source_dim - self.collapsed.len()
    }

    pub fn collapsed(&self) -> &[usize] {
        &self.collapsed
    }

    pub fn is_identity(&self) -> bool {
        self.collapsed.is_empty()
    }

    pub fn as_ordinal(&self) -> OrdinalMap {
        let mut values = Vec::with_capacity(self.source_dim + 1);
        let mut drop = 0usize;
        let mut it = self.collapsed.iter().peekable();
        for i in 0..=self.source_dim {
            values.push(i - drop);
            if let Some(&&c) = it.peek() {
                if c == i {
                    drop += 1;
                    it.next();
                }
            }
        }
        OrdinalMap {
            source_dim: self.source_dim,
            target_dim: self.source_dim - self.collapsed.len(),
            values,
        }
    }

    /// Recover the normal form of a surjective ordinal map.
    pub fn from_surjection(f: &OrdinalMap) -> Result<Self> {
        if !f.is_surjective() {
            return Err(Error::InvalidOrdinal(format!(
                "not surjective: {:?}",
                f.values
            )));
        }
        let (s, inj) = f.factorize();
        debug_assert!(inj.is_identity());
        Ok(s)
    }

    /// `self ∘ other` as surjections.
    pub fn compose(&self, other: &DegeneracyOp) -> DegeneracyOp {
        let f = self.as_ordinal().compose(&other.as_ordinal());
        let (s, inj) = f.factorize();
        debug_assert!(inj.is_identity());
        s
    }

    /// Solve `rho ∘ inner = self` for `rho`, when `self` is constant on the
    /// fibers of `inner`. Returns `None` otherwise.
    pub fn factor_through(&self, inner: &DegeneracyOp) -> Option<DegeneracyOp> {
        debug_assert_eq!(self.source_dim, inner.source_dim);
        let me = self.as_ordinal();
        let inn = inner.as_ordinal();
        let mut values = vec![usize::MAX; inn.target_dim() + 1];
        for i in 0..=self.source_dim {
            let t = inn.apply(i);
            let v = me.apply(i);
            if values[t] == usize::MAX {
                values[t] = v;
            } else if values[t] != v {
                return None;
            }
        }
        let rho = OrdinalMap::new(me.target_dim(), values).ok()?;
        DegeneracyOp::from_surjection(&rho).ok()
    }

    /// Conjugate by order reversal: the surjection collapsing `i` becomes the
    /// one collapsing `m - 1 - i`.
    pub fn reversed(&self) -> DegeneracyOp {
        let mut collapsed: Vec<usize> = self
            .collapsed
            .iter()
            .map(|&i| self.source_dim - 1 - i)
            .collect();
        collapsed.sort_unstable();
        DegeneracyOp {
            source_dim: self.source_dim,
            collapsed,
        }
    }

    /// Shift every collapse index by `k` (the source dimension grows by `k`).
    pub fn shifted(&self, k: usize, new_source_dim: usize) -> DegeneracyOp {
        DegeneracyOp {
            source_dim: new_source_dim,
            collapsed: self.collapsed.iter().map(|&i| i + k).collect(),
        }
    }
}

/// All surjections `[n] ↠ [k]`, i.e. all collapse sets of size `n - k`.
pub fn surjections(n: usize, k: usize) -> Vec<DegeneracyOp> {
    assert!(k <= n);
    let r = n - k;
    let mut out = Vec::new();
    let mut pick = Vec::with_capacity(r);
    fn rec(start: usize, left: usize, n: usize, pick: &mut Vec<usize>, out: &mut Vec<DegeneracyOp>) {
        if left == 0 {
            out.push(DegeneracyOp {
                source_dim: n,
                collapsed: pick.clone(),
            });
            return;
        }
        for i in start..n {
            pick.push(i);
            rec(i + 1, left - 1, n, pick, out);
            pick.pop();
        }
    }
    rec(0, r, n, &mut pick, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_identity() {
        let f = OrdinalMap::identity(2);
        let (s, i) = f.factorize();
        assert!(s.is_identity());
        assert!(i.is_identity());
    }

    #[test]
    fn factorize_collapse() {
        // [0,0,1] : [2] -> [1] collapses index 0, injection is the identity.
        let f = OrdinalMap::new(1, vec![0, 0, 1]).unwrap();
        let (s, i) = f.factorize();
        assert_eq!(s.collapsed(), &[0]);
        assert!(i.is_identity());
    }

    #[test]
    fn factorize_mixed() {
        // [0,0,2] : [2] -> [2] collapses 0, injection omits 1.
        let f = OrdinalMap::new(2, vec![0, 0, 2]).unwrap();
        let (s, i) = f.factorize();
        assert_eq!(s.collapsed(), &[0]);
        assert_eq!(i.omitted(), vec![1]);
        // recomposing yields f
        let back = i.compose(&s.as_ordinal());
        assert_eq!(back, f);
    }

    #[test]
    fn factorize_exhaustive_unique() {
        // For every monotone [2] -> [2], the factorization is the unique
        // surjection/injection pair that recomposes to it.
        fn all_monotone(src: usize, tgt: usize) -> Vec<Vec<usize>> {
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
        for vals in all_monotone(2, 2) {
            let f = OrdinalMap::new(2, vals).unwrap();
            let (s, i) = f.factorize();
            assert_eq!(i.compose(&s.as_ordinal()), f);
            // exhaustive check over all factor pairs
            let mut found = 0;
            for k in 0..=2usize {
                for s2 in surjections(2, k) {
                    for img in all_monotone(k, 2) {
                        if img.windows(2).all(|w| w[0] < w[1]) {
                            let i2 = OrdinalMap::new(2, img).unwrap();
                            if i2.compose(&s2.as_ordinal()) == f {
                                found += 1;
                                assert_eq!(s2, s);
                                assert_eq!(i2, i);
                            }
                        }
                    }
                }
            }
            assert_eq!(found, 1);
        }
    }

    #[test]
    fn degeneracy_roundtrip() {
        let d = DegeneracyOp::new(4, vec![1, 3]).unwrap();
        let f = d.as_ordinal();
        assert!(f.is_surjective());
        assert_eq!(DegeneracyOp::from_surjection(&f).unwrap(), d);
    }

    #[test]
    fn factor_through() {
        // s: [3] ->> [1] collapsing {0,2}; inner: [3] ->> [2] collapsing {2}.
        let s = DegeneracyOp::new(3, vec![0, 2]).unwrap();
        let inner = DegeneracyOp::new(3, vec![2]).unwrap();
        let rho = s.factor_through(&inner).unwrap();
        assert_eq!(rho.compose(&inner), s);
        // s does not factor through collapsing {1}
        let inner2 = DegeneracyOp::new(3, vec![1]).unwrap();
        assert!(s.factor_through(&inner2).is_none());
    }

    #[test]
    fn simplicial_relation() {
        // d^j ∘ d^i = d^i ∘ d^{j-1} for i < j
        for n in 2..5usize {
            for j in 0..=n {
                for i in 0..j {
                    let a = OrdinalMap::coface(n, j).compose(&OrdinalMap::coface(n - 1, i));
                    let b = OrdinalMap::coface(n, i).compose(&OrdinalMap::coface(n - 1, j - 1));
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn reversal_involutive() {
        let f = OrdinalMap::new(4, vec![0, 0, 2, 4]).unwrap();
        assert_eq!(f.reversed().reversed(), f);
        let d = DegeneracyOp::new(5, vec![0, 2, 4]).unwrap();
        assert_eq!(d.reversed().reversed(), d);
    }
}
