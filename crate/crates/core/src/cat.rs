//! Finite categories and their nerves.

use std::collections::HashMap;
use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::materialize::{materialize, LevelData, Materialized};
use crate::sset::SSet;

#[derive(Debug, Clone)]
pub struct Morphism {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite category with a total composition table, checked for unit and
/// associativity laws at construction.
#[derive(Debug, Clone)]
pub struct FiniteCategory {
    pub objects: Vec<String>,
    pub morphisms: Vec<Morphism>,
    pub identities: Vec<usize>,
    /// `(g, f) -> g ∘ f` for composable pairs (`tgt f = src g`).
    pub compose: HashMap<(usize, usize), usize>,
}

impl FiniteCategory {
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        compose: HashMap<(usize, usize), usize>,
    ) -> Result<Self> {
        let c = FiniteCategory {
            objects,
            morphisms,
            identities,
            compose,
        };
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<()> {
        if self.identities.len() != self.objects.len() {
            return Err(Error::InvalidCategory("one identity per object".into()));
        }
        for (o, &i) in self.identities.iter().enumerate() {
            let m = &self.morphisms[i];
            if m.src != o || m.tgt != o {
                return Err(Error::InvalidCategory(format!(
                    "identity of object {} has wrong endpoints",
                    o
                )));
            }
        }
        for (g, mg) in self.morphisms.iter().enumerate() {
            for (f, mf) in self.morphisms.iter().enumerate() {
                let composable = mf.tgt == mg.src;
                match self.compose.get(&(g, f)) {
                    Some(&h) => {
                        if !composable {
                            return Err(Error::InvalidCategory(
                                "composite of non-composable pair".into(),
                            ));
                        }
                        let mh = &self.morphisms[h];
                        if mh.src != mf.src || mh.tgt != mg.tgt {
                            return Err(Error::InvalidCategory(
                                "composite has wrong endpoints".into(),
                            ));
                        }
                    }
                    None => {
                        if composable {
                            return Err(Error::InvalidCategory(format!(
                                "missing composite ({}, {})",
                                g, f
                            )));
                        }
                    }
                }
            }
        }
        // unit laws
        for (f, mf) in self.morphisms.iter().enumerate() {
            let il = self.identities[mf.tgt];
            let ir = self.identities[mf.src];
            if self.compose[&(il, f)] != f || self.compose[&(f, ir)] != f {
                return Err(Error::InvalidCategory(format!("unit law fails at {}", f)));
            }
        }
        // associativity, exhaustively
        for (h, mh) in self.morphisms.iter().enumerate() {
            for (g, mg) in self.morphisms.iter().enumerate() {
                if mg.tgt != mh.src {
                    continue;
                }
                for (f, mf) in self.morphisms.iter().enumerate() {
                    if mf.tgt != mg.src {
                        continue;
                    }
                    let a = self.compose[&(self.compose[&(h, g)], f)];
                    let b = self.compose[&(h, self.compose[&(g, f)])];
                    if a != b {
                        return Err(Error::InvalidCategory(format!(
                            "associativity fails at ({}, {}, {})",
                            h, g, f
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_identity_mor(&self, m: usize) -> bool {
        self.identities[self.morphisms[m].src] == m && self.morphisms[m].src == self.morphisms[m].tgt
    }

    /// Two-sided inverse of a morphism, when it exists.
    pub fn inverse(&self, m: usize) -> Option<usize> {
        let mor = &self.morphisms[m];
        (0..self.morphisms.len()).find(|&h| {
            let mh = &self.morphisms[h];
            mh.src == mor.tgt
                && mh.tgt == mor.src
                && self.compose[&(h, m)] == self.identities[mor.src]
                && self.compose[&(m, h)] == self.identities[mor.tgt]
        })
    }

    /// A finite group presented as a one-object category; `table[a][b]`
    /// is the product `a * b` and element 0 must be the unit.
    pub fn from_group_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        let morphisms = names
            .iter()
            .map(|nm| Morphism {
                name: nm.clone(),
                src: 0,
                tgt: 0,
            })
            .collect();
        let mut compose = HashMap::new();
        for g in 0..n {
            for f in 0..n {
                // reading g ∘ f as "f then g"
                compose.insert((g, f), table[g][f]);
            }
        }
        FiniteCategory::new(vec!["*".into()], morphisms, vec![0], compose)
    }

    pub fn cyclic_group(n: usize) -> FiniteCategory {
        let names = (0..n).map(|i| format!("g{}", i)).collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        FiniteCategory::from_group_table(names, table).expect("cyclic group is a category")
    }

    pub fn klein_four() -> FiniteCategory {
        let names = vec!["e".into(), "a".into(), "b".into(), "ab".into()];
        let table = vec![
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ];
        FiniteCategory::from_group_table(names, table).expect("klein four is a category")
    }

    pub fn sym3() -> FiniteCategory {
        // permutations of {0,1,2} composed as functions
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [1, 0, 2],
            [0, 2, 1],
            [2, 1, 0],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let idx = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap();
        let names = perms.iter().map(|p| format!("{}{}{}", p[0], p[1], p[2])).collect();
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        let c = [a[b[0]], a[b[1]], a[b[2]]];
                        idx(&c)
                    })
                    .collect()
            })
            .collect();
        FiniteCategory::from_group_table(names, table).expect("sym3 is a category")
    }

    /// The poset `[n]`, whose nerve is a standard simplex.
    pub fn chain(n: usize) -> FiniteCategory {
        let objects = (0..=n).map(|i| i.to_string()).collect();
        let mut morphisms = Vec::new();
        let mut by_pair = HashMap::new();
        for a in 0..=n {
            for b in a..=n {
                by_pair.insert((a, b), morphisms.len());
                morphisms.push(Morphism {
                    name: format!("{}to{}", a, b),
                    src: a,
                    tgt: b,
                });
            }
        }
        let identities = (0..=n).map(|a| by_pair[&(a, a)]).collect();
        let mut compose = HashMap::new();
        for (&(a, b), &f) in &by_pair {
            for (&(c, d), &g) in &by_pair {
                if b == c {
                    compose.insert((g, f), by_pair[&(a, d)]);
                }
            }
        }
        FiniteCategory::new(objects, morphisms, identities, compose).expect("chain is a category")
    }

    /// The free category on a DAG: objects are vertices, morphisms are
    /// paths, composition is concatenation.
    pub fn free_on_dag(vertices: usize, edges: &[(usize, usize)]) -> Result<FiniteCategory> {
        for &(a, b) in edges {
            if a >= b || b >= vertices {
                return Err(Error::InvalidCategory("edges must go strictly up".into()));
            }
        }
        // enumerate all paths (edge index lists), shortest first
        let mut paths: Vec<(usize, usize, Vec<usize>)> = Vec::new(); // (src, tgt, edges)
        for v in 0..vertices {
            paths.push((v, v, Vec::new()));
        }
        let mut frontier: Vec<(usize, usize, Vec<usize>)> = paths.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for (s, t, p) in &frontier {
                for (ei, &(a, b)) in edges.iter().enumerate() {
                    if a == *t {
                        let mut p2 = p.clone();
                        p2.push(ei);
                        next.push((*s, b, p2));
                    }
                }
            }
            paths.extend(next.iter().cloned());
            frontier = next;
        }
        let key: HashMap<Vec<usize>, usize> = paths
            .iter()
            .enumerate()
            .map(|(i, (_, _, p))| (p.clone(), i))
            .collect();
        let morphisms = paths
            .iter()
            .map(|(s, t, p)| Morphism {
                name: if p.is_empty() {
                    format!("id{}", s)
                } else {
                    p.iter().map(|e| format!("e{}", e)).collect::<Vec<_>>().join(".")
                },
                src: *s,
                tgt: *t,
            })
            .collect();
        let identities = (0..vertices)
            .map(|v| key[&Vec::new()] + v) // identity paths are listed first, in order
            .collect::<Vec<_>>();
        // identity paths are exactly the first `vertices` entries
        let identities = {
            let _ = identities;
            (0..vertices).collect::<Vec<_>>()
        };
        let mut compose = HashMap::new();
        for (g, (gs, _, gp)) in paths.iter().enumerate() {
            for (f, (_, ft, fp)) in paths.iter().enumerate() {
                if *ft == *gs {
                    let mut p = fp.clone();
                    p.extend(gp.iter().copied());
                    compose.insert((g, f), key[&p]);
                }
            }
        }
        FiniteCategory::new((0..vertices).map(|v| format!("v{}", v)).collect(), morphisms, identities, compose)
    }
}

/// Seeded random finite category: the free category on a random DAG,
/// resampled until it has at most `max_morphisms` morphisms.
pub fn random_category(seed: u64, max_objects: usize, max_morphisms: usize) -> FiniteCategory {
    for attempt in 0u64.. {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9).wrapping_add(attempt));
        let v = rng.gen_range(2..=max_objects);
        let mut edges = Vec::new();
        for a in 0..v {
            for b in a + 1..v {
                if rng.gen_bool(0.4) {
                    edges.push((a, b));
                }
            }
        }
        if let Ok(cat) = FiniteCategory::free_on_dag(v, &edges) {
            if cat.morphisms.len() <= max_morphisms {
                return cat;
            }
        }
    }
    unreachable!()
}

/// A nerve simplex: the starting object and a composable morphism string.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NerveSimplex {
    pub start: usize,
    pub mors: Vec<usize>,
}

pub struct NerveData {
    pub cat: FiniteCategory,
}

impl LevelData for NerveData {
    type Simplex = NerveSimplex;

    fn level(&self, n: usize) -> Result<Vec<NerveSimplex>> {
        let mut out: Vec<NerveSimplex> = (0..self.cat.objects.len())
            .map(|o| NerveSimplex {
                start: o,
                mors: Vec::new(),
            })
            .collect();
        for _ in 0..n {
            let mut next = Vec::new();
            for s in &out {
                let end = s
                    .mors
                    .last()
                    .map(|&m| self.cat.morphisms[m].tgt)
                    .unwrap_or(s.start);
                for (m, mor) in self.cat.morphisms.iter().enumerate() {
                    if mor.src == end {
                        let mut mors = s.mors.clone();
                        mors.push(m);
                        next.push(NerveSimplex {
                            start: s.start,
                            mors,
                        });
                    }
                }
            }
            out = next;
        }
        Ok(out)
    }

    fn face(&self, s: &NerveSimplex, n: usize, i: usize) -> NerveSimplex {
        debug_assert_eq!(s.mors.len(), n);
        if i == 0 {
            let start = self.cat.morphisms[s.mors[0]].tgt;
            NerveSimplex {
                start,
                mors: s.mors[1..].to_vec(),
            }
        } else if i == n {
            NerveSimplex {
                start: s.start,
                mors: s.mors[..n - 1].to_vec(),
            }
        } else {
            let mut mors = Vec::with_capacity(n - 1);
            mors.extend_from_slice(&s.mors[..i - 1]);
            mors.push(self.cat.compose[&(s.mors[i], s.mors[i - 1])]);
            mors.extend_from_slice(&s.mors[i + 1..]);
            NerveSimplex {
                start: s.start,
                mors,
            }
        }
    }

    fn degeneracy(&self, s: &NerveSimplex, _n: usize, i: usize) -> NerveSimplex {
        let obj = if i == 0 {
            s.start
        } else {
            self.cat.morphisms[s.mors[i - 1]].tgt
        };
        let mut mors = Vec::with_capacity(s.mors.len() + 1);
        mors.extend_from_slice(&s.mors[..i]);
        mors.push(self.cat.identities[obj]);
        mors.extend_from_slice(&s.mors[i..]);
        NerveSimplex {
            start: s.start,
            mors,
        }
    }

    fn label(&self, s: &NerveSimplex) -> Option<String> {
        if s.mors.is_empty() {
            Some(self.cat.objects[s.start].clone())
        } else {
            Some(
                s.mors
                    .iter()
                    .map(|&m| self.cat.morphisms[m].name.clone())
                    .collect::<Vec<_>>()
                    .join(";"),
            )
        }
    }

    fn empty_level_terminal(&self) -> bool {
        // the outer faces of an identity-free string are identity-free
        true
    }
}

pub type Nerve = Materialized<NerveData>;

/// The nerve of a finite category, materialized up to `cap`.
pub fn nerve(cat: &FiniteCategory, cap: usize) -> Result<Nerve> {
    materialize(
        NerveData { cat: cat.clone() },
        cap,
        false,
    )
}

pub fn nerve_sset(cat: &FiniteCategory, cap: usize) -> Result<Arc<SSet>> {
    Ok(Arc::clone(&nerve(cat, cap)?.sset))
}
