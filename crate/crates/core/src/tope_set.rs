//! Validated tope sets of simple oriented matroids and their tope graphs.
//!
//! Two topes are adjacent when they differ in exactly one element. For simple
//! oriented matroids this is the same as covering a common subtope, so the big
//! face lattice is never built. Input sets are checked for central symmetry,
//! simplicity and connectivity; the covector axioms are not verified.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::signs::{hamming, positive_tope, reorient, ElementSet, GroundSize, Tope};

#[derive(Clone, Debug)]
pub struct TopeSet {
    t: GroundSize,
    topes: Vec<Tope>,
    index: HashMap<Tope, usize>,
    neighbors: Vec<Vec<usize>>,
}

/// Edges of the tope graph as index pairs `(i, j)` with `i < j` into `vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopeGraph {
    pub vertices: Vec<Tope>,
    pub edges: Vec<(usize, usize)>,
}

impl TopeGraph {
    pub fn edge_topes(&self) -> impl Iterator<Item = (&Tope, &Tope)> + '_ {
        self.edges
            .iter()
            .map(|&(i, j)| (&self.vertices[i], &self.vertices[j]))
    }

    pub fn contains_edge(&self, a: &Tope, b: &Tope) -> bool {
        self.edge_topes()
            .any(|(x, y)| (x == a && y == b) || (x == b && y == a))
    }
}

impl TopeSet {
    /// Validates and canonicalizes a raw collection of topes.
    ///
    /// Duplicates are dropped; the result is sorted lexicographically.
    pub fn new<I: IntoIterator<Item = Tope>>(t: usize, raw: I) -> Result<Self> {
        let t = GroundSize::new(t)?;
        let mut topes = Vec::new();
        for tope in raw {
            if tope.len() != t.get() {
                return Err(Error::LengthMismatch {
                    expected: t.get(),
                    found: tope.len(),
                });
            }
            topes.push(tope);
        }
        topes.sort();
        topes.dedup();
        if topes.len() < 4 {
            return Err(Error::TooSmall(topes.len()));
        }
        let index: HashMap<Tope, usize> = topes
            .iter()
            .enumerate()
            .map(|(i, tope)| (tope.clone(), i))
            .collect();

        if let Some(tope) = topes.iter().find(|tope| !index.contains_key(&-*tope)) {
            return Err(Error::SymmetryViolation(tope.clone()));
        }
        check_simple(t.get(), &topes)?;

        let neighbors = topes
            .iter()
            .map(|tope| {
                let mut adj: Vec<usize> = (1..=t.get())
                    .filter_map(|e| index.get(&tope.flipped(e)).copied())
                    .collect();
                adj.sort_unstable();
                adj
            })
            .collect();
        let set = TopeSet {
            t,
            topes,
            index,
            neighbors,
        };
        if set.bfs_distances(0).iter().any(Option::is_none) {
            return Err(Error::Disconnected);
        }
        Ok(set)
    }

    pub fn t(&self) -> usize {
        self.t.get()
    }

    pub fn ground_size(&self) -> GroundSize {
        self.t
    }

    /// Topes in lexicographic order.
    pub fn topes(&self) -> &[Tope] {
        &self.topes
    }

    pub fn len(&self) -> usize {
        self.topes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.topes.is_empty()
    }

    pub fn contains(&self, tope: &Tope) -> bool {
        self.index.contains_key(tope)
    }

    pub fn index_of(&self, tope: &Tope) -> Option<usize> {
        self.index.get(tope).copied()
    }

    pub(crate) fn require(&self, tope: &Tope) -> Result<usize> {
        self.index_of(tope)
            .ok_or_else(|| Error::NotInTopeSet(tope.clone()))
    }

    /// Indices of the topes adjacent to the tope at index `i`, ascending.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }

    pub fn adjacency_edges(&self) -> TopeGraph {
        let edges = self
            .neighbors
            .iter()
            .enumerate()
            .flat_map(|(i, adj)| adj.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
            .collect();
        TopeGraph {
            vertices: self.topes.clone(),
            edges,
        }
    }

    /// Topes with a positive sign at element `e`.
    pub fn halfspace(&self, e: usize) -> Result<BTreeSet<Tope>> {
        if e == 0 || e > self.t() {
            return Err(Error::ElementOutOfRange {
                element: e,
                t: self.t(),
            });
        }
        Ok(self
            .topes
            .iter()
            .filter(|tope| tope.sign(e) > 0)
            .cloned()
            .collect())
    }

    /// Whether the positive tope is a tope.
    pub fn is_acyclic(&self) -> bool {
        positive_tope(self.t())
            .map(|p| self.contains(&p))
            .unwrap_or(false)
    }

    pub fn reorient(&self, set: &ElementSet) -> Result<TopeSet> {
        set.check_within(self.t())?;
        let topes = self
            .topes
            .iter()
            .map(|tope| reorient(tope, set))
            .collect::<Result<Vec<_>>>()?;
        TopeSet::new(self.t(), topes)
    }

    fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.topes.len()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or(0);
            for &w in &self.neighbors[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Checks that graph distance equals Hamming distance for every pair.
    pub fn check_partial_cube(&self) -> Result<()> {
        for (i, a) in self.topes.iter().enumerate() {
            let dist = self.bfs_distances(i);
            for (j, b) in self.topes.iter().enumerate() {
                let hamming = hamming(a, b);
                let graph = dist[j].ok_or(Error::Disconnected)?;
                if graph != hamming {
                    return Err(Error::NotPartialCube {
                        a: a.clone(),
                        b: b.clone(),
                        graph,
                        hamming,
                    });
                }
            }
        }
        Ok(())
    }

    /// Parses the `.topes` text format.
    pub fn parse(text: &str) -> Result<TopeSet> {
        let mut t = None;
        let mut seen = BTreeSet::new();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let format_err = |message: String| Error::Format { line, message };
            match t {
                None => {
                    let mut words = content.split_whitespace();
                    t = match (words.next(), words.next(), words.next()) {
                        (Some("t"), Some(value), None) => Some(
                            value
                                .parse::<usize>()
                                .map_err(|_| format_err(format!("bad ground size {value:?}")))?,
                        ),
                        _ => return Err(format_err("expected header \"t <integer>\"".into())),
                    };
                }
                Some(size) => {
                    let tope: Tope = content
                        .parse()
                        .map_err(|e: Error| format_err(e.to_string()))?;
                    if tope.len() != size {
                        return Err(format_err(format!(
                            "tope {tope} has length {}, expected {size}",
                            tope.len()
                        )));
                    }
                    if !seen.insert(tope.clone()) {
                        return Err(format_err(format!("duplicate tope {tope}")));
                    }
                }
            }
        }
        let t = t.ok_or(Error::Format {
            line: 0,
            message: "missing header".into(),
        })?;
        TopeSet::new(t, seen)
    }

    /// Canonical `.topes` text: header then topes in lexicographic order.
    pub fn to_text(&self) -> String {
        let mut out = format!("t {}\n", self.t());
        for tope in &self.topes {
            let _ = writeln!(out, "{tope}");
        }
        out
    }
}

impl PartialEq for TopeSet {
    fn eq(&self, other: &Self) -> bool {
        self.t == other.t && self.topes == other.topes
    }
}

impl Eq for TopeSet {}

fn check_simple(t: usize, topes: &[Tope]) -> Result<()> {
    for e in 1..=t {
        for f in e + 1..=t {
            let product = |tope: &Tope| tope.sign(e) * tope.sign(f);
            let first = product(&topes[0]);
            if topes.iter().all(|tope| product(tope) == first) {
                return Err(if first > 0 {
                    Error::ParallelElements(e, f)
                } else {
                    Error::AntiparallelElements(e, f)
                });
            }
        }
    }
    Ok(())
}
