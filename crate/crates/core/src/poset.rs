//! Tope posets based at a tope `B`: `T1 <= T2` iff `S(B, T1) ⊆ S(B, T2)`.
//!
//! Order relations are evaluated on demand from separation sets; the poset
//! is never materialized.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::Result;
use crate::signs::{hamming, separation_within, Tope};
use crate::tope_set::TopeSet;

#[derive(Clone, Copy, Debug)]
pub struct BasedPoset<'a> {
    carrier: &'a TopeSet,
    base: &'a Tope,
}

impl<'a> BasedPoset<'a> {
    pub fn new(carrier: &'a TopeSet, base: &'a Tope) -> Result<Self> {
        carrier.require(base)?;
        Ok(BasedPoset { carrier, base })
    }

    pub fn base(&self) -> &Tope {
        self.base
    }

    pub fn carrier(&self) -> &TopeSet {
        self.carrier
    }

    pub fn leq(&self, a: &Tope, b: &Tope) -> Result<bool> {
        self.carrier.require(a)?;
        self.carrier.require(b)?;
        Ok(separation_within(self.base, a, b))
    }

    pub fn rank(&self, tope: &Tope) -> Result<usize> {
        self.carrier.require(tope)?;
        Ok(hamming(self.base, tope))
    }

    pub fn minimal_elements<'t, I>(&self, subset: I) -> Result<BTreeSet<Tope>>
    where
        I: IntoIterator<Item = &'t Tope>,
    {
        let subset = self.checked(subset)?;
        Ok(minimal_elements_at(self.base, &subset))
    }

    /// Cover relation of the subposet induced on `subset`, sorted.
    pub fn hasse_edges<'t, I>(&self, subset: I) -> Result<Vec<(Tope, Tope)>>
    where
        I: IntoIterator<Item = &'t Tope>,
    {
        let subset = self.checked(subset)?;
        Ok(hasse_edges_at(self.base, &subset))
    }

    fn checked<'t, I>(&self, subset: I) -> Result<BTreeSet<Tope>>
    where
        I: IntoIterator<Item = &'t Tope>,
    {
        subset
            .into_iter()
            .map(|tope| self.carrier.require(tope).map(|_| tope.clone()))
            .collect()
    }

    /// DOT rendering of the Hasse diagram of the whole carrier, bottom to top.
    ///
    /// Members of `highlight` are drawn red, as are cover edges between two
    /// highlighted members.
    pub fn to_dot(&self, highlight: &BTreeSet<Tope>) -> String {
        let all: BTreeSet<Tope> = self.carrier.topes().iter().cloned().collect();
        let mut by_rank: Vec<&Tope> = all.iter().collect();
        by_rank.sort_by_key(|tope| (hamming(self.base, tope), (*tope).clone()));

        let mut out = String::new();
        let _ = writeln!(out, "digraph tope_poset {{");
        let _ = writeln!(out, "  rankdir=BT;");
        let _ = writeln!(out, "  label=\"base {}\";", self.base);
        let _ = writeln!(out, "  node [shape=plaintext, fontname=\"monospace\"];");
        for tope in &by_rank {
            let rank = hamming(self.base, tope);
            if highlight.contains(*tope) {
                let _ = writeln!(
                    out,
                    "  \"{tope}\" [rank_level={rank}, subposet=true, fontcolor=red];"
                );
            } else {
                let _ = writeln!(out, "  \"{tope}\" [rank_level={rank}];");
            }
        }
        for (a, b) in hasse_edges_at(self.base, &all) {
            if highlight.contains(&a) && highlight.contains(&b) {
                let _ = writeln!(out, "  \"{a}\" -> \"{b}\" [color=red, arrowhead=none];");
            } else {
                let _ = writeln!(out, "  \"{a}\" -> \"{b}\" [arrowhead=none];");
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Minimal elements of `subset` in the poset based at `base`.
pub fn minimal_elements_at(base: &Tope, subset: &BTreeSet<Tope>) -> BTreeSet<Tope> {
    subset
        .iter()
        .filter(|&t| {
            !subset
                .iter()
                .any(|u| u != t && separation_within(base, u, t))
        })
        .cloned()
        .collect()
}

pub(crate) fn hasse_edges_at(base: &Tope, subset: &BTreeSet<Tope>) -> Vec<(Tope, Tope)> {
    let below = |a: &Tope, b: &Tope| a != b && separation_within(base, a, b);
    let mut edges = Vec::new();
    for a in subset {
        for b in subset {
            if below(a, b) && !subset.iter().any(|c| below(a, c) && below(c, b)) {
                edges.push((a.clone(), b.clone()));
            }
        }
    }
    edges
}

/// Topes of `subset` whose positive parts are inclusion-maximal within it.
pub fn max_positive<'t, I>(subset: I) -> BTreeSet<Tope>
where
    I: IntoIterator<Item = &'t Tope>,
{
    let subset: Vec<&Tope> = subset.into_iter().collect();
    // positive_part(u) ⊋ positive_part(t)  <=>  u >= t entrywise and u != t
    let dominates =
        |u: &Tope, t: &Tope| u != t && u.entries().iter().zip(t.entries()).all(|(&x, &y)| x >= y);
    subset
        .iter()
        .filter(|&&t| !subset.iter().any(|&u| dominates(u, t)))
        .map(|&t| t.clone())
        .collect()
}
