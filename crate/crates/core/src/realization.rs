//! Central hyperplane arrangements over the rationals and their chambers.
//!
//! A sign vector `sigma` is a chamber when the strict system
//! `sigma_e <a_e, x> > 0` has a solution; this is decided exactly by
//! Fourier-Motzkin elimination over integer rows.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Alignment, Error, Result};
use crate::signs::Tope;
use crate::tope_set::TopeSet;

/// Largest `t` accepted by [`Arrangement::chambers`].
pub const CHAMBER_BOUND: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    d: usize,
    normals: Vec<Vec<BigRational>>,
    /// Each normal scaled by a positive integer to clear denominators.
    integer_normals: Vec<Vec<BigInt>>,
}

impl Arrangement {
    pub fn new(d: usize, normals: Vec<Vec<BigRational>>) -> Result<Self> {
        if d < 2 {
            return Err(Error::BadDimension(format!("d = {d} < 2")));
        }
        if normals.len() < 2 {
            return Err(Error::BadDimension(format!("t = {} < 2", normals.len())));
        }
        if let Some(e) = normals.iter().position(|n| n.len() != d) {
            return Err(Error::BadDimension(format!(
                "normal {} has {} coordinates, expected {d}",
                e + 1,
                normals[e].len()
            )));
        }
        if let Some(e) = normals.iter().position(|n| n.iter().all(Zero::is_zero)) {
            return Err(Error::ZeroNormal(e + 1));
        }
        for e in 0..normals.len() {
            for f in e + 1..normals.len() {
                if let Some(alignment) = proportionality(&normals[e], &normals[f]) {
                    return Err(Error::ScalarMultiple {
                        e: e + 1,
                        f: f + 1,
                        alignment,
                    });
                }
            }
        }
        let integer_normals = normals.iter().map(|n| clear_denominators(n)).collect();
        Ok(Arrangement {
            d,
            normals,
            integer_normals,
        })
    }

    /// Convenience constructor from integer coordinates.
    pub fn from_integers(d: usize, normals: &[Vec<i64>]) -> Result<Self> {
        let normals = normals
            .iter()
            .map(|n| {
                n.iter()
                    .map(|&v| BigRational::from_integer(v.into()))
                    .collect()
            })
            .collect();
        Arrangement::new(d, normals)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn t(&self) -> usize {
        self.normals.len()
    }

    pub fn normals(&self) -> &[Vec<BigRational>] {
        &self.normals
    }

    /// Whether some `x` satisfies `sigma_e <a_e, x> > 0` for every `e`.
    pub fn feasible(&self, sigma: &Tope) -> Result<bool> {
        if sigma.len() != self.t() {
            return Err(Error::LengthMismatch {
                expected: self.t(),
                found: sigma.len(),
            });
        }
        let rows = self
            .integer_normals
            .iter()
            .zip(sigma.entries())
            .map(|(n, &s)| {
                if s > 0 {
                    n.clone()
                } else {
                    n.iter().map(|v| -v).collect()
                }
            })
            .collect();
        Ok(strictly_feasible(rows, self.d))
    }

    /// All chambers, validated as a tope set.
    pub fn chambers(&self) -> Result<TopeSet> {
        let t = self.t();
        if t > CHAMBER_BOUND {
            return Err(Error::BoundExceeded {
                t,
                bound: CHAMBER_BOUND,
            });
        }
        // Sign vectors with a positive first entry; the rest are mirrored.
        let half: Vec<Tope> = (0..1u32 << (t - 1))
            .into_par_iter()
            .map(|mask| {
                Tope::from_signs((0..t).map(|i| {
                    if i == 0 || mask >> (i - 1) & 1 == 0 {
                        1i64
                    } else {
                        -1
                    }
                }))
                .expect("t >= 2")
            })
            .filter(|sigma| self.feasible(sigma).unwrap_or(false))
            .collect();
        let all = half.iter().flat_map(|s| [s.clone(), -s]);
        TopeSet::new(t, all)
    }

    /// Every `d` normals are linearly independent.
    pub fn is_generic(&self) -> bool {
        let t = self.t();
        let mut chosen = Vec::with_capacity(self.d);
        fn all_subsets(a: &Arrangement, start: usize, chosen: &mut Vec<usize>, t: usize) -> bool {
            if chosen.len() == a.d {
                let rows: Vec<Vec<BigRational>> =
                    chosen.iter().map(|&i| a.normals[i].clone()).collect();
                return rational_rank(rows) == a.d;
            }
            (start..t).all(|i| {
                chosen.push(i);
                let ok = all_subsets(a, i + 1, chosen, t);
                chosen.pop();
                ok
            })
        }
        all_subsets(self, 0, &mut chosen, t)
    }

    /// Parses the `.arr` text format.
    pub fn parse(text: &str) -> Result<Arrangement> {
        let mut header: Option<(usize, usize)> = None;
        let mut normals = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let format_err = |message: String| Error::Format { line, message };
            match header {
                None => {
                    let words: Vec<&str> = content.split_whitespace().collect();
                    let parse = |s: &str| {
                        s.parse::<usize>()
                            .map_err(|_| format_err(format!("bad integer {s:?}")))
                    };
                    match words.as_slice() {
                        ["d", d, "t", t] => header = Some((parse(d)?, parse(t)?)),
                        _ => return Err(format_err("expected header \"d <int> t <int>\"".into())),
                    }
                }
                Some((d, _)) => {
                    let normal = content
                        .split_whitespace()
                        .map(|w| {
                            w.parse::<BigRational>()
                                .map_err(|_| format_err(format!("bad rational {w:?}")))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    if normal.len() != d {
                        return Err(format_err(format!(
                            "expected {d} coordinates, found {}",
                            normal.len()
                        )));
                    }
                    normals.push(normal);
                }
            }
        }
        let (d, t) = header.ok_or(Error::Format {
            line: 0,
            message: "missing header".into(),
        })?;
        if normals.len() != t {
            return Err(Error::Format {
                line: 0,
                message: format!("header announces {t} normals, found {}", normals.len()),
            });
        }
        Arrangement::new(d, normals)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("d {} t {}\n", self.d, self.t());
        for n in &self.normals {
            let words: Vec<String> = n.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{}", words.join(" "));
        }
        out
    }
}

/// Parallel or antiparallel when `b` is a nonzero rational multiple of `a`.
fn proportionality(a: &[BigRational], b: &[BigRational]) -> Option<Alignment> {
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if &a[i] * &b[j] != &a[j] * &b[i] {
                return None;
            }
        }
    }
    let i = a.iter().position(|v| !v.is_zero())?;
    if b[i].is_zero() {
        return None;
    }
    Some(if (&b[i] / &a[i]).is_positive() {
        Alignment::Parallel
    } else {
        Alignment::Antiparallel
    })
}

fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

fn normalize(row: Vec<BigInt>) -> Vec<BigInt> {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        row
    } else {
        row.into_iter().map(|x| x / &g).collect()
    }
}

/// Fourier-Motzkin on the strict homogeneous system `row · x > 0`.
///
/// Positive combinations of strict inequalities stay strict, so the system
/// is infeasible exactly when an all-zero row (`0 > 0`) appears.
fn strictly_feasible(rows: Vec<Vec<BigInt>>, d: usize) -> bool {
    let mut rows: BTreeSet<Vec<BigInt>> = rows.into_iter().map(normalize).collect();
    for var in 0..d {
        if rows.iter().any(|r| r.iter().all(Zero::is_zero)) {
            return false;
        }
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), BTreeSet::new());
        for r in rows {
            if r[var].is_positive() {
                pos.push(r);
            } else if r[var].is_negative() {
                neg.push(r);
            } else {
                rest.insert(r);
            }
        }
        for p in &pos {
            for n in &neg {
                let (pa, na) = (&p[var], -&n[var]);
                let combined: Vec<BigInt> =
                    p.iter().zip(n).map(|(x, y)| x * &na + y * pa).collect();
                rest.insert(normalize(combined));
            }
        }
        rows = rest;
    }
    rows.is_empty()
}

fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let (done, rest) = rows.split_at_mut(rank + 1);
        let pivot = &done[rank];
        for row in rest {
            let factor = &row[c] / &pivot[c];
            for (x, y) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x -= &factor * y;
            }
        }
        rank += 1;
    }
    rank
}
