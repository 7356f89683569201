//! Decomposition of a tope over the vertices of a symmetric cycle.
//!
//! The first half `R^0, .., R^{t-1}` of a symmetric cycle forms the rows of a
//! nonsingular sign matrix `M` with `|det M| = 2^{t-1}`. Every tope `T` has
//! coordinates `x = T M^{-1}` in `{-1, 0, 1}^t`, and
//! `Q(T, R) = {x_i R^{i-1} : x_i != 0}` is the unique inclusion-minimal subset
//! of the cycle's vertices summing to `T`.
//!
//! All arithmetic runs over the doubled inverse `2 M^{-1}`, which has integer
//! entries; the single division by two happens after checking evenness.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::cycle::SymmetricCycle;
use crate::error::{Error, Result};
use crate::poset::{max_positive, minimal_elements_at};
use crate::signs::{negative_part, reorient, tope_sum, Tope};

/// Ground-set bound for [`brute_force_decompose`].
pub const ORACLE_BOUND: usize = 8;

#[derive(Clone, Debug)]
pub struct SignMatrix {
    cycle: SymmetricCycle,
    determinant: i128,
}

impl SignMatrix {
    pub fn new(cycle: &SymmetricCycle) -> Result<Self> {
        let t = cycle.t();
        let rows: Vec<Vec<i128>> = cycle
            .first_half()
            .iter()
            .map(|r| r.entries().iter().map(|&s| s as i128).collect())
            .collect();
        let determinant = bareiss_determinant(&rows)?;
        let expected = 1i128.checked_shl(t as u32 - 1).ok_or(Error::Overflow)?;
        if determinant.abs() != expected {
            return Err(Error::DeterminantMismatch {
                found: determinant,
                expected,
            });
        }
        Ok(SignMatrix {
            cycle: cycle.clone(),
            determinant,
        })
    }

    pub fn rows(&self) -> &[Tope] {
        self.cycle.first_half()
    }

    pub fn cycle(&self) -> &SymmetricCycle {
        &self.cycle
    }

    pub fn determinant(&self) -> i128 {
        self.determinant
    }
}

/// `2 M^{-1}`: row `i - 1` belongs to element `i`, column `k - 1` to `R^{k-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubledInverse {
    rows: Vec<Vec<i64>>,
}

impl DoubledInverse {
    /// Closed form from the l-sequence, checked against `M` by exact product.
    pub fn new(matrix: &SignMatrix) -> Result<Self> {
        let cycle = matrix.cycle();
        let t = cycle.t();
        let base = cycle.base();
        let l = cycle.l_sequence().0;
        let mut rows = vec![vec![0i64; t]; t];
        for (k, &element) in l.iter().enumerate() {
            let sign = base.sign(element) as i64;
            let row = &mut rows[element - 1];
            if k + 1 < t {
                row[k] = sign;
                row[k + 1] = -sign;
            } else {
                row[0] = sign;
                row[t - 1] += sign;
            }
        }
        let inverse = DoubledInverse { rows };
        if !inverse.is_doubled_inverse_of(matrix.rows()) {
            return Err(Error::VerificationFailed);
        }
        Ok(inverse)
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// `self · M == 2 I` over the integers.
    pub fn is_doubled_inverse_of(&self, m_rows: &[Tope]) -> bool {
        let t = self.rows.len();
        (0..t).all(|i| {
            (0..t).all(|j| {
                let entry: i64 = (0..t)
                    .map(|k| self.rows[i][k] * m_rows[k].entries()[j] as i64)
                    .sum();
                entry == if i == j { 2 } else { 0 }
            })
        })
    }
}

/// Fraction-free Gaussian elimination; every intermediate value is a minor.
pub fn bareiss_determinant(matrix: &[Vec<i128>]) -> Result<i128> {
    let n = matrix.len();
    if n == 0 {
        return Ok(1);
    }
    let mut a: Vec<Vec<i128>> = matrix.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j]
                    .checked_mul(a[k][k])
                    .and_then(|x| x.checked_sub(a[i][k].checked_mul(a[k][j])?))
                    .ok_or(Error::Overflow)?;
                a[i][j] = num / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Ok(sign * a[n - 1][n - 1])
}

/// Sign matrix and verified inverse of one cycle, reusable across topes.
#[derive(Clone, Debug)]
pub struct Decomposer {
    matrix: SignMatrix,
    inverse: DoubledInverse,
}

impl Decomposer {
    pub fn new(cycle: &SymmetricCycle) -> Result<Self> {
        let matrix = SignMatrix::new(cycle)?;
        let inverse = DoubledInverse::new(&matrix)?;
        Ok(Decomposer { matrix, inverse })
    }

    pub fn matrix(&self) -> &SignMatrix {
        &self.matrix
    }

    pub fn inverse(&self) -> &DoubledInverse {
        &self.inverse
    }

    pub fn cycle(&self) -> &SymmetricCycle {
        self.matrix.cycle()
    }

    /// `x = T M^{-1}`; fails with `NonTopeInput` outside `{-1, 0, 1}^t`.
    pub fn coordinates(&self, tope: &Tope) -> Result<Vec<i8>> {
        let t = self.cycle().t();
        if tope.len() != t {
            return Err(Error::LengthMismatch {
                expected: t,
                found: tope.len(),
            });
        }
        (0..t)
            .map(|k| {
                let doubled: i64 = (0..t)
                    .map(|i| tope.entries()[i] as i64 * self.inverse.rows[i][k])
                    .sum();
                match doubled {
                    -2 => Ok(-1),
                    0 => Ok(0),
                    2 => Ok(1),
                    _ => Err(Error::NonTopeInput(tope.clone())),
                }
            })
            .collect()
    }

    pub fn decompose(&self, tope: &Tope) -> Result<Decomposition> {
        let x = self.coordinates(tope)?;
        let q_set = x
            .iter()
            .zip(self.matrix.rows())
            .filter(|(&xi, _)| xi != 0)
            .map(|(&xi, row)| if xi > 0 { row.clone() } else { -row })
            .collect();
        Ok(Decomposition {
            target: tope.clone(),
            cycle: self.cycle().clone(),
            x,
            q_set,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub target: Tope,
    pub cycle: SymmetricCycle,
    pub x: Vec<i8>,
    pub q_set: BTreeSet<Tope>,
}

#[derive(Serialize)]
struct DecompositionJson<'a> {
    target: &'a Tope,
    x: &'a [i8],
    q_set: &'a BTreeSet<Tope>,
}

impl Decomposition {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(DecompositionJson {
            target: &self.target,
            x: &self.x,
            q_set: &self.q_set,
        })
        .expect("decomposition serializes")
    }
}

pub fn sign_matrix(cycle: &SymmetricCycle) -> Result<SignMatrix> {
    SignMatrix::new(cycle)
}

pub fn doubled_inverse(matrix: &SignMatrix) -> Result<DoubledInverse> {
    DoubledInverse::new(matrix)
}

pub fn coordinates(tope: &Tope, cycle: &SymmetricCycle) -> Result<Vec<i8>> {
    Decomposer::new(cycle)?.coordinates(tope)
}

pub fn decompose(tope: &Tope, cycle: &SymmetricCycle) -> Result<Decomposition> {
    Decomposer::new(cycle)?.decompose(tope)
}

/// Minimal elements of the cycle's vertex set in the poset based at `base`.
pub fn decompose_via_poset(base: &Tope, cycle: &SymmetricCycle) -> Result<BTreeSet<Tope>> {
    check_len(base, cycle)?;
    Ok(minimal_elements_at(base, &cycle.vertex_set()))
}

/// Reorient the vertices on `T^-`, keep those with maximal positive parts,
/// and reorient back.
pub fn decompose_via_reorientation(tope: &Tope, cycle: &SymmetricCycle) -> Result<BTreeSet<Tope>> {
    check_len(tope, cycle)?;
    let negative = negative_part(tope);
    let moved = cycle
        .vertices()
        .iter()
        .map(|v| reorient(v, &negative))
        .collect::<Result<Vec<_>>>()?;
    max_positive(&moved)
        .iter()
        .map(|v| reorient(v, &negative))
        .collect()
}

/// Exhaustive search for the inclusion-minimal vertex subsets summing to `tope`.
///
/// A subset holding both `R` and `-R` is never minimal (dropping the pair keeps
/// the sum, and `{R, -R}` alone sums to zero), so the search ranges over the
/// `3^t` subsets that take at most one vertex from each antipodal pair.
pub fn brute_force_decompose(tope: &Tope, cycle: &SymmetricCycle) -> Result<BTreeSet<Tope>> {
    check_len(tope, cycle)?;
    let t = cycle.t();
    if t > ORACLE_BOUND {
        return Err(Error::BoundExceeded {
            t,
            bound: ORACLE_BOUND,
        });
    }
    let vertices: Vec<Tope> = cycle.vertex_set().into_iter().collect();
    let pairs: Vec<(usize, usize)> = vertices
        .iter()
        .enumerate()
        .filter_map(|(i, v)| {
            let j = vertices.iter().position(|w| *w == -v)?;
            (i < j).then_some((i, j))
        })
        .collect();
    if pairs.len() != t {
        return Err(Error::OracleNotFound(tope.clone()));
    }
    let target: Vec<i64> = tope.entries().iter().map(|&s| s as i64).collect();

    fn search(
        pairs: &[(usize, usize)],
        vertices: &[Tope],
        depth: usize,
        chosen: u32,
        sum: &mut Vec<i64>,
        target: &[i64],
        found: &mut Vec<u32>,
    ) {
        if depth == pairs.len() {
            if sum == target {
                found.push(chosen);
            }
            return;
        }
        search(pairs, vertices, depth + 1, chosen, sum, target, found);
        for idx in [pairs[depth].0, pairs[depth].1] {
            for (acc, &s) in sum.iter_mut().zip(vertices[idx].entries()) {
                *acc += s as i64;
            }
            search(
                pairs,
                vertices,
                depth + 1,
                chosen | 1 << idx,
                sum,
                target,
                found,
            );
            for (acc, &s) in sum.iter_mut().zip(vertices[idx].entries()) {
                *acc -= s as i64;
            }
        }
    }

    let mut found = Vec::new();
    search(
        &pairs,
        &vertices,
        0,
        0,
        &mut vec![0; t],
        &target,
        &mut found,
    );
    let minimal: Vec<u32> = found
        .iter()
        .copied()
        .filter(|&s| !found.iter().any(|&o| o != s && o & s == o))
        .collect();
    match minimal.as_slice() {
        [] => Err(Error::OracleNotFound(tope.clone())),
        [only] => {
            let subset: BTreeSet<Tope> = (0..vertices.len())
                .filter(|i| only >> i & 1 == 1)
                .map(|i| vertices[i].clone())
                .collect();
            debug_assert!(tope_sum(t, &subset)
                .map(|s| s.equals_tope(tope))
                .unwrap_or(false));
            Ok(subset)
        }
        _ => Err(Error::OracleAmbiguous(tope.clone())),
    }
}

fn check_len(tope: &Tope, cycle: &SymmetricCycle) -> Result<()> {
    if tope.len() != cycle.t() {
        return Err(Error::LengthMismatch {
            expected: cycle.t(),
            found: tope.len(),
        });
    }
    Ok(())
}
