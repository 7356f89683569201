#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use topes::fixtures::{example_tope_set, hexagon_tope_set, square_tope_set};
use topes::{Arrangement, Tope, TopeSet};

pub fn tope(s: &str) -> Tope {
    s.parse().unwrap()
}

pub fn topes(list: &[&str]) -> Vec<Tope> {
    list.iter().map(|s| tope(s)).collect()
}

/// Random arrangement with small integer normals, every `d` of them independent.
pub fn random_generic(d: usize, t: usize, seed: u64) -> Arrangement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let normals: Vec<Vec<i64>> = (0..t)
            .map(|_| (0..d).map(|_| rng.gen_range(-5..=5)).collect())
            .collect();
        if let Ok(a) = Arrangement::from_integers(d, &normals) {
            if a.is_generic() {
                return a;
            }
        }
    }
}

/// Number of chambers of a generic central arrangement of `t` hyperplanes in
/// dimension `d`: `2 * sum_{i<d} C(t-1, i)`.
pub fn generic_chamber_count(d: usize, t: usize) -> usize {
    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
    2 * (0..d).map(|i| binom(t - 1, i)).sum::<usize>()
}

pub struct Instance {
    pub name: String,
    pub set: TopeSet,
}

/// The test tope sets: square, hexagon, the example fixture, five random
/// generic arrangements in dimension 3 and two in dimension 4.
pub fn instances() -> Vec<Instance> {
    let mut out = vec![
        Instance {
            name: "square t=2".into(),
            set: square_tope_set(),
        },
        Instance {
            name: "hexagon t=3".into(),
            set: hexagon_tope_set(),
        },
        Instance {
            name: "example t=5".into(),
            set: example_tope_set().unwrap(),
        },
    ];
    for (i, t) in [4, 5, 6, 7, 5].into_iter().enumerate() {
        let a = random_generic(3, t, 100 + i as u64);
        out.push(Instance {
            name: format!("random d=3 t={t} #{i}"),
            set: a.chambers().unwrap(),
        });
    }
    for (i, t) in [5, 6].into_iter().enumerate() {
        let a = random_generic(4, t, 200 + i as u64);
        out.push(Instance {
            name: format!("random d=4 t={t} #{i}"),
            set: a.chambers().unwrap(),
        });
    }
    out
}
