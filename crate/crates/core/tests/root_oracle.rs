//! Reflection-orbit oracle for the positive roots.
//!
//! Independent of the root-string generator: simple-root inner products are
//! written out by hand (squared lengths doubled to stay integral) and the roots
//! are the orbit of the simple roots under the simple reflections.

use std::collections::{BTreeSet, VecDeque};

use lie_gradings::tables::paper_highest_root;
use lie_gradings::{diagram_automorphisms, dynkin_diagram, Family, RootSystem, SimpleLieType};

/// Gram matrix of the simple roots in Bourbaki order.
fn gram(ty: SimpleLieType) -> Vec<Vec<i64>> {
    let n = ty.rank();
    let mut len = vec![4i64; n];
    let chain = |a: usize, b: usize| (a..b).map(|i| (i, i + 1)).collect::<Vec<_>>();
    let bonds: Vec<(usize, usize)> = match ty.family() {
        Family::A => chain(1, n),
        Family::B => {
            len[n - 1] = 2;
            chain(1, n)
        }
        Family::C => {
            len[n - 1] = 8;
            chain(1, n)
        }
        Family::D => {
            let mut b = chain(1, n - 1);
            b.push((n - 2, n));
            b
        }
        Family::E => {
            let mut b = vec![(1, 3), (2, 4)];
            b.extend(chain(3, n));
            b
        }
        Family::F => {
            len[2] = 2;
            len[3] = 2;
            chain(1, 4)
        }
        Family::G => {
            len = vec![2, 6];
            vec![(1, 2)]
        }
    };
    let mut g = vec![vec![0i64; n]; n];
    for i in 0..n {
        g[i][i] = len[i];
    }
    for (a, b) in bonds {
        let v = -len[a - 1].max(len[b - 1]) / 2;
        g[a - 1][b - 1] = v;
        g[b - 1][a - 1] = v;
    }
    g
}

fn reflection_orbit(ty: SimpleLieType) -> BTreeSet<Vec<i32>> {
    let n = ty.rank();
    let g = gram(ty);
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    while let Some(beta) = queue.pop_front() {
        if !seen.insert(beta.clone()) {
            continue;
        }
        for i in 0..n {
            let ip: i64 = (0..n).map(|j| beta[j] * g[j][i]).sum();
            assert_eq!((2 * ip) % g[i][i], 0);
            let mut image = beta.clone();
            image[i] -= 2 * ip / g[i][i];
            if !seen.contains(&image) {
                queue.push_back(image);
            }
        }
    }
    seen.into_iter()
        .filter(|v| v.iter().all(|&c| c >= 0))
        .map(|v| v.into_iter().map(|c| c as i32).collect())
        .collect()
}

fn all_types() -> Vec<SimpleLieType> {
    SimpleLieType::all_up_to(&Family::ALL, 12)
}

fn closed_count(ty: SimpleLieType) -> usize {
    let n = ty.rank();
    match (ty.family(), n) {
        (Family::A, _) => n * (n + 1) / 2,
        (Family::B | Family::C, _) => n * n,
        (Family::D, _) => n * (n - 1),
        (Family::E, 6) => 36,
        (Family::E, 7) => 63,
        (Family::E, _) => 120,
        (Family::F, _) => 24,
        (Family::G, _) => 6,
    }
}

#[test]
fn generator_matches_reflection_orbit() {
    for ty in all_types() {
        let rs = RootSystem::new(ty);
        let generated: BTreeSet<Vec<i32>> = rs
            .positive_roots()
            .iter()
            .map(|r| r.coeffs().to_vec())
            .collect();
        assert_eq!(generated, reflection_orbit(ty), "{ty}");
    }
}

#[test]
fn counts_match_closed_forms() {
    for ty in all_types() {
        assert_eq!(reflection_orbit(ty).len(), closed_count(ty), "{ty}");
        assert_eq!(
            RootSystem::new(ty).positive_roots().len(),
            closed_count(ty),
            "{ty}"
        );
    }
    assert_eq!(reflection_orbit("E8".parse().unwrap()).len(), 120);
}

#[test]
fn highest_roots_match_reference() {
    for name in ["A5", "B5", "C5", "D5", "E6", "E7", "E8", "F4", "G2"] {
        let ty: SimpleLieType = name.parse().unwrap();
        let rs = RootSystem::new(ty);
        assert_eq!(
            rs.highest_root().coeffs(),
            paper_highest_root(ty).as_slice(),
            "{name}"
        );
        let top = reflection_orbit(ty)
            .into_iter()
            .max_by_key(|v| v.iter().sum::<i32>())
            .unwrap();
        assert_eq!(top, paper_highest_root(ty), "{name}");
    }
    for ty in all_types() {
        let rs = RootSystem::new(ty);
        assert_eq!(
            rs.highest_root().coeffs(),
            paper_highest_root(ty).as_slice(),
            "{ty}"
        );
    }
}

#[test]
fn roots_are_one_signed_and_sums_stay_positive() {
    for ty in all_types().into_iter().filter(|t| t.rank() <= 8) {
        let rs = RootSystem::new(ty);
        let roots = rs.positive_roots();
        for r in roots {
            assert!(r.coeffs().iter().all(|&c| c >= 0) && r.coeffs().iter().any(|&c| c > 0));
        }
        for a in roots {
            for b in roots {
                let sum: Vec<i32> = a
                    .coeffs()
                    .iter()
                    .zip(b.coeffs())
                    .map(|(x, y)| x + y)
                    .collect();
                if rs.is_root(&sum).unwrap() {
                    assert!(sum.iter().all(|&c| c >= 0));
                }
            }
        }
    }
}

#[test]
fn cartan_entries() {
    for ty in all_types() {
        let c = RootSystem::new(ty).cartan_matrix().to_vec();
        for (i, row) in c.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if i == j {
                    assert_eq!(v, 2);
                } else {
                    assert!([0, -1, -2, -3].contains(&v), "{ty} ({i},{j}) = {v}");
                }
            }
        }
    }
}

#[test]
fn automorphisms_preserve_positive_roots() {
    for ty in all_types() {
        let rs = RootSystem::new(ty);
        let roots: BTreeSet<Vec<i32>> = rs
            .positive_roots()
            .iter()
            .map(|r| r.coeffs().to_vec())
            .collect();
        for p in diagram_automorphisms(&dynkin_diagram(ty)) {
            for r in &roots {
                let mut image = vec![0; ty.rank()];
                for (i, &c) in r.iter().enumerate() {
                    image[p.image(i + 1) - 1] = c;
                }
                assert!(roots.contains(&image), "{ty}: {r:?} -> {image:?}");
            }
        }
    }
}

#[test]
fn automorphism_group_orders() {
    for ty in all_types() {
        let order = diagram_automorphisms(&dynkin_diagram(ty)).len();
        let expected = match (ty.family(), ty.rank()) {
            (Family::A, n) if n >= 2 => 2,
            (Family::D, 4) => 6,
            (Family::D, _) => 2,
            (Family::E, 6) => 2,
            _ => 1,
        };
        assert_eq!(order, expected, "{ty}");
    }
}
