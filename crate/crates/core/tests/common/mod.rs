//! Brute-force oracles shared by the integration tests. None of these go
//! through the crate's lookup tables or enumerators: they work on raw
//! coefficient vectors.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use nilchain::{ComplexKind, RootSystem, RootSystemSpec};

/// Positive roots as the positive part of the Weyl orbit of the simple
/// roots, using `s_i(β) = β - <β, α_i^∨> α_i`.
pub fn weyl_orbit_positive_roots(spec: RootSystemSpec) -> BTreeSet<Vec<i32>> {
    let cartan = spec.cartan_matrix();
    let n = spec.rank();
    let mut seen: HashSet<Vec<i32>> = HashSet::new();
    let mut queue: VecDeque<Vec<i32>> = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            let pairing: i32 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
            let mut image = beta.clone();
            image[i] -= pairing;
            if seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    seen.into_iter().filter(|r| r.iter().all(|&c| c >= 0)).collect()
}

fn add(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Coefficient vectors of the system's roots, by canonical index.
pub fn vectors(rs: &RootSystem) -> Vec<Vec<i32>> {
    rs.roots().iter().map(|r| r.coeffs().to_vec()).collect()
}

/// Closure under adding any positive root, checked on vectors.
pub fn closed_under_all_roots(rs: &RootSystem, set: u128) -> bool {
    let v = vectors(rs);
    let lookup: BTreeMap<&Vec<i32>, usize> = v.iter().enumerate().map(|(k, r)| (r, k)).collect();
    (0..v.len()).filter(|&b| set >> b & 1 == 1).all(|b| {
        v.iter().all(|g| match lookup.get(&add(&v[b], g)) {
            Some(&s) => set >> s & 1 == 1,
            None => true,
        })
    })
}

/// Closure under adding simple roots, checked on vectors.
pub fn closed_under_simple_roots(rs: &RootSystem, set: u128) -> bool {
    let v = vectors(rs);
    let lookup: BTreeMap<&Vec<i32>, usize> = v.iter().enumerate().map(|(k, r)| (r, k)).collect();
    let n = rs.rank();
    (0..v.len()).filter(|&b| set >> b & 1 == 1).all(|b| {
        (0..n).all(|i| {
            let mut up = v[b].clone();
            up[i] += 1;
            match lookup.get(&up) {
                Some(&s) => set >> s & 1 == 1,
                None => true,
            }
        })
    })
}

/// Every upper-closed subset by scanning all `2^|Φ⁺|` subsets.
pub fn ideals_by_subset_scan(rs: &RootSystem) -> BTreeSet<u128> {
    assert!(rs.len() <= 20, "subset scan is exponential");
    (0u128..1u128 << rs.len())
        .filter(|&s| closed_under_simple_roots(rs, s))
        .collect()
}

/// Every ideal, reached from `Φ⁺` by repeatedly deleting a root that no
/// member lies directly above.
pub fn ideals_by_deletion_search(rs: &RootSystem) -> BTreeSet<u128> {
    let v = vectors(rs);
    let lookup: BTreeMap<&Vec<i32>, usize> = v.iter().enumerate().map(|(k, r)| (r, k)).collect();
    let n = rs.rank();
    let full: u128 = if v.len() == 128 {
        u128::MAX
    } else {
        (1u128 << v.len()) - 1
    };
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(full);
    queue.push_back(full);
    while let Some(set) = queue.pop_front() {
        for b in (0..v.len()).filter(|&b| set >> b & 1 == 1) {
            let minimal = (0..n).all(|i| {
                let mut down = v[b].clone();
                down[i] -= 1;
                match lookup.get(&down) {
                    Some(&s) => set >> s & 1 == 0,
                    None => true,
                }
            });
            if minimal {
                let next = set & !(1u128 << b);
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen
}

pub fn is_abelian_oracle(rs: &RootSystem, set: u128) -> bool {
    let v = vectors(rs);
    let all: BTreeSet<&Vec<i32>> = v.iter().collect();
    let members: Vec<usize> = (0..v.len()).filter(|&b| set >> b & 1 == 1).collect();
    members
        .iter()
        .all(|&b| members.iter().all(|&c| !all.contains(&add(&v[b], &v[c]))))
}

pub fn derived_oracle(rs: &RootSystem, set: u128) -> u128 {
    let v = vectors(rs);
    let lookup: BTreeMap<&Vec<i32>, usize> = v.iter().enumerate().map(|(k, r)| (r, k)).collect();
    let members: Vec<usize> = (0..v.len()).filter(|&b| set >> b & 1 == 1).collect();
    let mut out = 0u128;
    for &b in &members {
        for &c in &members {
            if let Some(&s) = lookup.get(&add(&v[b], &v[c])) {
                out |= 1 << s;
            }
        }
    }
    out
}

/// Normalizer type via the whole Levi factor: `P_J` normalizes `n` iff for
/// every positive `γ` supported in `J` and every `β ∈ n`, `β - γ` is neither
/// zero nor a negative root, and lies in `n` when it is a positive root. The
/// normalizer is the largest such `J`.
pub fn normalizer_oracle(rs: &RootSystem, set: u128) -> u16 {
    let v = vectors(rs);
    let lookup: BTreeMap<&Vec<i32>, usize> = v.iter().enumerate().map(|(k, r)| (r, k)).collect();
    let n = rs.rank();
    let support = |r: &Vec<i32>| -> u16 {
        r.iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .fold(0, |m, (i, _)| m | 1 << i)
    };
    let normalizes = |j: u16| -> bool {
        v.iter().filter(|g| support(g) & !j == 0).all(|g| {
            (0..v.len()).filter(|&b| set >> b & 1 == 1).all(|b| {
                let d = sub(&v[b], g);
                if d.iter().all(|&c| c == 0) {
                    return false;
                }
                let neg: Vec<i32> = d.iter().map(|c| -c).collect();
                if lookup.contains_key(&neg) {
                    return false;
                }
                match lookup.get(&d) {
                    Some(&s) => set >> s & 1 == 1,
                    None => true,
                }
            })
        })
    };
    let good: Vec<u16> = (0u16..1 << n).filter(|&j| normalizes(j)).collect();
    let union = good.iter().fold(0u16, |a, &j| a | j);
    assert!(normalizes(union), "normalizing types are closed under union");
    union
}

pub fn nilradical_oracle(rs: &RootSystem, j: u16) -> u128 {
    vectors(rs)
        .iter()
        .enumerate()
        .filter(|(_, r)| r.iter().enumerate().any(|(i, &c)| c != 0 && j >> i & 1 == 0))
        .fold(0u128, |m, (k, _)| m | 1 << k)
}

/// Chain counts, length histogram and signed stabilizer sums (keyed by
/// mask) of one complex, by scanning every subset of its vertex set.
#[derive(Debug, PartialEq, Eq)]
pub struct BruteTally {
    pub total: u64,
    pub by_length: Vec<u64>,
    pub sum: BTreeMap<u16, i64>,
}

pub fn brute_force_chains(rs: &RootSystem, kind: ComplexKind) -> BruteTally {
    let rank = rs.rank();
    let full: u16 = ((1u32 << rank) - 1) as u16;
    // vertices as (element for inclusion tests, stabilizer mask)
    let vertices: Vec<(u128, u16)> = match kind {
        ComplexKind::CP => (0..full).map(|j| (j as u128, j)).collect(),
        _ => ideals_by_subset_scan(rs)
            .into_iter()
            .filter(|&s| s != 0)
            .filter(|&s| match kind {
                ComplexKind::CA => is_abelian_oracle(rs, s),
                ComplexKind::CR => nilradical_oracle(rs, normalizer_oracle(rs, s)) == s,
                _ => true,
            })
            .map(|s| (s, normalizer_oracle(rs, s)))
            .collect(),
    };
    assert!(vertices.len() <= 22, "chain scan is exponential");
    let mut tally = BruteTally {
        total: 0,
        by_length: vec![0; vertices.len() + 1],
        sum: BTreeMap::new(),
    };
    for pick in 0u64..1u64 << vertices.len() {
        let chosen: Vec<&(u128, u16)> = (0..vertices.len())
            .filter(|&k| pick >> k & 1 == 1)
            .map(|k| &vertices[k])
            .collect();
        let comparable = chosen
            .iter()
            .all(|a| chosen.iter().all(|b| a.0 & !b.0 == 0 || b.0 & !a.0 == 0));
        if !comparable {
            continue;
        }
        let stab = chosen.iter().fold(full, |m, v| m & v.1);
        tally.total += 1;
        tally.by_length[chosen.len()] += 1;
        *tally.sum.entry(stab).or_insert(0) += if chosen.len().is_multiple_of(2) { 1 } else { -1 };
    }
    tally.sum.retain(|_, c| *c != 0);
    while tally.by_length.len() > 1 && *tally.by_length.last().unwrap() == 0 {
        tally.by_length.pop();
    }
    tally
}

/// Number of ad-nilpotent ideals by the closed product formulas.
pub fn catalan_count(spec: RootSystemSpec) -> u64 {
    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
    }
    let n = spec.rank() as u64;
    match spec.family() {
        nilchain::Family::A => binom(2 * n + 2, n + 1) / (n + 2),
        nilchain::Family::B | nilchain::Family::C => binom(2 * n, n),
        nilchain::Family::D => binom(2 * n, n) - binom(2 * n - 2, n - 1),
        nilchain::Family::E => match n {
            6 => 833,
            7 => 4160,
            _ => 25080,
        },
        nilchain::Family::F => 105,
        nilchain::Family::G => 8,
    }
}

pub fn spec(family: &str, rank: usize) -> RootSystemSpec {
    RootSystemSpec::parse(family, rank).unwrap()
}

pub fn system(family: &str, rank: usize) -> RootSystem {
    RootSystem::build_unrestricted(spec(family, rank)).unwrap()
}
