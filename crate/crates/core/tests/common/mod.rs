//! Fixtures and independent reference computations shared by the
//! integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use maxorth::{IntMatrix, Root, RootSystem, RootSystemType, Word};
use num_bigint::BigUint;

pub fn rs(name: &str) -> RootSystem {
    RootSystem::new(name.parse::<RootSystemType>().unwrap())
}

pub fn root(v: &[i64]) -> Root {
    Root::new(v.to_vec())
}

pub fn word(v: &[usize]) -> Word {
    Word::new(v.to_vec())
}

/// Every admissible type up to rank 8.
pub fn sweep_types() -> Vec<String> {
    let mut v = Vec::new();
    v.extend((1..=8).map(|n| format!("A{n}")));
    v.extend((2..=8).map(|n| format!("B{n}")));
    v.extend((2..=8).map(|n| format!("C{n}")));
    v.extend((3..=8).map(|n| format!("D{n}")));
    v.extend(["E6", "E7", "E8", "F4", "G2"].map(String::from));
    v
}

/// Root count by orbit closure of the simple roots under simple
/// reflections, using only the doubled Gram matrix.
pub fn orbit_positive_root_count(rs: &RootSystem) -> usize {
    let g = rs.gram2();
    let n = rs.rank();
    let reflect = |x: &[i64], i: usize| -> Vec<i64> {
        let ax: i64 = (0..n).map(|k| g[(i, k)] * x[k]).sum();
        let c = 2 * ax / g[(i, i)];
        let mut y = x.to_vec();
        y[i] -= c;
        y
    };
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut stack: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    while let Some(x) = stack.pop() {
        if !seen.insert(x.clone()) {
            continue;
        }
        for i in 0..n {
            let y = reflect(&x, i);
            if !seen.contains(&y) {
                stack.push(y);
            }
        }
    }
    assert_eq!(seen.len() % 2, 0);
    seen.iter().filter(|v| v.iter().all(|&c| c >= 0)).count()
}

/// Tabulated positive-root counts.
pub fn classical_root_count(name: &str) -> usize {
    let n: usize = name[1..].parse().unwrap();
    match &name[..1] {
        "A" => n * (n + 1) / 2,
        "B" | "C" => n * n,
        "D" => n * (n - 1),
        "E" => [36, 63, 120][n - 6],
        "F" => 24,
        _ => 6,
    }
}

/// Standard Young tableaux of staircase shape `(n, n-1, …, 1)` by the hook
/// length formula; equals the number of reduced words of `w₀` in `A_n`.
pub fn staircase_tableaux(n: usize) -> BigUint {
    let cells = n * (n + 1) / 2;
    let mut num = BigUint::from(1u32);
    for k in 1..=cells {
        num *= BigUint::from(k);
    }
    let mut den = BigUint::from(1u32);
    for r in 0..n {
        let row_len = n - r;
        for c in 0..row_len {
            let arm = row_len - c - 1;
            let leg = n - c - r - 1;
            den *= BigUint::from(arm + leg + 1);
        }
    }
    num / den
}

/// Expected factor counts, written out per type.
pub fn expected_count(name: &str) -> usize {
    match name {
        "A1" | "A2" => 1,
        "A3" | "A4" => 2,
        "A5" | "A6" => 3,
        "A7" | "A8" => 4,
        "D3" => 2,
        "D4" | "D5" => 4,
        "D6" | "D7" => 6,
        "D8" => 8,
        "E6" => 4,
        "E7" => 7,
        "E8" => 8,
        "F4" => 4,
        "G2" => 2,
        _ => name[1..].parse().unwrap(),
    }
}

/// Permutation `ε` with `w₀ = −P_ε` according to the classical list.
pub fn expected_automorphism(name: &str) -> Vec<usize> {
    let n: usize = name[1..].parse().unwrap();
    let mut eps: Vec<usize> = (1..=n).collect();
    match &name[..1] {
        "A" if n >= 2 => eps = (1..=n).rev().collect(),
        "D" if n % 2 == 1 => eps.swap(n - 2, n - 1),
        "E" if n == 6 => eps = vec![6, 2, 5, 4, 3, 1],
        _ => {}
    }
    eps
}

pub fn minus_permutation_matrix(eps: &[usize]) -> IntMatrix {
    let n = eps.len();
    let cols: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut c = vec![0; n];
            c[eps[i] - 1] = -1;
            c
        })
        .collect();
    IntMatrix::from_columns(&cols)
}

/// `s_1 (s_2 s_1) (s_3 s_2 s_1) … (s_n … s_1)`.
pub fn a_longest_word(n: usize) -> Word {
    Word::new((1..=n).flat_map(|j| (1..=j).rev()).collect::<Vec<_>>())
}

/// `s_n (s_{n-1} s_n s_{n-1}) … (s_1 … s_n … s_1)`.
pub fn b_longest_word(n: usize) -> Word {
    let mut v = Vec::new();
    for i in (1..=n).rev() {
        v.extend(i..n);
        v.push(n);
        v.extend((i..n).rev());
    }
    Word::new(v)
}

/// `s_n s_{n-1} (s_{n-2} s_n s_{n-1} s_{n-2}) … (s_1 … s_{n-2} s_n s_{n-1} s_{n-2} … s_1)`.
pub fn d_longest_word(n: usize) -> Word {
    let mut v = vec![n, n - 1];
    for i in (1..=n - 2).rev() {
        v.extend(i..=n - 2);
        v.push(n);
        v.push(n - 1);
        v.extend((i..=n - 2).rev());
    }
    Word::new(v)
}

pub const E6_W1: [usize; 21] = [
    2, 4, 5, 3, 4, 6, 5, 2, 4, 3, 1, 3, 4, 2, 5, 6, 4, 3, 5, 4, 2,
];
pub const E6_W2: [usize; 15] = [6, 5, 6, 4, 5, 6, 3, 4, 5, 6, 1, 3, 4, 5, 6];

pub const E7_W1: [usize; 30] = [
    7, 6, 7, 5, 6, 7, 4, 5, 6, 7, 3, 4, 5, 6, 7, 2, 4, 5, 6, 7, 3, 4, 5, 6, 2, 4, 5, 3, 4, 2,
];
pub const E7_W2: [usize; 33] = [
    1, 3, 4, 5, 2, 4, 6, 5, 7, 6, 3, 4, 5, 2, 4, 3, 1, 3, 4, 2, 5, 4, 3, 6, 7, 5, 6, 4, 2, 5, 4, 3,
    1,
];

pub const E8_W1: [usize; 21] = [
    8, 7, 8, 6, 7, 8, 5, 6, 7, 8, 4, 5, 6, 7, 8, 3, 4, 5, 6, 7, 8,
];
pub const E8_W2: [usize; 43] = [
    2, 4, 5, 6, 3, 4, 5, 7, 6, 2, 4, 3, 5, 4, 2, 8, 7, 6, 5, 4, 3, 1, 3, 4, 5, 6, 7, 8, 2, 4, 5, 3,
    4, 2, 6, 7, 5, 4, 3, 6, 5, 4, 2,
];
pub const E8_W3: [usize; 22] = [
    1, 3, 4, 2, 5, 4, 3, 6, 5, 4, 7, 6, 8, 7, 5, 6, 2, 4, 5, 3, 4, 2,
];
pub const E8_W4: [usize; 34] = [
    1, 3, 4, 5, 6, 2, 4, 5, 3, 4, 7, 6, 5, 2, 4, 3, 8, 1, 3, 4, 2, 5, 6, 7, 4, 3, 5, 4, 2, 6, 5, 4,
    3, 1,
];

pub const F4_W1: [usize; 15] = [1, 2, 3, 2, 4, 3, 2, 1, 2, 3, 4, 2, 3, 2, 1];
pub const F4_W2: [usize; 9] = [4, 3, 2, 3, 4, 3, 2, 3, 2];

pub const G2_LONGEST: [usize; 6] = [2, 1, 2, 1, 2, 1];

/// Roots whose reflections multiply (in order) to each staged E8 element.
pub fn e8_stage_roots() -> [Vec<Root>; 4] {
    [
        vec![
            root(&[0, 0, 0, 0, 1, 1, 0, 0]),
            root(&[0, 0, 0, 1, 1, 1, 1, 0]),
            root(&[0, 0, 1, 1, 1, 1, 1, 1]),
        ],
        vec![root(&[1, 3, 3, 5, 4, 3, 2, 1])],
        vec![
            root(&[1, 0, 0, 0, 0, 0, 0, 0]),
            root(&[0, 1, 0, 1, 0, 0, 0, 0]),
            root(&[0, 0, 1, 1, 1, 0, 0, 0]),
            root(&[0, 1, 1, 2, 1, 1, 0, 0]),
            root(&[0, 1, 1, 1, 1, 1, 1, 0]),
            root(&[0, 0, 0, 0, 0, 0, 1, 1]),
            root(&[0, 0, 0, 0, 0, 1, 0, 0]),
            root(&[0, 1, 0, 1, 1, 0, 0, 0]),
        ],
        vec![
            root(&[1, 0, 1, 1, 1, 1, 1, 1]),
            root(&[2, 2, 3, 4, 3, 2, 1, 0]),
        ],
    ]
}

pub fn e7_w1_roots() -> Vec<Root> {
    vec![
        root(&[0, 0, 0, 1, 0, 0, 0]),
        root(&[0, 0, 0, 0, 0, 0, 1]),
        root(&[0, 1, 1, 2, 2, 2, 1]),
        root(&[0, 0, 1, 1, 1, 0, 0]),
        root(&[0, 1, 0, 1, 1, 0, 0]),
        root(&[0, 1, 1, 1, 0, 0, 0]),
    ]
}
