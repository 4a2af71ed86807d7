//! Independent Alexander polynomial oracle: reduced Burau representation.
//!
//! Delta(t) = det(I - B(beta)) (1 - t) / (1 - t^k), symmetrized.

#![allow(dead_code)]

use std::collections::BTreeMap;

type Laurent = BTreeMap<i32, i64>;

fn mono(e: i32, c: i64) -> Laurent {
    let mut m = Laurent::new();
    if c != 0 {
        m.insert(e, c);
    }
    m
}

fn add(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = a.clone();
    for (&e, &c) in b {
        let v = out.entry(e).or_insert(0);
        *v += c;
        if *v == 0 {
            out.remove(&e);
        }
    }
    out
}

fn mul(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (&ea, &ca) in a {
        for (&eb, &cb) in b {
            out = add(&out, &mono(ea + eb, ca * cb));
        }
    }
    out
}

type Matrix = Vec<Vec<Laurent>>;

fn identity(m: usize) -> Matrix {
    (0..m)
        .map(|i| (0..m).map(|j| mono(0, (i == j) as i64)).collect())
        .collect()
}

fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let m = a.len();
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| (0..m).fold(Laurent::new(), |acc, k| add(&acc, &mul(&a[i][k], &b[k][j]))))
                .collect()
        })
        .collect()
}

fn generator(m: usize, i: usize, inverse: bool) -> Matrix {
    let mut s = identity(m);
    s[i] = vec![Laurent::new(); m];
    if inverse {
        s[i][i] = mono(-1, -1);
        if i > 0 {
            s[i][i - 1] = mono(0, 1);
        }
        if i + 1 < m {
            s[i][i + 1] = mono(-1, 1);
        }
    } else {
        s[i][i] = mono(1, -1);
        if i > 0 {
            s[i][i - 1] = mono(1, 1);
        }
        if i + 1 < m {
            s[i][i + 1] = mono(0, 1);
        }
    }
    s
}

fn det(a: &Matrix) -> Laurent {
    let m = a.len();
    if m == 0 {
        return mono(0, 1);
    }
    let mut total = Laurent::new();
    for col in 0..m {
        let minor: Matrix = a[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != col)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let sign = if col % 2 == 0 { 1 } else { -1 };
        total = add(&total, &mul(&mul(&a[0][col], &mono(0, sign)), &det(&minor)));
    }
    total
}

/// Dense coefficients from the lowest exponent, trimmed.
fn dense(p: &Laurent) -> Vec<i64> {
    match (p.keys().next(), p.keys().next_back()) {
        (Some(&lo), Some(&hi)) => (lo..=hi).map(|e| p.get(&e).copied().unwrap_or(0)).collect(),
        _ => Vec::new(),
    }
}

/// Exact division of dense polynomials, lowest degree first.
fn divide(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dl = den.len();
    assert!(rem.len() >= dl, "degree too small to divide");
    let mut q = vec![0i64; rem.len() - dl + 1];
    for i in (0..q.len()).rev() {
        let lead = rem[i + dl - 1];
        assert_eq!(lead % den[dl - 1], 0);
        q[i] = lead / den[dl - 1];
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= q[i] * d;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "inexact division");
    q
}

/// Symmetric coefficient list of the Alexander polynomial of the closure,
/// lowest exponent first, sign fixed by Delta(1) = 1.
pub fn burau_delta(strands: usize, letters: &[i32]) -> Vec<i64> {
    if strands == 1 {
        return vec![1];
    }
    let m = strands - 1;
    let mut b = identity(m);
    for &l in letters {
        b = matmul(&b, &generator(m, l.unsigned_abs() as usize - 1, l < 0));
    }
    let mut a = identity(m);
    for i in 0..m {
        for j in 0..m {
            a[i][j] = add(&a[i][j], &mul(&b[i][j], &mono(0, -1)));
        }
    }
    let d = dense(&det(&a));
    let q = divide(&d, &vec![1; strands]);
    let mut q: Vec<i64> = {
        let lo = q.iter().position(|&c| c != 0).unwrap();
        let hi = q.iter().rposition(|&c| c != 0).unwrap();
        q[lo..=hi].to_vec()
    };
    if q.iter().sum::<i64>() < 0 {
        q.iter_mut().for_each(|c| *c = -*c);
    }
    assert_eq!(q.iter().sum::<i64>(), 1, "Delta(1) must be 1");
    q
}

/// Cycle count of the closure permutation.
pub fn closure_components(strands: usize, letters: &[i32]) -> usize {
    let mut perm: Vec<usize> = (0..strands).collect();
    for &l in letters {
        let i = l.unsigned_abs() as usize - 1;
        perm.swap(i, i + 1);
    }
    let mut seen = vec![false; strands];
    let mut cycles = 0;
    for s in 0..strands {
        if !seen[s] {
            cycles += 1;
            let mut c = s;
            while !seen[c] {
                seen[c] = true;
                c = perm[c];
            }
        }
    }
    cycles
}
