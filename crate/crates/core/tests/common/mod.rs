#![allow(dead_code)]

use liemult::linalg::{int, kernel_basis};
use liemult::{MatrixQ, Rational, Subspace};

/// Number of Lyndon words of length `n` over `d` letters, by enumeration.
pub fn lyndon_count(d: usize, n: usize) -> u64 {
    if d == 0 || n == 0 {
        return 0;
    }
    // Duval's algorithm generates Lyndon words of length <= n in order.
    let mut count = 0;
    let mut w: Vec<usize> = vec![0];
    loop {
        if w.len() == n {
            count += 1;
        }
        let m = w.len();
        while w.len() < n {
            let c = w[w.len() - m];
            w.push(c);
        }
        while let Some(&last) = w.last() {
            if last + 1 == d {
                w.pop();
            } else {
                break;
            }
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => return count,
        }
    }
}

pub fn tri(n: usize) -> u64 {
    (n * n.saturating_sub(1) / 2) as u64
}

/// Intersection by solving `Σ a_i u_i = Σ b_j w_j` on the stacked basis.
pub fn stacked_intersection(a: &Subspace, b: &Subspace) -> Subspace {
    let n = a.ambient_dim();
    let cols: Vec<Vec<Rational>> = a
        .basis()
        .iter()
        .cloned()
        .chain(b.basis().iter().map(|v| v.iter().map(|x| -x).collect()))
        .collect();
    if cols.is_empty() {
        return Subspace::zero(n);
    }
    let m = MatrixQ::from_columns(n, &cols).unwrap();
    let ker = kernel_basis(&m);
    let vectors = ker.basis().iter().map(|coeffs| {
        let mut v = vec![int(0); n];
        for (c, u) in coeffs.iter().zip(a.basis()) {
            for (x, y) in v.iter_mut().zip(u) {
                *x += c * y;
            }
        }
        v
    });
    Subspace::span(n, vectors).unwrap()
}

pub fn report(n: usize, label: &str, ok: bool) -> bool {
    println!("criterion {n:>2} {}: {label}", if ok { "PASS" } else { "FAIL" });
    ok
}
