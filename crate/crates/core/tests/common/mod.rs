//! Reference computations that share no code with the library's algorithms.
#![allow(dead_code)]

use std::collections::BTreeMap;

use obstruction_core::{BigInt, IntMatrix};
use rand::Rng;

pub fn matrix(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_rows(rows).unwrap()
}

pub fn big(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn gcd_ext(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = gcd_ext(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// Lower-triangular basis of the column span of `m` (square, nonsingular),
/// built with extended-gcd column operations.
fn column_hermite_basis(m: &[Vec<i64>]) -> Vec<Vec<i128>> {
    let n = m.len();
    let mut b: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    for i in 0..n {
        for j in i + 1..n {
            let (x, y) = (b[i][i], b[i][j]);
            if y == 0 {
                continue;
            }
            let (g, s, t) = gcd_ext(x, y);
            let (u, v) = (x / g, y / g);
            // [col_i, col_j] <- [s col_i + t col_j, -v col_i + u col_j]; det = 1
            for row in b.iter_mut() {
                let (ci, cj) = (row[i], row[j]);
                row[i] = s * ci + t * cj;
                row[j] = -v * ci + u * cj;
            }
        }
        if b[i][i] < 0 {
            for row in b.iter_mut() {
                row[i] = -row[i];
            }
        }
    }
    b
}

fn reduce(v: &mut [i128], basis: &[Vec<i128>]) {
    for i in 0..v.len() {
        let q = v[i].div_euclid(basis[i][i]);
        if q != 0 {
            for (k, x) in v.iter_mut().enumerate() {
                *x -= q * basis[k][i];
            }
        }
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Invariant factors (all > 1) of ℤⁿ / (column span of `m`) for a
/// nonsingular square `m`, by listing the coset representatives and counting
/// the elements killed by each prime power.
pub fn brute_force_cokernel(m: &[Vec<i64>]) -> Vec<u64> {
    let n = m.len();
    let basis = column_hermite_basis(m);
    let sizes: Vec<i128> = (0..n).map(|i| basis[i][i]).collect();
    assert!(sizes.iter().all(|&s| s > 0), "matrix must be nonsingular");
    let order: i128 = sizes.iter().product();

    let mut elements = Vec::with_capacity(order as usize);
    let mut current = vec![0i128; n];
    loop {
        elements.push(current.clone());
        let mut i = 0;
        while i < n {
            current[i] += 1;
            if current[i] < sizes[i] {
                break;
            }
            current[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    assert_eq!(elements.len() as i128, order);

    let killed_by = |d: i128| {
        elements
            .iter()
            .filter(|e| {
                let mut v: Vec<i128> = e.iter().map(|x| x * d).collect();
                reduce(&mut v, &basis);
                v.iter().all(|&x| x == 0)
            })
            .count() as u64
    };

    // exponents[p] = partition of the p-part, largest first
    let mut partitions: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for p in prime_factors(order as u64) {
        // r_j = #{factors with p-exponent >= j} = log_p(|G[p^j]| / |G[p^(j-1)]|)
        let mut counts = vec![1u64];
        let mut pj: i128 = 1;
        loop {
            pj *= p as i128;
            let c = killed_by(pj);
            if c == *counts.last().unwrap() {
                break;
            }
            counts.push(c);
        }
        let mut at_least = Vec::new();
        for w in counts.windows(2) {
            let mut ratio = w[1] / w[0];
            let mut r = 0;
            while ratio > 1 {
                ratio /= p;
                r += 1;
            }
            at_least.push(r);
        }
        // conjugate partition
        let parts = at_least[0];
        let exps: Vec<u32> = (0..parts)
            .map(|k| at_least.iter().filter(|&&r| r > k).count() as u32)
            .collect();
        partitions.insert(p, exps);
    }
    let len = partitions.values().map(Vec::len).max().unwrap_or(0);
    let mut factors: Vec<u64> = (0..len)
        .map(|k| {
            partitions
                .iter()
                .map(|(&p, e)| p.pow(e.get(k).copied().unwrap_or(0)))
                .product()
        })
        .collect();
    factors.reverse();
    factors
}

/// n/q evaluated from b₁ − 1/(b₂ − ⋯) left to right with explicit
/// gcd reduction.
pub fn evaluate_continued_fraction(terms: &[u64]) -> (i128, i128) {
    fn go(terms: &[u64]) -> (i128, i128) {
        if terms.len() == 1 {
            return (terms[0] as i128, 1);
        }
        let (p, q) = go(&terms[1..]);
        // b - q/p = (b p - q) / p
        let num = terms[0] as i128 * p - q;
        let den = p;
        let g = gcd_ext(num, den).0;
        (num / g, den / g)
    }
    go(terms)
}

type Poly = Vec<i128>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by the monic polynomial t^k − 1.
fn poly_div_tk_minus_1(a: &Poly, k: usize) -> Poly {
    let mut rem = a.clone();
    let deg = a.len() - 1;
    assert!(deg >= k);
    let mut q = vec![0; deg - k + 1];
    for i in (k..=deg).rev() {
        let c = rem[i];
        q[i - k] = c;
        rem[i] -= c;
        rem[i - k] += c;
    }
    assert!(rem.iter().all(|&x| x == 0), "division not exact");
    q
}

fn t_k_minus_1(k: usize) -> Poly {
    let mut p = vec![0; k + 1];
    p[0] = -1;
    p[k] = 1;
    p
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Characteristic polynomial of the monodromy of x^a + y^b + z^c from the
/// divisor (Λ_a − 1)(Λ_b − 1)(Λ_c − 1), where Λ_k stands for t^k − 1 and
/// Λ_x Λ_y = gcd(x, y) Λ_lcm(x, y). Coefficients from the constant term.
pub fn brieskorn_char_poly(a: u64, b: u64, c: u64) -> Poly {
    let mut divisor: BTreeMap<u64, i64> = BTreeMap::new();
    divisor.insert(1, 1);
    for e in [a, b, c] {
        let mut next: BTreeMap<u64, i64> = BTreeMap::new();
        for (&k, &mult) in &divisor {
            let g = gcd(k, e);
            *next.entry(k * e / g).or_default() += mult * g as i64;
            *next.entry(k).or_default() -= mult;
        }
        divisor = next;
    }
    let mut num: Poly = vec![1];
    for (&k, &mult) in &divisor {
        for _ in 0..mult.max(0) {
            num = poly_mul(&num, &t_k_minus_1(k as usize));
        }
    }
    for (&k, &mult) in &divisor {
        for _ in 0..(-mult).max(0) {
            num = poly_div_tk_minus_1(&num, k as usize);
        }
    }
    num
}

pub fn poly_eval(p: &Poly, t: i128) -> i128 {
    p.iter().rev().fold(0, |acc, c| acc * t + c)
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> Vec<Vec<i64>> {
    (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect()
}

/// Product of random elementary matrices: determinant ±1 by construction.
pub fn random_unimodular(rng: &mut impl Rng, n: usize, steps: usize) -> IntMatrix {
    let mut p = IntMatrix::identity(n);
    for _ in 0..steps {
        let mut e = IntMatrix::identity(n);
        match rng.gen_range(0..3) {
            0 if n > 1 => {
                let i = rng.gen_range(0..n);
                let j = (i + rng.gen_range(1..n)) % n;
                e[(i, j)] = BigInt::from(rng.gen_range(-3..=3));
            }
            1 => {
                let i = rng.gen_range(0..n);
                e[(i, i)] = BigInt::from(-1);
            }
            _ if n > 1 => {
                let i = rng.gen_range(0..n);
                let j = (i + rng.gen_range(1..n)) % n;
                e[(i, i)] = BigInt::from(0);
                e[(j, j)] = BigInt::from(0);
                e[(i, j)] = BigInt::from(1);
                e[(j, i)] = BigInt::from(1);
            }
            _ => {}
        }
        p = &p * &e;
    }
    p
}

#[test]
fn oracle_self_checks() {
    // Z/2 + Z/2 from diag(2, 2); Z/6 from diag(2, 3)
    assert_eq!(brute_force_cokernel(&[vec![2, 0], vec![0, 2]]), vec![2, 2]);
    assert_eq!(brute_force_cokernel(&[vec![2, 0], vec![0, 3]]), vec![6]);
    assert_eq!(brute_force_cokernel(&[vec![1]]), Vec::<u64>::new());
    assert_eq!(evaluate_continued_fraction(&[3, 2, 2]), (7, 3));
    // E_8 singularity: char poly of x^2+y^3+z^5 has degree 8 and value 1 at t = 1
    let p = brieskorn_char_poly(2, 3, 5);
    assert_eq!(p.len(), 9);
    assert_eq!(poly_eval(&p, 1), 1);
}
