//! Linear algebra over prime fields F_p with p below 2^32.

use crate::error::{usage, Error, Result};

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse modulo a prime; `a` must be nonzero mod p.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "zero has no inverse");
    pow_mod(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest generator of the multiplicative group of F_p.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = prime_factors(p - 1);
    (2..p).find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1)).expect("every prime has a primitive root")
}

/// Smallest prime p with p ≡ 1 (mod e) and p > bound.
pub fn working_prime(e: u64, bound: u64) -> u64 {
    let mut p = (bound / e + 1) * e + 1;
    while !is_prime(p) {
        p += e;
    }
    p
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFieldMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl PrimeFieldMatrix {
    pub fn new(p: u64, rows: usize, cols: usize, data: Vec<u64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(usage(format!("{rows}x{cols} matrix needs {} entries", rows * cols)));
        }
        let data = data.into_iter().map(|x| x % p).collect();
        Ok(PrimeFieldMatrix { p, rows, cols, data })
    }

    pub fn from_signed(p: u64, rows: usize, cols: usize, data: &[i64]) -> Result<Self> {
        let pi = p as i64;
        Self::new(p, rows, cols, data.iter().map(|&x| x.rem_euclid(pi) as u64).collect())
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1 % p;
        }
        PrimeFieldMatrix { p, rows: n, cols: n, data }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|r| self.row(r).iter().zip(v).fold(0u64, |acc, (&a, &b)| (acc + mul_mod(a, b, self.p)) % self.p)).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let p = self.p;
        let mut data = vec![0; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    data[idx] = (data[idx] + mul_mod(a, other.get(k, j), p)) % p;
                }
            }
        }
        PrimeFieldMatrix { p, rows: self.rows, cols: other.cols, data }
    }

    /// Right null space: a basis of {x : A x = 0}.
    pub fn kernel(&self) -> Vec<Vec<u64>> {
        let p = self.p;
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(pr) = (r..rows).find(|&i| m[i * cols + c] != 0) else { continue };
            for j in 0..cols {
                m.swap(r * cols + j, pr * cols + j);
            }
            let inv = inv_mod(m[r * cols + c], p);
            for j in 0..cols {
                m[r * cols + j] = mul_mod(m[r * cols + j], inv, p);
            }
            for i in 0..rows {
                if i != r && m[i * cols + c] != 0 {
                    let f = m[i * cols + c];
                    for j in 0..cols {
                        let sub = mul_mod(f, m[r * cols + j], p);
                        m[i * cols + j] = (m[i * cols + j] + p - sub) % p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u64; cols];
                v[f] = 1;
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = (p - m[i * cols + f]) % p;
                }
                v
            })
            .collect()
    }

    /// Characteristic polynomial det(xI - A), low degree first, via Hessenberg reduction.
    pub fn charpoly(&self) -> Vec<u64> {
        assert_eq!(self.rows, self.cols, "charpoly needs a square matrix");
        let p = self.p;
        let n = self.rows;
        let mut h = self.data.clone();
        let at = |i: usize, j: usize| i * n + j;
        for m in 1..n.saturating_sub(1) {
            let Some(piv) = (m..n).find(|&i| h[at(i, m - 1)] != 0) else { continue };
            if piv != m {
                for j in 0..n {
                    h.swap(at(piv, j), at(m, j));
                }
                for i in 0..n {
                    h.swap(at(i, piv), at(i, m));
                }
            }
            let inv = inv_mod(h[at(m, m - 1)], p);
            for i in m + 1..n {
                let u = mul_mod(h[at(i, m - 1)], inv, p);
                if u == 0 {
                    continue;
                }
                for j in 0..n {
                    let sub = mul_mod(u, h[at(m, j)], p);
                    h[at(i, j)] = (h[at(i, j)] + p - sub) % p;
                }
                for k in 0..n {
                    let add = mul_mod(u, h[at(k, i)], p);
                    h[at(k, m)] = (h[at(k, m)] + add) % p;
                }
            }
        }
        // recurrence on leading principal submatrices of the Hessenberg form
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for m in 1..=n {
            let mut next = vec![0u64; m + 1];
            // (x - h[m-1][m-1]) * polys[m-1]
            for (i, &c) in polys[m - 1].iter().enumerate() {
                next[i + 1] = (next[i + 1] + c) % p;
                next[i] = (next[i] + p - mul_mod(h[at(m - 1, m - 1)], c, p)) % p;
            }
            let mut t = 1u64;
            for i in 1..m {
                t = mul_mod(t, h[at(m - i, m - i - 1)], p);
                let coef = mul_mod(t, h[at(m - i - 1, m - 1)], p);
                for (j, &c) in polys[m - i - 1].iter().enumerate() {
                    next[j] = (next[j] + p - mul_mod(coef, c, p)) % p;
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }
}

fn eval_poly(poly: &[u64], x: u64, p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| (mul_mod(acc, x, p) + c) % p)
}

/// Reduced row echelon basis of the span of `vectors`, with the pivot column of each row.
fn echelon(mut vectors: Vec<Vec<u64>>, p: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let cols = vectors.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..vectors.len()).find(|&i| vectors[i][c] != 0) else { continue };
        vectors.swap(r, pr);
        let inv = inv_mod(vectors[r][c], p);
        for x in vectors[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let pivot_row = vectors[r].clone();
        for (i, v) in vectors.iter_mut().enumerate() {
            if i != r && v[c] != 0 {
                let f = v[c];
                for (x, &y) in v.iter_mut().zip(&pivot_row) {
                    *x = (*x + p - mul_mod(f, y, p)) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    vectors.truncate(r);
    (vectors, pivots)
}

/// Splits the full space into common eigenvectors of pairwise commuting, simultaneously
/// diagonalisable matrices. Each subspace is refined by the eigenspaces of each matrix in
/// turn until every subspace is a line.
pub fn simultaneous_eigenbasis(mats: &[PrimeFieldMatrix]) -> Result<Vec<Vec<u64>>> {
    let Some(first) = mats.first() else {
        return Err(usage("no matrices supplied"));
    };
    let p = first.p;
    let n = first.rows;
    if mats.iter().any(|m| m.rows != n || m.cols != n || m.p != p) {
        return Err(usage("matrices must be square, same size and same modulus"));
    }
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![PrimeFieldMatrix::identity(p, n).data.chunks(n.max(1)).map(<[u64]>::to_vec).collect()];
    if n == 0 {
        return Ok(Vec::new());
    }
    for m in mats {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut refined = Vec::with_capacity(spaces.len());
        for space in spaces {
            if space.len() == 1 {
                refined.push(space);
                continue;
            }
            refined.extend(split_space(m, space)?);
        }
        spaces = refined;
    }
    if let Some(s) = spaces.iter().find(|s| s.len() > 1) {
        return Err(Error::Internal(format!("bad prime or non-commuting input: a subspace of dimension {} did not split", s.len())));
    }
    Ok(spaces.into_iter().map(|mut s| s.pop().unwrap()).collect())
}

fn split_space(m: &PrimeFieldMatrix, space: Vec<Vec<u64>>) -> Result<Vec<Vec<Vec<u64>>>> {
    let p = m.p;
    let (basis, pivots) = echelon(space, p);
    let d = basis.len();
    // restriction of m to the (invariant) span: m v_b = Σ_a A[a][b] v_a
    let images: Vec<Vec<u64>> = basis.iter().map(|v| m.mul_vec(v)).collect();
    let mut a = vec![0u64; d * d];
    for (b, img) in images.iter().enumerate() {
        let mut recon = vec![0u64; img.len()];
        for (ai, &pc) in pivots.iter().enumerate() {
            a[ai * d + b] = img[pc];
            for (r, &x) in recon.iter_mut().zip(&basis[ai]) {
                *r = (*r + mul_mod(img[pc], x, p)) % p;
            }
        }
        if recon != *img {
            return Err(Error::Internal("bad prime or non-commuting input: subspace not invariant".into()));
        }
    }
    let restricted = PrimeFieldMatrix { p, rows: d, cols: d, data: a };
    let cp = restricted.charpoly();
    let mut pieces = Vec::new();
    let mut total = 0;
    for lambda in 0..p {
        if eval_poly(&cp, lambda, p) != 0 {
            continue;
        }
        let mut shifted = restricted.clone();
        for i in 0..d {
            shifted.data[i * d + i] = (shifted.data[i * d + i] + p - lambda) % p;
        }
        let ker = shifted.kernel();
        total += ker.len();
        let lifted: Vec<Vec<u64>> = ker
            .iter()
            .map(|x| {
                let mut v = vec![0u64; basis[0].len()];
                for (coef, bv) in x.iter().zip(&basis) {
                    if *coef != 0 {
                        for (o, &y) in v.iter_mut().zip(bv) {
                            *o = (*o + mul_mod(*coef, y, p)) % p;
                        }
                    }
                }
                v
            })
            .collect();
        pieces.push(lifted);
    }
    if total != d {
        return Err(Error::Internal(format!("bad prime or non-commuting input: eigenspaces span {total} of {d} dimensions")));
    }
    Ok(pieces)
}
