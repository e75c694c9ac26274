//! Smith normal form over the integers with unimodular transforms.

pub type IntMatrix = Vec<Vec<i64>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    /// Inverse of `v`, tracked alongside the column operations.
    pub v_inv: IntMatrix,
}

impl SmithForm {
    /// The diagonal entries d₁ | d₂ | … (length min(rows, cols)).
    pub fn diagonal(&self) -> Vec<i64> {
        let n = self.d.len().min(self.d.first().map_or(0, Vec::len));
        (0..n).map(|i| self.d[i][i]).collect()
    }
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "dimension mismatch");
            (0..cols).map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum()).collect()
        })
        .collect()
}

/// Computes unimodular U, V with U·M·V = D diagonal, d₁ | d₂ | …, all dᵢ ≥ 0.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut d = m.clone();
    let mut u = identity(rows);
    let mut v = identity(cols);
    let mut v_inv = identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let pivot =
                (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j))).filter(|&(i, j)| d[i][j] != 0).min_by_key(|&(i, j)| d[i][j].abs());
            let Some((pi, pj)) = pivot else { return SmithForm { u, d, v, v_inv } };
            d.swap(t, pi);
            u.swap(t, pi);
            for row in d.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }
            v_inv.swap(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                let q = d[i][t].div_euclid(d[t][t]);
                if q != 0 {
                    row_axpy(&mut d, i, t, -q);
                    row_axpy(&mut u, i, t, -q);
                }
                clean &= d[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = d[t][j].div_euclid(d[t][t]);
                if q != 0 {
                    col_axpy(&mut d, j, t, -q);
                    col_axpy(&mut v, j, t, -q);
                    row_axpy(&mut v_inv, t, j, q);
                }
                clean &= d[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into the pivot row and retry
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| d[i][j] % d[t][t] != 0));
            match offender {
                Some(i) => {
                    row_axpy(&mut d, t, i, 1);
                    row_axpy(&mut u, t, i, 1);
                }
                None => break,
            }
        }
        if d[t][t] < 0 {
            for x in d[t].iter_mut() {
                *x = -*x;
            }
            for x in u[t].iter_mut() {
                *x = -*x;
            }
        }
    }
    SmithForm { u, d, v, v_inv }
}

fn row_axpy(m: &mut IntMatrix, target: usize, source: usize, k: i64) {
    let src = m[source].clone();
    for (x, s) in m[target].iter_mut().zip(src) {
        *x += k * s;
    }
}

fn col_axpy(m: &mut IntMatrix, target: usize, source: usize, k: i64) {
    for row in m.iter_mut() {
        row[target] += k * row[source];
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &IntMatrix) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(s) = (k + 1..n).find(|&i| a[i][k] != 0) else { return 0 };
            a.swap(k, s);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}
