//! Dense linear algebra over F_p: RREF, nullspaces, invariant-subspace
//! restriction, Krylov minimal polynomials, and eigenspace splitting.

use crate::dixon::modp::{poly_deg, poly_lcm, poly_roots, splitmix64, Fp};
use crate::error::{Error, Result};

/// Row-major matrix over F_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<u64>,
}

impl ModMat {
    pub fn zeros(rows: usize, cols: usize) -> ModMat {
        ModMat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> ModMat {
        let mut m = ModMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<u64>>) -> ModMat {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            debug_assert_eq!(row.len(), c);
            data.extend(row);
        }
        ModMat {
            rows: r,
            cols: c,
            data,
        }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Matrix–vector product M·v, skipping zero entries (class matrices are
    /// typically sparse).
    pub fn mul_vec(&self, fp: &Fp, v: &[u64]) -> Vec<u64> {
        debug_assert_eq!(v.len(), self.cols);
        let mut out = vec![0u64; self.rows];
        for (r, o) in out.iter_mut().enumerate() {
            let row = self.row(r);
            let mut acc = 0u128;
            for (&m, &x) in row.iter().zip(v) {
                if m != 0 && x != 0 {
                    acc += m as u128 * x as u128;
                }
            }
            *o = (acc % fp.p as u128) as u64;
        }
        out
    }
}

/// In-place reduced row echelon form; returns pivot column indices.
pub fn rref(fp: &Fp, m: &mut ModMat) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(pr) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
            continue;
        };
        if pr != row {
            for c in 0..m.cols {
                let tmp = m.get(row, c);
                m.set(row, c, m.get(pr, c));
                m.set(pr, c, tmp);
            }
        }
        let inv = fp.inv(m.get(row, col));
        for c in col..m.cols {
            m.set(row, c, fp.mul(m.get(row, c), inv));
        }
        for r in 0..m.rows {
            if r != row {
                let f = m.get(r, col);
                if f != 0 {
                    for c in col..m.cols {
                        let v = fp.sub(m.get(r, c), fp.mul(f, m.get(row, c)));
                        m.set(r, c, v);
                    }
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Basis of {v : M·v = 0}, as vectors of length `cols`.
pub fn nullspace(fp: &Fp, m: &ModMat) -> Vec<Vec<u64>> {
    let mut work = m.clone();
    let pivots = rref(fp, &mut work);
    let mut basis = Vec::new();
    let mut piv_iter = pivots.iter().copied().peekable();
    let mut pivot_of_col = vec![usize::MAX; m.cols];
    for (i, &p) in pivots.iter().enumerate() {
        pivot_of_col[p] = i;
    }
    for free in 0..m.cols {
        if piv_iter.peek() == Some(&free) {
            piv_iter.next();
            continue;
        }
        let mut v = vec![0u64; m.cols];
        v[free] = 1;
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = fp.neg(work.get(i, free));
        }
        basis.push(v);
    }
    basis
}

/// An M-invariant subspace of F_p^k, stored as an RREF row basis so that
/// coordinates can be read off the pivot columns.
#[derive(Clone)]
pub struct Subspace {
    pub basis: ModMat,
    pub pivots: Vec<usize>,
}

impl Subspace {
    pub fn full(k: usize) -> Subspace {
        Subspace {
            basis: ModMat::identity(k),
            pivots: (0..k).collect(),
        }
    }

    /// Builds a subspace from spanning rows (reduced to RREF).
    pub fn from_rows(fp: &Fp, rows: Vec<Vec<u64>>) -> Subspace {
        let mut m = ModMat::from_rows(rows);
        let pivots = rref(fp, &mut m);
        let dim = pivots.len();
        let mut data = Vec::with_capacity(dim * m.cols);
        for r in 0..dim {
            data.extend_from_slice(m.row(r));
        }
        Subspace {
            basis: ModMat {
                rows: dim,
                cols: m.cols,
                data,
            },
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    /// Coordinates of a vector w ∈ span(basis), verified exactly.
    fn coordinates(&self, fp: &Fp, w: &[u64]) -> Result<Vec<u64>> {
        let coords: Vec<u64> = self.pivots.iter().map(|&p| w[p]).collect();
        // Verify Σ coords·basis rows == w; failure means the subspace was
        // not invariant, i.e. the class matrices are wrong.
        for (c, &wc) in w.iter().enumerate() {
            let mut acc = 0u128;
            for (t, &x) in coords.iter().enumerate() {
                if x != 0 {
                    acc += x as u128 * self.basis.get(t, c) as u128;
                }
            }
            if (acc % fp.p as u128) as u64 != wc {
                return Err(Error::Internal(
                    "subspace not invariant under class matrix — bad prime or wrong constants"
                        .into(),
                ));
            }
        }
        Ok(coords)
    }

    /// Restriction of M to this subspace: the d×d matrix A with
    /// coords(M·v) = A·coords(v).
    pub fn restrict(&self, fp: &Fp, m: &ModMat) -> Result<ModMat> {
        let d = self.dim();
        let mut a = ModMat::zeros(d, d);
        for t in 0..d {
            let w = m.mul_vec(fp, self.basis.row(t));
            let coords = self.coordinates(fp, &w)?;
            for (s, &value) in coords.iter().enumerate() {
                a.set(s, t, value);
            }
        }
        Ok(a)
    }

    /// Lifts a coordinate vector back to F_p^k.
    pub fn lift(&self, fp: &Fp, coords: &[u64]) -> Vec<u64> {
        let mut v = vec![0u64; self.basis.cols];
        for (t, &x) in coords.iter().enumerate() {
            if x != 0 {
                for (c, entry) in v.iter_mut().enumerate() {
                    *entry = fp.add(*entry, fp.mul(x, self.basis.get(t, c)));
                }
            }
        }
        v
    }
}

/// Minimal polynomial of `u` under `a` via Krylov iteration. Returns the
/// monic polynomial and the iterates u, Au, …, A^{deg−1}u.
fn krylov_minpoly(fp: &Fp, a: &ModMat, u: &[u64]) -> (Vec<u64>, Vec<Vec<u64>>) {
    let d = a.rows;
    // Reduced vectors with pivot position and the polynomial combination
    // expressing each in terms of the raw iterates.
    let mut reduced: Vec<(usize, Vec<u64>, Vec<u64>)> = Vec::new();
    let mut iterates: Vec<Vec<u64>> = Vec::new();
    let mut raw = u.to_vec();
    for t in 0..=d {
        let mut w = raw.clone();
        let mut poly = vec![0u64; t + 1];
        poly[t] = 1;
        for (piv, vec, p) in &reduced {
            let f = w[*piv];
            if f != 0 {
                for (wi, vi) in w.iter_mut().zip(vec) {
                    *wi = fp.sub(*wi, fp.mul(f, *vi));
                }
                for (i, &c) in p.iter().enumerate() {
                    poly[i] = fp.sub(poly[i], fp.mul(f, c));
                }
            }
        }
        if let Some(piv) = w.iter().position(|&x| x != 0) {
            let inv = fp.inv(w[piv]);
            for x in &mut w {
                *x = fp.mul(*x, inv);
            }
            let poly: Vec<u64> = poly.iter().map(|&c| fp.mul(c, inv)).collect();
            reduced.push((piv, w, poly));
            iterates.push(raw.clone());
            raw = a.mul_vec(fp, &raw);
        } else {
            // Dependence found: poly is monic of degree t by construction.
            debug_assert_eq!(poly[t], 1);
            return (poly, iterates);
        }
    }
    unreachable!("d+1 vectors in a d-dimensional space must be dependent")
}

/// Splits the coordinate space of a diagonalizable matrix into the
/// eigenspaces of `a`. Returns one basis (list of coordinate vectors) per
/// eigenvalue, ordered by ascending eigenvalue. A single returned space
/// means `a` is scalar on this subspace (no split).
pub fn split_eigenspaces(fp: &Fp, a: &ModMat, seed: u64) -> Result<Vec<Vec<Vec<u64>>>> {
    let d = a.rows;
    debug_assert!(d > 0);
    let mut state = seed ^ 0x6a09e667f3bcc908;
    let mut lcm: Vec<u64> = vec![1];

    // Deterministic vector sequence: one pseudorandom vector, then the
    // coordinate basis (whose minpolys always lcm to the true one).
    for attempt in 0..=d {
        let u: Vec<u64> = if attempt == 0 {
            (0..d).map(|_| splitmix64(&mut state) % fp.p).collect()
        } else {
            let mut e = vec![0u64; d];
            e[attempt - 1] = 1;
            e
        };
        if u.iter().all(|&x| x == 0) {
            continue;
        }
        let (mu, iterates) = krylov_minpoly(fp, a, &u);

        if poly_deg(&mu) == d {
            // Nonderogatory: eigenvectors come from the Krylov basis via
            // synthetic division, q_λ = m/(x−λ), v_λ = q_λ(A)u.
            let roots = poly_roots(fp, &mu);
            if roots.len() != d {
                return Err(Error::Internal(
                    "class-matrix minimal polynomial does not split — bad prime or wrong constants"
                        .into(),
                ));
            }
            let mut spaces = Vec::with_capacity(d);
            for &lambda in &roots {
                let mut q = vec![0u64; d];
                q[d - 1] = 1;
                for s in (1..d).rev() {
                    q[s - 1] = fp.add(mu[s], fp.mul(lambda, q[s]));
                }
                let mut v = vec![0u64; d];
                for (s, it) in iterates.iter().enumerate() {
                    let c = q[s];
                    if c != 0 {
                        for (vi, &x) in v.iter_mut().zip(it) {
                            if x != 0 {
                                *vi = fp.add(*vi, fp.mul(c, x));
                            }
                        }
                    }
                }
                debug_assert!(v.iter().any(|&x| x != 0));
                spaces.push(vec![v]);
            }
            return Ok(spaces);
        }

        lcm = poly_lcm(fp, &lcm, &mu);
        let deg = poly_deg(&lcm);
        let roots = poly_roots(fp, &lcm);
        if roots.len() != deg {
            return Err(Error::Internal(
                "class-matrix minimal polynomial does not split — bad prime or wrong constants"
                    .into(),
            ));
        }
        if deg == 1 {
            // Scalar so far; a later vector may still reveal more.
            if attempt < d {
                continue;
            }
            return Ok(vec![(0..d)
                .map(|i| {
                    let mut e = vec![0u64; d];
                    e[i] = 1;
                    e
                })
                .collect()]);
        }
        let mut spaces = Vec::with_capacity(roots.len());
        let mut total = 0usize;
        for &lambda in &roots {
            let mut shifted = a.clone();
            for i in 0..d {
                shifted.set(i, i, fp.sub(shifted.get(i, i), lambda));
            }
            let basis = nullspace(fp, &shifted);
            total += basis.len();
            spaces.push(basis);
        }
        if total == d {
            return Ok(spaces);
        }
        // Some eigenvalue is still missing from lcm; try the next vector.
    }
    Err(Error::Internal(
        "eigenspace splitting stalled — bad prime or wrong constants".into(),
    ))
}
