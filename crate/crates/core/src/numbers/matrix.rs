//! Dense matrices and echelonized subspaces over a finite field.
//!
//! Vectors are rows; a matrix acts on the right (`v * A`).

use super::field::{Fe, FiniteField};
use super::poly::{self, Poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Fe>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Fe>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend_from_slice(r);
        }
        Matrix { rows: rows.len(), cols, data }
    }

    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Fe>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, f: &FiniteField, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                let base = i * other.cols;
                for (j, &b) in orow.iter().enumerate() {
                    if b != 0 {
                        out.data[base + j] = f.add(out.data[base + j], f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, f: &FiniteField, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, f: &FiniteField, c: Fe) -> Matrix {
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// `self - c * I`.
    pub fn shift(&self, f: &FiniteField, c: Fe) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let v = m.get(i, i);
            m.set(i, i, f.sub(v, c));
        }
        m
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j);
            }
        }
        out
    }

    pub fn vec_mul(&self, f: &FiniteField, v: &[Fe]) -> Vec<Fe> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![0; self.cols];
        for (i, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in self.row(i).iter().enumerate() {
                if b != 0 {
                    out[j] = f.add(out[j], f.mul(a, b));
                }
            }
        }
        out
    }

    pub fn rank(&self, f: &FiniteField) -> usize {
        Echelon::from_vectors(f, self.cols, self.to_rows()).dim()
    }

    /// Basis of the row vectors `v` with `v * self = 0`.
    pub fn left_nullspace(&self, f: &FiniteField) -> Vec<Vec<Fe>> {
        self.transpose().nullspace(f)
    }

    /// Basis of the column vectors `x` with `self * x = 0`, returned as rows.
    pub fn nullspace(&self, f: &FiniteField) -> Vec<Vec<Fe>> {
        let ech = Echelon::from_vectors(f, self.cols, self.to_rows());
        let pivots = ech.pivots();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut x = vec![0; self.cols];
                x[fc] = 1;
                for (r, &pc) in ech.rows.iter().zip(pivots.iter()) {
                    x[pc] = f.neg(r[fc]);
                }
                x
            })
            .collect()
    }

    pub fn inverse(&self, f: &FiniteField) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut a: Vec<Vec<Fe>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| (i == j) as u64));
                r
            })
            .collect();
        for c in 0..n {
            let piv = (c..n).find(|&r| a[r][c] != 0)?;
            a.swap(c, piv);
            let inv = f.inv(a[c][c]);
            for x in a[c].iter_mut() {
                *x = f.mul(*x, inv);
            }
            for r in 0..n {
                if r != c && a[r][c] != 0 {
                    let t = a[r][c];
                    let src = a[c].clone();
                    for (x, &s) in a[r].iter_mut().zip(&src) {
                        *x = f.sub(*x, f.mul(t, s));
                    }
                }
            }
        }
        let rows: Vec<Vec<Fe>> = a.into_iter().map(|r| r[n..].to_vec()).collect();
        Some(Matrix::from_rows(&rows, n))
    }

    /// Characteristic polynomial via reduction to Hessenberg form.
    pub fn charpoly(&self, f: &FiniteField) -> Poly {
        assert!(self.is_square());
        let n = self.rows;
        let mut h: Vec<Vec<Fe>> = self.to_rows();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
                continue;
            };
            if i != m {
                h.swap(i, m);
                for row in h.iter_mut() {
                    row.swap(i, m);
                }
            }
            let pinv = f.inv(h[m][m - 1]);
            for j in m + 1..n {
                let u = f.mul(h[j][m - 1], pinv);
                if u == 0 {
                    continue;
                }
                let rm = h[m].clone();
                for (x, &y) in h[j].iter_mut().zip(&rm) {
                    *x = f.sub(*x, f.mul(u, y));
                }
                for row in h.iter_mut() {
                    let add = f.mul(u, row[j]);
                    row[m] = f.add(row[m], add);
                }
            }
        }
        let mut ps: Vec<Poly> = vec![vec![1]];
        for m in 1..=n {
            let mut pm = poly::mul(f, &[f.neg(h[m - 1][m - 1]), 1], &ps[m - 1]);
            let mut t = 1;
            for i in (1..m).rev() {
                t = f.mul(t, h[i][i - 1]);
                let c = f.mul(h[i - 1][m - 1], t);
                if c != 0 {
                    let term: Poly = ps[i - 1].iter().map(|&x| f.mul(x, c)).collect();
                    pm = poly::sub(f, &pm, &term);
                }
            }
            ps.push(pm);
        }
        ps.pop().unwrap()
    }
}

/// A subspace in reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub dim_ambient: usize,
    pub rows: Vec<Vec<Fe>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(dim_ambient: usize) -> Self {
        Echelon { dim_ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors(f: &FiniteField, n: usize, vs: Vec<Vec<Fe>>) -> Self {
        let mut e = Self::new(n);
        for v in vs {
            e.insert(f, v);
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn reduce(&self, f: &FiniteField, mut v: Vec<Fe>) -> Vec<Fe> {
        for (r, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c != 0 {
                for (x, &y) in v.iter_mut().zip(r) {
                    if y != 0 {
                        *x = f.sub(*x, f.mul(c, y));
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, f: &FiniteField, v: &[Fe]) -> bool {
        self.reduce(f, v.to_vec()).iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span; returns false when it was already inside.
    pub fn insert(&mut self, f: &FiniteField, v: Vec<Fe>) -> bool {
        let mut w = self.reduce(f, v);
        let Some(pc) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(w[pc]);
        for x in w.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for r in self.rows.iter_mut() {
            let c = r[pc];
            if c != 0 {
                for (x, &y) in r.iter_mut().zip(&w) {
                    if y != 0 {
                        *x = f.sub(*x, f.mul(c, y));
                    }
                }
            }
        }
        let pos = self.pivots.partition_point(|&p| p < pc);
        self.pivots.insert(pos, pc);
        self.rows.insert(pos, w);
        true
    }

    /// Coordinates of a vector lying in the span, relative to `rows`.
    pub fn coords(&self, v: &[Fe]) -> Vec<Fe> {
        self.pivots.iter().map(|&pc| v[pc]).collect()
    }
}

/// Smallest subspace containing `seeds` and closed under right multiplication by `gens`.
pub fn spin(f: &FiniteField, n: usize, seeds: &[Vec<Fe>], gens: &[Matrix]) -> Echelon {
    let mut e = Echelon::new(n);
    let mut queue: Vec<Vec<Fe>> = Vec::new();
    for s in seeds {
        if e.insert(f, s.clone()) {
            queue.push(s.clone());
        }
    }
    let mut i = 0;
    while i < queue.len() && e.dim() < n {
        let v = queue[i].clone();
        i += 1;
        for g in gens {
            let w = g.vec_mul(f, &v);
            if e.insert(f, w.clone()) {
                queue.push(w);
            }
        }
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_companion() {
        let f = FiniteField::new(7, 1).unwrap();
        // companion matrix of x^3 + 2x + 5
        let m = Matrix::from_rows(&[vec![0, 1, 0], vec![0, 0, 1], vec![2, 5, 0]], 3);
        assert_eq!(m.charpoly(&f), vec![5, 2, 0, 1]);
    }

    #[test]
    fn charpoly_matches_det() {
        let f = FiniteField::new(3, 2).unwrap();
        let rows: Vec<Vec<Fe>> = (0..4).map(|i| (0..4).map(|j| ((i * 5 + j * 3 + i * j) % 9) as u64).collect()).collect();
        let m = Matrix::from_rows(&rows, 4);
        let cp = m.charpoly(&f);
        for x in f.elements() {
            let singular = m.shift(&f, x).rank(&f) < 4;
            assert_eq!(singular, poly::eval(&f, &cp, x) == 0);
        }
    }

    #[test]
    fn inverse_and_nullspace() {
        let f = FiniteField::new(5, 1).unwrap();
        let m = Matrix::from_rows(&[vec![1, 2], vec![3, 4]], 2);
        let inv = m.inverse(&f).unwrap();
        assert_eq!(m.mul(&f, &inv), Matrix::identity(2));
        let s = Matrix::from_rows(&[vec![1, 2], vec![2, 4]], 2);
        let ns = s.nullspace(&f);
        assert_eq!(ns.len(), 1);
        let x = &ns[0];
        assert_eq!(f.add(x[0], f.mul(2, x[1])), 0);
        assert!(s.inverse(&f).is_none());
    }
}
