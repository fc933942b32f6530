//! Exact linear algebra over [`Rational`].
//!
//! [`RMatrix`] is a row-compressed sparse matrix; most operators in this
//! crate are signed permutations, so products stay cheap at dimension 256.
//! Dense Gauss–Jordan elimination and a union-find based homogeneous solver
//! cover the solving side.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, Rational)>>,
}

impl fmt::Debug for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl RMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RMatrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Rational::one())
    }

    pub fn scalar(n: usize, s: Rational) -> Self {
        if s.is_zero() {
            return Self::zeros(n, n);
        }
        RMatrix { rows: n, cols: n, data: (0..n).map(|i| vec![(i, s.clone())]).collect() }
    }

    pub fn diag(d: &[Rational]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn diag_signs(d: &[i8]) -> Self {
        let v: Vec<Rational> = d.iter().map(|&s| Rational::from_int(s as i64)).collect();
        Self::diag(&v)
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged dense matrix");
            m.data[i] = row.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, x.clone())).collect();
        }
        m
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let dense: Vec<Vec<Rational>> =
            rows.iter().map(|r| r.iter().map(|&x| Rational::from_int(x)).collect()).collect();
        Self::from_dense(&dense)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, Rational)] {
        &self.data[i]
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        match self.data[i].binary_search_by_key(&j, |e| e.0) {
            Ok(k) => self.data[i][k].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        let row = &mut self.data[i];
        match row.binary_search_by_key(&j, |e| e.0) {
            Ok(k) => {
                if v.is_zero() {
                    row.remove(k);
                } else {
                    row[k].1 = v;
                }
            }
            Err(k) => {
                if !v.is_zero() {
                    row.insert(k, (j, v));
                }
            }
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &Rational) {
        if v.is_zero() {
            return;
        }
        let cur = self.get(i, j);
        self.set(i, j, cur + v);
    }

    /// Iterator over stored `(row, col, value)` triples.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.data.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.cols]; self.rows];
        for (i, j, v) in self.entries() {
            out[i][j] = v.clone();
        }
        out
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        let mut out = vec![vec![0.0; self.cols]; self.rows];
        for (i, j, v) in self.entries() {
            out[i][j] = v.to_f64();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows)
    }

    /// True when every row and column holds at most one nonzero entry.
    pub fn is_monomial(&self) -> bool {
        let mut seen = vec![false; self.cols];
        for row in &self.data {
            if row.len() > 1 {
                return false;
            }
            for (j, _) in row {
                if seen[*j] {
                    return false;
                }
                seen[*j] = true;
            }
        }
        true
    }

    /// Diagonal entries when the matrix is diagonal with entries ±1.
    pub fn as_sign_diagonal(&self) -> Option<Vec<i8>> {
        if !self.is_square() {
            return None;
        }
        let mut out = Vec::with_capacity(self.rows);
        for (i, row) in self.data.iter().enumerate() {
            match row.as_slice() {
                [(j, v)] if *j == i && v.abs().is_one() => out.push(v.signum() as i8),
                _ => return None,
            }
        }
        Some(out)
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn transpose(&self) -> Self {
        let mut data = vec![Vec::new(); self.cols];
        for (i, j, v) in self.entries() {
            data[j].push((i, v.clone()));
        }
        RMatrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        RMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|r| r.iter().map(|(j, v)| (*j, v * s)).collect()).collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut data = Vec::with_capacity(self.rows);
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for row in &self.data {
            acc.clear();
            for (k, a) in row {
                for (j, b) in &other.data[*k] {
                    let p = a * b;
                    acc.entry(*j).and_modify(|x| *x += &p).or_insert(p);
                }
            }
            data.push(std::mem::take(&mut acc).into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
        RMatrix { rows: self.rows, cols: other.cols, data }
    }

    fn combine(&self, other: &Self, sign: bool) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let mut data = Vec::with_capacity(self.rows);
        for (a, b) in self.data.iter().zip(&other.data) {
            let mut out = Vec::with_capacity(a.len() + b.len());
            let (mut p, mut q) = (0, 0);
            while p < a.len() || q < b.len() {
                let ja = a.get(p).map_or(usize::MAX, |e| e.0);
                let jb = b.get(q).map_or(usize::MAX, |e| e.0);
                if ja < jb {
                    out.push(a[p].clone());
                    p += 1;
                } else if jb < ja {
                    out.push((jb, if sign { b[q].1.clone() } else { -&b[q].1 }));
                    q += 1;
                } else {
                    let v = if sign { &a[p].1 + &b[q].1 } else { &a[p].1 - &b[q].1 };
                    if !v.is_zero() {
                        out.push((ja, v));
                    }
                    p += 1;
                    q += 1;
                }
            }
            data.push(out);
        }
        RMatrix { rows: self.rows, cols: self.cols, data }
    }

    /// Kronecker product; block (a,b) of the result is `self[a][b]·other`.
    pub fn kron(&self, other: &Self) -> Self {
        let mut m = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for (a, b, x) in self.entries() {
            for (i, j, y) in other.entries() {
                m.data[a * other.rows + i].push((b * other.cols + j, x * y));
            }
        }
        for row in &mut m.data {
            row.sort_by_key(|e| e.0);
        }
        m
    }

    /// Assemble from a grid of optional blocks of uniform size.
    pub fn from_blocks(grid: &[Vec<Option<RMatrix>>], br: usize, bc: usize) -> Self {
        let rows = grid.len() * br;
        let cols = grid.first().map_or(0, Vec::len) * bc;
        let mut m = Self::zeros(rows, cols);
        for (a, grow) in grid.iter().enumerate() {
            for (b, blk) in grow.iter().enumerate() {
                if let Some(blk) = blk {
                    assert_eq!((blk.rows, blk.cols), (br, bc), "block shape mismatch");
                    for (i, j, v) in blk.entries() {
                        m.data[a * br + i].push((b * bc + j, v.clone()));
                    }
                }
            }
        }
        for row in &mut m.data {
            row.sort_by_key(|e| e.0);
        }
        m
    }

    /// Block (a,b) of size `br × bc`.
    pub fn block(&self, a: usize, b: usize, br: usize, bc: usize) -> Self {
        let mut m = Self::zeros(br, bc);
        for i in 0..br {
            m.data[i] = self.data[a * br + i]
                .iter()
                .filter(|(j, _)| *j >= b * bc && *j < (b + 1) * bc)
                .map(|(j, v)| (j - b * bc, v.clone()))
                .collect();
        }
        m
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.cols);
        self.data.iter().map(|r| r.iter().map(|(j, v)| v * &x[*j]).sum()).collect()
    }

    /// `self·other + other·self`.
    pub fn anticommutator(&self, other: &Self) -> Self {
        &self.matmul(other) + &other.matmul(self)
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.matmul(other) == other.matmul(self)
    }

    /// Column `j` as a dense vector.
    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// Outer product `x yᵀ`.
    pub fn outer(x: &[Rational], y: &[Rational]) -> Self {
        let mut m = Self::zeros(x.len(), y.len());
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            m.data[i] = y.iter().enumerate().filter(|(_, b)| !b.is_zero()).map(|(j, b)| (j, a * b)).collect();
        }
        m
    }

    /// Flatten row-major into a dense vector.
    pub fn flatten(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.rows * self.cols];
        for (i, j, v) in self.entries() {
            out[i * self.cols + j] = v.clone();
        }
        out
    }

    pub fn from_flat(rows: usize, cols: usize, flat: &[(usize, Rational)]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (k, v) in flat {
            if !v.is_zero() {
                m.data[k / cols].push((k % cols, v.clone()));
            }
        }
        for row in &mut m.data {
            row.sort_by_key(|e| e.0);
        }
        m
    }

    /// Exact inverse by dense elimination; `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug: Vec<Vec<Rational>> = self
            .to_dense()
            .into_iter()
            .enumerate()
            .map(|(i, mut r)| {
                r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
                r
            })
            .collect();
        let piv = rref(&mut aug, n);
        if piv.len() < n {
            return None;
        }
        let inv: Vec<Vec<Rational>> = aug.into_iter().map(|r| r[n..].to_vec()).collect();
        Some(Self::from_dense(&inv))
    }
}

impl Add for &RMatrix {
    type Output = RMatrix;
    fn add(self, rhs: &RMatrix) -> RMatrix {
        self.combine(rhs, true)
    }
}

impl Sub for &RMatrix {
    type Output = RMatrix;
    fn sub(self, rhs: &RMatrix) -> RMatrix {
        self.combine(rhs, false)
    }
}

impl Mul for &RMatrix {
    type Output = RMatrix;
    fn mul(self, rhs: &RMatrix) -> RMatrix {
        self.matmul(rhs)
    }
}

impl Neg for &RMatrix {
    type Output = RMatrix;
    fn neg(self) -> RMatrix {
        self.scale(&Rational::from_int(-1))
    }
}

/// In-place Gauss–Jordan on the first `ncols` columns; returns pivot columns.
pub fn rref(m: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        if !inv.is_one() {
            for x in m[r].iter_mut() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Basis of `{x : A x = 0}` for a dense `A` with `ncols` columns.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[r][f];
            }
            v
        })
        .collect()
}

/// Solution set of `A x = b`: a particular solution and the nullspace dimension.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<(Vec<Rational>, usize)> {
    let ncols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut r = r.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[r][ncols].clone();
    }
    Some((x, ncols - pivots.len()))
}

/// Determinant by elimination.
pub fn det(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    let mut m = rows.to_vec();
    let mut d = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d = &d * &m[c][c];
        let inv = m[c][c].recip();
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            let pr = m[c].clone();
            for (x, p) in m[i].iter_mut().zip(&pr) {
                *x -= &(&f * p);
            }
        }
    }
    d
}

/// Counts of positive, negative and zero squares in a symmetric form.
pub fn inertia(sym: &[Vec<Rational>]) -> (usize, usize, usize) {
    let mut m = sym.to_vec();
    let mut n = m.len();
    let (mut pos, mut neg) = (0, 0);
    while n > 0 {
        let p = match (0..n).find(|&i| !m[i][i].is_zero()) {
            Some(p) => p,
            None => {
                let Some((i, j)) = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| !m[i][j].is_zero())
                else {
                    break;
                };
                // replace e_i by e_i + e_j, which gives a nonzero diagonal entry
                let row_j = m[j].clone();
                for (x, v) in m[i].iter_mut().zip(&row_j) {
                    *x += v;
                }
                for row in m.iter_mut() {
                    let v = row[j].clone();
                    row[i] += &v;
                }
                i
            }
        };
        m.swap(p, n - 1);
        for row in m.iter_mut() {
            row.swap(p, n - 1);
        }
        let last = n - 1;
        let d = m[last][last].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        let pivot_row = m[last].clone();
        for row in m[..last].iter_mut() {
            if row[last].is_zero() {
                continue;
            }
            let f = &row[last] / &d;
            for (x, p) in row[..last].iter_mut().zip(&pivot_row) {
                *x -= &(&f * p);
            }
        }
        m.truncate(last);
        for row in m.iter_mut() {
            row.truncate(last);
        }
        n = last;
    }
    (pos, neg, sym.len() - pos - neg)
}

struct WeightedUnionFind {
    parent: Vec<usize>,
    weight: Vec<Rational>,
    zero: Vec<bool>,
}

impl WeightedUnionFind {
    fn new(n: usize) -> Self {
        WeightedUnionFind { parent: (0..n).collect(), weight: vec![Rational::one(); n], zero: vec![false; n] }
    }

    // Returns (root, w) with x_v = w·x_root.
    fn find(&mut self, v: usize) -> (usize, Rational) {
        let mut path = Vec::new();
        let mut u = v;
        while self.parent[u] != u {
            path.push(u);
            u = self.parent[u];
        }
        let root = u;
        for &p in path.iter().rev() {
            let q = self.parent[p];
            if q != root {
                self.weight[p] = &self.weight[p] * &self.weight[q];
                self.parent[p] = root;
            }
        }
        let w = if v == root { Rational::one() } else { self.weight[v].clone() };
        (root, w)
    }

    // Express an equation in live roots, merging repeated roots.
    fn reduce(&mut self, eq: &[(usize, Rational)]) -> Vec<(usize, Rational)> {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (v, c) in eq {
            let (r, w) = self.find(*v);
            if self.zero[r] {
                continue;
            }
            let t = c * &w;
            acc.entry(r).and_modify(|x| *x += &t).or_insert(t);
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    // Apply a reduced equation with at most two terms.
    fn absorb(&mut self, red: &[(usize, Rational)]) {
        match red {
            [] => {}
            [(r, _)] => self.zero[*r] = true,
            [(r1, c1), (r2, c2)] => {
                self.parent[*r1] = *r2;
                self.weight[*r1] = -(c2 / c1);
            }
            _ => unreachable!(),
        }
    }
}

/// Basis of the solution space of a sparse homogeneous system.
///
/// Equations with one or two terms are absorbed by a weighted union-find;
/// what remains is solved by dense elimination over the surviving roots.
pub fn solve_homogeneous<I>(nvars: usize, eqs: I) -> Vec<Vec<(usize, Rational)>>
where
    I: IntoIterator<Item = Vec<(usize, Rational)>>,
{
    let mut uf = WeightedUnionFind::new(nvars);
    let mut pending: Vec<Vec<(usize, Rational)>> = Vec::new();
    for eq in eqs {
        let red = uf.reduce(&eq);
        if red.len() <= 2 {
            uf.absorb(&red);
        } else {
            pending.push(red);
        }
    }
    loop {
        let mut changed = false;
        let mut rest = Vec::new();
        for eq in std::mem::take(&mut pending) {
            let red = uf.reduce(&eq);
            if red.len() <= 2 {
                uf.absorb(&red);
                changed = true;
            } else {
                rest.push(red);
            }
        }
        pending = rest;
        if !changed {
            break;
        }
    }

    let mut members: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
    for v in 0..nvars {
        let (r, w) = uf.find(v);
        if !uf.zero[r] {
            members.entry(r).or_default().push((v, w));
        }
    }

    let mut dense_roots: Vec<usize> = pending.iter().flatten().map(|(r, _)| *r).collect();
    dense_roots.sort_unstable();
    dense_roots.dedup();
    let col_of: BTreeMap<usize, usize> = dense_roots.iter().enumerate().map(|(i, r)| (*r, i)).collect();

    let expand = |coeffs: &[(usize, Rational)]| -> Vec<(usize, Rational)> {
        let mut out: Vec<(usize, Rational)> = Vec::new();
        for (r, c) in coeffs {
            for (v, w) in &members[r] {
                out.push((*v, c * w));
            }
        }
        out.sort_by_key(|e| e.0);
        out
    };

    let mut basis = Vec::new();
    for r in members.keys() {
        if !col_of.contains_key(r) {
            basis.push(expand(&[(*r, Rational::one())]));
        }
    }
    if !dense_roots.is_empty() {
        let rows: Vec<Vec<Rational>> = pending
            .iter()
            .map(|eq| {
                let mut row = vec![Rational::zero(); dense_roots.len()];
                for (r, c) in eq {
                    row[col_of[r]] = c.clone();
                }
                row
            })
            .collect();
        for v in nullspace(&rows, dense_roots.len()) {
            let coeffs: Vec<(usize, Rational)> =
                v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (dense_roots[i], c)).collect();
            basis.push(expand(&coeffs));
        }
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn sparse_product_and_kron() {
        let a = RMatrix::from_ints(&[&[0, 1], &[1, 0]]);
        let b = RMatrix::from_ints(&[&[1, 0], &[0, -1]]);
        assert_eq!(&(&a * &b) + &(&b * &a), RMatrix::zeros(2, 2));
        let k = a.kron(&b);
        assert_eq!(k.get(0, 2), rat(1, 1));
        assert_eq!(k.get(1, 3), rat(-1, 1));
        assert_eq!(k.get(2, 0), rat(1, 1));
        assert!(k.is_monomial());
        assert_eq!(k.block(0, 1, 2, 2), b);
    }

    #[test]
    fn inverse_and_det() {
        let a = RMatrix::from_ints(&[&[2, 1], &[7, 4]]);
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_identity());
        assert_eq!(det(&a.to_dense()), rat(1, 1));
        assert!(RMatrix::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn nullspace_dense() {
        let rows = vec![vec![rat(1, 1), rat(2, 1), rat(3, 1)]];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let s: Rational = rows[0].iter().zip(&v).map(|(a, b)| a * b).sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn homogeneous_mixed_system() {
        // x0 = 2 x1, x2 = -x3, x0 + x2 + x4 = 0, x5 = 0
        let r = |n| Rational::from_int(n);
        let eqs = vec![
            vec![(0, r(1)), (1, r(-2))],
            vec![(2, r(1)), (3, r(1))],
            vec![(0, r(1)), (2, r(1)), (4, r(1))],
            vec![(5, r(3))],
        ];
        let basis = solve_homogeneous(7, eqs.iter().cloned());
        assert_eq!(basis.len(), 3);
        for v in &basis {
            let mut x = vec![Rational::zero(); 7];
            for (i, c) in v {
                x[*i] = c.clone();
            }
            for eq in &eqs {
                let s: Rational = eq.iter().map(|(i, c)| c * &x[*i]).sum();
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn inconsistent_cycle_forces_zero() {
        let r = |n| Rational::from_int(n);
        let eqs = vec![vec![(0, r(1)), (1, r(-1))], vec![(0, r(1)), (1, r(1))]];
        assert!(solve_homogeneous(2, eqs).is_empty());
    }
}
