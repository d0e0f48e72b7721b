use super::matrix::Matrix;
use super::ring::EuclideanRing;

/// `U · A · V = D` with `D` diagonal, each diagonal entry dividing the next
/// and normalized. `U` and `V` are present only when requested.
#[derive(Clone, Debug)]
pub struct SmithForm<E> {
    pub diagonal: Vec<E>,
    pub d: Matrix<E>,
    pub u: Option<Matrix<E>>,
    pub v: Option<Matrix<E>>,
}

impl<E> SmithForm<E> {
    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

struct Work<'r, R: EuclideanRing> {
    ring: &'r R,
    a: Matrix<R::Elem>,
    u: Option<Matrix<R::Elem>>,
    v: Option<Matrix<R::Elem>>,
}

impl<R: EuclideanRing> Work<'_, R> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = &mut self.u {
            u.swap_rows(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = &mut self.v {
            v.swap_cols(i, j);
        }
    }

    /// row_i -= q row_j
    fn row_sub(&mut self, i: usize, j: usize, q: &R::Elem) {
        let ring = self.ring;
        let f = |m: &mut Matrix<R::Elem>| {
            for k in 0..m.cols() {
                let p = ring.mul(q, &m[(j, k)]);
                m[(i, k)] = ring.sub(&m[(i, k)], &p);
            }
        };
        f(&mut self.a);
        if let Some(u) = &mut self.u {
            f(u);
        }
    }

    /// col_i -= q col_j
    fn col_sub(&mut self, i: usize, j: usize, q: &R::Elem) {
        let ring = self.ring;
        let f = |m: &mut Matrix<R::Elem>| {
            for k in 0..m.rows() {
                let p = ring.mul(q, &m[(k, j)]);
                m[(k, i)] = ring.sub(&m[(k, i)], &p);
            }
        };
        f(&mut self.a);
        if let Some(v) = &mut self.v {
            f(v);
        }
    }

    fn scale_row(&mut self, i: usize, unit: &R::Elem) {
        let ring = self.ring;
        let f = |m: &mut Matrix<R::Elem>| {
            for k in 0..m.cols() {
                m[(i, k)] = ring.mul(unit, &m[(i, k)]);
            }
        };
        f(&mut self.a);
        if let Some(u) = &mut self.u {
            f(u);
        }
    }

    /// Nonzero entry of least size in the block `[t.., t..]`.
    fn smallest(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(R::Size, usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if self.ring.is_zero(x) {
                    continue;
                }
                let s = self.ring.size(x);
                if best.as_ref().is_none_or(|b| s < b.0) {
                    best = Some((s, i, j));
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    /// Clears row and column `t` outside the pivot. Returns false when a
    /// nonzero remainder was left and the pivot must be chosen again.
    fn clear_cross(&mut self, t: usize) -> bool {
        let ring = self.ring;
        let mut clean = true;
        for i in t + 1..self.a.rows() {
            if ring.is_zero(&self.a[(i, t)]) {
                continue;
            }
            let (q, r) = ring.div_rem(&self.a[(i, t)], &self.a[(t, t)]);
            self.row_sub(i, t, &q);
            if !ring.is_zero(&r) {
                clean = false;
            }
        }
        for j in t + 1..self.a.cols() {
            if ring.is_zero(&self.a[(t, j)]) {
                continue;
            }
            let (q, r) = ring.div_rem(&self.a[(t, j)], &self.a[(t, t)]);
            self.col_sub(j, t, &q);
            if !ring.is_zero(&r) {
                clean = false;
            }
        }
        clean
    }

    /// Moves the smallest nonzero entry of row/column `t` to the pivot.
    fn repivot_cross(&mut self, t: usize) {
        let ring = self.ring;
        let mut best: Option<(R::Size, bool, usize)> = None;
        for i in t + 1..self.a.rows() {
            let x = &self.a[(i, t)];
            if !ring.is_zero(x) {
                let s = ring.size(x);
                if best.as_ref().is_none_or(|b| s < b.0) {
                    best = Some((s, true, i));
                }
            }
        }
        for j in t + 1..self.a.cols() {
            let x = &self.a[(t, j)];
            if !ring.is_zero(x) {
                let s = ring.size(x);
                if best.as_ref().is_none_or(|b| s < b.0) {
                    best = Some((s, false, j));
                }
            }
        }
        match best {
            Some((_, true, i)) => self.swap_rows(t, i),
            Some((_, false, j)) => self.swap_cols(t, j),
            None => {}
        }
    }

    /// A row below `t` holding an entry the pivot does not divide.
    fn non_divisible_row(&self, t: usize) -> Option<usize> {
        let p = &self.a[(t, t)];
        for i in t + 1..self.a.rows() {
            for j in t + 1..self.a.cols() {
                if !self.ring.divides(p, &self.a[(i, j)]) {
                    return Some(i);
                }
            }
        }
        None
    }
}

/// Smith normal form. With `transforms`, also returns invertible `U`, `V`.
pub fn smith_normal_form<R: EuclideanRing>(
    ring: &R,
    a: &Matrix<R::Elem>,
    transforms: bool,
) -> SmithForm<R::Elem> {
    let (m, n) = (a.rows(), a.cols());
    let mut w = Work {
        ring,
        a: a.clone(),
        u: transforms.then(|| Matrix::identity(ring, m)),
        v: transforms.then(|| Matrix::identity(ring, n)),
    };
    let mut diagonal = Vec::new();
    for t in 0..m.min(n) {
        let Some((i, j)) = w.smallest(t) else { break };
        w.swap_rows(t, i);
        w.swap_cols(t, j);
        loop {
            if !w.clear_cross(t) {
                w.repivot_cross(t);
                continue;
            }
            match w.non_divisible_row(t) {
                Some(i) => {
                    // row_t += row_i brings the offending entry into row t.
                    let minus_one = ring.neg(&ring.one());
                    w.row_sub(t, i, &minus_one);
                }
                None => break,
            }
        }
        let unit = ring.normalizing_unit(&w.a[(t, t)]);
        w.scale_row(t, &unit);
        diagonal.push(w.a[(t, t)].clone());
    }
    SmithForm {
        diagonal,
        d: w.a,
        u: w.u,
        v: w.v,
    }
}
