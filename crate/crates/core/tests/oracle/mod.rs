//! Brute-force dense reference implementation.
//!
//! Shares nothing with the library beyond `num`: structure constants are
//! written out from the presentations, operators are assembled tuple by
//! tuple as dense rational matrices, and ranks come from plain Gaussian
//! elimination.

#![allow(dead_code)]

use num::{BigRational, One, Zero};

pub type Q = BigRational;
/// Row-major dense matrix.
pub type Mat = Vec<Vec<Q>>;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

pub struct Hopf {
    pub d: usize,
    /// `mult[i][j][k]`: coefficient of `e_k` in `e_i e_j`
    pub mult: Vec<Vec<Vec<Q>>>,
    /// `comult[i][j][k]`: coefficient of `e_j ⊗ e_k` in `Δ e_i`
    pub comult: Vec<Vec<Vec<Q>>>,
    pub eps: Vec<Q>,
    /// `anti[i][j]`: coefficient of `e_j` in `S e_i`
    pub anti: Vec<Vec<Q>>,
    pub delta: Vec<Q>,
}

fn cube(d: usize) -> Vec<Vec<Vec<Q>>> {
    vec![vec![vec![Q::zero(); d]; d]; d]
}

impl Hopf {
    pub fn trivial() -> Self {
        Hopf::cyclic(1)
    }

    /// `ℚ[ℤ/n]` on `1, g, …, g^{n−1}` with `δ = ε`.
    pub fn cyclic(n: usize) -> Self {
        let mut mult = cube(n);
        let mut comult = cube(n);
        let mut anti = vec![vec![Q::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                mult[i][j][(i + j) % n] = q(1);
            }
            comult[i][i][i] = q(1);
            anti[i][(n - i) % n] = q(1);
        }
        Hopf { d: n, mult, comult, eps: vec![q(1); n], anti, delta: vec![q(1); n] }
    }

    /// Sweedler's algebra on `1, g, x, gx` with `δ(g) = −1`, `δ(x) = 0`.
    pub fn sweedler() -> Self {
        // gᵃxᵇ ↦ a + 2b
        let mut mult = cube(4);
        for p in 0..4 {
            for r in 0..4 {
                let (a, b, c, d) = (p % 2, p / 2, r % 2, r / 2);
                if b + d < 2 {
                    // xg = −gx
                    let s = if b * c == 1 { -1 } else { 1 };
                    mult[p][r][(a + c) % 2 + 2 * (b + d)] = q(s);
                }
            }
        }
        let mut comult = cube(4);
        comult[0][0][0] = q(1);
        comult[1][1][1] = q(1);
        // Δx = x⊗1 + g⊗x
        comult[2][2][0] = q(1);
        comult[2][1][2] = q(1);
        // Δ(gx) = gx⊗g + 1⊗gx
        comult[3][3][1] = q(1);
        comult[3][0][3] = q(1);
        let mut anti = vec![vec![Q::zero(); 4]; 4];
        anti[0][0] = q(1);
        anti[1][1] = q(1);
        anti[2][3] = q(-1);
        anti[3][2] = q(1);
        Hopf {
            d: 4,
            mult,
            comult,
            eps: vec![q(1), q(1), q(0), q(0)],
            anti,
            delta: vec![q(1), q(-1), q(0), q(0)],
        }
    }

    pub fn with_counit_character(mut self) -> Self {
        self.delta = self.eps.clone();
        self
    }

    fn pow(&self, n: usize) -> usize {
        self.d.pow(n as u32)
    }

    fn digits(&self, mut idx: usize, n: usize) -> Vec<usize> {
        let mut t = vec![0; n];
        for s in (0..n).rev() {
            t[s] = idx % self.d;
            idx /= self.d;
        }
        t
    }

    fn index(&self, t: &[usize]) -> usize {
        t.iter().fold(0, |acc, &x| acc * self.d + x)
    }

    /// Operator `Cˢ → Cᵗ` from its action on basis tuples.
    fn assemble(&self, src: usize, dst: usize, f: impl Fn(&[usize]) -> Vec<(Vec<usize>, Q)>) -> Mat {
        let mut m = vec![vec![Q::zero(); self.pow(src)]; self.pow(dst)];
        for c in 0..self.pow(src) {
            for (t, v) in f(&self.digits(c, src)) {
                let r = self.index(&t);
                m[r][c] += v;
            }
        }
        m
    }

    /// `δᵢ : Cⁿ⁻¹ → Cⁿ`
    pub fn face(&self, i: usize, n: usize) -> Mat {
        self.assemble(n - 1, n, |t| {
            if i == 0 {
                let mut u = vec![0];
                u.extend_from_slice(t);
                vec![(u, q(1))]
            } else if i == n {
                let mut u = t.to_vec();
                u.push(0);
                vec![(u, q(1))]
            } else {
                let mut out = Vec::new();
                for j in 0..self.d {
                    for k in 0..self.d {
                        let c = &self.comult[t[i - 1]][j][k];
                        if !c.is_zero() {
                            let mut u = t[..i - 1].to_vec();
                            u.extend([j, k]);
                            u.extend_from_slice(&t[i..]);
                            out.push((u, c.clone()));
                        }
                    }
                }
                out
            }
        })
    }

    /// `σᵢ : Cⁿ⁺¹ → Cⁿ`
    pub fn degeneracy(&self, i: usize, n: usize) -> Mat {
        self.assemble(n + 1, n, |t| {
            let mut u = t.to_vec();
            let x = u.remove(i);
            vec![(u, self.eps[x].clone())]
        })
    }

    /// `S̃(e_i) = Σ δ(h₍₁₎) S(h₍₂₎)` as a coefficient vector.
    fn twisted_antipode(&self, i: usize) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.d];
        for j in 0..self.d {
            for k in 0..self.d {
                let c = &self.comult[i][j][k] * &self.delta[j];
                if c.is_zero() {
                    continue;
                }
                for (l, s) in self.anti[k].iter().enumerate() {
                    out[l] += &c * s;
                }
            }
        }
        out
    }

    /// `τₙ : Cⁿ → Cⁿ`
    pub fn cyclic_op(&self, n: usize) -> Mat {
        if n == 0 {
            return vec![vec![q(1)]];
        }
        self.assemble(n, n, |t| {
            // Δ^{n−1} S̃(h¹), splitting the last slot each time
            let mut spread: Vec<(Vec<usize>, Q)> = self
                .twisted_antipode(t[0])
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (vec![i], c))
                .collect();
            for _ in 1..n {
                let mut next = Vec::new();
                for (u, c) in &spread {
                    let last = *u.last().unwrap();
                    for j in 0..self.d {
                        for k in 0..self.d {
                            let v = &self.comult[last][j][k];
                            if !v.is_zero() {
                                let mut w = u[..u.len() - 1].to_vec();
                                w.extend([j, k]);
                                next.push((w, c * v));
                            }
                        }
                    }
                }
                spread = next;
            }
            // slotwise product with h²⊗…⊗hⁿ⊗1
            let mut rest = t[1..].to_vec();
            rest.push(0);
            let mut out = Vec::new();
            for (u, c) in spread {
                let mut partial: Vec<(Vec<usize>, Q)> = vec![(Vec::new(), c)];
                for (a, b) in u.iter().zip(&rest) {
                    let mut next = Vec::new();
                    for (w, c) in &partial {
                        for (k, v) in self.mult[*a][*b].iter().enumerate() {
                            if !v.is_zero() {
                                let mut w = w.clone();
                                w.push(k);
                                next.push((w, c * v));
                            }
                        }
                    }
                    partial = next;
                }
                out.extend(partial);
            }
            out
        })
    }

    pub fn dim(&self, n: usize) -> usize {
        self.pow(n)
    }
}

// ---- dense matrix helpers ----

pub fn zeros(r: usize, c: usize) -> Mat {
    vec![vec![Q::zero(); c]; r]
}

pub fn identity(n: usize) -> Mat {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = q(1);
    }
    m
}

pub fn ncols(m: &Mat, fallback: usize) -> usize {
    m.first().map_or(fallback, |r| r.len())
}

pub fn add(a: &Mat, b: &Mat, s: &Q) -> Mat {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(u, v)| u + s * v).collect())
        .collect()
}

pub fn mul(a: &Mat, b: &Mat, inner: usize, cols: usize) -> Mat {
    let mut out = zeros(a.len(), cols);
    for (i, row) in a.iter().enumerate() {
        for k in 0..inner {
            if row[k].is_zero() {
                continue;
            }
            for j in 0..cols {
                if !b[k][j].is_zero() {
                    out[i][j] += &row[k] * &b[k][j];
                }
            }
        }
    }
    out
}

fn transpose(m: &Mat, cols: usize) -> Mat {
    (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Rank by row reduction; reduces along the shorter side.
pub fn rank(m: &Mat, cols: usize) -> usize {
    let mut rows = if cols < m.len() { transpose(m, cols) } else { m.clone() };
    let width = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = Q::one() / &rows[r][c];
        let pivot: Vec<Q> = rows[r].iter().map(|x| x * &inv).collect();
        let support: Vec<usize> = (c..width).filter(|&j| !pivot[j].is_zero()).collect();
        for row in rows.iter_mut().skip(r + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &support {
                row[j] -= &f * &pivot[j];
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    r
}

/// Null space basis as the columns of a `cols × k` matrix.
pub fn kernel(m: &Mat, cols: usize) -> Mat {
    let mut rows = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = Q::one() / &rows[r][c];
        rows[r] = rows[r].iter().map(|x| x * &inv).collect();
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for j in c..cols {
                    if !pivot[j].is_zero() {
                        row[j] -= &f * &pivot[j];
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut k = zeros(cols, free.len());
    for (col, &f) in free.iter().enumerate() {
        k[f][col] = q(1);
        for (i, &p) in pivots.iter().enumerate() {
            k[p][col] = -rows[i][f].clone();
        }
    }
    k
}

// ---- cohomology ----

fn sign(i: usize) -> Q {
    if i.is_multiple_of(2) {
        q(1)
    } else {
        q(-1)
    }
}

pub fn b(h: &Hopf, n: usize) -> Mat {
    let mut acc = zeros(h.dim(n), h.dim(n - 1));
    for i in 0..=n {
        acc = add(&acc, &h.face(i, n), &sign(i));
    }
    acc
}

pub fn lambda(h: &Hopf, n: usize) -> Mat {
    let t = h.cyclic_op(n);
    t.iter().map(|r| r.iter().map(|x| x * sign(n)).collect()).collect()
}

/// `Bₙ : Cⁿ⁺¹ → Cⁿ`
pub fn big_b(h: &Hopf, n: usize) -> Mat {
    let (d0, d1) = (h.dim(n), h.dim(n + 1));
    let l0 = lambda(h, n);
    let mut norm = identity(d0);
    let mut power = identity(d0);
    for _ in 0..n {
        power = mul(&l0, &power, d0, d0);
        norm = add(&norm, &power, &q(1));
    }
    let s = mul(&h.degeneracy(n, n), &h.cyclic_op(n + 1), d1, d1);
    let one_minus = add(&identity(d1), &lambda(h, n + 1), &q(-1));
    let ns = mul(&norm, &s, d0, d1);
    mul(&ns, &one_minus, d1, d1)
}

pub struct Table {
    pub dim: Vec<usize>,
    pub hh: Vec<usize>,
    pub hc_lambda: Vec<usize>,
    pub hc_bb: Vec<usize>,
}

/// All four columns for `n ≤ top`; the `(b,B)` complex is cut above
/// degree `top + 1`, which leaves degrees `≤ top` exact.
pub fn table(h: &Hopf, top: usize) -> Table {
    let bs: Vec<Mat> = (0..=top + 1).map(|n| if n == 0 { Mat::new() } else { b(h, n) }).collect();
    let rb: Vec<usize> = (0..=top + 1).map(|n| if n == 0 { 0 } else { rank(&bs[n], h.dim(n - 1)) }).collect();
    let dim: Vec<usize> = (0..=top).map(|n| h.dim(n)).collect();
    let hh = (0..=top).map(|n| dim[n] - rb[n + 1] - rb[n]).collect();

    let ks: Vec<Mat> = (0..=top)
        .map(|n| kernel(&add(&identity(h.dim(n)), &lambda(h, n), &q(-1)), h.dim(n)))
        .collect();
    let rl: Vec<usize> = (0..=top)
        .map(|n| {
            let k = ncols(&ks[n], 0);
            rank(&mul(&bs[n + 1], &ks[n], h.dim(n), k), k)
        })
        .collect();
    let hc_lambda = (0..=top)
        .map(|n| ncols(&ks[n], 0) - rl[n] - if n == 0 { 0 } else { rl[n - 1] })
        .collect();

    // Totⁿ = Cⁿ ⊕ Cⁿ⁻² ⊕ …, differential b + B
    let cut = top + 1;
    let bigs: Vec<Mat> = (0..cut).map(|n| big_b(h, n)).collect();
    let layout = |n: usize| -> Vec<(usize, usize)> {
        let mut at = 0;
        (0..=n / 2)
            .map(|p| {
                let deg = n - 2 * p;
                let here = at;
                at += h.dim(deg);
                (deg, here)
            })
            .collect()
    };
    let tot = |n: usize| -> usize { (0..=n / 2).map(|p| h.dim(n - 2 * p)).sum() };
    let rd: Vec<usize> = (0..=top)
        .map(|n| {
            let (src, dst) = (layout(n), layout(n + 1));
            let mut d = zeros(tot(n + 1), tot(n));
            for &(deg, at) in &src {
                let place = |d: &mut Mat, m: &Mat, to_deg: usize| {
                    let to = dst.iter().find(|(x, _)| *x == to_deg).unwrap().1;
                    for (r, row) in m.iter().enumerate() {
                        for (c, v) in row.iter().enumerate() {
                            d[to + r][at + c] += v;
                        }
                    }
                };
                if deg < cut {
                    place(&mut d, &bs[deg + 1], deg + 1);
                }
                if deg >= 1 {
                    place(&mut d, &bigs[deg - 1], deg - 1);
                }
            }
            rank(&d, tot(n))
        })
        .collect();
    let hc_bb = (0..=top).map(|n| tot(n) - rd[n] - if n == 0 { 0 } else { rd[n - 1] }).collect();
    Table { dim, hh, hc_lambda, hc_bb }
}

pub fn render(name: &str, t: &Table) -> String {
    let mut out = format!("# {name}\n");
    for n in 0..t.dim.len() {
        out.push_str(&format!(
            "n={n} dim={} HH={} HC_lambda={} HC_bB={}\n",
            t.dim[n], t.hh[n], t.hc_lambda[n], t.hc_bb[n]
        ));
    }
    out
}

pub fn render_matrix(m: &Mat) -> String {
    m.iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("; ")
}
