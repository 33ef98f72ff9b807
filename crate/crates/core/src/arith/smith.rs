//! Finite abelian subgroups of `(Z/m)^n`: Smith normal form decompositions and
//! canonical (Hermite) generator sets.

/// One cyclic summand: a generator in `(Z/m)^n` and its additive order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicFactor {
    pub generator: Vec<u64>,
    pub order: u64,
}

/// A subgroup of `(Z/m)^n` written as a direct sum of cyclic groups whose
/// orders satisfy `d1 | d2 | ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupDecomposition {
    pub modulus: u64,
    pub dim: usize,
    pub factors: Vec<CyclicFactor>,
}

impl SubgroupDecomposition {
    pub fn order(&self) -> u64 {
        self.factors.iter().map(|f| f.order).product()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn orders(&self) -> Vec<u64> {
        self.factors.iter().map(|f| f.order).collect()
    }

    /// Every element of the subgroup, each exactly once.
    pub fn elements(&self) -> Vec<Vec<u64>> {
        let m = self.modulus;
        let mut out = vec![vec![0u64; self.dim]];
        for f in &self.factors {
            let mut next = Vec::with_capacity(out.len() * f.order as usize);
            for base in &out {
                let mut cur = base.clone();
                for _ in 0..f.order {
                    next.push(cur.clone());
                    for (c, g) in cur.iter_mut().zip(&f.generator) {
                        *c = (*c + g) % m;
                    }
                }
            }
            out = next;
        }
        out
    }
}

struct Smith {
    diag: Vec<i128>,
    v: Vec<Vec<i128>>,
    v_inv: Vec<Vec<i128>>,
}

/// Smith form `U A V = D` of an `r x n` integer matrix; tracks `V` and `V^{-1}`
/// (row transforms are not needed by callers).
fn smith(mut a: Vec<Vec<i128>>, n: usize) -> Smith {
    let r = a.len();
    let mut v: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect();
    let mut v_inv = v.clone();

    let swap_cols = |a: &mut Vec<Vec<i128>>, v: &mut Vec<Vec<i128>>, v_inv: &mut Vec<Vec<i128>>, j: usize, k: usize| {
        if j == k {
            return;
        }
        for row in a.iter_mut() {
            row.swap(j, k);
        }
        for row in v.iter_mut() {
            row.swap(j, k);
        }
        v_inv.swap(j, k);
    };
    // col_j -= q * col_t
    let col_sub = |a: &mut Vec<Vec<i128>>, v: &mut Vec<Vec<i128>>, v_inv: &mut Vec<Vec<i128>>, j: usize, t: usize, q: i128| {
        for row in a.iter_mut() {
            row[j] -= q * row[t];
        }
        for row in v.iter_mut() {
            row[j] -= q * row[t];
        }
        for c in 0..n {
            let add = q * v_inv[j][c];
            v_inv[t][c] += add;
        }
    };

    let mut diag = Vec::new();
    for t in 0..r.min(n) {
        let pick = |a: &Vec<Vec<i128>>| {
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..n {
                    if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            best
        };
        let Some((pi, pj)) = pick(&a) else { break };
        a.swap(t, pi);
        swap_cols(&mut a, &mut v, &mut v_inv, t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..r {
                if a[i][t] != 0 {
                    let q = a[i][t].div_euclid(a[t][t]);
                    for c in 0..n {
                        let s = q * a[t][c];
                        a[i][c] -= s;
                    }
                    clean &= a[i][t] == 0;
                }
            }
            for j in t + 1..n {
                if a[t][j] != 0 {
                    let q = a[t][j].div_euclid(a[t][t]);
                    col_sub(&mut a, &mut v, &mut v_inv, j, t, q);
                    clean &= a[t][j] == 0;
                }
            }
            if !clean {
                let (pi, pj) = pick(&a).expect("nonzero entry exists");
                a.swap(t, pi);
                swap_cols(&mut a, &mut v, &mut v_inv, t, pj);
                continue;
            }
            // pivot must divide the remaining block
            let p = a[t][t];
            let bad = (t + 1..r).find(|&i| (t + 1..n).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    for c in 0..n {
                        let s = a[i][c];
                        a[t][c] += s;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag.resize(n, 0);
    Smith { diag, v, v_inv }
}

fn reduce(x: i128, m: u64) -> u64 {
    x.rem_euclid(m as i128) as u64
}

fn gcd(a: u64, b: u64) -> u64 {
    num_integer::Integer::gcd(&a, &b)
}

fn to_rows(rows: &[Vec<i64>], m: u64, dim: usize) -> Vec<Vec<i128>> {
    rows.iter()
        .map(|r| {
            assert_eq!(r.len(), dim, "row length must equal dimension");
            r.iter().map(|&x| i128::from(x).rem_euclid(m as i128)).collect()
        })
        .collect()
}

/// Cyclic decomposition of the subgroup of `(Z/m)^dim` generated by `rows`.
/// Generator orders are returned in ascending divisibility order.
pub fn smith_normal_form(rows: &[Vec<i64>], m: u64, dim: usize) -> SubgroupDecomposition {
    assert!(m >= 1);
    let mut a = to_rows(rows, m, dim);
    for i in 0..dim {
        let mut e = vec![0i128; dim];
        e[i] = m as i128;
        a.push(e);
    }
    let s = smith(a, dim);
    let mut factors: Vec<CyclicFactor> = (0..dim)
        .filter_map(|t| {
            let d = s.diag[t] as u64;
            debug_assert!(d > 0 && m % d == 0);
            let order = m / d;
            (order > 1).then(|| CyclicFactor {
                generator: s.v_inv[t].iter().map(|&x| reduce(x * d as i128, m)).collect(),
                order,
            })
        })
        .collect();
    factors.sort_by_key(|f| f.order);
    SubgroupDecomposition { modulus: m, dim, factors }
}

/// The subgroup `{g in (Z/m)^dim : row . g = 0 (mod m) for every row}`.
pub fn kernel_mod(rows: &[Vec<i64>], m: u64, dim: usize) -> SubgroupDecomposition {
    assert!(m >= 1);
    let a = to_rows(rows, m, dim);
    let s = smith(a, dim);
    let mut factors: Vec<CyclicFactor> = (0..dim)
        .filter_map(|t| {
            let order = gcd(s.diag[t] as u64, m);
            let step = (m / order) as i128;
            (order > 1).then(|| CyclicFactor {
                generator: (0..dim).map(|i| reduce(s.v[i][t] * step, m)).collect(),
                order,
            })
        })
        .collect();
    factors.sort_by_key(|f| f.order);
    SubgroupDecomposition { modulus: m, dim, factors }
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        if a < 0 { (-a, -1, 0) } else { (a, 1, 0) }
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// Canonical generating set of the subgroup spanned by `gens` in `(Z/m)^dim`.
///
/// Returns the nonzero rows of the lower-triangular Hermite form of the
/// lattice `span(gens) + m Z^dim`: row `k` has its positive pivot in column
/// `k`, zeros to the right, and entries to the left reduced modulo the pivot
/// of their column. Two generating sets of the same subgroup give the same output.
pub fn canonical_generators(gens: &[Vec<u64>], m: u64, dim: usize) -> Vec<CyclicFactor> {
    let mi = m as i128;
    // reversed columns turn the lower-triangular target into the usual upper form
    let mut a: Vec<Vec<i128>> = gens
        .iter()
        .map(|g| g.iter().rev().map(|&x| x as i128 % mi).collect())
        .collect();
    for col in 0..dim {
        // m e_col lies in the lattice; adding it keeps the pivot a divisor of m
        let mut e = vec![0i128; dim];
        e[col] = mi;
        a.push(e);
        let piv = col;
        if piv >= a.len() {
            break;
        }
        for i in piv + 1..a.len() {
            if a[i][col] == 0 {
                continue;
            }
            let (g, x, y) = ext_gcd(a[piv][col], a[i][col]);
            let (p, q) = (a[piv][col] / g, a[i][col] / g);
            for c in 0..dim {
                let (u, w) = (a[piv][c], a[i][c]);
                a[piv][c] = x * u + y * w;
                a[i][c] = -q * u + p * w;
            }
        }
        if a[piv][col] < 0 {
            for c in 0..dim {
                a[piv][c] = -a[piv][c];
            }
        }
        let p = a[piv][col];
        debug_assert!(p > 0 && mi % p == 0);
        // entries right of the current column may be shifted by m e_j, which
        // is re-added when column j is processed
        for row in a.iter_mut() {
            for x in row[col + 1..].iter_mut() {
                *x = x.rem_euclid(mi);
            }
        }
        for i in 0..piv {
            let q = a[i][col].div_euclid(p);
            for c in 0..dim {
                let s = q * a[piv][c];
                a[i][c] -= s;
            }
        }
    }
    let mut out: Vec<CyclicFactor> = a[..dim]
        .iter()
        .rev()
        .filter_map(|row| {
            let generator: Vec<u64> = row.iter().rev().map(|&x| reduce(x, m)).collect();
            let content = generator.iter().fold(m, |g, &x| gcd(g, x));
            let order = m / content;
            (order > 1).then_some(CyclicFactor { generator, order })
        })
        .collect();
    out.shrink_to_fit();
    out
}
