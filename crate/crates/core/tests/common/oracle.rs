//! Brute-force reference implementations that share no code paths with the
//! library beyond `Poly` arithmetic.

use doubleschur::polyring::Poly;

/// `h_k` of `items` by enumerating weakly increasing index sequences.
pub fn h(k: usize, items: &[Poly]) -> Poly {
    fn go(k: usize, start: usize, items: &[Poly], acc: &Poly, out: &mut Poly) {
        if k == 0 {
            *out += acc;
            return;
        }
        for i in start..items.len() {
            go(k - 1, i, items, &(acc * &items[i]), out);
        }
    }
    let mut out = Poly::zero();
    go(k, 0, items, &Poly::one(), &mut out);
    out
}

/// `e_k` of `items` by enumerating strictly increasing index sequences.
pub fn e(k: usize, items: &[Poly]) -> Poly {
    fn go(k: usize, start: usize, items: &[Poly], acc: &Poly, out: &mut Poly) {
        if k == 0 {
            *out += acc;
            return;
        }
        for i in start..items.len() {
            go(k - 1, i + 1, items, &(acc * &items[i]), out);
        }
    }
    let mut out = Poly::zero();
    go(k, 0, items, &Poly::one(), &mut out);
    out
}

pub fn xs(n: usize) -> Vec<Poly> {
    (1..=n as i64).map(Poly::x).collect()
}

pub fn ys(n: usize) -> Vec<Poly> {
    (1..=n as i64).map(Poly::y).collect()
}

/// Supersymmetric `h_k(x_n/y_n) = Σ_i h_i(x) e_{k-i}(y)`.
pub fn super_h(k: usize, n: usize) -> Poly {
    (0..=k).map(|i| &h(i, &xs(n)) * &e(k - i, &ys(n))).sum()
}

/// Supersymmetric `e_k(x_n/y_n) = Σ_i e_i(x) h_{k-i}(y)`.
pub fn super_e(k: usize, n: usize) -> Poly {
    (0..=k).map(|i| &e(i, &xs(n)) * &h(k - i, &ys(n))).sum()
}

/// `p_k(x_n/y_n) = Σ x_i^k - Σ (-y_i)^k`.
pub fn super_p(k: u32, n: usize) -> Poly {
    let mut out = Poly::zero();
    for i in 1..=n as i64 {
        out += &Poly::x(i).pow(k);
        out -= &(-Poly::y(i)).pow(k);
    }
    out
}

fn cells(parts: &[u32]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (r, &len) in parts.iter().enumerate() {
        for c in 0..len as usize {
            out.push((r, c));
        }
    }
    out
}

/// Classical Schur polynomial `s_λ(x_1, …, x_n)` as a sum over semistandard
/// tableaux with entries in `1..=n`.
pub fn ssyt_schur(parts: &[u32], n: usize) -> Poly {
    let cells = cells(parts);
    let mut filling = vec![vec![0usize; parts.first().copied().unwrap_or(0) as usize]; parts.len()];
    let mut out = Poly::zero();
    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        filling: &mut Vec<Vec<usize>>,
        n: usize,
        out: &mut Poly,
    ) {
        if idx == cells.len() {
            let mut m = Poly::one();
            for &(r, c) in cells {
                m = &m * &Poly::x(filling[r][c] as i64);
            }
            *out += &m;
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { filling[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { filling[r - 1][c] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=n {
            filling[r][c] = v;
            go(idx + 1, cells, filling, n, out);
        }
    }
    go(0, &cells, &mut filling, n, &mut out);
    out
}

/// Determinant by the Leibniz permutation sum.
pub fn leibniz_det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = Poly::zero();
    fn go(k: usize, perm: &mut Vec<usize>, m: &[Vec<Poly>], out: &mut Poly) {
        let n = perm.len();
        if k == n {
            let mut inv = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if perm[i] > perm[j] {
                        inv += 1;
                    }
                }
            }
            let mut t = Poly::one();
            for (i, &p) in perm.iter().enumerate() {
                t = &t * &m[i][p];
            }
            if inv % 2 == 1 {
                t = -t;
            }
            *out += &t;
            return;
        }
        for i in k..n {
            perm.swap(k, i);
            go(k + 1, perm, m, out);
            perm.swap(k, i);
        }
    }
    go(0, &mut perm, m, &mut out);
    out
}

/// All `μ ⊂ λ` with `λ/μ` a ribbon of size `k`, with the ribbon height
/// (number of rows minus one). Shapes are plain part vectors.
pub fn ribbons(lambda: &[u32], k: u32) -> Vec<(Vec<u32>, u32)> {
    let size: u32 = lambda.iter().sum();
    if k > size {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut mu = vec![0u32; lambda.len()];
    fn go(i: usize, lambda: &[u32], mu: &mut Vec<u32>, k: u32, out: &mut Vec<(Vec<u32>, u32)>) {
        if i == lambda.len() {
            let removed: u32 = lambda.iter().zip(mu.iter()).map(|(a, b)| a - b).sum();
            if removed != k {
                return;
            }
            if let Some(hgt) = ribbon_height(lambda, mu) {
                let trimmed: Vec<u32> = mu.iter().copied().filter(|&p| p > 0).collect();
                out.push((trimmed, hgt));
            }
            return;
        }
        let cap = if i == 0 {
            lambda[0]
        } else {
            lambda[i].min(mu[i - 1])
        };
        for v in 0..=cap {
            mu[i] = v;
            go(i + 1, lambda, mu, k, out);
        }
    }
    go(0, lambda, &mut mu, k, &mut out);
    out
}

/// All `μ ⊃ λ` with `μ/λ` a ribbon of size `m`, with the ribbon height.
pub fn ribbons_over(lambda: &[u32], m: u32) -> Vec<(Vec<u32>, u32)> {
    let rows = lambda.len() + m as usize;
    let mut inner = lambda.to_vec();
    inner.resize(rows, 0);
    let mut out = Vec::new();
    let mut mu = vec![0u32; rows];
    fn go(
        i: usize,
        inner: &[u32],
        mu: &mut Vec<u32>,
        left: u32,
        m: u32,
        out: &mut Vec<(Vec<u32>, u32)>,
    ) {
        if i == inner.len() {
            if left != 0 {
                return;
            }
            if let Some(hgt) = ribbon_height(mu, inner) {
                let trimmed: Vec<u32> = mu.iter().copied().filter(|&p| p > 0).collect();
                out.push((trimmed, hgt));
            }
            return;
        }
        let cap = if i == 0 { inner[0] + m } else { mu[i - 1] };
        for v in inner[i]..=cap.min(inner[i] + left) {
            mu[i] = v;
            go(i + 1, inner, mu, left - (v - inner[i]), m, out);
        }
    }
    go(0, &inner, &mut mu, m, m, &mut out);
    out
}

fn ribbon_height(lambda: &[u32], mu: &[u32]) -> Option<u32> {
    let inside = |r: i64, c: i64| -> bool {
        r >= 0
            && (r as usize) < lambda.len()
            && c >= mu[r as usize] as i64
            && c < lambda[r as usize] as i64
    };
    let mut cells = Vec::new();
    for r in 0..lambda.len() {
        for c in mu[r]..lambda[r] {
            cells.push((r as i64, c as i64));
        }
    }
    if cells.is_empty() {
        return None;
    }
    for &(r, c) in &cells {
        if inside(r + 1, c) && inside(r, c + 1) && inside(r + 1, c + 1) {
            return None;
        }
    }
    let mut seen = vec![cells[0]];
    let mut stack = vec![cells[0]];
    while let Some((r, c)) = stack.pop() {
        for (dr, dc) in [(0, 1), (1, 0), (0, -1), (-1, 0)] {
            let nb = (r + dr, c + dc);
            if inside(nb.0, nb.1) && !seen.contains(&nb) {
                seen.push(nb);
                stack.push(nb);
            }
        }
    }
    if seen.len() != cells.len() {
        return None;
    }
    let rows: std::collections::BTreeSet<i64> = cells.iter().map(|&(r, _)| r).collect();
    Some(rows.len() as u32 - 1)
}

/// Coefficient of `z^m` in `∏_{a ∈ num} (1 - α_a z) / ∏_{b ∈ den} (1 - α_b z)`
/// by multiplying out truncated geometric series.
pub fn rational_coeff(num: &[i64], den: &[i64], m: usize) -> Poly {
    let mut series = vec![Poly::zero(); m + 1];
    series[0] = Poly::one();
    for &a in num {
        let mut next = series.clone();
        for i in 1..=m {
            next[i] = &series[i] - &(&series[i - 1] * &Poly::alpha(a));
        }
        series = next;
    }
    for &b in den {
        let mut next = vec![Poly::zero(); m + 1];
        for i in 0..=m {
            let mut pw = Poly::one();
            for j in 0..=(m - i) {
                next[i + j] += &(&series[i] * &pw);
                pw = &pw * &Poly::alpha(b);
            }
        }
        series = next;
    }
    series[m].clone()
}
