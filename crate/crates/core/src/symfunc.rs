//! Double supersymmetric functions `h_k(x/y‖σ^s α)`, `e_k(x/y‖σ^s α)` and
//! double Schur functions (Jacobi–Trudi, A-tableaux, bialternant).
//!
//! Functions are realized either in `n` pairs of explicit variables
//! (`SuperContext::Vars(n)`) or in the free polynomial ring generated by the
//! classical `h_m(x/y)` (`SuperContext::Free`), where `h_m(x/y)` is the
//! indeterminate `Var::h(m)`.

use std::cell::RefCell;
use std::collections::HashMap;

use thiserror::Error;

use crate::laurent::{peel_triangular, shifted_power, LaurentSeries};
use crate::partition::{Partition, SkewShape};
use crate::polyring::{alpha_closed, elem_sym, homog_sym, signed, Poly, Var};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymError {
    #[error("this construction needs explicit x/y variables")]
    NeedsVariables,
    #[error("ell = {ell} is smaller than the required {need}")]
    EllTooSmall { ell: usize, need: usize },
    #[error("partition {0} has more than {1} parts")]
    TooLong(Partition, usize),
    #[error("alternant division failed: {0}")]
    Division(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SuperContext {
    /// `x_1..x_n`, `y_1..y_n`.
    Vars(usize),
    /// Free generators `h_m(x/y)`.
    Free,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    H,
    E,
}

thread_local! {
    static CLASSICAL: RefCell<HashMap<(SuperContext, Basis, usize), Poly>> = RefCell::new(HashMap::new());
    static DOUBLE: RefCell<HashMap<(SuperContext, Basis, usize, i64), Poly>> = RefCell::new(HashMap::new());
}

fn x_vars(n: usize) -> Vec<Var> {
    (1..=n as i64).map(Var::x).collect()
}

fn y_vars(n: usize) -> Vec<Var> {
    (1..=n as i64).map(Var::y).collect()
}

/// `p_k(x/y) = Σ_i x_i^k - (-y_i)^k`. In the free context `p_k` comes from
/// Newton's identity `n h_n = Σ_{i=1}^n p_i h_{n-i}`.
pub fn powersum_super(k: usize, ctx: SuperContext) -> Poly {
    assert!(k >= 1, "p_0 is not defined");
    match ctx {
        SuperContext::Vars(n) => {
            let mut out = Poly::zero();
            for i in 1..=n as i64 {
                out += &Poly::x(i).pow(k as u32);
                let y = Poly::y(i).pow(k as u32);
                if k.is_multiple_of(2) {
                    out -= &y;
                } else {
                    out += &y;
                }
            }
            out
        }
        SuperContext::Free => {
            let mut p = Poly::constant(k as i64) * classical_super(Basis::H, k, ctx);
            for i in 1..k {
                p -= &(&powersum_super(i, ctx) * &classical_super(Basis::H, k - i, ctx));
            }
            p
        }
    }
}

/// Classical `h_k(x/y) = Σ_{a+b=k} h_a(x) e_b(y)` or
/// `e_k(x/y) = Σ_{a+b=k} e_a(x) h_b(y)`.
pub fn classical_super(kind: Basis, k: usize, ctx: SuperContext) -> Poly {
    if k == 0 {
        return Poly::one();
    }
    if let Some(p) = CLASSICAL.with(|c| c.borrow().get(&(ctx, kind, k)).cloned()) {
        return p;
    }
    let p = match ctx {
        SuperContext::Vars(n) => {
            let xs = signed(&x_vars(n), false);
            let ys = signed(&y_vars(n), false);
            (0..=k)
                .map(|a| match kind {
                    Basis::H => &homog_sym(&xs, a) * &elem_sym(&ys, k - a),
                    Basis::E => &elem_sym(&xs, a) * &homog_sym(&ys, k - a),
                })
                .sum()
        }
        SuperContext::Free => match kind {
            Basis::H => Poly::var(Var::h(k as i64)),
            Basis::E => {
                // Σ_{i=0}^{k} (-1)^i e_i h_{k-i} = 0
                let mut acc = Poly::zero();
                for i in 0..k {
                    let term =
                        &classical_super(Basis::E, i, ctx) * &classical_super(Basis::H, k - i, ctx);
                    if i % 2 == 0 {
                        acc += &term;
                    } else {
                        acc -= &term;
                    }
                }
                if k % 2 == 1 {
                    acc
                } else {
                    -acc
                }
            }
        },
    };
    CLASSICAL.with(|c| c.borrow_mut().insert((ctx, kind, k), p.clone()));
    p
}

/// Coefficients `c_m` with `h_k(x/y‖σ^s α) = Σ_{m=1}^k c_m h_m(x/y)`,
/// `c_m = e_{k-m}(-α_{s+1}, …, -α_{s+k-1})`.
pub fn double_h_expansion(k: usize, s: i64) -> Vec<(usize, Poly)> {
    let alphas = signed(&alpha_closed(s + 1, s + k as i64 - 1), true);
    (1..=k).map(|m| (m, elem_sym(&alphas, k - m))).collect()
}

/// Coefficients `c_m` with `e_k(x/y‖σ^s α) = Σ_{m=1}^k c_m e_m(x/y)`,
/// `c_m = e_{k-m}(α_{s-k+2}, …, α_s)`.
pub fn double_e_expansion(k: usize, s: i64) -> Vec<(usize, Poly)> {
    let alphas = signed(&alpha_closed(s - k as i64 + 2, s), false);
    (1..=k).map(|m| (m, elem_sym(&alphas, k - m))).collect()
}

/// `h_k(x/y‖σ^s α)`; zero for negative `k`.
pub fn double_h(k: i64, ctx: SuperContext, s: i64) -> Poly {
    double(Basis::H, k, ctx, s)
}

/// `e_k(x/y‖σ^s α)`; zero for negative `k`.
pub fn double_e(k: i64, ctx: SuperContext, s: i64) -> Poly {
    double(Basis::E, k, ctx, s)
}

fn double(kind: Basis, k: i64, ctx: SuperContext, s: i64) -> Poly {
    if k < 0 {
        return Poly::zero();
    }
    if k == 0 {
        return Poly::one();
    }
    let key = (ctx, kind, k as usize, s);
    if let Some(p) = DOUBLE.with(|c| c.borrow().get(&key).cloned()) {
        return p;
    }
    let expansion = match kind {
        Basis::H => double_h_expansion(k as usize, s),
        Basis::E => double_e_expansion(k as usize, s),
    };
    let p: Poly = expansion
        .into_iter()
        .map(|(m, c)| &c * &classical_super(kind, m, ctx))
        .sum();
    DOUBLE.with(|c| c.borrow_mut().insert(key, p.clone()));
    p
}

/// Index-chain definition of `h_k(x_n/y_n‖σ^s α)`:
/// `Σ_{a+b=k} Σ ∏_{r≤a} (y_{j_r} + α_{r-j_r}) ∏_{t≤b} (x_{i_t} - α_{a+t-i_t})`
/// over `j_1 < ⋯ < j_a` and `i_1 ≥ ⋯ ≥ i_b` in `[1, n]`.
pub fn double_h_combinatorial(k: usize, ctx: SuperContext, s: i64) -> Result<Poly, SymError> {
    let n = match ctx {
        SuperContext::Vars(n) => n as i64,
        SuperContext::Free => return Err(SymError::NeedsVariables),
    };
    let mut total = Poly::zero();
    for a in 0..=k {
        let b = k - a;
        let ys = chains(n, a, true);
        let xs = chains(n, b, false);
        for js in &ys {
            let ypart: Poly = js
                .iter()
                .enumerate()
                .map(|(r, &j)| &Poly::y(j) + &Poly::alpha(s + r as i64 + 1 - j))
                .product();
            if ypart.is_zero() {
                continue;
            }
            for is in &xs {
                let xpart: Poly = is
                    .iter()
                    .enumerate()
                    .map(|(t, &i)| &Poly::x(i) - &Poly::alpha(s + (a + t) as i64 + 1 - i))
                    .product();
                total += &(&ypart * &xpart);
            }
        }
    }
    Ok(total)
}

/// Index-chain form of `e_k(x_n/y_n‖σ^s α)`, obtained from the `h` chains
/// through `e_k(x/y‖β) = h_k(y/x‖-ιβ)`:
/// `Σ_{a+b=k} Σ ∏_{r≤a} (x_{j_r} - α_{1-r+j_r}) ∏_{t≤b} (y_{i_t} + α_{1-a-t+i_t})`
/// over `j_1 < ⋯ < j_a` and `i_1 ≥ ⋯ ≥ i_b`.
pub fn double_e_combinatorial(k: usize, ctx: SuperContext, s: i64) -> Result<Poly, SymError> {
    let n = match ctx {
        SuperContext::Vars(n) => n as i64,
        SuperContext::Free => return Err(SymError::NeedsVariables),
    };
    let mut total = Poly::zero();
    for a in 0..=k {
        let b = k - a;
        for js in &chains(n, a, true) {
            let xpart: Poly = js
                .iter()
                .enumerate()
                .map(|(r, &j)| &Poly::x(j) - &Poly::alpha(s - r as i64 + j))
                .product();
            for is in &chains(n, b, false) {
                let ypart: Poly = is
                    .iter()
                    .enumerate()
                    .map(|(t, &i)| &Poly::y(i) + &Poly::alpha(s - (a + t) as i64 + i))
                    .product();
                total += &(&xpart * &ypart);
            }
        }
    }
    Ok(total)
}

/// Sequences of length `len` in `[1, n]`: strictly increasing if `strict`,
/// otherwise weakly decreasing.
fn chains(n: i64, len: usize, strict: bool) -> Vec<Vec<i64>> {
    fn rec(n: i64, len: usize, strict: bool, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let range: Vec<i64> = match (strict, cur.last()) {
            (true, None) => (1..=n).collect(),
            (true, Some(&l)) => ((l + 1)..=n).collect(),
            (false, None) => (1..=n).collect(),
            (false, Some(&l)) => (1..=l).collect(),
        };
        for v in range {
            cur.push(v);
            rec(n, len, strict, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, len, strict, &mut Vec::new(), &mut out);
    out
}

/// Determinant by expansion over column subsets; zero entries are skipped.
pub fn determinant(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    assert!(n <= 20, "determinant too large");
    // partial[S] = signed sum over injective maps rows 0..|S| -> S
    let mut partial: HashMap<u32, Poly> = HashMap::new();
    partial.insert(0, Poly::one());
    for (row, entries) in m.iter().enumerate() {
        let mut next: HashMap<u32, Poly> = HashMap::new();
        for (&set, val) in &partial {
            for (col, entry) in entries.iter().enumerate() {
                if set & (1 << col) != 0 || entry.is_zero() {
                    continue;
                }
                // sign: number of used columns greater than col
                let inversions = (set >> (col + 1)).count_ones();
                let mut term = val * entry;
                if inversions % 2 == 1 {
                    term = -term;
                }
                let slot = next.entry(set | (1 << col)).or_default();
                *slot += &term;
            }
        }
        next.retain(|_, v| !v.is_zero());
        partial = next;
        let _ = row;
    }
    partial.remove(&((1u32 << n) - 1)).unwrap_or_default()
}

/// Jacobi–Trudi determinant with entries `f(k, s)` at
/// `k = λ_i - μ_j - i + j`, `s = μ_j - j + 1` for `i, j ≤ ell`.
pub fn jacobi_trudi_with<F>(outer: &Partition, inner: &Partition, ell: usize, f: F) -> Poly
where
    F: Fn(i64, i64) -> Poly,
{
    let m: Vec<Vec<Poly>> = (1..=ell)
        .map(|i| {
            (1..=ell)
                .map(|j| {
                    let k = outer.part(i) as i64 - inner.part(j) as i64 - i as i64 + j as i64;
                    let s = inner.part(j) as i64 - j as i64 + 1;
                    f(k, s)
                })
                .collect()
        })
        .collect();
    determinant(&m)
}

/// `s_{λ/μ}(x/y‖α)` by the Jacobi–Trudi formula in the `h` basis
/// (`det[h_{λ_i-μ_j-i+j}(‖σ^{μ_j-j+1}α)]`, `ell ≥ ℓ(λ)`) or the `e` basis
/// (`det[e_{λ'_i-μ'_j-i+j}(‖σ^{j-μ'_j-1}α)]`, `ell ≥ ℓ(λ')`).
pub fn schur_double_jt(
    shape: &SkewShape,
    ctx: SuperContext,
    basis: Basis,
    ell: usize,
) -> Result<Poly, SymError> {
    match basis {
        Basis::H => {
            let need = shape.outer().len();
            if ell < need {
                return Err(SymError::EllTooSmall { ell, need });
            }
            Ok(jacobi_trudi_with(
                shape.outer(),
                shape.inner(),
                ell,
                |k, s| double_h(k, ctx, s),
            ))
        }
        Basis::E => {
            let conj = shape.conjugate();
            let need = conj.outer().len();
            if ell < need {
                return Err(SymError::EllTooSmall { ell, need });
            }
            // shift j - μ'_j - 1 is the negative of the h-basis shift
            Ok(jacobi_trudi_with(
                conj.outer(),
                conj.inner(),
                ell,
                |k, s| double_e(k, ctx, -s),
            ))
        }
    }
}

/// `s_{λ/μ}(x/y‖α)` via whichever Jacobi–Trudi form has the smaller
/// determinant.
pub fn schur_double(shape: &SkewShape, ctx: SuperContext) -> Poly {
    let rows = shape.outer().len();
    let cols = shape.outer().first() as usize;
    if cols < rows {
        schur_double_jt(shape, ctx, Basis::E, cols).expect("minimal ell")
    } else {
        schur_double_jt(shape, ctx, Basis::H, rows).expect("minimal ell")
    }
}

/// Classical supersymmetric skew Schur function `s_{λ/μ}(x/y)`.
pub fn schur_classical(shape: &SkewShape, ctx: SuperContext) -> Poly {
    jacobi_trudi_with(shape.outer(), shape.inner(), shape.outer().len(), |k, _| {
        if k < 0 {
            Poly::zero()
        } else {
            classical_super(Basis::H, k as usize, ctx)
        }
    })
}

/// A-tableau formula: fillings in `1' < 1 < 2' < 2 < ⋯ < n' < n`, weakly
/// increasing along rows and columns, no repeated primed letter in a row and
/// no repeated unprimed letter in a column. A cell with content `c` weighs
/// `x_i - α_c` (unprimed `i`) or `y_i + α_c` (primed `i`).
pub fn schur_double_tableaux(shape: &SkewShape, ctx: SuperContext) -> Result<Poly, SymError> {
    let n = match ctx {
        SuperContext::Vars(n) => n,
        SuperContext::Free => return Err(SymError::NeedsVariables),
    };
    let cells = shape.cells();
    let index: HashMap<(i64, i64), usize> =
        cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    // letter 2(i-1) is i', 2(i-1)+1 is i
    let weight = |cell: (i64, i64), letter: usize| -> Poly {
        let i = (letter / 2 + 1) as i64;
        let c = cell.1 - cell.0;
        if letter % 2 == 1 {
            &Poly::x(i) - &Poly::alpha(c)
        } else {
            &Poly::y(i) + &Poly::alpha(c)
        }
    };
    #[allow(clippy::too_many_arguments)]
    fn rec(
        pos: usize,
        cells: &[(i64, i64)],
        index: &HashMap<(i64, i64), usize>,
        letters: usize,
        filling: &mut Vec<usize>,
        acc: Poly,
        weight: &dyn Fn((i64, i64), usize) -> Poly,
        total: &mut Poly,
    ) {
        if pos == cells.len() {
            *total += &acc;
            return;
        }
        let (r, c) = cells[pos];
        let left = index.get(&(r, c - 1)).map(|&i| filling[i]);
        let up = index.get(&(r - 1, c)).map(|&i| filling[i]);
        let lo = left.into_iter().chain(up).max().unwrap_or(0);
        for letter in lo..letters {
            let primed = letter % 2 == 0;
            if primed && left == Some(letter) {
                continue;
            }
            if !primed && up == Some(letter) {
                continue;
            }
            filling.push(letter);
            let next = &acc * &weight(cells[pos], letter);
            rec(pos + 1, cells, index, letters, filling, next, weight, total);
            filling.pop();
        }
    }
    let mut total = Poly::zero();
    rec(
        0,
        &cells,
        &index,
        2 * n,
        &mut Vec::with_capacity(cells.len()),
        Poly::one(),
        &weight,
        &mut total,
    );
    Ok(total)
}

/// `h_k(x̄_n / -α ‖ σ^s α)` where `x̄_n = (x_1, …, x_n, α_{n+1}, α_{n+2}, …)`
/// and `y = -α`: the coefficient of `1/(z⁻¹|σ^s α)^k` in
/// `∏_{i=1}^{n} (1 - α_i z)/(1 - x_i z)`.
pub fn factorial_h(k: i64, n: usize, s: i64) -> Poly {
    if k < 0 {
        return Poly::zero();
    }
    let order = k;
    let mut f = LaurentSeries::one();
    for i in 1..=n as i64 {
        let num = LaurentSeries::new(0, vec![Poly::one(), -Poly::alpha(i)], None);
        let den = LaurentSeries::new(0, vec![Poly::one(), -Poly::x(i)], None)
            .invert_unit(order)
            .expect("unit constant term");
        f = f.mul(&num).mul(&den).truncate(order);
    }
    let f = f.truncate(order);
    let coeffs = peel_triangular(&f, |v, o| shifted_power(-v, s + v, o), k);
    coeffs.get(&k).cloned().unwrap_or_default()
}

/// `s_λ(x̄_n / -α ‖ σ^n α)` by Jacobi–Trudi with [`factorial_h`] entries.
/// This is the side that matches [`bialternant`].
pub fn factorial_schur_jt(lambda: &Partition, n: usize) -> Poly {
    let shift = n as i64;
    jacobi_trudi_with(lambda, &Partition::empty(), lambda.len(), |k, s| {
        factorial_h(k, n, s + shift)
    })
}

/// `(x|σ^t α)^m = ∏_{u=1}^{m} (x - α_{t+u})`.
pub fn x_shifted_power(x: Var, t: i64, m: u32) -> Poly {
    (1..=m as i64)
        .map(|u| &Poly::var(x) - &Poly::alpha(t + u))
        .product()
}

/// `det[(x_i|σ^{t_j} α)^{μ_j}]_{i,j ≤ n}`.
pub fn alternant<T: Fn(usize) -> i64>(mu: &[u32], n: usize, shift: T) -> Poly {
    let m: Vec<Vec<Poly>> = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| x_shifted_power(Var::x(i as i64), shift(j), mu[j - 1]))
                .collect()
        })
        .collect();
    determinant(&m)
}

/// Factorial Schur polynomial `A_{λ+δ} / A_δ` with `A_μ = det[(x_i|α)^{μ_j}]`.
/// Equals [`factorial_schur_jt`].
pub fn bialternant(lambda: &Partition, n: usize) -> Result<Poly, SymError> {
    bialternant_with_shift(lambda, n, |_| 0)
}

/// `A_{λ+δ} / A_δ` with column `j` using `(x_i|σ^{t_j} α)`.
pub fn bialternant_with_shift<T: Fn(usize) -> i64>(
    lambda: &Partition,
    n: usize,
    shift: T,
) -> Result<Poly, SymError> {
    if lambda.len() > n {
        return Err(SymError::TooLong(lambda.clone(), n));
    }
    let delta: Vec<u32> = (1..=n).map(|j| (n - j) as u32).collect();
    let top: Vec<u32> = (1..=n).map(|j| lambda.part(j) + delta[j - 1]).collect();
    let mut q = alternant(&top, n, &shift);
    // A_δ is the Vandermonde product ∏_{i<j} (x_i - x_j)
    for i in 1..=n as i64 {
        for j in (i + 1)..=n as i64 {
            let d = &Poly::x(i) - &Poly::x(j);
            q = q
                .div_exact_in(&d, Var::x(i))
                .map_err(|e| SymError::Division(e.to_string()))?;
        }
    }
    Ok(q)
}
