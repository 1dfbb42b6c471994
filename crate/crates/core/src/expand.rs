//! Expansions on the boson side: Murnaghan–Nakayama products and
//! derivatives, Pieri and skew-Pieri coefficients, and the raising-operator
//! form of the Jacobi–Trudi determinant.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fock::{apply_current, FockError, FockVector};
use crate::laurent::{LaurentSeries, SeriesError};
use crate::partition::{Partition, SkewShape};
use crate::polyring::{elem_sym, homog_sym, signed, Poly, Var};
use crate::symfunc::{double_h, schur_double, SuperContext};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExpandError {
    #[error("ell = {ell} is smaller than the required {need}")]
    EllTooSmall { ell: usize, need: usize },
    #[error("k must be positive")]
    NonPositiveK,
    #[error("raising expansion exceeded {0} intermediate words")]
    RaisingCap(usize),
    #[error(transparent)]
    Fock(#[from] FockError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Finite sum `Σ c_λ s_λ(p‖α)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    entries: BTreeMap<Partition, Poly>,
}

impl SchurExpansion {
    pub fn zero() -> Self {
        SchurExpansion::default()
    }

    pub fn single(lambda: Partition) -> Self {
        let mut e = SchurExpansion::zero();
        e.add_term(lambda, Poly::one());
        e
    }

    /// Reads the charge-0 part of a Fock vector.
    pub fn from_fock(v: &FockVector) -> Self {
        let mut e = SchurExpansion::zero();
        for (key, c) in v.entries() {
            if key.charge == 0 {
                e.add_term(key.partition.clone(), c.clone());
            }
        }
        e
    }

    pub fn to_fock(&self) -> FockVector {
        let mut v = FockVector::zero();
        for (p, c) in &self.entries {
            v = v.add(&FockVector::ket(p.clone(), 0).scale(c));
        }
        v
    }

    pub fn add_term(&mut self, lambda: Partition, c: Poly) {
        if c.is_zero() {
            return;
        }
        let slot = self.entries.entry(lambda.clone()).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.entries.remove(&lambda);
        }
    }

    pub fn entries(&self) -> &BTreeMap<Partition, Poly> {
        &self.entries
    }

    pub fn coeff(&self, lambda: &Partition) -> Poly {
        self.entries.get(lambda).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Σ c_λ s_λ(x/y‖α)` in the given context.
    pub fn evaluate(&self, ctx: SuperContext) -> Poly {
        self.entries
            .iter()
            .map(|(p, c)| c * &schur_cached(p, ctx))
            .sum()
    }

    /// Terms by decreasing size, then decreasing partition, e.g.
    /// `s_{722} + (α_5 + α_6 - α_{-1} - α_{-2}) s_{622}`.
    pub fn latex(&self) -> String {
        self.render(|p| p.latex(), |p| format!("s_{{{}}}", p.label()))
    }

    fn render<F, G>(&self, coeff: F, basis: G) -> String
    where
        F: Fn(&Poly) -> String,
        G: Fn(&Partition) -> String,
    {
        if self.entries.is_empty() {
            return "0".to_string();
        }
        let mut terms: Vec<_> = self.entries.iter().collect();
        terms.sort_by(|a, b| (b.0.size(), b.0).cmp(&(a.0.size(), a.0)));
        let mut out = String::new();
        for (i, (p, c)) in terms.into_iter().enumerate() {
            let (neg, body) = match c.as_i64() {
                Some(1) => (false, String::new()),
                Some(-1) => (true, String::new()),
                _ if c.num_terms() == 1 && c.terms()[0].1 < 0.into() => {
                    (true, format!("{} ", coeff(&-c)))
                }
                _ if c.num_terms() == 1 => (false, format!("{} ", coeff(c))),
                _ => (false, format!("({}) ", coeff(c))),
            };
            match (i, neg) {
                (0, false) => {}
                (0, true) => out.push('-'),
                (_, false) => out.push_str(" + "),
                (_, true) => out.push_str(" - "),
            }
            out.push_str(&body);
            out.push_str(&basis(p));
        }
        out
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|p| p.to_string(), |p| format!("s{}", p)))
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    coeff: Poly,
}

#[derive(Serialize, Deserialize)]
struct ExpansionJson {
    terms: Vec<TermJson>,
}

impl Serialize for SchurExpansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ExpansionJson {
            terms: self
                .entries
                .iter()
                .map(|(p, c)| TermJson {
                    partition: p.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchurExpansion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = ExpansionJson::deserialize(d)?;
        let mut e = SchurExpansion::zero();
        for t in raw.terms {
            e.add_term(t.partition, t.coeff);
        }
        Ok(e)
    }
}

thread_local! {
    static SCHUR: RefCell<HashMap<(Partition, SuperContext), Poly>> = RefCell::new(HashMap::new());
}

/// Memoized [`schur_double`] for straight shapes.
pub fn schur_cached(lambda: &Partition, ctx: SuperContext) -> Poly {
    let key = (lambda.clone(), ctx);
    if let Some(p) = SCHUR.with(|c| c.borrow().get(&key).cloned()) {
        return p;
    }
    let p = schur_double(&SkewShape::straight(lambda.clone()), ctx);
    SCHUR.with(|c| c.borrow_mut().insert(key, p.clone()));
    p
}

/// `p_k s_λ`, read off from `J_{-k}|λ⟩`.
pub fn mn_multiply(lambda: &Partition, k: i64) -> Result<SchurExpansion, ExpandError> {
    if k < 1 {
        return Err(ExpandError::NonPositiveK);
    }
    let v = apply_current(-k, &FockVector::ket(lambda.clone(), 0))?;
    Ok(SchurExpansion::from_fock(&v))
}

/// `k ∂s_λ/∂p_k`, read off from `J_k|λ⟩`.
pub fn mn_derivative(lambda: &Partition, k: i64) -> Result<SchurExpansion, ExpandError> {
    if k < 1 {
        return Err(ExpandError::NonPositiveK);
    }
    let v = apply_current(k, &FockVector::ket(lambda.clone(), 0))?;
    Ok(SchurExpansion::from_fock(&v))
}

/// `p_{ρ_1} ⋯ p_{ρ_r}` in double Schur functions.
pub fn powersum_schur_expansion(rho: &[i64]) -> Result<SchurExpansion, ExpandError> {
    let mut v = FockVector::vacuum();
    for &k in rho {
        if k < 1 {
            return Err(ExpandError::NonPositiveK);
        }
        v = apply_current(-k, &v)?;
    }
    Ok(SchurExpansion::from_fock(&v))
}

/// `sign · z^{zpow} · ∏_{a ∈ num} (1 - α_a z) / ∏_{b ∈ den} (1 - α_b z)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RationalProduct {
    pub sign: i64,
    pub zpow: i64,
    pub num: Vec<i64>,
    pub den: Vec<i64>,
}

impl RationalProduct {
    fn one() -> Self {
        RationalProduct {
            sign: 1,
            ..Default::default()
        }
    }

    fn times(mut self, other: RationalProduct) -> Self {
        self.sign *= other.sign;
        self.zpow += other.zpow;
        self.num.extend(other.num);
        self.den.extend(other.den);
        self
    }

    /// Removes indices that occur in both `num` and `den`.
    pub fn cancel(&self) -> RationalProduct {
        let mut den = self.den.clone();
        let mut num = Vec::new();
        for &a in &self.num {
            if let Some(pos) = den.iter().position(|&b| b == a) {
                den.swap_remove(pos);
            } else {
                num.push(a);
            }
        }
        num.sort_unstable();
        den.sort_unstable();
        RationalProduct {
            sign: self.sign,
            zpow: self.zpow,
            num,
            den,
        }
    }

    /// Coefficient of `z^m` via `Σ_{s+t=m'} h_s(den) e_t(-num)`.
    pub fn coeff_closed(&self, m: i64) -> Poly {
        let m = m - self.zpow;
        if m < 0 {
            return Poly::zero();
        }
        let den: Vec<Var> = self.den.iter().map(|&i| Var::alpha(i)).collect();
        let num: Vec<Var> = self.num.iter().map(|&i| Var::alpha(i)).collect();
        let den = signed(&den, false);
        let num = signed(&num, true);
        let m = m as usize;
        let c: Poly = (0..=m)
            .map(|s| &homog_sym(&den, s) * &elem_sym(&num, m - s))
            .sum();
        c.scale(self.sign)
    }

    /// The product as a Laurent series, exact through `z^order`.
    pub fn series(&self, order: i64) -> Result<LaurentSeries, SeriesError> {
        let rel = order - self.zpow;
        let mut f = LaurentSeries::one();
        if rel < 0 {
            return Ok(LaurentSeries::zero(Some(order)));
        }
        for &a in &self.num {
            f = f.mul(&linear(a)).truncate(rel);
        }
        for &b in &self.den {
            f = f.mul(&linear(b).invert_unit(rel)?).truncate(rel);
        }
        Ok(f.truncate(rel)
            .shift(self.zpow)
            .scale(&Poly::constant(self.sign)))
    }

    /// Coefficient of `z^m` by series expansion.
    pub fn coeff_series(&self, m: i64) -> Result<Poly, SeriesError> {
        self.series(m)?.coeff(m)
    }
}

fn linear(a: i64) -> LaurentSeries {
    LaurentSeries::new(0, vec![Poly::one(), -Poly::alpha(a)], None)
}

/// `ŝ_{λ/μ}(z‖α)` for a horizontal strip, with `ell ≥ λ_1`:
/// `∏_{j≤ℓ} (1-α_{j-λ'_j} z)/(1-α_j z) ∏_{b} z/(1-α_{c(b)} z)`.
pub fn single_x(outer: &Partition, inner: &Partition, ell: usize) -> RationalProduct {
    let conj = outer.conjugate();
    let mut r = RationalProduct::one();
    for j in 1..=ell {
        r.num.push(j as i64 - conj.part(j) as i64);
        r.den.push(j as i64);
    }
    for (row, col) in outer.skew_cells(inner) {
        r.zpow += 1;
        r.den.push(col - row);
    }
    r
}

/// `ŝ_{λ/μ}(0/(-z)‖α)` for a vertical strip, with `ell ≥ ℓ(λ)`:
/// `∏_{j≤ℓ} (1-α_{λ_j-j+1} z)/(1-α_{1-j} z) ∏_{b} (-z)/(1-α_{c(b)+1} z)`.
pub fn single_y(outer: &Partition, inner: &Partition, ell: usize) -> RationalProduct {
    let mut r = RationalProduct::one();
    for j in 1..=ell {
        r.num.push(outer.part(j) as i64 - j as i64 + 1);
        r.den.push(1 - j as i64);
    }
    for (row, col) in outer.skew_cells(inner) {
        r.zpow += 1;
        r.sign = -r.sign;
        r.den.push(col - row + 1);
    }
    r
}

/// `(z;α)^{k-1} / z^{k+1}` for `h_k`.
fn h_kernel(k: i64) -> RationalProduct {
    let mut r = RationalProduct::one();
    r.zpow = -k - 1;
    if k >= 1 {
        r.num.extend(1..k);
    } else {
        r.den.push(0);
    }
    r
}

/// `z^{-k-1} / (z;α)^{1-k}` for `e_k`.
fn e_kernel(k: i64) -> RationalProduct {
    let mut r = RationalProduct::one();
    r.zpow = -k - 1;
    if k >= 1 {
        r.num.extend((2 - k)..=0);
    } else {
        r.den.push(1);
    }
    r
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PieriMethod {
    /// Supersymmetric `h` of the two multisets.
    Closed,
    /// Formal residue of the Laurent expansion.
    Residue,
}

fn extract(r: &RationalProduct, method: PieriMethod) -> Result<Poly, ExpandError> {
    match method {
        PieriMethod::Closed => Ok(r.cancel().coeff_closed(-1)),
        PieriMethod::Residue => Ok(r.coeff_series(-1)?),
    }
}

/// Coefficient of `s_λ` in `h_k s_μ`. `ell` defaults to `λ_1`, the number of
/// columns; smaller values are rejected.
pub fn pieri_h_coeff(
    mu: &Partition,
    lambda: &Partition,
    k: i64,
    ell: Option<usize>,
    method: PieriMethod,
) -> Result<Poly, ExpandError> {
    let need = lambda.first() as usize;
    let ell = ell.unwrap_or(need);
    if ell < need {
        return Err(ExpandError::EllTooSmall { ell, need });
    }
    if k < 0 || !lambda.is_horizontal_strip_over(mu) {
        return Ok(Poly::zero());
    }
    let r = single_x(lambda, mu, ell).times(h_kernel(k));
    extract(&r, method)
}

/// Dual coefficient `c̄` with `e_k s_μ = (-1)^k Σ_λ c̄ s_λ`. `ell` defaults to
/// `ℓ(λ)`.
pub fn pieri_e_coeff(
    mu: &Partition,
    lambda: &Partition,
    k: i64,
    ell: Option<usize>,
    method: PieriMethod,
) -> Result<Poly, ExpandError> {
    let need = lambda.len();
    let ell = ell.unwrap_or(need);
    if ell < need {
        return Err(ExpandError::EllTooSmall { ell, need });
    }
    if k < 0 || !lambda.is_vertical_strip_over(mu) {
        return Ok(Poly::zero());
    }
    let r = single_y(lambda, mu, ell).times(e_kernel(k));
    extract(&r, method)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PieriKind {
    H,
    E,
}

/// Coefficient of `s_{λ/η}` in `h_k s_{μ/ν}` (kind `H`: `λ/μ` horizontal,
/// `ν/η` vertical) or `c̄` with `e_k s_{μ/ν} = (-1)^k Σ c̄ s_{λ/η}` (kind `E`:
/// `λ/μ` vertical, `ν/η` horizontal).
pub fn skew_pieri_coeff(
    target: &SkewShape,
    source: &SkewShape,
    k: i64,
    kind: PieriKind,
    method: PieriMethod,
) -> Result<Poly, ExpandError> {
    let (lambda, eta) = (target.outer(), target.inner());
    let (mu, nu) = (source.outer(), source.inner());
    if k < 0 || !lambda.contains(mu) || !nu.contains(eta) {
        return Ok(Poly::zero());
    }
    let r = match kind {
        PieriKind::H => {
            if !lambda.is_horizontal_strip_over(mu) || !nu.is_vertical_strip_over(eta) {
                return Ok(Poly::zero());
            }
            single_y(nu, eta, nu.len())
                .times(single_x(lambda, mu, lambda.first() as usize))
                .times(h_kernel(k))
        }
        PieriKind::E => {
            if !lambda.is_vertical_strip_over(mu) || !nu.is_horizontal_strip_over(eta) {
                return Ok(Poly::zero());
            }
            single_x(nu, eta, nu.first() as usize)
                .times(single_y(lambda, mu, lambda.len()))
                .times(e_kernel(k))
        }
    };
    extract(&r, method)
}

/// All `λ ⊇ μ` with `λ/μ` a horizontal strip of size at most `k`.
pub fn horizontal_strips(mu: &Partition, k: u32) -> Vec<Partition> {
    strips(mu, k, true)
}

/// All `λ ⊇ μ` with `λ/μ` a vertical strip of size at most `k`.
pub fn vertical_strips(mu: &Partition, k: u32) -> Vec<Partition> {
    strips(mu, k, false)
}

fn strips(mu: &Partition, k: u32, horizontal: bool) -> Vec<Partition> {
    let mut out = vec![mu.clone()];
    let mut frontier = vec![mu.clone()];
    for _ in 0..k {
        let mut next = Vec::new();
        for p in &frontier {
            for i in 1..=p.len() + 1 {
                if let Some(q) = p.add_box(i) {
                    let ok = if horizontal {
                        q.is_horizontal_strip_over(mu)
                    } else {
                        q.is_vertical_strip_over(mu)
                    };
                    if ok && !out.contains(&q) && !next.contains(&q) {
                        next.push(q);
                    }
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.sort();
    out
}

/// `h_k s_μ` expanded by [`pieri_h_coeff`].
pub fn pieri_h_expansion(mu: &Partition, k: i64) -> Result<SchurExpansion, ExpandError> {
    let mut e = SchurExpansion::zero();
    for lambda in horizontal_strips(mu, k.max(0) as u32) {
        let c = pieri_h_coeff(mu, &lambda, k, None, PieriMethod::Closed)?;
        e.add_term(lambda, c);
    }
    Ok(e)
}

/// `e_k s_μ` expanded as `(-1)^k Σ c̄ s_λ`.
pub fn pieri_e_expansion(mu: &Partition, k: i64) -> Result<SchurExpansion, ExpandError> {
    let mut e = SchurExpansion::zero();
    for lambda in vertical_strips(mu, k.max(0) as u32) {
        let c = pieri_e_coeff(mu, &lambda, k, None, PieriMethod::Closed)?;
        e.add_term(lambda, if k % 2 == 0 { c } else { -c });
    }
    Ok(e)
}

/// `c ∏ h_{k_i, s_i}` with `h_{k,s} = h_k(p‖σ^s α)`. Factors are sorted and
/// `h_{0,s} = 1` factors are omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HWord {
    pub factors: Vec<(i64, i64)>,
    pub coeff: Poly,
}

impl HWord {
    /// `None` when some `k < 0`.
    pub fn new(mut factors: Vec<(i64, i64)>, coeff: Poly) -> Option<HWord> {
        if factors.iter().any(|&(k, _)| k < 0) {
            return None;
        }
        factors.retain(|&(k, _)| k != 0);
        factors.sort_unstable_by(|a, b| b.cmp(a));
        Some(HWord { factors, coeff })
    }

    pub fn latex(&self) -> String {
        self.render(true)
    }

    fn render(&self, latex: bool) -> String {
        let body: Vec<String> = self
            .factors
            .iter()
            .map(|(k, s)| {
                if latex {
                    format!("h_{{{k},{s}}}")
                } else {
                    format!("h({k},{s})")
                }
            })
            .collect();
        let body = if body.is_empty() {
            "1".to_string()
        } else {
            body.join(" ")
        };
        let coeff = if latex {
            self.coeff.latex()
        } else {
            self.coeff.to_string()
        };
        match self.coeff.as_i64() {
            Some(1) => body,
            Some(-1) => format!("-{body}"),
            _ => format!("({coeff}) {body}"),
        }
    }
}

impl fmt::Display for HWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// Bound on intermediate offset vectors in [`raising_expansion`].
pub const RAISING_CAP: usize = 200_000;

/// `∏_{i<j} (1 - R_ij) h_{λ,δ}` with `δ = (0, 1, …, ℓ-1)`, fully expanded,
/// longest words first.
/// `R_ij` adds `e_i - e_j` to both index vectors; words that vanish
/// (some `k < 0`) are dropped after all operators are applied.
pub fn raising_expansion(lambda: &Partition) -> Result<Vec<HWord>, ExpandError> {
    let ell = lambda.len();
    let mut offsets: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    offsets.insert(vec![0; ell], 1);
    for i in 0..ell {
        for j in (i + 1)..ell {
            let mut next = offsets.clone();
            for (o, c) in &offsets {
                let mut r = o.clone();
                r[i] += 1;
                r[j] -= 1;
                let slot = next.entry(r).or_insert(0);
                *slot -= c;
            }
            next.retain(|_, c| *c != 0);
            if next.len() > RAISING_CAP {
                return Err(ExpandError::RaisingCap(RAISING_CAP));
            }
            offsets = next;
        }
    }
    let mut words: BTreeMap<Vec<(i64, i64)>, i64> = BTreeMap::new();
    for (o, c) in offsets {
        let factors: Vec<(i64, i64)> = (0..ell)
            .map(|i| {
                let k = lambda.part(i + 1) as i64 + o[i];
                let eta = i as i64 + o[i];
                (k, -eta)
            })
            .collect();
        if let Some(w) = HWord::new(factors, Poly::one()) {
            *words.entry(w.factors).or_insert(0) += c;
        }
    }
    let mut out: Vec<HWord> = words
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(factors, c)| HWord {
            factors,
            coeff: Poly::constant(c),
        })
        .collect();
    out.sort_by(|a, b| (b.factors.len(), &a.factors).cmp(&(a.factors.len(), &b.factors)));
    Ok(out)
}

/// `Σ c ∏ h_k(x/y‖σ^s α)`.
pub fn hsymbol_evaluate(words: &[HWord], ctx: SuperContext) -> Poly {
    words
        .iter()
        .map(|w| {
            let prod: Poly = w
                .factors
                .iter()
                .map(|&(k, s)| double_h(k, ctx, s))
                .product();
            &w.coeff * &prod
        })
        .sum()
}
