//! Truncated formal Laurent series in one variable `z` with [`Poly`]
//! coefficients, the shifted powers `(z⁻¹|σ^s α)^k` and residues.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polyring::Poly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("non-invertible leading coefficient")]
    NonInvertible,
    #[error("insufficient precision: coefficient of z^{wanted} requested but series is known only to z^{order}")]
    InsufficientPrecision { wanted: i64, order: i64 },
}

/// `Σ_{e ≥ valuation} c_e z^e + O(z^{order+1})`.
///
/// `order == None` marks an exact Laurent polynomial. Coefficients past the
/// stored vector are zero; the first stored coefficient is nonzero unless the
/// series is zero, in which case `coeffs` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentSeries {
    valuation: i64,
    order: Option<i64>,
    coeffs: Vec<Poly>,
}

fn min_order(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl LaurentSeries {
    pub fn new(valuation: i64, coeffs: Vec<Poly>, order: Option<i64>) -> Self {
        let mut s = LaurentSeries {
            valuation,
            order,
            coeffs,
        };
        s.normalize();
        s
    }

    pub fn zero(order: Option<i64>) -> Self {
        LaurentSeries::new(0, Vec::new(), order)
    }

    pub fn one() -> Self {
        LaurentSeries::monomial(Poly::one(), 0)
    }

    /// Exact `c z^e`.
    pub fn monomial(c: Poly, e: i64) -> Self {
        LaurentSeries::new(e, vec![c], None)
    }

    /// Exact `z^e`.
    pub fn z_pow(e: i64) -> Self {
        LaurentSeries::monomial(Poly::one(), e)
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.valuation += lead as i64;
        }
        if let Some(o) = self.order {
            let keep = (o - self.valuation + 1).max(0) as usize;
            self.coeffs.truncate(keep);
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.valuation = match self.order {
                Some(o) => o + 1,
                None => 0,
            };
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_exact(&self) -> bool {
        self.order.is_none()
    }

    /// Lowest exponent with a nonzero coefficient; for the zero series of
    /// order `N` this is `N + 1`.
    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn order(&self) -> Option<i64> {
        self.order
    }

    pub fn leading_coeff(&self) -> Option<&Poly> {
        self.coeffs.first()
    }

    /// Highest exponent with a stored nonzero coefficient.
    pub fn top_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.valuation + self.coeffs.len() as i64 - 1)
    }

    /// Coefficient of `z^e`.
    pub fn coeff(&self, e: i64) -> Result<Poly, SeriesError> {
        if let Some(o) = self.order {
            if e > o {
                return Err(SeriesError::InsufficientPrecision {
                    wanted: e,
                    order: o,
                });
            }
        }
        Ok(self.coeff_unchecked(e))
    }

    fn coeff_unchecked(&self, e: i64) -> Poly {
        if e < self.valuation {
            return Poly::zero();
        }
        self.coeffs
            .get((e - self.valuation) as usize)
            .cloned()
            .unwrap_or_else(Poly::zero)
    }

    /// Nonzero terms `(exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Poly)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.valuation + i as i64, c))
    }

    /// Drops every term above `order` and records the lower precision.
    pub fn truncate(&self, order: i64) -> LaurentSeries {
        LaurentSeries::new(
            self.valuation,
            self.coeffs.clone(),
            min_order(self.order, Some(order)),
        )
    }

    pub fn add(&self, other: &LaurentSeries) -> LaurentSeries {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &LaurentSeries) -> LaurentSeries {
        self.combine(other, true)
    }

    fn combine(&self, other: &LaurentSeries, negate: bool) -> LaurentSeries {
        let order = min_order(self.order, other.order);
        if self.is_zero() && other.is_zero() {
            return LaurentSeries::zero(order);
        }
        let lo = match (self.is_zero(), other.is_zero()) {
            (true, _) => other.valuation,
            (_, true) => self.valuation,
            _ => self.valuation.min(other.valuation),
        };
        let mut hi = self
            .top_exponent()
            .into_iter()
            .chain(other.top_exponent())
            .max()
            .unwrap_or(lo);
        if let Some(o) = order {
            hi = hi.min(o);
        }
        let coeffs = (lo..=hi)
            .map(|e| {
                let a = self.coeff_unchecked(e);
                let b = other.coeff_unchecked(e);
                if negate {
                    &a - &b
                } else {
                    &a + &b
                }
            })
            .collect();
        LaurentSeries::new(lo, coeffs, order)
    }

    pub fn neg(&self) -> LaurentSeries {
        LaurentSeries {
            valuation: self.valuation,
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Poly) -> LaurentSeries {
        LaurentSeries::new(
            self.valuation,
            self.coeffs.iter().map(|x| x * c).collect(),
            self.order,
        )
    }

    /// Multiplies by `z^e` (exact shift, precision shifts with it).
    pub fn shift(&self, e: i64) -> LaurentSeries {
        LaurentSeries {
            valuation: self.valuation + e,
            order: self.order.map(|o| o + e),
            coeffs: self.coeffs.clone(),
        }
    }

    /// Cauchy product; precision is `min(o_f + v_g, o_g + v_f)`.
    pub fn mul(&self, other: &LaurentSeries) -> LaurentSeries {
        let order = min_order(
            self.order.map(|o| o + other.valuation),
            other.order.map(|o| o + self.valuation),
        );
        if self.is_zero() || other.is_zero() {
            return LaurentSeries::zero(order);
        }
        let v = self.valuation + other.valuation;
        let mut len = self.coeffs.len() + other.coeffs.len() - 1;
        if let Some(o) = order {
            len = len.min((o - v + 1).max(0) as usize);
        }
        let mut coeffs = vec![Poly::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                let t = a * b;
                coeffs[i + j] += &t;
            }
        }
        LaurentSeries::new(v, coeffs, order)
    }

    /// Multiplicative inverse known through `z^order`. The leading
    /// coefficient must be `±1`.
    pub fn invert_unit(&self, order: i64) -> Result<LaurentSeries, SeriesError> {
        let c0 = self
            .leading_coeff()
            .and_then(|c| c.as_constant())
            .filter(|c| c.abs().is_one())
            .ok_or(SeriesError::NonInvertible)?;
        let v = self.valuation;
        // f·g = 1 pins g's coefficients only as far as f's precision allows
        let order = match self.order {
            Some(o) => order.min(o - 2 * v),
            None => order,
        };
        let n_terms = (order + v + 1).max(0) as usize;
        let c0 = Poly::constant(c0);
        let mut d: Vec<Poly> = Vec::with_capacity(n_terms);
        for n in 0..n_terms {
            if n == 0 {
                d.push(c0.clone());
                continue;
            }
            let mut acc = Poly::zero();
            for i in 1..=n.min(self.coeffs.len().saturating_sub(1)) {
                let ci = &self.coeffs[i];
                if ci.is_zero() || d[n - i].is_zero() {
                    continue;
                }
                acc += &(ci * &d[n - i]);
            }
            d.push(-(&acc * &c0));
        }
        Ok(LaurentSeries::new(-v, d, Some(order)))
    }

    /// Coefficient of `z⁻¹`.
    pub fn residue(&self) -> Result<Poly, SeriesError> {
        self.coeff(-1)
    }

    /// Applies `σ^m` to every coefficient.
    pub fn shift_alpha(&self, m: i64) -> LaurentSeries {
        LaurentSeries {
            valuation: self.valuation,
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.shift_alpha(m)).collect(),
        }
    }

    /// Applies `ι` to every coefficient.
    pub fn iota_alpha(&self) -> LaurentSeries {
        LaurentSeries {
            valuation: self.valuation,
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.iota_alpha()).collect(),
        }
    }

    fn render(&self, latex: bool) -> String {
        let mut parts: Vec<String> = self
            .terms()
            .map(|(e, c)| {
                let zpow = match (e, latex) {
                    (0, _) => String::new(),
                    (1, _) => "z".to_string(),
                    (_, true) => format!("z^{{{}}}", e),
                    (_, false) => format!("z^{}", e),
                };
                let coef = if latex { c.latex() } else { c.to_string() };
                match (zpow.is_empty(), c.is_one(), c.num_terms()) {
                    (true, _, _) => format!("({})", coef),
                    (false, true, _) => zpow,
                    (false, false, 1) if !coef.contains(' ') => format!("{} {}", coef, zpow),
                    _ => format!("({}) {}", coef, zpow),
                }
            })
            .collect();
        if let Some(o) = self.order {
            parts.push(if latex {
                format!("O(z^{{{}}})", o + 1)
            } else {
                format!("O(z^{})", o + 1)
            });
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }

    pub fn latex(&self) -> String {
        self.render(true)
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// `z⁻¹ - α_i` as an exact Laurent polynomial.
fn z_inv_minus_alpha(i: i64) -> LaurentSeries {
    LaurentSeries::new(-1, vec![Poly::one(), -Poly::alpha(i)], None)
}

thread_local! {
    static NEGATIVE_POWERS: RefCell<HashMap<(i64, i64, i64), LaurentSeries>> = RefCell::new(HashMap::new());
}

/// `(z⁻¹|σ^s α)^k`. For `k ≥ 0` this is the exact product
/// `∏_{i=1}^{k} (z⁻¹ - α_{s+i})`; for `k < 0` it is the expansion of
/// `∏_{i=k+1}^{0} (z⁻¹ - α_{s+i})⁻¹` through `z^order`.
pub fn shifted_power(k: i64, s: i64, order: i64) -> LaurentSeries {
    if k >= 0 {
        (1..=k).fold(LaurentSeries::one(), |acc, i| {
            acc.mul(&z_inv_minus_alpha(s + i))
        })
    } else {
        let key = (k, s, order);
        if let Some(f) = NEGATIVE_POWERS.with(|c| c.borrow().get(&key).cloned()) {
            return f;
        }
        let denom = ((k + 1)..=0).fold(LaurentSeries::one(), |acc, i| {
            acc.mul(&z_inv_minus_alpha(s + i))
        });
        let f = denom
            .invert_unit(order)
            .expect("shifted power denominators are monic");
        NEGATIVE_POWERS.with(|c| c.borrow_mut().insert(key, f.clone()));
        f
    }
}

/// `(z; σ^s α)^m`: `∏_{i=1}^{m} (1 - α_{s+i} z)` for `m ≥ 0`, and
/// `∏_{i=m+1}^{0} (1 - α_{s+i} z)⁻¹` for `m < 0`.
pub fn z_alpha_product(m: i64, s: i64, order: i64) -> LaurentSeries {
    let factor = |i: i64| LaurentSeries::new(0, vec![Poly::one(), -Poly::alpha(s + i)], None);
    if m >= 0 {
        (1..=m).fold(LaurentSeries::one(), |acc, i| acc.mul(&factor(i)))
    } else {
        ((m + 1)..=0)
            .fold(LaurentSeries::one(), |acc, i| acc.mul(&factor(i)))
            .invert_unit(order)
            .expect("constant term is 1")
    }
}

/// Expands `f` in a triangular basis `{b_v}` where `b_v` has valuation `v`
/// and leading coefficient `1`, by repeatedly peeling off the lowest term.
/// Stops once the valuation exceeds `v_max` or the precision of `f`.
/// Returns `v ↦ coefficient of b_v`.
pub fn peel_triangular<B>(f: &LaurentSeries, basis: B, v_max: i64) -> BTreeMap<i64, Poly>
where
    B: Fn(i64, i64) -> LaurentSeries,
{
    let mut out = BTreeMap::new();
    let mut rest = f.clone();
    let work_order = f
        .order()
        .unwrap_or(v_max.max(f.top_exponent().unwrap_or(0)));
    while !rest.is_zero() {
        let v = rest.valuation();
        if v > v_max {
            break;
        }
        if let Some(o) = rest.order() {
            if v > o {
                break;
            }
        }
        let c = rest.leading_coeff().cloned().unwrap();
        let b = basis(v, work_order);
        rest = rest.sub(&b.scale(&c));
        out.insert(v, c);
    }
    out
}

/// Coefficients `c_k` of `f = Σ_k c_k (z⁻¹|σ^s α)^k` for `k ≥ k_min`.
///
/// Only the terms `k ≥ k_min` are produced; the caller is responsible for
/// the tail being irrelevant at `f`'s precision.
pub fn to_shifted_basis(f: &LaurentSeries, s: i64, k_min: i64) -> BTreeMap<i64, Poly> {
    peel_triangular(f, |v, order| shifted_power(-v, s, order), -k_min)
        .into_iter()
        .map(|(v, c)| (-v, c))
        .collect()
}

/// Rebuilds `Σ_k c_k (z⁻¹|σ^s α)^k` through `z^order`.
pub fn from_shifted_basis(coeffs: &BTreeMap<i64, Poly>, s: i64, order: i64) -> LaurentSeries {
    coeffs
        .iter()
        .fold(LaurentSeries::zero(Some(order)), |acc, (&k, c)| {
            acc.add(&shifted_power(k, s, order).scale(c))
        })
}
