//! Sparse multivariate polynomials over the integers in the variable families
//! `α_i` (`i ∈ ℤ`), `x_i`, `y_i` (`i ≥ 1`), together with the parameter
//! automorphisms `σ: α_i ↦ α_{i+1}` and `ι: α_i ↦ α_{1-i}` and the elementary
//! and complete homogeneous symmetric polynomials of explicit variable lists.
//!
//! A fourth family `h_m` (`m ≥ 1`) stands for the algebraically independent
//! complete supersymmetric functions `h_m(x/y)` of infinitely many variables;
//! it is used by [`crate::symfunc::SuperContext::Free`].

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable {kind:?}_{index} requires index >= 1")]
    BadIndex { kind: VarKind, index: i64 },
    #[error("cyclic substitution: the value assigned to {0} mentions an assigned variable")]
    CyclicSubstitution(Var),
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("divisor must have unit leading coefficient in {0}")]
    NonUnitDivisor(Var),
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}

/// Variable family. The derived order (`Alpha < X < Y < H`) is the canonical
/// variable order used for monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarKind {
    Alpha,
    X,
    Y,
    /// Free generator `h_m(x/y)` of the supersymmetric function ring.
    H,
}

impl VarKind {
    fn tag(self) -> &'static str {
        match self {
            VarKind::Alpha => "a",
            VarKind::X => "x",
            VarKind::Y => "y",
            VarKind::H => "h",
        }
    }

    fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "a" => Some(VarKind::Alpha),
            "x" => Some(VarKind::X),
            "y" => Some(VarKind::Y),
            "h" => Some(VarKind::H),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    kind: VarKind,
    index: i64,
}

impl Var {
    pub fn new(kind: VarKind, index: i64) -> Result<Self, PolyError> {
        if kind != VarKind::Alpha && index < 1 {
            return Err(PolyError::BadIndex { kind, index });
        }
        Ok(Var { kind, index })
    }

    pub fn alpha(index: i64) -> Self {
        Var {
            kind: VarKind::Alpha,
            index,
        }
    }

    /// # Panics
    /// If `index < 1`.
    pub fn x(index: i64) -> Self {
        Var::new(VarKind::X, index).expect("x index must be >= 1")
    }

    /// # Panics
    /// If `index < 1`.
    pub fn y(index: i64) -> Self {
        Var::new(VarKind::Y, index).expect("y index must be >= 1")
    }

    /// # Panics
    /// If `index < 1`.
    pub fn h(index: i64) -> Self {
        Var::new(VarKind::H, index).expect("h index must be >= 1")
    }

    pub fn kind(&self) -> VarKind {
        self.kind
    }

    pub fn index(&self) -> i64 {
        self.index
    }

    pub fn latex(&self) -> String {
        match self.kind {
            VarKind::Alpha => format!("\\alpha_{{{}}}", self.index),
            VarKind::X => format!("x_{{{}}}", self.index),
            VarKind::Y => format!("y_{{{}}}", self.index),
            VarKind::H => format!("h_{{{}}}", self.index),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            VarKind::Alpha => "α",
            VarKind::X => "x",
            VarKind::Y => "y",
            VarKind::H => "h",
        };
        if (0..10).contains(&self.index) {
            write!(f, "{}_{}", name, self.index)
        } else {
            write!(f, "{}_{{{}}}", name, self.index)
        }
    }
}

/// A variable with a sign, used for symmetric polynomials of lists such as
/// `(-α_1, -α_2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedVar {
    pub var: Var,
    pub negated: bool,
}

impl SignedVar {
    pub fn plus(var: Var) -> Self {
        SignedVar {
            var,
            negated: false,
        }
    }

    pub fn minus(var: Var) -> Self {
        SignedVar { var, negated: true }
    }

    pub fn to_poly(self) -> Poly {
        let p = Poly::var(self.var);
        if self.negated {
            -p
        } else {
            p
        }
    }
}

/// `α_{i+1}, …, α_{j-1}` (empty when `j <= i + 1`).
pub fn alpha_open(i: i64, j: i64) -> Vec<Var> {
    ((i + 1)..j).map(Var::alpha).collect()
}

/// `α_i, …, α_j` (empty when `j < i`).
pub fn alpha_closed(i: i64, j: i64) -> Vec<Var> {
    (i..=j).map(Var::alpha).collect()
}

pub fn signed(vars: &[Var], negated: bool) -> Vec<SignedVar> {
    vars.iter().map(|&var| SignedVar { var, negated }).collect()
}

/// Product of variable powers, variables strictly increasing, exponents > 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[(Var, u32); 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var) -> Self {
        let mut s = SmallVec::new();
        s.push((v, 1));
        Monomial(s)
    }

    /// Builds a monomial from arbitrary `(var, exp)` pairs, merging repeats
    /// and dropping zero exponents.
    pub fn from_pairs<I: IntoIterator<Item = (Var, u32)>>(pairs: I) -> Self {
        let mut v: Vec<(Var, u32)> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        v.sort_by_key(|p| p.0);
        let mut out: SmallVec<[(Var, u32); 4]> = SmallVec::new();
        for (var, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == var => last.1 += e,
                _ => out.push((var, e)),
            }
        }
        Monomial(out)
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|p| p.1).sum()
    }

    pub fn degree_in(&self, kind: VarKind) -> u32 {
        self.0
            .iter()
            .filter(|p| p.0.kind == kind)
            .map(|p| p.1)
            .sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.iter().find(|p| p.0 == v).map(|p| p.1).unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out: SmallVec<[(Var, u32); 4]> = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Removes `v^e`; `None` if the exponent of `v` is smaller than `e`.
    fn without(&self, v: Var, e: u32) -> Option<Monomial> {
        if e == 0 {
            return Some(self.clone());
        }
        let mut out = self.0.clone();
        let pos = out.iter().position(|p| p.0 == v)?;
        match out[pos].1.cmp(&e) {
            Ordering::Less => None,
            Ordering::Equal => {
                out.remove(pos);
                Some(Monomial(out))
            }
            Ordering::Greater => {
                out[pos].1 -= e;
                Some(Monomial(out))
            }
        }
    }
}

/// Graded lexicographic order: total degree first, then the monomial with the
/// larger exponent on the earliest differing variable is larger.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let d = self.degree().cmp(&other.degree());
        if d != Ordering::Equal {
            return d;
        }
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            if a.0 != b.0 {
                // the side holding the smaller variable has the larger exponent there
                return if a.0 < b.0 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
            if a.1 != b.1 {
                return a.1.cmp(&b.1);
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in canonical form: terms sorted by decreasing monomial order,
/// no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, BigInt)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        let c = c.into();
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(Monomial::one(), c)],
            }
        }
    }

    pub fn var(v: Var) -> Self {
        Poly {
            terms: vec![(Monomial::var(v), BigInt::one())],
        }
    }

    pub fn alpha(i: i64) -> Self {
        Poly::var(Var::alpha(i))
    }

    pub fn x(i: i64) -> Self {
        Poly::var(Var::x(i))
    }

    pub fn y(i: i64) -> Self {
        Poly::var(Var::y(i))
    }

    pub fn monomial<T: Into<BigInt>>(m: Monomial, c: T) -> Self {
        Poly::from_terms(vec![(m, c.into())])
    }

    /// Collects arbitrary terms into canonical form.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(terms: I) -> Self {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(BigInt::zero) += c;
        }
        Poly::from_map(acc)
    }

    fn from_map(acc: HashMap<Monomial, BigInt>) -> Self {
        let mut terms: Vec<(Monomial, BigInt)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The constant value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn as_i64(&self) -> Option<i64> {
        self.as_constant().and_then(|c| c.to_i64())
    }

    pub fn constant_term(&self) -> BigInt {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigInt::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    /// `Some(d)` when every term has degree `d` in the given family.
    pub fn homogeneous_degree_in(&self, kind: VarKind) -> Option<u32> {
        let mut it = self.terms.iter().map(|(m, _)| m.degree_in(kind));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms
            .iter()
            .flat_map(|(m, _)| m.factors().iter().map(|p| p.0))
            .collect()
    }

    pub fn scale<T: Into<BigInt>>(&self, c: T) -> Poly {
        let c = c.into();
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * &c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    fn add_impl(&self, other: &Poly, negate_other: bool) -> Poly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_other {
                        -&b[j].1
                    } else {
                        b[j].1.clone()
                    };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate_other { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Poly { terms: out }
    }

    fn mul_impl(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                match acc.get_mut(&m) {
                    Some(c) => *c += ca * cb,
                    None => {
                        acc.insert(m, ca * cb);
                    }
                }
            }
        }
        Poly::from_map(acc)
    }

    /// Applies a variable renaming (need not be injective).
    pub fn map_vars<F: Fn(Var) -> Var>(&self, f: F) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| {
            (
                Monomial::from_pairs(m.factors().iter().map(|&(v, e)| (f(v), e))),
                c.clone(),
            )
        }))
    }

    /// `σ^m`: `α_i ↦ α_{i+m}`; `x`, `y` untouched.
    pub fn shift_alpha(&self, m: i64) -> Poly {
        if m == 0 {
            return self.clone();
        }
        self.map_vars(|v| match v.kind {
            VarKind::Alpha => Var::alpha(v.index + m),
            _ => v,
        })
    }

    /// `ι`: `α_i ↦ α_{1-i}`.
    pub fn iota_alpha(&self) -> Poly {
        self.map_vars(|v| match v.kind {
            VarKind::Alpha => Var::alpha(1 - v.index),
            _ => v,
        })
    }

    /// Simultaneous substitution. A variable may be mapped to itself, but no
    /// value may mention another assigned variable.
    pub fn specialize(&self, assignment: &HashMap<Var, Poly>) -> Result<Poly, PolyError> {
        for (v, value) in assignment {
            for w in value.variables() {
                if let Some(img) = assignment.get(&w) {
                    let fixed = *img == Poly::var(w);
                    if !fixed {
                        return Err(PolyError::CyclicSubstitution(*v));
                    }
                }
            }
        }
        if assignment.is_empty() {
            return Ok(self.clone());
        }
        let mut power_cache: HashMap<(Var, u32), Poly> = HashMap::new();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut factor = Poly::constant(c.clone());
            for &(v, e) in m.factors() {
                match assignment.get(&v) {
                    Some(value) => {
                        let p = power_cache
                            .entry((v, e))
                            .or_insert_with(|| value.pow(e))
                            .clone();
                        factor = &factor * &p;
                        if factor.is_zero() {
                            break;
                        }
                    }
                    None => kept.push((v, e)),
                }
            }
            if factor.is_zero() {
                continue;
            }
            out += &(&factor * &Poly::monomial(Monomial::from_pairs(kept), 1));
        }
        Ok(out)
    }

    /// `α_i ↦ -α_i` for every `i`.
    pub fn negate_alpha(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let c = if m.degree_in(VarKind::Alpha) % 2 == 1 {
                        -c
                    } else {
                        c.clone()
                    };
                    (m.clone(), c)
                })
                .collect(),
        }
    }

    /// Sets every `α_i` to zero.
    pub fn alpha_to_zero(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree_in(VarKind::Alpha) == 0)
                .cloned()
                .collect(),
        }
    }

    /// Degree of `v` in this polynomial.
    pub fn degree_in_var(&self, v: Var) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.exponent(v))
            .max()
            .unwrap_or(0)
    }

    /// Coefficient of `v^e` when viewed as a polynomial in `v`.
    pub fn coeff_of_power(&self, v: Var, e: u32) -> Poly {
        Poly::from_terms(self.terms.iter().filter_map(|(m, c)| {
            if m.exponent(v) == e {
                m.without(v, e).map(|mm| (mm, c.clone()))
            } else {
                None
            }
        }))
    }

    /// Exact division by `divisor`, treating both as univariate in `v` over
    /// the remaining variables. The divisor's leading coefficient in `v` must
    /// be `±1`.
    pub fn div_exact_in(&self, divisor: &Poly, v: Var) -> Result<Poly, PolyError> {
        let dd = divisor.degree_in_var(v);
        let lead = divisor.coeff_of_power(v, dd);
        let lead_sign = match lead.as_constant() {
            Some(c) if c.abs().is_one() => c,
            _ => return Err(PolyError::NonUnitDivisor(v)),
        };
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        loop {
            if rem.is_zero() {
                return Ok(quot);
            }
            let rd = rem.degree_in_var(v);
            if rd < dd {
                return Err(PolyError::InexactDivision);
            }
            let top = rem.coeff_of_power(v, rd).scale(lead_sign.clone());
            let step = &top * &Poly::monomial(Monomial::from_pairs([(v, rd - dd)]), 1);
            rem = &rem - &(&step * divisor);
            quot += &step;
        }
    }

    pub fn latex(&self) -> String {
        render(self, true)
    }

    /// Splits off factors of the form `u`, `u + v` and `u - v` in the
    /// variables of `self` by trial division. Returns the factors found,
    /// in canonical order, and the remaining cofactor.
    pub fn linear_factors(&self) -> (Vec<Poly>, Poly) {
        let mut rest = self.clone();
        let mut found = Vec::new();
        if rest.is_zero() {
            return (found, rest);
        }
        let vars: Vec<Var> = rest.variables().into_iter().collect();
        let mut candidates: Vec<(Poly, Var)> = vars.iter().map(|&u| (Poly::var(u), u)).collect();
        for (i, &u) in vars.iter().enumerate() {
            for &v in &vars[i + 1..] {
                candidates.push((&Poly::var(v) + &Poly::var(u), v));
                candidates.push((&Poly::var(v) - &Poly::var(u), v));
            }
        }
        for (cand, v) in &candidates {
            while rest.degree().unwrap_or(0) > 0 {
                match rest.div_exact_in(cand, *v) {
                    Ok(q) => {
                        found.push(cand.clone());
                        rest = q;
                    }
                    Err(_) => break,
                }
            }
        }
        found.sort_by_key(|p| p.to_string());
        (found, rest)
    }

    /// Product form from [`Poly::linear_factors`], e.g. `(x_1 + y_1) (x_1 - α_0)`.
    pub fn factored(&self, latex: bool) -> String {
        let (factors, rest) = self.linear_factors();
        let show = |p: &Poly| if latex { p.latex() } else { p.to_string() };
        let mut parts: Vec<String> = Vec::new();
        match rest.as_i64() {
            Some(1) => {}
            Some(-1) => parts.push("-".to_string()),
            _ => parts.push(format!("({})", show(&rest))),
        }
        parts.extend(factors.iter().map(|f| {
            if f.num_terms() == 1 {
                show(f)
            } else {
                format!("({})", linear_form(f, latex))
            }
        }));
        if parts.is_empty() {
            return "1".to_string();
        }
        let joined = parts.join(" ");
        joined.replacen("- ", "-", usize::from(joined.starts_with("- ")))
    }
}

/// `x_1 - α_0` rather than `-α_0 + x_1`: α terms last, positive terms first.
fn linear_form(p: &Poly, latex: bool) -> String {
    let mut terms: Vec<(Var, bool)> = p
        .terms
        .iter()
        .map(|(m, c)| (m.factors()[0].0, c.is_negative()))
        .collect();
    terms.sort_by_key(|&(v, neg)| (v.kind == VarKind::Alpha, neg, v));
    let mut out = String::new();
    for (i, (v, neg)) in terms.iter().enumerate() {
        let name = if latex { v.latex() } else { v.to_string() };
        match (i, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&name);
    }
    out
}

fn render(p: &Poly, latex: bool) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (m, c)) in p.terms.iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono: Vec<String> = m
            .factors()
            .iter()
            .map(|&(v, e)| {
                let base = if latex { v.latex() } else { v.to_string() };
                match (e, latex) {
                    (1, _) => base,
                    (_, true) => format!("{}^{{{}}}", base, e),
                    (_, false) => format!("{}^{}", base, e),
                }
            })
            .collect();
        if m.is_one() {
            out.push_str(&abs.to_string());
        } else {
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                if !latex {
                    out.push('*');
                }
            }
            out.push_str(&mono.join(if latex { " " } else { "*" }));
        }
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, false))
    }
}

impl From<Var> for Poly {
    fn from(v: Var) -> Self {
        Poly::var(v)
    }
}

impl From<i64> for Poly {
    fn from(c: i64) -> Self {
        Poly::constant(c)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        self.add_impl(rhs, false)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        self.add_impl(rhs, true)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        self.mul_impl(rhs)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -(self.clone())
    }
}

impl<'a> AddAssign<&'a Poly> for Poly {
    fn add_assign(&mut self, rhs: &'a Poly) {
        if rhs.is_zero() {
            return;
        }
        *self = self.add_impl(rhs, false);
    }
}

impl<'a> SubAssign<&'a Poly> for Poly {
    fn sub_assign(&mut self, rhs: &'a Poly) {
        if rhs.is_zero() {
            return;
        }
        *self = self.add_impl(rhs, true);
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for p in iter {
            for (m, c) in p.terms {
                *acc.entry(m).or_insert_with(BigInt::zero) += c;
            }
        }
        Poly::from_map(acc)
    }
}

impl std::iter::Product for Poly {
    fn product<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::one(), |acc, p| &acc * &p)
    }
}

/// `e_k` of an arbitrary list of polynomials.
pub fn elem_sym_of(items: &[Poly], k: usize) -> Poly {
    if k > items.len() {
        return Poly::zero();
    }
    let mut e = vec![Poly::zero(); k + 1];
    e[0] = Poly::one();
    for (n, item) in items.iter().enumerate() {
        for j in (1..=k.min(n + 1)).rev() {
            let add = &e[j - 1] * item;
            e[j] += &add;
        }
    }
    e.swap_remove(k)
}

/// `h_k` of an arbitrary list of polynomials.
pub fn homog_sym_of(items: &[Poly], k: usize) -> Poly {
    if k == 0 {
        return Poly::one();
    }
    let mut h = vec![Poly::zero(); k + 1];
    h[0] = Poly::one();
    for item in items {
        for j in 1..=k {
            let add = &h[j - 1] * item;
            h[j] += &add;
        }
    }
    h.swap_remove(k)
}

/// Elementary symmetric polynomial `e_k` of a signed variable multiset.
pub fn elem_sym(vars: &[SignedVar], k: usize) -> Poly {
    let mut terms = Vec::new();
    let mut chosen = Vec::with_capacity(k);
    fn rec(
        vars: &[SignedVar],
        start: usize,
        k: usize,
        chosen: &mut Vec<SignedVar>,
        out: &mut Vec<(Monomial, BigInt)>,
    ) {
        if chosen.len() == k {
            out.push(signed_monomial(chosen));
            return;
        }
        let need = k - chosen.len();
        for idx in start..=(vars.len() - need) {
            chosen.push(vars[idx]);
            rec(vars, idx + 1, k, chosen, out);
            chosen.pop();
        }
    }
    if k > vars.len() {
        return Poly::zero();
    }
    rec(vars, 0, k, &mut chosen, &mut terms);
    Poly::from_terms(terms)
}

/// Complete homogeneous symmetric polynomial `h_k` of a signed variable multiset.
pub fn homog_sym(vars: &[SignedVar], k: usize) -> Poly {
    let mut terms = Vec::new();
    let mut chosen = Vec::with_capacity(k);
    fn rec(
        vars: &[SignedVar],
        start: usize,
        k: usize,
        chosen: &mut Vec<SignedVar>,
        out: &mut Vec<(Monomial, BigInt)>,
    ) {
        if chosen.len() == k {
            out.push(signed_monomial(chosen));
            return;
        }
        for idx in start..vars.len() {
            chosen.push(vars[idx]);
            rec(vars, idx, k, chosen, out);
            chosen.pop();
        }
    }
    if k == 0 {
        return Poly::one();
    }
    rec(vars, 0, k, &mut chosen, &mut terms);
    Poly::from_terms(terms)
}

fn signed_monomial(chosen: &[SignedVar]) -> (Monomial, BigInt) {
    let negs = chosen.iter().filter(|s| s.negated).count();
    let c = if negs % 2 == 0 { 1 } else { -1 };
    (
        Monomial::from_pairs(chosen.iter().map(|s| (s.var, 1))),
        BigInt::from(c),
    )
}

/// `e_k(-α_{(i,j)}) = e_k(-α_{i+1}, …, -α_{j-1})`; zero for negative `k`.
pub fn e_neg_alpha_open(k: i64, i: i64, j: i64) -> Poly {
    if k < 0 {
        return Poly::zero();
    }
    elem_sym(&signed(&alpha_open(i, j), true), k as usize)
}

/// `h_k(α_{[i,j]}) = h_k(α_i, …, α_j)`; zero for negative `k`.
pub fn h_alpha_closed(k: i64, i: i64, j: i64) -> Poly {
    if k < 0 {
        return Poly::zero();
    }
    homog_sym(&signed(&alpha_closed(i, j), false), k as usize)
}

// ---------------------------------------------------------------- JSON

#[derive(Serialize, Deserialize)]
struct TermJson {
    c: String,
    m: Vec<(String, i64, u32)>,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    terms: Vec<TermJson>,
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    c: c.to_string(),
                    m: m.factors()
                        .iter()
                        .map(|&(v, e)| (v.kind.tag().to_string(), v.index, e))
                        .collect(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PolyJson::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let c: BigInt =
                t.c.parse()
                    .map_err(|_| D::Error::custom(format!("bad coefficient {:?}", t.c)))?;
            let mut pairs = Vec::new();
            for (tag, index, e) in t.m {
                let kind = VarKind::from_tag(&tag)
                    .ok_or_else(|| D::Error::custom(format!("unknown variable tag {tag:?}")))?;
                let var = Var::new(kind, index).map_err(D::Error::custom)?;
                pairs.push((var, e));
            }
            terms.push((Monomial::from_pairs(pairs), c));
        }
        Ok(Poly::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: i64) -> Poly {
        Poly::alpha(i)
    }

    #[test]
    fn additive_inverse() {
        assert!((&a(1) + &(-a(1))).is_zero());
    }

    #[test]
    fn product_of_linear_factors() {
        let x1 = Poly::x(1);
        let lhs = &(&x1 - &a(0)) * &(&x1 - &a(1));
        let rhs = &(&x1.pow(2) - &(&(&a(0) + &a(1)) * &x1)) + &(&a(0) * &a(1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn shift_and_iota_examples() {
        assert_eq!((&a(0) * &a(2)).shift_alpha(1), &a(1) * &a(3));
        assert_eq!((&Poly::x(1) - &a(1)).shift_alpha(-1), &Poly::x(1) - &a(0));
        assert_eq!(a(0).iota_alpha(), a(1));
        assert_eq!(a(1).iota_alpha(), a(0));
        assert_eq!((&a(-2) + &a(3)).iota_alpha(), &a(3) + &a(-2));
    }

    #[test]
    fn symmetric_polynomial_examples() {
        let l = signed(&[Var::alpha(1), Var::alpha(2)], true);
        assert_eq!(elem_sym(&l, 1), -(&a(1) + &a(2)));
        assert!(elem_sym(&[], 2).is_zero());
        assert!(elem_sym(&[], 0).is_one());
        let l = signed(&[Var::alpha(0), Var::alpha(1)], false);
        let expect = &(&a(0).pow(2) + &(&a(0) * &a(1))) + &a(1).pow(2);
        assert_eq!(homog_sym(&l, 2), expect);
        assert_eq!(homog_sym(&signed(&[Var::alpha(5)], false), 4), a(5).pow(4));
        assert!(homog_sym(&[], 3).is_zero());
        assert!(homog_sym(&[], 0).is_one());
        assert_eq!(h_alpha_closed(3, 1, 1), a(1).pow(3));
        assert_eq!(e_neg_alpha_open(2, 0, 3), &a(1) * &a(2));
    }

    #[test]
    fn specialize_examples() {
        let p = &Poly::x(1) - &a(0);
        let mut asg = HashMap::new();
        asg.insert(Var::alpha(0), Poly::zero());
        assert_eq!(p.specialize(&asg).unwrap(), Poly::x(1));
        assert_eq!(p.specialize(&HashMap::new()).unwrap(), p);

        let mut cyc = HashMap::new();
        cyc.insert(Var::alpha(0), a(1));
        cyc.insert(Var::alpha(1), a(0));
        assert!(matches!(
            p.specialize(&cyc),
            Err(PolyError::CyclicSubstitution(_))
        ));

        // collapsing every parameter onto α_0 is allowed
        let mut collapse = HashMap::new();
        collapse.insert(Var::alpha(0), a(0));
        collapse.insert(Var::alpha(1), a(0));
        assert_eq!((&a(0) - &a(1)).specialize(&collapse).unwrap(), Poly::zero());
    }

    #[test]
    fn x_index_must_be_positive() {
        assert!(Var::new(VarKind::X, 0).is_err());
        assert!(Var::new(VarKind::Y, -1).is_err());
        assert!(Var::new(VarKind::Alpha, -7).is_ok());
    }

    #[test]
    fn canonical_order_is_graded() {
        let p = &(&Poly::x(1) + &a(0).pow(2)) + &Poly::one();
        let degrees: Vec<u32> = p.terms().iter().map(|(m, _)| m.degree()).collect();
        assert_eq!(degrees, vec![2, 1, 0]);
        // α before x in the variable order
        let q = &a(5) + &Poly::x(1);
        assert_eq!(q.terms()[0].0, Monomial::var(Var::alpha(5)));
    }

    #[test]
    fn exact_division() {
        let x1 = Var::x(1);
        let f = &(&Poly::x(1) - &Poly::x(2)) * &(&Poly::x(1) + &a(3));
        let q = f.div_exact_in(&(&Poly::x(1) - &Poly::x(2)), x1).unwrap();
        assert_eq!(q, &Poly::x(1) + &a(3));
        assert_eq!(
            (&Poly::x(1) + &Poly::one()).div_exact_in(&(&Poly::x(1) - &Poly::x(2)), x1),
            Err(PolyError::InexactDivision)
        );
    }

    #[test]
    fn json_shape() {
        let p = &(&a(-1) * &Poly::x(2)).scale(3) - &Poly::one();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"terms":[{"c":"3","m":[["a",-1,1],["x",2,1]]},{"c":"-1","m":[]}]}"#
        );
        let back: Poly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Poly>(r#"{"terms":[{"c":"1","m":[["x",0,1]]}]}"#).is_err());
    }

    #[test]
    fn rendering() {
        let p = &a(-1).pow(2) - &Poly::x(1).scale(2);
        assert_eq!(p.to_string(), "α_{-1}^2 - 2*x_1");
        assert_eq!(p.latex(), "\\alpha_{-1}^{2} - 2x_{1}");
    }
}
