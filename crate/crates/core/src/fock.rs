//! Fermionic Fock space with [`Poly`] coefficients: charged Maya diagrams,
//! the Clifford generators `ψ_i`, `ψ_j*`, and the deformed currents
//! `J_k` with matrix entries `A_ij^k`.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::{shifted_power, LaurentSeries};
use crate::polyring::{e_neg_alpha_open, h_alpha_closed, Poly};

pub use crate::partition::Partition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FockError {
    #[error("window [{lo}, {hi}] does not cover the nontrivial part of the configuration")]
    WindowTooSmall { lo: i64, hi: i64 },
    #[error("J_0 not supported")]
    ZeroCurrent,
    #[error("cocycle window {window} is smaller than the support band {band}")]
    CocycleWindow { window: i64, band: i64 },
}

/// Basis ket `|λ⟩_m`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct KetKey {
    pub charge: i64,
    pub partition: Partition,
}

impl KetKey {
    pub fn new(partition: Partition, charge: i64) -> Self {
        KetKey { charge, partition }
    }

    /// Position of the `k`-th particle (1-based): `λ_k - k + 1 + m`.
    pub fn particle(&self, k: usize) -> i64 {
        self.partition.part(k) as i64 - k as i64 + 1 + self.charge
    }

    /// Every site at or below this one is occupied.
    pub fn sea_level(&self) -> i64 {
        self.charge - self.partition.len() as i64
    }
}

/// Occupied sites of a ket within `[lo, hi]`. The window must reach down to
/// the sea level and up to the first particle.
pub fn maya_positions(key: &KetKey, lo: i64, hi: i64) -> Result<BTreeSet<i64>, FockError> {
    if lo > key.sea_level() || hi < key.particle(1) {
        return Err(FockError::WindowTooSmall { lo, hi });
    }
    let mut out = BTreeSet::new();
    let mut k = 1;
    loop {
        let p = key.particle(k);
        if p < lo {
            break;
        }
        out.insert(p);
        k += 1;
    }
    Ok(out)
}

/// Occupied sites above a floor; everything at or below the floor is filled.
#[derive(Clone, Debug)]
struct Maya {
    floor: i64,
    /// strictly decreasing
    occ: Vec<i64>,
}

impl Maya {
    fn from_key(key: &KetKey, margin: i64) -> Maya {
        let floor = key.sea_level() - margin.max(0) - 1;
        let mut occ = Vec::new();
        let mut k = 1;
        loop {
            let p = key.particle(k);
            if p <= floor {
                break;
            }
            occ.push(p);
            k += 1;
        }
        Maya { floor, occ }
    }

    fn to_key(&self) -> KetKey {
        let charge = self.floor + self.occ.len() as i64;
        let parts: Vec<u32> = self
            .occ
            .iter()
            .enumerate()
            .map(|(idx, &p)| (p + idx as i64 - charge) as u32)
            .collect();
        KetKey::new(
            Partition::new(parts).expect("Maya diagram yields a partition"),
            charge,
        )
    }

    fn occupied(&self, i: i64) -> bool {
        i <= self.floor || self.occ.contains(&i)
    }

    fn count_above(&self, i: i64) -> usize {
        debug_assert!(i > self.floor);
        self.occ.iter().take_while(|&&p| p > i).count()
    }

    /// Number of occupied sites strictly between `a` and `b`.
    fn count_between(&self, a: i64, b: i64) -> usize {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        debug_assert!(lo >= self.floor);
        self.occ.iter().filter(|&&p| p > lo && p < hi).count()
    }

    fn insert(&mut self, i: i64) {
        let pos = self
            .occ
            .iter()
            .position(|&p| p < i)
            .unwrap_or(self.occ.len());
        self.occ.insert(pos, i);
    }

    fn remove(&mut self, i: i64) {
        self.occ.retain(|&p| p != i);
    }

    fn lowest_hole(&self) -> i64 {
        let mut i = self.floor + 1;
        while self.occ.contains(&i) {
            i += 1;
        }
        i
    }
}

fn sign(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Finite linear combination of kets with polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FockVector {
    entries: BTreeMap<KetKey, Poly>,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector::default()
    }

    pub fn ket(partition: Partition, charge: i64) -> Self {
        let mut v = FockVector::zero();
        v.add_term(KetKey::new(partition, charge), Poly::one());
        v
    }

    /// `|∅⟩_0`.
    pub fn vacuum() -> Self {
        FockVector::ket(Partition::empty(), 0)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &BTreeMap<KetKey, Poly> {
        &self.entries
    }

    pub fn coeff(&self, key: &KetKey) -> Poly {
        self.entries.get(key).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, key: KetKey, c: Poly) {
        if c.is_zero() {
            return;
        }
        match self.entries.get_mut(&key) {
            Some(old) => {
                *old += &c;
                if old.is_zero() {
                    self.entries.remove(&key);
                }
            }
            None => {
                self.entries.insert(key, c);
            }
        }
    }

    pub fn add(&self, other: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (k, c) in &other.entries {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FockVector) -> FockVector {
        self.add(&other.scale(&Poly::constant(-1)))
    }

    pub fn scale(&self, c: &Poly) -> FockVector {
        let mut out = FockVector::zero();
        for (k, v) in &self.entries {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    fn map_kets<F>(&self, f: F) -> FockVector
    where
        F: Fn(&KetKey, &Poly, &mut FockVector),
    {
        let mut out = FockVector::zero();
        for (k, c) in &self.entries {
            f(k, c, &mut out);
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct KetJson {
    partition: Partition,
    charge: i64,
    coeff: Poly,
}

#[derive(Serialize, Deserialize)]
struct FockJson {
    kets: Vec<KetJson>,
}

impl Serialize for FockVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        FockJson {
            kets: self
                .entries
                .iter()
                .map(|(k, c)| KetJson {
                    partition: k.partition.clone(),
                    charge: k.charge,
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FockVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = FockJson::deserialize(d)?;
        let mut v = FockVector::zero();
        for k in raw.kets {
            v.add_term(KetKey::new(k.partition, k.charge), k.coeff);
        }
        Ok(v)
    }
}

/// `ψ_i`: inserts a particle at site `i` with sign `(-1)^{#particles above i}`.
pub fn psi_apply(i: i64, v: &FockVector) -> FockVector {
    v.map_kets(|key, c, out| {
        let mut maya = Maya::from_key(key, key.sea_level() - i + 1);
        if maya.occupied(i) {
            return;
        }
        let s = sign(maya.count_above(i));
        maya.insert(i);
        out.add_term(maya.to_key(), c.scale(s));
    })
}

/// `ψ_j*`: removes the particle at site `j` with sign `(-1)^{#particles above j}`.
pub fn psi_star_apply(j: i64, v: &FockVector) -> FockVector {
    v.map_kets(|key, c, out| {
        let mut maya = Maya::from_key(key, key.sea_level() - j + 1);
        if !maya.occupied(j) {
            return;
        }
        let s = sign(maya.count_above(j));
        maya.remove(j);
        out.add_term(maya.to_key(), c.scale(s));
    })
}

/// Matrix entry `A_ij^k` of `J_k`:
/// `e_{j-i-k}(-α_{(i,j)})` when `k > 0` and `j ≥ i + k`;
/// `h_{j-i-k}(α_{[j,i]})` when `k ≤ 0` and `j ≤ i ≤ j - k`; zero otherwise.
pub fn current_entry(i: i64, j: i64, k: i64) -> Poly {
    thread_local! {
        static CACHE: RefCell<HashMap<(i64, i64, i64), Poly>> = RefCell::new(HashMap::new());
    }
    if let Some(p) = CACHE.with(|c| c.borrow().get(&(i, j, k)).cloned()) {
        return p;
    }
    let p = current_entry_uncached(i, j, k);
    CACHE.with(|c| c.borrow_mut().insert((i, j, k), p.clone()));
    p
}

fn current_entry_uncached(i: i64, j: i64, k: i64) -> Poly {
    if k > 0 {
        if j >= i + k {
            e_neg_alpha_open(j - i - k, i, j)
        } else {
            Poly::zero()
        }
    } else if j <= i && i <= j - k {
        h_alpha_closed(j - i - k, j, i)
    } else {
        Poly::zero()
    }
}

/// `A_ij^k` as the residue of `z^{k-2} (z⁻¹|σ^i α)^{j-i-1}`.
pub fn current_entry_residue(i: i64, j: i64, k: i64) -> Poly {
    let order = 2 - k;
    let f = shifted_power(j - i - 1, i, order.max(0)).mul(&LaurentSeries::z_pow(k - 2));
    f.residue().expect("precision covers z^-1")
}

/// `J_k` on Fock space (`k ≠ 0`). For `k > 0` a particle at `j` moves down
/// to an empty site `i ≤ j - k`; for `k < 0` it moves up to an empty site
/// `i ∈ (j, j - k]`, and each ket also picks up the normal-ordered diagonal
/// `Σ_{occupied i > 0} α_i^{-k} - Σ_{empty i ≤ 0} α_i^{-k}`.
/// Off-diagonal moves carry `(-1)^{#particles strictly between i and j}`.
pub fn apply_current(k: i64, v: &FockVector) -> Result<FockVector, FockError> {
    if k == 0 {
        return Err(FockError::ZeroCurrent);
    }
    let reach = k.abs();
    Ok(v.map_kets(|key, c, out| {
        let maya = Maya::from_key(key, reach + 1);
        let hole = maya.lowest_hole();
        let mut particles: Vec<i64> = maya.occ.clone();
        particles.retain(|&j| {
            if k > 0 {
                j - k >= hole
            } else {
                j + reach >= hole
            }
        });
        for &j in &particles {
            let targets: Vec<i64> = if k > 0 {
                (hole..=(j - k)).collect()
            } else {
                ((j + 1)..=(j + reach)).collect()
            };
            for i in targets {
                if maya.occupied(i) {
                    continue;
                }
                let a = current_entry(i, j, k);
                if a.is_zero() {
                    continue;
                }
                let s = sign(maya.count_between(i, j));
                let mut moved = maya.clone();
                moved.remove(j);
                moved.insert(i);
                out.add_term(moved.to_key(), (&a * c).scale(s));
            }
        }
        if k < 0 {
            let d = diagonal_correction(&maya, reach as u32);
            out.add_term(key.clone(), &d * c);
        }
    }))
}

fn diagonal_correction(maya: &Maya, power: u32) -> Poly {
    let mut d = Poly::zero();
    for &p in &maya.occ {
        if p > 0 {
            d += &Poly::alpha(p).pow(power);
        }
    }
    for i in (maya.floor + 1)..=0 {
        if !maya.occupied(i) {
            d -= &Poly::alpha(i).pow(power);
        }
    }
    d
}

/// `Σ_a A_{p,a}^k A_{a,q}^ℓ` over the band
/// `[min(p,q) - |k| - |ℓ|, max(p,q) + |k| + |ℓ|]`, which contains the support.
pub fn compose_current_entry(p: i64, q: i64, k: i64, l: i64) -> Poly {
    let w = k.abs() + l.abs();
    let lo = p.min(q) - w;
    let hi = p.max(q) + w;
    (lo..=hi)
        .map(|a| &current_entry(p, a, k) * &current_entry(a, q, l))
        .sum()
}

/// The cocycle `φ(J_k, J_ℓ)` summed over `i ∈ [1-w, 0]`, `j ∈ [1, w]`:
/// `Σ A_ij^k A_ji^ℓ - Σ A_ji^k A_ij^ℓ`.
pub fn cocycle_currents(k: i64, l: i64, window: i64) -> Result<Poly, FockError> {
    let band = k.abs().max(l.abs());
    if window < band {
        return Err(FockError::CocycleWindow { window, band });
    }
    let mut total = Poly::zero();
    for i in (1 - window)..=0 {
        for j in 1..=window {
            total += &(&current_entry(i, j, k) * &current_entry(j, i, l));
            total -= &(&current_entry(j, i, k) * &current_entry(i, j, l));
        }
    }
    Ok(total)
}

/// Coefficient table of `⟨∅|ψ(z)ψ*(w)|∅⟩ = w⁻¹ Σ_{a≥0} (w⁻¹|α)^{-a-1} / (z⁻¹|α)^{-a}`:
/// entry `(b, q)` is the coefficient of `w^b z^{-q}`, for `b, q ∈ [0, n]`.
pub fn vacuum_pairing_table(n: usize) -> Vec<Vec<Poly>> {
    let n_i = n as i64;
    let mut table = vec![vec![Poly::zero(); n + 1]; n + 1];
    for a in 0..=n_i {
        // w-factor has valuation a; z-factor is (z⁻¹|σ^{-a}α)^a
        let wf = shifted_power(-a - 1, 0, n_i + 1).shift(-1);
        let zf = shifted_power(a, -a, 0);
        fill_table(&mut table, &wf, |q| zf.coeff(-q).unwrap_or_default(), n_i);
    }
    table
}

/// Coefficient table of `⟨∅|ψ*(w)ψ(z)|∅⟩ = Σ_{a≥1} w⁻¹ (w⁻¹|α)^{a-1} / (z⁻¹|α)^a`:
/// entry `(b, q)` is the coefficient of `z^b w^{-q}`.
pub fn vacuum_pairing_table_dual(n: usize) -> Vec<Vec<Poly>> {
    let n_i = n as i64;
    let mut table = vec![vec![Poly::zero(); n + 1]; n + 1];
    for a in 1..=n_i {
        let zf = shifted_power(-a, a, n_i);
        let wf = shifted_power(a - 1, 0, 0).shift(-1);
        fill_table(&mut table, &zf, |q| wf.coeff(-q).unwrap_or_default(), n_i);
    }
    table
}

fn fill_table<F: Fn(i64) -> Poly>(
    table: &mut [Vec<Poly>],
    series: &LaurentSeries,
    poly_coeff: F,
    n: i64,
) {
    for b in 0..=n {
        let sb = series.coeff(b).expect("order covers the table");
        if sb.is_zero() {
            continue;
        }
        for q in 0..=n {
            let pq = poly_coeff(q);
            if pq.is_zero() {
                continue;
            }
            table[b as usize][q as usize] += &(&sb * &pq);
        }
    }
}
