//! Named identity suites. Each suite checks a family of exact identities over
//! a finite window and stops at the first counterexample.

use std::fmt::Display;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::expand::{
    horizontal_strips, hsymbol_evaluate, mn_multiply, pieri_e_expansion, pieri_h_coeff,
    pieri_h_expansion, raising_expansion, schur_cached, skew_pieri_coeff, vertical_strips,
    PieriKind, PieriMethod,
};
use crate::fock::{
    apply_current, cocycle_currents, compose_current_entry, current_entry, current_entry_residue,
    vacuum_pairing_table, vacuum_pairing_table_dual, FockVector,
};
use crate::laurent::{from_shifted_basis, shifted_power, to_shifted_basis, LaurentSeries};
use crate::partition::{Partition, SkewShape};
use crate::polyring::{
    alpha_closed, e_neg_alpha_open, h_alpha_closed, homog_sym, signed, Poly, Var, VarKind,
};
use crate::symfunc::{
    bialternant, classical_super, double_e, double_e_combinatorial, double_e_expansion, double_h,
    double_h_combinatorial, double_h_expansion, factorial_schur_jt, powersum_super, schur_double,
    schur_double_jt, schur_double_tableaux, Basis, SuperContext,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest partition size enumerated by the combinatorial suites.
    pub max_size: u32,
    /// Truncation order for formal series.
    pub order: i64,
    /// Index window for sums over lattice sites and α indices.
    pub window: i64,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_size: 5,
            order: 10,
            window: 8,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub case: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: usize,
    pub counterexample: Option<Counterexample>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

type Outcome = Result<(), Counterexample>;

#[derive(Default)]
struct Checker {
    cases: usize,
}

impl Checker {
    fn eq<T, F>(&mut self, case: F, lhs: T, rhs: T) -> Outcome
    where
        T: PartialEq + Display,
        F: FnOnce() -> String,
    {
        self.cases += 1;
        if lhs == rhs {
            Ok(())
        } else {
            Err(Counterexample {
                case: case(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            })
        }
    }

    /// Series equality through `order`.
    fn series<F: FnOnce() -> String>(
        &mut self,
        case: F,
        lhs: &LaurentSeries,
        rhs: &LaurentSeries,
        order: i64,
    ) -> Outcome {
        let (l, r) = (lhs.truncate(order), rhs.truncate(order));
        self.cases += 1;
        if l.sub(&r).is_zero() {
            Ok(())
        } else {
            Err(Counterexample {
                case: case(),
                lhs: l.to_string(),
                rhs: r.to_string(),
            })
        }
    }

    fn value<T, E: Display, F: FnOnce() -> String>(
        &mut self,
        case: F,
        r: Result<T, E>,
    ) -> Result<T, Counterexample> {
        r.map_err(|e| Counterexample {
            case: case(),
            lhs: format!("error: {e}"),
            rhs: "a value".to_string(),
        })
    }
}

type SuiteFn = fn(&VerifyConfig, &mut Checker) -> Outcome;

/// Suite names in execution order, with one-line descriptions.
pub const SUITES: &[(&str, &str)] = &[
    (
        "shifted-cob",
        "shifted-power changes of basis, round trips, z-multiplication and σ-action",
    ),
    (
        "orthonormality",
        "residue pairings of shifted powers, fixed and random index tuples",
    ),
    ("cocyclecase", "double h/e sum equals kδ_kℓ"),
    ("heidentity", "alternating h/e sum equals δ_ij"),
    ("product-cob", "composed changes of basis give δ_j0"),
    (
        "currents",
        "current matrix composition, inverse and residue formula",
    ),
    (
        "heisenberg",
        "Heisenberg relations on Fock vectors and the cocycle table",
    ),
    ("vacuum", "vacuum pairing tables"),
    ("double-gf", "generating series of double h and e"),
    (
        "eh-roundtrip",
        "classical/double expansions and combinatorial forms",
    ),
    ("shift-eh", "σ-shift recursions for double h and e"),
    ("omega", "ω on expansion coefficients"),
    (
        "schur-consistency",
        "Jacobi–Trudi h = e = tableaux, bialternant, ℓ-stability",
    ),
    (
        "mn",
        "p_k s_λ expansions against direct products, degree filtration",
    ),
    (
        "pieri",
        "closed = residue = direct product, dual Pieri, gating",
    ),
    ("skew-pieri", "ν = ∅ reduction and direct skew products"),
    ("raising", "raising-operator expansion equals Jacobi–Trudi"),
];

fn suite_fn(name: &str) -> Option<SuiteFn> {
    let f: SuiteFn = match name {
        "shifted-cob" => shifted_cob,
        "orthonormality" => orthonormality,
        "cocyclecase" => cocyclecase,
        "heidentity" => heidentity,
        "product-cob" => product_cob,
        "currents" => currents,
        "heisenberg" => heisenberg,
        "vacuum" => vacuum,
        "double-gf" => double_gf,
        "eh-roundtrip" => eh_roundtrip,
        "shift-eh" => shift_eh,
        "omega" => omega,
        "schur-consistency" => schur_consistency,
        "mn" => mn,
        "pieri" => pieri,
        "skew-pieri" => skew_pieri,
        "raising" => raising,
        _ => return None,
    };
    Some(f)
}

/// Runs one suite by name; `None` for an unknown name.
pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Option<SuiteReport> {
    let f = suite_fn(name)?;
    let mut c = Checker::default();
    let outcome = f(cfg, &mut c);
    Some(SuiteReport {
        suite: name.to_string(),
        cases: c.cases,
        counterexample: outcome.err(),
    })
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<SuiteReport> {
    SUITES
        .iter()
        .filter_map(|(name, _)| run_suite(name, cfg))
        .collect()
}

fn a(i: i64) -> Poly {
    Poly::alpha(i)
}

fn shifted_cob(cfg: &VerifyConfig, c: &mut Checker) -> Outcome {
    let n = cfg.order;
    for m in 1..=6i64 {
        let case = |what: &str| format!("{what}, m = {m}, order = {n}");
        let mut rhs = LaurentSeries::zero(None);
        for k in 0..=m {
            rhs = rhs.add(&shifted_power(k, 0, n).scale(&h_alpha_closed(m - k, 1, k + 1)));
        }
        c.series(
            || case("z^-m in shifted powers"),
            &LaurentSeries::z_pow(-m),
            &rhs,
            n,
        )?;

        let mut rhs = LaurentSeries::zero(None);
        for k in 0..=m {
            rhs = rhs.add(&LaurentSeries::z_pow(-k).scale(&e_neg_alpha_open(m - k, 0, m + 1)));
        }
        c.series(
            || case("(z^-1|α)^m in powers"),
            &shifted_power(m, 0, n),
            &rhs,
            n,
        )?;

        let mut rhs = LaurentSeries::zero(Some(n));
        for k in m..=n {
            rhs = rhs.add(&shifted_power(-k, 0, n).scale(&e_neg_alpha_open(k - m, 1 - k, 1)));
        }
        c.series(
            || case("z^m in shifted powers"),
            &LaurentSeries::z_pow(m),
            &rhs,
            n,
        )?;

        let mut rhs = LaurentSeries::zero(Some(n));
        for k in m..=n {
            rhs = rhs.add(&LaurentSeries::z_pow(k).scale(&h_alpha_closed(k - m, 1 - m, 0)));
        }
        c.series(
            || case("(z^-1|α)^-m in powers"),
            &shifted_power(-m, 0, n),
            &rhs,
            n,
        )?;
    }

    for s in -1..=1i64 {
        for j in -6..=6i64 {
            let f = LaurentSeries::z_pow(j).truncate(n);
            let back = from_shifted_basis(&to_shifted_basis(&f, s, -n), s, n);
            c.series(
                || format!("round trip of z^{j} through σ^{s}α, order {n}"),
                &back,
                &f,
                n,
            )?;
        }
        for k in -4..=4i64 {
            let f = shifted_power(k, 0, n);
            let back = from_shifted_basis(&to_shifted_basis(&f, s, -n), s, n);
            c.series(
                || format!("round trip of (z^-1|α)^{k} through σ^{s}α, order {n}"),
                &back,
                &f,
                n,
            )?;
        }
    }

    for k in -4..=4i64 {
        let lhs = shifted_power(k, 0, n + 1).shift(-1);
        let rhs = shifted_power(k + 1, 0, n).add(&shifted_power(k, 0, n).scale(&a(k + 1)));
        c.series(|| format!("z^-1 (z^-1|α)^{k}"), &lhs, &rhs, n)?;

        let lhs = shifted_power(k, 0, n).shift(1);
        let mut rhs = LaurentSeries::zero(Some(n));
        let mut coef = Poly::one();
        for m in 0..=(n + k) {
            rhs = rhs.add(&shifted_power(k - m - 1, 0, n).scale(&coef));
            coef = -&(&coef * &a(k - m));
        }
        c.series(|| format!("z (z^-1|α)^{k}"), &lhs, &rhs, n)?;
    }

    for k in -5..=5i64 {
        let lhs = shifted_power(k, -1, n);
        let rhs = shifted_power(k, 0, n).add(&shifted_power(k - 1, 0, n).scale(&(&a(k) - &a(0))));
        c.series(|| format!("(z^-1|σ^-1 α)^{k}"), &lhs, &rhs, n)?;

        let lhs = shifted_power(k, 0, n).mul(&shifted_power(-k, k, n));
        c.series(
            || format!("(z^-1|α)^{k} (z^-1|σ^{k} α)^{}", -k),
            &lhs,
            &LaurentSeries::one(),
            n - 5,
        )?;

        // 1/(z^-1|σ^s α)^k = (z^-1|σ^{s+k} α)^{-k}, checked just above
        let inv = |s: i64, k: i64| shifted_power(-k, s + k, n);
        let rhs = inv(0, k).add(&inv(0, k + 1).scale(&(&a(k + 1) - &a(1))));
        c.series(|| format!("1/(z^-1|σα)^{k}"), &inv(1, k), &rhs, n)?;
    }
    Ok(())
}

fn orthonormality(cfg: &VerifyConfig, c: &mut Checker) -> Outcome {
    let n = cfg.order;
    for big_n in -4..=4i64 {
        for k in -4..=4i64 {
            let f = shifted_power(big_n - k - 1, k, n).shift(-2);
            let r = c.value(|| format!("residue n = {big_n}, k = {k}"), f.residue())?;
            let want = Poly::constant((big_n == k) as i64);
            c.eq(
                || format!("∮ (z^-1|σ^{k} α)^{} dz/z², n = {big_n}", big_n - k - 1),
                r,
                want,
            )?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let w = cfg.window;
    for case in 0..200 {
        let k = rng.gen_range(0..=5usize);
        let idx: Vec<i64> = (0..k).map(|_| rng.gen_range(-w..=w)).collect();
        let f = idx
            .iter()
            .fold(LaurentSeries::one(), |acc, &i| {
                acc.mul(&LaurentSeries::new(-1, vec![Poly::one(), -a(i)], None))
            })
            .shift(-2);
        let r = c.value(|| format!("case {case}"), f.residue())?;
        c.eq(
            || format!("∮ ∏ (z^-1 - α_i) dz/z², i = {idx:?}"),
            r,
            Poly::zero(),
        )?;

        let k = rng.gen_range(1..=5usize);
        let kp = rng.gen_range(0..k);
        let den: Vec<i64> = (0..k).map(|_| rng.gen_range(-w..=w)).collect();
        let num: Vec<i64> = (0..kp).map(|_| rng.gen_range(-w..=w)).collect();
        let mut f = LaurentSeries::one();
        for &i in &num {
            f = f.mul(&LaurentSeries::new(-1, vec![Poly::one(), -a(i)], None));
        }
        for &i in &den {
            let d = LaurentSeries::new(-1, vec![Poly::one(), -a(i)], None);
            let inv = c.value(|| format!("inverting z^-1 - α_{i}"), d.invert_unit(n))?;
            f = f.mul(&inv).truncate(n);
        }
        let r = c.value(|| format!("case {case}"), f.shift(-2).residue())?;
        let want = Poly::constant((k == kp + 1) as i64);
        c.eq(|| format!("∮ ∏_{num:?} / ∏_{den:?} dz/z²"), r, want)?;
    }
    Ok(())
}

fn cocyclecase(_: &VerifyConfig, c: &mut Checker) -> Outcome {
    for k in 1..=6i64 {
        for l in k..=6i64 {
            let mut total = Poly::zero();
            for j in 1..=l {
                for i in (j - l)..=(0.min(j - k)) {
                    total +=
                        &(&h_alpha_closed(i - j + l, i, j) * &e_neg_alpha_open(j - i - k, i, j));
                }
            }
            let want = Poly::constant(if k == l { k } else { 0 });
            c.eq(|| format!("k = {k}, ℓ = {l}"), total, want)?;
        }
    }
    Ok(())
}

fn heidentity(_: &VerifyConfig, c: &mut Checker) -> Outcome {
    for i in -4..=4i64 {
        for j in i..=4i64 {
            for k in -2..=6i64 {
                let total: Poly = (i..=j)
                    .map(|t| &h_alpha_closed(t - i, t - k, i) * &e_neg_alpha_open(j - t, t - k, j))
                    .sum();
                let want = Poly::constant((i == j) as i64);
                c.eq(|| format!("i = {i}, j = {j}, k = {k}"), total, want)?;
            }
        }
    }
    Ok(())
}

fn product_cob(_: &VerifyConfig, c: &mut Checker) -> Outcome {
    for m in 0..=6i64 {
        for j in 0..=m {
            let want = Poly::constant((j == 0) as i64);
            let first: Poly = (0..=j)
                .map(|k| &h_alpha_closed(k, 1, m - k + 1) * &e_neg_alpha_open(j - k, 0, m - k + 1))
                .sum();
            c.eq(
                || format!("first sum, m = {m}, j = {j}"),
                first,
                want.clone(),
            )?;
            let second: Poly = (0..=j)
                .map(|k| &e_neg_alpha_open(k, 0, m + 1) * &h_alpha_closed(j - k, 1, m - j + 1))
                .sum();
            c.eq(|| format!("second sum, m = {m}, j = {j}"), second, want)?;
        }
    }
    Ok(())
}

fn currents(cfg: &VerifyConfig, c: &mut Checker) -> Outcome {
    let w = cfg.window;
    for k in -4..=4i64 {
        for l in -4..=4i64 {
            if k == 0 || l == 0 {
                continue;
            }
            for p in -w..=w {
                for q in -w..=w {
                    c.eq(
                        || format!("(J_{k} J_{l})[{p},{q}] = J_{}[{p},{q}]", k + l),
                        compose_current_entry(p, q, k, l),
                        current_entry(p, q, k + l),
                    )?;
                }
            }
        }
    }
    for k in 1..=4i64 {
        for i in -6..=6i64 {
            for j in -6..=6i64 {
                let sum: Poly = ((i.min(j) - 2 * k)..=(i.max(j) + 2 * k))
                    .map(|t| &current_entry(i, t, -k) * &current_entry(t, j, k))
                    .sum();
                c.eq(
                    || format!("Σ_t A_{i}t^-{k} A_t{j}^{k}"),
                    sum,
                    Poly::constant((i == j) as i64),
                )?;
            }
        }
    }
    for k in -4..=4i64 {
        for i in -6..=6i64 {
            for j in -6..=6i64 {
                c.eq(
                    || format!("A_{i},{j}^{k} piecewise vs residue"),
                    current_entry(i, j, k),
                    current_entry_residue(i, j, k),
                )?;
            }
        }
    }
    Ok(())
}

fn fock_diff(a: &FockVector, b: &FockVector) -> (String, String) {
    (format!("{:?}", a.entries()), format!("{:?}", b.entries()))
}

fn heisenberg(cfg: &VerifyConfig, c: &mut Checker) -> Outcome {
    let apply = |k: i64, v: &FockVector| -> Result<FockVector, Counterexample> {
        Checker::default().value(|| format!("J_{k} application"), apply_current(k, v))
    };
    for lam in Partition::all_up_to(cfg.max_size) {
        let ket = FockVector::ket(lam.clone(), 0);
        for k in 1..=4i64 {
            for l in 1..=4i64 {
                let lhs = apply(k, &apply(-l, &ket)?)?.sub(&apply(-l, &apply(k, &ket)?)?);
                let rhs = if k == l {
                    ket.scale(&Poly::constant(k))
                } else {
                    FockVector::zero()
                };
                c.cases += 1;
                if lhs != rhs {
                    let (l_s, r_s) = fock_diff(&lhs, &rhs);
                    return Err(Counterexample {
                        case: format!("[J_{k}, J_-{l}] on |{lam}⟩"),
                        lhs: l_s,
                        rhs: r_s,
                    });
                }
                for sign in [1i64, -1] {
                    let (kk, ll) = (sign * k, sign * l);
                    let lhs = apply(kk, &apply(ll, &ket)?)?;
                    let rhs = apply(ll, &apply(kk, &ket)?)?;
                    c.cases += 1;
                    if lhs != rhs {
                        let (l_s, r_s) = fock_diff(&lhs, &rhs);
                        return Err(Counterexample {
                            case: format!("J_{kk} J_{ll} = J_{ll} J_{kk} on |{lam}⟩"),
                            lhs: l_s,
                            rhs: r_s,
                        });
                    }
                }
            }
        }
    }
    let window = cfg.window.max(5);
    for k in -5..=5i64 {
        for l in -5..=5i64 {
            let v = c.value(
                || format!("cocycle k = {k}, ℓ = {l}"),
                cocycle_currents(k, l, window),
            )?;
            let want = Poly::constant(if k == -l { k } else { 0 });
            c.eq(
                || format!("cocycle(J_{k}, J_{l}), window {window}"),
                v,
                want,
            )?;
        }
    }
    Ok(())
}

fn vacuum(cfg: &VerifyConfig, c: &mut Checker) -> Outcome {
    let n = cfg.window.max(0) as usize;
    let t = vacuum_pairing_table(n);
    let d = vacuum_pairing_table_dual(n);
    for b in 0..=n {
        for q in 0..=n {
            c.eq(
                || format!("⟨ψ(z)ψ*(w)⟩ entry ({b},{q})"),
                t[b][q].clone(),
                Poly::constant((b == q) as i64),
            )?;
            let want = Poly::constant((b == q && b >= 1) as i64);
            c.eq(
                || format!("⟨ψ*(w)ψ(z)⟩ entry ({b},{q})"),
                d[b][q].clone(),
                want,
            )?;
        }
    }
    Ok(())
}

fn linear(c0: Poly, c1: Poly) -> LaurentSeries {
    LaurentSeries::new(0, vec![c0, c1], None)
}

fn double_gf(cfg: &VerifyConfig, c: &mut Checker) -> Outcome {
    let order = cfg.window;
    for n in 0..=3usize {
        let ctx = SuperContext::Vars(n);
        let mut lhs_h = LaurentSeries::zero(Some(order));
        let mut lhs_e = LaurentSeries::zero(Some(order));
        for k in 0..=order {
            lhs_h = lhs_h.add(&shifted_power(-k, k, order).scale(&double_h(k, ctx, 0)));
            let t = shifted_power(-k, 0, order).scale(&double_e(k, ctx, 0));
            lhs_e = if k % 2 == 0 {
                lhs_e.add(&t)
            } else {
                lhs_e.sub(&t)
            };
        }
        let mut rhs_h = LaurentSeries::one();
        let mut rhs_e = LaurentSeries::one();
        for i in 1..=n as i64 {
            let py = linear(Poly::one(), Poly::y(i));
            let px = linear(Poly::one(), -Poly::x(i));
            let ipx = c.value(|| "inverting 1 - xz".to_string(), px.invert_unit(order))?;
            let ipy = c.value(|| "inverting 1 + yz".to_string(), py.invert_unit(order))?;
            rhs_h = rhs_h.mul(&py).mul(&ipx).truncate(order);
            rhs_e = rhs_e.mul(&px).mul(&ipy).truncate(order);
        }
        c.series(
            || format!("Σ h_k/(z^-1|α)^k, n = {n}"),
            &lhs_h,
            &rhs_h,
            order,
        )?;
        c.series(
            || format!("Σ (-1)^k e_k (z^-1|α)^-k, n = {n}"),
            &lhs_e,
            &rhs_e,
            order,
        )?;
    }
    Ok(())
}

fn eh_roundtrip(_: &VerifyConfig, c: &mut Checker) -> Outcome {
    let free = SuperContext::Free;
    for k in 1..=6usize {
        let h: Poly = (1..=k)
            .map(|m| &h_alpha_closed((k - m) as i64, 1, m as i64) * &double_h(m as i64, free, 0))
            .sum();
        c.eq(
            || format!("h_{k} from double h"),
            h,
            classical_super(Basis::H, k, free),
        )?;
        let e: Poly = (1..=k)
            .map(|m| {
                let al = signed(&alpha_closed(1 - m as i64, 0), true);
                &homog_sym(&al, k - m) * &double_e(m as i64, free, 0)
            })
            .sum();
        c.eq(
            || format!("e_{k} from double e"),
            e,
            classical_super(Basis::E, k, free),
        )?;
    }
    for n in 0..=3usize {
        let ctx = SuperContext::Vars(n);
        for k in 0..=5usize {
            for s in -1..=1i64 {
                let h = c.value(
                    || "combinatorial h".into(),
                    double_h_combinatorial(k, ctx, s),
                )?;
                c.eq(
                    || format!("combinatorial h_{k}, n = {n}, s = {s}"),
                    h,
                    double_h(k as i64, ctx, s),
                )?;
                let e = c.value(
                    || "combinatorial e".into(),
                    double_e_combinatorial(k, ctx, s),
                )?;
                c.eq(
                    || format!("combinatorial e_{k}, n = {n}, s = {s}"),
                    e,
                    double_e(k as i64, ctx, s),
                )?;
            }
        }
    }
    Ok(())
}

fn shift_eh(_: &VerifyConfig, c: &mut Checker) -> Outcome {
    let f = SuperContext::Free;
    for k in 1..=6i64 {
        let rhs = &double_e(k, f, 0) + &(&(&a(1) - &a(2 - k)) * &double_e(k - 1, f, 0));
        c.eq(|| format!("e_{k}(σα)"), double_e(k, f, 1), rhs)?;
        let rhs = &double_h(k, f, 0) + &(&(&a(k - 1) - &a(0)) * &double_h(k - 1, f, 0));
        c.eq(|| format!("h_{k}(σ^-1 α)"), double_h(k, f, -1), rhs)?;
        let rhs = &double_h(k, f, 0) - &(&(&a(k) - &a(1)) * &double_h(k - 1, f, 1));
        c.eq(|| format!("h_{k}(σα) recursion"), double_h(k, f, 1), rhs)?;
        let rhs = &double_e(k, f, 0) - &(&(&a(0) - &a(1 - k)) * &double_e(k - 1, f, -1));
        c.eq(
            || format!("e_{k}(σ^-1 α) recursion"),
            double_e(k, f, -1),
            rhs,
        )?;
        let sum: Poly = (0..k)
            .map(|m| {
                let coef: Poly = (1..=m).map(|u| &a(1) - &a(k - m + u)).product();
                &coef * &double_h(k - m, f, 0)
            })
            .sum();
        c.eq(|| format!("h_{k}(σα) summation"), double_h(k, f, 1), sum)?;
    }
    Ok(())
}

fn omega(_: &VerifyConfig, c: &mut Checker) -> Outcome {
    for k in 1..=6usize {
        let h = double_h_expansion(k, 0);
        let e = double_e_expansion(k, 0);
        for ((m, ch), (_, ce)) in h.into_iter().zip(e) {
            c.eq(
                || format!("coefficient of e_{m} in ω h_{k}"),
                ch,
                ce.iota_alpha().negate_alpha(),
            )?;
        }
    }
    Ok(())
}

fn schur_consistency(cfg: &VerifyConfig, c: &mut Checker) -> Outcome {
    for n in 0..=3usize {
        let ctx = SuperContext::Vars(n);
        for lam in Partition::all_up_to(cfg.max_size) {
            for mu in lam.subpartitions() {
                let shape = SkewShape::new(lam.clone(), mu.clone()).expect("μ ⊆ λ");
                let h = c.value(
                    || format!("JT-h {shape}"),
                    schur_double_jt(&shape, ctx, Basis::H, lam.len()),
                )?;
                let e = c.value(
                    || format!("JT-e {shape}"),
                    schur_double_jt(&shape, ctx, Basis::E, lam.first() as usize),
                )?;
                let t = c.value(
                    || format!("tableaux {shape}"),
                    schur_double_tableaux(&shape, ctx),
                )?;
                c.eq(|| format!("JT-h = JT-e for {shape}, n = {n}"), &h, &e)?;
                c.eq(|| format!("JT-h = tableaux for {shape}, n = {n}"), &h, &t)?;
            }
        }
    }
    for n in 1..=3usize {
        for lam in Partition::all_up_to(cfg.max_size.min(4)) {
            if lam.len() > n {
                continue;
            }
            let b = c.value(
                || format!("bialternant {lam}, n = {n}"),
                bialternant(&lam, n),
            )?;
            c.eq(
                || format!("bialternant = JT for {lam}, n = {n}"),
                b,
                factorial_schur_jt(&lam, n),
            )?;
        }
    }
    for lam in Partition::all_up_to(cfg.max_size.min(4)) {
        let shape = SkewShape::straight(lam.clone());
        let base = schur_double(&shape, SuperContext::Free);
        for extra in 1..=2usize {
            let h = c.value(
                || "JT-h".into(),
                schur_double_jt(&shape, SuperContext::Free, Basis::H, lam.len() + extra),
            )?;
            c.eq(
                || format!("ℓ-stability (h) for {lam}, ℓ + {extra}"),
                &h,
                &base,
            )?;
            let e = c.value(
                || "JT-e".into(),
                schur_double_jt(
                    &shape,
                    SuperContext::Free,
                    Basis::E,
                    lam.first() as usize + extra,
                ),
            )?;
            c.eq(
                || format!("ℓ-stability (e) for {lam}, ℓ + {extra}"),
                &e,
                &base,
            )?;
        }
    }
    Ok(())
}

fn mn(cfg: &VerifyConfig, c: &mut Checker) -> Outcome {
    let ctx = SuperContext::Free;
    for lam in Partition::all_up_to(cfg.max_size) {
        for k in 1..=4i64 {
            let e = c.value(|| format!("p_{k} s_{lam}"), mn_multiply(&lam, k))?;
            for (mu, coeff) in e.entries() {
                let deg = lam.size() as i64 + k - mu.size() as i64;
                let got = coeff.homogeneous_degree_in(VarKind::Alpha);
                c.eq(
                    || format!("α-degree of s_{mu} in p_{k} s_{lam}"),
                    got.map_or(-1, |d| d as i64),
                    deg,
                )?;
            }
            let lhs = &powersum_super(k as usize, ctx) * &schur_cached(&lam, ctx);
            c.eq(|| format!("p_{k} s_{lam}"), lhs, e.evaluate(ctx))?;
        }
    }
    Ok(())
}

fn pieri(cfg: &VerifyConfig, c: &mut Checker) -> Outcome {
    let ctx = SuperContext::Free;
    let single = |p: &Poly| -> Poly {
        let assignment = p
            .variables()
            .into_iter()
            .filter(|v| v.kind() == VarKind::Alpha)
            .map(|v| (v, Poly::var(Var::alpha(0))))
            .collect();
        p.specialize(&assignment).expect("α-only assignment")
    };
    for mu in Partition::all_up_to(cfg.max_size) {
        for k in 0..=4i64 {
            for lam in Partition::all_of_size(mu.size() + k.max(0) as u32 + 1)
                .into_iter()
                .chain(horizontal_strips(&mu, k as u32 + 1))
            {
                let closed = c.value(
                    || "closed".into(),
                    pieri_h_coeff(&mu, &lam, k, None, PieriMethod::Closed),
                )?;
                let strip = lam.is_horizontal_strip_over(&mu) && lam.size() - mu.size() <= k as u32;
                if !strip {
                    c.eq(
                        || format!("c_{k},{mu}^{lam} off-strip"),
                        closed,
                        Poly::zero(),
                    )?;
                    continue;
                }
                let residue = c.value(
                    || "residue".into(),
                    pieri_h_coeff(&mu, &lam, k, None, PieriMethod::Residue),
                )?;
                c.eq(
                    || format!("closed = residue for c_{k},{mu}^{lam}"),
                    &closed,
                    &residue,
                )?;
                let wider = c.value(
                    || "wider ℓ".into(),
                    pieri_h_coeff(
                        &mu,
                        &lam,
                        k,
                        Some(lam.first() as usize + 2),
                        PieriMethod::Closed,
                    ),
                )?;
                c.eq(
                    || format!("ℓ-stability for c_{k},{mu}^{lam}"),
                    &closed,
                    &wider,
                )?;
                let collapse = Poly::constant((lam.size() - mu.size() == k as u32) as i64);
                c.eq(
                    || format!("single-α collapse of c_{k},{mu}^{lam}"),
                    single(&closed),
                    collapse,
                )?;
            }
            let e = c.value(|| format!("h_{k} s_{mu}"), pieri_h_expansion(&mu, k))?;
            let lhs = &double_h(k, ctx, 0) * &schur_cached(&mu, ctx);
            c.eq(|| format!("h_{k} s_{mu} direct"), lhs, e.evaluate(ctx))?;
            if mu.size() <= 4 && k <= 3 {
                let e = c.value(|| format!("e_{k} s_{mu}"), pieri_e_expansion(&mu, k))?;
                let lhs = &double_e(k, ctx, 0) * &schur_cached(&mu, ctx);
                c.eq(|| format!("e_{k} s_{mu} direct"), lhs, e.evaluate(ctx))?;
            }
        }
    }
    Ok(())
}

fn skew_pieri(cfg: &VerifyConfig, c: &mut Checker) -> Outcome {
    let bound = cfg.max_size.min(4);
    for mu in Partition::all_up_to(bound) {
        for k in 0..=2i64 {
            for lam in horizontal_strips(&mu, k as u32) {
                let skew = c.value(
                    || "skew".into(),
                    skew_pieri_coeff(
                        &SkewShape::straight(lam.clone()),
                        &SkewShape::straight(mu.clone()),
                        k,
                        PieriKind::H,
                        PieriMethod::Residue,
                    ),
                )?;
                let plain = c.value(
                    || "pieri".into(),
                    pieri_h_coeff(&mu, &lam, k, None, PieriMethod::Residue),
                )?;
                c.eq(
                    || format!("ν = ∅ reduction for c_{k},{mu}^{lam}"),
                    skew,
                    plain,
                )?;
            }
        }
    }
    for ctx in [SuperContext::Vars(3), SuperContext::Free] {
        for mu in Partition::all_up_to(bound) {
            for nu in mu.subpartitions() {
                let source = SkewShape::new(mu.clone(), nu.clone()).expect("ν ⊆ μ");
                let base = schur_double(&source, ctx);
                for k in 0..=2i64 {
                    for kind in [PieriKind::H, PieriKind::E] {
                        let (gen, outers) = match kind {
                            PieriKind::H => (double_h(k, ctx, 0), horizontal_strips(&mu, k as u32)),
                            PieriKind::E => (double_e(k, ctx, 0), vertical_strips(&mu, k as u32)),
                        };
                        let mut rhs = Poly::zero();
                        for lam in &outers {
                            for eta in nu.subpartitions() {
                                let target = SkewShape::new(lam.clone(), eta).expect("η ⊆ ν ⊆ λ");
                                let coeff = c.value(
                                    || format!("skew coefficient {target} from {source}"),
                                    skew_pieri_coeff(
                                        &target,
                                        &source,
                                        k,
                                        kind,
                                        PieriMethod::Residue,
                                    ),
                                )?;
                                if !coeff.is_zero() {
                                    rhs += &(&coeff * &schur_double(&target, ctx));
                                }
                            }
                        }
                        if kind == PieriKind::E && k % 2 == 1 {
                            rhs = -rhs;
                        }
                        let lhs = &gen * &base;
                        c.eq(|| format!("{kind:?}_{k} s_{source} in {ctx:?}"), lhs, rhs)?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn raising(cfg: &VerifyConfig, c: &mut Checker) -> Outcome {
    let ctx = SuperContext::Free;
    for lam in Partition::all_up_to(cfg.max_size.max(6)) {
        if lam.len() > 3 {
            continue;
        }
        let words = c.value(|| format!("raising {lam}"), raising_expansion(&lam))?;
        c.eq(
            || format!("raising = JT for {lam}"),
            hsymbol_evaluate(&words, ctx),
            schur_cached(&lam, ctx),
        )?;
    }
    Ok(())
}
