//! Library results against the brute-force oracles in `common::oracle`.

mod common;

use std::collections::HashMap;

use common::{checks, oracle};
use doubleschur::expand::{
    hsymbol_evaluate, mn_multiply, pieri_e_expansion, pieri_h_expansion, raising_expansion,
    single_x, single_y, RationalProduct,
};
use doubleschur::fock::{compose_current_entry, current_entry, current_entry_residue};
use doubleschur::partition::{Partition, SkewShape};
use doubleschur::polyring::{Poly, Var};
use doubleschur::symfunc::{
    bialternant, classical_super, determinant, double_e, double_h, powersum_super, schur_double,
    schur_double_jt, schur_double_tableaux, Basis, SuperContext,
};

fn without_y(p: &Poly, n: usize) -> Poly {
    let zero: HashMap<Var, Poly> = (1..=n as i64).map(|i| (Var::y(i), Poly::zero())).collect();
    p.specialize(&zero).unwrap()
}

fn up_to(n: u32, max_len: usize) -> Vec<Partition> {
    Partition::all_up_to(n)
        .into_iter()
        .filter(|p| p.len() <= max_len)
        .collect()
}

#[test]
fn classical_super_matches_monomial_enumeration() {
    for n in 1..=3 {
        let ctx = SuperContext::Vars(n);
        for k in 0..=5 {
            assert_eq!(
                classical_super(Basis::H, k, ctx),
                oracle::super_h(k, n),
                "h_{k}, n={n}"
            );
            assert_eq!(
                classical_super(Basis::E, k, ctx),
                oracle::super_e(k, n),
                "e_{k}, n={n}"
            );
            assert_eq!(
                double_h(k as i64, ctx, 1).alpha_to_zero(),
                oracle::super_h(k, n)
            );
            assert_eq!(
                double_e(k as i64, ctx, -1).alpha_to_zero(),
                oracle::super_e(k, n)
            );
            if k >= 1 {
                assert_eq!(
                    powersum_super(k, ctx),
                    oracle::super_p(k as u32, n),
                    "p_{k}, n={n}"
                );
            }
        }
    }
}

#[test]
fn double_schur_reduces_to_tableau_schur() {
    for n in 1..=3 {
        for lam in up_to(5, n) {
            let want = oracle::ssyt_schur(lam.parts(), n);
            let double = schur_double(&SkewShape::straight(lam.clone()), SuperContext::Vars(n));
            assert_eq!(
                without_y(&double.alpha_to_zero(), n),
                want,
                "s_{lam}, n={n}"
            );
            let bi = bialternant(&lam, n).unwrap();
            assert_eq!(bi.alpha_to_zero(), want, "bialternant {lam}, n={n}");
        }
    }
}

#[test]
fn jacobi_trudi_matches_a_tableaux() {
    for n in 1..=2 {
        let ctx = SuperContext::Vars(n);
        for lam in up_to(4, 4) {
            for mu in lam.subpartitions() {
                let shape = SkewShape::new(lam.clone(), mu.clone()).unwrap();
                assert_eq!(
                    schur_double(&shape, ctx),
                    schur_double_tableaux(&shape, ctx).unwrap(),
                    "{lam}/{mu}, n={n}"
                );
            }
        }
    }
}

#[test]
fn determinant_matches_leibniz() {
    for size in 1..=5usize {
        let m: Vec<Vec<Poly>> = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| {
                        let base = Poly::alpha((3 * i + j) as i64);
                        if (i + 2 * j) % 3 == 0 {
                            &base + &Poly::x(i as i64 + 1)
                        } else {
                            base.scale((i as i64) - (j as i64))
                        }
                    })
                    .collect()
            })
            .collect();
        assert_eq!(determinant(&m), oracle::leibniz_det(&m), "size {size}");
    }
}

#[test]
fn current_support_is_ribbons() {
    for lam in Partition::all_up_to(6) {
        for k in [-4, -3, -2, -1, 1, 2, 3, 4] {
            checks::current_support(&lam, k).unwrap();
        }
    }
}

fn oracle_entry(i: i64, j: i64, k: i64) -> Poly {
    if k > 0 {
        if j < i + k {
            return Poly::zero();
        }
        let items: Vec<Poly> = (i + 1..j).map(|a| -Poly::alpha(a)).collect();
        oracle::e((j - i - k) as usize, &items)
    } else {
        if !(j <= i && i <= j - k) {
            return Poly::zero();
        }
        let items: Vec<Poly> = (j..=i).map(Poly::alpha).collect();
        oracle::h((j - i - k) as usize, &items)
    }
}

#[test]
fn current_entries_match_definition() {
    for k in -3..=3i64 {
        if k == 0 {
            continue;
        }
        for i in -4..=4 {
            for j in -4..=6 {
                let want = oracle_entry(i, j, k);
                assert_eq!(current_entry(i, j, k), want, "A({i},{j})^{k}");
                assert_eq!(
                    current_entry_residue(i, j, k),
                    want,
                    "residue A({i},{j})^{k}"
                );
            }
        }
    }
}

#[test]
fn composed_entries_match_matrix_product() {
    let neg: Vec<Poly> = (1..=4).map(|a| -Poly::alpha(a)).collect();
    assert_eq!(compose_current_entry(0, 5, 2, 1), oracle::e(2, &neg));
    for (k, l) in [(1, 1), (2, 1), (1, -1), (-2, 1), (-1, -2), (2, -2)] {
        for p in -3..=3 {
            for q in -3..=3 {
                let want: Poly = (-10..=10)
                    .map(|a| &oracle_entry(p, a, k) * &oracle_entry(a, q, l))
                    .sum();
                assert_eq!(
                    compose_current_entry(p, q, k, l),
                    want,
                    "({p},{q}) k={k} l={l}"
                );
            }
        }
    }
}

fn check_rational(r: &RationalProduct, label: &str) {
    for m in -3..=6 {
        let shifted = m - r.zpow;
        let want = if shifted < 0 {
            Poly::zero()
        } else {
            oracle::rational_coeff(&r.num, &r.den, shifted as usize).scale(r.sign)
        };
        assert_eq!(r.coeff_closed(m), want, "{label} closed z^{m}");
        assert_eq!(r.cancel().coeff_closed(m), want, "{label} cancelled z^{m}");
        assert_eq!(r.coeff_series(m).unwrap(), want, "{label} series z^{m}");
    }
}

#[test]
fn rational_products_match_series_oracle() {
    let handmade = [
        RationalProduct {
            sign: 1,
            zpow: 0,
            num: vec![1, 2],
            den: vec![0, 2, 3],
        },
        RationalProduct {
            sign: -1,
            zpow: -2,
            num: vec![-1, -1, 4],
            den: vec![-1],
        },
        RationalProduct {
            sign: 1,
            zpow: 1,
            num: vec![],
            den: vec![5, 5, 6],
        },
        RationalProduct {
            sign: 1,
            zpow: -1,
            num: vec![0, 1, 2, 3],
            den: vec![],
        },
    ];
    for (n, r) in handmade.iter().enumerate() {
        check_rational(r, &format!("handmade {n}"));
    }
    for lam in Partition::all_up_to(4) {
        for mu in lam.subpartitions() {
            check_rational(
                &single_x(&lam, &mu, lam.first() as usize + 1),
                &format!("x {lam}/{mu}"),
            );
            check_rational(
                &single_y(&lam, &mu, lam.len() + 1),
                &format!("y {lam}/{mu}"),
            );
        }
    }
}

#[test]
fn murnaghan_nakayama_in_literal_variables() {
    for size in 0..=3u32 {
        for lam in Partition::all_of_size(size) {
            for k in 1..=(4 - size) as i64 {
                let n = size as usize + k as usize;
                let ctx = SuperContext::Vars(n);
                let s = |p: &Partition| {
                    schur_double_tableaux(&SkewShape::straight(p.clone()), ctx).unwrap()
                };
                let lhs = &oracle::super_p(k as u32, n) * &s(&lam);
                let rhs: Poly = mn_multiply(&lam, k)
                    .unwrap()
                    .entries()
                    .iter()
                    .map(|(mu, c)| c * &s(mu))
                    .sum();
                assert_eq!(lhs, rhs, "p_{k} s_{lam} in {n} variables");
            }
        }
    }
}

#[test]
fn pieri_in_three_variables() {
    let ctx = SuperContext::Vars(3);
    for mu in Partition::all_up_to(3) {
        let s_mu = schur_double(&SkewShape::straight(mu.clone()), ctx);
        for k in 0..=2i64 {
            let h = pieri_h_expansion(&mu, k).unwrap();
            assert_eq!(
                &double_h(k, ctx, 0) * &s_mu,
                h.evaluate(ctx),
                "h_{k} s_{mu}"
            );
            let e = pieri_e_expansion(&mu, k).unwrap();
            assert_eq!(
                &double_e(k, ctx, 0) * &s_mu,
                e.evaluate(ctx),
                "e_{k} s_{mu}"
            );
        }
    }
}

#[test]
fn raising_matches_tableaux() {
    let ctx = SuperContext::Vars(2);
    for lam in up_to(4, 3) {
        let words = raising_expansion(&lam).unwrap();
        let want = schur_double_tableaux(&SkewShape::straight(lam.clone()), ctx).unwrap();
        assert_eq!(hsymbol_evaluate(&words, ctx), want, "{lam}");
    }
    let lam = Partition::from_slice(&[2, 2]);
    let words = raising_expansion(&lam).unwrap();
    let jt = schur_double_jt(&SkewShape::straight(lam), SuperContext::Free, Basis::H, 2).unwrap();
    assert_eq!(hsymbol_evaluate(&words, SuperContext::Free), jt);
}
