//! Worked values, written out term by term.

use doubleschur::expand::{
    mn_derivative, mn_multiply, pieri_h_coeff, pieri_h_expansion, PieriMethod, SchurExpansion,
};
use doubleschur::fock::{apply_current, current_entry, FockVector, KetKey};
use doubleschur::partition::{Partition, SkewShape};
use doubleschur::polyring::{alpha_open, Poly};
use doubleschur::symfunc::{double_e, double_h, schur_double, SuperContext};

use super::oracle;

fn a(i: i64) -> Poly {
    Poly::alpha(i)
}

fn x() -> Poly {
    Poly::x(1)
}

fn y() -> Poly {
    Poly::y(1)
}

fn p(parts: &[u32]) -> Partition {
    Partition::from_slice(parts)
}

fn c(v: i64) -> Poly {
    Poly::constant(v)
}

/// `e_k(-α_{(i,j)})` from the brute-force oracle.
fn e_neg_open(k: usize, i: i64, j: i64) -> Poly {
    let items: Vec<Poly> = alpha_open(i, j)
        .into_iter()
        .map(|v| -Poly::var(v))
        .collect();
    oracle::e(k, &items)
}

fn expect(name: &str, got: &Poly, want: &Poly) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{name}: got {got}, expected {want}"))
    }
}

fn expect_expansion(
    name: &str,
    got: &SchurExpansion,
    want: &[(&[u32], Poly)],
) -> Result<(), String> {
    let mut w = SchurExpansion::zero();
    for (parts, coeff) in want {
        w.add_term(p(parts), coeff.clone());
    }
    if *got == w {
        Ok(())
    } else {
        Err(format!("{name}: got {got}, expected {w}"))
    }
}

pub fn h_one_pair() -> Result<(), String> {
    let ctx = SuperContext::Vars(1);
    let h2 = &(&x() * &x()) + &(&x() * &y()) - (&a(1) * &(&x() + &y()));
    expect("h_2(x1/y1)", &double_h(2, ctx, 0), &h2)?;
    let product_form = &(&(&x() - &a(0)) * &(&x() - &a(1))) + &(&(&y() + &a(0)) * &(&x() - &a(1)));
    expect(
        "h_2(x1/y1) product form",
        &double_h(2, ctx, 0),
        &product_form,
    )?;
    let x2xy = &(&x() * &x()) + &(&x() * &y());
    let h3 = &(&x2xy * &x()) - &(&(&a(1) + &a(2)) * &x2xy);
    let h3 = &h3 + &(&(&a(1) * &a(2)) * &(&x() + &y()));
    expect("h_3(x1/y1)", &double_h(3, ctx, 0), &h3)
}

pub fn h_two_pairs() -> Result<(), String> {
    let (x1, x2, y1, y2) = (Poly::x(1), Poly::x(2), Poly::y(1), Poly::y(2));
    let want = &(&x2 - &a(-1)) * &(&x2 - &a(0));
    let want = &want + &(&(&x2 - &a(-1)) * &(&x1 - &a(1)));
    let want = &want + &(&(&x1 - &a(0)) * &(&x1 - &a(1)));
    let ys = &(&y1 + &a(0)) + &(&y2 + &a(-1));
    let xs = &(&x2 - &a(0)) + &(&x1 - &a(1));
    let want = &want + &(&ys * &xs);
    let want = &want + &(&(&y1 + &a(0)) * &(&y2 + &a(0)));
    expect("h_2(x2/y2)", &double_h(2, SuperContext::Vars(2), 0), &want)
}

pub fn e_one_pair() -> Result<(), String> {
    let ctx = SuperContext::Vars(1);
    let e2 = &(&x() * &y()) + &(&y() * &y());
    let e2 = &e2 + &(&a(0) * &(&x() + &y()));
    expect("e_2(x1/y1)", &double_e(2, ctx, 0), &e2)?;
    let xyy = &(&x() * &y()) + &(&y() * &y());
    let e3 = &(&xyy * &y()) + &(&(&a(-1) + &a(0)) * &xyy);
    let e3 = &e3 + &(&(&a(-1) * &a(0)) * &(&x() + &y()));
    expect("e_3(x1/y1)", &double_e(3, ctx, 0), &e3)
}

fn s(outer: &[u32], inner: &[u32], ctx: SuperContext) -> Poly {
    schur_double(
        &SkewShape::new(p(outer), p(inner)).expect("valid skew shape"),
        ctx,
    )
}

pub fn skew_22_1() -> Result<(), String> {
    let free = SuperContext::Free;
    let lhs = s(&[2, 2], &[1], free);
    let d = &a(1) - &a(0);
    let double_line = s(&[2, 1], &[], free)
        + &d * &s(&[2], &[], free)
        + &d * &s(&[1, 1], &[], free)
        + &(&d * &d) * &s(&[1], &[], free);
    expect("s_22/1 in double Schur", &lhs, &double_line)?;
    let classical =
        |parts: &[u32]| doubleschur::symfunc::schur_classical(&SkewShape::straight(p(parts)), free);
    let classical_line = classical(&[2, 1]) + &a(1) * &classical(&[2])
        - &a(0) * &classical(&[1, 1])
        - &(&a(0) * &a(1)) * &classical(&[1]);
    expect("s_22/1 in classical Schur", &lhs, &classical_line)?;
    let one = &(&(&x() + &y()) * &(&x() - &a(0))) * &(&y() + &a(1));
    expect(
        "s_22/1(x1/y1)",
        &s(&[2, 2], &[1], SuperContext::Vars(1)),
        &one,
    )
}

pub fn current_lowering() -> Result<(), String> {
    let got = apply_current(3, &FockVector::ket(p(&[8, 3, 1]), 0)).map_err(|e| e.to_string())?;
    let terms: [(i64, i64, i64, &[u32]); 7] = [
        (1, 5, 8, &[5, 3, 1]),
        (1, 4, 8, &[4, 3, 1]),
        (1, 3, 8, &[3, 3, 1]),
        (-1, 1, 8, &[2, 2, 1]),
        (-1, 0, 8, &[2, 1, 1]),
        (1, -2, 8, &[2]),
        (-1, -2, 2, &[8]),
    ];
    let mut want = FockVector::zero();
    for (sign, i, j, parts) in terms {
        want.add_term(KetKey::new(p(parts), 0), current_entry(i, j, 3).scale(sign));
    }
    if got != want {
        return Err(format!("J_3|831>: got {got:?}"));
    }
    let explicit = [
        (&[5u32, 3, 1][..], 1, 0, 5, 8),
        (&[4, 3, 1], 1, 1, 4, 8),
        (&[3, 3, 1], 1, 2, 3, 8),
        (&[2, 2, 1], -1, 4, 1, 8),
        (&[2, 1, 1], -1, 5, 0, 8),
        (&[2], 1, 7, -2, 8),
        (&[8], -1, 1, -2, 2),
    ];
    for (parts, sign, k, i, j) in explicit {
        let want = e_neg_open(k, i, j).scale(sign);
        expect(
            &format!("J_3|831> on {parts:?}"),
            &got.coeff(&KetKey::new(p(parts), 0)),
            &want,
        )?;
    }
    Ok(())
}

fn diag_831() -> Poly {
    a(8).pow(3) + a(2).pow(3) - a(0).pow(3) - a(-2).pow(3)
}

pub fn current_raising() -> Result<(), String> {
    let got = apply_current(-3, &FockVector::ket(p(&[8, 3, 1]), 0)).map_err(|e| e.to_string())?;
    let terms: [(i64, i64, i64, &[u32]); 12] = [
        (1, 11, 8, &[11, 3, 1]),
        (1, 10, 8, &[10, 3, 1]),
        (1, 9, 8, &[9, 3, 1]),
        (1, 5, 2, &[8, 6, 1]),
        (1, 4, 2, &[8, 5, 1]),
        (1, 3, 2, &[8, 4, 1]),
        (1, 1, -1, &[8, 3, 3]),
        (1, 0, -1, &[8, 3, 2]),
        (-1, 0, -3, &[8, 3, 2, 2]),
        (1, -2, -3, &[8, 3, 1, 1]),
        (-1, -2, -4, &[8, 3, 1, 1, 1]),
        (1, -2, -5, &[8, 3, 1, 1, 1, 1]),
    ];
    let mut want = FockVector::zero();
    for (sign, i, j, parts) in terms {
        want.add_term(
            KetKey::new(p(parts), 0),
            current_entry(i, j, -3).scale(sign),
        );
    }
    want.add_term(KetKey::new(p(&[8, 3, 1]), 0), diag_831());
    if got != want {
        return Err(format!("J_-3|831>: got {got:?}"));
    }
    Ok(())
}

pub fn mn_multiply_831() -> Result<(), String> {
    let got = mn_multiply(&p(&[8, 3, 1]), 3).map_err(|e| e.to_string())?;
    let h = |vars: &[i64], k: usize| oracle::h(k, &vars.iter().map(|&i| a(i)).collect::<Vec<_>>());
    let want: Vec<(&[u32], Poly)> = vec![
        (&[11, 3, 1], c(1)),
        (&[10, 3, 1], h(&[8, 9, 10], 1)),
        (&[9, 3, 1], h(&[8, 9], 2)),
        (&[8, 6, 1], c(1)),
        (&[8, 5, 1], h(&[2, 3, 4], 1)),
        (&[8, 4, 1], h(&[2, 3], 2)),
        (&[8, 3, 3], h(&[-1, 0, 1], 1)),
        (&[8, 3, 2], h(&[-1, 0], 2)),
        (&[8, 3, 2, 2], c(-1)),
        (&[8, 3, 1, 1], h(&[-3, -2], 2)),
        (&[8, 3, 1, 1, 1], -h(&[-4, -3, -2], 1)),
        (&[8, 3, 1, 1, 1, 1], c(1)),
        (&[8, 3, 1], diag_831()),
    ];
    expect_expansion("p_3 s_831", &got, &want)
}

pub fn mn_derivative_831() -> Result<(), String> {
    let got = mn_derivative(&p(&[8, 3, 1]), 3).map_err(|e| e.to_string())?;
    let want: Vec<(&[u32], Poly)> = vec![
        (&[5, 3, 1], c(1)),
        (&[4, 3, 1], e_neg_open(1, 4, 8)),
        (&[3, 3, 1], e_neg_open(2, 3, 8)),
        (&[2, 2, 1], -e_neg_open(4, 1, 8)),
        (&[2, 1, 1], -e_neg_open(5, 0, 8)),
        (&[2], e_neg_open(7, -2, 8)),
        (&[8], -e_neg_open(1, -2, 2)),
    ];
    expect_expansion("3 d s_831 / d p_3", &got, &want)
}

pub fn powersum_two() -> Result<(), String> {
    let got = apply_current(-2, &FockVector::vacuum()).map_err(|e| e.to_string())?;
    let mut want = FockVector::zero();
    want.add_term(KetKey::new(p(&[2]), 0), c(1));
    want.add_term(KetKey::new(p(&[1, 1]), 0), c(-1));
    want.add_term(KetKey::new(p(&[1]), 0), &a(0) + &a(1));
    if got != want {
        return Err(format!("J_-2|0>: got {got:?}"));
    }
    let ctx = SuperContext::Vars(1);
    let restricted =
        double_h(2, ctx, 0) - double_e(2, ctx, 0) + &(&a(0) + &a(1)) * &double_h(1, ctx, 0);
    expect(
        "p_2(x1/y1)",
        &restricted,
        &(&(&x() * &x()) - &(&y() * &y())),
    )
}

pub fn pieri_441() -> Result<(), String> {
    let (mu, lam) = (p(&[4, 3]), p(&[4, 4, 1]));
    let want = &(&a(4) - &a(0)) * &(&a(4) - &a(1));
    for method in [PieriMethod::Closed, PieriMethod::Residue] {
        let got = pieri_h_coeff(&mu, &lam, 4, Some(4), method).map_err(|e| e.to_string())?;
        expect(&format!("c_4,(43)^(441) {method:?}"), &got, &want)?;
    }
    let d = |i: i64, j: i64| &a(i) - &a(j);
    let tableaux = [
        &d(-2, 0) * &d(-2, -1),
        &d(-2, 0) * &d(-3, -2),
        &d(-3, -1) * &d(-3, -2),
        &d(-1, 1) * &d(-2, -1),
        &d(-1, 1) * &d(-3, -2),
        &d(-1, 1) * &d(-1, 0),
    ];
    let summed: Poly = tableaux.into_iter().sum();
    expect("c_4,(43)^(441) tableau sum", &summed.iota_alpha(), &want)
}

pub fn pieri_522() -> Result<(), String> {
    let got = pieri_h_expansion(&p(&[5, 2, 2]), 2).map_err(|e| e.to_string())?;
    let d = |i: i64, j: i64| &a(i) - &a(j);
    let want: Vec<(&[u32], Poly)> = vec![
        (&[7, 2, 2], c(1)),
        (&[6, 3, 2], c(1)),
        (&[6, 2, 2, 1], c(1)),
        (&[5, 4, 2], c(1)),
        (&[5, 3, 2, 1], c(1)),
        (&[5, 2, 2, 2], c(1)),
        (&[6, 2, 2], &d(5, -1) + &d(6, -2)),
        (&[5, 3, 2], &d(2, -1) + &d(5, -2)),
        (&[5, 2, 2, 1], d(5, -1)),
        (&[5, 2, 2], &d(5, -1) * &d(5, -2)),
    ];
    expect_expansion("h_2 s_522", &got, &want)
}

pub type Check = fn() -> Result<(), String>;

pub const ALL: &[(&str, Check)] = &[
    ("h one pair", h_one_pair),
    ("h two pairs", h_two_pairs),
    ("e one pair", e_one_pair),
    ("skew 22/1", skew_22_1),
    ("J_3 on 831", current_lowering),
    ("J_-3 on 831", current_raising),
    ("p_3 s_831", mn_multiply_831),
    ("3 d/dp_3 s_831", mn_derivative_831),
    ("p_2 from vacuum", powersum_two),
    ("pieri (43) -> (441)", pieri_441),
    ("h_2 s_522", pieri_522),
];
