//! Polynomials in α, x, y and Laurent series in the shifted powers `(z⁻¹|α)^k`.

use std::collections::BTreeMap;

use doubleschur::laurent::{from_shifted_basis, shifted_power, to_shifted_basis, LaurentSeries};
use doubleschur::polyring::Poly;

fn main() {
    let p = &(&Poly::x(1) - &Poly::alpha(0)) * &(&Poly::y(1) + &Poly::alpha(1));
    println!("p          = {p}");
    println!("σ² p       = {}", p.shift_alpha(2));
    println!("ι p        = {}", p.iota_alpha());
    println!("p as LaTeX = {}", p.latex());
    println!(
        "factored   = {}",
        (&p * &(&Poly::x(1) + &Poly::y(1))).factored(false)
    );

    println!();
    for k in [-2, -1, 0, 1, 2] {
        println!("(z^-1|α)^{k:<2} = {}", shifted_power(k, 0, 3));
    }

    // z^2 in the basis (z^-1|σα)^k, then back again
    let f = LaurentSeries::z_pow(2).truncate(5);
    let coeffs = to_shifted_basis(&f, 1, -5);
    println!();
    for (k, c) in &coeffs {
        println!("coefficient of (z^-1|σα)^{k}: {c}");
    }
    let back = from_shifted_basis(&coeffs, 1, 5);
    assert_eq!(back, f);

    let g: BTreeMap<i64, Poly> = [(1, Poly::one()), (-1, Poly::alpha(3))]
        .into_iter()
        .collect();
    println!(
        "\n(z^-1|α) + α_3 (z^-1|α)^-1 = {}",
        from_shifted_basis(&g, 0, 3)
    );
}
