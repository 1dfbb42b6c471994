//! Double supersymmetric `h`, `e` and Schur functions.

use doubleschur::partition::{Partition, SkewShape};
use doubleschur::symfunc::{double_e, double_h, schur_double, schur_double_tableaux, SuperContext};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let one = SuperContext::Vars(1);
    println!("h_2(x1/y1) = {}", double_h(2, one, 0));
    println!("e_3(x1/y1) = {}", double_e(3, one, 0));
    println!("h_2(x2/y2) = {}", double_h(2, SuperContext::Vars(2), 0));

    // Free context: polynomials in the classical h_m(x/y)
    println!("h_2 in h_m = {}", double_h(2, SuperContext::Free, 0));

    let shape: SkewShape = "2,2/1".parse()?;
    println!(
        "\ns_22/1 in h_m      = {}",
        schur_double(&shape, SuperContext::Free)
    );
    println!(
        "s_22/1(x1/y1)      = {}",
        schur_double(&shape, one).factored(false)
    );

    let two = SuperContext::Vars(2);
    for lam in Partition::all_of_size(3) {
        let shape = SkewShape::straight(lam.clone());
        assert_eq!(
            schur_double(&shape, two),
            schur_double_tableaux(&shape, two)?
        );
    }
    println!("Jacobi-Trudi and A-tableaux agree for |λ| = 3, n = 2");
    Ok(())
}
