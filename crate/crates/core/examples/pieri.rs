//! Pieri coefficients `c_{k,μ}^λ` by the closed form and by residues.

use doubleschur::expand::{pieri_e_expansion, pieri_h_coeff, pieri_h_expansion, PieriMethod};
use doubleschur::partition::{Partition, SkewShape};
use doubleschur::symfunc::{double_h, schur_double, SuperContext};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mu = Partition::from_slice(&[4, 3]);
    let lam = Partition::from_slice(&[4, 4, 1]);
    let closed = pieri_h_coeff(&mu, &lam, 4, None, PieriMethod::Closed)?;
    let residue = pieri_h_coeff(&mu, &lam, 4, None, PieriMethod::Residue)?;
    assert_eq!(closed, residue);
    println!(
        "c_4,(4,3)^(4,4,1) = {} = {}",
        closed,
        closed.factored(false)
    );

    let e = pieri_h_expansion(&Partition::from_slice(&[5, 2, 2]), 2)?;
    println!("\nh_2 s_522 = {e}");

    let small = Partition::from_slice(&[2, 1]);
    let ctx = SuperContext::Free;
    let lhs = &double_h(2, ctx, 0) * &schur_double(&SkewShape::straight(small.clone()), ctx);
    assert_eq!(lhs, pieri_h_expansion(&small, 2)?.evaluate(ctx));
    println!("\ne_2 s_21 = {}", pieri_e_expansion(&small, 2)?);
    Ok(())
}
