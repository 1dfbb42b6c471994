//! `p_k s_λ` and `k ∂s_λ/∂p_k` in the double Schur basis.

use doubleschur::expand::{mn_derivative, mn_multiply, powersum_schur_expansion};
use doubleschur::partition::Partition;
use doubleschur::symfunc::{powersum_super, SuperContext};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let lam = Partition::from_slice(&[8, 3, 1]);
    let up = mn_multiply(&lam, 3)?;
    println!("p_3 s_831 ({} terms)", up.len());
    for (mu, c) in up.entries().iter().rev() {
        println!("  {:>16}  {}", mu.to_string(), c);
    }
    println!("\n3 ds_831/dp_3 = {}", mn_derivative(&lam, 3)?);

    let p21 = powersum_schur_expansion(&[2, 1])?;
    println!("\np_2 p_1 = {p21}");
    let ctx = SuperContext::Free;
    assert_eq!(
        p21.evaluate(ctx),
        &powersum_super(2, ctx) * &powersum_super(1, ctx)
    );
    Ok(())
}
