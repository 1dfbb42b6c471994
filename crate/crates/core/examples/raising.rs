//! Raising-operator expansion of `s_λ` into words in `h_k(σ^s α)`.

use doubleschur::expand::{hsymbol_evaluate, raising_expansion, schur_cached};
use doubleschur::partition::Partition;
use doubleschur::symfunc::SuperContext;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for parts in [&[2, 1][..], &[2, 2], &[3, 2, 1]] {
        let lam = Partition::from_slice(parts);
        let words = raising_expansion(&lam)?;
        println!("s_{lam} = ({} words)", words.len());
        for w in &words {
            println!("  {w}");
        }
        let ctx = SuperContext::Free;
        assert_eq!(hsymbol_evaluate(&words, ctx), schur_cached(&lam, ctx));
    }
    Ok(())
}
