//! Skew Pieri coefficients `h_k s_{μ/ν} = Σ c s_{λ/η}`.

use doubleschur::expand::{skew_pieri_coeff, PieriKind, PieriMethod};
use doubleschur::partition::SkewShape;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let source: SkewShape = "2,1/1".parse()?;
    for target in ["3,1/1", "2,2/1", "2,1,1/1", "2,1", "3,1"] {
        let target: SkewShape = target.parse()?;
        for kind in [PieriKind::H, PieriKind::E] {
            let c = skew_pieri_coeff(&target, &source, 1, kind, PieriMethod::Residue)?;
            let closed = skew_pieri_coeff(&target, &source, 1, kind, PieriMethod::Closed)?;
            assert_eq!(c, closed);
            println!("{kind:?}: {source} -> {target}: {c}");
        }
    }
    Ok(())
}
