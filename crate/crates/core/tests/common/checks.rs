//! Structural checks shared by the oracle tests and the acceptance suite.

use doubleschur::fock::{apply_current, FockVector, KetKey};
use doubleschur::partition::Partition;
use doubleschur::polyring::Poly;
use num_bigint::Sign;

use super::oracle;

fn uniform_sign(c: &Poly, positive: bool) -> bool {
    let want = if positive { Sign::Plus } else { Sign::Minus };
    !c.is_zero() && c.terms().iter().all(|(_, coef)| coef.sign() == want)
}

fn homogeneous_of_degree(c: &Poly, d: u32) -> bool {
    c.terms().iter().all(|(m, _)| m.degree() == d)
}

/// Support and signs of `J_k|λ⟩` against the ribbon enumerator.
///
/// For `k > 0` the support is every `μ` with `λ/μ` a ribbon of size `r ≥ k`,
/// each coefficient is homogeneous of degree `r - k` in `α` with every monomial
/// of sign `(-1)^{height + r - k}`. For `k < 0` the support is `λ` together
/// with every `μ/λ` a ribbon of size `r ≤ |k|`, with coefficient of degree
/// `|k| - r` and sign `(-1)^{height}`.
pub fn current_support(lambda: &Partition, k: i64) -> Result<(), String> {
    let got = apply_current(k, &FockVector::ket(lambda.clone(), 0)).map_err(|e| e.to_string())?;
    let mut expected: Vec<(Vec<u32>, u32, u32)> = Vec::new();
    if k > 0 {
        for r in k as u32..=lambda.size() {
            for (mu, hgt) in oracle::ribbons(lambda.parts(), r) {
                expected.push((mu, hgt, r - k as u32));
            }
        }
    } else {
        for r in 1..=(-k) as u32 {
            for (mu, hgt) in oracle::ribbons_over(lambda.parts(), r) {
                expected.push((mu, hgt, (-k) as u32 - r));
            }
        }
    }
    let mut seen = 0;
    for (mu, hgt, deg) in &expected {
        let key = KetKey::new(Partition::from_slice(mu), 0);
        let c = got.coeff(&key);
        let positive = if k > 0 {
            (hgt + deg) % 2 == 0
        } else {
            hgt % 2 == 0
        };
        if !uniform_sign(&c, positive) || !homogeneous_of_degree(&c, *deg) {
            return Err(format!(
                "J_{k}|{lambda}>: coefficient {c} on {mu:?} (height {hgt})"
            ));
        }
        seen += 1;
    }
    let diagonal =
        usize::from(k < 0 && got.entries().contains_key(&KetKey::new(lambda.clone(), 0)));
    if got.entries().len() != seen + diagonal {
        let extra: Vec<String> = got
            .entries()
            .keys()
            .filter(|key| {
                !expected
                    .iter()
                    .any(|(mu, _, _)| key.partition.parts() == &mu[..])
                    && !(k < 0 && key.partition == *lambda)
            })
            .map(|key| key.partition.to_string())
            .collect();
        return Err(format!("J_{k}|{lambda}>: unexpected kets {extra:?}"));
    }
    Ok(())
}
