//! Deformed currents `J_k` acting on the fermionic Fock space.

use doubleschur::fock::{apply_current, current_entry, FockVector};
use doubleschur::partition::Partition;
use doubleschur::polyring::Poly;

fn show(label: &str, v: &FockVector) {
    println!("{label}");
    for (key, c) in v.entries() {
        println!("  {:>16}  {}", key.partition.to_string(), c);
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ket = FockVector::ket(Partition::from_slice(&[8, 3, 1]), 0);
    show("J_3 |8,3,1>", &apply_current(3, &ket)?);
    show("J_-3 |8,3,1>", &apply_current(-3, &ket)?);
    show("J_-2 |0>", &apply_current(-2, &FockVector::vacuum())?);

    println!("\nA^3_(1,8) = {}", current_entry(1, 8, 3));
    println!("A^-3_(3,2) = {}", current_entry(3, 2, -3));

    // [J_2, J_-2] acts as 2 on every ket
    let lam = FockVector::ket(Partition::from_slice(&[3, 1]), 0);
    let ab = apply_current(2, &apply_current(-2, &lam)?)?;
    let ba = apply_current(-2, &apply_current(2, &lam)?)?;
    assert_eq!(ab.sub(&ba), lam.scale(&Poly::constant(2)));
    println!("[J_2, J_-2] |3,1> = 2 |3,1>");
    Ok(())
}
