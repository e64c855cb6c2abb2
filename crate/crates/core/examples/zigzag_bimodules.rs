//! Projective bimodules over the zigzag algebra: hom spaces, tensor
//! products and the isomorphism test.

use fiatcell::bimod::{hom_space, iso_test, tensor_over, Bimodule, DEFAULT_SEED};
use fiatcell::fixtures;

fn main() -> fiatcell::Result<()> {
    let a = fixtures::algebra("zigzagA2.alg")?;
    let f12 = Bimodule::proj(&a, 0, &a, 1);
    let f21 = Bimodule::proj(&a, 1, &a, 0);
    let f11 = Bimodule::proj(&a, 0, &a, 0);

    // Ae1⊗e2A ⊗_A Ae2⊗e1A ≅ (Ae1⊗e1A)^{dim e2Ae2}
    let t = tensor_over(&f12, &f21)?;
    println!("dim F12 ⊗ F21 = {}", t.dim());
    println!("≅ F11⊕F11: {}", iso_test(&t, &f11.power(2)?, DEFAULT_SEED)?);

    for (name, m) in [("F11", &f11), ("F12", &f12), ("F21", &f21)] {
        let h = hom_space(m, &Bimodule::regular(&a))?;
        println!("dim Hom({name}, A) = {}", h.dim());
    }
    Ok(())
}
