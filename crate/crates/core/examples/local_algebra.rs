//! Center, Z′ and Loewy lengths of k[x]/(x^3).

use fiatcell::bimod::{z_prime, Bimodule};
use fiatcell::fixtures;

fn main() -> fiatcell::Result<()> {
    let a = fixtures::algebra("x3local.alg")?;
    println!("dim A = {}", a.dim());
    println!("Z  = {}", a.render_subspace(&a.center()));
    println!("Z′ = {}", a.render_subspace(&z_prime(&a)?));
    println!("Loewy length of A: {}", a.loewy_length()?);
    println!(
        "Loewy length of A⊗A: {}",
        Bimodule::proj(&a, 0, &a, 0).loewy_length()?
    );
    Ok(())
}
