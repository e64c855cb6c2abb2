//! Positivity, a, l and χ_G for the graded dual numbers and zigzag algebra.

use fiatcell::graded::{graded_hom_series, GradedCcx};
use fiatcell::suite::load_ccx;

fn main() -> fiatcell::Result<()> {
    for name in ["dualnumbers-graded", "zigzagA2-graded"] {
        let g = GradedCcx::new(load_ccx(name)?)?;
        println!("{name}: positive = {}", g.is_positive()?);
        for l in g.ccx.left_cells()? {
            let duflo = g.ccx.ms.duflo(&l)?;
            println!(
                "  G = {}: a = {}, l = {}, χ_G = {}",
                g.ccx.ms.name(duflo),
                g.invariant_a(&l)?,
                g.invariant_l(&l)?,
                g.chi(&l)?.render("t"),
            );
            let rep = g.representative(duflo);
            println!("  End(G) = {}", graded_hom_series(&rep, &rep)?.render("t"));
        }
    }
    Ok(())
}
