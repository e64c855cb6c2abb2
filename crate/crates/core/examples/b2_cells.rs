//! Cells of the Weyl group of type B2, read from the bundled table.

use fiatcell::fixtures;
use fiatcell::mscell::MultiSemigroup;
use fiatcell::suite::render_table;

fn main() -> fiatcell::Result<()> {
    let ms = MultiSemigroup::parse(fixtures::text("b2.ms")?)?;
    for j in &ms.cells().two_sided_cells {
        println!("two-sided cell {:?}", ms.names(j));
        for l in ms.left_cells_in(j)? {
            println!("  left cell {:?}", ms.names(&l));
        }
        println!("  L ∩ R table: {}", render_table(&ms, j)?);
        println!("  strongly regular: {}", ms.is_strongly_regular(j)?);
    }
    Ok(())
}
