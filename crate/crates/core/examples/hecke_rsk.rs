//! Kazhdan–Lusztig cells of S_4 against the Robinson–Schensted partition.

use fiatcell::hecke::{
    export_multisemigroup, rsk, rsk_cells, CoxeterGroup, CoxeterType, NamedCells,
};

fn main() -> fiatcell::Result<()> {
    let ms = export_multisemigroup(CoxeterType::A(3))?;
    let from_hecke = NamedCells::of(&ms);
    let from_rsk = rsk_cells(4)?;
    println!("left cells agree: {}", from_hecke.left == from_rsk.left);
    println!("right cells agree: {}", from_hecke.right == from_rsk.right);
    println!(
        "two-sided cells agree: {}",
        from_hecke.two_sided == from_rsk.two_sided
    );

    let w = CoxeterGroup::new(CoxeterType::A(3))?;
    let x = w.index_of("s1s2s3")?;
    let pair = rsk(&w.one_line(x).unwrap())?;
    println!(
        "s1s2s3 has shape {:?}, P = {:?}, Q = {:?}",
        pair.shape(),
        pair.p,
        pair.q
    );
    Ok(())
}
