//! Shuffle products and the canonical inner product on words.

use chenlie::{Alphabet, NcPoly};

fn main() -> chenlie::Result<()> {
    let a = Alphabet::new(["x", "y", "z"])?;
    let xy = NcPoly::from_names(&a, &["x", "y"])?;
    let z = NcPoly::from_names(&a, &["z"])?;

    let s = xy.shuffle(&z)?;
    println!("x y # z = {s}");

    // <u # v, w> counts the ways w interleaves u and v
    let xx = NcPoly::from_names(&a, &["x"])?.shuffle(&NcPoly::from_names(&a, &["x"])?)?;
    println!("x # x = {xx}");
    println!(
        "<x # x, x x> = {}",
        xx.inner(&NcPoly::from_names(&a, &["x", "x"])?)?
    );

    let p = xy.sub(&NcPoly::from_names(&a, &["y", "x"])?)?;
    println!("<{p}, {p}> = {}", p.inner(&p)?);
    Ok(())
}
