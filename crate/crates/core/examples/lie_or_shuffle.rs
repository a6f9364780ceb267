//! Ree's criterion and the splitting of a homogeneous polynomial into its
//! Lie part and its shuffle part.

use chenlie::liealg::{decompose, is_lie};
use chenlie::{Alphabet, NcPoly, Scalar, Word};

fn main() -> chenlie::Result<()> {
    let a = Alphabet::new(["x", "y"])?;
    let w = |s: &[u8]| NcPoly::word(&a, Word(s.to_vec()));

    let xy = w(&[0, 1]);
    let bracket = xy.sub(&w(&[1, 0]))?;
    println!("is_lie({bracket}) = {}", is_lie(&bracket));
    println!("is_lie({xy}) = {}", is_lie(&xy));

    let mut p = w(&[0, 0, 1]).scale(&Scalar::int(3));
    p.add_term(Word(vec![1, 0, 0]), Scalar::ratio(-1, 2));
    let (lie, shf) = decompose(&p)?;
    println!("{p}\n  = ({lie})\n  + ({shf})");
    println!("Lie part passes Ree: {}", is_lie(&lie));
    println!("<lie, shuffle> = {}", lie.inner(&shf)?);
    Ok(())
}
