//! The nested Melnikov integrand for a diagonal connection, its coefficient
//! polynomials P_k, and the scalar products C_k.

use chenlie::melnikov::{
    ck, ck_closed_form, melnikov_integrand, pk_closed_form, two_forms, Connection, WeightPair,
};
use chenlie::{NcPoly, Scalar};

fn main() -> chenlie::Result<()> {
    let forms = two_forms();
    let conn = Connection::diagonal(&forms, &[Scalar::var("w1"), Scalar::var("w2")])?;
    let omega = NcPoly::letter(&forms, 0)
        .scale(&Scalar::var("a1"))
        .add(&NcPoly::letter(&forms, 1).scale(&Scalar::var("a2")))?;
    println!("R_2 = {}", melnikov_integrand(&conn, &omega, 2)?);

    let sym = WeightPair::symbolic();
    for i in 0..=3 {
        println!("P_3^{i} = {}", pk_closed_form(&sym, 3, i)?);
    }

    for k in 2..=6 {
        println!("C_{k} = {}", ck_closed_form(&sym, k)?);
    }
    let w = WeightPair::ratio((1, 3), (2, 3));
    for k in 2..=6 {
        println!("C_{k}(1/3, 2/3) = {}", ck(&w, k)?);
    }
    // a weight above 1 can kill C_k
    let w = WeightPair::ratio((1, 2), (3, 2));
    println!("C_4(1/2, 3/2) = {}", ck(&w, 4)?);
    Ok(())
}
