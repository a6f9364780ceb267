//! The degree-5 integral along (((a1,a2),a1),(a1,a2)) vanishes identically
//! in the ten indeterminates ∫_{a_i} ω^(k).

use chenlie::chenint::{pair_graded, PairingTable};
use chenlie::melnikov::{
    example_ex_m5, example_ex_m5_expansion, example_ex_m5_full, m5_alphabets, m5_gamma,
};
use chenlie::{NcPoly, Word};

fn main() -> chenlie::Result<()> {
    let (paths, forms) = m5_alphabets();
    let gamma = m5_gamma(&paths);
    println!("γ = {gamma} ({} letters)", gamma.len());

    let table = PairingTable::symbolic(&paths, &forms);
    for w in [
        vec![0, 1, 1, 1, 1],
        vec![1, 0, 1, 1, 1],
        vec![0, 0, 1, 1, 1],
    ] {
        let omega = NcPoly::word(&forms, Word(w));
        println!("∫_γ {omega} = {}", pair_graded(&table, &gamma, &omega)?);
    }
    println!("example: {}", example_ex_m5());
    println!("two-term expansion: {}", example_ex_m5_expansion());
    println!("full integrand: {}", example_ex_m5_full()?);
    Ok(())
}
