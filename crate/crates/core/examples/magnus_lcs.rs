//! Magnus expansion of group words and their lower central series degree.

use chenlie::freegrp::{commutator, lcs_degree, magnus, phi_inverse, GroupWord};
use chenlie::Alphabet;

fn main() -> chenlie::Result<()> {
    let a = Alphabet::new(["a", "b"])?;
    let x = GroupWord::generator(&a, 0)?;
    let y = GroupWord::generator(&a, 1)?;

    let c = commutator(&x, &y)?;
    println!("(a,b) = {c}");
    println!("magnus to degree 3: {}", magnus(&c, 3).poly());

    let words = [
        x.clone(),
        c.clone(),
        commutator(&c, &x)?,
        commutator(&commutator(&c, &x)?, &c)?,
        commutator(&c, &c)?,
    ];
    for g in &words {
        match phi_inverse(g) {
            Ok(p) => println!("lcs {} of {g}: {p}", lcs_degree(g, 8)),
            Err(e) => println!("{g}: {e}"),
        }
    }
    Ok(())
}
