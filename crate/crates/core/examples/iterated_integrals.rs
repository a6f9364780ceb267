//! Iterated integrals along loops: the canonical model where each generator
//! carries the exponential of its own letter, and a hand-built model.

use chenlie::chenint::{canonical_model, IntegralModel, TruncSeries};
use chenlie::freegrp::{commutator, phi_inverse, GroupWord};
use chenlie::{Alphabet, NcPoly, Word};

fn main() -> chenlie::Result<()> {
    let a = Alphabet::new(["x", "y"])?;
    let model = canonical_model(&a, 6);
    let x = GroupWord::generator(&a, 0)?;
    let y = GroupWord::generator(&a, 1)?;

    for n in 1..=6 {
        let v = model.evaluate(&x, &NcPoly::word(&a, Word(vec![0; n])))?;
        println!("∫_x x^{n} = {v}");
    }

    // along a commutator, the integral of a degree-2 word is <w, phi_inverse>
    let c = commutator(&x, &y)?;
    let phi = phi_inverse(&c)?;
    for w in a.words_of_length(2) {
        let omega = NcPoly::word(&a, w.clone());
        println!(
            "∫_(x,y) {} = {}   <w, phi> = {}",
            w.display(&a),
            model.evaluate(&c, &omega)?,
            omega.inner(&phi)?
        );
    }

    // any group-like series per generator gives a model
    let lx = NcPoly::from_names(&a, &["x"])?;
    let lxy = NcPoly::from_names(&a, &["x", "y"])?.sub(&NcPoly::from_names(&a, &["y", "x"])?)?;
    let series = vec![
        TruncSeries::exp(&lx.add(&lxy)?, 3)?,
        TruncSeries::exp(&NcPoly::from_names(&a, &["y"])?, 3)?,
    ];
    let custom = IntegralModel::new(&a, &a, 3, series)?;
    let omega = NcPoly::from_names(&a, &["x", "y"])?;
    println!("custom model: ∫_x x y = {}", custom.evaluate(&x, &omega)?);
    println!(
        "custom model: ∫_(x,y) x y = {}",
        custom.evaluate(&c, &omega)?
    );
    Ok(())
}
