//! Hall bases of the free Lie algebra and a few bracket pairings (2, -28, -14).

use chenlie::liealg::{hall_basis, witt_dimension, LieTree};
use chenlie::Alphabet;

fn br(a: LieTree, b: LieTree) -> LieTree {
    LieTree::bracket(a, b)
}

fn main() -> chenlie::Result<()> {
    let a = Alphabet::new(["x", "y"])?;
    for k in 1..=5 {
        let basis = hall_basis(&a, k);
        let names: Vec<String> = basis
            .elements
            .iter()
            .map(|t| t.display(&a).to_string())
            .collect();
        println!(
            "degree {k} ({} = Witt {}): {}",
            basis.len(),
            witt_dimension(2, k),
            names.join(", ")
        );
    }

    let (x, y) = (LieTree::leaf(0), LieTree::leaf(1));
    let xy = || br(x.clone(), y.clone());
    let l = br(y.clone(), br(x.clone(), br(x.clone(), xy())));
    let r = br(xy(), br(x.clone(), xy()));
    println!(
        "<{}, {}> = {}",
        l.display(&a),
        r.display(&a),
        l.expand(&a)?.inner(&r.expand(&a)?)?
    );
    let l = br(y.clone(), br(y.clone(), br(x.clone(), xy())));
    let r = br(xy(), br(y.clone(), xy()));
    println!(
        "<{}, {}> = {}",
        l.display(&a),
        r.display(&a),
        l.expand(&a)?.inner(&r.expand(&a)?)?
    );

    let b = Alphabet::new(["x", "y", "z"])?;
    let (x, y, z) = (LieTree::leaf(0), LieTree::leaf(1), LieTree::leaf(2));
    let l = br(y.clone(), br(x.clone(), z.clone()));
    let r = br(z, br(x, y));
    println!(
        "<{}, {}> = {}",
        l.display(&b),
        r.display(&b),
        l.expand(&b)?.inner(&r.expand(&b)?)?
    );
    Ok(())
}
