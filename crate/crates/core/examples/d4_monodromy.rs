//! Picard-Lefschetz monodromy on degree-2 brackets of the D4 configuration,
//! and the reduction of any nonzero element to a multiple of [α1,α2].

use chenlie::melnikov::{picard_lefschetz, reduce_to_alpha, Grade2Element, H1Vector};

fn main() -> chenlie::Result<()> {
    for i in 1..=4 {
        let mut images = Vec::new();
        for j in 1..=4 {
            images.push(format!("{:?}", picard_lefschetz(i, H1Vector::delta(j))?.0));
        }
        println!("h{i}(δ1..δ4): {}", images.join(" "));
    }
    for g in [
        [1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 2, 0],
        [3, -1, 2, 0, 5, 7],
    ] {
        let g = Grade2Element(g);
        let (word, k) = reduce_to_alpha(&g)?;
        println!("{g}: {word} -> {k} [α1,α2]");
    }
    Ok(())
}
