//! Depth-3 and depth-4 reductions, plus the structural facts that make
//! them trustworthy: permutation invariance and the exact star/full
//! relation.
//!
//! Run with `cargo run --example multiple_series`.

use eisenreduce::reduce::{reduce_multi, star_to_full, Family, IndexTuple};
use eisenreduce::render::ring_text;

fn label(halves: &[u32]) -> String {
    let parts: Vec<String> = halves.iter().map(|p| (2 * p).to_string()).collect();
    parts.join(",")
}

fn main() {
    // The recursion merges the last two indices into a two-index block,
    // reduces it, and recurses on the shorter tuple; depth never shows up
    // in the answer, only weight does.
    for halves in [
        vec![1u32, 2, 1],
        vec![1, 3, 1],
        vec![2, 2, 2],
        vec![1, 1, 1, 1],
    ] {
        let x = reduce_multi(&IndexTuple::full(&halves));
        println!("G~_({}) = {}", label(&halves), ring_text(&x));
        println!();
    }

    // The defining sum factors through a product over the inner indices,
    // so the order of the exponents cannot matter.
    let a = reduce_multi(&IndexTuple::full(&[1, 2, 1]));
    let b = reduce_multi(&IndexTuple::full(&[2, 1, 1]));
    let c = reduce_multi(&IndexTuple::full(&[1, 1, 2]));
    assert_eq!(a, b);
    assert_eq!(a, c);
    println!("G~_(2,4,2) = G~_(4,2,2) = G~_(2,2,4)   (permutation invariance)");

    // The starred series omits the m = 0 row; adding the zeta product back
    // recovers the full series exactly.
    let star_tuple = IndexTuple::new(&[1, 1, 1], Family::Star);
    let star = reduce_multi(&star_tuple);
    println!("\nG~*_(2,2,2) = {}", ring_text(&star));
    assert_eq!(
        star_to_full(&star_tuple, &star),
        reduce_multi(&IndexTuple::full(&[1, 1, 1]))
    );
    println!("G~*_(2,2,2) + 8 zeta(2)^3 / tau^6 = G~_(2,2,2)   (m = 0 row restored)");
}
