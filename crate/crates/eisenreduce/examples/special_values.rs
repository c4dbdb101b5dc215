//! Exact special values at τ = i.
//!
//! At the square lattice point the generators take the values
//! `τ² = -1`, `G₂(i) = -π`, `G₄(i) = ϖ⁴/15`, `G₆(i) = 0`, where `ϖ` is
//! the lemniscate constant. Substituting them into a reduction turns it
//! into an exact element of `ℚ[π, ϖ]`; the decimals printed below are
//! computed from that exact form at 192-bit working precision.
//!
//! Run with `cargo run --example special_values`.

use eisenreduce::numerics::{
    bigfloat_decimal, eval_closed_form, lemniscate_constant, lemniscate_integral, Precision,
};
use eisenreduce::reduce::{reduce_multi, IndexTuple};
use eisenreduce::render::closed_text;

fn main() {
    let px = Precision::new(192);

    let tuples: [&[u32]; 6] = [
        &[1, 1],
        &[1, 2],
        &[2, 2],
        &[1, 3],
        &[1, 1, 1],
        &[1, 1, 1, 1],
    ];
    for halves in tuples {
        let v = reduce_multi(&IndexTuple::full(halves)).specialize_i();
        let indices: Vec<String> = halves.iter().map(|p| (2 * p).to_string()).collect();
        println!("G~_({})(i) = {}", indices.join(","), closed_text(&v));
        println!("  = {}", bigfloat_decimal(&eval_closed_form(&v, &px), 30));
        println!();
    }

    // The lemniscate constant itself, two independent ways: the AGM
    // iteration pi/agm(1, sqrt 2), and direct quadrature of the arc-length
    // integral 2·∫₀¹ dx/√(1-x⁴). Both must agree to working precision.
    let via_agm = lemniscate_constant(256);
    let via_integral = lemniscate_integral(256);
    println!("varpi via AGM:       {}", bigfloat_decimal(&via_agm, 40));
    println!("varpi via integral:  {}", bigfloat_decimal(&via_integral, 40));
}
