//! Numerical values of the classical Eisenstein series, against their
//! known exact specializations.
//!
//! Run with `cargo run --example eisenstein_numerics`.

use eisenreduce::numerics::{
    bigfloat_decimal, eval_G, lemniscate_constant, to_f64, ComplexValue, Precision,
};

fn main() {
    let px = Precision::new(192);
    let terms = 96;

    let i = ComplexValue::from_f64(0.0, 1.0, &px);
    println!("q-expansion values at tau = i ({terms} terms):");
    for k in 1..=4u32 {
        let g = eval_G(k, &i, terms, &px).unwrap();
        let (re, im) = g.to_f64_parts();
        println!("  G_{}(i) = {re:+.15e}  {im:+.1e}*i", 2 * k);
    }

    // Known closed forms on the square lattice: G2(i) = -pi (with the
    // G2 convention fixed by iterated summation order), G4(i) = varpi^4/15,
    // G6(i) = 0, G8(i) = varpi^8/525.
    let w = lemniscate_constant(192);
    let w4 = px.powi(&w, 4);
    let expected = [
        ("G_2(i) vs -pi", 1u32, px.pi().neg()),
        ("G_4(i) vs varpi^4/15", 2, px.div(&w4, &px.from_i64(15))),
        ("G_8(i) vs varpi^8/525", 4, px.div(&px.powi(&w, 8), &px.from_i64(525))),
    ];
    println!("\nchecks against exact values:");
    for (what, k, exact) in &expected {
        let g = eval_G(*k, &i, terms, &px).unwrap();
        let diff = to_f64(&px.sub(&g.re, exact)).abs() / to_f64(exact).abs();
        println!("  {what:<22} rel diff {diff:.2e}");
    }
    let g6 = eval_G(3, &i, terms, &px).unwrap();
    println!(
        "  G_6(i) vs 0            abs      {:.2e}",
        to_f64(&g6.re).abs()
    );

    // Away from the square lattice the values are generic; print a few
    // digits at tau = 2i for the record.
    let two_i = ComplexValue::from_f64(0.0, 2.0, &px);
    println!("\nvalues at tau = 2i:");
    for k in 1..=3u32 {
        let g = eval_G(k, &two_i, terms, &px).unwrap();
        println!("  G_{}(2i) = {}", 2 * k, bigfloat_decimal(&g.re, 25));
    }
}
