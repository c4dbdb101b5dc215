//! Hyperbolic-cotangent lattice sums and their classical specializations.
//!
//! The series `𝔠_r^⟨2k⟩(2p₁,…,2p_r; τ)` weights the innermost lattice sum
//! by `coth^{2k}((m+n_rτ)πi/τ)`. Expanding the kernel through the finite
//! sinh-power identity reduces it to plain multiple series, so it lands in
//! the same ring `ℚ[π², τ^{±2}, G₂, G₄, G₆]`.
//!
//! Setting `τ = i` in weight-matched combinations recovers sums of the
//! Cauchy/Ramanujan type; `Σ_{m≠0} coth(mπ)/m³ = (7/90)·π³` is the first.
//!
//! Run with `cargo run --example hyperbolic_sums`.

use eisenreduce::hyperbolic::{cauchy_closed_form, coth_reduce, CothIndex};
use eisenreduce::numerics::{bigfloat_decimal, eval_closed_form, Precision};
use eisenreduce::render::{closed_text, ring_text};

fn main() {
    for (halves, k) in [(&[1u32, 1][..], 1u32), (&[1, 2][..], 1), (&[1, 1][..], 2)] {
        let c = CothIndex::new(halves, k);
        let x = coth_reduce(&c);
        let indices: Vec<String> = halves.iter().map(|p| (2 * p).to_string()).collect();
        println!("c^<{}>_({}) = {}", 2 * k, indices.join(","), ring_text(&x));
        println!();
    }

    // The classical series: closed form first, then its decimal value.
    let px = Precision::new(192);
    for p in 0..=2u32 {
        let v = cauchy_closed_form(p);
        let s = 4 * p + 3;
        println!("sum_(m != 0) coth(m*pi)/m^{s} = {}", closed_text(&v));
        println!("  = {}", bigfloat_decimal(&eval_closed_form(&v, &px), 30));
    }
}
