//! Nilpotent polynomials: powering versus the coefficient criterion.
//!
//! ```text
//! cargo run --example nilpotency
//! ```

use skewpbw::cli::parse_poly;
use skewpbw::finring::RingDescriptor;
use skewpbw::nilarmendariz::{is_nilpotent_poly_oracle, NilContext};
use skewpbw::presets::{build_preset, PresetParams};

fn main() {
    let params = PresetParams {
        ring: Some(RingDescriptor::Modular(8)),
        n: Some(2),
        ..Default::default()
    };
    let ext = build_preset("constant", &params).unwrap().ext;
    let ctx = NilContext::new(&ext);
    println!("Z/8 with two commuting variables, hypotheses hold: {}", ctx.hypotheses_hold());
    for text in ["2*x1 + 4*x2", "2 + 6*x1*x2", "1 + 2*x1", "4*x1^2 + 2*x2 + 6", "3*x2"] {
        let f = parse_poly(text, &ext).unwrap();
        let oracle = is_nilpotent_poly_oracle(&ext, &f).unwrap();
        let crit = ctx.nilpotent_by_criterion(&f).unwrap();
        assert_eq!(oracle.nilpotent, crit.nilpotent);
        if oracle.nilpotent {
            println!("  {:<20} nilpotent, f^{} = 0", ext.render(&f), oracle.exponent_used);
        } else {
            println!("  {:<20} not nilpotent (f^{} != 0)", ext.render(&f), oracle.exponent_used);
        }
    }

    // The swap extension is not compatible, so only powering decides.
    let swap = build_preset("swap_ore", &PresetParams::default()).unwrap().ext;
    let ctx = NilContext::new(&swap);
    println!("\nswap_ore, hypotheses hold: {}", ctx.hypotheses_hold());
    for text in ["(1,0)*x", "(1,0)*x + (0,1)", "(0,1)*x^2"] {
        let f = parse_poly(text, &swap).unwrap();
        let v = ctx.nilpotent(&f).unwrap();
        println!("  {:<20} nilpotent {:<5} via {:?}", swap.render(&f), v.nilpotent, v.method);
    }
}
