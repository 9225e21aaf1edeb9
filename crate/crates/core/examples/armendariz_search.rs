//! Exhaustive search for failures of the skew Armendariz conditions.
//!
//! Over 2x2 matrices with trivial maps, degree-one polynomials already give
//! a pair whose product vanishes while a coefficient product is not nil.
//!
//! ```text
//! cargo run --release --example armendariz_search
//! ```

use skewpbw::cli::witness_text;
use skewpbw::finring::RingDescriptor;
use skewpbw::nilarmendariz::{check_armendariz, reverify_witness, ArmendarizVariant, NilContext, SearchBound};
use skewpbw::presets::{build_preset, PresetParams};

fn main() {
    let cases = [
        (
            "constant",
            PresetParams {
                ring: Some(RingDescriptor::matrix(2, 2)),
                n: Some(1),
                ..Default::default()
            },
        ),
        ("constant", PresetParams::default()),
        ("swap_ore", PresetParams::default()),
        ("differential_ore", PresetParams::default()),
    ];
    for (name, params) in cases {
        let p = build_preset(name, &params).unwrap();
        let ctx = NilContext::new(&p.ext);
        let bound = SearchBound::deg1(&p.ext);
        println!("{} ({})", p.label, bound.describe(&p.ext));
        for v in ArmendarizVariant::ALL {
            let rep = check_armendariz(&ctx, v, &bound).unwrap();
            println!("  {:<17} {} after {} pairs", v.name(), rep.verdict, rep.work_count);
            if let Some(w) = &rep.witness {
                assert!(reverify_witness(&p.ext, w, Some(v)));
                println!("    {}", witness_text(&p.ext, w));
            }
        }
    }
}
