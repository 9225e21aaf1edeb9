//! Check the nil-Armendariz implications and the two supporting lemmas
//! across the preset catalog.
//!
//! ```text
//! cargo run --release --example implication_suite
//! ```

use skewpbw::nilarmendariz::{
    verify_implication_suite, verify_lemma_nil_pullback, verify_lemma_nil_stability, NilContext,
    SearchBound,
};
use skewpbw::presets::catalog;

fn main() {
    for p in catalog() {
        let bound = SearchBound::deg1(&p.ext);
        if bound.pair_count(p.ext.ring().size()) > 100_000 {
            println!("{}: skipped, {} pairs", p.label, bound.pair_count(p.ext.ring().size()));
            continue;
        }
        let ctx = NilContext::new(&p.ext);
        println!("{}", p.label);
        if ctx.hypotheses_hold() {
            for rep in [verify_lemma_nil_stability(&ctx), verify_lemma_nil_pullback(&ctx)] {
                let rep = rep.unwrap();
                println!("  {:<27} {}", rep.property, rep.verdict);
            }
        }
        for imp in verify_implication_suite(&ctx, &bound).unwrap() {
            println!("  {:<27} {}", imp.name, imp.status);
        }
    }
}
