//! Build an extension by hand and multiply in it.
//!
//! The enveloping algebra of sl2 over F5 in the basis e, f, h:
//! `f e = e f - h`, `h e = e h + 2e`, `h f = f h - 2f`.
//!
//! ```text
//! cargo run --example pbw_multiplication
//! ```

use skewpbw::cli::parse_poly;
use skewpbw::finring::{FiniteRing, RingDescriptor};
use skewpbw::pbw::{Extension, Monomial, MonomialOrder, OrderKind, SkewPoly};

fn main() {
    let r = FiniteRing::build(&RingDescriptor::Modular(5)).unwrap();
    let one = r.one();
    let var = |i: usize, c: i64| SkewPoly::term(&r, Monomial::var(3, i), r.from_int(c));
    let ext = Extension::builder(&r, 3)
        .names(["e", "f", "h"].map(String::from).to_vec())
        .relation(0, 1, one, var(2, -1))
        .relation(0, 2, one, var(0, 2))
        .relation(1, 2, one, var(1, -2))
        .build()
        .expect("sl2 relations are consistent");
    let v = ext.validate().unwrap();
    println!(
        "sl2 over F5: {} triples checked, strict PBW {}",
        v.triples_checked, v.strict_pbw
    );

    let p = |s: &str| parse_poly(s, &ext).unwrap();
    for (a, b) in [("f", "e"), ("h", "e^2"), ("f^2", "e^2"), ("e + f", "e + 4*f")] {
        let prod = ext.mul(&p(a), &p(b)).unwrap();
        println!("({a}) * ({b}) = {}", ext.render(&prod));
    }

    // The Casimir element commutes with the generators.
    let casimir = p("h^2 + 2*h + 4*f*e");
    for g in ["e", "f", "h"] {
        let g = p(g);
        let comm = ext.sub(&ext.mul(&casimir, &g).unwrap(), &ext.mul(&g, &casimir).unwrap());
        assert!(comm.is_zero());
    }
    println!("casimir {} is central", ext.render(&casimir));

    let f3 = ext.pow(&p("e + f"), 3).unwrap();
    println!("(e + f)^3 has {} terms, leading term {:?}", f3.len(), ext.leading(&f3).lt());

    // Leading monomials depend on the chosen order; by default e < f < h.
    for kind in [OrderKind::Deglex, OrderKind::Lex, OrderKind::Degrevlex] {
        let e = ext.with_order(MonomialOrder::standard(kind, 3)).unwrap();
        let l = e.leading(&p("e*h^2 + f^2*h + e^3"));
        println!("{kind:?}: lm = {}", l.lm.unwrap().render(e.names()));
    }
}
