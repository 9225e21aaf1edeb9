//! Endomorphism and derivation families: closures, compatibility, rigidity.
//!
//! ```text
//! cargo run --example compatibility
//! ```

use skewpbw::finring::{FiniteRing, RingDescriptor};
use skewpbw::ringmaps::{
    check_compatibility, check_sigma_rigid, compatibility_closure, MapFamily, RingMap,
    DEFAULT_CLOSURE_CAP,
};

fn show(title: &str, ring: &FiniteRing, fam: &MapFamily) {
    let (sc, dc) = compatibility_closure(ring, fam, DEFAULT_CLOSURE_CAP).expect("small closure");
    let c = check_compatibility(ring, fam);
    let rigid = check_sigma_rigid(ring, fam);
    println!("{title}");
    println!("  closure sizes: sigma {}, delta {}", sc.len(), dc.len());
    for rep in c.reports().into_iter().chain([&rigid]) {
        print!("  {:<20} {}", rep.property, rep.verdict);
        match &rep.witness {
            Some(w) => println!("  ({w:?})"),
            None => println!(),
        }
    }
}

fn main() {
    // Exchanging the factors of F2 x F2 moves idempotents around, so
    // (1,0)(0,1) = 0 survives but (1,0)(1,0) != 0 does not.
    let r = FiniteRing::build(&RingDescriptor::Product(vec![
        RingDescriptor::Modular(2),
        RingDescriptor::Modular(2),
    ]))
    .unwrap();
    let swap = RingMap::coordinate_swap(&r).unwrap();
    let fam = MapFamily::new(&r, vec![swap], vec![RingMap::zero_derivation(&r, 0)]).unwrap();
    show("swap on F2 x F2", &r, &fam);

    let fam = MapFamily::constant(&r, 1);
    show("identity on F2 x F2", &r, &fam);

    // Inner maps on 2x2 matrices over F2.
    let m = FiniteRing::build(&RingDescriptor::matrix(2, 2)).unwrap();
    let u = m.parse_element("[[1,1],[0,1]]").unwrap();
    let c = m.parse_element("[[0,1],[0,0]]").unwrap();
    let s = RingMap::conjugation(&m, u).unwrap();
    let d = RingMap::inner_derivation(&m, c, &s, 0);
    let fam = MapFamily::new(&m, vec![s], vec![d]).unwrap();
    show("conjugation and inner derivation on M2(F2)", &m, &fam);

    // Z/6 is reduced, so the identity family is rigid.
    let z6 = FiniteRing::build(&RingDescriptor::Modular(6)).unwrap();
    show("identity on Z/6", &z6, &MapFamily::constant(&z6, 2));
}
