//! Decide the four ring classes on a handful of small rings.
//!
//! ```text
//! cargo run --example ring_classes
//! ```

use skewpbw::finring::{check_ring_class, FiniteRing, RingClass, RingDescriptor};

fn main() {
    let rings = [
        RingDescriptor::Modular(7),
        RingDescriptor::Modular(12),
        RingDescriptor::dual(3),
        RingDescriptor::Product(vec![RingDescriptor::Modular(2), RingDescriptor::Modular(4)]),
        RingDescriptor::matrix(2, 2),
    ];
    for d in &rings {
        let r = FiniteRing::build(d).expect("ring builds");
        println!("{} ({} elements, nil set of size {})", d, r.size(), r.nil_set().len());
        for class in RingClass::ALL {
            let v = check_ring_class(&r, class);
            match &v.witness {
                None => println!("  {class:<16} holds"),
                Some(w) => println!("  {class:<16} fails: {}", w.describe(&r)),
            }
        }
    }
}
