//! The preset catalog, the quantum Weyl algebras in particular.
//!
//! ```text
//! cargo run --example weyl_presets
//! ```

use skewpbw::presets::{build_preset, catalog, PresetParams};

fn main() {
    for p in catalog() {
        let v = p.ext.validate().expect("catalog presentations are consistent");
        println!(
            "{:<34} n = {}, |R| = {:<3} strict PBW {}",
            p.label,
            p.ext.n(),
            p.ext.ring().size(),
            v.strict_pbw
        );
    }

    // a = b = 0 is the classical Weyl algebra: d_i x_i = x_i d_i + 1.
    let weyl = build_preset("quantum_weyl", &PresetParams::modulus(5)).unwrap().ext;
    let x1 = weyl.var(0);
    let d1 = weyl.var(2);
    println!("\nd1 * x1 = {}", weyl.render(&weyl.mul(&d1, &x1).unwrap()));
    let d1x1_3 = weyl.mul(&d1, &weyl.pow(&x1, 3).unwrap()).unwrap();
    println!("d1 * x1^3 = {}", weyl.render(&d1x1_3));

    let params = PresetParams {
        p: Some(5),
        a: Some(2),
        b: Some(3),
        ..Default::default()
    };
    let q = build_preset("quantum_weyl", &params).unwrap();
    println!("\n{}: {}", q.label, q.description);
    let names = q.ext.names().to_vec();
    for j in 0..4 {
        for i in 0..j {
            let prod = q.ext.mul(&q.ext.var(j), &q.ext.var(i)).unwrap();
            println!("  {} {} = {}", names[j], names[i], q.ext.render(&prod));
        }
    }

    // Changing one tail breaks associativity, and validation says where.
    let (c, tail) = q.ext.relation(1, 2);
    let x2d2 = q.ext.mul(&q.ext.var(1), &q.ext.var(3)).unwrap();
    let bad = q.ext.with_relation(1, 2, c, q.ext.add(tail, &x2d2));
    match bad.validate() {
        Ok(_) => println!("corrupted presentation unexpectedly consistent"),
        Err(e) => println!("\ncorrupted presentation: {e}"),
    }
}
