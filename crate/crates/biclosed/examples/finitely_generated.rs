//! The classification of finitely generated biclosed sets: explicit
//! generating sets where they exist, truncation gaps where they do not.

use biclosed::affine::closure;
use biclosed::canonical::{generators, is_finitely_generated, truncation_gap, BiclosedCanonical};
use biclosed::roots::{RootSystemType, SimpleSet};

fn main() {
    let ty = RootSystemType::A2;

    // Finite sets generate themselves.
    let fin = BiclosedCanonical::new(ty, &[0, 1], SimpleSet::FULL, SimpleSet::EMPTY).unwrap();
    println!("Φ_{{s_α s_β}} finitely generated: {}", is_finitely_generated(&fin));
    println!("  generators: {:?}", generators(&fin).unwrap());

    // Φ̂⁺_{∅,{α}} is finitely generated: ray feet plus the ±α string heads.
    let fg = BiclosedCanonical::new(ty, &[], SimpleSet::EMPTY, SimpleSet::A).unwrap();
    let gens = generators(&fg).unwrap();
    println!("\nΦ̂⁺_{{∅,{{α}}}} generators: {gens:?}");
    let back = closure(ty, &gens).unwrap();
    assert_eq!(&back, fg.epset());
    println!("  closure of the generators reproduces the set exactly");

    // Φ̂⁺_{{β},∅} — an infinite word's inversion set — is not finitely
    // generated: every truncation misses a root one level up.
    let nfg = BiclosedCanonical::new(ty, &[], SimpleSet::B, SimpleSet::EMPTY).unwrap();
    println!("\nΦ̂⁺_{{{{β}},∅}} finitely generated: {}", is_finitely_generated(&nfg));
    for t in [2, 4, 6] {
        let (_, witness) = truncation_gap(&nfg, t).unwrap();
        println!("  truncation at level {t}: closure misses {witness}");
    }
}
