//! The exact closure engine over eventually periodic sets, cross-checked
//! against the level-truncated brute-force closure.

use biclosed::affine::{
    closure, closure_window, combine, is_biclosed_window, AffineRoot, EPSet, Window,
};
use biclosed::roots::{Root, RootSystemType};

fn ar(a: i32, b: i32, level: i32) -> AffineRoot {
    AffineRoot::new(Root::new(a, b), level)
}

fn main() {
    let ty = RootSystemType::A2;

    // Positive combinations of two affine roots, with exact coefficients.
    for (t, k1, k2) in combine(ty, ar(1, 0, 1), ar(-1, 0, 1), 6).unwrap() {
        println!("{k1}·(α+δ) + {k2}·(−α+δ) = {t}");
    }

    // α and −α+δ force infinite δ-chains both ways: two rays.
    let c = closure(ty, &[ar(1, 0, 0), ar(-1, 0, 1)]).unwrap();
    println!("\nclosure {{α, −α+δ}}:");
    for dir in [Root::new(1, 0), Root::new(-1, 0), Root::new(0, 1)] {
        println!("  direction {dir}: {:?}", c.levels(dir));
    }

    // The windowed brute force agrees at the safety margin and beyond.
    let w = c.auto_window();
    for n in [w.n, w.n + 4] {
        let win = closure_window(ty, &[ar(1, 0, 0), ar(-1, 0, 1)], Window::new(n).unwrap()).unwrap();
        assert_eq!(win, c.truncate(n));
        println!("window {n}: {} roots, agrees with the engine", win.len());
    }

    // A finite closure: the generators of level ≤ 1 outside Φ_{β}.
    let gens = [ar(1, 0, 0), ar(1, 0, 1), ar(1, 1, 0), ar(1, 1, 1)];
    let c = closure(ty, &gens).unwrap();
    assert!(c.is_finite());
    println!("\nclosure (Φ⁺_{{{{β}},∅}})₁ has {:?} roots (levels ≤ n·d)", c.cardinality().unwrap());

    // Exact set algebra on eventually periodic sets.
    let full = EPSet::full(ty);
    println!("complement of ∅ is Φ̂⁺: {}", EPSet::empty(ty).complement() == full);
    println!("|Φ̂⁺ ∖ closure| = {:?} (infinite)", full.difference_cardinality(&c));
    assert!(is_biclosed_window(&full, Window::new(6).unwrap()));
}
