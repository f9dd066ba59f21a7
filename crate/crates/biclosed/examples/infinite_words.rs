//! Infinite reduced words: periodic expressions canonicalize to (w, L)
//! pairs, and W̄ has exactly |W| maximal elements, one per positive system.

use biclosed::roots::{system, RootSystemType, SimpleSet};
use biclosed::words::{maximal_elements, periodic_word, prefixes_up_to};

fn main() {
    let ty = RootSystemType::A2;

    // s_α s_β s_{δ−α−β} repeated is the infinite word with inversion set
    // widehat{α, α+β}, canonical form (e, {β}).
    let u = periodic_word(ty, &[], &[0, 1, 2]).unwrap();
    println!("(s_α s_β s_{{δ−γ}})^∞ canonicalizes to (w = {:?}, L = {:?})", u.word(), u.l_set());
    assert_eq!(u.l_set(), SimpleSet::B);
    assert!(u.word().is_empty());

    // Its finite prefixes, found by membership-guided search.
    let prefixes = prefixes_up_to(&u, 4);
    println!("prefixes of length ≤ 4: {}", prefixes.len());
    for p in prefixes.iter().filter(|p| p.len() == 3) {
        println!("  length-3 prefix: {:?}", p.letters);
    }

    // Maximal elements: 6, 8, 12 for Ã₂, B̃₂, G̃₂.
    for ty in RootSystemType::ALL {
        let maxes = maximal_elements(ty);
        println!("\n{ty}: {} maximal elements (one per positive system)", maxes.len());
        assert_eq!(maxes.len(), system(ty).roots.len());
        if ty == RootSystemType::A2 {
            for m in &maxes {
                println!("  (w = {:?}, L = {:?}), rays on {:?}", m.word(), m.l_set(), m.epset().ray_directions());
            }
        }
    }
}
