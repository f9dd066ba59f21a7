//! The weak order on W̄: comparisons, orthogonality, meets, bounded joins,
//! and the maximal word below a biclosed bound.

use biclosed::affine::EPSet;
use biclosed::error::Error;
use biclosed::roots::RootSystemType;
use biclosed::words::{
    join_bounded, leq, max_word_below, meet, orthogonal, periodic_word, FiniteWord, WBarElement,
};

fn main() {
    let ty = RootSystemType::A2;
    let fw = |letters: &[u8]| WBarElement::Finite(FiniteWord::new(ty, letters).unwrap());

    // The strictly comparable periodic pair: (s₁s₂s₃)^∞ < (s₁s₂s₁s₃)^∞.
    let w1 = WBarElement::Infinite(periodic_word(ty, &[], &[0, 1, 2]).unwrap());
    let w2 = WBarElement::Infinite(periodic_word(ty, &[], &[0, 1, 0, 2]).unwrap());
    println!("w₁ ≤ w₂: {}, w₂ ≤ w₁: {}", leq(&w1, &w2), leq(&w2, &w1));
    assert_eq!(meet(&w1, &w2).unwrap(), w1);

    // Orthogonality is disjointness of inversion sets.
    let b2 = RootSystemType::B2;
    let x = WBarElement::Finite(FiniteWord::new(b2, &[0]).unwrap());
    let y = WBarElement::Finite(FiniteWord::new(b2, &[2]).unwrap());
    println!("in B̃₂: s_α ⟂ s_{{δ−γ}}: {}", orthogonal(&x, &y));

    // Meets by greedy ascent inside the intersection of inversion sets.
    let m = meet(&fw(&[0, 1]), &fw(&[0, 2])).unwrap();
    println!("meet(s_α s_β, s_α s_{{δ−γ}}) = {:?}", m);

    // Bounded joins through the exact closure of the union.
    let j = join_bounded(&[fw(&[0]), fw(&[1])]).unwrap();
    println!("join(s_α, s_β) = {:?}", j);
    match join_bounded(&[fw(&[0]), fw(&[1, 2])]) {
        Err(Error::Unbounded) => println!("join(s_α, s_β s_{{δ−γ}}) is unbounded, as expected"),
        other => panic!("expected Unbounded, got {other:?}"),
    }

    // The maximal word below the full positive system is a maximal element
    // of W̄ (no maximum exists there, and the certificate says so).
    let (m, cert) = max_word_below(&EPSet::full(ty), 256).unwrap();
    println!("below Φ̂⁺ the ascent settles on {m:?}");
    println!("certificate: {cert:?}");
}
