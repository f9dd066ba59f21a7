//! Canonical forms w·Φ̂⁺_{L,K} for biclosed sets, the W-action, and the
//! I/A direction maps.

use biclosed::affine::{is_biclosed_exact, AffineRoot, EPSet};
use biclosed::canonical::{a_of, act_word, base_epset, i_of, BiclosedCanonical};
use biclosed::roots::{Root, RootSystemType, SimpleSet};

fn main() {
    let ty = RootSystemType::A2;

    // Φ̂⁺_{{β},∅}: rays on α and α+β only — the set of the bijection
    // example.
    let c = BiclosedCanonical::new(ty, &[], SimpleSet::B, SimpleSet::EMPTY).unwrap();
    println!("Φ̂⁺_{{{{β}},∅}} rays: {:?}", i_of(c.epset()));
    println!("inhabited:      {:?}", a_of(c.epset()));
    assert!(is_biclosed_exact(c.epset()));

    // The action x·Γ = (Φ_x ∖ x(−Γ)) ∪ (x(Γ) ∖ (−Φ_x)) is a group action
    // and acting by s_α maps hat sets to hat sets of the reflected system.
    let base = base_epset(ty, SimpleSet::EMPTY, SimpleSet::EMPTY);
    let acted = act_word(ty, &[0], &base);
    println!("\ns_α · widehat(Φ⁺) has rays on {:?}", i_of(&acted));
    let roundtrip = act_word(ty, &[0], &acted);
    assert_eq!(roundtrip, base);

    // act(x, ∅) is the inversion set Φ_x.
    let inv = act_word(ty, &[0, 1], &EPSet::empty(ty));
    println!("act(s_α s_β, ∅) = {{α, α+β}}: {}", inv.cardinality() == Some(2));

    // Normalization: any representative word reduces to the minimal one.
    let c2 = BiclosedCanonical::new(ty, &[0, 0, 0], SimpleSet::B, SimpleSet::EMPTY).unwrap();
    println!("\n(s_α s_α s_α, {{β}}, ∅) normalizes to w = {:?}", c2.word);

    // Membership in constant work per query from the interval form.
    let c3 = BiclosedCanonical::new(ty, &[0], SimpleSet::FULL, SimpleSet::EMPTY).unwrap();
    println!(
        "Φ_{{s_α}} contains α: {}, contains β: {}",
        c3.member(AffineRoot::new(Root::new(1, 0), 0)),
        c3.member(AffineRoot::new(Root::new(0, 1), 0)),
    );
}
