//! The complete ortholattice of biclosed sets: the four join cases,
//! complement laws, chains, and finite-closure joins.

use biclosed::lattice::{chain_intersection, chain_union, finite_closure_join, join, meet_b, BElement};
use biclosed::roots::RootSystemType;
use biclosed::words::{FiniteWord, WBarElement};

fn main() {
    let ty = RootSystemType::A2;
    let fw = |letters: &[u8]| WBarElement::Finite(FiniteWord::new(ty, letters).unwrap());

    // Case Inv ∨ Inv, bounded: join inside W̄.
    let j = join(&BElement::inv(fw(&[0])), &BElement::inv(fw(&[1]))).unwrap();
    println!("Φ_s_α ∨ Φ_s_β = Φ_{{s_α s_β s_α}}: {:?}", j.word());

    // Case Inv ∨ Inv, unbounded: the complement of the orthogonal join.
    let j = join(&BElement::inv(fw(&[0])), &BElement::inv(fw(&[1, 2]))).unwrap();
    println!("unbounded pair joins to a complement: {}", j.is_complemented());

    // Case CoInv ∨ CoInv: complement of the meet.
    let j = join(&BElement::coinv(fw(&[0, 1])), &BElement::coinv(fw(&[0, 2]))).unwrap();
    println!("Φ'_{{s_α s_β}} ∨ Φ'_{{s_α s_δγ}} = Φ'_{{s_α}}: {:?}", j.word());

    // Ortholattice laws.
    let b = BElement::inv(fw(&[0, 1]));
    let c = b.complement();
    assert_eq!(join(&b, &c).unwrap(), BElement::top(ty));
    assert_eq!(meet_b(&b, &c).unwrap(), BElement::bottom(ty));
    println!("B ∨ Bᶜ = Φ̂⁺ and B ∧ Bᶜ = ∅ hold");

    // Chains: unions and intersections of comparable elements.
    let chain = [BElement::inv(fw(&[0])), BElement::inv(fw(&[0, 1])), BElement::inv(fw(&[0, 1, 0]))];
    println!("chain union: {:?}", chain_union(&chain).unwrap().word());
    println!("chain intersection: {:?}", chain_intersection(&chain).unwrap().word());

    // The finite-closure join: finite closures are biclosed.
    let words = [FiniteWord::new(ty, &[0]).unwrap(), FiniteWord::new(ty, &[1]).unwrap()];
    let fj = finite_closure_join(&words).unwrap().unwrap();
    println!("finite closure join of {{s_α, s_β}}: {:?}", fj.word());
    let unbounded = [FiniteWord::new(ty, &[0]).unwrap(), FiniteWord::new(ty, &[1, 2]).unwrap()];
    assert!(finite_closure_join(&unbounded).unwrap().is_none());
    println!("an opposite-direction pair has no finite closure");
}
