//! The finite rank-2 root systems: generation by reflection closure,
//! Cartan data, the h/d functions, and biclosed subsets of Φ.

use biclosed::roots::{
    d_l, h_l, is_biclosed_in_phi, positive_systems, system, PhiBiclosed, Root, RootSystemType,
    SimpleSet, ALPHA, BETA,
};

fn main() {
    for ty in RootSystemType::ALL {
        let sys = system(ty);
        println!("{ty}: |Φ| = {}, highest root = {}", sys.roots.len(), sys.highest);
        println!("  Cartan matrix: {:?}", sys.cartan);
        println!("  positive systems: {}", positive_systems(sys).len());
    }

    let g2 = system(RootSystemType::G2);
    println!("\nG2 reflections: s_α(β) = {}", g2.reflect(ALPHA, BETA));

    // h_L sums the simple-root coefficients outside L; d_L counts the
    // longest decompositions into roots outside Φ_L.  They agree.
    for ty in RootSystemType::ALL {
        let sys = system(ty);
        for l in SimpleSet::ALL {
            for &r in sys.positive() {
                assert_eq!(h_l(sys, r, l).unwrap(), d_l(sys, r, l).unwrap());
            }
        }
    }
    println!("\nh_L = d_L on every positive root of A2, B2, G2");
    let a2 = system(RootSystemType::A2);
    println!("A2, L = {{β}}: h(α+β) = {}", h_l(a2, Root::new(1, 1), SimpleSet::B).unwrap());
    println!("G2, L = ∅:  h(3α+2β) = {}", h_l(g2, Root::new(3, 2), SimpleSet::EMPTY).unwrap());

    // Biclosed subsets of Φ are exactly the Ψ⁺_{Δ′,Δ″}.
    let std_pos = positive_systems(a2)
        .into_iter()
        .find(|p| p.contains(ALPHA) && p.contains(BETA))
        .unwrap();
    let pb = PhiBiclosed::new(a2, std_pos, vec![ALPHA], vec![]).unwrap();
    let set = pb.set(a2);
    println!("\nA2: Φ⁺ with Δ′ = {{α}} removed: {set:?}");
    assert!(is_biclosed_in_phi(a2, &set));
    assert!(!is_biclosed_in_phi(a2, &[ALPHA, BETA]));
    println!("{{α, β}} is not biclosed (α+β missing), as expected");
}
