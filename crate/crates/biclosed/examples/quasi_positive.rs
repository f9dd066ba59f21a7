//! The quasi-positive system counterexample: inside
//! Ψ = {−α+lδ, −β+mδ, −α−β+nδ | l,m,n ∈ Z} of Ã₂ the biclosed sets B₁
//! and B₂ admit no meet, because the closure of B₃ ∪ B₄ fills B₁ ∩ B₂ but
//! is not coclosed in Ψ.

use biclosed::lattice::quasi_positive_counterexample;

fn main() {
    for window in [6, 10] {
        let r = quasi_positive_counterexample(window);
        println!("window |level| ≤ {window}:");
        println!("  B₃, B₄ ⊆ B₁ ∩ B₂:                  {}", r.lower_bounds_contained);
        println!("  closure(B₃ ∪ B₄) = B₁ ∩ B₂:        {}", r.closure_fills_intersection);
        println!("  that closure is not coclosed in Ψ: {}", r.not_coclosed);
        assert!(r.all_hold());
    }
    println!("\nso no meet of B₁ and B₂ exists in the biclosed sets of Ψ");
}
