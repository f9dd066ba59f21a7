//! The complete ortholattice of biclosed sets in the affine positive
//! system of a rank-3 affine Weyl group.
//!
//! Every biclosed set here is an inversion set Φ_x or a complement Φ_x′
//! for x ∈ W̄, so a [`BElement`] is one of those two tagged by the word.
//! Joins follow the four-case dispatch of the theory: bounded pairs of
//! inversion sets join inside W̄, unbounded pairs and mixed pairs go
//! through the join of the orthogonal family, and complements meet on the
//! word side.  Meets are De Morgan duals through the ortho-complement.

use crate::affine::{closure_epset, combination_coeffs, AffineRoot, EPSet, Rat};
use crate::error::{Error, Result};
use crate::roots::{Root, RootSystemType};
use crate::words::{certified_max, join_bounded, meet, word_of_epset, FiniteWord, WBarElement};

/// A biclosed set of the affine positive system: an inversion set Inv(x)
/// or the complement CoInv(x) of one.  Positive-system hats are both; they
/// normalize to Inv.
#[derive(Clone, Debug)]
pub struct BElement {
    word: WBarElement,
    complemented: bool,
    epset: EPSet,
}

impl PartialEq for BElement {
    fn eq(&self, other: &Self) -> bool {
        self.epset == other.epset
    }
}
impl Eq for BElement {}

impl BElement {
    pub fn inv(x: WBarElement) -> BElement {
        let epset = x.epset();
        BElement { word: x, complemented: false, epset }
    }

    /// Φ_x′; renormalized to an inversion set when it is one.
    pub fn coinv(x: WBarElement) -> BElement {
        let epset = x.epset().complement();
        match BElement::from_epset(&epset, x.epset().max_described_level() as usize + 24) {
            Ok(b) => b,
            Err(_) => BElement { word: x, complemented: true, epset },
        }
    }

    pub fn bottom(ty: RootSystemType) -> BElement {
        BElement::inv(WBarElement::identity(ty))
    }

    pub fn top(ty: RootSystemType) -> BElement {
        BElement::coinv(WBarElement::identity(ty))
    }

    /// Classifies a biclosed set: no opposite ray pair means an inversion
    /// set; otherwise the complement is one.
    pub fn from_epset(e: &EPSet, max_len: usize) -> Result<BElement> {
        let rays = e.ray_directions();
        let has_pair = rays.iter().any(|&r| rays.contains(&r.neg()));
        if !has_pair {
            let w = word_of_epset(e, max_len)?;
            return Ok(BElement { word: w, complemented: false, epset: e.clone() });
        }
        let comp = e.complement();
        let w = word_of_epset(&comp, max_len)?;
        Ok(BElement { word: w, complemented: true, epset: e.clone() })
    }

    pub fn ty(&self) -> RootSystemType {
        self.epset.ty
    }

    pub fn epset(&self) -> &EPSet {
        &self.epset
    }

    pub fn word(&self) -> &WBarElement {
        &self.word
    }

    pub fn is_complemented(&self) -> bool {
        self.complemented
    }

    pub fn includes(&self, other: &BElement) -> bool {
        self.epset.includes(&other.epset)
    }

    /// Ortho-complement Φ̂⁺ ∖ B.
    pub fn complement(&self) -> BElement {
        if self.complemented {
            BElement::inv(self.word.clone())
        } else {
            BElement::coinv(self.word.clone())
        }
    }
}

/// Least upper bound in the ortholattice, by the four-case dispatch.
pub fn join(b1: &BElement, b2: &BElement) -> Result<BElement> {
    let out = match (b1.complemented, b2.complemented) {
        (false, false) => match join_bounded(&[b1.word.clone(), b2.word.clone()]) {
            Ok(v) => BElement::inv(v),
            Err(Error::Unbounded) => {
                // Join of the family orthogonal to both: Φ_z′ with
                // z = ⋁{w : w ⟂ x, w ⟂ y}.
                let d = b1.epset.complement().intersection(&b2.epset.complement());
                let z = certified_max(&d)?;
                BElement::coinv(z)
            }
            Err(e) => return Err(e),
        },
        (true, true) => {
            let m = meet(&b1.word, &b2.word)?;
            BElement::coinv(m)
        }
        (false, true) => join_mixed(b1, b2)?,
        (true, false) => join_mixed(b2, b1)?,
    };
    if !out.includes(b1) || !out.includes(b2) {
        return Err(Error::Verification("join does not contain an operand".into()));
    }
    Ok(out)
}

/// Inv(x) ∨ CoInv(y) = Φ_z′ with z = ⋁{w : w ⟂ x, w ≤ y}.
fn join_mixed(inv: &BElement, coinv: &BElement) -> Result<BElement> {
    let d = inv.epset.complement().intersection(&coinv.word.epset());
    let z = certified_max(&d)?;
    Ok(BElement::coinv(z))
}

/// Greatest lower bound, through the order-reversing complement.
pub fn meet_b(b1: &BElement, b2: &BElement) -> Result<BElement> {
    let j = join(&b1.complement(), &b2.complement())?;
    let out = j.complement();
    if !b1.includes(&out) || !b2.includes(&out) {
        return Err(Error::Verification("meet is not contained in an operand".into()));
    }
    Ok(out)
}

/// Union of a chain (pairwise comparable family), re-recognized.
pub fn chain_union(chain: &[BElement]) -> Result<BElement> {
    require_chain(chain)?;
    let mut e = EPSet::empty(chain[0].ty());
    for b in chain {
        e = e.union(b.epset());
    }
    BElement::from_epset(&e, 40)
}

/// Intersection of a chain, re-recognized.
pub fn chain_intersection(chain: &[BElement]) -> Result<BElement> {
    require_chain(chain)?;
    let mut e = EPSet::full(chain[0].ty());
    for b in chain {
        e = e.intersection(b.epset());
    }
    BElement::from_epset(&e, 40)
}

fn require_chain(chain: &[BElement]) -> Result<()> {
    if chain.is_empty() {
        return Err(Error::Malformed("empty chain".into()));
    }
    for (i, a) in chain.iter().enumerate() {
        for b in &chain[i + 1..] {
            if !a.includes(b) && !b.includes(a) {
                return Err(Error::NotComparable);
            }
        }
    }
    Ok(())
}

/// If the closure of ⋃ Φ_x over the finite words is finite, it is biclosed
/// and gives the join of the family; otherwise the family has no finite
/// closure and `None` is returned.
pub fn finite_closure_join(words: &[FiniteWord]) -> Result<Option<BElement>> {
    let ty = words.first().map(|w| w.ty).ok_or_else(|| Error::Malformed("empty family".into()))?;
    let mut u = EPSet::empty(ty);
    for w in words {
        u = u.union(&w.epset());
    }
    let c = closure_epset(&u)?;
    if !c.is_finite() {
        return Ok(None);
    }
    if !crate::affine::is_biclosed_exact(&c) {
        return Err(Error::Verification("finite closure failed biclosedness".into()));
    }
    Ok(Some(BElement::from_epset(&c, 40)?))
}

/// Report of the quasi-positive counterexample checks in Ã₂.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuasiPositiveReport {
    /// B₃ and B₄ are contained in B₁ ∩ B₂.
    pub lower_bounds_contained: bool,
    /// The closure of B₃ ∪ B₄ inside Ψ equals B₁ ∩ B₂ on the window.
    pub closure_fills_intersection: bool,
    /// That set is not coclosed in Ψ, so B₁ and B₂ admit no meet there.
    pub not_coclosed: bool,
}

impl QuasiPositiveReport {
    pub fn all_hold(&self) -> bool {
        self.lower_bounds_contained && self.closure_fills_intersection && self.not_coclosed
    }
}

/// The quasi-positive system Ψ = {−α+lδ, −β+mδ, −γ+nδ | l,m,n ∈ Z} of Ã₂
/// contains biclosed sets B₁, B₂ whose meet would be forced to equal the
/// closure of B₃ ∪ B₄, yet that closure is not biclosed in Ψ.  All three
/// verdicts are checked on the level window |n| ≤ w.
pub fn quasi_positive_counterexample(window: i32) -> QuasiPositiveReport {
    type LevelPred = (Root, fn(i32) -> bool);
    let neg_a = Root::new(-1, 0);
    let neg_b = Root::new(0, -1);
    let neg_g = Root::new(-1, -1);
    let dirs = [neg_a, neg_b, neg_g];
    let member = |sets: &[LevelPred], r: AffineRoot| -> bool {
        sets.iter().any(|&(d, f)| d == r.dir && f(r.level))
    };
    let any = |_l: i32| true;
    let nonneg = |l: i32| l >= 0;
    let nonpos = |l: i32| l <= 0;
    let b1: Vec<LevelPred> = vec![(neg_a, any), (neg_b, nonpos), (neg_g, any)];
    let b2: Vec<LevelPred> = vec![(neg_a, nonneg), (neg_b, any), (neg_g, any)];
    let b3: Vec<LevelPred> = vec![(neg_a, nonneg)];
    let b4: Vec<LevelPred> = vec![(neg_b, nonpos)];
    let target: Vec<LevelPred> = vec![(neg_a, nonneg), (neg_b, nonpos), (neg_g, any)];

    let universe: Vec<AffineRoot> = dirs
        .iter()
        .flat_map(|&d| (-window..=window).map(move |l| AffineRoot::new(d, l)))
        .collect();

    let lower_bounds_contained = universe.iter().all(|&r| {
        (!member(&b3, r) || (member(&b1, r) && member(&b2, r)))
            && (!member(&b4, r) || (member(&b1, r) && member(&b2, r)))
    });

    // Closure of B₃ ∪ B₄ inside Ψ, windowed pairwise fixpoint.
    let mut set: Vec<AffineRoot> = universe.iter().copied().filter(|&r| member(&b3, r) || member(&b4, r)).collect();
    loop {
        let mut added = Vec::new();
        for &a in &set {
            for &b in &set {
                for &t in &universe {
                    if set.contains(&t) || added.contains(&t) {
                        continue;
                    }
                    if let Some((k1, k2)) = combination_coeffs(a, b, t) {
                        if k1 >= Rat::from_integer(0) && k2 >= Rat::from_integer(0) {
                            added.push(t);
                        }
                    }
                }
            }
        }
        if added.is_empty() {
            break;
        }
        set.extend(added);
    }
    let closure_fills_intersection = universe.iter().all(|&r| set.contains(&r) == member(&target, r));

    // Coclosedness failure: two Ψ-roots outside the target combining into it.
    let mut not_coclosed = false;
    'outer: for &a in &universe {
        if member(&target, a) {
            continue;
        }
        for &b in &universe {
            if member(&target, b) {
                continue;
            }
            for &t in &universe {
                if !member(&target, t) {
                    continue;
                }
                if let Some((k1, k2)) = combination_coeffs(a, b, t) {
                    if k1 >= Rat::from_integer(0) && k2 >= Rat::from_integer(0) {
                        not_coclosed = true;
                        break 'outer;
                    }
                }
            }
        }
    }

    QuasiPositiveReport { lower_bounds_contained, closure_fills_intersection, not_coclosed }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::SimpleSet;
    use crate::words::periodic_word;

    const A2: RootSystemType = RootSystemType::A2;

    fn fw(letters: &[u8]) -> WBarElement {
        WBarElement::Finite(FiniteWord::new(A2, letters).unwrap())
    }

    #[test]
    fn join_of_bounded_inversion_sets() {
        let j = join(&BElement::inv(fw(&[0])), &BElement::inv(fw(&[1]))).unwrap();
        assert_eq!(j, BElement::inv(fw(&[0, 1, 0])));
    }

    #[test]
    fn join_of_complements_is_complement_of_meet() {
        let x = fw(&[0, 1]);
        let y = fw(&[0, 2]);
        let j = join(&BElement::coinv(x), &BElement::coinv(y)).unwrap();
        assert_eq!(j, BElement::coinv(fw(&[0])));
    }

    #[test]
    fn ortholattice_laws_on_small_elements() {
        let elems = [
            BElement::inv(fw(&[])),
            BElement::inv(fw(&[0])),
            BElement::inv(fw(&[0, 1])),
            BElement::coinv(fw(&[1])),
            BElement::inv(WBarElement::Infinite(periodic_word(A2, &[], &[0, 1, 2]).unwrap())),
        ];
        let top = BElement::top(A2);
        let bottom = BElement::bottom(A2);
        assert_eq!(top.epset(), &EPSet::full(A2));
        for b in &elems {
            let c = b.complement();
            assert_eq!(c.complement(), *b);
            assert_eq!(join(b, &c).unwrap(), top);
            assert_eq!(meet_b(b, &c).unwrap(), bottom);
            assert_eq!(join(b, b).unwrap(), *b);
            assert_eq!(meet_b(b, &top).unwrap(), *b);
        }
        for b1 in &elems {
            for b2 in &elems {
                let j12 = join(b1, b2).unwrap();
                assert_eq!(j12, join(b2, b1).unwrap());
                // Absorption.
                assert_eq!(meet_b(b1, &j12).unwrap(), *b1);
            }
        }
    }

    #[test]
    fn complement_of_maximal_word_normalizes_to_inversion_set() {
        let u = periodic_word(A2, &[], &[0, 1, 0, 2]).unwrap(); // widehat(Φ⁺)
        let c = BElement::coinv(WBarElement::Infinite(u));
        assert!(!c.is_complemented(), "Ψ̂⁺-complements are again inversion sets");
    }

    #[test]
    fn chains() {
        let c1 = BElement::inv(fw(&[0]));
        let c2 = BElement::inv(fw(&[0, 1]));
        let c3 = BElement::inv(fw(&[0, 1, 0]));
        let u = chain_union(&[c1.clone(), c2.clone(), c3.clone()]).unwrap();
        assert_eq!(u, c3);
        let i = chain_intersection(&[c1.clone(), c2, c3]).unwrap();
        assert_eq!(i, c1);
        let incomparable = [BElement::inv(fw(&[0])), BElement::inv(fw(&[1]))];
        assert!(matches!(chain_union(&incomparable), Err(Error::NotComparable)));
    }

    #[test]
    fn finite_closure_join_cases() {
        let w = |l: &[u8]| FiniteWord::new(A2, l).unwrap();
        let j = finite_closure_join(&[w(&[0])]).unwrap().unwrap();
        assert_eq!(j, BElement::inv(fw(&[0])));
        let j = finite_closure_join(&[w(&[0]), w(&[1])]).unwrap().unwrap();
        assert_eq!(j, BElement::inv(fw(&[0, 1, 0])));
        // Opposite directions force an infinite closure.
        let j = finite_closure_join(&[w(&[0]), w(&[1, 2])]).unwrap();
        assert!(j.is_none());
    }

    #[test]
    fn quasi_positive_counterexample_verdicts() {
        for n in [6, 10] {
            let report = quasi_positive_counterexample(n);
            assert!(report.lower_bounds_contained);
            assert!(report.closure_fills_intersection);
            assert!(report.not_coclosed);
        }
    }

    #[test]
    fn mixed_join_case() {
        // join(Φ_x, Φ_y′) = Φ_z′ with z = ⋁{w ⟂ x, w ≤ y}.
        let x = fw(&[0]);
        let y = fw(&[1, 0]);
        let j = join(&BElement::inv(x.clone()), &BElement::coinv(y)).unwrap();
        assert!(j.includes(&BElement::inv(x)));
        // Sanity against the definition: z ≤ y and z ⟂ x.
        assert!(j.is_complemented() || j.epset() == &EPSet::full(A2));
    }

    #[test]
    fn canonical_belements_satisfy_lub_within_sample() {
        let sample: Vec<BElement> = crate::canonical::enumerate_canonical(A2, 2)
            .into_iter()
            .map(|c| BElement::from_epset(c.epset(), 8).unwrap())
            .collect();
        assert!(sample.len() >= 20);
        for b1 in sample.iter().take(8) {
            for b2 in sample.iter().take(8) {
                let j = join(b1, b2).unwrap();
                for ub in &sample {
                    if ub.includes(b1) && ub.includes(b2) {
                        assert!(ub.includes(&j), "join is not least");
                    }
                }
            }
        }
    }

    #[test]
    fn belement_from_canonical_k_form_is_complemented() {
        let c = crate::canonical::BiclosedCanonical::new(A2, &[], SimpleSet::EMPTY, SimpleSet::A).unwrap();
        let b = BElement::from_epset(c.epset(), 8).unwrap();
        assert!(b.is_complemented());
    }
}
