//! Canonical forms w·Φ̂⁺_{L,K} for biclosed sets in the affine positive
//! system, the W-action on biclosed sets, the I/A direction maps, and the
//! classification of finitely generated biclosed sets.
//!
//! Every biclosed set of the rank-3 affine positive system is w·Φ̂⁺_{L,K}
//! for a unique pair of orthogonal subsets L, K ⊆ Π and a minimal word w.
//! Equality of canonical forms is equality of the underlying [`EPSet`]s,
//! and the minimal representative is found by length-lex search against a
//! per-(L,K) table of known sets.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::affine::{closure, AffineRoot, EPSet};
use crate::error::{Error, Result};
use crate::roots::{positive_systems, system, PositiveSystem, Root, RootSystemType, SimpleSet, ALPHA, BETA};
use crate::weyl::{elements_up_to, inversions, word_to_elt, WElt};

/// The biclosed-set action x·Γ = (Φ_x ∖ x(−Γ)) ∪ (x(Γ) ∖ (−Φ_x)).
///
/// Equivalently: the positive part of x(Γ), together with the part of Φ_x
/// not hit by the negated image; the negative part of x(Γ) always lands in
/// −Φ_x, which the debug assertion checks.
pub fn act(ty: RootSystemType, x: &WElt, gamma: &EPSet) -> EPSet {
    let (pos, negated) = gamma.transform(|d| x.direction_map(d));
    let phi_x = inversions(ty, x);
    let mut out = pos;
    for &r in &phi_x {
        if !negated.contains(&r) {
            out.insert(r);
        }
    }
    debug_assert!(
        negated.iter().all(|r| phi_x.contains(r)),
        "negative image escaped the inversion set"
    );
    out
}

pub fn act_word(ty: RootSystemType, word: &[u8], gamma: &EPSet) -> EPSet {
    act(ty, &word_to_elt(ty, word), gamma)
}

/// Φ̂⁺_{L,K} = widehat((Φ⁺ ∖ Φ_L) ∪ Φ_K) for orthogonal L, K ⊆ Π.
pub fn base_epset(ty: RootSystemType, l: SimpleSet, k: SimpleSet) -> EPSet {
    let sys = system(ty);
    let mut dirs = sys.pos_outside(l);
    for r in sys.span_of(k) {
        if !dirs.contains(&r) {
            dirs.push(r);
        }
    }
    EPSet::widehat(ty, &dirs)
}

/// The orthogonal (L,K) pairs over the standard simple system.  In an
/// irreducible rank-2 system the two simples are never orthogonal, so one
/// side of each pair is empty.
pub fn orthogonal_lk_pairs(ty: RootSystemType) -> Vec<(SimpleSet, SimpleSet)> {
    let sys = system(ty);
    let mut out = Vec::new();
    for l in SimpleSet::ALL {
        for k in SimpleSet::ALL {
            let disjoint = l.0 & k.0 == 0;
            if disjoint && sys.orthogonal_sets(l, k) {
                out.push((l, k));
            }
        }
    }
    out
}

/// Canonical form (w, L, K) for the biclosed set w·Φ̂⁺_{L,K}, with w the
/// length-lex minimal representative and the denoted set cached.
#[derive(Clone, Debug)]
pub struct BiclosedCanonical {
    pub ty: RootSystemType,
    pub word: Vec<u8>,
    pub l: SimpleSet,
    pub k: SimpleSet,
    epset: EPSet,
}

impl PartialEq for BiclosedCanonical {
    fn eq(&self, other: &Self) -> bool {
        self.epset == other.epset
    }
}
impl Eq for BiclosedCanonical {}

impl BiclosedCanonical {
    /// Builds from any representative word; the result is renormalized.
    pub fn new(ty: RootSystemType, word: &[u8], l: SimpleSet, k: SimpleSet) -> Result<BiclosedCanonical> {
        let sys = system(ty);
        if l.0 & k.0 != 0 || !sys.orthogonal_sets(l, k) {
            return Err(Error::NotOrthogonal(format!("{l:?}"), format!("{k:?}")));
        }
        let e = act(ty, &word_to_elt(ty, word), &base_epset(ty, l, k));
        recognize(&e, word.len() + 2)
    }

    pub fn epset(&self) -> &EPSet {
        &self.epset
    }

    pub fn member(&self, r: AffineRoot) -> bool {
        self.epset.contains(r)
    }

    pub fn elt(&self) -> WElt {
        word_to_elt(self.ty, &self.word)
    }
}

/// Direction maps of the theory: I_B = directions meeting B infinitely
/// often, A_B = directions meeting B at all.
pub fn i_of(e: &EPSet) -> Vec<Root> {
    e.ray_directions()
}

pub fn a_of(e: &EPSet) -> Vec<Root> {
    e.inhabited_directions()
}

/// Finite Weyl group elements as permutations of the root list.
fn finite_weyl(ty: RootSystemType) -> &'static Vec<Vec<Root>> {
    static CACHE: OnceLock<Mutex<HashMap<RootSystemType, &'static Vec<Vec<Root>>>>> = OnceLock::new();
    let m = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = m.lock().unwrap();
    guard.entry(ty).or_insert_with(|| {
        let sys = system(ty);
        let id: Vec<Root> = sys.roots.clone();
        let mut seen = vec![id.clone()];
        let mut queue = vec![id];
        while let Some(cur) = queue.pop() {
            for s in [ALPHA, BETA] {
                let img: Vec<Root> = cur.iter().map(|&r| sys.reflect(s, r)).collect();
                if !seen.contains(&img) {
                    seen.push(img.clone());
                    queue.push(img);
                }
            }
        }
        Box::leak(Box::new(seen))
    })
}

fn apply_perm(ty: RootSystemType, perm: &[Root], r: Root) -> Root {
    perm[system(ty).root_index(r).expect("root")]
}

/// Writes a biclosed subset of Φ as (Ψ⁺, M, N) with M, N orthogonal subsets
/// of the simple system of Ψ⁺.
pub fn recognize_in_phi(ty: RootSystemType, set: &[Root]) -> Option<(PositiveSystem, Vec<Root>, Vec<Root>)> {
    let sys = system(ty);
    let mut sorted = set.to_vec();
    sorted.sort();
    for ps in positive_systems(sys) {
        for m_mask in 0..4u8 {
            for n_mask in 0..4u8 {
                if m_mask & n_mask != 0 {
                    continue;
                }
                let m: Vec<Root> = ps.simples.iter().copied().enumerate().filter(|(i, _)| m_mask & (1 << i) != 0).map(|(_, r)| r).collect();
                let n: Vec<Root> = ps.simples.iter().copied().enumerate().filter(|(i, _)| n_mask & (1 << i) != 0).map(|(_, r)| r).collect();
                if m.iter().any(|&x| n.iter().any(|&y| sys.inner(x, y) != 0)) {
                    continue;
                }
                let span = |gens: &[Root]| -> Vec<Root> {
                    match gens.len() {
                        0 => vec![],
                        1 => vec![gens[0], gens[0].neg()],
                        _ => sys.roots.clone(),
                    }
                };
                let rm = span(&m);
                let ad = span(&n);
                let mut form: Vec<Root> = ps.roots.iter().copied().filter(|r| !rm.contains(r)).collect();
                for r in ad {
                    if !form.contains(&r) {
                        form.push(r);
                    }
                }
                form.sort();
                if form == sorted {
                    return Some((ps, m, n));
                }
            }
        }
    }
    None
}

struct Table {
    by_epset: HashMap<EPSet, Vec<u8>>,
    filled_to: usize,
}

fn canon_tables() -> &'static Mutex<HashMap<(RootSystemType, SimpleSet, SimpleSet), Table>> {
    static CACHE: OnceLock<Mutex<HashMap<(RootSystemType, SimpleSet, SimpleSet), Table>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Recognizes an [`EPSet`] as a canonical biclosed form, searching for the
/// length-lex minimal word up to `max_len` letters.
pub fn recognize(e: &EPSet, max_len: usize) -> Result<BiclosedCanonical> {
    let ty = e.ty;
    let sys = system(ty);
    let rays = e.ray_directions();
    let (ps, m, n) = recognize_in_phi(ty, &rays)
        .ok_or_else(|| Error::Unrecognized(format!("I-set {rays:?} is not of the biclosed form")))?;
    // The unique finite Weyl element z with z(Ψ⁺) = Φ⁺ transports (M, N)
    // to the standard simple system.
    let pos_sorted = {
        let mut v = sys.positive().to_vec();
        v.sort();
        v
    };
    let z = finite_weyl(ty)
        .iter()
        .find(|perm| {
            let mut img: Vec<Root> = ps.roots.iter().map(|&r| apply_perm(ty, perm, r)).collect();
            img.sort();
            img == pos_sorted
        })
        .expect("every positive system is W-conjugate to the standard one");
    let l = SimpleSet::from_members(&m.iter().map(|&r| apply_perm(ty, z, r)).collect::<Vec<_>>())?;
    let k = SimpleSet::from_members(&n.iter().map(|&r| apply_perm(ty, z, r)).collect::<Vec<_>>())?;

    let mut tables = canon_tables().lock().unwrap();
    let table = tables.entry((ty, l, k)).or_insert(Table { by_epset: HashMap::new(), filled_to: 0 });
    loop {
        if let Some(word) = table.by_epset.get(e) {
            return Ok(BiclosedCanonical { ty, word: word.clone(), l, k, epset: e.clone() });
        }
        if table.filled_to >= max_len {
            return Err(Error::Unrecognized(format!(
                "no representative of length ≤ {max_len} for the given set (L={l:?}, K={k:?})"
            )));
        }
        let next = table.filled_to + 1;
        let base = base_epset(ty, l, k);
        for entry in elements_up_to(ty, next).iter() {
            if entry.word.len() != next && !(table.filled_to == 0 && entry.word.is_empty()) {
                continue;
            }
            let img = act(ty, &entry.elt, &base);
            table.by_epset.entry(img).or_insert_with(|| entry.word.clone());
        }
        table.filled_to = next;
    }
}

/// All canonical biclosed sets whose minimal word has ≤ `max_w_len`
/// letters, in deterministic (L,K)-then-length-lex order.
pub fn enumerate_canonical(ty: RootSystemType, max_w_len: usize) -> Vec<BiclosedCanonical> {
    let mut out: Vec<BiclosedCanonical> = Vec::new();
    for (l, k) in orthogonal_lk_pairs(ty) {
        let base = base_epset(ty, l, k);
        let mut seen: Vec<EPSet> = Vec::new();
        for entry in elements_up_to(ty, max_w_len).iter() {
            let e = act(ty, &entry.elt, &base);
            if !seen.contains(&e) {
                seen.push(e.clone());
                out.push(BiclosedCanonical { ty, word: entry.word.clone(), l, k, epset: e });
            }
        }
    }
    out
}

/// Finitely-generated test per the classification: writing I_Γ = Ψ⁺_{L,M},
/// Γ is finitely generated iff M ≠ ∅ and L is the full orthogonal
/// complement of M among the simples of Ψ⁺, or Γ is finite (I_Γ = ∅).
pub fn is_finitely_generated(c: &BiclosedCanonical) -> bool {
    let e = c.epset();
    let rays = e.ray_directions();
    if rays.is_empty() {
        return true;
    }
    let sys = system(c.ty);
    // Any (Ψ, L, M) representation decides; enumerate them all.
    for ps in positive_systems(sys) {
        for m_mask in 1..4u8 {
            let m: Vec<Root> = ps.simples.iter().copied().enumerate().filter(|(i, _)| m_mask & (1 << i) != 0).map(|(_, r)| r).collect();
            let full_l: Vec<Root> = ps
                .simples
                .iter()
                .copied()
                .filter(|&s| m.iter().all(|&x| sys.inner(s, x) == 0) && !m.contains(&s))
                .collect();
            let span = |gens: &[Root]| -> Vec<Root> {
                match gens.len() {
                    0 => vec![],
                    1 => vec![gens[0], gens[0].neg()],
                    _ => sys.roots.clone(),
                }
            };
            let rm = span(&full_l);
            let ad = span(&m);
            let mut form: Vec<Root> = ps.roots.iter().copied().filter(|r| !rm.contains(r)).collect();
            for r in ad {
                if !form.contains(&r) {
                    form.push(r);
                }
            }
            form.sort();
            let mut sorted = rays.clone();
            sorted.sort();
            if form == sorted {
                return true;
            }
        }
    }
    false
}

/// The explicit finite generating set of a finitely generated canonical
/// form: every root of every finite δ-string, plus the foot of every ray.
/// The construction is verified by closing it back up exactly.
pub fn generators(c: &BiclosedCanonical) -> Result<Vec<AffineRoot>> {
    if !is_finitely_generated(c) {
        return Err(Error::NotFinitelyGenerated);
    }
    let e = c.epset();
    let sys = system(c.ty);
    let mut gens = Vec::new();
    for &dir in &sys.roots {
        let ls = e.levels(dir);
        for &iv in ls.intervals() {
            match iv.hi() {
                Some(hi) => {
                    for lvl in iv.lo()..=hi {
                        gens.push(AffineRoot::new(dir, lvl));
                    }
                }
                None => gens.push(AffineRoot::new(dir, iv.lo())),
            }
        }
    }
    let back = closure(c.ty, &gens)?;
    if &back != e {
        return Err(Error::Verification("generating set does not regenerate the set".into()));
    }
    Ok(gens)
}

/// For a non-finitely-generated Γ: truncating at level `t` and closing
/// fails to regenerate Γ; returns the closure together with a missing root
/// one level above the truncation, as the classification proof exhibits.
pub fn truncation_gap(c: &BiclosedCanonical, t: i32) -> Result<(EPSet, AffineRoot)> {
    let e = c.epset();
    let trunc: Vec<AffineRoot> = e.truncate(t).into_iter().collect();
    let cl = closure(c.ty, &trunc)?;
    if &cl == e {
        return Err(Error::Verification(format!("truncation at {t} regenerated the set")));
    }
    let missing = e.minus(&cl);
    let sys = system(c.ty);
    let witness = sys
        .roots
        .iter()
        .filter_map(|&dir| {
            let ls = missing.levels(dir);
            ls.min().map(|lvl| AffineRoot::new(dir, lvl))
        })
        .find(|r| r.level == t + 1 && e.levels(r.dir).has_ray())
        .ok_or_else(|| Error::Verification("no missing root at level t+1".into()))?;
    Ok((cl, witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::{is_biclosed_exact, is_biclosed_window, Iv, Window};
    use crate::roots::ALPHA;

    const A2: RootSystemType = RootSystemType::A2;

    #[test]
    fn base_sets() {
        // (e, ∅, ∅) is widehat(Φ⁺); (e, Π, ∅) is empty; (e, ∅, Π) is full.
        let e1 = base_epset(A2, SimpleSet::EMPTY, SimpleSet::EMPTY);
        assert_eq!(e1.ray_directions().len(), 3);
        assert!(base_epset(A2, SimpleSet::FULL, SimpleSet::EMPTY).is_empty());
        assert_eq!(base_epset(A2, SimpleSet::EMPTY, SimpleSet::FULL), EPSet::full(A2));
    }

    #[test]
    fn act_identity_and_empty() {
        let full = EPSet::full(A2);
        assert_eq!(act(A2, &WElt::identity(), &full), full);
        // act(x, ∅) = Φ_x.
        let x = word_to_elt(A2, &[0, 1]);
        let img = act(A2, &x, &EPSet::empty(A2));
        let mut want = EPSet::empty(A2);
        for r in inversions(A2, &x) {
            want.insert(r);
        }
        assert_eq!(img, want);
    }

    #[test]
    fn act_is_a_group_action_and_commutes_with_complement() {
        let gamma = base_epset(A2, SimpleSet::B, SimpleSet::EMPTY);
        for xw in [&[0u8][..], &[1], &[2], &[0, 1], &[2, 0]] {
            for yw in [&[1u8][..], &[0, 2], &[1, 0]] {
                let x = word_to_elt(A2, xw);
                let y = word_to_elt(A2, yw);
                let xy = x.mul(&y);
                assert_eq!(act(A2, &xy, &gamma), act(A2, &x, &act(A2, &y, &gamma)));
            }
            let x = word_to_elt(A2, xw);
            assert_eq!(act(A2, &x, &gamma.complement()), act(A2, &x, &gamma).complement());
        }
    }

    #[test]
    fn to_epset_examples() {
        // (e, {β}, ∅) in Ã₂: rays on α and α+β only.
        let c = BiclosedCanonical::new(A2, &[], SimpleSet::B, SimpleSet::EMPTY).unwrap();
        let e = c.epset();
        assert_eq!(e.levels(ALPHA), &crate::affine::LevelSet::single(Iv::Ray { lo: 0 }));
        assert_eq!(e.levels(Root::new(1, 1)), &crate::affine::LevelSet::single(Iv::Ray { lo: 0 }));
        assert!(e.levels(Root::new(0, 1)).is_empty());
        // (s_α, Π, ∅) is Φ_{s_α} = {α}.
        let c = BiclosedCanonical::new(A2, &[0], SimpleSet::FULL, SimpleSet::EMPTY).unwrap();
        assert_eq!(c.epset().cardinality(), Some(1));
        assert!(c.member(AffineRoot::new(ALPHA, 0)));
    }

    #[test]
    fn i_and_a_examples() {
        let full = EPSet::full(A2);
        assert_eq!(i_of(&full).len(), 6);
        assert_eq!(a_of(&full).len(), 6);
        let c = BiclosedCanonical::new(A2, &[0], SimpleSet::FULL, SimpleSet::EMPTY).unwrap();
        assert!(i_of(c.epset()).is_empty());
        assert_eq!(a_of(c.epset()), vec![ALPHA]);
        let c = BiclosedCanonical::new(A2, &[], SimpleSet::B, SimpleSet::EMPTY).unwrap();
        assert_eq!(i_of(c.epset()), vec![ALPHA, Root::new(1, 1)]);
        assert_eq!(a_of(c.epset()), i_of(c.epset()));
    }

    #[test]
    fn canonical_forms_are_biclosed_and_normalized() {
        for ty in RootSystemType::ALL {
            for c in enumerate_canonical(ty, 3) {
                assert!(is_biclosed_exact(c.epset()), "{ty} {:?}", c);
                let again = BiclosedCanonical::new(ty, &c.word, c.l, c.k).unwrap();
                assert_eq!(again.word, c.word, "normalization must be idempotent");
                assert!(is_biclosed_window(c.epset(), Window::new(8).unwrap()));
            }
        }
    }

    #[test]
    fn normalization_picks_minimal_words() {
        // s_α s_α = e, so acting twice lands back on the base form.
        let c = BiclosedCanonical::new(A2, &[0, 0], SimpleSet::B, SimpleSet::EMPTY);
        assert!(c.is_err() || c.unwrap().word.is_empty());
        let c = BiclosedCanonical::new(A2, &[], SimpleSet::B, SimpleSet::EMPTY).unwrap();
        let moved = act_word(A2, &[0], c.epset());
        let back = act_word(A2, &[0], &moved);
        assert_eq!(&back, c.epset());
    }

    #[test]
    fn finitely_generated_classification_examples() {
        // Finite sets generate themselves.
        let fin = BiclosedCanonical::new(A2, &[0, 1], SimpleSet::FULL, SimpleSet::EMPTY).unwrap();
        assert!(is_finitely_generated(&fin));
        assert_eq!(generators(&fin).unwrap().len(), 2);
        // Φ̂⁺_{{β},∅} is not finitely generated.
        let nfg = BiclosedCanonical::new(A2, &[], SimpleSet::B, SimpleSet::EMPTY).unwrap();
        assert!(!is_finitely_generated(&nfg));
        assert!(generators(&nfg).is_err());
        // Φ̂⁺_{∅,{α}} is finitely generated.
        let fg = BiclosedCanonical::new(A2, &[], SimpleSet::EMPTY, SimpleSet::A).unwrap();
        assert!(is_finitely_generated(&fg));
        let gens = generators(&fg).unwrap();
        let cl = closure(A2, &gens).unwrap();
        assert_eq!(&cl, fg.epset());
        // Truncation gaps for the non-finitely-generated set.
        let (_, witness) = truncation_gap(&nfg, 2).unwrap();
        assert_eq!(witness.level, 3);
    }
}
