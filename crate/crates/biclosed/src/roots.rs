//! Exact rank-2 crystallographic root systems A2, B2 and G2.
//!
//! Roots are stored as integer coefficient pairs in the simple basis of the
//! standard positive system.  Inner products come from the Gram matrix
//! normalized so that short roots have squared length 2, which keeps every
//! product (and every Cartan pairing) an integer.

use std::fmt;
use std::sync::OnceLock;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Cached immutable root-system data per type.
pub fn system(ty: RootSystemType) -> &'static RootSystem {
    static CACHE: OnceLock<[RootSystem; 3]> = OnceLock::new();
    let all = CACHE.get_or_init(|| {
        [
            RootSystem::generate(RootSystemType::A2),
            RootSystem::generate(RootSystemType::B2),
            RootSystem::generate(RootSystemType::G2),
        ]
    });
    match ty {
        RootSystemType::A2 => &all[0],
        RootSystemType::B2 => &all[1],
        RootSystemType::G2 => &all[2],
    }
}

/// The three rank-2 types whose affinizations are the rank-3 affine Weyl groups.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum RootSystemType {
    A2,
    B2,
    G2,
}

impl RootSystemType {
    pub const ALL: [RootSystemType; 3] = [RootSystemType::A2, RootSystemType::B2, RootSystemType::G2];

    pub fn name(self) -> &'static str {
        match self {
            RootSystemType::A2 => "A2",
            RootSystemType::B2 => "B2",
            RootSystemType::G2 => "G2",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "A2" | "a2" => Ok(RootSystemType::A2),
            "B2" | "b2" | "C2" | "c2" => Ok(RootSystemType::B2),
            "G2" | "g2" => Ok(RootSystemType::G2),
            other => Err(Error::Malformed(format!("unknown root system type {other:?}"))),
        }
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A finite root `a·α + b·β` in the simple basis of the standard positive
/// system.  For B2 and G2 the convention is: α short, β long.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Root {
    pub a: i32,
    pub b: i32,
}

impl Root {
    pub const fn new(a: i32, b: i32) -> Root {
        Root { a, b }
    }

    pub fn neg(self) -> Root {
        Root { a: -self.a, b: -self.b }
    }

    pub fn add(self, o: Root) -> Root {
        Root { a: self.a + o.a, b: self.b + o.b }
    }

    pub fn sub(self, o: Root) -> Root {
        Root { a: self.a - o.a, b: self.b - o.b }
    }

    pub fn height(self) -> i32 {
        self.a + self.b
    }

    /// Collinearity test; in a reduced system the only collinear pairs are ±ρ.
    pub fn collinear(self, o: Root) -> bool {
        (self.a as i64) * (o.b as i64) - (self.b as i64) * (o.a as i64) == 0
    }
}

pub const ALPHA: Root = Root::new(1, 0);
pub const BETA: Root = Root::new(0, 1);

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl Serialize for Root {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.a, self.b].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Root {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = <Vec<i32>>::deserialize(d)?;
        if v.len() != 2 {
            return Err(D::Error::custom("root must be a pair [a,b]"));
        }
        Ok(Root::new(v[0], v[1]))
    }
}

/// Subset of the standard simple system Π = {α, β}, as a 2-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct SimpleSet(pub u8);

impl SimpleSet {
    pub const EMPTY: SimpleSet = SimpleSet(0);
    pub const A: SimpleSet = SimpleSet(1);
    pub const B: SimpleSet = SimpleSet(2);
    pub const FULL: SimpleSet = SimpleSet(3);
    pub const ALL: [SimpleSet; 4] = [SimpleSet(0), SimpleSet(1), SimpleSet(2), SimpleSet(3)];

    pub fn contains(self, r: Root) -> bool {
        (r == ALPHA && self.0 & 1 != 0) || (r == BETA && self.0 & 2 != 0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_full(self) -> bool {
        self.0 == 3
    }

    pub fn members(self) -> Vec<Root> {
        let mut v = Vec::new();
        if self.0 & 1 != 0 {
            v.push(ALPHA);
        }
        if self.0 & 2 != 0 {
            v.push(BETA);
        }
        v
    }

    pub fn from_members(roots: &[Root]) -> Result<SimpleSet> {
        let mut m = 0u8;
        for &r in roots {
            if r == ALPHA {
                m |= 1;
            } else if r == BETA {
                m |= 2;
            } else {
                return Err(Error::Malformed(format!("{r} is not a standard simple root")));
            }
        }
        Ok(SimpleSet(m))
    }
}

/// Immutable data of one rank-2 root system: the full root list (positive
/// roots first, each negative at index `i + n_pos`), simple roots, highest
/// root, Gram and Cartan matrices.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub ty: RootSystemType,
    pub roots: Vec<Root>,
    pub n_pos: usize,
    pub simple: [Root; 2],
    pub highest: Root,
    pub gram: [[i64; 2]; 2],
    pub cartan: [[i64; 2]; 2],
}

fn gram_for(ty: RootSystemType) -> [[i64; 2]; 2] {
    match ty {
        RootSystemType::A2 => [[2, -1], [-1, 2]],
        RootSystemType::B2 => [[2, -2], [-2, 4]],
        RootSystemType::G2 => [[2, -3], [-3, 6]],
    }
}

impl RootSystem {
    /// Builds the root system by closing {±α, ±β} under all reflections.
    pub fn generate(ty: RootSystemType) -> RootSystem {
        let gram = gram_for(ty);
        let inner = |x: Root, y: Root| -> i64 {
            let xa = x.a as i64;
            let xb = x.b as i64;
            let ya = y.a as i64;
            let yb = y.b as i64;
            xa * ya * gram[0][0] + (xa * yb + xb * ya) * gram[0][1] + xb * yb * gram[1][1]
        };
        let mut set: Vec<Root> = vec![ALPHA, BETA, ALPHA.neg(), BETA.neg()];
        loop {
            let mut new = Vec::new();
            for &m in &set {
                for &t in &set {
                    let num = 2 * inner(t, m);
                    let den = inner(m, m);
                    debug_assert_eq!(num % den, 0);
                    let k = (num / den) as i32;
                    let r = Root::new(t.a - k * m.a, t.b - k * m.b);
                    if !set.contains(&r) && !new.contains(&r) {
                        new.push(r);
                    }
                }
            }
            if new.is_empty() {
                break;
            }
            set.extend(new);
        }
        let mut pos: Vec<Root> = set.iter().copied().filter(|r| r.a >= 0 && r.b >= 0).collect();
        pos.sort_by_key(|r| (r.height(), r.a));
        let n_pos = pos.len();
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(|r| r.neg()));
        let highest = *pos.last().unwrap();
        let cartan = [
            [2, 2 * inner(BETA, ALPHA) / inner(ALPHA, ALPHA)],
            [2 * inner(ALPHA, BETA) / inner(BETA, BETA), 2],
        ];
        RootSystem { ty, roots, n_pos, simple: [ALPHA, BETA], highest, gram, cartan }
    }

    pub fn inner(&self, x: Root, y: Root) -> i64 {
        let xa = x.a as i64;
        let xb = x.b as i64;
        let ya = y.a as i64;
        let yb = y.b as i64;
        xa * ya * self.gram[0][0] + (xa * yb + xb * ya) * self.gram[0][1] + xb * yb * self.gram[1][1]
    }

    /// Cartan pairing ⟨t, m∨⟩ = 2(t,m)/(m,m); an integer for any two roots.
    pub fn pairing(&self, t: Root, m: Root) -> i64 {
        let num = 2 * self.inner(t, m);
        let den = self.inner(m, m);
        debug_assert_eq!(num % den, 0, "non-integral Cartan pairing");
        num / den
    }

    /// Reflection of `target` in the hyperplane of `mirror`.
    pub fn reflect(&self, mirror: Root, target: Root) -> Root {
        let k = self.pairing(target, mirror) as i32;
        Root::new(target.a - k * mirror.a, target.b - k * mirror.b)
    }

    pub fn is_root(&self, r: Root) -> bool {
        self.roots.contains(&r)
    }

    pub fn is_positive(&self, r: Root) -> bool {
        self.is_root(r) && r.a >= 0 && r.b >= 0
    }

    pub fn positive(&self) -> &[Root] {
        &self.roots[..self.n_pos]
    }

    pub fn root_index(&self, r: Root) -> Option<usize> {
        self.roots.iter().position(|&x| x == r)
    }

    /// Φ_L: the root subsystem spanned by the simple subset L.
    pub fn span_of(&self, l: SimpleSet) -> Vec<Root> {
        match l.0 {
            0 => vec![],
            1 => vec![ALPHA, ALPHA.neg()],
            2 => vec![BETA, BETA.neg()],
            _ => self.roots.clone(),
        }
    }

    /// Φ⁺_{L,∅} = Φ⁺ ∖ Φ_L.
    pub fn pos_outside(&self, l: SimpleSet) -> Vec<Root> {
        let span = self.span_of(l);
        self.positive().iter().copied().filter(|r| !span.contains(r)).collect()
    }

    pub fn orthogonal_sets(&self, l: SimpleSet, k: SimpleSet) -> bool {
        l.members().iter().all(|&x| k.members().iter().all(|&y| self.inner(x, y) == 0))
    }
}

/// h_L(ρ) = Σ_{α_i ∉ L} k_i for ρ = Σ k_i α_i ∈ Φ⁺.
pub fn h_l(sys: &RootSystem, root: Root, l: SimpleSet) -> Result<u32> {
    if !sys.is_positive(root) {
        return Err(Error::NegativeRoot(root.to_string()));
    }
    let mut h = 0;
    if !l.contains(ALPHA) {
        h += root.a;
    }
    if !l.contains(BETA) {
        h += root.b;
    }
    Ok(h as u32)
}

/// d_L(ρ): the largest n such that ρ is a sum of n elements of Φ⁺_{L,∅},
/// found by exhaustive multiset decomposition, or 0 for ρ ∈ Φ_L.
pub fn d_l(sys: &RootSystem, root: Root, l: SimpleSet) -> Result<u32> {
    if !sys.is_positive(root) {
        return Err(Error::NegativeRoot(root.to_string()));
    }
    if sys.span_of(l).contains(&root) {
        return Ok(0);
    }
    let parts = sys.pos_outside(l);
    fn best(parts: &[Root], remaining: Root, min_idx: usize) -> Option<u32> {
        if remaining == Root::new(0, 0) {
            return Some(0);
        }
        if remaining.a < 0 || remaining.b < 0 {
            return None;
        }
        let mut m = None;
        for i in min_idx..parts.len() {
            if let Some(n) = best(parts, remaining.sub(parts[i]), i) {
                m = Some(m.unwrap_or(0).max(n + 1));
            }
        }
        m
    }
    best(&parts, root, 0).ok_or_else(|| Error::Verification(format!("{root} has no decomposition")))
}

/// One of the |W| positive systems of Φ, with its two simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveSystem {
    pub roots: Vec<Root>,
    pub simples: [Root; 2],
}

impl PositiveSystem {
    pub fn contains(&self, r: Root) -> bool {
        self.roots.contains(&r)
    }
}

/// All positive systems z·Φ⁺, z ∈ W, by orbit closure under the simple
/// reflections.  Simple roots of each system are the two elements that are
/// not sums of two elements of the system.
pub fn positive_systems(sys: &RootSystem) -> Vec<PositiveSystem> {
    let norm = |mut v: Vec<Root>| -> Vec<Root> {
        v.sort();
        v
    };
    let mut seen: Vec<Vec<Root>> = vec![norm(sys.positive().to_vec())];
    let mut queue = seen.clone();
    while let Some(cur) = queue.pop() {
        for &s in &[ALPHA, BETA] {
            let img = norm(cur.iter().map(|&r| sys.reflect(s, r)).collect());
            if !seen.contains(&img) {
                seen.push(img.clone());
                queue.push(img);
            }
        }
    }
    seen.sort();
    seen.into_iter()
        .map(|roots| {
            let mut simples = Vec::new();
            for &r in &roots {
                let is_sum = roots.iter().any(|&x| roots.iter().any(|&y| x.add(y) == r));
                if !is_sum {
                    simples.push(r);
                }
            }
            assert_eq!(simples.len(), 2, "a rank-2 positive system has two simple roots");
            PositiveSystem { roots, simples: [simples[0], simples[1]] }
        })
        .collect()
}

/// Ψ⁺_{Δ′,Δ″} = (Ψ⁺ ∖ Φ_{Δ′}) ∪ Φ_{Δ″} with Δ′ ⟂ Δ″ inside the simple
/// system of Ψ⁺.
#[derive(Clone, Debug)]
pub struct PhiBiclosed {
    pub base: PositiveSystem,
    pub removed: Vec<Root>,
    pub added: Vec<Root>,
}

impl PhiBiclosed {
    pub fn new(sys: &RootSystem, base: PositiveSystem, removed: Vec<Root>, added: Vec<Root>) -> Result<PhiBiclosed> {
        for r in removed.iter().chain(added.iter()) {
            if !base.simples.contains(r) {
                return Err(Error::Malformed(format!("{r} is not simple in the given positive system")));
            }
        }
        for &x in &removed {
            for &y in &added {
                if sys.inner(x, y) != 0 {
                    return Err(Error::NotOrthogonal(x.to_string(), y.to_string()));
                }
            }
        }
        Ok(PhiBiclosed { base, removed, added })
    }

    /// Membership set of Ψ⁺_{Δ′,Δ″}.
    pub fn set(&self, sys: &RootSystem) -> Vec<Root> {
        let sub = |gens: &[Root]| -> Vec<Root> {
            // Rank ≤ 1 subsystems only, since Δ′ ⟂ Δ″ forces |Δ′|,|Δ″| ≤ 1
            // in an irreducible rank-2 system unless one of them is all of Δ.
            let mut out = Vec::new();
            for &g in gens {
                out.push(g);
                out.push(g.neg());
            }
            if gens.len() == 2 {
                out = sys.roots.clone();
            }
            out
        };
        let rm = sub(&self.removed);
        let ad = sub(&self.added);
        let mut out: Vec<Root> = self.base.roots.iter().copied().filter(|r| !rm.contains(r)).collect();
        for r in ad {
            if !out.contains(&r) {
                out.push(r);
            }
        }
        out.sort();
        out
    }
}

/// Closure test in Φ: for every pair in the set and every root expressible
/// as a nonnegative rational combination of the pair, the root must belong
/// to the set.  The 2×2 system is solved exactly.
pub fn is_closed_in_phi(sys: &RootSystem, set: &[Root]) -> bool {
    for &r1 in set {
        for &r2 in set {
            for &t in &sys.roots {
                if set.contains(&t) {
                    continue;
                }
                if nonneg_combination(r1, r2, t) {
                    return false;
                }
            }
        }
    }
    true
}

/// Does t = k₁r₁ + k₂r₂ admit a solution with k₁, k₂ ≥ 0 rational?
fn nonneg_combination(r1: Root, r2: Root, t: Root) -> bool {
    let det = (r1.a as i64) * (r2.b as i64) - (r1.b as i64) * (r2.a as i64);
    if det != 0 {
        // Unique rational solution by Cramer's rule; check signs only.
        let k1_num = (t.a as i64) * (r2.b as i64) - (t.b as i64) * (r2.a as i64);
        let k2_num = (r1.a as i64) * (t.b as i64) - (r1.b as i64) * (t.a as i64);
        let s = det.signum();
        k1_num * s >= 0 && k2_num * s >= 0
    } else {
        // r2 = ±r1 up to scale; t must be collinear too.
        if !t.collinear(r1) {
            return false;
        }
        // With k ≥ 0 available on each of r1, r2, t is reachable iff t lies
        // on the ray of r1 or of r2 (scale 1 in a reduced system).
        t == r1 || t == r2
    }
}

pub fn is_biclosed_in_phi(sys: &RootSystem, set: &[Root]) -> bool {
    let complement: Vec<Root> = sys.roots.iter().copied().filter(|r| !set.contains(r)).collect();
    is_closed_in_phi(sys, set) && is_closed_in_phi(sys, &complement)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generate_counts_and_highest() {
        let a2 = RootSystem::generate(RootSystemType::A2);
        assert_eq!(a2.roots.len(), 6);
        assert_eq!(a2.highest, Root::new(1, 1));
        let b2 = RootSystem::generate(RootSystemType::B2);
        assert_eq!(b2.roots.len(), 8);
        assert_eq!(b2.highest, Root::new(2, 1));
        let g2 = RootSystem::generate(RootSystemType::G2);
        assert_eq!(g2.roots.len(), 12);
        assert_eq!(g2.highest, Root::new(3, 2));
    }

    #[test]
    fn reflect_examples() {
        let a2 = RootSystem::generate(RootSystemType::A2);
        assert_eq!(a2.reflect(ALPHA, ALPHA), ALPHA.neg());
        assert_eq!(a2.reflect(ALPHA, BETA), Root::new(1, 1));
        let g2 = RootSystem::generate(RootSystemType::G2);
        assert_eq!(g2.reflect(ALPHA, BETA), Root::new(3, 1));
    }

    #[test]
    fn reflect_is_involution_and_permutes() {
        for ty in RootSystemType::ALL {
            let sys = RootSystem::generate(ty);
            for &m in &sys.roots {
                let mut image = Vec::new();
                for &t in &sys.roots {
                    let r = sys.reflect(m, t);
                    assert!(sys.is_root(r));
                    assert_eq!(sys.reflect(m, r), t);
                    image.push(r);
                }
                image.sort();
                let mut all = sys.roots.clone();
                all.sort();
                assert_eq!(image, all);
            }
        }
    }

    #[test]
    fn h_examples() {
        let a2 = RootSystem::generate(RootSystemType::A2);
        assert_eq!(h_l(&a2, Root::new(1, 1), SimpleSet::B).unwrap(), 1);
        assert_eq!(h_l(&a2, Root::new(1, 1), SimpleSet::EMPTY).unwrap(), 2);
        let g2 = RootSystem::generate(RootSystemType::G2);
        assert_eq!(h_l(&g2, Root::new(3, 2), SimpleSet::EMPTY).unwrap(), 5);
        assert!(h_l(&a2, Root::new(-1, 0), SimpleSet::EMPTY).is_err());
    }

    #[test]
    fn d_examples() {
        let a2 = RootSystem::generate(RootSystemType::A2);
        assert_eq!(d_l(&a2, BETA, SimpleSet::B).unwrap(), 0);
        assert_eq!(d_l(&a2, Root::new(1, 1), SimpleSet::B).unwrap(), 1);
        let g2 = RootSystem::generate(RootSystemType::G2);
        assert_eq!(d_l(&g2, Root::new(3, 2), SimpleSet::B).unwrap(), 3);
        assert!(d_l(&g2, Root::new(-1, 0), SimpleSet::B).is_err());
    }

    #[test]
    fn d_equals_h_exhaustive() {
        for ty in RootSystemType::ALL {
            let sys = RootSystem::generate(ty);
            for l in SimpleSet::ALL {
                for &r in sys.positive() {
                    assert_eq!(d_l(&sys, r, l).unwrap(), h_l(&sys, r, l).unwrap(), "{ty} {r} L={l:?}");
                }
            }
        }
    }

    #[test]
    fn three_root_sum_exhaustive() {
        for ty in RootSystemType::ALL {
            let sys = RootSystem::generate(ty);
            for &a in sys.positive() {
                for &b in sys.positive() {
                    if !sys.is_positive(a.add(b)) {
                        continue;
                    }
                    for &c in sys.positive() {
                        if !sys.is_positive(a.add(b).add(c)) {
                            continue;
                        }
                        assert!(
                            sys.is_positive(a.add(c)) || sys.is_positive(b.add(c)),
                            "{ty}: triple {a} {b} {c}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn positive_system_count() {
        for (ty, n) in [(RootSystemType::A2, 6), (RootSystemType::B2, 8), (RootSystemType::G2, 12)] {
            let sys = RootSystem::generate(ty);
            assert_eq!(positive_systems(&sys).len(), n);
        }
    }

    #[test]
    fn phi_biclosed_examples() {
        let a2 = RootSystem::generate(RootSystemType::A2);
        let std = positive_systems(&a2)
            .into_iter()
            .find(|p| p.roots == {
                let mut v = a2.positive().to_vec();
                v.sort();
                v
            })
            .unwrap();
        let pb = PhiBiclosed::new(&a2, std.clone(), vec![ALPHA], vec![]).unwrap();
        assert_eq!(pb.set(&a2), vec![Root::new(0, 1), Root::new(1, 1)]);
        let full = PhiBiclosed::new(&a2, std.clone(), vec![], vec![]).unwrap();
        assert!(is_biclosed_in_phi(&a2, &full.set(&a2)));
        assert!(!is_biclosed_in_phi(&a2, &[ALPHA, BETA]));
        // Non-orthogonal (Δ′,Δ″) rejected: α and β are never orthogonal here.
        assert!(PhiBiclosed::new(&a2, std, vec![ALPHA], vec![BETA]).is_err());
    }

    /// Every biclosed subset of Φ, found exhaustively, is some Ψ⁺_{Δ′,Δ″},
    /// and conversely every such set is biclosed.
    #[test]
    fn biclosed_in_phi_classification() {
        for ty in RootSystemType::ALL {
            let sys = RootSystem::generate(ty);
            let systems = positive_systems(&sys);
            let mut forms: Vec<Vec<Root>> = Vec::new();
            for ps in &systems {
                for rm in 0..4u8 {
                    for ad in 0..4u8 {
                        let removed: Vec<Root> =
                            ps.simples.iter().copied().enumerate().filter(|(i, _)| rm & (1 << i) != 0).map(|(_, r)| r).collect();
                        let added: Vec<Root> =
                            ps.simples.iter().copied().enumerate().filter(|(i, _)| ad & (1 << i) != 0).map(|(_, r)| r).collect();
                        if let Ok(pb) = PhiBiclosed::new(&sys, ps.clone(), removed, added) {
                            let s = pb.set(&sys);
                            assert!(is_biclosed_in_phi(&sys, &s), "{ty}: not biclosed: {s:?}");
                            if !forms.contains(&s) {
                                forms.push(s);
                            }
                        }
                    }
                }
            }
            let n = sys.roots.len();
            for mask in 0u32..(1 << n) {
                let set: Vec<Root> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| sys.roots[i]).collect();
                let mut sorted = set.clone();
                sorted.sort();
                if is_biclosed_in_phi(&sys, &set) {
                    assert!(forms.contains(&sorted), "{ty}: biclosed set {sorted:?} not of the canonical form");
                }
            }
        }
    }
}
