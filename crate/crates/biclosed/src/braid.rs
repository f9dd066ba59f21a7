//! The braid graph on restrictions of reflection orders of the affine
//! positive system to a finite set R, and a constructive connectivity
//! procedure.
//!
//! A vertex is a total order on R that some reflection order restricts to;
//! vertices are certified by a witness chain of biclosed sets threaded
//! through a positive-system pivot Ψ̂⁺ (every reflection order has one as
//! an initial section).  Edges reverse a dihedral substring: a contiguous
//! block equal to R ∩ Φ⁺_{W′} for a maximal dihedral reflection subgroup
//! W′.  The connecting procedure replays, as block reversals, the braid
//! moves between reduced words of joins of witness words, then flips the
//! infinite ±α dihedral to rotate the pivot toward the target's.

use std::collections::{BTreeSet, HashMap};

use crate::affine::{AffineRoot, EPSet, Rat};
use crate::error::{Error, Result};
use crate::lattice::BElement;
use crate::roots::{positive_systems, system, Root, RootSystemType};
use crate::weyl::{
    coxeter_m, generator, root_sequence, simple_affine_roots, WElt,
    GEN_COUNT,
};
use crate::words::{join_bounded, normalize_infinite, FiniteWord, WBarElement};

/// Search budgets: witness words are searched up to `word_len` letters.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub word_len: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { word_len: 12 }
    }
}

/// A total order on a finite R ⊂ Φ̂⁺, as the ordered sequence itself.
/// Vertex identity is exactly this sequence.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct RestrictionVertex {
    pub ty: RootSystemType,
    pub order: Vec<AffineRoot>,
}

impl RestrictionVertex {
    pub fn new(ty: RootSystemType, order: &[AffineRoot]) -> Result<RestrictionVertex> {
        let mut seen = BTreeSet::new();
        for &r in order {
            if !crate::affine::is_positive_affine(ty, r) {
                return Err(Error::NonPositiveAffineRoot(r.to_string()));
            }
            if !seen.insert(r) {
                return Err(Error::Malformed(format!("repeated root {r}")));
            }
        }
        Ok(RestrictionVertex { ty, order: order.to_vec() })
    }

    pub fn root_set(&self) -> BTreeSet<AffineRoot> {
        self.order.iter().copied().collect()
    }

    fn positions(&self, members: impl Fn(AffineRoot) -> bool) -> Vec<usize> {
        (0..self.order.len()).filter(|&i| members(self.order[i])).collect()
    }

    fn reversed_block(&self, lo: usize, hi: usize) -> RestrictionVertex {
        let mut order = self.order.clone();
        order[lo..=hi].reverse();
        RestrictionVertex { ty: self.ty, order }
    }
}

/// A maximal dihedral reflection subgroup, keyed by its plane: either
/// finitely many positive roots in the plane of two independent
/// directions, or the infinite δ-string plane of a direction pair ±ρ.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum DihedralSubsystem {
    Finite(Vec<AffineRoot>),
    Delta(Root),
}

impl DihedralSubsystem {
    pub fn contains(&self, r: AffineRoot) -> bool {
        match self {
            DihedralSubsystem::Finite(v) => v.contains(&r),
            DihedralSubsystem::Delta(rho) => r.dir == *rho || r.dir == rho.neg(),
        }
    }

    /// Slope of τ = x·e₁ + y·e₂ against the two extreme roots of a finite
    /// plane, as an exact rational (numerator, denominator > 0); the pair
    /// (1, 0) stands for +∞ (e₂ itself).  Sorting by this slope realizes
    /// one of the plane's two reflection orders.
    fn finite_slope(&self, r: AffineRoot) -> (i64, i64) {
        let (e1, e2) = self.extremes();
        let cross = |p: AffineRoot, q: AffineRoot| -> i64 {
            // Coordinates inside the plane via the first non-degenerate
            // pair of functionals on (a, b, level).
            let pv = [p.dir.a as i64, p.dir.b as i64, p.level as i64];
            let qv = [q.dir.a as i64, q.dir.b as i64, q.level as i64];
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                let d = pv[i] * qv[j] - pv[j] * qv[i];
                if d != 0 {
                    return d;
                }
            }
            0
        };
        // τ = x e₁ + y e₂ gives x ∝ cross(τ, e₂), y ∝ cross(e₁, τ).
        let s = cross(e1, e2).signum();
        let x = s * cross(r, e2);
        let y = s * cross(e1, r);
        if x == 0 {
            (1, 0)
        } else if x < 0 {
            (-y, -x)
        } else {
            (y, x)
        }
    }

    fn extremes(&self) -> (AffineRoot, AffineRoot) {
        let DihedralSubsystem::Finite(roots) = self else {
            unreachable!("extremes are only used for finite planes");
        };
        let is_sum = |r: AffineRoot| -> bool {
            roots.iter().any(|&p| {
                roots.iter().any(|&q| {
                    p != r && q != r && p.dir.add(q.dir) == r.dir && p.level + q.level == r.level
                })
            })
        };
        let ext: Vec<AffineRoot> = roots.iter().copied().filter(|&r| !is_sum(r)).collect();
        assert_eq!(ext.len(), 2, "a finite dihedral plane has two extreme roots");
        (ext[0], ext[1])
    }

    /// Restriction of one of the two reflection orders to a finite subset.
    pub fn model_sort(&self, mut roots: Vec<AffineRoot>) -> Vec<AffineRoot> {
        match self {
            DihedralSubsystem::Delta(rho) => {
                // ρ-levels ascending, then (−ρ)-levels descending.
                roots.sort_by_key(|&r| if r.dir == *rho { (0, r.level) } else { (1, -r.level) });
            }
            DihedralSubsystem::Finite(_) => {
                // Exact rational slopes, compared by cross-multiplication;
                // denominator 0 means +∞.
                roots.sort_by(|&a, &b| {
                    let (an, ad) = self.finite_slope(a);
                    let (bn, bd) = self.finite_slope(b);
                    match (ad, bd) {
                        (0, 0) => std::cmp::Ordering::Equal,
                        (0, _) => std::cmp::Ordering::Greater,
                        (_, 0) => std::cmp::Ordering::Less,
                        _ => (an * bd).cmp(&(bn * ad)),
                    }
                });
            }
        }
        roots
    }
}

/// The maximal dihedral subsystem through two positive affine roots.
pub fn plane_of(ty: RootSystemType, a: AffineRoot, b: AffineRoot) -> DihedralSubsystem {
    if a.dir.collinear(b.dir) {
        let rho = if system(ty).is_positive(a.dir) { a.dir } else { a.dir.neg() };
        return DihedralSubsystem::Delta(rho);
    }
    let sys = system(ty);
    let det = (a.dir.a as i64) * (b.dir.b as i64) - (a.dir.b as i64) * (b.dir.a as i64);
    let mut roots = Vec::new();
    for &t in &sys.roots {
        let k1 = Rat::new((t.a as i64) * (b.dir.b as i64) - (t.b as i64) * (b.dir.a as i64), det);
        let k2 = Rat::new((a.dir.a as i64) * (t.b as i64) - (a.dir.b as i64) * (t.a as i64), det);
        let lvl = k1 * Rat::from_integer(a.level as i64) + k2 * Rat::from_integer(b.level as i64);
        if !lvl.is_integer() {
            continue;
        }
        let lvl = lvl.to_integer() as i32;
        let r = AffineRoot::new(t, lvl);
        if crate::affine::is_positive_affine(ty, r) {
            roots.push(r);
        }
    }
    roots.sort();
    DihedralSubsystem::Finite(roots)
}

/// All dihedral substrings of the vertex: maximal dihedral subsystems
/// whose intersection with R is a nonempty contiguous block of the order.
/// Singleton blocks arise through the δ-plane of each root.
pub fn dihedral_substrings(v: &RestrictionVertex) -> Vec<(DihedralSubsystem, usize, usize)> {
    let mut planes = BTreeSet::new();
    for (i, &a) in v.order.iter().enumerate() {
        planes.insert(plane_of(v.ty, a, AffineRoot::new(a.dir.neg(), 1)));
        for &b in &v.order[i + 1..] {
            planes.insert(plane_of(v.ty, a, b));
        }
    }
    let mut out = Vec::new();
    for plane in planes {
        let pos = v.positions(|r| plane.contains(r));
        if pos.is_empty() {
            continue;
        }
        let (lo, hi) = (pos[0], *pos.last().unwrap());
        if hi - lo + 1 == pos.len() {
            out.push((plane, lo, hi));
        }
    }
    out
}

/// Local necessary condition for realizability: on every maximal dihedral
/// subsystem, the induced suborder embeds in one of the two reflection
/// orders of that subsystem (contiguity not required).
pub fn locally_consistent(v: &RestrictionVertex) -> bool {
    let mut planes = BTreeSet::new();
    for (i, &a) in v.order.iter().enumerate() {
        planes.insert(plane_of(v.ty, a, AffineRoot::new(a.dir.neg(), 1)));
        for &b in &v.order[i + 1..] {
            planes.insert(plane_of(v.ty, a, b));
        }
    }
    for plane in planes {
        let induced: Vec<AffineRoot> = v.order.iter().copied().filter(|&r| plane.contains(r)).collect();
        if induced.len() < 2 {
            continue;
        }
        let model = plane.model_sort(induced.clone());
        let mut rev = model.clone();
        rev.reverse();
        if induced != model && induced != rev {
            return false;
        }
    }
    true
}

/// One realization of a vertex: the pivot positive system and finite words
/// whose crossing orders realize the two halves of the order.
#[derive(Clone, Debug)]
pub struct PivotWitness {
    pub pivot: Vec<Root>,
    pub lower: FiniteWord,
    pub upper: FiniteWord,
}

/// Verdict of the staged witness search.
#[derive(Clone, Debug)]
pub enum Realization {
    Realizable(Vec<PivotWitness>),
    /// No pivot splits R into a prefix inside Ψ̂⁺ and a suffix outside, or
    /// a dihedral suborder embeds in neither reflection order: proven.
    NotRealizable,
    /// Some pivot passed the structural tests but the word search ran out
    /// of budget; realizability is unknown at this budget.
    Unknown,
}

/// Searches for a shortest word inside `cone` whose inversion set contains
/// every target, in any crossing order.  Breadth-first over (element,
/// crossed subset); the crossing order of the result is read off its root
/// sequence.
fn word_containing(
    ty: RootSystemType,
    targets: &[AffineRoot],
    cone: &EPSet,
    budget: usize,
) -> Option<FiniteWord> {
    let simples = simple_affine_roots(ty);
    let full = (1u32 << targets.len()) - 1;
    let mut queue = std::collections::VecDeque::new();
    queue.push_back((WElt::identity(), Vec::<u8>::new(), 0u32));
    let mut seen: HashMap<(WElt, u32), ()> = HashMap::new();
    while let Some((elt, word, mask)) = queue.pop_front() {
        if mask == full {
            return Some(FiniteWord::new(ty, &word).expect("construction keeps words reduced"));
        }
        if word.len() >= budget {
            continue;
        }
        for i in 0..GEN_COUNT {
            let root = elt.apply(simples[i]);
            if !crate::affine::is_positive_affine(ty, root) || !cone.contains(root) {
                continue;
            }
            let mut nm = mask;
            if let Some(t) = targets.iter().position(|&t| t == root) {
                nm |= 1 << t;
            }
            let nelt = elt.mul(&generator(ty, i));
            if seen.contains_key(&(nelt, nm)) {
                continue;
            }
            seen.insert((nelt, nm), ());
            let mut nw = word.clone();
            nw.push(i as u8);
            queue.push_back((nelt, nw, nm));
        }
    }
    None
}

/// Searches for a word, built letter by letter inside `cone`, that crosses
/// the target roots in the given order and never crosses another root of
/// `avoid`.  Breadth-first over (group element, targets crossed).
fn word_crossing(
    ty: RootSystemType,
    targets: &[AffineRoot],
    cone: &EPSet,
    avoid: &BTreeSet<AffineRoot>,
    budget: usize,
) -> Option<FiniteWord> {
    let simples = simple_affine_roots(ty);
    let mut queue: Vec<(WElt, Vec<u8>, usize)> = vec![(WElt::identity(), Vec::new(), 0)];
    let mut seen: HashMap<(WElt, usize), ()> = HashMap::new();
    seen.insert((WElt::identity(), 0), ());
    while let Some((elt, word, crossed)) = queue.pop() {
        if crossed == targets.len() {
            return Some(FiniteWord::new(ty, &word).expect("construction keeps words reduced"));
        }
        if word.len() >= budget {
            continue;
        }
        for i in 0..GEN_COUNT {
            let root = elt.apply(simples[i]);
            if !crate::affine::is_positive_affine(ty, root) || !cone.contains(root) {
                continue;
            }
            let mut nc = crossed;
            if root == targets[crossed] {
                nc += 1;
            } else if avoid.contains(&root) {
                continue;
            }
            let nelt = elt.mul(&generator(ty, i));
            if seen.contains_key(&(nelt, nc)) {
                continue;
            }
            seen.insert((nelt, nc), ());
            let mut nw = word.clone();
            nw.push(i as u8);
            queue.insert(0, (nelt, nw, nc));
        }
    }
    None
}

fn per_direction_ascending(targets: &[AffineRoot]) -> bool {
    for (i, a) in targets.iter().enumerate() {
        for b in &targets[i + 1..] {
            if a.dir == b.dir && a.level > b.level {
                return false;
            }
        }
    }
    true
}

/// All ways r = k₁a + k₂b with k₁,k₂ > 0 and a, b positive affine roots of
/// independent or opposite directions (same-direction pairs are implied by
/// bottom-anchoring and skipped).
fn decomposition_pairs(ty: RootSystemType, r: AffineRoot) -> Vec<(AffineRoot, AffineRoot)> {
    let sys = system(ty);
    let n = r.level as i64;
    let mut out = Vec::new();
    for (i, &d1) in sys.roots.iter().enumerate() {
        for &d2 in &sys.roots[i + 1..] {
            if d1.collinear(d2) {
                continue;
            }
            let det = (d1.a as i64) * (d2.b as i64) - (d1.b as i64) * (d2.a as i64);
            let k1 = Rat::new((r.dir.a as i64) * (d2.b as i64) - (r.dir.b as i64) * (d2.a as i64), det);
            let k2 = Rat::new((d1.a as i64) * (r.dir.b as i64) - (d1.b as i64) * (r.dir.a as i64), det);
            if !(k1 > Rat::from_integer(0) && k2 > Rat::from_integer(0)) {
                continue;
            }
            let lo1 = crate::affine::min_level(ty, d1) as i64;
            let lo2 = crate::affine::min_level(ty, d2) as i64;
            let mut l1 = lo1;
            while k1 * Rat::from_integer(l1) + k2 * Rat::from_integer(lo2) <= Rat::from_integer(n) {
                let rest = Rat::from_integer(n) - k1 * Rat::from_integer(l1);
                let l2 = rest / k2;
                if l2.is_integer() && l2 >= Rat::from_integer(lo2) {
                    out.push((
                        AffineRoot::new(d1, l1 as i32),
                        AffineRoot::new(d2, l2.to_integer() as i32),
                    ));
                }
                l1 += 1;
            }
        }
    }
    // Opposite-direction strings: (m+1)(ρ, j) + m(−ρ, l) and mirrored.
    for (da, db) in [(r.dir, r.dir.neg()), (r.dir.neg(), r.dir)] {
        let (loa, lob) = (
            crate::affine::min_level(ty, da) as i64,
            crate::affine::min_level(ty, db) as i64,
        );
        for m in 1..=(n + 1) {
            // ka·(da, j) + kb·(db, l) with ka·da + kb·db = r.dir.
            let (ka, kb) = if da == r.dir { (m + 1, m) } else { (m, m + 1) };
            let mut j = loa;
            while ka * j <= n {
                let rest = n - ka * j;
                if rest % kb == 0 && rest / kb >= lob {
                    out.push((AffineRoot::new(da, j as i32), AffineRoot::new(db, (rest / kb) as i32)));
                }
                j += 1;
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// The part of every inversion set S with seed ⊆ S ⊆ cone, S disjoint
/// from `forbidden`, that is forced by S's defining properties: S is
/// closed, bottom-anchored per direction, and coclosed — so for every
/// decomposition r = k₁a + k₂b of an r ∈ S, at least one input lies in S.
/// When neither input is available (outside the cone or forbidden) no such
/// S exists; when exactly one is, it is forced.  Returns None when no
/// inversion set fits.
fn forced_section(
    ty: RootSystemType,
    seed: &EPSet,
    cone: &EPSet,
    forbidden: &BTreeSet<AffineRoot>,
) -> Result<Option<EPSet>> {
    let mut e = seed.clone();
    let scan_cap = e.max_described_level() + 4;
    for _ in 0..256 {
        // Closure and bottom-fill.
        let mut filled = e.clone();
        for dir in system(ty).roots.iter().copied() {
            let ls = filled.levels(dir);
            if let (Some(_), Some(sup)) = (ls.min(), ls.sup()) {
                let lo = crate::affine::min_level(ty, dir);
                filled.set_levels(
                    dir,
                    crate::affine::LevelSet::single(match sup {
                        Some(hi) => crate::affine::Iv::Fin { lo, hi },
                        None => crate::affine::Iv::Ray { lo },
                    }),
                );
            }
        }
        let mut next = crate::affine::closure_epset(&filled)?;
        if !cone.includes(&next) || forbidden.iter().any(|&r| next.contains(r)) {
            return Ok(None);
        }
        // Coclosure forcing on the bounded window.
        let mut infeasible = false;
        for r in next.truncate(scan_cap) {
            for (a, b) in decomposition_pairs(ty, r) {
                if next.contains(a) || next.contains(b) {
                    continue;
                }
                let avail = |x: AffineRoot| cone.contains(x) && !forbidden.contains(&x);
                match (avail(a), avail(b)) {
                    (false, false) => {
                        infeasible = true;
                        break;
                    }
                    (true, false) => next.insert(a),
                    (false, true) => next.insert(b),
                    (true, true) => {}
                }
            }
            if infeasible {
                break;
            }
        }
        if infeasible {
            return Ok(None);
        }
        if next == e {
            return Ok(Some(e));
        }
        e = next;
    }
    Err(Error::Verification("forced section did not stabilize".into()))
}

/// Threads forced sections through the crossing prefixes: the section at
/// stage k contains everything forced at stage k−1 plus the k-th target,
/// is contained in the cone, and avoids every R-root not yet crossed.
/// Any contradiction proves the pivot infeasible.
fn prefix_sections_feasible(
    ty: RootSystemType,
    targets: &[AffineRoot],
    cone: &EPSet,
    rset: &BTreeSet<AffineRoot>,
) -> bool {
    let mut forced = EPSet::empty(ty);
    for k in 1..=targets.len() {
        forced.insert(targets[k - 1]);
        let forbidden: BTreeSet<AffineRoot> =
            rset.iter().copied().filter(|r| !targets[..k].contains(r)).collect();
        match forced_section(ty, &forced, cone, &forbidden) {
            Ok(Some(next)) => forced = next,
            _ => return false,
        }
    }
    true
}

/// Staged witness search: try every positive-system pivot; the part of R
/// inside Ψ̂⁺ must be an order prefix, then both halves are realized by
/// crossing words (the lower inside Ψ̂⁺, the upper inside the opposite
/// hat, in reverse).
pub fn realize(v: &RestrictionVertex, budget: Budget) -> Realization {
    if !locally_consistent(v) {
        return Realization::NotRealizable;
    }
    let ty = v.ty;
    let mut witnesses = Vec::new();
    let mut structurally_possible = false;
    for ps in positive_systems(system(ty)) {
        let hat = EPSet::widehat(ty, &ps.roots);
        let p = v.order.iter().filter(|&&r| hat.contains(r)).count();
        if !v.order[..p].iter().all(|&r| hat.contains(r)) {
            continue;
        }
        let lower_targets = &v.order[..p];
        let upper_targets: Vec<AffineRoot> = v.order[p..].iter().rev().copied().collect();
        // Words cross every direction's δ-string bottom-up, so each half
        // must list same-direction roots with ascending levels (the upper
        // half in reverse); a violation rules this pivot out exactly.
        if !per_direction_ascending(lower_targets) || !per_direction_ascending(&upper_targets) {
            continue;
        }
        let avoid: BTreeSet<AffineRoot> = v.root_set();
        let neg: Vec<Root> = ps.roots.iter().map(|&r| r.neg()).collect();
        let co_hat = EPSet::widehat(ty, &neg);
        // Sections containing a target prefix contain its forced section;
        // grabbing a later R-root that way, or fitting no inversion set at
        // all, rules the pivot out exactly.
        if !prefix_sections_feasible(ty, lower_targets, &hat, &avoid)
            || !prefix_sections_feasible(ty, &upper_targets, &co_hat, &avoid)
        {
            continue;
        }
        structurally_possible = true;
        let Some(lower) = word_crossing(ty, lower_targets, &hat, &avoid, budget.word_len) else {
            continue;
        };
        let Some(upper) = word_crossing(ty, &upper_targets, &co_hat, &avoid, budget.word_len) else {
            continue;
        };
        witnesses.push(PivotWitness { pivot: ps.roots.clone(), lower, upper });
    }
    if !witnesses.is_empty() {
        Realization::Realizable(witnesses)
    } else if structurally_possible {
        Realization::Unknown
    } else {
        Realization::NotRealizable
    }
}

/// The witness chain of biclosed sets certifying a vertex, independent of
/// how the witness was found: inversion sets of the lower word's crossing
/// prefixes, the pivot hat, then complements of the upper word's crossing
/// prefixes, with each segment crossing exactly one root of R.
pub fn witness_chain(v: &RestrictionVertex, w: &PivotWitness) -> Result<Vec<BElement>> {
    let ty = v.ty;
    let mut chain = vec![BElement::bottom(ty)];
    let lower_seq = root_sequence(ty, &w.lower.letters)?;
    for (j, &r) in lower_seq.iter().enumerate() {
        if v.order.contains(&r) {
            let prefix = FiniteWord::new(ty, &w.lower.letters[..=j])?;
            chain.push(BElement::inv(WBarElement::Finite(prefix)));
        }
    }
    let hat = EPSet::widehat(ty, &w.pivot);
    let pivot_word = normalize_infinite(&hat, 24)?;
    chain.push(BElement::inv(WBarElement::Infinite(pivot_word)));
    let upper_seq = root_sequence(ty, &w.upper.letters)?;
    let mut upper_cuts = Vec::new();
    for (j, &r) in upper_seq.iter().enumerate() {
        if v.order.contains(&r) {
            let prefix = FiniteWord::new(ty, &w.upper.letters[..=j])?;
            upper_cuts.push(BElement::coinv(WBarElement::Finite(prefix)));
        }
    }
    // Longer upper prefixes give smaller complements, so the deepest cut
    // sits right above the pivot and the chain walks the cuts in reverse
    // crossing order up to Φ̂⁺.
    upper_cuts.reverse();
    chain.extend(upper_cuts);
    chain.push(BElement::top(ty));
    verify_chain(v, &chain)?;
    Ok(chain)
}

/// Checks the chain property: inclusions hold and the i-th root of the
/// order is the unique R-element separating consecutive chain terms.
fn verify_chain(v: &RestrictionVertex, chain: &[BElement]) -> Result<()> {
    let mut crossed = 0usize;
    for win in chain.windows(2) {
        let (a, b) = (&win[0], &win[1]);
        if !b.includes(a) {
            return Err(Error::Verification("witness chain not increasing".into()));
        }
        let step: Vec<AffineRoot> =
            v.order.iter().copied().filter(|&r| b.epset().contains(r) && !a.epset().contains(r)).collect();
        for r in step {
            if r != v.order[crossed] {
                return Err(Error::Verification(format!("chain crosses {r} out of order")));
            }
            crossed += 1;
        }
    }
    if crossed != v.order.len() {
        return Err(Error::Verification("chain does not cross every root".into()));
    }
    Ok(())
}

/// One reversal move: the dihedral plane and the reversed position range
/// in the vertex the move was applied to.
#[derive(Clone, Debug)]
pub struct MoveStep {
    pub plane: DihedralSubsystem,
    pub lo: usize,
    pub hi: usize,
}

/// Reverses a dihedral substring, re-certifying the result.
pub fn reverse(v: &RestrictionVertex, plane: &DihedralSubsystem, budget: Budget) -> Result<RestrictionVertex> {
    let pos = v.positions(|r| plane.contains(r));
    if pos.is_empty() {
        return Err(Error::Malformed("plane does not meet R".into()));
    }
    let (lo, hi) = (pos[0], *pos.last().unwrap());
    if hi - lo + 1 != pos.len() {
        return Err(Error::Malformed("intersection is not contiguous".into()));
    }
    let out = v.reversed_block(lo, hi);
    match realize(&out, budget) {
        Realization::Realizable(_) => Ok(out),
        _ => Err(Error::Verification("reversal produced an unrealizable order".into())),
    }
}

fn apply_move(v: &RestrictionVertex, members: &[AffineRoot]) -> Result<(RestrictionVertex, usize, usize)> {
    let pos = v.positions(|r| members.contains(&r));
    let (lo, hi) = (pos[0], *pos.last().unwrap());
    if hi - lo + 1 != pos.len() {
        return Err(Error::Verification("braid move block is not contiguous in R".into()));
    }
    Ok((v.reversed_block(lo, hi), lo, hi))
}

/// Single braid moves between reduced words: positions where an
/// alternating (s,t)-block of full Coxeter length can be flipped.
fn braid_neighbors(ty: RootSystemType, word: &[u8]) -> Vec<(Vec<u8>, usize, usize)> {
    let mut out = Vec::new();
    for j in 0..word.len() {
        for t in 0..GEN_COUNT as u8 {
            let s = word[j];
            if t == s {
                continue;
            }
            let m = coxeter_m(ty, s as usize, t as usize);
            if j + m > word.len() {
                continue;
            }
            let ok = (0..m).all(|k| word[j + k] == if k % 2 == 0 { s } else { t });
            if !ok {
                continue;
            }
            let mut nw = word.to_vec();
            for k in 0..m {
                nw[j + k] = if k % 2 == 0 { t } else { s };
            }
            out.push((nw, j, m));
        }
    }
    out
}

/// Braid-move path between two reduced words of the same element.
fn braid_path(ty: RootSystemType, from: &[u8], to: &[u8]) -> Result<Vec<(Vec<u8>, usize, usize)>> {
    if from == to {
        return Ok(Vec::new());
    }
    let mut prev: HashMap<Vec<u8>, (Vec<u8>, usize, usize)> = HashMap::new();
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(from.to_vec());
    prev.insert(from.to_vec(), (Vec::new(), 0, 0));
    let cap = 2_000_000;
    while let Some(cur) = queue.pop_front() {
        for (nw, j, m) in braid_neighbors(ty, &cur) {
            if prev.contains_key(&nw) {
                continue;
            }
            prev.insert(nw.clone(), (cur.clone(), j, m));
            if nw == to {
                let mut path = Vec::new();
                let mut node = nw;
                while node != from {
                    let (p, j, m) = prev[&node].clone();
                    path.push((node.clone(), j, m));
                    node = p;
                }
                path.reverse();
                // Re-express each step as (word before the move, j, m).
                let mut out = Vec::new();
                let mut w = from.to_vec();
                for (next, j, m) in path {
                    out.push((w.clone(), j, m));
                    w = next;
                }
                return Ok(out);
            }
            if prev.len() > cap {
                return Err(Error::BudgetExhausted("braid-word graph too large".into()));
            }
            queue.push_back(nw);
        }
    }
    Err(Error::Verification("reduced words not connected by braid moves".into()))
}

/// Replays the braid moves between two reduced words of `z` as reversal
/// moves on the vertex; blocks meeting R in at most one root leave the
/// vertex unchanged and emit nothing.
fn replay_braid_moves(
    ty: RootSystemType,
    v: &mut RestrictionVertex,
    moves_out: &mut Vec<(MoveStep, RestrictionVertex)>,
    from: &[u8],
    to: &[u8],
    budget: Budget,
) -> Result<()> {
    let path = braid_path(ty, from, to)?;
    let rset = v.root_set();
    for (word, j, m) in path {
        let seq = root_sequence(ty, &word)?;
        let block = &seq[j..j + m];
        let hit: Vec<AffineRoot> = block.iter().copied().filter(|r| rset.contains(r)).collect();
        if hit.len() < 2 {
            continue;
        }
        let plane = plane_of(ty, block[0], block[1]);
        for &r in block {
            debug_assert!(plane.contains(r));
        }
        let (nv, lo, hi) = apply_move(v, &hit)?;
        match realize(&nv, budget) {
            Realization::Realizable(_) => {}
            _ => return Err(Error::Verification("intermediate vertex failed certification".into())),
        }
        moves_out.push((MoveStep { plane, lo, hi }, nv.clone()));
        *v = nv;
    }
    Ok(())
}

/// Extends a word to the join z, producing a reduced word of z whose
/// prefix is the given word.
fn extend_to(ty: RootSystemType, x: &FiniteWord, z: &FiniteWord) -> Result<Vec<u8>> {
    let rest = x.elt().inverse().mul(&z.elt());
    let tail = crate::weyl::reduce(ty, &rest);
    let mut word = x.letters.clone();
    word.extend_from_slice(&tail);
    if word.len() != z.len() || !crate::weyl::is_reduced(ty, &word) {
        return Err(Error::Verification("prefix extension is not reduced".into()));
    }
    Ok(word)
}

/// Same-pivot surgery: rewrites the order inside Ψ̂⁺ from v's to the
/// target's by braiding reduced words of the join of the two lower witness
/// words, then dually above the pivot.
fn same_pivot_surgery(
    v: &mut RestrictionVertex,
    moves_out: &mut Vec<(MoveStep, RestrictionVertex)>,
    target: &RestrictionVertex,
    pivot: &[Root],
    lower1: &FiniteWord,
    lower2: &FiniteWord,
    upper1: &FiniteWord,
    upper2: &FiniteWord,
    budget: Budget,
) -> Result<()> {
    let ty = v.ty;
    let hat = EPSet::widehat(ty, pivot);
    let p = v.order.iter().filter(|&&r| hat.contains(r)).count();
    if v.order[..p] != target.order[..p] {
        let z = match join_bounded(&[
            WBarElement::Finite(lower1.clone()),
            WBarElement::Finite(lower2.clone()),
        ])? {
            WBarElement::Finite(z) => z,
            WBarElement::Infinite(_) => {
                return Err(Error::Verification("join of pivot-bounded words must be finite".into()))
            }
        };
        let u1 = extend_to(ty, lower1, &z)?;
        let u2 = extend_to(ty, lower2, &z)?;
        replay_braid_moves(ty, v, moves_out, &u1, &u2, budget)?;
    }
    if v.order[p..] != target.order[p..] {
        let z = match join_bounded(&[
            WBarElement::Finite(upper1.clone()),
            WBarElement::Finite(upper2.clone()),
        ])? {
            WBarElement::Finite(z) => z,
            WBarElement::Infinite(_) => {
                return Err(Error::Verification("join of co-pivot-bounded words must be finite".into()))
            }
        };
        let u1 = extend_to(ty, upper1, &z)?;
        let u2 = extend_to(ty, upper2, &z)?;
        replay_braid_moves(ty, v, moves_out, &u1, &u2, budget)?;
    }
    if v != target {
        return Err(Error::Verification("same-pivot surgery missed the target".into()));
    }
    Ok(())
}

fn pick_witness<'a>(ws: &'a [PivotWitness], pivot: &[Root]) -> Option<&'a PivotWitness> {
    ws.iter().find(|w| w.pivot == pivot)
}

/// Constructive connectivity: a sequence of certified dihedral reversals
/// from v1 to v2, following the reverse induction on |Ψ₁⁺ ∩ Ψ₂⁺| with the
/// infinite ±α₁ dihedral flip rotating the pivot.
pub fn connect(v1: &RestrictionVertex, v2: &RestrictionVertex, budget: Budget) -> Result<Vec<(MoveStep, RestrictionVertex)>> {
    if v1.root_set() != v2.root_set() {
        return Err(Error::Malformed("vertices restrict different sets".into()));
    }
    let ws1 = match realize(v1, budget) {
        Realization::Realizable(ws) => ws,
        _ => return Err(Error::Unrecognized("source vertex is not realizable".into())),
    };
    let ws2 = match realize(v2, budget) {
        Realization::Realizable(ws) => ws,
        _ => return Err(Error::Unrecognized("target vertex is not realizable".into())),
    };
    // Pivot pair with maximal overlap.
    let mut best: Option<(usize, &PivotWitness, &PivotWitness)> = None;
    for w1 in &ws1 {
        for w2 in &ws2 {
            let overlap = w1.pivot.iter().filter(|r| w2.pivot.contains(r)).count();
            if best.as_ref().map_or(true, |(b, _, _)| overlap > *b) {
                best = Some((overlap, w1, w2));
            }
        }
    }
    let (_, w1, w2) = best.expect("realizable vertices have witnesses");
    let mut moves = Vec::new();
    let mut cur = v1.clone();
    connect_inner(&mut cur, &mut moves, w1.clone(), v2, w2.clone(), budget, 0)?;
    Ok(moves)
}

fn connect_inner(
    cur: &mut RestrictionVertex,
    moves: &mut Vec<(MoveStep, RestrictionVertex)>,
    w1: PivotWitness,
    v2: &RestrictionVertex,
    w2: PivotWitness,
    budget: Budget,
    depth: usize,
) -> Result<()> {
    let ty = cur.ty;
    let sys = system(ty);
    if depth > sys.roots.len() {
        return Err(Error::Verification("pivot rotation did not terminate".into()));
    }
    if w1.pivot == w2.pivot {
        return same_pivot_surgery(
            cur,
            moves,
            v2,
            &w1.pivot.clone(),
            &w1.lower,
            &w2.lower,
            &w1.upper,
            &w2.upper,
            budget,
        );
    }
    // Choose the end α₁ of one of the two reflection orders of Ψ₁ that
    // leaves Ψ₂ (an extreme root of Ψ₁ outside Ψ₂ always exists).
    let simples: Vec<Root> = {
        let ps = positive_systems(sys).into_iter().find(|p| p.roots == w1.pivot).expect("pivot is a positive system");
        ps.simples.to_vec()
    };
    let alpha1 = *simples
        .iter()
        .find(|s| !w2.pivot.contains(s))
        .expect("distinct positive systems differ in an extreme root");
    // Target arrangement: α₁-string block at the top of the lower half and
    // (−α₁)-string block (levels descending) at the bottom of the upper
    // half, so the infinite ±α₁ dihedral meets R in one contiguous block
    // at the pivot boundary.  The remaining roots must take the crossing
    // order of witness words confined to the cones that exclude the ±α₁
    // directions; that is what keeps the rotated pivot realizable after
    // the flip.
    let hat = EPSet::widehat(ty, &w1.pivot);
    let p = cur.order.iter().filter(|&&r| hat.contains(r)).count();
    let (lower_part, upper_part) = (cur.order[..p].to_vec(), cur.order[p..].to_vec());
    let lo_rest_set: Vec<AffineRoot> = lower_part.iter().copied().filter(|r| r.dir != alpha1).collect();
    let mut lo_string: Vec<AffineRoot> = lower_part.iter().copied().filter(|r| r.dir == alpha1).collect();
    lo_string.sort_by_key(|r| r.level);
    let mut up_string: Vec<AffineRoot> = upper_part.iter().copied().filter(|r| r.dir == alpha1.neg()).collect();
    up_string.sort_by_key(|r| -r.level);
    let up_rest_set: Vec<AffineRoot> = upper_part.iter().copied().filter(|r| r.dir != alpha1.neg()).collect();
    // Lower rest: crossing order of a word inside widehat(Ψ₁ ∖ {α₁}).
    let lo_cone_dirs: Vec<Root> = w1.pivot.iter().copied().filter(|&r| r != alpha1).collect();
    let lo_cone = EPSet::widehat(ty, &lo_cone_dirs);
    let lo_rest = if lo_rest_set.is_empty() {
        Vec::new()
    } else {
        let y = word_containing(ty, &lo_rest_set, &lo_cone, budget.word_len)
            .ok_or_else(|| Error::BudgetExhausted("no covering word below the pivot".into()))?;
        root_sequence(ty, &y.letters)?.into_iter().filter(|r| lo_rest_set.contains(r)).collect()
    };
    // Upper rest: reversed crossing order of a word inside the opposite
    // cone without the −α₁ direction.
    let up_cone_dirs: Vec<Root> = w1.pivot.iter().map(|&r| r.neg()).filter(|&r| r != alpha1.neg()).collect();
    let up_cone = EPSet::widehat(ty, &up_cone_dirs);
    let up_rest = if up_rest_set.is_empty() {
        Vec::new()
    } else {
        let y = word_containing(ty, &up_rest_set, &up_cone, budget.word_len)
            .ok_or_else(|| Error::BudgetExhausted("no covering word above the pivot".into()))?;
        let mut seq: Vec<AffineRoot> =
            root_sequence(ty, &y.letters)?.into_iter().filter(|r| up_rest_set.contains(r)).collect();
        seq.reverse();
        seq
    };
    let mut staged_order = lo_rest;
    let string_lo = staged_order.len();
    staged_order.extend(lo_string.iter().copied());
    staged_order.extend(up_string.iter().copied());
    let string_hi = staged_order.len();
    staged_order.extend(up_rest.iter().copied());
    let staged = RestrictionVertex { ty, order: staged_order };
    // Reach the staged vertex by same-pivot surgery (its realizability is
    // certified on the way).
    let staged_ws = match realize(&staged, budget) {
        Realization::Realizable(ws) => ws,
        _ => return Err(Error::Verification("staged vertex failed certification".into())),
    };
    let staged_w = pick_witness(&staged_ws, &w1.pivot)
        .ok_or_else(|| Error::Verification("staged vertex lost the pivot".into()))?
        .clone();
    same_pivot_surgery(
        cur,
        moves,
        &staged,
        &w1.pivot.clone(),
        &w1.lower,
        &staged_w.lower,
        &w1.upper,
        &staged_w.upper,
        budget,
    )?;
    // Flip the infinite ±α₁ dihedral block.
    let flipped_pivot: Vec<Root> = {
        let mut v: Vec<Root> = w1.pivot.iter().copied().filter(|&r| r != alpha1).collect();
        v.push(alpha1.neg());
        v.sort();
        v
    };
    if string_hi > string_lo {
        let (nv, lo, hi) = apply_move(cur, &cur.order[string_lo..string_hi].to_vec())?;
        match realize(&nv, budget) {
            Realization::Realizable(_) => {}
            _ => return Err(Error::Verification("flipped vertex failed certification".into())),
        }
        moves.push((MoveStep { plane: DihedralSubsystem::Delta(alpha1), lo, hi }, nv.clone()));
        *cur = nv;
    }
    let cur_ws = match realize(cur, budget) {
        Realization::Realizable(ws) => ws,
        _ => return Err(Error::Verification("post-flip vertex failed certification".into())),
    };
    let w1_next = pick_witness(&cur_ws, &flipped_pivot)
        .ok_or_else(|| Error::Verification("flip did not rotate the pivot".into()))?
        .clone();
    connect_inner(cur, moves, w1_next, v2, w2, budget, depth + 1)
}

/// The braid graph on R: all realizable orders at the given budget, with
/// an edge for every dihedral-substring reversal between two of them.
pub struct BraidGraph {
    pub vertices: Vec<RestrictionVertex>,
    pub edges: Vec<(usize, usize, DihedralSubsystem)>,
    pub unknown: usize,
    pub components: usize,
}

pub fn build_braid_graph(ty: RootSystemType, r: &[AffineRoot], budget: Budget) -> Result<BraidGraph> {
    let base = RestrictionVertex::new(ty, r)?;
    let set: Vec<AffineRoot> = base.root_set().into_iter().collect();
    let n = set.len();
    let mut vertices = Vec::new();
    let mut unknown = 0usize;
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let order: Vec<AffineRoot> = perm.iter().map(|&i| set[i]).collect();
        let v = RestrictionVertex { ty, order };
        match realize(&v, budget) {
            Realization::Realizable(_) => vertices.push(v),
            Realization::Unknown => unknown += 1,
            Realization::NotRealizable => {}
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    vertices.sort();
    let mut edges = Vec::new();
    let mut dsu: Vec<usize> = (0..vertices.len()).collect();
    fn find(dsu: &mut Vec<usize>, i: usize) -> usize {
        if dsu[i] != i {
            let r = find(dsu, dsu[i]);
            dsu[i] = r;
        }
        dsu[i]
    }
    for (i, v) in vertices.iter().enumerate() {
        for (plane, lo, hi) in dihedral_substrings(v) {
            if hi == lo {
                continue;
            }
            let flipped = v.reversed_block(lo, hi);
            if let Ok(j) = vertices.binary_search(&flipped) {
                if i < j {
                    edges.push((i, j, plane));
                    let (ri, rj) = (find(&mut dsu, i), find(&mut dsu, j));
                    dsu[ri] = rj;
                }
            }
        }
    }
    let mut reps = BTreeSet::new();
    for i in 0..vertices.len() {
        let r = find(&mut dsu, i);
        reps.insert(r);
    }
    Ok(BraidGraph { vertices, edges, unknown, components: reps.len() })
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Brute-force BFS over the braid graph, used as the independent oracle
/// against [`connect`].
pub fn same_component_bfs(g: &BraidGraph, v1: &RestrictionVertex, v2: &RestrictionVertex) -> bool {
    let Some(i) = g.vertices.iter().position(|v| v == v1) else { return false };
    let Some(j) = g.vertices.iter().position(|v| v == v2) else { return false };
    let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
    for &(a, b, _) in &g.edges {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    let mut seen = vec![false; g.vertices.len()];
    let mut stack = vec![i];
    seen[i] = true;
    while let Some(x) = stack.pop() {
        if x == j {
            return true;
        }
        for &y in adj.get(&x).into_iter().flatten() {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{ALPHA, BETA};

    const A2: RootSystemType = RootSystemType::A2;

    fn ar(a: i32, b: i32, l: i32) -> AffineRoot {
        AffineRoot::new(Root::new(a, b), l)
    }

    /// The worked 7-root restriction and its two bracketing orders.
    fn seven_root_example() -> (RestrictionVertex, RestrictionVertex) {
        let o1 = [
            ar(1, 0, 0),
            ar(0, 1, 0),
            ar(1, 1, 1),
            ar(1, 0, 1),
            ar(-1, 0, 1),
            ar(0, -1, 1),
            ar(-1, -1, 1),
        ];
        let o2 = [
            ar(0, 1, 0),
            ar(-1, 0, 1),
            ar(1, 1, 1),
            ar(1, 0, 1),
            ar(-1, -1, 1),
            ar(0, -1, 1),
            ar(1, 0, 0),
        ];
        (
            RestrictionVertex::new(A2, &o1).unwrap(),
            RestrictionVertex::new(A2, &o2).unwrap(),
        )
    }

    #[test]
    fn planes_and_substrings() {
        // Singleton R: its own block through the δ-plane.
        let v = RestrictionVertex::new(A2, &[ar(1, 0, 0)]).unwrap();
        let subs = dihedral_substrings(&v);
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].1, subs[0].2);
        // The level-0 finite plane of α, β contains α+β at level 0.
        let p = plane_of(A2, ar(1, 0, 0), ar(0, 1, 0));
        assert!(p.contains(ar(1, 1, 0)));
        assert!(!p.contains(ar(1, 1, 1)));
        // α and −α+δ span the infinite dihedral.
        let p = plane_of(A2, ar(1, 0, 0), ar(-1, 0, 1));
        assert_eq!(p, DihedralSubsystem::Delta(ALPHA));
        assert!(p.contains(ar(1, 0, 7)));
    }

    #[test]
    fn realize_small_cases() {
        // Empty R is trivially realizable.
        let v = RestrictionVertex::new(A2, &[]).unwrap();
        assert!(matches!(realize(&v, Budget::default()), Realization::Realizable(_)));
        // α+β between α and β reversed against both dihedral orders fails.
        let bad = RestrictionVertex::new(A2, &[ar(1, 0, 0), ar(1, 1, 0), ar(0, 1, 0)]).unwrap();
        assert!(matches!(realize(&bad, Budget::default()), Realization::Realizable(_)));
        let bad = RestrictionVertex::new(A2, &[ar(1, 1, 0), ar(1, 0, 0), ar(0, 1, 0)]).unwrap();
        assert!(matches!(realize(&bad, Budget::default()), Realization::NotRealizable));
    }

    #[test]
    fn witness_chain_certifies_seven_root_order() {
        let (v1, _) = seven_root_example();
        let ws = match realize(&v1, Budget::default()) {
            Realization::Realizable(ws) => ws,
            other => panic!("expected realizable, got {other:?}"),
        };
        let w = &ws[0];
        let chain = witness_chain(&v1, w).unwrap();
        assert!(chain.len() >= v1.order.len() + 1);
    }

    #[test]
    fn reverse_is_involution() {
        let v = RestrictionVertex::new(A2, &[ar(1, 0, 0), ar(1, 1, 0), ar(0, 1, 0)]).unwrap();
        let plane = plane_of(A2, ar(1, 0, 0), ar(0, 1, 0));
        let r = reverse(&v, &plane, Budget::default()).unwrap();
        let back = reverse(&r, &plane, Budget::default()).unwrap();
        assert_eq!(back, v);
        assert_ne!(r, v);
    }

    #[test]
    fn tiny_braid_graph() {
        // R = {α, β, α+β}: exactly the two dihedral orders, one edge.
        let g = build_braid_graph(A2, &[ar(1, 0, 0), ar(0, 1, 0), ar(1, 1, 0)], Budget::default()).unwrap();
        assert_eq!(g.vertices.len(), 2);
        assert_eq!(g.edges.len(), 1);
        assert_eq!(g.components, 1);
        assert_eq!(g.unknown, 0);
    }

    #[test]
    fn connect_trivial_and_same_pivot() {
        let (v1, _) = seven_root_example();
        let moves = connect(&v1, &v1, Budget::default()).unwrap();
        assert!(moves.is_empty());
    }

    #[test]
    fn connect_seven_root_example() {
        let (v1, v2) = seven_root_example();
        let moves = connect(&v1, &v2, Budget::default()).unwrap();
        assert!(!moves.is_empty());
        // Replay and check endpoints.
        let mut cur = v1.clone();
        for (step, after) in &moves {
            let pos = cur.positions(|r| step.plane.contains(r));
            assert_eq!((pos[0], *pos.last().unwrap()), (step.lo, step.hi));
            assert_eq!(pos.len(), step.hi - step.lo + 1);
            cur = cur.reversed_block(step.lo, step.hi);
            assert_eq!(&cur, after);
            assert!(matches!(realize(&cur, Budget::default()), Realization::Realizable(_)));
        }
        assert_eq!(cur, v2);
    }

    #[test]
    fn connect_all_pairs_on_a_four_root_graph() {
        let r = [ar(1, 0, 0), ar(0, 1, 0), ar(1, 1, 0), ar(-1, -1, 1)];
        let g = build_braid_graph(A2, &r, Budget::default()).unwrap();
        assert_eq!(g.unknown, 0);
        assert_eq!(g.components, 1);
        for v1 in &g.vertices {
            for v2 in &g.vertices {
                let moves = connect(v1, v2, Budget::default()).unwrap();
                let mut cur = v1.clone();
                for (step, _) in &moves {
                    cur = cur.reversed_block(step.lo, step.hi);
                }
                assert_eq!(&cur, v2);
            }
        }
    }

    #[test]
    fn connect_agrees_with_bfs_on_small_graph() {
        let r = [ar(1, 0, 0), ar(0, 1, 0), ar(1, 1, 0), ar(1, 0, 1)];
        let g = build_braid_graph(A2, &r, Budget::default()).unwrap();
        assert_eq!(g.components, 1);
        for v in g.vertices.iter().take(3) {
            let moves = connect(&g.vertices[0], v, Budget::default()).unwrap();
            let mut cur = g.vertices[0].clone();
            for (step, _) in &moves {
                cur = cur.reversed_block(step.lo, step.hi);
            }
            assert_eq!(&cur, v);
            assert!(same_component_bfs(&g, &g.vertices[0], v));
        }
        let _ = BETA;
    }
}

#[cfg(test)]
mod braid_move_tests {
    use super::*;
    use crate::weyl::elements_up_to;

    /// Braid-equivalent reduced expressions have equal inversion sets.
    #[test]
    fn braid_moves_preserve_inversion_sets() {
        for ty in RootSystemType::ALL {
            for entry in elements_up_to(ty, 6).iter() {
                let seq: BTreeSet<AffineRoot> =
                    root_sequence(ty, &entry.word).unwrap().into_iter().collect();
                for (other, _, _) in braid_neighbors(ty, &entry.word) {
                    let oseq: BTreeSet<AffineRoot> =
                        root_sequence(ty, &other).unwrap().into_iter().collect();
                    assert_eq!(seq, oseq, "{ty} {:?} vs {other:?}", entry.word);
                }
            }
        }
    }
}
