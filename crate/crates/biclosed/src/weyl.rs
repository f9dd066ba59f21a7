//! Elements of the rank-3 affine Weyl groups as exact integer matrices.
//!
//! W̃ acts faithfully on V ⊕ Rδ; in the basis (α, β, δ) every element is a
//! 3×3 integer matrix with determinant ±1, so group arithmetic, inversion
//! sets and word reduction are all exact integer computations.  Generator
//! indices are fixed as 0 = s_α, 1 = s_β, 2 = s_{δ−γ} (γ the highest root).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::affine::{is_positive_affine, AffineRoot};
use crate::error::{Error, Result};
use crate::roots::{system, Root, RootSystemType, ALPHA, BETA};

/// Group element: columns are the images of α, β, δ.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct WElt(pub [[i64; 3]; 3]);

pub const GEN_COUNT: usize = 3;

impl WElt {
    pub fn identity() -> WElt {
        WElt([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    pub fn is_identity(&self) -> bool {
        *self == WElt::identity()
    }

    pub fn mul(&self, other: &WElt) -> WElt {
        let a = &self.0;
        let b = &other.0;
        let mut out = [[0i64; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
            }
        }
        WElt(out)
    }

    pub fn det(&self) -> i64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    pub fn inverse(&self) -> WElt {
        let m = &self.0;
        let d = self.det();
        debug_assert!(d == 1 || d == -1);
        let adj = [
            [
                m[1][1] * m[2][2] - m[1][2] * m[2][1],
                m[0][2] * m[2][1] - m[0][1] * m[2][2],
                m[0][1] * m[1][2] - m[0][2] * m[1][1],
            ],
            [
                m[1][2] * m[2][0] - m[1][0] * m[2][2],
                m[0][0] * m[2][2] - m[0][2] * m[2][0],
                m[0][2] * m[1][0] - m[0][0] * m[1][2],
            ],
            [
                m[1][0] * m[2][1] - m[1][1] * m[2][0],
                m[0][1] * m[2][0] - m[0][0] * m[2][1],
                m[0][0] * m[1][1] - m[0][1] * m[1][0],
            ],
        ];
        let mut out = [[0i64; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                out[i][j] = adj[i][j] * d;
            }
        }
        WElt(out)
    }

    pub fn apply_vec(&self, v: [i64; 3]) -> [i64; 3] {
        let m = &self.0;
        [
            m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
            m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
            m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
        ]
    }

    pub fn apply(&self, r: AffineRoot) -> AffineRoot {
        let v = self.apply_vec([r.dir.a as i64, r.dir.b as i64, r.level as i64]);
        AffineRoot::new(Root::new(v[0] as i32, v[1] as i32), v[2] as i32)
    }

    /// Image direction and level shift: w(ρ + nδ) = (dir, n + shift).
    pub fn direction_map(&self, dir: Root) -> (Root, i32) {
        let v = self.apply_vec([dir.a as i64, dir.b as i64, 0]);
        (Root::new(v[0] as i32, v[1] as i32), v[2] as i32)
    }

    /// The finite part π(w) as the induced permutation action on Φ.
    pub fn finite_dir(&self, dir: Root) -> Root {
        self.direction_map(dir).0
    }
}

/// The three affine simple roots (α, 0), (β, 0), (−γ, 1).
pub fn simple_affine_roots(ty: RootSystemType) -> [AffineRoot; 3] {
    let sys = system(ty);
    [
        AffineRoot::new(ALPHA, 0),
        AffineRoot::new(BETA, 0),
        AffineRoot::new(sys.highest.neg(), 1),
    ]
}

/// Reflection matrix in the affine simple root with index `i`.
pub fn generator(ty: RootSystemType, i: usize) -> WElt {
    let sys = system(ty);
    let a = simple_affine_roots(ty)[i];
    let d = a.dir;
    let m = a.level as i64;
    let mut cols = [[0i64; 3]; 3];
    for (j, &basis) in [ALPHA, BETA].iter().enumerate() {
        let p = sys.pairing(basis, d);
        // s_a(basis) = basis − ⟨basis, d∨⟩ (d + mδ)
        cols[0][j] = if j == 0 { 1 } else { 0 } - p * d.a as i64;
        cols[1][j] = if j == 1 { 1 } else { 0 } - p * d.b as i64;
        cols[2][j] = -p * m;
    }
    cols[2][2] = 1;
    WElt(cols)
}

pub fn word_to_elt(ty: RootSystemType, word: &[u8]) -> WElt {
    let mut w = WElt::identity();
    for &i in word {
        w = w.mul(&generator(ty, i as usize));
    }
    w
}

/// Accumulated root sequence β_j = s_{i₁}⋯s_{i_{j−1}}(a_{i_j}).  The word is
/// reduced exactly when every β_j is a positive affine root, and then the
/// sequence enumerates Φ_w in crossing order.
pub fn root_sequence(ty: RootSystemType, word: &[u8]) -> Result<Vec<AffineRoot>> {
    let simples = simple_affine_roots(ty);
    let mut prefix = WElt::identity();
    let mut out = Vec::with_capacity(word.len());
    for (j, &i) in word.iter().enumerate() {
        if i as usize >= GEN_COUNT {
            return Err(Error::Malformed(format!("generator index {i} out of range")));
        }
        let beta = prefix.apply(simples[i as usize]);
        if !is_positive_affine(ty, beta) {
            return Err(Error::NotReduced { at: j });
        }
        out.push(beta);
        prefix = prefix.mul(&generator(ty, i as usize));
    }
    Ok(out)
}

pub fn is_reduced(ty: RootSystemType, word: &[u8]) -> bool {
    root_sequence(ty, word).is_ok()
}

/// Lexicographically least reduced word of an element, by greedy left
/// descent: the least generator i with w⁻¹(a_i) negative starts some
/// reduced word, and all reduced words have equal length.
pub fn reduce(ty: RootSystemType, elt: &WElt) -> Vec<u8> {
    let simples = simple_affine_roots(ty);
    let mut w = *elt;
    let mut w_inv = elt.inverse();
    let mut letters = Vec::new();
    let cap = 100_000;
    while !w.is_identity() {
        let mut found = false;
        for i in 0..GEN_COUNT {
            let img = w_inv.apply(simples[i]);
            if !is_positive_affine(ty, img) {
                letters.push(i as u8);
                let g = generator(ty, i);
                w = g.mul(&w);
                w_inv = w_inv.mul(&g);
                found = true;
                break;
            }
        }
        assert!(found, "non-identity element with no left descent");
        assert!(letters.len() < cap, "reduction did not terminate");
    }
    letters
}

pub fn length(ty: RootSystemType, elt: &WElt) -> usize {
    reduce(ty, elt).len()
}

/// Inversion set Φ_w of a group element, as explicit roots.
pub fn inversions(ty: RootSystemType, elt: &WElt) -> Vec<AffineRoot> {
    root_sequence(ty, &reduce(ty, elt)).expect("reduce returns a reduced word")
}

#[derive(Clone)]
pub struct Entry {
    pub elt: WElt,
    pub word: Vec<u8>,
}

struct Enumeration {
    entries: Vec<Entry>,
    seen: HashMap<WElt, usize>,
    frontier: Vec<usize>,
    max_len: usize,
}

struct Ctx {
    enumeration: Mutex<Enumeration>,
}

fn ctx(ty: RootSystemType) -> &'static Ctx {
    static CACHE: OnceLock<[Ctx; 3]> = OnceLock::new();
    let mk = || {
        let e = Entry { elt: WElt::identity(), word: Vec::new() };
        let mut seen = HashMap::new();
        seen.insert(e.elt, 0);
        Ctx {
            enumeration: Mutex::new(Enumeration { entries: vec![e], seen, frontier: vec![0], max_len: 0 }),
        }
    };
    let all = CACHE.get_or_init(|| [mk(), mk(), mk()]);
    match ty {
        RootSystemType::A2 => &all[0],
        RootSystemType::B2 => &all[1],
        RootSystemType::G2 => &all[2],
    }
}

/// All group elements of length ≤ max_len with their length-lex least
/// reduced words, in length-lex order.  Cached and extended on demand.
pub fn elements_up_to(ty: RootSystemType, max_len: usize) -> Arc<Vec<Entry>> {
    let c = ctx(ty);
    let mut e = c.enumeration.lock().unwrap();
    while e.max_len < max_len {
        let mut next = Vec::new();
        for &idx in &e.frontier.clone() {
            let parent = e.entries[idx].clone();
            for i in 0..GEN_COUNT {
                // Right extension is reduced iff w(a_i) stays positive.
                let img = parent.elt.apply(simple_affine_roots(ty)[i]);
                if !is_positive_affine(ty, img) {
                    continue;
                }
                let elt = parent.elt.mul(&generator(ty, i));
                if e.seen.contains_key(&elt) {
                    continue;
                }
                let mut word = parent.word.clone();
                word.push(i as u8);
                let pos = e.entries.len();
                e.seen.insert(elt, pos);
                e.entries.push(Entry { elt, word });
                next.push(pos);
            }
        }
        e.frontier = next;
        e.max_len += 1;
    }
    let upper = e.max_len.min(max_len);
    Arc::new(e.entries.iter().filter(|en| en.word.len() <= upper).cloned().collect())
}

/// Coxeter exponent m(s_i, s_j) read off from the product order.
pub fn coxeter_m(ty: RootSystemType, i: usize, j: usize) -> usize {
    if i == j {
        return 1;
    }
    let g = generator(ty, i).mul(&generator(ty, j));
    let mut p = g;
    let mut m = 1;
    while !p.is_identity() {
        p = p.mul(&g);
        m += 1;
        assert!(m <= 6, "affine rank-3 exponents are at most 6");
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_involutions() {
        for ty in RootSystemType::ALL {
            for i in 0..GEN_COUNT {
                let g = generator(ty, i);
                assert!(g.mul(&g).is_identity());
                assert_eq!(g.det(), -1);
            }
        }
    }

    #[test]
    fn coxeter_matrix_matches_the_affine_diagrams() {
        use RootSystemType::*;
        assert_eq!(coxeter_m(A2, 0, 1), 3);
        assert_eq!(coxeter_m(A2, 0, 2), 3);
        assert_eq!(coxeter_m(A2, 1, 2), 3);
        assert_eq!(coxeter_m(B2, 0, 1), 4);
        assert_eq!(coxeter_m(B2, 0, 2), 4);
        assert_eq!(coxeter_m(B2, 1, 2), 2);
        assert_eq!(coxeter_m(G2, 0, 1), 6);
        assert_eq!(coxeter_m(G2, 1, 2), 3);
        assert_eq!(coxeter_m(G2, 0, 2), 2);
    }

    #[test]
    fn root_sequence_detects_non_reduced_words() {
        let ty = RootSystemType::A2;
        assert!(is_reduced(ty, &[0, 1, 0]));
        assert!(!is_reduced(ty, &[0, 0]));
        assert!(!is_reduced(ty, &[0, 1, 0, 1])); // braid relation makes this length 2
        let seq = root_sequence(ty, &[0, 1]).unwrap();
        assert_eq!(seq, vec![AffineRoot::new(ALPHA, 0), AffineRoot::new(Root::new(1, 1), 0)]);
    }

    #[test]
    fn reduce_roundtrip_and_lengths() {
        for ty in RootSystemType::ALL {
            for entry in elements_up_to(ty, 5).iter() {
                let w = reduce(ty, &entry.elt);
                assert_eq!(w.len(), entry.word.len());
                assert_eq!(word_to_elt(ty, &w), entry.elt);
                assert!(is_reduced(ty, &w));
                // Inversion count equals length.
                assert_eq!(inversions(ty, &entry.elt).len(), w.len());
            }
        }
    }

    #[test]
    fn enumeration_is_length_lex_and_deduplicated() {
        let ty = RootSystemType::A2;
        let all = elements_up_to(ty, 4);
        for pair in all.windows(2) {
            let (a, b) = (&pair[0].word, &pair[1].word);
            assert!(a.len() < b.len() || (a.len() == b.len() && a < b));
        }
        let n: usize = all.iter().filter(|e| e.word.len() <= 1).count();
        assert_eq!(n, 4);
    }
}
