//! Property tests: closure-operator laws on random generator sets, wire
//! round-trips, and the action law on random words.

use proptest::prelude::*;

use biclosed::affine::{closure, closure_epset, closure_window, min_level, AffineRoot, Window};
use biclosed::canonical::{act, base_epset, orthogonal_lk_pairs};
use biclosed::roots::{system, RootSystemType};
use biclosed::weyl::word_to_elt;
use biclosed::wire;

fn ty_strategy() -> impl Strategy<Value = RootSystemType> {
    prop_oneof![
        Just(RootSystemType::A2),
        Just(RootSystemType::B2),
        Just(RootSystemType::G2),
    ]
}

fn gens_strategy() -> impl Strategy<Value = (RootSystemType, Vec<AffineRoot>)> {
    (ty_strategy(), proptest::collection::vec((0usize..12, 0i32..4), 0..4)).prop_map(|(ty, raw)| {
        let sys = system(ty);
        let gens = raw
            .into_iter()
            .map(|(i, lvl)| {
                let dir = sys.roots[i % sys.roots.len()];
                AffineRoot::new(dir, lvl.max(min_level(ty, dir)))
            })
            .collect();
        (ty, gens)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Extensive, idempotent, monotone, and window-consistent.
    #[test]
    fn closure_laws((ty, gens) in gens_strategy()) {
        let c = closure(ty, &gens).unwrap();
        for &g in &gens {
            prop_assert!(c.contains(g));
        }
        let again = closure_epset(&c).unwrap();
        prop_assert_eq!(&again, &c);
        if !gens.is_empty() {
            let fewer = &gens[..gens.len() - 1];
            let smaller = closure(ty, fewer).unwrap();
            prop_assert!(c.includes(&smaller));
        }
        let w = c.auto_window();
        let win = closure_window(ty, &gens, Window::new(w.n).unwrap()).unwrap();
        prop_assert_eq!(win, c.truncate(w.n));
    }

    /// Canonical eventually periodic sets survive the JSON wire format.
    #[test]
    fn epset_wire_roundtrip((ty, gens) in gens_strategy()) {
        let c = closure(ty, &gens).unwrap();
        let v = wire::epset_to_json(&c).unwrap();
        let back = wire::epset_from_json(ty, &v).unwrap();
        prop_assert_eq!(back, c);
    }

    /// act(xy, Γ) = act(x, act(y, Γ)) on arbitrary letter strings and all
    /// base forms.
    #[test]
    fn action_law(
        ty in ty_strategy(),
        xw in proptest::collection::vec(0u8..3, 0..4),
        yw in proptest::collection::vec(0u8..3, 0..4),
        pick in 0usize..7,
    ) {
        let pairs = orthogonal_lk_pairs(ty);
        let (l, k) = pairs[pick % pairs.len()];
        let gamma = base_epset(ty, l, k);
        let x = word_to_elt(ty, &xw);
        let y = word_to_elt(ty, &yw);
        let lhs = act(ty, &x.mul(&y), &gamma);
        let rhs = act(ty, &x, &act(ty, &y, &gamma));
        prop_assert_eq!(lhs, rhs);
    }
}
