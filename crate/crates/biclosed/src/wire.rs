//! JSON wire formats for the external interfaces.
//!
//! Roots are pairs `[a,b]`; affine roots `{"dir":[a,b],"level":n}`;
//! eventually periodic sets map `"a,b"` direction keys to interval
//! objects; canonical biclosed forms are `{"w":[...],"L":[...],"K":[...]}`
//! with generator indices 0 = s_α, 1 = s_β, 2 = s_{δ−γ}; finite words are
//! integer arrays and infinite words `{"w":[...],"L":[...]}`; lattice
//! elements tag a word with `"inv"` or `"coinv"`.

use serde_json::{json, Map, Value};

use crate::affine::{AffineRoot, EPSet, Iv};
use crate::braid::{DihedralSubsystem, MoveStep, RestrictionVertex};
use crate::canonical::BiclosedCanonical;
use crate::error::{Error, Result};
use crate::lattice::BElement;
use crate::roots::{system, Root, RootSystemType, SimpleSet, ALPHA, BETA};
use crate::words::{FiniteWord, WBarElement};

pub fn root_to_json(r: Root) -> Value {
    json!([r.a, r.b])
}

pub fn root_from_json(v: &Value) -> Result<Root> {
    let arr = v.as_array().ok_or_else(|| Error::Malformed(format!("expected [a,b], got {v}")))?;
    if arr.len() != 2 {
        return Err(Error::Malformed(format!("expected [a,b], got {v}")));
    }
    let a = arr[0].as_i64().ok_or_else(|| Error::Malformed("root entries must be integers".into()))?;
    let b = arr[1].as_i64().ok_or_else(|| Error::Malformed("root entries must be integers".into()))?;
    Ok(Root::new(a as i32, b as i32))
}

pub fn affine_root_to_json(r: AffineRoot) -> Value {
    json!({"dir": root_to_json(r.dir), "level": r.level})
}

pub fn affine_root_from_json(v: &Value) -> Result<AffineRoot> {
    let dir = root_from_json(
        v.get("dir").ok_or_else(|| Error::Malformed("affine root needs a \"dir\" field".into()))?,
    )?;
    let level = v
        .get("level")
        .and_then(Value::as_i64)
        .ok_or_else(|| Error::Malformed("affine root needs an integer \"level\"".into()))?;
    Ok(AffineRoot::new(dir, level as i32))
}

pub fn affine_roots_from_json(v: &Value) -> Result<Vec<AffineRoot>> {
    v.as_array()
        .ok_or_else(|| Error::Malformed("expected a list of affine roots".into()))?
        .iter()
        .map(affine_root_from_json)
        .collect()
}

/// Canonical interval sets only; raw multi-interval sets have no wire form.
pub fn epset_to_json(e: &EPSet) -> Result<Value> {
    if !e.is_canonical() {
        return Err(Error::Malformed("non-canonical set has no JSON form".into()));
    }
    let sys = system(e.ty);
    let mut map = Map::new();
    for &r in &sys.roots {
        let ls = e.levels(r);
        if let Some(&iv) = ls.intervals().first() {
            let v = match iv {
                Iv::Fin { lo, hi } => json!({"kind": "finite", "lo": lo, "hi": hi}),
                Iv::Ray { lo } => json!({"kind": "ray", "lo": lo}),
            };
            map.insert(format!("{},{}", r.a, r.b), v);
        }
    }
    Ok(Value::Object(map))
}

pub fn epset_from_json(ty: RootSystemType, v: &Value) -> Result<EPSet> {
    let obj = v.as_object().ok_or_else(|| Error::Malformed("expected a direction map".into()))?;
    let mut e = EPSet::empty(ty);
    for (key, val) in obj {
        let parts: Vec<&str> = key.split(',').collect();
        if parts.len() != 2 {
            return Err(Error::Malformed(format!("bad direction key {key:?}")));
        }
        let a = parts[0].parse::<i32>().map_err(|_| Error::Malformed(format!("bad direction key {key:?}")))?;
        let b = parts[1].parse::<i32>().map_err(|_| Error::Malformed(format!("bad direction key {key:?}")))?;
        let dir = Root::new(a, b);
        if !system(ty).is_root(dir) {
            return Err(Error::NotARoot(format!("{dir}")));
        }
        let lo = val.get("lo").and_then(Value::as_i64).ok_or_else(|| Error::Malformed("interval needs \"lo\"".into()))? as i32;
        let iv = match val.get("kind").and_then(Value::as_str) {
            Some("finite") => {
                let hi = val.get("hi").and_then(Value::as_i64).ok_or_else(|| Error::Malformed("finite interval needs \"hi\"".into()))? as i32;
                Iv::Fin { lo, hi }
            }
            Some("ray") => Iv::Ray { lo },
            other => return Err(Error::Malformed(format!("bad interval kind {other:?}"))),
        };
        e.set_levels(dir, crate::affine::LevelSet::single(iv));
    }
    Ok(e)
}

pub fn simple_set_to_json(s: SimpleSet) -> Value {
    Value::Array(s.members().into_iter().map(root_to_json).collect())
}

pub fn simple_set_from_json(v: &Value) -> Result<SimpleSet> {
    let roots: Vec<Root> = v
        .as_array()
        .ok_or_else(|| Error::Malformed("expected a list of simple roots".into()))?
        .iter()
        .map(root_from_json)
        .collect::<Result<_>>()?;
    for r in &roots {
        if *r != ALPHA && *r != BETA {
            return Err(Error::Malformed(format!("{r} is not a standard simple root")));
        }
    }
    SimpleSet::from_members(&roots)
}

pub fn word_letters_from_json(v: &Value) -> Result<Vec<u8>> {
    v.as_array()
        .ok_or_else(|| Error::Malformed("expected a list of generator indices".into()))?
        .iter()
        .map(|x| {
            let n = x.as_u64().ok_or_else(|| Error::Malformed("generator indices are 0, 1, 2".into()))?;
            if n > 2 {
                return Err(Error::Malformed(format!("generator index {n} out of range")));
            }
            Ok(n as u8)
        })
        .collect()
}

pub fn canonical_to_json(c: &BiclosedCanonical) -> Value {
    json!({
        "w": c.word.iter().map(|&i| i as u64).collect::<Vec<_>>(),
        "L": simple_set_to_json(c.l),
        "K": simple_set_to_json(c.k),
    })
}

pub fn canonical_from_json(ty: RootSystemType, v: &Value) -> Result<BiclosedCanonical> {
    let w = word_letters_from_json(v.get("w").ok_or_else(|| Error::Malformed("canonical form needs \"w\"".into()))?)?;
    let l = simple_set_from_json(v.get("L").ok_or_else(|| Error::Malformed("canonical form needs \"L\"".into()))?)?;
    let k = simple_set_from_json(v.get("K").unwrap_or(&json!([])))?;
    BiclosedCanonical::new(ty, &w, l, k)
}

pub fn wbar_to_json(w: &WBarElement) -> Value {
    match w {
        WBarElement::Finite(f) => Value::Array(f.letters.iter().map(|&i| json!(i)).collect()),
        WBarElement::Infinite(u) => json!({
            "w": u.word().iter().map(|&i| i as u64).collect::<Vec<_>>(),
            "L": simple_set_to_json(u.l_set()),
        }),
    }
}

/// Accepts a finite word `[i,...]`, a canonical infinite word
/// `{"w":..,"L":..}`, or a periodic expression `{"prefix":..,"cycle":..}`.
pub fn wbar_from_json(ty: RootSystemType, v: &Value) -> Result<WBarElement> {
    if v.is_array() {
        return Ok(WBarElement::Finite(FiniteWord::new(ty, &word_letters_from_json(v)?)?));
    }
    if v.get("cycle").is_some() {
        let prefix = word_letters_from_json(v.get("prefix").unwrap_or(&json!([])))?;
        let cycle = word_letters_from_json(v.get("cycle").unwrap())?;
        return Ok(WBarElement::Infinite(crate::words::periodic_word(ty, &prefix, &cycle)?));
    }
    if v.get("w").is_some() {
        let w = word_letters_from_json(v.get("w").unwrap())?;
        let l = simple_set_from_json(v.get("L").unwrap_or(&json!([])))?;
        if l.is_full() {
            return Err(Error::Malformed("infinite words need L ⊊ Π".into()));
        }
        let c = BiclosedCanonical::new(ty, &w, l, SimpleSet::EMPTY)?;
        return Ok(WBarElement::Infinite(crate::words::normalize_infinite(c.epset(), w.len() + 4)?));
    }
    Err(Error::Malformed("expected a word, canonical infinite word, or periodic expression".into()))
}

pub fn belement_to_json(b: &BElement) -> Value {
    json!({
        "kind": if b.is_complemented() { "coinv" } else { "inv" },
        "word": wbar_to_json(b.word()),
    })
}

pub fn belement_from_json(ty: RootSystemType, v: &Value) -> Result<BElement> {
    let w = wbar_from_json(ty, v.get("word").ok_or_else(|| Error::Malformed("lattice element needs \"word\"".into()))?)?;
    match v.get("kind").and_then(Value::as_str) {
        Some("inv") => Ok(BElement::inv(w)),
        Some("coinv") => Ok(BElement::coinv(w)),
        other => Err(Error::Malformed(format!("bad lattice element kind {other:?}"))),
    }
}

pub fn vertex_to_json(v: &RestrictionVertex) -> Value {
    Value::Array(v.order.iter().map(|&r| affine_root_to_json(r)).collect())
}

pub fn vertex_from_json(ty: RootSystemType, v: &Value) -> Result<RestrictionVertex> {
    RestrictionVertex::new(ty, &affine_roots_from_json(v)?)
}

pub fn plane_to_json(p: &DihedralSubsystem) -> Value {
    match p {
        DihedralSubsystem::Finite(roots) => json!({
            "kind": "finite",
            "roots": roots.iter().map(|&r| affine_root_to_json(r)).collect::<Vec<_>>(),
        }),
        DihedralSubsystem::Delta(rho) => json!({"kind": "delta", "dir": root_to_json(*rho)}),
    }
}

pub fn moves_to_json(moves: &[(MoveStep, RestrictionVertex)]) -> Value {
    Value::Array(
        moves
            .iter()
            .map(|(step, after)| {
                json!({
                    "plane": plane_to_json(&step.plane),
                    "range": [step.lo, step.hi],
                    "after": vertex_to_json(after),
                })
            })
            .collect(),
    )
}

fn vertex_label(v: &RestrictionVertex) -> String {
    v.order
        .iter()
        .map(|r| format!("{},{}+{}", r.dir.a, r.dir.b, r.level))
        .collect::<Vec<_>>()
        .join("; ")
}

/// DOT export with stable vertex naming (vertices come pre-sorted).
pub fn graph_to_dot(g: &crate::braid::BraidGraph) -> String {
    let mut out = String::from("graph braid {\n");
    for (i, v) in g.vertices.iter().enumerate() {
        out.push_str(&format!("  v{} [label=\"{}\"];\n", i, vertex_label(v)));
    }
    for (i, j, _) in &g.edges {
        out.push_str(&format!("  v{} -- v{};\n", i, j));
    }
    out.push_str("}\n");
    out
}

pub fn graph_to_json(g: &crate::braid::BraidGraph) -> Value {
    json!({
        "vertices": g.vertices.iter().map(vertex_to_json).collect::<Vec<_>>(),
        "edges": g.edges.iter().map(|(i, j, p)| json!([i, j, plane_to_json(p)])).collect::<Vec<_>>(),
        "components": g.components,
        "unknown": g.unknown,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::base_epset;

    #[test]
    fn roundtrips() {
        let ty = RootSystemType::A2;
        let r = AffineRoot::new(Root::new(-1, 0), 2);
        assert_eq!(affine_root_from_json(&affine_root_to_json(r)).unwrap(), r);
        let e = base_epset(ty, SimpleSet::B, SimpleSet::EMPTY);
        let back = epset_from_json(ty, &epset_to_json(&e).unwrap()).unwrap();
        assert_eq!(back, e);
        let c = BiclosedCanonical::new(ty, &[0, 1], SimpleSet::B, SimpleSet::EMPTY).unwrap();
        let back = canonical_from_json(ty, &canonical_to_json(&c)).unwrap();
        assert_eq!(back, c);
        let w = wbar_from_json(ty, &json!({"prefix": [], "cycle": [0, 1, 2]})).unwrap();
        assert_eq!(wbar_to_json(&w), json!({"w": [], "L": [[0, 1]]}));
        let b = BElement::coinv(w);
        let back = belement_from_json(ty, &belement_to_json(&b)).unwrap();
        assert_eq!(back, b);
    }

    #[test]
    fn malformed_inputs_are_rejected() {
        let ty = RootSystemType::A2;
        assert!(root_from_json(&json!([1])).is_err());
        assert!(affine_root_from_json(&json!({"dir": [1, 0]})).is_err());
        assert!(epset_from_json(ty, &json!({"5,5": {"kind": "ray", "lo": 0}})).is_err());
        assert!(word_letters_from_json(&json!([0, 7])).is_err());
        assert!(wbar_from_json(ty, &json!({"nope": 1})).is_err());
    }
}
