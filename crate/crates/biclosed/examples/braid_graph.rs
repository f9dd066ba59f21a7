//! The braid graph: realizability with witness chains, dihedral-substring
//! reversals, the constructive connect procedure on the worked 7-root
//! example, and DOT export of a small graph.

use biclosed::affine::AffineRoot;
use biclosed::braid::{
    build_braid_graph, connect, dihedral_substrings, realize, Budget, Realization,
    RestrictionVertex,
};
use biclosed::roots::{Root, RootSystemType};
use biclosed::wire;

fn ar(a: i32, b: i32, level: i32) -> AffineRoot {
    AffineRoot::new(Root::new(a, b), level)
}

fn main() {
    let ty = RootSystemType::A2;
    let budget = Budget::default();

    // The worked restriction R and its two bracketing orders.
    let v1 = RestrictionVertex::new(
        ty,
        &[ar(1, 0, 0), ar(0, 1, 0), ar(1, 1, 1), ar(1, 0, 1), ar(-1, 0, 1), ar(0, -1, 1), ar(-1, -1, 1)],
    )
    .unwrap();
    let v2 = RestrictionVertex::new(
        ty,
        &[ar(0, 1, 0), ar(-1, 0, 1), ar(1, 1, 1), ar(1, 0, 1), ar(-1, -1, 1), ar(0, -1, 1), ar(1, 0, 0)],
    )
    .unwrap();

    match realize(&v1, budget) {
        Realization::Realizable(ws) => {
            println!("(R,≤₁) is realizable; pivots: {:?}", ws.iter().map(|w| &w.pivot).collect::<Vec<_>>())
        }
        other => panic!("unexpected: {other:?}"),
    }
    println!("dihedral substrings of (R,≤₁): {}", dihedral_substrings(&v1).len());

    let moves = connect(&v1, &v2, budget).unwrap();
    println!("\nconnect (R,≤₁) → (R,≤₂): {} certified reversals", moves.len());
    let mut cur = v1.clone();
    for (i, (step, after)) in moves.iter().enumerate() {
        cur = after.clone();
        println!("  move {}: reverse positions {}..={} ({:?})", i + 1, step.lo, step.hi, kind(&step.plane));
    }
    assert_eq!(cur, v2);
    println!("endpoint matches (R,≤₂)");

    // A small full graph with DOT output.
    let g = build_braid_graph(ty, &[ar(1, 0, 0), ar(0, 1, 0), ar(1, 1, 0)], budget).unwrap();
    println!(
        "\ngraph on {{α, β, α+β}}: {} vertices, {} edges, {} component(s)",
        g.vertices.len(),
        g.edges.len(),
        g.components
    );
    println!("{}", wire::graph_to_dot(&g));
}

fn kind(p: &biclosed::braid::DihedralSubsystem) -> String {
    match p {
        biclosed::braid::DihedralSubsystem::Finite(v) => format!("finite plane, {} roots", v.len()),
        biclosed::braid::DihedralSubsystem::Delta(r) => format!("δ-string plane of {r}"),
    }
}
