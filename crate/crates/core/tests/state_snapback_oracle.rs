//! Independent brute-force oracle for the state "snapback" strength at
//! |S| = |A| = |B| = 2.
//!
//! The oracle works on plain index-based tables, sharing no code with the
//! engine's value representation or enumerators. It decides naturality, the
//! unit law, and the multiplication law for
//! Γ(tA,tB) = λs.((fst(tA s), fst(tB s)), s) by exhausting every input, and
//! then cross-checks the engine's verdict and witness against that ground
//! truth. The engine report is pinned in a golden file.

use mlb_core::lawcheck::{check_gamma_a, check_gamma_b, check_prestrength_naturality, RunConfig, Status};
use mlb_core::monad::Monad;
use mlb_core::strength::builtin_strength;
use mlb_core::value::{Bounds, Universe, Val};

/// A state computation S -> (X, S) over S = {0,1}: entry i is the result at
/// state i, as (value index, next state).
type StateFn = [(usize, usize); 2];

fn all_state_fns(n_values: usize) -> Vec<StateFn> {
    let mut out = Vec::new();
    for v0 in 0..n_values {
        for s0 in 0..2 {
            for v1 in 0..n_values {
                for s1 in 0..2 {
                    out.push([(v0, s0), (v1, s1)]);
                }
            }
        }
    }
    out
}

/// A nested computation S -> (StateFn, S).
type NestedFn = [(StateFn, usize); 2];

fn all_nested_fns(n_values: usize) -> Vec<NestedFn> {
    let inner = all_state_fns(n_values);
    let mut out = Vec::new();
    for (t0, s0) in inner.iter().flat_map(|t| [(t, 0), (t, 1)]) {
        for (t1, s1) in inner.iter().flat_map(|t| [(t, 0), (t, 1)]) {
            out.push([(*t0, s0), (*t1, s1)]);
        }
    }
    out
}

fn join(u: &NestedFn) -> StateFn {
    let mut out = [(0, 0); 2];
    for (s, slot) in out.iter_mut().enumerate() {
        let (t, s1) = u[s];
        *slot = t[s1];
    }
    out
}

/// Γ at value level: s -> ((a, b), s).
fn snapback(ta: &StateFn, tb: &StateFn) -> [((usize, usize), usize); 2] {
    let mut out = [((0, 0), 0); 2];
    for (s, slot) in out.iter_mut().enumerate() {
        *slot = ((ta[s].0, tb[s].0), s);
    }
    out
}

#[test]
fn oracle_gamma_a_and_naturality_hold() {
    // ΓA: Γ(unit a, unit b)(s) = ((a, b), s) for every a, b, s.
    for a in 0..2 {
        for b in 0..2 {
            let unit_a: StateFn = [(a, 0), (a, 1)];
            let unit_b: StateFn = [(b, 0), (b, 1)];
            let got = snapback(&unit_a, &unit_b);
            for s in 0..2 {
                assert_eq!(got[s], ((a, b), s));
            }
        }
    }

    // Naturality over every pair of endofunctions f, g : 2 -> 2.
    let fns: Vec<[usize; 2]> = vec![[0, 0], [0, 1], [1, 0], [1, 1]];
    let carriers = all_state_fns(2);
    for f in &fns {
        for g in &fns {
            for ta in &carriers {
                for tb in &carriers {
                    let mapped_a: StateFn = [
                        (f[ta[0].0], ta[0].1),
                        (f[ta[1].0], ta[1].1),
                    ];
                    let mapped_b: StateFn = [
                        (g[tb[0].0], tb[0].1),
                        (g[tb[1].0], tb[1].1),
                    ];
                    let lhs = snapback(&mapped_a, &mapped_b);
                    let raw = snapback(ta, tb);
                    let rhs: [((usize, usize), usize); 2] = [
                        ((f[raw[0].0 .0], g[raw[0].0 .1]), raw[0].1),
                        ((f[raw[1].0 .0], g[raw[1].0 .1]), raw[1].1),
                    ];
                    assert_eq!(lhs, rhs, "naturality violated at {ta:?} {tb:?}");
                }
            }
        }
    }
}

/// The oracle's ΓB verdict: the law fails, and the failing pairs are counted.
fn oracle_gamma_b_failures() -> usize {
    let nested = all_nested_fns(2);
    let mut failures = 0;
    for u in &nested {
        for v in &nested {
            // counterclockwise: Γ(join u, join v)
            let rhs = snapback(&join(u), &join(v));
            // clockwise: ν ∘ KΓ ∘ Γ_K — at state s this evaluates the inner
            // computations picked at s, again at s.
            let mut lhs = [((0, 0), 0); 2];
            for (s, slot) in lhs.iter_mut().enumerate() {
                let ta = u[s].0;
                let tb = v[s].0;
                *slot = ((ta[s].0, tb[s].0), s);
            }
            if lhs != rhs {
                failures += 1;
            }
        }
    }
    failures
}

#[test]
fn oracle_gamma_b_fails_and_engine_agrees() {
    let failures = oracle_gamma_b_failures();
    assert!(failures > 0, "oracle finds ΓB violations for the snapback strength");
    // 1024 nested computations per side.
    assert_eq!(1024 * 1024, all_nested_fns(2).len() * all_nested_fns(2).len());

    // Engine run over the same shapes.
    let s = Universe::of_ints("S", [0, 1]);
    let a = Universe::of_ints("A", [0, 1]);
    let b = Universe::of_ints("B", [0, 1]);
    let m = Monad::state("state", s);
    let g = builtin_strength("state_snapback", m, None, None).unwrap();
    let bounds = Bounds::default();
    let cfg = RunConfig::default();

    let nat = check_prestrength_naturality(&g, &[a.clone(), b.clone()], &bounds, &cfg).unwrap();
    assert_eq!(nat.status, Status::Pass);
    let ga = check_gamma_a(&g, &[a.clone(), b.clone()], &bounds, &cfg).unwrap();
    assert_eq!(ga.status, Status::Pass);

    let gb = check_gamma_b(&g, &[a.clone(), b.clone()], &bounds, &cfg).unwrap();
    assert_eq!(gb.status, Status::Fail, "engine agrees with the oracle: ΓB fails");
    assert_eq!(gb.cases_checked, 1024 * 1024);

    // Seed stability: the check has no sampled quantifiers, and the verdict
    // must not depend on the seed in any case.
    let other_seed = Bounds { sample_seed: 99, ..Bounds::default() };
    let gb2 = check_gamma_b(&g, &[a.clone(), b.clone()], &other_seed, &cfg).unwrap();
    assert_eq!(gb, gb2);

    // The engine's witness fails in the oracle's arithmetic too.
    let w = gb.witness.as_ref().expect("FAIL carries a witness");
    let u = nested_from_val(&w.inputs[0].1);
    let v = nested_from_val(&w.inputs[1].1);
    let rhs = snapback(&join(&u), &join(&v));
    let mut lhs = [((0, 0), 0); 2];
    for (s, slot) in lhs.iter_mut().enumerate() {
        *slot = (((u[s].0)[s].0, (v[s].0)[s].0), s);
    }
    assert_ne!(lhs, rhs, "engine witness must disagree in the oracle as well");

    // Golden pin of the engine verdict.
    let golden_path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/state_snapback_gamma_b.json");
    let rendered = serde_json::to_string_pretty(&gb).unwrap();
    if std::env::var("GOLDEN_REGEN").is_ok() {
        std::fs::write(golden_path, &rendered).unwrap();
    }
    let golden = std::fs::read_to_string(golden_path)
        .expect("golden file present; regenerate with GOLDEN_REGEN=1");
    assert_eq!(rendered.trim(), golden.trim(), "engine report matches the golden pin");
}

/// Decode an engine value S -> (MA, S) into oracle indices. Values are
/// integer atoms 0/1; states likewise.
fn nested_from_val(v: &Val) -> NestedFn {
    fn idx(v: &Val) -> usize {
        match v {
            Val::Atom(mlb_core::value::Atom::Int(i)) => *i as usize,
            _ => panic!("expected an integer atom, got {v}"),
        }
    }
    fn state_fn_from(v: &Val) -> StateFn {
        let t = v.as_table();
        let mut out = [(0, 0); 2];
        for (d, e) in t.domain.iter().zip(&t.entries) {
            let (a, s1) = e.as_pair();
            out[idx(d)] = (idx(a), idx(s1));
        }
        out
    }
    let t = v.as_table();
    let mut out = [([(0, 0); 2], 0); 2];
    for (d, e) in t.domain.iter().zip(&t.entries) {
        let (inner, s1) = e.as_pair();
        out[idx(d)] = (state_fn_from(inner), idx(s1));
    }
    out
}
