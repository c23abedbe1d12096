//! The verification engine: each law's diagram is quantified over bounded
//! enumerations, evaluated on both legs, and reported with a minimal
//! counterexample when the legs disagree.
//!
//! PASS means "no counterexample within bounds"; every report carries its
//! case count so a PASS is never mistaken for a proof.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::time::{Duration, Instant};

use crate::compose::{sequence, DistLaw};
use crate::error::Error;
use crate::monad::Monad;
use crate::signature::{self, SignatureSpec};
use crate::strength::{
    extend_gamma, lst, lst_gamma, product_components, product_val, reconstruct_gamma, rst,
    rst_gamma, Nesting, Strength,
};
use crate::value::{
    enumerate_functions_capped, function_space_exhaustive, lists_up_to, Bounds, FnTable, Universe,
    Val,
};

// ---------------------------------------------------------------------------
// Report types
// ---------------------------------------------------------------------------

/// Closed enumeration of every law the engine can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LawId {
    #[serde(rename = "MONAD_LEFT_UNIT")]
    MonadLeftUnit,
    #[serde(rename = "MONAD_RIGHT_UNIT")]
    MonadRightUnit,
    #[serde(rename = "MONAD_ASSOC")]
    MonadAssoc,
    #[serde(rename = "FUNCTOR_ID")]
    FunctorId,
    #[serde(rename = "FUNCTOR_COMP")]
    FunctorComp,
    #[serde(rename = "PRESTRENGTH_NATURALITY")]
    PrestrengthNaturality,
    #[serde(rename = "GAMMA_A")]
    GammaA,
    #[serde(rename = "GAMMA_B")]
    GammaB,
    #[serde(rename = "GAMMA_ASSOC")]
    GammaAssoc,
    #[serde(rename = "LIFT_C")]
    LiftC,
    #[serde(rename = "LIFT_D")]
    LiftD,
    #[serde(rename = "RST_LIFT_1")]
    RstLift1,
    #[serde(rename = "RST_LIFT_2")]
    RstLift2,
    #[serde(rename = "COMMUTATIVE")]
    Commutative,
    #[serde(rename = "PRODUCT_COHERENCE")]
    ProductCoherence,
    #[serde(rename = "DL_A")]
    DlA,
    #[serde(rename = "DL_B")]
    DlB,
    #[serde(rename = "DL_C")]
    DlC,
    #[serde(rename = "DL_D")]
    DlD,
    #[serde(rename = "MAP_LIFT_FUNCTORIAL")]
    MapLiftFunctorial,
    #[serde(rename = "RECONSTRUCT")]
    Reconstruct,
}

impl LawId {
    pub fn as_str(&self) -> &'static str {
        match self {
            LawId::MonadLeftUnit => "MONAD_LEFT_UNIT",
            LawId::MonadRightUnit => "MONAD_RIGHT_UNIT",
            LawId::MonadAssoc => "MONAD_ASSOC",
            LawId::FunctorId => "FUNCTOR_ID",
            LawId::FunctorComp => "FUNCTOR_COMP",
            LawId::PrestrengthNaturality => "PRESTRENGTH_NATURALITY",
            LawId::GammaA => "GAMMA_A",
            LawId::GammaB => "GAMMA_B",
            LawId::GammaAssoc => "GAMMA_ASSOC",
            LawId::LiftC => "LIFT_C",
            LawId::LiftD => "LIFT_D",
            LawId::RstLift1 => "RST_LIFT_1",
            LawId::RstLift2 => "RST_LIFT_2",
            LawId::Commutative => "COMMUTATIVE",
            LawId::ProductCoherence => "PRODUCT_COHERENCE",
            LawId::DlA => "DL_A",
            LawId::DlB => "DL_B",
            LawId::DlC => "DL_C",
            LawId::DlD => "DL_D",
            LawId::MapLiftFunctorial => "MAP_LIFT_FUNCTORIAL",
            LawId::Reconstruct => "RECONSTRUCT",
        }
    }

    pub const ALL: [LawId; 21] = [
        LawId::MonadLeftUnit,
        LawId::MonadRightUnit,
        LawId::MonadAssoc,
        LawId::FunctorId,
        LawId::FunctorComp,
        LawId::PrestrengthNaturality,
        LawId::GammaA,
        LawId::GammaB,
        LawId::GammaAssoc,
        LawId::LiftC,
        LawId::LiftD,
        LawId::RstLift1,
        LawId::RstLift2,
        LawId::Commutative,
        LawId::ProductCoherence,
        LawId::DlA,
        LawId::DlB,
        LawId::DlC,
        LawId::DlD,
        LawId::MapLiftFunctorial,
        LawId::Reconstruct,
    ];
}

impl std::fmt::Display for LawId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "VACUOUS")]
    Vacuous,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Vacuous => "VACUOUS",
        })
    }
}

/// Whether function-space quantifiers ran exhaustively or via seeded samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FnMode {
    #[serde(rename = "exhaustive")]
    Exhaustive,
    #[serde(rename = "sampled")]
    Sampled,
}

/// A concrete failing input with both evaluated legs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Counterexample {
    pub inputs: Vec<(String, Val)>,
    pub lhs: Val,
    pub rhs: Val,
    pub lhs_path: String,
    pub rhs_path: String,
}

/// Verdict for one law over one subject.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LawReport {
    #[serde(rename = "lawId")]
    pub law: LawId,
    pub subject: String,
    pub status: Status,
    pub cases_checked: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub fn_mode: Option<FnMode>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Counterexample>,
    #[serde(skip, default)]
    pub elapsed: Duration,
}

impl PartialEq for LawReport {
    fn eq(&self, other: &Self) -> bool {
        // elapsed is wall-clock noise, not part of the verdict
        self.law == other.law
            && self.subject == other.subject
            && self.status == other.status
            && self.cases_checked == other.cases_checked
            && self.fn_mode == other.fn_mode
            && self.witness == other.witness
    }
}

impl LawReport {
    pub fn passed(&self) -> bool {
        matches!(self.status, Status::Pass | Status::Vacuous)
    }
}

/// Execution configuration. Parallel runs reduce by minimum witness, so the
/// report is identical to a serial run.
#[derive(Debug, Clone, Copy, Default)]
pub struct RunConfig {
    pub parallel: bool,
}

// ---------------------------------------------------------------------------
// The quantifier core
// ---------------------------------------------------------------------------

fn tuple_at(domains: &[(String, Vec<Val>)], mut idx: u64) -> Vec<Val> {
    let mut out = vec![Val::Unit; domains.len()];
    for (i, (_, dom)) in domains.iter().enumerate().rev() {
        let len = dom.len() as u64;
        out[i] = dom[(idx % len) as usize].clone();
        idx /= len;
    }
    out
}

/// Quantify `eval` over the cartesian product of `domains` (first domain most
/// significant, each domain sorted by the global value order, so the smallest
/// failing index is the lexicographically minimal witness). The full product
/// is always scanned; failures reduce to the minimal one.
#[allow(clippy::too_many_arguments)]
fn run_law(
    cfg: &RunConfig,
    law: LawId,
    subject: String,
    lhs_path: &str,
    rhs_path: &str,
    fn_mode: Option<FnMode>,
    mut domains: Vec<(String, Vec<Val>)>,
    eval: impl Fn(&[Val]) -> (Val, Val) + Sync,
) -> LawReport {
    let started = Instant::now();
    for (_, dom) in domains.iter_mut() {
        dom.sort();
    }
    if domains.iter().any(|(_, d)| d.is_empty()) {
        return LawReport {
            law,
            subject,
            status: Status::Vacuous,
            cases_checked: 0,
            fn_mode,
            witness: None,
            elapsed: started.elapsed(),
        };
    }
    let total: u64 = domains.iter().map(|(_, d)| d.len() as u64).product();

    let check_one = |idx: u64| -> Option<u64> {
        let tuple = tuple_at(&domains, idx);
        let (lhs, rhs) = eval(&tuple);
        if lhs != rhs {
            Some(idx)
        } else {
            None
        }
    };

    let min_fail: Option<u64> = if cfg.parallel {
        (0..total).into_par_iter().filter_map(check_one).min()
    } else {
        (0..total).filter_map(check_one).min()
    };

    let witness = min_fail.map(|idx| {
        let tuple = tuple_at(&domains, idx);
        let (lhs, rhs) = eval(&tuple);
        Counterexample {
            inputs: domains
                .iter()
                .map(|(name, _)| name.clone())
                .zip(tuple)
                .collect(),
            lhs,
            rhs,
            lhs_path: lhs_path.to_string(),
            rhs_path: rhs_path.to_string(),
        }
    });

    LawReport {
        law,
        subject,
        status: if witness.is_some() { Status::Fail } else { Status::Pass },
        cases_checked: total,
        fn_mode,
        witness,
        elapsed: started.elapsed(),
    }
}

/// Per-space caps for `k` function quantifiers: each space is capped at
/// `max_fn_enum`, and the crossed budget at `max_fn_enum²` by halving the
/// largest cap.
fn fn_caps(space_sizes: &[Option<u128>], max_fn: usize) -> Vec<usize> {
    let mut caps: Vec<usize> = space_sizes
        .iter()
        .map(|n| match n {
            Some(n) => (*n).min(max_fn as u128) as usize,
            None => max_fn,
        })
        .collect();
    let budget = (max_fn as u128).saturating_mul(max_fn as u128);
    loop {
        let product: u128 = caps.iter().map(|&c| c as u128).product();
        if product <= budget {
            break;
        }
        let largest = caps
            .iter()
            .enumerate()
            .max_by_key(|(_, &c)| c)
            .map(|(i, _)| i)
            .expect("nonempty caps");
        if caps[largest] <= 1 {
            break;
        }
        caps[largest] /= 2;
    }
    caps
}

fn space_size(dom: &[Val], cod: &[Val]) -> Option<u128> {
    if dom.is_empty() {
        return Some(1);
    }
    (cod.len() as u128).checked_pow(dom.len() as u32)
}

/// Enumerate several function spaces under the shared budget; returns the
/// domains (as table values) and whether everything was exhaustive.
fn fn_domains(
    spaces: &[(&str, &[Val], &[Val])],
    bounds: &Bounds,
) -> Result<(Vec<(String, Vec<Val>)>, FnMode), Error> {
    let sizes: Vec<Option<u128>> = spaces.iter().map(|(_, d, c)| space_size(d, c)).collect();
    let caps = fn_caps(&sizes, bounds.max_fn_enum);
    let mut mode = FnMode::Exhaustive;
    let mut out = Vec::new();
    for ((name, dom, cod), cap) in spaces.iter().zip(caps) {
        if !function_space_exhaustive(dom, cod, cap) {
            mode = FnMode::Sampled;
        }
        let tables = enumerate_functions_capped(dom, cod, bounds, cap)?;
        out.push((name.to_string(), tables.into_iter().map(Val::Table).collect()));
    }
    Ok((out, mode))
}

fn expect_ok<T>(r: Result<T, Error>, what: &str) -> T {
    match r {
        Ok(v) => v,
        Err(e) => panic!("{what} failed on enumerated input: {e}"),
    }
}

// ---------------------------------------------------------------------------
// Monad and functor laws
// ---------------------------------------------------------------------------

/// MONAD_{LEFT_UNIT, RIGHT_UNIT, ASSOC} and FUNCTOR_{ID, COMP} for one monad,
/// quantified over enumerated carriers and enumerated/sampled tables.
pub fn check_monad_laws(
    m: &Monad,
    a: &Universe,
    bounds: &Bounds,
    cfg: &RunConfig,
) -> Result<Vec<LawReport>, Error> {
    let subject = format!("monad={}; universe={}", m.name, a.name);
    let carrier = m.carrier(&a.values, bounds);
    let mut reports = Vec::new();

    // FUNCTOR_ID
    let id_table = FnTable::identity(&a.values, &a.name);
    reports.push(run_law(
        cfg,
        LawId::FunctorId,
        subject.clone(),
        "fmap id",
        "id",
        None,
        vec![("ma".into(), carrier.clone())],
        |t| (expect_ok(m.fmap(&id_table, &t[0]), "fmap"), t[0].clone()),
    ));

    // FUNCTOR_COMP over plain tables f, g : A -> A
    let (fn_doms, mode) = fn_domains(
        &[("f", &a.values, &a.values), ("g", &a.values, &a.values)],
        bounds,
    )?;
    let mut domains = vec![("ma".to_string(), carrier.clone())];
    domains.extend(fn_doms);
    reports.push(run_law(
        cfg,
        LawId::FunctorComp,
        subject.clone(),
        "fmap g ∘ fmap f",
        "fmap (g ∘ f)",
        Some(mode),
        domains,
        |t| {
            let (ma, f, g) = (&t[0], t[1].as_table(), t[2].as_table());
            let lhs = expect_ok(
                m.fmap(g, &expect_ok(m.fmap(f, ma), "fmap f")),
                "fmap g",
            );
            let gf = FnTable::new(
                f.domain.clone(),
                "",
                f.entries
                    .iter()
                    .map(|v| expect_ok(g.apply(v), "g").clone())
                    .collect(),
            );
            (lhs, expect_ok(m.fmap(&gf, ma), "fmap gf"))
        },
    ));

    // Kleisli tables A -> MA (the same universe plays B and C)
    let (kleisli_doms, kmode) = fn_domains(
        &[("f", &a.values, &carrier), ("g", &a.values, &carrier)],
        bounds,
    )?;
    let f_dom = kleisli_doms[0].clone();
    let g_dom = kleisli_doms[1].clone();

    // MONAD_LEFT_UNIT: bind(unit a, f) = f(a)
    reports.push(run_law(
        cfg,
        LawId::MonadLeftUnit,
        subject.clone(),
        "f# ∘ η",
        "f",
        Some(kmode),
        vec![("a".into(), a.values.clone()), f_dom.clone()],
        |t| {
            let (x, f) = (&t[0], t[1].as_table());
            (
                expect_ok(m.bind(&m.unit(x), f), "bind"),
                expect_ok(f.apply(x), "f").clone(),
            )
        },
    ));

    // MONAD_RIGHT_UNIT: bind(ma, unit) = ma
    let unit_table = m.unit_table(&a.values);
    reports.push(run_law(
        cfg,
        LawId::MonadRightUnit,
        subject.clone(),
        "η# ",
        "id",
        None,
        vec![("ma".into(), carrier.clone())],
        |t| (expect_ok(m.bind(&t[0], &unit_table), "bind"), t[0].clone()),
    ));

    // MONAD_ASSOC
    reports.push(run_law(
        cfg,
        LawId::MonadAssoc,
        subject,
        "g# ∘ f#",
        "(g# ∘ f)#",
        Some(kmode),
        vec![("ma".into(), carrier), f_dom, g_dom],
        |t| {
            let (ma, f, g) = (&t[0], t[1].as_table(), t[2].as_table());
            let lhs = expect_ok(
                m.bind(&expect_ok(m.bind(ma, f), "bind f"), g),
                "bind g",
            );
            let fg = expect_ok(m.kleisli_compose(f, g), "kleisli_compose");
            (lhs, expect_ok(m.bind(ma, &fg), "bind fg"))
        },
    ));

    Ok(reports)
}

// ---------------------------------------------------------------------------
// Strength laws
// ---------------------------------------------------------------------------

fn strength_subject(g: &Strength, universes: &[Universe]) -> String {
    let names: Vec<&str> = universes.iter().map(|u| u.name.as_str()).collect();
    format!(
        "monad={}; strength={}; order={}; universes={}",
        g.monad.name,
        g.name,
        g.order,
        names.join(",")
    )
}

fn require_arity(g: &Strength, universes: &[Universe]) -> Result<(), Error> {
    if universes.len() != g.order {
        return Err(Error::Arity {
            name: g.name.clone(),
            expected: g.order,
            got: universes.len(),
        });
    }
    Ok(())
}

/// Naturality of Γ in every component, over endofunction tables fᵢ : Vᵢ → Vᵢ.
pub fn check_prestrength_naturality(
    g: &Strength,
    universes: &[Universe],
    bounds: &Bounds,
    cfg: &RunConfig,
) -> Result<LawReport, Error> {
    require_arity(g, universes)?;
    let m = &g.monad;
    let n = g.order;
    let mut domains: Vec<(String, Vec<Val>)> = Vec::new();
    for (i, u) in universes.iter().enumerate() {
        domains.push((format!("m{}", i + 1), m.carrier(&u.values, bounds)));
    }
    let spaces: Vec<(String, &[Val], &[Val])> = universes
        .iter()
        .enumerate()
        .map(|(i, u)| (format!("f{}", i + 1), u.values.as_slice(), u.values.as_slice()))
        .collect();
    let space_refs: Vec<(&str, &[Val], &[Val])> =
        spaces.iter().map(|(n, d, c)| (n.as_str(), *d, *c)).collect();
    let (fn_doms, mode) = fn_domains(&space_refs, bounds)?;
    domains.extend(fn_doms);

    Ok(run_law(
        cfg,
        LawId::PrestrengthNaturality,
        strength_subject(g, universes),
        "Γ ∘ (Kf₁ × ⋯ × Kfₙ)",
        "K(f₁ × ⋯ × fₙ) ∘ Γ",
        Some(mode),
        domains,
        move |t| {
            let args = &t[..n];
            let tables: Vec<&FnTable> = t[n..].iter().map(|v| v.as_table()).collect();
            let mapped: Vec<Val> = args
                .iter()
                .zip(&tables)
                .map(|(ma, f)| expect_ok(m.fmap(f, ma), "fmap"))
                .collect();
            let lhs = expect_ok(g.apply(&mapped), "Γ");
            let inner = expect_ok(g.apply(args), "Γ");
            let rhs = expect_ok(
                m.fmap_res(
                    &|prod| {
                        let comps = product_components(prod, n)?;
                        let mapped: Result<Vec<Val>, Error> = comps
                            .iter()
                            .zip(&tables)
                            .map(|(v, f)| Ok(f.apply(v)?.clone()))
                            .collect();
                        Ok(product_val(&mapped?))
                    },
                    &inner,
                ),
                "fmap (f₁ × ⋯ × fₙ)",
            );
            (lhs, rhs)
        },
    ))
}

/// (Γⁿ A): Γ(ρ v₁, …, ρ vₙ) = ρ(v₁, …, vₙ).
pub fn check_gamma_a(
    g: &Strength,
    universes: &[Universe],
    bounds: &Bounds,
    cfg: &RunConfig,
) -> Result<LawReport, Error> {
    require_arity(g, universes)?;
    let _ = bounds;
    let m = &g.monad;
    let n = g.order;
    let domains: Vec<(String, Vec<Val>)> = universes
        .iter()
        .enumerate()
        .map(|(i, u)| (format!("v{}", i + 1), u.values.clone()))
        .collect();
    Ok(run_law(
        cfg,
        LawId::GammaA,
        strength_subject(g, universes),
        "Γⁿ ∘ (ρ × ⋯ × ρ)",
        "ρ",
        None,
        domains,
        move |t| {
            let units: Vec<Val> = t.iter().map(|v| m.unit(v)).collect();
            (
                expect_ok(g.apply(&units), "Γ"),
                m.unit(&product_val(&t[..n])),
            )
        },
    ))
}

/// (Γⁿ B): Γ ∘ (ν × ⋯ × ν) = ν ∘ KΓ ∘ Γ_K over nested carriers.
pub fn check_gamma_b(
    g: &Strength,
    universes: &[Universe],
    bounds: &Bounds,
    cfg: &RunConfig,
) -> Result<LawReport, Error> {
    require_arity(g, universes)?;
    let m = &g.monad;
    let n = g.order;
    let mut domains = Vec::new();
    for (i, u) in universes.iter().enumerate() {
        domains.push((format!("u{}", i + 1), m.carrier_nested(&u.values, bounds, 2)?));
    }
    let rhs_path = format!("Γ ∘ ({})", vec!["ν"; n.max(1)].join("×"));
    Ok(run_law(
        cfg,
        LawId::GammaB,
        strength_subject(g, universes),
        "ν ∘ KΓ ∘ Γ_K",
        &rhs_path,
        None,
        domains,
        move |t| {
            let at_kv = expect_ok(g.apply(t), "Γ_K");
            let pushed = expect_ok(
                m.fmap_res(&|inner| g.apply(&product_components(inner, n)?), &at_kv),
                "KΓ",
            );
            let lhs = expect_ok(m.join(&pushed), "ν");
            let joined: Vec<Val> =
                t.iter().map(|u| expect_ok(m.join(u), "ν component")).collect();
            let rhs = expect_ok(g.apply(&joined), "Γ");
            (lhs, rhs)
        },
    ))
}

/// Naturality + (Γⁿ A) + (Γⁿ B); for order 1 this is exactly the monad-map
/// check.
pub fn check_kleisli_strength(
    g: &Strength,
    universes: &[Universe],
    bounds: &Bounds,
    cfg: &RunConfig,
) -> Result<Vec<LawReport>, Error> {
    Ok(vec![
        check_prestrength_naturality(g, universes, bounds, cfg)?,
        check_gamma_a(g, universes, bounds, cfg)?,
        check_gamma_b(g, universes, bounds, cfg)?,
    ])
}

/// Γ ∘ (Γ × 1) = Γ ∘ (1 × Γ) at order 3 (after flattening).
pub fn check_gamma_assoc(
    g: &Strength,
    universes: &[Universe],
    bounds: &Bounds,
    cfg: &RunConfig,
) -> Result<LawReport, Error> {
    if g.order != 2 {
        return Err(Error::Arity { name: g.name.clone(), expected: 2, got: g.order });
    }
    if universes.len() != 3 {
        return Err(Error::Arity { name: "check_gamma_assoc".into(), expected: 3, got: universes.len() });
    }
    let m = &g.monad;
    let left = extend_gamma(g, 3, Nesting::Left)?;
    let right = extend_gamma(g, 3, Nesting::Right)?;
    let domains: Vec<(String, Vec<Val>)> = universes
        .iter()
        .enumerate()
        .map(|(i, u)| (format!("m{}", i + 1), m.carrier(&u.values, bounds)))
        .collect();
    Ok(run_law(
        cfg,
        LawId::GammaAssoc,
        strength_subject(g, universes),
        "Γ ∘ (Γ × 1)",
        "Γ ∘ (1 × Γ)",
        None,
        domains,
        move |t| {
            (
                expect_ok(left.apply(t), "Γ∘(Γ×1)"),
                expect_ok(right.apply(t), "Γ∘(1×Γ)"),
            )
        },
    ))
}

// ---------------------------------------------------------------------------
// Lemma: rst and lst are Kleisli lifting transformations
// ---------------------------------------------------------------------------

/// RST_LIFT_1 and RST_LIFT_2 for rst, and their lst mirrors.
pub fn check_rst_lift(
    m: &Monad,
    a: &Universe,
    b: &Universe,
    bounds: &Bounds,
    cfg: &RunConfig,
) -> Result<Vec<LawReport>, Error> {
    let subject = |side: &str| {
        format!("monad={}; side={side}; universes={},{}", m.name, a.name, b.name)
    };
    let mmb = m.carrier_nested(&b.values, bounds, 2)?;
    let mma = m.carrier_nested(&a.values, bounds, 2)?;
    let mut reports = Vec::new();

    reports.push(run_law(
        cfg,
        LawId::RstLift1,
        subject("rst"),
        "rst ∘ (1 × η)",
        "η",
        None,
        vec![("a".into(), a.values.clone()), ("b".into(), b.values.clone())],
        |t| {
            (
                rst(m, &t[0], &m.unit(&t[1])),
                m.unit(&Val::tuple(vec![t[0].clone(), t[1].clone()])),
            )
        },
    ));

    reports.push(run_law(
        cfg,
        LawId::RstLift2,
        subject("rst"),
        "μ ∘ M(rst) ∘ rst",
        "rst ∘ (1 × μ)",
        None,
        vec![("a".into(), a.values.clone()), ("mmb".into(), mmb)],
        |t| {
            let staged = rst(m, &t[0], &t[1]);
            let pushed = expect_ok(
                m.fmap_res(
                    &|pair| {
                        let comps = product_components(pair, 2)?;
                        Ok(rst(m, &comps[0], &comps[1]))
                    },
                    &staged,
                ),
                "M(rst)",
            );
            let lhs = expect_ok(m.join(&pushed), "μ");
            let rhs = rst(m, &t[0], &expect_ok(m.join(&t[1]), "μ"));
            (lhs, rhs)
        },
    ));

    reports.push(run_law(
        cfg,
        LawId::RstLift1,
        subject("lst"),
        "lst ∘ (η × 1)",
        "η",
        None,
        vec![("a".into(), a.values.clone()), ("b".into(), b.values.clone())],
        |t| {
            (
                lst(m, &m.unit(&t[0]), &t[1]),
                m.unit(&Val::tuple(vec![t[0].clone(), t[1].clone()])),
            )
        },
    ));

    reports.push(run_law(
        cfg,
        LawId::RstLift2,
        subject("lst"),
        "μ ∘ M(lst) ∘ lst",
        "lst ∘ (μ × 1)",
        None,
        vec![("mma".into(), mma), ("b".into(), b.values.clone())],
        |t| {
            let staged = lst(m, &t[0], &t[1]);
            let pushed = expect_ok(
                m.fmap_res(
                    &|pair| {
                        let comps = product_components(pair, 2)?;
                        Ok(lst(m, &comps[0], &comps[1]))
                    },
                    &staged,
                ),
                "M(lst)",
            );
            let lhs = expect_ok(m.join(&pushed), "μ");
            let rhs = lst(m, &expect_ok(m.join(&t[0]), "μ"), &t[1]);
            (lhs, rhs)
        },
    ));

    Ok(reports)
}

/// Commutativity: lstΓ = rstΓ pointwise.
pub fn check_commutative(
    m: &Monad,
    a: &Universe,
    b: &Universe,
    bounds: &Bounds,
    cfg: &RunConfig,
) -> Result<LawReport, Error> {
    let domains = vec![
        ("ma".to_string(), m.carrier(&a.values, bounds)),
        ("mb".to_string(), m.carrier(&b.values, bounds)),
    ];
    Ok(run_law(
        cfg,
        LawId::Commutative,
        format!("monad={}; universes={},{}", m.name, a.name, b.name),
        "lstΓ = rst# ∘ lst",
        "rstΓ = lst# ∘ rst",
        None,
        domains,
        |t| {
            (
                expect_ok(lst_gamma(m, &t[0], &t[1]), "lstΓ"),
                expect_ok(rst_gamma(m, &t[0], &t[1]), "rstΓ"),
            )
        },
    ))
}

/// Product coherence in the Kleisli category: ⟨f′∘f, g′∘g⟩ = (f′×g′)∘⟨f,g⟩
/// with pairing interpreted through Γ, over sampled Kleisli tables
/// f : A→MB, g : A→MC, f′ : B→MB′, g′ : C→MC′.
pub fn check_product_coherence(
    g: &Strength,
    universes: &[Universe; 5],
    bounds: &Bounds,
    cfg: &RunConfig,
) -> Result<LawReport, Error> {
    if g.order != 2 {
        return Err(Error::Arity { name: g.name.clone(), expected: 2, got: g.order });
    }
    let m = &g.monad;
    let [a, b, c, b2, c2] = universes;
    let mb = m.carrier(&b.values, bounds);
    let mc = m.carrier(&c.values, bounds);
    let mb2 = m.carrier(&b2.values, bounds);
    let mc2 = m.carrier(&c2.values, bounds);
    let (fn_doms, mode) = fn_domains(
        &[
            ("f", &a.values, &mb),
            ("g", &a.values, &mc),
            ("f'", &b.values, &mb2),
            ("g'", &c.values, &mc2),
        ],
        bounds,
    )?;
    let mut domains = vec![("a".to_string(), a.values.clone())];
    domains.extend(fn_doms);
    Ok(run_law(
        cfg,
        LawId::ProductCoherence,
        format!(
            "monad={}; strength={}; universes={},{},{},{},{}",
            m.name, g.name, a.name, b.name, c.name, b2.name, c2.name
        ),
        "Γ ∘ ⟨f′#∘f, g′#∘g⟩",
        "(Γ∘(f′×g′))# ∘ Γ ∘ ⟨f,g⟩",
        Some(mode),
        domains,
        move |t| {
            let x = &t[0];
            let (f, gg, f2, g2) =
                (t[1].as_table(), t[2].as_table(), t[3].as_table(), t[4].as_table());
            let fa = expect_ok(f.apply(x), "f").clone();
            let ga = expect_ok(gg.apply(x), "g").clone();
            let comp1 = expect_ok(
                g.apply(&[
                    expect_ok(m.bind(&fa, f2), "f′# ∘ f"),
                    expect_ok(m.bind(&ga, g2), "g′# ∘ g"),
                ]),
                "Γ comp1",
            );
            let paired = expect_ok(g.apply(&[fa, ga]), "Γ ⟨f,g⟩");
            let comp2 = expect_ok(
                m.bind_res(&paired, &|prod| {
                    let comps = product_components(prod, 2)?;
                    g.apply(&[f2.apply(&comps[0])?.clone(), g2.apply(&comps[1])?.clone()])
                }),
                "comp2",
            );
            (comp1, comp2)
        },
    ))
}

// ---------------------------------------------------------------------------
// Lifting transformations for a closed set of functors
// ---------------------------------------------------------------------------

/// The functors F for which lifting transformations λ : FH → KF can be
/// checked.
#[derive(Debug, Clone)]
pub enum FunctorDesc {
    Identity,
    ProductN(usize),
    ListF,
    FreeF(SignatureSpec),
}

impl FunctorDesc {
    pub fn name(&self) -> String {
        match self {
            FunctorDesc::Identity => "identity".into(),
            FunctorDesc::ProductN(n) => format!("product_{n}"),
            FunctorDesc::ListF => "list".into(),
            FunctorDesc::FreeF(sig) => format!("free_{}", sig.name),
        }
    }

    fn enumerate(&self, base: &[Val], bounds: &Bounds) -> Vec<Val> {
        let mut sorted = base.to_vec();
        sorted.sort();
        match self {
            FunctorDesc::Identity => sorted,
            FunctorDesc::ProductN(n) => {
                let mut tuples: Vec<Vec<Val>> = vec![vec![]];
                for _ in 0..*n {
                    let mut grown = Vec::new();
                    for t in &tuples {
                        for v in &sorted {
                            let mut t = t.clone();
                            t.push(v.clone());
                            grown.push(t);
                        }
                    }
                    tuples = grown;
                }
                tuples.iter().map(|t| product_val(t)).collect()
            }
            FunctorDesc::ListF => lists_up_to(&sorted, bounds.max_list_len)
                .into_iter()
                .map(Val::List)
                .collect(),
            FunctorDesc::FreeF(sig) => {
                signature::enumerate_terms(sig, &sorted, bounds.max_tree_depth)
            }
        }
    }

    fn fmap_res(
        &self,
        f: &dyn Fn(&Val) -> Result<Val, Error>,
        v: &Val,
    ) -> Result<Val, Error> {
        match self {
            FunctorDesc::Identity => f(v),
            FunctorDesc::ProductN(n) => {
                let comps = product_components(v, *n)?;
                let mapped: Result<Vec<Val>, Error> = comps.iter().map(f).collect();
                Ok(product_val(&mapped?))
            }
            FunctorDesc::ListF => {
                let items: Result<Vec<Val>, Error> = v.as_list().iter().map(f).collect();
                Ok(Val::List(items?))
            }
            FunctorDesc::FreeF(_) => signature::term_fmap_res(f, v),
        }
    }
}

type LiftFn = std::sync::Arc<dyn Fn(&Val) -> Result<Val, Error> + Send + Sync>;

/// A lifting-transformation candidate λ : FH → KF, given as a computable map
/// on enumerated FH-values.
#[derive(Clone)]
pub struct LiftTransform {
    pub name: String,
    apply: LiftFn,
}

impl LiftTransform {
    pub fn new(
        name: impl Into<String>,
        f: impl Fn(&Val) -> Result<Val, Error> + Send + Sync + 'static,
    ) -> LiftTransform {
        LiftTransform { name: name.into(), apply: std::sync::Arc::new(f) }
    }

    /// A strength as the lifting transformation for ×ₙ (or, at order 1, for
    /// the identity functor).
    pub fn from_strength(g: Strength) -> LiftTransform {
        let order = g.order;
        LiftTransform::new(g.name.clone(), move |fh| {
            g.apply(&product_components(fh, order)?)
        })
    }

    /// `sequence` over K as the candidate for the list functor.
    pub fn sequence_over(k: Monad) -> LiftTransform {
        LiftTransform::new(format!("sequence_over_{}", k.name), move |fh| {
            sequence(&k, fh.as_list())
        })
    }

    pub fn apply(&self, fh: &Val) -> Result<Val, Error> {
        (self.apply)(fh)
    }
}

/// (F̄C): λ ∘ Fη = ρF and (F̄D): λ ∘ Fμ = νF ∘ Kλ ∘ λH.
pub fn check_lift_transformation(
    f: &FunctorDesc,
    h: &Monad,
    k: &Monad,
    lam: &LiftTransform,
    a: &Universe,
    bounds: &Bounds,
    cfg: &RunConfig,
) -> Result<Vec<LawReport>, Error> {
    let subject = format!(
        "functor={}; H={}; K={}; lambda={}; universe={}",
        f.name(),
        h.name,
        k.name,
        lam.name,
        a.name
    );
    let mut reports = Vec::new();

    let fa = f.enumerate(&a.values, bounds);
    reports.push(run_law(
        cfg,
        LawId::LiftC,
        subject.clone(),
        "λ ∘ Fη",
        "ρF",
        None,
        vec![("fv".into(), fa)],
        |t| {
            let staged = expect_ok(f.fmap_res(&|v| Ok(h.unit(v)), &t[0]), "Fη");
            (expect_ok(lam.apply(&staged), "λ"), k.unit(&t[0]))
        },
    ));

    let hha = h.carrier_nested(&a.values, bounds, 2)?;
    let fhha = f.enumerate(&hha, bounds);
    reports.push(run_law(
        cfg,
        LawId::LiftD,
        subject,
        "λ ∘ Fμ",
        "νF ∘ Kλ ∘ λH",
        None,
        vec![("fhh".into(), fhha)],
        |t| {
            let joined = expect_ok(f.fmap_res(&|hh| h.join(hh), &t[0]), "Fμ");
            let lhs = expect_ok(lam.apply(&joined), "λ");
            let staged = expect_ok(lam.apply(&t[0]), "λH");
            let pushed =
                expect_ok(k.fmap_res(&|fha| lam.apply(fha), &staged), "Kλ");
            let rhs = expect_ok(k.join(&pushed), "νF");
            (lhs, rhs)
        },
    ));

    Ok(reports)
}

/// MAP_LIFT_FUNCTORIAL: sequence ∘ map preserves Kleisli composition.
pub fn check_map_lift(
    k: &Monad,
    a: &Universe,
    b: &Universe,
    c: &Universe,
    bounds: &Bounds,
    cfg: &RunConfig,
) -> Result<LawReport, Error> {
    let lists: Vec<Val> = lists_up_to(&{
        let mut s = a.values.clone();
        s.sort();
        s
    }, bounds.max_list_len)
    .into_iter()
    .map(Val::List)
    .collect();
    let kb = k.carrier(&b.values, bounds);
    let kc = k.carrier(&c.values, bounds);
    let (fn_doms, mode) =
        fn_domains(&[("f", &a.values, &kb), ("g", &b.values, &kc)], bounds)?;
    let mut domains = vec![("l".to_string(), lists)];
    domains.extend(fn_doms);
    Ok(run_law(
        cfg,
        LawId::MapLiftFunctorial,
        format!("monad={}; universes={},{},{}", k.name, a.name, b.name, c.name),
        "seq ∘ L(g ∘# f)",
        "(seq ∘ Lg)# ∘ (seq ∘ Lf)",
        Some(mode),
        domains,
        |t| {
            let (l, f, g) = (t[0].as_list(), t[1].as_table(), t[2].as_table());
            let fg = expect_ok(k.kleisli_compose(f, g), "g ∘# f");
            let mapped: Vec<Val> =
                l.iter().map(|x| expect_ok(fg.apply(x), "g∘#f").clone()).collect();
            let lhs = expect_ok(sequence(k, &mapped), "seq");
            let f_mapped: Vec<Val> =
                l.iter().map(|x| expect_ok(f.apply(x), "f").clone()).collect();
            let f_bar = expect_ok(sequence(k, &f_mapped), "seq ∘ Lf");
            let rhs = expect_ok(
                k.bind_res(&f_bar, &|lb| {
                    let g_mapped: Result<Vec<Val>, Error> =
                        lb.as_list().iter().map(|y| Ok(g.apply(y)?.clone())).collect();
                    sequence(k, &g_mapped?)
                }),
                "(seq ∘ Lg)#",
            );
            (lhs, rhs)
        },
    ))
}

// ---------------------------------------------------------------------------
// Distributive laws
// ---------------------------------------------------------------------------

/// Naturality of λ plus DL A–D, quantified over the relevant nested carriers.
pub fn check_distributive_law(
    dl: &DistLaw,
    a: &Universe,
    bounds: &Bounds,
    cfg: &RunConfig,
) -> Result<Vec<LawReport>, Error> {
    let h = &dl.outer;
    let k = &dl.inner;
    let subject = format!("distlaw={}; universe={}", dl.name, a.name);
    let mut reports = Vec::new();

    let ka = k.carrier(&a.values, bounds);
    let hka = h.carrier(&ka, bounds);

    // naturality: λ ∘ HKf = KHf ∘ λ
    let (fn_doms, mode) = fn_domains(&[("f", &a.values, &a.values)], bounds)?;
    let mut domains = vec![("hk".to_string(), hka.clone())];
    domains.extend(fn_doms);
    reports.push(run_law(
        cfg,
        LawId::PrestrengthNaturality,
        subject.clone(),
        "λ ∘ HKf",
        "KHf ∘ λ",
        Some(mode),
        domains,
        |t| {
            let (hk, f) = (&t[0], t[1].as_table());
            let staged = expect_ok(
                h.fmap_res(&|kv| k.fmap_res(&|v| Ok(f.apply(v)?.clone()), kv), hk),
                "HKf",
            );
            let lhs = expect_ok(dl.apply(&staged), "λ");
            let lam = expect_ok(dl.apply(hk), "λ");
            let rhs = expect_ok(
                k.fmap_res(&|hv| h.fmap_res(&|v| Ok(f.apply(v)?.clone()), hv), &lam),
                "KHf",
            );
            (lhs, rhs)
        },
    ));

    // DL_A: λ ∘ Hρ = ρH
    let ha = h.carrier(&a.values, bounds);
    reports.push(run_law(
        cfg,
        LawId::DlA,
        subject.clone(),
        "λ ∘ Hρ",
        "ρH",
        None,
        vec![("h".into(), ha)],
        |t| {
            let staged = expect_ok(h.fmap_res(&|v| Ok(k.unit(v)), &t[0]), "Hρ");
            (expect_ok(dl.apply(&staged), "λ"), k.unit(&t[0]))
        },
    ));

    // DL_B: λ ∘ Hν = νH ∘ Kλ ∘ λK
    let kka = k.carrier_nested(&a.values, bounds, 2)?;
    let hkka = h.carrier(&kka, bounds);
    reports.push(run_law(
        cfg,
        LawId::DlB,
        subject.clone(),
        "λ ∘ Hν",
        "νH ∘ Kλ ∘ λK",
        None,
        vec![("hkk".into(), hkka)],
        |t| {
            let joined = expect_ok(h.fmap_res(&|kk| k.join(kk), &t[0]), "Hν");
            let lhs = expect_ok(dl.apply(&joined), "λ");
            let staged = expect_ok(dl.apply(&t[0]), "λK");
            let pushed = expect_ok(k.fmap_res(&|hk| dl.apply(hk), &staged), "Kλ");
            let rhs = expect_ok(k.join(&pushed), "νH");
            (lhs, rhs)
        },
    ));

    // DL_C: λ ∘ ηK = Kη
    reports.push(run_law(
        cfg,
        LawId::DlC,
        subject.clone(),
        "λ ∘ ηK",
        "Kη",
        None,
        vec![("kv".into(), ka.clone())],
        |t| {
            let lhs = expect_ok(dl.apply(&h.unit(&t[0])), "λ ∘ ηK");
            let rhs = k.fmap_with(|v| h.unit(v), &t[0]);
            (lhs, rhs)
        },
    ));

    // DL_D: λ ∘ μK = Kμ ∘ λH ∘ Hλ
    let hhka = h.carrier_nested(&ka, bounds, 2)?;
    reports.push(run_law(
        cfg,
        LawId::DlD,
        subject,
        "λ ∘ μK",
        "Kμ ∘ λH ∘ Hλ",
        None,
        vec![("hhk".into(), hhka)],
        |t| {
            let lhs = expect_ok(
                dl.apply(&expect_ok(h.join(&t[0]), "μK")),
                "λ ∘ μK",
            );
            let staged = expect_ok(h.fmap_res(&|hk| dl.apply(hk), &t[0]), "Hλ");
            let lifted = expect_ok(dl.apply(&staged), "λH");
            let rhs = expect_ok(k.fmap_res(&|hh| h.join(hh), &lifted), "Kμ");
            (lhs, rhs)
        },
    ));

    Ok(reports)
}

// ---------------------------------------------------------------------------
// Reconstruction and the equivalence audit
// ---------------------------------------------------------------------------

/// RECONSTRUCT: both composites of the lΓ/rΓ decomposition equal Γ pointwise.
pub fn check_reconstruct(
    g: &Strength,
    a: &Universe,
    b: &Universe,
    bounds: &Bounds,
    cfg: &RunConfig,
) -> Result<Vec<LawReport>, Error> {
    if g.order != 2 {
        return Err(Error::Arity { name: g.name.clone(), expected: 2, got: g.order });
    }
    let m = &g.monad;
    let domains = vec![
        ("ma".to_string(), m.carrier(&a.values, bounds)),
        ("mb".to_string(), m.carrier(&b.values, bounds)),
    ];
    let subject = |route: &str| {
        format!(
            "monad={}; strength={}; route={route}; universes={},{}",
            m.name, g.name, a.name, b.name
        )
    };
    Ok(vec![
        run_law(
            cfg,
            LawId::Reconstruct,
            subject("rΓ#∘lΓ"),
            "(rΓ_AB)# ∘ lΓ_{A,KB}",
            "Γ",
            None,
            domains.clone(),
            |t| {
                let (c1, _) = expect_ok(reconstruct_gamma(g, &t[0], &t[1]), "reconstruct");
                (c1, expect_ok(g.apply(&[t[0].clone(), t[1].clone()]), "Γ"))
            },
        ),
        run_law(
            cfg,
            LawId::Reconstruct,
            subject("lΓ#∘rΓ"),
            "(lΓ_AB)# ∘ rΓ_{KA,B}",
            "Γ",
            None,
            domains,
            |t| {
                let (_, c2) = expect_ok(reconstruct_gamma(g, &t[0], &t[1]), "reconstruct");
                (c2, expect_ok(g.apply(&[t[0].clone(), t[1].clone()]), "Γ"))
            },
        ),
    ])
}

/// The two sides of the commutativity theorem, with the verdict that they
/// agree (both PASS or both FAIL) at the given bounds.
#[derive(Debug, Clone)]
pub struct AuditResult {
    pub commutative: LawReport,
    pub lst_gamma_kleisli: Vec<LawReport>,
    pub agree: bool,
}

/// Theorem audit: lstΓ is a Kleisli strength iff the monad is commutative.
pub fn equivalence_audit(
    m: &Monad,
    a: &Universe,
    b: &Universe,
    bounds: &Bounds,
    cfg: &RunConfig,
) -> Result<AuditResult, Error> {
    let commutative = check_commutative(m, a, b, bounds, cfg)?;
    let derived = Strength::derived_left(m.clone());
    let kleisli =
        check_kleisli_strength(&derived, &[a.clone(), b.clone()], bounds, cfg)?;
    let commutative_pass = commutative.passed();
    let kleisli_pass = kleisli.iter().all(|r| r.passed());
    Ok(AuditResult {
        commutative,
        lst_gamma_kleisli: kleisli,
        agree: commutative_pass == kleisli_pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::Atom;

    fn cfg() -> RunConfig {
        RunConfig::default()
    }

    fn u_a() -> Universe {
        Universe::of_syms("A", ["a0", "a1"])
    }
    fn u_b() -> Universe {
        Universe::of_syms("B", ["b0", "b1"])
    }

    #[test]
    fn vacuous_on_empty_domain() {
        let m = Monad::nonempty_list();
        let empty = Universe::new("Void", vec![]).unwrap();
        let r = check_commutative(&m, &empty, &u_b(), &Bounds::default(), &cfg()).unwrap();
        assert_eq!(r.status, Status::Vacuous);
        assert_eq!(r.cases_checked, 0);
    }

    #[test]
    fn list_monad_laws_pass() {
        let reports =
            check_monad_laws(&Monad::list(), &u_a(), &Bounds::default(), &cfg()).unwrap();
        assert_eq!(reports.len(), 5);
        for r in &reports {
            assert_eq!(r.status, Status::Pass, "{} {:?}", r.law, r.witness);
            assert!(r.cases_checked > 0);
        }
    }

    #[test]
    fn tree_with_empty_constant_is_still_a_monad() {
        let one = Universe::of_syms("One", ["x"]);
        let reports =
            check_monad_laws(&Monad::tree(), &one, &Bounds::default(), &cfg()).unwrap();
        for r in &reports {
            assert_eq!(r.status, Status::Pass, "{} {:?}", r.law, r.witness);
        }
    }

    #[test]
    fn witness_is_minimal_under_full_scan() {
        // exceptions with two exception values is not commutative
        let exc2 = Universe::of_syms("Exc2", ["e1", "e2"]);
        let m = Monad::exceptions("exceptions2", exc2);
        let r = check_commutative(&m, &u_a(), &u_b(), &Bounds::default(), &cfg()).unwrap();
        assert_eq!(r.status, Status::Fail);
        let w = r.witness.expect("failing check carries a witness");
        assert_eq!(w.inputs[0].1, Val::exc(Val::sym("e1")));
        assert_eq!(w.inputs[1].1, Val::exc(Val::sym("e2")));
        assert_eq!(w.lhs, Val::exc(Val::sym("e1")));
        assert_eq!(w.rhs, Val::exc(Val::sym("e2")));

        // independent full scan: nothing strictly smaller fails
        let bounds = Bounds::default();
        let ka = m.carrier(&u_a().values, &bounds);
        let kb = m.carrier(&u_b().values, &bounds);
        for ma in &ka {
            for mb in &kb {
                let smaller = (ma, mb) < (&w.inputs[0].1, &w.inputs[1].1);
                if smaller {
                    assert_eq!(
                        lst_gamma(&m, ma, mb).unwrap(),
                        rst_gamma(&m, ma, mb).unwrap(),
                        "found a smaller failing tuple"
                    );
                }
            }
        }
    }

    #[test]
    fn parallel_and_serial_reports_agree() {
        let exc2 = Universe::of_syms("Exc2", ["e1", "e2"]);
        let m = Monad::exceptions("exceptions2", exc2);
        let serial =
            check_commutative(&m, &u_a(), &u_b(), &Bounds::default(), &cfg()).unwrap();
        let parallel = check_commutative(
            &m,
            &u_a(),
            &u_b(),
            &Bounds::default(),
            &RunConfig { parallel: true },
        )
        .unwrap();
        assert_eq!(serial, parallel);
    }

    #[test]
    fn gamma_b_rhs_path_matches_fixed_string() {
        let g = crate::strength::builtin_strength(
            "powerset_product",
            Monad::powerset(),
            None,
            None,
        )
        .unwrap();
        let r =
            check_gamma_b(&g, &[u_a(), u_b()], &Bounds::default(), &cfg()).unwrap();
        assert_eq!(r.status, Status::Pass);
        // the fixed composite names live on failing reports; force one
        let broken = Strength::custom(
            "broken",
            Monad::powerset(),
            2,
            crate::strength::StrengthKind::KleisliCandidate,
            |_, args| Ok(Val::set(vec![Val::tuple(vec![args[0].clone(), args[1].clone()])])),
        );
        let r = check_gamma_b(&broken, &[u_a(), u_b()], &Bounds::default(), &cfg()).unwrap();
        assert_eq!(r.status, Status::Fail);
        let w = r.witness.unwrap();
        assert_eq!(w.lhs_path, "ν ∘ KΓ ∘ Γ_K");
        assert_eq!(w.rhs_path, "Γ ∘ (ν×ν)");
    }

    #[test]
    fn identity_checks_at_order_one() {
        let g = crate::strength::builtin_strength("identity_order1", Monad::list(), None, None)
            .unwrap();
        let reports =
            check_kleisli_strength(&g, &[u_a()], &Bounds::default(), &cfg()).unwrap();
        assert!(reports.iter().all(|r| r.status == Status::Pass));
    }

    #[test]
    fn map_lift_fails_for_list() {
        let a = Universe::of_ints("A", [1, 3]);
        let b = Universe::of_ints("B", [1, 2]);
        let c = Universe::of_ints("C", [1, 2]);
        let r = check_map_lift(&Monad::list(), &a, &b, &c, &Bounds::default(), &cfg()).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert!(r.witness.is_some());
    }

    #[test]
    fn map_lift_passes_for_maybe_and_identity() {
        let a = Universe::of_ints("A", [1, 3]);
        let b = Universe::of_ints("B", [1, 2]);
        let c = Universe::of_ints("C", [1, 2]);
        for m in [Monad::maybe(), Monad::identity()] {
            let r = check_map_lift(&m, &a, &b, &c, &Bounds::default(), &cfg()).unwrap();
            assert_eq!(r.status, Status::Pass, "{}", m.name);
        }
    }

    #[test]
    fn fn_caps_budget() {
        assert_eq!(fn_caps(&[Some(16), Some(16)], 64), vec![16, 16]);
        assert_eq!(fn_caps(&[Some(1 << 20); 4], 64), vec![8, 8, 8, 8]);
        let caps = fn_caps(&[None, Some(4)], 64);
        assert_eq!(caps, vec![64, 4]);
    }

    #[test]
    fn int_atoms_sort_before_lists_in_witness_order() {
        // guard against accidental enum reordering breaking witness minimality
        assert!(Val::Atom(Atom::Int(7)) < Val::list(vec![]));
    }
}
