//! Spec documents: the declarations a run works against. Parsed from TOML
//! (diagnostics name the offending field), cross-references resolved, monoid
//! laws verified at load. A built-in default catalog covers the standard
//! monads, strengths, and signatures.

use anyhow::{anyhow, bail, Context, Result};
use serde::Deserialize;
use std::collections::BTreeSet;

use mlb_core::monad::{Monad, MonoidSpec};
use mlb_core::signature::SignatureSpec;
use mlb_core::strength::{builtin_strength, Strength};
use mlb_core::value::{Bounds, FnTable, Universe, Val};

use crate::terms::parse_term;

/// A declared strength: the registry name plus the builtin it instantiates,
/// kept so `--order` can re-instantiate order-parametric builtins.
#[derive(Debug, Clone)]
pub struct StrengthDecl {
    pub name: String,
    pub builtin: String,
    pub param: Option<Val>,
    pub strength: Strength,
}

#[derive(Debug, Clone)]
pub struct SpecDocument {
    pub bounds: Bounds,
    pub universes: Vec<Universe>,
    pub monoids: Vec<MonoidSpec>,
    pub monads: Vec<Monad>,
    pub strengths: Vec<StrengthDecl>,
    pub signatures: Vec<SignatureSpec>,
}

// Raw TOML shape.

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDoc {
    #[serde(default)]
    bounds: Option<RawBounds>,
    #[serde(default)]
    universes: Vec<RawUniverse>,
    #[serde(default)]
    monoids: Vec<RawMonoid>,
    #[serde(default)]
    monads: Vec<RawMonad>,
    #[serde(default)]
    strengths: Vec<RawStrength>,
    #[serde(default)]
    signatures: Vec<RawSignature>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBounds {
    #[serde(alias = "maxListLen")]
    max_list_len: Option<usize>,
    #[serde(alias = "maxTreeDepth")]
    max_tree_depth: Option<usize>,
    #[serde(alias = "maxFnEnum")]
    max_fn_enum: Option<usize>,
    #[serde(alias = "maxNestDepth")]
    max_nest_depth: Option<usize>,
    #[serde(alias = "sampleSeed")]
    seed: Option<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawUniverse {
    name: String,
    values: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMonoid {
    name: String,
    /// one of the built-in tables: z5_add, first_projection, nat_add_sat15
    builtin: Option<String>,
    values: Option<Vec<String>>,
    identity: Option<String>,
    commutative: Option<bool>,
    /// explicit triples [x, y, x*y]
    table: Option<Vec<[String; 3]>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMonad {
    name: String,
    kind: String,
    exceptions: Option<String>,
    inputs: Option<String>,
    states: Option<String>,
    monoid: Option<String>,
    signature: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStrength {
    name: String,
    builtin: String,
    monad: String,
    default: Option<String>,
    order: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSignature {
    name: String,
    ops: Vec<(String, usize)>,
}

impl SpecDocument {
    /// The built-in catalog.
    pub fn default_catalog() -> SpecDocument {
        SpecDocument::from_toml(include_str!("default_catalog.toml"))
            .expect("built-in catalog is valid")
    }

    pub fn from_file(path: &std::path::Path) -> Result<SpecDocument> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading spec file {}", path.display()))?;
        SpecDocument::from_toml(&text)
            .with_context(|| format!("loading spec file {}", path.display()))
    }

    pub fn from_toml(text: &str) -> Result<SpecDocument> {
        let raw: RawDoc = toml::from_str(text)?;
        let mut bounds = Bounds::default();
        if let Some(rb) = raw.bounds {
            if let Some(v) = rb.max_list_len {
                bounds.max_list_len = v;
            }
            if let Some(v) = rb.max_tree_depth {
                bounds.max_tree_depth = v;
            }
            if let Some(v) = rb.max_fn_enum {
                bounds.max_fn_enum = v;
            }
            if let Some(v) = rb.max_nest_depth {
                bounds.max_nest_depth = v;
            }
            if let Some(v) = rb.seed {
                bounds.sample_seed = v;
            }
        }
        bounds.validate().map_err(|e| anyhow!("bounds: {e}"))?;

        let mut universes = Vec::new();
        for ru in &raw.universes {
            let values: Result<Vec<Val>> = ru
                .values
                .iter()
                .map(|s| parse_term(s, None).with_context(|| format!("universes.{}.values", ru.name)))
                .collect();
            universes.push(
                Universe::new(ru.name.clone(), values?)
                    .map_err(|e| anyhow!("universes.{}: {e}", ru.name))?,
            );
        }
        check_distinct(universes.iter().map(|u| u.name.as_str()), "universe")?;

        let mut monoids = Vec::new();
        for rm in &raw.monoids {
            monoids.push(resolve_monoid(rm)?);
        }
        check_distinct(monoids.iter().map(|m| m.name.as_str()), "monoid")?;

        let mut signatures = Vec::new();
        for rs in &raw.signatures {
            signatures.push(
                SignatureSpec::new(rs.name.clone(), rs.ops.clone())
                    .map_err(|e| anyhow!("signatures.{}: {e}", rs.name))?,
            );
        }
        check_distinct(signatures.iter().map(|s| s.name.as_str()), "signature")?;

        let find_universe = |name: &str, field: &str| -> Result<Universe> {
            universes
                .iter()
                .find(|u| u.name == name)
                .cloned()
                .ok_or_else(|| anyhow!("{field}: undeclared universe {name}"))
        };

        let mut monads = Vec::new();
        for rm in &raw.monads {
            let field = format!("monads.{}", rm.name);
            let monad = match rm.kind.as_str() {
                "identity" => Monad { name: rm.name.clone(), ..Monad::identity() },
                "list" => Monad { name: rm.name.clone(), ..Monad::list() },
                "nonempty_list" => Monad { name: rm.name.clone(), ..Monad::nonempty_list() },
                "powerset" => Monad { name: rm.name.clone(), ..Monad::powerset() },
                "tree" => Monad { name: rm.name.clone(), ..Monad::tree() },
                "nonempty_tree" => Monad { name: rm.name.clone(), ..Monad::nonempty_tree() },
                "exceptions" => {
                    let exc = rm
                        .exceptions
                        .as_deref()
                        .ok_or_else(|| anyhow!("{field}: exceptions universe required"))?;
                    Monad::exceptions(rm.name.clone(), find_universe(exc, &field)?)
                }
                "reader" => {
                    let inputs = rm
                        .inputs
                        .as_deref()
                        .ok_or_else(|| anyhow!("{field}: inputs universe required"))?;
                    Monad::reader(rm.name.clone(), find_universe(inputs, &field)?)
                }
                "state" => {
                    let states = rm
                        .states
                        .as_deref()
                        .ok_or_else(|| anyhow!("{field}: states universe required"))?;
                    Monad::state(rm.name.clone(), find_universe(states, &field)?)
                }
                "writer" => {
                    let mname = rm
                        .monoid
                        .as_deref()
                        .ok_or_else(|| anyhow!("{field}: monoid required"))?;
                    let monoid = monoids
                        .iter()
                        .find(|m| m.name == mname)
                        .cloned()
                        .ok_or_else(|| anyhow!("{field}: undeclared monoid {mname}"))?;
                    Monad::writer(rm.name.clone(), monoid)
                }
                "free" => {
                    let sname = rm
                        .signature
                        .as_deref()
                        .ok_or_else(|| anyhow!("{field}: signature required"))?;
                    let sig = signatures
                        .iter()
                        .find(|s| s.name == sname)
                        .cloned()
                        .ok_or_else(|| anyhow!("{field}: undeclared signature {sname}"))?;
                    Monad { name: rm.name.clone(), ..Monad::free(sig) }
                }
                other => bail!("{field}: unknown monad kind {other}"),
            };
            monads.push(monad);
        }
        check_distinct(monads.iter().map(|m| m.name.as_str()), "monad")?;

        let mut strengths = Vec::new();
        for rs in &raw.strengths {
            let field = format!("strengths.{}", rs.name);
            let monad = monads
                .iter()
                .find(|m| m.name == rs.monad)
                .cloned()
                .ok_or_else(|| anyhow!("{field}: undeclared monad {}", rs.monad))?;
            let param = rs
                .default
                .as_deref()
                .map(|s| parse_term(s, None))
                .transpose()
                .with_context(|| field.clone())?;
            let strength = builtin_strength(&rs.builtin, monad, rs.order, param.clone())
                .map_err(|e| anyhow!("{field}: {e}"))?;
            strengths.push(StrengthDecl {
                name: rs.name.clone(),
                builtin: rs.builtin.clone(),
                param,
                strength,
            });
        }
        check_distinct(strengths.iter().map(|s| s.name.as_str()), "strength")?;

        Ok(SpecDocument { bounds, universes, monoids, monads, strengths, signatures })
    }

    pub fn monad(&self, name: &str) -> Result<&Monad> {
        self.monads
            .iter()
            .find(|m| m.name == name)
            .ok_or_else(|| anyhow!("unknown monad {name}; see `catalog`"))
    }

    pub fn signature(&self, name: &str) -> Result<&SignatureSpec> {
        self.signatures
            .iter()
            .find(|s| s.name == name)
            .ok_or_else(|| anyhow!("unknown signature {name}; see `catalog`"))
    }

    /// Resolve a strength for a monad; declared strengths first, then the
    /// generic derived/identity families. `order` re-instantiates
    /// order-parametric builtins.
    pub fn strength(&self, name: &str, monad: &Monad, order: Option<usize>) -> Result<Strength> {
        if let Some(decl) = self.strengths.iter().find(|s| s.name == name) {
            if decl.strength.monad.name != monad.name {
                bail!(
                    "strength {name} is declared for monad {}, not {}",
                    decl.strength.monad.name,
                    monad.name
                );
            }
            return match order {
                None => Ok(decl.strength.clone()),
                Some(n) if n == decl.strength.order => Ok(decl.strength.clone()),
                Some(n) => reinstantiate(&decl.builtin, monad, n, decl.param.clone()),
            };
        }
        // generic fallbacks available for every monad
        match name {
            "lst_gamma" | "rst_gamma" | "identity_order1" => {
                builtin_strength(name, monad.clone(), order, None)
                    .map_err(|e| anyhow!("{e}"))
            }
            _ => bail!("unknown strength {name} (declare it in the spec or see `catalog`)"),
        }
    }

    /// First `n` universes, the default quantification context.
    pub fn first_universes(&self, n: usize) -> Result<Vec<Universe>> {
        if self.universes.len() < n {
            bail!("this check needs {n} universes; the document declares {}", self.universes.len());
        }
        Ok(self.universes[..n].to_vec())
    }
}

fn reinstantiate(
    builtin: &str,
    monad: &Monad,
    order: usize,
    param: Option<Val>,
) -> Result<Strength> {
    match builtin_strength(builtin, monad.clone(), Some(order), param) {
        Ok(s) => Ok(s),
        Err(_) => {
            // order-2 builtins extend by left nesting
            let base = builtin_strength(builtin, monad.clone(), None, None)
                .map_err(|e| anyhow!("{e}"))?;
            mlb_core::strength::extend_gamma(&base, order, mlb_core::strength::Nesting::Left)
                .map_err(|e| anyhow!("{e}"))
        }
    }
}

fn check_distinct<'a>(names: impl Iterator<Item = &'a str>, what: &str) -> Result<()> {
    let mut seen = BTreeSet::new();
    for n in names {
        if !seen.insert(n) {
            bail!("duplicate {what} name: {n}");
        }
    }
    Ok(())
}

fn resolve_monoid(rm: &RawMonoid) -> Result<MonoidSpec> {
    let field = format!("monoids.{}", rm.name);
    if let Some(builtin) = &rm.builtin {
        let mut m = match builtin.as_str() {
            "z5_add" => MonoidSpec::z5(),
            "first_projection" => MonoidSpec::first_projection(),
            "nat_add_sat15" => MonoidSpec::nat_saturating(15),
            other => bail!("{field}: unknown builtin monoid {other}"),
        };
        m.name = rm.name.clone();
        return Ok(m);
    }
    let values = rm
        .values
        .as_ref()
        .ok_or_else(|| anyhow!("{field}: values required"))?;
    let carrier_vals: Result<Vec<Val>> = values
        .iter()
        .map(|s| parse_term(s, None).with_context(|| format!("{field}.values")))
        .collect();
    let carrier = Universe::new(rm.name.clone(), carrier_vals?)
        .map_err(|e| anyhow!("{field}: {e}"))?;
    let identity = parse_term(
        rm.identity
            .as_deref()
            .ok_or_else(|| anyhow!("{field}: identity required"))?,
        None,
    )
    .with_context(|| format!("{field}.identity"))?;
    let rows = rm
        .table
        .as_ref()
        .ok_or_else(|| anyhow!("{field}: table required"))?;
    let mut domain = Vec::new();
    let mut entries = Vec::new();
    for [x, y, xy] in rows {
        domain.push(Val::pair(
            parse_term(x, None).with_context(|| format!("{field}.table"))?,
            parse_term(y, None).with_context(|| format!("{field}.table"))?,
        ));
        entries.push(parse_term(xy, None).with_context(|| format!("{field}.table"))?);
    }
    // totality on all pairs
    for x in &carrier.values {
        for y in &carrier.values {
            let key = Val::pair(x.clone(), y.clone());
            if !domain.contains(&key) {
                bail!("{field}.table: missing entry for ({x}, {y})");
            }
        }
    }
    let op = FnTable::new(domain, rm.name.clone(), entries);
    MonoidSpec::new(
        rm.name.clone(),
        carrier,
        op,
        identity,
        rm.commutative.unwrap_or(false),
    )
    .map_err(|e| anyhow!("{field}: {e}"))
}
