//! Distributive laws λ : Σ@K → KΣ@ derived from Kleisli-strength families,
//! the list-shaped `sequence` law, and the composite monad KH they induce.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::Error;
use crate::monad::Monad;
use crate::signature::{self, SignatureSpec, TermView};
use crate::strength::{default_family_strength, product_components, Strength};
use crate::value::{FnTable, Val};

type CustomLaw = Arc<dyn Fn(&Val) -> Result<Val, Error> + Send + Sync>;

#[derive(Clone)]
enum DlForm {
    /// Structural recursion over free terms through a per-symbol strength
    /// family.
    Derived { family: BTreeMap<String, Strength> },
    /// The list-shaped recursion (Haskell's `sequence`), the list monad taken
    /// as a quotient of a free monad.
    Sequence,
    /// Arbitrary map; used by engine self-test fixtures.
    Custom(CustomLaw),
}

/// A distributive-law candidate λ : HK → KH with H the outer (free or list)
/// monad and K the inner monad.
#[derive(Clone)]
pub struct DistLaw {
    pub name: String,
    pub outer: Monad,
    pub inner: Monad,
    form: DlForm,
}

impl std::fmt::Debug for DistLaw {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DistLaw")
            .field("name", &self.name)
            .field("outer", &self.outer.name)
            .field("inner", &self.inner.name)
            .finish()
    }
}

/// `sequence` for an arbitrary inner monad: the canonical map L(K X) → K(L X).
pub fn sequence(k: &Monad, items: &[Val]) -> Result<Val, Error> {
    match items.split_first() {
        None => Ok(k.unit(&Val::list(vec![]))),
        Some((x, rest)) => k.bind_res(x, &|a| {
            let tail = sequence(k, rest)?;
            Ok(k.fmap_with(
                |bl| {
                    let mut out = vec![a.clone()];
                    out.extend(bl.as_list().iter().cloned());
                    Val::List(out)
                },
                &tail,
            ))
        }),
    }
}

impl DistLaw {
    /// Apply λ to a value of H(K X).
    pub fn apply(&self, hk: &Val) -> Result<Val, Error> {
        match &self.form {
            DlForm::Derived { family } => self.apply_derived(family, hk),
            DlForm::Sequence => sequence(&self.inner, hk.as_list()),
            DlForm::Custom(f) => f(hk),
        }
    }

    fn apply_derived(
        &self,
        family: &BTreeMap<String, Strength>,
        term: &Val,
    ) -> Result<Val, Error> {
        let k = &self.inner;
        match signature::dest(term)? {
            TermView::Var(kval) => k.fmap_res(&|a| Ok(signature::var(a.clone())), kval),
            TermView::Op(sym, children) => {
                let n = children.len();
                let gamma = family.get(sym).ok_or_else(|| {
                    Error::DistLawFamily(format!("no strength registered for symbol {sym}"))
                })?;
                let lifted: Result<Vec<Val>, Error> =
                    children.iter().map(|c| self.apply_derived(family, c)).collect();
                let combined = gamma.apply(&lifted?)?;
                let sym = sym.to_string();
                k.fmap_res(
                    &|prod| Ok(signature::op(&sym, product_components(prod, n)?)),
                    &combined,
                )
            }
        }
    }

    pub fn custom(
        name: impl Into<String>,
        outer: Monad,
        inner: Monad,
        f: impl Fn(&Val) -> Result<Val, Error> + Send + Sync + 'static,
    ) -> DistLaw {
        DistLaw { name: name.into(), outer, inner, form: DlForm::Custom(Arc::new(f)) }
    }
}

/// Derive λ : Σ@K → KΣ@ from a strength family covering every operation
/// symbol (order = arity). Structure is validated here; law verification is
/// the caller's gate (see [`crate::lawcheck::check_kleisli_strength`]).
pub fn derive_distlaw(
    sig: &SignatureSpec,
    inner: Monad,
    family: BTreeMap<String, Strength>,
) -> Result<DistLaw, Error> {
    for (sym, arity) in &sig.ops {
        let gamma = family.get(sym).ok_or_else(|| {
            Error::DistLawFamily(format!("family does not cover symbol {sym}"))
        })?;
        if gamma.order != *arity {
            return Err(Error::DistLawFamily(format!(
                "strength {} has order {} but {sym} has arity {arity}",
                gamma.name, gamma.order
            )));
        }
        if gamma.monad.name != inner.name {
            return Err(Error::DistLawFamily(format!(
                "strength {} is attached to monad {}, not {}",
                gamma.name, gamma.monad.name, inner.name
            )));
        }
    }
    for sym in family.keys() {
        if sig.arity(sym).is_none() {
            return Err(Error::DistLawFamily(format!("family names unknown symbol {sym}")));
        }
    }
    Ok(DistLaw {
        name: format!("{}_over_{}", sig.name, inner.name),
        outer: Monad::free(sig.clone()),
        inner,
        form: DlForm::Derived { family },
    })
}

/// The default family for a commutative inner monad: lstΓ at every arity
/// (Γ⁰ for constants, identity at arity 1, left-nested extensions above 2).
pub fn default_family(
    sig: &SignatureSpec,
    inner: &Monad,
) -> Result<BTreeMap<String, Strength>, Error> {
    let mut family = BTreeMap::new();
    for (sym, arity) in &sig.ops {
        family.insert(sym.clone(), default_family_strength(inner.clone(), *arity)?);
    }
    Ok(family)
}

/// The list-shaped distributive-law candidate over K (`sequence`).
pub fn list_sequence(inner: Monad) -> DistLaw {
    DistLaw {
        name: format!("sequence_over_{}", inner.name),
        outer: Monad::list(),
        inner,
        form: DlForm::Sequence,
    }
}

// ---------------------------------------------------------------------------
// The composite monad KH
// ---------------------------------------------------------------------------

/// The composite monad (KH, (νμ)(KλH), ρη) induced by a distributive law.
/// In checked mode, `bind` computes both its defining path and the
/// join∘fmap path and insists they agree.
#[derive(Debug, Clone)]
pub struct Composite {
    pub law: DistLaw,
    pub checked: bool,
}

impl Composite {
    pub fn new(law: DistLaw) -> Composite {
        Composite { law, checked: true }
    }

    pub fn name(&self) -> String {
        format!("{}∘{}", self.law.inner.name, self.law.outer.name)
    }

    /// ρη: unit of the composite.
    pub fn unit(&self, a: &Val) -> Val {
        self.law.inner.unit(&self.law.outer.unit(a))
    }

    pub fn fmap_res(
        &self,
        f: &dyn Fn(&Val) -> Result<Val, Error>,
        v: &Val,
    ) -> Result<Val, Error> {
        self.law.inner.fmap_res(&|h| self.law.outer.fmap_res(f, h), v)
    }

    /// (νμ)(KλH): join of the composite at K H K H → K H.
    pub fn join(&self, v: &Val) -> Result<Val, Error> {
        let k = &self.law.inner;
        let h = &self.law.outer;
        let pushed = k.fmap_res(
            &|hkh| {
                let khh = self.law.apply(hkh)?;
                k.fmap_res(&|hh| h.join(hh), &khh)
            },
            v,
        )?;
        k.join(&pushed)
    }

    /// Kleisli extension against a table f : A → KH B.
    pub fn bind(&self, v: &Val, f: &FnTable) -> Result<Val, Error> {
        self.bind_res(v, &|a| f.apply(a).cloned())
    }

    pub fn bind_res(
        &self,
        v: &Val,
        f: &dyn Fn(&Val) -> Result<Val, Error>,
    ) -> Result<Val, Error> {
        let k = &self.law.inner;
        let h = &self.law.outer;
        let direct = k.bind_res(v, &|x| {
            let fanned = h.fmap_res(f, x)?;
            k.bind_res(&self.law.apply(&fanned)?, &|hh| Ok(k.unit(&h.join(hh)?)))
        })?;
        if self.checked {
            let via_join = self.join(&self.fmap_res(f, v)?)?;
            if direct != via_join {
                return Err(Error::CompositePathMismatch {
                    input: v.to_string(),
                    lhs: direct.to_string(),
                    rhs: via_join.to_string(),
                });
            }
        }
        Ok(direct)
    }
}
