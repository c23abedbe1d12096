//! Pre-strengths and Kleisli strengths: the tensorial maps lst/rst, the
//! derived prestrengths lstΓ/rstΓ, order-n extension from order 2, the
//! lΓ/rΓ decomposition, and the catalog of named strengths.

use std::fmt;
use std::sync::Arc;

use crate::error::Error;
use crate::monad::{Monad, MonadKind};
use crate::value::{Tree, Val};

/// How a strength candidate was obtained; `PrestrengthOnly` marks candidates
/// expected to satisfy naturality but not the full Kleisli-strength laws.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum StrengthKind {
    KleisliCandidate,
    DerivedLeft,
    DerivedRight,
    PrestrengthOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Nesting {
    Left,
    Right,
}

type CustomFn = Arc<dyn Fn(&Monad, &[Val]) -> Result<Val, Error> + Send + Sync>;

#[derive(Clone)]
enum Form {
    UnitZero,
    IdentityOrder1,
    ListRev,
    PowersetProduct,
    ExceptionsDefault(Val),
    ReaderPointwise,
    WriterMonoid,
    StateSnapback,
    TreeLeftmost,
    ListFst,
    ListLst,
    Comprehension,
    DerivedLeft,
    DerivedRight,
    Extended { base: Box<Strength>, nesting: Nesting },
    Custom(CustomFn),
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Form::UnitZero => "UnitZero",
            Form::IdentityOrder1 => "IdentityOrder1",
            Form::ListRev => "ListRev",
            Form::PowersetProduct => "PowersetProduct",
            Form::ExceptionsDefault(_) => "ExceptionsDefault",
            Form::ReaderPointwise => "ReaderPointwise",
            Form::WriterMonoid => "WriterMonoid",
            Form::StateSnapback => "StateSnapback",
            Form::TreeLeftmost => "TreeLeftmost",
            Form::ListFst => "ListFst",
            Form::ListLst => "ListLst",
            Form::Comprehension => "Comprehension",
            Form::DerivedLeft => "DerivedLeft",
            Form::DerivedRight => "DerivedRight",
            Form::Extended { .. } => "Extended",
            Form::Custom(_) => "Custom",
        };
        f.write_str(name)
    }
}

/// A natural-transformation candidate Γⁿ : KV₁ × ⋯ × KVₙ → K(V₁ × ⋯ × Vₙ)
/// attached to a monad. Order-n results are flat tuples (a bare value for
/// n = 1, the unit value for n = 0).
#[derive(Debug, Clone)]
pub struct Strength {
    pub name: String,
    pub monad: Monad,
    pub order: usize,
    pub kind: StrengthKind,
    form: Form,
}

/// The product value of `components` at a given order.
pub fn product_val(components: &[Val]) -> Val {
    match components.len() {
        0 => Val::Unit,
        1 => components[0].clone(),
        _ => Val::Tuple(components.to_vec()),
    }
}

/// Inverse of [`product_val`] at a known order.
pub fn product_components(v: &Val, order: usize) -> Result<Vec<Val>, Error> {
    match order {
        0 => Ok(vec![]),
        1 => Ok(vec![v.clone()]),
        n => match v {
            Val::Tuple(items) if items.len() == n => Ok(items.clone()),
            _ => Err(Error::MalformedTerm(format!("expected a {n}-tuple, got {v}"))),
        },
    }
}

// ---------------------------------------------------------------------------
// The tensorial maps and derived prestrengths of an st-monad
// ---------------------------------------------------------------------------

/// rst : A × MB → M(A × B), the usual "monad strength".
pub fn rst(m: &Monad, a: &Val, mb: &Val) -> Val {
    m.fmap_with(|b| Val::tuple(vec![a.clone(), b.clone()]), mb)
}

/// lst : MA × B → M(A × B).
pub fn lst(m: &Monad, ma: &Val, b: &Val) -> Val {
    m.fmap_with(|a| Val::tuple(vec![a.clone(), b.clone()]), ma)
}

/// lstΓ = rst# ∘ lst — run the left effect, then the right.
pub fn lst_gamma(m: &Monad, ma: &Val, mb: &Val) -> Result<Val, Error> {
    m.bind_res(ma, &|a| Ok(rst(m, a, mb)))
}

/// rstΓ = lst# ∘ rst — run the right effect, then the left.
pub fn rst_gamma(m: &Monad, ma: &Val, mb: &Val) -> Result<Val, Error> {
    m.bind_res(mb, &|b| Ok(lst(m, ma, b)))
}

// ---------------------------------------------------------------------------
// Strength application
// ---------------------------------------------------------------------------

fn leftmost_leaf(t: &Tree) -> Result<&Val, Error> {
    match t {
        Tree::Leaf(v) => Ok(v),
        Tree::Node(l, _) => leftmost_leaf(l),
        Tree::Empty => Err(Error::MalformedTerm("empty tree has no leftmost leaf".into())),
    }
}

impl Strength {
    pub fn apply(&self, args: &[Val]) -> Result<Val, Error> {
        if args.len() != self.order {
            return Err(Error::Arity {
                name: self.name.clone(),
                expected: self.order,
                got: args.len(),
            });
        }
        let m = &self.monad;
        match &self.form {
            Form::UnitZero => Ok(m.unit(&Val::Unit)),
            Form::IdentityOrder1 => Ok(args[0].clone()),
            Form::ListRev => {
                let mut items = args[0].as_list().to_vec();
                items.reverse();
                Ok(Val::List(items))
            }
            Form::PowersetProduct => {
                let mut products: Vec<Vec<Val>> = vec![vec![]];
                for s in args {
                    let mut grown = Vec::new();
                    for prefix in &products {
                        for v in s.as_set() {
                            let mut p = prefix.clone();
                            p.push(v.clone());
                            grown.push(p);
                        }
                    }
                    products = grown;
                }
                Ok(Val::set(products.iter().map(|p| product_val(p)).collect()))
            }
            Form::ExceptionsDefault(d) => {
                let mut oks = Vec::with_capacity(args.len());
                for x in args {
                    match x {
                        Val::Tagged(tag, Some(v)) if tag == "ok" => oks.push((**v).clone()),
                        Val::Tagged(tag, Some(_)) if tag == "exc" => {
                            return Ok(Val::exc(d.clone()))
                        }
                        other => {
                            return Err(Error::MalformedTerm(format!(
                                "not an exceptions value: {other}"
                            )))
                        }
                    }
                }
                Ok(Val::ok(product_val(&oks)))
            }
            Form::ReaderPointwise => {
                let domain = args[0].as_table().domain.clone();
                let mut entries = Vec::with_capacity(domain.len());
                for r in &domain {
                    let at: Result<Vec<Val>, Error> =
                        args.iter().map(|f| Ok(f.as_table().apply(r)?.clone())).collect();
                    entries.push(product_val(&at?));
                }
                Ok(Val::Table(crate::value::FnTable::new(domain, "", entries)))
            }
            Form::WriterMonoid => {
                let monoid = match &m.kind {
                    MonadKind::Writer { monoid } => monoid,
                    _ => {
                        return Err(Error::StrengthMonad {
                            strength: self.name.clone(),
                            monad: m.name.clone(),
                        })
                    }
                };
                let (m1, x) = args[0].as_pair();
                let (m2, y) = args[1].as_pair();
                Ok(Val::pair(monoid.mul(m1, m2)?, product_val(&[x.clone(), y.clone()])))
            }
            Form::StateSnapback => {
                let ta = args[0].as_table();
                let tb = args[1].as_table();
                let domain = ta.domain.clone();
                let mut entries = Vec::with_capacity(domain.len());
                for s in &domain {
                    let (a, _) = ta.apply(s)?.as_pair();
                    let (b, _) = tb.apply(s)?.as_pair();
                    entries.push(Val::pair(product_val(&[a.clone(), b.clone()]), s.clone()));
                }
                Ok(Val::Table(crate::value::FnTable::new(domain, "", entries)))
            }
            Form::TreeLeftmost => {
                let t1 = match &args[0] {
                    Val::Tree(t) => t,
                    other => return Err(Error::MalformedTerm(format!("not a tree: {other}"))),
                };
                let t2 = match &args[1] {
                    Val::Tree(t) => t,
                    other => return Err(Error::MalformedTerm(format!("not a tree: {other}"))),
                };
                let a = leftmost_leaf(t1)?;
                let b = leftmost_leaf(t2)?;
                Ok(Val::leaf(product_val(&[a.clone(), b.clone()])))
            }
            Form::ListFst | Form::ListLst => {
                let pick = |l: &Val| -> Result<Val, Error> {
                    let items = l.as_list();
                    let v = match self.form {
                        Form::ListFst => items.first(),
                        _ => items.last(),
                    };
                    v.cloned().ok_or_else(|| {
                        Error::MalformedTerm("empty list in a nonempty-list strength".into())
                    })
                };
                let a = pick(&args[0])?;
                let b = pick(&args[1])?;
                Ok(Val::list(vec![product_val(&[a, b])]))
            }
            Form::Comprehension | Form::DerivedLeft => lst_gamma(m, &args[0], &args[1]),
            Form::DerivedRight => rst_gamma(m, &args[0], &args[1]),
            Form::Extended { base, nesting } => {
                if self.order == 2 {
                    return base.apply(args);
                }
                let n = self.order;
                let sub_strength = Strength {
                    name: self.name.clone(),
                    monad: self.monad.clone(),
                    order: n - 1,
                    kind: self.kind,
                    form: self.form.clone(),
                };
                match nesting {
                    Nesting::Left => {
                        let sub = sub_strength.apply(&args[..n - 1])?;
                        let paired = base.apply(&[sub, args[n - 1].clone()])?;
                        // flatten K((V₁×⋯×Vₙ₋₁) × Vₙ) to a flat n-tuple
                        m.fmap_res(
                            &|t| {
                                let parts = product_components(t, 2)?;
                                let mut flat = product_components(&parts[0], n - 1)?;
                                flat.push(parts[1].clone());
                                Ok(product_val(&flat))
                            },
                            &paired,
                        )
                    }
                    Nesting::Right => {
                        let sub = sub_strength.apply(&args[1..])?;
                        let paired = base.apply(&[args[0].clone(), sub])?;
                        m.fmap_res(
                            &|t| {
                                let parts = product_components(t, 2)?;
                                let mut flat = vec![parts[0].clone()];
                                flat.extend(product_components(&parts[1], n - 1)?);
                                Ok(product_val(&flat))
                            },
                            &paired,
                        )
                    }
                }
            }
            Form::Custom(f) => f(m, args),
        }
    }

    /// An arbitrary strength candidate; used for engine self-test fixtures.
    pub fn custom(
        name: impl Into<String>,
        monad: Monad,
        order: usize,
        kind: StrengthKind,
        f: impl Fn(&Monad, &[Val]) -> Result<Val, Error> + Send + Sync + 'static,
    ) -> Strength {
        Strength { name: name.into(), monad, order, kind, form: Form::Custom(Arc::new(f)) }
    }

    /// Γ⁰, the unit at the tensor unit.
    pub fn unit_order0(monad: Monad) -> Strength {
        Strength {
            name: "unit_order0".into(),
            monad,
            order: 0,
            kind: StrengthKind::KleisliCandidate,
            form: Form::UnitZero,
        }
    }

    /// The derived left prestrength lstΓ as an order-2 candidate.
    pub fn derived_left(monad: Monad) -> Strength {
        Strength {
            name: "lst_gamma".into(),
            monad,
            order: 2,
            kind: StrengthKind::DerivedLeft,
            form: Form::DerivedLeft,
        }
    }

    /// The derived right prestrength rstΓ as an order-2 candidate.
    pub fn derived_right(monad: Monad) -> Strength {
        Strength {
            name: "rst_gamma".into(),
            monad,
            order: 2,
            kind: StrengthKind::DerivedRight,
            form: Form::DerivedRight,
        }
    }
}

/// Raise an order-2 strength to order n by repeated pairing, flattening the
/// nested tuples so results are flat n-tuples.
pub fn extend_gamma(base: &Strength, n: usize, nesting: Nesting) -> Result<Strength, Error> {
    if base.order != 2 {
        return Err(Error::Invalid(format!(
            "extend_gamma requires an order-2 strength, {} has order {}",
            base.name, base.order
        )));
    }
    if n < 2 {
        return Err(Error::Invalid("extend_gamma requires n >= 2".into()));
    }
    let suffix = match nesting {
        Nesting::Left => "left",
        Nesting::Right => "right",
    };
    Ok(Strength {
        name: format!("{}_order{}_{}", base.name, n, suffix),
        monad: base.monad.clone(),
        order: n,
        kind: base.kind,
        form: Form::Extended { base: Box::new(base.clone()), nesting },
    })
}

/// lΓ(ma, b) = Γ(ma, unit b).
pub fn l_of_gamma(g: &Strength, ma: &Val, b: &Val) -> Result<Val, Error> {
    g.apply(&[ma.clone(), g.monad.unit(b)])
}

/// rΓ(a, mb) = Γ(unit a, mb).
pub fn r_of_gamma(g: &Strength, a: &Val, mb: &Val) -> Result<Val, Error> {
    g.apply(&[g.monad.unit(a), mb.clone()])
}

/// Both reconstruction composites of an order-2 strength:
/// (rΓ_AB)# ∘ lΓ_{A,KB} and (lΓ_AB)# ∘ rΓ_{KA,B}.
pub fn reconstruct_gamma(g: &Strength, ma: &Val, mb: &Val) -> Result<(Val, Val), Error> {
    let m = &g.monad;
    let via_l = g.apply(&[ma.clone(), m.unit(mb)])?;
    let first = m.bind_res(&via_l, &|t| {
        let parts = product_components(t, 2)?;
        g.apply(&[m.unit(&parts[0]), parts[1].clone()])
    })?;
    let via_r = g.apply(&[m.unit(ma), mb.clone()])?;
    let second = m.bind_res(&via_r, &|t| {
        let parts = product_components(t, 2)?;
        g.apply(&[parts[0].clone(), m.unit(&parts[1])])
    })?;
    Ok((first, second))
}

/// The named strengths of the catalog.
pub fn builtin_strength(
    name: &str,
    monad: Monad,
    order: Option<usize>,
    param: Option<Val>,
) -> Result<Strength, Error> {
    let mismatch = |monad: &Monad| Error::StrengthMonad {
        strength: name.to_string(),
        monad: monad.name.clone(),
    };
    let make = |order: usize, kind: StrengthKind, form: Form, monad: Monad| Strength {
        name: name.to_string(),
        monad,
        order,
        kind,
        form,
    };
    match name {
        "identity_order1" => Ok(make(1, StrengthKind::KleisliCandidate, Form::IdentityOrder1, monad)),
        "list_rev" => match monad.kind {
            MonadKind::List | MonadKind::NonemptyList => {
                Ok(make(1, StrengthKind::KleisliCandidate, Form::ListRev, monad))
            }
            _ => Err(mismatch(&monad)),
        },
        "powerset_product" => match monad.kind {
            MonadKind::Powerset => Ok(make(
                order.unwrap_or(2),
                StrengthKind::KleisliCandidate,
                Form::PowersetProduct,
                monad,
            )),
            _ => Err(mismatch(&monad)),
        },
        "exceptions_default" => match &monad.kind {
            MonadKind::Exceptions { exc } => {
                let d = param.ok_or_else(|| {
                    Error::Invalid("exceptions_default requires a default exception".into())
                })?;
                if !exc.values.contains(&d) {
                    return Err(Error::Invalid(format!(
                        "default {d} is not in the exception universe of {}",
                        monad.name
                    )));
                }
                Ok(make(
                    order.unwrap_or(2),
                    StrengthKind::KleisliCandidate,
                    Form::ExceptionsDefault(d),
                    monad,
                ))
            }
            _ => Err(mismatch(&monad)),
        },
        "reader_pointwise" => match monad.kind {
            MonadKind::Reader { .. } => {
                let n = order.unwrap_or(2);
                if n < 1 {
                    return Err(Error::Invalid("reader_pointwise requires order >= 1".into()));
                }
                Ok(make(n, StrengthKind::KleisliCandidate, Form::ReaderPointwise, monad))
            }
            _ => Err(mismatch(&monad)),
        },
        "writer_monoid" => match monad.kind {
            MonadKind::Writer { .. } => {
                Ok(make(2, StrengthKind::KleisliCandidate, Form::WriterMonoid, monad))
            }
            _ => Err(mismatch(&monad)),
        },
        "state_snapback" => match monad.kind {
            MonadKind::State { .. } => {
                Ok(make(2, StrengthKind::KleisliCandidate, Form::StateSnapback, monad))
            }
            _ => Err(mismatch(&monad)),
        },
        "tree_leftmost" => match monad.kind {
            MonadKind::NonemptyTree => {
                Ok(make(2, StrengthKind::KleisliCandidate, Form::TreeLeftmost, monad))
            }
            _ => Err(mismatch(&monad)),
        },
        "list_fst" => match monad.kind {
            MonadKind::NonemptyList => {
                Ok(make(2, StrengthKind::KleisliCandidate, Form::ListFst, monad))
            }
            _ => Err(mismatch(&monad)),
        },
        "list_lst" => match monad.kind {
            MonadKind::NonemptyList => {
                Ok(make(2, StrengthKind::KleisliCandidate, Form::ListLst, monad))
            }
            _ => Err(mismatch(&monad)),
        },
        "comprehension" => match monad.kind {
            MonadKind::NonemptyList => {
                Ok(make(2, StrengthKind::PrestrengthOnly, Form::Comprehension, monad))
            }
            _ => Err(mismatch(&monad)),
        },
        "lst_gamma" => Ok(Strength::derived_left(monad)),
        "rst_gamma" => Ok(Strength::derived_right(monad)),
        _ => Err(Error::UnknownStrength(name.to_string())),
    }
}

/// The strength a commutative monad contributes at a given arity when a
/// distributive-law family is defaulted: Γ⁰ for constants, the identity for
/// unary symbols, lstΓ for binary ones, and left-nested extensions above.
pub fn default_family_strength(monad: Monad, arity: usize) -> Result<Strength, Error> {
    match arity {
        0 => Ok(Strength::unit_order0(monad)),
        1 => builtin_strength("identity_order1", monad, None, None),
        2 => Ok(Strength::derived_left(monad)),
        n => extend_gamma(&Strength::derived_left(monad), n, Nesting::Left),
    }
}
