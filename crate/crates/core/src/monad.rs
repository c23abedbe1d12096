//! The monad catalog: every monad is data (bounded carrier enumeration, unit,
//! fmap, join), with bind derived as `join . fmap f` and never overridden.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::signature::{self, SignatureSpec};
use crate::value::{
    enumerate_functions_capped, lists_up_to, subsets_up_to, Bounds, FnTable, Tree, Universe, Val,
};

// ---------------------------------------------------------------------------
// Monoids
// ---------------------------------------------------------------------------

/// A finite monoid given by an explicit multiplication table. Associativity,
/// the two-sided identity, and a declared commutativity flag are all checked
/// exhaustively at construction; an invalid table never becomes a monoid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidSpec {
    pub name: String,
    pub carrier: Universe,
    pub op: FnTable,
    pub identity: Val,
    pub commutative: bool,
}

impl MonoidSpec {
    pub fn new(
        name: impl Into<String>,
        carrier: Universe,
        op: FnTable,
        identity: Val,
        commutative: bool,
    ) -> Result<Self, Error> {
        let name = name.into();
        let m = MonoidSpec { name, carrier, op, identity, commutative };
        m.check()?;
        Ok(m)
    }

    /// Build the table from a closure over the carrier.
    pub fn from_fn(
        name: impl Into<String>,
        carrier: Universe,
        identity: Val,
        commutative: bool,
        f: impl Fn(&Val, &Val) -> Val,
    ) -> Result<Self, Error> {
        let mut domain = Vec::new();
        let mut entries = Vec::new();
        for x in &carrier.values {
            for y in &carrier.values {
                domain.push(Val::pair(x.clone(), y.clone()));
                entries.push(f(x, y));
            }
        }
        let op = FnTable::new(domain, carrier.name.clone(), entries);
        MonoidSpec::new(name, carrier, op, identity, commutative)
    }

    pub fn mul(&self, x: &Val, y: &Val) -> Result<Val, Error> {
        Ok(self.op.apply(&Val::pair(x.clone(), y.clone()))?.clone())
    }

    fn check(&self) -> Result<(), Error> {
        let vals = &self.carrier.values;
        if !vals.contains(&self.identity) {
            return Err(Error::MonoidLaw {
                monoid: self.name.clone(),
                law: "identity element membership".into(),
                witness: self.identity.to_string(),
            });
        }
        for x in vals {
            for y in vals {
                let xy = self.mul(x, y)?;
                if !vals.contains(&xy) {
                    return Err(Error::MonoidLaw {
                        monoid: self.name.clone(),
                        law: "closure".into(),
                        witness: format!("({x}, {y})"),
                    });
                }
                if self.commutative && xy != self.mul(y, x)? {
                    return Err(Error::MonoidLaw {
                        monoid: self.name.clone(),
                        law: "declared commutativity".into(),
                        witness: format!("({x}, {y})"),
                    });
                }
                for z in vals {
                    if self.mul(&xy, z)? != self.mul(x, &self.mul(y, z)?)? {
                        return Err(Error::MonoidLaw {
                            monoid: self.name.clone(),
                            law: "associativity".into(),
                            witness: format!("({x}, {y}, {z})"),
                        });
                    }
                }
            }
            if self.mul(&self.identity, x)? != *x || self.mul(x, &self.identity)? != *x {
                return Err(Error::MonoidLaw {
                    monoid: self.name.clone(),
                    law: "two-sided identity".into(),
                    witness: x.to_string(),
                });
            }
        }
        Ok(())
    }

    /// Integers mod 5 under addition.
    pub fn z5() -> MonoidSpec {
        let carrier = Universe::of_ints("Z5", 0..5);
        MonoidSpec::from_fn("z5_add", carrier, Val::int(0), true, |x, y| match (x, y) {
            (Val::Atom(crate::value::Atom::Int(a)), Val::Atom(crate::value::Atom::Int(b))) => {
                Val::int((a + b) % 5)
            }
            _ => unreachable!(),
        })
        .expect("z5 is a monoid")
    }

    /// Saturating addition on {0..=limit}: a genuine commutative monoid that
    /// agrees with integer addition below the cap.
    pub fn nat_saturating(limit: i64) -> MonoidSpec {
        let carrier = Universe::of_ints("NatSat", 0..=limit);
        MonoidSpec::from_fn("nat_add_sat", carrier, Val::int(0), true, |x, y| match (x, y) {
            (Val::Atom(crate::value::Atom::Int(a)), Val::Atom(crate::value::Atom::Int(b))) => {
                Val::int((a + b).min(limit))
            }
            _ => unreachable!(),
        })
        .expect("saturating addition is a monoid")
    }

    /// Left-zero semigroup on {a, b} with adjoined identity e: xy = x for
    /// x,y != e. Associative, non-commutative; the standard negative fixture.
    pub fn first_projection() -> MonoidSpec {
        let carrier = Universe::of_syms("FP", ["e", "a", "b"]);
        let e = Val::sym("e");
        MonoidSpec::from_fn("first_projection", carrier, e.clone(), false, move |x, y| {
            if *x == e {
                y.clone()
            } else {
                x.clone()
            }
        })
        .expect("left-zero with identity is a monoid")
    }
}

// ---------------------------------------------------------------------------
// The catalog
// ---------------------------------------------------------------------------

/// Twists of the list monad used by the engine's broken-fixture self-tests.
/// Each breaks a specific law while keeping the value shapes list-like.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SelfTestMonad {
    /// unit a = [a, a]
    UnitDup,
    /// join drops the first inner list
    JoinDropFirst,
    /// join concatenates the reversed outer list
    JoinReverse,
    /// fmap deduplicates consecutive equal images
    FmapDedup,
    /// fmap appends the image of the first element again
    FmapAppendFirstImage,
    /// join drops inner lists equal to [1]
    JoinDropSingletonOne,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum MonadKind {
    Identity,
    List,
    NonemptyList,
    Exceptions { exc: Universe },
    Reader { inputs: Universe },
    Writer { monoid: MonoidSpec },
    State { states: Universe },
    Powerset,
    Tree,
    NonemptyTree,
    Free { sig: SignatureSpec },
    SelfTest(SelfTestMonad),
}

/// A named monad from the catalog.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Monad {
    pub name: String,
    pub kind: MonadKind,
}

impl Monad {
    pub fn identity() -> Monad {
        Monad { name: "identity".into(), kind: MonadKind::Identity }
    }
    pub fn list() -> Monad {
        Monad { name: "list".into(), kind: MonadKind::List }
    }
    pub fn nonempty_list() -> Monad {
        Monad { name: "nonempty_list".into(), kind: MonadKind::NonemptyList }
    }
    pub fn exceptions(name: impl Into<String>, exc: Universe) -> Monad {
        Monad { name: name.into(), kind: MonadKind::Exceptions { exc } }
    }
    /// maybe = exceptions with a single exception value `nothing`.
    pub fn maybe() -> Monad {
        Monad::exceptions("maybe", Universe::of_syms("Nothing", ["nothing"]))
    }
    pub fn reader(name: impl Into<String>, inputs: Universe) -> Monad {
        Monad { name: name.into(), kind: MonadKind::Reader { inputs } }
    }
    pub fn writer(name: impl Into<String>, monoid: MonoidSpec) -> Monad {
        Monad { name: name.into(), kind: MonadKind::Writer { monoid } }
    }
    pub fn state(name: impl Into<String>, states: Universe) -> Monad {
        Monad { name: name.into(), kind: MonadKind::State { states } }
    }
    pub fn powerset() -> Monad {
        Monad { name: "powerset".into(), kind: MonadKind::Powerset }
    }
    pub fn tree() -> Monad {
        Monad { name: "tree".into(), kind: MonadKind::Tree }
    }
    pub fn nonempty_tree() -> Monad {
        Monad { name: "nonempty_tree".into(), kind: MonadKind::NonemptyTree }
    }
    pub fn free(sig: SignatureSpec) -> Monad {
        Monad { name: format!("free_{}", sig.name), kind: MonadKind::Free { sig } }
    }
    pub fn self_test(t: SelfTestMonad) -> Monad {
        Monad { name: format!("selftest_{t:?}"), kind: MonadKind::SelfTest(t) }
    }

    /// Commutativity as known from the catalog structure; the equivalence
    /// audit verifies these claims empirically.
    pub fn known_commutative(&self) -> bool {
        match &self.kind {
            MonadKind::Identity | MonadKind::Powerset | MonadKind::Reader { .. } => true,
            MonadKind::Exceptions { exc } => exc.values.len() <= 1,
            MonadKind::Writer { monoid } => monoid.commutative,
            _ => false,
        }
    }
}

// ---------------------------------------------------------------------------
// Carrier enumeration
// ---------------------------------------------------------------------------

fn trees_up_to(alphabet: &[Val], depth: usize, include_empty: bool) -> Vec<Val> {
    let mut layer: Vec<Tree> = Vec::new();
    if include_empty {
        layer.push(Tree::Empty);
    }
    for v in alphabet {
        layer.push(Tree::Leaf(Box::new(v.clone())));
    }
    for _ in 0..depth {
        let mut next = layer.clone();
        for l in &layer {
            for r in &layer {
                next.push(Tree::Node(Box::new(l.clone()), Box::new(r.clone())));
            }
        }
        next.sort();
        next.dedup();
        layer = next;
    }
    layer.into_iter().map(Val::Tree).collect()
}

impl Monad {
    /// Complete enumeration of the carrier M A within bounds, in the global
    /// value order.
    pub fn carrier(&self, a: &[Val], bounds: &Bounds) -> Vec<Val> {
        let mut alphabet = a.to_vec();
        alphabet.sort();
        alphabet.dedup();
        let mut out: Vec<Val> = match &self.kind {
            MonadKind::Identity => alphabet.clone(),
            MonadKind::List | MonadKind::SelfTest(_) => {
                lists_up_to(&alphabet, bounds.max_list_len).into_iter().map(Val::List).collect()
            }
            MonadKind::NonemptyList => lists_up_to(&alphabet, bounds.max_list_len)
                .into_iter()
                .filter(|l| !l.is_empty())
                .map(Val::List)
                .collect(),
            MonadKind::Exceptions { exc } => {
                let mut v: Vec<Val> = alphabet.iter().cloned().map(Val::ok).collect();
                v.extend(exc.values.iter().cloned().map(Val::exc));
                v
            }
            MonadKind::Reader { inputs } => {
                enumerate_functions_capped(&inputs.values, &alphabet, bounds, usize::MAX)
                    .expect("reader carrier over a nonempty universe")
                    .into_iter()
                    .map(Val::Table)
                    .collect()
            }
            MonadKind::Writer { monoid } => {
                let mut v = Vec::new();
                for m in &monoid.carrier.values {
                    for x in &alphabet {
                        v.push(Val::pair(m.clone(), x.clone()));
                    }
                }
                v
            }
            MonadKind::State { states } => {
                let mut results = Vec::new();
                for x in &alphabet {
                    for s in &states.values {
                        results.push(Val::pair(x.clone(), s.clone()));
                    }
                }
                enumerate_functions_capped(&states.values, &results, bounds, usize::MAX)
                    .expect("state carrier over a nonempty universe")
                    .into_iter()
                    .map(Val::Table)
                    .collect()
            }
            MonadKind::Powerset => {
                subsets_up_to(&alphabet, bounds.max_list_len).into_iter().map(Val::Set).collect()
            }
            MonadKind::Tree => trees_up_to(&alphabet, bounds.max_tree_depth, true),
            MonadKind::NonemptyTree => trees_up_to(&alphabet, bounds.max_tree_depth, false),
            MonadKind::Free { sig } => {
                signature::enumerate_terms(sig, &alphabet, bounds.max_tree_depth)
            }
        };
        out.sort();
        out
    }

    /// Carrier of M^levels A. Depth-bounded carriers (trees, terms) drop one
    /// level of structural depth when nested within themselves; lists keep
    /// their length bound at every level.
    pub fn carrier_nested(
        &self,
        a: &[Val],
        bounds: &Bounds,
        levels: usize,
    ) -> Result<Vec<Val>, Error> {
        if levels > bounds.max_nest_depth {
            return Err(Error::NestingBound(format!(
                "requested M^{levels} but maxNestDepth = {}",
                bounds.max_nest_depth
            )));
        }
        let eff = Bounds { max_tree_depth: bounds.depth_for_chain(levels), ..bounds.clone() };
        let mut cur = a.to_vec();
        for _ in 0..levels {
            cur = self.carrier(&cur, &eff);
        }
        Ok(cur)
    }

    // -----------------------------------------------------------------------
    // unit / fmap / join
    // -----------------------------------------------------------------------

    pub fn unit(&self, a: &Val) -> Val {
        match &self.kind {
            MonadKind::Identity => a.clone(),
            MonadKind::List | MonadKind::NonemptyList => Val::list(vec![a.clone()]),
            MonadKind::SelfTest(SelfTestMonad::UnitDup) => Val::list(vec![a.clone(), a.clone()]),
            MonadKind::SelfTest(_) => Val::list(vec![a.clone()]),
            MonadKind::Exceptions { .. } => Val::ok(a.clone()),
            MonadKind::Reader { inputs } => {
                Val::Table(FnTable::from_fn(&inputs.values, "", |_| a.clone()))
            }
            MonadKind::Writer { monoid } => Val::pair(monoid.identity.clone(), a.clone()),
            MonadKind::State { states } => Val::Table(FnTable::from_fn(&states.values, "", |s| {
                Val::pair(a.clone(), s.clone())
            })),
            MonadKind::Powerset => Val::set(vec![a.clone()]),
            MonadKind::Tree | MonadKind::NonemptyTree => Val::leaf(a.clone()),
            MonadKind::Free { .. } => signature::term_unit(a),
        }
    }

    /// Structure-preserving map with a fallible value function.
    pub fn fmap_res(
        &self,
        f: &dyn Fn(&Val) -> Result<Val, Error>,
        ma: &Val,
    ) -> Result<Val, Error> {
        match &self.kind {
            MonadKind::Identity => f(ma),
            MonadKind::List | MonadKind::NonemptyList => {
                let items: Result<Vec<Val>, Error> = ma.as_list().iter().map(f).collect();
                Ok(Val::List(items?))
            }
            MonadKind::SelfTest(t) => {
                let mut items: Vec<Val> =
                    ma.as_list().iter().map(f).collect::<Result<_, _>>()?;
                match t {
                    SelfTestMonad::FmapDedup => items.dedup(),
                    SelfTestMonad::FmapAppendFirstImage => {
                        if let Some(first) = ma.as_list().first() {
                            items.push(f(first)?);
                        }
                    }
                    _ => {}
                }
                Ok(Val::List(items))
            }
            MonadKind::Exceptions { .. } => match ma {
                Val::Tagged(tag, Some(v)) if tag == "ok" => Ok(Val::ok(f(v)?)),
                Val::Tagged(tag, Some(_)) if tag == "exc" => Ok(ma.clone()),
                _ => Err(Error::MalformedTerm(format!("not an exceptions value: {ma}"))),
            },
            MonadKind::Reader { .. } => {
                let t = ma.as_table();
                let entries: Result<Vec<Val>, Error> = t.entries.iter().map(f).collect();
                Ok(Val::Table(FnTable::new(t.domain.clone(), "", entries?)))
            }
            MonadKind::Writer { .. } => {
                let (m, x) = ma.as_pair();
                Ok(Val::pair(m.clone(), f(x)?))
            }
            MonadKind::State { .. } => {
                let t = ma.as_table();
                let entries: Result<Vec<Val>, Error> = t
                    .entries
                    .iter()
                    .map(|e| {
                        let (x, s) = e.as_pair();
                        Ok(Val::pair(f(x)?, s.clone()))
                    })
                    .collect();
                Ok(Val::Table(FnTable::new(t.domain.clone(), "", entries?)))
            }
            MonadKind::Powerset => {
                let items: Result<Vec<Val>, Error> = ma.as_set().iter().map(f).collect();
                Ok(Val::set(items?))
            }
            MonadKind::Tree | MonadKind::NonemptyTree => match ma {
                Val::Tree(t) => Ok(Val::Tree(tree_fmap(f, t)?)),
                _ => Err(Error::MalformedTerm(format!("not a tree: {ma}"))),
            },
            MonadKind::Free { .. } => signature::term_fmap_res(f, ma),
        }
    }

    pub fn fmap_with(&self, f: impl Fn(&Val) -> Val, ma: &Val) -> Val {
        self.fmap_res(&|v| Ok(f(v)), ma).expect("infallible map")
    }

    /// fmap through an explicit table; values outside the table's domain are
    /// a broken-table error, never expected on catalog-generated data.
    pub fn fmap(&self, f: &FnTable, ma: &Val) -> Result<Val, Error> {
        self.fmap_res(&|v| f.apply(v).cloned(), ma)
    }

    /// Monad multiplication.
    pub fn join(&self, mma: &Val) -> Result<Val, Error> {
        match &self.kind {
            MonadKind::Identity => Ok(mma.clone()),
            MonadKind::List | MonadKind::NonemptyList => concat_lists(mma.as_list()),
            MonadKind::SelfTest(t) => {
                let items = mma.as_list();
                match t {
                    SelfTestMonad::JoinDropFirst => {
                        concat_lists(if items.is_empty() { items } else { &items[1..] })
                    }
                    SelfTestMonad::JoinReverse => {
                        let rev: Vec<Val> = items.iter().rev().cloned().collect();
                        concat_lists(&rev)
                    }
                    SelfTestMonad::JoinDropSingletonOne => {
                        let marker = Val::list(vec![Val::int(1)]);
                        let kept: Vec<Val> =
                            items.iter().filter(|l| **l != marker).cloned().collect();
                        concat_lists(&kept)
                    }
                    _ => concat_lists(items),
                }
            }
            MonadKind::Exceptions { .. } => match mma {
                Val::Tagged(tag, Some(inner)) if tag == "ok" => Ok((**inner).clone()),
                Val::Tagged(tag, Some(_)) if tag == "exc" => Ok(mma.clone()),
                _ => Err(Error::MalformedTerm(format!("not an exceptions value: {mma}"))),
            },
            MonadKind::Reader { .. } => {
                let u = mma.as_table();
                let entries: Result<Vec<Val>, Error> = u
                    .domain
                    .iter()
                    .zip(&u.entries)
                    .map(|(r, inner)| Ok(inner.as_table().apply(r)?.clone()))
                    .collect();
                Ok(Val::Table(FnTable::new(u.domain.clone(), "", entries?)))
            }
            MonadKind::Writer { monoid } => {
                let (m1, rest) = mma.as_pair();
                let (m2, x) = rest.as_pair();
                Ok(Val::pair(monoid.mul(m1, m2)?, x.clone()))
            }
            MonadKind::State { .. } => {
                let u = mma.as_table();
                let entries: Result<Vec<Val>, Error> = u
                    .domain
                    .iter()
                    .zip(&u.entries)
                    .map(|(_, produced)| {
                        let (inner, s1) = produced.as_pair();
                        Ok(inner.as_table().apply(s1)?.clone())
                    })
                    .collect();
                Ok(Val::Table(FnTable::new(u.domain.clone(), "", entries?)))
            }
            MonadKind::Powerset => {
                let mut union = Vec::new();
                for s in mma.as_set() {
                    union.extend(s.as_set().iter().cloned());
                }
                Ok(Val::set(union))
            }
            MonadKind::Tree | MonadKind::NonemptyTree => match mma {
                Val::Tree(t) => Ok(Val::Tree(tree_graft(t)?)),
                _ => Err(Error::MalformedTerm(format!("not a tree: {mma}"))),
            },
            MonadKind::Free { .. } => signature::term_join(mma),
        }
    }

    // -----------------------------------------------------------------------
    // Derived operations
    // -----------------------------------------------------------------------

    /// bind = join . fmap f, definitionally.
    pub fn bind_res(
        &self,
        ma: &Val,
        f: &dyn Fn(&Val) -> Result<Val, Error>,
    ) -> Result<Val, Error> {
        self.join(&self.fmap_res(f, ma)?)
    }

    pub fn bind(&self, ma: &Val, f: &FnTable) -> Result<Val, Error> {
        self.bind_res(ma, &|v| f.apply(v).cloned())
    }

    pub fn bind_with(&self, ma: &Val, f: impl Fn(&Val) -> Val) -> Val {
        self.bind_res(ma, &|v| Ok(f(v))).expect("infallible bind")
    }

    /// Kleisli composition of tables f : A -> MB and g : B -> MC.
    pub fn kleisli_compose(&self, f: &FnTable, g: &FnTable) -> Result<FnTable, Error> {
        let entries: Result<Vec<Val>, Error> =
            f.entries.iter().map(|mb| self.bind(mb, g)).collect();
        Ok(FnTable::new(f.domain.clone(), g.codomain_name.clone(), entries?))
    }

    /// unit as a table over an explicit domain.
    pub fn unit_table(&self, domain: &[Val]) -> FnTable {
        FnTable::from_fn(domain, "", |v| self.unit(v))
    }
}

fn concat_lists(items: &[Val]) -> Result<Val, Error> {
    let mut out = Vec::new();
    for l in items {
        match l {
            Val::List(inner) => out.extend(inner.iter().cloned()),
            _ => return Err(Error::MalformedTerm(format!("not a list: {l}"))),
        }
    }
    Ok(Val::List(out))
}

fn tree_fmap(f: &dyn Fn(&Val) -> Result<Val, Error>, t: &Tree) -> Result<Tree, Error> {
    Ok(match t {
        Tree::Empty => Tree::Empty,
        Tree::Leaf(v) => Tree::Leaf(Box::new(f(v)?)),
        Tree::Node(l, r) => Tree::Node(Box::new(tree_fmap(f, l)?), Box::new(tree_fmap(f, r)?)),
    })
}

fn tree_graft(t: &Tree) -> Result<Tree, Error> {
    Ok(match t {
        Tree::Empty => Tree::Empty,
        Tree::Leaf(v) => match &**v {
            Val::Tree(inner) => inner.clone(),
            other => return Err(Error::MalformedTerm(format!("leaf payload is not a tree: {other}"))),
        },
        Tree::Node(l, r) => Tree::Node(Box::new(tree_graft(l)?), Box::new(tree_graft(r)?)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(is: &[i64]) -> Vec<Val> {
        is.iter().map(|&i| Val::int(i)).collect()
    }

    #[test]
    fn exceptions_carrier_is_sum() {
        let m = Monad::exceptions("exc1", Universe::of_syms("Exc", ["e1"]));
        let c = m.carrier(&ints(&[0, 1]), &Bounds::default());
        assert_eq!(
            c,
            vec![Val::ok(Val::int(0)), Val::ok(Val::int(1)), Val::exc(Val::sym("e1"))]
        );
    }

    #[test]
    fn list_carrier_bounded() {
        let c = Monad::list().carrier(&ints(&[0]), &Bounds::default());
        assert_eq!(
            c,
            vec![
                Val::list(vec![]),
                Val::list(vec![Val::int(0)]),
                Val::list(vec![Val::int(0), Val::int(0)])
            ]
        );
    }

    #[test]
    fn powerset_carrier_exhaustive_at_two() {
        let c = Monad::powerset().carrier(&ints(&[0, 1]), &Bounds::default());
        assert_eq!(
            c,
            vec![
                Val::set(vec![]),
                Val::set(vec![Val::int(0)]),
                Val::set(vec![Val::int(1)]),
                Val::set(vec![Val::int(0), Val::int(1)])
            ]
        );
    }

    #[test]
    fn units() {
        assert_eq!(Monad::list().unit(&Val::int(3)), Val::list(vec![Val::int(3)]));
        let w = Monad::writer("writer_nat", MonoidSpec::nat_saturating(15));
        assert_eq!(w.unit(&Val::int(7)), Val::pair(Val::int(0), Val::int(7)));
        assert_eq!(Monad::tree().unit(&Val::sym("x")), Val::leaf(Val::sym("x")));
    }

    #[test]
    fn fmap_examples() {
        let a = ints(&[1, 2]);
        let succ = FnTable::from_fn(&a, "", |v| match v {
            Val::Atom(crate::value::Atom::Int(i)) => Val::int(i + 1),
            _ => unreachable!(),
        });
        let l = Monad::list();
        assert_eq!(l.fmap(&succ, &Val::list(a.clone())).unwrap(), Val::list(ints(&[2, 3])));

        let e = Monad::exceptions("exc1", Universe::of_syms("Exc", ["e1"]));
        let bad = Val::exc(Val::sym("e1"));
        assert_eq!(e.fmap(&succ, &bad).unwrap(), bad);

        let t = Monad::tree();
        let input = Val::node(Val::leaf(Val::int(1)), Val::leaf(Val::int(2)));
        let expect = Val::node(Val::leaf(Val::int(2)), Val::leaf(Val::int(3)));
        assert_eq!(t.fmap(&succ, &input).unwrap(), expect);
    }

    #[test]
    fn fmap_outside_domain_errors() {
        let succ = FnTable::identity(&ints(&[1]), "");
        assert!(Monad::list().fmap(&succ, &Val::list(ints(&[2]))).is_err());
    }

    #[test]
    fn join_examples() {
        let l = Monad::list();
        let nested =
            Val::list(vec![Val::list(ints(&[1])), Val::list(ints(&[2, 3]))]);
        assert_eq!(l.join(&nested).unwrap(), Val::list(ints(&[1, 2, 3])));

        let p = Monad::powerset();
        let sets = Val::set(vec![
            Val::set(ints(&[0])),
            Val::set(ints(&[0, 1])),
        ]);
        assert_eq!(p.join(&sets).unwrap(), Val::set(ints(&[0, 1])));

        let w = Monad::writer("writer_nat", MonoidSpec::nat_saturating(15));
        let v = Val::pair(Val::int(5), Val::pair(Val::int(7), Val::sym("x")));
        assert_eq!(w.join(&v).unwrap(), Val::pair(Val::int(12), Val::sym("x")));
    }

    #[test]
    fn bind_examples() {
        let l = Monad::list();
        let a = ints(&[1, 3]);
        let f = FnTable::from_fn(&a, "", |v| match v {
            Val::Atom(crate::value::Atom::Int(i)) => Val::list(vec![Val::int(*i), Val::int(2 * i)]),
            _ => unreachable!(),
        });
        assert_eq!(l.bind(&Val::list(a.clone()), &f).unwrap(), Val::list(ints(&[1, 2, 3, 6])));

        let e = Monad::exceptions("exc2", Universe::of_syms("Exc", ["e1", "e2"]));
        let g = FnTable::from_fn(&[Val::sym("a")], "", |_| Val::exc(Val::sym("e2")));
        assert_eq!(
            e.bind(&Val::ok(Val::sym("a")), &g).unwrap(),
            Val::exc(Val::sym("e2"))
        );

        let id = Monad::identity();
        let h = FnTable::from_fn(&[Val::int(1)], "", |v| Val::pair(v.clone(), v.clone()));
        assert_eq!(id.bind(&Val::int(1), &h).unwrap(), Val::pair(Val::int(1), Val::int(1)));
    }

    #[test]
    fn kleisli_compose_examples() {
        let l = Monad::list();
        let a = ints(&[1]);
        let b = ints(&[1, 2]);
        let double = |v: &Val| match v {
            Val::Atom(crate::value::Atom::Int(i)) => (*i, 2 * i),
            _ => unreachable!(),
        };
        let f = FnTable::from_fn(&a, "", |v| {
            let (x, y) = double(v);
            Val::list(vec![Val::int(x), Val::int(y)])
        });
        let g = FnTable::from_fn(&b, "", |v| match v {
            Val::Atom(crate::value::Atom::Int(i)) => Val::list(vec![Val::int(*i), Val::int(3 * i)]),
            _ => unreachable!(),
        });
        let fg = l.kleisli_compose(&f, &g).unwrap();
        assert_eq!(fg.apply(&Val::int(1)).unwrap(), &Val::list(ints(&[1, 3, 2, 6])));

        // unit-as-table is a left identity for Kleisli composition
        let unit = l.unit_table(&b);
        let ug = l.kleisli_compose(&unit, &g).unwrap();
        assert_eq!(ug, g);
    }

    #[test]
    fn join_is_bind_with_identity_table() {
        let bounds = Bounds::default();
        let a = ints(&[0, 1]);
        for m in [Monad::list(), Monad::powerset(), Monad::maybe()] {
            let inner = m.carrier(&a, &bounds);
            let nested = m.carrier_nested(&a, &bounds, 2).unwrap();
            let id = FnTable::identity(&inner, "");
            for mma in &nested {
                assert_eq!(m.join(mma).unwrap(), m.bind(mma, &id).unwrap(), "monad {}", m.name);
            }
        }
    }

    #[test]
    fn nesting_bound_is_enforced() {
        let bounds = Bounds::default();
        let a = ints(&[0]);
        assert!(Monad::list().carrier_nested(&a, &bounds, 3).is_err());
        assert!(Monad::list().carrier_nested(&a, &bounds, 2).is_ok());
    }

    #[test]
    fn nonempty_variants_reject_empties() {
        let bounds = Bounds::default();
        let a = ints(&[0, 1]);
        assert!(Monad::nonempty_list()
            .carrier(&a, &bounds)
            .iter()
            .all(|l| !l.as_list().is_empty()));
        assert!(!Monad::nonempty_tree()
            .carrier(&a, &bounds)
            .contains(&Val::empty_tree()));
        assert!(Monad::tree().carrier(&a, &bounds).contains(&Val::empty_tree()));
    }

    #[test]
    fn state_and_reader_carriers_are_function_tables() {
        let s2 = Universe::of_syms("S", ["s0", "s1"]);
        let m = Monad::state("state", s2.clone());
        let a = ints(&[0, 1]);
        let c = m.carrier(&a, &Bounds::default());
        assert_eq!(c.len(), 16); // (|A|*|S|)^|S|
        let r = Monad::reader("reader", s2);
        assert_eq!(r.carrier(&a, &Bounds::default()).len(), 4); // |A|^|S|
    }

    #[test]
    fn monoid_load_failures() {
        // first projection declared commutative: witness (a, b)
        let carrier = Universe::of_syms("FP", ["e", "a", "b"]);
        let e = Val::sym("e");
        let err = MonoidSpec::from_fn("fp_comm", carrier, e.clone(), true, move |x, y| {
            if *x == e {
                y.clone()
            } else {
                x.clone()
            }
        })
        .unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("commutativity"), "{msg}");
        assert!(msg.contains("(a, b)"), "{msg}");

        // a non-associative table never loads
        let c2 = Universe::of_ints("C2", 0..2);
        let bad = MonoidSpec::from_fn("subtraction_mod2_like", c2, Val::int(0), false, |x, y| {
            match (x, y) {
                (Val::Atom(crate::value::Atom::Int(a)), Val::Atom(crate::value::Atom::Int(b))) => {
                    Val::int((a + b + a * b + a) % 2) // arbitrary non-associative junk
                }
                _ => unreachable!(),
            }
        });
        assert!(bad.is_err());
    }

    #[test]
    fn writer_first_projection_loads_as_noncommutative() {
        let fp = MonoidSpec::first_projection();
        assert!(!fp.commutative);
        let a = Val::sym("a");
        let b = Val::sym("b");
        assert_eq!(fp.mul(&a, &b).unwrap(), a);
        assert_eq!(fp.mul(&b, &a).unwrap(), b);
    }
}
