//! Finitary signatures and terms of the free polynomial monad.
//!
//! Terms are encoded as tagged values: a variable `x` is `Tagged("var", x)`,
//! an operation `ω(t1,…,tn)` is `Tagged(ω, Tuple[t1,…,tn])` (constants carry
//! an empty tuple). Grafting is the free-monad join.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::value::Val;

/// Tags that cannot be used as operation symbols.
const RESERVED: [&str; 3] = ["var", "ok", "exc"];

/// A finitary signature: named operation symbols with arities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureSpec {
    pub name: String,
    pub ops: Vec<(String, usize)>,
}

impl SignatureSpec {
    pub fn new(name: impl Into<String>, ops: Vec<(String, usize)>) -> Result<Self, Error> {
        let name = name.into();
        let mut syms: Vec<&str> = ops.iter().map(|(s, _)| s.as_str()).collect();
        syms.sort_unstable();
        syms.dedup();
        if syms.len() != ops.len() {
            return Err(Error::Signature(name, "duplicate operation symbols".into()));
        }
        for (s, _) in &ops {
            if RESERVED.contains(&s.as_str()) {
                return Err(Error::Signature(name, format!("operation symbol {s} is reserved")));
            }
        }
        Ok(SignatureSpec { name, ops })
    }

    pub fn arity(&self, sym: &str) -> Option<usize> {
        self.ops.iter().find(|(s, _)| s == sym).map(|(_, a)| *a)
    }

    /// The binary-tree signature {N/2, E/0}.
    pub fn binary_tree() -> SignatureSpec {
        SignatureSpec::new("V", vec![("N".into(), 2), ("E".into(), 0)]).unwrap()
    }

    /// The nonempty-binary-tree signature {N/2}.
    pub fn nonempty_binary_tree() -> SignatureSpec {
        SignatureSpec::new("Vplus", vec![("N".into(), 2)]).unwrap()
    }
}

/// A variable term.
pub fn var(v: Val) -> Val {
    Val::tagged("var", Some(v))
}

/// An operation term; children must match the symbol's arity (checked by
/// [`validate_term`], not here).
pub fn op(sym: &str, children: Vec<Val>) -> Val {
    Val::tagged(sym, Some(Val::Tuple(children)))
}

/// Borrowed view of a term's top constructor.
pub enum TermView<'a> {
    Var(&'a Val),
    Op(&'a str, &'a [Val]),
}

/// Destructure a term-encoded value.
pub fn dest(t: &Val) -> Result<TermView<'_>, Error> {
    match t {
        Val::Tagged(tag, Some(payload)) if tag == "var" => Ok(TermView::Var(payload)),
        Val::Tagged(tag, Some(payload)) => match &**payload {
            Val::Tuple(children) => Ok(TermView::Op(tag, children)),
            _ => Err(Error::MalformedTerm(t.to_string())),
        },
        _ => Err(Error::MalformedTerm(t.to_string())),
    }
}

/// Check arities recursively against the signature.
pub fn validate_term(sig: &SignatureSpec, t: &Val) -> Result<(), Error> {
    match dest(t)? {
        TermView::Var(_) => Ok(()),
        TermView::Op(sym, children) => {
            let arity = sig
                .arity(sym)
                .ok_or_else(|| Error::MalformedTerm(format!("unknown operation {sym}")))?;
            if arity != children.len() {
                return Err(Error::MalformedTerm(format!(
                    "operation {sym} expects {arity} children, got {}",
                    children.len()
                )));
            }
            children.iter().try_for_each(|c| validate_term(sig, c))
        }
    }
}

/// Operator-nesting depth: variables and constants are depth 0, an operation
/// node with children is one more than its deepest child.
pub fn term_depth(t: &Val) -> Result<usize, Error> {
    match dest(t)? {
        TermView::Var(_) => Ok(0),
        TermView::Op(_, children) => {
            let mut depth = 0;
            for c in children {
                depth = depth.max(term_depth(c)? + 1);
            }
            Ok(depth)
        }
    }
}

/// The free-monad unit.
pub fn term_unit(a: &Val) -> Val {
    var(a.clone())
}

/// Relabel variables through `f`.
pub fn term_fmap_res(
    f: &dyn Fn(&Val) -> Result<Val, Error>,
    t: &Val,
) -> Result<Val, Error> {
    match dest(t)? {
        TermView::Var(v) => Ok(var(f(v)?)),
        TermView::Op(sym, children) => {
            let mapped: Result<Vec<Val>, Error> =
                children.iter().map(|c| term_fmap_res(f, c)).collect();
            Ok(op(sym, mapped?))
        }
    }
}

pub fn term_fmap(f: impl Fn(&Val) -> Val, t: &Val) -> Result<Val, Error> {
    term_fmap_res(&|v| Ok(f(v)), t)
}

/// Grafting: replace every variable (which must hold a term) by the term it
/// holds.
pub fn term_join(tt: &Val) -> Result<Val, Error> {
    match dest(tt)? {
        TermView::Var(inner) => {
            // The variable payload is itself a term of the inner layer.
            dest(inner)?;
            Ok(inner.clone())
        }
        TermView::Op(sym, children) => {
            let grafted: Result<Vec<Val>, Error> = children.iter().map(term_join).collect();
            Ok(op(sym, grafted?))
        }
    }
}

/// All terms over variables from `a` with operator nesting <= `depth`,
/// complete for the bound, sorted by the global value order.
pub fn enumerate_terms(sig: &SignatureSpec, a: &[Val], depth: usize) -> Vec<Val> {
    let mut alphabet = a.to_vec();
    alphabet.sort();
    let mut layer: Vec<Val> = alphabet.iter().map(|v| var(v.clone())).collect();
    for (sym, arity) in &sig.ops {
        if *arity == 0 {
            layer.push(op(sym, vec![]));
        }
    }
    let mut all = layer.clone();
    for _ in 0..depth {
        let mut next = layer.clone();
        for (sym, arity) in &sig.ops {
            if *arity == 0 {
                continue;
            }
            // All tuples of children drawn from the previous layer.
            let mut stacks: Vec<Vec<Val>> = vec![vec![]];
            for _ in 0..*arity {
                let mut grown = Vec::with_capacity(stacks.len() * layer.len());
                for st in &stacks {
                    for c in &layer {
                        let mut s = st.clone();
                        s.push(c.clone());
                        grown.push(s);
                    }
                }
                stacks = grown;
            }
            for children in stacks {
                next.push(op(sym, children));
            }
        }
        next.sort();
        next.dedup();
        layer = next;
        all = layer.clone();
    }
    all.sort();
    all.dedup();
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerate_depth_one_single_var() {
        let sig = SignatureSpec::nonempty_binary_tree();
        let x = Val::sym("x");
        let terms = enumerate_terms(&sig, &[x.clone()], 1);
        assert_eq!(terms.len(), 2);
        assert!(terms.contains(&var(x.clone())));
        assert!(terms.contains(&op("N", vec![var(x.clone()), var(x)])));
    }

    #[test]
    fn enumerate_constants_only() {
        let sig = SignatureSpec::binary_tree();
        let terms = enumerate_terms(&sig, &[], 1);
        let e = op("E", vec![]);
        assert_eq!(terms, {
            let mut expect = vec![e.clone(), op("N", vec![e.clone(), e])];
            expect.sort();
            expect
        });
        assert_eq!(terms.len(), 2);
    }

    #[test]
    fn enumerate_counts_two_vars() {
        let sig = SignatureSpec::nonempty_binary_tree();
        let a = [Val::sym("x"), Val::sym("y")];
        let terms = enumerate_terms(&sig, &a, 1);
        assert_eq!(terms.len(), 6); // 2 vars + 4 N-terms
    }

    #[test]
    fn join_examples() {
        let x = Val::sym("x");
        let y = Val::sym("y");
        let inner = op("N", vec![var(x.clone()), var(y.clone())]);
        assert_eq!(term_join(&var(inner.clone())).unwrap(), inner);
        let nested = op("N", vec![var(var(x.clone())), var(var(y.clone()))]);
        assert_eq!(term_join(&nested).unwrap(), op("N", vec![var(x), var(y)]));
    }

    #[test]
    fn fmap_relabels() {
        let t = op("N", vec![var(Val::int(1)), var(Val::int(2))]);
        let succ = |v: &Val| match v {
            Val::Atom(crate::value::Atom::Int(i)) => Val::int(i + 1),
            _ => v.clone(),
        };
        assert_eq!(
            term_fmap(succ, &t).unwrap(),
            op("N", vec![var(Val::int(2)), var(Val::int(3))])
        );
    }

    #[test]
    fn reserved_symbols_rejected() {
        assert!(SignatureSpec::new("bad", vec![("var".into(), 1)]).is_err());
        assert!(SignatureSpec::new("dup", vec![("N".into(), 2), ("N".into(), 1)]).is_err());
    }

    #[test]
    fn validate_checks_arity() {
        let sig = SignatureSpec::binary_tree();
        let bad = op("N", vec![var(Val::int(1))]);
        assert!(validate_term(&sig, &bad).is_err());
        assert!(validate_term(&sig, &op("E", vec![])).is_ok());
    }

    #[test]
    fn depth_matches_convention() {
        let e = op("E", vec![]);
        assert_eq!(term_depth(&e).unwrap(), 0);
        assert_eq!(term_depth(&var(Val::int(1))).unwrap(), 0);
        assert_eq!(term_depth(&op("N", vec![e.clone(), e])).unwrap(), 1);
    }
}
