//! Universal value representation and deterministic finite enumeration.
//!
//! Every carrier element, function, and counterexample in this crate is a
//! [`Val`]. Values are immutable, structurally compared, and totally ordered;
//! the order drives canonical sets, enumeration order, and witness minimality.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

use crate::error::Error;

/// Atomic values: 64-bit integers or interned-by-copy symbols.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Atom {
    Int(i64),
    Sym(String),
}

/// Binary trees with values at the leaves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Tree {
    Empty,
    Leaf(Box<Val>),
    Node(Box<Tree>, Box<Tree>),
}

/// A total function presented as an explicit finite table.
///
/// Equality and ordering compare (domain, entries) pointwise; `codomain_name`
/// is descriptive metadata only. Iteration order is domain order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FnTable {
    pub domain: Vec<Val>,
    pub codomain_name: String,
    pub entries: Vec<Val>,
}

/// The closed universal value type.
///
/// `Set` payloads are kept sorted and duplicate-free (canonical form); build
/// them through [`Val::set`] or [`canon`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Val {
    Atom(Atom),
    Unit,
    Pair(Box<Val>, Box<Val>),
    Tuple(Vec<Val>),
    List(Vec<Val>),
    Set(Vec<Val>),
    Tree(Tree),
    Tagged(String, Option<Box<Val>>),
    Table(FnTable),
}

impl FnTable {
    pub fn new(domain: Vec<Val>, codomain_name: impl Into<String>, entries: Vec<Val>) -> Self {
        assert_eq!(domain.len(), entries.len(), "table must be total on its domain");
        FnTable { domain, codomain_name: codomain_name.into(), entries }
    }

    /// Build a table over `domain` by evaluating `f` pointwise.
    pub fn from_fn(domain: &[Val], codomain_name: &str, mut f: impl FnMut(&Val) -> Val) -> Self {
        let entries = domain.iter().map(|v| f(v)).collect();
        FnTable::new(domain.to_vec(), codomain_name, entries)
    }

    /// Look up `v`; errors on values outside the domain.
    pub fn apply(&self, v: &Val) -> Result<&Val, Error> {
        match self.domain.iter().position(|d| d == v) {
            Some(i) => Ok(&self.entries[i]),
            None => Err(Error::PartialApplication(v.to_string())),
        }
    }

    pub fn identity(domain: &[Val], name: &str) -> Self {
        FnTable::from_fn(domain, name, |v| v.clone())
    }
}

impl PartialEq for FnTable {
    fn eq(&self, other: &Self) -> bool {
        self.domain == other.domain && self.entries == other.entries
    }
}
impl Eq for FnTable {}

// ---------------------------------------------------------------------------
// Global total order
// ---------------------------------------------------------------------------

/// Shortlex on strings: length first, then lexicographic.
fn cmp_str(a: &str, b: &str) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Shortlex on value slices.
fn cmp_slice(a: &[Val], b: &[Val]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

impl Ord for Atom {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Atom::Int(a), Atom::Int(b)) => a.cmp(b),
            (Atom::Int(_), Atom::Sym(_)) => Ordering::Less,
            (Atom::Sym(_), Atom::Int(_)) => Ordering::Greater,
            (Atom::Sym(a), Atom::Sym(b)) => cmp_str(a, b),
        }
    }
}
impl PartialOrd for Atom {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Tree {
    fn rank(&self) -> u8 {
        match self {
            Tree::Empty => 0,
            Tree::Leaf(_) => 1,
            Tree::Node(..) => 2,
        }
    }
}

impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank()).then_with(|| match (self, other) {
            (Tree::Empty, Tree::Empty) => Ordering::Equal,
            (Tree::Leaf(a), Tree::Leaf(b)) => a.cmp(b),
            (Tree::Node(al, ar), Tree::Node(bl, br)) => al.cmp(bl).then_with(|| ar.cmp(br)),
            _ => unreachable!("ranks equal"),
        })
    }
}
impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FnTable {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_slice(&self.domain, &other.domain).then_with(|| cmp_slice(&self.entries, &other.entries))
    }
}
impl PartialOrd for FnTable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Val {
    fn rank(&self) -> u8 {
        match self {
            Val::Atom(_) => 0,
            Val::Unit => 1,
            Val::Pair(..) => 2,
            Val::Tuple(_) => 3,
            Val::List(_) => 4,
            Val::Set(_) => 5,
            Val::Tree(_) => 6,
            Val::Tagged(..) => 7,
            Val::Table(_) => 8,
        }
    }
}

impl Ord for Val {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank()).then_with(|| match (self, other) {
            (Val::Atom(a), Val::Atom(b)) => a.cmp(b),
            (Val::Unit, Val::Unit) => Ordering::Equal,
            (Val::Pair(a1, a2), Val::Pair(b1, b2)) => a1.cmp(b1).then_with(|| a2.cmp(b2)),
            (Val::Tuple(a), Val::Tuple(b)) => cmp_slice(a, b),
            (Val::List(a), Val::List(b)) => cmp_slice(a, b),
            (Val::Set(a), Val::Set(b)) => cmp_slice(a, b),
            (Val::Tree(a), Val::Tree(b)) => a.cmp(b),
            (Val::Tagged(ta, pa), Val::Tagged(tb, pb)) => {
                cmp_str(ta, tb).then_with(|| pa.cmp(pb))
            }
            (Val::Table(a), Val::Table(b)) => a.cmp(b),
            _ => unreachable!("ranks equal"),
        })
    }
}
impl PartialOrd for Val {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The global total order on values. `Equal` iff structural equality.
pub fn val_order(a: &Val, b: &Val) -> Ordering {
    a.cmp(b)
}

// ---------------------------------------------------------------------------
// Construction helpers
// ---------------------------------------------------------------------------

impl Val {
    pub fn int(i: i64) -> Val {
        Val::Atom(Atom::Int(i))
    }
    pub fn sym(s: impl Into<String>) -> Val {
        Val::Atom(Atom::Sym(s.into()))
    }
    pub fn pair(a: Val, b: Val) -> Val {
        Val::Pair(Box::new(a), Box::new(b))
    }
    pub fn tuple(items: Vec<Val>) -> Val {
        Val::Tuple(items)
    }
    pub fn list(items: Vec<Val>) -> Val {
        Val::List(items)
    }
    /// Canonical set: sorts and deduplicates.
    pub fn set(mut items: Vec<Val>) -> Val {
        items = items.into_iter().map(canon).collect();
        items.sort();
        items.dedup();
        Val::Set(items)
    }
    pub fn leaf(v: Val) -> Val {
        Val::Tree(Tree::Leaf(Box::new(v)))
    }
    pub fn node(l: Val, r: Val) -> Val {
        match (l, r) {
            (Val::Tree(l), Val::Tree(r)) => Val::Tree(Tree::Node(Box::new(l), Box::new(r))),
            _ => panic!("node children must be trees"),
        }
    }
    pub fn empty_tree() -> Val {
        Val::Tree(Tree::Empty)
    }
    pub fn tagged(tag: impl Into<String>, payload: Option<Val>) -> Val {
        Val::Tagged(tag.into(), payload.map(Box::new))
    }
    /// `ok` injection of the exceptions monad.
    pub fn ok(v: Val) -> Val {
        Val::tagged("ok", Some(v))
    }
    /// `exc` injection of the exceptions monad.
    pub fn exc(e: Val) -> Val {
        Val::tagged("exc", Some(e))
    }
    pub fn table(t: FnTable) -> Val {
        Val::Table(t)
    }

    pub fn as_table(&self) -> &FnTable {
        match self {
            Val::Table(t) => t,
            _ => panic!("expected a function table, got {self}"),
        }
    }
    pub fn as_list(&self) -> &[Val] {
        match self {
            Val::List(items) => items,
            _ => panic!("expected a list, got {self}"),
        }
    }
    pub fn as_set(&self) -> &[Val] {
        match self {
            Val::Set(items) => items,
            _ => panic!("expected a set, got {self}"),
        }
    }
    pub fn as_pair(&self) -> (&Val, &Val) {
        match self {
            Val::Pair(a, b) => (a, b),
            _ => panic!("expected a pair, got {self}"),
        }
    }
}

/// Canonical form: recursively sorts and deduplicates every set payload.
/// Idempotent; identity on already-canonical values.
pub fn canon(v: Val) -> Val {
    match v {
        Val::Atom(_) | Val::Unit => v,
        Val::Pair(a, b) => Val::pair(canon(*a), canon(*b)),
        Val::Tuple(items) => Val::Tuple(items.into_iter().map(canon).collect()),
        Val::List(items) => Val::List(items.into_iter().map(canon).collect()),
        Val::Set(items) => Val::set(items),
        Val::Tree(t) => Val::Tree(canon_tree(t)),
        Val::Tagged(tag, payload) => Val::Tagged(tag, payload.map(|p| Box::new(canon(*p)))),
        Val::Table(t) => Val::Table(FnTable {
            domain: t.domain.into_iter().map(canon).collect(),
            codomain_name: t.codomain_name,
            entries: t.entries.into_iter().map(canon).collect(),
        }),
    }
}

fn canon_tree(t: Tree) -> Tree {
    match t {
        Tree::Empty => Tree::Empty,
        Tree::Leaf(v) => Tree::Leaf(Box::new(canon(*v))),
        Tree::Node(l, r) => Tree::Node(Box::new(canon_tree(*l)), Box::new(canon_tree(*r))),
    }
}

// ---------------------------------------------------------------------------
// Display (paper surface syntax)
// ---------------------------------------------------------------------------

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Int(i) => write!(f, "{i}"),
            Atom::Sym(s) => write!(f, "{s}"),
        }
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Empty => write!(f, "E"),
            Tree::Leaf(v) => write!(f, "L {v}"),
            Tree::Node(l, r) => write!(f, "N({l},{r})"),
        }
    }
}

fn write_joined(f: &mut fmt::Formatter<'_>, items: &[Val]) -> fmt::Result {
    for (i, v) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

impl fmt::Display for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::Atom(a) => write!(f, "{a}"),
            Val::Unit => write!(f, "()"),
            Val::Pair(a, b) => write!(f, "({a}, {b})"),
            Val::Tuple(items) => {
                if items.len() == 1 {
                    write!(f, "({},)", items[0])
                } else {
                    write!(f, "(")?;
                    write_joined(f, items)?;
                    write!(f, ")")
                }
            }
            Val::List(items) => {
                write!(f, "[")?;
                write_joined(f, items)?;
                write!(f, "]")
            }
            Val::Set(items) => {
                write!(f, "{{")?;
                write_joined(f, items)?;
                write!(f, "}}")
            }
            Val::Tree(t) => write!(f, "{t}"),
            Val::Tagged(tag, payload) => match (tag.as_str(), payload) {
                ("ok", Some(v)) => write!(f, "Just {v}"),
                ("exc", Some(v)) if **v == Val::sym("nothing") => write!(f, "Nothing"),
                ("exc", Some(v)) => write!(f, "exc {v}"),
                ("var", Some(v)) => write!(f, "L {v}"),
                (_, Some(v)) => match &**v {
                    Val::Tuple(args) if args.is_empty() => write!(f, "{tag}"),
                    Val::Tuple(args) => {
                        write!(f, "{tag}(")?;
                        write_joined(f, args)?;
                        write!(f, ")")
                    }
                    other => write!(f, "{tag}({other})"),
                },
                (_, None) => write!(f, "{tag}"),
            },
            Val::Table(t) => {
                write!(f, "fn(")?;
                for (i, (d, e)) in t.domain.iter().zip(&t.entries).enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{d} -> {e}")?;
                }
                write!(f, ")")
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Universes and bounds
// ---------------------------------------------------------------------------

/// A named finite set of distinct values, in declared order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Universe {
    pub name: String,
    pub values: Vec<Val>,
}

impl Universe {
    pub fn new(name: impl Into<String>, values: Vec<Val>) -> Result<Self, Error> {
        let name = name.into();
        let values: Vec<Val> = values.into_iter().map(canon).collect();
        let mut seen = values.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != values.len() {
            return Err(Error::Universe(format!("universe {name} has duplicate values")));
        }
        Ok(Universe { name, values })
    }

    pub fn of_ints(name: &str, ints: impl IntoIterator<Item = i64>) -> Universe {
        Universe::new(name, ints.into_iter().map(Val::int).collect()).expect("distinct ints")
    }

    pub fn of_syms<'a>(name: &str, syms: impl IntoIterator<Item = &'a str>) -> Universe {
        Universe::new(name, syms.into_iter().map(Val::sym).collect()).expect("distinct symbols")
    }
}

/// Values of a universe in declared order (stable across runs).
pub fn enumerate_universe(u: &Universe) -> Vec<Val> {
    u.values.clone()
}

/// Enumeration bounds. These finitize quantifiers only; operation outputs are
/// never bound-checked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub max_list_len: usize,
    pub max_tree_depth: usize,
    pub max_fn_enum: usize,
    pub sample_seed: u64,
    pub max_nest_depth: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_list_len: 2,
            max_tree_depth: 2,
            max_fn_enum: 64,
            sample_seed: 1,
            max_nest_depth: 2,
        }
    }
}

impl Bounds {
    pub fn validate(&self) -> Result<(), Error> {
        if self.max_fn_enum < 1 {
            return Err(Error::Bounds("maxFnEnum must be >= 1".into()));
        }
        if self.max_nest_depth < 1 {
            return Err(Error::Bounds("maxNestDepth must be >= 1".into()));
        }
        Ok(())
    }

    /// Structural depth used for depth-bounded carriers (trees, terms) when a
    /// carrier is nested within itself `levels` deep. Lists keep their length
    /// bound at every level; depth-bounded carriers drop one level of depth to
    /// keep nested quantifier spaces desk-sized.
    pub fn depth_for_chain(&self, levels: usize) -> usize {
        if levels >= 2 {
            self.max_tree_depth.saturating_sub(1).max(1)
        } else {
            self.max_tree_depth
        }
    }
}

// ---------------------------------------------------------------------------
// Deterministic function enumeration
// ---------------------------------------------------------------------------

/// SplitMix64: deterministic, platform-independent stream of pseudo-random
/// 64-bit words.
pub(crate) fn splitmix64(state: u64) -> u64 {
    let mut z = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub(crate) fn mix(seed: u64, salt: u64) -> u64 {
    splitmix64(seed ^ splitmix64(salt))
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// (a * b) mod n without overflow.
fn mul_mod(mut a: u128, mut b: u128, n: u128) -> u128 {
    a %= n;
    let mut acc: u128 = 0;
    while b > 0 {
        if b & 1 == 1 {
            acc = (acc + a) % n;
        }
        a = (a << 1) % n;
        b >>= 1;
    }
    acc
}

fn table_at_index(a: &[Val], b: &[Val], codomain_name: &str, mut idx: u128) -> FnTable {
    let base = b.len() as u128;
    let mut digits = vec![0usize; a.len()];
    for slot in digits.iter_mut().rev() {
        *slot = (idx % base) as usize;
        idx /= base;
    }
    let entries = digits.into_iter().map(|d| b[d].clone()).collect();
    FnTable::new(a.to_vec(), codomain_name, entries)
}

/// All total functions A -> B when |B|^|A| fits the budget, in lexicographic
/// order of their entry vectors; otherwise a deterministic seeded sample of
/// exactly `cap` distinct tables (rejection-free indexed sampling over the
/// mixed-radix table space).
pub fn enumerate_functions_capped(
    a: &[Val],
    b: &[Val],
    bounds: &Bounds,
    cap: usize,
) -> Result<Vec<FnTable>, Error> {
    let codomain_name = "";
    if a.is_empty() {
        return Ok(vec![FnTable::new(vec![], codomain_name, vec![])]);
    }
    if b.is_empty() {
        return Err(Error::NoTotalFunctions);
    }
    let count = (b.len() as u128).checked_pow(a.len() as u32);
    match count {
        Some(n) if n <= cap as u128 => {
            Ok((0..n).map(|i| table_at_index(a, b, codomain_name, i)).collect())
        }
        Some(n) => {
            // Affine bijection j -> (m*j + c) mod n visits cap distinct indices.
            let seed = bounds.sample_seed;
            let mut m = (mix(seed, 0xA11E) as u128 % n).max(1);
            while gcd(m, n) != 1 {
                m = (m + 1) % n;
                if m == 0 {
                    m = 1;
                }
            }
            let c = mix(seed, 0x0FF5E7) as u128 % n;
            Ok((0..cap as u128)
                .map(|j| table_at_index(a, b, codomain_name, (mul_mod(m, j, n) + c) % n))
                .collect())
        }
        None => {
            // Space exceeds u128; draw digitwise and deduplicate. Deterministic,
            // and collisions are vanishingly unlikely at this size.
            let seed = bounds.sample_seed;
            let mut out: Vec<FnTable> = Vec::with_capacity(cap);
            let mut j: u64 = 0;
            while out.len() < cap {
                let entries: Vec<Val> = (0..a.len())
                    .map(|i| b[(mix(seed, j.wrapping_mul(0x1_0001).wrapping_add(i as u64)) as usize) % b.len()].clone())
                    .collect();
                let t = FnTable::new(a.to_vec(), codomain_name, entries);
                if !out.contains(&t) {
                    out.push(t);
                }
                j += 1;
            }
            Ok(out)
        }
    }
}

/// [`enumerate_functions_capped`] with the bounds' own `max_fn_enum` budget.
pub fn enumerate_functions(a: &[Val], b: &[Val], bounds: &Bounds) -> Result<Vec<FnTable>, Error> {
    enumerate_functions_capped(a, b, bounds, bounds.max_fn_enum)
}

/// Whether the function space A -> B fits `max_fn_enum` (exhaustive) or will
/// be sampled.
pub fn function_space_exhaustive(a: &[Val], b: &[Val], cap: usize) -> bool {
    if a.is_empty() {
        return true;
    }
    match (b.len() as u128).checked_pow(a.len() as u32) {
        Some(n) => n <= cap as u128,
        None => false,
    }
}

// ---------------------------------------------------------------------------
// Shared enumeration helpers (used by carrier enumerators)
// ---------------------------------------------------------------------------

/// All lists over `alphabet` of length <= `max_len`, in shortlex order when
/// the alphabet is sorted.
pub(crate) fn lists_up_to(alphabet: &[Val], max_len: usize) -> Vec<Vec<Val>> {
    let mut out: Vec<Vec<Val>> = vec![vec![]];
    let mut layer: Vec<Vec<Val>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * alphabet.len());
        for prefix in &layer {
            for v in alphabet {
                let mut l = prefix.clone();
                l.push(v.clone());
                next.push(l);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// All subsets of `alphabet` of cardinality <= `max_size`, canonical, sorted.
pub(crate) fn subsets_up_to(alphabet: &[Val], max_size: usize) -> Vec<Vec<Val>> {
    let mut sorted = alphabet.to_vec();
    sorted.sort();
    let mut out: Vec<Vec<Val>> = vec![vec![]];
    let mut layer: Vec<(usize, Vec<Val>)> = vec![(0, vec![])];
    for _ in 0..max_size {
        let mut next = Vec::new();
        for (start, subset) in &layer {
            for (i, v) in sorted.iter().enumerate().skip(*start) {
                let mut s = subset.clone();
                s.push(v.clone());
                next.push((i + 1, s));
            }
        }
        out.extend(next.iter().map(|(_, s)| s.clone()));
        layer = next;
    }
    out.sort_by(|x, y| cmp_slice(x, y));
    out
}
