//! Heyting-valued names over a finite formal topology.
//!
//! A name is a finite function from names to frame elements. Unbounded
//! quantifiers range over a finite [`NameUniverse`]; every statement about
//! the full universe of names is tested in that truncated form.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::{DefaultHasher, Hash, Hasher};
use std::sync::Arc;

use thiserror::Error;

use crate::budget::{Budget, BudgetExceeded};
use crate::formula::{parse, Formula, Term};
use crate::hf::HfSet;
use crate::topology::{FormalTopology, FrameElement};

/// Entries are sorted by name and unique, so equality is structural.
#[derive(Clone)]
pub struct Name(Arc<NameNode>);

struct NameNode {
    entries: Vec<(Name, FrameElement)>,
    depth: usize,
    key: String,
    hash: u64,
}

impl Name {
    pub fn new(entries: BTreeMap<Name, FrameElement>) -> Name {
        let entries: Vec<(Name, FrameElement)> = entries.into_iter().collect();
        let depth = entries.iter().map(|(n, _)| n.depth() + 1).max().unwrap_or(0);
        let body: Vec<String> = entries.iter().map(|(n, v)| format!("{}:{}", n.key(), v.0)).collect();
        let key = format!("[{}]", body.join(","));
        let mut h = DefaultHasher::new();
        key.hash(&mut h);
        Name(Arc::new(NameNode { entries, depth, key, hash: h.finish() }))
    }

    pub fn empty() -> Name {
        Name::new(BTreeMap::new())
    }

    pub fn entries(&self) -> &[(Name, FrameElement)] {
        &self.0.entries
    }

    pub fn dom(&self) -> impl Iterator<Item = &Name> {
        self.0.entries.iter().map(|(n, _)| n)
    }

    pub fn value(&self, x: &Name) -> Option<FrameElement> {
        self.0.entries.binary_search_by(|(n, _)| n.cmp(x)).ok().map(|i| self.0.entries[i].1)
    }

    pub fn depth(&self) -> usize {
        self.0.depth
    }

    pub fn is_empty(&self) -> bool {
        self.0.entries.is_empty()
    }

    /// Compact canonical text, frame elements as masks: `[[]:1]`.
    pub fn key(&self) -> &str {
        &self.0.key
    }

    /// Every value is a frame element of `t`.
    pub fn belongs_to(&self, t: &FormalTopology) -> bool {
        self.entries().iter().all(|(n, v)| t.element(v.0).is_some() && n.belongs_to(t))
    }

    /// Nested `(entry ↦ value)` lists with token names: `[([] ↦ {0})]`.
    pub fn render(&self, t: &FormalTopology) -> String {
        let body: Vec<String> = self.entries().iter().map(|(n, v)| format!("({} ↦ {})", n.render(t), t.show(v.0))).collect();
        format!("[{}]", body.join(", "))
    }
}

impl PartialEq for Name {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.hash == other.0.hash && self.0.key == other.0.key)
    }
}

impl Eq for Name {}

impl Hash for Name {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.0.hash);
    }
}

impl PartialOrd for Name {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Name {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.key.cmp(&other.0.key)
    }
}

impl fmt::Debug for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// `x̌`: domain `{y̌ | y ∈ x}`, all values `⊤`.
pub fn check_name(x: &HfSet, t: &FormalTopology) -> Name {
    Name::new(x.iter().map(|y| (check_name(y, t), t.top())).collect())
}

/// Domain `{a, b}`, values `⊤`.
pub fn up(a: &Name, b: &Name, t: &FormalTopology) -> Name {
    Name::new([(a.clone(), t.top()), (b.clone(), t.top())].into_iter().collect())
}

pub fn op(a: &Name, b: &Name, t: &FormalTopology) -> Name {
    up(&up(a, a, t), &up(a, b, t), t)
}

/// A finite functional set of pairs `⟨name, value⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ClassName(BTreeMap<Name, FrameElement>);

impl ClassName {
    pub fn new(pairs: impl IntoIterator<Item = (Name, FrameElement)>) -> Result<ClassName, NameError> {
        let mut map = BTreeMap::new();
        for (n, v) in pairs {
            if let Some(old) = map.insert(n.clone(), v) {
                if old != v {
                    return Err(NameError::NotFunctional(n));
                }
            }
        }
        Ok(ClassName(map))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Name, &FrameElement)> {
        self.0.iter()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NameError {
    #[error("no binding for variable {0}")]
    MissingBinding(String),
    #[error("no class name bound to {0}")]
    MissingClass(String),
    #[error("name {0:?} has values outside the frame")]
    ForeignFrame(Name),
    #[error("{0} is not interpreted by names")]
    Unsupported(&'static str),
    #[error("precondition fails at {x:?} in the domain of a")]
    Precondition { x: Name },
    #[error("the smaller universe is not contained in the larger one: {0:?}")]
    NotContained(Name),
    #[error("class name maps {0:?} to two values")]
    NotFunctional(Name),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

/// A finite set of names closed under sub-names, over one topology.
#[derive(Clone, Debug)]
pub struct NameUniverse {
    topology: FormalTopology,
    names: Vec<Name>,
    depth: usize,
}

impl NameUniverse {
    /// Closes `names` under sub-names; order is by depth, then first appearance.
    pub fn from_names(t: &FormalTopology, names: impl IntoIterator<Item = Name>) -> Result<NameUniverse, NameError> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        fn go(n: &Name, seen: &mut std::collections::HashSet<Name>, out: &mut Vec<Name>) {
            if seen.contains(n) {
                return;
            }
            for c in n.dom() {
                go(c, seen, out);
            }
            seen.insert(n.clone());
            out.push(n.clone());
        }
        for n in names {
            if !n.belongs_to(t) {
                return Err(NameError::ForeignFrame(n));
            }
            go(&n, &mut seen, &mut out);
        }
        out.sort_by_key(Name::depth);
        let depth = out.iter().map(Name::depth).max().unwrap_or(0);
        Ok(NameUniverse { topology: t.clone(), names: out, depth })
    }

    pub fn topology(&self) -> &FormalTopology {
        &self.topology
    }

    pub fn names(&self) -> &[Name] {
        &self.names
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn contains(&self, n: &Name) -> bool {
        self.names.contains(n)
    }

    pub fn is_closed(&self) -> bool {
        self.names.iter().all(|n| n.dom().all(|c| self.contains(c)))
    }
}

/// Every name of depth ≤ `d`: `N(0) = 1`, `N(d+1) = (|frame| + 1)^N(d)`.
pub fn name_universe(t: &FormalTopology, d: usize, budget: &Budget) -> Result<NameUniverse, NameError> {
    let frame = t.frame_elements(budget).map_err(|e| match e {
        crate::topology::TopologyError::Budget(b) => NameError::Budget(b),
        _ => unreachable!("frame enumeration only fails on budget"),
    })?;
    let mut names = vec![Name::empty()];
    for _ in 0..d {
        let count = (frame.len() as u128 + 1).checked_pow(names.len() as u32).unwrap_or(u128::MAX);
        budget.check_elements("the name universe", usize::try_from(count).unwrap_or(usize::MAX))?;
        let mut next = Vec::with_capacity(count as usize);
        // Mixed radix over the previous level: 0 = absent, k = frame[k - 1].
        let mut digits = vec![0usize; names.len()];
        loop {
            let map = names.iter().zip(&digits).filter(|(_, &k)| k > 0).map(|(n, &k)| (n.clone(), frame[k - 1])).collect();
            next.push(Name::new(map));
            let Some(i) = digits.iter().position(|&k| k < frame.len()) else {
                break;
            };
            digits[i] += 1;
            for k in &mut digits[..i] {
                *k = 0;
            }
        }
        names = next;
    }
    let mut u = NameUniverse::from_names(t, names)?;
    u.depth = d;
    Ok(u)
}

/// Variable and class bindings for [`Interpreter::eval`].
#[derive(Clone, Debug, Default)]
pub struct Environment {
    pub sets: BTreeMap<String, Name>,
    pub classes: BTreeMap<String, ClassName>,
}

impl Environment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, x: &str, n: Name) -> Self {
        self.sets.insert(x.to_string(), n);
        self
    }

    pub fn with_class(mut self, x: &str, c: ClassName) -> Self {
        self.classes.insert(x.to_string(), c);
        self
    }
}

/// Evaluates `⟦φ⟧` over one universe, memoizing `⟦a = b⟧`.
pub struct Interpreter<'u> {
    t: &'u FormalTopology,
    range: &'u [Name],
    eq_memo: HashMap<(Name, Name), FrameElement>,
    checks: HashMap<HfSet, Name>,
}

impl<'u> Interpreter<'u> {
    pub fn new(u: &'u NameUniverse) -> Self {
        Interpreter { t: &u.topology, range: &u.names, eq_memo: HashMap::new(), checks: HashMap::new() }
    }

    pub fn topology(&self) -> &FormalTopology {
        self.t
    }

    /// `⋀_{x ∈ dom a} a(x) → ⋁_{y ∈ dom b} b(y) ∧ ⟦x = y⟧`, and symmetrically.
    pub fn eq(&mut self, a: &Name, b: &Name) -> FrameElement {
        if let Some(v) = self.eq_memo.get(&(a.clone(), b.clone())) {
            return *v;
        }
        let t = self.t;
        let mut left = t.top();
        for (x, ax) in a.entries() {
            let mut j = 0u64;
            for (y, by) in b.entries() {
                j |= t.meet(*by, self.eq(x, y)).0;
            }
            left = t.meet(left, t.implies(*ax, t.nucleus(j)));
        }
        let mut right = t.top();
        for (y, by) in b.entries() {
            let mut j = 0u64;
            for (x, ax) in a.entries() {
                j |= t.meet(*ax, self.eq(x, y)).0;
            }
            right = t.meet(right, t.implies(*by, t.nucleus(j)));
        }
        let v = t.meet(left, right);
        self.eq_memo.insert((a.clone(), b.clone()), v);
        v
    }

    /// `⋁_{y ∈ dom b} b(y) ∧ ⟦a = y⟧`.
    pub fn mem(&mut self, a: &Name, b: &Name) -> FrameElement {
        let mut j = 0u64;
        for (y, by) in b.entries() {
            j |= self.t.meet(*by, self.eq(a, y)).0;
        }
        self.t.nucleus(j)
    }

    /// `⋁_{x ∈ dom A} A(x) ∧ ⟦x = a⟧`.
    pub fn class_mem(&mut self, a: &Name, c: &ClassName) -> FrameElement {
        let mut j = 0u64;
        for (x, v) in c.entries() {
            j |= self.t.meet(*v, self.eq(x, a)).0;
        }
        self.t.nucleus(j)
    }

    pub fn class_equal(&mut self, a: &ClassName, b: &ClassName) -> FrameElement {
        let t = self.t;
        let mut left = t.top();
        for (x, ax) in a.entries() {
            let mut j = 0u64;
            for (y, by) in b.entries() {
                j |= t.meet(*by, self.eq(x, y)).0;
            }
            left = t.meet(left, t.implies(*ax, t.nucleus(j)));
        }
        let mut right = t.top();
        for (y, by) in b.entries() {
            let mut j = 0u64;
            for (x, ax) in a.entries() {
                j |= t.meet(*ax, self.eq(x, y)).0;
            }
            right = t.meet(right, t.implies(*by, t.nucleus(j)));
        }
        t.meet(left, right)
    }

    pub fn eval(&mut self, f: &Formula, env: &Environment) -> Result<FrameElement, NameError> {
        for n in env.sets.values() {
            if !n.belongs_to(self.t) {
                return Err(NameError::ForeignFrame(n.clone()));
            }
        }
        let mut scope: Vec<(String, Name)> = env.sets.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        self.go(f, &mut scope, &env.classes)
    }

    fn term(&mut self, t: &Term, scope: &[(String, Name)]) -> Result<Name, NameError> {
        match t {
            Term::Var(x) => scope
                .iter()
                .rev()
                .find(|(k, _)| k == x)
                .map(|(_, n)| n.clone())
                .ok_or_else(|| NameError::MissingBinding(x.clone())),
            Term::Lit(s) => {
                if let Some(n) = self.checks.get(s) {
                    return Ok(n.clone());
                }
                let n = check_name(s, self.t);
                self.checks.insert(s.clone(), n.clone());
                Ok(n)
            }
        }
    }

    fn go(
        &mut self,
        f: &Formula,
        scope: &mut Vec<(String, Name)>,
        classes: &BTreeMap<String, ClassName>,
    ) -> Result<FrameElement, NameError> {
        let t = self.t;
        Ok(match f {
            Formula::Falsum => t.bottom(),
            Formula::Prop(_) => return Err(NameError::Unsupported("a propositional atom")),
            Formula::Eq(a, b) => {
                let (a, b) = (self.term(a, scope)?, self.term(b, scope)?);
                self.eq(&a, &b)
            }
            Formula::Mem(a, b) => {
                let (a, b) = (self.term(a, scope)?, self.term(b, scope)?);
                self.mem(&a, &b)
            }
            Formula::ClassMem(a, c) => {
                let a = self.term(a, scope)?;
                let c = classes.get(c).ok_or_else(|| NameError::MissingClass(c.clone()))?;
                self.class_mem(&a, c)
            }
            Formula::ClassEq(a, b) => {
                let a = classes.get(a).ok_or_else(|| NameError::MissingClass(a.clone()))?;
                let b = classes.get(b).ok_or_else(|| NameError::MissingClass(b.clone()))?;
                self.class_equal(a, b)
            }
            Formula::And(a, b) => {
                let x = self.go(a, scope, classes)?;
                t.meet(x, self.go(b, scope, classes)?)
            }
            Formula::Or(a, b) => {
                let x = self.go(a, scope, classes)?;
                t.join(x, self.go(b, scope, classes)?)
            }
            Formula::Imp(a, b) => {
                let x = self.go(a, scope, classes)?;
                t.implies(x, self.go(b, scope, classes)?)
            }
            Formula::BigAnd(v) => {
                let vals = v.iter().map(|g| self.go(g, scope, classes)).collect::<Result<Vec<_>, _>>()?;
                t.big_meet(&vals)
            }
            Formula::BigOr(v) => {
                let vals = v.iter().map(|g| self.go(g, scope, classes)).collect::<Result<Vec<_>, _>>()?;
                t.big_join(&vals)
            }
            Formula::BoundedAll(x, bound, body) | Formula::BoundedEx(x, bound, body) => {
                let b = self.term(bound, scope)?;
                let all = matches!(f, Formula::BoundedAll(..));
                let mut acc = if all { t.top() } else { FrameElement(0) };
                for (y, v) in b.entries() {
                    scope.push((x.clone(), y.clone()));
                    let r = self.go(body, scope, classes);
                    scope.pop();
                    let r = r?;
                    acc = if all { t.meet(acc, t.implies(*v, r)) } else { FrameElement(acc.0 | t.meet(*v, r).0) };
                }
                if all {
                    acc
                } else {
                    t.nucleus(acc.0)
                }
            }
            Formula::All(x, body) | Formula::Ex(x, body) => {
                let all = matches!(f, Formula::All(..));
                let mut acc = if all { t.top() } else { FrameElement(0) };
                for y in self.range {
                    scope.push((x.clone(), y.clone()));
                    let r = self.go(body, scope, classes);
                    scope.pop();
                    let r = r?;
                    acc = if all { t.meet(acc, r) } else { FrameElement(acc.0 | r.0) };
                }
                if all {
                    acc
                } else {
                    t.nucleus(acc.0)
                }
            }
            Formula::ClassAll(..) | Formula::ClassEx(..) => {
                return Err(NameError::Unsupported("a class quantifier"))
            }
        })
    }
}

/// `⟦f⟧` with unbounded quantifiers over `u`.
pub fn interpret(f: &Formula, env: &Environment, u: &NameUniverse) -> Result<FrameElement, NameError> {
    Interpreter::new(u).eval(f, env)
}

/// `(⟦f⟧ over sub, ⟦f⟧ over full)`; equal when `f` is bounded.
pub fn interpret_relativized(
    f: &Formula,
    env: &Environment,
    sub: &NameUniverse,
    full: &NameUniverse,
) -> Result<(FrameElement, FrameElement), NameError> {
    if let Some(n) = sub.names().iter().find(|n| !full.contains(n)) {
        return Err(NameError::NotContained(n.clone()));
    }
    if let Some(n) = env.sets.values().find(|n| !sub.contains(n)) {
        return Err(NameError::NotContained(n.clone()));
    }
    Ok((interpret(f, env, sub)?, interpret(f, env, full)?))
}

pub fn class_equal(a: &ClassName, b: &ClassName, u: &NameUniverse) -> FrameElement {
    Interpreter::new(u).class_equal(a, b)
}

/// `w` is the Kuratowski pair of `x` and `y`, as a bounded formula.
pub fn ordered_pair_formula(w: &str, x: &str, y: &str) -> Formula {
    let single = format!("({x} in s & all t in s. t = {x})");
    let double = format!("({x} in s & {y} in s & all t in s. t = {x} | t = {y})");
    let src = format!("(ex s in {w}. {single}) & (ex s in {w}. {double}) & (all s in {w}. {single} | {double})");
    parse(&src).expect("pair formula parses")
}

/// `R(x, y)` spelled as `∃w ∈ R. w = ⟨x, y⟩`.
pub fn relation_formula(r: &str, x: &str, y: &str) -> Formula {
    Formula::ex_in("w", Term::var(r), ordered_pair_formula("w", x, y))
}

/// Builds `b` with `p ≤ ⟦R: a ⇔ b⟧` from `p ≤ ⟦R: a ⇉ V⟧`, reading `R(x, y)` as `⟦op(x, y) ∈ R⟧`.
///
/// `r = {⟨x, y, z⟩ | x ∈ dom a, y ∈ u, z ∈ p ∧ a(x) ∧ ⟦R(x, y)⟧}`,
/// `dom b = {y | ∃x ∃z ⟨x, y, z⟩ ∈ r}` and `b(y) = ȷ{z | ∃x ⟨x, y, z⟩ ∈ r}`.
pub fn strong_collection_witness(a: &Name, r: &Name, p: FrameElement, u: &NameUniverse) -> Result<Name, NameError> {
    let mut it = Interpreter::new(u);
    let t = u.topology();
    let mut cols: BTreeMap<Name, u64> = BTreeMap::new();
    for (x, ax) in a.entries() {
        let guard = t.meet(p, *ax);
        let mut reach = 0u64;
        for y in u.names() {
            let rel = it.mem(&op(x, y, t), r);
            let z = t.meet(guard, rel).0;
            reach |= rel.0;
            if z != 0 {
                *cols.entry(y.clone()).or_default() |= z;
            }
        }
        if !guard.leq(t.nucleus(reach)) {
            return Err(NameError::Precondition { x: x.clone() });
        }
    }
    Ok(Name::new(cols.into_iter().map(|(y, z)| (y, t.nucleus(z))).collect()))
}

/// `dom b` = all functions `dom a → frame`, as names; values `⊤`.
pub fn powerset_name(a: &Name, u: &NameUniverse, budget: &Budget) -> Result<Name, NameError> {
    let t = u.topology();
    let frame = t.frame_elements(budget).map_err(|e| match e {
        crate::topology::TopologyError::Budget(b) => NameError::Budget(b),
        _ => unreachable!("frame enumeration only fails on budget"),
    })?;
    let dom: Vec<&Name> = a.dom().collect();
    let count = (frame.len() as u128).checked_pow(dom.len() as u32).unwrap_or(u128::MAX);
    budget.check_elements("the power set name", usize::try_from(count).unwrap_or(usize::MAX))?;
    let mut entries = BTreeMap::new();
    let mut digits = vec![0usize; dom.len()];
    loop {
        let d = Name::new(dom.iter().zip(&digits).map(|(x, &k)| ((*x).clone(), frame[k])).collect());
        entries.insert(d, t.top());
        let Some(i) = digits.iter().position(|&k| k + 1 < frame.len()) else {
            break;
        };
        digits[i] += 1;
        for k in &mut digits[..i] {
            *k = 0;
        }
    }
    Ok(Name::new(entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{exhaustive, Quantifiers};
    use crate::topology::{from_poset, omega};

    fn hf(s: &str) -> HfSet {
        s.parse().unwrap()
    }

    fn chain2() -> FormalTopology {
        from_poset(&["a", "b"], &[("a", "b")]).unwrap()
    }

    #[test]
    fn check_names() {
        let o = omega();
        assert!(check_name(&HfSet::empty(), &o).is_empty());
        let one = check_name(&hf("{{}}"), &o);
        assert_eq!(one.entries(), &[(Name::empty(), o.top())]);
        let v3 = HfSet::cumulative(3);
        let names: std::collections::HashSet<Name> = v3.iter().map(|x| check_name(x, &o)).collect();
        assert_eq!(names.len(), v3.len());
    }

    #[test]
    fn up_and_op() {
        let o = omega();
        let z = Name::empty();
        assert_eq!(up(&z, &z, &o).entries().len(), 1);
        let u = NameUniverse::from_names(&o, []).unwrap();
        let mut it = Interpreter::new(&u);
        let v = it.eq(&up(&z, &z, &o), &check_name(&hf("{{}}"), &o));
        assert_eq!(v, o.top());
        let one = check_name(&hf("{{}}"), &o);
        assert_eq!(op(&z, &one, &o), up(&up(&z, &z, &o), &up(&z, &one, &o), &o));
    }

    #[test]
    fn interpret_examples() {
        let o = omega();
        let u = name_universe(&o, 1, &Budget::default()).unwrap();
        let e = Environment::new();
        let val = |s: &str| interpret(&parse(s).unwrap(), &e, &u).unwrap();
        assert_eq!(val("{} = {}"), o.top());
        assert_eq!(val("{} in {{}}"), o.top());
        assert_eq!(val("{} = {{}}"), o.bottom());
        let missing = interpret(&parse("x = x").unwrap(), &e, &u);
        assert_eq!(missing, Err(NameError::MissingBinding("x".into())));
        let foreign = Environment::new().with("x", Name::new([(Name::empty(), FrameElement(2))].into()));
        assert!(matches!(interpret(&parse("x = x").unwrap(), &foreign, &u), Err(NameError::ForeignFrame(_))));
    }

    #[test]
    fn universe_counts_and_closure() {
        let b = Budget::default();
        let o = omega();
        assert_eq!(name_universe(&o, 0, &b).unwrap().names(), &[Name::empty()]);
        assert_eq!(name_universe(&o, 1, &b).unwrap().names().len(), 3);
        assert_eq!(name_universe(&o, 2, &b).unwrap().names().len(), 27);
        assert_eq!(name_universe(&chain2(), 2, &b).unwrap().names().len(), 256);
        for t in [o, chain2()] {
            assert!(name_universe(&t, 2, &b).unwrap().is_closed());
        }
        assert!(matches!(name_universe(&chain2(), 3, &b), Err(NameError::Budget(_))));
    }

    #[test]
    fn check_name_faithfulness() {
        let v3: Vec<HfSet> = HfSet::cumulative(3).iter().cloned().collect();
        for t in [omega(), chain2()] {
            let u = NameUniverse::from_names(&t, []).unwrap();
            let mut it = Interpreter::new(&u);
            for x in &v3 {
                for y in &v3 {
                    let (cx, cy) = (check_name(x, &t), check_name(y, &t));
                    let want = |b: bool| if b { t.top() } else { t.bottom() };
                    assert_eq!(it.eq(&cx, &cy), want(x == y));
                    assert_eq!(it.mem(&cx, &cy), want(y.contains(x)));
                }
            }
        }
    }

    #[test]
    fn equality_laws_depth_two() {
        for t in [omega(), chain2()] {
            let u = name_universe(&t, 2, &Budget::default()).unwrap();
            let names = u.names();
            let mut it = Interpreter::new(&u);
            for a in names {
                assert_eq!(it.eq(a, a), t.top());
                for b in names {
                    assert_eq!(it.eq(a, b), it.eq(b, a));
                }
            }
            let step = if names.len() > 30 { 17 } else { 1 };
            for a in names.iter().step_by(step) {
                for b in names {
                    let ab = it.eq(a, b);
                    for c in names.iter().step_by(step) {
                        assert!(t.meet(ab, it.eq(b, c)).leq(it.eq(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn lem_forced_over_omega() {
        let o = omega();
        let u = name_universe(&o, 2, &Budget::default()).unwrap();
        let mut it = Interpreter::new(&u);
        let params = [&u.names()[5], &u.names()[20]];
        for f in exhaustive(&["x1", "x2"], 1, Quantifiers::Bounded) {
            let lem = Formula::or(f.clone(), Formula::not(f));
            let env = Environment::new().with("x1", params[0].clone()).with("x2", params[1].clone());
            assert_eq!(it.eval(&lem, &env).unwrap(), o.top());
        }
    }

    #[test]
    fn lem_fails_on_the_chain() {
        let t = chain2();
        let u = name_universe(&t, 1, &Budget::default()).unwrap();
        // x = {∅ ↦ {a}}: ⟦∅ ∈ x⟧ = {a}, whose negation is ⊥.
        let x = Name::new([(Name::empty(), FrameElement(1))].into());
        let env = Environment::new().with("x", x);
        let v = interpret(&parse("{} in x | ~({} in x)").unwrap(), &env, &u).unwrap();
        assert_eq!(v, FrameElement(1));
    }

    #[test]
    fn pairing_by_up() {
        for t in [omega(), chain2()] {
            let u = name_universe(&t, 2, &Budget::default()).unwrap();
            let small = name_universe(&t, 1, &Budget::default()).unwrap();
            let mut it = Interpreter::new(&u);
            let pair = parse("x in z & y in z & all s in z. s = x | s = y").unwrap();
            for x in small.names() {
                for y in small.names() {
                    let p = up(x, y, &t);
                    for z in u.names() {
                        let env = Environment::new().with("x", x.clone()).with("y", y.clone()).with("z", z.clone());
                        assert_eq!(it.eq(z, &p), it.eval(&pair, &env).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn extensionality_at_depth_one() {
        let ext = parse("all a. all b. (all x in a. x in b) & (all x in b. x in a) -> a = b").unwrap();
        for t in [omega(), chain2()] {
            let u = name_universe(&t, 1, &Budget::default()).unwrap();
            assert_eq!(interpret(&ext, &Environment::new(), &u).unwrap(), t.top());
        }
    }

    #[test]
    fn relativized_examples() {
        let o = omega();
        let b = Budget::default();
        let sub = name_universe(&o, 1, &b).unwrap();
        let full = name_universe(&o, 2, &b).unwrap();
        let x = sub.names()[1].clone();
        let env = Environment::new().with("x", x);
        let bounded = parse("ex y in x. all z in y. z = z").unwrap();
        let (s, f) = interpret_relativized(&bounded, &env, &sub, &full).unwrap();
        assert_eq!(s, f);
        let unbounded = parse("all y. ~(y in x)").unwrap();
        let (s, f) = interpret_relativized(&unbounded, &env, &sub, &full).unwrap();
        assert!(f.leq(s));
        let (s, f) = interpret_relativized(&unbounded, &env, &full, &full).unwrap();
        assert_eq!(s, f);
        assert!(matches!(interpret_relativized(&bounded, &env, &full, &sub), Err(NameError::NotContained(_))));
    }

    #[test]
    fn class_names() {
        let o = omega();
        let u = name_universe(&o, 1, &Budget::default()).unwrap();
        let z = Name::empty();
        let a = ClassName::new([(z.clone(), o.top())]).unwrap();
        let empty = ClassName::default();
        assert_eq!(class_equal(&a, &a, &u), o.top());
        assert_eq!(class_equal(&a, &empty, &u), o.bottom());
        assert!(ClassName::new([(z.clone(), o.top()), (z, o.bottom())]).is_err());
    }

    #[test]
    fn class_equality_transfers_membership() {
        for t in [omega(), chain2()] {
            let u = name_universe(&t, 1, &Budget::default()).unwrap();
            let frame = t.frame_elements(&Budget::default()).unwrap();
            let names = u.names();
            // All class names with domain ⊆ names and one value per entry.
            let mut classes = vec![ClassName::default()];
            for n in names {
                classes = classes
                    .into_iter()
                    .flat_map(|c| {
                        std::iter::once(c.clone()).chain(frame.iter().map(move |v| {
                            ClassName::new(c.entries().map(|(k, w)| (k.clone(), *w)).chain([(n.clone(), *v)])).unwrap()
                        }))
                    })
                    .collect();
            }
            let mut it = Interpreter::new(&u);
            for a in &classes {
                for b in &classes {
                    let e = it.class_equal(a, b);
                    for x in names {
                        assert!(t.meet(e, it.class_mem(x, a)).leq(it.class_mem(x, b)));
                    }
                }
            }
        }
    }

    #[test]
    fn strong_collection_examples() {
        let o = omega();
        let u = name_universe(&o, 2, &Budget::default()).unwrap();
        let one = check_name(&hf("{{}}"), &o);
        let r = check_name(&HfSet::singleton(HfSet::ordered_pair(&HfSet::empty(), &HfSet::empty())), &o);
        let b = strong_collection_witness(&one, &r, o.top(), &u).unwrap();
        let env = Environment::new().with("a", one).with("b", b).with("R", r.clone());
        let onto = parse("(all x in a. ex y in b. rxy) & (all y in b. ex x in a. rxy)").unwrap();
        let onto = onto.map_atoms(&mut |g| (*g == Formula::prop("rxy")).then(|| relation_formula("R", "x", "y")));
        assert_eq!(interpret(&onto, &env, &u).unwrap(), o.top());
        assert!(strong_collection_witness(&Name::empty(), &r, o.top(), &u).unwrap().is_empty());
        assert!(strong_collection_witness(&check_name(&hf("{{}}"), &o), &Name::empty(), o.bottom(), &u).unwrap().is_empty());
        assert!(matches!(
            strong_collection_witness(&check_name(&hf("{{}}"), &o), &Name::empty(), o.top(), &u),
            Err(NameError::Precondition { .. })
        ));
    }

    #[test]
    fn relation_formula_matches_op_membership() {
        for t in [omega(), chain2()] {
            let u = name_universe(&t, 1, &Budget::default()).unwrap();
            let frame = t.frame_elements(&Budget::default()).unwrap();
            let mut it = Interpreter::new(&u);
            let f = relation_formula("R", "x", "y");
            let names = u.names().to_vec();
            for x in &names {
                for y in &names {
                    for (k, w) in names.iter().enumerate() {
                        let v = frame[k % frame.len()];
                        let r = Name::new([(op(w, x, &t), t.top()), (op(x, w, &t), v)].into_iter().collect());
                        let env = Environment::new().with("R", r.clone()).with("x", x.clone()).with("y", y.clone());
                        assert_eq!(it.mem(&op(x, y, &t), &r), it.eval(&f, &env).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn powerset_examples() {
        let o = omega();
        let b = Budget::default();
        let u = name_universe(&o, 2, &b).unwrap();
        let p = powerset_name(&Name::empty(), &u, &b).unwrap();
        assert_eq!(p.dom().cloned().collect::<Vec<_>>(), vec![Name::empty()]);
        let one = check_name(&hf("{{}}"), &o);
        let p = powerset_name(&one, &u, &b).unwrap();
        assert_eq!(p.entries().len(), 2);
        let mut it = Interpreter::new(&u);
        let subset = parse("all x in c. x in a").unwrap();
        for c in u.names() {
            let env = Environment::new().with("c", c.clone()).with("a", one.clone());
            let lhs = it.eval(&subset, &env).unwrap();
            let rhs = o.big_join(&p.dom().map(|d| it.eq(c, d)).collect::<Vec<_>>());
            assert!(lhs.leq(rhs));
        }
    }
}
