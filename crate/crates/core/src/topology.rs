//! Finite formal topologies `(S, ≤, ◁)` and their frames of stable sets.
//!
//! Subsets of the carrier are `u64` bitmasks; token `i` is bit `i`. The cover
//! is stored per subset: `covered[p]` is the mask of tokens `a` with `a ◁ p`,
//! so the nucleus `ȷp = {a | a ◁ p}` is a table lookup.
//!
//! The meta-level is classical. Over [`omega`] the double complement is the
//! identity, so nontrivial Heyting behaviour comes from [`from_poset`] frames.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::budget::{Budget, BudgetExceeded};

/// Hard cap on the carrier: covers are tabulated over all `2^|S|` subsets.
pub const MAX_TOKENS: usize = 20;

/// A stable lower subset of the carrier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FrameElement(pub u64);

impl FrameElement {
    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn leq(self, other: FrameElement) -> bool {
        self.0 & !other.0 == 0
    }
}

/// A carrier, preorder and cover table that have not been validated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub tokens: Vec<String>,
    /// `below[a]`: mask of `x` with `x ≤ a`.
    pub below: Vec<u64>,
    /// `covered[p]`: mask of `a` with `a ◁ p`; length `2^|S|`.
    pub covered: Vec<u64>,
}

/// A validated formal topology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalTopology {
    tokens: Vec<String>,
    below: Vec<u64>,
    covered: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NotReflexive { a: usize },
    NotTransitive { a: usize, b: usize, c: usize },
    /// `a ∈ p` but not `a ◁ p`.
    Reflexivity { a: usize, p: u64 },
    /// `a ≤ b ◁ p` but not `a ◁ p`.
    Localization { a: usize, b: usize, p: u64 },
    /// `a ◁ p ◁ q` but not `a ◁ q`.
    Transitivity { a: usize, p: u64, q: u64 },
    /// `a ◁ p`, `a ◁ q` but not `a ◁ ↓p ∩ ↓q`.
    Meet { a: usize, p: u64, q: u64 },
}

impl Violation {
    /// Cover axiom number 1–4, or 0 for a defect of the preorder.
    pub fn axiom(&self) -> u8 {
        match self {
            Violation::NotReflexive { .. } | Violation::NotTransitive { .. } => 0,
            Violation::Reflexivity { .. } => 1,
            Violation::Localization { .. } => 2,
            Violation::Transitivity { .. } => 3,
            Violation::Meet { .. } => 4,
        }
    }

    pub fn describe(&self, tokens: &[String]) -> String {
        let t = |i: &usize| tokens[*i].as_str();
        let s = |p: &u64| show_subset(tokens, *p);
        match self {
            Violation::NotReflexive { a } => format!("order: {} <= {} missing", t(a), t(a)),
            Violation::NotTransitive { a, b, c } => {
                format!("order: {} <= {} <= {} but not {} <= {}", t(a), t(b), t(c), t(a), t(c))
            }
            Violation::Reflexivity { a, p } => format!("axiom 1: {} in {} but not {} <| {}", t(a), s(p), t(a), s(p)),
            Violation::Localization { a, b, p } => {
                format!("axiom 2: {} <= {} <| {} but not {} <| {}", t(a), t(b), s(p), t(a), s(p))
            }
            Violation::Transitivity { a, p, q } => {
                format!("axiom 3: {} <| {} and {} <| {} but not {} <| {}", t(a), s(p), s(p), s(q), t(a), s(q))
            }
            Violation::Meet { a, p, q } => {
                format!("axiom 4: {} <| {} and {} <| {} but not {} <| the meet", t(a), s(p), t(a), s(q), t(a))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("carrier has {0} tokens; at most {MAX_TOKENS} are supported")]
    TooLarge(usize),
    #[error("duplicate token {0}")]
    DuplicateToken(String),
    #[error("unknown token {0}")]
    UnknownToken(String),
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("{} axiom violation(s); first: {}", .0.len(), .0.first().map(String::as_str).unwrap_or(""))]
    Invalid(Vec<String>),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

pub fn show_subset(tokens: &[String], p: u64) -> String {
    let names: Vec<&str> = (0..tokens.len()).filter(|i| p >> i & 1 == 1).map(|i| tokens[i].as_str()).collect();
    format!("{{{}}}", names.join(","))
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn bits(p: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| p >> i & 1 == 1)
}

fn down_of(below: &[u64], p: u64) -> u64 {
    bits(p).fold(0, |acc, a| acc | below[a])
}

impl Candidate {
    fn check_shape(&self) -> Result<(), TopologyError> {
        let n = self.tokens.len();
        if n > MAX_TOKENS {
            return Err(TopologyError::TooLarge(n));
        }
        for (i, t) in self.tokens.iter().enumerate() {
            if self.tokens[..i].contains(t) {
                return Err(TopologyError::DuplicateToken(t.clone()));
            }
        }
        assert_eq!(self.below.len(), n, "one order row per token");
        assert_eq!(self.covered.len(), 1 << n, "one cover row per subset");
        Ok(())
    }

    /// Every violation of the preorder and cover axioms, found exhaustively.
    pub fn violations(&self, budget: &Budget) -> Result<Vec<Violation>, TopologyError> {
        self.check_shape()?;
        let n = self.tokens.len();
        let subsets = 1u64 << n;
        budget.check_steps("the cover axioms", subsets.saturating_mul(subsets))?;
        let mut out = Vec::new();
        for a in 0..n {
            if self.below[a] >> a & 1 == 0 {
                out.push(Violation::NotReflexive { a });
            }
            for b in bits(self.below[a]) {
                for x in bits(self.below[b] & !self.below[a]) {
                    out.push(Violation::NotTransitive { a: x, b, c: a });
                }
            }
        }
        let down: Vec<u64> = (0..subsets).map(|p| down_of(&self.below, p)).collect();
        for p in 0..subsets {
            let cp = self.covered[p as usize];
            for a in bits(p & !cp) {
                out.push(Violation::Reflexivity { a, p });
            }
            for b in bits(cp) {
                for a in bits(self.below[b] & !cp) {
                    out.push(Violation::Localization { a, b, p });
                }
            }
        }
        for p in 0..subsets {
            let cp = self.covered[p as usize];
            for q in 0..subsets {
                let cq = self.covered[q as usize];
                if p & !cq == 0 {
                    for a in bits(cp & !cq) {
                        out.push(Violation::Transitivity { a, p, q });
                    }
                }
                let meet = self.covered[(down[p as usize] & down[q as usize]) as usize];
                for a in bits(cp & cq & !meet) {
                    out.push(Violation::Meet { a, p, q });
                }
            }
        }
        Ok(out)
    }
}

/// Checks all four cover axioms (and that `≤` is a preorder).
pub fn validate(c: Candidate, budget: &Budget) -> Result<FormalTopology, TopologyError> {
    let v = c.violations(budget)?;
    if !v.is_empty() {
        return Err(TopologyError::Invalid(v.iter().map(|x| x.describe(&c.tokens)).collect()));
    }
    Ok(FormalTopology { tokens: c.tokens, below: c.below, covered: c.covered })
}

/// The topology whose cover is `a ◁ p ⟺ a ∈ ↓p`; its frame is the lattice of lower sets.
///
/// `leq` lists pairs `(a, b)` with `a ≤ b`; the reflexive-transitive closure is taken.
pub fn from_poset(tokens: &[&str], leq: &[(&str, &str)]) -> Result<FormalTopology, TopologyError> {
    let n = tokens.len();
    if n > MAX_TOKENS {
        return Err(TopologyError::TooLarge(n));
    }
    let idx = |t: &str| tokens.iter().position(|x| *x == t).ok_or_else(|| TopologyError::UnknownToken(t.into()));
    let mut below: Vec<u64> = (0..n).map(|i| 1 << i).collect();
    for (a, b) in leq {
        let (a, b) = (idx(a)?, idx(b)?);
        below[b] |= 1 << a;
    }
    loop {
        let next: Vec<u64> = below.iter().map(|&m| down_of(&below, m)).collect();
        if next == below {
            break;
        }
        below = next;
    }
    let covered = (0..1u64 << n).map(|p| down_of(&below, p)).collect();
    let c = Candidate { tokens: tokens.iter().map(|s| s.to_string()).collect(), below, covered };
    validate(c, &Budget::default().with_steps(u64::MAX))
}

/// The double-negation topology on the one-token carrier `{0}`.
///
/// `0 ◁ p ⟺ ¬¬(0 ∈ p)`, evaluated classically, so `ȷ` is the identity.
pub fn omega() -> FormalTopology {
    FormalTopology { tokens: vec!["0".into()], below: vec![1], covered: vec![0, 1] }
}

/// For each token, finitely many subsets whose supersets it covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetPresentation(pub Vec<Vec<u64>>);

impl FormalTopology {
    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn token(&self, name: &str) -> Option<usize> {
        self.tokens.iter().position(|t| t == name)
    }

    pub fn subset(&self, names: &[&str]) -> Result<u64, TopologyError> {
        names.iter().try_fold(0u64, |acc, t| {
            self.token(t).map(|i| acc | 1 << i).ok_or_else(|| TopologyError::UnknownToken(t.to_string()))
        })
    }

    pub fn carrier(&self) -> u64 {
        full(self.len())
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below[b] >> a & 1 == 1
    }

    pub fn covers(&self, a: usize, p: u64) -> bool {
        self.covered[p as usize] >> a & 1 == 1
    }

    pub fn down(&self, p: u64) -> u64 {
        down_of(&self.below, p)
    }

    /// `ȷp = {a | a ◁ p}`.
    pub fn nucleus(&self, p: u64) -> FrameElement {
        FrameElement(self.covered[(p & self.carrier()) as usize])
    }

    pub fn is_stable(&self, p: u64) -> bool {
        self.covered[p as usize] == p
    }

    pub fn element(&self, p: u64) -> Option<FrameElement> {
        (p & !self.carrier() == 0 && self.is_stable(p)).then_some(FrameElement(p))
    }

    pub fn top(&self) -> FrameElement {
        FrameElement(self.carrier())
    }

    pub fn bottom(&self) -> FrameElement {
        self.nucleus(0)
    }

    /// All stable subsets, in increasing mask order.
    pub fn frame_elements(&self, budget: &Budget) -> Result<Vec<FrameElement>, TopologyError> {
        budget.check_steps("the subsets of the carrier", 1u64 << self.len())?;
        let out: Vec<FrameElement> = (0..1u64 << self.len()).filter(|&p| self.is_stable(p)).map(FrameElement).collect();
        budget.check_elements("the frame", out.len())?;
        Ok(out)
    }

    /// The generators `ȷ{s}`, one per token.
    pub fn generators(&self) -> Vec<FrameElement> {
        (0..self.len()).map(|s| self.nucleus(1 << s)).collect()
    }

    pub fn meet(&self, p: FrameElement, q: FrameElement) -> FrameElement {
        FrameElement(p.0 & q.0)
    }

    pub fn join(&self, p: FrameElement, q: FrameElement) -> FrameElement {
        self.nucleus(p.0 | q.0)
    }

    /// `p → q = ⋁{g | g ∧ p ≤ q}` over the generators.
    pub fn implies(&self, p: FrameElement, q: FrameElement) -> FrameElement {
        let u = self.generators().into_iter().filter(|g| self.meet(*g, p).leq(q)).fold(0, |acc, g| acc | g.0);
        self.nucleus(u)
    }

    /// `{x | x ∈ p → x ∈ q}`; agrees with [`FormalTopology::implies`] on Ω only.
    pub fn implies_pointwise(&self, p: FrameElement, q: FrameElement) -> u64 {
        (!p.0 | q.0) & self.carrier()
    }

    pub fn big_meet(&self, ps: &[FrameElement]) -> FrameElement {
        ps.iter().fold(self.top(), |acc, p| self.meet(acc, *p))
    }

    pub fn big_join(&self, ps: &[FrameElement]) -> FrameElement {
        ps.iter().fold(self.bottom(), |acc, p| self.join(acc, *p))
    }

    pub fn negate(&self, p: FrameElement) -> FrameElement {
        self.implies(p, self.bottom())
    }

    pub fn show(&self, p: u64) -> String {
        show_subset(&self.tokens, p)
    }

    /// `∀a ∀p: a ◁ p ⟺ ∃u ∈ r(a). u ⊆ p`.
    pub fn check_presentation(&self, r: &SetPresentation, budget: &Budget) -> Result<bool, TopologyError> {
        if r.0.len() != self.len() {
            return Ok(false);
        }
        budget.check_steps("the cover table", (1u64 << self.len()).saturating_mul(self.len() as u64))?;
        Ok((0..1u64 << self.len())
            .all(|p| (0..self.len()).all(|a| self.covers(a, p) == r.0[a].iter().any(|u| u & !p == 0))))
    }

    /// `r(a) = {u | a ◁ u, u minimal}`: a presentation whenever the cover is monotone in `p`.
    pub fn minimal_presentation(&self) -> SetPresentation {
        let n = self.len();
        SetPresentation(
            (0..n)
                .map(|a| {
                    let covering: Vec<u64> = (0..1u64 << n).filter(|&p| self.covers(a, p)).collect();
                    covering.iter().copied().filter(|&p| !covering.iter().any(|&q| q != p && q & !p == 0)).collect()
                })
                .collect(),
        )
    }

    pub fn candidate(&self) -> Candidate {
        Candidate { tokens: self.tokens.clone(), below: self.below.clone(), covered: self.covered.clone() }
    }

    /// The line format read by [`parse_topology`]; cover rows only for minimal covering subsets.
    pub fn to_text(&self) -> String {
        let mut out = format!("tokens {}\n", self.tokens.join(" "));
        for b in 0..self.len() {
            for a in bits(self.below[b]) {
                if a != b {
                    out.push_str(&format!("{} <= {}\n", self.tokens[a], self.tokens[b]));
                }
            }
        }
        for (a, us) in self.minimal_presentation().0.iter().enumerate() {
            for u in us {
                out.push_str(&format!("{} <| {}\n", self.tokens[a], self.show(*u)));
            }
        }
        out
    }
}

/// Reads the line format:
///
/// ```text
/// tokens a b c
/// a <= b
/// a <| {b,c}
/// ```
///
/// Order lines are closed reflexively and transitively. A row `a <| u`
/// makes `a` cover every superset of `u`; omitted covers are false. The
/// result is validated. `#` starts a comment.
pub fn parse_topology(text: &str, budget: &Budget) -> Result<FormalTopology, TopologyError> {
    let mut tokens: Option<Vec<String>> = None;
    let mut leq = Vec::new();
    let mut rows: Vec<(usize, String, Vec<String>)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        let syntax = |msg: &str| TopologyError::Syntax { line: i + 1, msg: msg.into() };
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("tokens") {
            if tokens.is_some() {
                return Err(syntax("second tokens line"));
            }
            tokens = Some(rest.split_whitespace().map(String::from).collect());
        } else if let Some((a, b)) = line.split_once("<=") {
            leq.push((i + 1, a.trim().to_string(), b.trim().to_string()));
        } else if let Some((a, u)) = line.split_once("<|") {
            let u = u.trim();
            let inner = u.strip_prefix('{').and_then(|s| s.strip_suffix('}')).ok_or_else(|| syntax("expected {...}"))?;
            let names = inner.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect();
            rows.push((i + 1, a.trim().to_string(), names));
        } else {
            return Err(syntax("expected `tokens`, `a <= b` or `a <| {...}`"));
        }
    }
    let tokens = tokens.ok_or(TopologyError::Syntax { line: 0, msg: "missing tokens line".into() })?;
    let n = tokens.len();
    if n > MAX_TOKENS {
        return Err(TopologyError::TooLarge(n));
    }
    let idx: BTreeMap<&str, usize> = tokens.iter().enumerate().map(|(i, t)| (t.as_str(), i)).collect();
    let get = |t: &str| idx.get(t).copied().ok_or_else(|| TopologyError::UnknownToken(t.into()));
    let mut below: Vec<u64> = (0..n).map(|i| 1 << i).collect();
    for (_, a, b) in &leq {
        below[get(b)?] |= 1 << get(a)?;
    }
    loop {
        let next: Vec<u64> = below.iter().map(|&m| down_of(&below, m)).collect();
        if next == below {
            break;
        }
        below = next;
    }
    let mut generators: Vec<(usize, u64)> = Vec::new();
    for (_, a, names) in &rows {
        let u = names.iter().try_fold(0u64, |acc, t| get(t).map(|i| acc | 1 << i))?;
        generators.push((get(a)?, u));
    }
    budget.check_steps("the cover table", (1u64 << n).saturating_mul(generators.len() as u64 + 1))?;
    let covered = (0..1u64 << n)
        .map(|p| generators.iter().filter(|(_, u)| u & !p == 0).fold(0u64, |acc, (a, _)| acc | 1 << a))
        .collect();
    validate(Candidate { tokens, below, covered }, budget)
}

impl FromStr for FormalTopology {
    type Err = TopologyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_topology(s, &Budget::default())
    }
}

impl fmt::Display for FormalTopology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// All partial orders on `n` labelled points `a, b, ...`; isomorphic copies repeat.
pub fn all_posets(n: usize) -> Vec<FormalTopology> {
    let names: Vec<String> = (0..n).map(|i| format!("{}", (b'a' + i as u8) as char)).collect();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let rel: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| *p).collect();
        let le = |a: usize, b: usize| a == b || rel.contains(&(a, b));
        let antisym = rel.iter().all(|&(a, b)| !le(b, a));
        let trans = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(le(a, b) && le(b, c)) || le(a, c))));
        if antisym && trans {
            let toks: Vec<&str> = names.iter().map(String::as_str).collect();
            let leq: Vec<(&str, &str)> = rel.iter().map(|&(a, b)| (toks[a], toks[b])).collect();
            out.push(from_poset(&toks, &leq).expect("posets give topologies"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain() -> FormalTopology {
        from_poset(&["a", "b"], &[("a", "b")]).unwrap()
    }

    fn subsets_of(t: &FormalTopology, ps: &[&[&str]]) -> Vec<FrameElement> {
        ps.iter().map(|p| FrameElement(t.subset(p).unwrap())).collect()
    }

    #[test]
    fn validate_examples() {
        let b = Budget::default();
        assert!(omega().candidate().violations(&b).unwrap().is_empty());
        let mut c = omega().candidate();
        c.covered[1] = 0;
        let v = c.violations(&b).unwrap();
        assert!(v.contains(&Violation::Reflexivity { a: 0, p: 1 }));
        assert_eq!(v[0].axiom(), 1);
        assert!(matches!(validate(c, &b), Err(TopologyError::Invalid(_))));
    }

    #[test]
    fn nucleus_examples() {
        let o = omega();
        assert_eq!(o.nucleus(0), FrameElement(0));
        assert_eq!(o.nucleus(1), FrameElement(1));
        let t = chain();
        assert_eq!(t.nucleus(t.subset(&["b"]).unwrap()), FrameElement(t.subset(&["a", "b"]).unwrap()));
    }

    #[test]
    fn frame_examples() {
        let b = Budget::default();
        assert_eq!(omega().frame_elements(&b).unwrap(), vec![FrameElement(0), FrameElement(1)]);
        let point = from_poset(&["p"], &[]).unwrap();
        assert_eq!(point.frame_elements(&b).unwrap().len(), 2);
        let t = chain();
        assert_eq!(t.frame_elements(&b).unwrap(), subsets_of(&t, &[&[], &["a"], &["a", "b"]]));
        let anti = from_poset(&["a", "b"], &[]).unwrap();
        assert_eq!(anti.frame_elements(&b).unwrap().len(), 4);
    }

    #[test]
    fn frame_op_examples() {
        let o = omega();
        assert_eq!(o.meet(o.top(), FrameElement(0)), FrameElement(0));
        assert_eq!(o.implies(FrameElement(1), FrameElement(0)), FrameElement(0));
        let t = chain();
        let a = FrameElement(t.subset(&["a"]).unwrap());
        let jb = t.nucleus(t.subset(&["b"]).unwrap());
        assert_eq!(t.join(a, jb), t.top());
        // The pointwise formula leaves the lower sets here.
        assert_eq!(t.implies_pointwise(a, t.bottom()), t.subset(&["b"]).unwrap());
        assert_eq!(t.implies(a, t.bottom()), t.bottom());
    }

    #[test]
    fn presentation_examples() {
        let b = Budget::default();
        let o = omega();
        assert!(o.check_presentation(&SetPresentation(vec![vec![1]]), &b).unwrap());
        assert!(!o.check_presentation(&SetPresentation(vec![vec![]]), &b).unwrap());
        let t = chain();
        // r(x) = {{y} | x ≤ y}
        let r = SetPresentation(
            (0..t.len()).map(|x| (0..t.len()).filter(|&y| t.leq(x, y)).map(|y| 1u64 << y).collect()).collect(),
        );
        assert!(t.check_presentation(&r, &b).unwrap());
        assert!(t.check_presentation(&t.minimal_presentation(), &b).unwrap());
    }

    #[test]
    fn poset_counts() {
        // Labelled posets on 0..3 points: 1, 1, 3, 19.
        assert_eq!([0, 1, 2, 3].map(|n| all_posets(n).len()), [1, 1, 3, 19]);
    }

    #[test]
    fn text_round_trip() {
        for t in all_posets(3).into_iter().chain([omega()]) {
            assert_eq!(t.to_text().parse::<FormalTopology>().unwrap(), t);
        }
        let t: FormalTopology = "tokens a b # two points\na <= b\na <| {a}\nb <| {b}\na <| {b}\n".parse().unwrap();
        assert_eq!(t, chain());
        assert!(matches!("tokens a\nb <| {a}".parse::<FormalTopology>(), Err(TopologyError::UnknownToken(_))));
        assert!(matches!("tokens a\n".parse::<FormalTopology>(), Err(TopologyError::Invalid(_))));
    }

    fn laws(t: &FormalTopology) {
        let b = Budget::default();
        let n = t.len();
        for p in 0..1u64 << n {
            let jp = t.nucleus(p).0;
            assert_eq!(p & !jp, 0);
            assert_eq!(t.nucleus(jp).0, jp);
            for q in 0..1u64 << n {
                if p & !q == 0 {
                    assert_eq!(jp & !t.nucleus(q).0, 0);
                }
            }
        }
        let fr = t.frame_elements(&b).unwrap();
        for &p in &fr {
            let below: Vec<_> = t.generators().into_iter().filter(|g| g.leq(p)).collect();
            assert_eq!(t.big_join(&below), p);
            for &q in &fr {
                assert_eq!(t.meet(p, q), t.meet(q, p));
                assert_eq!(t.join(p, q), t.join(q, p));
                assert_eq!(t.meet(p, t.join(p, q)), p);
                assert_eq!(t.join(p, t.meet(p, q)), p);
                for &r in &fr {
                    assert_eq!(t.meet(p, t.meet(q, r)), t.meet(t.meet(p, q), r));
                    assert_eq!(t.join(p, t.join(q, r)), t.join(t.join(p, q), r));
                    assert_eq!(t.meet(p, t.join(q, r)), t.join(t.meet(p, q), t.meet(p, r)));
                    assert_eq!(r.leq(t.implies(p, q)), t.meet(r, p).leq(q));
                }
            }
        }
    }

    #[test]
    fn frame_laws_small() {
        laws(&omega());
        for n in 0..=3 {
            for t in all_posets(n) {
                laws(&t);
            }
        }
    }

    #[test]
    fn pointwise_agrees_on_omega() {
        let o = omega();
        for p in [0, 1] {
            for q in [0, 1] {
                assert_eq!(o.implies(FrameElement(p), FrameElement(q)).0, o.implies_pointwise(FrameElement(p), FrameElement(q)));
            }
        }
    }
}
