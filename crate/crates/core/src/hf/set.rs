use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

/// A hereditarily finite set in canonical form.
///
/// Elements are deduplicated and sorted by the byte order of their canonical
/// serialization, so equality, ordering and hashing all reduce to comparing
/// the cached serialization string.
#[derive(Clone)]
pub struct HfSet(Arc<Node>);

struct Node {
    elems: Vec<HfSet>,
    repr: Box<str>,
    rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HfParseError {
    #[error("unexpected {found} at byte {pos}")]
    Unexpected { pos: usize, found: String },
    #[error("unexpected end of input")]
    Eof,
}

impl HfSet {
    pub fn empty() -> Self {
        Self::from_sorted(Vec::new())
    }

    pub fn from_elements<I: IntoIterator<Item = HfSet>>(iter: I) -> Self {
        let mut elems: Vec<HfSet> = iter.into_iter().collect();
        elems.sort();
        elems.dedup();
        Self::from_sorted(elems)
    }

    fn from_sorted(elems: Vec<HfSet>) -> Self {
        let mut repr = String::with_capacity(2 + elems.iter().map(|e| e.0.repr.len() + 1).sum::<usize>());
        repr.push('{');
        for (i, e) in elems.iter().enumerate() {
            if i > 0 {
                repr.push(',');
            }
            repr.push_str(&e.0.repr);
        }
        repr.push('}');
        let rank = elems.iter().map(|e| e.0.rank + 1).max().unwrap_or(0);
        HfSet(Arc::new(Node { elems, repr: repr.into_boxed_str(), rank }))
    }

    pub fn singleton(x: HfSet) -> Self {
        Self::from_sorted(vec![x])
    }

    /// The unordered pair `{a, b}`.
    pub fn pair(a: HfSet, b: HfSet) -> Self {
        Self::from_elements([a, b])
    }

    /// Kuratowski pair `{{a}, {a, b}}`.
    pub fn ordered_pair(a: &HfSet, b: &HfSet) -> Self {
        Self::pair(Self::singleton(a.clone()), Self::pair(a.clone(), b.clone()))
    }

    /// `<u, v, w> = <u, <v, w>>`.
    pub fn triple(u: &HfSet, v: &HfSet, w: &HfSet) -> Self {
        Self::ordered_pair(u, &Self::ordered_pair(v, w))
    }

    /// Right-nested tuple `<t0, <t1, ... >>`; a 1-tuple is the element itself.
    pub fn tuple(items: &[HfSet]) -> Self {
        match items {
            [] => panic!("tuple of length zero"),
            [x] => x.clone(),
            [x, rest @ ..] => Self::ordered_pair(x, &Self::tuple(rest)),
        }
    }

    /// Decodes a Kuratowski pair.
    pub fn as_pair(&self) -> Option<(HfSet, HfSet)> {
        match self.elems() {
            [w] => match w.elems() {
                [a] => Some((a.clone(), a.clone())),
                _ => None,
            },
            [e1, e2] => {
                for (s, d) in [(e1, e2), (e2, e1)] {
                    if let ([a], [x, y]) = (s.elems(), d.elems()) {
                        if x == a {
                            return Some((a.clone(), y.clone()));
                        }
                        if y == a {
                            return Some((a.clone(), x.clone()));
                        }
                    }
                }
                None
            }
            _ => None,
        }
    }

    pub fn is_pair(&self) -> bool {
        self.as_pair().is_some()
    }

    /// The von Neumann natural `n`.
    pub fn von_neumann(n: usize) -> Self {
        let mut cur = Self::empty();
        for _ in 0..n {
            cur = cur.successor();
        }
        cur
    }

    /// `x ∪ {x}`.
    pub fn successor(&self) -> Self {
        let mut v = self.elems().to_vec();
        v.push(self.clone());
        Self::from_elements(v)
    }

    /// Inverse of [`HfSet::von_neumann`].
    pub fn as_natural(&self) -> Option<usize> {
        let n = self.len();
        (*self == Self::von_neumann(n)).then_some(n)
    }

    pub fn elems(&self) -> &[HfSet] {
        &self.0.elems
    }

    pub fn iter(&self) -> std::slice::Iter<'_, HfSet> {
        self.0.elems.iter()
    }

    pub fn len(&self) -> usize {
        self.0.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.elems.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.0.rank
    }

    pub fn as_str(&self) -> &str {
        &self.0.repr
    }

    pub fn contains(&self, x: &HfSet) -> bool {
        self.0.elems.binary_search(x).is_ok()
    }

    pub fn is_subset(&self, other: &HfSet) -> bool {
        self.len() <= other.len() && self.iter().all(|x| other.contains(x))
    }

    pub fn union(&self, other: &HfSet) -> HfSet {
        Self::from_elements(self.iter().chain(other.iter()).cloned())
    }

    pub fn intersection(&self, other: &HfSet) -> HfSet {
        Self::from_sorted(self.iter().filter(|x| other.contains(x)).cloned().collect())
    }

    pub fn difference(&self, other: &HfSet) -> HfSet {
        Self::from_sorted(self.iter().filter(|x| !other.contains(x)).cloned().collect())
    }

    /// `⋃x`.
    pub fn big_union(&self) -> HfSet {
        Self::from_elements(self.iter().flat_map(|e| e.iter().cloned()))
    }

    pub fn is_transitive(&self) -> bool {
        self.iter().all(|e| e.is_subset(self))
    }

    /// The transitive closure, which contains every element of every element.
    pub fn transitive_closure(&self) -> HfSet {
        let mut out = std::collections::BTreeSet::new();
        let mut stack: Vec<HfSet> = self.elems().to_vec();
        while let Some(x) = stack.pop() {
            if out.insert(x.clone()) {
                stack.extend(x.iter().cloned());
            }
        }
        Self::from_sorted(out.into_iter().collect())
    }

    /// All subsets, in binary-counter order over the canonical element order.
    pub fn subsets(&self) -> Vec<HfSet> {
        let n = self.len();
        assert!(n < 24, "subsets of a set with {n} elements");
        (0u32..1 << n)
            .map(|mask| {
                Self::from_sorted(
                    self.iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, x)| x.clone())
                        .collect(),
                )
            })
            .collect()
    }

    /// `V_n`, the sets of rank below `n`.
    pub fn cumulative(n: usize) -> HfSet {
        let mut v = Self::empty();
        for _ in 0..n {
            v = Self::from_elements(v.subsets());
        }
        v
    }
}

impl PartialEq for HfSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.repr == other.0.repr
    }
}

impl Eq for HfSet {}

impl PartialOrd for HfSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HfSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.repr.as_bytes().cmp(other.0.repr.as_bytes())
    }
}

impl Hash for HfSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.repr.hash(state)
    }
}

impl fmt::Display for HfSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.repr)
    }
}

impl fmt::Debug for HfSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.repr)
    }
}

impl FromStr for HfSet {
    type Err = HfParseError;

    /// Accepts any nesting of braces with optional whitespace; the result is canonical.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bytes = s.as_bytes();
        let mut pos = 0;
        let set = parse_literal(bytes, &mut pos)?;
        skip_ws(bytes, &mut pos);
        if pos < bytes.len() {
            return Err(unexpected(s, pos));
        }
        Ok(set)
    }
}

fn skip_ws(b: &[u8], pos: &mut usize) {
    while *pos < b.len() && b[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
}

fn unexpected(s: &str, pos: usize) -> HfParseError {
    let found = s[pos..].chars().next().map(|c| format!("'{c}'")).unwrap_or_default();
    HfParseError::Unexpected { pos, found }
}

fn parse_literal(b: &[u8], pos: &mut usize) -> Result<HfSet, HfParseError> {
    skip_ws(b, pos);
    let src = std::str::from_utf8(b).unwrap_or("");
    match b.get(*pos) {
        Some(b'{') => *pos += 1,
        Some(_) => return Err(unexpected(src, *pos)),
        None => return Err(HfParseError::Eof),
    }
    let mut elems = Vec::new();
    skip_ws(b, pos);
    if b.get(*pos) == Some(&b'}') {
        *pos += 1;
        return Ok(HfSet::empty());
    }
    loop {
        elems.push(parse_literal(b, pos)?);
        skip_ws(b, pos);
        match b.get(*pos) {
            Some(b',') => *pos += 1,
            Some(b'}') => {
                *pos += 1;
                return Ok(HfSet::from_elements(elems));
            }
            Some(_) => return Err(unexpected(src, *pos)),
            None => return Err(HfParseError::Eof),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn hf(s: &str) -> HfSet {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_order_and_dedup() {
        let s = hf("{ {{}}, {}, {} }");
        assert_eq!(s.as_str(), "{{{}},{}}");
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn pairs_roundtrip() {
        let a = hf("{}");
        let b = hf("{{}}");
        assert_eq!(HfSet::ordered_pair(&a, &b).as_pair(), Some((a.clone(), b.clone())));
        assert_eq!(HfSet::ordered_pair(&b, &a).as_pair(), Some((b.clone(), a.clone())));
        assert_eq!(HfSet::ordered_pair(&a, &a).as_pair(), Some((a.clone(), a.clone())));
        assert!(hf("{}").as_pair().is_none());
    }

    #[test]
    fn two_is_not_a_pair() {
        assert_eq!(HfSet::ordered_pair(&HfSet::empty(), &HfSet::empty()).as_str(), "{{{}}}");
        assert!(HfSet::von_neumann(2).as_pair().is_none());
    }

    #[test]
    fn cumulative_sizes() {
        let sizes: Vec<usize> = (0..5).map(|n| HfSet::cumulative(n).len()).collect();
        assert_eq!(sizes, vec![0, 1, 2, 4, 16]);
        assert!(HfSet::cumulative(4).is_transitive());
    }

    #[test]
    fn naturals() {
        assert_eq!(HfSet::von_neumann(2).as_str(), "{{{}},{}}");
        assert_eq!(HfSet::von_neumann(3).as_natural(), Some(3));
        assert_eq!(hf("{{{}}}").as_natural(), None);
        assert_eq!(HfSet::von_neumann(3).rank(), 3);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("{".parse::<HfSet>(), Err(HfParseError::Eof)));
        assert!(matches!("{}x".parse::<HfSet>(), Err(HfParseError::Unexpected { pos: 2, .. })));
    }

    pub(crate) fn arb_hf(depth: u32) -> impl Strategy<Value = HfSet> {
        let leaf = Just(HfSet::empty());
        leaf.prop_recursive(depth, 24, 4, |inner| {
            prop::collection::vec(inner, 0..4).prop_map(HfSet::from_elements)
        })
    }

    proptest! {
        #[test]
        fn serialization_roundtrips(x in arb_hf(4)) {
            let back: HfSet = x.as_str().parse().unwrap();
            prop_assert_eq!(back, x);
        }

        #[test]
        fn extensional_equality(x in arb_hf(3), y in arb_hf(3)) {
            let ext = x.is_subset(&y) && y.is_subset(&x);
            prop_assert_eq!(ext, x == y);
        }

        #[test]
        fn ordered_pairs_decode(x in arb_hf(3), y in arb_hf(3)) {
            prop_assert_eq!(HfSet::ordered_pair(&x, &y).as_pair(), Some((x, y)));
        }

        #[test]
        fn closure_is_transitive(x in arb_hf(4)) {
            let tc = x.transitive_closure();
            prop_assert!(tc.is_transitive());
            prop_assert!(x.is_subset(&tc));
        }
    }
}
