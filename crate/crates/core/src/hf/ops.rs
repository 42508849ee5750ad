use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use super::HfSet;

/// The thirteen fundamental operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OpSymbol {
    /// `{x, y}`
    Pair,
    /// `x ∩ ⋂y`, with `x` when `y` is empty.
    Inter,
    /// `⋃x` (unary)
    Union,
    /// `x \ y`
    Diff,
    /// `x × y`
    Prod,
    /// `{z ∈ x | z ∈ 1st y → z ∈ 2nd y}`, empty unless `y` is a pair.
    Imp,
    /// `{x"{z} | z ∈ y}`
    Forall,
    /// `dom x`
    Dom,
    /// `ran x`
    Ran,
    /// `{<u,v,w> | <u,v> ∈ x, w ∈ y}`
    Rot123,
    /// `{<u,w,v> | <u,v> ∈ x, w ∈ y}`
    Rot132,
    /// `{<v,u> ∈ y × x | u = v}`
    EqRel,
    /// `{<v,u> ∈ y × x | u ∈ v}`
    MemRel,
}

pub const ALL_OPS: [OpSymbol; 13] = [
    OpSymbol::Pair,
    OpSymbol::Inter,
    OpSymbol::Union,
    OpSymbol::Diff,
    OpSymbol::Prod,
    OpSymbol::Imp,
    OpSymbol::Forall,
    OpSymbol::Dom,
    OpSymbol::Ran,
    OpSymbol::Rot123,
    OpSymbol::Rot132,
    OpSymbol::EqRel,
    OpSymbol::MemRel,
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OpError {
    #[error("{op} takes {expected} argument(s), got {got}")]
    Arity { op: OpSymbol, expected: usize, got: usize },
    #[error("placeholder #{index} out of range for {len} argument(s)")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("unknown operation symbol '{0}'")]
    UnknownSymbol(String),
}

impl OpSymbol {
    pub fn arity(self) -> usize {
        if self == OpSymbol::Union {
            1
        } else {
            2
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OpSymbol::Pair => "p",
            OpSymbol::Inter => "cap",
            OpSymbol::Union => "cup",
            OpSymbol::Diff => "diff",
            OpSymbol::Prod => "times",
            OpSymbol::Imp => "imp",
            OpSymbol::Forall => "all",
            OpSymbol::Dom => "d",
            OpSymbol::Ran => "r",
            OpSymbol::Rot123 => "123",
            OpSymbol::Rot132 => "132",
            OpSymbol::EqRel => "eq",
            OpSymbol::MemRel => "in",
        }
    }
}

impl fmt::Display for OpSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.name())
    }
}

impl FromStr for OpSymbol {
    type Err = OpError;

    /// Accepts `F_p`, `p`, and the symbolic spellings `∩ ∪ \ × → ∀ = ∈`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.strip_prefix("F_").unwrap_or(s);
        let op = match key {
            "p" => OpSymbol::Pair,
            "cap" | "∩" => OpSymbol::Inter,
            "cup" | "∪" => OpSymbol::Union,
            "diff" | "\\" => OpSymbol::Diff,
            "times" | "×" => OpSymbol::Prod,
            "imp" | "->" | "→" => OpSymbol::Imp,
            "all" | "∀" => OpSymbol::Forall,
            "d" => OpSymbol::Dom,
            "r" => OpSymbol::Ran,
            "123" => OpSymbol::Rot123,
            "132" => OpSymbol::Rot132,
            "eq" | "=" => OpSymbol::EqRel,
            "in" | "∈" => OpSymbol::MemRel,
            _ => return Err(OpError::UnknownSymbol(s.to_string())),
        };
        Ok(op)
    }
}

fn pairs(x: &HfSet) -> impl Iterator<Item = (HfSet, HfSet)> + '_ {
    x.iter().filter_map(HfSet::as_pair)
}

/// `⋂y` restricted to `x`; `x` itself when `y` is empty.
fn inter(x: &HfSet, y: &HfSet) -> HfSet {
    HfSet::from_elements(x.iter().filter(|z| y.iter().all(|w| w.contains(z))).cloned())
}

/// Applies a fundamental operation.
pub fn fundamental_op(op: OpSymbol, args: &[HfSet]) -> Result<HfSet, OpError> {
    if args.len() != op.arity() {
        return Err(OpError::Arity { op, expected: op.arity(), got: args.len() });
    }
    let x = &args[0];
    if op == OpSymbol::Union {
        return Ok(x.big_union());
    }
    let y = &args[1];
    Ok(match op {
        OpSymbol::Pair => HfSet::pair(x.clone(), y.clone()),
        OpSymbol::Inter => inter(x, y),
        OpSymbol::Union => unreachable!(),
        OpSymbol::Diff => x.difference(y),
        OpSymbol::Prod => HfSet::from_elements(x.iter().flat_map(|a| y.iter().map(move |b| HfSet::ordered_pair(a, b)))),
        OpSymbol::Imp => match y.as_pair() {
            Some((u, v)) => HfSet::from_elements(x.iter().filter(|z| !u.contains(z) || v.contains(z)).cloned()),
            None => HfSet::empty(),
        },
        OpSymbol::Forall => HfSet::from_elements(
            y.iter().map(|z| HfSet::from_elements(pairs(x).filter(|(a, _)| a == z).map(|(_, b)| b))),
        ),
        OpSymbol::Dom => HfSet::from_elements(pairs(x).map(|(a, _)| a)),
        OpSymbol::Ran => HfSet::from_elements(pairs(x).map(|(_, b)| b)),
        OpSymbol::Rot123 => HfSet::from_elements(
            pairs(x).flat_map(|(u, v)| y.iter().map(move |w| HfSet::triple(&u, &v, w)).collect::<Vec<_>>()),
        ),
        OpSymbol::Rot132 => HfSet::from_elements(
            pairs(x).flat_map(|(u, v)| y.iter().map(move |w| HfSet::triple(&u, w, &v)).collect::<Vec<_>>()),
        ),
        OpSymbol::EqRel => {
            HfSet::from_elements(y.iter().filter(|v| x.contains(v)).map(|v| HfSet::ordered_pair(v, v)))
        }
        OpSymbol::MemRel => HfSet::from_elements(
            y.iter().flat_map(|v| x.iter().filter(|u| v.contains(u)).map(move |u| HfSet::ordered_pair(v, u))),
        ),
    })
}

/// A term over the fundamental operations with argument placeholders `#1, #2, ...`.
///
/// Subterms are shared, so a term is a DAG; evaluation memoizes per node.
#[derive(Clone, PartialEq, Eq)]
pub struct OpTerm(Arc<OpNode>);

#[derive(PartialEq, Eq)]
pub enum OpNode {
    /// 1-based.
    Arg(usize),
    App(OpSymbol, Vec<OpTerm>),
}

impl OpTerm {
    pub fn arg(i: usize) -> OpTerm {
        assert!(i >= 1, "placeholders are 1-based");
        OpTerm(Arc::new(OpNode::Arg(i)))
    }

    pub fn app(op: OpSymbol, args: Vec<OpTerm>) -> Result<OpTerm, OpError> {
        if args.len() != op.arity() {
            return Err(OpError::Arity { op, expected: op.arity(), got: args.len() });
        }
        Ok(OpTerm(Arc::new(OpNode::App(op, args))))
    }

    pub(crate) fn bin(op: OpSymbol, a: &OpTerm, b: &OpTerm) -> OpTerm {
        debug_assert_eq!(op.arity(), 2);
        OpTerm(Arc::new(OpNode::App(op, vec![a.clone(), b.clone()])))
    }

    pub(crate) fn un(op: OpSymbol, a: &OpTerm) -> OpTerm {
        debug_assert_eq!(op.arity(), 1);
        OpTerm(Arc::new(OpNode::App(op, vec![a.clone()])))
    }

    pub fn node(&self) -> &OpNode {
        &self.0
    }

    fn key(&self) -> usize {
        Arc::as_ptr(&self.0) as usize
    }

    /// Number of distinct nodes in the DAG.
    pub fn dag_size(&self) -> usize {
        let mut seen = std::collections::HashSet::new();
        let mut stack = vec![self.clone()];
        while let Some(t) = stack.pop() {
            if seen.insert(t.key()) {
                if let OpNode::App(_, xs) = t.node() {
                    stack.extend(xs.iter().cloned());
                }
            }
        }
        seen.len()
    }

    /// Largest placeholder index used.
    pub fn max_arg(&self) -> usize {
        let mut memo = HashMap::new();
        fn go(t: &OpTerm, memo: &mut HashMap<usize, usize>) -> usize {
            if let Some(&m) = memo.get(&t.key()) {
                return m;
            }
            let m = match t.node() {
                OpNode::Arg(i) => *i,
                OpNode::App(_, xs) => xs.iter().map(|x| go(x, memo)).max().unwrap_or(0),
            };
            memo.insert(t.key(), m);
            m
        }
        go(self, &mut memo)
    }
}

impl fmt::Display for OpTerm {
    /// Fully expanded tree form; shared subterms are printed at every use.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.node() {
            OpNode::Arg(i) => write!(f, "#{i}"),
            OpNode::App(op, xs) => {
                write!(f, "{op}(")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Debug for OpTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OpTerm[{} nodes]", self.dag_size())
    }
}

/// Bottom-up evaluation with one evaluation per shared node.
pub fn eval_opterm(t: &OpTerm, args: &[HfSet]) -> Result<HfSet, OpError> {
    let mut memo: HashMap<usize, HfSet> = HashMap::new();
    eval_memo(t, args, &mut memo)
}

fn eval_memo(t: &OpTerm, args: &[HfSet], memo: &mut HashMap<usize, HfSet>) -> Result<HfSet, OpError> {
    if let Some(v) = memo.get(&t.key()) {
        return Ok(v.clone());
    }
    let v = match t.node() {
        OpNode::Arg(i) => args.get(i - 1).cloned().ok_or(OpError::IndexOutOfRange { index: *i, len: args.len() })?,
        OpNode::App(op, xs) => {
            let vals = xs.iter().map(|x| eval_memo(x, args, memo)).collect::<Result<Vec<_>, _>>()?;
            fundamental_op(*op, &vals)?
        }
    };
    memo.insert(t.key(), v.clone());
    Ok(v)
}
