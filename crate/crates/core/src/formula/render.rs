use super::{Formula, Term};

// Binding strength: 1 for `->`, 2 for `|`, 3 for `&`, 4 for unary and atoms.
fn level(f: &Formula) -> u8 {
    match f {
        Formula::Imp(_, b) if **b == Formula::Falsum => 4,
        Formula::Imp(..) => 1,
        Formula::Or(..) => 2,
        Formula::And(..) => 3,
        _ => 4,
    }
}

fn is_quantifier(f: &Formula) -> bool {
    matches!(
        f,
        Formula::BoundedAll(..)
            | Formula::BoundedEx(..)
            | Formula::All(..)
            | Formula::Ex(..)
            | Formula::ClassAll(..)
            | Formula::ClassEx(..)
    )
}

/// Renders canonical source text; `parse(render(f)) == f`.
///
/// Quantifiers are parenthesized whenever they are an operand, since their
/// bodies extend maximally to the right.
pub fn render(f: &Formula) -> String {
    let mut out = String::new();
    write(f, &mut out);
    out
}

fn operand(f: &Formula, min: u8, out: &mut String) {
    if is_quantifier(f) || level(f) < min {
        out.push('(');
        write(f, out);
        out.push(')');
    } else {
        write(f, out);
    }
}

fn term(t: &Term, out: &mut String) {
    match t {
        Term::Var(v) => out.push_str(v),
        Term::Lit(s) => out.push_str(s.as_str()),
    }
}

fn write(f: &Formula, out: &mut String) {
    match f {
        Formula::Falsum => out.push_str("false"),
        Formula::Prop(p) => out.push_str(p),
        Formula::Eq(a, b) => {
            term(a, out);
            out.push_str(" = ");
            term(b, out);
        }
        Formula::Mem(a, b) => {
            term(a, out);
            out.push_str(" in ");
            term(b, out);
        }
        Formula::ClassMem(a, c) => {
            term(a, out);
            out.push_str(" in ");
            out.push_str(c);
        }
        Formula::ClassEq(a, b) => {
            out.push_str(a);
            out.push_str(" = ");
            out.push_str(b);
        }
        Formula::Imp(a, b) if **b == Formula::Falsum => {
            out.push('~');
            let bare = matches!(**a, Formula::Falsum | Formula::Prop(_)) || a.negated().is_some();
            if bare {
                write(a, out);
            } else {
                out.push('(');
                write(a, out);
                out.push(')');
            }
        }
        Formula::Imp(a, b) => {
            operand(a, 2, out);
            out.push_str(" -> ");
            operand(b, 1, out);
        }
        Formula::Or(a, b) => {
            operand(a, 2, out);
            out.push_str(" | ");
            operand(b, 3, out);
        }
        Formula::And(a, b) => {
            operand(a, 3, out);
            out.push_str(" & ");
            operand(b, 4, out);
        }
        Formula::BigAnd(xs) | Formula::BigOr(xs) => {
            out.push_str(if matches!(f, Formula::BigAnd(_)) { "bigand [" } else { "bigor [" });
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write(x, out);
            }
            out.push(']');
        }
        Formula::BoundedAll(x, t, body) | Formula::BoundedEx(x, t, body) => {
            out.push_str(if matches!(f, Formula::BoundedAll(..)) { "all " } else { "ex " });
            out.push_str(x);
            out.push_str(" in ");
            term(t, out);
            out.push_str(". ");
            write(body, out);
        }
        Formula::All(x, body) | Formula::Ex(x, body) | Formula::ClassAll(x, body) | Formula::ClassEx(x, body) => {
            out.push_str(if matches!(f, Formula::All(..) | Formula::ClassAll(..)) { "all " } else { "ex " });
            out.push_str(x);
            out.push_str(". ");
            write(body, out);
        }
    }
}
