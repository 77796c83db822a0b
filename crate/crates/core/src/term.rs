//! Nominal terms: variables, abstractions, applications and explicit
//! substitutions, with their size, free variables and name swapping.

use std::fmt;

use crate::atoms::{Atom, AtomSet};

/// A raw nominal term. Equality is syntactic; see [`crate::alpha`] for
/// α-equivalence.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(Atom),
    /// `\x. body`
    Abs(Atom, Box<Term>),
    App(Box<Term>, Box<Term>),
    /// `ESub(body, x, arg)` is the explicit substitution `[x := arg] body`.
    /// `x` is bound in `body` only.
    ESub(Box<Term>, Atom, Box<Term>),
}

impl Term {
    pub fn var(x: Atom) -> Term {
        Term::Var(x)
    }

    pub fn abs(x: Atom, body: Term) -> Term {
        Term::Abs(x, Box::new(body))
    }

    pub fn app(fun: Term, arg: Term) -> Term {
        Term::App(Box::new(fun), Box::new(arg))
    }

    /// `[x := arg] body`
    pub fn esub(body: Term, x: Atom, arg: Term) -> Term {
        Term::ESub(Box::new(body), x, Box::new(arg))
    }

    /// Number of constructor nodes. Always at least 1.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::Abs(_, t) => 1 + t.size(),
            Term::App(t1, t2) | Term::ESub(t1, _, t2) => 1 + t1.size() + t2.size(),
        }
    }

    /// Free variables.
    pub fn fv(&self) -> AtomSet {
        match self {
            Term::Var(x) => AtomSet::singleton(x.clone()),
            Term::Abs(x, t) => t.fv().without(x),
            Term::App(t1, t2) => t1.fv().union(&t2.fv()),
            Term::ESub(t1, x, t2) => t1.fv().without(x).union(&t2.fv()),
        }
    }

    pub fn is_free(&self, x: &Atom) -> bool {
        match self {
            Term::Var(y) => x == y,
            Term::Abs(y, t) => x != y && t.is_free(x),
            Term::App(t1, t2) => t1.is_free(x) || t2.is_free(x),
            Term::ESub(t1, y, t2) => (x != y && t1.is_free(x)) || t2.is_free(x),
        }
    }

    /// Every atom occurring anywhere in the term, binders included.
    pub fn atoms(&self) -> AtomSet {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out.into_iter().collect()
    }

    fn collect_atoms(&self, out: &mut Vec<Atom>) {
        match self {
            Term::Var(x) => out.push(x.clone()),
            Term::Abs(x, t) => {
                out.push(x.clone());
                t.collect_atoms(out);
            }
            Term::App(t1, t2) => {
                t1.collect_atoms(out);
                t2.collect_atoms(out);
            }
            Term::ESub(t1, x, t2) => {
                out.push(x.clone());
                t1.collect_atoms(out);
                t2.collect_atoms(out);
            }
        }
    }

    /// Exchanges `x` and `y` at every position, binders included.
    pub fn swap(&self, x: &Atom, y: &Atom) -> Term {
        match self {
            Term::Var(z) => Term::Var(vswap(x, y, z).clone()),
            Term::Abs(z, t) => Term::abs(vswap(x, y, z).clone(), t.swap(x, y)),
            Term::App(t1, t2) => Term::app(t1.swap(x, y), t2.swap(x, y)),
            Term::ESub(t1, z, t2) => {
                Term::esub(t1.swap(x, y), vswap(x, y, z).clone(), t2.swap(x, y))
            }
        }
    }

    /// Applies `f` to every atom occurrence, binders included. This is a raw
    /// renaming, not capture-avoiding.
    pub fn map_atoms(&self, f: &impl Fn(&Atom) -> Atom) -> Term {
        match self {
            Term::Var(z) => Term::Var(f(z)),
            Term::Abs(z, t) => Term::abs(f(z), t.map_atoms(f)),
            Term::App(t1, t2) => Term::app(t1.map_atoms(f), t2.map_atoms(f)),
            Term::ESub(t1, z, t2) => Term::esub(t1.map_atoms(f), f(z), t2.map_atoms(f)),
        }
    }

    /// Immediate subterms, largest first.
    pub fn children(&self) -> Vec<&Term> {
        let mut out: Vec<&Term> = match self {
            Term::Var(_) => vec![],
            Term::Abs(_, t) => vec![t],
            Term::App(t1, t2) | Term::ESub(t1, _, t2) => vec![t1, t2],
        };
        out.sort_by_key(|t| std::cmp::Reverse(t.size()));
        out
    }

    fn is_binder(&self) -> bool {
        matches!(self, Term::Abs(..) | Term::ESub(..))
    }
}

/// The swap action on a single atom.
pub fn vswap<'a>(x: &'a Atom, y: &'a Atom, z: &'a Atom) -> &'a Atom {
    if z == x {
        y
    } else if z == y {
        x
    } else {
        z
    }
}

/// Renders in the concrete syntax accepted by [`crate::parser::parse`]:
/// `\x. t`, `[x := u] t`, left-associative juxtaposition, and parentheses
/// only where a reparse would otherwise differ.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(f, self, true)
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}

// A binder's body extends as far right as possible, so a binder can be
// printed bare only when nothing follows it (`tail`).
fn write_term(f: &mut fmt::Formatter<'_>, t: &Term, tail: bool) -> fmt::Result {
    match t {
        Term::Var(x) => write!(f, "{x}"),
        Term::Abs(..) | Term::ESub(..) if !tail => {
            f.write_str("(")?;
            write_term(f, t, true)?;
            f.write_str(")")
        }
        Term::Abs(x, body) => {
            write!(f, "\\{x}. ")?;
            write_term(f, body, true)
        }
        Term::ESub(body, x, arg) => {
            write!(f, "[{x} := ")?;
            write_term(f, arg, true)?;
            f.write_str("] ")?;
            write_term(f, body, true)
        }
        Term::App(fun, arg) => {
            write_term(f, fun, false)?;
            f.write_str(" ")?;
            match **arg {
                Term::App(..) => {
                    f.write_str("(")?;
                    write_term(f, arg, true)?;
                    f.write_str(")")
                }
                _ if arg.is_binder() => write_term(f, arg, tail),
                _ => write_term(f, arg, true),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atoms::atom;

    fn v(n: &str) -> Term {
        Term::var(atom(n))
    }

    #[test]
    fn size_examples() {
        assert_eq!(v("x").size(), 1);
        assert_eq!(Term::abs(atom("x"), v("x")).size(), 2);
        let t = Term::esub(Term::app(v("x"), v("x")), atom("x"), v("y"));
        assert_eq!(t.size(), 5);
    }

    #[test]
    fn fv_examples() {
        assert_eq!(v("x").fv(), AtomSet::singleton(atom("x")));
        let t = Term::abs(atom("x"), Term::app(v("x"), v("y")));
        assert_eq!(t.fv(), AtomSet::singleton(atom("y")));
        let s = Term::esub(v("x"), atom("x"), v("y"));
        assert_eq!(s.fv(), AtomSet::singleton(atom("y")));
        // the binder of an explicit substitution does not scope over its argument
        let s = Term::esub(v("y"), atom("x"), v("x"));
        assert_eq!(s.fv(), [atom("x"), atom("y")].into_iter().collect());
        for t in [&t, &s] {
            for a in ["x", "y", "z"] {
                assert_eq!(t.is_free(&atom(a)), t.fv().contains(&atom(a)));
            }
        }
    }

    #[test]
    fn vswap_examples() {
        let (x, y, z) = (atom("x"), atom("y"), atom("z"));
        assert_eq!(vswap(&x, &y, &x), &y);
        assert_eq!(vswap(&x, &y, &y), &x);
        assert_eq!(vswap(&x, &x, &y), &y);
        assert_eq!(vswap(&x, &y, &z), &z);
    }

    #[test]
    fn swap_examples() {
        let (x, y, z) = (atom("x"), atom("y"), atom("z"));
        let t = Term::abs(x.clone(), Term::app(v("x"), v("z")));
        assert_eq!(
            t.swap(&x, &y),
            Term::abs(y.clone(), Term::app(v("y"), v("z")))
        );

        let s = Term::esub(v("x"), x.clone(), v("y"));
        assert_eq!(s.swap(&x, &y).swap(&x, &y), s);

        let s = Term::esub(v("y"), z.clone(), v("x"));
        assert_eq!(s.swap(&x, &y), Term::esub(v("x"), z, v("y")));
    }

    #[test]
    fn render_examples() {
        assert_eq!(Term::abs(atom("x"), v("x")).to_string(), "\\x. x");
        assert_eq!(
            Term::esub(v("x"), atom("x"), v("y")).to_string(),
            "[x := y] x"
        );
        assert_eq!(
            Term::app(Term::app(v("x"), v("y")), v("z")).to_string(),
            "x y z"
        );
    }

    #[test]
    fn render_parenthesizes_only_when_needed() {
        let id = Term::abs(atom("x"), v("x"));
        assert_eq!(
            Term::app(v("x"), Term::app(v("y"), v("z"))).to_string(),
            "x (y z)"
        );
        assert_eq!(Term::app(id.clone(), v("y")).to_string(), "(\\x. x) y");
        assert_eq!(Term::app(v("y"), id.clone()).to_string(), "y \\x. x");
        assert_eq!(
            Term::app(Term::app(v("y"), id.clone()), v("z")).to_string(),
            "y (\\x. x) z"
        );
        assert_eq!(
            Term::esub(
                Term::app(v("x"), v("x")),
                atom("x"),
                Term::app(v("y"), id.clone())
            )
            .to_string(),
            "[x := y \\x. x] x x"
        );
        assert_eq!(
            Term::abs(atom("x"), Term::app(v("x"), id)).to_string(),
            "\\x. x \\x. x"
        );
    }

    #[test]
    fn children_largest_first() {
        let t = Term::app(v("x"), Term::abs(atom("y"), v("y")));
        let kids = t.children();
        assert_eq!(kids[0].size(), 2);
        assert_eq!(kids[1], &v("x"));
    }
}
