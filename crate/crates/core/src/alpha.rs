//! α-equivalence: a syntax-directed decision procedure over nominal terms,
//! and a nameless canonical form used to cross-check it.

use std::fmt;

use crate::atoms::Atom;
use crate::term::Term;

/// Decides whether two terms are equal up to renaming of bound atoms.
///
/// Binders that differ are compared by swapping the right-hand binder into
/// the left-hand one, after checking that the left binder is not free on the
/// right. Explicit substitutions compare their arguments before their bodies.
///
/// Every recursive call is on terms of strictly smaller size (a swap does not
/// change size), so the procedure is total.
pub fn aeq(t1: &Term, t2: &Term) -> bool {
    match (t1, t2) {
        (Term::Var(x), Term::Var(y)) => x == y,
        (Term::App(f1, a1), Term::App(f2, a2)) => aeq(f1, f2) && aeq(a1, a2),
        (Term::Abs(x, b1), Term::Abs(y, b2)) => binder_bodies_aeq(x, b1, y, b2),
        (Term::ESub(b1, x, a1), Term::ESub(b2, y, a2)) => {
            aeq(a1, a2) && binder_bodies_aeq(x, b1, y, b2)
        }
        _ => false,
    }
}

fn binder_bodies_aeq(x: &Atom, b1: &Term, y: &Atom, b2: &Term) -> bool {
    if x == y {
        aeq(b1, b2)
    } else {
        !b2.is_free(x) && aeq(b1, &b2.swap(y, x))
    }
}

/// Nameless form: bound atoms become de Bruijn indices, free atoms stay.
///
/// `Sub(body, arg)` binds one variable in `body` and none in `arg`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum CanonicalTerm {
    BVar(usize),
    FVar(Atom),
    Lam(Box<CanonicalTerm>),
    App(Box<CanonicalTerm>, Box<CanonicalTerm>),
    Sub(Box<CanonicalTerm>, Box<CanonicalTerm>),
}

pub fn canonicalize(t: &Term) -> CanonicalTerm {
    let mut scope = Vec::new();
    canon(t, &mut scope)
}

// `scope` holds the enclosing binders, innermost last.
fn canon<'t>(t: &'t Term, scope: &mut Vec<&'t Atom>) -> CanonicalTerm {
    match t {
        Term::Var(x) => match scope.iter().rev().position(|b| *b == x) {
            Some(k) => CanonicalTerm::BVar(k),
            None => CanonicalTerm::FVar(x.clone()),
        },
        Term::Abs(x, body) => {
            scope.push(x);
            let body = canon(body, scope);
            scope.pop();
            CanonicalTerm::Lam(Box::new(body))
        }
        Term::App(f, a) => CanonicalTerm::App(Box::new(canon(f, scope)), Box::new(canon(a, scope))),
        Term::ESub(body, x, arg) => {
            let arg = canon(arg, scope);
            scope.push(x);
            let body = canon(body, scope);
            scope.pop();
            CanonicalTerm::Sub(Box::new(body), Box::new(arg))
        }
    }
}

impl CanonicalTerm {
    /// True when every index points at an enclosing binder.
    pub fn is_well_scoped(&self) -> bool {
        fn go(t: &CanonicalTerm, depth: usize) -> bool {
            match t {
                CanonicalTerm::BVar(k) => *k < depth,
                CanonicalTerm::FVar(_) => true,
                CanonicalTerm::Lam(b) => go(b, depth + 1),
                CanonicalTerm::App(f, a) => go(f, depth) && go(a, depth),
                CanonicalTerm::Sub(b, a) => go(b, depth + 1) && go(a, depth),
            }
        }
        go(self, 0)
    }

    fn is_binder(&self) -> bool {
        matches!(self, CanonicalTerm::Lam(_) | CanonicalTerm::Sub(..))
    }
}

/// `#k` for bound variables, `\. t` for abstractions and `[:= u] t` for
/// explicit substitutions; parenthesization follows [`Term`]'s rendering.
impl fmt::Display for CanonicalTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_canon(f, self, true)
    }
}

impl fmt::Debug for CanonicalTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}

fn write_canon(f: &mut fmt::Formatter<'_>, t: &CanonicalTerm, tail: bool) -> fmt::Result {
    match t {
        CanonicalTerm::BVar(k) => write!(f, "#{k}"),
        CanonicalTerm::FVar(x) => write!(f, "{x}"),
        _ if t.is_binder() && !tail => {
            f.write_str("(")?;
            write_canon(f, t, true)?;
            f.write_str(")")
        }
        CanonicalTerm::Lam(b) => {
            f.write_str("\\. ")?;
            write_canon(f, b, true)
        }
        CanonicalTerm::Sub(b, a) => {
            f.write_str("[:= ")?;
            write_canon(f, a, true)?;
            f.write_str("] ")?;
            write_canon(f, b, true)
        }
        CanonicalTerm::App(fun, arg) => {
            write_canon(f, fun, false)?;
            f.write_str(" ")?;
            match **arg {
                CanonicalTerm::App(..) => {
                    f.write_str("(")?;
                    write_canon(f, arg, true)?;
                    f.write_str(")")
                }
                _ => write_canon(f, arg, tail),
            }
        }
    }
}
