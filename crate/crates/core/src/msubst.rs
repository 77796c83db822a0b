//! Capture-avoiding metasubstitution `{x := u} t`.

use crate::atoms::{fresh, Atom, AtomSet};
use crate::term::Term;

/// Substitutes `u` for the free occurrences of `x` in `t`.
///
/// Whenever the substitution crosses a binder `y` with `y != x`, the binder is
/// renamed to an atom outside `fv(u) ∪ fv(binder term) ∪ {x}` (preferring `y`
/// itself, then `y0`, `y1`, ...) by swapping it through the body. This
/// happens even when no capture is possible, so the result is only
/// α-equivalent, not equal, to what a textbook definition would give.
///
/// The recursion is on `swap(y, z, body)`, not on a syntactic subterm; it
/// terminates because swapping preserves size.
pub fn msubst(t: &Term, u: &Term, x: &Atom) -> Term {
    Subst { u, x, fv_u: u.fv() }.apply(t)
}

struct Subst<'a> {
    u: &'a Term,
    x: &'a Atom,
    fv_u: AtomSet,
}

impl Subst<'_> {
    fn apply(&self, t: &Term) -> Term {
        match t {
            Term::Var(y) if y == self.x => self.u.clone(),
            Term::Var(_) => t.clone(),
            Term::App(t1, t2) => Term::app(self.apply(t1), self.apply(t2)),
            Term::Abs(y, _) if y == self.x => t.clone(),
            Term::Abs(y, t1) => {
                let z = self.fresh_binder(t, y);
                Term::abs(z.clone(), self.apply_renamed(t1, y, &z))
            }
            Term::ESub(t1, y, t2) if y == self.x => {
                Term::ESub(t1.clone(), y.clone(), Box::new(self.apply(t2)))
            }
            Term::ESub(t1, y, t2) => {
                let z = self.fresh_binder(t, y);
                Term::esub(self.apply_renamed(t1, y, &z), z, self.apply(t2))
            }
        }
    }

    fn fresh_binder(&self, t: &Term, y: &Atom) -> Atom {
        let mut avoid = self.fv_u.union(&t.fv());
        avoid.insert(self.x.clone());
        fresh(&avoid, y)
    }

    fn apply_renamed(&self, body: &Term, y: &Atom, z: &Atom) -> Term {
        let renamed = body.swap(y, z);
        debug_assert_eq!(renamed.size(), body.size());
        self.apply(&renamed)
    }
}
