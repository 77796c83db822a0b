//! Metasubstitution against substitution on nameless forms.
//!
//! In a canonical term free atoms are `FVar`s and the canonical form of the
//! replacement has no dangling indices, so replacing `FVar(x)` needs no
//! shifting or renaming at all.

use nes::properties::{enumerate_terms, random_term};
use nes::{aeq, atom, canonicalize, msubst, Atom, AtomSet, CanonicalTerm, Term};
use rand::{Rng, SeedableRng};

fn nameless_subst(c: &CanonicalTerm, x: &Atom, u: &CanonicalTerm) -> CanonicalTerm {
    use CanonicalTerm::*;
    match c {
        FVar(y) if y == x => u.clone(),
        FVar(_) | BVar(_) => c.clone(),
        Lam(b) => Lam(Box::new(nameless_subst(b, x, u))),
        App(f, a) => App(
            Box::new(nameless_subst(f, x, u)),
            Box::new(nameless_subst(a, x, u)),
        ),
        Sub(b, a) => Sub(
            Box::new(nameless_subst(b, x, u)),
            Box::new(nameless_subst(a, x, u)),
        ),
    }
}

fn nameless_fv(c: &CanonicalTerm, out: &mut Vec<Atom>) {
    use CanonicalTerm::*;
    match c {
        FVar(y) => out.push(y.clone()),
        BVar(_) => {}
        Lam(b) => nameless_fv(b, out),
        App(f, a) | Sub(f, a) => {
            nameless_fv(f, out);
            nameless_fv(a, out);
        }
    }
}

fn check(t: &Term, u: &Term, x: &Atom) {
    let r = msubst(t, u, x);
    let expected = nameless_subst(&canonicalize(t), x, &canonicalize(u));
    assert_eq!(canonicalize(&r), expected, "{{{x} := {u}}} {t} gave {r}");
    assert!(canonicalize(&r).is_well_scoped());

    // free-variable soundness
    let mut fv = Vec::new();
    nameless_fv(&expected, &mut fv);
    let fv: AtomSet = fv.into_iter().collect();
    assert_eq!(r.fv(), fv);
    let bound = t.fv().without(x).union(&u.fv());
    assert!(r.fv().is_subset(&bound));
    if t.fv().contains(x) {
        assert_eq!(r.fv(), bound);
    }
}

#[test]
fn exhaustive_small_terms() {
    let pool = [atom("x"), atom("y")];
    let ts = enumerate_terms(4, &pool);
    let us = enumerate_terms(2, &pool);
    for t in &ts {
        for u in &us {
            for x in &pool {
                check(t, u, x);
            }
        }
    }
}

#[test]
fn random_terms() {
    let pool: Vec<Atom> = ["x", "y", "z", "y0"].into_iter().map(atom).collect();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..3000 {
        let t = random_term(&mut rng, 25, &pool);
        let u = random_term(&mut rng, 8, &pool);
        let x = pool[rng.gen_range(0..pool.len())].clone();
        check(&t, &u, &x);
    }
}

#[test]
fn output_is_independent_of_argument_naming() {
    // α-equivalent inputs give α-equivalent (not necessarily equal) outputs
    let t1 = nes::parse_term("\\y. [z := y] x z").unwrap();
    let t2 = nes::parse_term("\\w. [v := w] x v").unwrap();
    let u = nes::parse_term("\\q. y q").unwrap();
    let (r1, r2) = (msubst(&t1, &u, &atom("x")), msubst(&t2, &u, &atom("x")));
    assert!(aeq(&r1, &r2));
    assert_ne!(r1, r2);
}
