#![allow(dead_code)]

use nes::{atom, Term};

pub fn v(n: &str) -> Term {
    Term::var(atom(n))
}

pub fn lam(x: &str, body: Term) -> Term {
    Term::abs(atom(x), body)
}

pub fn app(f: Term, a: Term) -> Term {
    Term::app(f, a)
}

/// `[x := arg] body`
pub fn es(x: &str, arg: Term, body: Term) -> Term {
    Term::esub(body, atom(x), arg)
}

/// Hand-written inputs and the trees they must parse to.
pub fn corpus() -> Vec<(&'static str, Term)> {
    vec![
        ("x", v("x")),
        ("x0", v("x0")),
        ("foo12", v("foo12")),
        ("((x))", v("x")),
        ("\\x. x", lam("x", v("x"))),
        ("λx. x", lam("x", v("x"))),
        ("x y z", app(app(v("x"), v("y")), v("z"))),
        ("(x y) z", app(app(v("x"), v("y")), v("z"))),
        ("x (y z)", app(v("x"), app(v("y"), v("z")))),
        ("\\x. x y", lam("x", app(v("x"), v("y")))),
        ("(\\x. x) y", app(lam("x", v("x")), v("y"))),
        ("x \\y. y", app(v("x"), lam("y", v("y")))),
        ("x (\\y. y) z", app(app(v("x"), lam("y", v("y"))), v("z"))),
        ("\\x. \\y. x y", lam("x", lam("y", app(v("x"), v("y"))))),
        (
            "(\\x. \\y. x y) y",
            app(lam("x", lam("y", app(v("x"), v("y")))), v("y")),
        ),
        ("[x := y] x", es("x", v("y"), v("x"))),
        (
            "[x := y z] x z",
            es("x", app(v("y"), v("z")), app(v("x"), v("z"))),
        ),
        ("([x := y] x) z", app(es("x", v("y"), v("x")), v("z"))),
        ("x [y := z] y", app(v("x"), es("y", v("z"), v("y")))),
        (
            "[x := \\y. y] \\z. x",
            es("x", lam("y", v("y")), lam("z", v("x"))),
        ),
        (
            "\\x. [y := x] y x",
            lam("x", es("y", v("x"), app(v("y"), v("x")))),
        ),
        (
            "[x := [y := z] y] x",
            es("x", es("y", v("z"), v("y")), v("x")),
        ),
        (
            "f (g \\h. h h) k",
            app(
                app(v("f"), app(v("g"), lam("h", app(v("h"), v("h"))))),
                v("k"),
            ),
        ),
        (
            "\\x.\\y.[z:=x y]z",
            lam("x", lam("y", es("z", app(v("x"), v("y")), v("z")))),
        ),
        ("x\n  (y\tz)", app(v("x"), app(v("y"), v("z")))),
        ("(\\x. x) \\y. y", app(lam("x", v("x")), lam("y", v("y")))),
    ]
}
