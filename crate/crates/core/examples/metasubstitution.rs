//! Capture-avoiding metasubstitution, including the β-step of
//! `(\x. \y. x y) y`.
//!
//!     cargo run --example metasubstitution

use nes::{aeq, atom, eval_meta, msubst, parse, parse_term, Term};

fn main() {
    let redex = parse_term(r"(\x. \y. x y) y").unwrap();
    if let Term::App(fun, arg) = &redex {
        if let Term::Abs(x, body) = &**fun {
            let contractum = msubst(body, arg, x);
            println!("{redex}  ->  {contractum}");
            let naive = parse_term(r"\y. y y").unwrap();
            println!(
                "captured version {naive} is α-equivalent? {}",
                aeq(&contractum, &naive)
            );
        }
    }

    // binders are renamed whenever the substitution crosses them, even if no
    // capture is possible; the result is then only α-equivalent to the input
    let t = parse_term(r"\y. z").unwrap();
    let r = msubst(&t, &parse_term("y").unwrap(), &atom("x"));
    println!("{{x := y}} {t}  =  {r}   (=a original: {})", aeq(&r, &t));

    // same binder: untouched; explicit substitution: only the argument
    for src in [r"{x := u} \x. x y", r"{x := u} [x := x x] x y"] {
        let e = parse(src).unwrap();
        println!("{src}  =  {}", eval_meta(&e));
    }
}
