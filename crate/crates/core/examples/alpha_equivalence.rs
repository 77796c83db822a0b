//! Deciding α-equivalence, and the nameless forms used to cross-check it.
//!
//!     cargo run --example alpha_equivalence

use nes::{aeq, canonicalize, parse_term};

fn main() {
    let pairs = [
        (r"\x. x", r"\y. y"),
        (r"\x. y", r"\y. y"),
        (r"\x. \y. x y", r"\y. \x. y x"),
        (r"[x := z] x", r"[y := z] y"),
        // the argument of [x := u] is outside the binder
        (r"[x := x] z", r"[y := y] z"),
        (r"(\y. y) y", r"(\x. x) y"),
    ];
    for (a, b) in pairs {
        let (t1, t2) = (parse_term(a).unwrap(), parse_term(b).unwrap());
        let (c1, c2) = (canonicalize(&t1), canonicalize(&t2));
        println!(
            "{:<14} =a {:<14} : {:<5}   nameless: {c1}  |  {c2}",
            a,
            b,
            aeq(&t1, &t2)
        );
        assert_eq!(aeq(&t1, &t2), c1 == c2);
    }
}
