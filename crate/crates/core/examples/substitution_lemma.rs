//! The substitution lemma on generated terms:
//! `{y := t3}({x := t2} t1) =a {x := {y := t3} t2}({y := t3} t1)` when
//! `x != y` and `x` is not free in `t3`.
//!
//!     cargo run --release --example substitution_lemma

use nes::properties::{gen_term, substitution_lemma_sides};
use nes::{aeq, atom, canonicalize, GenConfig};

fn main() {
    let config = GenConfig {
        max_size: 12,
        ..GenConfig::default()
    };
    let (x, y) = (atom("x"), atom("y"));
    let mut checked = 0;
    let mut shown = 0;
    for i in 0..3000 {
        let (t1, t2, t3) = (
            gen_term(&config, 3 * i),
            gen_term(&config, 3 * i + 1),
            gen_term(&config, 3 * i + 2),
        );
        if t3.is_free(&x) {
            continue;
        }
        let (lhs, rhs) = substitution_lemma_sides(&t1, &t2, &t3, &x, &y);
        assert!(aeq(&lhs, &rhs));
        assert_eq!(canonicalize(&lhs), canonicalize(&rhs));
        if shown < 3 && lhs != rhs {
            println!("t1 = {t1}\nt2 = {t2}\nt3 = {t3}\n  lhs = {lhs}\n  rhs = {rhs}\n");
            shown += 1;
        }
        checked += 1;
    }
    println!("substitution lemma held on {checked} generated instances");
}
