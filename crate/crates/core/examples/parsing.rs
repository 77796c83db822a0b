//! Concrete syntax: parsing, rendering and error reporting.
//!
//!     cargo run --example parsing

use nes::{eval_meta, parse, MetaExpr};

fn main() {
    let inputs = [
        r"λx. x",
        r"x (\y. y) z",
        r"([x := y] x) z",
        r"\x.\y.[z:=x y]z",
        r"{x := y} (\y. x y)",
        "[x := y x",
        r"\x. {x := y} x",
        "x y)",
    ];
    for src in inputs {
        match parse(src) {
            Ok(MetaExpr::Lit(t)) => println!("{src:<22} parses as   {t}"),
            Ok(e) => println!("{src:<22} evaluates to {}", eval_meta(&e)),
            Err(e) => println!("{src:<22} error at    {e}"),
        }
    }
}
