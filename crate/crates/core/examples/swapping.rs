//! Size, free variables and the swap action on terms.
//!
//!     cargo run --example swapping

use nes::{atom, parse_term, vswap};

fn main() {
    let (x, y) = (atom("x"), atom("y"));
    let t = parse_term(r"[x := y] (\x. x z) y").unwrap();
    println!("t            = {t}");
    println!("size(t)      = {}", t.size());
    println!("fv(t)        = {}", t.fv());
    println!("atoms(t)     = {}", t.atoms());

    // swapping renames binders too, so it never captures
    let s = t.swap(&x, &y);
    println!("(x y) t      = {s}");
    println!("(x y)(x y) t = {}", s.swap(&x, &y));
    println!("size kept    : {}", s.size() == t.size());

    println!(
        "vswap x y on x, y, z: {} {} {}",
        vswap(&x, &y, &x),
        vswap(&x, &y, &y),
        vswap(&x, &y, &atom("z"))
    );
}
