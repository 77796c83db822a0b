//! Atoms, canonical atom sets and deterministic fresh names.
//!
//!     cargo run --example fresh_names

use nes::{atom, fresh, Atom, AtomSet};

fn main() {
    let x: Atom = "x".parse().unwrap();
    let x0: Atom = "x0".parse().unwrap();
    println!("`x` and `x0` are different atoms: {}", x != x0);
    println!("x0 has base {:?} and index {:?}", x0.base(), x0.index());

    // insertion order and duplicates do not matter
    let a: AtomSet = [atom("y"), atom("x"), atom("y")].into_iter().collect();
    let b: AtomSet = [atom("x"), atom("y")].into_iter().collect();
    println!("{a} == {b}: {}", a == b);

    let mut avoid = AtomSet::new();
    for _ in 0..4 {
        let next = fresh(&avoid, &x);
        println!("fresh({avoid}, x) = {next}");
        avoid.insert(next);
    }

    match "x01".parse::<Atom>() {
        Ok(a) => println!("parsed {a}"),
        Err(e) => println!("x01 is rejected: {e}"),
    }
}
