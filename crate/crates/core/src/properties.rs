//! Random term generation and the catalogue of metatheory properties.
//!
//! Each property is a lemma about swapping, α-equivalence or
//! metasubstitution, checked on generated inputs. Inputs for conditional
//! lemmas are generated and then repaired to satisfy the hypothesis (for
//! instance by swapping an atom out of a term's free variables); the
//! hypothesis is checked again before the conclusion is evaluated.
//!
//! Failing inputs are shrunk by replacing nodes with their largest
//! immediate subterm and by merging atoms, until no smaller failing input
//! remains.

use std::fmt::{self, Write as _};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::alpha::{aeq, canonicalize};
use crate::atoms::{atom, fresh, Atom, AtomSet};
use crate::msubst::msubst;
use crate::parser::{parse, MetaExpr};
use crate::term::{vswap, Term};

/// Parameters of a property run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenConfig {
    /// Upper bound on the size of each generated term.
    pub max_size: usize,
    pub atom_pool: Vec<Atom>,
    pub seed: u64,
    pub cases: usize,
}

impl Default for GenConfig {
    fn default() -> GenConfig {
        GenConfig {
            max_size: 20,
            atom_pool: ["x", "y", "z", "w", "v"].into_iter().map(atom).collect(),
            seed: 0,
            cases: 10_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("unknown property `{name}`; valid names are: {}", .valid.join(", "))]
    UnknownProperty {
        name: String,
        valid: Vec<&'static str>,
    },
    #[error("max_size must be at least 1")]
    ZeroMaxSize,
    #[error("the atom pool must not be empty")]
    EmptyPool,
    #[error("cases must be at least 1")]
    ZeroCases,
}

impl GenConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.max_size == 0 {
            return Err(ConfigError::ZeroMaxSize);
        }
        if self.atom_pool.is_empty() {
            return Err(ConfigError::EmptyPool);
        }
        if self.cases == 0 {
            return Err(ConfigError::ZeroCases);
        }
        Ok(())
    }
}

/// Random source for one stream position under one seed.
pub fn case_rng(seed: u64, position: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(position);
    rng
}

/// The term at `position` in the stream defined by `config.seed`.
///
/// # Panics
///
/// If the configuration is invalid (see [`GenConfig::validate`]).
pub fn gen_term(config: &GenConfig, position: u64) -> Term {
    config.validate().expect("invalid generator configuration");
    let mut rng = case_rng(config.seed, position);
    random_term(&mut rng, config.max_size, &config.atom_pool)
}

/// A term whose size is drawn uniformly from `1..=max_size`, built with a
/// uniformly chosen constructor at each inner node.
pub fn random_term<R: Rng + ?Sized>(rng: &mut R, max_size: usize, pool: &[Atom]) -> Term {
    let size = rng.gen_range(1..=max_size.max(1));
    term_of_size(rng, size, pool)
}

fn term_of_size<R: Rng + ?Sized>(rng: &mut R, size: usize, pool: &[Atom]) -> Term {
    let pick = |rng: &mut R| pool.choose(rng).expect("empty atom pool").clone();
    match size {
        0 | 1 => Term::Var(pick(rng)),
        2 => {
            let x = pick(rng);
            Term::abs(x, term_of_size(rng, 1, pool))
        }
        _ => match rng.gen_range(0..3) {
            0 => {
                let x = pick(rng);
                Term::abs(x, term_of_size(rng, size - 1, pool))
            }
            1 => {
                let left = rng.gen_range(1..=size - 2);
                let f = term_of_size(rng, left, pool);
                let a = term_of_size(rng, size - 1 - left, pool);
                Term::app(f, a)
            }
            _ => {
                let left = rng.gen_range(1..=size - 2);
                let body = term_of_size(rng, left, pool);
                let x = pick(rng);
                let arg = term_of_size(rng, size - 1 - left, pool);
                Term::esub(body, x, arg)
            }
        },
    }
}

/// Every term of size at most `max_size` over `pool`, smallest first.
pub fn enumerate_terms(max_size: usize, pool: &[Atom]) -> Vec<Term> {
    let mut by_size: Vec<Vec<Term>> = vec![Vec::new()];
    for n in 1..=max_size {
        let mut here = Vec::new();
        if n == 1 {
            here.extend(pool.iter().cloned().map(Term::Var));
        } else {
            for x in pool {
                for b in &by_size[n - 1] {
                    here.push(Term::abs(x.clone(), b.clone()));
                }
            }
            for left in 1..n - 1 {
                for l in &by_size[left] {
                    for r in &by_size[n - 1 - left] {
                        here.push(Term::app(l.clone(), r.clone()));
                        for x in pool {
                            here.push(Term::esub(l.clone(), x.clone(), r.clone()));
                        }
                    }
                }
            }
        }
        by_size.push(here);
    }
    by_size.into_iter().flatten().collect()
}

/// Outcome of running one property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub name: String,
    pub cases_run: usize,
    pub failures: usize,
    pub seed: u64,
    /// Rendered inputs of the first (lowest position) failure, after
    /// shrinking. Present exactly when `failures > 0`.
    pub counterexample: Option<String>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// `name<TAB>cases<TAB>failures<TAB>seed`, followed by one `#<TAB>line`
    /// per counterexample line.
    pub fn to_tsv(&self) -> String {
        let mut out = format!(
            "{}\t{}\t{}\t{}\n",
            self.name, self.cases_run, self.failures, self.seed
        );
        if let Some(cx) = &self.counterexample {
            for line in cx.lines() {
                let _ = writeln!(out, "#\t{line}");
            }
        }
        out
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_tsv())
    }
}

/// Inputs to one property check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case {
    pub terms: Vec<Term>,
    pub atoms: Vec<Atom>,
}

impl Case {
    fn new(terms: Vec<Term>, atoms: Vec<Atom>) -> Case {
        Case { terms, atoms }
    }

    fn t(&self, i: usize) -> &Term {
        &self.terms[i]
    }

    fn a(&self, i: usize) -> &Atom {
        &self.atoms[i]
    }

    fn total_size(&self) -> usize {
        self.terms.iter().map(Term::size).sum()
    }

    fn all_atoms(&self) -> AtomSet {
        let mut s: AtomSet = self.atoms.iter().cloned().collect();
        for t in &self.terms {
            s = s.union(&t.atoms());
        }
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Verdict {
    Holds,
    Fails,
    /// The hypothesis of the lemma does not hold for these inputs.
    Vacuous,
}

fn holds(b: bool) -> Verdict {
    if b {
        Verdict::Holds
    } else {
        Verdict::Fails
    }
}

/// Draws inputs for a property.
struct Gen<'a> {
    rng: ChaCha8Rng,
    config: &'a GenConfig,
}

impl Gen<'_> {
    fn term(&mut self) -> Term {
        random_term(&mut self.rng, self.config.max_size, &self.config.atom_pool)
    }

    fn atom(&mut self) -> Atom {
        self.config.atom_pool.choose(&mut self.rng).unwrap().clone()
    }

    /// A pool atom outside `excluded`, or a fresh one if the pool is exhausted.
    fn atom_outside(&mut self, excluded: &AtomSet) -> Atom {
        let candidates: Vec<&Atom> = self
            .config
            .atom_pool
            .iter()
            .filter(|a| !excluded.contains(a))
            .collect();
        match candidates.choose(&mut self.rng) {
            Some(a) => (*a).clone(),
            None => {
                let avoid = excluded.union(&self.config.atom_pool.iter().cloned().collect());
                fresh(&avoid, &self.config.atom_pool[0])
            }
        }
    }

    fn atom_except(&mut self, excluded: &[&Atom]) -> Atom {
        let set = excluded.iter().map(|a| (*a).clone()).collect();
        self.atom_outside(&set)
    }

    /// Makes `x` not free in `t` by swapping it with an atom that is not
    /// free in `t` and not in `keep`. Swapping with such an atom leaves the
    /// freeness of every atom in `keep` unchanged.
    fn not_free(&mut self, t: Term, x: &Atom, keep: &[&Atom]) -> Term {
        if !t.is_free(x) {
            return t;
        }
        let mut excluded = t.fv();
        excluded.insert(x.clone());
        excluded.extend(keep.iter().map(|a| (*a).clone()));
        let candidates: Vec<&Atom> = self
            .config
            .atom_pool
            .iter()
            .filter(|a| !excluded.contains(a))
            .collect();
        let z = match candidates.choose(&mut self.rng) {
            Some(a) => (*a).clone(),
            None => {
                let avoid = excluded
                    .union(&t.atoms())
                    .union(&self.config.atom_pool.iter().cloned().collect());
                fresh(&avoid, x)
            }
        };
        t.swap(x, &z)
    }

    /// An α-equivalent copy of `t` with some binders renamed.
    fn variant(&mut self, t: &Term) -> Term {
        match t {
            Term::Var(_) => t.clone(),
            Term::App(f, a) => Term::app(self.variant(f), self.variant(a)),
            Term::Abs(y, b) => {
                let (z, b) = self.rename_binder(y, b);
                Term::abs(z, self.variant(&b))
            }
            Term::ESub(b, y, a) => {
                let a = self.variant(a);
                let (z, b) = self.rename_binder(y, b);
                Term::esub(self.variant(&b), z, a)
            }
        }
    }

    // `y` binds in `body`; any `z` not free under the binder may replace it.
    fn rename_binder(&mut self, y: &Atom, body: &Term) -> (Atom, Term) {
        if self.rng.gen_bool(0.5) {
            return (y.clone(), body.clone());
        }
        let outside = fresh(
            &body
                .atoms()
                .union(&self.config.atom_pool.iter().cloned().collect()),
            y,
        );
        let mut candidates: Vec<Atom> = self
            .config
            .atom_pool
            .iter()
            .filter(|z| *z == y || !body.is_free(z))
            .cloned()
            .collect();
        candidates.push(outside);
        let z = candidates.choose(&mut self.rng).unwrap().clone();
        let body = body.swap(y, &z);
        (z, body)
    }

    /// Half the time an α-variant of `t`, otherwise an unrelated term.
    fn related(&mut self, t: &Term) -> Term {
        if self.rng.gen_bool(0.5) {
            self.variant(t)
        } else {
            self.term()
        }
    }
}

struct Property {
    name: &'static str,
    term_names: &'static [&'static str],
    atom_names: &'static [&'static str],
    generate: fn(&mut Gen) -> Case,
    check: fn(&Case) -> Verdict,
}

fn swap_of(t: &Term, x: &Atom, y: &Atom) -> Term {
    t.swap(x, y)
}

fn swap_props() -> Vec<Property> {
    vec![
        Property {
            name: "vswap_id",
            term_names: &[],
            atom_names: &["x", "y"],
            generate: |g| Case::new(vec![], vec![g.atom(), g.atom()]),
            check: |c| holds(vswap(c.a(0), c.a(0), c.a(1)) == c.a(1)),
        },
        Property {
            name: "swap_id",
            term_names: &["t"],
            atom_names: &["x"],
            generate: |g| Case::new(vec![g.term()], vec![g.atom()]),
            check: |c| holds(swap_of(c.t(0), c.a(0), c.a(0)) == *c.t(0)),
        },
        Property {
            name: "swap_neq",
            term_names: &[],
            atom_names: &["x", "y", "z", "w"],
            generate: |g| {
                let (x, y, z) = (g.atom(), g.atom(), g.atom());
                let w = g.atom_except(&[&z]);
                Case::new(vec![], vec![x, y, z, w])
            },
            check: |c| {
                let (x, y, z, w) = (c.a(0), c.a(1), c.a(2), c.a(3));
                if z == w {
                    return Verdict::Vacuous;
                }
                holds(vswap(x, y, z) != vswap(x, y, w))
            },
        },
        Property {
            name: "swap_size_eq",
            term_names: &["t"],
            atom_names: &["x", "y"],
            generate: |g| Case::new(vec![g.term()], vec![g.atom(), g.atom()]),
            check: |c| holds(swap_of(c.t(0), c.a(0), c.a(1)).size() == c.t(0).size()),
        },
        Property {
            name: "swap_symmetric",
            term_names: &["t"],
            atom_names: &["x", "y"],
            generate: |g| Case::new(vec![g.term()], vec![g.atom(), g.atom()]),
            check: |c| {
                let (t, x, y) = (c.t(0), c.a(0), c.a(1));
                holds(t.swap(x, y) == t.swap(y, x))
            },
        },
        Property {
            name: "swap_involutive",
            term_names: &["t"],
            atom_names: &["x", "y"],
            generate: |g| Case::new(vec![g.term()], vec![g.atom(), g.atom()]),
            check: |c| {
                let (t, x, y) = (c.t(0), c.a(0), c.a(1));
                holds(t.swap(x, y).swap(x, y) == *t)
            },
        },
        Property {
            name: "shuffle_swap",
            term_names: &["t"],
            atom_names: &["w", "y", "z"],
            generate: |g| {
                let t = g.term();
                let z = g.atom();
                let w = g.atom_except(&[&z]);
                let y = g.atom_except(&[&z]);
                Case::new(vec![t], vec![w, y, z])
            },
            check: |c| {
                let (t, w, y, z) = (c.t(0), c.a(0), c.a(1), c.a(2));
                if w == z || y == z {
                    return Verdict::Vacuous;
                }
                holds(t.swap(y, z).swap(w, y) == t.swap(w, y).swap(w, z))
            },
        },
        Property {
            name: "swap_equivariance",
            term_names: &["t"],
            atom_names: &["x", "y", "z", "w"],
            generate: |g| Case::new(vec![g.term()], vec![g.atom(), g.atom(), g.atom(), g.atom()]),
            check: |c| {
                let (t, x, y, z, w) = (c.t(0), c.a(0), c.a(1), c.a(2), c.a(3));
                let lhs = t.swap(z, w).swap(x, y);
                let rhs = t.swap(x, y).swap(vswap(x, y, z), vswap(x, y, w));
                holds(lhs == rhs)
            },
        },
        Property {
            name: "fv_nom_swap",
            term_names: &["t"],
            atom_names: &["y", "z"],
            generate: |g| {
                let (t, y, z) = (g.term(), g.atom(), g.atom());
                let t = g.not_free(t, &z, &[]);
                Case::new(vec![t], vec![y, z])
            },
            check: |c| {
                let (t, y, z) = (c.t(0), c.a(0), c.a(1));
                if t.is_free(z) {
                    return Verdict::Vacuous;
                }
                holds(!t.swap(y, z).is_free(y))
            },
        },
        Property {
            name: "notin_fv_nom_equivariance",
            term_names: &["t"],
            atom_names: &["x'", "x", "y"],
            generate: |g| {
                let (t, x1, x, y) = (g.term(), g.atom(), g.atom(), g.atom());
                let t = g.not_free(t, &x1, &[]);
                Case::new(vec![t], vec![x1, x, y])
            },
            check: |c| {
                let (t, x1, x, y) = (c.t(0), c.a(0), c.a(1), c.a(2));
                if t.is_free(x1) {
                    return Verdict::Vacuous;
                }
                holds(!t.swap(x, y).is_free(vswap(x, y, x1)))
            },
        },
        Property {
            name: "notin_fv_nom_remove_swap",
            term_names: &["t"],
            atom_names: &["x'", "x", "y"],
            generate: |g| {
                let (t, x1, x, y) = (g.term(), g.atom(), g.atom(), g.atom());
                // establish the hypothesis on the swapped term, then swap back
                let swapped = g.not_free(t.swap(&x, &y), vswap(&x, &y, &x1), &[]);
                Case::new(vec![swapped.swap(&x, &y)], vec![x1, x, y])
            },
            check: |c| {
                let (t, x1, x, y) = (c.t(0), c.a(0), c.a(1), c.a(2));
                if t.swap(x, y).is_free(vswap(x, y, x1)) {
                    return Verdict::Vacuous;
                }
                holds(!t.is_free(x1))
            },
        },
    ]
}

fn alpha_props() -> Vec<Property> {
    vec![
        Property {
            name: "aeq_refl",
            term_names: &["t"],
            atom_names: &[],
            generate: |g| Case::new(vec![g.term()], vec![]),
            check: |c| holds(aeq(c.t(0), c.t(0))),
        },
        Property {
            name: "aeq_sym",
            term_names: &["t1", "t2"],
            atom_names: &[],
            generate: |g| {
                let t1 = g.term();
                let t2 = g.related(&t1);
                Case::new(vec![t1, t2], vec![])
            },
            check: |c| holds(aeq(c.t(0), c.t(1)) == aeq(c.t(1), c.t(0))),
        },
        Property {
            name: "aeq_trans",
            term_names: &["t1", "t2", "t3"],
            atom_names: &[],
            generate: |g| {
                let t1 = g.term();
                let t2 = g.variant(&t1);
                let t3 = g.variant(&t2);
                Case::new(vec![t1, t2, t3], vec![])
            },
            check: |c| {
                if !aeq(c.t(0), c.t(1)) || !aeq(c.t(1), c.t(2)) {
                    return Verdict::Vacuous;
                }
                holds(aeq(c.t(0), c.t(2)))
            },
        },
        Property {
            name: "aeq_size",
            term_names: &["t1", "t2"],
            atom_names: &[],
            generate: |g| {
                let t1 = g.term();
                let t2 = g.variant(&t1);
                Case::new(vec![t1, t2], vec![])
            },
            check: |c| {
                if !aeq(c.t(0), c.t(1)) {
                    return Verdict::Vacuous;
                }
                holds(c.t(0).size() == c.t(1).size())
            },
        },
        Property {
            name: "aeq_fv_nom",
            term_names: &["t1", "t2"],
            atom_names: &[],
            generate: |g| {
                let t1 = g.term();
                let t2 = g.variant(&t1);
                Case::new(vec![t1, t2], vec![])
            },
            check: |c| {
                if !aeq(c.t(0), c.t(1)) {
                    return Verdict::Vacuous;
                }
                holds(c.t(0).fv() == c.t(1).fv())
            },
        },
        Property {
            name: "aeq_swap",
            term_names: &["t1", "t2"],
            atom_names: &["x", "y"],
            generate: |g| {
                let t1 = g.term();
                let t2 = g.related(&t1);
                Case::new(vec![t1, t2], vec![g.atom(), g.atom()])
            },
            check: |c| {
                let (t1, t2, x, y) = (c.t(0), c.t(1), c.a(0), c.a(1));
                holds(aeq(t1, t2) == aeq(&t1.swap(x, y), &t2.swap(x, y)))
            },
        },
        Property {
            name: "swap_reduction",
            term_names: &["t"],
            atom_names: &["x", "y"],
            generate: |g| {
                let (t, x, y) = (g.term(), g.atom(), g.atom());
                let t = g.not_free(t, &x, &[&y]);
                let t = g.not_free(t, &y, &[&x]);
                Case::new(vec![t], vec![x, y])
            },
            check: |c| {
                let (t, x, y) = (c.t(0), c.a(0), c.a(1));
                if t.is_free(x) || t.is_free(y) {
                    return Verdict::Vacuous;
                }
                holds(aeq(&t.swap(x, y), t))
            },
        },
        Property {
            name: "aeq_swap_swap",
            term_names: &["t"],
            atom_names: &["x", "y", "z"],
            generate: |g| {
                let (t, x, y, z) = (g.term(), g.atom(), g.atom(), g.atom());
                let t = g.not_free(t, &z, &[&x]);
                let t = g.not_free(t, &x, &[&z]);
                Case::new(vec![t], vec![x, y, z])
            },
            check: |c| {
                let (t, x, y, z) = (c.t(0), c.a(0), c.a(1), c.a(2));
                if t.is_free(z) || t.is_free(x) {
                    return Verdict::Vacuous;
                }
                holds(aeq(&t.swap(x, y).swap(z, x), &t.swap(z, y)))
            },
        },
        Property {
            name: "aeq_oracle",
            term_names: &["t1", "t2"],
            atom_names: &[],
            generate: |g| {
                let t1 = g.term();
                let t2 = match g.rng.gen_range(0..3) {
                    0 => g.variant(&t1),
                    1 => g.term(),
                    // near miss: a variant with two atoms exchanged
                    _ => {
                        let (a, b) = (g.atom(), g.atom());
                        g.variant(&t1).swap(&a, &b)
                    }
                };
                Case::new(vec![t1, t2], vec![])
            },
            check: |c| {
                let (t1, t2) = (c.t(0), c.t(1));
                holds(aeq(t1, t2) == (canonicalize(t1) == canonicalize(t2)))
            },
        },
    ]
}

fn fresh_for(g: &mut Gen, avoid: AtomSet) -> Atom {
    g.atom_outside(&avoid)
}

fn msubst_props() -> Vec<Property> {
    vec![
        Property {
            name: "m_subst_notin",
            term_names: &["t", "u"],
            atom_names: &["x"],
            generate: |g| {
                let (t, u, x) = (g.term(), g.term(), g.atom());
                let t = g.not_free(t, &x, &[]);
                Case::new(vec![t, u], vec![x])
            },
            check: |c| {
                let (t, u, x) = (c.t(0), c.t(1), c.a(0));
                if t.is_free(x) {
                    return Verdict::Vacuous;
                }
                holds(aeq(&msubst(t, u, x), t))
            },
        },
        Property {
            name: "m_subst_abs_eq",
            term_names: &["t", "u"],
            atom_names: &["x"],
            generate: |g| Case::new(vec![g.term(), g.term()], vec![g.atom()]),
            check: |c| {
                let (t, u, x) = (c.t(0), c.t(1), c.a(0));
                let abs = Term::abs(x.clone(), t.clone());
                holds(msubst(&abs, u, x) == abs)
            },
        },
        Property {
            name: "m_subst_sub_eq",
            term_names: &["t1", "t2", "u"],
            atom_names: &["x"],
            generate: |g| Case::new(vec![g.term(), g.term(), g.term()], vec![g.atom()]),
            check: |c| {
                let (t1, t2, u, x) = (c.t(0), c.t(1), c.t(2), c.a(0));
                let lhs = msubst(&Term::esub(t1.clone(), x.clone(), t2.clone()), u, x);
                holds(lhs == Term::esub(t1.clone(), x.clone(), msubst(t2, u, x)))
            },
        },
        Property {
            name: "m_subst_abs_neq",
            term_names: &["t", "u"],
            atom_names: &["x", "y", "z"],
            generate: |g| {
                let (t, u, x) = (g.term(), g.term(), g.atom());
                let y = g.atom_except(&[&x]);
                let mut avoid = u.fv().union(&Term::abs(y.clone(), t.clone()).fv());
                avoid.insert(x.clone());
                let z = fresh_for(g, avoid);
                Case::new(vec![t, u], vec![x, y, z])
            },
            check: |c| {
                let (t, u, x, y, z) = (c.t(0), c.t(1), c.a(0), c.a(1), c.a(2));
                let abs = Term::abs(y.clone(), t.clone());
                if x == y || z == x || u.is_free(z) || abs.is_free(z) {
                    return Verdict::Vacuous;
                }
                let rhs = Term::abs(z.clone(), msubst(&t.swap(y, z), u, x));
                holds(aeq(&msubst(&abs, u, x), &rhs))
            },
        },
        Property {
            name: "m_subst_sub_neq",
            term_names: &["t1", "t2", "u"],
            atom_names: &["x", "y", "z"],
            generate: |g| {
                let (t1, t2, u, x) = (g.term(), g.term(), g.term(), g.atom());
                let y = g.atom_except(&[&x]);
                let sub = Term::esub(t1.clone(), y.clone(), t2.clone());
                let mut avoid = u.fv().union(&sub.fv());
                avoid.insert(x.clone());
                let z = fresh_for(g, avoid);
                Case::new(vec![t1, t2, u], vec![x, y, z])
            },
            check: |c| {
                let (t1, t2, u) = (c.t(0), c.t(1), c.t(2));
                let (x, y, z) = (c.a(0), c.a(1), c.a(2));
                let sub = Term::esub(t1.clone(), y.clone(), t2.clone());
                if x == y || z == x || u.is_free(z) || sub.is_free(z) {
                    return Verdict::Vacuous;
                }
                let rhs = Term::esub(msubst(&t1.swap(y, z), u, x), z.clone(), msubst(t2, u, x));
                holds(aeq(&msubst(&sub, u, x), &rhs))
            },
        },
        Property {
            name: "aeq_m_subst_in",
            term_names: &["t", "u", "u'"],
            atom_names: &["x"],
            generate: |g| {
                let (t, u) = (g.term(), g.term());
                let u1 = g.variant(&u);
                Case::new(vec![t, u, u1], vec![g.atom()])
            },
            check: |c| {
                let (t, u, u1, x) = (c.t(0), c.t(1), c.t(2), c.a(0));
                if !aeq(u, u1) {
                    return Verdict::Vacuous;
                }
                holds(aeq(&msubst(t, u, x), &msubst(t, u1, x)))
            },
        },
        Property {
            name: "aeq_m_subst_out",
            term_names: &["t", "t'", "u"],
            atom_names: &["x"],
            generate: |g| {
                let t = g.term();
                let t1 = g.variant(&t);
                Case::new(vec![t, t1, g.term()], vec![g.atom()])
            },
            check: |c| {
                let (t, t1, u, x) = (c.t(0), c.t(1), c.t(2), c.a(0));
                if !aeq(t, t1) {
                    return Verdict::Vacuous;
                }
                holds(aeq(&msubst(t, u, x), &msubst(t1, u, x)))
            },
        },
        Property {
            name: "aeq_m_subst_eq",
            term_names: &["t", "t'", "u", "u'"],
            atom_names: &["x"],
            generate: |g| {
                let t = g.term();
                let t1 = g.variant(&t);
                let u = g.term();
                let u1 = g.variant(&u);
                Case::new(vec![t, t1, u, u1], vec![g.atom()])
            },
            check: |c| {
                let (t, t1, u, u1, x) = (c.t(0), c.t(1), c.t(2), c.t(3), c.a(0));
                if !aeq(t, t1) || !aeq(u, u1) {
                    return Verdict::Vacuous;
                }
                holds(aeq(&msubst(t, u, x), &msubst(t1, u1, x)))
            },
        },
        Property {
            name: "swap_subst_rec_fun",
            term_names: &["t", "u"],
            atom_names: &["x", "y", "z"],
            generate: |g| Case::new(vec![g.term(), g.term()], vec![g.atom(), g.atom(), g.atom()]),
            check: |c| {
                let (t, u, x, y, z) = (c.t(0), c.t(1), c.a(0), c.a(1), c.a(2));
                let lhs = msubst(t, u, z).swap(x, y);
                let rhs = msubst(&t.swap(x, y), &u.swap(x, y), vswap(x, y, z));
                holds(aeq(&lhs, &rhs))
            },
        },
        Property {
            name: "m_subst_lemma",
            term_names: &["t1", "t2", "t3"],
            atom_names: &["x", "y"],
            generate: |g| {
                let (t1, t2, t3, x) = (g.term(), g.term(), g.term(), g.atom());
                let y = g.atom_except(&[&x]);
                let t3 = g.not_free(t3, &x, &[]);
                Case::new(vec![t1, t2, t3], vec![x, y])
            },
            check: |c| {
                let (t1, t2, t3, x, y) = (c.t(0), c.t(1), c.t(2), c.a(0), c.a(1));
                if x == y || t3.is_free(x) {
                    return Verdict::Vacuous;
                }
                let (lhs, rhs) = substitution_lemma_sides(t1, t2, t3, x, y);
                holds(aeq(&lhs, &rhs) && canonicalize(&lhs) == canonicalize(&rhs))
            },
        },
    ]
}

/// Both sides of the substitution lemma:
/// `{y := t3}({x := t2} t1)` and `{x := {y := t3} t2}({y := t3} t1)`.
pub fn substitution_lemma_sides(
    t1: &Term,
    t2: &Term,
    t3: &Term,
    x: &Atom,
    y: &Atom,
) -> (Term, Term) {
    let lhs = msubst(&msubst(t1, t2, x), t3, y);
    let rhs = msubst(&msubst(t1, t3, y), &msubst(t2, t3, y), x);
    (lhs, rhs)
}

fn syntax_props() -> Vec<Property> {
    vec![Property {
        name: "parse_roundtrip",
        term_names: &["t"],
        atom_names: &[],
        generate: |g| Case::new(vec![g.term()], vec![]),
        check: |c| {
            let t = c.t(0);
            holds(parse(&t.to_string()) == Ok(MetaExpr::Lit(t.clone())))
        },
    }]
}

fn catalogue() -> Vec<Property> {
    let mut all = swap_props();
    all.extend(alpha_props());
    all.extend(msubst_props());
    all.extend(syntax_props());
    all
}

/// Names of all registered properties, in catalogue order.
pub fn property_names() -> Vec<&'static str> {
    catalogue().iter().map(|p| p.name).collect()
}

fn lookup(name: &str) -> Result<Property, ConfigError> {
    catalogue()
        .into_iter()
        .find(|p| p.name == name)
        .ok_or_else(|| ConfigError::UnknownProperty {
            name: name.to_owned(),
            valid: property_names(),
        })
}

/// Runs one named property for `config.cases` generated cases.
///
/// Cases are evaluated in parallel; the report does not depend on
/// scheduling.
pub fn run_property(name: &str, config: &GenConfig) -> Result<PropertyReport, ConfigError> {
    let prop = lookup(name)?;
    config.validate()?;
    let failing: Vec<(Case, Verdict)> = (0..config.cases as u64)
        .into_par_iter()
        .filter_map(|pos| {
            let mut g = Gen {
                rng: case_rng(config.seed, pos),
                config,
            };
            let case = (prop.generate)(&mut g);
            match (prop.check)(&case) {
                Verdict::Holds => None,
                v => Some((case, v)),
            }
        })
        .collect();
    let counterexample = failing.first().map(|(case, verdict)| match verdict {
        Verdict::Vacuous => format!(
            "hypothesis not established by the generator\n{}",
            render_case(&prop, case)
        ),
        _ => render_case(&prop, &shrink(&prop, case.clone())),
    });
    Ok(PropertyReport {
        name: prop.name.to_owned(),
        cases_run: config.cases,
        failures: failing.len(),
        seed: config.seed,
        counterexample,
    })
}

/// Runs several properties in order, stopping at the first unknown name.
pub fn run_properties<S: AsRef<str>>(
    names: &[S],
    config: &GenConfig,
) -> Result<Vec<PropertyReport>, ConfigError> {
    for n in names {
        lookup(n.as_ref())?;
    }
    names
        .iter()
        .map(|n| run_property(n.as_ref(), config))
        .collect()
}

/// Compares [`aeq`] with equality of canonical forms on every pair of terms
/// of size at most `max_size` over `pool`.
pub fn exhaustive_aeq_oracle(max_size: usize, pool: &[Atom]) -> PropertyReport {
    let terms = enumerate_terms(max_size, pool);
    let canon: Vec<_> = terms.iter().map(canonicalize).collect();
    let disagreements: Vec<(usize, usize)> = (0..terms.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let (terms, canon) = (&terms, &canon);
            (0..terms.len())
                .filter(move |&j| aeq(&terms[i], &terms[j]) != (canon[i] == canon[j]))
                .map(move |j| (i, j))
        })
        .collect();
    let counterexample = disagreements
        .first()
        .map(|&(i, j)| format!("t1 = {}\nt2 = {}", terms[i], terms[j]));
    PropertyReport {
        name: "aeq_oracle".to_owned(),
        cases_run: terms.len() * terms.len(),
        failures: disagreements.len(),
        seed: 0,
        counterexample,
    }
}

fn render_case(prop: &Property, case: &Case) -> String {
    let mut lines = Vec::new();
    for (n, t) in prop.term_names.iter().zip(&case.terms) {
        lines.push(format!("{n} = {t}"));
    }
    for (n, a) in prop.atom_names.iter().zip(&case.atoms) {
        lines.push(format!("{n} = {a}"));
    }
    lines.join("\n")
}

fn shrink(prop: &Property, mut case: Case) -> Case {
    // each accepted step lowers (total size, distinct atoms) lexicographically
    'outer: loop {
        for candidate in shrink_candidates(&case) {
            if (prop.check)(&candidate) == Verdict::Fails {
                debug_assert!(
                    candidate.total_size() < case.total_size()
                        || candidate.all_atoms().len() < case.all_atoms().len()
                );
                case = candidate;
                continue 'outer;
            }
        }
        return case;
    }
}

fn shrink_candidates(case: &Case) -> Vec<Case> {
    let mut out = Vec::new();
    for (i, t) in case.terms.iter().enumerate() {
        for smaller in node_replacements(t) {
            let mut c = case.clone();
            c.terms[i] = smaller;
            out.push(c);
        }
    }
    // terms with the same shape (typically α-variants of each other) shrink
    // together at the same node
    for i in 0..case.terms.len() {
        let group: Vec<usize> = (i..case.terms.len())
            .filter(|&j| same_shape(&case.terms[i], &case.terms[j]))
            .collect();
        if group.len() < 2 || (0..i).any(|k| same_shape(&case.terms[k], &case.terms[i])) {
            continue;
        }
        let replacements: Vec<Vec<Term>> = group
            .iter()
            .map(|&j| node_replacements(&case.terms[j]))
            .collect();
        for k in 0..replacements[0].len() {
            let mut c = case.clone();
            for (reps, &j) in replacements.iter().zip(&group) {
                c.terms[j] = reps[k].clone();
            }
            out.push(c);
        }
    }
    let atoms: Vec<Atom> = case.all_atoms().into_iter().collect();
    for (i, keep) in atoms.iter().enumerate() {
        for drop in &atoms[i + 1..] {
            let rename = |a: &Atom| if a == drop { keep.clone() } else { a.clone() };
            out.push(Case {
                terms: case.terms.iter().map(|t| t.map_atoms(&rename)).collect(),
                atoms: case.atoms.iter().map(rename).collect(),
            });
        }
    }
    out
}

fn same_shape(a: &Term, b: &Term) -> bool {
    match (a, b) {
        (Term::Var(_), Term::Var(_)) => true,
        (Term::Abs(_, x), Term::Abs(_, y)) => same_shape(x, y),
        (Term::App(f1, a1), Term::App(f2, a2)) | (Term::ESub(f1, _, a1), Term::ESub(f2, _, a2)) => {
            same_shape(f1, f2) && same_shape(a1, a2)
        }
        _ => false,
    }
}

/// Every term obtained by replacing one node of `t` with one of its
/// immediate subterms, nodes nearer the root first.
fn node_replacements(t: &Term) -> Vec<Term> {
    let mut out: Vec<Term> = t.children().into_iter().cloned().collect();
    match t {
        Term::Var(_) => {}
        Term::Abs(x, b) => {
            out.extend(
                node_replacements(b)
                    .into_iter()
                    .map(|b| Term::abs(x.clone(), b)),
            );
        }
        Term::App(f, a) => {
            out.extend(
                node_replacements(f)
                    .into_iter()
                    .map(|f| Term::app(f, (**a).clone())),
            );
            out.extend(
                node_replacements(a)
                    .into_iter()
                    .map(|a| Term::app((**f).clone(), a)),
            );
        }
        Term::ESub(b, x, a) => {
            out.extend(
                node_replacements(b)
                    .into_iter()
                    .map(|b| Term::esub(b, x.clone(), (**a).clone())),
            );
            out.extend(
                node_replacements(a)
                    .into_iter()
                    .map(|a| Term::esub((**b).clone(), x.clone(), a)),
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(cases: usize, max_size: usize) -> GenConfig {
        GenConfig {
            cases,
            max_size,
            ..GenConfig::default()
        }
    }

    #[test]
    fn catalogue_is_complete_and_unique() {
        let names = property_names();
        assert_eq!(names.len(), 31);
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 31);
        assert_eq!(names[0], "vswap_id");
        assert_eq!(*names.last().unwrap(), "parse_roundtrip");
    }

    #[test]
    fn gen_term_size_one_is_a_pool_variable() {
        let config = GenConfig {
            max_size: 1,
            atom_pool: vec![atom("x")],
            ..GenConfig::default()
        };
        for pos in 0..20 {
            assert_eq!(gen_term(&config, pos), Term::var(atom("x")));
        }
    }

    #[test]
    fn gen_term_is_deterministic_and_bounded() {
        let config = GenConfig::default();
        for pos in 0..200 {
            let t = gen_term(&config, pos);
            assert_eq!(t, gen_term(&config, pos));
            assert!(t.size() <= config.max_size);
            assert!(t.atoms().iter().all(|a| config.atom_pool.contains(a)));
        }
        assert_ne!(gen_term(&config, 0), gen_term(&config, 1));
    }

    #[test]
    fn every_constructor_is_generated() {
        let config = GenConfig {
            atom_pool: vec![atom("a"), atom("b"), atom("c")],
            ..GenConfig::default()
        };
        let mut seen = [false; 4];
        fn visit(t: &Term, seen: &mut [bool; 4]) {
            let k = match t {
                Term::Var(_) => 0,
                Term::Abs(..) => 1,
                Term::App(..) => 2,
                Term::ESub(..) => 3,
            };
            seen[k] = true;
            t.children().into_iter().for_each(|c| visit(c, seen));
        }
        let mut total = 0;
        for pos in 0..10_000 {
            let t = gen_term(&config, pos);
            total += t.size();
            visit(&t, &mut seen);
        }
        assert_eq!(seen, [true; 4]);
        // sizes are uniform on 1..=20
        let mean = total as f64 / 10_000.0;
        assert!((9.5..11.5).contains(&mean), "mean size {mean}");
    }

    #[test]
    fn enumeration_counts() {
        // sizes 1..=3 over one atom: x | \x.x | \x.\x.x, x x, [x:=x] x
        let ts = enumerate_terms(3, &[atom("x")]);
        assert_eq!(ts.len(), 5);
        // over two atoms: 2 + 4 + (8 + 4 + 8)
        assert_eq!(enumerate_terms(3, &[atom("x"), atom("y")]).len(), 26);
    }

    #[test]
    fn unknown_property_lists_catalogue() {
        let err = run_property("no_such_lemma", &GenConfig::default()).unwrap_err();
        match err {
            ConfigError::UnknownProperty { name, valid } => {
                assert_eq!(name, "no_such_lemma");
                assert_eq!(valid.len(), 31);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let c = GenConfig {
            cases: 0,
            ..GenConfig::default()
        };
        assert_eq!(run_property("aeq_refl", &c), Err(ConfigError::ZeroCases));
        let mut c = GenConfig::default();
        c.atom_pool.clear();
        assert_eq!(run_property("aeq_refl", &c), Err(ConfigError::EmptyPool));
        let c = GenConfig {
            max_size: 0,
            ..GenConfig::default()
        };
        assert_eq!(run_property("aeq_refl", &c), Err(ConfigError::ZeroMaxSize));
    }

    #[test]
    fn aeq_refl_single_case() {
        let r = run_property("aeq_refl", &small(1, 1)).unwrap();
        assert_eq!((r.cases_run, r.failures, r.counterexample), (1, 0, None));
    }

    #[test]
    fn swap_involutive_thousand_cases() {
        let r = run_property("swap_involutive", &small(1000, 20)).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn every_property_passes_a_quick_run() {
        for name in property_names() {
            let r = run_property(name, &small(300, 12)).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn repaired_hypotheses_hold_for_a_single_atom_pool() {
        // a one-atom pool forces the fresh-atom fallbacks
        let config = GenConfig {
            atom_pool: vec![atom("x")],
            cases: 300,
            max_size: 10,
            seed: 7,
        };
        for name in property_names() {
            let r = run_property(name, &config).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn variants_are_alpha_equivalent() {
        let config = GenConfig::default();
        let mut g = Gen {
            rng: case_rng(3, 0),
            config: &config,
        };
        let mut renamed = 0;
        for _ in 0..500 {
            let t = g.term();
            let v = g.variant(&t);
            assert_eq!(canonicalize(&t), canonicalize(&v), "{t} vs {v}");
            renamed += usize::from(t != v);
        }
        assert!(renamed > 100);
    }

    #[test]
    fn not_free_establishes_hypothesis_and_keeps_others() {
        let config = GenConfig::default();
        let mut g = Gen {
            rng: case_rng(11, 0),
            config: &config,
        };
        let (x, y) = (atom("x"), atom("y"));
        for _ in 0..500 {
            let t = g.term();
            let y_free = t.is_free(&y);
            let r = g.not_free(t, &x, &[&y]);
            assert!(!r.is_free(&x));
            assert_eq!(r.is_free(&y), y_free);
        }
    }

    fn broken() -> Property {
        // "every term is a variable or contains no x": false, shrinks to \x. x or similar
        Property {
            name: "broken",
            term_names: &["t"],
            atom_names: &[],
            generate: |g| Case::new(vec![g.term()], vec![]),
            check: |c| holds(c.t(0).size() < 3 || !c.t(0).atoms().contains(&atom("x"))),
        }
    }

    #[test]
    fn shrinking_reaches_a_minimal_counterexample() {
        let prop = broken();
        let big = Term::app(
            Term::abs(
                atom("y"),
                Term::app(Term::var(atom("x")), Term::var(atom("z"))),
            ),
            Term::esub(Term::var(atom("w")), atom("v"), Term::var(atom("y"))),
        );
        let c = shrink(&prop, Case::new(vec![big], vec![]));
        assert_eq!(c.t(0).size(), 3);
        assert_eq!(c.t(0).atoms(), AtomSet::singleton(atom("x")));
    }

    #[test]
    fn tsv_serialization() {
        let r = PropertyReport {
            name: "m_subst_lemma".into(),
            cases_run: 10,
            failures: 1,
            seed: 42,
            counterexample: Some("t1 = x\nx = y".into()),
        };
        assert_eq!(
            r.to_tsv(),
            "m_subst_lemma\t10\t1\t42\n#\tt1 = x\n#\tx = y\n"
        );
    }
}
