//! Seeded generators and an executable suite of the algebraic laws that
//! IFPS sets obey.
//!
//! Every law is a side-effect-free predicate over a [`Trial`] (three random
//! sets on a shared universe and parameter set plus the empty and universal
//! sets). Laws are checked through the [`Algebra`] trait so that a mutated
//! operator can be run against the same suite.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ifps::IfpsSet;

/// Degrees are drawn from multiples of `1 / GRID_STEPS`.
pub const GRID_STEPS: u32 = 20;
pub const MAX_UNIVERSE: usize = 6;
pub const MAX_PARAMS: usize = 5;

/// Deterministic pseudo-random IFPS set over `u1..un` and `x1..xm`.
///
/// Degree pairs are uniform over the 0.05 grid restricted to
/// `alpha + beta <= 1`; supports are uniform random subsets, empty at `(0, 1)`.
pub fn gen_ifps(seed: u64, universe_size: usize, param_count: usize) -> Result<IfpsSet> {
    if !(1..=MAX_UNIVERSE).contains(&universe_size) {
        return Err(Error::SizeOutOfRange(format!("universe size {universe_size} not in 1..={MAX_UNIVERSE}")));
    }
    if !(1..=MAX_PARAMS).contains(&param_count) {
        return Err(Error::SizeOutOfRange(format!("parameter count {param_count} not in 1..={MAX_PARAMS}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let universe: Vec<String> = (1..=universe_size).map(|i| format!("u{i}")).collect();
    let params: Vec<String> = (1..=param_count).map(|i| format!("x{i}")).collect();

    // (i, j) with i + j <= GRID_STEPS
    let pairs = (GRID_STEPS + 1) * (GRID_STEPS + 2) / 2;
    let mut entries = Vec::with_capacity(param_count);
    for p in &params {
        let mut k = rng.random_range(0..pairs);
        let mut i = 0;
        while k > GRID_STEPS - i {
            k -= GRID_STEPS - i + 1;
            i += 1;
        }
        let (alpha, beta) = (f64::from(i) / f64::from(GRID_STEPS), f64::from(k) / f64::from(GRID_STEPS));
        let support: Vec<String> = if i == 0 && k == GRID_STEPS {
            Vec::new()
        } else {
            universe.iter().filter(|_| rng.random_bool(0.5)).cloned().collect()
        };
        entries.push((p.clone(), alpha, beta, support));
    }
    IfpsSet::new(universe, params, entries)
}

/// The operators under test. Defaults are the library implementations.
pub trait Algebra {
    fn complement(&self, k: &IfpsSet) -> IfpsSet {
        k.complement()
    }
    fn union(&self, k: &IfpsSet, l: &IfpsSet) -> Result<IfpsSet> {
        k.union(l)
    }
    fn intersection(&self, k: &IfpsSet, l: &IfpsSet) -> Result<IfpsSet> {
        k.intersection(l)
    }
    fn or_sum(&self, k: &IfpsSet, l: &IfpsSet) -> Result<IfpsSet> {
        k.or_sum(l)
    }
    fn and_sum(&self, k: &IfpsSet, l: &IfpsSet) -> Result<IfpsSet> {
        k.and_sum(l)
    }
    fn or_product(&self, k: &IfpsSet, l: &IfpsSet) -> Result<IfpsSet> {
        k.or_product(l)
    }
    fn and_product(&self, k: &IfpsSet, l: &IfpsSet) -> Result<IfpsSet> {
        k.and_product(l)
    }
}

pub struct Reference;

impl Algebra for Reference {}

/// One random instance of the suite.
#[derive(Debug, Clone)]
pub struct Trial {
    pub index: usize,
    pub k: IfpsSet,
    pub l: IfpsSet,
    pub m: IfpsSet,
    pub empty: IfpsSet,
    pub universal: IfpsSet,
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

impl Trial {
    /// Trial `index` of the run seeded with `seed`. Each trial depends only
    /// on `(seed, index)`.
    pub fn generate(seed: u64, index: usize) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(splitmix64(seed ^ splitmix64(index as u64)));
        let nu = rng.random_range(1..=MAX_UNIVERSE);
        let ne = rng.random_range(1..=MAX_PARAMS);
        let k = gen_ifps(rng.random(), nu, ne)?;
        let l = gen_ifps(rng.random(), nu, ne)?;
        let m = gen_ifps(rng.random(), nu, ne)?;
        let empty = IfpsSet::empty(k.universe().iter().cloned(), k.params().iter().cloned())?;
        let universal = IfpsSet::universal(k.universe().iter().cloned(), k.params().iter().cloned())?;
        Ok(Trial { index, k, l, m, empty, universal })
    }
}

type Check = fn(&dyn Algebra, &Trial) -> Result<bool>;

/// A universally quantified law.
pub struct Law {
    pub group: &'static str,
    pub name: &'static str,
    pub check: Check,
}

fn eq(a: &IfpsSet, b: &IfpsSet) -> Result<bool> {
    a.approx_eq(b)
}

fn implies(premise: bool, conclusion: impl FnOnce() -> Result<bool>) -> Result<bool> {
    if premise {
        conclusion()
    } else {
        Ok(true)
    }
}

macro_rules! law {
    ($group:literal, $name:literal, |$alg:ident, $t:ident| $body:expr) => {
        Law { group: $group, name: $name, check: |$alg: &dyn Algebra, $t: &Trial| -> Result<bool> { $body } }
    };
}

/// Every universally quantified law of the algebra.
pub fn laws() -> Vec<Law> {
    vec![
        // subset bounds
        law!("subset", "contained in the universal set", |_a, t| t.k.is_subset(&t.universal)),
        law!("subset", "contains the empty set", |_a, t| t.empty.is_subset(&t.k)),
        law!("subset", "reflexive", |_a, t| t.k.is_subset(&t.k)),
        // equality and order
        law!("equality", "equality is transitive", |a, t| {
            let k2 = a.union(&t.k, &t.k)?;
            let k3 = a.intersection(&k2, &k2)?;
            let chain = if eq(&t.k, &k2)? && eq(&k2, &k3)? { eq(&t.k, &k3)? } else { true };
            let random = implies(eq(&t.k, &t.l)? && eq(&t.l, &t.m)?, || eq(&t.k, &t.m))?;
            Ok(chain && random)
        }),
        law!("equality", "mutual subset iff equal", |a, t| {
            let kl = a.intersection(&t.k, &t.l)?;
            let lk = a.intersection(&t.l, &t.k)?;
            let pairs = [(&t.k, &t.l), (&kl, &lk), (&t.k, &t.k)];
            for (x, y) in pairs {
                if (x.is_subset(y)? && y.is_subset(x)?) != eq(x, y)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        law!("equality", "subset is transitive", |a, t| {
            let low = a.intersection(&a.intersection(&t.k, &t.l)?, &t.m)?;
            let mid = a.intersection(&t.k, &t.l)?;
            let chain = implies(low.is_subset(&mid)? && mid.is_subset(&t.k)?, || low.is_subset(&t.k))?;
            let random = implies(t.k.is_subset(&t.l)? && t.l.is_subset(&t.m)?, || t.k.is_subset(&t.m))?;
            Ok(chain && random)
        }),
        // complement
        law!("complement", "involution", |a, t| eq(&a.complement(&a.complement(&t.k)), &t.k)),
        law!("complement", "empty complements to universal", |a, t| eq(&a.complement(&t.empty), &t.universal)),
        law!("complement", "universal complements to empty", |a, t| eq(&a.complement(&t.universal), &t.empty)),
        // union
        law!("union", "idempotent", |a, t| eq(&a.union(&t.k, &t.k)?, &t.k)),
        law!("union", "empty is the identity", |a, t| eq(&a.union(&t.k, &t.empty)?, &t.k)),
        law!("union", "universal is absorbing", |a, t| eq(&a.union(&t.k, &t.universal)?, &t.universal)),
        law!("union", "commutative", |a, t| eq(&a.union(&t.k, &t.l)?, &a.union(&t.l, &t.k)?)),
        law!("union", "associative", |a, t| {
            eq(&a.union(&a.union(&t.k, &t.l)?, &t.m)?, &a.union(&t.k, &a.union(&t.l, &t.m)?)?)
        }),
        // intersection
        law!("intersection", "idempotent", |a, t| eq(&a.intersection(&t.k, &t.k)?, &t.k)),
        law!("intersection", "empty is absorbing", |a, t| eq(&a.intersection(&t.k, &t.empty)?, &t.empty)),
        law!("intersection", "universal is the identity", |a, t| eq(&a.intersection(&t.k, &t.universal)?, &t.k)),
        law!("intersection", "commutative", |a, t| eq(&a.intersection(&t.k, &t.l)?, &a.intersection(&t.l, &t.k)?)),
        law!("intersection", "associative", |a, t| {
            eq(
                &a.intersection(&a.intersection(&t.k, &t.l)?, &t.m)?,
                &a.intersection(&t.k, &a.intersection(&t.l, &t.m)?)?,
            )
        }),
        // distributivity
        law!("distributive", "union over intersection", |a, t| {
            let lhs = a.union(&t.k, &a.intersection(&t.l, &t.m)?)?;
            let rhs = a.intersection(&a.union(&t.k, &t.l)?, &a.union(&t.k, &t.m)?)?;
            eq(&lhs, &rhs)
        }),
        law!("distributive", "intersection over union", |a, t| {
            let lhs = a.intersection(&t.k, &a.union(&t.l, &t.m)?)?;
            let rhs = a.union(&a.intersection(&t.k, &t.l)?, &a.intersection(&t.k, &t.m)?)?;
            eq(&lhs, &rhs)
        }),
        // De Morgan
        law!("de morgan", "complement of a union", |a, t| {
            let lhs = a.complement(&a.union(&t.k, &t.l)?);
            let rhs = a.intersection(&a.complement(&t.k), &a.complement(&t.l))?;
            eq(&lhs, &rhs)
        }),
        law!("de morgan", "complement of an intersection", |a, t| {
            let lhs = a.complement(&a.intersection(&t.k, &t.l)?);
            let rhs = a.union(&a.complement(&t.k), &a.complement(&t.l))?;
            eq(&lhs, &rhs)
        }),
        // OR/AND sums
        law!("sums", "or-sum: empty is the identity", |a, t| eq(&a.or_sum(&t.k, &t.empty)?, &t.k)),
        law!("sums", "or-sum: universal is absorbing", |a, t| eq(&a.or_sum(&t.k, &t.universal)?, &t.universal)),
        law!("sums", "or-sum commutative", |a, t| eq(&a.or_sum(&t.k, &t.l)?, &a.or_sum(&t.l, &t.k)?)),
        law!("sums", "and-sum commutative", |a, t| eq(&a.and_sum(&t.k, &t.l)?, &a.and_sum(&t.l, &t.k)?)),
        law!("sums", "or-sum associative", |a, t| {
            eq(&a.or_sum(&a.or_sum(&t.k, &t.l)?, &t.m)?, &a.or_sum(&t.k, &a.or_sum(&t.l, &t.m)?)?)
        }),
        law!("sums", "and-sum associative", |a, t| {
            eq(&a.and_sum(&a.and_sum(&t.k, &t.l)?, &t.m)?, &a.and_sum(&t.k, &a.and_sum(&t.l, &t.m)?)?)
        }),
        // OR/AND products
        law!("products", "and-product: empty is absorbing", |a, t| eq(&a.and_product(&t.k, &t.empty)?, &t.empty)),
        law!("products", "and-product: universal is the identity", |a, t| {
            eq(&a.and_product(&t.k, &t.universal)?, &t.k)
        }),
        law!("products", "and-product commutative", |a, t| {
            eq(&a.and_product(&t.k, &t.l)?, &a.and_product(&t.l, &t.k)?)
        }),
        law!("products", "or-product commutative", |a, t| eq(&a.or_product(&t.k, &t.l)?, &a.or_product(&t.l, &t.k)?)),
        law!("products", "and-product associative", |a, t| {
            eq(&a.and_product(&a.and_product(&t.k, &t.l)?, &t.m)?, &a.and_product(&t.k, &a.and_product(&t.l, &t.m)?)?)
        }),
        law!("products", "or-product associative", |a, t| {
            eq(&a.or_product(&a.or_product(&t.k, &t.l)?, &t.m)?, &a.or_product(&t.k, &a.or_product(&t.l, &t.m)?)?)
        }),
    ]
}

/// A set whose union with its own complement is not universal and whose
/// intersection with its complement is not empty.
///
/// Universe `u1..u5`, parameters `x1..x4`, entries
/// `x2:(0.2,0.5,{u2,u4})`, `x3:(0.5,0.5,{})`, `x4:(0.6,0.3,U)`.
pub fn complement_law_witness() -> IfpsSet {
    let u = ["u1", "u2", "u3", "u4", "u5"];
    IfpsSet::new(
        u,
        ["x1", "x2", "x3", "x4"],
        [("x2", 0.2, 0.5, vec!["u2", "u4"]), ("x3", 0.5, 0.5, vec![]), ("x4", 0.6, 0.3, u.to_vec())],
    )
    .expect("witness data is valid")
}

/// Checks that the classical complement laws fail on the witness.
pub fn check_complement_witness(alg: &dyn Algebra, k: &IfpsSet) -> Result<bool> {
    let empty = IfpsSet::empty(k.universe().iter().cloned(), k.params().iter().cloned())?;
    let universal = IfpsSet::universal(k.universe().iter().cloned(), k.params().iter().cloned())?;
    let kc = alg.complement(k);
    let joined = alg.union(k, &kc)?;
    let met = alg.intersection(k, &kc)?;
    Ok(!joined.approx_eq(&universal)? && !met.approx_eq(&empty)?)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LawOutcome {
    pub group: &'static str,
    pub name: &'static str,
    pub instances: usize,
    pub failures: usize,
    pub first_counterexample: Option<String>,
}

impl LawOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LawReport {
    pub trials: usize,
    pub seed: u64,
    pub outcomes: Vec<LawOutcome>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(LawOutcome::passed)
    }

    pub fn failures(&self) -> usize {
        self.outcomes.iter().filter(|o| !o.passed()).count()
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "law suite: {} trials, seed {}", self.trials, self.seed)?;
        let width = self.outcomes.iter().map(|o| o.group.len() + o.name.len() + 2).max().unwrap_or(0);
        for o in &self.outcomes {
            let label = format!("{}: {}", o.group, o.name);
            let status = if o.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "{status}  {label:<width$}  {}/{}", o.instances - o.failures, o.instances)?;
            if let Some(cx) = &o.first_counterexample {
                writeln!(f, "      counterexample: {cx}")?;
            }
        }
        let failed = self.failures();
        if failed == 0 {
            write!(f, "all {} laws hold", self.outcomes.len())
        } else {
            write!(f, "{failed} of {} laws failed", self.outcomes.len())
        }
    }
}

fn describe(trial: &Trial, seed: u64) -> String {
    let doc = |s: &IfpsSet| crate::io::to_compact_json(s);
    format!("seed {seed} trial {}: K={} L={} M={}", trial.index, doc(&trial.k), doc(&trial.l), doc(&trial.m))
}

/// Runs every law on `trials` generated instances plus the fixed complement
/// witness, using the library operators.
pub fn run_suite(trials: usize, seed: u64) -> Result<LawReport> {
    run_suite_with(&Reference, trials, seed)
}

pub fn run_suite_with(alg: &dyn Algebra, trials: usize, seed: u64) -> Result<LawReport> {
    if trials == 0 {
        return Err(Error::SizeOutOfRange("trials must be at least 1".into()));
    }
    let laws = laws();
    let mut outcomes: Vec<LawOutcome> = laws
        .iter()
        .map(|l| LawOutcome { group: l.group, name: l.name, instances: 0, failures: 0, first_counterexample: None })
        .collect();
    for index in 0..trials {
        let trial = Trial::generate(seed, index)?;
        for (law, outcome) in laws.iter().zip(outcomes.iter_mut()) {
            outcome.instances += 1;
            // an operator that errors on compatible inputs counts as a failure
            let ok = (law.check)(alg, &trial).unwrap_or(false);
            if !ok {
                outcome.failures += 1;
                if outcome.first_counterexample.is_none() {
                    outcome.first_counterexample = Some(describe(&trial, seed));
                }
            }
        }
    }

    let witness = complement_law_witness();
    let holds = check_complement_witness(alg, &witness).unwrap_or(false);
    outcomes.push(LawOutcome {
        group: "complement",
        name: "union/intersection with the complement can miss universal/empty (witness)",
        instances: 1,
        failures: usize::from(!holds),
        first_counterexample: (!holds).then(|| crate::io::to_compact_json(&witness)),
    });
    Ok(LawReport { trials, seed, outcomes })
}
