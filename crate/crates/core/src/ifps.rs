use std::collections::{BTreeMap, BTreeSet};

use crate::degree::DegreePair;
use crate::error::{Error, Result};
use crate::ifs::{collect_ground, FuzzySet};

static NO_SUPPORT: BTreeSet<String> = BTreeSet::new();

/// The value an IFPS set assigns to one parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct Entry {
    pub degree: DegreePair,
    pub support: BTreeSet<String>,
}

impl Entry {
    fn is_default(&self) -> bool {
        self.degree.is_non_member() && self.support.is_empty()
    }
}

/// An intuitionistic fuzzy parametrized soft set.
///
/// `universe` holds the alternatives, `params` the parameters. Each
/// parameter carries a [`DegreePair`] (importance, unimportance) and a
/// support, the subset of the universe it approves. Parameters without a
/// stored entry read as `((0, 1), {})`, and such entries are never stored.
///
/// Values built through [`IfpsSet::new`] also satisfy the property clause:
/// a parameter at degree `(0, 1)` has an empty support. The algebra follows
/// the set formulas literally, and two of its operators ([`complement`] of a
/// `(1, 0)` entry whose support is not the whole universe, and
/// [`or_product`] against an absent parameter) can yield a `(0, 1)` entry
/// with a non-empty support. [`IfpsSet::clause_violations`] lists those.
///
/// [`complement`]: IfpsSet::complement
/// [`or_product`]: IfpsSet::or_product
#[derive(Debug, Clone, PartialEq)]
pub struct IfpsSet {
    universe: BTreeSet<String>,
    params: BTreeSet<String>,
    entries: BTreeMap<String, Entry>,
}

impl IfpsSet {
    /// Validates raw `(parameter, alpha, beta, support)` entries.
    pub fn new<U, P, E, S, I>(universe: U, params: P, entries: E) -> Result<Self>
    where
        U: IntoIterator<Item = S>,
        P: IntoIterator<Item = S>,
        E: IntoIterator<Item = (S, f64, f64, I)>,
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let universe = collect_ground(universe)?;
        let params = collect_ground(params)?;
        let mut stored = BTreeMap::new();
        for (param, alpha, beta, support) in entries {
            let param = param.into();
            if !params.contains(&param) {
                return Err(Error::UnknownParameter(param));
            }
            if stored.contains_key(&param) {
                return Err(Error::DuplicateId(param));
            }
            let degree = DegreePair::checked(&param, alpha, beta)?;
            let mut members = BTreeSet::new();
            for u in support {
                let u = u.into();
                if !universe.contains(&u) {
                    return Err(Error::UnknownElement(u));
                }
                if !members.insert(u.clone()) {
                    return Err(Error::DuplicateId(u));
                }
            }
            if degree.is_non_member() && !members.is_empty() {
                return Err(Error::PropertyClause(param));
            }
            stored.insert(param, Entry { degree, support: members });
        }
        Ok(Self::from_parts(universe, params, stored))
    }

    fn from_parts(universe: BTreeSet<String>, params: BTreeSet<String>, entries: BTreeMap<String, Entry>) -> Self {
        let entries = entries.into_iter().filter(|(_, e)| !e.is_default()).collect();
        IfpsSet { universe, params, entries }
    }

    fn filled(universe: BTreeSet<String>, params: BTreeSet<String>, entry: Option<Entry>) -> Result<Self> {
        if universe.is_empty() {
            return Err(Error::EmptySet("universe"));
        }
        if params.is_empty() {
            return Err(Error::EmptySet("parameter set"));
        }
        let entries = match entry {
            Some(e) => params.iter().map(|p| (p.clone(), e.clone())).collect(),
            None => BTreeMap::new(),
        };
        Ok(Self::from_parts(universe, params, entries))
    }

    /// Every parameter at `((0, 1), {})`.
    pub fn empty<U, P, S>(universe: U, params: P) -> Result<Self>
    where
        U: IntoIterator<Item = S>,
        P: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::filled(collect_ground(universe)?, collect_ground(params)?, None)
    }

    /// Every parameter at `((1, 0), U)`.
    pub fn universal<U, P, S>(universe: U, params: P) -> Result<Self>
    where
        U: IntoIterator<Item = S>,
        P: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let universe = collect_ground(universe)?;
        let entry = Entry { degree: DegreePair::FULL_MEMBER, support: universe.clone() };
        Self::filled(universe, collect_ground(params)?, Some(entry))
    }

    /// Embeds an ordinary fuzzy parametrized soft set: each parameter gets
    /// `(mu, 1 - mu)` and its approximation as support.
    ///
    /// `mu` is a fuzzy set over the parameters. A parameter with `mu = 0`
    /// must have an empty (or absent) approximation.
    pub fn from_fp_soft<U, S>(universe: U, mu: &FuzzySet, approx: &BTreeMap<String, BTreeSet<String>>) -> Result<Self>
    where
        U: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let universe = collect_ground(universe)?;
        let params = mu.ground().clone();
        if let Some(stray) = approx.keys().find(|p| !params.contains(*p)) {
            return Err(Error::UnknownParameter(stray.clone()));
        }
        let mut entries = BTreeMap::new();
        for (param, m) in mu.iter() {
            let support = approx.get(param).cloned().unwrap_or_default();
            if let Some(u) = support.iter().find(|u| !universe.contains(*u)) {
                return Err(Error::UnknownElement(u.clone()));
            }
            if m == 0.0 && !support.is_empty() {
                return Err(Error::FpSoftClause(param.to_owned()));
            }
            let degree = DegreePair::checked(param, m, 1.0 - m)?;
            entries.insert(param.to_owned(), Entry { degree, support });
        }
        Ok(Self::from_parts(universe, params, entries))
    }

    pub fn universe(&self) -> &BTreeSet<String> {
        &self.universe
    }

    pub fn params(&self) -> &BTreeSet<String> {
        &self.params
    }

    /// Degree of `param`, `(0, 1)` when absent.
    pub fn degree(&self, param: &str) -> DegreePair {
        self.entries.get(param).map(|e| e.degree).unwrap_or_default()
    }

    /// Support of `param`, empty when absent.
    pub fn support(&self, param: &str) -> &BTreeSet<String> {
        self.entries.get(param).map(|e| &e.support).unwrap_or(&NO_SUPPORT)
    }

    /// Stored (non-default) entries in parameter order.
    pub fn entries(&self) -> impl Iterator<Item = (&str, &Entry)> + '_ {
        self.entries.iter().map(|(k, v)| (k.as_str(), v))
    }

    /// Every parameter of `E` with its degree and support, defaults included.
    pub fn iter(&self) -> impl Iterator<Item = (&str, DegreePair, &BTreeSet<String>)> + '_ {
        self.params.iter().map(|p| (p.as_str(), self.degree(p), self.support(p)))
    }

    /// Parameters at degree `(0, 1)` whose support is not empty.
    pub fn clause_violations(&self) -> Vec<&str> {
        self.entries
            .iter()
            .filter(|(_, e)| e.degree.is_non_member() && !e.support.is_empty())
            .map(|(k, _)| k.as_str())
            .collect()
    }

    pub fn is_empty_set(&self) -> bool {
        self.entries.is_empty()
    }

    /// Re-expresses the set over larger universe and parameter sets. New
    /// parameters read as the default entry.
    pub fn aligned_to(&self, universe: &BTreeSet<String>, params: &BTreeSet<String>) -> Result<Self> {
        if let Some(u) = self.universe.difference(universe).next() {
            return Err(Error::UnknownElement(u.clone()));
        }
        if let Some(p) = self.params.difference(params).next() {
            return Err(Error::UnknownParameter(p.clone()));
        }
        Ok(IfpsSet { universe: universe.clone(), params: params.clone(), entries: self.entries.clone() })
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.universe != other.universe {
            return Err(Error::Mismatch("universe"));
        }
        if self.params != other.params {
            return Err(Error::Mismatch("parameter set"));
        }
        Ok(())
    }

    fn combine(
        &self,
        other: &Self,
        degree: impl Fn(DegreePair, DegreePair) -> DegreePair,
        support: impl Fn(&BTreeSet<String>, &BTreeSet<String>) -> BTreeSet<String>,
    ) -> Result<Self> {
        self.check_compatible(other)?;
        let entries = self
            .params
            .iter()
            .map(|p| {
                let entry = Entry {
                    degree: degree(self.degree(p), other.degree(p)),
                    support: support(self.support(p), other.support(p)),
                };
                (p.clone(), entry)
            })
            .collect();
        Ok(Self::from_parts(self.universe.clone(), self.params.clone(), entries))
    }

    /// `alpha_K <= alpha_L`, `beta_K >= beta_L` and `f_K ⊆ f_L` on every parameter.
    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self
            .params
            .iter()
            .all(|p| self.degree(p).is_below(other.degree(p)) && self.support(p).is_subset(other.support(p))))
    }

    /// Degrees equal at tolerance, supports equal exactly.
    pub fn approx_eq(&self, other: &Self) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.params.iter().all(|p| self.degree(p).approx_eq(other.degree(p)) && self.support(p) == other.support(p)))
    }

    /// Swaps the degrees and complements the support on every parameter of
    /// `E`, absent ones included: a default entry becomes `((1, 0), U)`.
    pub fn complement(&self) -> Self {
        let entries = self
            .params
            .iter()
            .map(|p| {
                let support = self.universe.difference(self.support(p)).cloned().collect();
                (p.clone(), Entry { degree: self.degree(p).complement(), support })
            })
            .collect();
        Self::from_parts(self.universe.clone(), self.params.clone(), entries)
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.combine(other, DegreePair::max_min, union_of)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.combine(other, DegreePair::min_max, intersection_of)
    }

    pub fn or_sum(&self, other: &Self) -> Result<Self> {
        self.combine(other, DegreePair::algebraic_sum, union_of)
    }

    /// Algebraic-sum degrees with intersected supports. A result entry can
    /// have positive importance and an empty support; that is legal.
    pub fn and_sum(&self, other: &Self) -> Result<Self> {
        self.combine(other, DegreePair::algebraic_sum, intersection_of)
    }

    pub fn or_product(&self, other: &Self) -> Result<Self> {
        self.combine(other, DegreePair::algebraic_product, union_of)
    }

    pub fn and_product(&self, other: &Self) -> Result<Self> {
        self.combine(other, DegreePair::algebraic_product, intersection_of)
    }
}

fn union_of(a: &BTreeSet<String>, b: &BTreeSet<String>) -> BTreeSet<String> {
    a.union(b).cloned().collect()
}

fn intersection_of(a: &BTreeSet<String>, b: &BTreeSet<String>) -> BTreeSet<String> {
    a.intersection(b).cloned().collect()
}
