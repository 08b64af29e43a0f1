use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::degree::{DegreePair, TOLERANCE};
use crate::error::{Error, Result};

pub(crate) fn collect_ground<I, S>(ground: I) -> Result<BTreeSet<String>>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let mut out = BTreeSet::new();
    for id in ground {
        let id = id.into();
        if out.contains(&id) {
            return Err(Error::DuplicateId(id));
        }
        out.insert(id);
    }
    Ok(out)
}

/// An intuitionistic fuzzy set over a finite ground set.
///
/// Storage is sparse: elements without an explicit pair read as `(0, 1)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntuitionisticFuzzySet {
    ground: BTreeSet<String>,
    degrees: BTreeMap<String, DegreePair>,
}

impl IntuitionisticFuzzySet {
    pub fn new<I, S, D, K>(ground: I, degrees: D) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
        D: IntoIterator<Item = (K, DegreePair)>,
        K: Into<String>,
    {
        let ground = collect_ground(ground)?;
        let mut map = BTreeMap::new();
        for (id, pair) in degrees {
            let id = id.into();
            if !ground.contains(&id) {
                return Err(Error::UnknownElement(id));
            }
            if map.contains_key(&id) {
                return Err(Error::DuplicateId(id));
            }
            // Re-validate with the element name attached to any error.
            let pair = DegreePair::checked(&id, pair.alpha(), pair.beta())?;
            if !pair.is_non_member() {
                map.insert(id, pair);
            }
        }
        Ok(IntuitionisticFuzzySet { ground, degrees: map })
    }

    /// Builds a set from computed pairs, skipping validation.
    pub(crate) fn from_raw(ground: BTreeSet<String>, degrees: BTreeMap<String, DegreePair>) -> Self {
        let degrees = degrees.into_iter().filter(|(_, p)| !p.is_non_member()).collect();
        IntuitionisticFuzzySet { ground, degrees }
    }

    pub fn ground(&self) -> &BTreeSet<String> {
        &self.ground
    }

    pub fn degree(&self, id: &str) -> DegreePair {
        self.degrees.get(id).copied().unwrap_or_default()
    }

    /// All elements of the ground set with their (possibly default) pairs.
    pub fn iter(&self) -> impl Iterator<Item = (&str, DegreePair)> + '_ {
        self.ground.iter().map(|id| (id.as_str(), self.degree(id)))
    }

    fn same_ground(&self, other: &Self) -> Result<()> {
        if self.ground != other.ground {
            return Err(Error::Mismatch("ground set"));
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(DegreePair, DegreePair) -> DegreePair) -> Result<Self> {
        self.same_ground(other)?;
        let degrees = self.ground.iter().map(|id| (id.clone(), f(self.degree(id), other.degree(id)))).collect();
        Ok(Self::from_raw(self.ground.clone(), degrees))
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.same_ground(other)?;
        Ok(self.ground.iter().all(|id| self.degree(id).is_below(other.degree(id))))
    }

    pub fn approx_eq(&self, other: &Self) -> Result<bool> {
        self.same_ground(other)?;
        Ok(self.ground.iter().all(|id| self.degree(id).approx_eq(other.degree(id))))
    }

    pub fn complement(&self) -> Self {
        let degrees = self.ground.iter().map(|id| (id.clone(), self.degree(id).complement())).collect();
        Self::from_raw(self.ground.clone(), degrees)
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, DegreePair::max_min)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, DegreePair::min_max)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, DegreePair::algebraic_sum)
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, DegreePair::algebraic_product)
    }
}

/// A fuzzy set over a finite ground set; absent elements read as 0.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzySet {
    ground: BTreeSet<String>,
    mu: BTreeMap<String, f64>,
}

impl FuzzySet {
    pub fn new<I, S, D, K>(ground: I, mu: D) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
        D: IntoIterator<Item = (K, f64)>,
        K: Into<String>,
    {
        let ground = collect_ground(ground)?;
        let mut map = BTreeMap::new();
        for (id, value) in mu {
            let id = id.into();
            if !ground.contains(&id) {
                return Err(Error::UnknownElement(id));
            }
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::MembershipRange { id, mu: value });
            }
            if map.contains_key(&id) {
                return Err(Error::DuplicateId(id));
            }
            if value != 0.0 {
                map.insert(id, value);
            }
        }
        Ok(FuzzySet { ground, mu: map })
    }

    pub(crate) fn from_raw(ground: BTreeSet<String>, mu: BTreeMap<String, f64>) -> Self {
        let mu = mu.into_iter().filter(|(_, v)| *v != 0.0).collect();
        FuzzySet { ground, mu }
    }

    pub fn ground(&self) -> &BTreeSet<String> {
        &self.ground
    }

    pub fn membership(&self, id: &str) -> f64 {
        self.mu.get(id).copied().unwrap_or(0.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, f64)> + '_ {
        self.ground.iter().map(|id| (id.as_str(), self.membership(id)))
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.ground == other.ground
            && self.ground.iter().all(|id| (self.membership(id) - other.membership(id)).abs() <= TOLERANCE)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: f64, b: f64) -> DegreePair {
        DegreePair::new(a, b).unwrap()
    }

    fn single(a: f64, b: f64) -> IntuitionisticFuzzySet {
        IntuitionisticFuzzySet::new(["x1"], [("x1", pair(a, b))]).unwrap()
    }

    #[test]
    fn subset_examples() {
        assert!(single(0.4, 0.6).is_subset(&single(0.5, 0.5)).unwrap());
        assert!(single(0.4, 0.6).is_subset(&single(0.4, 0.6)).unwrap());
        // beta rises from 0.3 to 0.5, so the non-membership inequality fails
        assert!(!single(0.4, 0.3).is_subset(&single(0.5, 0.5)).unwrap());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(single(0.4, 0.5).complement(), single(0.5, 0.4));
        assert_eq!(single(0.4, 0.5).complement().complement(), single(0.4, 0.5));
        assert_eq!(single(0.0, 1.0).complement(), single(1.0, 0.0));
    }

    #[test]
    fn union_intersection_examples() {
        let a = single(0.4, 0.5);
        let b = single(0.6, 0.3);
        assert!(a.union(&b).unwrap().approx_eq(&single(0.6, 0.3)).unwrap());
        assert!(a.intersection(&b).unwrap().approx_eq(&single(0.4, 0.5)).unwrap());
        assert_eq!(a.union(&a).unwrap(), a);
        let bottom = single(0.0, 1.0);
        assert_eq!(bottom.union(&b).unwrap(), b);
    }

    #[test]
    fn sum_product_examples() {
        let a = single(0.4, 0.5);
        let b = single(0.6, 0.3);
        assert!(a.sum(&b).unwrap().approx_eq(&single(0.76, 0.15)).unwrap());
        assert!(a.product(&b).unwrap().approx_eq(&single(0.24, 0.65)).unwrap());
        assert!(a.sum(&single(0.0, 1.0)).unwrap().approx_eq(&a).unwrap());
        assert!(a.product(&single(1.0, 0.0)).unwrap().approx_eq(&a).unwrap());
        assert_eq!(a.sum(&single(1.0, 0.0)).unwrap(), single(1.0, 0.0));
    }

    #[test]
    fn ground_mismatch_is_an_error() {
        let a = single(0.4, 0.5);
        let b = IntuitionisticFuzzySet::new(["x2"], [("x2", pair(0.1, 0.1))]).unwrap();
        assert_eq!(a.union(&b), Err(Error::Mismatch("ground set")));
        assert!(a.is_subset(&b).is_err());
        assert!(a.sum(&b).is_err());
    }

    #[test]
    fn explicit_defaults_are_normalized_away() {
        let sparse = IntuitionisticFuzzySet::new(["x1", "x2"], [("x1", pair(0.3, 0.3))]).unwrap();
        let dense = IntuitionisticFuzzySet::new(["x1", "x2"], [("x1", pair(0.3, 0.3)), ("x2", DegreePair::NON_MEMBER)])
            .unwrap();
        assert_eq!(sparse, dense);
    }

    #[test]
    fn rejects_foreign_and_duplicate_keys() {
        assert_eq!(
            IntuitionisticFuzzySet::new(["x1"], [("x9", pair(0.1, 0.1))]),
            Err(Error::UnknownElement("x9".into()))
        );
        assert!(matches!(
            IntuitionisticFuzzySet::new(["x1", "x1"], Vec::<(&str, DegreePair)>::new()),
            Err(Error::DuplicateId(_))
        ));
        assert!(matches!(FuzzySet::new(["u1"], [("u1", 1.5)]), Err(Error::MembershipRange { .. })));
    }
}
