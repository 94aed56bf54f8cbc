use std::fmt;

use serde::Serialize;

use crate::act::Act;
use crate::error::{structural, Error, Result};
use crate::validate::{ValidationReport, Violation};

/// An equivariant function between two acts over the same monoid and side.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ActMap {
    source: Act,
    target: Act,
    values: Vec<usize>,
}

impl ActMap {
    /// Checks compatibility, length and ranges, but not equivariance.
    pub fn from_parts(source: &Act, target: &Act, values: Vec<usize>) -> Result<Self> {
        source.compatible(target)?;
        if values.len() != source.size() {
            return Err(structural(
                "values",
                format!("map has {} values, source has {} elements", values.len(), source.size()),
            ));
        }
        if let Some(i) = values.iter().position(|&v| v >= target.size()) {
            return Err(structural(
                format!("values[{i}]"),
                format!("index {} out of range 0..{}", values[i], target.size()),
            ));
        }
        Ok(ActMap {
            source: source.clone(),
            target: target.clone(),
            values,
        })
    }

    /// A validated (equivariant) map.
    pub fn new(source: &Act, target: &Act, values: Vec<usize>) -> Result<Self> {
        let map = Self::from_parts(source, target, values)?;
        map.validate().into_result()?;
        Ok(map)
    }

    pub fn identity(act: &Act) -> Self {
        ActMap {
            source: act.clone(),
            target: act.clone(),
            values: act.elements().collect(),
        }
    }

    /// The inclusion of the subact on `elements` (sorted, deduplicated),
    /// whose carrier is renumbered in increasing order.
    pub fn inclusion(ambient: &Act, elements: &[usize]) -> Result<Self> {
        let mut elems = elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if let Some(&x) = elems.iter().find(|&&x| x >= ambient.size()) {
            return Err(structural("elements", format!("element {x} out of range")));
        }
        if !ambient.is_closed(&elems) {
            return Err(Error::Incompatible("elements do not form a subact".into()));
        }
        let mut pos = vec![usize::MAX; ambient.size()];
        for (i, &x) in elems.iter().enumerate() {
            pos[x] = i;
        }
        let m = ambient.monoid().size();
        let mut table = Vec::with_capacity(elems.len() * m);
        for &x in &elems {
            table.extend(ambient.monoid().elements().map(|s| pos[ambient.act(x, s)]));
        }
        let sub = Act::from_parts(ambient.monoid(), ambient.side(), elems.len(), table, false)?;
        Ok(ActMap {
            source: sub,
            target: ambient.clone(),
            values: elems,
        })
    }

    /// The constant map onto `point`, which must be a fixed point to be equivariant.
    pub fn constant(source: &Act, target: &Act, point: usize) -> Result<Self> {
        Self::new(source, target, vec![point; source.size()])
    }

    pub fn source(&self) -> &Act {
        &self.source
    }

    pub fn target(&self) -> &Act {
        &self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.values[x]
    }

    /// Every point where `h(x·s) != h(x)·s`.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for x in self.source.elements() {
            for s in self.source.monoid().elements() {
                if self.values[self.source.act(x, s)] != self.target.act(self.values[x], s) {
                    report.push(Violation::Equivariance { element: x, s });
                }
            }
        }
        report
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &ActMap) -> Result<ActMap> {
        if first.target != self.source {
            return Err(Error::Incompatible("composite: target of the first map is not the source of the second".into()));
        }
        Ok(ActMap {
            source: first.source.clone(),
            target: self.target.clone(),
            values: first.values.iter().map(|&x| self.values[x]).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.size()];
        self.values.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.size()];
        for &v in &self.values {
            seen[v] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_bijective(&self) -> bool {
        self.source.size() == self.target.size() && self.is_injective()
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.values.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Sorted image.
    pub fn image(&self) -> Vec<usize> {
        let mut seen = vec![false; self.target.size()];
        for &v in &self.values {
            seen[v] = true;
        }
        self.target.elements().filter(|&y| seen[y]).collect()
    }

    pub fn in_image(&self) -> Vec<bool> {
        let mut seen = vec![false; self.target.size()];
        for &v in &self.values {
            seen[v] = true;
        }
        seen
    }

    /// Preimage of each target element.
    pub fn fibres(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.target.size()];
        for (x, &y) in self.values.iter().enumerate() {
            out[y].push(x);
        }
        out
    }
}

/// Serialized as its value array; endpoints are given by context.
impl Serialize for ActMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.values.serialize(s)
    }
}

impl fmt::Debug for ActMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ActMap({}→{}: {:?})", self.source.size(), self.target.size(), self.values)
    }
}
