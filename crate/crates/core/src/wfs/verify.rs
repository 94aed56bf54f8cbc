use serde::Serialize;

use crate::classes::{failing_square, in_class, ClassDescriptor};
use crate::error::Result;
use crate::hom::{find_map_retract, find_slice_retract, MapRetractWitness};
use crate::map::ActMap;
use crate::par;
use crate::universe::Universe;

use super::factor::Factorization;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "kebab-case")]
pub enum WfsViolation {
    /// The factorizer failed, or a piece is outside its class.
    Factorization {
        map: ActMap,
        left_in_class: Option<bool>,
        right_in_class: Option<bool>,
        error: Option<String>,
    },
    /// A square from an `L` map to an `R` map with no filler.
    Lifting { left: ActMap, right: ActMap, u: ActMap, v: ActMap },
    /// `g` is a retract of `f ∈ L` under their shared source, but `g ∉ L`.
    LeftRetract { f: ActMap, g: ActMap, witness: MapRetractWitness },
    /// `g` is a retract of `f ∈ R` over their shared target, but `g ∉ R`.
    RightRetract { f: ActMap, g: ActMap, witness: MapRetractWitness },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WfsReport {
    pub holds: bool,
    pub max_act_size: usize,
    pub maps: usize,
    pub left_members: usize,
    pub right_members: usize,
    pub pairs_checked: usize,
    /// Whether a class test used a bound, so a pass is only "up to n".
    pub bounded: bool,
    pub violations: Vec<WfsViolation>,
}

/// Produces a candidate factorization for a map.
pub type Factorizer<'a> = dyn Fn(&ActMap) -> Result<Factorization> + Sync + 'a;

/// Check, over every map of `universe`: (1) the factorizer's pieces lie in
/// `left` and `right`; (2) every square from an `L` map to an `R` map has a
/// filler; (3a) `L` is closed under retracts under a shared source; (3b) `R`
/// is closed under retracts over a shared target.
pub fn wfs_verify(
    left: &ClassDescriptor,
    right: &ClassDescriptor,
    universe: &Universe,
    factorizer: &Factorizer<'_>,
) -> Result<WfsReport> {
    let maps = universe.maps();
    let member = |c: &ClassDescriptor| -> Result<(Vec<bool>, bool)> {
        let decisions = par::map(maps, |f| in_class(f, c));
        let mut bits = Vec::with_capacity(maps.len());
        let mut bounded = false;
        for d in decisions {
            let d = d?;
            bounded |= d.is_bounded();
            bits.push(d.holds);
        }
        Ok((bits, bounded))
    };
    let (in_l, bounded_l) = member(left)?;
    let (in_r, bounded_r) = member(right)?;
    let mut violations = Vec::new();

    // (1)
    let factored = par::map(maps, |h| -> WfsViolation {
        match factorizer(h) {
            Ok(fz) => {
                let l = in_class(&fz.left, left).map(|d| d.holds);
                let r = in_class(&fz.right, right).map(|d| d.holds);
                match (l, r) {
                    (Ok(true), Ok(true)) => WfsViolation::Factorization {
                        map: h.clone(),
                        left_in_class: Some(true),
                        right_in_class: Some(true),
                        error: None,
                    },
                    (l, r) => WfsViolation::Factorization {
                        map: h.clone(),
                        left_in_class: l.as_ref().ok().copied(),
                        right_in_class: r.as_ref().ok().copied(),
                        error: l.err().or(r.err()).map(|e| e.to_string()),
                    },
                }
            }
            Err(e) => WfsViolation::Factorization {
                map: h.clone(),
                left_in_class: None,
                right_in_class: None,
                error: Some(e.to_string()),
            },
        }
    });
    violations.extend(factored.into_iter().filter(|v| {
        !matches!(
            v,
            WfsViolation::Factorization {
                left_in_class: Some(true),
                right_in_class: Some(true),
                ..
            }
        )
    }));

    // (2)
    let ls: Vec<usize> = (0..maps.len()).filter(|&i| in_l[i]).collect();
    let rs: Vec<usize> = (0..maps.len()).filter(|&i| in_r[i]).collect();
    let pairs: Vec<(usize, usize)> = ls.iter().flat_map(|&i| rs.iter().map(move |&j| (i, j))).collect();
    let failures = par::map(&pairs, |&(i, j)| failing_square(&maps[i], &maps[j]));
    for (&(i, j), fail) in pairs.iter().zip(failures) {
        if let Some((u, v)) = fail? {
            let (f, g) = (&maps[i], &maps[j]);
            violations.push(WfsViolation::Lifting {
                left: f.clone(),
                right: g.clone(),
                u: ActMap::from_parts(f.source(), g.source(), u)?,
                v: ActMap::from_parts(f.target(), g.target(), v)?,
            });
        }
    }

    // (3a) and (3b)
    let retract_pairs: Vec<(usize, usize)> = (0..maps.len())
        .flat_map(|i| (0..maps.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| {
            (in_l[i] && !in_l[j] && maps[i].source() == maps[j].source())
                || (in_r[i] && !in_r[j] && maps[i].target() == maps[j].target())
        })
        .collect();
    let found = par::map(&retract_pairs, |&(i, j)| -> Result<Vec<WfsViolation>> {
        let (f, g) = (&maps[i], &maps[j]);
        let mut out = Vec::new();
        if in_l[i] && !in_l[j] && f.source() == g.source() {
            if let Some(w) = find_map_retract(f, g)? {
                out.push(WfsViolation::LeftRetract {
                    f: f.clone(),
                    g: g.clone(),
                    witness: w,
                });
            }
        }
        if in_r[i] && !in_r[j] && f.target() == g.target() {
            if let Some(w) = find_slice_retract(f, g)? {
                out.push(WfsViolation::RightRetract {
                    f: f.clone(),
                    g: g.clone(),
                    witness: w,
                });
            }
        }
        Ok(out)
    });
    for v in found {
        violations.extend(v?);
    }

    Ok(WfsReport {
        holds: violations.is_empty(),
        max_act_size: universe.max_act_size(),
        maps: maps.len(),
        left_members: ls.len(),
        right_members: rs.len(),
        pairs_checked: pairs.len(),
        bounded: bounded_l || bounded_r,
        violations,
    })
}
