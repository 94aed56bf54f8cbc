use std::ops::ControlFlow;

use serde::Serialize;

use crate::act::Act;
use crate::error::Result;
use crate::hom::{filler_problem, HomProblem};
use crate::map::ActMap;
use crate::par;
use crate::universe::Universe;

/// Which side of a lifting problem the tested map sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LiftSide {
    /// The tested map is the left edge (LLP, `^□C`).
    Left,
    /// The tested map is the right edge (RLP, `C^□`).
    Right,
}

impl LiftSide {
    pub fn as_str(self) -> &'static str {
        match self {
            LiftSide::Left => "left",
            LiftSide::Right => "right",
        }
    }
}

/// Visit every commuting square with left edge `left: A → B` and right edge
/// `right: C → D`, as `(u: A → C, v: B → D)` in lexicographic order.
fn for_each_square<F>(left: &ActMap, right: &ActMap, mut visit: F) -> Result<()>
where
    F: FnMut(&[usize], &[usize]) -> ControlFlow<()>,
{
    let tops = HomProblem::new(left.source(), right.source())?;
    let bottom = HomProblem::new(left.target(), right.target())?;
    tops.for_each(|u| {
        let mut p = bottom.clone();
        for (a, &b) in left.values().iter().enumerate() {
            p = p.fix(b, right.apply(u[a]));
        }
        let mut flow = ControlFlow::Continue(());
        p.for_each(|v| {
            flow = visit(u, v);
            flow
        });
        flow
    });
    Ok(())
}

/// All commuting squares `(u, v)` from `left` to `right`.
pub fn squares(left: &ActMap, right: &ActMap) -> Result<Vec<(ActMap, ActMap)>> {
    let mut out = Vec::new();
    for_each_square(left, right, |u, v| {
        out.push((u.to_vec(), v.to_vec()));
        ControlFlow::Continue(())
    })?;
    out.into_iter()
        .map(|(u, v)| {
            Ok((
                ActMap::from_parts(left.source(), right.source(), u)?,
                ActMap::from_parts(left.target(), right.target(), v)?,
            ))
        })
        .collect()
}

/// The first square from `left` to `right` with no diagonal filler.
pub fn failing_square(left: &ActMap, right: &ActMap) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    let mut failure = None;
    for_each_square(left, right, |u, v| {
        let solvable = filler_problem(left, right, u, v).map(|p| p.exists()).unwrap_or(false);
        if solvable {
            ControlFlow::Continue(())
        } else {
            failure = Some((u.to_vec(), v.to_vec()));
            ControlFlow::Break(())
        }
    })?;
    Ok(failure)
}

/// Whether every square from `left` to `right` has a filler.
pub fn lifts(left: &ActMap, right: &ActMap) -> Result<bool> {
    Ok(failing_square(left, right)?.is_none())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftRecord {
    /// Index into the class the map was tested against.
    pub against: usize,
    pub u: ActMap,
    pub v: ActMap,
    /// The least filler, or `None` in a failure record.
    pub filler: Option<ActMap>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftingReport {
    pub side: LiftSide,
    pub holds: bool,
    /// One record per square, in class order then square order; stops at the
    /// first failure.
    pub squares: Vec<LiftRecord>,
}

impl LiftingReport {
    pub fn failure(&self) -> Option<&LiftRecord> {
        self.squares.iter().find(|r| r.filler.is_none())
    }
}

/// The lifting property of `f` against every member of `class`, with the
/// filler of every square or the first failing square.
pub fn has_lifting(side: LiftSide, f: &ActMap, class: &[ActMap]) -> Result<LiftingReport> {
    let mut records = Vec::new();
    for (i, c) in class.iter().enumerate() {
        let (left, right) = match side {
            LiftSide::Right => (c, f),
            LiftSide::Left => (f, c),
        };
        for (u, v) in squares(left, right)? {
            let filler = filler_problem(left, right, u.values(), v.values())?.first();
            let failed = filler.is_none();
            records.push(LiftRecord {
                against: i,
                u,
                v,
                filler,
            });
            if failed {
                return Ok(LiftingReport {
                    side,
                    holds: false,
                    squares: records,
                });
            }
        }
    }
    Ok(LiftingReport {
        side,
        holds: true,
        squares: records,
    })
}

/// `lifts(maps[i], maps[j])` for every pair of maps of a universe.
#[derive(Debug, Clone)]
pub struct LiftingTable {
    n: usize,
    bits: Vec<bool>,
}

impl LiftingTable {
    pub fn new(universe: &Universe) -> Self {
        Self::for_maps(universe.maps())
    }

    pub fn for_maps(maps: &[ActMap]) -> Self {
        let n = maps.len();
        let bits = par::map_range(n * n, |k| lifts(&maps[k / n], &maps[k % n]).expect("same monoid"));
        LiftingTable { n, bits }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Whether `maps[left]` has the LLP against `maps[right]`.
    pub fn lifts(&self, left: usize, right: usize) -> bool {
        self.bits[left * self.n + right]
    }

    /// Indices with the RLP against every index in `class`.
    pub fn box_right(&self, class: &[usize]) -> Vec<usize> {
        (0..self.n).filter(|&j| class.iter().all(|&i| self.lifts(i, j))).collect()
    }

    /// Indices with the LLP against every index in `class`.
    pub fn box_left(&self, class: &[usize]) -> Vec<usize> {
        (0..self.n).filter(|&i| class.iter().all(|&j| self.lifts(i, j))).collect()
    }
}

/// The maps of `universe` with the stated lifting property against every
/// member of `class`, in universe order.
pub fn relative_box(class: &[ActMap], universe: &Universe, side: LiftSide) -> Result<Vec<ActMap>> {
    let keep = par::map(universe.maps(), |g| -> Result<bool> {
        for c in class {
            let ok = match side {
                LiftSide::Right => lifts(c, g)?,
                LiftSide::Left => lifts(g, c)?,
            };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    });
    let mut out = Vec::new();
    for (g, k) in universe.maps().iter().zip(keep) {
        if k? {
            out.push(g.clone());
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProjectivityReport {
    pub holds: bool,
    /// `(g, h)` with `f∘h = g` for every `g: P → target(f)` checked.
    pub lifts: Vec<(ActMap, ActMap)>,
    /// The first `g` without a lift.
    pub failing: Option<ActMap>,
}

/// Whether every `g: P → target(f)` lifts to `h: P → source(f)` with `f∘h = g`.
pub fn is_projective_wrt(p: &Act, f: &ActMap) -> Result<ProjectivityReport> {
    let mut lifts = Vec::new();
    for g in HomProblem::new(p, f.target())?.all() {
        match HomProblem::new(p, f.source())?.lying_over(f, g.values()).first() {
            Some(h) => lifts.push((g, h)),
            None => {
                return Ok(ProjectivityReport {
                    holds: false,
                    lifts,
                    failing: Some(g),
                })
            }
        }
    }
    Ok(ProjectivityReport {
        holds: true,
        lifts,
        failing: None,
    })
}

/// Fast form of [`is_projective_wrt`].
pub(crate) fn projective_wrt(p: &Act, f: &ActMap) -> bool {
    let Ok(maps) = HomProblem::new(p, f.target()) else { return false };
    let mut ok = true;
    maps.for_each(|g| {
        let lifted = HomProblem::new(p, f.source()).map(|q| q.lying_over(f, g).exists()).unwrap_or(false);
        if lifted {
            ControlFlow::Continue(())
        } else {
            ok = false;
            ControlFlow::Break(())
        }
    });
    ok
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangleReport {
    pub side: LiftSide,
    pub holds: bool,
    /// Index of the first member of the class that fails.
    pub failing: Option<usize>,
}

/// `^△C` (left: projective w.r.t. each map of `class`) or `C^△` (right: the
/// map to the one-element act has the RLP against each map of `class`).
pub fn triangle(side: LiftSide, act: &Act, class: &[ActMap]) -> Result<TriangleReport> {
    let bang = ActMap::from_parts(act, &Act::terminal(act.monoid(), act.side()), vec![0; act.size()])?;
    for (i, c) in class.iter().enumerate() {
        let ok = match side {
            LiftSide::Left => projective_wrt(act, c),
            LiftSide::Right => lifts(c, &bang)?,
        };
        if !ok {
            return Ok(TriangleReport {
                side,
                holds: false,
                failing: Some(i),
            });
        }
    }
    Ok(TriangleReport {
        side,
        holds: true,
        failing: None,
    })
}
