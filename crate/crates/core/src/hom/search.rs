//! Backtracking search for equivariant maps.
//!
//! Values are decided in increasing source index, candidates in increasing
//! target index, and every decision `h(x) = y` is propagated along the orbit
//! (`h(x·s) = y·s`). Because every index below the current one is already
//! assigned when a decision is made, solutions are produced in lexicographic
//! order of their value arrays, and the first solution is the least one.

use std::ops::ControlFlow;

use crate::act::Act;
use crate::error::Result;
use crate::map::ActMap;

const UNSET: usize = usize::MAX;

/// Constraints for a map search from `source` to `target`.
#[derive(Debug, Clone)]
pub struct HomProblem {
    source: Act,
    target: Act,
    prescribed: Vec<(usize, usize)>,
    allowed: Vec<Option<Vec<bool>>>,
    injective: bool,
}

struct State<'p> {
    problem: &'p HomProblem,
    values: Vec<usize>,
    used: Vec<bool>,
    trail: Vec<usize>,
}

impl<'p> State<'p> {
    fn allowed(&self, x: usize, y: usize) -> bool {
        self.problem.allowed[x].as_ref().is_none_or(|a| a[y])
    }

    /// Assign and propagate along the orbit; false on conflict (the caller
    /// undoes to its trail mark).
    fn assign(&mut self, x: usize, y: usize) -> bool {
        let src = &self.problem.source;
        let tgt = &self.problem.target;
        let mut stack = vec![(x, y)];
        while let Some((x, y)) = stack.pop() {
            let cur = self.values[x];
            if cur != UNSET {
                if cur != y {
                    return false;
                }
                continue;
            }
            if !self.allowed(x, y) || (self.problem.injective && self.used[y]) {
                return false;
            }
            self.values[x] = y;
            if self.problem.injective {
                self.used[y] = true;
            }
            self.trail.push(x);
            for s in src.monoid().elements() {
                stack.push((src.act(x, s), tgt.act(y, s)));
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().expect("trail");
            if self.problem.injective {
                self.used[self.values[x]] = false;
            }
            self.values[x] = UNSET;
        }
    }

    fn dfs<F>(&mut self, from: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let n = self.values.len();
        let mut x = from;
        while x < n && self.values[x] != UNSET {
            x += 1;
        }
        if x == n {
            return visit(&self.values);
        }
        for y in self.problem.target.elements() {
            let mark = self.trail.len();
            if self.assign(x, y) {
                self.dfs(x + 1, visit)?;
            }
            self.undo(mark);
        }
        ControlFlow::Continue(())
    }
}

impl HomProblem {
    pub fn new(source: &Act, target: &Act) -> Result<Self> {
        source.compatible(target)?;
        Ok(HomProblem {
            source: source.clone(),
            target: target.clone(),
            prescribed: Vec::new(),
            allowed: vec![None; source.size()],
            injective: false,
        })
    }

    /// Require `h(x) = y`.
    pub fn fix(mut self, x: usize, y: usize) -> Self {
        self.prescribed.push((x, y));
        self
    }

    /// Require `h(x)` to lie in `candidates` (intersected with earlier restrictions).
    pub fn restrict(mut self, x: usize, candidates: impl IntoIterator<Item = usize>) -> Self {
        let mut mask = vec![false; self.target.size()];
        for y in candidates {
            mask[y] = true;
        }
        self.allowed[x] = Some(match self.allowed[x].take() {
            Some(old) => old.iter().zip(&mask).map(|(a, b)| *a && *b).collect(),
            None => mask,
        });
        self
    }

    /// Require `h(x) ∈ {y : p(y) = q}` for every `x`, where `q = want[x]`:
    /// the constraint `p ∘ h = want` for a map `p` out of the target.
    pub fn lying_over(mut self, p: &ActMap, want: &[usize]) -> Self {
        let fibres = p.fibres();
        for (x, &w) in want.iter().enumerate() {
            self = self.restrict(x, fibres[w].iter().copied());
        }
        self
    }

    pub fn injective(mut self) -> Self {
        self.injective = true;
        self
    }

    pub fn source(&self) -> &Act {
        &self.source
    }

    pub fn target(&self) -> &Act {
        &self.target
    }

    /// Visit every solution in lexicographic order until `visit` breaks.
    pub fn for_each<F>(&self, mut visit: F)
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if self.injective && self.source.size() > self.target.size() {
            return;
        }
        let mut state = State {
            problem: self,
            values: vec![UNSET; self.source.size()],
            used: vec![false; self.target.size()],
            trail: Vec::new(),
        };
        for &(x, y) in &self.prescribed {
            if !state.assign(x, y) {
                return;
            }
        }
        let _ = state.dfs(0, &mut visit);
    }

    /// The lexicographically least solution.
    pub fn first(&self) -> Option<ActMap> {
        let mut found = None;
        self.for_each(|v| {
            found = Some(v.to_vec());
            ControlFlow::Break(())
        });
        found.map(|v| self.wrap(v))
    }

    pub fn all(&self) -> Vec<ActMap> {
        let mut out = Vec::new();
        self.for_each(|v| {
            out.push(v.to_vec());
            ControlFlow::Continue(())
        });
        out.into_iter().map(|v| self.wrap(v)).collect()
    }

    pub fn count(&self) -> usize {
        let mut n = 0;
        self.for_each(|_| {
            n += 1;
            ControlFlow::Continue(())
        });
        n
    }

    pub fn exists(&self) -> bool {
        let mut found = false;
        self.for_each(|_| {
            found = true;
            ControlFlow::Break(())
        });
        found
    }

    fn wrap(&self, values: Vec<usize>) -> ActMap {
        ActMap::from_parts(&self.source, &self.target, values).expect("search yields in-range values")
    }
}

/// All equivariant maps `a → b`, in lexicographic order of value arrays.
pub fn enumerate_maps(a: &Act, b: &Act) -> Result<Vec<ActMap>> {
    Ok(HomProblem::new(a, b)?.all())
}
