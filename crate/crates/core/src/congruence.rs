use crate::act::Act;
use crate::error::{structural, Result};
use crate::uf::UnionFind;
use crate::validate::{ValidationReport, Violation};

/// An action-compatible equivalence on the carrier of an act, stored as the
/// least element of each element's block.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Congruence {
    act: Act,
    rep: Vec<usize>,
}

impl Congruence {
    /// From a representative table; checks shape only.
    pub fn from_parts(act: &Act, rep: Vec<usize>) -> Result<Self> {
        if rep.len() != act.size() {
            return Err(structural(
                "blocks",
                format!("{} representatives for {} elements", rep.len(), act.size()),
            ));
        }
        if let Some(i) = rep.iter().position(|&r| r >= act.size()) {
            return Err(structural(format!("blocks[{i}]"), "representative out of range"));
        }
        Ok(Congruence {
            act: act.clone(),
            rep,
        })
    }

    /// From any partition given as blocks; representatives become block minima.
    pub fn from_blocks(act: &Act, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut rep = vec![usize::MAX; act.size()];
        for (b, block) in blocks.iter().enumerate() {
            let Some(&min) = block.iter().min() else { continue };
            for &x in block {
                if x >= act.size() {
                    return Err(structural(format!("blocks[{b}]"), "element out of range"));
                }
                if rep[x] != usize::MAX {
                    return Err(structural(format!("blocks[{b}]"), format!("element {x} in two blocks")));
                }
                rep[x] = min;
            }
        }
        if let Some(x) = rep.iter().position(|&r| r == usize::MAX) {
            return Err(structural("blocks", format!("element {x} is in no block")));
        }
        Self::from_parts(act, rep)
    }

    pub fn discrete(act: &Act) -> Self {
        Congruence {
            act: act.clone(),
            rep: act.elements().collect(),
        }
    }

    pub fn full(act: &Act) -> Self {
        Congruence {
            act: act.clone(),
            rep: vec![0; act.size()],
        }
    }

    /// The least congruence containing `pairs`.
    ///
    /// Union-find with a worklist: merging two blocks with representatives
    /// `r1, r2` enqueues `(r1·s, r2·s)` for every `s` until nothing changes.
    pub fn generated_by(act: &Act, pairs: &[(usize, usize)]) -> Congruence {
        let mut uf = UnionFind::new(act.size());
        let mut work: Vec<(usize, usize)> = pairs.to_vec();
        while let Some((a, b)) = work.pop() {
            if let Some((ra, rb)) = uf.union(a, b) {
                for s in act.monoid().elements() {
                    work.push((act.act(ra, s), act.act(rb, s)));
                }
            }
        }
        Congruence {
            act: act.clone(),
            rep: uf.representatives(),
        }
    }

    pub fn act(&self) -> &Act {
        &self.act
    }

    pub fn representative(&self, x: usize) -> usize {
        self.rep[x]
    }

    pub fn representatives(&self) -> &[usize] {
        &self.rep
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.rep[a] == self.rep[b]
    }

    /// Blocks ordered by representative, each sorted.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut index = vec![usize::MAX; self.act.size()];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for x in self.act.elements() {
            let r = self.rep[x];
            if index[r] == usize::MAX {
                index[r] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[index[r]].push(x);
        }
        blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.act.elements().filter(|&x| self.rep[x] == x).count()
    }

    /// Dense block index of each element, numbered in representative order.
    pub fn block_index(&self) -> Vec<usize> {
        let mut dense = vec![usize::MAX; self.act.size()];
        let mut next = 0;
        for x in self.act.elements() {
            if self.rep[x] == x {
                dense[x] = next;
                next += 1;
            }
        }
        self.rep.iter().map(|&r| dense[r]).collect()
    }

    /// Representation and compatibility violations.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for x in self.act.elements() {
            let r = self.rep[x];
            if self.rep[r] != r || r > x {
                report.push(Violation::Representative { element: x });
            }
        }
        if !report.is_valid() {
            return report;
        }
        for x in self.act.elements() {
            let r = self.rep[x];
            if r == x {
                continue;
            }
            for s in self.act.monoid().elements() {
                if !self.related(self.act.act(r, s), self.act.act(x, s)) {
                    report.push(Violation::Compatibility { a: r, b: x, s });
                }
            }
        }
        report
    }

    /// Whether every pair related here is related in `other`.
    pub fn is_finer_than(&self, other: &Congruence) -> bool {
        self.act.elements().all(|x| other.related(x, self.rep[x]))
    }
}
