use crate::act::{Act, Side};
use crate::error::{Error, Result};
use crate::map::ActMap;
use crate::uf::UnionFind;

/// `A ⊗_S X` for a right act `A` and a left act `X`, as a partition of
/// `A × X` (pair `(a, x)` at index `a * |X| + x`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorResult {
    pub right: Act,
    pub left: Act,
    class_of: Vec<usize>,
    num_classes: usize,
}

impl TensorResult {
    /// The class of `a ⊗ x`; classes are numbered by their least pair.
    pub fn class(&self, a: usize, x: usize) -> usize {
        self.class_of[a * self.left.size() + x]
    }

    pub fn class_table(&self) -> &[usize] {
        &self.class_of
    }

    pub fn num_classes(&self) -> usize {
        self.num_classes
    }

    pub fn classes(&self) -> Vec<Vec<(usize, usize)>> {
        let mut out = vec![Vec::new(); self.num_classes];
        let n = self.left.size();
        for (i, &c) in self.class_of.iter().enumerate() {
            out[c].push((i / n, i % n));
        }
        out
    }
}

pub(crate) fn check_sides(a: &Act, x: &Act) -> Result<()> {
    if a.monoid() != x.monoid() {
        return Err(Error::MonoidMismatch);
    }
    if a.side() != Side::Right {
        return Err(Error::SideMismatch {
            expected: Side::Right.as_str(),
            found: a.side().as_str(),
        });
    }
    if x.side() != Side::Left {
        return Err(Error::SideMismatch {
            expected: Side::Left.as_str(),
            found: x.side().as_str(),
        });
    }
    Ok(())
}

/// Union-find closure of `(a·s, x) ~ (a, s·x)` over `A × X`.
pub fn tensor(a: &Act, x: &Act) -> Result<TensorResult> {
    check_sides(a, x)?;
    let n = x.size();
    let mut uf = UnionFind::new(a.size() * n);
    for p in a.elements() {
        for q in x.elements() {
            for s in a.monoid().elements() {
                uf.union(a.act(p, s) * n + q, p * n + x.act(q, s));
            }
        }
    }
    let reps = uf.representatives();
    let mut dense = vec![usize::MAX; reps.len()];
    let mut count = 0;
    let class_of = reps
        .iter()
        .map(|&r| {
            if dense[r] == usize::MAX {
                dense[r] = count;
                count += 1;
            }
            dense[r]
        })
        .collect();
    Ok(TensorResult {
        right: a.clone(),
        left: x.clone(),
        class_of,
        num_classes: count,
    })
}

/// `A ⊗ X → A ⊗ Y` induced by a left map `g: X → Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedMap {
    pub domain: TensorResult,
    pub codomain: TensorResult,
    pub values: Vec<usize>,
}

impl InducedMap {
    /// Build from precomputed tensor products of `A` with `g`'s source and target.
    pub fn between(domain: &TensorResult, codomain: &TensorResult, g: &ActMap) -> Result<Self> {
        if domain.right != codomain.right || &domain.left != g.source() || &codomain.left != g.target() {
            return Err(Error::Incompatible("induced map: tensor factors do not match the map".into()));
        }
        let mut values = vec![usize::MAX; domain.num_classes];
        for a in domain.right.elements() {
            for x in domain.left.elements() {
                let c = domain.class(a, x);
                let image = codomain.class(a, g.apply(x));
                debug_assert!(values[c] == usize::MAX || values[c] == image, "induced map well defined");
                values[c] = image;
            }
        }
        Ok(InducedMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            values,
        })
    }

    pub fn is_injective(&self) -> bool {
        self.collision().is_none()
    }

    /// The least pair of domain classes with the same image.
    pub fn collision(&self) -> Option<(usize, usize)> {
        let mut seen = vec![usize::MAX; self.codomain.num_classes];
        for (c, &v) in self.values.iter().enumerate() {
            if seen[v] != usize::MAX {
                return Some((seen[v], c));
            }
            seen[v] = c;
        }
        None
    }
}

/// The map `[a ⊗ x] ↦ [a ⊗ g(x)]`.
pub fn induced_map(t: &TensorResult, g: &ActMap) -> Result<InducedMap> {
    let codomain = tensor(&t.right, g.target())?;
    InducedMap::between(t, &codomain, g)
}
