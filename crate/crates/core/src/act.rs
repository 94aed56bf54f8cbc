use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{structural, Error, Result};
use crate::monoid::FiniteMonoid;
use crate::uf::UnionFind;
use crate::validate::{ValidationReport, Violation};

/// Which side the monoid acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Right,
    Left,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Right => "right",
            Side::Left => "left",
        }
    }
}

/// Whether acts with an empty carrier are admitted.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EmptinessPolicy {
    #[default]
    Reject,
    Permit,
}

/// A finite act over a finite monoid.
///
/// The carrier is `0..size`. Both sides share one table layout:
/// `act(x, s)` is `x·s` for a right act and `s·x` for a left act, so every
/// side-agnostic algorithm (maps, congruences, fixed points) reads the same
/// table. Only associativity differs between the sides.
#[derive(Clone)]
pub struct Act {
    inner: Arc<ActData>,
}

#[derive(PartialEq, Eq, Hash)]
struct ActData {
    monoid: FiniteMonoid,
    side: Side,
    size: usize,
    table: Vec<usize>,
    centred: bool,
}

impl Act {
    /// Build from a flat `size × |S|` table (`table[x * |S| + s]`), checking
    /// dimensions and ranges only.
    pub fn from_parts(
        monoid: &FiniteMonoid,
        side: Side,
        size: usize,
        table: Vec<usize>,
        centred: bool,
    ) -> Result<Self> {
        let m = monoid.size();
        if table.len() != size * m {
            return Err(structural(
                "action",
                format!("table has {} entries, expected {}", table.len(), size * m),
            ));
        }
        if let Some(i) = table.iter().position(|&v| v >= size) {
            let (x, s) = (i / m, i % m);
            let path = match side {
                Side::Right => format!("action[{x}][{s}]"),
                Side::Left => format!("action[{s}][{x}]"),
            };
            return Err(structural(path, format!("index {} out of range 0..{size}", table[i])));
        }
        Ok(Act {
            inner: Arc::new(ActData {
                monoid: monoid.clone(),
                side,
                size,
                table,
                centred,
            }),
        })
    }

    /// A validated act from a flat table.
    pub fn new(monoid: &FiniteMonoid, side: Side, size: usize, table: Vec<usize>) -> Result<Self> {
        let act = Self::from_parts(monoid, side, size, table, false)?;
        act.validate().into_result()?;
        Ok(act)
    }

    /// A validated right act from rows `x ↦ [x·s for s in S]`.
    pub fn right(monoid: &FiniteMonoid, rows: Vec<Vec<usize>>) -> Result<Self> {
        let size = rows.len();
        for (x, row) in rows.iter().enumerate() {
            if row.len() != monoid.size() {
                return Err(structural(
                    format!("action[{x}]"),
                    format!("row has length {}, expected {}", row.len(), monoid.size()),
                ));
            }
        }
        Self::new(monoid, Side::Right, size, rows.concat())
    }

    /// A validated left act from rows `s ↦ [s·x for x in carrier]`.
    pub fn left(monoid: &FiniteMonoid, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != monoid.size() {
            return Err(structural(
                "action",
                format!("left action needs {} rows, found {}", monoid.size(), rows.len()),
            ));
        }
        let size = rows.first().map_or(0, Vec::len);
        for (s, row) in rows.iter().enumerate() {
            if row.len() != size {
                return Err(structural(
                    format!("action[{s}]"),
                    format!("row has length {}, expected {size}", row.len()),
                ));
            }
        }
        let m = monoid.size();
        let mut table = vec![0; size * m];
        for (s, row) in rows.iter().enumerate() {
            for (x, &v) in row.iter().enumerate() {
                table[x * m + s] = v;
            }
        }
        Self::new(monoid, Side::Left, size, table)
    }

    /// The monoid acting on itself by multiplication.
    pub fn regular(monoid: &FiniteMonoid, side: Side) -> Self {
        let n = monoid.size();
        let table = (0..n)
            .flat_map(|x| {
                (0..n).map(move |s| (x, s))
            })
            .map(|(x, s)| match side {
                Side::Right => monoid.mul(x, s),
                Side::Left => monoid.mul(s, x),
            })
            .collect();
        Self::from_parts(monoid, side, n, table, false).expect("regular act")
    }

    /// The one-element act.
    pub fn terminal(monoid: &FiniteMonoid, side: Side) -> Self {
        Self::from_parts(monoid, side, 1, vec![0; monoid.size()], false).expect("terminal act")
    }

    /// `n` fixed points.
    pub fn discrete(monoid: &FiniteMonoid, side: Side, n: usize) -> Self {
        let m = monoid.size();
        let table = (0..n).flat_map(|x| std::iter::repeat_n(x, m)).collect();
        Self::from_parts(monoid, side, n, table, false).expect("discrete act")
    }

    /// The empty act; only meaningful under [`EmptinessPolicy::Permit`].
    pub fn empty(monoid: &FiniteMonoid, side: Side) -> Self {
        Self::from_parts(monoid, side, 0, Vec::new(), false).expect("empty act")
    }

    /// Same act with the centred flag set or cleared.
    pub fn with_centred(&self, centred: bool) -> Self {
        Self::from_parts(self.monoid(), self.side(), self.size(), self.inner.table.clone(), centred)
            .expect("same table")
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.inner.monoid
    }

    pub fn side(&self) -> Side {
        self.inner.side
    }

    pub fn size(&self) -> usize {
        self.inner.size
    }

    pub fn is_empty(&self) -> bool {
        self.inner.size == 0
    }

    pub fn is_centred(&self) -> bool {
        self.inner.centred
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.inner.size
    }

    /// `x·s` for right acts, `s·x` for left acts.
    #[inline]
    pub fn act(&self, x: usize, s: usize) -> usize {
        self.inner.table[x * self.inner.monoid.size() + s]
    }

    /// The flat table, `table[x * |S| + s]`.
    pub fn table(&self) -> &[usize] {
        &self.inner.table
    }

    /// Rows in the file layout: `size × |S|` for right acts, `|S| × size`
    /// for left acts.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        let m = self.monoid().size();
        match self.side() {
            Side::Right => self.inner.table.chunks(m.max(1)).map(<[usize]>::to_vec).collect(),
            Side::Left => (0..m)
                .map(|s| self.elements().map(|x| self.act(x, s)).collect())
                .collect(),
        }
    }

    /// Whether `other` is over the same monoid on the same side.
    pub fn compatible(&self, other: &Act) -> Result<()> {
        if self.monoid() != other.monoid() {
            return Err(Error::MonoidMismatch);
        }
        if self.side() != other.side() {
            return Err(Error::SideMismatch {
                expected: self.side().as_str(),
                found: other.side().as_str(),
            });
        }
        Ok(())
    }

    /// Every violated law under the default emptiness policy.
    pub fn validate(&self) -> ValidationReport {
        self.validate_with(EmptinessPolicy::Reject)
    }

    pub fn validate_with(&self, policy: EmptinessPolicy) -> ValidationReport {
        let mut report = ValidationReport::default();
        if self.is_empty() && policy == EmptinessPolicy::Reject {
            report.push(Violation::EmptyCarrier);
        }
        let monoid = self.monoid();
        let id = monoid.identity();
        for x in self.elements() {
            if self.act(x, id) != x {
                report.push(Violation::ActUnit { element: x });
            }
        }
        for x in self.elements() {
            for s in monoid.elements() {
                for t in monoid.elements() {
                    // right: x·(st) = (x·s)·t ; left: (st)·x = s·(t·x)
                    let ok = match self.side() {
                        Side::Right => self.act(x, monoid.mul(s, t)) == self.act(self.act(x, s), t),
                        Side::Left => self.act(x, monoid.mul(s, t)) == self.act(self.act(x, t), s),
                    };
                    if !ok {
                        report.push(Violation::ActAssociativity { element: x, s, t });
                    }
                }
            }
        }
        if self.is_centred() {
            let fixed = self.fixed_points();
            if fixed.len() != 1 {
                report.push(Violation::NotCentred { fixed_points: fixed });
            }
        }
        report
    }

    /// Elements moved by no monoid element.
    pub fn fixed_points(&self) -> Vec<usize> {
        self.elements()
            .filter(|&x| self.monoid().elements().all(|s| self.act(x, s) == x))
            .collect()
    }

    /// Connected components of the relation `x ~ x·s`, each sorted, ordered
    /// by least element. These are the indecomposable summands.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.size());
        for x in self.elements() {
            for s in self.monoid().elements() {
                uf.union(x, self.act(x, s));
            }
        }
        let reps = uf.representatives();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut index = vec![usize::MAX; self.size()];
        for x in self.elements() {
            let r = reps[x];
            if index[r] == usize::MAX {
                index[r] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[index[r]].push(x);
        }
        blocks
    }

    /// Whether `elements` is closed under the action.
    pub fn is_closed(&self, elements: &[usize]) -> bool {
        let mut member = vec![false; self.size()];
        for &x in elements {
            member[x] = true;
        }
        elements
            .iter()
            .all(|&x| self.monoid().elements().all(|s| member[self.act(x, s)]))
    }

    /// Smallest subact containing `seeds` (the orbit closure), sorted.
    pub fn orbit_closure(&self, seeds: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.size()];
        let mut stack: Vec<usize> = Vec::new();
        for &x in seeds {
            if !member[x] {
                member[x] = true;
                stack.push(x);
            }
        }
        while let Some(x) = stack.pop() {
            for s in self.monoid().elements() {
                let y = self.act(x, s);
                if !member[y] {
                    member[y] = true;
                    stack.push(y);
                }
            }
        }
        self.elements().filter(|&x| member[x]).collect()
    }

    /// All nonempty subacts, as sorted element lists.
    pub fn subacts(&self) -> Vec<Vec<usize>> {
        // Every nonempty closed subset, in lexicographic order.
        let n = self.size();
        assert!(n <= 20, "subact enumeration is exponential");
        let mut seen = std::collections::BTreeSet::new();
        for mask in 1u32..(1u32 << n) {
            let elems: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            if self.is_closed(&elems) {
                seen.insert(elems);
            }
        }
        seen.into_iter().collect()
    }
}

/// Serialized as `{side, size, action, centred}` with the action in rows
/// (`x·s` rows for right acts, `s·x` rows for left acts); the monoid is given
/// by context.
impl Serialize for Act {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Act", 4)?;
        st.serialize_field("action", &self.table_rows())?;
        st.serialize_field("centred", &self.is_centred())?;
        st.serialize_field("side", &self.side())?;
        st.serialize_field("size", &self.size())?;
        st.end()
    }
}

impl PartialEq for Act {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for Act {}

impl std::hash::Hash for Act {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.inner.hash(state);
    }
}

impl fmt::Debug for Act {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Act")
            .field("side", &self.side())
            .field("size", &self.size())
            .field("action", &self.table_rows())
            .field("centred", &self.is_centred())
            .finish()
    }
}
