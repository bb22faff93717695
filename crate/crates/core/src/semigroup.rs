//! Finite semigroups given by validated Cayley tables, plus monogenic
//! (cyclic) subsemigroup arithmetic.
//!
//! Elements are dense indices `0..n`. Any names or labels belong to I/O
//! metadata, never to the table.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::elemset::ElemSet;
use crate::error::{Error, Result};

/// Largest supported order. Element sets are single 128-bit words.
pub const MAX_ORDER: usize = 128;

/// Index of an element relative to the [`FiniteSemigroup`] that owns it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementId(u8);

impl ElementId {
    pub fn new(index: usize) -> Self {
        debug_assert!(index < MAX_ORDER);
        ElementId(index as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite semigroup: an `n × n` Cayley table that is closed and associative.
///
/// Immutable after construction; every constructor validates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSemigroup {
    order: usize,
    /// Row-major: `table[a * order + b] = a * b`.
    table: Vec<u8>,
}

/// Index, period and power list of the monogenic subsemigroup `⟨x⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicData {
    pub index: usize,
    pub period: usize,
    /// `x, x², …, x^(index+period-1)`, pairwise distinct.
    pub powers: Vec<ElementId>,
}

impl CyclicData {
    /// Number of distinct powers, `index + period - 1`.
    pub fn order(&self) -> usize {
        self.index + self.period - 1
    }

    /// `x^k` for any `k ≥ 1`.
    pub fn power(&self, k: usize) -> ElementId {
        assert!(k >= 1, "powers start at 1");
        let top = self.order();
        let k = if k <= top {
            k
        } else {
            self.index + (k - self.index) % self.period
        };
        self.powers[k - 1]
    }

    pub fn elements(&self) -> ElemSet {
        self.powers.iter().copied().collect()
    }

    /// Exponent `ℓ ∈ [I, I+P-1]` with `ℓ ≡ 0 (mod P)`; `x^ℓ` is the idempotent.
    pub fn idempotent_exponent(&self) -> usize {
        let mut l = self.index;
        while !l.is_multiple_of(self.period) {
            l += 1;
        }
        l
    }

    /// The cyclic subgroup `{x^I, …, x^(I+P-1)}`.
    pub fn kernel(&self) -> ElemSet {
        self.powers[self.index - 1..].iter().copied().collect()
    }
}

impl FiniteSemigroup {
    /// Validates an `order × order` table.
    ///
    /// Fails with the first out-of-range cell (row-major) or the first
    /// non-associative triple `(a, b, c)` in lexicographic order.
    pub fn validate(order: usize, table: &[Vec<usize>]) -> Result<Self> {
        check_order(order)?;
        if table.len() != order {
            return Err(Error::Shape(format!(
                "expected {order} rows, found {}",
                table.len()
            )));
        }
        let mut flat = Vec::with_capacity(order * order);
        for (row, cells) in table.iter().enumerate() {
            if cells.len() != order {
                return Err(Error::Shape(format!(
                    "row {row} has {} entries, expected {order}",
                    cells.len()
                )));
            }
            for (col, &value) in cells.iter().enumerate() {
                if value >= order {
                    return Err(Error::NotClosed {
                        row,
                        col,
                        value,
                        order,
                    });
                }
                flat.push(value as u8);
            }
        }
        Self::from_flat(order, flat)
    }

    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        Self::validate(table.len(), &table)
    }

    /// Builds the table cell by cell from `f(a, b)` and validates it.
    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        check_order(order)?;
        let mut flat = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let value = f(a, b);
                if value >= order {
                    return Err(Error::NotClosed {
                        row: a,
                        col: b,
                        value,
                        order,
                    });
                }
                flat.push(value as u8);
            }
        }
        Self::from_flat(order, flat)
    }

    /// Validates a row-major flattened table whose entries are already in range.
    pub(crate) fn from_flat(order: usize, table: Vec<u8>) -> Result<Self> {
        debug_assert_eq!(table.len(), order * order);
        debug_assert!(table.iter().all(|&v| (v as usize) < order));
        if let Some((a, b, c)) = first_non_associative(order, &table) {
            return Err(Error::NotAssociative { a, b, c });
        }
        Ok(FiniteSemigroup { order, table })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + Clone {
        (0..self.order).map(ElementId::new)
    }

    pub fn all(&self) -> ElemSet {
        ElemSet::full(self.order)
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(self.table[a.index() * self.order + b.index()])
    }

    /// Row-major flattened table.
    pub fn flat(&self) -> &[u8] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub fn element(&self, index: usize) -> Result<ElementId> {
        if index < self.order {
            Ok(ElementId::new(index))
        } else {
            Err(Error::ElementOutOfRange {
                element: index,
                order: self.order,
            })
        }
    }

    /// `A * x = { a*x : a ∈ A }`.
    pub fn right_translate(&self, set: ElemSet, x: ElementId) -> ElemSet {
        set.iter().map(|a| self.mul(a, x)).collect()
    }

    /// `x * A = { x*a : a ∈ A }`.
    pub fn left_translate(&self, x: ElementId, set: ElemSet) -> ElemSet {
        set.iter().map(|a| self.mul(x, a)).collect()
    }

    pub fn is_idempotent(&self, x: ElementId) -> bool {
        self.mul(x, x) == x
    }

    /// `E(S)`. Nonempty for every finite semigroup.
    pub fn idempotents(&self) -> ElemSet {
        let e: ElemSet = self.elements().filter(|&x| self.is_idempotent(x)).collect();
        debug_assert!(!e.is_empty());
        e
    }

    /// `S ∖ E(S)`.
    pub fn non_idempotents(&self) -> ElemSet {
        self.all() - self.idempotents()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (a + 1..n).all(|b| self.table[a * n + b] == self.table[b * n + a]))
    }

    /// Commutativity of the table restricted to `subset`.
    pub fn commutes_on(&self, subset: ElemSet) -> bool {
        subset
            .iter()
            .all(|a| subset.iter().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The unique `z` with `z*x = x*z = z` for all `x`, if any.
    pub fn zero_element(&self) -> Option<ElementId> {
        self.elements().find(|&z| {
            self.elements()
                .all(|x| self.mul(z, x) == z && self.mul(x, z) == z)
        })
    }

    /// Two-sided identity, if any.
    pub fn identity_element(&self) -> Option<ElementId> {
        self.elements().find(|&e| {
            self.elements()
                .all(|x| self.mul(e, x) == x && self.mul(x, e) == x)
        })
    }

    /// Least subsemigroup containing `generators`.
    pub fn generated_subsemigroup(&self, generators: ElemSet) -> Result<ElemSet> {
        if generators.is_empty() {
            return Err(Error::EmptyGeneratorSet);
        }
        let mut closure = generators;
        let mut frontier = generators;
        while !frontier.is_empty() {
            let mut fresh = ElemSet::EMPTY;
            for a in frontier {
                for b in closure {
                    fresh.insert(self.mul(a, b));
                    fresh.insert(self.mul(b, a));
                }
            }
            frontier = fresh - closure;
            closure |= frontier;
        }
        Ok(closure)
    }

    /// Whether `subset` is closed under the table.
    pub fn is_closed(&self, subset: ElemSet) -> bool {
        subset
            .iter()
            .all(|a| subset.iter().all(|b| subset.contains(self.mul(a, b))))
    }

    /// `x^k` for `k ≥ 1`, by repeated multiplication.
    pub fn power(&self, x: ElementId, k: usize) -> ElementId {
        assert!(k >= 1, "powers start at 1");
        let mut acc = x;
        for _ in 1..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// Index and period of `x`, found at the first repeated power.
    pub fn cyclic_data(&self, x: ElementId) -> CyclicData {
        // position[y] = k such that y = x^k, 0 when unseen
        let mut position = vec![0usize; self.order];
        let mut powers = Vec::new();
        let mut current = x;
        let mut k = 1;
        loop {
            let seen = position[current.index()];
            if seen != 0 {
                return CyclicData {
                    index: seen,
                    period: k - seen,
                    powers,
                };
            }
            position[current.index()] = k;
            powers.push(current);
            current = self.mul(current, x);
            k += 1;
            debug_assert!(k <= self.order + 1);
        }
    }

    /// The unique idempotent of `⟨x⟩`.
    pub fn unique_cycle_idempotent(&self, x: ElementId) -> ElementId {
        let data = self.cyclic_data(x);
        let e = data.power(data.idempotent_exponent());
        debug_assert!(self.is_idempotent(e));
        debug_assert_eq!(
            data.powers
                .iter()
                .filter(|&&y| self.is_idempotent(y))
                .count(),
            1
        );
        e
    }

    /// The monogenic semigroup of index `index` and period `period`.
    ///
    /// Element `k-1` is `x^k` for `k ∈ [1, index+period-1]`; element 0 is the
    /// generator.
    pub fn monogenic(index: usize, period: usize) -> Result<Self> {
        if index < 1 || period < 1 {
            return Err(Error::InvalidParameters(format!(
                "monogenic semigroup needs index >= 1 and period >= 1, got ({index}, {period})"
            )));
        }
        let top = index + period - 1;
        if top > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order: top,
                max: MAX_ORDER,
            });
        }
        Self::from_fn(top, |a, b| {
            let sum = (a + 1) + (b + 1);
            let k = if sum <= top {
                sum
            } else {
                index + (sum - index) % period
            };
            k - 1
        })
    }

    /// The subsemigroup on `subset`, relabelled densely in ascending order.
    /// Returns the new semigroup and the map from new indices to old ones.
    pub fn restrict(&self, subset: ElemSet) -> Result<(FiniteSemigroup, Vec<ElementId>)> {
        if subset.is_empty() {
            return Err(Error::EmptyOrder);
        }
        if !self.is_closed(subset) {
            return Err(Error::NotSubsemigroup);
        }
        let members = subset.to_vec();
        let mut new_index = vec![0u8; self.order];
        for (i, x) in members.iter().enumerate() {
            new_index[x.index()] = i as u8;
        }
        let m = members.len();
        let mut flat = Vec::with_capacity(m * m);
        for &a in &members {
            for &b in &members {
                flat.push(new_index[self.mul(a, b).index()]);
            }
        }
        Ok((
            FiniteSemigroup {
                order: m,
                table: flat,
            },
            members,
        ))
    }

    /// Relabels elements: old element `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<FiniteSemigroup> {
        let n = self.order;
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::InvalidParameters(
                "relabelling is not a permutation of the elements".into(),
            ));
        }
        let mut flat = vec![0u8; n * n];
        for a in 0..n {
            for b in 0..n {
                flat[perm[a] * n + perm[b]] = perm[self.table[a * n + b] as usize] as u8;
            }
        }
        Ok(FiniteSemigroup {
            order: n,
            table: flat,
        })
    }

    /// `S¹`: a fresh identity appended as the last element.
    pub fn adjoin_identity(&self) -> Result<FiniteSemigroup> {
        let n = self.order;
        Self::from_fn(n + 1, |a, b| match (a == n, b == n) {
            (true, _) => b,
            (_, true) => a,
            _ => self.table[a * n + b] as usize,
        })
    }

    /// `S⁰`: a fresh zero appended as the last element.
    pub fn adjoin_zero(&self) -> Result<FiniteSemigroup> {
        let n = self.order;
        Self::from_fn(n + 1, |a, b| {
            if a == n || b == n {
                n
            } else {
                self.table[a * n + b] as usize
            }
        })
    }

    /// Compact one-line rendering: rows joined by `/`, cells by `,`.
    pub fn compact(&self) -> String {
        self.table
            .chunks(self.order)
            .map(|r| {
                r.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join("/")
    }

    /// Parses the Cayley table text format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (first_line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing order line".into(),
        })?;
        let order: usize = header.parse().map_err(|_| Error::Parse {
            line: first_line,
            message: format!("expected the order, found {header:?}"),
        })?;
        check_order(order)?;
        let mut rows = Vec::with_capacity(order);
        for _ in 0..order {
            let (line, text) = lines.next().ok_or(Error::Parse {
                line: first_line,
                message: format!("expected {order} table rows, found {}", rows.len()),
            })?;
            let row = text
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>().map_err(|_| Error::Parse {
                        line,
                        message: format!("{tok:?} is not an element index"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            if row.len() != order {
                return Err(Error::Parse {
                    line,
                    message: format!("row has {} entries, expected {order}", row.len()),
                });
            }
            rows.push(row);
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::Parse {
                line,
                message: "unexpected content after the table".into(),
            });
        }
        Self::validate(order, &rows)
    }
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        Err(Error::EmptyOrder)
    } else if order > MAX_ORDER {
        Err(Error::OrderTooLarge {
            order,
            max: MAX_ORDER,
        })
    } else {
        Ok(())
    }
}

fn first_non_associative(n: usize, t: &[u8]) -> Option<(usize, usize, usize)> {
    for a in 0..n {
        for b in 0..n {
            let ab = t[a * n + b] as usize;
            for c in 0..n {
                let bc = t[b * n + c] as usize;
                if t[ab * n + c] != t[a * n + bc] {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// Canonical text form: the order, then one line per row.
impl fmt::Display for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.order)?;
        for row in self.table.chunks(self.order) {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteSemigroup({})", self.compact())
    }
}

impl FromStr for FiniteSemigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl Serialize for FiniteSemigroup {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}
