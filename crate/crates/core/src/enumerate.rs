//! Exhaustive enumeration of all semigroups of a small order.
//!
//! Tables are filled cell by cell in row-major order, values ascending, with
//! every triple whose four entries are known checked for associativity as
//! soon as a cell is set. Tables therefore come out in lexicographic order of
//! their flattened rows, which also makes `resume_from` well defined.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

/// Hard cap without the explicit long-running opt-in.
pub const DEFAULT_MAX_ORDER: usize = 4;
/// Absolute cap; order 5 needs `allow_order_five`.
pub const LONG_RUNNING_MAX_ORDER: usize = 5;

const UNSET: u8 = u8::MAX;

#[derive(Debug, Clone, Default)]
pub struct EnumerateOptions {
    pub commutative_only: bool,
    /// Emit only the lexicographically least table of each isomorphism class.
    pub dedup_iso: bool,
    pub allow_order_five: bool,
    /// Skip tables whose flattened form is lexicographically below this prefix.
    pub resume_from: Option<Vec<u8>>,
}

/// All associative tables of `order`, in lexicographic order.
pub fn enumerate_semigroups(
    order: usize,
    commutative_only: bool,
    dedup_iso: bool,
) -> Result<SemigroupEnumerator> {
    SemigroupEnumerator::new(
        order,
        EnumerateOptions {
            commutative_only,
            dedup_iso,
            ..Default::default()
        },
    )
}

/// Every semigroup of order `1..=max_order`, orders ascending.
pub fn enumerate_up_to(max_order: usize, commutative_only: bool) -> Result<Vec<FiniteSemigroup>> {
    let mut out = Vec::new();
    for order in 1..=max_order {
        out.extend(enumerate_semigroups(order, commutative_only, false)?);
    }
    Ok(out)
}

/// Streaming backtracking enumerator.
pub struct SemigroupEnumerator {
    order: usize,
    options: EnumerateOptions,
    cells: Vec<u8>,
    started: bool,
    exhausted: bool,
    /// Relabellings used for isomorphism dedup.
    permutations: Vec<Vec<usize>>,
}

impl SemigroupEnumerator {
    pub fn new(order: usize, options: EnumerateOptions) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyOrder);
        }
        let cap = if options.allow_order_five {
            LONG_RUNNING_MAX_ORDER
        } else {
            DEFAULT_MAX_ORDER
        };
        if order > cap {
            return Err(Error::OrderTooLarge { order, max: cap });
        }
        if let Some(prefix) = &options.resume_from {
            if prefix.len() > order * order || prefix.iter().any(|&v| v as usize >= order) {
                return Err(Error::InvalidParameters(format!(
                    "resume prefix {prefix:?} does not fit an order-{order} table"
                )));
            }
        }
        let permutations = if options.dedup_iso {
            (0..order).permutations(order).collect()
        } else {
            Vec::new()
        };
        Ok(SemigroupEnumerator {
            order,
            options,
            cells: vec![UNSET; order * order],
            started: false,
            exhausted: false,
            permutations,
        })
    }

    /// Still on the resume prefix for every cell before `pos`.
    fn on_prefix(&self, pos: usize) -> Option<u8> {
        let prefix = self.options.resume_from.as_ref()?;
        if pos < prefix.len() && self.cells[..pos] == prefix[..pos] {
            Some(prefix[pos])
        } else {
            None
        }
    }

    fn next_candidate(&self, pos: usize) -> Option<u8> {
        let n = self.order;
        let current = self.cells[pos];
        let floor = self.on_prefix(pos);
        let (a, b) = (pos / n, pos % n);
        if self.options.commutative_only && b < a {
            let forced = self.cells[b * n + a];
            let allowed = floor.is_none_or(|f| forced >= f);
            return (current == UNSET && allowed).then_some(forced);
        }
        if current == UNSET {
            Some(floor.unwrap_or(0))
        } else if (current as usize) + 1 < n {
            Some(current + 1)
        } else {
            None
        }
    }

    /// Associativity over every triple whose entries are all known.
    fn consistent(&self) -> bool {
        let n = self.order;
        let t = &self.cells;
        for a in 0..n {
            for b in 0..n {
                let ab = t[a * n + b];
                if ab == UNSET {
                    continue;
                }
                for c in 0..n {
                    let bc = t[b * n + c];
                    if bc == UNSET {
                        continue;
                    }
                    let left = t[ab as usize * n + c];
                    let right = t[a * n + bc as usize];
                    if left != UNSET && right != UNSET && left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Advances `cells` to the next complete associative table.
    fn advance(&mut self) -> bool {
        let total = self.order * self.order;
        if self.exhausted {
            return false;
        }
        let mut pos = if self.started {
            total - 1
        } else {
            self.started = true;
            0
        };
        loop {
            match self.next_candidate(pos) {
                Some(v) => {
                    self.cells[pos] = v;
                    if self.consistent() {
                        if pos + 1 == total {
                            return true;
                        }
                        pos += 1;
                    }
                }
                None => {
                    self.cells[pos] = UNSET;
                    if pos == 0 {
                        self.exhausted = true;
                        return false;
                    }
                    pos -= 1;
                }
            }
        }
    }

    /// No relabelling yields a lexicographically smaller table.
    fn is_canonical(&self) -> bool {
        let n = self.order;
        let t = &self.cells;
        let mut image = vec![0u8; n * n];
        self.permutations.iter().all(|perm| {
            for a in 0..n {
                for b in 0..n {
                    image[perm[a] * n + perm[b]] = perm[t[a * n + b] as usize] as u8;
                }
            }
            image.as_slice() >= t.as_slice()
        })
    }
}

impl Iterator for SemigroupEnumerator {
    type Item = FiniteSemigroup;

    fn next(&mut self) -> Option<FiniteSemigroup> {
        while self.advance() {
            if self.options.dedup_iso && !self.is_canonical() {
                continue;
            }
            let s = FiniteSemigroup::from_flat(self.order, self.cells.clone())
                .expect("enumerated table is associative");
            return Some(s);
        }
        None
    }
}
