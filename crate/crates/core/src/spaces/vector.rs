//! Finitely supported vectors over the ℕ×ℕ grid of a countable direct sum.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use crate::scalar::Scalar;

/// A grid position: `row` is the summand index, `col` the coordinate index
/// inside that summand; both are 1-based. Ordering is row-major.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Pos {
    pub row: u32,
    pub col: u32,
}

impl Pos {
    pub fn new(row: u32, col: u32) -> Self {
        assert!(row >= 1 && col >= 1, "grid positions are 1-based");
        Self { row, col }
    }
}

impl std::fmt::Display for Pos {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Finite-support vector over the grid; zero coefficients are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct GridVector<S: Scalar> {
    entries: BTreeMap<Pos, S>,
}

impl<S: Scalar> Default for GridVector<S> {
    fn default() -> Self {
        Self {
            entries: BTreeMap::new(),
        }
    }
}

impl<S: Scalar> GridVector<S> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector `e_{row,col}`.
    pub fn basis(pos: Pos) -> Self {
        Self::from_entries([(pos, S::one())])
    }

    pub fn from_entries<I: IntoIterator<Item = (Pos, S)>>(iter: I) -> Self {
        let mut v = Self::zero();
        for (p, c) in iter {
            v.accumulate(p, c);
        }
        v
    }

    fn accumulate(&mut self, pos: Pos, c: S) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.entries.entry(pos) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, pos: Pos) -> Option<&S> {
        self.entries.get(&pos)
    }

    /// Iterates entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (&Pos, &S)> {
        self.entries.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Pos> {
        self.entries.keys()
    }

    /// The set of summand rows carrying support.
    pub fn rows(&self) -> BTreeSet<u32> {
        self.entries.keys().map(|p| p.row).collect()
    }

    /// `Some(row)` when the support sits in exactly one summand row;
    /// `Some(1)` for the zero vector (trivially embedded anywhere).
    pub fn single_row(&self) -> Option<u32> {
        let rows = self.rows();
        match rows.len() {
            0 => Some(1),
            1 => rows.first().copied(),
            _ => None,
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &rhs.entries {
            out.accumulate(*p, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &rhs.entries {
            out.accumulate(*p, c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self::from_entries(self.entries.iter().map(|(p, c)| (*p, c.neg())))
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_entries(self.entries.iter().map(|(p, v)| (*p, v.mul(c))))
    }

    /// Largest coefficient modulus (0 for the zero vector).
    pub fn max_coeff_modulus(&self) -> f64 {
        self.entries
            .values()
            .map(|c| c.abs_f64())
            .fold(0.0, f64::max)
    }

    /// Deterministic line dump: `row col re im` per entry, row-major.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (p, c) in &self.entries {
            let (re, im) = c.text_parts();
            s.push_str(&format!("{} {} {} {}\n", p.row, p.col, re, im));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn e(row: u32, col: u32) -> GridVector<Complex64> {
        GridVector::basis(Pos::new(row, col))
    }

    #[test]
    fn zero_coefficients_are_pruned() {
        let v = e(1, 2).sub(&e(1, 2));
        assert!(v.is_zero());
        assert_eq!(v.support_len(), 0);
        assert_eq!(v.single_row(), Some(1));
    }

    #[test]
    fn row_detection() {
        let v = e(1, 1).add(&e(1, 5));
        assert_eq!(v.single_row(), Some(1));
        let w = v.add(&e(3, 1));
        assert_eq!(w.single_row(), None);
        assert_eq!(w.rows().len(), 2);
    }

    #[test]
    fn text_dump_is_row_major() {
        let v = e(2, 1).add(&e(1, 3)).scale(&Complex64::new(2.0, 0.0));
        assert_eq!(v.to_text(), "1 3 2 0\n2 1 2 0\n");
    }
}
