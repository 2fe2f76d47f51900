//! The snake shift: a weighted shift on a countable direct sum, conjugate
//! to a backward shift along an enumeration path of the ℕ×ℕ grid that ends
//! in a sink at (1,1).
//!
//! The enumeration doubles as the bijection defining the shift: with
//! `q(0) = (1,1)` and `f(q(t)) := q(t-1)`, the operator `T e_{i,j} = λ·e_{f(i,j)}`
//! (and `T e_{1,1} = 0`) moves coefficients one step down the path, while
//! the right inverse `S e_{i,j} = λ⁻¹·e_{f⁻¹(i,j)}` moves them up.
//!
//! [`build_snake_enumeration`] lays the path so that a given finite list of
//! target vectors can each be reproduced exactly by applying a power of `T`
//! to a block supported on fresh, consecutive row-1 columns, while every
//! transport that the containment conditions later inspect provably lands
//! on row-1 cells or is annihilated by the sink.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::scalar::{scalar_powu, Scalar};
use crate::spaces::{GridVector, Pos, SequenceNorm};

use super::OperatorsError;

/// Polynomial growth bound `coeff·k^power` on launchpad end-columns.
#[derive(Clone, Copy, Debug, serde::Serialize)]
pub struct GrowthBudget {
    pub coeff: u64,
    pub power: u32,
}

impl GrowthBudget {
    pub fn eval(&self, k: u64) -> u64 {
        self.coeff * k.pow(self.power)
    }
}

/// Shift weight and sequence-space kind, with the optional launchpad
/// growth budget (mandatory `3k²` for the rapidly-decreasing space).
#[derive(Clone, Debug)]
pub struct ShiftParams<S: Scalar> {
    lambda: S,
    pub space_kind: SequenceNorm,
    pub growth_budget: Option<GrowthBudget>,
}

impl<S: Scalar> ShiftParams<S> {
    /// Validates `λ > 1` (real, strict). The rapidly-decreasing kind gets
    /// the quadratic launchpad budget by default.
    pub fn new(lambda: S, space_kind: SequenceNorm) -> Result<Self, OperatorsError> {
        if !lambda.is_real_gt_one() {
            return Err(OperatorsError::InvalidLambda {
                detail: format!("{lambda:?}"),
            });
        }
        let growth_budget = match space_kind {
            SequenceNorm::S { .. } => Some(GrowthBudget { coeff: 3, power: 2 }),
            _ => None,
        };
        Ok(Self {
            lambda,
            space_kind,
            growth_budget,
        })
    }

    pub fn lambda(&self) -> &S {
        &self.lambda
    }

    /// `λ^n`.
    pub fn lambda_pow(&self, n: u64) -> S {
        scalar_powu(&self.lambda, n)
    }

    /// `λ^{-n}`.
    pub fn lambda_pow_neg(&self, n: u64) -> S {
        scalar_powu(&self.lambda.recip(), n)
    }
}

/// Per-target schedule: the launchpad columns `[m, n]`, the shift power
/// `l`, and the path-index window whose cells the launchpad maps onto.
#[derive(Clone, Copy, Debug, serde::Serialize)]
pub struct TargetSchedule {
    pub m: u32,
    pub n: u32,
    pub l: u64,
    pub window_start: usize,
    pub window_len: usize,
}

/// How unvisited cells are appended past the built prefix.
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum ExtendRule {
    /// Next free row-1 column; the default plain backward-shift layout.
    RowOne,
    /// Lowest unvisited position in a diagonal sweep, which visits every
    /// grid cell in the limit.
    DiagonalSweep,
}

/// A finite prefix of a grid enumeration `q: ℕ → ℕ×ℕ` with `q(0) = (1,1)`,
/// its inverse, and the per-target schedules laid by the builder.
#[derive(Clone, Debug)]
pub struct SnakeEnumeration {
    path: Vec<Pos>,
    inverse: HashMap<Pos, usize>,
    schedules: Vec<TargetSchedule>,
    extend_rule: ExtendRule,
    row1_cursor: u32,
    diag_cursor: (u32, u32),
}

impl SnakeEnumeration {
    fn empty(extend_rule: ExtendRule) -> Self {
        let mut e = Self {
            path: Vec::new(),
            inverse: HashMap::new(),
            schedules: Vec::new(),
            extend_rule,
            row1_cursor: 1,
            diag_cursor: (2, 1),
        };
        e.push_cell(Pos::new(1, 1));
        e
    }

    /// The plain row-1 prefix `q(t) = (1, t+1)` of the given length.
    pub fn row_one(len: usize) -> Self {
        let mut e = Self::empty(ExtendRule::RowOne);
        e.extend_to(len.max(1));
        e
    }

    fn push_cell(&mut self, pos: Pos) {
        debug_assert!(!self.inverse.contains_key(&pos), "cell laid twice: {pos}");
        self.inverse.insert(pos, self.path.len());
        self.path.push(pos);
    }

    fn is_visited(&self, pos: Pos) -> bool {
        self.inverse.contains_key(&pos)
    }

    fn next_row1(&mut self) -> Pos {
        loop {
            let cand = Pos::new(1, self.row1_cursor);
            self.row1_cursor += 1;
            if !self.is_visited(cand) {
                return cand;
            }
        }
    }

    fn next_diagonal(&mut self, skip: &BTreeSet<Pos>) -> Pos {
        loop {
            let (d, row) = self.diag_cursor;
            let cand = Pos::new(row, d - row);
            self.diag_cursor = if row + 1 < d { (d, row + 1) } else { (d + 1, 1) };
            if !self.is_visited(cand) && !skip.contains(&cand) {
                return cand;
            }
        }
    }

    /// Grows the prefix to `len` cells following the extension rule.
    pub fn extend_to(&mut self, len: usize) {
        while self.path.len() < len {
            let cell = match self.extend_rule {
                ExtendRule::RowOne => self.next_row1(),
                ExtendRule::DiagonalSweep => self.next_diagonal(&BTreeSet::new()),
            };
            self.push_cell(cell);
        }
    }

    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path.is_empty()
    }

    pub fn position(&self, t: usize) -> Option<Pos> {
        self.path.get(t).copied()
    }

    pub fn index_of(&self, pos: Pos) -> Option<usize> {
        self.inverse.get(&pos).copied()
    }

    pub fn schedules(&self) -> &[TargetSchedule] {
        &self.schedules
    }

    /// Schedule of target `k` (1-based); `k = 0` is the empty convention
    /// schedule with `l = 0`.
    pub fn schedule(&self, k: usize) -> Result<TargetSchedule, OperatorsError> {
        if k == 0 {
            return Ok(TargetSchedule {
                m: 0,
                n: 0,
                l: 0,
                window_start: 0,
                window_len: 0,
            });
        }
        self.schedules
            .get(k - 1)
            .copied()
            .ok_or(OperatorsError::ScheduleMissing { k })
    }

    /// Shift powers `l_k` as the exponent schedule `k ↦ n_k`.
    pub fn shift_powers(&self) -> Vec<u64> {
        self.schedules.iter().map(|s| s.l).collect()
    }

    /// Checks that the prefix is a bijection onto its image: positions are
    /// pairwise distinct and the inverse matches the path both ways.
    pub fn prefix_is_bijective(&self) -> bool {
        self.inverse.len() == self.path.len()
            && self
                .path
                .iter()
                .enumerate()
                .all(|(t, p)| self.inverse.get(p) == Some(&t))
    }

    /// Deterministic text dump: `t i j` triples, then the schedules table.
    pub fn dump(&self) -> String {
        let mut out = String::from("# path\n");
        for (t, p) in self.path.iter().enumerate() {
            writeln!(out, "{} {} {}", t, p.row, p.col).unwrap();
        }
        out.push_str("# schedules\n");
        for (k, s) in self.schedules.iter().enumerate() {
            writeln!(out, "{} {} {} {}", k + 1, s.m, s.n, s.l).unwrap();
        }
        out
    }
}

/// Builder knobs: where run/apron filler columns start (kept far above the
/// launchpad range so the quadratic budget stays reachable), and how many
/// diagonal-sweep cells to interleave per target.
#[derive(Clone, Copy, Debug)]
pub struct BuilderOptions {
    pub run_column_base: u32,
    pub fillers_per_stage: usize,
}

impl Default for BuilderOptions {
    fn default() -> Self {
        Self {
            run_column_base: 1_000_000,
            fillers_per_stage: 1,
        }
    }
}

/// Lays an enumeration prefix and schedules for the given targets.
///
/// For each target `x_k` the builder guarantees:
/// * the launchpad cells `(1, m_k) … (1, n_k)` occupy consecutive path
///   indices `t_k … t_k + (n_k - m_k)`;
/// * the index window `t_k - l_k … t_k - l_k + (n_k - m_k)` covers the
///   support of `x_k` (cells off the support take zero block coefficients),
///   so `T^{l_k}` applied to `λ^{-l_k}·Σ α_j e_{1,j}` reproduces `x_k`
///   exactly;
/// * `l_k > e + 2·l_j` for every earlier window end `e` and shift power
///   `l_j`, so `T^{l_k} S^{l_j} x_i = 0` exactly for all earlier `i, j`
///   (the sink annihilates everything);
/// * every surviving transport `T^{l_j} S^{l_k} x_i` with `i, j < k` lands
///   inside the row-1 run/launchpad/apron zone of stage `k`;
/// * under a growth budget, `n_k` stays within it (else a scheduling
///   failure naming `k`).
pub fn build_snake_enumeration<S: Scalar>(
    targets: &[GridVector<S>],
    params: &ShiftParams<S>,
    options: &BuilderOptions,
) -> Result<SnakeEnumeration, OperatorsError> {
    let mut e = SnakeEnumeration::empty(ExtendRule::DiagonalSweep);

    let future_support: BTreeSet<Pos> = targets
        .iter()
        .flat_map(|x| x.support().copied())
        .collect();

    let mut l_prev: u64 = 0;
    let mut window_end_max: usize = 0;
    let mut lp_search_start: u32 = 1;
    let mut run_col: u32 = options.run_column_base;
    let mut next_run_cell = |e: &mut SnakeEnumeration| -> Pos {
        loop {
            let cand = Pos::new(1, run_col);
            run_col += 1;
            if !e.is_visited(cand) {
                return cand;
            }
        }
    };

    for (idx, target) in targets.iter().enumerate() {
        let k = idx + 1;
        if target.is_zero() {
            return Err(OperatorsError::ZeroTarget { k });
        }
        if target.max_coeff_modulus() > k as f64 + 1e-9 {
            return Err(OperatorsError::CoefficientBound {
                k,
                max_modulus: target.max_coeff_modulus(),
            });
        }

        // Interleaved diagonal fillers keep the limit enumeration onto all
        // of ℕ×ℕ; they must not consume future support cells.
        for _ in 0..options.fillers_per_stage {
            let cell = e.next_diagonal(&future_support);
            e.push_cell(cell);
        }

        // Lay the unvisited support cells at the frontier, row-major.
        for pos in target.support() {
            if !e.is_visited(*pos) {
                e.push_cell(*pos);
            }
        }
        let indices: Vec<usize> = target
            .support()
            .map(|p| e.index_of(*p).expect("support cell laid"))
            .collect();
        let sigma = *indices.iter().min().expect("non-empty support");
        let window_end = *indices.iter().max().expect("non-empty support");
        let window_len = window_end - sigma + 1;

        // Shift power: large enough that (a) all transports of earlier
        // targets land at or above the run start `z`, and (b) the sink
        // annihilates every T^{l_k} S^{l_j} x_i with i, j < k.
        let z = e.len() as u64;
        let l_k = (z + l_prev + 1).max(window_end_max as u64 + 2 * l_prev + 1);
        let t_k = sigma as u64 + l_k;

        // Run cells up to the launchpad start.
        while (e.len() as u64) < t_k {
            let cell = next_run_cell(&mut e);
            e.push_cell(cell);
        }

        // Launchpad: the lowest fresh consecutive column block after the
        // previous launchpad.
        let width = window_len as u32;
        let mut m = lp_search_start;
        let m = loop {
            if m + width >= options.run_column_base {
                return Err(OperatorsError::ColumnBudget {
                    k,
                    base: options.run_column_base,
                });
            }
            match (0..width).find(|r| e.is_visited(Pos::new(1, m + r))) {
                None => break m,
                Some(r) => m += r + 1,
            }
        };
        let n = m + width - 1;
        if let Some(budget) = params.growth_budget {
            let bound = budget.eval(k as u64);
            if u64::from(n) > bound {
                return Err(OperatorsError::SchedulingFailure {
                    k,
                    n_k: u64::from(n),
                    bound,
                });
            }
        }
        for r in 0..width {
            e.push_cell(Pos::new(1, m + r));
        }
        lp_search_start = n + 1;

        // Apron: row-1 cells past the launchpad so transports of earlier,
        // deeper windows still land in this stage's row-1 zone.
        let apron = window_end_max.saturating_sub(window_end);
        for _ in 0..apron {
            let cell = next_run_cell(&mut e);
            e.push_cell(cell);
        }

        e.schedules.push(TargetSchedule {
            m,
            n,
            l: l_k,
            window_start: sigma,
            window_len,
        });
        l_prev = l_k;
        window_end_max = window_end_max.max(window_end);

        // Replay self-check: S^{l_k} x_k must be the launchpad block.
        let block = snake_apply_s_pow(target, &e, params, l_k)?;
        let on_launchpad = block
            .support()
            .all(|p| p.row == 1 && p.col >= m && p.col <= n);
        if !on_launchpad {
            return Err(OperatorsError::BuilderVerification { k });
        }
    }

    debug_assert!(e.prefix_is_bijective());
    Ok(e)
}

/// One application of the shift: the coefficient at `q(t)` moves to
/// `q(t-1)` scaled by `λ`; the coefficient at `q(0) = (1,1)` is
/// annihilated.
pub fn snake_apply_t<S: Scalar>(
    v: &GridVector<S>,
    e: &SnakeEnumeration,
    params: &ShiftParams<S>,
) -> Result<GridVector<S>, OperatorsError> {
    snake_apply_t_pow(v, e, params, 1)
}

/// `T^n`: path indices drop by `n` (annihilating below zero), coefficients
/// scale by `λ^n`.
pub fn snake_apply_t_pow<S: Scalar>(
    v: &GridVector<S>,
    e: &SnakeEnumeration,
    params: &ShiftParams<S>,
    n: u64,
) -> Result<GridVector<S>, OperatorsError> {
    let weight = params.lambda_pow(n);
    let mut out = Vec::with_capacity(v.support_len());
    for (pos, c) in v.iter() {
        let t = e
            .index_of(*pos)
            .ok_or(OperatorsError::UnenumeratedPosition { pos: *pos })? as u64;
        if t >= n {
            let dest = e.position((t - n) as usize).expect("prefix index");
            out.push((dest, c.mul(&weight)));
        }
    }
    Ok(GridVector::from_entries(out))
}

/// One application of the right inverse: `q(t)` moves to `q(t+1)` scaled by
/// `λ⁻¹`.
pub fn snake_apply_s<S: Scalar>(
    v: &GridVector<S>,
    e: &SnakeEnumeration,
    params: &ShiftParams<S>,
) -> Result<GridVector<S>, OperatorsError> {
    snake_apply_s_pow(v, e, params, 1)
}

/// `S^n = S_n`: path indices rise by `n`, coefficients scale by `λ^{-n}`.
/// Errors if the enumeration prefix is too short to hold a shifted index.
pub fn snake_apply_s_pow<S: Scalar>(
    v: &GridVector<S>,
    e: &SnakeEnumeration,
    params: &ShiftParams<S>,
    n: u64,
) -> Result<GridVector<S>, OperatorsError> {
    let weight = params.lambda_pow_neg(n);
    let mut out = Vec::with_capacity(v.support_len());
    for (pos, c) in v.iter() {
        let t = e
            .index_of(*pos)
            .ok_or(OperatorsError::UnenumeratedPosition { pos: *pos })? as u64;
        let dest = e
            .position((t + n) as usize)
            .ok_or(OperatorsError::EnumerationTooShort {
                index: (t + n) as usize,
                len: e.len(),
            })?;
        out.push((dest, c.mul(&weight)));
    }
    Ok(GridVector::from_entries(out))
}

/// `T^{l_j} S^{l_k} x_i`, computed by replay (`j = 0` means no shift-back).
///
/// When `k > i + j` the result is additionally checked to sit in row 1 with
/// coefficient moduli at most `i·λ^{-(l_k - l_j)}`.
pub fn transported_block<S: Scalar>(
    x_i: &GridVector<S>,
    i: usize,
    j: usize,
    k: usize,
    e: &SnakeEnumeration,
    params: &ShiftParams<S>,
) -> Result<GridVector<S>, OperatorsError> {
    let l_j = e.schedule(j)?.l;
    let l_k = e.schedule(k)?.l;
    let up = snake_apply_s_pow(x_i, e, params, l_k)?;
    let out = snake_apply_t_pow(&up, e, params, l_j)?;
    if k > i + j {
        if out.single_row() != Some(1) {
            return Err(OperatorsError::TransportOffRow { i, j, k });
        }
        let decay = params.lambda_pow_neg(l_k - l_j).abs_f64();
        let bound = i as f64 * decay;
        if out.max_coeff_modulus() > bound * (1.0 + 1e-9) {
            return Err(OperatorsError::TransportBound {
                i,
                j,
                k,
                max_modulus: out.max_coeff_modulus(),
                bound,
            });
        }
    }
    Ok(out)
}
