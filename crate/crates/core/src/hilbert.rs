// Copyright 2026 commonbath contributors
// SPDX-License-Identifier: Apache-2.0

//! Multi-qubit states, the collective lowering operator and the
//! zero-temperature collective dissipator.
//!
//! Conventions used throughout the crate:
//! - qubits are numbered 1..=n, qubit 1 is the leftmost tensor factor;
//! - the computational-basis index of a product state is the big-endian
//!   bit string, i.e. qubit q maps to bit position n - q;
//! - superposition vectors such as the uniform single-excitation sum are
//!   stored unnormalized, exactly as they enter the operator algebra.

use crate::error::{Error, Result};
use crate::linalg::{hermiticity_defect, trace, CMatrix, CVector, C64, ONE, ZERO};

/// Hard cap on full-Hilbert-space operations (dim 4096, ~270 MB per
/// operator). The dense representation is a desk-scale verifier, not a
/// production path.
pub const MAX_QUBITS: u32 = 12;

/// A choice of system size together with the initially excited qubits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QubitIndexSet {
    n: u32,
    excited: Vec<u32>,
}

impl QubitIndexSet {
    /// Validate indices: distinct, each in 1..=n.
    pub fn new(n: u32, excited: &[u32]) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("qubit count must be positive"));
        }
        let mut sorted = excited.to_vec();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::invalid(format!("duplicate qubit index {}", w[0])));
            }
        }
        for &q in &sorted {
            if q == 0 || q > n {
                return Err(Error::invalid(format!(
                    "qubit index {q} out of range 1..={n}"
                )));
            }
        }
        Ok(QubitIndexSet { n, excited: sorted })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn excited(&self) -> &[u32] {
        &self.excited
    }

    pub fn excitation_count(&self) -> usize {
        self.excited.len()
    }
}

/// Bit position of qubit `q` in an `n`-qubit basis index.
#[inline]
pub(crate) fn bit_of(n: u32, q: u32) -> usize {
    (n - q) as usize
}

/// Basis index of the product state with exactly the given qubits excited.
pub(crate) fn basis_index(n: u32, excited: &[u32]) -> usize {
    excited.iter().map(|&q| 1usize << bit_of(n, q)).sum()
}

fn check_capacity(n: u32) -> Result<usize> {
    if n == 0 {
        return Err(Error::invalid("qubit count must be positive"));
    }
    if n > MAX_QUBITS {
        return Err(Error::capacity(format!(
            "{n} qubits exceed the dense-representation cap of {MAX_QUBITS}"
        )));
    }
    Ok(1usize << n)
}

/// An (unnormalized) vector on the full 2^n Hilbert space.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    n: u32,
    amplitudes: CVector,
}

impl PureState {
    pub fn zero(n: u32) -> Result<Self> {
        let dim = check_capacity(n)?;
        Ok(PureState {
            n,
            amplitudes: CVector::zeros(dim),
        })
    }

    pub fn from_amplitudes(n: u32, amplitudes: CVector) -> Result<Self> {
        let dim = check_capacity(n)?;
        if amplitudes.len() != dim {
            return Err(Error::invalid(format!(
                "expected {dim} amplitudes for n = {n}, got {}",
                amplitudes.len()
            )));
        }
        Ok(PureState { n, amplitudes })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &CVector {
        &self.amplitudes
    }

    pub fn norm_squared(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn inner(&self, other: &PureState) -> C64 {
        self.amplitudes
            .iter()
            .zip(other.amplitudes.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// |self⟩⟨other| as a dense operator.
    pub fn outer(&self, other: &PureState) -> DenseOperator {
        debug_assert_eq!(self.n, other.n);
        let dim = self.dim();
        let mut m = CMatrix::zeros(dim, dim);
        for (r, a) in self.amplitudes.iter().enumerate() {
            if *a == ZERO {
                continue;
            }
            for (c, b) in other.amplitudes.iter().enumerate() {
                m[(r, c)] += a * b.conj();
            }
        }
        DenseOperator {
            n: self.n,
            entries: m,
        }
    }

    /// Projector |self⟩⟨self| scaled to unit trace.
    pub fn density(&self) -> Result<DenseOperator> {
        let nsq = self.norm_squared();
        if nsq == 0.0 {
            return Err(Error::invalid("cannot normalize the zero vector"));
        }
        let mut op = self.outer(self);
        op.entries.scale_mut(1.0 / nsq);
        Ok(op)
    }

    fn add_basis(&mut self, excited: &[u32], weight: f64) {
        let idx = basis_index(self.n, excited);
        self.amplitudes[idx] += C64::new(weight, 0.0);
    }
}

/// A dense operator on the full 2^n Hilbert space.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseOperator {
    n: u32,
    entries: CMatrix,
}

impl DenseOperator {
    pub fn zeros(n: u32) -> Result<Self> {
        let dim = check_capacity(n)?;
        Ok(DenseOperator {
            n,
            entries: CMatrix::zeros(dim, dim),
        })
    }

    pub fn from_matrix(n: u32, entries: CMatrix) -> Result<Self> {
        let dim = check_capacity(n)?;
        if entries.nrows() != dim || entries.ncols() != dim {
            return Err(Error::invalid(format!(
                "expected a {dim}x{dim} matrix for n = {n}, got {}x{}",
                entries.nrows(),
                entries.ncols()
            )));
        }
        Ok(DenseOperator { n, entries })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.entries
    }

    pub fn into_matrix(self) -> CMatrix {
        self.entries
    }

    pub fn trace(&self) -> C64 {
        trace(&self.entries)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        hermiticity_defect(&self.entries) <= tol
    }

    /// Expectation value tr(op ρ) of `op` in the state `self`.
    pub fn expectation(&self, op: &CMatrix) -> C64 {
        debug_assert_eq!(op.nrows(), self.dim());
        let mut acc = ZERO;
        for r in 0..self.dim() {
            for c in 0..self.dim() {
                acc += op[(r, c)] * self.entries[(c, r)];
            }
        }
        acc
    }

    pub fn scaled(&self, factor: f64) -> DenseOperator {
        DenseOperator {
            n: self.n,
            entries: self.entries.scale(factor),
        }
    }

    pub fn add_scaled(&mut self, other: &DenseOperator, factor: f64) {
        debug_assert_eq!(self.n, other.n);
        let f = C64::new(factor, 0.0);
        self.entries
            .iter_mut()
            .zip(other.entries.iter())
            .for_each(|(a, b)| *a += f * b);
    }
}

/// Computational-basis product state with the pattern's qubits excited.
///
/// The empty pattern gives the collective ground state.
pub fn build_basis_state(pattern: &QubitIndexSet) -> Result<PureState> {
    let mut state = PureState::zero(pattern.n())?;
    state.add_basis(pattern.excited(), 1.0);
    Ok(state)
}

/// The special (unnormalized) superposition vectors entering the
/// invariant-subspace algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecialVector {
    /// |0...0⟩, the collective ground state.
    Ground,
    /// Sum of all single-excitation states except the listed qubits.
    ExcitedSum { excluded: Vec<u32> },
    /// |k⟩ + |l⟩, the symmetric single-excitation pair.
    PairSum { k: u32, l: u32 },
    /// Σ_{i≠k}|i,k⟩ + Σ_{i≠l}|i,l⟩. The doubly-counted |k,l⟩ carries
    /// amplitude 2.
    AnchoredPairs { k: u32, l: u32 },
    /// Σ_{h>i}|h,i⟩ over spectators h,i ∉ {k,l}; the zero vector when
    /// fewer than two spectators exist.
    SpectatorPairs { k: u32, l: u32 },
}

fn check_pair(n: u32, k: u32, l: u32) -> Result<()> {
    if k == l {
        return Err(Error::invalid(format!(
            "two-index vector requires distinct qubits, got k = l = {k}"
        )));
    }
    if k == 0 || k > n || l == 0 || l > n {
        return Err(Error::invalid(format!(
            "qubit pair ({k},{l}) out of range 1..={n}"
        )));
    }
    Ok(())
}

/// Realize a special vector on n qubits, unnormalized.
pub fn build_special_vector(n: u32, kind: &SpecialVector) -> Result<PureState> {
    let mut state = PureState::zero(n)?;
    match kind {
        SpecialVector::Ground => {
            state.add_basis(&[], 1.0);
        }
        SpecialVector::ExcitedSum { excluded } => {
            for &q in excluded {
                if q == 0 || q > n {
                    return Err(Error::invalid(format!(
                        "excluded qubit {q} out of range 1..={n}"
                    )));
                }
            }
            if excluded.len() >= 2 && n < 3 {
                return Err(Error::invalid(format!(
                    "excited sum over spectators needs n >= 3, got n = {n}"
                )));
            }
            for q in 1..=n {
                if !excluded.contains(&q) {
                    state.add_basis(&[q], 1.0);
                }
            }
        }
        SpecialVector::PairSum { k, l } => {
            check_pair(n, *k, *l)?;
            state.add_basis(&[*k], 1.0);
            state.add_basis(&[*l], 1.0);
        }
        SpecialVector::AnchoredPairs { k, l } => {
            check_pair(n, *k, *l)?;
            if n < 3 {
                return Err(Error::invalid(format!(
                    "anchored pair sum needs n >= 3, got n = {n}"
                )));
            }
            for i in 1..=n {
                if i != *k {
                    state.add_basis(&sorted_pair(i, *k), 1.0);
                }
            }
            for i in 1..=n {
                if i != *l {
                    state.add_basis(&sorted_pair(i, *l), 1.0);
                }
            }
        }
        SpecialVector::SpectatorPairs { k, l } => {
            check_pair(n, *k, *l)?;
            for h in 1..=n {
                for i in 1..h {
                    if h != *k && h != *l && i != *k && i != *l {
                        state.add_basis(&[i, h], 1.0);
                    }
                }
            }
        }
    }
    Ok(state)
}

fn sorted_pair(a: u32, b: u32) -> [u32; 2] {
    if a < b {
        [a, b]
    } else {
        [b, a]
    }
}

/// The collective lowering operator σ = Σ_i |0⟩⟨1|_i as a dense matrix.
pub fn collective_lowering(n: u32) -> Result<DenseOperator> {
    let dim = check_capacity(n)?;
    let mut m = CMatrix::zeros(dim, dim);
    for x in 0..dim {
        let mut bits = x;
        while bits != 0 {
            let low = bits & bits.wrapping_neg();
            m[(x ^ low, x)] += ONE;
            bits ^= low;
        }
    }
    Ok(DenseOperator { n, entries: m })
}

// ---------------------------------------------------------------------------
// Structured application of σ. The lowering operator only moves amplitude
// between basis states differing in one bit, so every product with σ or σ†
// reduces to bit-blocked slice additions on the column-major storage. This
// is what makes the RK4 oracle affordable at n = 8. All four primitives
// OVERWRITE their destination; the per-column zeroing happens while the
// column is cache-resident.
// ---------------------------------------------------------------------------

#[inline]
fn slice_accumulate(dst: &mut [C64], src: &[C64]) {
    for (d, s) in dst.iter_mut().zip(src.iter()) {
        *d += *s;
    }
}

/// dst = σ · src: within each column, every upper bit-block folds down.
fn sigma_left_into(dim: usize, src: &CMatrix, dst: &mut CMatrix) {
    let s = src.as_slice();
    let d = dst.as_mut_slice();
    for col in 0..dim {
        let sc = &s[col * dim..(col + 1) * dim];
        let dc = &mut d[col * dim..(col + 1) * dim];
        dc.fill(ZERO);
        let mut bit = 1usize;
        while bit < dim {
            let step = bit << 1;
            let mut lo = 0;
            while lo < dim {
                slice_accumulate(&mut dc[lo..lo + bit], &sc[lo + bit..lo + step]);
                lo += step;
            }
            bit = step;
        }
    }
}

/// dst = σ† · src: within each column, every lower bit-block folds up.
fn sigma_dag_left_into(dim: usize, src: &CMatrix, dst: &mut CMatrix) {
    let s = src.as_slice();
    let d = dst.as_mut_slice();
    for col in 0..dim {
        let sc = &s[col * dim..(col + 1) * dim];
        let dc = &mut d[col * dim..(col + 1) * dim];
        dc.fill(ZERO);
        let mut bit = 1usize;
        while bit < dim {
            let step = bit << 1;
            let mut lo = 0;
            while lo < dim {
                slice_accumulate(&mut dc[lo + bit..lo + step], &sc[lo..lo + bit]);
                lo += step;
            }
            bit = step;
        }
    }
}

/// dst = src · σ†: output column y gathers source columns y ∪ {j}.
fn sigma_dag_right_into(dim: usize, src: &CMatrix, dst: &mut CMatrix) {
    let s = src.as_slice();
    let d = dst.as_mut_slice();
    for y in 0..dim {
        let dc = &mut d[y * dim..(y + 1) * dim];
        dc.fill(ZERO);
        let mut j = 1usize;
        while j < dim {
            if y & j == 0 {
                let c = y | j;
                slice_accumulate(dc, &s[c * dim..(c + 1) * dim]);
            }
            j <<= 1;
        }
    }
}

/// dst = src · σ: output column c gathers source columns c ∖ {i}.
fn sigma_right_into(dim: usize, src: &CMatrix, dst: &mut CMatrix) {
    let s = src.as_slice();
    let d = dst.as_mut_slice();
    for c in 0..dim {
        let dc = &mut d[c * dim..(c + 1) * dim];
        dc.fill(ZERO);
        let mut i = 1usize;
        while i < dim {
            if c & i != 0 {
                let y = c ^ i;
                slice_accumulate(dc, &s[y * dim..(y + 1) * dim]);
            }
            i <<= 1;
        }
    }
}

/// Scratch buffers for repeated dissipator applications of one dimension.
pub(crate) struct DissipatorWorkspace {
    dim: usize,
    a: CMatrix,
    b: CMatrix,
}

impl DissipatorWorkspace {
    pub(crate) fn new(dim: usize) -> Self {
        DissipatorWorkspace {
            dim,
            a: CMatrix::zeros(dim, dim),
            b: CMatrix::zeros(dim, dim),
        }
    }

    /// out = D(rho) = 2 σ rho σ† − σ†σ rho − rho σ†σ, no assumptions on rho.
    pub(crate) fn apply_into(&mut self, rho: &CMatrix, out: &mut CMatrix) {
        let dim = self.dim;
        debug_assert_eq!(rho.nrows(), dim);

        sigma_left_into(dim, rho, &mut self.a); // a = σρ
        sigma_dag_right_into(dim, &self.a, out); // out = σρσ†
        sigma_dag_left_into(dim, &self.a, &mut self.b); // b = σ†σρ
        for (o, v) in out.iter_mut().zip(self.b.iter()) {
            *o = *o + *o - v;
        }
        sigma_dag_right_into(dim, rho, &mut self.a); // a = ρσ†
        sigma_right_into(dim, &self.a, &mut self.b); // b = ρσ†σ
        for (o, v) in out.iter_mut().zip(self.b.iter()) {
            *o -= v;
        }
    }

    /// Same as `apply_into` for Hermitian rho: ρσ†σ = (σ†σρ)†, so the
    /// right-multiplication pair is replaced by one transposed combine.
    pub(crate) fn apply_hermitian_into(&mut self, rho: &CMatrix, out: &mut CMatrix) {
        let dim = self.dim;
        debug_assert_eq!(rho.nrows(), dim);

        sigma_left_into(dim, rho, &mut self.a); // a = σρ
        sigma_dag_right_into(dim, &self.a, out); // out = σρσ†
        sigma_dag_left_into(dim, &self.a, &mut self.b); // b = σ†σρ

        // out = 2 out − b − b†, blocked so the transposed reads of b stay
        // cache-resident.
        let o = out.as_mut_slice();
        let b = self.b.as_slice();
        const BLOCK: usize = 32;
        let mut cb = 0;
        while cb < dim {
            let ce = (cb + BLOCK).min(dim);
            let mut rb = 0;
            while rb < dim {
                let re = (rb + BLOCK).min(dim);
                for c in cb..ce {
                    for r in rb..re {
                        let idx = c * dim + r;
                        let v = o[idx];
                        o[idx] = v + v - b[idx] - b[r * dim + c].conj();
                    }
                }
                rb = re;
            }
            cb = ce;
        }
    }
}

/// Action of the collective dissipator D on an operator.
///
/// Returns 2 σ rho σ† − σ†σ rho − rho σ†σ. The input need not be
/// Hermitian; for Hermitian inputs the output is Hermitian and traceless.
pub fn apply_dissipator(rho: &DenseOperator) -> Result<DenseOperator> {
    let dim = rho.dim();
    let mut ws = DissipatorWorkspace::new(dim);
    let mut out = CMatrix::zeros(dim, dim);
    ws.apply_into(&rho.entries, &mut out);
    Ok(DenseOperator {
        n: rho.n,
        entries: out,
    })
}

/// Expand `rest` into a full basis index with zero bits inserted at the
/// positions of the traced-out pair.
#[inline]
fn deposit_rest(rest: usize, lo_bit: usize, hi_bit: usize) -> usize {
    let low = rest & ((1 << lo_bit) - 1);
    let mid_width = hi_bit - 1 - lo_bit;
    let mid = (rest >> lo_bit) & ((1 << mid_width) - 1);
    let high = rest >> (lo_bit + mid_width);
    low | (mid << (lo_bit + 1)) | (high << (hi_bit + 1))
}

/// Reduced density matrix of qubits (i, j), with qubit i as the left
/// slot of the ordered basis {|00⟩, |01⟩, |10⟩, |11⟩}.
pub fn partial_trace_pair(
    rho: &DenseOperator,
    i: u32,
    j: u32,
) -> Result<crate::concurrence::TwoQubitDensity> {
    let n = rho.n;
    if i == j {
        return Err(Error::invalid(format!(
            "partial trace requires two distinct qubits, got i = j = {i}"
        )));
    }
    if i == 0 || i > n || j == 0 || j > n {
        return Err(Error::invalid(format!(
            "qubit pair ({i},{j}) out of range 1..={n}"
        )));
    }
    let bi = bit_of(n, i);
    let bj = bit_of(n, j);
    let (lo_bit, hi_bit) = if bi < bj { (bi, bj) } else { (bj, bi) };
    let rest_dim = 1usize << (n - 2);

    let mut out = CMatrix::zeros(4, 4);
    for rest in 0..rest_dim {
        let template = deposit_rest(rest, lo_bit, hi_bit);
        let mut full = [0usize; 4];
        for (pair, slot) in full.iter_mut().enumerate() {
            let i_exc = (pair >> 1) & 1;
            let j_exc = pair & 1;
            *slot = template | (i_exc << bi) | (j_exc << bj);
        }
        for a in 0..4 {
            for b in 0..4 {
                out[(a, b)] += rho.entries[(full[a], full[b])];
            }
        }
    }
    crate::concurrence::TwoQubitDensity::new(out)
}
