//! Exact fermionic Fock-space engine for the four Rindler/Unruh modes.
//!
//! Basis kets |n₁n₂n₃n₄⟩ carry four occupation slots ordered as
//! (wedge-I particle, wedge-II antiparticle, wedge-I antiparticle,
//! wedge-II particle). A ket is stored at index n₁·8 + n₂·4 + n₃·2 + n₄,
//! i.e. the bitstring read as an integer with slot 1 most significant.
//!
//! A ket is defined by applying the four creation operators in slot order
//! to the joint vacuum. Creation and annihilation act with the
//! Jordan-Wigner sign (−1)^(number of occupied slots preceding the target
//! slot). Rearranging a ket so that both wedge-I operators stand to the
//! left of both wedge-II operators — the ordering in which tracing out
//! wedge II factorizes — moves the slot-3 operator past the slot-2
//! operator and multiplies the amplitude by (−1)^(n₂·n₃).
//! [`partial_trace_wedge_II`] applies that sign before reducing, which
//! fixes every sign in the 16-ket table.

use num_complex::Complex64;

use crate::{Error, Result};

/// Dimension of the four-mode Fock space.
pub const FOCK_DIM: usize = 16;

/// One of the four fermionic modes, identified by its ket slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeIndex {
    /// Slot 1: particle mode in Rindler wedge I.
    WedgeIParticle,
    /// Slot 2: antiparticle mode in Rindler wedge II.
    WedgeIIAntiparticle,
    /// Slot 3: antiparticle mode in Rindler wedge I.
    WedgeIAntiparticle,
    /// Slot 4: particle mode in Rindler wedge II.
    WedgeIIParticle,
}

impl ModeIndex {
    /// All four modes in slot order.
    pub const ALL: [ModeIndex; 4] = [
        ModeIndex::WedgeIParticle,
        ModeIndex::WedgeIIAntiparticle,
        ModeIndex::WedgeIAntiparticle,
        ModeIndex::WedgeIIParticle,
    ];

    /// Builds a mode from its slot number in {1, 2, 3, 4}.
    pub fn from_slot(slot: u8) -> Result<Self> {
        match slot {
            1 => Ok(ModeIndex::WedgeIParticle),
            2 => Ok(ModeIndex::WedgeIIAntiparticle),
            3 => Ok(ModeIndex::WedgeIAntiparticle),
            4 => Ok(ModeIndex::WedgeIIParticle),
            other => Err(Error::InvalidMode(other)),
        }
    }

    /// Slot number in {1, 2, 3, 4}.
    pub fn slot(self) -> u8 {
        match self {
            ModeIndex::WedgeIParticle => 1,
            ModeIndex::WedgeIIAntiparticle => 2,
            ModeIndex::WedgeIAntiparticle => 3,
            ModeIndex::WedgeIIParticle => 4,
        }
    }

    /// Occupation bit for this slot (slot 1 is most significant).
    fn bit(self) -> usize {
        1 << (4 - self.slot() as usize)
    }

    /// Mask of all slots strictly preceding this one in slot order.
    fn preceding_mask(self) -> usize {
        match self {
            ModeIndex::WedgeIParticle => 0b0000,
            ModeIndex::WedgeIIAntiparticle => 0b1000,
            ModeIndex::WedgeIAntiparticle => 0b1100,
            ModeIndex::WedgeIIParticle => 0b1110,
        }
    }
}

/// Operator-ordering convention for basis kets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderingConvention {
    /// All wedge-I creation operators stand to the left of all wedge-II
    /// creation operators.
    PhysicalOrdering,
}

impl OrderingConvention {
    /// Sign picked up by a slot-ordered ket with the given occupation when
    /// its operators are rearranged into this convention.
    pub fn rearrangement_sign(self, occupation: usize) -> f64 {
        match self {
            OrderingConvention::PhysicalOrdering => {
                // one transposition (slot 3 past slot 2) when both occupied
                if occupation & 0b0100 != 0 && occupation & 0b0010 != 0 {
                    -1.0
                } else {
                    1.0
                }
            }
        }
    }
}

/// Complex amplitude vector over the 16 four-mode occupation kets.
#[derive(Debug, Clone, PartialEq)]
pub struct FockVector {
    amplitudes: [Complex64; FOCK_DIM],
}

impl Default for FockVector {
    fn default() -> Self {
        Self::zero()
    }
}

impl FockVector {
    /// The zero vector.
    pub fn zero() -> Self {
        FockVector {
            amplitudes: [Complex64::new(0.0, 0.0); FOCK_DIM],
        }
    }

    /// Basis ket |n₁n₂n₃n₄⟩ for the occupation bitstring `index` in 0..16.
    pub fn basis(index: usize) -> Self {
        assert!(index < FOCK_DIM, "basis index {index} out of range");
        let mut v = Self::zero();
        v.amplitudes[index] = Complex64::new(1.0, 0.0);
        v
    }

    /// Builds a vector from all 16 amplitudes in bitstring order.
    pub fn from_amplitudes(amplitudes: [Complex64; FOCK_DIM]) -> Self {
        FockVector { amplitudes }
    }

    /// Amplitude of the ket with the given occupation bitstring.
    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amplitudes[index]
    }

    /// All 16 amplitudes in bitstring order.
    pub fn amplitudes(&self) -> &[Complex64; FOCK_DIM] {
        &self.amplitudes
    }

    /// Sets one amplitude.
    pub fn set_amplitude(&mut self, index: usize, value: Complex64) {
        self.amplitudes[index] = value;
    }

    /// Squared norm Σ|amplitude|².
    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Norm.
    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Inner product ⟨self|other⟩.
    pub fn inner(&self, other: &FockVector) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(other.amplitudes.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Returns `self` scaled by a complex factor.
    pub fn scaled(&self, factor: Complex64) -> FockVector {
        let mut out = self.clone();
        for a in out.amplitudes.iter_mut() {
            *a *= factor;
        }
        out
    }

    /// Componentwise sum.
    pub fn add(&self, other: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (a, b) in out.amplitudes.iter_mut().zip(other.amplitudes.iter()) {
            *a += b;
        }
        out
    }

    /// True when every amplitude is below `tol` in magnitude.
    pub fn is_zero(&self, tol: f64) -> bool {
        self.amplitudes.iter().all(|a| a.norm() < tol)
    }
}

/// Applies the creation operator for `mode` with the Jordan-Wigner sign.
///
/// Components already occupied at `mode` are annihilated (Pauli exclusion);
/// the zero vector is a valid output.
pub fn apply_creation(mode: ModeIndex, state: &FockVector) -> FockVector {
    let bit = mode.bit();
    let preceding = mode.preceding_mask();
    let mut out = FockVector::zero();
    for (index, amp) in state.amplitudes.iter().enumerate() {
        if amp.norm_sqr() == 0.0 || index & bit != 0 {
            continue;
        }
        let sign = if (index & preceding).count_ones() & 1 == 0 {
            1.0
        } else {
            -1.0
        };
        out.amplitudes[index | bit] += amp * sign;
    }
    out
}

/// Applies the annihilation operator for `mode`; the adjoint of
/// [`apply_creation`].
pub fn apply_annihilation(mode: ModeIndex, state: &FockVector) -> FockVector {
    let bit = mode.bit();
    let preceding = mode.preceding_mask();
    let mut out = FockVector::zero();
    for (index, amp) in state.amplitudes.iter().enumerate() {
        if amp.norm_sqr() == 0.0 || index & bit == 0 {
            continue;
        }
        let lowered = index & !bit;
        let sign = if (lowered & preceding).count_ones() & 1 == 0 {
            1.0
        } else {
            -1.0
        };
        out.amplitudes[lowered] += amp * sign;
    }
    out
}

/// Complex square matrix used for density operators of dimension 2, 4 or 16.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl DensityMatrix {
    /// Zero matrix of the given dimension.
    pub fn zeros(dim: usize) -> Self {
        DensityMatrix {
            dim,
            entries: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    /// Builds a matrix from row-major entries.
    pub fn from_entries(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                actual: entries.len(),
            });
        }
        Ok(DensityMatrix { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn add_to(&mut self, row: usize, col: usize, value: Complex64) {
        self.entries[row * self.dim + col] += value;
    }

    /// Matrix trace.
    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Largest entrywise deviation from Hermiticity, max |M − M†|.
    pub fn hermiticity_error(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let dev = (self.get(i, j) - self.get(j, i).conj()).norm();
                worst = worst.max(dev);
            }
        }
        worst
    }

    /// Largest entrywise absolute difference from another matrix.
    pub fn max_abs_diff(&self, other: &DensityMatrix) -> Result<f64> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                actual: other.dim,
            });
        }
        let mut worst = 0.0f64;
        for (a, b) in self.entries.iter().zip(other.entries.iter()) {
            worst = worst.max((a - b).norm());
        }
        Ok(worst)
    }

    /// Real eigenvalues in ascending order, computed with a cyclic Jacobi
    /// sweep. The matrix is assumed Hermitian.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let n = self.dim;
        let mut a = self.entries.clone();
        for _ in 0..200 {
            let mut off = 0.0f64;
            for p in 0..n {
                for q in (p + 1)..n {
                    off += a[p * n + q].norm_sqr();
                }
            }
            if off < 1e-30 {
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    let apq = a[p * n + q];
                    let b = apq.norm();
                    if b < 1e-300 {
                        continue;
                    }
                    let phase = apq / b;
                    let app = a[p * n + p].re;
                    let aqq = a[q * n + q].re;
                    let theta = 0.5 * (2.0 * b).atan2(app - aqq);
                    let (s, c) = theta.sin_cos();
                    // columns: B = A·U with U = [[c, −s·φ], [s·φ*, c]]
                    for r in 0..n {
                        let arp = a[r * n + p];
                        let arq = a[r * n + q];
                        a[r * n + p] = arp * c + arq * s * phase.conj();
                        a[r * n + q] = -arp * s * phase + arq * c;
                    }
                    // rows: A' = U†·B
                    for r in 0..n {
                        let apr = a[p * n + r];
                        let aqr = a[q * n + r];
                        a[p * n + r] = apr * c + aqr * s * phase;
                        a[q * n + r] = -apr * s * phase.conj() + aqr * c;
                    }
                }
            }
        }
        let mut eigs: Vec<f64> = (0..n).map(|i| a[i * n + i].re).collect();
        eigs.sort_by(|x, y| x.partial_cmp(y).unwrap());
        eigs
    }

    /// Smallest eigenvalue (Hermitian input assumed).
    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues()[0]
    }

    /// Occupation labels of the basis kets, matching the row/column order.
    pub fn basis_labels(&self) -> Vec<String> {
        match self.dim {
            16 => (0..16).map(|i| format!("{i:04b}")).collect(),
            4 => (0..4).map(|i| format!("{i:02b}")).collect(),
            2 => (0..2).map(|i| format!("{i:01b}")).collect(),
            d => (0..d).map(|i| i.to_string()).collect(),
        }
    }

    /// Plain-text dump: one line per row, entries as "re,im" pairs
    /// separated by spaces. Used for test fixtures.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim)
                .map(|j| {
                    let e = self.get(i, j);
                    format!("{:.17e},{:.17e}", e.re, e.im)
                })
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Outer product |a⟩⟨b| as a 16×16 matrix.
pub fn outer_product(a: &FockVector, b: &FockVector) -> DensityMatrix {
    let mut rho = DensityMatrix::zeros(FOCK_DIM);
    for i in 0..FOCK_DIM {
        for j in 0..FOCK_DIM {
            rho.set(i, j, a.amplitude(i) * b.amplitude(j).conj());
        }
    }
    rho
}

/// Traces out the wedge-II slots (2 and 4) of a 16×16 density matrix.
///
/// Amplitudes are first rearranged into
/// [`OrderingConvention::PhysicalOrdering`], after which the trace reduces
/// to the standard tensor partial trace. The output is 4×4 in the wedge-I
/// occupation basis (n₁, n₃) ordered |00⟩, |01⟩, |10⟩, |11⟩.
pub fn partial_trace_wedge_ii(rho: &DensityMatrix) -> Result<DensityMatrix> {
    if rho.dim() != FOCK_DIM {
        return Err(Error::DimensionMismatch {
            expected: FOCK_DIM,
            actual: rho.dim(),
        });
    }
    let ordering = OrderingConvention::PhysicalOrdering;
    let mut out = DensityMatrix::zeros(4);
    for i in 0..FOCK_DIM {
        let wedge_i_row = ((i >> 3) & 1) * 2 + ((i >> 1) & 1);
        let wedge_ii_row = ((i >> 2) & 1) * 2 + (i & 1);
        let sign_i = ordering.rearrangement_sign(i);
        for j in 0..FOCK_DIM {
            let wedge_ii_col = ((j >> 2) & 1) * 2 + (j & 1);
            if wedge_ii_row != wedge_ii_col {
                continue;
            }
            let wedge_i_col = ((j >> 3) & 1) * 2 + ((j >> 1) & 1);
            let sign = sign_i * ordering.rearrangement_sign(j);
            out.add_to(wedge_i_row, wedge_i_col, rho.get(i, j) * sign);
        }
    }
    Ok(out)
}

/// Traces out the second qubit factor of a 4×4 matrix in the (n₁, n₃)
/// basis, leaving the 2×2 particle-sector matrix.
pub fn partial_trace_antiparticle(rho: &DensityMatrix) -> Result<DensityMatrix> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            actual: rho.dim(),
        });
    }
    let mut out = DensityMatrix::zeros(2);
    for p in 0..2 {
        for q in 0..2 {
            let mut sum = Complex64::new(0.0, 0.0);
            for n in 0..2 {
                sum += rho.get(p * 2 + n, q * 2 + n);
            }
            out.set(p, q, sum);
        }
    }
    Ok(out)
}
