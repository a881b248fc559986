//! Domain types shared by every stage of the pipeline: voxel volumes,
//! system matrices with per-row frequency metadata, scan vectors, truncated
//! SVD factors and solver reports.
//!
//! Vectorization convention: volumes are stored and vectorized column-major
//! with the x index running fastest, i.e. element `(x, y, z)` of an
//! `n1 x n2 x n3` volume sits at linear index `x + n1 * (y + n2 * z)`.

use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Voxel counts per axis.
pub type Dims = (usize, usize, usize);

/// Geometry of a voxel grid: counts per axis and voxel pitch in mm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VolumeGrid {
    pub dims: Dims,
    pub voxel_size_mm: [f64; 3],
}

impl VolumeGrid {
    pub fn isotropic(dims: Dims, pitch_mm: f64) -> Self {
        VolumeGrid {
            dims,
            voxel_size_mm: [pitch_mm; 3],
        }
    }

    pub fn voxel_count(&self) -> usize {
        self.dims.0 * self.dims.1 * self.dims.2
    }
}

/// A particle-concentration field on a 3D voxel grid.
///
/// Values are in normalized units where `1.0` equals the calibration delta
/// concentration `c_delta`. Ground-truth phantoms and the outputs of
/// positivity-constrained solvers are nonnegative; intermediate solver
/// iterates may be signed.
#[derive(Debug, Clone, PartialEq)]
pub struct Volume3D {
    dims: Dims,
    voxel_size_mm: [f64; 3],
    data: Vec<f64>,
}

impl Volume3D {
    pub fn new(dims: Dims, voxel_size_mm: [f64; 3], data: Vec<f64>) -> Result<Self> {
        let n = dims.0 * dims.1 * dims.2;
        if data.len() != n {
            return Err(Error::dim("Volume3D::new", n, data.len()));
        }
        if voxel_size_mm.iter().any(|&s| !(s > 0.0)) {
            return Err(Error::Parameter(format!(
                "voxel size must be positive, got {voxel_size_mm:?}"
            )));
        }
        Ok(Volume3D {
            dims,
            voxel_size_mm,
            data,
        })
    }

    pub fn zeros(dims: Dims) -> Self {
        Volume3D {
            dims,
            voxel_size_mm: [1.0; 3],
            data: vec![0.0; dims.0 * dims.1 * dims.2],
        }
    }

    /// Build from a function of the voxel index `(x, y, z)`.
    pub fn from_fn(dims: Dims, mut f: impl FnMut(usize, usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(dims.0 * dims.1 * dims.2);
        for z in 0..dims.2 {
            for y in 0..dims.1 {
                for x in 0..dims.0 {
                    data.push(f(x, y, z));
                }
            }
        }
        Volume3D {
            dims,
            voxel_size_mm: [1.0; 3],
            data,
        }
    }

    pub fn with_voxel_size(mut self, voxel_size_mm: [f64; 3]) -> Self {
        self.voxel_size_mm = voxel_size_mm;
        self
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn voxel_size_mm(&self) -> [f64; 3] {
        self.voxel_size_mm
    }

    pub fn grid(&self) -> VolumeGrid {
        VolumeGrid {
            dims: self.dims,
            voxel_size_mm: self.voxel_size_mm,
        }
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    #[inline]
    pub fn linear_index(&self, x: usize, y: usize, z: usize) -> usize {
        debug_assert!(x < self.dims.0 && y < self.dims.1 && z < self.dims.2);
        x + self.dims.0 * (y + self.dims.1 * z)
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize, z: usize) -> f64 {
        self.data[self.linear_index(x, y, z)]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, z: usize, value: f64) {
        let i = self.linear_index(x, y, z);
        self.data[i] = value;
    }

    pub fn max_value(&self) -> f64 {
        self.data.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn min_value(&self) -> f64 {
        self.data.iter().cloned().fold(f64::INFINITY, f64::min)
    }

    /// Rescale in place so the maximum equals `target` (no-op on an
    /// all-zero volume).
    pub fn rescale_max(&mut self, target: f64) {
        let m = self.max_value();
        if m > 0.0 {
            let s = target / m;
            for v in &mut self.data {
                *v *= s;
            }
        }
    }
}

/// Columnwise (x-fastest) vectorization of a volume.
pub fn vectorize(v: &Volume3D) -> DVector<f64> {
    DVector::from_column_slice(v.data())
}

/// Inverse of [`vectorize`]: reshape a vector onto a voxel grid.
///
/// The voxel pitch defaults to 1 mm; use [`Volume3D::with_voxel_size`] or
/// [`devectorize_on`] when the physical pitch matters.
pub fn devectorize(u: &[f64], dims: Dims) -> Result<Volume3D> {
    Volume3D::new(dims, [1.0; 3], u.to_vec())
}

/// Reshape a vector onto a known grid (dims and voxel pitch).
pub fn devectorize_on(u: &[f64], grid: &VolumeGrid) -> Result<Volume3D> {
    Volume3D::new(grid.dims, grid.voxel_size_mm, u.to_vec())
}

/// Real/imaginary part tag of a stacked Fourier coefficient row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    Real,
    Imag,
}

impl Part {
    pub fn as_str(&self) -> &'static str {
        match self {
            Part::Real => "real",
            Part::Imag => "imag",
        }
    }
}

/// Per-row metadata of a system matrix.
///
/// Calibration rows carry `channel` in `{1, 2, 3}`; rows of an
/// rSVD-compressed matrix use the synthetic convention `channel = 0`,
/// `frequency_hz = component index`, `part = Real`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RowMeta {
    pub channel: u8,
    pub frequency_hz: f64,
    pub part: Part,
}

/// Dense real system matrix mapping vectorized concentration to measurement
/// coefficients, together with the voxel grid it was calibrated against.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemMatrix {
    entries: DMatrix<f64>,
    row_meta: Vec<RowMeta>,
    /// Concentration of the calibration delta probe in mmol.
    pub delta_concentration: f64,
    /// Voxel grid of the calibration field of view; `grid.voxel_count()`
    /// equals the column count.
    pub grid: VolumeGrid,
}

pub const DEFAULT_DELTA_CONCENTRATION: f64 = 100.0;

impl SystemMatrix {
    pub fn new(
        entries: DMatrix<f64>,
        row_meta: Vec<RowMeta>,
        delta_concentration: f64,
        grid: VolumeGrid,
    ) -> Result<Self> {
        if row_meta.len() != entries.nrows() {
            return Err(Error::dim(
                "SystemMatrix::new row_meta",
                entries.nrows(),
                row_meta.len(),
            ));
        }
        if grid.voxel_count() != entries.ncols() {
            return Err(Error::dim(
                "SystemMatrix::new grid",
                entries.ncols(),
                grid.voxel_count(),
            ));
        }
        Ok(SystemMatrix {
            entries,
            row_meta,
            delta_concentration,
            grid,
        })
    }

    pub fn rows(&self) -> usize {
        self.entries.nrows()
    }

    pub fn cols(&self) -> usize {
        self.entries.ncols()
    }

    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn row_meta(&self) -> &[RowMeta] {
        &self.row_meta
    }

    /// Forward map `A u`.
    pub fn apply(&self, u: &DVector<f64>) -> Result<DVector<f64>> {
        if u.len() != self.cols() {
            return Err(Error::dim("SystemMatrix::apply", self.cols(), u.len()));
        }
        Ok(&self.entries * u)
    }

    /// Adjoint map `A^T f`.
    pub fn apply_adjoint(&self, f: &DVector<f64>) -> Result<DVector<f64>> {
        if f.len() != self.rows() {
            return Err(Error::dim(
                "SystemMatrix::apply_adjoint",
                self.rows(),
                f.len(),
            ));
        }
        Ok(self.entries.tr_mul(f))
    }
}

/// Measured (or synthesized) scan aligned row-for-row with a system matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanData {
    pub values: DVector<f64>,
    /// Empty-phantom scans used for background correction and whitening.
    pub background_scans: Vec<DVector<f64>>,
    /// Temporal position of each background scan, when known. Absent
    /// positions fall back to the every-19th-probe convention.
    pub background_positions: Option<Vec<f64>>,
    /// Temporal position of each measurement row; defaults to the row index.
    pub row_positions: Option<Vec<f64>>,
    /// Number of repetitions averaged into `values`.
    pub n_repetitions: u32,
}

impl ScanData {
    pub fn new(values: DVector<f64>) -> Self {
        ScanData {
            values,
            background_scans: Vec::new(),
            background_positions: None,
            row_positions: None,
            n_repetitions: 1,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.len() == 0
    }

    pub fn check_rows(&self, a: &SystemMatrix) -> Result<()> {
        if self.len() != a.rows() {
            return Err(Error::dim("ScanData vs SystemMatrix", a.rows(), self.len()));
        }
        for (i, b) in self.background_scans.iter().enumerate() {
            if b.len() != a.rows() {
                return Err(Error::dim(format!("background scan {i}"), a.rows(), b.len()));
            }
        }
        Ok(())
    }
}

/// Truncated SVD factors `(U_K, Sigma_K, V_K)` of a system matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SvdFactors {
    u_k: DMatrix<f64>,
    sigma_k: DVector<f64>,
    v_k: DMatrix<f64>,
}

impl SvdFactors {
    /// Validates the factor shapes and that the singular values are
    /// positive and nonincreasing.
    pub fn new(u_k: DMatrix<f64>, sigma_k: DVector<f64>, v_k: DMatrix<f64>) -> Result<Self> {
        let k = sigma_k.len();
        if u_k.ncols() != k || v_k.ncols() != k {
            return Err(Error::dim(
                "SvdFactors::new",
                format!("U and V with {k} columns"),
                format!("{}x{} and {}x{}", u_k.nrows(), u_k.ncols(), v_k.nrows(), v_k.ncols()),
            ));
        }
        if k > u_k.nrows().min(v_k.nrows()) {
            return Err(Error::Parameter(format!(
                "rank {k} exceeds min(M, N) = {}",
                u_k.nrows().min(v_k.nrows())
            )));
        }
        for i in 0..k {
            if !(sigma_k[i] > 0.0) {
                return Err(Error::Parameter(format!(
                    "singular value {i} is not positive: {}",
                    sigma_k[i]
                )));
            }
            if i > 0 && sigma_k[i] > sigma_k[i - 1] {
                return Err(Error::Parameter(format!(
                    "singular values not nonincreasing at {i}: {} > {}",
                    sigma_k[i],
                    sigma_k[i - 1]
                )));
            }
        }
        Ok(SvdFactors { u_k, sigma_k, v_k })
    }

    pub fn rank(&self) -> usize {
        self.sigma_k.len()
    }

    pub fn u_k(&self) -> &DMatrix<f64> {
        &self.u_k
    }

    pub fn sigma_k(&self) -> &DVector<f64> {
        &self.sigma_k
    }

    pub fn v_k(&self) -> &DMatrix<f64> {
        &self.v_k
    }
}

/// One row of a solver trace.
///
/// For the penalty-scheduled solvers, `mu` is the penalty used by iteration
/// `k` and `sigma` the noise-level estimate computed from that iteration's
/// data iterate (the paper-side `sigma_{k+1}`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IterationRecord {
    pub k: usize,
    pub mu: f64,
    pub sigma: f64,
    /// `||A u_1 - f||_2` after the data update.
    pub data_residual: f64,
    pub cg_iterations: usize,
    pub wall_ms: f64,
}

/// Reconstruction plus per-iteration trace.
#[derive(Debug, Clone, PartialEq)]
pub struct SolverReport {
    pub reconstruction: Volume3D,
    /// Secondary variable some methods also expose (e.g. the last data
    /// iterate `u_1` of the splitting solvers).
    pub aux_reconstruction: Option<Volume3D>,
    pub iterations: Vec<IterationRecord>,
    pub method_id: String,
    pub params: BTreeMap<String, String>,
}

impl SolverReport {
    pub fn new(method_id: impl Into<String>, reconstruction: Volume3D) -> Self {
        SolverReport {
            reconstruction,
            aux_reconstruction: None,
            iterations: Vec::new(),
            method_id: method_id.into(),
            params: BTreeMap::new(),
        }
    }

    pub fn with_param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vectorize_single_voxel() {
        let v = Volume3D::new((1, 1, 1), [1.0; 3], vec![5.0]).unwrap();
        assert_eq!(vectorize(&v).as_slice(), &[5.0]);
    }

    #[test]
    fn vectorize_line_preserves_order() {
        let v = Volume3D::new((2, 1, 1), [1.0; 3], vec![3.0, 7.0]).unwrap();
        assert_eq!(vectorize(&v).as_slice(), &[3.0, 7.0]);
    }

    #[test]
    fn vectorize_column_major_layout() {
        // Hand oracle: on a 2x2x1 grid the linear order is
        // (0,0,0), (1,0,0), (0,1,0), (1,1,0).
        let mut v = Volume3D::zeros((2, 2, 1));
        v.set(1, 0, 0, 1.0);
        assert_eq!(vectorize(&v).as_slice(), &[0.0, 1.0, 0.0, 0.0]);
    }

    #[test]
    fn devectorize_roundtrip() {
        let v = Volume3D::from_fn((3, 4, 2), |x, y, z| (x + 10 * y + 100 * z) as f64);
        let u = vectorize(&v);
        let w = devectorize(u.as_slice(), (3, 4, 2)).unwrap();
        assert_eq!(v.data(), w.data());
        assert_eq!(vectorize(&w), u);
    }

    #[test]
    fn devectorize_single() {
        let v = devectorize(&[5.0], (1, 1, 1)).unwrap();
        assert_eq!(v.get(0, 0, 0), 5.0);
    }

    #[test]
    fn devectorize_places_unit() {
        let v = devectorize(&[0.0, 1.0, 0.0, 0.0], (2, 2, 1)).unwrap();
        assert_eq!(v.get(1, 0, 0), 1.0);
        assert_eq!(v.get(0, 0, 0), 0.0);
        assert_eq!(v.get(0, 1, 0), 0.0);
    }

    #[test]
    fn devectorize_length_mismatch() {
        assert!(devectorize(&[1.0, 2.0], (3, 1, 1)).is_err());
    }

    #[test]
    fn svd_factors_reject_increasing_sigma() {
        let u = DMatrix::<f64>::identity(3, 2);
        let v = DMatrix::<f64>::identity(4, 2);
        let s = DVector::from_vec(vec![1.0, 2.0]);
        assert!(SvdFactors::new(u.clone(), s, v.clone()).is_err());
        let s = DVector::from_vec(vec![2.0, 1.0]);
        assert!(SvdFactors::new(u, s, v).is_ok());
    }

    #[test]
    fn svd_factors_reject_nonpositive() {
        let u = DMatrix::<f64>::identity(3, 2);
        let v = DMatrix::<f64>::identity(4, 2);
        let s = DVector::from_vec(vec![1.0, 0.0]);
        assert!(SvdFactors::new(u, s, v).is_err());
    }

    #[test]
    fn system_matrix_checks_grid() {
        let entries = DMatrix::<f64>::zeros(4, 8);
        let meta = vec![
            RowMeta { channel: 1, frequency_hz: 1e5, part: Part::Real };
            4
        ];
        assert!(SystemMatrix::new(
            entries.clone(),
            meta.clone(),
            100.0,
            VolumeGrid::isotropic((2, 2, 2), 1.0),
        )
        .is_ok());
        assert!(SystemMatrix::new(
            entries,
            meta,
            100.0,
            VolumeGrid::isotropic((3, 2, 2), 1.0),
        )
        .is_err());
    }
}
