//! Single-file container for the core types (extension `.mrx`).
//!
//! Layout:
//!
//! ```text
//! bytes 0..8    magic b"MRXDATA1"
//! bytes 8..16   header length H as u64 little-endian
//! bytes 16..16+H  UTF-8 JSON header (version, objects, tensors)
//! bytes 16+H..  tensor payloads, little-endian IEEE-754 float64
//! ```
//!
//! The header lists named objects and the named tensors backing them.
//! Tensor offsets are relative to the start of the payload section and
//! tensors are stored row-major. All numeric payloads are float64, so a
//! save/load round trip is bit-exact. The full schema is documented in
//! `docs/container-format.md` with a golden fixture under
//! `crates/core/tests/fixtures/`.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::types::{
    IterationRecord, Part, RowMeta, ScanData, SolverReport, SvdFactors, SystemMatrix, Volume3D,
    VolumeGrid,
};

pub const MAGIC: &[u8; 8] = b"MRXDATA1";
pub const FORMAT_VERSION: u32 = 1;

/// Any of the core types, as stored in a container.
#[derive(Debug, Clone, PartialEq)]
pub enum Object {
    Volume(Volume3D),
    Matrix(SystemMatrix),
    Scan(ScanData),
    Svd(SvdFactors),
    Report(SolverReport),
}

impl Object {
    fn kind(&self) -> &'static str {
        match self {
            Object::Volume(_) => "volume3d",
            Object::Matrix(_) => "system_matrix",
            Object::Scan(_) => "scan_data",
            Object::Svd(_) => "svd_factors",
            Object::Report(_) => "solver_report",
        }
    }
}

/// An ordered set of named objects loaded from or destined for one file.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Container {
    pub entries: Vec<(String, Object)>,
}

impl Container {
    pub fn new() -> Self {
        Container::default()
    }

    pub fn push(&mut self, name: impl Into<String>, object: Object) {
        self.entries.push((name.into(), object));
    }

    pub fn get(&self, name: &str) -> Option<&Object> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, o)| o)
    }

    fn lookup<'a, T, F: Fn(&'a Object) -> Option<&'a T>>(
        &'a self,
        name: Option<&str>,
        pick: F,
        kind: &str,
    ) -> Result<&'a T> {
        let found = match name {
            Some(n) => self.get(n).and_then(pick),
            None => self.entries.iter().find_map(|(_, o)| pick(o)),
        };
        found.ok_or_else(|| {
            Error::Format(format!(
                "no {kind} object {} in container",
                name.map(|n| format!("named '{n}'")).unwrap_or_else(|| "present".into())
            ))
        })
    }

    /// First volume in the container, or the one with the given name.
    pub fn volume(&self, name: Option<&str>) -> Result<&Volume3D> {
        self.lookup(
            name,
            |o| match o {
                Object::Volume(v) => Some(v),
                _ => None,
            },
            "volume3d",
        )
    }

    pub fn matrix(&self, name: Option<&str>) -> Result<&SystemMatrix> {
        self.lookup(
            name,
            |o| match o {
                Object::Matrix(m) => Some(m),
                _ => None,
            },
            "system_matrix",
        )
    }

    pub fn scan(&self, name: Option<&str>) -> Result<&ScanData> {
        self.lookup(
            name,
            |o| match o {
                Object::Scan(s) => Some(s),
                _ => None,
            },
            "scan_data",
        )
    }

    pub fn svd(&self, name: Option<&str>) -> Result<&SvdFactors> {
        self.lookup(
            name,
            |o| match o {
                Object::Svd(s) => Some(s),
                _ => None,
            },
            "svd_factors",
        )
    }

    pub fn report(&self, name: Option<&str>) -> Result<&SolverReport> {
        self.lookup(
            name,
            |o| match o {
                Object::Report(r) => Some(r),
                _ => None,
            },
            "solver_report",
        )
    }

    pub fn volumes(&self) -> impl Iterator<Item = (&str, &Volume3D)> {
        self.entries.iter().filter_map(|(n, o)| match o {
            Object::Volume(v) => Some((n.as_str(), v)),
            _ => None,
        })
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, encode(&self.entries)?)?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let bytes = fs::read(path)?;
        Ok(Container {
            entries: decode(&bytes)?,
        })
    }
}

/// Save named objects to a container file.
pub fn save_container(path: impl AsRef<Path>, objects: &[(String, Object)]) -> Result<()> {
    fs::write(path, encode(objects)?)?;
    Ok(())
}

/// Load every object from a container file.
pub fn load_container(path: impl AsRef<Path>) -> Result<Vec<(String, Object)>> {
    decode(&fs::read(path)?)
}

#[derive(Serialize, Deserialize)]
struct Header {
    version: u32,
    objects: Vec<ObjectMeta>,
    tensors: Vec<TensorMeta>,
}

#[derive(Serialize, Deserialize)]
struct TensorMeta {
    name: String,
    shape: Vec<usize>,
    dtype: String,
    offset: u64,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum ObjectMeta {
    Volume3d {
        name: String,
        voxel_size_mm: [f64; 3],
    },
    SystemMatrix {
        name: String,
        delta_concentration: f64,
        grid_dims: [usize; 3],
        grid_voxel_size_mm: [f64; 3],
    },
    ScanData {
        name: String,
        n_repetitions: u32,
        has_background_positions: bool,
        has_row_positions: bool,
    },
    SvdFactors {
        name: String,
    },
    SolverReport {
        name: String,
        method_id: String,
        params: BTreeMap<String, String>,
        voxel_size_mm: [f64; 3],
        has_aux: bool,
    },
}

struct Writer {
    tensors: Vec<TensorMeta>,
    payload: Vec<u8>,
}

impl Writer {
    fn push(&mut self, name: String, shape: Vec<usize>, values: impl Iterator<Item = f64>) {
        let offset = self.payload.len() as u64;
        let mut count = 0usize;
        for v in values {
            self.payload.extend_from_slice(&v.to_le_bytes());
            count += 1;
        }
        debug_assert_eq!(count, shape.iter().product::<usize>());
        self.tensors.push(TensorMeta {
            name,
            shape,
            dtype: "f64".into(),
            offset,
        });
    }

    fn push_matrix(&mut self, name: String, m: &DMatrix<f64>) {
        let (r, c) = m.shape();
        self.push(
            name,
            vec![r, c],
            (0..r).flat_map(move |i| (0..c).map(move |j| m[(i, j)])),
        );
    }
}

fn encode(objects: &[(String, Object)]) -> Result<Vec<u8>> {
    let mut w = Writer {
        tensors: Vec::new(),
        payload: Vec::new(),
    };
    let mut metas = Vec::with_capacity(objects.len());
    for (name, object) in objects {
        match object {
            Object::Volume(v) => {
                let (n1, n2, n3) = v.dims();
                w.push(
                    format!("{name}/data"),
                    vec![n1, n2, n3],
                    v.data().iter().cloned(),
                );
                metas.push(ObjectMeta::Volume3d {
                    name: name.clone(),
                    voxel_size_mm: v.voxel_size_mm(),
                });
            }
            Object::Matrix(a) => {
                w.push_matrix(format!("{name}/entries"), a.entries());
                w.push(
                    format!("{name}/row_channel"),
                    vec![a.rows()],
                    a.row_meta().iter().map(|m| m.channel as f64),
                );
                w.push(
                    format!("{name}/row_frequency_hz"),
                    vec![a.rows()],
                    a.row_meta().iter().map(|m| m.frequency_hz),
                );
                w.push(
                    format!("{name}/row_part"),
                    vec![a.rows()],
                    a.row_meta().iter().map(|m| match m.part {
                        Part::Real => 0.0,
                        Part::Imag => 1.0,
                    }),
                );
                let d = a.grid.dims;
                metas.push(ObjectMeta::SystemMatrix {
                    name: name.clone(),
                    delta_concentration: a.delta_concentration,
                    grid_dims: [d.0, d.1, d.2],
                    grid_voxel_size_mm: a.grid.voxel_size_mm,
                });
            }
            Object::Scan(s) => {
                w.push(
                    format!("{name}/values"),
                    vec![s.len()],
                    s.values.iter().cloned(),
                );
                w.push(
                    format!("{name}/backgrounds"),
                    vec![s.background_scans.len(), s.len()],
                    s.background_scans.iter().flat_map(|b| b.iter().cloned()),
                );
                if let Some(p) = &s.background_positions {
                    w.push(
                        format!("{name}/background_positions"),
                        vec![p.len()],
                        p.iter().cloned(),
                    );
                }
                if let Some(p) = &s.row_positions {
                    w.push(
                        format!("{name}/row_positions"),
                        vec![p.len()],
                        p.iter().cloned(),
                    );
                }
                metas.push(ObjectMeta::ScanData {
                    name: name.clone(),
                    n_repetitions: s.n_repetitions,
                    has_background_positions: s.background_positions.is_some(),
                    has_row_positions: s.row_positions.is_some(),
                });
            }
            Object::Svd(f) => {
                w.push_matrix(format!("{name}/u_k"), f.u_k());
                w.push(
                    format!("{name}/sigma_k"),
                    vec![f.rank()],
                    f.sigma_k().iter().cloned(),
                );
                w.push_matrix(format!("{name}/v_k"), f.v_k());
                metas.push(ObjectMeta::SvdFactors { name: name.clone() });
            }
            Object::Report(r) => {
                let (n1, n2, n3) = r.reconstruction.dims();
                w.push(
                    format!("{name}/reconstruction"),
                    vec![n1, n2, n3],
                    r.reconstruction.data().iter().cloned(),
                );
                if let Some(aux) = &r.aux_reconstruction {
                    let (a1, a2, a3) = aux.dims();
                    w.push(
                        format!("{name}/aux_reconstruction"),
                        vec![a1, a2, a3],
                        aux.data().iter().cloned(),
                    );
                }
                w.push(
                    format!("{name}/trace"),
                    vec![r.iterations.len(), 5],
                    r.iterations.iter().flat_map(|it| {
                        [
                            it.mu,
                            it.sigma,
                            it.data_residual,
                            it.cg_iterations as f64,
                            it.wall_ms,
                        ]
                    }),
                );
                metas.push(ObjectMeta::SolverReport {
                    name: name.clone(),
                    method_id: r.method_id.clone(),
                    params: r.params.clone(),
                    voxel_size_mm: r.reconstruction.voxel_size_mm(),
                    has_aux: r.aux_reconstruction.is_some(),
                });
            }
        }
    }

    let header = serde_json::to_vec(&Header {
        version: FORMAT_VERSION,
        objects: metas,
        tensors: w.tensors,
    })?;
    let mut out = Vec::with_capacity(16 + header.len() + w.payload.len());
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&(header.len() as u64).to_le_bytes());
    out.extend_from_slice(&header);
    out.extend_from_slice(&w.payload);
    Ok(out)
}

struct Reader<'a> {
    tensors: &'a [TensorMeta],
    payload: &'a [u8],
}

impl<'a> Reader<'a> {
    fn tensor(&self, name: &str) -> Result<(&TensorMeta, Vec<f64>)> {
        let meta = self
            .tensors
            .iter()
            .find(|t| t.name == name)
            .ok_or_else(|| Error::Format(format!("missing tensor '{name}'")))?;
        if meta.dtype != "f64" {
            return Err(Error::Format(format!(
                "tensor '{name}' has unsupported dtype '{}'",
                meta.dtype
            )));
        }
        let count: usize = meta.shape.iter().product();
        let start = meta.offset as usize;
        let end = start + count * 8;
        if end > self.payload.len() {
            return Err(Error::Truncated(format!(
                "tensor '{name}' needs payload bytes {start}..{end}, have {}",
                self.payload.len()
            )));
        }
        let values = self.payload[start..end]
            .chunks_exact(8)
            .map(|c| f64::from_le_bytes(c.try_into().unwrap()))
            .collect();
        Ok((meta, values))
    }

    fn vector(&self, name: &str) -> Result<DVector<f64>> {
        let (meta, values) = self.tensor(name)?;
        if meta.shape.len() != 1 {
            return Err(Error::Format(format!(
                "tensor '{name}' is not a vector: shape {:?}",
                meta.shape
            )));
        }
        Ok(DVector::from_vec(values))
    }

    fn matrix(&self, name: &str) -> Result<DMatrix<f64>> {
        let (meta, values) = self.tensor(name)?;
        if meta.shape.len() != 2 {
            return Err(Error::Format(format!(
                "tensor '{name}' is not a matrix: shape {:?}",
                meta.shape
            )));
        }
        Ok(DMatrix::from_row_slice(meta.shape[0], meta.shape[1], &values))
    }

    fn volume(&self, name: &str, voxel_size_mm: [f64; 3]) -> Result<Volume3D> {
        let (meta, values) = self.tensor(name)?;
        if meta.shape.len() != 3 {
            return Err(Error::Format(format!(
                "tensor '{name}' is not a volume: shape {:?}",
                meta.shape
            )));
        }
        Volume3D::new(
            (meta.shape[0], meta.shape[1], meta.shape[2]),
            voxel_size_mm,
            values,
        )
    }
}

fn decode(bytes: &[u8]) -> Result<Vec<(String, Object)>> {
    if bytes.len() < 16 {
        return Err(Error::Truncated(format!(
            "file of {} bytes is shorter than the fixed 16-byte prelude",
            bytes.len()
        )));
    }
    if &bytes[..8] != MAGIC {
        return Err(Error::Format(format!(
            "bad magic {:02x?}, expected {:02x?}",
            &bytes[..8],
            MAGIC
        )));
    }
    let header_len = u64::from_le_bytes(bytes[8..16].try_into().unwrap()) as usize;
    let header_end = 16usize
        .checked_add(header_len)
        .filter(|&e| e <= bytes.len())
        .ok_or_else(|| {
            Error::Truncated(format!(
                "header of {header_len} bytes does not fit in file of {} bytes",
                bytes.len()
            ))
        })?;
    let header: Header = serde_json::from_slice(&bytes[16..header_end])
        .map_err(|e| Error::Format(format!("malformed header JSON: {e}")))?;
    if header.version != FORMAT_VERSION {
        return Err(Error::Version {
            found: header.version,
            supported: FORMAT_VERSION,
        });
    }
    let r = Reader {
        tensors: &header.tensors,
        payload: &bytes[header_end..],
    };

    let mut out = Vec::with_capacity(header.objects.len());
    for meta in &header.objects {
        let (name, object) = match meta {
            ObjectMeta::Volume3d {
                name,
                voxel_size_mm,
            } => {
                let v = r.volume(&format!("{name}/data"), *voxel_size_mm)?;
                (name.clone(), Object::Volume(v))
            }
            ObjectMeta::SystemMatrix {
                name,
                delta_concentration,
                grid_dims,
                grid_voxel_size_mm,
            } => {
                let entries = r.matrix(&format!("{name}/entries"))?;
                let channel = r.vector(&format!("{name}/row_channel"))?;
                let freq = r.vector(&format!("{name}/row_frequency_hz"))?;
                let part = r.vector(&format!("{name}/row_part"))?;
                if channel.len() != entries.nrows()
                    || freq.len() != entries.nrows()
                    || part.len() != entries.nrows()
                {
                    return Err(Error::Format(format!(
                        "row metadata of '{name}' does not match {} rows",
                        entries.nrows()
                    )));
                }
                let row_meta = (0..entries.nrows())
                    .map(|i| {
                        Ok(RowMeta {
                            channel: channel[i] as u8,
                            frequency_hz: freq[i],
                            part: match part[i] {
                                x if x == 0.0 => Part::Real,
                                x if x == 1.0 => Part::Imag,
                                other => {
                                    return Err(Error::Format(format!(
                                        "row {i} of '{name}' has invalid part tag {other}"
                                    )))
                                }
                            },
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                let grid = VolumeGrid {
                    dims: (grid_dims[0], grid_dims[1], grid_dims[2]),
                    voxel_size_mm: *grid_voxel_size_mm,
                };
                (
                    name.clone(),
                    Object::Matrix(SystemMatrix::new(
                        entries,
                        row_meta,
                        *delta_concentration,
                        grid,
                    )?),
                )
            }
            ObjectMeta::ScanData {
                name,
                n_repetitions,
                has_background_positions,
                has_row_positions,
            } => {
                let values = r.vector(&format!("{name}/values"))?;
                let (bmeta, bvals) = r.tensor(&format!("{name}/backgrounds"))?;
                if bmeta.shape.len() != 2 {
                    return Err(Error::Format(format!(
                        "backgrounds of '{name}' must be 2-D, got shape {:?}",
                        bmeta.shape
                    )));
                }
                let (nb, m) = (bmeta.shape[0], bmeta.shape[1]);
                let background_scans = (0..nb)
                    .map(|i| DVector::from_column_slice(&bvals[i * m..(i + 1) * m]))
                    .collect();
                let background_positions = if *has_background_positions {
                    Some(r.vector(&format!("{name}/background_positions"))?.as_slice().to_vec())
                } else {
                    None
                };
                let row_positions = if *has_row_positions {
                    Some(r.vector(&format!("{name}/row_positions"))?.as_slice().to_vec())
                } else {
                    None
                };
                (
                    name.clone(),
                    Object::Scan(ScanData {
                        values,
                        background_scans,
                        background_positions,
                        row_positions,
                        n_repetitions: *n_repetitions,
                    }),
                )
            }
            ObjectMeta::SvdFactors { name } => {
                let u_k = r.matrix(&format!("{name}/u_k"))?;
                let sigma_k = r.vector(&format!("{name}/sigma_k"))?;
                let v_k = r.matrix(&format!("{name}/v_k"))?;
                // SvdFactors::new re-validates the nonincreasing invariant on load.
                (name.clone(), Object::Svd(SvdFactors::new(u_k, sigma_k, v_k)?))
            }
            ObjectMeta::SolverReport {
                name,
                method_id,
                params,
                voxel_size_mm,
                has_aux,
            } => {
                let reconstruction = r.volume(&format!("{name}/reconstruction"), *voxel_size_mm)?;
                let aux_reconstruction = if *has_aux {
                    Some(r.volume(&format!("{name}/aux_reconstruction"), *voxel_size_mm)?)
                } else {
                    None
                };
                let (tmeta, tvals) = r.tensor(&format!("{name}/trace"))?;
                if tmeta.shape.len() != 2 || tmeta.shape[1] != 5 {
                    return Err(Error::Format(format!(
                        "trace of '{name}' must have shape [n, 5], got {:?}",
                        tmeta.shape
                    )));
                }
                let iterations = tvals
                    .chunks_exact(5)
                    .enumerate()
                    .map(|(k, c)| IterationRecord {
                        k,
                        mu: c[0],
                        sigma: c[1],
                        data_residual: c[2],
                        cg_iterations: c[3] as usize,
                        wall_ms: c[4],
                    })
                    .collect();
                (
                    name.clone(),
                    Object::Report(SolverReport {
                        reconstruction,
                        aux_reconstruction,
                        iterations,
                        method_id: method_id.clone(),
                        params: params.clone(),
                    }),
                )
            }
        };
        out.push((name, object));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_matrix() -> SystemMatrix {
        let entries = DMatrix::from_fn(6, 8, |i, j| (i * 13 + j) as f64 * 0.25 - 3.0);
        let row_meta = (0..6)
            .map(|i| RowMeta {
                channel: (i % 3 + 1) as u8,
                frequency_hz: 80e3 + i as f64 * 50e3,
                part: if i % 2 == 0 { Part::Real } else { Part::Imag },
            })
            .collect();
        SystemMatrix::new(entries, row_meta, 100.0, VolumeGrid::isotropic((2, 2, 2), 2.0)).unwrap()
    }

    #[test]
    fn roundtrip_volume() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("v.mrx");
        let v = Volume3D::from_fn((19, 19, 19), |x, y, z| {
            ((x * 3 + y * 7 + z * 11) as f64).sin()
        });
        let mut c = Container::new();
        c.push("vol", Object::Volume(v.clone()));
        c.save(&path).unwrap();
        let back = Container::load(&path).unwrap();
        assert_eq!(back.volume(Some("vol")).unwrap(), &v);
    }

    #[test]
    fn roundtrip_matrix_fieldwise() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("a.mrx");
        let a = sample_matrix();
        save_container(&path, &[("cal".into(), Object::Matrix(a.clone()))]).unwrap();
        let back = load_container(&path).unwrap();
        assert_eq!(back.len(), 1);
        match &back[0].1 {
            Object::Matrix(b) => {
                assert_eq!(b.rows(), a.rows());
                assert_eq!(b.cols(), a.cols());
                assert_eq!(b.entries(), a.entries());
                assert_eq!(b.row_meta(), a.row_meta());
                assert_eq!(b.delta_concentration, a.delta_concentration);
                assert_eq!(b.grid, a.grid);
            }
            other => panic!("expected matrix, got {}", other.kind()),
        }
    }

    #[test]
    fn corrupted_magic_is_format_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.mrx");
        let v = Volume3D::zeros((2, 2, 2));
        save_container(&path, &[("v".into(), Object::Volume(v))]).unwrap();
        let mut bytes = fs::read(&path).unwrap();
        bytes[0] ^= 0xff;
        fs::write(&path, &bytes).unwrap();
        match load_container(&path) {
            Err(Error::Format(_)) => {}
            other => panic!("expected format error, got {other:?}"),
        }
    }

    #[test]
    fn truncated_payload_is_truncation_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("short.mrx");
        let v = Volume3D::from_fn((4, 4, 4), |x, _, _| x as f64);
        save_container(&path, &[("v".into(), Object::Volume(v))]).unwrap();
        let bytes = fs::read(&path).unwrap();
        fs::write(&path, &bytes[..bytes.len() - 9]).unwrap();
        match load_container(&path) {
            Err(Error::Truncated(_)) => {}
            other => panic!("expected truncation error, got {other:?}"),
        }
    }

    #[test]
    fn version_mismatch_is_distinct_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("v2.mrx");
        let v = Volume3D::zeros((1, 1, 1));
        save_container(&path, &[("v".into(), Object::Volume(v))]).unwrap();
        let bytes = fs::read(&path).unwrap();
        let header_len = u64::from_le_bytes(bytes[8..16].try_into().unwrap()) as usize;
        let header = String::from_utf8(bytes[16..16 + header_len].to_vec()).unwrap();
        let bumped = header.replace("\"version\":1", "\"version\":9");
        assert_ne!(header, bumped);
        let mut out = Vec::new();
        out.extend_from_slice(&bytes[..8]);
        out.extend_from_slice(&(bumped.len() as u64).to_le_bytes());
        out.extend_from_slice(bumped.as_bytes());
        out.extend_from_slice(&bytes[16 + header_len..]);
        fs::write(&path, &out).unwrap();
        match load_container(&path) {
            Err(Error::Version { found: 9, .. }) => {}
            other => panic!("expected version error, got {other:?}"),
        }
    }

    #[test]
    fn svd_invariant_checked_on_load() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("svd.mrx");
        let f = SvdFactors::new(
            DMatrix::identity(4, 2),
            DVector::from_vec(vec![3.0, 1.0]),
            DMatrix::identity(5, 2),
        )
        .unwrap();
        save_container(&path, &[("f".into(), Object::Svd(f))]).unwrap();
        // Swap the two singular values in the payload to violate ordering.
        let mut bytes = fs::read(&path).unwrap();
        let header_len = u64::from_le_bytes(bytes[8..16].try_into().unwrap()) as usize;
        let header: Header = serde_json::from_slice(&bytes[16..16 + header_len]).unwrap();
        let sigma = header.tensors.iter().find(|t| t.name == "f/sigma_k").unwrap();
        let start = 16 + header_len + sigma.offset as usize;
        bytes[start..start + 8].copy_from_slice(&1.0f64.to_le_bytes());
        bytes[start + 8..start + 16].copy_from_slice(&3.0f64.to_le_bytes());
        fs::write(&path, &bytes).unwrap();
        assert!(load_container(&path).is_err());
    }
}
