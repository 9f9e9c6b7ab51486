use crate::cell::{corner, HexCell, Material};
use crate::error::MeshError;
use crate::Vec3;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Thermal condition attached to an outer face.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryCondition {
    /// No heat current through the face.
    Adiabatic,
    /// Face temperature held at `t_fix` (K) from time `onset` (s) on;
    /// adiabatic before the onset.
    FixedTemperature { t_fix: f64, onset: f64 },
}

/// Interior face-to-face adjacency: face `face_a` of `cell_a` coincides
/// with face `face_b` of `cell_b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Link {
    pub cell_a: usize,
    pub face_a: usize,
    pub cell_b: usize,
    pub face_b: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryFace {
    pub cell: usize,
    pub face: usize,
    pub condition: BoundaryCondition,
}

/// A conforming hexahedral mesh: cells, interior links, boundary tags.
///
/// Immutable after construction; every face belongs to exactly one link or
/// one boundary entry.
#[derive(Debug, Clone, PartialEq)]
pub struct Mesh {
    pub cells: Vec<HexCell>,
    pub links: Vec<Link>,
    pub boundaries: Vec<BoundaryFace>,
}

/// Linked faces must share their 4 corner positions to within this distance.
pub const CONFORMITY_TOL: f64 = 1e-9;

impl Mesh {
    /// Builds a mesh and checks the structural invariants.
    pub fn new(
        cells: Vec<HexCell>,
        links: Vec<Link>,
        boundaries: Vec<BoundaryFace>,
    ) -> Result<Self, MeshError> {
        let mesh = Self {
            cells,
            links,
            boundaries,
        };
        mesh.validate()?;
        Ok(mesh)
    }

    /// Checks that every face is assigned exactly once and that linked
    /// faces are conforming (shared corners to [`CONFORMITY_TOL`]).
    pub fn validate(&self) -> Result<(), MeshError> {
        let n = self.cells.len();
        let mut seen = vec![[false; 6]; n];
        let mut mark = |cell: usize, face: usize| -> Result<(), MeshError> {
            if face >= 6 {
                return Err(MeshError::FaceIndexOutOfRange { cell, face });
            }
            if seen[cell][face] {
                return Err(MeshError::DuplicateFace { cell, face });
            }
            seen[cell][face] = true;
            Ok(())
        };

        for (li, link) in self.links.iter().enumerate() {
            for cell in [link.cell_a, link.cell_b] {
                if cell >= n {
                    return Err(MeshError::DanglingLink {
                        link: li,
                        cell,
                        cells: n,
                    });
                }
            }
            mark(link.cell_a, link.face_a)?;
            mark(link.cell_b, link.face_b)?;

            let gap = face_gap(
                &self.cells[link.cell_a],
                link.face_a,
                &self.cells[link.cell_b],
                link.face_b,
            );
            if gap > CONFORMITY_TOL {
                return Err(MeshError::NonConformingLink {
                    link: li,
                    cell_a: link.cell_a,
                    face_a: link.face_a,
                    cell_b: link.cell_b,
                    face_b: link.face_b,
                    gap,
                });
            }
        }

        for (bi, b) in self.boundaries.iter().enumerate() {
            if b.cell >= n {
                return Err(MeshError::DanglingBoundary {
                    entry: bi,
                    cell: b.cell,
                    cells: n,
                });
            }
            mark(b.cell, b.face)?;
            if let BoundaryCondition::FixedTemperature { onset, .. } = b.condition {
                if onset < 0.0 {
                    return Err(MeshError::NegativeOnset { onset });
                }
            }
        }

        for (cell, faces) in seen.iter().enumerate() {
            for (face, &ok) in faces.iter().enumerate() {
                if !ok {
                    return Err(MeshError::UnassignedFace { cell, face });
                }
            }
        }
        Ok(())
    }

    /// Replaces the boundary condition on the given outer face.
    pub fn set_boundary(&mut self, cell: usize, face: usize, condition: BoundaryCondition) -> bool {
        for b in &mut self.boundaries {
            if b.cell == cell && b.face == face {
                b.condition = condition;
                return true;
            }
        }
        false
    }
}

/// Largest distance between matched corners of two faces (corners matched
/// greedily by nearest position).
fn face_gap(cell_a: &HexCell, face_a: usize, cell_b: &HexCell, face_b: usize) -> f64 {
    let pa = cell_a.face_corner_positions(face_a);
    let pb = cell_b.face_corner_positions(face_b);
    let mut worst = 0.0_f64;
    for a in &pa {
        let nearest = pb
            .iter()
            .map(|b| (a - b).norm())
            .fold(f64::INFINITY, f64::min);
        worst = worst.max(nearest);
    }
    worst
}

/// Parameters of the structured box-grid generator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StructuredSpec {
    pub nx: usize,
    pub ny: usize,
    pub nz: usize,
    /// Cell spacing in meters.
    pub spacing: f64,
    /// Interior-vertex jitter amplitude as a fraction of `spacing`.
    /// In-plane (x, y) jitter moves whole vertex columns; z jitter applies
    /// to vertices on strictly interior z-layers.
    pub jitter: f64,
    /// Shear x -> x + shear_xy * y applied after jitter.
    pub shear_xy: f64,
    pub seed: u64,
    pub material: Material,
}

impl StructuredSpec {
    pub fn uniform(nx: usize, ny: usize, nz: usize, spacing: f64, material: Material) -> Self {
        Self {
            nx,
            ny,
            nz,
            spacing,
            jitter: 0.0,
            shear_xy: 0.0,
            seed: 0,
            material,
        }
    }

    /// Cell index for grid coordinates (ix, iy, iz), row-major in x.
    pub fn cell_index(&self, ix: usize, iy: usize, iz: usize) -> usize {
        ix + self.nx * (iy + self.ny * iz)
    }
}

/// Builds a conforming structured mesh of `nx * ny * nz` cells.
///
/// With zero jitter and shear all cells are identical boxes. Outer faces
/// are tagged adiabatic. Face 2m is the low side along direction m, 2m+1
/// the high side, so the +x link of a cell joins its face 1 to face 0 of
/// the next cell.
pub fn build_structured_mesh(spec: &StructuredSpec) -> Result<Mesh, MeshError> {
    let StructuredSpec {
        nx,
        ny,
        nz,
        spacing,
        jitter,
        shear_xy,
        seed,
        material,
    } = *spec;
    if nx < 1 || ny < 1 || nz < 1 {
        return Err(MeshError::EmptyMesh { nx, ny, nz });
    }
    if !(spacing > 0.0) {
        return Err(MeshError::InvalidSpacing { spacing });
    }
    if !(0.0..0.45).contains(&jitter) {
        return Err(MeshError::InvalidJitter { jitter });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let amp = jitter * spacing;
    let vertex = |ix: usize, iy: usize, iz: usize| (ix, iy, iz);

    // Deterministic draw order: (ix, iy) columns outer, z inner.
    let mut points = std::collections::HashMap::new();
    for ix in 0..=nx {
        for iy in 0..=ny {
            let (dx, dy) = if amp > 0.0 && ix > 0 && ix < nx && iy > 0 && iy < ny {
                (rng.random_range(-amp..amp), rng.random_range(-amp..amp))
            } else {
                (0.0, 0.0)
            };
            for iz in 0..=nz {
                let dz = if amp > 0.0 && iz > 0 && iz < nz {
                    rng.random_range(-amp..amp)
                } else {
                    0.0
                };
                let x = ix as f64 * spacing + dx;
                let y = iy as f64 * spacing + dy;
                let z = iz as f64 * spacing + dz;
                points.insert(vertex(ix, iy, iz), Vec3::new(x + shear_xy * y, y, z));
            }
        }
    }

    let mut cells = Vec::with_capacity(nx * ny * nz);
    for iz in 0..nz {
        for iy in 0..ny {
            for ix in 0..nx {
                let mut v = [Vec3::zeros(); 8];
                for i in 0..2 {
                    for j in 0..2 {
                        for k in 0..2 {
                            v[corner(i, j, k)] = points[&vertex(ix + i, iy + j, iz + k)];
                        }
                    }
                }
                cells.push(HexCell::from_vertices(v, material)?);
            }
        }
    }

    let mut links = Vec::new();
    let mut boundaries = Vec::new();
    for iz in 0..nz {
        for iy in 0..ny {
            for ix in 0..nx {
                let c = spec.cell_index(ix, iy, iz);
                if ix + 1 < nx {
                    links.push(Link {
                        cell_a: c,
                        face_a: 1,
                        cell_b: spec.cell_index(ix + 1, iy, iz),
                        face_b: 0,
                    });
                }
                if iy + 1 < ny {
                    links.push(Link {
                        cell_a: c,
                        face_a: 3,
                        cell_b: spec.cell_index(ix, iy + 1, iz),
                        face_b: 2,
                    });
                }
                if iz + 1 < nz {
                    links.push(Link {
                        cell_a: c,
                        face_a: 5,
                        cell_b: spec.cell_index(ix, iy, iz + 1),
                        face_b: 4,
                    });
                }
                let mut bc = |face: usize| {
                    boundaries.push(BoundaryFace {
                        cell: c,
                        face,
                        condition: BoundaryCondition::Adiabatic,
                    })
                };
                if ix == 0 {
                    bc(0);
                }
                if ix + 1 == nx {
                    bc(1);
                }
                if iy == 0 {
                    bc(2);
                }
                if iy + 1 == ny {
                    bc(3);
                }
                if iz == 0 {
                    bc(4);
                }
                if iz + 1 == nz {
                    bc(5);
                }
            }
        }
    }

    Mesh::new(cells, links, boundaries)
}
