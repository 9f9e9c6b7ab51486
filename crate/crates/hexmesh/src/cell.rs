use crate::error::GeometryError;
use crate::{Mat3, Vec3};

/// Heat-transport constants of one cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Material {
    /// Heat conductivity, W/(m K).
    pub lambda_h: f64,
    /// Volumetric heat capacity, J/(m^3 K).
    pub c_v: f64,
}

impl Material {
    pub fn new(lambda_h: f64, c_v: f64) -> Result<Self, GeometryError> {
        if !(lambda_h > 0.0) || !(c_v > 0.0) {
            return Err(GeometryError::InvalidMaterial { lambda_h, c_v });
        }
        Ok(Self { lambda_h, c_v })
    }
}

/// Corner index for bit triple (i, j, k): `i + 2j + 4k`.
#[inline]
pub const fn corner(i: usize, j: usize, k: usize) -> usize {
    i + 2 * j + 4 * k
}

/// Endpoint corner indices (from, to) of the 12 edges.
///
/// Edges 4m..4m+3 are the four edges parallel to local direction m, each
/// oriented from the 0-bit corner to the 1-bit corner. Within a family the
/// edges are ordered cyclically in the transverse bit pair (a, b) =
/// (direction m+1, direction m+2): (0,0), (1,0), (1,1), (0,1). This cyclic
/// order is what makes the face-vector formula below reproduce the exact
/// outward area vector of every planar face and close to zero over the cell.
pub const EDGE_ENDPOINTS: [(usize, usize); 12] = {
    const CYC: [(usize, usize); 4] = [(0, 0), (1, 0), (1, 1), (0, 1)];
    let mut out = [(0usize, 0usize); 12];
    let mut n = 0;
    while n < 4 {
        let (j, k) = CYC[n];
        out[n] = (corner(0, j, k), corner(1, j, k));
        let (k2, i2) = CYC[n];
        out[4 + n] = (corner(i2, 0, k2), corner(i2, 1, k2));
        let (i3, j3) = CYC[n];
        out[8 + n] = (corner(i3, j3, 0), corner(i3, j3, 1));
        n += 1;
    }
    out
};

/// Corner indices of the 6 faces. Face 2m is the low side along local
/// direction m, face 2m+1 the high side; corners are listed as a loop.
pub const FACE_CORNERS: [[usize; 4]; 6] = [
    [corner(0, 0, 0), corner(0, 0, 1), corner(0, 1, 1), corner(0, 1, 0)],
    [corner(1, 0, 0), corner(1, 1, 0), corner(1, 1, 1), corner(1, 0, 1)],
    [corner(0, 0, 0), corner(1, 0, 0), corner(1, 0, 1), corner(0, 0, 1)],
    [corner(0, 1, 0), corner(0, 1, 1), corner(1, 1, 1), corner(1, 1, 0)],
    [corner(0, 0, 0), corner(0, 1, 0), corner(1, 1, 0), corner(1, 0, 0)],
    [corner(0, 0, 1), corner(1, 0, 1), corner(1, 1, 1), corner(0, 1, 1)],
];

/// Geometry of one hexahedral mesh cell.
///
/// All derived quantities are computed once at construction:
/// edge vectors `e`, node vectors `b_m = 1/4 sum e_(4m+n)`, face vectors
/// `f_i = ((-1)^i/4)(e_(8+2i) + e_(9+2(i+(-1)^i))) ^ (e_(4+2i) + e_(5+2i))`
/// (indices cyclic mod 12), the basis matrix `beta` with columns `b_m`,
/// its adjoint inverse `gamma`, and the 6-tetrahedron corner volume.
#[derive(Debug, Clone, PartialEq)]
pub struct HexCell {
    pub vertices: [Vec3; 8],
    pub edges: [Vec3; 12],
    pub node_vectors: [Vec3; 3],
    pub face_vectors: [Vec3; 6],
    pub beta: Mat3,
    pub gamma: Mat3,
    pub volume: f64,
    pub material: Material,
}

pub(crate) fn edges_from_vertices(vertices: &[Vec3; 8]) -> [Vec3; 12] {
    let mut e = [Vec3::zeros(); 12];
    for (nu, (lo, hi)) in EDGE_ENDPOINTS.iter().enumerate() {
        e[nu] = vertices[*hi] - vertices[*lo];
    }
    e
}

pub(crate) fn node_vectors_from_edges(edges: &[Vec3; 12]) -> [Vec3; 3] {
    let mut b = [Vec3::zeros(); 3];
    for (mu, bm) in b.iter_mut().enumerate() {
        *bm = (edges[4 * mu] + edges[4 * mu + 1] + edges[4 * mu + 2] + edges[4 * mu + 3]) / 4.0;
    }
    b
}

pub(crate) fn face_vectors_from_edges(edges: &[Vec3; 12]) -> [Vec3; 6] {
    let mut f = [Vec3::zeros(); 6];
    for (iota, fi) in f.iter_mut().enumerate() {
        let sign = if iota % 2 == 0 { 1.0 } else { -1.0 };
        let i = iota as i64;
        let s = if iota % 2 == 0 { 1 } else { -1 };
        let a = edges[((8 + 2 * i) % 12) as usize] + edges[((9 + 2 * (i + s)).rem_euclid(12)) as usize];
        let b = edges[((4 + 2 * i) % 12) as usize] + edges[((5 + 2 * i) % 12) as usize];
        *fi = (sign / 4.0) * a.cross(&b);
    }
    f
}

fn signed_tet_volume(a: Vec3, b: Vec3, c: Vec3, d: Vec3) -> f64 {
    (b - a).cross(&(c - a)).dot(&(d - a)) / 6.0
}

/// Cell volume by decomposition into 6 tetrahedra around the main diagonal
/// `corner(0,0,0) -- corner(1,1,1)`.
pub(crate) fn volume_six_tet(v: &[Vec3; 8]) -> f64 {
    let c0 = v[corner(0, 0, 0)];
    let c7 = v[corner(1, 1, 1)];
    let ring = [
        v[corner(1, 0, 0)],
        v[corner(1, 1, 0)],
        v[corner(0, 1, 0)],
        v[corner(0, 1, 1)],
        v[corner(0, 0, 1)],
        v[corner(1, 0, 1)],
    ];
    let mut vol = 0.0;
    for n in 0..6 {
        vol += signed_tet_volume(c0, ring[n], ring[(n + 1) % 6], c7);
    }
    vol
}

impl HexCell {
    /// Builds a cell from its 8 corner positions (indexed `i + 2j + 4k`).
    ///
    /// Rejects degenerate geometry: non-positive volume, or
    /// `|det beta| < 1e-10 * (mean edge length)^3` which would make
    /// `gamma = (beta*)^-1` ill-conditioned.
    pub fn from_vertices(vertices: [Vec3; 8], material: Material) -> Result<Self, GeometryError> {
        let edges = edges_from_vertices(&vertices);
        let node_vectors = node_vectors_from_edges(&edges);
        let face_vectors = face_vectors_from_edges(&edges);
        let volume = volume_six_tet(&vertices);

        let thinnest_face = (0..6)
            .min_by(|&a, &b| {
                face_vectors[a]
                    .norm()
                    .partial_cmp(&face_vectors[b].norm())
                    .unwrap()
            })
            .unwrap();
        let shortest_edge = (0..12)
            .min_by(|&a, &b| edges[a].norm().partial_cmp(&edges[b].norm()).unwrap())
            .unwrap();

        if !(volume > 0.0) {
            return Err(GeometryError::NonPositiveVolume {
                volume,
                face: thinnest_face,
                edge: shortest_edge,
            });
        }

        let beta = Mat3::from_columns(&node_vectors);
        let mean_edge = edges.iter().map(|e| e.norm()).sum::<f64>() / 12.0;
        let threshold = 1e-10 * mean_edge.powi(3);
        let det = beta.determinant();
        if det.abs() < threshold {
            return Err(GeometryError::SingularBasis {
                det,
                threshold,
                face: thinnest_face,
                edge: shortest_edge,
            });
        }
        // gamma = (beta*)^-1; real entries, so the adjoint is the transpose.
        let gamma = beta
            .transpose()
            .try_inverse()
            .ok_or(GeometryError::SingularBasis {
                det,
                threshold,
                face: thinnest_face,
                edge: shortest_edge,
            })?;

        Ok(Self {
            vertices,
            edges,
            node_vectors,
            face_vectors,
            beta,
            gamma,
            volume,
            material,
        })
    }

    /// The cell's node point: centroid of the 8 corners.
    pub fn node_point(&self) -> Vec3 {
        self.vertices.iter().sum::<Vec3>() / 8.0
    }

    /// Centroid of the 4 corners of face `iota`.
    pub fn face_centroid(&self, iota: usize) -> Vec3 {
        FACE_CORNERS[iota]
            .iter()
            .map(|&c| self.vertices[c])
            .sum::<Vec3>()
            / 4.0
    }

    /// Positions of the 4 corners of face `iota`.
    pub fn face_corner_positions(&self, iota: usize) -> [Vec3; 4] {
        let c = FACE_CORNERS[iota];
        [
            self.vertices[c[0]],
            self.vertices[c[1]],
            self.vertices[c[2]],
            self.vertices[c[3]],
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_cube_vertices() -> [Vec3; 8] {
        let mut v = [Vec3::zeros(); 8];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    v[corner(i, j, k)] = Vec3::new(i as f64, j as f64, k as f64);
                }
            }
        }
        v
    }

    fn mat() -> Material {
        Material::new(1.0, 1.0).unwrap()
    }

    #[test]
    fn unit_cube_geometry() {
        let c = HexCell::from_vertices(unit_cube_vertices(), mat()).unwrap();
        assert_eq!(c.node_vectors[0], Vec3::new(1.0, 0.0, 0.0));
        assert_eq!(c.node_vectors[1], Vec3::new(0.0, 1.0, 0.0));
        assert_eq!(c.node_vectors[2], Vec3::new(0.0, 0.0, 1.0));
        for iota in 0..6 {
            assert!((c.face_vectors[iota].norm() - 1.0).abs() < 1e-15);
        }
        // Face vectors are the outward area vectors: low-x face points -x.
        assert_eq!(c.face_vectors[0], Vec3::new(-1.0, 0.0, 0.0));
        assert_eq!(c.face_vectors[1], Vec3::new(1.0, 0.0, 0.0));
        assert!((c.beta - Mat3::identity()).norm() < 1e-15);
        assert!((c.gamma - Mat3::identity()).norm() < 1e-15);
        assert!((c.volume - 1.0).abs() < 1e-15);
    }

    #[test]
    fn scaled_cube_homogeneity() {
        let v = unit_cube_vertices().map(|p| 2.0 * p);
        let c = HexCell::from_vertices(v, mat()).unwrap();
        assert!((c.volume - 8.0).abs() < 1e-12);
        for iota in 0..6 {
            assert!((c.face_vectors[iota].norm() - 4.0).abs() < 1e-12);
        }
        for mu in 0..3 {
            assert!((c.node_vectors[mu].norm() - 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn sheared_cube_keeps_volume_and_duality() {
        // Shear x -> x + 0.3 y preserves volume but makes beta non-diagonal.
        let v = unit_cube_vertices().map(|p| Vec3::new(p.x + 0.3 * p.y, p.y, p.z));
        let c = HexCell::from_vertices(v, mat()).unwrap();
        assert!((c.volume - 1.0).abs() < 1e-14);
        assert!(c.beta[(0, 1)].abs() > 0.29);
        let prod = c.gamma.transpose() * c.beta;
        assert!((prod - Mat3::identity()).norm() < 1e-12);
    }

    #[test]
    fn degenerate_cell_rejected() {
        // Collapse the cube to a plane: zero volume.
        let v = unit_cube_vertices().map(|p| Vec3::new(p.x, p.y, 0.0));
        let err = HexCell::from_vertices(v, mat()).unwrap_err();
        match err {
            GeometryError::NonPositiveVolume { volume, .. } => assert!(volume.abs() < 1e-15),
            other => panic!("expected NonPositiveVolume, got {other:?}"),
        }
    }

    #[test]
    fn inverted_cell_rejected() {
        // Mirror the cube: negative volume.
        let v = unit_cube_vertices().map(|p| Vec3::new(-p.x, p.y, p.z));
        assert!(matches!(
            HexCell::from_vertices(v, mat()),
            Err(GeometryError::NonPositiveVolume { .. })
        ));
    }

    #[test]
    fn invalid_material_rejected() {
        assert!(Material::new(0.0, 1.0).is_err());
        assert!(Material::new(1.0, -2.0).is_err());
    }
}
