use crate::SchemeError;
use hexmesh::{HexCell, Mesh, Vec3};

/// Per-cell, per-face scheme coefficients `s_i = lambda_H gamma^T f_i`
/// (components `s_i^m = lambda_H f_i^n gamma_n^m`, W/K), the cached normal
/// components `s_i^[i/2]`, the heat capacities `c_v V`, and a boundary-face
/// mask used by the stepping kernels.
#[derive(Debug, Clone, PartialEq)]
pub struct SchemeCoefficients {
    pub s: Vec<[Vec3; 6]>,
    pub s_normal: Vec<[f64; 6]>,
    /// `c_v * V` per cell (J/K).
    pub heat_capacity: Vec<f64>,
    /// True where (cell, face) is an outer boundary face.
    pub boundary_mask: Vec<[bool; 6]>,
}

/// Computes the scheme coefficients for every cell of the mesh.
pub fn compute_coefficients(mesh: &Mesh) -> Result<SchemeCoefficients, SchemeError> {
    let mut s = Vec::with_capacity(mesh.cells.len());
    let mut s_normal = Vec::with_capacity(mesh.cells.len());
    let mut heat_capacity = Vec::with_capacity(mesh.cells.len());
    for cell in &mesh.cells {
        let mut sc = [Vec3::zeros(); 6];
        let mut sn = [0.0; 6];
        for iota in 0..6 {
            sc[iota] = cell.material.lambda_h * (cell.gamma.transpose() * cell.face_vectors[iota]);
            sn[iota] = sc[iota][iota / 2];
        }
        s.push(sc);
        s_normal.push(sn);
        heat_capacity.push(cell.material.c_v * cell.volume);
    }
    let mut boundary_mask = vec![[false; 6]; mesh.cells.len()];
    for b in &mesh.boundaries {
        boundary_mask[b.cell][b.face] = true;
    }
    Ok(SchemeCoefficients {
        s,
        s_normal,
        heat_capacity,
        boundary_mask,
    })
}

/// Finite temperature-difference vector of the static linear field
/// `T(x) = g . x` at face `iota`: normal component from the node-to-face
/// difference, tangential components from opposite-face differences. The
/// contraction with `gamma` then recovers `g` exactly.
pub fn gradient_components_linear(cell: &HexCell, g: &Vec3, iota: usize) -> Vec3 {
    let t_node = g.dot(&cell.node_point());
    let t_face: Vec<f64> = (0..6).map(|f| g.dot(&cell.face_centroid(f))).collect();
    let mut nabla = Vec3::zeros();
    for mu in 0..3 {
        if mu == iota / 2 {
            let sign = if iota % 2 == 0 { 2.0 } else { -2.0 };
            nabla[mu] = sign * (t_node - t_face[iota]);
        } else {
            nabla[mu] = t_face[2 * mu + 1] - t_face[2 * mu];
        }
    }
    nabla
}

/// Recovers global gradient coordinates from node-basis components.
pub fn recovered_gradient(cell: &HexCell, nabla_b: &Vec3) -> Vec3 {
    cell.gamma * nabla_b
}

/// Heat current into the cell through one face, `J = s . nabla_b`.
pub fn face_current(s_face: &Vec3, nabla_b: &Vec3) -> f64 {
    s_face.dot(nabla_b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hexmesh::sample::random_cell;
    use hexmesh::{build_structured_mesh, HexCell, Material, StructuredSpec};
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn unit_cube_coefficients_equal_face_vectors() {
        let mesh = build_structured_mesh(&StructuredSpec::uniform(
            1,
            1,
            1,
            1.0,
            Material::new(1.0, 1.0).unwrap(),
        ))
        .unwrap();
        let coeffs = compute_coefficients(&mesh).unwrap();
        for iota in 0..6 {
            assert!((coeffs.s[0][iota] - mesh.cells[0].face_vectors[iota]).norm() < 1e-15);
            assert!((coeffs.s_normal[0][iota].abs() - 1.0).abs() < 1e-15);
            for mu in 0..3 {
                if mu != iota / 2 {
                    assert!(coeffs.s[0][iota][mu].abs() < 1e-15);
                }
            }
        }
        assert!((coeffs.heat_capacity[0] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn coefficients_scale_linearly_with_conductivity() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        let v = hexmesh::sample::jittered_box_vertices(&mut rng, 0.25);
        let a = HexCell::from_vertices(v, Material::new(1.3, 1.0).unwrap()).unwrap();
        let b = HexCell::from_vertices(v, Material::new(2.6, 1.0).unwrap()).unwrap();
        for iota in 0..6 {
            let sa = a.material.lambda_h * (a.gamma.transpose() * a.face_vectors[iota]);
            let sb = b.material.lambda_h * (b.gamma.transpose() * b.face_vectors[iota]);
            assert!((sb - 2.0 * sa).norm() < 1e-12 * sa.norm().max(1.0));
        }
    }

    #[test]
    fn flux_sign_oracle_linear_field() {
        // For T(x) = g.x the face current equals lambda <f, g> on every
        // face; for a box cell it is positive exactly when heat flows in.
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        for _ in 0..100 {
            let lambda = rng.random_range(0.2..5.0);
            let cell = random_cell(&mut rng, 0.25, Material::new(lambda, 1.0).unwrap());
            let g = Vec3::new(
                rng.random_range(-2.0..2.0),
                rng.random_range(-2.0..2.0),
                rng.random_range(-2.0..2.0),
            );
            for iota in 0..6 {
                let s = cell.material.lambda_h * (cell.gamma.transpose() * cell.face_vectors[iota]);
                let nabla = gradient_components_linear(&cell, &g, iota);
                let current = face_current(&s, &nabla);
                let expected = lambda * cell.face_vectors[iota].dot(&g);
                assert!(
                    (current - expected).abs() <= 1e-12 * expected.abs().max(1.0),
                    "face {iota}: {current} vs {expected}"
                );
                let recovered = recovered_gradient(&cell, &nabla);
                assert!((recovered - g).norm() < 1e-12);
            }
        }

        // Box cell, hotter outside the high-x face: heat flows in, J > 0.
        let cube = build_structured_mesh(&StructuredSpec::uniform(
            1,
            1,
            1,
            1.0,
            Material::new(1.0, 1.0).unwrap(),
        ))
        .unwrap();
        let cell = &cube.cells[0];
        let g = Vec3::new(1.0, 0.0, 0.0);
        let s1 = cell.material.lambda_h * (cell.gamma.transpose() * cell.face_vectors[1]);
        let j_in = face_current(&s1, &gradient_components_linear(cell, &g, 1));
        assert!(j_in > 0.0);
    }

    #[test]
    fn sheared_cell_flux_identity() {
        // Shear x -> x + 0.3y, T(x) = 2x + 3y + 4z.
        let mut v = [Vec3::zeros(); 8];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    let p = Vec3::new(i as f64, j as f64, k as f64);
                    v[i + 2 * j + 4 * k] = Vec3::new(p.x + 0.3 * p.y, p.y, p.z);
                }
            }
        }
        let lambda = 1.7;
        let cell = HexCell::from_vertices(v, Material::new(lambda, 1.0).unwrap()).unwrap();
        let g = Vec3::new(2.0, 3.0, 4.0);
        for iota in 0..6 {
            let s = lambda * (cell.gamma.transpose() * cell.face_vectors[iota]);
            let current = face_current(&s, &gradient_components_linear(&cell, &g, iota));
            let expected = lambda * cell.face_vectors[iota].dot(&g);
            assert!((current - expected).abs() < 1e-12 * expected.abs().max(1.0));
        }
    }
}
