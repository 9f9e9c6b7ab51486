//! Random cell and mesh generators for tests and verification harnesses.

use crate::cell::{corner, HexCell, Material};
use crate::mesh::{BoundaryCondition, BoundaryFace, Link, Mesh};
use crate::{Mat3, Vec3};
use rand::Rng;

/// Unit-cube corners jittered by up to `amplitude` in every coordinate.
/// Faces are generally non-planar. Amplitudes up to ~0.3 stay non-degenerate.
pub fn jittered_box_vertices<R: Rng>(rng: &mut R, amplitude: f64) -> [Vec3; 8] {
    let mut v = [Vec3::zeros(); 8];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                let d = Vec3::new(
                    rng.random_range(-amplitude..amplitude),
                    rng.random_range(-amplitude..amplitude),
                    rng.random_range(-amplitude..amplitude),
                );
                v[corner(i, j, k)] = Vec3::new(i as f64, j as f64, k as f64) + d;
            }
        }
    }
    v
}

/// Random hexahedron with planar faces, built as the corner intersections
/// of three pairs of tilted planes. Planarity makes the cell volume
/// decomposition-independent.
pub fn planar_hex_vertices<R: Rng>(rng: &mut R) -> [Vec3; 8] {
    loop {
        let mut normals = [Vec3::zeros(); 6];
        let mut offsets = [0.0f64; 6];
        for axis in 0..3 {
            for side in 0..2 {
                let mut n = Vec3::new(
                    rng.random_range(-0.2..0.2),
                    rng.random_range(-0.2..0.2),
                    rng.random_range(-0.2..0.2),
                );
                n[axis] = 1.0;
                normals[2 * axis + side] = n;
                offsets[2 * axis + side] = side as f64 + rng.random_range(-0.1..0.1);
            }
        }
        let mut v = [Vec3::zeros(); 8];
        let mut ok = true;
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    let a = Mat3::from_rows(&[
                        normals[i].transpose(),
                        normals[2 + j].transpose(),
                        normals[4 + k].transpose(),
                    ]);
                    let rhs = Vec3::new(offsets[i], offsets[2 + j], offsets[4 + k]);
                    match a.lu().solve(&rhs) {
                        Some(p) => v[corner(i, j, k)] = p,
                        None => ok = false,
                    }
                }
            }
        }
        if ok {
            return v;
        }
    }
}

/// Random valid cell (jittered box), re-drawn until construction succeeds.
pub fn random_cell<R: Rng>(rng: &mut R, amplitude: f64, material: Material) -> HexCell {
    loop {
        if let Ok(cell) = HexCell::from_vertices(jittered_box_vertices(rng, amplitude), material) {
            return cell;
        }
    }
}

/// Two conforming cells sharing the x-interface of a jittered 2x1x1 block,
/// with all outer faces adiabatic. Materials may differ per cell.
pub fn two_cell_mesh<R: Rng>(
    rng: &mut R,
    amplitude: f64,
    materials: [Material; 2],
) -> Mesh {
    loop {
        // Jitter the 12 grid vertices of a 2x1x1 block; shared interface
        // corners are drawn once so the mesh is conforming by construction.
        let mut pts = std::collections::HashMap::new();
        for ix in 0..3usize {
            for jy in 0..2usize {
                for kz in 0..2usize {
                    let d = Vec3::new(
                        rng.random_range(-amplitude..amplitude),
                        rng.random_range(-amplitude..amplitude),
                        rng.random_range(-amplitude..amplitude),
                    );
                    pts.insert(
                        (ix, jy, kz),
                        Vec3::new(ix as f64, jy as f64, kz as f64) + d,
                    );
                }
            }
        }
        let cell_at = |ix0: usize, material: Material| -> Result<HexCell, _> {
            let mut v = [Vec3::zeros(); 8];
            for i in 0..2 {
                for j in 0..2 {
                    for k in 0..2 {
                        v[corner(i, j, k)] = pts[&(ix0 + i, j, k)];
                    }
                }
            }
            HexCell::from_vertices(v, material)
        };
        let (Ok(a), Ok(b)) = (cell_at(0, materials[0]), cell_at(1, materials[1])) else {
            continue;
        };
        let links = vec![Link {
            cell_a: 0,
            face_a: 1,
            cell_b: 1,
            face_b: 0,
        }];
        let mut boundaries = Vec::new();
        for cell in 0..2 {
            for face in 0..6 {
                if (cell == 0 && face == 1) || (cell == 1 && face == 0) {
                    continue;
                }
                boundaries.push(BoundaryFace {
                    cell,
                    face,
                    condition: BoundaryCondition::Adiabatic,
                });
            }
        }
        if let Ok(mesh) = Mesh::new(vec![a, b], links, boundaries) {
            return mesh;
        }
    }
}
