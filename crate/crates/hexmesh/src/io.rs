//! Line-oriented text format for meshes.
//!
//! ```text
//! dscmesh 1
//! vertices <count>
//! <x> <y> <z>                      # one per line, 17 significant digits
//! cells <count>
//! <c0> .. <c7> <lambda_h> <c_v>    # 8 vertex indices (corner order i+2j+4k)
//! links <count>
//! <cell_a> <face_a> <cell_b> <face_b>
//! boundaries <count>
//! <cell> <face> adiabatic
//! <cell> <face> fixed <t_fix> <onset>
//! ```
//!
//! Coordinates are written with 17 significant digits so that save -> load
//! reproduces every f64 exactly.

use crate::cell::{HexCell, Material};
use crate::error::ParseError;
use crate::mesh::{BoundaryCondition, BoundaryFace, Link, Mesh};
use crate::Vec3;
use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Serializes a mesh to the text format.
pub fn save_mesh_to_string(mesh: &Mesh) -> String {
    // Deduplicate shared corners bit-exactly so the vertex table is conforming.
    let mut index: HashMap<[u64; 3], usize> = HashMap::new();
    let mut vertices: Vec<Vec3> = Vec::new();
    let mut cell_refs: Vec<[usize; 8]> = Vec::new();
    for cell in &mesh.cells {
        let mut refs = [0usize; 8];
        for (slot, v) in cell.vertices.iter().enumerate() {
            let key = [v.x.to_bits(), v.y.to_bits(), v.z.to_bits()];
            let id = *index.entry(key).or_insert_with(|| {
                vertices.push(*v);
                vertices.len() - 1
            });
            refs[slot] = id;
        }
        cell_refs.push(refs);
    }

    let mut out = String::new();
    out.push_str("dscmesh 1\n");
    let _ = writeln!(out, "vertices {}", vertices.len());
    for v in &vertices {
        let _ = writeln!(out, "{} {} {}", fmt_f64(v.x), fmt_f64(v.y), fmt_f64(v.z));
    }
    let _ = writeln!(out, "cells {}", mesh.cells.len());
    for (cell, refs) in mesh.cells.iter().zip(&cell_refs) {
        for r in refs {
            let _ = write!(out, "{r} ");
        }
        let _ = writeln!(
            out,
            "{} {}",
            fmt_f64(cell.material.lambda_h),
            fmt_f64(cell.material.c_v)
        );
    }
    let _ = writeln!(out, "links {}", mesh.links.len());
    for l in &mesh.links {
        let _ = writeln!(out, "{} {} {} {}", l.cell_a, l.face_a, l.cell_b, l.face_b);
    }
    let _ = writeln!(out, "boundaries {}", mesh.boundaries.len());
    for b in &mesh.boundaries {
        match b.condition {
            BoundaryCondition::Adiabatic => {
                let _ = writeln!(out, "{} {} adiabatic", b.cell, b.face);
            }
            BoundaryCondition::FixedTemperature { t_fix, onset } => {
                let _ = writeln!(
                    out,
                    "{} {} fixed {} {}",
                    b.cell,
                    b.face,
                    fmt_f64(t_fix),
                    fmt_f64(onset)
                );
            }
        }
    }
    out
}

pub fn save_mesh(mesh: &Mesh, path: &Path) -> Result<(), ParseError> {
    std::fs::write(path, save_mesh_to_string(mesh))?;
    Ok(())
}

struct Lines<'a> {
    iter: std::str::Lines<'a>,
    number: usize,
}

impl<'a> Lines<'a> {
    fn next(&mut self) -> Result<(usize, &'a str), ParseError> {
        loop {
            let line = self.iter.next().ok_or(ParseError::Malformed {
                line: self.number + 1,
                message: "unexpected end of file".into(),
            })?;
            self.number += 1;
            let trimmed = line.trim();
            if !trimmed.is_empty() {
                return Ok((self.number, trimmed));
            }
        }
    }
}

fn parse_count(line: usize, text: &str, keyword: &str) -> Result<usize, ParseError> {
    let mut parts = text.split_whitespace();
    match (parts.next(), parts.next(), parts.next()) {
        (Some(k), Some(n), None) if k == keyword => n.parse().map_err(|_| ParseError::Malformed {
            line,
            message: format!("bad {keyword} count: {n:?}"),
        }),
        _ => Err(ParseError::Malformed {
            line,
            message: format!("expected `{keyword} <count>`, got {text:?}"),
        }),
    }
}

fn parse_f64(line: usize, tok: &str) -> Result<f64, ParseError> {
    tok.parse().map_err(|_| ParseError::Malformed {
        line,
        message: format!("bad number {tok:?}"),
    })
}

fn parse_usize(line: usize, tok: &str) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| ParseError::Malformed {
        line,
        message: format!("bad index {tok:?}"),
    })
}

/// Parses a mesh from the text format, validating structure and conformity.
pub fn load_mesh_from_str(text: &str) -> Result<Mesh, ParseError> {
    let mut lines = Lines {
        iter: text.lines(),
        number: 0,
    };

    let (ln, header) = lines.next()?;
    if header != "dscmesh 1" {
        return Err(ParseError::Malformed {
            line: ln,
            message: format!("expected header `dscmesh 1`, got {header:?}"),
        });
    }

    let (ln, l) = lines.next()?;
    let nv = parse_count(ln, l, "vertices")?;
    let mut vertices = Vec::with_capacity(nv);
    for _ in 0..nv {
        let (ln, l) = lines.next()?;
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(ParseError::Malformed {
                line: ln,
                message: format!("expected 3 coordinates, got {}", toks.len()),
            });
        }
        vertices.push(Vec3::new(
            parse_f64(ln, toks[0])?,
            parse_f64(ln, toks[1])?,
            parse_f64(ln, toks[2])?,
        ));
    }

    let (ln, l) = lines.next()?;
    let nc = parse_count(ln, l, "cells")?;
    let mut cells = Vec::with_capacity(nc);
    for _ in 0..nc {
        let (ln, l) = lines.next()?;
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 10 {
            return Err(ParseError::Malformed {
                line: ln,
                message: format!("expected 8 vertex indices + 2 material values, got {} fields", toks.len()),
            });
        }
        let mut corners = [Vec3::zeros(); 8];
        for (slot, tok) in toks[..8].iter().enumerate() {
            let id = parse_usize(ln, tok)?;
            if id >= vertices.len() {
                return Err(ParseError::VertexIndex {
                    line: ln,
                    index: id,
                    count: vertices.len(),
                });
            }
            corners[slot] = vertices[id];
        }
        let material = Material::new(parse_f64(ln, toks[8])?, parse_f64(ln, toks[9])?)
            .map_err(crate::error::MeshError::Geometry)?;
        cells.push(HexCell::from_vertices(corners, material).map_err(crate::error::MeshError::Geometry)?);
    }

    let (ln, l) = lines.next()?;
    let nl = parse_count(ln, l, "links")?;
    let mut links = Vec::with_capacity(nl);
    for _ in 0..nl {
        let (ln, l) = lines.next()?;
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 4 {
            return Err(ParseError::Malformed {
                line: ln,
                message: format!("expected `cell_a face_a cell_b face_b`, got {l:?}"),
            });
        }
        links.push(Link {
            cell_a: parse_usize(ln, toks[0])?,
            face_a: parse_usize(ln, toks[1])?,
            cell_b: parse_usize(ln, toks[2])?,
            face_b: parse_usize(ln, toks[3])?,
        });
    }

    let (ln, l) = lines.next()?;
    let nb = parse_count(ln, l, "boundaries")?;
    let mut boundaries = Vec::with_capacity(nb);
    for _ in 0..nb {
        let (ln, l) = lines.next()?;
        let toks: Vec<&str> = l.split_whitespace().collect();
        let condition = match toks.as_slice() {
            [_, _, "adiabatic"] => BoundaryCondition::Adiabatic,
            [_, _, "fixed", t, o] => BoundaryCondition::FixedTemperature {
                t_fix: parse_f64(ln, t)?,
                onset: parse_f64(ln, o)?,
            },
            _ => {
                return Err(ParseError::Malformed {
                    line: ln,
                    message: format!("expected `cell face adiabatic|fixed t onset`, got {l:?}"),
                })
            }
        };
        boundaries.push(BoundaryFace {
            cell: parse_usize(ln, toks[0])?,
            face: parse_usize(ln, toks[1])?,
            condition,
        });
    }

    Ok(Mesh::new(cells, links, boundaries)?)
}

pub fn load_mesh(path: &Path) -> Result<Mesh, ParseError> {
    let text = std::fs::read_to_string(path)?;
    load_mesh_from_str(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::{build_structured_mesh, StructuredSpec};

    fn jittered() -> Mesh {
        build_structured_mesh(&StructuredSpec {
            jitter: 0.22,
            seed: 3,
            ..StructuredSpec::uniform(3, 2, 2, 0.01, Material::new(2.5, 4.0e6).unwrap())
        })
        .unwrap()
    }

    #[test]
    fn round_trip_is_exact() {
        let mesh = jittered();
        let text = save_mesh_to_string(&mesh);
        let back = load_mesh_from_str(&text).unwrap();
        assert_eq!(mesh, back);
    }

    #[test]
    fn dangling_link_named() {
        let mesh = build_structured_mesh(&StructuredSpec::uniform(
            1,
            1,
            1,
            1.0,
            Material::new(1.0, 1.0).unwrap(),
        ))
        .unwrap();
        let mut text = save_mesh_to_string(&mesh);
        text = text.replace("links 0", "links 1\n0 1 9 0");
        let err = load_mesh_from_str(&text).unwrap_err();
        assert!(
            err.to_string().contains("link 0") && err.to_string().contains("cell 9"),
            "unexpected error: {err}"
        );
    }

    #[test]
    fn duplicate_face_assignment_rejected() {
        let mesh = jittered();
        let mut text = save_mesh_to_string(&mesh);
        let nb = mesh.boundaries.len();
        let b0 = &mesh.boundaries[0];
        text = text.replace(
            &format!("boundaries {nb}"),
            &format!("boundaries {}\n{} {} adiabatic", nb + 1, b0.cell, b0.face),
        );
        let err = load_mesh_from_str(&text).unwrap_err();
        assert!(err.to_string().contains("more than once"), "{err}");
    }

    #[test]
    fn malformed_line_carries_number() {
        let mesh = jittered();
        let text = save_mesh_to_string(&mesh);
        let broken = text.replacen("dscmesh 1", "dscmesh 2", 1);
        assert!(load_mesh_from_str(&broken)
            .unwrap_err()
            .to_string()
            .contains("line 1"));

        let mut lines: Vec<&str> = text.lines().collect();
        lines[2] = "0.0 not-a-number 0.0";
        let err = load_mesh_from_str(&lines.join("\n")).unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
    }
}
