use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("degenerate cell: volume {volume} is not positive (thinnest face {face}, shortest edge {edge})")]
    NonPositiveVolume { volume: f64, face: usize, edge: usize },

    #[error("degenerate cell: |det beta| = {det} below threshold {threshold} (thinnest face {face}, shortest edge {edge})")]
    SingularBasis {
        det: f64,
        threshold: f64,
        face: usize,
        edge: usize,
    },

    #[error("material constants must be positive: lambda_H = {lambda_h}, c_v = {c_v}")]
    InvalidMaterial { lambda_h: f64, c_v: f64 },
}

#[derive(Debug, Error)]
pub enum MeshError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),

    #[error("cell {cell} face {face} is assigned more than once across links and boundaries")]
    DuplicateFace { cell: usize, face: usize },

    #[error("cell {cell} face {face} is neither linked nor tagged as boundary")]
    UnassignedFace { cell: usize, face: usize },

    #[error("link {link} references cell {cell} which does not exist ({cells} cells)")]
    DanglingLink { link: usize, cell: usize, cells: usize },

    #[error("link {link} joins non-conforming faces: cell {cell_a} face {face_a} and cell {cell_b} face {face_b} differ by {gap} m")]
    NonConformingLink {
        link: usize,
        cell_a: usize,
        face_a: usize,
        cell_b: usize,
        face_b: usize,
        gap: f64,
    },

    #[error("face index {face} out of range (cell {cell})")]
    FaceIndexOutOfRange { cell: usize, face: usize },

    #[error("boundary entry {entry} references cell {cell} which does not exist ({cells} cells)")]
    DanglingBoundary { entry: usize, cell: usize, cells: usize },

    #[error("fixed-temperature onset must be >= 0, got {onset}")]
    NegativeOnset { onset: f64 },

    #[error("structured mesh counts must be >= 1, got {nx}x{ny}x{nz}")]
    EmptyMesh { nx: usize, ny: usize, nz: usize },

    #[error("spacing must be positive, got {spacing}")]
    InvalidSpacing { spacing: f64 },

    #[error("jitter fraction must lie in [0, 0.45), got {jitter}")]
    InvalidJitter { jitter: f64 },
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },

    #[error("line {line}: vertex index {index} out of range ({count} vertices)")]
    VertexIndex { line: usize, index: usize, count: usize },

    #[error(transparent)]
    Mesh(#[from] MeshError),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
