// temporary: scan tangential weights for the wrapped norm
use heat_scheme::{compute_coefficients, stable_timestep, CycleMap};
use hexmesh::{build_structured_mesh, Material, StructuredSpec};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    for seed in [11u64, 23, 77] {
        let mesh = build_structured_mesh(&StructuredSpec {
            jitter: 0.25,
            seed,
            ..StructuredSpec::uniform(4, 4, 2, 1.0, Material::new(1.0, 1.0).unwrap())
        })
        .unwrap();
        let coeffs = compute_coefficients(&mesh).unwrap();
        let tau = stable_timestep(&coeffs, 0.5);
        let cycle = CycleMap::new(&mesh, &coeffs, tau).unwrap();
        let n = mesh.cells.len();
        let dim = 4 * n;
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + seed);

        for kappa in [1.0, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3, 0.2] {
            // norm with tangential slots scaled by kappa; the MAP acts on the
            // kappa-scaled coordinates: x' = S cycle(S^-1 x), S = diag(1, k,k,k)
            let apply = |x: &[f64]| -> Vec<f64> {
                let mut raw = x.to_vec();
                for c in 0..n {
                    for m in 0..3 {
                        raw[4 * c + 1 + m] /= kappa;
                    }
                }
                let mut out = cycle.apply(&raw);
                for c in 0..n {
                    for m in 0..3 {
                        out[4 * c + 1 + m] *= kappa;
                    }
                }
                out
            };
            let alpha = |x: &[f64]| -> f64 { x.iter().map(|v| v * v).sum() };
            let mut worst: f64 = f64::INFINITY;
            // random probes
            for _ in 0..4000 {
                let x: Vec<f64> = (0..dim).map(|_| rng.random_range(-1.0f64..1.0)).collect();
                let r = alpha(&x) - alpha(&apply(&x));
                worst = worst.min(r / alpha(&x).max(1e-300));
            }
            // axis dirac probes
            for a in 0..dim {
                let mut x = vec![0.0; dim];
                x[a] = 1.0;
                let r = alpha(&x) - alpha(&apply(&x));
                worst = worst.min(r);
            }
            println!("seed {seed} kappa {kappa}: worst relative margin {worst:.5}");
        }
    }
}
