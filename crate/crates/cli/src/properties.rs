//! Randomized self-checks with a caller-chosen seed.

use lie_cohomology::catalog;
use lie_cohomology::cochain::{differential, is_cocycle, CochainSpace};
use lie_cohomology::factorization::{central_extension, FactorizationError};
use lie_cohomology::linalg::{dense, int, rank, Rational};
use lie_cohomology::{LieAlgebra, Representation, SparseMatrix, SparseVec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct PropertyResult {
    pub property: String,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

fn catalog_algebras() -> Vec<LieAlgebra> {
    let mut out = vec![catalog::sl2(), catalog::abelian(3)];
    for n in 1..=3 {
        out.extend([catalog::heisenberg(n), catalog::schrodinger(n), catalog::schrodinger_mod_center(n)]);
    }
    out
}

fn random_cochain(space: &CochainSpace, rng: &mut ChaCha8Rng, density: f64) -> SparseVec {
    let mut pairs = Vec::new();
    for i in 0..space.dim() {
        if rng.gen_bool(density) {
            pairs.push((i, int(rng.gen_range(-3..=3))));
        }
    }
    SparseVec::from_pairs(pairs)
}

struct Tally {
    result: PropertyResult,
}

impl Tally {
    fn new(property: &str) -> Self {
        Self { result: PropertyResult { property: property.into(), cases: 0, failures: 0, first_failure: None } }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.result.cases += 1;
        if !ok {
            self.result.failures += 1;
            if self.result.first_failure.is_none() {
                self.result.first_failure = Some(describe());
            }
        }
    }
}

fn d_squared(algebras: &[LieAlgebra]) -> PropertyResult {
    let mut t = Tally::new("d∘d = 0 (catalog, n <= 2, trivial and adjoint)");
    for g in algebras {
        for rep in [Representation::trivial(g, 1), Representation::adjoint(g)] {
            for n in 0..=2 {
                let prod = &differential(&rep, n + 1).expect("valid") * &differential(&rep, n).expect("valid");
                t.record(prod.is_zero(), || format!("{} degree {n}", g.name()));
            }
        }
    }
    t.result
}

fn rank_oracle(rng: &mut ChaCha8Rng, trials: usize) -> PropertyResult {
    let mut t = Tally::new("sparse rank = dense rank (random matrices)");
    for _ in 0..trials {
        let (r, c) = (rng.gen_range(1..=30), rng.gen_range(1..=30));
        let rows: Vec<Vec<Rational>> = (0..r)
            .map(|_| (0..c).map(|_| if rng.gen_bool(0.5) { int(0) } else { int(rng.gen_range(-3..=3)) }).collect())
            .collect();
        let m = SparseMatrix::from_dense(c, &rows);
        let (s, d) = (rank(&m), dense::rank(rows));
        t.record(s == d, || format!("{r}x{c}: sparse {s}, dense {d}"));
    }
    t.result
}

fn extension_iff_cocycle(algebras: &[LieAlgebra], rng: &mut ChaCha8Rng, trials: usize) -> PropertyResult {
    let mut t = Tally::new("central extension validates iff cocycle");
    for trial in 0..trials {
        let g = &algebras[rng.gen_range(0..algebras.len())];
        let k = rng.gen_range(1..=2);
        let trivial = Representation::trivial(g, k);
        let phi = if rng.gen_bool(0.5) {
            let omega = random_cochain(&CochainSpace::new(g.dim(), k, 1), rng, 0.5);
            differential(&trivial, 1).expect("valid").mul_vec(&omega)
        } else {
            random_cochain(&CochainSpace::new(g.dim(), k, 2), rng, 0.3)
        };
        let cocycle = is_cocycle(&trivial, 2, &phi).expect("shape");
        let ok = match central_extension(g, &phi, k) {
            Ok(ext) => cocycle && ext.validate().is_ok(),
            Err(FactorizationError::NotACocycle(_)) => !cocycle,
            Err(_) => false,
        };
        t.record(ok, || format!("trial {trial} on {}", g.name()));
    }
    t.result
}

pub fn run(seed: u64, trials: usize) -> Vec<PropertyResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let algebras = catalog_algebras();
    vec![d_squared(&algebras), rank_oracle(&mut rng, trials), extension_iff_cocycle(&algebras, &mut rng, trials)]
}
