//! Fixed list of published claims about `sch_n` and `g_n`, each recomputed
//! with the sparse engine and re-derived with dense elimination.

use lie_cohomology::catalog;
use lie_cohomology::cochain::{cohomology_dims, cohomology_dims_dense, differential, is_coboundary, is_cocycle};
use lie_cohomology::factorization::hs_factorized_dim;
use lie_cohomology::linalg::{dense, Rational};
use lie_cohomology::{InvariantSetup, LieAlgebra, Representation, SparseVec};
use num_traits::Zero;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    Discrepancy,
}

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub claim: String,
    pub expected: String,
    pub computed: String,
    pub oracle: String,
    pub status: Status,
    pub note: String,
}

impl Row {
    pub fn oracle_agrees(&self) -> bool {
        self.computed == self.oracle
    }
}

enum Expected {
    Value(String),
    /// Two stated values that contradict each other.
    Conflict { first: (String, &'static str), second: (String, &'static str) },
}

struct Claim {
    name: String,
    expected: Expected,
    run: Box<dyn Fn() -> (String, String) + Send + Sync>,
}

fn count(v: usize) -> Expected {
    Expected::Value(v.to_string())
}

fn yes() -> Expected {
    Expected::Value("yes".into())
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn adjoint_setup(g: &LieAlgebra) -> InvariantSetup {
    InvariantSetup::adjoint(g, vec![0, 1, 2], (3..g.dim()).collect()).expect("catalog split")
}

fn trivial_setup(g: &LieAlgebra) -> InvariantSetup {
    InvariantSetup::new(Representation::trivial(g, 1), vec![0, 1, 2], (3..g.dim()).collect()).expect("catalog split")
}

fn h2_claim(name: String, expected: Expected, g: LieAlgebra, adjoint: bool) -> Claim {
    Claim {
        name,
        expected,
        run: Box::new(move || {
            let rep = if adjoint { Representation::adjoint(&g) } else { Representation::trivial(&g, 1) };
            let sparse = cohomology_dims(&rep, 2).expect("valid module").dim_cohomology;
            let dense = cohomology_dims_dense(&rep, 2).expect("valid module").dim_cohomology;
            (sparse.to_string(), dense.to_string())
        }),
    }
}

#[derive(Clone, Copy)]
enum Part {
    Cocycles,
    Coboundaries,
}

fn invariant_claim(name: String, expected: Expected, setup: InvariantSetup, part: Part) -> Claim {
    Claim {
        name,
        expected,
        run: Box::new(move || {
            let r = setup.invariant_cohomology(2).expect("valid setup");
            let (z, b) = setup.dense_counts(2);
            match part {
                Part::Cocycles => (r.dim_cocycles.to_string(), z.to_string()),
                Part::Coboundaries => (r.dim_coboundaries.to_string(), b.to_string()),
            }
        }),
    }
}

/// `d φ = 0`, checked by dense multiplication.
fn dense_is_cocycle(rep: &Representation, phi: &SparseVec) -> bool {
    let d = differential(rep, 2).expect("valid module").to_dense();
    let x = phi.to_dense(d.first().map_or(0, Vec::len));
    d.iter().all(|row| row.iter().zip(&x).fold(Rational::zero(), |acc, (a, b)| acc + a * b).is_zero())
}

/// `φ ∈ im d_1` iff appending `φ` as a column keeps the dense rank.
fn dense_is_coboundary(rep: &Representation, phi: &SparseVec) -> bool {
    let d = differential(rep, 1).expect("valid module").to_dense();
    let x = phi.to_dense(d.len());
    let augmented: Vec<Vec<Rational>> =
        d.iter().zip(&x).map(|(row, v)| row.iter().cloned().chain([v.clone()]).collect()).collect();
    dense::rank(d) == dense::rank(augmented)
}

fn psi_claims(name: &str, g: LieAlgebra, psi: SparseVec) -> Vec<Claim> {
    let rep = Representation::adjoint(&g);
    let (rep2, psi2) = (rep.clone(), psi.clone());
    vec![
        Claim {
            name: format!("ψ on {name} is a 2-cocycle"),
            expected: yes(),
            run: Box::new(move || {
                (yes_no(is_cocycle(&rep, 2, &psi).expect("shape")), yes_no(dense_is_cocycle(&rep, &psi)))
            }),
        },
        Claim {
            name: format!("ψ on {name} is not a coboundary"),
            expected: yes(),
            run: Box::new(move || {
                (yes_no(!is_coboundary(&rep2, 2, &psi2).expect("shape")), yes_no(!dense_is_coboundary(&rep2, &psi2)))
            }),
        },
    ]
}

fn claims(n_max: usize) -> Vec<Claim> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        let sch = catalog::schrodinger(n);
        let quot = catalog::schrodinger_mod_center(n);
        let tri = n * (n + 1) / 2;

        out.push(h2_claim(format!("dim H²(sch_{n}, ℂ)"), count((n - 1) * (n + 2) / 2), sch.clone(), false));
        out.push(invariant_claim(format!("dim Z²(h_{n}, ℂ)^sl2"), count(tri), trivial_setup(&sch), Part::Cocycles));
        out.push(invariant_claim(format!("dim B²(h_{n}, ℂ)^sl2"), count(1), trivial_setup(&sch), Part::Coboundaries));

        let z_expected = if n == 2 { 4 } else { tri };
        out.push(invariant_claim(
            format!("dim Z²(h_{n}, sch_{n})^sl2"),
            count(z_expected),
            adjoint_setup(&sch),
            Part::Cocycles,
        ));
        out.push(invariant_claim(format!("dim B²(h_{n}, sch_{n})^sl2"), count(tri), adjoint_setup(&sch), Part::Coboundaries));

        let h2_expected = if n == 2 {
            Expected::Conflict { first: ("1".into(), "proposition"), second: ("2".into(), "abstract") }
        } else {
            count(0)
        };
        out.push(h2_claim(format!("dim H²(sch_{n}, sch_{n})"), h2_expected, sch.clone(), true));
        if n >= 3 {
            let setup = adjoint_setup(&sch);
            let g = sch.clone();
            out.push(Claim {
                name: format!("dim H²(sch_{n}, sch_{n}) via Hochschild-Serre"),
                expected: count(0),
                run: Box::new(move || {
                    let f = hs_factorized_dim(&setup, 2).expect("p <= 3");
                    let d = cohomology_dims_dense(&Representation::adjoint(&g), 2).expect("valid").dim_cohomology;
                    (f.to_string(), d.to_string())
                }),
            });
            let g = sch.clone();
            out.push(Claim {
                name: format!("sch_{n} is rigid"),
                expected: yes(),
                run: Box::new(move || {
                    let rep = Representation::adjoint(&g);
                    let s = cohomology_dims(&rep, 2).expect("valid").dim_cohomology == 0;
                    let d = cohomology_dims_dense(&rep, 2).expect("valid").dim_cohomology == 0;
                    (yes_no(s), yes_no(d))
                }),
            });
        }

        let g = sch.clone();
        out.push(Claim {
            name: format!("dim Der(sch_{n})"),
            expected: count(2 * n + 3 + n * (n - 1) / 2 + 1),
            run: Box::new(move || {
                let sparse = g.derivation_space().dim();
                let dense = g.dim() * g.dim() - dense::rank_of(&g.leibniz_system());
                (sparse.to_string(), dense.to_string())
            }),
        });

        out.push(h2_claim(format!("dim H²(g_{n}, g_{n})"), count(usize::from(n == 2)), quot.clone(), true));
        if n == 2 {
            out.push(invariant_claim("dim Z²(a, g_2)^sl2".into(), count(1), adjoint_setup(&quot), Part::Cocycles));
            out.push(invariant_claim("dim B²(a, g_2)^sl2".into(), count(0), adjoint_setup(&quot), Part::Coboundaries));
            out.extend(psi_claims("sch_2", sch.clone(), catalog::schrodinger2_psi()));
            out.extend(psi_claims("g_2", quot.clone(), catalog::quotient2_psi()));
        }
    }
    out
}

fn evaluate(claim: &Claim) -> Row {
    let (computed, oracle) = (claim.run)();
    let oracle_ok = computed == oracle;
    let (expected, mut status, mut note) = match &claim.expected {
        Expected::Value(v) => {
            let status = if *v == computed { Status::Pass } else { Status::Fail };
            (v.clone(), status, String::new())
        }
        Expected::Conflict { first, second } => {
            let supported = [first, second].iter().find(|(v, _)| *v == computed).map(|(_, w)| *w);
            let verdict = match supported {
                Some(w) => format!("computation supports the {w}"),
                None => "computation supports neither".into(),
            };
            (
                format!("{} / {}", first.0, second.0),
                Status::Discrepancy,
                format!("stated as {} in the {} and {} in the {}; {verdict}", first.0, first.1, second.0, second.1),
            )
        }
    };
    if !oracle_ok {
        status = Status::Fail;
        note = format!("dense oracle disagrees ({oracle}); {note}");
    }
    Row { claim: claim.name.clone(), expected, computed, oracle, status, note: note.trim_end_matches("; ").into() }
}

/// Evaluates every claim for `2 <= n <= n_max`, concurrently; row order
/// follows the claim list.
pub fn verify(n_max: usize) -> Vec<Row> {
    let claims = claims(n_max);
    std::thread::scope(|scope| {
        let handles: Vec<_> = claims.iter().map(|c| scope.spawn(move || evaluate(c))).collect();
        handles.into_iter().map(|h| h.join().expect("claim evaluation panicked")).collect()
    })
}
