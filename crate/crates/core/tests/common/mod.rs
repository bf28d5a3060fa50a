#![allow(dead_code)]

use std::collections::HashMap;

use lie_cohomology::cochain::CochainSpace;
use lie_cohomology::linalg::{int, Rational, SparseVec};
use lie_cohomology::{catalog, LieAlgebra, Representation};
use num_traits::Zero;
use rand::Rng;

pub fn catalog_algebras() -> Vec<LieAlgebra> {
    let mut out = vec![catalog::sl2(), catalog::abelian(3)];
    for n in 1..=3 {
        out.push(catalog::heisenberg(n));
        out.push(catalog::schrodinger(n));
        out.push(catalog::schrodinger_mod_center(n));
    }
    out
}

pub fn both_modules(g: &LieAlgebra) -> [Representation; 2] {
    [Representation::trivial(g, 1), Representation::adjoint(g)]
}

pub fn random_cochain(space: &CochainSpace, rng: &mut impl Rng, density: f64) -> SparseVec {
    let mut pairs = Vec::new();
    for i in 0..space.dim() {
        if rng.gen_bool(density) {
            pairs.push((i, int(rng.gen_range(-3..=3))));
        }
    }
    SparseVec::from_pairs(pairs)
}

/// Cochain stored as a map from strictly increasing tuples to module values,
/// evaluated on arbitrary argument lists by sorting with a sign.
pub struct PointwiseCochain {
    values: HashMap<Vec<usize>, Vec<Rational>>,
    module_dim: usize,
}

impl PointwiseCochain {
    pub fn new(space: &CochainSpace, phi: &SparseVec) -> Self {
        let md = space.module_dim();
        let mut values: HashMap<Vec<usize>, Vec<Rational>> = HashMap::new();
        for (c, v) in phi.iter() {
            let t = space.tuples()[c / md].clone();
            values.entry(t).or_insert_with(|| vec![Rational::zero(); md])[c % md] += v;
        }
        Self { values, module_dim: md }
    }

    pub fn eval(&self, args: &[usize]) -> Vec<Rational> {
        let zero = vec![Rational::zero(); self.module_dim];
        let mut t = args.to_vec();
        // bubble sort, counting swaps
        let mut sign = 1i64;
        for i in 0..t.len() {
            for j in 0..t.len() - 1 - i {
                if t[j] > t[j + 1] {
                    t.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        if t.windows(2).any(|w| w[0] == w[1]) {
            return zero;
        }
        match self.values.get(&t) {
            Some(v) => v.iter().map(|x| x * int(sign)).collect(),
            None => zero,
        }
    }
}

/// `(dφ)(e_0..e_n)` straight from the defining formula.
pub fn pointwise_differential(rep: &Representation, n: usize, phi: &SparseVec) -> SparseVec {
    let g = rep.algebra();
    let md = rep.module_dim();
    let source = CochainSpace::new(g.dim(), md, n);
    let target = CochainSpace::new(g.dim(), md, n + 1);
    let f = PointwiseCochain::new(&source, phi);
    let mut out = Vec::new();
    for (ti, t) in target.tuples().iter().enumerate() {
        let mut acc = vec![Rational::zero(); md];
        for i in 0..=n {
            let rest: Vec<usize> = t.iter().enumerate().filter(|&(p, _)| p != i).map(|(_, &x)| x).collect();
            let val = f.eval(&rest);
            let s = if i % 2 == 0 { int(1) } else { int(-1) };
            for (r, c, a) in rep.action(t[i]).entries() {
                acc[r] += &s * a * &val[c];
            }
        }
        for i in 0..=n {
            for j in i + 1..=n {
                let s = if (i + j) % 2 == 0 { int(1) } else { int(-1) };
                let rest: Vec<usize> =
                    t.iter().enumerate().filter(|&(p, _)| p != i && p != j).map(|(_, &x)| x).collect();
                for (k, c) in g.bracket_basis(t[i], t[j]).iter() {
                    let mut args = vec![k];
                    args.extend_from_slice(&rest);
                    let val = f.eval(&args);
                    for m in 0..md {
                        acc[m] += &s * c * &val[m];
                    }
                }
            }
        }
        for (m, v) in acc.into_iter().enumerate() {
            out.push((target.coordinate(ti, m), v));
        }
    }
    SparseVec::from_pairs(out)
}
