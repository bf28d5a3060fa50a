//! Named algebras with fixed basis orders, plus JSON ingestion.
//!
//! | spec                     | basis                                  |
//! |--------------------------|----------------------------------------|
//! | `sl2`                    | e, f, h                                |
//! | `heisenberg:n`           | x1..xn, y1..yn, z                      |
//! | `schrodinger:n`          | e, f, h, x1..xn, y1..yn, z             |
//! | `schrodinger-quotient:n` | e, f, h, x1..xn, y1..yn                |
//! | `abelian:k`              | a1..ak                                 |
//! | `file:PATH`              | as listed in the file                  |

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{JacobiViolation, LieAlgebra, LieError};
use crate::cochain::CochainSpace;
use crate::linalg::{int, parse_rational, LinalgError, SparseMatrix, SparseVec};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown algebra spec {0:?}")]
    UnknownSpec(String),
    #[error("invalid parameter in {0:?}")]
    InvalidParameter(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("malformed algebra file: {0}")]
    Malformed(String),
    #[error("{0}")]
    Jacobi(JacobiViolation),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn labels(prefix: &str, n: usize) -> impl Iterator<Item = String> + '_ {
    (1..=n).map(move |i| format!("{prefix}{i}"))
}

pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_table(
        "sl2",
        &["e", "f", "h"],
        &[("e", "f", &[("h", 1)]), ("h", "e", &[("e", 2)]), ("h", "f", &[("f", -2)])],
    )
    .expect("sl2 table")
}

/// `h_n`: `[x_i, y_i] = z`. Panics if `n == 0`.
pub fn heisenberg(n: usize) -> LieAlgebra {
    assert!(n >= 1, "heisenberg algebra needs n >= 1");
    let basis: Vec<String> = labels("x", n).chain(labels("y", n)).chain(["z".to_string()]).collect();
    let brackets = (0..n).map(|i| (i, n + i, SparseVec::unit(2 * n)));
    LieAlgebra::new(format!("h_{n}"), basis, brackets).expect("heisenberg table")
}

pub fn abelian(k: usize) -> LieAlgebra {
    LieAlgebra::abelian(format!("abelian_{k}"), labels("a", k).collect()).expect("distinct labels")
}

/// Abelian algebra on `x1..xn, y1..yn`, the radical of the quotient algebra.
pub fn abelian_xy(n: usize) -> LieAlgebra {
    LieAlgebra::abelian(format!("a_{n}"), labels("x", n).chain(labels("y", n)).collect()).expect("distinct labels")
}

/// Action of `e, f, h` on a space with basis `x1..xn, y1..yn[, z]`:
/// `h x_i = x_i`, `h y_i = -y_i`, `e y_i = x_i`, `f x_i = y_i`, `z` fixed at 0.
pub fn schrodinger_action(n: usize, with_center: bool) -> Vec<SparseMatrix> {
    let dim = 2 * n + usize::from(with_center);
    let (x, y) = (|i: usize| i, |i: usize| n + i);
    let e = SparseMatrix::from_triplets(dim, dim, (0..n).map(|i| (x(i), y(i), int(1))));
    let f = SparseMatrix::from_triplets(dim, dim, (0..n).map(|i| (y(i), x(i), int(1))));
    let h = SparseMatrix::from_triplets(
        dim,
        dim,
        (0..n).flat_map(|i| [(x(i), x(i), int(1)), (y(i), y(i), int(-1))]),
    );
    vec![e, f, h]
}

/// `sch_n = sl2 ⋉ h_n`, dimension `2n + 4`.
pub fn schrodinger(n: usize) -> LieAlgebra {
    LieAlgebra::semidirect(&sl2(), &heisenberg(n), &schrodinger_action(n, true))
        .expect("schrodinger action is valid")
        .with_name(format!("sch_{n}"))
}

/// `g_n = sch_n / <z>`, dimension `2n + 3`.
pub fn schrodinger_mod_center(n: usize) -> LieAlgebra {
    let sch = schrodinger(n);
    sch.quotient(&sch.center()).expect("center is an ideal").with_name(format!("g_{n}"))
}

/// Outer derivations of `sch_n` as matrices in its basis: the rotations
/// `σ_ij` (i < j) followed by the grading `τ` (`x_i ↦ x_i`, `y_i ↦ y_i`,
/// `z ↦ 2z`).
pub fn schrodinger_outer_derivations(n: usize) -> Vec<SparseMatrix> {
    let dim = 2 * n + 4;
    let (x, y, z) = (|i: usize| 3 + i, |i: usize| 3 + n + i, 3 + 2 * n);
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            // σ_ij(x_i) = x_j, σ_ij(x_j) = -x_i, same on y
            out.push(SparseMatrix::from_triplets(
                dim,
                dim,
                [(x(j), x(i), int(1)), (x(i), x(j), int(-1)), (y(j), y(i), int(1)), (y(i), y(j), int(-1))],
            ));
        }
    }
    let tau = (0..n).flat_map(|i| [(x(i), x(i), int(1)), (y(i), y(i), int(1))]).chain([(z, z, int(2))]);
    out.push(SparseMatrix::from_triplets(dim, dim, tau));
    out
}

fn cocycle_on(g: &LieAlgebra, terms: &[(&str, &str, &str, i64)]) -> SparseVec {
    let space = CochainSpace::new(g.dim(), g.dim(), 2);
    let idx = |l: &str| g.index_of(l).unwrap_or_else(|| panic!("label {l}"));
    space
        .cochain(terms.iter().map(|(a, b, out, c)| ([idx(a), idx(b)], idx(out), int(*c))))
        .expect("valid cochain")
}

const PSI_CORE: [(&str, &str, &str, i64); 4] =
    [("x1", "x2", "e", 2), ("y1", "y2", "f", -2), ("x1", "y2", "h", -1), ("x2", "y1", "h", 1)];

/// The 2-cochain ψ on `sch_2` with adjoint coefficients proposed as a basis
/// of `H^2(sch_2, sch_2)`.
pub fn schrodinger2_psi() -> SparseVec {
    let mut terms = PSI_CORE.to_vec();
    terms.extend([("x1", "z", "x2", 3), ("y1", "z", "y2", 3), ("x2", "z", "x1", -3), ("y2", "z", "y1", -3)]);
    cocycle_on(&schrodinger(2), &terms)
}

/// The 2-cochain ψ on `g_2` proposed as a basis of `H^2(g_2, g_2)`.
pub fn quotient2_psi() -> SparseVec {
    cocycle_on(&schrodinger_mod_center(2), &PSI_CORE)
}

/// An algebra together with named coordinate parts and a default
/// levi/radical split when one is known.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub spec: String,
    pub algebra: LieAlgebra,
    pub parts: Vec<(String, Vec<usize>)>,
    pub split: Option<(Vec<usize>, Vec<usize>)>,
}

impl CatalogEntry {
    fn plain(spec: &str, algebra: LieAlgebra) -> Self {
        Self { spec: spec.to_string(), algebra, parts: Vec::new(), split: None }
    }

    /// Resolves a part name (`sl2`, `heisenberg`, `abelian`, ...) or a
    /// comma-separated list of basis labels to basis indices.
    pub fn part(&self, name: &str) -> Result<Vec<usize>, CatalogError> {
        if let Some((_, idx)) = self.parts.iter().find(|(n, _)| n == name) {
            return Ok(idx.clone());
        }
        if name.is_empty() {
            return Ok(Vec::new());
        }
        name.split(',')
            .map(|l| self.algebra.index_of(l.trim()).ok_or_else(|| LieError::UnknownLabel(l.to_string()).into()))
            .collect()
    }
}

fn parameter(spec: &str, text: &str, min: usize) -> Result<usize, CatalogError> {
    match text.parse::<usize>() {
        Ok(n) if n >= min => Ok(n),
        _ => Err(CatalogError::InvalidParameter(spec.to_string())),
    }
}

/// Resolves `sl2`, `heisenberg:n`, `schrodinger:n`,
/// `schrodinger-quotient:n`, `abelian:k` or `file:PATH`.
pub fn resolve(spec: &str) -> Result<CatalogEntry, CatalogError> {
    let (kind, arg) = spec.split_once(':').unwrap_or((spec, ""));
    let sl2_part = || ("sl2".to_string(), vec![0, 1, 2]);
    Ok(match kind {
        "sl2" if arg.is_empty() => {
            let mut e = CatalogEntry::plain(spec, sl2());
            e.parts.push(sl2_part());
            e.split = Some((vec![0, 1, 2], vec![]));
            e
        }
        "heisenberg" => {
            let n = parameter(spec, arg, 1)?;
            let mut e = CatalogEntry::plain(spec, heisenberg(n));
            e.split = Some((vec![], (0..2 * n + 1).collect()));
            e
        }
        "abelian" => {
            let k = parameter(spec, arg, 0)?;
            let mut e = CatalogEntry::plain(spec, abelian(k));
            e.split = Some((vec![], (0..k).collect()));
            e
        }
        "schrodinger" => {
            let n = parameter(spec, arg, 1)?;
            let rad: Vec<usize> = (3..2 * n + 4).collect();
            let mut e = CatalogEntry::plain(spec, schrodinger(n));
            e.parts = vec![sl2_part(), ("heisenberg".into(), rad.clone()), ("h".into(), rad.clone())];
            e.split = Some((vec![0, 1, 2], rad));
            e
        }
        "schrodinger-quotient" => {
            let n = parameter(spec, arg, 1)?;
            let rad: Vec<usize> = (3..2 * n + 3).collect();
            let mut e = CatalogEntry::plain(spec, schrodinger_mod_center(n));
            e.parts = vec![sl2_part(), ("abelian".into(), rad.clone()), ("a".into(), rad.clone())];
            e.split = Some((vec![0, 1, 2], rad));
            e
        }
        "file" if !arg.is_empty() => CatalogEntry::plain(spec, read_algebra(Path::new(arg))?),
        _ => return Err(CatalogError::UnknownSpec(spec.to_string())),
    })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    name: String,
    basis: Vec<String>,
    brackets: Vec<BracketEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketEntry {
    left: usize,
    right: usize,
    result: Vec<(usize, String)>,
}

/// Parses the JSON algebra format and validates the Jacobi identity.
pub fn parse_algebra(text: &str) -> Result<LieAlgebra, CatalogError> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| CatalogError::Malformed(e.to_string()))?;
    let mut brackets = Vec::with_capacity(file.brackets.len());
    for b in &file.brackets {
        if b.left >= b.right {
            return Err(CatalogError::Malformed(format!("pair ({}, {}) must have left < right", b.left, b.right)));
        }
        let mut terms = Vec::with_capacity(b.result.len());
        for (k, c) in &b.result {
            terms.push((*k, parse_rational(c)?));
        }
        if let Some((k, _)) = terms.iter().find(|(k, _)| *k >= file.basis.len()) {
            return Err(LieError::IndexOutOfRange { index: *k, dim: file.basis.len() }.into());
        }
        brackets.push((b.left, b.right, SparseVec::from_pairs(terms)));
    }
    let g = LieAlgebra::new(file.name, file.basis, brackets)?;
    g.validate().map_err(CatalogError::Jacobi)?;
    Ok(g)
}

/// Canonical pretty JSON: pairs in `(left, right)` order, result terms by
/// index, zero brackets omitted.
pub fn serialize(g: &LieAlgebra) -> String {
    let file = AlgebraFile {
        name: g.name().to_string(),
        basis: g.labels().to_vec(),
        brackets: g
            .structure()
            .map(|(i, j, v)| BracketEntry {
                left: i,
                right: j,
                result: v.iter().map(|(k, c)| (k, c.to_string())).collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("serializable")
}

pub fn read_algebra(path: &Path) -> Result<LieAlgebra, CatalogError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CatalogError::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse_algebra(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Subspace;

    fn el(g: &LieAlgebra, l: &str) -> SparseVec {
        SparseVec::unit(g.index_of(l).unwrap())
    }

    #[test]
    fn sl2_table() {
        let g = sl2();
        assert_eq!(g.bracket_sparse(&el(&g, "e"), &el(&g, "f")), el(&g, "h"));
        assert_eq!(g.bracket_sparse(&el(&g, "h"), &el(&g, "f")), el(&g, "f").scaled(&int(-2)));
        assert_eq!(g.center().dim(), 0);
    }

    #[test]
    fn heisenberg_table() {
        let g = heisenberg(2);
        assert_eq!(g.labels(), ["x1", "x2", "y1", "y2", "z"]);
        assert_eq!(g.bracket_sparse(&el(&g, "x1"), &el(&g, "y1")), el(&g, "z"));
        assert!(g.bracket_sparse(&el(&g, "x1"), &el(&g, "y2")).is_zero());
        assert_eq!(g.center(), Subspace::coordinate(5, &[4]));
    }

    #[test]
    fn schrodinger_table() {
        for n in 1..=6 {
            let g = schrodinger(n);
            assert_eq!(g.dim(), 2 * n + 4);
            assert!(g.validate().is_ok());
            assert_eq!(g.center(), Subspace::coordinate(g.dim(), &[g.dim() - 1]));
        }
        let g = schrodinger(2);
        assert_eq!(g.bracket_sparse(&el(&g, "e"), &el(&g, "y1")), el(&g, "x1"));
        assert!(g.bracket_sparse(&el(&g, "e"), &el(&g, "x1")).is_zero());
        assert_eq!(g.bracket_sparse(&el(&g, "f"), &el(&g, "x2")), el(&g, "y2"));
        assert_eq!(g.bracket_sparse(&el(&g, "h"), &el(&g, "y2")), -&el(&g, "y2"));
        assert_eq!(g.labels(), ["e", "f", "h", "x1", "x2", "y1", "y2", "z"]);
    }

    #[test]
    fn quotient_table() {
        for n in 1..=6 {
            let g = schrodinger_mod_center(n);
            assert_eq!(g.dim(), 2 * n + 3);
            assert!(g.validate().is_ok());
            assert_eq!(g.center().dim(), 0);
        }
        let g = schrodinger_mod_center(2);
        assert_eq!(g.labels(), ["e", "f", "h", "x1", "x2", "y1", "y2"]);
        assert!(g.bracket_sparse(&el(&g, "x1"), &el(&g, "y1")).is_zero());
        assert_eq!(g.bracket_sparse(&el(&g, "f"), &el(&g, "x1")), el(&g, "y1"));
    }

    #[test]
    fn quotient_is_semidirect_with_abelian() {
        for n in 1..=4 {
            let direct = LieAlgebra::semidirect(&sl2(), &abelian_xy(n), &schrodinger_action(n, false)).unwrap();
            let q = schrodinger_mod_center(n);
            assert_eq!(direct.structure().collect::<Vec<_>>(), q.structure().collect::<Vec<_>>());
            assert_eq!(direct.labels(), q.labels());
        }
    }

    #[test]
    fn outer_derivations_are_derivations() {
        for n in 1..=4 {
            let g = schrodinger(n);
            let outer = schrodinger_outer_derivations(n);
            assert_eq!(outer.len(), n * (n - 1) / 2 + 1);
            for d in &outer {
                assert!(g.is_derivation(d));
            }
        }
    }

    #[test]
    fn resolve_specs() {
        assert_eq!(resolve("schrodinger:3").unwrap().algebra.dim(), 10);
        assert_eq!(resolve("schrodinger-quotient:2").unwrap().algebra.dim(), 7);
        assert_eq!(resolve("abelian:4").unwrap().algebra.dim(), 4);
        assert!(matches!(resolve("heisenberg:0"), Err(CatalogError::InvalidParameter(_))));
        assert!(matches!(resolve("so3"), Err(CatalogError::UnknownSpec(_))));
        let e = resolve("schrodinger:2").unwrap();
        assert_eq!(e.part("heisenberg").unwrap(), vec![3, 4, 5, 6, 7]);
        assert_eq!(e.part("e,h").unwrap(), vec![0, 2]);
        assert!(e.part("q").is_err());
    }

    #[test]
    fn json_roundtrip() {
        for g in [sl2(), schrodinger(2), abelian(3), schrodinger_mod_center(3)] {
            let text = serialize(&g);
            let back = parse_algebra(&text).unwrap();
            assert_eq!(back, g);
            assert_eq!(serialize(&back), text);
        }
    }

    #[test]
    fn json_rejects_jacobi_violation() {
        let text = r#"{"name": "bad", "basis": ["e", "f", "h"], "brackets": [
            {"left": 0, "right": 1, "result": [[2, "1"]]},
            {"left": 0, "right": 2, "result": [[0, "-1"]]},
            {"left": 1, "right": 2, "result": [[1, "2"]]}]}"#;
        match parse_algebra(text) {
            Err(CatalogError::Jacobi(v)) => {
                assert_eq!(v.triple, [0, 1, 2]);
                assert_eq!(v.residual_text, "-h");
            }
            other => panic!("expected Jacobi violation, got {other:?}"),
        }
    }

    #[test]
    fn json_rejects_malformed() {
        assert!(matches!(parse_algebra("{"), Err(CatalogError::Malformed(_))));
        let reversed = r#"{"name": "x", "basis": ["a", "b"], "brackets": [{"left": 1, "right": 0, "result": []}]}"#;
        assert!(matches!(parse_algebra(reversed), Err(CatalogError::Malformed(_))));
        let oob = r#"{"name": "x", "basis": ["a", "b"], "brackets": [{"left": 0, "right": 1, "result": [[7, "1"]]}]}"#;
        assert!(matches!(parse_algebra(oob), Err(CatalogError::Lie(LieError::IndexOutOfRange { .. }))));
        let bad_num = r#"{"name": "x", "basis": ["a", "b"], "brackets": [{"left": 0, "right": 1, "result": [[0, "1/0"]]}]}"#;
        assert!(matches!(parse_algebra(bad_num), Err(CatalogError::Linalg(_))));
    }
}
