//! Finite-dimensional Lie algebras given by structure constants.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::linalg::{
    format_combination, is_zero_vec, solve_homogeneous, unit_vec, zero_vec, EchelonBuilder,
    MatrixQ, QuotientMap, Rational, Subspace,
};
use crate::{Error, Result};

const NO_ENTRY: u32 = u32::MAX;

type SparseVec = Vec<(usize, Rational)>;

/// A Lie algebra on the basis `e_0, …, e_{n-1}`. Only `[e_i, e_j]` with
/// `i < j` is stored; the other brackets follow from antisymmetry.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    entries: Vec<((usize, usize), SparseVec)>,
    slots: Vec<u32>,
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.same_table(other)
    }
}

impl Eq for LieAlgebra {}

pub fn default_labels(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("e{i}")).collect()
}

impl LieAlgebra {
    /// Builds the algebra with labels `e1, …, en`.
    pub fn new(dim: usize, table: BTreeMap<(usize, usize), Vec<Rational>>) -> Result<Self> {
        Self::with_labels(default_labels(dim), table)
    }

    /// Builds the algebra from the upper-triangular bracket table (0-based
    /// keys with `i < j`) and checks the Jacobi identity on every basis triple.
    pub fn with_labels(
        labels: Vec<String>,
        table: BTreeMap<(usize, usize), Vec<Rational>>,
    ) -> Result<Self> {
        let dim = labels.len();
        let mut entries = Vec::with_capacity(table.len());
        for ((i, j), value) in table {
            if i >= dim || j >= dim {
                return Err(Error::IndexOutOfRange {
                    index: i.max(j),
                    dim,
                });
            }
            if i >= j {
                return Err(Error::UnorderedKey { i, j });
            }
            if value.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: value.len(),
                });
            }
            let sparse: SparseVec = value
                .into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .collect();
            if !sparse.is_empty() {
                entries.push(((i, j), sparse));
            }
        }
        let mut slots = vec![NO_ENTRY; dim * dim];
        for (k, ((i, j), _)) in entries.iter().enumerate() {
            slots[i * dim + j] = k as u32;
        }
        let algebra = LieAlgebra {
            dim,
            labels,
            entries,
            slots,
        };
        algebra.check_jacobi()?;
        Ok(algebra)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn relabeled(&self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: labels.len(),
            });
        }
        Ok(LieAlgebra {
            labels,
            ..self.clone()
        })
    }

    /// Structure constants agree, ignoring labels.
    pub fn same_table(&self, other: &LieAlgebra) -> bool {
        self.dim == other.dim && self.entries == other.entries
    }

    /// Nonzero stored brackets `[e_i, e_j]`, `i < j`.
    pub fn table(&self) -> impl Iterator<Item = ((usize, usize), &[(usize, Rational)])> + '_ {
        self.entries.iter().map(|(k, v)| (*k, v.as_slice()))
    }

    pub fn table_dense(&self) -> BTreeMap<(usize, usize), Vec<Rational>> {
        self.entries
            .iter()
            .map(|(k, sparse)| {
                let mut v = zero_vec(self.dim);
                for (l, x) in sparse {
                    v[*l] = x.clone();
                }
                (*k, v)
            })
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.entries.is_empty()
    }

    /// `[e_i, e_j]` as a sign and a sparse vector, or `None` when it vanishes.
    fn basis_bracket(&self, i: usize, j: usize) -> Option<(bool, &[(usize, Rational)])> {
        if i == j {
            return None;
        }
        let (a, b, negate) = if i < j { (i, j, false) } else { (j, i, true) };
        match self.slots[a * self.dim + b] {
            NO_ENTRY => None,
            k => Some((negate, &self.entries[k as usize].1)),
        }
    }

    /// `[e_i, e_j]` as a dense vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        let mut out = zero_vec(self.dim);
        if let Some((negate, sparse)) = self.basis_bracket(i, j) {
            for (l, x) in sparse {
                out[*l] = if negate { -x.clone() } else { x.clone() };
            }
        }
        out
    }

    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        assert_eq!(u.len(), self.dim, "left operand has wrong length");
        assert_eq!(v.len(), self.dim, "right operand has wrong length");
        let mut out = zero_vec(self.dim);
        if self.entries.is_empty() {
            return out;
        }
        let nz_u: Vec<usize> = (0..self.dim).filter(|&i| !u[i].is_zero()).collect();
        let nz_v: Vec<usize> = (0..self.dim).filter(|&j| !v[j].is_zero()).collect();
        for &i in &nz_u {
            for &j in &nz_v {
                let Some((negate, sparse)) = self.basis_bracket(i, j) else {
                    continue;
                };
                let mut c = &u[i] * &v[j];
                if negate {
                    c = -c;
                }
                for (l, x) in sparse {
                    out[*l] += &c * x;
                }
            }
        }
        out
    }

    /// Jacobi identity on all basis triples `i < j < k`.
    pub fn check_jacobi(&self) -> Result<()> {
        let n = self.dim;
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    acc.clear();
                    let mut touched = false;
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let Some((neg_ab, ab)) = self.basis_bracket(a, b) else {
                            continue;
                        };
                        for (l, x) in ab {
                            let Some((neg_lc, lc)) = self.basis_bracket(*l, c) else {
                                continue;
                            };
                            let f = if neg_ab != neg_lc { -x.clone() } else { x.clone() };
                            for (m, y) in lc {
                                *acc.entry(*m).or_insert_with(Rational::zero) += &f * y;
                                touched = true;
                            }
                        }
                    }
                    if touched && acc.values().any(|x| !x.is_zero()) {
                        return Err(Error::JacobiViolation {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.dim)
    }

    /// Span of `[x, y]` over the echelon bases of `a` and `b`.
    pub fn product_subspace(&self, a: &Subspace, b: &Subspace) -> Subspace {
        assert_eq!(a.ambient_dim(), self.dim);
        assert_eq!(b.ambient_dim(), self.dim);
        let mut builder = EchelonBuilder::new(self.dim);
        if self.entries.is_empty() {
            return builder.finish();
        }
        for x in a.basis() {
            for y in b.basis() {
                builder.insert(self.bracket(x, y));
            }
        }
        builder.finish()
    }

    /// `L²`
    pub fn derived(&self) -> Subspace {
        Subspace::span(self.dim, self.entries.iter().map(|(_, sparse)| {
            let mut v = zero_vec(self.dim);
            for (l, x) in sparse {
                v[*l] = x.clone();
            }
            v
        }))
        .expect("table vectors have the algebra dimension")
    }

    /// `[S, L]`, using the basis of `L` as the right-hand factor.
    pub fn bracket_with_algebra(&self, s: &Subspace) -> Subspace {
        self.product_subspace(s, &self.full())
    }

    /// `L¹ = L, L^{k+1} = [L^k, L]`, stopping at the first term equal to its
    /// predecessor (the zero space for nilpotent algebras). The last entry is
    /// the stable term.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let mut series = vec![self.full()];
        if self.dim == 0 {
            return series;
        }
        loop {
            let last = series.last().expect("series is never empty");
            let next = self.bracket_with_algebra(last);
            if &next == last {
                break;
            }
            let done = next.is_zero();
            series.push(next);
            if done {
                break;
            }
        }
        series
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series()
            .last()
            .is_some_and(Subspace::is_zero)
    }

    /// Largest `k` with `L^k ≠ 0`; the zero algebra has class 0.
    pub fn nilpotency_class(&self) -> Result<usize> {
        let series = self.lower_central_series();
        if !series.last().is_some_and(Subspace::is_zero) {
            return Err(Error::NotNilpotent);
        }
        Ok(series.len() - 1)
    }

    pub fn center(&self) -> Subspace {
        let n = self.dim;
        // one equation per (i, l): coefficient of e_l in [x, e_i] vanishes
        let mut rows = Vec::new();
        for i in 0..n {
            let mut by_target: BTreeMap<usize, Vec<Rational>> = BTreeMap::new();
            for k in 0..n {
                if let Some((negate, sparse)) = self.basis_bracket(k, i) {
                    for (l, x) in sparse {
                        let row = by_target.entry(*l).or_insert_with(|| zero_vec(n));
                        row[k] = if negate { -x.clone() } else { x.clone() };
                    }
                }
            }
            rows.extend(by_target.into_values());
        }
        solve_homogeneous(n, rows)
    }

    pub fn is_ideal(&self, k: &Subspace) -> bool {
        self.bracket_with_algebra(k).is_subspace_of(k)
    }

    pub fn is_central(&self, k: &Subspace) -> bool {
        k.is_subspace_of(&self.center())
    }

    pub fn minimal_generator_count(&self) -> Result<usize> {
        if !self.is_nilpotent() {
            return Err(Error::NotNilpotent);
        }
        Ok(self.dim - self.derived().dim())
    }

    /// `L / k` with the induced bracket, together with the projection.
    /// The quotient basis is indexed by the non-pivot columns of `k`.
    pub fn quotient_algebra(self: &Arc<Self>, k: &Subspace) -> Result<(Arc<LieAlgebra>, LieHom)> {
        if k.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: k.ambient_dim(),
            });
        }
        if !self.is_ideal(k) {
            return Err(Error::NotAnIdeal);
        }
        let q = QuotientMap::new(k.clone());
        let free = q.free_columns().to_vec();
        let labels = free.iter().map(|&c| self.labels[c].clone()).collect();
        let mut table = BTreeMap::new();
        for (a, &ca) in free.iter().enumerate() {
            for (b, &cb) in free.iter().enumerate().skip(a + 1) {
                let image = q.apply(&self.bracket_basis(ca, cb));
                if !is_zero_vec(&image) {
                    table.insert((a, b), image);
                }
            }
        }
        let quotient = Arc::new(LieAlgebra::with_labels(labels, table)?);
        let hom = LieHom::new(self.clone(), quotient.clone(), q.matrix())?;
        Ok((quotient, hom))
    }

    /// The subalgebra `s` in the coordinates of its echelon basis.
    pub fn subalgebra(&self, s: &Subspace) -> Result<LieAlgebra> {
        let basis = s.basis();
        let mut table = BTreeMap::new();
        for a in 0..basis.len() {
            for b in (a + 1)..basis.len() {
                let w = self.bracket(&basis[a], &basis[b]);
                let coords = s.coordinates(&w).ok_or_else(|| {
                    Error::InvalidArgument("subspace is not closed under the bracket".into())
                })?;
                if !is_zero_vec(&coords) {
                    table.insert((a, b), coords);
                }
            }
        }
        let labels = basis
            .iter()
            .map(|v| format_combination(v, &self.labels))
            .collect();
        LieAlgebra::with_labels(labels, table)
    }

    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let n = self.dim + other.dim;
        let mut table = BTreeMap::new();
        for ((i, j), sparse) in &self.entries {
            let mut v = zero_vec(n);
            for (l, x) in sparse {
                v[*l] = x.clone();
            }
            table.insert((*i, *j), v);
        }
        let off = self.dim;
        for ((i, j), sparse) in &other.entries {
            let mut v = zero_vec(n);
            for (l, x) in sparse {
                v[off + l] = x.clone();
            }
            table.insert((off + i, off + j), v);
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        disambiguate(&mut labels);
        LieAlgebra::with_labels(labels, table).expect("direct sum of Lie algebras is a Lie algebra")
    }

    /// Splits a class-two algebra as `H ⊕ A(t)` with `H` generalized
    /// Heisenberg (`Z(H) = H²`).
    pub fn decompose_class2(&self) -> Result<Class2Splitting> {
        let class = self.nilpotency_class().map_err(|_| Error::NotClassTwo(0))?;
        if class != 2 {
            return Err(Error::NotClassTwo(class));
        }
        let derived = self.derived();
        let center = self.center();
        let abelian_part = derived.complement_in(&center)?;
        let both = derived.sum(&abelian_part)?;
        let extension = both.extension_by((0..self.dim).map(|i| unit_vec(self.dim, i)));
        let mut h_span = EchelonBuilder::from_subspace(&derived);
        for v in extension {
            h_span.insert(v);
        }
        let heisenberg_part = h_span.finish();
        let heisenberg = self.subalgebra(&heisenberg_part)?;

        let h_derived = heisenberg.derived();
        if heisenberg.center() != h_derived || h_derived.dim() != derived.dim() {
            return Err(Error::InvalidArgument(
                "class-two splitting failed its Z(H) = H² check".into(),
            ));
        }
        Ok(Class2Splitting {
            t: abelian_part.dim(),
            heisenberg,
            heisenberg_part,
            abelian_part,
        })
    }

    pub fn to_json(&self) -> AlgebraJson {
        AlgebraJson::from(self)
    }
}

/// Primes repeated labels so every basis element has a distinct name.
fn disambiguate(labels: &mut [String]) {
    let mut seen = std::collections::BTreeSet::new();
    for l in labels.iter_mut() {
        while !seen.insert(l.clone()) {
            l.push('\'');
        }
    }
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}", self.labels.join(", "))?;
        let mut first = true;
        for ((i, j), _) in &self.entries {
            f.write_str(if first { " | " } else { ", " })?;
            first = false;
            let value = format_combination(&self.bracket_basis(*i, *j), &self.labels);
            write!(f, "[{}, {}] = {}", self.labels[*i], self.labels[*j], value)?;
        }
        write!(f, ">")
    }
}

/// Output of [`LieAlgebra::decompose_class2`].
#[derive(Clone, Debug)]
pub struct Class2Splitting {
    /// Generalized Heisenberg summand, in the echelon basis of `heisenberg_part`.
    pub heisenberg: LieAlgebra,
    pub t: usize,
    pub heisenberg_part: Subspace,
    /// Central complement of `L²` inside `Z(L)`.
    pub abelian_part: Subspace,
}

/// A bracket-preserving linear map, stored as a `dim target × dim source` matrix.
#[derive(Clone, Debug)]
pub struct LieHom {
    source: Arc<LieAlgebra>,
    target: Arc<LieAlgebra>,
    matrix: MatrixQ,
}

impl LieHom {
    pub fn new(source: Arc<LieAlgebra>, target: Arc<LieAlgebra>, matrix: MatrixQ) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch {
                expected: target.dim() * source.dim(),
                found: matrix.rows() * matrix.cols(),
            });
        }
        let images: Vec<Vec<Rational>> = (0..source.dim()).map(|j| matrix.column(j)).collect();
        for i in 0..source.dim() {
            for j in (i + 1)..source.dim() {
                let lhs = matrix.mul_vec(&source.bracket_basis(i, j));
                let rhs = target.bracket(&images[i], &images[j]);
                if lhs != rhs {
                    return Err(Error::NotAHomomorphism { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(LieHom {
            source,
            target,
            matrix,
        })
    }

    pub fn source(&self) -> &Arc<LieAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<LieAlgebra> {
        &self.target
    }

    pub fn matrix(&self) -> &MatrixQ {
        &self.matrix
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.matrix.mul_vec(v)
    }

    pub fn image(&self) -> Subspace {
        self.source
            .full()
            .image(&self.matrix)
            .expect("matrix columns match the source dimension")
    }

    pub fn kernel(&self) -> Subspace {
        solve_homogeneous(
            self.source.dim(),
            (0..self.matrix.rows()).map(|r| self.matrix.row(r).to_vec()),
        )
    }

    pub fn is_surjective(&self) -> bool {
        self.image().is_full()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_surjective()
    }

    /// Image of a subspace of the source.
    pub fn map_subspace(&self, s: &Subspace) -> Subspace {
        s.image(&self.matrix).expect("subspace lives in the source")
    }

    /// `{v : f(v) ∈ s}`
    pub fn preimage(&self, s: &Subspace) -> Subspace {
        let q = QuotientMap::new(s.clone());
        let composed = q.matrix().mul(&self.matrix).expect("dimensions agree");
        solve_homogeneous(
            self.source.dim(),
            (0..composed.rows()).map(|r| composed.row(r).to_vec()),
        )
    }
}

/// Wire format of a Lie algebra: 1-based indices, rationals as `"p/q"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub dim: usize,
    pub labels: Vec<String>,
    pub brackets: Vec<BracketJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketJson {
    pub i: usize,
    pub j: usize,
    pub value: BTreeMap<usize, String>,
}

impl From<&LieAlgebra> for AlgebraJson {
    fn from(l: &LieAlgebra) -> Self {
        let brackets = l
            .entries
            .iter()
            .map(|((i, j), sparse)| BracketJson {
                i: i + 1,
                j: j + 1,
                value: sparse.iter().map(|(k, x)| (k + 1, x.to_string())).collect(),
            })
            .collect();
        AlgebraJson {
            dim: l.dim,
            labels: l.labels.clone(),
            brackets,
        }
    }
}

impl TryFrom<AlgebraJson> for LieAlgebra {
    type Error = Error;

    fn try_from(j: AlgebraJson) -> Result<Self> {
        if j.labels.len() != j.dim {
            return Err(Error::DimensionMismatch {
                expected: j.dim,
                found: j.labels.len(),
            });
        }
        let mut table = BTreeMap::new();
        for b in j.brackets {
            if b.i == 0 || b.j == 0 {
                return Err(Error::IndexOutOfRange { index: 0, dim: j.dim });
            }
            let mut v = zero_vec(j.dim);
            for (k, s) in b.value {
                if k == 0 || k > j.dim {
                    return Err(Error::IndexOutOfRange { index: k, dim: j.dim });
                }
                v[k - 1] = s
                    .trim()
                    .parse::<Rational>()
                    .map_err(|e| Error::Serde(format!("bad rational {s:?}: {e}")))?;
            }
            if table.insert((b.i - 1, b.j - 1), v).is_some() {
                return Err(Error::Serde(format!("duplicate bracket ({}, {})", b.i, b.j)));
            }
        }
        LieAlgebra::with_labels(j.labels, table)
    }
}

impl LieAlgebra {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("algebra JSON is serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: AlgebraJson = serde_json::from_str(s).map_err(|e| Error::Serde(e.to_string()))?;
        LieAlgebra::try_from(j)
    }
}

/// `Σ c_k e_k` with the coefficients given as integers.
pub fn int_vector(coeffs: &[i64]) -> Vec<Rational> {
    coeffs.iter().map(|&c| crate::linalg::int(c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn heisenberg1() -> LieAlgebra {
        let mut t = BTreeMap::new();
        t.insert((0, 1), int_vector(&[0, 0, 1]));
        LieAlgebra::new(3, t).unwrap()
    }

    #[test]
    fn make_algebra_examples() {
        let a2 = LieAlgebra::new(2, BTreeMap::new()).unwrap();
        assert!(a2.is_abelian());
        assert_eq!(heisenberg1().dim(), 3);

        let mut t = BTreeMap::new();
        t.insert((0, 1), int_vector(&[0, 0, 1]));
        t.insert((0, 2), int_vector(&[1, 0, 0]));
        assert_eq!(
            LieAlgebra::new(3, t),
            Err(Error::JacobiViolation { i: 1, j: 2, k: 3 })
        );
    }

    #[test]
    fn make_algebra_rejects_bad_keys() {
        let mut t = BTreeMap::new();
        t.insert((0, 3), int_vector(&[0, 0, 1]));
        assert!(matches!(
            LieAlgebra::new(3, t),
            Err(Error::IndexOutOfRange { .. })
        ));
        let mut t = BTreeMap::new();
        t.insert((1, 0), int_vector(&[0, 0, 1]));
        assert!(matches!(LieAlgebra::new(3, t), Err(Error::UnorderedKey { .. })));
    }

    #[test]
    fn bracket_examples() {
        let a = LieAlgebra::new(3, BTreeMap::new()).unwrap();
        assert!(is_zero_vec(&a.bracket(&int_vector(&[1, 2, 3]), &int_vector(&[4, 5, 6]))));

        let h = heisenberg1();
        assert_eq!(h.bracket(&unit_vec(3, 0), &unit_vec(3, 1)), unit_vec(3, 2));
        assert_eq!(h.bracket(&unit_vec(3, 1), &unit_vec(3, 0)), int_vector(&[0, 0, -1]));
        let s = int_vector(&[1, 1, 0]);
        assert!(is_zero_vec(&h.bracket(&s, &s)));
    }

    #[test]
    fn series_and_center_of_heisenberg() {
        let h = heisenberg1();
        let z = Subspace::coordinate(3, [2]);
        assert_eq!(h.product_subspace(&h.full(), &h.full()), z);
        assert_eq!(h.derived(), z);
        assert_eq!(h.center(), z);
        let series = h.lower_central_series();
        assert_eq!(series.iter().map(Subspace::dim).collect::<Vec<_>>(), vec![3, 1, 0]);
        assert_eq!(h.nilpotency_class(), Ok(2));
        assert_eq!(h.minimal_generator_count(), Ok(2));
    }

    #[test]
    fn abelian_series() {
        let a = LieAlgebra::new(4, BTreeMap::new()).unwrap();
        let series = a.lower_central_series();
        assert_eq!(series, vec![Subspace::full(4), Subspace::zero(4)]);
        assert_eq!(a.nilpotency_class(), Ok(1));
        assert!(a.center().is_full());
        assert_eq!(a.minimal_generator_count(), Ok(4));
    }

    #[test]
    fn non_nilpotent_is_detected() {
        // 2-dim non-abelian: [e1, e2] = e2
        let mut t = BTreeMap::new();
        t.insert((0, 1), int_vector(&[0, 1]));
        let l = LieAlgebra::new(2, t).unwrap();
        assert!(!l.is_nilpotent());
        assert_eq!(l.nilpotency_class(), Err(Error::NotNilpotent));
        assert_eq!(l.minimal_generator_count(), Err(Error::NotNilpotent));
        assert!(matches!(l.decompose_class2(), Err(Error::NotClassTwo(_))));
    }

    #[test]
    fn quotient_of_heisenberg_by_center_is_abelian() {
        let h = Arc::new(heisenberg1());
        let (q, pi) = h.quotient_algebra(&h.center()).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.is_abelian());
        assert!(pi.is_surjective());
        assert_eq!(pi.kernel(), h.center());

        let (same, id) = h.quotient_algebra(&Subspace::zero(3)).unwrap();
        assert!(same.same_table(&h));
        assert!(id.is_isomorphism());
    }

    #[test]
    fn quotient_rejects_non_ideal() {
        let h = Arc::new(heisenberg1());
        let k = Subspace::coordinate(3, [0]);
        assert!(matches!(h.quotient_algebra(&k), Err(Error::NotAnIdeal)));
    }

    #[test]
    fn direct_sum_blocks() {
        let h = heisenberg1();
        let a1 = LieAlgebra::new(1, BTreeMap::new()).unwrap();
        let s = h.direct_sum(&a1);
        assert_eq!(s.dim(), 4);
        assert_eq!(s.derived().dim(), 1);
        assert_eq!(s.nilpotency_class(), Ok(2));
        assert_eq!(s.center().dim(), 2);
        assert_eq!(s.labels(), ["e1", "e2", "e3", "e1'"]);
    }

    #[test]
    fn decompose_already_split_algebra() {
        // [e1, e2] = e3, e4 central
        let mut t = BTreeMap::new();
        t.insert((0, 1), int_vector(&[0, 0, 1, 0]));
        let l = LieAlgebra::new(4, t).unwrap();
        let s = l.decompose_class2().unwrap();
        assert_eq!(s.t, 1);
        assert_eq!(s.heisenberg.dim(), 3);
        assert_eq!(s.heisenberg.center(), s.heisenberg.derived());
    }

    #[test]
    fn decompose_hidden_abelian_summand() {
        // [e1, e2] = e3 + e4, [e1, e4] = 0: center is span(e3, e4), L² = span(e3 + e4)
        let mut t = BTreeMap::new();
        t.insert((0, 1), int_vector(&[0, 0, 1, 1]));
        let l = LieAlgebra::new(4, t).unwrap();
        let s = l.decompose_class2().unwrap();
        assert_eq!(s.t, 1);
        assert_eq!(s.heisenberg.dim() + s.t, l.dim());
        assert_eq!(s.heisenberg.center(), s.heisenberg.derived());
        assert!(s.abelian_part.is_subspace_of(&l.center()));
        assert!(s.abelian_part.intersection(&l.derived()).unwrap().is_zero());
    }

    #[test]
    fn hom_validation() {
        let h = Arc::new(heisenberg1());
        let a2 = Arc::new(LieAlgebra::new(2, BTreeMap::new()).unwrap());
        // swapping x and y and negating z is an automorphism
        let m = MatrixQ::from_int_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, -1]]).unwrap();
        assert!(LieHom::new(h.clone(), h.clone(), m).is_ok());
        let bad = MatrixQ::from_int_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]).unwrap();
        assert!(matches!(
            LieHom::new(h.clone(), h.clone(), bad),
            Err(Error::NotAHomomorphism { .. })
        ));
        // an abelian algebra cannot map onto H(1) injectively on the derived part
        let m = MatrixQ::from_int_rows(&[&[1, 0], &[0, 1], &[0, 0]]).unwrap();
        assert!(matches!(LieHom::new(a2, h, m), Err(Error::NotAHomomorphism { .. })));
    }

    #[test]
    fn preimage_of_subspace() {
        let h = Arc::new(heisenberg1());
        let (_, pi) = h.quotient_algebra(&h.center()).unwrap();
        assert!(pi.preimage(&Subspace::zero(2)) == h.center());
        assert!(pi.preimage(&Subspace::full(2)).is_full());
    }

    #[test]
    fn json_round_trip_with_fractions() {
        let mut t = BTreeMap::new();
        t.insert((0, 1), vec![int(0), int(0), Rational::new((-3).into(), 7.into())]);
        let l = LieAlgebra::with_labels(vec!["a".into(), "b".into(), "z".into()], t).unwrap();
        let s = l.to_json_string();
        assert!(s.contains("\"-3/7\""));
        let back = LieAlgebra::from_json_str(&s).unwrap();
        assert_eq!(back, l);
    }

    #[test]
    fn json_wire_format_is_one_based() {
        let j = heisenberg1().to_json();
        let v = serde_json::to_value(&j).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "dim": 3,
                "labels": ["e1", "e2", "e3"],
                "brackets": [{"i": 1, "j": 2, "value": {"3": "1"}}]
            })
        );
    }

    #[test]
    fn json_rejects_bad_input() {
        let bad_index = r#"{"dim":2,"labels":["a","b"],"brackets":[{"i":1,"j":2,"value":{"3":"1"}}]}"#;
        assert!(LieAlgebra::from_json_str(bad_index).is_err());
        let bad_number = r#"{"dim":3,"labels":["a","b","c"],"brackets":[{"i":1,"j":2,"value":{"3":"1/0"}}]}"#;
        assert!(LieAlgebra::from_json_str(bad_number).is_err());
        let not_lie = r#"{"dim":3,"labels":["a","b","c"],"brackets":[
            {"i":1,"j":2,"value":{"3":"1"}},{"i":1,"j":3,"value":{"1":"1"}}]}"#;
        assert!(matches!(
            LieAlgebra::from_json_str(not_lie),
            Err(Error::JacobiViolation { .. })
        ));
    }
}
