//! Ready-made algebras: abelian `A(n)`, Heisenberg `H(m)`, the generalized
//! Heisenberg algebra `GH(d)` of maximal rank and its extensions.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::Zero;

use crate::hall::FreeNilpotent;
use crate::lie::{LieAlgebra, LieHom};
use crate::linalg::{int, unit_vec, zero_vec, MatrixQ, Rational, Subspace};
use crate::{Error, Result};

pub fn abelian(n: usize) -> LieAlgebra {
    let labels = (1..=n).map(|i| format!("a{i}")).collect();
    LieAlgebra::with_labels(labels, BTreeMap::new()).expect("abelian algebras satisfy Jacobi")
}

/// `H(m) = <a_1, b_1, …, a_m, b_m, z | [a_l, b_l] = z>`, basis in that order.
pub fn heisenberg(m: usize) -> Result<LieAlgebra> {
    if m == 0 {
        return Err(Error::InvalidArgument("H(m) needs m >= 1".into()));
    }
    let dim = 2 * m + 1;
    let mut labels = Vec::with_capacity(dim);
    let mut table = BTreeMap::new();
    for l in 0..m {
        labels.push(format!("a{}", l + 1));
        labels.push(format!("b{}", l + 1));
        table.insert((2 * l, 2 * l + 1), unit_vec(dim, dim - 1));
    }
    labels.push("z".into());
    LieAlgebra::with_labels(labels, table)
}

/// `GH(d) = <x_1, …, x_d, y_ij | [x_i, x_j] = y_ij, i < j>` with basis
/// `x_1, …, x_d, y_12, y_13, …, y_(d-1)d`.
#[derive(Clone, Debug)]
pub struct GHPresentation {
    d: usize,
    algebra: Arc<LieAlgebra>,
}

impl GHPresentation {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Basis position of `y_ij` for 1-based `i < j`.
    pub fn y_index(&self, i: usize, j: usize) -> Result<usize> {
        y_index(self.d, i, j)
    }

    /// Pairs `(i, j)` in basis order.
    pub fn y_pairs(&self) -> Vec<(usize, usize)> {
        y_pairs(self.d)
    }

    /// Span of the `y_ij`, which is both `GH(d)²` and the center.
    pub fn y_span(&self) -> Subspace {
        Subspace::coordinate(self.dim(), self.d..self.dim())
    }

    /// The isomorphism onto `F_{d,2}` sending `x_i` to the generator `x_i`
    /// and `y_ij = [x_i, x_j]` to `-[x_j, x_i]`, the negated Hall basis element.
    pub fn to_free(&self, free: &FreeNilpotent) -> Result<LieHom> {
        if free.generators() != self.d || free.class() != 2 {
            return Err(Error::InvalidArgument(format!(
                "GH({}) relabels onto F({}, 2)",
                self.d, self.d
            )));
        }
        let n = self.dim();
        let mut columns = Vec::with_capacity(n);
        for i in 0..self.d {
            columns.push(unit_vec(n, i));
        }
        for (i, j) in self.y_pairs() {
            let rank = free
                .basis()
                .rank_of(j - 1, i - 1)
                .expect("[x_j, x_i] is a basic commutator for i < j");
            let mut v = zero_vec(n);
            v[rank] = int(-1);
            columns.push(v);
        }
        let matrix = MatrixQ::from_columns(n, &columns)?;
        LieHom::new(self.algebra.clone(), free.algebra().clone(), matrix)
    }
}

fn y_pairs(d: usize) -> Vec<(usize, usize)> {
    (1..=d)
        .flat_map(|i| ((i + 1)..=d).map(move |j| (i, j)))
        .collect()
}

fn y_index(d: usize, i: usize, j: usize) -> Result<usize> {
    if !(1 <= i && i < j && j <= d) {
        return Err(Error::InvalidArgument(format!(
            "y_{{{i}{j}}} needs 1 <= i < j <= {d}"
        )));
    }
    // pairs before row i: Σ_{r<i} (d - r)
    let before: usize = (1..i).map(|r| d - r).sum();
    Ok(d + before + (j - i - 1))
}

pub fn generalized_heisenberg(d: usize) -> Result<GHPresentation> {
    if d < 2 {
        return Err(Error::InvalidArgument("GH(d) needs d >= 2".into()));
    }
    let dim = d * (d + 1) / 2;
    let mut labels: Vec<String> = (1..=d).map(|i| format!("x{i}")).collect();
    let mut table = BTreeMap::new();
    for (i, j) in y_pairs(d) {
        let y = y_index(d, i, j)?;
        labels.push(format!("y{i}{j}"));
        table.insert((i - 1, j - 1), unit_vec(dim, y));
    }
    let algebra = Arc::new(LieAlgebra::with_labels(labels, table)?);
    Ok(GHPresentation { d, algebra })
}

/// `GH(d) ⊕ A(t)`
pub fn class2_maximal(d: usize, t: usize) -> Result<LieAlgebra> {
    let gh = generalized_heisenberg(d)?;
    Ok(gh.algebra().direct_sum(&abelian(t)))
}

/// `GH(d) / span(w)` for a nonzero `w` in the span of the `y_ij`. `w` is a
/// full coordinate vector of length `½d(d+1)`.
pub fn central_quotient_gh(d: usize, w: &[Rational]) -> Result<(Arc<LieAlgebra>, LieHom)> {
    let gh = generalized_heisenberg(d)?;
    if w.len() != gh.dim() {
        return Err(Error::DimensionMismatch {
            expected: gh.dim(),
            found: w.len(),
        });
    }
    if w.iter().all(Zero::is_zero) {
        return Err(Error::InvalidArgument("quotient vector must be nonzero".into()));
    }
    if w[..d].iter().any(|x| !x.is_zero()) {
        return Err(Error::InvalidArgument(
            "quotient vector must lie in the span of the y_ij".into(),
        ));
    }
    let k = Subspace::span(gh.dim(), [w.to_vec()])?;
    gh.algebra().quotient_algebra(&k)
}

/// Full coordinate vector of `Σ c_ij y_ij` in `GH(d)`.
pub fn gh_y_vector(d: usize, coeffs: &[((usize, usize), i64)]) -> Result<Vec<Rational>> {
    let mut v = zero_vec(d * (d + 1) / 2);
    for &((i, j), c) in coeffs {
        v[y_index(d, i, j)?] += int(c);
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hall::free_nilpotent;

    #[test]
    fn abelian_examples() {
        assert_eq!(abelian(0).dim(), 0);
        assert!(abelian(3).center().is_full());
        assert_eq!(abelian(5).minimal_generator_count(), Ok(5));
    }

    #[test]
    fn heisenberg_examples() {
        let h1 = heisenberg(1).unwrap();
        assert_eq!(h1.dim(), 3);
        assert_eq!(h1.nilpotency_class(), Ok(2));
        let h2 = heisenberg(2).unwrap();
        assert_eq!(h2.dim(), 5);
        assert_eq!(h2.center().dim(), 1);
        assert_eq!(h2.center(), h2.derived());
        assert_eq!(heisenberg(3).unwrap().minimal_generator_count(), Ok(6));
        assert!(heisenberg(0).is_err());
    }

    #[test]
    fn y_indices_follow_lexicographic_pairs() {
        assert_eq!(y_index(4, 1, 2), Ok(4));
        assert_eq!(y_index(4, 1, 4), Ok(6));
        assert_eq!(y_index(4, 2, 3), Ok(7));
        assert_eq!(y_index(4, 3, 4), Ok(9));
        assert!(y_index(4, 2, 2).is_err());
        assert!(y_index(4, 3, 5).is_err());
    }

    #[test]
    fn generalized_heisenberg_examples() {
        let gh2 = generalized_heisenberg(2).unwrap();
        assert!(gh2.algebra().same_table(&heisenberg(1).unwrap()));
        for (d, dim, derived) in [(3, 6, 3), (4, 10, 6)] {
            let gh = generalized_heisenberg(d).unwrap();
            let l = gh.algebra();
            assert_eq!(l.dim(), dim);
            assert_eq!(l.derived().dim(), derived);
            assert_eq!(l.center(), l.derived());
            assert_eq!(l.center(), gh.y_span());
            assert_eq!(l.minimal_generator_count(), Ok(d));
        }
        assert!(generalized_heisenberg(1).is_err());
    }

    #[test]
    fn generalized_heisenberg_is_free_of_class_two() {
        for d in 2..=5 {
            let gh = generalized_heisenberg(d).unwrap();
            let free = free_nilpotent(d, 2).unwrap();
            let iso = gh.to_free(&free).unwrap();
            assert!(iso.is_isomorphism(), "d = {d}");
        }
    }

    #[test]
    fn class2_maximal_examples() {
        assert!(class2_maximal(2, 0).unwrap().same_table(&heisenberg(1).unwrap()));
        let l = class2_maximal(3, 2).unwrap();
        assert_eq!(l.dim(), 8);
        assert_eq!(l.center().dim(), 5);
        assert_eq!(l.derived().dim(), 3);
        let l = class2_maximal(2, 1).unwrap();
        assert_eq!(l.dim(), 4);
        assert_eq!(l.nilpotency_class(), Ok(2));
    }

    #[test]
    fn class2_maximal_splits_back() {
        for d in 2..=4 {
            for t in 0..=2 {
                let l = class2_maximal(d, t).unwrap();
                assert_eq!(l.minimal_generator_count(), Ok(d + t));
                let s = l.decompose_class2().unwrap();
                assert_eq!(s.t, t);
                assert_eq!(s.heisenberg.dim(), d * (d + 1) / 2);
                assert_eq!(s.heisenberg.derived().dim(), d * (d - 1) / 2);
            }
        }
    }

    #[test]
    fn central_quotient_examples() {
        let (q, _) = central_quotient_gh(2, &gh_y_vector(2, &[((1, 2), 1)]).unwrap()).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.is_abelian());

        let (q, pi) = central_quotient_gh(3, &gh_y_vector(3, &[((1, 2), 1)]).unwrap()).unwrap();
        assert_eq!(q.dim(), 5);
        assert_eq!(q.derived().dim(), 2);
        assert_eq!(q.nilpotency_class(), Ok(2));
        assert!(pi.is_surjective());

        let w = gh_y_vector(4, &[((1, 2), 1), ((3, 4), 1)]).unwrap();
        let (q, _) = central_quotient_gh(4, &w).unwrap();
        assert_eq!(q.dim(), 9);
        assert_eq!(q.derived().dim(), 5);
    }

    #[test]
    fn central_quotient_rejects_bad_vectors() {
        assert!(central_quotient_gh(3, &zero_vec(6)).is_err());
        assert!(central_quotient_gh(3, &unit_vec(6, 0)).is_err());
        assert!(central_quotient_gh(3, &unit_vec(5, 4)).is_err());
    }

    /// Central-quotient bound dim L² ≤ ½n(n-1) with n = dim L/Z(L), attained by GH(d).
    #[test]
    fn central_quotient_bound_on_catalog() {
        let mut catalog = vec![abelian(3), heisenberg(1).unwrap(), heisenberg(3).unwrap()];
        for d in 2..=4 {
            catalog.push(generalized_heisenberg(d).unwrap().algebra().as_ref().clone());
            catalog.push(class2_maximal(d, 1).unwrap());
        }
        catalog.push(free_nilpotent(2, 3).unwrap().algebra().as_ref().clone());
        catalog.push(free_nilpotent(3, 3).unwrap().algebra().as_ref().clone());
        for l in &catalog {
            let n = l.dim() - l.center().dim();
            assert!(2 * l.derived().dim() <= n * n.saturating_sub(1), "{l}");
        }
        for d in 2..=5 {
            let gh = generalized_heisenberg(d).unwrap();
            let l = gh.algebra();
            let n = l.dim() - l.center().dim();
            assert_eq!(n, d);
            assert_eq!(2 * l.derived().dim(), n * (n - 1));
        }
    }
}
