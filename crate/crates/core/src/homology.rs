//! Free presentations and the invariants computed from them.
//!
//! For a nilpotent `L` of class `c` on `d` generators we use `F = F_{d,c+1}`
//! and `π: F → L` with kernel `R`. Since `F^{c+1} ⊆ R`, the truncated part
//! `F^{c+2}` lies in `[F, R]`, so every quotient below can be read off inside
//! the truncation:
//!
//! * `M(L) = (R ∩ F²) / [F, R]` (Hopf formula),
//! * `L ∧ L = F² / [F, R]`, with `κ'` induced by `π`,
//! * `Z^∧(L) = { x : [x̃, F] ⊆ [F, R] }` for any lift `x̃`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::hall::FreeNilpotent;
use crate::lie::{LieAlgebra, LieHom};
use crate::linalg::{
    is_zero_vec, solve_homogeneous, unit_vec, EchelonBuilder, MatrixQ, QuotientMap, Rational,
    Subspace,
};
use crate::{Error, Result};

/// `π: F_{d,c+1} → L` together with the subspaces the Hopf formula needs.
#[derive(Clone, Debug)]
pub struct Presentation {
    free: FreeNilpotent,
    pi: LieHom,
    class: usize,
    relations: Subspace,
    free_relations: Subspace,
    derived: Subspace,
    relations_in_derived: Subspace,
    section: Vec<Vec<Rational>>,
}

/// The first basis elements of `L`, in order, that project onto a basis of `L/L²`.
pub fn default_lifts(l: &LieAlgebra) -> Vec<Vec<Rational>> {
    let n = l.dim();
    l.derived().extension_by((0..n).map(|i| unit_vec(n, i)))
}

pub fn free_presentation(l: &Arc<LieAlgebra>) -> Result<Presentation> {
    Presentation::new(l)
}

impl Presentation {
    pub fn new(l: &Arc<LieAlgebra>) -> Result<Self> {
        Self::with_lifts(l, default_lifts(l))
    }

    /// Presentation sending the generator `x_i` to `lifts[i]`. The lifts must
    /// project onto a basis of `L/L²`.
    pub fn with_lifts(l: &Arc<LieAlgebra>, lifts: Vec<Vec<Rational>>) -> Result<Self> {
        let class = l.nilpotency_class()?;
        let derived_l = l.derived();
        let d = l.dim() - derived_l.dim();
        if lifts.len() != d || derived_l.extension_by(lifts.iter().cloned()).len() != d {
            return Err(Error::InvalidArgument(format!(
                "expected {d} lifts spanning L modulo L²"
            )));
        }
        let free = if d == 0 {
            FreeNilpotent::trivial(class + 1)
        } else {
            FreeNilpotent::new(d, class + 1)?
        };
        let f = free.algebra().clone();
        let basis = free.basis();

        let mut images: Vec<Vec<Rational>> = Vec::with_capacity(f.dim());
        for rank in 0..f.dim() {
            let image = match basis.element(rank).shape {
                crate::hall::Shape::Leaf(g) => lifts[g - 1].clone(),
                crate::hall::Shape::Node(u, v) => l.bracket(&images[u], &images[v]),
            };
            images.push(image);
        }
        let matrix = MatrixQ::from_columns(l.dim(), &images)?;
        let pi = LieHom::new(f.clone(), l.clone(), matrix)?;
        if !pi.is_surjective() {
            return Err(Error::InvalidArgument("presentation map is not onto".into()));
        }

        let relations = pi.kernel();
        let free_relations = ideal_bracket(&free, &relations);
        let derived = free.power(2);
        let relations_in_derived = relations.intersection(&derived)?;
        if !free.power(class + 1).is_subspace_of(&relations) {
            return Err(Error::InvalidArgument(
                "relations do not contain the class-truncation term".into(),
            ));
        }
        if !free_relations.is_subspace_of(&relations_in_derived) {
            return Err(Error::InvalidArgument("[F,R] is not inside R ∩ F²".into()));
        }

        let section = section_of(&pi, &relations)?;
        Ok(Presentation {
            free,
            pi,
            class,
            relations,
            free_relations,
            derived,
            relations_in_derived,
            section,
        })
    }

    pub fn free(&self) -> &FreeNilpotent {
        &self.free
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        self.pi.target()
    }

    pub fn pi(&self) -> &LieHom {
        &self.pi
    }

    /// Nilpotency class of the presented algebra.
    pub fn class(&self) -> usize {
        self.class
    }

    /// `R = ker π`
    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    /// `[F, R]`
    pub fn free_relations(&self) -> &Subspace {
        &self.free_relations
    }

    /// `F²`
    pub fn derived(&self) -> &Subspace {
        &self.derived
    }

    /// `R ∩ F²`
    pub fn relations_in_derived(&self) -> &Subspace {
        &self.relations_in_derived
    }

    /// A preimage in `F` of the `k`-th basis vector of `L`.
    pub fn lift(&self, k: usize) -> &[Rational] {
        &self.section[k]
    }

    pub fn lift_vector(&self, x: &[Rational]) -> Vec<Rational> {
        let mut out = crate::linalg::zero_vec(self.free.dim());
        for (c, s) in x.iter().zip(&self.section) {
            crate::linalg::axpy(&mut out, c, s);
        }
        out
    }

    pub fn schur_multiplier(&self) -> MultiplierResult {
        let basis = self
            .free_relations
            .extension_by(self.relations_in_derived.basis().iter().cloned());
        MultiplierResult {
            dim: self.relations_in_derived.dim() - self.free_relations.dim(),
            basis,
        }
    }

    pub fn exterior_square(&self) -> Result<ExteriorSquare> {
        let quotient = QuotientMap::new(self.free_relations.clone());
        let space = quotient.image_of(&self.derived);
        let lifts: Vec<Vec<Rational>> = space.basis().iter().map(|u| quotient.lift(u)).collect();
        let kappa_columns: Vec<Vec<Rational>> = lifts.iter().map(|f| self.pi.apply(f)).collect();
        let kappa = MatrixQ::from_columns(self.algebra().dim(), &kappa_columns)?;
        let kappa_image = Subspace::span(self.algebra().dim(), kappa_columns)?;
        let multiplier_dim = self.schur_multiplier().dim;
        let ext = ExteriorSquare {
            dim: space.dim(),
            basis: lifts,
            kappa,
            multiplier_dim,
        };
        if kappa_image != self.algebra().derived() || ext.dim != multiplier_dim + kappa_image.dim() {
            return Err(Error::InvalidArgument(
                "exterior square failed the exactness check".into(),
            ));
        }
        Ok(ext)
    }

    /// Whether `[F², F²] ⊆ [F, R]`, i.e. `L ∧ L` is abelian.
    pub fn exterior_square_is_abelian(&self) -> bool {
        let f = self.free.algebra();
        let derived_basis = self.derived.basis();
        derived_basis.iter().all(|u| {
            derived_basis
                .iter()
                .all(|v| self.free_relations.contains(&f.bracket(u, v)))
        })
    }

    /// `Z^∧(L)`: all `x` whose lift brackets every generator of `F` into `[F, R]`.
    /// Checking generators suffices since `[F, R]` is an ideal.
    pub fn exterior_center(&self) -> Result<Subspace> {
        let l = self.algebra();
        let f = self.free.algebra();
        let n = l.dim();
        let quotient = QuotientMap::new(self.free_relations.clone());
        let mut rows = Vec::new();
        for g in self.free.generator_indices() {
            let x_g = unit_vec(f.dim(), g);
            let columns: Vec<Vec<Rational>> = (0..n)
                .map(|k| quotient.apply(&f.bracket(&self.section[k], &x_g)))
                .collect();
            for t in 0..quotient.target_dim() {
                let row: Vec<Rational> = columns.iter().map(|c| c[t].clone()).collect();
                if !is_zero_vec(&row) {
                    rows.push(row);
                }
            }
        }
        let z = solve_homogeneous(n, rows);
        if !z.is_subspace_of(&l.center()) {
            return Err(Error::InvalidArgument(
                "exterior center escaped the center".into(),
            ));
        }
        Ok(z)
    }

    pub fn is_capable(&self) -> Result<bool> {
        Ok(self.exterior_center()?.is_zero())
    }

    /// `π⁻¹(k)`; an ideal of `F` whenever `k` is an ideal of `L`.
    fn relations_modulo(&self, k: &Subspace) -> Result<Subspace> {
        let l = self.algebra();
        if k.ambient_dim() != l.dim() {
            return Err(Error::DimensionMismatch {
                expected: l.dim(),
                found: k.ambient_dim(),
            });
        }
        if !l.is_central(k) {
            return Err(Error::NotCentral);
        }
        Ok(self.pi.preimage(k))
    }

    /// Dimension of the kernel of `M(L) → M(L/k)` for a central ideal `k`.
    /// `F` also presents `L/k` (with relations `R' = π⁻¹(k)`), so the map is
    /// `(R ∩ F²)/[F,R] → (R' ∩ F²)/[F,R']` and its kernel is
    /// `((R ∩ F²) ∩ [F,R']) / [F,R]`.
    pub fn multiplier_map_kernel_dim(&self, k: &Subspace) -> Result<usize> {
        let wider = self.relations_modulo(k)?;
        let wider_free = ideal_bracket(&self.free, &wider);
        let kernel = self.relations_in_derived.intersection(&wider_free)?;
        Ok(kernel.dim() - self.free_relations.dim())
    }

    /// `dim M(L/k)` computed in the same free algebra.
    pub fn quotient_multiplier_dim(&self, k: &Subspace) -> Result<usize> {
        let wider = self.relations_modulo(k)?;
        let wider_free = ideal_bracket(&self.free, &wider);
        Ok(wider.intersection(&self.derived)?.dim() - wider_free.dim())
    }

    /// `F / (S + [F, R])` with `S` a complement of `R ∩ F²` in `R`.
    pub fn cover(&self) -> Result<Cover> {
        let complement = self.relations_in_derived.complement_in(&self.relations)?;
        let ideal = complement.sum(&self.free_relations)?;
        let (algebra, projection) = self.free.algebra().quotient_algebra(&ideal)?;
        let multiplier = projection.map_subspace(&self.relations_in_derived);

        // π factors through F / (S + [F, R]) since S + [F, R] ⊆ R
        let quotient = QuotientMap::new(ideal);
        let columns: Vec<Vec<Rational>> = quotient
            .free_columns()
            .iter()
            .map(|&c| self.pi.apply(&unit_vec(self.free.dim(), c)))
            .collect();
        let to_base = LieHom::new(
            algebra.clone(),
            self.algebra().clone(),
            MatrixQ::from_columns(self.algebra().dim(), &columns)?,
        )?;
        let cover = Cover {
            algebra,
            multiplier,
            to_base,
        };
        cover.validate(self.schur_multiplier().dim)?;
        Ok(cover)
    }
}

/// `[F, I]` for an ideal `I` of a free nilpotent `F`: spanned by `[r, x_g]`
/// over a basis of `I` and the generators, because `I` is itself an ideal.
fn ideal_bracket(free: &FreeNilpotent, ideal: &Subspace) -> Subspace {
    let f = free.algebra();
    let mut builder = EchelonBuilder::new(f.dim());
    for r in ideal.basis() {
        for g in free.generator_indices() {
            builder.insert(f.bracket(r, &unit_vec(f.dim(), g)));
        }
    }
    builder.finish()
}

/// Preimages of the basis of `L` under `π`, supported on the non-pivot
/// columns of `R`.
fn section_of(pi: &LieHom, relations: &Subspace) -> Result<Vec<Vec<Rational>>> {
    let quotient = QuotientMap::new(relations.clone());
    let n = pi.target().dim();
    let columns: Vec<Vec<Rational>> = quotient
        .free_columns()
        .iter()
        .map(|&c| pi.matrix().column(c))
        .collect();
    let induced = MatrixQ::from_columns(n, &columns)?;
    let inverse = induced
        .inverse()
        .ok_or_else(|| Error::InvalidArgument("F/R is not isomorphic to L".into()))?;
    Ok((0..n)
        .map(|k| quotient.lift(&inverse.column(k)))
        .collect())
}

/// `M(L) = (R ∩ F²)/[F, R]`, with a basis lifted to `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplierResult {
    pub dim: usize,
    /// Vectors of `R ∩ F²` completing a basis of `[F, R]`.
    pub basis: Vec<Vec<Rational>>,
}

/// `L ∧ L = F²/[F, R]` and the commutator map `κ': L ∧ L → L²`.
#[derive(Clone, Debug)]
pub struct ExteriorSquare {
    pub dim: usize,
    /// Lifts to `F²` of a basis of the quotient.
    pub basis: Vec<Vec<Rational>>,
    /// `dim L × dim` matrix of `κ'` in that basis.
    pub kappa: MatrixQ,
    pub multiplier_dim: usize,
}

impl ExteriorSquare {
    pub fn kappa_rank(&self) -> usize {
        self.kappa.rank()
    }
}

/// A cover `K` of `L`: `M ⊆ Z(K) ∩ K²`, `K/M ≅ L`, `dim M = dim M(L)`.
#[derive(Clone, Debug)]
pub struct Cover {
    pub algebra: Arc<LieAlgebra>,
    pub multiplier: Subspace,
    /// `K → L` with kernel `M`.
    pub to_base: LieHom,
}

impl Cover {
    fn validate(&self, multiplier_dim: usize) -> Result<()> {
        let k = &self.algebra;
        let center_and_derived = k.center().intersection(&k.derived())?;
        let ok = self.multiplier.dim() == multiplier_dim
            && self.multiplier.is_subspace_of(&center_and_derived)
            && self.to_base.is_surjective()
            && self.to_base.kernel() == self.multiplier;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument("cover failed its defining-pair check".into()))
        }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

pub fn schur_multiplier(l: &Arc<LieAlgebra>) -> Result<MultiplierResult> {
    Ok(Presentation::new(l)?.schur_multiplier())
}

pub fn exterior_square(l: &Arc<LieAlgebra>) -> Result<ExteriorSquare> {
    Presentation::new(l)?.exterior_square()
}

pub fn exterior_center(l: &Arc<LieAlgebra>) -> Result<Subspace> {
    Presentation::new(l)?.exterior_center()
}

pub fn is_capable(l: &Arc<LieAlgebra>) -> Result<bool> {
    Presentation::new(l)?.is_capable()
}

pub fn multiplier_map_kernel_dim(l: &Arc<LieAlgebra>, k: &Subspace) -> Result<usize> {
    Presentation::new(l)?.multiplier_map_kernel_dim(k)
}

pub fn cover(l: &Arc<LieAlgebra>) -> Result<Cover> {
    Presentation::new(l)?.cover()
}

/// `dim(L ⊗ L) = dim M(L) + dim L² + ½a(a+1)` with `a = dim L/L²`, valid for
/// class at most two.
pub fn tensor_square_dim(l: &Arc<LieAlgebra>) -> Result<usize> {
    let p = Presentation::new(l)?;
    tensor_square_dim_from(&p)
}

fn tensor_square_dim_from(p: &Presentation) -> Result<usize> {
    if p.class() > 2 {
        return Err(Error::ClassTooHigh(p.class()));
    }
    let l = p.algebra();
    let derived = l.derived().dim();
    let a = l.dim() - derived;
    Ok(p.schur_multiplier().dim + derived + a * (a + 1) / 2)
}

/// `(dim M(a ⊕ b), dim M(a) + dim M(b) + dim a/a² · dim b/b²)`
pub fn multiplier_of_direct_sum_check(a: &LieAlgebra, b: &LieAlgebra) -> Result<(usize, usize)> {
    let sum = Arc::new(a.direct_sum(b));
    let direct = schur_multiplier(&sum)?.dim;
    let ma = schur_multiplier(&Arc::new(a.clone()))?.dim;
    let mb = schur_multiplier(&Arc::new(b.clone()))?.dim;
    let aa = a.dim() - a.derived().dim();
    let ab = b.dim() - b.derived().dim();
    Ok((direct, ma + mb + aa * ab))
}

/// Invariants reported by `liemult invariants`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub algebra: String,
    pub dim: usize,
    pub multiplier_dim: usize,
    pub exterior_square_dim: usize,
    pub capable: bool,
    pub cover_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tensor_square_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

pub fn invariants(name: &str, l: &Arc<LieAlgebra>) -> Result<Invariants> {
    let p = Presentation::new(l)?;
    let multiplier_dim = p.schur_multiplier().dim;
    let exterior_square_dim = p.exterior_square()?.dim;
    let capable = p.is_capable()?;
    let cover_dim = p.cover()?.dim();
    let (tensor_square_dim, note) = match tensor_square_dim_from(&p) {
        Ok(t) => (Some(t), None),
        Err(Error::ClassTooHigh(c)) => (
            None,
            Some(format!(
                "tensor square omitted: the class-two formula does not apply to class {c}"
            )),
        ),
        Err(e) => return Err(e),
    };
    Ok(Invariants {
        algebra: name.to_string(),
        dim: l.dim(),
        multiplier_dim,
        exterior_square_dim,
        capable,
        cover_dim,
        tensor_square_dim,
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{abelian, class2_maximal, generalized_heisenberg, heisenberg};
    use crate::hall::{free_nilpotent, witt};

    fn arc(l: LieAlgebra) -> Arc<LieAlgebra> {
        Arc::new(l)
    }

    fn gh(d: usize) -> Arc<LieAlgebra> {
        generalized_heisenberg(d).unwrap().algebra().clone()
    }

    fn l3(d: usize) -> usize {
        witt(d as u64, 3).unwrap() as usize
    }

    #[test]
    fn presentation_examples() {
        let p = Presentation::new(&arc(abelian(2))).unwrap();
        assert_eq!(p.free().dim(), 3);
        assert_eq!(p.relations(), &Subspace::coordinate(3, [2]));

        let p = Presentation::new(&arc(heisenberg(1).unwrap())).unwrap();
        assert_eq!(p.free().dim(), 5);
        assert_eq!(p.relations().dim(), 2);

        let p = Presentation::new(&gh(3)).unwrap();
        assert_eq!(p.free().dim(), 14);
        assert_eq!(p.relations().dim(), 8);
    }

    #[test]
    fn section_lifts_basis() {
        let l = arc(class2_maximal(3, 1).unwrap());
        let p = Presentation::new(&l).unwrap();
        for k in 0..l.dim() {
            assert_eq!(p.pi().apply(p.lift(k)), unit_vec(l.dim(), k));
        }
    }

    #[test]
    fn multiplier_examples() {
        assert_eq!(schur_multiplier(&arc(abelian(4))).unwrap().dim, 6);
        assert_eq!(schur_multiplier(&arc(heisenberg(2).unwrap())).unwrap().dim, 5);
        assert_eq!(schur_multiplier(&gh(3)).unwrap().dim, 8);
        assert_eq!(schur_multiplier(&arc(abelian(0))).unwrap().dim, 0);
        assert_eq!(schur_multiplier(&arc(abelian(1))).unwrap().dim, 0);
    }

    #[test]
    fn multiplier_basis_lies_in_relations() {
        let p = Presentation::new(&gh(3)).unwrap();
        let m = p.schur_multiplier();
        assert_eq!(m.basis.len(), m.dim);
        for b in &m.basis {
            assert!(p.relations_in_derived().contains(b));
            assert!(!p.free_relations().contains(b));
        }
    }

    #[test]
    fn exterior_square_examples() {
        for n in 1..=4 {
            let e = exterior_square(&arc(abelian(n))).unwrap();
            assert_eq!(e.dim, n * (n - 1) / 2);
            assert!(e.kappa.is_zero());
        }
        let e = exterior_square(&gh(3)).unwrap();
        assert_eq!(e.dim, 11);
        assert_eq!(e.kappa_rank(), 3);
        let e = exterior_square(&arc(class2_maximal(2, 1).unwrap())).unwrap();
        assert_eq!(e.dim, 5);
    }

    #[test]
    fn exterior_center_examples() {
        let a1 = arc(abelian(1));
        assert!(exterior_center(&a1).unwrap().is_full());
        assert!(!is_capable(&a1).unwrap());
        for d in 2..=4 {
            assert!(exterior_center(&gh(d)).unwrap().is_zero(), "d = {d}");
        }
        let h2 = arc(heisenberg(2).unwrap());
        assert_eq!(exterior_center(&h2).unwrap(), h2.derived());
        assert!(is_capable(&arc(abelian(2))).unwrap());
        assert!(is_capable(&arc(heisenberg(1).unwrap())).unwrap());
    }

    #[test]
    fn capability_examples() {
        assert!(is_capable(&gh(3)).unwrap());
        assert!(is_capable(&arc(class2_maximal(3, 2).unwrap())).unwrap());
        assert!(!is_capable(&arc(heisenberg(3).unwrap())).unwrap());
    }

    #[test]
    fn multiplier_map_kernel_examples() {
        let g3 = gh(3);
        let p = Presentation::new(&g3).unwrap();
        assert_eq!(p.multiplier_map_kernel_dim(&Subspace::zero(6)).unwrap(), 0);
        let y12 = Subspace::coordinate(6, [3]);
        assert!(p.multiplier_map_kernel_dim(&y12).unwrap() >= 1);

        let g4 = gh(4);
        let p = Presentation::new(&g4).unwrap();
        let y12 = Subspace::coordinate(10, [4]);
        assert_eq!(p.quotient_multiplier_dim(&y12).unwrap(), l3(4) - 4 + 1);
        assert_eq!(l3(4), 20);
    }

    #[test]
    fn multiplier_map_rejects_non_central() {
        let p = Presentation::new(&gh(3)).unwrap();
        let x1 = Subspace::coordinate(6, [0]);
        assert_eq!(p.multiplier_map_kernel_dim(&x1), Err(Error::NotCentral));
    }

    #[test]
    fn quotient_multiplier_matches_fresh_presentation() {
        let g3 = gh(3);
        let p = Presentation::new(&g3).unwrap();
        for (k, coords) in [(6, vec![3]), (6, vec![3, 4]), (6, vec![5])] {
            let sub = Subspace::coordinate(k, coords);
            let (q, _) = g3.quotient_algebra(&sub).unwrap();
            assert_eq!(
                p.quotient_multiplier_dim(&sub).unwrap(),
                schur_multiplier(&q).unwrap().dim
            );
        }
    }

    #[test]
    fn cover_examples() {
        let c = cover(&arc(abelian(2))).unwrap();
        let f22 = free_nilpotent(2, 2).unwrap();
        assert!(c.algebra.same_table(f22.algebra()));
        assert!(generalized_heisenberg(2).unwrap().to_free(&f22).unwrap().is_isomorphism());
        assert_eq!(c.multiplier.dim(), 1);

        let c = cover(&gh(2)).unwrap();
        assert_eq!(c.dim(), 5);
        assert_eq!(c.algebra.nilpotency_class(), Ok(3));

        let c = cover(&gh(3)).unwrap();
        assert_eq!(c.dim(), 14);
        assert!(c.algebra.same_table(free_nilpotent(3, 3).unwrap().algebra()));
        let series = c.algebra.lower_central_series();
        assert_eq!(series.len() - 1, 3);
        assert_eq!(series[2].dim(), 8);
    }

    #[test]
    fn cover_of_heisenberg_has_multiplier_dimension() {
        let h2 = arc(heisenberg(2).unwrap());
        let c = cover(&h2).unwrap();
        assert_eq!(c.dim(), 5 + 5);
        assert_eq!(c.to_base.kernel(), c.multiplier);
    }

    #[test]
    fn tensor_square_examples() {
        for n in 1..=4 {
            assert_eq!(tensor_square_dim(&arc(abelian(n))).unwrap(), n * n);
        }
        assert_eq!(tensor_square_dim(&arc(heisenberg(1).unwrap())).unwrap(), 6);
        assert_eq!(tensor_square_dim(&arc(class2_maximal(3, 1).unwrap())).unwrap(), 24);
        let f23 = free_nilpotent(2, 3).unwrap().algebra().clone();
        assert_eq!(tensor_square_dim(&f23), Err(Error::ClassTooHigh(3)));
    }

    #[test]
    fn direct_sum_examples() {
        let cases = [
            (abelian(2), abelian(3), 10),
            (heisenberg(1).unwrap(), abelian(1), 4),
            (gh(3).as_ref().clone(), abelian(2), 15),
        ];
        for (a, b, expected) in cases {
            assert_eq!(multiplier_of_direct_sum_check(&a, &b).unwrap(), (expected, expected));
        }
    }

    #[test]
    fn non_nilpotent_inputs_are_rejected() {
        let mut t = std::collections::BTreeMap::new();
        t.insert((0, 1), crate::lie::int_vector(&[0, 1]));
        let l = arc(LieAlgebra::new(2, t).unwrap());
        assert!(matches!(Presentation::new(&l), Err(Error::NotNilpotent)));
        assert!(matches!(schur_multiplier(&l), Err(Error::NotNilpotent)));
    }

    #[test]
    fn invariants_report() {
        let inv = invariants("GH(2)+A(1)", &arc(class2_maximal(2, 1).unwrap())).unwrap();
        assert_eq!(inv.multiplier_dim, 4);
        assert!(inv.capable);
        assert_eq!(inv.exterior_square_dim, 5);
        assert_eq!(inv.cover_dim, 8);
        assert_eq!(inv.tensor_square_dim, Some(11));

        let f = free_nilpotent(2, 3).unwrap().algebra().clone();
        let inv = invariants("F(2,3)", &f).unwrap();
        assert_eq!(inv.tensor_square_dim, None);
        assert!(inv.note.is_some());
    }
}
