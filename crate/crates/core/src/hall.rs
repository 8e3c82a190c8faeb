//! Basic commutators (Hall basis), the Witt dimension formula and free
//! nilpotent Lie algebras with explicit structure constants.
//!
//! Basic commutators on `x1 < x2 < … < xd` are built by length. A bracket
//! `[u, v]` of earlier basic commutators is basic when `u > v` and, if
//! `u = [a, b]`, also `v ≥ b`. Shorter commutators come first; those of equal
//! length are ordered lexicographically by the ranks of `(u, v)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use num::{One, Zero};

use crate::lie::LieAlgebra;
use crate::linalg::{zero_vec, Rational};
use crate::{Error, Result};

/// Möbius function.
pub fn mobius(m: u64) -> Result<i64> {
    if m == 0 {
        return Err(Error::InvalidArgument("mobius(0) is undefined".into()));
    }
    let mut m = m;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return Ok(0);
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    Ok(sign)
}

/// Witt's formula `l_d(n) = (1/n) Σ_{m | n} μ(m) d^{n/m}`: the number of basic
/// commutators of length `n` on `d` generators.
pub fn witt(d: u64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("witt(d, 0) is undefined".into()));
    }
    let overflow = || Error::Overflow(format!("l_{d}({n})"));
    let mut sum: i128 = 0;
    for m in (1..=n).filter(|m| n.is_multiple_of(*m)) {
        let mu = mobius(m)?;
        if mu == 0 {
            continue;
        }
        let exp = u32::try_from(n / m).map_err(|_| overflow())?;
        let power = (d as i128).checked_pow(exp).ok_or_else(overflow)?;
        sum = sum.checked_add(mu as i128 * power).ok_or_else(overflow)?;
    }
    let n = n as i128;
    assert!(sum % n == 0, "Witt sum {sum} is not divisible by {n}");
    u64::try_from(sum / n).map_err(|_| overflow())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    /// 1-based generator index.
    Leaf(usize),
    /// Ranks of the two factors.
    Node(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HallElement {
    pub shape: Shape,
    pub length: usize,
}

/// A basic commutator as an explicit bracketing, with its length and its
/// rank in the Hall order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HallTree {
    pub rank: usize,
    pub length: usize,
    pub kind: TreeKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TreeKind {
    Leaf(usize),
    Node(Box<HallTree>, Box<HallTree>),
}

impl fmt::Display for HallTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            TreeKind::Leaf(g) => write!(f, "x{g}"),
            TreeKind::Node(u, v) => write!(f, "[{u},{v}]"),
        }
    }
}

/// All basic commutators on `d` generators up to a maximal length.
#[derive(Clone, Debug)]
pub struct HallBasis {
    d: usize,
    max_len: usize,
    elements: Vec<HallElement>,
    by_factors: HashMap<(usize, usize), usize>,
    /// `starts[n]..starts[n + 1]` are the ranks of length `n` (index 0 unused).
    starts: Vec<usize>,
}

impl HallBasis {
    pub fn new(d: usize, max_len: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidArgument(
                "a Hall basis needs at least one generator".into(),
            ));
        }
        let mut elements: Vec<HallElement> = (1..=d)
            .map(|g| HallElement {
                shape: Shape::Leaf(g),
                length: 1,
            })
            .collect();
        let mut by_factors = HashMap::new();
        let mut starts = vec![0, 0];
        if max_len == 0 {
            elements.clear();
            starts.push(0);
            return Ok(HallBasis {
                d,
                max_len,
                elements,
                by_factors,
                starts,
            });
        }
        starts.push(d);
        for n in 2..=max_len {
            let mut fresh = Vec::new();
            for len_v in 1..n {
                let len_u = n - len_v;
                for u in starts[len_u]..starts[len_u + 1] {
                    for v in starts[len_v]..starts[len_v + 1] {
                        if u <= v {
                            continue;
                        }
                        if let Shape::Node(_, b) = elements[u].shape {
                            if v < b {
                                continue;
                            }
                        }
                        fresh.push((u, v));
                    }
                }
            }
            fresh.sort_unstable();
            for (u, v) in fresh {
                by_factors.insert((u, v), elements.len());
                elements.push(HallElement {
                    shape: Shape::Node(u, v),
                    length: n,
                });
            }
            starts.push(elements.len());
        }
        Ok(HallBasis {
            d,
            max_len,
            elements,
            by_factors,
            starts,
        })
    }

    pub fn generators(&self) -> usize {
        self.d
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, rank: usize) -> HallElement {
        self.elements[rank]
    }

    pub fn elements(&self) -> &[HallElement] {
        &self.elements
    }

    /// Rank of the basic commutator `[u, v]`, if it is one.
    pub fn rank_of(&self, u: usize, v: usize) -> Option<usize> {
        self.by_factors.get(&(u, v)).copied()
    }

    /// Ranks of the basic commutators of length `n`.
    pub fn degree(&self, n: usize) -> Range<usize> {
        if n == 0 || n > self.max_len {
            return 0..0;
        }
        self.starts[n]..self.starts[n + 1]
    }

    pub fn tree(&self, rank: usize) -> HallTree {
        let e = self.elements[rank];
        let kind = match e.shape {
            Shape::Leaf(g) => TreeKind::Leaf(g),
            Shape::Node(u, v) => TreeKind::Node(Box::new(self.tree(u)), Box::new(self.tree(v))),
        };
        HallTree {
            rank,
            length: e.length,
            kind,
        }
    }

    pub fn trees(&self) -> Vec<HallTree> {
        (0..self.len()).map(|r| self.tree(r)).collect()
    }

    pub fn label(&self, rank: usize) -> String {
        self.tree(rank).to_string()
    }
}

pub fn hall_basis(d: usize, max_len: usize) -> Result<Vec<HallTree>> {
    Ok(HallBasis::new(d, max_len)?.trees())
}

/// Sparse linear combination of Hall basis elements, keyed by rank.
pub type Combination = BTreeMap<usize, Rational>;

fn add_scaled(acc: &mut Combination, factor: &Rational, terms: &Combination) {
    for (k, x) in terms {
        let entry = acc.entry(*k).or_insert_with(Rational::zero);
        *entry += factor * x;
        if entry.is_zero() {
            acc.remove(k);
        }
    }
}

/// Expresses brackets of basic commutators in the Hall basis, discarding
/// everything longer than `class`.
pub struct HallRewriter<'a> {
    basis: &'a HallBasis,
    class: usize,
    memo: HashMap<(usize, usize), Combination>,
}

impl<'a> HallRewriter<'a> {
    pub fn new(basis: &'a HallBasis, class: usize) -> Self {
        HallRewriter {
            basis,
            class,
            memo: HashMap::new(),
        }
    }

    /// `[u, v]` for basis ranks `u`, `v`.
    pub fn rewrite(&mut self, u: usize, v: usize) -> Combination {
        if u == v {
            return Combination::new();
        }
        let (lu, lv) = (self.basis.elements[u].length, self.basis.elements[v].length);
        if lu + lv > self.class {
            return Combination::new();
        }
        if let Some(hit) = self.memo.get(&(u, v)) {
            return hit.clone();
        }
        let result = if u < v {
            let mut r = self.rewrite(v, u);
            for x in r.values_mut() {
                *x = -x.clone();
            }
            r
        } else {
            self.rewrite_descending(u, v)
        };
        self.memo.insert((u, v), result.clone());
        result
    }

    fn rewrite_descending(&mut self, u: usize, v: usize) -> Combination {
        let hall = |basis: &HallBasis| {
            let rank = basis
                .rank_of(u, v)
                .expect("basic commutator within the length bound is enumerated");
            Combination::from([(rank, Rational::one())])
        };
        match self.basis.elements[u].shape {
            Shape::Leaf(_) => hall(self.basis),
            Shape::Node(_, b) if v >= b => hall(self.basis),
            Shape::Node(a, b) => {
                // [[a, b], v] = [[a, v], b] + [a, [b, v]]
                let mut out = Combination::new();
                for (w, cw) in self.rewrite(a, v) {
                    let t = self.rewrite(w, b);
                    add_scaled(&mut out, &cw, &t);
                }
                for (w, cw) in self.rewrite(b, v) {
                    let t = self.rewrite(a, w);
                    add_scaled(&mut out, &cw, &t);
                }
                out
            }
        }
    }

    /// `[u, v]` for arbitrary combinations.
    pub fn bracket(&mut self, u: &Combination, v: &Combination) -> Combination {
        let mut out = Combination::new();
        for (i, x) in u {
            for (j, y) in v {
                let t = self.rewrite(*i, *j);
                add_scaled(&mut out, &(x * y), &t);
            }
        }
        out
    }
}

pub fn hall_rewrite(basis: &HallBasis, class: usize, u: usize, v: usize) -> Combination {
    HallRewriter::new(basis, class).rewrite(u, v)
}

/// The free nilpotent Lie algebra `F_{d,c}` on the Hall basis of length ≤ c.
#[derive(Clone, Debug)]
pub struct FreeNilpotent {
    d: usize,
    c: usize,
    basis: HallBasis,
    algebra: Arc<LieAlgebra>,
}

impl FreeNilpotent {
    pub fn new(d: usize, c: usize) -> Result<Self> {
        if d == 0 || c == 0 {
            return Err(Error::InvalidArgument(format!(
                "free nilpotent algebra needs d >= 1 and c >= 1, got d = {d}, c = {c}"
            )));
        }
        let basis = HallBasis::new(d, c)?;
        let n = basis.len();
        let mut rewriter = HallRewriter::new(&basis, c);
        let mut table = BTreeMap::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if basis.elements[i].length + basis.elements[j].length > c {
                    continue;
                }
                let comb = rewriter.rewrite(i, j);
                if comb.is_empty() {
                    continue;
                }
                let mut v = zero_vec(n);
                for (k, x) in comb {
                    v[k] = x;
                }
                table.insert((i, j), v);
            }
        }
        let labels = (0..n).map(|r| basis.label(r)).collect();
        let algebra = Arc::new(LieAlgebra::with_labels(labels, table)?);
        Ok(FreeNilpotent {
            d,
            c,
            basis,
            algebra,
        })
    }

    /// The zero algebra, presented on no generators.
    pub(crate) fn trivial(c: usize) -> Self {
        let basis = HallBasis {
            d: 0,
            max_len: c,
            elements: Vec::new(),
            by_factors: HashMap::new(),
            starts: vec![0; c + 2],
        };
        FreeNilpotent {
            d: 0,
            c,
            basis,
            algebra: Arc::new(LieAlgebra::new(0, BTreeMap::new()).expect("zero algebra")),
        }
    }

    pub fn generators(&self) -> usize {
        self.d
    }

    pub fn class(&self) -> usize {
        self.c
    }

    pub fn basis(&self) -> &HallBasis {
        &self.basis
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Positions of `x1, …, xd` in the basis.
    pub fn generator_indices(&self) -> Range<usize> {
        0..self.d
    }

    /// Ranks of the basis elements of length `n`.
    pub fn degree(&self, n: usize) -> Range<usize> {
        self.basis.degree(n)
    }

    /// Span of the basis elements of length at least `n` (the term `F^n`).
    pub fn power(&self, n: usize) -> crate::Subspace {
        let start = self.basis.degree(n.max(1)).start;
        let start = if n > self.c { self.dim() } else { start };
        crate::Subspace::coordinate(self.dim(), start..self.dim())
    }
}

pub fn free_nilpotent(d: usize, c: usize) -> Result<FreeNilpotent> {
    FreeNilpotent::new(d, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius(1), Ok(1));
        assert_eq!(mobius(4), Ok(0));
        assert_eq!(mobius(6), Ok(1));
        assert_eq!(mobius(2), Ok(-1));
        assert_eq!(mobius(30), Ok(-1));
        assert_eq!(mobius(12), Ok(0));
        assert!(mobius(0).is_err());
    }

    /// Möbius by brute force: the unique function with Σ_{k | n} μ(k) = [n = 1].
    fn mobius_by_inversion(limit: u64) -> Vec<i64> {
        let mut mu = vec![0i64; limit as usize + 1];
        mu[1] = 1;
        for n in 2..=limit {
            let s: i64 = (1..n).filter(|k| n % k == 0).map(|k| mu[k as usize]).sum();
            mu[n as usize] = -s;
        }
        mu
    }

    #[test]
    fn mobius_matches_inversion() {
        let mu = mobius_by_inversion(200);
        for m in 1..=200 {
            assert_eq!(mobius(m).unwrap(), mu[m as usize], "m = {m}");
        }
    }

    #[test]
    fn witt_examples() {
        assert_eq!(witt(2, 3), Ok(2));
        assert_eq!(witt(3, 2), Ok(3));
        for d in 0..7 {
            assert_eq!(witt(d, 1), Ok(d));
        }
        assert_eq!(witt(1, 2), Ok(0));
        assert!(witt(2, 0).is_err());
        assert!(matches!(witt(1000, 60), Err(Error::Overflow(_))));
    }

    /// Necklace identity: Σ_{k | n} k·l_d(k) = d^n.
    #[test]
    fn witt_satisfies_necklace_identity() {
        for d in 1..6u64 {
            for n in 1..9u64 {
                let total: u64 = (1..=n).filter(|k| n % k == 0).map(|k| k * witt(d, k).unwrap()).sum();
                assert_eq!(total, d.pow(n as u32), "d = {d}, n = {n}");
            }
        }
    }

    #[test]
    fn hall_basis_examples() {
        let names = |d, m| -> Vec<String> {
            hall_basis(d, m).unwrap().iter().map(ToString::to_string).collect()
        };
        assert_eq!(names(2, 2), ["x1", "x2", "[x2,x1]"]);
        assert_eq!(names(3, 1), ["x1", "x2", "x3"]);
        let five = names(2, 3);
        assert_eq!(five.len(), 5);
        assert_eq!(&five[3..], ["[[x2,x1],x1]", "[[x2,x1],x2]"]);
        assert!(hall_basis(0, 3).is_err());
    }

    #[test]
    fn hall_trees_satisfy_basic_condition() {
        let basis = HallBasis::new(3, 5).unwrap();
        for (r, t) in basis.trees().iter().enumerate() {
            assert_eq!(t.rank, r);
            if let TreeKind::Node(u, v) = &t.kind {
                assert!(u.rank > v.rank);
                assert_eq!(t.length, u.length + v.length);
                if let TreeKind::Node(_, b) = &u.kind {
                    assert!(v.rank >= b.rank);
                }
            }
        }
        for r in 1..basis.len() {
            assert!(basis.element(r - 1).length <= basis.element(r).length);
        }
    }

    #[test]
    fn rewrite_examples() {
        let basis = HallBasis::new(2, 3).unwrap();
        assert!(hall_rewrite(&basis, 3, 1, 1).is_empty());
        let y = basis.rank_of(1, 0).unwrap();
        assert_eq!(hall_rewrite(&basis, 3, 1, 0), Combination::from([(y, int(1))]));
        // [x1, [x2,x1]] = -[[x2,x1],x1]
        let t = basis.rank_of(y, 0).unwrap();
        assert_eq!(hall_rewrite(&basis, 3, 0, y), Combination::from([(t, int(-1))]));
        // beyond the class everything vanishes
        assert!(hall_rewrite(&basis, 2, 0, y).is_empty());
    }

    #[test]
    fn rewrite_is_antisymmetric() {
        let basis = HallBasis::new(3, 4).unwrap();
        let mut rw = HallRewriter::new(&basis, 4);
        for u in 0..basis.len() {
            for v in 0..basis.len() {
                let mut sum = rw.rewrite(u, v);
                add_scaled(&mut sum, &int(1), &rw.rewrite(v, u));
                assert!(sum.is_empty(), "u = {u}, v = {v}");
            }
        }
    }

    #[test]
    fn small_free_nilpotent_algebras() {
        let f22 = free_nilpotent(2, 2).unwrap();
        assert_eq!(f22.dim(), 3);
        assert_eq!(f22.algebra().nilpotency_class(), Ok(2));
        assert_eq!(f22.algebra().center().dim(), 1);

        let f32 = free_nilpotent(3, 2).unwrap();
        assert_eq!(f32.dim(), 6);

        let f23 = free_nilpotent(2, 3).unwrap();
        let dims: Vec<usize> = f23
            .algebra()
            .lower_central_series()
            .iter()
            .map(|s| s.dim())
            .collect();
        assert_eq!(dims, [5, 3, 2, 0]);
        assert_eq!(f23.power(2).dim(), 3);
        assert_eq!(f23.power(4).dim(), 0);
    }

    #[test]
    fn free_nilpotent_on_one_generator_is_abelian() {
        let f = free_nilpotent(1, 4).unwrap();
        assert_eq!(f.dim(), 1);
        assert!(f.algebra().is_abelian());
        assert!(free_nilpotent(0, 2).is_err());
        assert!(free_nilpotent(2, 0).is_err());
    }

    #[test]
    fn five_generator_class_three_is_quick() {
        let start = std::time::Instant::now();
        let f = free_nilpotent(5, 3).unwrap();
        assert_eq!(f.dim(), 55);
        assert!(start.elapsed().as_secs_f64() < 5.0);
    }
}
