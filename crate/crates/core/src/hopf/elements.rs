//! Group-like and primitive elements, subcoalgebras and irreducible components.

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hopf::{CoalgebraData, HopfAlgebraData};
use crate::linalg::sparse::{self, from_dense, to_dense};
use crate::linalg::{map_kernel, rational_generalized_eigenspaces, LinMap, Mat, Subspace};

/// `L_i = (e_i* ⊗ id)Δ` as a dense matrix.
fn hit_operator(c: &CoalgebraData, i: usize) -> Mat {
    let n = c.dim();
    let f = c.field();
    let cols: Vec<Vec<Scalar>> = (0..n)
        .map(|b| {
            let mut v = vec![f.zero(); n];
            for (j, k, x) in c.comul_terms(b) {
                if j == i {
                    v[k].add_assign_ref(&x);
                }
            }
            v
        })
        .collect();
    Mat::from_columns(f, n, &cols)
}

/// Joint (generalized) eigenspaces of all `L_i` with eigenvalues in the field.
fn joint_eigenspaces(c: &CoalgebraData, generalized: bool) -> Result<Vec<(Vec<Scalar>, Subspace)>> {
    let n = c.dim();
    let mut current = vec![(Vec::new(), Subspace::full(c.field(), n))];
    for i in 0..n {
        let op = hit_operator(c, i);
        let mut next = Vec::new();
        for (pattern, space) in current {
            for e in rational_generalized_eigenspaces(&op, &space)? {
                let sub = if generalized { e.generalized } else { e.eigenspace };
                if sub.is_zero() {
                    continue;
                }
                let mut p = pattern.clone();
                p.push(e.value);
                next.push((p, sub));
            }
        }
        current = next;
    }
    Ok(current)
}

fn leading_index(v: &[Scalar]) -> usize {
    v.iter().position(|x| !x.is_zero()).unwrap_or(v.len())
}

/// Every group-like element, ordered by leading basis index.
///
/// A group-like `x` is a common eigenvector of the `L_i` whose eigenvalue
/// pattern is its own coordinate vector, so each joint eigenspace has at most
/// one candidate.
pub fn group_likes(h: &HopfAlgebraData) -> Vec<Vec<Scalar>> {
    coalgebra_group_likes(&h.coalg)
}

pub(crate) fn coalgebra_group_likes(c: &CoalgebraData) -> Vec<Vec<Scalar>> {
    let n = c.dim();
    let spaces = joint_eigenspaces(c, false).expect("joint eigenspaces are invariant under commuting hits");
    let mut out: Vec<Vec<Scalar>> = spaces
        .into_iter()
        .filter_map(|(pattern, space)| {
            let x = from_dense(&pattern);
            let ok = space.contains(&pattern).unwrap_or(false)
                && c.eps(&x).is_one()
                && c.delta(&x) == sparse::tensor(&x, &x, n);
            ok.then_some(pattern)
        })
        .collect();
    out.sort_by_key(|v| leading_index(v));
    out
}

/// Kernel of `x ↦ Δx − x ⊗ 1 − 1 ⊗ x`.
pub fn primitives(h: &HopfAlgebraData) -> Subspace {
    let f = h.field();
    let n = h.dim();
    let id = LinMap::identity(f, n);
    let u = h.unit_map();
    let map = h.coalg.comul().sub(&id.kron(&u)).sub(&u.kron(&id));
    map_kernel(&map.to_mat())
}

/// The smallest subcoalgebra containing `seed`.
pub fn generated_subcoalgebra(c: &CoalgebraData, seed: &Subspace) -> Subspace {
    let f = c.field();
    let n = c.dim();
    let mut w = seed.clone();
    loop {
        let mut new = Vec::new();
        for v in w.vectors() {
            let d = to_dense(&c.delta(&from_dense(&v)), f, n * n);
            // Left hits are the rows of the coefficient matrix, right hits its columns.
            for r in 0..n {
                new.push(d[r * n..(r + 1) * n].to_vec());
                new.push((0..n).map(|k| d[k * n + r].clone()).collect());
            }
        }
        let next = w.extend(&new);
        if next.dim() == w.dim() {
            return w;
        }
        w = next;
    }
}

/// An irreducible component `H^g` with its group-like `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub grouplike: Vec<Scalar>,
    pub space: Subspace,
}

/// Decomposes a pointed cocommutative coalgebra as `⊕ H^g`.
pub fn irreducible_components(h: &HopfAlgebraData) -> Result<Vec<Component>> {
    coalgebra_components(&h.coalg)
}

pub(crate) fn coalgebra_components(c: &CoalgebraData) -> Result<Vec<Component>> {
    let n = c.dim();
    let spaces = joint_eigenspaces(c, true)?;
    let mut out = Vec::new();
    for g in coalgebra_group_likes(c) {
        if let Some((_, space)) = spaces.iter().find(|(p, _)| *p == g) {
            out.push(Component { grouplike: g, space: space.clone() });
        }
    }
    let covered: usize = out.iter().map(|c| c.space.dim()).sum();
    if covered < n {
        return Err(Error::NotPointed { covered, dim: n });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::hopf::tests::dual_numbers_f2;

    fn cyclic(n: usize) -> HopfAlgebraData {
        let names = (0..n).map(|i| format!("g{i}")).collect();
        let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        HopfAlgebraData::group_algebra(Field::Rationals, names, &table, 0)
    }

    fn basis_vec(f: Field, n: usize, i: usize) -> Vec<Scalar> {
        let mut v = vec![f.zero(); n];
        v[i] = f.one();
        v
    }

    #[test]
    fn group_likes_of_c4_are_the_group() {
        let h = cyclic(4);
        let g = group_likes(&h);
        assert_eq!(g, (0..4).map(|i| basis_vec(Field::Rationals, 4, i)).collect::<Vec<_>>());
        assert!(primitives(&h).is_zero());
        let comps = irreducible_components(&h).unwrap();
        assert_eq!(comps.len(), 4);
        assert!(comps.iter().all(|c| c.space.dim() == 1));
    }

    #[test]
    fn dual_numbers() {
        let h = dual_numbers_f2();
        let f = h.field();
        assert_eq!(group_likes(&h), vec![basis_vec(f, 2, 0)]);
        assert_eq!(primitives(&h), Subspace::span(f, 2, &[basis_vec(f, 2, 1)]));
        let x = Subspace::span(f, 2, &[basis_vec(f, 2, 1)]);
        assert!(generated_subcoalgebra(&h.coalg, &x).is_full());
        let comps = irreducible_components(&h).unwrap();
        assert_eq!(comps.len(), 1);
        assert!(comps[0].space.is_full());
    }

    #[test]
    fn trivial_cases() {
        let k = cyclic(1);
        assert_eq!(group_likes(&k).len(), 1);
        assert!(primitives(&k).is_zero());
        let f = Field::Rationals;
        assert!(generated_subcoalgebra(&k.coalg, &Subspace::zero(f, 1)).is_zero());
        let c4 = cyclic(4);
        let g = Subspace::span(f, 4, &[basis_vec(f, 4, 2)]);
        assert_eq!(generated_subcoalgebra(&c4.coalg, &g), g);
    }

    #[test]
    fn tensor_of_group_algebras_has_four_components() {
        let c2 = cyclic(2);
        let t = c2.coalg.tensor(&c2.coalg);
        assert_eq!(coalgebra_components(&t).unwrap().len(), 4);
    }

    #[test]
    fn non_pointed_rational_coalgebra() {
        // Dual of the field Q(√2), which has no Q-points.
        // Coalgebra with basis {a, b}: Δa = a⊗a + 2 b⊗b, Δb = a⊗b + b⊗a, ε = (1, 0).
        let f = Field::Rationals;
        let c = CoalgebraData::new(
            f,
            vec!["a".into(), "b".into()],
            vec![vec![(0, 0, f.one()), (1, 1, f.int(2))], vec![(0, 1, f.one()), (1, 0, f.one())]],
            vec![f.one(), f.zero()],
            true,
        )
        .unwrap();
        assert!(c.verify().all_passed());
        assert!(coalgebra_group_likes(&c).is_empty());
        assert!(matches!(coalgebra_components(&c), Err(Error::NotPointed { covered: 0, dim: 2 })));
    }
}
