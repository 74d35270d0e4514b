//! Coalgebras and Hopf algebras given by structure constants.

mod elements;

pub use elements::{generated_subcoalgebra, group_likes, irreducible_components, primitives, Component};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::sparse::{self, split_index, Acc};
use crate::linalg::{LinMap, Mat, SVec};
use crate::report::VerificationReport;

/// A coalgebra `(C, Δ, ε)` on the basis `e_0, …, e_{n-1}`.
///
/// `Δ` is stored as an `n² × n` map (index `j * n + k` for `e_j ⊗ e_k`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraData {
    field: Field,
    basis_names: Vec<String>,
    comul: LinMap,
    counit: Vec<Scalar>,
    cocommutative: bool,
}

/// Records `lhs == rhs` column by column; the witness is the basis tuple
/// encoded by the first differing column.
pub(crate) fn compare(report: &mut VerificationReport, name: &str, lhs: &LinMap, rhs: &LinMap, n: usize, arity: usize) {
    let witness = lhs.first_difference(rhs).map(|c| split_index(c, n, arity));
    report.record(name, witness);
}

impl CoalgebraData {
    /// Builds a coalgebra from `Δ(e_i) = Σ c e_j ⊗ e_k` term lists.
    pub fn new(
        field: Field,
        basis_names: Vec<String>,
        comul: Vec<Vec<(usize, usize, Scalar)>>,
        counit: Vec<Scalar>,
        cocommutative: bool,
    ) -> Result<Self> {
        let n = basis_names.len();
        if comul.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: comul.len() });
        }
        let mut columns = Vec::with_capacity(n);
        for terms in comul {
            let mut acc = Acc::new();
            for (j, k, c) in terms {
                if j >= n || k >= n {
                    return Err(Error::DimensionMismatch { expected: n, found: j.max(k) + 1 });
                }
                acc.add(j * n + k, &c);
            }
            columns.push(acc.finish());
        }
        Self::from_map(field, basis_names, LinMap::from_columns(field, n * n, columns), counit, cocommutative)
    }

    pub fn from_map(field: Field, basis_names: Vec<String>, comul: LinMap, counit: Vec<Scalar>, cocommutative: bool) -> Result<Self> {
        let n = basis_names.len();
        if comul.cols() != n || comul.rows() != n * n {
            return Err(Error::DimensionMismatch { expected: n, found: comul.cols() });
        }
        if counit.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: counit.len() });
        }
        if let Some(bad) = counit.iter().find(|c| !field.contains(c)) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        Ok(CoalgebraData { field, basis_names, comul, counit, cocommutative })
    }

    /// Every basis element group-like.
    pub fn grouplike(field: Field, basis_names: Vec<String>) -> Self {
        let n = basis_names.len();
        let comul = LinMap::from_fn(field, n * n, n, |i| sparse::unit_vec(field, i * n + i));
        CoalgebraData { field, basis_names, comul, counit: vec![field.one(); n], cocommutative: true }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn comul(&self) -> &LinMap {
        &self.comul
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn counit_map(&self) -> LinMap {
        LinMap::functional(self.field, &self.counit)
    }

    pub fn cocommutative(&self) -> bool {
        self.cocommutative
    }

    /// `Δ(e_i)` as `(j, k, c)` terms in index order.
    pub fn comul_terms(&self, i: usize) -> Vec<(usize, usize, Scalar)> {
        let n = self.dim();
        self.comul.col(i).iter().map(|(idx, c)| (idx / n, idx % n, c.clone())).collect()
    }

    pub fn delta(&self, v: &SVec) -> SVec {
        self.comul.apply(v)
    }

    /// `(Δ ⊗ id)Δ`, as an `n³ × n` map.
    pub fn comul2(&self) -> LinMap {
        self.comul.kron(&LinMap::identity(self.field, self.dim())).compose(&self.comul)
    }

    pub fn eps(&self, v: &SVec) -> Scalar {
        let mut acc = self.field.zero();
        for (i, x) in v {
            acc.add_product(&self.counit[*i], x);
        }
        acc
    }

    /// Tensor coalgebra `C ⊗ D` with `Δ = (id ⊗ τ ⊗ id)(Δ ⊗ Δ)`.
    pub fn tensor(&self, other: &CoalgebraData) -> CoalgebraData {
        let (a, b) = (self.dim(), other.dim());
        let mid = LinMap::permutation(self.field, &[a, a, b, b], &[0, 2, 1, 3]);
        let comul = mid.compose(&self.comul.kron(&other.comul));
        let mut names = Vec::with_capacity(a * b);
        for x in &self.basis_names {
            for y in &other.basis_names {
                names.push(format!("{x}⊗{y}"));
            }
        }
        let counit = self.counit.iter().flat_map(|x| other.counit.iter().map(move |y| x * y)).collect();
        CoalgebraData { field: self.field, basis_names: names, comul, counit, cocommutative: self.cocommutative && other.cocommutative }
    }

    /// Whether `τΔ = Δ` holds exactly (independent of the flag).
    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim();
        LinMap::flip(self.field, n, n).compose(&self.comul) == self.comul
    }

    pub fn verify(&self) -> VerificationReport {
        let mut r = VerificationReport::new();
        let n = self.dim();
        let id = LinMap::identity(self.field, n);
        compare(&mut r, "coassociativity", &self.comul.kron(&id).compose(&self.comul), &id.kron(&self.comul).compose(&self.comul), n, 1);
        let e = self.counit_map();
        compare(&mut r, "counit_left", &e.kron(&id).compose(&self.comul), &id, n, 1);
        compare(&mut r, "counit_right", &id.kron(&e).compose(&self.comul), &id, n, 1);
        if self.cocommutative {
            compare(&mut r, "cocommutativity", &LinMap::flip(self.field, n, n).compose(&self.comul), &self.comul, n, 1);
        }
        r
    }

    /// Checks that `f: self -> cod` preserves `Δ` and `ε`.
    pub fn map_report(&self, cod: &CoalgebraData, f: &LinMap) -> VerificationReport {
        let mut r = VerificationReport::new();
        compare(&mut r, "comultiplication", &cod.comul.compose(f), &f.kron_compose(f, &self.comul), self.dim(), 1);
        compare(&mut r, "counit", &cod.counit_map().compose(f), &self.counit_map(), self.dim(), 1);
        r
    }
}

/// A Hopf algebra `(H, m, u, Δ, ε, S)`; `m` is stored as an `n × n²` map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebraData {
    pub coalg: CoalgebraData,
    pub mul: LinMap,
    pub unit: Vec<Scalar>,
    pub antipode: LinMap,
}

impl HopfAlgebraData {
    /// Assembles the data, computing the antipode when it is not supplied.
    /// A supplied antipode is cross-checked against the computed one.
    pub fn new(coalg: CoalgebraData, mul: LinMap, unit: Vec<Scalar>, antipode: Option<LinMap>) -> Result<Self> {
        let n = coalg.dim();
        if mul.rows() != n || mul.cols() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, found: mul.cols() });
        }
        if unit.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: unit.len() });
        }
        let computed = compute_antipode(&coalg, &mul, &unit)?;
        if let Some(s) = antipode {
            if s != computed {
                let mut r = VerificationReport::new();
                r.record("supplied_antipode", s.first_difference(&computed).map(|c| vec![c]));
                return Err(Error::failed(r));
            }
        }
        Ok(HopfAlgebraData { coalg, mul, unit, antipode: computed })
    }

    /// Assembles the data as given, without any checks.
    pub fn from_parts(coalg: CoalgebraData, mul: LinMap, unit: Vec<Scalar>, antipode: LinMap) -> Self {
        HopfAlgebraData { coalg, mul, unit, antipode }
    }

    /// The group algebra of a finite group given by its Cayley table.
    pub fn group_algebra(field: Field, names: Vec<String>, table: &[Vec<usize>], identity: usize) -> Self {
        let n = names.len();
        let coalg = CoalgebraData::grouplike(field, names);
        let mul = LinMap::from_fn(field, n, n * n, |idx| sparse::unit_vec(field, table[idx / n][idx % n]));
        let inverse = |g: usize| (0..n).find(|&h| table[g][h] == identity).expect("group element has an inverse");
        let antipode = LinMap::from_fn(field, n, n, |g| sparse::unit_vec(field, inverse(g)));
        let mut unit = vec![field.zero(); n];
        unit[identity] = field.one();
        HopfAlgebraData { coalg, mul, unit, antipode }
    }

    pub fn field(&self) -> Field {
        self.coalg.field()
    }

    pub fn dim(&self) -> usize {
        self.coalg.dim()
    }

    pub fn unit_map(&self) -> LinMap {
        LinMap::vector(self.field(), &self.unit)
    }

    pub fn unit_svec(&self) -> SVec {
        sparse::from_dense(&self.unit)
    }

    pub fn mul_vec(&self, a: &SVec, b: &SVec) -> SVec {
        self.mul.apply(&sparse::tensor(a, b, self.dim()))
    }
}

/// Axiom checks of a bialgebra, without the antipode.
fn bialgebra_report(coalg: &CoalgebraData, mul: &LinMap, unit: &[Scalar]) -> VerificationReport {
    let mut r = coalg.verify();
    let field = coalg.field();
    let n = coalg.dim();
    let id = LinMap::identity(field, n);
    let u = LinMap::vector(field, unit);
    let e = coalg.counit_map();
    let delta = coalg.comul();
    compare(&mut r, "associativity", &mul.compose(&mul.kron(&id)), &mul.compose(&id.kron(mul)), n, 3);
    compare(&mut r, "unit_left", &mul.compose(&u.kron(&id)), &id, n, 1);
    compare(&mut r, "unit_right", &mul.compose(&id.kron(&u)), &id, n, 1);
    let mid = LinMap::permutation(field, &[n, n, n, n], &[0, 2, 1, 3]);
    let rhs = mul.kron(mul).compose(&mid).compose(&delta.kron(delta));
    compare(&mut r, "comul_multiplicative", &delta.compose(mul), &rhs, n, 2);
    compare(&mut r, "counit_multiplicative", &e.compose(mul), &e.kron(&e), n, 2);
    compare(&mut r, "comul_unit", &delta.compose(&u), &u.kron(&u), n, 0);
    compare(&mut r, "counit_unit", &e.compose(&u), &LinMap::identity(field, 1), n, 0);
    r
}

fn antipode_report(h: &HopfAlgebraData) -> VerificationReport {
    let mut r = VerificationReport::new();
    let n = h.dim();
    let id = LinMap::identity(h.field(), n);
    let ue = h.unit_map().compose(&h.coalg.counit_map());
    let s = &h.antipode;
    compare(&mut r, "antipode_left", &h.mul.compose(&s.kron(&id)).compose(h.coalg.comul()), &ue, n, 1);
    compare(&mut r, "antipode_right", &h.mul.compose(&id.kron(s)).compose(h.coalg.comul()), &ue, n, 1);
    r
}

/// Every Hopf algebra axiom, with the first failing basis tuple of each.
pub fn verify_hopf_algebra(h: &HopfAlgebraData) -> VerificationReport {
    let mut r = bialgebra_report(&h.coalg, &h.mul, &h.unit);
    r.absorb("", antipode_report(h));
    r
}

/// The convolution inverse of the identity, found by solving
/// `m(S ⊗ id)Δ = uε` for the `n²` entries of `S`.
pub fn compute_antipode(coalg: &CoalgebraData, mul: &LinMap, unit: &[Scalar]) -> Result<LinMap> {
    let field = coalg.field();
    let n = coalg.dim();
    // Unknown x_{r,c} = S[r][c] at column r * n + c; equation row a * n + k.
    let mut sys = Mat::zeros(field, n * n, n * n);
    let mut rhs = vec![field.zero(); n * n];
    for a in 0..n {
        for (i, j, coef) in coalg.comul_terms(a) {
            for r in 0..n {
                for (k, c) in mul.col(r * n + j) {
                    let mut x = sys.get(a * n + k, r * n + i).clone();
                    x.add_product(&coef, c);
                    sys.set(a * n + k, r * n + i, x);
                }
            }
        }
        for k in 0..n {
            rhs[a * n + k] = &coalg.counit()[a] * &unit[k];
        }
    }
    let x = sys.solve(&rhs).ok_or(Error::NoAntipode)?;
    let s = LinMap::from_mat(&Mat::from_fn(field, n, n, |r, c| x[r * n + c].clone()));
    let h = HopfAlgebraData { coalg: coalg.clone(), mul: mul.clone(), unit: unit.to_vec(), antipode: s };
    if antipode_report(&h).get("antipode_right").is_some_and(|c| !c.passed) {
        return Err(Error::AntipodeAsymmetry);
    }
    Ok(h.antipode)
}
