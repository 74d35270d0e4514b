//! JSON file formats. Every scalar is written as an integer pair
//! `[numerator, denominator]`; integers have arbitrary size.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::brace::HopfBrace;
use crate::brace::MatchedPairData;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hopf::{CoalgebraData, HopfAlgebraData};
use crate::linalg::{LinMap, SVec, Subspace};
use crate::skew::SkewBrace;

pub const BRACE_FORMAT: &str = "hopf-brace/1";
pub const SKEW_FORMAT: &str = "skew-brace/1";
pub const MORPHISM_FORMAT: &str = "brace-morphism/1";
pub const SUBSPACE_FORMAT: &str = "subspace/1";
pub const MATCHED_PAIR_FORMAT: &str = "matched-pair/1";

/// An arbitrary-size JSON integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Int(pub BigInt);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serde_json::Number::from_str(&self.0.to_string()).expect("integer literal").serialize(s)
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let n = serde_json::Number::deserialize(d)?;
        BigInt::from_str(&n.to_string()).map(Int).map_err(|_| D::Error::custom(format!("expected an integer, found {n}")))
    }
}

/// `"Q"` or `{"Fp": p}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldSpec {
    Q,
    Fp(u64),
}

impl FieldSpec {
    pub fn to_field(self) -> Result<Field> {
        match self {
            FieldSpec::Q => Ok(Field::Rationals),
            FieldSpec::Fp(p) => Field::prime(p),
        }
    }

    pub fn from_field(f: Field) -> Self {
        match f {
            Field::Rationals => FieldSpec::Q,
            Field::Prime(p) => FieldSpec::Fp(p),
        }
    }
}

/// Parses `Q`, `Fp:<p>` or `F<p>`.
pub fn parse_field(s: &str) -> Result<Field> {
    if s == "Q" {
        return Ok(Field::Rationals);
    }
    let p = s.strip_prefix("Fp:").or_else(|| s.strip_prefix('F')).ok_or_else(|| Error::Parse(format!("unknown field '{s}'")))?;
    let p: u64 = p.parse().map_err(|_| Error::Parse(format!("bad characteristic in '{s}'")))?;
    Field::prime(p)
}

pub type Rat = (Int, Int);

fn rat(s: &Scalar) -> Rat {
    let (n, d) = s.to_ratio();
    (Int(n), Int(d))
}

fn scalar(f: Field, r: &Rat, ctx: &dyn Fn() -> String) -> Result<Scalar> {
    f.ratio(&r.0 .0, &r.1 .0).map_err(|e| Error::Parse(format!("{}: {e}", ctx())))
}

fn dense(f: Field, v: &[Rat], len: usize, ctx: &str) -> Result<Vec<Scalar>> {
    if v.len() != len {
        return Err(Error::Parse(format!("{ctx}: expected {len} entries, found {}", v.len())));
    }
    v.iter().enumerate().map(|(i, r)| scalar(f, r, &|| format!("{ctx}[{i}]"))).collect()
}

/// `[[i, j, [[k, num, den], ...]], ...]`: the image of `e_i ⊗ e_j`, nonzero
/// entries only.
pub type BilinearTerms = Vec<(usize, usize, Vec<(usize, Int, Int)>)>;
/// One list of `[k, num, den]` per basis vector.
pub type ColumnTerms = Vec<Vec<(usize, Int, Int)>>;

fn bilinear_terms(m: &LinMap, n: usize) -> BilinearTerms {
    (0..n * n)
        .filter(|&c| !m.col(c).is_empty())
        .map(|c| (c / n, c % n, m.col(c).iter().map(|(k, s)| { let (a, b) = rat(s); (*k, a, b) }).collect()))
        .collect()
}

pub fn column_terms(m: &LinMap) -> ColumnTerms {
    m.columns().iter().map(|c| c.iter().map(|(k, s)| { let (a, b) = rat(s); (*k, a, b) }).collect()).collect()
}

fn svec(f: Field, terms: &[(usize, Int, Int)], rows: usize, ctx: &str) -> Result<SVec> {
    let mut acc = crate::linalg::sparse::Acc::new();
    for (t, (k, num, den)) in terms.iter().enumerate() {
        if *k >= rows {
            return Err(Error::Parse(format!("{ctx}[{t}]: index {k} out of range (dimension {rows})")));
        }
        let s = f.ratio(&num.0, &den.0).map_err(|e| Error::Parse(format!("{ctx}[{t}]: {e}")))?;
        acc.add(*k, &s);
    }
    Ok(acc.finish())
}

fn parse_bilinear(f: Field, terms: &BilinearTerms, n: usize, ctx: &str) -> Result<LinMap> {
    let mut m = LinMap::zero(f, n, n * n);
    for (t, (i, j, col)) in terms.iter().enumerate() {
        if *i >= n || *j >= n {
            return Err(Error::Parse(format!("{ctx}[{t}]: index pair ({i}, {j}) out of range")));
        }
        m.set_column(i * n + j, svec(f, col, n, &format!("{ctx}[{t}]"))?);
    }
    Ok(m)
}

fn parse_columns(f: Field, terms: &ColumnTerms, rows: usize, cols: usize, ctx: &str) -> Result<LinMap> {
    if terms.len() != cols {
        return Err(Error::Parse(format!("{ctx}: expected {cols} columns, found {}", terms.len())));
    }
    let columns = terms.iter().enumerate().map(|(i, c)| svec(f, c, rows, &format!("{ctx}[{i}]"))).collect::<Result<Vec<_>>>()?;
    Ok(LinMap::from_columns(f, rows, columns))
}

fn comul_terms(c: &CoalgebraData) -> Vec<Vec<(usize, usize, Int, Int)>> {
    (0..c.dim()).map(|i| c.comul_terms(i).into_iter().map(|(j, k, s)| { let (a, b) = rat(&s); (j, k, a, b) }).collect()).collect()
}

fn parse_coalgebra(f: Field, basis: &[String], comul: &[Vec<(usize, usize, Int, Int)>], counit: &[Rat], dim: usize) -> Result<CoalgebraData> {
    if basis.len() != dim {
        return Err(Error::Parse(format!("basis: expected {dim} names, found {}", basis.len())));
    }
    if comul.len() != dim {
        return Err(Error::Parse(format!("comul: expected {dim} entries, found {}", comul.len())));
    }
    let mut terms = Vec::with_capacity(dim);
    for (i, row) in comul.iter().enumerate() {
        let mut out = Vec::with_capacity(row.len());
        for (t, (j, k, num, den)) in row.iter().enumerate() {
            if *j >= dim || *k >= dim {
                return Err(Error::Parse(format!("comul[{i}][{t}]: index out of range")));
            }
            out.push((*j, *k, f.ratio(&num.0, &den.0).map_err(|e| Error::Parse(format!("comul[{i}][{t}]: {e}")))?));
        }
        terms.push(out);
    }
    let counit = dense(f, counit, dim, "counit")?;
    CoalgebraData::new(f, basis.to_vec(), terms, counit, true)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraceFlags {
    #[serde(default)]
    pub all_grouplike: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BraceFile {
    pub format: String,
    pub field: FieldSpec,
    pub dim: usize,
    pub basis: Vec<String>,
    pub comul: Vec<Vec<(usize, usize, Int, Int)>>,
    pub counit: Vec<Rat>,
    pub mul_dot: BilinearTerms,
    pub mul_bullet: BilinearTerms,
    pub unit: Vec<Rat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode_dot: Option<ColumnTerms>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode_bullet: Option<ColumnTerms>,
    #[serde(default)]
    pub flags: BraceFlags,
}

impl BraceFile {
    pub fn from_brace(b: &HopfBrace) -> Self {
        let n = b.dim();
        let all_grouplike = (0..n).all(|i| b.coalg().comul_terms(i) == vec![(i, i, b.field().one())]);
        BraceFile {
            format: BRACE_FORMAT.into(),
            field: FieldSpec::from_field(b.field()),
            dim: n,
            basis: b.basis_names().to_vec(),
            comul: comul_terms(b.coalg()),
            counit: b.coalg().counit().iter().map(rat).collect(),
            mul_dot: bilinear_terms(b.mul_dot(), n),
            mul_bullet: bilinear_terms(b.mul_bullet(), n),
            unit: b.unit().iter().map(rat).collect(),
            antipode_dot: Some(column_terms(b.antipode_dot())),
            antipode_bullet: Some(column_terms(b.antipode_bullet())),
            flags: BraceFlags { all_grouplike },
        }
    }

    /// Builds the brace; the axioms are not checked here.
    pub fn to_brace(&self) -> Result<HopfBrace> {
        check_format(&self.format, BRACE_FORMAT)?;
        let f = self.field.to_field()?;
        let n = self.dim;
        let coalg = parse_coalgebra(f, &self.basis, &self.comul, &self.counit, n)?;
        let dot = parse_bilinear(f, &self.mul_dot, n, "mul_dot")?;
        let bullet = parse_bilinear(f, &self.mul_bullet, n, "mul_bullet")?;
        let unit = dense(f, &self.unit, n, "unit")?;
        let s = self.antipode_dot.as_ref().map(|t| parse_columns(f, t, n, n, "antipode_dot")).transpose()?;
        let t = self.antipode_bullet.as_ref().map(|t| parse_columns(f, t, n, n, "antipode_bullet")).transpose()?;
        HopfBrace::new(coalg, dot, bullet, unit, s, t)
    }
}

fn check_format(found: &str, expected: &str) -> Result<()> {
    if found != expected {
        return Err(Error::Parse(format!("format: expected '{expected}', found '{found}'")));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SkewBraceFile {
    pub format: String,
    pub order: usize,
    pub dot: Vec<Vec<usize>>,
    pub bullet: Vec<Vec<usize>>,
    pub identity: usize,
}

impl SkewBraceFile {
    pub fn from_skew(s: &SkewBrace) -> Self {
        SkewBraceFile { format: SKEW_FORMAT.into(), order: s.order, dot: s.dot.clone(), bullet: s.bullet.clone(), identity: s.identity }
    }

    /// Shape checks only; group axioms are left to verification.
    pub fn to_skew(&self) -> Result<SkewBrace> {
        check_format(&self.format, SKEW_FORMAT)?;
        let n = self.order;
        for (name, t) in [("dot", &self.dot), ("bullet", &self.bullet)] {
            if t.len() != n || t.iter().any(|r| r.len() != n) {
                return Err(Error::Parse(format!("{name}: expected a {n}×{n} table")));
            }
            if let Some((i, j)) = (0..n * n).map(|k| (k / n, k % n)).find(|&(i, j)| t[i][j] >= n) {
                return Err(Error::Parse(format!("{name}[{i}][{j}]: entry out of range")));
            }
        }
        if self.identity >= n {
            return Err(Error::Parse("identity: out of range".into()));
        }
        Ok(SkewBrace { order: n, dot: self.dot.clone(), bullet: self.bullet.clone(), identity: self.identity })
    }
}

/// A morphism between two brace files; paths are relative to this file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismFile {
    pub format: String,
    pub domain: String,
    pub codomain: String,
    pub domain_dim: usize,
    pub codomain_dim: usize,
    pub matrix: ColumnTerms,
}

impl MorphismFile {
    pub fn new(domain: &str, codomain: &str, m: &LinMap) -> Self {
        MorphismFile {
            format: MORPHISM_FORMAT.into(),
            domain: domain.into(),
            codomain: codomain.into(),
            domain_dim: m.cols(),
            codomain_dim: m.rows(),
            matrix: column_terms(m),
        }
    }

    /// The matrix, after checking the dimension stamps against the loaded braces.
    pub fn matrix(&self, dom: &HopfBrace, cod: &HopfBrace) -> Result<LinMap> {
        check_format(&self.format, MORPHISM_FORMAT)?;
        if dom.field() != cod.field() {
            return Err(Error::FieldMismatch(dom.field(), cod.field()));
        }
        if self.domain_dim != dom.dim() || self.codomain_dim != cod.dim() {
            return Err(Error::Parse(format!(
                "dimension stamp {}→{} does not match the referenced braces {}→{}",
                self.domain_dim,
                self.codomain_dim,
                dom.dim(),
                cod.dim()
            )));
        }
        parse_columns(dom.field(), &self.matrix, cod.dim(), dom.dim(), "matrix")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceFile {
    pub format: String,
    pub ambient: usize,
    pub vectors: Vec<Vec<Rat>>,
}

impl SubspaceFile {
    pub fn from_subspace(s: &Subspace) -> Self {
        SubspaceFile { format: SUBSPACE_FORMAT.into(), ambient: s.ambient_dim(), vectors: s.vectors().iter().map(|v| v.iter().map(rat).collect()).collect() }
    }

    pub fn to_subspace(&self, f: Field) -> Result<Subspace> {
        check_format(&self.format, SUBSPACE_FORMAT)?;
        let vs = self.vectors.iter().enumerate().map(|(i, v)| dense(f, v, self.ambient, &format!("vectors[{i}]"))).collect::<Result<Vec<_>>>()?;
        Ok(Subspace::span(f, self.ambient, &vs))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatchedPairFile {
    pub format: String,
    pub field: FieldSpec,
    pub dim: usize,
    pub basis: Vec<String>,
    pub comul: Vec<Vec<(usize, usize, Int, Int)>>,
    pub counit: Vec<Rat>,
    pub mul_bullet: BilinearTerms,
    pub unit: Vec<Rat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode_bullet: Option<ColumnTerms>,
    pub act_left: BilinearTerms,
    pub act_right: BilinearTerms,
}

impl MatchedPairFile {
    pub fn from_data(mp: &MatchedPairData) -> Self {
        let h = &mp.hopf_bullet;
        let n = h.dim();
        MatchedPairFile {
            format: MATCHED_PAIR_FORMAT.into(),
            field: FieldSpec::from_field(h.field()),
            dim: n,
            basis: h.coalg.basis_names().to_vec(),
            comul: comul_terms(&h.coalg),
            counit: h.coalg.counit().iter().map(rat).collect(),
            mul_bullet: bilinear_terms(&h.mul, n),
            unit: h.unit.iter().map(rat).collect(),
            antipode_bullet: Some(column_terms(&h.antipode)),
            act_left: bilinear_terms(&mp.act_left, n),
            act_right: bilinear_terms(&mp.act_right, n),
        }
    }

    pub fn to_data(&self) -> Result<MatchedPairData> {
        check_format(&self.format, MATCHED_PAIR_FORMAT)?;
        let f = self.field.to_field()?;
        let n = self.dim;
        let coalg = parse_coalgebra(f, &self.basis, &self.comul, &self.counit, n)?;
        let mul = parse_bilinear(f, &self.mul_bullet, n, "mul_bullet")?;
        let unit = dense(f, &self.unit, n, "unit")?;
        let t = self.antipode_bullet.as_ref().map(|t| parse_columns(f, t, n, n, "antipode_bullet")).transpose()?;
        let hopf_bullet = HopfAlgebraData::new(coalg, mul, unit, t)?;
        Ok(MatchedPairData {
            hopf_bullet,
            act_left: parse_bilinear(f, &self.act_left, n, "act_left")?,
            act_right: parse_bilinear(f, &self.act_right, n, "act_right")?,
        })
    }
}

/// Parses JSON, reporting line and column on failure.
pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
