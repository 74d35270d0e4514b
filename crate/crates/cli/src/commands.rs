use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use hopfbrace::brace::{braid_report, from_matched_pair, to_matched_pair, verify_hopf_brace, verify_matched_pair, ybe_operator, HopfBrace};
use hopfbrace::format::{self, BraceFile, MatchedPairFile, MorphismFile, SkewBraceFile, SubspaceFile};
use hopfbrace::linalg::sparse::unit_vec;
use hopfbrace::linalg::Subspace;
use hopfbrace::skew::{linearize, set_solution, verify_skew_brace};
use hopfbrace::structure::{self, huq_commutator, is_abelian_object, is_central_extension, torsion_sequence};
use hopfbrace::subquot::{
    epi_mono_factorize, hkernel, ideal_from_normal, normality_report, quotient_by_ideal, smash_decompose, verify_morphism, BraceMorphism, PointData,
    SubBrace,
};
use hopfbrace::{catalog as builtin, skew};
use serde_json::{json, Value};

use crate::output::{CliError, Outcome};

type Res = Result<Outcome, CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn parse<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    format::from_json(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| CliError::Failure(format!("{}: {e}", dir.display()), None))?;
    }
    fs::write(path, text).map_err(|e| CliError::Failure(format!("{}: {e}", path.display()), None))
}

fn load_brace(path: &Path) -> Result<Arc<HopfBrace>, CliError> {
    let file: BraceFile = parse(path)?;
    Ok(Arc::new(file.to_brace()?))
}

fn load_morphism(path: &Path) -> Result<BraceMorphism, CliError> {
    let file: MorphismFile = parse(path)?;
    let base = path.parent().unwrap_or(Path::new("."));
    let dom = load_brace(&base.join(&file.domain))?;
    let cod = load_brace(&base.join(&file.codomain))?;
    let mat = file.matrix(&dom, &cod)?;
    Ok(BraceMorphism::new(dom, cod, mat)?)
}

fn load_sub(path: &Path, parent: &Arc<HopfBrace>) -> Result<SubBrace, CliError> {
    let file: SubspaceFile = parse(path)?;
    let space = file.to_subspace(parent.field())?;
    Ok(SubBrace::new(parent.clone(), space)?)
}

fn brace_value(b: &HopfBrace) -> Value {
    serde_json::to_value(BraceFile::from_brace(b)).expect("serializable")
}

fn subspace_value(s: &Subspace) -> Value {
    serde_json::to_value(SubspaceFile::from_subspace(s)).expect("serializable")
}

fn emit_brace(o: &mut Outcome, b: &HopfBrace, out: Option<&Path>) -> Result<(), CliError> {
    o.set("output", brace_value(b));
    if let Some(p) = out {
        write(p, &format::to_json(&BraceFile::from_brace(b)))?;
    }
    Ok(())
}

fn basis_names(b: &HopfBrace, s: &Subspace) -> Value {
    let names: Vec<String> = s.vectors().iter().map(|v| hopfbrace::linalg::sparse::from_dense(v)).map(|v| name_of(b, &v)).collect();
    json!(names)
}

fn name_of(b: &HopfBrace, v: &hopfbrace::linalg::SVec) -> String {
    let mut s = String::new();
    for (k, (i, c)) in v.iter().enumerate() {
        let c = c.to_string();
        let neg = c.starts_with('-');
        let abs = c.trim_start_matches('-');
        if k > 0 || neg {
            s.push(if neg { '-' } else { '+' });
        }
        if abs != "1" {
            s.push_str(abs);
            s.push('*');
        }
        s.push_str(&b.basis_names()[*i]);
    }
    s
}

pub fn verify(file: &Path) -> Res {
    let b = load_brace(file)?;
    let mut o = Outcome::new("verify");
    o.checks("", &verify_hopf_brace(&b));
    o.set("field", b.field().to_string()).set("dim", b.dim()).set("trivial", structure::is_trivial_brace(&b));
    Ok(o)
}

pub fn ybe(file: &Path, emit_matrix: bool) -> Res {
    let b = load_brace(file)?;
    let c = ybe_operator(&b);
    let mut o = Outcome::new("ybe");
    o.checks("", &braid_report(&c));
    o.set("dim", b.dim()).set("operator_size", c.mat.rows());
    if emit_matrix {
        o.set("matrix", serde_json::to_value(format::column_terms(&c.mat)).expect("serializable"));
    }
    Ok(o)
}

pub fn kernel(morphism: &Path) -> Res {
    let f = load_morphism(morphism)?;
    let mut o = Outcome::new("kernel");
    o.checks("morphism.", &verify_morphism(&f));
    let k = hkernel(&f);
    o.checks("kernel.", k.report());
    o.check("kernel.normal", k.is_normal());
    o.set("dim", k.dim()).set("basis", basis_names(&f.dom, k.space())).set("subspace", subspace_value(k.space()));
    o.note(format!("Hker has dimension {} inside a {}-dimensional domain", k.dim(), f.dom.dim()));
    Ok(o)
}

pub fn quotient(file: &Path, normal_sub: &Path, out: Option<&Path>) -> Res {
    let b = load_brace(file)?;
    let sub = load_sub(normal_sub, &b)?;
    let mut o = Outcome::new("quotient");
    o.checks("sub.", sub.report());
    if !sub.is_sub_brace() {
        return Ok(o);
    }
    o.checks("normal.", &normality_report(&sub));
    if !sub.is_normal() {
        return Ok(o);
    }
    let ideal = ideal_from_normal(&sub)?;
    let q = quotient_by_ideal(&ideal)?;
    o.checks("quotient.", &verify_hopf_brace(&q.brace));
    o.checks("projection.", &verify_morphism(&q.proj));
    o.set("ideal_dim", ideal.space.dim()).set("dim", q.brace.dim());
    emit_brace(&mut o, &q.brace, out)?;
    Ok(o)
}

pub fn factorize(morphism: &Path) -> Res {
    let f = load_morphism(morphism)?;
    let mut o = Outcome::new("factorize");
    o.checks("morphism.", &verify_morphism(&f));
    let fz = epi_mono_factorize(&f)?;
    o.check("newman_identity", fz.ideal.space == f.linear_kernel());
    o.check("i_after_p_equals_f", fz.i.mat.compose(&fz.p.mat) == f.mat);
    o.check("p_surjective", fz.p.is_surjective());
    o.check("i_injective", fz.i.is_injective());
    o.check("hkernel_p_equals_hkernel_f", hkernel(&fz.p).space() == fz.kernel.space());
    o.checks("i.", &verify_morphism(&fz.i));
    o.set("kernel_dim", fz.kernel.dim()).set("image_dim", fz.quotient.brace.dim());
    Ok(o)
}

pub fn decompose(file: &Path) -> Res {
    let b = load_brace(file)?;
    let t = torsion_sequence(&b)?;
    let mut o = Outcome::new("decompose");
    o.checks("projection.", &verify_morphism(&t.projection));
    o.check("exactness", t.exact);
    o.check("section_splits", t.projection.mat.compose(&t.section.mat).is_identity());
    o.set("torsion_dim", t.torsion.dim())
        .set("free_dim", t.free.dim())
        .set("torsion_basis", basis_names(&b, t.torsion.space()))
        .set("grouplike_basis", basis_names(&b, t.grouplikes.space()))
        .set("is_skb", structure::is_skb_object(&b))
        .set("is_primitive", structure::is_primitive_brace(&b));
    o.note(format!("torsion dim {}, free dim {}", t.torsion.dim(), t.free.dim()));
    Ok(o)
}

pub fn commutator(file: &Path, subs: &[PathBuf]) -> Res {
    let b = load_brace(file)?;
    let (x, y) = match subs {
        [] => (SubBrace::full(&b), SubBrace::full(&b)),
        [x, y] => (load_sub(x, &b)?, load_sub(y, &b)?),
        _ => return Err(CliError::Input("pass --sub exactly twice, or not at all".into())),
    };
    let mut o = Outcome::new("commutator");
    o.check("x_normal", x.is_normal()).check("y_normal", y.is_normal());
    if !x.is_normal() || !y.is_normal() {
        return Ok(o);
    }
    let res = huq_commutator(&x, &y)?;
    let sym = huq_commutator(&y, &x)?;
    o.check("images_commute", res.images_commute(&x, &y)?);
    o.check("symmetric", sym.commutator.space() == res.commutator.space());
    o.set("dim", res.commutator.dim())
        .set("basis", basis_names(&b, res.commutator.space()))
        .set("subspace", subspace_value(res.commutator.space()))
        .set("quotient_dim", res.quotient.brace.dim());
    Ok(o)
}

pub fn abelianize(file: &Path, out: Option<&Path>) -> Res {
    let b = load_brace(file)?;
    let q = structure::abelianization(&b)?;
    let mut o = Outcome::new("abelianize");
    o.checks("quotient.", &verify_hopf_brace(&q.brace));
    o.check("is_abelian", is_abelian_object(&q.brace));
    o.check("central_extension", is_central_extension(&q.proj)?);
    o.check("idempotent", structure::abelianization(&q.brace)?.brace.dim() == q.brace.dim());
    o.set("dim", q.brace.dim());
    emit_brace(&mut o, &q.brace, out)?;
    Ok(o)
}

pub fn matched_pair(file: &Path, to: bool, out: Option<&Path>) -> Res {
    let mut o = Outcome::new("matched-pair");
    if to {
        let b = load_brace(file)?;
        let mp = to_matched_pair(&b);
        o.checks("", &verify_matched_pair(&mp));
        let f = MatchedPairFile::from_data(&mp);
        o.set("output", serde_json::to_value(&f).expect("serializable"));
        if let Some(p) = out {
            write(p, &format::to_json(&f))?;
        }
    } else {
        let file: MatchedPairFile = parse(file)?;
        let mp = file.to_data()?;
        o.checks("", &verify_matched_pair(&mp));
        if !o.passed() {
            return Ok(o);
        }
        let b = from_matched_pair(&mp)?;
        o.checks("brace.", &verify_hopf_brace(&b));
        emit_brace(&mut o, &b, out)?;
    }
    Ok(o)
}

pub fn skew_lift(file: &Path, field: &str, out: Option<&Path>) -> Res {
    let field = format::parse_field(field)?;
    let s = parse::<SkewBraceFile>(file)?.to_skew()?;
    let mut o = Outcome::new("skew lift");
    o.checks("skew.", &verify_skew_brace(&s));
    if !o.passed() {
        return Ok(o);
    }
    let b = linearize(&s, field);
    o.checks("lift.", &verify_hopf_brace(&b));
    o.set("dim", b.dim());
    emit_brace(&mut o, &b, out)?;
    Ok(o)
}

pub fn skew_ybe(file: &Path) -> Res {
    let s = parse::<SkewBraceFile>(file)?.to_skew()?;
    let mut o = Outcome::new("skew ybe");
    o.checks("skew.", &verify_skew_brace(&s));
    if !o.passed() {
        return Ok(o);
    }
    let r = set_solution(&s);
    o.check("bijective", r.is_bijective());
    o.check("braid_equation", r.braid_check());
    let n = s.order;
    let b = linearize(&s, hopfbrace::Field::Rationals);
    let c = ybe_operator(&b);
    let agree = (0..n * n).all(|i| {
        let (u, v) = r.apply(i / n, i % n);
        *c.mat.col(i) == unit_vec(b.field(), u * n + v)
    });
    o.check("agrees_with_linear_operator", agree);
    let table: Vec<[usize; 4]> = (0..n * n)
        .map(|i| {
            let (u, v) = r.apply(i / n, i % n);
            [i / n, i % n, u, v]
        })
        .collect();
    o.set("order", n).set("table", json!(table));
    Ok(o)
}

pub fn catalog(emit: Option<&Path>) -> Res {
    let mut o = Outcome::new("catalog");
    let braces = builtin::braces();
    let mut listing = Vec::new();
    for (name, b) in &braces {
        listing.push(json!({ "name": name, "field": b.field().to_string(), "dim": b.dim() }));
        o.check(&format!("{name}.verified"), verify_hopf_brace(b).all_passed());
    }
    o.set("braces", json!(listing));
    let skews: Vec<Value> = skew::catalog::catalog().iter().map(|(n, s)| json!({ "name": n, "order": s.order })).collect();
    o.set("skew_braces", json!(skews));
    let Some(dir) = emit else {
        return Ok(o);
    };
    let mut files = Vec::new();
    let mut put = |rel: String, text: String| -> Result<(), CliError> {
        write(&dir.join(&rel), &text)?;
        files.push(rel);
        Ok(())
    };
    for (name, b) in &braces {
        put(format!("braces/{name}.json"), format::to_json(&BraceFile::from_brace(b)))?;
    }
    for (name, s) in skew::catalog::catalog() {
        put(format!("skew/{name}.json"), format::to_json(&SkewBraceFile::from_skew(&s)))?;
    }
    let unit = ("unit_q".to_string(), hopfbrace::subquot::unit_object(hopfbrace::Field::Rationals));
    put(format!("braces/{}.json", unit.0), format::to_json(&BraceFile::from_brace(&unit.1)))?;
    let find = |b: &HopfBrace| braces.iter().chain(std::iter::once(&unit)).find(|(_, c)| **c == *b).map(|(n, _)| n.clone());
    for (name, m) in builtin::morphisms() {
        let (Some(d), Some(c)) = (find(&m.dom), find(&m.cod)) else {
            return Err(CliError::Failure(format!("morphism {name} leaves the catalog"), None));
        };
        let f = MorphismFile::new(&format!("../braces/{d}.json"), &format!("../braces/{c}.json"), &m.mat);
        put(format!("morphisms/{name}.json"), format::to_json(&f))?;
    }
    for (name, p) in builtin::points() {
        put(format!("points/{name}/top.json"), format::to_json(&BraceFile::from_brace(p.top())))?;
        put(format!("points/{name}/base.json"), format::to_json(&BraceFile::from_brace(p.base())))?;
        put(format!("points/{name}/pi.json"), format::to_json(&MorphismFile::new("top.json", "base.json", &p.pi.mat)))?;
        put(format!("points/{name}/gamma.json"), format::to_json(&MorphismFile::new("base.json", "top.json", &p.gamma.mat)))?;
    }
    o.note(format!("wrote {} files under {}", files.len(), dir.display()));
    o.set("files", json!(files));
    Ok(o)
}

pub fn points_decompose(pi: &Path, gamma: &Path) -> Res {
    let pi = load_morphism(pi)?;
    let gamma = load_morphism(gamma)?;
    let mut o = Outcome::new("points decompose");
    o.checks("pi.", &verify_morphism(&pi));
    o.checks("gamma.", &verify_morphism(&gamma));
    if !o.passed() {
        return Ok(o);
    }
    let pt = PointData::new(pi, gamma)?;
    let sd = smash_decompose(&pt)?;
    o.checks("iso_dot.", &verify_morphism(&sd.iso_dot));
    o.checks("iso_bullet.", &verify_morphism(&sd.iso_bullet));
    o.check("iso_dot.invertible", sd.iso_dot.inverse().is_some());
    o.check("iso_bullet.invertible", sd.iso_bullet.inverse().is_some());
    o.set("kernel_dim", sd.kernel.dim())
        .set("base_dim", pt.base().dim())
        .set("top_dim", pt.top().dim())
        .set("kernel_basis", basis_names(pt.top(), sd.kernel.space()));
    Ok(o)
}
