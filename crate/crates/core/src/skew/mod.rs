//! Finite skew braces, their set-theoretic solutions and linearizations.

pub mod catalog;

use serde::{Deserialize, Serialize};

use crate::brace::HopfBrace;
use crate::field::Field;
use crate::hopf::HopfAlgebraData;
use crate::report::{first_failure, VerificationReport};

/// Two group laws on `{0, …, order-1}` with a shared identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewBrace {
    pub order: usize,
    pub dot: Vec<Vec<usize>>,
    pub bullet: Vec<Vec<usize>>,
    pub identity: usize,
}

fn well_formed(t: &[Vec<usize>], n: usize) -> bool {
    t.len() == n && t.iter().all(|r| r.len() == n && r.iter().all(|&x| x < n))
}

fn inverses(t: &[Vec<usize>], e: usize) -> Option<Vec<usize>> {
    let n = t.len();
    (0..n).map(|g| (0..n).find(|&h| t[g][h] == e && t[h][g] == e)).collect()
}

fn group_report(r: &mut VerificationReport, prefix: &str, t: &[Vec<usize>], e: usize) {
    let n = t.len();
    r.record(format!("{prefix}identity"), first_failure(n, 1, |x| t[e][x[0]] == x[0] && t[x[0]][e] == x[0]));
    r.record(format!("{prefix}associativity"), first_failure(n, 3, |x| t[t[x[0]][x[1]]][x[2]] == t[x[0]][t[x[1]][x[2]]]));
    r.record(format!("{prefix}inverses"), first_failure(n, 1, |x| (0..n).any(|h| t[x[0]][h] == e && t[h][x[0]] == e)));
}

impl SkewBrace {
    pub fn dot_inverse(&self) -> Vec<usize> {
        inverses(&self.dot, self.identity).expect("verified group law")
    }

    pub fn bullet_inverse(&self) -> Vec<usize> {
        inverses(&self.bullet, self.identity).expect("verified group law")
    }

    /// `λ_x(y) = x^{-·}·(x∘y)`.
    pub fn lambda(&self, x: usize, y: usize) -> usize {
        self.dot[self.dot_inverse()[x]][self.bullet[x][y]]
    }
}

/// Group axioms for both laws and `g∘(h·k) = (g∘h)·g^{-·}·(g∘k)`.
pub fn verify_skew_brace(s: &SkewBrace) -> VerificationReport {
    let mut r = VerificationReport::new();
    let n = s.order;
    let shape = well_formed(&s.dot, n) && well_formed(&s.bullet, n) && s.identity < n;
    r.record("tables_well_formed", if shape { None } else { Some(vec![]) });
    if !shape {
        return r;
    }
    group_report(&mut r, "dot.", &s.dot, s.identity);
    group_report(&mut r, "bullet.", &s.bullet, s.identity);
    match inverses(&s.dot, s.identity) {
        Some(inv) => {
            let (d, b) = (&s.dot, &s.bullet);
            r.record(
                "compatibility",
                first_failure(n, 3, |x| {
                    let (g, h, k) = (x[0], x[1], x[2]);
                    b[g][d[h][k]] == d[d[b[g][h]][inv[g]]][b[g][k]]
                }),
            );
        }
        None => r.record("compatibility", Some(vec![])),
    }
    r
}

/// The group-algebra Hopf brace `k[G]` with all basis elements group-like.
pub fn linearize(s: &SkewBrace, field: Field) -> HopfBrace {
    let names: Vec<String> = (0..s.order).map(|i| format!("e{i}")).collect();
    let dot = HopfAlgebraData::group_algebra(field, names.clone(), &s.dot, s.identity);
    let bullet = HopfAlgebraData::group_algebra(field, names, &s.bullet, s.identity);
    HopfBrace::from_hopf_pair(dot, bullet)
}

/// `r(x, y) = (λ_x(y), ρ_y(x))` on index pairs, stored at `x * order + y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSolution {
    pub order: usize,
    pub r: Vec<(usize, usize)>,
}

impl SetSolution {
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        self.r[x * self.order + y]
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.r.len()];
        for &(a, b) in &self.r {
            seen[a * self.order + b] = true;
        }
        seen.into_iter().all(|x| x)
    }

    /// `r₁₂ r₂₃ r₁₂ = r₂₃ r₁₂ r₂₃` on every triple.
    pub fn braid_witness(&self) -> Option<Vec<usize>> {
        let r12 = |(x, y, z): (usize, usize, usize)| {
            let (a, b) = self.apply(x, y);
            (a, b, z)
        };
        let r23 = |(x, y, z): (usize, usize, usize)| {
            let (b, c) = self.apply(y, z);
            (x, b, c)
        };
        first_failure(self.order, 3, |t| {
            let v = (t[0], t[1], t[2]);
            r12(r23(r12(v))) == r23(r12(r23(v)))
        })
    }

    pub fn braid_check(&self) -> bool {
        self.is_bijective() && self.braid_witness().is_none()
    }
}

/// The solution of a skew brace, with `ρ_y(x) = λ_x(y)^{-∘}∘x∘y`.
pub fn set_solution(s: &SkewBrace) -> SetSolution {
    let n = s.order;
    let binv = s.bullet_inverse();
    let b = &s.bullet;
    let r = (0..n * n)
        .map(|idx| {
            let (x, y) = (idx / n, idx % n);
            let l = s.lambda(x, y);
            (l, b[b[binv[l]][x]][y])
        })
        .collect();
    SetSolution { order: n, r }
}
