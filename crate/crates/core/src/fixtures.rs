//! Standard test objects: groupoid and group algebras, named presets, and
//! automorphism enumeration by basis permutation.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::decompose::direct_sum;
use crate::error::{Error, Result, Violation};
use crate::linalg::Matrix;
use crate::scalar::FieldSpec;
use crate::structure::{FiniteAlgebra, FiniteCoalgebra};
use crate::tannaka::{check_map, WeakBialgebraMap};
use crate::weak::{build_weak_bialgebra, verify_antipode, WeakBialgebra};

/// A finite groupoid given by its arrows and a composition table.
///
/// `compose[&(a, b)] = c` means `a·b = c`, defined when `source(a) = target(b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupoidPresentation {
    objects: Vec<String>,
    arrows: Vec<(String, usize, usize)>,
    compose: BTreeMap<(usize, usize), usize>,
    inverses: Vec<usize>,
}

impl GroupoidPresentation {
    pub fn new(
        objects: Vec<String>,
        arrows: Vec<(String, usize, usize)>,
        compose: BTreeMap<(usize, usize), usize>,
        inverses: Vec<usize>,
    ) -> Result<Self> {
        let g = GroupoidPresentation {
            objects,
            arrows,
            compose,
            inverses,
        };
        let violations = g.validate();
        if !violations.is_empty() {
            return Err(Error::violations("groupoid presentation", violations));
        }
        Ok(g)
    }

    /// The groupoid with `n` objects and exactly one arrow between any two.
    /// Arrows are the identities `e1…en` first, then `a{i}{j}: i→j`; for
    /// two objects these are named `f: 1→2` and `g: 2→1`.
    pub fn indiscrete(n: usize) -> Result<Self> {
        let objects: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let mut arrows: Vec<(String, usize, usize)> = (0..n).map(|i| (format!("e{}", i + 1), i, i)).collect();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    arrows.push((format!("a{}{}", i + 1, j + 1), i, j));
                }
            }
        }
        if n == 2 {
            arrows[2].0 = "f".into();
            arrows[3].0 = "g".into();
        }
        let find = |s: usize, t: usize| arrows.iter().position(|a| a.1 == s && a.2 == t).unwrap();
        let mut compose = BTreeMap::new();
        for (a, &(_, sa, ta)) in arrows.iter().enumerate() {
            for (b, &(_, sb, tb)) in arrows.iter().enumerate() {
                if sa == tb {
                    compose.insert((a, b), find(sb, ta));
                }
            }
        }
        let inverses = arrows.iter().map(|&(_, s, t)| find(t, s)).collect();
        Self::new(objects, arrows, compose, inverses)
    }

    /// A group as a one-object groupoid. `table[a][b]` is the index of `a·b`.
    pub fn from_group(labels: Vec<String>, table: &[Vec<usize>]) -> Result<Self> {
        let n = labels.len();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::Malformed(format!("group table must be {n}×{n}")));
        }
        if let Some(&bad) = table.iter().flatten().find(|&&c| c >= n) {
            return Err(Error::Malformed(format!("group table entry {bad} out of range")));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::Precondition("group table has no identity element".into()))?;
        let inverses = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| table[a][b] == identity && table[b][a] == identity)
                    .ok_or_else(|| Error::Precondition(format!("{} has no inverse", labels[a])))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut compose = BTreeMap::new();
        for (a, row) in table.iter().enumerate() {
            for (b, &c) in row.iter().enumerate() {
                compose.insert((a, b), c);
            }
        }
        let arrows = labels.into_iter().map(|l| (l, 0, 0)).collect();
        Self::new(vec!["*".into()], arrows, compose, inverses)
    }

    pub fn arrows(&self) -> &[(String, usize, usize)] {
        &self.arrows
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let n = self.arrows.len();
        let name = |a: usize| self.arrows[a].0.clone();
        if let Some((l, s, t)) = self.arrows.iter().find(|a| a.1 >= self.objects.len() || a.2 >= self.objects.len()) {
            out.push(Violation::new("arrow endpoints are objects", vec![l.clone()], format!("{s}→{t}"), format!("< {}", self.objects.len())));
            return out;
        }
        if self.inverses.len() != n || self.inverses.iter().any(|&i| i >= n) {
            out.push(Violation::new("inverse table covers every arrow", vec![], format!("{} entries", self.inverses.len()), n.to_string()));
            return out;
        }
        for a in 0..n {
            for b in 0..n {
                let composable = self.arrows[a].1 == self.arrows[b].2;
                match (composable, self.compose.get(&(a, b))) {
                    (true, None) => out.push(Violation::new("composable pairs have a composite", vec![name(a), name(b)], "undefined", "an arrow")),
                    (false, Some(_)) => out.push(Violation::new("only composable pairs compose", vec![name(a), name(b)], "defined", "undefined")),
                    (true, Some(&c)) => {
                        let ends = (self.arrows[b].1, self.arrows[a].2);
                        if c >= n || (self.arrows[c].1, self.arrows[c].2) != ends {
                            out.push(Violation::new("composite has the outer endpoints", vec![name(a), name(b)], format!("{c}"), format!("{}→{}", ends.0, ends.1)));
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        if !out.is_empty() {
            return out;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if let (Some(&ab), Some(&bc)) = (self.compose.get(&(a, b)), self.compose.get(&(b, c))) {
                        let l = self.compose[&(ab, c)];
                        let r = self.compose[&(a, bc)];
                        if l != r {
                            out.push(Violation::new("(ab)c = a(bc)", vec![name(a), name(b), name(c)], name(l), name(r)));
                        }
                    }
                }
            }
        }
        for o in 0..self.objects.len() {
            let ids: Vec<usize> = (0..n)
                .filter(|&e| {
                    self.arrows[e].1 == o
                        && self.arrows[e].2 == o
                        && (0..n).all(|a| self.compose.get(&(e, a)).is_none_or(|&c| c == a) && self.compose.get(&(a, e)).is_none_or(|&c| c == a))
                })
                .collect();
            if ids.len() != 1 {
                out.push(Violation::new("each object has one identity arrow", vec![self.objects[o].clone()], ids.len().to_string(), "1"));
            }
        }
        for a in 0..n {
            let i = self.inverses[a];
            let ok = match (self.compose.get(&(a, i)), self.compose.get(&(i, a))) {
                (Some(&x), Some(&y)) => self.arrows[x].1 == self.arrows[x].2 && self.arrows[y].1 == self.arrows[y].2 && self.is_identity(x) && self.is_identity(y),
                _ => false,
            };
            if !ok {
                out.push(Violation::new("a·a⁻¹ and a⁻¹·a are identities", vec![name(a)], name(i), "inverse"));
            }
        }
        out
    }

    fn is_identity(&self, e: usize) -> bool {
        (0..self.arrows.len()).all(|a| self.compose.get(&(e, a)).is_none_or(|&c| c == a))
    }
}

/// The groupoid algebra: arrows are group-like, products compose or vanish,
/// `S(a) = a⁻¹`. The result is verified before it is returned.
pub fn groupoid_algebra(g: &GroupoidPresentation, field: FieldSpec) -> Result<WeakBialgebra> {
    let n = g.arrows.len();
    let labels: Vec<String> = g.arrows.iter().map(|a| a.0.clone()).collect();
    let unit = (0..n)
        .map(|a| if g.arrows[a].1 == g.arrows[a].2 && g.is_identity(a) { field.one() } else { field.zero() })
        .collect();
    let alg = FiniteAlgebra::from_fn(field, labels.clone(), unit, |i, j, k| {
        if g.compose.get(&(i, j)) == Some(&k) {
            field.one()
        } else {
            field.zero()
        }
    })?;
    let coa = FiniteCoalgebra::from_fn(field, labels, vec![field.one(); n], |i, j, k| {
        if i == j && j == k {
            field.one()
        } else {
            field.zero()
        }
    })?;
    let h = build_weak_bialgebra(alg, coa)?;
    let s = Matrix::from_fn(field, n, n, |r, c| if g.inverses[c] == r { field.one() } else { field.zero() });
    let v = verify_antipode(&h, &s)?;
    v.into_result("groupoid antipode")?;
    h.with_antipode(s)
}

pub fn group_algebra(labels: Vec<String>, table: &[Vec<usize>], field: FieldSpec) -> Result<WeakBialgebra> {
    groupoid_algebra(&GroupoidPresentation::from_group(labels, table)?, field)
}

fn cyclic(n: usize, labels: &[&str], field: FieldSpec) -> Result<WeakBialgebra> {
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    group_algebra(labels.iter().map(|s| s.to_string()).collect(), &table, field)
}

/// The ground field as a one-dimensional weak Hopf algebra.
pub fn k(field: FieldSpec) -> WeakBialgebra {
    cyclic(1, &["1"], field).expect("trivial group algebra")
}

pub fn c2(field: FieldSpec) -> WeakBialgebra {
    cyclic(2, &["1", "g"], field).expect("C2 group algebra")
}

pub fn z3(field: FieldSpec) -> WeakBialgebra {
    cyclic(3, &["1", "g", "g2"], field).expect("Z/3 group algebra")
}

/// Algebra of the indiscrete groupoid on two objects, basis `[e1, e2, f, g]`
/// with `f: 1→2`, `g: 2→1`, so `g·f = e1` and `f·g = e2`.
pub fn gpd2(field: FieldSpec) -> WeakBialgebra {
    groupoid_algebra(&GroupoidPresentation::indiscrete(2).expect("indiscrete groupoid"), field).expect("GPD2")
}

pub fn sum(field: FieldSpec) -> WeakBialgebra {
    direct_sum(&c2(field), &gpd2(field)).expect("C2 ⊕ GPD2")
}

/// The monoid `{1, x}` with `x² = x`: a bialgebra without an antipode.
pub fn monoid2(field: FieldSpec) -> WeakBialgebra {
    let labels = vec!["1".to_string(), "x".to_string()];
    let alg = FiniteAlgebra::from_fn(field, labels.clone(), vec![field.one(), field.zero()], |i, j, k| {
        if i.max(j) == k {
            field.one()
        } else {
            field.zero()
        }
    })
    .expect("monoid algebra");
    let coa = FiniteCoalgebra::from_fn(field, labels, vec![field.one(); 2], |i, j, kk| if i == j && j == kk { field.one() } else { field.zero() })
        .expect("monoid coalgebra");
    build_weak_bialgebra(alg, coa).expect("monoid bialgebra")
}

pub const PRESETS: [&str; 5] = ["k", "c2", "gpd2", "sum", "z3@gf2"];

/// A named preset. `field` overrides the preset's own field (Q, or GF(2) for
/// `z3@gf2`).
pub fn preset(name: &str, field: Option<FieldSpec>) -> Result<WeakBialgebra> {
    let q = field.unwrap_or(FieldSpec::Rationals);
    match name {
        "k" => Ok(k(q)),
        "c2" => Ok(c2(q)),
        "gpd2" => Ok(gpd2(q)),
        "sum" => Ok(sum(q)),
        "z3@gf2" => Ok(z3(field.unwrap_or(FieldSpec::Prime(2)))),
        "monoid2" => Ok(monoid2(q)),
        _ => Err(Error::Malformed(format!("unknown fixture {name:?}; expected one of {}", PRESETS.join(", ")))),
    }
}

pub const AUTOMORPHISM_DIM_BOUND: usize = 8;

/// All weak bialgebra automorphisms that permute the group-like basis
/// elements and fix the rest, in lexicographic order of the permutation.
pub fn enumerate_automorphisms(h: &Arc<WeakBialgebra>, bound: usize) -> Result<Vec<WeakBialgebraMap>> {
    let n = h.dim();
    if bound > AUTOMORPHISM_DIM_BOUND || n > bound {
        return Err(Error::Precondition(format!(
            "automorphism search is limited to dimension ≤ {}; got dimension {n} with bound {bound}",
            bound.min(AUTOMORPHISM_DIM_BOUND)
        )));
    }
    let field = h.field();
    let grouplike: Vec<usize> = (0..n)
        .filter(|&i| {
            let b = h.basis_vec(i);
            h.eps(&b).is_one() && h.delta(&b) == crate::linalg::outer(&b, &b)
        })
        .collect();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    let mut chosen: Vec<usize> = Vec::new();
    fn search(
        h: &Arc<WeakBialgebra>,
        gl: &[usize],
        chosen: &mut Vec<usize>,
        used: &mut [bool],
        perm: &mut [usize],
        out: &mut Vec<WeakBialgebraMap>,
    ) -> Result<()> {
        let field = h.field();
        let n = h.dim();
        if chosen.len() == gl.len() {
            for (slot, &img) in gl.iter().zip(chosen.iter()) {
                perm[*slot] = img;
            }
            let m = Matrix::from_fn(field, n, n, |r, c| if perm[c] == r { field.one() } else { field.zero() });
            if let Ok(map) = check_map(&m, h, h) {
                out.push(map);
            }
            return Ok(());
        }
        let slot = gl[chosen.len()];
        for &img in gl {
            if used[img] {
                continue;
            }
            // prune on products among already placed group-likes
            let placed = chosen.len();
            let consistent = (0..placed).all(|t| {
                let (a, fa) = (gl[t], chosen[t]);
                let lhs = h.algebra().basis_product(a, slot);
                let rhs = h.algebra().basis_product(fa, img);
                permuted_eq(lhs, rhs, gl, chosen, slot, img)
            });
            if !consistent {
                continue;
            }
            used[img] = true;
            chosen.push(img);
            search(h, gl, chosen, used, perm, out)?;
            chosen.pop();
            used[img] = false;
        }
        Ok(())
    }
    let _ = field;
    search(h, &grouplike, &mut chosen, &mut used, &mut perm, &mut out)?;
    Ok(out)
}

/// Whether `σ(lhs) = rhs` is still possible given the partial assignment;
/// only decides when `lhs` is a single placed basis element or zero.
fn permuted_eq(lhs: &[crate::scalar::Scalar], rhs: &[crate::scalar::Scalar], gl: &[usize], chosen: &[usize], slot: usize, img: usize) -> bool {
    let support: Vec<usize> = (0..lhs.len()).filter(|&i| !lhs[i].is_zero()).collect();
    match support.as_slice() {
        [] => rhs.iter().all(|x| x.is_zero()),
        [i] if lhs[*i].is_one() => {
            let target = if *i == slot {
                Some(img)
            } else {
                gl.iter().position(|&g| g == *i).and_then(|t| chosen.get(t).copied())
            };
            match target {
                Some(t) => (0..rhs.len()).all(|r| rhs[r].is_zero() != (r == t) && (r != t || rhs[r].is_one())),
                None => true,
            }
        }
        _ => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weak::{lemma_suite, solve_antipode, AntipodeSolution};

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn presets_build_and_self_check() {
        for name in PRESETS {
            let h = preset(name, None).unwrap();
            assert!(lemma_suite(&h).unwrap().is_pass(), "{name}");
        }
        assert_eq!(preset("k", None).unwrap().dim(), 1);
        assert_eq!(preset("z3@gf2", None).unwrap().field(), FieldSpec::Prime(2));
        assert_eq!(preset("gpd2", Some(FieldSpec::Prime(3))).unwrap().field(), FieldSpec::Prime(3));
        assert!(preset("nope", None).is_err());
    }

    #[test]
    fn sum_dimensions() {
        let s = sum(Q);
        assert_eq!(s.dim(), 6);
        assert_eq!(s.h_s().dim(), 3);
        assert_eq!(s.labels()[0], "A.1");
        assert_eq!(s.labels()[2], "B.e1");
    }

    #[test]
    fn groupoid_composition_is_checked() {
        let g = GroupoidPresentation::indiscrete(2).unwrap();
        let mut compose = g.compose.clone();
        compose.insert((2, 3), 0); // f·g = e1 instead of e2
        let err = GroupoidPresentation::new(g.objects.clone(), g.arrows.clone(), compose, g.inverses.clone()).unwrap_err();
        assert!(err.violation_list().iter().any(|v| v.law == "composite has the outer endpoints"));
        assert_eq!(gpd2(Q).labels(), ["e1", "e2", "f", "g"]);
    }

    #[test]
    fn non_group_table_rejected() {
        let labels = vec!["1".to_string(), "x".to_string()];
        assert!(group_algebra(labels, &[vec![0, 1], vec![1, 1]], Q).is_err());
    }

    #[test]
    fn monoid_has_no_antipode() {
        assert_eq!(solve_antipode(&monoid2(Q)), AntipodeSolution::None);
    }

    #[test]
    fn automorphisms_of_fixtures() {
        let g = Arc::new(gpd2(Q));
        let autos = enumerate_automorphisms(&g, 8).unwrap();
        assert_eq!(autos.len(), 2);
        assert!(autos[0].matrix().is_identity());
        let swap = Matrix::from_ints(Q, &[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]);
        assert_eq!(autos[1].matrix(), &swap);
        assert_eq!(enumerate_automorphisms(&Arc::new(c2(Q)), 8).unwrap().len(), 1);
        assert_eq!(enumerate_automorphisms(&Arc::new(k(Q)), 8).unwrap().len(), 1);
        assert_eq!(enumerate_automorphisms(&Arc::new(z3(FieldSpec::Prime(2))), 8).unwrap().len(), 2);
        assert!(enumerate_automorphisms(&g, 9).is_err());
        assert!(enumerate_automorphisms(&Arc::new(direct_sum(&sum(Q), &gpd2(Q)).unwrap()), 8).is_err());
    }
}
