//! Maps of weak bialgebras, the functors they induce on comodules, and the
//! reconstruction of a map from the coactions a functor assigns.

use std::sync::Arc;

use crate::comodule::{regular_comodule, same_bialgebra, tensor_over_source, unit_comodule, Comodule, ComoduleMap};
use crate::error::{Error, Result, Violation};
use crate::linalg::{fmt_vec, Matrix, Subspace, Vector};
use crate::structure::{expect_eq, Verdict};
use crate::weak::WeakBialgebra;

/// A linear map `φ: H → K` verified to be an algebra and coalgebra map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakBialgebraMap {
    source: Arc<WeakBialgebra>,
    target: Arc<WeakBialgebra>,
    matrix: Matrix,
}

impl WeakBialgebraMap {
    pub fn source(&self) -> &Arc<WeakBialgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<WeakBialgebra> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn identity(h: &Arc<WeakBialgebra>) -> Self {
        WeakBialgebraMap {
            source: h.clone(),
            target: h.clone(),
            matrix: Matrix::identity(h.field(), h.dim()),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeakBialgebraMap) -> Result<WeakBialgebraMap> {
        if !same_bialgebra(&other.target, &self.source) {
            return Err(Error::Malformed("composition of maps with mismatched ends".into()));
        }
        check_map(&self.matrix.mul(&other.matrix), &other.source, &self.target)
    }

    /// `φ|_{H_s}: H_s → K_s` in the echelon bases of both subalgebras.
    pub fn restriction_to_source(&self) -> Result<Matrix> {
        restrict(&self.matrix, self.source.h_s(), self.target.h_s())
    }
}

/// Matrix of `φ` restricted to `from` and corestricted to `to`, in echelon coordinates.
fn restrict(phi: &Matrix, from: &Subspace, to: &Subspace) -> Result<Matrix> {
    let cols = from
        .basis_vectors()
        .iter()
        .map(|y| {
            let image = phi.apply(y);
            to.coordinates(&image)
                .ok_or_else(|| Error::Domain(format!("φ({}) = {} leaves the target subalgebra", fmt_vec(y), fmt_vec(&image))))
        })
        .collect::<Result<Vec<Vector>>>()?;
    Ok(Matrix::from_columns(phi.field(), to.dim(), &cols))
}

/// Every violated law of a candidate weak bialgebra map.
pub fn map_verdict(phi: &Matrix, h: &WeakBialgebra, k: &WeakBialgebra) -> Result<Verdict> {
    if phi.shape() != (k.dim(), h.dim()) || phi.field() != h.field() || h.field() != k.field() {
        return Err(Error::Malformed(format!(
            "a map {}-dim → {}-dim must be a {}×{} matrix over {}",
            h.dim(),
            k.dim(),
            k.dim(),
            h.dim(),
            h.field()
        )));
    }
    let mut v = algebra_map_verdict(phi, h, k);
    v.extend(coalgebra_map_verdict(phi, h, k));
    for (name, from, to) in [("φ(H_s) ⊆ K_s", h.h_s(), k.h_s()), ("φ(H_t) ⊆ K_t", h.h_t(), k.h_t())] {
        for y in from.basis_vectors() {
            let image = phi.apply(&y);
            if !to.contains(&image) {
                v.push(Violation::new(name, vec![fmt_vec(&y)], fmt_vec(&image), "an element of the subalgebra"));
            }
        }
    }
    Ok(v)
}

fn algebra_map_verdict(phi: &Matrix, h: &WeakBialgebra, k: &WeakBialgebra) -> Verdict {
    let mut v = Verdict::pass();
    let cols = phi.columns();
    let labels = h.labels();
    for i in 0..h.dim() {
        for j in 0..h.dim() {
            let lhs = phi.apply(h.algebra().basis_product(i, j));
            let rhs = k.mul(&cols[i], &cols[j]);
            expect_eq(&mut v, "φ(xy) = φ(x)φ(y)", &[&labels[i], &labels[j]], &lhs, &rhs);
        }
    }
    expect_eq(&mut v, "φ(1) = 1", &["1"], &phi.apply(h.unit()), k.unit());
    v
}

fn coalgebra_map_verdict(phi: &Matrix, h: &WeakBialgebra, k: &WeakBialgebra) -> Verdict {
    let mut v = Verdict::pass();
    let cols = phi.columns();
    let pp = phi.kron(phi);
    let labels = h.labels();
    for i in 0..h.dim() {
        let lhs = k.delta(&cols[i]);
        let rhs = pp.apply(h.coalgebra().basis_coproduct(i));
        expect_eq(&mut v, "Δ_K∘φ = (φ⊗φ)∘Δ_H", &[&labels[i]], &lhs, &rhs);
        expect_eq(&mut v, "ε_K∘φ = ε_H", &[&labels[i]], &[k.eps(&cols[i])], &[h.coalgebra().counit()[i].clone()]);
    }
    v
}

/// Verifies `φ` and wraps it; every violated law is reported.
pub fn check_map(phi: &Matrix, h: &Arc<WeakBialgebra>, k: &Arc<WeakBialgebra>) -> Result<WeakBialgebraMap> {
    map_verdict(phi, h, k)?.into_result("weak bialgebra map")?;
    Ok(WeakBialgebraMap {
        source: h.clone(),
        target: k.clone(),
        matrix: phi.clone(),
    })
}

/// `𝕄^φ(M, ρ) = (M, (id⊗φ)ρ)`.
pub fn induced_functor(phi: &WeakBialgebraMap, m: &Comodule) -> Result<Comodule> {
    if !same_bialgebra(m.bialgebra(), &phi.source) {
        return Err(Error::Malformed("comodule is not over the source of φ".into()));
    }
    let field = phi.source.field();
    let lifted = Matrix::identity(field, m.dim()).kron(&phi.matrix);
    Comodule::new(phi.target.clone(), lifted.mul(m.coaction()))
        .map_err(|e| Error::Internal(format!("induced comodule failed verification: {e}")))
}

/// `ι_{M,N}: 𝕄^φ(M⊛_H N) → 𝕄^φ(M)⊛_K 𝕄^φ(N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comonoidal {
    pub iota: ComoduleMap,
    pub surjective: bool,
    pub bijective: bool,
}

pub fn comonoidal_structure(phi: &WeakBialgebraMap, a: &Comodule, b: &Comodule) -> Result<Comonoidal> {
    let src = induced_functor(phi, &tensor_over_source(a, b)?.comodule)?;
    let fa = induced_functor(phi, a)?;
    let fb = induced_functor(phi, b)?;
    iota_between(a, b, src, &fa, &fb)
}

/// The map induced by `id_{M⊗N}` from `M⊗_{H_s}N` (carrying coaction `src`)
/// to `fa ⊛_K fb`.
fn iota_between(a: &Comodule, b: &Comodule, src: Comodule, fa: &Comodule, fb: &Comodule) -> Result<Comonoidal> {
    let over_h = tensor_over_source(a, b)?;
    let over_k = tensor_over_source(fa, fb)?;
    for r in over_h.relators.basis_vectors() {
        if !over_k.relators.contains(&r) {
            return Err(Error::violations(
                "ι",
                vec![Violation::new(
                    "id_{M⊗N} descends to M⊗_{H_s}N → M⊗_{K_s}N",
                    vec![fmt_vec(&r)],
                    "relator over H_s",
                    "not a relator over K_s",
                )],
            ));
        }
    }
    let mat = over_k.quotient.projection.mul(&over_h.quotient.section);
    let rank = mat.rank();
    let surjective = rank == mat.rows();
    let bijective = surjective && rank == mat.cols();
    let iota = ComoduleMap::new(src, over_k.comodule, mat)?;
    Ok(Comonoidal {
        iota,
        surjective,
        bijective,
    })
}

/// One comodule over the source together with the coaction the functor assigns to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    pub name: String,
    pub comodule: Comodule,
    /// Claimed coaction over the target on the same underlying space.
    pub coaction: Matrix,
}

/// A finite table of a candidate functor `𝕄^H → 𝕄^K` that keeps underlying
/// spaces fixed, plus its unit morphism `ω̄: H_s → K_s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctorData {
    pub source: Arc<WeakBialgebra>,
    pub target: Arc<WeakBialgebra>,
    pub assignments: Vec<Assignment>,
    /// `r_K × r_H` matrix in the echelon bases of `H_s` and `K_s`.
    pub unit_map: Option<Matrix>,
}

impl FunctorData {
    /// The data of `𝕄^φ` on the given comodules, with `ω̄ = φ|_{H_s}`.
    pub fn induced_by(phi: &WeakBialgebraMap, comodules: &[(String, Comodule)]) -> Result<Self> {
        let assignments = comodules
            .iter()
            .map(|(name, c)| {
                Ok(Assignment {
                    name: name.clone(),
                    comodule: c.clone(),
                    coaction: induced_functor(phi, c)?.coaction().clone(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FunctorData {
            source: phi.source.clone(),
            target: phi.target.clone(),
            assignments,
            unit_map: Some(phi.restriction_to_source()?),
        })
    }

    /// The standard test table: regular, unit and regular ⊛ unit.
    pub fn standard_comodules(h: &Arc<WeakBialgebra>) -> Result<Vec<(String, Comodule)>> {
        let reg = regular_comodule(h);
        let unit = unit_comodule(h)?;
        let ru = tensor_over_source(&reg, &unit)?.comodule;
        Ok(vec![("regular".into(), reg), ("unit".into(), unit), ("regular * unit".into(), ru)])
    }

    pub fn regular(&self) -> Option<&Assignment> {
        let reg = regular_comodule(&self.source);
        self.assignments.iter().find(|a| a.comodule == reg)
    }
}

/// A named verification step and what it found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layer {
    pub name: &'static str,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reconstruction {
    pub phi: Matrix,
    pub layers: Vec<Layer>,
    /// Present when every layer passed and `φ` verifies as a weak bialgebra map.
    pub map: Option<WeakBialgebraMap>,
}

impl Reconstruction {
    pub fn is_pass(&self) -> bool {
        self.layers.iter().all(|l| l.verdict.is_pass())
    }

    pub fn first_failure(&self) -> Option<(&'static str, &Violation)> {
        self.layers.iter().find_map(|l| l.verdict.violations.first().map(|v| (l.name, v)))
    }
}

pub const LAYER_COALGEBRA_MAP: &str = "coalgebra map";
pub const LAYER_INDUCED: &str = "F = M^φ";
pub const LAYER_COMODULE_MAP: &str = "φ is a comodule map (C, ρ^F) → (D, Δ)";
pub const LAYER_MULTIPLICATIVE: &str = "multiplicative";
pub const LAYER_UNIT: &str = "unit";
pub const LAYER_OMEGA: &str = "ω̄ = φ|_(H_s)";
pub const LAYER_BIJECTIVE: &str = "φ_s bijective";
pub const LAYER_COMONOIDAL: &str = "comonoidal";

/// Checks the claimed coactions and computes `φ = (ε⊗id)∘ρ^F` on the regular comodule.
fn reconstruct_phi(fd: &FunctorData) -> Result<(Matrix, Vec<Comodule>)> {
    if fd.source.field() != fd.target.field() {
        return Err(Error::Malformed("functor data between different fields".into()));
    }
    let mut claimed = Vec::with_capacity(fd.assignments.len());
    for a in &fd.assignments {
        if !same_bialgebra(a.comodule.bialgebra(), &fd.source) {
            return Err(Error::Malformed(format!("assignment {:?} is not over the source", a.name)));
        }
        if a.coaction.cols() != a.comodule.dim() {
            return Err(Error::Malformed(format!("assignment {:?} changes the underlying space", a.name)));
        }
        let c = Comodule::new(fd.target.clone(), a.coaction.clone()).map_err(|e| match e {
            Error::Violations { violations, .. } => {
                Error::violations(format!("claimed coaction on {:?} is not a comodule", a.name), violations)
            }
            other => other,
        })?;
        claimed.push(c);
    }
    let reg = fd
        .regular()
        .ok_or_else(|| Error::Precondition("functor data has no assignment for the regular comodule".into()))?;
    let (n_h, n_k) = (fd.source.dim(), fd.target.dim());
    let counit = fd.source.coalgebra().counit();
    let field = fd.source.field();
    let phi = Matrix::from_fn(field, n_k, n_h, |k, j| {
        let mut acc = field.zero();
        for (i, e) in counit.iter().enumerate() {
            let r = &reg.coaction[(i * n_k + k, j)];
            if !e.is_zero() && !r.is_zero() {
                acc = &acc + &(e * r);
            }
        }
        acc
    });
    Ok((phi, claimed))
}

fn coalgebra_layers(fd: &FunctorData, phi: &Matrix) -> Vec<Layer> {
    let (h, k) = (&fd.source, &fd.target);
    let mut layers = vec![Layer {
        name: LAYER_COALGEBRA_MAP,
        verdict: coalgebra_map_verdict(phi, h, k),
    }];

    let mut v = Verdict::pass();
    for a in &fd.assignments {
        let expected = Matrix::identity(h.field(), a.comodule.dim()).kron(phi).mul(a.comodule.coaction());
        for i in 0..a.comodule.dim() {
            let w = [a.name.clone(), format!("e{i}")];
            let w: Vec<&str> = w.iter().map(String::as_str).collect();
            expect_eq(&mut v, "ρ^F = (id⊗φ)∘ρ", &w, &a.coaction.column(i), &expected.column(i));
        }
    }
    layers.push(Layer {
        name: LAYER_INDUCED,
        verdict: v,
    });

    let mut v = Verdict::pass();
    let reg = fd.regular().expect("checked by reconstruct_phi");
    let lhs = k.coalgebra().comult_matrix().mul(phi);
    let rhs = phi.kron(&Matrix::identity(k.field(), k.dim())).mul(&reg.coaction);
    for i in 0..h.dim() {
        expect_eq(&mut v, "Δ_D∘φ = (φ⊗id)∘ρ^F_C", &[&h.labels()[i]], &lhs.column(i), &rhs.column(i));
    }
    layers.push(Layer {
        name: LAYER_COMODULE_MAP,
        verdict: v,
    });
    layers
}

/// Recovers the coalgebra map a functor comes from and checks that it does.
pub fn reconstruct_coalgebra_map(fd: &FunctorData) -> Result<Reconstruction> {
    let (phi, _) = reconstruct_phi(fd)?;
    let layers = coalgebra_layers(fd, &phi);
    Ok(Reconstruction { phi, layers, map: None })
}

/// Recovers the weak bialgebra map a comonoidal functor comes from.
///
/// Layers run in a fixed order and all of them are evaluated; pairs of
/// assignments whose tensor product is itself assigned are used for the
/// comonoidal check.
pub fn reconstruct_weak_bialgebra_map(fd: &FunctorData) -> Result<Reconstruction> {
    let unit_map = fd
        .unit_map
        .as_ref()
        .ok_or_else(|| Error::Precondition("functor data has no unit map ω̄".into()))?;
    let (phi, claimed) = reconstruct_phi(fd)?;
    let (h, k) = (&fd.source, &fd.target);
    let mut layers = coalgebra_layers(fd, &phi);

    let alg = algebra_map_verdict(&phi, h, k);
    let (unit_v, mult_v): (Vec<Violation>, Vec<Violation>) = alg.violations.into_iter().partition(|v| v.law == "φ(1) = 1");
    layers.push(Layer {
        name: LAYER_MULTIPLICATIVE,
        verdict: Verdict { violations: mult_v },
    });
    layers.push(Layer {
        name: LAYER_UNIT,
        verdict: Verdict { violations: unit_v },
    });

    let mut v = Verdict::pass();
    let (r_h, r_k) = (h.h_s().dim(), k.h_s().dim());
    let restricted = restrict(&phi, h.h_s(), k.h_s());
    if unit_map.shape() != (r_k, r_h) {
        v.push(Violation::new(
            "ω̄ has the shape of a map H_s → K_s",
            vec![],
            format!("{}×{}", unit_map.rows(), unit_map.cols()),
            format!("{r_k}×{r_h}"),
        ));
    } else {
        match &restricted {
            Ok(m) => {
                for a in 0..r_h {
                    expect_eq(&mut v, "ω̄ = φ|_(H_s)", &[&format!("y{a}")], &unit_map.column(a), &m.column(a));
                }
            }
            Err(e) => v.push(Violation::new("φ(H_s) ⊆ K_s", vec![], e.to_string(), "")),
        }
    }
    layers.push(Layer {
        name: LAYER_OMEGA,
        verdict: v,
    });

    let mut v = Verdict::pass();
    match &restricted {
        Ok(m) if m.rank() == r_h && r_h == r_k => {}
        Ok(m) => v.push(Violation::new(
            "φ_s: H_s → K_s bijective",
            vec![],
            format!("rank {}", m.rank()),
            format!("dim H_s = {r_h}, dim K_s = {r_k}"),
        )),
        Err(e) => v.push(Violation::new("φ_s: H_s → K_s bijective", vec![], e.to_string(), "")),
    }
    layers.push(Layer {
        name: LAYER_BIJECTIVE,
        verdict: v,
    });

    let mut v = Verdict::pass();
    for (ia, a) in fd.assignments.iter().enumerate() {
        for (ib, b) in fd.assignments.iter().enumerate() {
            let Ok(t) = tensor_over_source(&a.comodule, &b.comodule) else { continue };
            let Some(it) = fd.assignments.iter().position(|x| x.comodule == t.comodule) else { continue };
            let witness = vec![a.name.clone(), b.name.clone()];
            match iota_between(&a.comodule, &b.comodule, claimed[it].clone(), &claimed[ia], &claimed[ib]) {
                Ok(c) if c.bijective => {}
                Ok(_) => v.push(Violation::new("ι_(M,N) is bijective", witness, "not bijective", "bijective")),
                Err(e) => v.push(Violation::new("ι_(M,N) is a comodule map", witness, e.to_string(), "")),
            }
        }
    }
    layers.push(Layer {
        name: LAYER_COMONOIDAL,
        verdict: v,
    });

    let mut out = Reconstruction { phi, layers, map: None };
    if out.is_pass() {
        out.map = Some(check_map(&out.phi, h, k)?);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsomorphismVerdict {
    pub rank: usize,
    pub inverse: Option<WeakBialgebraMap>,
}

impl IsomorphismVerdict {
    pub fn is_isomorphism(&self) -> bool {
        self.inverse.is_some()
    }
}

/// Invertibility of `φ`; the inverse is verified as a weak bialgebra map.
pub fn check_isomorphism(phi: &WeakBialgebraMap) -> Result<IsomorphismVerdict> {
    let rank = phi.matrix.rank();
    let inverse = match phi.matrix.inverse() {
        None => None,
        Some(inv) => Some(
            check_map(&inv, &phi.target, &phi.source).map_err(|e| Error::Internal(format!("inverse of a bijective map: {e}")))?,
        ),
    };
    Ok(IsomorphismVerdict { rank, inverse })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{c2, enumerate_automorphisms, gpd2};
    use crate::scalar::FieldSpec;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn swap() -> Matrix {
        Matrix::from_ints(Q, &[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]])
    }

    #[test]
    fn swap_round_trip() {
        let h = Arc::new(gpd2(Q));
        let phi = check_map(&swap(), &h, &h).unwrap();
        let fd = FunctorData::induced_by(&phi, &FunctorData::standard_comodules(&h).unwrap()).unwrap();
        let r = reconstruct_weak_bialgebra_map(&fd).unwrap();
        assert!(r.is_pass(), "{:?}", r.first_failure());
        assert_eq!(r.phi, swap());
        assert_eq!(r.layers.len(), 8);
        assert!(check_isomorphism(&phi).unwrap().is_isomorphism());
    }

    #[test]
    fn distinct_maps_give_distinct_coactions() {
        let h = Arc::new(gpd2(Q));
        let autos = enumerate_automorphisms(&h, 8).unwrap();
        let reg = regular_comodule(&h);
        let coactions: Vec<Matrix> = autos.iter().map(|a| induced_functor(a, &reg).unwrap().coaction().clone()).collect();
        assert_ne!(coactions[0], coactions[1]);
    }

    #[test]
    fn killing_arrows_is_not_a_coalgebra_map() {
        let h = Arc::new(gpd2(Q));
        let m = Matrix::from_ints(Q, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]]);
        let err = check_map(&m, &h, &h).unwrap_err();
        assert!(err.violation_list().iter().any(|v| v.law.contains("ε")), "{err}");
    }

    #[test]
    fn trivial_character_of_c2_reconstructs() {
        // ρ^F(g) = g⊗1 is the functor of the bialgebra map g ↦ 1
        let h = Arc::new(c2(Q));
        let phi = WeakBialgebraMap::identity(&h);
        let mut fd = FunctorData::induced_by(&phi, &[("regular".to_string(), regular_comodule(&h))]).unwrap();
        fd.assignments[0].coaction = Matrix::from_ints(Q, &[&[1, 0], &[0, 0], &[0, 1], &[0, 0]]);
        let r = reconstruct_weak_bialgebra_map(&fd).unwrap();
        assert_eq!(r.phi, Matrix::from_ints(Q, &[&[1, 1], &[0, 0]]));
        assert!(r.is_pass());
    }

    #[test]
    fn corrupted_coaction_fails_multiplicativity() {
        // g ↦ f is a coalgebra map of GPD2 but g·f = e1 while f·f = 0
        let h = Arc::new(gpd2(Q));
        let bad = Matrix::from_ints(Q, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 1], &[0, 0, 0, 0]]);
        let phi = WeakBialgebraMap::identity(&h);
        let mut fd = FunctorData::induced_by(&phi, &[("regular".to_string(), regular_comodule(&h))]).unwrap();
        fd.assignments[0].coaction = Matrix::identity(Q, 4).kron(&bad).mul(regular_comodule(&h).coaction());
        let r = reconstruct_weak_bialgebra_map(&fd).unwrap();
        assert_eq!(r.phi, bad);
        let (layer, _) = r.first_failure().unwrap();
        assert_eq!(layer, LAYER_MULTIPLICATIVE);
        assert!(r.map.is_none());
        assert!(reconstruct_coalgebra_map(&fd).unwrap().is_pass());
    }

    #[test]
    fn missing_pieces_are_preconditions() {
        let h = Arc::new(c2(Q));
        let phi = WeakBialgebraMap::identity(&h);
        let mut fd = FunctorData::induced_by(&phi, &FunctorData::standard_comodules(&h).unwrap()).unwrap();
        fd.unit_map = None;
        assert!(matches!(reconstruct_weak_bialgebra_map(&fd), Err(Error::Precondition(_))));
        let fd = FunctorData::induced_by(&phi, &[("unit".to_string(), unit_comodule(&h).unwrap())]).unwrap();
        assert!(matches!(reconstruct_coalgebra_map(&fd), Err(Error::Precondition(_))));
    }

    #[test]
    fn wrong_unit_map_fails_its_layer() {
        let h = Arc::new(gpd2(Q));
        let phi = WeakBialgebraMap::identity(&h);
        let mut fd = FunctorData::induced_by(&phi, &FunctorData::standard_comodules(&h).unwrap()).unwrap();
        fd.unit_map = Some(Matrix::from_ints(Q, &[&[0, 1], &[1, 0]]));
        let r = reconstruct_weak_bialgebra_map(&fd).unwrap();
        assert_eq!(r.first_failure().unwrap().0, LAYER_OMEGA);
    }

    #[test]
    fn comonoidal_iota_is_bijective_for_automorphisms() {
        let h = Arc::new(gpd2(Q));
        let phi = check_map(&swap(), &h, &h).unwrap();
        let reg = regular_comodule(&h);
        let unit = unit_comodule(&h).unwrap();
        let c = comonoidal_structure(&phi, &reg, &unit).unwrap();
        assert!(c.bijective);
    }
}
