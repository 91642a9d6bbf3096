//! The `wba/1` text format for weak bialgebras and the `wba-functor/1`
//! format for functor data.
//!
//! Documents are JSON with dense nested arrays of scalar strings. The
//! emitter is canonical: fixed key order, two-space indentation, innermost
//! arrays on one line.

use std::fmt::Write as _;
use std::sync::Arc;

use serde::Deserialize;

use crate::comodule::{regular_comodule, tensor_over_source, unit_comodule, Comodule};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::scalar::{FieldSpec, Scalar};
use crate::structure::{FiniteAlgebra, FiniteCoalgebra};
use crate::tannaka::{Assignment, FunctorData};
use crate::weak::{build_weak_bialgebra, WeakBialgebra};

pub const FORMAT_VERSION: &str = "wba/1";
pub const FUNCTOR_FORMAT_VERSION: &str = "wba-functor/1";

/// A parsed but not yet verified document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WbaDocument {
    pub field: FieldSpec,
    pub basis: Vec<String>,
    pub algebra: FiniteAlgebra,
    pub coalgebra: FiniteCoalgebra,
    pub antipode: Option<Matrix>,
    pub comodules: Vec<NamedCoaction>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedCoaction {
    pub name: String,
    pub coaction: Matrix,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    format_version: String,
    field: String,
    dim: usize,
    basis: Vec<String>,
    mult: Vec<Vec<Vec<String>>>,
    unit: Vec<String>,
    comult: Vec<Vec<Vec<String>>>,
    counit: Vec<String>,
    #[serde(default)]
    antipode: Option<Vec<Vec<String>>>,
    #[serde(default)]
    comodules: Vec<RawComodule>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComodule {
    name: String,
    dim: usize,
    coaction: Vec<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFunctor {
    format_version: String,
    assignments: Vec<RawAssignment>,
    #[serde(default)]
    unit_map: Option<Vec<Vec<String>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAssignment {
    comodule: String,
    coaction: Vec<Vec<String>>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Malformed(format!("{e}"))
}

fn scalars(field: FieldSpec, xs: &[String], what: &str) -> Result<Vector> {
    xs.iter()
        .map(|s| field.parse(s).map_err(|e| Error::Malformed(format!("{what}: {e}"))))
        .collect()
}

fn matrix(field: FieldSpec, rows: &[Vec<String>], shape: (usize, usize), what: &str) -> Result<Matrix> {
    if rows.len() != shape.0 || rows.iter().any(|r| r.len() != shape.1) {
        return Err(Error::Malformed(format!("{what} must be {}×{}", shape.0, shape.1)));
    }
    let rows = rows.iter().map(|r| scalars(field, r, what)).collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, rows)
}

fn cube(field: FieldSpec, t: &[Vec<Vec<String>>], n: usize, what: &str) -> Result<Vector> {
    if t.len() != n || t.iter().any(|p| p.len() != n || p.iter().any(|r| r.len() != n)) {
        return Err(Error::Malformed(format!("{what} must be {n}×{n}×{n}")));
    }
    let mut out = Vec::with_capacity(n * n * n);
    for plane in t {
        for row in plane {
            out.extend(scalars(field, row, what)?);
        }
    }
    Ok(out)
}

pub fn parse_document(text: &str) -> Result<WbaDocument> {
    let raw: RawDocument = serde_json::from_str(text).map_err(json_error)?;
    if raw.format_version != FORMAT_VERSION {
        return Err(Error::Malformed(format!(
            "format_version {:?}, expected {FORMAT_VERSION:?}",
            raw.format_version
        )));
    }
    let field: FieldSpec = raw.field.parse()?;
    let n = raw.dim;
    if raw.basis.len() != n {
        return Err(Error::Malformed(format!("basis has {} labels for dim {n}", raw.basis.len())));
    }
    let mut seen = std::collections::BTreeSet::new();
    if let Some(dup) = raw.basis.iter().find(|l| !seen.insert(l.as_str())) {
        return Err(Error::Malformed(format!("duplicate basis label {dup:?}")));
    }
    let vec_n = |xs: &[String], what: &str| -> Result<Vector> {
        if xs.len() != n {
            return Err(Error::Malformed(format!("{what} must have length {n}")));
        }
        scalars(field, xs, what)
    };
    let algebra = FiniteAlgebra::new(field, raw.basis.clone(), cube(field, &raw.mult, n, "mult")?, vec_n(&raw.unit, "unit")?)?;
    let coalgebra = FiniteCoalgebra::new(field, raw.basis.clone(), cube(field, &raw.comult, n, "comult")?, vec_n(&raw.counit, "counit")?)?;
    let antipode = raw.antipode.as_ref().map(|a| matrix(field, a, (n, n), "antipode")).transpose()?;
    let comodules = raw
        .comodules
        .iter()
        .map(|c| {
            Ok(NamedCoaction {
                name: c.name.clone(),
                coaction: matrix(field, &c.coaction, (c.dim * n, c.dim), &format!("coaction of {:?}", c.name))?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WbaDocument {
        field,
        basis: raw.basis,
        algebra,
        coalgebra,
        antipode,
        comodules,
    })
}

impl WbaDocument {
    pub fn from_bialgebra(h: &WeakBialgebra) -> Self {
        WbaDocument {
            field: h.field(),
            basis: h.labels().to_vec(),
            algebra: h.algebra().clone(),
            coalgebra: h.coalgebra().clone(),
            antipode: h.antipode().cloned(),
            comodules: Vec::new(),
        }
    }

    /// Verifies the structure, attaching the antipode when one is given.
    pub fn build(&self) -> Result<WeakBialgebra> {
        let h = build_weak_bialgebra(self.algebra.clone(), self.coalgebra.clone())?;
        match &self.antipode {
            Some(s) => h.with_antipode(s.clone()),
            None => Ok(h),
        }
    }

    /// The named comodules of the document, verified over `h`.
    pub fn comodules_over(&self, h: &Arc<WeakBialgebra>) -> Result<Vec<(String, Comodule)>> {
        self.comodules
            .iter()
            .map(|c| Ok((c.name.clone(), Comodule::new(h.clone(), c.coaction.clone())?)))
            .collect()
    }

    pub fn emit(&self) -> String {
        let n = self.basis.len();
        let mut out = String::from("{\n");
        let q = |s: &str| serde_json::to_string(s).expect("string serialization");
        let row = |xs: &[Scalar]| format!("[{}]", xs.iter().map(|x| q(&x.to_string())).collect::<Vec<_>>().join(", "));
        let rows = |out: &mut String, m: &[Vector], indent: &str| {
            out.push_str("[\n");
            for (i, r) in m.iter().enumerate() {
                let sep = if i + 1 < m.len() { "," } else { "" };
                let _ = writeln!(out, "{indent}  {}{sep}", row(r));
            }
            let _ = write!(out, "{indent}]");
        };
        let cube = |out: &mut String, t: &[Scalar]| {
            out.push_str("[\n");
            for i in 0..n {
                let plane: Vec<Vector> = (0..n).map(|j| t[(i * n + j) * n..(i * n + j + 1) * n].to_vec()).collect();
                out.push_str("    ");
                rows(out, &plane, "    ");
                out.push_str(if i + 1 < n { ",\n" } else { "\n" });
            }
            out.push_str("  ]");
        };
        let _ = writeln!(out, "  \"format_version\": {},", q(FORMAT_VERSION));
        let _ = writeln!(out, "  \"field\": {},", q(&self.field.to_string()));
        let _ = writeln!(out, "  \"dim\": {n},");
        let _ = writeln!(out, "  \"basis\": [{}],", self.basis.iter().map(|l| q(l)).collect::<Vec<_>>().join(", "));
        out.push_str("  \"mult\": ");
        cube(&mut out, self.algebra.mult_tensor());
        out.push_str(",\n");
        let _ = writeln!(out, "  \"unit\": {},", row(self.algebra.unit()));
        out.push_str("  \"comult\": ");
        cube(&mut out, self.coalgebra.comult_tensor());
        out.push_str(",\n");
        let _ = write!(out, "  \"counit\": {}", row(self.coalgebra.counit()));
        if let Some(s) = &self.antipode {
            out.push_str(",\n  \"antipode\": ");
            rows(&mut out, &s.to_rows(), "  ");
        }
        if !self.comodules.is_empty() {
            out.push_str(",\n  \"comodules\": [\n");
            for (i, c) in self.comodules.iter().enumerate() {
                let _ = writeln!(out, "    {{");
                let _ = writeln!(out, "      \"name\": {},", q(&c.name));
                let _ = writeln!(out, "      \"dim\": {},", c.coaction.cols());
                out.push_str("      \"coaction\": ");
                rows(&mut out, &c.coaction.to_rows(), "      ");
                out.push_str(if i + 1 < self.comodules.len() { "\n    },\n" } else { "\n    }\n" });
            }
            out.push_str("  ]");
        }
        out.push_str("\n}\n");
        out
    }
}

pub fn emit_bialgebra(h: &WeakBialgebra) -> String {
    WbaDocument::from_bialgebra(h).emit()
}

/// Resolves a comodule expression: `regular`, `unit`, a comodule named in
/// the source document, or `A * B` (left associative) for `A ⊛ B`.
pub fn resolve_comodule(h: &Arc<WeakBialgebra>, named: &[(String, Comodule)], expr: &str) -> Result<Comodule> {
    let parts: Vec<&str> = expr.split('*').map(str::trim).collect();
    let atom = |name: &str| -> Result<Comodule> {
        if let Some((_, c)) = named.iter().find(|(n, _)| n == name) {
            return Ok(c.clone());
        }
        match name {
            "regular" => Ok(regular_comodule(h)),
            "unit" => unit_comodule(h),
            _ => Err(Error::Malformed(format!("unknown comodule {name:?}"))),
        }
    };
    let mut acc = atom(parts[0])?;
    for p in &parts[1..] {
        acc = tensor_over_source(&acc, &atom(p)?)?.comodule;
    }
    Ok(acc)
}

/// Parses functor data between two verified weak bialgebras.
pub fn parse_functor(
    text: &str,
    source: &Arc<WeakBialgebra>,
    target: &Arc<WeakBialgebra>,
    named: &[(String, Comodule)],
) -> Result<FunctorData> {
    let raw: RawFunctor = serde_json::from_str(text).map_err(json_error)?;
    if raw.format_version != FUNCTOR_FORMAT_VERSION {
        return Err(Error::Malformed(format!(
            "format_version {:?}, expected {FUNCTOR_FORMAT_VERSION:?}",
            raw.format_version
        )));
    }
    let field = source.field();
    let assignments = raw
        .assignments
        .iter()
        .map(|a| {
            let comodule = resolve_comodule(source, named, &a.comodule)?;
            let m = comodule.dim();
            let coaction = matrix(field, &a.coaction, (m * target.dim(), m), &format!("coaction for {:?}", a.comodule))?;
            Ok(Assignment {
                name: a.comodule.clone(),
                comodule,
                coaction,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let unit_map = raw
        .unit_map
        .as_ref()
        .map(|u| matrix(field, u, (target.h_s().dim(), source.h_s().dim()), "unit_map"))
        .transpose()?;
    Ok(FunctorData {
        source: source.clone(),
        target: target.clone(),
        assignments,
        unit_map,
    })
}

pub fn emit_functor(fd: &FunctorData) -> String {
    let q = |s: &str| serde_json::to_string(s).expect("string serialization");
    let row = |xs: &[Scalar]| format!("[{}]", xs.iter().map(|x| q(&x.to_string())).collect::<Vec<_>>().join(", "));
    let rows = |out: &mut String, m: &Matrix, indent: &str| {
        out.push_str("[\n");
        let rs = m.to_rows();
        for (i, r) in rs.iter().enumerate() {
            let sep = if i + 1 < rs.len() { "," } else { "" };
            let _ = writeln!(out, "{indent}  {}{sep}", row(r));
        }
        let _ = write!(out, "{indent}]");
    };
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"format_version\": {},", q(FUNCTOR_FORMAT_VERSION));
    out.push_str("  \"assignments\": [\n");
    for (i, a) in fd.assignments.iter().enumerate() {
        out.push_str("    {\n");
        let _ = writeln!(out, "      \"comodule\": {},", q(&a.name));
        out.push_str("      \"coaction\": ");
        rows(&mut out, &a.coaction, "      ");
        out.push_str(if i + 1 < fd.assignments.len() { "\n    },\n" } else { "\n    }\n" });
    }
    out.push_str("  ]");
    if let Some(u) = &fd.unit_map {
        out.push_str(",\n  \"unit_map\": ");
        rows(&mut out, u, "  ");
    }
    out.push_str("\n}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{gpd2, preset, PRESETS};
    use crate::tannaka::{check_map, WeakBialgebraMap};

    #[test]
    fn presets_round_trip() {
        for name in PRESETS {
            let h = preset(name, None).unwrap();
            let text = emit_bialgebra(&h);
            let doc = parse_document(&text).unwrap();
            assert_eq!(doc.emit(), text, "{name}");
            assert_eq!(doc.build().unwrap(), h);
        }
    }

    #[test]
    fn emission_is_canonical() {
        let text = emit_bialgebra(&preset("k", None).unwrap());
        assert_eq!(
            text,
            "{\n  \"format_version\": \"wba/1\",\n  \"field\": \"Q\",\n  \"dim\": 1,\n  \"basis\": [\"1\"],\n  \"mult\": [\n    [\n      [\"1\"]\n    ]\n  ],\n  \"unit\": [\"1\"],\n  \"comult\": [\n    [\n      [\"1\"]\n    ]\n  ],\n  \"counit\": [\"1\"],\n  \"antipode\": [\n    [\"1\"]\n  ]\n}\n"
        );
        // reformatted input canonicalizes to the same text
        let squashed: serde_json::Value = serde_json::from_str(&text).unwrap();
        let again = parse_document(&squashed.to_string()).unwrap().emit();
        assert_eq!(again, text);
    }

    #[test]
    fn malformed_inputs() {
        let text = emit_bialgebra(&preset("c2", None).unwrap());
        assert!(matches!(parse_document(&text[..text.len() / 2]), Err(Error::Malformed(_))));
        assert!(parse_document(&text.replace("\"dim\": 2", "\"dim\": 3")).is_err());
        assert!(parse_document(&text.replace("wba/1", "wba/2")).is_err());
        let bad_scalar = text.replacen("\"counit\": [\"1\"", "\"counit\": [\"x\"", 1);
        assert!(matches!(parse_document(&bad_scalar), Err(Error::Malformed(_))));
    }

    #[test]
    fn functor_round_trip() {
        let h = Arc::new(gpd2(FieldSpec::Rationals));
        let swap = Matrix::from_ints(FieldSpec::Rationals, &[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]);
        let phi: WeakBialgebraMap = check_map(&swap, &h, &h).unwrap();
        let fd = FunctorData::induced_by(&phi, &FunctorData::standard_comodules(&h).unwrap()).unwrap();
        let text = emit_functor(&fd);
        let back = parse_functor(&text, &h, &h, &[]).unwrap();
        assert_eq!(back, fd);
        assert_eq!(emit_functor(&back), text);
    }
}
