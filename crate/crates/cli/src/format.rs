//! Canonical JSON document for a Hopf algebra given by structure
//! constants. Every scalar is a string — `"−3/4"`-style lowest-terms
//! rationals or `"5"`-style residues — so documents are bit-exact
//! under round-trip.

use serde::{Deserialize, Serialize};

use hopfint_core::hopf::HopfAlgebra;
use hopfint_core::scalar::{Field, FieldScalar};
use hopfint_core::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
}

impl FieldDescriptor {
    pub fn to_field(&self) -> Result<Field> {
        let field = match (self.kind.as_str(), self.p) {
            ("Q", None) => Field::Q,
            ("Q", Some(_)) => {
                return Err(Error::invalid("field of type Q must not carry a modulus"))
            }
            ("Fp", Some(p)) => Field::Fp(p),
            ("Fp", None) => return Err(Error::invalid("field of type Fp requires p")),
            (other, _) => {
                return Err(Error::invalid(format!("unknown field type {other:?}")))
            }
        };
        field.validate()?;
        Ok(field)
    }

    pub fn from_field(field: Field) -> FieldDescriptor {
        match field {
            Field::Q => FieldDescriptor { kind: "Q".to_string(), p: None },
            Field::Fp(p) => FieldDescriptor { kind: "Fp".to_string(), p: Some(p) },
        }
    }
}

/// Structure constants with string-encoded scalars. `mult[i][j]` is
/// the coordinate vector of `e_i e_j`; `comult[i]` is the flattened
/// `dim x dim` coefficient table of the coproduct of `e_i`;
/// `antipode` is stored by rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfFileDocument {
    pub field: FieldDescriptor,
    pub dim: usize,
    pub basis: Vec<String>,
    pub mult: Vec<Vec<Vec<String>>>,
    pub unit: Vec<String>,
    pub comult: Vec<Vec<String>>,
    pub counit: Vec<String>,
    pub antipode: Vec<Vec<String>>,
}

impl HopfFileDocument {
    pub fn from_algebra(h: &HopfAlgebra) -> HopfFileDocument {
        let n = h.dim();
        let enc = |s: &FieldScalar| s.to_canonical_string();
        HopfFileDocument {
            field: FieldDescriptor::from_field(h.field()),
            dim: n,
            basis: h.basis_labels().to_vec(),
            mult: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| (0..n).map(|k| enc(h.mult_sc(i, j, k))).collect())
                        .collect()
                })
                .collect(),
            unit: h.unit_coords().iter().map(enc).collect(),
            comult: (0..n)
                .map(|i| (0..n * n).map(|jk| enc(h.comult_sc(i, jk / n, jk % n))).collect())
                .collect(),
            counit: h.counit_coords().iter().map(enc).collect(),
            antipode: (0..n)
                .map(|i| (0..n).map(|j| enc(h.antipode().get(i, j))).collect())
                .collect(),
        }
    }

    /// Parses scalars and performs shape validation; the axiom gate is
    /// the caller's next step.
    pub fn to_algebra(&self) -> Result<HopfAlgebra> {
        let field = self.field.to_field()?;
        let n = self.dim;
        let parse_vec = |v: &[String], what: &str, len: usize| -> Result<Vec<FieldScalar>> {
            if v.len() != len {
                return Err(Error::invalid(format!(
                    "{what} has length {}, expected {len}",
                    v.len()
                )));
            }
            v.iter().map(|s| field.parse_scalar(s)).collect()
        };
        if self.mult.len() != n {
            return Err(Error::invalid("mult tensor has wrong outer length"));
        }
        let mut mult = Vec::with_capacity(n);
        for (i, row) in self.mult.iter().enumerate() {
            if row.len() != n {
                return Err(Error::invalid(format!("mult[{i}] has wrong length")));
            }
            let mut out_row = Vec::with_capacity(n);
            for (j, cell) in row.iter().enumerate() {
                out_row.push(parse_vec(cell, &format!("mult[{i}][{j}]"), n)?);
            }
            mult.push(out_row);
        }
        let unit = parse_vec(&self.unit, "unit", n)?;
        if self.comult.len() != n {
            return Err(Error::invalid("comult tensor has wrong outer length"));
        }
        let mut comult = Vec::with_capacity(n);
        for (i, row) in self.comult.iter().enumerate() {
            comult.push(parse_vec(row, &format!("comult[{i}]"), n * n)?);
        }
        let counit = parse_vec(&self.counit, "counit", n)?;
        if self.antipode.len() != n {
            return Err(Error::invalid("antipode matrix has wrong row count"));
        }
        let mut antipode_entries = Vec::with_capacity(n * n);
        for (i, row) in self.antipode.iter().enumerate() {
            antipode_entries.extend(parse_vec(row, &format!("antipode[{i}]"), n)?);
        }
        let antipode = hopfint_core::matrix::Matrix::new(field, n, n, antipode_entries)?;
        HopfAlgebra::new(field, n, self.basis.clone(), mult, unit, comult, counit, antipode)
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_json_str(s: &str) -> Result<HopfFileDocument> {
        serde_json::from_str(s).map_err(|e| Error::invalid(format!("invalid document: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopfint_core::catalog::catalog;

    #[test]
    fn round_trip_is_bit_exact_across_catalog() {
        for entry in catalog() {
            let doc = HopfFileDocument::from_algebra(&entry.algebra);
            let json = doc.to_json_string();
            let parsed = HopfFileDocument::from_json_str(&json).unwrap();
            assert_eq!(parsed, doc, "{}", entry.name);
            assert_eq!(parsed.to_json_string(), json, "{}", entry.name);
            // And through the algebra itself.
            let algebra = parsed.to_algebra().unwrap();
            assert_eq!(HopfFileDocument::from_algebra(&algebra), doc, "{}", entry.name);
        }
    }

    #[test]
    fn parsed_catalog_algebras_pass_axioms() {
        for entry in catalog() {
            let doc = HopfFileDocument::from_algebra(&entry.algebra);
            let algebra = doc.to_algebra().unwrap();
            assert!(algebra.verify().all_ok(), "{}", entry.name);
        }
    }

    #[test]
    fn bad_field_descriptors_are_rejected() {
        assert!(FieldDescriptor { kind: "R".into(), p: None }.to_field().is_err());
        assert!(FieldDescriptor { kind: "Fp".into(), p: None }.to_field().is_err());
        assert!(FieldDescriptor { kind: "Fp".into(), p: Some(6) }.to_field().is_err());
        assert!(FieldDescriptor { kind: "Q".into(), p: Some(5) }.to_field().is_err());
    }

    #[test]
    fn shape_errors_are_reported() {
        let entry = &catalog()[0];
        let mut doc = HopfFileDocument::from_algebra(&entry.algebra);
        doc.unit.pop();
        assert!(doc.to_algebra().is_err());
    }

    #[test]
    fn scalar_parse_errors_are_reported() {
        let entry = &catalog()[0];
        let mut doc = HopfFileDocument::from_algebra(&entry.algebra);
        doc.counit[0] = "one".to_string();
        assert!(doc.to_algebra().is_err());
    }
}
