//! Hopf algebras presented by structure constants over an exact field.
//!
//! Conventions, used consistently across the crate:
//! * `mult[i][j][k]`: coefficient of `e_k` in `e_i * e_j`;
//! * `unit`: coordinates of the algebra unit;
//! * `comult[i]`: coproduct of `e_i` as a flat vector of length `dim^2`,
//!   entry `j*dim + k` being the coefficient of `e_j (x) e_k`;
//! * `counit[i]`: value of the counit on `e_i`;
//! * `antipode`: square matrix whose column `j` holds the coordinates of
//!   the antipode applied to `e_j`.
//!
//! Tensor legs always flatten as `e_i (x) e_j -> i*dim + j`.

use crate::error::{Error, Result};
use crate::matrix::{middle_flip_row_perm, Matrix};
use crate::scalar::{Field, FieldScalar};

#[derive(Debug, Clone, PartialEq)]
pub struct HopfAlgebra {
    field: Field,
    dim: usize,
    basis: Vec<String>,
    mult: Vec<Vec<Vec<FieldScalar>>>,
    unit: Vec<FieldScalar>,
    comult: Vec<Vec<FieldScalar>>,
    counit: Vec<FieldScalar>,
    antipode: Matrix,
}

/// Outcome of an axiom battery: named checks in a fixed order.
#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub checks: Vec<(String, bool)>,
}

impl AxiomReport {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    pub fn failures(&self) -> Vec<String> {
        self.checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.clone()).collect()
    }
}

/// A vector certified to satisfy `comult(g) = g (x) g` and `counit(g) = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupLikeElement {
    pub coords: Vec<FieldScalar>,
}

impl HopfAlgebra {
    /// Shape- and field-validates the structure constants. Axioms are a
    /// separate, explicit step ([`HopfAlgebra::verify`]).
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        field: Field,
        dim: usize,
        basis: Vec<String>,
        mult: Vec<Vec<Vec<FieldScalar>>>,
        unit: Vec<FieldScalar>,
        comult: Vec<Vec<FieldScalar>>,
        counit: Vec<FieldScalar>,
        antipode: Matrix,
    ) -> Result<HopfAlgebra> {
        field.validate()?;
        if dim == 0 {
            return Err(Error::invalid("dimension must be positive"));
        }
        if basis.len() != dim {
            return Err(Error::invalid(format!("{} basis labels for dimension {dim}", basis.len())));
        }
        let check_vec = |v: &[FieldScalar], len: usize, what: &str| -> Result<()> {
            if v.len() != len {
                return Err(Error::invalid(format!("{what} has length {}, expected {len}", v.len())));
            }
            for e in v {
                if e.field() != field {
                    return Err(Error::invalid(format!("{what} entry over {}", e.field())));
                }
            }
            Ok(())
        };
        if mult.len() != dim {
            return Err(Error::invalid("multiplication tensor has wrong first dimension"));
        }
        for row in &mult {
            if row.len() != dim {
                return Err(Error::invalid("multiplication tensor has wrong second dimension"));
            }
            for cell in row {
                check_vec(cell, dim, "multiplication tensor entry")?;
            }
        }
        check_vec(&unit, dim, "unit vector")?;
        if comult.len() != dim {
            return Err(Error::invalid("comultiplication tensor has wrong first dimension"));
        }
        for row in &comult {
            check_vec(row, dim * dim, "comultiplication row")?;
        }
        check_vec(&counit, dim, "counit vector")?;
        if antipode.rows() != dim || antipode.cols() != dim {
            return Err(Error::invalid("antipode matrix has wrong shape"));
        }
        if antipode.field() != field {
            return Err(Error::invalid("antipode matrix over wrong field"));
        }
        Ok(HopfAlgebra { field, dim, basis, mult, unit, comult, counit, antipode })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis
    }

    pub fn mult_sc(&self, i: usize, j: usize, k: usize) -> &FieldScalar {
        &self.mult[i][j][k]
    }

    /// Coefficient of `e_j (x) e_k` in the coproduct of `e_i`.
    pub fn comult_sc(&self, i: usize, j: usize, k: usize) -> &FieldScalar {
        &self.comult[i][j * self.dim + k]
    }

    pub fn unit_coords(&self) -> &[FieldScalar] {
        &self.unit
    }

    pub fn counit_coords(&self) -> &[FieldScalar] {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    /// Multiplication as a matrix `H (x) H -> H`: entry `[k, i*dim+j]`.
    pub fn mult_matrix(&self) -> Matrix {
        let n = self.dim;
        Matrix::from_fn(self.field, n, n * n, |k, ij| self.mult[ij / n][ij % n][k].clone())
    }

    /// Comultiplication as a matrix `H -> H (x) H`: entry `[j*dim+k, i]`.
    pub fn comult_matrix(&self) -> Matrix {
        let n = self.dim;
        Matrix::from_fn(self.field, n * n, n, |jk, i| self.comult[i][jk].clone())
    }

    /// Unit as a column `k -> H`.
    pub fn unit_matrix(&self) -> Matrix {
        Matrix::column_vector(self.field, self.unit.clone())
    }

    /// Counit as a row `H -> k`.
    pub fn counit_matrix(&self) -> Matrix {
        Matrix::from_fn(self.field, 1, self.dim, |_, j| self.counit[j].clone())
    }

    /// Product of two coordinate vectors.
    pub fn element_product(&self, a: &[FieldScalar], b: &[FieldScalar]) -> Vec<FieldScalar> {
        let n = self.dim;
        let mut out = vec![self.field.zero(); n];
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[j].is_zero() {
                    continue;
                }
                let c = a[i].mul(&b[j]);
                for k in 0..n {
                    let s = &self.mult[i][j][k];
                    if !s.is_zero() {
                        out[k] = out[k].add(&c.mul(s));
                    }
                }
            }
        }
        out
    }

    /// Counit applied to a coordinate vector.
    pub fn counit_of(&self, a: &[FieldScalar]) -> FieldScalar {
        let mut acc = self.field.zero();
        for (ai, ei) in a.iter().zip(&self.counit) {
            acc = acc.add(&ai.mul(ei));
        }
        acc
    }

    /// Coproduct of a coordinate vector, flat `dim^2` layout.
    pub fn comult_of(&self, a: &[FieldScalar]) -> Vec<FieldScalar> {
        let n = self.dim;
        let mut out = vec![self.field.zero(); n * n];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (jk, c) in self.comult[i].iter().enumerate() {
                if !c.is_zero() {
                    out[jk] = out[jk].add(&ai.mul(c));
                }
            }
        }
        out
    }

    /// Full axiom battery. Every identity is checked as an exact matrix
    /// equation; the report lists each named axiom with its outcome.
    pub fn verify(&self) -> AxiomReport {
        let n = self.dim;
        let f = self.field;
        let id = Matrix::identity(f, n);
        let m = self.mult_matrix();
        let d = self.comult_matrix();
        let u = self.unit_matrix();
        let e = self.counit_matrix();
        let s = &self.antipode;

        let mut checks = Vec::new();

        // m(m (x) 1) = m(1 (x) m) on H^(x)3.
        let assoc_l = m.matmul(&m.kron(&id));
        let assoc_r = m.matmul(&id.kron(&m));
        checks.push(("associativity".to_string(), assoc_l == assoc_r));

        // m(u (x) 1) = id = m(1 (x) u).
        let unit_l = m.matmul(&u.kron(&id));
        let unit_r = m.matmul(&id.kron(&u));
        checks.push(("unit_law".to_string(), unit_l.is_identity() && unit_r.is_identity()));

        // (comult (x) 1)comult = (1 (x) comult)comult.
        let coassoc_l = d.kron(&id).matmul(&d);
        let coassoc_r = id.kron(&d).matmul(&d);
        checks.push(("coassociativity".to_string(), coassoc_l == coassoc_r));

        // (counit (x) 1)comult = id = (1 (x) counit)comult.
        let counit_l = e.kron(&id).matmul(&d);
        let counit_r = id.kron(&e).matmul(&d);
        checks.push(("counit_law".to_string(), counit_l.is_identity() && counit_r.is_identity()));

        // comult and counit are algebra maps:
        //   comult . m = (m (x) m)(1 (x) flip (x) 1)(comult (x) comult),
        //   comult(1) = 1 (x) 1, counit . m = counit (x) counit, counit(1) = 1.
        let lhs = d.matmul(&m);
        let dd = d.kron(&d).permute_rows(&middle_flip_row_perm(n, n, n, n));
        let rhs = m.kron(&m).matmul(&dd);
        let comult_unit = d.matmul(&u) == u.kron(&u);
        let counit_mult = e.matmul(&m) == e.kron(&e);
        let counit_unit = e.matmul(&u).is_identity();
        checks.push((
            "bialgebra_compatibility".to_string(),
            lhs == rhs && comult_unit && counit_mult && counit_unit,
        ));

        // m(S (x) 1)comult = unit . counit = m(1 (x) S)comult.
        let target = u.matmul(&e);
        let anti_l = m.matmul(&s.kron(&id)).matmul(&d);
        let anti_r = m.matmul(&id.kron(s)).matmul(&d);
        checks.push(("antipode_axiom".to_string(), anti_l == target && anti_r == target));

        AxiomReport { checks }
    }

    /// Does `v` satisfy `comult(v) = v (x) v` and `counit(v) = 1`?
    pub fn is_grouplike(&self, v: &[FieldScalar]) -> bool {
        if v.len() != self.dim {
            return false;
        }
        if !self.counit_of(v).is_one() {
            return false;
        }
        let n = self.dim;
        let dv = self.comult_of(v);
        for j in 0..n {
            for k in 0..n {
                if dv[j * n + k] != v[j].mul(&v[k]) {
                    return false;
                }
            }
        }
        true
    }

    /// Certifies a coordinate vector as group-like.
    pub fn grouplike(&self, coords: Vec<FieldScalar>) -> Result<GroupLikeElement> {
        if self.is_grouplike(&coords) {
            Ok(GroupLikeElement { coords })
        } else {
            Err(Error::invalid("vector is not group-like"))
        }
    }

    /// Rebuilds the presentation along a basis relabeling: new basis
    /// vector `perm[i]` is the old `e_i`. Used to compare presentations
    /// that differ only by basis order.
    pub fn relabel(&self, perm: &[usize]) -> Result<HopfAlgebra> {
        let n = self.dim;
        if perm.len() != n {
            return Err(Error::invalid("permutation length mismatch"));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::invalid("not a permutation"));
            }
            seen[p] = true;
        }
        let f = self.field;
        let mut mult = vec![vec![vec![f.zero(); n]; n]; n];
        let mut comult = vec![vec![f.zero(); n * n]; n];
        let mut unit = vec![f.zero(); n];
        let mut counit = vec![f.zero(); n];
        let mut basis = vec![String::new(); n];
        let mut antipode = Matrix::zeros(f, n, n);
        for i in 0..n {
            unit[perm[i]] = self.unit[i].clone();
            counit[perm[i]] = self.counit[i].clone();
            basis[perm[i]] = self.basis[i].clone();
            for j in 0..n {
                antipode.set(perm[i], perm[j], self.antipode.get(i, j).clone());
                for k in 0..n {
                    mult[perm[i]][perm[j]][perm[k]] = self.mult[i][j][k].clone();
                    comult[perm[i]][perm[j] * n + perm[k]] = self.comult_sc(i, j, k).clone();
                }
            }
        }
        HopfAlgebra::new(f, n, basis, mult, unit, comult, counit, antipode)
    }
}
