//! The convolution algebra on the linear dual, the full dual Hopf
//! algebra, and modules over the dual: rational actions of comodules,
//! the reverse translation, and module hom-spaces.
//!
//! Functionals are stored in dual-basis coordinates: the functional
//! `f` corresponds to the vector `(f(e_0), ..., f(e_{n-1}))`.

use crate::comodule::Comodule;
use crate::error::{Error, Result};
use crate::hopf::{AxiomReport, HopfAlgebra};
use crate::matrix::Matrix;
use crate::scalar::{Field, FieldScalar};

/// The dual space with the convolution product
/// `(f * g)(a) = sum f(a_(1)) g(a_(2))` and unit the counit.
pub struct ConvolutionAlgebra {
    field: Field,
    dim: usize,
    /// `mult[i][j][k]`: coefficient of the `k`-th dual basis vector in
    /// `xi_i * xi_j`; equals `comult[k][i*n + j]` of the base algebra.
    mult: Vec<Vec<Vec<FieldScalar>>>,
    /// Coordinates of the counit, the convolution unit.
    unit: Vec<FieldScalar>,
}

impl ConvolutionAlgebra {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult_sc(&self, i: usize, j: usize, k: usize) -> &FieldScalar {
        &self.mult[i][j][k]
    }

    pub fn unit_coords(&self) -> &[FieldScalar] {
        &self.unit
    }

    /// Convolution product of two functionals in dual coordinates.
    pub fn product(&self, f: &[FieldScalar], g: &[FieldScalar]) -> Vec<FieldScalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for i in 0..self.dim {
            if f[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if g[j].is_zero() {
                    continue;
                }
                let c = f[i].mul(&g[j]);
                for k in 0..self.dim {
                    let m = &self.mult[i][j][k];
                    if !m.is_zero() {
                        out[k] = out[k].add(&c.mul(m));
                    }
                }
            }
        }
        out
    }

    /// Associativity and two-sided unitality of the convolution
    /// product, checked on all basis triples/pairs.
    pub fn verify(&self) -> AxiomReport {
        let n = self.dim;
        let f = self.field;
        let basis = |i: usize| -> Vec<FieldScalar> {
            (0..n).map(|t| if t == i { f.one() } else { f.zero() }).collect()
        };
        let mut assoc = true;
        'assoc: for i in 0..n {
            for j in 0..n {
                let ij = self.product(&basis(i), &basis(j));
                for k in 0..n {
                    let jk = self.product(&basis(j), &basis(k));
                    if self.product(&ij, &basis(k)) != self.product(&basis(i), &jk) {
                        assoc = false;
                        break 'assoc;
                    }
                }
            }
        }
        let mut unital = true;
        for i in 0..n {
            let e = basis(i);
            if self.product(&self.unit, &e) != e || self.product(&e, &self.unit) != e {
                unital = false;
                break;
            }
        }
        AxiomReport {
            checks: vec![
                ("associativity".to_string(), assoc),
                ("unit_law".to_string(), unital),
            ],
        }
    }
}

/// Convolution algebra structure constants transposed out of the
/// comultiplication.
pub fn convolution_algebra(h: &HopfAlgebra) -> ConvolutionAlgebra {
    let n = h.dim();
    let mult = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| h.comult_sc(k, i, j).clone()).collect())
                .collect()
        })
        .collect();
    ConvolutionAlgebra {
        field: h.field(),
        dim: n,
        mult,
        unit: h.counit_coords().to_vec(),
    }
}

/// The full dual Hopf algebra on dual-basis coordinates:
/// multiplication is convolution, comultiplication is the transposed
/// multiplication, counit is evaluation at 1, antipode is the
/// transposed antipode. Basis labels gain a `*`.
pub fn dual_hopf(h: &HopfAlgebra) -> Result<HopfAlgebra> {
    let n = h.dim();
    let mult = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| h.comult_sc(k, i, j).clone()).collect())
                .collect::<Vec<Vec<FieldScalar>>>()
        })
        .collect();
    let unit = h.counit_coords().to_vec();
    let comult = (0..n)
        .map(|k| {
            (0..n * n)
                .map(|ij| h.mult_sc(ij / n, ij % n, k).clone())
                .collect()
        })
        .collect();
    let counit = h.unit_coords().to_vec();
    let antipode = h.antipode().transpose();
    let labels = h.basis_labels().iter().map(|l| format!("{l}*")).collect();
    HopfAlgebra::new(h.field(), n, labels, mult, unit, comult, counit, antipode)
}

/// A left module over the dual algebra, given by one exact action
/// matrix per dual basis functional.
#[derive(Debug, Clone, PartialEq)]
pub struct HStarModule {
    parent: HopfAlgebra,
    dim: usize,
    /// `action[l]` is the `dim x dim` matrix of the `l`-th dual basis
    /// functional.
    action: Vec<Matrix>,
}

impl HStarModule {
    pub fn new(parent: HopfAlgebra, dim: usize, action: Vec<Matrix>) -> Result<HStarModule> {
        if action.len() != parent.dim() {
            return Err(Error::invalid(format!(
                "expected {} action matrices, got {}",
                parent.dim(),
                action.len()
            )));
        }
        for a in &action {
            if a.rows() != dim || a.cols() != dim || a.field() != parent.field() {
                return Err(Error::invalid("action matrix with wrong shape or field"));
            }
        }
        Ok(HStarModule { parent, dim, action })
    }

    pub fn parent(&self) -> &HopfAlgebra {
        &self.parent
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, l: usize) -> &Matrix {
        &self.action[l]
    }

    /// Action of an arbitrary functional in dual coordinates.
    pub fn act(&self, f: &[FieldScalar]) -> Matrix {
        let field = self.parent.field();
        let mut out = Matrix::zeros(field, self.dim, self.dim);
        for (l, c) in f.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.action[l].scale(c));
            }
        }
        out
    }

    /// Left-module laws over convolution: compatibility with the
    /// product on all basis pairs, and the counit acting as identity.
    pub fn verify(&self) -> AxiomReport {
        let n = self.parent.dim();
        let field = self.parent.field();
        let mut law = true;
        'law: for a in 0..n {
            for b in 0..n {
                // xi_a * xi_b = sum_c comult[c][a*n + b] xi_c.
                let mut lhs = Matrix::zeros(field, self.dim, self.dim);
                for c in 0..n {
                    let coeff = self.parent.comult_sc(c, a, b);
                    if !coeff.is_zero() {
                        lhs = lhs.add(&self.action[c].scale(coeff));
                    }
                }
                if lhs != self.action[a].matmul(&self.action[b]) {
                    law = false;
                    break 'law;
                }
            }
        }
        let unit_acts = self.act(self.parent.counit_coords()).is_identity();
        AxiomReport {
            checks: vec![
                ("module_law".to_string(), law),
                ("unit_action".to_string(), unit_acts),
            ],
        }
    }
}

/// The rational action carried by a comodule:
/// `xi . m = sum m_(0) xi(m_(1))`.
pub fn rational_action(c: &Comodule) -> HStarModule {
    let h = c.parent();
    let n = h.dim();
    let field = h.field();
    let d = c.dim();
    let action = (0..n)
        .map(|l| Matrix::from_fn(field, d, d, |i, j| c.rho(j, i, l).clone()))
        .collect();
    HStarModule { parent: h.clone(), dim: d, action }
}

/// Reassembles a coaction from the action matrices and certifies the
/// comodule axioms; a module that fails them is not rational in this
/// basis-driven sense.
pub fn module_to_comodule(m: &HStarModule) -> Result<Comodule> {
    let h = m.parent();
    let n = h.dim();
    let field = h.field();
    let d = m.dim();
    let mut coaction = vec![vec![field.zero(); d * n]; d];
    for j in 0..d {
        for i in 0..d {
            for l in 0..n {
                coaction[j][i * n + l] = m.action[l].get(i, j).clone();
            }
        }
    }
    let c = Comodule::new(h.clone(), d, coaction)?;
    let report = c.verify();
    if !report.all_ok() {
        return Err(Error::NotRational(report.failures().join(", ")));
    }
    Ok(c)
}

/// Basis of the space of module morphisms: matrices `F` with
/// `F . act_M(xi) = act_N(xi) . F` for every dual basis functional.
pub fn module_hom(m: &HStarModule, n: &HStarModule) -> Result<Vec<Matrix>> {
    if m.parent != n.parent {
        return Err(Error::invalid("modules over different Hopf algebras"));
    }
    let field = m.parent.field();
    let nh = m.parent.dim();
    let (dm, dn) = (m.dim, n.dim);
    // Unknown F is dn x dm, flattened row-major r*dm + q. Equations
    // indexed (l, i, j): sum_q F[i, q] actM_l[q, j] - sum_r actN_l[i, r] F[r, j] = 0.
    let rows = nh * dn * dm;
    let cols = dn * dm;
    let a_mat = Matrix::from_fn(field, rows, cols, |row, col| {
        let j = row % dm;
        let li = row / dm;
        let (l, i) = (li / dn, li % dn);
        let (r, q) = (col / dm, col % dm);
        let mut v = field.zero();
        if r == i {
            v = v.add(m.action[l].get(q, j));
        }
        if q == j {
            v = v.sub(n.action[l].get(i, r));
        }
        v
    });
    let kernel = a_mat.kernel_basis();
    let mut out = Vec::with_capacity(kernel.cols());
    for c in 0..kernel.cols() {
        out.push(Matrix::from_fn(field, dn, dm, |r, q| kernel.get(r * dm + q, c).clone()));
    }
    Ok(out)
}
