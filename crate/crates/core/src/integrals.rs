//! Integral functionals on a finite-dimensional Hopf algebra: the
//! left/right integral spaces as exact kernel computations, the
//! distinguished group-like element, the line comodule it spans, the
//! Frobenius-style pairing into the dual, and antipode diagnostics.

use crate::comodule::{dual_comodule, isomorphic_comodules, tensor_comodule, Comodule, IsoOutcome};
use crate::convolution::{convolution_algebra, rational_action};
use crate::error::{Error, Result};
use crate::hopf::{AxiomReport, GroupLikeElement, HopfAlgebra};
use crate::matrix::Matrix;
use crate::scalar::FieldScalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A basis (in dual coordinates) of the space of one-sided integral
/// functionals.
#[derive(Debug, Clone)]
pub struct IntegralSpace {
    pub side: Side,
    pub basis: Vec<Vec<FieldScalar>>,
}

impl IntegralSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Solves the defining linear system exactly. A right integral
/// satisfies `sum chi(a_(1)) a_(2) = chi(a) 1` for every basis `a`;
/// a left integral the mirrored `sum a_(1) chi(a_(2)) = chi(a) 1`.
pub fn integral_space(h: &HopfAlgebra, side: Side) -> IntegralSpace {
    let n = h.dim();
    let f = h.field();
    let u = h.unit_coords();
    // n^2 equations (one per basis element `a` and output coordinate)
    // in the n unknowns chi(e_j).
    let a_mat = Matrix::from_fn(f, n * n, n, |row, j| {
        let (i, k) = (row / n, row % n);
        let mut v = match side {
            // Coefficient of chi_j in the k-th coordinate of
            // sum chi(a_(1)) a_(2) - chi(a) 1, for a = e_i.
            Side::Right => h.comult_sc(i, j, k).clone(),
            // Legs swap: chi eats the second leg, the output
            // coordinate is the first.
            Side::Left => h.comult_sc(i, k, j).clone(),
        };
        if j == i {
            v = v.sub(&u[k]);
        }
        v
    });
    let kernel = a_mat.kernel_basis();
    let basis = (0..kernel.cols()).map(|c| kernel.column(c)).collect();
    IntegralSpace { side, basis }
}

/// Dimension bookkeeping for both integral spaces.
pub struct UniquenessReport {
    pub right_dim: usize,
    pub left_dim: usize,
    pub report: AxiomReport,
}

pub fn uniqueness_check(h: &HopfAlgebra) -> UniquenessReport {
    let right_dim = integral_space(h, Side::Right).dim();
    let left_dim = integral_space(h, Side::Left).dim();
    let report = AxiomReport {
        checks: vec![
            ("right_integrals_at_most_one_dimensional".to_string(), right_dim <= 1),
            ("left_integrals_at_most_one_dimensional".to_string(), left_dim <= 1),
            ("sides_vanish_together".to_string(), (right_dim == 0) == (left_dim == 0)),
            ("both_one_dimensional".to_string(), right_dim == 1 && left_dim == 1),
        ],
    };
    UniquenessReport { right_dim, left_dim, report }
}

/// The group-like element `gamma` with
/// `sum a_(1) chi(a_(2)) = chi(a) gamma` for a nonzero right integral
/// `chi`, certified witness-independently and on the full basis.
pub struct DistinguishedGrouplike {
    pub gamma: GroupLikeElement,
    /// The right integral used, in dual coordinates.
    pub integral: Vec<FieldScalar>,
    pub report: AxiomReport,
}

pub fn distinguished_grouplike(h: &HopfAlgebra) -> Result<DistinguishedGrouplike> {
    let n = h.dim();
    let f = h.field();
    let space = integral_space(h, Side::Right);
    if space.dim() == 0 {
        return Err(Error::ZeroIntegral);
    }
    if space.dim() > 1 {
        return Err(Error::invalid("right integral space is not one-dimensional"));
    }
    let chi = space.basis[0].clone();

    // shifted[i] = sum a_(1) chi(a_(2)) for a = e_i, as coordinates.
    let shifted: Vec<Vec<FieldScalar>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = f.zero();
                    for k in 0..n {
                        let c = h.comult_sc(i, j, k);
                        if !c.is_zero() && !chi[k].is_zero() {
                            acc = acc.add(&c.mul(&chi[k]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();

    let witnesses: Vec<usize> = (0..n).filter(|&i| !chi[i].is_zero()).collect();
    if witnesses.is_empty() {
        return Err(Error::ZeroIntegral);
    }
    let gamma_from = |i: usize| -> Result<Vec<FieldScalar>> {
        let inv = chi[i].inv()?;
        Ok(shifted[i].iter().map(|v| v.mul(&inv)).collect())
    };
    let gamma = gamma_from(witnesses[0])?;
    let mut witness_independent = true;
    for &w in &witnesses[1..] {
        if gamma_from(w)? != gamma {
            witness_independent = false;
        }
    }
    let grouplike = h.is_grouplike(&gamma);
    // The defining identity on every basis element, including those
    // where chi vanishes.
    let mut shift_identity = true;
    for i in 0..n {
        let expected: Vec<FieldScalar> = gamma.iter().map(|g| g.mul(&chi[i])).collect();
        if shifted[i] != expected {
            shift_identity = false;
        }
    }
    let report = AxiomReport {
        checks: vec![
            ("witness_independence".to_string(), witness_independent),
            ("group_like".to_string(), grouplike),
            ("shift_identity_on_full_basis".to_string(), shift_identity),
        ],
    };
    Ok(DistinguishedGrouplike {
        gamma: GroupLikeElement { coords: gamma },
        integral: chi,
        report,
    })
}

/// The invertible 1-dimensional comodule spanned by the distinguished
/// group-like, certified to act on the right-integral space the way
/// convolution does, and to be tensor-invertible.
pub struct GammaLine {
    pub comodule: Comodule,
    pub gamma: GroupLikeElement,
    pub report: AxiomReport,
}

pub fn gamma_comodule(h: &HopfAlgebra) -> Result<GammaLine> {
    let dg = distinguished_grouplike(h)?;
    if !dg.report.all_ok() {
        return Err(Error::invalid(format!(
            "distinguished group-like failed certification: {}",
            dg.report.failures().join(", ")
        )));
    }
    let line = Comodule::grouplike_line(h, &dg.gamma);
    let axioms_ok = line.verify().all_ok();

    // Convolving a dual basis functional against the right integral
    // must scale it by the corresponding gamma coordinate — the same
    // action the line's rational module structure encodes.
    let conv = convolution_algebra(h);
    let n = h.dim();
    let f = h.field();
    let action = rational_action(&line);
    let mut action_matches = true;
    for l in 0..n {
        let mut xi = vec![f.zero(); n];
        xi[l] = f.one();
        let convolved = conv.product(&xi, &dg.integral);
        let expected: Vec<FieldScalar> =
            dg.integral.iter().map(|v| v.mul(&dg.gamma.coords[l])).collect();
        if convolved != expected || action.action(l).get(0, 0) != &dg.gamma.coords[l] {
            action_matches = false;
        }
    }

    let dual = dual_comodule(&line);
    let product = tensor_comodule(&line, &dual)?;
    let invertible = matches!(
        isomorphic_comodules(&product, &Comodule::trivial(h), 0)?,
        IsoOutcome::Isomorphic(_)
    );

    let report = AxiomReport {
        checks: vec![
            ("comodule_axioms".to_string(), axioms_ok),
            ("action_on_right_integrals".to_string(), action_matches),
            ("tensor_invertible".to_string(), invertible),
        ],
    };
    Ok(GammaLine { comodule: line, gamma: dg.gamma, report })
}

/// The pairing map into the dual induced by a nonzero left integral
/// `phi`: `theta(h) = (a -> phi(a S(h)))`. For a finite-dimensional
/// Hopf algebra this matrix is invertible; the kernel is reported when
/// it is not.
pub struct DualPairing {
    pub matrix: Matrix,
    pub rank: usize,
    pub kernel: Vec<Vec<FieldScalar>>,
    pub report: AxiomReport,
}

pub fn sweedler_iso_check(h: &HopfAlgebra) -> Result<DualPairing> {
    let n = h.dim();
    let f = h.field();
    let space = integral_space(h, Side::Left);
    if space.dim() == 0 {
        return Err(Error::ZeroIntegral);
    }
    if space.dim() > 1 {
        return Err(Error::invalid("left integral space is not one-dimensional"));
    }
    let phi = &space.basis[0];
    let s = h.antipode();
    // theta[i, j] = phi(e_i S(e_j)).
    let matrix = Matrix::from_fn(f, n, n, |i, j| {
        let mut acc = f.zero();
        for m in 0..n {
            let sv = s.get(m, j);
            if sv.is_zero() {
                continue;
            }
            for l in 0..n {
                let mu = h.mult_sc(i, m, l);
                if !mu.is_zero() && !phi[l].is_zero() {
                    acc = acc.add(&sv.mul(&mu.mul(&phi[l])));
                }
            }
        }
        acc
    });
    let rank = matrix.rank();
    let kernel_mat = matrix.kernel_basis();
    let kernel = (0..kernel_mat.cols()).map(|c| kernel_mat.column(c)).collect();
    let report = AxiomReport {
        checks: vec![("full_rank".to_string(), rank == n)],
    };
    Ok(DualPairing { matrix, rank, kernel, report })
}

/// The companion map `h -> (a -> phi(h S(a)))`, certified nonzero and
/// to interchange the hit action on the algebra with right convolution
/// on the dual: `phi_star(sum xi(h_(1)) h_(2)) = phi_star(h) * xi`.
pub fn phi_star_check(h: &HopfAlgebra) -> Result<AxiomReport> {
    let n = h.dim();
    let f = h.field();
    let space = integral_space(h, Side::Left);
    if space.dim() != 1 {
        return Err(Error::ZeroIntegral);
    }
    let phi = &space.basis[0];
    let s = h.antipode();
    // phi_star(e_i) has dual coordinates phi(e_i S(e_k)).
    let phi_star = |i: usize| -> Vec<FieldScalar> {
        (0..n)
            .map(|k| {
                let mut acc = f.zero();
                for m in 0..n {
                    let sv = s.get(m, k);
                    if sv.is_zero() {
                        continue;
                    }
                    for l in 0..n {
                        let mu = h.mult_sc(i, m, l);
                        if !mu.is_zero() && !phi[l].is_zero() {
                            acc = acc.add(&sv.mul(&mu.mul(&phi[l])));
                        }
                    }
                }
                acc
            })
            .collect()
    };
    let images: Vec<Vec<FieldScalar>> = (0..n).map(phi_star).collect();
    let nonzero = images.iter().any(|v| v.iter().any(|e| !e.is_zero()));

    let conv = convolution_algebra(h);
    let mut intertwines = true;
    'outer: for i in 0..n {
        for l in 0..n {
            // Hit h = e_i by the l-th dual functional on the first
            // comultiplication leg: sum comult[i][l*n + k] e_k.
            let mut lhs = vec![f.zero(); n];
            for k in 0..n {
                let c = h.comult_sc(i, l, k);
                if c.is_zero() {
                    continue;
                }
                for (t, v) in images[k].iter().enumerate() {
                    if !v.is_zero() {
                        lhs[t] = lhs[t].add(&c.mul(v));
                    }
                }
            }
            let mut xi = vec![f.zero(); n];
            xi[l] = f.one();
            let rhs = conv.product(&images[i], &xi);
            if lhs != rhs {
                intertwines = false;
                break 'outer;
            }
        }
    }
    Ok(AxiomReport {
        checks: vec![
            ("nonzero".to_string(), nonzero),
            ("right_module_map".to_string(), intertwines),
        ],
    })
}

/// Exact rank test for the antipode matrix.
pub fn antipode_bijective(h: &HopfAlgebra) -> bool {
    h.antipode().rank() == h.dim()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AntipodeOrder {
    Finite(u64),
    /// No power up to the search bound equals the identity.
    NotFinite(u64),
}

/// Least `m >= 1` with `S^m = id`, searched up to `4 dim^2` (which
/// covers every finite order the catalog can exhibit).
pub fn antipode_order(h: &HopfAlgebra) -> AntipodeOrder {
    let n = h.dim() as u64;
    let bound = 4 * n * n;
    let s = h.antipode();
    let mut power = s.clone();
    for m in 1..=bound {
        if power.is_identity() {
            return AntipodeOrder::Finite(m);
        }
        power = power.matmul(s);
    }
    AntipodeOrder::NotFinite(bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, dual_group_algebra, group_algebra, sweedler4, taft, CayleyTable};
    use crate::scalar::Field;

    fn proportional(a: &[FieldScalar], b: &[FieldScalar]) -> bool {
        assert_eq!(a.len(), b.len());
        // Cross-multiply: a_i b_j = a_j b_i for all i, j.
        for i in 0..a.len() {
            for j in 0..a.len() {
                if a[i].mul(&b[j]) != a[j].mul(&b[i]) {
                    return false;
                }
            }
        }
        a.iter().any(|v| !v.is_zero())
    }

    fn q(v: i64) -> FieldScalar {
        FieldScalar::rational(v, 1)
    }

    #[test]
    fn group_algebra_integrals_are_identity_coefficient() {
        let h = group_algebra(Field::Q, &CayleyTable::cyclic(2).unwrap()).unwrap();
        let right = integral_space(&h, Side::Right);
        assert_eq!(right.dim(), 1);
        assert!(proportional(&right.basis[0], &[q(1), q(0)]));
        let left = integral_space(&h, Side::Left);
        assert_eq!(left.dim(), 1);
        assert!(proportional(&left.basis[0], &[q(1), q(0)]));
    }

    #[test]
    fn function_algebra_integral_is_total_sum() {
        let h = dual_group_algebra(Field::Q, &CayleyTable::cyclic(2).unwrap()).unwrap();
        let right = integral_space(&h, Side::Right);
        assert_eq!(right.dim(), 1);
        assert!(proportional(&right.basis[0], &[q(1), q(1)]));
    }

    #[test]
    fn sweedler_integrals_pin_to_single_dual_coordinates() {
        let h = sweedler4(Field::Q).unwrap();
        let right = integral_space(&h, Side::Right);
        assert_eq!(right.dim(), 1);
        assert!(proportional(&right.basis[0], &[q(0), q(0), q(1), q(0)]));
        let left = integral_space(&h, Side::Left);
        assert_eq!(left.dim(), 1);
        assert!(proportional(&left.basis[0], &[q(0), q(0), q(0), q(1)]));
    }

    #[test]
    fn uniqueness_holds_across_catalog() {
        for entry in catalog() {
            let u = uniqueness_check(&entry.algebra);
            assert_eq!(u.right_dim, 1, "{}", entry.name);
            assert_eq!(u.left_dim, 1, "{}", entry.name);
            assert!(u.report.all_ok(), "{}: {:?}", entry.name, u.report.failures());
        }
    }

    #[test]
    fn distinguished_grouplike_of_group_algebra_is_the_unit() {
        for h in [
            group_algebra(Field::Q, &CayleyTable::symmetric3()).unwrap(),
            dual_group_algebra(Field::Q, &CayleyTable::cyclic(3).unwrap()).unwrap(),
        ] {
            let dg = distinguished_grouplike(&h).unwrap();
            assert!(dg.report.all_ok(), "failures: {:?}", dg.report.failures());
            assert_eq!(dg.gamma.coords, h.unit_coords().to_vec());
        }
    }

    #[test]
    fn distinguished_grouplike_of_sweedler_is_g() {
        let h = sweedler4(Field::Q).unwrap();
        let dg = distinguished_grouplike(&h).unwrap();
        assert!(dg.report.all_ok());
        assert_eq!(dg.gamma.coords, vec![q(0), q(1), q(0), q(0)]);
    }

    #[test]
    fn distinguished_grouplike_certifies_on_full_catalog() {
        for entry in catalog() {
            let dg = distinguished_grouplike(&entry.algebra).unwrap();
            assert!(dg.report.all_ok(), "{}: {:?}", entry.name, dg.report.failures());
        }
    }

    #[test]
    fn gamma_line_certifies() {
        for h in [
            sweedler4(Field::Q).unwrap(),
            taft(Field::Fp(7), 3, &FieldScalar::fp(7, 2)).unwrap(),
        ] {
            let line = gamma_comodule(&h).unwrap();
            assert!(line.report.all_ok(), "failures: {:?}", line.report.failures());
        }
    }

    #[test]
    fn dual_pairing_on_group_algebra_is_inversion_permutation() {
        let h = group_algebra(Field::Q, &CayleyTable::cyclic(2).unwrap()).unwrap();
        let pairing = sweedler_iso_check(&h).unwrap();
        assert!(pairing.report.all_ok());
        assert_eq!(pairing.rank, 2);
        // phi = coefficient of the identity, S = inversion, so
        // theta(h) pairs h with its inverse: the identity matrix for
        // the order-2 group, up to the integral's normalization.
        assert!(pairing.matrix.is_identity() || pairing.matrix.scale(&q(-1)).is_identity());
        assert!(pairing.kernel.is_empty());
    }

    #[test]
    fn dual_pairing_full_rank_on_catalog() {
        for entry in catalog() {
            let pairing = sweedler_iso_check(&entry.algebra).unwrap();
            assert_eq!(pairing.rank, entry.algebra.dim(), "{}", entry.name);
            assert!(pairing.report.all_ok(), "{}", entry.name);
        }
    }

    #[test]
    fn phi_star_pinned_value_on_sweedler() {
        let h = sweedler4(Field::Q).unwrap();
        // phi = (gx)^*; phi_star(1)(a) = phi(S(a)) picks up S(x) = -gx.
        let space = integral_space(&h, Side::Left);
        let phi = &space.basis[0];
        let s = h.antipode();
        let f = Field::Q;
        let image: Vec<FieldScalar> = (0..4)
            .map(|k| {
                let mut acc = f.zero();
                for m in 0..4 {
                    acc = acc.add(&s.get(m, k).mul(&phi[m]));
                }
                acc
            })
            .collect();
        let scale = &phi[3];
        let expected: Vec<FieldScalar> =
            [q(0), q(0), q(-1), q(0)].iter().map(|v| v.mul(scale)).collect();
        assert_eq!(image, expected);
    }

    #[test]
    fn phi_star_certifies_on_catalog() {
        for entry in catalog() {
            let report = phi_star_check(&entry.algebra).unwrap();
            assert!(report.all_ok(), "{}: {:?}", entry.name, report.failures());
        }
    }

    #[test]
    fn antipode_orders_are_pinned() {
        let kc2 = group_algebra(Field::Q, &CayleyTable::cyclic(2).unwrap()).unwrap();
        assert_eq!(antipode_order(&kc2), AntipodeOrder::Finite(1));
        let kc3 = group_algebra(Field::Q, &CayleyTable::cyclic(3).unwrap()).unwrap();
        assert_eq!(antipode_order(&kc3), AntipodeOrder::Finite(2));
        let sw = sweedler4(Field::Q).unwrap();
        assert_eq!(antipode_order(&sw), AntipodeOrder::Finite(4));
        let t3 = taft(Field::Fp(7), 3, &FieldScalar::fp(7, 2)).unwrap();
        assert_eq!(antipode_order(&t3), AntipodeOrder::Finite(6));
    }

    #[test]
    fn antipode_bijective_on_catalog() {
        for entry in catalog() {
            assert!(antipode_bijective(&entry.algebra), "{}", entry.name);
        }
    }
}
