//! Built-in algebras: group algebras and their duals, the classical
//! 4-dimensional example with antipode of order 4, and the Taft family.
//!
//! Every constructor validates its parameters (group axioms for Cayley
//! tables, characteristic restrictions, primitivity of the root of
//! unity) and returns `InvalidInput` on violation; the produced
//! presentations pass the full axiom battery, which the tests pin.

use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::matrix::Matrix;
use crate::scalar::{Field, FieldScalar};

/// A finite group given by its multiplication table. `table[i][j]` is
/// the index of the product of elements `i` and `j`.
#[derive(Debug, Clone)]
pub struct CayleyTable {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub labels: Vec<String>,
    identity: usize,
    inverses: Vec<usize>,
}

impl CayleyTable {
    /// Validates closure, a two-sided identity, two-sided inverses, and
    /// associativity (brute force; tables here are tiny).
    pub fn new(table: Vec<Vec<usize>>, labels: Vec<String>) -> Result<CayleyTable> {
        let n = table.len();
        if n == 0 {
            return Err(Error::invalid("empty multiplication table"));
        }
        if labels.len() != n {
            return Err(Error::invalid("label count does not match table order"));
        }
        for row in &table {
            if row.len() != n {
                return Err(Error::invalid("multiplication table is not square"));
            }
            if row.iter().any(|&v| v >= n) {
                return Err(Error::invalid("table entry out of range"));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|j| table[e][j] == j && table[j][e] == j))
            .ok_or_else(|| Error::invalid("table has no identity element"))?;
        let mut inverses = vec![0usize; n];
        for i in 0..n {
            let inv = (0..n)
                .find(|&j| table[i][j] == identity && table[j][i] == identity)
                .ok_or_else(|| Error::invalid(format!("element {i} has no inverse")))?;
            inverses[i] = inv;
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if table[table[i][j]][k] != table[i][table[j][k]] {
                        return Err(Error::invalid(format!(
                            "table is not associative at ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        Ok(CayleyTable { order: n, table, labels, identity, inverses })
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverses[i]
    }

    /// Cyclic group of order `n`, generator `g`.
    pub fn cyclic(n: usize) -> Result<CayleyTable> {
        if n == 0 {
            return Err(Error::invalid("cyclic group order must be positive"));
        }
        let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let labels = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g{i}"),
            })
            .collect();
        CayleyTable::new(table, labels)
    }

    /// The symmetric group on three letters, elements listed by one-line
    /// notation in lexicographic order, composed as `(p*q)(t) = p(q(t))`.
    pub fn symmetric3() -> CayleyTable {
        let perms: Vec<[usize; 3]> =
            vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let index_of = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap();
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| index_of(&[p[q[0]], p[q[1]], p[q[2]]]))
                    .collect()
            })
            .collect();
        let labels = vec![
            "e".to_string(),
            "(12)".to_string(),
            "(01)".to_string(),
            "(012)".to_string(),
            "(021)".to_string(),
            "(02)".to_string(),
        ];
        CayleyTable::new(table, labels).expect("built-in table is a group")
    }
}

/// Group algebra `k[G]`: basis indexed by group elements, product from
/// the table, every basis vector group-like, antipode from inversion.
pub fn group_algebra(field: Field, group: &CayleyTable) -> Result<HopfAlgebra> {
    field.validate()?;
    let n = group.order;
    let z = || field.zero();
    let o = || field.one();
    let mut mult = vec![vec![vec![z(); n]; n]; n];
    let mut comult = vec![vec![z(); n * n]; n];
    let mut unit = vec![z(); n];
    let counit = vec![o(); n];
    let mut antipode = Matrix::zeros(field, n, n);
    for i in 0..n {
        comult[i][i * n + i] = o();
        antipode.set(group.inverse(i), i, o());
        for j in 0..n {
            mult[i][j][group.table[i][j]] = o();
        }
    }
    unit[group.identity()] = o();
    HopfAlgebra::new(field, n, group.labels.clone(), mult, unit, comult, counit, antipode)
}

/// Function algebra `k^G` on a finite group: pointwise product of the
/// indicator basis, coproduct dual to the group law.
pub fn dual_group_algebra(field: Field, group: &CayleyTable) -> Result<HopfAlgebra> {
    field.validate()?;
    let n = group.order;
    let z = || field.zero();
    let o = || field.one();
    let mut mult = vec![vec![vec![z(); n]; n]; n];
    let mut comult = vec![vec![z(); n * n]; n];
    let unit = vec![o(); n];
    let mut counit = vec![z(); n];
    let mut antipode = Matrix::zeros(field, n, n);
    for i in 0..n {
        mult[i][i][i] = o();
        antipode.set(group.inverse(i), i, o());
        for j in 0..n {
            comult[group.table[i][j]][i * n + j] = o();
        }
    }
    counit[group.identity()] = o();
    let labels = group.labels.iter().map(|l| format!("{l}*")).collect();
    HopfAlgebra::new(field, n, labels, mult, unit, comult, counit, antipode)
}

/// The 4-dimensional algebra with basis `{1, g, x, gx}`, relations
/// `g^2 = 1`, `x^2 = 0`, `xg = -gx`, coproduct `g -> g (x) g`,
/// `x -> x (x) 1 + g (x) x`. Its antipode has order 4. Requires
/// characteristic != 2 (otherwise `-1 = 1` collapses the relations).
pub fn sweedler4(field: Field) -> Result<HopfAlgebra> {
    field.validate()?;
    if field.characteristic() == 2 {
        return Err(Error::invalid("characteristic 2 collapses the sign relations"));
    }
    let n = 4;
    let z = || field.zero();
    let o = || field.one();
    let m1 = || field.from_i64(-1);
    // Indices: 0 = 1, 1 = g, 2 = x, 3 = gx.
    let mut mult = vec![vec![vec![z(); n]; n]; n];
    let set = |m: &mut Vec<Vec<Vec<FieldScalar>>>, i: usize, j: usize, k: usize, v: FieldScalar| {
        m[i][j][k] = v;
    };
    for a in 0..n {
        set(&mut mult, 0, a, a, o()); // 1 * a
        if a != 0 {
            set(&mut mult, a, 0, a, o()); // a * 1
        }
    }
    set(&mut mult, 1, 1, 0, o()); // g g = 1
    set(&mut mult, 1, 2, 3, o()); // g x = gx
    set(&mut mult, 1, 3, 2, o()); // g gx = x
    set(&mut mult, 2, 1, 3, m1()); // x g = -gx
    set(&mut mult, 3, 1, 2, m1()); // gx g = -x
    // x x = x gx = gx x = gx gx = 0 (already zero).
    let unit = vec![o(), z(), z(), z()];
    let mut comult = vec![vec![z(); n * n]; n];
    comult[0][0] = o(); // 1 -> 1 (x) 1
    comult[1][n + 1] = o(); // g -> g (x) g
    comult[2][2 * n] = o(); // x -> x (x) 1 ...
    comult[2][n + 2] = o(); // ... + g (x) x
    comult[3][3 * n + 1] = o(); // gx -> gx (x) g ...
    comult[3][3] = o(); // ... + 1 (x) gx
    let counit = vec![o(), o(), z(), z()];
    let mut antipode = Matrix::zeros(field, n, n);
    antipode.set(0, 0, o());
    antipode.set(1, 1, o());
    antipode.set(3, 2, m1()); // S(x) = -gx
    antipode.set(2, 3, o()); // S(gx) = x
    HopfAlgebra::new(
        field,
        n,
        vec!["1".into(), "g".into(), "x".into(), "gx".into()],
        mult,
        unit,
        comult,
        counit,
        antipode,
    )
}

/// Taft algebra of parameter `n >= 2` over a field containing a
/// primitive `n`-th root of unity `q`: dimension `n^2`, basis
/// `g^i x^j` at index `i*n + j`, relations `g^n = 1`, `x^n = 0`,
/// `x g = q g x`; coproduct `g -> g (x) g`, `x -> x (x) 1 + g (x) x`.
/// The antipode has order `2n` for `n > 1`.
pub fn taft(field: Field, n: usize, q: &FieldScalar) -> Result<HopfAlgebra> {
    field.validate()?;
    if n < 2 {
        return Err(Error::invalid("parameter must be at least 2"));
    }
    if q.field() != field {
        return Err(Error::invalid("root of unity is over the wrong field"));
    }
    if !q.pow(n as u64).is_one() {
        return Err(Error::invalid("q is not an n-th root of unity"));
    }
    for m in 1..n {
        if q.pow(m as u64).is_one() {
            return Err(Error::invalid("q is not a primitive n-th root of unity"));
        }
    }
    let dim = n * n;
    let z = || field.zero();
    let o = || field.one();
    let idx = |i: usize, j: usize| i * n + j;

    let mut mult = vec![vec![vec![z(); dim]; dim]; dim];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    if j + l >= n {
                        continue; // x^(j+l) = 0
                    }
                    let coeff = q.pow((j * k) as u64);
                    mult[idx(i, j)][idx(k, l)][idx((i + k) % n, j + l)] = coeff;
                }
            }
        }
    }
    let mut unit = vec![z(); dim];
    unit[idx(0, 0)] = o();

    // Coproduct on monomials: comult(g)^i * comult(x)^j computed by
    // exact multiplication in the tensor square (componentwise product
    // of pure tensors).
    let tensor_mult = |a: &[FieldScalar], b: &[FieldScalar]| -> Vec<FieldScalar> {
        let mut out = vec![z(); dim * dim];
        for (pq, av) in a.iter().enumerate() {
            if av.is_zero() {
                continue;
            }
            let (p, qq) = (pq / dim, pq % dim);
            for (rs, bv) in b.iter().enumerate() {
                if bv.is_zero() {
                    continue;
                }
                let (r, s) = (rs / dim, rs % dim);
                let c = av.mul(bv);
                // (e_p (x) e_q)(e_r (x) e_s) = (e_p e_r) (x) (e_q e_s)
                for (t, cp) in mult[p][r].iter().enumerate() {
                    if cp.is_zero() {
                        continue;
                    }
                    for (u, cq) in mult[qq][s].iter().enumerate() {
                        if cq.is_zero() {
                            continue;
                        }
                        let v = c.mul(cp).mul(cq);
                        out[t * dim + u] = out[t * dim + u].add(&v);
                    }
                }
            }
        }
        out
    };
    let mut delta_unit = vec![z(); dim * dim];
    delta_unit[idx(0, 0) * dim + idx(0, 0)] = o();
    let mut delta_g = vec![z(); dim * dim];
    delta_g[idx(1, 0) * dim + idx(1, 0)] = o();
    let mut delta_x = vec![z(); dim * dim];
    delta_x[idx(0, 1) * dim + idx(0, 0)] = o(); // x (x) 1
    delta_x[idx(1, 0) * dim + idx(0, 1)] = o(); // g (x) x
    let mut comult = vec![vec![z(); dim * dim]; dim];
    for i in 0..n {
        for j in 0..n {
            let mut acc = delta_unit.clone();
            for _ in 0..i {
                acc = tensor_mult(&acc, &delta_g);
            }
            for _ in 0..j {
                acc = tensor_mult(&acc, &delta_x);
            }
            comult[idx(i, j)] = acc;
        }
    }

    let mut counit = vec![z(); dim];
    for i in 0..n {
        counit[idx(i, 0)] = o();
    }

    // Antipode: S(g) = g^(n-1), S(x) = -g^(n-1) x, extended as an
    // anti-homomorphism: S(g^i x^j) = S(x)^j S(g)^i.
    let elt_mult = |a: &[FieldScalar], b: &[FieldScalar]| -> Vec<FieldScalar> {
        let mut out = vec![z(); dim];
        for (p, av) in a.iter().enumerate() {
            if av.is_zero() {
                continue;
            }
            for (r, bv) in b.iter().enumerate() {
                if bv.is_zero() {
                    continue;
                }
                let c = av.mul(bv);
                for (t, cp) in mult[p][r].iter().enumerate() {
                    if !cp.is_zero() {
                        out[t] = out[t].add(&c.mul(cp));
                    }
                }
            }
        }
        out
    };
    let mut s_g = vec![z(); dim];
    s_g[idx(n - 1, 0)] = o();
    let mut s_x = vec![z(); dim];
    s_x[idx(n - 1, 1)] = field.from_i64(-1);
    let mut antipode = Matrix::zeros(field, dim, dim);
    for i in 0..n {
        for j in 0..n {
            let mut acc = unit.clone();
            for _ in 0..j {
                acc = elt_mult(&acc, &s_x);
            }
            for _ in 0..i {
                acc = elt_mult(&acc, &s_g);
            }
            for (t, v) in acc.into_iter().enumerate() {
                antipode.set(t, idx(i, j), v);
            }
        }
    }

    let label = |i: usize, j: usize| -> String {
        if i == 0 && j == 0 {
            return "1".to_string();
        }
        let mut s = String::new();
        match i {
            0 => {}
            1 => s.push('g'),
            _ => s.push_str(&format!("g{i}")),
        }
        match j {
            0 => {}
            1 => s.push('x'),
            _ => s.push_str(&format!("x{j}")),
        }
        s
    };
    let labels = (0..n).flat_map(|i| (0..n).map(move |j| label(i, j))).collect();
    HopfAlgebra::new(field, dim, labels, mult, unit, comult, counit, antipode)
}

/// A named algebra from the built-in collection.
pub struct CatalogEntry {
    pub name: String,
    pub algebra: HopfAlgebra,
}

/// The full built-in collection: cyclic and symmetric group algebras
/// and their duals over Q and F5, the 4-dimensional antipode-order-4
/// example over Q, and the 9-dimensional Taft algebra over F7.
pub fn catalog() -> Vec<CatalogEntry> {
    let c2 = CayleyTable::cyclic(2).unwrap();
    let c3 = CayleyTable::cyclic(3).unwrap();
    let s3 = CayleyTable::symmetric3();
    let mut out = Vec::new();
    for (fname, field) in [("q", Field::Q), ("f5", Field::Fp(5))] {
        for (gname, g) in [("c2", &c2), ("c3", &c3), ("s3", &s3)] {
            out.push(CatalogEntry {
                name: format!("k{gname}_{fname}"),
                algebra: group_algebra(field, g).unwrap(),
            });
            out.push(CatalogEntry {
                name: format!("dual_k{gname}_{fname}"),
                algebra: dual_group_algebra(field, g).unwrap(),
            });
        }
    }
    out.push(CatalogEntry { name: "sweedler4_q".to_string(), algebra: sweedler4(Field::Q).unwrap() });
    out.push(CatalogEntry {
        name: "taft3_f7".to_string(),
        algebra: taft(Field::Fp(7), 3, &FieldScalar::fp(7, 2)).unwrap(),
    });
    out
}

pub fn catalog_entry(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}
