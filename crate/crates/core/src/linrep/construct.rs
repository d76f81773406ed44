use super::matrix::Matrix;
use crate::elements::Monoid;
use super::rep::Representation;
use crate::error::{Error, Result};

/// `p`-subsets of `0..n` in lexicographic order.
pub fn subsets_of_size(n: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(p);
    fn go(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < p - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, p, cur, out);
            cur.pop();
        }
    }
    go(0, n, p, &mut cur, &mut out);
    out
}

/// `p`-th exterior power on the basis `e_I = e_{i_1} ∧ … ∧ e_{i_p}`,
/// `I` ascending in lexicographic order. Entries are `p × p` minors.
pub fn exterior_power(rep: &Representation, p: usize) -> Result<Representation> {
    let d = rep.dim();
    if p > d {
        return Err(Error::ExteriorOutOfRange { p, dim: d });
    }
    let basis = subsets_of_size(d, p);
    let k = basis.len();
    let matrices = rep
        .matrices()
        .iter()
        .map(|m| {
            let mut out = Matrix::zeros(k, k);
            for (a, rows) in basis.iter().enumerate() {
                for (b, cols) in basis.iter().enumerate() {
                    out.set(a, b, m.submatrix(rows, cols).determinant());
                }
            }
            out
        })
        .collect();
    Representation::new(rep.monoid(), matrices)
}

/// `V ⊗ U` as a representation of the direct product, indexed
/// `(g, h) -> g * |H| + h`.
pub fn outer_tensor(v: &Representation, u: &Representation) -> Result<Representation> {
    let product = v.monoid().direct_product(u.monoid());
    let nh = u.monoid().order();
    let matrices = (0..v.monoid().order() * nh)
        .map(|x| v.matrix(x / nh).kronecker(u.matrix(x % nh)))
        .collect();
    Representation::new(&product, matrices)
}

/// `V ⊗ U` over the same monoid, acting diagonally.
pub fn inner_tensor(v: &Representation, u: &Representation) -> Result<Representation> {
    if !v.monoid().same_as(u.monoid()) {
        return Err(Error::MonoidMismatch(v.monoid().order(), u.monoid().order()));
    }
    let matrices = v
        .matrices()
        .iter()
        .zip(u.matrices())
        .map(|(a, b)| a.kronecker(b))
        .collect();
    Representation::new(v.monoid(), matrices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elements::symmetric_group;
    use crate::linrep::rep::mapping_rep;

    #[test]
    fn exterior_dimensions() {
        let s4 = symmetric_group(4);
        let v = mapping_rep(&s4).unwrap();
        for (p, dim) in [(0, 1), (1, 4), (2, 6), (3, 4), (4, 1)] {
            assert_eq!(exterior_power(&v, p).unwrap().dim(), dim);
        }
        assert_eq!(exterior_power(&v, 1).unwrap().character(), v.character());
        let top = exterior_power(&v, 4).unwrap();
        for (s, g) in s4.elements().iter().enumerate() {
            assert_eq!(top.matrix(s).get(0, 0), &crate::linrep::matrix::q(g.sign() as i64));
        }
        assert!(matches!(exterior_power(&v, 5), Err(Error::ExteriorOutOfRange { .. })));
    }

    #[test]
    fn tensor_dimension_and_trace() {
        let s2 = symmetric_group(2);
        let s3 = symmetric_group(3);
        let a = mapping_rep(&s2).unwrap();
        let b = mapping_rep(&s3).unwrap();
        let t = outer_tensor(&a, &b).unwrap();
        assert_eq!(t.dim(), 6);
        assert_eq!(t.monoid().order(), 12);
        let (ca, cb, ct) = (a.character(), b.character(), t.character());
        for x in 0..12 {
            assert_eq!(ct.0[x], &ca.0[x / 6] * &cb.0[x % 6]);
        }
    }
}
