//! Quadratic and Hermitian forms on V(n, q), with enumeration of their
//! projective zeros. The classical caps are singular-point sets of these
//! forms, and several non-cap verdicts come from counting zeros on lines.

use std::fmt;
use std::sync::Arc;

use crate::field::{Fe, FieldSpec};
use crate::space::{PointId, ProjectiveSpace};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FormError {
    #[error("form dimension {form} does not match space dimension {space}")]
    DimensionMismatch { form: usize, space: usize },
    #[error("form and space live over different fields")]
    FieldMismatch,
    #[error("a {0} form needs an even dimension")]
    EvenDimensionRequired(&'static str),
    #[error("a parabolic form needs an odd dimension")]
    OddDimensionRequired,
    #[error("Hermitian forms need a field of square order, got {0}")]
    FieldNotSquareOrder(u32),
    #[error("Gram matrix is not Hermitian")]
    NotHermitian,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FormKind {
    Elliptic,
    Hyperbolic,
    Parabolic,
    Custom,
}

/// A quadratic form given by upper-triangular coefficients:
/// Q(x) = sum over i <= j of c[i][j] x_i x_j.
#[derive(Clone)]
pub struct QuadraticFormSpec {
    field: Arc<FieldSpec>,
    dim: usize,
    kind: FormKind,
    coeffs: Vec<Fe>,
}

impl fmt::Debug for QuadraticFormSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} quadratic form on V({}, {})", self.kind, self.dim, self.field.order())
    }
}

/// Least pair (a, b) in lexicographic order of packed values such that
/// t^2 + a t + b is irreducible over the field.
pub fn least_irreducible_quadratic_pair(f: &FieldSpec) -> (Fe, Fe) {
    for a in f.elements() {
        for b in f.elements() {
            let irreducible = f
                .elements()
                .all(|x| f.add(f.add(f.mul(x, x), f.mul(a, x)), b) != Fe::ZERO);
            if irreducible {
                return (a, b);
            }
        }
    }
    unreachable!("irreducible quadratics exist over every finite field")
}

impl QuadraticFormSpec {
    /// Witt index dim/2 - 1: hyperbolic pairs plus an anisotropic binary tail
    /// t^2 + a t + b with (a, b) the least irreducible pair.
    pub fn elliptic(field: &Arc<FieldSpec>, dim: usize) -> Result<QuadraticFormSpec, FormError> {
        if dim < 2 || dim % 2 != 0 {
            return Err(FormError::EvenDimensionRequired("elliptic"));
        }
        let mut form = QuadraticFormSpec::zero(field, dim, FormKind::Elliptic);
        for i in 0..(dim - 2) / 2 {
            form.set(2 * i, 2 * i + 1, Fe::ONE);
        }
        let (a, b) = least_irreducible_quadratic_pair(field);
        form.set(dim - 2, dim - 2, Fe::ONE);
        form.set(dim - 2, dim - 1, a);
        form.set(dim - 1, dim - 1, b);
        Ok(form)
    }

    /// Witt index dim/2: sum of hyperbolic pairs x_{2i} x_{2i+1}.
    pub fn hyperbolic(field: &Arc<FieldSpec>, dim: usize) -> Result<QuadraticFormSpec, FormError> {
        if dim < 2 || dim % 2 != 0 {
            return Err(FormError::EvenDimensionRequired("hyperbolic"));
        }
        let mut form = QuadraticFormSpec::zero(field, dim, FormKind::Hyperbolic);
        for i in 0..dim / 2 {
            form.set(2 * i, 2 * i + 1, Fe::ONE);
        }
        Ok(form)
    }

    /// Odd dimension: x_0^2 plus hyperbolic pairs on the rest.
    pub fn parabolic(field: &Arc<FieldSpec>, dim: usize) -> Result<QuadraticFormSpec, FormError> {
        if dim < 3 || dim % 2 != 1 {
            return Err(FormError::OddDimensionRequired);
        }
        let mut form = QuadraticFormSpec::zero(field, dim, FormKind::Parabolic);
        form.set(0, 0, Fe::ONE);
        for i in 0..(dim - 1) / 2 {
            form.set(2 * i + 1, 2 * i + 2, Fe::ONE);
        }
        Ok(form)
    }

    /// Arbitrary upper-triangular coefficients c[i][j], i <= j.
    pub fn custom(field: &Arc<FieldSpec>, upper: &[Vec<Fe>]) -> QuadraticFormSpec {
        let dim = upper.len();
        let mut form = QuadraticFormSpec::zero(field, dim, FormKind::Custom);
        for (i, row) in upper.iter().enumerate() {
            assert_eq!(row.len(), dim - i, "row {i} must list coefficients c[i][i..]");
            for (k, &c) in row.iter().enumerate() {
                form.set(i, i + k, c);
            }
        }
        form
    }

    fn zero(field: &Arc<FieldSpec>, dim: usize, kind: FormKind) -> QuadraticFormSpec {
        QuadraticFormSpec {
            field: Arc::clone(field),
            dim,
            kind,
            coeffs: vec![Fe::ZERO; dim * dim],
        }
    }

    fn set(&mut self, i: usize, j: usize, v: Fe) {
        debug_assert!(i <= j);
        self.coeffs[i * self.dim + j] = v;
    }

    pub fn coeff(&self, i: usize, j: usize) -> Fe {
        self.coeffs[i * self.dim + j]
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn eval(&self, x: &[Fe]) -> Result<Fe, FormError> {
        if x.len() != self.dim {
            return Err(FormError::DimensionMismatch { form: self.dim, space: x.len() });
        }
        let f = &self.field;
        let mut acc = Fe::ZERO;
        for i in 0..self.dim {
            if x[i] == Fe::ZERO {
                continue;
            }
            for j in i..self.dim {
                let c = self.coeffs[i * self.dim + j];
                if c != Fe::ZERO && x[j] != Fe::ZERO {
                    acc = f.add(acc, f.mul(c, f.mul(x[i], x[j])));
                }
            }
        }
        Ok(acc)
    }

    /// Projective zeros of the form, ascending by id.
    pub fn singular_points(&self, space: &ProjectiveSpace) -> Result<Vec<PointId>, FormError> {
        self.split_points(space).map(|(s, _)| s)
    }

    /// Projective non-zeros of the form, ascending by id.
    pub fn nonsingular_points(&self, space: &ProjectiveSpace) -> Result<Vec<PointId>, FormError> {
        self.split_points(space).map(|(_, n)| n)
    }

    /// (singular, nonsingular) partition of the point set.
    pub fn split_points(
        &self,
        space: &ProjectiveSpace,
    ) -> Result<(Vec<PointId>, Vec<PointId>), FormError> {
        self.check_space(space)?;
        let mut singular = Vec::new();
        let mut nonsingular = Vec::new();
        for (id, pt) in space.points() {
            if self.eval(pt.coords())? == Fe::ZERO {
                singular.push(id);
            } else {
                nonsingular.push(id);
            }
        }
        Ok((singular, nonsingular))
    }

    fn check_space(&self, space: &ProjectiveSpace) -> Result<(), FormError> {
        if space.field().as_ref() != self.field.as_ref() {
            return Err(FormError::FieldMismatch);
        }
        if space.r() + 1 != self.dim {
            return Err(FormError::DimensionMismatch { form: self.dim, space: space.r() + 1 });
        }
        Ok(())
    }
}

/// A Hermitian form over GF(q), q a square, with respect to x -> x^(q'):
/// H(x) = sum over i, j of g[i][j] x_i conj(x_j), Gram = conjugate transpose.
#[derive(Clone)]
pub struct HermitianFormSpec {
    field: Arc<FieldSpec>,
    dim: usize,
    /// Frobenius power realizing the order-2 automorphism: conj = x^(p^(h/2)).
    conj_power: u32,
    gram: Vec<Fe>,
}

impl fmt::Debug for HermitianFormSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hermitian form on V({}, {})", self.dim, self.field.order())
    }
}

impl HermitianFormSpec {
    /// The standard form with identity Gram: H(x) = sum of x_i^(q' + 1).
    pub fn identity(field: &Arc<FieldSpec>, dim: usize) -> Result<HermitianFormSpec, FormError> {
        let mut gram = vec![Fe::ZERO; dim * dim];
        for i in 0..dim {
            gram[i * dim + i] = Fe::ONE;
        }
        HermitianFormSpec::with_gram(field, dim, gram)
    }

    pub fn with_gram(
        field: &Arc<FieldSpec>,
        dim: usize,
        gram: Vec<Fe>,
    ) -> Result<HermitianFormSpec, FormError> {
        if field.h() % 2 != 0 {
            return Err(FormError::FieldNotSquareOrder(field.order()));
        }
        assert_eq!(gram.len(), dim * dim);
        let conj_power = field.h() / 2;
        for i in 0..dim {
            for j in 0..dim {
                if gram[j * dim + i] != field.frobenius(gram[i * dim + j], conj_power) {
                    return Err(FormError::NotHermitian);
                }
            }
        }
        Ok(HermitianFormSpec { field: Arc::clone(field), dim, conj_power, gram })
    }

    /// Order of the fixed subfield GF(q').
    pub fn sub_order(&self) -> u32 {
        let p = self.field.p() as u64;
        p.pow(self.conj_power) as u32
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn conj(&self, x: Fe) -> Fe {
        self.field.frobenius(x, self.conj_power)
    }

    pub fn eval(&self, x: &[Fe]) -> Result<Fe, FormError> {
        if x.len() != self.dim {
            return Err(FormError::DimensionMismatch { form: self.dim, space: x.len() });
        }
        let f = &self.field;
        let mut acc = Fe::ZERO;
        for i in 0..self.dim {
            if x[i] == Fe::ZERO {
                continue;
            }
            for j in 0..self.dim {
                let g = self.gram[i * self.dim + j];
                if g != Fe::ZERO && x[j] != Fe::ZERO {
                    acc = f.add(acc, f.mul(g, f.mul(x[i], self.conj(x[j]))));
                }
            }
        }
        Ok(acc)
    }

    /// Projective zeros of the form, ascending by id.
    pub fn isotropic_points(&self, space: &ProjectiveSpace) -> Result<Vec<PointId>, FormError> {
        if space.field().as_ref() != self.field.as_ref() {
            return Err(FormError::FieldMismatch);
        }
        if space.r() + 1 != self.dim {
            return Err(FormError::DimensionMismatch { form: self.dim, space: space.r() + 1 });
        }
        let mut out = Vec::new();
        for (id, pt) in space.points() {
            if self.eval(pt.coords())? == Fe::ZERO {
                out.push(id);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::space::build_space;

    #[test]
    fn least_irreducible_pairs_match_hand_checks() {
        let expect = [(2, (1, 1)), (3, (0, 1)), (4, (1, 2)), (5, (0, 2)), (7, (0, 1)), (8, (1, 1)), (9, (0, 3))];
        for (q, (a, b)) in expect {
            let f = FieldSpec::of_order(q).unwrap();
            assert_eq!(
                least_irreducible_quadratic_pair(&f),
                (Fe(a), Fe(b)),
                "least irreducible pair over GF({q})"
            );
        }
    }

    #[test]
    fn quadric_zero_counts_dim_four() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let f = FieldSpec::of_order(q).unwrap();
            let s = build_space(&f, 3).unwrap();
            let ell = QuadraticFormSpec::elliptic(&f, 4).unwrap();
            assert_eq!(ell.singular_points(&s).unwrap().len() as u64, q * q + 1, "elliptic, q={q}");
            let hyp = QuadraticFormSpec::hyperbolic(&f, 4).unwrap();
            assert_eq!(
                hyp.singular_points(&s).unwrap().len() as u64,
                (q + 1) * (q + 1),
                "hyperbolic, q={q}"
            );
        }
    }

    #[test]
    fn hyperbolic_dim_eight_counts() {
        let f2 = FieldSpec::of_order(2).unwrap();
        let s2 = build_space(&f2, 7).unwrap();
        let h2 = QuadraticFormSpec::hyperbolic(&f2, 8).unwrap();
        let (sing, nonsing) = h2.split_points(&s2).unwrap();
        assert_eq!((sing.len(), nonsing.len()), (135, 120));

        let f3 = FieldSpec::of_order(3).unwrap();
        let s3 = build_space(&f3, 7).unwrap();
        let h3 = QuadraticFormSpec::hyperbolic(&f3, 8).unwrap();
        // (q^3 + 1)(q^4 - 1)/(q - 1) = 28 * 80 / 2.
        assert_eq!(h3.singular_points(&s3).unwrap().len(), 1120);
    }

    #[test]
    fn parabolic_conic_has_q_plus_one_points() {
        for q in [2u64, 3, 4, 5, 7] {
            let f = FieldSpec::of_order(q).unwrap();
            let s = build_space(&f, 2).unwrap();
            let par = QuadraticFormSpec::parabolic(&f, 3).unwrap();
            assert_eq!(par.singular_points(&s).unwrap().len() as u64, q + 1);
        }
    }

    #[test]
    fn elliptic_zeros_form_a_cap_hyperbolic_zeros_do_not() {
        let f = FieldSpec::of_order(3).unwrap();
        let s = build_space(&f, 3).unwrap();
        let ell = QuadraticFormSpec::elliptic(&f, 4).unwrap();
        let sing = ell.singular_points(&s).unwrap();
        for (i, &a) in sing.iter().enumerate() {
            for &b in &sing[i + 1..] {
                let line = s.line_points(a, b).unwrap();
                let inside = line.iter().filter(|p| sing.contains(p)).count();
                assert_eq!(inside, 2, "a quadric ovoid meets each of its secants twice");
            }
        }
        let hyp = QuadraticFormSpec::hyperbolic(&f, 4).unwrap();
        let hsing = hyp.singular_points(&s).unwrap();
        let mut found_line = false;
        'outer: for (i, &a) in hsing.iter().enumerate() {
            for &b in &hsing[i + 1..] {
                let line = s.line_points(a, b).unwrap();
                if line.iter().all(|p| hsing.contains(p)) {
                    found_line = true;
                    break 'outer;
                }
            }
        }
        assert!(found_line, "a hyperbolic quadric contains whole lines");
    }

    #[test]
    fn hermitian_curve_in_pg_2_4() {
        let f = FieldSpec::of_order(4).unwrap();
        let s = build_space(&f, 2).unwrap();
        let h = HermitianFormSpec::identity(&f, 3).unwrap();
        assert_eq!(h.sub_order(), 2);
        let iso = h.isotropic_points(&s).unwrap();
        assert_eq!(iso.len(), 9);
        // Tangent/secant split: every line meets the curve in 1 or 3 points.
        let mut meets = Vec::new();
        for a in s.ids() {
            for b in s.ids() {
                if a < b {
                    let line = s.line_points(a, b).unwrap();
                    if line[0] == a && line[1] == b {
                        meets.push(line.iter().filter(|p| iso.contains(p)).count());
                    }
                }
            }
        }
        assert_eq!(meets.len(), 21, "PG(2,4) has 21 lines");
        assert_eq!(meets.iter().filter(|&&m| m == 3).count(), 12);
        assert_eq!(meets.iter().filter(|&&m| m == 1).count(), 9);
    }

    #[test]
    fn hermitian_rejects_non_square_fields_and_non_hermitian_grams() {
        let f8 = FieldSpec::of_order(8).unwrap();
        assert_eq!(
            HermitianFormSpec::identity(&f8, 3).unwrap_err(),
            FormError::FieldNotSquareOrder(8)
        );
        let f4 = FieldSpec::of_order(4).unwrap();
        // gram[0][1] = omega but gram[1][0] != conj(omega) = omega^2.
        let gram = vec![Fe(1), Fe(2), Fe(2), Fe(1)];
        assert_eq!(
            HermitianFormSpec::with_gram(&f4, 2, gram).unwrap_err(),
            FormError::NotHermitian
        );
    }

    #[test]
    fn eval_matches_polynomial_by_hand() {
        let f = FieldSpec::of_order(3).unwrap();
        let ell = QuadraticFormSpec::elliptic(&f, 4).unwrap();
        // x0 x1 + x2^2 + x3^2 at (1, 2, 1, 1): 2 + 1 + 1 = 1 mod 3.
        assert_eq!(ell.eval(&[Fe(1), Fe(2), Fe(1), Fe(1)]).unwrap(), Fe(1));
        assert_eq!(ell.eval(&[Fe(1), Fe(0), Fe(0), Fe(0)]).unwrap(), Fe(0));
        assert!(ell.eval(&[Fe(1), Fe(0)]).is_err());
    }
}
