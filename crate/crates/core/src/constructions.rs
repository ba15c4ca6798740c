//! Named point-set constructions.
//!
//! One half of this module builds the cap families with a point-transitive,
//! complement-transitive symmetry group (quadric ovoids, the Suzuki–Tits
//! ovoid, the six-point hyperoval, the Singer 11-cap, binary hyperplane
//! complements).  The other half builds the point sets that *fail* to be
//! caps — unions of complementary subspaces, pure-tensor (Segre) sets,
//! subfield subgeometries, an extraspecial-group vector orbit, and a
//! collinear unitary-orbit triple — each of which carries an explicit
//! collinear witness that disqualifies an entire family of group actions.
//!
//! Every builder asserts its advertised size formula before returning, so a
//! successful return already certifies the counting claim.

use std::sync::Arc;

use thiserror::Error;

use crate::cap::{cap_verdict, CapError, PointSet};
use crate::field::{subfield_embed, Fe, FieldError, FieldSpec};
use crate::forms::{FormError, QuadraticFormSpec};
use crate::linalg::Matrix;
use crate::singer::{build_singer, subgroup_orbits};
use crate::space::{build_space, PointId, ProjectiveSpace, SpaceError};

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Form(#[from] FormError),
    #[error(transparent)]
    Cap(#[from] CapError),
    #[error("parameter {name} = {value} rejected: {reason}")]
    BadParameter {
        name: &'static str,
        value: u64,
        reason: &'static str,
    },
    #[error("bad dimension: need {requirement}, got {got}")]
    BadDimension {
        requirement: &'static str,
        got: usize,
    },
    #[error("field order {q} is not the square of {s}")]
    NotASquare { q: u32, s: u32 },
}

/// Static metadata for one named construction, used by the command-line
/// front end for dispatch and self-description.
pub struct ConstructionDescriptor {
    pub name: &'static str,
    pub parameters: &'static str,
    pub size_formula: &'static str,
    pub expected_cap: bool,
    pub summary: &'static str,
}

pub fn descriptors() -> &'static [ConstructionDescriptor] {
    &[
        ConstructionDescriptor {
            name: "elliptic-quadric",
            parameters: "--q <prime power>",
            size_formula: "q^2 + 1",
            expected_cap: true,
            summary: "zeros of the fixed elliptic quadratic form in PG(3,q)",
        },
        ConstructionDescriptor {
            name: "hyperbolic-quadric",
            parameters: "--q <prime power>",
            size_formula: "(q + 1)^2",
            expected_cap: false,
            summary: "zeros of x0*x1 + x2*x3 in PG(3,q); carries ruling lines",
        },
        ConstructionDescriptor {
            name: "tits-ovoid",
            parameters: "--q <2^h, h odd, h >= 3>",
            size_formula: "q^2 + 1",
            expected_cap: true,
            summary: "the Suzuki-Tits ovoid of PG(3,q)",
        },
        ConstructionDescriptor {
            name: "hyperoval-pg24",
            parameters: "",
            size_formula: "6",
            expected_cap: true,
            summary: "conic plus nucleus in PG(2,4)",
        },
        ConstructionDescriptor {
            name: "hyperplane-complement",
            parameters: "--r <r >= 2>",
            size_formula: "2^r",
            expected_cap: true,
            summary: "points of PG(r,2) off the hyperplane x0 = 0",
        },
        ConstructionDescriptor {
            name: "cap11-pg43",
            parameters: "",
            size_formula: "11",
            expected_cap: true,
            summary: "orbit of an order-11 Singer subgroup of PG(4,3)",
        },
        ConstructionDescriptor {
            name: "direct-sum",
            parameters: "--q <prime power> --t <t >= 2>",
            size_formula: "2(q^t - 1)/(q - 1)",
            expected_cap: false,
            summary: "union of two complementary t-dimensional coordinate subspaces of PG(2t-1,q)",
        },
        ConstructionDescriptor {
            name: "pure-tensor",
            parameters: "--q <prime power> --b <b >= 2>",
            size_formula: "(q + 1)(q^b - 1)/(q - 1)",
            expected_cap: false,
            summary: "Segre set of pure tensors v (x) w in PG(2b-1,q), dim v = 2, dim w = b",
        },
        ConstructionDescriptor {
            name: "subgeometry",
            parameters: "--q <s^2> --s <prime power> --a <a >= 3>",
            size_formula: "(s^a - 1)/(s - 1)",
            expected_cap: false,
            summary: "subfield subgeometry PG(a-1,s) inside PG(a-1,q), with collinear witnesses on both sides",
        },
        ConstructionDescriptor {
            name: "extraspecial-orbits",
            parameters: "",
            size_formula: "five vector orbits of 16",
            expected_cap: false,
            summary: "orbits of an extraspecial 2-group of order 32 on the nonzero vectors of V(4,3)",
        },
        ConstructionDescriptor {
            name: "psu42-triple",
            parameters: "",
            size_formula: "3",
            expected_cap: false,
            summary: "three collinear points of PG(3,7) inside one orbit of the embedded unitary group",
        },
    ]
}

/// The q^2 + 1 projective zeros of the elliptic quadratic form
/// x0*x1 + x2^2 + a*x2*x3 + b*x3^2 (least irreducible pair (a,b)).
///
/// A complete cap for every prime power q; for q > 2 it attains the maximum
/// cap size of PG(3,q).
pub fn elliptic_quadric(q: u32) -> Result<PointSet, ConstructionError> {
    let f = FieldSpec::of_order(q as u64)?;
    let space = build_space(&f, 3)?;
    let form = QuadraticFormSpec::elliptic(&f, 4)?;
    let set = PointSet::new(&space, form.singular_points(&space)?)?;
    assert_eq!(set.len() as u64, u64::from(q) * u64::from(q) + 1);
    Ok(set)
}

/// The (q+1)^2 projective zeros of x0*x1 + x2*x3.  Never a cap: the surface
/// is ruled by two families of lines.
pub fn hyperbolic_quadric(q: u32) -> Result<PointSet, ConstructionError> {
    let f = FieldSpec::of_order(q as u64)?;
    let space = build_space(&f, 3)?;
    let form = QuadraticFormSpec::hyperbolic(&f, 4)?;
    let set = PointSet::new(&space, form.singular_points(&space)?)?;
    assert_eq!(set.len() as u64, (u64::from(q) + 1) * (u64::from(q) + 1));
    Ok(set)
}

/// The Suzuki–Tits ovoid of PG(3,q), q = 2^h with h odd and h >= 3:
///
/// ```text
/// { (1, s, t, s*t + s^(sigma+2) + t^sigma) : s, t in GF(q) } + { (0,0,0,1) }
/// ```
///
/// where sigma = 2^((h+1)/2) is the automorphism with sigma^2 = 2q.
pub fn tits_ovoid(q: u32) -> Result<PointSet, ConstructionError> {
    let f = FieldSpec::of_order(q as u64)?;
    if f.p() != 2 {
        return Err(ConstructionError::BadParameter {
            name: "q",
            value: u64::from(q),
            reason: "must be a power of two",
        });
    }
    let h = f.h();
    if h < 3 || h % 2 == 0 {
        return Err(ConstructionError::BadParameter {
            name: "q",
            value: u64::from(q),
            reason: "exponent of two must be odd and at least three",
        });
    }
    let sigma = 1u64 << ((h + 1) / 2);
    let space = build_space(&f, 3)?;
    let mut ids = vec![space.id_of(&[Fe::ZERO, Fe::ZERO, Fe::ZERO, Fe::ONE])?];
    for s in f.elements() {
        for t in f.elements() {
            let tail = f.add(
                f.add(f.mul(s, t), f.pow_u(s, sigma + 2)),
                f.pow_u(t, sigma),
            );
            ids.push(space.id_of(&[Fe::ONE, s, t, tail])?);
        }
    }
    let set = PointSet::new(&space, ids)?;
    assert_eq!(set.len() as u64, u64::from(q) * u64::from(q) + 1);
    Ok(set)
}

/// The six-point hyperoval of PG(2,4): the conic { (1, t, t^2) } with its
/// point at infinity (0,0,1) and its nucleus (0,1,0).
pub fn hyperoval_pg24() -> Result<PointSet, ConstructionError> {
    let f = FieldSpec::new(2, 2)?;
    let space = build_space(&f, 2)?;
    let mut ids = vec![
        space.id_of(&[Fe::ZERO, Fe::ZERO, Fe::ONE])?,
        space.id_of(&[Fe::ZERO, Fe::ONE, Fe::ZERO])?,
    ];
    for t in f.elements() {
        ids.push(space.id_of(&[Fe::ONE, t, f.mul(t, t)])?);
    }
    let set = PointSet::new(&space, ids)?;
    assert_eq!(set.len(), 6);
    Ok(set)
}

/// The 2^r points of PG(r,2) off the hyperplane x0 = 0.  Over GF(2) a line
/// meets this affine part in 0 or 2 points, so the complement of any
/// hyperplane is a (complete) cap.
pub fn hyperplane_complement(r: usize) -> Result<PointSet, ConstructionError> {
    if r < 2 {
        return Err(ConstructionError::BadDimension {
            requirement: "r >= 2",
            got: r,
        });
    }
    let f = FieldSpec::new(2, 1)?;
    let space = build_space(&f, r)?;
    let ids: Vec<PointId> = space
        .points()
        .filter(|(_, pt)| pt.coords()[0] != Fe::ZERO)
        .map(|(id, _)| id)
        .collect();
    let set = PointSet::new(&space, ids)?;
    assert_eq!(set.len(), 1usize << r);
    Ok(set)
}

/// The 11-cap of PG(4,3): the orbit of the first point under the order-11
/// subgroup of a Singer cycle.  All eleven orbits of that subgroup are caps
/// and partition the 121 points; this returns the one containing point 0.
pub fn cap11_pg43() -> Result<PointSet, ConstructionError> {
    let f = FieldSpec::new(3, 1)?;
    let space = build_space(&f, 4)?;
    let cycle = build_singer(&space);
    let partition = subgroup_orbits(&cycle, 11).expect("11 divides 121");
    let orbit = partition.orbits()[partition.orbit_of(PointId(0))].clone();
    let set = PointSet::new(&space, orbit)?;
    assert_eq!(set.len(), 11);
    Ok(set)
}

/// Union of the points of two complementary coordinate subspaces of PG(2t-1,q)
/// (coordinates 0..t and t..2t).  For t >= 2 each half contains whole lines,
/// so the union is never a cap.
pub fn direct_sum_union(
    space: &Arc<ProjectiveSpace>,
    t: usize,
) -> Result<PointSet, ConstructionError> {
    let dim = space.r() + 1;
    if t < 2 || dim != 2 * t {
        return Err(ConstructionError::BadDimension {
            requirement: "r + 1 = 2t with t >= 2",
            got: space.r(),
        });
    }
    let ids: Vec<PointId> = space
        .points()
        .filter(|(_, pt)| {
            let c = pt.coords();
            c[..t].iter().all(|&x| x == Fe::ZERO) || c[t..].iter().all(|&x| x == Fe::ZERO)
        })
        .map(|(id, _)| id)
        .collect();
    let q = u64::from(space.q());
    let set = PointSet::new(space, ids)?;
    assert_eq!(set.len() as u64, 2 * (q.pow(t as u32) - 1) / (q - 1));
    Ok(set)
}

/// The Segre set of pure tensors { v (x) w } in PG(2b-1,q), where v ranges
/// over a 2-dimensional and w over a b-dimensional space; coordinate i*b+j
/// of the product is v_i * w_j.  Fixing w and varying v sweeps out a line,
/// so the set is never a cap.
pub fn pure_tensor_points(
    space: &Arc<ProjectiveSpace>,
    b: usize,
) -> Result<PointSet, ConstructionError> {
    let dim = space.r() + 1;
    if b < 2 || dim != 2 * b {
        return Err(ConstructionError::BadDimension {
            requirement: "r + 1 = 2b with b >= 2",
            got: space.r(),
        });
    }
    let f = space.field();
    let mut ids = Vec::new();
    for v in canonical_vectors(f, 2) {
        for w in canonical_vectors(f, b) {
            let mut prod = vec![Fe::ZERO; dim];
            for i in 0..2 {
                for j in 0..b {
                    prod[i * b + j] = f.mul(v[i], w[j]);
                }
            }
            ids.push(space.id_of(&prod)?);
        }
    }
    let q = u64::from(space.q());
    let set = PointSet::new(space, ids)?;
    assert_eq!(
        set.len() as u64,
        (q + 1) * (q.pow(b as u32) - 1) / (q - 1)
    );
    Ok(set)
}

/// A subfield subgeometry with collinear triples on both sides of it.
pub struct SubgeometryWitnesses {
    /// Points of PG(a-1,q) whose canonical coordinates all lie in the
    /// embedded copy of GF(s); a copy of PG(a-1,s), never a cap for a >= 3.
    pub subgeometry: PointSet,
    /// Collinear triple inside the subgeometry (first line found).
    pub inside_triple: [PointId; 3],
    /// The explicit collinear triple u = e0 + s*e1, v = e1 + s*e2, u + v,
    /// with s the least field element outside the subfield; every one of its
    /// points lies outside the subgeometry.
    pub outside_triple: [PointId; 3],
}

pub fn subgeometry_witnesses(
    q: u32,
    s: u32,
    a: usize,
) -> Result<SubgeometryWitnesses, ConstructionError> {
    if u64::from(s) * u64::from(s) != u64::from(q) {
        return Err(ConstructionError::NotASquare { q, s });
    }
    if a < 3 {
        return Err(ConstructionError::BadDimension {
            requirement: "a >= 3 coordinates",
            got: a,
        });
    }
    let small = FieldSpec::of_order(u64::from(s))?;
    let big = FieldSpec::of_order(u64::from(q))?;
    let emb = subfield_embed(&small, &big)?;
    let space = build_space(&big, a - 1)?;
    let ids: Vec<PointId> = space
        .points()
        .filter(|(_, pt)| pt.coords().iter().all(|&c| emb.image_contains(c)))
        .map(|(id, _)| id)
        .collect();
    let subgeometry = PointSet::new(&space, ids)?;
    let s64 = u64::from(s);
    assert_eq!(
        subgeometry.len() as u64,
        (s64.pow(a as u32) - 1) / (s64 - 1)
    );

    // A subgeometry line has s + 1 < q + 1 points, so no ambient line lies
    // inside the set; the witness is a collinear triple, not a full line.
    let inside = cap_verdict(&subgeometry)
        .witness
        .expect("a subgeometry on >= 3 coordinates has collinear triples");
    let inside_triple = [inside.0, inside.1, inside.2];

    let sigma = big
        .elements()
        .find(|&c| !emb.image_contains(c))
        .expect("the subfield is proper");
    let mut u = vec![Fe::ZERO; a];
    u[0] = Fe::ONE;
    u[1] = sigma;
    let mut v = vec![Fe::ZERO; a];
    v[1] = Fe::ONE;
    v[2] = sigma;
    let w: Vec<Fe> = u.iter().zip(&v).map(|(&x, &y)| big.add(x, y)).collect();
    let outside_triple = [space.id_of(&u)?, space.id_of(&v)?, space.id_of(&w)?];
    for id in outside_triple {
        assert!(!subgeometry.contains(id), "witness point fell inside the subgeometry");
    }
    assert!(space.collinear(outside_triple[0], outside_triple[1], outside_triple[2])?);

    Ok(SubgeometryWitnesses {
        subgeometry,
        inside_triple,
        outside_triple,
    })
}

/// Orbits of an extraspecial 2-group of order 32 on the nonzero vectors of
/// V(4,3), with their projective images.
pub struct ExtraspecialOrbits {
    pub space: Arc<ProjectiveSpace>,
    /// The five vector orbits, each as an ascending list of packed vectors.
    pub vector_orbits: Vec<Vec<u64>>,
    /// Projective image of each vector orbit (eight points each).
    pub images: Vec<PointSet>,
}

/// Builds the central product of a dihedral and a quaternion group of order
/// eight inside GL(4,3) — generated by the Kronecker products s⊗I, d⊗I,
/// I⊗i, I⊗j of the 2x2 matrices
///
/// ```text
/// s = [0 1; 1 0]   d = [1 0; 0 -1]   i = [0 -1; 1 0]   j = [1 1; 1 -1]
/// ```
///
/// — and splits the 80 nonzero vectors of V(4,3) into its orbits.  There are
/// five orbits of size 16; each projective image has eight points and
/// contains a full line, so none of them is a cap.
pub fn extraspecial_vector_orbits() -> Result<ExtraspecialOrbits, ConstructionError> {
    let f = FieldSpec::new(3, 1)?;
    let space = build_space(&f, 3)?;
    let two = |a: u32, b: u32, c: u32, d: u32| {
        Matrix::from_rows(&[vec![Fe(a), Fe(b)], vec![Fe(c), Fe(d)]])
    };
    let s = two(0, 1, 1, 0);
    let d = two(1, 0, 0, 2);
    let qi = two(0, 2, 1, 0);
    let qj = two(1, 1, 1, 2);
    let id2 = Matrix::identity(2);
    let gens = [
        s.kron(&id2, &f),
        d.kron(&id2, &f),
        id2.kron(&qi, &f),
        id2.kron(&qj, &f),
    ];

    let dim = 4;
    let total = 81u64;
    let mut seen = vec![false; total as usize];
    let mut vector_orbits = Vec::new();
    let mut images = Vec::new();
    for start in 1..total {
        if seen[start as usize] {
            continue;
        }
        seen[start as usize] = true;
        let mut orbit = vec![start];
        let mut queue = vec![vector_from_packed(start, dim, 3)];
        while let Some(v) = queue.pop() {
            for g in &gens {
                let img = g.mul_vec(&v, &f);
                let packed = space.pack(&img);
                if !seen[packed as usize] {
                    seen[packed as usize] = true;
                    orbit.push(packed);
                    queue.push(img);
                }
            }
        }
        orbit.sort_unstable();
        let ids: Vec<PointId> = orbit
            .iter()
            .map(|&pv| space.id_of_packed(pv).expect("orbit vectors are nonzero"))
            .collect();
        images.push(PointSet::new(&space, ids)?);
        vector_orbits.push(orbit);
    }
    assert_eq!(vector_orbits.len(), 5);
    assert!(vector_orbits.iter().all(|o| o.len() == 16));
    Ok(ExtraspecialOrbits {
        space,
        vector_orbits,
        images,
    })
}

/// Three points of PG(3,7) lying in a single orbit of the unitary group
/// PSU(4,2) embedded in PGL(4,7), together with the checks that they are
/// collinear (the third vector is the sum of the first two).
pub struct Psu42Triple {
    pub space: Arc<ProjectiveSpace>,
    pub ids: [PointId; 3],
    pub collinear: bool,
    pub third_is_sum: bool,
}

pub fn psu42_triple() -> Result<Psu42Triple, ConstructionError> {
    let f = FieldSpec::new(7, 1)?;
    let space = build_space(&f, 3)?;
    let a = [Fe(1), Fe(0), Fe(0), Fe(0)];
    let b = [Fe(1), Fe(0), Fe(1), Fe(6)];
    let c = [Fe(2), Fe(0), Fe(1), Fe(6)];
    let sum: Vec<Fe> = a.iter().zip(&b).map(|(&x, &y)| f.add(x, y)).collect();
    let third_is_sum = sum == c;
    let ids = [space.id_of(&a)?, space.id_of(&b)?, space.id_of(&c)?];
    let collinear = space.collinear(ids[0], ids[1], ids[2])?;
    Ok(Psu42Triple {
        space,
        ids,
        collinear,
        third_is_sum,
    })
}

/// All nonzero vectors of GF(q)^len whose first nonzero coordinate is one,
/// in ascending packed order.
fn canonical_vectors(f: &FieldSpec, len: usize) -> Vec<Vec<Fe>> {
    let q = u64::from(f.order());
    let mut out = Vec::new();
    for packed in 1..q.pow(len as u32) {
        let v = vector_from_packed(packed, len, q);
        if v.iter().find(|&&c| c != Fe::ZERO) == Some(&Fe::ONE) {
            out.push(v);
        }
    }
    out
}

fn vector_from_packed(packed: u64, len: usize, q: u64) -> Vec<Fe> {
    let mut v = vec![Fe::ZERO; len];
    let mut x = packed;
    for i in (0..len).rev() {
        v[i] = Fe((x % q) as u32);
        x /= q;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cap::{chord_profile, first_line_within, is_cap, is_complete};
    use crate::singer::orbit_cap_filter;

    fn assert_constant_chords(set: &PointSet, expect: u64) {
        let profile = chord_profile(set).unwrap();
        assert!(profile.is_constant());
        assert_eq!(profile.constant_value(), Some(expect));
    }

    #[test]
    fn elliptic_quadrics_are_complete_caps() {
        for q in [2u32, 3, 4, 5] {
            let set = elliptic_quadric(q).unwrap();
            assert_eq!(set.len() as u32, q * q + 1);
            assert!(is_cap(&set), "q = {q}");
            assert!(is_complete(&set).unwrap(), "q = {q}");
        }
        // k = q^2+1 points, m = q^3+q external candidates: the constant
        // chord count is k(k-1)(q-1)/(2m) = q(q-1)/2.
        assert_constant_chords(&elliptic_quadric(3).unwrap(), 3);
        assert_constant_chords(&elliptic_quadric(4).unwrap(), 6);
        assert_constant_chords(&elliptic_quadric(5).unwrap(), 10);
    }

    #[test]
    fn hyperbolic_quadric_carries_a_line() {
        for q in [2u32, 3] {
            let set = hyperbolic_quadric(q).unwrap();
            assert_eq!(set.len() as u32, (q + 1) * (q + 1));
            let verdict = cap_verdict(&set);
            assert!(!verdict.is_cap, "ruled surface admitted as a cap");
            let (a, b, c) = verdict.witness.unwrap();
            for p in [a, b, c] {
                assert!(set.contains(p));
            }
            assert!(first_line_within(&set).is_some());
        }
    }

    #[test]
    fn tits_ovoid_at_q8() {
        let set = tits_ovoid(8).unwrap();
        assert_eq!(set.len(), 65);
        assert!(is_cap(&set));
        assert!(is_complete(&set).unwrap());
        // 65*64*7 / (2*520) = 28
        assert_constant_chords(&set, 28);
    }

    #[test]
    fn tits_ovoid_rejects_bad_orders() {
        assert!(matches!(
            tits_ovoid(4),
            Err(ConstructionError::BadParameter { .. })
        ));
        assert!(matches!(
            tits_ovoid(2),
            Err(ConstructionError::BadParameter { .. })
        ));
        assert!(matches!(
            tits_ovoid(9),
            Err(ConstructionError::BadParameter { .. })
        ));
        assert!(matches!(
            tits_ovoid(16),
            Err(ConstructionError::BadParameter { .. })
        ));
    }

    #[test]
    fn hyperoval_is_a_complete_six_cap() {
        let set = hyperoval_pg24().unwrap();
        assert_eq!(set.len(), 6);
        assert!(is_cap(&set));
        assert!(is_complete(&set).unwrap());
        // 6*5*3 / (2*15) = 3
        assert_constant_chords(&set, 3);
    }

    #[test]
    fn hyperplane_complements_are_complete_caps() {
        for r in 2..=6 {
            let set = hyperplane_complement(r).unwrap();
            assert_eq!(set.len(), 1usize << r);
            assert!(is_cap(&set), "r = {r}");
            assert!(is_complete(&set).unwrap(), "r = {r}");
            // k = 2^r, m = 2^r - 1, q - 1 = 1: constant chord count 2^(r-1).
            assert_constant_chords(&set, 1u64 << (r - 1));
        }
        assert!(matches!(
            hyperplane_complement(1),
            Err(ConstructionError::BadDimension { .. })
        ));
    }

    #[test]
    fn singer_cap_has_eleven_points_and_unit_chords() {
        let set = cap11_pg43().unwrap();
        assert_eq!(set.len(), 11);
        assert!(is_cap(&set));
        // 11*10*2 / (2*110) = 1
        assert_constant_chords(&set, 1);
        // Sibling orbits under the same subgroup are caps too.
        let cycle = build_singer(set.space());
        let partition = subgroup_orbits(&cycle, 11).unwrap();
        assert!(orbit_cap_filter(&partition).iter().all(|&ok| ok));
    }

    #[test]
    fn direct_sum_union_counts_and_fails() {
        let f = FieldSpec::new(3, 1).unwrap();
        let space = build_space(&f, 3).unwrap();
        let set = direct_sum_union(&space, 2).unwrap();
        assert_eq!(set.len(), 8);
        assert!(!is_cap(&set));
        let line = first_line_within(&set).unwrap();
        assert!(line.iter().all(|&p| set.contains(p)));

        let f2 = FieldSpec::new(2, 1).unwrap();
        let space6 = build_space(&f2, 5).unwrap();
        assert_eq!(direct_sum_union(&space6, 3).unwrap().len(), 14);
        assert!(matches!(
            direct_sum_union(&space, 3),
            Err(ConstructionError::BadDimension { .. })
        ));
    }

    #[test]
    fn pure_tensor_counts_and_fails() {
        let f = FieldSpec::new(2, 1).unwrap();
        let space = build_space(&f, 3).unwrap();
        let set = pure_tensor_points(&space, 2).unwrap();
        assert_eq!(set.len(), 9);
        assert_eq!(set.complement().len(), 6);
        assert!(!is_cap(&set));

        let f3 = FieldSpec::new(3, 1).unwrap();
        let space3 = build_space(&f3, 3).unwrap();
        let set3 = pure_tensor_points(&space3, 2).unwrap();
        assert_eq!(set3.len(), 16);
        assert!(!is_cap(&set3));
    }

    #[test]
    fn subgeometry_witnesses_both_sides() {
        let w = subgeometry_witnesses(4, 2, 4).unwrap();
        assert_eq!(w.subgeometry.len(), 15);
        assert!(!is_cap(&w.subgeometry));
        let space = w.subgeometry.space().clone();
        assert!(space
            .collinear(w.inside_triple[0], w.inside_triple[1], w.inside_triple[2])
            .unwrap());
        for p in w.inside_triple {
            assert!(w.subgeometry.contains(p));
        }
        assert!(space
            .collinear(w.outside_triple[0], w.outside_triple[1], w.outside_triple[2])
            .unwrap());
        for p in w.outside_triple {
            assert!(!w.subgeometry.contains(p));
        }

        let w9 = subgeometry_witnesses(9, 3, 3).unwrap();
        assert_eq!(w9.subgeometry.len(), 13);
        assert!(!is_cap(&w9.subgeometry));

        assert!(matches!(
            subgeometry_witnesses(8, 2, 4),
            Err(ConstructionError::NotASquare { .. })
        ));
    }

    #[test]
    fn extraspecial_orbits_partition_and_fail() {
        let orbits = extraspecial_vector_orbits().unwrap();
        assert_eq!(orbits.vector_orbits.len(), 5);
        let mut all: Vec<u64> = orbits.vector_orbits.concat();
        all.sort_unstable();
        assert_eq!(all, (1..81).collect::<Vec<u64>>());
        for (orbit, image) in orbits.vector_orbits.iter().zip(&orbits.images) {
            assert_eq!(orbit.len(), 16);
            assert_eq!(image.len(), 8);
            let verdict = cap_verdict(image);
            assert!(!verdict.is_cap, "extraspecial orbit image admitted as a cap");
            let (a, b, c) = verdict.witness.unwrap();
            for p in [a, b, c] {
                assert!(image.contains(p));
            }
        }
    }

    #[test]
    fn psu42_triple_is_collinear() {
        let t = psu42_triple().unwrap();
        assert!(t.collinear);
        assert!(t.third_is_sum);
        let normalized = t
            .space
            .normalize(&[Fe(2), Fe(0), Fe(1), Fe(6)])
            .unwrap();
        assert_eq!(normalized.coords(), &[Fe(1), Fe(0), Fe(4), Fe(3)]);
    }
}
