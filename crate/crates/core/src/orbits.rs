//! Collineations of PG(r, q) (matrices plus field automorphisms), orbit
//! closure under a generator list, and a brute-force setwise stabilizer
//! enumeration that certifies transitivity on a point set and its complement
//! when the full collineation group is small enough to enumerate.

use std::sync::Arc;

use crate::cap::{chord_profile, expected_chord_number, PointSet};
use crate::field::Fe;
use crate::linalg::{Echelon, Matrix};
use crate::rational::Rational;
use crate::space::{PointId, ProjectiveSpace};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum OrbitError {
    #[error("matrix of size {matrix} does not act on a space of dimension {space}")]
    DimensionMismatch { matrix: usize, space: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("collineation group has {order} elements, over the enumeration limit {limit}")]
    GroupTooLarge { order: u128, limit: u64 },
}

/// A semilinear collineation x -> M * frobenius^f(x).
#[derive(Clone, Debug)]
pub struct Collineation {
    matrix: Matrix,
    frob: u32,
}

impl Collineation {
    pub fn new(matrix: Matrix, frob: u32) -> Collineation {
        Collineation { matrix, frob }
    }

    pub fn linear(matrix: Matrix) -> Collineation {
        Collineation { matrix, frob: 0 }
    }

    pub fn identity(dim: usize) -> Collineation {
        Collineation { matrix: Matrix::identity(dim), frob: 0 }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn frob(&self) -> u32 {
        self.frob
    }

    /// Image of a point: normalize(M * x^(p^f)).
    pub fn apply(&self, space: &ProjectiveSpace, x: PointId) -> Result<PointId, OrbitError> {
        let dim = space.r() + 1;
        if self.matrix.n() != dim {
            return Err(OrbitError::DimensionMismatch { matrix: self.matrix.n(), space: dim });
        }
        let f = space.field();
        let coords: Vec<Fe> = space
            .point(x)
            .coords()
            .iter()
            .map(|&c| f.frobenius(c, self.frob))
            .collect();
        let image = self.matrix.mul_vec(&coords, f);
        space.id_of(&image).map_err(|_| OrbitError::SingularMatrix)
    }
}

/// Orbits of the group generated by a list of collineations.
#[derive(Debug)]
pub struct OrbitResult {
    orbits: Vec<Vec<PointId>>,
    orbit_of: Vec<u32>,
}

impl OrbitResult {
    pub fn orbits(&self) -> &[Vec<PointId>] {
        &self.orbits
    }

    pub fn orbit_of(&self, p: PointId) -> usize {
        self.orbit_of[p.index()] as usize
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }
}

/// Breadth-first orbit closure; orbits sorted by least point id, members
/// ascending, so the result does not depend on generator order.
pub fn point_orbits(
    space: &Arc<ProjectiveSpace>,
    gens: &[Collineation],
) -> Result<OrbitResult, OrbitError> {
    let n = space.num_points();
    let mut orbit_of = vec![u32::MAX; n];
    let mut orbits: Vec<Vec<PointId>> = Vec::new();
    for start in space.ids() {
        if orbit_of[start.index()] != u32::MAX {
            continue;
        }
        let label = orbits.len() as u32;
        let mut members = vec![start];
        orbit_of[start.index()] = label;
        let mut queue = vec![start];
        while let Some(x) = queue.pop() {
            for g in gens {
                let y = g.apply(space, x)?;
                if orbit_of[y.index()] == u32::MAX {
                    orbit_of[y.index()] = label;
                    members.push(y);
                    queue.push(y);
                }
            }
        }
        members.sort_unstable();
        orbits.push(members);
    }
    Ok(OrbitResult { orbits, orbit_of })
}

/// |PGL(n, q)| = (q^n - 1)(q^n - q) ... (q^n - q^(n-1)) / (q - 1).
pub fn pgl_order(n: u32, q: u64) -> u128 {
    assert!(n >= 2);
    let qn = (q as u128).pow(n);
    let mut acc = 1u128;
    let mut qi = 1u128;
    for _ in 0..n {
        acc *= qn - qi;
        qi *= q as u128;
    }
    acc / (q as u128 - 1)
}

/// What the brute-force enumeration of the full collineation group found
/// about one point set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StabilizerCertificate {
    /// Order of the group enumerated: |PGL(r+1, q)| * h.
    pub group_order: u64,
    /// Number of group elements fixing the set setwise.
    pub stabilizer_order: u64,
    pub transitive_on_set: bool,
    pub transitive_on_complement: bool,
    pub set_orbit_count: usize,
    pub complement_orbit_count: usize,
}

/// Enumerates every semilinear collineation (matrices with first nonzero
/// entry 1, in row-lexicographic order with rank pruning, times Frobenius
/// powers), keeps those mapping the set onto itself, and reports the orbit
/// structure the stabilizer induces on the set and its complement.
pub fn setwise_stabilizer_bruteforce(
    s: &PointSet,
    limit: u64,
) -> Result<StabilizerCertificate, OrbitError> {
    let space = s.space();
    let f = space.field();
    let dim = space.r() + 1;
    let h = f.h();
    let group = pgl_order(dim as u32, f.order() as u64) * h as u128;
    if group > limit as u128 {
        return Err(OrbitError::GroupTooLarge { order: group, limit });
    }
    let n = space.num_points();

    // Frobenius powers permute canonical points; precompute those maps.
    let frob_point: Vec<Vec<u32>> = (0..h)
        .map(|k| {
            space
                .points()
                .map(|(_, pt)| {
                    let img: Vec<Fe> = pt.coords().iter().map(|&c| f.frobenius(c, k)).collect();
                    space.id_of(&img).expect("Frobenius preserves nonzero").0
                })
                .collect()
        })
        .collect();

    let mut enumeration = StabilizerEnumeration {
        set: s,
        space,
        frob_point,
        rows: vec![Vec::new(); dim],
        echelon: Echelon::new(dim),
        stab_count: 0u64,
        uf: UnionFind::new(n),
    };
    enumeration.recurse(0);

    let StabilizerEnumeration { stab_count, mut uf, .. } = enumeration;
    let (set_orbit_count, complement_orbit_count) = {
        let mut set_roots = Vec::new();
        let mut comp_roots = Vec::new();
        for id in space.ids() {
            let root = uf.find(id.0);
            if s.contains(id) {
                set_roots.push(root);
            } else {
                comp_roots.push(root);
            }
        }
        set_roots.sort_unstable();
        set_roots.dedup();
        comp_roots.sort_unstable();
        comp_roots.dedup();
        (set_roots.len(), comp_roots.len())
    };
    Ok(StabilizerCertificate {
        group_order: group as u64,
        stabilizer_order: stab_count,
        transitive_on_set: set_orbit_count <= 1,
        transitive_on_complement: complement_orbit_count <= 1,
        set_orbit_count,
        complement_orbit_count,
    })
}

struct StabilizerEnumeration<'a> {
    set: &'a PointSet,
    space: &'a Arc<ProjectiveSpace>,
    frob_point: Vec<Vec<u32>>,
    rows: Vec<Vec<Fe>>,
    echelon: Echelon,
    stab_count: u64,
    uf: UnionFind,
}

impl StabilizerEnumeration<'_> {
    fn recurse(&mut self, level: usize) {
        let dim = self.space.r() + 1;
        let f = self.space.field().clone();
        if level == dim {
            self.process_matrix();
            return;
        }
        if level == 0 {
            // First nonzero entry of the matrix fixed to 1: row 0 runs over
            // canonical point representatives only.
            for i in 0..self.space.num_points() {
                let row = self.space.point(PointId(i as u32)).coords().to_vec();
                let ok = self.echelon.try_insert(&row, &f);
                debug_assert!(ok);
                self.rows[0] = row;
                self.recurse(1);
                self.echelon.pop();
            }
            return;
        }
        let q = f.order() as u64;
        let total = q.pow(dim as u32);
        let mut row = vec![Fe::ZERO; dim];
        for packed in 1..total {
            let mut rest = packed;
            for i in (0..dim).rev() {
                row[i] = Fe((rest % q) as u32);
                rest /= q;
            }
            if self.echelon.try_insert(&row, &f) {
                self.rows[level] = row.clone();
                self.recurse(level + 1);
                self.echelon.pop();
            }
        }
    }

    /// All rows chosen and independent: test each Frobenius companion.
    fn process_matrix(&mut self) {
        let space = self.space;
        let f = space.field();
        let members = self.set.members();
        'frob: for k in 0..self.frob_point.len() {
            for &m in members {
                let pre = self.frob_point[k][m.index()];
                let coords = space.point(PointId(pre)).coords();
                let mut packed = 0u64;
                for row in &self.rows {
                    let mut acc = Fe::ZERO;
                    for (j, &c) in coords.iter().enumerate() {
                        if row[j] != Fe::ZERO && c != Fe::ZERO {
                            acc = f.add(acc, f.mul(row[j], c));
                        }
                    }
                    packed = packed * f.order() as u64 + acc.0 as u64;
                }
                let image = space.id_of_packed(packed).expect("matrix is invertible");
                if !self.set.contains(image) {
                    continue 'frob;
                }
            }
            // Setwise stabilizer element found: fold its permutation into the
            // orbit structure.
            self.stab_count += 1;
            for id in 0..space.num_points() as u32 {
                let pre = self.frob_point[k][id as usize];
                let coords = space.point(PointId(pre)).coords();
                let mut packed = 0u64;
                for row in &self.rows {
                    let mut acc = Fe::ZERO;
                    for (j, &c) in coords.iter().enumerate() {
                        if row[j] != Fe::ZERO && c != Fe::ZERO {
                            acc = f.add(acc, f.mul(row[j], c));
                        }
                    }
                    packed = packed * f.order() as u64 + acc.0 as u64;
                }
                let image = space.id_of_packed(packed).expect("matrix is invertible");
                self.uf.union(id, image.0);
            }
        }
    }
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n as u32).collect() }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra.max(rb) as usize] = ra.min(rb);
        }
    }
}

/// The chord-profile test: a co-transitive cap must give every external point
/// the same chord number, and that number must be the integer
/// k(k-1)(q-1)/(2m). Necessary, not sufficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CotransitivityCheck {
    pub is_constant: bool,
    pub observed: Option<u64>,
    pub expected: Rational,
    pub passes: bool,
}

pub fn cotransitivity_necessary(s: &PointSet) -> Result<CotransitivityCheck, crate::cap::CapError> {
    let profile = chord_profile(s)?;
    let k = s.len() as u64;
    let m = profile.externals().len() as u64;
    let q = s.space().q() as u64;
    let expected = expected_chord_number(k, m.max(1), q);
    let observed = profile.constant_value();
    let passes = profile.is_constant()
        && expected.is_integer()
        && observed.map(|c| c as i128) == expected.as_integer();
    Ok(CotransitivityCheck { is_constant: profile.is_constant(), observed, expected, passes })
}
