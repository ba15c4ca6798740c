//! The projective space PG(r, q): canonical point enumeration, scalar-class
//! normalization, and incidence primitives (lines, hyperplanes, collinearity).
//!
//! Points are scalar classes of nonzero vectors in V(r+1, q). The canonical
//! representative has first nonzero coordinate one, and points are numbered in
//! lexicographic order of their canonical coordinate tuples, so PointId 0 is
//! always (0, ..., 0, 1). A dense table maps every nonzero vector (packed as a
//! base-q integer, big-endian in the coordinates) straight to its PointId,
//! which keeps the hot loops free of normalization.

use std::fmt;
use std::sync::Arc;

use crate::field::{Fe, FieldSpec};
use crate::linalg;

/// Default ceiling on the number of points a space may have.
pub const DEFAULT_POINT_LIMIT: u64 = 600_000;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SpaceError {
    #[error("projective space would have {points} points, over the limit {limit}")]
    SpaceTooLarge { points: u64, limit: u64 },
    #[error("the zero vector has no projective point")]
    ZeroVector,
    #[error("arguments must be distinct points")]
    DuplicatePoints,
    #[error("expected a vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Index of a point in the canonical enumeration of its space.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PointId(pub u32);

impl PointId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for PointId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A projective point in canonical form (first nonzero coordinate is one).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProjPoint {
    coords: Vec<Fe>,
}

impl ProjPoint {
    pub fn coords(&self) -> &[Fe] {
        &self.coords
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub struct ProjectiveSpace {
    field: Arc<FieldSpec>,
    r: usize,
    points: Vec<ProjPoint>,
    /// packed vector -> point id; u32::MAX at index 0 (the zero vector).
    point_of_vec: Vec<u32>,
    /// q^i for i = 0..=r+1, little-endian powers for packing.
    powers: Vec<u64>,
}

impl fmt::Debug for ProjectiveSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PG({}, {})", self.r, self.field.order())
    }
}

/// Builds PG(r, q) under the default point limit.
pub fn build_space(field: &Arc<FieldSpec>, r: usize) -> Result<Arc<ProjectiveSpace>, SpaceError> {
    build_space_limited(field, r, DEFAULT_POINT_LIMIT)
}

/// Builds PG(r, q) if its point count does not exceed `limit`.
pub fn build_space_limited(
    field: &Arc<FieldSpec>,
    r: usize,
    limit: u64,
) -> Result<Arc<ProjectiveSpace>, SpaceError> {
    assert!(r >= 1, "projective dimension must be at least 1");
    let q = field.order() as u64;
    let dim = r + 1;
    let mut n_points = 0u64;
    let mut pw = 1u64;
    for _ in 0..dim {
        n_points += pw;
        pw = pw
            .checked_mul(q)
            .ok_or(SpaceError::SpaceTooLarge { points: u64::MAX, limit })?;
    }
    if n_points > limit {
        return Err(SpaceError::SpaceTooLarge { points: n_points, limit });
    }
    let n_vectors = pw as usize;

    let mut powers = vec![1u64; dim + 1];
    for i in 1..=dim {
        powers[i] = powers[i - 1] * q;
    }

    // Canonical representatives in increasing packed order = lexicographic
    // order of coordinate tuples (coordinate 0 is the most significant digit).
    let mut points = Vec::with_capacity(n_points as usize);
    let mut point_of_vec = vec![u32::MAX; n_vectors];
    for lead in (0..dim).rev() {
        // Leading position `lead`: coords 0..lead are zero, coords[lead] = 1.
        let free = dim - lead - 1;
        for tail in 0..powers[free] {
            let mut coords = vec![Fe::ZERO; dim];
            coords[lead] = Fe::ONE;
            let mut rest = tail;
            for i in (lead + 1..dim).rev() {
                coords[i] = Fe((rest % q) as u32);
                rest /= q;
            }
            points.push(ProjPoint { coords });
        }
    }
    debug_assert_eq!(points.len() as u64, n_points);

    let space_powers = powers.clone();
    let mut scratch = vec![Fe::ZERO; dim];
    for (id, pt) in points.iter().enumerate() {
        for lambda in field.elements() {
            if lambda == Fe::ZERO {
                continue;
            }
            for (s, &c) in scratch.iter_mut().zip(&pt.coords) {
                *s = field.mul(lambda, c);
            }
            let packed = pack_with(&space_powers, &scratch);
            point_of_vec[packed as usize] = id as u32;
        }
    }
    debug_assert!(point_of_vec[1..].iter().all(|&v| v != u32::MAX));

    Ok(Arc::new(ProjectiveSpace {
        field: Arc::clone(field),
        r,
        points,
        point_of_vec,
        powers,
    }))
}

fn pack_with(powers: &[u64], coords: &[Fe]) -> u64 {
    let dim = coords.len();
    let mut acc = 0u64;
    for (i, &c) in coords.iter().enumerate() {
        acc += c.0 as u64 * powers[dim - 1 - i];
    }
    acc
}

impl ProjectiveSpace {
    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn q(&self) -> u32 {
        self.field.order()
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn point(&self, id: PointId) -> &ProjPoint {
        &self.points[id.index()]
    }

    pub fn points(&self) -> impl Iterator<Item = (PointId, &ProjPoint)> {
        self.points
            .iter()
            .enumerate()
            .map(|(i, p)| (PointId(i as u32), p))
    }

    pub fn ids(&self) -> impl Iterator<Item = PointId> {
        (0..self.points.len() as u32).map(PointId)
    }

    /// Packs a coordinate vector as a base-q integer, coordinate 0 most
    /// significant.
    pub fn pack(&self, coords: &[Fe]) -> u64 {
        debug_assert_eq!(coords.len(), self.r + 1);
        pack_with(&self.powers, coords)
    }

    /// Point of an arbitrary nonzero vector, via the dense lookup table.
    pub fn id_of(&self, coords: &[Fe]) -> Result<PointId, SpaceError> {
        if coords.len() != self.r + 1 {
            return Err(SpaceError::DimensionMismatch {
                expected: self.r + 1,
                got: coords.len(),
            });
        }
        self.id_of_packed(self.pack(coords)).ok_or(SpaceError::ZeroVector)
    }

    /// Point of a packed nonzero vector; None for the zero vector.
    pub fn id_of_packed(&self, packed: u64) -> Option<PointId> {
        let raw = self.point_of_vec[packed as usize];
        (raw != u32::MAX).then_some(PointId(raw))
    }

    /// Scales a nonzero vector so its first nonzero coordinate is one.
    pub fn normalize(&self, coords: &[Fe]) -> Result<ProjPoint, SpaceError> {
        let id = self.id_of(coords)?;
        Ok(self.points[id.index()].clone())
    }

    /// True iff the three distinct points span at most a line.
    pub fn collinear(&self, a: PointId, b: PointId, c: PointId) -> Result<bool, SpaceError> {
        if a == b || a == c || b == c {
            return Err(SpaceError::DuplicatePoints);
        }
        let rows = vec![
            self.points[a.index()].coords.clone(),
            self.points[b.index()].coords.clone(),
            self.points[c.index()].coords.clone(),
        ];
        Ok(linalg::rank(&rows, &self.field) <= 2)
    }

    /// The q+1 points of the line through a and b, ascending by id.
    pub fn line_points(&self, a: PointId, b: PointId) -> Result<Vec<PointId>, SpaceError> {
        if a == b {
            return Err(SpaceError::DuplicatePoints);
        }
        let mut out = vec![a, b];
        self.other_line_points_into(a, b, &mut out);
        out.sort_unstable();
        Ok(out)
    }

    /// Appends the q-1 points of line(a, b) other than a and b themselves.
    pub fn other_line_points_into(&self, a: PointId, b: PointId, out: &mut Vec<PointId>) {
        debug_assert_ne!(a, b);
        let f = &self.field;
        let pa = &self.points[a.index()].coords;
        let pb = &self.points[b.index()].coords;
        let dim = self.r + 1;
        for lambda in f.elements() {
            if lambda == Fe::ZERO {
                continue;
            }
            let mut packed = 0u64;
            for i in 0..dim {
                let c = f.add(f.mul(lambda, pa[i]), pb[i]);
                packed += c.0 as u64 * self.powers[dim - 1 - i];
            }
            out.push(self.id_of_packed(packed).expect("lambda*a + b is nonzero"));
        }
    }

    /// All points x with coeffs . x = 0; the coefficient covector must be
    /// nonzero.
    pub fn hyperplane_points(&self, coeffs: &[Fe]) -> Result<Vec<PointId>, SpaceError> {
        if coeffs.len() != self.r + 1 {
            return Err(SpaceError::DimensionMismatch {
                expected: self.r + 1,
                got: coeffs.len(),
            });
        }
        if coeffs.iter().all(|&c| c == Fe::ZERO) {
            return Err(SpaceError::ZeroVector);
        }
        let f = &self.field;
        let mut out = Vec::new();
        for (id, pt) in self.points() {
            let mut acc = Fe::ZERO;
            for (&ci, &xi) in coeffs.iter().zip(&pt.coords) {
                acc = f.add(acc, f.mul(ci, xi));
            }
            if acc == Fe::ZERO {
                out.push(id);
            }
        }
        Ok(out)
    }
}
