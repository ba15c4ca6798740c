//! Cap verification and counting: collinearity checks with witnesses, chord
//! numbers and profiles, the classical size bounds for caps in PG(r, q), and
//! an exhaustive maximum-cap search for small spaces.

use std::collections::HashMap;
use std::sync::Arc;

use crate::rational::Rational;
use crate::space::{PointId, ProjectiveSpace};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CapError {
    #[error("the point set is not a cap: points {a}, {b}, {c} are collinear")]
    NotACap { a: PointId, b: PointId, c: PointId },
    #[error("point {0} belongs to the set")]
    PointInSet(PointId),
    #[error("point id {id} out of range for a space with {points} points")]
    InvalidPoint { id: u32, points: usize },
    #[error("space has {points} points, over the search limit {limit}")]
    SpaceTooLargeForSearch { points: usize, limit: usize },
}

/// A set of points in one projective space, with O(1) membership.
#[derive(Clone)]
pub struct PointSet {
    space: Arc<ProjectiveSpace>,
    members: Vec<PointId>,
    mask: Vec<bool>,
}

impl std::fmt::Debug for PointSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PointSet({} of {:?})", self.members.len(), self.space)
    }
}

impl PointSet {
    pub fn new(
        space: &Arc<ProjectiveSpace>,
        ids: impl IntoIterator<Item = PointId>,
    ) -> Result<PointSet, CapError> {
        let n = space.num_points();
        let mut members: Vec<PointId> = ids.into_iter().collect();
        for &id in &members {
            if id.index() >= n {
                return Err(CapError::InvalidPoint { id: id.0, points: n });
            }
        }
        members.sort_unstable();
        members.dedup();
        let mut mask = vec![false; n];
        for &id in &members {
            mask[id.index()] = true;
        }
        Ok(PointSet { space: Arc::clone(space), members, mask })
    }

    pub fn space(&self) -> &Arc<ProjectiveSpace> {
        &self.space
    }

    pub fn members(&self) -> &[PointId] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, id: PointId) -> bool {
        self.mask[id.index()]
    }

    /// All points of the space outside this set, ascending.
    pub fn complement(&self) -> Vec<PointId> {
        self.space
            .ids()
            .filter(|id| !self.mask[id.index()])
            .collect()
    }
}

/// Outcome of a cap check; the witness is the first collinear triple found in
/// lexicographic pair-scan order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CapVerdict {
    pub is_cap: bool,
    pub witness: Option<(PointId, PointId, PointId)>,
}

/// Scans member pairs (a, b) in lexicographic order and checks the other
/// points of line(a, b) for membership; the first hit (a, b, c) is the
/// witness.
pub fn cap_verdict(s: &PointSet) -> CapVerdict {
    let space = &s.space;
    let mut buf = Vec::with_capacity(space.q() as usize);
    for (i, &a) in s.members.iter().enumerate() {
        for &b in &s.members[i + 1..] {
            buf.clear();
            space.other_line_points_into(a, b, &mut buf);
            if let Some(&c) = buf.iter().filter(|p| s.contains(**p)).min() {
                let mut t = [a, b, c];
                t.sort_unstable();
                return CapVerdict { is_cap: false, witness: Some((t[0], t[1], t[2])) };
            }
        }
    }
    CapVerdict { is_cap: true, witness: None }
}

pub fn is_cap(s: &PointSet) -> bool {
    cap_verdict(s).is_cap
}

fn require_cap(s: &PointSet) -> Result<(), CapError> {
    match cap_verdict(s) {
        CapVerdict { is_cap: true, .. } => Ok(()),
        CapVerdict { witness: Some((a, b, c)), .. } => Err(CapError::NotACap { a, b, c }),
        _ => unreachable!(),
    }
}

/// Chord counts of every point outside the cap.
#[derive(Clone, Debug)]
pub struct ChordProfile {
    externals: Vec<PointId>,
    counts: Vec<u64>,
    min: u64,
    max: u64,
}

impl ChordProfile {
    pub fn externals(&self) -> &[PointId] {
        &self.externals
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count_of(&self, x: PointId) -> Option<u64> {
        let i = self.externals.binary_search(&x).ok()?;
        Some(self.counts[i])
    }

    pub fn min(&self) -> u64 {
        self.min
    }

    pub fn max(&self) -> u64 {
        self.max
    }

    pub fn is_constant(&self) -> bool {
        self.min == self.max
    }

    pub fn constant_value(&self) -> Option<u64> {
        self.is_constant().then_some(self.min)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Chord counts for all external points in one pass over member pairs.
pub fn chord_profile(s: &PointSet) -> Result<ChordProfile, CapError> {
    require_cap(s)?;
    let space = &s.space;
    let mut counts = vec![0u64; space.num_points()];
    let mut buf = Vec::with_capacity(space.q() as usize);
    for (i, &a) in s.members.iter().enumerate() {
        for &b in &s.members[i + 1..] {
            buf.clear();
            space.other_line_points_into(a, b, &mut buf);
            for &t in &buf {
                debug_assert!(!s.contains(t));
                counts[t.index()] += 1;
            }
        }
    }
    let externals = s.complement();
    let counts: Vec<u64> = externals.iter().map(|x| counts[x.index()]).collect();
    let min = counts.iter().copied().min().unwrap_or(0);
    let max = counts.iter().copied().max().unwrap_or(0);
    Ok(ChordProfile { externals, counts, min, max })
}

/// Number of member pairs whose chord passes through x (which must be
/// outside the set). Groups members by the line joining them to x.
pub fn chord_number(s: &PointSet, x: PointId) -> Result<u64, CapError> {
    if s.contains(x) {
        return Err(CapError::PointInSet(x));
    }
    let space = &s.space;
    let mut per_line: HashMap<(PointId, PointId), u64> = HashMap::new();
    for &a in &s.members {
        let line = space.line_points(x, a).expect("x is external, so x != a");
        *per_line.entry((line[0], line[1])).or_insert(0) += 1;
    }
    Ok(per_line.values().map(|&g| g * (g - 1) / 2).sum())
}

/// k(k-1)(q-1)/(2m) as a reduced rational: the chord number every external
/// point of a transitive, co-transitive k-cap with m external points must
/// have.
pub fn expected_chord_number(k: u64, m: u64, q: u64) -> Rational {
    assert!(m >= 1 && q >= 2);
    Rational::new(k as i128 * (k as i128 - 1) * (q as i128 - 1), 2 * m as i128)
}

/// True iff the set can not be extended by any external point while staying a
/// cap: every external point lies on at least one chord.
pub fn is_complete(s: &PointSet) -> Result<bool, CapError> {
    let profile = chord_profile(s)?;
    Ok(profile.externals.is_empty() || profile.min >= 1)
}

/// Orbit sizes (k, m) of the point classes preserved by the stabilizer of a
/// symplectic spread of PG(9, q): k = (q^5-1)(q^2+1)/(q-1) points covered,
/// m = q^2 (q^5-1)(q^3-1)/(q-1) points outside.
pub fn a8_orbit_sizes(q: u64) -> (u64, u64) {
    let q5 = q.pow(5);
    (
        (q5 - 1) * (q * q + 1) / (q - 1),
        q * q * (q5 - 1) * (q.pow(3) - 1) / (q - 1),
    )
}

/// Chord rational of the a8_orbit_sizes pair, reduced by hand to
/// (q^2+1)(q^3+q+1)/(2q).
pub fn chord_formula_a8(q: u64) -> Rational {
    let q = q as i128;
    Rational::new((q * q + 1) * (q * q * q + q + 1), 2 * q)
}

/// Orbit sizes (k, m) of the point classes in PG(15, q) analogous to
/// a8_orbit_sizes: k = (q^8-1)(q^3+1)/(q-1), m = q^3 (q^8-1)(q^5-1)/(q-1).
pub fn a10_orbit_sizes(q: u64) -> (u64, u64) {
    let q8 = q.pow(8);
    (
        (q8 - 1) * (q.pow(3) + 1) / (q - 1),
        q.pow(3) * (q8 - 1) * (q.pow(5) - 1) / (q - 1),
    )
}

/// Chord rational of the a10_orbit_sizes pair, reduced by hand to
/// (q^3+1)(q^5+q^2+1)/(2q^2).
pub fn chord_formula_a10(q: u64) -> Rational {
    let q = q as i128;
    Rational::new((q.pow(3) + 1) * (q.pow(5) + q * q + 1), 2 * q * q)
}

/// The maximum size of a cap in PG(r, q), exact where known.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CapBound {
    pub value: u64,
    pub exact: bool,
}

/// m2(r, q): q+1 / q+2 in the plane (q odd / even), q^2+1 in PG(3, q>2),
/// 2^r over GF(2) (this covers PG(3, 2) as well), and the upper bound
/// q^(r-1) for r >= 4, q > 2.
pub fn cap_size_bound(r: u32, q: u64) -> CapBound {
    assert!(r >= 2 && q >= 2);
    if q == 2 {
        return CapBound { value: 1u64 << r, exact: true };
    }
    match r {
        2 if q % 2 == 1 => CapBound { value: q + 1, exact: true },
        2 => CapBound { value: q + 2, exact: true },
        3 => CapBound { value: q * q + 1, exact: true },
        _ => CapBound { value: q.pow(r - 1), exact: false },
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ComplementVerdict {
    /// Fewer than half the points of the space: |s| < (q^(r+1)-1)/(2(q-1)).
    Smaller,
    /// q = 2 and the complement is exactly a hyperplane.
    HyperplaneComplement,
    /// Neither case holds; no known cap does this.
    Violation,
}

/// Every cap either takes up less than half the space, or q = 2 and the cap
/// is the complement of a hyperplane.
pub fn complement_majority_check(s: &PointSet) -> Result<ComplementVerdict, CapError> {
    require_cap(s)?;
    let space = &s.space;
    let q = space.q() as u64;
    let r = space.r() as u32;
    let k = s.len() as u64;
    // k < (q^(r+1)-1) / (2(q-1)), cross-multiplied to stay in integers.
    if 2 * k * (q - 1) < q.pow(r + 1) - 1 {
        return Ok(ComplementVerdict::Smaller);
    }
    if q == 2 {
        let complement = s.complement();
        let dim = space.r() + 1;
        for packed in 1..(1u64 << dim) {
            let coeffs: Vec<crate::field::Fe> = (0..dim)
                .map(|i| crate::field::Fe(((packed >> (dim - 1 - i)) & 1) as u32))
                .collect();
            let hyp = space.hyperplane_points(&coeffs).expect("covector is nonzero");
            if hyp == complement {
                return Ok(ComplementVerdict::HyperplaneComplement);
            }
        }
    }
    Ok(ComplementVerdict::Violation)
}

/// A growing cap with undo support: each accepted point marks the rest of its
/// chords through existing members, so rejection is an O(1) counter test.
pub(crate) struct IncrementalCap<'a> {
    space: &'a ProjectiveSpace,
    member: Vec<bool>,
    covered: Vec<u32>,
    members: Vec<PointId>,
    trail: Vec<u32>,
    trail_marks: Vec<usize>,
    buf: Vec<PointId>,
}

impl<'a> IncrementalCap<'a> {
    pub fn new(space: &'a ProjectiveSpace) -> IncrementalCap<'a> {
        let n = space.num_points();
        IncrementalCap {
            space,
            member: vec![false; n],
            covered: vec![0; n],
            members: Vec::new(),
            trail: Vec::new(),
            trail_marks: Vec::new(),
            buf: Vec::with_capacity(space.q() as usize),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[PointId] {
        &self.members
    }

    /// True if p is neither a member nor on any chord.
    pub fn admissible(&self, p: PointId) -> bool {
        !self.member[p.index()] && self.covered[p.index()] == 0
    }

    pub fn try_push(&mut self, p: PointId) -> bool {
        if !self.admissible(p) {
            return false;
        }
        self.trail_marks.push(self.trail.len());
        for i in 0..self.members.len() {
            let m = self.members[i];
            self.buf.clear();
            self.space.other_line_points_into(m, p, &mut self.buf);
            for j in 0..self.buf.len() {
                let t = self.buf[j];
                // A member here would mean p was already on a marked chord.
                debug_assert!(!self.member[t.index()]);
                self.covered[t.index()] += 1;
                self.trail.push(t.0);
            }
        }
        self.member[p.index()] = true;
        self.members.push(p);
        true
    }

    pub fn pop(&mut self) {
        let p = self.members.pop().expect("pop on empty cap");
        self.member[p.index()] = false;
        let mark = self.trail_marks.pop().expect("mark per member");
        for &t in &self.trail[mark..] {
            self.covered[t as usize] -= 1;
        }
        self.trail.truncate(mark);
    }
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Refuse spaces with more points than this.
    pub max_points: usize,
    /// Seed the search with the standard non-collinear triple (PointIds 0, 1
    /// and q+1, three unit points). Any maximum cap is carried onto one
    /// containing that triple by some collineation, so the maximum size is
    /// unaffected; the returned example is then one such cap.
    pub fix_frame: bool,
}

impl Default for SearchOptions {
    fn default() -> SearchOptions {
        SearchOptions { max_points: 121, fix_frame: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub max_size: usize,
    pub example: Vec<PointId>,
    pub nodes: u64,
}

/// Exhaustive depth-first search for a maximum cap, extending in ascending
/// PointId order only; returns the first maximum-size cap in that order.
pub fn complete_cap_search(
    space: &Arc<ProjectiveSpace>,
    opts: &SearchOptions,
) -> Result<SearchResult, CapError> {
    let n = space.num_points();
    if n > opts.max_points {
        return Err(CapError::SpaceTooLargeForSearch { points: n, limit: opts.max_points });
    }
    let mut inc = IncrementalCap::new(space);
    let mut frame = Vec::new();
    if opts.fix_frame {
        let q = space.q();
        for id in [0, 1, q + 1] {
            let ok = inc.try_push(PointId(id));
            debug_assert!(ok, "unit points are never collinear");
        }
        frame = inc.members().to_vec();
    }
    let mut best = inc.members().to_vec();
    let mut nodes = 0u64;
    search_from(&mut inc, 0, &frame, &mut best, &mut nodes);
    Ok(SearchResult { max_size: best.len(), example: best, nodes })
}

fn search_from(
    inc: &mut IncrementalCap,
    from: u32,
    frame: &[PointId],
    best: &mut Vec<PointId>,
    nodes: &mut u64,
) {
    let n = inc.space.num_points() as u32;
    for id in from..n {
        if inc.len() + (n - id) as usize <= best.len() {
            break;
        }
        let p = PointId(id);
        if frame.contains(&p) {
            continue;
        }
        if inc.try_push(p) {
            *nodes += 1;
            if inc.len() > best.len() {
                *best = inc.members().to_vec();
            }
            search_from(inc, id + 1, frame, best, nodes);
            inc.pop();
        }
    }
}

/// First line (by lexicographic pair scan over members) lying entirely inside
/// the set, as its sorted point list.
pub fn first_line_within(s: &PointSet) -> Option<Vec<PointId>> {
    let space = &s.space;
    for (i, &a) in s.members.iter().enumerate() {
        for &b in &s.members[i + 1..] {
            let line = space.line_points(a, b).expect("a != b");
            if line[0] == a && line[1] == b && line.iter().all(|p| s.contains(*p)) {
                return Some(line);
            }
        }
    }
    None
}

/// First line (by lexicographic pair scan over non-members) disjoint from the
/// set, as its sorted point list.
pub fn first_line_avoiding(s: &PointSet) -> Option<Vec<PointId>> {
    let space = &s.space;
    let outside = s.complement();
    for (i, &a) in outside.iter().enumerate() {
        for &b in &outside[i + 1..] {
            let line = space.line_points(a, b).expect("a != b");
            if line[0] == a && line[1] == b && !line.iter().any(|p| s.contains(*p)) {
                return Some(line);
            }
        }
    }
    None
}
