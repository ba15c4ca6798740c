//! Singer cycles: a cyclic group acting regularly on the points of PG(r, q),
//! realized as powers of the companion matrix of a primitive polynomial.
//! Subgroup orbits, per-orbit cap filtering, exhaustive searches for caps that
//! are unions of whole orbits, and the two-orbit parity and length arithmetic
//! used to rule candidate cap sizes out.

use std::sync::Arc;

use crate::cap::{is_cap, IncrementalCap, PointSet};
use crate::field::{is_prime_u64, Fe};
use crate::linalg::Matrix;
use crate::polynomial;
use crate::space::{PointId, ProjectiveSpace};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SingerError {
    #[error("{given} does not divide the cycle order {n}")]
    NotADivisor { n: u64, given: u64 },
    #[error("no union of size-{orbit_size} orbits can have {target} points")]
    TargetInfeasible { orbit_size: usize, target: usize },
    #[error("N = v*m1 = {n} does not divide p^d - 1 = {modulus}")]
    DivisibilityViolation { n: u64, modulus: u64 },
}

/// A generator of a cyclic group acting regularly on points: the companion
/// matrix of the least primitive degree-(r+1) polynomial over GF(q), together
/// with its full point cycle.
pub struct SingerCycle {
    space: Arc<ProjectiveSpace>,
    matrix: Matrix,
    /// Point visiting order: cycle[i+1] = matrix * cycle[i]; length n.
    cycle: Vec<PointId>,
    /// Inverse of `cycle`: position in the cycle of every point.
    position: Vec<u32>,
}

impl SingerCycle {
    pub fn space(&self) -> &Arc<ProjectiveSpace> {
        &self.space
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Number of points, which is also the order of the point action.
    pub fn order(&self) -> u64 {
        self.cycle.len() as u64
    }

    pub fn cycle(&self) -> &[PointId] {
        &self.cycle
    }

    /// Image of a point under the generator.
    pub fn apply(&self, p: PointId) -> PointId {
        let i = self.position[p.index()] as usize;
        self.cycle[(i + 1) % self.cycle.len()]
    }
}

/// Builds the Singer cycle of the space and verifies the regular action.
pub fn build_singer(space: &Arc<ProjectiveSpace>) -> SingerCycle {
    let f = space.field();
    let dim = space.r() + 1;
    let modulus = polynomial::find_primitive_poly(f, dim as u32);
    let mut matrix = Matrix::identity(dim);
    for i in 0..dim {
        for j in 0..dim {
            let v = if j + 1 == dim {
                f.neg(modulus[i])
            } else if i == j + 1 {
                Fe::ONE
            } else {
                Fe::ZERO
            };
            matrix.set(i, j, v);
        }
    }
    let n = space.num_points();
    let mut cycle = Vec::with_capacity(n);
    let mut position = vec![u32::MAX; n];
    let mut coords = vec![Fe::ZERO; dim];
    coords[0] = Fe::ONE;
    let mut current = space.id_of(&coords).expect("e0 is nonzero");
    for step in 0..n {
        assert_eq!(position[current.index()], u32::MAX, "cycle revisited a point early");
        position[current.index()] = step as u32;
        cycle.push(current);
        coords = matrix.mul_vec(&coords, f);
        current = space.id_of(&coords).expect("matrix is invertible");
    }
    assert_eq!(current, cycle[0], "point action order must be exactly n");
    SingerCycle { space: Arc::clone(space), matrix, cycle, position }
}

/// Orbits of the subgroup generated by the N-th power of the generator.
#[derive(Debug)]
pub struct OrbitPartition {
    orbits: Vec<Vec<PointId>>,
    orbit_of: Vec<u32>,
    space: Arc<ProjectiveSpace>,
}

impl OrbitPartition {
    pub fn orbits(&self) -> &[Vec<PointId>] {
        &self.orbits
    }

    pub fn orbit_of(&self, p: PointId) -> usize {
        self.orbit_of[p.index()] as usize
    }

    pub fn space(&self) -> &Arc<ProjectiveSpace> {
        &self.space
    }
}

/// Residue classes of the cycle positions mod N: exactly N orbits of size
/// n/N. Orbits are sorted by their least point id, points within an orbit
/// ascending.
pub fn subgroup_orbits(cycle: &SingerCycle, n_div: u64) -> Result<OrbitPartition, SingerError> {
    let n = cycle.order();
    if n_div == 0 || n % n_div != 0 {
        return Err(SingerError::NotADivisor { n, given: n_div });
    }
    let n_div = n_div as usize;
    let mut orbits: Vec<Vec<PointId>> = vec![Vec::with_capacity(n as usize / n_div); n_div];
    for (i, &p) in cycle.cycle().iter().enumerate() {
        orbits[i % n_div].push(p);
    }
    for orbit in &mut orbits {
        orbit.sort_unstable();
    }
    orbits.sort_by_key(|o| o[0]);
    let mut orbit_of = vec![u32::MAX; cycle.space.num_points()];
    for (j, orbit) in orbits.iter().enumerate() {
        for &p in orbit {
            orbit_of[p.index()] = j as u32;
        }
    }
    Ok(OrbitPartition { orbits, orbit_of, space: Arc::clone(&cycle.space) })
}

/// Cap verdict for each orbit, in orbit order.
pub fn orbit_cap_filter(partition: &OrbitPartition) -> Vec<bool> {
    partition
        .orbits
        .iter()
        .map(|orbit| {
            let s = PointSet::new(&partition.space, orbit.iter().copied())
                .expect("orbit points are valid");
            is_cap(&s)
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct UnionSearchOptions {
    /// Ceiling on point-insertion attempts before the search gives up.
    pub node_budget: u64,
}

impl Default for UnionSearchOptions {
    fn default() -> UnionSearchOptions {
        UnionSearchOptions { node_budget: 20_000_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnionSearchResult {
    /// Orbit-index sets whose unions are caps of the target size.
    pub unions: Vec<Vec<usize>>,
    pub nodes: u64,
    /// False when the node budget ran out; `unions` is then a lower bound.
    pub exhaustive: bool,
}

/// Exhaustive search for caps that are unions of whole orbits with total size
/// `target`. Orbits that are not themselves caps are excluded up front.
pub fn orbit_union_cap_search(
    partition: &OrbitPartition,
    target: usize,
    opts: &UnionSearchOptions,
) -> Result<UnionSearchResult, SingerError> {
    let orbit_size = partition.orbits.first().map_or(0, Vec::len);
    debug_assert!(partition.orbits.iter().all(|o| o.len() == orbit_size));
    if orbit_size == 0 || target % orbit_size != 0 {
        return Err(SingerError::TargetInfeasible { orbit_size, target });
    }
    let want = target / orbit_size;
    let cap_flags = orbit_cap_filter(partition);
    let candidates: Vec<usize> = (0..partition.orbits.len()).filter(|&i| cap_flags[i]).collect();
    if want > candidates.len() {
        return Ok(UnionSearchResult { unions: Vec::new(), nodes: 0, exhaustive: true });
    }

    let mut state = UnionSearch {
        partition,
        candidates: &candidates,
        want,
        inc: IncrementalCap::new(&partition.space),
        chosen: Vec::new(),
        unions: Vec::new(),
        nodes: 0,
        budget: opts.node_budget,
        exhausted_budget: false,
    };
    state.recurse(0);
    Ok(UnionSearchResult {
        unions: state.unions,
        nodes: state.nodes,
        exhaustive: !state.exhausted_budget,
    })
}

struct UnionSearch<'a> {
    partition: &'a OrbitPartition,
    candidates: &'a [usize],
    want: usize,
    inc: IncrementalCap<'a>,
    chosen: Vec<usize>,
    unions: Vec<Vec<usize>>,
    nodes: u64,
    budget: u64,
    exhausted_budget: bool,
}

impl UnionSearch<'_> {
    fn recurse(&mut self, from: usize) {
        if self.chosen.len() == self.want {
            self.unions.push(self.chosen.clone());
            return;
        }
        let need = self.want - self.chosen.len();
        for ci in from..self.candidates.len() {
            if self.exhausted_budget || self.candidates.len() - ci < need {
                return;
            }
            let orbit_idx = self.candidates[ci];
            if self.push_orbit(orbit_idx) {
                self.chosen.push(orbit_idx);
                self.recurse(ci + 1);
                self.chosen.pop();
                self.pop_orbit(orbit_idx);
            }
        }
    }

    /// Adds a whole orbit to the growing cap, rolling back on any conflict.
    fn push_orbit(&mut self, orbit_idx: usize) -> bool {
        let orbit = &self.partition.orbits[orbit_idx];
        for (i, &p) in orbit.iter().enumerate() {
            self.nodes += 1;
            if self.nodes >= self.budget {
                self.exhausted_budget = true;
            }
            if self.exhausted_budget || !self.inc.try_push(p) {
                for _ in 0..i {
                    self.inc.pop();
                }
                return false;
            }
        }
        true
    }

    fn pop_orbit(&mut self, orbit_idx: usize) {
        for _ in 0..self.partition.orbits[orbit_idx].len() {
            self.inc.pop();
        }
    }
}

/// Point sizes the smaller of two orbits can have when a group with exactly
/// two point orbits normalizes the cycle: n/v for each odd prime v dividing
/// n.
pub fn two_orbit_smaller_sizes(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = polynomial::distinct_prime_factors(n)
        .into_iter()
        .filter(|&v| v != 2)
        .map(|v| n / v)
        .collect();
    out.sort_unstable();
    out
}

/// Parameters of the two-orbit cyclic actions on nonzero vectors of
/// GF(p^d): the group is determined by m1, v (an odd prime), e, and the
/// subfield degree s, with N = v * m1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FkParams {
    pub p: u64,
    pub d: u32,
    pub s: u32,
    pub m1: u64,
    pub v: u64,
    pub e: u64,
}

/// One arithmetic condition on FkParams: its name and whether it holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FkCondition {
    pub name: &'static str,
    pub holds: bool,
}

impl FkParams {
    pub fn n(&self) -> u64 {
        self.v * self.m1
    }

    pub fn group_order(&self) -> u64 {
        self.p.pow(self.d) - 1
    }

    /// Checks every arithmetically expressible condition on the parameters;
    /// the group-theoretic meaning (that these describe a two-orbit action)
    /// is taken on faith and not re-proved here.
    pub fn validate(&self) -> Vec<FkCondition> {
        let m = self.group_order();
        let mut out = Vec::new();
        out.push(FkCondition {
            name: "v is an odd prime",
            holds: self.v % 2 == 1 && is_prime_u64(self.v),
        });
        out.push(FkCondition { name: "N = v*m1 divides p^d - 1", holds: m % self.n() == 0 });
        let ps = self.p.pow(self.s) - 1;
        out.push(FkCondition {
            name: "every prime of m1 divides p^s - 1",
            holds: polynomial::distinct_prime_factors(self.m1)
                .iter()
                .all(|&ell| ps % ell == 0),
        });
        let ord_ok = if is_prime_u64(self.v) && self.p % self.v != 0 {
            let base = crate::field::mod_pow_u64(
                self.p % self.v,
                self.s as u64 * self.m1,
                self.v,
            );
            multiplicative_order_mod(base, self.v) == self.v - 1
        } else {
            false
        };
        out.push(FkCondition { name: "p^(s*m1) has order v-1 mod v", holds: ord_ok });
        out.push(FkCondition {
            name: "gcd(e, m1) = 1",
            holds: crate::field::gcd_u64(self.e, self.m1) == 1,
        });
        out.push(FkCondition {
            name: "m1*s*(v-1) divides d",
            holds: self.d as u64 % (self.m1 * self.s as u64 * (self.v - 1)) == 0,
        });
        out
    }
}

fn multiplicative_order_mod(x: u64, modulus: u64) -> u64 {
    let mut acc = x % modulus;
    let mut ord = 1;
    while acc != 1 {
        acc = acc * x % modulus;
        ord += 1;
        assert!(ord <= modulus, "x must be a unit mod modulus");
    }
    ord
}

/// The two vector-orbit lengths (p^d - 1)/v and (v-1)(p^d - 1)/v.
pub fn fk_orbit_lengths(params: &FkParams) -> Result<(u64, u64), SingerError> {
    let m = params.group_order();
    let n = params.n();
    if m % n != 0 {
        return Err(SingerError::DivisibilityViolation { n, modulus: m });
    }
    let len1 = params.m1 * m / n;
    Ok((len1, (params.v - 1) * len1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParityVerdict {
    /// p = 2 forces the smaller vector orbit to be odd, but the candidate's
    /// vector-orbit size is even.
    Incompatible,
    NotRefutedByParity,
    /// The parity argument only applies in characteristic 2.
    NotApplicable,
}

/// In characteristic 2 the smaller of the two vector orbits has odd length,
/// so an even candidate size (after scaling points by q-1 to vectors) is
/// impossible.
pub fn a1_parity_refutation(p: u64, q: u64, candidate_point_size: u64) -> ParityVerdict {
    if p != 2 {
        return ParityVerdict::NotApplicable;
    }
    let vector_size = candidate_point_size * (q - 1);
    if vector_size % 2 == 0 {
        ParityVerdict::Incompatible
    } else {
        ParityVerdict::NotRefutedByParity
    }
}
