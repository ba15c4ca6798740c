//! Finite fields GF(p^h) with table-backed arithmetic.
//!
//! Elements are handles holding a packed integer in 0..q: the base-p digits of
//! the packed value are the coefficients of the element written on the power
//! basis 1, t, ..., t^(h-1) of GF(p)[t] / (modulus), constant term first. For
//! prime fields the packed value is just the residue. Multiplication runs on
//! exp/log tables over a fixed primitive element; addition is digit arithmetic
//! (a direct table for small q).

use crate::polynomial;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Hard ceiling on field order so the exp/log tables stay reasonable.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// Largest order for which a full q-by-q addition table is precomputed.
const ADD_TABLE_MAX: u32 = 256;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field order {0} exceeds the supported maximum {MAX_FIELD_ORDER}")]
    FieldTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("GF({small}) is not a subfield of GF({big})")]
    NotASubfield { small: u64, big: u64 },
    #[error("element value {value} is not valid for GF({q})")]
    FieldMismatch { value: u32, q: u32 },
}

/// Handle for a field element: the packed coefficient value, 0..q.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A concrete GF(p^h): modulus choice, primitive element and lookup tables.
///
/// The modulus is the lexicographically least primitive monic polynomial of
/// degree h over GF(p), coefficients compared from the constant term up, so
/// every (p, h) names exactly one field layout. The primitive element omega is
/// the class of t (for h = 1, the root of the degree-one modulus).
pub struct FieldSpec {
    p: u32,
    h: u32,
    q: u32,
    /// Monic modulus, constant term first; length h + 1, last entry 1.
    modulus: Vec<u32>,
    /// exp[i] = packed value of omega^i for i in 0..2(q-1), doubled to skip a mod.
    exp: Vec<u32>,
    /// log[v] = i with exp[i] = v for v nonzero; log[0] is a sentinel.
    log: Vec<u32>,
    neg: Vec<u32>,
    /// Flattened q*q addition table when q <= ADD_TABLE_MAX, else empty.
    add_tab: Vec<u32>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.h == other.h && self.modulus == other.modulus
    }
}
impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

impl FieldSpec {
    /// Builds GF(p^h) with the canonical modulus.
    pub fn new(p: u64, h: u32) -> Result<Arc<FieldSpec>, FieldError> {
        if !is_prime_u64(p) {
            return Err(FieldError::NotPrime(p));
        }
        assert!(h >= 1, "extension degree must be at least 1");
        let q = checked_pow(p, h).ok_or(FieldError::FieldTooLarge(u64::MAX))?;
        if q > MAX_FIELD_ORDER {
            return Err(FieldError::FieldTooLarge(q));
        }
        let p32 = p as u32;
        let spec = if h == 1 {
            build_prime_field(p32)
        } else {
            let base = FieldSpec::new(p, 1)?;
            let modpoly = polynomial::find_primitive_poly(&base, h);
            build_extension_field(p32, h, &modpoly)
        };
        Ok(Arc::new(spec))
    }

    /// Builds GF(q) for a prime power q, factoring q as p^h.
    pub fn of_order(q: u64) -> Result<Arc<FieldSpec>, FieldError> {
        let (p, h) = factor_prime_power(q).ok_or(FieldError::NotPrime(q))?;
        FieldSpec::new(p, h)
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn h(&self) -> u32 {
        self.h
    }
    pub fn order(&self) -> u32 {
        self.q
    }
    /// Monic modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    /// The fixed primitive element: the class of t (for h = 1, -c0).
    pub fn omega(&self) -> Fe {
        Fe(self.exp[1])
    }

    pub fn element(&self, value: u32) -> Result<Fe, FieldError> {
        if value < self.q {
            Ok(Fe(value))
        } else {
            Err(FieldError::FieldMismatch { value, q: self.q })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.q).map(Fe)
    }

    pub fn omega_pow(&self, i: u64) -> Fe {
        Fe(self.exp[(i % (self.q as u64 - 1)) as usize])
    }

    /// Discrete log base omega; None for zero.
    pub fn log_of(&self, a: Fe) -> Option<u32> {
        if a.0 == 0 {
            None
        } else {
            Some(self.log[a.0 as usize])
        }
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        debug_assert!(a.0 < self.q && b.0 < self.q);
        if self.p == 2 {
            return Fe(a.0 ^ b.0);
        }
        if !self.add_tab.is_empty() {
            return Fe(self.add_tab[(a.0 * self.q + b.0) as usize]);
        }
        Fe(digit_add(a.0, b.0, self.p, self.q))
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        debug_assert!(a.0 < self.q);
        Fe(self.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        debug_assert!(a.0 < self.q && b.0 < self.q);
        if a.0 == 0 || b.0 == 0 {
            return Fe::ZERO;
        }
        let i = self.log[a.0 as usize] + self.log[b.0 as usize];
        Fe(self.exp[i as usize])
    }

    pub fn inv(&self, a: Fe) -> Result<Fe, FieldError> {
        if a.0 == 0 {
            return Err(FieldError::DivisionByZero);
        }
        let l = self.log[a.0 as usize];
        Ok(Fe(self.exp[(self.q - 1 - l) as usize]))
    }

    /// a^e for a signed exponent; the exponent acts mod q-1 on nonzero bases.
    pub fn pow(&self, a: Fe, e: i64) -> Result<Fe, FieldError> {
        if a.0 == 0 {
            return match e {
                0 => Ok(Fe::ONE),
                _ if e > 0 => Ok(Fe::ZERO),
                _ => Err(FieldError::DivisionByZero),
            };
        }
        let m = (self.q - 1) as i64;
        let e_red = e.rem_euclid(m) as u64;
        Ok(self.pow_log(a, e_red))
    }

    /// a^e for an unsigned exponent, with the convention 0^0 = 1.
    pub fn pow_u(&self, a: Fe, e: u64) -> Fe {
        if a.0 == 0 {
            return if e == 0 { Fe::ONE } else { Fe::ZERO };
        }
        self.pow_log(a, e % (self.q as u64 - 1))
    }

    #[inline]
    fn pow_log(&self, a: Fe, e_red: u64) -> Fe {
        let l = self.log[a.0 as usize] as u64;
        Fe(self.exp[((l * e_red) % (self.q as u64 - 1)) as usize])
    }

    /// The k-th Frobenius power a -> a^(p^k).
    pub fn frobenius(&self, a: Fe, k: u32) -> Fe {
        if a.0 == 0 {
            return Fe::ZERO;
        }
        let m = self.q as u64 - 1;
        let e = mod_pow_u64(self.p as u64 % m.max(1), k as u64, m.max(1));
        self.pow_log(a, e % m.max(1))
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: Fe) -> Result<u64, FieldError> {
        let l = self.log_of(a).ok_or(FieldError::DivisionByZero)? as u64;
        let m = self.q as u64 - 1;
        Ok(m / gcd_u64(m, l))
    }
}

/// An injective field homomorphism GF(s) -> GF(q) as a lookup table.
///
/// The chosen primitive element of the small field maps to the least power of
/// the big field's omega that lands in the order-(s-1) subgroup and is a root
/// of the small modulus; that pins a unique genuine homomorphism.
pub struct SubfieldEmbedding {
    small: Arc<FieldSpec>,
    big: Arc<FieldSpec>,
    map: Vec<u32>,
    in_image: Vec<bool>,
    /// log in the big field of the image of the small field's omega.
    generator_log: u64,
}

impl SubfieldEmbedding {
    pub fn small(&self) -> &Arc<FieldSpec> {
        &self.small
    }
    pub fn big(&self) -> &Arc<FieldSpec> {
        &self.big
    }
    pub fn generator_log(&self) -> u64 {
        self.generator_log
    }

    pub fn apply(&self, a: Fe) -> Fe {
        Fe(self.map[a.0 as usize])
    }

    pub fn image_contains(&self, b: Fe) -> bool {
        self.in_image[b.0 as usize]
    }

    /// Image of the whole small field, ascending by packed value.
    pub fn image(&self) -> Vec<Fe> {
        let mut v: Vec<Fe> = self.map.iter().map(|&x| Fe(x)).collect();
        v.sort();
        v
    }
}

/// Computes the canonical embedding GF(s) -> GF(q), s = p^hs, q = p^hb, hs | hb.
pub fn subfield_embed(
    small: &Arc<FieldSpec>,
    big: &Arc<FieldSpec>,
) -> Result<SubfieldEmbedding, FieldError> {
    let s = small.order() as u64;
    let q = big.order() as u64;
    if small.p() != big.p() || big.h() % small.h() != 0 {
        return Err(FieldError::NotASubfield { small: s, big: q });
    }
    let step = (q - 1) / (s - 1);
    // The image of omega_s must be a root of the small modulus inside the
    // subgroup of order s-1; take the least exponent that works.
    let coeffs_in_big: Vec<Fe> = small
        .modulus()
        .iter()
        .map(|&c| {
            // Prime subfield images: c copies of one.
            let mut acc = Fe::ZERO;
            for _ in 0..c {
                acc = big.add(acc, Fe::ONE);
            }
            acc
        })
        .collect();
    let mut gen_log = None;
    for mult in 0..(s - 1) {
        let cand_log = mult * step;
        let cand = big.omega_pow(cand_log);
        let mut val = Fe::ZERO;
        for &c in coeffs_in_big.iter().rev() {
            val = big.add(big.mul(val, cand), c);
        }
        if val == Fe::ZERO {
            gen_log = Some(cand_log);
            break;
        }
    }
    let gen_log = gen_log.expect("small modulus always has a root in the subfield copy");
    let mut map = vec![0u32; s as usize];
    map[1] = 1;
    for i in 0..(s - 1) {
        let src = small.omega_pow(i);
        let dst = big.omega_pow((i * gen_log) % (q - 1));
        map[src.0 as usize] = dst.0;
    }
    let mut in_image = vec![false; q as usize];
    for &v in &map {
        in_image[v as usize] = true;
    }
    Ok(SubfieldEmbedding {
        small: Arc::clone(small),
        big: Arc::clone(big),
        map,
        in_image,
        generator_log: gen_log,
    })
}

fn build_prime_field(p: u32) -> FieldSpec {
    // Lexicographically least primitive monic linear polynomial t + c:
    // the least c >= 0 whose root -c generates GF(p)*.
    let mut chosen = None;
    for c in 0..p {
        let root = (p - c) % p;
        if root != 0 && order_mod_p(root, p) == p - 1 {
            chosen = Some(c);
            break;
        }
    }
    let c = chosen.expect("every prime field has a primitive element");
    let omega = (p - c) % p;
    let q = p;
    let mut exp = vec![0u32; 2 * (q as usize - 1)];
    let mut log = vec![u32::MAX; q as usize];
    let mut acc = 1u64;
    for i in 0..(q as usize - 1) {
        exp[i] = acc as u32;
        exp[i + q as usize - 1] = acc as u32;
        log[acc as usize] = i as u32;
        acc = acc * omega as u64 % p as u64;
    }
    assert_eq!(acc, 1, "primitive element order check");
    finish_tables(p, 1, vec![c, 1], q, exp, log)
}

fn build_extension_field(p: u32, h: u32, modpoly: &[Fe]) -> FieldSpec {
    let q = (p as u64).pow(h) as u32;
    let modulus: Vec<u32> = modpoly.iter().map(|c| c.0).collect();
    let mut exp = vec![0u32; 2 * (q as usize - 1)];
    let mut log = vec![u32::MAX; q as usize];
    // Walk omega^i as coefficient vectors: multiply by t and reduce, LFSR style.
    let mut coeffs = vec![0u32; h as usize];
    coeffs[0] = 1;
    for i in 0..(q as usize - 1) {
        let packed = pack_digits(&coeffs, p);
        debug_assert!(log[packed as usize] == u32::MAX, "omega order too small");
        exp[i] = packed;
        exp[i + q as usize - 1] = packed;
        log[packed as usize] = i as u32;
        mul_by_t(&mut coeffs, &modulus, p);
    }
    assert_eq!(pack_digits(&coeffs, p), 1, "omega must have order q - 1");
    finish_tables(p, h, modulus, q, exp, log)
}

fn finish_tables(
    p: u32,
    h: u32,
    modulus: Vec<u32>,
    q: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
) -> FieldSpec {
    let neg: Vec<u32> = (0..q).map(|v| digit_neg(v, p, q)).collect();
    let add_tab = if q <= ADD_TABLE_MAX {
        let mut t = vec![0u32; (q * q) as usize];
        for a in 0..q {
            for b in 0..q {
                t[(a * q + b) as usize] = digit_add(a, b, p, q);
            }
        }
        t
    } else {
        Vec::new()
    };
    FieldSpec {
        p,
        h,
        q,
        modulus,
        exp,
        log,
        neg,
        add_tab,
    }
}

/// Multiplies a coefficient vector by t modulo the monic modulus, in place.
fn mul_by_t(coeffs: &mut [u32], modulus: &[u32], p: u32) {
    let h = coeffs.len();
    let lead = coeffs[h - 1];
    for i in (1..h).rev() {
        coeffs[i] = coeffs[i - 1];
    }
    coeffs[0] = 0;
    if lead != 0 {
        for i in 0..h {
            let sub = lead as u64 * modulus[i] as u64 % p as u64;
            coeffs[i] = ((coeffs[i] as u64 + p as u64 - sub) % p as u64) as u32;
        }
    }
}

fn pack_digits(coeffs: &[u32], p: u32) -> u32 {
    let mut v = 0u64;
    for &c in coeffs.iter().rev() {
        v = v * p as u64 + c as u64;
    }
    v as u32
}

fn digit_add(a: u32, b: u32, p: u32, _q: u32) -> u32 {
    let (mut a, mut b) = (a as u64, b as u64);
    let p = p as u64;
    let mut out = 0u64;
    let mut place = 1u64;
    while a > 0 || b > 0 {
        out += (a % p + b % p) % p * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out as u32
}

fn digit_neg(a: u32, p: u32, _q: u32) -> u32 {
    let mut a = a as u64;
    let p = p as u64;
    let mut out = 0u64;
    let mut place = 1u64;
    while a > 0 {
        out += (p - a % p) % p * place;
        a /= p;
        place *= p;
    }
    out as u32
}

fn order_mod_p(x: u32, p: u32) -> u32 {
    let m = (p - 1) as u64;
    let mut ord = m;
    for f in polynomial::distinct_prime_factors(m) {
        while ord % f == 0 && mod_pow_u64(x as u64, ord / f, p as u64) == 1 {
            ord /= f;
        }
    }
    ord as u32
}

pub(crate) fn mod_pow_u64(mut base: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Writes q = p^h with p prime, or None if q is not a prime power.
pub fn factor_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q {
        if q % p == 0 {
            let mut rest = q;
            let mut h = 0u32;
            while rest % p == 0 {
                rest /= p;
                h += 1;
            }
            return if rest == 1 { Some((p, h)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

fn checked_pow(p: u64, h: u32) -> Option<u64> {
    let mut acc = 1u64;
    for _ in 0..h {
        acc = acc.checked_mul(p)?;
        if acc > MAX_FIELD_ORDER {
            return Some(acc);
        }
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_moduli_and_omega() {
        let f2 = FieldSpec::new(2, 1).unwrap();
        assert_eq!(f2.modulus(), &[1, 1]);
        assert_eq!(f2.omega(), Fe(1));
        let f3 = FieldSpec::new(3, 1).unwrap();
        assert_eq!(f3.modulus(), &[1, 1]);
        assert_eq!(f3.omega(), Fe(2));
        let f7 = FieldSpec::new(7, 1).unwrap();
        assert_eq!(f7.multiplicative_order(f7.omega()).unwrap(), 6);
    }

    #[test]
    fn gf4_has_canonical_modulus_and_arithmetic() {
        let f = FieldSpec::new(2, 2).unwrap();
        // t^2 + t + 1, constant term first.
        assert_eq!(f.modulus(), &[1, 1, 1]);
        // x * x = x + 1 where x is packed 2 and x + 1 packed 3.
        assert_eq!(f.mul(Fe(2), Fe(2)), Fe(3));
        assert_eq!(f.add(Fe(2), Fe(1)), Fe(3));
        assert_eq!(f.frobenius(Fe(2), 1), Fe(3));
    }

    #[test]
    fn gf64_modulus_is_least_primitive_hexic() {
        let f = FieldSpec::new(2, 6).unwrap();
        // t^6 + t^5 + 1 is the least primitive hexic under constant-first order.
        assert_eq!(f.modulus(), &[1, 0, 0, 0, 0, 1, 1]);
        assert_eq!(f.multiplicative_order(f.omega()).unwrap(), 63);
    }

    #[test]
    fn gf9_modulus_and_element_orders() {
        let f = FieldSpec::new(3, 2).unwrap();
        // t^2 + t + 2 is the least primitive quadratic over GF(3).
        assert_eq!(f.modulus(), &[2, 1, 1]);
        assert_eq!(f.multiplicative_order(f.omega()).unwrap(), 8);
    }

    #[test]
    fn field_axioms_exhaustive_small_fields() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let f = FieldSpec::of_order(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), Fe::ZERO);
                assert_eq!(f.mul(a, Fe::ONE), a);
                if a != Fe::ZERO {
                    let inv = f.inv(a).unwrap();
                    assert_eq!(f.mul(a, inv), Fe::ONE);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.add(a, f.add(b, c)), f.add(f.add(a, b), c));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
        }
    }

    #[test]
    fn exp_log_roundtrip_and_period() {
        for q in [4u64, 8, 9, 64] {
            let f = FieldSpec::of_order(q).unwrap();
            let m = f.order() as u64 - 1;
            for a in f.elements().skip(1) {
                let l = f.log_of(a).unwrap() as u64;
                assert_eq!(f.omega_pow(l), a);
                assert_eq!(f.omega_pow(l + m), a, "exp table has period q - 1");
            }
        }
    }

    #[test]
    fn frobenius_is_field_automorphism() {
        for (p, h) in [(2u64, 3u32), (3, 2), (2, 4)] {
            let f = FieldSpec::new(p, h).unwrap();
            for a in f.elements() {
                // a^(p^h) = a.
                assert_eq!(f.frobenius(a, h), a);
                for b in f.elements() {
                    assert_eq!(
                        f.frobenius(f.add(a, b), 1),
                        f.add(f.frobenius(a, 1), f.frobenius(b, 1))
                    );
                    assert_eq!(
                        f.frobenius(f.mul(a, b), 1),
                        f.mul(f.frobenius(a, 1), f.frobenius(b, 1))
                    );
                }
            }
        }
    }

    #[test]
    fn pow_handles_negative_exponents_and_zero() {
        let f = FieldSpec::new(5, 1).unwrap();
        let a = Fe(2);
        assert_eq!(f.pow(a, -1).unwrap(), f.inv(a).unwrap());
        assert_eq!(f.pow(a, 4).unwrap(), Fe::ONE);
        assert_eq!(f.pow(Fe::ZERO, 3).unwrap(), Fe::ZERO);
        assert_eq!(f.pow(Fe::ZERO, 0).unwrap(), Fe::ONE);
        assert_eq!(f.pow(Fe::ZERO, -2), Err(FieldError::DivisionByZero));
        assert_eq!(f.inv(Fe::ZERO), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn rejects_bad_orders() {
        assert_eq!(
            FieldSpec::new(6, 1).unwrap_err(),
            FieldError::NotPrime(6)
        );
        assert!(matches!(
            FieldSpec::new(2, 21).unwrap_err(),
            FieldError::FieldTooLarge(_)
        ));
        assert!(FieldSpec::of_order(12).is_err());
    }

    #[test]
    fn gf4_embeds_into_gf16_as_field_homomorphism() {
        let small = FieldSpec::new(2, 2).unwrap();
        let big = FieldSpec::new(2, 4).unwrap();
        let emb = subfield_embed(&small, &big).unwrap();
        // The image is {0} together with the order-3 subgroup generated by omega^5.
        assert_eq!(emb.generator_log() % 5, 0);
        let img = emb.image();
        assert_eq!(img.len(), 4);
        assert!(img.contains(&Fe::ZERO) && img.contains(&Fe::ONE));
        for a in small.elements() {
            for b in small.elements() {
                assert_eq!(
                    emb.apply(small.add(a, b)),
                    big.add(emb.apply(a), emb.apply(b))
                );
                assert_eq!(
                    emb.apply(small.mul(a, b)),
                    big.mul(emb.apply(a), emb.apply(b))
                );
            }
        }
    }

    #[test]
    fn prime_subfield_embedding_is_counting_ones() {
        let small = FieldSpec::new(3, 1).unwrap();
        let big = FieldSpec::new(3, 2).unwrap();
        let emb = subfield_embed(&small, &big).unwrap();
        assert_eq!(emb.apply(Fe(0)), Fe(0));
        assert_eq!(emb.apply(Fe(1)), Fe(1));
        assert_eq!(emb.apply(Fe(2)), big.add(Fe::ONE, Fe::ONE));
        assert!(emb.image_contains(Fe(2)));
    }

    #[test]
    fn embed_rejects_non_subfields() {
        let f8 = FieldSpec::new(2, 3).unwrap();
        let f16 = FieldSpec::new(2, 4).unwrap();
        assert!(matches!(
            subfield_embed(&f8, &f16),
            Err(FieldError::NotASubfield { .. })
        ));
        let f9 = FieldSpec::new(3, 2).unwrap();
        assert!(matches!(
            subfield_embed(&f8, &f9),
            Err(FieldError::NotASubfield { .. })
        ));
    }

    #[test]
    fn large_field_within_limit_builds() {
        // 3^12 = 531441 is the largest order the verifier ever asks for.
        let f = FieldSpec::new(3, 12).unwrap();
        assert_eq!(f.order(), 531_441);
        let a = f.omega_pow(12345);
        let b = f.omega_pow(54321);
        assert_eq!(f.mul(a, b), f.omega_pow(66666));
        assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
    }
}
