//! Monic polynomial arithmetic over a FieldSpec, enough to find primitive
//! polynomials: a monic degree-m polynomial f over GF(q) is primitive exactly
//! when the class of t in GF(q)[t]/(f) has multiplicative order q^m - 1, and
//! that order already forces f to be irreducible.

use crate::field::{Fe, FieldSpec};

/// Distinct prime factors of n by trial division (n stays well under 2^42 here).
pub(crate) fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// (a * b) mod m for dense coefficient vectors, m monic with deg m = len - 1.
fn poly_mulmod(a: &[Fe], b: &[Fe], modpoly: &[Fe], f: &FieldSpec) -> Vec<Fe> {
    let deg = modpoly.len() - 1;
    let mut prod = vec![Fe::ZERO; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == Fe::ZERO {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = f.add(prod[i + j], f.mul(ai, bj));
        }
    }
    // Reduce: subtract lead * t^(k - deg) * modpoly from the top down.
    for k in (deg..prod.len()).rev() {
        let lead = prod[k];
        if lead == Fe::ZERO {
            continue;
        }
        prod[k] = Fe::ZERO;
        let shift = k - deg;
        for (i, &mc) in modpoly.iter().enumerate().take(deg) {
            prod[shift + i] = f.sub(prod[shift + i], f.mul(lead, mc));
        }
    }
    prod.truncate(deg);
    prod
}

/// t^e mod modpoly by square and multiply.
fn t_powmod(e: u64, modpoly: &[Fe], f: &FieldSpec) -> Vec<Fe> {
    let deg = modpoly.len() - 1;
    let mut result = vec![Fe::ZERO; deg];
    result[0] = Fe::ONE;
    if deg == 0 {
        return result;
    }
    let mut base = vec![Fe::ZERO; deg.max(2)];
    if deg == 1 {
        // t reduces immediately to -c0.
        base = vec![f.neg(modpoly[0])];
    } else {
        base[1] = Fe::ONE;
        base.truncate(deg);
    }
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = poly_mulmod(&result, &base, modpoly, f);
        }
        base = poly_mulmod(&base, &base, modpoly, f);
        e >>= 1;
    }
    result
}

fn is_one(p: &[Fe]) -> bool {
    p.first() == Some(&Fe::ONE) && p.iter().skip(1).all(|&c| c == Fe::ZERO)
}

/// Order test for primitivity; monic input, constant term first, length m + 1.
pub(crate) fn is_primitive(modpoly: &[Fe], f: &FieldSpec) -> bool {
    let m = modpoly.len() - 1;
    if modpoly[0] == Fe::ZERO {
        return false;
    }
    let group = (f.order() as u64).pow(m as u32) - 1;
    if !is_one(&t_powmod(group, modpoly, f)) {
        return false;
    }
    for ell in distinct_prime_factors(group) {
        if is_one(&t_powmod(group / ell, modpoly, f)) {
            return false;
        }
    }
    true
}

/// Lexicographically least primitive monic polynomial of the given degree,
/// coefficients compared from the constant term up. Returned constant first,
/// monic, length degree + 1.
pub(crate) fn find_primitive_poly(f: &FieldSpec, degree: u32) -> Vec<Fe> {
    let q = f.order() as u64;
    let total = q.pow(degree);
    let deg = degree as usize;
    let mut coeffs = vec![Fe::ZERO; deg + 1];
    coeffs[deg] = Fe::ONE;
    for idx in 0..total {
        // Digit i of idx (most significant first) is coefficient c_i.
        let mut rest = idx;
        for i in (0..deg).rev() {
            coeffs[i] = Fe((rest % q) as u32);
            rest /= q;
        }
        if coeffs[0] == Fe::ZERO {
            continue;
        }
        if deg >= 2 && has_root(&coeffs, f) {
            continue;
        }
        if is_primitive(&coeffs, f) {
            return coeffs;
        }
    }
    unreachable!("primitive polynomials exist in every degree over every finite field")
}

fn has_root(poly: &[Fe], f: &FieldSpec) -> bool {
    f.elements().any(|x| {
        let mut val = Fe::ZERO;
        for &c in poly.iter().rev() {
            val = f.add(f.mul(val, x), c);
        }
        val == Fe::ZERO
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    /// Brute-force primitivity oracle: multiply the class of t by itself in the
    /// quotient ring and count the steps back to one, demanding no early return
    /// and full period. Independent of the fast order test.
    fn primitive_by_iteration(modpoly: &[Fe], f: &FieldSpec) -> bool {
        let deg = modpoly.len() - 1;
        let group = (f.order() as u64).pow(deg as u32) - 1;
        let t = if deg == 1 {
            vec![f.neg(modpoly[0])]
        } else {
            let mut v = vec![Fe::ZERO; deg];
            v[1] = Fe::ONE;
            v
        };
        let mut acc = t.clone();
        for step in 1..=group {
            if is_one(&acc) {
                return step == group;
            }
            acc = poly_mulmod(&acc, &t, modpoly, f);
        }
        false
    }

    #[test]
    fn order_test_matches_iteration_oracle_over_gf2_cubics() {
        let f = FieldSpec::new(2, 1).unwrap();
        for idx in 0..8u32 {
            let coeffs: Vec<Fe> = vec![
                Fe(idx >> 2 & 1),
                Fe(idx >> 1 & 1),
                Fe(idx & 1),
                Fe::ONE,
            ];
            assert_eq!(
                is_primitive(&coeffs, &f),
                primitive_by_iteration(&coeffs, &f),
                "disagreement at {coeffs:?}"
            );
        }
    }

    #[test]
    fn least_primitive_cubic_over_gf2() {
        let f = FieldSpec::new(2, 1).unwrap();
        let p = find_primitive_poly(&f, 3);
        // Constant-term-first comparison puts t^3 + t^2 + 1 before t^3 + t + 1.
        assert_eq!(p, vec![Fe(1), Fe(0), Fe(1), Fe(1)]);
    }

    #[test]
    fn least_primitive_quadratic_over_gf4_is_genuinely_primitive() {
        let f = FieldSpec::new(2, 2).unwrap();
        let p = find_primitive_poly(&f, 2);
        assert!(is_primitive(&p, &f));
        assert!(primitive_by_iteration(&p, &f));
        // t^2 + t + omega is the least: t^2 + c with c constant is never
        // irreducible in characteristic 2, and t^2 + t + 1 splits over GF(4).
        assert_eq!(p, vec![Fe(2), Fe(1), Fe(1)]);
    }

    #[test]
    fn primitive_quintic_over_gf3_has_full_order_root() {
        let f = FieldSpec::new(3, 1).unwrap();
        let p = find_primitive_poly(&f, 5);
        assert!(is_primitive(&p, &f));
        assert!(primitive_by_iteration(&p, &f));
    }

    #[test]
    fn prime_factors_small_numbers() {
        assert_eq!(distinct_prime_factors(16383), vec![3, 43, 127]);
        assert_eq!(distinct_prime_factors(242), vec![2, 11]);
        assert_eq!(distinct_prime_factors(1), Vec::<u64>::new());
    }
}
