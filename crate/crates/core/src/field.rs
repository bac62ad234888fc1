//! Small finite fields as lookup tables.
//!
//! Prime fields use residues mod p. The prime-power fields GF(4), GF(8),
//! GF(9) and GF(16) represent an element as the coefficient vector of a
//! polynomial over GF(p) of degree below k, packed base p, and multiply modulo
//! a fixed irreducible polynomial.

use crate::error::{Error, Result};

/// Irreducible monic polynomials over GF(p), low coefficients first, leading
/// 1 omitted.
const MODULI: &[(u64, u64, u32, &[u64])] = &[
    // (q, p, k, low coefficients)
    (4, 2, 2, &[1, 1]),        // x^2 + x + 1
    (8, 2, 3, &[1, 1, 0]),     // x^3 + x + 1
    (9, 3, 2, &[1, 0]),        // x^2 + 1
    (16, 2, 4, &[1, 1, 0, 0]), // x^4 + x + 1
];

fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

#[derive(Debug, Clone)]
pub(crate) struct Field {
    q: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
}

impl Field {
    pub(crate) fn new(q: u64) -> Result<Field> {
        if is_prime(q) {
            if q > 1 << 12 {
                return Err(Error::InvalidArgument(format!("prime order {q} is too large")));
            }
            let q = q as usize;
            let mut add = vec![0; q * q];
            let mut mul = vec![0; q * q];
            for a in 0..q {
                for b in 0..q {
                    add[a * q + b] = ((a + b) % q) as u16;
                    mul[a * q + b] = ((a * b) % q) as u16;
                }
            }
            return Ok(Field { q, add, mul });
        }
        let &(_, p, k, low) = MODULI.iter().find(|m| m.0 == q).ok_or_else(|| {
            Error::InvalidArgument(format!("{q} is not a supported prime power (primes, 4, 8, 9, 16)"))
        })?;
        let (p, k, q) = (p as usize, k as usize, q as usize);
        let digits = |mut x: usize| -> Vec<usize> {
            (0..k)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        };
        let pack = |v: &[usize]| v.iter().rev().fold(0, |acc, &d| acc * p + d);

        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<usize> = (0..k).map(|i| (da[i] + db[i]) % p).collect();
                add[a * q + b] = pack(&sum) as u16;

                let mut prod = vec![0; 2 * k - 1];
                for i in 0..k {
                    for j in 0..k {
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                    }
                }
                // x^k = -(low)
                for deg in (k..2 * k - 1).rev() {
                    let c = prod[deg];
                    if c == 0 {
                        continue;
                    }
                    prod[deg] = 0;
                    for (i, &l) in low.iter().enumerate() {
                        let sub = (c * l as usize) % p;
                        prod[deg - k + i] = (prod[deg - k + i] + p - sub) % p;
                    }
                }
                mul[a * q + b] = pack(&prod[..k]) as u16;
            }
        }
        Ok(Field { q, add, mul })
    }

    pub(crate) fn order(&self) -> usize {
        self.q
    }

    pub(crate) fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    pub(crate) fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(f: &Field) {
        let q = f.order();
        for a in 0..q {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            // additive and multiplicative inverses
            assert!((0..q).any(|b| f.add(a, b) == 0));
            if a != 0 {
                assert_eq!((0..q).filter(|&b| f.mul(a, b) == 1).count(), 1);
            }
            for b in 0..q {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..q {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                }
            }
        }
    }

    #[test]
    fn supported_fields_satisfy_the_axioms() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            check_axioms(&Field::new(q).unwrap());
        }
    }

    #[test]
    fn unsupported_orders() {
        for q in [0, 1, 6, 10, 12, 25, 27, 32] {
            assert!(Field::new(q).is_err(), "{q}");
        }
    }
}
