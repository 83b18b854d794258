//! Arithmetic in `GF(q)` for the prime powers the constructions need
//! (`q <= 32`), plus quadratic-residue and discrete-log utilities.
//!
//! Elements are indexed `0..q` by base-`p` digit encoding of their
//! coefficient vectors over `GF(p)`, constant term least significant, so
//! index 0 is the additive zero and index 1 the multiplicative one. The
//! irreducible moduli are pinned constants, re-verified at construction.

use std::fmt;

/// Pinned irreducible moduli, coefficient lists with constant term first.
/// `x^2+x+1` over GF(2), `x^2+1` over GF(3), `x^3+x+1` over GF(2), ...
const MODULI: &[(usize, &[u8])] = &[
    (4, &[1, 1, 1]),           // x^2 + x + 1 over GF(2)
    (8, &[1, 1, 0, 1]),        // x^3 + x + 1 over GF(2)
    (9, &[1, 0, 1]),           // x^2 + 1 over GF(3)
    (16, &[1, 1, 0, 0, 1]),    // x^4 + x + 1 over GF(2)
    (25, &[1, 1, 1]),          // x^2 + x + 1 over GF(5)
    (27, &[1, 2, 0, 1]),       // x^3 + 2x + 1 over GF(3)
    (32, &[1, 0, 1, 0, 0, 1]), // x^5 + x^2 + 1 over GF(2)
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldError {
    NotAPrimePower { q: usize },
    Unsupported { q: usize },
    EvenCharacteristic,
    ZeroHasNoLog,
    NotPrimitive { g: usize },
    NotInvertible,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotAPrimePower { q } => write!(f, "{q} is not a prime power"),
            FieldError::Unsupported { q } => {
                write!(f, "no bundled irreducible modulus for q = {q}")
            }
            FieldError::EvenCharacteristic => write!(f, "operation requires odd q"),
            FieldError::ZeroHasNoLog => write!(f, "discrete log of zero"),
            FieldError::NotPrimitive { g } => write!(f, "element {g} is not primitive"),
            FieldError::NotInvertible => write!(f, "zero is not invertible"),
        }
    }
}

impl std::error::Error for FieldError {}

/// A small finite field with full lookup tables.
#[derive(Debug)]
pub struct Field {
    p: usize,
    e: usize,
    q: usize,
    modulus: Vec<u8>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>, // inv[0] is a sentinel, never read through inv()
}

fn factor_prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut m = q;
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            return if m == 1 { Some((p, e)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

impl Field {
    /// Construct `GF(q)`. Rejects non-prime-powers and any `q` without a
    /// bundled modulus; re-verifies irreducibility of the modulus by trial
    /// division over all lower-degree monic polynomials.
    pub fn new(q: usize) -> Result<Field, FieldError> {
        let (p, e) = factor_prime_power(q).ok_or(FieldError::NotAPrimePower { q })?;
        let modulus: Vec<u8> = if e == 1 {
            vec![0, 1] // x - 0; unused for prime fields
        } else {
            MODULI
                .iter()
                .find(|&&(m, _)| m == q)
                .map(|&(_, coeffs)| coeffs.to_vec())
                .ok_or(FieldError::Unsupported { q })?
        };
        if e > 1 {
            assert!(
                is_irreducible(&modulus, p),
                "bundled modulus for q={q} is reducible"
            );
        }

        let digits = |mut x: usize| -> Vec<u8> {
            let mut d = vec![0u8; e];
            for di in d.iter_mut() {
                *di = (x % p) as u8;
                x /= p;
            }
            d
        };
        let index = |d: &[u8]| digit_index(d, p);

        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<u8> = da
                    .iter()
                    .zip(&db)
                    .map(|(&x, &y)| ((x as usize + y as usize) % p) as u8)
                    .collect();
                add[a * q + b] = index(&sum) as u16;
                let prod = poly_mul_mod(&da, &db, &modulus, p);
                mul[a * q + b] = index(&prod) as u16;
            }
        }
        let mut neg = vec![0u16; q];
        for a in 0..q {
            neg[a] = (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u16;
        }
        let mut inv = vec![0u16; q];
        for a in 1..q {
            inv[a] = (1..q).find(|&b| mul[a * q + b] == 1).unwrap() as u16;
        }
        Ok(Field {
            p,
            e,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.e
    }

    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: usize) -> Result<usize, FieldError> {
        if a == 0 {
            return Err(FieldError::NotInvertible);
        }
        Ok(self.inv[a] as usize)
    }

    pub fn pow(&self, a: usize, mut k: usize) -> usize {
        let mut acc = 1;
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn multiplicative_order(&self, a: usize) -> usize {
        assert!(a != 0);
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// The lowest-index primitive element.
    pub fn primitive_element(&self) -> usize {
        (1..self.q)
            .find(|&g| self.multiplicative_order(g) == self.q - 1)
            .expect("multiplicative group of a finite field is cyclic")
    }

    /// The `(q-1)/2` nonzero squares, sorted by index. Requires odd `q`.
    pub fn nonzero_squares(&self) -> Result<Vec<usize>, FieldError> {
        if self.q % 2 == 0 {
            return Err(FieldError::EvenCharacteristic);
        }
        let mut sq: Vec<usize> = (1..self.q).map(|x| self.mul(x, x)).collect();
        sq.sort_unstable();
        sq.dedup();
        Ok(sq)
    }

    /// Whether `-1` is a square; for odd `q` this holds iff `q = 1 (mod 4)`.
    pub fn minus_one_is_square(&self) -> Result<bool, FieldError> {
        let minus_one = self.neg(1);
        Ok(self.nonzero_squares()?.binary_search(&minus_one).is_ok())
    }

    /// The unique `t` in `0..q-1` with `g^t = x`, by brute-force powering.
    pub fn discrete_log(&self, g: usize, x: usize) -> Result<usize, FieldError> {
        if x == 0 {
            return Err(FieldError::ZeroHasNoLog);
        }
        if self.multiplicative_order(g) != self.q - 1 {
            return Err(FieldError::NotPrimitive { g });
        }
        let mut acc = 1;
        for t in 0..self.q - 1 {
            if acc == x {
                return Ok(t);
            }
            acc = self.mul(acc, g);
        }
        unreachable!("powers of a primitive element cover all nonzero elements")
    }
}

fn digit_index(d: &[u8], p: usize) -> usize {
    d.iter().rev().fold(0usize, |acc, &x| acc * p + x as usize)
}

/// Product of two coefficient vectors reduced modulo `modulus` over GF(p).
fn poly_mul_mod(a: &[u8], b: &[u8], modulus: &[u8], p: usize) -> Vec<u8> {
    let e = modulus.len() - 1;
    let mut prod = vec![0usize; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] += x as usize * y as usize;
        }
    }
    for c in prod.iter_mut() {
        *c %= p;
    }
    // reduce: x^e = -(modulus lower part) since modulus is monic
    for d in (e..prod.len()).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for (i, &m) in modulus.iter().enumerate().take(e) {
            let sub = c * m as usize % p;
            prod[d - e + i] = (prod[d - e + i] + p - sub) % p;
        }
    }
    prod.truncate(e.max(1));
    prod.iter().map(|&c| c as u8).collect()
}

/// Irreducibility over GF(p) by trial division with every lower-degree monic.
fn is_irreducible(modulus: &[u8], p: usize) -> bool {
    let e = modulus.len() - 1;
    if *modulus.last().unwrap() != 1 {
        return false;
    }
    for deg in 1..e {
        let count = p.pow(deg as u32);
        for low in 0..count {
            let mut divisor = vec![0u8; deg + 1];
            let mut x = low;
            for c in divisor.iter_mut().take(deg) {
                *c = (x % p) as u8;
                x /= p;
            }
            divisor[deg] = 1;
            if poly_divides(&divisor, modulus, p) {
                return false;
            }
        }
    }
    true
}

fn poly_divides(divisor: &[u8], dividend: &[u8], p: usize) -> bool {
    let mut rem: Vec<usize> = dividend.iter().map(|&c| c as usize).collect();
    let dd = divisor.len() - 1;
    // divisor is monic
    for d in (dd..rem.len()).rev() {
        let c = rem[d];
        if c == 0 {
            continue;
        }
        rem[d] = 0;
        for (i, &m) in divisor.iter().enumerate().take(dd) {
            rem[d - dd + i] = (rem[d - dd + i] + p - c * m as usize % p) % p;
        }
    }
    rem.iter().all(|&c| c == 0)
}
