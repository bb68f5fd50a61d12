//! Arithmetic in GF(p^s) and its subfields, via exp/log and Zech tables.
//!
//! Nonzero elements are stored as discrete logarithms with respect to a
//! primitive element `a` (the root of the modulus polynomial), so
//! multiplication is index addition mod q-1 and addition goes through the
//! Zech table z(i) = log(1 + a^i). Tables are built once per field and are
//! immutable afterwards, so a `Field` can be shared freely across threads.

use crate::error::{Error, Result};

/// Largest supported field size; everything is table-driven.
pub const MAX_FIELD_SIZE: u32 = 1 << 16;

/// Sentinel in the Zech table for 1 + a^i = 0.
const ZECH_NONE: u32 = u32::MAX;

/// An element of GF(p^s): zero, or a power of the primitive element.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum FieldElement {
    Zero,
    /// `Alpha(i)` is a^i with 0 <= i <= q-2.
    Alpha(u16),
}

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement::Zero;
    pub const ONE: FieldElement = FieldElement::Alpha(0);

    pub fn is_zero(self) -> bool {
        self == FieldElement::Zero
    }

    /// Discrete log of a nonzero element.
    pub fn log(self) -> Option<u32> {
        match self {
            FieldElement::Zero => None,
            FieldElement::Alpha(i) => Some(u32::from(i)),
        }
    }
}

/// GF(p^s) with its modulus and lookup tables.
#[derive(Clone)]
pub struct Field {
    p: u32,
    s: u32,
    q: u32,
    q1: u32,
    modulus: Vec<u32>,
    /// exp[i] = packed polynomial representation of a^i, 0 <= i < q-1.
    exp: Vec<u32>,
    /// log[v] = i with exp[i] = v, for v in 1..q.
    log: Vec<u16>,
    /// zech[i] = log(1 + a^i), or ZECH_NONE when 1 + a^i = 0.
    zech: Vec<u32>,
}

impl std::fmt::Debug for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Field(GF({}^{}), modulus {:?})",
            self.p, self.s, self.modulus
        )
    }
}

/// Default primitive polynomials, lowest degree first, monic.
///
/// Each entry is the polynomial whose coefficient vector, read as a base-p
/// integer with the highest-degree coefficient most significant, is the
/// smallest among all primitive polynomials of that degree. `Field::new`
/// re-verifies primitivity on every construction, and the unit tests check
/// the entries against an exhaustive search.
const DEFAULT_MODULI: &[(u32, u32, &[u32])] = &[
    // GF(2^s)
    (2, 1, &[1, 1]),                                   // x + 1
    (2, 2, &[1, 1, 1]),                                // x^2 + x + 1
    (2, 3, &[1, 1, 0, 1]),                             // x^3 + x + 1
    (2, 4, &[1, 1, 0, 0, 1]),                          // x^4 + x + 1
    (2, 5, &[1, 0, 1, 0, 0, 1]),                       // x^5 + x^2 + 1
    (2, 6, &[1, 1, 0, 0, 0, 0, 1]),                    // x^6 + x + 1
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),                 // x^7 + x + 1
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),              // x^8 + x^4 + x^3 + x^2 + 1
    (2, 9, &[1, 0, 0, 0, 1, 0, 0, 0, 0, 1]),           // x^9 + x^4 + 1
    (2, 10, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1]),       // x^10 + x^3 + 1
    (2, 11, &[1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),    // x^11 + x^2 + 1
    (2, 12, &[1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1]), // x^12 + x^6 + x^4 + x + 1
    (2, 13, &[1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 14, &[1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 15, &[1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 16, &[1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    // GF(3^s)
    (3, 1, &[1, 1]),                      // x + 1 (root 2 generates F_3*)
    (3, 2, &[2, 1, 1]),                   // x^2 + x + 2
    (3, 3, &[1, 2, 0, 1]),                // x^3 + 2x + 1
    (3, 4, &[2, 1, 0, 0, 1]),             // x^4 + x + 2
    (3, 5, &[1, 2, 0, 0, 0, 1]),          // x^5 + 2x + 1
    (3, 6, &[2, 1, 0, 0, 0, 0, 1]),       // x^6 + x + 2
    (3, 7, &[1, 2, 1, 0, 0, 0, 0, 1]),    // x^7 + x^2 + 2x + 1
    (3, 8, &[2, 0, 0, 1, 0, 0, 0, 0, 1]), // x^8 + x^3 + 2
    (3, 9, &[1, 0, 1, 2, 0, 0, 0, 0, 0, 1]),
    (3, 10, &[2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1]),
    // GF(5^s)
    (5, 1, &[2, 1]),       // x + 2 (root 3)
    (5, 2, &[2, 1, 1]),    // x^2 + x + 2
    (5, 3, &[2, 3, 0, 1]), // x^3 + 3x + 2
    (5, 4, &[2, 2, 1, 0, 1]),
    (5, 5, &[2, 4, 0, 0, 0, 1]),
    (5, 6, &[2, 1, 0, 0, 0, 0, 1]),
    // GF(7^s)
    (7, 1, &[2, 1]),    // x + 2 (root 5)
    (7, 2, &[3, 1, 1]), // x^2 + x + 3
    (7, 3, &[2, 3, 0, 1]),
    (7, 4, &[5, 3, 1, 0, 1]),
    (7, 5, &[4, 1, 0, 0, 0, 1]),
];

impl Field {
    /// Build GF(p^s) with the default modulus for (p, s).
    pub fn new(p: u32, s: u32) -> Result<Field> {
        let modulus = default_modulus(p, s)?;
        Field::with_modulus(p, s, &modulus)
    }

    /// Build GF(p^s) from an explicit monic primitive polynomial,
    /// given lowest degree first.
    pub fn with_modulus(p: u32, s: u32, modulus: &[u32]) -> Result<Field> {
        validate_params(p, s)?;
        if modulus.len() != s as usize + 1 {
            return Err(Error::InvalidModulus(format!(
                "expected degree {s}, got {}",
                modulus.len().saturating_sub(1)
            )));
        }
        let modulus: Vec<u32> = modulus.iter().map(|&c| c % p).collect();
        if modulus[s as usize] != 1 {
            return Err(Error::InvalidModulus("polynomial must be monic".into()));
        }
        let q = p.pow(s);
        let exp = build_exp_table(p, s, &modulus).ok_or(Error::NotPrimitive { p })?;
        let q1 = q - 1;
        let mut log = vec![u16::MAX; q as usize];
        for (i, &v) in exp.iter().enumerate() {
            if log[v as usize] != u16::MAX {
                return Err(Error::NotPrimitive { p });
            }
            log[v as usize] = i as u16;
        }
        let mut zech = vec![ZECH_NONE; q1 as usize];
        for i in 0..q1 as usize {
            let w = packed_add(exp[i], 1, p, s);
            if w != 0 {
                zech[i] = u32::from(log[w as usize]);
            }
        }
        Ok(Field {
            p,
            s,
            q,
            q1,
            modulus,
            exp,
            log,
            zech,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// Field order q = p^s.
    pub fn order(&self) -> u32 {
        self.q
    }

    /// Order of the multiplicative group, q - 1.
    pub fn group_order(&self) -> u32 {
        self.q1
    }

    /// The modulus actually in use, lowest degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::Zero
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// The primitive element a.
    pub fn alpha(&self) -> FieldElement {
        if self.q == 2 {
            FieldElement::ONE
        } else {
            FieldElement::Alpha(1)
        }
    }

    /// a^i, with i reduced mod q-1.
    pub fn alpha_pow(&self, i: u32) -> FieldElement {
        FieldElement::Alpha((i % self.q1) as u16)
    }

    /// Element from its packed polynomial representation (base-p digits).
    pub fn from_packed(&self, v: u32) -> FieldElement {
        if v == 0 {
            FieldElement::Zero
        } else {
            debug_assert!(v < self.q);
            FieldElement::Alpha(self.log[v as usize])
        }
    }

    /// Packed polynomial representation of an element.
    pub fn packed(&self, x: FieldElement) -> u32 {
        match x {
            FieldElement::Zero => 0,
            FieldElement::Alpha(i) => self.exp[i as usize],
        }
    }

    /// The prime-subfield element c (as an integer mod p).
    pub fn from_prime(&self, c: u32) -> FieldElement {
        self.from_packed(c % self.p)
    }

    /// Integer value of an element of the prime subfield, if it is one.
    pub fn prime_value(&self, x: FieldElement) -> Option<u32> {
        let v = self.packed(x);
        (v < self.p).then_some(v)
    }

    /// All q elements: zero first, then a^0, a^1, ...
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        std::iter::once(FieldElement::Zero)
            .chain((0..self.q1).map(|i| FieldElement::Alpha(i as u16)))
    }

    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        match (x, y) {
            (FieldElement::Zero, _) => y,
            (_, FieldElement::Zero) => x,
            (FieldElement::Alpha(a), FieldElement::Alpha(b)) => {
                let a = u32::from(a);
                let b = u32::from(b);
                let d = (b + self.q1 - a) % self.q1;
                match self.zech[d as usize] {
                    ZECH_NONE => FieldElement::Zero,
                    z => FieldElement::Alpha(((a + z) % self.q1) as u16),
                }
            }
        }
    }

    pub fn neg(&self, x: FieldElement) -> FieldElement {
        if self.p == 2 {
            return x;
        }
        match x {
            FieldElement::Zero => FieldElement::Zero,
            FieldElement::Alpha(a) => {
                // -1 = a^((q-1)/2) in odd characteristic.
                FieldElement::Alpha(((u32::from(a) + self.q1 / 2) % self.q1) as u16)
            }
        }
    }

    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        match (x, y) {
            (FieldElement::Zero, _) | (_, FieldElement::Zero) => FieldElement::Zero,
            (FieldElement::Alpha(a), FieldElement::Alpha(b)) => {
                FieldElement::Alpha(((u32::from(a) + u32::from(b)) % self.q1) as u16)
            }
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, x: FieldElement) -> FieldElement {
        match x {
            FieldElement::Zero => panic!("inverse of zero in GF({}^{})", self.p, self.s),
            FieldElement::Alpha(a) => {
                FieldElement::Alpha(((self.q1 - u32::from(a)) % self.q1) as u16)
            }
        }
    }

    pub fn div(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.mul(x, self.inv(y))
    }

    /// x^e for e >= 0, with 0^0 = 1.
    pub fn pow(&self, x: FieldElement, e: u64) -> FieldElement {
        match x {
            FieldElement::Zero => {
                if e == 0 {
                    FieldElement::ONE
                } else {
                    FieldElement::Zero
                }
            }
            FieldElement::Alpha(a) => {
                let idx = (u64::from(a) * (e % u64::from(self.q1))) % u64::from(self.q1);
                FieldElement::Alpha(idx as u16)
            }
        }
    }

    /// The Frobenius map x -> x^p.
    pub fn frobenius(&self, x: FieldElement) -> FieldElement {
        self.pow(x, u64::from(self.p))
    }

    /// x -> x^(p^i).
    pub fn frobenius_iter(&self, x: FieldElement, i: u32) -> FieldElement {
        let mut y = x;
        for _ in 0..(i % self.s) {
            y = self.frobenius(y);
        }
        // x^(p^s) = x, so only i mod s matters.
        y
    }

    /// Absolute trace x + x^p + ... + x^(p^(s-1)), landing in GF(p).
    pub fn trace_to_prime(&self, x: FieldElement) -> FieldElement {
        let mut acc = FieldElement::Zero;
        let mut y = x;
        for _ in 0..self.s {
            acc = self.add(acc, y);
            y = self.frobenius(y);
        }
        acc
    }

    /// Relative trace into GF(p^m): sum of x^((p^m)^j) for j < s/m.
    pub fn relative_trace(&self, x: FieldElement, m: u32) -> Result<FieldElement> {
        self.check_divisor(m)?;
        let mut acc = FieldElement::Zero;
        let mut y = x;
        for _ in 0..self.s / m {
            acc = self.add(acc, y);
            y = self.frobenius_iter(y, m);
        }
        Ok(acc)
    }

    /// A primitive element of the subfield GF(p^m): a^((q-1)/(p^m-1)).
    pub fn subfield_primitive(&self, m: u32) -> Result<FieldElement> {
        self.check_divisor(m)?;
        let sub_order = self.p.pow(m) - 1;
        Ok(FieldElement::Alpha((self.q1 / sub_order % self.q1) as u16))
    }

    /// Whether x lies in the subfield GF(p^m), i.e. x^(p^m) = x.
    pub fn in_subfield(&self, x: FieldElement, m: u32) -> bool {
        self.frobenius_iter(x, m % self.s) == x
    }

    fn check_divisor(&self, m: u32) -> Result<()> {
        if m == 0 || !self.s.is_multiple_of(m) {
            return Err(Error::NotADivisor { m, s: self.s });
        }
        Ok(())
    }

    /// Render an element as "0", "1", "a", or "a^i".
    pub fn format_element(&self, x: FieldElement) -> String {
        match x {
            FieldElement::Zero => "0".into(),
            FieldElement::Alpha(0) => "1".into(),
            FieldElement::Alpha(1) => "a".into(),
            FieldElement::Alpha(i) => format!("a^{i}"),
        }
    }
}

fn validate_params(p: u32, s: u32) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if s == 0 {
        return Err(Error::InvalidModulus(
            "extension degree must be >= 1".into(),
        ));
    }
    match p.checked_pow(s) {
        Some(q) if q <= MAX_FIELD_SIZE => Ok(()),
        _ => Err(Error::FieldTooLarge { p, s }),
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Digitwise sum of two packed base-p values of at most s digits.
fn packed_add(a: u32, b: u32, p: u32, s: u32) -> u32 {
    let mut out = 0;
    let mut scale = 1;
    let (mut a, mut b) = (a, b);
    for _ in 0..s {
        out += ((a % p + b % p) % p) * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    out
}

/// Powers of x mod the modulus, packed; None unless x has order exactly q-1.
///
/// Order exactly q-1 forces the residue ring to be a field (the unit group
/// can only have q-1 elements when every nonzero element is a unit), so this
/// single check covers both irreducibility and primitivity.
fn build_exp_table(p: u32, s: u32, modulus: &[u32]) -> Option<Vec<u32>> {
    let q = p.pow(s);
    let q1 = (q - 1) as usize;
    let mut digits = vec![0u32; s as usize + 1];
    digits[0] = 1;
    let mut exp = Vec::with_capacity(q1);
    for i in 0..q1 {
        let v = pack(&digits[..s as usize], p);
        if v == 0 || (v == 1 && i > 0) {
            return None;
        }
        exp.push(v);
        mul_by_x(&mut digits, p, modulus);
    }
    (pack(&digits[..s as usize], p) == 1).then_some(exp)
}

fn pack(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Multiply a polynomial of degree < s by x and reduce mod the monic modulus.
fn mul_by_x(digits: &mut [u32], p: u32, modulus: &[u32]) {
    let s = digits.len() - 1;
    for j in (1..=s).rev() {
        digits[j] = digits[j - 1];
    }
    digits[0] = 0;
    let t = digits[s];
    if t != 0 {
        for j in 0..=s {
            digits[j] = (digits[j] + (p - modulus[j] % p) % p * t) % p;
        }
    }
    debug_assert_eq!(digits[s], 0);
}

/// Default modulus for GF(p^s): the pinned table entry when present,
/// otherwise the first primitive polynomial in base-p integer order.
pub fn default_modulus(p: u32, s: u32) -> Result<Vec<u32>> {
    validate_params(p, s)?;
    for &(tp, ts, coeffs) in DEFAULT_MODULI {
        if tp == p && ts == s {
            return Ok(coeffs.to_vec());
        }
    }
    search_modulus(p, s).ok_or(Error::NotPrimitive { p })
}

/// Exhaustive search for the smallest primitive polynomial of degree s,
/// ordering candidates by their coefficient vector read as a base-p integer
/// with the highest-degree coefficient most significant.
pub fn search_modulus(p: u32, s: u32) -> Option<Vec<u32>> {
    let q = p.checked_pow(s)?;
    let mut coeffs = vec![0u32; s as usize + 1];
    coeffs[s as usize] = 1;
    for low in 1..q {
        let mut v = low;
        for c in coeffs.iter_mut().take(s as usize) {
            *c = v % p;
            v /= p;
        }
        if coeffs[0] == 0 {
            continue;
        }
        if build_exp_table(p, s, &coeffs).is_some() {
            return Some(coeffs);
        }
    }
    None
}
