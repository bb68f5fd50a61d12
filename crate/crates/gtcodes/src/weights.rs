//! Exact weight distributions and minimum distances.
//!
//! Small-dimension codes are enumerated directly: messages walk a modular
//! Gray sequence over GF(p)^k (one generator-row addition per codeword), with
//! binary codewords packed into machine words and counted by popcount. Codes
//! whose message space exceeds the budget go through the dual: enumerate the
//! dual, then apply the MacWilliams transform in exact integer arithmetic.
//! Enumeration may be split across threads; partial counts merge by addition,
//! so results are bit-identical regardless of thread count.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::galois::Field;
use crate::torus::LinearCode;

/// Default enumeration budget: at most 2^28 codewords per enumeration.
pub const DEFAULT_BUDGET: u128 = 1 << 28;

/// Hard ceiling on any enumeration regardless of the requested budget; the
/// Gray walk counts steps in a u64, and anything near this is centuries of
/// compute anyway.
const MAX_ENUMERABLE: u128 = 1 << 62;

/// Exact weight distribution of a linear code: counts[w] codewords of
/// Hamming weight w.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightDistribution {
    counts: Vec<u128>,
    n: usize,
    field_order: u32,
}

impl WeightDistribution {
    pub fn new(counts: Vec<u128>, field_order: u32) -> WeightDistribution {
        let n = counts.len() - 1;
        WeightDistribution {
            counts,
            n,
            field_order,
        }
    }

    pub fn counts(&self) -> &[u128] {
        &self.counts
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Order of the code's alphabet.
    pub fn field_order(&self) -> u32 {
        self.field_order
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().sum()
    }

    /// Minimum distance: the smallest positive weight present.
    pub fn min_positive_weight(&self) -> Option<usize> {
        (1..=self.n).find(|&w| self.counts[w] > 0)
    }
}

/// Number of messages alphabet^k, or None on overflow.
pub fn message_count(alphabet: u32, k: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..k {
        acc = acc.checked_mul(u128::from(alphabet))?;
    }
    Some(acc)
}

/// Exact weight distribution by full message enumeration.
///
/// Fails with `BudgetExceeded` when alphabet^k > budget; callers should then
/// go through the dual (`min_distance` does this automatically).
pub fn weight_distribution(
    code: &LinearCode,
    field: &Field,
    budget: u128,
) -> Result<WeightDistribution> {
    let budget = budget.min(MAX_ENUMERABLE);
    let total = message_count(code.alphabet(), code.k()).ok_or(Error::BudgetExceeded {
        required: u128::MAX,
        budget,
    })?;
    if total > budget {
        return Err(Error::BudgetExceeded {
            required: total,
            budget,
        });
    }
    let counts = if code.k() == 0 {
        let mut counts = vec![0u128; code.n() + 1];
        counts[0] = 1;
        counts
    } else if code.alphabet() == 2 {
        enumerate_binary(code, field)
    } else {
        enumerate_general(code, field)
    };
    let dist = WeightDistribution::new(counts, code.alphabet());
    debug_assert_eq!(dist.total(), total);
    Ok(dist)
}

/// Split 0..total into contiguous ranges for the worker pool.
fn step_ranges(total: u64) -> Vec<(u64, u64)> {
    const MIN_PARALLEL: u64 = 1 << 16;
    if total < MIN_PARALLEL {
        return vec![(0, total)];
    }
    let pieces = (rayon::current_num_threads() as u64 * 4).max(1);
    let chunk = total.div_ceil(pieces);
    (0..pieces)
        .map(|i| (i * chunk, ((i + 1) * chunk).min(total)))
        .filter(|(lo, hi)| lo < hi)
        .collect()
}

/// Gray digits of a step counter: digit i of the message is
/// (c_i - c_(i+1)) mod p, with c in base p.
fn gray_digits(mut c: u64, p: u64, k: usize) -> Vec<u8> {
    let mut base = Vec::with_capacity(k + 1);
    for _ in 0..k {
        base.push(c % p);
        c /= p;
    }
    base.push(0);
    (0..k)
        .map(|i| ((base[i] + p - base[i + 1]) % p) as u8)
        .collect()
}

/// Binary path: codewords packed into u64 words, weights by popcount.
fn enumerate_binary(code: &LinearCode, field: &Field) -> Vec<u128> {
    let n = code.n();
    let k = code.k();
    let words = n.div_ceil(64);
    let rows: Vec<Vec<u64>> = (0..k)
        .map(|i| {
            let mut packed = vec![0u64; words];
            for (j, &x) in code.generator().row(i).iter().enumerate() {
                if field.prime_value(x).expect("binary code entry") == 1 {
                    packed[j / 64] |= 1 << (j % 64);
                }
            }
            packed
        })
        .collect();

    let total = 1u64 << k;
    let partials: Vec<Vec<u64>> = step_ranges(total)
        .into_par_iter()
        .map(|(lo, hi)| {
            let mut counts = vec![0u64; n + 1];
            let mut state = vec![0u64; words];
            for (i, &g) in gray_digits(lo, 2, k).iter().enumerate() {
                if g == 1 {
                    for (w, r) in state.iter_mut().zip(&rows[i]) {
                        *w ^= r;
                    }
                }
            }
            let weight = |s: &[u64]| -> usize { s.iter().map(|w| w.count_ones() as usize).sum() };
            counts[weight(&state)] += 1;
            for c in lo + 1..hi {
                let t = c.trailing_zeros() as usize;
                for (w, r) in state.iter_mut().zip(&rows[t]) {
                    *w ^= r;
                }
                counts[weight(&state)] += 1;
            }
            counts
        })
        .collect();

    merge_counts(partials, n)
}

/// Symbolwise addition of packed field values, by table when the field is
/// small enough, digitwise otherwise.
enum SymbolAdd {
    Table { q: u32, table: Vec<u16> },
    Digits { p: u32, s: u32 },
}

impl SymbolAdd {
    fn new(field: &Field) -> SymbolAdd {
        let q = field.order();
        if q <= 256 {
            let mut table = vec![0u16; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    let sum = field.add(field.from_packed(a), field.from_packed(b));
                    table[(a * q + b) as usize] = field.packed(sum) as u16;
                }
            }
            SymbolAdd::Table { q, table }
        } else {
            SymbolAdd::Digits {
                p: field.p(),
                s: field.s(),
            }
        }
    }

    #[inline]
    fn add(&self, a: u16, b: u16) -> u16 {
        match self {
            SymbolAdd::Table { q, table } => table[(u32::from(a) * q + u32::from(b)) as usize],
            SymbolAdd::Digits { p, s } => {
                let mut out = 0u32;
                let mut scale = 1u32;
                let (mut a, mut b) = (u32::from(a), u32::from(b));
                for _ in 0..*s {
                    out += (a % p + b % p) % p * scale;
                    a /= p;
                    b /= p;
                    scale *= p;
                }
                out as u16
            }
        }
    }
}

/// General path: symbols kept as packed field values, one sparse virtual row
/// per GF(p)-coordinate of the message space.
fn enumerate_general(code: &LinearCode, field: &Field) -> Vec<u128> {
    let n = code.n();
    let k = code.k();
    let p = field.p();
    let m = (1..=field.s())
        .find(|&m| field.p().pow(m) == code.alphabet())
        .expect("alphabet is a subfield order");
    // Power basis of the alphabet subfield over GF(p).
    let beta = field.subfield_primitive(m).expect("m divides s");

    // Virtual row (i, j): beta^j * row_i, stored sparsely.
    let mut vrows: Vec<Vec<(u32, u16)>> = Vec::with_capacity(k * m as usize);
    for i in 0..k {
        for j in 0..m {
            let scale = field.pow(beta, u64::from(j));
            let row = code
                .generator()
                .row(i)
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(t, &x)| (t as u32, field.packed(field.mul(scale, x)) as u16))
                .collect();
            vrows.push(row);
        }
    }

    let digits = k * m as usize;
    let total = message_count(p, digits).expect("fits budget") as u64;
    let adder = SymbolAdd::new(field);

    let partials: Vec<Vec<u64>> = step_ranges(total)
        .into_par_iter()
        .map(|(lo, hi)| {
            let mut counts = vec![0u64; n + 1];
            let mut state = vec![0u16; n];
            let mut weight: usize = 0;
            // Initial state: the Gray message at step lo.
            for (d, &g) in gray_digits(lo, u64::from(p), digits).iter().enumerate() {
                if g == 0 {
                    continue;
                }
                let gf = field.from_prime(u32::from(g));
                for &(t, v) in &vrows[d] {
                    let scaled = field.mul(gf, field.from_packed(u32::from(v)));
                    let sum = adder.add(state[t as usize], field.packed(scaled) as u16);
                    state[t as usize] = sum;
                }
            }
            weight += state.iter().filter(|&&v| v != 0).count();
            counts[weight] += 1;

            // Base-p odometer for the trailing-(p-1) position.
            let mut odo = Vec::with_capacity(digits);
            let mut c = lo;
            for _ in 0..digits {
                odo.push((c % u64::from(p)) as u8);
                c /= u64::from(p);
            }
            let top = (p - 1) as u8;
            for _ in lo + 1..hi {
                let mut t = 0;
                while odo[t] == top {
                    odo[t] = 0;
                    t += 1;
                }
                odo[t] += 1;
                for &(pos, v) in &vrows[t] {
                    let old = state[pos as usize];
                    let new = adder.add(old, v);
                    state[pos as usize] = new;
                    weight = weight + usize::from(new != 0) - usize::from(old != 0);
                }
                counts[weight] += 1;
            }
            counts
        })
        .collect();

    merge_counts(partials, n)
}

fn merge_counts(partials: Vec<Vec<u64>>, n: usize) -> Vec<u128> {
    let mut out = vec![0u128; n + 1];
    for part in partials {
        for (o, c) in out.iter_mut().zip(part) {
            *o += u128::from(c);
        }
    }
    out
}

/// MacWilliams transform: the exact weight distribution of C from the exact
/// distribution of its dual. `k_primal` pins dim C so the result can be
/// cross-checked against |C| = q^k.
pub fn macwilliams(dual: &WeightDistribution, k_primal: usize) -> Result<WeightDistribution> {
    let n = dual.n;
    let q = i128::from(dual.field_order);
    let dual_size: BigInt = dual.counts.iter().map(|&c| BigInt::from(c)).sum();
    if dual.counts[0] != 1 {
        return Err(Error::BadDistribution(
            "dual distribution has A_0 != 1".into(),
        ));
    }
    let binom = pascal(n);
    let mut counts = Vec::with_capacity(n + 1);
    for w in 0..=n {
        let mut acc = BigInt::zero();
        for (j, &bj) in dual.counts.iter().enumerate() {
            if bj == 0 {
                continue;
            }
            acc += BigInt::from(bj) * krawtchouk(w, j, n, q, &binom);
        }
        if acc.is_negative() {
            return Err(Error::BadDistribution(format!(
                "negative count at weight {w}"
            )));
        }
        let (quot, rem) = num_integer_div_rem(&acc, &dual_size);
        if !rem.is_zero() {
            return Err(Error::BadDistribution(format!(
                "non-integer count at weight {w}"
            )));
        }
        let c = quot
            .to_u128()
            .ok_or_else(|| Error::BadDistribution("count overflows u128".into()))?;
        counts.push(c);
    }
    let dist = WeightDistribution::new(counts, dual.field_order);
    let expect = message_count(dual.field_order, k_primal)
        .ok_or_else(|| Error::BadDistribution("primal size overflows u128".into()))?;
    if dist.total() != expect {
        return Err(Error::BadDistribution(format!(
            "transformed distribution sums to {} but dim {} demands {}",
            dist.total(),
            k_primal,
            expect
        )));
    }
    Ok(dist)
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    (a / b, a % b)
}

/// Krawtchouk polynomial K_w(j) over a q-ary alphabet:
/// sum_i (-1)^i (q-1)^(w-i) C(j, i) C(n-j, w-i).
fn krawtchouk(w: usize, j: usize, n: usize, q: i128, binom: &[Vec<BigInt>]) -> BigInt {
    let mut acc = BigInt::zero();
    for i in 0..=w.min(j) {
        if w - i > n - j {
            continue;
        }
        let term = BigInt::from(q - 1).pow((w - i) as u32) * &binom[j][i] * &binom[n - j][w - i];
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn pascal(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row = vec![BigInt::from(1); i + 1];
        for j in 1..i {
            row[j] = &rows[i - 1][j - 1] + &rows[i - 1][j];
        }
        rows.push(row);
    }
    rows
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum DistanceMethod {
    Direct,
    ViaDual,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Distance {
    /// Exact minimum distance plus how it was obtained.
    Exact {
        d: usize,
        method: DistanceMethod,
        enumerated: u128,
    },
    /// The zero code has no nonzero codeword, hence no distance.
    ZeroCode,
    /// Neither the code nor its dual fits the enumeration budget; the
    /// distance is not verified at desk scale (never estimated).
    NotVerified { required: Option<u128> },
}

impl Distance {
    pub fn exact(&self) -> Option<usize> {
        match self {
            Distance::Exact { d, .. } => Some(*d),
            _ => None,
        }
    }
}

/// Exact minimum distance of a code, enumerating whichever of code/dual fits
/// the budget. When both fit, both are computed and must agree.
pub fn min_distance(
    code: &LinearCode,
    dual: Option<&LinearCode>,
    field: &Field,
    budget: u128,
) -> Result<Distance> {
    Ok(min_distance_with_distribution(code, dual, field, budget)?.0)
}

/// As `min_distance`, but also hands back the code's weight distribution
/// when one was obtained (directly or by transforming the dual's).
pub fn min_distance_with_distribution(
    code: &LinearCode,
    dual: Option<&LinearCode>,
    field: &Field,
    budget: u128,
) -> Result<(Distance, Option<WeightDistribution>)> {
    let budget = budget.min(MAX_ENUMERABLE);
    if code.k() == 0 {
        return Ok((Distance::ZeroCode, None));
    }
    let direct_req = message_count(code.alphabet(), code.k());
    let dual_req = dual.map(|d| message_count(d.alphabet(), d.k()));

    let direct = match direct_req {
        Some(req) if req <= budget => Some((weight_distribution(code, field, budget)?, req)),
        _ => None,
    };
    let via_dual = match (dual, dual_req) {
        (Some(d), Some(Some(req))) if req <= budget => {
            debug_assert_eq!(d.n(), code.n());
            debug_assert_eq!(d.alphabet(), code.alphabet());
            let dual_dist = weight_distribution(d, field, budget)?;
            Some((macwilliams(&dual_dist, code.k())?, req))
        }
        _ => None,
    };

    let min = |dist: &WeightDistribution| dist.min_positive_weight().expect("k > 0");
    match (direct, via_dual) {
        (Some((dist, req)), Some((transformed, _))) => {
            let (d1, d2) = (min(&dist), min(&transformed));
            if d1 != d2 {
                return Err(Error::DistanceMismatch {
                    direct: d1,
                    via_dual: d2,
                });
            }
            if dist != transformed {
                return Err(Error::BadDistribution(
                    "direct enumeration and dual transform disagree".into(),
                ));
            }
            let result = Distance::Exact {
                d: d1,
                method: DistanceMethod::Direct,
                enumerated: req,
            };
            Ok((result, Some(dist)))
        }
        (Some((dist, req)), None) => {
            let result = Distance::Exact {
                d: min(&dist),
                method: DistanceMethod::Direct,
                enumerated: req,
            };
            Ok((result, Some(dist)))
        }
        (None, Some((dist, req))) => {
            let result = Distance::Exact {
                d: min(&dist),
                method: DistanceMethod::ViaDual,
                enumerated: req,
            };
            Ok((result, Some(dist)))
        }
        (None, None) => {
            let required = match (direct_req, dual_req) {
                (Some(a), Some(Some(b))) => Some(a.min(b)),
                (Some(a), _) => Some(a),
                (None, Some(Some(b))) => Some(b),
                _ => None,
            };
            Ok((Distance::NotVerified { required }, None))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponents::ExponentSet;
    use crate::galois::FieldElement;
    use crate::matrix::Matrix;
    use crate::subfield::subfield_subcode;

    fn code_from_rows(rows: Vec<Vec<FieldElement>>, alphabet: u32, f: &Field) -> LinearCode {
        LinearCode::new(Matrix::from_rows(rows), alphabet, f, "test".into()).unwrap()
    }

    /// Naive reference: multiply out every message with field arithmetic.
    fn naive_distribution(code: &LinearCode, f: &Field) -> Vec<u128> {
        let k = code.k();
        let m = (1..=f.s())
            .find(|&m| f.p().pow(m) == code.alphabet())
            .unwrap();
        let beta = f.subfield_primitive(m).unwrap();
        // All p^m elements of the alphabet subfield.
        let sub_order = f.p().pow(m) - 1;
        let symbols: Vec<FieldElement> = std::iter::once(FieldElement::Zero)
            .chain((0..sub_order).map(|i| f.pow(beta, u64::from(i))))
            .collect();
        let mut counts = vec![0u128; code.n() + 1];
        let total = symbols.len().pow(k as u32);
        for mut idx in 0..total {
            let msg: Vec<FieldElement> = (0..k)
                .map(|_| {
                    let s = symbols[idx % symbols.len()];
                    idx /= symbols.len();
                    s
                })
                .collect();
            let word = code.generator().encode(&msg, f);
            let w = word.iter().filter(|x| !x.is_zero()).count();
            counts[w] += 1;
        }
        counts
    }

    #[test]
    fn repetition_code_distribution() {
        let f = Field::new(2, 1).unwrap();
        let code = code_from_rows(vec![vec![FieldElement::ONE; 3]], 2, &f);
        let dist = weight_distribution(&code, &f, DEFAULT_BUDGET).unwrap();
        assert_eq!(dist.counts(), &[1, 0, 0, 1]);
        assert_eq!(dist.min_positive_weight(), Some(3));
    }

    #[test]
    fn binary_matches_naive() {
        let f = Field::new(2, 3).unwrap();
        let u = ExponentSet::from_coords(2, &[vec![1, 0], vec![2, 0], vec![4, 0], vec![0, 0]], &f)
            .unwrap();
        let code = subfield_subcode(&u, &f).unwrap();
        let dist = weight_distribution(&code, &f, DEFAULT_BUDGET).unwrap();
        assert_eq!(dist.counts(), naive_distribution(&code, &f).as_slice());
    }

    #[test]
    fn ternary_matches_naive() {
        let f = Field::new(3, 2).unwrap();
        let u = ExponentSet::from_coords(2, &[vec![5, 0], vec![7, 0], vec![0, 0]], &f).unwrap();
        let code = subfield_subcode(&u, &f).unwrap();
        assert_eq!(code.alphabet(), 3);
        let dist = weight_distribution(&code, &f, DEFAULT_BUDGET).unwrap();
        assert_eq!(dist.counts(), naive_distribution(&code, &f).as_slice());
    }

    #[test]
    fn extension_alphabet_matches_naive() {
        let f = Field::new(2, 2).unwrap();
        let u = ExponentSet::from_coords(1, &[vec![0], vec![1]], &f).unwrap();
        let code = crate::torus::gt_code(&u, &f).unwrap();
        assert_eq!(code.alphabet(), 4);
        let dist = weight_distribution(&code, &f, DEFAULT_BUDGET).unwrap();
        assert_eq!(dist.counts(), naive_distribution(&code, &f).as_slice());
        assert_eq!(dist.total(), 16);
    }

    #[test]
    fn enumeration_cap_holds_even_with_unbounded_budget() {
        // A dim-70 binary code can never be walked; an absurd budget must
        // produce a clean error instead of a 2^70-step loop.
        let f = Field::new(2, 1).unwrap();
        let rows = (0..70)
            .map(|i| {
                (0..70)
                    .map(|j| {
                        if i == j {
                            FieldElement::ONE
                        } else {
                            FieldElement::Zero
                        }
                    })
                    .collect()
            })
            .collect();
        let code = code_from_rows(rows, 2, &f);
        match weight_distribution(&code, &f, u128::MAX) {
            Err(Error::BudgetExceeded { required, .. }) => {
                assert_eq!(required, 1u128 << 70);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
        let d = min_distance(&code, None, &f, u128::MAX).unwrap();
        assert_eq!(
            d,
            Distance::NotVerified {
                required: Some(1u128 << 70)
            }
        );
    }

    #[test]
    fn budget_is_enforced() {
        let f = Field::new(2, 1).unwrap();
        let rows = (0..5)
            .map(|i| {
                (0..8)
                    .map(|j| {
                        if i == j {
                            FieldElement::ONE
                        } else {
                            FieldElement::Zero
                        }
                    })
                    .collect()
            })
            .collect();
        let code = code_from_rows(rows, 2, &f);
        assert!(matches!(
            weight_distribution(&code, &f, 16),
            Err(Error::BudgetExceeded {
                required: 32,
                budget: 16
            })
        ));
    }

    #[test]
    fn macwilliams_simple_cases() {
        // Dual = all of F_2^3 => primal is the zero code.
        let full = WeightDistribution::new(vec![1, 3, 3, 1], 2);
        let zero = macwilliams(&full, 0).unwrap();
        assert_eq!(zero.counts(), &[1, 0, 0, 0]);

        // Dual = [3,1,3] repetition => primal = [3,2] even-weight code.
        let rep = WeightDistribution::new(vec![1, 0, 0, 1], 2);
        let even = macwilliams(&rep, 2).unwrap();
        assert_eq!(even.counts(), &[1, 0, 3, 0]);
        assert_eq!(even.min_positive_weight(), Some(2));
    }

    #[test]
    fn macwilliams_round_trip() {
        let f = Field::new(3, 1).unwrap();
        let one = FieldElement::ONE;
        let two = f.from_prime(2);
        let code = code_from_rows(
            vec![
                vec![one, one, two, FieldElement::Zero],
                vec![FieldElement::Zero, one, one, one],
            ],
            3,
            &f,
        );
        let dist = weight_distribution(&code, &f, DEFAULT_BUDGET).unwrap();
        let dual_dist = macwilliams(&dist, 2).unwrap();
        let back = macwilliams(&dual_dist, 2).unwrap();
        assert_eq!(back, dist);
    }

    #[test]
    fn macwilliams_rejects_garbage() {
        let junk = WeightDistribution::new(vec![1, 2, 0, 0], 2);
        assert!(macwilliams(&junk, 1).is_err());
    }

    #[test]
    fn min_distance_dispatch() {
        let f = Field::new(2, 2).unwrap();
        let u = ExponentSet::from_coords(1, &[vec![0]], &f).unwrap();
        let code = crate::subfield::subfield_subcode(&u, &f).unwrap();
        let dual = crate::subfield::dual_as_subcode(&u, &f).unwrap();

        // Both fit: direct and via-dual agree.
        let d = min_distance(&code, Some(&dual), &f, DEFAULT_BUDGET).unwrap();
        assert_eq!(
            d,
            Distance::Exact {
                d: 3,
                method: DistanceMethod::Direct,
                enumerated: 2
            }
        );

        // Starve the budget so only the dual path (dim 1 for the dual of the
        // even-weight code) fits.
        let d = min_distance(&dual, Some(&code), &f, 3).unwrap();
        assert_eq!(
            d,
            Distance::Exact {
                d: 2,
                method: DistanceMethod::ViaDual,
                enumerated: 2
            }
        );

        // Nothing fits.
        let d = min_distance(&code, Some(&dual), &f, 1).unwrap();
        assert_eq!(d, Distance::NotVerified { required: Some(2) });

        // Zero code.
        let full = ExponentSet::full(1, &f);
        let zero = crate::torus::dual_gt_code(&full, &f).unwrap();
        let d = min_distance(&zero, None, &f, DEFAULT_BUDGET).unwrap();
        assert_eq!(d, Distance::ZeroCode);
    }

    #[test]
    fn parallel_enumeration_is_deterministic() {
        let f = Field::new(2, 3).unwrap();
        let u = ExponentSet::from_coords(
            2,
            &[
                vec![1, 0],
                vec![2, 0],
                vec![4, 0],
                vec![0, 1],
                vec![0, 2],
                vec![0, 4],
                vec![1, 1],
                vec![2, 2],
                vec![4, 4],
                vec![0, 0],
                vec![3, 0],
                vec![6, 0],
                vec![5, 0],
                vec![1, 2],
                vec![2, 4],
                vec![4, 1],
                vec![1, 3],
                vec![2, 6],
                vec![4, 5],
            ],
            &f,
        )
        .unwrap();
        let code = subfield_subcode(&u, &f).unwrap();
        // Large enough (2^17 steps) to cross the parallel threshold.
        assert!(code.k() >= 17);
        let a = weight_distribution(&code, &f, DEFAULT_BUDGET).unwrap();
        let b = weight_distribution(&code, &f, DEFAULT_BUDGET).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.total(), 1u128 << code.k());
    }
}
