//! Sparse polynomials on the torus, the evaluation map, and toric codes.
//!
//! The ambient ring is R = GF(q)[y_1..y_r] / (y_i^(q-1) - 1); exponents are
//! therefore always reduced into H = {0..q-2}^r. Evaluation at the torus
//! point with log-coordinates (j_1..j_r) sends the monomial y^u to
//! a^(j.u mod q-1), so codewords are pure index arithmetic.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exponents::{self, ExponentSet, ExponentVector};
use crate::galois::{Field, FieldElement};
use crate::matrix::Matrix;

/// An element of R as a map from exponent vectors to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SparsePoly {
    terms: BTreeMap<ExponentVector, FieldElement>,
}

impl SparsePoly {
    pub fn zero() -> SparsePoly {
        SparsePoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: FieldElement, r: usize) -> SparsePoly {
        SparsePoly::monomial(ExponentVector::from_reduced(vec![0; r]), c)
    }

    pub fn monomial(u: ExponentVector, c: FieldElement) -> SparsePoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(u, c);
        }
        SparsePoly { terms }
    }

    pub fn from_terms<I>(terms: I) -> SparsePoly
    where
        I: IntoIterator<Item = (ExponentVector, FieldElement)>,
    {
        let mut poly = SparsePoly::zero();
        let mut map = BTreeMap::new();
        for (u, c) in terms {
            if !c.is_zero() {
                map.insert(u, c);
            }
        }
        poly.terms = map;
        poly
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, FieldElement)> {
        self.terms.iter().map(|(u, &c)| (u, c))
    }

    pub fn coefficient(&self, u: &ExponentVector) -> FieldElement {
        self.terms.get(u).copied().unwrap_or(FieldElement::Zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &ExponentVector> {
        self.terms.keys()
    }

    pub fn add(&self, other: &SparsePoly, f: &Field) -> SparsePoly {
        let mut terms = self.terms.clone();
        for (u, &c) in &other.terms {
            let sum = f.add(terms.get(u).copied().unwrap_or(FieldElement::Zero), c);
            if sum.is_zero() {
                terms.remove(u);
            } else {
                terms.insert(u.clone(), sum);
            }
        }
        SparsePoly { terms }
    }

    /// Product in R: exponents add coordinatewise mod q-1.
    pub fn mul(&self, other: &SparsePoly, f: &Field) -> SparsePoly {
        let mut acc: BTreeMap<ExponentVector, FieldElement> = BTreeMap::new();
        for (u, &a) in &self.terms {
            for (v, &b) in &other.terms {
                let w = u.add(v, f);
                let c = f.add(
                    acc.get(&w).copied().unwrap_or(FieldElement::Zero),
                    f.mul(a, b),
                );
                if c.is_zero() {
                    acc.remove(&w);
                } else {
                    acc.insert(w, c);
                }
            }
        }
        SparsePoly { terms: acc }
    }

    pub fn scale(&self, c: FieldElement, f: &Field) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero();
        }
        SparsePoly {
            terms: self
                .terms
                .iter()
                .map(|(u, &a)| (u.clone(), f.mul(a, c)))
                .collect(),
        }
    }

    /// Value at the torus point with log-coordinates `point`.
    pub fn eval_at(&self, point: &[u32], f: &Field) -> FieldElement {
        let q1 = u64::from(f.group_order());
        let mut acc = FieldElement::Zero;
        for (u, &c) in &self.terms {
            let dot: u64 = u
                .coords()
                .iter()
                .zip(point)
                .map(|(&e, &j)| (u64::from(e) * u64::from(j)) % q1)
                .sum();
            acc = f.add(acc, f.mul(c, f.alpha_pow((dot % q1) as u32)));
        }
        acc
    }

    /// Render as e.g. "a^5*x^5 + a^10*x^10" (variables x, y, z, then y4...).
    pub fn render(&self, f: &Field) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let var = |i: usize, r: usize| -> String {
            if r <= 3 {
                ["x", "y", "z"][i].into()
            } else {
                format!("y{}", i + 1)
            }
        };
        let mut parts = Vec::new();
        for (u, &c) in &self.terms {
            let r = u.r();
            let mut factors = Vec::new();
            for (i, &e) in u.coords().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(var(i, r)),
                    _ => factors.push(format!("{}^{}", var(i, r), e)),
                }
            }
            let coeff = f.format_element(c);
            let term = if factors.is_empty() {
                coeff
            } else if c == FieldElement::ONE {
                factors.join("*")
            } else {
                format!("{}*{}", coeff, factors.join("*"))
            };
            parts.push(term);
        }
        parts.join(" + ")
    }
}

/// The algebraic torus (GF(q)*)^r as an ordered point list.
///
/// Point j has coordinates (a^(j_1), ..., a^(j_r)) where (j_1..j_r) runs over
/// {0..q-2}^r in lexicographic order.
#[derive(Clone, Debug)]
pub struct Torus {
    r: usize,
    q1: u32,
}

impl Torus {
    pub fn new(field: &Field, r: usize) -> Torus {
        Torus {
            r,
            q1: field.group_order(),
        }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Number of points, (q-1)^r.
    pub fn len(&self) -> usize {
        (self.q1 as usize).pow(self.r as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Log-coordinate tuples in lexicographic order.
    pub fn points(&self) -> impl Iterator<Item = Vec<u32>> {
        exponents::lex_tuples(self.q1, self.r)
    }

    /// Field coordinates of one point.
    pub fn coordinates(&self, point: &[u32], field: &Field) -> Vec<FieldElement> {
        point.iter().map(|&j| field.alpha_pow(j)).collect()
    }
}

/// Evaluation of a polynomial over the whole torus, in point order.
pub fn evaluate(f: &SparsePoly, field: &Field, r: usize) -> Vec<FieldElement> {
    let torus = Torus::new(field, r);
    torus.points().map(|pt| f.eval_at(&pt, field)).collect()
}

/// A linear code presented by a full-rank generator matrix.
///
/// `alphabet` is the order of the subfield the code is linear over: q for
/// toric codes, p for subfield-subcodes. Entries of `gen` always lie in that
/// subfield.
#[derive(Clone, Debug)]
pub struct LinearCode {
    n: usize,
    k: usize,
    alphabet: u32,
    gen: Matrix,
    label: String,
}

impl LinearCode {
    /// Wrap a generator matrix, verifying the rows are independent.
    pub fn new(gen: Matrix, alphabet: u32, field: &Field, label: String) -> Result<LinearCode> {
        let k = gen.rows();
        let rank = gen.rank(field);
        if rank != k {
            return Err(Error::RankDeficient {
                expected: k,
                actual: rank,
            });
        }
        Ok(LinearCode {
            n: gen.cols(),
            k,
            alphabet,
            gen,
            label,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Order of the subfield the code is linear over.
    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_zero_code(&self) -> bool {
        self.k == 0
    }
}

/// The generalized toric code C_U: monomials y^u for u in U evaluated over
/// the torus. Rows follow the lexicographic order of U; dim C_U = |U|.
pub fn gt_code(u: &ExponentSet, field: &Field) -> Result<LinearCode> {
    if u.is_empty() {
        return Err(Error::EmptySupport);
    }
    let r = u.r();
    let torus = Torus::new(field, r);
    let points: Vec<Vec<u32>> = torus.points().collect();
    let rows: Vec<Vec<FieldElement>> = u
        .iter()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|exp| {
            let mono = SparsePoly::monomial((*exp).clone(), FieldElement::ONE);
            points.iter().map(|pt| mono.eval_at(pt, field)).collect()
        })
        .collect();
    LinearCode::new(
        Matrix::from_rows(rows),
        field.order(),
        field,
        format!("C_U over GF({})", field.order()),
    )
}

/// The dual toric code: the GT code on u_perp(U). U = H gives the zero code.
pub fn dual_gt_code(u: &ExponentSet, field: &Field) -> Result<LinearCode> {
    let perp = exponents::u_perp(u, field);
    if perp.is_empty() {
        let torus = Torus::new(field, u.r());
        return LinearCode::new(
            Matrix::empty(torus.len()),
            field.order(),
            field,
            format!("C_U^perp over GF({})", field.order()),
        );
    }
    let mut code = gt_code(&perp, field)?;
    code.label = format!("C_U^perp over GF({})", field.order());
    Ok(code)
}

/// The power substitution y_i -> y_i^i0 for i0 coprime to q-1:
/// every exponent vector u becomes i0*u mod q-1.
pub fn theta_power(f: &SparsePoly, i0: u64, field: &Field) -> Result<SparsePoly> {
    let q1 = u64::from(field.group_order());
    if gcd(i0 % q1, q1) != 1 {
        return Err(Error::NotCoprime {
            i: i0,
            q1: field.group_order(),
        });
    }
    Ok(SparsePoly::from_terms(
        f.terms().map(|(u, c)| (u.scale(i0, field), c)),
    ))
}

/// The coordinate scaling y_i -> alpha_i * y_i for nonzero alpha_i:
/// the coefficient at u picks up the factor alpha^u.
pub fn theta_scale(f: &SparsePoly, alpha: &[FieldElement], field: &Field) -> Result<SparsePoly> {
    if alpha.iter().any(|a| a.is_zero()) {
        return Err(Error::ZeroScale);
    }
    Ok(SparsePoly::from_terms(f.terms().map(|(u, c)| {
        let factor = u
            .coords()
            .iter()
            .zip(alpha)
            .fold(FieldElement::ONE, |acc, (&e, &a)| {
                field.mul(acc, field.pow(a, u64::from(e)))
            });
        (u.clone(), field.mul(c, factor))
    })))
}

/// f^p computed in R: each coefficient is raised to the p-th power and each
/// exponent is multiplied by p mod q-1.
pub fn frobenius_poly(f: &SparsePoly, field: &Field) -> SparsePoly {
    let p = u64::from(field.p());
    let mut out = SparsePoly::zero();
    for (u, c) in f.terms() {
        let term = SparsePoly::monomial(u.scale(p, field), field.pow(c, p));
        out = out.add(&term, field);
    }
    out
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
