//! Subfield-subcodes D_U = C_U ∩ GF(p)^n and their duals.
//!
//! A codeword of C_U lies in GF(p)^n exactly when its polynomial f satisfies
//! f^p = f in R. Those polynomials are spanned by the coset polynomials
//! f_{I_b, beta} = beta y^b + beta^p y^(pb) + ... with beta in GF(p^(n_b)),
//! which gives an explicit basis of D_U (one block of n_b rows per coset
//! contained in U) and of its dual (one block per coset meeting u_perp(U)).
//! `subfield_subcode_oracle` recomputes D_U by brute-force linear algebra and
//! is kept free of the coset machinery so the two routes check each other.

use crate::error::{Error, Result};
use crate::exponents::{self, CyclotomicCoset, ExponentSet};
use crate::galois::{Field, FieldElement};
use crate::matrix::Matrix;
use crate::torus::{self, frobenius_poly, LinearCode, SparsePoly, Torus};

/// A basis polynomial of a subfield-subcode: support on one cyclotomic coset,
/// coefficient beta^(p^i) on the exponent p^i * leader.
#[derive(Clone, Debug)]
pub struct CosetPolynomial {
    coset: CyclotomicCoset,
    beta: FieldElement,
    poly: SparsePoly,
}

impl CosetPolynomial {
    pub fn coset(&self) -> &CyclotomicCoset {
        &self.coset
    }

    /// The leading coefficient beta (attached to the leader exponent).
    pub fn beta(&self) -> FieldElement {
        self.beta
    }

    pub fn poly(&self) -> &SparsePoly {
        &self.poly
    }
}

/// Build f_{I_b, beta}. Requires beta to be a nonzero element of
/// GF(p^(n_b)); anything else cannot evaluate into GF(p).
pub fn coset_poly(
    coset: &CyclotomicCoset,
    beta: FieldElement,
    field: &Field,
) -> Result<CosetPolynomial> {
    let m = coset.size() as u32;
    if beta.is_zero() || !field.in_subfield(beta, m) {
        return Err(Error::BetaOutsideSubfield { p: field.p(), m });
    }
    let mut coeff = beta;
    let poly = SparsePoly::from_terms(coset.members().iter().map(|u| {
        let term = (u.clone(), coeff);
        coeff = field.frobenius(coeff);
        term
    }));
    Ok(CosetPolynomial {
        coset: coset.clone(),
        beta,
        poly,
    })
}

/// The trace map on R: g + g^p + ... + g^(p^(s-1)). The image is exactly the
/// set of polynomials evaluating into GF(p).
pub fn trace_poly(g: &SparsePoly, field: &Field) -> SparsePoly {
    let mut acc = SparsePoly::zero();
    let mut power = g.clone();
    for _ in 0..field.s() {
        acc = acc.add(&power, field);
        power = frobenius_poly(&power, field);
    }
    acc
}

/// Basis of D_U: for every coset I_b contained in U, the polynomials
/// f_{I_b, beta^j} for j < n_b, with beta the pinned primitive element of
/// GF(p^(n_b)). Cosets come in leader order, then j ascending.
pub fn subfield_basis(u: &ExponentSet, field: &Field) -> Vec<CosetPolynomial> {
    basis_for_cosets(&exponents::contained_cosets(u, field), field)
}

/// Basis of D_U^perp: one block per coset meeting u_perp(U).
pub fn dual_subfield_basis(u: &ExponentSet, field: &Field) -> Vec<CosetPolynomial> {
    let perp = exponents::u_perp(u, field);
    basis_for_cosets(&exponents::meeting_cosets(&perp, field), field)
}

fn basis_for_cosets(cosets: &[CyclotomicCoset], field: &Field) -> Vec<CosetPolynomial> {
    let mut out = Vec::new();
    for coset in cosets {
        let m = coset.size() as u32;
        let beta = field.subfield_primitive(m).expect("coset size divides s");
        for j in 0..coset.size() {
            let b = field.pow(beta, j as u64);
            out.push(coset_poly(coset, b, field).expect("beta^j lies in GF(p^m)"));
        }
    }
    out
}

/// The subfield-subcode D_U as a GF(p)-linear code: evaluations of the basis
/// polynomials. dim D_U is the sum of the sizes of the cosets inside U.
pub fn subfield_subcode(u: &ExponentSet, field: &Field) -> Result<LinearCode> {
    let basis = subfield_basis(u, field);
    code_from_basis(&basis, u.r(), field, format!("D_U over GF({})", field.p()))
}

/// The dual code D_U^perp as the subfield-subcode of the toric code on
/// u_hat(U) (the coset closure of u_perp(U)).
pub fn dual_as_subcode(u: &ExponentSet, field: &Field) -> Result<LinearCode> {
    let hatted = exponents::u_hat(u, field);
    let basis = subfield_basis(&hatted, field);
    code_from_basis(
        &basis,
        u.r(),
        field,
        format!("D_U^perp over GF({})", field.p()),
    )
}

fn code_from_basis(
    basis: &[CosetPolynomial],
    r: usize,
    field: &Field,
    label: String,
) -> Result<LinearCode> {
    let torus = Torus::new(field, r);
    if basis.is_empty() {
        return LinearCode::new(Matrix::empty(torus.len()), field.p(), field, label);
    }
    let rows: Vec<Vec<FieldElement>> = basis
        .iter()
        .map(|cp| torus::evaluate(cp.poly(), field, r))
        .collect();
    debug_assert!(rows
        .iter()
        .flatten()
        .all(|&x| field.prime_value(x).is_some()));
    LinearCode::new(Matrix::from_rows(rows), field.p(), field, label)
}

/// Independent recomputation of D_U = C_U ∩ GF(p)^n by plain linear algebra.
///
/// Messages m in GF(q)^k are written in GF(p)-coordinates against the
/// polynomial basis {1, a, ..., a^(s-1)}; requiring every codeword entry of
/// m*G to have zero components on a, ..., a^(s-1) is a homogeneous GF(p)
/// system whose solution space maps onto D_U.
pub fn subfield_subcode_oracle(u: &ExponentSet, field: &Field) -> Result<LinearCode> {
    let r = u.r();
    let torus = Torus::new(field, r);
    let label = format!("D_U oracle over GF({})", field.p());
    if u.is_empty() {
        return LinearCode::new(Matrix::empty(torus.len()), field.p(), field, label);
    }
    let code = torus::gt_code(u, field)?;
    let g = code.generator();
    let (k, n) = (code.k(), code.n());
    let s = field.s() as usize;
    let p = field.p();

    // Unknowns x_{i,j} (message m_i = sum_j x_{i,j} a^j); equations: for each
    // coordinate t and each basis position d in 1..s, the d-component of
    // sum x_{i,j} (a^j G_{i,t}) vanishes.
    let mut eqs = Matrix::zeros(n * (s - 1).max(1), k * s);
    if s > 1 {
        for t in 0..n {
            for i in 0..k {
                for j in 0..s {
                    let prod = field.mul(field.alpha_pow(j as u32), g.get(i, t));
                    let mut packed = field.packed(prod) / p;
                    for d in 1..s {
                        let digit = packed % p;
                        packed /= p;
                        eqs.set(t * (s - 1) + (d - 1), i * s + j, field.from_prime(digit));
                    }
                }
            }
        }
    }
    let kernel = eqs.right_kernel(field);

    // Map each solution back to a codeword; the map is injective, so the
    // rows are independent over GF(p).
    let mut rows = Vec::with_capacity(kernel.rows());
    for b in 0..kernel.rows() {
        let sol = kernel.row(b);
        let message: Vec<FieldElement> = (0..k)
            .map(|i| {
                (0..s).fold(FieldElement::Zero, |acc, j| {
                    field.add(acc, field.mul(sol[i * s + j], field.alpha_pow(j as u32)))
                })
            })
            .collect();
        let word = g.encode(&message, field);
        debug_assert!(word.iter().all(|&x| field.prime_value(x).is_some()));
        rows.push(word);
    }
    if rows.is_empty() {
        return LinearCode::new(Matrix::empty(n), field.p(), field, label);
    }
    let basis = Matrix::from_rows(rows).row_basis(field);
    LinearCode::new(basis, field.p(), field, label)
}
