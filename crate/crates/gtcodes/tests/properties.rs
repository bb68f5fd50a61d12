//! Property tests for the ring/trace machinery and the subcode bounds.

use proptest::collection::vec;
use proptest::prelude::*;

use gtcodes::exponents::{coset_of, ExponentSet, ExponentVector};
use gtcodes::galois::{Field, FieldElement};
use gtcodes::matrix::Matrix;
use gtcodes::subfield::{
    coset_poly, dual_subfield_basis, subfield_basis, subfield_subcode, trace_poly,
};
use gtcodes::torus::{dual_gt_code, evaluate, frobenius_poly, gt_code, theta_power, SparsePoly};
use gtcodes::weights::{min_distance, Distance, DEFAULT_BUDGET};

fn fields() -> Vec<Field> {
    vec![
        Field::new(2, 2).unwrap(),
        Field::new(2, 3).unwrap(),
        Field::new(3, 2).unwrap(),
    ]
}

/// Strategy: a sparse polynomial on `r` variables over a field of group
/// order q1, as raw (coords, log-coefficient) pairs.
fn poly_terms(q1: u32, r: usize) -> impl Strategy<Value = Vec<(Vec<u32>, u32)>> {
    vec((vec(0..q1, r), 0..q1), 0..6)
}

fn build_poly(terms: &[(Vec<u32>, u32)], f: &Field) -> SparsePoly {
    SparsePoly::from_terms(terms.iter().map(|(coords, c)| {
        (
            ExponentVector::new(coords.clone(), f).unwrap(),
            f.alpha_pow(*c),
        )
    }))
}

proptest! {
    /// Applying the Frobenius s times is the identity on R.
    #[test]
    fn frobenius_s_fold_identity(
        fi in 0usize..3,
        terms in poly_terms(8, 2),
    ) {
        let f = &fields()[fi];
        let q1 = f.group_order();
        let terms: Vec<(Vec<u32>, u32)> = terms
            .into_iter()
            .map(|(c, l)| (c.into_iter().map(|x| x % q1).collect(), l % q1))
            .collect();
        let poly = build_poly(&terms, f);
        let mut iter = poly.clone();
        for _ in 0..f.s() {
            iter = frobenius_poly(&iter, f);
        }
        prop_assert_eq!(iter, poly);
    }

    /// Evaluation is a ring homomorphism: ev(g*h) = ev(g) . ev(h).
    #[test]
    fn evaluation_multiplicative(
        fi in 0usize..3,
        gt in poly_terms(8, 1),
        ht in poly_terms(8, 1),
    ) {
        let f = &fields()[fi];
        let q1 = f.group_order();
        let fix = |t: Vec<(Vec<u32>, u32)>| -> Vec<(Vec<u32>, u32)> {
            t.into_iter()
                .map(|(c, l)| (c.into_iter().map(|x| x % q1).collect(), l % q1))
                .collect()
        };
        let g = build_poly(&fix(gt), f);
        let h = build_poly(&fix(ht), f);
        let ev_g = evaluate(&g, f, 1);
        let ev_h = evaluate(&h, f, 1);
        let ev_gh = evaluate(&g.mul(&h, f), f, 1);
        for j in 0..ev_g.len() {
            prop_assert_eq!(ev_gh[j], f.mul(ev_g[j], ev_h[j]));
        }
    }

    /// The trace image always evaluates into GF(p), and matches the
    /// componentwise field trace of the original evaluation.
    #[test]
    fn trace_image_lands_in_prime_field(
        fi in 0usize..3,
        terms in poly_terms(8, 2),
    ) {
        let f = &fields()[fi];
        let q1 = f.group_order();
        let terms: Vec<(Vec<u32>, u32)> = terms
            .into_iter()
            .map(|(c, l)| (c.into_iter().map(|x| x % q1).collect(), l % q1))
            .collect();
        let g = build_poly(&terms, f);
        let t = trace_poly(&g, f);
        prop_assert_eq!(frobenius_poly(&t, f), t.clone());
        let traced = evaluate(&t, f, 2);
        prop_assert!(traced.iter().all(|&x| f.prime_value(x).is_some()));
        let direct: Vec<FieldElement> = evaluate(&g, f, 2)
            .into_iter()
            .map(|x| f.trace_to_prime(x))
            .collect();
        prop_assert_eq!(traced, direct);
    }

    /// theta_i on a polynomial that evaluates into GF(p) keeps it there.
    #[test]
    fn theta_power_preserves_prime_evaluations(
        fi in 0usize..3,
        b in vec(0u32..8, 2),
        jpow in 0u64..4,
        i0 in 1u64..64,
    ) {
        let f = &fields()[fi];
        let q1 = u64::from(f.group_order());
        prop_assume!(gcd(i0 % q1, q1) == 1 && i0 % q1 != 0);
        let coords: Vec<u32> = b.iter().map(|&x| x % f.group_order()).collect();
        let coset = coset_of(&ExponentVector::new(coords, f).unwrap(), f);
        let beta = f.subfield_primitive(coset.size() as u32).unwrap();
        let poly = coset_poly(&coset, f.pow(beta, jpow % coset.size() as u64), f)
            .unwrap()
            .poly()
            .clone();
        let img = theta_power(&poly, i0, f).unwrap();
        let word = evaluate(&img, f, 2);
        prop_assert!(word.iter().all(|&x| f.prime_value(x).is_some()));
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Any Frobenius-fixed polynomial supported on a single coset is spanned by
/// the pinned basis block of that coset.
#[test]
fn coset_block_spans_all_fixed_polynomials() {
    for f in fields() {
        for r in 1..=2usize {
            for b in ExponentSet::full(r, &f).iter() {
                let coset = coset_of(b, &f);
                let m = coset.size() as u32;
                let block: Vec<Vec<FieldElement>> = {
                    let beta = f.subfield_primitive(m).unwrap();
                    (0..coset.size() as u64)
                        .map(|j| {
                            let cp = coset_poly(&coset, f.pow(beta, j), &f).unwrap();
                            evaluate(cp.poly(), &f, r)
                        })
                        .collect()
                };
                let block = Matrix::from_rows(block);
                assert_eq!(block.rank(&f), coset.size(), "block must be independent");
                // Every gamma in GF(p^m)* generates a fixed polynomial on
                // this coset; its evaluation must lie in the block's span.
                for gamma in f
                    .elements()
                    .filter(|g| !g.is_zero() && f.in_subfield(*g, m))
                {
                    let cp = coset_poly(&coset, gamma, &f).unwrap();
                    let row = Matrix::from_rows(vec![evaluate(cp.poly(), &f, r)]);
                    assert!(row.row_space_eq(&row, &f)); // sanity
                    let mut stacked = block.clone();
                    let stacked_rank = {
                        let mut rows: Vec<Vec<FieldElement>> = Vec::new();
                        for i in 0..stacked.rows() {
                            rows.push(stacked.row(i).to_vec());
                        }
                        rows.push(row.row(0).to_vec());
                        stacked = Matrix::from_rows(rows);
                        stacked.rank(&f)
                    };
                    assert_eq!(stacked_rank, coset.size(), "gamma outside span");
                }
            }
        }
    }
}

/// Every basis polynomial is the trace of a monomial: a preimage gamma with
/// relative trace beta always exists and T(gamma y^b) reproduces the block.
#[test]
fn basis_polynomials_are_traces_of_monomials() {
    for f in fields() {
        let u = ExponentSet::full(2, &f);
        for cp in subfield_basis(&u, &f) {
            let m = cp.coset().size() as u32;
            let gamma = f
                .elements()
                .find(|&g| f.relative_trace(g, m).unwrap() == cp.beta())
                .expect("relative trace is surjective");
            let mono = SparsePoly::monomial(cp.coset().leader().clone(), gamma);
            assert_eq!(trace_poly(&mono, &f), *cp.poly());
        }
    }
}

/// Delsarte: the dual of the subfield-subcode is the trace of the dual code.
/// The span of all componentwise traces of scaled dual-code rows equals the
/// span of the dual basis evaluations.
#[test]
fn dual_subcode_is_trace_of_dual_code() {
    let mut rng_state = 0x9e37_79b9u64;
    let mut next = move |n: usize| {
        rng_state = rng_state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (rng_state >> 33) as usize % n
    };
    for f in fields() {
        for r in 1..=2usize {
            let h: Vec<ExponentVector> = ExponentSet::full(r, &f).iter().cloned().collect();
            for _ in 0..5 {
                let take = 1 + next(h.len());
                let mut elems = Vec::new();
                for _ in 0..take {
                    elems.push(h[next(h.len())].clone());
                }
                let u = ExponentSet::new(r, elems, &f).unwrap();
                let cdual = dual_gt_code(&u, &f).unwrap();

                let mut trace_rows: Vec<Vec<FieldElement>> = Vec::new();
                for i in 0..cdual.k() {
                    for scale in f.elements().filter(|x| !x.is_zero()) {
                        trace_rows.push(
                            cdual
                                .generator()
                                .row(i)
                                .iter()
                                .map(|&x| f.trace_to_prime(f.mul(scale, x)))
                                .collect(),
                        );
                    }
                }
                let traced = if trace_rows.is_empty() {
                    Matrix::empty(cdual.n())
                } else {
                    Matrix::from_rows(trace_rows)
                };

                let basis = dual_subfield_basis(&u, &f);
                let span = if basis.is_empty() {
                    Matrix::empty(cdual.n())
                } else {
                    Matrix::from_rows(basis.iter().map(|cp| evaluate(cp.poly(), &f, r)).collect())
                };
                assert!(
                    traced.row_space_eq(&span, &f),
                    "GF({}) r={r}: trace of dual != dual basis span",
                    f.order()
                );
            }
        }
    }
}

/// Subcode bound: d(D_U) >= d(C_U) whenever both enumerations fit.
#[test]
fn subcode_distance_bound() {
    let budget: u128 = 1 << 20;
    for f in fields() {
        for r in 1..=2usize {
            let h: Vec<ExponentVector> = ExponentSet::full(r, &f).iter().cloned().collect();
            // Prefixes give a spread of dimensions with q^k under budget.
            for take in 1..=h.len().min(6) {
                let u = ExponentSet::new(r, h[..take].to_vec(), &f).unwrap();
                let c = gt_code(&u, &f).unwrap();
                let Ok(Distance::Exact { d: dc, .. }) = min_distance(&c, None, &f, budget) else {
                    continue;
                };
                let d = subfield_subcode(&u, &f).unwrap();
                if d.k() == 0 {
                    continue;
                }
                let Distance::Exact { d: dd, .. } =
                    min_distance(&d, None, &f, DEFAULT_BUDGET).unwrap()
                else {
                    continue;
                };
                assert!(
                    dd >= dc,
                    "GF({}) r={r} |U|={take}: d(D)={dd} < d(C)={dc}",
                    f.order()
                );
            }
        }
    }
}
