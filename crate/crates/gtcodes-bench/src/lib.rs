//! Shared fixtures for the enumeration benchmarks: two mid-size codes from
//! the reference catalogue.

use gtcodes::exponents::ExponentSet;
use gtcodes::galois::Field;
use gtcodes::subfield::subfield_subcode;
use gtcodes::torus::LinearCode;

/// The dim-21 binary subfield-subcode of length 49 (2^21 codewords).
pub fn gf8_dim21_code() -> (Field, LinearCode) {
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
            vec![2, 1],
            vec![4, 2],
            vec![1, 4],
            vec![3, 1],
            vec![6, 2],
            vec![5, 4],
            vec![4, 1],
            vec![1, 2],
            vec![2, 4],
            vec![1, 3],
            vec![2, 6],
            vec![4, 5],
        ],
        &f,
    )
    .unwrap();
    let code = subfield_subcode(&u, &f).unwrap();
    assert_eq!(code.k(), 21);
    (f, code)
}

/// The dim-12 ternary subfield-subcode of length 64 (3^12 codewords).
pub fn gf9_dim12_code() -> (Field, LinearCode) {
    let f = Field::new(3, 2).unwrap();
    let u = ExponentSet::from_coords(
        2,
        &[
            vec![7, 1],
            vec![5, 3],
            vec![5, 0],
            vec![7, 0],
            vec![0, 1],
            vec![0, 3],
            vec![1, 5],
            vec![3, 7],
            vec![2, 1],
            vec![6, 3],
            vec![6, 2],
            vec![2, 6],
        ],
        &f,
    )
    .unwrap();
    let code = subfield_subcode(&u, &f).unwrap();
    assert_eq!(code.k(), 12);
    (f, code)
}
