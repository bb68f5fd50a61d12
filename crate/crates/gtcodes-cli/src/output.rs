//! Report structures and their JSON / plain-text renderings.
//!
//! The JSON schema is stable and fully deterministic: rerunning a job yields
//! byte-identical output.

use serde::Serialize;

use gtcodes::galois::Field;
use gtcodes::matrix::Matrix;
use gtcodes::torus::{LinearCode, SparsePoly};
use gtcodes::weights::{Distance, DistanceMethod, WeightDistribution};

#[derive(Serialize)]
pub struct FieldInfo {
    pub p: u32,
    pub s: u32,
    pub q: u32,
    /// Modulus in use, lowest degree first (reported even when defaulted).
    pub modulus: Vec<u32>,
}

impl FieldInfo {
    pub fn from_field(f: &Field) -> FieldInfo {
        FieldInfo {
            p: f.p(),
            s: f.s(),
            q: f.order(),
            modulus: f.modulus().to_vec(),
        }
    }
}

/// Render a modulus like "x^3 + x + 1".
pub fn modulus_text(coeffs: &[u32]) -> String {
    let mut parts = Vec::new();
    for (deg, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let var = match deg {
            0 => String::new(),
            1 => "x".into(),
            d => format!("x^{d}"),
        };
        let part = match (c, deg) {
            (c, 0) => format!("{c}"),
            (1, _) => var,
            (c, _) => format!("{c}{var}"),
        };
        parts.push(part);
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

#[derive(Serialize, Clone, Copy)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
}

#[derive(Serialize, Clone)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum DistanceJson {
    Exact {
        d: usize,
        method: &'static str,
        /// Codewords enumerated, as a decimal string (may exceed 2^53).
        enumerated: String,
    },
    ZeroCode,
    NotVerified {
        #[serde(skip_serializing_if = "Option::is_none")]
        required: Option<String>,
    },
}

impl DistanceJson {
    pub fn from_distance(d: &Distance) -> DistanceJson {
        match d {
            Distance::Exact {
                d,
                method,
                enumerated,
            } => DistanceJson::Exact {
                d: *d,
                method: match method {
                    DistanceMethod::Direct => "direct",
                    DistanceMethod::ViaDual => "via_dual",
                },
                enumerated: enumerated.to_string(),
            },
            Distance::ZeroCode => DistanceJson::ZeroCode,
            Distance::NotVerified { required } => DistanceJson::NotVerified {
                required: required.map(|r| r.to_string()),
            },
        }
    }

    pub fn text(&self) -> String {
        match self {
            DistanceJson::Exact { d, method, .. } => format!("d = {d} ({method})"),
            DistanceJson::ZeroCode => "no nonzero codeword".into(),
            DistanceJson::NotVerified { required } => match required {
                Some(r) => format!("not verified at desk scale ({r} codewords needed)"),
                None => "not verified at desk scale".into(),
            },
        }
    }
}

#[derive(Serialize, Clone)]
pub struct CodeReport {
    pub n: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance: Option<DistanceJson>,
    /// Exact counts A_0..A_n as decimal strings (they can exceed 2^53).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight_distribution: Option<Vec<String>>,
}

pub fn distribution_strings(dist: Option<&WeightDistribution>) -> Option<Vec<String>> {
    dist.map(|d| d.counts().iter().map(u128::to_string).collect())
}

/// One term of a sparse polynomial: the exponent vector and the discrete log
/// of its coefficient.
#[derive(Serialize, Clone)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coeff_log: u32,
}

/// Machine form of a basis polynomial alongside its rendered text.
#[derive(Serialize, Clone)]
pub struct PolyJson {
    pub text: String,
    pub terms: Vec<TermJson>,
}

impl PolyJson {
    pub fn from_poly(poly: &SparsePoly, field: &Field) -> PolyJson {
        PolyJson {
            text: poly.render(field),
            terms: poly
                .terms()
                .map(|(u, c)| TermJson {
                    exp: u.coords().to_vec(),
                    coeff_log: c.log().expect("no zero coefficients stored"),
                })
                .collect(),
        }
    }
}

/// Generator matrix export: rows of discrete-log indices, -1 for zero.
#[derive(Serialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    /// Order of the subfield the code is linear over.
    pub alphabet: u32,
    pub entries: Vec<Vec<i64>>,
}

impl MatrixJson {
    pub fn from_code(code: &LinearCode) -> MatrixJson {
        let g = code.generator();
        let entries = (0..g.rows())
            .map(|i| {
                g.row(i)
                    .iter()
                    .map(|x| x.log().map_or(-1i64, i64::from))
                    .collect()
            })
            .collect();
        MatrixJson {
            rows: g.rows(),
            cols: g.cols(),
            alphabet: code.alphabet(),
            entries,
        }
    }
}

/// Plain-text matrix table. Prime-field entries print as integers; extension
/// field entries as powers of a.
pub fn matrix_text(gen: &Matrix, alphabet: u32, field: &Field) -> String {
    let mut out = String::new();
    for i in 0..gen.rows() {
        let row: Vec<String> = gen
            .row(i)
            .iter()
            .map(|&x| {
                if alphabet == field.p() {
                    field.prime_value(x).expect("prime entry").to_string()
                } else {
                    field.format_element(x)
                }
            })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    if gen.rows() == 0 {
        out.push_str("(zero code: empty generator matrix)\n");
    }
    out
}

#[derive(Serialize)]
pub struct MatricesJson {
    pub code: MatrixJson,
    pub subfield: MatrixJson,
    pub dual: MatrixJson,
}

#[derive(Serialize)]
pub struct Report {
    pub field: FieldInfo,
    pub r: usize,
    pub n: usize,
    pub u_size: usize,
    pub u_coset_closed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub code: Option<CodeParams>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subfield_subcode: Option<CodeReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual: Option<CodeReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<PolyJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual_basis: Option<Vec<PolyJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrices: Option<MatricesJson>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "field GF({}) = GF({}^{}), modulus {}\n",
            self.field.q,
            self.field.p,
            self.field.s,
            modulus_text(&self.field.modulus)
        ));
        out.push_str(&format!(
            "torus dimension r = {}, length n = {}, |U| = {} ({}coset-closed)\n",
            self.r,
            self.n,
            self.u_size,
            if self.u_coset_closed { "" } else { "not " }
        ));
        if let Some(c) = &self.code {
            out.push_str(&format!(
                "toric code C_U: [{}, {}] over GF({})\n",
                c.n, c.k, self.field.q
            ));
        }
        if let Some(d) = &self.subfield_subcode {
            out.push_str(&format!(
                "subfield-subcode D_U: [{}, {}] over GF({})",
                d.n, d.k, self.field.p
            ));
            if let Some(dist) = &d.distance {
                out.push_str(&format!(", {}", dist.text()));
            }
            out.push('\n');
        }
        if let Some(d) = &self.dual {
            out.push_str(&format!(
                "dual D_U^perp: [{}, {}] over GF({})",
                d.n, d.k, self.field.p
            ));
            if let Some(dist) = &d.distance {
                out.push_str(&format!(", {}", dist.text()));
            }
            out.push('\n');
        }
        if let Some(basis) = &self.basis {
            out.push_str("basis of D_U:\n");
            for b in basis {
                out.push_str(&format!("  {}\n", b.text));
            }
        }
        if let Some(basis) = &self.dual_basis {
            out.push_str("basis of D_U^perp:\n");
            for b in basis {
                out.push_str(&format!("  {}\n", b.text));
            }
        }
        if self.matrices.is_some() {
            out.push_str("generator matrices included in the JSON report\n");
        }
        out
    }
}
