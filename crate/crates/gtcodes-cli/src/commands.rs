//! Subcommand implementations.

use gtcodes::exponents::{all_cosets, CyclotomicCoset, ExponentSet};
use gtcodes::galois::Field;
use gtcodes::subfield::{dual_as_subcode, dual_subfield_basis, subfield_basis, subfield_subcode};
use gtcodes::torus::{gt_code, LinearCode};
use gtcodes::weights::min_distance_with_distribution;

use crate::error::CliError;
use crate::job::{JobSpec, Task};
use crate::output::{
    distribution_strings, matrix_text, CodeParams, CodeReport, DistanceJson, FieldInfo,
    MatricesJson, MatrixJson, PolyJson, Report,
};

/// `cosets`: list every cyclotomic coset of {0..q-2}^r.
pub fn cmd_cosets(p: u32, s: u32, r: usize) -> Result<String, CliError> {
    let field = Field::new(p, s)?;
    let points = (u128::from(field.group_order())).pow(r as u32);
    if points > crate::job::MAX_TORUS_POINTS {
        return Err(CliError::new(
            "torus-too-large",
            format!(
                "(q-1)^r = {points} exceeds the cap of {}",
                crate::job::MAX_TORUS_POINTS
            ),
        ));
    }
    let cosets = all_cosets(&field, r);
    let mut out = String::new();
    out.push_str(&format!(
        "cyclotomic cosets of {{0..{}}}^{} under multiplication by {}\n",
        field.group_order() - 1,
        r,
        p
    ));
    for c in &cosets {
        let members: Vec<String> = c
            .members()
            .iter()
            .map(|m| format!("{:?}", m.coords()))
            .collect();
        out.push_str(&format!(
            "I_{:?}: size {}, members {}\n",
            c.leader().coords(),
            c.size(),
            members.join(" ")
        ));
    }
    let total: usize = cosets.iter().map(CyclotomicCoset::size).sum();
    let expect = (field.group_order() as usize).pow(r as u32);
    out.push_str(&format!(
        "{} cosets, total size {} = (q-1)^r = {} : {}\n",
        cosets.len(),
        total,
        expect,
        if total == expect { "ok" } else { "MISMATCH" }
    ));
    if total != expect {
        return Err(CliError::new(
            "internal",
            "coset sizes do not partition the lattice",
        ));
    }
    Ok(out)
}

pub struct JobCodes {
    pub field: Field,
    pub u: ExponentSet,
    pub code: LinearCode,
    pub subcode: LinearCode,
    pub dual: LinearCode,
}

pub fn build_codes(job: &JobSpec) -> Result<JobCodes, CliError> {
    let (field, u) = job.prepare()?;
    let code = gt_code(&u, &field)?;
    let subcode = subfield_subcode(&u, &field)?;
    let dual = dual_as_subcode(&u, &field)?;
    Ok(JobCodes {
        field,
        u,
        code,
        subcode,
        dual,
    })
}

/// `run`: execute the tasks of a job file and assemble the report.
pub fn cmd_run(job: &JobSpec, budget_override: Option<u128>) -> Result<Report, CliError> {
    let budget = job.budget(budget_override);
    let codes = build_codes(job)?;
    let JobCodes {
        field,
        u,
        code,
        subcode,
        dual,
    } = &codes;

    let wants = |t: Task| job.tasks.contains(&t);
    let distances = wants(Task::Distance);

    let (sub_distance, sub_dist_counts) = if distances {
        let (d, dist) = min_distance_with_distribution(subcode, Some(dual), field, budget)?;
        (
            Some(DistanceJson::from_distance(&d)),
            distribution_strings(dist.as_ref()),
        )
    } else {
        (None, None)
    };
    let (dual_distance, dual_dist_counts) = if distances {
        let (d, dist) = min_distance_with_distribution(dual, Some(subcode), field, budget)?;
        (
            Some(DistanceJson::from_distance(&d)),
            distribution_strings(dist.as_ref()),
        )
    } else {
        (None, None)
    };

    let report = Report {
        field: FieldInfo::from_field(field),
        r: u.r(),
        n: code.n(),
        u_size: u.len(),
        u_coset_closed: u.is_coset_closed(),
        code: (wants(Task::Params)).then(|| CodeParams {
            n: code.n(),
            k: code.k(),
        }),
        subfield_subcode: (wants(Task::Params) || distances).then(|| CodeReport {
            n: subcode.n(),
            k: subcode.k(),
            distance: sub_distance.clone(),
            weight_distribution: sub_dist_counts.clone(),
        }),
        dual: (wants(Task::Dual) || distances).then(|| CodeReport {
            n: dual.n(),
            k: dual.k(),
            distance: dual_distance.clone(),
            weight_distribution: dual_dist_counts.clone(),
        }),
        basis: wants(Task::Basis).then(|| {
            subfield_basis(u, field)
                .iter()
                .map(|cp| PolyJson::from_poly(cp.poly(), field))
                .collect()
        }),
        dual_basis: wants(Task::Dual).then(|| {
            dual_subfield_basis(u, field)
                .iter()
                .map(|cp| PolyJson::from_poly(cp.poly(), field))
                .collect()
        }),
        matrices: wants(Task::Genmat).then(|| MatricesJson {
            code: MatrixJson::from_code(code),
            subfield: MatrixJson::from_code(subcode),
            dual: MatrixJson::from_code(dual),
        }),
    };
    Ok(report)
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum WhichMatrix {
    Code,
    Subfield,
    Dual,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum MatrixFormat {
    Json,
    Text,
}

/// `genmat`: export one generator matrix from a job.
pub fn cmd_genmat(
    job: &JobSpec,
    which: WhichMatrix,
    format: MatrixFormat,
) -> Result<String, CliError> {
    let codes = build_codes(job)?;
    let code = match which {
        WhichMatrix::Code => &codes.code,
        WhichMatrix::Subfield => &codes.subcode,
        WhichMatrix::Dual => &codes.dual,
    };
    Ok(match format {
        MatrixFormat::Json => {
            let mut text = serde_json::to_string_pretty(&MatrixJson::from_code(code))
                .expect("matrix serializes");
            text.push('\n');
            text
        }
        MatrixFormat::Text => matrix_text(code.generator(), code.alphabet(), &codes.field),
    })
}
