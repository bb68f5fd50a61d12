//! JSON job files: a field, a torus dimension, an exponent set, and the
//! tasks to run on them.

use serde::Deserialize;

use gtcodes::exponents::ExponentSet;
use gtcodes::galois::Field;
use gtcodes::weights::DEFAULT_BUDGET;

use crate::error::CliError;

/// Refuse tori beyond this many points.
pub const MAX_TORUS_POINTS: u128 = 1 << 24;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub p: u32,
    pub s: u32,
    #[serde(default)]
    pub modulus: Option<Vec<u32>>,
}

impl FieldSpec {
    pub fn build(&self) -> Result<Field, CliError> {
        let field = match &self.modulus {
            Some(m) => Field::with_modulus(self.p, self.s, m)?,
            None => Field::new(self.p, self.s)?,
        };
        Ok(field)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Task {
    Params,
    Basis,
    Dual,
    Genmat,
    Distance,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub field: FieldSpec,
    pub r: usize,
    #[serde(rename = "U")]
    pub u: Vec<Vec<u32>>,
    pub tasks: Vec<Task>,
    #[serde(default)]
    pub budget: Option<u128>,
}

impl JobSpec {
    pub fn from_path(path: &std::path::Path) -> Result<JobSpec, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::new("io", format!("cannot read {}: {e}", path.display())))?;
        let job: JobSpec = serde_json::from_str(&text)
            .map_err(|e| CliError::new("bad-job", format!("invalid job file: {e}")))?;
        job.validate()?;
        Ok(job)
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.tasks.is_empty() {
            return Err(CliError::new("bad-job", "tasks must be nonempty"));
        }
        if self.r == 0 {
            return Err(CliError::new("bad-job", "r must be at least 1"));
        }
        if self.u.is_empty() {
            return Err(CliError::new(
                "bad-job",
                "U must contain at least one exponent vector",
            ));
        }
        Ok(())
    }

    /// Build the field and exponent set, enforcing the torus size cap.
    pub fn prepare(&self) -> Result<(Field, ExponentSet), CliError> {
        let field = self.field.build()?;
        let points = (u128::from(field.group_order())).pow(self.r as u32);
        if points > MAX_TORUS_POINTS {
            return Err(CliError::new(
                "torus-too-large",
                format!("(q-1)^r = {points} torus points exceeds the cap of {MAX_TORUS_POINTS}"),
            ));
        }
        let u = ExponentSet::from_coords(self.r, &self.u, &field)?;
        Ok((field, u))
    }

    pub fn budget(&self, override_budget: Option<u128>) -> u128 {
        override_budget.or(self.budget).unwrap_or(DEFAULT_BUDGET)
    }
}
