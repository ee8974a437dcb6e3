//! Report data model: a schema-versioned JSON document with a job
//! echo, per-operation results and a list of named checks.  Failing
//! checks always carry a machine readable witness.  Serialization is
//! canonical, so equal reports are byte identical.

use serde::Serialize;
use serde_json::{json, Value};

use crate::fingrp::Subgroup;
use crate::io::{self, IoError};
use crate::linalg::Subspace;
use crate::xmod::PxSub;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Pass, witness: None }
    }

    /// A failing check must say why; the witness is not optional.
    pub fn fail(name: impl Into<String>, witness: Value) -> Self {
        Check { name: name.into(), status: Status::Fail, witness: Some(witness) }
    }

    pub fn skip(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Skip,
            witness: Some(json!({ "reason": reason.into() })),
        }
    }

    pub fn from_bool(
        name: impl Into<String>,
        ok: bool,
        witness: impl FnOnce() -> Value,
    ) -> Self {
        if ok {
            Check::pass(name)
        } else {
            Check::fail(name, witness())
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub job: Value,
    pub results: Value,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(job: Value) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            job,
            results: Value::Object(Default::default()),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn set_result(&mut self, key: &str, value: Value) {
        if let Value::Object(map) = &mut self.results {
            map.insert(key.to_owned(), value);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    /// Process exit code convention: 0 all pass, 1 some check failed.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> Result<String, IoError> {
        io::to_canonical_json(self)
    }

    pub fn to_pretty(&self) -> Result<String, IoError> {
        io::to_pretty_json(self)
    }
}

pub fn subgroup_value(s: &Subgroup) -> Value {
    json!({ "order": s.order(), "elements": s.elements() })
}

pub fn subspace_value(s: &Subspace) -> Value {
    let rows = s.basis_rows();
    json!({ "dim": s.dim(), "basis": serde_json::to_value(rows).expect("rationals serialize") })
}

pub fn pxsub_value(s: &PxSub) -> Value {
    json!({ "t_part": subgroup_value(&s.t_part), "g_part": subgroup_value(&s.g_part) })
}
