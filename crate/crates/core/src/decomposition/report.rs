use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// The checker could not certify the condition either way.
    NotVerified,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::NotVerified => "not verified",
        })
    }
}

/// One named condition with the offending elements, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub details: Vec<String>,
}

impl Check {
    pub(crate) fn from_details(name: &str, details: Vec<String>) -> Self {
        let status = if details.is_empty() { Status::Pass } else { Status::Fail };
        Check { name: name.to_string(), status, details }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

pub(crate) fn find<'a>(checks: &'a [Check], name: &str) -> &'a Check {
    checks.iter().find(|c| c.name == name).unwrap_or_else(|| panic!("no check named {name}"))
}
