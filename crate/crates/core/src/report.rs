//! Check records produced by the verification and fuzz drivers.

use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        })
    }
}

/// One named comparison with both sides rendered.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
}

impl Check {
    pub fn compare<T: PartialEq + fmt::Display>(name: impl Into<String>, lhs: &T, rhs: &T) -> Check {
        Check {
            name: name.into(),
            status: if lhs == rhs { Status::Pass } else { Status::Fail },
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    pub fn pass(name: impl Into<String>, lhs: impl Into<String>, rhs: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            status: Status::Pass,
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }

    pub fn fail(name: impl Into<String>, lhs: impl Into<String>, rhs: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            status: Status::Fail,
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }

    pub fn info(name: impl Into<String>, value: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            status: Status::Info,
            lhs: value.into(),
            rhs: String::new(),
        }
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.status != Status::Fail)
}
