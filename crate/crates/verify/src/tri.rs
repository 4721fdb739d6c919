use embedcheck_core::Result;
use serde::Serialize;

/// A boolean that may be unknown because a size cap was hit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tri {
    True,
    False,
    Indeterminate,
}

impl Tri {
    pub fn known(self) -> Option<bool> {
        match self {
            Tri::True => Some(true),
            Tri::False => Some(false),
            Tri::Indeterminate => None,
        }
    }

    pub fn is_true(self) -> bool {
        self == Tri::True
    }

    pub fn label(self) -> &'static str {
        match self {
            Tri::True => "true",
            Tri::False => "false",
            Tri::Indeterminate => "indeterminate",
        }
    }
}

impl From<bool> for Tri {
    fn from(b: bool) -> Tri {
        if b {
            Tri::True
        } else {
            Tri::False
        }
    }
}

impl From<&Result<bool>> for Tri {
    fn from(r: &Result<bool>) -> Tri {
        match r {
            Ok(b) => Tri::from(*b),
            Err(_) => Tri::Indeterminate,
        }
    }
}

impl From<Result<bool>> for Tri {
    fn from(r: Result<bool>) -> Tri {
        Tri::from(&r)
    }
}
