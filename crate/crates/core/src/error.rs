use crate::ComplexValue;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ZetaError {
    #[error("{function}: pole at s = {}{:+}i", at.re, at.im)]
    Pole {
        function: &'static str,
        at: ComplexValue,
    },
    #[error("{function}: outside domain ({reason})")]
    Domain {
        function: &'static str,
        reason: String,
    },
    #[error("{function}: overflow ({reason})")]
    Overflow {
        function: &'static str,
        reason: String,
    },
    #[error("{function}: quadrature failed ({reason})")]
    Quadrature {
        function: &'static str,
        reason: String,
    },
}

impl ZetaError {
    pub(crate) fn pole(function: &'static str, at: ComplexValue) -> Self {
        ZetaError::Pole { function, at }
    }

    pub(crate) fn domain(function: &'static str, reason: impl Into<String>) -> Self {
        ZetaError::Domain {
            function,
            reason: reason.into(),
        }
    }

    pub(crate) fn overflow(function: &'static str, reason: impl Into<String>) -> Self {
        ZetaError::Overflow {
            function,
            reason: reason.into(),
        }
    }

    pub(crate) fn quadrature(function: &'static str, reason: impl Into<String>) -> Self {
        ZetaError::Quadrature {
            function,
            reason: reason.into(),
        }
    }

    pub fn is_pole(&self) -> bool {
        matches!(self, ZetaError::Pole { .. })
    }
}

pub type Result<T> = std::result::Result<T, ZetaError>;
