//! Singularity specifications and their JSON input format.
//!
//! ```json
//! {"kind": "ade", "type": "D", "n": 5}
//! {"kind": "cyclic_quotient", "n": 5, "q": 2}
//! {"kind": "brieskorn_pham", "a": 2, "b": 3, "c": 11}
//! {"kind": "plumbing", "vertices": [{"e": -3, "g": 0}, {"e": -2}], "edges": [[0, 1]]}
//! ```

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{validate_ade_rank, AdeKind, ResolutionGraph};
use crate::monodromy::MAX_MILNOR_NUMBER;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SpecDocument", into = "SpecDocument")]
pub enum SingularitySpec {
    /// Rational double point A_n, D_n or E_n.
    Ade { kind: AdeKind, n: u32 },
    /// ℂ²/(1/n)(1, q).
    CyclicQuotient { n: u64, q: u64 },
    /// x^a + y^b + z^c = 0.
    BrieskornPham { a: u64, b: u64, c: u64 },
    /// A user-supplied resolution graph.
    Plumbing { graph: ResolutionGraph },
}

impl SingularitySpec {
    pub fn ade(kind: AdeKind, n: u32) -> Result<Self> {
        SingularitySpec::Ade { kind, n }.validated()
    }

    pub fn cyclic_quotient(n: u64, q: u64) -> Result<Self> {
        SingularitySpec::CyclicQuotient { n, q }.validated()
    }

    pub fn brieskorn_pham(a: u64, b: u64, c: u64) -> Result<Self> {
        SingularitySpec::BrieskornPham { a, b, c }.validated()
    }

    pub fn plumbing(graph: ResolutionGraph) -> Result<Self> {
        SingularitySpec::Plumbing { graph }.validated()
    }

    fn validated(self) -> Result<Self> {
        match &self {
            SingularitySpec::Ade { kind, n } => validate_ade_rank(*kind, *n)?,
            &SingularitySpec::CyclicQuotient { n, q } => {
                if n < 2 {
                    return Err(Error::invalid(
                        "n",
                        format!("n must be at least 2, got {n}"),
                    ));
                }
                if q < 1 || q >= n {
                    return Err(Error::invalid(
                        "q",
                        format!("q must satisfy 1 ≤ q < {n}, got {q}"),
                    ));
                }
                if n.gcd(&q) != 1 {
                    return Err(Error::invalid("q", format!("gcd({n}, {q}) ≠ 1")));
                }
            }
            &SingularitySpec::BrieskornPham { a, b, c } => {
                for (field, x) in [("a", a), ("b", b), ("c", c)] {
                    if x < 2 {
                        return Err(Error::invalid(
                            field,
                            format!("exponent must be at least 2, got {x}"),
                        ));
                    }
                }
                let mu = (a - 1)
                    .checked_mul(b - 1)
                    .and_then(|x| x.checked_mul(c - 1));
                if mu.is_none_or(|mu| mu > MAX_MILNOR_NUMBER) {
                    return Err(Error::invalid(
                        "c",
                        format!("Milnor number (a-1)(b-1)(c-1) exceeds {MAX_MILNOR_NUMBER}"),
                    ));
                }
            }
            SingularitySpec::Plumbing { graph } => {
                if !graph.intersection_matrix().is_negative_definite()? {
                    return Err(Error::invalid(
                        "vertices",
                        "intersection matrix is not negative definite",
                    ));
                }
            }
        }
        Ok(self)
    }
}

/// Parses and validates a JSON spec document.
///
/// Malformed documents (syntax, unknown kind, missing or extra fields) give
/// [`Error::Parse`] with a position; constraint violations give
/// [`Error::Invalid`] naming the field.
pub fn parse_spec(text: &str) -> Result<SingularitySpec> {
    let doc: SpecDocument = serde_json::from_str(text).map_err(|e| locate(parse_error(e), text))?;
    SingularitySpec::try_from(doc)
}

pub(crate) fn parse_error(err: serde_json::Error) -> Error {
    let full = err.to_string();
    let message = full
        .rsplit_once(" at line ")
        .map_or(full.as_str(), |(m, _)| m)
        .to_string();
    Error::Parse {
        line: err.line(),
        column: err.column(),
        message,
    }
}

/// Tagged-enum errors come back from serde_json without a position (line 0).
/// Point at the first quoted occurrence of the name in backticks, or at the
/// end of the document for missing fields.
fn locate(err: Error, text: &str) -> Error {
    let Error::Parse {
        line: 0, message, ..
    } = err
    else {
        return err;
    };
    let named = message
        .split('`')
        .nth(1)
        .filter(|_| !message.starts_with("missing field"))
        .and_then(|name| text.find(&format!("\"{name}\"")));
    let offset = named.unwrap_or_else(|| text.trim_end().len().saturating_sub(1));
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    Error::Parse {
        line,
        column,
        message,
    }
}

impl fmt::Display for SingularitySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularitySpec::Ade { kind, n } => write!(f, "{kind}_{n}"),
            SingularitySpec::CyclicQuotient { n, q } => write!(f, "1/{n}(1,{q})"),
            SingularitySpec::BrieskornPham { a, b, c } => write!(f, "x^{a}+y^{b}+z^{c}"),
            SingularitySpec::Plumbing { graph } => write!(
                f,
                "plumbing({} curves, {} edges)",
                graph.vertices().len(),
                graph.edges().len()
            ),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum SpecDocument {
    Ade {
        #[serde(rename = "type")]
        kind: AdeKind,
        n: u32,
    },
    CyclicQuotient {
        n: u64,
        q: u64,
    },
    BrieskornPham {
        a: u64,
        b: u64,
        c: u64,
    },
    Plumbing(ResolutionGraph),
}

impl TryFrom<SpecDocument> for SingularitySpec {
    type Error = Error;

    fn try_from(doc: SpecDocument) -> Result<Self> {
        let spec = match doc {
            SpecDocument::Ade { kind, n } => SingularitySpec::Ade { kind, n },
            SpecDocument::CyclicQuotient { n, q } => SingularitySpec::CyclicQuotient { n, q },
            SpecDocument::BrieskornPham { a, b, c } => SingularitySpec::BrieskornPham { a, b, c },
            SpecDocument::Plumbing(graph) => SingularitySpec::Plumbing { graph },
        };
        spec.validated()
    }
}

impl From<SingularitySpec> for SpecDocument {
    fn from(spec: SingularitySpec) -> Self {
        match spec {
            SingularitySpec::Ade { kind, n } => SpecDocument::Ade { kind, n },
            SingularitySpec::CyclicQuotient { n, q } => SpecDocument::CyclicQuotient { n, q },
            SingularitySpec::BrieskornPham { a, b, c } => SpecDocument::BrieskornPham { a, b, c },
            SingularitySpec::Plumbing { graph } => SpecDocument::Plumbing(graph),
        }
    }
}
