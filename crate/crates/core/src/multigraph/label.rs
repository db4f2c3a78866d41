use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Name of one of the three hub vertices used by the triangle families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Hub {
    X,
    Y,
    Z,
}

impl Hub {
    pub const ALL: [Hub; 3] = [Hub::X, Hub::Y, Hub::Z];

    pub fn as_str(self) -> &'static str {
        match self {
            Hub::X => "x",
            Hub::Y => "y",
            Hub::Z => "z",
        }
    }
}

/// Semantic identity of a vertex.
///
/// `Pair { i, j }` is the vertex `u(i,j)` of the bipartite family and
/// `Copy { k, i }` is `v_k^(i)`: the `k`-th copy inside block `i`.
/// Unlabeled vertices report `Plain(id)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexLabel {
    Hub(Hub),
    Pair { i: u32, j: u32 },
    Copy { k: u32, i: u32 },
    Plain(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error("pair label needs 1 <= i < j, got ({i},{j})")]
    BadPair { i: u32, j: u32 },
    #[error("copy label needs k >= 1 and i >= 1, got ({k},{i})")]
    BadCopy { k: u32, i: u32 },
    #[error("unknown hub name `{0}`")]
    BadHub(String),
    #[error("malformed label `{0}`")]
    Malformed(String),
}

impl VertexLabel {
    pub fn pair(i: u32, j: u32) -> Result<Self, LabelError> {
        if i >= 1 && i < j {
            Ok(VertexLabel::Pair { i, j })
        } else {
            Err(LabelError::BadPair { i, j })
        }
    }

    pub fn copy(k: u32, i: u32) -> Result<Self, LabelError> {
        if k >= 1 && i >= 1 {
            Ok(VertexLabel::Copy { k, i })
        } else {
            Err(LabelError::BadCopy { k, i })
        }
    }

    pub fn validate(&self) -> Result<(), LabelError> {
        match *self {
            VertexLabel::Pair { i, j } => Self::pair(i, j).map(|_| ()),
            VertexLabel::Copy { k, i } => Self::copy(k, i).map(|_| ()),
            _ => Ok(()),
        }
    }

    pub fn is_plain(&self) -> bool {
        matches!(self, VertexLabel::Plain(_))
    }

    /// The body of an MGF `# label <id> ...` line, or `None` for plain labels.
    pub fn to_mgf(&self) -> Option<String> {
        match *self {
            VertexLabel::Hub(h) => Some(format!("hub {}", h.as_str())),
            VertexLabel::Pair { i, j } => Some(format!("pair {i} {j}")),
            VertexLabel::Copy { k, i } => Some(format!("copy {k} {i}")),
            VertexLabel::Plain(_) => None,
        }
    }
}

/// Short human-readable names: `x`, `u(1,2)`, `v1^(3)`, `7`.
impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            VertexLabel::Hub(h) => f.write_str(h.as_str()),
            VertexLabel::Pair { i, j } => write!(f, "u({i},{j})"),
            VertexLabel::Copy { k, i } => write!(f, "v{k}^({i})"),
            VertexLabel::Plain(id) => write!(f, "{id}"),
        }
    }
}

/// Parses the MGF label body: `hub x`, `pair 1 2` or `copy 3 1`.
impl FromStr for VertexLabel {
    type Err = LabelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        let num = |t: &str| -> Result<u32, LabelError> {
            t.parse::<u32>()
                .map_err(|_| LabelError::Malformed(s.to_string()))
        };
        match tokens.as_slice() {
            ["hub", name] => match *name {
                "x" => Ok(VertexLabel::Hub(Hub::X)),
                "y" => Ok(VertexLabel::Hub(Hub::Y)),
                "z" => Ok(VertexLabel::Hub(Hub::Z)),
                other => Err(LabelError::BadHub(other.to_string())),
            },
            ["pair", i, j] => VertexLabel::pair(num(i)?, num(j)?),
            ["copy", k, i] => VertexLabel::copy(num(k)?, num(i)?),
            _ => Err(LabelError::Malformed(s.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!("hub y".parse::<VertexLabel>(), Ok(VertexLabel::Hub(Hub::Y)));
        assert_eq!(
            "pair 1 4".parse::<VertexLabel>(),
            Ok(VertexLabel::Pair { i: 1, j: 4 })
        );
        assert_eq!(
            "copy 2 5".parse::<VertexLabel>().unwrap().to_string(),
            "v2^(5)"
        );
        assert_eq!(VertexLabel::Pair { i: 1, j: 2 }.to_string(), "u(1,2)");
    }

    #[test]
    fn rejects_bad_labels() {
        assert_eq!(
            "pair 2 2".parse::<VertexLabel>(),
            Err(LabelError::BadPair { i: 2, j: 2 })
        );
        assert_eq!(
            "copy 0 1".parse::<VertexLabel>(),
            Err(LabelError::BadCopy { k: 0, i: 1 })
        );
        assert!(matches!(
            "hub w".parse::<VertexLabel>(),
            Err(LabelError::BadHub(_))
        ));
        assert!(matches!(
            "pair 1".parse::<VertexLabel>(),
            Err(LabelError::Malformed(_))
        ));
        assert!(matches!(
            "copy -1 2".parse::<VertexLabel>(),
            Err(LabelError::Malformed(_))
        ));
    }
}
