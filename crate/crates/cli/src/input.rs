//! Reading categories from files and the command line.
//!
//! Plain text is one matrix row per line, entries separated by spaces or
//! commas; `#` starts a comment and `;` also ends a row. JSON is either a bare
//! matrix or an object with one of the keys `matrix`, `groupoid`, `digraph`.

use std::fmt;

use catzeta_core::category::{
    free_category, groupoid_adjacency, AdjacencyMatrix, Digraph, GroupoidSpec,
};
use serde::Deserialize;
use serde_json::{json, Value};

#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

impl From<catzeta_core::Error> for InputError {
    fn from(e: catzeta_core::Error) -> Self {
        InputError(e.to_string())
    }
}

#[derive(Clone, Debug)]
pub enum Input {
    Matrix(AdjacencyMatrix),
    Groupoid(GroupoidSpec),
    /// A digraph stands for its free category.
    Digraph(Digraph),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DigraphJson {
    v: usize,
    #[serde(default)]
    arcs: Vec<(usize, usize, u64)>,
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase")]
enum Tagged {
    Matrix(Vec<Vec<i64>>),
    Groupoid(Vec<(u64, u64)>),
    Digraph(DigraphJson),
}

impl Input {
    pub fn parse(text: &str) -> Result<Self, InputError> {
        let t = text.trim();
        if t.is_empty() {
            return Err(InputError("empty input".into()));
        }
        if t.starts_with('{') {
            let tagged: Tagged =
                serde_json::from_str(t).map_err(|e| InputError(format!("bad JSON input: {e}")))?;
            return Ok(match tagged {
                Tagged::Matrix(rows) => Input::Matrix(AdjacencyMatrix::validate(&rows)?),
                Tagged::Groupoid(c) => Input::Groupoid(GroupoidSpec::new(c)?),
                Tagged::Digraph(d) => Input::Digraph(Digraph::from_arc_list(d.v, &d.arcs, false)?),
            });
        }
        if t.starts_with('[') {
            let rows: Vec<Vec<i64>> =
                serde_json::from_str(t).map_err(|e| InputError(format!("bad JSON matrix: {e}")))?;
            return Ok(Input::Matrix(AdjacencyMatrix::validate(&rows)?));
        }
        Ok(Input::Matrix(AdjacencyMatrix::validate(&parse_rows(t)?)?))
    }

    /// The adjacency matrix every computation runs on.
    pub fn matrix(&self) -> Result<AdjacencyMatrix, InputError> {
        Ok(match self {
            Input::Matrix(a) => a.clone(),
            Input::Groupoid(g) => groupoid_adjacency(g),
            Input::Digraph(d) => free_category(d)?,
        })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Input::Matrix(_) => "matrix",
            Input::Groupoid(_) => "groupoid",
            Input::Digraph(_) => "digraph",
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Input::Matrix(a) => json!({ "matrix": a.entries() }),
            Input::Groupoid(g) => json!({ "groupoid": g.components() }),
            Input::Digraph(d) => {
                let mut arcs = Vec::new();
                for (i, row) in d.arcs().iter().enumerate() {
                    for (j, &c) in row.iter().enumerate() {
                        if c > 0 {
                            arcs.push(json!([i, j, c]));
                        }
                    }
                }
                json!({ "digraph": { "v": d.v(), "arcs": arcs } })
            }
        }
    }
}

fn parse_rows(text: &str) -> Result<Vec<Vec<i64>>, InputError> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        for chunk in line.split(';') {
            let row: Vec<i64> = chunk
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse().map_err(|_| {
                        InputError(format!("line {}: '{s}' is not an integer", lineno + 1))
                    })
                })
                .collect::<Result<_, _>>()?;
            if !row.is_empty() {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Err(InputError("no matrix rows found".into()));
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_forms() {
        let a = Input::parse("1 2\n0 3\n").unwrap().matrix().unwrap();
        assert_eq!(a.entries(), &[vec![1, 2], vec![0, 3]]);
        let b = Input::parse("# comment\n1, 2; 0, 3")
            .unwrap()
            .matrix()
            .unwrap();
        assert_eq!(a, b);
        let c = Input::parse("[[1,2],[0,3]]").unwrap().matrix().unwrap();
        assert_eq!(a, c);
    }

    #[test]
    fn json_forms() {
        let g = Input::parse(r#"{"groupoid": [[2, 3]]}"#).unwrap();
        assert_eq!(g.matrix().unwrap().entries(), &[vec![3, 3], vec![3, 3]]);
        let d = Input::parse(r#"{"digraph": {"v": 2, "arcs": [[0, 1, 2]]}}"#).unwrap();
        assert_eq!(d.matrix().unwrap().entries(), &[vec![1, 2], vec![0, 1]]);
        assert_eq!(
            d.to_json(),
            json!({"digraph": {"v": 2, "arcs": [[0, 1, 2]]}})
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Input::parse("").is_err());
        assert!(Input::parse("1 x").is_err());
        assert!(Input::parse("1 2\n3").is_err());
        assert!(Input::parse("0").is_err());
        assert!(
            Input::parse(r#"{"digraph": {"v": 2, "arcs": [[0, 1, 1], [1, 0, 1]]}}"#)
                .unwrap()
                .matrix()
                .is_err()
        );
        assert!(Input::parse(r#"{"shape": 1}"#).is_err());
    }
}
