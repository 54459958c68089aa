//! Text format for graph-of-free-groups instances:
//!
//! ```text
//! rank 3
//! subgroup H1: a b
//! subgroup H2: b c
//! edge H1 H2: b
//! ```

use std::collections::BTreeMap;

use crate::error::GogError;
use crate::word::Word;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Instance {
    pub rank: u32,
    pub subgroup_names: Vec<String>,
    pub subgroups: Vec<Vec<Word>>,
    pub edges: Vec<(usize, usize, Vec<Word>)>,
}

impl Instance {
    pub fn parse(text: &str) -> Result<Instance, GogError> {
        let mut rank: Option<u32> = None;
        let mut names: BTreeMap<String, usize> = BTreeMap::new();
        let mut subgroup_names = Vec::new();
        let mut subgroups: Vec<Vec<Word>> = Vec::new();
        let mut edges = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let err = |message: String| GogError::InstanceParse {
                line: ln + 1,
                message,
            };
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("rank") {
                rank = Some(
                    rest.trim()
                        .parse()
                        .map_err(|_| err(format!("bad rank {:?}", rest.trim())))?,
                );
            } else if let Some(rest) = line.strip_prefix("subgroup") {
                let (name, body) = rest
                    .split_once(':')
                    .ok_or_else(|| err("expected `subgroup NAME: words`".into()))?;
                let name = name.trim().to_string();
                if names.contains_key(&name) {
                    return Err(err(format!("duplicate subgroup {name:?}")));
                }
                let ws = parse_words(body, ln + 1)?;
                names.insert(name.clone(), subgroups.len());
                subgroup_names.push(name);
                subgroups.push(ws);
            } else if let Some(rest) = line.strip_prefix("edge") {
                let (ends, body) = rest
                    .split_once(':')
                    .ok_or_else(|| err("expected `edge NAME NAME: words`".into()))?;
                let parts: Vec<&str> = ends.split_whitespace().collect();
                if parts.len() != 2 {
                    return Err(err("edge needs exactly two endpoint names".into()));
                }
                let mut ids = [0usize; 2];
                for (k, p) in parts.iter().enumerate() {
                    ids[k] = *names
                        .get(*p)
                        .ok_or_else(|| err(format!("unknown subgroup {p:?}")))?;
                }
                edges.push((ids[0], ids[1], parse_words(body, ln + 1)?));
            } else {
                return Err(err(format!("unrecognized line {line:?}")));
            }
        }
        let rank = rank.ok_or(GogError::InstanceParse {
            line: 0,
            message: "missing `rank N` line".into(),
        })?;
        Ok(Instance {
            rank,
            subgroup_names,
            subgroups,
            edges,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("rank {}\n", self.rank);
        for (name, ws) in self.subgroup_names.iter().zip(&self.subgroups) {
            s.push_str(&format!("subgroup {name}: {}\n", join_words(ws)));
        }
        for (a, b, ws) in &self.edges {
            s.push_str(&format!(
                "edge {} {}: {}\n",
                self.subgroup_names[*a], self.subgroup_names[*b], join_words(ws)
            ));
        }
        s
    }
}

fn parse_words(body: &str, line: usize) -> Result<Vec<Word>, GogError> {
    body.split_whitespace()
        .map(|t| {
            Word::parse(t).map_err(|_| GogError::InstanceParse {
                line,
                message: format!("bad word {t:?}"),
            })
        })
        .collect()
}

fn join_words(ws: &[Word]) -> String {
    ws.iter()
        .map(|w| w.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let text = "rank 3\nsubgroup H1: a b\nsubgroup H2: b c\nedge H1 H2: b\n";
        let inst = Instance::parse(text).unwrap();
        assert_eq!(inst.rank, 3);
        assert_eq!(inst.subgroups.len(), 2);
        assert_eq!(inst.edges.len(), 1);
        assert_eq!(inst.to_text(), text);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let text = "rank 3\nsubgroup H1: a b\nbogus line\n";
        match Instance::parse(text) {
            Err(GogError::InstanceParse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_subgroup_in_edge() {
        let text = "rank 2\nsubgroup H1: a\nedge H1 H9: a\n";
        assert!(Instance::parse(text).is_err());
    }
}
