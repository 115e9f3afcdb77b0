//! Line-oriented diagram text: `dim birth death essential_flag`, one pair per
//! line, flag `1` for essential classes. Blank lines and `#` comments are
//! skipped when parsing.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::persistence::{PersistenceDiagram, PersistencePair};

impl PersistenceDiagram {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for p in &self.pairs {
            writeln!(
                out,
                "{} {} {} {}",
                p.dimension,
                p.birth,
                p.death,
                u8::from(p.essential)
            )
            .unwrap();
        }
        out
    }
}

pub fn parse_pairs(text: &str) -> Result<Vec<PersistencePair>> {
    let mut pairs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse {
            file: "<diagram>".into(),
            line: i + 1,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [dim, birth, death, flag] = fields[..] else {
            return Err(err(format!("expected 4 fields, found {}", fields.len())));
        };
        let dimension: u8 = dim
            .parse()
            .map_err(|_| err(format!("bad dimension {dim:?}")))?;
        let birth: f64 = birth
            .parse()
            .map_err(|_| err(format!("bad birth {birth:?}")))?;
        let death: f64 = death
            .parse()
            .map_err(|_| err(format!("bad death {death:?}")))?;
        let essential = match flag {
            "0" => false,
            "1" => true,
            _ => {
                return Err(err(format!(
                    "essential flag must be 0 or 1, found {flag:?}"
                )))
            }
        };
        pairs.push(PersistencePair {
            birth,
            death,
            dimension,
            essential,
        });
    }
    Ok(pairs)
}
