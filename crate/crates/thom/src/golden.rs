//! Golden coefficient tables.
//!
//! A table file holds one term per line as `coefficient<TAB>parts`, with the
//! parts comma separated and weakly increasing. Lines starting with `#` are
//! comments. Directives:
//!
//! - `@singularity NAME` and `@r N` (required)
//! - `@source TEXT`
//! - `@expand-tail K`: add `Φ_p(T_K)` from the stored table for `r = K`,
//!   where `p` is the length bound of the singularity and `K = r − 1`
//! - `@suspect TEXT`: the printed table has a known problem
//! - `@erratum PRINTED CORRECTED`: replace the index of one printed term
//!
//! Every term must have weight equal to the codimension once errata are
//! applied, so a mistyped index is caught at load time.

use std::collections::BTreeMap;
use std::path::Path;

use thiserror::Error;

use thom_core::{BigInt, Partition, SchurExpansion, SingularityId};

#[derive(Debug, Error)]
pub enum GoldenError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {partition} has weight {weight}, expected codimension {codim}")]
    Weight {
        line: usize,
        partition: Partition,
        weight: u32,
        codim: u32,
    },
    #[error("line {line}: {partition} appears twice")]
    Duplicate { line: usize, partition: Partition },
    #[error("missing @{0} directive")]
    Missing(&'static str),
    #[error("line {line}: erratum for {partition} matches no term")]
    UnusedErratum { line: usize, partition: Partition },
    #[error("no stored {singularity} table for r = {r} to expand the tail")]
    MissingTail { singularity: String, r: u32 },
    #[error("unknown table {0:?}")]
    Unknown(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenTable {
    pub name: String,
    pub singularity: SingularityId,
    pub source: String,
    pub suspect: Option<String>,
    /// `(printed, corrected)` index pairs.
    pub errata: Vec<(Partition, Partition)>,
    /// Terms as transcribed, after errata, before tail expansion.
    pub printed: SchurExpansion,
    /// The full flat expansion.
    pub expansion: SchurExpansion,
}

macro_rules! builtin_tables {
    ($($name:literal),* $(,)?) => {
        const BUILTIN: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../data/golden/", $name, ".golden"))),)*
        ];
    };
}

builtin_tables![
    "example9-r2",
    "example9-r3",
    "appendix1-r4",
    "appendix1-r5",
    "appendix1-r6",
    "appendix1-r7",
    "appendix1-r8",
    "example10-r1",
    "example10-r2",
    "example10-r3",
    "appendix2-r4",
    "appendix2-r5",
    "appendix2-r6",
    "appendix2-r7",
];

pub fn builtin_names() -> impl Iterator<Item = &'static str> {
    BUILTIN.iter().map(|(n, _)| *n)
}

/// Raw text of a built-in table.
pub fn builtin_text(name: &str) -> Option<&'static str> {
    BUILTIN.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub fn builtin(name: &str) -> Result<GoldenTable, GoldenError> {
    let text = builtin_text(name).ok_or_else(|| GoldenError::Unknown(name.into()))?;
    parse(name, text)
}

/// A built-in table name, or else a path to a table file.
pub fn load(name_or_path: &str) -> Result<GoldenTable, GoldenError> {
    if builtin_text(name_or_path).is_some() {
        return builtin(name_or_path);
    }
    let path = Path::new(name_or_path);
    if !path.exists() {
        return Err(GoldenError::Unknown(name_or_path.into()));
    }
    let text = std::fs::read_to_string(path).map_err(|source| GoldenError::Io {
        path: name_or_path.into(),
        source,
    })?;
    let name = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or(name_or_path);
    parse(name, &text)
}

/// Parses a table, expanding tails from the built-in corpus.
pub fn parse(name: &str, text: &str) -> Result<GoldenTable, GoldenError> {
    parse_with(name, text, &builtin_for)
}

fn builtin_for(target: &SingularityId) -> Result<SchurExpansion, GoldenError> {
    for (name, text) in BUILTIN {
        if header(text).as_ref() == Some(target) {
            return Ok(parse(name, text)?.expansion);
        }
    }
    Err(GoldenError::MissingTail {
        singularity: target.family.name(),
        r: target.r,
    })
}

fn header(text: &str) -> Option<SingularityId> {
    let mut family = None;
    let mut r = None;
    for line in text.lines() {
        if let Some(v) = line.strip_prefix("@singularity") {
            family = v.trim().parse().ok();
        } else if let Some(v) = line.strip_prefix("@r ") {
            r = v.trim().parse().ok();
        }
    }
    SingularityId::new(family?, r?).ok()
}

fn parse_parts(line: usize, s: &str) -> Result<Partition, GoldenError> {
    let syntax = |message: String| GoldenError::Syntax { line, message };
    let parts: Vec<u32> = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| syntax(format!("bad part {t:?}")))
        })
        .collect::<Result<_, _>>()?;
    Partition::new(parts).map_err(|e| syntax(e.to_string()))
}

/// Parses a table, looking up lower-`r` tables for tails with `lower`.
pub fn parse_with(
    name: &str,
    text: &str,
    lower: &dyn Fn(&SingularityId) -> Result<SchurExpansion, GoldenError>,
) -> Result<GoldenTable, GoldenError> {
    let mut family = None;
    let mut r = None;
    let mut source = String::new();
    let mut suspect = None;
    let mut tail = None;
    let mut errata = Vec::new();
    let mut terms = Vec::new();

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let syntax = |message: String| GoldenError::Syntax { line, message };
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if let Some(directive) = trimmed.strip_prefix('@') {
            let (key, value) = directive
                .split_once(char::is_whitespace)
                .unwrap_or((directive, ""));
            let value = value.trim();
            match key {
                "singularity" => family = Some(value.parse().map_err(|e| syntax(format!("{e}")))?),
                "r" => {
                    r = Some(
                        value
                            .parse::<u32>()
                            .map_err(|_| syntax(format!("bad r {value:?}")))?,
                    )
                }
                "source" => source = value.to_string(),
                "suspect" => suspect = Some(value.to_string()),
                "expand-tail" => {
                    tail = Some((
                        line,
                        value
                            .parse::<u32>()
                            .map_err(|_| syntax(format!("bad tail {value:?}")))?,
                    ))
                }
                "erratum" => {
                    let (printed, corrected) =
                        value.split_once(char::is_whitespace).ok_or_else(|| {
                            syntax("erratum needs a printed and a corrected index".into())
                        })?;
                    errata.push((
                        line,
                        parse_parts(line, printed)?,
                        parse_parts(line, corrected.trim())?,
                    ));
                }
                _ => return Err(syntax(format!("unknown directive @{key}"))),
            }
            continue;
        }
        let (coeff, parts) = trimmed
            .split_once('\t')
            .ok_or_else(|| syntax("expected coefficient<TAB>parts".into()))?;
        let coeff: BigInt = coeff
            .trim()
            .parse()
            .map_err(|_| syntax(format!("bad coefficient {coeff:?}")))?;
        if coeff <= BigInt::from(0) {
            return Err(syntax(format!("coefficient {coeff} is not positive")));
        }
        terms.push((line, parse_parts(line, parts)?, coeff));
    }

    let family = family.ok_or(GoldenError::Missing("singularity"))?;
    let r = r.ok_or(GoldenError::Missing("r"))?;
    let singularity = SingularityId::new(family, r).map_err(|e| GoldenError::Syntax {
        line: 0,
        message: e.to_string(),
    })?;
    let codim = singularity.codim();

    for (line, printed, _) in &errata {
        if !terms.iter().any(|(_, p, _)| p == printed) {
            return Err(GoldenError::UnusedErratum {
                line: *line,
                partition: printed.clone(),
            });
        }
    }
    let mut seen = BTreeMap::new();
    for (line, p, c) in &mut terms {
        if let Some((_, _, fixed)) = errata.iter().find(|(_, printed, _)| printed == p) {
            *p = fixed.clone();
        }
        if p.weight() != codim {
            return Err(GoldenError::Weight {
                line: *line,
                partition: p.clone(),
                weight: p.weight(),
                codim,
            });
        }
        if seen.insert(p.clone(), c.clone()).is_some() {
            return Err(GoldenError::Duplicate {
                line: *line,
                partition: p.clone(),
            });
        }
    }
    let printed = SchurExpansion::from_terms(seen);

    let mut expansion = printed.clone();
    if let Some((line, k)) = tail {
        if k + 1 != r {
            return Err(GoldenError::Syntax {
                line,
                message: format!("tail must come from r = {}, got {k}", r - 1),
            });
        }
        let below = SingularityId::new(family, k).map_err(|e| GoldenError::Syntax {
            line,
            message: e.to_string(),
        })?;
        let shifted = lower(&below)?
            .phi(singularity.length_bound())
            .map_err(|e| GoldenError::Syntax {
                line,
                message: e.to_string(),
            })?;
        if let Some(p) = shifted
            .partitions()
            .find(|p| printed.coeff(p) != BigInt::from(0))
        {
            return Err(GoldenError::Duplicate {
                line,
                partition: p.clone(),
            });
        }
        expansion = expansion.add(&shifted);
    }

    Ok(GoldenTable {
        name: name.to_string(),
        singularity,
        source,
        suspect,
        errata: errata.into_iter().map(|(_, a, b)| (a, b)).collect(),
        printed,
        expansion,
    })
}

/// Writes a table in flat form, without tail or errata directives.
pub fn render(singularity: &SingularityId, source: &str, e: &SchurExpansion) -> String {
    let mut out = format!(
        "@singularity {}\n@r {}\n",
        singularity.family.name(),
        singularity.r
    );
    if !source.is_empty() {
        out.push_str(&format!("@source {source}\n"));
    }
    for (p, c) in e.iter() {
        let parts: Vec<String> = p.parts().iter().map(u32::to_string).collect();
        out.push_str(&format!("{c}\t{}\n", parts.join(",")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_builtin_loads() {
        for name in builtin_names() {
            let t = builtin(name).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(t.expansion.weight(), Some(t.singularity.codim()), "{name}");
        }
    }

    #[test]
    fn tails_expand_recursively() {
        let t3 = builtin("example9-r3").unwrap();
        let t2 = builtin("example9-r2").unwrap();
        assert_eq!(t3.expansion, t3.printed.add(&t2.expansion.phi(4).unwrap()));
        assert_eq!(t2.printed, t2.expansion);
    }

    #[test]
    fn directive_errors_carry_line_numbers() {
        let text = "@singularity III33\n@r 2\n4\t3,7\nfour\t4,6\n";
        match parse("t", text) {
            Err(GoldenError::Syntax { line: 4, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse("t", "@r 2\n4\t3,7\n"),
            Err(GoldenError::Missing("singularity"))
        ));
        assert!(matches!(
            parse("t", "@singularity III33\n@r 2\n4\t3,7\n1\t3,7\n"),
            Err(GoldenError::Duplicate { line: 4, .. })
        ));
        assert!(matches!(
            parse("t", "@singularity III33\n@r 2\n@erratum 1,2 1,3\n4\t3,7\n"),
            Err(GoldenError::UnusedErratum { line: 3, .. })
        ));
        assert!(matches!(
            parse("t", "@singularity III33\n@r 3\n@expand-tail 1\n8\t4,10\n"),
            Err(GoldenError::Syntax { line: 3, .. })
        ));
    }

    #[test]
    fn render_round_trips() {
        let t = builtin("appendix1-r4").unwrap();
        let text = render(&t.singularity, &t.source, &t.expansion);
        let back = parse("copy", &text).unwrap();
        assert_eq!(back.expansion, t.expansion);
        assert_eq!(back.singularity, t.singularity);
    }
}
