//! Built-in algebra families and the structure-constant file format.
//!
//! Families:
//!
//! * `abelian(n)` - dimension `n`, every bracket zero;
//! * `heisenberg(k)` - dimension `2k+1` with `[e_(2i-1), e_(2i)] = e_(2k+1)`;
//! * `free(n, c)` - the free nilpotent algebra from [`crate::free_lie`];
//! * `filiform(m)` - dimension `m` of maximal class `m-1`, with
//!   `[e_1, e_i] = e_(i+1)` for `2 <= i < m`.
//!
//! The filiform family is not tied to any closed-form multiplier value; it
//! is in the catalog because few-generator/high-class algebras stress the
//! bounds differently than the free nilpotent family does.
//!
//! The file format is line-oriented UTF-8 text:
//!
//! ```text
//! dim 3
//! labels p q z        # optional, defaults to e1..eN
//! bracket 1 2 -> 1*3  # [e_1, e_2] = e_3; indices 1-based, i < j
//! ```
//!
//! Coefficients are integers or fractions `p/q`; several terms are joined
//! with `+`; omitted pairs have zero bracket; `#` starts a comment.
//! [`serialize`] emits the canonical form (entries sorted by `(i, j, k)`,
//! reduced fractions, labels only when they differ from the default), and
//! [`parse`] of a canonical file is its exact inverse.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::free_lie::free_nilpotent;
use crate::lie::{JacobiViolation, LieAlgebra};
use crate::linalg::{rat, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown algebra family '{0}'")]
    UnknownFamily(String),
    #[error("family '{family}' takes {expected} parameter(s), got {got}")]
    WrongParameterCount {
        family: String,
        expected: usize,
        got: usize,
    },
    #[error("invalid parameter for '{family}': {message}")]
    InvalidParameter { family: String, message: String },
    #[error("malformed builtin spec '{spec}', expected family:p1,p2,...")]
    BadSpec { spec: String },
}

/// Errors from [`parse`], each naming the offending line (1-based).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange {
        line: usize,
        index: usize,
        dim: usize,
    },
    #[error("line {line}: bracket ({i},{j}) is not in i < j order")]
    PairNotCanonical { line: usize, i: usize, j: usize },
    #[error("line {line}: duplicate bracket for pair ({i},{j})")]
    DuplicateBracket { line: usize, i: usize, j: usize },
    #[error("line {line}: duplicate term for basis element {k}")]
    DuplicateTerm { line: usize, k: usize },
    #[error("structure constants are not a Lie algebra: {0}")]
    Jacobi(JacobiViolation),
    #[error("missing 'dim' line")]
    MissingDim,
}

/// The abelian algebra of dimension `n`.
pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra::new(n, None, Vec::new()).expect("no entries to reject")
}

/// The Heisenberg algebra of dimension `2k+1`: `k` generator pairs each
/// bracketing to the one-dimensional center.
pub fn heisenberg(k: usize) -> LieAlgebra {
    assert!(k >= 1, "heisenberg needs k >= 1");
    let dim = 2 * k + 1;
    let entries = (0..k)
        .map(|i| (2 * i, 2 * i + 1, dim - 1, rat(1)))
        .collect();
    LieAlgebra::new(dim, None, entries).expect("entries are canonical")
}

/// The filiform algebra of dimension `m >= 2` and maximal class `m-1`:
/// `[e_1, e_i] = e_(i+1)` for `2 <= i < m`.
pub fn filiform(m: usize) -> LieAlgebra {
    assert!(m >= 2, "filiform needs dimension >= 2");
    let entries = (1..m - 1).map(|i| (0, i, i + 1, rat(1))).collect();
    LieAlgebra::new(m, None, entries).expect("entries are canonical")
}

/// Construct a family member by name. The result is validated; every
/// family is valid by construction, so a validation failure is a bug.
pub fn builtin(family: &str, params: &[u64]) -> Result<LieAlgebra, CatalogError> {
    let expect_params = |count: usize| -> Result<(), CatalogError> {
        if params.len() == count {
            Ok(())
        } else {
            Err(CatalogError::WrongParameterCount {
                family: family.to_owned(),
                expected: count,
                got: params.len(),
            })
        }
    };
    let at_least = |value: u64, min: u64, what: &str| -> Result<usize, CatalogError> {
        if value < min {
            Err(CatalogError::InvalidParameter {
                family: family.to_owned(),
                message: format!("{what} must be at least {min}, got {value}"),
            })
        } else {
            usize::try_from(value).map_err(|_| CatalogError::InvalidParameter {
                family: family.to_owned(),
                message: format!("{what} too large"),
            })
        }
    };
    let l = match family {
        "abelian" => {
            expect_params(1)?;
            abelian(at_least(params[0], 1, "dimension")?)
        }
        "heisenberg" => {
            expect_params(1)?;
            heisenberg(at_least(params[0], 1, "pair count")?)
        }
        "filiform" => {
            expect_params(1)?;
            filiform(at_least(params[0], 2, "dimension")?)
        }
        "free" => {
            expect_params(2)?;
            at_least(params[0], 1, "generator count")?;
            at_least(params[1], 1, "class")?;
            free_nilpotent(params[0], params[1])
        }
        other => return Err(CatalogError::UnknownFamily(other.to_owned())),
    };
    l.validate().expect("builtin families satisfy Jacobi");
    Ok(l)
}

/// Parse a spec like `free:2,3` or `abelian:4` and construct the algebra.
pub fn builtin_from_spec(spec: &str) -> Result<LieAlgebra, CatalogError> {
    let (family, params) = parse_builtin_spec(spec)?;
    builtin(&family, &params)
}

/// Split `family:p1,p2,...` into its parts.
pub fn parse_builtin_spec(spec: &str) -> Result<(String, Vec<u64>), CatalogError> {
    let bad = || CatalogError::BadSpec {
        spec: spec.to_owned(),
    };
    let (family, rest) = spec.split_once(':').ok_or_else(bad)?;
    if family.is_empty() || rest.is_empty() {
        return Err(bad());
    }
    let params = rest
        .split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|_| bad()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((family.to_owned(), params))
}

/// Parse the structure-constant file format.
pub fn parse(text: &str) -> Result<LieAlgebra, ParseError> {
    let mut dim: Option<usize> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut entries: Vec<(usize, usize, usize, Rational)> = Vec::new();
    let mut seen_pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut seen_bracket = false;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let stripped = raw.split('#').next().unwrap_or("").trim();
        if stripped.is_empty() {
            continue;
        }
        let syntax = |message: String| ParseError::Syntax { line, message };
        let mut words = stripped.split_whitespace();
        match words.next() {
            Some("dim") => {
                if dim.is_some() {
                    return Err(syntax("duplicate 'dim' line".into()));
                }
                let value = words
                    .next()
                    .ok_or_else(|| syntax("expected 'dim N'".into()))?;
                if words.next().is_some() {
                    return Err(syntax("unexpected tokens after 'dim N'".into()));
                }
                let n: usize = value
                    .parse()
                    .map_err(|_| syntax(format!("'{value}' is not a dimension")))?;
                dim = Some(n);
            }
            Some("labels") => {
                let n = dim.ok_or(ParseError::MissingDim)?;
                if labels.is_some() {
                    return Err(syntax("duplicate 'labels' line".into()));
                }
                if seen_bracket {
                    return Err(syntax("'labels' must precede bracket lines".into()));
                }
                let names: Vec<String> = words.map(str::to_owned).collect();
                if names.len() != n {
                    return Err(syntax(format!("expected {n} labels, got {}", names.len())));
                }
                labels = Some(names);
            }
            Some("bracket") => {
                let n = dim.ok_or(ParseError::MissingDim)?;
                seen_bracket = true;
                let rest = stripped
                    .strip_prefix("bracket")
                    .expect("matched above")
                    .trim();
                let (pair_part, rhs) = rest
                    .split_once("->")
                    .ok_or_else(|| syntax("expected '->' in bracket line".into()))?;
                let pair_tokens: Vec<&str> = pair_part.split_whitespace().collect();
                let [i_tok, j_tok] = pair_tokens[..] else {
                    return Err(syntax("expected 'bracket I J -> ...'".into()));
                };
                let parse_index = |tok: &str| -> Result<usize, ParseError> {
                    let v: usize = tok
                        .parse()
                        .map_err(|_| syntax(format!("'{tok}' is not an index")))?;
                    if v < 1 || v > n {
                        Err(ParseError::IndexOutOfRange {
                            line,
                            index: v,
                            dim: n,
                        })
                    } else {
                        Ok(v)
                    }
                };
                let i = parse_index(i_tok)?;
                let j = parse_index(j_tok)?;
                if i >= j {
                    return Err(ParseError::PairNotCanonical { line, i, j });
                }
                if !seen_pairs.insert((i, j)) {
                    return Err(ParseError::DuplicateBracket { line, i, j });
                }
                let mut seen_terms: BTreeSet<usize> = BTreeSet::new();
                for term in rhs.split('+') {
                    let term = term.trim();
                    if term.is_empty() {
                        return Err(syntax("empty term in bracket expansion".into()));
                    }
                    let (coeff, k) = match term.split_once('*') {
                        Some((c, k_tok)) => {
                            (parse_rational(c.trim(), line)?, parse_index(k_tok.trim())?)
                        }
                        None => (rat(1), parse_index(term)?),
                    };
                    if !seen_terms.insert(k) {
                        return Err(ParseError::DuplicateTerm { line, k });
                    }
                    if coeff.is_zero() {
                        continue;
                    }
                    entries.push((i - 1, j - 1, k - 1, coeff));
                }
            }
            Some(other) => {
                return Err(syntax(format!("unrecognized directive '{other}'")));
            }
            None => unreachable!("empty lines are skipped"),
        }
    }

    let dim = dim.ok_or(ParseError::MissingDim)?;
    let l = LieAlgebra::new(dim, labels, entries)
        .expect("parser validates entries before construction");
    l.validate().map_err(ParseError::Jacobi)?;
    Ok(l)
}

fn parse_rational(text: &str, line: usize) -> Result<Rational, ParseError> {
    let syntax = |message: String| ParseError::Syntax { line, message };
    match text.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim())
                .map_err(|_| syntax(format!("'{text}' is not a rational")))?;
            let q = BigInt::from_str(q.trim())
                .map_err(|_| syntax(format!("'{text}' is not a rational")))?;
            if q.is_zero() {
                return Err(syntax(format!("'{text}' has a zero denominator")));
            }
            Ok(Rational::new(p, q))
        }
        None => BigInt::from_str(text.trim())
            .map(Rational::from_integer)
            .map_err(|_| syntax(format!("'{text}' is not an integer coefficient"))),
    }
}

/// Canonical text form of an algebra; see the module docs for the format.
pub fn serialize(l: &LieAlgebra) -> String {
    let mut out = format!("dim {}\n", l.dim());
    if !l.has_default_labels() {
        out.push_str("labels ");
        out.push_str(&l.labels().join(" "));
        out.push('\n');
    }
    let mut current: Option<(usize, usize)> = None;
    let mut terms: Vec<String> = Vec::new();
    let flush = |current: &Option<(usize, usize)>, terms: &mut Vec<String>, out: &mut String| {
        if let Some((i, j)) = current {
            out.push_str(&format!(
                "bracket {} {} -> {}\n",
                i + 1,
                j + 1,
                terms.join(" + ")
            ));
            terms.clear();
        }
    };
    for (i, j, k, c) in l.bracket_entries() {
        if current != Some((i, j)) {
            flush(&current, &mut terms, &mut out);
            current = Some((i, j));
        }
        terms.push(format!("{}*{}", c, k + 1));
    }
    flush(&current, &mut terms, &mut out);
    out
}

/// Expected invariants for a catalog entry, as pinned in the data file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expected {
    pub dim: usize,
    pub class: usize,
    pub generators: usize,
    /// `None` when the data file leaves the multiplier unpinned.
    pub multiplier_dim: Option<usize>,
    pub provenance: String,
}

/// One named member of the built-in catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub family: String,
    pub params: Vec<u64>,
    pub expected: Option<Expected>,
}

impl CatalogEntry {
    pub fn spec_string(&self) -> String {
        let params: Vec<String> = self.params.iter().map(u64::to_string).collect();
        format!("{}:{}", self.family, params.join(","))
    }

    pub fn construct(&self) -> LieAlgebra {
        builtin(&self.family, &self.params).expect("catalog entries are well-formed")
    }
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec_string())
    }
}

/// The standard catalog, parsed from the data file shipped with the crate.
pub fn standard_entries() -> Vec<CatalogEntry> {
    let data = include_str!("catalog_data.txt");
    let mut out = Vec::new();
    for raw in data.lines() {
        let stripped = raw.split('#').next().unwrap_or("").trim();
        if stripped.is_empty() {
            continue;
        }
        let fields: Vec<&str> = stripped.split(';').map(str::trim).collect();
        let [family, params, dim, class, generators, multiplier, provenance] = fields[..] else {
            panic!("malformed catalog data line: {raw}");
        };
        let params: Vec<u64> = params
            .split(',')
            .map(|p| p.trim().parse().expect("catalog params are integers"))
            .collect();
        let multiplier_dim = match multiplier {
            "-" => None,
            v => Some(v.parse().expect("catalog multiplier is an integer")),
        };
        out.push(CatalogEntry {
            family: family.to_owned(),
            params,
            expected: Some(Expected {
                dim: dim.parse().expect("catalog dim is an integer"),
                class: class.parse().expect("catalog class is an integer"),
                generators: generators
                    .parse()
                    .expect("catalog generators is an integer"),
                multiplier_dim,
                provenance: provenance.to_owned(),
            }),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplier::multiplier_dimension;

    #[test]
    fn heisenberg_matches_free_class_two() {
        let h = heisenberg(1);
        let f = free_nilpotent(2, 2);
        assert_eq!(h.dim(), f.dim());
        // identical structure constants, only the labels differ
        let h_triples: Vec<_> = h
            .bracket_entries()
            .map(|(i, j, k, c)| (i, j, k, c.clone()))
            .collect();
        let f_triples: Vec<_> = f
            .bracket_entries()
            .map(|(i, j, k, c)| (i, j, k, c.clone()))
            .collect();
        assert_eq!(h_triples, f_triples);
    }

    #[test]
    fn abelian_shape() {
        let l = abelian(4);
        assert_eq!(l.dim(), 4);
        assert_eq!(l.nilpotency_class().unwrap(), 1);
    }

    #[test]
    fn filiform_shape() {
        let l = filiform(5);
        assert_eq!(l.dim(), 5);
        assert_eq!(l.nilpotency_class().unwrap(), 4);
        assert_eq!(l.min_generators().unwrap(), 2);
        let dims: Vec<usize> = l
            .lower_central_series()
            .iter()
            .map(crate::lie::Subspace::dim)
            .collect();
        assert_eq!(dims, vec![5, 3, 2, 1, 0]);
    }

    #[test]
    fn builtin_dispatch() {
        assert_eq!(builtin("abelian", &[4]).unwrap().dim(), 4);
        assert_eq!(builtin("heisenberg", &[2]).unwrap().dim(), 5);
        assert_eq!(builtin("free", &[2, 3]).unwrap().dim(), 5);
        assert_eq!(builtin("filiform", &[6]).unwrap().dim(), 6);
    }

    #[test]
    fn builtin_rejects_bad_input() {
        assert!(matches!(
            builtin("sporadic", &[1]),
            Err(CatalogError::UnknownFamily(_))
        ));
        assert!(matches!(
            builtin("abelian", &[1, 2]),
            Err(CatalogError::WrongParameterCount { .. })
        ));
        assert!(matches!(
            builtin("abelian", &[0]),
            Err(CatalogError::InvalidParameter { .. })
        ));
        assert!(matches!(
            builtin("filiform", &[1]),
            Err(CatalogError::InvalidParameter { .. })
        ));
    }

    #[test]
    fn builtin_spec_grammar() {
        assert_eq!(builtin_from_spec("free:2,3").unwrap().dim(), 5);
        assert_eq!(builtin_from_spec("abelian:4").unwrap().dim(), 4);
        assert!(matches!(
            builtin_from_spec("free"),
            Err(CatalogError::BadSpec { .. })
        ));
        assert!(matches!(
            builtin_from_spec("free:x,y"),
            Err(CatalogError::BadSpec { .. })
        ));
    }

    #[test]
    fn parse_heisenberg_file() {
        let text = "dim 3\nbracket 1 2 -> 1*3\n";
        let l = parse(text).unwrap();
        assert_eq!(l, heisenberg(1));
    }

    #[test]
    fn parse_tolerates_comments_and_spacing() {
        let text = "# a comment\n dim 3 \n\nbracket 1 2 ->  3   # bare index means 1*3\n";
        assert_eq!(parse(text).unwrap(), heisenberg(1));
    }

    #[test]
    fn parse_rational_coefficients() {
        let text = "dim 3\nbracket 1 2 -> 1/2*3\n";
        let l = parse(text).unwrap();
        let (_, _, _, c) = l.bracket_entries().next().unwrap();
        assert_eq!(c, &crate::linalg::frac(1, 2));
    }

    #[test]
    fn parse_reports_distinct_errors() {
        assert!(matches!(parse(""), Err(ParseError::MissingDim)));
        assert!(matches!(
            parse("dim 2\nbracket 2 1 -> 1*1\n"),
            Err(ParseError::PairNotCanonical {
                line: 2,
                i: 2,
                j: 1
            })
        ));
        assert!(matches!(
            parse("dim 3\nbracket 1 2 -> 1*3\nbracket 1 2 -> 1*3\n"),
            Err(ParseError::DuplicateBracket { line: 3, .. })
        ));
        assert!(matches!(
            parse("dim 2\nbracket 1 2 -> 1*5\n"),
            Err(ParseError::IndexOutOfRange {
                line: 2,
                index: 5,
                dim: 2
            })
        ));
        assert!(matches!(
            parse("dim 3\nbracket 1 2 -> 1*3 + 2*3\n"),
            Err(ParseError::DuplicateTerm { line: 2, k: 3 })
        ));
        assert!(matches!(
            parse("dim 3\nbracket 1 2 -> bogus\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
    }

    #[test]
    fn parse_rejects_jacobi_violation() {
        // [e1,e2] = e3 plus [e1,e3] = e1 is not a Lie algebra
        let text = "dim 3\nbracket 1 2 -> 1*3\nbracket 1 3 -> 1*1\n";
        assert!(matches!(parse(text), Err(ParseError::Jacobi(_))));
    }

    #[test]
    fn serialize_abelian() {
        assert_eq!(serialize(&abelian(2)), "dim 2\n");
    }

    #[test]
    fn serialize_heisenberg() {
        assert_eq!(serialize(&heisenberg(1)), "dim 3\nbracket 1 2 -> 1*3\n");
    }

    #[test]
    fn round_trip_catalog() {
        for entry in standard_entries() {
            let l = entry.construct();
            let text = serialize(&l);
            let back = parse(&text).unwrap_or_else(|e| panic!("{entry}: {e}"));
            assert_eq!(back, l, "round trip failed for {entry}");
            assert_eq!(
                serialize(&back),
                text,
                "serialize not canonical for {entry}"
            );
        }
    }

    #[test]
    fn catalog_expectations_hold() {
        for entry in standard_entries() {
            let expected = entry
                .expected
                .as_ref()
                .expect("data file pins expectations");
            let l = entry.construct();
            assert_eq!(l.dim(), expected.dim, "{entry}: dim");
            assert_eq!(
                l.nilpotency_class().unwrap(),
                expected.class,
                "{entry}: class"
            );
            assert_eq!(
                l.min_generators().unwrap(),
                expected.generators,
                "{entry}: generators"
            );
            if let Some(m) = expected.multiplier_dim {
                assert_eq!(multiplier_dimension(&l), m, "{entry}: multiplier");
            }
        }
    }
}
