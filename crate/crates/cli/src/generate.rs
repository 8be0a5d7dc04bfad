//! The `generate` grammar.
//!
//! ```text
//! petersen N K
//! corona BASE ATTACH [ATTACH ...]     one ATTACH for all, or one per base vertex
//! general-corona Q A1,A2,...          K_Q body with attached K_Ai
//! caterpillar N POSITIONS             legs at comma-separated cycle positions, `-` for none
//! cntree N GLUINGS                    `u-v,...` edges to glue along, `-` for none
//! subdivision SPEC
//! product SPEC SPEC
//! random KIND N [SEED]
//! graph SPEC
//! ```
//!
//! A SPEC is `path:N`, `cycle:N`, `complete:N`, `empty:N`, `star:R`,
//! `double-star:A,B` or `petersen:N,K`.

use thiserror::Error;

use excellence::families::{
    c_n_tree, caterpillar_wheel, cartesian_product, complete, corona, cycle, double_star, general_corona,
    generalized_petersen, path, random_family, star, subdivision, CaterpillarWheelSpec, CoronaSpec, FamilyError,
    RandomKind,
};
use excellence::Graph;

#[derive(Debug, Error)]
pub enum GenerateError {
    #[error("unknown family `{0}` (petersen, corona, general-corona, caterpillar, cntree, subdivision, product, random, graph)")]
    UnknownFamily(String),
    #[error("`{family}` expects {expected}")]
    Arguments { family: String, expected: &'static str },
    #[error("cannot read `{0}` as a number")]
    Number(String),
    #[error("unknown graph spec `{0}` (path:N, cycle:N, complete:N, empty:N, star:R, double-star:A,B, petersen:N,K)")]
    Spec(String),
    #[error("{0}")]
    Random(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

fn number(s: &str) -> Result<usize, GenerateError> {
    s.trim().parse().map_err(|_| GenerateError::Number(s.to_string()))
}

fn numbers(s: &str) -> Result<Vec<usize>, GenerateError> {
    if s == "-" || s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(number).collect()
}

/// A named graph such as `cycle:5` or `double-star:2,2`.
pub fn graph_spec(spec: &str) -> Result<Graph, GenerateError> {
    let (kind, args) = spec.split_once(':').ok_or_else(|| GenerateError::Spec(spec.to_string()))?;
    let args = numbers(args)?;
    let g = match (kind, args.as_slice()) {
        ("path", &[n]) => path(n),
        ("cycle", &[n]) => cycle(n)?,
        ("complete", &[n]) => complete(n),
        ("empty", &[n]) => Graph::empty(n),
        ("star", &[r]) => star(r),
        ("double-star", &[a, b]) => double_star(a, b),
        ("petersen", &[n, k]) => generalized_petersen(n, k)?,
        _ => return Err(GenerateError::Spec(spec.to_string())),
    };
    Ok(g)
}

fn gluings(s: &str) -> Result<Vec<(usize, usize)>, GenerateError> {
    if s == "-" || s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|e| {
            let (a, b) = e.split_once('-').ok_or_else(|| GenerateError::Number(e.to_string()))?;
            Ok((number(a)?, number(b)?))
        })
        .collect()
}

/// Builds the graph named by `family` and its arguments. `seed` is used by
/// `random` when no seed argument is given.
pub fn generate(family: &str, args: &[String], seed: u64) -> Result<Graph, GenerateError> {
    let wrong = |expected| GenerateError::Arguments { family: family.to_string(), expected };
    let args: Vec<&str> = args.iter().map(String::as_str).collect();
    let g = match (family, args.as_slice()) {
        ("petersen", &[n, k]) => generalized_petersen(number(n)?, number(k)?)?,
        ("petersen", _) => return Err(wrong("N K")),
        ("corona", &[base, ref attach @ ..]) if !attach.is_empty() => {
            let base = graph_spec(base)?;
            let attachments = attach.iter().map(|a| graph_spec(a)).collect::<Result<Vec<_>, _>>()?;
            let spec = if attachments.len() == 1 {
                CoronaSpec::uniform(base, &attachments[0])?
            } else {
                CoronaSpec::new(base, attachments)?
            };
            corona(&spec)
        }
        ("corona", _) => return Err(wrong("BASE ATTACH [ATTACH ...]")),
        ("general-corona", &[q, sizes]) => general_corona(number(q)?, &numbers(sizes)?)?,
        ("general-corona", _) => return Err(wrong("Q A1,A2,...")),
        ("caterpillar", &[n, positions]) => {
            caterpillar_wheel(&CaterpillarWheelSpec::new(number(n)?, numbers(positions)?)?)
        }
        ("caterpillar", _) => return Err(wrong("N POSITIONS")),
        ("cntree", &[n, glue]) => c_n_tree(number(n)?, &gluings(glue)?)?,
        ("cntree", &[n]) => c_n_tree(number(n)?, &[])?,
        ("cntree", _) => return Err(wrong("N [GLUINGS]")),
        ("subdivision", &[spec]) => subdivision(&graph_spec(spec)?),
        ("subdivision", _) => return Err(wrong("SPEC")),
        ("product", &[a, b]) => cartesian_product(&graph_spec(a)?, &graph_spec(b)?),
        ("product", _) => return Err(wrong("SPEC SPEC")),
        ("random", &[kind, n, ref rest @ ..]) if rest.len() <= 1 => {
            let kind: RandomKind = kind.parse().map_err(GenerateError::Random)?;
            let seed = match rest {
                [s] => s.parse().map_err(|_| GenerateError::Number(s.to_string()))?,
                _ => seed,
            };
            random_family(kind, number(n)?, seed)?
        }
        ("random", _) => return Err(wrong("KIND N [SEED]")),
        ("graph", &[spec]) => graph_spec(spec)?,
        ("graph", _) => return Err(wrong("SPEC")),
        _ => return Err(GenerateError::UnknownFamily(family.to_string())),
    };
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(family: &str, args: &[&str]) -> Result<Graph, GenerateError> {
        generate(family, &args.iter().map(|s| s.to_string()).collect::<Vec<_>>(), 0)
    }

    #[test]
    fn families() {
        let p = run("petersen", &["5", "2"]).unwrap();
        assert_eq!((p.order(), p.size()), (10, 15));
        let c = run("caterpillar", &["4", "0,1"]).unwrap();
        assert_eq!((c.order(), c.size()), (6, 6));
        let k = run("corona", &["cycle:4", "complete:3"]).unwrap();
        assert_eq!(k.order(), 16);
        let t = run("cntree", &["4", "0-1,2-3"]).unwrap();
        assert_eq!(t.order(), 8);
        assert_eq!(run("product", &["double-star:2,2", "star:2"]).unwrap().order(), 18);
        assert_eq!(run("random", &["tree", "8", "42"]).unwrap(), run("random", &["tree", "8", "42"]).unwrap());
    }

    #[test]
    fn errors_name_the_constraint() {
        assert!(matches!(run("petersen", &["4", "3"]), Err(GenerateError::Family(FamilyError::PetersenParameters { .. }))));
        assert!(matches!(run("petersen", &["4"]), Err(GenerateError::Arguments { .. })));
        assert!(matches!(run("hypercube", &[]), Err(GenerateError::UnknownFamily(_))));
        assert!(matches!(run("graph", &["wheel:5"]), Err(GenerateError::Spec(_))));
    }
}
