//! Verdicts as JSON with vertex labels, and back.

use std::collections::HashMap;

use serde_json::{json, Value};
use thiserror::Error;

use excellence::graph::{Graph, VertexSet};
use excellence::recognize::{
    BlockCoverCertificate, CaterpillarWheel, Certificate, CliquePartition, ComponentVerdict, MatchingCertificate,
    Method, OracleCertificate, PluckTrace, RejectReason, RotationCertificate, SccCertificate, SccCheck,
    SimplexCertificate, Verdict,
};
use excellence::Matching;

#[derive(Debug, Error)]
#[error("cannot decode verdict: {0}")]
pub struct DecodeError(pub String);

fn bad(what: impl Into<String>) -> DecodeError {
    DecodeError(what.into())
}

struct Names<'a> {
    g: &'a Graph,
    index: HashMap<&'a str, usize>,
}

impl<'a> Names<'a> {
    fn of(g: &'a Graph) -> Names<'a> {
        let index = g.labels().iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        Names { g, index }
    }

    fn name(&self, v: usize) -> Value {
        Value::from(self.g.label(v))
    }

    fn list(&self, vs: impl IntoIterator<Item = usize>) -> Value {
        Value::Array(vs.into_iter().map(|v| self.name(v)).collect())
    }

    fn pairs(&self, ps: &[(usize, usize)]) -> Value {
        Value::Array(ps.iter().map(|&(a, b)| json!([self.name(a), self.name(b)])).collect())
    }

    fn sets<'s>(&self, sets: impl IntoIterator<Item = &'s VertexSet>) -> Value {
        Value::Array(sets.into_iter().map(|s| self.list(s.iter().copied())).collect())
    }

    fn id(&self, v: &Value) -> Result<usize, DecodeError> {
        let label = v.as_str().ok_or_else(|| bad(format!("expected a vertex label, got {v}")))?;
        self.index.get(label).copied().ok_or_else(|| bad(format!("unknown vertex `{label}`")))
    }

    fn ids(&self, v: &Value) -> Result<Vec<usize>, DecodeError> {
        array(v)?.iter().map(|x| self.id(x)).collect()
    }

    fn set(&self, v: &Value) -> Result<VertexSet, DecodeError> {
        Ok(self.ids(v)?.into_iter().collect())
    }

    fn set_list(&self, v: &Value) -> Result<Vec<VertexSet>, DecodeError> {
        array(v)?.iter().map(|s| self.set(s)).collect()
    }

    fn pair(&self, v: &Value) -> Result<(usize, usize), DecodeError> {
        match array(v)?.as_slice() {
            [a, b] => Ok((self.id(a)?, self.id(b)?)),
            _ => Err(bad("expected a pair of labels")),
        }
    }

    fn pair_list(&self, v: &Value) -> Result<Vec<(usize, usize)>, DecodeError> {
        array(v)?.iter().map(|p| self.pair(p)).collect()
    }
}

fn array(v: &Value) -> Result<&Vec<Value>, DecodeError> {
    v.as_array().ok_or_else(|| bad(format!("expected an array, got {v}")))
}

fn field<'v>(v: &'v Value, key: &str) -> Result<&'v Value, DecodeError> {
    v.get(key).ok_or_else(|| bad(format!("missing field `{key}`")))
}

fn number(v: &Value, key: &str) -> Result<usize, DecodeError> {
    field(v, key)?.as_u64().map(|x| x as usize).ok_or_else(|| bad(format!("`{key}` is not a count")))
}

fn boolean(v: &Value, key: &str) -> Result<bool, DecodeError> {
    field(v, key)?.as_bool().ok_or_else(|| bad(format!("`{key}` is not a boolean")))
}

fn numbers(v: &Value) -> Result<Vec<usize>, DecodeError> {
    array(v)?.iter().map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| bad("expected a count"))).collect()
}

fn optional<'v>(v: &'v Value, key: &str) -> Option<&'v Value> {
    v.get(key).filter(|x| !x.is_null())
}

pub fn verdict_to_json(g: &Graph, verdict: &Verdict) -> Value {
    json!({
        "excellent": verdict.excellent,
        "method": verdict.method.name(),
        "fallback_used": verdict.fallback_used,
        "alpha": verdict.alpha,
        "certificate": certificate_to_json(g, &verdict.certificate),
    })
}

fn certificate_to_json(g: &Graph, certificate: &Certificate) -> Value {
    let names = Names::of(g);
    match certificate {
        Certificate::BaseCase => json!({ "kind": "base-case" }),
        Certificate::Rejected(RejectReason::StrongSupport { vertex, leaves: (a, b) }) => json!({
            "kind": "strong-support",
            "vertex": names.name(*vertex),
            "leaves": [names.name(*a), names.name(*b)],
        }),
        Certificate::Rejected(RejectReason::OverlappingSimplexes { vertex, first, second }) => json!({
            "kind": "overlapping-simplexes",
            "vertex": names.name(*vertex),
            "first": names.name(*first),
            "second": names.name(*second),
        }),
        Certificate::Matching(m) => json!({
            "kind": "matching",
            "matching": names.pairs(&m.matching.edges),
            "cover": m.cover.as_ref().map(|c| names.list(c.iter().copied())),
        }),
        Certificate::CaterpillarWheel(w) => json!({
            "kind": "caterpillar-wheel",
            "cycle": names.list(w.cycle.iter().copied()),
            "legs": names.pairs(&w.legs),
            "gaps": w.gaps,
            "matching": w.matching.as_ref().map(|m| names.pairs(&m.edges)),
        }),
        Certificate::Pluck { trace, residual } => json!({
            "kind": "pluck",
            "steps": names.pairs(&trace.steps),
            "kept": names.list(trace.kept.iter().copied()),
            "residual": residual.as_ref().map(|r| verdict_to_json(&trace.residual, r)),
        }),
        Certificate::SimplexPartition(s) => json!({
            "kind": "simplex-partition",
            "simplexes": names.sets(&s.simplexes),
            "overlap": s.overlap.map(|(v, i, j)| json!({ "vertex": names.name(v), "first": i, "second": j })),
        }),
        Certificate::SuccessiveCliqueCover(s) => json!({
            "kind": "successive-clique-cover",
            "parts": names.sets(&s.parts),
            "check": match s.check {
                SccCheck::Valid => json!({ "status": "valid" }),
                SccCheck::NotSimplex { part } => json!({ "status": "not-simplex", "part": part }),
                SccCheck::NoTransversal { part, vertex } =>
                    json!({ "status": "no-transversal", "part": part, "vertex": names.name(vertex) }),
            },
        }),
        Certificate::BlockCover(b) => json!({
            "kind": "perfect-block-cover",
            "cover": b.cover.as_ref().map(|c| names.sets(c)),
        }),
        Certificate::CliquePartition(c) => json!({
            "kind": "clique-partition",
            "cliques": names.sets(&c.cliques),
            "witnesses": c.witnesses.iter().enumerate().map(|(v, w)| json!({
                "vertex": names.name(v),
                "set": names.list(w.iter().copied()),
            })).collect::<Vec<_>>(),
        }),
        Certificate::Swap { vertex, pair: (a, b) } => json!({
            "kind": "swap",
            "vertex": names.name(*vertex),
            "pair": [names.name(*a), names.name(*b)],
        }),
        Certificate::Rotation(r) => json!({
            "kind": "rotation",
            "n": r.n,
            "k": r.k,
            "alpha": r.alpha,
            "orbits": r.orbits.iter().map(|(s, shifts)| json!({
                "generator": names.list(s.iter().copied()),
                "shifts": shifts,
            })).collect::<Vec<_>>(),
            "first_k_shifts_cover": r.first_k_shifts_cover,
        }),
        Certificate::Oracle(o) => json!({
            "kind": "oracle",
            "alpha": o.alpha,
            "alpha_set": names.list(o.alpha_set.iter().copied()),
            "per_vertex": g.vertices().map(|v| json!({
                "vertex": names.name(v),
                "max": o.per_vertex_max[v],
                "witness": o.witness[v].as_ref().map(|w| names.list(w.iter().copied())),
            })).collect::<Vec<_>>(),
        }),
        Certificate::Components(parts) => json!({
            "kind": "components",
            "components": parts.iter().map(|c| json!({
                "vertices": names.list(c.vertices.iter().copied()),
                "verdict": verdict_to_json(&g.induced(&c.vertices), &c.verdict),
            })).collect::<Vec<_>>(),
        }),
    }
}

pub fn verdict_from_json(g: &Graph, v: &Value) -> Result<Verdict, DecodeError> {
    let method_name = field(v, "method")?.as_str().ok_or_else(|| bad("`method` is not a string"))?;
    let method = Method::from_name(method_name).ok_or_else(|| bad(format!("unknown method `{method_name}`")))?;
    let alpha = match optional(v, "alpha") {
        Some(a) => Some(a.as_u64().ok_or_else(|| bad("`alpha` is not a count"))? as usize),
        None => None,
    };
    Ok(Verdict {
        excellent: boolean(v, "excellent")?,
        method,
        certificate: certificate_from_json(g, field(v, "certificate")?)?,
        fallback_used: boolean(v, "fallback_used")?,
        alpha,
    })
}

fn certificate_from_json(g: &Graph, v: &Value) -> Result<Certificate, DecodeError> {
    let names = Names::of(g);
    if names.index.len() != g.order() {
        return Err(bad("vertex labels are not unique"));
    }
    let kind = field(v, "kind")?.as_str().ok_or_else(|| bad("`kind` is not a string"))?;
    let cert = match kind {
        "base-case" => Certificate::BaseCase,
        "strong-support" => Certificate::Rejected(RejectReason::StrongSupport {
            vertex: names.id(field(v, "vertex")?)?,
            leaves: names.pair(field(v, "leaves")?)?,
        }),
        "overlapping-simplexes" => Certificate::Rejected(RejectReason::OverlappingSimplexes {
            vertex: names.id(field(v, "vertex")?)?,
            first: names.id(field(v, "first")?)?,
            second: names.id(field(v, "second")?)?,
        }),
        "matching" => Certificate::Matching(MatchingCertificate {
            matching: Matching::from_pairs(names.pair_list(field(v, "matching")?)?),
            cover: optional(v, "cover").map(|c| names.set(c)).transpose()?,
        }),
        "caterpillar-wheel" => Certificate::CaterpillarWheel(CaterpillarWheel {
            cycle: names.ids(field(v, "cycle")?)?,
            legs: names.pair_list(field(v, "legs")?)?,
            gaps: numbers(field(v, "gaps")?)?,
            matching: optional(v, "matching").map(|m| names.pair_list(m).map(Matching::from_pairs)).transpose()?,
        }),
        "pluck" => {
            let kept = names.ids(field(v, "kept")?)?;
            let residual_graph = g.induced(&kept);
            let residual = optional(v, "residual")
                .map(|r| verdict_from_json(&residual_graph, r).map(Box::new))
                .transpose()?;
            let trace = PluckTrace { steps: names.pair_list(field(v, "steps")?)?, kept, residual: residual_graph };
            Certificate::Pluck { trace, residual }
        }
        "simplex-partition" => {
            let overlap = match optional(v, "overlap") {
                Some(o) => Some((names.id(field(o, "vertex")?)?, number(o, "first")?, number(o, "second")?)),
                None => None,
            };
            Certificate::SimplexPartition(SimplexCertificate { simplexes: names.set_list(field(v, "simplexes")?)?, overlap })
        }
        "successive-clique-cover" => {
            let check = field(v, "check")?;
            let check = match field(check, "status")?.as_str() {
                Some("valid") => SccCheck::Valid,
                Some("not-simplex") => SccCheck::NotSimplex { part: number(check, "part")? },
                Some("no-transversal") => {
                    SccCheck::NoTransversal { part: number(check, "part")?, vertex: names.id(field(check, "vertex")?)? }
                }
                _ => return Err(bad("unknown clique cover status")),
            };
            Certificate::SuccessiveCliqueCover(SccCertificate { parts: names.set_list(field(v, "parts")?)?, check })
        }
        "perfect-block-cover" => Certificate::BlockCover(BlockCoverCertificate {
            cover: optional(v, "cover").map(|c| names.set_list(c)).transpose()?,
        }),
        "clique-partition" => {
            let mut witnesses = vec![VertexSet::new(); g.order()];
            for w in array(field(v, "witnesses")?)? {
                witnesses[names.id(field(w, "vertex")?)?] = names.set(field(w, "set")?)?;
            }
            Certificate::CliquePartition(CliquePartition { cliques: names.set_list(field(v, "cliques")?)?, witnesses })
        }
        "swap" => Certificate::Swap { vertex: names.id(field(v, "vertex")?)?, pair: names.pair(field(v, "pair")?)? },
        "rotation" => {
            let orbits = array(field(v, "orbits")?)?
                .iter()
                .map(|o| Ok((names.set(field(o, "generator")?)?, number(o, "shifts")?)))
                .collect::<Result<_, DecodeError>>()?;
            Certificate::Rotation(RotationCertificate {
                n: number(v, "n")?,
                k: number(v, "k")?,
                alpha: number(v, "alpha")?,
                orbits,
                first_k_shifts_cover: boolean(v, "first_k_shifts_cover")?,
            })
        }
        "oracle" => {
            let mut per_vertex_max = vec![0; g.order()];
            let mut witness = vec![None; g.order()];
            for entry in array(field(v, "per_vertex")?)? {
                let x = names.id(field(entry, "vertex")?)?;
                per_vertex_max[x] = number(entry, "max")?;
                witness[x] = optional(entry, "witness").map(|w| names.set(w)).transpose()?;
            }
            Certificate::Oracle(OracleCertificate {
                alpha: number(v, "alpha")?,
                alpha_set: names.set(field(v, "alpha_set")?)?,
                per_vertex_max,
                witness,
            })
        }
        "components" => {
            let parts = array(field(v, "components")?)?
                .iter()
                .map(|c| {
                    let vertices = names.ids(field(c, "vertices")?)?;
                    let verdict = verdict_from_json(&g.induced(&vertices), field(c, "verdict")?)?;
                    Ok(ComponentVerdict { vertices, verdict })
                })
                .collect::<Result<_, DecodeError>>()?;
            Certificate::Components(parts)
        }
        other => return Err(bad(format!("unknown certificate kind `{other}`"))),
    };
    Ok(cert)
}
