//! Text formats: digraph6, graph6, a plain edge list, and JSON reports.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::Value;

use crate::digraph::{Digraph, UndirectedGraph};
use crate::error::{Error, Result};
use crate::spectral::NutReport;

/// Version tag written into every JSON record.
pub const REPORT_SCHEMA: &str = "nutkernel.report/1";

const BIAS: u8 = 63;
const MAX_SHORT: usize = 62;
const MAX_MEDIUM: usize = 258_047;
const MAX_LONG: usize = (1 << 36) - 1;

fn encode_size(n: usize, out: &mut String) {
    if n <= MAX_SHORT {
        out.push((n as u8 + BIAS) as char);
    } else if n <= MAX_MEDIUM {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + BIAS) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + BIAS) as char);
        }
    }
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let sextet = |b: u8| -> Result<usize> {
        if (BIAS..=BIAS + 63).contains(&b) {
            Ok((b - BIAS) as usize)
        } else {
            Err(Error::MalformedHeader(format!("byte {b} outside the printable range")))
        }
    };
    let take = |rest: &[u8], k: usize| -> Result<usize> {
        if rest.len() < k {
            return Err(Error::MalformedHeader("size field cut short".into()));
        }
        rest[..k].iter().try_fold(0usize, |acc, &b| Ok(acc << 6 | sextet(b)?))
    };
    match bytes {
        [] => Err(Error::MalformedHeader("empty input".into())),
        [b'~', b'~', rest @ ..] => Ok((take(rest, 6)?, &rest[6..])),
        [b'~', rest @ ..] => Ok((take(rest, 3)?, &rest[3..])),
        [b, rest @ ..] => Ok((sextet(*b)?, rest)),
    }
}

fn pack_bits(bits: impl Iterator<Item = bool>, out: &mut String) {
    let mut acc = 0u8;
    let mut filled = 0;
    for b in bits {
        acc = acc << 1 | b as u8;
        filled += 1;
        if filled == 6 {
            out.push((acc + BIAS) as char);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + BIAS) as char);
    }
}

fn unpack_bits(payload: &[u8], count: usize) -> Result<Vec<bool>> {
    let needed = count.div_ceil(6);
    if payload.len() < needed {
        return Err(Error::TruncatedPayload(format!(
            "expected {needed} data bytes, found {}",
            payload.len()
        )));
    }
    if payload.len() > needed {
        return Err(Error::MalformedHeader(format!(
            "expected {needed} data bytes, found {}",
            payload.len()
        )));
    }
    let mut bits = Vec::with_capacity(needed * 6);
    for &b in payload {
        if !(BIAS..=BIAS + 63).contains(&b) {
            return Err(Error::MalformedHeader(format!("byte {b} outside the printable range")));
        }
        let v = b - BIAS;
        for k in (0..6).rev() {
            bits.push(v >> k & 1 == 1);
        }
    }
    bits.truncate(count);
    Ok(bits)
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_LONG {
        Err(Error::MalformedHeader(format!("order {n} too large")))
    } else {
        Ok(())
    }
}

/// digraph6 encoding: `&`, the order, then the `n × n` adjacency bits row by row.
pub fn emit_digraph6(g: &Digraph) -> String {
    let n = g.order();
    let mut s = String::from("&");
    encode_size(n, &mut s);
    pack_bits(
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| g.has_arc(i, j)),
        &mut s,
    );
    s
}

/// Parses one digraph6 string; surrounding whitespace is ignored.
pub fn parse_digraph6(s: &str) -> Result<Digraph> {
    let bytes = s.trim().as_bytes();
    let Some(rest) = bytes.strip_prefix(b"&") else {
        return Err(Error::MalformedHeader("digraph6 strings start with '&'".into()));
    };
    let (n, payload) = decode_size(rest)?;
    check_order(n)?;
    let bits = unpack_bits(payload, n * n)?;
    let mut arcs = Vec::new();
    for (k, &b) in bits.iter().enumerate() {
        if b {
            let (i, j) = (k / n, k % n);
            if i == j {
                return Err(Error::LoopRejected(i));
            }
            arcs.push((i, j));
        }
    }
    Digraph::from_arcs(n, &arcs)
}

/// graph6 encoding: the order, then the upper triangle column by column.
pub fn emit_graph6(g: &UndirectedGraph) -> String {
    let n = g.order();
    let mut s = String::new();
    encode_size(n, &mut s);
    pack_bits(
        (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).map(|(i, j)| g.has_edge(i, j)),
        &mut s,
    );
    s
}

/// Parses one graph6 string; an optional `>>graph6<<` header is accepted.
pub fn parse_graph6(s: &str) -> Result<UndirectedGraph> {
    let t = s.trim();
    let t = t.strip_prefix(">>graph6<<").unwrap_or(t);
    let bytes = t.as_bytes();
    if bytes.first() == Some(&b'&') || bytes.first() == Some(&b':') {
        return Err(Error::MalformedHeader("not a graph6 string".into()));
    }
    let (n, payload) = decode_size(bytes)?;
    check_order(n)?;
    let bits = unpack_bits(payload, n * n.saturating_sub(1) / 2)?;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    UndirectedGraph::from_edges(n, &edges)
}

/// Parses an edge list: a header `n m`, then `m` arcs `u v`. `#` starts a
/// comment that runs to the end of the line.
pub fn parse_edge_list(text: &str) -> Result<Digraph> {
    let mut tokens = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(str::split_whitespace);
    let mut header = |what: &str| -> Result<usize> {
        tokens
            .next()
            .ok_or_else(|| Error::MalformedHeader(format!("missing {what}")))?
            .parse()
            .map_err(|_| Error::MalformedHeader(format!("{what} is not a count")))
    };
    let n = header("vertex count")?;
    let m = header("arc count")?;
    let rest: Vec<&str> = tokens.collect();
    if rest.len() < 2 * m {
        return Err(Error::TruncatedPayload(format!(
            "expected {m} arcs, found {} endpoints",
            rest.len()
        )));
    }
    if rest.len() > 2 * m {
        return Err(Error::MalformedHeader(format!(
            "header announces {m} arcs but more follow"
        )));
    }
    let mut arcs = Vec::with_capacity(m);
    for pair in rest.chunks(2) {
        let end = |t: &str| -> Result<usize> {
            t.parse()
                .map_err(|_| Error::MalformedHeader(format!("endpoint {t:?} is not an index")))
        };
        arcs.push((end(pair[0])?, end(pair[1])?));
    }
    Digraph::from_arcs(n, &arcs)
}

/// Writes the edge-list format read by [`parse_edge_list`].
pub fn emit_edge_list(g: &Digraph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.arc_count());
    for (u, v) in g.arcs() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Reads any supported single-digraph text: digraph6, graph6 (as a
/// symmetric digraph) or an edge list.
pub fn parse_any(text: &str) -> Result<Digraph> {
    let t = text.trim();
    if t.starts_with('&') {
        parse_digraph6(t)
    } else if t.starts_with(">>graph6<<") || (!t.contains(char::is_whitespace) && !t.is_empty()
        && !t.bytes().all(|b| b.is_ascii_digit()))
    {
        parse_graph6(t).map(|g| Digraph::symmetric(&g))
    } else {
        parse_edge_list(t)
    }
}

/// JSON record of one classified digraph.
#[derive(Clone, Debug, Serialize)]
pub struct ReportRecord {
    pub schema: &'static str,
    /// Canonical digraph6 when `id_canonical`, else the input digraph6.
    pub id: String,
    pub id_canonical: bool,
    pub digraph6: String,
    pub order: usize,
    pub arcs: usize,
    pub nullity: usize,
    pub intersection_dim: usize,
    pub is_dextro_nut: bool,
    pub is_laevo_nut: bool,
    pub is_bi_nut: bool,
    pub is_ambi_nut: bool,
    pub is_inter_nut: bool,
    pub is_dextro_core: bool,
    pub is_laevo_core: bool,
    pub is_bi_core: bool,
    pub is_ambi_core: bool,
    pub is_inter_core: bool,
    pub ker_witness: Option<Vec<Value>>,
    pub coker_witness: Option<Vec<Value>>,
    pub inter_witness: Option<Vec<Value>>,
    pub provenance: String,
}

fn int_value(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(x.to_string()),
    }
}

/// Integer vector as JSON numbers, falling back to strings beyond 64 bits.
pub fn witness_json(w: &[BigInt]) -> Vec<Value> {
    w.iter().map(int_value).collect()
}

impl ReportRecord {
    /// Record keyed by the canonical digraph6, or by the plain digraph6
    /// beyond the order limit of canonical labelling.
    pub fn new(g: &Digraph, report: &NutReport, provenance: impl Into<String>) -> Self {
        let w = |x: &Option<Vec<BigInt>>| x.as_deref().map(witness_json);
        let plain = emit_digraph6(g);
        let canonical = crate::enumerate::canonical_digraph(g).ok();
        ReportRecord {
            schema: REPORT_SCHEMA,
            id_canonical: canonical.is_some(),
            id: canonical.unwrap_or_else(|| plain.clone()),
            digraph6: plain,
            order: report.order,
            arcs: g.arc_count(),
            nullity: report.nullity,
            intersection_dim: report.intersection_dim,
            is_dextro_nut: report.is_dextro_nut,
            is_laevo_nut: report.is_laevo_nut,
            is_bi_nut: report.is_bi_nut,
            is_ambi_nut: report.is_ambi_nut,
            is_inter_nut: report.is_inter_nut,
            is_dextro_core: report.is_dextro_core,
            is_laevo_core: report.is_laevo_core,
            is_bi_core: report.is_bi_core,
            is_ambi_core: report.is_ambi_core,
            is_inter_core: report.is_inter_core,
            ker_witness: w(&report.ker_witness),
            coker_witness: w(&report.coker_witness),
            inter_witness: w(&report.inter_witness),
            provenance: provenance.into(),
        }
    }
}

/// One-line JSON for a classified digraph.
pub fn emit_report(g: &Digraph, report: &NutReport, provenance: &str) -> String {
    let rec = ReportRecord::new(g, report, provenance);
    serde_json::to_string(&rec).expect("report records serialise")
}
