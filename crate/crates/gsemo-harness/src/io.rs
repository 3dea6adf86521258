//! Instance file parsers. All formats are line-oriented plain text; errors
//! carry the 1-based line number of the offending line.

use std::fs;
use std::path::Path;

use gsemo_core::objectives::{
    CoverageInstance, CutFunction, FacilityLocationInstance, RegressionInstance, WeightedGraph,
};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}:{line}: {message}")]
    Malformed {
        path: String,
        line: usize,
        message: String,
    },
}

fn read(path: &Path) -> Result<String, ParseError> {
    fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn bad(path: &Path, line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Malformed {
        path: path.display().to_string(),
        line,
        message: message.into(),
    }
}

/// Non-empty lines with their 1-based line numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn fields<T: std::str::FromStr>(
    path: &Path,
    line_no: usize,
    line: &str,
    what: &str,
) -> Result<Vec<T>, ParseError> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<T>()
                .map_err(|_| bad(path, line_no, format!("invalid {what}: {tok:?}")))
        })
        .collect()
}

/// Graph file: line 1 `n m`; then `m` lines `u v w` with 0-indexed endpoints.
pub fn parse_graph(path: &Path) -> Result<CutFunction, ParseError> {
    let text = read(path)?;
    let mut it = lines(&text);
    let (hline, header) = it
        .next()
        .ok_or_else(|| bad(path, 1, "empty graph file; expected header \"n m\""))?;
    let head: Vec<usize> = fields(path, hline, header, "header integer")?;
    let [n, m] = head[..] else {
        return Err(bad(path, hline, "header must be exactly \"n m\""));
    };
    if n == 0 {
        return Err(bad(path, hline, "graph must have at least one vertex"));
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (lno, line) = it
            .next()
            .ok_or_else(|| bad(path, hline, format!("expected {m} edge lines")))?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [u, v, w] = toks[..] else {
            return Err(bad(path, lno, "edge line must be \"u v w\""));
        };
        let u: usize = u
            .parse()
            .map_err(|_| bad(path, lno, format!("invalid vertex index: {u:?}")))?;
        let v: usize = v
            .parse()
            .map_err(|_| bad(path, lno, format!("invalid vertex index: {v:?}")))?;
        let w: f64 = w
            .parse()
            .map_err(|_| bad(path, lno, format!("invalid edge weight: {w:?}")))?;
        edges.push(((u, v, w), lno));
    }
    if let Some((lno, _)) = it.next() {
        return Err(bad(path, lno, "trailing content after the last edge"));
    }
    // Validate edge by edge so the error can name the offending line.
    let mut accepted: Vec<(usize, usize, f64)> = Vec::with_capacity(m);
    for (edge, lno) in edges {
        accepted.push(edge);
        WeightedGraph::new(n, &accepted).map_err(|e| bad(path, lno, e.to_string()))?;
    }
    Ok(CutFunction::new(WeightedGraph::new(n, &accepted).unwrap()))
}

/// Coverage file: line 1 `n m`; then `n` lines `c i1 … ic`; then `m` weights.
pub fn parse_coverage(path: &Path) -> Result<CoverageInstance, ParseError> {
    let text = read(path)?;
    let mut it = lines(&text);
    let (hline, header) = it
        .next()
        .ok_or_else(|| bad(path, 1, "empty coverage file; expected header \"n m\""))?;
    let head: Vec<usize> = fields(path, hline, header, "header integer")?;
    let [n, m] = head[..] else {
        return Err(bad(path, hline, "header must be exactly \"n m\""));
    };
    let mut covered_by = Vec::with_capacity(n);
    for _ in 0..n {
        let (lno, line) = it
            .next()
            .ok_or_else(|| bad(path, hline, format!("expected {n} element lines")))?;
        let nums: Vec<u32> = fields(path, lno, line, "item index")?;
        let Some((&c, items)) = nums.split_first() else {
            return Err(bad(path, lno, "element line must start with a count"));
        };
        if items.len() != c as usize {
            return Err(bad(
                path,
                lno,
                format!("count says {c} items but line lists {}", items.len()),
            ));
        }
        covered_by.push(items.to_vec());
    }
    let (wline, wtext) = it
        .next()
        .ok_or_else(|| bad(path, hline, "expected a final line of item weights"))?;
    let weights: Vec<f64> = fields(path, wline, wtext, "weight")?;
    if weights.len() != m {
        return Err(bad(
            path,
            wline,
            format!("expected {m} weights, got {}", weights.len()),
        ));
    }
    if let Some((lno, _)) = it.next() {
        return Err(bad(path, lno, "trailing content after the weight line"));
    }
    CoverageInstance::new(n, m, covered_by, weights).map_err(|e| bad(path, wline, e.to_string()))
}

/// Facility location file: line 1 `customers facilities`; benefit matrix
/// rows; final line of facility costs.
pub fn parse_facility(path: &Path) -> Result<FacilityLocationInstance, ParseError> {
    let text = read(path)?;
    let mut it = lines(&text);
    let (hline, header) = it.next().ok_or_else(|| {
        bad(path, 1, "empty facility file; expected header \"customers facilities\"")
    })?;
    let head: Vec<usize> = fields(path, hline, header, "header integer")?;
    let [customers, facilities] = head[..] else {
        return Err(bad(path, hline, "header must be exactly \"customers facilities\""));
    };
    let mut benefits = Vec::with_capacity(customers);
    for _ in 0..customers {
        let (lno, line) = it
            .next()
            .ok_or_else(|| bad(path, hline, format!("expected {customers} benefit rows")))?;
        let row: Vec<f64> = fields(path, lno, line, "benefit")?;
        if row.len() != facilities {
            return Err(bad(
                path,
                lno,
                format!("expected {facilities} benefits, got {}", row.len()),
            ));
        }
        benefits.push(row);
    }
    let (cline, ctext) = it
        .next()
        .ok_or_else(|| bad(path, hline, "expected a final line of facility costs"))?;
    let costs: Vec<f64> = fields(path, cline, ctext, "cost")?;
    if costs.len() != facilities {
        return Err(bad(
            path,
            cline,
            format!("expected {facilities} costs, got {}", costs.len()),
        ));
    }
    if let Some((lno, _)) = it.next() {
        return Err(bad(path, lno, "trailing content after the cost line"));
    }
    FacilityLocationInstance::new(benefits, costs).map_err(|e| bad(path, cline, e.to_string()))
}

/// Regression file: comma-separated rows, optional header line; the last
/// column is the target, every other column a candidate variable.
pub fn parse_regression(path: &Path, has_header: bool) -> Result<RegressionInstance, ParseError> {
    let text = read(path)?;
    let mut rows: Vec<(usize, Vec<f64>)> = Vec::new();
    let mut width = None;
    for (lno, line) in lines(&text) {
        if has_header && rows.is_empty() && width.is_none() {
            width = Some(line.split(',').count());
            continue;
        }
        let vals: Vec<f64> = line
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<f64>()
                    .map_err(|_| bad(path, lno, format!("invalid number: {:?}", tok.trim())))
            })
            .collect::<Result<_, _>>()?;
        match width {
            Some(w) if vals.len() != w => {
                return Err(bad(path, lno, format!("expected {w} columns, got {}", vals.len())));
            }
            None => width = Some(vals.len()),
            _ => {}
        }
        rows.push((lno, vals));
    }
    let Some(w) = width else {
        return Err(bad(path, 1, "empty regression file"));
    };
    if w < 2 {
        return Err(bad(path, rows.first().map_or(1, |r| r.0), "need at least one feature column and a target"));
    }
    let cols = w - 1;
    let mut columns = vec![Vec::with_capacity(rows.len()); cols];
    let mut target = Vec::with_capacity(rows.len());
    let last_line = rows.last().map_or(1, |r| r.0);
    for (_, vals) in rows {
        for (c, &v) in vals[..cols].iter().enumerate() {
            columns[c].push(v);
        }
        target.push(vals[cols]);
    }
    RegressionInstance::new(columns, target).map_err(|e| bad(path, last_line, e.to_string()))
}
