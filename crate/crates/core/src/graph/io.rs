//! Graph file formats: Matrix Market coordinate files, plain edge-list text,
//! and a little-endian binary CSR cache.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use super::{CsrGraph, Directedness, EdgeList, GraphError, NodeId};

/// Magic prefix of the binary CSR cache.
pub const CACHE_MAGIC: [u8; 4] = *b"CSRG";
/// Current cache layout version.
pub const CACHE_VERSION: u8 = 1;

/// On-disk formats understood by [`load_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    MatrixMarket,
    EdgeListText,
    CsrCache,
}

impl std::str::FromStr for GraphFormat {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, GraphError> {
        match s {
            "mtx" | "matrix-market" => Ok(Self::MatrixMarket),
            "edgelist" | "el" | "txt" => Ok(Self::EdgeListText),
            "cache" | "bin" => Ok(Self::CsrCache),
            other => Err(GraphError::Format(format!("unknown graph format {other:?}"))),
        }
    }
}

/// Parses a Matrix Market coordinate file into an edge list.
///
/// The banner must declare a `matrix coordinate` object with a `pattern`,
/// `integer` or `real` field (values are ignored) and `general` or
/// `symmetric` symmetry. `symmetric` entries are expanded to both
/// directions; indices are converted from 1-based to 0-based; duplicates
/// and self-loops disappear during edge-list normalization.
pub fn load_matrix_market(path: &Path) -> Result<EdgeList, GraphError> {
    let mut reader = BufReader::new(File::open(path)?);
    let mut banner = String::new();
    let mut line_no = 0usize;
    line_no += read_line(&mut reader, &mut banner)?;
    parse_banner(&banner).and_then(|sym| {
        let symmetric = sym;
        let mut line = String::new();

        // Dimension line: first non-comment, non-blank line after the banner.
        let (rows, cols, nnz) = loop {
            line.clear();
            let read = read_line(&mut reader, &mut line)?;
            if read == 0 {
                return Err(GraphError::Format("missing dimension line".into()));
            }
            line_no += 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('%') {
                continue;
            }
            let mut it = trimmed.split_whitespace();
            let rows = parse_index(it.next(), line_no, "rows")?;
            let cols = parse_index(it.next(), line_no, "cols")?;
            let nnz = parse_index(it.next(), line_no, "nnz")?;
            break (rows, cols, nnz);
        };
        if rows != cols {
            return Err(GraphError::Unsupported(format!(
                "non-square matrix ({rows} x {cols}) is not a graph adjacency"
            )));
        }
        let n = rows as usize;

        let mut edges = Vec::with_capacity(if symmetric { 2 * nnz } else { nnz } as usize);
        let mut seen = 0u64;
        loop {
            line.clear();
            let read = read_line(&mut reader, &mut line)?;
            if read == 0 {
                break;
            }
            line_no += 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('%') {
                continue;
            }
            if seen == nnz {
                return Err(GraphError::Format(format!(
                    "more than the declared {nnz} entries"
                )));
            }
            let mut it = trimmed.split_whitespace();
            let i = parse_index(it.next(), line_no, "row index")?;
            let j = parse_index(it.next(), line_no, "column index")?;
            // Any trailing value tokens are ignored.
            if i < 1 || i > rows || j < 1 || j > cols {
                return Err(GraphError::Bounds {
                    id: if i < 1 || i > rows { i as i64 } else { j as i64 },
                    n,
                });
            }
            let (u, v) = ((i - 1) as NodeId, (j - 1) as NodeId);
            edges.push((u, v));
            if symmetric && u != v {
                edges.push((v, u));
            }
            seen += 1;
        }
        if seen != nnz {
            return Err(GraphError::Format(format!(
                "declared {nnz} entries but found {seen}"
            )));
        }
        EdgeList::new(
            n,
            edges,
            if symmetric {
                Directedness::UndirectedAsSymmetric
            } else {
                Directedness::Directed
            },
        )
    })
}

/// Returns `true` for symmetric symmetry, `false` for general.
fn parse_banner(banner: &str) -> Result<bool, GraphError> {
    let tokens: Vec<&str> = banner.trim().split_whitespace().collect();
    if tokens.len() != 5 || !tokens[0].eq_ignore_ascii_case("%%MatrixMarket") {
        return Err(GraphError::Format(
            "first line must be a %%MatrixMarket banner with 5 fields".into(),
        ));
    }
    if !tokens[1].eq_ignore_ascii_case("matrix") {
        return Err(GraphError::Format(format!(
            "unsupported object {:?}, expected matrix",
            tokens[1]
        )));
    }
    if !tokens[2].eq_ignore_ascii_case("coordinate") {
        return Err(GraphError::Unsupported(format!(
            "{:?} storage; only sparse coordinate files are supported",
            tokens[2]
        )));
    }
    match tokens[3].to_ascii_lowercase().as_str() {
        "pattern" | "integer" | "real" => {}
        other => {
            return Err(GraphError::Unsupported(format!(
                "field type {other:?}; expected pattern, integer or real"
            )))
        }
    }
    match tokens[4].to_ascii_lowercase().as_str() {
        "general" => Ok(false),
        "symmetric" => Ok(true),
        other => Err(GraphError::Unsupported(format!(
            "symmetry {other:?}; expected general or symmetric"
        ))),
    }
}

/// Parses whitespace-separated `u v` pairs, one edge per line. Lines
/// starting with `#` or `%` are comments. When `num_nodes` is absent the
/// node count is one past the largest id observed.
pub fn load_edge_list(path: &Path, num_nodes: Option<usize>) -> Result<EdgeList, GraphError> {
    let reader = BufReader::new(File::open(path)?);
    let mut edges = Vec::new();
    let mut max_id: i64 = -1;
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let mut it = trimmed.split_whitespace();
        let u = parse_node_id(it.next(), line_no, num_nodes)?;
        let v = parse_node_id(it.next(), line_no, num_nodes)?;
        max_id = max_id.max(u as i64).max(v as i64);
        edges.push((u, v));
    }
    let n = num_nodes.unwrap_or((max_id + 1) as usize);
    EdgeList::new(n, edges, Directedness::Directed)
}

fn parse_node_id(
    token: Option<&str>,
    line: usize,
    num_nodes: Option<usize>,
) -> Result<NodeId, GraphError> {
    let token = token.ok_or_else(|| GraphError::Parse {
        line,
        msg: "expected two node ids".into(),
    })?;
    let id: i64 = token.parse().map_err(|_| GraphError::Parse {
        line,
        msg: format!("non-integer token {token:?}"),
    })?;
    if id < 0 {
        return Err(GraphError::Bounds {
            id,
            n: num_nodes.unwrap_or(0),
        });
    }
    if let Some(n) = num_nodes {
        if id as usize >= n {
            return Err(GraphError::Bounds { id, n });
        }
    }
    if id > NodeId::MAX as i64 {
        return Err(GraphError::Bounds {
            id,
            n: num_nodes.unwrap_or(0),
        });
    }
    Ok(id as NodeId)
}

fn parse_index(token: Option<&str>, line: usize, what: &str) -> Result<u64, GraphError> {
    let token = token.ok_or_else(|| GraphError::Parse {
        line,
        msg: format!("missing {what}"),
    })?;
    token.parse().map_err(|_| GraphError::Parse {
        line,
        msg: format!("invalid {what} {token:?}"),
    })
}

fn read_line(reader: &mut impl BufRead, buf: &mut String) -> Result<usize, GraphError> {
    Ok(reader.read_line(buf)?)
}

/// Writes the binary CSR cache: magic, version byte, then n, m, the
/// `row_ptr` array as u64 and the `col` array as u32, all little-endian.
pub fn save_cache(csr: &CsrGraph, path: &Path) -> Result<(), GraphError> {
    let mut w = BufWriter::new(File::create(path)?);
    w.write_all(&CACHE_MAGIC)?;
    w.write_all(&[CACHE_VERSION])?;
    w.write_all(&(csr.node_count() as u64).to_le_bytes())?;
    w.write_all(&(csr.edge_count() as u64).to_le_bytes())?;
    for &p in csr.row_ptr() {
        w.write_all(&(p as u64).to_le_bytes())?;
    }
    for &c in csr.col() {
        w.write_all(&c.to_le_bytes())?;
    }
    w.flush()?;
    Ok(())
}

/// Reads a cache written by [`save_cache`], re-validating CSR invariants.
pub fn load_cache(path: &Path) -> Result<CsrGraph, GraphError> {
    let mut r = BufReader::new(File::open(path)?);
    let mut magic = [0u8; 4];
    r.read_exact(&mut magic)?;
    if magic != CACHE_MAGIC {
        return Err(GraphError::Format("not a CSR cache file".into()));
    }
    let mut version = [0u8; 1];
    r.read_exact(&mut version)?;
    if version[0] != CACHE_VERSION {
        return Err(GraphError::Unsupported(format!(
            "cache version {} (this build reads version {CACHE_VERSION})",
            version[0]
        )));
    }
    let n = read_u64(&mut r)? as usize;
    let m = read_u64(&mut r)? as usize;
    let mut row_ptr = Vec::with_capacity(n + 1);
    for _ in 0..=n {
        row_ptr.push(read_u64(&mut r)? as usize);
    }
    let mut col = Vec::with_capacity(m);
    let mut buf = [0u8; 4];
    for _ in 0..m {
        r.read_exact(&mut buf)?;
        col.push(NodeId::from_le_bytes(buf));
    }
    CsrGraph::from_parts(row_ptr, col)
}

fn read_u64(r: &mut impl Read) -> Result<u64, GraphError> {
    let mut buf = [0u8; 8];
    r.read_exact(&mut buf)?;
    Ok(u64::from_le_bytes(buf))
}

/// Detects the on-disk format: cache magic first, then the Matrix Market
/// banner, then the `.mtx` extension; anything else is edge-list text.
pub fn sniff_format(path: &Path) -> Result<GraphFormat, GraphError> {
    let mut head = [0u8; 16];
    let mut f = File::open(path)?;
    let len = f.read(&mut head)?;
    if len >= 5 && head[..4] == CACHE_MAGIC {
        return Ok(GraphFormat::CsrCache);
    }
    if head[..len].starts_with(b"%%MatrixMarket") {
        return Ok(GraphFormat::MatrixMarket);
    }
    if path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("mtx"))
    {
        return Ok(GraphFormat::MatrixMarket);
    }
    Ok(GraphFormat::EdgeListText)
}

/// Loads a graph in any supported format, sniffing when `format` is `None`.
pub fn load_graph(path: &Path, format: Option<GraphFormat>) -> Result<CsrGraph, GraphError> {
    let format = match format {
        Some(f) => f,
        None => sniff_format(path)?,
    };
    match format {
        GraphFormat::MatrixMarket => Ok(CsrGraph::from_edge_list(&load_matrix_market(path)?)),
        GraphFormat::EdgeListText => Ok(CsrGraph::from_edge_list(&load_edge_list(path, None)?)),
        GraphFormat::CsrCache => load_cache(path),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write as _;

    fn write_tmp(content: &str, suffix: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::Builder::new().suffix(suffix).tempfile().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    #[test]
    fn pattern_general_maps_to_zero_based() {
        let f = write_tmp(
            "%%MatrixMarket matrix coordinate pattern general\n3 3 2\n1 2\n2 3\n",
            ".mtx",
        );
        let el = load_matrix_market(f.path()).unwrap();
        assert_eq!(el.num_nodes(), 3);
        assert_eq!(el.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn symmetric_expands_both_directions() {
        let f = write_tmp(
            "%%MatrixMarket matrix coordinate pattern symmetric\n2 2 1\n2 1\n",
            ".mtx",
        );
        let el = load_matrix_market(f.path()).unwrap();
        assert_eq!(el.num_nodes(), 2);
        assert_eq!(el.edges(), &[(0, 1), (1, 0)]);
        assert_eq!(el.directedness(), Directedness::UndirectedAsSymmetric);
    }

    #[test]
    fn out_of_range_entry_is_bounds_error() {
        let f = write_tmp(
            "%%MatrixMarket matrix coordinate pattern general\n3 3 1\n4 1\n",
            ".mtx",
        );
        assert!(matches!(
            load_matrix_market(f.path()),
            Err(GraphError::Bounds { id: 4, .. })
        ));
    }

    #[test]
    fn malformed_banner_is_format_error() {
        let f = write_tmp("%%MatrixMkt matrix coordinate pattern general\n1 1 0\n", ".mtx");
        assert!(matches!(
            load_matrix_market(f.path()),
            Err(GraphError::Format(_))
        ));
    }

    #[test]
    fn dense_array_storage_is_unsupported() {
        let f = write_tmp("%%MatrixMarket matrix array real general\n2 2\n1.0\n", ".mtx");
        assert!(matches!(
            load_matrix_market(f.path()),
            Err(GraphError::Unsupported(_))
        ));
    }

    #[test]
    fn real_values_are_ignored_and_comments_skipped() {
        let f = write_tmp(
            "%%MatrixMarket matrix coordinate real general\n% a comment\n3 3 2\n1 2 0.5\n3 1 -2.0\n",
            ".mtx",
        );
        let el = load_matrix_market(f.path()).unwrap();
        assert_eq!(el.edges(), &[(0, 1), (2, 0)]);
    }

    #[test]
    fn entry_count_mismatch_is_format_error() {
        let f = write_tmp(
            "%%MatrixMarket matrix coordinate pattern general\n3 3 2\n1 2\n",
            ".mtx",
        );
        assert!(matches!(
            load_matrix_market(f.path()),
            Err(GraphError::Format(_))
        ));
    }

    #[test]
    fn edge_list_infers_node_count() {
        let f = write_tmp("# comment\n0 1\n1 2\n", ".txt");
        let el = load_edge_list(f.path(), None).unwrap();
        assert_eq!(el.num_nodes(), 3);
        assert_eq!(el.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn edge_list_drops_self_loops() {
        let f = write_tmp("0 0\n0 1\n", ".txt");
        let el = load_edge_list(f.path(), None).unwrap();
        assert_eq!(el.edges(), &[(0, 1)]);
    }

    #[test]
    fn edge_list_rejects_non_integer_tokens() {
        let f = write_tmp("a b\n", ".txt");
        assert!(matches!(
            load_edge_list(f.path(), None),
            Err(GraphError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn edge_list_rejects_negative_ids() {
        let f = write_tmp("0 -3\n", ".txt");
        assert!(matches!(
            load_edge_list(f.path(), None),
            Err(GraphError::Bounds { id: -3, .. })
        ));
    }

    #[test]
    fn cache_round_trip_is_identical() {
        let el = EdgeList::new(
            5,
            vec![(0, 3), (1, 2), (3, 0), (4, 1), (4, 2)],
            Directedness::Directed,
        )
        .unwrap();
        let g = CsrGraph::from_edge_list(&el);
        let f = tempfile::Builder::new().suffix(".bin").tempfile().unwrap();
        save_cache(&g, f.path()).unwrap();
        let loaded = load_cache(f.path()).unwrap();
        assert_eq!(g, loaded);
        assert_eq!(sniff_format(f.path()).unwrap(), GraphFormat::CsrCache);
    }

    #[test]
    fn cache_rejects_wrong_magic_and_version() {
        let f = write_tmp("not a cache at all", ".bin");
        assert!(matches!(load_cache(f.path()), Err(GraphError::Format(_))));

        let g = CsrGraph::from_edge_list(
            &EdgeList::new(2, vec![(0, 1)], Directedness::Directed).unwrap(),
        );
        let f2 = tempfile::Builder::new().suffix(".bin").tempfile().unwrap();
        save_cache(&g, f2.path()).unwrap();
        let mut bytes = std::fs::read(f2.path()).unwrap();
        bytes[4] = 99; // future version
        std::fs::write(f2.path(), bytes).unwrap();
        assert!(matches!(
            load_cache(f2.path()),
            Err(GraphError::Unsupported(_))
        ));
    }

    #[test]
    fn sniffing_prefers_banner_over_extension() {
        let f = write_tmp(
            "%%MatrixMarket matrix coordinate pattern general\n1 1 0\n",
            ".txt",
        );
        assert_eq!(sniff_format(f.path()).unwrap(), GraphFormat::MatrixMarket);
        let g = write_tmp("0 1\n", ".edges");
        assert_eq!(sniff_format(g.path()).unwrap(), GraphFormat::EdgeListText);
    }
}
