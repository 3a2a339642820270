//! Text formats for patterns and colorings, and the built-in pattern table.
//!
//! Pattern files: a header line `pattern <r> <k_hint>` followed by one
//! `<u> <v> <mult>` line per pair with positive multiplicity, vertices
//! 0-based.  Simple graphs use the same format with every multiplicity 1.
//!
//! Coloring files: a header line `colored <n> <k>` (with a trailing `nested`
//! marker when the color classes form an inclusion chain) followed by one
//! `color <i>` block per color listing its `<u> <v>` edges.
//!
//! Both readers skip blank lines and `#` comments.

use std::collections::BTreeSet;

use crate::colorings::{ColoredMultigraph, NestedColoredMultigraph};
use crate::error::{Error, Result};
use crate::graphs::SimpleGraph;
use crate::pattern::PatternMultigraph;

// ---------------------------------------------------------------------------
// Built-in patterns
// ---------------------------------------------------------------------------

/// The pattern aliases accepted wherever a pattern file path is expected.
pub const BUILTIN_PATTERNS: [&str; 4] = ["k3", "k4", "k5", "c5"];

/// A named built-in pattern: complete graphs `k3`, `k4`, `k5` and the
/// five-cycle `c5`.  Names are case-insensitive.
pub fn builtin_pattern(name: &str) -> Option<PatternMultigraph> {
    match name.to_ascii_lowercase().as_str() {
        "k3" => PatternMultigraph::complete(3).ok(),
        "k4" => PatternMultigraph::complete(4).ok(),
        "k5" => PatternMultigraph::complete(5).ok(),
        "c5" => PatternMultigraph::cycle(5).ok(),
        _ => None,
    }
}

/// Resolves a pattern argument: a built-in alias, or the path of a pattern
/// file.
pub fn load_pattern(arg: &str) -> Result<PatternMultigraph> {
    if let Some(p) = builtin_pattern(arg) {
        return Ok(p);
    }
    let text = std::fs::read_to_string(arg).map_err(|e| {
        Error::invalid(format!(
            "'{arg}' is not a built-in pattern ({}) and reading it as a file failed: {e}",
            BUILTIN_PATTERNS.join(", ")
        ))
    })?;
    Ok(parse_pattern(&text)?.0)
}

// ---------------------------------------------------------------------------
// Pattern format
// ---------------------------------------------------------------------------

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

fn parse_num<T: std::str::FromStr>(token: &str, lineno: usize, what: &str) -> Result<T> {
    token
        .parse()
        .map_err(|_| Error::parse(format!("line {lineno}: cannot read {what} from '{token}'")))
}

/// Parses the pattern format; returns the pattern and the header's color
/// hint.
pub fn parse_pattern(text: &str) -> Result<(PatternMultigraph, u32)> {
    let mut lines = content_lines(text);
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::parse("empty pattern file"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 3 || tokens[0] != "pattern" {
        return Err(Error::parse(format!(
            "line {lineno}: expected header 'pattern <r> <k_hint>', got '{header}'"
        )));
    }
    let r: usize = parse_num(tokens[1], lineno, "the vertex count")?;
    let k_hint: u32 = parse_num(tokens[2], lineno, "the color hint")?;

    let mut triples = Vec::new();
    for (lineno, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 3 {
            return Err(Error::parse(format!(
                "line {lineno}: expected '<u> <v> <mult>', got '{line}'"
            )));
        }
        let u: usize = parse_num(tokens[0], lineno, "a vertex")?;
        let v: usize = parse_num(tokens[1], lineno, "a vertex")?;
        let m: u32 = parse_num(tokens[2], lineno, "a multiplicity")?;
        triples.push((u, v, m));
    }
    Ok((PatternMultigraph::new(r, &triples)?, k_hint))
}

/// Renders a pattern in the text format, one line per support pair.
pub fn format_pattern(pattern: &PatternMultigraph, k_hint: u32) -> String {
    let mut out = format!("pattern {} {}\n", pattern.r(), k_hint);
    for (u, v, m) in pattern.support_pairs() {
        out.push_str(&format!("{u} {v} {m}\n"));
    }
    out
}

/// Parses the pattern format as a bare multiplicity map, which may have
/// isolated vertices.  The header's hint becomes the multiplicity cap unless
/// `cap` overrides it; either way every multiplicity must fit.
pub fn parse_multigraph(text: &str, cap: Option<u32>) -> Result<crate::graphs::MultiGraph> {
    let mut lines = content_lines(text);
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::parse("empty multigraph file"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 3 || tokens[0] != "pattern" {
        return Err(Error::parse(format!(
            "line {lineno}: expected header 'pattern <n> <k>', got '{header}'"
        )));
    }
    let n: usize = parse_num(tokens[1], lineno, "the vertex count")?;
    let hint: u32 = parse_num(tokens[2], lineno, "the color count")?;
    let mut triples = Vec::new();
    for (lineno, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 3 {
            return Err(Error::parse(format!(
                "line {lineno}: expected '<u> <v> <mult>', got '{line}'"
            )));
        }
        triples.push((
            parse_num(tokens[0], lineno, "a vertex")?,
            parse_num(tokens[1], lineno, "a vertex")?,
            parse_num(tokens[2], lineno, "a multiplicity")?,
        ));
    }
    crate::graphs::MultiGraph::from_pairs(n, cap.unwrap_or(hint), &triples)
}

/// Reads a pattern file as a simple graph: every multiplicity must be 1.
pub fn pattern_as_simple(pattern: &PatternMultigraph) -> Result<SimpleGraph> {
    if !pattern.is_simple() {
        return Err(Error::invalid(
            "this operation needs a simple graph, but the file has a multiplicity above 1",
        ));
    }
    SimpleGraph::from_edges(
        pattern.r(),
        pattern.support_pairs().into_iter().map(|(u, v, _)| (u, v)),
    )
}

// ---------------------------------------------------------------------------
// Coloring format
// ---------------------------------------------------------------------------

/// One parsed coloring file: the coloring and whether the header carried the
/// `nested` marker.
#[derive(Clone, Debug)]
pub struct ParsedColoring {
    pub colored: ColoredMultigraph,
    pub nested: bool,
}

/// Parses the coloring format.  Color blocks may appear in any order; colors
/// without a block are empty.
pub fn parse_colored(text: &str) -> Result<ParsedColoring> {
    let mut lines = content_lines(text);
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::parse("empty coloring file"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let nested = tokens.len() == 4 && tokens[3] == "nested";
    if tokens[0] != "colored" || (tokens.len() != 3 && !nested) {
        return Err(Error::parse(format!(
            "line {lineno}: expected header 'colored <n> <k> [nested]', got '{header}'"
        )));
    }
    let n: usize = parse_num(tokens[1], lineno, "the vertex count")?;
    let k: usize = parse_num(tokens[2], lineno, "the color count")?;

    let mut edge_sets: Vec<BTreeSet<(usize, usize)>> = vec![BTreeSet::new(); k];
    let mut current: Option<usize> = None;
    for (lineno, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            ["color", idx] => {
                let i: usize = parse_num(idx, lineno, "a color index")?;
                if i >= k {
                    return Err(Error::parse(format!(
                        "line {lineno}: color {i} out of range for k = {k}"
                    )));
                }
                current = Some(i);
            }
            [a, b] => {
                let Some(c) = current else {
                    return Err(Error::parse(format!(
                        "line {lineno}: edge before any 'color <i>' block"
                    )));
                };
                let u: usize = parse_num(a, lineno, "a vertex")?;
                let v: usize = parse_num(b, lineno, "a vertex")?;
                if u == v || u >= n || v >= n {
                    return Err(Error::parse(format!(
                        "line {lineno}: edge ({u}, {v}) out of range for n = {n}"
                    )));
                }
                edge_sets[c].insert(if u < v { (u, v) } else { (v, u) });
            }
            _ => {
                return Err(Error::parse(format!(
                    "line {lineno}: expected 'color <i>' or '<u> <v>', got '{line}'"
                )));
            }
        }
    }
    let colors = edge_sets
        .into_iter()
        .map(|set| SimpleGraph::from_edges(n, set))
        .collect::<Result<Vec<_>>>()?;
    Ok(ParsedColoring {
        colored: ColoredMultigraph::new(n, colors)?,
        nested,
    })
}

/// Renders a coloring in the text format; every color gets a block, empty
/// ones included, so files round-trip exactly.
pub fn format_colored(g: &ColoredMultigraph, nested: bool) -> String {
    let mut out = format!(
        "colored {} {}{}\n",
        g.n(),
        g.k(),
        if nested { " nested" } else { "" }
    );
    for (i, color) in g.colors().iter().enumerate() {
        out.push_str(&format!("color {i}\n"));
        for (u, v) in color.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
    }
    out
}

/// Renders a nested coloring with its marker, colors listed along the chain
/// so the blocks appear largest first.
pub fn format_nested(g: &NestedColoredMultigraph) -> String {
    format_colored(g.colored(), true)
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorings::nest;

    #[test]
    fn builtin_table() {
        for name in BUILTIN_PATTERNS {
            assert!(builtin_pattern(name).is_some(), "missing alias {name}");
        }
        assert_eq!(builtin_pattern("k3").unwrap().h(), 3);
        assert_eq!(builtin_pattern("K4").unwrap().h(), 6, "case-insensitive");
        assert_eq!(builtin_pattern("c5").unwrap().r(), 5);
        assert!(builtin_pattern("k9").is_none());
    }

    #[test]
    fn pattern_round_trip() {
        let p = PatternMultigraph::new(3, &[(0, 1, 3), (0, 2, 1), (1, 2, 2)]).unwrap();
        let text = format_pattern(&p, 7);
        let (back, hint) = parse_pattern(&text).unwrap();
        assert_eq!(back, p);
        assert_eq!(hint, 7);
    }

    #[test]
    fn pattern_parsing_is_lenient_about_comments() {
        let text = "# triangle with a doubled side\npattern 3 4\n\n0 1 2  # the doubled side\n0 2 1\n1 2 1\n";
        let (p, hint) = parse_pattern(text).unwrap();
        assert_eq!(p.multiplicity(0, 1), 2);
        assert_eq!(p.h(), 4);
        assert_eq!(hint, 4);
    }

    #[test]
    fn pattern_parse_errors() {
        assert!(parse_pattern("").is_err());
        assert!(parse_pattern("graph 3 4\n0 1 1\n").is_err());
        assert!(parse_pattern("pattern 3\n0 1 1\n").is_err());
        assert!(parse_pattern("pattern 3 4\n0 1\n").is_err());
        assert!(parse_pattern("pattern 3 4\n0 3 1\n").is_err(), "vertex range");
        assert!(parse_pattern("pattern 3 4\n0 x 1\n").is_err());
    }

    #[test]
    fn colored_round_trip_with_nesting() {
        let text = "colored 4 3\ncolor 0\n0 1\n1 2\n2 3\ncolor 1\n0 1\ncolor 2\n";
        let parsed = parse_colored(text).unwrap();
        assert!(!parsed.nested);
        assert_eq!(parsed.colored.k(), 3);
        assert_eq!(parsed.colored.total_edges(), 4);
        assert_eq!(parsed.colored.multiplicity_profile().multiplicity(0, 1), 2);

        let nested = nest(&parsed.colored);
        let text = format_nested(&nested);
        let back = parse_colored(&text).unwrap();
        assert!(back.nested);
        assert_eq!(
            back.colored.multiplicity_profile().weights(),
            parsed.colored.multiplicity_profile().weights(),
            "nesting preserves the multiplicity map"
        );
    }

    #[test]
    fn colored_blocks_in_any_order_and_duplicates_collapse() {
        let text = "colored 3 2\ncolor 1\n0 2\ncolor 0\n0 1\n0 1\n";
        let parsed = parse_colored(text).unwrap();
        assert_eq!(parsed.colored.color_sizes(), vec![1, 1]);
    }

    #[test]
    fn colored_parse_errors() {
        assert!(parse_colored("").is_err());
        assert!(parse_colored("colored 3\ncolor 0\n").is_err());
        assert!(parse_colored("colored 3 2\n0 1\n").is_err(), "edge before block");
        assert!(parse_colored("colored 3 2\ncolor 5\n").is_err(), "color range");
        assert!(parse_colored("colored 3 2\ncolor 0\n0 3\n").is_err(), "vertex range");
        assert!(parse_colored("colored 3 2\ncolor 0\n1 1\n").is_err(), "loop");
    }

    #[test]
    fn simple_conversion_rejects_multiplicities() {
        let (p, _) = parse_pattern("pattern 3 1\n0 1 1\n1 2 1\n").unwrap();
        let g = pattern_as_simple(&p).unwrap();
        assert_eq!(g.edge_count(), 2);
        let (p, _) = parse_pattern("pattern 2 2\n0 1 2\n").unwrap();
        assert!(pattern_as_simple(&p).is_err());
    }

    #[test]
    fn multigraph_reader_allows_isolated_vertices_and_respects_caps() {
        let text = "pattern 4 5\n0 1 3\n";
        let g = parse_multigraph(text, None).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.k_cap(), 5);
        assert_eq!(g.multiplicity(0, 1), 3);
        let g = parse_multigraph(text, Some(3)).unwrap();
        assert_eq!(g.k_cap(), 3);
        assert!(parse_multigraph(text, Some(2)).is_err(), "mult above cap");
    }

    #[test]
    fn load_pattern_resolves_aliases_and_files() {
        assert_eq!(load_pattern("k3").unwrap().h(), 3);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("p.txt");
        std::fs::write(&path, "pattern 3 4\n0 1 2\n0 2 1\n1 2 1\n").unwrap();
        let p = load_pattern(path.to_str().unwrap()).unwrap();
        assert_eq!(p.h(), 4);
        assert!(load_pattern("nosuchfile.txt").is_err());
    }
}
