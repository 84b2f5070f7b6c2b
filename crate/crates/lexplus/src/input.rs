//! Parsing of command-line values: degree lists, ideals and facet files.

use lexplus_core::{parse_ideal, DegreeSequence, MonomialIdeal};

/// `a1,a2,...` as positive integers; errors name the offending index.
pub fn parse_degrees(text: &str) -> Result<Vec<u32>, String> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .enumerate()
        .map(|(i, t)| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| format!("--degs: entry {i} ({:?}) is not a number", t.trim()))
        })
        .collect()
}

/// Checks the list against `n` variables.
pub fn degree_sequence(degrees: &[u32], n: usize) -> Result<DegreeSequence, String> {
    DegreeSequence::with_powers(degrees.to_vec(), n).map_err(|e| format!("--degs: {e}"))
}

/// Parses an ideal in `n` variables, or in as many as it mentions (at
/// least `min_n`) when `n` is not given.
pub fn ideal(text: &str, n: Option<usize>, min_n: usize) -> lexplus_core::Result<MonomialIdeal> {
    match n {
        Some(n) => parse_ideal(text, Some(n)),
        None => {
            let found = parse_ideal(text, None)?.nvars();
            parse_ideal(text, Some(found.max(min_n)))
        }
    }
}

/// One facet per line, vertices separated by spaces or commas; braces and
/// `#` comments are ignored.
pub fn parse_facets(text: &str) -> Result<Vec<Vec<usize>>, String> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let cleaned: String = line
            .chars()
            .map(|c| if matches!(c, '{' | '}' | ',') { ' ' } else { c })
            .collect();
        if cleaned.trim().is_empty() {
            continue;
        }
        let facet = cleaned
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| format!("line {}: {t:?} is not a vertex", lineno + 1))
            })
            .collect::<Result<Vec<_>, _>>()?;
        out.push(facet);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees() {
        assert_eq!(parse_degrees("3, 3,4"), Ok(vec![3, 3, 4]));
        assert_eq!(parse_degrees(""), Ok(vec![]));
        let err = parse_degrees("3,x,4").unwrap_err();
        assert!(err.contains("entry 1"), "{err}");
        assert!(degree_sequence(&[3, 2], 2).unwrap_err().contains("index 1"));
    }

    #[test]
    fn facets() {
        let f = parse_facets("{1,3,4}\n2 3 4 # second\n\n").unwrap();
        assert_eq!(f, vec![vec![1, 3, 4], vec![2, 3, 4]]);
        assert!(parse_facets("1 a").unwrap_err().contains("line 1"));
    }

    #[test]
    fn ideals() {
        assert_eq!(ideal("x1*x2", None, 4).unwrap().nvars(), 4);
        assert_eq!(ideal("x1*x2", None, 0).unwrap().nvars(), 2);
        assert!(ideal("x3", Some(2), 0).is_err());
    }
}
