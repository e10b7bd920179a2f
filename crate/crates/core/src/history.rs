//! Dated draw histories and their CSV form.
//!
//! One draw per line: an ISO-8601 date followed by the drawn numbers,
//! comma separated. Lines starting with `#` and blank lines are ignored. The
//! first data line is treated as a header when its second field is not a
//! number. Numbers may appear in any order; they are sorted on ingestion.

use std::fmt;
use std::io::BufRead;

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use crate::config::LotteryConfig;
use crate::error::Result;
use crate::gaps::validate_draw;
use crate::oracle::adjacent_pairs;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Draw {
    pub date: NaiveDate,
    numbers: Vec<u32>,
}

impl Draw {
    /// Sorts `numbers` and validates them against `config`.
    pub fn new(config: LotteryConfig, date: NaiveDate, mut numbers: Vec<u32>) -> Result<Self> {
        numbers.sort_unstable();
        validate_draw(config, &numbers)?;
        Ok(Draw { date, numbers })
    }

    pub fn numbers(&self) -> &[u32] {
        &self.numbers
    }
}

/// Number of `i` with `numbers[i + 1] == numbers[i] + 1`.
pub fn adjacent_pair_count(draw: &Draw) -> usize {
    adjacent_pairs(&draw.numbers)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrawHistory {
    pub config: LotteryConfig,
    pub draws: Vec<Draw>,
}

impl DrawHistory {
    pub fn new(config: LotteryConfig) -> Self {
        DrawHistory {
            config,
            draws: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.draws.len()
    }

    pub fn is_empty(&self) -> bool {
        self.draws.is_empty()
    }
}

/// Observed draw counts per adjacent-pair category `0..draw_size`.
pub fn classify_history(history: &DrawHistory) -> Vec<u64> {
    let mut counts = vec![0u64; history.config.category_count()];
    for draw in &history.draws {
        counts[adjacent_pair_count(draw)] += 1;
    }
    counts
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagnosticKind {
    MalformedDate,
    FieldCount,
    NotInteger,
    Duplicate,
    OutOfRange,
    Io,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineDiagnostic {
    /// 1-based line number.
    pub line: usize,
    pub kind: DiagnosticKind,
    pub message: String,
}

impl fmt::Display for LineDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

/// Every problem found in an input, in line order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub diagnostics: Vec<LineDiagnostic>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} invalid line(s)", self.diagnostics.len())?;
        for d in &self.diagnostics {
            write!(f, "\n  {d}")?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

fn parse_line(
    config: LotteryConfig,
    line: &str,
) -> std::result::Result<Draw, (DiagnosticKind, String)> {
    let fields: Vec<&str> = line.split(',').map(str::trim).collect();
    let expected = config.draw_size() as usize + 1;
    if fields.len() != expected {
        return Err((
            DiagnosticKind::FieldCount,
            format!("expected {expected} fields, found {}", fields.len()),
        ));
    }
    let date = NaiveDate::parse_from_str(fields[0], "%Y-%m-%d").map_err(|e| {
        (
            DiagnosticKind::MalformedDate,
            format!("malformed date `{}`: {e}", fields[0]),
        )
    })?;
    let mut numbers = Vec::with_capacity(expected - 1);
    for token in &fields[1..] {
        let n: u32 = token.parse().map_err(|_| {
            (
                DiagnosticKind::NotInteger,
                format!("`{token}` is not a non-negative integer"),
            )
        })?;
        if n == 0 || n > config.pool_size() {
            return Err((
                DiagnosticKind::OutOfRange,
                format!("{n} is out of range 1..={}", config.pool_size()),
            ));
        }
        numbers.push(n);
    }
    numbers.sort_unstable();
    if let Some(w) = numbers.windows(2).find(|w| w[0] == w[1]) {
        return Err((
            DiagnosticKind::Duplicate,
            format!("duplicate number {}", w[0]),
        ));
    }
    Ok(Draw { date, numbers })
}

fn looks_like_header(line: &str) -> bool {
    match line.split(',').nth(1) {
        Some(second) => second.trim().parse::<i64>().is_err(),
        None => false,
    }
}

/// Parses a whole history; fails with every diagnostic if any line is bad.
pub fn parse_history<R: BufRead>(input: R, config: LotteryConfig) -> Result<DrawHistory> {
    let mut history = DrawHistory::new(config);
    let mut diagnostics = Vec::new();
    let mut seen_data = false;
    for (index, line) in input.lines().enumerate() {
        let number = index + 1;
        let line = match line {
            Ok(l) => l,
            Err(e) => {
                diagnostics.push(LineDiagnostic {
                    line: number,
                    kind: DiagnosticKind::Io,
                    message: e.to_string(),
                });
                break;
            }
        };
        let trimmed = line.trim().trim_start_matches('\u{feff}');
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if !seen_data {
            seen_data = true;
            if looks_like_header(trimmed) {
                continue;
            }
        }
        match parse_line(config, trimmed) {
            Ok(draw) => history.draws.push(draw),
            Err((kind, message)) => diagnostics.push(LineDiagnostic {
                line: number,
                kind,
                message,
            }),
        }
    }
    if diagnostics.is_empty() {
        Ok(history)
    } else {
        Err(ParseError { diagnostics }.into())
    }
}

pub fn parse_history_str(input: &str, config: LotteryConfig) -> Result<DrawHistory> {
    parse_history(input.as_bytes(), config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn cfg() -> LotteryConfig {
        LotteryConfig::SUPERENALOTTO
    }

    fn diagnostics(input: &str) -> Vec<LineDiagnostic> {
        match parse_history_str(input, cfg()) {
            Err(Error::Parse(e)) => e.diagnostics,
            other => panic!("expected parse failure, got {other:?}"),
        }
    }

    fn draw(numbers: &[u32]) -> Draw {
        Draw::new(
            cfg(),
            NaiveDate::from_ymd_opt(2009, 1, 1).unwrap(),
            numbers.to_vec(),
        )
        .unwrap()
    }

    #[test]
    fn parses_a_row() {
        let h = parse_history_str("2009-12-31,40,41,45,51,52,79\n", cfg()).unwrap();
        assert_eq!(h.len(), 1);
        assert_eq!(
            h.draws[0].date,
            NaiveDate::from_ymd_opt(2009, 12, 31).unwrap()
        );
        assert_eq!(h.draws[0].numbers(), &[40, 41, 45, 51, 52, 79]);
    }

    #[test]
    fn sorts_unsorted_rows() {
        let h = parse_history_str("2009-12-31, 79,52,51,45,41,40", cfg()).unwrap();
        assert_eq!(h.draws[0].numbers(), &[40, 41, 45, 51, 52, 79]);
    }

    #[test]
    fn header_and_comments() {
        let input = "# comment\n\ndate,a,b,c,d,e,f\n2009-12-24,5,25,37,52,62,79\n";
        let h = parse_history_str(input, cfg()).unwrap();
        assert_eq!(h.len(), 1);
    }

    #[test]
    fn header_only_on_first_data_line() {
        let input = "2009-12-24,5,25,37,52,62,79\ndate,a,b,c,d,e,f\n";
        let d = diagnostics(input);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].line, 2);
    }

    #[test]
    fn duplicate_and_range_errors() {
        let d = diagnostics("2009-12-31,40,40,45,51,52,79");
        assert_eq!(d[0].kind, DiagnosticKind::Duplicate);
        let d = diagnostics("2009-12-31,40,41,45,51,52,95");
        assert_eq!(d[0].kind, DiagnosticKind::OutOfRange);
        let d = diagnostics("2009-12-31,0,41,45,51,52,79");
        assert_eq!(d[0].kind, DiagnosticKind::OutOfRange);
    }

    #[test]
    fn all_diagnostics_are_reported() {
        let input = "\
2009-12-31,40,41,45,51,52,79
2009-13-01,1,2,3,4,5,6
2009-12-30,1,2,3,4,5
2009-12-29,1,2,x,4,5,6
2009-12-28,1,2,3,4,5,6
2009-12-27,-1,2,3,4,5,6
";
        let d = diagnostics(input);
        let kinds: Vec<_> = d.iter().map(|d| (d.line, d.kind)).collect();
        assert_eq!(
            kinds,
            [
                (2, DiagnosticKind::MalformedDate),
                (3, DiagnosticKind::FieldCount),
                (4, DiagnosticKind::NotInteger),
                (6, DiagnosticKind::NotInteger),
            ]
        );
    }

    #[test]
    fn pair_counts() {
        assert_eq!(adjacent_pair_count(&draw(&[1, 3, 13, 14, 15, 87])), 2);
        assert_eq!(adjacent_pair_count(&draw(&[40, 41, 45, 51, 52, 79])), 2);
        assert_eq!(adjacent_pair_count(&draw(&[5, 25, 37, 52, 62, 79])), 0);
        assert_eq!(adjacent_pair_count(&draw(&[38, 43, 44, 45, 63, 77])), 2);
    }

    #[test]
    fn classify_edge_cases() {
        assert_eq!(classify_history(&DrawHistory::new(cfg())), vec![0; 6]);
        let mut h = DrawHistory::new(cfg());
        h.draws.push(draw(&[1, 2, 3, 4, 5, 6]));
        assert_eq!(classify_history(&h), vec![0, 0, 0, 0, 0, 1]);
    }

    #[test]
    fn empty_input_is_an_empty_history() {
        assert!(parse_history_str("", cfg()).unwrap().is_empty());
    }
}
