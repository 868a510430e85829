//! The plain-text matrix format.
//!
//! ```text
//! dim 2
//! [1,1] = a + a^-1
//! [1,2] = b
//! [2,1] = b^-1
//! [2,2] = d + d^-1
//! ```
//!
//! Unassigned entries are zero. Generators are declared in order of first
//! appearance. `#` starts a comment.

use crate::error::{Error, Result};
use crate::freegroup::Generators;
use crate::group_algebra::{parse_element, AlgebraElement};
use crate::matrix::AlgebraMatrix;
use crate::text::Cursor;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixDocument {
    pub dim: usize,
    /// `((i, j), source)` with one-based indices, in file order.
    pub assignments: Vec<((usize, usize), String)>,
    pub generators: Generators,
    pub matrix: AlgebraMatrix,
}

pub fn parse_matrix(text: &str) -> Result<MatrixDocument> {
    parse_matrix_with(text, Generators::new())
}

/// Like [`parse_matrix`], starting from an existing generator table so that
/// known names keep their ids.
pub fn parse_matrix_with(text: &str, mut generators: Generators) -> Result<MatrixDocument> {
    let mut dim: Option<usize> = None;
    let mut assignments: Vec<((usize, usize), String)> = Vec::new();
    let mut entries: Vec<Option<AlgebraElement>> = Vec::new();

    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let mut cur = Cursor::at(line, line_no, 1);
        cur.skip_ws();
        let Some(d) = dim else {
            if cur.ident() != Some("dim") {
                return Err(cur.error("expected the header 'dim <d>'"));
            }
            cur.skip_ws();
            let d: usize = cur
                .digits()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| cur.error("expected a positive dimension"))?;
            if d == 0 {
                return Err(cur.error("dimension must be at least 1"));
            }
            if !cur.at_end() {
                return Err(cur.error("unexpected trailing input"));
            }
            dim = Some(d);
            entries = vec![None; d * d];
            continue;
        };
        cur.expect('[')?;
        cur.skip_ws();
        let (ic, i) = (cur.column(), index(&mut cur)?);
        cur.expect(',')?;
        cur.skip_ws();
        let (jc, j) = (cur.column(), index(&mut cur)?);
        cur.expect(']')?;
        cur.expect('=')?;
        for (v, col) in [(i, ic), (j, jc)] {
            if v == 0 || v > d {
                return Err(Error::Parse {
                    line: line_no,
                    column: col,
                    message: format!("index {v} out of range 1..={d}"),
                });
            }
        }
        cur.skip_ws();
        let body_col = cur.column();
        let element = parse_element(&mut cur, &mut generators)?;
        if !cur.at_end() {
            return Err(cur.error("unexpected trailing input"));
        }
        let slot = &mut entries[(i - 1) * d + (j - 1)];
        if slot.is_some() {
            return Err(Error::Parse {
                line: line_no,
                column: 1,
                message: format!("duplicate assignment to [{i},{j}]"),
            });
        }
        *slot = Some(element);
        let src: String = line.chars().skip(body_col - 1).collect();
        assignments.push(((i, j), src.trim().to_string()));
    }

    let Some(d) = dim else {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "missing header 'dim <d>'".into(),
        });
    };
    let matrix = AlgebraMatrix::from_entries(
        d,
        entries.into_iter().map(Option::unwrap_or_default).collect(),
    )?;
    Ok(MatrixDocument {
        dim: d,
        assignments,
        generators,
        matrix,
    })
}

fn index(cur: &mut Cursor<'_>) -> Result<usize> {
    cur.digits()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| cur.error("expected an index"))
}
