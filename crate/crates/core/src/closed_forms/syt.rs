//! Descent polynomials of standard Young tableaux of rectangular shape.

use crate::arith::{int, Int, QXPoly, Rat};
use crate::error::{Error, Result};
use crate::report::{CheckReport, Recorder};

use super::operator::g_extract;

/// Largest number of cells accepted by [`syt_descent_poly`].
pub const SYT_CELL_CAP: usize = 16;

/// Descent counts of all standard Young tableaux with `rows` rows of
/// length `cols`, indexed by number of descents.
fn descent_counts(rows: usize, cols: usize) -> Vec<Int> {
    fn fill(
        lens: &mut Vec<usize>,
        cols: usize,
        last_row: Option<usize>,
        des: usize,
        left: usize,
        out: &mut Vec<Int>,
    ) {
        if left == 0 {
            if out.len() <= des {
                out.resize(des + 1, int(0));
            }
            out[des] += 1;
            return;
        }
        for r in 0..lens.len() {
            let fits = lens[r] < cols && (r == 0 || lens[r - 1] > lens[r]);
            if !fits {
                continue;
            }
            let step = matches!(last_row, Some(p) if r > p) as usize;
            lens[r] += 1;
            fill(lens, cols, Some(r), des + step, left - 1, out);
            lens[r] -= 1;
        }
    }
    let mut out = Vec::new();
    fill(&mut vec![0; rows], cols, None, 0, rows * cols, &mut out);
    out
}

/// `sum_T x^{des(T) - rows + 1}` over tableaux with `rows` rows of length `cols`.
fn descent_poly(rows: usize, cols: usize) -> QXPoly {
    let counts = descent_counts(rows, cols);
    let shift = rows.saturating_sub(1);
    QXPoly::new(counts.into_iter().skip(shift).map(Rat::from_integer).collect())
}

/// Tableaux with `b` rows of length `a`; a descent is an `i` with `i+1`
/// in a strictly lower row.
pub fn syt_descent_poly(a: usize, b: usize) -> Result<QXPoly> {
    if a * b > SYT_CELL_CAP {
        return Err(Error::TooLarge(format!("{b} x {a} rectangle exceeds {SYT_CELL_CAP} cells")));
    }
    Ok(descent_poly(b, a))
}

/// `G_{a,b}` against the descent polynomial, trying both orientations.
pub fn syt_check(cell_max: usize, order: usize) -> CheckReport {
    let mut rec = Recorder::new("syt-descent").param("cell_max", cell_max).param("N", order);
    let (mut rows_b, mut rows_a) = (0, 0);
    for a in 1..=cell_max {
        for b in 1..=cell_max / a {
            let input = format!("a={a}, b={b}");
            let g = match g_extract(a, b, order) {
                Ok(g) => g,
                Err(e) => {
                    rec.fail(&input, "G_(a,b)", e);
                    continue;
                }
            };
            let b_rows = descent_poly(b, a);
            let a_rows = descent_poly(a, b);
            rows_b += (b_rows == g) as usize;
            rows_a += (a_rows == g) as usize;
            if b_rows == g || a_rows == g {
                rec.pass();
            } else {
                rec.fail(&input, &g, format!("{b_rows} (b rows), {a_rows} (a rows)"));
            }
        }
    }
    rec.note(format!(
        "orientation: b rows of length a matched {rows_b} shapes, a rows of length b matched {rows_a}"
    ));
    rec.finish()
}
