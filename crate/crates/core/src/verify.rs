//! Executable verification suites: the genus-1 divisor relation, the
//! two-point determinant law, the closed-form integral table, the 11x11
//! codimension-one block determinant, the codimension-one rank formulas,
//! the rank grids by codimension, and the achieved-partition-set identity.
//!
//! Every comparison is exact rational equality; a suite passes iff all of
//! its non-informational cases pass.

use crate::combinatorics::{partitions, profiles_all, Partition, Profile};
use crate::intersection::{psi_integral, two_point_poly};
use crate::linalg;
use crate::pairing::{kappa_rank, pair};
use crate::rational::{
    binom, binom_poly_int, factorial, odd_double_factorial, rat, ratio, Rational,
};
use crate::{Error, Result, UniPoly};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::time::Instant;

/// One exact comparison: `pass` iff `expected == actual` as rationals (the
/// strings are the rendered values). Informational cases never fail a suite.
#[derive(Debug, Clone, Serialize)]
pub struct CheckCase {
    pub id: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    #[serde(default)]
    pub informational: bool,
}

impl CheckCase {
    fn exact(id: impl Into<String>, expected: &Rational, actual: &Rational) -> Self {
        CheckCase {
            id: id.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass: expected == actual,
            informational: false,
        }
    }

    fn counts(id: impl Into<String>, expected: impl ToString, actual: impl ToString, pass: bool) -> Self {
        CheckCase {
            id: id.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass,
            informational: false,
        }
    }
}

/// Result of one verification suite. The elapsed time is carried for
/// diagnostics but excluded from rendered and serialized output, which must
/// be byte-identical across runs.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub cases: Vec<CheckCase>,
    #[serde(skip)]
    pub elapsed: std::time::Duration,
}

impl CheckReport {
    fn new(suite: impl Into<String>, cases: Vec<CheckCase>, start: Instant) -> Self {
        CheckReport {
            suite: suite.into(),
            cases,
            elapsed: start.elapsed(),
        }
    }

    /// True iff every non-informational case passed.
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.pass || c.informational)
    }

    /// Human-readable rendering, one line per case.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "suite {} — {} ({} cases)\n",
            self.suite,
            if self.passed() { "PASS" } else { "FAIL" },
            self.cases.len(),
        ));
        for c in &self.cases {
            let mark = if c.pass {
                "ok  "
            } else if c.informational {
                "info"
            } else {
                "FAIL"
            };
            out.push_str(&format!(
                "  [{mark}] {}: expected {}, got {}\n",
                c.id, c.expected, c.actual
            ));
        }
        out
    }
}

/// The genus-1 divisor relation in degree `n - 1`: for every partition
/// `p` of `n - 1`,
/// `(1/24) <p, q_n> = sum_i binom(n-2, i-1) <p, q_i>`
/// where `q_i = ((1, n-i), (0, i+2))` for `i < n` and `q_n = ((0, n+2))`.
pub fn check_divisor_relation(n: u32) -> CheckReport {
    let start = Instant::now();
    assert!(n >= 2, "divisor relation needs n >= 2");
    let q_last = Profile::new(vec![(0, n + 2)]);
    let divisors: Vec<Profile> = (1..n)
        .map(|i| Profile::new(vec![(1, n - i), (0, i + 2)]))
        .collect();
    let cases = partitions(n - 1, None)
        .par_iter()
        .map(|p| {
            let lhs = ratio(1, 24) * pair(p, &q_last);
            let mut rhs = Rational::zero();
            for (idx, q) in divisors.iter().enumerate() {
                let i = idx as u64 + 1;
                rhs += rat(binom(n as u64 - 2, i - 1)) * pair(p, q);
            }
            CheckCase::exact(format!("n={n} p={p}"), &lhs, &rhs)
        })
        .collect();
    CheckReport::new("divisor-relation", cases, start)
}

/// Columns of the two-point matrix `M(m; g)`: j = 0, 2, 3, ..., g+1 (the
/// column j = 1 is omitted).
fn m_columns(g: u32) -> Vec<u32> {
    let mut cols = vec![0];
    cols.extend(2..=g + 1);
    cols
}

/// The `(g+1) x (g+1)` matrix `M(m; g) = (n_j(h, m))` with rows
/// `h = 0..g` and the column `j = 1` omitted; entries come from the
/// polynomial extension, so `m` may lie outside the geometric range.
pub fn psi_matrix_m(m: i64, g: u32) -> Vec<Vec<Rational>> {
    let cols = m_columns(g);
    (0..=g)
        .map(|h| {
            cols.iter()
                .map(|&j| two_point_poly(h, j).eval_int(m))
                .collect()
        })
        .collect()
}

/// Determinant law for `M(m; g)`: `d_g(m)` is reconstructed by exact
/// interpolation, then checked to have degree `g`, roots at `m = 2` and
/// `m = g+3, ..., 2g+1`, and to equal
/// `(-3)^binom(g+1,2) / ((2g+1)!! g!) * (m-2) * prod (m-i)` exactly.
pub fn det_law_check(g: u32) -> CheckReport {
    let start = Instant::now();
    assert!(g >= 1);
    let cols = m_columns(g);
    let polys: Vec<Vec<UniPoly>> = (0..=g)
        .map(|h| cols.iter().map(|&j| two_point_poly(h, j)).collect())
        .collect();
    // the determinant has degree at most sum(j) = (g+1)(g+2)/2 - 1
    let node_count = ((g as usize + 1) * (g as usize + 2)) / 2;
    let nodes: Vec<(Rational, Rational)> = (0..node_count as i64)
        .map(|m| {
            let matrix: Vec<Vec<Rational>> = polys
                .iter()
                .map(|row| row.iter().map(|p| p.eval_int(m)).collect())
                .collect();
            (rat(m), linalg::det_rational(&matrix))
        })
        .collect();
    let det_poly = UniPoly::interpolate(&nodes);

    let mut cases = Vec::new();
    cases.push(CheckCase::counts(
        format!("g={g} degree"),
        g,
        det_poly.degree().map_or(-1i64, |d| d as i64),
        det_poly.degree() == Some(g as usize),
    ));
    let zero = Rational::zero();
    cases.push(CheckCase::exact(
        format!("g={g} root m=2"),
        &zero,
        &det_poly.eval_int(2),
    ));
    for root in g as i64 + 3..=2 * g as i64 + 1 {
        cases.push(CheckCase::exact(
            format!("g={g} root m={root}"),
            &zero,
            &det_poly.eval_int(root),
        ));
    }
    let expected = det_law_closed_form(g);
    cases.push(CheckCase::counts(
        format!("g={g} closed form"),
        expected.to_string(),
        det_poly.to_string(),
        expected == det_poly,
    ));
    CheckReport::new("determinant-law", cases, start)
}

/// `(-3)^binom(g+1,2) / ((2g+1)!! g!) * (m-2) * prod_{i=g+3}^{2g+1} (m-i)`.
fn det_law_closed_form(g: u32) -> UniPoly {
    let exponent = (g as u64 * (g as u64 + 1)) / 2;
    let constant = Rational::new(
        BigInt::from(-3).pow(exponent as u32),
        odd_double_factorial(g as i64) * factorial(g as u64),
    );
    let mut poly = UniPoly::from_coeffs(vec![rat(-2), rat(1)]);
    for i in g as i64 + 3..=2 * g as i64 + 1 {
        poly = &poly * &UniPoly::from_coeffs(vec![rat(-i), rat(1)]);
    }
    poly.scale(&constant)
}

/// The eleven closed-form integral rows: partition pattern and the printed
/// polynomial in `(g, d)`.
fn table1_rows(g: i64, d: i64) -> Vec<(String, Vec<u32>, Rational)> {
    let bin = |x: i64, k: i64| binom_poly_int(x, k);
    let g2 = g * g;
    let g3 = g2 * g;
    let g4 = g3 * g;
    let g5 = g4 * g;
    let g6 = g5 * g;
    let g7 = g6 * g;
    let du = d as u32;
    let q23 = ratio(g * (2 * g + 3), 5);
    let q37 = ratio(g * (8 * g2 + 60 * g + 37), 105);
    let q44 = ratio(g * (4 * g3 - 4 * g2 - 41 * g - 9), 25);
    let q70 = ratio(g * (g + 1) * (2 * g + 3) * (2 * g + 5), 70);
    let q125 = ratio(
        g * (8 * g5 - 60 * g4 - 70 * g3 + 1275 * g2 + 1067 * g + 30),
        125,
    );
    let q525 = ratio(g * (2 * g + 3) * (8 * g3 + 12 * g2 - 467 * g - 78), 525);
    vec![
        ("(d)".into(), vec![du], rat(1)),
        (
            "(d,2)".into(),
            vec![du, 2],
            bin(d + 2 - g, 2) + q23.clone(),
        ),
        (
            "(d,3)".into(),
            vec![du, 3],
            bin(d + 3 - g, 3) + bin(d + 3 - g, 1) * q23.clone() - q37.clone(),
        ),
        (
            "(d,4)".into(),
            vec![du, 4],
            bin(d + 4 - g, 4) + bin(d + 4 - g, 2) * q23.clone()
                - bin(d + 4 - g, 1) * q37.clone()
                + q70.clone(),
        ),
        (
            "(d,5)".into(),
            vec![du, 5],
            bin(d + 5 - g, 5) + bin(d + 5 - g, 3) * q23.clone()
                - bin(d + 5 - g, 2) * q37.clone()
                + bin(d + 5 - g, 1) * q70
                - ratio(g * (2 * g + 3) * (8 * g3 + 84 * g2 + 55 * g + 84), 1155),
        ),
        (
            "(d,2,2)".into(),
            vec![du, 2, 2],
            rat(6) * bin(d + 4 - g, 4) + bin(d + 4 - g, 2) * rat(2) * q23.clone() + q44.clone(),
        ),
        (
            "(d,2,2,2)".into(),
            vec![du, 2, 2, 2],
            rat(90) * bin(d + 6 - g, 6)
                + bin(d + 6 - g, 4) * rat(18) * q23.clone()
                + bin(d + 6 - g, 2) * rat(3) * q44.clone()
                + q125.clone(),
        ),
        (
            "(d,2,2,2,2)".into(),
            vec![du, 2, 2, 2, 2],
            rat(2520) * bin(d + 8 - g, 8)
                + bin(d + 8 - g, 6) * rat(360) * q23.clone()
                + bin(d + 8 - g, 4) * rat(36) * q44.clone()
                + bin(d + 8 - g, 2) * rat(4) * q125
                + ratio(
                    g * (16 * g7 - 288 * g6 + 1192 * g5 + 7440 * g4
                        - 57671 * g3
                        - 120522 * g2
                        - 34677 * g
                        - 20490),
                    625,
                ),
        ),
        (
            "(d,3,2)".into(),
            vec![du, 3, 2],
            rat(10) * bin(d + 5 - g, 5) + bin(d + 5 - g, 3) * rat(4) * q23.clone()
                - bin(d + 5 - g, 2) * q37.clone()
                + bin(d + 5 - g, 1) * q44.clone()
                - q525.clone(),
        ),
        (
            "(d,4,2)".into(),
            vec![du, 4, 2],
            rat(15) * bin(d + 6 - g, 6) + bin(d + 6 - g, 4) * rat(7) * q23.clone()
                - bin(d + 6 - g, 3) * rat(3) * q37.clone()
                + bin(d + 6 - g, 2) * ratio(g * (76 * g3 + 44 * g2 - 419 * g - 51), 350)
                - bin(d + 6 - g, 1) * q525.clone()
                + ratio(
                    g * (g + 2) * (2 * g + 1) * (2 * g + 3) * (2 * g2 - 11 * g - 61),
                    350,
                ),
        ),
        (
            "(d,3,3)".into(),
            vec![du, 3, 3],
            rat(20) * bin(d + 6 - g, 6) + bin(d + 6 - g, 4) * rat(8) * q23
                - bin(d + 6 - g, 3) * rat(2) * q37
                + bin(d + 6 - g, 2) * rat(2) * q44
                - bin(d + 6 - g, 1) * rat(2) * q525
                + ratio(
                    g * (64 * g5 + 384 * g4 - 13376 * g3 - 76224 * g2 - 71315 * g - 15933),
                    11025,
                ),
        ),
    ]
}

/// Compare each printed closed-form row against the direct integral
/// `g! 24^g <tau_{a_1} ... tau_0^z>_g` with zeros padding the point count.
pub fn table1_check(g: u32, d: u32) -> Result<CheckReport> {
    let start = Instant::now();
    if d < 3 * g + 2 {
        return Err(Error::OutOfRange(format!(
            "table rows need d >= 3g + 2 = {} to stay geometric; got d = {d}",
            3 * g + 2
        )));
    }
    let norm = rat(BigInt::from(24).pow(g) * factorial(g as u64));
    let cases = table1_rows(g as i64, d as i64)
        .into_par_iter()
        .map(|(name, parts, printed)| {
            let degree: u32 = parts.iter().sum();
            let points = (degree + 3 - 3 * g) as usize;
            let mut exps = parts.clone();
            exps.extend(std::iter::repeat(0).take(points - parts.len()));
            let direct = &norm * psi_integral(g, &exps).expect("geometric row");
            CheckCase::exact(format!("g={g} d={d} row {name}"), &printed, &direct)
        })
        .collect();
    Ok(CheckReport::new("table1", cases, start))
}

/// The eleven column partitions of the codimension-one block, in the
/// documented order.
fn block11_columns(d: u32) -> Vec<Partition> {
    vec![
        Partition::new(vec![d]),
        Partition::new(vec![d - 1, 1]),
        Partition::new(vec![d - 2, 2]),
        Partition::new(vec![d - 2, 1, 1]),
        Partition::new(vec![d - 3, 3]),
        Partition::new(vec![d - 3, 2, 1]),
        Partition::new(vec![d - 3, 1, 1, 1]),
        Partition::new(vec![d - 4, 4]),
        Partition::new(vec![d - 4, 3, 1]),
        Partition::new(vec![d - 4, 2, 2]),
        Partition::new(vec![d - 4, 1, 1, 1, 1]),
    ]
}

/// Determinant of the 11x11 codimension-one block: rows are the profiles
/// of `Q(d; g, n)` (with `n = d + 4 - 3g`) whose shape has small part at
/// most 4, columns the eleven partitions above. The profiles are derived
/// from the one-edge structure, and their count is asserted to be exactly
/// eleven.
///
/// Each row is scaled by `24^{g_top} g_top!` for the genus of the vertex
/// carrying the largest shape part. This is the scaling under which the
/// determinant is independent of `d` and matches the published constant;
/// row scaling is rank-neutral, so the full-rank conclusion is unaffected.
pub fn block11_det(g: u32, d: u32) -> Result<Rational> {
    if g < 2 || d < 9 {
        return Err(Error::OutOfRange(format!(
            "block determinant needs g >= 2 and d >= 9; got g = {g}, d = {d}"
        )));
    }
    let n = (d + 4).checked_sub(3 * g).filter(|&n| n >= 1).ok_or_else(|| {
        Error::OutOfRange(format!("no marked points left for g = {g}, d = {d}"))
    })?;
    let shapes: Vec<Partition> = vec![
        Partition::new(vec![d]),
        Partition::new(vec![d - 1, 1]),
        Partition::new(vec![d - 2, 2]),
        Partition::new(vec![d - 3, 3]),
        Partition::new(vec![d - 4, 4]),
    ];
    let (all, _) = profiles_all(d, g, n);
    let rows: Vec<Profile> = all
        .into_iter()
        .filter(|q| shapes.contains(&q.shape()))
        .collect();
    if rows.len() != 11 {
        return Err(Error::ProfileCount(rows.len()));
    }
    let cols = block11_columns(d);
    let matrix: Vec<Vec<Rational>> = rows
        .par_iter()
        .map(|q| {
            let top_delta = q.shape().parts()[0] as i64;
            let g_top = q
                .vertices()
                .iter()
                .find(|&&(gv, mv)| 3 * gv as i64 - 3 + mv as i64 == top_delta)
                .map(|&(gv, _)| gv)
                .expect("some vertex carries the largest part");
            let scale = rat(BigInt::from(24).pow(g_top) * factorial(g_top as u64));
            cols.iter().map(|p| pair(p, q) * &scale).collect()
        })
        .collect();
    Ok(linalg::det_rational(&matrix))
}

/// The printed constant the block determinant equals for every `d`.
fn block11_printed(g: i64) -> Rational {
    let poly = 4928 * g * g * g * g - 275516 * g * g * g - 437138 * g * g + 62924 * g - 334941;
    -Rational::new(
        BigInt::from((g - 1) * (g - 1)) * BigInt::from(poly),
        BigInt::from(12936u64) * BigInt::from(10u64).pow(7),
    )
}

/// Check `|block11_det|` against the printed polynomial at each degree and
/// verify the determinant does not depend on `d`. The overall sign depends
/// on the row/column order, so it is reported informationally.
pub fn block11_check(g: u32, degrees: &[u32]) -> CheckReport {
    let start = Instant::now();
    let mut cases = Vec::new();
    let expected = linalg::abs(&block11_printed(g as i64));
    let mut dets = Vec::new();
    for &d in degrees {
        match block11_det(g, d) {
            Ok(det) => {
                cases.push(CheckCase::exact(
                    format!("g={g} d={d} |det|"),
                    &expected,
                    &linalg::abs(&det),
                ));
                cases.push(CheckCase {
                    id: format!("g={g} d={d} sign"),
                    expected: "-1".into(),
                    actual: if det.is_negative() { "-1" } else { "1" }.into(),
                    pass: det.is_negative(),
                    informational: true,
                });
                dets.push((d, det));
            }
            Err(e) => cases.push(CheckCase::counts(
                format!("g={g} d={d} |det|"),
                expected.to_string(),
                format!("error: {e}"),
                false,
            )),
        }
    }
    for pair in dets.windows(2) {
        let ((d1, v1), (d2, v2)) = (&pair[0], &pair[1]);
        cases.push(CheckCase::counts(
            format!("g={g} d-independence d={d1} vs d={d2}"),
            v1.to_string(),
            v2.to_string(),
            v1 == v2,
        ));
    }
    CheckReport::new("block11", cases, start)
}

/// Codimension-one rank: `kappa_rank(3g-4+n, g, n)` against `n - 1` for
/// genus one and `ceil((n+1)(g+1)/2) - 1` for higher genus.
pub fn codim1_check(g: u32, n: u32) -> CheckReport {
    let start = Instant::now();
    assert!(g >= 1 && n >= 2);
    let d = (3 * g as i64 - 4 + n as i64) as u32;
    let expected = if g == 1 {
        (n - 1) as u64
    } else {
        let num = (n as u64 + 1) * (g as u64 + 1);
        num.div_ceil(2) - 1
    };
    let actual = kappa_rank(d, g, n) as u64;
    let case = CheckCase::counts(
        format!("g={g} n={n} d={d}"),
        expected,
        actual,
        expected == actual,
    );
    CheckReport::new("codim1", vec![case], start)
}

/// One cell of a rank grid.
#[derive(Debug, Clone, Serialize)]
pub struct TableCell {
    pub codim: u32,
    pub genus: u32,
    pub points: u32,
    pub degree: i64,
    pub rank: u64,
}

/// Rank of the degree-`3g-3+n-e` combinatorial kappa ring, extended to the
/// trivial degrees: degree zero has rank one (the constants pair to one
/// against every zero-dimensional cycle), negative degree has rank zero.
pub fn table_rank(e: u32, g: u32, n: u32) -> (i64, u64) {
    let d = 3 * g as i64 - 3 + n as i64 - e as i64;
    let rank = if d > 0 {
        kappa_rank(d as u32, g, n) as u64
    } else if d == 0 && 2 * g as i64 - 2 + n as i64 > 0 {
        1
    } else {
        0
    };
    (d, rank)
}

/// Printed rank grids for codimensions 2..=6, genus 0..=2, n = 1..=10.
/// The last printed sub-table repeats the "Codimension=2" header; per the
/// caption listing codimensions 2 through 6 it is the codimension-6 grid.
const PRINTED_TABLE2: [[[u64; 10]; 3]; 5] = [
    [
        [0, 0, 0, 0, 1, 1, 2, 3, 4, 5],
        [0, 1, 1, 2, 3, 5, 7, 10, 13, 17],
        [2, 3, 5, 7, 11, 15, 21, 28, 36, 45],
    ],
    [
        [0, 0, 0, 0, 0, 1, 1, 2, 3, 5],
        [0, 0, 1, 1, 2, 3, 5, 7, 11, 15],
        [1, 2, 3, 5, 7, 11, 15, 22, 30, 42],
    ],
    [
        [0, 0, 0, 0, 0, 0, 1, 1, 2, 3],
        [0, 0, 0, 1, 1, 2, 3, 5, 7, 11],
        [1, 1, 2, 3, 5, 7, 11, 15, 22, 30],
    ],
    [
        [0, 0, 0, 0, 0, 0, 0, 1, 1, 2],
        [0, 0, 0, 0, 1, 1, 2, 3, 5, 7],
        [0, 1, 1, 2, 3, 5, 7, 11, 15, 22],
    ],
    [
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
        [0, 0, 0, 0, 0, 1, 1, 2, 3, 5],
        [0, 0, 1, 1, 2, 3, 5, 7, 11, 15],
    ],
];

/// The printed rank for `(e, g, n)` when it lies in the published grids.
pub fn printed_table2(e: u32, g: u32, n: u32) -> Option<u64> {
    if !(2..=6).contains(&e) || g > 2 || !(1..=10).contains(&n) {
        return None;
    }
    Some(PRINTED_TABLE2[(e - 2) as usize][g as usize][(n - 1) as usize])
}

/// Rank grid in codimension `e` for genus up to `g_max` and point counts up
/// to `n_max`, compared cell by cell against the printed grids where they
/// overlap. Row monotonicity in `n` is reported informationally.
pub fn table2(e: u32, g_max: u32, n_max: u32) -> (Vec<TableCell>, CheckReport) {
    let start = Instant::now();
    let coords: Vec<(u32, u32)> = (0..=g_max)
        .flat_map(|g| (1..=n_max).map(move |n| (g, n)))
        .collect();
    let cells: Vec<TableCell> = coords
        .par_iter()
        .map(|&(g, n)| {
            let (degree, rank) = table_rank(e, g, n);
            TableCell {
                codim: e,
                genus: g,
                points: n,
                degree,
                rank,
            }
        })
        .collect();
    let mut cases = Vec::new();
    for cell in &cells {
        if let Some(expected) = printed_table2(e, cell.genus, cell.points) {
            cases.push(CheckCase::counts(
                format!("e={e} g={} n={}", cell.genus, cell.points),
                expected,
                cell.rank,
                expected == cell.rank,
            ));
        }
    }
    for g in 0..=g_max {
        let row: Vec<u64> = cells
            .iter()
            .filter(|c| c.genus == g)
            .map(|c| c.rank)
            .collect();
        let monotone = row.windows(2).all(|w| w[0] <= w[1]);
        cases.push(CheckCase {
            id: format!("e={e} g={g} monotone in n"),
            expected: "true".into(),
            actual: monotone.to_string(),
            pass: monotone,
            informational: true,
        });
    }
    (cells, CheckReport::new(format!("table2-codim{e}"), cases, start))
}

/// Achieved-shape identity `P(d; g, n) = P(d, 3g - 2 + n - d)` as sets.
pub fn partition_set_check(d: u32, g: u32, n: u32) -> CheckReport {
    let start = Instant::now();
    let (_, achieved) = profiles_all(d, g, n);
    let bound = (3 * g as i64 - 2 + n as i64 - d as i64).max(0) as usize;
    let mut expected = partitions(d, Some(bound));
    expected.sort();
    let mut got = achieved;
    got.sort();
    let render = |ps: &[Partition]| {
        ps.iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let case = CheckCase::counts(
        format!("d={d} g={g} n={n}"),
        render(&expected),
        render(&got),
        expected == got,
    );
    CheckReport::new("partition-sets", vec![case], start)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_relation_small_n() {
        for n in 2..=5 {
            let report = check_divisor_relation(n);
            assert!(report.passed(), "{}", report.render_text());
        }
    }

    #[test]
    fn psi_matrix_m_genus_one() {
        // [[1, binom(m,2)], [1, binom(m,2) - (m-2)]]
        for m in [-1i64, 0, 3, 7] {
            let mat = psi_matrix_m(m, 1);
            assert_eq!(mat[0][0], rat(1));
            assert_eq!(mat[1][0], rat(1));
            assert_eq!(mat[0][1], binom_poly_int(m, 2));
            assert_eq!(mat[1][1], binom_poly_int(m, 2) - rat(m - 2));
        }
        // first two rows of M(2; g) coincide
        for g in 1..=3u32 {
            let mat = psi_matrix_m(2, g);
            assert_eq!(mat[0], mat[1]);
        }
        // entry (h=2, j=2) of M(5; 2)
        let mat = psi_matrix_m(5, 2);
        assert_eq!(mat[2][1], ratio(29, 5));
    }

    #[test]
    fn det_law_genus_one_and_two() {
        let r1 = det_law_check(1);
        assert!(r1.passed(), "{}", r1.render_text());
        // d_1(m) = -(m - 2)
        assert_eq!(det_law_closed_form(1).coeffs(), &[rat(2), rat(-1)]);
        let r2 = det_law_check(2);
        assert!(r2.passed(), "{}", r2.render_text());
    }

    #[test]
    fn table1_row_d2_values() {
        let rows = table1_rows(1, 3);
        assert_eq!(rows[1].2, rat(7));
        let rows = table1_rows(2, 3);
        assert_eq!(rows[1].2, ratio(29, 5));
        // first row is identically 1
        assert_eq!(table1_rows(3, 11)[0].2, rat(1));
    }

    #[test]
    fn table1_check_genus_one() {
        let report = table1_check(1, 5).unwrap();
        assert!(report.passed(), "{}", report.render_text());
        assert!(table1_check(2, 4).is_err());
    }

    #[test]
    fn block11_profile_count() {
        assert!(matches!(block11_det(2, 8), Err(Error::OutOfRange(_))));
        assert!(block11_det(2, 9).is_ok());
    }

    #[test]
    fn codim1_genus_one() {
        let report = codim1_check(1, 4);
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn printed_grid_lookup() {
        assert_eq!(printed_table2(2, 2, 10), Some(45));
        assert_eq!(printed_table2(3, 1, 9), Some(11));
        assert_eq!(printed_table2(6, 2, 10), Some(15));
        assert_eq!(printed_table2(7, 0, 1), None);
    }

    #[test]
    fn partition_set_small() {
        let report = partition_set_check(2, 1, 3);
        assert!(report.passed(), "{}", report.render_text());
        let report = partition_set_check(4, 2, 4);
        assert!(report.passed(), "{}", report.render_text());
    }
}
