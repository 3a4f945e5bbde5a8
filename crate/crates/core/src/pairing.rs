//! Pairing of psi classes against combinatorial boundary cycles, the
//! normalized matrix `R(d; g, n)`, and its exact rank over the rationals.
//!
//! The pairing `<p, q>` sums, over all labeled assignments of the parts of
//! `p` to the vertices of a profile `q`, the product of per-vertex top psi
//! integrals. Each positive-dimension vertex must receive parts summing to
//! exactly its dimension; matrix entries therefore vanish unless the column
//! partition refines the row's shape.

use crate::combinatorics::{partitions, profiles_all, Partition, Profile};
use crate::intersection::psi_integral;
use crate::linalg;
use crate::rational::{binom, format_explicit, rat, ratio, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::fmt::Write as _;

/// `<psi(p), [G]>` for any stable weighted graph `G` with profile `q`:
/// the sum over labeled part-to-vertex assignments in which every
/// positive-dimension vertex receives parts summing to its dimension, of
/// the product of per-vertex integrals. Equal parts and equal vertices
/// contribute with multiplicity. Zero when no assignment matches.
pub fn pair(p: &Partition, q: &Profile) -> Rational {
    // positive-dimension vertices and their residual targets
    let mut targets: Vec<(u32, u32, i64)> = Vec::new(); // (g_i, m_i, delta_i)
    for &(g, m) in q.vertices() {
        let delta = 3 * g as i64 - 3 + m as i64;
        if delta > 0 {
            targets.push((g, m, delta));
        }
    }
    let total: i64 = targets.iter().map(|&(_, _, d)| d).sum();
    if p.degree() as i64 != total {
        return Rational::zero();
    }
    if p.is_empty() {
        return Rational::one();
    }
    // parts grouped by value, descending
    let mut groups: Vec<(u32, u64)> = Vec::new();
    for &a in p.parts() {
        match groups.last_mut() {
            Some((v, c)) if *v == a => *c += 1,
            _ => groups.push((a, 1)),
        }
    }
    let mut residual: Vec<i64> = targets.iter().map(|&(_, _, d)| d).collect();
    let mut assigned: Vec<Vec<u32>> = vec![Vec::new(); targets.len()];
    let mut acc = Rational::zero();
    distribute(
        &groups,
        0,
        &targets,
        &mut residual,
        &mut assigned,
        &BigInt::one(),
        &mut acc,
    );
    acc
}

/// Distribute the `idx`-th part-value group over the vertices in all ways,
/// tracking residual dimensions; on completion multiply the per-vertex
/// integrals by the number of labeled assignments realizing the split.
fn distribute(
    groups: &[(u32, u64)],
    idx: usize,
    targets: &[(u32, u32, i64)],
    residual: &mut Vec<i64>,
    assigned: &mut Vec<Vec<u32>>,
    mult: &BigInt,
    acc: &mut Rational,
) {
    if idx == groups.len() {
        if residual.iter().any(|&r| r != 0) {
            return;
        }
        let mut term = rat(mult.clone());
        for (&(g, m, _), parts) in targets.iter().zip(assigned.iter()) {
            let mut exps: Vec<u32> = parts.iter().map(|&a| a + 1).collect();
            exps.extend(std::iter::repeat(0).take(m as usize));
            term *= psi_integral(g, &exps).expect("profile vertices are stable");
            if term.is_zero() {
                break;
            }
        }
        *acc += term;
        return;
    }
    let (value, count) = groups[idx];
    split_group(
        groups, idx, targets, residual, assigned, mult, acc, value, count, 0,
    );
}

#[allow(clippy::too_many_arguments)]
fn split_group(
    groups: &[(u32, u64)],
    idx: usize,
    targets: &[(u32, u32, i64)],
    residual: &mut Vec<i64>,
    assigned: &mut Vec<Vec<u32>>,
    mult: &BigInt,
    acc: &mut Rational,
    value: u32,
    left: u64,
    vertex: usize,
) {
    if left == 0 {
        distribute(groups, idx + 1, targets, residual, assigned, mult, acc);
        return;
    }
    if vertex == targets.len() {
        return;
    }
    let fit = (residual[vertex] / value as i64).max(0) as u64;
    let max_here = fit.min(left);
    // remaining vertices must be able to absorb what is left
    for take in (0..=max_here).rev() {
        residual[vertex] -= (take * value as u64) as i64;
        for _ in 0..take {
            assigned[vertex].push(value);
        }
        let m2 = mult * binom(left, take);
        split_group(
            groups,
            idx,
            targets,
            residual,
            assigned,
            &m2,
            acc,
            value,
            left - take,
            vertex + 1,
        );
        for _ in 0..take {
            assigned[vertex].pop();
        }
        residual[vertex] += (take * value as u64) as i64;
    }
}

/// The closed-form row normalizer `Lambda(q) = prod 1/(24^{g_i} g_i!)`.
pub fn lambda_norm(q: &Profile) -> Rational {
    let mut acc = Rational::one();
    for &(g, _) in q.vertices() {
        acc *= ratio(1, BigInt::from(24).pow(g) * crate::rational::factorial(g as u64));
    }
    acc
}

/// The labeled rational matrix `R(d; g, n)`: rows are the profiles of
/// `Q(d; g, n)`, columns the partitions of `d`, entries `<p, q>/Lambda(q)`.
#[derive(Debug, Clone)]
pub struct PairingMatrix {
    pub degree: u32,
    pub genus: u32,
    pub points: u32,
    pub row_labels: Vec<Profile>,
    pub col_labels: Vec<Partition>,
    pub entries: Vec<Vec<Rational>>,
}

impl PairingMatrix {
    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        exact_rank(&self.entries)
    }

    /// Deterministic text dump: header `R(d;g,n) rows=R cols=C`, then one
    /// line per row: the row label, a tab, and the entries as `num/den`,
    /// tab-separated.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "R({};{},{}) rows={} cols={}",
            self.degree,
            self.genus,
            self.points,
            self.row_labels.len(),
            self.col_labels.len()
        );
        for (label, row) in self.row_labels.iter().zip(&self.entries) {
            let cells: Vec<String> = row.iter().map(format_explicit).collect();
            let _ = writeln!(out, "{}\t{}", label, cells.join("\t"));
        }
        out
    }
}

/// Assemble `R(d; g, n)` with deterministic label order. Rows are grouped
/// by the partition whose shape they realize, in `partitions(d)` order;
/// entries are computed in parallel and share the intersection memo.
pub fn pairing_matrix(d: u32, g: u32, n: u32) -> PairingMatrix {
    let (row_labels, _) = profiles_all(d, g, n);
    let col_labels = partitions(d, None);
    let entries: Vec<Vec<Rational>> = row_labels
        .par_iter()
        .map(|q| {
            let norm = lambda_norm(q);
            col_labels
                .iter()
                .map(|p| pair(p, q) / &norm)
                .collect()
        })
        .collect();
    PairingMatrix {
        degree: d,
        genus: g,
        points: n,
        row_labels,
        col_labels,
        entries,
    }
}

/// Exact rank of a rational matrix: denominators are cleared row by row and
/// the integer matrix is reduced by fraction-free Bareiss elimination with
/// deterministic pivoting. Invariant under row/column permutation and row
/// scaling.
pub fn exact_rank(rows: &[Vec<Rational>]) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    let (cleared, _) = linalg::clear_denominators(rows);
    linalg::bareiss_rank(cleared)
}

/// The rank `r(d; g, n)` of the pairing matrix — the rank of the
/// combinatorial kappa ring in degree `d`.
pub fn kappa_rank(d: u32, g: u32, n: u32) -> usize {
    pairing_matrix(d, g, n).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::refines;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn pair_examples() {
        let q = Profile::new(vec![(1, 2), (0, 3)]);
        assert_eq!(pair(&part(&[2]), &q), ratio(1, 24));
        assert_eq!(pair(&part(&[1, 1]), &q), ratio(1, 6));
        let q2 = Profile::new(vec![(1, 1), (0, 4)]);
        assert_eq!(pair(&part(&[1, 1]), &q2), ratio(1, 12));
        assert_eq!(pair(&part(&[2]), &q2), Rational::zero());
        // wrong total degree vanishes
        assert_eq!(pair(&part(&[3]), &q), Rational::zero());
    }

    #[test]
    fn lambda_norm_examples() {
        assert_eq!(lambda_norm(&Profile::new(vec![(1, 2), (0, 3)])), ratio(1, 24));
        assert_eq!(lambda_norm(&Profile::new(vec![(0, 5)])), rat(1));
        assert_eq!(
            lambda_norm(&Profile::new(vec![(2, 1), (1, 1)])),
            ratio(1, 27648)
        );
    }

    #[test]
    fn pairing_matrix_2_1_3() {
        let m = pairing_matrix(2, 1, 3);
        assert_eq!(m.col_labels, vec![part(&[2]), part(&[1, 1])]);
        assert_eq!(
            m.row_labels,
            vec![
                Profile::new(vec![(1, 2), (0, 3)]),
                Profile::new(vec![(0, 5)]),
                Profile::new(vec![(1, 1), (0, 4)])
            ]
        );
        assert_eq!(m.entries[0], vec![rat(1), rat(4)]);
        assert_eq!(m.entries[1], vec![rat(1), rat(6)]);
        assert_eq!(m.entries[2], vec![rat(0), rat(2)]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn normalized_diagonal_entry_is_one() {
        // distinct positive vertices: pair(shape(q), q) / Lambda(q) = 1
        let q = Profile::new(vec![(2, 1), (1, 2), (0, 3)]);
        let shape = q.shape();
        assert_eq!(pair(&shape, &q) / lambda_norm(&q), rat(1));
    }

    #[test]
    fn zero_pattern_follows_refinement() {
        for (d, g, n) in [(2u32, 1u32, 4u32), (4, 1, 4), (3, 2, 2)] {
            let m = pairing_matrix(d, g, n);
            for (r, q) in m.row_labels.iter().enumerate() {
                let shape = q.shape();
                for (c, p) in m.col_labels.iter().enumerate() {
                    if !m.entries[r][c].is_zero() {
                        assert!(refines(p, &shape).unwrap(), "p={p} shape={shape}");
                    }
                }
            }
        }
    }

    #[test]
    fn exact_rank_examples() {
        assert_eq!(exact_rank(&[vec![rat(1), rat(0)], vec![rat(1), rat(1)]]), 2);
        assert_eq!(exact_rank(&[vec![rat(1), rat(4)], vec![rat(1), rat(6)]]), 2);
        let zeros = vec![vec![Rational::zero(); 5]; 3];
        assert_eq!(exact_rank(&zeros), 0);
    }

    #[test]
    fn rank_invariant_under_row_scaling() {
        let m = pairing_matrix(3, 1, 4);
        let baseline = m.rank();
        // replace the Lambda normalization by pair(shape(q), q)
        let rescaled: Vec<Vec<Rational>> = m
            .row_labels
            .iter()
            .zip(&m.entries)
            .map(|(q, row)| {
                let alt = pair(&q.shape(), q);
                assert!(!alt.is_zero());
                let norm = lambda_norm(q);
                row.iter().map(|x| x * &norm / &alt).collect()
            })
            .collect();
        assert_eq!(exact_rank(&rescaled), baseline);
    }

    #[test]
    fn kappa_rank_examples() {
        assert_eq!(kappa_rank(2, 1, 3), 2);
        // top degree 3g-3+n: a single nonzero row
        assert_eq!(kappa_rank(4, 2, 1), 1);
    }

    #[test]
    fn dump_format() {
        let m = pairing_matrix(2, 1, 3);
        let dump = m.dump();
        let mut lines = dump.lines();
        assert_eq!(lines.next(), Some("R(2;1,3) rows=3 cols=2"));
        assert_eq!(lines.next(), Some("(1,2)(0,3)\t1/1\t4/1"));
        assert_eq!(lines.next(), Some("(0,5)\t1/1\t6/1"));
        assert_eq!(lines.next(), Some("(1,1)(0,4)\t0/1\t2/1"));
    }
}
