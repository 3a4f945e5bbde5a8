//! Integer partitions and their refinement order, the Faber kappa/psi basis
//! change, vertex profiles of combinatorial cycles, and stable weighted
//! graph witnesses.
//!
//! A *profile* records, per vertex of a stable weighted graph, the genus and
//! the total number of special points (marked points plus edge ends). The
//! pairing of psi classes against a boundary cycle depends only on this
//! multiset, never on the graph itself, so profiles replace graphs in all
//! pairing computations; graphs appear only as existence witnesses.

use crate::rational::{rat, Rational};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

/// Weakly decreasing list of positive integers. The empty partition (of 0)
/// is allowed as the shape of profiles without positive-dimension vertices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Canonical partition from the given parts. Panics on zero parts.
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&a| a > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Degree `d(p)`: the sum of the parts.
    pub fn degree(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Length `|p|`: the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let text: Vec<String> = self.parts.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", text.join("+"))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parse the canonical textual form `a1+a2+...+ak`.
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for tok in s.split('+') {
            let a: u32 = tok
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad partition part {tok:?}")))?;
            if a == 0 {
                return Err(Error::Parse("partition parts must be positive".into()));
            }
            parts.push(a);
        }
        if parts.is_empty() {
            return Err(Error::Parse("empty partition".into()));
        }
        Ok(Partition::new(parts))
    }
}

/// All partitions of `d` (into at most `max_len` parts when given), in
/// reverse-lexicographic order.
pub fn partitions(d: u32, max_len: Option<usize>) -> Vec<Partition> {
    if d == 0 {
        return vec![Partition::empty()];
    }
    let cap = max_len.unwrap_or(d as usize);
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    enumerate_parts(d, d, cap, &mut prefix, &mut out);
    out
}

fn enumerate_parts(
    remaining: u32,
    max_part: u32,
    slots: usize,
    prefix: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: prefix.clone(),
        });
        return;
    }
    if slots == 0 {
        return;
    }
    let hi = remaining.min(max_part);
    for a in (1..=hi).rev() {
        // feasibility: the rest must fit in the remaining slots
        if remaining - a > a * (slots as u32 - 1) {
            continue;
        }
        prefix.push(a);
        enumerate_parts(remaining - a, a, slots - 1, prefix, out);
        prefix.pop();
    }
}

/// True iff `p1` refines `p2`: the parts of `p1` can be grouped into
/// `|p2|` disjoint blocks whose sums are exactly the parts of `p2`.
pub fn refines(p1: &Partition, p2: &Partition) -> Result<bool> {
    if p1.degree() != p2.degree() {
        return Err(Error::DegreeMismatch(p1.degree(), p2.degree()));
    }
    if p1.len() < p2.len() {
        return Ok(false);
    }
    let mut residuals: Vec<u32> = p2.parts.to_vec();
    Ok(assign_parts(&p1.parts, 0, &mut residuals))
}

fn assign_parts(parts: &[u32], idx: usize, residuals: &mut Vec<u32>) -> bool {
    if idx == parts.len() {
        return residuals.iter().all(|&r| r == 0);
    }
    let a = parts[idx];
    let mut tried: Vec<u32> = Vec::new();
    for i in 0..residuals.len() {
        let r = residuals[i];
        if r < a || tried.contains(&r) {
            continue;
        }
        tried.push(r);
        residuals[i] = r - a;
        if assign_parts(parts, idx + 1, residuals) {
            residuals[i] = r;
            return true;
        }
        residuals[i] = r;
    }
    false
}

/// A sum of kappa monomials with rational coefficients; a monomial is the
/// sorted multiset of its kappa indices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct KappaCombo {
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl KappaCombo {
    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    fn add(&mut self, monomial: Vec<u32>, coeff: Rational) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(monomial) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Coefficient of the kappa monomial with the given sorted indices.
    pub fn coeff(&self, monomial: &[u32]) -> Rational {
        let mut key = monomial.to_vec();
        key.sort_unstable_by(|a, b| b.cmp(a));
        self.terms
            .get(&key)
            .cloned()
            .unwrap_or_else(|| Rational::from_integer(0.into()))
    }
}

/// Faber's expansion of the psi class `psi(p)` in kappa monomials:
/// the sum over permutations of the parts, each contributing the product of
/// kappa classes indexed by its cycle sums. Enumerated over set partitions
/// of the index set; a block of size `b` accounts for `(b-1)!` cycles.
pub fn faber_expand(p: &Partition) -> KappaCombo {
    let parts = p.parts();
    let mut combo = KappaCombo::default();
    let mut blocks: Vec<(u32, usize)> = Vec::new(); // (block sum, block size)
    expand_blocks(parts, 0, &mut blocks, &BigInt::one(), &mut combo);
    combo
}

fn expand_blocks(
    parts: &[u32],
    idx: usize,
    blocks: &mut Vec<(u32, usize)>,
    coeff: &BigInt,
    combo: &mut KappaCombo,
) {
    if idx == parts.len() {
        let mut monomial: Vec<u32> = blocks.iter().map(|&(s, _)| s).collect();
        monomial.sort_unstable_by(|a, b| b.cmp(a));
        combo.add(monomial, rat(coeff.clone()));
        return;
    }
    let a = parts[idx];
    // join an existing block: a block of size b grows by one, multiplying
    // the cycle count by b
    for i in 0..blocks.len() {
        let (s, b) = blocks[i];
        blocks[i] = (s + a, b + 1);
        let c = coeff * BigInt::from(b as u64);
        expand_blocks(parts, idx + 1, blocks, &c, combo);
        blocks[i] = (s, b);
    }
    // start a new block
    blocks.push((a, 1));
    expand_blocks(parts, idx + 1, blocks, coeff, combo);
    blocks.pop();
}

/// The basis-change matrix from psi classes to kappa monomials in degree
/// `d`, with rows and columns labeled by `partitions(d)` grouped by length
/// (longer first). Unit upper triangular in the length partial order.
#[derive(Debug, Clone)]
pub struct FaberMatrix {
    pub labels: Vec<Partition>,
    pub entries: Vec<Vec<Rational>>,
}

pub fn faber_matrix(d: u32) -> FaberMatrix {
    let mut labels = partitions(d, None);
    labels.sort_by_key(|p| std::cmp::Reverse(p.len()));
    let index: BTreeMap<Vec<u32>, usize> = labels
        .iter()
        .enumerate()
        .map(|(i, p)| (p.parts().to_vec(), i))
        .collect();
    let entries = labels
        .iter()
        .map(|p| {
            let mut row = vec![Rational::from_integer(0.into()); labels.len()];
            for (monomial, coeff) in faber_expand(p).terms() {
                row[index[monomial]] = coeff.clone();
            }
            row
        })
        .collect();
    FaberMatrix { labels, entries }
}

/// Canonical multiset of per-vertex `(genus, special points)` pairs, sorted
/// in decreasing order. Every pair lies in `Q = {(g, m) : m >= 1, 2g + m > 2}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Profile {
    vertices: Vec<(u32, u32)>,
}

impl Profile {
    /// Canonical profile from the given vertex pairs. Panics if a pair is
    /// outside `Q`.
    pub fn new(mut vertices: Vec<(u32, u32)>) -> Self {
        for &(g, m) in &vertices {
            assert!(m >= 1 && 2 * g + m > 2, "vertex ({g},{m}) outside Q");
        }
        vertices.sort_unstable_by(|a, b| b.cmp(a));
        Profile { vertices }
    }

    pub fn vertices(&self) -> &[(u32, u32)] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The shape `p(q)`: the partition formed by the positive vertex
    /// dimensions `3g_i - 3 + m_i`.
    pub fn shape(&self) -> Partition {
        let parts: Vec<u32> = self
            .vertices
            .iter()
            .filter_map(|&(g, m)| {
                let delta = 3 * g as i64 - 3 + m as i64;
                (delta > 0).then_some(delta as u32)
            })
            .collect();
        if parts.is_empty() {
            Partition::empty()
        } else {
            Partition::new(parts)
        }
    }

    /// Total special points over all vertices.
    pub fn total_points(&self) -> u32 {
        self.vertices.iter().map(|&(_, m)| m).sum()
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(g, m) in &self.vertices {
            write!(f, "({g},{m})")?;
        }
        Ok(())
    }
}

impl FromStr for Profile {
    type Err = Error;

    /// Parse the canonical textual form `(g1,m1)(g2,m2)...`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let mut vertices = Vec::new();
        let bad = || Error::Parse(format!("bad profile {s:?}"));
        for chunk in body.split_inclusive(')') {
            let chunk = chunk.trim();
            let inner = chunk
                .strip_prefix('(')
                .and_then(|c| c.strip_suffix(')'))
                .ok_or_else(bad)?;
            let (gs, ms) = inner.split_once(',').ok_or_else(bad)?;
            let g: u32 = gs.trim().parse().map_err(|_| bad())?;
            let m: u32 = ms.trim().parse().map_err(|_| bad())?;
            if m < 1 || 2 * g + m <= 2 {
                return Err(Error::Parse(format!("vertex ({g},{m}) outside Q")));
            }
            vertices.push((g, m));
        }
        if vertices.is_empty() {
            return Err(bad());
        }
        Ok(Profile::new(vertices))
    }
}

/// All profiles `q` with shape `p` realizable by a stable weighted graph of
/// total genus `g` with `n` marked points: one per admissible genera tuple,
/// with `(0,3)` vertices padding the count, deduplicated as canonical
/// multisets. Empty when no profile exists.
pub fn profiles(p: &Partition, g: u32, n: u32) -> Vec<Profile> {
    let k = p.len();
    let d = p.degree() as i64;
    let dim = 3 * g as i64 - 3 + n as i64;
    if n == 0 || k == 0 || d > dim {
        return Vec::new();
    }
    let caps: Vec<u32> = p
        .parts()
        .iter()
        .map(|&a| ((a + 2) / 3).min(g))
        .collect();
    let lower = (d + k as i64 + 2 - (2 * g as i64 + n as i64)).max(0);
    let mut found: BTreeSet<Profile> = BTreeSet::new();
    let mut genera = vec![0u32; k];
    enumerate_genera(p, g, n, &caps, lower, 0, 0, &mut genera, &mut found);
    found.into_iter().rev().collect()
}

#[allow(clippy::too_many_arguments)]
fn enumerate_genera(
    p: &Partition,
    g: u32,
    n: u32,
    caps: &[u32],
    lower: i64,
    idx: usize,
    sum: u32,
    genera: &mut Vec<u32>,
    found: &mut BTreeSet<Profile>,
) {
    let k = p.len();
    if idx == k {
        if (sum as i64) < lower {
            return;
        }
        let d = p.degree() as i64;
        let total = 2 * g as i64 - 2 + n as i64 + sum as i64 - d;
        debug_assert!(total >= k as i64);
        let mut vertices: Vec<(u32, u32)> = p
            .parts()
            .iter()
            .zip(genera.iter())
            .map(|(&a, &gi)| (gi, a + 3 - 3 * gi))
            .collect();
        vertices.extend(std::iter::repeat((0, 3)).take((total - k as i64) as usize));
        found.insert(Profile::new(vertices));
        return;
    }
    let remaining_cap: u32 = caps[idx..].iter().sum();
    if (sum + remaining_cap) < lower.max(0) as u32 {
        return;
    }
    for gi in 0..=caps[idx] {
        if sum + gi > g {
            break;
        }
        genera[idx] = gi;
        enumerate_genera(p, g, n, caps, lower, idx + 1, sum + gi, genera, found);
    }
    genera[idx] = 0;
}

/// The set `Q(d; g, n)` of all profiles across partitions of `d`, in
/// partition-major deterministic order, together with the achieved set
/// `P(d; g, n)` of shapes.
pub fn profiles_all(d: u32, g: u32, n: u32) -> (Vec<Profile>, Vec<Partition>) {
    let mut all = Vec::new();
    let mut achieved = Vec::new();
    for p in partitions(d, None) {
        let qs = profiles(&p, g, n);
        if !qs.is_empty() {
            achieved.push(p);
            all.extend(qs);
        }
    }
    (all, achieved)
}

/// A stable weighted graph: vertices carry `(genus, marked points)`, edges
/// are an unordered multiset of vertex-index pairs (loops allowed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableWeightedGraph {
    /// Per-vertex `(g_i, n_i)` weights.
    pub vertices: Vec<(u32, u32)>,
    /// Unordered edges, normalized as `(min, max)` and sorted.
    pub edges: Vec<(usize, usize)>,
}

impl StableWeightedGraph {
    pub fn new(vertices: Vec<(u32, u32)>, mut edges: Vec<(usize, usize)>) -> Self {
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        StableWeightedGraph { vertices, edges }
    }

    /// Edge ends per vertex; loops count twice.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.vertices.len()];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// The profile `q_G`: per-vertex `(g_i, n_i + d_i)`.
    pub fn profile(&self) -> Profile {
        let deg = self.degrees();
        Profile::new(
            self.vertices
                .iter()
                .zip(deg)
                .map(|(&(g, n), d)| (g, n + d as u32))
                .collect(),
        )
    }
}

/// Check connectivity and per-vertex stability (`2g_i + n_i + d_i > 2`);
/// return `(g(G), n(G))`.
pub fn validate_graph(graph: &StableWeightedGraph) -> Result<(u32, u32)> {
    let v = graph.vertices.len();
    if v == 0 {
        return Err(Error::Disconnected);
    }
    let deg = graph.degrees();
    for (i, (&(g, n), d)) in graph.vertices.iter().zip(&deg).enumerate() {
        if 2 * g as u64 + n as u64 + *d as u64 <= 2 {
            return Err(Error::UnstableVertex(i));
        }
    }
    let mut adjacency = vec![Vec::new(); v];
    for &(a, b) in &graph.edges {
        adjacency[a].push(b);
        adjacency[b].push(a);
    }
    let mut seen = vec![false; v];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let mut reached = 1;
    while let Some(i) = queue.pop_front() {
        for &j in &adjacency[i] {
            if !seen[j] {
                seen[j] = true;
                reached += 1;
                queue.push_back(j);
            }
        }
    }
    if reached < v {
        return Err(Error::Disconnected);
    }
    let genus_sum: i64 = graph.vertices.iter().map(|&(g, _)| g as i64).sum();
    let genus = genus_sum + graph.edges.len() as i64 - v as i64 + 1;
    let points: u32 = graph.vertices.iter().map(|&(_, n)| n).sum();
    Ok((genus as u32, points))
}

/// Construct a connected stable weighted graph with `e` edges whose profile
/// is `q`, following the constructive existence proof: when every vertex has
/// at least two special points, lay a path through the sorted vertices and
/// pair the remaining slots lexicographically; otherwise detach a
/// single-point vertex, recurse, and re-attach it by one edge.
pub fn witness_graph(q: &Profile, e: u32) -> Result<StableWeightedGraph> {
    let m = q.len();
    if m == 0 || (e as i64) < m as i64 - 1 || (q.total_points() as i64) < 2 * e as i64 {
        return Err(Error::NoWitness);
    }
    let graph = build_witness(q.vertices().to_vec(), e);
    validate_graph(&graph).expect("constructed witness is valid");
    debug_assert_eq!(graph.profile(), *q);
    Ok(graph)
}

fn build_witness(verts: Vec<(u32, u32)>, e: u32) -> StableWeightedGraph {
    let m = verts.len();
    if m == 1 && e == 0 {
        return StableWeightedGraph::new(vec![verts[0]], Vec::new());
    }
    let min_m = verts.iter().map(|&(_, mi)| mi).min().unwrap();
    if min_m >= 2 {
        return path_witness(&verts, e);
    }
    // detach one single-point vertex, build the rest with one fewer edge,
    // then attach by a single edge to the first vertex with a spare point
    let detach = verts
        .iter()
        .position(|&(_, mi)| mi == 1)
        .expect("some vertex has a single point");
    let (g0, _) = verts[detach];
    let mut rest = verts;
    rest.remove(detach);
    let sub = build_witness(rest, e - 1);
    let target = sub
        .vertices
        .iter()
        .position(|&(_, n)| n >= 1)
        .expect("spare marked point exists by the counting argument");
    let mut vertices = sub.vertices.clone();
    vertices[target].1 -= 1;
    let new_idx = vertices.len();
    vertices.push((g0, 0));
    let mut edges = sub.edges;
    edges.push((target, new_idx));
    StableWeightedGraph::new(vertices, edges)
}

/// All vertices have >= 2 special points: connect them along a path using
/// slot pairs ((i,2),(i+1,1)), then pair leftover slots lexicographically.
fn path_witness(verts: &[(u32, u32)], e: u32) -> StableWeightedGraph {
    let m = verts.len();
    let mut used: Vec<Vec<bool>> = verts.iter().map(|&(_, mi)| vec![false; mi as usize]).collect();
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(e as usize);
    for i in 0..m.saturating_sub(1) {
        edges.push((i, i + 1));
        used[i][1] = true;
        used[i + 1][0] = true;
    }
    let extra = e as usize - (m - 1);
    if extra > 0 {
        let mut free = Vec::new();
        'outer: for (i, slots) in used.iter().enumerate() {
            for (j, taken) in slots.iter().enumerate() {
                if !taken {
                    free.push((i, j));
                    if free.len() == 2 * extra {
                        break 'outer;
                    }
                }
            }
        }
        debug_assert_eq!(free.len(), 2 * extra);
        for pair in free.chunks_exact(2) {
            edges.push((pair[0].0, pair[1].0));
        }
        for &(i, j) in &free {
            used[i][j] = true;
        }
    }
    let vertices: Vec<(u32, u32)> = verts
        .iter()
        .zip(&used)
        .map(|(&(g, mi), slots)| {
            let degree = slots.iter().filter(|&&t| t).count() as u32;
            (g, mi - degree)
        })
        .collect();
    StableWeightedGraph::new(vertices, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn partition_enumeration() {
        let p42 = partitions(4, Some(2));
        assert_eq!(p42, vec![part(&[4]), part(&[3, 1]), part(&[2, 2])]);
        assert_eq!(partitions(5, None).len(), 7);
        assert_eq!(partitions(1, None), vec![part(&[1])]);
        // reverse-lexicographic order
        let p4 = partitions(4, None);
        assert_eq!(
            p4,
            vec![
                part(&[4]),
                part(&[3, 1]),
                part(&[2, 2]),
                part(&[2, 1, 1]),
                part(&[1, 1, 1, 1])
            ]
        );
    }

    #[test]
    fn partition_count_matches_brute_force_triples() {
        let mut count = 0u32;
        for a1 in 1..=11u32 {
            for a2 in 0..=a1 {
                for a3 in 0..=a2 {
                    if a1 + a2 + a3 == 11 {
                        count += 1;
                    }
                }
            }
        }
        assert_eq!(partitions(11, Some(3)).len() as u32, count);
    }

    #[test]
    fn partition_text_roundtrip() {
        let p: Partition = "3+2+1".parse().unwrap();
        assert_eq!(p, part(&[3, 2, 1]));
        assert_eq!(p.to_string(), "3+2+1");
        assert!("3+0".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
    }

    #[test]
    fn refinement_examples() {
        assert!(refines(&part(&[1, 1]), &part(&[2])).unwrap());
        assert!(!refines(&part(&[2]), &part(&[1, 1])).unwrap());
        assert!(refines(&part(&[3, 2, 1]), &part(&[3, 3])).unwrap());
        assert!(refines(&part(&[2, 2, 1, 1]), &part(&[3, 3])).unwrap());
        assert!(!refines(&part(&[4, 1, 1]), &part(&[3, 3])).unwrap());
        assert!(refines(&part(&[2]), &part(&[1, 1])).is_ok());
        assert!(refines(&part(&[2]), &part(&[3])).is_err());
    }

    #[test]
    fn refinement_is_partial_order_through_degree_9() {
        for d in 1..=9u32 {
            let ps = partitions(d, None);
            for a in &ps {
                assert!(refines(a, a).unwrap());
                for b in &ps {
                    let ab = refines(a, b).unwrap();
                    if ab && refines(b, a).unwrap() {
                        assert_eq!(a, b);
                    }
                    for c in &ps {
                        if ab && refines(b, c).unwrap() {
                            assert!(refines(a, c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn faber_expansion_small_cases() {
        // psi(d) = kappa_d
        let single = faber_expand(&part(&[5]));
        assert_eq!(single.terms().len(), 1);
        assert_eq!(single.coeff(&[5]), rat(1));
        // psi(a,b) = kappa_a kappa_b + kappa_{a+b}
        let pair = faber_expand(&part(&[3, 1]));
        assert_eq!(pair.coeff(&[3, 1]), rat(1));
        assert_eq!(pair.coeff(&[4]), rat(1));
        // psi(a,b,c): 2 kappa_{a+b+c} from the two 3-cycles
        let triple = faber_expand(&part(&[3, 2, 1]));
        assert_eq!(triple.coeff(&[3, 2, 1]), rat(1));
        assert_eq!(triple.coeff(&[5, 1]), rat(1));
        assert_eq!(triple.coeff(&[4, 2]), rat(1));
        assert_eq!(triple.coeff(&[3, 3]), rat(1));
        assert_eq!(triple.coeff(&[6]), rat(2));
    }

    #[test]
    fn faber_matrix_degree_2() {
        let fm = faber_matrix(2);
        assert_eq!(fm.labels, vec![part(&[1, 1]), part(&[2])]);
        assert_eq!(fm.entries[0], vec![rat(1), rat(1)]);
        assert_eq!(fm.entries[1], vec![rat(0), rat(1)]);
    }

    #[test]
    fn faber_matrix_unit_triangular() {
        for d in 1..=6u32 {
            let fm = faber_matrix(d);
            for (i, row) in fm.entries.iter().enumerate() {
                assert_eq!(row[i], rat(1));
                for (j, entry) in row.iter().enumerate().take(i) {
                    assert_eq!(entry, &rat(0), "d={d} below-diagonal ({i},{j})");
                    let _ = j;
                }
            }
        }
    }

    #[test]
    fn profile_shape_and_text() {
        let q = Profile::new(vec![(0, 3), (1, 2)]);
        assert_eq!(q.vertices(), &[(1, 2), (0, 3)]);
        assert_eq!(q.shape(), part(&[2]));
        assert_eq!(q.to_string(), "(1,2)(0,3)");
        let parsed: Profile = "(0,3)(1,2)".parse().unwrap();
        assert_eq!(parsed, q);
        assert!("(0,2)".parse::<Profile>().is_err());
        assert!("(1,2".parse::<Profile>().is_err());
    }

    #[test]
    fn profiles_examples() {
        // ((2), g=1, n=3): two profiles
        let qs = profiles(&part(&[2]), 1, 3);
        assert_eq!(
            qs,
            vec![
                Profile::new(vec![(1, 2), (0, 3)]),
                Profile::new(vec![(0, 5)])
            ]
        );
        // genus-1 codimension-one family: exactly two profiles
        let (a1, a2, n) = (5u32, 3u32, 9u32);
        let qs = profiles(&part(&[a1, a2]), 1, n);
        assert_eq!(
            qs,
            vec![
                Profile::new(vec![(1, a1), (0, a2 + 3)]),
                Profile::new(vec![(1, a2), (0, a1 + 3)])
            ]
        );
        // top degree: the single-vertex profile
        let (g, n) = (2u32, 3u32);
        let top = 3 * g - 3 + n;
        let qs = profiles(&part(&[top]), g, n);
        assert!(qs.contains(&Profile::new(vec![(g, n)])));
    }

    #[test]
    fn profiles_all_examples() {
        let (qs, achieved) = profiles_all(2, 1, 3);
        assert_eq!(qs.len(), 3);
        assert!(qs.contains(&Profile::new(vec![(1, 1), (0, 4)])));
        assert_eq!(achieved, vec![part(&[2]), part(&[1, 1])]);
        // top degree: single profile
        let (qs, achieved) = profiles_all(6, 2, 3);
        assert_eq!(qs, vec![Profile::new(vec![(2, 3)])]);
        assert_eq!(achieved, vec![part(&[6])]);
    }

    #[test]
    fn achieved_set_matches_bounded_partitions() {
        // P(d; g, n) = P(d, 3g - 2 + n - d), spot case (4, 2, 4)
        let (_, achieved) = profiles_all(4, 2, 4);
        let mut expected = partitions(4, Some((3 * 2 - 2 + 4 - 4) as usize));
        expected.sort();
        let mut got = achieved;
        got.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn witness_graph_examples() {
        let q = Profile::new(vec![(1, 2), (0, 3)]);
        let g = witness_graph(&q, 1).unwrap();
        assert_eq!(g.vertices, vec![(1, 1), (0, 2)]);
        assert_eq!(g.edges, vec![(0, 1)]);
        assert_eq!(validate_graph(&g).unwrap(), (1, 3));

        let q = Profile::new(vec![(0, 3), (0, 3)]);
        let g = witness_graph(&q, 1).unwrap();
        assert_eq!(validate_graph(&g).unwrap(), (0, 4));

        let q = Profile::new(vec![(1, 1)]);
        let g = witness_graph(&q, 0).unwrap();
        assert_eq!(g.vertices, vec![(1, 1)]);
        assert!(g.edges.is_empty());
        assert_eq!(validate_graph(&g).unwrap(), (1, 1));

        // single-point vertices force the attach branch
        let q = Profile::new(vec![(1, 1), (1, 1), (0, 4)]);
        let g = witness_graph(&q, 2).unwrap();
        assert_eq!(g.profile(), q);
        assert_eq!(validate_graph(&g).unwrap(), (2, 2));

        assert_eq!(
            witness_graph(&Profile::new(vec![(1, 1), (1, 1)]), 0),
            Err(Error::NoWitness)
        );
    }

    #[test]
    fn witness_graph_loops() {
        // loop on a single vertex: (0,5) with one edge
        let q = Profile::new(vec![(0, 5)]);
        let g = witness_graph(&q, 1).unwrap();
        assert_eq!(g.edges, vec![(0, 0)]);
        assert_eq!(validate_graph(&g).unwrap(), (1, 3));
        assert_eq!(g.profile(), q);
    }

    #[test]
    fn validate_graph_errors() {
        let lonely = StableWeightedGraph::new(vec![(1, 1)], vec![]);
        assert_eq!(validate_graph(&lonely).unwrap(), (1, 1));
        let unstable = StableWeightedGraph::new(vec![(0, 1), (1, 2)], vec![(0, 1)]);
        assert_eq!(validate_graph(&unstable), Err(Error::UnstableVertex(0)));
        let disconnected = StableWeightedGraph::new(vec![(1, 1), (1, 1)], vec![]);
        assert_eq!(validate_graph(&disconnected), Err(Error::Disconnected));
        // a loop counts twice toward the degree
        let looped = StableWeightedGraph::new(vec![(0, 1)], vec![(0, 0)]);
        assert_eq!(validate_graph(&looped).unwrap(), (1, 1));
    }
}
