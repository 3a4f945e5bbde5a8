//! Exact psi-class intersection numbers `<tau_{a_1} ... tau_{a_n}>_g`.
//!
//! Genus 0 is a closed multinomial form, genus 1 a closed symmetric-function
//! formula, and genus >= 2 the DVV recursion, memoized on canonical keys.
//! The two-point family `n_j(h, m)`, its polynomial extension in `m`, and the
//! boundary values `P_j(h)` (computed by an independent KdV-derived
//! recursion) live here as well.
//!
//! All values are exact rationals. The memo table is a process-wide map that
//! supports concurrent readers with idempotent insertion: identical keys
//! always map to identical values, so racing computations are benign.

use crate::rational::{
    binom, binom_poly_int, factorial, multinomial, odd_double_factorial, parse_rational, rat,
    ratio, Rational,
};
use crate::{Error, Result, UniPoly};
use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use std::io::{BufRead, BufWriter, Write};
use std::path::Path;

/// Canonical key of a correlator: genus plus the full sorted exponent
/// vector, zeros included. Two integrand descriptions differing only by
/// marked-point relabeling produce identical keys.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TauKey {
    pub genus: u32,
    /// Sorted non-decreasing, length = number of marked points.
    pub exponents: Vec<u32>,
}

impl TauKey {
    /// Canonicalize an exponent list for the given genus.
    pub fn new(genus: u32, exps: &[u32]) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::EmptyExponents);
        }
        if !stable(genus, exps.len()) {
            return Err(Error::UnstableModuli {
                genus,
                points: exps.len(),
            });
        }
        let mut exponents = exps.to_vec();
        exponents.sort_unstable();
        Ok(TauKey { genus, exponents })
    }
}

fn stable(genus: u32, points: usize) -> bool {
    2 * genus as i64 - 2 + points as i64 > 0
}

/// Complex dimension `3g - 3 + n` of the moduli space.
fn dimension(genus: u32, points: usize) -> i64 {
    3 * genus as i64 - 3 + points as i64
}

static MEMO: Lazy<DashMap<TauKey, Rational>> = Lazy::new(DashMap::new);

/// Exact value of `<tau_{a_1} ... tau_{a_n}>_g`.
///
/// Returns zero when the total exponent degree does not match the dimension
/// `3g - 3 + n`; off-dimension terms vanish, which the pairing relies on.
pub fn psi_integral(genus: u32, exps: &[u32]) -> Result<Rational> {
    let key = TauKey::new(genus, exps)?;
    Ok(compute(key))
}

/// Memoized dispatch on a canonical, stability-checked key.
fn compute(key: TauKey) -> Rational {
    let total: i64 = key.exponents.iter().map(|&a| a as i64).sum();
    if total != dimension(key.genus, key.exponents.len()) {
        return Rational::zero();
    }
    if let Some(v) = MEMO.get(&key) {
        return v.clone();
    }
    let value = match key.genus {
        0 => genus0_value(&key.exponents),
        1 => genus1_value(&key.exponents),
        _ => dvv(key.genus, &key.exponents),
    };
    MEMO.insert(key, value.clone());
    value
}

/// Recursive entry point: sorts and dispatches without re-validating
/// stability (callers guarantee it).
fn psi_rec(genus: u32, mut exps: Vec<u32>) -> Rational {
    debug_assert!(stable(genus, exps.len()));
    exps.sort_unstable();
    compute(TauKey {
        genus,
        exponents: exps,
    })
}

/// Genus-0 correlator in closed form: `(n-3)! / prod(a_i!)`, the multinomial
/// coefficient `binom(n-3; a_1, ..., a_n)`. Independent of the recursion,
/// forced by repeated application of the String equation.
pub fn genus0_closed(exps: &[u32]) -> Result<Rational> {
    let n = exps.len();
    if n < 3 {
        return Err(Error::UnstableModuli { genus: 0, points: n });
    }
    let total: i64 = exps.iter().map(|&a| a as i64).sum();
    if total != n as i64 - 3 {
        return Ok(Rational::zero());
    }
    Ok(genus0_value(exps))
}

fn genus0_value(exps: &[u32]) -> Rational {
    let parts: Vec<u64> = exps.iter().map(|&a| a as u64).collect();
    Rational::from_integer(multinomial(&parts))
}

/// Genus-1 correlator in closed form:
/// `(1/24) binom(n; a) (1 - sum_{i>=2} sigma_i(a) / (i(i-1) binom(n,i)))`
/// with `sigma_i` the elementary symmetric functions of the exponents.
pub fn genus1_closed(exps: &[u32]) -> Result<Rational> {
    if exps.is_empty() {
        return Err(Error::EmptyExponents);
    }
    let n = exps.len();
    let total: i64 = exps.iter().map(|&a| a as i64).sum();
    if total != n as i64 {
        return Ok(Rational::zero());
    }
    Ok(genus1_value(exps))
}

fn genus1_value(exps: &[u32]) -> Rational {
    let n = exps.len();
    // sigma[i] = i-th elementary symmetric function of the exponents.
    let mut sigma = vec![BigInt::zero(); n + 1];
    sigma[0] = BigInt::one();
    for (count, &a) in exps.iter().enumerate() {
        for i in (1..=count + 1).rev() {
            let add = &sigma[i - 1] * BigInt::from(a);
            sigma[i] += add;
        }
    }
    let mut correction = Rational::zero();
    for i in 2..=n {
        if sigma[i].is_zero() {
            continue;
        }
        let denom = BigInt::from((i * (i - 1)) as u64) * binom(n as u64, i as u64);
        correction += Rational::new(sigma[i].clone(), denom);
    }
    let parts: Vec<u64> = exps.iter().map(|&a| a as u64).collect();
    let coeff = Rational::from_integer(multinomial(&parts));
    ratio(1, 24) * coeff * (rat(1) - correction)
}

/// DVV recursion on the largest exponent, for genus >= 2. Base values
/// `<tau_0^3>_0 = 1` and `<tau_1>_1 = 1/24` are supplied by the closed
/// forms of the lower genera.
fn dvv(genus: u32, exps: &[u32]) -> Rational {
    let n = exps.len();
    let d1 = *exps.last().expect("nonempty");
    debug_assert!(d1 >= 1, "dimension-matched genus >= 2 key has a positive exponent");
    let k = d1 as i64 - 1;
    let rest = &exps[..n - 1];

    // Group the remaining exponents by value; correlators only depend on
    // the multiset, so sub-multisets are enumerated with multiplicities.
    let mut groups: Vec<(u32, u64)> = Vec::new();
    for &v in rest {
        match groups.last_mut() {
            Some((value, count)) if *value == v => *count += 1,
            _ => groups.push((v, 1)),
        }
    }

    let mut total = Rational::zero();

    // Contact terms: merge the largest insertion with one of the others.
    for (gi, &(v, c)) in groups.iter().enumerate() {
        let mut coeff = BigInt::one();
        for t in v as i64..=k + v as i64 {
            coeff *= 2 * t + 1;
        }
        let mut sub: Vec<u32> = Vec::with_capacity(n - 1);
        for (gj, &(w, cw)) in groups.iter().enumerate() {
            let copies = if gi == gj { cw - 1 } else { cw };
            sub.extend(std::iter::repeat(w).take(copies as usize));
        }
        sub.push((k + v as i64) as u32);
        total += rat(coeff * c) * psi_rec(genus, sub);
    }

    // Splitting terms, weighted 1/2 for the ordered double count.
    let mut split = Rational::zero();
    for a in 0..=k - 1 {
        let b2 = k - 1 - a;
        let coeff = rat(odd_double_factorial(a) * odd_double_factorial(b2));

        // Non-separating: genus drops by one, both new insertions stay.
        let mut nonsep: Vec<u32> = rest.to_vec();
        nonsep.push(a as u32);
        nonsep.push(b2 as u32);
        split += coeff.clone() * psi_rec(genus - 1, nonsep);

        // Separating: distribute the remaining insertions over two stable
        // factors in all ways, counted with multiset multiplicities.
        for_each_submultiset(&groups, |chosen, mult| {
            let size_i: u64 = chosen.iter().map(|&(_, c)| c).sum();
            let rest_count = (n as u64 - 1) - size_i;
            let sum_i: i64 = chosen.iter().map(|&(v, c)| v as i64 * c as i64).sum();
            let rest_sum: i64 = rest.iter().map(|&x| x as i64).sum::<i64>() - sum_i;
            for g1 in 0..=genus {
                let g2 = genus - g1;
                let (n1, n2) = (size_i as usize + 1, rest_count as usize + 1);
                if !stable(g1, n1) || !stable(g2, n2) {
                    continue;
                }
                // Off-dimension factors vanish; skip them cheaply.
                if a + sum_i != dimension(g1, n1) || b2 + rest_sum != dimension(g2, n2) {
                    continue;
                }
                let mut left: Vec<u32> = Vec::with_capacity(n1);
                for &(v, c) in chosen {
                    left.extend(std::iter::repeat(v).take(c as usize));
                }
                left.push(a as u32);
                let mut right: Vec<u32> = Vec::with_capacity(n2);
                for (gj, &(w, cw)) in groups.iter().enumerate() {
                    let used = chosen[gj].1;
                    right.extend(std::iter::repeat(w).take((cw - used) as usize));
                }
                right.push(b2 as u32);
                split += coeff.clone()
                    * rat(mult.clone())
                    * psi_rec(g1, left)
                    * psi_rec(g2, right);
            }
        });
    }
    total += split * ratio(1, 2);

    total / rat(odd_double_factorial(d1 as i64))
}

/// Enumerate sub-multisets of `groups`, calling `f` with the chosen counts
/// (aligned with `groups`) and the number of labeled subsets realizing the
/// choice, `prod binom(c_v, chosen_v)`.
fn for_each_submultiset(groups: &[(u32, u64)], mut f: impl FnMut(&[(u32, u64)], &BigInt)) {
    let mut chosen: Vec<(u32, u64)> = groups.iter().map(|&(v, _)| (v, 0)).collect();
    fn rec(
        groups: &[(u32, u64)],
        idx: usize,
        chosen: &mut Vec<(u32, u64)>,
        mult: BigInt,
        f: &mut impl FnMut(&[(u32, u64)], &BigInt),
    ) {
        if idx == groups.len() {
            f(chosen, &mult);
            return;
        }
        let (_, c) = groups[idx];
        for take in 0..=c {
            chosen[idx].1 = take;
            rec(groups, idx + 1, chosen, &mult * binom(c, take), f);
        }
        chosen[idx].1 = 0;
    }
    rec(groups, 0, &mut chosen, BigInt::one(), &mut f);
}

/// Normalized two-point integral
/// `n_j(h, m) = 24^h h! int psi_1^{m-j} psi_2^j` over the moduli space of
/// genus-`h` curves with `m - 3h + 3` marked points.
pub fn two_point(h: u32, m: i64, j: u32) -> Result<Rational> {
    let lo = (3 * h as i64 - 1).max(1);
    if m < lo {
        return Err(Error::OutOfRange(format!(
            "m = {m} below geometric range (m >= {lo} for h = {h}); use two_point_poly for the polynomial extension"
        )));
    }
    if (j as i64) > m {
        return Err(Error::OutOfRange(format!("j = {j} exceeds m = {m}")));
    }
    Ok(two_point_geometric(h, m, j))
}

fn two_point_geometric(h: u32, m: i64, j: u32) -> Rational {
    let zeros = (m - 3 * h as i64 + 1) as usize;
    let mut exps = vec![(m - j as i64) as u32, j];
    exps.extend(std::iter::repeat(0).take(zeros));
    let norm = rat(BigInt::from(24).pow(h) * factorial(h as u64));
    norm * psi_integral(h, &exps).expect("geometric two-point key is stable")
}

/// The polynomial of degree <= j in `m` agreeing with `two_point(h, m, j)`
/// throughout the geometric range, by exact Lagrange interpolation on j + 1
/// consecutive integer nodes.
pub fn two_point_poly(h: u32, j: u32) -> UniPoly {
    let start = (3 * h as i64 - 1).max(j as i64).max(1);
    let nodes: Vec<(Rational, Rational)> = (start..=start + j as i64)
        .map(|m| (rat(m), two_point_geometric(h, m, j)))
        .collect();
    UniPoly::interpolate(&nodes)
}

/// `P_j` as a polynomial in the genus `h`, built from the KdV-derived
/// recursion with `P_0 = 1`, `P_{<0} = 0`, and `binom(h, t)` read as zero
/// for non-integer `t`. Independent of [`psi_integral`], so it serves as a
/// cross-check oracle for the boundary values `n_j(h, 3h - 1)`.
pub fn boundary_p_poly(j: u32) -> UniPoly {
    let mut polys: Vec<UniPoly> = vec![UniPoly::constant(rat(1))];
    for i in 1..=j as i64 {
        let inv = ratio(1, 2 * i + 1);
        let at = |idx: i64| -> UniPoly {
            if idx < 0 {
                UniPoly::zero()
            } else {
                polys[idx as usize].clone()
            }
        };
        let mut p = at(i - 1).scale(&(inv.clone() - rat(2)));
        p = &p + &at(i - 2).scale(&(inv.clone() - rat(1)));

        let mut binpart = UniPoly::zero();
        if i % 3 == 0 {
            binpart = &binpart + &UniPoly::binom_poly((i / 3) as u64);
        }
        if (i - 1) % 3 == 0 {
            binpart = &binpart + &UniPoly::binom_poly(((i - 1) / 3) as u64).scale(&rat(2));
        }
        p = &p + &binpart.scale(&inv);

        let mut kdv = UniPoly::zero();
        for t in 0..=4i64 {
            let prev = at(i - 1 - t);
            if prev.is_zero() {
                continue;
            }
            kdv = &kdv + &prev.shift(&rat(-1)).scale(&rat(binom(4, t as u64)));
        }
        let h_times = &UniPoly::monomial(rat(1), 1) * &kdv;
        p = &p + &h_times.scale(&(inv * rat(6)));

        polys.push(p);
    }
    polys.pop().expect("at least P_0")
}

/// Boundary value `P_j(h) = n_j(h, 3h - 1)` via the recursion polynomial.
pub fn boundary_p(h: u32, j: u32) -> Result<Rational> {
    if h < 1 || j as i64 > 3 * h as i64 - 1 {
        return Err(Error::OutOfRange(format!(
            "P_j(h) needs h >= 1 and 0 <= j <= 3h-1; got h = {h}, j = {j}"
        )));
    }
    Ok(boundary_p_poly(j).eval_int(h as i64))
}

/// `q_j(h, m) = sum_p binom(m - 3h, p) binom(h, (j-p)/3)`, the inhomogeneous
/// term of the two-point KdV replacement; the second factor is zero unless
/// `3 | (j - p)`, and binomials with negative upper index use the
/// falling-factorial polynomial extension.
pub fn q_sum(h: u32, j: u32, m: i64) -> Rational {
    let mut acc = Rational::zero();
    for p in 0..=j as i64 {
        let r = j as i64 - p;
        if r % 3 != 0 {
            continue;
        }
        acc += binom_poly_int(m - 3 * h as i64, p) * binom_poly_int(h as i64, r / 3);
    }
    acc
}

/// Number of memoized correlators.
pub fn cache_len() -> usize {
    MEMO.len()
}

/// Drop every memoized correlator (cold start; used by tests and benchmarks).
pub fn cache_clear() {
    MEMO.clear();
}

/// Outcome of loading a persisted memo cache.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CacheLoad {
    /// Entries inserted (or re-confirmed) into the memo table.
    pub loaded: usize,
    /// Malformed lines skipped.
    pub warnings: usize,
}

/// Persist the memo table, one entry per line in the form
/// `g;a_1,a_2,...,a_n;num/den` with exponents ascending, lines sorted
/// lexicographically. Returns the number of entries written.
pub fn cache_save(path: &Path) -> std::io::Result<usize> {
    let mut lines: Vec<String> = MEMO
        .iter()
        .map(|entry| {
            let key = entry.key();
            let exps: Vec<String> = key.exponents.iter().map(|a| a.to_string()).collect();
            format!(
                "{};{};{}/{}",
                key.genus,
                exps.join(","),
                entry.value().numer(),
                entry.value().denom()
            )
        })
        .collect();
    lines.sort_unstable();
    let mut out = BufWriter::new(std::fs::File::create(path)?);
    for line in &lines {
        writeln!(out, "{line}")?;
    }
    out.flush()?;
    Ok(lines.len())
}

/// Load a persisted memo cache. Well-formed entries are overlaid
/// idempotently (insertion never changes an already computed value);
/// malformed lines are skipped and counted.
pub fn cache_load(path: &Path) -> std::io::Result<CacheLoad> {
    let file = std::fs::File::open(path)?;
    let reader = std::io::BufReader::new(file);
    let mut loaded = 0usize;
    let mut warnings = 0usize;
    for line in reader.lines() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        match parse_cache_line(trimmed) {
            Some((key, value)) => {
                MEMO.entry(key).or_insert(value);
                loaded += 1;
            }
            None => warnings += 1,
        }
    }
    Ok(CacheLoad { loaded, warnings })
}

/// Save the memo table and immediately re-load it, returning the entry
/// count. Loading is an idempotent overlay, so the round trip never changes
/// any computed value.
pub fn cache_roundtrip(path: &Path) -> std::io::Result<usize> {
    let written = cache_save(path)?;
    let load = cache_load(path)?;
    debug_assert_eq!(load.loaded, written);
    debug_assert_eq!(load.warnings, 0);
    Ok(written)
}

fn parse_cache_line(line: &str) -> Option<(TauKey, Rational)> {
    let mut fields = line.split(';');
    let genus: u32 = fields.next()?.trim().parse().ok()?;
    let exp_field = fields.next()?;
    let value = parse_rational(fields.next()?)?;
    if fields.next().is_some() {
        return None;
    }
    let mut exponents: Vec<u32> = Vec::new();
    for tok in exp_field.split(',') {
        exponents.push(tok.trim().parse().ok()?);
    }
    if exponents.is_empty() || exponents.windows(2).any(|w| w[0] > w[1]) {
        return None;
    }
    if !stable(genus, exponents.len()) {
        return None;
    }
    let total: i64 = exponents.iter().map(|&a| a as i64).sum();
    if total != dimension(genus, exponents.len()) {
        return None;
    }
    Some((TauKey { genus, exponents }, value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn psi(g: u32, exps: &[u32]) -> Rational {
        psi_integral(g, exps).unwrap()
    }

    #[test]
    fn base_cases_and_frozen_values() {
        assert_eq!(psi(0, &[0, 0, 0]), rat(1));
        assert_eq!(psi(1, &[1]), ratio(1, 24));
        assert_eq!(psi(1, &[1, 1, 1]), ratio(1, 12));
        assert_eq!(psi(1, &[2, 0]), ratio(1, 24));
        assert_eq!(psi(2, &[4]), ratio(1, 1152));
        assert_eq!(psi(2, &[3, 2]), ratio(29, 5760));
    }

    #[test]
    fn dimension_mismatch_is_zero() {
        assert_eq!(psi(1, &[2]), Rational::zero());
        assert_eq!(psi(0, &[1, 0, 0]), Rational::zero());
        assert_eq!(psi(3, &[1, 1]), Rational::zero());
    }

    #[test]
    fn invalid_inputs_error() {
        assert_eq!(psi_integral(0, &[0, 0]), Err(Error::UnstableModuli { genus: 0, points: 2 }));
        assert_eq!(psi_integral(1, &[]), Err(Error::EmptyExponents));
        assert!(genus0_closed(&[0]).is_err());
        assert!(genus1_closed(&[]).is_err());
    }

    #[test]
    fn relabeling_invariance() {
        assert_eq!(psi(2, &[3, 2]), psi(2, &[2, 3]));
        assert_eq!(psi(1, &[2, 0, 1]), psi(1, &[0, 1, 2]));
    }

    #[test]
    fn genus0_closed_examples() {
        assert_eq!(genus0_closed(&[0, 0, 0]).unwrap(), rat(1));
        assert_eq!(genus0_closed(&[1, 1, 0, 0, 0]).unwrap(), rat(2));
        assert_eq!(genus0_closed(&[3, 0, 0, 0, 0, 0]).unwrap(), rat(1));
    }

    #[test]
    fn genus1_closed_examples() {
        assert_eq!(genus1_closed(&[1]).unwrap(), ratio(1, 24));
        // (n-1)!/24 for all-ones
        for n in 1..=6u32 {
            let exps = vec![1u32; n as usize];
            let expected = Rational::new(factorial(n as u64 - 1), 24.into());
            assert_eq!(genus1_closed(&exps).unwrap(), expected);
        }
        assert_eq!(genus1_closed(&[3, 0, 0]).unwrap(), ratio(1, 24));
    }

    #[test]
    fn two_point_values() {
        assert_eq!(two_point(0, 5, 2).unwrap(), rat(10));
        assert_eq!(two_point(1, 4, 2).unwrap(), rat(4));
        assert_eq!(two_point(2, 5, 2).unwrap(), ratio(29, 5));
        assert!(two_point(2, 3, 1).is_err());
        assert!(two_point(0, 3, 5).is_err());
    }

    #[test]
    fn two_point_poly_examples() {
        // n_2(0, m) = m(m-1)/2
        let p = two_point_poly(0, 2);
        assert_eq!(p.coeffs(), &[rat(0), ratio(-1, 2), ratio(1, 2)]);
        // n_2(1, m) = (m^2 - 3m + 4)/2
        let q = two_point_poly(1, 2);
        assert_eq!(q.coeffs(), &[rat(2), ratio(-3, 2), ratio(1, 2)]);
        // vanishing instance: n_3(1, 2) = 0
        assert_eq!(two_point_poly(1, 3).eval_int(2), Rational::zero());
    }

    #[test]
    fn boundary_p_values() {
        assert_eq!(boundary_p(1, 0).unwrap(), rat(1));
        assert_eq!(boundary_p(2, 1).unwrap(), rat(3)); // dilaton: 2h - 1
        assert!(boundary_p(1, 5).is_err());
        // leading coefficient 6^j / (2j+1)!!
        for j in 0..=6u32 {
            let poly = boundary_p_poly(j);
            assert_eq!(poly.degree(), Some(j as usize));
            let expected = Rational::new(
                BigInt::from(6).pow(j),
                odd_double_factorial(j as i64),
            );
            assert_eq!(poly.leading().unwrap(), &expected);
        }
    }

    #[test]
    fn q_sum_examples() {
        for h in 0..4u32 {
            for m in -2..8i64 {
                assert_eq!(q_sum(h, 0, m), rat(1));
            }
        }
        // q_3(1, m) = 1 + binom(m-3, 3)
        for m in -2..9i64 {
            assert_eq!(q_sum(1, 3, m), rat(1) + binom_poly_int(m - 3, 3));
        }
        assert_eq!(q_sum(2, 5, 4), Rational::zero());
    }

    #[test]
    fn memo_cold_and_warm_agree() {
        let warm = psi(2, &[3, 2]);
        cache_clear();
        let cold = psi(2, &[3, 2]);
        assert_eq!(warm, cold);
    }

    #[test]
    fn cache_roundtrip_line_format() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("memo.txt");
        cache_clear();
        let v = psi(1, &[1]);
        cache_save(&path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.lines().any(|l| l == "1;1;1/24"), "missing line in {text:?}");
        cache_clear();
        let load = cache_load(&path).unwrap();
        assert!(load.loaded >= 1);
        assert_eq!(load.warnings, 0);
        assert_eq!(psi(1, &[1]), v);
    }

    #[test]
    fn cache_load_skips_malformed() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("memo.txt");
        std::fs::write(
            &path,
            "not a line\n1;1;1/24\n0;0,0;1/1\n1;2,0;nonsense\n1;1,0,0;bad,exps;1/2\n",
        )
        .unwrap();
        let load = cache_load(&path).unwrap();
        assert_eq!(load.loaded, 1);
        assert_eq!(load.warnings, 4);
        // a corrupt cache never changes computed values
        assert_eq!(psi(1, &[2, 0]), ratio(1, 24));
    }
}
