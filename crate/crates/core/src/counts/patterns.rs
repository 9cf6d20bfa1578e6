//! Counting reducible polynomials by their factorization patterns.
//!
//! A monic polynomial of degree `n` factors uniquely into irreducibles. Group
//! the factors by degree `m_i`; within a group, `d_ij` distinct factors occur
//! with multiplicity `e_ij`. The number of polynomials with a given pattern is
//! `prod_i ff(I_{m_i}, sum_j d_ij) / prod_ij d_ij!`, so summing over all
//! non-trivial patterns gives `R_n` without any generating function.

use std::fmt;

use crate::counts::{count_all, Params};
use crate::error::{Error, Result};
use crate::qsym::Poly;
use crate::scalar::Scalar;

/// An integer partition, parts in non-increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition(pub Vec<usize>);

impl fmt::Display for Partition {
    /// Concise notation: parts written side by side, e.g. `211`. Parts of
    /// ten or more are bracketed, e.g. `[12]1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &p in &self.0 {
            if p >= 10 {
                write!(f, "[{p}]")?;
            } else {
                write!(f, "{p}")?;
            }
        }
        Ok(())
    }
}

/// All partitions of `n`, in reverse-lexicographic order (`n` first, `1^n` last).
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n >= 1 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// The partitions of `n` joined as `4, 31, 22, 211, 1111`.
pub fn partitions_listing(n: usize) -> String {
    enumerate_partitions(n)
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

/// The irreducible factors of one degree `m`: `(e, d)` says `d` distinct
/// factors each appear with multiplicity `e`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PatternGroup {
    pub m: usize,
    pub pairs: Vec<(usize, usize)>,
}

impl PatternGroup {
    fn degree(&self) -> usize {
        self.m * self.pairs.iter().map(|&(e, d)| e * d).sum::<usize>()
    }

    fn distinct(&self) -> usize {
        self.pairs.iter().map(|&(_, d)| d).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactorPattern {
    groups: Vec<PatternGroup>,
}

impl FactorPattern {
    /// Sorts groups by `m` and pairs by `e`; rejects repeated `m` or `e`
    /// values and zero entries.
    pub fn new(mut groups: Vec<PatternGroup>) -> Result<Self> {
        if groups.is_empty() {
            return Err(Error::InvalidParams("empty factor pattern".into()));
        }
        groups.sort_by_key(|g| g.m);
        for g in &mut groups {
            if g.m == 0 || g.pairs.is_empty() {
                return Err(Error::InvalidParams(format!("bad group for m = {}", g.m)));
            }
            g.pairs.sort_unstable();
            if g.pairs.iter().any(|&(e, d)| e == 0 || d == 0)
                || g.pairs.windows(2).any(|w| w[0].0 == w[1].0)
            {
                return Err(Error::InvalidParams(format!("bad pairs for m = {}", g.m)));
            }
        }
        if groups.windows(2).any(|w| w[0].m == w[1].m) {
            return Err(Error::InvalidParams("repeated factor degree".into()));
        }
        Ok(Self { groups })
    }

    pub fn groups(&self) -> &[PatternGroup] {
        &self.groups
    }

    /// `sum_i m_i sum_j e_ij d_ij`.
    pub fn degree(&self) -> usize {
        self.groups.iter().map(PatternGroup::degree).sum()
    }

    /// True for the single pattern of an irreducible polynomial.
    pub fn is_irreducible(&self) -> bool {
        self.groups.len() == 1 && self.groups[0].pairs == [(1, 1)]
    }
}

impl fmt::Display for FactorPattern {
    /// `(1: 2,#1; 2: 1,#1)` for a squared linear factor times a quadratic.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.groups.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{}: ", g.m)?;
            let pairs: Vec<String> = g.pairs.iter().map(|(e, d)| format!("{e},#{d}")).collect();
            write!(f, "{}", pairs.join(" "))?;
        }
        write!(f, ")")
    }
}

/// Every factorization pattern of degree `n` except the irreducible one.
pub fn enumerate_patterns(n: usize) -> Vec<FactorPattern> {
    let slots: Vec<(usize, usize)> = (1..=n)
        .flat_map(|m| (1..=n / m).map(move |e| (m, e)))
        .collect();
    fn go(
        slots: &[(usize, usize)],
        rest: usize,
        chosen: &mut Vec<(usize, usize, usize)>,
        out: &mut Vec<FactorPattern>,
    ) {
        if rest == 0 {
            let mut groups: Vec<PatternGroup> = Vec::new();
            for &(m, e, d) in chosen.iter() {
                match groups.last_mut() {
                    Some(g) if g.m == m => g.pairs.push((e, d)),
                    _ => groups.push(PatternGroup { m, pairs: vec![(e, d)] }),
                }
            }
            let pattern = FactorPattern { groups };
            if !pattern.is_irreducible() {
                out.push(pattern);
            }
            return;
        }
        let Some((&(m, e), tail)) = slots.split_first() else {
            return;
        };
        for d in (0..=rest / (m * e)).rev() {
            if d > 0 {
                chosen.push((m, e, d));
            }
            go(tail, rest - d * m * e, chosen, out);
            if d > 0 {
                chosen.pop();
            }
        }
    }
    let mut out = Vec::new();
    if n >= 1 {
        go(&slots, n, &mut Vec::new(), &mut out);
    }
    out
}

/// `prod_i ff(I_{m_i}, sum_j d_ij) / prod_ij d_ij!` with `irreducible[m] = I_m`.
pub fn pattern_count<T: Scalar>(irreducible: &[Poly<T>], pattern: &FactorPattern) -> Result<Poly<T>> {
    let mut num = Poly::one();
    let mut den: i64 = 1;
    for g in &pattern.groups {
        let im = irreducible.get(g.m).ok_or(Error::DegreeOutOfRange {
            n: g.m,
            nmax: irreducible.len().saturating_sub(1),
        })?;
        num = &num * &im.falling_factorial(g.distinct());
        for &(_, d) in &g.pairs {
            den *= (1..=d as i64).product::<i64>();
        }
    }
    Ok(num.scale(&T::ratio(1, den)))
}

/// Irreducible counts obtained purely from pattern sums, bootstrapped
/// upward from `I_1 = P_1`.
#[derive(Clone, Debug)]
pub struct PatternCounter<T: Scalar> {
    params: Params,
    irreducible: Vec<Poly<T>>,
}

impl<T: Scalar> PatternCounter<T> {
    pub fn new(params: Params) -> Self {
        let mut irreducible = vec![Poly::zero()];
        for m in 1..=params.nmax {
            let reducible: Poly<T> = enumerate_patterns(m)
                .iter()
                .map(|p| pattern_count(&irreducible, p).expect("lower degrees known"))
                .sum();
            irreducible.push(&count_all(params.r, m) - &reducible);
        }
        Self { params, irreducible }
    }

    /// `I_m` for `0 <= m <= nmax`.
    pub fn irreducible(&self) -> &[Poly<T>] {
        &self.irreducible
    }

    pub fn count_with_pattern(&self, pattern: &FactorPattern) -> Result<Poly<T>> {
        let n = pattern.degree();
        if n > self.params.nmax {
            return Err(Error::DegreeOutOfRange { n, nmax: self.params.nmax });
        }
        pattern_count(&self.irreducible, pattern)
    }

    pub fn count_reducible(&self, n: usize) -> Result<Poly<T>> {
        if !(1..=self.params.nmax).contains(&n) {
            return Err(Error::DegreeOutOfRange { n, nmax: self.params.nmax });
        }
        enumerate_patterns(n)
            .iter()
            .map(|p| self.count_with_pattern(p))
            .sum()
    }
}

/// `R_n` as the sum over all reducible factorization patterns.
pub fn count_reducible_by_patterns<T: Scalar>(params: &Params, n: usize) -> Result<Poly<T>> {
    PatternCounter::new(*params).count_reducible(n)
}
