//! Exact minimum distance by exhaustive enumeration or by information-set
//! (Brouwer-Zimmermann) enumeration.
//!
//! Both engines split their enumeration into independent chunks that run on
//! the rayon pool; chunk results are merged by `(weight, chunk index)`, so the
//! reported certificate does not depend on the number of workers.

use rayon::prelude::*;
use serde::Serialize;

use super::{CyclicCode, LinearCode};
use crate::arith::binomial;
use crate::error::{Error, Result};
use crate::gf::{Elem, FieldRef};

/// Largest `q^k` handled by the exhaustive engine under [`Engine::Auto`].
pub const EXHAUSTIVE_LIMIT: u128 = 1 << 24;

/// Default enumeration budget, in messages.
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Exhaustive,
    InformationSet,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Engine {
    #[default]
    Auto,
    Exhaustive,
    InformationSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DistanceOptions {
    pub budget: u64,
    pub engine: Engine,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        DistanceOptions {
            budget: DEFAULT_BUDGET,
            engine: Engine::Auto,
        }
    }
}

/// Result of a distance computation. `certificate` is a codeword of weight
/// `d` (trailing zeros trimmed); when `exact` is false, `d` is only an upper
/// bound and `proved_lower_bound` the bound reached before the budget ran out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightReport {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub exact: bool,
    pub method: Method,
    pub certificate: Vec<Elem>,
    pub proved_lower_bound: usize,
    pub enumerated: u64,
}

/// Minimum distance of a cyclic code.
pub fn min_distance(code: &CyclicCode, budget: u64) -> Result<WeightReport> {
    min_distance_with(
        &code.to_linear(),
        &DistanceOptions {
            budget,
            engine: Engine::Auto,
        },
    )
}

/// Minimum distance of an explicit linear code.
pub fn min_distance_with(code: &LinearCode, opts: &DistanceOptions) -> Result<WeightReport> {
    let q = code.field().q() as u128;
    let size = q.checked_pow(code.dimension() as u32);
    let engine = match opts.engine {
        Engine::Auto if size.is_some_and(|s| s <= EXHAUSTIVE_LIMIT) => Engine::Exhaustive,
        Engine::Auto => Engine::InformationSet,
        e => e,
    };
    let report = match engine {
        Engine::Exhaustive => with_kernel(code.field(), code.rows(), |k| exhaustive_min(k, opts.budget))?,
        _ => information_set_min(code, opts.budget)?,
    };
    Ok(report)
}

/// Number of codewords of each weight `0..=n`. Requires `q^k <= 2^24`.
pub fn weight_distribution(code: &LinearCode) -> Result<Vec<u64>> {
    let q = code.field().q() as u128;
    match q.checked_pow(code.dimension() as u32) {
        Some(s) if s <= EXHAUSTIVE_LIMIT => {}
        _ => {
            return Err(Error::TooLarge(format!(
                "{}^{} codewords",
                q,
                code.dimension()
            )))
        }
    }
    with_kernel(code.field(), code.rows(), |k| Ok(exhaustive_histogram(k)))
}

// ---------------------------------------------------------------------------
// symbol kernels

trait Kernel: Sync {
    type W: Copy + Default + Send + Sync;
    fn k(&self) -> usize;
    fn n(&self) -> usize;
    fn q(&self) -> usize;
    fn width(&self) -> usize;
    /// `out = acc + c * row_i`
    fn axpy(&self, out: &mut [Self::W], acc: &[Self::W], i: usize, c: usize);
    /// weight of `acc + c * row_i`
    fn weight_of_sum(&self, acc: &[Self::W], i: usize, c: usize) -> usize;
    fn weight(&self, v: &[Self::W]) -> usize;
    fn unpack(&self, v: &[Self::W]) -> Vec<Elem>;
}

struct BinaryKernel {
    rows: Vec<u64>,
    words: usize,
    n: usize,
    k: usize,
}

impl Kernel for BinaryKernel {
    type W = u64;

    fn k(&self) -> usize {
        self.k
    }
    fn n(&self) -> usize {
        self.n
    }
    fn q(&self) -> usize {
        2
    }
    fn width(&self) -> usize {
        self.words
    }

    #[inline]
    fn axpy(&self, out: &mut [u64], acc: &[u64], i: usize, _c: usize) {
        let row = &self.rows[i * self.words..(i + 1) * self.words];
        for ((o, a), r) in out.iter_mut().zip(acc).zip(row) {
            *o = a ^ r;
        }
    }

    #[inline]
    fn weight_of_sum(&self, acc: &[u64], i: usize, _c: usize) -> usize {
        let row = &self.rows[i * self.words..(i + 1) * self.words];
        acc.iter()
            .zip(row)
            .map(|(a, r)| (a ^ r).count_ones() as usize)
            .sum()
    }

    #[inline]
    fn weight(&self, v: &[u64]) -> usize {
        v.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn unpack(&self, v: &[u64]) -> Vec<Elem> {
        (0..self.n)
            .map(|j| Elem((v[j / 64] >> (j % 64)) & 1))
            .collect()
    }
}

/// Fields with at most 256 elements: symbols are reps, arithmetic by table,
/// and every nonzero multiple of every row is precomputed.
struct SmallKernel {
    q: usize,
    n: usize,
    k: usize,
    add: Vec<u8>,
    scaled: Vec<u8>,
}

impl SmallKernel {
    #[inline]
    fn scaled_row(&self, i: usize, c: usize) -> &[u8] {
        let start = ((i * (self.q - 1)) + (c - 1)) * self.n;
        &self.scaled[start..start + self.n]
    }
}

impl Kernel for SmallKernel {
    type W = u8;

    fn k(&self) -> usize {
        self.k
    }
    fn n(&self) -> usize {
        self.n
    }
    fn q(&self) -> usize {
        self.q
    }
    fn width(&self) -> usize {
        self.n
    }

    #[inline]
    fn axpy(&self, out: &mut [u8], acc: &[u8], i: usize, c: usize) {
        let row = self.scaled_row(i, c);
        for ((o, &a), &r) in out.iter_mut().zip(acc).zip(row) {
            *o = self.add[a as usize * self.q + r as usize];
        }
    }

    #[inline]
    fn weight_of_sum(&self, acc: &[u8], i: usize, c: usize) -> usize {
        let row = self.scaled_row(i, c);
        acc.iter()
            .zip(row)
            .filter(|(&a, &r)| self.add[a as usize * self.q + r as usize] != 0)
            .count()
    }

    #[inline]
    fn weight(&self, v: &[u8]) -> usize {
        v.iter().filter(|&&s| s != 0).count()
    }

    fn unpack(&self, v: &[u8]) -> Vec<Elem> {
        v.iter().map(|&s| Elem(s as u64)).collect()
    }
}

enum AnyKernel {
    Binary(BinaryKernel),
    Small(SmallKernel),
}

fn build_kernel(field: &FieldRef, rows: &[Vec<Elem>]) -> Result<AnyKernel> {
    let k = rows.len();
    let n = rows.first().map_or(0, |r| r.len());
    let q = field.q();
    if q == 2 {
        let words = n.div_ceil(64);
        let mut packed = vec![0u64; k * words];
        for (i, row) in rows.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if !e.is_zero() {
                    packed[i * words + j / 64] |= 1 << (j % 64);
                }
            }
        }
        return Ok(AnyKernel::Binary(BinaryKernel {
            rows: packed,
            words,
            n,
            k,
        }));
    }
    if q > 256 {
        return Err(Error::TooLarge(format!(
            "distance engines support fields of order at most 256, got {q}"
        )));
    }
    let qs = q as usize;
    let mut add = vec![0u8; qs * qs];
    for a in 0..qs {
        for b in 0..qs {
            add[a * qs + b] = field.add(Elem(a as u64), Elem(b as u64)).0 as u8;
        }
    }
    let mut scaled = Vec::with_capacity(k * (qs - 1) * n);
    for row in rows {
        for c in 1..qs {
            scaled.extend(row.iter().map(|&e| field.mul(e, Elem(c as u64)).0 as u8));
        }
    }
    Ok(AnyKernel::Small(SmallKernel {
        q: qs,
        n,
        k,
        add,
        scaled,
    }))
}

/// Runs `f` on the kernel matching the field.
fn with_kernel<T>(
    field: &FieldRef,
    rows: &[Vec<Elem>],
    f: impl FnOnce(&dyn KernelDyn) -> Result<T>,
) -> Result<T> {
    match build_kernel(field, rows)? {
        AnyKernel::Binary(k) => f(&Dyn(&k)),
        AnyKernel::Small(k) => f(&Dyn(&k)),
    }
}

// Object-safe facade so closures can receive either kernel.
trait KernelDyn: Sync {
    fn exhaustive_min(&self, budget: u64) -> Result<WeightReport>;
    fn exhaustive_histogram(&self) -> Vec<u64>;
    fn weight_phase(&self, w: usize) -> Option<Best>;
}

struct Dyn<'a, K: Kernel>(&'a K);

impl<K: Kernel> KernelDyn for Dyn<'_, K> {
    fn exhaustive_min(&self, budget: u64) -> Result<WeightReport> {
        exhaustive_min_impl(self.0, budget)
    }
    fn exhaustive_histogram(&self) -> Vec<u64> {
        exhaustive_histogram_impl(self.0)
    }
    fn weight_phase(&self, w: usize) -> Option<Best> {
        weight_phase_impl(self.0, w)
    }
}

fn exhaustive_min(k: &dyn KernelDyn, budget: u64) -> Result<WeightReport> {
    k.exhaustive_min(budget)
}

fn exhaustive_histogram(k: &dyn KernelDyn) -> Vec<u64> {
    k.exhaustive_histogram()
}

// ---------------------------------------------------------------------------
// enumeration

#[derive(Clone, Debug)]
struct Best {
    weight: usize,
    vector: Vec<Elem>,
}

/// Per-chunk search state: one accumulator per recursion depth.
struct Walker<'a, K: Kernel> {
    kern: &'a K,
    bufs: Vec<Vec<K::W>>,
    best_weight: usize,
    best_vec: Option<Vec<K::W>>,
    hist: Option<Vec<u64>>,
    count: u64,
}

impl<'a, K: Kernel> Walker<'a, K> {
    fn new(kern: &'a K, depth: usize, histogram: bool) -> Self {
        Walker {
            kern,
            bufs: vec![vec![K::W::default(); kern.width()]; depth + 1],
            best_weight: usize::MAX,
            best_vec: None,
            hist: histogram.then(|| vec![0; kern.n() + 1]),
            count: 0,
        }
    }

    #[inline]
    fn record(&mut self, depth: usize) {
        self.count += 1;
        let wt = self.kern.weight(&self.bufs[depth]);
        if let Some(h) = &mut self.hist {
            h[wt] += 1;
        } else if wt < self.best_weight {
            self.best_weight = wt;
            self.best_vec = Some(self.bufs[depth].clone());
        }
    }

    /// All combinations of exactly `remaining` further rows from `start..`,
    /// every coefficient nonzero.
    fn exact_weight(&mut self, depth: usize, remaining: usize, start: usize) {
        let (k, q) = (self.kern.k(), self.kern.q());
        if remaining == 0 {
            self.record(depth);
            return;
        }
        if remaining == 1 {
            for i in start..k {
                for c in 1..q {
                    self.count += 1;
                    let wt = self.kern.weight_of_sum(&self.bufs[depth], i, c);
                    if wt < self.best_weight {
                        self.best_weight = wt;
                        let mut v = vec![K::W::default(); self.kern.width()];
                        self.kern.axpy(&mut v, &self.bufs[depth], i, c);
                        self.best_vec = Some(v);
                    }
                }
            }
            return;
        }
        for i in start..=(k - remaining) {
            for c in 1..q {
                let (lo, hi) = self.bufs.split_at_mut(depth + 1);
                self.kern.axpy(&mut hi[0], &lo[depth], i, c);
                self.exact_weight(depth + 1, remaining - 1, i + 1);
            }
        }
    }

    /// Every coefficient choice for positions `pos..k`, zero included.
    fn all_from(&mut self, depth: usize, pos: usize) {
        let (k, q) = (self.kern.k(), self.kern.q());
        if pos == k {
            self.record(depth);
            return;
        }
        self.all_from(depth, pos + 1);
        for c in 1..q {
            let (lo, hi) = self.bufs.split_at_mut(depth + 1);
            self.kern.axpy(&mut hi[0], &lo[depth], pos, c);
            self.all_from(depth + 1, pos + 1);
        }
    }
}

/// Chunks for exhaustive enumeration: leading position `l` (coefficient 1)
/// plus a short prefix of coefficients for the positions after it.
fn exhaustive_chunks(k: usize, q: usize) -> Vec<(usize, Vec<usize>)> {
    let mut s = 0;
    while q.pow(s as u32) < 64 {
        s += 1;
    }
    let mut chunks = Vec::new();
    for l in 0..k {
        let len = s.min(k - l - 1);
        let total = q.pow(len as u32);
        for code in 0..total {
            // most significant digit first, so chunk order is lexicographic
            let mut prefix = vec![0; len];
            let mut v = code;
            for slot in prefix.iter_mut().rev() {
                *slot = v % q;
                v /= q;
            }
            chunks.push((l, prefix));
        }
    }
    chunks
}

fn run_exhaustive_chunk<'a, K: Kernel>(
    kern: &'a K,
    l: usize,
    prefix: &[usize],
    histogram: bool,
) -> Walker<'a, K> {
    let k = kern.k();
    let mut walker = Walker::new(kern, k, histogram);
    let zero = vec![K::W::default(); kern.width()];
    kern.axpy(&mut walker.bufs[1], &zero, l, 1);
    let mut depth = 1;
    for (off, &c) in prefix.iter().enumerate() {
        if c != 0 {
            let (lo, hi) = walker.bufs.split_at_mut(depth + 1);
            kern.axpy(&mut hi[0], &lo[depth], l + 1 + off, c);
            depth += 1;
        }
    }
    walker.all_from(depth, l + 1 + prefix.len());
    walker
}

fn exhaustive_min_impl<K: Kernel>(kern: &K, budget: u64) -> Result<WeightReport> {
    let (k, q, n) = (kern.k(), kern.q(), kern.n());
    let total = ((q as u128).pow(k as u32) - 1) / (q as u128 - 1);
    if total > budget as u128 {
        return Err(Error::BudgetExceeded { budget });
    }
    let chunks = exhaustive_chunks(k, q);
    let results: Vec<(usize, Option<Vec<Elem>>, u64)> = chunks
        .par_iter()
        .map(|(l, prefix)| {
            let w = run_exhaustive_chunk(kern, *l, prefix, false);
            let vec = w.best_vec.as_ref().map(|v| kern.unpack(v));
            (w.best_weight, vec, w.count)
        })
        .collect();
    let mut best: Option<(usize, Vec<Elem>)> = None;
    let mut count = 0;
    for (wt, vec, c) in results {
        count += c;
        if let Some(v) = vec {
            if best.as_ref().map_or(true, |(b, _)| wt < *b) {
                best = Some((wt, v));
            }
        }
    }
    let (d, cert) = best.expect("a nonzero code has a nonzero codeword");
    Ok(WeightReport {
        n,
        k,
        d,
        exact: true,
        method: Method::Exhaustive,
        certificate: trim(cert),
        proved_lower_bound: d,
        enumerated: count,
    })
}

fn exhaustive_histogram_impl<K: Kernel>(kern: &K) -> Vec<u64> {
    let (k, q, n) = (kern.k(), kern.q(), kern.n());
    let chunks = exhaustive_chunks(k, q);
    let hists: Vec<Vec<u64>> = chunks
        .par_iter()
        .map(|(l, prefix)| {
            run_exhaustive_chunk(kern, *l, prefix, true)
                .hist
                .expect("histogram walker")
        })
        .collect();
    let mut total = vec![0u64; n + 1];
    for h in hists {
        for (t, c) in total.iter_mut().zip(h) {
            *t += c;
        }
    }
    // each normalized message stands for its q-1 nonzero multiples
    for t in total.iter_mut() {
        *t *= q as u64 - 1;
    }
    total[0] += 1;
    total
}

/// All messages of weight exactly `w` (first coefficient 1) in parallel
/// chunks keyed by their first one or two row indices.
fn weight_phase_impl<K: Kernel>(kern: &K, w: usize) -> Option<Best> {
    let k = kern.k();
    if w == 0 || w > k {
        return None;
    }
    let chunks: Vec<(usize, Option<usize>)> = if w == 1 {
        (0..k).map(|i| (i, None)).collect()
    } else {
        (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, Some(j))))
            .filter(|&(_, j)| j.is_some_and(|j| k - j > w - 2))
            .collect()
    };
    let results: Vec<(usize, Option<Vec<Elem>>)> = chunks
        .par_iter()
        .map(|&(i1, i2)| {
            let mut walker = Walker::new(kern, w, false);
            let zero = vec![K::W::default(); kern.width()];
            kern.axpy(&mut walker.bufs[1], &zero, i1, 1);
            match i2 {
                None => walker.record(1),
                Some(i2) => {
                    for c in 1..kern.q() {
                        let (lo, hi) = walker.bufs.split_at_mut(2);
                        kern.axpy(&mut hi[0], &lo[1], i2, c);
                        walker.exact_weight(2, w - 2, i2 + 1);
                    }
                }
            }
            let vec = walker.best_vec.as_ref().map(|v| kern.unpack(v));
            (walker.best_weight, vec)
        })
        .collect();
    let mut best: Option<Best> = None;
    for (wt, vec) in results {
        if let Some(v) = vec {
            if best.as_ref().map_or(true, |b| wt < b.weight) {
                best = Some(Best {
                    weight: wt,
                    vector: v,
                });
            }
        }
    }
    best
}

fn trim(mut v: Vec<Elem>) -> Vec<Elem> {
    while v.last().is_some_and(|e| e.is_zero()) {
        v.pop();
    }
    v
}

// ---------------------------------------------------------------------------
// information sets

struct InfoSet {
    rows: Vec<Vec<Elem>>,
    rank: usize,
}

/// Greedy disjoint information sets: each round pivots first on columns not
/// used by earlier rounds, then completes to full rank on used columns.
fn information_sets(field: &FieldRef, gen: &[Vec<Elem>]) -> Vec<InfoSet> {
    let k = gen.len();
    let n = gen[0].len();
    let mut used = vec![false; n];
    let mut sets = Vec::new();
    loop {
        let mut m = gen.to_vec();
        let mut r = 0;
        let mut fresh = Vec::new();
        for pass_used in [false, true] {
            for c in 0..n {
                if r == k {
                    break;
                }
                if used[c] != pass_used {
                    continue;
                }
                let Some(piv) = (r..k).find(|&i| !m[i][c].is_zero()) else {
                    continue;
                };
                m.swap(r, piv);
                let inv = field.inv(m[r][c]);
                for x in m[r].iter_mut() {
                    *x = field.mul(*x, inv);
                }
                let pivot_row = m[r].clone();
                for (i, row) in m.iter_mut().enumerate() {
                    if i == r || row[c].is_zero() {
                        continue;
                    }
                    let f = row[c];
                    for (x, &p) in row.iter_mut().zip(&pivot_row) {
                        *x = field.sub(*x, field.mul(f, p));
                    }
                }
                if !pass_used {
                    fresh.push(c);
                }
                r += 1;
            }
        }
        debug_assert_eq!(r, k, "generator rows are independent");
        if fresh.is_empty() {
            break;
        }
        for &c in &fresh {
            used[c] = true;
        }
        sets.push(InfoSet {
            rows: m,
            rank: fresh.len(),
        });
        if used.iter().all(|&u| u) {
            break;
        }
    }
    sets
}

fn information_set_min(code: &LinearCode, budget: u64) -> Result<WeightReport> {
    let field = code.field();
    let (n, k, q) = (code.len(), code.dimension(), field.q() as u128);
    let sets = information_sets(field, code.rows());
    let kernels = sets
        .iter()
        .map(|s| build_kernel(field, &s.rows))
        .collect::<Result<Vec<_>>>()?;
    let deficits: Vec<usize> = sets.iter().map(|s| k - s.rank).collect();
    let mut done = vec![0usize; sets.len()];
    let mut best: Option<Best> = None;
    let mut spent: u64 = 0;
    let bound = |done: &[usize]| -> usize {
        done.iter()
            .zip(&deficits)
            .map(|(&w, &d)| (w + 1).saturating_sub(d))
            .sum()
    };
    let mut lower = bound(&done);
    let mut complete = false;

    'outer: for w in 1..=k {
        for j in 0..sets.len() {
            if w + 1 <= deficits[j] {
                continue;
            }
            while done[j] < w {
                let ww = done[j] + 1;
                let phase = binomial(k as u64, ww as u64) * (q - 1).pow(ww as u32 - 1);
                if spent as u128 + phase > budget as u128 {
                    break 'outer;
                }
                let found = match &kernels[j] {
                    AnyKernel::Binary(kern) => Dyn(kern).weight_phase(ww),
                    AnyKernel::Small(kern) => Dyn(kern).weight_phase(ww),
                };
                spent += phase as u64;
                if let Some(f) = found {
                    if best.as_ref().map_or(true, |b| f.weight < b.weight) {
                        best = Some(f);
                    }
                }
                done[j] = ww;
            }
            lower = bound(&done);
            if deficits[j] == 0 && done[j] == k {
                complete = true;
            }
            if complete || best.as_ref().is_some_and(|b| b.weight <= lower) {
                break 'outer;
            }
        }
    }

    let (d, cert) = match best {
        Some(b) => (b.weight, b.vector),
        None => {
            let row = code.rows()[0].clone();
            (row.iter().filter(|e| !e.is_zero()).count(), row)
        }
    };
    let exact = complete || d <= lower;
    Ok(WeightReport {
        n,
        k,
        d,
        exact,
        method: Method::InformationSet,
        certificate: trim(cert),
        proved_lower_bound: if exact { d } else { lower.min(d) },
        enumerated: spent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;
    use crate::poly::Poly;

    fn cyclic(q: u64, reps: &[u64], n: usize) -> CyclicCode {
        let f = crate::gf::field_of_order(q).unwrap();
        CyclicCode::new(Poly::from_reps(&f, reps).unwrap(), n).unwrap()
    }

    fn forced(code: &CyclicCode, engine: Engine) -> WeightReport {
        min_distance_with(
            &code.to_linear(),
            &DistanceOptions {
                budget: DEFAULT_BUDGET,
                engine,
            },
        )
        .unwrap()
    }

    #[test]
    fn hamming_distance_and_distribution() {
        let c = cyclic(2, &[1, 1, 0, 1], 7);
        let r = min_distance(&c, DEFAULT_BUDGET).unwrap();
        assert_eq!((r.d, r.exact, r.method), (3, true, Method::Exhaustive));
        let cert = Poly::new(c.field(), r.certificate.clone());
        assert!(c.contains(&cert).unwrap());
        assert_eq!(cert.weight(), 3);
        assert_eq!(
            weight_distribution(&c.to_linear()).unwrap(),
            vec![1, 0, 0, 7, 7, 0, 0, 1]
        );
        let is = forced(&c, Engine::InformationSet);
        assert_eq!((is.d, is.exact), (3, true));
    }

    #[test]
    fn repetition_code() {
        let c = cyclic(2, &[1; 9], 9);
        assert_eq!(c.dimension(), 1);
        assert_eq!(forced(&c, Engine::Exhaustive).d, 9);
        assert_eq!(forced(&c, Engine::InformationSet).d, 9);
        let c3 = cyclic(3, &[1; 5], 5);
        assert_eq!(forced(&c3, Engine::InformationSet).d, 5);
    }

    #[test]
    fn whole_space() {
        let c = cyclic(4, &[1], 5);
        assert_eq!(forced(&c, Engine::Exhaustive).d, 1);
        assert_eq!(forced(&c, Engine::InformationSet).d, 1);
    }

    #[test]
    fn nonbinary_distribution_sums_to_q_pow_k() {
        let f = make_field(3, 1).unwrap();
        let g = crate::poly::factor_xn_minus_1(&f, 11).unwrap()[1].clone();
        let c = CyclicCode::new(g, 11).unwrap();
        let dist = weight_distribution(&c.to_linear()).unwrap();
        assert_eq!(dist.iter().sum::<u64>(), 3u64.pow(c.dimension() as u32));
        assert_eq!(dist[0], 1);
        // ternary Golay code
        assert_eq!(dist.iter().position(|&x| x > 0 && x != 1).unwrap(), 5);
        assert_eq!(forced(&c, Engine::InformationSet).d, 5);
    }

    #[test]
    fn budget_exhaustion_is_flagged() {
        let f = make_field(2, 1).unwrap();
        let g = crate::poly::factor_xn_minus_1(&f, 23).unwrap()[1].clone();
        let c = CyclicCode::new(g, 23).unwrap();
        let r = min_distance_with(
            &c.to_linear(),
            &DistanceOptions {
                budget: 30,
                engine: Engine::InformationSet,
            },
        )
        .unwrap();
        assert!(!r.exact);
        assert!(r.proved_lower_bound <= r.d);
        assert!(matches!(
            min_distance_with(
                &c.to_linear(),
                &DistanceOptions {
                    budget: 30,
                    engine: Engine::Exhaustive
                }
            ),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
