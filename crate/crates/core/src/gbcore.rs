//! Buchberger core on packed monomials (at most 16 variables) with
//! geobucket reduction. `groebner` converts to and from this representation.

use std::cmp::Ordering;
use std::time::Instant;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub(crate) const MAX_VARS: usize = 16;

/// Exponent vector with cached degree and support mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Mono {
    deg: u32,
    mask: u32,
    e: [u16; MAX_VARS],
}

impl Mono {
    pub(crate) fn one() -> Self {
        Mono { deg: 0, mask: 0, e: [0; MAX_VARS] }
    }

    pub(crate) fn from_exps(exps: &[u32]) -> Self {
        debug_assert!(exps.len() <= MAX_VARS);
        let mut m = Mono::one();
        for (i, &x) in exps.iter().enumerate() {
            m.e[i] = u16::try_from(x).expect("exponent fits in 16 bits");
            m.deg += x;
            if x > 0 {
                m.mask |= 1 << i;
            }
        }
        m
    }

    #[cfg(test)]
    fn var(i: usize) -> Self {
        let mut m = Mono::one();
        m.e[i] = 1;
        m.deg = 1;
        m.mask = 1 << i;
        m
    }

    pub(crate) fn exps(&self, nvars: usize) -> Vec<u32> {
        self.e[..nvars].iter().map(|&x| x as u32).collect()
    }

    pub(crate) fn is_one(&self) -> bool {
        self.deg == 0
    }

    fn mul(&self, o: &Mono) -> Mono {
        let mut e = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            e[i] = self.e[i] + o.e[i];
        }
        Mono { deg: self.deg + o.deg, mask: self.mask | o.mask, e }
    }

    fn divides(&self, o: &Mono) -> bool {
        self.mask & !o.mask == 0 && self.deg <= o.deg && (0..MAX_VARS).all(|i| self.e[i] <= o.e[i])
    }

    /// `o / self`, assuming divisibility.
    fn quotient_of(&self, o: &Mono) -> Mono {
        let mut e = [0u16; MAX_VARS];
        let mut mask = 0;
        for i in 0..MAX_VARS {
            e[i] = o.e[i] - self.e[i];
            if e[i] > 0 {
                mask |= 1 << i;
            }
        }
        Mono { deg: o.deg - self.deg, mask, e }
    }

    fn lcm(&self, o: &Mono) -> Mono {
        let mut e = [0u16; MAX_VARS];
        let mut deg = 0;
        for i in 0..MAX_VARS {
            e[i] = self.e[i].max(o.e[i]);
            deg += e[i] as u32;
        }
        Mono { deg, mask: self.mask | o.mask, e }
    }

    fn coprime(&self, o: &Mono) -> bool {
        self.mask & o.mask == 0
    }
}

impl Ord for Mono {
    /// Graded reverse lexicographic, variable 0 most significant.
    fn cmp(&self, o: &Self) -> Ordering {
        self.deg.cmp(&o.deg).then_with(|| {
            for i in (0..MAX_VARS).rev() {
                if self.e[i] != o.e[i] {
                    return o.e[i].cmp(&self.e[i]);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Coefficient arithmetic for the engine.
pub(crate) trait Arith: Sync {
    type C: Clone + PartialEq + Send + Sync + std::fmt::Debug;
    fn zero(&self) -> Self::C;
    fn one(&self) -> Self::C;
    fn is_zero(&self, a: &Self::C) -> bool;
    fn add(&self, a: &Self::C, b: &Self::C) -> Self::C;
    fn neg(&self, a: &Self::C) -> Self::C;
    fn mul(&self, a: &Self::C, b: &Self::C) -> Self::C;
    fn inv(&self, a: &Self::C) -> Self::C;
}

pub(crate) struct ModP(pub u64);

impl Arith for ModP {
    type C = u32;
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.0) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            (self.0 - *a as u64) as u32
        }
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        (*a as u64 * *b as u64 % self.0) as u32
    }
    fn inv(&self, a: &u32) -> u32 {
        crate::field::pow_mod(*a as u64, self.0 - 2, self.0) as u32
    }
}

pub(crate) struct Rat;

impl Arith for Rat {
    type C = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
}

/// Terms in descending order, no zero coefficients.
pub(crate) type Poly<C> = Vec<(Mono, C)>;

fn monic<A: Arith>(a: &A, p: Poly<A::C>) -> Poly<A::C> {
    let Some((_, lc)) = p.first() else { return p };
    if *lc == a.one() {
        return p;
    }
    let inv = a.inv(lc);
    p.into_iter().map(|(m, c)| (m, a.mul(&c, &inv))).collect()
}

/// Merge two descending polynomials.
fn merge<A: Arith>(a: &A, x: Poly<A::C>, y: Poly<A::C>) -> Poly<A::C> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let mut xi = x.into_iter().peekable();
    let mut yi = y.into_iter().peekable();
    loop {
        let ord = match (xi.peek(), yi.peek()) {
            (Some((mx, _)), Some((my, _))) => mx.cmp(my),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => break,
        };
        match ord {
            Ordering::Greater => out.push(xi.next().unwrap()),
            Ordering::Less => out.push(yi.next().unwrap()),
            Ordering::Equal => {
                let (m, cx) = xi.next().unwrap();
                let (_, cy) = yi.next().unwrap();
                let c = a.add(&cx, &cy);
                if !a.is_zero(&c) {
                    out.push((m, c));
                }
            }
        }
    }
    out
}

/// Sum of polynomials kept in buckets of geometrically growing size, each
/// stored ascending so the largest term sits at the end.
struct Geobucket<C> {
    buckets: Vec<Vec<(Mono, C)>>,
}

impl<C: Clone + PartialEq> Geobucket<C> {
    fn new() -> Self {
        Geobucket { buckets: Vec::new() }
    }

    fn cap(i: usize) -> usize {
        4usize << (2 * i)
    }

    /// Add a descending polynomial.
    fn add<A: Arith<C = C>>(&mut self, a: &A, p: Poly<C>) {
        let mut cur: Vec<(Mono, C)> = p.into_iter().rev().collect();
        let mut i = 0;
        while i < self.buckets.len() && cur.len() > Self::cap(i) {
            i += 1;
        }
        loop {
            if i == self.buckets.len() {
                self.buckets.push(Vec::new());
            }
            let existing = std::mem::take(&mut self.buckets[i]);
            cur = merge_ascending(a, existing, cur);
            if cur.len() <= Self::cap(i) {
                self.buckets[i] = cur;
                return;
            }
            i += 1;
        }
    }

    /// Remove and return the leading term of the sum, if nonzero.
    fn pop_leading<A: Arith<C = C>>(&mut self, a: &A) -> Option<(Mono, C)> {
        loop {
            let mut best: Option<Mono> = None;
            for b in &self.buckets {
                if let Some((m, _)) = b.last() {
                    if best.is_none_or(|x| *m > x) {
                        best = Some(*m);
                    }
                }
            }
            let m = best?;
            let mut c = a.zero();
            for b in self.buckets.iter_mut() {
                if b.last().is_some_and(|(x, _)| *x == m) {
                    let (_, bc) = b.pop().unwrap();
                    c = a.add(&c, &bc);
                }
            }
            if !a.is_zero(&c) {
                return Some((m, c));
            }
        }
    }
}

fn merge_ascending<A: Arith>(a: &A, x: Vec<(Mono, A::C)>, y: Vec<(Mono, A::C)>) -> Vec<(Mono, A::C)> {
    if x.is_empty() {
        return y;
    }
    if y.is_empty() {
        return x;
    }
    let mut out = Vec::with_capacity(x.len() + y.len());
    let mut xi = x.into_iter().peekable();
    let mut yi = y.into_iter().peekable();
    loop {
        let ord = match (xi.peek(), yi.peek()) {
            (Some((mx, _)), Some((my, _))) => mx.cmp(my),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => break,
        };
        match ord {
            Ordering::Less => out.push(xi.next().unwrap()),
            Ordering::Greater => out.push(yi.next().unwrap()),
            Ordering::Equal => {
                let (m, cx) = xi.next().unwrap();
                let (_, cy) = yi.next().unwrap();
                let c = a.add(&cx, &cy);
                if !a.is_zero(&c) {
                    out.push((m, c));
                }
            }
        }
    }
    out
}

/// `c * m * p` (descending order is preserved by monomial multiplication).
fn scale_shift<A: Arith>(a: &A, c: &A::C, m: &Mono, p: &[(Mono, A::C)]) -> Poly<A::C> {
    p.iter().map(|(pm, pc)| (pm.mul(m), a.mul(c, pc))).collect()
}

/// Full reduction of `f` by monic `basis` elements selected by `active`.
pub(crate) fn reduce<A: Arith>(a: &A, f: Poly<A::C>, basis: &[Poly<A::C>], active: &[bool]) -> Poly<A::C> {
    reduce_until(a, f, basis, active, None).expect("no deadline")
}

/// As [`reduce`], giving up with `None` once `deadline` has passed.
fn reduce_until<A: Arith>(
    a: &A,
    f: Poly<A::C>,
    basis: &[Poly<A::C>],
    active: &[bool],
    deadline: Option<Instant>,
) -> Option<Poly<A::C>> {
    let mut bucket = Geobucket::new();
    bucket.add(a, f);
    let mut rem = Vec::new();
    let mut steps = 0u32;
    while let Some((m, c)) = bucket.pop_leading(a) {
        steps = steps.wrapping_add(1);
        if steps % 4096 == 0 && deadline.is_some_and(|d| Instant::now() > d) {
            return None;
        }
        let divisor = basis
            .iter()
            .zip(active)
            .filter(|(_, &on)| on)
            .map(|(g, _)| g)
            .find(|g| g[0].0.divides(&m));
        match divisor {
            Some(g) => {
                let shift = g[0].0.quotient_of(&m);
                bucket.add(a, scale_shift(a, &a.neg(&c), &shift, &g[1..]));
            }
            None => rem.push((m, c)),
        }
    }
    Some(rem)
}

fn spoly<A: Arith>(a: &A, f: &[(Mono, A::C)], g: &[(Mono, A::C)], lcm: &Mono) -> Poly<A::C> {
    // f, g monic: lcm/lf * f - lcm/lg * g, leading terms cancel
    let sf = f[0].0.quotient_of(lcm);
    let sg = g[0].0.quotient_of(lcm);
    let x = scale_shift(a, &a.one(), &sf, &f[1..]);
    let y = scale_shift(a, &a.neg(&a.one()), &sg, &g[1..]);
    merge(a, x, y)
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
    sugar: u32,
}

/// Pair selection rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Selection {
    /// Smallest lcm.
    Normal,
    /// Smallest sugar degree, ties by smallest lcm.
    Sugar,
}

struct Basis<C> {
    polys: Vec<Poly<C>>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

fn total_degree<C>(p: &Poly<C>) -> u32 {
    p.iter().map(|(m, _)| m.deg).max().unwrap_or(0)
}

/// Outcome of a run: either the unit ideal or a (not yet interreduced) basis.
pub(crate) enum Run<C> {
    Unit { spairs: usize },
    Basis { polys: Vec<Poly<C>>, spairs: usize },
}

/// Limits on a run; exceeding either gives [`Error::Inconclusive`].
#[derive(Debug, Clone, Copy)]
pub(crate) struct Limits {
    pub budget: usize,
    /// Total terms stored in the basis.
    pub terms: usize,
    pub deadline: Option<Instant>,
}

pub(crate) fn buchberger<A: Arith>(a: &A, gens: Vec<Poly<A::C>>, limits: Limits, selection: Selection) -> Result<Run<A::C>> {
    let mut b = Basis { polys: Vec::new(), sugar: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    let mut spairs = 0;
    let mut stored = 0;

    let mut inputs: Vec<Poly<A::C>> = gens.into_iter().filter(|g| !g.is_empty()).collect();
    inputs.sort_by(|x, y| x[0].0.cmp(&y[0].0));
    for g in inputs {
        stored += g.len();
        let sugar = total_degree(&g);
        let Some(h) = reduce_until(a, g, &b.polys, &b.active, limits.deadline) else {
            return Err(Error::Inconclusive(spairs));
        };
        if h.is_empty() {
            continue;
        }
        if h[0].0.is_one() {
            return Ok(Run::Unit { spairs });
        }
        insert(&mut b, monic(a, h), sugar);
    }

    while !b.pairs.is_empty() {
        let pairs = &b.pairs;
        let pick = match selection {
            Selection::Normal => (0..pairs.len()).min_by(|&x, &y| pairs[x].lcm.cmp(&pairs[y].lcm)),
            Selection::Sugar => (0..pairs.len())
                .min_by(|&x, &y| pairs[x].sugar.cmp(&pairs[y].sugar).then_with(|| pairs[x].lcm.cmp(&pairs[y].lcm))),
        }
        .expect("nonempty");
        let pair = b.pairs.swap_remove(pick);
        spairs += 1;
        if spairs > limits.budget || limits.deadline.is_some_and(|d| Instant::now() > d) {
            return Err(Error::Inconclusive(spairs - 1));
        }
        let s = spoly(a, &b.polys[pair.i], &b.polys[pair.j], &pair.lcm);
        let Some(h) = reduce_until(a, s, &b.polys, &b.active, limits.deadline) else {
            return Err(Error::Inconclusive(spairs));
        };
        stored += h.len();
        if stored > limits.terms {
            return Err(Error::Inconclusive(spairs));
        }
        if h.is_empty() {
            continue;
        }
        if h[0].0.is_one() {
            return Ok(Run::Unit { spairs });
        }
        insert(&mut b, monic(a, h), pair.sugar);
    }
    let basis = b.polys.into_iter().zip(b.active).filter(|(_, on)| *on).map(|(p, _)| p).collect();
    Ok(Run::Basis { polys: basis, spairs })
}

/// Gebauer-Möller update.
fn insert<C>(b: &mut Basis<C>, h: Poly<C>, sugar: u32) {
    let hidx = b.polys.len();
    let lm_h = h[0].0;
    b.polys.push(h);
    b.sugar.push(sugar);
    b.active.push(true);
    let polys = &b.polys;
    let lm = |i: usize| polys[i][0].0;
    let pair_sugar = |g: usize, lcm: &Mono| {
        (b.sugar[g] + lcm.deg - lm(g).deg).max(sugar + lcm.deg - lm_h.deg)
    };

    let cands: Vec<Pair> = (0..hidx)
        .filter(|&g| b.active[g])
        .map(|g| {
            let lcm = lm(g).lcm(&lm_h);
            Pair { i: g, j: hidx, lcm, sugar: pair_sugar(g, &lcm) }
        })
        .collect();

    // keep a candidate unless another candidate's lcm properly divides it
    let mut kept: Vec<Pair> = Vec::new();
    for (k, c) in cands.iter().enumerate() {
        let dominated = cands.iter().enumerate().any(|(l, o)| l != k && o.lcm != c.lcm && o.lcm.divides(&c.lcm));
        if !dominated {
            kept.push(*c);
        }
    }
    // one per lcm, dropped entirely if any pair with that lcm is coprime
    let mut seen: Vec<(Mono, bool)> = Vec::new();
    for c in &kept {
        let coprime = lm(c.i).coprime(&lm_h);
        match seen.iter_mut().find(|(m, _)| *m == c.lcm) {
            Some(entry) => entry.1 |= coprime,
            None => seen.push((c.lcm, coprime)),
        }
    }
    let mut fresh: Vec<Pair> = Vec::new();
    for (m, any_coprime) in seen {
        if !any_coprime {
            fresh.push(*kept.iter().find(|c| c.lcm == m).expect("present"));
        }
    }

    b.pairs.retain(|p| !(lm_h.divides(&p.lcm) && lm(p.i).lcm(&lm_h) != p.lcm && lm(p.j).lcm(&lm_h) != p.lcm));
    b.pairs.extend(fresh);

    for g in 0..hidx {
        if b.active[g] && lm_h.divides(&b.polys[g][0].0) {
            b.active[g] = false;
        }
    }
}

/// Reduced, monic, ascending by leading monomial.
pub(crate) fn interreduce<A: Arith>(a: &A, polys: Vec<Poly<A::C>>) -> Vec<Poly<A::C>> {
    let mut polys = polys;
    polys.sort_by(|x, y| x[0].0.cmp(&y[0].0));
    let mut minimal: Vec<Poly<A::C>> = Vec::new();
    for p in polys {
        if !minimal.iter().any(|q| q[0].0.divides(&p[0].0)) {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let active: Vec<bool> = (0..minimal.len()).map(|l| l != k).collect();
        out.push(monic(a, reduce(a, minimal[k].clone(), &minimal, &active)));
    }
    out.sort_by(|x, y| x[0].0.cmp(&y[0].0));
    out
}
