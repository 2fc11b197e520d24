//! Sparse multivariate polynomials over a [`Field`].
//!
//! Terms are stored in descending graded reverse lexicographic order, with
//! variable 0 the most significant. The same order drives Gröbner bases and
//! the canonical text form, e.g. `x1^2*x3^2 + x0^2*x1 - x0*x1*x3`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::face::FaceSet;
use crate::field::{Field, FieldElement};

/// Exponent vector over the ambient variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u32; 12]>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars), degree: 0 }
    }

    pub fn new(exps: Vec<u32>) -> Self {
        Self::from_exps(SmallVec::from_vec(exps))
    }

    fn from_exps(exps: SmallVec<[u32; 12]>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    /// Squarefree monomial with the given support.
    pub fn from_face(nvars: usize, face: FaceSet) -> Self {
        let mut exps = vec![0; nvars];
        for v in face.iter() {
            exps[v] = 1;
        }
        Self::new(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn support(&self) -> FaceSet {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
            degree: other.degree - self.degree,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::from_exps(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Factors are written in natural name order (`x0` before `x1` before
    /// `x10`), independent of variable significance.
    fn format(&self, names: &[String], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors: Vec<(String, u32)> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (names.get(i).cloned().unwrap_or_else(|| format!("v{i}")), e))
            .collect();
        factors.sort_by(|a, b| natural_key(&a.0).cmp(&natural_key(&b.0)));
        for (k, (name, e)) in factors.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "{name}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Split a trailing decimal index off a name so `x2` sorts before `x10`.
fn natural_key(name: &str) -> (&str, u64, &str) {
    let stem = name.trim_end_matches(|c: char| c.is_ascii_digit());
    let digits = &name[stem.len()..];
    (stem, digits.parse().unwrap_or(0), name)
}

impl Ord for Monomial {
    /// Graded reverse lexicographic order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            for (a, b) in self.exps.iter().zip(&other.exps).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        self.format(&[], f)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: Field,
    nvars: usize,
    /// Descending monomial order, no zero coefficients.
    terms: Vec<(Monomial, FieldElement)>,
}

impl Polynomial {
    pub fn zero(field: Field, nvars: usize) -> Self {
        Polynomial { field, nvars, terms: Vec::new() }
    }

    pub fn constant(field: Field, nvars: usize, c: FieldElement) -> Self {
        Self::term(field, Monomial::one(nvars), c)
    }

    pub fn one(field: Field, nvars: usize) -> Self {
        Self::constant(field, nvars, field.one())
    }

    pub fn var(field: Field, nvars: usize, i: usize) -> Self {
        Self::term(field, Monomial::var(nvars, i), field.one())
    }

    pub fn term(field: Field, m: Monomial, c: FieldElement) -> Self {
        let nvars = m.nvars();
        if c.is_zero() {
            return Self::zero(field, nvars);
        }
        Polynomial { field, nvars, terms: vec![(m, c)] }
    }

    /// The squarefree monomial `∏_{v ∈ face} x_v`.
    pub fn from_face(field: Field, nvars: usize, face: FaceSet) -> Self {
        Self::term(field, Monomial::from_face(nvars, face), field.one())
    }

    /// Collect arbitrary (monomial, coefficient) pairs, combining like terms.
    pub fn from_terms(field: Field, nvars: usize, terms: impl IntoIterator<Item = (Monomial, FieldElement)>) -> Self {
        let mut acc: HashMap<Monomial, FieldElement> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            match acc.get_mut(&m) {
                Some(existing) => *existing = field.add(existing, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Polynomial { field, nvars, terms }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, FieldElement)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&FieldElement> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::AmbientMismatch(self.nvars, other.nvars));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.merge(other, |c| c.clone()))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let field = self.field;
        Ok(self.merge(other, |c| field.neg(c)))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let f = self.field;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(f, self.nvars));
        }
        let terms = self
            .terms
            .iter()
            .flat_map(|(ma, ca)| other.terms.iter().map(move |(mb, cb)| (ma.mul(mb), f.mul(ca, cb))));
        Ok(Self::from_terms(f, self.nvars, terms))
    }

    /// Sum `self + map(other)`, with `map` applied to the coefficients of `other`.
    fn merge(&self, other: &Polynomial, map: impl Fn(&FieldElement) -> FieldElement) -> Polynomial {
        let f = self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), map(cb)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(ca, &map(cb));
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), map(c))));
        Polynomial { field: f, nvars: self.nvars, terms: out }
    }

    /// `self - c * m * g` in one merge pass; the reduction step of division.
    pub(crate) fn sub_scaled_shift(&self, c: &FieldElement, m: &Monomial, g: &Polynomial) -> Polynomial {
        let f = self.field;
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut shifted = g.terms.iter().map(|(mg, cg)| (m.mul(mg), f.neg(&f.mul(c, cg)))).peekable();
        while i < self.terms.len() {
            let Some((mb, _)) = shifted.peek() else { break };
            let (ma, ca) = &self.terms[i];
            match ma.cmp(mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => out.push(shifted.next().unwrap()),
                Ordering::Equal => {
                    let (_, cb) = shifted.next().unwrap();
                    let s = f.add(ca, &cb);
                    if !s.is_zero() {
                        out.push((ma.clone(), s));
                    }
                    i += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(shifted);
        Polynomial { field: f, nvars: self.nvars, terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        let f = self.field;
        Polynomial {
            field: f,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), f.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.field, self.nvars);
        }
        let f = self.field;
        Polynomial {
            field: f,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), f.mul(a, c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            field: self.field,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(a, c)| (a.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Self::one(self.field, self.nvars);
        for _ in 0..e {
            acc = acc.try_mul(self).expect("same ring");
        }
        acc
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            Some(lc) if !lc.is_one() => self.scale(&self.field.inverse(lc).expect("nonzero")),
            _ => self.clone(),
        }
    }

    /// `f(x_1, ..., x_n) ↦ f(x_1^2, ..., x_n^2)`.
    pub fn phi_square(&self) -> Polynomial {
        self.map_monomials(self.nvars, |m| Monomial::from_exps(m.exps.iter().map(|e| 2 * e).collect()))
    }

    /// Substitute `x_var ↦ x_var^k`.
    pub fn substitute_power(&self, var: usize, k: u32) -> Polynomial {
        self.map_monomials(self.nvars, |m| {
            let mut exps = m.exps.clone();
            exps[var] *= k;
            Monomial::from_exps(exps)
        })
    }

    /// Move into a ring with `nvars` variables, sending variable `i` to `map[i]`.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> Polynomial {
        self.map_monomials(nvars, |m| {
            let mut exps: SmallVec<[u32; 12]> = SmallVec::from_elem(0, nvars);
            for (i, &e) in m.exps.iter().enumerate() {
                exps[map[i]] += e;
            }
            Monomial::from_exps(exps)
        })
    }

    /// Append fresh variables after the existing ones.
    pub fn extend_vars(&self, nvars: usize) -> Polynomial {
        assert!(nvars >= self.nvars, "extend_vars cannot drop variables");
        // new trailing variables are least significant, so the order is unchanged
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                e.resize(nvars, 0);
                (Monomial::new(e), c.clone())
            })
            .collect();
        Polynomial { field: self.field, nvars, terms }
    }

    fn map_monomials(&self, nvars: usize, f: impl Fn(&Monomial) -> Monomial) -> Polynomial {
        Self::from_terms(self.field, nvars, self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// Text form using the given variable names.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        self.display_with(names).to_string()
    }

    /// Parse the canonical text form (`+`, `-`, `*`, `^`, integer or `a/b` coefficients).
    pub fn parse(text: &str, names: &[String], field: Field) -> Result<Polynomial> {
        let nvars = names.len();
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut rest = compact.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let (negative, body) = match rest.as_bytes()[0] {
                b'+' => (false, &rest[1..]),
                b'-' => (true, &rest[1..]),
                _ if first => (false, rest),
                _ => return Err(Error::Parse(format!("expected sign before `{rest}`"))),
            };
            first = false;
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let (term, tail) = body.split_at(end);
            if term.is_empty() {
                return Err(Error::Parse(format!("empty term in `{text}`")));
            }
            let (m, mut c) = parse_term(term, names, field)?;
            if negative {
                c = field.neg(&c);
            }
            terms.push((m, c));
            rest = tail;
        }
        Ok(Self::from_terms(field, nvars, terms))
    }
}

fn parse_term(term: &str, names: &[String], field: Field) -> Result<(Monomial, FieldElement)> {
    let mut exps = vec![0u32; names.len()];
    let mut coeff = field.one();
    for factor in term.split('*') {
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in `{term}`")));
        }
        if factor.as_bytes()[0].is_ascii_digit() {
            let value = match factor.split_once('/') {
                Some((n, d)) => field.from_fraction(&parse_int(n)?, &parse_int(d)?)?,
                None => field.from_bigint(&parse_int(factor)?),
            };
            coeff = field.mul(&coeff, &value);
            continue;
        }
        let (name, power) = match factor.split_once('^') {
            Some((n, p)) => (n, p.parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?),
            None => (factor, 1),
        };
        let v = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))?;
        exps[v] += power;
    }
    Ok((Monomial::new(exps), coeff))
}

fn parse_int(s: &str) -> Result<BigInt> {
    s.parse::<BigInt>().map_err(|_| Error::Parse(format!("bad number `{s}`")))
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("v{i}")).collect();
        write!(f, "{}", self.display_with(&names))
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.poly.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let c = c.abs();
            if m.is_one() {
                write!(f, "{c}")?;
            } else {
                if !c.is_one() {
                    write!(f, "{c}*")?;
                }
                m.format(self.names, f)?;
            }
        }
        Ok(())
    }
}

/// Square matrix of polynomials over a common ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    size: usize,
    field: Field,
    nvars: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub const DETERMINANT_CAP: usize = 12;
    /// Largest `len(entry) * len(minor)` a single cofactor product may cost.
    pub const DETERMINANT_WORK_CAP: usize = 50_000_000;

    pub fn zeros(field: Field, nvars: usize, size: usize) -> Self {
        PolyMatrix { size, field, nvars, entries: vec![Polynomial::zero(field, nvars); size * size] }
    }

    pub fn from_rows(field: Field, nvars: usize, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for row in rows {
            if row.len() != size {
                return Err(Error::OutOfRange("matrix is not square".into()));
            }
            for p in row {
                if p.nvars() != nvars {
                    return Err(Error::AmbientMismatch(nvars, p.nvars()));
                }
                entries.push(p);
            }
        }
        Ok(PolyMatrix { size, field, nvars, entries })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        assert_eq!(p.nvars(), self.nvars);
        self.entries[i * self.size + j] = p;
    }

    /// Add `p` to every diagonal entry `i` given by `diag(i)`.
    pub fn add_diagonal(&mut self, diag: impl Fn(usize) -> Polynomial) {
        for i in 0..self.size {
            let d = diag(i);
            let cur = self.get(i, i).try_add(&d).expect("same ring");
            self.set(i, i, cur);
        }
    }

    /// Exact determinant by Laplace expansion along rows, memoized on the
    /// set of columns still available.
    pub fn determinant(&self) -> Result<Polynomial> {
        let m = self.size;
        if m > Self::DETERMINANT_CAP {
            return Err(Error::MatrixTooLarge(m));
        }
        // minors[mask] = det of rows (m - |mask|)..m restricted to columns in mask
        let mut minors: Vec<Option<Polynomial>> = vec![None; 1 << m];
        minors[0] = Some(Polynomial::one(self.field, self.nvars));
        let mut masks: Vec<usize> = (1..(1usize << m)).collect();
        masks.sort_by_key(|x| x.count_ones());
        for mask in masks {
            let row = m - mask.count_ones() as usize;
            let mut acc = Polynomial::zero(self.field, self.nvars);
            for (pos, col) in (0..m).filter(|c| mask & (1 << c) != 0).enumerate() {
                let entry = self.get(row, col);
                if entry.is_zero() {
                    continue;
                }
                let minor = minors[mask & !(1 << col)].as_ref().expect("computed");
                if minor.is_zero() {
                    continue;
                }
                let work = entry.len().saturating_mul(minor.len());
                if work > Self::DETERMINANT_WORK_CAP {
                    return Err(Error::TooLarge(format!(
                        "determinant product of {} by {} terms exceeds {}",
                        entry.len(),
                        minor.len(),
                        Self::DETERMINANT_WORK_CAP
                    )));
                }
                let prod = entry.try_mul(minor)?;
                acc = if pos % 2 == 0 { acc.try_add(&prod)? } else { acc.try_sub(&prod)? };
            }
            minors[mask] = Some(acc);
        }
        Ok(minors[(1 << m) - 1].take().expect("full minor"))
    }
}
