//! Sparse multivariate polynomials over a coefficient field.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`] under graded
//! lexicographic order, so every polynomial is in canonical form at all
//! times: no zero coefficients are stored and iteration order is fixed.
//! All arithmetic is exact.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::field::Field;
use crate::error::Error;

/// Exponent vector of a term; fixed length = number of variables.
///
/// Ordered by total degree first, then lexicographically, which makes the
/// `BTreeMap` iteration order the graded-lex order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn constant(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Componentwise sum; exponent overflow is an error, never wraparound.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, Error> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| {
                a.checked_add(b)
                    .ok_or_else(|| Error::Overflow("monomial exponent".into()))
            })
            .collect::<Result<Vec<u32>, Error>>()?;
        Ok(Monomial { exps })
    }

    /// Componentwise difference, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for (&a, &b) in self.exps.iter().zip(&other.exps) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial { exps })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with coefficients in `F`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial<F: Field> {
    field: F,
    nvars: usize,
    terms: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(field: F, nvars: usize) -> Self {
        Polynomial {
            field,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: F, nvars: usize) -> Self {
        let c = field.one();
        Polynomial::constant(field, nvars, c)
    }

    pub fn constant(field: F, nvars: usize, c: F::Elem) -> Self {
        let mut terms = BTreeMap::new();
        if !field.is_zero(&c) {
            terms.insert(Monomial::constant(nvars), c);
        }
        Polynomial {
            field,
            nvars,
            terms,
        }
    }

    /// The polynomial `t_{index+1}`.
    pub fn variable(field: F, nvars: usize, index: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::variable(nvars, index), field.one());
        Polynomial {
            field,
            nvars,
            terms,
        }
    }

    /// Builds a polynomial from raw terms, merging duplicates and dropping
    /// zero coefficients.
    pub fn from_terms(
        field: F,
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, F::Elem)>,
    ) -> Result<Self, Error> {
        let mut poly = Polynomial::zero(field, nvars);
        for (m, c) in terms {
            if m.exponents().len() != nvars {
                return Err(Error::Mismatch(format!(
                    "monomial has {} exponents, expected {nvars}",
                    m.exponents().len()
                )));
            }
            poly.accumulate(m, c);
        }
        Ok(poly)
    }

    fn from_term(field: F, nvars: usize, m: Monomial, c: F::Elem) -> Self {
        let mut terms = BTreeMap::new();
        if !field.is_zero(&c) {
            terms.insert(m, c);
        }
        Polynomial {
            field,
            nvars,
            terms,
        }
    }

    fn accumulate(&mut self, m: Monomial, c: F::Elem) {
        if self.field.is_zero(&c) {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let sum = self.field.add(&old, &c);
                if !self.field.is_zero(&sum) {
                    self.terms.insert(m, sum);
                }
            }
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_constant)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// `true` iff every term has the same total degree (the zero polynomial
    /// counts as homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }

    /// Leading term under graded-lex order.
    pub fn leading(&self) -> Option<(Monomial, F::Elem)> {
        self.terms
            .iter()
            .next_back()
            .map(|(m, c)| (m.clone(), c.clone()))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F::Elem)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&F::Elem> {
        self.terms.get(m)
    }

    fn check_compat(&self, other: &Self) -> Result<(), Error> {
        if self.field != other.field {
            return Err(Error::Mismatch(format!(
                "coefficient fields differ (characteristic {} vs {})",
                self.field.characteristic(),
                other.field.characteristic()
            )));
        }
        if self.nvars != other.nvars {
            return Err(Error::Mismatch(format!(
                "variable counts differ ({} vs {})",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    /// Exact sum; fails on field or variable-count mismatch.
    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.negated())
    }

    pub fn negated(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), self.field.neg(c)))
            .collect();
        Polynomial {
            field: self.field.clone(),
            nvars: self.nvars,
            terms,
        }
    }

    /// Exact product; fails on field or variable-count mismatch.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_compat(other)?;
        let mut out = Polynomial::zero(self.field.clone(), self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.checked_mul(mb)?;
                let c = self.field.mul(ca, cb);
                out.accumulate(m, c);
            }
        }
        Ok(out)
    }

    /// Multiplies by a scalar.
    pub fn scaled(&self, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Polynomial::zero(self.field.clone(), self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), self.field.mul(a, c)))
            .collect();
        Polynomial {
            field: self.field.clone(),
            nvars: self.nvars,
            terms,
        }
    }

    pub fn pow(&self, exp: u32) -> Result<Self, Error> {
        let mut out = Polynomial::one(self.field.clone(), self.nvars);
        for _ in 0..exp {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Exact quotient `self / divisor`, or `None` when `divisor` does not
    /// divide `self`. Relies on graded-lex being multiplicative: if the
    /// quotient exists its leading term is the quotient of leading terms, so
    /// repeated leading-term elimination either terminates at zero or proves
    /// non-divisibility the moment a leading monomial fails to divide.
    pub fn div_exact(&self, divisor: &Self) -> Result<Option<Self>, Error> {
        self.check_compat(divisor)?;
        if divisor.is_zero() {
            return Err(Error::Domain("division by the zero polynomial".into()));
        }
        let (dm, dc) = divisor
            .leading()
            .expect("nonzero divisor has a leading term");
        let dc_inv = self
            .field
            .inv(&dc)
            .expect("leading coefficient of a nonzero polynomial is invertible");
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.field.clone(), self.nvars);
        while let Some((rm, rc)) = rem.leading() {
            let qm = match rm.checked_div(&dm) {
                Some(qm) => qm,
                None => return Ok(None),
            };
            let qc = self.field.mul(&rc, &dc_inv);
            let term = Polynomial::from_term(self.field.clone(), self.nvars, qm, qc);
            rem = rem.sub(&term.mul(divisor)?)?;
            quot = quot.add(&term)?;
        }
        Ok(Some(quot))
    }

    /// Whether `self` divides `a` exactly; `self` must be nonzero.
    pub fn divides(&self, a: &Self) -> Result<bool, Error> {
        Ok(a.div_exact(self)?.is_some())
    }

    /// Canonical text form, e.g. `2*t1^2*t2 + t2^3`. Terms appear in
    /// descending graded-lex order; unit coefficients are suppressed.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = self.field.renders_negative(c);
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = self.field.render_abs(c);
            if m.is_constant() {
                write!(f, "{}", self.field.render(&abs))?;
                continue;
            }
            if !self.field.is_one(&abs) {
                write!(f, "{}*", self.field.render(&abs))?;
            }
            let mut first_var = true;
            for (j, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first_var {
                    write!(f, "*")?;
                }
                first_var = false;
                write!(f, "t{}", j + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// A nonzero homogeneous degree-1 form `c_1*t_1 + ... + c_k*t_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearForm<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> LinearForm<F> {
    pub fn new(field: F, coeffs: Vec<F::Elem>) -> Result<Self, Error> {
        if coeffs.is_empty() || coeffs.iter().all(|c| field.is_zero(c)) {
            return Err(Error::Domain("linear form must be nonzero".into()));
        }
        Ok(LinearForm { field, coeffs })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coefficients(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn to_polynomial(&self) -> Polynomial<F> {
        let nvars = self.coeffs.len();
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(|(i, c)| (Monomial::variable(nvars, i), c.clone()));
        Polynomial::from_terms(self.field.clone(), nvars, terms)
            .expect("linear form exponents are well-formed")
    }
}

impl<F: Field> fmt::Display for LinearForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}

/// Expanded product of linear forms with multiplicities; the empty product
/// is 1. Multiplicity 0 entries are permitted and contribute nothing.
pub fn linear_product<F: Field>(
    field: &F,
    nvars: usize,
    factors: &[(LinearForm<F>, u32)],
) -> Result<Polynomial<F>, Error> {
    let mut out = Polynomial::one(field.clone(), nvars);
    for (form, mult) in factors {
        if form.nvars() != nvars {
            return Err(Error::Mismatch(format!(
                "linear form has {} variables, expected {nvars}",
                form.nvars()
            )));
        }
        let poly = form.to_polynomial();
        for _ in 0..*mult {
            out = out.mul(&poly)?;
        }
    }
    Ok(out)
}

/// Result of [`factor_into_lines`]: per-candidate multiplicities (parallel to
/// the candidate slice) and the leftover scalar unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineFactorization<F: Field> {
    pub multiplicities: Vec<u32>,
    pub unit: F::Elem,
}

impl<F: Field> LineFactorization<F> {
    /// Pairs each candidate with its multiplicity, dropping zero entries.
    pub fn factors<'a>(&self, candidates: &'a [LinearForm<F>]) -> Vec<(&'a LinearForm<F>, u32)> {
        candidates
            .iter()
            .zip(&self.multiplicities)
            .filter(|(_, &m)| m > 0)
            .map(|(f, &m)| (f, m))
            .collect()
    }
}

/// Writes `a` as `unit * product(candidate_i ^ m_i)` by trial division, or
/// returns `None` when `a` is not a product of the candidate lines.
///
/// Candidates should be pairwise non-proportional; over a field the resulting
/// multiset is then independent of the division order (unique factorization).
pub fn factor_into_lines<F: Field>(
    a: &Polynomial<F>,
    candidates: &[LinearForm<F>],
) -> Result<Option<LineFactorization<F>>, Error> {
    if a.is_zero() {
        return Err(Error::Domain("cannot factor the zero polynomial".into()));
    }
    let mut rem = a.clone();
    let mut multiplicities = vec![0u32; candidates.len()];
    for (i, line) in candidates.iter().enumerate() {
        let poly = line.to_polynomial();
        while let Some(q) = rem.div_exact(&poly)? {
            rem = q;
            multiplicities[i] += 1;
        }
    }
    if !rem.is_constant() {
        return Ok(None);
    }
    let unit = rem
        .leading()
        .map(|(_, c)| c)
        .expect("remainder of a nonzero polynomial stays nonzero");
    Ok(Some(LineFactorization {
        multiplicities,
        unit,
    }))
}
