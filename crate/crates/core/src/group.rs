//! The acting group and its corank-1 subtori.
//!
//! The group is `(Z_p)^k` for prime `p` or `(S^1)^k` (encoded as `p = 0`).
//! A corank-1 subtorus is named by the projective class of a character
//! vanishing on it: a normalized direction vector. Over F_p normalization
//! scales the first nonzero entry to 1; over the integers it divides by the
//! gcd and makes the first nonzero entry positive. Both conventions are
//! idempotent, so line equality is plain vector equality.

use std::fmt;

use num_integer::Integer;

use crate::algebra::field::{is_prime, Field, PrimeField};
use crate::algebra::LinearForm;
use crate::error::Error;

/// A p-torus `(Z_p)^k` (p prime) or torus `(S^1)^k` (p = 0) of rank `k >= 1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GroupSpec {
    p: u64,
    rank: usize,
}

impl GroupSpec {
    pub fn new(p: u64, rank: usize) -> Result<Self, Error> {
        if p != 0 && !is_prime(p) {
            return Err(Error::Domain(format!(
                "group characteristic must be 0 or a prime, got {p}"
            )));
        }
        if rank == 0 {
            return Err(Error::Domain("group rank must be at least 1".into()));
        }
        Ok(GroupSpec { p, rank })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_torus(&self) -> bool {
        self.p == 0
    }

    /// Canonical component vector of a character: representatives in `0..p`
    /// for prime p, unchanged integers for the torus.
    pub fn reduce_components(&self, components: &[i64]) -> Result<Vec<i64>, Error> {
        if components.len() != self.rank {
            return Err(Error::Mismatch(format!(
                "vector has {} components, group rank is {}",
                components.len(),
                self.rank
            )));
        }
        if self.p == 0 {
            return Ok(components.to_vec());
        }
        let p = self.p as i128;
        Ok(components
            .iter()
            .map(|&c| (((c as i128 % p) + p) % p) as i64)
            .collect())
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p == 0 {
            write!(f, "(S^1)^{}", self.rank)
        } else {
            write!(f, "(Z_{})^{}", self.p, self.rank)
        }
    }
}

/// A character of the group: a vector of length k over F_p (p prime) or Z
/// (p = 0). Weights labelling representation summands must be nonzero.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(components: Vec<i64>) -> Self {
        Weight(components)
    }

    pub fn components(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero_for(&self, g: &GroupSpec) -> Result<bool, Error> {
        Ok(g.reduce_components(&self.0)?.iter().all(|&c| c == 0))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A corank-1 subtorus, named by the normalized projective class of a
/// character vanishing on it.
///
/// Construction via [`line_of_weight`] or [`enumerate_lines`] always yields
/// the canonical form; [`SubtorusLine::from_raw`] keeps unvalidated input as
/// is so that data linting can report non-canonical keys.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SubtorusLine(Vec<i64>);

impl SubtorusLine {
    pub fn from_raw(direction: Vec<i64>) -> Self {
        SubtorusLine(direction)
    }

    pub fn direction(&self) -> &[i64] {
        &self.0
    }

    /// Whether this vector is the canonical representative of its class.
    pub fn is_normalized(&self, g: &GroupSpec) -> bool {
        line_of_weight(g, &Weight::new(self.0.clone()))
            .map(|l| l == *self)
            .unwrap_or(false)
    }
}

impl fmt::Display for SubtorusLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The corank-1 subtorus on which a nonzero character vanishes: the canonical
/// projective class of the weight.
pub fn line_of_weight(g: &GroupSpec, w: &Weight) -> Result<SubtorusLine, Error> {
    let reduced = g.reduce_components(w.components())?;
    if g.p == 0 {
        let gcd = reduced.iter().fold(0i64, |acc, &c| acc.gcd(&c));
        if gcd == 0 {
            return Err(Error::Domain("zero weight has no projective class".into()));
        }
        let mut dir: Vec<i64> = reduced.iter().map(|&c| c / gcd).collect();
        if dir.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0) {
            for c in &mut dir {
                *c = -*c;
            }
        }
        Ok(SubtorusLine(dir))
    } else {
        let field = PrimeField::new(g.p)?;
        let lead = match reduced.iter().position(|&c| c != 0) {
            Some(i) => i,
            None => return Err(Error::Domain("zero weight has no projective class".into())),
        };
        let scale = field
            .inv(&(reduced[lead] as u64))
            .expect("leading entry is nonzero");
        let dir = reduced
            .iter()
            .map(|&c| field.mul(&(c as u64), &scale) as i64)
            .collect();
        Ok(SubtorusLine(dir))
    }
}

/// Whether the restriction of `w` to the subtorus named by `line` is trivial,
/// i.e. `w` is proportional to the line's direction.
pub fn vanishes_on(g: &GroupSpec, w: &Weight, line: &SubtorusLine) -> Result<bool, Error> {
    Ok(line_of_weight(g, w)? == *line)
}

/// Cap on the number of lines materialized at once; `(p^k - 1)/(p - 1)` grows
/// fast and anything near this cap is outside the tool's intended scale.
const MAX_ENUMERATED_LINES: u64 = 10_000_000;

/// All `(p^k - 1)/(p - 1)` corank-1 subtori of `(Z_p)^k`, in lexicographic
/// order of their normalized directions. Fails for the torus, which has
/// infinitely many corank-1 subtori; torus callers derive lines from data.
pub fn enumerate_lines(g: &GroupSpec) -> Result<Vec<SubtorusLine>, Error> {
    if g.p == 0 {
        return Err(Error::Unsupported(
            "the torus has infinitely many corank-1 subtori; derive lines from weights".into(),
        ));
    }
    let p = g.p;
    let k = g.rank;
    let mut total: u128 = 0;
    for lead in 0..k {
        let tail = (k - lead - 1) as u32;
        total = total.saturating_add((p as u128).saturating_pow(tail));
        if total > MAX_ENUMERATED_LINES as u128 {
            return Err(Error::Budget {
                candidates: total,
                limit: MAX_ENUMERATED_LINES as u128,
            });
        }
    }
    let mut out = Vec::with_capacity(total as usize);
    // Canonical representatives have first nonzero entry 1; everything after
    // the leading 1 ranges freely over 0..p.
    for lead in 0..k {
        let tail = k - lead - 1;
        let count = (p as u128).pow(tail as u32);
        for mut code in 0..count {
            let mut dir = vec![0i64; k];
            dir[lead] = 1;
            for slot in (0..tail).rev() {
                dir[lead + 1 + slot] = (code % p as u128) as i64;
                code /= p as u128;
            }
            out.push(SubtorusLine(dir));
        }
    }
    out.sort();
    Ok(out)
}

/// The linear form `s_H` generating the kernel ideal of the restriction
/// `H*(BG) -> H*(BH)`: the direction's coefficients transcribed into the
/// coefficient field of the group.
pub fn s_h<F: Field>(g: &GroupSpec, line: &SubtorusLine) -> Result<LinearForm<F>, Error> {
    if line.direction().len() != g.rank {
        return Err(Error::Mismatch(format!(
            "line has {} components, group rank is {}",
            line.direction().len(),
            g.rank
        )));
    }
    let field = F::for_characteristic(g.p)?;
    let coeffs = line
        .direction()
        .iter()
        .map(|&c| field.from_int(c))
        .collect();
    LinearForm::new(field, coeffs)
}
