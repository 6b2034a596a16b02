//! Free-group words, Fox derivatives, and group presentations.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::MultiLaurent;

/// A word in a free group, as a sequence of syllables `(generator, exponent)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
pub struct FreeWord {
    syllables: Vec<(usize, i32)>,
}

impl FreeWord {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn gen(g: usize) -> Self {
        Self { syllables: vec![(g, 1)] }
    }

    pub fn from_syllables(syllables: Vec<(usize, i32)>) -> Self {
        Self { syllables }.reduce()
    }

    pub fn syllables(&self) -> &[(usize, i32)] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Contract adjacent equal generators and drop zero exponents. The
    /// normal form is unique, so reduced words compare structurally.
    pub fn reduce(&self) -> Self {
        let mut out: Vec<(usize, i32)> = Vec::with_capacity(self.syllables.len());
        for &(g, e) in &self.syllables {
            if e == 0 {
                continue;
            }
            match out.last_mut() {
                Some((lg, le)) if *lg == g => {
                    *le += e;
                    if *le == 0 {
                        out.pop();
                    }
                }
                _ => out.push((g, e)),
            }
        }
        Self { syllables: out }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut syl = self.syllables.clone();
        syl.extend_from_slice(&other.syllables);
        Self { syllables: syl }.reduce()
    }

    pub fn inverse(&self) -> Self {
        Self {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|&(g, e)| (g, -e))
                .collect(),
        }
    }

    /// Exponent sum of each generator, for abelianization.
    pub fn exponent_sums(&self, n_gens: usize) -> Vec<i64> {
        let mut sums = vec![0i64; n_gens];
        for &(g, e) in &self.syllables {
            sums[g] += e as i64;
        }
        sums
    }

    /// Largest generator index used, if any.
    pub fn max_gen(&self) -> Option<usize> {
        self.syllables.iter().map(|&(g, _)| g).max()
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "1");
        }
        for (i, (g, e)) in self.syllables.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            if *e == 1 {
                write!(f, "x{}", g)?;
            } else {
                write!(f, "x{}^{}", g, e)?;
            }
        }
        Ok(())
    }
}

/// A formal integer combination of free words.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroupRingElement {
    terms: BTreeMap<FreeWord, BigInt>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(FreeWord::empty())
    }

    pub fn from_word(w: FreeWord) -> Self {
        let mut t = BTreeMap::new();
        t.insert(w.reduce(), BigInt::one());
        Self { terms: t }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: FreeWord, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let w = w.reduce();
        let entry = self.terms.entry(w.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    /// Left-multiply every term by the word `w`.
    pub fn left_mul(&self, w: &FreeWord) -> Self {
        let mut out = Self::zero();
        for (t, c) in &self.terms {
            out.add_term(w.concat(t), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }
}

/// Fox derivative of a reduced word with respect to generator `x`:
/// ∂x/∂x = 1, ∂y/∂x = 0, ∂x⁻¹/∂x = −x⁻¹, ∂(uv)/∂x = ∂u/∂x + u·∂v/∂x.
pub fn fox_derivative(w: &FreeWord, x: usize) -> GroupRingElement {
    let w = w.reduce();
    let mut acc = GroupRingElement::zero();
    let mut prefix = FreeWord::empty();
    for &(g, e) in w.syllables() {
        if g == x {
            // ∂(x^e)/∂x = 1 + x + ... + x^{e-1}   (e > 0)
            //           = -(x^{-1} + ... + x^{e}) (e < 0)
            if e > 0 {
                for k in 0..e {
                    let t = prefix.concat(&FreeWord::from_syllables(vec![(x, k)]));
                    acc.add_term(t, BigInt::one());
                }
            } else {
                for k in 1..=(-e) {
                    let t = prefix.concat(&FreeWord::from_syllables(vec![(x, -k)]));
                    acc.add_term(t, -BigInt::one());
                }
            }
        }
        prefix = prefix.concat(&FreeWord::from_syllables(vec![(g, e)]));
    }
    acc
}

/// Abelianize a group-ring element: each word maps to the monomial of its
/// exponent sums under `gen_var` (generator index -> variable index).
pub fn abelianize(
    e: &GroupRingElement,
    gen_var: &[usize],
    vars: &[&str],
) -> Result<MultiLaurent> {
    let mut out = MultiLaurent::zero(vars);
    for (w, c) in e.terms() {
        let mut exps = vec![0i32; vars.len()];
        for &(g, k) in w.syllables() {
            let v = *gen_var
                .get(g)
                .ok_or_else(|| Error::UnmappedGenerator(format!("x{}", g)))?;
            if v >= vars.len() {
                return Err(Error::UnmappedGenerator(format!("x{}", g)));
            }
            exps[v] += k;
        }
        out.add_term(exps, c.clone());
    }
    Ok(out)
}

/// A finite group presentation with a generator -> link component map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<FreeWord>,
    /// component index of each generator (the over-arc's component)
    pub gen_component: Vec<usize>,
    pub n_components: usize,
}

impl Presentation {
    pub fn validate(&self) -> Result<()> {
        for r in &self.relators {
            if let Some(m) = r.max_gen() {
                if m >= self.generators.len() {
                    return Err(Error::UnmappedGenerator(format!("x{}", m)));
                }
            }
        }
        if self.gen_component.len() != self.generators.len() {
            return Err(Error::UnmappedGenerator("component map size".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &[(usize, i32)]) -> FreeWord {
        FreeWord::from_syllables(s.to_vec())
    }

    #[test]
    fn reduce_examples() {
        // x x^{-1} -> empty
        assert!(w(&[(0, 1), (0, -1)]).is_empty());
        // a^3 a^{-1} b^0 b^2 -> a^2 b^2
        let r = w(&[(0, 3), (0, -1), (1, 0), (1, 2)]);
        assert_eq!(r, w(&[(0, 2), (1, 2)]));
        // already reduced stays put
        let r2 = w(&[(0, 2), (1, -1)]);
        assert_eq!(r2.reduce(), r2);
    }

    #[test]
    fn reduction_confluent() {
        // scramblings of the same element reduce to one normal form
        let a = w(&[(0, 1), (1, 1), (1, -1), (0, 1), (0, -2)]);
        let b = w(&[(0, 1), (0, -1)]);
        assert_eq!(a, b);
    }

    #[test]
    fn fox_axioms() {
        let x = FreeWord::gen(0);
        let dx = fox_derivative(&x, 0);
        assert_eq!(dx, GroupRingElement::one());
        let dy = fox_derivative(&FreeWord::gen(1), 0);
        assert!(dy.is_zero());
        let xinv = x.inverse();
        let d = fox_derivative(&xinv, 0);
        let mut expect = GroupRingElement::zero();
        expect.add_term(w(&[(0, -1)]), BigInt::from(-1));
        assert_eq!(d, expect);
    }

    #[test]
    fn fox_conjugate() {
        // ∂(x y x^{-1})/∂x = 1 - x y x^{-1}
        let word = w(&[(0, 1), (1, 1), (0, -1)]);
        let d = fox_derivative(&word, 0);
        let mut expect = GroupRingElement::one();
        expect.add_term(word.clone(), BigInt::from(-1));
        assert_eq!(d, expect);
    }

    #[test]
    fn fox_product_rule() {
        // ∂(uv) = ∂u + u ∂v for a few explicit pairs
        let u = w(&[(0, 2), (1, -1)]);
        let v = w(&[(1, 1), (0, -1), (1, 2)]);
        let duv = fox_derivative(&u.concat(&v), 0);
        let rhs = fox_derivative(&u, 0).add(&fox_derivative(&v, 0).left_mul(&u));
        assert_eq!(duv, rhs);
    }

    #[test]
    fn abelianize_examples() {
        let vars = &["t"];
        // 1 - x y x^{-1}  with x,y -> t  gives 1 - t
        let word = w(&[(0, 1), (1, 1), (0, -1)]);
        let mut e = GroupRingElement::one();
        e.add_term(word, BigInt::from(-1));
        let p = abelianize(&e, &[0, 0], vars).unwrap();
        assert_eq!(p, crate::laurent::parse_poly("1 - t", vars).unwrap());
        // empty word -> 1
        let p1 = abelianize(&GroupRingElement::one(), &[0, 0], vars).unwrap();
        assert_eq!(p1, crate::laurent::parse_poly("1", vars).unwrap());
        // commutator dies
        let comm = w(&[(0, 1), (1, 1), (0, -1), (1, -1)]);
        let p2 = abelianize(&GroupRingElement::from_word(comm), &[0, 0], vars).unwrap();
        assert_eq!(p2, crate::laurent::parse_poly("1", vars).unwrap());
    }

    #[test]
    fn abelianize_multiplicative() {
        let vars = &["t1", "t2"];
        let u = w(&[(0, 1), (1, 2)]);
        let v = w(&[(1, -1), (0, 3)]);
        let eu = GroupRingElement::from_word(u.clone());
        let ev = GroupRingElement::from_word(v.clone());
        let lhs = abelianize(&eu.mul(&ev), &[0, 1], vars).unwrap();
        let rhs = abelianize(&eu, &[0, 1], vars)
            .unwrap()
            .mul(&abelianize(&ev, &[0, 1], vars).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}
