//! Exact integer Laurent polynomials in several variables.
//!
//! The invariant engine works in Z[t_1^{±1}, ..., t_k^{±1}] (or Z[q^{±1}]).
//! Terms are kept in a sorted map from exponent vectors to nonzero BigInt
//! coefficients, so equality is structural and printing is deterministic.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A Laurent polynomial with exact integer coefficients.
///
/// Exponent vectors always have length `vars.len()`. Zero coefficients are
/// never stored; the zero polynomial has an empty term map.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiLaurent {
    vars: Vec<String>,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl MultiLaurent {
    pub fn zero(vars: &[&str]) -> Self {
        Self { vars: vars.iter().map(|s| s.to_string()).collect(), terms: BTreeMap::new() }
    }

    pub fn zero_named(vars: Vec<String>) -> Self {
        Self { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[&str], c: i64) -> Self {
        let mut p = Self::zero(vars);
        if c != 0 {
            p.terms.insert(vec![0; p.vars.len()], BigInt::from(c));
        }
        p
    }

    pub fn one(vars: &[&str]) -> Self {
        Self::constant(vars, 1)
    }

    /// The monomial `c * prod vars[i]^exps[i]`.
    pub fn monomial(vars: &[&str], exps: &[i32], c: i64) -> Self {
        assert_eq!(vars.len(), exps.len());
        let mut p = Self::zero(vars);
        if c != 0 {
            p.terms.insert(exps.to_vec(), BigInt::from(c));
        }
        p
    }

    /// The variable `vars[i]` as a polynomial.
    pub fn var(vars: &[&str], i: usize) -> Self {
        let mut exps = vec![0; vars.len()];
        exps[i] = 1;
        Self::monomial(vars, &exps, 1)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: Vec<i32>, c: BigInt) {
        assert_eq!(exps.len(), self.vars.len());
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            // remove the key we just zeroed
            let key: Vec<Vec<i32>> = self
                .terms
                .iter()
                .filter(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in key {
                self.terms.remove(&k);
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch(format!(
                "{:?} vs {:?}",
                self.vars, other.vars
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for (_, c) in out.terms.iter_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero_named(self.vars.clone());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn mul_scalar(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero_named(self.vars.clone());
        }
        let mut out = self.clone();
        for (_, v) in out.terms.iter_mut() {
            *v *= c;
        }
        out
    }

    /// Multiply by the monomial `sign * prod vars[i]^shift[i]`.
    pub fn mul_monomial(&self, shift: &[i32], sign: i64) -> Self {
        assert_eq!(shift.len(), self.vars.len());
        let mut out = Self::zero_named(self.vars.clone());
        for (e, c) in &self.terms {
            let ne: Vec<i32> = e.iter().zip(shift).map(|(a, b)| a + b).collect();
            out.terms.insert(ne, c * sign);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Result<Self> {
        let mut out = Self::one_named(self.vars.clone());
        for _ in 0..n {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    fn one_named(vars: Vec<String>) -> Self {
        let mut p = Self::zero_named(vars);
        p.terms.insert(vec![0; p.vars.len()], BigInt::one());
        p
    }

    /// Evaluate at an integer point assigning every variable.
    pub fn evaluate(&self, point: &[i64]) -> Result<BigInt> {
        if point.len() != self.vars.len() {
            return Err(Error::VariableMismatch(format!(
                "point has {} coordinates, polynomial has {} variables",
                point.len(),
                self.vars.len()
            )));
        }
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &exp) in e.iter().enumerate() {
                let base = BigInt::from(point[i]);
                if exp >= 0 {
                    term *= base.pow(exp as u32);
                } else {
                    // only ±1 can be inverted over Z
                    if base.magnitude() != BigInt::one().magnitude() {
                        return Err(Error::VariableMismatch(format!(
                            "cannot evaluate negative exponent at {}",
                            point[i]
                        )));
                    }
                    term *= base.pow((-exp) as u32);
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Substitute `vars[i] = 1`, keeping the variable list unchanged.
    pub fn subst_one(&self, i: usize) -> Self {
        let mut out = Self::zero_named(self.vars.clone());
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne[i] = 0;
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Remove variable `i`; fails unless the polynomial has degree 0 in it.
    pub fn drop_var(&self, i: usize) -> Result<Self> {
        let mut vars = self.vars.clone();
        vars.remove(i);
        let mut out = Self::zero_named(vars);
        for (e, c) in &self.terms {
            if e[i] != 0 {
                return Err(Error::VariableMismatch(format!(
                    "polynomial depends on {}",
                    self.vars[i]
                )));
            }
            let mut ne = e.clone();
            ne.remove(i);
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Reinterpret with new variable names (same count, e.g. after deleting a
    /// link component the remaining components are renumbered).
    pub fn rename_vars(&self, vars: &[&str]) -> Self {
        assert_eq!(vars.len(), self.vars.len());
        Self {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: self.terms.clone(),
        }
    }

    /// Apply a permutation of the variables: new position `i` reads old
    /// position `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.vars.len());
        let vars: Vec<String> = perm.iter().map(|&p| self.vars[p].clone()).collect();
        let mut out = Self::zero_named(vars);
        for (e, c) in &self.terms {
            let ne: Vec<i32> = perm.iter().map(|&p| e[p]).collect();
            out.terms.insert(ne, c.clone());
        }
        out
    }

    /// Invert variable `i` (t -> t^{-1}), e.g. for orientation reversal.
    pub fn invert_var(&self, i: usize) -> Self {
        let mut out = Self::zero_named(self.vars.clone());
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne[i] = -ne[i];
            out.terms.insert(ne, c.clone());
        }
        out
    }

    fn min_exponents(&self) -> Vec<i32> {
        let n = self.vars.len();
        let mut mins = vec![i32::MAX; n];
        for e in self.terms.keys() {
            for i in 0..n {
                mins[i] = mins[i].min(e[i]);
            }
        }
        mins
    }

    /// Canonical representative of the unit-equivalence class
    /// (multiplication by ±∏ t_i^{a_i}): every variable's minimal exponent
    /// becomes 0 and the coefficient of the lexicographically last exponent
    /// vector (t_1 most significant) is positive. Idempotent. The zero
    /// polynomial is returned unchanged.
    pub fn canonical_unit_normalize(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mins = self.min_exponents();
        let shift: Vec<i32> = mins.iter().map(|m| -m).collect();
        let mut out = self.mul_monomial(&shift, 1);
        // BTreeMap orders exponent vectors lexicographically, so the last
        // key is the lex-leading term.
        let lead = out.terms.iter().next_back().map(|(_, c)| c.clone()).unwrap();
        if lead.is_negative() {
            out = out.neg();
        }
        out
    }

    /// Unit equality: equal after canonical normalization.
    pub fn unit_eq(&self, other: &Self) -> bool {
        self.vars == other.vars
            && self.canonical_unit_normalize() == other.canonical_unit_normalize()
    }

    /// Exact division; `self = g * h` returns `h`, else an inexactness error.
    pub fn divide_exact(&self, g: &Self) -> Result<Self> {
        self.check_vars(g)?;
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_zero() {
            return Ok(Self::zero_named(self.vars.clone()));
        }
        // Leading-term division against the lex-leading term of g. Exactness
        // is verified by the remainder reaching exactly zero.
        let (g_lead_e, g_lead_c) = g.terms.iter().next_back().unwrap();
        let mut rem = self.clone();
        let mut quo = Self::zero_named(self.vars.clone());
        while !rem.is_zero() {
            let (r_e, r_c) = {
                let (e, c) = rem.terms.iter().next_back().unwrap();
                (e.clone(), c.clone())
            };
            let (q, r) = num_integer::div_rem(r_c, g_lead_c.clone());
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            let shift: Vec<i32> = r_e.iter().zip(g_lead_e).map(|(a, b)| a - b).collect();
            let mut t = Self::zero_named(self.vars.clone());
            t.terms.insert(shift, q);
            quo = quo.add(&t)?;
            rem = rem.sub(&g.mul(&t)?)?;
            // In exact divisions the leading term strictly decreases; guard
            // against non-exact inputs where it would not.
            if let Some((e2, _)) = rem.terms.iter().next_back() {
                if *e2 >= r_e {
                    return Err(Error::InexactDivision);
                }
            }
        }
        Ok(quo)
    }

    /// Integer content (gcd of coefficients, positive).
    fn content_int(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = num_integer::gcd(g, c.clone());
        }
        g
    }

    /// Total degree in variable `i` (max - min exponent), 0 for zero poly.
    pub fn degree_span(&self, i: usize) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let mut lo = i32::MAX;
        let mut hi = i32::MIN;
        for e in self.terms.keys() {
            lo = lo.min(e[i]);
            hi = hi.max(e[i]);
        }
        hi - lo
    }

    /// A gcd over the Laurent ring, canonical-normalized. Primitive-part /
    /// content recursion over the variable of smallest degree span.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let a = self.canonical_unit_normalize();
        let b = other.canonical_unit_normalize();
        Ok(gcd_poly(&a, &b).canonical_unit_normalize())
    }
}

/// gcd of two polynomials with nonnegative exponents.
fn gcd_poly(a: &MultiLaurent, b: &MultiLaurent) -> MultiLaurent {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let n = a.vars.len();
    // pick the main variable: smallest positive degree span in a*b
    let mut main = None;
    let mut best = i32::MAX;
    for i in 0..n {
        let s = a.degree_span(i).max(b.degree_span(i));
        if s > 0 && s < best {
            best = s;
            main = Some(i);
        }
    }
    let Some(main) = main else {
        // both are monomial-free constants (times integer content)
        let g = num_integer::gcd(a.content_int(), b.content_int());
        let vars: Vec<&str> = a.vars.iter().map(|s| s.as_str()).collect();
        let mut p = MultiLaurent::zero(&vars);
        p.terms.insert(vec![0; n], g);
        return p;
    };
    // view as univariate in `main` with MultiLaurent coefficients
    let ca = univariate_view(a, main);
    let cb = univariate_view(b, main);
    let (cont_a, prim_a) = content_and_primitive(&ca, a, main);
    let (cont_b, prim_b) = content_and_primitive(&cb, b, main);
    let cont = gcd_poly(&cont_a, &cont_b);
    let prim = primitive_prs(&prim_a, &prim_b, main);
    cont.mul(&prim).expect("same vars")
}

type UniView = BTreeMap<i32, MultiLaurent>;

fn univariate_view(p: &MultiLaurent, main: usize) -> UniView {
    let mut out: UniView = BTreeMap::new();
    for (e, c) in &p.terms {
        let d = e[main];
        let mut ne = e.clone();
        ne[main] = 0;
        let entry = out
            .entry(d)
            .or_insert_with(|| MultiLaurent::zero_named(p.vars.clone()));
        entry.add_term(ne, c.clone());
    }
    out
}

fn from_univariate(view: &UniView, main: usize, vars: &[String]) -> MultiLaurent {
    let mut out = MultiLaurent::zero_named(vars.to_vec());
    for (d, coeff) in view {
        for (e, c) in &coeff.terms {
            let mut ne = e.clone();
            ne[main] = *d;
            out.add_term(ne, c.clone());
        }
    }
    out
}

fn content_and_primitive(
    view: &UniView,
    p: &MultiLaurent,
    main: usize,
) -> (MultiLaurent, MultiLaurent) {
    let mut cont = MultiLaurent::zero_named(p.vars.clone());
    for coeff in view.values() {
        cont = gcd_poly(&cont.canonical_unit_normalize(), &coeff.canonical_unit_normalize());
    }
    let prim = p.divide_exact(&cont).expect("content divides");
    (cont, prim.canonical_unit_normalize())
}

/// Primitive pseudo-remainder sequence in the main variable.
fn primitive_prs(a: &MultiLaurent, b: &MultiLaurent, main: usize) -> MultiLaurent {
    let mut f = a.clone();
    let mut g = b.clone();
    loop {
        if g.is_zero() {
            return f.canonical_unit_normalize();
        }
        let fv = univariate_view(&f, main);
        let gv = univariate_view(&g, main);
        let df = *fv.keys().next_back().unwrap_or(&0);
        let dg = *gv.keys().next_back().unwrap_or(&0);
        if df < dg {
            std::mem::swap(&mut f, &mut g);
            continue;
        }
        // pseudo-remainder of f by g
        let lg = gv[&dg].clone();
        let mut r = f.clone();
        let mut k = df;
        while !r.is_zero() {
            let rv = univariate_view(&r, main);
            let dr = *rv.keys().next_back().unwrap();
            if dr < dg {
                break;
            }
            let lr = rv[&dr].clone();
            // r <- lg*r - lr*g*x^{dr-dg}
            let mut shift = vec![0; r.vars().len()];
            shift[main] = dr - dg;
            r = lg
                .mul(&r)
                .and_then(|x| x.sub(&lr.mul(&g.mul_monomial(&shift, 1)).unwrap()))
                .expect("same vars");
            k -= 1;
            if k < -1 {
                break;
            }
        }
        // strip content to keep things primitive
        if !r.is_zero() {
            let rv = univariate_view(&r, main);
            let (cont, prim) = content_and_primitive(&rv, &r, main);
            let _ = cont;
            r = prim;
        }
        f = g;
        g = r;
    }
}

impl fmt::Display for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // descending lex so leading terms print first
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mut mono = String::new();
            for (i, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push('*');
                }
                if exp == 1 {
                    mono.push_str(&self.vars[i]);
                } else {
                    mono.push_str(&format!("{}^{}", self.vars[i], exp));
                }
            }
            let abs = c.magnitude().to_string();
            let sign_str = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign_str)?;
            }
            if mono.is_empty() {
                write!(f, "{}", abs)?;
            } else if abs == "1" {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}*{}", abs, mono)?;
            }
        }
        Ok(())
    }
}

/// Parse the textual polynomial format. Accepts expanded or factored input:
/// integers, variables (declared by `vars`), `^` with possibly negative
/// exponents, `+`, `-`, `*`, parentheses, and implicit multiplication by
/// juxtaposition, e.g. `(t1-1)(t2t3 - t3 + 1)` or `q^-4 + 2*q^2`.
pub fn parse_poly(text: &str, vars: &[&str]) -> Result<MultiLaurent> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        vars,
    };
    let e = p.parse_expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(Error::Syntax {
            pos: p.pos,
            msg: "trailing input".into(),
        });
    }
    Ok(e)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    vars: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && (self.bytes[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.bytes.get(self.pos).map(|&b| b as char)
    }

    fn parse_expr(&mut self) -> Result<MultiLaurent> {
        let mut acc = MultiLaurent::zero(self.vars);
        let mut sign = 1i64;
        // leading sign
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                sign = -1;
            }
            Some('+') => {
                self.pos += 1;
            }
            _ => {}
        }
        loop {
            let term = self.parse_term()?;
            acc = acc.add(&term.mul_scalar(sign))?;
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some('-') => {
                    self.pos += 1;
                    sign = -1;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<MultiLaurent> {
        let mut acc = self.parse_factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    let f = self.parse_factor()?;
                    acc = acc.mul(&f)?;
                }
                Some(c) if c == '(' || c.is_ascii_alphabetic() || c.is_ascii_digit() => {
                    let f = self.parse_factor()?;
                    acc = acc.mul(&f)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<MultiLaurent> {
        let base = self.parse_atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let exp = self.parse_int()?;
            if exp >= 0 {
                return base.pow(exp as u32);
            }
            // negative power is only defined for monomials
            if base.term_count() != 1 {
                return Err(Error::Syntax {
                    pos: self.pos,
                    msg: "negative exponent on a non-monomial".into(),
                });
            }
            let (e, c) = base.terms.iter().next().unwrap();
            if c.magnitude() != BigInt::one().magnitude() {
                return Err(Error::Syntax {
                    pos: self.pos,
                    msg: "negative exponent on a non-unit coefficient".into(),
                });
            }
            let shift: Vec<i32> = e.iter().map(|&x| x * (exp as i32)).collect();
            let sign = if c.is_negative() && exp % 2 != 0 { -1 } else { 1 };
            let mut out = MultiLaurent::zero(self.vars);
            out.terms.insert(shift, BigInt::from(sign));
            return Ok(out);
        }
        Ok(base)
    }

    fn parse_atom(&mut self) -> Result<MultiLaurent> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.parse_expr()?;
                if self.peek() != Some(')') {
                    return Err(Error::Syntax {
                        pos: self.pos,
                        msg: "expected `)`".into(),
                    });
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.parse_int()?;
                Ok(MultiLaurent::constant(self.vars, n))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                // longest-match variable name
                let start = self.pos;
                let mut best: Option<(usize, usize)> = None; // (var idx, end pos)
                for (i, v) in self.vars.iter().enumerate() {
                    let vb = v.as_bytes();
                    if self.bytes[start..].starts_with(vb) {
                        let end = start + vb.len();
                        if best.map_or(true, |(_, e)| end > e) {
                            best = Some((i, end));
                        }
                    }
                }
                let Some((i, end)) = best else {
                    return Err(Error::Syntax {
                        pos: start,
                        msg: format!("unknown variable starting at `{}`", c),
                    });
                };
                self.pos = end;
                Ok(MultiLaurent::var(self.vars, i))
            }
            other => Err(Error::Syntax {
                pos: self.pos,
                msg: format!("unexpected {:?}", other),
            }),
        }
    }

    fn parse_int(&mut self) -> Result<i64> {
        self.skip_ws();
        let mut sign = 1i64;
        if self.bytes.get(self.pos) == Some(&b'-') {
            sign = -1;
            self.pos += 1;
        }
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Syntax {
                pos: self.pos,
                msg: "expected integer".into(),
            });
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        s.parse::<i64>()
            .map(|n| sign * n)
            .map_err(|e| Error::Syntax {
                pos: start,
                msg: e.to_string(),
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const T3: &[&str] = &["t1", "t2", "t3"];

    #[test]
    fn arith_basics() {
        let t1 = MultiLaurent::var(T3, 0);
        let one = MultiLaurent::one(T3);
        let f = t1.sub(&one).unwrap(); // t1 - 1
        let g = t1.add(&one).unwrap(); // t1 + 1
        let prod = f.mul(&g).unwrap();
        let expect = parse_poly("t1^2 - 1", T3).unwrap();
        assert_eq!(prod, expect);
        // f + (-f) = 0
        assert!(f.add(&f.neg()).unwrap().is_zero());
    }

    #[test]
    fn evaluate_knit_mva_at_minus_one() {
        // Table value for the knit column evaluated at (-1,-1,-1) is -2.
        let f = parse_poly("(1-t1)(t3^2 + t2 - t3)(t3^2 - t2t3 + t2)", T3).unwrap();
        assert_eq!(f.evaluate(&[-1, -1, -1]).unwrap(), BigInt::from(-2));
    }

    #[test]
    fn divide_exact_basics() {
        let f = parse_poly("t1^2 - 1", T3).unwrap();
        let g = parse_poly("t1 - 1", T3).unwrap();
        let h = f.divide_exact(&g).unwrap();
        assert_eq!(h, parse_poly("t1 + 1", T3).unwrap());
        let bad = parse_poly("t1^2 + 1", T3).unwrap();
        assert_eq!(bad.divide_exact(&g), Err(Error::InexactDivision));
    }

    #[test]
    fn canonical_form() {
        // -t1^{-2} (t1 - 1) normalizes to t1 - 1
        let f = parse_poly("t1 - 1", T3).unwrap();
        let shifted = f.mul_monomial(&[-2, 0, 0], -1);
        let c = shifted.canonical_unit_normalize();
        assert_eq!(c, f.canonical_unit_normalize());
        // idempotent
        assert_eq!(c.canonical_unit_normalize(), c);
        // negation has the same canonical form
        assert!(f.unit_eq(&f.neg()));
    }

    #[test]
    fn gcd_basics() {
        let f = parse_poly("t1^2 - 1", T3).unwrap();
        let g = parse_poly("t1 - 1", T3).unwrap();
        assert_eq!(f.gcd(&g).unwrap(), g.canonical_unit_normalize());
        assert_eq!(f.gcd(&f).unwrap(), f.canonical_unit_normalize());
        let a = parse_poly("(t1-1)(t2t3 - t3 + 1)", T3).unwrap();
        let b = parse_poly("(t1-1)(t3^2 + t2 - t3)", T3).unwrap();
        let g2 = a.gcd(&b).unwrap();
        assert_eq!(g2, parse_poly("t1-1", T3).unwrap());
    }

    #[test]
    fn parse_print_round_trip() {
        let f = parse_poly("(t1 - 1)^2 (t2t3t4 - t3t4 + t3 + t4 - 1)", &["t1", "t2", "t3", "t4"])
            .unwrap();
        let text = f.to_string();
        let g = parse_poly(&text, &["t1", "t2", "t3", "t4"]).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn q_negative_powers() {
        let f = parse_poly("q^-4(1+q^2)", &["q"]).unwrap();
        assert_eq!(f, parse_poly("q^-4 + q^-2", &["q"]).unwrap());
    }
}
