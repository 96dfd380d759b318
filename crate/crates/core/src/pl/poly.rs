//! Multivariate polynomials with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{fmt_rat, Rat};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Poly {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rat) -> Poly {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Poly {
        Poly::constant(nvars, Rat::one())
    }

    /// The linear form `x ↦ c·x`.
    pub fn linear(c: &[Rat]) -> Poly {
        let n = c.len();
        let mut p = Poly::zero(n);
        for (i, ci) in c.iter().enumerate() {
            if !ci.is_zero() {
                let mut e = vec![0; n];
                e[i] = 1;
                p.terms.insert(e, ci.clone());
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn constant_term(&self) -> Rat {
        self.terms.get(&vec![0; self.nvars]).cloned().unwrap_or_else(Rat::zero)
    }

    fn insert(&mut self, e: Vec<u32>, c: Rat) {
        let entry = self.terms.entry(e.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.insert(e.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, s: &Rat) -> Poly {
        if s.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut p = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.insert(e, c1 * c2);
            }
        }
        p
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut p = Poly::one(self.nvars);
        for _ in 0..k {
            p = p.mul(self);
        }
        p
    }

    pub fn derivative(&self, i: usize) -> Poly {
        let mut p = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = e.clone();
                f[i] -= 1;
                p.insert(f, c * Rat::from_integer(e[i].into()));
            }
        }
        p
    }

    /// Directional derivative `D_u`.
    pub fn directional(&self, u: &[Rat]) -> Poly {
        let mut p = Poly::zero(self.nvars);
        for (i, ui) in u.iter().enumerate() {
            if !ui.is_zero() {
                p = p.add(&self.derivative(i).scale(ui));
            }
        }
        p
    }

    /// Substitutes `x_i = Σ_j m[i][j] y_j`; the result has `m[0].len()` variables.
    pub fn compose_linear(&self, m: &[Vec<Rat>], new_vars: usize) -> Poly {
        let forms: Vec<Poly> = m.iter().map(|row| Poly::linear(row)).collect();
        let mut out = Poly::zero(new_vars);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(new_vars, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = term.mul(&forms[i].pow(k));
                }
            }
            out = out.add(&term);
        }
        out
    }

    pub fn eval(&self, x: &[Rat]) -> Rat {
        let mut s = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                for _ in 0..k {
                    t *= xi;
                }
            }
            s += t;
        }
        s
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, k)| **k > 0)
                    .map(|(i, k)| if *k == 1 { format!("x{}", i) } else { format!("x{}^{}", i, k) })
                    .collect();
                if mono.is_empty() {
                    fmt_rat(c)
                } else {
                    format!("{}*{}", fmt_rat(c), mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
