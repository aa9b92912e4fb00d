//! Brute-force oracles shared by the integration tests: symmetric functions
//! expanded in finitely many explicit variables.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_traits::Zero;
use witt_forge::partition::partitions_of;
use witt_forge::rational::{q, Q};
use witt_forge::{BasisTag, Partition};

/// A polynomial in `x_1..x_N`, keyed by exponent vectors of length `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XPoly {
    pub vars: usize,
    pub terms: BTreeMap<Vec<u8>, Q>,
}

impl XPoly {
    pub fn zero(vars: usize) -> Self {
        XPoly { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: usize) -> Self {
        XPoly { vars, terms: [(vec![0; vars], q(1))].into() }
    }

    pub fn var(vars: usize, i: usize) -> Self {
        let mut e = vec![0; vars];
        e[i] = 1;
        XPoly { vars, terms: [(e, q(1))].into() }
    }

    fn insert(&mut self, e: Vec<u8>, c: Q) {
        let entry = self.terms.entry(e).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = XPoly::zero(self.vars);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect();
        }
        out
    }

    /// Product, dropping monomials of total degree above `max_degree`.
    pub fn mul(&self, other: &Self, max_degree: usize) -> Self {
        let mut out = XPoly::zero(self.vars);
        for (a, x) in &self.terms {
            let da: usize = a.iter().map(|&k| k as usize).sum();
            for (b, y) in &other.terms {
                let db: usize = b.iter().map(|&k| k as usize).sum();
                if da + db > max_degree {
                    continue;
                }
                let e = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.insert(e, x * y);
            }
        }
        out
    }

    pub fn pow(&self, k: usize, max_degree: usize) -> Self {
        (0..k).fold(XPoly::one(self.vars), |acc, _| acc.mul(self, max_degree))
    }

    /// Coefficient of `x^ν` with `ν` padded by zeros, which is the
    /// coefficient of `m_ν` for a symmetric polynomial.
    pub fn monomial_coeff(&self, nu: &Partition) -> Q {
        let mut e = vec![0u8; self.vars];
        for (i, &k) in nu.parts().iter().enumerate() {
            e[i] = k as u8;
        }
        self.terms.get(&e).cloned().unwrap_or_else(Q::zero)
    }

    /// Coefficient of `x^ν` in `self · other`, without forming the product.
    pub fn product_coeff(&self, other: &Self, nu: &Partition) -> Q {
        let mut target = vec![0u8; self.vars];
        for (i, &k) in nu.parts().iter().enumerate() {
            target[i] = k as u8;
        }
        let mut total = Q::zero();
        for (a, x) in &self.terms {
            if a.iter().zip(&target).any(|(i, t)| i > t) {
                continue;
            }
            let rest: Vec<u8> = target.iter().zip(a).map(|(t, i)| t - i).collect();
            if let Some(y) = other.terms.get(&rest) {
                total += x * y;
            }
        }
        total
    }

    /// All `m_ν` coefficients with `|ν| ≤ max_degree`, `ℓ(ν) ≤ vars`.
    pub fn m_coefficients(&self, max_degree: usize) -> BTreeMap<Partition, Q> {
        let mut out = BTreeMap::new();
        for d in 0..=max_degree {
            for nu in partitions_of(d) {
                if nu.len() <= self.vars {
                    let c = self.monomial_coeff(&nu);
                    if !c.is_zero() {
                        out.insert(nu, c);
                    }
                }
            }
        }
        out
    }
}

/// Evaluates basis elements at a list of "variables" `ys`, each itself a
/// polynomial in the `x`s; taking `ys = x_1..x_N` gives the plain expansion,
/// taking `ys` to be the monomials of `g` gives the substitution rule for `f∘g`.
pub struct Evaluator {
    pub ys: Vec<XPoly>,
    pub vars: usize,
    pub max_degree: usize,
}

impl Evaluator {
    pub fn variables(vars: usize, max_degree: usize) -> Self {
        Evaluator { ys: (0..vars).map(|i| XPoly::var(vars, i)).collect(), vars, max_degree }
    }

    /// The monomials of `g` repeated by their (nonnegative integer) coefficients.
    pub fn monomials_of(g: &XPoly, max_degree: usize) -> Self {
        let mut ys = Vec::new();
        for (e, c) in &g.terms {
            assert!(c.is_integer() && c >= &Q::zero(), "substitution needs an ℕ-combination of monomials");
            let n: usize = c.to_integer().try_into().expect("small coefficient");
            for _ in 0..n {
                ys.push(XPoly { vars: g.vars, terms: [(e.clone(), q(1))].into() });
            }
        }
        Evaluator { ys, vars: g.vars, max_degree }
    }

    fn mul(&self, a: &XPoly, b: &XPoly) -> XPoly {
        a.mul(b, self.max_degree)
    }

    pub fn power_sum(&self, k: usize) -> XPoly {
        self.ys.iter().fold(XPoly::zero(self.vars), |acc, y| acc.add(&y.pow(k, self.max_degree)))
    }

    /// `e_n`: sum over strictly increasing index sequences.
    pub fn elementary(&self, n: usize) -> XPoly {
        let mut layer = vec![XPoly::one(self.vars); 1];
        // layer[k] = e_k of the ys seen so far
        for y in &self.ys {
            let mut next = layer.clone();
            for k in 0..layer.len().min(n) {
                let t = self.mul(&layer[k], y);
                if k + 1 < next.len() {
                    next[k + 1] = next[k + 1].add(&t);
                } else {
                    next.push(t);
                }
            }
            layer = next;
        }
        layer.get(n).cloned().unwrap_or_else(|| XPoly::zero(self.vars))
    }

    /// `h_n`: sum over weakly increasing index sequences.
    pub fn complete(&self, n: usize) -> XPoly {
        let mut h = vec![XPoly::zero(self.vars); n + 1];
        h[0] = XPoly::one(self.vars);
        for y in &self.ys {
            for k in 1..=n {
                let t = self.mul(&h[k - 1], y);
                h[k] = h[k].add(&t);
            }
        }
        h[n].clone()
    }

    /// `m_λ`: sum over distinct assignments of the parts to distinct ys.
    pub fn monomial(&self, lambda: &Partition) -> XPoly {
        fn go(ev: &Evaluator, parts: &[usize], used: &mut Vec<bool>, acc: XPoly, out: &mut XPoly) {
            let Some((&first, rest)) = parts.split_first() else {
                *out = out.add(&acc);
                return;
            };
            for i in 0..ev.ys.len() {
                if !used[i] {
                    used[i] = true;
                    let t = ev.mul(&acc, &ev.ys[i].pow(first, ev.max_degree));
                    go(ev, rest, used, t, out);
                    used[i] = false;
                }
            }
        }
        let mut out = XPoly::zero(self.vars);
        let mut used = vec![false; self.ys.len()];
        go(self, lambda.parts(), &mut used, XPoly::one(self.vars), &mut out);
        // each term was counted once per permutation of equal parts
        let sym: u64 = lambda.multiplicities().iter().map(|&m| (1..=m as u64).product::<u64>()).product();
        out.scale(&Q::new(1.into(), sym.into()))
    }

    /// `s_λ`: sum over semistandard tableaux with entries indexing the ys.
    pub fn schur(&self, lambda: &Partition) -> XPoly {
        let shape = lambda.parts().to_vec();
        let cells: Vec<(usize, usize)> =
            shape.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
        let mut filling = vec![vec![0usize; shape.first().copied().unwrap_or(0)]; shape.len()];
        let mut out = XPoly::zero(self.vars);
        self.fill(&cells, 0, &mut filling, XPoly::one(self.vars), &mut out);
        out
    }

    fn fill(&self, cells: &[(usize, usize)], idx: usize, t: &mut Vec<Vec<usize>>, acc: XPoly, out: &mut XPoly) {
        if idx == cells.len() {
            *out = out.add(&acc);
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { t[r][c - 1] } else { 0 };
        let lo_col = if r > 0 { t[r - 1][c] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..self.ys.len() {
            t[r][c] = v;
            let next = self.mul(&acc, &self.ys[v]);
            self.fill(cells, idx + 1, t, next, out);
        }
    }

    /// `θ_n` from `ψ_n = Σ_{d|n} d θ_d^{n/d}`.
    pub fn witt(&self, n: usize) -> XPoly {
        let mut thetas: Vec<XPoly> = vec![XPoly::zero(self.vars)];
        for k in 1..=n {
            let mut rest = self.power_sum(k);
            for d in (1..k).filter(|d| k % d == 0) {
                rest = rest.add(&thetas[d].pow(k / d, self.max_degree).scale(&q(-(d as i64))));
            }
            thetas.push(rest.scale(&Q::new(1.into(), (k as i64).into())));
        }
        thetas[n].clone()
    }

    fn single(&self, tag: BasisTag, n: usize) -> XPoly {
        match tag {
            BasisTag::E => self.elementary(n),
            BasisTag::H => self.complete(n),
            BasisTag::P => self.power_sum(n),
            BasisTag::W => self.witt(n),
            _ => unreachable!(),
        }
    }

    pub fn basis(&self, tag: BasisTag, lambda: &Partition) -> XPoly {
        match tag {
            BasisTag::M => self.monomial(lambda),
            BasisTag::S => self.schur(lambda),
            _ => lambda.parts().iter().fold(XPoly::one(self.vars), |acc, &k| self.mul(&acc, &self.single(tag, k))),
        }
    }
}
