//! Polynomials in `z`, truncated power series in `x` with polynomial
//! coefficients, Eulerian polynomials, and checks of the generating-function
//! identities relating excedances, cycle supports and flats.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arrangement::{set_partitions, ArrangementKind, Flat};
use crate::error::{precondition, Result};
use crate::permstat::{enumerate_signed, enumerate_sym, Bounds};
use crate::rational::{factorial, fmt_q, q, Q};
use crate::report::{Check, Report};

/// Polynomial in `z` with rational coefficients, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    c: Vec<Q>,
}

impl RatPoly {
    pub fn new(mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Self { c }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| q(x)).collect())
    }

    pub fn zero() -> Self {
        Self { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(a: Q) -> Self {
        Self::new(vec![a])
    }

    /// `z^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![Q::zero(); k + 1];
        c[k] = Q::one();
        Self { c }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.c
    }

    /// Coefficient of `z^k`.
    pub fn coeff(&self, k: usize) -> Q {
        self.c.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn scale(&self, a: &Q) -> Self {
        Self::new(self.c.iter().map(|x| x * a).collect())
    }

    pub fn eval(&self, z: &Q) -> Q {
        self.c.iter().rev().fold(Q::zero(), |acc, x| acc * z + x)
    }

    /// `p(z - 1)`.
    pub fn shift_down(&self) -> Self {
        let zm1 = RatPoly::from_ints(&[-1, 1]);
        self.c.iter().rev().fold(RatPoly::zero(), |acc, x| {
            &(&acc * &zm1) + &RatPoly::constant(x.clone())
        })
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(RatPoly::one(), |acc, _| &acc * self)
    }

    /// The only constant coefficient, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Q> {
        match self.c.len() {
            0 => Some(Q::zero()),
            1 => Some(self.c[0].clone()),
            _ => None,
        }
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| match k {
                0 => fmt_q(x),
                1 => format!("{}z", fmt_q(x)),
                _ => format!("{}z^{k}", fmt_q(x)),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, o: &RatPoly) -> RatPoly {
        let n = self.c.len().max(o.c.len());
        RatPoly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, o: &RatPoly) -> RatPoly {
        let n = self.c.len().max(o.c.len());
        RatPoly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.c.iter().map(|x| -x).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, o: &RatPoly) -> RatPoly {
        if self.c.is_empty() || o.c.is_empty() {
            return RatPoly::zero();
        }
        let mut c = vec![Q::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        RatPoly::new(c)
    }
}

/// How the coefficient of `x^d` relates to the sequence value `s_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    /// `s_d x^d`.
    Ordinary,
    /// `s_d x^d / d!`.
    Egf,
    /// `s_d x^d / (2d)!!` with `(2d)!! = 2^d d!`.
    TypeBEgf,
}

impl Convention {
    /// The factor `c_d` with `coefficient = s_d / c_d`.
    pub fn weight(&self, d: usize) -> Q {
        match self {
            Self::Ordinary => Q::one(),
            Self::Egf => Q::from_integer(factorial(d as u64)),
            Self::TypeBEgf => Q::from_integer(factorial(d as u64) * BigInt::from(2).pow(d as u32)),
        }
    }
}

/// Power series in `x` truncated after `x^order`, coefficients in `Q[z]`,
/// stored as ordinary coefficients. `conv` records how the series is read
/// as a sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncSeries {
    coeffs: Vec<RatPoly>,
    conv: Convention,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![RatPoly::zero(); order + 1],
            conv: Convention::Ordinary,
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = RatPoly::one();
        s
    }

    /// From sequence values `s_0, s_1, ...` read with convention `conv`.
    pub fn from_sequence(seq: &[RatPoly], order: usize, conv: Convention) -> Self {
        let mut s = Self::zero(order);
        for (d, v) in seq.iter().enumerate().take(order + 1) {
            s.coeffs[d] = v.scale(&conv.weight(d).recip());
        }
        s.conv = conv;
        s
    }

    /// From ordinary coefficients.
    pub fn from_coeffs(c: Vec<RatPoly>, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (d, v) in c.into_iter().enumerate().take(order + 1) {
            s.coeffs[d] = v;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn convention(&self) -> Convention {
        self.conv
    }

    /// Same series, read with another convention.
    pub fn with_convention(mut self, conv: Convention) -> Self {
        self.conv = conv;
        self
    }

    /// Ordinary coefficient of `x^d`.
    pub fn coeff(&self, d: usize) -> &RatPoly {
        &self.coeffs[d]
    }

    /// Sequence values under the series' own convention.
    pub fn sequence(&self) -> Vec<RatPoly> {
        self.sequence_as(self.conv)
    }

    pub fn sequence_as(&self, conv: Convention) -> Vec<RatPoly> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(d, c)| c.scale(&conv.weight(d)))
            .collect()
    }

    fn check_order(&self, o: &Self) -> usize {
        self.order().min(o.order())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.check_order(o);
        Self {
            coeffs: (0..=n).map(|d| &self.coeffs[d] + &o.coeffs[d]).collect(),
            conv: self.conv,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.check_order(o);
        Self {
            coeffs: (0..=n).map(|d| &self.coeffs[d] - &o.coeffs[d]).collect(),
            conv: self.conv,
        }
    }

    pub fn scale(&self, a: &RatPoly) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * a).collect(),
            conv: self.conv,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.check_order(o);
        let mut c = vec![RatPoly::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                c[i + j] = &c[i + j] + &(&self.coeffs[i] * &o.coeffs[j]);
            }
        }
        Self {
            coeffs: c,
            conv: self.conv,
        }
    }

    fn constant_term(&self) -> &RatPoly {
        &self.coeffs[0]
    }

    /// `f(g(x))`, requires `g(0) = 0`.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if !g.constant_term().is_zero() {
            return precondition("compose: inner series must have zero constant term");
        }
        let n = self.check_order(g);
        let mut acc = Self::zero(n);
        for k in (0..=n).rev() {
            acc = acc.mul(g);
            acc.coeffs[0] = &acc.coeffs[0] + &self.coeffs[k];
        }
        acc.conv = self.conv;
        Ok(acc)
    }

    /// `exp(f)`, requires `f(0) = 0`.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return precondition("exp: series must have zero constant term");
        }
        let n = self.order();
        let mut e = Self::zero(n);
        for k in 0..=n {
            e.coeffs[k] = RatPoly::constant(Q::from_integer(factorial(k as u64)).recip());
        }
        let mut out = e.compose(self)?;
        out.conv = self.conv;
        Ok(out)
    }

    /// `log(f)`, requires `f(0) = 1`.
    pub fn log(&self) -> Result<Self> {
        if self.constant_term() != &RatPoly::one() {
            return precondition("log: series must have constant term 1");
        }
        let n = self.order();
        let mut u = self.clone();
        u.coeffs[0] = RatPoly::zero();
        let mut l = Self::zero(n);
        for k in 1..=n {
            let sign = if k % 2 == 1 { q(1) } else { q(-1) };
            l.coeffs[k] = RatPoly::constant(sign / q(k as i64));
        }
        let mut out = l.compose(&u)?;
        out.conv = self.conv;
        Ok(out)
    }

    /// `f^α` for rational `α`, requires `f(0) = 1`.
    pub fn power(&self, alpha: &Q) -> Result<Self> {
        let l = self.log()?;
        l.scale(&RatPoly::constant(alpha.clone())).exp()
    }

    /// `1/f`, requires a nonzero rational constant term.
    pub fn recip(&self) -> Result<Self> {
        let Some(c0) = self.constant_term().as_constant().filter(|c| !c.is_zero()) else {
            return precondition("recip: constant term must be a nonzero rational");
        };
        let inv = c0.recip();
        let n = self.order();
        let mut r = Self::zero(n);
        r.coeffs[0] = RatPoly::constant(inv.clone());
        for k in 1..=n {
            let mut s = RatPoly::zero();
            for j in 1..=k {
                s = &s + &(&self.coeffs[j] * &r.coeffs[k - j]);
            }
            r.coeffs[k] = s.scale(&-inv.clone());
        }
        r.conv = self.conv;
        Ok(r)
    }

    /// Index and values of the first differing coefficient.
    pub fn first_difference(&self, o: &Self) -> Option<(usize, RatPoly, RatPoly)> {
        let n = self.check_order(o);
        (0..=n)
            .find(|&d| self.coeffs[d] != o.coeffs[d])
            .map(|d| (d, self.coeffs[d].clone(), o.coeffs[d].clone()))
    }
}

/// Eulerian polynomial `A_d(z) = Σ_{σ ∈ S_d} z^{exc σ}`, by enumeration
/// within the bounds and by the classical recurrence beyond.
pub fn eulerian_a(d: usize) -> RatPoly {
    let b = Bounds::default();
    if d <= b.sym {
        eulerian_a_enum(d, &b).expect("within bounds")
    } else {
        eulerian_a_recurrence(d)
    }
}

/// Type B Eulerian polynomial `B_d(z) = Σ_{σ ∈ B_d} z^{exc_B σ}`.
pub fn eulerian_b(d: usize) -> RatPoly {
    let b = Bounds::default();
    if d <= b.signed {
        eulerian_b_enum(d, &b).expect("within bounds")
    } else {
        eulerian_b_recurrence(d)
    }
}

pub fn eulerian_a_enum(d: usize, b: &Bounds) -> Result<RatPoly> {
    let mut c = vec![0i64; d.max(1)];
    for s in enumerate_sym(d, b)? {
        c[s.exc()] += 1;
    }
    Ok(RatPoly::from_ints(&c))
}

pub fn eulerian_b_enum(d: usize, b: &Bounds) -> Result<RatPoly> {
    let mut c = vec![0i64; d + 1];
    for s in enumerate_signed(d, b)? {
        c[s.exc_b()] += 1;
    }
    Ok(RatPoly::from_ints(&c))
}

/// `A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1)`.
pub fn eulerian_a_recurrence(d: usize) -> RatPoly {
    let mut row: Vec<BigInt> = vec![BigInt::one()];
    for n in 2..=d {
        let mut next = vec![BigInt::zero(); n];
        for k in 0..n {
            let mut v = BigInt::zero();
            if k < row.len() {
                v += BigInt::from(k + 1) * &row[k];
            }
            if k >= 1 && k - 1 < row.len() {
                v += BigInt::from(n - k) * &row[k - 1];
            }
            next[k] = v;
        }
        row = next;
    }
    RatPoly::new(row.into_iter().map(Q::from_integer).collect())
}

/// `B(n,k) = (2k+1) B(n-1,k) + (2n-2k+1) B(n-1,k-1)`.
pub fn eulerian_b_recurrence(d: usize) -> RatPoly {
    let mut row: Vec<BigInt> = vec![BigInt::one()];
    for n in 1..=d {
        let mut next = vec![BigInt::zero(); n + 1];
        for k in 0..=n {
            let mut v = BigInt::zero();
            if k < row.len() {
                v += BigInt::from(2 * k + 1) * &row[k];
            }
            if k >= 1 && k - 1 < row.len() {
                v += BigInt::from(2 * n - 2 * k + 1) * &row[k - 1];
            }
            next[k] = v;
        }
        row = next;
    }
    RatPoly::new(row.into_iter().map(Q::from_integer).collect())
}

/// `Σ_{k ≥ 1} x^k c^{k-1} / k!`, i.e. `(e^{cx} - 1)/c` for a polynomial `c`.
fn exp_quotient(c: &RatPoly, order: usize) -> TruncSeries {
    let coeffs = (0..=order)
        .map(|k| {
            if k == 0 {
                RatPoly::zero()
            } else {
                c.pow(k - 1)
                    .scale(&Q::from_integer(factorial(k as u64)).recip())
            }
        })
        .collect();
    TruncSeries::from_coeffs(coeffs, order)
}

/// Closed form `A(z,x) = (z-1)/(z - e^{x(z-1)})`, written as `1/(1 - (e^{x(z-1)}-1)/(z-1))`.
pub fn series_a(order: usize) -> TruncSeries {
    let v = exp_quotient(&RatPoly::from_ints(&[-1, 1]), order);
    TruncSeries::one(order)
        .sub(&v)
        .recip()
        .expect("unit constant term")
        .with_convention(Convention::Egf)
}

/// Closed form `B(z,x) = (1-z) e^{x(1-z)/2} / (1 - z e^{x(1-z)})`, written as
/// `e^{x(1-z)/2} / (1 - z (e^{x(1-z)}-1)/(1-z))`.
pub fn series_b(order: usize) -> TruncSeries {
    let omz = RatPoly::from_ints(&[1, -1]);
    let w = exp_quotient(&omz, order);
    let denom = TruncSeries::one(order).sub(&w.scale(&RatPoly::monomial(1)));
    let mut half = TruncSeries::zero(order);
    if order >= 1 {
        half.coeffs[1] = omz.scale(&Q::new(1.into(), 2.into()));
    }
    let num = half.exp().expect("zero constant term");
    num.mul(&denom.recip().expect("unit constant term"))
        .with_convention(Convention::TypeBEgf)
}

/// `Σ_{X ⊢ [d]} μ(⊥, X) Π_i A_{|S_i|}(z)`.
pub fn mobius_partition_sum_a(d: usize) -> RatPoly {
    let k = ArrangementKind::BraidA(d);
    let bot = k.bottom();
    let mut acc = RatPoly::zero();
    for x in k.enumerate_flats() {
        let Flat::Partition(blocks) = &x else {
            unreachable!()
        };
        let mu = Q::from_integer(k.mobius(&bot, &x).expect("bottom is below every flat"));
        let prod = blocks
            .iter()
            .fold(RatPoly::one(), |acc, b| &acc * &eulerian_a(b.len()));
        acc = &acc + &prod.scale(&mu);
    }
    acc
}

/// `Σ_{X ⊢^B [±d]} μ(⊥, X) B_{|S_0|/2}(z) Π_i A_{|S_i|}(z)`.
pub fn mobius_partition_sum_b(d: usize) -> RatPoly {
    let k = ArrangementKind::TypeB(d);
    let bot = k.bottom();
    let mut acc = RatPoly::zero();
    for x in k.enumerate_flats() {
        let Flat::Signed { zero, blocks } = &x else {
            unreachable!()
        };
        let mu = Q::from_integer(k.mobius(&bot, &x).expect("bottom is below every flat"));
        let prod = blocks
            .iter()
            .fold(eulerian_b(zero.len()), |acc, b| &acc * &eulerian_a(b.len()));
        acc = &acc + &prod.scale(&mu);
    }
    acc
}

/// `Σ_{σ ∈ S_d cyclic} z^{exc σ}`.
pub fn cyclic_exc_poly(d: usize, b: &Bounds) -> Result<RatPoly> {
    let mut c = vec![0i64; d.max(1)];
    let bot = ArrangementKind::BraidA(d.max(1)).bottom();
    for s in enumerate_sym(d, b)? {
        if s.supp() == bot {
            c[s.exc()] += 1;
        }
    }
    Ok(RatPoly::from_ints(&c))
}

/// `Σ_{σ ∈ B_d, supp σ = ⊥} z^{exc_B σ}`.
pub fn signed_bottom_exc_poly(d: usize, b: &Bounds) -> Result<RatPoly> {
    let mut c = vec![0i64; d + 1];
    let bot = ArrangementKind::TypeB(d.max(1)).bottom();
    for s in enumerate_signed(d, b)? {
        if s.supp() == bot {
            c[s.exc_b()] += 1;
        }
    }
    Ok(RatPoly::from_ints(&c))
}

/// Brute-force type B compositional sum
/// `h_d = Σ_{X ⊢^B [±d]} f_{|S_0|/2} g_k a_{|S_1|} ... a_{|S_k|}`.
pub fn type_b_compositional_sum(d: usize, f: &[Q], g: &[Q], a: &[Q]) -> Q {
    if d == 0 {
        return f[0].clone() * &g[0];
    }
    let mut acc = Q::zero();
    for x in ArrangementKind::TypeB(d).enumerate_flats() {
        let Flat::Signed { zero, blocks } = &x else {
            unreachable!()
        };
        let mut t = f[zero.len()].clone() * &g[blocks.len()];
        for b in blocks {
            t *= &a[b.len()];
        }
        acc += t;
    }
    acc
}

/// Number of signed partitions with `|S_0| = 2r` and `k` nonzero pairs built
/// by the three-step count `C(d,r) · S(d-r,k) · 2^{d-r-k}`; used as a
/// cross-check of the flat enumeration.
pub fn signed_partition_count(d: usize) -> usize {
    let mut n = 0;
    for r in 0..=d {
        let rest: Vec<i32> = (1..=(d - r) as i32).collect();
        let binom = (0..r).fold(1usize, |acc, i| acc * (d - i) / (i + 1));
        for p in set_partitions(&rest) {
            n += binom * (1 << (d - r - p.len()));
        }
    }
    n
}

fn poly_diff_msg(d: usize, lhs: &RatPoly, rhs: &RatPoly) -> String {
    format!("x^{d}: lhs {lhs} != rhs {rhs}")
}

fn compare_sequences(name: &str, order: usize, lhs: &[RatPoly], rhs: &[RatPoly]) -> Check {
    let m = lhs
        .iter()
        .zip(rhs)
        .enumerate()
        .find(|(_, (a, b))| a != b)
        .map(|(d, (a, b))| poly_diff_msg(d, a, b));
    Check::new(name, true).with_order(order).mismatch(m)
}

/// Tallies of `(statistic, exc)` pairs used to evaluate the `t`-weighted identities.
fn tally_sym(order: usize, b: &Bounds) -> Result<Vec<Vec<Vec<i64>>>> {
    // tally[d][cycles][exc]
    let mut out = Vec::new();
    for d in 0..=order {
        let mut t = vec![vec![0i64; d.max(1)]; d + 1];
        for s in enumerate_sym(d, b)? {
            t[s.cycles().len()][s.exc()] += 1;
        }
        out.push(t);
    }
    Ok(out)
}

fn tally_signed(order: usize, b: &Bounds) -> Result<Vec<Vec<Vec<i64>>>> {
    // tally[d][dim supp][exc_B]
    let mut out = Vec::new();
    for d in 0..=order {
        let mut t = vec![vec![0i64; d + 1]; d + 1];
        for s in enumerate_signed(d, b)? {
            let dim = match s.supp() {
                Flat::Signed { blocks, .. } => blocks.len(),
                _ => unreachable!(),
            };
            t[dim][s.exc_b()] += 1;
        }
        out.push(t);
    }
    Ok(out)
}

fn eval_tally(t: &[Vec<i64>], tv: i64) -> RatPoly {
    let mut acc = RatPoly::zero();
    for (k, row) in t.iter().enumerate() {
        let w = q(tv).pow(k as i32);
        acc = &acc + &RatPoly::from_ints(row).scale(&w);
    }
    acc
}

/// Checks every generating-function identity; type A to `order_a`, type B to `order_b`.
pub fn verify_identities(order_a: usize, order_b: usize) -> Result<Report> {
    let bounds = Bounds {
        sym: order_a.max(Bounds::default().sym),
        signed: order_b.max(Bounds::default().signed),
    };
    let mut rep = Report::new();

    // Eulerian generating functions.
    let lhs_a: Vec<RatPoly> = (0..=order_a)
        .map(|d| {
            if d == 0 {
                Ok(RatPoly::one())
            } else {
                eulerian_a_enum(d, &bounds)
            }
        })
        .collect::<Result<_>>()?;
    let a = series_a(order_a);
    rep.push(compare_sequences(
        "eulerian_egf_a",
        order_a,
        &lhs_a,
        &a.sequence(),
    ));
    let lhs_b: Vec<RatPoly> = (0..=order_b)
        .map(|d| eulerian_b_enum(d, &bounds))
        .collect::<Result<_>>()?;
    let bser = series_b(order_b);
    rep.push(compare_sequences(
        "eulerian_egf_b",
        order_b,
        &lhs_b,
        &bser.sequence(),
    ));

    // Möbius sums over flats versus cyclic permutations versus log A.
    let mob: Vec<RatPoly> = (0..=order_a)
        .map(|d| {
            if d == 0 {
                RatPoly::zero()
            } else {
                mobius_partition_sum_a(d)
            }
        })
        .collect();
    let cyc: Vec<RatPoly> = (0..=order_a)
        .map(|d| {
            if d == 0 {
                Ok(RatPoly::zero())
            } else {
                cyclic_exc_poly(d, &bounds)
            }
        })
        .collect::<Result<_>>()?;
    let loga = a.log()?.with_convention(Convention::Egf);
    rep.push(compare_sequences(
        "cyclic_excedances_a/mobius_vs_enumeration",
        order_a,
        &mob,
        &cyc,
    ));
    rep.push(compare_sequences(
        "cyclic_excedances_a/enumeration_vs_log_series",
        order_a,
        &cyc,
        &loga.sequence(),
    ));

    let mob_b: Vec<RatPoly> = (0..=order_b)
        .map(|d| {
            if d == 0 {
                RatPoly::zero()
            } else {
                mobius_partition_sum_b(d)
            }
        })
        .collect();
    let cyc_b: Vec<RatPoly> = (0..=order_b)
        .map(|d| {
            if d == 0 {
                Ok(RatPoly::zero())
            } else {
                signed_bottom_exc_poly(d, &bounds)
            }
        })
        .collect::<Result<_>>()?;
    let a_b = series_a(order_b);
    let rhs_b = bser
        .mul(&a_b.power(&Q::new((-1).into(), 2.into()))?)
        .sub(&TruncSeries::one(order_b));
    rep.push(compare_sequences(
        "cyclic_excedances_b/mobius_vs_enumeration",
        order_b,
        &mob_b,
        &cyc_b,
    ));
    rep.push(compare_sequences(
        "cyclic_excedances_b/enumeration_vs_series",
        order_b,
        &cyc_b,
        &rhs_b.sequence_as(Convention::TypeBEgf),
    ));

    // t-weighted identities, t = 0..=order.
    let ta = tally_sym(order_a, &bounds)?;
    let mut first = None;
    for tv in 0..=order_a as i64 {
        let rhs = a.power(&q(tv))?;
        let lhs: Vec<RatPoly> = ta.iter().map(|t| eval_tally(t, tv)).collect();
        let c = compare_sequences("", order_a, &lhs, &rhs.sequence_as(Convention::Egf));
        if first.is_none() {
            first = c.first_mismatch.map(|m| format!("t={tv}: {m}"));
        }
    }
    rep.push(
        Check::new("cycle_weighted_eulerian_a", true)
            .with_order(order_a)
            .mismatch(first),
    );

    let tb = tally_signed(order_b, &bounds)?;
    let mut first = None;
    for tv in 0..=order_b as i64 {
        let rhs = bser.mul(&a_b.power(&Q::new((tv - 1).into(), 2.into()))?);
        let lhs: Vec<RatPoly> = tb.iter().map(|t| eval_tally(t, tv)).collect();
        let c = compare_sequences("", order_b, &lhs, &rhs.sequence_as(Convention::TypeBEgf));
        if first.is_none() {
            first = c.first_mismatch.map(|m| format!("t={tv}: {m}"));
        }
    }
    rep.push(
        Check::new("bivariate_b", true)
            .with_order(order_b)
            .mismatch(first),
    );

    // Type B compositional and exponential formulas on fixed sequences.
    let seqs: Vec<(Vec<Q>, Vec<Q>, Vec<Q>)> = vec![
        (
            vec![q(1); order_b + 1],
            vec![q(1); order_b + 1],
            vec![q(1); order_b + 1],
        ),
        (
            (0..=order_b as i64).map(|d| q(d + 1)).collect(),
            (0..=order_b as i64).map(|d| q(2).pow(d as i32)).collect(),
            (0..=order_b as i64)
                .map(|d| Q::new((d * d - 1).into(), 3.into()))
                .collect(),
        ),
    ];
    for (i, (f, g, aa)) in seqs.iter().enumerate() {
        let fs = TruncSeries::from_sequence(&to_polys(f), order_b, Convention::TypeBEgf);
        let gs = TruncSeries::from_sequence(&to_polys(g), order_b, Convention::TypeBEgf);
        let mut aseq = to_polys(aa);
        aseq[0] = RatPoly::zero();
        let as_ = TruncSeries::from_sequence(&aseq, order_b, Convention::Egf);
        let mut a0 = aa.clone();
        a0[0] = q(0);
        let lhs: Vec<RatPoly> = (0..=order_b)
            .map(|d| RatPoly::constant(type_b_compositional_sum(d, f, g, &a0)))
            .collect();
        let rhs = fs.mul(&gs.compose(&as_)?);
        rep.push(compare_sequences(
            &format!("type_b_compositional/{i}"),
            order_b,
            &lhs,
            &rhs.sequence_as(Convention::TypeBEgf),
        ));
        let ones = vec![q(1); order_b + 1];
        let lhs_e: Vec<RatPoly> = (0..=order_b)
            .map(|d| RatPoly::constant(type_b_compositional_sum(d, f, &ones, &a0)))
            .collect();
        let rhs_e = fs.mul(
            &as_.scale(&RatPoly::constant(Q::new(1.into(), 2.into())))
                .exp()?,
        );
        rep.push(compare_sequences(
            &format!("type_b_exponential/{i}"),
            order_b,
            &lhs_e,
            &rhs_e.sequence_as(Convention::TypeBEgf),
        ));
    }

    // (1+x)^{-1/2} in the type B convention.
    let onepx = TruncSeries::from_coeffs(vec![RatPoly::one(), RatPoly::one()], order_b);
    let p = onepx.power(&Q::new((-1).into(), 2.into()))?;
    let want: Vec<RatPoly> = (0..=order_b)
        .map(|d| {
            let df: i64 = (1..2 * d as i64).step_by(2).product();
            RatPoly::constant(q(if d % 2 == 0 { df } else { -df }))
        })
        .collect();
    rep.push(compare_sequences(
        "inverse_square_root_b",
        order_b,
        &p.sequence_as(Convention::TypeBEgf),
        &want,
    ));
    Ok(rep)
}

fn to_polys(v: &[Q]) -> Vec<RatPoly> {
    v.iter().map(|x| RatPoly::constant(x.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_eulerian() {
        assert_eq!(eulerian_a(3), RatPoly::from_ints(&[1, 4, 1]));
        assert_eq!(eulerian_b(2), RatPoly::from_ints(&[1, 6, 1]));
        assert_eq!(eulerian_a(1), RatPoly::one());
        for d in 1..=7 {
            assert_eq!(eulerian_a(d), eulerian_a_recurrence(d), "A_{d}");
        }
        for d in 0..=5 {
            assert_eq!(eulerian_b(d), eulerian_b_recurrence(d), "B_{d}");
        }
    }

    #[test]
    fn exp_log_inverse() {
        let s = TruncSeries::from_coeffs(vec![RatPoly::zero(), RatPoly::one(), RatPoly::one()], 8);
        assert_eq!(s.exp().unwrap().log().unwrap(), s);
        assert!(TruncSeries::one(3).exp().is_err());
        assert!(s.log().is_err());
    }

    #[test]
    fn series_heads() {
        let a = series_a(3).sequence();
        assert_eq!(a[3], RatPoly::from_ints(&[1, 4, 1]));
        let b = series_b(2).sequence();
        assert_eq!(b[1], RatPoly::from_ints(&[1, 1]));
        assert_eq!(b[2], RatPoly::from_ints(&[1, 6, 1]));
    }

    #[test]
    fn cyclic_sums_at_three() {
        let want = RatPoly::from_ints(&[0, 1, 1]);
        assert_eq!(mobius_partition_sum_a(3), want);
        assert_eq!(cyclic_exc_poly(3, &Bounds::default()).unwrap(), want);
        assert_eq!(mobius_partition_sum_b(2), RatPoly::from_ints(&[0, 2, 1]));
    }

    #[test]
    fn signed_partition_counts() {
        for d in 1..=4 {
            assert_eq!(
                signed_partition_count(d),
                ArrangementKind::TypeB(d).enumerate_flats().len()
            );
        }
    }

    #[test]
    fn shift_down_gives_h() {
        // f(π_3) = 6 + 6z + z^2 maps to h = 1 + 4z + z^2
        assert_eq!(
            RatPoly::from_ints(&[6, 6, 1]).shift_down(),
            RatPoly::from_ints(&[1, 4, 1])
        );
    }
}

#[cfg(test)]
mod identity_tests {
    use super::*;

    #[test]
    fn all_identities_hold_at_low_order() {
        let rep = verify_identities(6, 4).unwrap();
        for c in &rep.checks {
            assert!(c.pass, "{}: {:?}", c.name, c.first_mismatch);
        }
        assert_eq!(rep.checks.len(), 13);
    }
}
