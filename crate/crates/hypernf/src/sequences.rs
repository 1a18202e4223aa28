//! Rational sequences from the case proofs, computed from their recurrences.

use exactpoly::Rational;
use num::{BigInt, One, Zero};
use std::collections::BTreeMap;

fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `(a)^k_b = a (a+b) ... (a+(k-1)b)`; the empty product for `k <= 0`.
pub fn pochhammer(a: &Rational, k: i64, b: &Rational) -> Rational {
    let mut p = Rational::one();
    let mut t = a.clone();
    for _ in 0..k.max(0) {
        p *= &t;
        t += b;
    }
    p
}

fn poch(a: i64, k: i64, b: i64) -> Rational {
    pochhammer(&q(a), k, &q(b))
}

fn factorial(m: i64) -> Rational {
    (1..=m).fold(Rational::one(), |acc, i| acc * q(i))
}

fn pow(x: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num::pow::pow(x.clone(), e as usize)
    } else {
        num::pow::pow(x.recip(), (-e) as usize)
    }
}

/// `e_0..e_len` for the case-i generator `𝓔⁰_k` with parameter `r`.
pub fn e_sequence(k: i64, r: i64, len: usize) -> Vec<Rational> {
    let mut e = vec![Rational::zero()];
    for m in 0..len as i64 {
        let d = (m + 1) * (r + 1) + 1;
        let first = q(r + 2 * (k - m) * (r + 1)) / q(2 * d) * &e[m as usize];
        let second = q(r * (r + 2) * (k + 1)) * poch(k, m, -1) / (factorial(m) * q(d) * poch(m * r + 2 * (k + 1), 2, r));
        e.push(first - second);
    }
    e
}

/// `h_0..h_len` for the case-ii generator `𝓕⁻¹_k` with parameter `s`.
///
/// The factor `(k)^{m-1}_s` at `m = 0` is taken as the empty product.
pub fn h_sequence(k: i64, s: i64, len: usize) -> Vec<Rational> {
    let mut h = vec![Rational::zero()];
    for m in 0..len as i64 {
        let d = (m + 1) * (s + 1) - 1;
        let sign = if m % 2 == 0 { -1 } else { 1 };
        let num = q(sign * s * (s + 2) * (k - m + 2) * (k + s + 2)) * poch(k, m - 1, s);
        let den = pow(&q(2), m + 1) * pow(&q(s + 1), m) * factorial(m) * poch(k + 2 + m * s, 2, s) * q(d);
        let next = num / den - q(s * (m - 1) + k) / q(2 * d) * &h[m as usize];
        h.push(next);
    }
    h
}

/// `g_0..g_len` for the transition solution `𝔈^m_n` with parameter `r`.
pub fn g_sequence(m: i64, n: i64, r: i64, len: usize) -> Vec<Rational> {
    let mut g = vec![Rational::zero()];
    for l in 0..len as i64 {
        let c = m + 2 + (l + 1) * (r + 1);
        let num = q(r * (r + 2) * (n + 2)) * poch((n - m - 1) * (r + 1) - m - 1, l, -2 * (r + 1));
        let den = pow(&q(2), l + 1) * q(n + l * r + 2) * poch(m + r + 2, l, r + 1) * q(r * (l + 1) + n + 2) * q(c);
        let next = num / den - q((2 * l + m - n) * (r + 1) + m + 2) / q(2 * c) * &g[l as usize];
        g.push(next);
    }
    g
}

/// `(u⁻¹_m, w⁻¹_m)` for `m = 0..=len` in case iii, with `a = a_s`, `b = b_s`.
///
/// Starts from `u⁻¹_0 = 1`, `w⁻¹_0 = 0`.
pub fn u_w_minus1(k: i64, s: i64, a: &Rational, b: &Rational, len: usize) -> (Vec<Rational>, Vec<Rational>) {
    let mut u = vec![Rational::one()];
    let mut w = vec![Rational::zero()];
    for m in 0..len as i64 {
        let (um, wm) = (&u[m as usize], &w[m as usize]);
        let c = m * (s + 1) + k + 2;
        let du = b * q((m + 1) * (s + 1) * c);
        let un = a * q(s * (s + 2)) / &du * wm
            - (q((s + 1) * (2 * (m - 1) - k) * c) + b * q((m * s + k) * (m * s + k + 2))) / &du * um;
        let dw = q((m * (s + 1) + s) * (s * (m + 1) + k + 2));
        let wn = q(s * (s + 2) * (k - m + 2)) / &dw * um
            + a * q((m * s + k + 2) * ((k - 2 * m + 1) * (s + 1) + 1)) / (b * &dw) * wm
            - q((s * (m - 1) + k) * c) / &dw * wm;
        u.push(un);
        w.push(wn);
    }
    (u, w)
}

/// `(u⁰_m, w⁰_m)` for `m = 0..=len` in case iii, from `u⁰_0 = 0`, `w⁰_0 = 1`.
pub fn u_w_zero(k: i64, s: i64, a: &Rational, b: &Rational, len: usize) -> (Vec<Rational>, Vec<Rational>) {
    let mut u = vec![Rational::zero()];
    let mut w = vec![Rational::one()];
    for m in 0..len as i64 {
        let (um, wm) = (&u[m as usize], &w[m as usize]);
        let c = s * (m + 1) + k + 2;
        let du = b * q(c * c);
        let un = a * q(s * (s + 2)) / &du * wm
            + (q(c * ((k - 2 * m) * (s + 1) + s + 2)) - b * q((m * s + k) * (m * s + k + 2))) / &du * um;
        let dw = q((m + 1) * (s + 1) * c);
        let wn = q(s * (s + 2) * (k - m + 1)) / &dw * um
            + (a * q((s + 1) * (k - 2 * m) * (m * s + k + 2)) - b * q((s * (m - 1) + k) * c)) / (b * &dw) * wm;
        u.push(un);
        w.push(wn);
    }
    (u, w)
}

/// `η^m_n` for parameter `s`; the paired factor in the denominator is read as
/// a Pochhammer symbol of the product `(m+s+2)(m+2)`.
pub fn eta(m: i64, n: i64, s: i64) -> Rational {
    let num = poch(m + 2, n - m + 1, s + 1) - poch(m + s + 2, n - m, s + 1) * q(n + 2);
    num / poch((m + s + 2) * (m + 2), n - m - 1, s + 1)
}

/// The named sequences for one choice of parameters.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SequenceTable {
    pub e: Vec<Rational>,
    pub h: Vec<Rational>,
    pub g: Vec<Rational>,
    pub u_minus1: Vec<Rational>,
    pub w_minus1: Vec<Rational>,
    pub u_zero: Vec<Rational>,
    pub w_zero: Vec<Rational>,
    /// `(m, n) -> η^m_n` for `0 <= m < n <= len`.
    pub eta: BTreeMap<(i64, i64), Rational>,
}

impl SequenceTable {
    /// `k` is the generator index, `r`/`s` the case parameters, `(m, n)` the
    /// transition indices for `g`, `a`/`b` the case-iii leading values.
    #[allow(clippy::too_many_arguments)]
    pub fn build(k: i64, r: i64, s: i64, m: i64, n: i64, a: &Rational, b: &Rational, len: usize) -> SequenceTable {
        let (u_minus1, w_minus1) = u_w_minus1(k, s, a, b, len);
        let (u_zero, w_zero) = u_w_zero(k, s, a, b, len);
        let mut eta_map = BTreeMap::new();
        for nn in 1..=len as i64 {
            for mm in 0..nn {
                eta_map.insert((mm, nn), eta(mm, nn, s));
            }
        }
        SequenceTable {
            e: e_sequence(k, r, len),
            h: h_sequence(k, s, len),
            g: g_sequence(m, n, r, len),
            u_minus1,
            w_minus1,
            u_zero,
            w_zero,
            eta: eta_map,
        }
    }
}

/// Sign claims on `e_m`: positive for `m ≡ 2, 3 (mod 4)`, negative for
/// `m ≡ 0, 1 (mod 4)` with `m >= 4`. Returns the indices `1..=len` that break them.
pub fn e_sign_violations(e: &[Rational]) -> Vec<usize> {
    use num::Signed;
    (1..e.len())
        .filter(|&m| match m % 4 {
            2 | 3 => !e[m].is_positive(),
            _ if m >= 4 => !e[m].is_negative(),
            _ => false,
        })
        .collect()
}

/// `h_m < 0` for odd `m`, `> 0` for even `m >= 2`.
pub fn h_sign_violations(h: &[Rational]) -> Vec<usize> {
    use num::Signed;
    (1..h.len())
        .filter(|&m| if m % 2 == 1 { !h[m].is_negative() } else { !h[m].is_positive() })
        .collect()
}
