//! Factorization over prime fields and the irreducibility tests built on it.
//!
//! Pipeline: squarefree decomposition (with `p`-th roots when the derivative
//! vanishes), distinct-degree factorization, then Cantor–Zassenhaus
//! equal-degree splitting.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{PolyError, UniPoly};

/// Dense polynomial over `F_p`, ascending coefficients in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// All primes `<= n`, ascending.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut sieve = alloc::vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| i as u64)
        .collect()
}

impl FpPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { p, coeffs }
    }

    /// Reduction of an integer polynomial modulo `p`.
    pub fn from_unipoly(f: &UniPoly, p: u64) -> Self {
        let m = BigInt::from(p);
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| c.mod_floor(&m).to_u64().unwrap_or(0))
            .collect();
        Self::new(p, coeffs)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    fn zero(p: u64) -> Self {
        Self {
            p,
            coeffs: Vec::new(),
        }
    }

    fn one(p: u64) -> Self {
        Self::new(p, alloc::vec![1])
    }

    fn x(p: u64) -> Self {
        Self::new(p, alloc::vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.leading(), self.p);
        Self::new(
            self.p,
            self.coeffs
                .iter()
                .map(|&c| mul_mod(c, inv, self.p))
                .collect(),
        )
    }

    fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|i| {
                (self.coeffs.get(i).copied().unwrap_or(0) + o.coeffs.get(i).copied().unwrap_or(0))
                    % self.p
            })
            .collect();
        Self::new(self.p, c)
    }

    fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|i| {
                (self.coeffs.get(i).copied().unwrap_or(0) + self.p
                    - o.coeffs.get(i).copied().unwrap_or(0))
                    % self.p
            })
            .collect();
        Self::new(self.p, c)
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let mut out = alloc::vec![0u64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        Self::new(self.p, out)
    }

    fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial mod p");
        let Some(dn) = self.degree() else {
            return (Self::zero(self.p), Self::zero(self.p));
        };
        if dn < dd {
            return (Self::zero(self.p), self.clone());
        }
        let p = self.p;
        let inv = inv_mod(d.leading(), p);
        let mut r = self.coeffs.clone();
        let mut q = alloc::vec![0u64; dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let c = mul_mod(r[k + dd], inv, p);
            if c != 0 {
                for (i, &dc) in d.coeffs.iter().enumerate() {
                    r[k + i] = (r[k + i] + p - mul_mod(c, dc, p)) % p;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(p, q), Self::new(p, r))
    }

    fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn derivative(&self) -> Self {
        let p = self.p;
        Self::new(
            p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
                .collect(),
        )
    }

    /// `self^e mod m` for an arbitrary-size exponent.
    fn pow_mod_big(&self, e: &BigUint, m: &Self) -> Self {
        let mut result = Self::one(self.p);
        let mut base = self.rem(m);
        for i in 0..e.bits() {
            if e.bit(i) {
                result = result.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
        }
        result
    }

    fn pow_mod_small(&self, e: u64, m: &Self) -> Self {
        self.pow_mod_big(&BigUint::from(e), m)
    }

    /// Inverse of the Frobenius when the derivative vanishes: `f = g(x^p)`,
    /// and coefficients are their own `p`-th powers in `F_p`.
    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        let c = self.coeffs.iter().step_by(p).copied().collect();
        Self::new(self.p, c)
    }
}

/// Squarefree decomposition of a monic polynomial: `(factor, multiplicity)`.
fn square_free_decomposition(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.p;
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_rem(&c).0;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.div_rem(&y).0;
        if fac.degree().unwrap_or(0) > 0 {
            out.push((fac.monic(), i));
        }
        w = y;
        c = c.div_rem(&w).0;
        i += 1;
    }
    if !c.is_one() {
        let root = c.pth_root().monic();
        for (g, m) in square_free_decomposition(&root) {
            out.push((g, m * p as usize));
        }
    }
    out
}

/// Distinct-degree factorization of a monic squarefree polynomial.
fn distinct_degree(f: &FpPoly) -> Vec<(usize, FpPoly)> {
    let p = f.p;
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = FpPoly::x(p);
    let mut h = x.clone();
    let mut d = 0;
    while let Some(deg) = rest.degree() {
        if deg < 2 * (d + 1) {
            break;
        }
        d += 1;
        h = h.pow_mod_small(p, &rest);
        let g = rest.gcd(&h.sub(&x));
        if g.degree().unwrap_or(0) > 0 {
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
            out.push((d, g));
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        let deg = rest.degree().unwrap_or(0);
        out.push((deg, rest));
    }
    out
}

/// Deterministic xorshift stream for choosing splitting polynomials.
struct Splitter(u64);

impl Splitter {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn random_poly(&mut self, p: u64, below: usize) -> FpPoly {
        let c = (0..below).map(|_| self.next() % p).collect();
        FpPoly::new(p, c)
    }
}

/// Splits a product of distinct irreducibles of common degree `d`.
fn equal_degree(f: &FpPoly, d: usize, rng: &mut Splitter) -> Vec<FpPoly> {
    let n = f.degree().unwrap_or(0);
    if n == d {
        return alloc::vec![f.clone()];
    }
    let p = f.p;
    loop {
        let a = rng.random_poly(p, n);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g = a.gcd(f);
        let candidate = if g.degree().unwrap_or(0) > 0 {
            g
        } else if p == 2 {
            // trace map a + a^2 + ... + a^(2^(d-1))
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            acc.gcd(f)
        } else {
            let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            let b = a.pow_mod_big(&e, f).sub(&FpPoly::one(p));
            b.gcd(f)
        };
        let cd = candidate.degree().unwrap_or(0);
        if cd > 0 && cd < n {
            let other = f.div_rem(&candidate).0.monic();
            let mut out = equal_degree(&candidate, d, rng);
            out.extend(equal_degree(&other, d, rng));
            return out;
        }
    }
}

/// Complete factorization of `f` modulo `prime` into monic irreducibles with
/// multiplicities. The leading coefficient is dropped.
pub fn factor_mod_p(f: &UniPoly, prime: u64) -> Result<Vec<(FpPoly, usize)>, PolyError> {
    if !is_prime(prime) {
        return Err(PolyError::NotPrime(prime));
    }
    if f.leading().is_multiple_of(&BigInt::from(prime)) {
        return Err(PolyError::PrimeDividesLeading(prime));
    }
    let fp = FpPoly::from_unipoly(f, prime).monic();
    let mut rng = Splitter(0x9E37_79B9_7F4A_7C15 ^ prime);
    let mut out = Vec::new();
    for (sq, mult) in square_free_decomposition(&fp) {
        for (d, block) in distinct_degree(&sq) {
            for g in equal_degree(&block, d, &mut rng) {
                out.push((g, mult));
            }
        }
    }
    out.sort_by(|a, b| (a.0.degree(), a.1, &a.0.coeffs).cmp(&(b.0.degree(), b.1, &b.0.coeffs)));
    Ok(out)
}

/// Multiset of `(degree, multiplicity)` over the irreducible factors mod
/// `prime`, sorted ascending.
pub fn factor_degrees_mod_p(f: &UniPoly, prime: u64) -> Result<Vec<(usize, usize)>, PolyError> {
    let mut v: Vec<(usize, usize)> = factor_mod_p(f, prime)?
        .into_iter()
        .map(|(g, m)| (g.degree().unwrap_or(0), m))
        .collect();
    v.sort();
    Ok(v)
}

/// Outcome of the witness-based irreducibility test over `Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Irreducibility {
    /// Irreducible modulo this prime (which does not divide the leading
    /// coefficient), hence irreducible over `Q`.
    IrreducibleWitness(u64),
    /// A rational root exists, so a linear factor splits off.
    RationalRootFound(BigRational),
    /// Neither test succeeded. This is not a reducibility verdict.
    Inconclusive,
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Every rational root of `f`, ascending, found by the rational root test.
pub fn rational_roots(f: &UniPoly) -> Vec<BigRational> {
    let Some(deg) = f.degree() else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    // strip x^k
    let low = f.coeffs().iter().position(|c| !c.is_zero()).unwrap_or(0);
    if low > 0 {
        roots.push(BigRational::zero());
    }
    let g = UniPoly::new(f.coeffs()[low..].to_vec());
    if g.degree().unwrap_or(0) == 0 {
        return roots;
    }
    let nums = positive_divisors(&g.coeff(0));
    let dens = positive_divisors(&g.leading());
    for n in &nums {
        for d in &dens {
            if !n.gcd(d).is_one() {
                continue;
            }
            for s in [n.clone(), -n.clone()] {
                let r = BigRational::new(s, d.clone());
                if g.evaluate(&r).is_zero() {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Witness-based irreducibility test.
///
/// Polynomials of degree two or more are first checked for rational roots;
/// then primes up to `prime_bound` are scanned in ascending order and the
/// lowest prime modulo which `f` stays irreducible is reported.
pub fn irreducible_over_q(f: &UniPoly, prime_bound: u64) -> Result<Irreducibility, PolyError> {
    let deg = f.degree().ok_or(PolyError::ZeroPolynomial)?;
    if deg == 0 {
        return Err(PolyError::DegreeTooSmall(1));
    }
    let f = f.primitive_part();
    if deg >= 2 {
        if let Some(r) = rational_roots(&f).into_iter().next() {
            return Ok(Irreducibility::RationalRootFound(r));
        }
    }
    let lc = f.leading();
    for q in primes_up_to(prime_bound) {
        if lc.is_multiple_of(&BigInt::from(q)) {
            continue;
        }
        let factors = factor_degrees_mod_p(&f, q)?;
        if factors == [(deg, 1)] {
            return Ok(Irreducibility::IrreducibleWitness(q));
        }
    }
    Ok(Irreducibility::Inconclusive)
}
