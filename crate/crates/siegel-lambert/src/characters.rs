//! Dirichlet characters mod N as explicit value tables.
//!
//! A character is stored as a table of exact exponents: chi(m) =
//! e^{2 pi i e[m] / order} for gcd(m, N) = 1. Multiplication, squaring and
//! conjugation act on the exponents, so complete multiplicativity holds
//! exactly and complex values are derived on demand.

use crate::error::{Error, Result};
use num_complex::Complex64;
use num_integer::Integer;
use std::f64::consts::PI;

pub const MAX_MODULUS: u64 = 10_000;

#[derive(Clone, Debug, PartialEq)]
pub struct DirichletCharacter {
    modulus: u64,
    /// group order lcm; all exponents live on Z/order
    order: u64,
    /// exponent table indexed by residue 0..N; None where gcd(m, N) > 1
    exponents: Vec<Option<u64>>,
    label: String,
    primitive: bool,
    principal: bool,
    parity_epsilon: u8,
}

impl DirichletCharacter {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_primitive(&self) -> bool {
        self.primitive
    }

    pub fn is_principal(&self) -> bool {
        self.principal
    }

    /// epsilon = (1 - chi(-1)) / 2, so 0 for even and 1 for odd characters.
    pub fn parity_epsilon(&self) -> u8 {
        self.parity_epsilon
    }

    /// Multiplicative order of the character in the dual group.
    pub fn order(&self) -> u64 {
        let mut ord = 1u64;
        for e in self.exponents.iter().flatten() {
            if *e != 0 {
                let g = self.order.gcd(e);
                ord = ord.lcm(&(self.order / g));
            }
        }
        ord
    }

    pub fn eval(&self, m: i64) -> Complex64 {
        let idx = m.rem_euclid(self.modulus as i64) as usize;
        match self.exponents[idx] {
            None => Complex64::new(0.0, 0.0),
            Some(0) => Complex64::new(1.0, 0.0),
            Some(e) => {
                // reduce the exact rational e/order before the trig call
                let g = e.gcd(&self.order);
                let (num, den) = (e / g, self.order / g);
                match (num, den) {
                    (_, 1) => Complex64::new(1.0, 0.0),
                    (1, 2) => Complex64::new(-1.0, 0.0),
                    (1, 4) => Complex64::new(0.0, 1.0),
                    (3, 4) => Complex64::new(0.0, -1.0),
                    _ => Complex64::from_polar(1.0, 2.0 * PI * num as f64 / den as f64),
                }
            }
        }
    }

    pub fn is_real(&self) -> bool {
        self.exponents
            .iter()
            .flatten()
            .all(|e| (2 * e) % self.order == 0)
    }

    /// Self-dual means chi = conj(chi), i.e. real-valued.
    pub fn is_self_dual(&self) -> bool {
        self.is_real()
    }

    pub fn conjugate(&self) -> DirichletCharacter {
        let exponents = self
            .exponents
            .iter()
            .map(|e| e.map(|e| (self.order - e) % self.order))
            .collect::<Vec<_>>();
        let mut out = DirichletCharacter {
            modulus: self.modulus,
            order: self.order,
            exponents,
            label: String::new(),
            primitive: false,
            principal: self.principal,
            parity_epsilon: self.parity_epsilon,
        };
        out.primitive = is_primitive_table(&out);
        out.label = find_label(&out);
        out
    }
}

fn phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Smallest primitive root mod p^e (p odd) or mod 2, 4.
fn primitive_root(pe: u64, p: u64) -> u64 {
    let ph = phi(pe);
    let factors = factorize(ph);
    'outer: for g in 2..pe {
        if g % p == 0 {
            continue;
        }
        for (q, _) in &factors {
            if pow_mod(g, ph / q, pe) == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("no primitive root found for {pe}");
}

/// One CRT factor of (Z/N)*: either cyclic with a generator, or the
/// two-generator group mod 2^e, e >= 3.
struct Factor {
    pe: u64,
    gens: Vec<(u64, u64)>, // (generator residue mod pe, order)
}

fn unit_group_factors(n: u64) -> Vec<Factor> {
    let mut out = Vec::new();
    for (p, e) in factorize(n) {
        let pe = p.pow(e);
        if p == 2 {
            match e {
                1 => out.push(Factor { pe, gens: vec![] }),
                2 => out.push(Factor {
                    pe,
                    gens: vec![(3, 2)],
                }),
                _ => out.push(Factor {
                    pe,
                    gens: vec![(pe - 1, 2), (5, pe / 4)],
                }),
            }
        } else {
            out.push(Factor {
                pe,
                gens: vec![(primitive_root(pe, p), phi(pe))],
            });
        }
    }
    out
}

/// Discrete logs of m with respect to the factor generators.
fn dlogs(m: u64, f: &Factor) -> Vec<u64> {
    f.gens
        .iter()
        .map(|&(g, ord)| {
            let mut x = 1u64;
            for j in 0..ord {
                if x == m % f.pe {
                    return j;
                }
                x = x * g % f.pe;
            }
            // for 2^e, e >= 3 the group is <-1> x <5>; try -m
            let mm = (f.pe - m % f.pe) % f.pe;
            let mut x = 1u64;
            for j in 0..ord {
                if x == mm {
                    return j;
                }
                x = x * g % f.pe;
            }
            unreachable!("dlog not found")
        })
        .collect()
}

/// Decompose a unit m mod 2^e (e >= 3) as (-1)^a 5^b.
fn dlog_two_power(m: u64, pe: u64) -> (u64, u64) {
    let ord5 = pe / 4;
    let mut x = 1u64;
    for b in 0..ord5 {
        if x == m % pe {
            return (0, b);
        }
        if (pe - x) % pe == m % pe {
            return (1, b);
        }
        x = x * 5 % pe;
    }
    unreachable!("unit not in <-1> x <5> mod {pe}")
}

fn is_primitive_table(chi: &DirichletCharacter) -> bool {
    let n = chi.modulus;
    if n == 1 {
        return true;
    }
    // chi is induced mod d | n iff chi(m) = 1 for all m = 1 (mod d), gcd(m,n)=1
    for d in 1..n {
        if n % d != 0 {
            continue;
        }
        let mut induced = true;
        let mut m = 1 + d;
        while m < n + d {
            let idx = (m % n) as usize;
            if m % n != 0 && n.gcd(&(m % n)) == 1 && chi.exponents[idx] != Some(0) {
                induced = false;
                break;
            }
            m += d;
        }
        if induced {
            return false;
        }
    }
    true
}

fn find_label(chi: &DirichletCharacter) -> String {
    if let Ok(all) = enumerate_characters(chi.modulus) {
        for c in all {
            if c.exponents == chi.exponents {
                return c.label;
            }
        }
    }
    format!("{}.?", chi.modulus)
}

/// All phi(N) characters mod N, principal first (index 0), in the
/// deterministic mixed-radix order of the CRT generator decomposition.
/// Labels are "N.j" with j the enumeration index.
pub fn enumerate_characters(n: u64) -> Result<Vec<DirichletCharacter>> {
    if n == 0 || n > MAX_MODULUS {
        return Err(Error::InvalidParameter(format!(
            "modulus must be in 1..={MAX_MODULUS}, got {n}"
        )));
    }
    let factors = unit_group_factors(n);
    let gen_orders: Vec<u64> = factors
        .iter()
        .flat_map(|f| f.gens.iter().map(|&(_, ord)| ord))
        .collect();
    let group_order: u64 = gen_orders.iter().product::<u64>().max(1);

    // exponent denominators: the character order lattice is Z/ord per generator
    let order = gen_orders.iter().fold(1u64, |acc, o| acc.lcm(o)).max(1);

    // discrete logs for every residue coprime to n
    let mut logs: Vec<Option<Vec<u64>>> = vec![None; n as usize];
    for m in 0..n {
        let mu = if n == 1 { 1 } else { m };
        if n.gcd(&mu) != 1 && n != 1 {
            continue;
        }
        let mut l = Vec::new();
        for f in &factors {
            if f.gens.is_empty() {
                continue;
            }
            if f.pe % 2 == 0 && f.pe >= 8 {
                let (a, b) = dlog_two_power(m % f.pe, f.pe);
                l.push(a);
                l.push(b);
            } else {
                l.extend(dlogs(m % f.pe, f));
            }
        }
        logs[m as usize] = Some(l);
    }

    let mut out = Vec::with_capacity(group_order as usize);
    // mixed-radix counter over character indices per generator
    let mut idx = vec![0u64; gen_orders.len()];
    for j in 0..group_order {
        let mut exponents: Vec<Option<u64>> = vec![None; n as usize];
        for m in 0..n as usize {
            if let Some(l) = &logs[m] {
                let mut e = 0u64;
                for (i, ord) in gen_orders.iter().enumerate() {
                    // character value on generator i is e^{2 pi i idx[i]/ord}
                    e = (e + idx[i] * l[i] % ord * (order / ord)) % order;
                }
                exponents[m] = Some(e % order);
            }
        }
        let principal = exponents.iter().flatten().all(|e| *e == 0);
        let minus_one = ((n as i64) - 1).rem_euclid(n.max(2) as i64) as usize;
        let parity_epsilon = if n <= 2 {
            0
        } else {
            match exponents[minus_one] {
                Some(0) => 0,
                _ => 1,
            }
        };
        let mut chi = DirichletCharacter {
            modulus: n,
            order,
            exponents,
            label: format!("{n}.{j}"),
            primitive: false,
            principal,
            parity_epsilon,
        };
        chi.primitive = is_primitive_table(&chi);
        out.push(chi);

        // increment mixed radix
        for (i, ord) in gen_orders.iter().enumerate() {
            idx[i] += 1;
            if idx[i] < *ord {
                break;
            }
            idx[i] = 0;
        }
    }
    Ok(out)
}

/// Look up a character by its "N.j" label.
pub fn character_by_label(label: &str) -> Result<DirichletCharacter> {
    let (n, j) = label
        .split_once('.')
        .ok_or_else(|| Error::InvalidConfig(format!("character label must be N.j, got {label}")))?;
    let n: u64 = n
        .parse()
        .map_err(|_| Error::InvalidConfig(format!("bad modulus in label {label}")))?;
    let j: usize = j
        .parse()
        .map_err(|_| Error::InvalidConfig(format!("bad index in label {label}")))?;
    let all = enumerate_characters(n)?;
    all.into_iter()
        .nth(j)
        .ok_or_else(|| Error::InvalidConfig(format!("index {j} out of range for modulus {n}")))
}

/// chi^2 as a table character mod the same N; primitivity recomputed.
pub fn square_character(chi: &DirichletCharacter) -> DirichletCharacter {
    let exponents = chi
        .exponents
        .iter()
        .map(|e| e.map(|e| (2 * e) % chi.order))
        .collect::<Vec<_>>();
    let principal = exponents.iter().flatten().all(|e| *e == 0);
    let minus_one = ((chi.modulus as i64) - 1).rem_euclid(chi.modulus.max(2) as i64) as usize;
    let parity_epsilon = if chi.modulus <= 2 {
        0
    } else {
        match exponents[minus_one] {
            Some(0) => 0,
            _ => 1,
        }
    };
    let mut out = DirichletCharacter {
        modulus: chi.modulus,
        order: chi.order,
        exponents,
        label: String::new(),
        primitive: false,
        principal,
        parity_epsilon,
    };
    out.primitive = is_primitive_table(&out);
    out.label = find_label(&out);
    out
}

/// Gauss sum g(chi) = sum_{v mod N} chi(v) e^{2 pi i v / N}.
pub fn gauss_sum(chi: &DirichletCharacter) -> Complex64 {
    let n = chi.modulus;
    let mut acc = Complex64::new(0.0, 0.0);
    for v in 0..n {
        let cv = chi.eval(v as i64);
        if cv.norm_sqr() == 0.0 {
            continue;
        }
        acc += cv * Complex64::from_polar(1.0, 2.0 * PI * v as f64 / n as f64);
    }
    if n == 1 {
        Complex64::new(1.0, 0.0)
    } else {
        acc
    }
}
