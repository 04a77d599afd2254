//! Prime sets and small-number arithmetic helpers.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Either all primes or an explicit finite set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Primes {
    All,
    Of(BTreeSet<u64>),
}

impl Primes {
    pub fn of(primes: &[u64]) -> Primes {
        Primes::Of(primes.iter().copied().collect())
    }

    pub fn contains(&self, p: u64) -> bool {
        match self {
            Primes::All => true,
            Primes::Of(s) => s.contains(&p),
        }
    }

    pub fn contains_all(&self, primes: &[u64]) -> bool {
        primes.iter().all(|&p| self.contains(p))
    }

    /// Parses `all`, `2,3,5` or `{2,3,5}`.
    pub fn parse(s: &str) -> Result<Primes> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("all") {
            return Ok(Primes::All);
        }
        let body = s.trim_start_matches('{').trim_end_matches('}');
        let mut set = BTreeSet::new();
        for part in body.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let v: u64 = part.parse().map_err(|_| Error::ParseError {
                line: 0,
                msg: format!("bad prime `{part}` in prime set"),
            })?;
            if !is_prime(v) {
                return Err(Error::ParseError {
                    line: 0,
                    msg: format!("{v} is not prime"),
                });
            }
            set.insert(v);
        }
        Ok(Primes::Of(set))
    }
}

impl fmt::Display for Primes {
    fmt_impl!();
}

macro_rules! fmt_impl {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match self {
                Primes::All => write!(f, "all"),
                Primes::Of(s) => {
                    let parts: Vec<String> = s.iter().map(|p| p.to_string()).collect();
                    write!(f, "{}", parts.join(","))
                }
            }
        }
    };
}
use fmt_impl;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn primes_of(n: usize) -> Vec<u64> {
    factorize(n as u64).into_iter().map(|(p, _)| p).collect()
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: usize, p: u64) -> usize {
    let mut out = 1usize;
    let mut n = n as u64;
    while n % p == 0 {
        out *= p as usize;
        n /= p;
    }
    out
}

/// Product of the `p`-parts of `n` over `p` in `pi`.
pub fn pi_part(n: usize, pi: &Primes) -> usize {
    primes_of(n)
        .into_iter()
        .filter(|&p| pi.contains(p))
        .map(|p| p_part(n, p))
        .product()
}

/// Whether every prime divisor of `n` lies in `pi`.
pub fn is_pi_number(n: usize, pi: &Primes) -> bool {
    primes_of(n).into_iter().all(|p| pi.contains(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        assert_eq!(Primes::parse("all").unwrap(), Primes::All);
        assert_eq!(Primes::parse("{2,3}").unwrap(), Primes::of(&[2, 3]));
        assert_eq!(Primes::parse("2, 5").unwrap(), Primes::of(&[2, 5]));
        assert!(Primes::parse("4").is_err());
    }

    #[test]
    fn arithmetic() {
        assert_eq!(factorize(294), vec![(2, 1), (3, 1), (7, 2)]);
        assert_eq!(p_part(648, 3), 81);
        assert_eq!(pi_part(294, &Primes::of(&[2, 3])), 6);
        assert!(is_pi_number(6, &Primes::of(&[2, 3])));
        assert!(!is_pi_number(10, &Primes::of(&[2, 3])));
    }
}
