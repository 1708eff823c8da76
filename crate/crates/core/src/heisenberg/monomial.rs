use std::cmp::Ordering;
use std::fmt;

/// One basis element of `H(q)`, with `C = [A, B]`:
///
/// * `d = 0`: `C^k` (the identity when `k = 0`),
/// * `d < 0`: `C^k A^{-d}`,
/// * `d > 0`: `B^d C^k`.
///
/// `d` is the grade. Monomials order by grade, then by `k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub k: u32,
    pub d: i32,
}

impl Monomial {
    pub const IDENTITY: Monomial = Monomial { k: 0, d: 0 };
    pub const A: Monomial = Monomial { k: 0, d: -1 };
    pub const B: Monomial = Monomial { k: 0, d: 1 };
    pub const C: Monomial = Monomial { k: 1, d: 0 };

    pub fn new(k: u32, d: i32) -> Self {
        Monomial { k, d }
    }

    /// `C^k`.
    pub fn c_pow(k: u32) -> Self {
        Monomial { k, d: 0 }
    }

    /// `C^k A^l`.
    pub fn c_a(k: u32, l: u32) -> Self {
        Monomial { k, d: -(l as i32) }
    }

    /// `B^l C^k`.
    pub fn b_c(l: u32, k: u32) -> Self {
        Monomial { k, d: l as i32 }
    }

    pub fn grade(&self) -> i32 {
        self.d
    }

    /// Exponent of `A` (`-d` when `d < 0`, else 0).
    pub fn a_exp(&self) -> u32 {
        if self.d < 0 {
            self.d.unsigned_abs()
        } else {
            0
        }
    }

    /// Exponent of `B` (`d` when `d > 0`, else 0).
    pub fn b_exp(&self) -> u32 {
        if self.d > 0 {
            self.d as u32
        } else {
            0
        }
    }

    /// Parses the text form written by `Display`: `I`, `C^k`, `C^k*A^l`,
    /// `B^l*C^k`, with exponent-1 and `C^0` factors optional.
    pub fn parse(text: &str) -> Option<Monomial> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "I" {
            return Some(Monomial::IDENTITY);
        }
        let mut a = None;
        let mut b = None;
        let mut c = None;
        let mut last = ' ';
        for factor in t.split('*') {
            let mut chars = factor.chars();
            let letter = chars.next()?;
            let rest = chars.as_str();
            let e = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')?.parse::<u32>().ok()?
            };
            // Basis order: B, then C, then A.
            let rank = |ch| match ch {
                'B' => 0,
                'C' => 1,
                'A' => 2,
                _ => 3,
            };
            if last != ' ' && rank(letter) <= rank(last) {
                return None;
            }
            match letter {
                'A' => a = Some(e),
                'B' => b = Some(e),
                'C' => c = Some(e),
                _ => return None,
            }
            last = letter;
        }
        let k = c.unwrap_or(0);
        match (a, b) {
            (Some(_), Some(_)) => None,
            (Some(l), None) => Some(Monomial::c_a(k, l)),
            (None, Some(l)) => Some(Monomial::b_c(l, k)),
            (None, None) => Some(Monomial::c_pow(k)),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.d, self.k).cmp(&(other.d, other.k))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn power(letter: char, e: u32) -> String {
    if e == 1 {
        letter.to_string()
    } else {
        format!("{letter}^{e}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.d > 0 {
            parts.push(power('B', self.b_exp()));
        }
        if self.k > 0 {
            parts.push(power('C', self.k));
        }
        if self.d < 0 {
            parts.push(power('A', self.a_exp()));
        }
        if parts.is_empty() {
            f.write_str("I")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}
