//! Lyndon words and the graded ranks of free Lie algebras.
//!
//! Lyndon words of length `l` over `g` letters index a basis of the degree-`l`
//! part of the free Lie algebra on `g` generators; each word brackets
//! according to its standard factorization.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("letter {letter} is outside the alphabet of size {alphabet}")]
    LetterOutOfRange { letter: u32, alphabet: u32 },
    #[error("word is empty")]
    Empty,
    #[error("word is not strictly smaller than all of its proper rotations")]
    NotLyndon,
}

/// A nonempty word that is strictly smaller, lexicographically, than each of
/// its proper rotations.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LyndonWord {
    letters: Vec<u32>,
    alphabet: u32,
}

impl LyndonWord {
    pub fn new(letters: Vec<u32>, alphabet: u32) -> Result<Self, LieError> {
        if letters.is_empty() {
            return Err(LieError::Empty);
        }
        if let Some(&letter) = letters.iter().find(|&&l| l >= alphabet) {
            return Err(LieError::LetterOutOfRange { letter, alphabet });
        }
        if !is_lyndon(&letters) {
            return Err(LieError::NotLyndon);
        }
        Ok(LyndonWord { letters, alphabet })
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of occurrences of each letter.
    pub fn multidegree(&self) -> Vec<usize> {
        let mut m = vec![0; self.alphabet as usize];
        for &l in &self.letters {
            m[l as usize] += 1;
        }
        m
    }

    /// Standard factorization `w = u v` with `v` the longest proper suffix
    /// that is itself Lyndon. Both factors are Lyndon and `u < v`; the Lie
    /// basis element of `w` is the bracket of those of `u` and `v`.
    /// `None` for single letters.
    pub fn standard_factorization(&self) -> Option<(LyndonWord, LyndonWord)> {
        let split = (1..self.len()).find(|&i| is_lyndon(&self.letters[i..]))?;
        let make = |s: &[u32]| LyndonWord {
            letters: s.to_vec(),
            alphabet: self.alphabet,
        };
        Some((make(&self.letters[..split]), make(&self.letters[split..])))
    }

    /// Fully bracketed form, e.g. `[a,[a,b]]`.
    pub fn bracketing(&self) -> alloc::string::String {
        use alloc::string::ToString;
        match self.standard_factorization() {
            None => self.to_string(),
            Some((u, v)) => alloc::format!("[{},{}]", u.bracketing(), v.bracketing()),
        }
    }
}

impl fmt::Display for LyndonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.alphabet <= 26 {
            for &l in &self.letters {
                write!(f, "{}", char::from(b'a' + l as u8))?;
            }
            Ok(())
        } else {
            for (i, l) in self.letters.iter().enumerate() {
                if i > 0 {
                    f.write_str(".")?;
                }
                write!(f, "{l}")?;
            }
            Ok(())
        }
    }
}

/// `true` iff `w` is nonempty and strictly smaller than every proper rotation.
pub fn is_lyndon(w: &[u32]) -> bool {
    let n = w.len();
    n > 0
        && (1..n).all(|r| {
            let rotated = w[r..].iter().chain(&w[..r]);
            w.iter().cmp(rotated) == core::cmp::Ordering::Less
        })
}

/// All Lyndon words of length `1..=max_len` over `g` letters. Entry `l - 1`
/// holds the words of length `l`, in lexicographic order.
///
/// Words are produced in lexicographic order by Duval's successor rule:
/// repeat the current word up to `max_len`, strip trailing maximal letters,
/// and increment the last letter.
pub fn lyndon_words(g: u32, max_len: usize) -> Vec<Vec<LyndonWord>> {
    let mut out: Vec<Vec<LyndonWord>> = vec![Vec::new(); max_len];
    if g == 0 || max_len == 0 {
        return out;
    }
    let mut w: Vec<u32> = vec![0];
    loop {
        out[w.len() - 1].push(LyndonWord {
            letters: w.clone(),
            alphabet: g,
        });
        let period = w.len();
        while w.len() < max_len {
            w.push(w[w.len() - period]);
        }
        while w.last() == Some(&(g - 1)) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out
}

/// Möbius function.
pub fn mobius(n: u64) -> i8 {
    assert!(n > 0, "mobius is defined on positive integers");
    let mut n = n;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

fn divisors(n: u64) -> impl Iterator<Item = u64> {
    (1..=n).filter(move |d| n.is_multiple_of(*d))
}

/// Dimension of the length-`len` part of the free Lie algebra on `g`
/// generators: `(1/len) * sum_{d | len} mu(d) g^(len/d)`.
pub fn witt_rank(g: u64, len: u64) -> BigUint {
    if g == 0 || len == 0 {
        return BigUint::zero();
    }
    let base = BigInt::from(g);
    let sum: BigInt = divisors(len)
        .map(|d| BigInt::from(mobius(d)) * num_traits::pow(base.clone(), (len / d) as usize))
        .sum();
    let (q, r) = sum.div_rem(&BigInt::from(len));
    debug_assert!(r.is_zero());
    q.to_biguint().expect("witt rank is nonnegative")
}

fn multinomial(parts: &[u64]) -> BigUint {
    // Product of binomials C(s_i, p_i) with s_i the running total.
    let mut acc = BigUint::one();
    let mut total = 0u64;
    for &p in parts {
        for i in 1..=p {
            total += 1;
            acc = acc * BigUint::from(total) / BigUint::from(i);
        }
    }
    acc
}

/// Number of Lyndon words with prescribed letter content over an alphabet
/// split into groups: group `c` has `group_sizes[c]` letters and the word
/// uses letters from it `content[c]` times in total.
///
/// With `W(v)` the number of words of content `v`, aperiodic words of
/// content `v` number `sum_{e | gcd(v)} mu(e) W(v/e)`, and each aperiodic
/// necklace of length `|v|` contains exactly one Lyndon word among its `|v|`
/// rotations. With all group sizes 1 this counts Lyndon words of a given
/// multidegree.
pub fn lyndon_count_by_content(group_sizes: &[u64], content: &[u64]) -> BigUint {
    assert_eq!(group_sizes.len(), content.len(), "one content entry per group");
    let total: u64 = content.iter().sum();
    if total == 0 {
        return BigUint::zero();
    }
    if content.iter().zip(group_sizes).any(|(&w, &g)| w > 0 && g == 0) {
        return BigUint::zero();
    }
    let gcd = content.iter().fold(0u64, |a, &b| a.gcd(&b));
    let words_of = |e: u64| -> BigInt {
        let parts: Vec<u64> = content.iter().map(|&w| w / e).collect();
        let mut n = multinomial(&parts);
        for (&w, &g) in parts.iter().zip(group_sizes) {
            n *= num_traits::pow(BigUint::from(g), w as usize);
        }
        BigInt::from(n)
    };
    let primitive: BigInt = divisors(gcd)
        .map(|e| BigInt::from(mobius(e)) * words_of(e))
        .sum();
    let (q, r) = primitive.div_rem(&BigInt::from(total));
    debug_assert!(r.is_zero());
    q.to_biguint().expect("count is nonnegative")
}

/// Same as [`witt_rank`] but as a machine integer when it fits.
pub fn witt_rank_u64(g: u64, len: u64) -> Option<u64> {
    witt_rank(g, len).to_u64()
}
