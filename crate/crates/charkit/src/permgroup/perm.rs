//! Permutations as point-image arrays, with cycle-notation parsing and display.
//!
//! Points are 0-based internally and 1-based in all textual I/O.

use std::fmt;

use num::integer::lcm;

use crate::error::{Error, Result};

/// A permutation of the points `0..degree`, stored as the image array:
/// `images[p]` is the image of point `p`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from an image array, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img as usize >= n {
                return Err(Error::Input(format!(
                    "image {} out of range for degree {}",
                    img + 1,
                    n
                )));
            }
            if seen[img as usize] {
                return Err(Error::Input(format!(
                    "image array is not a bijection: {} repeated",
                    img + 1
                )));
            }
            seen[img as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &img)| i as u32 == img)
    }

    /// Group product `self * other`, the permutation that applies `other`
    /// first and then `self`.
    pub fn mul(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        let images = other
            .images
            .iter()
            .map(|&p| self.images[p as usize])
            .collect();
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (p, &img) in self.images.iter().enumerate() {
            images[img as usize] = p as u32;
        }
        Permutation { images }
    }

    /// Conjugate `g * self * g^-1`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (p, &img) in self.images.iter().enumerate() {
            images[g.images[p] as usize] = g.images[img as usize];
        }
        Permutation { images }
    }

    /// Multiplicative order: lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut ord = 1u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] as usize;
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }

    /// `self` raised to the `n`-th power.
    pub fn pow(&self, n: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = base.mul(&acc);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }
}

impl fmt::Display for Permutation {
    /// Disjoint cycle notation with 1-based points; identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
                first = false;
                p = self.images[p] as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses whitespace-tolerant cycle notation with 1-based points, e.g.
/// `"(1 2 3)(4 5)"`. Commas may separate points. Overlapping cycles compose
/// left-to-right: `"(1 2)(2 3)"` sends 1 to 3.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    let mut result = Permutation::identity(degree);
    let mut chars = text.chars().peekable();
    let mut saw_cycle = false;
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c != '(' {
            return Err(Error::Parse(format!(
                "expected '(' in cycle notation, found '{c}'"
            )));
        }
        chars.next();
        let mut points: Vec<u32> = Vec::new();
        let mut token = String::new();
        loop {
            match chars.next() {
                None => return Err(Error::Parse("unclosed '(' in cycle notation".into())),
                Some(')') => {
                    if !token.is_empty() {
                        points.push(parse_point(&token, degree)?);
                    }
                    break;
                }
                Some(ch) if ch.is_whitespace() || ch == ',' => {
                    if !token.is_empty() {
                        points.push(parse_point(&token, degree)?);
                        token.clear();
                    }
                }
                Some(ch) if ch.is_ascii_digit() => token.push(ch),
                Some(ch) => {
                    return Err(Error::Parse(format!(
                        "unexpected character '{ch}' inside cycle"
                    )))
                }
            }
        }
        let mut in_cycle = vec![false; degree];
        for &p in &points {
            if in_cycle[p as usize] {
                return Err(Error::Parse(format!(
                    "point {} repeated within one cycle",
                    p + 1
                )));
            }
            in_cycle[p as usize] = true;
        }
        let cycle = {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for (i, &p) in points.iter().enumerate() {
                images[p as usize] = points[(i + 1) % points.len()];
            }
            Permutation { images }
        };
        result = cycle.mul(&result);
        saw_cycle = true;
    }
    if !saw_cycle {
        return Err(Error::Parse(
            "empty cycle notation; use \"()\" for the identity".into(),
        ));
    }
    Ok(result)
}

fn parse_point(token: &str, degree: usize) -> Result<u32> {
    let v: u64 = token
        .parse()
        .map_err(|_| Error::Parse(format!("invalid point token \"{token}\"")))?;
    if v == 0 {
        return Err(Error::Parse("points are 1-based; 0 is not a point".into()));
    }
    if v as usize > degree {
        return Err(Error::Parse(format!(
            "point {v} out of range for degree {degree}"
        )));
    }
    Ok((v - 1) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_transposition() {
        let p = parse_cycles("(1 2)", 3).unwrap();
        assert_eq!(p.images(), &[1, 0, 2]);
    }

    #[test]
    fn parse_empty_cycle_is_identity() {
        let p = parse_cycles("()", 4).unwrap();
        assert_eq!(p.images(), &[0, 1, 2, 3]);
        assert!(p.is_identity());
    }

    #[test]
    fn parse_disjoint_cycles() {
        let p = parse_cycles("(1 2 3)(4 5)", 5).unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 4, 3]);
        // cube of the 3-cycle part and square of the transposition part
        // must cancel: p^6 = identity, p^2 fixes points 4,5 swapped back.
        assert!(p.pow(6).is_identity());
        assert_eq!(p.pow(3).images(), &[0, 1, 2, 4, 3]);
        assert_eq!(p.pow(2).images(), &[2, 0, 1, 3, 4]);
    }

    #[test]
    fn parse_overlapping_cycles_left_to_right() {
        // 1 -> 2 under (1 2), then 2 -> 3 under (2 3).
        let p = parse_cycles("(1 2)(2 3)", 3).unwrap();
        assert_eq!(p.apply(0), 2);
        assert_eq!(p.apply(1), 0);
        assert_eq!(p.apply(2), 1);
    }

    #[test]
    fn parse_commas_and_whitespace() {
        let a = parse_cycles("(1,2,3)(4,5)", 5).unwrap();
        let b = parse_cycles(" ( 1 2 3 ) ( 4 5 ) ", 5).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_cycles("(1 2", 3), Err(Error::Parse(_))));
        assert!(matches!(parse_cycles("(1 4)", 3), Err(Error::Parse(_))));
        assert!(matches!(parse_cycles("(1 2 1)", 3), Err(Error::Parse(_))));
        assert!(matches!(parse_cycles("(0 1)", 3), Err(Error::Parse(_))));
        assert!(matches!(parse_cycles("1 2 3", 3), Err(Error::Parse(_))));
        assert!(matches!(parse_cycles("", 3), Err(Error::Parse(_))));
    }

    #[test]
    fn display_round_trips() {
        let p = parse_cycles("(1 2 3)(4 5)", 6).unwrap();
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
        let q = parse_cycles(&p.to_string(), 6).unwrap();
        assert_eq!(p, q);
        assert_eq!(Permutation::identity(4).to_string(), "()");
    }

    #[test]
    fn order_of_products() {
        let p = parse_cycles("(1 2 3)(4 5)", 5).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(Permutation::identity(7).order(), 1);
    }

    fn arb_perm(degree: usize) -> impl Strategy<Value = Permutation> {
        Just(()).prop_perturb(move |_, mut rng| {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for i in (1..degree).rev() {
                let j = (rng.next_u64() % (i as u64 + 1)) as usize;
                images.swap(i, j);
            }
            Permutation { images }
        })
    }

    proptest! {
        #[test]
        fn group_axioms(a in arb_perm(8), b in arb_perm(8), c in arb_perm(8)) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert!(a.mul(&a.inverse()).is_identity());
            prop_assert!(a.inverse().mul(&a).is_identity());
            let e = Permutation::identity(8);
            prop_assert_eq!(a.mul(&e), a.clone());
            prop_assert_eq!(e.mul(&a), a.clone());
        }

        #[test]
        fn conjugation_matches_product(a in arb_perm(8), g in arb_perm(8)) {
            let direct = g.mul(&a).mul(&g.inverse());
            prop_assert_eq!(a.conjugate_by(&g), direct);
        }

        #[test]
        fn pow_matches_repeated_mul(a in arb_perm(6), n in 0u64..20) {
            let mut acc = Permutation::identity(6);
            for _ in 0..n {
                acc = a.mul(&acc);
            }
            prop_assert_eq!(a.pow(n), acc);
        }
    }
}
