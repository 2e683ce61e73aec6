//! Modular character table: choose a prime p ≡ 1 (mod e) with p² > 4|G|,
//! then split F_p^k into common eigenspaces of the class matrices. Each
//! one-dimensional common eigenspace, normalized and rescaled, is one row
//! of the character table reduced mod p.

use crate::dixon::algebra::ClassAlgebra;
use crate::dixon::modmat::{split_eigenspaces, Subspace};
use crate::dixon::modp::{is_prime, Fp};
use crate::error::{Error, Result};
use crate::permgroup::ClassSet;

/// Smallest prime p with p ≡ 1 (mod `exponent`) and p² > 4·`order`. Such a
/// prime never divides |G| (every prime divisor of |G| divides the
/// exponent), F_p contains the e-th roots of unity, and the bound makes the
/// character-value lift from F_p unambiguous.
pub fn choose_prime(exponent: u64, order: u64) -> u64 {
    choose_prime_from(exponent, order, 2)
}

/// Smallest valid prime that is strictly greater than `after`; used to
/// recompute a table with an independent prime.
pub fn choose_prime_from(exponent: u64, order: u64, after: u64) -> u64 {
    let e = exponent.max(1);
    // First candidate ≡ 1 (mod e) strictly above `after`.
    let after = after.max(1);
    let mut p = if e == 1 {
        after + 1
    } else {
        ((after - 1) / e + 1) * e + 1
    };
    loop {
        if is_prime(p) && (p as u128) * (p as u128) > 4 * order as u128 {
            return p;
        }
        p += if e == 1 { 1 } else { e };
    }
}

/// Whether a user-supplied prime satisfies the requirements of the
/// algorithm for a group with the given exponent and order.
pub fn is_valid_prime(p: u64, exponent: u64, order: u64) -> bool {
    // (p−1) % e, not p % e == 1: the latter is never true for e = 1.
    is_prime(p)
        && (p - 1).is_multiple_of(exponent.max(1))
        && (p as u128) * (p as u128) > 4 * order as u128
}

/// Computes the character table mod p as a list of rows, one per
/// irreducible character, each row indexed by conjugacy class. Rows are
/// sorted by (degree, entries) for determinism; the canonical ordering is
/// applied later, after lifting.
pub fn modular_table(
    constants: &ClassAlgebra,
    classes: &ClassSet,
    p: u64,
) -> Result<Vec<Vec<u64>>> {
    let fp = Fp { p };
    let k = classes.len();
    let order = classes.order() % p;

    // Repeatedly split the common invariant subspaces by each class matrix
    // until every subspace is one-dimensional. Distinct irreducible
    // characters give distinct eigenvalue sequences (s_i·χ(g_i)/χ(1))_i, so
    // for a valid prime this terminates.
    let mut subspaces = vec![Subspace::full(k)];
    for i in 1..k {
        if subspaces.iter().all(|s| s.dim() == 1) {
            break;
        }
        let m_i = constants.class_matrix(i, &fp);
        let mut next = Vec::with_capacity(subspaces.len());
        for sub in subspaces {
            if sub.dim() == 1 {
                next.push(sub);
                continue;
            }
            let restricted = if sub.dim() == k {
                m_i.clone()
            } else {
                sub.restrict(&fp, &m_i)?
            };
            for space in split_eigenspaces(&fp, &restricted, (p << 8) | i as u64)? {
                let rows: Vec<Vec<u64>> = space.iter().map(|v| sub.lift(&fp, v)).collect();
                next.push(Subspace::from_rows(&fp, rows));
            }
        }
        subspaces = next;
    }
    if subspaces.len() != k || subspaces.iter().any(|s| s.dim() != 1) {
        return Err(Error::Internal(format!(
            "class matrices failed to split F_{p}^{k} into {k} common eigenlines — \
             bad prime or wrong constants"
        )));
    }

    let mut rows = Vec::with_capacity(k);
    for sub in &subspaces {
        let v = sub.basis.row(0);
        // Normalize so the identity coordinate is 1: v_j = s_j·χ(g_j)/χ(1).
        if v[0] == 0 {
            return Err(Error::Internal(
                "common eigenvector vanishes on the identity class".into(),
            ));
        }
        let scale = fp.inv(v[0]);
        let v: Vec<u64> = v.iter().map(|&x| fp.mul(x, scale)).collect();
        // Second orthogonality at χ: Σ_j v_j·v_{j'}/s_j = |G|/χ(1)².
        let mut c = 0u64;
        for j in 0..k {
            let jinv = classes.class(j).inverse_class();
            let s_j = classes.class(j).size % p;
            c = fp.add(c, fp.mul(fp.mul(v[j], v[jinv]), fp.inv(s_j)));
        }
        if c == 0 {
            return Err(Error::Internal(
                "degree recovery failed: orthogonality sum vanished mod p".into(),
            ));
        }
        let d_squared = fp.mul(order, fp.inv(c));
        let d = fp.sqrt(d_squared).ok_or_else(|| {
            Error::Internal(format!(
                "degree² = {d_squared} is not a square mod {p} — bad prime or wrong constants"
            ))
        })?;
        // χ(1) is a positive integer < p/2, so take the branch in [1, (p−1)/2].
        let d = d.min(p - d);
        let row: Vec<u64> = (0..k)
            .map(|j| {
                let s_j = classes.class(j).size % p;
                fp.mul(fp.mul(d, v[j]), fp.inv(s_j))
            })
            .collect();
        rows.push(row);
    }
    rows.sort_by(|a, b| a[0].cmp(&b[0]).then_with(|| a.cmp(b)));
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dixon::algebra::class_algebra_constants;
    use crate::permgroup::{conjugacy_classes, enumerate, parse_cycles, DEFAULT_ENUMERATION_CAP};

    #[test]
    fn prime_selection_examples() {
        // e = 6, |G| = 6: need p ≡ 1 (mod 6), p² > 24 ⇒ p = 7.
        assert_eq!(choose_prime(6, 6), 7);
        // Trivial group: e = 1, |G| = 1 ⇒ smallest prime with p² > 4 is 3.
        assert_eq!(choose_prime(1, 1), 3);
        // e = 8, |G| = 8: p ≡ 1 (mod 8), p² > 32 ⇒ p = 17.
        assert_eq!(choose_prime(8, 8), 17);
        // e = 2, |G| = 2: p ≡ 1 (mod 2) is any odd prime, p² > 8 ⇒ p = 3.
        assert_eq!(choose_prime(2, 2), 3);
        // Mathieu group M11: e = 1320, |G| = 7920.
        assert_eq!(choose_prime(1320, 7920), 1321);
        assert_eq!(choose_prime_from(1320, 7920, 1321), 5281);
    }

    #[test]
    fn prime_validation() {
        assert!(is_valid_prime(7, 6, 6));
        assert!(is_valid_prime(13, 6, 6)); // any valid prime, not just the smallest
        assert!(!is_valid_prime(11, 6, 6)); // 11 ≢ 1 (mod 6)
        assert!(!is_valid_prime(25, 6, 6)); // not prime
        assert!(!is_valid_prime(7, 6, 1000)); // 49 < 4000
        assert!(is_valid_prime(5281, 1320, 7920));
        // Exponent 1 (trivial group): every prime p with p² > 4 qualifies.
        assert!(is_valid_prime(3, 1, 1));
        assert!(is_valid_prime(5, 1, 1));
        assert!(!is_valid_prime(2, 1, 1)); // 4 = 4|G|, not strictly greater
    }

    fn table_for(gens: &[&str], degree: usize, p: u64) -> Vec<Vec<u64>> {
        let gens: Vec<_> = gens
            .iter()
            .map(|s| parse_cycles(s, degree).unwrap())
            .collect();
        let g = enumerate(gens, DEFAULT_ENUMERATION_CAP).unwrap();
        let cs = conjugacy_classes(&g);
        let alg = class_algebra_constants(&g, &cs);
        modular_table(&alg, &cs, p).unwrap()
    }

    #[test]
    fn trivial_group() {
        let rows = table_for(&["()"], 1, 3);
        assert_eq!(rows, vec![vec![1]]);
    }

    #[test]
    fn cyclic_two_mod_five() {
        // C2 with p = 5: characters (1, 1) and (1, −1) ≡ (1, 4).
        let rows = table_for(&["(1 2)"], 2, 5);
        assert_eq!(rows, vec![vec![1, 1], vec![1, 4]]);
    }

    #[test]
    fn sym3_mod_seven() {
        // Classes ordered identity, transpositions, 3-cycles. Characters:
        // trivial (1,1,1), sign (1,−1,1), standard (2,0,−1).
        let rows = table_for(&["(1 2)", "(1 2 3)"], 3, 7);
        assert_eq!(rows, vec![vec![1, 1, 1], vec![1, 6, 1], vec![2, 0, 6]]);
    }

    #[test]
    fn quaternion_mod_seventeen() {
        // Q8 classes: 1, −1, ±i, ±j, ±k. Four linear characters and the
        // 2-dimensional one (2, −2, 0, 0, 0).
        let rows = table_for(&["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"], 8, 17);
        assert_eq!(rows.len(), 5);
        assert_eq!(rows.iter().filter(|r| r[0] == 1).count(), 4);
        let two_dim: Vec<_> = rows.iter().filter(|r| r[0] == 2).collect();
        assert_eq!(two_dim, vec![&vec![2, 15, 0, 0, 0]]);
    }

    #[test]
    fn first_column_squares_sum_to_order() {
        for (gens, degree) in [
            (vec!["(1 2)", "(1 2 3 4)"], 4usize),
            (vec!["(1 2 3 4 5)", "(1 2 3)"], 5),
        ] {
            let parsed: Vec<_> = gens
                .iter()
                .map(|s| parse_cycles(s, degree).unwrap())
                .collect();
            let g = enumerate(parsed, DEFAULT_ENUMERATION_CAP).unwrap();
            let cs = conjugacy_classes(&g);
            let alg = class_algebra_constants(&g, &cs);
            let p = choose_prime(g.exponent(), g.order());
            let rows = modular_table(&alg, &cs, p).unwrap();
            assert_eq!(rows.len(), cs.len());
            // Degrees are genuine integers below p/2 here, so the sum of
            // squares must literally equal |G|.
            let total: u64 = rows.iter().map(|r| r[0] * r[0]).sum();
            assert_eq!(total, g.order());
        }
    }
}
