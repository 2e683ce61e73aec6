//! Lift from character values mod p to exact cyclotomic integers.
//!
//! For g of order m, χ(g) = Σ_t μ_t·ζ_m^t where μ_t is the multiplicity of
//! the eigenvalue ζ_m^t of ρ(g). The multiplicities are recovered mod p by
//! a discrete Fourier sum over the powers of g; since 0 ≤ μ_t ≤ χ(1) < p/2,
//! each residue determines μ_t exactly.

use std::collections::HashMap;

use crate::cyclotomic::{CyclotomicField, RootAccumulator};
use crate::dixon::modp::Fp;
use crate::dixon::table::CharacterTable;
use crate::error::{Error, Result};
use crate::permgroup::ClassSet;

/// Lifts a sorted modular table to an exact [`CharacterTable`], verifying
/// first-orthogonality before accepting the result. Consumes the class set,
/// which the table keeps.
pub fn lift_table(modular: &[Vec<u64>], classes: ClassSet, p: u64) -> Result<CharacterTable> {
    let fp = Fp::new(p);
    let e = classes.exponent();
    let k = classes.len();
    let order = classes.order();
    let field = CyclotomicField::new(e);

    let omega = fp.nth_root(e)?;
    let mut omega_pow = Vec::with_capacity(e as usize);
    let mut acc = 1u64;
    for _ in 0..e {
        omega_pow.push(acc);
        acc = fp.mul(acc, omega);
    }

    // For degree-1 characters every value is itself a root of unity:
    // χ(g) ≡ ω^{(e/m)t} for g of order m. One discrete-log table per element
    // order replaces the Fourier sum.
    let mut dlog: HashMap<u64, HashMap<u64, u64>> = HashMap::new();
    for class in classes.classes() {
        let m = class.element_order;
        dlog.entry(m).or_insert_with(|| {
            let step = (e / m) as usize;
            (0..m)
                .map(|t| (omega_pow[(step * t as usize) % e as usize], t))
                .collect()
        });
    }

    let mut degrees = Vec::with_capacity(modular.len());
    let mut roots: Vec<Vec<Vec<(u32, i64)>>> = Vec::with_capacity(modular.len());
    for row in modular {
        let degree = row[0];
        if degree == 0 || 2 * degree >= p {
            return Err(Error::LiftFailure(format!(
                "modular degree {degree} is outside [1, (p−1)/2] for p = {p}"
            )));
        }
        let mut row_roots = Vec::with_capacity(k);
        for j in 0..k {
            let class = classes.class(j);
            let m = class.element_order;
            let stride = e / m;

            if degree == 1 {
                let t = *dlog[&m].get(&row[j]).ok_or_else(|| {
                    Error::LiftFailure(format!(
                        "linear character value {} mod {p} is not an order-{m} root of unity \
                         — signals a bad prime",
                        row[j]
                    ))
                })?;
                row_roots.push(vec![((stride * t) as u32, 1i64)]);
                continue;
            }

            // μ_t = m⁻¹ Σ_{s<m} χ(g^s)·ω^{−(e/m)ts} mod p.
            let m_inv = fp.inv(m % p);
            let mut value_roots = Vec::new();
            let mut total = 0u64;
            for t in 0..m {
                let step = (stride * t) % e; // exponent decrement per s
                let mut sum = 0u64;
                let mut exp = 0usize;
                for s in 0..m as usize {
                    let chi = row[class.power_map[s]];
                    sum = fp.add(sum, fp.mul(chi, omega_pow[(e as usize - exp) % e as usize]));
                    exp = (exp + step as usize) % e as usize;
                }
                let mu = fp.mul(m_inv, sum);
                if mu > degree {
                    return Err(Error::LiftFailure(format!(
                        "eigenvalue multiplicity residue {mu} exceeds the degree {degree} \
                         — signals a bad prime"
                    )));
                }
                total += mu;
                if mu > 0 {
                    value_roots.push(((stride * t) as u32, mu as i64));
                }
            }
            if total != degree {
                return Err(Error::LiftFailure(format!(
                    "eigenvalue multiplicities sum to {total}, expected the degree {degree}"
                )));
            }
            row_roots.push(value_roots);
        }
        degrees.push(degree);
        roots.push(row_roots);
    }

    // First orthogonality over the exact values: Σ_j s_j·χ_a(g_j)·conj(χ_b(g_j))
    // must equal |G|·δ_ab. A failure means the modular solve or the lift
    // produced a non-table, so the whole result is rejected.
    let mut accum = RootAccumulator::new(e);
    for a in 0..roots.len() {
        for b in a..roots.len() {
            accum.clear();
            for (j, (ra, rb)) in roots[a].iter().zip(&roots[b]).enumerate() {
                accum.add_conj_product(ra, rb, classes.class(j).size as i64);
            }
            if a == b {
                accum.expect(order as i64);
            }
            if !accum.is_zero(&field) {
                return Err(Error::Internal(format!(
                    "row orthogonality failed for characters {a} and {b} — \
                     the computed table is inconsistent and was rejected"
                )));
            }
        }
    }
    let square_sum: u64 = degrees.iter().map(|d| d * d).sum();
    if square_sum != order {
        return Err(Error::Internal(format!(
            "degrees squared sum to {square_sum}, expected the group order {order}"
        )));
    }

    let mut values: Vec<Vec<_>> = roots
        .iter()
        .map(|row| {
            row.iter()
                .map(|r| {
                    let as_u64: Vec<(u64, i64)> =
                        r.iter().map(|&(exp, c)| (exp as u64, c)).collect();
                    field.from_roots(&as_u64)
                })
                .collect()
        })
        .collect();
    crate::dixon::table::canonical_sort(&field, &mut degrees, &mut values, &mut roots)?;

    Ok(CharacterTable {
        group_name: String::new(),
        order,
        prime: p,
        field,
        classes,
        degrees,
        values,
        roots,
    })
}
