//! Group enumeration: breadth-first closure of a generating set.

use std::collections::HashMap;

use num::integer::lcm;

use crate::error::{Error, Result};
use crate::permgroup::perm::Permutation;

/// Default cap on the number of elements enumerated before giving up.
pub const DEFAULT_ENUMERATION_CAP: usize = 200_000;

/// A finite permutation group with its elements fully enumerated.
///
/// Element ids are breadth-first discovery order from the generating set,
/// with the identity always at id 0. This order is deterministic for a
/// given generator list, so ids are stable across runs.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    inverses: Vec<usize>,
}

impl PermGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, id: usize) -> &Permutation {
        &self.elements[id]
    }

    /// Id of a permutation, if it belongs to the group.
    pub fn id_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Id of the inverse of element `id`.
    pub fn inverse_id(&self, id: usize) -> usize {
        self.inverses[id]
    }

    /// Id of the product `elements[a] * elements[b]`.
    pub fn mul_ids(&self, a: usize, b: usize) -> usize {
        let p = self.elements[a].mul(&self.elements[b]);
        self.index[&p]
    }

    /// Exponent of the group: lcm of all element orders.
    pub fn exponent(&self) -> u64 {
        self.elements
            .iter()
            .fold(1u64, |acc, p| lcm(acc, p.order()))
    }
}

/// Enumerates the group generated by `generators` by breadth-first closure.
///
/// Fails if the generators act on different degrees, the list is empty, or
/// the group has more than `cap` elements.
pub fn enumerate(generators: Vec<Permutation>, cap: usize) -> Result<PermGroup> {
    if generators.is_empty() {
        return Err(Error::Input("at least one generator is required".into()));
    }
    let degree = generators[0].degree();
    for g in &generators {
        if g.degree() != degree {
            return Err(Error::Input(format!(
                "generators act on different degrees ({} vs {})",
                degree,
                g.degree()
            )));
        }
    }

    let identity = Permutation::identity(degree);
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::new();
    index.insert(identity, 0usize);

    let mut frontier_start = 0;
    while frontier_start < elements.len() {
        let frontier_end = elements.len();
        for i in frontier_start..frontier_end {
            for g in &generators {
                let next = g.mul(&elements[i]);
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(Error::GroupTooLarge {
                            cap,
                            found: elements.len() + 1,
                        });
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
        }
        frontier_start = frontier_end;
    }

    let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();

    Ok(PermGroup {
        degree,
        generators,
        elements,
        index,
        inverses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::perm::parse_cycles;

    fn group(gens: &[&str], degree: usize) -> PermGroup {
        let gens: Vec<_> = gens
            .iter()
            .map(|s| parse_cycles(s, degree).unwrap())
            .collect();
        enumerate(gens, DEFAULT_ENUMERATION_CAP).unwrap()
    }

    #[test]
    fn symmetric_group_orders() {
        assert_eq!(group(&["(1 2)", "(1 2 3)"], 3).order(), 6);
        assert_eq!(group(&["(1 2)", "(1 2 3 4)"], 4).order(), 24);
        assert_eq!(group(&["(1 2)", "(1 2 3 4 5)"], 5).order(), 120);
    }

    #[test]
    fn cyclic_and_dihedral() {
        let c6 = group(&["(1 2 3 4 5 6)"], 6);
        assert_eq!(c6.order(), 6);
        assert_eq!(c6.exponent(), 6);
        let d4 = group(&["(1 2 3 4)", "(2 4)"], 4);
        assert_eq!(d4.order(), 8);
        assert_eq!(d4.exponent(), 4);
    }

    #[test]
    fn quaternion_group() {
        // Left-multiplication action of Q8 on {1, i, -1, -i, j, k, -j, -k}.
        let q8 = group(&["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"], 8);
        assert_eq!(q8.order(), 8);
        assert_eq!(q8.exponent(), 4);
        // Exactly one element of order 2 distinguishes Q8 from D4.
        let invol = q8.elements().iter().filter(|p| p.order() == 2).count();
        assert_eq!(invol, 1);
    }

    #[test]
    fn identity_is_element_zero() {
        let g = group(&["(1 2 3)", "(1 2)"], 3);
        assert!(g.element(0).is_identity());
        assert_eq!(g.inverse_id(0), 0);
        for id in 0..g.order() as usize {
            let inv = g.inverse_id(id);
            assert!(g.element(id).mul(g.element(inv)).is_identity());
        }
    }

    #[test]
    fn cap_enforced() {
        let gens = vec![
            parse_cycles("(1 2)", 5).unwrap(),
            parse_cycles("(1 2 3 4 5)", 5).unwrap(),
        ];
        match enumerate(gens, 100) {
            Err(Error::GroupTooLarge { cap: 100, .. }) => {}
            other => panic!("expected GroupTooLarge, got {:?}", other.map(|g| g.order())),
        }
    }

    #[test]
    fn mismatched_degrees_rejected() {
        let gens = vec![
            parse_cycles("(1 2)", 3).unwrap(),
            parse_cycles("(1 2)", 4).unwrap(),
        ];
        assert!(matches!(enumerate(gens, 100), Err(Error::Input(_))));
    }
}
