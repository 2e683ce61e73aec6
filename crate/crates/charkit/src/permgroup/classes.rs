//! Conjugacy classes: orbits under conjugation, power maps, rationality.

use num::integer::{gcd, lcm};

use crate::permgroup::group::PermGroup;
use crate::permgroup::perm::Permutation;

/// One conjugacy class of a [`PermGroup`].
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    /// Position of this class in the canonical class order.
    pub index: usize,
    /// Canonical representative: the member with smallest element id.
    pub representative: Permutation,
    /// Element id of the representative.
    pub representative_id: usize,
    /// Number of elements in the class.
    pub size: u64,
    /// Sorted element ids of all members.
    pub member_ids: Vec<usize>,
    /// Common multiplicative order of the members.
    pub element_order: u64,
    /// |G| / size, by orbit–stabilizer.
    pub centralizer_order: u64,
    /// Entry `s` is the class index of `representative^s`, for 0 ≤ s < exponent.
    pub power_map: Vec<usize>,
    /// Whether representative^i stays in this class for every i coprime to
    /// the element order.
    pub is_rational: bool,
}

impl ConjugacyClass {
    /// Index of the class containing the inverses of this class's members.
    pub fn inverse_class(&self) -> usize {
        self.power_map[(self.element_order - 1) as usize]
    }

    /// Whether the class equals its own inverse class (needed for
    /// undirected Cayley graphs).
    pub fn is_inverse_closed(&self) -> bool {
        self.inverse_class() == self.index
    }
}

/// All conjugacy classes of a group, in canonical order, with the
/// element-to-class map and ATLAS-style labels.
#[derive(Clone, Debug)]
pub struct ClassSet {
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    labels: Vec<String>,
    exponent: u64,
    order: u64,
}

impl ClassSet {
    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class(&self, index: usize) -> &ConjugacyClass {
        &self.classes[index]
    }

    /// Class index of an element id.
    pub fn class_of(&self, element_id: usize) -> usize {
        self.class_of[element_id]
    }

    /// ATLAS-style label, e.g. `1a`, `2a`, `5a`.
    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Looks a class up by its label, case-insensitively.
    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        let needle = label.to_ascii_lowercase();
        self.labels.iter().position(|l| *l == needle)
    }

    /// Exponent of the group (lcm of all element orders).
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Order of the group the classes partition.
    pub fn order(&self) -> u64 {
        self.order
    }
}

/// Computes the conjugacy classes of `group`.
///
/// Classes are sorted by (element order, size, smallest member id); the
/// identity class is always first. Power maps and rationality flags are
/// filled for every class.
pub fn conjugacy_classes(group: &PermGroup) -> ClassSet {
    let n = group.order() as usize;
    let gens = group.generators();

    // Orbits under conjugation by the generators.
    let mut class_of = vec![usize::MAX; n];
    let mut raw: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let cid = raw.len();
        class_of[start] = cid;
        let mut members = vec![start];
        let mut qi = 0;
        while qi < members.len() {
            let x = members[qi];
            qi += 1;
            for g in gens {
                let conj = group.element(x).conjugate_by(g);
                let y = group
                    .id_of(&conj)
                    .expect("conjugate of a group element stays in the group");
                if class_of[y] == usize::MAX {
                    class_of[y] = cid;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        raw.push(members);
    }

    // Canonical order: (element order, size, smallest member id).
    let mut order_keys: Vec<(u64, usize, usize)> = raw
        .iter()
        .map(|members| {
            let ord = group.element(members[0]).order();
            (ord, members.len(), members[0])
        })
        .collect();
    let mut perm: Vec<usize> = (0..raw.len()).collect();
    perm.sort_by_key(|&i| order_keys[i]);
    let mut sorted_raw = Vec::with_capacity(raw.len());
    let mut sorted_keys = Vec::with_capacity(raw.len());
    for &i in &perm {
        sorted_raw.push(std::mem::take(&mut raw[i]));
        sorted_keys.push(order_keys[i]);
    }
    order_keys = sorted_keys;
    for (new_index, members) in sorted_raw.iter().enumerate() {
        for &m in members {
            class_of[m] = new_index;
        }
    }

    let exponent = order_keys
        .iter()
        .fold(1u64, |acc, &(ord, _, _)| lcm(acc, ord));

    let mut classes = Vec::with_capacity(sorted_raw.len());
    for (index, members) in sorted_raw.into_iter().enumerate() {
        let (element_order, size, rep_id) = order_keys[index];
        let m = element_order as usize;

        // Classes of representative^s for s < element order; the full power
        // map repeats with this period.
        let mut pm_mod = Vec::with_capacity(m);
        let mut cur = 0usize; // identity
        for _ in 0..m {
            pm_mod.push(class_of[cur]);
            cur = group.mul_ids(rep_id, cur);
        }
        debug_assert_eq!(cur, 0, "representative^order must be the identity");
        let power_map: Vec<usize> = (0..exponent as usize).map(|s| pm_mod[s % m]).collect();

        let is_rational = (1..m)
            .filter(|&i| gcd(i as u64, element_order) == 1)
            .all(|i| pm_mod[i] == index);

        classes.push(ConjugacyClass {
            index,
            representative: group.element(rep_id).clone(),
            representative_id: rep_id,
            size: size as u64,
            member_ids: members,
            element_order,
            centralizer_order: group.order() / size as u64,
            power_map,
            is_rational,
        });
    }

    let labels = make_labels(&classes);

    ClassSet {
        classes,
        class_of,
        labels,
        exponent,
        order: group.order(),
    }
}

/// ATLAS-style labels: element order followed by a letter counting classes
/// of that order in canonical sequence (`a`..`z`, then `aa`, `ab`, …).
fn make_labels(classes: &[ConjugacyClass]) -> Vec<String> {
    let mut labels = Vec::with_capacity(classes.len());
    let mut seen_of_order: std::collections::HashMap<u64, usize> = std::collections::HashMap::new();
    for class in classes {
        let count = seen_of_order.entry(class.element_order).or_insert(0);
        labels.push(format!("{}{}", class.element_order, letter_suffix(*count)));
        *count += 1;
    }
    labels
}

/// Bijective base-26 letters: 0 → "a", 25 → "z", 26 → "aa".
fn letter_suffix(mut n: usize) -> String {
    let mut out = Vec::new();
    loop {
        out.push(b'a' + (n % 26) as u8);
        n /= 26;
        if n == 0 {
            break;
        }
        n -= 1;
    }
    out.reverse();
    String::from_utf8(out).expect("ascii letters")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::group::{enumerate, DEFAULT_ENUMERATION_CAP};
    use crate::permgroup::perm::parse_cycles;

    fn group(gens: &[&str], degree: usize) -> PermGroup {
        let gens: Vec<_> = gens
            .iter()
            .map(|s| parse_cycles(s, degree).unwrap())
            .collect();
        enumerate(gens, DEFAULT_ENUMERATION_CAP).unwrap()
    }

    fn check_invariants(g: &PermGroup, cs: &ClassSet) {
        let total: u64 = cs.classes().iter().map(|c| c.size).sum();
        assert_eq!(total, g.order());
        assert!(cs.class(0).representative.is_identity());
        assert!(cs.class(0).is_rational);
        for c in cs.classes() {
            assert_eq!(c.size * c.centralizer_order, g.order());
            assert_eq!(c.power_map.len(), cs.exponent() as usize);
            assert_eq!(c.power_map[0], 0, "power 0 is the identity class");
            assert_eq!(c.member_ids.len() as u64, c.size);
            for &m in &c.member_ids {
                assert_eq!(cs.class_of(m), c.index);
                assert_eq!(g.element(m).order(), c.element_order);
            }
        }
    }

    #[test]
    fn sym3_classes() {
        let g = group(&["(1 2)", "(1 2 3)"], 3);
        let cs = conjugacy_classes(&g);
        check_invariants(&g, &cs);
        assert_eq!(cs.len(), 3);
        let sizes: Vec<u64> = cs.classes().iter().map(|c| c.size).collect();
        let orders: Vec<u64> = cs.classes().iter().map(|c| c.element_order).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        assert_eq!(orders, vec![1, 2, 3]);
        assert_eq!(cs.labels(), &["1a", "2a", "3a"]);
        // Both non-identity classes of Sym(3) are rational.
        assert!(cs.classes().iter().all(|c| c.is_rational));
        assert!(cs.classes().iter().all(|c| c.is_inverse_closed()));
    }

    #[test]
    fn cyclic3_generator_class_not_rational() {
        let g = group(&["(1 2 3)"], 3);
        let cs = conjugacy_classes(&g);
        check_invariants(&g, &cs);
        assert_eq!(cs.len(), 3);
        assert!(cs.classes().iter().all(|c| c.size == 1));
        // x and x^2 lie in distinct singleton classes.
        assert!(!cs.class(1).is_rational);
        assert!(!cs.class(2).is_rational);
        assert!(!cs.class(1).is_inverse_closed());
        assert_eq!(cs.class(1).inverse_class(), 2);
    }

    #[test]
    fn quaternion_classes_all_rational() {
        let g = group(&["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"], 8);
        let cs = conjugacy_classes(&g);
        check_invariants(&g, &cs);
        let sizes: Vec<u64> = cs.classes().iter().map(|c| c.size).collect();
        let orders: Vec<u64> = cs.classes().iter().map(|c| c.element_order).collect();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
        assert_eq!(orders, vec![1, 2, 4, 4, 4]);
        assert_eq!(cs.labels(), &["1a", "2a", "4a", "4b", "4c"]);
        assert!(cs.classes().iter().all(|c| c.is_rational));
    }

    #[test]
    fn label_lookup() {
        let g = group(&["(1 2)", "(1 2 3 4)"], 4);
        let cs = conjugacy_classes(&g);
        check_invariants(&g, &cs);
        assert_eq!(cs.len(), 5);
        assert_eq!(cs.index_of_label("2a"), Some(1));
        assert_eq!(cs.index_of_label("2B"), Some(2));
        assert_eq!(cs.index_of_label("9z"), None);
    }

    #[test]
    fn power_map_coherence_small_groups() {
        let groups = vec![
            group(&["(1 2)", "(1 2 3)"], 3),
            group(&["(1 2 3 4)", "(2 4)"], 4),
            group(&["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"], 8),
            group(&["(1 2)", "(1 2 3 4)"], 4),
            group(&["(1 2 3 4 5 6)"], 6),
        ];
        for g in &groups {
            let cs = conjugacy_classes(g);
            check_invariants(g, &cs);
            let e = cs.exponent() as usize;
            for c in cs.classes() {
                for a in 0..e {
                    for b in 0..e {
                        let inner = cs.class(c.power_map[a]);
                        assert_eq!(
                            inner.power_map[b],
                            c.power_map[(a * b) % e],
                            "power map composition failed"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn rationality_well_defined_from_any_member() {
        let groups = vec![
            group(&["(1 2)", "(1 2 3)"], 3),
            group(&["(1 2 3 4)", "(2 4)"], 4),
            group(&["(1 2)", "(1 2 3 4)"], 4),
            group(&["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"], 8),
            group(&["(1 2 3)", "(4 5 6)", "(1 4)(2 5)(3 6)"], 6),
        ];
        for g in &groups {
            assert!(g.order() <= 24);
            let cs = conjugacy_classes(g);
            for c in cs.classes() {
                for &member in &c.member_ids {
                    let x = g.element(member);
                    let m = c.element_order;
                    let rational_from_member = (1..m)
                        .filter(|&i| num::integer::gcd(i, m) == 1)
                        .all(|i| cs.class_of(g.id_of(&x.pow(i)).unwrap()) == c.index);
                    assert_eq!(rational_from_member, c.is_rational);
                }
            }
        }
    }

    #[test]
    fn letter_suffixes() {
        assert_eq!(letter_suffix(0), "a");
        assert_eq!(letter_suffix(25), "z");
        assert_eq!(letter_suffix(26), "aa");
        assert_eq!(letter_suffix(27), "ab");
        assert_eq!(letter_suffix(52), "ba");
    }
}
