//! The exact character table: values, self-verification, and a text
//! export/import format for caching expensive tables.

use crate::cyclotomic::{Cyclotomic, CyclotomicField, RootAccumulator};
use crate::dixon::algebra::class_algebra_constants;
use crate::dixon::lift::lift_table;
use crate::dixon::solve::{choose_prime, is_valid_prime, modular_table};
use crate::error::{Error, Result};
use crate::permgroup::{conjugacy_classes, parse_cycles, ClassSet, PermGroup};

/// The character table of a finite group, with every value an exact
/// cyclotomic integer. Rows are irreducible characters in canonical order
/// (trivial first, then by degree and value tuple); columns are conjugacy
/// classes in canonical class order.
#[derive(Debug)]
pub struct CharacterTable {
    pub(crate) group_name: String,
    pub(crate) order: u64,
    pub(crate) prime: u64,
    pub(crate) field: CyclotomicField,
    pub(crate) classes: ClassSet,
    pub(crate) degrees: Vec<u64>,
    pub(crate) values: Vec<Vec<Cyclotomic>>,
    /// Sparse root-of-unity form of each value: χ_i(g_j) = Σ c·ζ_e^exp over
    /// `roots[i][j]`. Kept alongside the canonical form because sums of
    /// conjugate-products stay in root form, where exact zero tests are
    /// cheapest.
    pub(crate) roots: Vec<Vec<Vec<(u32, i64)>>>,
}

impl CharacterTable {
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.field.conductor()
    }

    /// The prime the modular stage ran over.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn classes(&self) -> &ClassSet {
        &self.classes
    }

    /// Number of conjugacy classes = number of irreducible characters.
    pub fn k(&self) -> usize {
        self.degrees.len()
    }

    /// Character degrees in canonical row order.
    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// χ_i(g_j) in canonical form.
    pub fn value(&self, row: usize, class: usize) -> &Cyclotomic {
        &self.values[row][class]
    }

    pub fn group_name(&self) -> &str {
        &self.group_name
    }

    pub fn set_group_name(&mut self, name: &str) {
        self.group_name = name.to_string();
    }

    pub fn with_name(mut self, name: &str) -> CharacterTable {
        self.set_group_name(name);
        self
    }

    /// Full structural self-check: shapes, degree identities, trivial row,
    /// first column, and both orthogonality relations, all in exact
    /// arithmetic. Any failure rejects the table as inconsistent.
    pub fn verify(&self) -> Result<()> {
        let k = self.classes.len();
        let fail = |what: String| Err(Error::Inconsistency(what));

        if self.degrees.len() != k || self.values.len() != k || self.roots.len() != k {
            return fail(format!("table is not {k}×{k}"));
        }
        if self.classes.order() != self.order || self.field.conductor() != self.classes.exponent() {
            return fail("table metadata disagrees with its class data".into());
        }
        for i in 0..k {
            if self.values[i].len() != k || self.roots[i].len() != k {
                return fail(format!("character row {i} has the wrong length"));
            }
            for j in 0..k {
                let from_roots: Vec<(u64, i64)> = self.roots[i][j]
                    .iter()
                    .map(|&(exp, c)| (exp as u64, c))
                    .collect();
                if self.field.from_roots(&from_roots) != self.values[i][j] {
                    return fail(format!(
                        "value ({i},{j}) disagrees with its root-of-unity form"
                    ));
                }
            }
        }

        let square_sum: u64 = self.degrees.iter().map(|d| d * d).sum();
        if square_sum != self.order {
            return fail(format!(
                "degrees squared sum to {square_sum}, not the group order {}",
                self.order
            ));
        }
        let one = self.field.one();
        if self.degrees[0] != 1 || self.values[0].iter().any(|v| *v != one) {
            return fail("first row is not the trivial character".into());
        }
        for i in 0..k {
            if self.values[i][0] != self.field.integer(self.degrees[i] as i64) {
                return fail(format!("row {i} does not start with its degree"));
            }
        }

        // Row orthogonality: Σ_j s_j·χ_a(g_j)·conj(χ_b(g_j)) = |G|·δ_ab.
        let mut acc = RootAccumulator::new(self.field.conductor());
        for a in 0..k {
            for b in a..k {
                acc.clear();
                for j in 0..k {
                    acc.add_conj_product(
                        &self.roots[a][j],
                        &self.roots[b][j],
                        self.classes.class(j).size as i64,
                    );
                }
                if a == b {
                    acc.expect(self.order as i64);
                }
                if !acc.is_zero(&self.field) {
                    return fail(format!("row orthogonality fails for characters {a}, {b}"));
                }
            }
        }
        // Column orthogonality: Σ_i χ_i(g_a)·conj(χ_i(g_b)) = |C_G(g_a)|·δ_ab.
        for a in 0..k {
            for b in a..k {
                acc.clear();
                for i in 0..k {
                    acc.add_conj_product(&self.roots[i][a], &self.roots[i][b], 1);
                }
                if a == b {
                    acc.expect(self.classes.class(a).centralizer_order as i64);
                }
                if !acc.is_zero(&self.field) {
                    return fail(format!("column orthogonality fails for classes {a}, {b}"));
                }
            }
        }
        Ok(())
    }

    /// Renders the table in the cache format: a `key value` header, one
    /// `class` line per conjugacy class, one `char` line per character.
    pub fn export(&self) -> String {
        let mut out = String::new();
        out.push_str("# character table cache\n");
        out.push_str(&format!("group {}\n", self.group_name));
        out.push_str(&format!("order {}\n", self.order));
        out.push_str(&format!("exponent {}\n", self.field.conductor()));
        out.push_str(&format!("prime {}\n", self.prime));
        for (j, class) in self.classes.classes().iter().enumerate() {
            out.push_str(&format!(
                "class {} {} {} {} {}\n",
                self.classes.label(j),
                class.representative.to_string().replace(' ', ","),
                class.size,
                class.element_order,
                if class.is_rational {
                    "rational"
                } else {
                    "irrational"
                },
            ));
        }
        for i in 0..self.k() {
            out.push_str(&format!("char {}", self.degrees[i]));
            for v in &self.values[i] {
                out.push_str(&format!(" {v}"));
            }
            out.push('\n');
        }
        out
    }

    /// Parses an exported table and re-verifies it against `group`, so a
    /// cached file can stand in for recomputation without being trusted.
    pub fn import(text: &str, group: &PermGroup) -> Result<CharacterTable> {
        let classes = conjugacy_classes(group);
        let k = classes.len();
        let mut name = String::new();
        let mut order = None;
        let mut exponent = None;
        let mut prime = None;
        let mut class_lines: Vec<Vec<&str>> = Vec::new();
        let mut char_lines: Vec<Vec<&str>> = Vec::new();

        let parse_u64 = |token: &str, what: &str| -> Result<u64> {
            token
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad {what} \"{token}\" in table file")))
        };
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens[0] {
                "group" => name = line["group".len()..].trim().to_string(),
                "order" if tokens.len() == 2 => order = Some(parse_u64(tokens[1], "order")?),
                "exponent" if tokens.len() == 2 => {
                    exponent = Some(parse_u64(tokens[1], "exponent")?)
                }
                "prime" if tokens.len() == 2 => prime = Some(parse_u64(tokens[1], "prime")?),
                "class" => class_lines.push(tokens),
                "char" => char_lines.push(tokens),
                _ => return Err(Error::Parse(format!("unrecognized table line \"{line}\""))),
            }
        }
        let order = order.ok_or_else(|| Error::Parse("table file missing order".into()))?;
        let exponent =
            exponent.ok_or_else(|| Error::Parse("table file missing exponent".into()))?;
        let prime = prime.ok_or_else(|| Error::Parse("table file missing prime".into()))?;
        if order != group.order() || exponent != classes.exponent() {
            return Err(Error::Input(format!(
                "table file is for a group of order {order} and exponent {exponent}; \
                 the given group has order {} and exponent {}",
                group.order(),
                classes.exponent()
            )));
        }
        if !is_valid_prime(prime, exponent, order) {
            return Err(Error::Input(format!(
                "table file prime {prime} is not valid for this group"
            )));
        }
        if class_lines.len() != k || char_lines.len() != k {
            return Err(Error::Input(format!(
                "table file has {} class lines and {} char lines; the group has {k} classes",
                class_lines.len(),
                char_lines.len()
            )));
        }

        for (j, tokens) in class_lines.iter().enumerate() {
            let [_, label, rep, size, elt_order, rationality] = tokens[..] else {
                return Err(Error::Parse(format!(
                    "class line for {} does not have 5 fields",
                    classes.label(j)
                )));
            };
            let class = classes.class(j);
            let rep = parse_cycles(&rep.replace(',', " "), group.degree())?;
            let rep_class = group
                .id_of(&rep)
                .map(|id| classes.class_of(id))
                .ok_or_else(|| {
                    Error::Input(format!(
                        "class representative {rep} is not an element of the group"
                    ))
                })?;
            let rational_flag = match rationality {
                "rational" => true,
                "irrational" => false,
                other => {
                    return Err(Error::Parse(format!(
                        "bad rationality flag \"{other}\" in table file"
                    )))
                }
            };
            if label != classes.label(j)
                || rep_class != j
                || parse_u64(size, "class size")? != class.size
                || parse_u64(elt_order, "element order")? != class.element_order
                || rational_flag != class.is_rational
            {
                return Err(Error::Inconsistency(format!(
                    "class line {} disagrees with the recomputed class data",
                    classes.label(j)
                )));
            }
        }

        let field = CyclotomicField::new(exponent);
        let mut degrees = Vec::with_capacity(k);
        let mut values: Vec<Vec<Cyclotomic>> = Vec::with_capacity(k);
        let mut roots: Vec<Vec<Vec<(u32, i64)>>> = Vec::with_capacity(k);
        for tokens in &char_lines {
            if tokens.len() != k + 2 {
                return Err(Error::Parse(format!(
                    "char line has {} values; the group has {k} classes",
                    tokens.len().saturating_sub(2)
                )));
            }
            let degree = parse_u64(tokens[1], "character degree")?;
            let row: Vec<Cyclotomic> = tokens[2..]
                .iter()
                .map(|t| Cyclotomic::parse(t, &field))
                .collect::<Result<_>>()?;
            // Values re-enter root form through their canonical coefficients
            // (ζ^j for each nonzero coefficient), which the verification
            // arithmetic accepts like any other root combination.
            let row_roots: Vec<Vec<(u32, i64)>> = row
                .iter()
                .map(|v| {
                    v.coeffs()
                        .iter()
                        .enumerate()
                        .filter(|&(_, &c)| c != 0)
                        .map(|(exp, &c)| (exp as u32, c))
                        .collect()
                })
                .collect();
            degrees.push(degree);
            values.push(row);
            roots.push(row_roots);
        }
        canonical_sort(&field, &mut degrees, &mut values, &mut roots)
            .map_err(|_| Error::Inconsistency("table file has no trivial character".into()))?;

        let table = CharacterTable {
            group_name: name,
            order,
            prime,
            field,
            classes,
            degrees,
            values,
            roots,
        };
        table.verify()?;
        Ok(table)
    }
}

/// Reorders rows into canonical order: trivial character first, the rest by
/// (degree, exact value tuple).
pub(crate) fn canonical_sort(
    field: &CyclotomicField,
    degrees: &mut Vec<u64>,
    values: &mut Vec<Vec<Cyclotomic>>,
    roots: &mut Vec<Vec<Vec<(u32, i64)>>>,
) -> Result<()> {
    let one = field.one();
    let trivial = values
        .iter()
        .position(|row| row.iter().all(|v| *v == one))
        .ok_or_else(|| Error::Internal("no trivial character found in the table".into()))?;
    let mut index: Vec<usize> = (0..values.len()).collect();
    index.sort_by(|&a, &b| {
        (a != trivial, degrees[a], &values[a]).cmp(&(b != trivial, degrees[b], &values[b]))
    });
    *degrees = index.iter().map(|&i| degrees[i]).collect();
    *values = index.iter().map(|&i| values[i].clone()).collect();
    *roots = index.iter().map(|&i| roots[i].clone()).collect();
    Ok(())
}

/// Computes the character table of `group` using the smallest valid prime.
pub fn character_table(group: &PermGroup) -> Result<CharacterTable> {
    let classes = conjugacy_classes(group);
    let p = choose_prime(classes.exponent(), group.order());
    build(group, classes, p)
}

/// Computes the character table over a caller-chosen prime, which must be
/// ≡ 1 (mod exponent) with p² > 4|G|.
pub fn character_table_with_prime(group: &PermGroup, p: u64) -> Result<CharacterTable> {
    let classes = conjugacy_classes(group);
    if !is_valid_prime(p, classes.exponent(), group.order()) {
        return Err(Error::Input(format!(
            "prime {p} is not usable here: need a prime ≡ 1 (mod {}) with p² > {}",
            classes.exponent(),
            4 * group.order()
        )));
    }
    build(group, classes, p)
}

fn build(group: &PermGroup, classes: ClassSet, p: u64) -> Result<CharacterTable> {
    let constants = class_algebra_constants(group, &classes);
    let rows = modular_table(&constants, &classes, p)?;
    lift_table(&rows, classes, p)
}

/// The sorted multiset of character degrees {n_1, …, n_k}: the block sizes
/// in the Wedderburn decomposition CG ≅ ⊕ M_{n_i}(C).
pub fn degree_multiset(table: &CharacterTable) -> Vec<u64> {
    let mut degrees = table.degrees.clone();
    degrees.sort_unstable();
    degrees
}

/// Renders the degree multiset as the group-algebra decomposition, e.g.
/// `M_1 ⊕ M_10^3 ⊕ M_11 ⊕ M_16^2 ⊕ M_44 ⊕ M_45 ⊕ M_55`.
pub fn decomposition_string(table: &CharacterTable) -> String {
    let degrees = degree_multiset(table);
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < degrees.len() {
        let d = degrees[i];
        let mut count = 0;
        while i < degrees.len() && degrees[i] == d {
            count += 1;
            i += 1;
        }
        if count == 1 {
            parts.push(format!("M_{d}"));
        } else {
            parts.push(format!("M_{d}^{count}"));
        }
    }
    parts.join(" ⊕ ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::{enumerate, DEFAULT_ENUMERATION_CAP};

    fn group(gens: &[&str], degree: usize) -> PermGroup {
        let gens: Vec<_> = gens
            .iter()
            .map(|s| parse_cycles(s, degree).unwrap())
            .collect();
        enumerate(gens, DEFAULT_ENUMERATION_CAP).unwrap()
    }

    #[test]
    fn sym3_table_verifies_and_round_trips() {
        let g = group(&["(1 2)", "(1 2 3)"], 3);
        let t = character_table(&g).unwrap().with_name("sym:3");
        t.verify().unwrap();
        assert_eq!(t.prime(), 7);
        assert_eq!(degree_multiset(&t), vec![1, 1, 2]);
        assert_eq!(decomposition_string(&t), "M_1^2 ⊕ M_2");

        let text = t.export();
        let back = CharacterTable::import(&text, &g).unwrap();
        assert_eq!(back.export(), text);
        assert_eq!(back.group_name(), "sym:3");
        assert_eq!(back.degrees(), t.degrees());
        for i in 0..t.k() {
            for j in 0..t.k() {
                assert_eq!(back.value(i, j), t.value(i, j));
            }
        }
    }

    #[test]
    fn import_rejects_corrupted_value() {
        let g = group(&["(1 2)", "(1 2 3)"], 3);
        let t = character_table(&g).unwrap().with_name("sym:3");
        // Corrupt the standard character's value at the 3-cycle class.
        let text = t.export().replace("char 2 2 0 -1", "char 2 2 0 1");
        let err = CharacterTable::import(&text, &g).unwrap_err();
        assert!(matches!(err, Error::Inconsistency(_)), "{err}");
    }

    #[test]
    fn import_rejects_wrong_group() {
        let s3 = group(&["(1 2)", "(1 2 3)"], 3);
        let c4 = group(&["(1 2 3 4)"], 4);
        let text = character_table(&s3).unwrap().export();
        let err = CharacterTable::import(&text, &c4).unwrap_err();
        assert!(matches!(err, Error::Input(_)), "{err}");
    }

    #[test]
    fn prime_independence_small() {
        let g = group(&["(1 2)"], 2);
        let a = character_table_with_prime(&g, 5).unwrap();
        let b = character_table_with_prime(&g, 7).unwrap();
        assert_eq!(a.degrees(), b.degrees());
        for i in 0..a.k() {
            for j in 0..a.k() {
                assert_eq!(a.value(i, j), b.value(i, j));
            }
        }
    }

    #[test]
    fn invalid_prime_is_an_input_error() {
        let g = group(&["(1 2)", "(1 2 3)"], 3);
        for p in [5, 12, 13] {
            // 5 ≢ 1 (mod 6); 12 is composite; 13 ≡ 1 but 13² > 24 holds, so
            // 13 is actually fine — expect success there.
            let result = character_table_with_prime(&g, p);
            if p == 13 {
                result.unwrap().verify().unwrap();
            } else {
                assert!(matches!(result.unwrap_err(), Error::Input(_)));
            }
        }
    }

    #[test]
    fn column_sum_corollary() {
        // Σ_i degree_i·χ_i(g) = 0 for every non-identity class (column
        // orthogonality against the identity column).
        let g = group(&["(1 2)", "(1 2 3 4)"], 4);
        let t = character_table(&g).unwrap();
        t.verify().unwrap();
        let f = t.field();
        for j in 1..t.k() {
            let mut sum = f.zero();
            for i in 0..t.k() {
                sum = f.add(&sum, &f.scale(t.value(i, j), t.degrees()[i] as i64));
            }
            assert!(sum.is_zero(), "class {j}");
        }
    }

    #[test]
    fn alternating5_degrees() {
        // A5 has degrees {1, 3, 3, 4, 5} and exponent 30.
        let g = group(&["(1 2 3)", "(1 2 4)", "(1 2 5)"], 5);
        assert_eq!(g.order(), 60);
        let t = character_table(&g).unwrap();
        t.verify().unwrap();
        assert_eq!(degree_multiset(&t), vec![1, 3, 3, 4, 5]);
        assert_eq!(t.exponent(), 30);
        // Golden-ratio values on the 5-classes are genuinely irrational.
        let irrational = (0..t.k())
            .flat_map(|i| (0..t.k()).map(move |j| (i, j)))
            .filter(|&(i, j)| t.value(i, j).as_integer().is_none())
            .count();
        assert!(irrational > 0);
    }
}
