//! Spectra and energies of normal Cayley graphs, computed two independent
//! ways: exactly from the character table (η_χ = (1/χ(1))·Σ_{a∈S} χ(a),
//! with multiplicity χ(1)²) and numerically from the adjacency matrix.

use nalgebra::DMatrix;

use crate::cyclotomic::Cyclotomic;
use crate::dixon::CharacterTable;
use crate::error::{Error, Result};
use crate::permgroup::{ClassSet, PermGroup};

/// Largest group order the brute-force eigensolver accepts by default.
pub const DEFAULT_ORACLE_CAP: u64 = 2000;

/// A connection set S for a normal Cayley graph Cay(G, S): a union of
/// conjugacy classes that excludes the identity and is inverse-closed.
/// Being a union of classes, S is automatically closed under conjugation.
#[derive(Clone, Debug)]
pub struct ConnectionSet {
    indices: Vec<usize>,
    element_ids: Vec<usize>,
    size: u64,
}

impl ConnectionSet {
    /// Builds S from conjugacy-class indices, validating the Cayley-graph
    /// requirements: non-empty, no identity class, inverse-closed as a set.
    pub fn new(classes: &ClassSet, class_indices: &[usize]) -> Result<ConnectionSet> {
        let mut indices = class_indices.to_vec();
        indices.sort_unstable();
        indices.dedup();
        if indices.is_empty() {
            return Err(Error::Input(
                "connection set must contain at least one conjugacy class".into(),
            ));
        }
        for &i in &indices {
            if i >= classes.len() {
                return Err(Error::Input(format!(
                    "class index {i} is out of range; the group has {} classes",
                    classes.len()
                )));
            }
            if i == 0 {
                return Err(Error::Input(
                    "connection set may not contain the identity class 1a".into(),
                ));
            }
            let inverse = classes.class(i).inverse_class();
            if !indices.contains(&inverse) {
                return Err(Error::Input(format!(
                    "connection set is not inverse-closed: class {} needs its inverse class {}",
                    classes.label(i),
                    classes.label(inverse)
                )));
            }
        }
        let mut element_ids = Vec::new();
        for &i in &indices {
            element_ids.extend_from_slice(&classes.class(i).member_ids);
        }
        let size = element_ids.len() as u64;
        Ok(ConnectionSet {
            indices,
            element_ids,
            size,
        })
    }

    /// Sorted, deduplicated class indices.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Element ids of every member of S.
    pub fn element_ids(&self) -> &[usize] {
        &self.element_ids
    }

    /// |S|, the regularity degree of the Cayley graph.
    pub fn size(&self) -> u64 {
        self.size
    }
}

/// One spectrum entry: the eigenvalue η_χ contributed by one irreducible
/// character, with multiplicity χ(1)².
#[derive(Clone, Debug)]
pub struct Eigenvalue {
    /// Exact value (verified real: fixed by complex conjugation).
    pub value: Cyclotomic,
    /// Float embedding of `value`.
    pub approx: f64,
    /// χ(1)².
    pub multiplicity: u64,
    /// Row index of the source character in the table.
    pub character: usize,
}

/// Graph energy ℰ(Γ) = Σ|λ_i|, exact when every eigenvalue is a rational
/// integer (always the case when S is a union of rational classes).
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Energy {
    Exact(i128),
    Approx { value: f64, error_bound: f64 },
}

impl Energy {
    pub fn as_f64(&self) -> f64 {
        match *self {
            Energy::Exact(v) => v as f64,
            Energy::Approx { value, .. } => value,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Energy::Exact(_))
    }
}

/// The full spectrum of Cay(G, S) with derived quantities.
#[derive(Clone, Debug)]
pub struct SpectrumReport {
    /// |G| = number of vertices = Σ multiplicities.
    pub order: u64,
    /// |S| = regularity degree = largest eigenvalue.
    pub degree: u64,
    /// Labels of the connection-set classes.
    pub class_labels: Vec<String>,
    /// One entry per character, in canonical character order.
    pub eigenvalues: Vec<Eigenvalue>,
    pub energy: Energy,
    /// Whether some eigenvalue is exactly zero.
    pub singular: bool,
    /// Whether every eigenvalue is a rational integer.
    pub exact: bool,
    /// McClelland-type bound |G|·√|S|.
    pub mcclelland_bound: f64,
}

/// Exact spectrum of the normal Cayley graph Cay(G, S) from the character
/// table: η_χ = (1/χ(1))·Σ over classes of S of size·χ(rep), each division
/// exact over the cyclotomic integers, each value verified real; the
/// multiset satisfies the regular-graph identities or the computation is
/// rejected.
pub fn normal_cayley_spectrum(table: &CharacterTable, s: &ConnectionSet) -> Result<SpectrumReport> {
    let classes = table.classes();
    let field = table.field();
    let k = table.k();

    let mut eigenvalues = Vec::with_capacity(k);
    for i in 0..k {
        let mut sum = field.zero();
        for &j in s.indices() {
            sum = field.add(
                &sum,
                &field.scale(table.value(i, j), classes.class(j).size as i64),
            );
        }
        let degree = table.degrees()[i];
        let value = field.div_exact(&sum, degree as i64).map_err(|_| {
            Error::Internal(format!(
                "class sum for character {i} is not divisible by its degree {degree}; \
                 the eigenvalue would not be an algebraic integer"
            ))
        })?;
        if field.conj(&value) != value {
            return Err(Error::Internal(format!(
                "eigenvalue for character {i} is not real, impossible for an \
                 inverse-closed connection set"
            )));
        }
        let approx = field.embed(&value).re;
        if approx.abs() > s.size() as f64 + 1e-9 {
            return Err(Error::Internal(format!(
                "eigenvalue {approx} exceeds the regularity degree {}",
                s.size()
            )));
        }
        eigenvalues.push(Eigenvalue {
            value,
            approx,
            multiplicity: degree * degree,
            character: i,
        });
    }

    // Regular-graph identities, all exact: the trivial character contributes
    // the top eigenvalue |S|; multiplicities cover every vertex; the trace
    // vanishes because 1 ∉ S.
    if eigenvalues[0].value != field.integer(s.size() as i64) {
        return Err(Error::Internal(
            "trivial character did not produce the eigenvalue |S|".into(),
        ));
    }
    if eigenvalues.iter().map(|e| e.multiplicity).sum::<u64>() != table.order() {
        return Err(Error::Internal(
            "eigenvalue multiplicities do not sum to the group order".into(),
        ));
    }
    let mut trace = field.zero();
    for e in &eigenvalues {
        trace = field.add(&trace, &field.scale(&e.value, e.multiplicity as i64));
    }
    if !trace.is_zero() {
        return Err(Error::Internal(
            "spectrum trace is nonzero, impossible with the identity excluded".into(),
        ));
    }

    let exact = eigenvalues.iter().all(|e| e.value.as_integer().is_some());
    let singular = eigenvalues.iter().any(|e| e.value.is_zero());
    let energy = energy_of(&eigenvalues, s.size());
    Ok(SpectrumReport {
        order: table.order(),
        degree: s.size(),
        class_labels: s
            .indices()
            .iter()
            .map(|&i| classes.label(i).to_string())
            .collect(),
        eigenvalues,
        energy,
        singular,
        exact,
        mcclelland_bound: mcclelland_bound(table.order(), s.size()),
    })
}

fn energy_of(eigenvalues: &[Eigenvalue], degree: u64) -> Energy {
    let ints: Option<Vec<i64>> = eigenvalues.iter().map(|e| e.value.as_integer()).collect();
    match ints {
        Some(ints) => Energy::Exact(
            eigenvalues
                .iter()
                .zip(&ints)
                .map(|(e, &v)| e.multiplicity as i128 * (v as i128).abs())
                .sum(),
        ),
        None => Energy::Approx {
            value: eigenvalues
                .iter()
                .map(|e| e.multiplicity as f64 * e.approx.abs())
                .sum(),
            error_bound: eigenvalues.len() as f64 * degree as f64 * 1e-12,
        },
    }
}

/// ℰ(Γ) = Σ |λ_i| over the spectrum with multiplicity: an exact integer
/// when every eigenvalue is a rational integer, otherwise a float with a
/// reported error bound.
pub fn graph_energy(report: &SpectrumReport) -> Energy {
    energy_of(&report.eigenvalues, report.degree)
}

/// Whether zero is an eigenvalue (exact test).
pub fn is_singular(report: &SpectrumReport) -> bool {
    report.eigenvalues.iter().any(|e| e.value.is_zero())
}

/// McClelland-type upper bound |G|·√|S| on the energy of a |S|-regular
/// graph on |G| vertices.
pub fn mcclelland_bound(group_order: u64, set_size: u64) -> f64 {
    group_order as f64 * (set_size as f64).sqrt()
}

/// Independent oracle: build the |G|×|G| adjacency matrix of Cay(G, S)
/// (u ~ v iff v·u⁻¹ ∈ S) and diagonalize it numerically. Returns the
/// eigenvalues sorted ascending.
pub fn brute_force_spectrum(group: &PermGroup, s: &ConnectionSet, cap: u64) -> Result<Vec<f64>> {
    let n = group.order();
    if n > cap {
        return Err(Error::OracleCapExceeded { order: n, cap });
    }
    let n = n as usize;
    let mut adjacency = DMatrix::<f64>::zeros(n, n);
    for u in 0..n {
        for &a in s.element_ids() {
            let v = group.mul_ids(a, u);
            adjacency[(v, u)] = 1.0;
        }
    }
    let mut eigenvalues: Vec<f64> = adjacency
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .collect();
    eigenvalues.sort_by(f64::total_cmp);
    Ok(eigenvalues)
}

/// Expands a character-derived spectrum into a sorted list of |G| floats,
/// comparable entry-by-entry with [`brute_force_spectrum`].
pub fn expand_spectrum(report: &SpectrumReport) -> Vec<f64> {
    let mut out = Vec::with_capacity(report.order as usize);
    for e in &report.eigenvalues {
        out.extend(std::iter::repeat_n(e.approx, e.multiplicity as usize));
    }
    out.sort_by(f64::total_cmp);
    out
}
