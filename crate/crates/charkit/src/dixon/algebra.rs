//! Class-algebra structure constants a[i][j][l]: the number of ways the
//! fixed representative of class l factors as (element of C_i)·(element of
//! C_j). These are the matrix entries Dixon's method diagonalizes.

use crate::dixon::modmat::ModMat;
use crate::dixon::modp::Fp;
use crate::permgroup::{ClassSet, PermGroup};

/// The full k×k×k tensor of structure constants.
pub struct ClassAlgebra {
    k: usize,
    constants: Vec<u32>,
}

impl ClassAlgebra {
    pub fn k(&self) -> usize {
        self.k
    }

    /// a[i][j][l] = #{x ∈ C_i : x⁻¹·g_l ∈ C_j}.
    #[inline]
    pub fn a(&self, i: usize, j: usize, l: usize) -> u32 {
        self.constants[(i * self.k + j) * self.k + l]
    }

    /// The class matrix M_i over F_p, with (M_i)[j][l] = a[i][j][l]. Its
    /// common eigenvectors are (s_l·χ(g_l)/χ(1))_l with eigenvalue
    /// s_i·χ(g_i)/χ(1).
    pub fn class_matrix(&self, i: usize, fp: &Fp) -> ModMat {
        let mut m = ModMat::zeros(self.k, self.k);
        for j in 0..self.k {
            for l in 0..self.k {
                m.set(j, l, self.a(i, j, l) as u64 % fp.p);
            }
        }
        m
    }
}

/// Computes all structure constants in O(k·|G|) products: for each x in
/// each class C_i and each class representative g_l, the element x⁻¹·g_l
/// lands in exactly one class C_j and contributes to a[i][j][l].
pub fn class_algebra_constants(group: &PermGroup, classes: &ClassSet) -> ClassAlgebra {
    let k = classes.len();
    let mut constants = vec![0u32; k * k * k];
    for i in 0..k {
        for &x in &classes.class(i).member_ids {
            let x_inv = group.inverse_id(x);
            for l in 0..k {
                let g_l = classes.class(l).representative_id;
                let y = group.mul_ids(x_inv, g_l);
                let j = classes.class_of(y);
                constants[(i * k + j) * k + l] += 1;
            }
        }
    }
    ClassAlgebra { k, constants }
}
