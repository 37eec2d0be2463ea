use super::{CoxeterType, Word};
use crate::scalar::CoxeterScalar;

/// The geometric representation in the basis of simple roots.
///
/// `s_i(v) = v - 2B(α_i, v) α_i` with `2B(α_i, α_j) = -2cos(π/m(i,j))`.
#[derive(Debug, Clone)]
pub struct RootSystem<T> {
    rank: usize,
    // row-major 2B(α_i, α_j)
    form: Vec<T>,
}

impl<T: CoxeterScalar> RootSystem<T> {
    pub fn new(ty: CoxeterType) -> Self {
        let rank = usize::from(ty.rank());
        let mut form = Vec::with_capacity(rank * rank);
        for i in 1..=ty.rank() {
            for j in 1..=ty.rank() {
                let m = ty.bond(i, j);
                form.push(if m == 1 {
                    T::one() + T::one()
                } else {
                    -T::two_cos_pi_over(m)
                });
            }
        }
        Self { rank, form }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn simple_root(&self, letter: u8) -> Vec<T> {
        let mut v = vec![T::zero(); self.rank];
        v[usize::from(letter - 1)] = T::one();
        v
    }

    pub fn reflect(&self, letter: u8, v: &mut [T]) {
        let i = usize::from(letter - 1);
        let row = &self.form[i * self.rank..(i + 1) * self.rank];
        let coeff = row
            .iter()
            .zip(v.iter())
            .fold(T::zero(), |acc, (b, x)| acc + b.clone() * x.clone());
        v[i] = v[i].clone() - coeff;
    }

    /// Image of `α_{w_k}` under `s_{w_1} ⋯ s_{w_{k-1}}`, for each `k`.
    /// For a reduced word these are the inversions of `w⁻¹`, all positive.
    pub fn inversion_sequence(&self, w: &Word) -> Vec<Vec<T>> {
        let letters = w.letters();
        (0..letters.len())
            .map(|k| {
                let mut v = self.simple_root(letters[k]);
                for &l in letters[..k].iter().rev() {
                    self.reflect(l, &mut v);
                }
                v
            })
            .collect()
    }

    pub fn is_positive_root(v: &[T]) -> bool {
        v.iter().all(|x| !x.is_negative()) && v.iter().any(|x| x.is_positive())
    }

    /// `w` is reduced iff no prefix sends the next simple root negative.
    pub fn is_reduced(&self, w: &Word) -> bool {
        self.inversion_sequence(w).iter().all(|v| Self::is_positive_root(v))
    }
}
