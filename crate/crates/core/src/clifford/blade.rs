//! The algebra of blades `e_A`, `A ⊂ {1..m}`, with `e_i² = κ` for all `i`,
//! realized on itself by left and right multiplication.

use crate::linalg::RationalMatrix;
use crate::rational::Rational;

/// Subsets of `{0..m}` as bitmasks, ordered by size then lexicographically.
pub fn graded_lex_subsets(m: usize) -> Vec<u32> {
    let mut all: Vec<u32> = (0..(1u32 << m)).collect();
    all.sort_by_key(|&mask| {
        let idx: Vec<u32> = (0..m as u32).filter(|i| mask & (1 << i) != 0).collect();
        (idx.len(), idx)
    });
    all
}

/// Number of elements of `mask` strictly below `i`.
pub fn count_below(mask: u32, i: usize) -> u32 {
    (mask & ((1u32 << i) - 1)).count_ones()
}

#[derive(Debug, Clone)]
pub struct BladeAlgebra {
    m: usize,
    square: i64,
    order: Vec<u32>,
    position: Vec<usize>,
}

impl BladeAlgebra {
    /// `square` is the value of `e_i²`: −1 for `Cℓ_m`, +1 for `Cℓ_{0,m}`.
    pub fn new(m: usize, square: i64) -> Self {
        assert!(square == 1 || square == -1);
        let order = graded_lex_subsets(m);
        let mut position = vec![0; order.len()];
        for (i, &mask) in order.iter().enumerate() {
            position[mask as usize] = i;
        }
        Self {
            m,
            square,
            order,
            position,
        }
    }

    pub fn dim(&self) -> usize {
        self.order.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `e_A e_B = sign · e_{A Δ B}`.
    pub fn product(&self, a: u32, b: u32) -> (i64, u32) {
        let mut sign = 1i64;
        for i in 0..self.m {
            if b & (1 << i) != 0 {
                // move e_i leftwards past the elements of A above i
                let above = (a >> (i + 1)).count_ones();
                if above % 2 == 1 {
                    sign = -sign;
                }
                if a & (1 << i) != 0 {
                    sign *= self.square;
                }
            }
        }
        (sign, a ^ b)
    }

    fn operator(&self, f: impl Fn(u32) -> (i64, u32)) -> RationalMatrix {
        let d = self.dim();
        let mut out = RationalMatrix::zeros(d, d);
        for (col, &mask) in self.order.iter().enumerate() {
            let (sign, image) = f(mask);
            if sign != 0 {
                out.set(self.position[image as usize], col, Rational::from_int(sign));
            }
        }
        out
    }

    /// Left multiplication by `e_A`.
    pub fn left(&self, a: u32) -> RationalMatrix {
        self.operator(|s| self.product(a, s))
    }

    /// Right multiplication by `e_A`.
    pub fn right(&self, a: u32) -> RationalMatrix {
        self.operator(|s| self.product(s, a))
    }

    /// Parity involution α.
    pub fn alpha(&self) -> RationalMatrix {
        self.operator(|s| (if s.count_ones() % 2 == 0 { 1 } else { -1 }, s))
    }

    pub fn generator(&self, i: usize) -> u32 {
        1 << i
    }

    pub fn volume(&self) -> u32 {
        ((1u64 << self.m) - 1) as u32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_square_to_kappa() {
        for square in [-1, 1] {
            let alg = BladeAlgebra::new(3, square);
            for i in 0..3 {
                let l = alg.left(alg.generator(i));
                assert_eq!(
                    &l * &l,
                    RationalMatrix::identity(8).scale(&Rational::from_int(square))
                );
            }
        }
    }

    #[test]
    fn left_and_right_commute_and_associate() {
        let alg = BladeAlgebra::new(3, -1);
        for a in 0..8u32 {
            for b in 0..8u32 {
                assert_eq!(&alg.left(a) * &alg.right(b), &alg.right(b) * &alg.left(a));
                let (s, ab) = alg.product(a, b);
                assert_eq!(
                    &alg.left(a) * &alg.left(b),
                    alg.left(ab).scale(&Rational::from_int(s))
                );
            }
        }
    }

    #[test]
    fn ordering_is_graded_lex() {
        assert_eq!(graded_lex_subsets(3), vec![0, 1, 2, 4, 3, 5, 6, 7]);
    }
}
