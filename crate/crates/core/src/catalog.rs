//! Standard small groups as permutation groups.

use crate::group::{FiniteGroup, Permutation};

fn perm(images: Vec<usize>) -> Permutation {
    Permutation::new(images).expect("catalog permutation")
}

fn build(degree: usize, gens: Vec<Permutation>) -> FiniteGroup {
    FiniteGroup::from_generators(degree, &gens).expect("catalog group")
}

pub fn trivial() -> FiniteGroup {
    build(1, vec![])
}

/// `C_n` acting regularly on `n` points.
pub fn cyclic(n: usize) -> FiniteGroup {
    build(n, vec![perm((0..n).map(|i| (i + 1) % n).collect())])
}

/// `C_2 × C_2` on four points.
pub fn klein_four() -> FiniteGroup {
    build(4, vec![perm(vec![1, 0, 3, 2]), perm(vec![2, 3, 0, 1])])
}

/// `(C_2)^k` on `2k` points.
pub fn elementary_abelian_2(k: usize) -> FiniteGroup {
    let gens = (0..k)
        .map(|i| {
            let mut im: Vec<usize> = (0..2 * k).collect();
            im.swap(2 * i, 2 * i + 1);
            perm(im)
        })
        .collect();
    build(2 * k, gens)
}

/// `C_a × C_b` on `a + b` points.
pub fn cyclic_product(a: usize, b: usize) -> FiniteGroup {
    let r1: Vec<usize> = (0..a).map(|i| (i + 1) % a).chain(a..a + b).collect();
    let r2: Vec<usize> = (0..a).chain((0..b).map(|i| a + (i + 1) % b)).collect();
    build(a + b, vec![perm(r1), perm(r2)])
}

/// Dihedral group of order `2n` acting on the vertices of an `n`-gon.
pub fn dihedral(n: usize) -> FiniteGroup {
    let rotation = perm((0..n).map(|i| (i + 1) % n).collect());
    let reflection = perm((0..n).map(|i| (n - i) % n).collect());
    build(n, vec![rotation, reflection])
}

pub fn symmetric(n: usize) -> FiniteGroup {
    if n < 2 {
        return build(n.max(1), vec![]);
    }
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    let cycle = perm((0..n).map(|i| (i + 1) % n).collect());
    build(n, vec![perm(swap), cycle])
}

pub fn alternating(n: usize) -> FiniteGroup {
    if n < 3 {
        return build(n.max(1), vec![]);
    }
    let gens = (2..n)
        .map(|k| {
            let mut im: Vec<usize> = (0..n).collect();
            im[0] = 1;
            im[1] = k;
            im[k] = 0;
            perm(im)
        })
        .collect();
    build(n, gens)
}

/// The quaternion group `Q_8` in its regular representation, generated by
/// left multiplication by `i` and `j`. Point `4s + u` is `(-1)^s · unit_u`
/// with units ordered `1, i, j, k`.
pub fn quaternion() -> FiniteGroup {
    // unit products u*v = (sign, unit) for u, v in {1, i, j, k}
    const MUL: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let left = |u: usize| {
        perm(
            (0..8)
                .map(|p| {
                    let (s, v) = (p / 4, p % 4);
                    let (s2, w) = MUL[u][v];
                    4 * ((s + s2) % 2) + w
                })
                .collect(),
        )
    };
    build(8, vec![left(1), left(2)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(trivial().order(), 1);
        assert_eq!(cyclic(5).order(), 5);
        assert_eq!(klein_four().order(), 4);
        assert_eq!(elementary_abelian_2(3).order(), 8);
        assert_eq!(cyclic_product(4, 2).order(), 8);
        assert_eq!(dihedral(4).order(), 8);
        assert_eq!(dihedral(6).order(), 12);
        assert_eq!(symmetric(3).order(), 6);
        assert_eq!(symmetric(4).order(), 24);
        assert_eq!(alternating(4).order(), 12);
        assert_eq!(quaternion().order(), 8);
    }

    #[test]
    fn quaternion_is_not_dihedral() {
        let q = quaternion();
        let involutions = (0..8).filter(|&g| q.element_order(g) == 2).count();
        assert_eq!(involutions, 1);
        assert!(!q.is_abelian());
    }
}
