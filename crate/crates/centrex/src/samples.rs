//! Catalog of concrete groups, algebras and precrossed modules, plus
//! seeded random generators used by the property and acceptance suites.

pub mod groups {
    use std::sync::Arc;

    use crate::fingrp::FiniteGroup;

    fn cycle_notation(p: &[usize]) -> String {
        let n = p.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || p[start] == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut x = start;
            loop {
                seen[x] = true;
                out.push_str(&x.to_string());
                x = p[x];
                if x == start {
                    break;
                }
                out.push(' ');
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push('e');
        }
        out
    }

    pub fn cyclic(n: usize) -> Arc<FiniteGroup> {
        assert!(n > 0, "cyclic group needs positive order");
        let table: Vec<Vec<usize>> =
            (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let names = Some((0..n).map(|x| x.to_string()).collect());
        FiniteGroup::from_table(table, names).expect("cyclic table is a group")
    }

    pub fn klein4() -> Arc<FiniteGroup> {
        let (p, _, _) = FiniteGroup::direct_product(&cyclic(2), &cyclic(2));
        p
    }

    pub fn symmetric(n: usize) -> Arc<FiniteGroup> {
        assert!((1..=5).contains(&n), "symmetric group bounded at degree 5");
        let mut gens = Vec::new();
        if n >= 2 {
            let mut t: Vec<usize> = (0..n).collect();
            t.swap(0, 1);
            gens.push(t);
            let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
            gens.push(cycle);
        }
        FiniteGroup::from_permutations(n, &gens, Some(&cycle_notation))
    }

    pub fn alternating4() -> Arc<FiniteGroup> {
        let gens = vec![vec![1, 2, 0, 3], vec![1, 0, 3, 2]];
        FiniteGroup::from_permutations(4, &gens, Some(&cycle_notation))
    }

    pub fn dihedral(n: usize) -> Arc<FiniteGroup> {
        assert!(n >= 3, "dihedral group on at least a triangle");
        let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        FiniteGroup::from_permutations(n, &[rot, refl], Some(&cycle_notation))
    }

    pub fn quaternion8() -> Arc<FiniteGroup> {
        // Elements 1, -1, i, -i, j, -j, k, -k encoded as (axis, sign).
        let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"];
        let axis = |x: usize| x / 2;
        let neg = |x: usize| x % 2 == 1;
        let pack = |a: usize, n: bool| 2 * a + usize::from(n);
        let mul = |x: usize, y: usize| {
            let (ax, ay) = (axis(x), axis(y));
            let mut n = neg(x) ^ neg(y);
            let a = match (ax, ay) {
                (0, a) | (a, 0) => a,
                (a, b) if a == b => {
                    n = !n;
                    0
                }
                // i j = k, j k = i, k i = j and the reversed products flip sign.
                (1, 2) => 3,
                (2, 3) => 1,
                (3, 1) => 2,
                (2, 1) => {
                    n = !n;
                    3
                }
                (3, 2) => {
                    n = !n;
                    1
                }
                (1, 3) => {
                    n = !n;
                    2
                }
                _ => unreachable!(),
            };
            pack(a, n)
        };
        let table: Vec<Vec<usize>> =
            (0..8).map(|x| (0..8).map(|y| mul(x, y)).collect()).collect();
        FiniteGroup::from_table(table, Some(names.iter().map(|s| s.to_string()).collect()))
            .expect("quaternion table is a group")
    }
}

pub mod algebras {
    use std::sync::Arc;

    use crate::leibniz::LeibnizAlgebra;
    use crate::linalg::{RatMatrix, Rational};

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    /// Simple Lie algebra on h, e, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
    pub fn sl2() -> Arc<LeibnizAlgebra> {
        LeibnizAlgebra::from_entries(
            3,
            &[
                (0, 1, vec![(1, r(2))]),
                (1, 0, vec![(1, r(-2))]),
                (0, 2, vec![(2, r(-2))]),
                (2, 0, vec![(2, r(2))]),
                (1, 2, vec![(0, r(1))]),
                (2, 1, vec![(0, r(-1))]),
            ],
            Some(vec!["h".into(), "e".into(), "f".into()]),
        )
        .expect("sl2 table is well shaped")
    }

    /// Heisenberg algebra on x, y, z with [x,y] = z central.
    pub fn heisenberg3() -> Arc<LeibnizAlgebra> {
        LeibnizAlgebra::from_entries(
            3,
            &[(0, 1, vec![(2, r(1))]), (1, 0, vec![(2, r(-1))])],
            Some(vec!["x".into(), "y".into(), "z".into()]),
        )
        .expect("heisenberg table is well shaped")
    }

    /// Smallest non Lie Leibniz algebra: [e0, e0] = e1.
    pub fn ell2() -> Arc<LeibnizAlgebra> {
        LeibnizAlgebra::from_entries(2, &[(0, 0, vec![(1, r(1))])], None)
            .expect("table is well shaped")
    }

    /// Non abelian two dimensional Lie algebra: [e0, e1] = e1.
    pub fn r2() -> Arc<LeibnizAlgebra> {
        LeibnizAlgebra::from_entries(
            2,
            &[(0, 1, vec![(1, r(1))]), (1, 0, vec![(1, r(-1))])],
            None,
        )
        .expect("table is well shaped")
    }

    /// sl2 tensored with the dual numbers: basis h, e, f, ht, et, ft where
    /// `[a t^i, b t^j] = [a,b] t^{i+j}` and `t^2 = 0`.
    pub fn sl2_current2() -> Arc<LeibnizAlgebra> {
        let g = sl2();
        let dim = 6;
        let mut table = vec![vec![vec![Rational::zero(); dim]; dim]; dim];
        for i in 0..3 {
            for j in 0..3 {
                let v = g.bracket_basis(i, j);
                for (di, dj) in [(0, 0), (0, 3), (3, 0)] {
                    let shift = di + dj;
                    for k in 0..3 {
                        table[i + di][j + dj][k + shift] = v[k].clone();
                    }
                }
            }
        }
        let names = ["h", "e", "f", "ht", "et", "ft"];
        LeibnizAlgebra::new(dim, table, Some(names.iter().map(|s| s.to_string()).collect()))
            .expect("current algebra table is well shaped")
    }

    /// Leibniz algebra on `g + M` for a left module action `rho`:
    /// `[(x,m),(y,n)] = ([x,y], -rho(y) m)`.  Not Lie unless the action
    /// vanishes; Leibniz whenever `rho` preserves brackets.
    pub fn demisemidirect(g: &Arc<LeibnizAlgebra>, rho: &[RatMatrix]) -> Arc<LeibnizAlgebra> {
        let d = g.dim();
        assert_eq!(rho.len(), d, "one action matrix per basis vector");
        let m = rho.first().map_or(0, RatMatrix::nrows);
        let dim = d + m;
        let mut table = vec![vec![vec![Rational::zero(); dim]; dim]; dim];
        for i in 0..d {
            for j in 0..d {
                let v = g.bracket_basis(i, j);
                for k in 0..d {
                    table[i][j][k] = v[k].clone();
                }
            }
        }
        for a in 0..m {
            for j in 0..d {
                let col = rho[j].col(a);
                for k in 0..m {
                    table[d + a][j][d + k] = -&col[k];
                }
            }
        }
        LeibnizAlgebra::new(dim, table, None).expect("demisemidirect table is well shaped")
    }

    /// Perfect non Lie Leibniz algebra: sl2 acting on itself.
    pub fn demi_sl2_adjoint() -> Arc<LeibnizAlgebra> {
        let g = sl2();
        let rho: Vec<RatMatrix> = (0..3).map(|i| g.left_mult(i)).collect();
        demisemidirect(&g, &rho)
    }

    /// Three dimensional non Lie Leibniz algebra built on r2.
    pub fn demi_r2_line() -> Arc<LeibnizAlgebra> {
        let g = r2();
        let rho = vec![
            RatMatrix::from_int_rows(&[&[1]], 1),
            RatMatrix::from_int_rows(&[&[0]], 1),
        ];
        demisemidirect(&g, &rho)
    }

    /// Lie semidirect sum `g + M` with `[(x,m),(y,n)] = ([x,y], rho(x)n - rho(y)m)`.
    pub fn lie_semidirect(g: &Arc<LeibnizAlgebra>, rho: &[RatMatrix]) -> Arc<LeibnizAlgebra> {
        let d = g.dim();
        assert_eq!(rho.len(), d, "one action matrix per basis vector");
        let m = rho.first().map_or(0, RatMatrix::nrows);
        let dim = d + m;
        let mut table = vec![vec![vec![Rational::zero(); dim]; dim]; dim];
        for i in 0..d {
            for j in 0..d {
                let v = g.bracket_basis(i, j);
                for k in 0..d {
                    table[i][j][k] = v[k].clone();
                }
            }
        }
        for i in 0..d {
            for b in 0..m {
                let col = rho[i].col(b);
                for k in 0..m {
                    table[i][d + b][d + k] = col[k].clone();
                    table[d + b][i][d + k] = -&col[k];
                }
            }
        }
        LeibnizAlgebra::new(dim, table, None).expect("semidirect table is well shaped")
    }

    /// Natural two dimensional representation of sl2.
    pub fn sl2_natural_rep() -> Vec<RatMatrix> {
        vec![
            RatMatrix::from_int_rows(&[&[1, 0], &[0, -1]], 2),
            RatMatrix::from_int_rows(&[&[0, 1], &[0, 0]], 2),
            RatMatrix::from_int_rows(&[&[0, 0], &[1, 0]], 2),
        ]
    }
}

pub mod pxms {
    use std::collections::HashMap;
    use std::sync::Arc;

    use crate::fingrp::{FiniteGroup, GroupHom, Subgroup};
    use crate::xmod::PrecrossedModule;

    /// `(G, G, id)` with the conjugation action.  Always crossed.
    pub fn conjugation(g: &Arc<FiniteGroup>) -> Arc<PrecrossedModule> {
        let n = g.order();
        let action = (0..n).map(|a| (0..n).map(|t| g.conj(a, t)).collect()).collect();
        PrecrossedModule::new(Arc::clone(g), Arc::clone(g), GroupHom::identity(g), action)
            .expect("conjugation module is valid")
    }

    /// `(T, 1, trivial)`.  Precrossed always, crossed exactly when `T` is
    /// abelian.
    pub fn discrete(t: &Arc<FiniteGroup>) -> Arc<PrecrossedModule> {
        let one = FiniteGroup::trivial_group();
        let action = vec![(0..t.order()).collect()];
        PrecrossedModule::new(
            Arc::clone(t),
            Arc::clone(&one),
            GroupHom::to_trivial(t, &one),
            action,
        )
        .expect("discrete module is valid")
    }

    /// Normal subgroup inclusion `(N, G, incl)` with conjugation.  Always
    /// crossed.
    pub fn inclusion(g: &Arc<FiniteGroup>, n: &Subgroup) -> Arc<PrecrossedModule> {
        let (ng, incl) = g.embed_subgroup(n).expect("inclusion fixture needs a subgroup");
        let pos: HashMap<usize, usize> =
            n.elements().iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let action = (0..g.order())
            .map(|a| {
                n.elements()
                    .iter()
                    .map(|&t| *pos.get(&g.conj(a, t)).expect("subgroup must be normal"))
                    .collect()
            })
            .collect();
        PrecrossedModule::new(ng, Arc::clone(g), incl, action)
            .expect("inclusion module is valid")
    }

    /// `(T, G, trivial boundary)` with a supplied action: a `G` module
    /// structure on `T`.  Crossed exactly when `T` is abelian.
    pub fn group_module(
        t: &Arc<FiniteGroup>,
        g: &Arc<FiniteGroup>,
        action: Vec<Vec<usize>>,
    ) -> Arc<PrecrossedModule> {
        PrecrossedModule::new(Arc::clone(t), Arc::clone(g), GroupHom::to_trivial(t, g), action)
            .expect("module fixture is valid")
    }

    /// C3 with C2 acting by inversion.
    pub fn inverted_c3() -> Arc<PrecrossedModule> {
        group_module(
            &super::groups::cyclic(3),
            &super::groups::cyclic(2),
            vec![vec![0, 1, 2], vec![0, 2, 1]],
        )
    }
}

/// Seeded generators of random surjections in each setting.  Sizes stay
/// small enough for exhaustive checks: groups of order at most 24,
/// algebras of dimension at most 6, precrossed modules with both groups
/// of order at most 12.
pub mod random {
    use std::sync::Arc;

    use rand::Rng;

    use crate::fingrp::{FiniteGroup, GroupHom};
    use crate::leibniz::{direct_sum, AlgebraHom, LeibnizAlgebra};
    use crate::linalg::{Rational, Subspace};
    use crate::xmod::XModHom;

    use super::{algebras, groups, pxms};

    fn group_pool(rng: &mut impl Rng) -> Arc<FiniteGroup> {
        match rng.random_range(0..10u32) {
            0 => groups::cyclic(rng.random_range(2..=12)),
            1 => groups::klein4(),
            2 => groups::symmetric(3),
            3 => groups::symmetric(4),
            4 => groups::alternating4(),
            5 => groups::dihedral(rng.random_range(3..=6)),
            6 => groups::quaternion8(),
            7 => {
                let a = groups::cyclic(rng.random_range(2..=4));
                let b = groups::cyclic(rng.random_range(2..=4));
                FiniteGroup::direct_product(&a, &b).0
            }
            8 => FiniteGroup::direct_product(&groups::cyclic(2), &groups::symmetric(3)).0,
            _ => FiniteGroup::direct_product(&groups::cyclic(2), &groups::dihedral(3)).0,
        }
    }

    /// Surjective group morphism with domain of order at most 24: a
    /// pool group modulo the normal closure of a few random elements.
    pub fn group_surjection(rng: &mut impl Rng) -> GroupHom {
        let g = group_pool(rng);
        let count = rng.random_range(0..=2usize);
        let seeds: Vec<usize> =
            (0..count).map(|_| rng.random_range(0..g.order())).collect();
        let n = g.normal_closure(&seeds);
        let (_, pi) = g.quotient(&n).expect("normal closure quotient");
        pi
    }

    fn small_vec(rng: &mut impl Rng, dim: usize) -> Vec<Rational> {
        (0..dim).map(|_| Rational::from_int(rng.random_range(-2..=2i64))).collect()
    }

    fn ideal_quotient(rng: &mut impl Rng, g: &Arc<LeibnizAlgebra>) -> AlgebraHom {
        let count = rng.random_range(0..=2usize);
        let rows: Vec<Vec<Rational>> = (0..count).map(|_| small_vec(rng, g.dim())).collect();
        let seed = Subspace::from_rows(g.dim(), &rows).expect("rows match the dimension");
        let ideal = g.ideal_closure(&seed);
        let (_, pi) = g.quotient(&ideal).expect("ideal quotient");
        pi
    }

    fn lie_pool(rng: &mut impl Rng) -> Arc<LeibnizAlgebra> {
        match rng.random_range(0..8u32) {
            0 => LeibnizAlgebra::abelian(rng.random_range(1..=4)),
            1 => algebras::heisenberg3(),
            2 => algebras::r2(),
            3 => algebras::sl2(),
            4 => direct_sum(&algebras::sl2(), &LeibnizAlgebra::abelian(rng.random_range(1..=3)))
                .algebra,
            5 => direct_sum(&algebras::r2(), &algebras::r2()).algebra,
            6 => algebras::lie_semidirect(&algebras::sl2(), &algebras::sl2_natural_rep()),
            _ => direct_sum(&algebras::heisenberg3(), &algebras::r2()).algebra,
        }
    }

    /// Surjective Lie algebra morphism with domain of dimension at most
    /// 6: a pool algebra modulo the ideal closure of random vectors.
    pub fn lie_surjection(rng: &mut impl Rng) -> AlgebraHom {
        let g = lie_pool(rng);
        ideal_quotient(rng, &g)
    }

    fn leibniz_pool(rng: &mut impl Rng) -> Arc<LeibnizAlgebra> {
        match rng.random_range(0..8u32) {
            0 => algebras::ell2(),
            1 => algebras::demi_r2_line(),
            2 => algebras::demisemidirect(&algebras::sl2(), &algebras::sl2_natural_rep()),
            3 => direct_sum(&algebras::ell2(), &LeibnizAlgebra::abelian(rng.random_range(1..=2)))
                .algebra,
            4 => direct_sum(&algebras::ell2(), &algebras::ell2()).algebra,
            5 => direct_sum(&algebras::demi_r2_line(), &algebras::ell2()).algebra,
            6 => algebras::r2(),
            _ => algebras::heisenberg3(),
        }
    }

    /// Surjective Leibniz algebra morphism with domain of dimension at
    /// most 5; the pool mixes genuinely non Lie algebras with Lie ones.
    pub fn leibniz_surjection(rng: &mut impl Rng) -> AlgebraHom {
        let g = leibniz_pool(rng);
        ideal_quotient(rng, &g)
    }

    /// Surjective morphism of precrossed modules with both groups of
    /// order at most 12: a pool module modulo the normal subobject
    /// closure of random seeds.
    pub fn pxm_surjection(rng: &mut impl Rng) -> XModHom {
        let x = match rng.random_range(0..8u32) {
            0 => pxms::conjugation(&groups::symmetric(3)),
            1 => pxms::conjugation(&groups::dihedral(4)),
            2 => pxms::conjugation(&groups::quaternion8()),
            3 => pxms::discrete(&groups::symmetric(3)),
            4 => pxms::discrete(&groups::cyclic(rng.random_range(2..=6))),
            5 => {
                let s3 = groups::symmetric(3);
                let a3 = s3.derived_subgroup();
                pxms::inclusion(&s3, &a3)
            }
            6 => pxms::inverted_c3(),
            _ => pxms::group_module(
                &groups::cyclic(4),
                &groups::cyclic(2),
                vec![vec![0, 1, 2, 3], vec![0, 3, 2, 1]],
            ),
        };
        let t_count = rng.random_range(0..=1usize);
        let g_count = rng.random_range(0..=1usize);
        let t_seeds: Vec<usize> =
            (0..t_count).map(|_| rng.random_range(0..x.top().order())).collect();
        let g_seeds: Vec<usize> =
            (0..g_count).map(|_| rng.random_range(0..x.base().order())).collect();
        let s = x.normal_sub_closure(&t_seeds, &g_seeds);
        let (_, pi) = x.quotient(&s).expect("normal subobject quotient");
        pi
    }
}
