//! Exact arithmetic kernel: big rationals, sparse multivariate polynomials
//! over fixed variable sets, rational functions, 2x2 matrices, and
//! fraction-free linear solving.

mod linsolve;
mod matrix;
mod poly;
mod rat;
mod ratfunc;

pub use linsolve::{linsolve_fraction_free, LinSolveError};
pub use matrix::{Matrix2, Scalar};
pub use poly::{Mono, Poly, VarSet, MAX_VARS};
pub use rat::Rat;
pub use ratfunc::RatFunc;

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Tiny two-symbol set for kernel tests.
    #[derive(Clone, Copy, PartialEq, Eq, Debug)]
    enum XY {
        X,
        Y,
    }

    impl VarSet for XY {
        const COUNT: usize = 2;
        const ALL: &'static [Self] = &[XY::X, XY::Y];
        fn index(self) -> usize {
            match self {
                XY::X => 0,
                XY::Y => 1,
            }
        }
        fn symbol(self) -> &'static str {
            match self {
                XY::X => "x",
                XY::Y => "y",
            }
        }
    }

    type P = Poly<XY>;
    type R = RatFunc<XY>;

    fn x() -> P {
        P::var(XY::X)
    }

    fn y() -> P {
        P::var(XY::Y)
    }

    #[test]
    fn difference_of_squares() {
        let prod = &(&x() + &P::one()) * &(&x() - &P::one());
        let expect = &x().pow(2) - &P::one();
        assert_eq!(prod, expect);
    }

    #[test]
    fn multiply_by_zero_empties_term_map() {
        let p = &x() * &P::zero();
        assert!(p.is_zero());
        assert_eq!(p.term_count(), 0);
    }

    #[test]
    fn binomial_square() {
        // (xy + 2)^2 = x^2y^2 + 4xy + 4
        let b = &(&x() * &y()) + &P::int(2);
        let sq = b.pow(2);
        let expect = &(&(&x().pow(2) * &y().pow(2)) + &(&P::int(4) * &(&x() * &y()))) + &P::int(4);
        assert_eq!(sq, expect);
    }

    #[test]
    fn partial_derivatives() {
        let p = &x().pow(2) * &y(); // x^2 y
        assert_eq!(p.diff(XY::X), &P::int(2) * &(&x() * &y()));
        assert_eq!(p.diff(XY::Y), x().pow(2));
        assert!(x().pow(2).diff(XY::Y).is_zero());
    }

    #[test]
    fn ratfunc_cancellation_is_zero() {
        // (x^2-1)/(x-1) - (x+1) == 0 by cross-multiplication
        let f = R::new(&x().pow(2) - &P::one(), &x() - &P::one());
        let g = R::from_poly(&x() + &P::one());
        assert!((&f - &g).is_zero());
        // 1/y - 1/x != 0
        let h = &R::new(P::one(), y()) - &R::new(P::one(), x());
        assert!(!h.is_zero());
    }

    #[test]
    fn div_exact_roundtrip() {
        let a = &(&x().pow(3) + &(&x() * &y())) + &P::int(7);
        let b = &(&x() - &y()).pow(2) + &P::one();
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!((&prod + &P::one()).div_exact(&a), None);
    }

    #[test]
    fn residue_at_simple_pole() {
        // f = (x^2 + 1) / ((x - y) * x): residue at x = y is (y^2+1)/y.
        let num = &x().pow(2) + &P::one();
        let den = &(&x() - &y()) * &x();
        let f = R::new(num, den);
        let res = f.residue_simple(XY::X, &y()).unwrap();
        let expect = R::new(&y().pow(2) + &P::one(), y());
        assert!(res.eq_cross(&expect));
        // second-order pole is refused
        let g = R::new(P::one(), (&x() - &y()).pow(2));
        assert!(g.residue_simple(XY::X, &y()).is_none());
    }

    #[test]
    fn matrix_commutator_basics() {
        let m = Matrix2::new(
            R::var(XY::X),
            R::one(),
            R::var(XY::Y),
            -R::var(XY::X),
        );
        assert!(m.commutator(&m).is_zero());
        let n = Matrix2::new(R::one(), R::var(XY::Y), R::zero(), R::var(XY::X));
        assert!(m.commutator(&n).trace().is_zero());
    }

    #[test]
    fn linsolve_identity_and_diagonal() {
        let id = vec![
            vec![R::one(), R::zero()],
            vec![R::zero(), R::one()],
        ];
        let rhs = vec![R::var(XY::X), R::var(XY::Y)];
        let sol = linsolve_fraction_free(&id, &rhs).unwrap();
        assert!(sol[0].eq_cross(&rhs[0]) && sol[1].eq_cross(&rhs[1]));

        // [[x, 0], [0, y]], rhs [2, 1] -> [2/x, 1/y]
        let m = vec![
            vec![R::var(XY::X), R::zero()],
            vec![R::zero(), R::var(XY::Y)],
        ];
        let rhs = vec![R::int(2), R::one()];
        let sol = linsolve_fraction_free(&m, &rhs).unwrap();
        assert!(sol[0].eq_cross(&R::new(P::int(2), x())));
        assert!(sol[1].eq_cross(&R::new(P::one(), y())));
    }

    #[test]
    fn linsolve_singular_and_inconsistent() {
        let m = vec![
            vec![R::one(), R::one()],
            vec![R::one(), R::one()],
        ];
        assert_eq!(
            linsolve_fraction_free(&m, &[R::one(), R::one()]),
            Err(LinSolveError::SingularSystem)
        );
        let over = vec![
            vec![R::one(), R::zero()],
            vec![R::zero(), R::one()],
            vec![R::one(), R::one()],
        ];
        assert_eq!(
            linsolve_fraction_free(&over, &[R::one(), R::one(), R::int(3)]),
            Err(LinSolveError::InconsistentSystem)
        );
        assert!(linsolve_fraction_free(&over, &[R::one(), R::one(), R::int(2)]).is_ok());
    }

    // ---- randomized properties ----

    fn arb_poly() -> impl Strategy<Value = P> {
        proptest::collection::vec(((0u16..4, 0u16..4), -6i64..=6), 0..5).prop_map(|terms| {
            P::from_terms(terms.into_iter().map(|((ex, ey), c)| {
                let mut m = Mono::unit();
                m.0[0] = ex;
                m.0[1] = ey;
                (m, Rat::from_int(c))
            }))
        })
    }

    fn arb_nonzero_poly() -> impl Strategy<Value = P> {
        arb_poly().prop_filter("nonzero", |p| !p.is_zero())
    }

    proptest! {
        #[test]
        fn mul_commutes(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn mixed_partials_commute(a in arb_poly()) {
            prop_assert_eq!(a.diff(XY::X).diff(XY::Y), a.diff(XY::Y).diff(XY::X));
        }

        #[test]
        fn cross_mul_equality_transitive(
            n in arb_poly(),
            d in arb_nonzero_poly(),
            s1 in arb_nonzero_poly(),
            s2 in arb_nonzero_poly(),
        ) {
            // f, f*s1/s1, f*s2/s2 are pairwise equal under cross-multiplication.
            let f = R::new(n, d);
            let g = R::new(f.num() * &s1, f.den() * &s1);
            let h = R::new(f.num() * &s2, f.den() * &s2);
            prop_assert!(f.eq_cross(&g));
            prop_assert!(g.eq_cross(&h));
            prop_assert!(f.eq_cross(&h));
        }

        #[test]
        fn linsolve_matches_cramer(
            entries in proptest::collection::vec(-5i64..=5, 9),
            rv in proptest::collection::vec(-5i64..=5, 3),
        ) {
            // 3x3 integer system with an x-dependent twist on the diagonal.
            let mut m: Vec<Vec<R>> = Vec::new();
            for i in 0..3 {
                let mut row = Vec::new();
                for j in 0..3 {
                    let mut e = R::int(entries[3 * i + j]);
                    if i == j {
                        e = &e + &R::var(XY::X);
                    }
                    row.push(e);
                }
                m.push(row);
            }
            let rhs: Vec<R> = rv.iter().map(|&c| R::int(c)).collect();

            // Independent oracle: cofactor-expansion determinants (Cramer).
            let det3 = |mm: &[Vec<R>]| -> R {
                let t0 = &mm[0][0] * &(&(&mm[1][1] * &mm[2][2]) - &(&mm[1][2] * &mm[2][1]));
                let t1 = &mm[0][1] * &(&(&mm[1][0] * &mm[2][2]) - &(&mm[1][2] * &mm[2][0]));
                let t2 = &mm[0][2] * &(&(&mm[1][0] * &mm[2][1]) - &(&mm[1][1] * &mm[2][0]));
                &(&t0 - &t1) + &t2
            };
            let d = det3(&m);
            prop_assume!(!d.is_zero());
            let sol = linsolve_fraction_free(&m, &rhs).unwrap();
            for k in 0..3 {
                let mut mk = m.clone();
                for i in 0..3 {
                    mk[i][k] = rhs[i].clone();
                }
                let expected = &det3(&mk) / &d;
                prop_assert!(sol[k].eq_cross(&expected));
            }
        }
    }
}
