use bethe_lab_core::exact::det::{char_poly, det, det_berkowitz, det_leibniz};
use bethe_lab_core::exact::linalg::{det_lu, inverse, mat_mul, solve};
use bethe_lab_core::exact::ring::{rat, ratio};
use bethe_lab_core::seed::SeededRationals;
use bethe_lab_core::{Matrix, PoleSet, RatFun, Rational};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(p, q)| ratio(p, q))
}

fn ratfun(poles: &PoleSet, poly: Vec<Rational>, residues: Vec<Rational>) -> RatFun<Rational> {
    let mut f = RatFun::polynomial(poles.clone(), poly);
    for (a, r) in residues.into_iter().enumerate() {
        let k = 1 + (a % 2) as u32;
        f = f.add(&RatFun::pole(poles.clone(), a % poles.len(), k, r)).unwrap();
    }
    f
}

fn poles() -> PoleSet {
    PoleSet::new(vec![rat(-1), ratio(1, 2), rat(3)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn evaluation_is_a_ring_homomorphism(
        p in prop::collection::vec(small_rational(), 1..4),
        q in prop::collection::vec(small_rational(), 1..4),
        rp in prop::collection::vec(small_rational(), 0..4),
        rq in prop::collection::vec(small_rational(), 0..4),
        u in small_rational(),
    ) {
        let ps = poles();
        prop_assume!(ps.points().iter().all(|z| z != &u));
        let f = ratfun(&ps, p, rp);
        let g = ratfun(&ps, q, rq);
        let (fu, gu) = (f.eval(&u).unwrap(), g.eval(&u).unwrap());
        prop_assert_eq!(f.add(&g).unwrap().eval(&u).unwrap(), &fu + &gu);
        prop_assert_eq!(f.mul(&g).unwrap().eval(&u).unwrap(), &fu * &gu);
    }

    #[test]
    fn determinant_algorithms_agree(entries in prop::collection::vec(small_rational(), 16)) {
        let rows: Vec<Vec<Rational>> = entries.chunks(4).map(<[Rational]>::to_vec).collect();
        let m = Matrix::from_dense((), rows.clone());
        let lu = det_lu(&rows);
        prop_assert_eq!(det_leibniz(&m), lu.clone());
        prop_assert_eq!(det_berkowitz(&m), lu);
    }
}

#[test]
fn evaluation_homomorphism_at_seeded_points() {
    let ps = poles();
    let mut g = SeededRationals::new(41);
    let f = ratfun(&ps, g.rationals(3), g.rationals(3));
    let h = ratfun(&ps, g.rationals(2), g.rationals(4));
    let prod = f.mul(&h).unwrap();
    let deriv = f.derivative();
    for _ in 0..5 {
        let u = g.avoiding(ps.points());
        assert_eq!(prod.eval(&u).unwrap(), f.eval(&u).unwrap() * h.eval(&u).unwrap());
        // Product rule.
        let lhs = prod.derivative().eval(&u).unwrap();
        let rhs = deriv.eval(&u).unwrap() * h.eval(&u).unwrap() + f.eval(&u).unwrap() * h.derivative().eval(&u).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn seeded_determinants_up_to_eight() {
    let mut g = SeededRationals::new(7);
    for t in 0..25 {
        let n = 1 + t % 8;
        let rows: Vec<Vec<Rational>> = (0..n).map(|_| g.rationals(n)).collect();
        let m = Matrix::from_dense((), rows.clone());
        assert_eq!(det(&m), det_lu(&rows), "instance {t}, dimension {n}");
    }
}

#[test]
fn characteristic_polynomial_is_monic_with_det_constant() {
    let mut g = SeededRationals::new(3);
    let rows: Vec<Vec<Rational>> = (0..5).map(|_| g.rationals(5)).collect();
    let m = Matrix::from_dense((), rows.clone());
    let p = char_poly(&m);
    assert_eq!(p.degree(), Some(5));
    assert_eq!(p.coeff(5), rat(1));
    // det(x − M) at x = 0 is (−1)^5 det M.
    assert_eq!(p.coeff(0), -det_lu(&rows));
}

#[test]
fn seeded_solve_has_zero_residual() {
    let mut g = SeededRationals::new(19);
    let a: Vec<Vec<Rational>> = (0..6).map(|_| g.rationals(6)).collect();
    let b = g.rationals(6);
    let x = solve(&a, &b).unwrap();
    for (row, bi) in a.iter().zip(&b) {
        let ax: Rational = row.iter().zip(&x).map(|(p, q)| p * q).sum();
        assert_eq!(&ax, bi);
    }
    let inv = inverse(&a).unwrap();
    let id = mat_mul(&a, &inv);
    for (r, row) in id.iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            assert_eq!(v, &rat((r == c) as i64));
        }
    }
}

#[test]
fn commuting_operator_entries() {
    // A 3×3 matrix whose entries are diagonal operators on C^2: its determinant
    // is computed componentwise.
    let d = |a: i64, b: i64| Matrix::diagonal((), vec![rat(a), rat(b)]);
    let m = Matrix::from_dense(
        (2, ()),
        vec![
            vec![d(1, 2), d(0, 1), d(3, -1)],
            vec![d(2, 0), d(1, 1), d(0, 4)],
            vec![d(-1, 5), d(2, 3), d(1, 2)],
        ],
    );
    let first = vec![vec![rat(1), rat(0), rat(3)], vec![rat(2), rat(1), rat(0)], vec![rat(-1), rat(2), rat(1)]];
    let second = vec![vec![rat(2), rat(1), rat(-1)], vec![rat(0), rat(1), rat(4)], vec![rat(5), rat(3), rat(2)]];
    let expected = Matrix::diagonal((), vec![det_lu(&first), det_lu(&second)]);
    assert_eq!(det(&m), expected);
    assert_eq!(det_berkowitz(&m), expected);
}
