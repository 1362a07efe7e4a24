use bethe_lab_core::bethe::{current, BetheAlgebra, DiffOp};
use bethe_lab_core::cm::{build_qz, phi0_expansion};
use bethe_lab_core::exact::ring::{rat, ratio};
use bethe_lab_core::{GaudinConfig, HamiltonianSet, OperatorMatrix, PoleSet};

fn two_sites() -> GaudinConfig {
    GaudinConfig::new(2, 2, vec![rat(0), rat(1)], vec![rat(0), rat(1)]).unwrap()
}

fn first_order(cfg: &GaudinConfig, i: usize, j: usize) -> DiffOp<OperatorMatrix> {
    let poles = PoleSet::new(cfg.z().to_vec());
    let d = DiffOp::derivation(poles, (cfg.dim(), ()));
    d.sub(&DiffOp::multiplication(current(i, j, cfg).unwrap())).unwrap()
}

#[test]
fn diffop_product_is_associative() {
    let cfg = two_sites();
    let a = first_order(&cfg, 1, 1);
    let b = DiffOp::multiplication(current(1, 2, &cfg).unwrap());
    let c = first_order(&cfg, 2, 2);
    let left = a.mul(&b).unwrap().mul(&c).unwrap();
    let right = a.mul(&b.mul(&c).unwrap()).unwrap();
    assert_eq!(left, right);
    assert_eq!(left.order(), Some(2));
}

#[test]
fn diffop_leibniz_rule() {
    // ∂ · f = f ∂ + f'
    let cfg = two_sites();
    let f = current(2, 1, &cfg).unwrap();
    let d = DiffOp::derivation(PoleSet::new(cfg.z().to_vec()), (cfg.dim(), ()));
    let lhs = d.mul(&DiffOp::multiplication(f.clone())).unwrap();
    let rhs = DiffOp::multiplication(f.clone())
        .mul(&d)
        .unwrap()
        .add(&DiffOp::multiplication(f.derivative()))
        .unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn leading_coefficient_is_one() {
    let b = BetheAlgebra::new(&two_sites()).unwrap();
    assert_eq!(b.operator().order(), Some(2));
    let one = OperatorMatrix::identity(4, ());
    assert_eq!(b.b_coeff(0, 0), one);
}

#[test]
fn psi_series_equals_expansion_of_qz() {
    for (gl_n, sites, seed) in [(2, 2, 1), (2, 3, 2), (3, 2, 3)] {
        let cfg = GaudinConfig::seeded(gl_n, sites, seed).unwrap();
        let psi = BetheAlgebra::new(&cfg).unwrap().psi_series(4, 4).unwrap();
        let h = HamiltonianSet::build(&cfg).unwrap().h;
        let phi = phi0_expansion(build_qz(cfg.z(), h).unwrap().pair(), 4, 4).unwrap();
        assert_eq!(psi, phi, "N = {gl_n}, n = {sites}");
    }
}

#[test]
fn psi_coefficients_commute_with_hamiltonians() {
    let cfg = GaudinConfig::new(2, 3, vec![ratio(1, 2), rat(-2)], vec![rat(0), rat(2), ratio(-1, 3)]).unwrap();
    let psi = BetheAlgebra::new(&cfg).unwrap().psi_series(3, 3).unwrap();
    let hs = HamiltonianSet::build(&cfg).unwrap().h;
    for (i, j, c) in psi.iter() {
        for h in &hs {
            assert_eq!(c.mul(h), h.mul(c), "Ψ_{i}{j}");
        }
    }
}
