use exactpoly::{int, q, Matrix, Monomial, PolyError, PolyVectorField, Polynomial, Rational, Vars};

fn p(vars: &Vars, terms: &[(Rational, &[u32])]) -> Polynomial {
    Polynomial::from_terms(vars, terms.iter().map(|(c, e)| (Monomial::new(e), c.clone())))
}

fn field(vars: &Vars, comps: Vec<Polynomial>) -> PolyVectorField {
    PolyVectorField::new(vars, comps).unwrap()
}

fn rho2(v: &Vars) -> Polynomial {
    p(v, &[(int(1), &[0, 2, 0]), (int(1), &[0, 0, 2])])
}

#[test]
fn rotation_preserves_radius() {
    let v = Vars::xyz();
    let theta = field(&v, vec![Polynomial::zero(&v), p(&v, &[(int(1), &[0, 0, 1])]), p(&v, &[(int(-1), &[0, 1, 0])])]);
    assert!(theta.apply_derivation(&rho2(&v)).unwrap().is_zero());
    assert!(theta.apply_derivation(&Polynomial::constant(&v, q(7, 3))).unwrap().is_zero());
}

#[test]
fn euler_field_scales_x_rho2() {
    let v = Vars::xyz();
    let e00 = field(&v, vec![p(&v, &[(int(1), &[1, 0, 0])]), p(&v, &[(q(1, 2), &[0, 1, 0])]), p(&v, &[(q(1, 2), &[0, 0, 1])])]);
    let g = Polynomial::var(&v, 0).mul(&rho2(&v)).unwrap();
    assert_eq!(e00.apply_derivation(&g).unwrap(), g.scale(&int(2)));
    assert_eq!(e00.divergence(), Polynomial::constant(&v, int(2)));
}

#[test]
fn divergence_of_radial_push_is_zero() {
    let v = Vars::xyz();
    let f = field(&v, vec![rho2(&v).scale(&int(2)), Polynomial::zero(&v), Polynomial::zero(&v)]);
    assert!(f.divergence().is_zero());
}

#[test]
fn bracket_with_itself_vanishes() {
    let v = Vars::xyz();
    let f = field(&v, vec![p(&v, &[(int(3), &[2, 1, 0])]), p(&v, &[(q(-1, 2), &[0, 0, 3])]), rho2(&v)]);
    assert!(f.lie_bracket(&f).unwrap().is_zero());
}

#[test]
fn mismatched_rings_rejected() {
    let a = Polynomial::var(&Vars::xyz(), 0);
    let b = Polynomial::var(&Vars::new(&["z", "y", "x"]), 0);
    assert!(matches!(a.add(&b), Err(PolyError::VarMismatch { .. })));
    let f = PolyVectorField::zero(&Vars::xyz());
    let g = PolyVectorField::zero(&Vars::planar());
    assert!(f.lie_bracket(&g).is_err());
}

#[test]
fn pushforward_examples() {
    let pl = Vars::planar();
    // planar F(-1,0) reduced by rho': (rho², -x rho / 2)
    let f = field(&pl, vec![p(&pl, &[(int(1), &[0, 2])]), p(&pl, &[(q(-1, 2), &[1, 1])])]);
    let bt = Vars::bt();
    let img = f.pushforward_bt().unwrap();
    assert_eq!(img, field(&bt, vec![p(&bt, &[(int(-1), &[1, 1])]), p(&bt, &[(int(1), &[1, 0])])]));

    assert!(PolyVectorField::zero(&pl).pushforward_bt().unwrap().is_zero());

    let e00 = field(&pl, vec![Polynomial::var(&pl, 0), Polynomial::var(&pl, 1).scale(&q(1, 2))]);
    assert_eq!(e00.pushforward_bt().unwrap(), field(&bt, vec![Polynomial::var(&bt, 0), Polynomial::var(&bt, 1)]));

    let odd = field(&pl, vec![Polynomial::var(&pl, 1), Polynomial::zero(&pl)]);
    assert!(matches!(odd.pushforward_bt(), Err(PolyError::Precondition(_))));
}

#[test]
fn linear_change_examples() {
    let v = Vars::xyz();
    let f = field(&v, vec![rho2(&v).scale(&int(2)), Polynomial::zero(&v), Polynomial::zero(&v)]);
    assert_eq!(f.linear_change(&Matrix::identity(3)).unwrap(), f);

    let mut t = Matrix::identity(3);
    t.set(0, 0, int(2));
    let g = f.linear_change(&t).unwrap();
    assert_eq!(g, field(&v, vec![rho2(&v), Polynomial::zero(&v), Polynomial::zero(&v)]));

    let sing = Matrix::zeros(3, 3);
    assert_eq!(f.linear_change(&sing), Err(PolyError::Singular));
}

#[test]
fn truncate_examples() {
    let v = Vars::xyz();
    let f = field(&v, vec![p(&v, &[(int(1), &[3, 0, 0]), (int(1), &[2, 0, 0])]), Polynomial::zero(&v), Polynomial::zero(&v)]);
    let t = f.truncate(2);
    assert_eq!(t, field(&v, vec![p(&v, &[(int(1), &[2, 0, 0])]), Polynomial::zero(&v), Polynomial::zero(&v)]));
    assert_eq!(f.truncate(3), f);
    assert_eq!(t.truncate(2), t);
}

#[test]
fn coefficient_vector_roundtrip() {
    let v = Vars::xyz();
    let f = field(&v, vec![p(&v, &[(int(1), &[1, 1, 0])]), p(&v, &[(q(2, 3), &[0, 0, 2])]), p(&v, &[(int(-5), &[2, 0, 0])])]);
    let vec = f.coefficient_vector(2);
    assert_eq!(vec.len(), 18);
    assert_eq!(PolyVectorField::from_coefficient_vector(&v, 2, &vec), f);
}

#[test]
fn display_is_readable() {
    let v = Vars::xyz();
    let g = p(&v, &[(q(-1, 2), &[1, 0, 0]), (int(2), &[0, 2, 1])]);
    assert_eq!(g.to_string(), "-1/2*x + 2*y^2*z");
}
