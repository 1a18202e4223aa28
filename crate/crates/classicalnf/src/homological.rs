use crate::log::{exp_ad_field, Generator, StepKind, TransformationLog};
use crate::{rotation, ClassicalError, HopfZeroSystem};
use exactpoly::{par, Matrix, Monomial, PolyVectorField, Rational, Vars};
use liebasis::{decompose_cnf, BasisError, NFElement};
use num::{One, Zero};

/// Matrix of `Y -> [v0, Y]` on homogeneous degree-`d` fields over `(x, y, z)`,
/// in the coefficient order of `PolyVectorField::coefficient_vector`.
pub fn ad_rotation_matrix(d: u32) -> Matrix {
    let xyz = Vars::xyz();
    let dim = 3 * Monomial::all_of_degree(3, d).len();
    let v0 = rotation();
    let idx: Vec<usize> = (0..dim).collect();
    let cols = par::map(&idx, |&j| {
        let mut unit = vec![Rational::zero(); dim];
        unit[j] = Rational::one();
        let e = PolyVectorField::from_coefficient_vector(&xyz, d, &unit);
        v0.lie_bracket(&e).expect("same ring").coefficient_vector(d)
    });
    Matrix::from_columns(dim, &cols)
}

/// Kernel/image split of `ad_{v0}` at degree `d`.
///
/// Returns `(kernel basis, image basis, L restricted to the image basis)`.
struct Split {
    kernel: Vec<Vec<Rational>>,
    image: Vec<Vec<Rational>>,
    l_on_image: Matrix,
}

fn split(d: u32) -> Split {
    let l = ad_rotation_matrix(d);
    let kernel = l.nullspace();
    let (_, pivots) = l.rref();
    let image: Vec<Vec<Rational>> = pivots.iter().map(|&j| l.column(j)).collect();
    let dim = l.nrows();
    let l_img: Vec<Vec<Rational>> = image.iter().map(|c| l.mul_vec(c)).collect();
    Split {
        kernel,
        image,
        l_on_image: Matrix::from_columns(dim, &l_img),
    }
}

/// Splits `h` as kernel part plus image part and returns the unique generator
/// `Y` in the image with `[v0, Y]` equal to the image part.
fn solve_degree(sp: &Split, h: &[Rational]) -> Result<(Vec<Rational>, Vec<Rational>), ClassicalError> {
    let dim = h.len();
    let cols: Vec<Vec<Rational>> = sp.kernel.iter().chain(sp.image.iter()).cloned().collect();
    let basis = Matrix::from_columns(dim, &cols);
    let coeffs = basis
        .solve(h)
        .ok_or_else(|| ClassicalError::Internal("kernel and image of ad_{v0} do not span".into()))?;
    let nk = sp.kernel.len();
    let mut im_part = vec![Rational::zero(); dim];
    for (c, col) in coeffs[nk..].iter().zip(&sp.image) {
        if c.is_zero() {
            continue;
        }
        for (a, b) in im_part.iter_mut().zip(col) {
            *a += c * b;
        }
    }
    let gamma = sp
        .l_on_image
        .solve(&im_part)
        .ok_or_else(|| ClassicalError::Internal("ad_{v0} is not invertible on its image".into()))?;
    let mut y = vec![Rational::zero(); dim];
    for (c, col) in gamma.iter().zip(&sp.image) {
        if c.is_zero() {
            continue;
        }
        for (a, b) in y.iter_mut().zip(col) {
            *a += c * b;
        }
    }
    Ok((y, im_part))
}

/// First-level normal form up to degree `n`, with the generators used.
///
/// At each degree `d` the image of `ad_{v0}` is removed by `exp(ad_Y)` with
/// `Y` in that image; the kernel part is kept. The result is read back in the
/// F/E/Θ basis.
pub fn classical_normal_form(sys: &HopfZeroSystem, n: u32) -> Result<(NFElement, TransformationLog), ClassicalError> {
    let (v, log) = classical_normal_form_field(sys, n)?;
    let e = decompose_cnf(&v).map_err(|e| match e {
        BasisError::Shape { component, term } => ClassicalError::Internal(format!(
            "kernel of ad_{{v0}} left a non-resonant term {term} in the {component}-component"
        )),
        other => other.into(),
    })?;
    Ok((e, log))
}

/// As [`classical_normal_form`], but returns the normalized coordinate field.
pub fn classical_normal_form_field(
    sys: &HopfZeroSystem,
    n: u32,
) -> Result<(PolyVectorField, TransformationLog), ClassicalError> {
    if n < 2 {
        return Err(ClassicalError::Precondition(format!("truncation degree must be at least 2, got {n}")));
    }
    let xyz = Vars::xyz();
    let mut v = sys.field().truncate(n);
    let mut log = TransformationLog::new();
    for d in 2..=n {
        let h = v.coefficient_vector(d);
        if h.iter().all(Zero::is_zero) {
            continue;
        }
        let sp = split(d);
        let (y, im_part) = solve_degree(&sp, &h)?;
        if im_part.iter().all(Zero::is_zero) {
            continue;
        }
        let gen = PolyVectorField::from_coefficient_vector(&xyz, d, &y);
        v = exp_ad_field(&gen, &v, n)?;
        log.push(d as i64, StepKind::NearIdentity, Generator::Field(gen));
    }
    Ok((v, log))
}
