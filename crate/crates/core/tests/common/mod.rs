//! Seeded random generators shared by the integration suites.

use diffbrauer::diffalg::DiffAlgebra;
use diffbrauer::exactnum::{rat_int, Matrix, Polynomial, Rational, RationalFunction};
use rand::Rng;

pub fn rand_rational<R: Rng>(rng: &mut R, max_num: i64, max_den: i64) -> Rational {
    let num = rng.gen_range(-max_num..=max_num);
    let den = rng.gen_range(1..=max_den);
    Rational::new(num.into(), den.into())
}

pub fn rand_poly<R: Rng>(rng: &mut R, max_deg: usize, height: i64) -> Polynomial {
    let deg = rng.gen_range(0..=max_deg);
    let coeffs = (0..=deg).map(|_| rat_int(rng.gen_range(-height..=height))).collect();
    Polynomial::new(coeffs)
}

pub fn rand_nonzero_poly<R: Rng>(rng: &mut R, max_deg: usize, height: i64) -> Polynomial {
    loop {
        let p = rand_poly(rng, max_deg, height);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn rand_ratfunc<R: Rng>(rng: &mut R, max_deg: usize, height: i64) -> RationalFunction {
    RationalFunction::new(
        rand_poly(rng, max_deg, height),
        rand_nonzero_poly(rng, max_deg, height),
    )
    .expect("nonzero denominator")
}

pub fn rand_q_matrix<R: Rng>(rng: &mut R, n: usize, height: i64) -> Matrix<Rational> {
    Matrix::from_fn(n, n, |_, _| rat_int(rng.gen_range(-height..=height)))
}

pub fn rand_x_matrix<R: Rng>(rng: &mut R, n: usize, max_deg: usize, height: i64) -> Matrix<RationalFunction> {
    Matrix::from_fn(n, n, |_, _| rand_ratfunc(rng, max_deg, height))
}

/// Random invertible rational matrix built as a product of a unit lower-
/// and a unit upper-triangular matrix, so the inverse stays small.
pub fn rand_invertible_q<R: Rng>(rng: &mut R, n: usize, height: i64) -> Matrix<Rational> {
    let lower = Matrix::from_fn(n, n, |i, j| {
        if i == j {
            rat_int(1)
        } else if i > j {
            rat_int(rng.gen_range(-height..=height))
        } else {
            rat_int(0)
        }
    });
    let upper = Matrix::from_fn(n, n, |i, j| {
        if i == j {
            rat_int(1)
        } else if i < j {
            rat_int(rng.gen_range(-height..=height))
        } else {
            rat_int(0)
        }
    });
    lower.mul(&upper).expect("square")
}

/// Random nilpotent rational matrix: a strictly upper-triangular seed
/// conjugated by a random invertible matrix.
pub fn rand_nilpotent_q<R: Rng>(rng: &mut R, n: usize, height: i64) -> Matrix<Rational> {
    let strict = Matrix::from_fn(n, n, |i, j| {
        if i < j {
            rat_int(rng.gen_range(-height..=height))
        } else {
            rat_int(0)
        }
    });
    let p = rand_invertible_q(rng, n, 1);
    p.mul(&strict)
        .expect("square")
        .mul(&p.inverse().expect("unit triangular product"))
        .expect("square")
}

pub fn q_algebra(z: Matrix<Rational>) -> DiffAlgebra<Rational> {
    DiffAlgebra::new(z).expect("square")
}

pub fn x_algebra(z: Matrix<RationalFunction>) -> DiffAlgebra<RationalFunction> {
    DiffAlgebra::new(z).expect("square")
}

pub fn promote(m: &Matrix<Rational>) -> Matrix<RationalFunction> {
    Matrix::from_rational_matrix(m)
}
