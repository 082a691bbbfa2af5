use liecurv::linalg::Matrix;
use liecurv::Scalar;

pub fn s(t: &str) -> Scalar {
    t.parse().unwrap()
}

/// Sparse integer-surd entries `(row, col, value)` in 1-based display positions,
/// filled symmetrically and divided by `den`.
fn sparse(entries: &[(usize, usize, &str)], den: i64) -> Matrix {
    let mut m = Matrix::zeros(10, 10);
    for &(r, c, v) in entries {
        let x = s(v).div_int(den);
        m[(r - 1, c - 1)] = x.clone();
        m[(c - 1, r - 1)] = x;
    }
    m
}

pub fn nikonorov5_display() -> Matrix {
    sparse(
        &[
            (1, 1, "13"),
            (1, 2, "-2*sqrt(5)"),
            (1, 3, "-4*sqrt(5)"),
            (2, 2, "4"),
            (3, 3, "16"),
            (4, 4, "8"),
            (5, 5, "1"),
            (5, 8, "1*sqrt(5)"),
            (5, 10, "1*sqrt(5)"),
            (6, 6, "9"),
            (6, 7, "-3*sqrt(5)"),
            (6, 9, "-3*sqrt(5)"),
            (7, 7, "17"),
            (7, 9, "5"),
            (8, 8, "1"),
            (8, 10, "5"),
            (9, 9, "-1"),
            (10, 10, "7"),
        ],
        30,
    )
}

pub fn nikonorov4_display() -> Matrix {
    sparse(
        &[
            (1, 1, "41"),
            (1, 2, "-4*sqrt(22)"),
            (2, 2, "32"),
            (3, 3, "18"),
            (4, 4, "24"),
            (5, 5, "8"),
            (5, 8, "2*sqrt(22)"),
            (6, 6, "8"),
            (6, 7, "-2*sqrt(22)"),
            (7, 7, "5"),
            (8, 8, "5"),
            (9, 9, "12"),
            (10, 10, "12"),
        ],
        66,
    )
}
