//! Projective equivalence of realizations: two arrangements are the same
//! moduli point when a projective transformation plus a line permutation
//! carries one onto the other.

use crate::exact::{ExactError, QuadExt};
use crate::geometry::{Arrangement, ProjLine};

type Mat = [[QuadExt; 3]; 3];

fn col_matrix(a: &[QuadExt; 3], b: &[QuadExt; 3], c: &[QuadExt; 3]) -> Mat {
    std::array::from_fn(|i| [a[i].clone(), b[i].clone(), c[i].clone()])
}

fn mat_det(m: &Mat) -> Result<QuadExt, ExactError> {
    let mut acc = QuadExt::zero();
    for c in 0..3 {
        let minor = m[1][(c + 1) % 3]
            .try_mul(&m[2][(c + 2) % 3])?
            .try_sub(&m[1][(c + 2) % 3].try_mul(&m[2][(c + 1) % 3])?)?;
        acc = acc.try_add(&m[0][c].try_mul(&minor)?)?;
    }
    Ok(acc)
}

fn mat_adjugate(m: &Mat) -> Result<Mat, ExactError> {
    let mut out: Mat = std::array::from_fn(|_| std::array::from_fn(|_| QuadExt::zero()));
    for i in 0..3 {
        for j in 0..3 {
            let (r1, r2) = ((j + 1) % 3, (j + 2) % 3);
            let (c1, c2) = ((i + 1) % 3, (i + 2) % 3);
            out[i][j] = m[r1][c1]
                .try_mul(&m[r2][c2])?
                .try_sub(&m[r1][c2].try_mul(&m[r2][c1])?)?;
        }
    }
    Ok(out)
}

fn mat_vec(m: &Mat, v: &[QuadExt; 3]) -> Result<[QuadExt; 3], ExactError> {
    let mut out = [QuadExt::zero(), QuadExt::zero(), QuadExt::zero()];
    for i in 0..3 {
        for j in 0..3 {
            out[i] = out[i].try_add(&m[i][j].try_mul(&v[j])?)?;
        }
    }
    Ok(out)
}

fn mat_mul(a: &Mat, b: &Mat) -> Result<Mat, ExactError> {
    let mut out: Mat = std::array::from_fn(|_| std::array::from_fn(|_| QuadExt::zero()));
    for i in 0..3 {
        for j in 0..3 {
            for (k, row) in b.iter().enumerate() {
                out[i][j] = out[i][j].try_add(&a[i][k].try_mul(&row[j])?)?;
            }
        }
    }
    Ok(out)
}

fn coeffs(l: &ProjLine) -> [QuadExt; 3] {
    l.coeffs().clone()
}

/// A "frame" here is four lines no three of which are concurrent.
fn find_line_frame(lines: &[ProjLine]) -> Option<[usize; 4]> {
    let n = lines.len();
    let independent = |i: usize, j: usize, k: usize| {
        let m = col_matrix(&coeffs(&lines[i]), &coeffs(&lines[j]), &coeffs(&lines[k]));
        mat_det(&m).map(|d| !d.is_zero()).unwrap_or(false)
    };
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if independent(a, b, c)
                        && independent(a, b, d)
                        && independent(a, c, d)
                        && independent(b, c, d)
                    {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

/// Solves for the coefficients expressing `l4` in the basis `l1,l2,l3`
/// (columns of `m`); all three must be nonzero for a usable frame.
fn frame_coefficients(m: &Mat, l4: &[QuadExt; 3]) -> Option<[QuadExt; 3]> {
    let det = mat_det(m).ok()?;
    if det.is_zero() {
        return None;
    }
    let adj = mat_adjugate(m).ok()?;
    let scaled = mat_vec(&adj, l4).ok()?; // det * alpha
    if scaled.iter().any(|x| x.is_zero()) {
        return None;
    }
    Some(scaled)
}

/// True iff a projective transformation maps line `i` of `a` to line `i`
/// of `b` for every `i` — the two ordered realizations are the same point
/// of the moduli space (the quotient of ordered tuples by PGL3 alone;
/// relabeling is deliberately not quotiented out, which is what makes the
/// two Falk–Sturmfels points distinct even though a transformation maps
/// one arrangement onto the other with its lines permuted).
///
/// Four lines of `a` with no three concurrent are anchored to the
/// same-index lines of `b`; the anchoring determines the transformation
/// up to scale, which is then checked on every remaining line.
pub fn realizations_equivalent(a: &Arrangement, b: &Arrangement) -> bool {
    if a.n() != b.n() {
        return false;
    }
    if a.n() == 0 {
        return true;
    }
    let Some(frame) = find_line_frame(a.lines()) else {
        // fewer than four lines in general position (pencils, near-pencils
        // plus one): compare the ordered canonical line tuples directly
        return a.lines() == b.lines();
    };
    let cols = |arr: &Arrangement| {
        col_matrix(
            &coeffs(&arr.lines()[frame[0]]),
            &coeffs(&arr.lines()[frame[1]]),
            &coeffs(&arr.lines()[frame[2]]),
        )
    };
    let a_cols = cols(a);
    let b_cols = cols(b);
    let Some(alpha) = frame_coefficients(&a_cols, &coeffs(&a.lines()[frame[3]])) else {
        return false;
    };
    let Some(beta) = frame_coefficients(&b_cols, &coeffs(&b.lines()[frame[3]])) else {
        return false;
    };
    let Ok(a_adj) = mat_adjugate(&a_cols) else {
        return false;
    };
    // N = B * diag(beta_k / alpha_k) * adj(A) maps each frame line of `a`
    // to the same-index frame line of `b` (up to scale)
    let mut scaled = b_cols.clone();
    for k in 0..3 {
        let Ok(factor) = beta[k].try_div(&alpha[k]) else {
            return false;
        };
        for row in scaled.iter_mut() {
            let Ok(v) = row[k].try_mul(&factor) else {
                return false;
            };
            row[k] = v;
        }
    }
    let Ok(nmat) = mat_mul(&scaled, &a_adj) else {
        return false;
    };
    for (l, m) in a.lines().iter().zip(b.lines()) {
        let Ok(img) = mat_vec(&nmat, &coeffs(l)) else {
            return false;
        };
        let Ok(img_line) = ProjLine::new(img) else {
            return false;
        };
        if img_line != *m {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{falk_sturmfels, Sign};
    use crate::geometry::{apply_transform, conjugate_arrangement, random_rational_arrangement, ProjTransform};

    #[test]
    fn transform_images_are_equivalent() {
        let arr = random_rational_arrangement(7, 5);
        let t = ProjTransform::from_ints([[1, 2, 0], [0, 1, 3], [1, 0, 1]]).unwrap();
        let img = apply_transform(&arr, &t).unwrap();
        assert!(realizations_equivalent(&arr, &img));
    }

    #[test]
    fn fs_plus_and_minus_are_distinct_moduli_points() {
        let plus = falk_sturmfels(Sign::Plus).arrangement;
        let minus = falk_sturmfels(Sign::Minus).arrangement;
        assert!(!realizations_equivalent(&plus, &minus));
        assert!(realizations_equivalent(&plus, &plus));
        // conjugation carries + to -, so the conjugate matches - not +
        let conj = conjugate_arrangement(&plus);
        assert!(realizations_equivalent(&conj, &minus));
        assert!(!realizations_equivalent(&conj, &plus));
    }
}
