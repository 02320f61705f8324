//! Projective points, lines, and arrangements over a quadratic field,
//! plus projective transformations and incidence extraction.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{is_valid_field_d, join_field, ExactError, QuadExt};
use crate::lattice::IncidenceStructure;

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("the two lines are equal")]
    EqualLines,
    #[error("the two points are equal")]
    EqualPoints,
    #[error("transformation matrix is singular")]
    SingularMatrix,
    #[error("homogeneous triple is identically zero")]
    ZeroTriple,
    #[error("arrangement contains duplicate lines")]
    DuplicateLines,
    #[error("{0} is not a valid squarefree field discriminant")]
    InvalidField(i64),
    #[error("coefficient lies outside the declared field")]
    FieldMismatch,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

type Result<T> = std::result::Result<T, GeometryError>;

/// Scales a homogeneous triple so its first nonzero entry is 1.
fn canonicalize(t: [QuadExt; 3]) -> Result<[QuadExt; 3]> {
    let pivot = t
        .iter()
        .find(|c| !c.is_zero())
        .ok_or(GeometryError::ZeroTriple)?
        .clone();
    let inv = pivot.try_inv()?;
    Ok([&t[0] * &inv, &t[1] * &inv, &t[2] * &inv])
}

fn cross(a: &[QuadExt; 3], b: &[QuadExt; 3]) -> [QuadExt; 3] {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

fn dot(a: &[QuadExt; 3], b: &[QuadExt; 3]) -> QuadExt {
    &(&(&a[0] * &b[0]) + &(&a[1] * &b[1])) + &(&a[2] * &b[2])
}

/// A point of the projective plane, stored in canonical form: the first
/// nonzero coordinate is scaled to 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    coords: [QuadExt; 3],
}

impl ProjPoint {
    pub fn new(coords: [QuadExt; 3]) -> Result<Self> {
        Ok(ProjPoint { coords: canonicalize(coords)? })
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Result<Self> {
        ProjPoint::new([
            QuadExt::from_int(x),
            QuadExt::from_int(y),
            QuadExt::from_int(z),
        ])
    }

    pub fn coords(&self) -> &[QuadExt; 3] {
        &self.coords
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} : {} : {}]", self.coords[0], self.coords[1], self.coords[2])
    }
}

/// A projective line `ax + by + cz = 0`, stored in the same canonical form
/// as points.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjLine {
    coeffs: [QuadExt; 3],
}

impl ProjLine {
    pub fn new(coeffs: [QuadExt; 3]) -> Result<Self> {
        Ok(ProjLine { coeffs: canonicalize(coeffs)? })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
        ProjLine::new([
            QuadExt::from_int(a),
            QuadExt::from_int(b),
            QuadExt::from_int(c),
        ])
    }

    pub fn coeffs(&self) -> &[QuadExt; 3] {
        &self.coeffs
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        dot(&self.coeffs, &p.coords).is_zero()
    }

    /// Smallest squarefree field containing all three coefficients.
    pub fn field_d(&self) -> Result<i64> {
        let mut d = 1;
        for c in &self.coeffs {
            d = join_field(d, c.field_d())?;
        }
        Ok(d)
    }
}

impl fmt::Debug for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})x + ({})y + ({})z = 0",
            self.coeffs[0], self.coeffs[1], self.coeffs[2]
        )
    }
}

/// The intersection point of two distinct lines (cross product of the
/// coefficient triples).
pub fn intersect(l1: &ProjLine, l2: &ProjLine) -> Result<ProjPoint> {
    if l1 == l2 {
        return Err(GeometryError::EqualLines);
    }
    let p = ProjPoint::new(cross(&l1.coeffs, &l2.coeffs))?;
    debug_assert!(l1.contains(&p) && l2.contains(&p));
    Ok(p)
}

/// The line through two distinct points (cross product of the coordinate
/// triples).
pub fn line_through(p: &ProjPoint, q: &ProjPoint) -> Result<ProjLine> {
    if p == q {
        return Err(GeometryError::EqualPoints);
    }
    let l = ProjLine::new(cross(&p.coords, &q.coords))?;
    debug_assert!(l.contains(p) && l.contains(q));
    Ok(l)
}

/// An ordered sequence of pairwise-distinct lines over `Q(sqrt(field_d))`.
#[derive(Clone, PartialEq, Eq)]
pub struct Arrangement {
    lines: Vec<ProjLine>,
    field_d: i64,
}

impl Arrangement {
    pub fn new(lines: Vec<ProjLine>, field_d: i64) -> Result<Self> {
        if !is_valid_field_d(field_d) {
            return Err(GeometryError::InvalidField(field_d));
        }
        for l in &lines {
            if join_field(l.field_d()?, field_d)? != field_d {
                return Err(GeometryError::FieldMismatch);
            }
        }
        for i in 0..lines.len() {
            for j in i + 1..lines.len() {
                if lines[i] == lines[j] {
                    return Err(GeometryError::DuplicateLines);
                }
            }
        }
        Ok(Arrangement { lines, field_d })
    }

    pub fn lines(&self) -> &[ProjLine] {
        &self.lines
    }

    pub fn field_d(&self) -> i64 {
        self.field_d
    }

    pub fn n(&self) -> usize {
        self.lines.len()
    }
}

impl fmt::Debug for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Arrangement over Q(sqrt({})):", self.field_d)?;
        for (i, l) in self.lines.iter().enumerate() {
            writeln!(f, "  L{}: {:?}", i + 1, l)?;
        }
        Ok(())
    }
}

/// Groups the pairwise intersection points of an arrangement and returns
/// the abstract incidence structure of all >= 3-fold concurrencies.
pub fn incidence_of(arr: &Arrangement) -> IncidenceStructure {
    let n = arr.n();
    let mut points: Vec<(ProjPoint, Vec<usize>)> = vec![];
    for i in 0..n {
        for j in i + 1..n {
            let p = intersect(&arr.lines[i], &arr.lines[j]).expect("distinct lines");
            match points.iter_mut().find(|(q, _)| *q == p) {
                Some((_, idxs)) => {
                    if !idxs.contains(&i) {
                        idxs.push(i);
                    }
                    if !idxs.contains(&j) {
                        idxs.push(j);
                    }
                }
                None => points.push((p, vec![i, j])),
            }
        }
    }
    let multiples: Vec<Vec<usize>> = points
        .into_iter()
        .filter(|(_, idxs)| idxs.len() >= 3)
        .map(|(_, mut idxs)| {
            idxs.sort_unstable();
            idxs
        })
        .collect();
    IncidenceStructure::new(n, multiples).expect("incidence extraction yields a valid structure")
}

/// An invertible projective transformation, acting on the right of row
/// points `[x, y, z]`.
#[derive(Clone, PartialEq, Eq)]
pub struct ProjTransform {
    m: [[QuadExt; 3]; 3],
}

impl ProjTransform {
    pub fn new(m: [[QuadExt; 3]; 3]) -> Result<Self> {
        let t = ProjTransform { m };
        if t.det().is_zero() {
            return Err(GeometryError::SingularMatrix);
        }
        Ok(t)
    }

    pub fn from_ints(m: [[i64; 3]; 3]) -> Result<Self> {
        ProjTransform::new(m.map(|row| row.map(QuadExt::from_int)))
    }

    pub fn identity() -> Self {
        ProjTransform::from_ints([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap()
    }

    pub fn matrix(&self) -> &[[QuadExt; 3]; 3] {
        &self.m
    }

    pub fn det(&self) -> QuadExt {
        let m = &self.m;
        let mut acc = QuadExt::zero();
        for c in 0..3 {
            // cyclic indices encode the cofactor sign
            let minor = &(&m[1][(c + 1) % 3] * &m[2][(c + 2) % 3])
                - &(&m[1][(c + 2) % 3] * &m[2][(c + 1) % 3]);
            acc = &acc + &(&m[0][c] * &minor);
        }
        acc
    }

    /// Adjugate matrix: `A * adj(A) = det(A) * I`, computed division-free.
    pub fn adjugate(&self) -> [[QuadExt; 3]; 3] {
        let m = &self.m;
        let cof = |r: usize, c: usize| {
            let (r1, r2) = ((r + 1) % 3, (r + 2) % 3);
            let (c1, c2) = ((c + 1) % 3, (c + 2) % 3);
            &(&m[r1][c1] * &m[r2][c2]) - &(&m[r1][c2] * &m[r2][c1])
        };
        // adj = transpose of the cofactor matrix
        std::array::from_fn(|i| std::array::from_fn(|j| cof(j, i)))
    }

    /// Matrix product `self * other` (apply `self` first when acting on
    /// the right of row vectors).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let mut out: [[QuadExt; 3]; 3] =
            std::array::from_fn(|_| std::array::from_fn(|_| QuadExt::zero()));
        for i in 0..3 {
            for j in 0..3 {
                for (k, row) in other.m.iter().enumerate() {
                    out[i][j] = &out[i][j] + &(&self.m[i][k] * &row[j]);
                }
            }
        }
        ProjTransform::new(out)
    }

    /// Image of a point under `p -> p * A`.
    pub fn apply_point(&self, p: &ProjPoint) -> Result<ProjPoint> {
        let c = &p.coords;
        let img: [QuadExt; 3] = std::array::from_fn(|j| {
            &(&(&c[0] * &self.m[0][j]) + &(&c[1] * &self.m[1][j])) + &(&c[2] * &self.m[2][j])
        });
        ProjPoint::new(img)
    }

    /// Image of a line: coefficient columns transform by the adjugate, so
    /// that `p` on `l` iff `p*A` on `apply_line(l)`.
    pub fn apply_line(&self, l: &ProjLine) -> Result<ProjLine> {
        let adj = self.adjugate();
        let c = &l.coeffs;
        let img: [QuadExt; 3] = std::array::from_fn(|i| {
            &(&(&adj[i][0] * &c[0]) + &(&adj[i][1] * &c[1])) + &(&adj[i][2] * &c[2])
        });
        ProjLine::new(img)
    }
}

impl fmt::Debug for ProjTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.m {
            writeln!(f, "[{}, {}, {}]", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}

/// Applies an invertible transformation to every line of an arrangement;
/// incidence is preserved index-by-index.
pub fn apply_transform(arr: &Arrangement, t: &ProjTransform) -> Result<Arrangement> {
    let mut field_d = arr.field_d;
    for row in t.matrix() {
        for e in row {
            field_d = join_field(field_d, e.field_d())?;
        }
    }
    let lines = arr
        .lines
        .iter()
        .map(|l| t.apply_line(l))
        .collect::<Result<Vec<_>>>()?;
    Arrangement::new(lines, field_d)
}

/// Conjugates every coefficient (`sqrt(d) -> -sqrt(d)`); the incidence
/// structure is preserved under the identity permutation.
pub fn conjugate_arrangement(arr: &Arrangement) -> Arrangement {
    let lines = arr
        .lines
        .iter()
        .map(|l| ProjLine {
            coeffs: std::array::from_fn(|k| l.coeffs[k].conjugate()),
        })
        .collect();
    Arrangement { lines, field_d: arr.field_d }
}

#[derive(Serialize, Deserialize)]
struct ArrangementJson {
    field_d: i64,
    lines: Vec<[String; 3]>,
}

impl Serialize for Arrangement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let lines = self
            .lines
            .iter()
            .map(|l| std::array::from_fn(|k| l.coeffs[k].to_string()))
            .collect();
        ArrangementJson { field_d: self.field_d, lines }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Arrangement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error;
        let raw = ArrangementJson::deserialize(d)?;
        let mut lines = vec![];
        for triple in &raw.lines {
            let mut coeffs = vec![];
            for s in triple {
                coeffs.push(QuadExt::parse(s).map_err(D::Error::custom)?);
            }
            let coeffs: [QuadExt; 3] = coeffs.try_into().unwrap();
            lines.push(ProjLine::new(coeffs).map_err(D::Error::custom)?);
        }
        Arrangement::new(lines, raw.field_d).map_err(D::Error::custom)
    }
}

/// Generates a random arrangement of `n` distinct lines with rational
/// coordinates. Later lines are biased to pass through one or two existing
/// intersection points, so nontrivial multiple points occur.
pub fn random_rational_arrangement(n: usize, seed: u64) -> Arrangement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lines: Vec<ProjLine> = vec![];
    let random_line = |rng: &mut ChaCha8Rng| loop {
        let a = rng.gen_range(-6i64..=6);
        let b = rng.gen_range(-6i64..=6);
        let c = rng.gen_range(-6i64..=6);
        if let Ok(l) = ProjLine::from_ints(a, b, c) {
            return l;
        }
    };
    while lines.len() < n {
        let mut pts: Vec<ProjPoint> = vec![];
        for i in 0..lines.len() {
            for j in i + 1..lines.len() {
                let p = intersect(&lines[i], &lines[j]).unwrap();
                if !pts.contains(&p) {
                    pts.push(p);
                }
            }
        }
        let style = rng.gen_range(0u8..4);
        let candidate = if style >= 2 && pts.len() >= 2 {
            // line through two existing intersection points
            let i = rng.gen_range(0..pts.len());
            let j = rng.gen_range(0..pts.len());
            if i == j {
                continue;
            }
            match line_through(&pts[i], &pts[j]) {
                Ok(l) => l,
                Err(_) => continue,
            }
        } else if style == 1 && !pts.is_empty() {
            // line through one existing point and one fresh random point
            let i = rng.gen_range(0..pts.len());
            let q = loop {
                if let Ok(p) = ProjPoint::from_ints(
                    rng.gen_range(-6i64..=6),
                    rng.gen_range(-6i64..=6),
                    rng.gen_range(-6i64..=6),
                ) {
                    break p;
                }
            };
            match line_through(&pts[i], &q) {
                Ok(l) => l,
                Err(_) => continue,
            }
        } else {
            random_line(&mut rng)
        };
        if !lines.contains(&candidate) {
            lines.push(candidate);
        }
    }
    Arrangement::new(lines, 1).expect("distinct rational lines")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(a: i64, b: i64, c: i64) -> ProjLine {
        ProjLine::from_ints(a, b, c).unwrap()
    }

    #[test]
    fn coordinate_axes_intersection() {
        let p = intersect(&line(1, 0, 0), &line(0, 1, 0)).unwrap();
        assert_eq!(p, ProjPoint::from_ints(0, 0, 1).unwrap());
    }

    #[test]
    fn fs_lines_intersection() {
        // L3: y = z and L4: x + y = z meet at [0:1:1]
        let p = intersect(&line(0, 1, -1), &line(1, 1, -1)).unwrap();
        assert_eq!(p, ProjPoint::from_ints(0, 1, 1).unwrap());
    }

    #[test]
    fn equal_lines_rejected() {
        let l = line(2, 3, -1);
        assert!(matches!(intersect(&l, &l), Err(GeometryError::EqualLines)));
        let l2 = ProjLine::from_ints(4, 6, -2).unwrap();
        assert!(matches!(intersect(&l, &l2), Err(GeometryError::EqualLines)));
    }

    #[test]
    fn line_through_points() {
        let p = ProjPoint::from_ints(0, 0, 1).unwrap();
        let q = ProjPoint::from_ints(0, 1, 0).unwrap();
        assert_eq!(line_through(&p, &q).unwrap(), line(1, 0, 0));
        assert!(matches!(
            line_through(&p, &p),
            Err(GeometryError::EqualPoints)
        ));
    }

    #[test]
    fn two_lines_have_no_multiples() {
        let arr = Arrangement::new(vec![line(1, 0, 0), line(0, 1, 0)], 1).unwrap();
        assert!(incidence_of(&arr).multiples().is_empty());
    }

    #[test]
    fn pencil_of_three() {
        let arr =
            Arrangement::new(vec![line(1, 0, 0), line(0, 1, 0), line(1, 1, 0)], 1).unwrap();
        let s = incidence_of(&arr);
        assert_eq!(s.multiples(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn identity_transform_is_noop() {
        let arr = random_rational_arrangement(6, 7);
        let img = apply_transform(&arr, &ProjTransform::identity()).unwrap();
        assert_eq!(arr, img);
    }

    #[test]
    fn transform_preserves_incidence() {
        let arr = random_rational_arrangement(7, 42);
        let t = ProjTransform::from_ints([[1, 2, 0], [0, 1, 3], [1, 0, 1]]).unwrap();
        let img = apply_transform(&arr, &t).unwrap();
        assert_eq!(incidence_of(&arr), incidence_of(&img));
        // point/line incidence commutes with the action
        let p = intersect(&arr.lines()[0], &arr.lines()[1]).unwrap();
        let q = t.apply_point(&p).unwrap();
        assert!(img.lines()[0].contains(&q) && img.lines()[1].contains(&q));
    }

    #[test]
    fn transforms_compose() {
        let t = ProjTransform::from_ints([[1, 2, 0], [0, 1, 3], [1, 0, 1]]).unwrap();
        let s = ProjTransform::from_ints([[2, 0, 1], [1, 1, 0], [0, 1, 1]]).unwrap();
        let arr = random_rational_arrangement(5, 3);
        let one = apply_transform(&apply_transform(&arr, &t).unwrap(), &s).unwrap();
        let both = apply_transform(&arr, &t.compose(&s).unwrap()).unwrap();
        assert_eq!(one, both);
    }

    #[test]
    fn singular_matrix_rejected() {
        assert!(matches!(
            ProjTransform::from_ints([[1, 2, 3], [2, 4, 6], [0, 0, 1]]),
            Err(GeometryError::SingularMatrix)
        ));
    }

    #[test]
    fn conjugation_fixes_rational_arrangements() {
        let arr = random_rational_arrangement(6, 11);
        assert_eq!(conjugate_arrangement(&arr), arr);
    }

    #[test]
    fn arrangement_json_round_trip() {
        let arr = random_rational_arrangement(5, 9);
        let json = serde_json::to_string(&arr).unwrap();
        let back: Arrangement = serde_json::from_str(&json).unwrap();
        assert_eq!(arr, back);
    }

    #[test]
    fn duplicate_lines_rejected() {
        assert!(matches!(
            Arrangement::new(vec![line(1, 0, 0), line(2, 0, 0)], 1),
            Err(GeometryError::DuplicateLines)
        ));
    }
}
