//! Named arrangements with exact coordinates and their expected
//! incidence structures. Every entry is self-checking: the computed
//! incidence of the coordinates equals the stored lattice index-for-index.

use crate::exact::QuadExt;
use crate::geometry::{Arrangement, ProjLine};
use crate::lattice::IncidenceStructure;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn factor(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    fn suffix(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NineThree {
    A,
    B,
    C,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub arrangement: Arrangement,
    pub expected_lattice: IncidenceStructure,
    pub notes: String,
}

fn q(a_num: i64, a_den: i64, b_num: i64, b_den: i64, d: i64) -> QuadExt {
    QuadExt::new(
        crate::exact::Rational::new(a_num.into(), a_den.into()),
        crate::exact::Rational::new(b_num.into(), b_den.into()),
        d,
    )
    .expect("valid field constant")
}

fn line(coeffs: [QuadExt; 3]) -> ProjLine {
    ProjLine::new(coeffs).expect("nonzero line triple")
}

fn int(n: i64) -> QuadExt {
    QuadExt::from_int(n)
}

fn lattice(n: usize, multiples: &[&[usize]]) -> IncidenceStructure {
    IncidenceStructure::new(n, multiples.iter().map(|s| s.to_vec()).collect())
        .expect("catalog lattice is valid")
}

/// MacLane arrangement: 8 lines over Q(sqrt(-3)) with parameter
/// w = (1 ± sqrt(-3))/2, eight triple points, each line in exactly three.
pub fn maclane(sign: Sign) -> CatalogEntry {
    let w = q(1, 2, sign.factor(), 2, -3);
    let lines = vec![
        line([int(1), int(0), int(0)]),                  // x
        line([int(0), int(1), int(0)]),                  // y
        line([int(1), int(0), int(-1)]),                 // x - z
        line([int(0), int(1), int(-1)]),                 // y - z
        line([int(1), int(-1), int(0)]),                 // x - y
        line([int(1), int(0), &int(0) - &w]),            // x - w z
        line([int(0), int(1), &int(0) - &w]),            // y - w z
        line([&w - &int(1), int(-1), int(1)]),           // (w-1)x - y + z
    ];
    CatalogEntry {
        name: format!("maclane{}", sign.suffix()),
        arrangement: Arrangement::new(lines, -3).expect("valid MacLane coordinates"),
        expected_lattice: lattice(
            8,
            &[
                &[0, 1, 4],
                &[0, 2, 5],
                &[0, 3, 7],
                &[1, 3, 6],
                &[1, 5, 7],
                &[2, 3, 4],
                &[2, 6, 7],
                &[4, 5, 6],
            ],
        ),
        notes: "MacLane arrangement: eight lines, eight triple points, each line through \
                exactly three; the two signs are complex conjugates and not projectively \
                equivalent (Example 2.2)."
            .into(),
    }
}

/// Falk–Sturmfels arrangement: 9 lines over Q(sqrt(5)) with parameter
/// g = (1 ± sqrt(5))/2; one quadruple point and eight triple points.
pub fn falk_sturmfels(sign: Sign) -> CatalogEntry {
    let g = q(1, 2, sign.factor(), 2, 5);
    let lines = vec![
        line([int(1), int(0), int(0)]),                   // L1: x = 0
        line([int(1), &int(0) - &g, g.clone()]),          // L2: x = g(y - z)
        line([int(0), int(1), int(-1)]),                  // L3: y = z
        line([int(1), int(1), int(-1)]),                  // L4: x + y = z
        line([int(1), int(0), int(-1)]),                  // K1: x = z
        line([int(1), &int(0) - &g, int(0)]),             // K2: x = g y
        line([int(0), int(1), int(0)]),                   // K3: y = 0
        line([int(1), int(1), &int(-1) - &g]),            // K4: x + y = (1+g)z
        line([int(0), int(0), int(1)]),                   // H9: z = 0
    ];
    CatalogEntry {
        name: format!("fs{}", sign.suffix()),
        arrangement: Arrangement::new(lines, 5).expect("valid Falk-Sturmfels coordinates"),
        expected_lattice: lattice(
            9,
            &[
                &[0, 1, 2, 3],
                &[0, 4, 8],
                &[0, 5, 6],
                &[1, 4, 7],
                &[1, 5, 8],
                &[2, 5, 7],
                &[2, 6, 8],
                &[3, 4, 6],
                &[3, 7, 8],
            ],
        ),
        notes: "Falk-Sturmfels arrangement: nine lines with one quadruple point and eight \
                triple points; the parameter is a root of x^2 - x - 1 and the two signs are \
                the two moduli points (Example 2.3)."
            .into(),
    }
}

/// The arrangement A^{± sqrt(-1)}: 9 lines over Q(sqrt(-1)) with ten
/// triple points; three pairwise non-concurrent lines carry four triples
/// each, the other six carry exactly three.
pub fn a_pm_i(sign: Sign) -> CatalogEntry {
    let i = q(0, 1, sign.factor(), 1, -1);
    let lines = vec![
        line([int(1), int(0), int(0)]),                   // x
        line([int(0), int(1), int(0)]),                   // y
        line([int(1), int(0), int(-1)]),                  // x - z
        line([int(0), int(1), int(-1)]),                  // y - z
        line([int(1), int(0), &int(0) - &i]),             // x - i z
        line([int(0), int(1), &int(0) - &i]),             // y - i z
        line([int(1), int(-1), int(0)]),                  // x - y
        line([&i - &int(1), i.clone(), int(1)]),          // (i-1)x + i y + z
        line([&int(1) - &i, int(1), int(-1)]),            // (1-i)x + y - z
    ];
    CatalogEntry {
        name: format!("a_pm_i{}", sign.suffix()),
        arrangement: Arrangement::new(lines, -1).expect("valid A^{+-i} coordinates"),
        expected_lattice: lattice(
            9,
            &[
                &[0, 1, 6],
                &[0, 2, 4],
                &[0, 3, 8],
                &[0, 5, 7],
                &[1, 3, 5],
                &[1, 7, 8],
                &[2, 3, 6],
                &[2, 5, 8],
                &[3, 4, 7],
                &[4, 5, 6],
            ],
        ),
        notes: "The arrangement A^{+-sqrt(-1)}: nine lines and ten triple points; the two \
                signs are complex conjugates and form a two-point moduli space (Example 2.4)."
            .into(),
    }
}

/// The three 9_3 configurations realized with rational coordinates:
/// nine lines, nine triple points, each line through exactly three.
pub fn nine_three(which: NineThree) -> CatalogEntry {
    let (tag, coords, mults): (&str, [[i64; 3]; 9], [[usize; 3]; 9]) = match which {
        NineThree::A => (
            "a",
            [
                [1, 0, 0],
                [0, 1, 0],
                [-2, 1, 0],
                [0, 0, 1],
                [-2, 0, 1],
                [1, 1, 1],
                [-2, 3, 3],
                [0, 2, 3],
                [2, -3, 2],
            ],
            [
                [0, 1, 2],
                [0, 3, 4],
                [0, 5, 6],
                [1, 3, 7],
                [1, 5, 8],
                [2, 4, 8],
                [2, 6, 7],
                [3, 6, 8],
                [4, 5, 7],
            ],
        ),
        NineThree::B => (
            "b",
            [
                [1, 0, 0],
                [0, 1, 0],
                [1, -1, 0],
                [0, 0, 1],
                [3, 0, 1],
                [0, 1, 1],
                [1, 1, 1],
                [3, -1, 1],
                [3, -3, -1],
            ],
            [
                [0, 1, 2],
                [0, 3, 4],
                [0, 5, 6],
                [1, 3, 5],
                [1, 4, 7],
                [2, 3, 8],
                [2, 6, 7],
                [4, 6, 8],
                [5, 7, 8],
            ],
        ),
        NineThree::C => (
            "c",
            [
                [1, 0, 0],
                [0, 1, 0],
                [1, -1, 0],
                [0, 0, 1],
                [3, 0, 2],
                [0, 1, 1],
                [1, 1, 1],
                [3, 1, 2],
                [3, 3, 4],
            ],
            [
                [0, 1, 2],
                [0, 3, 4],
                [0, 5, 6],
                [1, 3, 5],
                [1, 4, 7],
                [2, 4, 8],
                [2, 6, 7],
                [3, 6, 8],
                [5, 7, 8],
            ],
        ),
    };
    let lines = coords
        .iter()
        .map(|&[a, b, c]| line([int(a), int(b), int(c)]))
        .collect();
    let mult_refs: Vec<Vec<usize>> = mults.iter().map(|m| m.to_vec()).collect();
    CatalogEntry {
        name: format!("nine_three_{tag}"),
        arrangement: Arrangement::new(lines, 1).expect("valid 9_3 coordinates"),
        expected_lattice: IncidenceStructure::new(9, mult_refs).expect("valid 9_3 lattice"),
        notes: "A rational realization of one of the three 9_3 configurations: nine lines, \
                nine triple points, each line through exactly three (Prop 3.9)."
            .into(),
    }
}

/// Extended Falk–Sturmfels arrangement: FS plus the tenth line H10
/// through the quadruple point and two double points of FS; the FS
/// quadruple point becomes a quintuple point.
pub fn extended_falk_sturmfels(sign: Sign) -> CatalogEntry {
    let fs = falk_sturmfels(sign);
    let g = q(1, 2, sign.factor(), 2, 5);
    // H10: y = (1/g - 1)x + z, and 1/g = g - 1, so the slope is g - 2
    let h10 = line([&g - &int(2), int(-1), int(1)]);
    let mut lines = fs.arrangement.lines().to_vec();
    lines.push(h10);
    CatalogEntry {
        name: format!("ext_fs{}", sign.suffix()),
        arrangement: Arrangement::new(lines, 5).expect("valid extended FS coordinates"),
        expected_lattice: lattice(
            10,
            &[
                &[0, 1, 2, 3, 9],
                &[0, 4, 8],
                &[0, 5, 6],
                &[1, 4, 7],
                &[1, 5, 8],
                &[2, 5, 7],
                &[2, 6, 8],
                &[3, 4, 6],
                &[3, 7, 8],
                &[4, 5, 9],
                &[6, 7, 9],
            ],
        ),
        notes: "Falk-Sturmfels plus the line H10 through three collinear points of the FS \
                lattice; H10 passes through the quadruple point, making it quintuple (Section 4)."
            .into(),
    }
}

/// All eleven catalog entries in canonical order.
pub fn all_entries() -> Vec<CatalogEntry> {
    vec![
        maclane(Sign::Plus),
        maclane(Sign::Minus),
        falk_sturmfels(Sign::Plus),
        falk_sturmfels(Sign::Minus),
        a_pm_i(Sign::Plus),
        a_pm_i(Sign::Minus),
        nine_three(NineThree::A),
        nine_three(NineThree::B),
        nine_three(NineThree::C),
        extended_falk_sturmfels(Sign::Plus),
        extended_falk_sturmfels(Sign::Minus),
    ]
}

pub fn by_name(name: &str) -> Option<CatalogEntry> {
    all_entries().into_iter().find(|e| e.name == name)
}
