//! Abstract incidence structures of line arrangements: multiplicity
//! profiles, the Hirzebruch counting filter, isomorphism testing, and the
//! covering predicates used by the nine-line classification.

use std::collections::BTreeMap;
use std::fmt;

use num::rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("invalid incidence structure: {0}")]
    InvalidStructure(String),
    #[error("multiplicity counts exceed the available line pairs")]
    InconsistentStructure,
    #[error("consistency violation: {0}")]
    ConsistencyViolation(String),
}

type Result<T> = std::result::Result<T, LatticeError>;

/// An abstract intersection lattice: `n` lines plus the family of
/// concurrent index-sets of size >= 3. Double points are implicit.
/// Indices are 0-based internally; the JSON form is 1-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IncidenceStructure {
    n: usize,
    multiples: Vec<Vec<usize>>,
}

impl IncidenceStructure {
    pub fn new(n: usize, mut multiples: Vec<Vec<usize>>) -> Result<Self> {
        for set in multiples.iter_mut() {
            set.sort_unstable();
            set.dedup();
            if set.len() < 3 {
                return Err(LatticeError::InvalidStructure(
                    "multiple point with fewer than 3 lines".into(),
                ));
            }
            if set.last().copied().unwrap_or(0) >= n {
                return Err(LatticeError::InvalidStructure(
                    "line index out of range".into(),
                ));
            }
        }
        multiples.sort();
        multiples.dedup();
        for i in 0..multiples.len() {
            for j in i + 1..multiples.len() {
                let shared = multiples[i]
                    .iter()
                    .filter(|x| multiples[j].contains(x))
                    .count();
                if shared > 1 {
                    return Err(LatticeError::InvalidStructure(format!(
                        "sets {:?} and {:?} share more than one line",
                        multiples[i], multiples[j]
                    )));
                }
            }
        }
        Ok(IncidenceStructure { n, multiples })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn multiples(&self) -> &[Vec<usize>] {
        &self.multiples
    }

    /// Indices of the multiple sets containing line `i`.
    pub fn incident_multiples(&self, i: usize) -> Vec<usize> {
        (0..self.multiples.len())
            .filter(|&m| self.multiples[m].contains(&i))
            .collect()
    }

    /// Applies a permutation of line indices (`perm[old] = new`).
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(LatticeError::InvalidStructure(
                "permutation length mismatch".into(),
            ));
        }
        let multiples = self
            .multiples
            .iter()
            .map(|set| set.iter().map(|&i| perm[i]).collect())
            .collect();
        IncidenceStructure::new(self.n, multiples)
    }

    /// Restriction to a subset of lines, keeping concurrencies that still
    /// involve at least 3 of the kept lines. `keep` must be sorted; kept
    /// lines are reindexed by their position in `keep`.
    pub fn restrict(&self, keep: &[usize]) -> Result<Self> {
        let pos: BTreeMap<usize, usize> =
            keep.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let multiples = self
            .multiples
            .iter()
            .map(|set| {
                set.iter()
                    .filter_map(|i| pos.get(i).copied())
                    .collect::<Vec<_>>()
            })
            .filter(|set: &Vec<usize>| set.len() >= 3)
            .collect();
        IncidenceStructure::new(keep.len(), multiples)
    }
}

impl fmt::Debug for IncidenceStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IncidenceStructure(n={}, multiples={:?})", self.n, self.multiples)
    }
}

#[derive(Serialize, Deserialize)]
struct LatticeJson {
    n: usize,
    multiples: Vec<Vec<usize>>,
}

impl Serialize for IncidenceStructure {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let multiples = self
            .multiples
            .iter()
            .map(|set| set.iter().map(|i| i + 1).collect())
            .collect();
        LatticeJson { n: self.n, multiples }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IncidenceStructure {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error;
        let raw = LatticeJson::deserialize(d)?;
        let mut multiples = vec![];
        for set in raw.multiples {
            let mut zero_based = vec![];
            for i in set {
                if i == 0 {
                    return Err(D::Error::custom("line indices are 1-based"));
                }
                zero_based.push(i - 1);
            }
            multiples.push(zero_based);
        }
        IncidenceStructure::new(raw.n, multiples).map_err(D::Error::custom)
    }
}

/// Point counts by multiplicity, with `n_2` derived from the pair-count
/// identity `C(n,2) = sum_r n_r * C(r,2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityProfile {
    pub counts: BTreeMap<usize, usize>,
    pub n: usize,
    pub m_max: usize,
}

fn choose2(k: usize) -> usize {
    k * (k.saturating_sub(1)) / 2
}

pub fn profile_of(s: &IncidenceStructure) -> Result<MultiplicityProfile> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    let mut used_pairs = 0usize;
    for set in s.multiples() {
        *counts.entry(set.len()).or_insert(0) += 1;
        used_pairs += choose2(set.len());
    }
    let total = choose2(s.n());
    if used_pairs > total {
        return Err(LatticeError::InconsistentStructure);
    }
    let n2 = total - used_pairs;
    if n2 > 0 {
        counts.insert(2, n2);
    }
    let m_max = counts.keys().copied().max().unwrap_or(2).max(2);
    Ok(MultiplicityProfile { counts, n: s.n(), m_max })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HirzebruchVerdict {
    Pass,
    Fail,
    NotApplicable,
}

/// Hirzebruch-type counting inequality for complex line arrangements of
/// `t` lines with no point of multiplicity `t`, `t-1`, or `t-2`:
/// `n_2 + (3/4) n_3 >= t + sum_{r>=5} (2r-9) n_r`. Failure certifies
/// non-realizability over the complex numbers.
pub fn hirzebruch_filter(p: &MultiplicityProfile) -> HirzebruchVerdict {
    let t = p.n;
    let count = |r: usize| p.counts.get(&r).copied().unwrap_or(0);
    for r in [t, t.saturating_sub(1), t.saturating_sub(2)] {
        if r >= 2 && count(r) > 0 {
            return HirzebruchVerdict::NotApplicable;
        }
    }
    let lhs = Ratio::from_integer(count(2) as i64)
        + Ratio::new(3, 4) * Ratio::from_integer(count(3) as i64);
    let mut rhs = Ratio::from_integer(t as i64);
    for (&r, &nr) in &p.counts {
        if r >= 5 {
            rhs += Ratio::from_integer((2 * r as i64 - 9) * nr as i64);
        }
    }
    if lhs >= rhs {
        HirzebruchVerdict::Pass
    } else {
        HirzebruchVerdict::Fail
    }
}

/// A lattice isomorphism witness: `perm[i]` is the image of line `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeIso {
    pub perm: Vec<usize>,
}

impl LatticeIso {
    /// Checks that the permutation maps the multiples of `s1` exactly onto
    /// those of `s2`.
    pub fn validates(&self, s1: &IncidenceStructure, s2: &IncidenceStructure) -> bool {
        if s1.n() != s2.n() || self.perm.len() != s1.n() {
            return false;
        }
        let mut seen = vec![false; s1.n()];
        for &v in &self.perm {
            if v >= s1.n() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        match s1.relabel(&self.perm) {
            Ok(image) => image == *s2,
            Err(_) => false,
        }
    }

    pub fn inverse(&self) -> LatticeIso {
        let mut inv = vec![0; self.perm.len()];
        for (i, &v) in self.perm.iter().enumerate() {
            inv[v] = i;
        }
        LatticeIso { perm: inv }
    }
}

/// Pairwise "color": size of the (unique) multiple shared by two lines,
/// or 0 if they meet at a double point.
fn pair_color(s: &IncidenceStructure, i: usize, j: usize) -> usize {
    s.multiples()
        .iter()
        .find(|set| set.contains(&i) && set.contains(&j))
        .map(|set| set.len())
        .unwrap_or(0)
}

/// Iterative partition refinement: each line's class starts from the
/// sorted multiset of its incident multiple sizes and is refined by the
/// classes it meets at each color until stable. Returns class ids.
fn refine_classes(s: &IncidenceStructure) -> Vec<usize> {
    let n = s.n();
    let mut invariants: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let mut sizes: Vec<usize> = s
                .incident_multiples(i)
                .iter()
                .map(|&m| s.multiples()[m].len())
                .collect();
            sizes.sort_unstable();
            sizes
        })
        .collect();
    let mut classes = assign_classes(&invariants);
    loop {
        invariants = (0..n)
            .map(|i| {
                let mut sig = vec![classes[i]];
                let mut neigh: Vec<(usize, usize)> = (0..n)
                    .filter(|&j| j != i)
                    .map(|j| (pair_color(s, i, j), classes[j]))
                    .collect();
                neigh.sort_unstable();
                sig.extend(neigh.into_iter().flat_map(|(c, k)| [c, k]));
                sig
            })
            .collect();
        let next = assign_classes(&invariants);
        if next == classes {
            return classes;
        }
        classes = next;
    }
}

fn assign_classes(invariants: &[Vec<usize>]) -> Vec<usize> {
    let mut sorted: Vec<&Vec<usize>> = invariants.iter().collect();
    sorted.sort();
    sorted.dedup();
    invariants
        .iter()
        .map(|inv| sorted.binary_search(&inv).unwrap())
        .collect()
}

/// Searches for a lattice isomorphism from `s1` to `s2` by partition
/// refinement followed by backtracking; returns the lexicographically
/// least witness (in image order over the fixed variable order) or `None`.
pub fn find_isomorphism(
    s1: &IncidenceStructure,
    s2: &IncidenceStructure,
) -> Option<LatticeIso> {
    if s1.n() != s2.n() {
        return None;
    }
    let n = s1.n();
    let mut sizes1: Vec<usize> = s1.multiples().iter().map(Vec::len).collect();
    let mut sizes2: Vec<usize> = s2.multiples().iter().map(Vec::len).collect();
    sizes1.sort_unstable();
    sizes2.sort_unstable();
    if sizes1 != sizes2 {
        return None;
    }
    let c1 = refine_classes(s1);
    let c2 = refine_classes(s2);
    // class populations must match
    let hist = |c: &[usize]| {
        let mut h = BTreeMap::new();
        for &x in c {
            *h.entry(x).or_insert(0usize) += 1;
        }
        h
    };
    if hist(&c1) != hist(&c2) {
        return None;
    }

    // variable order: rarest class first, then index
    let mut order: Vec<usize> = (0..n).collect();
    let pop1 = hist(&c1);
    order.sort_by_key(|&i| (pop1[&c1[i]], c1[i], i));

    let mut image = vec![usize::MAX; n]; // image[line in s1]
    let mut used = vec![false; n];

    fn backtrack(
        depth: usize,
        order: &[usize],
        s1: &IncidenceStructure,
        s2: &IncidenceStructure,
        c1: &[usize],
        c2: &[usize],
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == order.len() {
            let iso = LatticeIso { perm: image.clone() };
            return iso.validates(s1, s2);
        }
        let u = order[depth];
        for v in 0..s2.n() {
            if used[v] || c2[v] != c1[u] {
                continue;
            }
            let ok = order[..depth].iter().all(|&w| {
                pair_color(s1, u, w) == pair_color(s2, v, image[w])
            });
            if !ok {
                continue;
            }
            image[u] = v;
            used[v] = true;
            if backtrack(depth + 1, order, s1, s2, c1, c2, image, used) {
                return true;
            }
            image[u] = usize::MAX;
            used[v] = false;
        }
        false
    }

    if backtrack(0, &order, s1, s2, &c1, &c2, &mut image, &mut used) {
        Some(LatticeIso { perm: image })
    } else {
        None
    }
}

/// If at most three lines cover every multiple point, returns the
/// lexicographically least such cover (possibly fewer than 3 indices).
pub fn is_c_le_3(s: &IncidenceStructure) -> Option<Vec<usize>> {
    let covers = |cover: &[usize]| {
        s.multiples()
            .iter()
            .all(|set| set.iter().any(|i| cover.contains(i)))
    };
    if covers(&[]) {
        return Some(vec![]);
    }
    let n = s.n();
    for i in 0..n {
        if covers(&[i]) {
            return Some(vec![i]);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if covers(&[i, j]) {
                return Some(vec![i, j]);
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if covers(&[i, j, k]) {
                    return Some(vec![i, j, k]);
                }
            }
        }
    }
    None
}

/// Which clause of the simple-C<=3 definition fired.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SimpleClause {
    /// The covering lines share a common point.
    CommonPoint,
    /// The given cover line carries at most one multiple point besides
    /// those at pairwise intersections of the cover lines.
    SparseCoverLine(usize),
}

/// Simple C<=3 test: some cover of <= 3 lines has either a common point
/// or a cover line with at most one multiple point away from the pairwise
/// intersections of the cover. Tries every valid cover before answering
/// `None`.
pub fn is_simple_c_le_3(s: &IncidenceStructure) -> Option<(Vec<usize>, SimpleClause)> {
    let covers = |cover: &[usize]| {
        s.multiples()
            .iter()
            .all(|set| set.iter().any(|i| cover.contains(i)))
    };
    let n = s.n();
    let mut candidates: Vec<Vec<usize>> = vec![vec![]];
    for i in 0..n {
        candidates.push(vec![i]);
    }
    for i in 0..n {
        for j in i + 1..n {
            candidates.push(vec![i, j]);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                candidates.push(vec![i, j, k]);
            }
        }
    }
    candidates.sort_by_key(|c| (c.len(), c.clone()));
    for cover in &candidates {
        if !covers(cover) {
            continue;
        }
        if cover.len() <= 2 {
            // zero, one, or two lines always share a common point
            return Some((cover.clone(), SimpleClause::CommonPoint));
        }
        // clause 1: the three cover lines are concurrent
        if s.multiples()
            .iter()
            .any(|set| cover.iter().all(|i| set.contains(i)))
        {
            return Some((cover.clone(), SimpleClause::CommonPoint));
        }
        // clause 2: some cover line has <= 1 multiple point that is not a
        // pairwise intersection of the cover lines
        for &l in cover {
            let extra = s
                .multiples()
                .iter()
                .filter(|set| {
                    set.contains(&l)
                        && set.iter().filter(|i| cover.contains(i)).count() < 2
                })
                .count();
            if extra <= 1 {
                return Some((cover.clone(), SimpleClause::SparseCoverLine(l)));
            }
        }
    }
    None
}

/// A six-line sub-structure consisting of two concurrent triples whose
/// nine cross intersections are all distinct double points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubArrangementWitness {
    /// The six line indices: first triple then second triple.
    pub lines: [usize; 6],
    pub first_triple: [usize; 3],
    pub second_triple: [usize; 3],
    /// The nine cross pairs `(L_i, L_{j+3})`, each a double point of the
    /// six-line sub-structure.
    pub doubles: Vec<(usize, usize)>,
}

impl SubArrangementWitness {
    pub fn validates(&self, s: &IncidenceStructure) -> bool {
        validate_as(s, &self.first_triple, &self.second_triple)
    }
}

fn validate_as(s: &IncidenceStructure, t1: &[usize; 3], t2: &[usize; 3]) -> bool {
    if t1.iter().any(|i| t2.contains(i)) {
        return false;
    }
    let concurrent = |t: &[usize; 3]| {
        s.multiples()
            .iter()
            .any(|set| t.iter().all(|i| set.contains(i)))
    };
    if !concurrent(t1) || !concurrent(t2) {
        return false;
    }
    let six: Vec<usize> = t1.iter().chain(t2.iter()).copied().collect();
    for &i in t1 {
        for &j in t2 {
            // the point L_i ∩ L_j must be a double point of the six lines
            let bad = s.multiples().iter().any(|set| {
                set.contains(&i)
                    && set.contains(&j)
                    && set.iter().filter(|x| six.contains(x)).count() >= 3
            });
            if bad {
                return false;
            }
        }
    }
    true
}

/// Searches for the two-concurrent-triples pattern. On an input that is
/// not simple C<=3, absence of a witness contradicts the supporting lemma
/// and is surfaced as a consistency violation.
pub fn find_as(s: &IncidenceStructure) -> Result<Option<SubArrangementWitness>> {
    // candidate concurrent triples: all 3-subsets of multiples, ordered
    let mut triples: Vec<[usize; 3]> = vec![];
    for set in s.multiples() {
        let k = set.len();
        for a in 0..k {
            for b in a + 1..k {
                for c in b + 1..k {
                    triples.push([set[a], set[b], set[c]]);
                }
            }
        }
    }
    triples.sort();
    triples.dedup();
    for t1 in &triples {
        for t2 in &triples {
            if t1 >= t2 {
                continue;
            }
            if validate_as(s, t1, t2) {
                let mut doubles = vec![];
                for &i in t1 {
                    for &j in t2 {
                        doubles.push((i, j));
                    }
                }
                return Ok(Some(SubArrangementWitness {
                    lines: [t1[0], t1[1], t1[2], t2[0], t2[1], t2[2]],
                    first_triple: *t1,
                    second_triple: *t2,
                    doubles,
                }));
            }
        }
    }
    if is_simple_c_le_3(s).is_none() {
        return Err(LatticeError::ConsistencyViolation(
            "non-simple structure with no two-triple sub-arrangement witness".into(),
        ));
    }
    Ok(None)
}

/// Line indices incident to at most `k` multiple points.
pub fn lines_with_few_multiples(s: &IncidenceStructure, k: usize) -> Vec<usize> {
    (0..s.n())
        .filter(|&i| s.incident_multiples(i).len() <= k)
        .collect()
}

/// Removes line `i`, dropping concurrencies that fall below size 3 and
/// reindexing the remaining lines.
pub fn delete_line(s: &IncidenceStructure, i: usize) -> IncidenceStructure {
    let keep: Vec<usize> = (0..s.n()).filter(|&j| j != i).collect();
    s.restrict(&keep).expect("restriction of a valid structure")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn structure(n: usize, multiples: &[&[usize]]) -> IncidenceStructure {
        IncidenceStructure::new(n, multiples.iter().map(|s| s.to_vec()).collect()).unwrap()
    }

    fn maclane() -> IncidenceStructure {
        structure(
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
        )
    }

    fn fs() -> IncidenceStructure {
        structure(
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
        )
    }

    #[test]
    fn validation_rejects_two_shared_lines() {
        assert!(IncidenceStructure::new(5, vec![vec![0, 1, 2], vec![0, 1, 3]]).is_err());
        assert!(IncidenceStructure::new(5, vec![vec![0, 1]]).is_err());
        assert!(IncidenceStructure::new(3, vec![vec![0, 1, 3]]).is_err());
    }

    #[test]
    fn maclane_profile() {
        let p = profile_of(&maclane()).unwrap();
        assert_eq!(p.counts, BTreeMap::from([(3, 8), (2, 4)]));
        assert_eq!(p.m_max, 3);
    }

    #[test]
    fn fs_profile() {
        let p = profile_of(&fs()).unwrap();
        assert_eq!(p.counts, BTreeMap::from([(4, 1), (3, 8), (2, 6)]));
        assert_eq!(p.m_max, 4);
    }

    #[test]
    fn triangle_profile() {
        let p = profile_of(&structure(3, &[])).unwrap();
        assert_eq!(p.counts, BTreeMap::from([(2, 3)]));
        assert_eq!(p.m_max, 2);
    }

    #[test]
    fn hirzebruch_verdicts() {
        assert_eq!(hirzebruch_filter(&profile_of(&maclane()).unwrap()), HirzebruchVerdict::Pass);
        // t=9, {5:2, 3:5, 2:1}: LHS 1 + 15/4 < RHS 9 + 2
        let p = MultiplicityProfile {
            counts: BTreeMap::from([(5, 2), (3, 5), (2, 1)]),
            n: 9,
            m_max: 5,
        };
        assert_eq!(hirzebruch_filter(&p), HirzebruchVerdict::Fail);
        let p = MultiplicityProfile {
            counts: BTreeMap::from([(7, 1), (2, 15)]),
            n: 9,
            m_max: 7,
        };
        assert_eq!(hirzebruch_filter(&p), HirzebruchVerdict::NotApplicable);
    }

    #[test]
    fn iso_reflexive_and_relabeling() {
        let s = fs();
        let id = find_isomorphism(&s, &s).unwrap();
        assert!(id.validates(&s, &s));
        let perm = vec![3, 5, 0, 8, 2, 7, 1, 6, 4];
        let t = s.relabel(&perm).unwrap();
        let w = find_isomorphism(&s, &t).unwrap();
        assert!(w.validates(&s, &t));
        assert!(w.inverse().validates(&t, &s));
    }

    #[test]
    fn iso_distinguishes() {
        assert!(find_isomorphism(&fs(), &maclane()).is_none());
        // fs vs fs with one triple moved
        let other = structure(
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
            ],
        );
        assert!(find_isomorphism(&fs(), &other).is_none());
    }

    #[test]
    fn cover_predicates() {
        // all multiples through line 0
        let s = structure(6, &[&[0, 1, 2], &[0, 3, 4]]);
        assert_eq!(is_c_le_3(&s), Some(vec![0]));
        let simple = is_simple_c_le_3(&s).unwrap();
        assert_eq!(simple.0, vec![0]);
        // MacLane is not C<=3
        assert!(is_c_le_3(&maclane()).is_none());
        assert!(is_simple_c_le_3(&maclane()).is_none());
        // FS is C<=3 (lines of the quadruple + one more can cover) or not —
        // it must at least not be simple
        assert!(is_simple_c_le_3(&fs()).is_none());
        // generic: no multiples at all
        let g = structure(5, &[]);
        assert_eq!(is_simple_c_le_3(&g).unwrap().1, SimpleClause::CommonPoint);
    }

    #[test]
    fn simple_implies_c_le_3() {
        let s = structure(7, &[&[0, 1, 2], &[0, 3, 4], &[1, 3, 5]]);
        if let Some((cover, _)) = is_simple_c_le_3(&s) {
            assert!(is_c_le_3(&s).is_some());
            assert!(cover.len() <= 3);
        }
    }

    #[test]
    fn find_as_on_maclane_and_fs() {
        let w = find_as(&maclane()).unwrap().unwrap();
        assert!(w.validates(&maclane()));
        assert_eq!(w.doubles.len(), 9);
        let w = find_as(&fs()).unwrap().unwrap();
        assert!(w.validates(&fs()));
    }

    #[test]
    fn few_multiples_and_deletion() {
        assert!(lines_with_few_multiples(&fs(), 2).is_empty());
        let g = structure(5, &[]);
        assert_eq!(lines_with_few_multiples(&g, 0), vec![0, 1, 2, 3, 4]);
        // delete H9 (index 8) from FS: quadruple survives
        let d = delete_line(&fs(), 8);
        assert_eq!(d.n(), 8);
        assert!(d.multiples().contains(&vec![0, 1, 2, 3]));
        // triangle
        let tri = structure(3, &[]);
        assert_eq!(delete_line(&tri, 1).n(), 2);
    }

    #[test]
    fn json_round_trip_one_based() {
        let s = maclane();
        let json = serde_json::to_string(&s).unwrap();
        assert!(json.contains("[1,2,5]"));
        let back: IncidenceStructure = serde_json::from_str(&json).unwrap();
        assert_eq!(s, back);
        // unsorted input tolerated
        let manual: IncidenceStructure =
            serde_json::from_str(r#"{"n":4,"multiples":[[3,1,2]]}"#).unwrap();
        assert_eq!(manual.multiples(), &[vec![0, 1, 2]]);
    }
}
