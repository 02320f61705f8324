//! Reconstruction of arrangements from an abstract incidence structure:
//! frame normalization, greedy incremental line placement over a
//! rational-function field, closure-polynomial extraction, and
//! degenerate-root filtering.

use num::{BigInt, Signed};
use serde::Serialize;
use thiserror::Error;

use super::mvpoly::{cross3, det3, proportional, MvPoly};
use crate::exact::{join_field, poly_roots_quadratic, ExactError, Poly, QuadExt, Rational};
use crate::geometry::{incidence_of, Arrangement, GeometryError, ProjLine};
use crate::lattice::{IncidenceStructure, LatticeError};

#[derive(Debug, Error)]
pub enum ModuliError {
    #[error("every four-line subset of the target has a concurrent triple")]
    NoFrame,
    #[error("no closure root survives the degeneracy filter")]
    Infeasible,
    #[error("closure polynomial has unsupported degree {0} after squarefree reduction")]
    UnsupportedDegree(usize),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

type Result<T> = std::result::Result<T, ModuliError>;

/// One step of a construction plan: which line is placed and how
/// constrained it is at that moment.
#[derive(Clone, Debug, Serialize)]
pub struct PlanSlot {
    pub line: usize,
    /// Already-determined points the line must pass through.
    pub determined_points: usize,
    /// Free parameters introduced: 0 (through >= 2 points), 1 (pencil
    /// through one point), or 2 (entirely free line).
    pub params_introduced: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionPlan {
    pub frame: [usize; 4],
    pub slots: Vec<PlanSlot>,
    pub free_parameters: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuliStatus {
    Points,
    IrreducibleFamily,
    Unsupported,
}

/// Outcome of a moduli computation for one incidence structure.
#[derive(Clone, Debug)]
pub struct ModuliReport {
    pub status: ModuliStatus,
    pub point_count: usize,
    pub closure_polynomial: Option<Poly>,
    pub splitting_field_d: Option<i64>,
    pub free_dimension: usize,
    pub degenerate_roots_rejected: usize,
    pub realizations: Vec<Arrangement>,
    pub detail: Option<String>,
}

impl Serialize for ModuliReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ModuliReport", 8)?;
        st.serialize_field("status", &self.status)?;
        st.serialize_field("point_count", &self.point_count)?;
        let closure: Option<Vec<String>> = self
            .closure_polynomial
            .as_ref()
            .map(|p| p.coeffs().iter().map(|c| c.to_string()).collect());
        st.serialize_field("closure_polynomial", &closure)?;
        st.serialize_field("splitting_field_d", &self.splitting_field_d)?;
        st.serialize_field("free_dimension", &self.free_dimension)?;
        st.serialize_field("degenerate_roots_rejected", &self.degenerate_roots_rejected)?;
        st.serialize_field("realizations", &self.realizations)?;
        st.serialize_field("detail", &self.detail)?;
        st.end()
    }
}

struct Symbolic {
    plan: ConstructionPlan,
    coords: Vec<[MvPoly; 3]>,
    nparams: usize,
    /// One polynomial per extra concurrency condition, in placement order.
    constraints: Vec<MvPoly>,
}

/// Two independent lines through a (possibly parameterized) point.
fn pencil_basis(p: &[MvPoly; 3], nvars: usize) -> ([MvPoly; 3], [MvPoly; 3]) {
    let axes: [[MvPoly; 3]; 3] = std::array::from_fn(|k| {
        std::array::from_fn(|j| MvPoly::from_int(nvars, (j == k) as i64))
    });
    let mut cands = vec![];
    for e in &axes {
        let c = cross3(p, e);
        if c.iter().any(|x| !x.is_zero()) {
            cands.push(c);
        }
    }
    let b1 = cands[0].clone();
    for c in cands.into_iter().skip(1) {
        if !proportional(&b1, &c) {
            return (b1, c);
        }
    }
    unreachable!("a projective point lies on at least two coordinate-axis pencil lines")
}

fn build_symbolic(target: &IncidenceStructure) -> Result<Symbolic> {
    let n = target.n();
    let nvars = 2 * n;
    // frame: lexicographically first 4 lines with no 3 concurrent
    let mut frame = None;
    'outer: for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let quad = [a, b, c, d];
                    let bad = target.multiples().iter().any(|m| {
                        quad.iter().filter(|i| m.contains(i)).count() >= 3
                    });
                    if !bad {
                        frame = Some(quad);
                        break 'outer;
                    }
                }
            }
        }
    }
    let frame = frame.ok_or(ModuliError::NoFrame)?;

    let mut coords: Vec<Option<[MvPoly; 3]>> = vec![None; n];
    let consts = |v: [i64; 3]| -> [MvPoly; 3] { v.map(|x| MvPoly::from_int(nvars, x)) };
    coords[frame[0]] = Some(consts([1, 0, 0]));
    coords[frame[1]] = Some(consts([0, 1, 0]));
    coords[frame[2]] = Some(consts([0, 0, 1]));
    coords[frame[3]] = Some(consts([1, 1, 1]));
    let mut placed: Vec<usize> = frame.to_vec();
    let mut nparams = 0usize;
    let mut slots = vec![];

    while placed.len() < n {
        // determined points available to each unplaced line
        let mut best: Option<(usize, Vec<[MvPoly; 3]>)> = None;
        for i in 0..n {
            if coords[i].is_some() {
                continue;
            }
            let mut pts: Vec<[MvPoly; 3]> = vec![];
            for m in target.multiples() {
                if !m.contains(&i) {
                    continue;
                }
                let done: Vec<usize> = m
                    .iter()
                    .copied()
                    .filter(|j| coords[*j].is_some())
                    .collect();
                if done.len() >= 2 {
                    let p = cross3(
                        coords[done[0]].as_ref().unwrap(),
                        coords[done[1]].as_ref().unwrap(),
                    );
                    if !pts.iter().any(|q| proportional(q, &p)) {
                        pts.push(p);
                    }
                }
            }
            if best.as_ref().map_or(true, |(_, bp)| pts.len() > bp.len()) {
                best = Some((i, pts));
            }
        }
        let (i, pts) = best.unwrap();
        let params_introduced;
        if pts.len() >= 2 {
            coords[i] = Some(cross3(&pts[0], &pts[1]));
            params_introduced = 0;
        } else if pts.len() == 1 {
            let (b1, b2) = pencil_basis(&pts[0], nvars);
            let t = MvPoly::var(nvars, nparams);
            coords[i] = Some(std::array::from_fn(|k| b1[k].add(&t.mul(&b2[k]))));
            nparams += 1;
            params_introduced = 1;
        } else {
            let s1 = MvPoly::var(nvars, nparams);
            let s2 = MvPoly::var(nvars, nparams + 1);
            coords[i] = Some([MvPoly::from_int(nvars, 1), s1, s2]);
            nparams += 2;
            params_introduced = 2;
        }
        slots.push(PlanSlot {
            line: i,
            determined_points: pts.len(),
            params_introduced,
        });
        placed.push(i);
    }

    let coords: Vec<[MvPoly; 3]> = coords.into_iter().map(Option::unwrap).collect();
    let mut constraints = vec![];
    for m in target.multiples() {
        for k in 2..m.len() {
            constraints.push(det3(&coords[m[0]], &coords[m[1]], &coords[m[k]]));
        }
    }
    Ok(Symbolic {
        plan: ConstructionPlan { frame, slots, free_parameters: nparams },
        coords,
        nparams,
        constraints,
    })
}

/// Greedy construction plan for a target lattice: frame of four lines in
/// general position, then each remaining line placed through as many
/// already-determined points as possible.
pub fn plan_construction(target: &IncidenceStructure) -> Result<ConstructionPlan> {
    Ok(build_symbolic(target)?.plan)
}

/// Deterministic list of rational sample values for parameters.
fn sample_values() -> Vec<Rational> {
    let nums = [2i64, 3, 5, -2, 7, -3, 1, 4, -1, 11, -5, 8, 13, -7, 9, -4];
    let dens = [1i64, 2, 3];
    let mut out = vec![];
    for &d in &dens {
        for &n in &nums {
            let v = Rational::new(BigInt::from(n), BigInt::from(d));
            if !out.contains(&v) {
                out.push(v);
            }
        }
    }
    out
}

/// Substitutes parameter values, canonicalizes, and accepts only if the
/// result is an arrangement of distinct lines whose incidence structure
/// equals the target index-for-index.
fn realize(
    coords: &[[MvPoly; 3]],
    values: &[QuadExt],
    field_d: i64,
    target: &IncidenceStructure,
) -> Option<Arrangement> {
    let mut lines = vec![];
    for triple in coords {
        let evaled: [QuadExt; 3] = [
            triple[0].eval_quad(values).ok()?,
            triple[1].eval_quad(values).ok()?,
            triple[2].eval_quad(values).ok()?,
        ];
        lines.push(ProjLine::new(evaled).ok()?);
    }
    let arr = Arrangement::new(lines, field_d).ok()?;
    if incidence_of(&arr) == *target {
        Some(arr)
    } else {
        None
    }
}

fn unsupported(detail: &str, free_dimension: usize) -> ModuliReport {
    ModuliReport {
        status: ModuliStatus::Unsupported,
        point_count: 0,
        closure_polynomial: None,
        splitting_field_d: None,
        free_dimension,
        degenerate_roots_rejected: 0,
        realizations: vec![],
        detail: Some(detail.to_string()),
    }
}

/// Square root of a rational if it is a perfect square.
fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let ns = r.numer().sqrt();
    let ds = r.denom().sqrt();
    if &(&ns * &ns) == r.numer() && &(&ds * &ds) == r.denom() {
        Some(Rational::new(ns, ds))
    } else {
        None
    }
}

/// Polynomial square root over the rationals, if one exists.
fn poly_sqrt(p: &Poly) -> Option<Poly> {
    if p.is_zero() {
        return Some(Poly::zero());
    }
    let deg = p.degree().unwrap();
    if deg % 2 != 0 || !p.has_rational_coeffs() {
        return None;
    }
    let lead = rational_sqrt(p.leading().unwrap().as_rational().unwrap())?;
    let m = deg / 2;
    let mut s_coeffs = vec![QuadExt::zero(); m + 1];
    s_coeffs[m] = QuadExt::from_rational(lead.clone());
    let two_lead = QuadExt::from_rational(&lead + &lead);
    for k in (0..m).rev() {
        let s = Poly::new(s_coeffs.clone());
        let r = p.sub(&s.mul(&s));
        // coefficient of x^(m+k) must come from 2*lead*s_k
        let c = r.coeff(m + k);
        s_coeffs[k] = c.try_div(&two_lead).ok()?;
    }
    let s = Poly::new(s_coeffs);
    if s.mul(&s) == *p {
        Some(s)
    } else {
        None
    }
}

/// One irreducible piece of a bivariate closure constraint, in a form we
/// can sample rational points from.
enum Component {
    /// `a(t_u) * t_v + b(t_u) = 0` with `a` nonzero: parameterized by t_u.
    LinearIn { solve_var: usize, other_var: usize, a: MvPoly, b: MvPoly },
    /// A factor we cannot rationally parameterize.
    Unsupported(String),
}

/// Splits a bivariate polynomial (in the two used variables) into
/// irreducible components we can sample: powers of each variable, factors
/// of the content in one variable, and the primitive part when it is
/// linear (or a split quadratic) in the other.
fn bivariate_components(p: &MvPoly, v0: usize, v1: usize) -> Vec<Component> {
    let mut comps = vec![];
    let mut p = p.clone();
    // strip t_v1^k
    let mut coeffs = p.coeffs_in_var(v1);
    if coeffs.len() > 1 && coeffs[0].is_zero() {
        comps.push(Component::LinearIn {
            solve_var: v1,
            other_var: v0,
            a: MvPoly::from_int(p.nvars(), 1),
            b: MvPoly::zero(p.nvars()),
        });
        while coeffs.len() > 1 && coeffs[0].is_zero() {
            coeffs.remove(0);
        }
        // reassemble p / t_v1^k
        let t = MvPoly::var(p.nvars(), v1);
        let mut q = MvPoly::zero(p.nvars());
        let mut power = MvPoly::from_int(p.nvars(), 1);
        for c in &coeffs {
            q = q.add(&c.mul(&power));
            power = power.mul(&t);
        }
        p = q;
    }
    // content in t_v0 (gcd of the t_v1-coefficients, each univariate in t_v0)
    let coeffs = p.coeffs_in_var(v1);
    let unis: Option<Vec<Poly>> = coeffs
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.to_univariate(v0))
        .collect();
    let Some(unis) = unis else {
        return vec![Component::Unsupported("coefficients not univariate".into())];
    };
    let mut content = Poly::zero();
    for u in &unis {
        content = content.gcd(u);
    }
    let content = content.primitive_integer();
    if content.degree().unwrap_or(0) >= 1 {
        let sf = content.squarefree_part();
        let (roots, rest) = sf.strip_rational_roots();
        for r in roots {
            // component t_v0 - r, i.e. 1 * t_v0 + (-r)
            comps.push(Component::LinearIn {
                solve_var: v0,
                other_var: v1,
                a: MvPoly::from_int(p.nvars(), 1),
                b: MvPoly::constant(p.nvars(), -r),
            });
        }
        if rest.degree().unwrap_or(0) >= 1 {
            comps.push(Component::Unsupported(format!(
                "irrational content factor of degree {}",
                rest.degree().unwrap()
            )));
        }
        // divide p by the content symbolically: rebuild from coeff quotients
        let t = MvPoly::var(p.nvars(), v1);
        let mut q = MvPoly::zero(p.nvars());
        let mut power = MvPoly::from_int(p.nvars(), 1);
        for c in p.coeffs_in_var(v1) {
            let quot = if c.is_zero() {
                MvPoly::zero(p.nvars())
            } else {
                let u = c.to_univariate(v0).unwrap();
                let (d, r) = u.divrem(&content).expect("content divides");
                debug_assert!(r.is_zero());
                poly_to_mv(&d, v0, p.nvars())
            };
            q = q.add(&quot.mul(&power));
            power = power.mul(&t);
        }
        p = q;
    }
    // primitive part in t_v1
    match p.degree_in(v1) {
        0 => {
            // constant in t_v1; any remaining non-constant factor in t_v0
            // was handled as content, so p is now a constant
            if !p.is_constant() {
                comps.push(Component::Unsupported("residual factor".into()));
            }
        }
        1 => {
            let c = p.coeffs_in_var(v1);
            comps.push(Component::LinearIn {
                solve_var: v1,
                other_var: v0,
                a: c[1].clone(),
                b: c[0].clone(),
            });
        }
        2 => {
            // try to split via a perfect-square discriminant
            let c = p.coeffs_in_var(v1);
            let (a2, a1, a0) = (&c[2], &c[1], &c[0]);
            let disc = a1.mul(a1).sub(&a2.mul(a0).scale(&Rational::from(BigInt::from(4))));
            let split = disc
                .to_univariate(v0)
                .and_then(|u| poly_sqrt(&u))
                .map(|s| poly_to_mv(&s, v0, p.nvars()));
            match split {
                Some(s) => {
                    let two_a = a2.scale(&Rational::from(BigInt::from(2)));
                    for sgn in [1i64, -1] {
                        let b = c[1].add(&s.scale(&Rational::from(BigInt::from(sgn))));
                        comps.push(Component::LinearIn {
                            solve_var: v1,
                            other_var: v0,
                            a: two_a.clone(),
                            b,
                        });
                    }
                }
                None => comps.push(Component::Unsupported(
                    "irreducible quadratic component".into(),
                )),
            }
        }
        d => comps.push(Component::Unsupported(format!(
            "component of degree {d} in the second parameter"
        ))),
    }
    comps
}

fn poly_to_mv(p: &Poly, var: usize, nvars: usize) -> MvPoly {
    let t = MvPoly::var(nvars, var);
    let mut out = MvPoly::zero(nvars);
    let mut power = MvPoly::from_int(nvars, 1);
    for c in p.coeffs() {
        out = out.add(&MvPoly::constant(nvars, c.as_rational().unwrap().clone()).mul(&power));
        power = power.mul(&t);
    }
    out
}

/// Solves the moduli realization problem for an incidence structure.
///
/// After frame normalization the residual parameters are constrained by
/// the extra concurrencies of the target; the solver distinguishes
/// finitely many moduli points (closure polynomial of degree <= 2), a
/// positive-dimensional irreducible family, or an unsupported shape.
pub fn solve_moduli(target: &IncidenceStructure) -> Result<ModuliReport> {
    let sym = build_symbolic(target)?;
    let nvars = 2 * target.n();
    let nonzero: Vec<MvPoly> = {
        let mut seen: Vec<MvPoly> = vec![];
        for c in &sym.constraints {
            if c.is_zero() {
                continue;
            }
            let p = c.primitive();
            if !seen.contains(&p) {
                seen.push(p);
            }
        }
        seen
    };

    if nonzero.is_empty() {
        if sym.nparams == 0 {
            // rigid: the frame normalization pins a single realization
            let values = vec![QuadExt::zero(); nvars];
            let arr = realize(&sym.coords, &values, 1, target).ok_or(ModuliError::Infeasible)?;
            return Ok(ModuliReport {
                status: ModuliStatus::Points,
                point_count: 1,
                closure_polynomial: None,
                splitting_field_d: Some(1),
                free_dimension: 0,
                degenerate_roots_rejected: 0,
                realizations: vec![arr],
                detail: None,
            });
        }
        // every concurrency is automatic: the parameters range over a
        // Zariski-open subset of affine space, which is irreducible
        let realization = grid_sample(&sym, target);
        return Ok(ModuliReport {
            status: ModuliStatus::IrreducibleFamily,
            point_count: 0,
            closure_polynomial: None,
            splitting_field_d: realization.as_ref().map(|a| a.field_d()),
            free_dimension: sym.nparams,
            degenerate_roots_rejected: 0,
            realizations: realization.into_iter().collect(),
            detail: Some("all closure constraints vanish identically".into()),
        });
    }

    let mut used: Vec<usize> = vec![];
    for c in &nonzero {
        for v in c.vars_used() {
            if !used.contains(&v) {
                used.push(v);
            }
        }
    }
    used.sort_unstable();

    if nonzero.iter().any(|c| c.is_constant()) {
        // a nonzero constant concurrency condition can never be met
        return Err(ModuliError::Infeasible);
    }

    if used.len() < sym.nparams {
        return Ok(unsupported(
            "some free parameter is unconstrained while closure constraints remain",
            sym.nparams,
        ));
    }

    match used.len() {
        1 => solve_univariate(&sym, target, &nonzero, used[0], nvars),
        2 => solve_bivariate(&sym, target, &nonzero, used[0], used[1], nvars),
        k => Ok(unsupported(
            &format!("{k} coupled parameters exceed solver scope"),
            sym.nparams,
        )),
    }
}

fn solve_univariate(
    sym: &Symbolic,
    target: &IncidenceStructure,
    nonzero: &[MvPoly],
    var: usize,
    nvars: usize,
) -> Result<ModuliReport> {
    let mut g = Poly::zero();
    for c in nonzero {
        let u = c
            .to_univariate(var)
            .expect("single-variable constraint set");
        g = g.gcd(&u);
    }
    if g.is_constant() {
        // constraints are coprime: no common root
        return Err(ModuliError::Infeasible);
    }
    let closure = g.squarefree_part().primitive_integer();
    let (rational_roots, rest) = closure.strip_rational_roots();
    let mut roots: Vec<QuadExt> = rational_roots
        .into_iter()
        .map(QuadExt::from_rational)
        .collect();
    match rest.degree().unwrap_or(0) {
        0 => {}
        2 => {
            let (quad_roots, _) = poly_roots_quadratic(&rest)?;
            roots.extend(quad_roots.into_iter().map(|(r, _)| r));
        }
        d => return Err(ModuliError::UnsupportedDegree(d)),
    }
    roots.sort_by(|a, b| {
        (a.rational_part(), a.radical_part()).cmp(&(b.rational_part(), b.radical_part()))
    });

    let mut realizations = vec![];
    let mut rejected = 0usize;
    let mut field = 1i64;
    for root in &roots {
        let mut values = vec![QuadExt::zero(); nvars];
        values[var] = root.clone();
        let d = root.field_d();
        match realize(&sym.coords, &values, d, target) {
            Some(arr) => {
                field = join_field(field, d)?;
                realizations.push(arr);
            }
            None => rejected += 1,
        }
    }
    if realizations.is_empty() {
        return Err(ModuliError::Infeasible);
    }
    Ok(ModuliReport {
        status: ModuliStatus::Points,
        point_count: realizations.len(),
        closure_polynomial: Some(closure),
        splitting_field_d: Some(field),
        free_dimension: 0,
        degenerate_roots_rejected: rejected,
        realizations,
        detail: None,
    })
}

fn solve_bivariate(
    sym: &Symbolic,
    target: &IncidenceStructure,
    nonzero: &[MvPoly],
    v0: usize,
    v1: usize,
    nvars: usize,
) -> Result<ModuliReport> {
    if nonzero.len() != 1 {
        return Ok(unsupported(
            "multiple independent bivariate closure constraints",
            sym.nparams,
        ));
    }
    let comps = bivariate_components(&nonzero[0], v0, v1);
    let mut good: Vec<Arrangement> = vec![];
    let mut rejected = 0usize;
    let samples = sample_values();
    for comp in &comps {
        match comp {
            Component::Unsupported(reason) => {
                return Ok(unsupported(
                    &format!("bivariate closure has an unsupported factor: {reason}"),
                    sym.nparams,
                ));
            }
            Component::LinearIn { solve_var, other_var, a, b } => {
                let mut found = None;
                for s in &samples {
                    let av = a.substitute(*other_var, s);
                    let bv = b.substitute(*other_var, s);
                    let (Some(au), Some(bu)) = (av.to_univariate(*solve_var), bv.to_univariate(*solve_var))
                    else {
                        continue;
                    };
                    if !au.is_constant() || !bu.is_constant() || au.is_zero() {
                        continue;
                    }
                    let aq = au.coeff(0).as_rational().unwrap().clone();
                    let bq = bu.coeff(0).as_rational().unwrap().clone();
                    let solved = -bq / aq;
                    let mut values = vec![QuadExt::zero(); nvars];
                    values[*other_var] = QuadExt::from_rational(s.clone());
                    values[*solve_var] = QuadExt::from_rational(solved);
                    if let Some(arr) = realize(&sym.coords, &values, 1, target) {
                        found = Some(arr);
                        break;
                    }
                }
                match found {
                    Some(arr) => good.push(arr),
                    None => rejected += 1,
                }
            }
        }
    }
    match good.len() {
        0 => Err(ModuliError::Infeasible),
        1 => Ok(ModuliReport {
            status: ModuliStatus::IrreducibleFamily,
            point_count: 0,
            closure_polynomial: None,
            splitting_field_d: Some(1),
            free_dimension: 1,
            degenerate_roots_rejected: rejected,
            realizations: good,
            detail: Some("one non-degenerate closure component".into()),
        }),
        k => Ok(unsupported(
            &format!("{k} non-degenerate closure components"),
            sym.nparams,
        )),
    }
}

/// Searches a deterministic rational grid for parameter values realizing
/// the target exactly (used when every closure constraint vanishes).
fn grid_sample(sym: &Symbolic, target: &IncidenceStructure) -> Option<Arrangement> {
    let nvars = 2 * target.n();
    let samples = sample_values();
    let k = sym.nparams;
    let mut idx = vec![0usize; k];
    let cap = 200_000usize;
    let mut tried = 0usize;
    loop {
        let mut values = vec![QuadExt::zero(); nvars];
        for (p, &i) in idx.iter().enumerate() {
            values[p] = QuadExt::from_rational(samples[i].clone());
        }
        if let Some(arr) = realize(&sym.coords, &values, 1, target) {
            return Some(arr);
        }
        tried += 1;
        if tried >= cap {
            return None;
        }
        // odometer increment
        let mut pos = 0;
        loop {
            if pos == k {
                return None;
            }
            idx[pos] += 1;
            if idx[pos] < samples.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exact::parse_rational;

    #[test]
    fn maclane_moduli_two_points_over_minus_three() {
        let target = catalog::maclane(catalog::Sign::Plus).expected_lattice;
        let r = solve_moduli(&target).unwrap();
        assert_eq!(r.status, ModuliStatus::Points);
        assert_eq!(r.point_count, 2);
        assert_eq!(r.splitting_field_d, Some(-3));
        assert_eq!(r.free_dimension, 0);
        assert_eq!(r.realizations.len(), 2);
    }

    #[test]
    fn fs_moduli_two_points_over_five() {
        let target = catalog::falk_sturmfels(catalog::Sign::Plus).expected_lattice;
        let r = solve_moduli(&target).unwrap();
        assert_eq!(r.status, ModuliStatus::Points);
        assert_eq!(r.point_count, 2);
        assert_eq!(r.splitting_field_d, Some(5));
        // the closure quadratic has discriminant in the square class of 5
        let p = r.closure_polynomial.unwrap();
        assert_eq!(p.degree(), Some(2));
        let a = p.coeff(2).as_rational().unwrap().clone();
        let b = p.coeff(1).as_rational().unwrap().clone();
        let c = p.coeff(0).as_rational().unwrap().clone();
        let disc = &b * &b - parse_rational("4").unwrap() * &a * &c;
        let (_, d) = crate::exact::squarefree_decompose(&(disc.numer() * disc.denom())).unwrap();
        assert_eq!(d, 5.into());
    }

    #[test]
    fn a_pm_i_moduli_two_points_with_degenerate_root() {
        let target = catalog::a_pm_i(catalog::Sign::Plus).expected_lattice;
        let r = solve_moduli(&target).unwrap();
        assert_eq!(r.status, ModuliStatus::Points);
        assert_eq!(r.point_count, 2);
        assert_eq!(r.splitting_field_d, Some(-1));
        assert_eq!(r.degenerate_roots_rejected, 1);
    }

    #[test]
    fn nine_three_families_irreducible() {
        for which in [
            catalog::NineThree::A,
            catalog::NineThree::B,
            catalog::NineThree::C,
        ] {
            let target = catalog::nine_three(which).expected_lattice;
            let r = solve_moduli(&target).unwrap();
            assert_eq!(r.status, ModuliStatus::IrreducibleFamily, "{which:?}");
            assert!(r.free_dimension >= 1);
            assert_eq!(r.realizations.len(), 1, "{which:?}");
        }
    }

    #[test]
    fn plan_reports_frame_and_parameters() {
        let target = catalog::maclane(catalog::Sign::Plus).expected_lattice;
        let plan = plan_construction(&target).unwrap();
        assert_eq!(plan.slots.len(), 4);
        assert_eq!(plan.free_parameters, 1);
    }

    #[test]
    fn no_frame_for_small_structures() {
        let tri = IncidenceStructure::new(3, vec![]).unwrap();
        assert!(matches!(
            plan_construction(&tri),
            Err(ModuliError::NoFrame)
        ));
    }

    #[test]
    fn poly_sqrt_detects_squares() {
        let p = Poly::from_ints(&[1, 2, 1]); // (x+1)^2
        assert_eq!(poly_sqrt(&p).unwrap(), Poly::from_ints(&[1, 1]));
        assert!(poly_sqrt(&Poly::from_ints(&[2, 0, 1])).is_none());
    }
}
