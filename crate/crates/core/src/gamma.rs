//! Parameters of the `Γ(a, b, k)` family: the threshold `f`, the integer
//! divisions, the constraints, the crossing-number and average-degree
//! formulas, and assembly of members by zip chains.

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::constructions::{build_h_graph, build_s_graph, h_crossings};
use crate::error::GammaError;
use crate::graph::connectivity::vertex_connectivity_at_least;
use crate::graph::MultiGraph;
use crate::report::CrValue;
use crate::zip::{build_r, zip_chain, ChainReport, ChainSite, DIRECT_CHECK_BOUND};
use crate::Rational;

fn q(n: i128) -> Rational {
    Rational::from_integer(n.into())
}

/// `240 + 512/(6-r)² + 224/(6-r) + 25/(16(r-3)²) + 40/(r-3)` on `3 < r < 6`.
pub fn f_threshold(r: &Rational) -> Result<Rational, GammaError> {
    if *r <= q(3) || *r >= q(6) {
        return Err(GammaError::Params(format!("r = {r} is outside (3, 6)")));
    }
    let x = q(6) - r;
    let y = r - q(3);
    Ok(q(240) + q(512) / (&x * &x) + q(224) / &x + q(25) / (q(16) * &y * &y) + q(40) / &y)
}

/// `⌈f(3 + a/b)⌉`.
pub fn k_threshold(a: i128, b: i128) -> Result<i128, GammaError> {
    check_ab(a, b)?;
    let f = f_threshold(&(q(3) + Rational::new(a.into(), b.into())))?;
    f.ceil().to_integer().to_i128().ok_or(GammaError::Overflow("threshold"))
}

fn check_ab(a: i128, b: i128) -> Result<(), GammaError> {
    if a <= 0 || b <= 0 || a >= 3 * b {
        return Err(GammaError::Params(format!("need 0 < a < 3b, got a = {a}, b = {b}")));
    }
    if a.gcd(&b) != 1 {
        return Err(GammaError::Params(format!("a = {a} and b = {b} are not coprime")));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GammaParams {
    pub a: i128,
    pub b: i128,
    pub k: i128,
    pub t: i128,
    pub b_prime: i128,
    pub b_r: i128,
    pub b_double_prime: i128,
    pub b_r_prime: i128,
    pub b_bar: i128,
    pub b_bar_r: i128,
    pub k_prime: i128,
    pub k_r: i128,
    pub n: i128,
    pub m: i128,
    pub m_prime: i128,
    pub c: i128,
    pub w: i128,
    pub s: i128,
    pub p: i128,
    pub q: i128,
    /// `t < k`: a structurally valid graph outside the declared family.
    pub outside_family: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    pub name: String,
    pub holds: bool,
}

/// Checked arithmetic on `i128`; overflow is an error.
struct Ck(&'static str);

impl Ck {
    fn add(&self, a: i128, b: i128) -> Result<i128, GammaError> {
        a.checked_add(b).ok_or(GammaError::Overflow(self.0))
    }
    fn sub(&self, a: i128, b: i128) -> Result<i128, GammaError> {
        a.checked_sub(b).ok_or(GammaError::Overflow(self.0))
    }
    fn mul(&self, a: i128, b: i128) -> Result<i128, GammaError> {
        a.checked_mul(b).ok_or(GammaError::Overflow(self.0))
    }
    /// `num = quot·den + rem` with `0 ≤ rem < den`, re-verified.
    fn divide(&self, num: i128, den: i128) -> Result<(i128, i128), GammaError> {
        if den <= 0 {
            return Err(GammaError::Params(format!("{}: divisor {den} is not positive", self.0)));
        }
        let (dq, r) = (num.div_euclid(den), num.rem_euclid(den));
        if self.add(self.mul(dq, den)?, r)? != num || !(0..den).contains(&r) {
            return Err(GammaError::Params(format!("{}: division check failed", self.0)));
        }
        Ok((dq, r))
    }
}

fn choose2(n: i128) -> i128 {
    n * (n - 1) / 2
}

impl GammaParams {
    /// The constraints on `n, m, c, w, s, p, q`, in order.
    pub fn constraints(&self) -> Vec<Constraint> {
        let c = |name: &str, holds: bool| Constraint {
            name: name.into(),
            holds,
        };
        let cap = 2i128.checked_mul(self.m).and_then(|x| x.checked_mul(self.n - 3));
        let s_min = 4i128.checked_mul(h_crossings(self.w.max(0) as u64) as i128);
        vec![
            c("n >= 3", self.n >= 3),
            c("m = 2m' + 1", self.m == 2 * self.m_prime + 1),
            c("m' >= 2 C(n,2)", self.m_prime >= 2 * choose2(self.n)),
            c("c >= 0", self.c >= 0),
            c("c <= 2m(n-3)", cap.is_some_and(|x| self.c <= x)),
            c("w >= 0", self.w >= 0),
            c("s >= 4(32w^2+56w+31)", s_min.is_some_and(|x| self.s >= x)),
            c("p >= 1", self.p >= 1),
            c("q >= 1", self.q >= 1),
        ]
    }

    /// `C(n,2) + 32w² + 56w + p + 4q + 30`.
    pub fn crossing_number(&self) -> i128 {
        choose2(self.n) + 32 * self.w * self.w + 56 * self.w + self.p + 4 * self.q + 30
    }

    /// Numerator aggregate `m'(6n-11) + 3n + 3p + 3q + 4s - c - 7`.
    pub fn n_aggregate(&self) -> i128 {
        self.m_prime * (6 * self.n - 11) + 3 * self.n + 3 * self.p + 3 * self.q + 4 * self.s - self.c - 7
    }

    /// Denominator aggregate `2m'(4n-7) + 4n + 4sw + 9s + 4p + 6q - c - 9`.
    pub fn d_aggregate(&self) -> i128 {
        2 * self.m_prime * (4 * self.n - 7) + 4 * self.n + 4 * self.s * self.w + 9 * self.s + 4 * self.p + 6 * self.q
            - self.c
            - 9
    }

    /// `6 - 4N/D`.
    pub fn average_degree(&self) -> Rational {
        q(6) - q(4) * Rational::new(self.n_aggregate().into(), self.d_aggregate().into())
    }

    /// `3 + a/b`.
    pub fn target_degree(&self) -> Rational {
        q(3) + Rational::new(self.a.into(), self.b.into())
    }
}

/// Derive the parameters for `t`. With `expert`, `t < k` is accepted and
/// flagged; constraint failures are errors either way.
pub fn solve_params(a: i128, b: i128, k: i128, t: i128, expert: bool) -> Result<GammaParams, GammaError> {
    check_ab(a, b)?;
    let kmin = k_threshold(a, b)?;
    if k < kmin {
        return Err(GammaError::Params(format!("k = {k} is below the threshold {kmin}")));
    }
    if t < 1 || (t < k && !expert) {
        return Err(GammaError::Params(format!("t = {t} must be at least k = {k}")));
    }
    let p = derive(a, b, k, t)?;
    let failed: Vec<String> = p.constraints().into_iter().filter(|c| !c.holds).map(|c| c.name).collect();
    if !failed.is_empty() {
        return Err(GammaError::Constraints(failed));
    }
    if p.crossing_number() != k {
        return Err(GammaError::Constraints(vec![format!("crossing number formula gives {}", p.crossing_number())]));
    }
    Ok(p)
}

fn derive(a: i128, b: i128, k: i128, t: i128) -> Result<GammaParams, GammaError> {
    let ck = Ck("parameters");
    let (b_prime, b_r) = ck.divide(b, a)?;
    let (b2, b_r_prime) = ck.divide(b_prime, 4)?;
    let (b_bar, b_bar_r) = ck.divide(ck.mul(4, b)?, ck.sub(ck.mul(3, b)?, a)?)?;
    let h = ck.mul(ck.mul(8, b_bar)?, ck.add(ck.mul(4, b_bar)?, 7)?)?;
    let lhs = ck.sub(ck.sub(k, ck.mul(b2, b2 + 5)? / 2)?, h)?;
    let (k_prime, k_r) = ck.divide(lhs, ck.add(ck.mul(2, b2)?, 5)?)?;
    let n = b2 + 4;
    let coef = ck.sub(ck.sub(ck.mul(27, b)?, ck.mul(9, a)?)?, ck.mul(4, b_bar_r)?)?;
    let m = ck.add(ck.sub(ck.mul(ck.mul(2, t)?, coef)?, ck.mul(2, k_prime)?)?, 3)?;
    let c = ck.sub(ck.sub(ck.sub(ck.mul(2, k_prime)?, ck.mul(12, b2)?)?, ck.mul(6, k_r)?)?, 33)?;
    let s = ck.mul(ck.mul(2, t)?, ck.sub(ck.mul(ck.add(ck.mul(4, b2)?, 9)?, a)?, b)?)?;
    let sub = ck.add(ck.add(ck.add(ck.mul(b2, b2 + 23)? / 2, h)?, ck.mul(4, k_r)?)?, 56)?;
    let p = ck.sub(k, sub)?;
    let qq = ck.add(ck.add(ck.mul(2, b2)?, k_r)?, 5)?;
    Ok(GammaParams {
        a,
        b,
        k,
        t,
        b_prime,
        b_r,
        b_double_prime: b2,
        b_r_prime,
        b_bar,
        b_bar_r,
        k_prime,
        k_r,
        n,
        m,
        m_prime: (m - 1).div_euclid(2),
        c,
        w: b_bar,
        s,
        p,
        q: qq,
        outside_family: t < k,
    })
}

/// Least `t ≥ 1` whose parameters satisfy every constraint.
pub fn minimal_t(a: i128, b: i128, k: i128) -> Result<i128, GammaError> {
    check_ab(a, b)?;
    for t in 1..=k.max(1) {
        let p = derive(a, b, k, t)?;
        if p.constraints().iter().all(|c| c.holds) {
            return Ok(t);
        }
    }
    Err(GammaError::Constraints(vec![format!("no t in 1..={k} satisfies the constraints")]))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GammaReport {
    pub params: GammaParams,
    pub predicted_cr: CrValue,
    /// `6 - 4N/D` as `p/q`.
    pub average_degree: String,
    /// `3 + a/b` as `p/q`.
    pub target_degree: String,
    pub average_degree_matches: bool,
    pub n_aggregate: i128,
    pub d_aggregate: i128,
    /// `D`.
    pub vertices: i128,
    /// `3D - 2N`.
    pub edges: i128,
    pub constraints: Vec<Constraint>,
}

pub fn predict(p: &GammaParams) -> GammaReport {
    let (n, d) = (p.n_aggregate(), p.d_aggregate());
    GammaReport {
        params: *p,
        predicted_cr: CrValue::paper(p.crossing_number().max(0) as u64),
        average_degree: p.average_degree().to_string(),
        target_degree: p.target_degree().to_string(),
        average_degree_matches: p.average_degree() == p.target_degree(),
        n_aggregate: n,
        d_aggregate: d,
        vertices: d,
        edges: 3 * d - 2 * n,
        constraints: p.constraints(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Factor {
    pub name: String,
    pub vertices: usize,
    pub edges: usize,
    /// `None` above the direct-check bound.
    pub three_connected: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GammaBuild {
    pub report: GammaReport,
    pub factors: Vec<Factor>,
    pub chain: ChainReport,
    pub vertices: usize,
    pub edges: usize,
    pub average_degree: String,
    pub simple: bool,
}

fn usize_of(x: i128, what: &'static str) -> Result<usize, GammaError> {
    usize::try_from(x).map_err(|_| GammaError::Overflow(what))
}

fn factor(name: String, g: &MultiGraph) -> Factor {
    Factor {
        name,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        three_connected: (g.vertex_count() <= DIRECT_CHECK_BOUND).then(|| vertex_connectivity_at_least(g, 3)),
    }
}

/// `S(n, m, c) ⊙ H(w, s) ⊙ R(3, 3, p) ⊙ R(3, 5, q)` at degree-3 vertices.
pub fn build_gamma(p: &GammaParams) -> Result<(MultiGraph, GammaBuild), GammaError> {
    let report = predict(p);
    let (n, m, c) = (usize_of(p.n, "n")?, usize_of(p.m, "m")?, usize_of(p.c, "c")?);
    let (w, s) = (usize_of(p.w, "w")?, usize_of(p.s, "s")?);
    let (pp, qq) = (usize_of(p.p, "p")?, usize_of(p.q, "q")?);
    let sg = build_s_graph(n, m, c)?;
    let hg = build_h_graph(w, s)?;
    let (r33, _) = build_r(3, 3, pp).map_err(crate::BuildError::from)?;
    let (r35, _) = build_r(3, 5, qq).map_err(crate::BuildError::from)?;
    let factors = vec![
        factor(format!("S({n},{m},{c})"), &sg.graph),
        factor(format!("H({w},{s})"), &hg.graph),
        factor(format!("R(3,3,{pp})"), &r33),
        factor(format!("R(3,5,{qq})"), &r35),
    ];
    let site = |graph: MultiGraph, cr: u64| ChainSite {
        v1: None,
        graph,
        v2: None,
        cr: Some(CrValue::paper(cr)),
    };
    let sites = [
        site(hg.graph, hg.predicted.value),
        site(r33, pp as u64),
        site(r35, 4 * qq as u64),
    ];
    let base_cr = CrValue::paper(sg.predicted_cr() as u64);
    let (g, chain) = zip_chain(&sg.graph, Some(base_cr), &sites).map_err(crate::BuildError::from)?;
    let avg = g.average_degree().map_err(crate::BuildError::from)?;
    let mut diffs = Vec::new();
    if g.vertex_count() as i128 != report.vertices {
        diffs.push(format!("V = {} but D = {}", g.vertex_count(), report.vertices));
    }
    if g.edge_count() as i128 != report.edges {
        diffs.push(format!("E = {} but 3D - 2N = {}", g.edge_count(), report.edges));
    }
    if avg != p.average_degree() {
        diffs.push(format!("average degree {avg} but predicted {}", p.average_degree()));
    }
    if !g.is_simple() {
        diffs.push("graph is not simple".into());
    }
    if !chain.additive {
        diffs.push("a zip site lacks two coherent bundles".into());
    }
    if chain.predicted.as_ref().map(|v| v.value as i128) != Some(p.crossing_number()) {
        diffs.push(format!("chain sum {:?} but formula gives {}", chain.predicted, p.crossing_number()));
    }
    if let Some(f) = factors.iter().find(|f| f.three_connected == Some(false)) {
        diffs.push(format!("factor {} is not 3-connected", f.name));
    }
    if !diffs.is_empty() {
        return Err(GammaError::Mismatch(diffs.join("; ")));
    }
    let build = GammaBuild {
        report,
        factors,
        chain,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        average_degree: avg.to_string(),
        simple: true,
    };
    Ok((g, build))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn threshold_values() {
        assert_eq!(f_threshold(&r(9, 2)).unwrap(), r(2577, 4));
        assert!(f_threshold(&r(3, 1)).is_err());
        assert!(f_threshold(&r(6, 1)).is_err());
        assert_eq!(k_threshold(3, 2).unwrap(), 645);
        // float evaluation of the same formula
        let f = |x: f64| 240.0 + 512.0 / (6.0 - x).powi(2) + 224.0 / (6.0 - x) + 25.0 / (16.0 * (x - 3.0).powi(2)) + 40.0 / (x - 3.0);
        assert_eq!(k_threshold(1, 2).unwrap(), f(3.5).ceil() as i128);
    }

    #[test]
    fn convex_on_samples() {
        for (x, y) in [((31, 10), (59, 10)), ((7, 2), (5, 1)), ((13, 4), (11, 2))] {
            let (a, b) = (r(x.0, x.1), r(y.0, y.1));
            let mid = (&a + &b) / r(2, 1);
            let lhs = f_threshold(&mid).unwrap();
            let rhs = (f_threshold(&a).unwrap() + f_threshold(&b).unwrap()) / r(2, 1);
            assert!(lhs <= rhs);
        }
    }

    #[test]
    fn solve_3_2_645() {
        let p = solve_params(3, 2, 645, 645, false).unwrap();
        assert_eq!((p.b_prime, p.b_r, p.b_double_prime, p.b_bar, p.b_bar_r, p.k_prime, p.k_r), (0, 2, 0, 2, 2, 81, 0));
        assert_eq!((p.n, p.c, p.w, p.p, p.q), (4, 129, 2, 349, 5));
        assert_eq!(p.m, 38 * 645 - 159);
        assert_eq!(p.s, 50 * 645);
        assert_eq!(p.crossing_number(), 645);
        // sympy: 3(447t - 34) / (2(149t - 17))
        assert_eq!(p.average_degree(), r(3 * (447 * 645 - 34), 2 * (149 * 645 - 17)));
        assert_ne!(p.average_degree(), p.target_degree());
        assert!(!p.outside_family);
        let rep = predict(&p);
        assert_eq!(rep.vertices, rep.d_aggregate);
    }

    #[test]
    fn solve_1_2_498() {
        let p = solve_params(1, 2, 498, 498, false).unwrap();
        assert_eq!((p.b_double_prime, p.b_bar), (0, 1));
        assert_eq!((p.n, p.c, p.w, p.p, p.q), (4, 131, 1, 354, 5));
        assert_eq!(p.m, 66 * 498 - 161);
        assert_eq!(p.s, 14 * 498);
        // sympy: (679t - 102) / (2(97t - 17))
        assert_eq!(p.average_degree(), r(679 * 498 - 102, 2 * (97 * 498 - 17)));
        assert!(!predict(&p).average_degree_matches);
        assert_eq!(minimal_t(1, 2, 498).unwrap(), 34);
        assert!(solve_params(1, 2, 498, 34, false).is_err());
        assert!(solve_params(1, 2, 498, 34, true).unwrap().outside_family);
        assert!(matches!(solve_params(1, 2, 498, 33, true), Err(GammaError::Constraints(_))));
    }

    #[test]
    fn rejections() {
        assert!(solve_params(3, 2, 644, 700, false).is_err());
        assert!(solve_params(2, 4, 2000, 2000, false).is_err());
        assert!(solve_params(7, 2, 2000, 2000, false).is_err());
    }

    #[test]
    fn count_coefficients() {
        let p = solve_params(3, 2, 645, 645, false).unwrap();
        let mut p1 = p;
        p1.s += 1;
        let d = predict(&p1).vertices - predict(&p).vertices;
        let e = predict(&p1).edges - predict(&p).edges;
        assert_eq!((d, e), (4 * p.w + 9, 12 * p.w + 19));
        assert!(p.m % 2 == 1);
    }
}
