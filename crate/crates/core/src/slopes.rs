//! Slope bounds, conjecture formulas, witness families and slope reports.
//!
//! Slopes and bounds are exact rationals; symbolic bounds are kept as
//! explicit numerator/denominator pairs of polynomials because division is
//! not a ring operation in the kernel.

use crate::chow::{intersect_y, BundleData, DivY, SurfaceModel};
use crate::error::{Error, Result};
use crate::invariants::{
    chi_of_divisor, hyperelliptic_invariants, triple_cover_invariants, InvariantReport,
};
use crate::poly::{var, MPoly};
use crate::rational::Rat;
use std::collections::BTreeMap;
use std::fmt;

/// A ratio of polynomials, unreduced. Equality is cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatioExpr {
    pub num: MPoly,
    pub den: MPoly,
}

impl RatioExpr {
    pub fn new(num: MPoly, den: MPoly) -> RatioExpr {
        RatioExpr { num, den }
    }

    pub fn from_rat(r: Rat) -> RatioExpr {
        RatioExpr {
            num: MPoly::constant(r),
            den: MPoly::one(),
        }
    }

    pub fn equals(&self, other: &RatioExpr) -> bool {
        (&(&self.num * &other.den) - &(&other.num * &self.den)).is_zero()
    }

    /// The exact rational value after binding every variable.
    pub fn value(&self, bindings: &BTreeMap<String, Rat>) -> Option<Rat> {
        let num = self.num.eval_full(bindings)?;
        let den = self.den.eval_full(bindings)?;
        if den.is_zero() {
            None
        } else {
            Some(num / den)
        }
    }
}

impl fmt::Display for RatioExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == MPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// The named bounds of the comparison table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundName {
    /// 6 + 12/(g+1), for families through a general point.
    General,
    /// 8 + 4/g, exact on the hyperelliptic locus.
    Hyperelliptic,
    /// 36(g+1)/(5g+1), exact on the trigonal locus.
    TrigonalMax,
    /// 7 + 6/g, for trigonal families with Bogomolov-semistable bundle.
    TrigonalSemistable,
    /// 4(5g+7)/(3g+1), general tetragonal families.
    Tetragonal,
    /// The conjectural d-gonal bound; requires d and the free factor f_d.
    ConjectureFd,
    /// (6 + 2/(c+1)) + (2c+4)/g in the Clifford index c.
    Clifford,
}

impl BoundName {
    pub fn label(self) -> &'static str {
        match self {
            BoundName::General => "general",
            BoundName::Hyperelliptic => "hyperelliptic",
            BoundName::TrigonalMax => "trigonal_max",
            BoundName::TrigonalSemistable => "trigonal_semistable",
            BoundName::Tetragonal => "tetragonal",
            BoundName::ConjectureFd => "conjecture_Fd",
            BoundName::Clifford => "clifford",
        }
    }
}

/// Extra parameters for the parametric bounds.
#[derive(Clone, Debug, Default)]
pub struct BoundExtra {
    pub d: Option<i64>,
    pub fd: Option<Rat>,
    pub cliff: Option<i64>,
}

/// A named bound with its exact value at a genus.
#[derive(Clone, Debug)]
pub struct BoundSpec {
    pub name: BoundName,
    pub value: RatioExpr,
}

/// The symbolic bound as a numerator/denominator pair in g.
pub fn bound_symbolic(name: BoundName, extra: &BoundExtra) -> Result<RatioExpr> {
    let g = var("g");
    let one = MPoly::one();
    Ok(match name {
        BoundName::General => {
            RatioExpr::new(&g.scale(&Rat::from_int(6)) + &MPoly::int(18), &g + &one)
        }
        BoundName::Hyperelliptic => {
            RatioExpr::new(&g.scale(&Rat::from_int(8)) + &MPoly::int(4), g.clone())
        }
        BoundName::TrigonalMax => RatioExpr::new(
            (&g + &one).scale(&Rat::from_int(36)),
            &g.scale(&Rat::from_int(5)) + &one,
        ),
        BoundName::TrigonalSemistable => {
            RatioExpr::new(&g.scale(&Rat::from_int(7)) + &MPoly::int(6), g.clone())
        }
        BoundName::Tetragonal => RatioExpr::new(
            &g.scale(&Rat::from_int(20)) + &MPoly::int(28),
            &g.scale(&Rat::from_int(3)) + &one,
        ),
        BoundName::ConjectureFd => {
            let d = extra
                .d
                .ok_or_else(|| Error::Contract("conjecture_Fd requires d".into()))?;
            let fd = extra
                .fd
                .clone()
                .ok_or_else(|| Error::Contract("conjecture_Fd requires f_d (no default)".into()))?;
            conjecture_fd_formula(d, &MPoly::constant(fd))?
        }
        BoundName::Clifford => {
            let c = extra
                .cliff
                .ok_or_else(|| Error::Contract("clifford requires the Clifford index".into()))?;
            if c < 0 {
                return Err(Error::Contract("Clifford index must be nonnegative".into()));
            }
            // (6 + 2/(c+1)) + (2c+4)/g = [(6c+8) g + (2c+4)(c+1)] / ((c+1) g)
            let num = &g.scale(&Rat::from_int(6 * c + 8)) + &MPoly::int((2 * c + 4) * (c + 1));
            RatioExpr::new(num, g.scale(&Rat::from_int(c + 1)))
        }
    })
}

/// The bound evaluated at an integer genus.
pub fn bound(name: BoundName, g: i64, extra: &BoundExtra) -> Result<BoundSpec> {
    let min_genus = 1; // the comparison table starts at g = 1
    if g < min_genus {
        return Err(Error::Contract(format!(
            "genus must be at least {min_genus}, got {g}"
        )));
    }
    let sym = bound_symbolic(name, extra)?;
    let value = sym
        .value(&BTreeMap::from([("g".to_string(), Rat::from_int(g))]))
        .ok_or_else(|| Error::Contract("bound denominator vanished".into()))?;
    Ok(BoundSpec {
        name,
        value: RatioExpr::from_rat(value),
    })
}

/// g_d: the second genus at which the d-gonal maximal bound meets the
/// general bound; 2 for d = 2, otherwise 2d - 3.
pub fn gonal_crossing_genus(d: i64) -> Result<i64> {
    if d < 2 {
        return Err(Error::Contract(format!(
            "gonality must be at least 2, got {d}"
        )));
    }
    Ok(if d == 2 { 2 } else { 2 * d - 3 })
}

/// The conjectural upper bound for d-gonal families as a ratio in g, with
/// the free factor f_d given symbolically or as a constant:
/// F_d(g) = 6 + 12/(g+1) + 6 (1 - f_d)(g - g_d)(g - 1) / ((g + f_d)(g_d + 1)(g + 1)).
pub fn conjecture_fd_formula(d: i64, fd: &MPoly) -> Result<RatioExpr> {
    let gd = gonal_crossing_genus(d)?;
    let g = var("g");
    let one = MPoly::one();
    let gp1 = &g + &one;
    let gpfd = &g + fd;
    let den = (&gpfd * &gp1).scale(&Rat::from_int(gd + 1));
    // 6 + 12/(g+1) over the common denominator, plus the correction term.
    let base = &den.scale(&Rat::from_int(6))
        + &gpfd.scale(&Rat::from_int(12)).scale(&Rat::from_int(gd + 1));
    let correction =
        &(&(&one - fd) * &(&g - &MPoly::int(gd))) * &(&g - &one).scale(&Rat::from_int(6));
    Ok(RatioExpr::new(&base + &correction, den))
}

/// The second displayed form of the conjectural bound:
/// F_d(g) = 6 + 6/(g + f_d) (1 + f_d + (1 - f_d)(g - 1)/(g_d + 1)).
pub fn conjecture_fd_formula_alt(d: i64, fd: &MPoly) -> Result<RatioExpr> {
    let gd = gonal_crossing_genus(d)?;
    let g = var("g");
    let one = MPoly::one();
    let den = (&g + fd).scale(&Rat::from_int(gd + 1));
    let inner = &(&one + fd).scale(&Rat::from_int(gd + 1)) + &(&(&one - fd) * &(&g - &one));
    Ok(RatioExpr::new(
        &den.scale(&Rat::from_int(6)) + &inner.scale(&Rat::from_int(6)),
        den,
    ))
}

/// Verifies, as polynomial identities in the symbolic factor f_d, that the
/// conjectural formula satisfies F_d(1) = 12 and F_d(g_d) = 6 + 12/(g_d+1),
/// and that its two displayed forms are equal.
pub fn conjecture_identities(d: i64) -> Result<bool> {
    let fd = var("fd");
    let main = conjecture_fd_formula(d, &fd)?;
    let alt = conjecture_fd_formula_alt(d, &fd)?;
    if !main.equals(&alt) {
        return Ok(false);
    }
    let gd = gonal_crossing_genus(d)?;
    // F_d(1) = 12: num - 12 den vanishes at g = 1 identically in fd.
    let at = |r: &RatioExpr, g: i64, target: Rat| -> bool {
        let num = r.num.eval_at("g", Rat::from_int(g));
        let den = r.den.eval_at("g", Rat::from_int(g));
        (&num - &den.scale(&target)).is_zero()
    };
    let target_gd = Rat::from_int(6) + Rat::new(12, gd + 1);
    Ok(at(&main, 1, Rat::from_int(12)) && at(&main, gd, target_gd))
}

/// The named witness families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyName {
    /// The pencil of hyperelliptic curves of bidegree (2, g+1) on P1 x P1.
    HyperPencil,
    /// The maximal-slope family on F6 for g = 3e.
    Ex71,
    /// The maximal-slope family on P1 x P1 for g = 3e - 2.
    Ex72,
    /// A pencil of d-gonal curves on a rational ruled surface.
    Pencil,
}

impl FamilyName {
    pub fn parse(s: &str) -> Option<FamilyName> {
        match s {
            "hyper-pencil" => Some(FamilyName::HyperPencil),
            "ex71" => Some(FamilyName::Ex71),
            "ex72" => Some(FamilyName::Ex72),
            "pencil" => Some(FamilyName::Pencil),
            _ => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            FamilyName::HyperPencil => "hyper-pencil",
            FamilyName::Ex71 => "ex71",
            FamilyName::Ex72 => "ex72",
            FamilyName::Pencil => "pencil",
        }
    }
}

/// Parameters accepted by the family constructors.
#[derive(Clone, Debug, Default)]
pub struct FamilyParams {
    pub g: Option<i64>,
    pub e: Option<i64>,
    pub f: Option<i64>,
    pub d: Option<i64>,
    pub k: Option<i64>,
}

/// A constructed family with its invariant report.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub name: FamilyName,
    pub genus: i64,
    pub params: Vec<(&'static str, i64)>,
    pub report: InvariantReport,
}

fn need(p: Option<i64>, what: &str, family: &str) -> Result<i64> {
    p.ok_or_else(|| Error::Contract(format!("{family} requires parameter {what}")))
}

/// Builds a named witness family and computes its invariants.
pub fn family(name: FamilyName, params: &FamilyParams) -> Result<FamilySpec> {
    match name {
        FamilyName::HyperPencil => hyper_pencil(need(params.g, "g", "hyper-pencil")?),
        FamilyName::Ex71 => example_71(need(params.e, "e", "ex71")?),
        FamilyName::Ex72 => example_72(need(params.e, "e", "ex72")?, need(params.f, "f", "ex72")?),
        FamilyName::Pencil => pencil(
            need(params.d, "d", "pencil")?,
            need(params.g, "g", "pencil")?,
            params.k,
        ),
    }
}

/// The pencil of (2, g+1)-curves on P1 x P1, blown up at its
/// 4(g+1) base points. This is the no-tree hyperelliptic family with
/// invariant degree 1; delta is cross-checked against the topological
/// Euler-characteristic bookkeeping
/// chi(X) = chi(P1 x P1) + 4(g+1) = chi(P1) chi(X_b) + delta.
fn hyper_pencil(g: i64) -> Result<FamilySpec> {
    if g < 2 {
        return Err(Error::Contract(format!(
            "genus must be at least 2, got {g}"
        )));
    }
    let report = hyperelliptic_invariants(&[], &MPoly::one(), &MPoly::int(g), 0)?;
    let chi_total = 4 + 4 * (g + 1);
    let chi_product = 2 * (2 - 2 * g);
    let delta_euler = MPoly::int(chi_total - chi_product);
    if !(&report.delta - &delta_euler).is_zero() {
        return Err(Error::Contract(format!(
            "Euler-characteristic bookkeeping gives delta = {delta_euler}, engine gives {}",
            report.delta
        )));
    }
    Ok(FamilySpec {
        name: FamilyName::HyperPencil,
        genus: g,
        params: vec![("g", g)],
        report,
    })
}

/// Conditions (index equality and genus condition) a witness bundle must
/// satisfy:
///   2(g+2) (2 deg D|B0 - 3 deg c1(W)|B0) = 9 (c1(W)^2 - 4 c2(W))
///   g + 2 = 2 deg D|F - 3 deg c1(W)|F
fn check_witness_conditions(
    model: &SurfaceModel,
    w_c1: &DivY,
    w_c2: &MPoly,
    dhat: &DivY,
    g: i64,
) -> Result<(MPoly, MPoly)> {
    // Degrees on B0 are the F-coefficients and vice versa.
    let d_inv = &dhat.f.scale(&Rat::from_int(2)) - &w_c1.f.scale(&Rat::from_int(3));
    let c_inv = &dhat.b0.scale(&Rat::from_int(2)) - &w_c1.b0.scale(&Rat::from_int(3));
    let genus_cond = &c_inv - &MPoly::int(g + 2);
    if !genus_cond.is_zero() {
        return Err(Error::Contract(format!(
            "genus condition violated: invariant fiber degree {c_inv}, expected {}",
            g + 2
        )));
    }
    let disc = &intersect_y(w_c1, w_c1, model)? - &w_c2.scale(&Rat::from_int(4));
    let index_cond = &(&d_inv * &MPoly::int(2 * (g + 2))) - &disc.scale(&Rat::from_int(9));
    if !index_cond.is_zero() {
        return Err(Error::Contract(format!(
            "index equality violated by {index_cond}"
        )));
    }
    Ok((d_inv, disc))
}

/// Canonical-equivalent bundle of (W, D-hat): V = W tensor M with
/// M = D-hat - 2 c1(W), so c1(V) = 2 D-hat - 3 c1(W) and
/// c2(V) = c2(W) + c1(W).M + M^2.
fn canonical_equivalent(
    model: &SurfaceModel,
    w_c1: &DivY,
    w_c2: &MPoly,
    dhat: &DivY,
) -> Result<BundleData> {
    let m = dhat.add(&w_c1.scale(&MPoly::int(-2)));
    BundleData::new(w_c1.clone(), w_c2.clone()).twist(&m, model)
}

/// The g = 0 (mod 3) maximal family: on Y = F6 take W = O + O(E) with
/// E = e B' + 2(g+1) F and D-hat = (g+1)(B' + 6F), written in the
/// normalized basis B0 = B' + 3F. The parity condition e = g (mod 2)
/// holds automatically for g = 3e.
fn example_71(e: i64) -> Result<FamilySpec> {
    if e < 1 {
        return Err(Error::Contract(format!("ex71 requires e >= 1, got {e}")));
    }
    let g = 3 * e;
    if (e - g).rem_euclid(2) != 0 {
        return Err(Error::Contract(
            "parity condition e = g (mod 2) violated".into(),
        ));
    }
    let model = SurfaceModel::ruled(MPoly::zero());
    // B' = B0 - 3F on F6.
    let b_prime = DivY::new(MPoly::one(), MPoly::int(-3));
    let fib = DivY::new(MPoly::zero(), MPoly::one());
    let e_div = b_prime
        .scale(&MPoly::int(e))
        .add(&fib.scale(&MPoly::int(2 * (g + 1))));
    let dhat = b_prime
        .add(&fib.scale(&MPoly::int(6)))
        .scale(&MPoly::int(g + 1));
    let w_c2 = MPoly::zero(); // W splits
    let (d_inv, _disc) = check_witness_conditions(&model, &e_div, &w_c2, &dhat, g)?;
    let v = canonical_equivalent(&model, &e_div, &w_c2, &dhat)?;
    let report = triple_cover_invariants(&v, &model, &d_inv, &MPoly::int(g))?;
    cross_check_lambda_on_pw(&model, &e_div, &w_c2, &dhat, g, &report)?;
    Ok(FamilySpec {
        name: FamilyName::Ex71,
        genus: g,
        params: vec![("e", e)],
        report,
    })
}

/// The g = 1 (mod 3) maximal family: on Y = P1 x P1 take W = O + O(E) with
/// E = e B0 + f F and D-hat = 3E, for g = 3e - 2 and any f >= 1.
fn example_72(e: i64, f: i64) -> Result<FamilySpec> {
    if e < 2 {
        return Err(Error::Contract(format!(
            "ex72 requires e >= 2 (e = 1 gives genus 1), got {e}"
        )));
    }
    if f < 1 {
        return Err(Error::Contract(format!("ex72 requires f >= 1, got {f}")));
    }
    let g = 3 * e - 2;
    if (e - g).rem_euclid(2) != 0 {
        return Err(Error::Contract(
            "parity condition e = g (mod 2) violated".into(),
        ));
    }
    let model = SurfaceModel::ruled(MPoly::zero());
    let e_div = DivY::new(MPoly::int(e), MPoly::int(f));
    let dhat = e_div.scale(&MPoly::int(3));
    let w_c2 = MPoly::zero();
    let (d_inv, _disc) = check_witness_conditions(&model, &e_div, &w_c2, &dhat, g)?;
    let v = canonical_equivalent(&model, &e_div, &w_c2, &dhat)?;
    let report = triple_cover_invariants(&v, &model, &d_inv, &MPoly::int(g))?;
    cross_check_lambda_on_pw(&model, &e_div, &w_c2, &dhat, g, &report)?;
    Ok(FamilySpec {
        name: FamilyName::Ex72,
        genus: g,
        params: vec![("e", e), ("f", f)],
        report,
    })
}

/// Independent engine route for the witnesses: chi(O_X) computed on PW for
/// X = 3 zeta + pi* D-hat must reproduce lambda through the
/// Euler-characteristic identity.
fn cross_check_lambda_on_pw(
    model: &SurfaceModel,
    w_c1: &DivY,
    w_c2: &MPoly,
    dhat: &DivY,
    g: i64,
    report: &InvariantReport,
) -> Result<()> {
    use crate::chow::{CoverKind, PVClass};
    let w = BundleData::new(w_c1.clone(), w_c2.clone());
    let x = PVClass::zeta()
        .scale(&MPoly::int(3))
        .add(&PVClass::pullback_divisor(dhat.clone()));
    let chi = chi_of_divisor(&x, &w, model, CoverKind::Triple)?;
    let lambda = &chi - &MPoly::int(1 - g); // chi(O_B) chi(O_C) = 1 - g over P1
    if !(&lambda - &report.lambda).is_zero() {
        return Err(Error::Contract(format!(
            "lambda cross-check on PW failed: {lambda} vs {}",
            report.lambda
        )));
    }
    Ok(())
}

/// A pencil of d-gonal curves of genus g on the ruled surface F_k, blown
/// up at its base points: lambda = g and
/// delta = 2d(g - 1 + d)/(d - 1) + 4g, so the slope is
/// (6 + 2/(d-1)) + 2d/g independent of k. The linear system on F_k must
/// exist: the fiber coefficient (g - 1 + d)/(d - 1) + kd/2 must be a
/// nonnegative integer, with k = g (mod 2) when d = 3.
///
/// The rank-2 Chern fields of the report are meaningful for d <= 3 only
/// (d = 3 sits exactly on the Bogomolov boundary 4c2 - c1^2 = 0); for
/// d >= 4 the trace-free bundle has higher rank and those fields are left
/// at zero.
fn pencil(d: i64, g: i64, k: Option<i64>) -> Result<FamilySpec> {
    if d < 2 {
        return Err(Error::Contract(format!(
            "gonality must be at least 2, got {d}"
        )));
    }
    if g < 2 {
        return Err(Error::Contract(format!(
            "genus must be at least 2, got {g}"
        )));
    }
    // Smallest admissible k when unspecified.
    let k = match k {
        Some(k) => k,
        None if d == 3 => g % 2,
        None => 0,
    };
    // beta = (g - 1 + d)/(d - 1) + kd/2 must be a nonnegative integer.
    let beta = Rat::new(g - 1 + d, d - 1) + Rat::new(k * d, 2);
    if !beta.is_integer() || beta.is_negative() {
        return Err(Error::Contract(format!(
            "no pencil of {d}-gonal genus-{g} curves on F_{k}: fiber coefficient {beta} \
             is not a nonnegative integer"
        )));
    }
    let lambda = Rat::from_int(g);
    let delta = Rat::new(2 * d * (g - 1 + d), d - 1) + Rat::from_int(4 * g);
    let kappa = &Rat::from_int(12) * &lambda - delta.clone();
    let report = match d {
        3 => {
            // The trigonal pencil is the semistable boundary case: its
            // bundle satisfies 4c2 - c1^2 = 0 and d_inv = 2.
            InvariantReport {
                lambda: MPoly::constant(lambda),
                kappa: MPoly::constant(kappa),
                delta: MPoly::constant(delta),
                d_inv: MPoly::int(2),
                bogomolov: MPoly::zero(),
                index_q: MPoly::int(g + 2),
            }
        }
        2 => {
            // The hyperelliptic pencil: invariant degree 1,
            // delta = 4(2g+1) matches the blown-up-pencil bookkeeping.
            return hyper_pencil(g).map(|mut fam| {
                fam.name = FamilyName::Pencil;
                fam.params = vec![("d", 2), ("g", g), ("k", k)];
                fam
            });
        }
        _ => InvariantReport {
            lambda: MPoly::constant(lambda),
            kappa: MPoly::constant(kappa),
            delta: MPoly::constant(delta),
            d_inv: MPoly::zero(),
            bogomolov: MPoly::zero(),
            index_q: MPoly::zero(),
        },
    };
    // 12 lambda = kappa + delta by construction; revalidate anyway.
    let residue = &(&report.lambda.scale(&Rat::from_int(12)) - &report.kappa) - &report.delta;
    if !residue.is_zero() {
        return Err(Error::Contract("pencil invariants are inconsistent".into()));
    }
    Ok(FamilySpec {
        name: FamilyName::Pencil,
        genus: g,
        params: vec![("d", d), ("g", g), ("k", k)],
        report,
    })
}

/// A maximal-slope witness at a given genus: the F6 family covers
/// g = 0 (mod 3) and the P1xP1 family covers g = 1 (mod 3). No maximal family
/// with singular general member is known for g = 2 (mod 3) -- the natural
/// parameter e = (g+1)/3 violates the parity condition e = g (mod 2) --
/// so that case is refused rather than fabricated.
pub fn maximal_witness_for_genus(g: i64) -> Result<FamilySpec> {
    if g < 3 {
        return Err(Error::Contract(format!(
            "genus must be at least 3, got {g}"
        )));
    }
    match g.rem_euclid(3) {
        0 => family(
            FamilyName::Ex71,
            &FamilyParams {
                e: Some(g / 3),
                ..FamilyParams::default()
            },
        ),
        1 => family(
            FamilyName::Ex72,
            &FamilyParams {
                e: Some((g + 2) / 3),
                f: Some(1),
                ..FamilyParams::default()
            },
        ),
        _ => Err(Error::Contract(format!(
            "no maximal-slope witness is known for genus {g} = 2 (mod 3): \
             e = (g+1)/3 fails the parity condition e = g (mod 2), and no \
             construction with that slope has been found"
        ))),
    }
}

/// How a family's slope compares against the applicable bounds.
#[derive(Clone, Debug)]
pub struct SlopeReport {
    pub lambda: Rat,
    pub delta: Rat,
    pub slope: Rat,
    /// slope lies in [0, 12)
    pub in_range: bool,
    /// The semistable bound 7 + 6/g applies (4c2 - c1^2 >= 0).
    pub semistable_applicable: Option<bool>,
    /// slope equals the exact trigonal maximum 36(g+1)/(5g+1).
    pub maximal: bool,
    /// slope equals the hyperelliptic maximum 8 + 4/g.
    pub hyperelliptic_maximal: bool,
}

/// Compares a family's exact slope against every applicable bound.
/// Requires lambda > 0 (non-isotrivial).
pub fn slope_report(report: &InvariantReport, g: i64) -> Result<SlopeReport> {
    let lambda = report
        .lambda
        .as_constant()
        .ok_or_else(|| Error::Contract("slope report needs numeric invariants".into()))?;
    let delta = report
        .delta
        .as_constant()
        .ok_or_else(|| Error::Contract("slope report needs numeric invariants".into()))?;
    if !lambda.is_positive() {
        return Err(Error::Contract(format!(
            "slope undefined: lambda = {lambda} must be positive"
        )));
    }
    let slope = &delta / &lambda;
    let in_range = !slope.is_negative() && slope < Rat::from_int(12);
    let semistable_applicable = report.bogomolov.as_constant().map(|b| !b.is_negative());
    let gr = Rat::from_int(g);
    let max_trig =
        (&Rat::from_int(36) * &(&gr + &Rat::one())) / (&Rat::from_int(5) * &gr + Rat::one());
    let max_hyper = Rat::from_int(8) + &Rat::from_int(4) / &gr;
    Ok(SlopeReport {
        lambda,
        delta,
        slope: slope.clone(),
        in_range,
        semistable_applicable,
        maximal: slope == max_trig,
        hyperelliptic_maximal: slope == max_hyper,
    })
}

/// One row of the bound-comparison grid: the bound and its value per
/// genus column, `None` where the locus is degenerate at that genus.
pub type GridRow = (BoundName, Vec<(i64, Option<Rat>)>);

/// The bound-comparison grid: rows (general, hyperelliptic, trigonal,
/// tetragonal) by columns g = 1, 2, 3, 5, with entries only where the
/// locus is meaningful at that genus.
pub fn comparison_grid() -> Result<Vec<GridRow>> {
    let genera = [1i64, 2, 3, 5];
    let rows = [
        (BoundName::General, vec![1, 2, 3, 5]),
        (BoundName::Hyperelliptic, vec![1, 2]),
        (BoundName::TrigonalMax, vec![1, 3]),
        (BoundName::Tetragonal, vec![1, 5]),
    ];
    let mut out = Vec::new();
    for (name, defined) in rows {
        let mut cells = Vec::new();
        for g in genera {
            if defined.contains(&g) {
                cells.push((
                    g,
                    Some(
                        bound(name, g, &BoundExtra::default())?
                            .value
                            .value(&BTreeMap::new())
                            .expect("constant bound"),
                    ),
                ));
            } else {
                cells.push((g, None));
            }
        }
        out.push((name, cells));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    fn value_at(name: BoundName, g: i64) -> Rat {
        bound(name, g, &BoundExtra::default())
            .unwrap()
            .value
            .value(&BTreeMap::new())
            .unwrap()
    }

    #[test]
    fn table_values() {
        assert_eq!(value_at(BoundName::TrigonalMax, 3), Rat::from_int(9));
        assert_eq!(value_at(BoundName::Hyperelliptic, 2), Rat::from_int(10));
        assert_eq!(value_at(BoundName::General, 1), Rat::from_int(12));
        assert_eq!(value_at(BoundName::General, 3), Rat::from_int(9));
        assert_eq!(value_at(BoundName::General, 5), Rat::from_int(8));
        assert_eq!(value_at(BoundName::Tetragonal, 5), Rat::from_int(8));
    }

    #[test]
    fn grid_pattern() {
        let grid = comparison_grid().unwrap();
        // Every defined cell at g = 1 is 12; the diagonal matches the
        // general row.
        for (_, cells) in &grid {
            assert_eq!(cells[0].1, Some(Rat::from_int(12)));
        }
        let general: Vec<Option<Rat>> = grid[0].1.iter().map(|(_, v)| v.clone()).collect();
        assert_eq!(
            general,
            vec![
                Some(Rat::from_int(12)),
                Some(Rat::from_int(10)),
                Some(Rat::from_int(9)),
                Some(Rat::from_int(8))
            ]
        );
        assert_eq!(grid[1].1[1].1, Some(Rat::from_int(10))); // hyper at g=2
        assert_eq!(grid[2].1[2].1, Some(Rat::from_int(9))); // trigonal at g=3
        assert_eq!(grid[3].1[3].1, Some(Rat::from_int(8))); // tetragonal at g=5
        assert_eq!(grid[1].1[2].1, None);
    }

    #[test]
    fn conjecture_identities_hold() {
        for d in [2, 3, 4, 5, 7] {
            assert!(conjecture_identities(d).unwrap(), "d = {d}");
        }
        // d = 3, g = 1 gives 12 for any numeric f_d; g = g_3 = 3 gives 9.
        let spec = bound(
            BoundName::ConjectureFd,
            1,
            &BoundExtra {
                d: Some(3),
                fd: Some(rat(5, 7)),
                cliff: None,
            },
        )
        .unwrap();
        assert_eq!(
            spec.value.value(&BTreeMap::new()).unwrap(),
            Rat::from_int(12)
        );
        let spec = bound(
            BoundName::ConjectureFd,
            3,
            &BoundExtra {
                d: Some(3),
                fd: Some(rat(5, 7)),
                cliff: None,
            },
        )
        .unwrap();
        assert_eq!(
            spec.value.value(&BTreeMap::new()).unwrap(),
            Rat::from_int(9)
        );
        // f_d has no default.
        assert!(bound(
            BoundName::ConjectureFd,
            4,
            &BoundExtra {
                d: Some(3),
                fd: None,
                cliff: None
            }
        )
        .is_err());
    }

    #[test]
    fn hyper_pencil_values() {
        let fam = family(
            FamilyName::HyperPencil,
            &FamilyParams {
                g: Some(2),
                ..FamilyParams::default()
            },
        )
        .unwrap();
        assert_eq!(fam.report.delta, MPoly::int(20));
        assert_eq!(fam.report.lambda, MPoly::int(2));
        let rep = slope_report(&fam.report, 2).unwrap();
        assert_eq!(rep.slope, Rat::from_int(10));
        assert!(rep.hyperelliptic_maximal && rep.in_range);
    }

    #[test]
    fn ex71_at_e2() {
        let fam = family(
            FamilyName::Ex71,
            &FamilyParams {
                e: Some(2),
                ..FamilyParams::default()
            },
        )
        .unwrap();
        assert_eq!(fam.genus, 6);
        assert_eq!(fam.report.lambda, MPoly::int(62));
        assert_eq!(fam.report.delta, MPoly::int(504));
        assert_eq!(fam.report.d_inv, MPoly::int(18));
        assert!(fam.report.index_q.is_zero());
        let rep = slope_report(&fam.report, 6).unwrap();
        assert_eq!(rep.slope, rat(252, 31));
        assert!(rep.maximal);
        assert_eq!(rep.semistable_applicable, Some(false));
    }

    #[test]
    fn ex72_at_e2_f1() {
        // g = 4: lambda = f(5g+1)/3 = 7, delta = 12 f (g+1) = 60.
        let fam = family(
            FamilyName::Ex72,
            &FamilyParams {
                e: Some(2),
                f: Some(1),
                ..FamilyParams::default()
            },
        )
        .unwrap();
        assert_eq!(fam.genus, 4);
        assert_eq!(fam.report.lambda, MPoly::int(7));
        assert_eq!(fam.report.delta, MPoly::int(60));
        let rep = slope_report(&fam.report, 4).unwrap();
        assert_eq!(rep.slope, rat(60, 7));
        assert!(rep.maximal);
    }

    #[test]
    fn ex72_rejects_genus_one() {
        assert!(family(
            FamilyName::Ex72,
            &FamilyParams {
                e: Some(1),
                f: Some(1),
                ..FamilyParams::default()
            }
        )
        .is_err());
    }

    #[test]
    fn pencil_slopes() {
        // d = 3: slope 7 + 6/g with the semistable flag set.
        let fam = family(
            FamilyName::Pencil,
            &FamilyParams {
                d: Some(3),
                g: Some(5),
                ..FamilyParams::default()
            },
        )
        .unwrap();
        let rep = slope_report(&fam.report, 5).unwrap();
        assert_eq!(rep.slope, rat(41, 5)); // 7 + 6/5
        assert_eq!(rep.semistable_applicable, Some(true));
        assert!(!rep.maximal);
        // d = 2 reproduces 8 + 4/g.
        let fam = family(
            FamilyName::Pencil,
            &FamilyParams {
                d: Some(2),
                g: Some(3),
                ..FamilyParams::default()
            },
        )
        .unwrap();
        let rep = slope_report(&fam.report, 3).unwrap();
        assert_eq!(rep.slope, rat(28, 3));
        assert!(rep.hyperelliptic_maximal);
    }

    #[test]
    fn clifford_matches_trigonal_pencil() {
        // Clifford index 1 equals the d = 3 pencil bound; the plane-quintic
        // pencil value at g = 6 is 8.
        let c1 = bound_symbolic(
            BoundName::Clifford,
            &BoundExtra {
                cliff: Some(1),
                ..BoundExtra::default()
            },
        )
        .unwrap();
        let trig = bound_symbolic(BoundName::TrigonalSemistable, &BoundExtra::default()).unwrap();
        assert!(c1.equals(&trig));
        let at6 = c1
            .value(&BTreeMap::from([("g".to_string(), Rat::from_int(6))]))
            .unwrap();
        assert_eq!(at6, Rat::from_int(8));
    }

    #[test]
    fn maximal_witness_dispatch() {
        let w6 = maximal_witness_for_genus(6).unwrap();
        assert_eq!(w6.name, FamilyName::Ex71);
        assert_eq!(slope_of_report(&w6), rat(252, 31));
        let w7 = maximal_witness_for_genus(7).unwrap();
        assert_eq!(w7.name, FamilyName::Ex72);
        assert_eq!(slope_of_report(&w7), rat(288, 36));
        let err = maximal_witness_for_genus(8).unwrap_err();
        assert!(err.to_string().contains("2 (mod 3)"), "{err}");
    }

    fn slope_of_report(fam: &FamilySpec) -> Rat {
        let lam = fam.report.lambda.as_constant().unwrap();
        let del = fam.report.delta.as_constant().unwrap();
        del / lam
    }

    #[test]
    fn slope_requires_positive_lambda() {
        let zero = InvariantReport {
            lambda: MPoly::zero(),
            kappa: MPoly::zero(),
            delta: MPoly::zero(),
            d_inv: MPoly::zero(),
            bogomolov: MPoly::zero(),
            index_q: MPoly::zero(),
        };
        assert!(slope_report(&zero, 5).is_err());
    }
}
