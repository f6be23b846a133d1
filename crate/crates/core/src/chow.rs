//! The birationally ruled surface and the Chow ring of the P^1-bundle PV.
//!
//! The surface has the normalized basis B0, F with B0^2 = F^2 = 0 and
//! B0.F = 1, plus the non-root components E of its special-fiber trees,
//! which pair to zero with B0 and F. Degree-two classes only ever enter
//! through their degrees, so A^2 of the surface is represented by a scalar.
//!
//! On PV the Chow ring is generated over the pullback of A(Y) by the
//! hyperplane class zeta with the single relation
//! zeta^2 + pi*c1(V) zeta + pi*c2(V) = 0; every class is kept in the
//! canonical form a + zeta b with a, b pulled back from Y.

use crate::error::{Error, Result};
use crate::poly::MPoly;
use crate::rational::Rat;
use crate::trees::{self, CompFuncs, TreeFiber, TreeMode};
use std::collections::BTreeMap;

/// A divisor on the surface in the basis {B0, F, components E}.
/// Absent components have coefficient zero; the root coefficient of each
/// fiber tree is zero by normalization and roots are never stored.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct DivY {
    pub b0: MPoly,
    pub f: MPoly,
    pub comps: BTreeMap<String, MPoly>,
}

impl DivY {
    pub fn new(b0: MPoly, f: MPoly) -> DivY {
        DivY {
            b0,
            f,
            comps: BTreeMap::new(),
        }
    }

    pub fn zero() -> DivY {
        DivY::default()
    }

    pub fn with_comp(mut self, id: &str, coeff: MPoly) -> DivY {
        if !coeff.is_zero() {
            self.comps.insert(id.to_string(), coeff);
        }
        self
    }

    pub fn add(&self, other: &DivY) -> DivY {
        let mut comps = self.comps.clone();
        for (id, c) in &other.comps {
            let entry = comps.entry(id.clone()).or_insert_with(MPoly::zero);
            *entry = &*entry + c;
        }
        comps.retain(|_, c| !c.is_zero());
        DivY {
            b0: &self.b0 + &other.b0,
            f: &self.f + &other.f,
            comps,
        }
    }

    pub fn scale(&self, k: &MPoly) -> DivY {
        let mut comps: BTreeMap<String, MPoly> = self
            .comps
            .iter()
            .map(|(id, c)| (id.clone(), c * k))
            .collect();
        comps.retain(|_, c| !c.is_zero());
        DivY {
            b0: &self.b0 * k,
            f: &self.f * k,
            comps,
        }
    }

    pub fn neg(&self) -> DivY {
        self.scale(&MPoly::int(-1))
    }

    pub fn is_zero(&self) -> bool {
        self.b0.is_zero() && self.f.is_zero() && self.comps.values().all(MPoly::is_zero)
    }
}

/// The birationally ruled surface: a base curve of genus `gB` and the
/// special-fiber trees. Tree component ids must be globally unique.
#[derive(Clone, Debug)]
pub struct SurfaceModel {
    pub base_genus: MPoly,
    pub trees: Vec<TreeFiber>,
    mode: TreeMode,
    /// id -> (tree index, derived functions)
    funcs: BTreeMap<String, (usize, CompFuncs)>,
}

impl SurfaceModel {
    /// The plain ruled surface (no special fibers).
    pub fn ruled(base_genus: MPoly) -> SurfaceModel {
        SurfaceModel {
            base_genus,
            trees: Vec::new(),
            mode: TreeMode::Trigonal,
            funcs: BTreeMap::new(),
        }
    }

    pub fn with_trees(
        base_genus: MPoly,
        trees: Vec<TreeFiber>,
        mode: TreeMode,
    ) -> Result<SurfaceModel> {
        let mut funcs = BTreeMap::new();
        for (idx, tree) in trees.iter().enumerate() {
            for (id, cf) in trees::derive_functions(tree, mode)? {
                if funcs.insert(id.clone(), (idx, cf)).is_some() {
                    return Err(Error::BadTree(format!(
                        "component id `{id}` appears in more than one tree"
                    )));
                }
            }
        }
        Ok(SurfaceModel {
            base_genus,
            trees,
            mode,
            funcs,
        })
    }

    pub fn mode(&self) -> TreeMode {
        self.mode
    }

    fn lookup(&self, id: &str) -> Result<&(usize, CompFuncs)> {
        self.funcs
            .get(id)
            .ok_or_else(|| Error::UnknownComponent(id.to_string()))
    }

    /// Derived functions of a component (m, theta, Theta, gamma, Gamma).
    pub fn comp_funcs(&self, id: &str) -> Result<&CompFuncs> {
        Ok(&self.lookup(id)?.1)
    }

    fn check_non_root(&self, id: &str) -> Result<()> {
        let (tree_idx, _) = self.lookup(id)?;
        if self.trees[*tree_idx].is_root(id) {
            return Err(Error::Contract(format!(
                "root component `{id}` is not a basis divisor (its coefficient is normalized away)"
            )));
        }
        Ok(())
    }

    /// Number of non-root components over all trees.
    pub fn non_root_count(&self) -> usize {
        self.trees.iter().map(|t| t.non_roots().count()).sum()
    }

    /// c1(V) as a divisor: c B0 + d F + sum gamma_E E with the gamma's
    /// derived from the tree genera.
    pub fn c1_divisor(&self, c: &MPoly, d: &MPoly) -> DivY {
        let mut div = DivY::new(c.clone(), d.clone());
        for tree in &self.trees {
            for comp in tree.non_roots() {
                let gamma = self.funcs[&comp.id].1.gamma.clone();
                if !gamma.is_zero() {
                    div.comps.insert(comp.id.clone(), gamma);
                }
            }
        }
        div
    }

    /// K of the surface: -2 B0 + (2gB - 2) F + sum theta_E E.
    pub fn canonical_divisor(&self) -> DivY {
        let two_gb_2 = &self.base_genus.scale(&Rat::from_int(2)) - &MPoly::int(2);
        let mut div = DivY::new(MPoly::int(-2), two_gb_2);
        self.add_theta_terms(&mut div);
        div
    }

    /// Relative K over the base curve: -2 B0 + sum theta_E E.
    pub fn relative_canonical_divisor(&self) -> DivY {
        let mut div = DivY::new(MPoly::int(-2), MPoly::zero());
        self.add_theta_terms(&mut div);
        div
    }

    fn add_theta_terms(&self, div: &mut DivY) {
        for tree in &self.trees {
            for comp in tree.non_roots() {
                let theta = &self.funcs[&comp.id].1.theta;
                if !theta.is_zero() {
                    div.comps
                        .insert(comp.id.clone(), MPoly::constant(theta.clone()));
                }
            }
        }
    }

    /// c2 of the surface: 4(1 - gB) plus one for each non-root component.
    pub fn c2_surface(&self) -> MPoly {
        let base = (&MPoly::one() - &self.base_genus).scale(&Rat::from_int(4));
        &base + &MPoly::int(self.non_root_count() as i64)
    }
}

/// The symmetric intersection form on the surface: B0^2 = F^2 = 0,
/// B0.F = 1, components pair to zero with B0 and F and intersect within
/// their own tree via E.E^- = m_E and the self-intersection rule.
pub fn intersect_y(a: &DivY, b: &DivY, model: &SurfaceModel) -> Result<MPoly> {
    let mut out = &(&a.b0 * &b.f) + &(&a.f * &b.b0);
    for (ida, ca) in &a.comps {
        model.check_non_root(ida)?;
        for (idb, cb) in &b.comps {
            model.check_non_root(idb)?;
            let (ta, _) = model.lookup(ida)?;
            let (tb, _) = model.lookup(idb)?;
            if ta != tb {
                continue; // components of distinct fibers are disjoint
            }
            let pairing = trees::component_pairing(&model.trees[*ta], ida, idb)?;
            if !pairing.is_zero() {
                out = &out + &(ca * cb).scale(&pairing);
            }
        }
    }
    Ok(out)
}

/// Chern data of the rank-2 bundle V on the surface. In canonical mode the
/// divisor of X in PV is 2 c1(V); it is never stored separately.
#[derive(Clone, Debug)]
pub struct BundleData {
    pub c1: DivY,
    /// Degree of the second Chern class.
    pub c2: MPoly,
}

impl BundleData {
    pub fn new(c1: DivY, c2: MPoly) -> BundleData {
        BundleData { c1, c2 }
    }

    /// Twist by a line bundle M: c1 -> c1 + 2M, c2 -> c2 + c1.M + M^2.
    pub fn twist(&self, m: &DivY, model: &SurfaceModel) -> Result<BundleData> {
        let c1 = self.c1.add(&m.scale(&MPoly::int(2)));
        let c2 = &(&self.c2 + &intersect_y(&self.c1, m, model)?) + &intersect_y(m, m, model)?;
        Ok(BundleData { c1, c2 })
    }

    /// The Bogomolov quantity c1^2 - 4 c2.
    pub fn c1_sq_minus_4c2(&self, model: &SurfaceModel) -> Result<MPoly> {
        let c1sq = intersect_y(&self.c1, &self.c1, model)?;
        Ok(&c1sq - &self.c2.scale(&Rat::from_int(4)))
    }
}

/// A graded class pulled back from the surface: scalar + divisor + degree
/// of the A^2 part.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct YClass {
    pub s: MPoly,
    pub d: DivY,
    pub pt: MPoly,
}

impl YClass {
    pub fn zero() -> YClass {
        YClass::default()
    }

    pub fn scalar(s: MPoly) -> YClass {
        YClass {
            s,
            ..YClass::default()
        }
    }

    pub fn divisor(d: DivY) -> YClass {
        YClass {
            d,
            ..YClass::default()
        }
    }

    pub fn point(pt: MPoly) -> YClass {
        YClass {
            pt,
            ..YClass::default()
        }
    }

    pub fn add(&self, other: &YClass) -> YClass {
        YClass {
            s: &self.s + &other.s,
            d: self.d.add(&other.d),
            pt: &self.pt + &other.pt,
        }
    }

    pub fn scale(&self, k: &MPoly) -> YClass {
        YClass {
            s: &self.s * k,
            d: self.d.scale(k),
            pt: &self.pt * k,
        }
    }

    /// Ring product on the surface; everything above A^2 vanishes.
    pub fn mul(&self, other: &YClass, model: &SurfaceModel) -> Result<YClass> {
        let dd = intersect_y(&self.d, &other.d, model)?;
        Ok(YClass {
            s: &self.s * &other.s,
            d: self.d.scale(&other.s).add(&other.d.scale(&self.s)),
            pt: &(&(&self.pt * &other.s) + &(&other.pt * &self.s)) + &dd,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.s.is_zero() && self.d.is_zero() && self.pt.is_zero()
    }
}

/// A Chow class of PV in the canonical form `y0 + zeta * y1` with both
/// parts pulled back from the surface. The zeta-degree never exceeds one;
/// grading above A^3(PV) is truncated automatically.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct PVClass {
    pub y0: YClass,
    pub y1: YClass,
}

impl PVClass {
    pub fn zero() -> PVClass {
        PVClass::default()
    }

    pub fn from_y(y0: YClass) -> PVClass {
        PVClass {
            y0,
            y1: YClass::zero(),
        }
    }

    pub fn zeta() -> PVClass {
        PVClass {
            y0: YClass::zero(),
            y1: YClass::scalar(MPoly::one()),
        }
    }

    pub fn pullback_divisor(d: DivY) -> PVClass {
        PVClass::from_y(YClass::divisor(d))
    }

    pub fn scalar(s: MPoly) -> PVClass {
        PVClass::from_y(YClass::scalar(s))
    }

    pub fn add(&self, other: &PVClass) -> PVClass {
        PVClass {
            y0: self.y0.add(&other.y0),
            y1: self.y1.add(&other.y1),
        }
    }

    pub fn sub(&self, other: &PVClass) -> PVClass {
        self.add(&other.scale(&MPoly::int(-1)))
    }

    pub fn scale(&self, k: &MPoly) -> PVClass {
        PVClass {
            y0: self.y0.scale(k),
            y1: self.y1.scale(k),
        }
    }
}

/// Product in the Chow ring of PV, reduced to canonical zeta-degree <= 1
/// form via zeta^2 = -pi*c1 zeta - pi*c2 and truncated above A^3.
pub fn pv_mul(
    x: &PVClass,
    y: &PVClass,
    bundle: &BundleData,
    model: &SurfaceModel,
) -> Result<PVClass> {
    let z0 = x.y0.mul(&y.y0, model)?;
    let z1 = x.y0.mul(&y.y1, model)?.add(&x.y1.mul(&y.y0, model)?);
    let z2 = x.y1.mul(&y.y1, model)?;
    // zeta^2 * z2 = -(pi*c2) z2 - zeta (pi*c1) z2. Only the scalar and
    // divisor parts of z2 survive: zeta^2 against the point part of z2
    // lands above A^3.
    let c2_part = YClass::point(&bundle.c2 * &z2.s);
    let c1_part = YClass::divisor(bundle.c1.clone()).mul(&z2, model)?;
    Ok(PVClass {
        y0: z0.add(&c2_part.scale(&MPoly::int(-1))),
        y1: z1.add(&c1_part.scale(&MPoly::int(-1))),
    })
}

/// The degree map on A^3(PV): zeta . pi*(point) = 1, so a canonical
/// top-degree class `zeta . pi*(theta)` has degree `deg theta`, and the
/// pullback part of A^3 is zero. Errors when the class has components
/// below the top degree.
pub fn pv_degree(x: &PVClass) -> Result<MPoly> {
    if !x.y0.s.is_zero() || !x.y0.d.is_zero() || !x.y1.s.is_zero() || !x.y1.d.is_zero() {
        return Err(Error::Contract(
            "pv_degree expects a homogeneous top-degree class".into(),
        ));
    }
    // x = pi*(A^2 part) + zeta pi*(point part); the pure pullback A^2 part
    // must also be absent for a top-degree class.
    if !x.y0.pt.is_zero() {
        return Err(Error::Contract(
            "pv_degree expects a top-degree class; found an A^2 component".into(),
        ));
    }
    Ok(x.y1.pt.clone())
}

/// Fiber mode of the embedded family: a triple cover has X = 3 zeta + 2 pi*c1,
/// a double cover X = 2 zeta + 2 pi*c1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverKind {
    Triple,
    Double,
}

impl CoverKind {
    pub fn degree(self) -> i64 {
        match self {
            CoverKind::Triple => 3,
            CoverKind::Double => 2,
        }
    }

    /// deg c1(V)|_F in terms of the fiber genus: g + 2 for triple covers,
    /// g + 1 for double covers.
    pub fn genus_offset(self) -> i64 {
        match self {
            CoverKind::Triple => 2,
            CoverKind::Double => 1,
        }
    }
}

/// The canonical divisor and Chern classes of the surface and of PV,
/// together with the class of the embedded family X.
#[derive(Clone, Debug)]
pub struct CanonicalClasses {
    pub k_y: DivY,
    pub k_pv: PVClass,
    pub omega_pi: PVClass,
    pub c2_y: MPoly,
    pub c2_pv: PVClass,
    pub x_class: PVClass,
}

/// Assembles K_Y, K_PV, omega_pi, c2(Y), c2(PV) and the divisor class of X.
pub fn canonical_classes(
    model: &SurfaceModel,
    bundle: &BundleData,
    kind: CoverKind,
) -> Result<CanonicalClasses> {
    let k_y = model.canonical_divisor();
    let c1_pv = PVClass::pullback_divisor(bundle.c1.clone());
    let two_zeta = PVClass::zeta().scale(&MPoly::int(2));
    // omega_pi = -2 zeta - pi*c1
    let omega_pi = two_zeta.add(&c1_pv).scale(&MPoly::int(-1));
    // K_PV = -2 zeta - pi*c1 + pi*K_Y
    let k_pv = omega_pi.add(&PVClass::pullback_divisor(k_y.clone()));
    let c2_y = model.c2_surface();
    // c2(PV) = pi*c2(Y) - pi*K_Y (2 zeta + pi*c1)
    let c2_pv = {
        let ky_class = PVClass::pullback_divisor(k_y.clone());
        let factor = two_zeta.add(&c1_pv);
        let prod = pv_mul(&ky_class, &factor, bundle, model)?;
        PVClass::from_y(YClass::point(c2_y.clone())).sub(&prod)
    };
    // X = (cover degree) zeta + 2 pi*c1 since D = 2 c1(V).
    let x_class = PVClass::zeta()
        .scale(&MPoly::int(kind.degree()))
        .add(&c1_pv.scale(&MPoly::int(2)));
    Ok(CanonicalClasses {
        k_y,
        k_pv,
        omega_pi,
        c2_y,
        c2_pv,
        x_class,
    })
}

/// K of PV relative to the base curve: -2 zeta - pi*c1 + pi*K_{Y/B}.
pub fn relative_canonical_pv(model: &SurfaceModel, bundle: &BundleData) -> PVClass {
    let c1_pv = PVClass::pullback_divisor(bundle.c1.clone());
    PVClass::zeta()
        .scale(&MPoly::int(-2))
        .sub(&c1_pv)
        .add(&PVClass::pullback_divisor(
            model.relative_canonical_divisor(),
        ))
}
