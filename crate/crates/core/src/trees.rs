//! Rooted trees of special-fiber components.
//!
//! A special fiber of the birationally ruled surface is a tree of smooth
//! rational components, each reduced (multiplicity 1) or nonreduced
//! (multiplicity 2), with a reduced root. Each non-root component carries
//! the arithmetic genus `p` of the preimage of the subtree it generates;
//! genera are input data, not computed from curve geometry.
//!
//! From the tree shape and the genera we derive the component functions:
//!   m = E.E^-          (0 on the root, 1 if both ends reduced, else 2)
//!   theta              (path length to the root, omitting nonreduced
//!                       components except the endpoint itself)
//!   Theta = theta_E - theta_{E^-}
//!   Gamma              (from p = -m(Gamma + 3(Theta+1)/2) + 1 in trigonal
//!                       mode, p = -m(Gamma + Theta) in hyperelliptic mode)
//!   gamma              (sum of Gamma along the root path, gamma_R = 0)

use crate::error::{Error, Result};
use crate::poly::MPoly;
use crate::rational::Rat;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeMode {
    Trigonal,
    Hyperelliptic,
}

/// One component of a special fiber.
#[derive(Clone, Debug, PartialEq)]
pub struct TreeComponent {
    pub id: String,
    /// `None` for the root.
    pub parent: Option<String>,
    /// 1 (reduced) or 2 (nonreduced).
    pub mult: u8,
    /// Arithmetic genus of the preimage of the subtree generated by this
    /// component. Unused on the root.
    pub p: MPoly,
}

/// A rooted tree of fiber components.
#[derive(Clone, Debug, PartialEq)]
pub struct TreeFiber {
    pub components: Vec<TreeComponent>,
}

/// Derived per-component data.
#[derive(Clone, Debug, PartialEq)]
pub struct CompFuncs {
    pub m: Rat,
    pub theta: Rat,
    /// Theta = theta_E - theta_{E^-}
    pub theta_diff: Rat,
    pub gamma: MPoly,
    /// Gamma = gamma_E - gamma_{E^-}
    pub gamma_diff: MPoly,
}

impl TreeFiber {
    pub fn new(components: Vec<TreeComponent>) -> Result<TreeFiber> {
        let t = TreeFiber { components };
        t.validate()?;
        Ok(t)
    }

    /// Builds a chain root -> c1 -> c2 -> ... from `(id, mult, p)` triples.
    /// The root gets multiplicity 1 and genus 0.
    pub fn chain(root_id: &str, rest: &[(&str, u8, MPoly)]) -> Result<TreeFiber> {
        let mut components = vec![TreeComponent {
            id: root_id.to_string(),
            parent: None,
            mult: 1,
            p: MPoly::zero(),
        }];
        let mut prev = root_id.to_string();
        for (id, mult, p) in rest {
            components.push(TreeComponent {
                id: id.to_string(),
                parent: Some(prev.clone()),
                mult: *mult,
                p: p.clone(),
            });
            prev = id.to_string();
        }
        TreeFiber::new(components)
    }

    fn validate(&self) -> Result<()> {
        let mut roots = 0;
        let mut ids = BTreeSet::new();
        for c in &self.components {
            if !ids.insert(c.id.clone()) {
                return Err(Error::BadTree(format!("duplicate component id `{}`", c.id)));
            }
            if c.mult != 1 && c.mult != 2 {
                return Err(Error::BadTree(format!(
                    "component `{}` has multiplicity {}, expected 1 or 2",
                    c.id, c.mult
                )));
            }
            if c.parent.is_none() {
                roots += 1;
                if c.mult != 1 {
                    return Err(Error::BadTree("nonreduced root".into()));
                }
            }
        }
        if roots != 1 {
            return Err(Error::BadTree(format!(
                "expected exactly one root, found {roots}"
            )));
        }
        for c in &self.components {
            if let Some(par) = &c.parent {
                if !ids.contains(par) {
                    return Err(Error::BadTree(format!(
                        "component `{}` has unknown parent `{par}`",
                        c.id
                    )));
                }
            }
        }
        // Parent links must reach the root without cycles.
        for c in &self.components {
            let mut seen = BTreeSet::new();
            let mut cur = c;
            while let Some(par) = &cur.parent {
                if !seen.insert(cur.id.clone()) {
                    return Err(Error::BadTree(format!("cycle through `{}`", c.id)));
                }
                cur = self.component(par)?;
            }
        }
        Ok(())
    }

    pub fn root(&self) -> &TreeComponent {
        self.components
            .iter()
            .find(|c| c.parent.is_none())
            .expect("validated tree has a root")
    }

    pub fn component(&self, id: &str) -> Result<&TreeComponent> {
        self.components
            .iter()
            .find(|c| c.id == id)
            .ok_or_else(|| Error::UnknownComponent(id.to_string()))
    }

    pub fn is_root(&self, id: &str) -> bool {
        self.component(id)
            .map(|c| c.parent.is_none())
            .unwrap_or(false)
    }

    pub fn children(&self, id: &str) -> Vec<&TreeComponent> {
        self.components
            .iter()
            .filter(|c| c.parent.as_deref() == Some(id))
            .collect()
    }

    pub fn non_roots(&self) -> impl Iterator<Item = &TreeComponent> {
        self.components.iter().filter(|c| c.parent.is_some())
    }

    /// Path from the root to `id`, excluding the root itself.
    fn root_path(&self, id: &str) -> Result<Vec<&TreeComponent>> {
        let mut path = Vec::new();
        let mut cur = self.component(id)?;
        while cur.parent.is_some() {
            path.push(cur);
            cur = self.component(cur.parent.as_deref().unwrap())?;
        }
        path.reverse();
        Ok(path)
    }

    /// m_E = E.E^-: 0 on the root, 1 when E and E^- are both reduced,
    /// 2 when either is nonreduced.
    pub fn m_of(&self, id: &str) -> Result<Rat> {
        let c = self.component(id)?;
        match &c.parent {
            None => Ok(Rat::zero()),
            Some(par) => {
                let p = self.component(par)?;
                if c.mult == 1 && p.mult == 1 {
                    Ok(Rat::one())
                } else {
                    Ok(Rat::from_int(2))
                }
            }
        }
    }

    /// theta_E: the number of components on the root path (root excluded)
    /// that are reduced or equal to E itself. This is the literal reading of
    /// the path-length rule; it yields Theta = 1 except directly after a
    /// nonreduced component, where Theta = 0.
    pub fn theta_of(&self, id: &str) -> Result<Rat> {
        let path = self.root_path(id)?;
        let mut len = 0i64;
        for c in &path {
            if c.mult == 1 || c.id == id {
                len += 1;
            }
        }
        Ok(Rat::from_int(len))
    }

    /// Gamma_E from the arithmetic genus by inverting the adjunction
    /// identity. Trigonal: p = -m(Gamma + 3(Theta+1)/2) + 1.
    /// Hyperelliptic: p = -m(Gamma + Theta).
    fn gamma_diff_of(&self, id: &str, mode: TreeMode) -> Result<MPoly> {
        let c = self.component(id)?;
        let m = self.m_of(id)?;
        if m.is_zero() {
            return Ok(MPoly::zero());
        }
        let theta_diff = {
            let parent = c.parent.as_deref().unwrap();
            &self.theta_of(id)? - &self.theta_of(parent)?
        };
        let m_inv = Rat::one() / m;
        match mode {
            TreeMode::Trigonal => {
                // Gamma = (1 - p)/m - 3(Theta + 1)/2
                let lead = (&MPoly::one() - &c.p).scale(&m_inv);
                let shift = (&theta_diff + &Rat::one()) * Rat::new(3, 2);
                Ok(&lead - &MPoly::constant(shift))
            }
            TreeMode::Hyperelliptic => {
                // Gamma = -p/m - Theta
                let lead = (-&c.p).scale(&m_inv);
                Ok(&lead - &MPoly::constant(theta_diff))
            }
        }
    }
}

/// Derives {m, theta, Theta, gamma, Gamma} for every component.
///
/// In hyperelliptic mode all components must be reduced.
pub fn derive_functions(tree: &TreeFiber, mode: TreeMode) -> Result<BTreeMap<String, CompFuncs>> {
    tree.validate()?;
    if mode == TreeMode::Hyperelliptic {
        if let Some(c) = tree.components.iter().find(|c| c.mult != 1) {
            return Err(Error::Contract(format!(
                "nonreduced component `{}` in hyperelliptic mode",
                c.id
            )));
        }
    }
    let mut out = BTreeMap::new();
    for c in &tree.components {
        let theta = tree.theta_of(&c.id)?;
        let theta_diff = match &c.parent {
            None => Rat::zero(),
            Some(par) => &theta - &tree.theta_of(par)?,
        };
        let gamma_diff = tree.gamma_diff_of(&c.id, mode)?;
        let gamma = {
            let mut acc = MPoly::zero();
            for e in tree.root_path(&c.id)? {
                acc = &acc + &tree.gamma_diff_of(&e.id, mode)?;
            }
            acc
        };
        out.insert(
            c.id.clone(),
            CompFuncs {
                m: tree.m_of(&c.id)?,
                theta,
                theta_diff,
                gamma,
                gamma_diff,
            },
        );
    }
    Ok(out)
}

/// Recovers the stored arithmetic genus from the derived (m, Theta, Gamma):
/// the adjunction identity p = -m(Gamma + 3(Theta+1)/2) + 1 (trigonal) or
/// p = -m(Gamma + Theta) (hyperelliptic). Round-trips with
/// [`derive_functions`]. Errors when the root is queried.
pub fn genus_of_subtree(tree: &TreeFiber, id: &str, mode: TreeMode) -> Result<MPoly> {
    if tree.is_root(id) {
        return Err(Error::Contract(format!(
            "arithmetic genus is defined for non-root components only, got root `{id}`"
        )));
    }
    let funcs = derive_functions(tree, mode)?;
    let f = &funcs[id];
    let m = MPoly::constant(f.m.clone());
    match mode {
        TreeMode::Trigonal => {
            // p = -m(Gamma + 3(Theta+1)/2) + 1
            let inner =
                &f.gamma_diff + &MPoly::constant((&f.theta_diff + &Rat::one()) * Rat::new(3, 2));
            Ok(&(-&(&m * &inner)) + &MPoly::one())
        }
        TreeMode::Hyperelliptic => {
            let inner = &f.gamma_diff + &MPoly::constant(f.theta_diff.clone());
            Ok(-&(&m * &inner))
        }
    }
}

/// Intersection number of two components of one tree, in the divisor-class
/// convention where nonreduced components carry their multiplicity:
/// E.E^- = m_E, non-adjacent pairs meet in 0, and
/// E^2 = -(m_E + sum of m over the children of E), which is exactly the
/// statement that every component pairs to zero with the full fiber.
pub fn component_pairing(tree: &TreeFiber, a: &str, b: &str) -> Result<Rat> {
    tree.component(a)?;
    tree.component(b)?;
    if a == b {
        let mut s = tree.m_of(a)?;
        for child in tree.children(a) {
            s += &tree.m_of(&child.id)?;
        }
        return Ok(-s);
    }
    let ca = tree.component(a)?;
    let cb = tree.component(b)?;
    if ca.parent.as_deref() == Some(b) {
        return tree.m_of(a);
    }
    if cb.parent.as_deref() == Some(a) {
        return tree.m_of(b);
    }
    Ok(Rat::zero())
}

/// Both sides of the pairing identity
/// (sum f_E E) . (sum h_E E) = -sum m_E F_E H_E,
/// where F, H are the difference functions of f, h along the tree.
/// Both functions must vanish on the root. The two sides are computed
/// independently (bilinear expansion vs closed form), asserted equal, and
/// the closed form is returned.
pub fn tree_product(
    tree: &TreeFiber,
    fvals: &BTreeMap<String, MPoly>,
    hvals: &BTreeMap<String, MPoly>,
) -> Result<MPoly> {
    for (name, vals) in [("f", fvals), ("h", hvals)] {
        if let Some(v) = vals.get(&tree.root().id) {
            if !v.is_zero() {
                return Err(Error::Contract(format!(
                    "{name} must vanish on the root component"
                )));
            }
        }
    }
    let lookup = |vals: &BTreeMap<String, MPoly>, id: &str| -> MPoly {
        vals.get(id).cloned().unwrap_or_else(MPoly::zero)
    };
    // Bilinear expansion over all component pairs.
    let mut expansion = MPoly::zero();
    for ca in &tree.components {
        for cb in &tree.components {
            let pairing = component_pairing(tree, &ca.id, &cb.id)?;
            if pairing.is_zero() {
                continue;
            }
            let term = &(&lookup(fvals, &ca.id) * &lookup(hvals, &cb.id)).scale(&pairing);
            expansion = &expansion + term;
        }
    }
    // Closed form -sum m F H over non-root components.
    let mut closed = MPoly::zero();
    for c in tree.non_roots() {
        let parent = c.parent.as_deref().unwrap();
        let fd = &lookup(fvals, &c.id) - &lookup(fvals, parent);
        let hd = &lookup(hvals, &c.id) - &lookup(hvals, parent);
        closed = &closed - &(&fd * &hd).scale(&tree.m_of(&c.id)?);
    }
    if !(&expansion - &closed).is_zero() {
        return Err(Error::Contract(format!(
            "tree pairing identity failed: expansion {expansion} != closed form {closed}"
        )));
    }
    Ok(closed)
}

/// Header data of a tree description file.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct TreeFile {
    pub genus: Rat,
    pub mu: i64,
    pub ram1: i64,
    pub ram2: i64,
    pub tree: TreeFiber,
}

impl Default for TreeFiber {
    fn default() -> TreeFiber {
        TreeFiber {
            components: vec![TreeComponent {
                id: "R".into(),
                parent: None,
                mult: 1,
                p: MPoly::zero(),
            }],
        }
    }
}

/// Parses the line-oriented tree description format:
///
/// ```text
/// # comment
/// genus 6
/// mu 0
/// ram1 0
/// ram2 0
/// R  -     0
/// E1 R(1)  3
/// E2 E1(2) 1
/// ```
///
/// Header lines are `genus G`, `mu M`, `ram1 N`, `ram2 N`; component lines
/// are `id parent(mult) p` with `-` as the root's parent. Whitespace
/// delimited; `#` starts a comment.
pub fn parse_tree_file(text: &str) -> Result<TreeFile> {
    let mut genus = None;
    let mut mu = 0i64;
    let mut ram1 = 0i64;
    let mut ram2 = 0i64;
    let mut components = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.split_once('#') {
            Some((before, _)) => before,
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let err = |msg: &str| Error::Parse(format!("line {}: {msg}", lineno + 1));
        match fields[0] {
            "genus" | "mu" | "ram1" | "ram2" => {
                if fields.len() != 2 {
                    return Err(err("expected one value after header keyword"));
                }
                let value = Rat::parse(fields[1]).ok_or_else(|| err("invalid rational value"))?;
                match fields[0] {
                    "genus" => genus = Some(value),
                    "mu" => mu = value.to_i64().ok_or_else(|| err("mu must be an integer"))?,
                    "ram1" => {
                        ram1 = value
                            .to_i64()
                            .ok_or_else(|| err("ram1 must be an integer"))?
                    }
                    _ => {
                        ram2 = value
                            .to_i64()
                            .ok_or_else(|| err("ram2 must be an integer"))?
                    }
                }
            }
            id => {
                if fields.len() != 3 {
                    return Err(err("expected `id parent(mult) p`"));
                }
                let (parent, mult) = if fields[1] == "-" {
                    (None, 1u8)
                } else {
                    let (par, rest) = fields[1]
                        .split_once('(')
                        .ok_or_else(|| err("expected parent(mult)"))?;
                    let mult_str = rest
                        .strip_suffix(')')
                        .ok_or_else(|| err("expected closing parenthesis"))?;
                    let mult: u8 = mult_str
                        .parse()
                        .map_err(|_| err("multiplicity must be 1 or 2"))?;
                    (Some(par.to_string()), mult)
                };
                let p = Rat::parse(fields[2]).ok_or_else(|| err("invalid genus value"))?;
                components.push(TreeComponent {
                    id: id.to_string(),
                    parent,
                    mult,
                    p: MPoly::constant(p),
                });
            }
        }
    }
    let genus = genus.ok_or_else(|| Error::Parse("missing `genus` header".into()))?;
    Ok(TreeFile {
        genus,
        mu,
        ram1,
        ram2,
        tree: TreeFiber::new(components)?,
    })
}
