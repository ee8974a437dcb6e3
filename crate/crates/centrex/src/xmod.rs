//! Finite precrossed and crossed modules.
//!
//! A precrossed module is a homomorphism `boundary : T -> G` with a left
//! action of `G` on `T` by automorphisms satisfying equivariance
//! `boundary(g . t) = g boundary(t) g^-1`.  Crossed modules additionally
//! satisfy the Peiffer identity `(boundary(t)) . t' = t t' t^-1`.
//!
//! All data is finite: groups are multiplication tables, the action is a
//! lookup table `action[g][t]`.  Construction validates everything and
//! reports the first violated law with a witness.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::fingrp::{enumerate_homs, FiniteGroup, GroupError, GroupHom, HomConstraint, Subgroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum XmodError {
    #[error("action table has wrong shape")]
    ActionShape,
    #[error("action of {g} is not a permutation of T")]
    ActionNotPermutation { g: usize },
    #[error("action of {g} is not an automorphism: moves product of ({t1},{t2}) wrongly")]
    ActionNotAutomorphism { g: usize, t1: usize, t2: usize },
    #[error("action is not functorial at ({g},{h}) on {t}")]
    ActionNotFunctorial { g: usize, h: usize, t: usize },
    #[error("identity of G moves {t}")]
    ActionIdentityMoves { t: usize },
    #[error("equivariance fails at g = {g}, t = {t}")]
    NotEquivariant { g: usize, t: usize },
    #[error("Peiffer identity fails on ({m},{n})")]
    NotCrossed { m: usize, n: usize },
    #[error("pair is not a sub precrossed module: {0}")]
    NotSub(String),
    #[error("pair is not a normal sub precrossed module: {0}")]
    NotNormalSub(String),
    #[error("centre is not closed: {0}")]
    CentreIllFormed(String),
    #[error("morphism parts do not match the stated modules")]
    Mismatch,
    #[error("pair of maps is not a morphism: boundary square fails at t = {t}")]
    SquareFails { t: usize },
    #[error("pair of maps is not a morphism: action not preserved at g = {g}, t = {t}")]
    ActionNotPreserved { g: usize, t: usize },
    #[error("size {size} exceeds the enumeration guard {guard}")]
    SizeGuard { size: usize, guard: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Validated precrossed module.
#[derive(Clone)]
pub struct PrecrossedModule {
    t: Arc<FiniteGroup>,
    g: Arc<FiniteGroup>,
    boundary: GroupHom,
    action: Vec<Vec<usize>>,
}

impl PartialEq for PrecrossedModule {
    fn eq(&self, other: &Self) -> bool {
        self.t == other.t
            && self.g == other.g
            && self.boundary.images() == other.boundary.images()
            && self.action == other.action
    }
}

impl Eq for PrecrossedModule {}

impl fmt::Debug for PrecrossedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PrecrossedModule(|T| = {}, |G| = {})", self.t.order(), self.g.order())
    }
}

/// Subobject: a pair of subgroups, the top part of `T` and the base part
/// of `G`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PxSub {
    pub t_part: Subgroup,
    pub g_part: Subgroup,
}

/// Validity verdict for raw precrossed module data.
#[derive(Clone, Debug)]
pub struct PxmVerdict {
    pub is_precrossed: bool,
    pub precrossed_failure: Option<XmodError>,
    pub is_crossed: bool,
    pub peiffer_witness: Option<(usize, usize)>,
}

impl PrecrossedModule {
    pub fn new(
        t: Arc<FiniteGroup>,
        g: Arc<FiniteGroup>,
        boundary: GroupHom,
        action: Vec<Vec<usize>>,
    ) -> Result<Arc<Self>, XmodError> {
        if boundary.source() != &t || boundary.target() != &g {
            return Err(XmodError::Mismatch);
        }
        let nt = t.order();
        let ng = g.order();
        if action.len() != ng || action.iter().any(|row| row.len() != nt) {
            return Err(XmodError::ActionShape);
        }
        for (gi, row) in action.iter().enumerate() {
            let mut seen = vec![false; nt];
            for &img in row {
                if img >= nt || seen[img] {
                    return Err(XmodError::ActionNotPermutation { g: gi });
                }
                seen[img] = true;
            }
        }
        for (gi, row) in action.iter().enumerate() {
            for t1 in 0..nt {
                for t2 in 0..nt {
                    if row[t.mul(t1, t2)] != t.mul(row[t1], row[t2]) {
                        return Err(XmodError::ActionNotAutomorphism { g: gi, t1, t2 });
                    }
                }
            }
        }
        let e = g.id();
        for ti in 0..nt {
            if action[e][ti] != ti {
                return Err(XmodError::ActionIdentityMoves { t: ti });
            }
        }
        for gi in 0..ng {
            for hi in 0..ng {
                let gh = g.mul(gi, hi);
                for ti in 0..nt {
                    if action[gi][action[hi][ti]] != action[gh][ti] {
                        return Err(XmodError::ActionNotFunctorial { g: gi, h: hi, t: ti });
                    }
                }
            }
        }
        for gi in 0..ng {
            for ti in 0..nt {
                if boundary.apply(action[gi][ti]) != g.conj(gi, boundary.apply(ti)) {
                    return Err(XmodError::NotEquivariant { g: gi, t: ti });
                }
            }
        }
        Ok(Arc::new(PrecrossedModule { t, g, boundary, action }))
    }

    /// Raw data verdict: what fails, if anything, and whether the Peiffer
    /// identity holds on top.
    pub fn validate(
        t: Arc<FiniteGroup>,
        g: Arc<FiniteGroup>,
        boundary: GroupHom,
        action: Vec<Vec<usize>>,
    ) -> PxmVerdict {
        match PrecrossedModule::new(t, g, boundary, action) {
            Ok(x) => {
                let witness = x.peiffer_witness();
                PxmVerdict {
                    is_precrossed: true,
                    precrossed_failure: None,
                    is_crossed: witness.is_none(),
                    peiffer_witness: witness,
                }
            }
            Err(e) => PxmVerdict {
                is_precrossed: false,
                precrossed_failure: Some(e),
                is_crossed: false,
                peiffer_witness: None,
            },
        }
    }

    pub fn trivial_pxm() -> Arc<Self> {
        let one = FiniteGroup::trivial_group();
        let b = GroupHom::identity(&one);
        PrecrossedModule::new(Arc::clone(&one), one, b, vec![vec![0]])
            .expect("point module is valid")
    }

    pub fn top(&self) -> &Arc<FiniteGroup> {
        &self.t
    }

    pub fn base(&self) -> &Arc<FiniteGroup> {
        &self.g
    }

    pub fn boundary(&self) -> &GroupHom {
        &self.boundary
    }

    pub fn act(&self, g: usize, t: usize) -> usize {
        self.action[g][t]
    }

    pub fn action_rows(&self) -> &[Vec<usize>] {
        &self.action
    }

    /// `<m, n> = m n m^-1 ((boundary m) . n)^-1`.
    pub fn peiffer_element(&self, m: usize, n: usize) -> usize {
        let t = &self.t;
        let conj = t.mul(t.mul(m, n), t.inv(m));
        t.mul(conj, t.inv(self.act(self.boundary.apply(m), n)))
    }

    /// First pair violating the Peiffer identity, in lexicographic order.
    pub fn peiffer_witness(&self) -> Option<(usize, usize)> {
        let nt = self.t.order();
        for m in 0..nt {
            for n in 0..nt {
                if self.peiffer_element(m, n) != self.t.id() {
                    return Some((m, n));
                }
            }
        }
        None
    }

    pub fn is_crossed(&self) -> bool {
        self.peiffer_witness().is_none()
    }

    /// Peiffer commutator `<M, N>`: normal closure in `T` of all Peiffer
    /// elements of the two subgroups, both orders.
    pub fn peiffer_commutator(&self, m: &Subgroup, n: &Subgroup) -> Subgroup {
        let mut gens = Vec::new();
        for &x in m.elements() {
            for &y in n.elements() {
                gens.push(self.peiffer_element(x, y));
                gens.push(self.peiffer_element(y, x));
            }
        }
        let closure = self.t.normal_closure(&gens);
        debug_assert!(
            self.is_action_stable(&closure),
            "Peiffer commutator of action stable subgroups is action stable"
        );
        closure
    }

    pub fn is_action_stable(&self, s: &Subgroup) -> bool {
        s.elements().iter().all(|&t| (0..self.g.order()).all(|g| s.contains(self.act(g, t))))
    }

    /// `[G, T]`: normal closure of the displacement elements `(g . t) t^-1`.
    pub fn displacement_subgroup(&self) -> Subgroup {
        let mut gens = Vec::new();
        for g in 0..self.g.order() {
            for t in 0..self.t.order() {
                gens.push(self.t.mul(self.act(g, t), self.t.inv(t)));
            }
        }
        self.t.normal_closure(&gens)
    }

    pub fn full_sub(&self) -> PxSub {
        PxSub { t_part: Subgroup::full(&self.t), g_part: Subgroup::full(&self.g) }
    }

    pub fn trivial_sub(&self) -> PxSub {
        PxSub { t_part: Subgroup::trivial(&self.t), g_part: Subgroup::trivial(&self.g) }
    }

    pub fn is_trivial_sub(&self, s: &PxSub) -> bool {
        s.t_part.order() == 1 && s.g_part.order() == 1
    }

    /// Sub precrossed module: closed subgroups with `M` stable under all
    /// of `G` and `boundary(M)` inside `H`.
    pub fn check_sub(&self, s: &PxSub) -> Result<(), XmodError> {
        s.t_part.check_subgroup(&self.t).map_err(|e| XmodError::NotSub(e.to_string()))?;
        s.g_part.check_subgroup(&self.g).map_err(|e| XmodError::NotSub(e.to_string()))?;
        if !self.is_action_stable(&s.t_part) {
            return Err(XmodError::NotSub("top part is not action stable".into()));
        }
        for &m in s.t_part.elements() {
            if !s.g_part.contains(self.boundary.apply(m)) {
                return Err(XmodError::NotSub(format!(
                    "boundary of {m} escapes the base part"
                )));
            }
        }
        Ok(())
    }

    /// Normal sub precrossed module: additionally both parts normal and
    /// all displacements `(h . t) t^-1` with `h` in the base part land in
    /// the top part, which makes the quotient carry a well defined action.
    pub fn check_normal_sub(&self, s: &PxSub) -> Result<(), XmodError> {
        self.check_sub(s)?;
        s.t_part
            .check_normal(&self.t)
            .map_err(|e| XmodError::NotNormalSub(e.to_string()))?;
        s.g_part
            .check_normal(&self.g)
            .map_err(|e| XmodError::NotNormalSub(e.to_string()))?;
        for &h in s.g_part.elements() {
            for t in 0..self.t.order() {
                let disp = self.t.mul(self.act(h, t), self.t.inv(t));
                if !s.t_part.contains(disp) {
                    return Err(XmodError::NotNormalSub(format!(
                        "displacement of t = {t} by h = {h} escapes the top part"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Smallest normal subobject containing the seeds: closes both
    /// parts under conjugation, the top part under the whole action of
    /// the base group and under displacements by the base part, and the
    /// base part under boundary images of the top part.
    pub fn normal_sub_closure(&self, t_seeds: &[usize], g_seeds: &[usize]) -> PxSub {
        let nt = self.t.order();
        let ng = self.g.order();
        let mut t_gens = t_seeds.to_vec();
        let mut g_gens = g_seeds.to_vec();
        loop {
            let m = self.t.normal_closure(&t_gens);
            let h = self.g.normal_closure(&g_gens);
            let mut grown = false;
            for &x in m.elements() {
                for g in 0..ng {
                    let y = self.act(g, x);
                    if !m.contains(y) {
                        t_gens.push(y);
                        grown = true;
                    }
                }
                let b = self.boundary.apply(x);
                if !h.contains(b) {
                    g_gens.push(b);
                    grown = true;
                }
            }
            for &hh in h.elements() {
                for t in 0..nt {
                    let disp = self.t.mul(self.act(hh, t), self.t.inv(t));
                    if !m.contains(disp) {
                        t_gens.push(disp);
                        grown = true;
                    }
                }
            }
            if !grown {
                return PxSub { t_part: m, g_part: h };
            }
        }
    }

    pub fn quotient(
        self: &Arc<Self>,
        s: &PxSub,
    ) -> Result<(Arc<PrecrossedModule>, XModHom), XmodError> {
        self.check_normal_sub(s)?;
        let (tq, t_proj) = self.t.quotient(&s.t_part)?;
        let (gq, g_proj) = self.g.quotient(&s.g_part)?;
        let mut boundary_images = vec![usize::MAX; tq.order()];
        for t in 0..self.t.order() {
            let src = t_proj.apply(t);
            let dst = g_proj.apply(self.boundary.apply(t));
            if boundary_images[src] == usize::MAX {
                boundary_images[src] = dst;
            } else if boundary_images[src] != dst {
                return Err(XmodError::NotNormalSub(
                    "boundary does not descend to the quotient".into(),
                ));
            }
        }
        let boundary_q = GroupHom::new(Arc::clone(&tq), Arc::clone(&gq), boundary_images)?;
        let mut action_q = vec![vec![usize::MAX; tq.order()]; gq.order()];
        for g in 0..self.g.order() {
            for t in 0..self.t.order() {
                let slot = &mut action_q[g_proj.apply(g)][t_proj.apply(t)];
                let val = t_proj.apply(self.act(g, t));
                if *slot == usize::MAX {
                    *slot = val;
                } else if *slot != val {
                    return Err(XmodError::NotNormalSub(
                        "action does not descend to the quotient".into(),
                    ));
                }
            }
        }
        let q = PrecrossedModule::new(tq, gq, boundary_q, action_q)?;
        let hom = XModHom::new(Arc::clone(self), Arc::clone(&q), t_proj, g_proj)?;
        Ok((q, hom))
    }

    /// Reflection onto crossed modules: quotient by `(<T,T>, 1)`.  The
    /// result is verified to satisfy the Peiffer identity.
    pub fn peiffication(self: &Arc<Self>) -> Result<(Arc<PrecrossedModule>, XModHom), XmodError> {
        let full = Subgroup::full(&self.t);
        let peiffer = self.peiffer_commutator(&full, &full);
        let sub = PxSub { t_part: peiffer, g_part: Subgroup::trivial(&self.g) };
        let (q, hom) = self.quotient(&sub)?;
        if let Some((m, n)) = q.peiffer_witness() {
            return Err(XmodError::NotCrossed { m, n });
        }
        Ok((q, hom))
    }

    /// Top part of the centre: elements whose Peiffer brackets with
    /// everything vanish both ways.  Verified to be a normal, action
    /// stable subgroup before it is returned.
    pub fn xmod_centre(&self) -> Result<PxSub, XmodError> {
        let nt = self.t.order();
        let elems: Vec<usize> = (0..nt)
            .filter(|&z| {
                (0..nt).all(|t| {
                    self.peiffer_element(z, t) == self.t.id()
                        && self.peiffer_element(t, z) == self.t.id()
                })
            })
            .collect();
        let z = Subgroup::from_elements(elems);
        z.check_subgroup(&self.t)
            .map_err(|e| XmodError::CentreIllFormed(format!("not a subgroup: {e}")))?;
        z.check_normal(&self.t)
            .map_err(|e| XmodError::CentreIllFormed(format!("not normal: {e}")))?;
        if !self.is_action_stable(&z) {
            return Err(XmodError::CentreIllFormed("not action stable".into()));
        }
        Ok(PxSub { t_part: z, g_part: Subgroup::full(&self.g) })
    }

    /// Subobject as a precrossed module of its own, with the inclusion.
    pub fn embed_sub(
        self: &Arc<Self>,
        s: &PxSub,
    ) -> Result<(Arc<PrecrossedModule>, XModHom), XmodError> {
        self.check_sub(s)?;
        let (ts, t_incl) = self.t.embed_subgroup(&s.t_part)?;
        let (gs, g_incl) = self.g.embed_subgroup(&s.g_part)?;
        let t_pos: HashMap<usize, usize> =
            s.t_part.elements().iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let g_pos: HashMap<usize, usize> =
            s.g_part.elements().iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let boundary_images = s
            .t_part
            .elements()
            .iter()
            .map(|&t| g_pos[&self.boundary.apply(t)])
            .collect();
        let boundary_s = GroupHom::new(Arc::clone(&ts), Arc::clone(&gs), boundary_images)?;
        let action_s = s
            .g_part
            .elements()
            .iter()
            .map(|&g| s.t_part.elements().iter().map(|&t| t_pos[&self.act(g, t)]).collect())
            .collect();
        let sub = PrecrossedModule::new(ts, gs, boundary_s, action_s)?;
        let incl = XModHom::new(Arc::clone(&sub), Arc::clone(self), t_incl, g_incl)?;
        Ok((sub, incl))
    }
}

/// Morphism of precrossed modules: a compatible pair of group homs.
#[derive(Clone, PartialEq, Eq)]
pub struct XModHom {
    source: Arc<PrecrossedModule>,
    target: Arc<PrecrossedModule>,
    f1: GroupHom,
    f0: GroupHom,
}

impl fmt::Debug for XModHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "XModHom(|T| {} -> {}, |G| {} -> {})",
            self.source.t.order(),
            self.target.t.order(),
            self.source.g.order(),
            self.target.g.order()
        )
    }
}

impl XModHom {
    pub fn new(
        source: Arc<PrecrossedModule>,
        target: Arc<PrecrossedModule>,
        f1: GroupHom,
        f0: GroupHom,
    ) -> Result<Self, XmodError> {
        if f1.source() != &source.t
            || f1.target() != &target.t
            || f0.source() != &source.g
            || f0.target() != &target.g
        {
            return Err(XmodError::Mismatch);
        }
        for t in 0..source.t.order() {
            if target.boundary.apply(f1.apply(t)) != f0.apply(source.boundary.apply(t)) {
                return Err(XmodError::SquareFails { t });
            }
        }
        for g in 0..source.g.order() {
            for t in 0..source.t.order() {
                if f1.apply(source.act(g, t)) != target.act(f0.apply(g), f1.apply(t)) {
                    return Err(XmodError::ActionNotPreserved { g, t });
                }
            }
        }
        Ok(XModHom { source, target, f1, f0 })
    }

    pub fn identity(x: &Arc<PrecrossedModule>) -> Self {
        XModHom {
            source: Arc::clone(x),
            target: Arc::clone(x),
            f1: GroupHom::identity(&x.t),
            f0: GroupHom::identity(&x.g),
        }
    }

    pub fn to_trivial(x: &Arc<PrecrossedModule>, z: &Arc<PrecrossedModule>) -> Self {
        XModHom {
            source: Arc::clone(x),
            target: Arc::clone(z),
            f1: GroupHom::to_trivial(&x.t, &z.t),
            f0: GroupHom::to_trivial(&x.g, &z.g),
        }
    }

    pub fn source(&self) -> &Arc<PrecrossedModule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<PrecrossedModule> {
        &self.target
    }

    pub fn top_map(&self) -> &GroupHom {
        &self.f1
    }

    pub fn base_map(&self) -> &GroupHom {
        &self.f0
    }

    pub fn compose_after(&self, first: &XModHom) -> Result<XModHom, XmodError> {
        if first.target != self.source {
            return Err(XmodError::Mismatch);
        }
        Ok(XModHom {
            source: Arc::clone(&first.source),
            target: Arc::clone(&self.target),
            f1: self.f1.compose_after(&first.f1)?,
            f0: self.f0.compose_after(&first.f0)?,
        })
    }

    pub fn kernel(&self) -> PxSub {
        PxSub { t_part: self.f1.kernel(), g_part: self.f0.kernel() }
    }

    pub fn image(&self) -> PxSub {
        PxSub { t_part: self.f1.image(), g_part: self.f0.image() }
    }

    pub fn is_surjective(&self) -> bool {
        self.f1.is_surjective() && self.f0.is_surjective()
    }

    pub fn is_injective(&self) -> bool {
        self.f1.is_injective() && self.f0.is_injective()
    }

    pub fn is_iso(&self) -> bool {
        self.f1.is_iso() && self.f0.is_iso()
    }

    pub fn image_of_sub(&self, s: &PxSub) -> PxSub {
        PxSub {
            t_part: self.f1.image_of_subgroup(&s.t_part),
            g_part: self.f0.image_of_subgroup(&s.g_part),
        }
    }

    pub fn preimage_of_sub(&self, s: &PxSub) -> PxSub {
        PxSub {
            t_part: self.f1.preimage_of_subgroup(&s.t_part),
            g_part: self.f0.preimage_of_subgroup(&s.g_part),
        }
    }
}

/// Pullback of two morphisms with common target: componentwise pairs with
/// the diagonal action.
pub fn fiber_product_pxm(
    f: &XModHom,
    g: &XModHom,
) -> Result<(Arc<PrecrossedModule>, XModHom, XModHom), XmodError> {
    if f.target != g.target {
        return Err(XmodError::Mismatch);
    }
    let (tp, tq0, tq1) = crate::fingrp::fiber_product(&f.f1, &g.f1)?;
    let (gp, gq0, gq1) = crate::fingrp::fiber_product(&f.f0, &g.f0)?;
    let t_index: HashMap<(usize, usize), usize> =
        tp.elements().map(|x| ((tq0.apply(x), tq1.apply(x)), x)).collect();
    let boundary_images = tp
        .elements()
        .map(|x| {
            let b0 = f.source.boundary.apply(tq0.apply(x));
            let b1 = g.source.boundary.apply(tq1.apply(x));
            gp.elements()
                .find(|&y| gq0.apply(y) == b0 && gq1.apply(y) == b1)
                .expect("boundaries agree over the base")
        })
        .collect();
    let boundary_p = GroupHom::new(Arc::clone(&tp), Arc::clone(&gp), boundary_images)?;
    let action_p = gp
        .elements()
        .map(|y| {
            let (a, b) = (gq0.apply(y), gq1.apply(y));
            tp.elements()
                .map(|x| t_index[&(f.source.act(a, tq0.apply(x)), g.source.act(b, tq1.apply(x)))])
                .collect()
        })
        .collect();
    let p = PrecrossedModule::new(tp, gp, boundary_p, action_p)?;
    let p0 = XModHom::new(Arc::clone(&p), Arc::clone(&f.source), tq0, gq0)?;
    let p1 = XModHom::new(Arc::clone(&p), Arc::clone(&g.source), tq1, gq1)?;
    Ok((p, p0, p1))
}

/// All morphisms `h : dom(u) -> dom(f)` with `f h = u`, exhaustively, in
/// lexicographic order of the component hom enumerations.  The guard
/// bounds `|T| * |G|` of the search source.
pub fn enumerate_pxm_homs_over(
    u: &XModHom,
    f: &XModHom,
    guard: usize,
) -> Result<Vec<XModHom>, XmodError> {
    if u.target != f.target {
        return Err(XmodError::Mismatch);
    }
    let x = &u.source;
    let size = x.t.order() * x.g.order();
    if size > guard {
        return Err(XmodError::SizeGuard { size, guard });
    }
    let per_group_guard = guard.max(x.t.order()).max(x.g.order());
    let allowed1 = |a: usize, b: usize| f.f1.apply(b) == u.f1.apply(a);
    let h1s = enumerate_homs(
        &x.t,
        &f.source.t,
        &HomConstraint { pins: &[], allowed: Some(&allowed1) },
        per_group_guard,
    )?;
    let allowed0 = |a: usize, b: usize| f.f0.apply(b) == u.f0.apply(a);
    let h0s = enumerate_homs(
        &x.g,
        &f.source.g,
        &HomConstraint { pins: &[], allowed: Some(&allowed0) },
        per_group_guard,
    )?;
    let mut out = Vec::new();
    for h1 in &h1s {
        for h0 in &h0s {
            if let Ok(h) = XModHom::new(
                Arc::clone(x),
                Arc::clone(&f.source),
                h1.clone(),
                h0.clone(),
            ) {
                out.push(h);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::{groups, pxms};

    #[test]
    fn conjugation_module_is_crossed() {
        let x = pxms::conjugation(&groups::symmetric(3));
        assert!(x.is_crossed());
        // All Peiffer brackets vanish on a crossed module, so the
        // relative centre is everything.
        assert_eq!(x.xmod_centre().unwrap().t_part.order(), 6);
    }

    #[test]
    fn discrete_module_on_s3_is_precrossed_not_crossed() {
        let x = pxms::discrete(&groups::symmetric(3));
        assert!(!x.is_crossed());
        // Peiffer elements with trivial action are plain commutators.
        let full = Subgroup::full(x.top());
        let p = x.peiffer_commutator(&full, &full);
        assert_eq!(p, x.top().derived_subgroup());
    }

    #[test]
    fn peiffication_of_discrete_s3_is_its_abelianisation() {
        let x = pxms::discrete(&groups::symmetric(3));
        let (q, hom) = x.peiffication().unwrap();
        assert!(q.is_crossed());
        assert_eq!(q.top().order(), 2);
        assert_eq!(q.base().order(), 1);
        assert!(hom.is_surjective());
        assert_eq!(hom.kernel().t_part.order(), 3);
    }

    #[test]
    fn displacement_subgroup_of_conjugation_module() {
        let s3 = groups::symmetric(3);
        let x = pxms::conjugation(&s3);
        // Displacements g t g^-1 t^-1 are commutators, so [G,T] = [S3,S3].
        assert_eq!(x.displacement_subgroup(), s3.derived_subgroup());
    }

    #[test]
    fn action_validation_catches_broken_tables() {
        let c3 = groups::cyclic(3);
        let c2 = groups::cyclic(2);
        let boundary = GroupHom::to_trivial(&c3, &c2);
        // Swapping the identity with a generator is not an automorphism.
        let bad = vec![vec![0, 1, 2], vec![1, 0, 2]];
        let err = PrecrossedModule::new(Arc::clone(&c3), Arc::clone(&c2), boundary.clone(), bad)
            .unwrap_err();
        assert!(matches!(err, XmodError::ActionNotAutomorphism { g: 1, .. }));
        // The identity of G must act as the identity.
        let moved = vec![vec![0, 2, 1], vec![0, 1, 2]];
        let err =
            PrecrossedModule::new(Arc::clone(&c3), Arc::clone(&c2), boundary, moved).unwrap_err();
        assert!(matches!(err, XmodError::ActionIdentityMoves { t: 1 }));
    }

    #[test]
    fn inversion_action_gives_a_valid_crossed_module() {
        let x = pxms::inverted_c3();
        // Trivial boundary and abelian top: the Peiffer identity holds.
        assert!(x.is_crossed());
        // The centre is everything on the top even though the action
        // displaces elements.
        assert_eq!(x.xmod_centre().unwrap().t_part.order(), 3);
        assert_eq!(x.displacement_subgroup().order(), 3);
    }

    #[test]
    fn equivariance_violation_is_reported() {
        // Conjugation boundary with a trivial action cannot be
        // equivariant on a non abelian group.
        let s3 = groups::symmetric(3);
        let boundary = GroupHom::identity(&s3);
        let action = vec![(0..6).collect::<Vec<_>>(); 6];
        let err =
            PrecrossedModule::new(Arc::clone(&s3), s3, boundary, action).unwrap_err();
        assert!(matches!(err, XmodError::NotEquivariant { .. }));
    }

    #[test]
    fn quotient_by_peiffer_sub_of_kernel() {
        let x = pxms::discrete(&groups::symmetric(3));
        let full = Subgroup::full(x.top());
        let p = x.peiffer_commutator(&full, &full);
        let sub = PxSub { t_part: p, g_part: Subgroup::trivial(x.base()) };
        x.check_normal_sub(&sub).unwrap();
        let (q, hom) = x.quotient(&sub).unwrap();
        assert!(hom.is_surjective());
        assert_eq!(q.top().order(), 2);
    }

    #[test]
    fn normal_sub_closure_of_empty_seeds_is_trivial() {
        let x = pxms::conjugation(&groups::symmetric(3));
        let s = x.normal_sub_closure(&[], &[]);
        assert_eq!(s.t_part.order(), 1);
        assert_eq!(s.g_part.order(), 1);
        x.check_normal_sub(&s).unwrap();
    }

    #[test]
    fn normal_sub_closure_pulls_boundary_images_into_the_base() {
        let s3 = groups::symmetric(3);
        let x = pxms::conjugation(&s3);
        let a3 = s3.derived_subgroup();
        let cycle = a3.elements().iter().copied().find(|&e| e != s3.id()).unwrap();
        let s = x.normal_sub_closure(&[cycle], &[]);
        // Identity boundary forces the base part up to the closure of
        // the cycle, and conjugation displacements stay inside it.
        assert_eq!(s.t_part.order(), 3);
        assert_eq!(s.g_part.order(), 3);
        x.check_normal_sub(&s).unwrap();
        let (q, _) = x.quotient(&s).unwrap();
        assert_eq!(q.top().order(), 2);
        assert_eq!(q.base().order(), 2);
    }

    #[test]
    fn normal_sub_closure_pulls_displacements_into_the_top() {
        let s3 = groups::symmetric(3);
        let x = pxms::conjugation(&s3);
        let a3 = s3.derived_subgroup();
        let odd = s3.elements().find(|&e| !a3.contains(e)).unwrap();
        let s = x.normal_sub_closure(&[], &[odd]);
        // The normal closure of a transposition is everything, and its
        // conjugation displacements are exactly the commutators.
        assert_eq!(s.g_part.order(), 6);
        assert_eq!(s.t_part.order(), 3);
        x.check_normal_sub(&s).unwrap();
    }

    #[test]
    fn fiber_product_of_peiffication_unit_with_itself() {
        let x = pxms::discrete(&groups::symmetric(3));
        let (_, unit) = x.peiffication().unwrap();
        let (r, p0, p1) = fiber_product_pxm(&unit, &unit).unwrap();
        assert_eq!(r.top().order(), 18);
        assert_eq!(r.base().order(), 1);
        assert!(p0.is_surjective() && p1.is_surjective());
    }

    #[test]
    fn hom_enumeration_over_a_base() {
        let x = pxms::discrete(&groups::cyclic(4));
        let two = x.top().subgroup_closure(&[2]);
        let sub = PxSub { t_part: two, g_part: Subgroup::trivial(x.base()) };
        let (a, pi) = x.quotient(&sub).unwrap();
        assert_eq!(a.top().order(), 2);
        // Morphisms from the quotient to itself over itself: only the
        // identity.
        let id = XModHom::identity(&a);
        let homs = enumerate_pxm_homs_over(&id, &id, 4096).unwrap();
        assert_eq!(homs.len(), 1);
        // Morphisms x -> x over the quotient map.
        let homs = enumerate_pxm_homs_over(&pi, &pi, 4096).unwrap();
        assert_eq!(homs.len(), 2);
    }

    #[test]
    fn centre_of_inclusion_module() {
        // A3 inside S3 with conjugation: crossed, so the relative centre
        // covers the whole top even though conjugation by transpositions
        // moves the 3 cycles.
        let s3 = groups::symmetric(3);
        let a3 = s3.derived_subgroup();
        let x = pxms::inclusion(&s3, &a3);
        assert!(x.is_crossed());
        let z = x.xmod_centre().unwrap();
        assert_eq!(z.t_part.order(), 3);
        assert_eq!(z.g_part.order(), 6);
        // The discrete module on S3 instead has a trivial relative
        // centre: Peiffer brackets there are plain commutators.
        let zd = pxms::discrete(&s3).xmod_centre().unwrap();
        assert_eq!(zd.t_part.order(), 1);
    }

    #[test]
    fn size_guard_on_hom_enumeration() {
        let x = pxms::conjugation(&groups::symmetric(4));
        let id = XModHom::identity(&x);
        assert!(matches!(
            enumerate_pxm_homs_over(&id, &id, 100),
            Err(XmodError::SizeGuard { size: 576, guard: 100 })
        ));
    }
}
