//! Precrossed and crossed modules with their three reflectors.
//!
//! Three Birkhoff subcategories are covered: crossed modules inside
//! precrossed modules (unit kernel `(<T,T>, 1)`), abelian crossed modules
//! inside precrossed modules (unit kernel `([T,T][G,T], [G,G])`), and
//! abelian crossed modules inside crossed modules (unit kernel
//! `([G,T], [G,G])`).

use std::sync::Arc;

use super::groups::{factor_hom, pair_hom_into};
use super::{relative_commutator, EngineError, Extension, FiberProduct, Variety};
use crate::fingrp::Subgroup;
use crate::xmod::{
    enumerate_pxm_homs_over, fiber_product_pxm, PrecrossedModule, PxSub, XModHom,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum PxmKind {
    /// Precrossed modules over crossed modules.
    OverXmod,
    /// Precrossed modules over abelian crossed modules.
    OverAb,
    /// Crossed modules over abelian crossed modules.
    CrossedOverAb,
}

/// Precrossed or crossed modules with one of the three reflectors.
pub struct PxmVariety {
    kind: PxmKind,
}

impl PxmVariety {
    /// Precrossed modules reflected onto crossed modules.
    pub fn over_xmod() -> Self {
        PxmVariety { kind: PxmKind::OverXmod }
    }

    /// Precrossed modules reflected onto abelian crossed modules.
    pub fn over_ab() -> Self {
        PxmVariety { kind: PxmKind::OverAb }
    }

    /// Crossed modules reflected onto abelian crossed modules.
    pub fn crossed_over_ab() -> Self {
        PxmVariety { kind: PxmKind::CrossedOverAb }
    }
}

impl Variety for PxmVariety {
    type Obj = Arc<PrecrossedModule>;
    type Mor = XModHom;
    type Sub = PxSub;

    fn name(&self) -> &'static str {
        match self.kind {
            PxmKind::OverXmod => "pxm-xmod",
            PxmKind::OverAb => "pxm-ab",
            PxmKind::CrossedOverAb => "xmod-ab",
        }
    }

    fn check_object(&self, x: &Self::Obj) -> Result<(), EngineError> {
        if self.kind == PxmKind::CrossedOverAb {
            if let Some((m, n)) = x.peiffer_witness() {
                return Err(EngineError::InvalidObject(format!(
                    "Peiffer identity fails on ({m},{n}); the ambient category here is \
                     crossed modules"
                )));
            }
        }
        Ok(())
    }

    fn zero_object(&self) -> Self::Obj {
        PrecrossedModule::trivial_pxm()
    }

    fn domain(&self, f: &Self::Mor) -> Self::Obj {
        Arc::clone(f.source())
    }

    fn codomain(&self, f: &Self::Mor) -> Self::Obj {
        Arc::clone(f.target())
    }

    fn identity(&self, x: &Self::Obj) -> Self::Mor {
        XModHom::identity(x)
    }

    fn compose(&self, second: &Self::Mor, first: &Self::Mor) -> Result<Self::Mor, EngineError> {
        Ok(second.compose_after(first)?)
    }

    fn to_zero(&self, x: &Self::Obj) -> Self::Mor {
        XModHom::to_trivial(x, &self.zero_object())
    }

    fn is_surjective(&self, f: &Self::Mor) -> bool {
        f.is_surjective()
    }

    fn is_iso(&self, f: &Self::Mor) -> bool {
        f.is_iso()
    }

    fn kernel(&self, f: &Self::Mor) -> Self::Sub {
        f.kernel()
    }

    fn zero_sub(&self, x: &Self::Obj) -> Self::Sub {
        x.trivial_sub()
    }

    fn full_sub(&self, x: &Self::Obj) -> Self::Sub {
        x.full_sub()
    }

    fn is_zero_sub(&self, x: &Self::Obj, s: &Self::Sub) -> bool {
        x.is_trivial_sub(s)
    }

    fn intersect(&self, _x: &Self::Obj, a: &Self::Sub, b: &Self::Sub) -> Self::Sub {
        PxSub {
            t_part: a.t_part.intersect(&b.t_part),
            g_part: a.g_part.intersect(&b.g_part),
        }
    }

    fn image_sub(&self, f: &Self::Mor, s: &Self::Sub) -> Self::Sub {
        f.image_of_sub(s)
    }

    fn unit_kernel(&self, x: &Self::Obj) -> Self::Sub {
        let t = x.top();
        let full = Subgroup::full(t);
        match self.kind {
            PxmKind::OverXmod => PxSub {
                t_part: x.peiffer_commutator(&full, &full),
                g_part: Subgroup::trivial(x.base()),
            },
            PxmKind::OverAb => {
                let mut gens = Vec::new();
                for a in t.elements() {
                    for b in t.elements() {
                        gens.push(t.commutator(a, b));
                    }
                }
                for g in x.base().elements() {
                    for a in t.elements() {
                        gens.push(t.mul(x.act(g, a), t.inv(a)));
                    }
                }
                PxSub {
                    t_part: t.normal_closure(&gens),
                    g_part: x.base().derived_subgroup(),
                }
            }
            PxmKind::CrossedOverAb => PxSub {
                t_part: x.displacement_subgroup(),
                g_part: x.base().derived_subgroup(),
            },
        }
    }

    fn fiber_product(
        &self,
        f: &Self::Mor,
        g: &Self::Mor,
    ) -> Result<FiberProduct<Self::Obj, Self::Mor>, EngineError> {
        let (object, p0, p1) = fiber_product_pxm(f, g)?;
        Ok(FiberProduct { object, p0, p1 })
    }

    fn pair_into(
        &self,
        fp: &FiberProduct<Self::Obj, Self::Mor>,
        u: &Self::Mor,
        v: &Self::Mor,
    ) -> Result<Self::Mor, EngineError> {
        let f1 = pair_hom_into(
            fp.object.top(),
            fp.p0.top_map(),
            fp.p1.top_map(),
            u.top_map(),
            v.top_map(),
        )?;
        let f0 = pair_hom_into(
            fp.object.base(),
            fp.p0.base_map(),
            fp.p1.base_map(),
            u.base_map(),
            v.base_map(),
        )?;
        Ok(XModHom::new(
            Arc::clone(u.source()),
            Arc::clone(&fp.object),
            f1,
            f0,
        )?)
    }

    fn quotient(
        &self,
        x: &Self::Obj,
        s: &Self::Sub,
    ) -> Result<(Self::Obj, Self::Mor), EngineError> {
        let (q, pi) = x.quotient(s)?;
        debug_assert!(
            self.kind != PxmKind::CrossedOverAb || q.is_crossed(),
            "quotients of crossed modules are crossed"
        );
        Ok((q, pi))
    }

    fn factor(&self, q: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor, EngineError> {
        let f1 = factor_hom(q.top_map(), f.top_map())?;
        let f0 = factor_hom(q.base_map(), f.base_map())?;
        Ok(XModHom::new(
            Arc::clone(q.target()),
            Arc::clone(f.target()),
            f1,
            f0,
        )?)
    }

    fn embed_sub(
        &self,
        x: &Self::Obj,
        s: &Self::Sub,
    ) -> Result<(Self::Obj, Self::Mor), EngineError> {
        Ok(x.embed_sub(s)?)
    }

    fn restrict_sub(&self, incl: &Self::Mor, s: &Self::Sub) -> Result<Self::Sub, EngineError> {
        Ok(incl.preimage_of_sub(s))
    }

    fn homs_over(
        &self,
        u: &Self::Mor,
        f: &Self::Mor,
        guard: usize,
    ) -> Result<Option<Vec<Self::Mor>>, EngineError> {
        Ok(Some(enumerate_pxm_homs_over(u, f, guard)?))
    }
}

/// The five characterisations of centrality relative to crossed modules,
/// each computed along its own route, plus the Peiffer commutator test.
#[derive(Clone, Debug)]
pub struct CentralityConditions {
    /// Relative commutator of the extension vanishes.
    pub commutator_vanishes: bool,
    /// The kernel pair's Peiffer reflection kernel maps isomorphically
    /// onto that of the domain, at the precrossed module level.
    pub kernel_pair_peiffer_iso: bool,
    /// Same comparison carried out on the top groups alone.
    pub top_kernel_pair_peiffer_iso: bool,
    /// Top kernel sits inside the Peiffer centre of the top group.
    pub kernel_in_centre_top: bool,
    /// Both kernel parts sit inside the centre subobject.
    pub kernel_in_centre_pair: bool,
    /// The Peiffer commutator of the kernel with everything vanishes.
    pub kernel_peiffer_trivial: bool,
}

impl CentralityConditions {
    pub fn all(&self) -> bool {
        self.commutator_vanishes
            && self.kernel_pair_peiffer_iso
            && self.top_kernel_pair_peiffer_iso
            && self.kernel_in_centre_top
            && self.kernel_in_centre_pair
            && self.kernel_peiffer_trivial
    }

    pub fn agree(&self) -> bool {
        let v = [
            self.commutator_vanishes,
            self.kernel_pair_peiffer_iso,
            self.top_kernel_pair_peiffer_iso,
            self.kernel_in_centre_top,
            self.kernel_in_centre_pair,
            self.kernel_peiffer_trivial,
        ];
        v.iter().all(|&b| b == v[0])
    }
}

/// Evaluates each centrality characterisation independently for a
/// surjection of precrossed modules, relative to crossed modules.
pub fn centrality_conditions(f: &XModHom) -> Result<CentralityConditions, EngineError> {
    let v = PxmVariety::over_xmod();
    let ext = Extension::new(&v, f.clone())?;
    let x = f.source();

    let rc = relative_commutator(&v, &ext)?;
    let commutator_vanishes = x.is_trivial_sub(&rc);

    let fp = v.fiber_product(f, f)?;
    let r = &fp.object;
    let peiffer_r = v.unit_kernel(r);
    let peiffer_x = v.unit_kernel(x);
    let ker_p1 = v.kernel(&fp.p1);
    let image = v.image_sub(&fp.p1, &peiffer_r);
    let injective = r.is_trivial_sub(&v.intersect(r, &peiffer_r, &ker_p1));
    let kernel_pair_peiffer_iso = injective && image == peiffer_x;

    let full_r = Subgroup::full(r.top());
    let top_peiffer_r = r.peiffer_commutator(&full_r, &full_r);
    let full_x = Subgroup::full(x.top());
    let top_peiffer_x = x.peiffer_commutator(&full_x, &full_x);
    let top_image = fp.p1.top_map().image_of_subgroup(&top_peiffer_r);
    let top_injective = top_peiffer_r
        .intersect(&fp.p1.top_map().kernel())
        .order()
        == 1;
    let top_kernel_pair_peiffer_iso = top_injective && top_image == top_peiffer_x;

    let centre = x.xmod_centre()?;
    let kernel = f.kernel();
    let kernel_in_centre_top = kernel.t_part.is_subset_of(&centre.t_part);
    let kernel_in_centre_pair = kernel.t_part.is_subset_of(&centre.t_part)
        && kernel.g_part.is_subset_of(&centre.g_part);

    let kernel_peiffer_trivial =
        x.peiffer_commutator(&kernel.t_part, &full_x).order() == 1;

    Ok(CentralityConditions {
        commutator_vanishes,
        kernel_pair_peiffer_iso,
        top_kernel_pair_peiffer_iso,
        kernel_in_centre_top,
        kernel_in_centre_pair,
        kernel_peiffer_trivial,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{classify, three_term_tail};
    use crate::samples::{groups, pxms};

    #[test]
    fn reflection_onto_crossed_matches_peiffication() {
        let v = PxmVariety::over_xmod();
        let x = pxms::discrete(&groups::symmetric(3));
        assert!(!v.is_member(&x));
        let (r, unit) = v.reflect(&x).unwrap();
        let (p, _) = x.peiffication().unwrap();
        assert_eq!(r.top().order(), p.top().order());
        assert_eq!(r.top().order(), 2);
        assert!(unit.is_surjective());
        assert!(v.is_member(&r));
    }

    #[test]
    fn crossed_modules_are_members_over_xmod() {
        let v = PxmVariety::over_xmod();
        assert!(v.is_member(&pxms::conjugation(&groups::symmetric(3))));
        assert!(v.is_member(&pxms::inverted_c3()));
        assert!(!v.is_member(&pxms::discrete(&groups::quaternion8())));
    }

    #[test]
    fn perfect_over_xmod_needs_trivial_base_and_peiffer_perfect_top() {
        let v = PxmVariety::over_xmod();
        // Base is nontrivial: never perfect, even with an identity
        // boundary on a group.
        assert!(!v.is_perfect(&pxms::conjugation(&groups::symmetric(3))));
        // Discrete module on a non perfect group: not perfect either.
        assert!(!v.is_perfect(&pxms::discrete(&groups::symmetric(3))));
        // Discrete module on a perfect group: with a trivial action the
        // Peiffer subgroup is the derived subgroup, which is everything.
        let s5 = groups::symmetric(5);
        let (a5, _) = s5.embed_subgroup(&s5.derived_subgroup()).unwrap();
        assert_eq!(a5.order(), 60);
        assert!(v.is_perfect(&pxms::discrete(&a5)));
    }

    #[test]
    fn abelianisation_of_conjugation_module() {
        let v = PxmVariety::crossed_over_ab();
        let x = pxms::conjugation(&groups::symmetric(3));
        v.check_object(&x).unwrap();
        let (r, unit) = v.reflect(&x).unwrap();
        assert_eq!(r.top().order(), 2);
        assert_eq!(r.base().order(), 2);
        assert!(unit.is_surjective());
        assert!(v.is_member(&r));
        // The reflected boundary is the identity of C2.
        assert!(r.boundary().is_iso());
    }

    #[test]
    fn precrossed_abelianisation_composes_both_reflections() {
        let v = PxmVariety::over_ab();
        let x = pxms::discrete(&groups::symmetric(3));
        let (r, _) = v.reflect(&x).unwrap();
        assert_eq!(r.top().order(), 2);
        assert_eq!(r.base().order(), 1);
        assert!(v.is_member(&r));
        // Reflecting first onto crossed modules then onto abelian ones
        // lands in the same object.
        let (p, _) = x.peiffication().unwrap();
        let w = PxmVariety::crossed_over_ab();
        let (q, _) = w.reflect(&p).unwrap();
        assert_eq!(q.top().order(), r.top().order());
        assert_eq!(q.base().order(), r.base().order());
    }

    #[test]
    fn ambient_check_rejects_precrossed_objects_over_xmod_ab() {
        let v = PxmVariety::crossed_over_ab();
        let x = pxms::discrete(&groups::symmetric(3));
        assert!(v.check_object(&x).is_err());
    }

    #[test]
    fn central_extension_of_discrete_quaternion_module() {
        let v = PxmVariety::over_xmod();
        let x = pxms::discrete(&groups::quaternion8());
        let centre = x.xmod_centre().unwrap();
        assert_eq!(centre.t_part.order(), 2);
        let sub = crate::xmod::PxSub {
            t_part: centre.t_part.clone(),
            g_part: Subgroup::trivial(x.base()),
        };
        let (_, pi) = x.quotient(&sub).unwrap();
        let conds = centrality_conditions(&pi).unwrap();
        assert!(conds.agree());
        assert!(conds.all());
        let ext = Extension::new(&v, pi).unwrap();
        let c = classify(&v, &ext, 4096).unwrap();
        assert!(c.central);
        assert!(!c.trivial);
    }

    #[test]
    fn peiffication_unit_of_discrete_s3_is_not_central() {
        let x = pxms::discrete(&groups::symmetric(3));
        let (_, unit) = x.peiffication().unwrap();
        let conds = centrality_conditions(&unit).unwrap();
        assert!(conds.agree());
        assert!(!conds.all());
        let v = PxmVariety::over_xmod();
        let ext = Extension::new(&v, unit).unwrap();
        let c = classify(&v, &ext, 4096).unwrap();
        assert!(!c.central && !c.trivial && !c.normal);
    }

    #[test]
    fn maps_of_crossed_modules_are_trivial_over_xmod() {
        // Both objects already satisfy the Peiffer identity, so the
        // extension is trivial relative to crossed modules.
        let v = PxmVariety::over_xmod();
        let x = pxms::conjugation(&groups::symmetric(3));
        let a3 = groups::symmetric(3).derived_subgroup();
        let sub = crate::xmod::PxSub {
            t_part: a3.clone(),
            g_part: a3,
        };
        let (_, pi) = x.quotient(&sub).unwrap();
        let ext = Extension::new(&v, pi).unwrap();
        let c = classify(&v, &ext, 4096).unwrap();
        assert!(c.trivial && c.central && c.normal);
    }

    #[test]
    fn tail_of_inverted_c3_quotient_over_crossed_ab() {
        let v = PxmVariety::crossed_over_ab();
        let x = pxms::inverted_c3();
        let three = crate::xmod::PxSub {
            t_part: Subgroup::full(x.top()),
            g_part: Subgroup::trivial(x.base()),
        };
        let (_, pi) = x.quotient(&three).unwrap();
        let ext = Extension::new(&v, pi).unwrap();
        let tail = three_term_tail(&v, &ext).unwrap();
        assert!(tail.exact_at_middle);
        assert!(tail.end_surjective);
    }
}
