//! Finite groups reflected onto abelian groups.

use std::collections::HashMap;
use std::sync::Arc;

use super::{EngineError, FiberProduct, Variety};
use crate::fingrp::{
    enumerate_homs, fiber_product, FiniteGroup, GroupHom, HomConstraint, Subgroup,
};

/// Groups with the abelianisation reflector; the unit kernel is the
/// derived subgroup.
pub struct GroupsOverAb;

/// Unique `h` with `h q = f` for a surjective `q` whose kernel is
/// contained in the kernel of `f`.
pub(crate) fn factor_hom(q: &GroupHom, f: &GroupHom) -> Result<GroupHom, EngineError> {
    if q.source() != f.source() {
        return Err(EngineError::Mismatch("factoring maps with different sources".into()));
    }
    let mut images = vec![usize::MAX; q.target().order()];
    for x in q.source().elements() {
        let slot = &mut images[q.apply(x)];
        if *slot == usize::MAX {
            *slot = f.apply(x);
        } else if *slot != f.apply(x) {
            return Err(EngineError::Factorisation(
                "kernel of the quotient is not contained in the kernel of the map".into(),
            ));
        }
    }
    if images.contains(&usize::MAX) {
        return Err(EngineError::Factorisation("quotient map is not surjective".into()));
    }
    Ok(GroupHom::new(Arc::clone(q.target()), Arc::clone(f.target()), images)?)
}

/// Canonical map into a fiber product with projections `p0`, `p1`,
/// induced by `u`, `v` from a common source.
pub(crate) fn pair_hom_into(
    object: &Arc<FiniteGroup>,
    p0: &GroupHom,
    p1: &GroupHom,
    u: &GroupHom,
    v: &GroupHom,
) -> Result<GroupHom, EngineError> {
    if u.source() != v.source() {
        return Err(EngineError::Mismatch("pairing of maps with different sources".into()));
    }
    let mut index = HashMap::new();
    for x in object.elements() {
        index.insert((p0.apply(x), p1.apply(x)), x);
    }
    let images = u
        .source()
        .elements()
        .map(|x| {
            index.get(&(u.apply(x), v.apply(x))).copied().ok_or_else(|| {
                EngineError::Factorisation("pairing does not land in the fiber product".into())
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GroupHom::new(Arc::clone(u.source()), Arc::clone(object), images)?)
}

impl Variety for GroupsOverAb {
    type Obj = Arc<FiniteGroup>;
    type Mor = GroupHom;
    type Sub = Subgroup;

    fn name(&self) -> &'static str {
        "group-ab"
    }

    fn check_object(&self, _x: &Self::Obj) -> Result<(), EngineError> {
        // A constructed FiniteGroup is already a validated group.
        Ok(())
    }

    fn zero_object(&self) -> Self::Obj {
        FiniteGroup::trivial_group()
    }

    fn domain(&self, f: &Self::Mor) -> Self::Obj {
        Arc::clone(f.source())
    }

    fn codomain(&self, f: &Self::Mor) -> Self::Obj {
        Arc::clone(f.target())
    }

    fn identity(&self, x: &Self::Obj) -> Self::Mor {
        GroupHom::identity(x)
    }

    fn compose(&self, second: &Self::Mor, first: &Self::Mor) -> Result<Self::Mor, EngineError> {
        Ok(second.compose_after(first)?)
    }

    fn to_zero(&self, x: &Self::Obj) -> Self::Mor {
        GroupHom::to_trivial(x, &self.zero_object())
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
        Subgroup::trivial(x)
    }

    fn full_sub(&self, x: &Self::Obj) -> Self::Sub {
        Subgroup::full(x)
    }

    fn is_zero_sub(&self, _x: &Self::Obj, s: &Self::Sub) -> bool {
        s.order() == 1
    }

    fn intersect(&self, _x: &Self::Obj, a: &Self::Sub, b: &Self::Sub) -> Self::Sub {
        a.intersect(b)
    }

    fn image_sub(&self, f: &Self::Mor, s: &Self::Sub) -> Self::Sub {
        f.image_of_subgroup(s)
    }

    fn unit_kernel(&self, x: &Self::Obj) -> Self::Sub {
        x.derived_subgroup()
    }

    fn fiber_product(
        &self,
        f: &Self::Mor,
        g: &Self::Mor,
    ) -> Result<FiberProduct<Self::Obj, Self::Mor>, EngineError> {
        let (object, p0, p1) = fiber_product(f, g)?;
        Ok(FiberProduct { object, p0, p1 })
    }

    fn pair_into(
        &self,
        fp: &FiberProduct<Self::Obj, Self::Mor>,
        u: &Self::Mor,
        v: &Self::Mor,
    ) -> Result<Self::Mor, EngineError> {
        pair_hom_into(&fp.object, &fp.p0, &fp.p1, u, v)
    }

    fn quotient(
        &self,
        x: &Self::Obj,
        s: &Self::Sub,
    ) -> Result<(Self::Obj, Self::Mor), EngineError> {
        Ok(x.quotient(s)?)
    }

    fn factor(&self, q: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor, EngineError> {
        factor_hom(q, f)
    }

    fn embed_sub(
        &self,
        x: &Self::Obj,
        s: &Self::Sub,
    ) -> Result<(Self::Obj, Self::Mor), EngineError> {
        Ok(x.embed_subgroup(s)?)
    }

    fn restrict_sub(&self, incl: &Self::Mor, s: &Self::Sub) -> Result<Self::Sub, EngineError> {
        Ok(incl.preimage_of_subgroup(s))
    }

    fn homs_over(
        &self,
        u: &Self::Mor,
        f: &Self::Mor,
        guard: usize,
    ) -> Result<Option<Vec<Self::Mor>>, EngineError> {
        if u.target() != f.target() {
            return Err(EngineError::Mismatch("maps over different bases".into()));
        }
        let allowed = |x: usize, y: usize| f.apply(y) == u.apply(x);
        let homs = enumerate_homs(
            u.source(),
            f.source(),
            &HomConstraint { pins: &[], allowed: Some(&allowed) },
            guard,
        )?;
        Ok(Some(homs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{
        centralise, classify, compose_central_check, is_trivial_extension, product_extension,
        relative_commutator, three_term_tail, Extension,
    };
    use crate::samples::groups;

    const GUARD: usize = 256;

    fn sign_map() -> Extension<GroupsOverAb> {
        let s3 = groups::symmetric(3);
        let a3 = s3.derived_subgroup();
        let (_, pi) = s3.quotient(&a3).unwrap();
        Extension::new(&GroupsOverAb, pi).unwrap()
    }

    #[test]
    fn q8_central_quotient_is_central_but_not_trivial() {
        let v = GroupsOverAb;
        let q8 = groups::quaternion8();
        let z = q8.centre();
        assert_eq!(z.order(), 2);
        let (_, pi) = q8.quotient(&z).unwrap();
        let ext = Extension::new(&v, pi).unwrap();
        let c = classify(&v, &ext, GUARD).unwrap();
        assert!(c.central);
        assert!(c.normal);
        assert!(!c.trivial);
        assert_eq!(c.split, Some(false));
        assert!(v.is_zero_sub(&ext.domain(&v), &c.relative_commutator));
    }

    #[test]
    fn sign_extension_is_not_central_and_commutator_is_a3() {
        let v = GroupsOverAb;
        let ext = sign_map();
        let s3 = ext.domain(&v);
        let c = classify(&v, &ext, GUARD).unwrap();
        assert!(!c.central);
        assert!(!c.normal);
        assert!(!c.trivial);
        assert_eq!(c.split, Some(true));
        assert_eq!(c.relative_commutator, s3.derived_subgroup());
    }

    #[test]
    fn identity_extension_is_trivial_normal_central() {
        let v = GroupsOverAb;
        let s3 = groups::symmetric(3);
        let ext = Extension::new(&v, GroupHom::identity(&s3)).unwrap();
        let c = classify(&v, &ext, GUARD).unwrap();
        assert!(c.central && c.normal && c.trivial);
        assert_eq!(c.split, Some(true));
    }

    #[test]
    fn product_projection_is_trivial() {
        let v = GroupsOverAb;
        let s3 = groups::symmetric(3);
        let c4 = groups::cyclic(4);
        let ext = product_extension(&v, &s3, &c4).unwrap();
        let c = classify(&v, &ext, GUARD).unwrap();
        assert!(c.trivial && c.central && c.normal);
    }

    #[test]
    fn centralising_the_sign_map_gives_an_isomorphism() {
        let v = GroupsOverAb;
        let ext = sign_map();
        let done = centralise(&v, &ext).unwrap();
        assert!(done.verified_central);
        assert_eq!(done.extension.domain(&v).order(), 2);
        assert!(v.is_iso(&done.extension.map));
        assert_eq!(done.divided.order(), 3);
    }

    #[test]
    fn central_iff_kernel_inside_centre_and_commutator_formula() {
        // Spot check the generic commutator against the classical normal
        // closure formula on a handful of quotients.
        let v = GroupsOverAb;
        for g in [
            groups::symmetric(4),
            groups::dihedral(4),
            groups::quaternion8(),
            groups::alternating4(),
        ] {
            for seed in 0..g.order() {
                let n = g.normal_closure(&[seed]);
                let (_, pi) = g.quotient(&n).unwrap();
                let ext = Extension::new(&v, pi).unwrap();
                let rc = relative_commutator(&v, &ext).unwrap();
                assert_eq!(rc, g.mixed_commutator(&ext.kernel, &Subgroup::full(&g)));
                let central = v.is_zero_sub(&g, &rc);
                let in_centre = ext.kernel.is_subset_of(&g.centre());
                assert_eq!(central, in_centre, "order {} seed {}", g.order(), seed);
            }
        }
    }

    #[test]
    fn composition_of_central_maps_with_perfect_inner_domain() {
        // Towers of central quotients of Q8: both steps central, Q8 not
        // perfect, and the composite Q8 -> C2 x C2 -> C2 is not central,
        // showing the perfectness hypothesis matters.
        let v = GroupsOverAb;
        let q8 = groups::quaternion8();
        let z = q8.centre();
        let (k4, pi) = q8.quotient(&z).unwrap();
        let inner = Extension::new(&v, pi).unwrap();
        let sub = k4.subgroup_closure(&[1]);
        let (_, pi2) = k4.quotient(&sub).unwrap();
        let outer = Extension::new(&v, pi2).unwrap();
        let report = compose_central_check(&v, &outer, &inner).unwrap();
        assert!(report.outer_central && report.inner_central);
        assert!(!report.inner_domain_perfect);
        assert!(!report.composite_central);
    }

    #[test]
    fn tail_of_sign_map_is_exact() {
        let v = GroupsOverAb;
        let ext = sign_map();
        let tail = three_term_tail(&v, &ext).unwrap();
        // [A3, S3] = A3, so the quotient term K/[K,B] collapses.
        assert_eq!(tail.quotient_obj.order(), 1);
        assert!(tail.exact_at_middle);
        assert!(tail.end_surjective);
    }

    #[test]
    fn maps_between_abelian_groups_are_trivial_extensions() {
        // An extension that already lives in the subcategory is the
        // pullback of itself, so C4 -> C2 is trivial despite not
        // splitting.  Non examples need a non abelian source: the sign
        // map and the Q8 quotient above are both non trivial.
        let v = GroupsOverAb;
        let c4 = groups::cyclic(4);
        let two = c4.subgroup_closure(&[2]);
        let (_, pi) = c4.quotient(&two).unwrap();
        let ext = Extension::new(&v, pi).unwrap();
        let c = classify(&v, &ext, GUARD).unwrap();
        assert!(c.trivial && c.central && c.normal);
        assert_eq!(c.split, Some(false));
        assert!(is_trivial_extension(&v, &ext.map).unwrap());
    }
}
