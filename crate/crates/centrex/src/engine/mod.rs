//! Variety-independent machinery for extensions relative to a reflective
//! subcategory.
//!
//! A [`Variety`] packages one ambient category together with the chosen
//! subcategory through `unit_kernel`: for an object `X`, `unit_kernel(X)`
//! is the kernel of the reflection unit `X -> reflect(X)`.  Everything
//! else (relative commutators, the trivial / normal / central trichotomy,
//! centralisation, composition and universality checks) is derived here
//! once and shared by groups, algebras and precrossed modules.
//!
//! Conventions: a morphism is an extension when it is a surjection; the
//! kernel pair of `f : B -> A` is the fiber product of `f` with itself,
//! with projections `p0`, `p1`; the relative commutator of `f` is
//! `p1(unit_kernel(R[f]) intersect ker p0)`, a normal subobject of `B`.

pub mod algebras;
pub mod groups;
pub mod pxm;

use thiserror::Error;

use crate::fingrp::GroupError;
use crate::leibniz::AlgebraError;
use crate::linalg::LinalgError;
use crate::xmod::XmodError;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Xmod(#[from] XmodError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("morphism is not surjective, so it is not an extension")]
    NotSurjective,
    #[error("objects do not match: {0}")]
    Mismatch(String),
    #[error("operation not available in this variety: {0}")]
    NotAvailable(&'static str),
    #[error("no factorisation: {0}")]
    Factorisation(String),
    #[error("invalid object: {0}")]
    InvalidObject(String),
}

/// Fiber product of two morphisms with common codomain.
pub struct FiberProduct<O, M> {
    pub object: O,
    pub p0: M,
    pub p1: M,
}

/// One ambient category with a chosen Birkhoff subcategory.
pub trait Variety {
    type Obj: Clone + PartialEq;
    type Mor: Clone;
    type Sub: Clone + PartialEq;

    fn name(&self) -> &'static str;

    /// Validates that `x` is a legal object of the ambient category.
    fn check_object(&self, x: &Self::Obj) -> Result<(), EngineError>;

    fn zero_object(&self) -> Self::Obj;
    fn domain(&self, f: &Self::Mor) -> Self::Obj;
    fn codomain(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, x: &Self::Obj) -> Self::Mor;
    /// `second` after `first`.
    fn compose(&self, second: &Self::Mor, first: &Self::Mor) -> Result<Self::Mor, EngineError>;
    fn to_zero(&self, x: &Self::Obj) -> Self::Mor;
    fn is_surjective(&self, f: &Self::Mor) -> bool;
    fn is_iso(&self, f: &Self::Mor) -> bool;

    fn kernel(&self, f: &Self::Mor) -> Self::Sub;
    fn zero_sub(&self, x: &Self::Obj) -> Self::Sub;
    fn full_sub(&self, x: &Self::Obj) -> Self::Sub;
    fn is_zero_sub(&self, x: &Self::Obj, s: &Self::Sub) -> bool;
    fn intersect(&self, x: &Self::Obj, a: &Self::Sub, b: &Self::Sub) -> Self::Sub;
    /// Set theoretic image of a subobject, as a subobject of the codomain.
    fn image_sub(&self, f: &Self::Mor, s: &Self::Sub) -> Self::Sub;

    /// Kernel of the reflection unit of `x` into the subcategory.
    fn unit_kernel(&self, x: &Self::Obj) -> Self::Sub;

    fn fiber_product(
        &self,
        f: &Self::Mor,
        g: &Self::Mor,
    ) -> Result<FiberProduct<Self::Obj, Self::Mor>, EngineError>;

    /// Canonical morphism into a fiber product induced by `u`, `v` with
    /// `f u = g v`.
    fn pair_into(
        &self,
        fp: &FiberProduct<Self::Obj, Self::Mor>,
        u: &Self::Mor,
        v: &Self::Mor,
    ) -> Result<Self::Mor, EngineError>;

    /// Quotient of `x` by a normal subobject, with the projection.
    fn quotient(
        &self,
        x: &Self::Obj,
        s: &Self::Sub,
    ) -> Result<(Self::Obj, Self::Mor), EngineError>;

    /// Unique `h` with `h q = f`, for `q` a quotient projection whose
    /// kernel is contained in the kernel of `f`.
    fn factor(&self, q: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor, EngineError>;

    /// Subobject as an object of its own, with the inclusion.
    fn embed_sub(
        &self,
        x: &Self::Obj,
        s: &Self::Sub,
    ) -> Result<(Self::Obj, Self::Mor), EngineError>;

    /// Preimage of `s` along a monomorphism `incl`.
    fn restrict_sub(&self, incl: &Self::Mor, s: &Self::Sub) -> Result<Self::Sub, EngineError>;

    /// Reflection of `x` into the subcategory, with the unit.
    fn reflect(&self, x: &Self::Obj) -> Result<(Self::Obj, Self::Mor), EngineError> {
        let k = self.unit_kernel(x);
        self.quotient(x, &k)
    }

    /// Perfect means the reflection is zero.
    fn is_perfect(&self, x: &Self::Obj) -> bool {
        self.unit_kernel(x) == self.full_sub(x)
    }

    /// Member of the subcategory: the unit is an isomorphism.
    fn is_member(&self, x: &Self::Obj) -> bool {
        let uk = self.unit_kernel(x);
        self.is_zero_sub(x, &uk)
    }

    /// All morphisms `h : dom(u) -> dom(f)` with `f h = u`, exhaustively,
    /// in a canonical order; `None` when the variety cannot enumerate.
    fn homs_over(
        &self,
        _u: &Self::Mor,
        _f: &Self::Mor,
        _guard: usize,
    ) -> Result<Option<Vec<Self::Mor>>, EngineError> {
        Ok(None)
    }

    /// All sections of `f`; `None` when the variety cannot enumerate.
    fn sections(
        &self,
        f: &Self::Mor,
        guard: usize,
    ) -> Result<Option<Vec<Self::Mor>>, EngineError> {
        let id = self.identity(&self.codomain(f));
        self.homs_over(&id, f, guard)
    }
}

/// Surjection together with its kernel.
#[derive(Clone)]
pub struct Extension<V: Variety> {
    pub map: V::Mor,
    pub kernel: V::Sub,
}

impl<V: Variety> Extension<V> {
    pub fn new(v: &V, map: V::Mor) -> Result<Self, EngineError> {
        if !v.is_surjective(&map) {
            return Err(EngineError::NotSurjective);
        }
        let kernel = v.kernel(&map);
        Ok(Extension { map, kernel })
    }

    pub fn domain(&self, v: &V) -> V::Obj {
        v.domain(&self.map)
    }

    pub fn codomain(&self, v: &V) -> V::Obj {
        v.codomain(&self.map)
    }
}

/// `p1(unit_kernel(R[f]) intersect ker p0)` for the kernel pair `R[f]`.
pub fn relative_commutator<V: Variety>(
    v: &V,
    f: &Extension<V>,
) -> Result<V::Sub, EngineError> {
    let fp = v.fiber_product(&f.map, &f.map)?;
    let uk = v.unit_kernel(&fp.object);
    let k0 = v.kernel(&fp.p0);
    let inter = v.intersect(&fp.object, &uk, &k0);
    Ok(v.image_sub(&fp.p1, &inter))
}

/// Verdicts for one extension.  `split` is `None` for varieties that
/// cannot enumerate sections.
#[derive(Clone, Debug)]
pub struct Classification<S> {
    pub relative_commutator: S,
    pub central: bool,
    pub trivial: bool,
    pub normal: bool,
    pub split: Option<bool>,
}

/// Trivial means the reflection square of `f` is a pullback: the
/// comparison `B -> reflect(B) x_{reflect(A)} A` is an isomorphism.
pub fn is_trivial_extension<V: Variety>(v: &V, map: &V::Mor) -> Result<bool, EngineError> {
    let b = v.domain(map);
    let a = v.codomain(map);
    let (_, eta_b) = v.reflect(&b)?;
    let (_, eta_a) = v.reflect(&a)?;
    let reflected_f = v.factor(&eta_b, &v.compose(&eta_a, map)?)?;
    let fp = v.fiber_product(&reflected_f, &eta_a)?;
    let cmp = v.pair_into(&fp, &eta_b, map)?;
    Ok(v.is_iso(&cmp))
}

pub fn classify<V: Variety>(
    v: &V,
    f: &Extension<V>,
    guard: usize,
) -> Result<Classification<V::Sub>, EngineError> {
    let b = f.domain(v);
    let rc = relative_commutator(v, f)?;
    let central = v.is_zero_sub(&b, &rc);
    let trivial = is_trivial_extension(v, &f.map)?;
    // Normal means the first kernel pair projection is trivial.
    let fp = v.fiber_product(&f.map, &f.map)?;
    let normal = is_trivial_extension(v, &fp.p0)?;
    let split = v.sections(&f.map, guard)?.map(|s| !s.is_empty());
    Ok(Classification { relative_commutator: rc, central, trivial, normal, split })
}

/// Quotient of an extension by its relative commutator, with the
/// universal property morphisms and a verification bit.
pub struct Centralised<V: Variety> {
    pub extension: Extension<V>,
    /// Projection `B -> B / [K, B]`.
    pub unit: V::Mor,
    /// Relative commutator that was divided out.
    pub divided: V::Sub,
    /// Whether the centralised extension verifies as central.
    pub verified_central: bool,
}

pub fn centralise<V: Variety>(v: &V, f: &Extension<V>) -> Result<Centralised<V>, EngineError> {
    let b = f.domain(v);
    let rc = relative_commutator(v, f)?;
    let (_, pi) = v.quotient(&b, &rc)?;
    let induced = v.factor(&pi, &f.map)?;
    let extension = Extension::new(v, induced)?;
    let check = relative_commutator(v, &extension)?;
    let verified_central = v.is_zero_sub(&extension.domain(v), &check);
    Ok(Centralised { extension, unit: pi, divided: rc, verified_central })
}

/// Pullback of an extension along `g`, again an extension.
pub fn pullback_extension<V: Variety>(
    v: &V,
    f: &Extension<V>,
    g: &V::Mor,
) -> Result<(Extension<V>, V::Mor), EngineError> {
    let fp = v.fiber_product(&f.map, g)?;
    let ext = Extension::new(v, fp.p1)?;
    Ok((ext, fp.p0))
}

/// Product projection `a x m -> a` as an extension.
pub fn product_extension<V: Variety>(
    v: &V,
    a: &V::Obj,
    m: &V::Obj,
) -> Result<Extension<V>, EngineError> {
    let fp = v.fiber_product(&v.to_zero(a), &v.to_zero(m))?;
    Extension::new(v, fp.p0)
}

/// Computed facts about a composite of two extensions.
#[derive(Clone, Debug)]
pub struct CompositionReport {
    pub outer_central: bool,
    pub inner_central: bool,
    pub inner_domain_perfect: bool,
    pub composite_central: bool,
}

/// Classifies `outer`, `inner` and their composite `outer . inner`
/// independently, so theorems about composites can be verified rather
/// than assumed.
pub fn compose_central_check<V: Variety>(
    v: &V,
    outer: &Extension<V>,
    inner: &Extension<V>,
) -> Result<CompositionReport, EngineError> {
    let composite = v.compose(&outer.map, &inner.map)?;
    let composite = Extension::new(v, composite)?;
    let c = v.domain(&inner.map);
    let rc_outer = relative_commutator(v, outer)?;
    let rc_inner = relative_commutator(v, inner)?;
    let rc_comp = relative_commutator(v, &composite)?;
    Ok(CompositionReport {
        outer_central: v.is_zero_sub(&outer.domain(v), &rc_outer),
        inner_central: v.is_zero_sub(&inner.domain(v), &rc_inner),
        inner_domain_perfect: v.is_perfect(&c),
        composite_central: v.is_zero_sub(&composite.domain(v), &rc_comp),
    })
}

/// Result of testing `u` against a family of central extensions of the
/// same codomain by exhaustive hom search.
#[derive(Clone, Debug)]
pub struct FamilyUniversality {
    pub tested: usize,
    /// Indices of family members admitting no comparison morphism.
    pub missing: Vec<usize>,
    /// Indices of family members admitting more than one.
    pub ambiguous: Vec<usize>,
}

impl FamilyUniversality {
    pub fn universal_over_family(&self) -> bool {
        self.missing.is_empty() && self.ambiguous.is_empty()
    }
}

/// For each `f` in `family`, counts morphisms `h` with `f h = u`.
/// Requires a variety with exhaustive hom enumeration.
pub fn universality_over_family<V: Variety>(
    v: &V,
    u: &Extension<V>,
    family: &[Extension<V>],
    guard: usize,
) -> Result<FamilyUniversality, EngineError> {
    let mut missing = Vec::new();
    let mut ambiguous = Vec::new();
    for (i, f) in family.iter().enumerate() {
        let homs = v
            .homs_over(&u.map, &f.map, guard)?
            .ok_or(EngineError::NotAvailable("hom enumeration"))?;
        match homs.len() {
            0 => missing.push(i),
            1 => {}
            _ => ambiguous.push(i),
        }
    }
    Ok(FamilyUniversality { tested: family.len(), missing, ambiguous })
}

/// Exact three term tail `K/[K,B] -> reflect(B) -> reflect(A) -> 0` of the
/// low degree sequence, verified junction by junction.
pub struct TailReport<V: Variety> {
    pub quotient_obj: V::Obj,
    pub to_reflected_domain: V::Mor,
    pub reflected_map: V::Mor,
    pub exact_at_middle: bool,
    pub end_surjective: bool,
}

pub fn three_term_tail<V: Variety>(v: &V, f: &Extension<V>) -> Result<TailReport<V>, EngineError> {
    let b = f.domain(v);
    let a = f.codomain(v);
    let rc = relative_commutator(v, f)?;
    let (k_obj, incl) = v.embed_sub(&b, &f.kernel)?;
    let rc_in_k = v.restrict_sub(&incl, &rc)?;
    let (q_obj, q_proj) = v.quotient(&k_obj, &rc_in_k)?;
    let (_, eta_b) = v.reflect(&b)?;
    let (_, eta_a) = v.reflect(&a)?;
    let t1 = v.factor(&q_proj, &v.compose(&eta_b, &incl)?)?;
    let t2 = v.factor(&eta_b, &v.compose(&eta_a, &f.map)?)?;
    let image = v.image_sub(&t1, &v.full_sub(&q_obj));
    let ker = v.kernel(&t2);
    let end_surjective = v.is_surjective(&t2);
    Ok(TailReport {
        quotient_obj: q_obj,
        to_reflected_domain: t1,
        reflected_map: t2,
        exact_at_middle: image == ker,
        end_surjective,
    })
}
