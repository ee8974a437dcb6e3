//! Fixture builders shared by the benchmark targets.

use std::sync::Arc;

use centrex::engine::groups::GroupsOverAb;
use centrex::engine::pxm::PxmVariety;
use centrex::engine::{product_extension, Extension};
use centrex::leibniz::LeibnizAlgebra;
use centrex::samples::{algebras, groups, pxms};

/// Sign map of the symmetric group on four points, as an extension.
pub fn parity_extension() -> Extension<GroupsOverAb> {
    let s4 = groups::symmetric(4);
    let a4 = s4.derived_subgroup();
    let (_, sign) = s4.quotient(&a4).expect("quotient by the alternating subgroup");
    Extension::new(&GroupsOverAb, sign).expect("sign map is surjective")
}

/// The current algebra sl2 tensor the dual numbers, the standard
/// example where the two homology theories disagree.
pub fn current_algebra() -> Arc<LeibnizAlgebra> {
    algebras::sl2_current2()
}

/// Product projection of two conjugation crossed modules.
pub fn pxm_projection() -> Extension<PxmVariety> {
    let v = PxmVariety::over_xmod();
    let a = pxms::conjugation(&groups::symmetric(3));
    let m = pxms::discrete(&groups::cyclic(3));
    product_extension(&v, &a, &m).expect("product projection")
}
