//! Monads from adjunctions, the algebra `T(I)`, the internal hom `ĤOM`,
//! comonad coalgebras and the converse isomorphisms `γ`, `γ̃`.

mod converse;
mod internal_hom;
mod monad;

pub use converse::{
    gamma_isomorphism, surjectivity_from_coflatness, theorem2_pipeline, twisted_tensor, GammaReport,
    SurjectivityReport, Theorem2Outcome,
};
pub use internal_hom::{
    adjunction_unit_counit_check, comonad_coalgebra, internal_hom, AdjunctionCheck, ComonadCoalgebra,
    HomComonad, IdentityComonad, InternalHom, SampledComonad, TensorComonad,
};
pub use monad::{
    compare_talgebras_to_modules, free_talgebras, monad_from_adjunction, t_map, t_mult, t_object,
    talgebra_report, unit_object_algebra, Adjunction, Comparison, ComparisonEntry, CotensorAdjunction,
    IdentityAdjunction, InductionAdjunction, ModuleInCategory, MonadObject, MonadSample, TAlgebra,
    UnitObjectAlgebra,
};
