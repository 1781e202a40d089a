pub mod field;
pub mod leech;
pub mod lorentz;
pub mod reduction;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-fields.md")]
    mod exact_fields {}
    #[doc = include_str!("../../../book/src/leech-lattice.md")]
    mod leech_lattice {}
    #[doc = include_str!("../../../book/src/lorentzian-model.md")]
    mod lorentzian_model {}
    #[doc = include_str!("../../../book/src/triflections.md")]
    mod triflections {}
    #[doc = include_str!("../../../book/src/heisenberg.md")]
    mod heisenberg {}
    #[doc = include_str!("../../../book/src/reduction.md")]
    mod reduction {}
    #[doc = include_str!("../../../book/src/certificates.md")]
    mod certificates {}
    #[doc = include_str!("../../../book/src/overlap-and-corners.md")]
    mod overlap_and_corners {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
