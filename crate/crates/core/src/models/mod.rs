//! Projectivised split bundles over products of projective spaces, their
//! fibration degenerations and the test configurations they induce.

mod degeneration;
mod fibration;
mod test_configuration;

pub use degeneration::{
    all_subsum_degenerations, check_general_fibre, make_fibre_test_configuration,
    make_normal_cone_degeneration, make_subsheaf_degeneration, make_trivial_degeneration,
    make_weighted_degeneration, DegenerationKind, FibrationDegeneration,
};
pub use fibration::{
    make_anticanonical_fibration, make_polarised_fibration, make_projectivised_fibration,
    slope_sheaf, PolarisedFibration, SplitBundle,
};
pub use test_configuration::{point_normal_cone_tc, product_tc, trivial_tc, TestConfiguration, WeightSource};
