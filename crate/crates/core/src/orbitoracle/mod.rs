//! Brute-force Borel orbits on `X(F_q)`, the pairs `(A, B)` of complementary
//! subspaces of `F_q^{m+n}` with `dim A = m`.
//!
//! Points are packed into `u128` keys ([`PointSpace`]). Orbits come from BFS
//! under elementary and torus generators of the upper-triangular group, each
//! orbit is tagged by the Krull–Schmidt classifier, and the form scans look
//! for points with `B = A^⊥` inside every orbit.

mod forms;
mod partition;
mod points;
mod report;

pub use forms::{
    combinatorial_predicate, fixed_point_census, fixed_point_census_of, isotropy_predicate, FixedPointReport,
    FixedPointRow, FormKind, FormSpec,
};
pub use partition::{
    build_orbit_table, census, census_of, misplaced_representatives, orbit_partition, CensusReport, Orbit,
    OrbitTable, TagCheck,
};
pub use points::{
    borel_generator_list, borel_generators, borel_order, check_budget, closure_order, enumerate_points,
    gaussian_binomial, point_count, BorelGen, PointSpace, DEFAULT_BUDGET,
};
pub use report::{orbit_csv, orbit_rows, FixedPointSummary, OrbitRow, OrbitSummary};
