//! GCD divisors of sections, their degree tables and stability laws.

pub mod locus;
pub mod pullback;
pub mod stability;
pub mod table;

pub use locus::{locus_height_stats, relation_locus, LocusStats, RelationLocus};
pub use pullback::{
    meet_divisor, meet_divisor_by_coordinates, zero_section_pullback, zero_section_pullback_detailed, Pullback,
};
pub use stability::{
    bound_at, density_avoiding, multiplicity_bound_scan, multiplicity_bound_scan_range, primes_up_to,
    stability_scan, LawViolation, MultiplicityBound, StabilityReport,
};
pub use table::{
    bounding_divisor, gcd_degree_table, gcd_of_points, GcdReport, GcdRow, Partial, PullbackSequence, SectionPair,
};
