//! Fibers over rational parameters and scans across them.

pub mod qcurve;
pub mod scan;

pub use qcurve::{
    canonical_height_q, relation_search, specialize_curve, specialize_point, specialize_point_or_identity,
    torsion_order, MCap, QCurve, QPoint, RelationResult, DEFAULT_Q_DEPTH,
};
pub use scan::{
    fiber_height_trace, rationals_up_to_height, simultaneous_relation_scan, verify_witness, RelationWitness, TraceRow,
};
