//! Lower bounds on `P(G, L)` for `G = K_{2,n}`, the scanners that check
//! them against `P(G, m)`, and the analytic upper bound on the threshold.

mod amgm;
mod analytic;
mod classes;
mod composition;
mod counting;
mod expr;
mod lemma;
mod scan;

pub use amgm::{appendix_bound, appendix_bound_with, dm2_lower_bound, BoundMode, APPENDIX_CASES};
pub use analytic::{
    corollary_interval, epsilon_solve, f_functions, lemma_interval, q_coefficients, rolle_p, rolle_q,
    tau_upper_bound, wqy_bound, AnalyticParams, C1, C2,
};
pub use classes::{bound_for_assignment, class_arity, class_counts, classify};
pub use composition::{CompositionVector, Compositions};
pub use counting::{counting_distribution, pair_set_size, CountingParams, QDistribution};
pub use expr::{BoundExpr, BoundValue, Precision, Term, NEAR_TIE_REL, RECHECK_BITS};
pub use lemma::{dm1_inequality_check, threshold_condition};
pub use scan::{scan, scan_first_bad_n, scan_n, FailingCase, ScanConfig, ScanLine, ScanStatus, DEFAULT_N_MIN};
