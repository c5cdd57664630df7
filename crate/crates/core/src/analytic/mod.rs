//! Exact real-rootedness and interlacing via Sturm chains, and the moment
//! statistics of the `N` triangle rows.

mod moments;
mod sturm;

pub use moments::{
    clt_report, first_moment_recurrence_holds, mean_gap_holds, mode_in_bracket, moment_stats,
    moments_from_row, printed_first_moment, variance_defect, CltReport, MomentReport,
    CLT_MONOTONE_SLACK, VARIANCE_TOLERANCE,
};
pub use sturm::{
    count_real_roots, isolate_roots, squarefree_part, sturm_chain, verify_interlacing,
    verify_interlacing_polys, Bound, InterlacingReport, SturmChain,
};
