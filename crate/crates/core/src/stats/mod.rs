//! Significance testing and agreement/correlation analytics over score
//! matrices and label sets.

mod anova;
mod kappa;
mod kendall;
mod ttest;
mod tukey;

pub use anova::residual_variance;
pub use kappa::{mean_per_topic_kappa, weighted_kappa};
pub use kendall::{kendall_tau_ci, kendall_tau_ci_with, tau_b, TauResult};
pub use ttest::{paired_ttest, unpaired_ttest, unpaired_ttest_welch};
pub use tukey::{randomized_tukey_hsd, randomized_tukey_hsd_with, TukeyResult};
