//! Published corrected evaluation results for the NTCIR WWW-2/3/4 English
//! subtask collections, used by `paper check` to verify a local data copy.
//!
//! nDCG and Q values are exact targets; the nERR and iRBU columns are
//! reported as divergence checks only, because the original tooling's exact
//! formulas for those two measures are not pinned down by any public
//! definition (see the README's verification section).

/// WWW-2 corrected qrels statistics: (level, count), plus the pooled total.
pub const WWW2_QRELS_COUNTS: [(u8, u64); 5] = [
    (0, 13_463),
    (1, 6_358),
    (2, 4_462),
    (3, 2_437),
    (4, 907),
];
pub const WWW2_QRELS_TOTAL: u64 = 27_627;

/// NTCIR-15 corrected qrels statistics over both topic sets combined.
pub const WWW3_QRELS_COUNTS: [(u8, u64); 5] = [
    (0, 9_018),
    (1, 7_764),
    (2, 8_233),
    (3, 7_129),
    (4, 231),
];
pub const WWW3_QRELS_TOTAL: u64 = 32_375;

/// Corrected WWW-2 mean nDCG@10 over 80 topics.
pub const WWW2_NDCG_MEANS: [(&str, f64); 20] = [
    ("THUIR-E-CO-MAN-Base-3", 0.4804),
    ("THUIR-E-CO-MAN-Base-2", 0.4608),
    ("THUIR-E-CO-MAN-Base-1", 0.4459),
    ("RUCIR-E-CO-PU-Base-2", 0.4402),
    ("RUCIR-E-DE-PU-Base-4", 0.4342),
    ("MPII-E-CO-NU-Base-2", 0.4329),
    ("MPII-E-CO-NU-Base-1", 0.4210),
    ("MPII-E-CO-NU-Base-5", 0.4093),
    ("MPII-E-CO-NU-Base-3", 0.4077),
    ("baseline_eng_v1", 0.4032),
    ("THUIR-E-CO-PU-Base-5", 0.4032),
    ("MPII-E-CO-NU-Base-4", 0.4022),
    ("RUCIR-E-DE-PU-Base-3", 0.3915),
    ("RUCIR-E-DE-PU-Base-1", 0.3915),
    ("THUIR-E-CO-PU-Base-4", 0.3870),
    ("RUCIR-E-DE-PU-Base-5", 0.3336),
    ("SLWWW-E-CO-NU-Base-1", 0.3300),
    ("ORG-MANUAL", 0.2682),
    ("SLWWW-E-CO-NU-Base-4", 0.2661),
    ("SLWWW-E-CD-NU-Base-3", 0.2661),
];

/// Corrected WWW-2 mean Q@10.
pub const WWW2_Q_MEANS: [(&str, f64); 20] = [
    ("THUIR-E-CO-MAN-Base-3", 0.4681),
    ("THUIR-E-CO-MAN-Base-2", 0.4524),
    ("THUIR-E-CO-MAN-Base-1", 0.4358),
    ("MPII-E-CO-NU-Base-2", 0.4319),
    ("RUCIR-E-CO-PU-Base-2", 0.4310),
    ("RUCIR-E-DE-PU-Base-4", 0.4276),
    ("MPII-E-CO-NU-Base-1", 0.4157),
    ("MPII-E-CO-NU-Base-5", 0.4006),
    ("MPII-E-CO-NU-Base-3", 0.3969),
    ("baseline_eng_v1", 0.3884),
    ("THUIR-E-CO-PU-Base-5", 0.3884),
    ("MPII-E-CO-NU-Base-4", 0.3856),
    ("THUIR-E-CO-PU-Base-4", 0.3755),
    ("RUCIR-E-DE-PU-Base-3", 0.3734),
    ("RUCIR-E-DE-PU-Base-1", 0.3734),
    ("RUCIR-E-DE-PU-Base-5", 0.3181),
    ("SLWWW-E-CO-NU-Base-1", 0.3153),
    ("ORG-MANUAL", 0.2527),
    ("SLWWW-E-CO-NU-Base-4", 0.2400),
    ("SLWWW-E-CD-NU-Base-3", 0.2400),
];

/// Corrected WWW-2 mean nERR@10 (divergence check only).
pub const WWW2_NERR_MEANS: [(&str, f64); 20] = [
    ("THUIR-E-CO-MAN-Base-3", 0.6430),
    ("THUIR-E-CO-MAN-Base-2", 0.6422),
    ("RUCIR-E-CO-PU-Base-2", 0.6356),
    ("RUCIR-E-DE-PU-Base-4", 0.6021),
    ("THUIR-E-CO-MAN-Base-1", 0.6007),
    ("MPII-E-CO-NU-Base-2", 0.5842),
    ("MPII-E-CO-NU-Base-4", 0.5730),
    ("MPII-E-CO-NU-Base-1", 0.5705),
    ("baseline_eng_v1", 0.5582),
    ("THUIR-E-CO-PU-Base-5", 0.5582),
    ("MPII-E-CO-NU-Base-5", 0.5460),
    ("MPII-E-CO-NU-Base-3", 0.5316),
    ("RUCIR-E-DE-PU-Base-3", 0.5288),
    ("RUCIR-E-DE-PU-Base-1", 0.5288),
    ("THUIR-E-CO-PU-Base-4", 0.5261),
    ("SLWWW-E-CO-NU-Base-1", 0.4795),
    ("RUCIR-E-DE-PU-Base-5", 0.4315),
    ("ORG-MANUAL", 0.4161),
    ("SLWWW-E-CO-NU-Base-4", 0.3756),
    ("SLWWW-E-CD-NU-Base-3", 0.3748),
];

/// Corrected WWW-2 mean iRBU@10 (divergence check only).
pub const WWW2_IRBU_MEANS: [(&str, f64); 20] = [
    ("THUIR-E-CO-MAN-Base-3", 0.8698),
    ("THUIR-E-CO-MAN-Base-2", 0.8547),
    ("RUCIR-E-CO-PU-Base-2", 0.8530),
    ("THUIR-E-CO-MAN-Base-1", 0.8441),
    ("MPII-E-CO-NU-Base-2", 0.8355),
    ("MPII-E-CO-NU-Base-5", 0.8354),
    ("RUCIR-E-DE-PU-Base-4", 0.8348),
    ("MPII-E-CO-NU-Base-3", 0.8306),
    ("RUCIR-E-DE-PU-Base-3", 0.8272),
    ("RUCIR-E-DE-PU-Base-1", 0.8272),
    ("MPII-E-CO-NU-Base-1", 0.8123),
    ("baseline_eng_v1", 0.8099),
    ("THUIR-E-CO-PU-Base-5", 0.8099),
    ("MPII-E-CO-NU-Base-4", 0.7988),
    ("THUIR-E-CO-PU-Base-4", 0.7912),
    ("RUCIR-E-DE-PU-Base-5", 0.7697),
    ("SLWWW-E-CO-NU-Base-1", 0.7152),
    ("SLWWW-E-CD-NU-Base-3", 0.7085),
    ("SLWWW-E-CO-NU-Base-4", 0.7032),
    ("ORG-MANUAL", 0.6519),
];

/// Two-way ANOVA residual variances for the corrected WWW-2 matrices.
pub const WWW2_V_E2_NDCG: f64 = 0.0206;
pub const WWW2_V_E2_Q: f64 = 0.0257;
pub const WWW2_V_E2_NERR: f64 = 0.0476;
pub const WWW2_V_E2_IRBU: f64 = 0.0317;

/// Corrected WWW-2 significance pairs for nDCG (better run, beaten runs),
/// randomised Tukey HSD at the 5% level with 10,000 trials.
pub const WWW2_SIGNIFICANT_NDCG: [(&str, &[&str]); 15] = [
    (
        "THUIR-E-CO-MAN-Base-3",
        &[
            "RUCIR-E-DE-PU-Base-3",
            "RUCIR-E-DE-PU-Base-1",
            "THUIR-E-CO-PU-Base-4",
            "RUCIR-E-DE-PU-Base-5",
            "SLWWW-E-CO-NU-Base-1",
            "ORG-MANUAL",
            "SLWWW-E-CO-NU-Base-4",
            "SLWWW-E-CD-NU-Base-3",
        ],
    ),
    ("THUIR-E-CO-MAN-Base-2", FIVE_TRAILING),
    ("THUIR-E-CO-MAN-Base-1", FIVE_TRAILING),
    ("RUCIR-E-CO-PU-Base-2", FIVE_TRAILING),
    ("RUCIR-E-DE-PU-Base-4", FIVE_TRAILING),
    ("MPII-E-CO-NU-Base-2", FIVE_TRAILING),
    ("MPII-E-CO-NU-Base-1", FIVE_TRAILING),
    ("MPII-E-CO-NU-Base-5", THREE_TRAILING),
    ("MPII-E-CO-NU-Base-3", THREE_TRAILING),
    ("baseline_eng_v1", THREE_TRAILING),
    ("THUIR-E-CO-PU-Base-5", THREE_TRAILING),
    ("MPII-E-CO-NU-Base-4", THREE_TRAILING),
    ("RUCIR-E-DE-PU-Base-3", THREE_TRAILING),
    ("RUCIR-E-DE-PU-Base-1", THREE_TRAILING),
    ("THUIR-E-CO-PU-Base-4", THREE_TRAILING),
];

/// Corrected WWW-2 significance pairs for Q.
pub const WWW2_SIGNIFICANT_Q: [(&str, &[&str]); 15] = [
    (
        "THUIR-E-CO-MAN-Base-3",
        &[
            "RUCIR-E-DE-PU-Base-3",
            "RUCIR-E-DE-PU-Base-1",
            "RUCIR-E-DE-PU-Base-5",
            "SLWWW-E-CO-NU-Base-1",
            "ORG-MANUAL",
            "SLWWW-E-CO-NU-Base-4",
            "SLWWW-E-CD-NU-Base-3",
        ],
    ),
    ("THUIR-E-CO-MAN-Base-2", FIVE_TRAILING),
    ("THUIR-E-CO-MAN-Base-1", FIVE_TRAILING),
    ("MPII-E-CO-NU-Base-2", FIVE_TRAILING),
    ("RUCIR-E-CO-PU-Base-2", FIVE_TRAILING),
    ("RUCIR-E-DE-PU-Base-4", FIVE_TRAILING),
    ("MPII-E-CO-NU-Base-1", FIVE_TRAILING),
    ("MPII-E-CO-NU-Base-5", THREE_TRAILING),
    ("MPII-E-CO-NU-Base-3", THREE_TRAILING),
    ("baseline_eng_v1", THREE_TRAILING),
    ("THUIR-E-CO-PU-Base-5", THREE_TRAILING),
    ("MPII-E-CO-NU-Base-4", THREE_TRAILING),
    ("THUIR-E-CO-PU-Base-4", THREE_TRAILING),
    ("RUCIR-E-DE-PU-Base-3", THREE_TRAILING),
    ("RUCIR-E-DE-PU-Base-1", THREE_TRAILING),
];

/// The bottom five runs, beaten by every strong WWW-2 run.
const FIVE_TRAILING: &[&str] = &[
    "RUCIR-E-DE-PU-Base-5",
    "SLWWW-E-CO-NU-Base-1",
    "ORG-MANUAL",
    "SLWWW-E-CO-NU-Base-4",
    "SLWWW-E-CD-NU-Base-3",
];

/// The bottom three runs.
const THREE_TRAILING: &[&str] = &["ORG-MANUAL", "SLWWW-E-CO-NU-Base-4", "SLWWW-E-CD-NU-Base-3"];

/// Ranking similarity between mean nDCG and mean Q over the 20 WWW-2 runs.
pub const WWW2_TAU_NDCG_Q: f64 = 0.942;

/// Mean per-topic quadratic weighted kappa over the 50 WWW-4 topics.
pub const WWW4_KAPPA_GOLD_WASEDA: f64 = 0.440;
pub const WWW4_KAPPA_GOLD_TSINGHUA: f64 = 0.495;
pub const WWW4_KAPPA_WASEDA_TSINGHUA: f64 = 0.458;

/// Reproducibility experiment run ids: originals from WWW-2, reproductions
/// submitted at WWW-3.
pub const REPRO_ORIG_A: &str = "THUIR-E-CO-MAN-Base-2";
pub const REPRO_ORIG_B: &str = "THUIR-E-CO-PU-Base-4";
pub const REPRO_REP_A: &str = "KASYS-E-CO-REP-2";
pub const REPRO_REP_A2: &str = "SLWWW-E-CO-REP-4";
pub const REPRO_REP_B: &str = "KASYS-E-CO-REP-3";

/// KASYS pair reproducibility targets: (measure label, rmse_abs of the
/// A-run, rmse_abs of the B-run, rmse_delta, effect ratio, delta RI).
/// nDCG and Q are exact targets; nERR and iRBU are divergence checks.
pub const REPRO_KASYS: [(&str, f64, f64, f64, f64, f64); 4] = [
    ("nDCG", 0.2003, 0.2567, 0.2658, -0.5029, 0.2846),
    ("Q", 0.2288, 0.2739, 0.2921, -0.6020, 0.3262),
    ("nERR", 0.3047, 0.3622, 0.3924, -0.0604, 0.2340),
    ("iRBU", 0.2352, 0.3591, 0.3236, 0.0846, 0.0732),
];

/// KASYS pair replicability targets: (measure label, effect ratio, delta RI).
pub const REPLI_KASYS: [(&str, f64, f64); 4] = [
    ("nDCG", -0.0617, 0.1991),
    ("Q", -0.0140, 0.2069),
    ("nERR", 0.0290, 0.2156),
    ("iRBU", -0.0601, 0.0849),
];

/// WWW-3 topic id range (the NTCIR-15 qrels also covers the WWW-2 topics).
pub fn is_www3_topic(topic: &str) -> bool {
    matches!(topic.parse::<u32>(), Ok(n) if (101..=180).contains(&n))
}

pub fn is_www2_topic(topic: &str) -> bool {
    matches!(topic.parse::<u32>(), Ok(n) if (1..=80).contains(&n))
}
