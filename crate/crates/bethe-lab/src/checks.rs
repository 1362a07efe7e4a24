//! The verification checks the CLI can run, in declaration order.

use bethe_lab_core::verifier::{
    self, PolynomialitySetup, SpectrumScope, VerificationReport,
};
use bethe_lab_core::Result;

use crate::config::RunConfig;

/// Sizes for the configuration-independent scalar identities.
pub const WRONSKIAN_MAX_N: usize = 4;
pub const WRONSKIAN_TUPLES: usize = 10;
pub const VANDERMONDE_MAX_N: usize = 5;
pub const RANK_ONE_INSTANCES: usize = 20;
pub const RANK_ONE_MAX_N: usize = 5;
/// `[Ψ_ij, Ψ_kl]` is checked for indices up to this bound.
pub const BETHE_COMMUTATOR_ORDER: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    MainTheorem,
    Commutativity,
    BetheCommutativity,
    ConstantTerms,
    LemmaPsi12,
    Eii,
    PhiProduct,
    SimpleSpectra,
    NonSimpleControl,
    RegularizedOperator,
    GeneratorChange,
    Wronskian,
    RankOne,
    Polynomiality,
    Example,
}

impl Check {
    pub const ALL: [Check; 15] = [
        Check::MainTheorem,
        Check::Commutativity,
        Check::BetheCommutativity,
        Check::ConstantTerms,
        Check::LemmaPsi12,
        Check::Eii,
        Check::PhiProduct,
        Check::SimpleSpectra,
        Check::NonSimpleControl,
        Check::RegularizedOperator,
        Check::GeneratorChange,
        Check::Wronskian,
        Check::RankOne,
        Check::Polynomiality,
        Check::Example,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::MainTheorem => "main_theorem",
            Check::Commutativity => "commutativity",
            Check::BetheCommutativity => "bethe_commutativity",
            Check::ConstantTerms => "constant_terms",
            Check::LemmaPsi12 => "lemma_psi12",
            Check::Eii => "eii",
            Check::PhiProduct => "phi_product",
            Check::SimpleSpectra => "simple_spectra",
            Check::NonSimpleControl => "non_simple_control",
            Check::RegularizedOperator => "regularized_operator",
            Check::GeneratorChange => "generator_change",
            Check::Wronskian => "wronskian",
            Check::RankOne => "rank_one",
            Check::Polynomiality => "polynomiality",
            Check::Example => "example",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == s.trim())
    }

    /// `Err` with a reason when the check makes no sense for the configuration.
    pub fn applicability(self, cfg: &RunConfig) -> std::result::Result<(), String> {
        let g = &cfg.gaudin;
        match self {
            Check::SimpleSpectra if SpectrumScope::for_config(g).is_none() => {
                Err("simple_spectra needs K pairwise distinct or all equal".into())
            }
            Check::Example if (g.gl_n(), g.sites()) != (2, 2) => Err("example needs N = n = 2".into()),
            _ => Ok(()),
        }
    }

    /// Checks run when none are named: everything applicable except the
    /// negative control.
    pub fn defaults(cfg: &RunConfig) -> Vec<Check> {
        Self::ALL
            .into_iter()
            .filter(|c| *c != Check::NonSimpleControl && c.applicability(cfg).is_ok())
            .collect()
    }

    pub fn run(self, cfg: &RunConfig) -> Result<VerificationReport> {
        let g = &cfg.gaudin;
        let (i, j) = cfg.orders;
        match self {
            Check::MainTheorem => verifier::verify_main_theorem(g, i, j),
            Check::Commutativity => verifier::verify_commutativity(g),
            Check::BetheCommutativity => verifier::verify_bethe_commutativity(g, BETHE_COMMUTATOR_ORDER),
            Check::ConstantTerms => verifier::verify_constant_terms(g),
            Check::LemmaPsi12 => verifier::verify_lemma_psi12(g, i),
            Check::Eii => verifier::verify_eii(g, i),
            Check::PhiProduct => verifier::verify_phi_product(g),
            Check::SimpleSpectra => verifier::verify_simple_spectra(g, cfg.seed, cfg.budget),
            Check::NonSimpleControl => verifier::verify_non_simple(g, cfg.seed, cfg.budget),
            Check::RegularizedOperator => verifier::verify_regularized(g),
            Check::GeneratorChange => verifier::verify_generator_change(g, j),
            Check::Wronskian => {
                verifier::verify_wronskian(WRONSKIAN_MAX_N, WRONSKIAN_TUPLES, VANDERMONDE_MAX_N, cfg.seed)
            }
            Check::RankOne => verifier::verify_rank_one(RANK_ONE_INSTANCES, RANK_ONE_MAX_N, cfg.seed),
            Check::Polynomiality => {
                let mut setup =
                    PolynomialitySetup::new(g.gl_n(), g.sites(), g.k().to_vec(), cfg.word.clone(), cfg.seed);
                if let Some(d) = cfg.degree {
                    setup.degree = d;
                }
                verifier::verify_polynomiality(&setup)
            }
            Check::Example => verifier::verify_example(g),
        }
    }
}
