//! The subcommands. Each returns the rendered report and whether every
//! check passed; errors are left to the caller.

use std::path::{Path, PathBuf};

use hopf_cyclic::actions::{
    check_action, check_cyclic_cocycle, check_gamma_morphism, conjugate, load_action_file, pair_idempotent,
    random_similarity, Cochain,
};
use hopf_cyclic::cohomology::{cohomology, Method};
use hopf_cyclic::hopf::{check_hopf_axioms, check_involution, check_twisted_properties, HopfAlgebra};
use hopf_cyclic::lambda::{check_relations, check_relations_on_sample, pbw_sample, HopfCyclicModule};
use hopf_cyclic::symbolic::Envelope;
use hopf_cyclic::{CheckReport, Error, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::input::{finite_character, lie_character, load, Input};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subcommand {
    CheckHopf,
    CyclicRelations,
    Cohomology,
    Pair,
    GammaCheck,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub subcommand: Subcommand,
    pub input: PathBuf,
    /// Second input: the algebra-with-action file of `gamma-check`.
    pub action: Option<PathBuf>,
    pub character: String,
    pub max_degree: usize,
    pub method: Method,
    pub seed: u64,
    pub require_involution: bool,
    pub output: Option<PathBuf>,
    pub verbose: bool,
}

pub struct Outcome {
    pub report: String,
    pub ok: bool,
}

impl Outcome {
    fn from_report(r: &CheckReport) -> Self {
        Outcome { report: r.render(), ok: r.all_passed() }
    }
}

/// Largest PBW degree in the samples for enveloping algebras.
const PBW_AXIOM_DEGREE: u32 = 3;
const PBW_INVOLUTION_DEGREE: u32 = 4;
const PBW_RELATION_DEGREE: u32 = 3;
const PBW_EXTRA_SAMPLES: usize = 20;
const CONJUGATIONS: usize = 20;
const SIMILARITY_STEPS: usize = 4;

pub fn run(config: &RunConfig) -> Result<Outcome> {
    match config.subcommand {
        Subcommand::CheckHopf => check_hopf(config),
        Subcommand::CyclicRelations => cyclic_relations(config),
        Subcommand::Cohomology => cohomology_table(config),
        Subcommand::Pair => pair(config),
        Subcommand::GammaCheck => gamma_check(config),
    }
}

fn common_params(r: &mut CheckReport, config: &RunConfig) {
    r.param("character", &config.character).param("seed", config.seed);
}

fn check_hopf(config: &RunConfig) -> Result<Outcome> {
    fn suite<H: HopfAlgebra, D: hopf_cyclic::hopf::Functional<H::Basis>>(
        h: &H,
        delta: &D,
        sample: &[H::Basis],
        involution_sample: &[H::Basis],
        name: &str,
        config: &RunConfig,
    ) -> CheckReport {
        let mut r = CheckReport::new(format!("check-hopf {name}"));
        common_params(&mut r, config);
        r.param("require-involution", config.require_involution);
        r.extend(check_hopf_axioms(h, sample));
        r.extend(check_twisted_properties(h, delta, sample));
        let inv = check_involution(h, delta, involution_sample);
        let detail = inv.witness.as_ref().map(|w| {
            format!("witness {}: {}", h.label(w), inv.detail.clone().unwrap_or_default())
        });
        if config.require_involution {
            r.record("involution", None, detail);
        } else {
            r.param("involution", detail.map_or("holds".to_string(), |d| format!("fails, {d}")));
        }
        r
    }
    let r = match load(&config.input)? {
        Input::Finite(h) => {
            let delta = finite_character(&h, &config.character)?;
            let basis = h.basis();
            suite(&h, &delta, &basis, &basis, h.name(), config)
        }
        Input::Lie(g) => {
            let name = format!("U({})", g.name());
            let u = Envelope::new(g);
            let delta = lie_character(&u, &config.character)?;
            let (sample, wide) = (u.monomials_up_to(PBW_AXIOM_DEGREE), u.monomials_up_to(PBW_INVOLUTION_DEGREE));
            let mut r = suite(&u, &delta, &sample, &wide, &name, config);
            r.param("pbw-degree", PBW_AXIOM_DEGREE);
            r
        }
    };
    Ok(Outcome::from_report(&r))
}

fn cyclic_relations(config: &RunConfig) -> Result<Outcome> {
    let n = config.max_degree;
    let mut r = match load(&config.input)? {
        Input::Finite(h) => {
            let delta = finite_character(&h, &config.character)?;
            check_relations(&HopfCyclicModule::new(&h, &delta), n)
        }
        Input::Lie(g) => {
            let name = g.name().to_string();
            let u = Envelope::new(g);
            let delta = lie_character(&u, &config.character)?;
            let seed = config.seed;
            let mut r = check_relations_on_sample(&u, &delta, n, |d| {
                pbw_sample(&u, d, PBW_RELATION_DEGREE, PBW_EXTRA_SAMPLES, seed)
            });
            r.title = format!("cyclic relations (sampled): U({name})");
            r.param("pbw-degree", PBW_RELATION_DEGREE).param("extra-samples", PBW_EXTRA_SAMPLES);
            r
        }
    };
    common_params(&mut r, config);
    Ok(Outcome::from_report(&r))
}

fn cohomology_table(config: &RunConfig) -> Result<Outcome> {
    let h = match load(&config.input)? {
        Input::Finite(h) => h,
        Input::Lie(_) => return Err(Error::Precondition("cohomology needs a finite-dimensional Hopf algebra".into())),
    };
    let delta = finite_character(&h, &config.character)?;
    let m = HopfCyclicModule::new(&h, &delta);
    let header = format!("param character = {}\nparam seed = {}\n", config.character, config.seed);
    match cohomology(&m, config.max_degree, config.method) {
        Ok(table) => {
            let text = table.render();
            let (first, rest) = text.split_once('\n').unwrap_or((&text, ""));
            Ok(Outcome { report: format!("{first}\n{header}{rest}"), ok: table.disagreements().is_empty() })
        }
        Err(Error::NotCyclic(why)) => Ok(Outcome {
            report: format!("report: cohomology {}\n{header}error: not a cyclic module: {why}\n", h.name()),
            ok: false,
        }),
        Err(e) => Err(e),
    }
}

fn pair(config: &RunConfig) -> Result<Outcome> {
    let data = load_action_file(&config.input)?;
    let a = &data.algebra;
    let trace = data.trace.as_ref().ok_or_else(|| Error::Precondition("pair needs a trace section".into()))?;
    let e = data.idempotent.as_ref().ok_or_else(|| Error::Precondition("pair needs an idempotent section".into()))?;
    let phi = Cochain::trace_of_product(a, trace, data.pairing_degree);

    let mut r = CheckReport::new(format!("pair {}", a.name()));
    r.param("seed", config.seed)
        .param("degree", data.pairing_degree)
        .param("size", e.size())
        .param("conjugations", CONJUGATIONS);
    r.extend(check_cyclic_cocycle(a, &phi)?);
    let base = match pair_idempotent(a, &phi, e) {
        Ok(v) => v,
        Err(Error::NotIdempotent) => {
            r.fail("idempotent", None, format!("E² ≠ E for E = {}", e.show(a)));
            return Ok(Outcome::from_report(&r));
        }
        Err(err) => return Err(err),
    };
    r.pass("idempotent", None);
    r.param("pairing", &base);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut witness = None;
    for k in 0..CONJUGATIONS {
        let (u, inv) = random_similarity(&mut rng, a, e.size(), SIMILARITY_STEPS)?;
        let conj = conjugate(a, &u, e, &inv)?;
        let v = pair_idempotent(a, &phi, &conj)?;
        if v != base && witness.is_none() {
            witness = Some(format!("conjugation {k}: u = {}, pairing {v} vs {base}", u.show(a)));
        }
    }
    r.record("conjugation-invariance", None, witness);
    Ok(Outcome::from_report(&r))
}

fn gamma_check(config: &RunConfig) -> Result<Outcome> {
    let h = match load(&config.input)? {
        Input::Finite(h) => h,
        Input::Lie(_) => return Err(Error::Precondition("gamma-check needs a finite-dimensional Hopf algebra".into())),
    };
    let path: &Path =
        config.action.as_deref().ok_or_else(|| Error::Precondition("gamma-check needs --action FILE".into()))?;
    let delta = finite_character(&h, &config.character)?;
    let data = load_action_file(path)?;
    let act = data.action(&h)?.ok_or_else(|| Error::Precondition("the action file has no action section".into()))?;
    let trace = data.trace.as_ref().ok_or_else(|| Error::Precondition("the action file has no trace section".into()))?;

    let mut r = check_action(&h, &data.algebra, &act);
    r.title = format!("gamma-check {} -> {}", h.name(), data.algebra.name());
    common_params(&mut r, config);
    r.param("max-degree", config.max_degree);
    r.extend(check_gamma_morphism(&h, &delta, &data.algebra, &act, trace, config.max_degree)?);
    Ok(Outcome::from_report(&r))
}
