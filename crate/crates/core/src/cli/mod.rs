//! Command-line front end. Every command builds a JSON report; the text format
//! is a line-per-leaf rendering of the same document.

mod input;
mod report;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub use input::{read_group_spec, GroupSpecFile, InputError};
pub use report::{group_hash, render_text};

use crate::burnside::{burnside_units, table_of_marks, BurnsideElement, MarkMatrix, DEFAULT_ENUM_CAP};
use crate::coherent::{coherent_tuple_group, split_hom_g};
use crate::error::Error;
use crate::fusion::{fused_lattice, fused_units, fusion_system};
use crate::permgroup::{FiniteGroup, PLocalSystem, Subgroup, DEFAULT_ORDER_CAP};
use crate::tsr::{
    beta_of_gset, check_condition_c, orthogonal_unit_group, pairs_tpg, species_of_gset, yoshida_check,
    PairsTpG,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "tsring", version, about = "Burnside rings, fusion and orthogonal units of trivial source rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Clone, clap::Args)]
pub struct Options {
    /// Group file: {"degree": n, "generators": [[...], ...], "name": optional}
    #[arg(long, global = true)]
    pub group: Option<PathBuf>,
    #[arg(long, global = true)]
    pub prime: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true, env = "TSRING_MAX_ORDER", default_value_t = DEFAULT_ORDER_CAP)]
    pub max_order: usize,
    /// Largest number of independent signs a unit search may enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUM_CAP)]
    pub max_enum: usize,
    /// Comma-separated p-subgroup class indices (check-coherence).
    #[arg(long, global = true, value_delimiter = ',')]
    pub vertex_set: Option<Vec<usize>>,
    /// Tuple file (check-coherence, yoshida).
    #[arg(long, global = true)]
    pub tuple: Option<PathBuf>,
    /// Coefficients of a virtual G-set in the basis [G/H] (species, beta);
    /// defaults to every transitive basis element.
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    pub element: Option<Vec<i64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Table of marks.
    Marks,
    /// Units of the Burnside ring.
    BurnsideUnits,
    /// Fusion of subgroups of a Sylow subgroup and a basis of B(F).
    Fusion,
    /// Units of the fused Burnside ring.
    BfUnits,
    /// Coherent homomorphism tuples and the Hom(G) split.
    Coherent,
    /// Orthogonal unit group of the trivial source ring.
    Otu,
    /// Species of virtual G-sets.
    Species,
    /// Brauer-construction class functions of virtual G-sets.
    Beta,
    /// Coherence check of a class-function tuple.
    CheckCoherence,
    /// Homomorphism test on a species tuple.
    Yoshida,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Marks => "marks",
            Command::BurnsideUnits => "burnside-units",
            Command::Fusion => "fusion",
            Command::BfUnits => "bf-units",
            Command::Coherent => "coherent",
            Command::Otu => "otu",
            Command::Species => "species",
            Command::Beta => "beta",
            Command::CheckCoherence => "check-coherence",
            Command::Yoshida => "yoshida",
        }
    }

    fn needs_prime(self) -> bool {
        !matches!(self, Command::Marks | Command::BurnsideUnits)
    }
}

/// Errors surfaced to the shell.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Compute(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Compute(Error::OrderCapExceeded { .. } | Error::EnumerationCapExceeded { .. }) => EXIT_CAP,
            _ => EXIT_VALIDATION,
        }
    }
}

/// Parses arguments, runs the command and prints the report; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_VALIDATION } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let text = match cli.opts.format {
                Format::Json => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
                Format::Text => render_text(&report),
            };
            // a closed pipe downstream is not a failure of the computation
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Builds the report for a parsed command line.
pub fn execute(cli: &Cli) -> Result<Value, CliError> {
    let opts = &cli.opts;
    let path = opts
        .group
        .as_ref()
        .ok_or_else(|| CliError::Usage("--group is required".into()))?;
    let spec = read_group_spec(path)?;
    let prime = match (cli.command.needs_prime(), opts.prime) {
        (true, None) => return Err(CliError::Usage(format!("--prime is required for {}", cli.command.name()))),
        (_, p) => p,
    };
    if let Some(p) = prime {
        if !crate::permgroup::is_prime(p) {
            return Err(Error::NotPrime(p).into());
        }
    }
    let g = input::build_group(&spec, opts.max_order)?;
    let local = prime.map(|p| PLocalSystem::new(&g, p)).transpose()?;

    let mut inputs = json!({
        "group_hash": group_hash(&spec),
        "group_order": g.order(),
        "degree": g.degree(),
        "max_order": opts.max_order,
        "max_enum": opts.max_enum,
    });
    if let Some(name) = &spec.name {
        inputs["group_name"] = json!(name);
    }
    if let Some(local) = &local {
        let e = local.pprime_exponent();
        inputs["p"] = json!(local.p());
        inputs["e"] = json!(e);
        inputs["m"] = json!(2 * e);
        inputs["field_convention"] = json!("F contains all roots of unity of order e = exp(G)_p'; species live in Z[zeta_m], m = 2e");
    }

    let results = match cli.command {
        Command::Marks => marks_report(&table_of_marks(&g)),
        Command::BurnsideUnits => {
            let m = table_of_marks(&g);
            let units = burnside_units(&m, opts.max_enum)?;
            json!({
                "classes": class_labels(&g, &m),
                "order": units.len(),
                "units": units.iter().map(|u| json!({"coeffs": u.coeffs, "ghost": m.mark(u).marks})).collect::<Vec<_>>(),
            })
        }
        Command::Fusion => fusion_report(&g, prime.expect("checked"))?,
        Command::BfUnits => {
            let f = fusion_system(&g, prime.expect("checked"))?;
            let units = fused_units(&f, opts.max_enum)?;
            json!({
                "sylow": key_of(f.sylow()),
                "order": units.order(),
                "structure": units.structure.describe(),
                "units": units.units.iter().map(|u| json!({"coeffs": u.coeffs, "ghost": f.s_marks().mark(u).marks})).collect::<Vec<_>>(),
                "generators": units.structure.generators.iter().map(|u| u.coeffs.clone()).collect::<Vec<_>>(),
            })
        }
        Command::Coherent => {
            let local = local.as_ref().expect("prime given");
            let coh = coherent_tuple_group(local)?;
            let split = split_hom_g(local, &coh)?;
            json!({
                "e": coh.exponent,
                "p_subgroup_classes": p_class_labels(&g, local),
                "hom_groups": coh.homs.iter().map(|h| h.describe()).collect::<Vec<_>>(),
                "candidate_count": coh.candidate_count(),
                "order": coh.order(),
                "structure": coh.structure.describe(),
                "invariant_factors": coh.structure.invariant_factors,
                "generators": coh.structure.generators.iter().map(|t| t.components.iter().map(|c| c.values.clone()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "hom_g": {"order": split.hom_g.order(), "structure": split.hom_g.describe()},
                "reduced": {"order": split.reduced.order(), "structure": split.reduced.describe()},
            })
        }
        Command::Otu => {
            let p = prime.expect("checked");
            let otu = orthogonal_unit_group(&g, p, opts.max_enum)?;
            let r = &otu.report;
            json!({
                "total_order": r.total_order,
                "factors": [
                    format!("B(F)^x: order {}", r.bf_units.len()),
                    format!("coherent: {}", otu.coherent.structure.describe()),
                ],
                "pairs": pairs_report(&g, &otu.local, &otu.pairs),
                "bf_units": r.bf_units.iter().map(|u| json!({
                    "unit": u.unit.coeffs,
                    "transfer": u.transfer.coeffs,
                    "species": species_strings(&u.species.values),
                })).collect::<Vec<_>>(),
                "bf_generators": r.bf_generators,
                "coherent_generators": r.coherent.iter().map(|c| json!({
                    "order": c.order,
                    "components": c.tuple.components.iter().map(|h| h.values.clone()).collect::<Vec<_>>(),
                    "species": species_strings(&c.species.values),
                })).collect::<Vec<_>>(),
            })
        }
        Command::Species => {
            let local = local.as_ref().expect("prime given");
            let m = table_of_marks(&g);
            let pairs = pairs_tpg(local);
            let elements = chosen_elements(&m, opts.element.as_deref())?;
            json!({
                "pairs": pairs_report(&g, local, &pairs),
                "species": elements.iter().map(|(label, a)| json!({
                    "element": label,
                    "values": species_strings(&species_of_gset(&m, local, &pairs, a).values),
                })).collect::<Vec<_>>(),
            })
        }
        Command::Beta => {
            let local = local.as_ref().expect("prime given");
            let m = table_of_marks(&g);
            let elements = chosen_elements(&m, opts.element.as_deref())?;
            json!({
                "p_subgroup_classes": p_class_labels(&g, local),
                "beta": elements.iter().map(|(label, a)| json!({
                    "element": label,
                    "components": beta_of_gset(&m, local, a).iter().map(|cf| species_strings(&cf.values)).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            })
        }
        Command::CheckCoherence => {
            let local = local.as_ref().expect("prime given");
            let path = opts
                .tuple
                .as_ref()
                .ok_or_else(|| CliError::Usage("--tuple is required for check-coherence".into()))?;
            let m = 2 * local.pprime_exponent();
            let tuple = input::read_class_function_tuple(path, local, m)?;
            let violations = check_condition_c(local, &tuple, opts.vertex_set.as_deref())?;
            json!({
                "verdict": if violations.is_empty() { "COHERENT" } else { "NOT COHERENT" },
                "vertex_set": opts.vertex_set,
                "violations": violations.iter().map(|v| json!({
                    "class": v.class,
                    "element": g.element(v.element).to_string(),
                    "value": v.value.to_string(),
                    "transported_class": v.transported_class,
                    "transported_value": v.transported_value.to_string(),
                })).collect::<Vec<_>>(),
            })
        }
        Command::Yoshida => {
            let local = local.as_ref().expect("prime given");
            let path = opts
                .tuple
                .as_ref()
                .ok_or_else(|| CliError::Usage("--tuple is required for yoshida".into()))?;
            let pairs = pairs_tpg(local);
            let alpha = input::read_species_tuple(path, pairs.len(), pairs.conductor())?;
            let verdict = yoshida_check(local, &pairs, &alpha)?;
            json!({
                "verdict": if verdict.passed { "PASS" } else { "FAIL" },
                "pairs": pairs_report(&g, local, &pairs),
                "witness": verdict.witness.map(|w| json!({
                    "class": w.class,
                    "u": g.element(w.u).to_string(),
                    "v": g.element(w.v).to_string(),
                    "psi_u": format!("z^{}", w.psi_u),
                    "psi_v": format!("z^{}", w.psi_v),
                    "psi_uv": format!("z^{}", w.psi_uv),
                })),
            })
        }
    };
    Ok(json!({
        "command": cli.command.name(),
        "version": env!("CARGO_PKG_VERSION"),
        "inputs": inputs,
        "results": results,
    }))
}

fn key_of(h: &Subgroup) -> Vec<usize> {
    h.key().to_vec()
}

fn subgroup_label(g: &FiniteGroup, h: &Subgroup) -> String {
    let t = g.table();
    let cyclic = h.members().iter().any(|&x| t.order_of(x) == h.order());
    let abelian = h
        .members()
        .iter()
        .all(|&a| h.members().iter().all(|&b| t.mul(a, b) == t.mul(b, a)));
    let kind = if cyclic {
        "cyclic"
    } else if abelian {
        "abelian"
    } else {
        "nonabelian"
    };
    format!("order {}, {kind}", h.order())
}

fn class_labels(g: &FiniteGroup, m: &MarkMatrix) -> Vec<Value> {
    m.classes()
        .classes()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            json!({
                "index": i,
                "key": key_of(&c.rep),
                "label": subgroup_label(g, &c.rep),
                "conjugates": c.size(),
            })
        })
        .collect()
}

fn p_class_labels(g: &FiniteGroup, local: &PLocalSystem) -> Vec<Value> {
    local
        .classes()
        .classes()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            json!({
                "index": i,
                "key": key_of(&c.rep),
                "label": subgroup_label(g, &c.rep),
                "normalizer_quotient_order": local.local(i).quotient.order(),
                "quotient_classes": local.local(i).quotient.classes().iter()
                    .map(|cl| g.element(local.local(i).quotient.rep(cl[0])).to_string())
                    .collect::<Vec<_>>(),
            })
        })
        .collect()
}

fn marks_report(m: &MarkMatrix) -> Value {
    json!({
        "classes": class_labels(m.group(), m),
        "matrix": m.rows(),
    })
}

fn fusion_report(g: &FiniteGroup, p: u64) -> Result<Value, Error> {
    let f = fusion_system(g, p)?;
    let s_classes = f.s_marks().classes();
    let lattice = fused_lattice(&f);
    Ok(json!({
        "sylow": key_of(f.sylow()),
        "s_classes": s_classes.classes().iter().enumerate().map(|(i, c)| {
            let in_g = f.ring().to_parent(&c.rep);
            json!({
                "index": i,
                "key": key_of(&in_g),
                "label": subgroup_label(g, &in_g),
                "block": f.block_of()[i],
                "conjugator": g.element(f.conjugator(i)).to_string(),
            })
        }).collect::<Vec<_>>(),
        "blocks": f.blocks(),
        "bf_basis": lattice.basis.iter().map(|a| a.coeffs.clone()).collect::<Vec<_>>(),
    }))
}

fn pairs_report(g: &FiniteGroup, local: &PLocalSystem, pairs: &PairsTpG) -> Vec<Value> {
    pairs
        .pairs()
        .iter()
        .map(|pair| {
            json!({
                "p_subgroup": key_of(local.rep(pair.class)),
                "class": pair.class,
                "element": g.element(pair.element).to_string(),
            })
        })
        .collect()
}

fn species_strings(values: &[crate::tsr::CyclotomicInt]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

fn chosen_elements(m: &MarkMatrix, element: Option<&[i64]>) -> Result<Vec<(String, BurnsideElement)>, CliError> {
    let n = m.len();
    match element {
        Some(coeffs) if coeffs.len() == n => Ok(vec![(
            format!("{coeffs:?}"),
            BurnsideElement {
                coeffs: coeffs.to_vec(),
            },
        )]),
        Some(coeffs) => Err(CliError::Usage(format!(
            "--element has {} coefficients for {n} subgroup classes",
            coeffs.len()
        ))),
        None => Ok((0..n)
            .map(|i| (format!("G/H{i}"), BurnsideElement::basis(n, i)))
            .collect()),
    }
}
