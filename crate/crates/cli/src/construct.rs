use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use homalg_core::bundle::{Bundle, BundleOperator};
use homalg_core::functors::{
    commutator, horizontal, prealt_to_premalcev, quadri_split, transpose, vertical, yau_twist,
};
use homalg_core::operators::{hessian_dendrify, induce, induce_pair, twist_oop_setup, PAIR_RECIPES, RECIPES};
use homalg_core::reps::{
    adjoint_rep, dual_malcev_rep_variant, dual_pre_malcev_rep_variant, regular_alternative_rep, regular_pre_alt_rep,
    regular_pre_malcev_rep, semidirect, RepKind,
};
use homalg_core::{DualVariant, Error, HomStructure, OperatorWitness, ProductRole, Representation};

use crate::{emit, load, Failure};

#[derive(Args)]
pub struct ConstructArgs {
    path: PathBuf,
    /// Recipe label, e.g. `commutator`, `transpose`, `malcev-to-premalcev-rb`.
    #[arg(long)]
    recipe: String,
    /// Operator index: the witness, or the twisting map for `yau-twist`.
    #[arg(long)]
    operator: Option<usize>,
    /// Second operator index for pair recipes.
    #[arg(long)]
    operator2: Option<usize>,
    #[arg(long)]
    rep: Option<usize>,
    #[arg(long)]
    form: Option<usize>,
    /// Product to take the commutator of (defaults to the natural one).
    #[arg(long)]
    role: Option<String>,
    /// Split direction for `quadri-split`.
    #[arg(long)]
    direction: Option<String>,
    /// Exponent `s` for `adjoint-rep` and `regular-rep`.
    #[arg(long, default_value_t = 0)]
    power: u32,
    /// Reading of the dual action for `dual-rep`.
    #[arg(long, value_enum, default_value_t = Variant::Forward)]
    variant: Variant,
    /// Accept a twisting map that only preserves products.
    #[arg(long)]
    weak: bool,
    /// Map indices for `oop-endomorphism-twist`.
    #[arg(long)]
    phi_a: Option<usize>,
    #[arg(long)]
    phi_v: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Forward,
    Inverse,
}

fn need(v: Option<usize>, flag: &str, recipe: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure { code: 2, message: format!("{recipe} needs --{flag}") })
}

fn map_of(b: &Bundle, i: usize) -> Result<homalg_core::Matrix, Failure> {
    Ok(b.operator(i)?.matrix().clone())
}

fn default_role(s: &HomStructure) -> ProductRole {
    use ProductRole as R;
    match s.roles().as_slice() {
        [r] => *r,
        [R::TriRight, R::TriLeft] => R::Dot,
        _ => R::Star,
    }
}

fn with_provenance(s: HomStructure, label: &str) -> HomStructure {
    s.with_provenance(label)
}

/// Representation moved onto a relabelled copy of its base.
fn rebase(rep: &Representation, base: &HomStructure) -> Result<Representation, Error> {
    Representation::new(base.clone(), rep.actions().map(|(r, a)| (r, a.to_vec())).collect(), rep.twist().clone())
}

fn rep_bundle(rep: Representation, label: &str) -> Result<Bundle, Failure> {
    let base = with_provenance(rep.base().clone(), label);
    let rep = rebase(&rep, &base)?;
    let mut b = Bundle::new(base);
    b.reps.push(rep);
    Ok(b)
}

fn build(args: &ConstructArgs, input: &Bundle, label: &str) -> Result<Bundle, Failure> {
    let s = &input.structure;
    let recipe = args.recipe.as_str();
    let structure = match recipe {
        "commutator" => {
            let role = match &args.role {
                Some(r) => ProductRole::from_name(r)?,
                None => default_role(s),
            };
            commutator(s, role)?
        }
        "horizontal" => horizontal(s)?,
        "vertical" => vertical(s)?,
        "transpose" => transpose(s)?,
        "prealt-to-premalcev" => prealt_to_premalcev(s)?,
        "yau-twist" => yau_twist(s, &map_of(input, need(args.operator, "operator", recipe)?)?, args.weak)?,
        "quadri-split" => {
            let d = args
                .direction
                .as_deref()
                .ok_or_else(|| Failure { code: 2, message: "quadri-split needs --direction".into() })?;
            quadri_split(s, d)?
        }
        "semidirect" => semidirect(s, input.rep(need(args.rep, "rep", recipe)?)?)?,
        "hessian-dendrify" => hessian_dendrify(s, input.form(need(args.form, "form", recipe)?)?)?,
        "dual-rep" => {
            let rep = input.rep(need(args.rep, "rep", recipe)?)?;
            let variant = match args.variant {
                Variant::Forward => DualVariant::Forward,
                Variant::Inverse => DualVariant::Inverse,
            };
            let dual = match rep.kind()? {
                RepKind::Malcev => dual_malcev_rep_variant(rep, variant)?,
                RepKind::PreMalcev => dual_pre_malcev_rep_variant(rep, variant)?,
                k => {
                    return Err(Failure {
                        code: 2,
                        message: format!("dual-rep is defined for Malcev and pre-Malcev representations, not {k:?}"),
                    })
                }
            };
            return rep_bundle(dual, label);
        }
        "adjoint-rep" => return rep_bundle(adjoint_rep(s, args.power)?, label),
        "regular-rep" => {
            let rep = match s.roles().as_slice() {
                [ProductRole::Dot] => regular_pre_malcev_rep(s, args.power)?,
                [ProductRole::Star] => regular_alternative_rep(s)?,
                [ProductRole::Prec, ProductRole::Succ] => regular_pre_alt_rep(s)?,
                _ => adjoint_rep(s, args.power)?,
            };
            return rep_bundle(rep, label);
        }
        "oop-endomorphism-twist" => {
            let w = input.witness(need(args.operator, "operator", recipe)?)?;
            let phi_a = map_of(input, need(args.phi_a, "phi-a", recipe)?)?;
            let phi_v = map_of(input, need(args.phi_v, "phi-v", recipe)?)?;
            let (base, rep, w) = twist_oop_setup(s, &w, &phi_a, &phi_v)?;
            let base = with_provenance(base, label);
            let rep = rebase(&rep, &base)?;
            let mut b = Bundle::new(base);
            b.reps.push(rep);
            b.operators.push(BundleOperator::OOperator { map: w.map().clone(), rep_index: 0 });
            return Ok(b);
        }
        r if RECIPES.contains(&r) => induce(s, &input.witness(need(args.operator, "operator", r)?)?, r)?,
        r if PAIR_RECIPES.contains(&r) => {
            let w1: OperatorWitness = input.witness(need(args.operator, "operator", r)?)?;
            let w2 = input.witness(need(args.operator2, "operator2", r)?)?;
            induce_pair(s, &w1, &w2, r)?
        }
        other => return Err(Error::UnknownRecipe(other.to_string()).into()),
    };
    let class = structure.natural_class();
    Ok(Bundle::new(with_provenance(structure, label)).with_class(class))
}

pub fn run(args: &ConstructArgs, out: Option<&Path>) -> Result<u8, Failure> {
    let input = load(&args.path)?;
    let file = args.path.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default();
    let mut label = format!("{} of {file}", args.recipe);
    for (name, v) in [
        ("operator", args.operator),
        ("operator2", args.operator2),
        ("rep", args.rep),
        ("form", args.form),
        ("phi-a", args.phi_a),
        ("phi-v", args.phi_v),
    ] {
        if let Some(i) = v {
            label.push_str(&format!(" {name}={i}"));
        }
    }
    let bundle = build(args, &input, &label)?;
    emit(out, &bundle.to_json())?;
    Ok(0)
}
