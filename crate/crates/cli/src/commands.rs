use std::fmt;
use std::fs;
use std::path::Path;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use bihom_core::axioms::{
    check, check_bihom_assoc_superalgebra, check_bihom_superdialgebra, check_superdialgebra, AxiomSystem, CheckOptions,
    ViolationReport,
};
use bihom_core::constructions::{
    classify_subspace, from_associative, from_differential, generated_ideal, hom_to_bihom, morphism_check, power_twist,
    quotient, superdialgebra_to_bihom, untwist_regular, yau_twist, IdealWitness,
};
use bihom_core::corpus::{generate, CorpusConfig};
use bihom_core::derivations::{
    ad_operator, brute_force_derivations, solve_dialgebra_derivations, solve_generalized, solve_quasi,
    solve_superalgebra_derivations, verify_bracket_closure, verify_generalized_bracket, BracketReport,
    DerivationFile, DerivationKind, GeneralizedParams, SignConvention, Signature,
};
use bihom_core::graded::GradingReport;
use bihom_core::io::{self, InstanceFile, LoadOptions};
use bihom_core::{DialgebraInstance, Field, GradedMap, Matrix, Parity, Vector};

use crate::report::Outcome;
use crate::{Cli, Command, CorpusArgs, DerivationArgs, FieldName, TwistArgs, Which};

#[derive(Debug)]
pub enum CliError {
    Core(bihom_core::Error),
    /// Bad arguments or files, detected before any mathematics runs.
    Usage(String),
}

impl CliError {
    pub fn is_malformed(&self) -> bool {
        match self {
            CliError::Core(e) => e.is_malformed_input(),
            CliError::Usage(_) => true,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => e.fmt(f),
            CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl From<bihom_core::Error> for CliError {
    fn from(e: bihom_core::Error) -> CliError {
        CliError::Core(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn usage<T>(message: impl Into<String>) -> Result<T> {
    Err(CliError::Usage(message.into()))
}

/// Reads input files and remembers their bytes for the report digest.
struct Inputs {
    bytes: Vec<Vec<u8>>,
    load: LoadOptions,
}

impl Inputs {
    fn text(&mut self, path: &Path) -> Result<String> {
        let bytes = fs::read(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        let text = String::from_utf8(bytes.clone())
            .map_err(|_| CliError::Usage(format!("{} is not UTF-8", path.display())))?;
        self.bytes.push(bytes);
        Ok(text)
    }

    fn instance(&mut self, path: &Path) -> Result<InstanceFile> {
        let text = self.text(path)?;
        Ok(io::parse_instance(&text, self.load)?)
    }

    fn dialgebra(&mut self, path: &Path) -> Result<DialgebraInstance> {
        Ok(self.instance(path)?.into_dialgebra()?)
    }

    fn matrix(&mut self, path: &Path, field: Field) -> Result<Matrix> {
        let m = io::parse_matrix_file(&self.text(path)?)?;
        if m.field() != field {
            return usage(format!("{} is over {}, the instance over {field}", path.display(), m.field()));
        }
        Ok(m)
    }

    fn map(&mut self, path: &Path, h: &DialgebraInstance) -> Result<GradedMap> {
        let m = self.matrix(path, h.field())?;
        if m.rows() != h.dim() || m.cols() != h.dim() {
            return usage(format!("{} must be {1}x{1}", path.display(), h.dim()));
        }
        Ok(GradedMap::new(m)?)
    }
}

pub fn name(command: &Command) -> &'static str {
    match command {
        Command::Check { .. } => "check",
        Command::Twist(_) => "twist",
        Command::Derivations(_) => "derivations",
        Command::Quotient { .. } => "quotient",
        Command::Ideal { .. } => "ideal",
        Command::Morphism { .. } => "morphism",
        Command::Ad { .. } => "ad",
        Command::Bracket { .. } => "bracket",
        Command::FromDifferential { .. } => "from-differential",
        Command::FromAssociative { .. } => "from-associative",
        Command::Corpus(_) => "corpus",
    }
}

pub fn run(cli: &Cli) -> (Vec<Vec<u8>>, Result<Outcome>) {
    let mut inputs = Inputs { bytes: Vec::new(), load: LoadOptions { project_graded: cli.global.project_graded } };
    let opts = CheckOptions { max_per_axiom: cli.global.max_violations };
    let result = match &cli.command {
        Command::Check { path, which } => cmd_check(&mut inputs, path, *which, opts),
        Command::Twist(args) => cmd_twist(&mut inputs, args, opts),
        Command::Derivations(args) => cmd_derivations(&mut inputs, args),
        Command::Quotient { path, span, output, verify } => {
            cmd_quotient(&mut inputs, path, span, output.as_deref(), *verify, opts)
        }
        Command::Ideal { path, span, generate } => cmd_ideal(&mut inputs, path, span, *generate),
        Command::Morphism { source, target, matrix } => cmd_morphism(&mut inputs, source, target, matrix),
        Command::Ad { path, r } => cmd_ad(&mut inputs, path, r),
        Command::Bracket { path, first, second } => cmd_bracket(&mut inputs, path, first, second),
        Command::FromDifferential { path, output, verify } => {
            cmd_from_differential(&mut inputs, path, output.as_deref(), *verify, opts)
        }
        Command::FromAssociative { path, output, verify } => {
            cmd_from_associative(&mut inputs, path, output.as_deref(), *verify, opts)
        }
        Command::Corpus(args) => cmd_corpus(args, cli.global.seed, opts),
    };
    (inputs.bytes, result)
}

fn strings(v: &[bihom_core::Scalar]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn json_of(text: &str) -> Value {
    serde_json::from_str(text).expect("library output is valid JSON")
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    if let Some(path) = path {
        io::write_atomic(path, text)?;
    }
    Ok(())
}

/// Folds an axiom report into the outcome; returns whether it was empty.
fn absorb(outcome: &mut Outcome, report: &ViolationReport) -> bool {
    for axiom in report.failed_axioms() {
        *outcome.violations.entry(axiom.label().to_string()).or_default() += report.count(axiom);
    }
    for line in report.to_string().lines() {
        outcome.line(line);
    }
    report.is_empty()
}

fn absorb_grading(outcome: &mut Outcome, report: &GradingReport) -> bool {
    if !report.is_empty() {
        outcome.violations.insert("grading".into(), report.len());
        for t in &report.tensors {
            outcome.line(format!("grading: {}[{}][{}][{}] breaks evenness", t.product, t.i, t.j, t.k));
        }
        for m in &report.maps {
            outcome.line(format!("grading: {}[{}][{}] breaks evenness", m.map, m.row, m.col));
        }
    }
    report.is_empty()
}

fn cmd_check(inputs: &mut Inputs, path: &Path, which: Which, opts: CheckOptions) -> Result<Outcome> {
    let file = inputs.instance(path)?;
    let grading = match &file {
        InstanceFile::Dialgebra(h) => h.check_grading(),
        InstanceFile::Superalgebra(a) => a.check_grading(),
        InstanceFile::Differential(d) => d.check_grading(),
    };
    let mut out = Outcome::new(true);
    out.pass = absorb_grading(&mut out, &grading);
    let report = match (&file, which) {
        (_, Which::Grading) => None,
        (InstanceFile::Dialgebra(h), which) => {
            let system = match which {
                Which::Superdialgebra => AxiomSystem::Superdialgebra,
                Which::Hom => AxiomSystem::HomSuperdialgebra,
                Which::Bihom => AxiomSystem::BiHomSuperdialgebra,
                Which::Multiplicative => AxiomSystem::Multiplicative,
                Which::Grading => unreachable!(),
            };
            Some(check(h, system, opts))
        }
        (InstanceFile::Superalgebra(a), _) => {
            out.line("superalgebra file: checking BiHom-associativity");
            Some(check_bihom_assoc_superalgebra(a, opts))
        }
        (InstanceFile::Differential(d), _) => {
            out.line("differential file: checking the underlying superalgebra");
            Some(check_bihom_assoc_superalgebra(&d.base, opts))
        }
    };
    if let Some(report) = &report {
        out.pass &= absorb(&mut out, report);
    }
    out.details = json!({
        "kind": file.kind(),
        "grading": grading,
        "axioms": report,
    });
    Ok(out)
}

fn emit_instance(
    out: &mut Outcome,
    h: &DialgebraInstance,
    output: Option<&Path>,
    verify: Option<(&str, ViolationReport)>,
) -> Result<()> {
    let text = io::dialgebra_to_json(h);
    write_output(output, &text)?;
    out.line(format!("output: dimension {}", h.dim()));
    if let Some((system, report)) = verify {
        out.line(format!("verify ({system}):"));
        out.pass = absorb(out, &report);
    }
    out.details = json!({ "instance": json_of(&text) });
    Ok(())
}

fn cmd_twist(inputs: &mut Inputs, args: &TwistArgs, opts: CheckOptions) -> Result<Outcome> {
    let h = inputs.dialgebra(&args.path)?;
    let (result, untwisted) = if let Some(n) = args.power {
        (power_twist(&h, n)?, false)
    } else if args.untwist {
        (untwist_regular(&h)?, true)
    } else if let Some(e) = &args.hom_to_bihom {
        let e = inputs.map(e, &h)?;
        (hom_to_bihom(&h, &e)?, false)
    } else if let (Some(a), Some(e)) = (&args.alpha, &args.epsilon) {
        let a = inputs.map(a, &h)?;
        let e = inputs.map(e, &h)?;
        let twisted = if args.from_superdialgebra { superdialgebra_to_bihom(&h, &a, &e)? } else { yau_twist(&h, &a, &e)? };
        (twisted, false)
    } else {
        return usage("give --alpha and --epsilon, --power, --hom-to-bihom or --untwist");
    };
    let mut out = Outcome::new(true);
    let verify = args.verify.then(|| {
        if untwisted {
            ("superdialgebra", check_superdialgebra(&result, opts))
        } else {
            ("bihom", check_bihom_superdialgebra(&result, opts))
        }
    });
    emit_instance(&mut out, &result, args.output.as_deref(), verify)?;
    Ok(out)
}

fn cmd_derivations(inputs: &mut Inputs, args: &DerivationArgs) -> Result<Outcome> {
    let file = inputs.instance(&args.path)?;
    let parity = if args.parity == 0 { Parity::Even } else { Parity::Odd };
    let sig = Signature::new(args.m, args.n, parity);
    let conv: SignConvention = args.sign_convention.into();
    let field = file.field();
    if args.oracle && args.generalized.is_some() {
        return usage("--oracle applies to plain derivations only");
    }
    if args.oracle && args.quasi {
        return usage("--oracle applies to plain derivations only");
    }
    if args.oracle && !matches!(field, Field::Prime(_)) {
        return usage("--oracle needs an instance over Fp");
    }
    let mut out = Outcome::new(true);
    let (h, space, deriv_file) = match file {
        InstanceFile::Superalgebra(a) => {
            if args.generalized.is_some() || args.quasi {
                return usage("generalized and quasi derivations need a dialgebra instance");
            }
            let space = solve_superalgebra_derivations(&a, sig)?;
            let file = DerivationFile::from_space(a.dim(), field, DerivationKind::SuperalgebraDerivation, &space);
            // With ⊣ = ⊢ = · the dialgebra identities are the superalgebra ones.
            (from_associative(&a)?, space, file)
        }
        InstanceFile::Differential(_) => return usage("derivations need a dialgebra or superalgebra file"),
        InstanceFile::Dialgebra(h) => {
            if args.quasi {
                let space = solve_quasi(&h, sig, conv)?;
                let file = DerivationFile::from_quasi(h.dim(), field, &space);
                let projection = space.projection().len();
                out.line(format!("quasi pairs: dimension {}; projection to d: dimension {projection}", space.pairs.len()));
                write_output(args.output.as_deref(), &file.to_json())?;
                out.details = json!({ "dim": space.pairs.len(), "projection_dim": projection, "file": json_of(&file.to_json()) });
                return Ok(out);
            }
            if let Some(raw) = &args.generalized {
                let parse = |s: &str| field.parse(s).map_err(|e| CliError::Usage(format!("--generalized: {e}")));
                let params = GeneralizedParams::new(parse(&raw[0])?, parse(&raw[1])?, parse(&raw[2])?);
                let space = solve_generalized(&h, &params, sig, conv)?;
                let file = DerivationFile::from_space(h.dim(), field, DerivationKind::Generalized, &space).with_params(&params);
                (h, space, file)
            } else {
                let space = solve_dialgebra_derivations(&h, sig, conv)?;
                let file = DerivationFile::from_space(h.dim(), field, DerivationKind::Derivation, &space);
                (h, space, file)
            }
        }
    };
    out.line(format!(
        "signature (m, n) = ({}, {}), parity {}: dimension {}",
        sig.m,
        sig.n,
        parity.as_u8(),
        space.dim()
    ));
    let mut oracle = Value::Null;
    if args.oracle {
        let brute = brute_force_derivations(&h, sig, space.convention)?;
        let agree = brute.same_span(&space);
        out.line(format!(
            "oracle: brute force finds dimension {}; {}",
            brute.dim(),
            if agree { "spans agree" } else { "spans DIFFER" }
        ));
        out.pass = agree;
        oracle = json!({ "dim": brute.dim(), "agree": agree });
    }
    let text = deriv_file.to_json();
    write_output(args.output.as_deref(), &text)?;
    out.details = json!({ "dim": space.dim(), "oracle": oracle, "file": json_of(&text) });
    Ok(out)
}

fn ideal_json(w: &IdealWitness) -> Value {
    json!({
        "dim": w.dim(),
        "basis": w.basis.iter().map(|v| strings(v)).collect::<Vec<_>>(),
        "subalgebra": w.is_subalgebra,
        "left_ideal": w.is_left,
        "right_ideal": w.is_right,
        "two_sided": w.is_two_sided,
        "failures": w.failures,
    })
}

fn vectors(inputs_dim: usize, field: Field, span: &str) -> Result<Vec<Vector>> {
    Ok(io::parse_vectors(field, span, inputs_dim)?)
}

fn cmd_quotient(
    inputs: &mut Inputs,
    path: &Path,
    span: &str,
    output: Option<&Path>,
    verify: bool,
    opts: CheckOptions,
) -> Result<Outcome> {
    let h = inputs.dialgebra(path)?;
    let t = classify_subspace(&h, &vectors(h.dim(), h.field(), span)?)?;
    let q = quotient(&h, &t)?;
    let mut out = Outcome::new(true);
    out.line(format!("ideal: dimension {}", t.dim()));
    let check = verify.then(|| ("bihom", check_bihom_superdialgebra(&q.instance, opts)));
    emit_instance(&mut out, &q.instance, output, check)?;
    let instance = out.details["instance"].take();
    out.details = json!({
        "ideal": ideal_json(&t),
        "projection": io::matrix_strings(&q.projection),
        "instance": instance,
    });
    Ok(out)
}

fn cmd_ideal(inputs: &mut Inputs, path: &Path, span: &str, generate: bool) -> Result<Outcome> {
    let h = inputs.dialgebra(path)?;
    let vs = vectors(h.dim(), h.field(), span)?;
    let w = if generate { generated_ideal(&h, &vs)? } else { classify_subspace(&h, &vs)? };
    let mut out = Outcome::new(w.is_two_sided);
    out.line(format!("dimension {}", w.dim()));
    for (flag, name) in [
        (w.is_subalgebra, "subalgebra"),
        (w.is_left, "left ideal"),
        (w.is_right, "right ideal"),
        (w.is_two_sided, "two-sided ideal"),
    ] {
        out.line(format!("{name}: {}", if flag { "yes" } else { "no" }));
    }
    for f in &w.failures {
        out.line(format!("fails {}: {}", f.condition, f.detail));
    }
    out.details = ideal_json(&w);
    Ok(out)
}

fn cmd_morphism(inputs: &mut Inputs, source: &Path, target: &Path, matrix: &Path) -> Result<Outcome> {
    let h1 = inputs.dialgebra(source)?;
    let h2 = inputs.dialgebra(target)?;
    if h1.field() != h2.field() {
        return usage("source and target are over different fields");
    }
    let g = inputs.matrix(matrix, h1.field())?;
    let a = morphism_check(&h1, &h2, &g)?;
    let w = &a.witness;
    let mut out = Outcome::new(w.is_morphism());
    for (flag, name) in [
        (w.even, "even"),
        (w.commutes_alpha, "commutes with alpha"),
        (w.commutes_epsilon, "commutes with epsilon"),
        (w.preserves_left, "preserves left product"),
        (w.preserves_right, "preserves right product"),
    ] {
        out.line(format!("{name}: {}", if flag { "yes" } else { "no" }));
    }
    for f in &w.failures {
        out.line(format!("failure: {f:?}"));
    }
    out.line(format!("kernel: dimension {}", a.kernel.dim()));
    out.line(format!("image: dimension {}", a.image.dim()));
    out.details = json!({ "witness": w, "kernel": ideal_json(&a.kernel), "image": ideal_json(&a.image) });
    Ok(out)
}

fn cmd_ad(inputs: &mut Inputs, path: &Path, r: &str) -> Result<Outcome> {
    let h = inputs.dialgebra(path)?;
    let r = io::parse_vector(h.field(), r, h.dim())?;
    let ad = ad_operator(&h, &r)?;
    let mut out = Outcome::new(ad.left.plain);
    out.line(format!("ad_r: parity {}", ad.parity.as_u8()));
    for (name, s) in [("left", &ad.left), ("right", &ad.right)] {
        out.line(format!(
            "{name} Leibniz: plain {}, signed {}{}",
            s.plain,
            s.signed,
            s.witness.map(|(i, j)| format!(", first failure at (e{i}, e{j})")).unwrap_or_default()
        ));
    }
    out.details = json!({ "ad": ad, "map": io::matrix_strings(&ad.map.matrix) });
    Ok(out)
}

fn bracket_outcome(report: &BracketReport) -> Outcome {
    let mut out = Outcome::new(report.closed() && report.antisymmetric());
    out.line(format!(
        "target signature (m, n) = ({}, {}), parity {}: dimension {}",
        report.target.m,
        report.target.n,
        report.target.parity.as_u8(),
        report.target_dim
    ));
    out.line(format!("brackets: {}", report.entries.len()));
    out.line(format!("closed: {}", report.closed()));
    out.line(format!("super-antisymmetric: {}", report.antisymmetric()));
    if let Some(e) = report.first_failure() {
        out.line(format!("first failure: [d{}, d{}]", e.i, e.j));
    }
    out
}

fn cmd_bracket(inputs: &mut Inputs, path: &Path, first: &Path, second: &Path) -> Result<Outcome> {
    let h = inputs.dialgebra(path)?;
    let mut load = |p: &Path| -> Result<DerivationFile> {
        let f = DerivationFile::parse(&inputs.text(p)?)?;
        if f.field()? != h.field() {
            return usage(format!("{} is over a different field than the instance", p.display()));
        }
        Ok(f)
    };
    let (f1, f2) = (load(first)?, load(second)?);
    let (s1, s2) = (f1.to_space(&h.space)?, f2.to_space(&h.space)?);
    let mut out = match (f1.params()?, f2.params()?) {
        (Some(p1), Some(p2)) => {
            let (params, report) = verify_generalized_bracket(&h, (&p1, &s1), (&p2, &s2))?;
            let mut out = bracket_outcome(&report);
            out.line(format!("parameters: ({}, {}, {})", params.gamma, params.delta, params.lambda));
            out.details = json!({ "report": report });
            out
        }
        (None, None) => {
            let report = verify_bracket_closure(&h, &s1, &s2)?;
            let mut out = bracket_outcome(&report);
            out.details = json!({ "report": report });
            out
        }
        _ => return usage("both basis files must be generalized, or neither"),
    };
    out.details["first_dim"] = json!(s1.dim());
    out.details["second_dim"] = json!(s2.dim());
    Ok(out)
}

fn cmd_from_differential(
    inputs: &mut Inputs,
    path: &Path,
    output: Option<&Path>,
    verify: bool,
    opts: CheckOptions,
) -> Result<Outcome> {
    let InstanceFile::Differential(d) = inputs.instance(path)? else {
        return usage("expected a differential file (with `prod`, `d` and `d_parity`)");
    };
    let h = from_differential(&d)?;
    let mut out = Outcome::new(true);
    let check = verify.then(|| ("bihom", check_bihom_superdialgebra(&h, opts)));
    emit_instance(&mut out, &h, output, check)?;
    Ok(out)
}

fn cmd_from_associative(
    inputs: &mut Inputs,
    path: &Path,
    output: Option<&Path>,
    verify: bool,
    opts: CheckOptions,
) -> Result<Outcome> {
    let InstanceFile::Superalgebra(a) = inputs.instance(path)? else {
        return usage("expected a superalgebra file (with `prod`)");
    };
    let h = from_associative(&a)?;
    let mut out = Outcome::new(true);
    let check = verify.then(|| ("bihom", check_bihom_superdialgebra(&h, opts)));
    emit_instance(&mut out, &h, output, check)?;
    Ok(out)
}

fn cmd_corpus(args: &CorpusArgs, seed: u64, opts: CheckOptions) -> Result<Outcome> {
    let field = match (args.field, args.p) {
        (FieldName::Q, None) => Field::Rational,
        (FieldName::Q, Some(_)) => return usage("--p is only allowed with --field Fp"),
        (FieldName::Fp, Some(p)) => io::parse_field("Fp", Some(p))?,
        (FieldName::Fp, None) => return usage("--field Fp needs --p"),
    };
    if args.dim == 0 {
        return usage("--dim must be at least 1");
    }
    let entries = generate(&CorpusConfig::new(seed, field, args.dim, args.count))?;
    fs::create_dir_all(&args.dir).map_err(|e| CliError::Usage(format!("cannot create {}: {e}", args.dir.display())))?;
    let mut manifest = Vec::new();
    for e in &entries {
        let text = io::dialgebra_to_json(&e.instance);
        // Gate on the serialized form, exactly as `check` would read it.
        let reread = io::parse_instance(&text, LoadOptions::default())?.into_dialgebra()?;
        let report = check_bihom_superdialgebra(&reread, opts);
        if !report.is_empty() {
            return Err(CliError::Core(bihom_core::Error::Precondition {
                name: "corpus-gate".into(),
                witness: format!("{}: {report}", e.name),
            }));
        }
        let file = format!("{}.json", e.name);
        io::write_atomic(args.dir.join(&file), &text)?;
        manifest.push(json!({
            "file": file,
            "family": e.family.name(),
            "dim": e.instance.dim(),
            "powers": [e.powers.0, e.powers.1],
            "sha256": format!("{:x}", Sha256::digest(text.as_bytes())),
        }));
    }
    let (field_name, p) = io::field_fields(field);
    let manifest = json!({ "seed": seed, "field": field_name, "p": p, "max_dim": args.dim, "entries": manifest });
    let mut text = serde_json::to_string_pretty(&manifest).expect("serializable");
    text.push('\n');
    io::write_atomic(args.dir.join("manifest.json"), &text)?;
    let mut out = Outcome::new(true);
    out.line(format!("wrote {} instances to {}", entries.len(), args.dir.display()));
    out.details = manifest;
    Ok(out)
}
