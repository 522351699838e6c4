//! Command-line front end.
//!
//! Exit codes: 0 success, 1 mathematical failure (report on stderr), 2 malformed input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::{check_anti_pre_lie, check_lie, sub_adjacent_lie, AntiPreLieAlgebra, MultTable};
use crate::cohomology::{cohomology_spaces, Cochain2};
use crate::deformation::{
    apply_isomorphism, check_deformation, infinitesimal, rigidity_certificate, sample_deformation, trivialize_step,
    TruncatedDeformation, TruncatedIsomorphism,
};
use crate::dendriform::{
    associated_anti_pre_lie, check_anti_l_dendriform, check_o_operator, compatible_from_invertible_o,
    dendriform_from_bilinear_form, induced_dendriform, AntiLDendriform, InvariantBilinearForm,
};
use crate::error::{Error, Result};
use crate::extension::{are_isomorphic, build_extension, classify_extensions, extract_cocycle};
use crate::io::{
    cohomology_to_value, document_field, from_document, lie_to_value, matrix_from_value_any, matrix_to_value, parse,
    print, report_to_value, to_document, BilinearFormDoc, ExtensionDoc, OOperatorDoc,
};
use crate::report::Report;
use crate::representation::{
    check_representation, dual_representation, semidirect_product, special_condition_report, Representation,
};
use crate::scalar::{FieldKind, Fp, Rational, Scalar};
use crate::search::{
    search_algebras, search_bilinear_forms, search_o_operators, search_representations, SearchSpec, DEFAULT_MAX_SPACE,
};

#[derive(Parser, Debug)]
#[command(name = "antiprelie", version, about = "Exact computations with anti-pre-Lie algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Verify the anti-pre-Lie identities of a table.
    Check { algebra: PathBuf },
    /// Print the sub-adjacent Lie algebra.
    Lie { algebra: PathBuf },
    /// Verify a representation.
    RepCheck { algebra: PathBuf, rep: PathBuf },
    /// Semidirect product algebra.
    Semidirect { algebra: PathBuf, rep: PathBuf },
    /// Dual representation.
    Dual { rep: PathBuf },
    /// The three equivalent special conditions on a representation.
    Special { algebra: PathBuf, rep: PathBuf },
    /// Z², B², H² with bases.
    Cohomology { algebra: PathBuf, rep: PathBuf },
    /// Verify the anti-L-dendriform identities.
    DendCheck { dendriform: PathBuf },
    /// Associated anti-pre-Lie algebra of a dendriform structure.
    Assoc { dendriform: PathBuf },
    /// Verify an O-operator.
    OCheck { algebra: PathBuf, rep: PathBuf, operator: PathBuf },
    /// Dendriform structure induced on the representation space.
    OInduce { algebra: PathBuf, rep: PathBuf, operator: PathBuf },
    /// Compatible dendriform structure from an invertible O-operator.
    OCompat { algebra: PathBuf, rep: PathBuf, operator: PathBuf },
    /// Compatible dendriform structure from an invariant bilinear form.
    FromForm {
        algebra: PathBuf,
        form: PathBuf,
        #[arg(long)]
        strict_skew: bool,
    },
    /// Verify a truncated deformation.
    DeformCheck { deformation: PathBuf },
    /// Infinitesimal of a deformation.
    Infinitesimal { deformation: PathBuf },
    /// Transport a deformation along a formal isomorphism.
    ApplyIso { deformation: PathBuf, isomorphism: PathBuf },
    /// Kill the order-n term of a deformation whose lower terms vanish.
    Trivialize {
        deformation: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Compute H²(A;A) and trivialize random sample deformations.
    Rigidity {
        algebra: PathBuf,
        #[arg(long, default_value_t = 3)]
        order: usize,
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Abelian extension from a 2-cocycle.
    Extend { algebra: PathBuf, rep: PathBuf, theta: PathBuf },
    /// Cocycle and representation of an extension.
    Extract {
        extension: PathBuf,
        #[arg(long)]
        section: Option<PathBuf>,
    },
    /// Isomorphism between two extensions.
    Iso { first: PathBuf, second: PathBuf },
    /// One extension per H² basis class.
    Classify { algebra: PathBuf, rep: PathBuf },
    /// Brute-force search for small structures.
    Search {
        #[arg(long, value_enum)]
        target: Target,
        /// Dimension of the algebra, or of the representation space for the
        /// o-operator and representation targets.
        #[arg(long)]
        dim: usize,
        /// "rational" or a prime (2, 3, 5, 7).
        #[arg(long)]
        field: String,
        /// Entries in [-bound, bound]; defaults to all residues for a prime field and 1 for the rationals.
        #[arg(long)]
        bound: Option<i64>,
        /// Draw this many random candidates instead of enumerating.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_space: Option<u128>,
        /// Algebra for the o-operator, bilinear-form and representation targets.
        #[arg(long)]
        algebra: Option<PathBuf>,
        /// Representation for the o-operator target.
        #[arg(long)]
        rep: Option<PathBuf>,
        /// Only skew-symmetric bilinear forms.
        #[arg(long)]
        skew_only: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Algebra,
    OOperator,
    BilinearForm,
    Representation,
}

enum Outcome {
    Pass(Value),
    Fail(Value),
}

fn from_report<S: Scalar>(r: &Report<S>) -> Outcome {
    let v = report_to_value(r);
    if r.passed() {
        Outcome::Pass(v)
    } else {
        Outcome::Fail(v)
    }
}

fn read_document(path: &Path) -> Result<Value> {
    parse(&std::fs::read_to_string(path)?)
}

fn common_field(docs: &[Value]) -> Result<FieldKind> {
    let mut field = None;
    for d in docs {
        let f = document_field(d)?;
        match field {
            None => field = Some(f),
            Some(g) if g != f => return Err(Error::FieldMismatch { expected: g, found: f }),
            _ => {}
        }
    }
    field.ok_or_else(|| Error::Parse("no input documents".into()))
}

fn parse_field(s: &str) -> Result<FieldKind> {
    if s == "rational" {
        return Ok(FieldKind::Rational);
    }
    s.parse::<u32>()
        .map(FieldKind::Prime)
        .map_err(|_| Error::Parse(format!("field must be \"rational\" or a prime, got \"{s}\"")))
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(Outcome::Pass(v)) => {
            let _ = out.write_all(print(&v).as_bytes());
            0
        }
        Ok(Outcome::Fail(v)) => {
            let _ = err.write_all(print(&v).as_bytes());
            1
        }
        Err(e) => {
            let _ = err.write_all(print(&json!({ "error": e.to_string() })).as_bytes());
            if e.is_input_error() {
                2
            } else {
                1
            }
        }
    }
}

fn input_paths(cmd: &Command) -> Vec<&Path> {
    use Command::*;
    let v: Vec<&PathBuf> = match cmd {
        Check { algebra } | Lie { algebra } | Rigidity { algebra, .. } => vec![algebra],
        RepCheck { algebra, rep }
        | Semidirect { algebra, rep }
        | Special { algebra, rep }
        | Cohomology { algebra, rep }
        | Classify { algebra, rep } => vec![algebra, rep],
        Dual { rep } => vec![rep],
        DendCheck { dendriform } | Assoc { dendriform } => vec![dendriform],
        OCheck { algebra, rep, operator } | OInduce { algebra, rep, operator } | OCompat { algebra, rep, operator } => {
            vec![algebra, rep, operator]
        }
        FromForm { algebra, form, .. } => vec![algebra, form],
        DeformCheck { deformation } | Infinitesimal { deformation } | Trivialize { deformation, .. } => {
            vec![deformation]
        }
        ApplyIso { deformation, isomorphism } => vec![deformation, isomorphism],
        Extend { algebra, rep, theta } => vec![algebra, rep, theta],
        Extract { extension, .. } => vec![extension],
        Iso { first, second } => vec![first, second],
        Search { algebra, rep, .. } => algebra.iter().chain(rep.iter()).collect(),
    };
    v.into_iter().map(PathBuf::as_path).collect()
}

fn execute(cmd: &Command) -> Result<Outcome> {
    let docs = input_paths(cmd).into_iter().map(read_document).collect::<Result<Vec<_>>>()?;
    let field = match cmd {
        Command::Search { field, .. } => {
            let f = parse_field(field)?;
            if !docs.is_empty() {
                let g = common_field(&docs)?;
                if g != f {
                    return Err(Error::FieldMismatch { expected: f, found: g });
                }
            }
            f
        }
        _ => common_field(&docs)?,
    };
    match field {
        FieldKind::Rational => execute_in::<Rational>(cmd, &docs),
        FieldKind::Prime(2) => execute_in::<Fp<2>>(cmd, &docs),
        FieldKind::Prime(3) => execute_in::<Fp<3>>(cmd, &docs),
        FieldKind::Prime(5) => execute_in::<Fp<5>>(cmd, &docs),
        FieldKind::Prime(7) => execute_in::<Fp<7>>(cmd, &docs),
        FieldKind::Prime(p) => Err(Error::Parse(format!("unsupported prime {p}; use 2, 3, 5 or 7"))),
    }
}

fn execute_in<S: Scalar>(cmd: &Command, docs: &[Value]) -> Result<Outcome> {
    use Command::*;
    let alg = |i: usize| from_document::<AntiPreLieAlgebra<S>>(&docs[i]);
    let rep = |i: usize| from_document::<Representation<S>>(&docs[i]);
    let operator = |i: usize| from_document::<OOperatorDoc<S>>(&docs[i]).map(|d| d.0);
    let deformation = |i: usize| from_document::<TruncatedDeformation<S>>(&docs[i]);
    let extension = |i: usize| from_document::<ExtensionDoc<S>>(&docs[i])?.resolve();
    let dendriform = |i: usize| from_document::<AntiLDendriform<S>>(&docs[i]);

    Ok(match cmd {
        Check { .. } => from_report(&check_anti_pre_lie(&from_document::<MultTable<S>>(&docs[0])?)),
        Lie { .. } => {
            let lie = sub_adjacent_lie(&alg(0)?)?;
            let report = check_lie(&lie);
            if report.passed() {
                Outcome::Pass(lie_to_value(&lie))
            } else {
                Outcome::Fail(report_to_value(&report))
            }
        }
        RepCheck { .. } => from_report(&check_representation(&alg(0)?, &rep(1)?)?),
        Semidirect { .. } => Outcome::Pass(to_document(&semidirect_product(&alg(0)?, &rep(1)?)?)),
        Dual { .. } => Outcome::Pass(to_document(&dual_representation(&rep(0)?))),
        Special { .. } => {
            let c = special_condition_report(&alg(0)?, &rep(1)?)?;
            let agree = c.iter().all(|&b| b == c[0]);
            let v = json!({ "conditions": c, "agree": agree });
            if agree {
                Outcome::Pass(v)
            } else {
                Outcome::Fail(v)
            }
        }
        Cohomology { .. } => Outcome::Pass(cohomology_to_value(&cohomology_spaces(&alg(0)?, &rep(1)?)?)),
        DendCheck { .. } => from_report(&check_anti_l_dendriform(&dendriform(0)?)),
        Assoc { .. } => Outcome::Pass(to_document(&associated_anti_pre_lie(&dendriform(0)?)?)),
        OCheck { .. } => from_report(&check_o_operator(&alg(0)?, &rep(1)?, &operator(2)?)?),
        OInduce { .. } => Outcome::Pass(to_document(&induced_dendriform(&alg(0)?, &rep(1)?, &operator(2)?)?)),
        OCompat { .. } => Outcome::Pass(to_document(&compatible_from_invertible_o(&alg(0)?, &rep(1)?, &operator(2)?)?)),
        FromForm { strict_skew, .. } => {
            let a = alg(0)?;
            let form = InvariantBilinearForm::new(&a, from_document::<BilinearFormDoc<S>>(&docs[1])?.0, *strict_skew)?;
            Outcome::Pass(to_document(&dendriform_from_bilinear_form(&a, &form)?))
        }
        DeformCheck { .. } => from_report(&check_deformation(&deformation(0)?)),
        Infinitesimal { .. } => Outcome::Pass(to_document(&infinitesimal(&deformation(0)?)?)),
        ApplyIso { .. } => {
            let iso = from_document::<TruncatedIsomorphism<S>>(&docs[1])?;
            Outcome::Pass(to_document(&apply_isomorphism(&deformation(0)?, &iso)?))
        }
        Trivialize { n, .. } => match trivialize_step(&deformation(0)?, *n)? {
            Some((phi, def)) => Outcome::Pass(json!({ "phi": matrix_to_value(&phi), "deformation": to_document(&def) })),
            None => Outcome::Fail(json!({ "order": n, "coboundary": false })),
        },
        Rigidity { order, samples, seed, .. } => {
            let a = alg(0)?;
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut defs = Vec::new();
            for _ in 0..*samples {
                if let Some(d) = sample_deformation(&a, *order, 2, &mut rng)? {
                    defs.push(d);
                }
            }
            let cert = rigidity_certificate(&a, &defs, *order)?;
            let v = json!({
                "H2": cert.h2_dim,
                "rigid": cert.rigid(),
                "order": cert.order,
                "samples": cert.samples.iter().map(|s| json!({
                    "trivialized": s.trivialized,
                    "phis": s.phis.iter().map(matrix_to_value).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            });
            if cert.rigid() && cert.passed() {
                Outcome::Pass(v)
            } else {
                Outcome::Fail(v)
            }
        }
        Extend { .. } => {
            let theta = from_document::<Cochain2<S>>(&docs[2])?;
            let ext = build_extension(&alg(0)?, &rep(1)?, &theta)?;
            Outcome::Pass(to_document(&ExtensionDoc::from_extension(&ext)))
        }
        Extract { section, .. } => {
            let ext = extension(0)?;
            let s = match section {
                Some(path) => {
                    let v = read_document(path)?;
                    matrix_from_value_any::<S>(v.get("matrix").unwrap_or(&v))?
                }
                None => ext.canonical_section(),
            };
            let e = extract_cocycle(&ext, &s)?;
            Outcome::Pass(json!({ "theta": to_document(&e.theta), "rep": to_document(&e.rep) }))
        }
        Iso { .. } => match are_isomorphic(&extension(0)?, &extension(1)?)? {
            Some(zeta) => Outcome::Pass(json!({ "isomorphic": true, "zeta": matrix_to_value(&zeta) })),
            None => Outcome::Fail(json!({ "isomorphic": false })),
        },
        Classify { .. } => {
            let c = classify_extensions(&alg(0)?, &rep(1)?)?;
            Outcome::Pass(json!({
                "H2": c.classes.len(),
                "trivial": to_document(&ExtensionDoc::from_extension(&c.trivial)),
                "classes": c.classes.iter().map(|k| json!({
                    "representative": to_document(&k.representative),
                    "extension": to_document(&ExtensionDoc::from_extension(&k.extension)),
                })).collect::<Vec<_>>(),
            }))
        }
        Search { target, dim, bound, random, seed, max_space, skew_only, field, .. } => {
            let mut spec = match (bound, parse_field(field)?) {
                (Some(b), _) => SearchSpec::bounded(*b),
                (None, FieldKind::Prime(p)) => SearchSpec {
                    entries: (0..p as i64).map(S::from_i64).collect(),
                    mode: crate::search::SearchMode::Exhaustive,
                    max_space: DEFAULT_MAX_SPACE,
                },
                (None, FieldKind::Rational) => SearchSpec::bounded(1),
            };
            if let Some(samples) = random {
                spec = spec.random(*samples, *seed);
            }
            if let Some(m) = max_space {
                spec = spec.with_max_space(*m);
            }
            let need_alg = || -> Result<AntiPreLieAlgebra<S>> {
                if docs.is_empty() {
                    return Err(Error::Parse("this target needs --algebra".into()));
                }
                alg(0)
            };
            let results: Vec<Value> = match target {
                Target::Algebra => search_algebras::<S>(*dim, &spec)?.iter().map(to_document).collect(),
                Target::OOperator => {
                    if docs.len() < 2 {
                        return Err(Error::Parse("o-operator search needs --algebra and --rep".into()));
                    }
                    let (a, r) = (need_alg()?, rep(1)?);
                    if r.dim_v() != *dim {
                        return Err(Error::Dimension(format!("--dim {dim} but the representation has dimension {}", r.dim_v())));
                    }
                    search_o_operators(&a, &r, &spec)?.into_iter().map(|t| to_document(&OOperatorDoc(t))).collect()
                }
                Target::BilinearForm => {
                    let a = need_alg()?;
                    check_dim(&a, *dim)?;
                    search_bilinear_forms(&a, &spec, *skew_only)?
                        .into_iter()
                        .map(|f| to_document(&BilinearFormDoc(f.matrix().clone())))
                        .collect()
                }
                Target::Representation => {
                    let a = need_alg()?;
                    search_representations(&a, *dim, &spec)?.iter().map(to_document).collect()
                }
            };
            Outcome::Pass(json!({ "count": results.len(), "results": results }))
        }
    })
}

fn check_dim<S: Scalar>(alg: &AntiPreLieAlgebra<S>, dim: usize) -> Result<()> {
    if alg.dim() != dim {
        return Err(Error::Dimension(format!("--dim {dim} but the algebra has dimension {}", alg.dim())));
    }
    Ok(())
}
