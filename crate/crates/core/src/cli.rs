//! The `hopf-galois` command line.
//!
//! Exit codes: 0 when a verdict was computed (including "not Galois"), 1 when a
//! requested verification failed, 2 for usage, parse and i/o errors.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::crossed::{
    check_product_equivalence, fuzz_product_equivalence, CrossedSystem, EquivalenceReport,
};
use crate::error::{Error, ErrorClass, Result};
use crate::exactlin::Field;
use crate::examples::{builtin, fuzz_base, Builtin, BUILTIN_IDS};
use crate::galois::{analyze_galois, forward_certificate, verify_yd_equivalence};
use crate::hopfstruct::{check_algebra, check_comodule_algebra, check_hopf, ComoduleAlgebra};
use crate::io::{export_builtin, to_json, Loaded, Target};
use crate::report::CheckReport;
use crate::ydcat::{BraidingMode, Category};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Human,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BraidingArg {
    /// The Yetter-Drinfeld braiding.
    Yd,
    /// The plain flip on the same objects.
    Swap,
}

#[derive(Debug, Parser)]
#[command(
    name = "hopf-galois",
    version,
    about = "Exact checks for crossed products and Hopf-Galois extensions of braided Hopf algebras"
)]
pub struct Cli {
    /// `rational` or `fp:<prime>`. Files carry their own field; a conflicting value is an error.
    #[arg(long, global = true, env = "HOPF_GALOIS_FIELD")]
    pub field: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = ReportFormat::Human)]
    pub report: ReportFormat,
    #[arg(long, global = true, value_enum, default_value_t = BraidingArg::Yd)]
    pub braiding: BraidingArg,
    /// Print every check, not only failures.
    #[arg(short, long, global = true)]
    pub verbose: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the axiom battery for a named entry of a structure-constant file.
    Check {
        path: PathBuf,
        #[arg(long)]
        name: String,
    },
    /// Decide whether a comodule algebra or crossed product is Galois.
    Galois {
        path: Option<PathBuf>,
        #[arg(long, conflicts_with = "path")]
        builtin: Option<String>,
        #[arg(long)]
        name: Option<String>,
    },
    /// Build the Galois data of a crossed product and extract the action and cocycle back.
    Roundtrip {
        path: Option<PathBuf>,
        #[arg(long, conflicts_with = "path")]
        builtin: Option<String>,
        #[arg(long)]
        name: Option<String>,
    },
    /// Write a built-in as a structure-constant file.
    Export { builtin: String, out: PathBuf },
    /// Perturb the smash product of kC2 with itself and compare both sides of the
    /// crossed-product equivalence.
    Fuzz {
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        cases: usize,
    },
    /// List built-in ids.
    List,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Session {
    field: Option<Field>,
    mode: BraidingMode,
    format: ReportFormat,
    verbose: bool,
}

enum Input {
    Builtin(Builtin),
    File(Loaded, Target),
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stderr: text,
                    ..Outcome::default()
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    ..Outcome::default()
                }
            };
        }
    };
    let format = cli.report;
    match execute(cli) {
        Ok(o) => o,
        Err(e) => error_outcome(&e, format),
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e.class() {
        ErrorClass::Input => 2,
        ErrorClass::Verification | ErrorClass::Math => 1,
    }
}

fn error_outcome(e: &Error, format: ReportFormat) -> Outcome {
    let code = exit_code(e);
    match format {
        ReportFormat::Human => Outcome {
            code,
            stderr: format!("error: {e}\n"),
            ..Outcome::default()
        },
        ReportFormat::Json => Outcome {
            code,
            stdout: json!({ "error": e.to_string() }).to_string() + "\n",
            ..Outcome::default()
        },
    }
}

fn execute(cli: Cli) -> Result<Outcome> {
    let field = cli.field.as_deref().map(str::parse::<Field>).transpose()?;
    let s = Session {
        field,
        mode: match cli.braiding {
            BraidingArg::Yd => BraidingMode::YetterDrinfeld,
            BraidingArg::Swap => BraidingMode::Swap,
        },
        format: cli.report,
        verbose: cli.verbose,
    };
    match cli.command {
        Command::Check { path, name } => {
            let loaded = s.load(&path)?;
            let target = loaded.target(&name)?;
            s.check(&loaded.cat, &name, &target)
        }
        Command::Galois {
            path,
            builtin,
            name,
        } => {
            let input = s.input(path, builtin, name.as_deref())?;
            s.galois(input)
        }
        Command::Roundtrip {
            path,
            builtin,
            name,
        } => {
            let input = s.input(path, builtin, name.as_deref())?;
            s.roundtrip(input)
        }
        Command::Export { builtin: id, out } => {
            let b = builtin(&id, s.builtin_field(), s.mode)?;
            let text = to_json(&export_builtin(&b));
            std::fs::write(&out, text + "\n")
                .map_err(|e| Error::Io(format!("{}: {e}", out.display())))?;
            Ok(s.emit(
                0,
                json!({ "command": "export", "builtin": id, "path": out.display().to_string() }),
                format!("wrote {} to {}\n", id, out.display()),
            ))
        }
        Command::Fuzz { seed, cases } => s.fuzz(seed, cases),
        Command::List => Ok(s.emit(
            0,
            json!({ "command": "list", "builtins": BUILTIN_IDS }),
            BUILTIN_IDS.iter().map(|id| format!("{id}\n")).collect(),
        )),
    }
}

/// The axiom battery matching the kind of `target`.
pub fn battery(cat: &Category, target: &Target) -> Result<CheckReport> {
    Ok(match target {
        Target::Object(o) => cat.check_object(o)?,
        Target::Algebra(a) => check_algebra(cat, a)?,
        Target::Hopf(h) => check_hopf(cat, h)?,
        Target::ComoduleAlgebra(a) => check_comodule_algebra(cat, a)?,
        Target::Crossed(sys) => crossed_report(&check_product_equivalence(
            cat, &sys.b, &sys.h, &sys.alpha, &sys.sigma,
        )?),
    })
}

/// Flattens both sides of the crossed-product equivalence into one report.
pub fn crossed_report(eq: &EquivalenceReport) -> CheckReport {
    let mut r = CheckReport::new("crossed product axioms");
    r.extend("product.", eq.product.clone());
    r.extend("", eq.weak_action.clone());
    r.extend("", eq.cocycle.clone());
    r.extend("", eq.twisted_module.clone());
    r.check_flag(
        "equivalence",
        eq.agrees(),
        Some(format!(
            "product axioms {} / (WA, 2-COC, TM) {}",
            eq.lhs, eq.rhs
        )),
    );
    r
}

impl Session {
    fn builtin_field(&self) -> Field {
        self.field.unwrap_or(Field::Rational)
    }

    fn load(&self, path: &std::path::Path) -> Result<Loaded> {
        let loaded = Loaded::from_path(path, self.mode)?;
        if let Some(f) = self.field {
            if f != loaded.field {
                return Err(Error::Parse {
                    location: "field".into(),
                    message: format!("file is over {} but {} was requested", loaded.field, f),
                });
            }
        }
        Ok(loaded)
    }

    fn input(
        &self,
        path: Option<PathBuf>,
        id: Option<String>,
        name: Option<&str>,
    ) -> Result<Input> {
        match (path, id) {
            (Some(path), None) => {
                let loaded = self.load(&path)?;
                let name = match name {
                    Some(n) => n.to_string(),
                    None => loaded.default_system()?,
                };
                let target = loaded.target(&name)?;
                Ok(Input::File(loaded, target))
            }
            (None, Some(id)) => Ok(Input::Builtin(builtin(
                &id,
                self.builtin_field(),
                self.mode,
            )?)),
            _ => Err(Error::Parse {
                location: "arguments".into(),
                message: "give a file path or --builtin".into(),
            }),
        }
    }

    fn emit(&self, code: i32, value: Value, human: String) -> Outcome {
        let stdout = match self.format {
            ReportFormat::Json => serde_json::to_string_pretty(&value).expect("json") + "\n",
            ReportFormat::Human => human,
        };
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn render(&self, r: &CheckReport) -> String {
        if self.verbose || !r.passed() {
            r.to_string()
        } else {
            format!("{}: pass ({} checks)\n", r.subject, r.items.len())
        }
    }

    fn report_outcome(&self, command: &str, target: &str, kind: &str, r: &CheckReport) -> Outcome {
        let passed = r.passed();
        self.emit(
            if passed { 0 } else { 1 },
            json!({ "command": command, "target": target, "kind": kind, "passed": passed, "report": r }),
            self.render(r),
        )
    }

    fn check(&self, cat: &Category, name: &str, target: &Target) -> Result<Outcome> {
        let report = battery(cat, target)?;
        Ok(self.report_outcome("check", name, target.kind(), &report))
    }

    fn galois(&self, input: Input) -> Result<Outcome> {
        match as_system(input)? {
            System::Crossed(cat, sys) => self.galois_crossed(&cat, &sys),
            System::Comodule(cat, a) => self.galois_comodule(&cat, &a),
        }
    }

    /// Refuses systems whose product is not an algebra, printing the axiom report.
    fn refuse_invalid(
        &self,
        cat: &Category,
        sys: &CrossedSystem,
        command: &str,
    ) -> Result<Option<Outcome>> {
        let eq = check_product_equivalence(cat, &sys.b, &sys.h, &sys.alpha, &sys.sigma)?;
        if eq.lhs && eq.rhs {
            return Ok(None);
        }
        let r = crossed_report(&eq);
        let mut out = self.report_outcome(command, "crossed", "crossed", &r);
        out.code = 1;
        out.stderr = "error: the crossed product axioms fail; the pipeline was not run\n".into();
        Ok(Some(out))
    }

    fn galois_crossed(&self, cat: &Category, sys: &CrossedSystem) -> Result<Outcome> {
        if let Some(out) = self.refuse_invalid(cat, sys, "galois")? {
            return Ok(out);
        }
        let cert = forward_certificate(cat, sys)?;
        let passed = cert.report.passed();
        let summary = GaloisOut {
            galois: true,
            dim_a: cert.a.dim(),
            dim_b: cert.p.cols(),
            dim_tensor_over_b: cert.q.rows(),
            can: [cert.can.rows(), cert.can.cols()],
        };
        let human = format!("{}{}", summary.human(), self.render(&cert.report));
        Ok(self.emit(
            if passed { 0 } else { 1 },
            json!({ "command": "galois", "kind": "crossed", "summary": summary, "passed": passed, "report": cert.report }),
            human,
        ))
    }

    fn galois_comodule(&self, cat: &Category, a: &ComoduleAlgebra) -> Result<Outcome> {
        let com = check_comodule_algebra(cat, a)?;
        if !com.passed() {
            return Ok(self.report_outcome("galois", "comodule algebra", "comodule_algebra", &com));
        }
        let g = analyze_galois(cat, a)?;
        let summary = GaloisOut {
            galois: g.is_galois(),
            dim_a: a.dim(),
            dim_b: g.coinvariants.p.cols(),
            dim_tensor_over_b: g.q.rows(),
            can: [g.can.rows(), g.can.cols()],
        };
        Ok(self.emit(
            0,
            json!({ "command": "galois", "kind": "comodule_algebra", "summary": summary, "passed": true }),
            summary.human(),
        ))
    }

    fn roundtrip(&self, input: Input) -> Result<Outcome> {
        let (cat, sys) = match as_system(input)? {
            System::Crossed(cat, sys) => (cat, sys),
            System::Comodule(..) => {
                return Err(Error::Parse {
                    location: "target".into(),
                    message: "roundtrip needs a crossed system".into(),
                })
            }
        };
        if let Some(out) = self.refuse_invalid(&cat, &sys, "roundtrip")? {
            return Ok(out);
        }
        let out = verify_yd_equivalence(&cat, &sys)?;
        let mut r = out.report.clone();
        r.subject = "roundtrip".into();
        let mut detail = CheckReport::new("extraction");
        detail.extend("forward.", out.forward.report.clone());
        detail.extend("backward.", out.backward.report.clone());
        let human = if self.verbose {
            format!("{}{}", self.render(&r), detail)
        } else {
            self.render(&r)
        };
        let passed = r.passed();
        Ok(self.emit(
            if passed { 0 } else { 1 },
            json!({ "command": "roundtrip", "passed": passed, "report": r, "detail": detail }),
            human,
        ))
    }

    fn fuzz(&self, seed: u64, cases: usize) -> Result<Outcome> {
        let field = self.field.unwrap_or(Field::Prime(5));
        let (cat, b, h, alpha, sigma) = fuzz_base(field)?;
        let min_each = 5.min(cases);
        let summary = fuzz_product_equivalence(
            &cat,
            &b,
            &h,
            &alpha,
            &sigma,
            seed,
            cases,
            min_each,
            cases.max(1) * 10,
        )?;
        let ok = summary.disagreements() == 0;
        let human = format!(
            "seed {} over {}: {} cases, {} with the product an algebra, {} without, {} disagreements\n",
            seed,
            field,
            summary.cases.len(),
            summary.holding(),
            summary.failing(),
            summary.disagreements()
        );
        Ok(self.emit(
            if ok { 0 } else { 1 },
            json!({
                "command": "fuzz",
                "field": field.to_string(),
                "seed": seed,
                "cases": summary.cases.len(),
                "holding": summary.holding(),
                "failing": summary.failing(),
                "disagreements": summary.disagreements(),
            }),
            human,
        ))
    }
}

#[derive(Debug, Serialize)]
struct GaloisOut {
    galois: bool,
    dim_a: usize,
    dim_b: usize,
    dim_tensor_over_b: usize,
    can: [usize; 2],
}

impl GaloisOut {
    fn human(&self) -> String {
        format!(
            "galois: {}\ndim A = {}, dim B = {}, dim A ⊗_B A = {}, can is {}x{}\n",
            self.galois, self.dim_a, self.dim_b, self.dim_tensor_over_b, self.can[0], self.can[1]
        )
    }
}

enum System {
    Crossed(Category, CrossedSystem),
    Comodule(Category, ComoduleAlgebra),
}

fn as_system(input: Input) -> Result<System> {
    match input {
        Input::Builtin(Builtin::Crossed { cat, sys }) => Ok(System::Crossed(cat, sys)),
        Input::Builtin(Builtin::Comodule { cat, a }) => Ok(System::Comodule(cat, a)),
        Input::Builtin(Builtin::Hopf { .. }) => Err(Error::Parse {
            location: "builtin".into(),
            message: "expected a crossed system or comodule algebra".into(),
        }),
        Input::File(l, Target::Crossed(sys)) => Ok(System::Crossed(l.cat, sys)),
        Input::File(l, Target::ComoduleAlgebra(a)) => Ok(System::Comodule(l.cat, a)),
        Input::File(_, t) => Err(Error::Parse {
            location: "target".into(),
            message: format!(
                "expected a crossed system or comodule algebra, found {}",
                t.kind()
            ),
        }),
    }
}
